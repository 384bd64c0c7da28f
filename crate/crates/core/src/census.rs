//! Counting invertible consta-g-circulant matrices, the Table 1 census,
//! exhaustive enumeration oracles and the weight-constrained searches.

use std::collections::HashSet;
use std::thread;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::circulant::CirculantSpec;
use crate::error::{Error, Result};
use crate::gf::{gcd, registry_field, Elem, Field};
use crate::poly::{quotient_mul_slices, QuotientElement, QuotientRing, UnitsCount};

/// Largest number of `(g, h)` pairs the exhaustive enumeration will visit.
pub const ENUMERATION_LIMIT: u128 = 1 << 24;

/// Largest `q^{2m}` for the brute-force unit count.
pub const UNIT_SEARCH_LIMIT: u128 = 1 << 26;

fn lambda_order(field: &Field, lambda: Elem) -> Result<u64> {
    if lambda.is_zero() {
        return Err(Error::ZeroLambda);
    }
    field.mult_order(lambda)
}

/// `(⌊(m−1)/r⌋ + 1)·q^m` with `r = ord(λ)`.
pub fn upper_bound(field: &Field, m: usize, lambda: Elem) -> Result<u128> {
    let r = lambda_order(field, lambda)?;
    let classes = (m as u64 - 1) / r + 1;
    (field.order() as u128)
        .checked_pow(m as u32)
        .and_then(|qm| qm.checked_mul(classes as u128))
        .ok_or(Error::Overflow("upper bound"))
}

/// Shifts `g = 1 + rk ≤ m` with `gcd(g, m) = 1`.
pub fn admissible_shifts(field: &Field, m: usize, lambda: Elem) -> Result<Vec<usize>> {
    let r = lambda_order(field, lambda)? as usize;
    Ok((0..(m - 1) / r + 1).map(|k| 1 + r * k).filter(|&g| gcd(g as u64, m as u64) == 1).collect())
}

/// `N = #{k : 0 ≤ k < ⌊(m−1)/r⌋+1, gcd(1+rk, m) = 1}`
pub fn count_n(field: &Field, m: usize, lambda: Elem) -> Result<u64> {
    Ok(admissible_shifts(field, m, lambda)?.len() as u64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaCount {
    pub n: u64,
    pub units: UnitsCountJson,
    /// `N · ∏ (q^{d_i} − 1)^{e_i}`
    pub factor_product_total: u128,
    /// `N · |units|`
    pub local_ring_total: u128,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct UnitsCountJson {
    pub factor_product: u128,
    pub exact: u128,
}

impl From<UnitsCount> for UnitsCountJson {
    fn from(u: UnitsCount) -> Self {
        UnitsCountJson { factor_product: u.factor_product, exact: u.exact }
    }
}

/// `N` times both unit counts of F_q[x]/(x^m − λ).
pub fn invertible_count_formula(field: &Field, m: usize, lambda: Elem) -> Result<FormulaCount> {
    let n = count_n(field, m, lambda)?;
    let units = QuotientRing::new(field, m, lambda)?.units_count()?;
    let mul = |u: u128| u.checked_mul(n as u128).ok_or(Error::Overflow("invertible count"));
    Ok(FormulaCount {
        n,
        units: units.into(),
        factor_product_total: mul(units.factor_product)?,
        local_ring_total: mul(units.exact)?,
    })
}

/// Number of residues `a` with some `b` satisfying `a·b = 1`, by direct
/// search over all pairs.
pub fn exhaustive_unit_count(ring: &QuotientRing) -> Result<u64> {
    let size = ring.size().ok_or(Error::Overflow("q^m"))?;
    let work = (size as u128) * (size as u128);
    if work > UNIT_SEARCH_LIMIT {
        return Err(Error::SearchSpaceTooLarge { size: work, limit: UNIT_SEARCH_LIMIT });
    }
    let f = ring.field();
    let all: Vec<Vec<Elem>> = (0..size).map(|c| ring.from_index(c).coeffs().to_vec()).collect();
    let one = ring.one().coeffs().to_vec();
    Ok(all
        .iter()
        .filter(|a| all.iter().any(|b| quotient_mul_slices(f, ring.lambda(), a, b) == one))
        .count() as u64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Enumeration {
    pub m: usize,
    pub q: u32,
    pub lambda: u32,
    /// Every `g ∈ 1..=m` with `g ≡ 1 (mod ord λ)`.
    pub shifts_scanned: Vec<usize>,
    /// Shifts that produced at least one invertible matrix.
    pub shifts_with_invertible: Vec<usize>,
    /// `(g, h)` pairs whose built matrix has nonzero determinant.
    pub pair_count: u64,
    pub distinct_matrix_count: u64,
    /// Brute-force unit count of the ring, when small enough.
    pub exhaustive_unit_count: Option<u64>,
    /// The first few invertible pairs as `(g, h codes)`.
    pub samples: Vec<(usize, Vec<u32>)>,
}

const SAMPLE_COUNT: usize = 3;

/// Builds every well-defined consta-g-circulant matrix over F_q of order
/// `m` and counts the nonsingular ones, both as `(g, h)` pairs and as
/// distinct matrices. Shifts with `gcd(g, m) > 1` are scanned too.
pub fn enumerate_invertible_exhaustive(field: &Field, m: usize, lambda: Elem, workers: usize) -> Result<Enumeration> {
    let ring = QuotientRing::new(field, m, lambda)?;
    let r = lambda_order(field, lambda)? as usize;
    let shifts: Vec<usize> = (1..=m).filter(|g| g % r == 1 % r).collect();
    let size = ring.size().ok_or(Error::Overflow("q^m"))?;
    let work = size as u128 * shifts.len() as u128;
    if work > ENUMERATION_LIMIT {
        return Err(Error::SearchSpaceTooLarge { size: work, limit: ENUMERATION_LIMIT });
    }
    let q = field.order() as u64;
    let block = size / q;
    let workers = workers.clamp(1, q as usize);
    let scan = |lead: u64| -> Result<(u64, HashSet<Vec<u32>>, Vec<(usize, Vec<u32>)>, Vec<bool>)> {
        let mut count = 0;
        let mut seen = HashSet::new();
        let mut samples = Vec::new();
        let mut hit_shift = vec![false; shifts.len()];
        for code in lead * block..(lead + 1) * block {
            let h = ring.from_index(code);
            for (si, &g) in shifts.iter().enumerate() {
                let a = CirculantSpec::commutative(field, m, g, lambda, h.coeffs().to_vec())?.build()?;
                if !a.determinant()?.is_zero() {
                    count += 1;
                    hit_shift[si] = true;
                    if samples.len() < SAMPLE_COUNT {
                        samples.push((g, h.codes()));
                    }
                    seen.insert(a.entries().iter().map(|e| e.code()).collect());
                }
            }
        }
        Ok((count, seen, samples, hit_shift))
    };
    let parts: Vec<_> = thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let scan = &scan;
                s.spawn(move || (0..q).filter(|l| *l as usize % workers == w).map(|l| (l, scan(l))).collect::<Vec<_>>())
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut parts = parts;
    parts.sort_by_key(|(l, _)| *l);
    let mut pair_count = 0;
    let mut seen = HashSet::new();
    let mut samples = Vec::new();
    let mut hit_shift = vec![false; shifts.len()];
    for (_, part) in parts {
        let (c, s, smp, hs) = part?;
        pair_count += c;
        seen.extend(s);
        samples.extend(smp);
        for (acc, h) in hit_shift.iter_mut().zip(hs) {
            *acc |= h;
        }
    }
    samples.sort();
    samples.truncate(SAMPLE_COUNT);
    let shifts_with_invertible = shifts.iter().zip(&hit_shift).filter(|(_, &h)| h).map(|(&g, _)| g).collect();
    Ok(Enumeration {
        m,
        q: field.order(),
        lambda: lambda.code(),
        shifts_scanned: shifts,
        shifts_with_invertible,
        pair_count,
        distinct_matrix_count: seen.len() as u64,
        exhaustive_unit_count: exhaustive_unit_count(&ring).ok(),
        samples,
    })
}

/// A unit `h` of F_q[x]/(x^m − 1) with its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchHit {
    pub h: QuotientElement,
    pub h_inv: QuotientElement,
}

impl SearchHit {
    pub fn weights(&self) -> (usize, usize) {
        (self.h.weight(), self.h_inv.weight())
    }

    pub fn to_json(&self) -> Value {
        let (w, wi) = self.weights();
        json!({
            "h": self.h.codes(),
            "h_inv": self.h_inv.codes(),
            "weights": [w, wi],
            "h_poly": self.h.to_string(),
            "h_inv_poly": self.h_inv.to_string(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Every candidate in code order.
    Exhaustive,
    /// Uniform draws from a seeded generator; stops at the first hit.
    Random { seed: u64, trials: u64 },
}

impl SearchMode {
    pub fn to_json(&self) -> Value {
        match self {
            SearchMode::Exhaustive => json!({"mode": "exhaustive"}),
            SearchMode::Random { seed, trials } => json!({"mode": "random", "seed": seed, "trials": trials}),
        }
    }
}

fn check_candidate(ring: &QuotientRing, coeffs: Vec<Elem>) -> Option<SearchHit> {
    let h = ring.element(coeffs).ok()?;
    let inv = h.inverse().ok()?;
    (inv.weight() == ring.m()).then_some(SearchHit { h, h_inv: inv })
}

/// Units `h` of F_q[x]/(x^m − 1) with all coefficients nonzero whose
/// inverse also has full weight `m`.
pub fn weight_search(field: &Field, m: usize, mode: SearchMode) -> Result<Vec<SearchHit>> {
    let ring = QuotientRing::new(field, m, Elem::ONE)?;
    let q = field.order() as u64;
    match mode {
        SearchMode::Exhaustive => {
            let k = q - 1;
            let count = k.checked_pow(m as u32).ok_or(Error::Overflow("candidate count"))?;
            if count as u128 > ENUMERATION_LIMIT {
                return Err(Error::SearchSpaceTooLarge { size: count as u128, limit: ENUMERATION_LIMIT });
            }
            // candidates ordered by the code of h: a_0 varies fastest
            Ok((0..count)
                .filter_map(|mut idx| {
                    let coeffs = (0..m)
                        .map(|_| {
                            let c = Elem::from_code((idx % k + 1) as u32);
                            idx /= k;
                            c
                        })
                        .collect();
                    check_candidate(&ring, coeffs)
                })
                .collect())
        }
        SearchMode::Random { seed, trials } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..trials {
                let coeffs = (0..m).map(|_| Elem::from_code(rng.gen_range(1..q) as u32)).collect();
                if let Some(hit) = check_candidate(&ring, coeffs) {
                    return Ok(vec![hit]);
                }
            }
            Ok(Vec::new())
        }
    }
}

/// Weight-3 units of F_q[x]/(x^3 − 1) with weight-3 inverses.
pub fn algorithm1_weight3(field: &Field, mode: SearchMode) -> Result<Vec<SearchHit>> {
    weight_search(field, 3, mode)
}

/// Weight-4 units of F_q[x]/(x^4 − 1) with weight-4 inverses.
pub fn algorithm2_weight4(field: &Field, mode: SearchMode) -> Result<Vec<SearchHit>> {
    weight_search(field, 4, mode)
}

/// One row of the printed census.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrintedRow {
    pub row: usize,
    pub m: usize,
    pub field: &'static str,
    pub lambda: u32,
    pub order: u64,
    pub factorization: &'static str,
    pub n: u64,
    pub units: u128,
    pub total: u128,
}

pub const TABLE1: [PrintedRow; 8] = [
    PrintedRow { row: 1, m: 2, field: "F8", lambda: 1, order: 1, factorization: "(x-1)(x+1)", n: 1, units: 49, total: 49 },
    PrintedRow { row: 2, m: 3, field: "F8", lambda: 1, order: 1, factorization: "(x-1)(x^2+x+1)", n: 2, units: 441, total: 882 },
    PrintedRow { row: 3, m: 2, field: "F9", lambda: 2, order: 2, factorization: "(x^2-2)", n: 1, units: 80, total: 80 },
    PrintedRow { row: 4, m: 4, field: "F8", lambda: 1, order: 1, factorization: "(x-1)^4", n: 2, units: 2401, total: 4802 },
    PrintedRow {
        row: 5,
        m: 4,
        field: "F9",
        lambda: 1,
        order: 1,
        factorization: "(x-1)(x+1)(x-beta)(x-beta^3)",
        n: 2,
        units: 4096,
        total: 8192,
    },
    PrintedRow {
        row: 6,
        m: 3,
        field: "F16",
        lambda: 1,
        order: 1,
        factorization: "(x-1)(x-omega)(x-omega^2)",
        n: 2,
        units: 3375,
        total: 6750,
    },
    PrintedRow {
        row: 7,
        m: 3,
        field: "F25",
        lambda: 1,
        order: 1,
        factorization: "(x-1)(x-alpha)(x-alpha^2)",
        n: 2,
        units: 13824,
        total: 27648,
    },
    PrintedRow {
        row: 8,
        m: 4,
        field: "F25",
        lambda: 3,
        order: 4,
        factorization: "(x-1)(x+1)(x+2)(x+3)",
        n: 1,
        units: 331776,
        total: 331776,
    },
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub row: usize,
    pub m: usize,
    pub q: u32,
    pub field: String,
    pub lambda: u32,
    pub r: u64,
    pub factorization: String,
    pub squarefree: bool,
    pub n: u64,
    pub upper_bound: u128,
    pub factor_product_units: u128,
    pub local_ring_units: u128,
    /// `N × ∏(q^{d_i} − 1)^{e_i}`, the formula as stated.
    pub factor_product_count: u128,
    pub local_ring_count: u128,
    pub formula: String,
    pub printed_factorization: String,
    pub printed_n: u64,
    pub printed_total: u128,
    pub formula_agrees: bool,
    pub local_ring_agrees: bool,
    pub exhaustive_pair_count: Option<u64>,
    pub distinct_matrix_count: Option<u64>,
}

/// Recomputes the census rows (all eight when `rows` is empty). With
/// `exhaustive`, every matrix of the row is also built and counted.
pub fn table1(rows: &[usize], exhaustive: bool, workers: usize) -> Result<Vec<CensusRow>> {
    let mut out = Vec::new();
    for pr in TABLE1.iter().filter(|r| rows.is_empty() || rows.contains(&r.row)) {
        let field = registry_field(pr.field).expect("registry field");
        let lambda = field.element(pr.lambda as u64)?;
        let r = field.mult_order(lambda)?;
        let fac = QuotientRing::new(&field, pr.m, lambda)?.modulus().factor()?;
        let fc = invertible_count_formula(&field, pr.m, lambda)?;
        let (pairs, distinct) = if exhaustive {
            let e = enumerate_invertible_exhaustive(&field, pr.m, lambda, workers)?;
            (Some(e.pair_count), Some(e.distinct_matrix_count))
        } else {
            (None, None)
        };
        out.push(CensusRow {
            row: pr.row,
            m: pr.m,
            q: field.order(),
            field: pr.field.to_string(),
            lambda: pr.lambda,
            r,
            factorization: fac.render(&field),
            squarefree: fac.is_squarefree(),
            n: fc.n,
            upper_bound: upper_bound(&field, pr.m, lambda)?,
            factor_product_units: fc.units.factor_product,
            local_ring_units: fc.units.exact,
            factor_product_count: fc.factor_product_total,
            local_ring_count: fc.local_ring_total,
            formula: format!("{} × {} = {}", fc.n, fc.units.factor_product, fc.factor_product_total),
            printed_factorization: pr.factorization.to_string(),
            printed_n: pr.n,
            printed_total: pr.total,
            formula_agrees: fc.factor_product_total == pr.total,
            local_ring_agrees: fc.local_ring_total == pr.total,
            exhaustive_pair_count: pairs,
            distinct_matrix_count: distinct,
        });
    }
    Ok(out)
}

/// CSV rendering of any flat serializable rows.
pub fn to_csv<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| Error::Parse(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
}

/// Flat record of a search hit for CSV output.
#[derive(Clone, Debug, Serialize)]
pub struct SearchHitRecord {
    pub h: String,
    pub h_inv: String,
    pub weight_h: usize,
    pub weight_inv: usize,
}

impl From<&SearchHit> for SearchHitRecord {
    fn from(hit: &SearchHit) -> Self {
        let (weight_h, weight_inv) = hit.weights();
        SearchHitRecord { h: hit.h.to_text(), h_inv: hit.h_inv.to_text(), weight_h, weight_inv }
    }
}
