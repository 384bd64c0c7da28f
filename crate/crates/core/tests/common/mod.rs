//! Independent oracles shared by the integration tests. None of them go
//! through the code paths they are compared against.
#![allow(dead_code)]

use consta_circulant::{CirculantSpec, Elem, Field, Matrix, Poly, SkewPoly};
use itertools::Itertools;

/// Determinant by cofactor expansion along the first row.
pub fn laplace_det(f: &Field, a: &[Vec<Elem>]) -> Elem {
    let n = a.len();
    match n {
        0 => Elem::ONE,
        1 => a[0][0],
        _ => {
            let mut acc = Elem::ZERO;
            for j in 0..n {
                if a[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Elem>> = a[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, &e)| e).collect())
                    .collect();
                let term = f.mul(a[0][j], laplace_det(f, &minor));
                acc = if j % 2 == 0 { f.add(acc, term) } else { f.sub(acc, term) };
            }
            acc
        }
    }
}

pub fn rows_of(a: &Matrix) -> Vec<Vec<Elem>> {
    (0..a.rows()).map(|i| a.row(i).to_vec()).collect()
}

/// Every square submatrix nonsingular, by cofactor expansion.
pub fn mds_by_cofactors(a: &Matrix) -> bool {
    let f = a.field();
    let rows = rows_of(a);
    let m = a.rows();
    (1..=m).all(|k| {
        (0..m).combinations(k).all(|ri| {
            (0..m).combinations(k).all(|ci| {
                let sub: Vec<Vec<Elem>> = ri.iter().map(|&r| ci.iter().map(|&c| rows[r][c]).collect()).collect();
                !laplace_det(f, &sub).is_zero()
            })
        })
    })
}

pub fn mat_mul(f: &Field, a: &[Vec<Elem>], b: &[Vec<Elem>]) -> Vec<Vec<Elem>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..b[0].len())
                .map(|j| (0..b.len()).fold(Elem::ZERO, |acc, k| f.add(acc, f.mul(a[i][k], b[k][j]))))
                .collect()
        })
        .collect()
}

/// Row `i` is `X^{ig} ∗ h` reduced modulo `X^m − λ` with plain (skew)
/// polynomial arithmetic.
pub fn build_by_division(spec: &CirculantSpec) -> Vec<Vec<Elem>> {
    let f = spec.field();
    let m = spec.m();
    let theta = spec.theta_exp();
    let mut modulus = vec![Elem::ZERO; m + 1];
    modulus[0] = f.neg(spec.lambda());
    modulus[m] = Elem::ONE;
    let modulus = SkewPoly::new(f, theta, modulus).unwrap();
    let h = SkewPoly::new(f, theta, spec.h().to_vec()).unwrap();
    (0..m)
        .map(|i| {
            let shift = SkewPoly::monomial(f, theta, Elem::ONE, i * spec.g()).unwrap();
            let r = shift.mul(&h).unwrap().divmod_right(&modulus).unwrap().1;
            (0..m).map(|j| r.coeff(j)).collect()
        })
        .collect()
}

/// Units of `F_q[x]/(x^m − λ)` counted as residues coprime to the modulus.
pub fn units_by_gcd(f: &Field, m: usize, lambda: Elem) -> u64 {
    let mut modulus = vec![Elem::ZERO; m + 1];
    modulus[0] = f.neg(lambda);
    modulus[m] = Elem::ONE;
    let modulus = Poly::new(f, modulus);
    let one = Poly::one(f);
    (0..m)
        .map(|_| f.elements())
        .multi_cartesian_product()
        .filter(|c| Poly::new(f, c.clone()).gcd(&modulus).unwrap() == one)
        .count() as u64
}

/// Semi-involutory by trying every pair of nonsingular diagonals.
pub fn semi_involutory_brute(a: &Matrix) -> bool {
    let f = a.field();
    let m = a.rows();
    let Ok(inv) = a.inverse() else { return false };
    let inv = rows_of(&inv);
    let rows = rows_of(a);
    let diagonals: Vec<Vec<Elem>> = (0..m).map(|_| f.nonzero_elements()).multi_cartesian_product().collect();
    diagonals.iter().any(|d1| {
        diagonals
            .iter()
            .any(|d2| (0..m).all(|i| (0..m).all(|j| f.mul(f.mul(d1[i], rows[i][j]), d2[j]) == inv[i][j])))
    })
}

/// All `(g, λ)` with `g ≡ 1 (mod ord λ)` for the given `m`.
pub fn well_defined_pairs(f: &Field, m: usize) -> Vec<(usize, Elem)> {
    let mut out = Vec::new();
    for lambda in f.nonzero_elements() {
        let r = f.mult_order(lambda).unwrap() as usize;
        for g in 1..=m {
            if g % r == 1 % r {
                out.push((g, lambda));
            }
        }
    }
    out
}

/// Frobenius exponents `k` for which `x ↦ x^{p^k}` is a valid twist for `m`.
pub fn valid_thetas(f: &Field, m: usize, lambda: Elem) -> Vec<u32> {
    (0..f.degree())
        .filter(|&k| m % f.automorphism_order(k) as usize == 0 && f.frobenius(lambda, k) == lambda)
        .collect()
}
