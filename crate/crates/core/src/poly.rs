//! Dense polynomials over a finite field and the quotient rings
//! F_q[x]/(x^m − λ).

use std::cmp::Ordering;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

/// Polynomial with little-endian coefficients and no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Elem>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.render("x"))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

pub(crate) fn trim(v: &mut Vec<Elem>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<Elem>) -> Poly {
        trim(&mut coeffs);
        Poly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &Field) -> Poly {
        Poly::new(field, Vec::new())
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field, Elem::ONE)
    }

    pub fn constant(field: &Field, c: Elem) -> Poly {
        Poly::new(field, vec![c])
    }

    /// `c·x^k`
    pub fn monomial(field: &Field, c: Elem, k: usize) -> Poly {
        let mut v = vec![Elem::ZERO; k + 1];
        v[k] = c;
        Poly::new(field, v)
    }

    pub fn x(field: &Field) -> Poly {
        Poly::monomial(field, Elem::ONE, 1)
    }

    pub fn from_codes(field: &Field, codes: &[u64]) -> Result<Poly> {
        let coeffs = codes.iter().map(|&c| field.element(c)).collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(field, coeffs))
    }

    /// Parses the comma-separated little-endian text format, e.g. `1,1,2`.
    /// Each entry is an element code or a polynomial in the generator.
    pub fn parse(field: &Field, s: &str) -> Result<Poly> {
        Ok(Poly::new(field, parse_coeff_list(field, s)?))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn codes(&self) -> Vec<u32> {
        self.coeffs.iter().map(|c| c.code()).collect()
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<Elem> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(Elem::ONE)
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    fn same_field(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        Ok(self.add_unchecked(other))
    }

    fn add_unchecked(&self, other: &Poly) -> Poly {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(f, (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn neg(&self) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        Ok(self.add_unchecked(&other.neg()))
    }

    pub fn scale(&self, c: Elem) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let f = &self.field;
        let mut out = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, out)
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            e >>= 1;
        }
        acc
    }

    /// `(quotient, remainder)` with `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.same_field(divisor)?;
        let db = divisor.degree().ok_or(Error::DivisionByZeroPoly)?;
        let f = &self.field;
        let inv_lead = f.inv_nonzero(divisor.coeffs[db]);
        let mut r = self.coeffs.clone();
        if r.len() <= db {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut quot = vec![Elem::ZERO; r.len() - db];
        for k in (db..r.len()).rev() {
            let c = r[k];
            if c.is_zero() {
                continue;
            }
            let t = f.mul(c, inv_lead);
            quot[k - db] = t;
            for (i, &b) in divisor.coeffs.iter().enumerate() {
                r[k - db + i] = f.sub(r[k - db + i], f.mul(t, b));
            }
        }
        r.truncate(db);
        Ok((Poly::new(f, quot), Poly::new(f, r)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Scales to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(c) => self.scale(self.field.inv_nonzero(c)),
        }
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        Ok(self.xgcd(other)?.0)
    }

    /// `(g, u, v)` with `u·self + v·other = g` and `g` monic.
    pub fn xgcd(&self, other: &Poly) -> Result<(Poly, Poly, Poly)> {
        self.same_field(other)?;
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (qt, r) = r0.divmod(&r1)?;
            let s = s0.add_unchecked(&qt.mul_unchecked(&s1).neg());
            let t = t0.add_unchecked(&qt.mul_unchecked(&t1).neg());
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s);
            (t0, t1) = (t1, t);
        }
        match r0.leading() {
            None => Ok((r0, s0, t0)),
            Some(c) => {
                let ci = f.inv_nonzero(c);
                Ok((r0.scale(ci), s0.scale(ci), t0.scale(ci)))
            }
        }
    }

    pub fn eval(&self, x: Elem) -> Elem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Distinct roots in increasing code order.
    pub fn roots(&self) -> Vec<Elem> {
        self.field.elements().filter(|&a| self.eval(a).is_zero()).collect()
    }

    /// `self^e mod modulus`
    pub fn pow_mod(&self, mut e: u64, modulus: &Poly) -> Result<Poly> {
        let mut base = self.rem(modulus)?;
        let mut acc = Poly::one(&self.field).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base).rem(modulus)?;
            }
            base = base.mul_unchecked(&base).rem(modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Ben-Or test: `f` of degree `d` is irreducible iff
    /// `gcd(x^{q^i} − x, f) = 1` for every `1 ≤ i ≤ d/2`.
    pub fn is_irreducible(&self) -> Result<bool> {
        let d = match self.degree() {
            Some(d) if d >= 1 => d,
            _ => return Err(Error::ConstantPolynomial),
        };
        let f = self.monic();
        let x = Poly::x(&self.field);
        let q = self.field.order() as u64;
        let mut xp = x.rem(&f)?;
        for _ in 1..=d / 2 {
            xp = xp.pow_mod(q, &f)?;
            let g = xp.add_unchecked(&x.neg()).gcd(&f)?;
            if g.degree() != Some(0) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Complete factorization into monic irreducibles by trial division
    /// with monic candidates in (degree, code) order.
    pub fn factor(&self) -> Result<Factorization> {
        let scalar = match self.degree() {
            Some(d) if d >= 1 => self.coeffs[d],
            _ => return Err(Error::ConstantPolynomial),
        };
        let f = &self.field;
        let mut rest = self.monic();
        let mut factors = Vec::new();
        let mut d = 1;
        while rest.degree().unwrap_or(0) >= 2 * d {
            for cand in monic_polys(f, d) {
                if rest.degree().unwrap_or(0) < d {
                    break;
                }
                let mut e = 0;
                loop {
                    let (qt, r) = rest.divmod(&cand)?;
                    if !r.is_zero() {
                        break;
                    }
                    rest = qt;
                    e += 1;
                }
                if e > 0 {
                    factors.push((cand, e));
                }
            }
            d += 1;
        }
        if rest.degree().unwrap_or(0) >= 1 {
            match factors.iter_mut().find(|(p, _)| *p == rest) {
                Some((_, e)) => *e += 1,
                None => factors.push((rest, 1)),
            }
        }
        factors.sort_by(|a, b| a.0.canonical_cmp(&b.0));
        Ok(Factorization { scalar, factors })
    }

    /// Integer code `Σ code(c_i)·q^i` (saturating on overflow).
    pub fn code(&self) -> u128 {
        let q = self.field.order() as u128;
        self.coeffs.iter().rev().fold(0u128, |acc, c| acc.saturating_mul(q).saturating_add(c.code() as u128))
    }

    /// Degree first, then code.
    pub fn canonical_cmp(&self, other: &Poly) -> Ordering {
        self.coeffs.len().cmp(&other.coeffs.len()).then_with(|| {
            self.coeffs.iter().rev().cmp(other.coeffs.iter().rev())
        })
    }

    /// Highest power first, coefficients rendered in the field's generator.
    pub fn render(&self, var: &str) -> String {
        render_terms(&self.field, &self.coeffs, var)
    }
}

pub(crate) fn render_terms(field: &Field, coeffs: &[Elem], var: &str) -> String {
    let mut terms = Vec::new();
    for (k, &c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mut cs = field.render(c);
        if cs.contains('+') && k > 0 {
            cs = format!("({cs})");
        }
        let cs = if c == Elem::ONE && k > 0 { String::new() } else { cs };
        terms.push(match k {
            0 => cs,
            1 => format!("{cs}{var}"),
            _ => format!("{cs}{var}^{k}"),
        });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

pub(crate) fn parse_coeff_list(field: &Field, s: &str) -> Result<Vec<Elem>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| field.parse_element(t)).collect()
}

/// Every monic polynomial of degree `d`, in code order.
fn monic_polys(field: &Field, d: usize) -> impl Iterator<Item = Poly> + '_ {
    let q = field.order() as u64;
    let count = q.pow(d as u32);
    (0..count).map(move |mut code| {
        let mut v = Vec::with_capacity(d + 1);
        for _ in 0..d {
            v.push(Elem::from_code((code % q) as u32));
            code /= q;
        }
        v.push(Elem::ONE);
        Poly::new(field, v)
    })
}

/// `scalar · ∏ f_i^{e_i}` with monic irreducible `f_i`, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub scalar: Elem,
    pub factors: Vec<(Poly, u32)>,
}

impl Factorization {
    pub fn expand(&self, field: &Field) -> Poly {
        self.factors
            .iter()
            .fold(Poly::constant(field, self.scalar), |acc, (f, e)| acc.mul_unchecked(&f.pow(*e as u64)))
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// `(deg f_i, e_i)` pairs.
    pub fn degrees(&self) -> Vec<(usize, u32)> {
        self.factors.iter().map(|(f, e)| (f.degree().unwrap_or(0), *e)).collect()
    }

    pub fn render(&self, field: &Field) -> String {
        let mut out = String::new();
        if self.scalar != Elem::ONE {
            out.push_str(&field.render(self.scalar));
        }
        for (f, e) in &self.factors {
            out.push('(');
            out.push_str(&f.render("x"));
            out.push(')');
            if *e > 1 {
                out.push_str(&format!("^{e}"));
            }
        }
        out
    }
}

/// F_q[x]/(x^m − λ).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientRing {
    field: Field,
    m: usize,
    lambda: Elem,
}

impl QuotientRing {
    pub fn new(field: &Field, m: usize, lambda: Elem) -> Result<QuotientRing> {
        if lambda.is_zero() {
            return Err(Error::ZeroLambda);
        }
        if m == 0 {
            return Err(Error::InvalidRing("m must be at least 1".into()));
        }
        field.element(lambda.code() as u64)?;
        Ok(QuotientRing { field: field.clone(), m, lambda })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn lambda(&self) -> Elem {
        self.lambda
    }

    /// `x^m − λ`
    pub fn modulus(&self) -> Poly {
        let mut v = vec![Elem::ZERO; self.m + 1];
        v[0] = self.field.neg(self.lambda);
        v[self.m] = Elem::ONE;
        Poly::new(&self.field, v)
    }

    /// Number of residues, `q^m`, if it fits in a `u64`.
    pub fn size(&self) -> Option<u64> {
        (self.field.order() as u64).checked_pow(self.m as u32)
    }

    /// Residue with the given coefficients (at most `m`, zero-padded).
    pub fn element(&self, mut coeffs: Vec<Elem>) -> Result<QuotientElement> {
        if coeffs.len() > self.m {
            return Err(Error::DimensionMismatch(format!("{} coefficients for m = {}", coeffs.len(), self.m)));
        }
        for c in &coeffs {
            self.field.element(c.code() as u64)?;
        }
        coeffs.resize(self.m, Elem::ZERO);
        Ok(QuotientElement { ring: self.clone(), coeffs })
    }

    pub fn from_codes(&self, codes: &[u64]) -> Result<QuotientElement> {
        let coeffs = codes.iter().map(|&c| self.field.element(c)).collect::<Result<Vec<_>>>()?;
        self.element(coeffs)
    }

    pub fn parse_element(&self, s: &str) -> Result<QuotientElement> {
        self.element(parse_coeff_list(&self.field, s)?)
    }

    /// Reduces any polynomial with `x^m ↦ λ`.
    pub fn reduce(&self, p: &Poly) -> Result<QuotientElement> {
        if p.field() != &self.field {
            return Err(Error::MixedFields);
        }
        let f = &self.field;
        let mut out = vec![Elem::ZERO; self.m];
        let mut lam_pow = Elem::ONE;
        for (block, chunk) in p.coeffs().chunks(self.m).enumerate() {
            if block > 0 {
                lam_pow = f.mul(lam_pow, self.lambda);
            }
            for (t, &c) in chunk.iter().enumerate() {
                out[t] = f.add(out[t], f.mul(lam_pow, c));
            }
        }
        Ok(QuotientElement { ring: self.clone(), coeffs: out })
    }

    pub fn zero(&self) -> QuotientElement {
        QuotientElement { ring: self.clone(), coeffs: vec![Elem::ZERO; self.m] }
    }

    pub fn one(&self) -> QuotientElement {
        self.monomial(Elem::ONE, 0)
    }

    /// `c·x̄^k` reduced.
    pub fn monomial(&self, c: Elem, k: usize) -> QuotientElement {
        let mut out = self.zero();
        let f = &self.field;
        let lam = f.pow(self.lambda, (k / self.m) as u64);
        out.coeffs[k % self.m] = f.mul(c, lam);
        out
    }

    pub fn x(&self) -> QuotientElement {
        self.monomial(Elem::ONE, 1)
    }

    /// Residue with code `Σ code(a_i) q^i`.
    pub fn from_index(&self, mut code: u64) -> QuotientElement {
        let q = self.field.order() as u64;
        let coeffs = (0..self.m)
            .map(|_| {
                let c = Elem::from_code((code % q) as u32);
                code /= q;
                c
            })
            .collect();
        QuotientElement { ring: self.clone(), coeffs }
    }

    /// All `q^m` residues in code order.
    pub fn elements(&self) -> Result<impl Iterator<Item = QuotientElement> + '_> {
        let n = self.size().ok_or(Error::Overflow("q^m"))?;
        Ok((0..n).map(move |c| self.from_index(c)))
    }

    /// Whether `x^m − λ` divides `x^{mg} − λ`, i.e. whether `x̄ ↦ x̄^g`
    /// respects cosets.
    pub fn substitution_well_defined(&self, g: u64) -> bool {
        let r = self.field.mult_order(self.lambda).expect("lambda is nonzero");
        g % r == 1 % r
    }

    pub fn units_count(&self) -> Result<UnitsCount> {
        units_count(self)
    }
}

pub(crate) fn quotient_mul_slices(f: &Field, lambda: Elem, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let m = a.len();
    let mut out = vec![Elem::ZERO; m];
    for (i, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let xl = f.mul(x, lambda);
        for (j, &y) in b.iter().enumerate() {
            let k = i + j;
            if k < m {
                out[k] = f.add(out[k], f.mul(x, y));
            } else {
                out[k - m] = f.add(out[k - m], f.mul(xl, y));
            }
        }
    }
    out
}

/// Coefficients of `Σ a_i x̄^{ig}` with `x̄^m = λ`.
pub(crate) fn substitute_slices(f: &Field, lambda: Elem, a: &[Elem], g: u64) -> Vec<Elem> {
    let m = a.len() as u64;
    let mut out = vec![Elem::ZERO; a.len()];
    for (i, &c) in a.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let e = i as u64 * g;
        let t = (e % m) as usize;
        out[t] = f.add(out[t], f.mul(c, f.pow(lambda, e / m)));
    }
    out
}

/// A residue in F_q[x]/(x^m − λ), stored as its degree-`< m` representative.
#[derive(Clone, PartialEq, Eq)]
pub struct QuotientElement {
    ring: QuotientRing,
    coeffs: Vec<Elem>,
}

impl fmt::Debug for QuotientElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.codes().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))
    }
}

impl fmt::Display for QuotientElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(self.ring.field(), &self.coeffs, "x"))
    }
}

/// Result of `x̄ ↦ x̄^g` on a representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution<T> {
    pub value: T,
    /// `g ≡ 1 (mod ord λ)`; otherwise the map depends on the representative.
    pub well_defined: bool,
}

impl QuotientElement {
    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn codes(&self) -> Vec<u32> {
        self.coeffs.iter().map(|c| c.code()).collect()
    }

    /// `Σ code(a_i) q^i`
    pub fn index(&self) -> u64 {
        let q = self.ring.field.order() as u64;
        self.coeffs.iter().rev().fold(0, |acc, c| acc * q + c.code() as u64)
    }

    pub fn lift(&self) -> Poly {
        Poly::new(&self.ring.field, self.coeffs.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    fn same_ring(&self, other: &QuotientElement) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::MixedRings)
        }
    }

    pub fn add(&self, other: &QuotientElement) -> Result<QuotientElement> {
        self.same_ring(other)?;
        let f = &self.ring.field;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(QuotientElement { ring: self.ring.clone(), coeffs })
    }

    pub fn sub(&self, other: &QuotientElement) -> Result<QuotientElement> {
        self.same_ring(other)?;
        let f = &self.ring.field;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| f.sub(a, b)).collect();
        Ok(QuotientElement { ring: self.ring.clone(), coeffs })
    }

    pub fn scale(&self, c: Elem) -> QuotientElement {
        let f = &self.ring.field;
        QuotientElement { ring: self.ring.clone(), coeffs: self.coeffs.iter().map(|&a| f.mul(a, c)).collect() }
    }

    pub fn mul(&self, other: &QuotientElement) -> Result<QuotientElement> {
        self.same_ring(other)?;
        let coeffs = quotient_mul_slices(&self.ring.field, self.ring.lambda, &self.coeffs, &other.coeffs);
        Ok(QuotientElement { ring: self.ring.clone(), coeffs })
    }

    /// Inverse by extended Euclid against `x^m − λ`; a non-unit reports the
    /// gcd it shares with the modulus.
    pub fn inverse(&self) -> Result<QuotientElement> {
        let (g, u, _) = self.lift().xgcd(&self.ring.modulus())?;
        if g != Poly::one(&self.ring.field) {
            return Err(Error::NotAUnit { gcd: g.codes() });
        }
        self.ring.reduce(&u)
    }

    pub fn is_unit(&self) -> bool {
        self.lift().gcd(&self.ring.modulus()).is_ok_and(|g| g.degree() == Some(0))
    }

    /// `Σ a_i x̄^{ig}` computed on the representative.
    pub fn substitute_power(&self, g: u64) -> Substitution<QuotientElement> {
        let coeffs = substitute_slices(&self.ring.field, self.ring.lambda, &self.coeffs, g);
        Substitution {
            value: QuotientElement { ring: self.ring.clone(), coeffs },
            well_defined: self.ring.substitution_well_defined(g),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ring": {"q": self.ring.field.order(), "m": self.ring.m, "lambda": self.ring.lambda.code()},
            "coeffs": self.codes(),
        })
    }

    /// Comma-separated codes, e.g. `1,1,2`.
    pub fn to_text(&self) -> String {
        self.codes().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Whether `x^m − λ` divides `x^{mg} − λ`: `g ≡ 1 (mod ord λ)`.
pub fn divides_condition(field: &Field, m: usize, g: u64, lambda: Elem) -> Result<bool> {
    let ring = QuotientRing::new(field, m, lambda)?;
    Ok(ring.substitution_well_defined(g))
}

/// Unit counts of F_q[x]/(x^m − λ) from the factorization
/// `∏ f_i^{e_i}` of the modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnitsCount {
    /// `∏ (q^{d_i} − 1)^{e_i}`, one factor per irreducible counted with
    /// multiplicity.
    pub factor_product: u128,
    /// `∏ q^{(e_i−1)d_i}(q^{d_i} − 1)`, the order of the unit group.
    pub exact: u128,
}

pub fn units_count(ring: &QuotientRing) -> Result<UnitsCount> {
    let fac = ring.modulus().factor()?;
    let q = ring.field.order() as u128;
    let mut fp = 1u128;
    let mut ex = 1u128;
    for (d, e) in fac.degrees() {
        let qd = q.checked_pow(d as u32).ok_or(Error::Overflow("units count"))?;
        fp = fp.checked_mul((qd - 1).checked_pow(e).ok_or(Error::Overflow("units count"))?).ok_or(Error::Overflow("units count"))?;
        let local = qd.checked_pow(e - 1).and_then(|x| x.checked_mul(qd - 1)).ok_or(Error::Overflow("units count"))?;
        ex = ex.checked_mul(local).ok_or(Error::Overflow("units count"))?;
    }
    Ok(UnitsCount { factor_product: fp, exact: ex })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> Field {
        Field::with_order(q).unwrap()
    }

    fn p(f: &Field, codes: &[u64]) -> Poly {
        Poly::from_codes(f, codes).unwrap()
    }

    #[test]
    fn degree_sentinel() {
        let f = gf(5);
        assert_eq!(Poly::zero(&f).degree(), None);
        assert_eq!(Poly::one(&f).degree(), Some(0));
        assert_eq!(p(&f, &[1, 2, 0, 0]).degree(), Some(1));
    }

    #[test]
    fn gcd_and_division() {
        let f = gf(5);
        let g = p(&f, &[4, 0, 1]).gcd(&p(&f, &[4, 1])).unwrap();
        assert_eq!(g, p(&f, &[4, 1]));
        let (qt, r) = p(&f, &[4, 0, 0, 1]).divmod(&p(&f, &[4, 1])).unwrap();
        assert_eq!(qt, p(&f, &[1, 1, 1]));
        assert!(r.is_zero());
        let x = Poly::x(&f);
        let (g, u, v) = x.xgcd(&x).unwrap();
        assert_eq!(g, x);
        assert_eq!(u.mul(&x).unwrap().add(&v.mul(&x).unwrap()).unwrap(), g);
        assert_eq!(x.divmod(&Poly::zero(&f)), Err(Error::DivisionByZeroPoly));
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = Poly::one(&gf(5));
        let b = Poly::one(&gf(7));
        assert_eq!(a.add(&b), Err(Error::MixedFields));
    }

    #[test]
    fn irreducibility_examples() {
        assert!(p(&gf(2), &[1, 1, 1]).is_irreducible().unwrap());
        assert!(!p(&gf(9), &[1, 0, 1]).is_irreducible().unwrap());
        // no root of x^2+x+1 in F8: 3 does not divide 7
        let f8 = gf(8);
        let w = p(&f8, &[1, 1, 1]);
        assert!(w.roots().is_empty());
        assert!(w.is_irreducible().unwrap());
        assert_eq!(Poly::one(&f8).is_irreducible(), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn factor_examples() {
        let f8 = gf(8);
        let fac = p(&f8, &[1, 0, 1]).factor().unwrap();
        assert_eq!(fac.factors, vec![(p(&f8, &[1, 1]), 2)]);
        let fac = p(&f8, &[1, 0, 0, 0, 1]).factor().unwrap();
        assert_eq!(fac.factors, vec![(p(&f8, &[1, 1]), 4)]);
        let f25 = gf(25);
        let m = p(&f25, &[4, 0, 0, 1]);
        let fac = m.factor().unwrap();
        assert_eq!(fac.degrees(), vec![(1, 1), (1, 1), (1, 1)]);
        assert_eq!(fac.expand(&f25), m);
        for (fi, _) in &fac.factors {
            let root = f25.neg(fi.coeff(0));
            assert_eq!(f25.pow(root, 3), Elem::ONE);
        }
    }

    #[test]
    fn quotient_examples_gf5() {
        let f = gf(5);
        let r = QuotientRing::new(&f, 3, Elem::ONE).unwrap();
        let h = r.from_codes(&[1, 1, 2]).unwrap();
        let hi = r.from_codes(&[1, 2, 1]).unwrap();
        assert_eq!(h.mul(&hi).unwrap(), r.one());
        assert_eq!(h.inverse().unwrap(), hi);
        let h2 = r.from_codes(&[1, 3, 3]).unwrap();
        assert_eq!(h2.inverse().unwrap(), r.from_codes(&[4, 2, 2]).unwrap());
        let bad = r.from_codes(&[4, 1]).unwrap();
        assert_eq!(bad.inverse(), Err(Error::NotAUnit { gcd: vec![4, 1] }));
        assert_eq!(r.one().inverse().unwrap(), r.one());
        assert_eq!(h.weight(), 3);
        assert_eq!(r.zero().weight(), 0);
    }

    #[test]
    fn defining_relation() {
        let f = gf(9);
        let lam = Elem::from_code(2);
        let r = QuotientRing::new(&f, 4, lam).unwrap();
        let top = r.monomial(Elem::ONE, 3);
        assert_eq!(top.mul(&r.x()).unwrap(), r.monomial(lam, 0));
        assert_eq!(top.weight(), 1);
    }

    #[test]
    fn substitution_examples() {
        let f = gf(25);
        let lam = Elem::from_code(3);
        let r = QuotientRing::new(&f, 5, lam).unwrap();
        assert_eq!(r.x().substitute_power(3).value, r.monomial(Elem::ONE, 3));
        assert_eq!(r.monomial(Elem::ONE, 2).substitute_power(3).value, r.monomial(lam, 1));
        assert!(!r.x().substitute_power(3).well_defined);
        assert!(r.x().substitute_power(5).well_defined);
        let f5 = gf(5);
        let r5 = QuotientRing::new(&f5, 3, Elem::ONE).unwrap();
        let a = r5.from_codes(&[1, 1, 1]).unwrap();
        assert_eq!(a.substitute_power(2).value, a);
        assert_eq!(a.substitute_power(1).value, a);
    }

    #[test]
    fn divides_condition_examples() {
        let f25 = gf(25);
        assert!(divides_condition(&f25, 4, 5, Elem::from_code(3)).unwrap());
        assert!(!divides_condition(&f25, 4, 2, Elem::from_code(3)).unwrap());
        assert!(divides_condition(&gf(9), 2, 3, Elem::from_code(2)).unwrap());
        assert!(divides_condition(&gf(7), 3, 6, Elem::ONE).unwrap());
        assert_eq!(divides_condition(&gf(7), 3, 2, Elem::ZERO), Err(Error::ZeroLambda));
    }

    #[test]
    fn units_count_examples() {
        let f8 = gf(8);
        let c = QuotientRing::new(&f8, 2, Elem::ONE).unwrap().units_count().unwrap();
        assert_eq!(c, UnitsCount { factor_product: 49, exact: 56 });
        let c = QuotientRing::new(&f8, 3, Elem::ONE).unwrap().units_count().unwrap();
        assert_eq!(c, UnitsCount { factor_product: 441, exact: 441 });
        let f7 = gf(7);
        let c = QuotientRing::new(&f7, 1, Elem::from_code(3)).unwrap().units_count().unwrap();
        assert_eq!(c, UnitsCount { factor_product: 6, exact: 6 });
    }

    #[test]
    fn render_forms() {
        let f16: Field = "F16".parse().unwrap();
        let h = p(&f16, &[2, 4, 6, 12]);
        assert_eq!(h.render("X"), "(b^3+b^2)X^3+(b^2+b)X^2+b^2X+b");
        let fac = p(&gf(8), &[1, 0, 1]).factor().unwrap();
        assert_eq!(fac.render(&gf(8)), "(x+1)^2");
    }
}
