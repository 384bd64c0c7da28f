//! The skew polynomial ring F_q[X;θ] with θ(a) = a^(p^k), coefficients
//! written on the left, and its quotients F_q[X;θ]/(X^m − λ).

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::poly::{parse_coeff_list, render_terms, substitute_slices, trim, Poly, Substitution};

/// `Σ a_i X^i` with `X ∗ a = θ(a) X`.
#[derive(Clone, PartialEq, Eq)]
pub struct SkewPoly {
    field: Field,
    theta: u32,
    coeffs: Vec<Elem>,
}

impl fmt::Debug for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewPoly[θ^{}]({})", self.theta, self.render())
    }
}

impl fmt::Display for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn check_theta(field: &Field, theta: u32) -> Result<()> {
    if theta >= field.degree() {
        return Err(Error::InvalidRing(format!(
            "theta exponent {theta} must be below the extension degree {}",
            field.degree()
        )));
    }
    Ok(())
}

/// `θ^j(a)` for `θ = Frobenius^k`.
#[inline]
fn theta_pow(field: &Field, k: u32, j: usize, a: Elem) -> Elem {
    let n = field.degree() as u64;
    field.frobenius(a, ((k as u64 * j as u64) % n) as u32)
}

/// `θ^{-j}(a)`
#[inline]
fn theta_pow_inv(field: &Field, k: u32, j: usize, a: Elem) -> Elem {
    let n = field.degree() as u64;
    let e = (k as u64 * j as u64) % n;
    field.frobenius(a, ((n - e) % n) as u32)
}

impl SkewPoly {
    pub fn new(field: &Field, theta: u32, mut coeffs: Vec<Elem>) -> Result<SkewPoly> {
        check_theta(field, theta)?;
        trim(&mut coeffs);
        Ok(SkewPoly { field: field.clone(), theta, coeffs })
    }

    fn raw(&self, mut coeffs: Vec<Elem>) -> SkewPoly {
        trim(&mut coeffs);
        SkewPoly { field: self.field.clone(), theta: self.theta, coeffs }
    }

    pub fn from_codes(field: &Field, theta: u32, codes: &[u64]) -> Result<SkewPoly> {
        let coeffs = codes.iter().map(|&c| field.element(c)).collect::<Result<Vec<_>>>()?;
        SkewPoly::new(field, theta, coeffs)
    }

    pub fn parse(field: &Field, theta: u32, s: &str) -> Result<SkewPoly> {
        SkewPoly::new(field, theta, parse_coeff_list(field, s)?)
    }

    pub fn from_poly(p: &Poly, theta: u32) -> Result<SkewPoly> {
        SkewPoly::new(p.field(), theta, p.coeffs().to_vec())
    }

    pub fn to_poly(&self) -> Poly {
        Poly::new(&self.field, self.coeffs.clone())
    }

    /// `c·X^k`
    pub fn monomial(field: &Field, theta: u32, c: Elem, k: usize) -> Result<SkewPoly> {
        let mut v = vec![Elem::ZERO; k + 1];
        v[k] = c;
        SkewPoly::new(field, theta, v)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn theta_exp(&self) -> u32 {
        self.theta
    }

    /// Order of θ, `n / gcd(n, k)`.
    pub fn theta_order(&self) -> u32 {
        self.field.automorphism_order(self.theta)
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    fn same_ring(&self, other: &SkewPoly) -> Result<()> {
        if self.field == other.field && self.theta == other.theta {
            Ok(())
        } else {
            Err(Error::MixedRings)
        }
    }

    pub fn add(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.same_ring(other)?;
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(self.raw((0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect()))
    }

    pub fn sub(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.same_ring(other)?;
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(self.raw((0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect()))
    }

    /// Left scalar multiple `c ∗ self`.
    pub fn scale_left(&self, c: Elem) -> SkewPoly {
        let f = &self.field;
        self.raw(self.coeffs.iter().map(|&a| f.mul(c, a)).collect())
    }

    /// `(a_i X^i)(b_j X^j) = a_i θ^i(b_j) X^{i+j}`
    pub fn mul(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.same_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &SkewPoly) -> SkewPoly {
        if self.is_zero() || other.is_zero() {
            return self.raw(Vec::new());
        }
        let f = &self.field;
        let mut out = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, theta_pow(f, self.theta, i, b)));
            }
        }
        self.raw(out)
    }

    /// Central iff every nonzero `f_i` has `ord(θ) | i` and `θ(f_i) = f_i`.
    pub fn is_central(&self) -> bool {
        let s = self.theta_order() as usize;
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, &c)| c.is_zero() || (i % s == 0 && self.field.is_fixed(c, self.theta)))
    }

    /// `self = q ∗ divisor + r` with `deg r < deg divisor`.
    pub fn divmod_right(&self, divisor: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        self.same_ring(divisor)?;
        let db = divisor.degree().ok_or(Error::DivisionByZeroPoly)?;
        let f = &self.field;
        let d = divisor.coeffs[db];
        let mut r = self.coeffs.clone();
        let mut quot = vec![Elem::ZERO; r.len().saturating_sub(db)];
        for k in (db..r.len()).rev() {
            let c = r[k];
            if c.is_zero() {
                continue;
            }
            let t = k - db;
            // (u X^t) ∗ (d X^db) = u θ^t(d) X^k
            let u = f.mul(c, f.inv_nonzero(theta_pow(f, self.theta, t, d)));
            quot[t] = u;
            for (i, &b) in divisor.coeffs.iter().enumerate() {
                r[t + i] = f.sub(r[t + i], f.mul(u, theta_pow(f, self.theta, t, b)));
            }
        }
        r.truncate(db.min(r.len()));
        Ok((self.raw(quot), self.raw(r)))
    }

    /// `self = divisor ∗ q + r` with `deg r < deg divisor`.
    pub fn divmod_left(&self, divisor: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        self.same_ring(divisor)?;
        let db = divisor.degree().ok_or(Error::DivisionByZeroPoly)?;
        let f = &self.field;
        let d_inv = f.inv_nonzero(divisor.coeffs[db]);
        let mut r = self.coeffs.clone();
        let mut quot = vec![Elem::ZERO; r.len().saturating_sub(db)];
        for k in (db..r.len()).rev() {
            let c = r[k];
            if c.is_zero() {
                continue;
            }
            let t = k - db;
            // (d X^db) ∗ (u X^t) = d θ^db(u) X^k
            let u = theta_pow_inv(f, self.theta, db, f.mul(d_inv, c));
            quot[t] = u;
            for (i, &b) in divisor.coeffs.iter().enumerate() {
                r[t + i] = f.sub(r[t + i], f.mul(b, theta_pow(f, self.theta, i, u)));
            }
        }
        r.truncate(db.min(r.len()));
        Ok((self.raw(quot), self.raw(r)))
    }

    pub fn render(&self) -> String {
        render_terms(&self.field, &self.coeffs, "X")
    }
}

/// F_q[X;θ]/(X^m − λ), valid when `ord(θ) | m` and `θ(λ) = λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewQuotientRing {
    field: Field,
    theta: u32,
    m: usize,
    lambda: Elem,
}

impl SkewQuotientRing {
    pub fn new(field: &Field, theta: u32, m: usize, lambda: Elem) -> Result<SkewQuotientRing> {
        check_theta(field, theta)?;
        if lambda.is_zero() {
            return Err(Error::ZeroLambda);
        }
        field.element(lambda.code() as u64)?;
        if m == 0 {
            return Err(Error::InvalidRing("m must be at least 1".into()));
        }
        let s = field.automorphism_order(theta) as usize;
        if m % s != 0 {
            return Err(Error::InvalidRing(format!("order of theta ({s}) does not divide m = {m}")));
        }
        if !field.is_fixed(lambda, theta) {
            return Err(Error::InvalidRing("lambda is not fixed by theta".into()));
        }
        Ok(SkewQuotientRing { field: field.clone(), theta, m, lambda })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn theta_exp(&self) -> u32 {
        self.theta
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn lambda(&self) -> Elem {
        self.lambda
    }

    /// `X^m − λ`, central by construction.
    pub fn modulus(&self) -> SkewPoly {
        let mut v = vec![Elem::ZERO; self.m + 1];
        v[0] = self.field.neg(self.lambda);
        v[self.m] = Elem::ONE;
        SkewPoly { field: self.field.clone(), theta: self.theta, coeffs: v }
    }

    pub fn size(&self) -> Option<u64> {
        (self.field.order() as u64).checked_pow(self.m as u32)
    }

    pub fn element(&self, mut coeffs: Vec<Elem>) -> Result<SkewQuotientElement> {
        if coeffs.len() > self.m {
            return Err(Error::DimensionMismatch(format!("{} coefficients for m = {}", coeffs.len(), self.m)));
        }
        for c in &coeffs {
            self.field.element(c.code() as u64)?;
        }
        coeffs.resize(self.m, Elem::ZERO);
        Ok(SkewQuotientElement { ring: self.clone(), coeffs })
    }

    pub fn from_codes(&self, codes: &[u64]) -> Result<SkewQuotientElement> {
        let coeffs = codes.iter().map(|&c| self.field.element(c)).collect::<Result<Vec<_>>>()?;
        self.element(coeffs)
    }

    pub fn parse_element(&self, s: &str) -> Result<SkewQuotientElement> {
        self.element(parse_coeff_list(&self.field, s)?)
    }

    /// Reduction with `X^{km+t} = λ^k X^t`, valid because λ is central.
    pub fn reduce(&self, p: &SkewPoly) -> Result<SkewQuotientElement> {
        if p.field != self.field || p.theta != self.theta {
            return Err(Error::MixedRings);
        }
        let f = &self.field;
        let mut out = vec![Elem::ZERO; self.m];
        let mut lam_pow = Elem::ONE;
        for (block, chunk) in p.coeffs.chunks(self.m).enumerate() {
            if block > 0 {
                lam_pow = f.mul(lam_pow, self.lambda);
            }
            for (t, &c) in chunk.iter().enumerate() {
                out[t] = f.add(out[t], f.mul(c, lam_pow));
            }
        }
        let reduced = SkewQuotientElement { ring: self.clone(), coeffs: out };
        debug_assert_eq!(
            p.divmod_right(&self.modulus()).map(|(_, r)| r.coeffs().to_vec()).ok(),
            Some(reduced.lift().coeffs().to_vec())
        );
        Ok(reduced)
    }

    pub fn zero(&self) -> SkewQuotientElement {
        SkewQuotientElement { ring: self.clone(), coeffs: vec![Elem::ZERO; self.m] }
    }

    pub fn one(&self) -> SkewQuotientElement {
        self.monomial(Elem::ONE, 0)
    }

    /// `c·X̄^k` reduced.
    pub fn monomial(&self, c: Elem, k: usize) -> SkewQuotientElement {
        let mut out = self.zero();
        let f = &self.field;
        out.coeffs[k % self.m] = f.mul(c, f.pow(self.lambda, (k / self.m) as u64));
        out
    }

    pub fn x(&self) -> SkewQuotientElement {
        self.monomial(Elem::ONE, 1)
    }

    pub fn from_index(&self, mut code: u64) -> SkewQuotientElement {
        let q = self.field.order() as u64;
        let coeffs = (0..self.m)
            .map(|_| {
                let c = Elem::from_code((code % q) as u32);
                code /= q;
                c
            })
            .collect();
        SkewQuotientElement { ring: self.clone(), coeffs }
    }

    pub fn elements(&self) -> Result<impl Iterator<Item = SkewQuotientElement> + '_> {
        let n = self.size().ok_or(Error::Overflow("q^m"))?;
        Ok((0..n).map(move |c| self.from_index(c)))
    }

    pub fn substitution_well_defined(&self, g: u64) -> bool {
        let r = self.field.mult_order(self.lambda).expect("lambda is nonzero");
        g % r == 1 % r
    }
}

pub(crate) fn skew_quotient_mul_slices(f: &Field, theta: u32, lambda: Elem, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let m = a.len();
    let mut out = vec![Elem::ZERO; m];
    for (i, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let xl = f.mul(x, lambda);
        for (j, &y) in b.iter().enumerate() {
            let ty = theta_pow(f, theta, i, y);
            let k = i + j;
            if k < m {
                out[k] = f.add(out[k], f.mul(x, ty));
            } else {
                out[k - m] = f.add(out[k - m], f.mul(xl, ty));
            }
        }
    }
    out
}

/// A residue of F_q[X;θ]/(X^m − λ).
#[derive(Clone, PartialEq, Eq)]
pub struct SkewQuotientElement {
    ring: SkewQuotientRing,
    coeffs: Vec<Elem>,
}

impl fmt::Debug for SkewQuotientElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.codes().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))
    }
}

impl fmt::Display for SkewQuotientElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(self.ring.field(), &self.coeffs, "X"))
    }
}

impl SkewQuotientElement {
    pub fn ring(&self) -> &SkewQuotientRing {
        &self.ring
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn codes(&self) -> Vec<u32> {
        self.coeffs.iter().map(|c| c.code()).collect()
    }

    pub fn lift(&self) -> SkewPoly {
        let mut c = self.coeffs.clone();
        trim(&mut c);
        SkewPoly { field: self.ring.field.clone(), theta: self.ring.theta, coeffs: c }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    fn same_ring(&self, other: &SkewQuotientElement) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::MixedRings)
        }
    }

    pub fn add(&self, other: &SkewQuotientElement) -> Result<SkewQuotientElement> {
        self.same_ring(other)?;
        let f = &self.ring.field;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(SkewQuotientElement { ring: self.ring.clone(), coeffs })
    }

    pub fn scale_left(&self, c: Elem) -> SkewQuotientElement {
        let f = &self.ring.field;
        SkewQuotientElement { ring: self.ring.clone(), coeffs: self.coeffs.iter().map(|&a| f.mul(c, a)).collect() }
    }

    pub fn mul(&self, other: &SkewQuotientElement) -> Result<SkewQuotientElement> {
        self.same_ring(other)?;
        let r = &self.ring;
        let coeffs = skew_quotient_mul_slices(&r.field, r.theta, r.lambda, &self.coeffs, &other.coeffs);
        Ok(SkewQuotientElement { ring: self.ring.clone(), coeffs })
    }

    /// Two-sided inverse from the right extended Euclidean algorithm on
    /// `(X^m − λ, self)`.
    pub fn inverse(&self) -> Result<SkewQuotientElement> {
        let ring = &self.ring;
        let f = &ring.field;
        let zero = SkewPoly { field: f.clone(), theta: ring.theta, coeffs: Vec::new() };
        let one = SkewPoly { field: f.clone(), theta: ring.theta, coeffs: vec![Elem::ONE] };
        // invariant: r_i ≡ s_i ∗ self modulo the ideal
        let (mut r0, mut r1) = (ring.modulus(), self.lift());
        let (mut s0, mut s1) = (zero, one);
        while !r1.is_zero() {
            let (qt, r) = r0.divmod_right(&r1)?;
            let s = s0.sub(&qt.mul_unchecked(&s1))?;
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s);
        }
        if r0.degree() != Some(0) {
            let lead = r0.coeffs.last().copied().unwrap_or(Elem::ONE);
            let monic = r0.scale_left(f.inv_nonzero(lead));
            return Err(Error::NotAUnit { gcd: monic.coeffs.iter().map(|c| c.code()).collect() });
        }
        let c_inv = f.inv_nonzero(r0.coeffs[0]);
        ring.reduce(&s0.scale_left(c_inv))
    }

    /// `Σ a_i X̄^{ig}`; coefficients stay on the left and are not twisted.
    pub fn substitute_power(&self, g: u64) -> Substitution<SkewQuotientElement> {
        let coeffs = substitute_slices(&self.ring.field, self.ring.lambda, &self.coeffs, g);
        Substitution {
            value: SkewQuotientElement { ring: self.ring.clone(), coeffs },
            well_defined: self.ring.substitution_well_defined(g),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ring": {"q": self.ring.field.order(), "m": self.ring.m, "lambda": self.ring.lambda.code()},
            "theta_exp": self.ring.theta,
            "coeffs": self.codes(),
        })
    }

    /// `1,1,2;theta:1`
    pub fn to_text(&self) -> String {
        let codes: Vec<String> = self.codes().iter().map(|c| c.to_string()).collect();
        format!("{};theta:{}", codes.join(","), self.ring.theta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f16() -> Field {
        "F16".parse().unwrap()
    }

    #[test]
    fn twisted_rule() {
        let f = f16();
        let b = f.generator();
        let x = SkewPoly::monomial(&f, 1, Elem::ONE, 1).unwrap();
        let beta = SkewPoly::monomial(&f, 1, b, 0).unwrap();
        assert_eq!(x.mul(&beta).unwrap(), SkewPoly::monomial(&f, 1, f.pow(b, 2), 1).unwrap());
        assert_eq!(beta.mul(&x).unwrap(), SkewPoly::monomial(&f, 1, b, 1).unwrap());
        assert!(!x.is_central());
    }

    #[test]
    fn identity_theta_is_commutative_product() {
        let f = f16();
        let a = SkewPoly::from_codes(&f, 0, &[3, 7, 1]).unwrap();
        let b = SkewPoly::from_codes(&f, 0, &[9, 0, 2, 5]).unwrap();
        assert_eq!(a.mul(&b).unwrap().to_poly(), a.to_poly().mul(&b.to_poly()).unwrap());
    }

    #[test]
    fn centre_of_modulus() {
        let f = f16();
        let r = SkewQuotientRing::new(&f, 1, 4, Elem::ONE).unwrap();
        assert!(r.modulus().is_central());
        assert!(SkewPoly::monomial(&f, 1, Elem::ONE, 0).unwrap().is_central());
        assert!(matches!(SkewQuotientRing::new(&f, 1, 3, Elem::ONE), Err(Error::InvalidRing(_))));
        assert!(matches!(SkewQuotientRing::new(&f, 1, 4, f.generator()), Err(Error::InvalidRing(_))));
    }

    #[test]
    fn simple_divisions() {
        let f = f16();
        let a = SkewPoly::from_codes(&f, 1, &[3, 7, 1]).unwrap();
        let one = SkewPoly::from_codes(&f, 1, &[1]).unwrap();
        assert_eq!(a.divmod_right(&one).unwrap(), (a.clone(), SkewPoly::new(&f, 1, vec![]).unwrap()));
        let x2 = SkewPoly::monomial(&f, 1, Elem::ONE, 2).unwrap();
        let x = SkewPoly::monomial(&f, 1, Elem::ONE, 1).unwrap();
        let (q, r) = x2.divmod_right(&x).unwrap();
        assert_eq!(q, x);
        assert!(r.is_zero());
    }

    #[test]
    fn reconstruction_both_sides() {
        let f = f16();
        let a = SkewPoly::from_codes(&f, 1, &[3, 7, 1, 0, 11, 2]).unwrap();
        let b = SkewPoly::from_codes(&f, 1, &[5, 9, 6]).unwrap();
        let (q, r) = a.divmod_right(&b).unwrap();
        assert_eq!(q.mul(&b).unwrap().add(&r).unwrap(), a);
        let (q, r) = a.divmod_left(&b).unwrap();
        assert_eq!(b.mul(&q).unwrap().add(&r).unwrap(), a);
    }

    #[test]
    fn quotient_identities() {
        let f = f16();
        let r = SkewQuotientRing::new(&f, 2, 4, Elem::ONE).unwrap();
        let top = r.monomial(Elem::ONE, 3);
        assert_eq!(top.mul(&r.x()).unwrap(), r.one());
        let xi = r.x().inverse().unwrap();
        assert_eq!(xi, r.monomial(Elem::ONE, 3));
        let h = r.from_codes(&[2, 4, 6, 12]).unwrap();
        assert_eq!(h.mul(&r.one()).unwrap(), h);
        assert_eq!(r.one().mul(&h).unwrap(), h);
        assert_eq!(r.one().inverse().unwrap(), r.one());
    }

    #[test]
    fn worked_example_f16_is_self_inverse() {
        let f = f16();
        let r = SkewQuotientRing::new(&f, 1, 4, Elem::ONE).unwrap();
        let h = r.from_codes(&[2, 4, 6, 12]).unwrap();
        assert_eq!(h.mul(&h).unwrap(), r.one());
        assert_eq!(h.inverse().unwrap(), h);
    }

    #[test]
    fn substitution_keeps_left_coefficients() {
        let f = f16();
        let r = SkewQuotientRing::new(&f, 1, 4, Elem::ONE).unwrap();
        let b = f.generator();
        assert_eq!(r.x().substitute_power(3).value, r.monomial(Elem::ONE, 3));
        assert_eq!(r.monomial(b, 2).substitute_power(3).value, r.monomial(b, 2));
    }
}
