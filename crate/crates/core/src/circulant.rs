//! Consta-g-circulant and consta-θ_g-circulant matrices.
//!
//! Row `i` of the matrix built from `(m, g, λ, h, θ)` holds the coordinates
//! of `X̄^{ig} ∗ h̄` in the basis `1, X̄, …, X̄^{m−1}` of
//! F_q[X;θ]/(X^m − λ) (the commutative ring when `θ = id`).

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::gf::{gcd, registry_name, Elem, Field};
use crate::matrix::Matrix;
use crate::poly::{parse_coeff_list, quotient_mul_slices, Poly, QuotientElement, QuotientRing};
use crate::skew::{skew_quotient_mul_slices, SkewQuotientElement, SkewQuotientRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CirculantKind {
    Circulant,
    LeftCirculant,
    GCirculant,
    ConstaGCirculant,
    ConstaThetaGCirculant,
}

impl CirculantKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CirculantKind::Circulant => "circulant",
            CirculantKind::LeftCirculant => "left-circulant",
            CirculantKind::GCirculant => "g-circulant",
            CirculantKind::ConstaGCirculant => "consta-g-circulant",
            CirculantKind::ConstaThetaGCirculant => "consta-theta-g-circulant",
        }
    }
}

impl fmt::Display for CirculantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The data `(m, g, λ, h_0..h_{m−1}, θ = Frobenius^k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CirculantSpec {
    field: Field,
    m: usize,
    g: usize,
    lambda: Elem,
    h: Vec<Elem>,
    theta: u32,
}

impl CirculantSpec {
    /// Validates `λ ≠ 0`, `1 ≤ g ≤ m`, at most `m` coefficients (padded with
    /// zeros) and, for `theta ≠ 0`, `ord(θ) | m` and `θ(λ) = λ`.
    pub fn new(field: &Field, m: usize, g: usize, lambda: Elem, mut h: Vec<Elem>, theta: u32) -> Result<CirculantSpec> {
        if m == 0 {
            return Err(Error::InvalidSpec("m must be at least 1".into()));
        }
        if lambda.is_zero() {
            return Err(Error::InvalidSpec("lambda must be nonzero".into()));
        }
        if !(1..=m).contains(&g) {
            return Err(Error::InvalidSpec(format!("g = {g} outside 1..={m}")));
        }
        if h.len() > m {
            return Err(Error::InvalidSpec(format!("{} coefficients for m = {m}", h.len())));
        }
        for &c in h.iter().chain([&lambda]) {
            field.element(c.code() as u64).map_err(|e| Error::InvalidSpec(e.to_string()))?;
        }
        if theta != 0 {
            SkewQuotientRing::new(field, theta, m, lambda).map_err(|e| Error::InvalidSpec(e.to_string()))?;
        }
        h.resize(m, Elem::ZERO);
        Ok(CirculantSpec { field: field.clone(), m, g, lambda, h, theta })
    }

    pub fn commutative(field: &Field, m: usize, g: usize, lambda: Elem, h: Vec<Elem>) -> Result<CirculantSpec> {
        CirculantSpec::new(field, m, g, lambda, h, 0)
    }

    pub fn skew(field: &Field, m: usize, g: usize, lambda: Elem, h: Vec<Elem>, theta: u32) -> Result<CirculantSpec> {
        CirculantSpec::new(field, m, g, lambda, h, theta)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn lambda(&self) -> Elem {
        self.lambda
    }

    pub fn h(&self) -> &[Elem] {
        &self.h
    }

    pub fn theta_exp(&self) -> u32 {
        self.theta
    }

    pub fn with_h(&self, h: Vec<Elem>) -> Result<CirculantSpec> {
        CirculantSpec::new(&self.field, self.m, self.g, self.lambda, h, self.theta)
    }

    pub fn with_g(&self, g: usize) -> Result<CirculantSpec> {
        CirculantSpec::new(&self.field, self.m, g, self.lambda, self.h.clone(), self.theta)
    }

    pub fn lambda_order(&self) -> u64 {
        self.field.mult_order(self.lambda).expect("lambda is nonzero")
    }

    /// `g ≡ 1 (mod ord λ)`, the condition under which `Q̄ ↦ Q̄(x^g)` is
    /// well defined on cosets.
    pub fn well_defined(&self) -> bool {
        let r = self.lambda_order() as usize;
        self.g % r == 1 % r
    }

    pub fn is_skew(&self) -> bool {
        self.theta != 0
    }

    /// `h_0 + h_1 x + ⋯ + h_{m−1} x^{m−1} + x^m − λ`
    pub fn defining_polynomial(&self) -> Poly {
        let f = &self.field;
        let mut v = self.h.clone();
        v[0] = f.sub(v[0], self.lambda);
        v.push(Elem::ONE);
        Poly::new(f, v)
    }

    pub fn ring(&self) -> QuotientRing {
        QuotientRing::new(&self.field, self.m, self.lambda).expect("validated")
    }

    pub fn skew_ring(&self) -> SkewQuotientRing {
        SkewQuotientRing::new(&self.field, self.theta, self.m, self.lambda).expect("validated")
    }

    /// `h̄` in the commutative quotient ring.
    pub fn h_element(&self) -> QuotientElement {
        self.ring().element(self.h.clone()).expect("validated")
    }

    /// `h̄` in the skew quotient ring (θ may be the identity).
    pub fn h_skew_element(&self) -> SkewQuotientElement {
        self.skew_ring().element(self.h.clone()).expect("validated")
    }

    /// Row `i` is the coordinate vector of `X̄^{ig} ∗ h̄`.
    pub fn build(&self) -> Result<Matrix> {
        let f = &self.field;
        let m = self.m;
        let mut entries = Vec::with_capacity(m * m);
        for i in 0..m {
            let e = i * self.g;
            let mut mono = vec![Elem::ZERO; m];
            mono[e % m] = f.pow(self.lambda, (e / m) as u64);
            let row = if self.theta == 0 {
                quotient_mul_slices(f, self.lambda, &mono, &self.h)
            } else {
                skew_quotient_mul_slices(f, self.theta, self.lambda, &mono, &self.h)
            };
            entries.extend(row);
        }
        Matrix::new(f, m, m, entries)
    }

    pub fn classify(&self) -> CirculantKind {
        if self.theta != 0 {
            CirculantKind::ConstaThetaGCirculant
        } else if self.lambda != Elem::ONE {
            CirculantKind::ConstaGCirculant
        } else if self.g == 1 {
            CirculantKind::Circulant
        } else if self.g + 1 == self.m {
            CirculantKind::LeftCirculant
        } else {
            CirculantKind::GCirculant
        }
    }

    /// `gcd(m, g) = 1`; otherwise the matrix is singular or not MDS.
    pub fn shift_coprime(&self) -> bool {
        gcd(self.m as u64, self.g as u64) == 1
    }

    /// `q=..;m=..;g=..;lambda=..;h=..;theta=..`
    pub fn to_text(&self) -> String {
        let q = registry_name(&self.field).map_or_else(|| self.field.spec_string(), str::to_string);
        let h: Vec<String> = self.h.iter().map(|c| c.code().to_string()).collect();
        format!("q={q};m={};g={};lambda={};h={};theta={}", self.m, self.g, self.lambda.code(), h.join(","), self.theta)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "field": self.field.spec_string(),
            "field_name": registry_name(&self.field),
            "q": self.field.order(),
            "m": self.m,
            "g": self.g,
            "lambda": self.lambda.code(),
            "h": self.h.iter().map(|c| c.code()).collect::<Vec<_>>(),
            "theta": self.theta,
            "well_defined": self.well_defined(),
            "classify": self.classify().as_str(),
        })
    }
}

impl fmt::Display for CirculantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for CirculantSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<CirculantSpec> {
        let mut q = None;
        let (mut m, mut g, mut lambda, mut h, mut theta) = (None, None, None, None, 0u32);
        for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got `{part}`")))?;
            let v = v.trim();
            let int = |v: &str| v.parse::<usize>().map_err(|_| Error::Parse(format!("bad integer `{v}` for {k}")));
            match k.trim() {
                "q" | "field" => q = Some(v.parse::<Field>()?),
                "m" => m = Some(int(v)?),
                "g" => g = Some(int(v)?),
                "lambda" => lambda = Some(v.to_string()),
                "h" => h = Some(v.to_string()),
                "theta" => theta = int(v)? as u32,
                other => return Err(Error::Parse(format!("unknown key `{other}`"))),
            }
        }
        let field = q.ok_or_else(|| Error::Parse("missing q".into()))?;
        let m = m.ok_or_else(|| Error::Parse("missing m".into()))?;
        let lambda = match lambda {
            Some(l) => field.parse_element(&l)?,
            None => Elem::ONE,
        };
        let h = parse_coeff_list(&field, &h.ok_or_else(|| Error::Parse("missing h".into()))?)?;
        CirculantSpec::new(&field, m, g.unwrap_or(1), lambda, h, theta)
    }
}

/// `a_{ij} = c_{(j − ig) mod m}`, the entry of a g-circulant matrix.
pub fn g_circulant_entry(c: &[Elem], m: usize, g: usize, i: usize, j: usize) -> Result<Elem> {
    if c.len() != m || i >= m || j >= m {
        return Err(Error::IndexOutOfRange);
    }
    let shift = (i * g) % m;
    Ok(c[(j + m - shift) % m])
}

/// Multiplies the matrices of `s1` and `s2` and recovers the spec of the
/// product: shift `g1·g2 mod m` (0 read as `m`) and first row as `h`.
pub fn product_shift_law(s1: &CirculantSpec, s2: &CirculantSpec) -> Result<(Matrix, CirculantSpec)> {
    if s1.field != s2.field || s1.m != s2.m || s1.lambda != s2.lambda || s1.theta != s2.theta {
        return Err(Error::InvalidSpec("factors must share field, m, lambda and theta".into()));
    }
    if !s1.well_defined() || !s2.well_defined() {
        return Err(Error::InvalidSpec("both factors must satisfy g ≡ 1 (mod ord lambda)".into()));
    }
    let product = s1.build()?.mul(&s2.build()?)?;
    let m = s1.m;
    let g = match (s1.g * s2.g) % m {
        0 => m,
        g => g,
    };
    let recovered = CirculantSpec::new(&s1.field, m, g, s1.lambda, product.row(0).to_vec(), s1.theta)?;
    let rebuilt = recovered.build()?;
    if let Some(i) = (0..m).find(|&i| rebuilt.row(i) != product.row(i)) {
        return Err(Error::NotCirculantProduct(format!(
            "row {i} of the product is {:?}, shift law with g = {g} gives {:?}",
            product.row(i).iter().map(|e| e.code()).collect::<Vec<_>>(),
            rebuilt.row(i).iter().map(|e| e.code()).collect::<Vec<_>>()
        )));
    }
    Ok((product, recovered))
}

/// Coefficient-wise `h_i ↦ h_i^{2^s}` in characteristic 2.
pub fn hadamard_power(spec: &CirculantSpec, s: u32) -> Result<CirculantSpec> {
    let f = &spec.field;
    if f.characteristic() != 2 {
        return Err(Error::OddCharacteristic(f.characteristic()));
    }
    if s == 0 {
        return Err(Error::InvalidSpec("Hadamard exponent s must be at least 1".into()));
    }
    let h = spec.h.iter().map(|&c| f.frobenius(c, s)).collect();
    spec.with_h(h)
}
