//! Finite fields GF(p^n) in a polynomial basis over GF(p).
//!
//! Elements are plain [`Elem`] codes `Σ c_i p^i` where `c_i` are the
//! coordinates in the basis `1, x, …, x^{n-1}` modulo the field's modulus.
//! All arithmetic goes through a [`Field`] handle, which owns log/exp tables
//! and is cheap to clone.

mod registry;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use registry::{named_element, registry_field, registry_name, REGISTRY_ENV, REGISTRY_NAMES};

/// Largest field order for which tables are built.
pub const MAX_ORDER: u64 = 1 << 16;

const ADD_TABLE_LIMIT: u32 = 256;

/// A field element, stored as its canonical integer code.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    /// Wraps a raw code without range checking; see [`Field::element`].
    pub const fn from_code(code: u32) -> Elem {
        Elem(code)
    }

    pub const fn code(self) -> u32 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Inner {
    p: u32,
    n: u32,
    q: u32,
    modulus: Vec<u32>,
    generator_name: String,
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add: Vec<u32>,
    divisors: Vec<u64>,
}

/// Handle to GF(p^n) with an explicit monic irreducible modulus.
#[derive(Clone)]
pub struct Field {
    inner: Arc<Inner>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p
                && self.inner.n == other.inner.n
                && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.inner.p, self.inner.n, self.inner.modulus)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec_string())
    }
}

impl Field {
    /// Builds GF(p^n) from a little-endian monic modulus of degree `n`.
    ///
    /// Irreducibility is checked by trial division with every monic
    /// polynomial of degree at most `n/2`.
    pub fn new(p: u64, n: u32, modulus: &[u32]) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        if n == 0 {
            return Err(Error::InvalidModulus("extension degree must be at least 1".into()));
        }
        let q = (p as u128).checked_pow(n).filter(|&q| q <= MAX_ORDER as u128);
        let Some(q) = q else {
            return Err(Error::FieldTooLarge(p.saturating_pow(n)));
        };
        let p = p as u32;
        if modulus.len() != n as usize + 1 {
            return Err(Error::InvalidModulus(format!(
                "expected {} coefficients for degree {n}, got {}",
                n + 1,
                modulus.len()
            )));
        }
        if modulus[n as usize] != 1 {
            return Err(Error::InvalidModulus("modulus must be monic".into()));
        }
        if let Some(&c) = modulus.iter().find(|&&c| c >= p) {
            return Err(Error::InvalidModulus(format!("coefficient {c} is not reduced mod {p}")));
        }
        if let Some(factor) = small_factor_mod_p(modulus, p) {
            return Err(Error::ReducibleModulus { p, factor });
        }
        Ok(Self::build(p, n, q as u32, modulus.to_vec(), default_generator_name(n)))
    }

    /// The prime field GF(p), represented with modulus `x`.
    pub fn prime(p: u64) -> Result<Field> {
        Field::new(p, 1, &[0, 1])
    }

    /// The registry field of order `q` when one is pinned, otherwise the
    /// prime field or the extension by the smallest-code monic irreducible.
    pub fn with_order(q: u64) -> Result<Field> {
        if let Some(f) = registry::registry_field_by_order(q) {
            return Ok(f);
        }
        let (p, n) = prime_power(q).ok_or(Error::NonPrimeCharacteristic(q))?;
        if n == 1 {
            return Field::prime(p);
        }
        if q > MAX_ORDER {
            return Err(Error::FieldTooLarge(q));
        }
        let p32 = p as u32;
        let count = (p as u64).pow(n);
        for code in 0..count {
            let mut modulus = digits(code, p32, n as usize);
            modulus.push(1);
            if modulus[0] != 0 && small_factor_mod_p(&modulus, p32).is_none() {
                return Field::new(p, n, &modulus);
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    fn build(p: u32, n: u32, q: u32, modulus: Vec<u32>, generator_name: String) -> Field {
        let order = q as u64 - 1;
        let divisors = divisors(order);
        let primes = prime_factors(order);
        let mul = |a: u32, b: u32| slow_mul(a, b, p, n, &modulus);
        let slow_pow = |a: u32, mut e: u64| {
            let (mut base, mut acc) = (a, 1u32);
            while e > 0 {
                if e & 1 == 1 {
                    acc = mul(acc, base);
                }
                base = mul(base, base);
                e >>= 1;
            }
            acc
        };
        let primitive = (1..q)
            .find(|&c| primes.iter().all(|&l| slow_pow(c, order / l) != 1))
            .expect("multiplicative group is cyclic");
        let mut exp = vec![0u32; 2 * order as usize];
        let mut log = vec![0u32; q as usize];
        let mut cur = 1u32;
        for i in 0..order as usize {
            exp[i] = cur;
            exp[i + order as usize] = cur;
            log[cur as usize] = i as u32;
            cur = mul(cur, primitive);
        }
        let neg: Vec<u32> = (0..q)
            .map(|a| from_digits(&digits(a as u64, p, n as usize).iter().map(|&d| (p - d) % p).collect::<Vec<_>>(), p))
            .collect();
        let add = if p != 2 && q <= ADD_TABLE_LIMIT {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = digit_add(a, b, p);
                }
            }
            t
        } else {
            Vec::new()
        };
        Field {
            inner: Arc::new(Inner { p, n, q, modulus, generator_name, exp, log, neg, add, divisors }),
        }
    }

    /// Same field with a different display name for the class of `x`.
    pub fn with_generator_name(&self, name: &str) -> Field {
        let i = &self.inner;
        Field {
            inner: Arc::new(Inner {
                p: i.p,
                n: i.n,
                q: i.q,
                modulus: i.modulus.clone(),
                generator_name: name.to_string(),
                exp: i.exp.clone(),
                log: i.log.clone(),
                neg: i.neg.clone(),
                add: i.add.clone(),
                divisors: i.divisors.clone(),
            }),
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.inner.p
    }

    pub fn degree(&self) -> u32 {
        self.inner.n
    }

    pub fn order(&self) -> u32 {
        self.inner.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn generator_name(&self) -> &str {
        &self.inner.generator_name
    }

    /// `p^n:c0,c1,…,cn`
    pub fn spec_string(&self) -> String {
        let coeffs: Vec<String> = self.inner.modulus.iter().map(|c| c.to_string()).collect();
        format!("{}^{}:{}", self.inner.p, self.inner.n, coeffs.join(","))
    }

    pub fn element(&self, code: u64) -> Result<Elem> {
        if code >= self.inner.q as u64 {
            return Err(Error::InvalidElement { code, q: self.inner.q });
        }
        Ok(Elem(code as u32))
    }

    /// All `q` elements in increasing code order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.inner.q).map(Elem)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (1..self.inner.q).map(Elem)
    }

    /// Coordinates over GF(p) in the polynomial basis (length `n`).
    pub fn coeffs(&self, a: Elem) -> Vec<u32> {
        digits(a.0 as u64, self.inner.p, self.inner.n as usize)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Elem> {
        if coeffs.len() > self.inner.n as usize {
            return Err(Error::Parse(format!("expected at most {} coordinates", self.inner.n)));
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c >= self.inner.p) {
            return Err(Error::InvalidElement { code: c as u64, q: self.inner.q });
        }
        Ok(Elem(from_digits(coeffs, self.inner.p)))
    }

    /// Class of `x`, a root of the modulus.
    pub fn generator(&self) -> Elem {
        if self.inner.n > 1 {
            Elem(self.inner.p)
        } else {
            self.neg(Elem(self.inner.modulus[0]))
        }
    }

    /// The generator of the multiplicative group used for the log tables.
    pub fn primitive_element(&self) -> Elem {
        Elem(self.inner.exp[1 % self.inner.exp.len()])
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let i = &*self.inner;
        if i.p == 2 {
            Elem(a.0 ^ b.0)
        } else if !i.add.is_empty() {
            Elem(i.add[(a.0 * i.q + b.0) as usize])
        } else {
            Elem(digit_add(a.0, b.0, i.p))
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.inner.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        let i = &*self.inner;
        Elem(i.exp[(i.log[a.0 as usize] + i.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.inv_nonzero(a))
    }

    #[inline]
    pub(crate) fn inv_nonzero(&self, a: Elem) -> Elem {
        debug_assert!(!a.is_zero());
        let i = &*self.inner;
        let order = i.q - 1;
        Elem(i.exp[((order - i.log[a.0 as usize]) % order) as usize])
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e`, with `0^0 = 1`.
    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        let i = &*self.inner;
        let order = (i.q - 1) as u64;
        let l = i.log[a.0 as usize] as u64;
        Elem(i.exp[((l * (e % order)) % order) as usize])
    }

    /// Integer multiple `k·a` (k taken mod p).
    pub fn scalar(&self, k: u64, a: Elem) -> Elem {
        let k = (k % self.inner.p as u64) as u32;
        let mut acc = Elem::ZERO;
        for _ in 0..k {
            acc = self.add(acc, a);
        }
        acc
    }

    /// Smallest `r ≥ 1` with `a^r = 1`, found by trying the divisors of
    /// `q − 1` in increasing order.
    pub fn mult_order(&self, a: Elem) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        Ok(*self
            .inner
            .divisors
            .iter()
            .find(|&&d| self.pow(a, d) == Elem::ONE)
            .expect("q - 1 annihilates every unit"))
    }

    /// `a^(p^k)`
    pub fn frobenius(&self, a: Elem, k: u32) -> Elem {
        if a.is_zero() {
            return a;
        }
        let i = &*self.inner;
        let order = (i.q - 1) as u64;
        if order == 1 {
            return a;
        }
        let e = mod_pow(i.p as u64, (k % i.n) as u64, order);
        let l = i.log[a.0 as usize] as u64;
        Elem(i.exp[((l * e) % order) as usize])
    }

    /// Whether `a` is fixed by `a ↦ a^(p^k)`.
    pub fn is_fixed(&self, a: Elem, k: u32) -> bool {
        self.frobenius(a, k) == a
    }

    /// Order of the automorphism `a ↦ a^(p^k)`: `n / gcd(n, k)`.
    pub fn automorphism_order(&self, k: u32) -> u32 {
        self.inner.n / gcd(self.inner.n as u64, k as u64) as u32
    }

    /// The unique square root in characteristic 2, `a^(q/2)`.
    pub fn sqrt_char2(&self, a: Elem) -> Result<Elem> {
        if self.inner.p != 2 {
            return Err(Error::OddCharacteristic(self.inner.p));
        }
        Ok(self.pow(a, (self.inner.q / 2) as u64))
    }

    /// Renders `a` as a polynomial in the generator, highest power first
    /// (e.g. `b^3+b^2+1`). Prime-field elements render as integers.
    pub fn render(&self, a: Elem) -> String {
        let i = &*self.inner;
        if i.n == 1 {
            return a.0.to_string();
        }
        if a.is_zero() {
            return "0".into();
        }
        let g = &i.generator_name;
        let mut terms = Vec::new();
        for (k, c) in self.coeffs(a).into_iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coef = if c == 1 && k > 0 { String::new() } else { c.to_string() };
            terms.push(match k {
                0 => coef,
                1 => format!("{coef}{g}"),
                _ => format!("{coef}{g}^{k}"),
            });
        }
        terms.join("+")
    }

    /// Parses either a plain integer code or a `+`-separated polynomial in
    /// the generator name, e.g. `b^3+b^2+b+1` or `2b^2+1`. Exponents may
    /// exceed `n − 1`.
    pub fn parse_element(&self, s: &str) -> Result<Elem> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        let g = self.inner.generator_name.as_str();
        if !s.contains(g) || self.inner.n == 1 {
            if let Ok(code) = s.parse::<u64>() {
                return if self.inner.n == 1 {
                    Ok(Elem((code % self.inner.p as u64) as u32))
                } else {
                    self.element(code)
                };
            }
        }
        let x = self.generator();
        let mut acc = Elem::ZERO;
        for term in s.split('+') {
            let (coef, power) = match term.find(g) {
                None => (term, 0u64),
                Some(pos) => {
                    let rest = &term[pos + g.len()..];
                    let e = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .and_then(|e| e.parse::<u64>().ok())
                            .ok_or_else(|| Error::Parse(format!("bad term `{term}`")))?
                    };
                    (&term[..pos], e)
                }
            };
            let c = if coef.is_empty() {
                1
            } else {
                coef.parse::<u64>().map_err(|_| Error::Parse(format!("bad coefficient in `{term}`")))?
            };
            acc = self.add(acc, self.scalar(c, self.pow(x, power)));
        }
        Ok(acc)
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts a registry name (`F16`), a field order (`25`), or the
    /// explicit form `p^n:c0,c1,…,cn`.
    fn from_str(s: &str) -> Result<Field> {
        let s = s.trim();
        if let Some(f) = registry_field(s) {
            return Ok(f);
        }
        if let Ok(q) = s.parse::<u64>() {
            return Field::with_order(q);
        }
        Field::parse_explicit(s)
    }
}

impl Field {
    /// Parses `p^n:c0,c1,…,cn` without consulting the registry.
    pub(crate) fn parse_explicit(s: &str) -> Result<Field> {
        let (pn, coeffs) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("unrecognised field `{s}`")))?;
        let (p, n) = match pn.split_once('^') {
            Some((p, n)) => (p, n),
            None => (pn, "1"),
        };
        let p: u64 = p.trim().parse().map_err(|_| Error::Parse(format!("bad characteristic in `{s}`")))?;
        let n: u32 = n.trim().parse().map_err(|_| Error::Parse(format!("bad degree in `{s}`")))?;
        let modulus = coeffs
            .split(',')
            .map(|c| c.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(format!("bad modulus in `{s}`")))?;
        Field::new(p, n, &modulus)
    }
}

fn default_generator_name(n: u32) -> String {
    if n == 1 { String::new() } else { "x".into() }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// `(p, n)` with `q = p^n`, if `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let (mut rest, mut n) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        n += 1;
    }
    (rest == 1).then_some((p, n))
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).take_while(|d| d * d <= n).filter(|d| n % d == 0).flat_map(|d| [d, n / d]).collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn digits(mut code: u64, p: u32, n: usize) -> Vec<u32> {
    let mut out = vec![0; n];
    for d in out.iter_mut() {
        *d = (code % p as u64) as u32;
        code /= p as u64;
    }
    out
}

fn from_digits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn digit_add(mut a: u32, mut b: u32, p: u32) -> u32 {
    let (mut out, mut place) = (0, 1);
    while a > 0 || b > 0 {
        out += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    out
}

/// Product of two codes by schoolbook multiplication modulo the modulus.
fn slow_mul(a: u32, b: u32, p: u32, n: u32, modulus: &[u32]) -> u32 {
    let n = n as usize;
    let (da, db) = (digits(a as u64, p, n), digits(b as u64, p, n));
    let mut prod = vec![0u64; 2 * n - 1];
    for (i, &x) in da.iter().enumerate() {
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    for k in (n..prod.len()).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        for (i, &m) in modulus.iter().enumerate().take(n) {
            let idx = k - n + i;
            prod[idx] = (prod[idx] + (p as u64 - c) * m as u64) % p as u64;
        }
        prod[k] = 0;
    }
    let low: Vec<u32> = prod[..n].iter().map(|&c| c as u32).collect();
    from_digits(&low, p)
}

/// Remainder of `a` modulo the monic `b` over GF(p).
fn fp_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let db = b.len() - 1;
    while r.len() > db {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if c != 0 {
            for (i, &bc) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p as u64 - c) * bc as u64) % p as u64;
            }
        }
        r.pop();
    }
    r.into_iter().map(|c| c as u32).collect()
}

/// A monic divisor of degree in `[1, deg/2]`, if any, by exhaustive trial.
fn small_factor_mod_p(f: &[u32], p: u32) -> Option<Vec<u32>> {
    let n = f.len() - 1;
    for d in 1..=n / 2 {
        for code in 0..(p as u64).pow(d as u32) {
            let mut cand = digits(code, p, d);
            cand.push(1);
            if fp_rem(f, &cand, p).iter().all(|&c| c == 0) {
                return Some(cand);
            }
        }
    }
    None
}
