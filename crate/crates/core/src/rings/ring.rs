//! Coefficient rings: prime fields, small extension fields, `Z/N` and `Q`.
//!
//! Scalars of the finite rings are stored as integer codes. For `F_p` and
//! `Z/N` the code is the residue in `[0, N)`; for `F_{p^k}` it is the base-`p`
//! encoding `c_0 + c_1 p + ... + c_{k-1} p^{k-1}` of the polynomial residue
//! `c_0 + c_1 x + ...` modulo the recorded irreducible modulus. Rationals are
//! reduced arbitrary-precision fractions.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Extension fields up to this size get precomputed addition and
/// multiplication tables.
const TABLE_LIMIT: u64 = 1024;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RingSpec {
    PrimeField { p: u32 },
    /// `modulus` holds the coefficients of the monic irreducible polynomial,
    /// constant term first, leading 1 last.
    ExtensionField { p: u32, k: u32, modulus: Vec<u32> },
    IntegersMod { n: u32 },
    Rationals,
}

impl RingSpec {
    pub fn characteristic(&self) -> u64 {
        match *self {
            RingSpec::PrimeField { p } | RingSpec::ExtensionField { p, .. } => p as u64,
            RingSpec::IntegersMod { n } => n as u64,
            RingSpec::Rationals => 0,
        }
    }

    /// `None` for the infinite ring `Q`.
    pub fn cardinality(&self) -> Option<u64> {
        match self {
            RingSpec::PrimeField { p } => Some(*p as u64),
            RingSpec::ExtensionField { p, k, .. } => Some((*p as u64).pow(*k)),
            RingSpec::IntegersMod { n } => Some(*n as u64),
            RingSpec::Rationals => None,
        }
    }

    pub fn is_field(&self) -> bool {
        match self {
            RingSpec::IntegersMod { n } => is_prime(*n as u64),
            _ => true,
        }
    }

    /// Every supported ring is either a field or a non-domain `Z/N`.
    pub fn is_domain(&self) -> bool {
        self.is_field()
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::PrimeField { p } => write!(f, "F{p}"),
            RingSpec::ExtensionField { p, k, modulus } => {
                let coeffs: Vec<String> = modulus.iter().map(|c| c.to_string()).collect();
                write!(f, "F{p}^{k}:{}", coeffs.join(","))
            }
            RingSpec::IntegersMod { n } => write!(f, "Z{n}"),
            RingSpec::Rationals => write!(f, "Q"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Residue(u32),
    Rational(BigRational),
}

impl Scalar {
    pub fn code(&self) -> Option<u32> {
        match self {
            Scalar::Residue(c) => Some(*c),
            Scalar::Rational(_) => None,
        }
    }
}

struct ExtTables {
    add: Vec<u32>,
    mul: Vec<u32>,
}

struct Inner {
    spec: RingSpec,
    /// Modulus for residue arithmetic (`p` for extension fields).
    modulus: u64,
    q: u64,
    tables: Option<ExtTables>,
    inverses: Vec<u32>,
}

/// A validated coefficient ring. Cheap to clone.
#[derive(Clone)]
pub struct Ring(Arc<Inner>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.0.spec == other.0.spec
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({})", self.0.spec)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.spec.fmt(f)
    }
}

impl FromStr for Ring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        make_ring(s)
    }
}

/// Parses `Q`, `F<q>`, `F<p>^<k>[:c0,c1,...,ck]` or `Z<N>`.
///
/// `F<q>` with `q = p^k`, `k > 1`, and `F<p>^<k>` without a modulus use the
/// least monic irreducible of degree `k`, ordered lexicographically on
/// `(c_{k-1}, ..., c_0)`.
pub fn make_ring(spec: &str) -> Result<Ring> {
    let bad = |reason: &str| Error::RingSpec { spec: spec.to_string(), reason: reason.to_string() };
    let s = spec.trim();
    if s == "Q" {
        return Ring::new(RingSpec::Rationals);
    }
    if let Some(rest) = s.strip_prefix('Z') {
        let n: u32 = rest.parse().map_err(|_| bad("expected Z<N>"))?;
        if n < 2 {
            return Err(bad("N must be at least 2"));
        }
        return Ring::new(RingSpec::IntegersMod { n });
    }
    let rest = s.strip_prefix('F').ok_or_else(|| bad("unknown ring kind"))?;
    let (body, modulus) = match rest.split_once(':') {
        Some((b, m)) => (b, Some(m)),
        None => (rest, None),
    };
    let (p, k) = match body.split_once('^') {
        Some((p, k)) => {
            let p: u32 = p.parse().map_err(|_| bad("expected F<p>^<k>"))?;
            let k: u32 = k.parse().map_err(|_| bad("expected F<p>^<k>"))?;
            if !is_prime(p as u64) {
                return Err(bad("characteristic is not prime"));
            }
            if k == 0 {
                return Err(bad("degree must be positive"));
            }
            (p, k)
        }
        None => {
            let q: u32 = body.parse().map_err(|_| bad("expected F<q>"))?;
            prime_power(q as u64).ok_or_else(|| bad("order is not a prime power"))?
        }
    };
    if (p as u64).checked_pow(k).map_or(true, |q| q > u32::MAX as u64) {
        return Err(bad("field too large"));
    }
    if k == 1 {
        if modulus.is_some() {
            return Err(bad("prime fields take no modulus"));
        }
        return Ring::new(RingSpec::PrimeField { p });
    }
    let modulus = match modulus {
        Some(m) => {
            let mut coeffs = m
                .split(',')
                .map(|c| c.trim().parse::<u32>().map_err(|_| bad("malformed modulus")))
                .collect::<Result<Vec<_>>>()?;
            if coeffs.len() == k as usize {
                coeffs.push(1);
            }
            if coeffs.len() != k as usize + 1 || coeffs[k as usize] != 1 {
                return Err(bad("modulus must be monic of degree k"));
            }
            if coeffs.iter().any(|&c| c >= p) {
                return Err(bad("modulus coefficients must lie in [0, p)"));
            }
            if !is_irreducible(&coeffs, p) {
                return Err(bad("modulus is reducible"));
            }
            coeffs
        }
        None => least_irreducible(p, k),
    };
    Ring::new(RingSpec::ExtensionField { p, k, modulus })
}

impl Ring {
    pub fn new(spec: RingSpec) -> Result<Ring> {
        let bad = |reason: &str| Error::RingSpec { spec: spec.to_string(), reason: reason.to_string() };
        let (modulus, q) = match &spec {
            RingSpec::PrimeField { p } => {
                if !is_prime(*p as u64) {
                    return Err(bad("characteristic is not prime"));
                }
                (*p as u64, *p as u64)
            }
            RingSpec::ExtensionField { p, k, modulus } => {
                if !is_prime(*p as u64) {
                    return Err(bad("characteristic is not prime"));
                }
                if modulus.len() != *k as usize + 1 || !is_irreducible(modulus, *p) {
                    return Err(bad("modulus is reducible"));
                }
                (*p as u64, (*p as u64).pow(*k))
            }
            RingSpec::IntegersMod { n } => {
                if *n < 2 {
                    return Err(bad("N must be at least 2"));
                }
                (*n as u64, *n as u64)
            }
            RingSpec::Rationals => (0, 0),
        };
        let mut inner = Inner { spec, modulus, q, tables: None, inverses: Vec::new() };
        if let RingSpec::ExtensionField { p, modulus, .. } = &inner.spec {
            if q <= TABLE_LIMIT {
                let qs = q as usize;
                let mut add = vec![0u32; qs * qs];
                let mut mul = vec![0u32; qs * qs];
                for a in 0..qs {
                    for b in 0..qs {
                        add[a * qs + b] = poly_add(a as u32, b as u32, *p, modulus.len() - 1);
                        mul[a * qs + b] = poly_mulmod(a as u32, b as u32, *p, modulus);
                    }
                }
                inner.tables = Some(ExtTables { add, mul });
            }
        }
        if let Some(t) = &inner.tables {
            let qs = q as usize;
            let mut inverses = vec![0u32; qs];
            for a in 1..qs {
                inverses[a] = (1..qs).find(|&b| t.mul[a * qs + b] == 1).unwrap_or(0) as u32;
            }
            inner.inverses = inverses;
        }
        Ok(Ring(Arc::new(inner)))
    }

    pub fn spec(&self) -> &RingSpec {
        &self.0.spec
    }

    pub fn characteristic(&self) -> u64 {
        self.0.spec.characteristic()
    }

    pub fn cardinality(&self) -> Option<u64> {
        self.0.spec.cardinality()
    }

    pub fn is_field(&self) -> bool {
        self.0.spec.is_field()
    }

    pub fn is_domain(&self) -> bool {
        self.0.spec.is_domain()
    }

    /// `Some(N)` for `Z/N` and prime fields, i.e. rings that are `Z/N` as sets.
    pub fn residue_modulus(&self) -> Option<u64> {
        match self.0.spec {
            RingSpec::PrimeField { p } => Some(p as u64),
            RingSpec::IntegersMod { n } => Some(n as u64),
            _ => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self.0.spec {
            RingSpec::Rationals => Scalar::Rational(BigRational::zero()),
            _ => Scalar::Residue(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self.0.spec {
            RingSpec::Rationals => Scalar::Rational(BigRational::one()),
            _ => Scalar::Residue(1),
        }
    }

    /// Image of an integer under `Z -> R`.
    pub fn from_i64(&self, v: i64) -> Scalar {
        match &self.0.spec {
            RingSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            RingSpec::ExtensionField { p, .. } => Scalar::Residue(v.rem_euclid(*p as i64) as u32),
            _ => Scalar::Residue(v.rem_euclid(self.0.modulus as i64) as u32),
        }
    }

    /// Element with the given code; fails outside `[0, q)` or over `Q`.
    pub fn from_code(&self, code: u64) -> Result<Scalar> {
        match self.0.q {
            0 => Ok(Scalar::Rational(BigRational::from_integer(BigInt::from(code)))),
            q if code < q => Ok(Scalar::Residue(code as u32)),
            _ => Err(Error::RingMismatch { ring: self.to_string() }),
        }
    }

    pub fn rational(&self, num: i64, den: i64) -> Result<Scalar> {
        match self.0.spec {
            RingSpec::Rationals if den != 0 => {
                Ok(Scalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den))))
            }
            _ => Err(Error::RingMismatch { ring: self.to_string() }),
        }
    }

    /// Parses an integer (reduced into the ring), `a/b` over `Q`, or an
    /// element code for extension fields.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let err = || Error::Parse(format!("`{s}` is not an element of {self}"));
        match &self.0.spec {
            RingSpec::Rationals => {
                let r = match s.split_once('/') {
                    Some((a, b)) => {
                        let a: BigInt = a.trim().parse().map_err(|_| err())?;
                        let b: BigInt = b.trim().parse().map_err(|_| err())?;
                        if b.is_zero() {
                            return Err(err());
                        }
                        BigRational::new(a, b)
                    }
                    None => BigRational::from_integer(s.parse().map_err(|_| err())?),
                };
                Ok(Scalar::Rational(r))
            }
            RingSpec::ExtensionField { .. } => {
                let code: u64 = s.parse().map_err(|_| err())?;
                self.from_code(code).map_err(|_| err())
            }
            _ => {
                let v: i64 = s.parse().map_err(|_| err())?;
                Ok(self.from_i64(v))
            }
        }
    }

    pub fn format_scalar(&self, a: &Scalar) -> String {
        match a {
            Scalar::Residue(c) => c.to_string(),
            Scalar::Rational(r) if r.is_integer() => r.numer().to_string(),
            Scalar::Rational(r) => format!("{}/{}", r.numer(), r.denom()),
        }
    }

    pub fn scalar_to_json(&self, a: &Scalar) -> serde_json::Value {
        match a {
            Scalar::Residue(c) => serde_json::Value::from(*c),
            Scalar::Rational(r) => match (r.is_integer(), r.numer().to_i64()) {
                (true, Some(v)) => serde_json::Value::from(v),
                _ => serde_json::Value::from(self.format_scalar(a)),
            },
        }
    }

    pub fn contains(&self, a: &Scalar) -> bool {
        match (a, self.0.q) {
            (Scalar::Rational(_), 0) => true,
            (Scalar::Residue(c), q) => q > 0 && (*c as u64) < q,
            _ => false,
        }
    }

    pub fn check(&self, v: &[Scalar]) -> Result<()> {
        if v.iter().all(|a| self.contains(a)) {
            Ok(())
        } else {
            Err(Error::RingMismatch { ring: self.to_string() })
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Residue(c) => *c == 0,
            Scalar::Rational(r) => r.is_zero(),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Residue(x), Scalar::Residue(y)) => Scalar::Residue(self.add_code(*x, *y)),
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            _ => mixed(),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Residue(x) => Scalar::Residue(self.neg_code(*x)),
            Scalar::Rational(x) => Scalar::Rational(-x),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(self.add_code(*x, self.neg_code(*y)))
            }
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x - y),
            _ => mixed(),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Residue(x), Scalar::Residue(y)) => Scalar::Residue(self.mul_code(*x, *y)),
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            _ => mixed(),
        }
    }

    /// `a*d - b*c`, the 2x2 determinant `|a b; c d|`.
    pub fn det2(&self, a: &Scalar, b: &Scalar, c: &Scalar, d: &Scalar) -> Scalar {
        self.sub(&self.mul(a, d), &self.mul(b, c))
    }

    pub fn sum<'a>(&self, items: impl IntoIterator<Item = &'a Scalar>) -> Scalar {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        match a {
            Scalar::Rational(r) => (!r.is_zero()).then(|| Scalar::Rational(r.recip())),
            Scalar::Residue(0) => None,
            Scalar::Residue(x) => {
                if !self.0.inverses.is_empty() {
                    return Some(Scalar::Residue(self.0.inverses[*x as usize]));
                }
                match self.0.spec {
                    RingSpec::ExtensionField { .. } => Some(Scalar::Residue(self.slow_inverse(*x))),
                    _ => mod_inverse(*x as u64, self.0.modulus).map(|v| Scalar::Residue(v as u32)),
                }
            }
        }
    }

    pub fn is_unit(&self, a: &Scalar) -> bool {
        match (a, &self.0.spec) {
            (Scalar::Residue(x), RingSpec::IntegersMod { n }) => (*x as u64).gcd(&(*n as u64)) == 1,
            _ => !self.is_zero(a),
        }
    }

    /// True iff `Ann(a) != 0`; zero counts as a zero divisor.
    pub fn is_zero_divisor(&self, a: &Scalar) -> bool {
        !self.is_unit(a)
    }

    /// A generator of the principal ideal `Ann(a)`.
    pub fn annihilator(&self, a: &Scalar) -> Scalar {
        self.common_annihilator(std::slice::from_ref(a)).unwrap_or_else(|| self.zero())
    }

    /// A nonzero generator of `Ann(a_1, ..., a_m)` if that ideal is nonzero.
    pub fn common_annihilator(&self, items: &[Scalar]) -> Option<Scalar> {
        match &self.0.spec {
            RingSpec::IntegersMod { n } => {
                let n = *n as u64;
                let g = items.iter().fold(n, |g, a| g.gcd(&(a.code().unwrap_or(0) as u64)));
                (g > 1).then(|| Scalar::Residue((n / g) as u32))
            }
            _ => items.iter().all(|a| self.is_zero(a)).then(|| self.one()),
        }
    }

    /// All elements in code order; `None` over `Q`.
    pub fn elements(&self) -> Option<impl Iterator<Item = Scalar> + Clone> {
        match self.0.q {
            0 => None,
            q => Some((0..q as u32).map(Scalar::Residue)),
        }
    }

    pub(crate) fn add_code(&self, x: u32, y: u32) -> u32 {
        match &self.0.tables {
            Some(t) => t.add[x as usize * self.0.q as usize + y as usize],
            None => match &self.0.spec {
                RingSpec::ExtensionField { p, k, .. } => poly_add(x, y, *p, *k as usize),
                _ => ((x as u64 + y as u64) % self.0.modulus) as u32,
            },
        }
    }

    pub(crate) fn neg_code(&self, x: u32) -> u32 {
        match &self.0.spec {
            RingSpec::ExtensionField { p, k, .. } => {
                let p = *p;
                let mut digits = to_digits(x, p, *k as usize);
                for d in &mut digits {
                    *d = (p - *d) % p;
                }
                from_digits(&digits, p)
            }
            _ => ((self.0.modulus - x as u64) % self.0.modulus) as u32,
        }
    }

    pub(crate) fn mul_code(&self, x: u32, y: u32) -> u32 {
        match &self.0.tables {
            Some(t) => t.mul[x as usize * self.0.q as usize + y as usize],
            None => match &self.0.spec {
                RingSpec::ExtensionField { p, modulus, .. } => poly_mulmod(x, y, *p, modulus),
                _ => ((x as u64 * y as u64) % self.0.modulus) as u32,
            },
        }
    }

    fn slow_inverse(&self, x: u32) -> u32 {
        match &self.0.spec {
            RingSpec::ExtensionField { .. } => {
                // x^(q-2)
                let mut e = self.0.q - 2;
                let mut base = x;
                let mut acc = 1u32;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = self.mul_code(acc, base);
                    }
                    base = self.mul_code(base, base);
                    e >>= 1;
                }
                acc
            }
            _ => mod_inverse(x as u64, self.0.modulus).unwrap_or(0) as u32,
        }
    }
}

fn mixed() -> Scalar {
    panic!("arithmetic on scalars from different ring kinds")
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

fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while q % p != 0 {
        p += 1;
    }
    let (mut rest, mut k) = (q, 0u32);
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p as u32, k))
}

pub(crate) fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    let (g, x, _) = xgcd(a as i128, n as i128);
    (g == 1).then(|| x.rem_euclid(n as i128) as u64)
}

/// Extended gcd on integers: returns `(g, s, t)` with `s*a + t*b = g >= 0`.
pub(crate) fn xgcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

fn to_digits(mut x: u32, p: u32, k: usize) -> Vec<u32> {
    let mut d = vec![0; k];
    for slot in d.iter_mut() {
        *slot = x % p;
        x /= p;
    }
    d
}

fn from_digits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn poly_add(x: u32, y: u32, p: u32, k: usize) -> u32 {
    let a = to_digits(x, p, k);
    let b = to_digits(y, p, k);
    let s: Vec<u32> = a.iter().zip(&b).map(|(u, v)| (u + v) % p).collect();
    from_digits(&s, p)
}

fn poly_mulmod(x: u32, y: u32, p: u32, modulus: &[u32]) -> u32 {
    let k = modulus.len() - 1;
    let a = to_digits(x, p, k);
    let b = to_digits(y, p, k);
    let p64 = p as u64;
    let mut prod = vec![0u64; 2 * k];
    for (i, &u) in a.iter().enumerate() {
        for (j, &v) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + u as u64 * v as u64) % p64;
        }
    }
    for deg in (k..2 * k).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        // x^deg = x^(deg-k) * x^k and x^k = -(m_0 + ... + m_{k-1} x^{k-1})
        prod[deg] = 0;
        for (i, &m) in modulus[..k].iter().enumerate() {
            let idx = deg - k + i;
            prod[idx] = (prod[idx] + c * (p64 - m as u64)) % p64;
        }
    }
    let digits: Vec<u32> = prod[..k].iter().map(|&c| c as u32).collect();
    from_digits(&digits, p)
}

/// Remainder of `f` modulo the monic `g`, coefficients constant-first.
fn poly_rem(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    let dg = g.len() - 1;
    let p64 = p as u64;
    while r.len() > dg {
        let lead = r.pop().unwrap_or(0) % p64;
        let shift = r.len() - dg;
        if lead != 0 {
            for (i, &gc) in g[..dg].iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p64 - lead) * gc as u64) % p64;
            }
        }
    }
    r.into_iter().map(|c| c as u32).collect()
}

/// Exhaustive search for a monic factor of degree `1..=deg/2`.
pub(crate) fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let k = modulus.len() - 1;
    if k == 0 || modulus[k] != 1 {
        return false;
    }
    for d in 1..=k / 2 {
        for code in 0..(p as u64).pow(d as u32) {
            let mut g = to_digits(code as u32, p, d);
            g.push(1);
            if poly_rem(modulus, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

pub(crate) fn least_irreducible(p: u32, k: u32) -> Vec<u32> {
    (0..(p as u64).pow(k))
        .map(|code| {
            let mut m = to_digits(code as u32, p, k as usize);
            m.push(1);
            m
        })
        .find(|m| is_irreducible(m, p))
        .expect("irreducible polynomials exist in every degree")
}
