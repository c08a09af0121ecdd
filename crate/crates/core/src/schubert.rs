//! The Chow ring of the Grassmannian `G(2, k)` of lines in `P^{k-1}`.
//!
//! Classes are integer combinations of `W(i1, i2)` with
//! `k - 2 >= i1 >= i2 >= 0`, codimension `i1 + i2`. Products reduce to the
//! Pieri rule and `W(1,1) W(a,b) = W(a+1, b+1)` via
//! `W(a,b) = W(1,1)^b W(a-b, 0)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Shape(pub usize, pub usize);

impl Shape {
    pub fn codim(self) -> usize {
        self.0 + self.1
    }

    pub fn admissible(self, k: usize) -> bool {
        k >= 2 && self.0 <= k - 2 && self.1 <= self.0
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W({},{})", self.0, self.1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchubertClass {
    k: usize,
    terms: BTreeMap<Shape, BigInt>,
}

fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::Hypothesis(format!("G(2,{k}) needs k >= 2")));
    }
    Ok(())
}

impl SchubertClass {
    pub fn zero(k: usize) -> Result<SchubertClass> {
        check_k(k)?;
        Ok(SchubertClass { k, terms: BTreeMap::new() })
    }

    /// The class `W(a, b)`.
    pub fn shape(k: usize, a: usize, b: usize) -> Result<SchubertClass> {
        check_k(k)?;
        let s = Shape(a, b);
        if !s.admissible(k) {
            return Err(Error::Hypothesis(format!("{s} is not a shape in G(2,{k})")));
        }
        let mut c = SchubertClass::zero(k)?;
        c.terms.insert(s, BigInt::one());
        Ok(c)
    }

    /// The unit `W(0,0)`.
    pub fn one(k: usize) -> Result<SchubertClass> {
        SchubertClass::shape(k, 0, 0)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> &BTreeMap<Shape, BigInt> {
        &self.terms
    }

    pub fn coefficient(&self, s: Shape) -> BigInt {
        self.terms.get(&s).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, s: Shape, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(s).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&s);
        }
    }

    pub fn add(&self, other: &SchubertClass) -> Result<SchubertClass> {
        self.same_k(other)?;
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(*s, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> SchubertClass {
        let mut out = SchubertClass { k: self.k, terms: BTreeMap::new() };
        for (s, v) in &self.terms {
            out.add_term(*s, v * c);
        }
        out
    }

    fn same_k(&self, other: &SchubertClass) -> Result<()> {
        if self.k != other.k {
            return Err(Error::Hypothesis(format!("G(2,{}) vs G(2,{})", self.k, other.k)));
        }
        Ok(())
    }

    /// `W(s,0) · self`: add `s` boxes, no two in one column.
    pub fn pieri(&self, s: usize) -> SchubertClass {
        let top = self.k - 2;
        let mut out = SchubertClass { k: self.k, terms: BTreeMap::new() };
        if s > top {
            return out;
        }
        for (&Shape(a, b), coef) in &self.terms {
            for d in b..=a {
                let c = a + b + s - d;
                if c >= a && c <= top {
                    out.add_term(Shape(c, d), coef.clone());
                }
            }
        }
        out
    }

    /// `W(1,1) · self`.
    pub fn dual_pieri(&self) -> SchubertClass {
        let mut out = SchubertClass { k: self.k, terms: BTreeMap::new() };
        for (&Shape(a, b), coef) in &self.terms {
            let s = Shape(a + 1, b + 1);
            if s.admissible(self.k) {
                out.add_term(s, coef.clone());
            }
        }
        out
    }

    pub fn product(&self, other: &SchubertClass) -> Result<SchubertClass> {
        self.same_k(other)?;
        let mut out = SchubertClass { k: self.k, terms: BTreeMap::new() };
        for (&Shape(a, b), coef) in &other.terms {
            let mut t = self.pieri(a - b);
            for _ in 0..b {
                t = t.dual_pieri();
            }
            out = out.add(&t.scale(coef))?;
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<SchubertClass> {
        (0..e).try_fold(SchubertClass::one(self.k)?, |acc, _| acc.product(self))
    }

    /// Codimension of each term, when homogeneous.
    pub fn codim(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|s| s.codim());
        let first = it.next()?;
        it.all(|c| c == first).then_some(first)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .rev()
            .map(|(s, c)| {
                let coef = match c.to_i64() {
                    Some(v) => serde_json::Value::from(v),
                    None => serde_json::Value::from(c.to_string()),
                };
                serde_json::json!({ "shape": [s.0, s.1], "coefficient": coef })
            })
            .collect();
        serde_json::json!({ "k": self.k, "terms": terms })
    }

    /// Terms only, without the Grassmannian suffix.
    pub fn terms_string(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (s, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            if !mag.is_one() {
                out.push_str(&format!("{mag}*"));
            }
            out.push_str(&s.to_string());
        }
        out
    }
}

impl fmt::Display for SchubertClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [G(2,{})]", self.terms_string(), self.k)
    }
}

/// Outcome of the carrier degree formula, with the hypotheses it rests on.
#[derive(Clone, Debug, Serialize)]
pub struct CarrierDegree {
    pub k: usize,
    /// `c(D) = codim D - 1` for each directrix.
    pub classes: Vec<usize>,
    /// Expected codimension of `L` in `G(2,k)`.
    pub codim_l: usize,
    pub dim_l: usize,
    pub depth: usize,
    pub dim_carrier: usize,
    /// `c(D₀)` for a general subspace `D₀` of codimension `dim |L|`.
    pub c_d0: usize,
    pub target: Shape,
    pub product: String,
    pub degree: String,
    pub assumes_proper_intersection: bool,
    pub assumes_generic_transversality: bool,
}

/// `deg |L|` from `W(c(D₀),0) · Π W(c(D),0) = deg |L| · W(k-2, k-1-depth)`,
/// where `codim D` is taken in `K ≅ R^k`, `dim L = 2(k-2) - Σ c(D)` and
/// `dim |L| = dim L - depth + 2`.
pub fn carrier_degree(directrix_codims: &[usize], k: usize, depth: usize) -> Result<(CarrierDegree, BigInt)> {
    check_k(k)?;
    let top = k - 2;
    let classes: Vec<usize> = directrix_codims
        .iter()
        .map(|&c| {
            if c == 0 || c > k {
                Err(Error::Hypothesis(format!("directrix codimension {c} outside 1..={k}")))
            } else {
                Ok(c - 1)
            }
        })
        .collect::<Result<_>>()?;
    let codim_l: usize = classes.iter().sum();
    if codim_l > 2 * top {
        return Err(Error::Hypothesis(format!("Σ c(D) = {codim_l} exceeds dim G(2,{k}) = {}", 2 * top)));
    }
    let dim_l = 2 * top - codim_l;
    if depth == 0 || depth > dim_l + 1 {
        return Err(Error::Hypothesis(format!("depth {depth} outside 1..={}", dim_l + 1)));
    }
    let dim_carrier = dim_l + 2 - depth;
    if dim_carrier == 0 || dim_carrier > k - 1 {
        return Err(Error::Hypothesis(format!("expected carrier dimension {dim_carrier} outside 1..={}", k - 1)));
    }
    let c_d0 = dim_carrier - 1;
    let target = Shape(top, k - 1 - depth);
    if !target.admissible(k) {
        return Err(Error::Hypothesis(format!("target {target} is not a shape in G(2,{k})")));
    }
    let mut prod = SchubertClass::one(k)?;
    for &c in classes.iter().chain(std::iter::once(&c_d0)) {
        prod = prod.pieri(c);
    }
    let degree = prod.coefficient(target);
    let report = CarrierDegree {
        k,
        classes,
        codim_l,
        dim_l,
        depth,
        dim_carrier,
        c_d0,
        target,
        product: prod.to_string(),
        degree: degree.to_string(),
        assumes_proper_intersection: true,
        assumes_generic_transversality: true,
    };
    Ok((report, degree))
}
