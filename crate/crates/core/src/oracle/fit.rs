use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::osalg::format_weight;
use crate::rings::{projective_at, projective_size, Matrix, Ring, Scalar, Subspace};

/// Exponent vectors of the degree-`d` monomials in `vars` variables, in
/// lexicographically decreasing order (`x0^d` first).
pub fn monomials(vars: usize, d: usize) -> Vec<Vec<usize>> {
    fn rec(vars: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() + 1 == vars {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e);
            rec(vars, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if vars > 0 {
        rec(vars, d, &mut Vec::new(), &mut out);
    }
    out
}

fn power(ring: &Ring, a: &Scalar, e: usize) -> Scalar {
    (0..e).fold(ring.one(), |acc, _| ring.mul(&acc, a))
}

fn monomial_values(ring: &Ring, point: &[Scalar], monos: &[Vec<usize>]) -> Vec<Scalar> {
    monos
        .iter()
        .map(|m| m.iter().zip(point).fold(ring.one(), |acc, (&e, x)| ring.mul(&acc, &power(ring, x, e))))
        .collect()
}

/// Degree-`d` forms on `P^m` vanishing on a point set.
#[derive(Clone, Debug, Serialize)]
pub struct FormFit {
    pub ring: String,
    pub ambient_dim: usize,
    pub degree: usize,
    pub points: usize,
    pub monomials: usize,
    pub dim: usize,
    /// Coefficient vectors on the monomials, in echelon form.
    pub basis: Vec<String>,
    #[serde(skip)]
    pub forms: Vec<Vec<Scalar>>,
    #[serde(skip)]
    pub exponents: Vec<Vec<usize>>,
}

impl FormFit {
    pub fn evaluate(&self, ring: &Ring, form: &[Scalar], point: &[Scalar]) -> Scalar {
        let vals = monomial_values(ring, point, &self.exponents);
        ring.sum(vals.iter().zip(form).map(|(v, c)| ring.mul(v, c)).collect::<Vec<_>>().iter())
    }
}

/// Null space of the evaluation matrix (points × monomials).
pub fn fit_forms(ring: &Ring, points: &[Vec<Scalar>], d: usize) -> Result<FormFit> {
    if !ring.is_field() {
        return Err(Error::NotAField { op: "form fitting", ring: ring.to_string() });
    }
    let Some(first) = points.first() else {
        return Err(Error::Degenerate("no points to fit".into()));
    };
    let vars = first.len();
    if vars == 0 || points.iter().any(|p| p.len() != vars) {
        return Err(Error::Length { expected: vars, got: points.iter().map(Vec::len).find(|&l| l != vars).unwrap_or(0) });
    }
    let exps = monomials(vars, d);
    let rows: Vec<Vec<Scalar>> = points.iter().map(|p| monomial_values(ring, p, &exps)).collect();
    let kernel = Matrix::from_rows(ring, exps.len(), rows)?.kernel_field()?;
    let forms = kernel.basis().to_vec();
    Ok(FormFit {
        ring: ring.to_string(),
        ambient_dim: vars - 1,
        degree: d,
        points: points.len(),
        monomials: exps.len(),
        dim: forms.len(),
        basis: forms.iter().map(|f| format_weight(ring, f)).collect(),
        forms,
        exponents: exps,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SpanFit {
    /// Input points lying outside the span.
    pub outside_span: usize,
    pub fit: FormFit,
    /// Points of `P(span)` where the first basis form vanishes.
    pub zeros: usize,
    /// Whether that zero set is exactly the input.
    pub cuts_out_points: bool,
    /// More than one independent form survived.
    pub escalation_needed: bool,
}

fn normalize(field: &Ring, v: &mut [Scalar]) {
    if let Some(lead) = v.iter().find(|a| !field.is_zero(a)).cloned() {
        let inv = field.inv(&lead).expect("field");
        for a in v.iter_mut() {
            *a = field.mul(a, &inv);
        }
    }
}

/// Fits degree-`d` forms to `points` after moving them into coordinates of
/// `span`, then compares the zero set of the first form on `P(span)` with
/// the points.
pub fn fit_in_span(field: &Ring, points: &[&Vec<Scalar>], span: &Subspace, d: usize) -> Result<SpanFit> {
    let mut inside: Vec<Vec<Scalar>> = Vec::with_capacity(points.len());
    let mut outside_span = 0;
    for p in points {
        match span.coordinates(p) {
            Some(mut c) => {
                normalize(field, &mut c);
                inside.push(c);
            }
            None => outside_span += 1,
        }
    }
    let fit = fit_forms(field, &inside, d)?;
    let (zeros, cuts_out_points) = match fit.forms.first() {
        Some(form) => {
            let dim = span.dim();
            let want: HashSet<Vec<Scalar>> = inside.iter().cloned().collect();
            let mut zeros = 0;
            let mut same = outside_span == 0;
            for i in 0..projective_size(field, dim)? {
                let p = projective_at(field, dim, i);
                if field.is_zero(&fit.evaluate(field, form, &p)) {
                    zeros += 1;
                    same &= want.contains(&p);
                }
            }
            (zeros, same && zeros == want.len())
        }
        None => (0, false),
    };
    Ok(SpanFit { outside_span, escalation_needed: fit.dim > 1, zeros, cuts_out_points, fit })
}
