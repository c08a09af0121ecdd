//! Pairs of vectors: 2x2 minors, parallelism and linear dependence.

use super::ring::{Ring, RingSpec, Scalar};
use crate::error::{Error, Result};

fn check_pair(ring: &Ring, xi: &[Scalar], nu: &[Scalar]) -> Result<()> {
    if xi.len() != nu.len() {
        return Err(Error::Length { expected: xi.len(), got: nu.len() });
    }
    ring.check(xi)?;
    ring.check(nu)
}

/// Index of the pair `(i, j)`, `i < j`, in the order `(0,1), (0,2), ..., (n-2,n-1)`.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// The `C(n,2)` minors `xi_i nu_j - xi_j nu_i` for `i < j`, in pair order.
pub fn minors2(ring: &Ring, xi: &[Scalar], nu: &[Scalar]) -> Result<Vec<Scalar>> {
    check_pair(ring, xi, nu)?;
    let n = xi.len();
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            out.push(ring.det2(&xi[i], &xi[j], &nu[i], &nu[j]));
        }
    }
    Ok(out)
}

pub fn minor(ring: &Ring, xi: &[Scalar], nu: &[Scalar], i: usize, j: usize) -> Scalar {
    ring.det2(&xi[i], &xi[j], &nu[i], &nu[j])
}

pub fn is_parallel(ring: &Ring, xi: &[Scalar], nu: &[Scalar]) -> Result<bool> {
    check_pair(ring, xi, nu)?;
    let n = xi.len();
    for i in 0..n {
        for j in i + 1..n {
            if !ring.is_zero(&minor(ring, xi, nu, i, j)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A nontrivial `(a, b)` with `a xi + b nu = 0`, if one exists.
///
/// The witness follows the annihilator argument: `r` annihilates every
/// minor, and then either `r xi = 0` or `(-r nu_i) xi + (r xi_i) nu = 0` for
/// an index with `r xi_i != 0`.
pub fn dependence_relation(ring: &Ring, xi: &[Scalar], nu: &[Scalar]) -> Result<Option<(Scalar, Scalar)>> {
    let minors = minors2(ring, xi, nu)?;
    let r = match ring.spec() {
        RingSpec::Rationals | RingSpec::PrimeField { .. } | RingSpec::ExtensionField { .. } => {
            if minors.iter().all(|m| ring.is_zero(m)) {
                ring.one()
            } else {
                return Ok(None);
            }
        }
        RingSpec::IntegersMod { .. } => match ring.common_annihilator(&minors) {
            Some(r) => r,
            None => return Ok(None),
        },
    };
    let rxi: Vec<Scalar> = xi.iter().map(|x| ring.mul(&r, x)).collect();
    let rel = match rxi.iter().position(|x| !ring.is_zero(x)) {
        None => (r, ring.zero()),
        Some(i) => (ring.neg(&ring.mul(&r, &nu[i])), rxi[i].clone()),
    };
    debug_assert!(xi
        .iter()
        .zip(nu)
        .all(|(x, y)| ring.is_zero(&ring.add(&ring.mul(&rel.0, x), &ring.mul(&rel.1, y)))));
    Ok(Some(rel))
}

pub fn are_dependent(ring: &Ring, xi: &[Scalar], nu: &[Scalar]) -> Result<bool> {
    Ok(dependence_relation(ring, xi, nu)?.is_some())
}
