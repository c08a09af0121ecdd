//! Indexed enumeration of `R^n` and of projective representatives over a
//! finite ring. Coordinate 0 is the most significant digit, so index order
//! is lexicographic in residue codes.

use super::{Ring, Scalar};
use crate::error::{Error, Result};

fn order(ring: &Ring) -> Result<u64> {
    ring.cardinality().ok_or_else(|| Error::Unsupported { op: "enumeration", ring: ring.to_string() })
}

fn pow(q: u64, e: usize) -> Option<u128> {
    (0..e).try_fold(1u128, |acc, _| acc.checked_mul(q as u128))
}

/// `|R|^n`, or an error when the ring is infinite or the count overflows.
pub fn space_size(ring: &Ring, n: usize) -> Result<u128> {
    let q = order(ring)?;
    pow(q, n).ok_or(Error::CapExceeded { size: u128::MAX, cap: u128::MAX })
}

/// The vector with index `idx` in `0..|R|^n`.
pub fn vector_at(ring: &Ring, n: usize, mut idx: u128) -> Vec<Scalar> {
    let q = ring.cardinality().expect("finite ring") as u128;
    let mut v = vec![Scalar::Residue(0); n];
    for slot in v.iter_mut().rev() {
        *slot = Scalar::Residue((idx % q) as u32);
        idx /= q;
    }
    v
}

/// Number of nonzero vectors over `F_q` whose first nonzero entry is 1.
pub fn projective_size(ring: &Ring, n: usize) -> Result<u128> {
    let q = order(ring)? as u128;
    if n == 0 {
        return Ok(0);
    }
    let full = space_size(ring, n)?;
    Ok((full - 1) / (q - 1))
}

/// The projective representative with index `idx`: representatives are
/// grouped by the position of their leading 1, earliest position first.
pub fn projective_at(ring: &Ring, n: usize, mut idx: u128) -> Vec<Scalar> {
    let q = ring.cardinality().expect("finite ring");
    for lead in 0..n {
        let block = pow(q, n - lead - 1).expect("size checked by caller");
        if idx < block {
            let mut v = vec![Scalar::Residue(0); n];
            v[lead] = Scalar::Residue(1);
            let tail = vector_at(ring, n - lead - 1, idx);
            v[lead + 1..].clone_from_slice(&tail);
            return v;
        }
        idx -= block;
    }
    panic!("projective index out of range")
}
