use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linegeom::DirectrixArrangement;
use crate::osalg::format_weight;
use crate::rings::{projective_at, projective_size, Ring, Scalar, Subspace};

pub const DEFAULT_SEED: u64 = 20_240_601;
const MAX_RESAMPLES: usize = 100;

#[derive(Clone, Debug, Serialize)]
pub struct RegulusReport {
    pub ring: String,
    pub seed: Option<u64>,
    pub resamples: usize,
    /// Bases of the three planes.
    pub planes: Vec<Vec<String>>,
    pub scanned: u128,
    pub carrier: usize,
    pub expected: u64,
    pub depth_histogram: BTreeMap<usize, usize>,
    pub carrier_depth_one: bool,
    pub matches: bool,
}

/// Three random pairwise-skew 2-planes in `F_q^4`; carrier and depth
/// of the complex of their common transversals.
pub fn regulus_check(field: &Ring, seed: u64) -> Result<RegulusReport> {
    let q = field
        .cardinality()
        .filter(|_| field.is_field())
        .ok_or_else(|| Error::NotAField { op: "regulus check", ring: field.to_string() })?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..MAX_RESAMPLES {
        let planes: Vec<Subspace> = (0..3)
            .map(|_| {
                let vecs = (0..2)
                    .map(|_| (0..4).map(|_| field.from_code(rng.gen_range(0..q))).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                Subspace::from_spanning(field, 4, vecs)
            })
            .collect::<Result<_>>()?;
        if skew_planes(&planes)? {
            let mut r = regulus_check_planes(field, planes)?;
            r.seed = Some(seed);
            r.resamples = attempt;
            return Ok(r);
        }
    }
    Err(Error::Degenerate(format!("no skew triple after {MAX_RESAMPLES} samples")))
}

fn skew_planes(planes: &[Subspace]) -> Result<bool> {
    if planes.len() != 3 || planes.iter().any(|p| p.ambient() != 4 || p.dim() != 2) {
        return Ok(false);
    }
    for i in 0..3 {
        for j in i + 1..3 {
            if planes[i].meet(&planes[j])?.dim() != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// As [`regulus_check`], for given planes; rejects any triple that is not
/// three pairwise-skew 2-dimensional subspaces of `F_q^4`.
pub fn regulus_check_planes(field: &Ring, planes: Vec<Subspace>) -> Result<RegulusReport> {
    let q = field
        .cardinality()
        .filter(|_| field.is_field())
        .ok_or_else(|| Error::NotAField { op: "regulus check", ring: field.to_string() })?;
    if !skew_planes(&planes)? {
        return Err(Error::Hypothesis("need three pairwise skew planes in dimension 4".into()));
    }
    let shown: Vec<Vec<String>> =
        planes.iter().map(|p| p.basis().iter().map(|b| format_weight(field, b)).collect()).collect();
    let arr = DirectrixArrangement::from_subspaces(field, 4, planes)?;
    let total = projective_size(field, 4)?;
    let mut depth_histogram = BTreeMap::new();
    let mut carrier = 0;
    let mut carrier_depth_one = true;
    for i in 0..total {
        let p: Vec<Scalar> = projective_at(field, 4, i);
        let d = arr.depth(&p)?;
        *depth_histogram.entry(d).or_insert(0) += 1;
        if d >= 1 {
            carrier += 1;
            carrier_depth_one &= d == 1;
        }
    }
    let expected = (q + 1) * (q + 1);
    Ok(RegulusReport {
        ring: field.to_string(),
        seed: None,
        resamples: 0,
        planes: shown,
        scanned: total,
        carrier,
        expected,
        depth_histogram,
        carrier_depth_one,
        matches: carrier as u64 == expected && carrier_depth_one,
    })
}
