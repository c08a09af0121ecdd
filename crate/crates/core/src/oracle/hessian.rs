use std::collections::BTreeMap;

use serde::Serialize;

use crate::catalog::catalog;
use crate::error::{Error, Result};
use crate::linegeom::{directrices, DirectrixArrangement};
use crate::neighborly::Graph;
use crate::rings::{Ring, Scalar, Subspace};

use super::fit::{fit_in_span, SpanFit};
use super::scan::scan_component;

/// The component of the Hessian configuration built from the four blocks
/// `123|456|789|αβγ`.
pub fn hessian_graph() -> Graph {
    Graph::parse(12, "123|456|789|αβγ").expect("fixed graph")
}

#[derive(Clone, Debug, Serialize)]
pub struct HessianReport {
    pub ring: String,
    pub dim_k: usize,
    pub directrix_dims: Vec<usize>,
    pub meet_dims: Vec<usize>,
    pub meets_span_dim: usize,
    pub join_dim: usize,
    pub strata: BTreeMap<usize, usize>,
    pub carrier: usize,
    pub depth2_points: usize,
    pub depth2_in_meet_plane: bool,
    /// Rough projective dimension of the carrier, `log_q` of its size.
    pub carrier_dim_estimate: f64,
    /// Depth through the directrix cones agrees with `dim Z_Γ - 1` on every point checked.
    pub depth_checked: usize,
    pub depth_agrees: bool,
    pub cubic: Option<SpanFit>,
    pub elapsed_ms: u128,
}

fn pairwise_meets(arr: &DirectrixArrangement) -> Result<Vec<Subspace>> {
    let ms = arr.members();
    let mut out = Vec::new();
    for i in 0..ms.len() {
        for j in i + 1..ms.len() {
            out.push(ms[i].space.meet(&ms[j].space)?);
        }
    }
    Ok(out)
}

/// Scans `P(K)` for the Hessian component over `field` and checks the
/// directrix configuration. `depth_sample` caps the number of points on
/// which the cone depth is recomputed; `cubic` fits degree-3 forms to the
/// carrier inside the join of the directrices.
pub fn hessian_check(field: &Ring, cap: u128, depth_sample: usize, cubic: bool) -> Result<HessianReport> {
    let start = std::time::Instant::now();
    let q = field
        .cardinality()
        .filter(|_| field.is_field())
        .ok_or_else(|| Error::NotAField { op: "hessian check", ring: field.to_string() })?;
    let m = catalog("hessian")?;
    let g = hessian_graph();
    let arr = directrices(&g, &m, field)?;
    let meets = pairwise_meets(&arr)?;
    let meet_span = meets
        .iter()
        .try_fold(Subspace::zero(field, arr.dim_k()), |acc, s| acc.join(s))?;
    let join = arr.join_all()?;
    let scan = scan_component(&g, &m, field, cap)?;

    let depth2: Vec<&Vec<Scalar>> = scan.stratum(3).collect();
    let depth2_in_meet_plane = depth2.iter().all(|p| meet_span.contains(p));

    let stride = (scan.points.len() / depth_sample.max(1)).max(1);
    let mut depth_checked = 0;
    let mut depth_agrees = true;
    for (p, dim) in scan.points.iter().step_by(stride) {
        depth_checked += 1;
        depth_agrees &= arr.depth(p)? + 1 == *dim;
    }

    let cubic = if cubic { Some(fit_in_span(field, &scan.carrier_points().collect::<Vec<_>>(), &join, 3)?) } else { None };

    Ok(HessianReport {
        ring: field.to_string(),
        dim_k: arr.dim_k(),
        directrix_dims: arr.members().iter().map(|d| d.space.dim()).collect(),
        meet_dims: meets.iter().map(Subspace::dim).collect(),
        meets_span_dim: meet_span.dim(),
        join_dim: join.dim(),
        carrier_dim_estimate: (scan.carrier as f64).ln() / (q as f64).ln(),
        strata: scan.strata.clone(),
        carrier: scan.carrier,
        depth2_points: depth2.len(),
        depth2_in_meet_plane,
        depth_checked,
        depth_agrees,
        cubic,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::make_ring;

    #[test]
    fn over_f3() {
        let r = hessian_check(&make_ring("F3").unwrap(), super::super::DEFAULT_CAP, usize::MAX, false).unwrap();
        assert_eq!(r.dim_k, 6);
        assert_eq!(r.directrix_dims, vec![3, 3, 3, 3]);
        assert_eq!(r.meet_dims, vec![1; 6]);
        assert_eq!(r.meets_span_dim, 3);
        assert_eq!(r.join_dim, 5);
        assert!(r.carrier > 0);
        assert!(r.depth2_points > 0);
        assert!(r.depth2_in_meet_plane);
        assert!(r.depth_agrees);
        assert_eq!(r.depth_checked, 364);
    }
}
