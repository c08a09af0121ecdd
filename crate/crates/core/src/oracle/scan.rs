use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::neighborly::{generic_graph, Component, Graph};
use crate::osalg::{coefficient_sum, format_weight, minor_graph, resonant_partner, z_of};
use crate::rings::{projective_at, projective_size, space_size, vector_at, Kernel, Ring, Scalar};

/// Default bound on membership tests per scan.
pub const DEFAULT_CAP: u128 = 100_000_000;

/// `RESONANCE_LAB_CAP` if set and valid, else [`DEFAULT_CAP`].
pub fn cap_from_env() -> u128 {
    std::env::var("RESONANCE_LAB_CAP").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_CAP)
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanPoint {
    pub weight: String,
    /// `dim Z(λ)` over a field.
    pub dim_z: Option<usize>,
    /// `Γ_λ` over a field; the graph of the pair with the partner found over `Z/N`.
    pub graph: String,
    /// A partner `η` (over `Z/N`) witnessing resonance.
    pub partner: Option<String>,
    pub sum_is_zero_divisor: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphGroup {
    pub graph: String,
    pub points: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub matroid: String,
    pub ring: String,
    /// `projective` (one weight per line through 0) or `affine` (all nonzero weights).
    pub universe: &'static str,
    pub scanned: u128,
    pub cap: u128,
    pub resonant: usize,
    pub dim_histogram: BTreeMap<usize, usize>,
    pub groups: Vec<GraphGroup>,
    pub points: Vec<ScanPoint>,
    #[serde(skip)]
    pub weights: Vec<Vec<Scalar>>,
    pub elapsed_ms: u128,
}

/// Classifies every nonzero weight: over a field one representative per
/// projective class, by `dim Z(λ) >= 2`; over `Z/N` every weight, by the
/// generator criterion.
pub fn scan_resonance(m: &Matroid, ring: &Ring, cap: u128) -> Result<ScanReport> {
    let start = Instant::now();
    let n = m.n();
    let field = ring.is_field();
    let total = if field { projective_size(ring, n)? } else { space_size(ring, n)? - 1 };
    if total > cap {
        return Err(Error::CapExceeded { size: total, cap });
    }
    let weight_at = |i: u128| if field { projective_at(ring, n, i) } else { vector_at(ring, n, i + 1) };
    let found: Vec<(Vec<Scalar>, ScanPoint)> = (0..total)
        .into_par_iter()
        .map(|i| -> Result<Option<(Vec<Scalar>, ScanPoint)>> {
            let lambda = weight_at(i);
            let all: Vec<usize> = (0..n).collect();
            let zd = ring.is_zero_divisor(&coefficient_sum(ring, &lambda, &all));
            if field {
                let Kernel::Field(z) = z_of(m, ring, &lambda)? else { unreachable!() };
                if z.dim() < 2 {
                    return Ok(None);
                }
                let g = generic_graph(&lambda, m, ring)?;
                let p = ScanPoint {
                    weight: format_weight(ring, &lambda),
                    dim_z: Some(z.dim()),
                    graph: g.to_string(),
                    partner: None,
                    sum_is_zero_divisor: zd,
                };
                Ok(Some((lambda, p)))
            } else {
                let Some(eta) = resonant_partner(m, ring, &lambda)? else { return Ok(None) };
                let g = minor_graph(ring, &lambda, &eta)?;
                let p = ScanPoint {
                    weight: format_weight(ring, &lambda),
                    dim_z: None,
                    graph: g.to_string(),
                    partner: Some(format_weight(ring, &eta)),
                    sum_is_zero_divisor: zd,
                };
                Ok(Some((lambda, p)))
            }
        })
        .filter_map(|r| r.transpose())
        .collect::<Result<_>>()?;

    let mut dim_histogram = BTreeMap::new();
    let mut groups: BTreeMap<String, usize> = BTreeMap::new();
    for (_, p) in &found {
        if let Some(d) = p.dim_z {
            *dim_histogram.entry(d).or_insert(0) += 1;
        }
        *groups.entry(p.graph.clone()).or_insert(0) += 1;
    }
    let (weights, points): (Vec<_>, Vec<_>) = found.into_iter().unzip();
    Ok(ScanReport {
        matroid: m.name().to_string(),
        ring: ring.to_string(),
        universe: if field { "projective" } else { "affine" },
        scanned: total,
        cap,
        resonant: points.len(),
        dim_histogram,
        groups: groups.into_iter().map(|(graph, points)| GraphGroup { graph, points }).collect(),
        points,
        weights,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentScan {
    pub graph: String,
    pub ring: String,
    pub dim_k: usize,
    pub scanned: u128,
    /// Projective points of `P(K)` by `dim Z_Γ(ξ)`.
    pub strata: BTreeMap<usize, usize>,
    /// Points with `dim Z_Γ >= 2`, i.e. of depth at least one.
    pub carrier: usize,
    #[serde(skip)]
    pub points: Vec<(Vec<Scalar>, usize)>,
    pub elapsed_ms: u128,
}

impl ComponentScan {
    /// `K`-coordinates of the carrier points.
    pub fn carrier_points(&self) -> impl Iterator<Item = &Vec<Scalar>> {
        self.points.iter().filter(|(_, d)| *d >= 2).map(|(p, _)| p)
    }

    /// Points whose `dim Z_Γ` equals `dim`.
    pub fn stratum(&self, dim: usize) -> impl Iterator<Item = &Vec<Scalar>> {
        self.points.iter().filter(move |(_, d)| *d == dim).map(|(p, _)| p)
    }
}

/// Every projective point of `K(Γ)` over `F_q`, classified by `dim Z_Γ(ξ)`.
/// Points are given in coordinates of the basis of `K`.
pub fn scan_component(graph: &Graph, m: &Matroid, field: &Ring, cap: u128) -> Result<ComponentScan> {
    let start = Instant::now();
    let comp = Component::new(m, graph, field)?;
    let d = comp.k_space()?.dim();
    let total = projective_size(field, d)?;
    if total > cap {
        return Err(Error::CapExceeded { size: total, cap });
    }
    let points: Vec<(Vec<Scalar>, usize)> = (0..total)
        .into_par_iter()
        .map(|i| {
            let c = projective_at(field, d, i);
            let dim = comp.dim_z_gamma_coords(&c)?;
            Ok((c, dim))
        })
        .collect::<Result<_>>()?;
    let mut strata = BTreeMap::new();
    for (_, dim) in &points {
        *strata.entry(*dim).or_insert(0) += 1;
    }
    Ok(ComponentScan {
        graph: graph.to_string(),
        ring: field.to_string(),
        dim_k: d,
        scanned: total,
        carrier: points.iter().filter(|(_, dim)| *dim >= 2).count(),
        strata,
        points,
        elapsed_ms: start.elapsed().as_millis(),
    })
}
