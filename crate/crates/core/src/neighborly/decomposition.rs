use rayon::prelude::*;
use serde::Serialize;

use super::component::Component;
use super::enumerate::{enumerate_neighborly, ConeChoice, EnumMode, EnumOptions};
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::osalg::{format_weight, is_resonant};
use crate::rings::{projective_at, projective_size, Ring};

#[derive(Clone, Debug, Serialize)]
pub struct GraphCount {
    pub graph: String,
    pub dim_k: Option<usize>,
    pub points: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    pub matroid: String,
    pub ring: String,
    pub scanned: u128,
    pub resonant: usize,
    pub union: usize,
    pub graphs: Vec<GraphCount>,
    /// Resonant points covered by no component.
    pub missing: Vec<String>,
    /// Points of some component that are not resonant.
    pub extra: Vec<String>,
    pub nested_pairs: usize,
    pub nesting_violations: usize,
    pub equal: bool,
}

/// Compares the projective points of `R¹` over a finite field with the
/// union of the components `V¹(Γ)` over all neighborly partitions, and
/// checks monotonicity on every comparable pair of graphs.
pub fn decomposition_check(m: &Matroid, field: &Ring, cap: u128) -> Result<DecompositionReport> {
    if !field.is_field() || field.cardinality().is_none() {
        return Err(Error::Unsupported { op: "decomposition check", ring: field.to_string() });
    }
    let n = m.n();
    let total = projective_size(field, n)?;
    if total > cap {
        return Err(Error::CapExceeded { size: total, cap });
    }
    let options = EnumOptions { mode: EnumMode::Partitions, cone: ConeChoice::Any, cap, ..Default::default() };
    let graphs = enumerate_neighborly(m, field, &options)?;
    let comps: Vec<Component> = graphs.iter().map(|g| Component::new(m, g, field)).collect::<Result<_>>()?;

    let rows: Vec<(bool, Vec<bool>)> = (0..total)
        .into_par_iter()
        .map(|i| -> Result<(bool, Vec<bool>)> {
            let lambda = projective_at(field, n, i);
            let res = is_resonant(m, field, &lambda)?;
            let member = comps.iter().map(|c| c.v1_contains(&lambda, cap)).collect::<Result<Vec<_>>>()?;
            Ok((res, member))
        })
        .collect::<Result<_>>()?;

    let mut missing = Vec::new();
    let mut extra = Vec::new();
    let mut resonant = 0;
    let mut union = 0;
    for (i, (res, member)) in rows.iter().enumerate() {
        let covered = member.iter().any(|&b| b);
        resonant += usize::from(*res);
        union += usize::from(covered);
        if *res != covered {
            let w = format_weight(field, &projective_at(field, n, i as u128));
            if *res { missing.push(w) } else { extra.push(w) }
        }
    }

    let xmasks: Vec<u64> = graphs.iter().map(|g| g.x_gamma_mask(m)).collect();
    let mut nested_pairs = 0;
    let mut nesting_violations = 0;
    for (a, ga) in graphs.iter().enumerate() {
        for (b, gb) in graphs.iter().enumerate() {
            // Γ' = gb ⊆ Γ = ga with X_Γ' ⊆ X_Γ.
            if a == b || !gb.is_subgraph_of(ga) || xmasks[b] & !xmasks[a] != 0 {
                continue;
            }
            nested_pairs += 1;
            nesting_violations += rows.iter().filter(|(_, mem)| mem[a] && !mem[b]).count();
        }
    }

    let graph_counts = graphs
        .iter()
        .zip(&comps)
        .enumerate()
        .map(|(t, (g, c))| GraphCount {
            graph: g.to_string(),
            dim_k: c.dim_k(),
            points: rows.iter().filter(|(_, mem)| mem[t]).count(),
        })
        .collect();
    Ok(DecompositionReport {
        matroid: m.name().to_string(),
        ring: field.to_string(),
        scanned: total,
        resonant,
        union,
        graphs: graph_counts,
        equal: missing.is_empty() && extra.is_empty(),
        missing,
        extra,
        nested_pairs,
        nesting_violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::rings::make_ring;

    #[test]
    fn nonfano_over_f2() {
        let r = decomposition_check(&catalog("nonfano").unwrap(), &make_ring("F2").unwrap(), 1 << 20).unwrap();
        assert!(r.equal, "{r:?}");
        assert_eq!(r.nesting_violations, 0);
        assert!(r.graphs.iter().any(|g| g.graph == "127|3|4|5|6" && g.points > 0));
    }

    #[test]
    fn pencil_over_f2() {
        let r = decomposition_check(&catalog("pencil-4").unwrap(), &make_ring("F2").unwrap(), 1 << 20).unwrap();
        assert!(r.equal);
        // λ ≠ 0 with λ_[4] = 0: seven points, all resonant.
        assert_eq!(r.resonant, 7);
    }
}
