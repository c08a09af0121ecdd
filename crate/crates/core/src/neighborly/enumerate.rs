use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::component::{k_for_lines, Component, KGamma};
use super::graph::{mask_of, members, Graph, NeighborlyMode};
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::rings::Ring;

pub const MAX_PARTITION_POINTS: usize = 12;
pub const MAX_GRAPH_POINTS: usize = 8;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EnumMode {
    /// Graphs transitive on their non-cone vertices.
    #[default]
    Partitions,
    /// Every graph containing the trivial lines.
    AllGraphs,
}

/// Cone vertices allowed in partitions mode.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum ConeChoice {
    #[default]
    Any,
    Exactly(Vec<usize>),
}

#[derive(Clone, Debug)]
pub struct EnumOptions {
    pub mode: EnumMode,
    pub cone: ConeChoice,
    pub neighborly: NeighborlyMode,
    /// Bound on the number of candidate graphs (and on scans over `Z/N`).
    pub cap: u128,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            mode: EnumMode::Partitions,
            cone: ConeChoice::Any,
            neighborly: NeighborlyMode::CliqueClosure,
            cap: crate::oracle::DEFAULT_CAP,
        }
    }
}

fn bell(n: usize) -> u128 {
    // Bell triangle.
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            let v = next.last().unwrap() + x;
            next.push(v);
        }
        row = next;
    }
    row[0]
}

/// Set partitions of `items` as restricted growth strings, calling `f` with
/// the blocks of each.
fn for_each_partition(items: &[usize], f: &mut impl FnMut(&[u64])) {
    fn rec(items: &[usize], pos: usize, blocks: &mut Vec<u64>, f: &mut impl FnMut(&[u64])) {
        if pos == items.len() {
            f(blocks);
            return;
        }
        let bit = 1u64 << items[pos];
        for b in 0..blocks.len() {
            blocks[b] |= bit;
            rec(items, pos + 1, blocks, f);
            blocks[b] &= !bit;
        }
        blocks.push(bit);
        rec(items, pos + 1, blocks, f);
        blocks.pop();
    }
    rec(items, 0, &mut Vec::new(), f);
}

fn partition_graph(n: usize, cone: u64, blocks: &[u64]) -> Graph {
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut adj = vec![0u64; n];
    for &b in blocks {
        for v in members(b) {
            adj[v] = (b | cone) & !(1 << v);
        }
    }
    for v in members(cone) {
        adj[v] = all & !(1 << v);
    }
    Graph::from_adjacency(n, adj)
}

/// Candidate graphs (neighborly, not complete) before the ring condition.
pub fn neighborly_candidates(m: &Matroid, options: &EnumOptions) -> Result<Vec<Graph>> {
    let n = m.n();
    let lines: Vec<u64> = m.all_lines().iter().map(|l| mask_of(l)).collect();
    let mode = options.neighborly;
    let mut out = match options.mode {
        EnumMode::Partitions => {
            if n > MAX_PARTITION_POINTS {
                return Err(Error::CapExceeded { size: bell(n + 1), cap: bell(MAX_PARTITION_POINTS + 1) });
            }
            let cones: Vec<u64> = match &options.cone {
                ConeChoice::Exactly(c) => {
                    if let Some(&v) = c.iter().find(|&&v| v >= n) {
                        return Err(Error::Parse(format!("cone vertex {} out of range", v + 1)));
                    }
                    vec![mask_of(c)]
                }
                ConeChoice::Any => (0..1u64 << n).collect(),
            };
            let size: u128 = cones.iter().map(|c| bell(n - c.count_ones() as usize)).sum();
            if size > options.cap {
                return Err(Error::CapExceeded { size, cap: options.cap });
            }
            cones
                .par_iter()
                .flat_map_iter(|&cone| {
                    let rest: Vec<usize> = (0..n).filter(|&v| cone >> v & 1 == 0).collect();
                    let mut found = Vec::new();
                    for_each_partition(&rest, &mut |blocks| {
                        if blocks.len() < 2 {
                            return;
                        }
                        let g = partition_graph(n, cone, blocks);
                        if g.is_neighborly_masks(&lines, mode) {
                            found.push(g);
                        }
                    });
                    found
                })
                .collect::<Vec<_>>()
        }
        EnumMode::AllGraphs => {
            if n > MAX_GRAPH_POINTS {
                return Err(Error::CapExceeded { size: 1u128 << (n * (n - 1) / 2).min(127), cap: options.cap });
            }
            let free: Vec<(usize, usize)> = m
                .nontrivial_lines()
                .iter()
                .flat_map(|l| {
                    let l = l.clone();
                    (0..l.len()).flat_map(move |a| {
                        let l = l.clone();
                        (a + 1..l.len()).map(move |b| (l[a], l[b]))
                    })
                })
                .collect();
            let size = 1u128 << free.len();
            if size > options.cap {
                return Err(Error::CapExceeded { size, cap: options.cap });
            }
            let mut base = Graph::empty(n)?;
            for [i, j] in m.trivial_lines() {
                base.add_edge(i, j);
            }
            (0..size as u64)
                .into_par_iter()
                .filter_map(|bits| {
                    let mut g = base.clone();
                    for (t, &(i, j)) in free.iter().enumerate() {
                        if bits >> t & 1 == 1 {
                            g.add_edge(i, j);
                        }
                    }
                    (!g.is_complete() && g.is_neighborly_masks(&lines, mode)).then_some(g)
                })
                .collect()
        }
    };
    out.retain(|g| !g.is_complete());
    out.sort_by_key(|g| (g.edge_count(), g.edges()));
    out.dedup();
    Ok(out)
}

/// `NG(G, R)` (or `NP(G, R)` in partitions mode): candidates for which
/// `K(Γ, R)` contains two non-parallel vectors.
pub fn enumerate_neighborly(m: &Matroid, ring: &Ring, options: &EnumOptions) -> Result<Vec<Graph>> {
    let candidates = neighborly_candidates(m, options)?;
    let mut masks: Vec<u64> = candidates.iter().map(|g| g.x_gamma_mask(m)).collect();
    masks.sort_unstable();
    masks.dedup();
    let lines = m.nontrivial_lines();
    let verdicts: Vec<(u64, bool)> = masks
        .par_iter()
        .map(|&mask| -> Result<(u64, bool)> {
            let xg: Vec<Vec<usize>> = members(mask).iter().map(|&i| lines[i].clone()).collect();
            let ok = match k_for_lines(m, ring, &xg)? {
                KGamma::Field(s) => s.dim() >= 2,
                KGamma::ModN { .. } => {
                    let witness = candidates.iter().find(|g| g.x_gamma_mask(m) == mask).expect("mask from a candidate");
                    Component::new(m, witness, ring)?.k_has_nonparallel_pair(options.cap)?
                }
            };
            Ok((mask, ok))
        })
        .collect::<Result<_>>()?;
    let keep: HashMap<u64, bool> = verdicts.into_iter().collect();
    Ok(candidates.into_iter().filter(|g| keep[&g.x_gamma_mask(m)]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::rings::make_ring;

    #[test]
    fn bell_numbers() {
        assert_eq!((0..8).map(bell).collect::<Vec<_>>(), vec![1, 1, 2, 5, 15, 52, 203, 877]);
        let mut count = 0;
        for_each_partition(&[0, 1, 2, 3, 4], &mut |_| count += 1);
        assert_eq!(count, 52);
    }

    #[test]
    fn braid_partitions() {
        let m = catalog("braid-K4").unwrap();
        let f2 = make_ring("F2").unwrap();
        let opts = EnumOptions { cone: ConeChoice::Exactly(vec![]), ..Default::default() };
        let gs = enumerate_neighborly(&m, &f2, &opts).unwrap();
        let shown: Vec<String> = gs.iter().map(|g| g.to_string()).collect();
        assert!(shown.contains(&"12|34|56".to_string()), "{shown:?}");
    }

    #[test]
    fn deleted_b3_has_no_essential_partition() {
        let m = catalog("deletedB3").unwrap();
        let q = make_ring("Q").unwrap();
        let opts = EnumOptions { cone: ConeChoice::Exactly(vec![]), ..Default::default() };
        assert!(enumerate_neighborly(&m, &q, &opts).unwrap().is_empty());
    }

    #[test]
    fn pencil_local_component() {
        let m = catalog("pencil-4").unwrap();
        let f3 = make_ring("F3").unwrap();
        let opts = EnumOptions { cone: ConeChoice::Exactly(vec![]), ..Default::default() };
        let gs = enumerate_neighborly(&m, &f3, &opts).unwrap();
        assert!(gs.iter().any(|g| g.edge_count() == 0));
        let c = Component::new(&m, &Graph::empty(4).unwrap(), &f3).unwrap();
        assert_eq!(c.dim_k(), Some(3));
    }

    #[test]
    fn all_graphs_contain_partitions() {
        let m = catalog("nonfano").unwrap();
        let f2 = make_ring("F2").unwrap();
        let parts = enumerate_neighborly(&m, &f2, &EnumOptions::default()).unwrap();
        let all =
            enumerate_neighborly(&m, &f2, &EnumOptions { mode: EnumMode::AllGraphs, ..Default::default() }).unwrap();
        assert!(parts.iter().all(|g| all.contains(g)));
        assert!(all.len() >= parts.len());
        assert!(parts.iter().any(|g| g.to_string() == "127|3|4|5|6"));
    }

    #[test]
    fn caps_are_errors() {
        let m = catalog("hessian").unwrap();
        let f3 = make_ring("F3").unwrap();
        let opts = EnumOptions { cap: 1000, ..Default::default() };
        assert!(matches!(enumerate_neighborly(&m, &f3, &opts), Err(Error::CapExceeded { .. })));
        let opts = EnumOptions { mode: EnumMode::AllGraphs, ..Default::default() };
        assert!(enumerate_neighborly(&m, &f3, &opts).is_err());
    }
}
