use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::{Matroid, MAX_POINTS};
use crate::notation::{format_set, parse_set};

/// Which reading of neighborliness to apply.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NeighborlyMode {
    /// For every line `X` and `i ∈ X`: if `X - {i}` is a clique, so is `X`.
    #[default]
    CliqueClosure,
    /// For every line `X` and block `S`: `|X ∩ S| >= |X| - 1` forces `X ⊆ S`.
    StrictBlock,
}

/// Simple graph on `{0, .., n-1}` held as adjacency bitmasks.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

pub(crate) fn mask_of(set: &[usize]) -> u64 {
    set.iter().fold(0, |m, &p| m | 1 << p)
}

pub(crate) fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

impl Graph {
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_POINTS {
            return Err(Error::Parse(format!("graphs on more than {MAX_POINTS} vertices are not supported")));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        let all = g.full_mask();
        for v in 0..n {
            g.adj[v] = all & !(1 << v);
        }
        Ok(g)
    }

    /// Union of complete graphs on the given vertex sets.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for b in blocks {
            if let Some(&v) = b.iter().find(|&&v| v >= n) {
                return Err(Error::Parse(format!("vertex {} out of range 1..={n}", v + 1)));
            }
            let m = mask_of(b);
            for &v in b {
                g.adj[v] |= m & !(1 << v);
            }
        }
        Ok(g)
    }

    pub(crate) fn from_adjacency(n: usize, adj: Vec<u64>) -> Graph {
        Graph { n, adj }
    }

    /// Parses block notation such as `12|34|56` or `1457|27|37|67|78`.
    /// Vertices named in no block are isolated.
    pub fn parse(n: usize, s: &str) -> Result<Graph> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Graph::empty(n);
        }
        let blocks: Vec<Vec<usize>> = s.split('|').map(parse_set).collect::<Result<_>>()?;
        Graph::from_blocks(n, &blocks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        if i != j {
            self.adj[i] |= 1 << j;
            self.adj[j] |= 1 << i;
        }
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i] >> j & 1 == 1
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_clique_mask(&self, set: u64) -> bool {
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if set & !(self.adj[v] | 1 << v) != 0 {
                return false;
            }
        }
        true
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        self.is_clique_mask(mask_of(set))
    }

    /// Edge set containment.
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj.iter().zip(&other.adj).all(|(a, b)| a & !b == 0)
    }

    /// Maximal cliques, by Bron-Kerbosch with pivoting, sorted lexicographically.
    pub fn block_masks(&self) -> Vec<u64> {
        let mut out = Vec::new();
        self.bron_kerbosch(0, self.full_mask(), 0, &mut out);
        out.sort_by_key(|&m| members(m));
        out
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        self.block_masks().into_iter().map(members).collect()
    }

    fn bron_kerbosch(&self, r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
        if p == 0 {
            if x == 0 {
                out.push(r);
            }
            return;
        }
        let mut best = 0;
        let mut best_count = -1i32;
        let mut px = p | x;
        while px != 0 {
            let u = px.trailing_zeros() as usize;
            px &= px - 1;
            let c = (p & self.adj[u]).count_ones() as i32;
            if c > best_count {
                best_count = c;
                best = u;
            }
        }
        let mut cand = p & !self.adj[best];
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let bit = 1u64 << v;
            self.bron_kerbosch(r | bit, p & self.adj[v], x & self.adj[v], out);
            p &= !bit;
            x |= bit;
        }
    }

    /// Vertices adjacent to every other vertex.
    pub fn cone_vertices(&self) -> Vec<usize> {
        let all = self.full_mask();
        (0..self.n).filter(|&v| self.adj[v] | 1 << v == all).collect()
    }

    /// Transitivity of the edge relation restricted to `set`.
    pub fn is_transitive_on(&self, set: &[usize]) -> bool {
        let m = mask_of(set);
        set.iter().all(|&j| {
            let nb = self.adj[j] & m;
            members(nb).iter().all(|&i| nb & !(1 << i) & !self.adj[i] == 0)
        })
    }

    /// Indices (into `m.nontrivial_lines()`) of the lines that are not cliques.
    pub fn x_gamma(&self, m: &Matroid) -> Vec<usize> {
        m.nontrivial_masks()
            .iter()
            .enumerate()
            .filter(|(_, &x)| !self.is_clique_mask(x))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn x_gamma_mask(&self, m: &Matroid) -> u64 {
        self.x_gamma(m).iter().fold(0, |acc, &i| acc | 1 << i)
    }

    pub fn is_neighborly(&self, m: &Matroid, mode: NeighborlyMode) -> bool {
        let lines: Vec<u64> = m.all_lines().iter().map(|l| mask_of(l)).collect();
        self.is_neighborly_masks(&lines, mode)
    }

    pub(crate) fn is_neighborly_masks(&self, lines: &[u64], mode: NeighborlyMode) -> bool {
        match mode {
            NeighborlyMode::CliqueClosure => lines.iter().all(|&x| {
                if self.is_clique_mask(x) {
                    return true;
                }
                let mut rest = x;
                while rest != 0 {
                    let i = rest.trailing_zeros();
                    rest &= rest - 1;
                    if self.is_clique_mask(x & !(1 << i)) {
                        return false;
                    }
                }
                true
            }),
            NeighborlyMode::StrictBlock => {
                let blocks = self.block_masks();
                lines.iter().all(|&x| {
                    let size = x.count_ones();
                    blocks.iter().all(|&s| (x & s).count_ones() + 1 < size || x & !s == 0)
                })
            }
        }
    }

    /// Edge list `15,27,...` with 1-based labels.
    pub fn edge_string(&self) -> String {
        let parts: Vec<String> = self.edges().iter().map(|&(i, j)| format_set(&[i, j])).collect();
        parts.join(",")
    }
}

impl fmt::Display for Graph {
    /// Block notation, e.g. `127|3|4|5|6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self.blocks().iter().map(|b| format_set(b)).collect();
        write!(f, "{}", blocks.join("|"))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({self})")
    }
}
