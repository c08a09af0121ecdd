//! Simple matroids of rank at most three, given by their nontrivial lines.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::notation::format_set;
use crate::rings::{Matrix, Ring};

/// Largest ground set supported; point sets are held as `u64` masks.
pub const MAX_POINTS: usize = 64;

/// On-disk form: 1-indexed nontrivial lines.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatroidFile {
    #[serde(default)]
    pub name: String,
    pub n: usize,
    pub lines: Vec<Vec<usize>>,
}

/// A simple matroid of rank <= 3 on `{0, .., n-1}`, described by its
/// nontrivial lines (every pair of points not on one of them spans a
/// trivial two-point line).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matroid {
    name: String,
    n: usize,
    lines: Vec<Vec<usize>>,
    masks: Vec<u64>,
    /// `pair_line[i * n + j]`: index of the nontrivial line through `i, j`.
    pair_line: Vec<Option<usize>>,
}

impl Matroid {
    /// Validates and builds a matroid from 0-based nontrivial lines.
    pub fn from_lines(name: impl Into<String>, n: usize, lines: Vec<Vec<usize>>) -> Result<Matroid> {
        if n > MAX_POINTS {
            return Err(Error::Matroid(format!("at most {MAX_POINTS} points are supported, got {n}")));
        }
        let mut lines: Vec<Vec<usize>> = lines
            .into_iter()
            .map(|mut l| {
                l.sort_unstable();
                l
            })
            .collect();
        lines.sort();
        let mut pair_line: Vec<Option<usize>> = vec![None; n * n];
        let mut masks = Vec::with_capacity(lines.len());
        for (idx, line) in lines.iter().enumerate() {
            if line.len() < 3 {
                return Err(Error::Matroid(format!("line {} has fewer than three points", show(line))));
            }
            if line.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Matroid(format!("line {} repeats a point", show(line))));
            }
            if let Some(&p) = line.iter().find(|&&p| p >= n) {
                return Err(Error::Matroid(format!("point {} is out of range 1..={n}", p + 1)));
            }
            for (a, &i) in line.iter().enumerate() {
                for &j in &line[a + 1..] {
                    if let Some(other) = pair_line[i * n + j] {
                        return Err(Error::Matroid(format!(
                            "lines {} and {} share two points",
                            show(lines[other].as_slice()),
                            show(line)
                        )));
                    }
                    pair_line[i * n + j] = Some(idx);
                    pair_line[j * n + i] = Some(idx);
                }
            }
            masks.push(line.iter().fold(0u64, |m, &p| m | 1 << p));
        }
        Ok(Matroid { name: name.into(), n, lines, masks, pair_line })
    }

    pub fn from_file(file: MatroidFile) -> Result<Matroid> {
        let lines = file
            .lines
            .into_iter()
            .map(|l| {
                l.into_iter()
                    .map(|p| {
                        p.checked_sub(1)
                            .ok_or_else(|| Error::Matroid("points are 1-indexed".into()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Matroid::from_lines(file.name, file.n, lines)
    }

    pub fn from_json(text: &str) -> Result<Matroid> {
        Matroid::from_file(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Matroid> {
        Matroid::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_file(&self) -> MatroidFile {
        MatroidFile {
            name: self.name.clone(),
            n: self.n,
            lines: self.lines.iter().map(|l| l.iter().map(|p| p + 1).collect()).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("matroid serializes")
    }

    /// The rank-two matroid on `n` points: a single line.
    pub fn pencil(n: usize) -> Result<Matroid> {
        let lines = if n >= 3 { vec![(0..n).collect()] } else { Vec::new() };
        Matroid::from_lines(format!("pencil-{n}"), n, lines)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        match self.n {
            0 => 0,
            1 => 1,
            2 => 2,
            n if self.lines.len() == 1 && self.lines[0].len() == n => 2,
            _ => 3,
        }
    }

    /// Nontrivial lines, sorted; each line sorted ascending.
    pub fn nontrivial_lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    pub fn nontrivial_masks(&self) -> &[u64] {
        &self.masks
    }

    /// Pairs `{i, j}` lying on no nontrivial line.
    pub fn trivial_lines(&self) -> Vec<[usize; 2]> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.pair_line[i * n + j].is_none() {
                    out.push([i, j]);
                }
            }
        }
        out
    }

    /// All lines, trivial and nontrivial, in lexicographic order.
    pub fn all_lines(&self) -> Vec<Vec<usize>> {
        let mut all: Vec<Vec<usize>> = self.lines.clone();
        all.extend(self.trivial_lines().into_iter().map(|p| p.to_vec()));
        all.sort();
        all
    }

    /// The line spanned by two distinct points.
    pub fn line_of(&self, i: usize, j: usize) -> Vec<usize> {
        assert!(i != j && i < self.n && j < self.n, "line_of needs two distinct points");
        match self.pair_line[i * self.n + j] {
            Some(idx) => self.lines[idx].clone(),
            None => vec![i.min(j), i.max(j)],
        }
    }

    pub fn nontrivial_line_through(&self, i: usize, j: usize) -> Option<usize> {
        self.pair_line[i * self.n + j]
    }

    /// Sum of `|X| - 1` over all lines: the rank of `A^2` of the
    /// Orlik-Solomon algebra.
    pub fn whitney2(&self) -> usize {
        let covered: usize = self.lines.iter().map(|l| l.len() * (l.len() - 1) / 2).sum();
        let trivial = self.n * self.n.saturating_sub(1) / 2 - covered;
        self.lines.iter().map(|l| l.len() - 1).sum::<usize>() + trivial
    }

    /// 0/1 incidence matrix with one row per selected line.
    pub fn incidence_matrix(&self, lines: &[Vec<usize>], ring: &Ring) -> Matrix {
        let rows: Vec<Vec<i64>> = lines
            .iter()
            .map(|l| (0..self.n).map(|p| i64::from(l.contains(&p))).collect())
            .collect();
        if rows.is_empty() {
            return Matrix::zeros(ring, 0, self.n);
        }
        Matrix::from_i64(ring, &rows)
    }
}

fn show(line: &[usize]) -> String {
    format_set(line)
}

impl fmt::Display for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self.lines.iter().map(|l| format_set(l)).collect();
        write!(f, "{} (n={}, rank {}): {}", self.name, self.n, self.rank(), lines.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse_set;

    fn lines(spec: &str) -> Vec<Vec<usize>> {
        spec.split_whitespace().map(|s| parse_set(s).unwrap()).collect()
    }

    /// Pairs not covered by any listed line, found by direct count.
    fn uncovered(n: usize, ls: &[Vec<usize>]) -> Vec<[usize; 2]> {
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !ls.iter().any(|l| l.contains(&i) && l.contains(&j)) {
                    out.push([i, j]);
                }
            }
        }
        out
    }

    #[test]
    fn three_point_line_is_rank_two() {
        let m = Matroid::from_lines("", 3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(m.rank(), 2);
        assert!(m.trivial_lines().is_empty());
    }

    #[test]
    fn nonfano_trivial_lines() {
        let ls = lines("136 145 235 246 347 567");
        let m = Matroid::from_lines("nonfano", 7, ls.clone()).unwrap();
        let expect = vec![[0, 1], [0, 6], [1, 6]];
        assert_eq!(uncovered(7, &ls), expect);
        assert_eq!(m.trivial_lines(), expect);
        assert_eq!(m.line_of(0, 2), vec![0, 2, 5]);
        assert_eq!(m.line_of(0, 1), vec![0, 1]);
    }

    #[test]
    fn deleted_b3_trivial_lines() {
        let ls = lines("128 136 147 235 246 348 5678");
        let m = Matroid::from_lines("deletedB3", 8, ls.clone()).unwrap();
        let expect: Vec<[usize; 2]> = vec![[0, 4], [1, 6], [2, 6], [3, 4]];
        assert_eq!(uncovered(8, &ls), expect);
        assert_eq!(m.trivial_lines(), expect);
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(Matroid::from_lines("", 5, vec![vec![0, 1, 2], vec![0, 1, 3]]).is_err());
        assert!(Matroid::from_lines("", 3, vec![vec![0, 1, 3]]).is_err());
        assert!(Matroid::from_lines("", 3, vec![vec![0, 1]]).is_err());
    }

    #[test]
    fn pencil_lines() {
        let m = Matroid::pencil(5).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.line_of(1, 3), vec![0, 1, 2, 3, 4]);
        assert_eq!(m.whitney2(), 4);
    }

    #[test]
    fn json_roundtrip() {
        let m = Matroid::from_lines("x", 4, vec![vec![0, 1, 2]]).unwrap();
        let back = Matroid::from_json(&m.to_json()).unwrap();
        assert_eq!(m, back);
        assert!(m.to_json().contains("\"lines\""));
    }

    #[test]
    fn empty_selection_incidence() {
        let q = Ring::new(crate::rings::RingSpec::Rationals).unwrap();
        let m = Matroid::pencil(4).unwrap();
        let a = m.incidence_matrix(&[], &q);
        assert_eq!((a.rows(), a.cols()), (0, 4));
        assert_eq!(a.kernel_field().unwrap().dim(), 4);
    }
}
