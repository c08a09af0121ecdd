//! Projective line geometry inside `K(Γ)` over a field: directrices,
//! depth, carriers and Plücker coordinates.
//!
//! Subspaces of `K` are held in the coordinates of the echelon basis of `K`
//! computed by [`Component`]; [`DirectrixArrangement::to_ambient`] maps back
//! to `R^n`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::neighborly::{Component, Graph};
use crate::notation::format_set;
use crate::osalg::format_weight;
use crate::rings::{is_parallel, minors2, Matrix, Ring, Scalar, Subspace};

#[derive(Clone, Debug)]
pub struct Directrix {
    /// Blocks `S` with this `D_S` (distinct blocks may give one subspace).
    pub blocks: Vec<Vec<usize>>,
    /// `D_S` in coordinates of the basis of `K`.
    pub space: Subspace,
}

#[derive(Clone, Debug)]
pub struct DirectrixArrangement {
    ring: Ring,
    k: Subspace,
    members: Vec<Directrix>,
}

/// `ξ ∗ D`, as the linear span `Rξ + D`.
pub fn join(xi: &[Scalar], d: &Subspace) -> Result<Subspace> {
    d.join_vector(xi)
}

pub fn join_sub(d: &Subspace, e: &Subspace) -> Result<Subspace> {
    d.join(e)
}

pub fn meet(d: &Subspace, e: &Subspace) -> Result<Subspace> {
    d.meet(e)
}

/// The arrangement `D_Γ` of directrices `D_S = {ξ ∈ K : ξ_i = 0, i ∈ S}`
/// over the blocks `S` of `Γ`.
pub fn directrices(graph: &Graph, m: &Matroid, ring: &Ring) -> Result<DirectrixArrangement> {
    if !ring.is_field() {
        return Err(Error::NotAField { op: "directrices", ring: ring.to_string() });
    }
    let comp = Component::new(m, graph, ring)?;
    let k = comp.k_space()?.clone();
    if k.dim() < 2 {
        return Err(Error::Degenerate(format!("dim K = {} < 2", k.dim())));
    }
    let d = k.dim();
    let mut members: Vec<Directrix> = Vec::new();
    for block in graph.blocks() {
        let rows: Vec<Vec<Scalar>> = block.iter().map(|&i| k.basis().iter().map(|b| b[i].clone()).collect()).collect();
        let space = Matrix::from_rows(ring, d, rows)?.kernel_field()?;
        match members.iter_mut().find(|m| m.space == space) {
            Some(existing) => existing.blocks.push(block),
            None => members.push(Directrix { blocks: vec![block], space }),
        }
    }
    Ok(DirectrixArrangement { ring: ring.clone(), k, members })
}

impl DirectrixArrangement {
    /// An arrangement of arbitrary subspaces of `R^k`, with `K = R^k`.
    pub fn from_subspaces(ring: &Ring, k: usize, spaces: Vec<Subspace>) -> Result<DirectrixArrangement> {
        if !ring.is_field() {
            return Err(Error::NotAField { op: "directrices", ring: ring.to_string() });
        }
        if let Some(s) = spaces.iter().find(|s| s.ambient() != k) {
            return Err(Error::Length { expected: k, got: s.ambient() });
        }
        let mut members: Vec<Directrix> = Vec::new();
        for space in spaces {
            if !members.iter().any(|m| m.space == space) {
                members.push(Directrix { blocks: Vec::new(), space });
            }
        }
        Ok(DirectrixArrangement { ring: ring.clone(), k: Subspace::full(ring, k)?, members })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// `K` as a subspace of `R^n`.
    pub fn k(&self) -> &Subspace {
        &self.k
    }

    pub fn dim_k(&self) -> usize {
        self.k.dim()
    }

    pub fn members(&self) -> &[Directrix] {
        &self.members
    }

    /// Members of codimension greater than one in `K`.
    pub fn proper_part(&self) -> Vec<&Directrix> {
        self.members.iter().filter(|d| d.space.dim() + 1 < self.dim_k()).collect()
    }

    /// Members of dimension one.
    pub fn poles(&self) -> Vec<&Directrix> {
        self.members.iter().filter(|d| d.space.dim() == 1).collect()
    }

    pub fn to_k_coords(&self, xi: &[Scalar]) -> Option<Vec<Scalar>> {
        self.k.coordinates(xi)
    }

    pub fn to_ambient(&self, coords: &[Scalar]) -> Vec<Scalar> {
        self.k.combine(coords)
    }

    /// A subspace of `K` (in `K`-coordinates) as a subspace of `R^n`.
    pub fn subspace_to_ambient(&self, s: &Subspace) -> Result<Subspace> {
        Subspace::from_spanning(&self.ring, self.k.ambient(), s.basis().iter().map(|c| self.to_ambient(c)).collect())
    }

    /// `|L_ξ|` as a linear subspace of `K`: the intersection of `ξ ∗ D`
    /// over the directrices not containing `ξ` (every line through `ξ`
    /// meets a directrix that contains it).
    pub fn cone(&self, xi: &[Scalar]) -> Result<Subspace> {
        if xi.len() != self.dim_k() {
            return Err(Error::Length { expected: self.dim_k(), got: xi.len() });
        }
        if xi.iter().all(|a| self.ring.is_zero(a)) {
            return Err(Error::Degenerate("depth of the zero vector".into()));
        }
        let mut acc = Subspace::full(&self.ring, self.dim_k())?;
        for d in &self.members {
            if !d.space.contains(xi) {
                acc = acc.meet(&join(xi, &d.space)?)?;
            }
        }
        Ok(acc)
    }

    /// `depth(ξ) = dim |L_ξ|` (projective), for `ξ` in `K`-coordinates.
    pub fn depth(&self, xi: &[Scalar]) -> Result<usize> {
        Ok(self.cone(xi)?.dim() - 1)
    }

    pub fn carrier_contains(&self, xi: &[Scalar]) -> Result<bool> {
        Ok(self.depth(xi)? >= 1)
    }

    /// Span of all directrices.
    pub fn join_all(&self) -> Result<Subspace> {
        self.members
            .iter()
            .try_fold(Subspace::zero(&self.ring, self.dim_k()), |acc, d| acc.join(&d.space))
    }

    pub fn report(&self) -> ArrangementReport {
        let ring = &self.ring;
        let show = |s: &Subspace| -> Vec<String> {
            s.basis().iter().map(|c| format_weight(ring, &self.to_ambient(c))).collect()
        };
        ArrangementReport {
            ring: ring.to_string(),
            dim_k: self.dim_k(),
            k_basis: self.k.basis().iter().map(|b| format_weight(ring, b)).collect(),
            members: self
                .members
                .iter()
                .map(|d| DirectrixReport {
                    blocks: d.blocks.iter().map(|b| format_set(b)).collect(),
                    dim: d.space.dim(),
                    codim: self.dim_k() - d.space.dim(),
                    proper: d.space.dim() + 1 < self.dim_k(),
                    pole: d.space.dim() == 1,
                    basis: show(&d.space),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DirectrixReport {
    pub blocks: Vec<String>,
    pub dim: usize,
    pub codim: usize,
    pub proper: bool,
    pub pole: bool,
    /// Basis in `R^n`.
    pub basis: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ArrangementReport {
    pub ring: String,
    pub dim_k: usize,
    pub k_basis: Vec<String>,
    pub members: Vec<DirectrixReport>,
}

/// A projective line `ξ ∗ ν` with canonical Plücker coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjLine {
    ring: Ring,
    span: Subspace,
    plucker: Vec<Scalar>,
}

pub fn plucker_line(ring: &Ring, xi: &[Scalar], nu: &[Scalar]) -> Result<ProjLine> {
    if !ring.is_field() {
        return Err(Error::NotAField { op: "Plücker coordinates", ring: ring.to_string() });
    }
    if is_parallel(ring, xi, nu)? {
        return Err(Error::Degenerate("spanning vectors are parallel".into()));
    }
    let mut p = minors2(ring, xi, nu)?;
    let lead = p.iter().find(|a| !ring.is_zero(a)).cloned().expect("non-parallel pair");
    let inv = ring.inv(&lead).expect("field");
    for a in p.iter_mut() {
        *a = ring.mul(a, &inv);
    }
    let span = Subspace::from_spanning(ring, xi.len(), vec![xi.to_vec(), nu.to_vec()])?;
    Ok(ProjLine { ring: ring.clone(), span, plucker: p })
}

impl ProjLine {
    /// Coordinates `L_ij`, pairs in order `(1,2), (1,3), ..`, first nonzero = 1.
    pub fn plucker(&self) -> &[Scalar] {
        &self.plucker
    }

    pub fn span(&self) -> &Subspace {
        &self.span
    }

    pub fn plucker_string(&self) -> String {
        format_weight(&self.ring, &self.plucker)
    }
}

/// `L ∈ L_D`: the line meets `P(D)`, i.e. `dim(D + L) < dim D + 2`.
pub fn complex_contains(line: &ProjLine, d: &Subspace) -> Result<bool> {
    Ok(d.join(&line.span)?.dim() < d.dim() + 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::osalg::parse_weight;
    use crate::rings::{make_ring, projective_at, projective_size};

    fn w(r: &Ring, n: usize, s: &str) -> Vec<Scalar> {
        parse_weight(r, n, s).unwrap()
    }

    #[test]
    fn braid_poles_are_collinear() {
        let f2 = make_ring("F2").unwrap();
        let m = catalog("braid-K4").unwrap();
        let arr = directrices(&Graph::parse(6, "12|34|56").unwrap(), &m, &f2).unwrap();
        let poles: Vec<Vec<Scalar>> =
            arr.poles().iter().map(|d| arr.to_ambient(&d.space.basis()[0])).collect();
        assert_eq!(poles.len(), 3);
        for s in ["110011", "001111", "111100"] {
            assert!(poles.contains(&w(&f2, 6, s)), "{s}");
        }
        let line = plucker_line(&f2, &w(&f2, 6, "110011"), &w(&f2, 6, "001111")).unwrap();
        for p in &poles {
            let d = Subspace::from_spanning(&f2, 6, vec![p.clone()]).unwrap();
            assert!(complex_contains(&line, &d).unwrap());
        }
    }

    #[test]
    fn nonfano_pole_depth_two() {
        let f2 = make_ring("F2").unwrap();
        let m = catalog("nonfano").unwrap();
        let arr = directrices(&Graph::parse(7, "127|3|4|5|6").unwrap(), &m, &f2).unwrap();
        let proper = arr.proper_part();
        assert_eq!(proper.len(), 1);
        assert_eq!(proper[0].blocks, vec![vec![0, 1, 6]]);
        assert_eq!(proper[0].space.dim(), 1);
        let pole = w(&f2, 7, "0011110");
        assert_eq!(arr.to_ambient(&proper[0].space.basis()[0]), pole);
        let xi = arr.to_k_coords(&pole).unwrap();
        assert_eq!(arr.depth(&xi).unwrap(), 2);
        assert!(arr.depth(&vec![f2.zero(); 3]).is_err());
    }

    #[test]
    fn depth_matches_z_gamma() {
        let f3 = make_ring("F3").unwrap();
        let m = catalog("hessian").unwrap();
        let g = Graph::parse(12, "123|456|789|αβγ").unwrap();
        let arr = directrices(&g, &m, &f3).unwrap();
        let comp = Component::new(&m, &g, &f3).unwrap();
        for i in (0..projective_size(&f3, 6).unwrap()).step_by(7) {
            let xi = projective_at(&f3, 6, i);
            let amb = arr.to_ambient(&xi);
            assert_eq!(arr.depth(&xi).unwrap() + 1, comp.dim_z_gamma(&amb).unwrap());
        }
    }

    #[test]
    fn plucker_is_canonical() {
        let f5 = make_ring("F5").unwrap();
        let a = w(&f5, 4, "1,2,0,3");
        let b = w(&f5, 4, "0,1,4,4");
        let l1 = plucker_line(&f5, &a, &b).unwrap();
        let a2: Vec<Scalar> = a.iter().zip(&b).map(|(x, y)| f5.add(&f5.mul(x, &f5.from_i64(3)), y)).collect();
        let b2: Vec<Scalar> = b.iter().map(|y| f5.mul(y, &f5.from_i64(2))).collect();
        let l2 = plucker_line(&f5, &a2, &b2).unwrap();
        assert_eq!(l1.plucker(), l2.plucker());
        assert!(plucker_line(&f5, &a, &a).is_err());
        let d = Subspace::from_spanning(&f5, 4, vec![w(&f5, 4, "1000"), w(&f5, 4, "0100")]).unwrap();
        let miss = plucker_line(&f5, &w(&f5, 4, "0010"), &w(&f5, 4, "0001")).unwrap();
        assert!(!complex_contains(&miss, &d).unwrap());
        let skew = plucker_line(&f5, &w(&f5, 4, "1010"), &w(&f5, 4, "0001")).unwrap();
        assert!(!complex_contains(&skew, &d).unwrap());
        let hit = plucker_line(&f5, &w(&f5, 4, "1,4,0,0"), &w(&f5, 4, "0,0,1,1")).unwrap();
        assert!(complex_contains(&hit, &d).unwrap());
        let inside = plucker_line(&f5, &w(&f5, 4, "1000"), &w(&f5, 4, "0001")).unwrap();
        assert!(complex_contains(&inside, &d).unwrap());
    }
}
