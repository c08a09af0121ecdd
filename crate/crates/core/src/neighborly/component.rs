use serde::Serialize;

use super::graph::Graph;
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::notation::format_set;
use crate::osalg::{coefficient_sum, format_weight};
use crate::rings::{is_parallel, rref_in_place, space_size, vector_at, HowellModule, Matrix, Ring, Scalar, Subspace};

/// `K(Γ, R)`: a subspace over a field; over `Z/N` a zero-divisor predicate
/// on the line sums, together with its all-sums-zero submodule.
#[derive(Clone, Debug)]
pub enum KGamma {
    Field(Subspace),
    ModN { zero_locus: HowellModule },
}

/// A graph together with the data of its combinatorial component.
#[derive(Clone, Debug)]
pub struct Component {
    graph: Graph,
    ring: Ring,
    x_gamma: Vec<Vec<usize>>,
    k: KGamma,
}

/// `K(Γ, R)` for lines `x_gamma`: the incidence kernel over a field, or
/// the zero-sum module over `Z/N`.
pub(crate) fn k_for_lines(m: &Matroid, ring: &Ring, x_gamma: &[Vec<usize>]) -> Result<KGamma> {
    let inc = m.incidence_matrix(x_gamma, ring);
    if ring.is_field() {
        Ok(KGamma::Field(inc.kernel_field()?))
    } else {
        Ok(KGamma::ModN { zero_locus: inc.kernel_mod_n()? })
    }
}

impl Component {
    pub fn new(m: &Matroid, graph: &Graph, ring: &Ring) -> Result<Component> {
        if graph.n() != m.n() {
            return Err(Error::Length { expected: m.n(), got: graph.n() });
        }
        let lines = m.nontrivial_lines();
        let x_gamma: Vec<Vec<usize>> = graph.x_gamma(m).into_iter().map(|i| lines[i].clone()).collect();
        let k = k_for_lines(m, ring, &x_gamma)?;
        Ok(Component { graph: graph.clone(), ring: ring.clone(), x_gamma, k })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Nontrivial lines that are not cliques of the graph.
    pub fn x_gamma(&self) -> &[Vec<usize>] {
        &self.x_gamma
    }

    pub fn k(&self) -> &KGamma {
        &self.k
    }

    /// The subspace `K` over a field.
    pub fn k_space(&self) -> Result<&Subspace> {
        match &self.k {
            KGamma::Field(s) => Ok(s),
            KGamma::ModN { .. } => Err(Error::NotAField { op: "K(Γ) as a subspace", ring: self.ring.to_string() }),
        }
    }

    pub fn dim_k(&self) -> Option<usize> {
        match &self.k {
            KGamma::Field(s) => Some(s.dim()),
            KGamma::ModN { .. } => None,
        }
    }

    pub fn k_contains(&self, xi: &[Scalar]) -> bool {
        if xi.len() != self.n() {
            return false;
        }
        match &self.k {
            KGamma::Field(s) => s.contains(xi),
            KGamma::ModN { .. } => {
                self.ring.check(xi).is_ok()
                    && self
                        .x_gamma
                        .iter()
                        .all(|x| self.ring.is_zero_divisor(&coefficient_sum(&self.ring, xi, x)))
            }
        }
    }

    fn require_k(&self, lambda: &[Scalar]) -> Result<()> {
        if lambda.len() != self.n() {
            return Err(Error::Length { expected: self.n(), got: lambda.len() });
        }
        self.ring.check(lambda)?;
        if !self.k_contains(lambda) {
            return Err(Error::NotInK);
        }
        Ok(())
    }

    /// Rank of the edge conditions `λ_i η_j - λ_j η_i = 0` restricted to `K`,
    /// written in the coordinates of the basis of `K`.
    fn edge_rank(&self, k: &Subspace, lambda: &[Scalar]) -> usize {
        let ring = &self.ring;
        let basis = k.basis();
        let d = basis.len();
        let edges = self.graph.edges();
        let mut data = Vec::with_capacity(edges.len() * d);
        for &(i, j) in &edges {
            for b in basis {
                data.push(ring.det2(&lambda[i], &lambda[j], &b[i], &b[j]));
            }
        }
        rref_in_place(ring, &mut data, edges.len(), d).len()
    }

    /// `dim Z_Γ(λ)` over a field.
    pub fn dim_z_gamma(&self, lambda: &[Scalar]) -> Result<usize> {
        self.require_k(lambda)?;
        let k = self.k_space()?;
        Ok(k.dim() - self.edge_rank(k, lambda))
    }

    /// `dim Z_Γ(ξ)` for `ξ` given by its coordinates on the basis of `K`.
    pub fn dim_z_gamma_coords(&self, coords: &[Scalar]) -> Result<usize> {
        let k = self.k_space()?;
        if coords.len() != k.dim() {
            return Err(Error::Length { expected: k.dim(), got: coords.len() });
        }
        let lambda = k.combine(coords);
        Ok(k.dim() - self.edge_rank(k, &lambda))
    }

    /// `Z_Γ(λ)` over a field, as a subspace of `R^n`.
    pub fn z_gamma(&self, lambda: &[Scalar]) -> Result<Subspace> {
        self.require_k(lambda)?;
        let k = self.k_space()?;
        let ring = &self.ring;
        let rows: Vec<Vec<Scalar>> = self
            .graph
            .edges()
            .iter()
            .map(|&(i, j)| k.basis().iter().map(|b| ring.det2(&lambda[i], &lambda[j], &b[i], &b[j])).collect())
            .collect();
        let coords = if rows.is_empty() {
            Subspace::full(ring, k.dim())?
        } else {
            Matrix::from_rows(ring, k.dim(), rows)?.kernel_field()?
        };
        let vectors = coords.basis().iter().map(|c| k.combine(c)).collect();
        Subspace::from_spanning(ring, self.n(), vectors)
    }

    /// Over `Z/N`: the module cut out by the linear conditions of `Z_Γ(λ)`.
    /// Its members lying in `K` form `Z_Γ(λ)`.
    pub fn z_gamma_module(&self, lambda: &[Scalar]) -> Result<HowellModule> {
        self.require_k(lambda)?;
        let ring = &self.ring;
        let n = self.n();
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for x in &self.x_gamma {
            let lx = coefficient_sum(ring, lambda, x);
            for &k in x {
                let mut row = vec![ring.zero(); n];
                let neg = ring.neg(&lambda[k]);
                for &j in x {
                    row[j] = if j == k { ring.add(&lx, &neg) } else { neg.clone() };
                }
                rows.push(row);
            }
        }
        for (i, j) in self.graph.edges() {
            let mut row = vec![ring.zero(); n];
            row[j] = lambda[i].clone();
            row[i] = ring.neg(&lambda[j]);
            rows.push(row);
        }
        if rows.is_empty() {
            return Ok(HowellModule::full(ring.residue_modulus().unwrap_or(0), n));
        }
        Matrix::from_rows(ring, n, rows)?.kernel_mod_n()
    }

    /// A member of `Z_Γ(λ)` not parallel to `λ`. Over `Z/N` the module
    /// generators are tried first, then every element up to `cap`.
    pub fn partner(&self, lambda: &[Scalar], cap: u128) -> Result<Option<Vec<Scalar>>> {
        if !self.k_contains(lambda) {
            return Ok(None);
        }
        let ring = &self.ring;
        match &self.k {
            KGamma::Field(_) => {
                let z = self.z_gamma(lambda)?;
                for b in z.basis() {
                    if !is_parallel(ring, lambda, b)? {
                        return Ok(Some(b.clone()));
                    }
                }
                Ok(None)
            }
            KGamma::ModN { .. } => {
                let module = self.z_gamma_module(lambda)?;
                let good = |v: &[Scalar]| -> Result<bool> { Ok(self.k_contains(v) && !is_parallel(ring, lambda, v)?) };
                for g in module.generator_scalars() {
                    if good(&g)? {
                        return Ok(Some(g));
                    }
                }
                let size = module.size();
                if size > cap {
                    return Err(Error::CapExceeded { size, cap });
                }
                for e in module.elements() {
                    let v: Vec<Scalar> = e.into_iter().map(|c| Scalar::Residue(c as u32)).collect();
                    if good(&v)? {
                        return Ok(Some(v));
                    }
                }
                Ok(None)
            }
        }
    }

    /// `λ ∈ V¹(Γ, R)`.
    pub fn v1_contains(&self, lambda: &[Scalar], cap: u128) -> Result<bool> {
        if !self.k_contains(lambda) || lambda.iter().all(|a| self.ring.is_zero(a)) {
            return Ok(false);
        }
        match &self.k {
            KGamma::Field(_) => Ok(self.dim_z_gamma(lambda)? >= 2),
            KGamma::ModN { .. } => Ok(self.partner(lambda, cap)?.is_some()),
        }
    }

    /// `λ ∈ V¹_k(Γ, R)`: `dim Z_Γ(λ) > k`, over a field.
    pub fn v1_k_contains(&self, lambda: &[Scalar], k: usize) -> Result<bool> {
        self.k_space()?;
        if !self.k_contains(lambda) || lambda.iter().all(|a| self.ring.is_zero(a)) {
            return Ok(false);
        }
        Ok(self.dim_z_gamma(lambda)? > k)
    }

    /// Over `Z/N`: whether `K` contains two non-parallel vectors, by a scan
    /// of `R^n` bounded by `cap`. Over a field: `dim K >= 2`.
    pub fn k_has_nonparallel_pair(&self, cap: u128) -> Result<bool> {
        match &self.k {
            KGamma::Field(s) => Ok(s.dim() >= 2),
            KGamma::ModN { zero_locus } => {
                let gens = zero_locus.generator_scalars();
                if has_nonparallel(&self.ring, gens.iter())? {
                    return Ok(true);
                }
                let size = space_size(&self.ring, self.n())?;
                if size > cap {
                    return Err(Error::CapExceeded { size, cap });
                }
                let members: Vec<Vec<Scalar>> =
                    (0..size).map(|i| vector_at(&self.ring, self.n(), i)).filter(|v| self.k_contains(v)).collect();
                has_nonparallel(&self.ring, members.iter())
            }
        }
    }

    pub fn report(&self, witnesses: &[(Vec<Scalar>, Vec<Scalar>)]) -> ComponentReport {
        let ring = &self.ring;
        let (dim_k, k_basis, k_zero_locus) = match &self.k {
            KGamma::Field(s) => (Some(s.dim()), s.basis().iter().map(|b| format_weight(ring, b)).collect(), Vec::new()),
            KGamma::ModN { zero_locus } => (
                None,
                Vec::new(),
                zero_locus.generator_scalars().iter().map(|b| format_weight(ring, b)).collect(),
            ),
        };
        ComponentReport {
            graph: self.graph.to_string(),
            edges: self.graph.edges().iter().map(|&(i, j)| format_set(&[i, j])).collect(),
            blocks: self.graph.blocks().iter().map(|b| format_set(b)).collect(),
            cone_vertices: self.graph.cone_vertices().iter().map(|&v| v + 1).collect(),
            x_gamma: self.x_gamma.iter().map(|x| format_set(x)).collect(),
            ring: ring.to_string(),
            dim_k,
            k_basis,
            k_zero_locus,
            witnesses: witnesses
                .iter()
                .map(|(l, e)| Witness {
                    lambda: format_weight(ring, l),
                    eta: format_weight(ring, e),
                    support: crate::osalg::pair_support(ring, l, e).iter().map(|&v| v + 1).collect(),
                })
                .collect(),
        }
    }
}

/// Pairwise search that keeps only representatives of a mutually parallel set.
fn has_nonparallel<'a>(ring: &Ring, vs: impl Iterator<Item = &'a Vec<Scalar>>) -> Result<bool> {
    let mut reps: Vec<&Vec<Scalar>> = Vec::new();
    for v in vs {
        if v.iter().all(|a| ring.is_zero(a)) {
            continue;
        }
        for r in &reps {
            if !is_parallel(ring, r, v)? {
                return Ok(true);
            }
        }
        reps.push(v);
    }
    Ok(false)
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub lambda: String,
    pub eta: String,
    pub support: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentReport {
    pub graph: String,
    pub edges: Vec<String>,
    pub blocks: Vec<String>,
    pub cone_vertices: Vec<usize>,
    pub x_gamma: Vec<String>,
    pub ring: String,
    pub dim_k: Option<usize>,
    pub k_basis: Vec<String>,
    pub k_zero_locus: Vec<String>,
    pub witnesses: Vec<Witness>,
}

pub fn k_gamma(graph: &Graph, m: &Matroid, ring: &Ring) -> Result<KGamma> {
    Ok(Component::new(m, graph, ring)?.k)
}

pub fn v1_contains(lambda: &[Scalar], graph: &Graph, m: &Matroid, ring: &Ring, cap: u128) -> Result<bool> {
    Component::new(m, graph, ring)?.v1_contains(lambda, cap)
}

pub fn v1_k_contains(lambda: &[Scalar], graph: &Graph, m: &Matroid, ring: &Ring, k: usize) -> Result<bool> {
    Component::new(m, graph, ring)?.v1_k_contains(lambda, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::osalg::{parse_weight, z_of};
    use crate::rings::{make_ring, projective_at, projective_size};

    fn w(r: &Ring, n: usize, s: &str) -> Vec<Scalar> {
        parse_weight(r, n, s).unwrap()
    }

    #[test]
    fn braid_component() {
        let m = catalog("braid-K4").unwrap();
        let g = Graph::parse(6, "12|34|56").unwrap();
        for spec in ["Q", "F3", "F5"] {
            let r = make_ring(spec).unwrap();
            assert_eq!(Component::new(&m, &g, &r).unwrap().dim_k(), Some(2), "{spec}");
        }
        // In characteristic 2 the four line rows sum to zero: 100101 joins K.
        let f2 = make_ring("F2").unwrap();
        let c = Component::new(&m, &g, &f2).unwrap();
        assert_eq!(c.dim_k(), Some(3));
        assert!(c.k_contains(&w(&f2, 6, "100101")));
        let expect = Subspace::from_spanning(&f2, 6, vec![w(&f2, 6, "110011"), w(&f2, 6, "001111")]).unwrap();
        let z = c.z_gamma(&w(&f2, 6, "110011")).unwrap();
        assert_eq!(z, expect);
    }

    #[test]
    fn nonfano_component_matches_z() {
        let m = catalog("nonfano").unwrap();
        let f2 = make_ring("F2").unwrap();
        let g = Graph::parse(7, "127|3|4|5|6").unwrap();
        let c = Component::new(&m, &g, &f2).unwrap();
        assert_eq!(c.dim_k(), Some(3));
        let l = w(&f2, 7, "0011110");
        let zg = c.z_gamma(&l).unwrap();
        assert_eq!(zg.dim(), 3);
        match z_of(&m, &f2, &l).unwrap() {
            crate::rings::Kernel::Field(z) => assert_eq!(z, zg),
            _ => unreachable!(),
        }
        assert!(c.v1_contains(&l, 1000).unwrap());
        assert!(c.v1_k_contains(&l, 2).unwrap());
        assert!(!c.v1_contains(&vec![f2.zero(); 7], 1000).unwrap());
    }

    #[test]
    fn not_in_k() {
        let m = catalog("braid-K4").unwrap();
        let f2 = make_ring("F2").unwrap();
        let c = Component::new(&m, &Graph::parse(6, "12|34|56").unwrap(), &f2).unwrap();
        assert!(matches!(c.z_gamma(&w(&f2, 6, "100000")), Err(Error::NotInK)));
    }

    #[test]
    fn hessian_generic_point_has_depth_one() {
        let m = catalog("hessian").unwrap();
        let f3 = make_ring("F3").unwrap();
        let c = Component::new(&m, &Graph::parse(12, "123|456|789|αβγ").unwrap(), &f3).unwrap();
        let k = c.k_space().unwrap().clone();
        assert_eq!(k.dim(), 6);
        let mut hist = [0usize; 7];
        for i in 0..projective_size(&f3, 6).unwrap() {
            let xi = k.combine(&projective_at(&f3, 6, i));
            hist[c.dim_z_gamma(&xi).unwrap()] += 1;
        }
        assert!(hist[2] > 0);
        assert!(hist[2] > hist[3]);
        assert_eq!(hist[0], 0);
    }

    #[test]
    fn z4_pair_graph_component() {
        let m = catalog("deletedB3").unwrap();
        let z4 = make_ring("Z4").unwrap();
        let l = w(&z4, 8, "11112222");
        let e = w(&z4, 8, "23100123");
        let g = crate::osalg::pair_graph(&m, &z4, &l, &e).unwrap();
        let c = Component::new(&m, &g, &z4).unwrap();
        assert!(c.k_contains(&l) && c.k_contains(&e));
        assert!(c.v1_contains(&l, 1 << 20).unwrap());
        assert!(c.z_gamma_module(&l).unwrap().contains_scalars(&e));
        assert!(c.k_has_nonparallel_pair(1 << 20).unwrap());
        assert!(c.z_gamma(&l).is_err());
    }
}
