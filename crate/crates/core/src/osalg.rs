//! The degree-one and degree-two Orlik-Solomon structure: the map
//! `d_λ : η ↦ a_λ ∧ a_η`, its kernel `Z(λ)`, resonant pairs and their graphs.

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::neighborly::Graph;
use crate::notation::weight_tokens;
use crate::rings::{is_parallel, minor, Kernel, Matrix, Ring, Scalar};

/// Parses a weight of length `n` (see [`weight_tokens`]).
pub fn parse_weight(ring: &Ring, n: usize, s: &str) -> Result<Vec<Scalar>> {
    let v: Vec<Scalar> = weight_tokens(s)?.iter().map(|t| ring.parse_scalar(t)).collect::<Result<_>>()?;
    if v.len() != n {
        return Err(Error::Length { expected: n, got: v.len() });
    }
    Ok(v)
}

pub fn format_weight(ring: &Ring, w: &[Scalar]) -> String {
    let parts: Vec<String> = w.iter().map(|a| ring.format_scalar(a)).collect();
    let compact = w.iter().all(|a| matches!(a, Scalar::Residue(c) if *c < 10));
    if compact {
        parts.concat()
    } else {
        format!("({})", parts.join(","))
    }
}

fn check(m: &Matroid, ring: &Ring, w: &[Scalar]) -> Result<()> {
    if w.len() != m.n() {
        return Err(Error::Length { expected: m.n(), got: w.len() });
    }
    ring.check(w)
}

/// `ξ_S = Σ_{i∈S} ξ_i`.
pub fn coefficient_sum(ring: &Ring, w: &[Scalar], set: &[usize]) -> Scalar {
    ring.sum(set.iter().map(|&i| &w[i]))
}

/// Row labels `(X, k)` of the degree-two basis `a_{min X} ∧ a_k`, lines in
/// lexicographic order and `k` ascending.
pub fn dlambda_basis(m: &Matroid) -> Vec<(Vec<usize>, usize)> {
    m.all_lines()
        .into_iter()
        .flat_map(|x| {
            let rest: Vec<usize> = x[1..].to_vec();
            rest.into_iter().map(move |k| (x.clone(), k))
        })
        .collect()
}

/// Matrix of `η ↦ a_λ ∧ a_η`; row `(X, k)` has `λ_X [j = k] - λ_k` in the
/// columns `j ∈ X`.
pub fn dlambda_matrix(m: &Matroid, ring: &Ring, lambda: &[Scalar]) -> Result<Matrix> {
    check(m, ring, lambda)?;
    let basis = dlambda_basis(m);
    let mut mat = Matrix::zeros(ring, basis.len(), m.n());
    let mut last: Option<(&Vec<usize>, Scalar)> = None;
    for (r, (x, k)) in basis.iter().enumerate() {
        let lx = match &last {
            Some((lx_line, s)) if *lx_line == x => s.clone(),
            _ => {
                let s = coefficient_sum(ring, lambda, x);
                last = Some((x, s.clone()));
                s
            }
        };
        let neg = ring.neg(&lambda[*k]);
        for &j in x {
            let v = if j == *k { ring.add(&lx, &neg) } else { neg.clone() };
            mat.set(r, j, v);
        }
    }
    Ok(mat)
}

/// Per line `X`, the vector `(λ_X η_k - λ_k η_X)` for `k ∈ X - {min X}`.
pub fn wedge_components(m: &Matroid, ring: &Ring, lambda: &[Scalar], eta: &[Scalar]) -> Result<Vec<(Vec<usize>, Vec<Scalar>)>> {
    check(m, ring, lambda)?;
    check(m, ring, eta)?;
    Ok(m.all_lines()
        .into_iter()
        .map(|x| {
            let lx = coefficient_sum(ring, lambda, &x);
            let ex = coefficient_sum(ring, eta, &x);
            let comps = x[1..].iter().map(|&k| ring.det2(&lx, &ex, &lambda[k], &eta[k])).collect();
            (x, comps)
        })
        .collect())
}

/// `a_λ ∧ a_η = 0`, decided line by line: on every line `X` the restrictions
/// are parallel, or `X` is nontrivial and `λ_X η_k = η_X λ_k` for `k ∈ X`.
pub fn wedge_is_zero(m: &Matroid, ring: &Ring, lambda: &[Scalar], eta: &[Scalar]) -> Result<bool> {
    check(m, ring, lambda)?;
    check(m, ring, eta)?;
    for x in m.all_lines() {
        let lr: Vec<Scalar> = x.iter().map(|&i| lambda[i].clone()).collect();
        let er: Vec<Scalar> = x.iter().map(|&i| eta[i].clone()).collect();
        if is_parallel(ring, &lr, &er)? {
            continue;
        }
        if x.len() == 2 {
            return Ok(false);
        }
        let lx = ring.sum(&lr);
        let ex = ring.sum(&er);
        if !lr.iter().zip(&er).all(|(l, e)| ring.is_zero(&ring.det2(&lx, &ex, l, e))) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Z(λ) = ker d_λ`.
pub fn z_of(m: &Matroid, ring: &Ring, lambda: &[Scalar]) -> Result<Kernel> {
    dlambda_matrix(m, ring, lambda)?.kernel()
}

pub fn is_resonant_pair(m: &Matroid, ring: &Ring, lambda: &[Scalar], eta: &[Scalar]) -> Result<bool> {
    Ok(wedge_is_zero(m, ring, lambda, eta)? && !is_parallel(ring, lambda, eta)?)
}

/// A member of `Z(λ)` not parallel to `λ`, if any. Over `Z/N` the Howell
/// generators suffice: the vectors parallel to `λ` form a submodule.
pub fn resonant_partner(m: &Matroid, ring: &Ring, lambda: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    let z = z_of(m, ring, lambda)?;
    for g in z.generators() {
        if !is_parallel(ring, lambda, &g)? {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// `λ ∈ R^1`: over a field, `λ != 0` and `dim Z(λ) >= 2`; over `Z/N`, some
/// generator of `Z(λ)` is not parallel to `λ`.
pub fn is_resonant(m: &Matroid, ring: &Ring, lambda: &[Scalar]) -> Result<bool> {
    match z_of(m, ring, lambda)? {
        Kernel::Field(z) => Ok(lambda.iter().any(|a| !ring.is_zero(a)) && z.dim() >= 2),
        Kernel::ModN(_) => Ok(resonant_partner(m, ring, lambda)?.is_some()),
    }
}

/// Graph on `[n]` with an edge wherever the minor `λ_i η_j - λ_j η_i` vanishes.
pub fn minor_graph(ring: &Ring, lambda: &[Scalar], eta: &[Scalar]) -> Result<Graph> {
    if lambda.len() != eta.len() {
        return Err(Error::Length { expected: lambda.len(), got: eta.len() });
    }
    let n = lambda.len();
    let mut g = Graph::empty(n)?;
    for i in 0..n {
        for j in i + 1..n {
            if ring.is_zero(&minor(ring, lambda, eta, i, j)) {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// The graph `Γ_(λ,η)` of a resonant pair.
pub fn pair_graph(m: &Matroid, ring: &Ring, lambda: &[Scalar], eta: &[Scalar]) -> Result<Graph> {
    if !is_resonant_pair(m, ring, lambda, eta)? {
        return Err(Error::NotResonant);
    }
    minor_graph(ring, lambda, eta)
}

/// `{i : λ_i != 0 or η_i != 0}`.
pub fn pair_support(ring: &Ring, lambda: &[Scalar], eta: &[Scalar]) -> Vec<usize> {
    (0..lambda.len())
        .filter(|&i| !ring.is_zero(&lambda[i]) || !eta.get(i).map_or(true, |e| ring.is_zero(e)))
        .collect()
}

/// For a rank-two matroid with `n >= 3`: when `λ_[n]` is a zero divisor
/// and `Ann(λ_[n]) != Ann(λ)`, the partner `η = r (e_j - e_k)` with
/// `r ∈ Ann(λ_[n]) - Ann(λ)`, `i` the first index with `r λ_i != 0` and
/// `j < k` the two smallest other indices.
pub fn rank2_partner(m: &Matroid, ring: &Ring, lambda: &[Scalar]) -> Result<Vec<Scalar>> {
    check(m, ring, lambda)?;
    let n = m.n();
    if m.rank() != 2 || n < 3 {
        return Err(Error::Hypothesis("needs a rank-two matroid on at least three points".into()));
    }
    let all: Vec<usize> = (0..n).collect();
    let s = coefficient_sum(ring, lambda, &all);
    if !ring.is_zero_divisor(&s) {
        return Err(Error::Hypothesis(format!("λ_[n] = {} is not a zero divisor", ring.format_scalar(&s))));
    }
    // Ann(s) is principal; its generator lies outside Ann(λ) iff the ideals differ.
    let r = ring.annihilator(&s);
    let Some(i) = lambda.iter().position(|l| !ring.is_zero(&ring.mul(&r, l))) else {
        return Err(Error::Hypothesis("Ann(λ_[n]) = Ann(λ)".into()));
    };
    let others: Vec<usize> = (0..n).filter(|&t| t != i).take(2).collect();
    let mut eta = vec![ring.zero(); n];
    eta[others[0]] = r.clone();
    eta[others[1]] = ring.neg(&r);
    if !is_resonant_pair(m, ring, lambda, &eta)? {
        return Err(Error::Hypothesis("constructed partner failed verification".into()));
    }
    Ok(eta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::rings::make_ring;

    fn w(r: &Ring, n: usize, s: &str) -> Vec<Scalar> {
        parse_weight(r, n, s).unwrap()
    }

    #[test]
    fn pencil3_rows() {
        let f3 = make_ring("F3").unwrap();
        let m = catalog("pencil-3").unwrap();
        let d = dlambda_matrix(&m, &f3, &w(&f3, 3, "111")).unwrap();
        assert_eq!(d.rows(), 2);
        for r in 0..2 {
            assert_eq!(d.row(r), w(&f3, 3, "222").as_slice());
        }
    }

    #[test]
    fn whitney_number_matches_rows() {
        let q = make_ring("Q").unwrap();
        for name in ["braid-K4", "nonfano", "deletedB3", "olive-samansky", "hessian", "pencil-6"] {
            let m = catalog(name).unwrap();
            let d = dlambda_matrix(&m, &q, &vec![q.zero(); m.n()]).unwrap();
            assert_eq!(d.rows(), m.whitney2(), "{name}");
            assert!(d.is_zero());
        }
    }

    #[test]
    fn z6_pencil_pair() {
        let z6 = make_ring("Z6").unwrap();
        let m = catalog("pencil-3").unwrap();
        let l = w(&z6, 3, "5,3,1");
        let e = w(&z6, 3, "5,1,3");
        assert!(wedge_is_zero(&m, &z6, &l, &e).unwrap());
        assert!(is_resonant_pair(&m, &z6, &l, &e).unwrap());
    }

    #[test]
    fn braid_pairs_over_f2() {
        let f2 = make_ring("F2").unwrap();
        let m = catalog("braid-K4").unwrap();
        let (a, b) = (w(&f2, 6, "110011"), w(&f2, 6, "001111"));
        assert!(wedge_is_zero(&m, &f2, &a, &b).unwrap());
        let g = pair_graph(&m, &f2, &a, &b).unwrap();
        assert_eq!(g.to_string(), "12|34|56");
    }

    #[test]
    fn nonfano_dim3() {
        let f2 = make_ring("F2").unwrap();
        let m = catalog("nonfano").unwrap();
        let z = z_of(&m, &f2, &w(&f2, 7, "0011110")).unwrap();
        assert_eq!(z.dim(), Some(3));
    }

    #[test]
    fn parallel_pairs_are_not_resonant() {
        let z4 = make_ring("Z4").unwrap();
        let m = catalog("deletedB3").unwrap();
        let l = w(&z4, 8, "11112222");
        let l2: Vec<Scalar> = l.iter().map(|x| z4.mul(x, &z4.from_i64(2))).collect();
        assert!(!is_resonant_pair(&m, &z4, &l, &l2).unwrap());
        let q = make_ring("Q").unwrap();
        let b = w(&q, 6, "1,1,0,0,-1,-1");
        let b2: Vec<Scalar> = b.iter().map(|x| q.mul(x, &q.from_i64(2))).collect();
        assert!(!is_resonant_pair(&catalog("braid-K4").unwrap(), &q, &b2, &b).unwrap());
    }

    #[test]
    fn rank2_partner_examples() {
        let z6 = make_ring("Z6").unwrap();
        let m = catalog("pencil-3").unwrap();
        let eta = rank2_partner(&m, &z6, &w(&z6, 3, "5,3,1")).unwrap();
        assert_eq!(eta, w(&z6, 3, "0,2,4"));
        let z4 = make_ring("Z4").unwrap();
        assert!(matches!(rank2_partner(&m, &z4, &w(&z4, 3, "222")), Err(Error::Hypothesis(_))));
        let q = make_ring("Q").unwrap();
        assert!(rank2_partner(&m, &q, &w(&q, 3, "1,2,3")).is_err());
    }

    #[test]
    fn z4_deleted_b3_pair() {
        let z4 = make_ring("Z4").unwrap();
        let m = catalog("deletedB3").unwrap();
        let l = w(&z4, 8, "11112222");
        let e = w(&z4, 8, "23100123");
        let g = pair_graph(&m, &z4, &l, &e).unwrap();
        assert_eq!(g.edge_string(), "15,27,37,45,57,68");
        assert!(is_resonant(&m, &z4, &l).unwrap());
    }
}
