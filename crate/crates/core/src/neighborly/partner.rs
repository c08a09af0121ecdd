use super::graph::Graph;
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::osalg::{coefficient_sum, minor_graph, z_of};
use crate::rings::{make_ring, minor, Kernel, Ring, RingSpec, Scalar, Subspace};

/// `C(n, 2) + |X₀|`: an extension with more elements always carries a
/// generic partner.
pub fn partner_bound(m: &Matroid) -> u64 {
    let n = m.n() as u64;
    n * n.saturating_sub(1) / 2 + m.nontrivial_lines().len() as u64
}

/// The extension `F_{p^k}` of the prime field `F_p`, in which `F_p` sits as
/// the codes `0..p`.
pub fn extension_of(base: &Ring, k: u32) -> Result<Ring> {
    match base.spec() {
        RingSpec::PrimeField { p } if k == 1 => Ring::new(RingSpec::PrimeField { p: *p }),
        RingSpec::PrimeField { p } => make_ring(&format!("F{p}^{k}")),
        RingSpec::Rationals if k == 1 => Ok(base.clone()),
        _ => Err(Error::Unsupported { op: "generic partners", ring: base.to_string() }),
    }
}

fn z_basis(m: &Matroid, base: &Ring, lambda: &[Scalar]) -> Result<Subspace> {
    match z_of(m, base, lambda)? {
        Kernel::Field(z) => Ok(z),
        Kernel::ModN(_) => Err(Error::NotAField { op: "generic partners", ring: base.to_string() }),
    }
}

/// Linear functionals on `Z(λ)` that must not vanish at a generic partner,
/// as their values on the basis of `Z(λ)`.
fn proper_functionals(m: &Matroid, base: &Ring, lambda: &[Scalar], z: &Subspace) -> Vec<Vec<Scalar>> {
    let n = m.n();
    let mut out = Vec::new();
    for x in m.nontrivial_lines() {
        out.push(z.basis().iter().map(|b| coefficient_sum(base, b, x)).collect::<Vec<_>>());
    }
    for i in 0..n {
        for j in i + 1..n {
            out.push(z.basis().iter().map(|b| minor(base, lambda, b, i, j)).collect());
        }
    }
    out.retain(|f: &Vec<Scalar>| f.iter().any(|a| !base.is_zero(a)));
    out
}

fn lift(e: &Ring, v: &[Scalar]) -> Vec<Scalar> {
    v.iter()
        .map(|a| match a {
            Scalar::Residue(c) => Scalar::Residue(*c),
            other => other.clone(),
        })
        .map(|a| if e.contains(&a) { a } else { e.zero() })
        .collect()
}

/// A generic partner of `λ` (over the prime field or `Q`) in `E^n`, by a
/// deterministic sweep of the coefficients on the basis of `Z(λ)`. Over a
/// finite `E` the coefficient tuples run through `E^d` in code order; over
/// `Q` through the grid `{0..C(n,2)+|X₀|}^d`.
pub fn generic_partner(lambda: &[Scalar], m: &Matroid, base: &Ring, e: &Ring) -> Result<Vec<Scalar>> {
    if !base.is_field() {
        return Err(Error::NotAField { op: "generic partners", ring: base.to_string() });
    }
    let z = z_basis(m, base, lambda)?;
    let d = z.dim();
    let funcs: Vec<Vec<Scalar>> =
        proper_functionals(m, base, lambda, &z).iter().map(|f| lift(e, f)).collect();
    let basis: Vec<Vec<Scalar>> = z.basis().iter().map(|b| lift(e, b)).collect();
    let bound = partner_bound(m);
    let radix: u128 = match e.cardinality() {
        Some(q) => q as u128,
        None => bound as u128 + 1,
    };
    let total = (0..d).try_fold(1u128, |acc, _| acc.checked_mul(radix)).unwrap_or(u128::MAX);
    let coeff = |c: u128| -> Scalar {
        match e.cardinality() {
            Some(_) => Scalar::Residue(c as u32),
            None => e.from_i64(c as i64),
        }
    };
    for idx in 0..total {
        let mut cs = Vec::with_capacity(d);
        let mut rest = idx;
        for _ in 0..d {
            cs.push(coeff(rest % radix));
            rest /= radix;
        }
        let ok = funcs.iter().all(|f| !e.is_zero(&e.sum(f.iter().zip(&cs).map(|(a, c)| e.mul(a, c)).collect::<Vec<_>>().iter())));
        if ok {
            let mut mu = vec![e.zero(); m.n()];
            for (b, c) in basis.iter().zip(&cs) {
                for (x, y) in mu.iter_mut().zip(b) {
                    *x = e.add(x, &e.mul(c, y));
                }
            }
            return Ok(mu);
        }
    }
    Err(Error::NoPartner { field: e.to_string(), bound })
}

/// Tries `E = F_{p^k}` for `k = 1, 2, ..` up to `max_k`; returns the first
/// extension that works together with the partner.
pub fn generic_partner_search(lambda: &[Scalar], m: &Matroid, base: &Ring, max_k: u32) -> Result<(Ring, Vec<Scalar>)> {
    let mut last = None;
    for k in 1..=max_k {
        let e = extension_of(base, k)?;
        match generic_partner(lambda, m, base, &e) {
            Ok(mu) => return Ok((e, mu)),
            Err(err @ Error::NoPartner { .. }) => last = Some(err),
            Err(err) => return Err(err),
        }
        if e.cardinality().is_none() {
            break;
        }
    }
    Err(last.unwrap_or(Error::NoPartner { field: base.to_string(), bound: partner_bound(m) }))
}

/// `Γ_λ = Γ_(λ, μ)` for a generic partner `μ` over `E`.
pub fn gamma_of(lambda: &[Scalar], m: &Matroid, base: &Ring, e: &Ring) -> Result<Graph> {
    let mu = generic_partner(lambda, m, base, e)?;
    minor_graph(e, &lift(e, lambda), &mu)
}

/// `Γ_λ` read off over the base field: `{i, j}` is an edge iff the minor
/// `λ_i ξ_j - λ_j ξ_i` vanishes on all of `Z(λ)`.
pub fn generic_graph(lambda: &[Scalar], m: &Matroid, base: &Ring) -> Result<Graph> {
    let z = z_basis(m, base, lambda)?;
    let mut g = Graph::empty(m.n())?;
    for i in 0..m.n() {
        for j in i + 1..m.n() {
            if z.basis().iter().all(|b| base.is_zero(&minor(base, lambda, b, i, j))) {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::neighborly::Component;
    use crate::osalg::parse_weight;

    #[test]
    fn nonfano_needs_an_extension() {
        let m = catalog("nonfano").unwrap();
        let f2 = make_ring("F2").unwrap();
        let l = parse_weight(&f2, 7, "0011110").unwrap();
        assert!(generic_partner(&l, &m, &f2, &f2).is_err());
        let (e, mu) = generic_partner_search(&l, &m, &f2, 5).unwrap();
        assert!(e.cardinality().unwrap() > 2);
        let g = minor_graph(&e, &l, &mu).unwrap();
        assert_eq!(g.to_string(), "127|3|4|5|6");
        assert_eq!(generic_graph(&l, &m, &f2).unwrap(), g);
        assert_eq!(partner_bound(&m), 27);
    }

    #[test]
    fn one_dimensional_z_gives_lambda() {
        let m = catalog("braid-K4").unwrap();
        let q = make_ring("Q").unwrap();
        let l = parse_weight(&q, 6, "1,2,3,4,5,7").unwrap();
        let mu = generic_partner(&l, &m, &q, &q).unwrap();
        assert!(crate::rings::is_parallel(&q, &l, &mu).unwrap());
        assert!(gamma_of(&l, &m, &q, &q).unwrap().is_complete());
    }

    #[test]
    fn z_equals_z_gamma_for_generic_graph() {
        let m = catalog("braid-K4").unwrap();
        let f3 = make_ring("F3").unwrap();
        let l = parse_weight(&f3, 6, "1,1,0,0,2,2").unwrap();
        let g = generic_graph(&l, &m, &f3).unwrap();
        assert_eq!(g.to_string(), "12|34|56");
        let c = Component::new(&m, &g, &f3).unwrap();
        let z = z_basis(&m, &f3, &l).unwrap();
        assert_eq!(c.z_gamma(&l).unwrap(), z);
    }
}
