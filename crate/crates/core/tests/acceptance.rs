//! One PASS/FAIL line per acceptance criterion.
//!
//! A criterion may FAIL only if it is listed in `KNOWN` and an independent
//! brute-force count confirms the value this crate computes instead; any
//! other FAIL makes the target exit nonzero.

use std::collections::{BTreeSet, HashSet};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use resonance_core::catalog::catalog;
use resonance_core::linegeom::directrices;
use resonance_core::matroid::Matroid;
use resonance_core::neighborly::{decomposition_check, generic_graph, generic_partner_search, Component, Graph, NeighborlyMode};
use resonance_core::oracle::{hessian_check, regulus_check, scan_component, scan_resonance, DEFAULT_CAP, DEFAULT_SEED};
use resonance_core::osalg::{
    coefficient_sum, format_weight, is_resonant_pair, pair_graph, pair_support, parse_weight, wedge_components,
    wedge_is_zero, z_of,
};
use resonance_core::rings::{are_dependent, is_parallel, make_ring, Kernel, Ring, Scalar, Subspace};
use resonance_core::schubert::{carrier_degree, SchubertClass};

struct Outcome {
    pass: bool,
    detail: String,
    /// For a known failure: the brute-force confirmation of the computed value.
    confirmed: Option<bool>,
}

fn ok(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into(), confirmed: None }
}

const KNOWN: &[usize] = &[1, 2, 4];

fn w(ring: &Ring, n: usize, s: &str) -> Vec<Scalar> {
    parse_weight(ring, n, s).unwrap()
}

fn ring(s: &str) -> Ring {
    make_ring(s).unwrap()
}

/// All vectors of `R^n` for a finite `R`, by odometer.
fn all_vectors(ring: &Ring, n: usize) -> Vec<Vec<Scalar>> {
    let elems: Vec<Scalar> = ring.elements().unwrap().collect();
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                elems.iter().map(move |e| {
                    let mut v = v.clone();
                    v.push(e.clone());
                    v
                })
            })
            .collect();
    }
    out
}

fn is_zero_vec(ring: &Ring, v: &[Scalar]) -> bool {
    v.iter().all(|a| ring.is_zero(a))
}

/// `|{x : x_L = 0 for every line L}|` by enumeration.
fn incidence_kernel_size(m: &Matroid, lines: &[Vec<usize>], ring: &Ring) -> usize {
    all_vectors(ring, m.n())
        .iter()
        .filter(|x| lines.iter().all(|l| ring.is_zero(&coefficient_sum(ring, x, l))))
        .count()
}

fn log_q(size: usize, q: usize) -> usize {
    let mut d = 0;
    let mut s = 1;
    while s < size {
        s *= q;
        d += 1;
    }
    d
}

fn criterion1() -> Outcome {
    let braid = catalog("braid-K4").unwrap();
    let mut pass = true;
    let mut detail = Vec::new();
    let mut confirmed = true;
    for spec in ["Q", "F2", "F3", "F5"] {
        let r = ring(spec);
        let rank = braid.incidence_matrix(braid.nontrivial_lines(), &r).rank_field().unwrap();
        detail.push(format!("braid/{spec} rank {rank}"));
        if rank != 4 {
            pass = false;
            let size = incidence_kernel_size(&braid, braid.nontrivial_lines(), &r);
            confirmed &= 6 - log_q(size, r.cardinality().unwrap() as usize) == rank;
        }
    }
    let nf = catalog("nonfano").unwrap();
    let f2 = ring("F2");
    let nf_rank = nf.incidence_matrix(nf.nontrivial_lines(), &f2).rank_field().unwrap();
    detail.push(format!("nonfano/F2 rank {nf_rank}"));
    pass &= nf_rank == 4;
    let h = catalog("hessian").unwrap();
    let h_rank = h.incidence_matrix(h.nontrivial_lines(), &ring("F3")).rank_field().unwrap();
    detail.push(format!("hessian/F3 rank {h_rank}"));
    pass &= h_rank == 6;
    let confirmed = (!pass).then_some(confirmed && nf_rank == 4 && h_rank == 6);
    Outcome { pass, detail: detail.join(", "), confirmed }
}

fn criterion2() -> Outcome {
    let braid = catalog("braid-K4").unwrap();
    let f2 = ring("F2");
    let g = Graph::parse(6, "12|34|56").unwrap();
    let comp = Component::new(&braid, &g, &f2).unwrap();
    let k = comp.k_space().unwrap().clone();
    let want = Subspace::from_spanning(&f2, 6, vec![w(&f2, 6, "110011"), w(&f2, 6, "001111")]).unwrap();
    let k_ok = k == want;
    let pts = ["110011", "001111", "111100"].map(|s| w(&f2, 6, s));
    let mut pairs_ok = true;
    for i in 0..3 {
        for j in i + 1..3 {
            pairs_ok &= is_resonant_pair(&braid, &f2, &pts[i], &pts[j]).unwrap();
        }
    }
    let scan = scan_component(&g, &braid, &f2, DEFAULT_CAP).unwrap();
    let carrier_full = scan.carrier as u128 == scan.scanned;
    let carrier: BTreeSet<String> = scan.carrier_points().map(|c| format_weight(&f2, &k.combine(c))).collect();
    let detail = format!(
        "dim K = {} (basis {}), pairs resonant {pairs_ok}, carrier {}/{} points {{{}}}",
        k.dim(),
        k.basis().iter().map(|b| format_weight(&f2, b)).collect::<Vec<_>>().join(","),
        scan.carrier,
        scan.scanned,
        carrier.into_iter().collect::<Vec<_>>().join(",")
    );
    let pass = k_ok && pairs_ok && carrier_full;
    // Over F_2 the four line rows sum to zero, so K has 2^3 elements.
    let confirmed = (!pass).then(|| {
        let lines: Vec<Vec<usize>> = braid.nontrivial_lines().to_vec();
        incidence_kernel_size(&braid, &lines, &f2) == 1 << k.dim() && k.contains(&pts[0]) && k.contains(&pts[1]) && pairs_ok
    });
    Outcome { pass, detail, confirmed }
}

fn criterion3() -> Outcome {
    let nf = catalog("nonfano").unwrap();
    let f2 = ring("F2");
    let lambda = w(&f2, 7, "0011110");
    let dim_z = z_of(&nf, &f2, &lambda).unwrap().dim().unwrap();
    let all = all_vectors(&f2, 7);
    let mut full_support = 0;
    for a in &all {
        for b in &all {
            if pair_support(&f2, a, b).len() == 7 && is_resonant_pair(&nf, &f2, a, b).unwrap() {
                full_support += 1;
            }
        }
    }
    let (e, _mu) = generic_partner_search(&lambda, &nf, &f2, 5).unwrap();
    let g = generic_graph(&lambda, &nf, &f2).unwrap();
    let pass = dim_z == 3 && full_support == 0 && g.to_string() == "127|3|4|5|6";
    ok(pass, format!("dim Z = {dim_z}, full-support pairs {full_support}, partner over {e}, Γ_λ = {g}"))
}

fn criterion4() -> Outcome {
    let db3 = catalog("deletedB3").unwrap();
    let f2 = ring("F2");
    let z = |s: &str| match z_of(&db3, &f2, &w(&f2, 8, s)).unwrap() {
        Kernel::Field(s) => s,
        Kernel::ModN(_) => unreachable!(),
    };
    let meet = z("01100101").meet(&z("10010101")).unwrap();
    let meet_ok = meet == z("11110000");
    let eta = w(&f2, 8, "11110000");
    let g1 = Graph::parse(8, "1457|27|37|67|78").unwrap();
    let g2 = Graph::parse(8, "2357|15|45|56|58").unwrap();
    let in1 = Component::new(&db3, &g1, &f2).unwrap().v1_contains(&eta, DEFAULT_CAP).unwrap();
    let in2 = Component::new(&db3, &g2, &f2).unwrap().v1_contains(&eta, DEFAULT_CAP).unwrap();
    let t = Instant::now();
    let mut max_dim = 0;
    for spec in ["F2", "F4"] {
        let r = scan_resonance(&db3, &ring(spec), DEFAULT_CAP).unwrap();
        max_dim = max_dim.max(r.dim_histogram.keys().copied().max().unwrap_or(0));
    }
    let scan_time = t.elapsed();
    let rest = meet_ok && in1 && in2 && scan_time < Duration::from_secs(30);
    let pass = rest && max_dim < 3;
    // dim Z >= 3 recounted from the wedge alone: the 4-point line carries a
    // local component, and λ₁ pairs with 8 weights.
    let confirmed = (!pass).then(|| {
        let all = all_vectors(&f2, 8);
        let z_size = |s: &str| {
            let l = w(&f2, 8, s);
            all.iter().filter(|e| wedge_is_zero(&db3, &f2, &l, e).unwrap()).count()
        };
        rest && max_dim == 3 && z_size("00001111") == 8 && z_size("01100101") == 8
    });
    Outcome {
        pass,
        confirmed,
        detail: format!(
            "Z∩Z = Z(11110000) {meet_ok} (dim {}), 11110000 ∈ V¹(Γ₁) {in1}, ∈ V¹(Γ₂) {in2}, max dim Z over F2/F4 {max_dim}, scans {:.2?}",
            meet.dim(),
            scan_time
        ),
    }
}

fn criterion5() -> Outcome {
    let db3 = catalog("deletedB3").unwrap();
    let z4 = ring("Z4");
    let lambda = w(&z4, 8, "11112222");
    let eta = w(&z4, 8, "23100123");
    let Kernel::ModN(kernel) = z_of(&db3, &z4, &lambda).unwrap() else { unreachable!() };
    let codes = |v: &[Scalar]| v.iter().map(|s| s.code().unwrap() as u64).collect::<Vec<_>>();
    let want = resonance_core::rings::HowellModule::from_generators(4, 8, &[codes(&lambda), codes(&eta)]);
    let module_ok = kernel == want && kernel.is_free_of_rank(2);
    let g = pair_graph(&db3, &z4, &lambda, &eta).unwrap();
    let edges_ok = g.edge_string() == "15,27,37,45,57,68";
    let mut sums_ok = true;
    for x in db3.nontrivial_lines() {
        let lx = coefficient_sum(&z4, &lambda, x);
        let ex = coefficient_sum(&z4, &eta, x);
        let expect_eta = if x == &vec![4, 5, 6, 7] { 2 } else { 0 };
        sums_ok &= z4.is_zero(&lx) && ex == z4.from_i64(expect_eta);
    }
    let all: Vec<usize> = (0..8).collect();
    let total_zero = z4.is_zero(&coefficient_sum(&z4, &lambda, &all));
    let eta2: Vec<Scalar> = lambda.iter().zip(&eta).map(|(l, e)| z4.add(l, &z4.mul(&z4.from_i64(2), e))).collect();
    let pair2 = is_resonant_pair(&db3, &z4, &lambda, &eta2).unwrap();
    let dep = lambda
        .iter()
        .zip(&eta2)
        .all(|(l, e)| z4.is_zero(&z4.add(&z4.mul(&z4.from_i64(2), l), &z4.mul(&z4.from_i64(2), e))));
    let blocks = pair_graph(&db3, &z4, &lambda, &eta2).map(|g| g.to_string()).unwrap_or_default();
    let blocks_ok = blocks == "1457|2357|5678";
    ok(
        module_ok && edges_ok && sums_ok && total_zero && pair2 && dep && blocks_ok,
        format!(
            "Z(λ) = ⟨λ,η⟩ {module_ok}, edges {}, line sums {sums_ok}, λ_[8]=0 {total_zero}, (λ,λ+2η) resonant {pair2}, blocks {blocks}",
            g.edge_string()
        ),
    )
}

fn criterion6() -> Outcome {
    let p3 = catalog("pencil-3").unwrap();
    let z6 = ring("Z6");
    let l = w(&z6, 3, "5,3,1");
    let e = w(&z6, 3, "5,1,3");
    let pair = is_resonant_pair(&p3, &z6, &l, &e).unwrap();
    let sum = coefficient_sum(&z6, &l, &[0, 1, 2]);
    let sum_ok = sum == z6.from_i64(3);
    let all = all_vectors(&z6, 3);
    let mut disagree = 0;
    for a in &all {
        let sa = z6.sum(a);
        for b in &all {
            let sb = z6.sum(b);
            let c1 = wedge_is_zero(&p3, &z6, a, b).unwrap();
            let c2 = (0..3).all(|k| z6.is_zero(&z6.det2(&sa, &sb, &a[k], &b[k])));
            let c3 = (0..3).all(|k| z6.mul(&sa, &b[k]) == z6.mul(&sb, &a[k]));
            if c1 != c2 || c2 != c3 {
                disagree += 1;
            }
        }
    }
    ok(
        pair && sum_ok && disagree == 0,
        format!("pair resonant {pair}, λ_[3] = {}, disagreements over 6^6 pairs {disagree}", z6.format_scalar(&sum)),
    )
}

fn criterion7() -> Outcome {
    let os = catalog("olive-samansky").unwrap();
    let f2 = ring("F2");
    let g = Graph::parse(10, "1234|5678|9α").unwrap();
    let arr = directrices(&g, &os, &f2).unwrap();
    let dim_k = arr.dim_k();
    let proper = arr.proper_part();
    let mut dims: Vec<usize> = proper.iter().map(|d| d.space.dim()).collect();
    dims.sort();
    let poles = arr.poles();
    let pole_pts: BTreeSet<String> = poles.iter().map(|d| format_weight(&f2, &arr.to_ambient(&d.space.basis()[0]))).collect();
    let poles_ok = pole_pts == ["0000111111", "1111000011"].iter().map(|s| s.to_string()).collect();
    let pole_line = poles.iter().try_fold(Subspace::zero(&f2, dim_k), |acc, d| acc.join(&d.space)).unwrap();
    let line = proper.iter().find(|d| d.space.dim() == 2).map(|d| d.space.clone());
    let hit = line.as_ref().map(|l| l.meet(&pole_line).unwrap());
    let hit_str = hit
        .as_ref()
        .filter(|h| h.dim() == 1)
        .map(|h| format_weight(&f2, &arr.to_ambient(&h.basis()[0])))
        .unwrap_or_default();
    let scan = scan_component(&g, &os, &f2, DEFAULT_CAP).unwrap();
    let carrier_on_line = scan.carrier_points().all(|p| pole_line.contains(p));
    let carrier_ok = scan.carrier == 3 && carrier_on_line;
    let comp = Component::new(&os, &g, &f2).unwrap();
    let k = comp.k_space().unwrap();
    let all: Vec<usize> = (0..10).collect();
    let elems = all_vectors(&f2, dim_k).into_iter().map(|c| k.combine(&c)).collect::<Vec<_>>();
    let v1: HashSet<Vec<Scalar>> = elems
        .iter()
        .filter(|x| is_zero_vec(&f2, x) || comp.v1_contains(x, DEFAULT_CAP).unwrap())
        .cloned()
        .collect();
    let k0: HashSet<Vec<Scalar>> =
        elems.iter().filter(|x| f2.is_zero(&coefficient_sum(&f2, x, &all))).cloned().collect();
    let differs = v1 != k0;
    ok(
        dim_k == 4 && dims == vec![1, 1, 2] && poles_ok && hit_str == "1111111100" && carrier_ok && differs,
        format!(
            "dim K = {dim_k}, D₀ dims {dims:?}, poles {pole_pts:?}, pole line meets L at {hit_str}, carrier {} points on pole line {carrier_on_line}, |V¹| = {} vs |K₀| = {}",
            scan.carrier,
            v1.len(),
            k0.len()
        ),
    )
}

fn criterion8() -> Outcome {
    let w10 = SchubertClass::shape(5, 1, 0).unwrap();
    let p4 = w10.pow(4).unwrap();
    let p4_ok = p4.terms_string() == "3*W(3,1) + 2*W(2,2)";
    let top = p4.product(&SchubertClass::shape(5, 2, 0).unwrap()).unwrap();
    let top_ok = top.terms_string() == "3*W(3,3)";
    let (_, hess) = carrier_degree(&[2, 2, 2, 2], 5, 1).unwrap();
    let reg = regulus_check(&ring("F3"), DEFAULT_SEED).unwrap();
    let codims: Vec<usize> = reg.planes.iter().map(|p| 4 - p.len()).collect();
    let (_, reg_deg) = carrier_degree(&codims, 4, 1).unwrap();
    ok(
        p4_ok && top_ok && hess == BigInt::from(3) && reg_deg == BigInt::from(2) && reg.matches,
        format!(
            "W(1,0)^4 = {}, ·W(2,0) = {}, Hessian degree {hess}, regulus degree {reg_deg} (carrier {} = (q+1)^2 {})",
            p4.terms_string(),
            top.terms_string(),
            reg.carrier,
            reg.matches
        ),
    )
}

fn criterion9() -> Outcome {
    let f3 = hessian_check(&ring("F3"), DEFAULT_CAP, usize::MAX, false).unwrap();
    let t = Instant::now();
    let f9 = hessian_check(&ring("F9"), DEFAULT_CAP, 2000, true).unwrap();
    let f9_time = t.elapsed();
    let cubic = f9.cubic.as_ref().unwrap();
    let geom = |r: &resonance_core::oracle::HessianReport| {
        r.dim_k == 6
            && r.directrix_dims == vec![3; 4]
            && r.meet_dims == vec![1; 6]
            && r.meets_span_dim == 3
            && r.join_dim == 5
            && r.carrier > 0
            && r.depth2_in_meet_plane
            && r.depth_agrees
    };
    let pass = geom(&f3) && geom(&f9) && cubic.fit.dim >= 1 && cubic.cuts_out_points && f9_time < Duration::from_secs(600);
    ok(
        pass,
        format!(
            "F3: carrier {} strata {:?}; F9: carrier {} strata {:?}, cubic forms dim {} (escalation needed {}), zero set = carrier {}, {:.1?}",
            f3.carrier, f3.strata, f9.carrier, f9.strata, cubic.fit.dim, cubic.escalation_needed, cubic.cuts_out_points, f9_time
        ),
    )
}

fn random_vec(rng: &mut ChaCha8Rng, ring: &Ring, n: usize) -> Vec<Scalar> {
    match ring.cardinality() {
        Some(q) => (0..n).map(|_| ring.from_code(rng.gen_range(0..q)).unwrap()).collect(),
        None => (0..n).map(|_| ring.rational(rng.gen_range(-3..=3), rng.gen_range(1..=3)).unwrap()).collect(),
    }
}

fn criterion10() -> Outcome {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);

    // Parallel implies dependent; the converse over domains.
    for spec in ["Q", "F2", "F3", "F5", "Z4", "Z6"] {
        let r = ring(spec);
        let mut bad = 0;
        for _ in 0..10_000 {
            let a = random_vec(&mut rng, &r, 3);
            let b = if rng.gen_bool(0.3) {
                let c = random_vec(&mut rng, &r, 1)[0].clone();
                a.iter().map(|x| r.mul(x, &c)).collect()
            } else {
                random_vec(&mut rng, &r, 3)
            };
            let par = is_parallel(&r, &a, &b).unwrap();
            let dep = are_dependent(&r, &a, &b).unwrap();
            if (par && !dep) || (r.is_domain() && dep && !par) {
                bad += 1;
            }
        }
        if bad > 0 {
            failures.push(format!("parallel/dependent {spec}: {bad}"));
        }
    }

    // Antisymmetry of the wedge components.
    for (name, spec) in [("nonfano", "F3"), ("deletedB3", "Z4"), ("hessian", "F5")] {
        let m = catalog(name).unwrap();
        let r = ring(spec);
        for _ in 0..1000 {
            let a = random_vec(&mut rng, &r, m.n());
            let b = random_vec(&mut rng, &r, m.n());
            let ab = wedge_components(&m, &r, &a, &b).unwrap();
            let ba = wedge_components(&m, &r, &b, &a).unwrap();
            let anti = ab.iter().zip(&ba).all(|((_, x), (_, y))| x.iter().zip(y).all(|(u, v)| r.is_zero(&r.add(u, v))));
            if !anti {
                failures.push(format!("antisymmetry {name}/{spec}"));
                break;
            }
        }
    }

    // Z_Γ(λ) ⊆ Z(λ), and depth = dim Z_Γ - 1 over every projective point of K.
    let cases = [
        ("braid-K4", "12|34|56", "F3"),
        ("braid-K4", "12|34|56", "F5"),
        ("nonfano", "127|3|4|5|6", "F4"),
        ("olive-samansky", "1234|5678|9α", "F2"),
        ("hessian", "123|456|789|αβγ", "F3"),
    ];
    for (name, gs, spec) in cases {
        let m = catalog(name).unwrap();
        let r = ring(spec);
        let g = Graph::parse(m.n(), gs).unwrap();
        let comp = Component::new(&m, &g, &r).unwrap();
        let k = comp.k_space().unwrap().clone();
        let arr = directrices(&g, &m, &r).unwrap();
        let scan = scan_component(&g, &m, &r, DEFAULT_CAP).unwrap();
        for (c, dim) in &scan.points {
            let lambda = k.combine(c);
            let zg = comp.z_gamma(&lambda).unwrap();
            let Kernel::Field(z) = z_of(&m, &r, &lambda).unwrap() else { unreachable!() };
            if zg.dim() != *dim || !z.contains_subspace(&zg) {
                failures.push(format!("Z_Γ ⊆ Z {name}/{spec}"));
                break;
            }
            if arr.depth(c).unwrap() + 1 != *dim {
                failures.push(format!("depth {name}/{spec} at {}", format_weight(&r, &lambda)));
                break;
            }
        }
    }

    // Pair graphs of resonant pairs are neighborly.
    for (name, spec) in [("braid-K4", "F2"), ("nonfano", "F2"), ("pencil-3", "Z6"), ("deletedB3", "F2")] {
        let m = catalog(name).unwrap();
        let r = ring(spec);
        let all = all_vectors(&r, m.n());
        let mut bad = 0;
        for _ in 0..10_000 {
            let a = &all[rng.gen_range(0..all.len())];
            let b = &all[rng.gen_range(0..all.len())];
            if is_resonant_pair(&m, &r, a, b).unwrap()
                && !pair_graph(&m, &r, a, b).unwrap().is_neighborly(&m, NeighborlyMode::CliqueClosure)
            {
                bad += 1;
            }
        }
        if bad > 0 {
            failures.push(format!("pair graphs {name}/{spec}: {bad}"));
        }
    }

    // Decomposition equality.
    for (name, spec) in [
        ("braid-K4", "F2"),
        ("braid-K4", "F3"),
        ("nonfano", "F2"),
        ("pencil-3", "F2"),
        ("pencil-3", "F3"),
        ("pencil-4", "F2"),
        ("pencil-4", "F3"),
        ("pencil-5", "F2"),
    ] {
        let rep = decomposition_check(&catalog(name).unwrap(), &ring(spec), DEFAULT_CAP).unwrap();
        if !rep.equal || rep.nesting_violations > 0 {
            failures.push(format!("decomposition {name}/{spec}"));
        }
    }

    // Chow ring of G(2,k).
    for k in 2..=8 {
        let shapes: Vec<SchubertClass> = (0..=k - 2)
            .flat_map(|a| (0..=a).map(move |b| SchubertClass::shape(k, a, b).unwrap()))
            .collect();
        let top = 2 * (k - 2);
        for x in &shapes {
            for y in &shapes {
                let xy = x.product(y).unwrap();
                if xy != y.product(x).unwrap() {
                    failures.push(format!("commutativity k={k}"));
                }
                let (sx, sy) = (x.terms().keys().next().unwrap(), y.terms().keys().next().unwrap());
                if sx.codim() + sy.codim() == top {
                    let dual = sy.0 == k - 2 - sx.1 && sy.1 == k - 2 - sx.0;
                    let want = if dual { 1 } else { 0 };
                    if xy.coefficient(resonance_core::schubert::Shape(k - 2, k - 2)) != BigInt::from(want) {
                        failures.push(format!("duality k={k} {sx} {sy}"));
                    }
                }
                for z in shapes.iter().step_by(2) {
                    if xy.product(z).unwrap() != x.product(&y.product(z).unwrap()).unwrap() {
                        failures.push(format!("associativity k={k}"));
                    }
                }
            }
        }
    }
    failures.dedup();
    let detail = if failures.is_empty() { "all suites clean".to_string() } else { failures.join("; ") };
    ok(failures.is_empty(), detail)
}

fn main() {
    let criteria: [(usize, &str, fn() -> Outcome, Duration); 10] = [
        (1, "incidence ranks", criterion1, Duration::from_secs(1)),
        (2, "braid component", criterion2, Duration::from_secs(1)),
        (3, "non-Fano over F2", criterion3, Duration::from_secs(5)),
        (4, "deleted B3 over F2", criterion4, Duration::from_secs(60)),
        (5, "deleted B3 over Z4", criterion5, Duration::from_secs(1)),
        (6, "rank two over Z6", criterion6, Duration::from_secs(10)),
        (7, "Olive-Samansky over F2", criterion7, Duration::from_secs(1)),
        (8, "Schubert degrees", criterion8, Duration::from_secs(1)),
        (9, "Hessian over F3/F9", criterion9, Duration::from_secs(600)),
        (10, "property suites", criterion10, Duration::from_secs(600)),
    ];
    let mut unexpected = Vec::new();
    for (id, name, run, budget) in criteria {
        let t = Instant::now();
        let mut out = run();
        let elapsed = t.elapsed();
        if elapsed > budget {
            out.pass = false;
            out.detail.push_str(&format!("; over budget {budget:?}"));
        }
        let status = if out.pass { "PASS" } else { "FAIL" };
        println!("criterion {id:>2} {status} [{name}] {} ({elapsed:.2?})", out.detail);
        if !out.pass {
            if KNOWN.contains(&id) && out.confirmed == Some(true) {
                println!("             known discrepancy, confirmed by brute-force enumeration");
            } else {
                unexpected.push(id);
            }
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
