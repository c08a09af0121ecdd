use std::fmt;

use serde::Serialize;
use serde_json::{json, Map, Value};

use resonance_core::linegeom::directrices;
use resonance_core::matroid::Matroid;
use resonance_core::neighborly::{
    decomposition_check, enumerate_neighborly, ConeChoice, Component, EnumMode, EnumOptions, Graph, NeighborlyMode,
};
use resonance_core::notation::{format_set, parse_set};
use resonance_core::oracle::{fit_in_span, regulus_check, scan_component, scan_resonance};
use resonance_core::osalg::{
    format_weight, is_resonant_pair, pair_graph, parse_weight, resonant_partner, wedge_is_zero, z_of,
};
use resonance_core::rings::{is_parallel, make_ring, Kernel, Ring, Scalar};
use resonance_core::schubert::{carrier_degree, SchubertClass};
use resonance_core::{Error, Result};

use crate::{Common, Format, LineSel, ModeArg, NeighborlyArg, Verb};

/// A one-line summary plus a JSON body; text output renders the body.
pub struct Report {
    format: Format,
    summary: String,
    body: Value,
}

impl Report {
    fn new(format: Format, summary: impl Into<String>, body: impl Serialize) -> Result<Report> {
        Ok(Report { format, summary: summary.into(), body: serde_json::to_value(body)? })
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.format {
            Format::Json => {
                let mut obj = Map::new();
                obj.insert("summary".into(), Value::from(self.summary.clone()));
                match &self.body {
                    Value::Object(m) => obj.extend(m.clone()),
                    other => {
                        obj.insert("result".into(), other.clone());
                    }
                }
                let text = serde_json::to_string_pretty(&Value::Object(obj)).map_err(|_| fmt::Error)?;
                write!(f, "{text}")
            }
            Format::Text => {
                write!(f, "{}", self.summary)?;
                render(f, &self.body, 1)
            }
        }
    }
}

fn scalar_text(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => {
            Some(a.iter().filter_map(scalar_text).collect::<Vec<_>>().join(", "))
        }
        _ => None,
    }
}

fn render(f: &mut fmt::Formatter<'_>, v: &Value, depth: usize) -> fmt::Result {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match scalar_text(x) {
                    Some(s) => write!(f, "\n{pad}{k}: {s}")?,
                    None => {
                        write!(f, "\n{pad}{k}:")?;
                        render(f, x, depth + 1)?;
                    }
                }
            }
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                match scalar_text(x) {
                    Some(s) => write!(f, "\n{pad}- {s}")?,
                    None => {
                        write!(f, "\n{pad}[{i}]")?;
                        render(f, x, depth + 1)?;
                    }
                }
            }
        }
        other => write!(f, "\n{pad}{}", scalar_text(other).unwrap_or_default())?,
    }
    Ok(())
}

struct Ctx {
    m: Matroid,
    ring: Ring,
    format: Format,
    cap: u128,
}

fn setup(c: &Common) -> Result<Ctx> {
    if let Some(j) = c.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build_global()
            .map_err(|e| Error::Parse(format!("--jobs: {e}")))?;
    }
    Ok(Ctx { m: c.matroid()?, ring: make_ring(&c.ring)?, format: c.format, cap: c.cap() })
}

impl Ctx {
    fn weight(&self, s: &str) -> Result<Vec<Scalar>> {
        parse_weight(&self.ring, self.m.n(), s)
    }

    fn graph(&self, s: &str) -> Result<Graph> {
        Graph::parse(self.m.n(), s)
    }

    fn show(&self, v: &[Scalar]) -> String {
        format_weight(&self.ring, v)
    }

    fn lines(&self, sel: LineSel) -> Vec<Vec<usize>> {
        match sel {
            LineSel::All => self.m.nontrivial_lines().to_vec(),
            LineSel::Every => self.m.all_lines(),
        }
    }
}

fn sets(xs: &[Vec<usize>]) -> Vec<String> {
    xs.iter().map(|x| format_set(x)).collect()
}

pub fn run(verb: Verb) -> Result<Report> {
    match verb {
        Verb::Info(c) => {
            let cx = setup(&c)?;
            let m = &cx.m;
            let summary = format!(
                "{}: n = {}, rank {}, {} nontrivial lines, {} trivial lines",
                m.name(),
                m.n(),
                m.rank(),
                m.nontrivial_lines().len(),
                m.trivial_lines().len()
            );
            Report::new(
                cx.format,
                summary,
                json!({
                    "matroid": m.name(),
                    "n": m.n(),
                    "rank": m.rank(),
                    "nontrivial_lines": sets(m.nontrivial_lines()),
                    "trivial_lines": m.trivial_lines().len(),
                    "whitney2": m.whitney2(),
                }),
            )
        }
        Verb::Lines { common, all } => {
            let cx = setup(&common)?;
            let lines = cx.lines(if all { LineSel::Every } else { LineSel::All });
            Report::new(cx.format, format!("{} lines", lines.len()), json!({ "lines": sets(&lines) }))
        }
        Verb::Incidence { common, lines } => {
            let cx = setup(&common)?;
            let ls = cx.lines(lines);
            let mat = cx.m.incidence_matrix(&ls, &cx.ring);
            let rows: Vec<String> = mat.row_vecs().iter().map(|r| cx.show(r)).collect();
            let rank = if cx.ring.is_field() { Some(mat.rank_field()?) } else { None };
            let summary = match rank {
                Some(r) => format!("{}x{} incidence matrix of rank {r}", ls.len(), cx.m.n()),
                None => format!("{}x{} incidence matrix", ls.len(), cx.m.n()),
            };
            Report::new(cx.format, summary, json!({ "lines": sets(&ls), "rows": rows, "rank": rank }))
        }
        Verb::Kernel { common, lines, weight } => {
            let cx = setup(&common)?;
            let (kernel, what) = match &weight {
                Some(w) => {
                    let l = cx.weight(w)?;
                    (z_of(&cx.m, &cx.ring, &l)?, format!("Z({})", cx.show(&l)))
                }
                None => (cx.m.incidence_matrix(&cx.lines(lines), &cx.ring).kernel()?, "incidence kernel".to_string()),
            };
            let gens: Vec<String> = kernel.generators().iter().map(|g| cx.show(g)).collect();
            let (summary, size) = match &kernel {
                Kernel::Field(s) => {
                    let n = cx.m.n();
                    let summary = match weight {
                        Some(_) => format!("dim Z = {}", s.dim()),
                        None => format!("rank {}, nullity {}", n - s.dim(), s.dim()),
                    };
                    (summary, None)
                }
                Kernel::ModN(h) => (format!("{what}: {} elements, {} generators", h.size(), gens.len()), Some(h.size())),
            };
            Report::new(
                cx.format,
                summary,
                json!({ "kernel": what, "ring": cx.ring.to_string(), "dim": kernel.dim(), "size": size.map(|s| s.to_string()), "generators": gens }),
            )
        }
        Verb::Resonant { common, weight, eta } => {
            let cx = setup(&common)?;
            let l = cx.weight(&weight)?;
            match eta {
                Some(e) => {
                    let e = cx.weight(&e)?;
                    let wedge = wedge_is_zero(&cx.m, &cx.ring, &l, &e)?;
                    let parallel = is_parallel(&cx.ring, &l, &e)?;
                    let pair = is_resonant_pair(&cx.m, &cx.ring, &l, &e)?;
                    let summary = if pair { "resonant pair" } else { "not a resonant pair" };
                    Report::new(
                        cx.format,
                        summary,
                        json!({ "lambda": cx.show(&l), "eta": cx.show(&e), "wedge_zero": wedge, "parallel": parallel, "resonant_pair": pair }),
                    )
                }
                None => {
                    let z = z_of(&cx.m, &cx.ring, &l)?;
                    let partner = resonant_partner(&cx.m, &cx.ring, &l)?;
                    let nonzero = l.iter().any(|a| !cx.ring.is_zero(a));
                    let resonant = match z.dim() {
                        Some(d) => nonzero && d >= 2,
                        None => partner.is_some(),
                    };
                    let verdict = if resonant { "resonant" } else { "not resonant" };
                    let summary = match (z.dim(), &partner) {
                        (Some(d), _) => format!("{verdict}; dim Z = {d}"),
                        (None, Some(p)) if resonant => format!("{verdict}; partner {}", cx.show(p)),
                        _ => verdict.to_string(),
                    };
                    Report::new(
                        cx.format,
                        summary,
                        json!({
                            "lambda": cx.show(&l),
                            "resonant": resonant,
                            "dim_z": z.dim(),
                            "partner": partner.map(|p| cx.show(&p)),
                            "z_generators": z.generators().iter().map(|g| cx.show(g)).collect::<Vec<_>>(),
                        }),
                    )
                }
            }
        }
        Verb::PairGraph { common, weight, eta } => {
            let cx = setup(&common)?;
            let l = cx.weight(&weight)?;
            let e = cx.weight(&eta)?;
            let g = pair_graph(&cx.m, &cx.ring, &l, &e)?;
            Report::new(
                cx.format,
                format!("Γ = {g}"),
                json!({
                    "graph": g.to_string(),
                    "edges": g.edge_string(),
                    "blocks": sets(&g.blocks()),
                    "cone_vertices": g.cone_vertices().iter().map(|v| v + 1).collect::<Vec<_>>(),
                    "neighborly": g.is_neighborly(&cx.m, NeighborlyMode::CliqueClosure),
                }),
            )
        }
        Verb::Neighborly { common, graph, mode, neighborly, cone } => {
            let cx = setup(&common)?;
            let nmode = match neighborly {
                NeighborlyArg::CliqueClosure => NeighborlyMode::CliqueClosure,
                NeighborlyArg::StrictBlock => NeighborlyMode::StrictBlock,
            };
            match graph {
                Some(gs) => {
                    let g = cx.graph(&gs)?;
                    let closure = g.is_neighborly(&cx.m, NeighborlyMode::CliqueClosure);
                    let strict = g.is_neighborly(&cx.m, NeighborlyMode::StrictBlock);
                    let verdict = if g.is_neighborly(&cx.m, nmode) { "neighborly" } else { "not neighborly" };
                    Report::new(
                        cx.format,
                        format!("{g}: {verdict}"),
                        json!({ "graph": g.to_string(), "clique_closure": closure, "strict_block": strict, "x_gamma": sets(&g.x_gamma(&cx.m).iter().map(|&i| cx.m.nontrivial_lines()[i].clone()).collect::<Vec<_>>()) }),
                    )
                }
                None => {
                    let options = EnumOptions {
                        mode: match mode {
                            ModeArg::Partitions => EnumMode::Partitions,
                            ModeArg::AllGraphs => EnumMode::AllGraphs,
                        },
                        cone: match cone {
                            Some(c) => ConeChoice::Exactly(parse_set(&c)?),
                            None => ConeChoice::Any,
                        },
                        neighborly: nmode,
                        cap: cx.cap,
                    };
                    let graphs = enumerate_neighborly(&cx.m, &cx.ring, &options)?;
                    let rows: Vec<Value> = graphs
                        .iter()
                        .map(|g| {
                            let dim = Component::new(&cx.m, g, &cx.ring).ok().and_then(|c| c.dim_k());
                            json!({ "graph": g.to_string(), "dim_k": dim })
                        })
                        .collect();
                    Report::new(cx.format, format!("{} neighborly graphs", graphs.len()), json!({ "graphs": rows }))
                }
            }
        }
        Verb::Component { common, graph, weight, k } => {
            let cx = setup(&common)?;
            let g = cx.graph(&graph)?;
            let comp = Component::new(&cx.m, &g, &cx.ring)?;
            let mut witnesses = Vec::new();
            let mut extra = Map::new();
            if let Some(w) = weight {
                let l = cx.weight(&w)?;
                let in_k = comp.k_contains(&l);
                extra.insert("in_k".into(), json!(in_k));
                if in_k {
                    if cx.ring.is_field() {
                        extra.insert("dim_z_gamma".into(), json!(comp.dim_z_gamma(&l)?));
                    }
                    let partner = comp.partner(&l, cx.cap)?;
                    extra.insert("in_v1".into(), json!(partner.is_some()));
                    if let Some(p) = partner {
                        witnesses.push((l.clone(), p));
                    }
                    if let Some(k) = k {
                        extra.insert("in_v1_k".into(), json!(comp.v1_k_contains(&l, k)?));
                    }
                }
            }
            let mut body = serde_json::to_value(comp.report(&witnesses))?;
            if let Value::Object(m) = &mut body {
                m.extend(extra);
            }
            let summary = match comp.dim_k() {
                Some(d) => format!("K({g}) has dim {d}"),
                None => format!("K({g}) over {}", cx.ring),
            };
            Report::new(cx.format, summary, body)
        }
        Verb::Directrices { common, graph } => {
            let cx = setup(&common)?;
            let g = cx.graph(&graph)?;
            let arr = directrices(&g, &cx.m, &cx.ring)?;
            let rep = arr.report();
            let dims: Vec<String> = rep.members.iter().map(|d| d.dim.to_string()).collect();
            Report::new(
                cx.format,
                format!("{} directrices in K of dim {}; dims {}", rep.members.len(), rep.dim_k, dims.join(",")),
                rep,
            )
        }
        Verb::Depth { common, graph, weight, regulus, seed } => {
            let cx = setup(&common)?;
            if regulus {
                let rep = regulus_check(&cx.ring, seed)?;
                let summary = format!("carrier {} points, expected {}", rep.carrier, rep.expected);
                return Report::new(cx.format, summary, rep);
            }
            let (Some(gs), Some(ws)) = (graph, weight) else {
                return Err(Error::Parse("depth needs --graph and --weight, or --regulus".into()));
            };
            let g = cx.graph(&gs)?;
            let arr = directrices(&g, &cx.m, &cx.ring)?;
            let xi = cx.weight(&ws)?;
            let c = arr.to_k_coords(&xi).ok_or(Error::NotInK)?;
            let cone = arr.cone(&c)?;
            let depth = cone.dim() - 1;
            let basis: Vec<String> = cone.basis().iter().map(|b| cx.show(&arr.to_ambient(b))).collect();
            Report::new(cx.format, format!("depth {depth}"), json!({ "weight": cx.show(&xi), "depth": depth, "cone": basis }))
        }
        Verb::Schubert { k, pieri, shapes, format } => {
            let mut class = SchubertClass::one(k)?;
            for s in &pieri {
                class = class.product(&SchubertClass::shape(k, *s, 0)?)?;
            }
            if let Some(spec) = shapes {
                for part in spec.split(';').filter(|p| !p.trim().is_empty()) {
                    let ab: Vec<usize> = part
                        .split(',')
                        .map(|x| x.trim().parse().map_err(|_| Error::Parse(format!("bad shape `{part}`"))))
                        .collect::<Result<_>>()?;
                    let [a, b] = ab[..] else { return Err(Error::Parse(format!("bad shape `{part}`"))) };
                    class = class.product(&SchubertClass::shape(k, a, b)?)?;
                }
            }
            Report::new(format, class.to_string(), class.to_json())
        }
        Verb::Degree { common, k, codims, depth, graph } => {
            let cx = setup(&common)?;
            let (k, codims) = match graph {
                Some(gs) => {
                    let g = cx.graph(&gs)?;
                    let arr = directrices(&g, &cx.m, &cx.ring)?;
                    let join = arr.join_all()?;
                    (join.dim(), arr.members().iter().map(|d| join.dim() - d.space.dim()).collect())
                }
                None => (k.ok_or_else(|| Error::Parse("degree needs --k with --codims, or --graph".into()))?, codims),
            };
            let (rep, deg) = carrier_degree(&codims, k, depth)?;
            Report::new(cx.format, format!("degree {deg}"), rep)
        }
        Verb::Scan { common, graph, points } => {
            let cx = setup(&common)?;
            match graph {
                Some(gs) => {
                    let g = cx.graph(&gs)?;
                    let rep = scan_component(&g, &cx.m, &cx.ring, cx.cap)?;
                    let summary = format!("carrier {} of {} projective points", rep.carrier, rep.scanned);
                    Report::new(cx.format, summary, rep)
                }
                None => {
                    let mut rep = scan_resonance(&cx.m, &cx.ring, cx.cap)?;
                    if !points {
                        rep.points.clear();
                    }
                    let summary = format!("{} resonant of {} {} weights", rep.resonant, rep.scanned, rep.universe);
                    Report::new(cx.format, summary, rep)
                }
            }
        }
        Verb::Decompose(c) => {
            let cx = setup(&c)?;
            let rep = decomposition_check(&cx.m, &cx.ring, cx.cap)?;
            let summary = format!(
                "{}: {} resonant points, union {}",
                if rep.equal { "equal" } else { "different" },
                rep.resonant,
                rep.union
            );
            Report::new(cx.format, summary, rep)
        }
        Verb::Fit { common, graph, degree } => {
            let cx = setup(&common)?;
            let g = cx.graph(&graph)?;
            let arr = directrices(&g, &cx.m, &cx.ring)?;
            let join = arr.join_all()?;
            let scan = scan_component(&g, &cx.m, &cx.ring, cx.cap)?;
            let pts: Vec<&Vec<Scalar>> = scan.carrier_points().collect();
            let fit = fit_in_span(&cx.ring, &pts, &join, degree)?;
            let summary = format!(
                "{} forms of degree {degree} on {} carrier points in P^{}",
                fit.fit.dim,
                pts.len(),
                join.dim().saturating_sub(1)
            );
            Report::new(cx.format, summary, fit)
        }
    }
}
