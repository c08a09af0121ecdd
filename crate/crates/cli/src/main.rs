mod verbs;

use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use resonance_core::catalog::catalog;
use resonance_core::matroid::Matroid;
use resonance_core::oracle::{cap_from_env, DEFAULT_SEED};
use resonance_core::Error;

/// Resonance varieties of rank-3 matroids over finite fields, Z/N and Q.
///
/// Weights are comma lists (`5,3,1`) or digit strings (`0011110`). Point
/// labels 10, 11, 12 are written α, β, γ (or a, b, c) in graphs and sets.
#[derive(Parser, Debug)]
#[command(name = "resonance-lab", version)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Fixture name (braid-K4, nonfano, deletedB3, olive-samansky, hessian,
    /// pencil-<n>) or a path to a matroid JSON file.
    #[arg(long, default_value = "braid-K4")]
    pub matroid: String,
    /// Q, F<q>, F<p>^<k>[:modulus] or Z<N>.
    #[arg(long, default_value = "Q")]
    pub ring: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Bound on search sizes; defaults to RESONANCE_LAB_CAP or 10^8.
    #[arg(long)]
    pub cap: Option<u128>,
    /// Worker threads for scans.
    #[arg(long)]
    pub jobs: Option<usize>,
}

impl Common {
    pub fn cap(&self) -> u128 {
        self.cap.unwrap_or_else(cap_from_env)
    }

    pub fn matroid(&self) -> resonance_core::Result<Matroid> {
        match catalog(&self.matroid) {
            Err(Error::UnknownFixture(name)) => {
                let p = Path::new(&self.matroid);
                if p.exists() {
                    Matroid::load(p)
                } else {
                    Err(Error::UnknownFixture(name))
                }
            }
            other => other,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineSel {
    /// Lines with at least three points.
    All,
    /// Every line, trivial ones included.
    Every,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeArg {
    Partitions,
    AllGraphs,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum NeighborlyArg {
    CliqueClosure,
    StrictBlock,
}

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Ground set, rank and line counts.
    Info(Common),
    /// Nontrivial lines, or all lines with --all.
    Lines {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        all: bool,
    },
    /// Incidence matrix of a set of lines.
    Incidence {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = LineSel::All)]
        lines: LineSel,
    },
    /// Kernel of the incidence matrix, or of d_λ with --weight.
    Kernel {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = LineSel::All)]
        lines: LineSel,
        #[arg(long)]
        weight: Option<String>,
    },
    /// Whether λ is resonant, or whether (λ, η) is a resonant pair.
    Resonant {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        weight: String,
        #[arg(long)]
        eta: Option<String>,
    },
    /// The graph of a resonant pair.
    PairGraph {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        weight: String,
        #[arg(long)]
        eta: String,
    },
    /// Tests a graph for neighborliness, or enumerates NG(G, R).
    Neighborly {
        #[command(flatten)]
        common: Common,
        /// Blocks such as `12|34|56`.
        #[arg(long)]
        graph: Option<String>,
        #[arg(long, value_enum, default_value_t = ModeArg::Partitions)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = NeighborlyArg::CliqueClosure)]
        neighborly: NeighborlyArg,
        /// Exact cone vertex set, e.g. `7` or `57`; any by default.
        #[arg(long)]
        cone: Option<String>,
    },
    /// K(Γ) and, with --weight, Z_Γ(λ) and V¹ membership.
    Component {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        graph: String,
        #[arg(long)]
        weight: Option<String>,
        /// Also test membership in V¹_k.
        #[arg(long)]
        k: Option<usize>,
    },
    /// The directrices of Γ inside K(Γ).
    Directrices {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        graph: String,
    },
    /// Depth of ξ in the complex of Γ, or the regulus check with --regulus.
    Depth {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        graph: Option<String>,
        #[arg(long)]
        weight: Option<String>,
        #[arg(long)]
        regulus: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Products in the Chow ring of G(2,k).
    Schubert {
        #[arg(long)]
        k: usize,
        /// Multiply W(s,0) for each listed s.
        #[arg(long, value_delimiter = ',')]
        pieri: Vec<usize>,
        /// Further factors W(a,b), as `a,b` pairs separated by `;`.
        #[arg(long)]
        shapes: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Degree of the carrier from directrix codimensions, or from a graph.
    Degree {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        codims: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        depth: usize,
        #[arg(long)]
        graph: Option<String>,
    },
    /// Exhaustive resonance scan, or a component scan with --graph.
    Scan {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        graph: Option<String>,
        /// List every resonant point.
        #[arg(long)]
        points: bool,
    },
    /// R¹ against the union of its components over a finite field.
    Decompose(Common),
    /// Forms of degree d vanishing on the carrier of Γ, inside the join of its directrices.
    Fit {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        graph: String,
        #[arg(long, default_value_t = 3)]
        degree: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match verbs::run(cli.verb) {
        Ok(out) => {
            // A closed pipe (e.g. `| head`) is not an error.
            let _ = writeln!(std::io::stdout(), "{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
