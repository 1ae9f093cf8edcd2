use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use serre_depth::complex::{ShellingOutcome, DEFAULT_SHELLING_FACET_LIMIT, DEFAULT_SUBSET_LIMIT};
use serre_depth::graphs::{
    construct_g_ell, cover_ideal, edge_ideal, independence_complex, induced_matching_number,
    vwc_decompose, vwc_serre_depth_formula, Graph,
};
use serre_depth::io::{complex_to_json, ideal_to_json, read_complex, read_graph, read_ideal};
use serre_depth::monomials::{
    depth_monomial, polarize, serre_depth_monomial, sr_complex, sr_ideal, symbolic_power,
};
use serre_depth::symbolic::{
    classify_dim1, depth_sequence, serre_depth_sequence, symbolic_coh_profile, symbolic_depth,
    symbolic_serre_depth, takayama_complex, EnumLimits, DEFAULT_MAX_ENUM,
};
use serre_depth::verify::{
    run_check, verify_all, VerificationReport, VerifyConfig, CHECKS, DEFAULT_SEED,
};
use serre_depth::{hochster, homology, Error, Field, MonomialIdeal, SimplicialComplex, VertexSet};

/// Depth and Serre depth of Stanley-Reisner rings, monomial quotients and
/// symbolic powers.
#[derive(Parser)]
#[command(name = "serre", version)]
struct Cli {
    /// Coefficient field: `q` or `fp:P`.
    #[arg(long, global = true, default_value = "q")]
    field: Field,
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Largest number of degree vectors examined for one face.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ENUM)]
    max_enum: u128,
    /// Seed for the randomized verification families.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Operations on a simplicial complex.
    Complex {
        #[command(subcommand)]
        op: ComplexOp,
        #[command(flatten)]
        input: Input,
    },
    /// Operations on a monomial ideal.
    Ideal {
        #[command(subcommand)]
        op: IdealOp,
        #[command(flatten)]
        input: IdealInput,
    },
    /// Symbolic powers of the Stanley-Reisner ideal of a complex.
    Symbolic {
        #[command(subcommand)]
        op: SymbolicOp,
        #[command(flatten)]
        input: Input,
    },
    /// Edge and cover ideals of a graph.
    Graph {
        #[command(subcommand)]
        op: GraphOp,
        #[command(flatten)]
        input: Input,
    },
    /// Replay the acceptance checks.
    Verify {
        #[command(subcommand)]
        op: VerifyOp,
    },
}

#[derive(Args)]
struct Input {
    /// JSON input file; `-` reads standard input.
    #[arg(long = "in", global = true, default_value = "-")]
    path: PathBuf,
}

#[derive(Args)]
struct IdealInput {
    /// Ideal file (JSON or text such as `x1*x3, x2^2`); `-` reads standard input.
    #[arg(long = "in", global = true, conflicts_with = "ideal")]
    path: Option<PathBuf>,
    /// The ideal given inline, e.g. `x1*x3, x2^2`.
    #[arg(long, global = true)]
    ideal: Option<String>,
    /// Number of variables when it exceeds the largest index used.
    #[arg(long, global = true)]
    vars: Option<usize>,
}

#[derive(Subcommand)]
enum ComplexOp {
    /// Dimension, f-vector, purity and facets.
    Info,
    Depth,
    SerreDepth {
        #[arg(long)]
        r: usize,
    },
    /// Dimensions of the local cohomology modules.
    Profile,
    /// Graded Betti numbers of the ring, or of the ideal with `--ideal`.
    Betti {
        #[arg(long)]
        ideal: bool,
    },
    /// Reduced homology.
    Homology,
    /// Alexander dual.
    Dual,
    Link {
        /// Comma-separated face, e.g. `1,2`.
        #[arg(long, value_delimiter = ',')]
        face: Vec<usize>,
    },
    Skeleton {
        #[arg(long, allow_hyphen_values = true)]
        i: isize,
    },
    /// Stanley-Reisner ideal.
    SrIdeal,
    IsCm,
    Shellable,
    IsMatroid,
    Diameter {
        /// `t`-diameter instead of the 1-skeleton diameter.
        #[arg(long)]
        t: Option<isize>,
    },
}

#[derive(Subcommand)]
enum IdealOp {
    Depth,
    SerreDepth {
        #[arg(long)]
        r: usize,
    },
    Polarize,
    SymbolicPower {
        #[arg(long)]
        ell: u32,
    },
    /// Complex of a squarefree ideal.
    SrComplex,
    Radical,
}

#[derive(Subcommand)]
enum SymbolicOp {
    Depth {
        #[arg(long)]
        ell: u32,
    },
    SerreDepth {
        #[arg(long)]
        ell: u32,
        #[arg(long)]
        r: usize,
    },
    /// Depths (or `S_r`-depths with `--r`) for `ℓ = 1..=max`.
    Sequence {
        #[arg(long)]
        max: u32,
        #[arg(long)]
        r: Option<usize>,
    },
    /// Degree complex of `a` for the `ℓ`-th symbolic power.
    Takayama {
        #[arg(long, value_delimiter = ',')]
        a: Vec<u32>,
        #[arg(long)]
        ell: u32,
    },
    /// Local cohomology dimensions with witnesses.
    Profile {
        #[arg(long)]
        ell: u32,
    },
    /// Class of a one-dimensional complex.
    Classify,
}

#[derive(Subcommand)]
enum GraphOp {
    EdgeIdeal,
    CoverIdeal,
    IndependenceComplex,
    /// Induced matching number.
    Im,
    /// The layered graph `G_ℓ`.
    Gl {
        #[arg(long)]
        ell: usize,
    },
    /// `S_r`-depth of a very well-covered graph from its decomposition.
    VwcDepth {
        #[arg(long)]
        r: usize,
    },
    VwcDecompose,
}

#[derive(Subcommand)]
enum VerifyOp {
    /// Run every check, or only the named one.
    Paper {
        #[arg(long)]
        only: Option<String>,
        /// List check names and exit.
        #[arg(long)]
        list: bool,
    },
}

/// Value printed in JSON mode and its text form.
struct Output {
    json: Value,
    text: String,
}

impl Output {
    fn number(n: impl Into<Value> + ToString + Copy) -> Output {
        Output {
            json: n.into(),
            text: n.to_string(),
        }
    }

    fn value<T: Serialize>(v: &T, text: String) -> Output {
        Output {
            json: serde_json::to_value(v).expect("plain data serializes"),
            text,
        }
    }

    fn complex(cx: &SimplicialComplex) -> Output {
        let j = complex_to_json(cx);
        Output {
            text: serde_json::to_string(&j).expect("plain data serializes"),
            json: serde_json::to_value(j).expect("plain data serializes"),
        }
    }

    fn ideal(i: &MonomialIdeal) -> Output {
        Output::value(&ideal_to_json(i), i.to_string())
    }

    fn graph(g: &Graph) -> Output {
        let j = g.to_json();
        Output {
            text: serde_json::to_string(&j).expect("plain data serializes"),
            json: serde_json::to_value(j).expect("plain data serializes"),
        }
    }
}

enum Failure {
    Compute(String),
    Verification(VerificationReport),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Compute(format!("reading standard input: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::Compute(format!("reading {}: {e}", path.display())))
    }
}

fn with_path<T>(r: serre_depth::Result<T>, path: &Path) -> Result<T, Failure> {
    r.map_err(|e| Failure::Compute(format!("{}: {e}", path.display())))
}

fn load_complex(input: &Input) -> Result<SimplicialComplex, Failure> {
    with_path(read_complex(&read_text(&input.path)?), &input.path)
}

fn join(v: &[usize]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn run_complex(op: ComplexOp, cx: &SimplicialComplex, field: Field) -> Result<Output, Failure> {
    Ok(match op {
        ComplexOp::Info => {
            let j = json!({
                "n": cx.n(),
                "dim": cx.dim(),
                "pure": cx.is_pure(),
                "f_vector": cx.f_vector(),
                "facets": cx.facet_lists(),
            });
            let text = format!(
                "n {}\ndim {}\npure {}\nf-vector {}\nfacets {cx}",
                cx.n(),
                cx.dim(),
                cx.is_pure(),
                join(&cx.f_vector())
            );
            Output { json: j, text }
        }
        ComplexOp::Depth => Output::number(hochster::depth(cx, field)?),
        ComplexOp::SerreDepth { r } => Output::number(hochster::serre_depth(cx, r, field)?),
        ComplexOp::Profile => {
            let p = hochster::local_coh_dims(cx, field)?;
            let text = p
                .dims()
                .iter()
                .enumerate()
                .map(|(j, d)| format!("{j}: {}", d.map_or("-".to_string(), |d| d.to_string())))
                .collect::<Vec<_>>()
                .join("\n");
            Output::value(&p, text)
        }
        ComplexOp::Betti { ideal } => {
            let t = hochster::betti_table(cx, field)?;
            let t = if ideal { t.as_ideal() } else { t };
            let text = t.render().trim_end().to_string();
            Output::value(&t, text)
        }
        ComplexOp::Homology => {
            let h = homology::reduced_homology(cx, field)?;
            let text = h
                .dims()
                .iter()
                .map(|(k, d)| format!("{k}: {d}"))
                .collect::<Vec<_>>()
                .join("\n");
            Output::value(&h, text)
        }
        ComplexOp::Dual => Output::complex(&cx.alexander_dual()),
        ComplexOp::Link { face } => {
            Output::complex(&cx.link(VertexSet::from_labels(cx.n(), &face)?)?)
        }
        ComplexOp::Skeleton { i } => Output::complex(&cx.skeleton(i)?),
        ComplexOp::SrIdeal => Output::ideal(&sr_ideal(cx)),
        ComplexOp::IsCm => Output::number(hochster::is_cohen_macaulay(cx, field)?),
        ComplexOp::Shellable => match cx.is_shellable(DEFAULT_SHELLING_FACET_LIMIT)? {
            ShellingOutcome::Shellable(order) => {
                let lists: Vec<Vec<usize>> = order.iter().map(|f| f.to_vec()).collect();
                Output {
                    text: format!("shellable {lists:?}"),
                    json: json!({"shellable": true, "order": lists}),
                }
            }
            ShellingOutcome::NotShellable => Output {
                text: "not shellable".into(),
                json: json!({"shellable": false}),
            },
            ShellingOutcome::Unknown => Output {
                text: "unknown".into(),
                json: json!({"shellable": null}),
            },
        },
        ComplexOp::IsMatroid => Output::number(cx.is_matroid(DEFAULT_SUBSET_LIMIT)?),
        ComplexOp::Diameter { t } => {
            let d = match t {
                Some(t) => cx.t_diameter(t)?,
                None => cx.one_skeleton_diameter()?,
            };
            Output::value(&d, d.to_string())
        }
    })
}

fn load_ideal(input: &IdealInput) -> Result<MonomialIdeal, Failure> {
    match (&input.ideal, &input.path) {
        (Some(text), _) => Ok(read_ideal(text, input.vars)?),
        (None, Some(path)) => with_path(read_ideal(&read_text(path)?, input.vars), path),
        (None, None) => {
            let stdin = PathBuf::from("-");
            with_path(read_ideal(&read_text(&stdin)?, input.vars), &stdin)
        }
    }
}

fn run_ideal(op: IdealOp, ideal: &MonomialIdeal, field: Field) -> Result<Output, Failure> {
    Ok(match op {
        IdealOp::Depth => Output::number(depth_monomial(ideal, field)?),
        IdealOp::SerreDepth { r } => Output::number(serre_depth_monomial(ideal, r, field)?),
        IdealOp::Polarize => {
            let p = polarize(ideal);
            let names: Vec<String> = (1..=p.ideal.nvars()).map(|i| p.var_name(i)).collect();
            Output {
                text: format!(
                    "{}\nextra {}\nvariables {}",
                    p.ideal,
                    p.extra,
                    names.join(" ")
                ),
                json: json!({"ideal": ideal_to_json(&p.ideal), "extra": p.extra, "variables": names}),
            }
        }
        IdealOp::SymbolicPower { ell } => Output::ideal(&symbolic_power(ideal, ell)?),
        IdealOp::SrComplex => Output::complex(&sr_complex(ideal)?),
        IdealOp::Radical => Output::ideal(&ideal.radical()),
    })
}

fn run_symbolic(
    op: SymbolicOp,
    cx: &SimplicialComplex,
    field: Field,
    limits: EnumLimits,
) -> Result<Output, Failure> {
    Ok(match op {
        SymbolicOp::Depth { ell } => Output::number(symbolic_depth(cx, ell, field, limits)?),
        SymbolicOp::SerreDepth { ell, r } => {
            Output::number(symbolic_serre_depth(cx, ell, r, field, limits)?)
        }
        SymbolicOp::Sequence { max, r } => {
            let seq = match r {
                Some(r) => serre_depth_sequence(cx, max, r, field, limits)?,
                None => depth_sequence(cx, max, field, limits)?,
            };
            Output::value(&seq, join(&seq))
        }
        SymbolicOp::Takayama { a, ell } => Output::complex(&takayama_complex(cx, &a, ell)?),
        SymbolicOp::Profile { ell } => {
            let p = symbolic_coh_profile(cx, ell, field, limits)?;
            let text = (0..=p.profile().module_dim())
                .map(|i| match (p.get(i), p.witness(i)) {
                    (Some(d), Some(w)) => format!("{i}: {d}  face {:?} a {:?}", w.face, w.a),
                    _ => format!("{i}: -"),
                })
                .collect::<Vec<_>>()
                .join("\n");
            Output::value(&p, text)
        }
        SymbolicOp::Classify => {
            let c = classify_dim1(cx)?;
            let j = serde_json::to_value(c).expect("plain data serializes");
            Output {
                text: j.as_str().unwrap_or_default().to_string(),
                json: j,
            }
        }
    })
}

fn run_graph(op: GraphOp, g: &Graph) -> Result<Output, Failure> {
    Ok(match op {
        GraphOp::EdgeIdeal => Output::ideal(&edge_ideal(g)),
        GraphOp::CoverIdeal => Output::ideal(&cover_ideal(g)),
        GraphOp::IndependenceComplex => Output::complex(&independence_complex(g)),
        GraphOp::Im => Output::number(induced_matching_number(g)),
        GraphOp::Gl { ell } => Output::graph(&construct_g_ell(g, ell)?),
        GraphOp::VwcDepth { r } => Output::number(vwc_serre_depth_formula(&vwc_decompose(g)?, r)?),
        GraphOp::VwcDecompose => {
            let s = vwc_decompose(g)?;
            let text = format!(
                "H {}\nmultiplicities {}",
                serde_json::to_string(&s.h().to_json()).expect("plain data serializes"),
                join(s.multiplicities())
            );
            Output::value(&s, text)
        }
    })
}

fn run_verify(op: VerifyOp, cfg: &VerifyConfig) -> Result<Output, Failure> {
    let VerifyOp::Paper { only, list } = op;
    if list {
        let names: Vec<&str> = CHECKS.iter().map(|(n, _)| *n).collect();
        return Ok(Output::value(&names, names.join("\n")));
    }
    let report = match only {
        Some(name) => VerificationReport {
            checks: vec![run_check(&name, cfg)?],
        },
        None => verify_all(cfg),
    };
    if report.all_passed() {
        Ok(Output::value(
            &report,
            report.render().trim_end().to_string(),
        ))
    } else {
        Err(Failure::Verification(report))
    }
}

fn run(cli: Cli) -> Result<Output, Failure> {
    let limits = EnumLimits {
        max_enum: cli.max_enum,
    };
    match cli.command {
        Command::Complex { op, input } => run_complex(op, &load_complex(&input)?, cli.field),
        Command::Ideal { op, input } => run_ideal(op, &load_ideal(&input)?, cli.field),
        Command::Symbolic { op, input } => {
            run_symbolic(op, &load_complex(&input)?, cli.field, limits)
        }
        Command::Graph { op, input } => {
            let g = with_path(read_graph(&read_text(&input.path)?), &input.path)?;
            run_graph(op, &g)
        }
        Command::Verify { op } => run_verify(
            op,
            &VerifyConfig {
                limits,
                seed: cli.seed,
            },
        ),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let json = cli.json;
    match run(cli) {
        Ok(out) => {
            if json {
                println!("{}", out.json);
            } else {
                println!("{}", out.text);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(report)) => {
            if json {
                println!(
                    "{}",
                    serde_json::to_value(&report).expect("plain data serializes")
                );
            } else {
                print!("{}", report.render());
            }
            ExitCode::from(2)
        }
    }
}
