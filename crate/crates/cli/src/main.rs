//! `smithmod`: batch analysis of modules over Smith algebras.
//!
//! Exit codes: 0 success, 1 failed internal verification, 2 invalid input,
//! 3 a polynomial does not split over the rationals, 4 oracle mismatch.

mod instance;

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use smithmod_core::oracle::{self, GridSpec};
use smithmod_core::rankn::{verify_central, verify_relations, Simplicity};
use smithmod_core::rankone::{factored, DEFAULT_NODE_CAP};
use smithmod_core::serial::{
    matrix_to_json, module_to_json, multiset_to_json, poly_to_json, rational_to_json,
};
use smithmod_core::{Error, Poly};

use instance::Instance;

#[derive(Parser)]
#[command(
    name = "smithmod",
    version,
    about = "Modules over Smith algebras, exactly"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Simplicity, socle, length and composition multiplicities.
    Analyze(Opts),
    /// All composition series.
    Series(Opts),
    /// The submodule lattice as a DOT digraph.
    Lattice(Opts),
    /// Action matrices of an exponential module.
    Matrices(Opts),
    /// The rank-one module isomorphic to a degree-one exponential module.
    Identify(Opts),
}

#[derive(clap::Args)]
struct Opts {
    /// Instance file (JSON).
    file: PathBuf,
    /// Cross-check against the brute-force oracle.
    #[arg(long)]
    oracle: bool,
    /// Cap on enumerated series or lattice nodes.
    #[arg(long)]
    cap: Option<usize>,
    /// Write the lattice to this DOT file instead of stdout.
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Perturb one matrix entry before verification.
    #[arg(long, hide = true)]
    inject_fault: bool,
}

#[derive(Debug)]
pub enum CliError {
    Invalid(String),
    NotSplit,
    OracleMismatch(String),
    Internal(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NotSplit => CliError::NotSplit,
            other => CliError::Invalid(other.to_string()),
        }
    }
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Internal(_) => 1,
            CliError::Invalid(_) => 2,
            CliError::NotSplit => 3,
            CliError::OracleMismatch(_) => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Invalid(m) => write!(f, "invalid input: {m}"),
            CliError::NotSplit => write!(f, "u + C does not split over the rationals"),
            CliError::OracleMismatch(m) => write!(f, "oracle mismatch: {m}"),
            CliError::Internal(m) => write!(f, "verification failed: {m}"),
        }
    }
}

struct Output {
    report: Value,
    failure: Option<CliError>,
}

impl From<Value> for Output {
    fn from(report: Value) -> Self {
        Output {
            report,
            failure: None,
        }
    }
}

fn load(opts: &Opts) -> Result<Instance, CliError> {
    let text = std::fs::read_to_string(&opts.file)
        .map_err(|e| CliError::Invalid(format!("{}: {e}", opts.file.display())))?;
    Instance::parse(&text)
}

fn analyze(opts: &Opts) -> Result<Output, CliError> {
    let inst = load(opts)?;
    let m = inst.rank_one()?;
    let k0 = m.k0_decompose();
    let phi: Map<String, Value> = k0
        .multiplicities
        .iter()
        .map(|(b, k)| (b.to_string(), json!(k)))
        .collect();
    let minimal: Vec<Value> = m
        .minimal_elements()
        .iter()
        .map(|e| {
            json!({
                "gamma": rational_to_json(&e.gamma),
                "beta": rational_to_json(&e.beta),
                "t": poly_to_json(&e.t),
                "dim": e.quotient_dim,
            })
        })
        .collect();
    let mut report = json!({
        "module": module_to_json(&m),
        "C": rational_to_json(m.c()),
        "simple": m.is_simple(),
        "ell": m.ell(),
        "socle": multiset_to_json(&k0.socle),
        "length": k0.length(),
        "phi": phi,
        "minimal_elements": minimal,
    });
    if opts.oracle || inst.oracle {
        let brute: BTreeSet<Poly> = oracle::brute_minimal(&m, &GridSpec::for_module(&m))?
            .into_iter()
            .collect();
        let fast: BTreeSet<Poly> = m.minimal_elements().into_iter().map(|e| e.t).collect();
        if brute != fast {
            return Err(CliError::OracleMismatch("minimal elements".into()));
        }
        report["oracle"] = json!("agree");
    }
    Ok(report.into())
}

fn series(opts: &Opts) -> Result<Output, CliError> {
    let inst = load(opts)?;
    let m = inst.rank_one()?;
    let cap = opts.cap.or(inst.cap).unwrap_or(1000);
    let all = m.composition_series_all(cap)?;
    if opts.oracle || inst.oracle {
        for s in &all.series {
            if !oracle::validate_series(&m, s) {
                return Err(CliError::OracleMismatch(format!("series {:?}", s.betas())));
            }
        }
    }
    let list: Vec<Value> = all
        .series
        .iter()
        .map(|s| {
            let steps: Vec<Value> = s
                .steps
                .iter()
                .map(|st| {
                    json!({
                        "beta": rational_to_json(&st.beta),
                        "gamma": rational_to_json(&st.gamma),
                        "t": poly_to_json(&st.t),
                        "dim": st.quotient_dim,
                        "stage": multiset_to_json(&st.stage),
                    })
                })
                .collect();
            json!({"steps": steps, "socle": multiset_to_json(&s.socle), "length": s.length()})
        })
        .collect();
    let mut report = json!({
        "module": module_to_json(&m),
        "count": list.len(),
        "truncated": all.truncated,
        "series": list,
    });
    if opts.oracle || inst.oracle {
        report["oracle"] = json!("agree");
    }
    Ok(report.into())
}

fn lattice(opts: &Opts) -> Result<Output, CliError> {
    let inst = load(opts)?;
    let m = inst.rank_one()?;
    let cap = opts.cap.or(inst.cap).unwrap_or(DEFAULT_NODE_CAP);
    let l = m.submodule_lattice(cap)?;
    if opts.oracle || inst.oracle {
        let brute: BTreeSet<Poly> = oracle::brute_lattice(&m, &GridSpec::for_module(&m))?
            .into_iter()
            .collect();
        let fast: BTreeSet<Poly> = l.generators().into_iter().cloned().collect();
        if brute != fast {
            return Err(CliError::OracleMismatch("submodule lattice".into()));
        }
    }
    let dot = l.to_dot();
    match &opts.dot {
        None => Ok(Value::String(dot).into()),
        Some(path) => {
            std::fs::write(path, &dot)
                .map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))?;
            let nodes: Vec<Value> = l
                .nodes
                .iter()
                .map(|n| json!({"t": factored(&n.t_roots), "stage": multiset_to_json(&n.stage)}))
                .collect();
            Ok(json!({
                "dot": path.display().to_string(),
                "nodes": nodes,
                "edges": l.all_edges(),
                "socle": l.socle,
                "zero": l.zero(),
            })
            .into())
        }
    }
}

fn matrices(opts: &Opts) -> Result<Output, CliError> {
    let inst = load(opts)?;
    let m = inst.exp_module()?;
    let (mut p, q, source) = if m.is_dual() {
        let (p, q) = m.action_matrices()?;
        (p, q, "action")
    } else {
        let (p, q) = m.exp_matrices()?;
        (p, q, "closed form")
    };
    if opts.inject_fault {
        let bumped = p.get(0, 0) + &Poly::one();
        p.set(0, 0, bumped);
    }
    let relations = verify_relations(&p, &q, &m.g())?;
    let central = verify_central(&p, &q, m.u(), m.c())?;
    let mut report = json!({
        "n": p.size(),
        "P": matrix_to_json(&p),
        "Q": matrix_to_json(&q),
        "source": source,
        "relations": relations,
        "central": central,
        "verified": relations && central,
        "simplicity": match m.simplicity()? {
            Simplicity::Simple if m.rank()? > 1 => "simple (sufficient condition)",
            Simplicity::Simple => "simple",
            Simplicity::NotSimple => "not simple",
            Simplicity::Unknown => "unknown",
        },
    });
    if opts.oracle || inst.oracle {
        let (ap, aq) = m.action_matrices()?;
        if !opts.inject_fault && (ap != p || aq != q) {
            return Err(CliError::OracleMismatch(
                "matrices differ from the action".into(),
            ));
        }
        report["oracle"] = json!("agree");
    }
    let failure = (!(relations && central))
        .then(|| CliError::Internal(format!("relations {relations}, central {central}")));
    Ok(Output { report, failure })
}

fn identify(opts: &Opts) -> Result<Output, CliError> {
    let inst = load(opts)?;
    let m = inst.exp_module()?;
    let (c, x, xi) = m.identify_rank_one()?;
    let a = m.rank_one_module()?;
    Ok(json!({
        "C": rational_to_json(&c),
        "X": multiset_to_json(&x),
        "xi": rational_to_json(&xi),
        "dual": m.is_dual(),
        "module": module_to_json(&a),
        "simple": a.is_simple(),
    })
    .into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze(o) => analyze(o),
        Command::Series(o) => series(o),
        Command::Lattice(o) => lattice(o),
        Command::Matrices(o) => matrices(o),
        Command::Identify(o) => identify(o),
    };
    match result {
        Ok(out) => {
            match &out.report {
                Value::String(s) => print!("{s}"),
                v => println!("{}", serde_json::to_string_pretty(v).expect("serializable")),
            }
            match out.failure {
                None => ExitCode::SUCCESS,
                Some(e) => {
                    eprintln!("smithmod: {e}");
                    ExitCode::from(e.code())
                }
            }
        }
        Err(e) => {
            eprintln!("smithmod: {e}");
            ExitCode::from(e.code())
        }
    }
}
