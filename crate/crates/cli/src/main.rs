mod input;
mod opword;

use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use deltamat::capacity::{self, Growth};
use deltamat::format;
use deltamat::poly::{self, Poly, Status, TransitionWeights};
use deltamat::{bicycle, Matroid, SetSystem};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use input::{load, Input};

/// Exact delta-matroid computations on fixture files.
///
/// File type follows the extension: .ss set system, .mat matroid (bases),
/// .g multigraph, .gr graph, .m2/.m4 matrix.
#[derive(Parser)]
#[command(name = "dmtool", version)]
struct Cli {
    /// Print a single JSON object with keys `result` and `warnings`.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test a property; exits with 1 when it does not hold.
    Check {
        property: Property,
        file: PathBuf,
        /// Use the loop-complementation forms of Eulerian and bipartite.
        #[arg(long)]
        generalized: bool,
    },
    /// Apply an operation word such as `*{1,2} +{3} ~{4} \{5}` and print the result.
    Apply { word: String, file: PathBuf },
    /// Penrose polynomial.
    Penrose {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Direct)]
        method: Method,
        /// Basis for the fundamental-graph route, e.g. `1,2,3`; defaults to the first basis.
        #[arg(long)]
        basis: Option<String>,
    },
    /// The polynomial sum over subsets X of (-1)^|X| y^(distance of M*X).
    P1 { file: PathBuf },
    /// Transition polynomial with rational weights a, b, c.
    Transition {
        file: PathBuf,
        #[arg(short, allow_hyphen_values = true)]
        a: BigRational,
        #[arg(short, allow_hyphen_values = true)]
        b: BigRational,
        #[arg(short, allow_hyphen_values = true)]
        c: BigRational,
    },
    /// Tutte polynomial by deletion and contraction.
    Tutte { file: PathBuf },
    /// Principal tripartition (P, Q, R).
    Tripartition { file: PathBuf },
    /// Bicycle dimension and bicycle matroid, relative to V unless given.
    Bicycle {
        file: PathBuf,
        /// Elements of Y, e.g. `1,2`.
        #[arg(long)]
        relative: Option<String>,
    },
    /// Evaluation identities of the Penrose polynomial.
    Eval { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    DeltaMatroid,
    VfSafe,
    Eulerian,
    Bipartite,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Recursive,
    Fundamental,
}

struct Output {
    text: String,
    result: Value,
    /// false when a check or identity did not hold
    holds: bool,
}

impl Output {
    fn new(text: impl Into<String>, result: Value) -> Output {
        Output { text: text.into(), result, holds: true }
    }
}

fn err(e: impl Display) -> String {
    e.to_string()
}

/// An integer as a JSON number when it fits, else as a string.
fn number(s: String) -> Value {
    s.parse::<i64>().map(Value::from).unwrap_or(Value::String(s))
}

fn poly_output<T: poly::Coeff>(p: &Poly<T>) -> Output {
    let coeffs: Vec<Value> = p.coeffs().iter().map(|c| number(c.to_string())).collect();
    Output::new(format!("coeffs: {}\n{p}", p.format_coeffs()), json!({ "coeffs": coeffs, "pretty": p.to_string() }))
}

fn yes_no(name: &str, holds: bool, why: Option<String>) -> Output {
    let text = match (&why, holds) {
        (_, true) => format!("{name}: yes"),
        (Some(w), false) => format!("{name}: no ({w})"),
        (None, false) => format!("{name}: no"),
    };
    Output { text, result: json!({ "property": name, "holds": holds, "reason": why }), holds }
}

fn check(property: Property, inp: &Input, generalized: bool, warnings: &mut Vec<String>) -> Result<Output, String> {
    let ss = inp.set_system();
    let g = ss.ground();
    Ok(match property {
        Property::DeltaMatroid => {
            if ss.is_empty() {
                return Ok(yes_no("delta-matroid", false, Some("empty family".into())));
            }
            let why = ss.exchange_violation().map(|v| ss.describe_violation(v));
            yes_no("delta-matroid", why.is_none(), why)
        }
        Property::VfSafe => {
            warnings.extend(capacity::warning("vf-safety check", Growth::Pow3, ss.n()));
            let w = ss.vf_safety_witness().map_err(err)?;
            let why = w.map(|(z1, z2)| format!("M +{} ~{} is not a delta-matroid", g.format_set(z1), g.format_set(z2)));
            yes_no("vf-safe", why.is_none(), why)
        }
        Property::Eulerian if generalized => yes_no("eulerian (generalized)", bicycle::is_eulerian_gen(&ss).map_err(err)?, None),
        Property::Bipartite if generalized => yes_no("bipartite (generalized)", bicycle::is_bipartite_gen(&ss).map_err(err)?, None),
        Property::Eulerian => yes_no("eulerian", bicycle::is_eulerian_by_circuits(&inp.matroid().map_err(err)?), None),
        Property::Bipartite => yes_no("bipartite", bicycle::is_bipartite(&inp.matroid().map_err(err)?), None),
    })
}

fn penrose(inp: &Input, method: Method, basis: Option<&str>, warnings: &mut Vec<String>) -> Result<Output, String> {
    let ss = inp.set_system();
    let p = match method {
        Method::Direct => {
            warnings.extend(capacity::warning("Penrose polynomial", Growth::Pow2, ss.n()));
            poly::penrose_direct(&ss)
        }
        Method::Recursive => poly::penrose_recursive(&ss),
        Method::Fundamental => {
            let m = inp.matroid().map_err(err)?;
            let z = match basis {
                Some(b) => format::parse_subset(m.ground(), b).map_err(err)?,
                None => m.bases()[0],
            };
            poly::penrose_fundamental(&m, z)
        }
    }
    .map_err(err)?;
    Ok(poly_output(&p))
}

fn tutte(m: &Matroid) -> Output {
    let t = poly::tutte(m);
    let grid: Vec<Vec<Value>> = t.grid().iter().map(|row| row.iter().map(|c: &BigInt| number(c.to_string())).collect()).collect();
    Output::new(t.to_string(), json!({ "grid": grid, "pretty": t.to_string() }))
}

fn bicycle_output(ss: &SetSystem, relative: Option<&str>) -> Result<Output, String> {
    let g = ss.ground();
    let y = match relative {
        Some(r) => format::parse_subset(g, r).map_err(err)?,
        None => g.full(),
    };
    let dim = bicycle::bicycle_dimension(ss, y).map_err(err)?;
    let bm = bicycle::bicycle_matroid(ss, y).map_err(err)?;
    let bases = bm.set_system().format_family();
    let list: Vec<Vec<&str>> = bm.bases().iter().map(|&b| g.labels_in(b)).collect();
    Ok(Output::new(format!("dimension: {dim}  bases: {bases}"), json!({ "relative": g.labels_in(y), "dimension": dim, "bases": list })))
}

fn eval(inp: &Input, warnings: &mut Vec<String>) -> Result<Output, String> {
    let ss = inp.set_system();
    warnings.extend(capacity::warning("evaluation report", Growth::Pow3, ss.n()));
    let binary = inp.matroid().ok().filter(Matroid::is_binary);
    let report = poly::penrose_evaluations(&ss, binary.as_ref()).map_err(err)?;
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| {
            let (status, reason) = match &c.status {
                Status::Pass => ("pass", None),
                Status::Fail => ("fail", None),
                Status::Skipped(r) => ("skipped", Some(r.clone())),
            };
            json!({ "name": c.name, "status": status, "reason": reason, "lhs": c.lhs, "rhs": c.rhs })
        })
        .collect();
    for c in &report.checks {
        if let Status::Skipped(r) = &c.status {
            warnings.push(format!("{} skipped: {r}", c.name));
        }
    }
    let mut out = Output::new(report.to_string().trim_end().to_string(), json!({ "penrose": poly_output(&report.penrose).result, "checks": checks }));
    out.holds = report.all_passed();
    Ok(out)
}

fn run(command: Command, warnings: &mut Vec<String>) -> Result<Output, String> {
    let file = match &command {
        Command::Check { file, .. }
        | Command::Apply { file, .. }
        | Command::Penrose { file, .. }
        | Command::P1 { file }
        | Command::Transition { file, .. }
        | Command::Tutte { file }
        | Command::Tripartition { file }
        | Command::Bicycle { file, .. }
        | Command::Eval { file } => file.clone(),
    };
    let inp = load(&file).map_err(err)?;
    match command {
        Command::Check { property, generalized, .. } => check(property, &inp, generalized, warnings),
        Command::Apply { word, .. } => {
            let ops = opword::parse(&word)?;
            let out = inp.set_system().apply_sequence(&ops).map_err(err)?;
            let members: Vec<Vec<&str>> = out.family().iter().map(|&m| out.ground().labels_in(m)).collect();
            Ok(Output::new(format::write_set_system(&out).trim_end(), json!({ "elements": out.ground().labels(), "members": members })))
        }
        Command::Penrose { method, basis, .. } => penrose(&inp, method, basis.as_deref(), warnings),
        Command::P1 { .. } => {
            let ss = inp.set_system();
            warnings.extend(capacity::warning("p1 polynomial", Growth::Pow2, ss.n()));
            Ok(poly_output(&poly::p1(&ss).map_err(err)?))
        }
        Command::Transition { a, b, c, .. } => {
            let ss = inp.set_system();
            warnings.extend(capacity::warning("transition polynomial", Growth::Pow3, ss.n()));
            let q = poly::transition_direct(&ss, &TransitionWeights::new(a, b, c)).map_err(err)?;
            Ok(match q.to_integer() {
                Some(q) => poly_output(&q),
                None => poly_output(&q),
            })
        }
        Command::Tutte { .. } => Ok(tutte(&inp.matroid().map_err(err)?)),
        Command::Tripartition { .. } => {
            let ss = inp.set_system();
            let t = bicycle::tripartition(&ss).map_err(err)?;
            let g = ss.ground();
            Ok(Output::new(t.format(g), json!({ "P": g.labels_in(t.p), "Q": g.labels_in(t.q), "R": g.labels_in(t.r) })))
        }
        Command::Bicycle { relative, .. } => bicycle_output(&inp.set_system(), relative.as_deref()),
        Command::Eval { .. } => eval(&inp, warnings),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut warnings = Vec::new();
    let outcome = run(cli.command, &mut warnings);
    let code = match &outcome {
        Ok(o) if o.holds => ExitCode::SUCCESS,
        _ => ExitCode::from(1),
    };
    if cli.json {
        let obj = match outcome {
            Ok(o) => json!({ "result": o.result, "warnings": warnings }),
            Err(e) => json!({ "result": Value::Null, "error": e, "warnings": warnings }),
        };
        println!("{obj}");
    } else {
        for w in &warnings {
            eprintln!("warning: {w}");
        }
        match outcome {
            Ok(o) => println!("{}", o.text),
            Err(e) => eprintln!("error: {e}"),
        }
    }
    code
}
