//! `fibrelab`: construct and classify hyperelliptic models, simulate pencils,
//! query linear-system numerology and check surface geography.
//!
//! Success prints one JSON document (or a CSV stream) on stdout and exits 0.
//! Failures print `{"error": …}` on stdout and exit 1 (domain error) or 2
//! (malformed input). Notices go to stderr.

use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use fibrelab_core::curves::{classify, construct_nodal, construct_split, HyperellipticModel};
use fibrelab_core::geography::{
    self, blow_up, elliptic_c2, fibration_chi_bounds, general_type_checks, hurwitz_bound,
    kodaira_slope, noether_complete, xiao_validate, GeographyReport, ScanFlag, ScanRow,
    SurfaceInvariants, XiaoCase,
};
use fibrelab_core::literal::{format_rational, poly_from_value, poly_to_value};
use fibrelab_core::pencil::{total_space_euler, Pencil};
use fibrelab_core::systems::{self, Bidegree, HirzebruchClass, SeveriSpec};
use fibrelab_core::{Error, UniPoly};

#[derive(Parser)]
#[command(name = "fibrelab", version, about = "Exact computations on hyperelliptic fibrations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format; csv is available for xiao-scan only.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Seed for randomized constructions (FIBRELAB_SEED takes precedence).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Build a nodal or split genus-g model from a seed.
    Construct {
        #[arg(long)]
        genus: u32,
        /// Number of nodes.
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        t: i64,
        /// Build f = s² instead (two rational components).
        #[arg(long)]
        split: bool,
    },
    /// Classify y² = f(x).
    Classify {
        #[arg(long, required_unless_present = "file")]
        genus: Option<u32>,
        /// Polynomial literal, e.g. '["1","0","0","0","0","0","1"]'.
        #[arg(long, required_unless_present = "file")]
        f: Option<String>,
        /// JSON model {"genus": g, "f": [...]}.
        #[arg(long, conflicts_with_all = ["genus", "f"])]
        file: Option<String>,
    },
    /// Singular fibres and Euler number of the pencil (1 − λ)f0 + λf1.
    Pencil {
        #[arg(long, required_unless_present_any = ["file", "random"])]
        genus: Option<u32>,
        #[arg(long, required_unless_present_any = ["file", "random"])]
        f0: Option<String>,
        #[arg(long, required_unless_present_any = ["file", "random"])]
        f1: Option<String>,
        /// JSON pencil {"g": g, "f0": [...], "f1": [...]}.
        #[arg(long, conflicts_with_all = ["genus", "f0", "f1", "random"])]
        file: Option<String>,
        /// Draw a pencil of this genus with small integer coefficients from the seed.
        #[arg(long, conflicts_with_all = ["genus", "f0", "f1"])]
        random: Option<u32>,
    },
    /// Linear-system numerology.
    Systems {
        #[arg(long, value_enum)]
        surface: Surface,
        #[arg(long)]
        query: String,
        #[arg(long)]
        a: Option<i64>,
        #[arg(long)]
        b: Option<i64>,
        #[arg(long)]
        t: Option<u64>,
        #[arg(long)]
        e: Option<u64>,
        #[arg(long)]
        genus: Option<u64>,
        #[arg(long)]
        c: Option<u64>,
        #[arg(long)]
        r: Option<u64>,
        /// Second class for intersections.
        #[arg(long, allow_negative_numbers = true)]
        a2: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        b2: Option<i64>,
    },
    /// Numerical invariants of surfaces and fibrations.
    Invariants {
        #[arg(long, value_enum)]
        query: InvQuery,
        /// JSON object with any of chi, q, p_g, K2, e, g1, g2, epsilon, d.
        #[arg(long)]
        inv: Option<String>,
        #[arg(long)]
        file: Option<String>,
        /// Number of blow-ups.
        #[arg(long)]
        n: Option<u64>,
        #[arg(long, value_enum, default_value = "ii")]
        case: Case,
        /// Assume a minimal surface of general type.
        #[arg(long)]
        minimal: bool,
    },
    /// Admissible (χ, ε, K²) cells for genus-2 fibrations over a base of genus g2.
    XiaoScan {
        #[arg(long)]
        g2: i64,
        #[arg(long, allow_negative_numbers = true)]
        chi_max: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Surface {
    #[value(name = "P1xP1")]
    P1xP1,
    #[value(name = "F_e")]
    Fe,
    #[value(name = "DelPezzo1")]
    DelPezzo1,
}

impl Surface {
    fn name(self) -> &'static str {
        match self {
            Surface::P1xP1 => "P1xP1",
            Surface::Fe => "F_e",
            Surface::DelPezzo1 => "DelPezzo1",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum InvQuery {
    Noether,
    BlowUp,
    Fibration,
    Xiao,
    GeneralType,
    Elliptic,
    Slope,
    Hurwitz,
}

#[derive(Clone, Copy, ValueEnum)]
enum Case {
    I,
    Ii,
}

enum Failure {
    Schema(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Literal(m) => Failure::Schema(m),
            other => Failure::Domain(other),
        }
    }
}

type Outcome = Result<Option<Value>, Failure>;

fn schema(msg: impl Into<String>) -> Failure {
    Failure::Schema(msg.into())
}

fn parse_json(text: &str) -> Result<Value, Failure> {
    serde_json::from_str(text).map_err(|e| schema(format!("invalid JSON: {e}")))
}

fn read_file(path: &str) -> Result<Value, Failure> {
    let text = fs::read_to_string(path).map_err(|e| schema(format!("cannot read {path}: {e}")))?;
    parse_json(&text)
}

fn poly_arg(text: &str) -> Result<UniPoly, Failure> {
    Ok(poly_from_value(&parse_json(text)?)?)
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, Failure> {
    v.get(key).ok_or_else(|| schema(format!("missing field {key:?}")))
}

fn genus_field(v: &Value, key: &str) -> Result<u32, Failure> {
    field(v, key)?
        .as_u64()
        .and_then(|g| u32::try_from(g).ok())
        .ok_or_else(|| schema(format!("{key:?} must be a nonnegative integer")))
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T, Failure> {
    v.ok_or_else(|| schema(format!("--{flag} is required for this query")))
}

fn nonneg(v: i64, flag: &str) -> Result<u64, Failure> {
    u64::try_from(v).map_err(|_| schema(format!("--{flag} must be nonnegative")))
}

fn class_value(m: &HyperellipticModel) -> Value {
    serde_json::to_value(classify(m)).expect("serializable")
}

fn model_value(m: &HyperellipticModel) -> Value {
    json!({ "genus": m.genus(), "f": poly_to_value(m.f()), "class": class_value(m) })
}

fn construct(genus: u32, t: i64, split: bool, seed: u64) -> Outcome {
    let m = if split {
        construct_split(genus, seed)?
    } else {
        construct_nodal(genus, t, seed)?
    };
    Ok(Some(model_value(&m)))
}

fn classify_cmd(genus: Option<u32>, f: Option<String>, file: Option<String>) -> Outcome {
    let (genus, f) = match file {
        Some(path) => {
            let v = read_file(&path)?;
            (genus_field(&v, "genus")?, poly_from_value(field(&v, "f")?)?)
        }
        None => (need(genus, "genus")?, poly_arg(&need(f, "f")?)?),
    };
    let m = HyperellipticModel::new(genus, f)?;
    Ok(Some(class_value(&m)))
}

fn pencil_cmd(
    genus: Option<u32>,
    f0: Option<String>,
    f1: Option<String>,
    file: Option<String>,
    random: Option<u32>,
    seed: u64,
) -> Outcome {
    let p = if let Some(g) = random {
        Pencil::random(g, seed)?
    } else if let Some(path) = file {
        let v = read_file(&path)?;
        Pencil::new(
            genus_field(&v, "g")?,
            poly_from_value(field(&v, "f0")?)?,
            poly_from_value(field(&v, "f1")?)?,
        )?
    } else {
        Pencil::new(
            need(genus, "genus")?,
            poly_arg(&need(f0, "f0")?)?,
            poly_arg(&need(f1, "f1")?)?,
        )?
    };
    let summary = total_space_euler(&p)?;
    eprintln!("note: e_total = e(A)·e(D) + Σ (e(A_s) − e(A)) over the singular fibres A_s");
    if !summary.exact {
        eprintln!("warning: fibres with singularities worse than nodes are present");
    }
    if !summary.total_space_smooth {
        eprintln!("warning: the surface y² = f(x, λ) is singular (e.g. base points)");
    }
    Ok(Some(json!({ "pencil": p.to_value(), "summary": summary.to_value() })))
}

#[allow(clippy::too_many_arguments)]
fn systems_cmd(
    surface: Surface,
    query: &str,
    a: Option<i64>,
    b: Option<i64>,
    t: Option<u64>,
    e: Option<u64>,
    genus: Option<u64>,
    c: Option<u64>,
    r: Option<u64>,
    a2: Option<i64>,
    b2: Option<i64>,
) -> Outcome {
    let bideg = || -> Result<Bidegree, Failure> {
        Ok(Bidegree::new(
            nonneg(need(a, "a")?, "a")?,
            nonneg(need(b, "b")?, "b")?,
        ))
    };
    let result = match (surface, query) {
        (Surface::P1xP1, "h0") => json!(systems::h0_p1xp1(bideg()?)),
        (Surface::P1xP1, "genus") => json!(systems::arithmetic_genus_p1xp1(bideg()?)?),
        (Surface::P1xP1, "severi") => {
            let spec = SeveriSpec { bidegree: bideg()?, t: need(t, "t")? };
            match systems::severi_dimension(spec)? {
                Some(d) => json!(d),
                None => json!("empty"),
            }
        }
        (Surface::P1xP1, "prescribed-nodes") => {
            json!(systems::prescribed_nodes_dimension(need(genus, "genus")?, need(c, "c")?)?)
        }
        (Surface::P1xP1, "bidegree") => {
            let d = systems::hyperelliptic_bidegree(need(genus, "genus")?)?;
            json!({ "a": d.a, "b": d.b })
        }
        (Surface::Fe, "intersection") => {
            let e = need(e, "e")?;
            let c1 = HirzebruchClass::new(e, need(a, "a")?, need(b, "b")?);
            let c2 = HirzebruchClass::new(e, need(a2, "a2")?, need(b2, "b2")?);
            json!(systems::hirzebruch_intersection(c1, c2)?)
        }
        (Surface::Fe, "genus") => {
            let c = HirzebruchClass::new(need(e, "e")?, need(a, "a")?, need(b, "b")?);
            json!(systems::hirzebruch_genus(c)?)
        }
        (Surface::Fe, "effective") => {
            let c = HirzebruchClass::new(need(e, "e")?, need(a, "a")?, need(b, "b")?);
            json!(c.is_effective_curve_class())
        }
        (Surface::DelPezzo1, "anticanonical-dim") => {
            json!(systems::delpezzo_anticanonical_dim(need(r, "r")?)?)
        }
        (s, q) => return Err(schema(format!("unknown query {q:?} for surface {}", s.name()))),
    };
    Ok(Some(json!({ "surface": surface.name(), "query": query, "result": result })))
}

fn report_value(query: &str, report: &GeographyReport) -> Value {
    json!({
        "query": query,
        "passed": report.passed(),
        "checks": serde_json::to_value(&report.checks).expect("serializable"),
    })
}

fn invariants_cmd(
    query: InvQuery,
    inv: Option<String>,
    file: Option<String>,
    n: Option<u64>,
    case: Case,
    minimal: bool,
) -> Outcome {
    let raw = match (inv, file) {
        (Some(text), None) => parse_json(&text)?,
        (None, Some(path)) => read_file(&path)?,
        (None, None) => json!({}),
        (Some(_), Some(_)) => return Err(schema("give either --inv or --file")),
    };
    let inv: SurfaceInvariants =
        serde_json::from_value(raw).map_err(|e| schema(format!("invalid invariants: {e}")))?;
    let value = |v: Value, name: &str| json!({ "query": name, "result": v });
    Ok(Some(match query {
        InvQuery::Noether => value(serde_json::to_value(noether_complete(&inv)?).expect("serializable"), "noether"),
        InvQuery::BlowUp => {
            let out = blow_up(&inv, need(n, "n")?)?;
            value(serde_json::to_value(out).expect("serializable"), "blow-up")
        }
        InvQuery::Fibration => report_value("fibration", &fibration_chi_bounds(&inv)),
        InvQuery::Xiao => {
            let case = match case {
                Case::I => XiaoCase::CaseI,
                Case::Ii => XiaoCase::CaseII,
            };
            report_value("xiao", &xiao_validate(&inv, case))
        }
        InvQuery::GeneralType => report_value("general-type", &general_type_checks(&inv, minimal)),
        InvQuery::Elliptic => {
            let (c2, chi) = elliptic_c2(need(inv.d, "inv d")?)?;
            value(json!({ "c2": c2, "chi": chi }), "elliptic")
        }
        InvQuery::Slope => {
            let (nu, verdict) = kodaira_slope(need(inv.k2, "inv K2")?, need(inv.e, "inv e")?)?;
            value(
                json!({ "slope": format_rational(&nu), "verdict": verdict }),
                "slope",
            )
        }
        InvQuery::Hurwitz => value(json!(hurwitz_bound(need(inv.g1, "inv g1")?)?), "hurwitz"),
    }))
}

fn flags_text(flags: &[ScanFlag]) -> String {
    flags.iter().map(|f| f.as_str()).collect::<Vec<_>>().join(";")
}

fn xiao_scan(g2: i64, chi_max: i64, format: Format) -> Outcome {
    if g2 < 0 {
        return Err(schema("--g2 must be nonnegative"));
    }
    if chi_max < g2 - 1 {
        return Err(schema(format!("--chi-max must be at least g2 - 1 = {}", g2 - 1)));
    }
    eprintln!("note: eps=0 rows carry only the weaker existence guarantee (flag eps0-weak)");
    match format {
        Format::Csv => {
            let stdout = io::stdout();
            let mut out = stdout.lock();
            let io_err = |e: io::Error| Failure::Domain(Error::InvalidInput(e.to_string()));
            writeln!(out, "chi,eps,K2_min,K2_max,flags").map_err(io_err)?;
            for chi in (g2 - 1)..=chi_max {
                for row in geography::xiao_scan_chi(g2, chi) {
                    writeln!(
                        out,
                        "{},{},{},{},{}",
                        row.chi,
                        row.eps,
                        row.k2_min,
                        row.k2_max,
                        flags_text(&row.flags)
                    )
                    .map_err(io_err)?;
                }
                out.flush().map_err(io_err)?;
            }
            Ok(None)
        }
        Format::Json => {
            let rows: Vec<ScanRow> = geography::xiao_admissible_scan(g2, chi_max);
            Ok(Some(json!({ "g2": g2, "chi_max": chi_max, "rows": rows })))
        }
    }
}

fn effective_seed(flag: u64) -> Result<u64, Failure> {
    match std::env::var("FIBRELAB_SEED") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| schema(format!("FIBRELAB_SEED is not an unsigned integer: {s:?}"))),
        Err(_) => Ok(flag),
    }
}

fn run(cli: Cli) -> Outcome {
    let seed = effective_seed(cli.seed)?;
    let csv_ok = matches!(cli.command, Command::XiaoScan { .. });
    if cli.format == Format::Csv && !csv_ok {
        return Err(schema("--format csv is only available for xiao-scan"));
    }
    match cli.command {
        Command::Construct { genus, t, split } => construct(genus, t, split, seed),
        Command::Classify { genus, f, file } => classify_cmd(genus, f, file),
        Command::Pencil { genus, f0, f1, file, random } => pencil_cmd(genus, f0, f1, file, random, seed),
        Command::Systems { surface, query, a, b, t, e, genus, c, r, a2, b2 } => {
            systems_cmd(surface, &query, a, b, t, e, genus, c, r, a2, b2)
        }
        Command::Invariants { query, inv, file, n, case, minimal } => {
            invariants_cmd(query, inv, file, n, case, minimal)
        }
        Command::XiaoScan { g2, chi_max } => xiao_scan(g2, chi_max, cli.format),
    }
}

fn emit_error(msg: &str, code: u8) -> ExitCode {
    println!("{}", json!({ "error": msg }));
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.kind().to_string();
            eprintln!("{e}");
            return emit_error(&text, 2);
        }
    };
    match run(cli) {
        Ok(Some(v)) => {
            println!("{v}");
            ExitCode::SUCCESS
        }
        Ok(None) => ExitCode::SUCCESS,
        Err(Failure::Schema(msg)) => emit_error(&msg, 2),
        Err(Failure::Domain(e)) => emit_error(&e.to_string(), 1),
    }
}
