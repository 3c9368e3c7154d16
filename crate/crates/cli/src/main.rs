//! `tautile`: build algebras, enumerate support τ-tilting modules, and classify finiteness.

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tautile::algebra::{algebra_to_json, parse_algebra, BoundQuiverAlgebra};
use tautile::families::{build_family_over, FamilySpec};
use tautile::hecke::{
    classify_hecke, classify_schur, hecke_algebra, hecke_basic, hecke_quiver, schur_algebra, CoxeterSpec,
};
use tautile::linalg::{definiteness, integer_determinant, ScalarField};
use tautile::verdict::{
    enumerate, to_dot, to_json, verdict, Certificate, ExchangeGraphReport, Verdict, VerdictConfig,
    DEFAULT_ENUMERATION_CAP, DEFAULT_MAX_KEEP, DEFAULT_MAX_KILL,
};
use tautile::Error;

const EXIT_DECIDED: u8 = 0;
const EXIT_INTERNAL: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;
const EXIT_UNSUPPORTED: u8 = 4;

#[derive(Parser)]
#[command(name = "tautile", version, about = "Support tau-tilting finiteness of bound quiver algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Work with an algebra-definition file.
    #[command(subcommand)]
    Alg(AlgCommand),
    /// Named families of symmetric algebras.
    #[command(subcommand)]
    Family(FamilyCommand),
    /// 0-Hecke algebras of finite Coxeter groups.
    #[command(subcommand)]
    Hecke(HeckeCommand),
    /// 0-Schur algebras S0(n, r).
    #[command(subcommand)]
    Schur(SchurCommand),
    /// Write the exchange-graph report of an algebra as DOT or JSON.
    Export {
        /// Algebra JSON file, or `-` for standard input.
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write to this file instead of standard output.
        #[arg(short, long)]
        output: Option<String>,
        #[command(flatten)]
        engine: EngineArgs,
    },
}

#[derive(Subcommand)]
enum AlgCommand {
    /// Compute the basis and print a summary.
    Build {
        input: String,
        /// Print the normalized algebra JSON instead.
        #[arg(long)]
        json: bool,
    },
    /// Print the Cartan matrix.
    Cartan {
        input: String,
        /// Also print the determinant and definiteness.
        #[arg(long)]
        det: bool,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate the exchange graph without obstruction detectors.
    Enum {
        input: String,
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long)]
        json: bool,
    },
    /// Full verdict: certificate replay, detectors, then enumeration.
    Verdict {
        input: String,
        /// A certificate (JSON) to replay instead of searching.
        #[arg(long)]
        certificate: Option<String>,
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// Emit the algebra JSON of a family member.
    Build(FamilyArgs),
}

#[derive(Args)]
struct FamilyArgs {
    /// Apq, Lambda, Gamma, Tpqr, Tpq, T22rStar, Omega or Preproj.
    name: String,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    rank: Option<usize>,
    /// Build over the prime field of this order instead of Q.
    #[arg(long)]
    prime: Option<u64>,
}

#[derive(Args)]
struct CoxeterArgs {
    /// Coxeter type such as A3, B2, I2(5) or A1xA2.
    #[arg(required_unless_present = "matrix")]
    coxeter_type: Option<String>,
    /// Read a Coxeter matrix (whitespace-separated rows) from a file, or `-`.
    #[arg(long, conflicts_with = "coxeter_type")]
    matrix: Option<String>,
}

#[derive(Subcommand)]
enum HeckeCommand {
    /// The quiver Q_W on subsets of simple reflections.
    Quiver {
        #[command(flatten)]
        coxeter: CoxeterArgs,
        #[arg(long)]
        json: bool,
    },
    /// Basic presentation of H_0(W) as algebra JSON.
    Algebra {
        #[command(flatten)]
        coxeter: CoxeterArgs,
    },
    /// Finiteness of H_0(W).
    Verdict {
        #[command(flatten)]
        coxeter: CoxeterArgs,
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct SchurArgs {
    #[arg(short = 'n', long = "n")]
    n: usize,
    #[arg(short = 'r', long = "r")]
    r: usize,
}

#[derive(Subcommand)]
enum SchurCommand {
    /// Algebra JSON of e[n] H_0(S_r) e[n].
    Build {
        #[command(flatten)]
        params: SchurArgs,
    },
    /// Finiteness of S0(n, r).
    Verdict {
        #[command(flatten)]
        params: SchurArgs,
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Clone)]
struct EngineArgs {
    /// Stop enumerating after this many nodes.
    #[arg(long, env = "TAUTILE_CAP", default_value_t = DEFAULT_ENUMERATION_CAP as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    cap: u64,
    /// Largest vertex set tried by the hereditary-quotient search.
    #[arg(long, default_value_t = DEFAULT_MAX_KEEP)]
    max_keep: usize,
    /// Most arrows killed by the hereditary-quotient search.
    #[arg(long, default_value_t = DEFAULT_MAX_KILL)]
    max_kill: usize,
    /// Check module-level tau-rigidity on every node as well.
    #[arg(long)]
    validate: bool,
    /// Record wall time in the report.
    #[arg(long)]
    timing: bool,
}

impl EngineArgs {
    fn config(&self) -> VerdictConfig {
        VerdictConfig {
            cap: self.cap as usize,
            max_keep: self.max_keep,
            max_kill: self.max_kill,
            validate: self.validate,
            timing: self.timing,
            certificate: None,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::CharPUnsupported
            | Error::UnsupportedType(_)
            | Error::NonSplitSemisimpleQuotient
            | Error::NonSplitSummand
            | Error::NotBasic(_)
            | Error::SocleNotTwoSided => EXIT_UNSUPPORTED,
            Error::NotSilting(_) | Error::NotTwoTermSilting(_) => EXIT_INTERNAL,
            _ => EXIT_INVALID,
        };
        Failure { code, message: e.to_string() }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_INVALID, message: message.into() }
}

type Outcome = Result<u8, Failure>;

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| invalid(format!("standard input: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| invalid(format!("{path}: {e}")))
    }
}

fn load_algebra(path: &str) -> Result<BoundQuiverAlgebra, Failure> {
    Ok(parse_algebra(&read_input(path)?)?)
}

fn exit_for(v: &Verdict) -> u8 {
    match v {
        Verdict::Inconclusive { .. } => EXIT_INCONCLUSIVE,
        _ => EXIT_DECIDED,
    }
}

fn verdict_lines(v: &Verdict) -> String {
    match v {
        Verdict::Finite(c) => format!("finite: {c} support tau-tilting modules\n"),
        Verdict::Infinite(cert) => format!(
            "infinite: {}\ncertificate: {}\n",
            cert.summary(),
            serde_json::to_string(cert).expect("serializable")
        ),
        Verdict::Inconclusive { cap_hit } => format!("inconclusive: enumeration cap {cap_hit} reached\n"),
    }
}

fn verdict_fields(v: &Verdict) -> Value {
    match v {
        Verdict::Finite(c) => json!({ "verdict": "finite", "count": c }),
        Verdict::Infinite(cert) => json!({
            "verdict": "infinite",
            "certificate": serde_json::to_value(cert).expect("serializable"),
            "summary": cert.summary(),
        }),
        Verdict::Inconclusive { cap_hit } => json!({ "verdict": "inconclusive", "cap_hit": cap_hit }),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn print_report(report: &ExchangeGraphReport, as_json: bool) -> String {
    if as_json {
        to_json(report)
    } else {
        let mut s = format!("{} ({} vertices, fingerprint {})\n", report.label, report.vertices, report.algebra);
        s.push_str(&verdict_lines(&report.verdict));
        if let Some(d) = report.dual_stack {
            s.push_str(&format!("dual-stack check: {} nodes, {} mismatches\n", d.checked, d.mismatches));
        }
        if report.elapsed_ms > 0 {
            s.push_str(&format!("elapsed: {} ms\n", report.elapsed_ms));
        }
        s
    }
}

fn coxeter_spec(args: &CoxeterArgs) -> Result<CoxeterSpec, Failure> {
    let spec = match (&args.coxeter_type, &args.matrix) {
        (_, Some(path)) => CoxeterSpec::parse_matrix(&read_input(path)?)?,
        (Some(t), None) => CoxeterSpec::parse(t)?,
        (None, None) => return Err(invalid("a Coxeter type or --matrix is required")),
    };
    Ok(spec)
}

fn family_spec(args: &FamilyArgs) -> Result<FamilySpec, Failure> {
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| invalid(format!("{} needs --{flag}", args.name)));
    let spec = match args.name.to_ascii_lowercase().as_str() {
        "apq" | "a" => FamilySpec::Apq { p: need(args.p, "p")?, q: need(args.q, "q")? },
        "lambda" => FamilySpec::Lambda { m: need(args.m, "m")? },
        "gamma" => FamilySpec::Gamma { n: need(args.n, "n")? },
        "tpqr" => FamilySpec::Tpqr { p: need(args.p, "p")?, q: need(args.q, "q")?, r: need(args.r, "r")? },
        "tpq" => FamilySpec::Tpq { p: need(args.p, "p")?, q: need(args.q, "q")? },
        "t22rstar" | "t22r*" => FamilySpec::T22rStar { r: need(args.r, "r")? },
        "omega" => FamilySpec::Omega { n: need(args.n, "n")? },
        "preproj" | "preproja" => FamilySpec::PreprojA { rank: need(args.rank.or(args.n), "rank")? },
        other => return Err(invalid(format!("unknown family {other}"))),
    };
    Ok(spec)
}

fn run(cli: Cli, out: &mut String) -> Outcome {
    match cli.command {
        Command::Alg(cmd) => run_alg(cmd, out),
        Command::Family(FamilyCommand::Build(args)) => {
            let field = match args.prime {
                Some(p) => ScalarField::prime(p)?,
                None => ScalarField::Rationals,
            };
            let a = build_family_over(family_spec(&args)?, field)?;
            out.push_str(&algebra_to_json(&a));
            Ok(EXIT_DECIDED)
        }
        Command::Hecke(cmd) => run_hecke(cmd, out),
        Command::Schur(cmd) => run_schur(cmd, out),
        Command::Export { input, format, output, engine } => {
            let a = load_algebra(&input)?;
            let report = verdict(&a, &engine.config())?;
            let text = match format {
                Format::Dot => to_dot(&report),
                Format::Json => to_json(&report),
            };
            match output {
                Some(path) => fs::write(&path, text).map_err(|e| invalid(format!("{path}: {e}")))?,
                None => out.push_str(&text),
            }
            Ok(exit_for(&report.verdict))
        }
    }
}

fn run_alg(cmd: AlgCommand, out: &mut String) -> Outcome {
    match cmd {
        AlgCommand::Build { input, json } => {
            let a = load_algebra(&input)?;
            if json {
                out.push_str(&algebra_to_json(&a));
            } else {
                let q = a.quiver();
                out.push_str(&format!(
                    "{} vertices, {} arrows, dimension {}\nbasis: {}\n",
                    q.vertex_count(),
                    q.arrow_count(),
                    a.dim(),
                    a.basis_labels().join(" ")
                ));
            }
            Ok(EXIT_DECIDED)
        }
        AlgCommand::Cartan { input, det, json } => {
            let a = load_algebra(&input)?;
            let c = a.cartan_matrix();
            let rows: Vec<Vec<String>> = c.row_vecs().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
            let determinant = if det { Some(integer_determinant(&c)?) } else { None };
            let definite = if det && c.is_symmetric() { Some(format!("{:?}", definiteness(&c)?)) } else { None };
            if json {
                let mut v = json!({ "vertices": a.quiver().vertices(), "cartan": rows });
                if let Some(d) = &determinant {
                    v["determinant"] = json!(d.to_string());
                }
                if let Some(d) = &definite {
                    v["definiteness"] = json!(d);
                }
                out.push_str(&pretty(&v));
            } else {
                let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
                for r in &rows {
                    let cells: Vec<String> = r.iter().map(|x| format!("{x:>width$}")).collect();
                    out.push_str(&cells.join(" "));
                    out.push('\n');
                }
                if let Some(d) = determinant {
                    out.push_str(&format!("det = {d}\n"));
                }
                if let Some(d) = definite {
                    out.push_str(&format!("{d}\n"));
                }
            }
            Ok(EXIT_DECIDED)
        }
        AlgCommand::Enum { input, engine, json } => {
            let a = load_algebra(&input)?;
            let report = enumerate(&a, &engine.config())?;
            out.push_str(&print_report(&report, json));
            Ok(exit_for(&report.verdict))
        }
        AlgCommand::Verdict { input, certificate, engine, json } => {
            let a = load_algebra(&input)?;
            let mut config = engine.config();
            if let Some(path) = certificate {
                let text = read_input(&path)?;
                let cert: Certificate = serde_json::from_str(&text).map_err(|e| invalid(format!("certificate: {e}")))?;
                config.certificate = Some(cert);
            }
            let report = verdict(&a, &config)?;
            out.push_str(&print_report(&report, json));
            Ok(exit_for(&report.verdict))
        }
    }
}

fn run_hecke(cmd: HeckeCommand, out: &mut String) -> Outcome {
    match cmd {
        HeckeCommand::Quiver { coxeter, json } => {
            let spec = coxeter_spec(&coxeter)?;
            spec.validate()?;
            let q = hecke_quiver(&spec);
            if json {
                let arrows: Vec<Value> = q
                    .arrows()
                    .iter()
                    .map(|x| json!({ "name": x.name, "from": q.vertices()[x.source], "to": q.vertices()[x.target] }))
                    .collect();
                out.push_str(&pretty(&json!({ "type": spec.to_string(), "vertices": q.vertices(), "arrows": arrows })));
            } else {
                out.push_str(&format!(
                    "{}: {} vertices, {} arrows, {} components\n",
                    spec,
                    q.vertex_count(),
                    q.arrow_count(),
                    q.components().len()
                ));
                for x in q.arrows() {
                    out.push_str(&format!("{}: {} -> {}\n", x.name, q.vertices()[x.source], q.vertices()[x.target]));
                }
            }
            Ok(EXIT_DECIDED)
        }
        HeckeCommand::Algebra { coxeter } => {
            let spec = coxeter_spec(&coxeter)?;
            let basic = hecke_basic(&hecke_algebra(&spec)?)?;
            out.push_str(&algebra_to_json(&basic.algebra));
            Ok(EXIT_DECIDED)
        }
        HeckeCommand::Verdict { coxeter, engine, json } => {
            let spec = coxeter_spec(&coxeter)?;
            let c = classify_hecke(&spec, &engine.config())?;
            if json {
                let mut v = verdict_fields(&c.verdict);
                v["type"] = json!(c.spec);
                out.push_str(&pretty(&v));
            } else {
                out.push_str(&verdict_lines(&c.verdict));
            }
            Ok(exit_for(&c.verdict))
        }
    }
}

fn run_schur(cmd: SchurCommand, out: &mut String) -> Outcome {
    match cmd {
        SchurCommand::Build { params } => {
            out.push_str(&algebra_to_json(&schur_algebra(params.n, params.r)?));
            Ok(EXIT_DECIDED)
        }
        SchurCommand::Verdict { params, engine, json } => {
            let c = classify_schur(params.n, params.r, &engine.config())?;
            if json {
                let mut v = verdict_fields(&c.verdict);
                v["n"] = json!(c.n);
                v["r"] = json!(c.r);
                if let Some(s) = &c.singleton_block {
                    v["singleton_block"] = json!({
                        "vertices": s.vertices,
                        "count": s.count,
                        "expected": s.expected,
                        "matches": s.matches,
                    });
                }
                out.push_str(&pretty(&v));
            } else {
                out.push_str(&verdict_lines(&c.verdict));
                if let Some(s) = &c.singleton_block {
                    let found = s.count.map_or_else(|| "inconclusive".to_string(), |n| n.to_string());
                    let flag = if s.matches { "" } else { "  MISMATCH" };
                    out.push_str(&format!("singleton block: {found} (expected {}){flag}\n", s.expected));
                }
            }
            Ok(exit_for(&c.verdict))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let code = match run(cli, &mut out) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("tautile: {}", f.message);
            f.code
        }
    };
    let mut stdout = io::stdout().lock();
    if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(EXIT_INTERNAL);
    }
    ExitCode::from(code)
}
