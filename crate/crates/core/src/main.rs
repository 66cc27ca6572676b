use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::json;

use mtrace::algebra::{build_triangular, build_ut, is_gbt, verify_wm_data, Algebra, Element, WmData};
use mtrace::algebra::{commutator_subspace, quotient_dim};
use mtrace::factor::{gbt_factor, is_commutator, CommutatorDecision};
use mtrace::gallery::{gallery_entry, GALLERY_NAMES};
use mtrace::json::{self, AlgebraJson, BimoduleActionJson, BimoduleProblemJson, ElementJson};
use mtrace::multitrace::multitrace;
use mtrace::sample;
use mtrace::sylvester::solve_sylvester;
use mtrace::Error;

/// Multitrace invariants and commutator factorization over the rationals.
#[derive(Debug, Parser)]
#[command(name = "mtrace", version)]
struct Cli {
    /// Primary input file (algebra or Sylvester problem, depending on the command).
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Seed for randomly drawn elements.
    #[arg(long, global = true, default_value_t = sample::DEFAULT_SEED)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Emit an algebra with its decomposition.
    #[command(subcommand)]
    Build(BuildKind),
    /// Multitrace, GBT status and commutator decision for one element.
    Analyze(ElementArgs),
    /// Factor a multitrace-zero element of a GBT algebra as [x, y].
    Factor(ElementArgs),
    /// Solve (L - R) x = c for a bimodule problem.
    Sylvester,
    /// Compare dim A/[A,A] with the number of simple components.
    Quotient,
    /// Check the stored facts of a gallery algebra, or `list` the gallery.
    Gallery(GalleryArgs),
}

#[derive(Debug, Subcommand)]
enum BuildKind {
    /// Block upper-triangular matrices UT(d1, ..., dm).
    Ut {
        #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
        blocks: Vec<usize>,
    },
    /// [[A1, M], [0, A2]] from two semisimple algebras and an action file.
    Triangular {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long)]
        action: PathBuf,
    },
    /// Validate an algebra file (from --input) and re-emit it.
    File,
}

#[derive(Debug, Args)]
struct ElementArgs {
    /// Element file `{"coords": [...]}`.
    #[arg(long, conflicts_with = "random_element", required_unless_present = "random_element")]
    element: Option<PathBuf>,
    /// Draw a random multitrace-zero element from --seed instead.
    #[arg(long)]
    random_element: bool,
}

#[derive(Debug, Args)]
struct GalleryArgs {
    /// `example0`, `m2_dual` or `list`.
    name: String,
    /// Emit the algebra JSON instead of the assertion report.
    #[arg(long)]
    emit_algebra: bool,
}

/// Exit status 1: a mathematical negative; 2: usage or schema error.
enum Failure {
    Negative(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotGbt | Error::NonzeroMultitrace(_) | Error::VerificationFailed => Failure::Negative(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CliResult = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(Failure::Negative(msg)) => {
            eprintln!("mtrace: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("mtrace: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> CliResult {
    let Format::Json = cli.format;
    match &cli.command {
        Command::Build(kind) => build(cli, kind),
        Command::Analyze(args) => analyze(cli, args),
        Command::Factor(args) => factor(cli, args),
        Command::Sylvester => sylvester(cli),
        Command::Quotient => quotient(cli),
        Command::Gallery(args) => gallery(cli, args),
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit<T: Serialize>(cli: &Cli, value: &T) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    match &cli.output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Usage(e.to_string())),
    }
}

fn input_path(cli: &Cli) -> Result<&Path, Failure> {
    cli.input
        .as_deref()
        .ok_or_else(|| Failure::Usage("--input is required for this command".into()))
}

fn load_algebra(path: &Path) -> Result<(Algebra, Option<WmData>), Failure> {
    let j: AlgebraJson = read_json(path)?;
    Ok(json::algebra_from_json(&j)?)
}

fn load_with_wm(cli: &Cli) -> Result<(Algebra, WmData), Failure> {
    let (alg, wm) = load_algebra(input_path(cli)?)?;
    let wm = wm.ok_or_else(|| Failure::Usage("algebra file has no \"wm\" decomposition".into()))?;
    let report = verify_wm_data(&alg, &wm);
    if !report.is_valid() {
        return Err(Failure::Usage(format!("invalid decomposition: {report}")));
    }
    Ok((alg, wm))
}

fn load_element(cli: &Cli, args: &ElementArgs, alg: &Algebra, wm: &WmData) -> Result<Element, Failure> {
    let element = match &args.element {
        Some(path) => {
            let j: ElementJson = read_json(path)?;
            json::element_from_json(&j)?
        }
        None => sample::multitrace_zero_element(&mut sample::rng(cli.seed), alg, wm, 9)?,
    };
    if element.dim() != alg.dim() {
        return Err(Failure::Usage(format!(
            "element has {} coordinates, algebra has dimension {}",
            element.dim(),
            alg.dim()
        )));
    }
    Ok(element)
}

fn build(cli: &Cli, kind: &BuildKind) -> CliResult {
    let (alg, wm) = match kind {
        BuildKind::Ut { blocks } => {
            let (alg, wm) = build_ut(blocks)?;
            (alg, Some(wm))
        }
        BuildKind::Triangular { left, right, action } => {
            let (a1, w1) = load_algebra(left)?;
            let (a2, w2) = load_algebra(right)?;
            let missing = || Failure::Usage("triangular inputs need \"wm\" decompositions".into());
            let (w1, w2) = (w1.ok_or_else(missing)?, w2.ok_or_else(missing)?);
            let act: BimoduleActionJson = read_json(action)?;
            let t = build_triangular((&a1, &w1), (&a2, &w2), &json::action_from_json(&act)?)?;
            (t.algebra, Some(t.wm))
        }
        BuildKind::File => {
            let (alg, wm) = load_algebra(input_path(cli)?)?;
            if let Some(wm) = &wm {
                let report = verify_wm_data(&alg, wm);
                if !report.is_valid() {
                    return Err(Failure::Usage(format!("invalid decomposition: {report}")));
                }
            }
            (alg, wm)
        }
    };
    emit(cli, &json::algebra_to_json(&alg, wm.as_ref()))?;
    Ok(ExitCode::SUCCESS)
}

fn analyze(cli: &Cli, args: &ElementArgs) -> CliResult {
    let (alg, wm) = load_with_wm(cli)?;
    let a = load_element(cli, args, &alg, &wm)?;
    let mtr = multitrace(&alg, &wm, &a)?;
    let gbt = is_gbt(&alg, &wm)?;
    let (decision, certificate, note, code) = match is_commutator(&alg, &wm, &a)? {
        CommutatorDecision::Yes(cert) => (
            "yes",
            Some(json::certificate_to_json(&cert)),
            None,
            ExitCode::SUCCESS,
        ),
        CommutatorDecision::No(_) => ("no", None, Some("nonzero multitrace".to_string()), ExitCode::from(1)),
        CommutatorDecision::Unknown(note) => ("unknown", None, Some(note), ExitCode::SUCCESS),
    };
    emit(
        cli,
        &json!({
            "element": json::element_to_json(&a),
            "multitrace": json::multitrace_to_json(&mtr),
            "multitrace_zero": mtr.is_zero(),
            "gbt": gbt,
            "decision": decision,
            "certificate": certificate,
            "note": note,
        }),
    )?;
    Ok(code)
}

fn factor(cli: &Cli, args: &ElementArgs) -> CliResult {
    let (alg, wm) = load_with_wm(cli)?;
    let a = load_element(cli, args, &alg, &wm)?;
    let cert = gbt_factor(&alg, &wm, &a)?;
    if !cert.verified {
        return Err(Failure::Negative("certificate failed verification".into()));
    }
    emit(cli, &json::certificate_to_json(&cert))?;
    Ok(ExitCode::SUCCESS)
}

fn sylvester(cli: &Cli) -> CliResult {
    let j: BimoduleProblemJson = read_json(input_path(cli)?)?;
    let problem = json::problem_from_json(&j)?;
    emit(cli, &json::solution_to_json(&solve_sylvester(&problem)))?;
    Ok(ExitCode::SUCCESS)
}

fn quotient(cli: &Cli) -> CliResult {
    let (alg, wm) = load_with_wm(cli)?;
    let span = commutator_subspace(&alg).dim();
    let q = quotient_dim(&alg);
    let r = wm.block_count();
    emit(
        cli,
        &json!({
            "dim_A": alg.dim(),
            "dim_commutator_span": span,
            "quotient_dim": q,
            "r": r,
            "bound_satisfied": q >= r,
        }),
    )?;
    Ok(ExitCode::SUCCESS)
}

fn gallery(cli: &Cli, args: &GalleryArgs) -> CliResult {
    if args.name == "list" {
        emit(cli, &json!({ "entries": GALLERY_NAMES }))?;
        return Ok(ExitCode::SUCCESS);
    }
    let entry = gallery_entry(&args.name)
        .ok_or_else(|| Failure::Usage(format!("unknown gallery entry {:?}; try `gallery list`", args.name)))?;
    if args.emit_algebra {
        emit(cli, &json::algebra_to_json(&entry.algebra, Some(&entry.wm)))?;
        return Ok(ExitCode::SUCCESS);
    }
    let outcomes = entry.run();
    let passed = outcomes.iter().all(|o| o.passed);
    let assertions: Vec<_> = outcomes
        .iter()
        .map(|o| json!({ "name": o.name, "passed": o.passed, "detail": o.detail }))
        .collect();
    emit(
        cli,
        &json!({ "name": entry.name, "passed": passed, "assertions": assertions }),
    )?;
    Ok(if passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
