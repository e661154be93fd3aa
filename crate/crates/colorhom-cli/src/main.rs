//! Command-line front end: check axiom suites and ad-hoc identities, run
//! constructions, search for operators, and inspect algebra documents.
//!
//! Exit codes: 0 = pass, 1 = a check failed (the witness is printed on
//! stdout), 2 = structural error (bad document, unknown suite, bad flags).
//! Output is machine-readable JSON unless `--pretty` is given.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use colorhom::algebra::{HomAlgebra, LinearMap};
use colorhom::constructions::{
    self, BracketKind, CentroidVariant, ConstructionError, ConstructionResult, DerivedType,
    SplitMode,
};
use colorhom::document::{load_algebra_str, render_algebra, AlgebraDocument};
use colorhom::dsl::{parse_identity, CheckReport, Witness};
use colorhom::operators::OperatorKind;
use colorhom::scalar::{parse_scalar, render_scalar};
use colorhom::search::{search_operators, SearchSpec};
use colorhom::suites::{check_multiplicative, check_suite, list_suites, SuiteReport};

#[derive(Parser)]
#[command(
    name = "colorhom",
    about = "Exact verification and construction engine for graded color Hom-algebras",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a built-in axiom suite against an algebra document.
    Check(CheckArgs),
    /// Check one ad-hoc identity written in the DSL.
    Identity(IdentityArgs),
    /// Run a construction and write the resulting document.
    Construct(ConstructArgs),
    /// Enumerate even maps satisfying an operator identity.
    Search(SearchArgs),
    /// Summarize a document: dimension, degrees, product sparsity.
    Describe(DescribeArgs),
    /// List the registered suites.
    ListSuites(PrettyArg),
}

#[derive(Args)]
struct PrettyArg {
    /// Human-readable output instead of JSON.
    #[arg(long)]
    pretty: bool,
}

#[derive(Args)]
struct CheckArgs {
    file: PathBuf,
    /// Suite name, e.g. hom-tridendriform-color.
    #[arg(long)]
    suite: String,
    /// Explicit slot bindings, slot=product. May repeat.
    #[arg(long = "bind", value_parser = parse_binding)]
    bind: Vec<(String, String)>,
    #[arg(long)]
    pretty: bool,
}

#[derive(Args)]
struct IdentityArgs {
    file: PathBuf,
    /// Identity text in the DSL grammar; asserts the expression vanishes.
    #[arg(long)]
    schema: String,
    /// Name used in reports.
    #[arg(long, default_value = "ad-hoc")]
    name: String,
    /// Slot bindings applied before evaluation, slot=product. May repeat.
    #[arg(long = "bind", value_parser = parse_binding)]
    bind: Vec<(String, String)>,
    #[arg(long)]
    pretty: bool,
}

#[derive(Args)]
struct ConstructArgs {
    file: PathBuf,
    /// Construction name: tensor-product, nijenhuis-deform,
    /// averaging-dialgebra, rb-split, sum-product, bracket-commutator,
    /// bracket-dialgebra, tri-to-postlie, postlie-star, opposite,
    /// dendriform-from-tri, yau-twist, derived, centroid-twist,
    /// ideal-dialgebra.
    #[arg(long)]
    op: String,
    /// Output document path.
    #[arg(short, long)]
    out: PathBuf,
    /// Second input document (tensor-product).
    #[arg(long)]
    with: Option<PathBuf>,
    /// Linear map by name: a key under "maps", or alpha | id | zero.
    #[arg(long)]
    map: Option<String>,
    /// Second linear map (centroid-twist).
    #[arg(long)]
    map2: Option<String>,
    /// Rota-Baxter weight (rb-split), e.g. 1 or 3/2.
    #[arg(long, allow_hyphen_values = true)]
    weight: Option<String>,
    /// rb-split mode: tridendriform | dendriform.
    #[arg(long)]
    mode: Option<String>,
    /// Compose the deformed product with alpha (nijenhuis-deform).
    #[arg(long)]
    compose_alpha: bool,
    /// Twist power n (yau-twist).
    #[arg(long)]
    power: Option<u32>,
    /// Derived-algebra type: 1 | 2.
    #[arg(long)]
    dtype: Option<u32>,
    /// Derived-algebra index k.
    #[arg(long)]
    k: Option<u32>,
    /// Centroid-twist variant: 1 | 2.
    #[arg(long)]
    variant: Option<u32>,
    /// Comma-separated ideal basis names (ideal-dialgebra).
    #[arg(long)]
    ideal: Option<String>,
    /// Suite the result is expected to keep satisfying (yau-twist, derived,
    /// centroid-twist); defaults to the document's first annotation.
    #[arg(long)]
    suite: Option<String>,
    /// Skip hypothesis and conclusion verification.
    #[arg(long)]
    no_verify: bool,
    #[arg(long)]
    pretty: bool,
}

#[derive(Args)]
struct SearchArgs {
    file: PathBuf,
    /// Operator kind: rota-baxter | nijenhuis | averaging | centroid.
    #[arg(long)]
    kind: String,
    /// Weight for rota-baxter.
    #[arg(long, allow_hyphen_values = true)]
    weight: Option<String>,
    /// Comma-separated candidate entries, e.g. "-1,0,1".
    #[arg(long, allow_hyphen_values = true)]
    entries: String,
    /// Abort when the grid holds more candidates than this.
    #[arg(long, default_value_t = 1_000_000)]
    limit: u64,
    /// Restrict the identity to these products. May repeat.
    #[arg(long = "product")]
    products: Vec<String>,
    #[arg(long)]
    pretty: bool,
}

#[derive(Args)]
struct DescribeArgs {
    file: PathBuf,
    #[arg(long)]
    pretty: bool,
}

fn parse_binding(s: &str) -> Result<(String, String), String> {
    s.split_once('=')
        .map(|(a, b)| (a.trim().to_owned(), b.trim().to_owned()))
        .ok_or_else(|| format!("binding `{s}` is not of the form slot=product"))
}

/// Structural failure: maps to exit code 2.
#[derive(Debug)]
struct CliError(String);

macro_rules! cli_from {
    ($($ty:ty),*) => {
        $(impl From<$ty> for CliError {
            fn from(e: $ty) -> Self {
                CliError(e.to_string())
            }
        })*
    };
}

cli_from!(
    colorhom::document::LoadError,
    colorhom::suites::SuiteError,
    colorhom::dsl::ParseError,
    colorhom::dsl::EvalError,
    colorhom::operators::OperatorError,
    colorhom::search::SearchError,
    colorhom::scalar::ScalarParseError,
    serde_json::Error
);

// ---- JSON output shapes ----

#[derive(Serialize)]
struct WitnessOut {
    identity: String,
    tuple: Vec<usize>,
    basis: Vec<String>,
    residual: BTreeMap<String, String>,
}

fn witness_out(alg: &HomAlgebra, w: &Witness) -> WitnessOut {
    WitnessOut {
        identity: w.identity.clone(),
        tuple: w.tuple.clone(),
        basis: w
            .tuple
            .iter()
            .map(|&i| alg.space().name(i).to_owned())
            .collect(),
        residual: w
            .residual
            .iter()
            .map(|(i, c)| (alg.space().name(i).to_owned(), render_scalar(c)))
            .collect(),
    }
}

#[derive(Serialize)]
struct SchemaOut {
    name: String,
    passed: bool,
    tuples_checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessOut>,
}

fn schema_out(alg: &HomAlgebra, name: &str, report: &CheckReport) -> SchemaOut {
    SchemaOut {
        name: name.to_owned(),
        passed: report.passed,
        tuples_checked: report.tuples_checked,
        witness: report.witness.as_ref().map(|w| witness_out(alg, w)),
    }
}

#[derive(Serialize)]
struct CheckOut {
    suite: String,
    passed: bool,
    binding: BTreeMap<String, String>,
    schemas: Vec<SchemaOut>,
}

fn suite_out(alg: &HomAlgebra, report: &SuiteReport) -> CheckOut {
    CheckOut {
        suite: report.suite.clone(),
        passed: report.passed,
        binding: report.binding.clone(),
        schemas: report
            .schemas
            .iter()
            .map(|(n, r)| schema_out(alg, n, r))
            .collect(),
    }
}

fn emit<T: Serialize>(value: &T, pretty_text: String, pretty: bool) {
    if pretty {
        println!("{pretty_text}");
    } else {
        println!("{}", serde_json::to_string(value).expect("serializable"));
    }
}

fn load_file(path: &PathBuf) -> Result<(HomAlgebra, AlgebraDocument), CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| CliError(format!("{}: {e}", path.display())))?;
    let doc = AlgebraDocument::from_json(&text)?;
    let alg = load_algebra_str(&text)?;
    Ok((alg, doc))
}

fn resolve_map(alg: &HomAlgebra, name: &str) -> Result<LinearMap, CliError> {
    match name {
        "alpha" => Ok(alg.alpha().clone()),
        "id" => Ok(LinearMap::identity(alg.dim())),
        "zero" => Ok(LinearMap::zero(alg.dim())),
        other => alg
            .map(other)
            .cloned()
            .ok_or_else(|| CliError(format!("no map `{other}` in the document"))),
    }
}

fn pretty_suite(report: &CheckOut) -> String {
    let mut out = format!(
        "suite {}: {}",
        report.suite,
        if report.passed { "pass" } else { "FAIL" }
    );
    for s in &report.schemas {
        out.push_str(&format!(
            "\n  {} ... {} ({} tuples)",
            s.name,
            if s.passed { "pass" } else { "FAIL" },
            s.tuples_checked
        ));
        if let Some(w) = &s.witness {
            out.push_str(&format!(
                "\n    witness: {:?} residual {:?}",
                w.basis, w.residual
            ));
        }
    }
    out
}

fn cmd_check(args: &CheckArgs) -> Result<u8, CliError> {
    let (alg, _) = load_file(&args.file)?;
    let binding: BTreeMap<String, String> = args.bind.iter().cloned().collect();
    let report = check_suite(&alg, &args.suite, &binding)?;
    let out = suite_out(&alg, &report);
    let text = pretty_suite(&out);
    emit(&out, text, args.pretty);
    Ok(if report.passed { 0 } else { 1 })
}

fn cmd_identity(args: &IdentityArgs) -> Result<u8, CliError> {
    let (alg, _) = load_file(&args.file)?;
    let schema = parse_identity(args.name.clone(), &args.schema)?;
    let binding: BTreeMap<String, String> = args.bind.iter().cloned().collect();
    let bound = schema.bind(&binding);
    let report = colorhom::dsl::evaluate_identity(&alg, &bound)?;
    let out = schema_out(&alg, &args.name, &report);
    let text = format!(
        "identity {}: {} ({} tuples)",
        args.name,
        if report.passed { "pass" } else { "FAIL" },
        report.tuples_checked
    );
    emit(&out, text, args.pretty);
    Ok(if report.passed { 0 } else { 1 })
}

#[derive(Serialize)]
struct ConstructOut {
    construction: String,
    written: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    expected_suite: Option<String>,
    verified: bool,
}

/// Dispatches the construction. The outer error is structural (exit 2), the
/// inner one is a hypothesis or conclusion failure (exit 1).
fn run_construction(
    args: &ConstructArgs,
) -> Result<Result<ConstructionResult, ConstructionError>, CliError> {
    let (alg, doc) = load_file(&args.file)?;
    let verify = !args.no_verify;
    let claimed = args
        .suite
        .clone()
        .or_else(|| doc.expected_suites.first().map(|a| a.suite.clone()));
    let need_map = |name: &Option<String>, default: &str| -> Result<LinearMap, CliError> {
        let n = name.clone().unwrap_or_else(|| default.to_owned());
        resolve_map(&alg, &n)
    };
    let built = match args.op.as_str() {
        "tensor-product" => {
            let with = args
                .with
                .as_ref()
                .ok_or_else(|| CliError("tensor-product needs --with FILE".into()))?;
            let (other, _) = load_file(with)?;
            constructions::tensor_product(&alg, &other, verify)
        }
        "nijenhuis-deform" => {
            let n = need_map(&args.map, "N")?;
            constructions::nijenhuis_deform(&alg, &n, args.compose_alpha, verify)
        }
        "averaging-dialgebra" => {
            let beta = need_map(&args.map, "beta")?;
            constructions::averaging_dialgebra(&alg, &beta, verify)
        }
        "rb-split" => {
            let r = need_map(&args.map, "R")?;
            let weight = parse_scalar(args.weight.as_deref().unwrap_or("0"))?;
            let mode = match args.mode.as_deref().unwrap_or("tridendriform") {
                "tridendriform" => SplitMode::Tridendriform,
                "dendriform" => SplitMode::Dendriform,
                other => return Err(CliError(format!("unknown mode `{other}`"))),
            };
            constructions::rb_split(&alg, &r, &weight, mode, verify)
        }
        "sum-product" => constructions::sum_product(&alg, verify),
        "bracket-commutator" => constructions::bracket_from(&alg, BracketKind::Commutator, verify),
        "bracket-dialgebra" => constructions::bracket_from(&alg, BracketKind::Dialgebra, verify),
        "tri-to-postlie" => constructions::tridendriform_to_postlie(&alg, verify),
        "postlie-star" => constructions::postlie_star(&alg, verify),
        "opposite" => constructions::opposite(&alg, verify),
        "dendriform-from-tri" => constructions::dendriform_from_tri(&alg, verify),
        "yau-twist" => {
            let beta = need_map(&args.map, "alpha")?;
            constructions::yau_twist(
                &alg,
                &beta,
                args.power.unwrap_or(1),
                claimed.as_deref(),
                verify,
            )
        }
        "derived" => {
            let dtype = match args.dtype.unwrap_or(1) {
                1 => DerivedType::One,
                2 => DerivedType::Two,
                other => return Err(CliError(format!("dtype must be 1 or 2, got {other}"))),
            };
            constructions::derived_algebra(
                &alg,
                dtype,
                args.k.unwrap_or(1),
                claimed.as_deref(),
                verify,
            )
        }
        "centroid-twist" => {
            let b1 = need_map(&args.map, "beta1")?;
            let b2 = need_map(&args.map2, "beta2")?;
            let variant = match args.variant.unwrap_or(1) {
                1 => CentroidVariant::LeftComposite,
                2 => CentroidVariant::Split,
                other => return Err(CliError(format!("variant must be 1 or 2, got {other}"))),
            };
            constructions::centroid_twist(&alg, &b1, &b2, variant, claimed.as_deref(), verify)
        }
        "ideal-dialgebra" => {
            let ideal: Vec<String> = args
                .ideal
                .as_deref()
                .unwrap_or("")
                .split(',')
                .filter(|s| !s.is_empty())
                .map(|s| s.trim().to_owned())
                .collect();
            constructions::ideal_dialgebra(&alg, &ideal, verify)
        }
        other => return Err(CliError(format!("unknown construction `{other}`"))),
    };
    Ok(built)
}

fn cmd_construct(args: &ConstructArgs) -> Result<u8, CliError> {
    match run_construction(args)? {
        Ok(result) => {
            let out_doc = render_algebra(&result.algebra, Some(&result.provenance));
            std::fs::write(&args.out, out_doc.to_json())
                .map_err(|e| CliError(format!("{}: {e}", args.out.display())))?;
            let out = ConstructOut {
                construction: result.provenance.construction.clone(),
                written: args.out.display().to_string(),
                expected_suite: result.expected_suite.clone(),
                verified: !args.no_verify,
            };
            let text = format!(
                "{}: wrote {}{}",
                out.construction,
                out.written,
                match &out.expected_suite {
                    Some(s) => format!(" (satisfies {s})"),
                    None => String::new(),
                }
            );
            emit(&out, text, args.pretty);
            Ok(0)
        }
        Err(e @ (ConstructionError::Precondition { .. } | ConstructionError::PostCheck { .. })) => {
            #[derive(Serialize)]
            struct FailOut {
                error: String,
            }
            let msg = e.to_string();
            emit(&FailOut { error: msg.clone() }, msg, args.pretty);
            Ok(1)
        }
        Err(other) => Err(CliError(other.to_string())),
    }
}

#[derive(Serialize)]
struct SearchOut {
    kind: String,
    found: usize,
    maps: Vec<Vec<Vec<String>>>,
}

fn cmd_search(args: &SearchArgs) -> Result<u8, CliError> {
    let (alg, _) = load_file(&args.file)?;
    let kind = match args.kind.as_str() {
        "rota-baxter" => OperatorKind::RotaBaxter {
            weight: parse_scalar(args.weight.as_deref().unwrap_or("0"))?,
        },
        "nijenhuis" => OperatorKind::Nijenhuis,
        "averaging" => OperatorKind::Averaging,
        "centroid" => OperatorKind::Centroid,
        other => return Err(CliError(format!("unknown operator kind `{other}`"))),
    };
    let entries = args
        .entries
        .split(',')
        .map(|s| parse_scalar(s).map_err(CliError::from))
        .collect::<Result<Vec<_>, _>>()?;
    let spec = SearchSpec {
        kind: kind.clone(),
        entries,
        limit: args.limit,
        products: if args.products.is_empty() {
            None
        } else {
            Some(args.products.clone())
        },
    };
    let found = search_operators(&alg, &spec)?;
    let matrices: Vec<Vec<Vec<String>>> = found
        .iter()
        .map(|m| {
            let dim = m.dim();
            let mut rows = vec![vec!["0".to_owned(); dim]; dim];
            for (j, image) in m.images().iter().enumerate() {
                for (i, c) in image.iter() {
                    rows[i][j] = render_scalar(c);
                }
            }
            rows
        })
        .collect();
    let out = SearchOut {
        kind: kind.label(),
        found: found.len(),
        maps: matrices,
    };
    let mut text = format!("{}: {} map(s) found", out.kind, out.found);
    for m in &out.maps {
        text.push_str(&format!("\n  {m:?}"));
    }
    emit(&out, text, args.pretty);
    Ok(0)
}

#[derive(Serialize)]
struct DescribeOut {
    dimension: usize,
    group: colorhom::document::GroupDoc,
    basis: Vec<BTreeMap<String, String>>,
    products: Vec<BTreeMap<String, String>>,
    maps: Vec<String>,
    multiplicative: bool,
}

fn cmd_describe(args: &DescribeArgs) -> Result<u8, CliError> {
    let (alg, doc) = load_file(&args.file)?;
    let basis = alg
        .space()
        .basis()
        .iter()
        .map(|b| {
            BTreeMap::from([
                ("name".to_owned(), b.name.clone()),
                ("degree".to_owned(), b.degree.to_string()),
            ])
        })
        .collect();
    let products = alg
        .products()
        .iter()
        .map(|p| {
            BTreeMap::from([
                ("name".to_owned(), p.name.clone()),
                ("entries".to_owned(), p.entry_count().to_string()),
            ])
        })
        .collect();
    let out = DescribeOut {
        dimension: alg.dim(),
        group: doc.group.clone(),
        basis,
        products,
        maps: alg.maps().keys().cloned().collect(),
        multiplicative: check_multiplicative(&alg).passed,
    };
    let text = format!(
        "dimension {} over Z^{} x {:?}; products: {}; multiplicative: {}",
        out.dimension,
        out.group.free_rank,
        out.group.torsion,
        out.products
            .iter()
            .map(|p| format!("{}({})", p["name"], p["entries"]))
            .collect::<Vec<_>>()
            .join(", "),
        out.multiplicative
    );
    emit(&out, text, args.pretty);
    Ok(0)
}

#[derive(Serialize)]
struct SuiteListEntry {
    name: String,
    slots: Vec<String>,
    schemas: usize,
}

fn cmd_list_suites(args: &PrettyArg) -> Result<u8, CliError> {
    let entries: Vec<SuiteListEntry> = list_suites()
        .into_iter()
        .map(|(name, slots, schemas)| SuiteListEntry {
            name,
            slots,
            schemas,
        })
        .collect();
    let text = entries
        .iter()
        .map(|e| {
            format!(
                "{} [{}] ({} schemas)",
                e.name,
                e.slots.join(", "),
                e.schemas
            )
        })
        .collect::<Vec<_>>()
        .join("\n");
    emit(&entries, text, args.pretty);
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Check(a) => cmd_check(a),
        Command::Identity(a) => cmd_identity(a),
        Command::Construct(a) => cmd_construct(a),
        Command::Search(a) => cmd_search(a),
        Command::Describe(a) => cmd_describe(a),
        Command::ListSuites(a) => cmd_list_suites(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(CliError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
