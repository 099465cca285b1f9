//! Command-line front end: diagonalize ring sectors, compute stability
//! subgroups, symmetry classes and jump tables, dump sector idempotents, and
//! recompute the built-in four-site reference dataset.
//!
//! Exit codes: 0 success, 1 computational mismatch or internal failure,
//! 2 usage error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use heisenring::groupring::{is_idempotent, uniform_idempotent};
use heisenring::heisenberg::{all_sectors, diagonalize, sector_matrix, EigenSystem, Model};
use heisenring::hilbert::{StateVector, Weight};
use heisenring::reference::reference_data;
use heisenring::scalar::Scalar;
use heisenring::symanalysis::{
    jump_analysis, smallest_class_subspace, smallest_class_vector, stability_line,
};
use heisenring::symrep::{ideal_structure, sector_idempotents, structure_string};

#[derive(Parser)]
#[command(
    name = "heisenring",
    version,
    about = "Symmetry analysis of spin-1/2 Heisenberg rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Diagonalize weight sectors of the ring Hamiltonian
    Eigen(EigenArgs),
    /// Stability subgroups of a vector and of its line
    Stab(StabArgs),
    /// Smallest symmetry class of one vector or of a spanned subspace
    Class(ClassArgs),
    /// Symmetry-class jumps inside one eigenspace
    Jumps(JumpsArgs),
    /// Sector idempotents splitting a Young-subgroup average
    Idempotents(IdempotentsArgs),
    /// Recompute the built-in four-site reference tables and diff them
    #[command(name = "reproduce-paper")]
    ReproducePaper(ReproduceArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Hf,
    Ha,
    Htilde,
}

impl ModelArg {
    fn to_model(self) -> Model {
        match self {
            ModelArg::Hf => Model::ferromagnet(),
            ModelArg::Ha => Model::antiferromagnet(),
            ModelArg::Htilde => Model::Dimensionless,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum ModeArg {
    Exact,
    Float,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum FormatArg {
    Table,
    Json,
    Csv,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "table")]
    format: FormatArg,
    /// Write the report to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EigenArgs {
    /// Number of ring sites (2..=12)
    #[arg(long)]
    sites: usize,
    /// Hamiltonian variant
    #[arg(long, value_enum, default_value = "htilde")]
    model: ModelArg,
    /// Restrict to one weight sector, e.g. 2,2
    #[arg(long)]
    weight: Option<String>,
    /// Restrict to one eigenvalue, e.g. -2 or -1/2
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<String>,
    /// Arithmetic mode of the emitted values
    #[arg(long, value_enum, default_value = "exact")]
    mode: ModeArg,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct StabArgs {
    /// Reference vector name (v1..v16)
    #[arg(long)]
    fixture: Option<String>,
    /// Path to a state-vector JSON file
    #[arg(long)]
    vector: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "exact")]
    mode: ModeArg,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct ClassArgs {
    /// Comma-separated reference vector names, e.g. v7,v8,v10
    #[arg(long)]
    fixture: Option<String>,
    /// Path to a state-vector JSON file (single vector)
    #[arg(long)]
    vector: Option<PathBuf>,
    /// Also report the commutation-class ideal generated by the stabilizer
    #[arg(long)]
    commutation: bool,
    #[arg(long, value_enum, default_value = "exact")]
    mode: ModeArg,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct JumpsArgs {
    #[arg(long)]
    sites: usize,
    /// Eigenvalue selecting the eigenspace, e.g. 0 or -1/2
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
    /// Weight sector, e.g. 2,2
    #[arg(long)]
    weight: String,
    #[arg(long, value_enum, default_value = "htilde")]
    model: ModelArg,
    #[arg(long, value_enum, default_value = "exact")]
    mode: ModeArg,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct IdempotentsArgs {
    #[arg(long)]
    sites: usize,
    /// Weight pair r1,r2 defining the Young subgroup
    #[arg(long)]
    weight: String,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct ReproduceArgs {
    #[command(flatten)]
    output: OutputArgs,
}

enum CliError {
    Usage(String),
    Failure(String),
}

impl From<heisenring::Error> for CliError {
    fn from(e: heisenring::Error) -> Self {
        use heisenring::Error::*;
        match e {
            DegreeMismatch(..)
            | InvalidPermutation(..)
            | InvalidWeight { .. }
            | InvalidPartition(..)
            | MixedWeight
            | ZeroVector
            | DependentVectors
            | InvalidConfig(..)
            | SitesOutOfRange(..)
            | Parse(..)
            | NotAnEigenvalue(..)
            | EmptyGenerators => CliError::Usage(e.to_string()),
            other => CliError::Failure(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Eigen(args) => cmd_eigen(args),
        Command::Stab(args) => cmd_stab(args),
        Command::Class(args) => cmd_class(args),
        Command::Jumps(args) => cmd_jumps(args),
        Command::Idempotents(args) => cmd_idempotents(args),
        Command::ReproducePaper(args) => cmd_reproduce(args),
    }
}

fn emit(output: &OutputArgs, text: String) -> Result<(), CliError> {
    match &output.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn parse_weight(s: &str, n: usize) -> Result<Weight, CliError> {
    let parts: Vec<&str> = s.split(',').collect();
    let [r1, r2] = parts.as_slice() else {
        return Err(CliError::Usage(format!("weight must be r1,r2, got {s:?}")));
    };
    let r1: usize = r1
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("bad weight {s:?}")))?;
    let r2: usize = r2
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("bad weight {s:?}")))?;
    let wt = Weight::new(r1, r2);
    wt.check(n).map_err(CliError::from)?;
    Ok(wt)
}

/// Site cap for group-ring commands; the environment variable
/// HEISENRING_MAX_SITES overrides the default of 8.
fn group_ring_cap() -> usize {
    std::env::var("HEISENRING_MAX_SITES")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(8)
}

fn check_eigen_sites(n: usize) -> Result<(), CliError> {
    if !(2..=12).contains(&n) {
        return Err(CliError::Usage(format!("sites must be in 2..=12, got {n}")));
    }
    Ok(())
}

fn check_group_ring_sites(n: usize) -> Result<(), CliError> {
    let cap = group_ring_cap();
    if n < 1 || n > cap {
        return Err(CliError::Usage(format!(
            "sites must be in 1..={cap} for group-ring commands (HEISENRING_MAX_SITES overrides), got {n}"
        )));
    }
    Ok(())
}

fn cmd_eigen(args: EigenArgs) -> Result<ExitCode, CliError> {
    check_eigen_sites(args.sites)?;
    let model = args.model.to_model();
    let mut systems: Vec<EigenSystem> = match &args.weight {
        Some(w) => {
            let wt = parse_weight(w, args.sites)?;
            vec![diagonalize(&sector_matrix(args.sites, wt, &model)?)?]
        }
        None => all_sectors(args.sites, &model)?,
    };
    if let Some(mu) = &args.mu {
        let target = Scalar::parse_real(mu)?;
        for sys in &mut systems {
            sys.pairs.retain(|p| p.value == target);
        }
        systems.retain(|s| !s.pairs.is_empty());
        if systems.is_empty() {
            return Err(CliError::Usage(format!(
                "{mu} is not an eigenvalue of any sector"
            )));
        }
    }
    if args.mode == ModeArg::Float {
        for sys in &mut systems {
            for pair in &mut sys.pairs {
                pair.value = pair.value.to_float();
                pair.vector = pair.vector.to_float();
                pair.exact = false;
            }
        }
    }
    let text = match args.output.format {
        FormatArg::Json => serde_json::to_string_pretty(&systems).expect("serializable") + "\n",
        FormatArg::Csv => {
            let mut out = String::from("n,r1,r2,model,value,exact,vector\n");
            for sys in &systems {
                for p in &sys.pairs {
                    writeln!(
                        out,
                        "{},{},{},{},{},{},{}",
                        sys.n,
                        sys.weight.r1,
                        sys.weight.r2,
                        sys.model.name(),
                        p.value.short_string(),
                        p.exact,
                        csv_quote(&p.vector.to_string())
                    )
                    .expect("string write");
                }
            }
            out
        }
        FormatArg::Table => {
            let mut out = String::new();
            for sys in &systems {
                writeln!(
                    out,
                    "sector weight={} model={} dim={}",
                    sys.weight,
                    sys.model,
                    sys.pairs.len()
                )
                .expect("string write");
                for p in &sys.pairs {
                    writeln!(
                        out,
                        "  mu={:>8}  exact={}  {}",
                        p.value.short_string(),
                        p.exact,
                        p.vector
                    )
                    .expect("string write");
                }
            }
            out
        }
    };
    emit(&args.output, text)?;
    Ok(ExitCode::SUCCESS)
}

fn csv_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

fn load_vectors(
    fixture: &Option<String>,
    vector: &Option<PathBuf>,
    mode: ModeArg,
) -> Result<Vec<StateVector>, CliError> {
    let mut vectors = Vec::new();
    match (fixture, vector) {
        (Some(names), None) => {
            let data = reference_data().map_err(CliError::from)?;
            for name in names.split(',') {
                let name = name.trim();
                let f = data
                    .fixture(name)
                    .ok_or_else(|| CliError::Usage(format!("unknown fixture {name:?}")))?;
                vectors.push(f.vector.clone());
            }
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)?;
            let v: StateVector = serde_json::from_str(&text)
                .map_err(|e| CliError::Usage(format!("bad vector file: {e}")))?;
            vectors.push(v);
        }
        _ => {
            return Err(CliError::Usage(
                "exactly one of --fixture or --vector is required".into(),
            ))
        }
    }
    if mode == ModeArg::Float {
        vectors = vectors.iter().map(StateVector::to_float).collect();
    }
    for v in &vectors {
        check_group_ring_sites(v.sites())?;
    }
    Ok(vectors)
}

fn cmd_stab(args: StabArgs) -> Result<ExitCode, CliError> {
    let vectors = load_vectors(&args.fixture, &args.vector, args.mode)?;
    let [v] = vectors.as_slice() else {
        return Err(CliError::Usage("stab takes a single vector".into()));
    };
    let report = stability_line(v)?;
    let text = match args.output.format {
        FormatArg::Json => serde_json::to_string_pretty(&report).expect("serializable") + "\n",
        FormatArg::Csv => {
            let mut out = String::from("set,perm,value\n");
            for p in report.vector_group.elements() {
                writeln!(out, "a_v,{},", perm_str(p)).expect("string write");
            }
            for p in report.line_group.elements() {
                writeln!(
                    out,
                    "a_line,{},{}",
                    perm_str(p),
                    report.eps[p].short_string()
                )
                .expect("string write");
            }
            out
        }
        FormatArg::Table => {
            let mut out = String::new();
            writeln!(out, "|A_v| = {}", report.vector_group.order()).expect("string write");
            writeln!(out, "|A_line| = {}", report.line_group.order()).expect("string write");
            writeln!(out, "A_v = {}", report.vector_group).expect("string write");
            writeln!(out, "A_line with character:").expect("string write");
            for p in report.line_group.elements() {
                writeln!(out, "  {}  ->  {}", p, report.eps[p].short_string())
                    .expect("string write");
            }
            out
        }
    };
    emit(&args.output, text)?;
    Ok(ExitCode::SUCCESS)
}

fn perm_str(p: &heisenring::perm::Permutation) -> String {
    let images: Vec<String> = p.one_based().iter().map(|v| v.to_string()).collect();
    images.join(" ")
}

fn cmd_class(args: ClassArgs) -> Result<ExitCode, CliError> {
    let vectors = load_vectors(&args.fixture, &args.vector, args.mode)?;
    let report = if vectors.len() == 1 {
        smallest_class_vector(&vectors[0])?
    } else {
        smallest_class_subspace(&vectors)?
    };
    let commutation = if args.commutation {
        let [v] = vectors.as_slice() else {
            return Err(CliError::Usage(
                "--commutation needs a single vector".into(),
            ));
        };
        let group = heisenring::symanalysis::stability_vector(v)?;
        Some(ideal_structure(&[uniform_idempotent(&group)])?)
    } else {
        None
    };
    let text = match args.output.format {
        FormatArg::Json => {
            let mut value = serde_json::to_value(&report).expect("serializable");
            if let Some(c) = &commutation {
                value["commutation_class"] = serde_json::to_value(c).expect("serializable");
            }
            serde_json::to_string_pretty(&value).expect("serializable") + "\n"
        }
        FormatArg::Csv => {
            let mut out = String::from("partition,multiplicity\n");
            for (p, m) in report.structure.iter().rev() {
                writeln!(out, "{p},{m}").expect("string write");
            }
            out
        }
        FormatArg::Table => {
            let mut out = String::new();
            writeln!(out, "R ~ {}", report.structure_string()).expect("string write");
            writeln!(out, "dim R = {}", report.ideal_dimension).expect("string write");
            writeln!(out, "generator terms = {}", report.generator.term_count())
                .expect("string write");
            if let Some(c) = &commutation {
                writeln!(out, "1_A ~ {}", c.structure_string()).expect("string write");
            }
            out
        }
    };
    emit(&args.output, text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_jumps(args: JumpsArgs) -> Result<ExitCode, CliError> {
    check_eigen_sites(args.sites)?;
    check_group_ring_sites(args.sites)?;
    let wt = parse_weight(&args.weight, args.sites)?;
    let mu = Scalar::parse_real(&args.mu)?;
    let model = args.model.to_model();
    let mut basis = heisenring::heisenberg::eigenspace(args.sites, &mu, wt, &model)?;
    if args.mode == ModeArg::Float {
        basis = basis.iter().map(StateVector::to_float).collect();
    }
    let report = jump_analysis(&basis)?;
    let text = match args.output.format {
        FormatArg::Json => serde_json::to_string_pretty(&report).expect("serializable") + "\n",
        FormatArg::Csv => {
            let mut out = String::from("kind,vanishing_m,solution,structure\n");
            writeln!(
                out,
                "generic,,,{}",
                csv_quote(&structure_string(&report.generic))
            )
            .expect("string write");
            for j in &report.jumps {
                let m: Vec<String> = j.vanishing_m.iter().map(|v| v.to_string()).collect();
                let sols: Vec<String> = j
                    .solution_basis
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(Scalar::short_string)
                            .collect::<Vec<_>>()
                            .join(" ")
                    })
                    .collect();
                writeln!(
                    out,
                    "jump,{},{},{}",
                    m.join(";"),
                    csv_quote(&sols.join(" | ")),
                    csv_quote(&structure_string(&j.structure))
                )
                .expect("string write");
            }
            out
        }
        FormatArg::Table => {
            let mut out = String::new();
            writeln!(out, "eigenspace basis (dim {}):", basis.len()).expect("string write");
            for (i, v) in basis.iter().enumerate() {
                writeln!(out, "  b{} = {}", i + 1, v).expect("string write");
            }
            writeln!(out, "generic ~ {}", structure_string(&report.generic)).expect("string write");
            for j in &report.jumps {
                let sols: Vec<String> = j
                    .solution_basis
                    .iter()
                    .map(|row| {
                        let entries: Vec<String> = row.iter().map(Scalar::short_string).collect();
                        format!("({})", entries.join(", "))
                    })
                    .collect();
                writeln!(
                    out,
                    "vanishing m={:?}: span{{{}}} ~ {}",
                    j.vanishing_m,
                    sols.join(", "),
                    structure_string(&j.structure)
                )
                .expect("string write");
            }
            out
        }
    };
    emit(&args.output, text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_idempotents(args: IdempotentsArgs) -> Result<ExitCode, CliError> {
    check_group_ring_sites(args.sites)?;
    let wt = parse_weight(&args.weight, args.sites)?;
    let idempotents = sector_idempotents(wt.r1, wt.r2)?;
    let text = match args.output.format {
        FormatArg::Json => serde_json::to_string_pretty(&idempotents).expect("serializable") + "\n",
        FormatArg::Csv | FormatArg::Table => {
            let mut out = String::new();
            for (m, e) in idempotents.iter().enumerate() {
                writeln!(
                    out,
                    "e_(N-{m},{m}): terms={} idempotent={}",
                    e.term_count(),
                    is_idempotent(e)
                )
                .expect("string write");
            }
            out
        }
    };
    emit(&args.output, text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_reproduce(args: ReproduceArgs) -> Result<ExitCode, CliError> {
    let report = heisenring::reproduce::run()?;
    let text = match args.output.format {
        FormatArg::Json => serde_json::to_string_pretty(&report).expect("serializable") + "\n",
        _ => report.render_text(),
    };
    emit(&args.output, text)?;
    if report.ok() {
        Ok(ExitCode::SUCCESS)
    } else {
        Err(CliError::Failure(
            "recomputed tables differ from the expected values".into(),
        ))
    }
}
