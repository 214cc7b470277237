//! Command-line front end: validate data, analyze pairs of local actions,
//! print local towers and index bounds, browse the bundled catalog.

mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};

use wangcheck::catalog::{self, CatalogError, EntryKind};
use wangcheck::groupprops::DEFAULT_SECTION_CAP;
use wangcheck::localaction::{
    discreteness_verdict, tower_bounded, DiscretenessVerdict, LocalActionError, Side,
    DEFAULT_DEPTH, DEFAULT_WORD_BOUND,
};
use wangcheck::permcore::{parse_group_file, PermError, DEFAULT_ENUM_CAP};
use wangcheck::pipeline::{
    analyze_datum_side, analyze_group, analyze_pair, wang_index_bound, AnalysisConfig,
    PipelineError, SideAnalysis, SideSource, WangReport,
};
use wangcheck::vhcomplex::{parse_datum, validate, VhDatum, VhError};

#[derive(Parser)]
#[command(name = "wangcheck", version)]
#[command(about = "Check local-action hypotheses for lattices in products of trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Budget {
    /// Depth K of the local towers
    #[arg(long, default_value_t = DEFAULT_DEPTH)]
    depth: usize,
    /// Largest group order that may be enumerated element by element
    #[arg(long, default_value_t = DEFAULT_ENUM_CAP)]
    enum_cap: u64,
    /// Largest |S| for the exact section test
    #[arg(long, default_value_t = DEFAULT_SECTION_CAP)]
    section_cap: u64,
    /// Reject self-paired squares
    #[arg(long)]
    strict: bool,
}

impl Budget {
    fn config(self) -> AnalysisConfig {
        AnalysisConfig {
            depth: self.depth,
            enum_cap: self.enum_cap,
            section_cap: self.section_cap,
            strict: self.strict,
            word_bound: DEFAULT_WORD_BOUND,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    #[value(alias = "h")]
    Horizontal,
    #[value(alias = "v")]
    Vertical,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Horizontal => Side::Horizontal,
            SideArg::Vertical => Side::Vertical,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Validate a datum file
    Validate {
        path: PathBuf,
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        json: bool,
    },
    /// Analyze a datum, a pair of raw groups, or a catalog entry
    Analyze {
        /// Datum file
        path: Option<PathBuf>,
        /// Two raw group files, one per tree
        #[arg(long, num_args = 2, value_names = ["G1", "G2"])]
        pair: Option<Vec<PathBuf>>,
        /// Catalog entry (datum or raw group pair)
        #[arg(long)]
        catalog: Option<String>,
        #[command(flatten)]
        budget: Budget,
        /// Assert constant type for raw group input
        #[arg(long, default_value_t = true, action = ArgAction::Set)]
        constant_type: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print the local tower of one side of a datum
    Tower {
        path: Option<PathBuf>,
        #[arg(long)]
        catalog: Option<String>,
        #[arg(long, value_enum, default_value = "horizontal")]
        side: SideArg,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        json: bool,
    },
    /// Index bound for a discrete overgroup from a covolume ratio
    Bound {
        /// Integer, decimal or fraction, e.g. 3, 6.5 or 13/2
        #[arg(long)]
        ratio: String,
        #[arg(long)]
        json: bool,
    },
    /// List or show bundled examples
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List {
        #[arg(long)]
        json: bool,
    },
    Show {
        name: String,
        #[arg(long)]
        json: bool,
    },
}

/// A failure with its exit code: 1 invalid datum, 2 usage or parse error,
/// 3 resource cap exceeded, 4 internal invariant violated.
struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
    detail: Option<serde_json::Value>,
    /// Extra lines for human-readable output.
    lines: Vec<String>,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            kind: "usage",
            message: message.into(),
            detail: None,
            lines: Vec::new(),
        }
    }
}

impl From<VhError> for Failure {
    fn from(e: VhError) -> Self {
        match e {
            VhError::InvalidDatum(report) => Failure {
                code: 1,
                kind: "invalid_datum",
                message: VhError::InvalidDatum(report.clone()).to_string(),
                detail: serde_json::to_value(&report).ok(),
                lines: report.violations.iter().map(ToString::to_string).collect(),
            },
            other => Failure {
                code: 2,
                kind: "parse",
                message: other.to_string(),
                detail: None,
                lines: Vec::new(),
            },
        }
    }
}

impl From<PermError> for Failure {
    fn from(e: PermError) -> Self {
        let code = if matches!(e, PermError::TooLarge { .. }) {
            3
        } else {
            2
        };
        Failure {
            code,
            kind: if code == 3 { "cap_exceeded" } else { "parse" },
            message: e.to_string(),
            detail: None,
            lines: Vec::new(),
        }
    }
}

impl From<PipelineError> for Failure {
    fn from(e: PipelineError) -> Self {
        if e.is_resource_cap() {
            return Failure {
                code: 3,
                kind: "cap_exceeded",
                message: e.to_string(),
                detail: None,
                lines: Vec::new(),
            };
        }
        match e {
            PipelineError::Datum(v) => v.into(),
            PipelineError::LocalAction(LocalActionError::Datum(v)) => v.into(),
            PipelineError::InvariantViolation(_) => Failure {
                code: 4,
                kind: "invariant_violation",
                message: e.to_string(),
                detail: None,
                lines: Vec::new(),
            },
            PipelineError::LocalAction(LocalActionError::PersistenceViolated { .. })
            | PipelineError::LocalAction(LocalActionError::Incompatible { .. })
            | PipelineError::LocalAction(LocalActionError::NotReduced { .. }) => Failure {
                code: 4,
                kind: "invariant_violation",
                message: e.to_string(),
                detail: None,
                lines: Vec::new(),
            },
            other => Failure {
                code: 2,
                kind: "usage",
                message: other.to_string(),
                detail: None,
                lines: Vec::new(),
            },
        }
    }
}

impl From<LocalActionError> for Failure {
    fn from(e: LocalActionError) -> Self {
        PipelineError::from(e).into()
    }
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::Datum(v) => v.into(),
            CatalogError::Perm(p) => p.into(),
            other => Failure::usage(other.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        kind: "io",
        message: format!("cannot read {}: {e}", path.display()),
        detail: None,
        lines: Vec::new(),
    })
}

fn emit<T: serde::Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("reports serialize")
    );
}

fn load_datum(path: Option<&Path>, catalog: Option<&str>) -> Result<VhDatum, Failure> {
    match (path, catalog) {
        (Some(p), None) => Ok(parse_datum(&read(p)?)?),
        (None, Some(name)) => Ok(catalog::load_datum(name)?),
        _ => Err(Failure::usage(
            "give exactly one of a datum path or --catalog",
        )),
    }
}

fn analyze_datum(d: &VhDatum, cfg: &AnalysisConfig) -> Result<WangReport, Failure> {
    let (h, v) = std::thread::scope(|scope| {
        let h = scope.spawn(|| analyze_datum_side(d, Side::Horizontal, cfg));
        let v = analyze_datum_side(d, Side::Vertical, cfg);
        (h.join().expect("analysis thread"), v)
    });
    Ok(analyze_pair(&h?, &v?, cfg)?)
}

fn raw_side(
    text: &str,
    constant_type: bool,
    cfg: &AnalysisConfig,
) -> Result<SideAnalysis, Failure> {
    let (file, group) = parse_group_file(text)?;
    Ok(analyze_group(
        group,
        SideSource::RawGroup { name: file.name },
        DiscretenessVerdict::NotApplicable,
        None,
        constant_type,
        cfg,
    )?)
}

fn analyze_raw_pair(
    texts: [&str; 2],
    constant_type: bool,
    cfg: &AnalysisConfig,
) -> Result<WangReport, Failure> {
    let a = raw_side(texts[0], constant_type, cfg)?;
    let b = raw_side(texts[1], constant_type, cfg)?;
    Ok(analyze_pair(&a, &b, cfg)?)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Validate { path, strict, json } => {
            let d = parse_datum(&read(&path)?)?;
            let report = validate(&d, strict);
            if json {
                emit(&report);
            } else {
                print!("{}", render::validation(&d, &report));
            }
            Ok(if report.ok() { 0 } else { 1 })
        }
        Command::Analyze {
            path,
            pair,
            catalog: entry,
            budget,
            constant_type,
            json,
        } => {
            let cfg = budget.config();
            let given = [path.is_some(), pair.is_some(), entry.is_some()];
            if given.iter().filter(|&&g| g).count() != 1 {
                return Err(Failure::usage(
                    "give exactly one of a datum path, --pair G1 G2, or --catalog NAME",
                ));
            }
            let report = if let Some(p) = path {
                analyze_datum(&parse_datum(&read(&p)?)?, &cfg)?
            } else if let Some(files) = pair {
                let (a, b) = (read(&files[0])?, read(&files[1])?);
                analyze_raw_pair([&a, &b], constant_type, &cfg)?
            } else {
                let name = entry.expect("checked above");
                let e = catalog::find(&name)?;
                match e.kind {
                    EntryKind::Datum => analyze_datum(&catalog::load_datum(&name)?, &cfg)?,
                    EntryKind::RawGroupPair => {
                        let texts: Vec<&str> = e
                            .members
                            .iter()
                            .map(|m| {
                                catalog::find(m)?
                                    .payload_text()
                                    .ok_or_else(|| CatalogError::MissingFile(m.clone()))
                            })
                            .collect::<Result<_, _>>()?;
                        analyze_raw_pair([texts[0], texts[1]], constant_type, &cfg)?
                    }
                    EntryKind::RawGroup => {
                        return Err(Failure::usage(format!(
                            "{name} is a single raw group; analyze it with --pair"
                        )))
                    }
                }
            };
            if json {
                emit(&report);
            } else {
                print!("{}", render::wang_report(&report));
            }
            Ok(0)
        }
        Command::Tower {
            path,
            catalog: entry,
            side,
            depth,
            strict,
            json,
        } => {
            let d = load_datum(path.as_deref(), entry.as_deref())?;
            let report = validate(&d, strict);
            if !report.ok() {
                return Err(VhError::InvalidDatum(report).into());
            }
            let t = tower_bounded(&d, side.into(), depth, DEFAULT_WORD_BOUND)?;
            let verdict = discreteness_verdict(&t)?;
            let report = t.report()?;
            if json {
                emit(&report);
            } else {
                print!("{}", render::tower(&report, &verdict));
            }
            Ok(0)
        }
        Command::Bound { ratio, json } => {
            let b = wang_index_bound(&ratio)?;
            if json {
                emit(&b);
            } else {
                println!("N = {}", b.n);
                println!("[Λ : Γ] ≤ (N − 1)! = {}", b.index_bound);
            }
            Ok(0)
        }
        Command::Catalog { action } => {
            match action {
                CatalogAction::List { json } => {
                    if json {
                        emit(&catalog::entries());
                    } else {
                        print!("{}", render::catalog_list(catalog::entries()));
                    }
                }
                CatalogAction::Show { name, json } => {
                    let e = catalog::find(&name)?;
                    if json {
                        emit(e);
                    } else {
                        print!("{}", render::catalog_entry(e));
                    }
                }
            }
            Ok(0)
        }
    }
}

fn json_requested(cli: &Cli) -> bool {
    match &cli.command {
        Command::Validate { json, .. }
        | Command::Analyze { json, .. }
        | Command::Tower { json, .. }
        | Command::Bound { json, .. } => *json,
        Command::Catalog { action } => match action {
            CatalogAction::List { json } | CatalogAction::Show { json, .. } => *json,
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = json_requested(&cli);
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            if json {
                let value = serde_json::json!({
                    "error": f.kind,
                    "message": f.message,
                    "detail": f.detail,
                });
                eprintln!(
                    "{}",
                    serde_json::to_string_pretty(&value).expect("serializes")
                );
            } else {
                eprintln!("error: {}", f.message);
                for line in &f.lines {
                    eprintln!("  {line}");
                }
            }
            ExitCode::from(f.code)
        }
    }
}
