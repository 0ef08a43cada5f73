//! `lefschetz`: analyse `.lie` documents, run the invariant suite, search
//! for instances of a given Lefschetz level.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lefschetz_core::cohomology::WitnessKind;
use lefschetz_core::dsl::DocumentError;
use lefschetz_core::random::Family;
use lefschetz_core::search::{search, SearchConfig};
use lefschetz_core::suite::{run_random_suite, SuiteConfig, SuiteReport};
use lefschetz_core::{analyze, AlgebraDocument, AnalysisReport, AnalyzeOptions, ParseError};

const THREADS_VAR: &str = "LEFSCHETZ_THREADS";

#[derive(Parser)]
#[command(name = "lefschetz", version, about = "Symplectic Hodge theory of Lie algebras, in exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cohomologies, levels and gates of one instance.
    Analyze {
        file: PathBuf,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
        /// Print the witness forms.
        #[arg(long)]
        witnesses: bool,
        /// Also run the invariant suite on the instance.
        #[arg(long)]
        invariants: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Parse and validate only.
    Check { file: PathBuf },
    /// Run the invariant suite on seeded random instances.
    Suite {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        dim: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, value_enum, default_value_t = FamilyArg::Nilpotent)]
        family: FamilyArg,
    },
    /// Random instances whose Lefschetz level is exactly `target-s`.
    Search {
        #[arg(long)]
        dim: usize,
        #[arg(long, allow_negative_numbers = true)]
        target_s: i32,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = FamilyArg::Nilpotent)]
        family: FamilyArg,
        /// Keep only non-abelian nilpotent algebras.
        #[arg(long)]
        non_abelian_nilpotent: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Nilpotent,
    AlmostNilpotent,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Nilpotent => Family::Nilpotent,
            FamilyArg::AlmostNilpotent => Family::AlmostNilpotent,
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}:{source}")]
    Parse { path: String, source: ParseError },
    #[error("{path}: {source}")]
    Invalid { path: String, source: DocumentError },
    #[error("{0}")]
    Usage(String),
    #[error("invariant suite failed")]
    SuiteFailed,
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid { .. } | CliError::Usage(_) => 1,
            CliError::Io { .. } | CliError::Parse { .. } => 2,
            CliError::SuiteFailed => 3,
        }
    }
}

fn load(path: &Path) -> Result<AlgebraDocument, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: shown.clone(),
        source,
    })?;
    AlgebraDocument::parse(&text).map_err(|source| CliError::Parse { path: shown, source })
}

fn invalid(path: &Path) -> impl FnOnce(DocumentError) -> CliError + '_ {
    move |source| CliError::Invalid {
        path: path.display().to_string(),
        source,
    }
}

fn describe(kind: WitnessKind) -> &'static str {
    match kind {
        WitnessKind::CoexactNotDdelta => "in Im δ ∩ ker d, not in Im dδ",
        WitnessKind::ExactNotDdelta => "in Im d ∩ ker δ, not in Im dδ",
        WitnessKind::KernelOfI => "class in ker i",
        WitnessKind::CokernelOfI => "class outside Im i",
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn render_table(r: &AnalysisReport, witnesses: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "dim {}  generators {}", r.dim, r.names.join(" "));
    let _ = writeln!(out);
    let _ = writeln!(out, "{:>3}  {:>6}  {:>6}  {:>6}  {:>8}", "k", "betti", "hr", "hδ", "*∝L^{n−k}");
    for k in 0..=r.dim {
        let star = r
            .star_constants
            .iter()
            .find(|c| c.degree == k)
            .map_or(String::new(), |c| c.constant.clone().unwrap_or_else(|| "-".into()));
        let _ = writeln!(
            out,
            "{:>3}  {:>6}  {:>6}  {:>6}  {:>8}",
            k, r.betti[k], r.hr_dims[k], r.hdelta_dims[k], star
        );
    }
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "levels     lefschetz {}  ddelta {}  i {}",
        r.lefschetz_level, r.ddelta_level, r.i_level
    );
    let g = &r.gates;
    let _ = writeln!(
        out,
        "gates      unimodular {}  poincare-duality {}  nilpotent {}  solvable {}  completely-solvable (heuristic) {}",
        yes_no(g.unimodular),
        yes_no(g.poincare_duality),
        yes_no(g.nilpotent),
        yes_no(g.solvable),
        yes_no(g.completely_solvable_heuristic)
    );
    let c = &r.checks;
    let _ = writeln!(
        out,
        "checks     harmonic-ranges {}  harmonic-level {}  i-low-range {}  dual-ddelta-level {}  duality {}  decomposition {}  i1-onto {}",
        yes_no(c.harmonic_ranges),
        c.harmonic_level,
        yes_no(c.i_low_range),
        c.ddelta_dual_level,
        yes_no(c.duality),
        yes_no(c.harmonic_decomposition),
        yes_no(c.i1_surjective)
    );
    let _ = writeln!(out, "consistent {}", yes_no(r.consistent));
    if witnesses {
        let _ = writeln!(out);
        let _ = writeln!(out, "witnesses");
        if r.witnesses.is_empty() {
            let _ = writeln!(out, "  none");
        }
        for w in &r.witnesses {
            let _ = writeln!(out, "  degree {}: {}  ({})", w.degree, w.form, describe(w.kind));
        }
    }
    if let Some(suite) = &r.invariants {
        let _ = writeln!(out);
        out.push_str(&render_suite(suite));
    }
    out
}

fn render_suite(r: &SuiteReport) -> String {
    let mut out = String::new();
    let width = r.checks.iter().map(|c| c.name.chars().count()).max().unwrap_or(0);
    for c in &r.checks {
        let pad = width - c.name.chars().count();
        let _ = write!(out, "  {}{}  {}", c.name, " ".repeat(pad), if c.passed { "pass" } else { "FAIL" });
        if let Some(x) = &c.counterexample {
            let _ = write!(out, "  counterexample: {x}");
        }
        out.push('\n');
    }
    out
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze {
            file,
            json,
            witnesses,
            invariants,
            seed,
        } => {
            let doc = load(&file)?;
            let report = analyze(&doc, AnalyzeOptions { invariants, seed }).map_err(invalid(&file))?;
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", render_table(&report, witnesses));
            }
            match &report.invariants {
                Some(s) if !s.passed() => Err(CliError::SuiteFailed),
                _ => Ok(()),
            }
        }
        Command::Check { file } => {
            let doc = load(&file)?;
            doc.structure().map_err(invalid(&file))?;
            println!("{}: ok", file.display());
            Ok(())
        }
        Command::Suite {
            seed,
            dim,
            trials,
            family,
        } => {
            check_dim(dim)?;
            let reports = run_random_suite(SuiteConfig {
                seed,
                dim,
                trials,
                family: family.into(),
            });
            let mut failed = 0;
            for (t, r) in reports.iter().enumerate() {
                if let Some(f) = r.first_failure() {
                    failed += 1;
                    println!("trial {t} (seed {}): FAIL {}", seed.wrapping_add(t as u64), f.name);
                    if let Some(x) = &f.counterexample {
                        println!("  counterexample: {x}");
                    }
                    for line in r.document.lines() {
                        println!("  | {line}");
                    }
                }
            }
            println!("{} of {} trials passed", trials - failed, trials);
            if failed == 0 {
                Ok(())
            } else {
                Err(CliError::SuiteFailed)
            }
        }
        Command::Search {
            dim,
            target_s,
            trials,
            seed,
            family,
            non_abelian_nilpotent,
        } => {
            check_dim(dim)?;
            let found = search(SearchConfig {
                dim,
                target_s,
                trials,
                seed,
                family: family.into(),
                non_abelian_nilpotent,
            });
            for doc in &found {
                println!("{doc}");
            }
            println!("# {} distinct instances with lefschetz level {target_s}", found.len());
            Ok(())
        }
    }
}

fn check_dim(dim: usize) -> Result<(), CliError> {
    if dim == 0 || dim % 2 == 1 || dim > lefschetz_core::exterior::MAX_DIM {
        return Err(CliError::Usage(format!(
            "--dim must be a positive even number at most {}",
            lefschetz_core::exterior::MAX_DIM
        )));
    }
    Ok(())
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = value
        .parse()
        .map_err(|_| CliError::Usage(format!("{THREADS_VAR} must be a non-negative integer")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_threads().and_then(|()| run(cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !matches!(e, CliError::SuiteFailed) {
                eprintln!("error: {e}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}
