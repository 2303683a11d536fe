//! Command-line front end for the `hopf-cyclic` verification suites.

use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
pub mod inputs;
pub mod report;

pub use report::{exit_code, RunReport};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(hopf_cyclic::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "hopf-cyclic", version, about = "Exact verification of Hopf-equivariant cyclic cohomology identities")]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized check subsets.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Stop at the first failing check; later checks are reported as skipped.
    #[arg(long, global = true)]
    pub fail_fast: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run an identity suite.
    #[command(subcommand)]
    Verify(Verify),
    /// The quantum monopole idempotent over the Podleś sphere.
    Monopole {
        /// Include every Δ² summand in the result.
        #[arg(long)]
        expansions: bool,
    },
    /// Pair an invariant idempotent with an equivariant cyclic cocycle.
    Pairing {
        #[arg(long)]
        idempotent: String,
        #[arg(long)]
        cocycle: String,
        /// Treat the cocycle file as `(f₀, f₂, …)` in the (b, B) bicomplex.
        #[arg(long)]
        periodic: bool,
    },
    /// Hochschild and cyclic cohomology dimensions.
    Cohomology {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, default_value_t = 2)]
        n_max: usize,
        /// Also emit a basis of cyclic cocycles in each degree.
        #[arg(long)]
        cocycles: bool,
    },
    /// Print a catalog entry.
    Export {
        name: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    #[command(subcommand)]
    Catalog(CatalogCmd),
}

#[derive(Subcommand, Debug)]
pub enum Verify {
    /// Hopf axioms for a catalog name or a JSON file.
    Hopf { target: String },
    /// Module-algebra laws; every catalog structure when no algebra is named.
    ModuleAlgebra {
        #[command(flatten)]
        pair: Pair,
    },
    /// Yetter-Drinfeld laws in both forms, plus seeded perturbations.
    Yd {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, default_value_t = 50)]
        perturbations: usize,
    },
    /// Cocyclic module identities of the equivariant complex.
    Cocyclic {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, default_value_t = 3)]
        n_max: usize,
    },
    /// φ against the crossed product module, and φ∘ψ = ψ∘φ = id.
    PhiPsi {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, default_value_t = 2)]
        n_max: usize,
    },
    /// Cylindricity and commutation of the bi-paracocyclic module.
    Cylindrical {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, default_value_t = 2)]
        p_max: usize,
        #[arg(long, default_value_t = 2)]
        q_max: usize,
    },
    /// The generalized trace map Ψ and its simplified form.
    TraceMap {
        #[command(flatten)]
        pair: Pair,
        /// Representation by catalog name, `trivial`, or JSON file.
        #[arg(long)]
        rep: Option<String>,
        #[arg(long, default_value_t = 2)]
        n_max: usize,
    },
    /// Homotopy formulas for an inner automorphism and its derivation.
    Homotopies {
        #[command(flatten)]
        pair: Pair,
        /// Invariant invertible element as `label=coef,…`.
        #[arg(long)]
        element: Option<String>,
        #[arg(long, default_value_t = 2)]
        n_max: usize,
    },
}

#[derive(Args, Debug, Clone, Default)]
pub struct Pair {
    /// Hopf algebra by catalog name.
    #[arg(long)]
    pub hopf: Option<String>,
    /// Module algebra by catalog name or JSON file.
    #[arg(long)]
    pub algebra: Option<String>,
}

impl Pair {
    pub fn is_empty(&self) -> bool {
        self.hopf.is_none() && self.algebra.is_none()
    }
}

#[derive(Subcommand, Debug)]
pub enum CatalogCmd {
    /// Every built-in structure with its verification verdict.
    List,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
}

/// What a run prints and how it exits.
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses `argv` and runs it.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Outcome {
    let start = Instant::now();
    match commands::dispatch(cli) {
        Ok(commands::Output::Raw(s)) => Outcome { stdout: s, stderr: String::new(), code: 0 },
        Ok(commands::Output::Report(mut r)) => {
            r.finish(cli.fail_fast);
            r.timing_ms = start.elapsed().as_millis() as u64;
            let stdout = if cli.json { r.to_json() + "\n" } else { r.to_text() };
            Outcome { stdout, stderr: String::new(), code: r.exit_code() }
        }
        Err(CliError::Usage(m)) => Outcome { stdout: String::new(), stderr: format!("error: {m}\n"), code: 2 },
        Err(CliError::Core(e)) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: 2 },
    }
}
