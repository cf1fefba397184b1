use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use gysinkit::dual::GridName;
use gysinkit::ktheory::KMode;
use gysinkit::report::{self, Report};
use gysinkit::{Error, Result};

/// Equivariant Euler characteristics, boundary crossed-product K-theory and
/// the dual-geometry verifier.
#[derive(Parser)]
#[command(name = "gysinkit", version, about)]
struct Cli {
    /// Emit machine-readable JSON instead of the prose report.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ComplexArg {
    /// JSON complex file: {"maximal_simplices": [[..]], "colouring": {..}?}
    #[arg(long)]
    complex: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Euler characteristic of a complex.
    Chi(ComplexArg),
    /// Integral homology and cohomology.
    Homology(ComplexArg),
    /// K-theory and K-homology of a complex.
    Ktheory {
        #[command(flatten)]
        complex: ComplexArg,
        /// strict (dim <= 2) or assume-collapse (allows dim 3)
        #[arg(long, default_value = "strict")]
        mode: String,
    },
    /// Equivariant Euler decomposition from an explicit action or orbit data.
    EulerComb {
        #[arg(long)]
        complex: Option<PathBuf>,
        /// JSON action file (requires --complex)
        #[arg(long)]
        action: Option<PathBuf>,
        /// JSON orbit-data file (alternative to --complex/--action)
        #[arg(long)]
        orbits: Option<PathBuf>,
    },
    /// Boundary crossed-product K-theory from a quotient complex.
    Gysin {
        /// JSON complex file for the quotient
        #[arg(long)]
        quotient: PathBuf,
        #[arg(long, conflicts_with = "noncompact")]
        compact: bool,
        #[arg(long)]
        noncompact: bool,
        /// Force the split case (a boundary fixed point kills the
        /// connecting map)
        #[arg(long)]
        fixed_boundary_point: bool,
        #[arg(long, default_value = "strict")]
        mode: String,
    },
    /// Boundary K-theory of the free product Z/m * Z/n.
    FreeProduct { m: u64, n: u64 },
    /// Run the dual-geometry verification suite.
    VerifyDual {
        /// Ambient simplex dimension
        #[arg(long)]
        n: usize,
        /// Collapse level L as a rational like 1/6 (default 1/(2(n+1)))
        #[arg(long = "L")]
        l: Option<String>,
        /// Expansion factor lambda as a rational (default 4)
        #[arg(long)]
        lambda: Option<String>,
        /// Extra complex to include in the simplicial rows
        #[arg(long)]
        complex: Option<PathBuf>,
    },
    /// Emit a builder family as JSON.
    Make {
        family: String,
        params: Vec<String>,
    },
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| {
        Error::MalformedInput(format!("cannot read {}: {e}", path.display()))
    })
}

fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Chi(arg) => report::run_chi(&read(&arg.complex)?),
        Command::Homology(arg) => report::run_homology(&read(&arg.complex)?),
        Command::Ktheory { complex, mode } => {
            report::run_ktheory(&read(&complex.complex)?, mode.parse::<KMode>()?)
        }
        Command::EulerComb { complex, action, orbits } => {
            let complex = complex.as_ref().map(read).transpose()?;
            let action = action.as_ref().map(read).transpose()?;
            let orbits = orbits.as_ref().map(read).transpose()?;
            report::run_euler_comb(complex.as_deref(), action.as_deref(), orbits.as_deref())
        }
        Command::Gysin { quotient, compact, noncompact, fixed_boundary_point, mode } => {
            if !compact && !noncompact {
                return Err(Error::MalformedInput(
                    "pass --compact or --noncompact".into(),
                ));
            }
            report::run_gysin(
                &read(quotient)?,
                *compact,
                *fixed_boundary_point,
                mode.parse::<KMode>()?,
            )
        }
        Command::FreeProduct { m, n } => report::run_free_product(*m, *n),
        Command::VerifyDual { n, l, lambda, complex } => {
            let complex = complex.as_ref().map(read).transpose()?;
            report::run_verify_dual(
                *n,
                l.as_deref(),
                lambda.as_deref(),
                complex.as_deref(),
                GridName::from_env()?,
            )
        }
        Command::Make { family, params } => report::run_make(family, params),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let is_make = matches!(cli.command, Command::Make { .. });
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", report.render_json());
            } else if is_make {
                // `make` emits the raw JSON object so it can be piped
                // straight into the other subcommands
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("object serialises")
                );
            } else {
                print!("{}", report.render_human());
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
