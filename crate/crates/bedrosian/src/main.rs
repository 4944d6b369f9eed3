use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use bedrosian::cli::{self, Invocation, Overrides};

/// Decide, characterize, and numerically verify factorization identities
/// T(fg) = f(Tg) for multiplier operators on discretized frequency grids.
#[derive(Parser)]
#[command(name = "bedrosian", version, about)]
struct CliArgs {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ConfigArgs {
    /// JSON analysis configuration.
    #[arg(long)]
    config: PathBuf,
    /// Write the JSON report here instead of stdout (verify also writes a
    /// sibling .csv trial table).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Override the config seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Override the config trial count.
    #[arg(long)]
    trials: Option<u32>,
    /// Override both tolerances.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
struct RasterArgs {
    #[command(flatten)]
    common: ConfigArgs,
    /// Directory for raster dumps of the labeled structures (PGM for 2-D,
    /// central slices for 3-D, JSON index lists in every dimension).
    #[arg(long)]
    raster: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose a support-set pair into characteristic sets and classes.
    Analyze(RasterArgs),
    /// Decide whether a nontrivial operator satisfies the identity.
    Decide(RasterArgs),
    /// Test a multiplier for constancy on every merged class.
    Check(RasterArgs),
    /// Measure the residual of the identity on seeded band-limited signals.
    Verify(ConfigArgs),
    /// Run the support-set criterion for the partial Hilbert transforms.
    Hsupport(ConfigArgs),
    /// Run the built-in example catalog against its expected verdicts.
    Examples {
        /// One scenario id (4.1i, 4.1ii, 4.1iii, 4.2, 4.3, 4.4i, 4.4ii,
        /// 4.5, 4.6) or `all`.
        #[arg(default_value = "all")]
        selector: String,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    let args = CliArgs::parse();
    let (invocation, overrides, out) = match args.command {
        Command::Analyze(a) => (
            Invocation::Analyze {
                config: a.common.config,
                raster: a.raster,
            },
            Overrides {
                seed: a.common.seed,
                trials: a.common.trials,
                tol: a.common.tol,
            },
            a.common.out,
        ),
        Command::Decide(a) => (
            Invocation::Decide {
                config: a.common.config,
                raster: a.raster,
            },
            Overrides {
                seed: a.common.seed,
                trials: a.common.trials,
                tol: a.common.tol,
            },
            a.common.out,
        ),
        Command::Check(a) => (
            Invocation::Check {
                config: a.common.config,
                raster: a.raster,
            },
            Overrides {
                seed: a.common.seed,
                trials: a.common.trials,
                tol: a.common.tol,
            },
            a.common.out,
        ),
        Command::Verify(a) => (
            Invocation::Verify { config: a.config },
            Overrides {
                seed: a.seed,
                trials: a.trials,
                tol: a.tol,
            },
            a.out,
        ),
        Command::Hsupport(a) => (
            Invocation::Hsupport { config: a.config },
            Overrides {
                seed: a.seed,
                trials: a.trials,
                tol: a.tol,
            },
            a.out,
        ),
        Command::Examples { selector, out } => (
            Invocation::Examples { selector },
            Overrides::default(),
            out,
        ),
    };
    std::process::exit(cli::run(invocation, overrides, out.as_deref()));
}
