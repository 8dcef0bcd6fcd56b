use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qselect::cli::{self, CliError, CliResult, Mode};
use qselect::evaluation::DEFAULT_DECISION_TOL;
use qselect::scenarios::{AxisSpec, MACHINA_DEFAULT_A};

#[derive(Parser)]
#[command(
    name = "qselect",
    version,
    about = "Quantum-like selection criteria, weighting functions and paradox phase diagrams"
)]
struct Cli {
    /// Write output to this file instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Classical,
    Nonclassical,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate the weighting function w_xi(x) on [0, 1]
    Pwf {
        #[arg(long, default_value_t = std::f64::consts::SQRT_2)]
        xi: f64,
        #[arg(long, default_value_t = 101)]
        steps: usize,
    },
    /// Compare two lotteries given as JSON files
    Compare {
        #[arg(long = "lottery-a")]
        lottery_a: PathBuf,
        #[arg(long = "lottery-b")]
        lottery_b: PathBuf,
        /// cos(Theta) values per event pair, 1-based
        #[arg(long)]
        theta: PathBuf,
        #[arg(long, value_enum, default_value = "nonclassical")]
        mode: ModeArg,
        #[arg(long, default_value_t = DEFAULT_DECISION_TOL)]
        tol: f64,
    },
    /// Ellsberg alpha-lambda phase diagram as CSV
    Ellsberg {
        /// lo:hi:steps
        #[arg(long, default_value = "0:1:101", allow_hyphen_values = true)]
        alpha: String,
        /// lo:hi:steps
        #[arg(long, default_value = "-1:1:101", allow_hyphen_values = true)]
        lambda: String,
        #[arg(long = "delta-u", default_value_t = 1.0)]
        delta_u: f64,
        #[arg(long, default_value_t = DEFAULT_DECISION_TOL)]
        tol: f64,
    },
    /// Machina alpha-lambda phase diagram (beta = alpha) as CSV
    Machina {
        /// lo:hi:steps
        #[arg(long, default_value = "0:1:101", allow_hyphen_values = true)]
        alpha: String,
        /// lo:hi:steps
        #[arg(long, default_value = "-1:1:101", allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value_t = MACHINA_DEFAULT_A)]
        a: f64,
        #[arg(long, default_value_t = DEFAULT_DECISION_TOL)]
        tol: f64,
    },
    /// Cash equivalent u_CE / u_y over (p, lambda) as CSV
    Ce {
        /// lo:hi:steps
        #[arg(long, default_value = "0.01:1:100", allow_hyphen_values = true)]
        p: String,
        /// lo:hi:steps
        #[arg(long, default_value = "0:0.99:100", allow_hyphen_values = true)]
        lambda: String,
        #[arg(long = "u-y", default_value_t = 1.0)]
        u_y: f64,
    },
}

fn run(args: Cli) -> CliResult<()> {
    let sink: Box<dyn Write> = match &args.out {
        Some(path) => Box::new(File::create(path).map_err(|source| CliError::Read {
            path: path.display().to_string(),
            source,
        })?),
        None => Box::new(io::stdout().lock()),
    };
    let mut out = BufWriter::new(sink);
    match args.command {
        Command::Pwf { xi, steps } => cli::pwf_csv(xi, steps, &mut out)?,
        Command::Compare {
            lottery_a,
            lottery_b,
            theta,
            mode,
            tol,
        } => {
            let a = cli::load_lottery(&lottery_a)?;
            let b = cli::load_lottery(&lottery_b)?;
            let theta = cli::load_theta(&theta)?;
            let mode = match mode {
                ModeArg::Classical => Mode::Classical,
                ModeArg::Nonclassical => Mode::Nonclassical,
            };
            let report = cli::compare(&a, &b, &theta, mode, tol)?;
            cli::write_report(&report, &mut out)?;
        }
        Command::Ellsberg {
            alpha,
            lambda,
            delta_u,
            tol,
        } => {
            let alpha = AxisSpec::parse("alpha", &alpha)?;
            let lambda = AxisSpec::parse("lambda", &lambda)?;
            cli::ellsberg_csv(&alpha, &lambda, delta_u, tol, &mut out)?;
        }
        Command::Machina { alpha, lambda, a, tol } => {
            let alpha = AxisSpec::parse("alpha", &alpha)?;
            let lambda = AxisSpec::parse("lambda", &lambda)?;
            cli::machina_csv(&alpha, &lambda, a, tol, &mut out)?;
        }
        Command::Ce { p, lambda, u_y } => {
            let p = AxisSpec::parse("p", &p)?;
            let lambda = AxisSpec::parse("lambda", &lambda)?;
            cli::ce_csv(&p, &lambda, u_y, &mut out)?;
        }
    }
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qselect: {e}");
            ExitCode::FAILURE
        }
    }
}
