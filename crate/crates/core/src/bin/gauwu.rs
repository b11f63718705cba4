use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use gauwu_core::commands::{cmd_analyze, cmd_curve, cmd_toeplitz, Family, Outcome};
use gauwu_core::config::{RunConfig, OUTPUT_DIR_ENV};
use gauwu_core::matrix::parse_complex_token;
use gauwu_core::toeplitz::ToeplitzSpec;

#[derive(Parser)]
#[command(name = "gauwu", version, about = "Numerical range, base curve and Gau-Wu number analysis")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Opts {
    /// Number of pencil angles on [0, 2pi).
    #[arg(long, global = true, default_value_t = 720)]
    grid: usize,
    /// Eigenvalue clustering tolerance, relative to ||Re A|| + ||Im A||.
    #[arg(long, global = true, default_value_t = 1e-7)]
    tol_cluster: f64,
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol_orth: f64,
    #[arg(long, global = true, default_value_t = 1e-6)]
    tol_order: f64,
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol_coeff: f64,
    /// Candidate pool size of the witness search.
    #[arg(long, global = true, default_value_t = 256)]
    budget: usize,
    #[arg(long, global = true, env = OUTPUT_DIR_ENV, default_value = ".")]
    out: PathBuf,
    #[arg(long, global = true, default_value_t = 20_160_601)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Toeplitz,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full report: base polynomial, seeds, singularities, Gau-Wu bounds.
    Analyze {
        file: PathBuf,
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
    },
    /// Boundary generating curve table and SVG figure.
    Curve { file: PathBuf },
    /// Verify the tridiagonal Toeplitz construction for T_n(a, b, c).
    Toeplitz {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
        b: Complex64,
        #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
        c: Complex64,
        #[arg(long, value_parser = complex_arg, allow_hyphen_values = true, default_value = "0")]
        a: Complex64,
    },
}

fn complex_arg(s: &str) -> Result<Complex64, String> {
    parse_complex_token(s).ok_or_else(|| format!("not a complex number: {s}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let o = cli.opts;
    let config = RunConfig {
        grid_size: o.grid,
        tol_cluster: o.tol_cluster,
        tol_orth: o.tol_orth,
        tol_order: o.tol_order,
        tol_coeff: o.tol_coeff,
        budget: o.budget,
        output_dir: o.out,
        seed: o.seed,
        ..RunConfig::default()
    };
    let result: gauwu_core::Result<Outcome> = match cli.cmd {
        Cmd::Analyze { file, family } => {
            cmd_analyze(&file, &config, family.map(|FamilyArg::Toeplitz| Family::Toeplitz))
        }
        Cmd::Curve { file } => cmd_curve(&file, &config),
        Cmd::Toeplitz { n, b, c, a } => cmd_toeplitz(&ToeplitzSpec::new(n, a, b, c), &config).map(|(o, _)| o),
    };
    match result {
        Ok(outcome) => {
            println!("{}", outcome.summary);
            for f in &outcome.files {
                println!("wrote {}", f.display());
            }
            if outcome.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
