use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use bumpft::harness::emit::{self, Destination, Format};
use bumpft::harness::fit::{self, Branch};
use bumpft::harness::sweep::{self, Spacing};
use bumpft::numfmt::sci17;
use bumpft::oscquad::{self, QuadOptions, QuadratureResult, DEFAULT_TOL};
use bumpft::{saddle, BumpParams, Error, Execution};

#[derive(Parser, Debug)]
#[command(
    name = "bumpft",
    version,
    about = "Fourier transforms of C-infinity bump functions: saddle-point asymptotics vs quadrature"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug, Clone, Copy)]
struct ParamArgs {
    /// Singularity order, must exceed 1
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    alpha: f64,
    /// Strength, must be positive
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    beta: f64,
}

impl ParamArgs {
    fn params(self) -> Result<BumpParams, Error> {
        BumpParams::new(self.alpha, self.beta)
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    Numeric,
    Asymptotic,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SpacingArg {
    Linear,
    Log,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum BranchArg {
    Numeric,
    Asymptotic,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate the bump f(x)
    Eval {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
    },
    /// Fourier transform F(k) by quadrature, saddle-point asymptotics, or both
    Ft {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, allow_negative_numbers = true)]
        k: f64,
        #[arg(long, value_enum, default_value = "both")]
        method: Method,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Sweep k and compare quadrature with the asymptotic formula
    Sweep {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 0.5)]
        kmin: f64,
        #[arg(long, default_value_t = 150.0)]
        kmax: f64,
        #[arg(long, default_value_t = 200)]
        points: usize,
        #[arg(long, value_enum, default_value = "linear")]
        spacing: SpacingArg,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
        /// Output file (stdout if omitted)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Evaluate rows on one thread
        #[arg(long)]
        sequential: bool,
    },
    /// Fit the envelope decay law to a sweep file (CSV or JSON)
    Fit {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long = "use", value_enum, default_value = "numeric")]
        branch: BranchArg,
        /// Also fit the growth exponent of the exponential factor
        #[arg(long)]
        free_growth: bool,
    },
    /// Normalization integral of f over [0, 1]
    Normalize {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Saddle location, exponent, curvature and amplitude coefficient as JSON
    Saddle {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, allow_negative_numbers = true)]
        k: f64,
    },
}

#[derive(Serialize)]
struct FtOutput {
    #[serde(serialize_with = "bumpft::numfmt::serialize_sci17")]
    k: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    numeric: Option<QuadratureResult>,
    #[serde(
        skip_serializing_if = "Option::is_none",
        serialize_with = "serialize_opt_sci17"
    )]
    asymptotic: Option<f64>,
}

fn serialize_opt_sci17<S: serde::Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => bumpft::numfmt::serialize_sci17(v, s),
        None => s.serialize_none(),
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    let stdout = Destination::Stdout;
    match cli.command {
        Command::Eval { params, x } => {
            println!("{}", sci17(bumpft::eval_bump(params.params()?, x)));
        }
        Command::Ft {
            params,
            k,
            method,
            tol,
        } => {
            let p = params.params()?;
            let numeric = match method {
                Method::Asymptotic => None,
                _ => Some(oscquad::fourier_transform_numeric(p, k, tol)?),
            };
            let asymptotic = match method {
                Method::Numeric => None,
                _ => Some(saddle::asymptotic_ft(p, k)?),
            };
            emit::emit_json(
                &FtOutput {
                    k,
                    numeric,
                    asymptotic,
                },
                &stdout,
            )?;
            if let Some(r) = numeric.filter(|r| !r.converged) {
                return Err(Error::NonConvergence {
                    k,
                    abs_error: r.abs_error,
                    tol,
                    n_panels: r.n_panels,
                });
            }
        }
        Command::Sweep {
            params,
            kmin,
            kmax,
            points,
            spacing,
            tol,
            format,
            out,
            sequential,
        } => {
            let spacing = match spacing {
                SpacingArg::Linear => Spacing::Linear,
                SpacingArg::Log => Spacing::Log,
            };
            let grid = sweep::k_grid(kmin, kmax, points, spacing)?;
            let exec = if sequential {
                Execution::Sequential
            } else {
                Execution::Parallel
            };
            let records =
                sweep::run_sweep_with(params.params()?, &grid, &QuadOptions::with_tol(tol), exec)?;
            let format = match format {
                FormatArg::Csv => Format::Csv,
                FormatArg::Json => Format::Json,
            };
            let dest = out.map_or(Destination::Stdout, Destination::File);
            emit::emit_records(&records, format, &dest)?;
        }
        Command::Fit {
            input,
            branch,
            free_growth,
        } => {
            let records = emit::load_records(&input)?;
            let branch = match branch {
                BranchArg::Numeric => Branch::Numeric,
                BranchArg::Asymptotic => Branch::Asymptotic,
            };
            if free_growth {
                emit::emit_json(&fit::fit_growth_exponent(&records, branch)?, &stdout)?;
            } else {
                emit::emit_json(&fit::fit_decay(&records, branch)?, &stdout)?;
            }
        }
        Command::Normalize { params, tol } => {
            println!("{}", sci17(bumpft::normalization(params.params()?, tol)?));
        }
        Command::Saddle { params, k } => {
            emit::emit_json(&saddle::saddle_data(params.params()?, k)?, &stdout)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
