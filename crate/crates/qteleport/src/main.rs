use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use qteleport::analysis::{closed_form_success, monte_carlo, report, sweep};
use qteleport::measure::RngSeed;
use qteleport::output::{
    render_mc_csv, render_mc_json, render_report_csv, render_report_json, render_run_csv,
    render_run_json, render_sweep_csv, render_sweep_json,
};
use qteleport::protocol::{run_scheme1_sampled, run_scheme2_sampled, ChannelParams, InputParams};

#[derive(Parser)]
#[command(
    name = "qteleport",
    version,
    about = "Probabilistic teleportation of a two-particle entangled state: exact enumeration, sampling, sweeps, and Monte-Carlo checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct CommonOutput {
    /// Output format
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Output file (default: standard output)
    #[arg(long)]
    output: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct ParamArgs {
    /// Channel parameter alpha squared; beta squared is 1 - alpha squared
    #[arg(long)]
    alpha_sq: f64,
    /// Real part of input coefficient a
    #[arg(long, default_value_t = 1.0)]
    a_re: f64,
    /// Imaginary part of input coefficient a
    #[arg(long, default_value_t = 0.0)]
    a_im: f64,
    /// Real part of input coefficient b
    #[arg(long, default_value_t = 0.0)]
    b_re: f64,
    /// Imaginary part of input coefficient b
    #[arg(long, default_value_t = 0.0)]
    b_im: f64,
}

impl ParamArgs {
    fn build(&self) -> qteleport::Result<(ChannelParams, InputParams)> {
        let ch = ChannelParams::from_alpha_sq(self.alpha_sq)?;
        let inp = InputParams::new(
            Complex64::new(self.a_re, self.a_im),
            Complex64::new(self.b_re, self.b_im),
        )?;
        Ok((ch, inp))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Play one sampled protocol trajectory
    Run {
        /// Scheme to run (1 or 2)
        #[arg(long)]
        scheme: u8,
        #[command(flatten)]
        params: ParamArgs,
        /// RNG seed
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: CommonOutput,
    },
    /// Enumerate the full branch tree with exact probabilities
    Enumerate {
        /// Scheme to enumerate (1 or 2)
        #[arg(long)]
        scheme: u8,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        out: CommonOutput,
    },
    /// Compare both schemes' success probabilities over an alpha-sq grid
    Sweep {
        #[arg(long, default_value_t = 0.5)]
        grid_start: f64,
        #[arg(long, default_value_t = 1.0)]
        grid_end: f64,
        #[arg(long, default_value_t = 0.05)]
        grid_step: f64,
        #[arg(long, default_value_t = 1.0)]
        a_re: f64,
        #[arg(long, default_value_t = 0.0)]
        a_im: f64,
        #[arg(long, default_value_t = 0.0)]
        b_re: f64,
        #[arg(long, default_value_t = 0.0)]
        b_im: f64,
        #[command(flatten)]
        out: CommonOutput,
    },
    /// Monte-Carlo estimate of the success probability
    Mc {
        /// Scheme to sample (1 or 2)
        #[arg(long)]
        scheme: u8,
        #[command(flatten)]
        params: ParamArgs,
        /// Number of trials
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        /// RNG seed
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: CommonOutput,
    },
}

fn emit(out: &CommonOutput, text: String) -> std::io::Result<()> {
    match &out.output {
        Some(path) => fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}

const EXIT_INTERNAL: u8 = 1;
const EXIT_VALIDATION: u8 = 2;

fn validation_error(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(EXIT_VALIDATION)
}

fn internal_error(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("internal error: {e}");
    ExitCode::from(EXIT_INTERNAL)
}

fn check_scheme(scheme: u8) -> qteleport::Result<()> {
    if scheme == 1 || scheme == 2 {
        Ok(())
    } else {
        Err(qteleport::Error::InvalidParameter(format!(
            "scheme must be 1 or 2, got {scheme}"
        )))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Run {
            scheme,
            params,
            seed,
            out,
        } => {
            if let Err(e) = check_scheme(scheme) {
                return validation_error(e);
            }
            let (ch, inp) = match params.build() {
                Ok(v) => v,
                Err(e) => return validation_error(e),
            };
            let result = match scheme {
                1 => run_scheme1_sampled(&ch, &inp, RngSeed(seed)),
                _ => run_scheme2_sampled(&ch, &inp, RngSeed(seed)),
            };
            let result = match result {
                Ok(r) => r,
                Err(e) => return internal_error(e),
            };
            let text = match out.format {
                Format::Csv => render_run_csv(&result),
                Format::Json => render_run_json(&result),
            };
            if let Err(e) = emit(&out, text) {
                return internal_error(e);
            }
            ExitCode::SUCCESS
        }
        Command::Enumerate {
            scheme,
            params,
            out,
        } => {
            if let Err(e) = check_scheme(scheme) {
                return validation_error(e);
            }
            let (ch, inp) = match params.build() {
                Ok(v) => v,
                Err(e) => return validation_error(e),
            };
            let rep = match report(scheme, &ch, &inp) {
                Ok(r) => r,
                Err(e) => return internal_error(e),
            };
            let text = match out.format {
                Format::Csv => render_report_csv(&rep),
                Format::Json => render_report_json(&rep),
            };
            if let Err(e) = emit(&out, text) {
                return internal_error(e);
            }
            ExitCode::SUCCESS
        }
        Command::Sweep {
            grid_start,
            grid_end,
            grid_step,
            a_re,
            a_im,
            b_re,
            b_im,
            out,
        } => {
            if grid_step <= 0.0 || grid_step.is_nan() || !grid_start.is_finite() || !grid_end.is_finite() {
                return validation_error("grid step must be positive and bounds finite");
            }
            if grid_end < grid_start {
                return validation_error("grid end must not precede grid start");
            }
            let inp = match InputParams::new(
                Complex64::new(a_re, a_im),
                Complex64::new(b_re, b_im),
            ) {
                Ok(v) => v,
                Err(e) => return validation_error(e),
            };
            let mut grid = Vec::new();
            let mut k = 0u32;
            loop {
                // snap to 12 decimals so grid labels stay clean
                let v = ((grid_start + f64::from(k) * grid_step) * 1e12).round() / 1e12;
                if v > grid_end + 1e-12 {
                    break;
                }
                grid.push(v.min(1.0));
                k += 1;
            }
            let rows = match sweep(&grid, &inp) {
                Ok(r) => r,
                Err(e) => return validation_error(e),
            };
            let text = match out.format {
                Format::Csv => render_sweep_csv(&rows),
                Format::Json => render_sweep_json(&rows),
            };
            if let Err(e) = emit(&out, text) {
                return internal_error(e);
            }
            ExitCode::SUCCESS
        }
        Command::Mc {
            scheme,
            params,
            trials,
            seed,
            out,
        } => {
            if let Err(e) = check_scheme(scheme) {
                return validation_error(e);
            }
            if trials == 0 {
                return validation_error("trials must be at least 1");
            }
            let (ch, inp) = match params.build() {
                Ok(v) => v,
                Err(e) => return validation_error(e),
            };
            let estimate = match monte_carlo(scheme, &ch, &inp, trials, RngSeed(seed)) {
                Ok(m) => m,
                Err(e) => return internal_error(e),
            };
            let closed = closed_form_success(scheme, &ch).expect("scheme validated");
            let text = match out.format {
                Format::Csv => render_mc_csv(&estimate, closed),
                Format::Json => render_mc_json(&estimate, closed),
            };
            if let Err(e) = emit(&out, text) {
                return internal_error(e);
            }
            ExitCode::SUCCESS
        }
    }
}
