use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use zetawb::symmetry::CurveFamily;
use zetawb::EvalMethod;

mod commands;
mod json;

#[derive(Parser)]
#[command(name = "zetawb", version, about = "Riemann zeta numerical workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate ζ(s) at one point (JSON).
    #[command(allow_negative_numbers = true)]
    Eval {
        #[arg(long)]
        re: f64,
        #[arg(long, default_value_t = 0.0)]
        im: f64,
        /// auto, dirichlet, eta, theta_integral or reflection.
        #[arg(long, default_value = "auto")]
        method: EvalMethod,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Scan the critical line for zeros (CSV).
    #[command(allow_negative_numbers = true)]
    Zeros {
        #[arg(long)]
        tmax: f64,
        #[arg(long, default_value_t = 0.1)]
        step: f64,
        #[arg(long, default_value_t = 1e-8)]
        refine_tol: f64,
        /// Zero table to compare against; adds reference and diff columns.
        #[arg(long)]
        reference: Option<PathBuf>,
    },
    /// π(x) against li(x) and x/ln x (JSON).
    #[command(allow_negative_numbers = true)]
    Primes {
        #[arg(long)]
        x: f64,
        /// Also probe |li − π| ≤ C x^{1/2+eps} on [2, x].
        #[arg(long)]
        rh_eps: Option<f64>,
    },
    /// ξ(s) − ξ(1−s) residuals over a grid (JSON).
    #[command(allow_negative_numbers = true)]
    XiCheck {
        #[arg(long, default_value_t = -4.0)]
        re_min: f64,
        #[arg(long, default_value_t = 5.0)]
        re_max: f64,
        #[arg(long, default_value_t = 0.0)]
        im_min: f64,
        #[arg(long, default_value_t = 30.0)]
        im_max: f64,
        #[arg(long, default_value_t = 50)]
        n: usize,
    },
    /// Sample x^x or c^x on a chosen branch (CSV).
    #[command(allow_negative_numbers = true)]
    Symmetry {
        /// x_pow_x or c_pow_x.
        #[arg(long, default_value = "c_pow_x")]
        family: CurveFamily,
        #[arg(long, default_value_t = -4.0)]
        c: f64,
        #[arg(long, default_value_t = 1.0)]
        n_phase: f64,
        #[arg(long, default_value_t = -2.0)]
        x_min: f64,
        #[arg(long, default_value_t = 2.0)]
        x_max: f64,
        #[arg(long, default_value_t = 81)]
        samples: usize,
    },
    /// Sample ζ on a grid (CSV), optionally drawing its zero curves (SVG).
    #[command(allow_negative_numbers = true)]
    Grid {
        #[arg(long)]
        re_min: f64,
        #[arg(long)]
        re_max: f64,
        #[arg(long)]
        im_min: f64,
        #[arg(long)]
        im_max: f64,
        #[arg(long, default_value_t = 50)]
        nx: usize,
        #[arg(long, default_value_t = 50)]
        ny: usize,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Zero ordinates next to the prime counts below them (CSV).
    #[command(allow_negative_numbers = true)]
    Table13 {
        #[arg(long, default_value_t = 6)]
        k: usize,
        #[arg(long, default_value_t = 40.0)]
        tmax: f64,
        #[arg(long, default_value_t = 0.1)]
        step: f64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli.command) {
        Ok(bytes) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(&bytes).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
