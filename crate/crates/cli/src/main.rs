//! `brachisto`: reproducible brachistochrone analyses with JSON and CSV reports.
//!
//! Exit status is 0 when every verdict passes, 1 on a FAIL or UNCLASSIFIED
//! verdict and 2 on invalid input or I/O failure.

mod commands;
mod grid;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use brachisto::cliffrep::RepKind;
use brachisto::KronLabel;
use clap::{Parser, Subcommand, ValueEnum};

use commands::{CmdResult, EvolveArgs};

#[derive(Parser)]
#[command(
    name = "brachisto",
    version,
    about = "Quantum brachistochrone analyses for 4x4 spinor systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgebraRep {
    Majorana,
    Dirac,
    Gamma,
}

#[derive(Clone, Copy, ValueEnum)]
enum MassRep {
    Majorana,
    Dirac,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScatterRep {
    Gamma,
    Majorana,
}

#[derive(Clone, Copy, ValueEnum)]
enum System {
    Majorana,
}

#[derive(clap::Args)]
struct Momentum {
    #[arg(long, default_value_t = 0.0)]
    px: f64,
    #[arg(long, default_value_t = 0.0)]
    py: f64,
    #[arg(long, default_value_t = 0.0)]
    pz: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Clifford relations of a representation.
    VerifyAlgebra {
        #[arg(long, value_enum)]
        rep: AlgebraRep,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Integrate the brachistochrone equation and write the trajectory as CSV.
    #[command(allow_negative_numbers = true)]
    Evolve {
        #[arg(long, value_enum, default_value = "majorana")]
        system: System,
        #[arg(long)]
        m: f64,
        #[command(flatten)]
        p: Momentum,
        #[arg(long, default_value_t = 1.0)]
        t_end: f64,
        #[arg(long, default_value_t = 1e-4)]
        step: f64,
        /// Keep every n-th step.
        #[arg(long, default_value_t = 1)]
        every: usize,
        /// Constraint value as `label=value`, e.g. `z1=-2`; repeatable.
        /// Without any, the rotating-phase constraint is used.
        #[arg(long, value_parser = commands::parse_lambda)]
        lambda: Vec<(KronLabel, f64)>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify the evolved mass coefficient as constant or rotating.
    #[command(allow_negative_numbers = true)]
    ClassifyMass {
        #[arg(long, value_enum)]
        rep: MassRep,
        #[arg(long)]
        m: f64,
        #[command(flatten)]
        p: Momentum,
        #[arg(long, default_value_t = 3.0)]
        t_end: f64,
        #[arg(long, default_value_t = 300)]
        samples: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed-form propagator of the reduced angular-momentum system.
    #[command(allow_negative_numbers = true)]
    Angmom {
        #[arg(long)]
        nx: f64,
        #[arg(long)]
        lyz: f64,
        #[arg(long)]
        t: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Conservation of the angular-momentum tensor along a seeded flow.
    AngmomConserve {
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 5.0)]
        t_end: f64,
        #[arg(long, default_value_t = 1e-3)]
        step: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compton kinematics and matrix identities over an angle grid.
    Compton {
        #[arg(long, value_enum)]
        rep: ScatterRep,
        #[arg(long)]
        m: f64,
        #[arg(long)]
        omega1: f64,
        /// `start:end:count`, end-inclusive; `pi` is accepted.
        #[arg(long, default_value = "0:pi:64", value_parser = grid::parse_grid_arg)]
        theta_grid: grid::Grid,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Schrödinger- and Heisenberg-frame expectation identities.
    #[command(allow_negative_numbers = true)]
    Frames {
        #[arg(long)]
        m: f64,
        #[command(flatten)]
        p: Momentum,
        #[arg(long)]
        t: f64,
        #[arg(long, default_value_t = 11)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every named check and write `summary.json`.
    ReportAll {
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

fn momentum(p: &Momentum) -> Result<[f64; 3], String> {
    commands::momentum(p.px, p.py, p.pz)
}

fn dispatch(cmd: Command) -> CmdResult {
    match cmd {
        Command::VerifyAlgebra { rep, out } => {
            let kind = match rep {
                AlgebraRep::Majorana => RepKind::Majorana,
                AlgebraRep::Dirac => RepKind::Dirac,
                AlgebraRep::Gamma => RepKind::GammaScatter,
            };
            commands::verify_algebra(kind, out.as_deref())
        }
        Command::Evolve {
            system: System::Majorana,
            m,
            p,
            t_end,
            step,
            every,
            lambda,
            out,
        } => commands::evolve(
            EvolveArgs {
                m,
                p: momentum(&p)?,
                t_end,
                step,
                every,
                lambda,
            },
            out.as_deref(),
        ),
        Command::ClassifyMass {
            rep,
            m,
            p,
            t_end,
            samples,
            out,
        } => {
            let kind = match rep {
                MassRep::Majorana => RepKind::Majorana,
                MassRep::Dirac => RepKind::Dirac,
            };
            commands::classify_mass(kind, m, momentum(&p)?, t_end, samples, out.as_deref())
        }
        Command::Angmom { nx, lyz, t, out } => commands::angmom(nx, lyz, t, out.as_deref()),
        Command::AngmomConserve { seed, t_end, step, out } => {
            commands::angmom_conserve(seed, t_end, step, out.as_deref())
        }
        Command::Compton {
            rep,
            m,
            omega1,
            theta_grid,
            out,
        } => {
            let kind = match rep {
                ScatterRep::Gamma => RepKind::GammaScatter,
                ScatterRep::Majorana => RepKind::Majorana,
            };
            commands::compton(kind, m, omega1, &theta_grid.0, out.as_deref())
        }
        Command::Frames { m, p, t, seed, out } => commands::frames(m, momentum(&p)?, t, seed, out.as_deref()),
        Command::ReportAll { seed, out_dir } => {
            let (outcome, report) = commands::report_all(seed, out_dir.as_deref())?;
            for check in &report.checks {
                let worst = check.metrics.iter().map(|m| m.value).fold(0.0, f64::max);
                println!("{:?} {} (max metric {worst:e})", check.verdict, check.name);
            }
            Ok(outcome)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) => {
            let status = if outcome.pass { "PASS" } else { "FAIL" };
            println!("{status}: {} -> {}", outcome.summary, outcome.path.display());
            ExitCode::from(if outcome.pass { 0 } else { 1 })
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
