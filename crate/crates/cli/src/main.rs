//! `dwell`: closed-form and numeric dwell times for a Gaussian packet on a
//! damped inverted barrier, with CSV sweeps, packet snapshots, the classical
//! comparator, and a cross-check report.

use clap::{Parser, Subcommand, ValueEnum};
use dwell_cli::config::{load_config, ConfigFile};
use dwell_cli::svg::{emit_plot, PlotKind};
use dwell_cli::sweep::{csv_string, emit_csv, format_significant, run_sweep, SweepSpec};
use dwell_cli::{CliError, Result};
use dwell_core::classical::{traversal_exact, traversal_quadratic, ClassicalSpec};
use dwell_core::dwelltime::{
    consistency_report, dwell_time_closed, dwell_time_numeric, Convention, CurrentMode,
};
use dwell_core::langevin::PhysicalConfig;
use dwell_core::wavepacket::{current_canonical_at, current_paper_at, density_at, packet_state};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "dwell",
    version,
    about = "Dwell times for a wavepacket on a damped inverted parabolic barrier"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Prefactor convention exposed on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConventionArg {
    /// Prefactor 8 M zeta^2 / (hbar |k| sqrt(pi)).
    Rederived,
    /// Prefactor 8 M zeta / (hbar |k| sqrt(pi)).
    Paper,
}

impl From<ConventionArg> for Convention {
    fn from(arg: ConventionArg) -> Self {
        match arg {
            ConventionArg::Rederived => Convention::Rederived,
            ConventionArg::Paper => Convention::PaperLiteral,
        }
    }
}

/// Sweep plot selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PlotKindArg {
    /// tau_closed_full against the scaled width.
    Dwell,
    /// Classical traversal columns against the width.
    Classical,
}

impl From<PlotKindArg> for PlotKind {
    fn from(arg: PlotKindArg) -> Self {
        match arg {
            PlotKindArg::Dwell => PlotKind::DwellVsWidth,
            PlotKindArg::Classical => PlotKind::ClassicalVsWidth,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Dwell time for one barrier, printed as JSON.
    Dwell {
        /// JSON configuration file.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Prefactor convention, overriding the configuration.
        #[arg(long)]
        convention: Option<ConventionArg>,
        /// Damping rate, overriding the configuration.
        #[arg(long)]
        eta: Option<f64>,
        /// Also integrate the current difference numerically.
        #[arg(long)]
        numeric: bool,
    },
    /// Dwell-time columns over a grid of scaled widths, as CSV.
    Sweep {
        /// JSON configuration file.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Prefactor convention, overriding the configuration.
        #[arg(long)]
        convention: Option<ConventionArg>,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write an SVG chart of the sweep here.
        #[arg(long)]
        plot: Option<PathBuf>,
        /// Which columns the chart draws.
        #[arg(long, value_enum, default_value_t = PlotKindArg::Dwell)]
        plot_kind: PlotKindArg,
        /// Smallest scaled width, overriding the configuration.
        #[arg(long)]
        u_min: Option<f64>,
        /// Largest scaled width, overriding the configuration.
        #[arg(long)]
        u_max: Option<f64>,
        /// Number of grid points, overriding the configuration.
        #[arg(long)]
        steps: Option<usize>,
        /// Damping rate, overriding the configuration.
        #[arg(long)]
        eta: Option<f64>,
        /// Fill the tau_numeric column.
        #[arg(long)]
        numeric: bool,
        /// Fill the classical traversal columns.
        #[arg(long)]
        classical: bool,
    },
    /// Density and current snapshots on a (t, q) grid, as CSV.
    Evolve {
        /// JSON configuration file.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Damping rate, overriding the configuration.
        #[arg(long)]
        eta: Option<f64>,
        /// Latest snapshot time.
        #[arg(long, default_value_t = 2.0)]
        t_max: f64,
        /// Number of snapshot times between 0 and t_max.
        #[arg(long, default_value_t = 5)]
        t_steps: usize,
        /// Left edge of the position grid.
        #[arg(long, default_value_t = 0.0)]
        q_min: f64,
        /// Right edge of the position grid; defaults to the barrier width 2 z0.
        #[arg(long)]
        q_max: Option<f64>,
        /// Number of position grid points.
        #[arg(long, default_value_t = 9)]
        q_steps: usize,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classical traversal times over a grid of widths, as CSV.
    Classical {
        /// Friction coefficient.
        #[arg(long, default_value_t = 1.0)]
        gamma: f64,
        /// Entry speed.
        #[arg(long, default_value_t = 10.0)]
        v0: f64,
        /// Smallest width.
        #[arg(long, default_value_t = 0.5)]
        w_min: f64,
        /// Largest width.
        #[arg(long, default_value_t = 8.0)]
        w_max: f64,
        /// Number of grid points.
        #[arg(long, default_value_t = 16)]
        steps: usize,
        /// Quadratic-coefficient convention.
        #[arg(long, value_enum, default_value_t = ConventionArg::Rederived)]
        convention: ConventionArg,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check table over a (zeta, eta) grid, printed as JSON.
    Report {
        /// JSON configuration file.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Write the JSON here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run() -> Result<()> {
    match Cli::parse().command {
        Command::Dwell {
            config,
            convention,
            eta,
            numeric,
        } => cmd_dwell(config.as_deref(), convention, eta, numeric),
        Command::Sweep {
            config,
            convention,
            out,
            plot,
            plot_kind,
            u_min,
            u_max,
            steps,
            eta,
            numeric,
            classical,
        } => cmd_sweep(SweepArgs {
            config,
            convention,
            out,
            plot,
            plot_kind,
            u_min,
            u_max,
            steps,
            eta,
            numeric,
            classical,
        }),
        Command::Evolve {
            config,
            eta,
            t_max,
            t_steps,
            q_min,
            q_max,
            q_steps,
            out,
        } => cmd_evolve(config.as_deref(), eta, t_max, t_steps, q_min, q_max, q_steps, out),
        Command::Classical {
            gamma,
            v0,
            w_min,
            w_max,
            steps,
            convention,
            out,
        } => cmd_classical(gamma, v0, w_min, w_max, steps, convention.into(), out),
        Command::Report { config, out } => cmd_report(config.as_deref(), out),
    }
}

/// Configuration resolved from an optional file, with command-line overrides.
fn resolved(path: Option<&Path>, eta: Option<f64>) -> Result<(PhysicalConfig, SweepSpec)> {
    let file = match path {
        Some(p) => load_config(p)?,
        None => ConfigFile::default(),
    };
    let (mut cfg, spec) = file.resolve()?;
    if let Some(eta) = eta {
        cfg.eta = eta;
        cfg = cfg.validated()?;
    }
    Ok((cfg, spec))
}

fn write_or_print(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_dwell(
    config: Option<&Path>,
    convention: Option<ConventionArg>,
    eta: Option<f64>,
    numeric: bool,
) -> Result<()> {
    let (cfg, spec) = resolved(config, eta)?;
    let convention = convention.map_or(spec.convention, Convention::from);
    let mut result = dwell_time_closed(&cfg, convention)?;
    if numeric {
        result.tau_numeric = Some(dwell_time_numeric(&cfg, CurrentMode::PaperLiteral)?);
    }
    println!("{}", serde_json::to_string_pretty(&result)?);
    Ok(())
}

struct SweepArgs {
    config: Option<PathBuf>,
    convention: Option<ConventionArg>,
    out: Option<PathBuf>,
    plot: Option<PathBuf>,
    plot_kind: PlotKindArg,
    u_min: Option<f64>,
    u_max: Option<f64>,
    steps: Option<usize>,
    eta: Option<f64>,
    numeric: bool,
    classical: bool,
}

fn cmd_sweep(args: SweepArgs) -> Result<()> {
    let (cfg, mut spec) = resolved(args.config.as_deref(), args.eta)?;
    if let Some(c) = args.convention {
        spec.convention = c.into();
    }
    if let Some(u_min) = args.u_min {
        spec.u_min = u_min;
    }
    if let Some(u_max) = args.u_max {
        spec.u_max = u_max;
    }
    if let Some(steps) = args.steps {
        spec.steps = steps;
    }
    spec.include_numeric |= args.numeric;
    spec.include_classical |= args.classical;
    let spec = spec.validated()?;
    let rows = run_sweep(&cfg, &spec)?;
    match args.out.as_deref() {
        Some(path) => emit_csv(&rows, path)?,
        None => print!("{}", csv_string(&rows)?),
    }
    if let Some(path) = args.plot.as_deref() {
        emit_plot(&rows, path, args.plot_kind.into())?;
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_evolve(
    config: Option<&Path>,
    eta: Option<f64>,
    t_max: f64,
    t_steps: usize,
    q_min: f64,
    q_max: Option<f64>,
    q_steps: usize,
    out: Option<PathBuf>,
) -> Result<()> {
    if !(t_max > 0.0) || t_steps < 2 {
        return Err(CliError::Usage(
            "evolve needs t_max > 0 and t_steps >= 2".to_string(),
        ));
    }
    let (cfg, _) = resolved(config, eta)?;
    let q_max = q_max.unwrap_or_else(|| cfg.width());
    if !(q_max > q_min) || q_steps < 2 {
        return Err(CliError::Usage(
            "evolve needs q_max > q_min and q_steps >= 2".to_string(),
        ));
    }
    let mut text = String::from("t,q,density,current_canonical,current_paper\n");
    for i in 0..t_steps {
        let s = i as f64 / (t_steps - 1) as f64;
        let t = s * t_max;
        let state = packet_state(&cfg, t)?;
        for j in 0..q_steps {
            let r = j as f64 / (q_steps - 1) as f64;
            let q = (1.0 - r) * q_min + r * q_max;
            text.push_str(&format!(
                "{},{},{},{},{}\n",
                format_significant(t),
                format_significant(q),
                format_significant(density_at(&state, q)),
                format_significant(current_canonical_at(&state, q)),
                format_significant(current_paper_at(&cfg, &state, q)),
            ));
        }
    }
    write_or_print(&text, out.as_deref())
}

fn cmd_classical(
    gamma: f64,
    v0: f64,
    w_min: f64,
    w_max: f64,
    steps: usize,
    convention: Convention,
    out: Option<PathBuf>,
) -> Result<()> {
    if !(w_min > 0.0) || !(w_max > w_min) || steps < 2 {
        return Err(CliError::Usage(
            "classical needs 0 < w_min < w_max and steps >= 2".to_string(),
        ));
    }
    let mut text = String::from("w,tau_exact,tau_quadratic\n");
    for i in 0..steps {
        let s = i as f64 / (steps - 1) as f64;
        let w = (1.0 - s) * w_min + s * w_max;
        let spec = ClassicalSpec {
            gamma,
            v0,
            w_cl: w,
        }
        .validated()?;
        text.push_str(&format!(
            "{},{},{}\n",
            format_significant(w),
            format_significant(traversal_exact(&spec)?),
            format_significant(traversal_quadratic(&spec, convention)?),
        ));
    }
    write_or_print(&text, out.as_deref())
}

fn cmd_report(config: Option<&Path>, out: Option<PathBuf>) -> Result<()> {
    let (base, _) = resolved(config, None)?;
    let mut grid = Vec::new();
    for &zeta in &[1.5, 2.0, 3.0] {
        for &eta in &[0.0, 0.5, 1.0] {
            let mut cfg = base.clone().with_zeta(zeta)?;
            cfg.eta = eta;
            grid.push(cfg.validated()?);
        }
    }
    let report = consistency_report(&grid)?;
    let mut text = serde_json::to_string_pretty(&report)?;
    text.push('\n');
    write_or_print(&text, out.as_deref())
}
