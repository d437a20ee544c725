//! Width sweeps: one dwell-time row per scaled width u = w/sigma, with
//! optional numeric-route and classical-comparator columns, and the CSV
//! encoding used by the `sweep` subcommand.

use crate::{CliError, Result};
use dwell_core::classical::{traversal_exact, traversal_quadratic, ClassicalSpec};
use dwell_core::dwelltime::{
    dwell_time_closed, dwell_time_numeric, shape_f, Convention, CurrentMode, MIN_SCALED_WIDTH,
};
use dwell_core::langevin::PhysicalConfig;
use serde::Serialize;
use std::path::Path;

/// Sweep bounds and options over the scaled width axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepSpec {
    pub u_min: f64,
    pub u_max: f64,
    pub steps: usize,
    pub convention: Convention,
    /// Also integrate the current difference in time for each row.
    pub include_numeric: bool,
    /// Populate the classical traversal columns.
    pub include_classical: bool,
    /// Classical friction coefficient.
    pub gamma: f64,
    /// Classical entry speed.
    pub v0: f64,
}

impl SweepSpec {
    /// Checks the regime gate u_min >= 2 sqrt(2), the ordering of the
    /// bounds, and the classical parameters.
    pub fn validated(self) -> Result<Self> {
        if !self.u_min.is_finite() || self.u_min < MIN_SCALED_WIDTH - 1e-12 {
            return Err(CliError::Usage(format!(
                "sweep.u_min = {} is below the zeta >= 1 regime; the scaled width must be at least 2*sqrt(2) ~ {MIN_SCALED_WIDTH:.6}",
                self.u_min
            )));
        }
        if !self.u_max.is_finite() || self.u_max <= self.u_min {
            return Err(CliError::Usage(format!(
                "sweep.u_max = {} must exceed sweep.u_min = {}",
                self.u_max, self.u_min
            )));
        }
        if self.steps < 2 {
            return Err(CliError::Usage(format!(
                "sweep.steps = {} must be at least 2",
                self.steps
            )));
        }
        if !self.gamma.is_finite() || self.gamma < 0.0 {
            return Err(CliError::Usage(format!(
                "sweep.gamma = {} must be non-negative",
                self.gamma
            )));
        }
        if !self.v0.is_finite() || self.v0 <= 0.0 {
            return Err(CliError::Usage(format!(
                "sweep.v0 = {} must be positive",
                self.v0
            )));
        }
        Ok(Self {
            u_min: self.u_min.max(MIN_SCALED_WIDTH),
            ..self
        })
    }
}

/// One grid point of a sweep. Optional columns stay empty in the CSV when
/// the corresponding route is disabled or out of regime.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub u: f64,
    pub zeta: f64,
    pub f_rederived: f64,
    pub f_paper: f64,
    pub tau_closed_full: f64,
    pub tau_closed_approx: f64,
    pub tau_numeric: Option<f64>,
    pub tau_classical_exact: Option<f64>,
    pub tau_classical_quadratic: Option<f64>,
}

fn at_width(u: f64) -> impl Fn(dwell_core::Error) -> CliError {
    move |source| CliError::AtWidth { u, source }
}

/// Evaluates the sweep on a uniform u grid. Output is deterministic for
/// identical input; the dwell-time column is checked to be strictly
/// increasing, the growth the sweep exists to exhibit.
pub fn run_sweep(cfg: &PhysicalConfig, spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    let spec = spec.validated()?;
    let mut rows = Vec::with_capacity(spec.steps);
    for i in 0..spec.steps {
        let s = i as f64 / (spec.steps - 1) as f64;
        let u = (1.0 - s) * spec.u_min + s * spec.u_max;
        let zeta = (u / MIN_SCALED_WIDTH).max(1.0);
        let row_cfg = cfg.with_zeta(zeta).map_err(at_width(u))?;
        let closed = dwell_time_closed(&row_cfg, spec.convention).map_err(at_width(u))?;
        let tau_numeric = if spec.include_numeric {
            Some(dwell_time_numeric(&row_cfg, CurrentMode::PaperLiteral).map_err(at_width(u))?)
        } else {
            None
        };
        let (tau_classical_exact, tau_classical_quadratic) = if spec.include_classical {
            classical_columns(&spec, u)?
        } else {
            (None, None)
        };
        rows.push(SweepRow {
            u,
            zeta,
            f_rederived: shape_f(u.max(MIN_SCALED_WIDTH), Convention::Rederived)
                .map_err(at_width(u))?,
            f_paper: shape_f(u.max(MIN_SCALED_WIDTH), Convention::PaperLiteral)
                .map_err(at_width(u))?,
            tau_closed_full: closed.tau_closed_full,
            tau_closed_approx: closed.tau_closed_approx,
            tau_numeric,
            tau_classical_exact,
            tau_classical_quadratic,
        });
    }
    for pair in rows.windows(2) {
        if pair[1].tau_closed_full <= pair[0].tau_closed_full {
            return Err(CliError::Core(dwell_core::Error::Domain(format!(
                "dwell time failed to increase between u = {} and u = {}",
                pair[0].u, pair[1].u
            ))));
        }
    }
    Ok(rows)
}

/// Classical columns for one width; a width beyond the stopping distance
/// leaves them empty rather than failing the whole sweep.
fn classical_columns(spec: &SweepSpec, u: f64) -> Result<(Option<f64>, Option<f64>)> {
    match (ClassicalSpec {
        gamma: spec.gamma,
        v0: spec.v0,
        w_cl: u,
    })
    .validated()
    {
        Ok(s) => Ok((
            Some(traversal_exact(&s).map_err(CliError::Core)?),
            Some(traversal_quadratic(&s, spec.convention).map_err(CliError::Core)?),
        )),
        Err(dwell_core::Error::Regime(_)) => Ok((None, None)),
        Err(other) => Err(CliError::AtWidth { u, source: other }),
    }
}

pub const CSV_HEADER: &str = "u,zeta,F_rederived,F_paper,tau_closed_full,tau_closed_approx,tau_numeric,tau_classical_exact,tau_classical_quadratic";

/// Plain decimal with 12 significant digits.
pub fn format_significant(v: f64) -> String {
    if v == 0.0 {
        return "0.00000000000".to_string();
    }
    let decimals = (11 - v.abs().log10().floor() as i64).clamp(0, 17) as usize;
    format!("{v:.decimals$}")
}

fn optional(v: Option<f64>) -> String {
    v.map(format_significant).unwrap_or_default()
}

/// CSV encoding of the sweep, newline-terminated.
pub fn csv_string(rows: &[SweepRow]) -> Result<String> {
    if rows.is_empty() {
        return Err(CliError::Usage("no sweep rows to emit".to_string()));
    }
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            format_significant(row.u),
            format_significant(row.zeta),
            format_significant(row.f_rederived),
            format_significant(row.f_paper),
            format_significant(row.tau_closed_full),
            format_significant(row.tau_closed_approx),
            optional(row.tau_numeric),
            optional(row.tau_classical_exact),
            optional(row.tau_classical_quadratic),
        ));
    }
    Ok(out)
}

/// Writes the CSV to a file.
pub fn emit_csv(rows: &[SweepRow], path: &Path) -> Result<()> {
    let text = csv_string(rows)?;
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base_cfg() -> PhysicalConfig {
        PhysicalConfig::default_units().validated().unwrap()
    }

    fn small_spec() -> SweepSpec {
        SweepSpec {
            u_min: MIN_SCALED_WIDTH,
            u_max: 2.0 * MIN_SCALED_WIDTH,
            steps: 2,
            convention: Convention::Rederived,
            include_numeric: false,
            include_classical: false,
            gamma: 1.0,
            v0: 10.0,
        }
    }

    #[test]
    fn two_step_sweep_hits_shape_oracle_values() {
        let rows = run_sweep(&base_cfg(), &small_spec()).unwrap();
        assert_eq!(rows.len(), 2);
        assert!((rows[0].f_rederived - 2.94303).abs() < 1e-5);
        assert!((rows[1].f_rederived - 3.1156776086864964).abs() < 1e-10);
        assert_eq!(rows[0].zeta, 1.0);
        assert_eq!(rows[1].zeta, 2.0);
        assert!(rows[1].tau_closed_full > rows[0].tau_closed_full);
    }

    #[test]
    fn zeta_column_tracks_u_exactly() {
        let spec = SweepSpec {
            steps: 17,
            u_max: 19.0,
            ..small_spec()
        };
        for row in run_sweep(&base_cfg(), &spec).unwrap() {
            assert!((row.zeta - row.u / MIN_SCALED_WIDTH).abs() <= 1e-12);
        }
    }

    #[test]
    fn sweep_is_deterministic() {
        let spec = SweepSpec {
            steps: 9,
            include_numeric: true,
            ..small_spec()
        };
        let first = csv_string(&run_sweep(&base_cfg(), &spec).unwrap()).unwrap();
        let second = csv_string(&run_sweep(&base_cfg(), &spec).unwrap()).unwrap();
        assert_eq!(first, second);
    }

    #[test]
    fn numeric_column_matches_closed_form() {
        let spec = SweepSpec {
            steps: 3,
            include_numeric: true,
            ..small_spec()
        };
        for row in run_sweep(&base_cfg(), &spec).unwrap() {
            let tau = row.tau_numeric.unwrap();
            if row.zeta > 1.0 {
                assert!((tau - row.tau_closed_full).abs() / row.tau_closed_full <= 1e-8);
            } else {
                assert_eq!(tau, 0.0);
            }
        }
    }

    #[test]
    fn classical_columns_reproduce_printed_curve_point() {
        let spec = SweepSpec {
            u_max: 5.0,
            include_classical: true,
            convention: Convention::PaperLiteral,
            ..small_spec()
        };
        let rows = run_sweep(&base_cfg(), &spec).unwrap();
        assert_eq!(rows[1].u, 5.0);
        assert_eq!(rows[1].tau_classical_quadratic.unwrap(), 0.75);
        assert!((rows[1].tau_classical_exact.unwrap() - std::f64::consts::LN_2).abs() <= 1e-12);
    }

    #[test]
    fn classical_columns_empty_beyond_stopping_distance() {
        let spec = SweepSpec {
            u_max: 12.0,
            steps: 5,
            include_classical: true,
            ..small_spec()
        };
        let rows = run_sweep(&base_cfg(), &spec).unwrap();
        let last = rows.last().unwrap();
        assert_eq!(last.u, 12.0);
        assert!(last.tau_classical_exact.is_none());
        assert!(rows[0].tau_classical_exact.is_some());
    }

    #[test]
    fn csv_has_exact_header_and_trailing_newline() {
        let rows = run_sweep(&base_cfg(), &small_spec()).unwrap();
        let text = csv_string(&rows).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), CSV_HEADER);
        assert_eq!(text.lines().count(), 3);
        assert!(text.ends_with('\n'));
        // Disabled routes leave empty fields.
        assert!(text.lines().nth(1).unwrap().ends_with(",,"));
    }

    #[test]
    fn empty_rows_are_a_usage_error() {
        assert!(matches!(csv_string(&[]), Err(CliError::Usage(_))));
    }

    #[test]
    fn spec_validation_rejects_bad_bounds() {
        assert!(matches!(
            SweepSpec { u_min: 1.0, ..small_spec() }.validated(),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            SweepSpec { u_max: 2.0, ..small_spec() }.validated(),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            SweepSpec { steps: 1, ..small_spec() }.validated(),
            Err(CliError::Usage(_))
        ));
    }

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(format_significant(20.0), "20.0000000000");
        assert_eq!(format_significant(0.0), "0.00000000000");
        assert_eq!(format_significant(2.8284271247461903), "2.82842712475");
        assert_eq!(format_significant(0.097364925271453), "0.0973649252715");
        assert_eq!(format_significant(1e-4), "0.000100000000000");
    }
}
