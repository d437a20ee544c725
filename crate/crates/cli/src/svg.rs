//! Static SVG line charts for the sweep output: the dwell-time growth curve
//! and the classical comparator.

use crate::sweep::SweepRow;
use crate::{CliError, Result};
use std::path::Path;

/// Which columns of the sweep to draw.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlotKind {
    /// tau_closed_full against the scaled width u.
    DwellVsWidth,
    /// Both classical traversal columns against the width.
    ClassicalVsWidth,
}

/// One labeled curve.
pub struct Series {
    pub label: String,
    pub color: &'static str,
    pub points: Vec<(f64, f64)>,
}

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const MARGIN_LEFT: f64 = 78.0;
const MARGIN_RIGHT: f64 = 24.0;
const MARGIN_TOP: f64 = 42.0;
const MARGIN_BOTTOM: f64 = 56.0;

fn tick_label(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let text = format!("{v:.3}");
    let trimmed = text.trim_end_matches('0').trim_end_matches('.');
    trimmed.to_string()
}

/// Renders a deterministic line chart; axes are linear with five ticks.
pub fn line_chart(title: &str, x_label: &str, y_label: &str, series: &[Series]) -> String {
    let points: Vec<(f64, f64)> = series.iter().flat_map(|s| s.points.iter().copied()).collect();
    let (x_lo, x_hi) = bounds(points.iter().map(|p| p.0));
    let (y_lo, y_hi) = bounds(points.iter().map(|p| p.1));
    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let map_x = |x: f64| MARGIN_LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w;
    let map_y = |y: f64| HEIGHT - MARGIN_BOTTOM - (y - y_lo) / (y_hi - y_lo) * plot_h;

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    ));
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    out.push_str(&format!(
        "<text x=\"{:.1}\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">{}</text>\n",
        WIDTH / 2.0,
        escape(title)
    ));

    // Axes.
    out.push_str(&format!(
        "<line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"black\"/>\n",
        MARGIN_LEFT,
        HEIGHT - MARGIN_BOTTOM,
        WIDTH - MARGIN_RIGHT,
        HEIGHT - MARGIN_BOTTOM
    ));
    out.push_str(&format!(
        "<line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"black\"/>\n",
        MARGIN_LEFT,
        MARGIN_TOP,
        MARGIN_LEFT,
        HEIGHT - MARGIN_BOTTOM
    ));

    for i in 0..=4 {
        let frac = i as f64 / 4.0;
        let xv = x_lo + frac * (x_hi - x_lo);
        let xp = map_x(xv);
        out.push_str(&format!(
            "<line x1=\"{xp:.1}\" y1=\"{:.1}\" x2=\"{xp:.1}\" y2=\"{:.1}\" stroke=\"black\"/>\n",
            HEIGHT - MARGIN_BOTTOM,
            HEIGHT - MARGIN_BOTTOM + 5.0
        ));
        out.push_str(&format!(
            "<text x=\"{xp:.1}\" y=\"{:.1}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">{}</text>\n",
            HEIGHT - MARGIN_BOTTOM + 20.0,
            tick_label(xv)
        ));
        let yv = y_lo + frac * (y_hi - y_lo);
        let yp = map_y(yv);
        out.push_str(&format!(
            "<line x1=\"{:.1}\" y1=\"{yp:.1}\" x2=\"{:.1}\" y2=\"{yp:.1}\" stroke=\"black\"/>\n",
            MARGIN_LEFT - 5.0,
            MARGIN_LEFT
        ));
        out.push_str(&format!(
            "<text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">{}</text>\n",
            MARGIN_LEFT - 9.0,
            yp + 4.0,
            tick_label(yv)
        ));
    }

    out.push_str(&format!(
        "<text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">{}</text>\n",
        MARGIN_LEFT + plot_w / 2.0,
        HEIGHT - 12.0,
        escape(x_label)
    ));
    out.push_str(&format!(
        "<text x=\"18\" y=\"{:.1}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" transform=\"rotate(-90 18 {:.1})\">{}</text>\n",
        MARGIN_TOP + plot_h / 2.0,
        MARGIN_TOP + plot_h / 2.0,
        escape(y_label)
    ));

    for (idx, s) in series.iter().enumerate() {
        let coords: Vec<String> = s
            .points
            .iter()
            .map(|&(x, y)| format!("{:.2},{:.2}", map_x(x), map_y(y)))
            .collect();
        out.push_str(&format!(
            "<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"2\" points=\"{}\"/>\n",
            s.color,
            coords.join(" ")
        ));
        out.push_str(&format!(
            "<text x=\"{:.1}\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"12\" fill=\"{}\">{}</text>\n",
            MARGIN_LEFT + 10.0,
            MARGIN_TOP + 16.0 + 16.0 * idx as f64,
            s.color,
            escape(&s.label)
        ));
    }
    out.push_str("</svg>\n");
    out
}

fn bounds(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for v in values {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    if !lo.is_finite() || !hi.is_finite() {
        return (0.0, 1.0);
    }
    if lo == hi {
        return (lo - 0.5, hi + 0.5);
    }
    let pad = 0.04 * (hi - lo);
    (lo - pad, hi + pad)
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Chart for the requested sweep columns, written to a file.
pub fn emit_plot(rows: &[SweepRow], path: &Path, kind: PlotKind) -> Result<()> {
    let text = plot_string(rows, kind)?;
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Chart source for the requested sweep columns.
pub fn plot_string(rows: &[SweepRow], kind: PlotKind) -> Result<String> {
    if rows.is_empty() {
        return Err(CliError::Usage("no sweep rows to plot".to_string()));
    }
    match kind {
        PlotKind::DwellVsWidth => {
            let series = Series {
                label: "tau_closed_full".to_string(),
                color: "#1f5fbf",
                points: rows.iter().map(|r| (r.u, r.tau_closed_full)).collect(),
            };
            Ok(line_chart(
                "Dwell time vs scaled width",
                "u = w/sigma",
                "tau",
                &[series],
            ))
        }
        PlotKind::ClassicalVsWidth => {
            let populated: Vec<&SweepRow> = rows
                .iter()
                .filter(|r| r.tau_classical_exact.is_some() && r.tau_classical_quadratic.is_some())
                .collect();
            if populated.is_empty() {
                return Err(CliError::Usage(
                    "rows are missing the tau_classical_exact column; enable include_classical"
                        .to_string(),
                ));
            }
            let exact = Series {
                label: "tau_classical_exact".to_string(),
                color: "#1f5fbf",
                points: populated
                    .iter()
                    .map(|r| (r.u, r.tau_classical_exact.unwrap()))
                    .collect(),
            };
            let quadratic = Series {
                label: "tau_classical_quadratic".to_string(),
                color: "#bf4f1f",
                points: populated
                    .iter()
                    .map(|r| (r.u, r.tau_classical_quadratic.unwrap()))
                    .collect(),
            };
            Ok(line_chart(
                "Classical traversal vs width",
                "w",
                "tau",
                &[exact, quadratic],
            ))
        }
    }
}
