//! Standalone SVG rendering of comparison curves on the fixed unit square.
//!
//! One polyline per curve (downsampled to at most 2000 points), a shaded
//! mean +- std band per summary, optional reference curves (identity
//! dashed, square in the secondary color, opposed dotted), and a legend.
//! Output bytes are deterministic.

use std::fmt::Write as _;

use crate::error::{Error, Result};

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 540.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 30.0;
const MARGIN_TOP: f64 = 50.0;
const MARGIN_BOTTOM: f64 = 60.0;
const MAX_POINTS: usize = 2000;

const SERIES_COLORS: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b", "#17becf",
];
const SQUARE_COLOR: &str = "#ff7f0e";

/// One drawable series: a curve, optionally with a +-1 std band.
#[derive(Debug, Clone)]
pub struct PlotSeries {
    pub label: String,
    /// `(x, y)` points with x in [0, 1].
    pub points: Vec<(f64, f64)>,
    /// Optional `(low, high)` band bounds, parallel to `points`.
    pub band: Option<Vec<(f64, f64)>>,
}

/// What to draw: series, reference-curve flags, and a title.
#[derive(Debug, Clone, Default)]
pub struct PlotSpec {
    pub series: Vec<PlotSeries>,
    pub show_identity: bool,
    pub show_square: bool,
    pub show_opposed: bool,
    pub title: String,
}

fn px(x: f64) -> f64 {
    MARGIN_LEFT + x * (WIDTH - MARGIN_LEFT - MARGIN_RIGHT)
}

fn py(y: f64) -> f64 {
    HEIGHT - MARGIN_BOTTOM - y * (HEIGHT - MARGIN_TOP - MARGIN_BOTTOM)
}

fn coord(v: f64) -> String {
    format!("{v:.2}")
}

fn downsample(points: &[(f64, f64)]) -> Vec<(f64, f64)> {
    if points.len() <= MAX_POINTS {
        return points.to_vec();
    }
    let step = points.len().div_ceil(MAX_POINTS);
    let mut out: Vec<(f64, f64)> = points.iter().copied().step_by(step).collect();
    if out.last() != points.last() {
        out.push(*points.last().unwrap());
    }
    out
}

fn polyline_path(points: &[(f64, f64)]) -> String {
    let mut s = String::new();
    for (x, y) in points {
        if !s.is_empty() {
            s.push(' ');
        }
        let _ = write!(s, "{},{}", coord(px(*x)), coord(py(*y)));
    }
    s
}

/// Renders the plot as a standalone SVG document.
pub fn emit_svg(spec: &PlotSpec) -> Result<String> {
    if spec.series.is_empty() {
        return Err(Error::InvalidParameter("empty curve list".into()));
    }
    for series in &spec.series {
        for (x, _) in &series.points {
            if !(0.0..=1.0).contains(x) {
                return Err(Error::InvalidParameter(format!(
                    "curve {:?} has x = {x} outside [0, 1]",
                    series.label
                )));
            }
        }
    }

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">"
    );
    let _ = writeln!(svg, "<rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>");

    // Axes with ticks every 0.25.
    let _ = writeln!(
        svg,
        "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>",
        coord(px(0.0)),
        coord(py(1.0)),
        coord(px(1.0) - px(0.0)),
        coord(py(0.0) - py(1.0))
    );
    for i in 0..=4 {
        let t = i as f64 / 4.0;
        let label = format!("{t:.2}");
        let _ = writeln!(
            svg,
            "<line x1=\"{x}\" y1=\"{y0}\" x2=\"{x}\" y2=\"{y1}\" stroke=\"black\"/>",
            x = coord(px(t)),
            y0 = coord(py(0.0)),
            y1 = coord(py(0.0) + 5.0)
        );
        let _ = writeln!(
            svg,
            "<text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">{label}</text>",
            coord(px(t)),
            coord(py(0.0) + 20.0)
        );
        let _ = writeln!(
            svg,
            "<line x1=\"{x0}\" y1=\"{y}\" x2=\"{x1}\" y2=\"{y}\" stroke=\"black\"/>",
            x0 = coord(px(0.0) - 5.0),
            x1 = coord(px(0.0)),
            y = coord(py(t))
        );
        let _ = writeln!(
            svg,
            "<text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"end\">{label}</text>",
            coord(px(0.0) - 8.0),
            coord(py(t) + 4.0)
        );
    }
    let _ = writeln!(
        svg,
        "<text x=\"{}\" y=\"{}\" font-size=\"14\" text-anchor=\"middle\">x</text>",
        coord((px(0.0) + px(1.0)) / 2.0),
        coord(HEIGHT - 15.0)
    );
    let _ = writeln!(
        svg,
        "<text x=\"18\" y=\"{}\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 18 {y})\">CCC</text>",
        coord((py(0.0) + py(1.0)) / 2.0),
        y = coord((py(0.0) + py(1.0)) / 2.0)
    );
    if !spec.title.is_empty() {
        let _ = writeln!(
            svg,
            "<text x=\"{}\" y=\"28\" font-size=\"16\" text-anchor=\"middle\">{}</text>",
            coord(WIDTH / 2.0),
            escape_text(&spec.title)
        );
    }

    // Reference curves under the data.
    let grid: Vec<f64> = (0..=200).map(|i| i as f64 / 200.0).collect();
    let mut legend: Vec<(String, &str, &str)> = Vec::new();
    if spec.show_identity {
        let pts: Vec<(f64, f64)> = grid.iter().map(|&x| (x, x)).collect();
        let _ = writeln!(
            svg,
            "<polyline points=\"{}\" fill=\"none\" stroke=\"#444444\" stroke-dasharray=\"6,4\"/>",
            polyline_path(&pts)
        );
        legend.push(("identity".into(), "#444444", "6,4"));
    }
    if spec.show_square {
        let pts: Vec<(f64, f64)> = grid.iter().map(|&x| (x, x * x)).collect();
        let _ = writeln!(
            svg,
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{SQUARE_COLOR}\"/>",
            polyline_path(&pts)
        );
        legend.push(("x^2".into(), SQUARE_COLOR, ""));
    }
    if spec.show_opposed {
        let pts: Vec<(f64, f64)> = grid
            .iter()
            .map(|&x| (x, (2.0 * x - 1.0).max(0.0)))
            .collect();
        let _ = writeln!(
            svg,
            "<polyline points=\"{}\" fill=\"none\" stroke=\"#777777\" stroke-dasharray=\"2,3\"/>",
            polyline_path(&pts)
        );
        legend.push(("max(0, 2x-1)".into(), "#777777", "2,3"));
    }

    for (idx, series) in spec.series.iter().enumerate() {
        let color = SERIES_COLORS[idx % SERIES_COLORS.len()];
        let points = downsample(&series.points);
        if let Some(band) = &series.band {
            // Polygon ring: upper bound left to right, lower bound back.
            let upper: Vec<(f64, f64)> = series
                .points
                .iter()
                .zip(band)
                .map(|(&(x, _), &(_, hi))| (x, hi.min(1.0)))
                .collect();
            let lower: Vec<(f64, f64)> = series
                .points
                .iter()
                .zip(band)
                .map(|(&(x, _), &(lo, _))| (x, lo.max(0.0)))
                .collect();
            let mut ring = downsample(&upper);
            let mut back = downsample(&lower);
            back.reverse();
            ring.extend(back);
            let _ = writeln!(
                svg,
                "<polygon points=\"{}\" fill=\"{color}\" fill-opacity=\"0.2\" stroke=\"none\"/>",
                polyline_path(&ring)
            );
        }
        let _ = writeln!(
            svg,
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\"/>",
            polyline_path(&points)
        );
        legend.push((series.label.clone(), color, ""));
    }

    // Legend box in the upper-left interior.
    let lx = px(0.03);
    let mut ly = py(1.0) + 16.0;
    for (label, color, dash) in &legend {
        let dash_attr = if dash.is_empty() {
            String::new()
        } else {
            format!(" stroke-dasharray=\"{dash}\"")
        };
        let _ = writeln!(
            svg,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{color}\" stroke-width=\"2\"{dash_attr}/>",
            coord(lx),
            coord(ly - 4.0),
            coord(lx + 28.0),
            coord(ly - 4.0)
        );
        let _ = writeln!(
            svg,
            "<text x=\"{}\" y=\"{}\" font-size=\"12\">{}</text>",
            coord(lx + 34.0),
            coord(ly),
            escape_text(label)
        );
        ly += 18.0;
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}

fn escape_text(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
