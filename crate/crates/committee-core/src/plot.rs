//! Static SVG charts for experiment summaries.
//!
//! Two chart kinds cover the experiment outputs: grouped bar charts with
//! standard-deviation whiskers for absolute scores, and line charts with
//! markers and whiskers for score trends over a numeric axis (such as a
//! per-voter query budget). Rendering is deterministic: the same input
//! always produces byte-identical SVG. No display or interaction, only
//! files.

use std::fmt::Write as _;

use crate::error::{Error, Result};

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 420.0;
const MARGIN_LEFT: f64 = 62.0;
const MARGIN_RIGHT: f64 = 150.0;
const MARGIN_TOP: f64 = 42.0;
const MARGIN_BOTTOM: f64 = 52.0;

/// Fill colors assigned to bars and series in order, cycling when exhausted.
pub const PALETTE: [&str; 8] = [
    "#4477aa", "#ee6677", "#228833", "#ccbb44", "#66ccee", "#aa3377", "#bbbbbb", "#222222",
];

/// One bar: a labeled mean with a standard-deviation whisker.
#[derive(Debug, Clone)]
pub struct Bar {
    /// Legend label; bars sharing a position across groups share a color.
    pub label: String,
    /// Bar height in data units.
    pub mean: f64,
    /// Whisker half-length; zero draws no whisker.
    pub sd: f64,
}

/// A cluster of bars sharing one axis label.
#[derive(Debug, Clone)]
pub struct BarGroup {
    /// Label drawn under the cluster.
    pub label: String,
    /// Bars drawn left to right.
    pub bars: Vec<Bar>,
}

/// One point of a line series.
#[derive(Debug, Clone)]
pub struct LinePoint {
    /// Horizontal position in data units.
    pub x: f64,
    /// Vertical position in data units.
    pub mean: f64,
    /// Whisker half-length; zero draws no whisker.
    pub sd: f64,
}

/// A labeled polyline with markers and whiskers.
#[derive(Debug, Clone)]
pub struct LineSeries {
    /// Legend label.
    pub label: String,
    /// Points drawn in the order given.
    pub points: Vec<LinePoint>,
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for ch in text.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            other => out.push(other),
        }
    }
    out
}

fn coord(v: f64) -> String {
    format!("{v:.2}")
}

fn tick_label(v: f64) -> String {
    let text = format!("{v:.4}");
    let trimmed = text.trim_end_matches('0').trim_end_matches('.');
    if trimmed.is_empty() || trimmed == "-0" {
        "0".to_string()
    } else {
        trimmed.to_string()
    }
}

fn nice_step(range: f64, target: usize) -> f64 {
    let raw = range / target.max(1) as f64;
    let magnitude = 10f64.powf(raw.log10().floor());
    let normalized = raw / magnitude;
    let factor = if normalized <= 1.0 {
        1.0
    } else if normalized <= 2.0 {
        2.0
    } else if normalized <= 5.0 {
        5.0
    } else {
        10.0
    };
    factor * magnitude
}

fn ticks(min: f64, max: f64, target: usize) -> Vec<f64> {
    let step = nice_step(max - min, target);
    let mut tick = (min / step).ceil() * step;
    let mut out = Vec::new();
    while tick <= max + step * 1e-9 {
        // Snap values like 0.30000000000000004 back onto the grid.
        out.push((tick / step).round() * step);
        tick += step;
    }
    out
}

struct Frame {
    y_min: f64,
    y_max: f64,
}

impl Frame {
    fn y(&self, value: f64) -> f64 {
        let span = self.y_max - self.y_min;
        let unit = (value - self.y_min) / span;
        HEIGHT - MARGIN_BOTTOM - unit * (HEIGHT - MARGIN_TOP - MARGIN_BOTTOM)
    }
}

fn open_svg(out: &mut String, title: &str) {
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\" font-family=\"sans-serif\" font-size=\"12\">"
    );
    let _ = writeln!(
        out,
        "<rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>"
    );
    let _ = writeln!(
        out,
        "<text x=\"{}\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">{}</text>",
        coord(WIDTH / 2.0),
        escape(title)
    );
}

fn draw_y_axis(out: &mut String, frame: &Frame, y_label: &str) {
    let x0 = coord(MARGIN_LEFT);
    let x1 = coord(WIDTH - MARGIN_RIGHT);
    for tick in ticks(frame.y_min, frame.y_max, 6) {
        let y = coord(frame.y(tick));
        let _ = writeln!(
            out,
            "<line x1=\"{x0}\" y1=\"{y}\" x2=\"{x1}\" y2=\"{y}\" stroke=\"#dddddd\"/>"
        );
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{y}\" text-anchor=\"end\" dominant-baseline=\"middle\">{}</text>",
            coord(MARGIN_LEFT - 8.0),
            tick_label(tick)
        );
    }
    let _ = writeln!(
        out,
        "<line x1=\"{x0}\" y1=\"{}\" x2=\"{x0}\" y2=\"{}\" stroke=\"black\"/>",
        coord(MARGIN_TOP),
        coord(HEIGHT - MARGIN_BOTTOM)
    );
    let _ = writeln!(
        out,
        "<line x1=\"{x0}\" y1=\"{}\" x2=\"{x1}\" y2=\"{}\" stroke=\"black\"/>",
        coord(HEIGHT - MARGIN_BOTTOM),
        coord(HEIGHT - MARGIN_BOTTOM)
    );
    let _ = writeln!(
        out,
        "<text x=\"16\" y=\"{}\" text-anchor=\"middle\" transform=\"rotate(-90 16 {})\">{}</text>",
        coord(HEIGHT / 2.0),
        coord(HEIGHT / 2.0),
        escape(y_label)
    );
}

fn draw_whisker(out: &mut String, frame: &Frame, x: f64, mean: f64, sd: f64) {
    if sd <= 0.0 {
        return;
    }
    let lo = coord(frame.y(mean - sd));
    let hi = coord(frame.y(mean + sd));
    let xc = coord(x);
    let cap_left = coord(x - 4.0);
    let cap_right = coord(x + 4.0);
    let _ = writeln!(
        out,
        "<line x1=\"{xc}\" y1=\"{hi}\" x2=\"{xc}\" y2=\"{lo}\" stroke=\"black\"/>"
    );
    for y in [hi, lo] {
        let _ = writeln!(
            out,
            "<line x1=\"{cap_left}\" y1=\"{y}\" x2=\"{cap_right}\" y2=\"{y}\" stroke=\"black\"/>"
        );
    }
}

fn draw_legend(out: &mut String, labels: &[String]) {
    let x = WIDTH - MARGIN_RIGHT + 14.0;
    for (i, label) in labels.iter().enumerate() {
        let y = MARGIN_TOP + 8.0 + i as f64 * 18.0;
        let _ = writeln!(
            out,
            "<rect x=\"{}\" y=\"{}\" width=\"10\" height=\"10\" fill=\"{}\"/>",
            coord(x),
            coord(y - 9.0),
            PALETTE[i % PALETTE.len()]
        );
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\">{}</text>",
            coord(x + 15.0),
            coord(y),
            escape(label)
        );
    }
}

fn bar_labels(groups: &[BarGroup]) -> Result<Vec<String>> {
    let labels: Vec<String> = groups[0].bars.iter().map(|b| b.label.clone()).collect();
    for group in groups {
        let found: Vec<&String> = group.bars.iter().map(|b| &b.label).collect();
        if found.len() != labels.len() || found.iter().zip(&labels).any(|(a, b)| *a != b) {
            return Err(Error::arg(format!(
                "bar group {:?} does not match the first group's bar labels",
                group.label
            )));
        }
    }
    Ok(labels)
}

/// Renders a grouped bar chart with standard-deviation whiskers.
///
/// Bars rise from zero. Every group must list the same bar labels in the
/// same order; those labels become the legend and the fill colors.
pub fn bar_chart(title: &str, y_label: &str, groups: &[BarGroup]) -> Result<String> {
    if groups.is_empty() || groups.iter().any(|g| g.bars.is_empty()) {
        return Err(Error::arg("bar chart needs at least one group and bar"));
    }
    if let Some(bad) = groups
        .iter()
        .flat_map(|g| &g.bars)
        .find(|b| !b.mean.is_finite() || !b.sd.is_finite() || b.sd < 0.0)
    {
        return Err(Error::arg(format!(
            "bar {:?} has a non-finite mean or invalid spread",
            bad.label
        )));
    }
    let labels = bar_labels(groups)?;
    let top = groups
        .iter()
        .flat_map(|g| &g.bars)
        .map(|b| b.mean + b.sd)
        .fold(0.0f64, f64::max);
    let frame = Frame {
        y_min: 0.0,
        y_max: if top > 0.0 { top * 1.08 } else { 1.0 },
    };

    let mut out = String::new();
    open_svg(&mut out, title);
    draw_y_axis(&mut out, &frame, y_label);

    let plot_width = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let group_width = plot_width / groups.len() as f64;
    let slot = group_width / (labels.len() as f64 + 1.0);
    let bar_width = slot.min(26.0);
    let y_base = frame.y(0.0);
    for (gi, group) in groups.iter().enumerate() {
        let group_left = MARGIN_LEFT + gi as f64 * group_width;
        let cluster = bar_width * group.bars.len() as f64;
        let start = group_left + (group_width - cluster) / 2.0;
        for (bi, bar) in group.bars.iter().enumerate() {
            let x = start + bi as f64 * bar_width;
            let y_top = frame.y(bar.mean);
            let _ = writeln!(
                out,
                "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\"/>",
                coord(x),
                coord(y_top),
                coord(bar_width - 2.0),
                coord(y_base - y_top),
                PALETTE[bi % PALETTE.len()]
            );
            draw_whisker(
                &mut out,
                &frame,
                x + (bar_width - 2.0) / 2.0,
                bar.mean,
                bar.sd,
            );
        }
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>",
            coord(group_left + group_width / 2.0),
            coord(HEIGHT - MARGIN_BOTTOM + 18.0),
            escape(&group.label)
        );
    }
    draw_legend(&mut out, &labels);
    out.push_str("</svg>\n");
    Ok(out)
}

/// Renders a line chart with square markers and standard-deviation
/// whiskers, one polyline per series.
pub fn line_chart(
    title: &str,
    x_label: &str,
    y_label: &str,
    series: &[LineSeries],
) -> Result<String> {
    if series.is_empty() || series.iter().any(|s| s.points.is_empty()) {
        return Err(Error::arg("line chart needs at least one series and point"));
    }
    if let Some(bad) = series.iter().find(|s| {
        s.points
            .iter()
            .any(|p| !p.x.is_finite() || !p.mean.is_finite() || !p.sd.is_finite() || p.sd < 0.0)
    }) {
        return Err(Error::arg(format!(
            "series {:?} has a non-finite point or invalid spread",
            bad.label
        )));
    }
    let points = || series.iter().flat_map(|s| &s.points);
    let x_min = points().map(|p| p.x).fold(f64::INFINITY, f64::min);
    let x_max = points().map(|p| p.x).fold(f64::NEG_INFINITY, f64::max);
    let y_lo = points()
        .map(|p| p.mean - p.sd)
        .fold(f64::INFINITY, f64::min);
    let y_hi = points()
        .map(|p| p.mean + p.sd)
        .fold(f64::NEG_INFINITY, f64::max);
    let y_pad = if y_hi > y_lo {
        0.06 * (y_hi - y_lo)
    } else {
        0.5
    };
    let frame = Frame {
        y_min: y_lo - y_pad,
        y_max: y_hi + y_pad,
    };
    let x_span = if x_max > x_min { x_max - x_min } else { 1.0 };
    let plot_width = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let to_x = |x: f64| MARGIN_LEFT + (x - x_min) / x_span * plot_width;

    let mut out = String::new();
    open_svg(&mut out, title);
    draw_y_axis(&mut out, &frame, y_label);
    for tick in ticks(x_min, x_max, 6) {
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>",
            coord(to_x(tick)),
            coord(HEIGHT - MARGIN_BOTTOM + 18.0),
            tick_label(tick)
        );
    }
    let _ = writeln!(
        out,
        "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>",
        coord(MARGIN_LEFT + plot_width / 2.0),
        coord(HEIGHT - 14.0),
        escape(x_label)
    );

    for (si, line) in series.iter().enumerate() {
        let color = PALETTE[si % PALETTE.len()];
        let path: Vec<String> = line
            .points
            .iter()
            .map(|p| format!("{},{}", coord(to_x(p.x)), coord(frame.y(p.mean))))
            .collect();
        let _ = writeln!(
            out,
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"2\"/>",
            path.join(" ")
        );
        for point in &line.points {
            draw_whisker(&mut out, &frame, to_x(point.x), point.mean, point.sd);
            let _ = writeln!(
                out,
                "<rect x=\"{}\" y=\"{}\" width=\"7\" height=\"7\" fill=\"{color}\"/>",
                coord(to_x(point.x) - 3.5),
                coord(frame.y(point.mean) - 3.5)
            );
        }
    }
    draw_legend(
        &mut out,
        &series.iter().map(|s| s.label.clone()).collect::<Vec<_>>(),
    );
    out.push_str("</svg>\n");
    Ok(out)
}
