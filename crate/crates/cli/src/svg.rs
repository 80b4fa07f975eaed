//! Diagnostic panel sheet for an audit report.
//!
//! Ten panels on a fixed 2 × 5 grid: colormap and grayscale strips, the J′
//! and ΔE profiles, the (a′, b′) path, the verdicts, and one strip plus ΔE
//! curve per CVD variant. Every number is written with a fixed number of
//! decimals so equal reports give byte-identical files.

use std::fmt::Write;

use camcmap::cvd::{simulate_cvd, to_grayscale};
use camcmap::io::hex_string;
use camcmap::metrics::{cvd_variants, jab_points, MetricProfile};
use camcmap::{AuditReport, Cam02Ucs, Colormap, Result, SrgbColor};

pub const WIDTH: f64 = 1000.0;
pub const PANEL_WIDTH: f64 = 500.0;
pub const PANEL_HEIGHT: f64 = 220.0;
pub const ROWS: usize = 5;
/// Strips never use more rectangles than this.
pub const MAX_STRIP_RECTS: usize = 256;

const MARGIN_LEFT: f64 = 50.0;
const MARGIN_RIGHT: f64 = 20.0;
const TITLE_Y: f64 = 22.0;
const PLOT_TOP: f64 = 36.0;
const PLOT_BOTTOM: f64 = 190.0;

fn plot_width() -> f64 {
    PANEL_WIDTH - MARGIN_LEFT - MARGIN_RIGHT
}

/// Escapes text for element content and attribute values.
pub fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for ch in text.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c if (c as u32) < 0x20 && c != '\n' && c != '\t' => out.push('\u{FFFD}'),
            c => out.push(c),
        }
    }
    out
}

fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    // Avoid "-0.000", which would differ from "0.000" for equal geometry.
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        "0.000".to_string()
    } else {
        s
    }
}

struct Panel {
    body: String,
}

impl Panel {
    fn new(title: &str) -> Self {
        let mut body = String::new();
        writeln!(
            body,
            r##"<rect class="frame" x="0.5" y="0.5" width="{}" height="{}" fill="none" stroke="#cccccc"/>"##,
            num(PANEL_WIDTH - 1.0),
            num(PANEL_HEIGHT - 1.0)
        )
        .unwrap();
        writeln!(
            body,
            r#"<text x="{}" y="{}" font-size="14" font-weight="bold">{}</text>"#,
            num(MARGIN_LEFT),
            num(TITLE_Y),
            escape(title)
        )
        .unwrap();
        Self { body }
    }

    fn strip(&mut self, samples: &[SrgbColor], top: f64, height: f64) {
        let count = samples.len().min(MAX_STRIP_RECTS);
        let w = plot_width() / count as f64;
        for k in 0..count {
            // Nearest sample when the map is longer than the strip.
            let idx = if count == samples.len() {
                k
            } else {
                (2 * k * (samples.len() - 1) + (count - 1)) / (2 * (count - 1))
            };
            writeln!(
                self.body,
                r#"<rect x="{}" y="{}" width="{}" height="{}" fill="{}"/>"#,
                num(MARGIN_LEFT + k as f64 * w),
                num(top),
                num(w + 0.01),
                num(height),
                hex_string(samples[idx])
            )
            .unwrap();
        }
    }

    /// Line plot of `values` against their index, with the y axis from
    /// `y_min` to `y_max`.
    fn curve(
        &mut self,
        class: &str,
        values: &[f64],
        y_min: f64,
        y_max: f64,
        top: f64,
        bottom: f64,
        y_label: &str,
    ) {
        let left = MARGIN_LEFT;
        let right = MARGIN_LEFT + plot_width();
        writeln!(
            self.body,
            r#"<line class="baseline" x1="{}" y1="{}" x2="{}" y2="{}" stroke="black"/>"#,
            num(left),
            num(bottom),
            num(right),
            num(bottom)
        )
        .unwrap();
        writeln!(
            self.body,
            r#"<line class="axis" x1="{}" y1="{}" x2="{}" y2="{}" stroke="black"/>"#,
            num(left),
            num(top),
            num(left),
            num(bottom)
        )
        .unwrap();
        for (v, y) in [(y_min, bottom), (y_max, top)] {
            writeln!(
                self.body,
                r#"<text x="{}" y="{}" font-size="10" text-anchor="end">{}</text>"#,
                num(left - 4.0),
                num(y + 3.0),
                num(v)
            )
            .unwrap();
        }
        writeln!(
            self.body,
            r#"<text x="{}" y="{}" font-size="12" text-anchor="middle" transform="rotate(-90 {} {})">{}</text>"#,
            num(14.0),
            num(0.5 * (top + bottom)),
            num(14.0),
            num(0.5 * (top + bottom)),
            escape(y_label)
        )
        .unwrap();
        writeln!(
            self.body,
            r#"<text x="{}" y="{}" font-size="10" text-anchor="middle">sample index</text>"#,
            num(0.5 * (left + right)),
            num(bottom + 16.0)
        )
        .unwrap();

        let span = if y_max > y_min { y_max - y_min } else { 1.0 };
        let step = if values.len() > 1 {
            plot_width() / (values.len() - 1) as f64
        } else {
            0.0
        };
        let points: Vec<String> = values
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let y = bottom - (v - y_min) / span * (bottom - top);
                format!("{},{}", num(left + i as f64 * step), num(y))
            })
            .collect();
        writeln!(
            self.body,
            r##"<polyline class="{}" fill="none" stroke="#1f4e9c" stroke-width="1.2" points="{}"/>"##,
            class,
            points.join(" ")
        )
        .unwrap();
    }

    fn text_lines(&mut self, lines: &[String]) {
        for (i, line) in lines.iter().enumerate() {
            writeln!(
                self.body,
                r#"<text x="{}" y="{}" font-size="12" font-family="monospace">{}</text>"#,
                num(MARGIN_LEFT),
                num(PLOT_TOP + 14.0 + 16.0 * i as f64),
                escape(line)
            )
            .unwrap();
        }
    }
}

fn delta_axis_max(deltas: &[f64]) -> f64 {
    let max = deltas.iter().copied().fold(0.0, f64::max);
    if max > 0.0 {
        max * 1.1
    } else {
        1.0
    }
}

fn verdict_lines(report: &AuditReport) -> Vec<String> {
    let v = &report.verdicts;
    let normal = report.normal();
    let uniformity = normal
        .uniformity_rms
        .map_or_else(|| "n/a".to_string(), |u| format!("{u:.4}"));
    vec![
        format!("perceptuallyUniform  {}", v.perceptually_uniform),
        format!("lightnessMonotone    {}", v.lightness_monotone),
        format!("grayscaleSafe        {}", v.grayscale_safe),
        format!("cvdFriendly          {}", v.cvd_friendly),
        format!("range                {:.3}", normal.range),
        format!("uniformity_rms       {uniformity}"),
        format!("smoothness (rad)     {:.4}", normal.smoothness),
        format!("cvd_consistency      {:.4}", report.cvd_consistency),
    ]
}

fn ab_panel(panel: &mut Panel, samples: &[SrgbColor], points: &[camcmap::JabColor]) {
    let extent = points
        .iter()
        .flat_map(|p| [p.a.abs(), p.b.abs()])
        .fold(0.0, f64::max)
        .max(1.0)
        * 1.1;
    let size = PLOT_BOTTOM - PLOT_TOP;
    let cx = MARGIN_LEFT + 0.5 * plot_width();
    let cy = PLOT_TOP + 0.5 * size;
    let scale = 0.5 * size / extent;
    let px = |a: f64| cx + a * scale;
    let py = |b: f64| cy - b * scale;
    writeln!(
        panel.body,
        r##"<line class="axis" x1="{}" y1="{}" x2="{}" y2="{}" stroke="#999999"/>"##,
        num(cx - 0.5 * size),
        num(cy),
        num(cx + 0.5 * size),
        num(cy)
    )
    .unwrap();
    writeln!(
        panel.body,
        r##"<line class="axis" x1="{}" y1="{}" x2="{}" y2="{}" stroke="#999999"/>"##,
        num(cx),
        num(PLOT_TOP),
        num(cx),
        num(PLOT_BOTTOM)
    )
    .unwrap();
    writeln!(
        panel.body,
        r#"<text x="{}" y="{}" font-size="12">a′</text>"#,
        num(cx + 0.5 * size + 4.0),
        num(cy + 4.0)
    )
    .unwrap();
    writeln!(
        panel.body,
        r#"<text x="{}" y="{}" font-size="12">b′</text>"#,
        num(cx + 4.0),
        num(PLOT_TOP + 10.0)
    )
    .unwrap();
    let line: Vec<String> = points
        .iter()
        .map(|p| format!("{},{}", num(px(p.a)), num(py(p.b))))
        .collect();
    writeln!(
        panel.body,
        r##"<polyline class="ab-path" fill="none" stroke="#555555" stroke-width="0.8" points="{}"/>"##,
        line.join(" ")
    )
    .unwrap();
    let count = points.len().min(MAX_STRIP_RECTS);
    for k in 0..count {
        let idx = if count == points.len() {
            k
        } else {
            (2 * k * (points.len() - 1) + (count - 1)) / (2 * (count - 1))
        };
        writeln!(
            panel.body,
            r#"<circle cx="{}" cy="{}" r="1.6" fill="{}"/>"#,
            num(px(points[idx].a)),
            num(py(points[idx].b)),
            hex_string(samples[idx])
        )
        .unwrap();
    }
}

fn cvd_panel(title: &str, cmap: &Colormap, profile: &MetricProfile) -> Panel {
    let mut p = Panel::new(title);
    p.strip(cmap.samples(), PLOT_TOP, 30.0);
    p.curve(
        "delta-e",
        &profile.deltas,
        0.0,
        delta_axis_max(&profile.deltas),
        PLOT_TOP + 44.0,
        PLOT_BOTTOM,
        "ΔE",
    );
    p
}

/// Renders the panel sheet for `report`, which must come from auditing `cmap`
/// under `ucs`.
pub fn render_svg(report: &AuditReport, cmap: &Colormap, ucs: &Cam02Ucs) -> Result<String> {
    let name = &report.target.name;
    let normal = report.normal();
    let grayscale = to_grayscale(cmap, ucs)?;
    let points = jab_points(cmap, ucs)?;

    let mut panels = Vec::with_capacity(2 * ROWS);

    let mut strip = Panel::new(&format!("{name}: colormap"));
    strip.strip(cmap.samples(), PLOT_TOP, PLOT_BOTTOM - PLOT_TOP);
    panels.push(("colormap", strip));

    let mut gray = Panel::new(&format!("{name}: grayscale"));
    gray.strip(grayscale.samples(), PLOT_TOP, PLOT_BOTTOM - PLOT_TOP);
    panels.push(("grayscale", gray));

    let mut lightness = Panel::new("lightness J′");
    lightness.curve("lightness", &normal.lightness, 0.0, 100.0, PLOT_TOP, PLOT_BOTTOM, "J′");
    panels.push(("lightness", lightness));

    let mut deltas = Panel::new("perceptual derivative ΔE");
    deltas.curve(
        "delta-e",
        &normal.deltas,
        0.0,
        delta_axis_max(&normal.deltas),
        PLOT_TOP,
        PLOT_BOTTOM,
        "ΔE",
    );
    panels.push(("delta-e", deltas));

    let mut ab = Panel::new("chroma path (a′, b′)");
    ab_panel(&mut ab, cmap.samples(), &points);
    panels.push(("ab-path", ab));

    let mut verdicts = Panel::new("verdicts");
    verdicts.text_lines(&verdict_lines(report));
    panels.push(("verdicts", verdicts));

    for spec in cvd_variants(report.conditions.anomaly_severity)? {
        let label = spec.label();
        let profile = report.profile(&label).ok_or_else(|| {
            camcmap::Error::Usage(format!("report has no {label} profile"))
        })?;
        let simulated = simulate_cvd(cmap, spec);
        panels.push(("cvd", cvd_panel(&label, &simulated, profile)));
    }

    let height = PANEL_HEIGHT * ROWS as f64;
    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {} {}" font-family="sans-serif">"#,
        num(WIDTH),
        num(height),
        num(WIDTH),
        num(height)
    )
    .unwrap();
    writeln!(out, "<title>{}</title>", escape(&format!("{name} audit"))).unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    for (i, (kind, panel)) in panels.iter().enumerate() {
        let (col, row) = (i % 2, i / 2);
        writeln!(
            out,
            r#"<g class="panel" data-kind="{kind}" transform="translate({},{})">"#,
            num(col as f64 * PANEL_WIDTH),
            num(row as f64 * PANEL_HEIGHT)
        )
        .unwrap();
        out.push_str(&panel.body);
        writeln!(out, "</g>").unwrap();
    }
    writeln!(out, "</svg>").unwrap();
    Ok(out)
}
