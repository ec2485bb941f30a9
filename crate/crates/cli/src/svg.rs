//! Self-contained SVG of `p_N` against its large-N asymptote on a log axis.

use std::fmt::Write;

use gpiq_core::prob::PlotPoint;

const WIDTH: f64 = 760.0;
const HEIGHT: f64 = 480.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 24.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 56.0;

/// Picks a tick step from 1, 2, 5 times a power of ten giving at most `max` ticks.
fn tick_step(span: f64, max: usize) -> f64 {
    let mut scale = 1.0;
    loop {
        for m in [1.0, 2.0, 5.0] {
            let step = m * scale;
            if span / step <= max as f64 {
                return step;
            }
        }
        scale *= 10.0;
    }
}

fn exponent_label(e: i64) -> String {
    if e < 0 {
        format!("\u{2212}{}", -e)
    } else {
        e.to_string()
    }
}

struct Axes {
    x_max: f64,
    y_min: f64,
    y_step: f64,
}

impl Axes {
    fn x(&self, n: f64) -> f64 {
        LEFT + (WIDTH - LEFT - RIGHT) * n / self.x_max
    }

    /// `y` is a base-10 logarithm; 0 sits at the top edge.
    fn y(&self, y: f64) -> f64 {
        TOP + (HEIGHT - TOP - BOTTOM) * y / self.y_min
    }
}

fn polyline(out: &mut String, axes: &Axes, pts: impl Iterator<Item = (f64, f64)>, style: &str) {
    let coords: Vec<String> = pts
        .map(|(n, y)| format!("{:.2},{:.2}", axes.x(n), axes.y(y)))
        .collect();
    let _ = writeln!(
        out,
        r#"<polyline fill="none" {style} points="{}"/>"#,
        coords.join(" ")
    );
}

pub fn render(points: &[PlotPoint]) -> String {
    let lowest = points
        .iter()
        .flat_map(|p| [p.log10_exact, p.log10_asymptotic])
        .fold(0.0f64, f64::min);
    let y_step = tick_step(-lowest.min(-1.0), 8);
    let axes = Axes {
        x_max: points.last().map_or(1.0, |p| p.n as f64).max(1.0),
        y_min: (lowest.min(-1.0) / y_step).floor() * y_step,
        y_step,
    };

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(
        out,
        r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
    let _ = writeln!(
        out,
        r#"<text x="{:.1}" y="22" text-anchor="middle" font-size="14">Probability that all eigenvalues of XY are real</text>"#,
        WIDTH / 2.0
    );

    // y grid, labelled as powers of ten
    let mut tick = 0.0;
    while tick >= axes.y_min - 1e-9 {
        let y = axes.y(tick);
        let _ = writeln!(
            out,
            r##"<line x1="{LEFT}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="#ddd"/>"##,
            WIDTH - RIGHT
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.1}" y="{:.2}" text-anchor="end">10</text><text x="{:.1}" y="{:.2}" font-size="9">{}</text>"#,
            LEFT - 30.0,
            y + 4.0,
            LEFT - 29.0,
            y - 2.0,
            exponent_label(tick as i64)
        );
        tick -= axes.y_step;
    }

    // x ticks
    let x_step = tick_step(axes.x_max, 10);
    let mut n = 0.0;
    while n <= axes.x_max + 1e-9 {
        let x = axes.x(n);
        let base = HEIGHT - BOTTOM;
        let _ = writeln!(
            out,
            r##"<line x1="{x:.2}" y1="{base}" x2="{x:.2}" y2="{:.1}" stroke="#000"/>"##,
            base + 5.0
        );
        let _ = writeln!(
            out,
            r#"<text x="{x:.2}" y="{:.1}" text-anchor="middle">{}</text>"#,
            base + 18.0,
            n as i64
        );
        n += x_step;
    }
    let _ = writeln!(
        out,
        r##"<rect x="{LEFT}" y="{TOP}" width="{:.1}" height="{:.1}" fill="none" stroke="#000"/>"##,
        WIDTH - LEFT - RIGHT,
        HEIGHT - TOP - BOTTOM
    );
    let _ = writeln!(
        out,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">N</text>"#,
        LEFT + (WIDTH - LEFT - RIGHT) / 2.0,
        HEIGHT - 14.0
    );

    polyline(
        &mut out,
        &axes,
        points.iter().map(|p| (p.n as f64, p.log10_asymptotic)),
        r##"stroke="#c0392b" stroke-width="1.5" stroke-dasharray="6 4""##,
    );
    polyline(
        &mut out,
        &axes,
        points.iter().map(|p| (p.n as f64, p.log10_exact)),
        r##"stroke="#1f4e9a" stroke-width="1.5""##,
    );

    let (lx, ly) = (LEFT + 16.0, HEIGHT - BOTTOM - 44.0);
    let _ = writeln!(
        out,
        r##"<line x1="{lx}" y1="{ly}" x2="{:.1}" y2="{ly}" stroke="#1f4e9a" stroke-width="1.5"/><text x="{:.1}" y="{:.1}">exact p(N)</text>"##,
        lx + 28.0,
        lx + 34.0,
        ly + 4.0
    );
    let _ = writeln!(
        out,
        r##"<line x1="{lx}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="#c0392b" stroke-width="1.5" stroke-dasharray="6 4"/><text x="{:.1}" y="{:.1}">(pi/4)^(N^2/2)</text>"##,
        ly + 18.0,
        lx + 28.0,
        ly + 18.0,
        lx + 34.0,
        ly + 22.0
    );
    out.push_str("</svg>\n");
    out
}
