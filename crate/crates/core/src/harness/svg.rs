//! Minimal log-scale line charts of error against stencil half-width.

use std::fmt::Write;

use crate::stencils::Method;

use super::sweep::SweepResult;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 440.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 130.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 50.0;
/// Exact zeros are drawn at this level.
const FLOOR: f64 = 1e-17;

const COLORS: [&str; 7] = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf"];

fn color(method: Method) -> &'static str {
    let i = Method::ALL.iter().position(|&m| m == method).unwrap_or(0);
    COLORS[i % COLORS.len()]
}

/// Series of `(M, log₁₀ error)` per method, in first-appearance order, ok cells only.
pub fn series(results: &[SweepResult]) -> Vec<(Method, Vec<(f64, f64)>)> {
    let mut out: Vec<(Method, Vec<(f64, f64)>)> = Vec::new();
    for r in results.iter().filter(|r| r.is_ok()) {
        let y = r.error.max(FLOOR).log10();
        match out.iter_mut().find(|(m, _)| *m == r.method) {
            Some((_, pts)) => pts.push((r.m as f64, y)),
            None => out.push((r.method, vec![(r.m as f64, y)])),
        }
    }
    for (_, pts) in &mut out {
        pts.sort_by(|a, b| a.0.total_cmp(&b.0));
    }
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Renders a standalone SVG document; cells that are not ok are left out.
pub fn render_svg(results: &[SweepResult]) -> String {
    let data = series(results);
    let pts = data.iter().flat_map(|(_, p)| p.iter());
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for &(x, y) in pts {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    if !x0.is_finite() {
        (x0, x1, y0, y1) = (0.0, 1.0, 0.0, 1.0);
    }
    if x1 <= x0 {
        x1 = x0 + 1.0;
    }
    let (y0, y1) = (y0.floor(), y1.ceil().max(y0.floor() + 1.0));
    let pw = WIDTH - LEFT - RIGHT;
    let ph = HEIGHT - TOP - BOTTOM;
    let sx = |x: f64| LEFT + (x - x0) / (x1 - x0) * pw;
    let sy = |y: f64| TOP + (y1 - y) / (y1 - y0) * ph;

    let mut s = String::new();
    let title = results.first().map(|r| r.experiment.name()).unwrap_or("");
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(s, r#"<text x="{}" y="22" text-anchor="middle" font-size="14">{}</text>"#, LEFT + pw / 2.0, escape(title));
    let _ = writeln!(
        s,
        r#"<rect x="{LEFT}" y="{TOP}" width="{pw}" height="{ph}" fill="none" stroke="black"/>"#
    );

    // decade ticks, thinned to at most ~10 labels
    let decades = (y1 - y0) as i64;
    let step = ((decades as f64) / 10.0).ceil().max(1.0) as i64;
    let mut e = y0 as i64;
    while e <= y1 as i64 {
        let y = sy(e as f64);
        let _ = writeln!(s, r##"<line x1="{LEFT}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="#ddd"/>"##, LEFT + pw);
        let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}" text-anchor="end">1e{e}</text>"#, LEFT - 6.0, y + 4.0);
        e += step;
    }
    let xticks = 6;
    for i in 0..=xticks {
        let xv = x0 + (x1 - x0) * i as f64 / xticks as f64;
        let x = sx(xv);
        let _ = writeln!(s, r#"<line x1="{x:.2}" y1="{:.2}" x2="{x:.2}" y2="{:.2}" stroke="black"/>"#, TOP + ph, TOP + ph + 5.0);
        let _ = writeln!(s, r#"<text x="{x:.2}" y="{:.2}" text-anchor="middle">{}</text>"#, TOP + ph + 18.0, xv.round());
    }
    let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">M</text>"#, LEFT + pw / 2.0, HEIGHT - 10.0);
    let _ = writeln!(
        s,
        r#"<text x="16" y="{:.2}" text-anchor="middle" transform="rotate(-90 16 {:.2})">error</text>"#,
        TOP + ph / 2.0,
        TOP + ph / 2.0
    );

    for (i, (method, pts)) in data.iter().enumerate() {
        let c = color(*method);
        let path: Vec<String> = pts.iter().map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y))).collect();
        let _ = writeln!(s, r#"<polyline fill="none" stroke="{c}" stroke-width="1.5" points="{}"/>"#, path.join(" "));
        for &(x, y) in pts {
            let _ = writeln!(s, r#"<circle cx="{:.2}" cy="{:.2}" r="2.5" fill="{c}"/>"#, sx(x), sy(y));
        }
        let ly = TOP + 14.0 + 18.0 * i as f64;
        let lx = LEFT + pw + 12.0;
        let _ = writeln!(s, r#"<line x1="{lx:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{c}" stroke-width="2"/>"#, lx + 22.0);
        let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}">{}</text>"#, lx + 28.0, ly + 4.0, escape(method.name()));
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::CellStatus;
    use crate::problems::Experiment;

    fn r(method: Method, m: usize, error: f64, status: CellStatus) -> SweepResult {
        SweepResult {
            experiment: Experiment::DiffSmallK,
            method,
            m,
            param: None,
            error,
            cpu_weights_s: 0.0,
            cpu_solve_s: 0.0,
            status,
        }
    }

    #[test]
    fn series_groups_and_logs() {
        let rows = [
            r(Method::Fd, 10, 1e-3, CellStatus::Ok),
            r(Method::Fd, 5, 1e-1, CellStatus::Ok),
            r(Method::Sinc, 5, 0.0, CellStatus::Ok),
            r(Method::Sinc, 10, f64::NAN, CellStatus::Nan),
        ];
        let s = series(&rows);
        assert_eq!(s.len(), 2);
        assert_eq!(s[0].0, Method::Fd);
        assert_eq!(s[0].1, vec![(5.0, -1.0), (10.0, -3.0)]);
        assert_eq!(s[1].1, vec![(5.0, -17.0)]);
    }

    #[test]
    fn document_has_one_polyline_per_method() {
        let rows = [
            r(Method::Fd, 1, 1e-1, CellStatus::Ok),
            r(Method::Fd, 2, 1e-2, CellStatus::Ok),
            r(Method::DscRsk, 1, 1e-2, CellStatus::Ok),
            r(Method::DscRsk, 2, 1e-6, CellStatus::Ok),
        ];
        let svg = render_svg(&rows);
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<polyline").count(), 2);
        assert!(svg.contains(">DSC-RSK<"));
        assert!(svg.contains(">1e-6<"));
        assert!(svg.contains(">1e-1<"));
    }

    #[test]
    fn all_failed_cells_still_render() {
        let svg = render_svg(&[r(Method::Fd, 1, f64::NAN, CellStatus::Nan)]);
        assert!(svg.contains("</svg>"));
        assert_eq!(svg.matches("<polyline").count(), 0);
    }
}
