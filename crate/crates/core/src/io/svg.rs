//! Deterministic SVG drawings of chains over the grid.

use std::fmt::Write;

use crate::Chain;

#[derive(Clone, Debug, PartialEq)]
pub struct SvgOptions {
    /// Pixels per grid unit.
    pub scale: f64,
    /// Blank border around the drawing, in grid units.
    pub margin: f64,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions { scale: 32.0, margin: 1.0 }
    }
}

/// Fixed 12-decimal rendering with trailing zeros removed.
fn num(v: f64) -> String {
    let s = format!("{v:.12}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" { "0".to_string() } else { s.to_string() }
}

/// Draws the grid nodes, the chain as a polyline with an arrowhead at its
/// end, and the chain's vertices; vertices off the grid (Steiner points) are
/// hollow.
pub fn render_svg(chain: &Chain, opts: &SvgOptions) -> String {
    let n = chain.n() as f64;
    let pts: Vec<(f64, f64)> = chain.vertices().iter().map(|p| p.to_f64()).collect();
    let (mut min_x, mut min_y, mut max_x, mut max_y) = (0.0f64, 0.0f64, n - 1.0, n - 1.0);
    for &(x, y) in &pts {
        min_x = min_x.min(x);
        min_y = min_y.min(y);
        max_x = max_x.max(x);
        max_y = max_y.max(y);
    }
    let (s, m) = (opts.scale, opts.margin);
    let px = |x: f64| (x - min_x + m) * s;
    // SVG y grows downwards.
    let py = |y: f64| (max_y - y + m) * s;
    let width = (max_x - min_x + 2.0 * m) * s;
    let height = (max_y - min_y + 2.0 * m) * s;
    let r = (s / 10.0).max(1.0);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = num(width),
        h = num(height)
    );
    let _ = writeln!(
        out,
        r#"<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="8" markerHeight="8" orient="auto-start-reverse"><path d="M 0 0 L 10 5 L 0 10 z" fill="black"/></marker></defs>"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(out, r#"<g fill="gray">"#);
    for y in 0..chain.n() {
        for x in 0..chain.n() {
            let _ = writeln!(
                out,
                r#"<circle cx="{}" cy="{}" r="{}"/>"#,
                num(px(x as f64)),
                num(py(y as f64)),
                num(r)
            );
        }
    }
    let _ = writeln!(out, "</g>");
    let points: Vec<String> = pts.iter().map(|&(x, y)| format!("{},{}", num(px(x)), num(py(y)))).collect();
    let _ = writeln!(
        out,
        r#"<polyline points="{}" fill="none" stroke="black" stroke-width="{}" stroke-linejoin="round" marker-end="url(#arrow)"/>"#,
        points.join(" "),
        num(s / 16.0)
    );
    for (p, &(x, y)) in chain.vertices().iter().zip(&pts) {
        let on_grid = p.as_node().is_some_and(|v| v.in_grid(chain.n()));
        let fill = if on_grid { "black" } else { "white" };
        let _ = writeln!(
            out,
            r#"<circle cx="{}" cy="{}" r="{}" fill="{fill}" stroke="black" stroke-width="{}"/>"#,
            num(px(x)),
            num(py(y)),
            num(r * 1.2),
            num(s / 24.0)
        );
    }
    let _ = writeln!(out, "</svg>");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::explicit_chain;

    #[test]
    fn c4_drawing() {
        let c4: Chain = explicit_chain("cycle-c4").unwrap();
        let a = render_svg(&c4, &SvgOptions::default());
        let b = render_svg(&c4, &SvgOptions::default());
        assert_eq!(a, b);
        // 16 grid dots + 7 vertex markers, all hollow since they lie off the grid.
        assert_eq!(a.matches("<circle").count(), 23);
        assert_eq!(a.matches(r#"fill="white" stroke"#).count(), 7);
        // [-1, 4] plus a unit margin on each side at 32 px.
        assert!(a.contains(r#"width="224" height="224""#));
    }

    #[test]
    fn numbers() {
        assert_eq!(num(1.5), "1.5");
        assert_eq!(num(32.0), "32");
        assert_eq!(num(-0.0), "0");
        assert_eq!(num(1.0 / 3.0), "0.333333333333");
    }
}
