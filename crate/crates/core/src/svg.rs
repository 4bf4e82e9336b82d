//! SVG emission for layouts and drawings.
//!
//! The model keeps mathematical orientation (y grows upward); the flip to
//! screen coordinates happens here and only here. Output is deterministic:
//! maps iterate in key order and floats are printed with fixed precision.

use crate::graph::Embedding;
use crate::rat::Rat;
use crate::rectdual::RectLayout;
use crate::ri::PointDrawing;
use std::fmt::Write;

const RD_UNIT: f64 = 72.0;
const RI_SIZE: f64 = 640.0;
const MARGIN: f64 = 24.0;

fn color(v: usize) -> String {
    // spread hues deterministically by vertex id
    format!("hsl({},65%,82%)", (v * 47) % 360)
}

/// One rectangle per vertex, plus a centered label.
pub fn rect_dual_svg(l: &RectLayout) -> String {
    let w = (&l.bbox.x_hi - &l.bbox.x_lo).to_f64() * RD_UNIT;
    let h = (&l.bbox.y_hi - &l.bbox.y_lo).to_f64() * RD_UNIT;
    let flip = |y: &Rat| (l.bbox.y_hi.to_f64() - y.to_f64()) * RD_UNIT + MARGIN;
    let sx = |x: &Rat| (x.to_f64() - l.bbox.x_lo.to_f64()) * RD_UNIT + MARGIN;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{:.1}" height="{:.1}" viewBox="0 0 {:.1} {:.1}">"#,
        w + 2.0 * MARGIN,
        h + 2.0 * MARGIN,
        w + 2.0 * MARGIN,
        h + 2.0 * MARGIN
    );
    for (v, r) in &l.rects {
        let (x0, y1) = (sx(&r.x_lo), flip(&r.y_lo));
        let (x1, y0) = (sx(&r.x_hi), flip(&r.y_hi));
        let _ = writeln!(
            out,
            r#"  <rect x="{x0:.2}" y="{y0:.2}" width="{:.2}" height="{:.2}" fill="{}" stroke="black" stroke-width="1"/>"#,
            x1 - x0,
            y1 - y0,
            color(*v)
        );
        let _ = writeln!(
            out,
            r#"  <text x="{:.2}" y="{:.2}" font-size="13" text-anchor="middle" dominant-baseline="middle">{v}</text>"#,
            (x0 + x1) / 2.0,
            (y0 + y1) / 2.0
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Straight-line drawing: edges of `g - e`, vertex dots and labels, and
/// optionally the closed influence rectangle of every edge.
pub fn ri_svg(g: &Embedding, e: (usize, usize), p: &PointDrawing, show_rects: bool) -> String {
    let e = (e.0.min(e.1), e.0.max(e.1));
    let xs: Vec<f64> = p.points.values().map(|(x, _)| x.to_f64()).collect();
    let ys: Vec<f64> = p.points.values().map(|(_, y)| y.to_f64()).collect();
    let (min_x, max_x) = bounds(&xs);
    let (min_y, max_y) = bounds(&ys);
    let span = (max_x - min_x).max(max_y - min_y).max(1e-9);
    let scale = RI_SIZE / span;
    let sx = |x: &Rat| (x.to_f64() - min_x) * scale + MARGIN;
    let sy = |y: &Rat| (max_y - y.to_f64()) * scale + MARGIN;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{:.1}" height="{:.1}">"#,
        (max_x - min_x) * scale + 2.0 * MARGIN,
        (max_y - min_y) * scale + 2.0 * MARGIN
    );
    let edges: Vec<(usize, usize)> = g.edges().filter(|&(u, v)| (u, v) != e).collect();
    if show_rects {
        for &(u, v) in &edges {
            let (pu, pv) = (&p.points[&u], &p.points[&v]);
            let x0 = sx(&Rat::min(&pu.0, &pv.0));
            let x1 = sx(&Rat::max(&pu.0, &pv.0));
            let y0 = sy(&Rat::max(&pu.1, &pv.1));
            let y1 = sy(&Rat::min(&pu.1, &pv.1));
            let _ = writeln!(
                out,
                r##"  <rect x="{x0:.2}" y="{y0:.2}" width="{:.2}" height="{:.2}" fill="none" stroke="#99bbcc" stroke-width="0.6" stroke-dasharray="3 2"/>"##,
                x1 - x0,
                y1 - y0
            );
        }
    }
    for &(u, v) in &edges {
        let (pu, pv) = (&p.points[&u], &p.points[&v]);
        let _ = writeln!(
            out,
            r#"  <line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black" stroke-width="1.2"/>"#,
            sx(&pu.0),
            sy(&pu.1),
            sx(&pv.0),
            sy(&pv.1)
        );
    }
    for (v, (x, y)) in &p.points {
        let _ = writeln!(
            out,
            r#"  <circle cx="{:.2}" cy="{:.2}" r="4" fill="{}" stroke="black" stroke-width="1"/>"#,
            sx(x),
            sy(y),
            color(*v)
        );
        let _ = writeln!(
            out,
            r#"  <text x="{:.2}" y="{:.2}" font-size="12" text-anchor="start">{v}</text>"#,
            sx(x) + 6.0,
            sy(y) - 6.0
        );
    }
    out.push_str("</svg>\n");
    out
}

fn bounds(values: &[f64]) -> (f64, f64) {
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    (min, max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::order::compute_31_ordering;

    #[test]
    fn emits_well_formed_svg() {
        let g = fixtures::octahedron();
        let o = compute_31_ordering(&g).unwrap();
        let l = crate::rectdual::build_rect_dual(&g, &o).unwrap();
        let svg = rect_dual_svg(&l);
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
        assert_eq!(svg.matches("<rect").count(), 6);

        let p = crate::ri::build_ri_drawing(&g, &o).unwrap();
        let svg = ri_svg(&g, g.base_edge(), &p, true);
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches("<circle").count(), 6);
        assert_eq!(svg.matches("<line").count(), 11);

        // deterministic bytes
        assert_eq!(svg, ri_svg(&g, g.base_edge(), &p, true));
    }
}
