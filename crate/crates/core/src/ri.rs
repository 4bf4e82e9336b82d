//! Weak closed rectangle-of-influence drawings.
//!
//! A plane straight-line drawing of `G - (u1,u2)` in which, for every edge
//! `(u,v)`, the closed axis-aligned rectangle spanned by the two endpoints
//! (possibly degenerate to a segment) contains no other vertex point. Other
//! edges may pass through the rectangle; that is the "weak" part of the
//! model.
//!
//! The construction replays a canonical ordering, keeping the outer chain
//! of the current prefix strictly increasing in x and strictly decreasing
//! in y. A singleton lands midway between its two rightmost attachments in
//! x and midway between its two leftmost attachments in y; a fan spreads by
//! convex interpolation between its apex and the chain vertices flanking
//! the gap.

use crate::chain;
use crate::error::{Error, Result};
use crate::graph::Embedding;
use crate::order::CanonicalOrdering;
use crate::rat::Rat;
use crate::report::VerifyReport;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// Exact point per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointDrawing {
    pub points: BTreeMap<usize, (Rat, Rat)>,
}

impl PointDrawing {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("drawing serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<PointDrawing> {
        serde_json::from_str(s)
            .map_err(|e| crate::error::wrap_parse_error(e, "structural error: ", Error::Structure))
    }
}

/// Builds the drawing of `g - (u1,u2)` from the ordering.
pub fn build_ri_drawing(g: &Embedding, o: &CanonicalOrdering) -> Result<PointDrawing> {
    Ok(build_ri_drawing_traced(g, o)?.0)
}

/// As [`build_ri_drawing`], also returning the outer chain after each
/// insertion step (the initial chain first), so callers can audit the
/// monotonicity invariant directly.
pub fn build_ri_drawing_traced(
    g: &Embedding,
    o: &CanonicalOrdering,
) -> Result<(PointDrawing, Vec<Vec<usize>>)> {
    let [u1, u2, z] = o.base();
    let mut points: BTreeMap<usize, (Rat, Rat)> = BTreeMap::new();
    points.insert(u1, (Rat::int(0), Rat::int(2)));
    points.insert(z, (Rat::int(1), Rat::int(1)));
    points.insert(u2, (Rat::int(2), Rat::int(0)));
    let mut chain_vertices = vec![u1, z, u2];
    let mut chains = vec![chain_vertices.clone()];

    let top_cell = [o.top()];
    for cell in o
        .middle()
        .iter()
        .map(|s| s.vertices())
        .chain(std::iter::once(&top_cell[..]))
    {
        let (a, b) = chain::attachment_range(g, &chain_vertices, cell)?;
        let x = |idx: usize| points[&chain_vertices[idx]].0.clone();
        let y = |idx: usize| points[&chain_vertices[idx]].1.clone();
        if cell.len() == 1 {
            let px = Rat::mid(&x(b - 1), &x(b));
            let py = Rat::mid(&y(a), &y(a + 1));
            points.insert(cell[0], (px, py));
        } else {
            if b != a + 2 {
                return Err(Error::InvalidOrdering(format!(
                    "fan cell {cell:?} attaches on span [{a},{b}], expected width 2"
                )));
            }
            let f = cell.len() as i64;
            let (apex_x, apex_y) = (x(a + 1), y(a + 1));
            let dx = &x(b) - &apex_x;
            let dy = &y(a) - &apex_y;
            for (h, &v) in cell.iter().enumerate() {
                let h = h as i64 + 1;
                let px = &apex_x + &(&Rat::new(h, f + 1) * &dx);
                let py = &apex_y + &(&Rat::new(f - h + 1, f + 1) * &dy);
                points.insert(v, (px, py));
            }
        }
        chain::replace_span(&mut chain_vertices, a, b, cell);
        check_chain_monotone(&points, &chain_vertices)?;
        chains.push(chain_vertices.clone());
    }

    Ok((PointDrawing { points }, chains))
}

fn check_chain_monotone(
    points: &BTreeMap<usize, (Rat, Rat)>,
    chain_vertices: &[usize],
) -> Result<()> {
    for w in chain_vertices.windows(2) {
        let (x0, y0) = &points[&w[0]];
        let (x1, y1) = &points[&w[1]];
        if x0 >= x1 || y0 <= y1 {
            return Err(Error::Internal(format!(
                "outer chain monotonicity violated between {} and {}",
                w[0], w[1]
            )));
        }
    }
    Ok(())
}

/// Sign of the cross product `(q - p) x (r - p)`: positive for a left
/// turn, zero for collinear points.
fn orient(p: &(Rat, Rat), q: &(Rat, Rat), r: &(Rat, Rat)) -> i8 {
    let v = &(&(&q.0 - &p.0) * &(&r.1 - &p.1)) - &(&(&q.1 - &p.1) * &(&r.0 - &p.0));
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// For collinear `p,q,r`: whether `r` lies on the closed segment `pq`.
fn on_segment(p: &(Rat, Rat), q: &(Rat, Rat), r: &(Rat, Rat)) -> bool {
    Rat::min(&p.0, &q.0) <= r.0
        && r.0 <= Rat::max(&p.0, &q.0)
        && Rat::min(&p.1, &q.1) <= r.1
        && r.1 <= Rat::max(&p.1, &q.1)
}

/// Exact verification of the drawing for `g - e`: vertices at distinct
/// points, no two edges meeting outside a shared endpoint, and every
/// edge's closed influence rectangle empty of third vertices.
pub fn verify_ri(g: &Embedding, e: (usize, usize), p: &PointDrawing) -> VerifyReport {
    let mut r = VerifyReport::new("rectangle-of-influence drawing");
    let n = g.n();
    let e = (e.0.min(e.1), e.0.max(e.1));

    let vertices: Vec<usize> = p.points.keys().copied().collect();
    r.check(vertices == (0..n).collect::<Vec<_>>(), || {
        "drawing does not cover exactly the graph's vertices".into()
    });
    if !r.ok() {
        return r;
    }

    let distinct: BTreeSet<&(Rat, Rat)> = p.points.values().collect();
    r.check(distinct.len() == n, || "two vertices share a point".into());

    let edges: Vec<(usize, usize)> = g.edges().filter(|&(u, v)| (u, v) != e).collect();

    // plane drawing: closed segments may meet only at shared endpoints
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if let Some(msg) = segments_conflict(p, (a, b), (c, d)) {
                r.fail(msg);
            } else {
                r.checks += 1;
            }
        }
    }

    // closed influence rectangles are empty
    for &(u, v) in &edges {
        let (pu, pv) = (&p.points[&u], &p.points[&v]);
        let (x_lo, x_hi) = (Rat::min(&pu.0, &pv.0), Rat::max(&pu.0, &pv.0));
        let (y_lo, y_hi) = (Rat::min(&pu.1, &pv.1), Rat::max(&pu.1, &pv.1));
        for w in 0..n {
            if w == u || w == v {
                continue;
            }
            let pw = &p.points[&w];
            r.check(
                !(x_lo <= pw.0 && pw.0 <= x_hi && y_lo <= pw.1 && pw.1 <= y_hi),
                || format!("vertex {w} lies in the closed rectangle of edge ({u},{v})"),
            );
        }
    }
    r
}

/// Violation between two edges, if any: a proper crossing, an endpoint in
/// the other segment's relative interior, or a collinear overlap.
fn segments_conflict(
    p: &PointDrawing,
    (a, b): (usize, usize),
    (c, d): (usize, usize),
) -> Option<String> {
    let shared = [a, b].iter().filter(|v| [c, d].contains(v)).count();
    let (pa, pb, pc, pd) = (&p.points[&a], &p.points[&b], &p.points[&c], &p.points[&d]);
    match shared {
        2 => None, // same edge cannot happen; parallel edges are excluded by simplicity
        1 => {
            // segments sharing one endpoint conflict only when they overlap
            // along a line
            let (s, t1, t2) = if a == c {
                (pa, pb, pd)
            } else if a == d {
                (pa, pb, pc)
            } else if b == c {
                (pb, pa, pd)
            } else {
                (pb, pa, pc)
            };
            if orient(s, t1, t2) == 0 {
                // same direction from the shared point means positive overlap
                let same_dir = (&(&t1.0 - &s.0) * &(&t2.0 - &s.0)).is_positive()
                    || (&(&t1.1 - &s.1) * &(&t2.1 - &s.1)).is_positive();
                if same_dir {
                    return Some(format!(
                        "edges ({a},{b}) and ({c},{d}) overlap along a line"
                    ));
                }
            }
            None
        }
        _ => {
            let d1 = orient(pc, pd, pa);
            let d2 = orient(pc, pd, pb);
            let d3 = orient(pa, pb, pc);
            let d4 = orient(pa, pb, pd);
            if d1 * d2 < 0 && d3 * d4 < 0 {
                return Some(format!("edges ({a},{b}) and ({c},{d}) cross"));
            }
            for (o, seg, pt, name) in [
                (d1, (pc, pd), pa, a),
                (d2, (pc, pd), pb, b),
                (d3, (pa, pb), pc, c),
                (d4, (pa, pb), pd, d),
            ] {
                if o == 0 && on_segment(seg.0, seg.1, pt) {
                    return Some(format!(
                        "vertex {name} lies on a non-incident edge (({a},{b}) vs ({c},{d}))"
                    ));
                }
            }
            None
        }
    }
}
