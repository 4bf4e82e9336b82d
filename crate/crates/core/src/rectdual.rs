//! Rectangular duals from a canonical ordering.
//!
//! Given a 4-connected triangulation with the outer edge `e = (u1,u2)` and
//! a canonical ordering, `G - e` is tiled by one axis-aligned rectangle per
//! vertex such that two rectangles share a boundary segment of positive
//! length exactly when the corresponding vertices are adjacent.
//!
//! The construction keeps the rectangles of the current outer chain flush
//! with the top of the bounding box. Each cell raises the chain rectangles
//! outside its attachment span by one unit and drops the new rectangles
//! into the gap this opens: a singleton takes the whole gap, a fan splits
//! the single gap rectangle (its apex's top edge) into equal-width pieces.

use crate::chain;
use crate::error::{Error, Result};
use crate::graph::Embedding;
use crate::order::CanonicalOrdering;
use crate::rat::Rat;
use crate::report::VerifyReport;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Axis-aligned rectangle with exact rational corners.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "RectFile", try_from = "RectFile")]
pub struct Rect {
    pub x_lo: Rat,
    pub y_lo: Rat,
    pub x_hi: Rat,
    pub y_hi: Rat,
}

type RectFile = [Rat; 4];

impl From<Rect> for RectFile {
    fn from(r: Rect) -> RectFile {
        [r.x_lo, r.y_lo, r.x_hi, r.y_hi]
    }
}

impl TryFrom<RectFile> for Rect {
    type Error = Error;
    fn try_from([x_lo, y_lo, x_hi, y_hi]: RectFile) -> Result<Rect> {
        if x_lo >= x_hi || y_lo >= y_hi {
            return Err(Error::Structure(
                "degenerate rectangle: lo corner must be strictly below hi".into(),
            ));
        }
        Ok(Rect {
            x_lo,
            y_lo,
            x_hi,
            y_hi,
        })
    }
}

impl Rect {
    fn new(x_lo: Rat, y_lo: Rat, x_hi: Rat, y_hi: Rat) -> Rect {
        Rect {
            x_lo,
            y_lo,
            x_hi,
            y_hi,
        }
    }

    pub fn width(&self) -> Rat {
        &self.x_hi - &self.x_lo
    }

    pub fn height(&self) -> Rat {
        &self.y_hi - &self.y_lo
    }

    pub fn area(&self) -> Rat {
        &self.width() * &self.height()
    }

    fn contains_rect(&self, other: &Rect) -> bool {
        self.x_lo <= other.x_lo
            && other.x_hi <= self.x_hi
            && self.y_lo <= other.y_lo
            && other.y_hi <= self.y_hi
    }
}

/// Overlap length of two closed 1-d intervals (zero or negative means
/// disjoint interiors).
fn overlap(lo1: &Rat, hi1: &Rat, lo2: &Rat, hi2: &Rat) -> Rat {
    &Rat::min(hi1, hi2) - &Rat::max(lo1, lo2)
}

/// A rectangular dual: one rectangle per vertex, tiling `bbox`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RectLayout {
    pub bbox: Rect,
    pub rects: BTreeMap<usize, Rect>,
}

impl RectLayout {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("layout serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<RectLayout> {
        serde_json::from_str(s)
            .map_err(|e| crate::error::wrap_parse_error(e, "structural error: ", Error::Structure))
    }
}

/// Builds the rectangular dual of `g - (u1,u2)` by replaying the ordering.
pub fn build_rect_dual(g: &Embedding, o: &CanonicalOrdering) -> Result<RectLayout> {
    Ok(build_rect_dual_traced(g, o)?.0)
}

/// As [`build_rect_dual`], also returning the outer chain after each
/// insertion step (initial chain first) so callers can audit the top-chain
/// invariant.
pub fn build_rect_dual_traced(
    g: &Embedding,
    o: &CanonicalOrdering,
) -> Result<(RectLayout, Vec<Vec<usize>>)> {
    let [u1, u2, z] = o.base();
    if !g.has_edge(u1, u2) {
        return Err(Error::InvalidOrdering(format!(
            "base edge ({u1},{u2}) is not an edge"
        )));
    }

    // base: u1 - z - u2 drawn as three unit squares in a row
    let mut rects: BTreeMap<usize, Rect> = BTreeMap::new();
    for (i, v) in [u1, z, u2].into_iter().enumerate() {
        let i = i as i64;
        rects.insert(
            v,
            Rect::new(Rat::int(i), Rat::int(0), Rat::int(i + 1), Rat::int(1)),
        );
    }
    let mut chain_vertices = vec![u1, z, u2];
    let mut top = Rat::int(1);
    let mut chains = vec![chain_vertices.clone()];

    let top_cell = [o.top()];
    for cell in o
        .middle()
        .iter()
        .map(|s| s.vertices())
        .chain(std::iter::once(&top_cell[..]))
    {
        let (a, b) = chain::attachment_range(g, &chain_vertices, cell)?;
        let new_top = &top + &Rat::one();
        for (idx, &c) in chain_vertices.iter().enumerate() {
            if idx <= a || idx >= b {
                rects.get_mut(&c).unwrap().y_hi = new_top.clone();
            }
        }
        let gap_lo = rects[&chain_vertices[a + 1]].x_lo.clone();
        let gap_hi = rects[&chain_vertices[b - 1]].x_hi.clone();
        if cell.len() == 1 {
            rects.insert(
                cell[0],
                Rect::new(gap_lo, top.clone(), gap_hi, new_top.clone()),
            );
        } else {
            // fan: the gap is exactly the top edge of the apex rectangle
            if b != a + 2 {
                return Err(Error::InvalidOrdering(format!(
                    "fan cell {cell:?} attaches on span [{a},{b}], expected width 2"
                )));
            }
            let f = Rat::int(cell.len() as i64);
            let piece = &(&gap_hi - &gap_lo) / &f;
            let mut x = gap_lo;
            for &v in cell {
                let x_next = &x + &piece;
                rects.insert(
                    v,
                    Rect::new(x.clone(), top.clone(), x_next.clone(), new_top.clone()),
                );
                x = x_next;
            }
        }
        chain::replace_span(&mut chain_vertices, a, b, cell);
        top = new_top;

        // top-chain invariant: every chain rectangle is flush with the
        // current top of the bounding box
        if let Some(&c) = chain_vertices.iter().find(|&&c| rects[&c].y_hi != top) {
            return Err(Error::Internal(format!(
                "rectangle of chain vertex {c} does not reach the current top"
            )));
        }
        chains.push(chain_vertices.clone());
    }

    let bbox = Rect::new(Rat::int(0), Rat::int(0), Rat::int(3), top);
    Ok((RectLayout { bbox, rects }, chains))
}

/// Exact verification of the rectangular-dual definition for `g - e`:
/// rectangles sit inside the bounding box with pairwise disjoint interiors,
/// their areas sum to the box area (so they tile it without holes), and
/// positive-length contacts coincide with the edge set.
pub fn verify_rect_dual(g: &Embedding, e: (usize, usize), l: &RectLayout) -> VerifyReport {
    let mut r = VerifyReport::new("rectangular dual");
    let n = g.n();
    let e = (e.0.min(e.1), e.0.max(e.1));

    let vertices: Vec<usize> = l.rects.keys().copied().collect();
    r.check(vertices == (0..n).collect::<Vec<_>>(), || {
        "layout does not cover exactly the graph's vertices".into()
    });
    if !r.ok() {
        return r;
    }

    let mut area = Rat::zero();
    for (v, rect) in &l.rects {
        r.check(rect.x_lo < rect.x_hi && rect.y_lo < rect.y_hi, || {
            format!("rectangle of {v} is degenerate")
        });
        r.check(l.bbox.contains_rect(rect), || {
            format!("rectangle of {v} leaves the bounding box")
        });
        area = &area + &rect.area();
    }
    r.check(area == l.bbox.area(), || {
        format!(
            "areas sum to {area}, bounding box has {} (tiling has holes or overlaps)",
            l.bbox.area()
        )
    });

    for i in 0..n {
        for j in i + 1..n {
            let (ri, rj) = (&l.rects[&i], &l.rects[&j]);
            let ox = overlap(&ri.x_lo, &ri.x_hi, &rj.x_lo, &rj.x_hi);
            let oy = overlap(&ri.y_lo, &ri.y_hi, &rj.y_lo, &rj.y_hi);
            if ox.is_positive() && oy.is_positive() {
                r.fail(format!("rectangles of {i} and {j} overlap"));
                continue;
            }
            // positive-length contact: touching in one axis, overlapping in
            // the other
            let contact = (ox.is_zero() && oy.is_positive()) || (oy.is_zero() && ox.is_positive());
            let is_edge = (i, j) != e && g.has_edge(i, j);
            r.check(contact == is_edge, || {
                if is_edge {
                    format!("edge ({i},{j}) is not realized by a positive-length contact")
                } else {
                    format!("rectangles of non-adjacent {i},{j} share a boundary segment")
                }
            });
        }
    }
    r
}
