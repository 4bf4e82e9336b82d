//! Attachment bookkeeping shared by the drawing builders.
//!
//! Both drawing constructions replay an ordering cell by cell while
//! maintaining the outer chain `c1..cl` of the current prefix (from `u1` to
//! `u2`). Inserting a cell needs the smallest and largest chain positions
//! adjacent to it.

use crate::error::{Error, Result};
use crate::graph::Embedding;

/// Smallest and largest positions on `chain` adjacent to a vertex of
/// `cell`. Errors if the cell does not attach, or attaches over a span
/// shorter than two (which a valid ordering cannot produce).
pub(crate) fn attachment_range(
    g: &Embedding,
    chain: &[usize],
    cell: &[usize],
) -> Result<(usize, usize)> {
    let mut lo = None;
    let mut hi = None;
    for (idx, &c) in chain.iter().enumerate() {
        if cell.iter().any(|&z| g.has_edge(c, z)) {
            lo.get_or_insert(idx);
            hi = Some(idx);
        }
    }
    let (a, b) = match (lo, hi) {
        (Some(a), Some(b)) => (a, b),
        _ => {
            return Err(Error::InvalidOrdering(format!(
                "cell {cell:?} has no attachment on the current outer chain"
            )))
        }
    };
    if b < a + 2 {
        return Err(Error::InvalidOrdering(format!(
            "cell {cell:?} attaches on the span [{a},{b}] of length < 2"
        )));
    }
    Ok((a, b))
}

/// Replaces `chain[a+1..b]` by `inserted`, giving the outer chain after the
/// insertion step.
pub(crate) fn replace_span(chain: &mut Vec<usize>, a: usize, b: usize, inserted: &[usize]) {
    chain.splice(a + 1..b, inserted.iter().copied());
}
