//! Canonical orderings of 4-connected triangulations built by peeling.
//!
//! The ordering is an ordered partition `V1..VL` of the vertex set: `V1` is
//! the triangle at the distinguished outer edge `(u1,u2)`, `VL = {u3}`, and
//! every in-between cell is a singleton or a fan, chosen so that each prefix
//! graph stays 3-connected and each suffix stays connected. The construction
//! works backwards: starting from the disk `G - u3` it repeatedly removes a
//! fan or a singleton from the outer cycle while keeping the disk internally
//! 4-connected.
//!
//! The choice of what to remove revolves around 2-legs: paths
//! `c_i - x - c_j` with `x` interior and the outer positions `i, j` at
//! least two apart. A 2-leg is *basic* when every outer vertex strictly
//! between the legs has degree 3 (those vertices then form a fan with apex
//! `x`), *complex* otherwise. Centers are ordered by dominance (one center
//! sits strictly inside the region carved out by another's widest 2-leg);
//! a dominance-minimal center always admits a valid removal.

use crate::disk::TriangulatedDisk;
use crate::error::{Error, Result};
use crate::graph::{self, Embedding, VertexSet};
use crate::report::VerifyReport;
use serde::{Deserialize, Serialize};
use std::collections::{HashSet, VecDeque};

/// Prefix size above which the ordering verifier replaces the brute-force
/// 3-connectivity oracle by the internally-4-connected disk check (which
/// implies it).
pub const FULL_CONNECTIVITY_LIMIT: usize = 200;

/// A 2-leg `c_start - center - c_end`, with `start`/`end` given as 0-based
/// positions on the outer cycle and `center` as a vertex id.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoLeg {
    pub start: usize,
    pub center: usize,
    pub end: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LegKind {
    Basic,
    Complex,
}

/// One removable cell of the ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    Singleton { vertex: usize },
    Fan { vertices: Vec<usize>, apex: usize },
}

impl Step {
    pub fn vertices(&self) -> &[usize] {
        match self {
            Step::Singleton { vertex } => std::slice::from_ref(vertex),
            Step::Fan { vertices, .. } => vertices,
        }
    }
}

/// All 2-leg centers of the disk (interior vertices with two outer
/// neighbors at positions at least 2 apart), ascending by vertex id.
pub fn two_leg_centers(d: &TriangulatedDisk) -> Vec<usize> {
    d.interior_vertices()
        .filter(|&x| {
            let pos = outer_neighbor_positions(d, x);
            pos.len() >= 2 && pos[pos.len() - 1] - pos[0] >= 2
        })
        .collect()
}

fn outer_neighbor_positions(d: &TriangulatedDisk, x: usize) -> Vec<usize> {
    let mut pos: Vec<usize> = d
        .embedding()
        .neighbors(x)
        .iter()
        .filter_map(|&w| d.outer_pos(w))
        .collect();
    pos.sort_unstable();
    pos
}

fn require_peelable(d: &TriangulatedDisk) -> Result<()> {
    if d.n() < 4 {
        return Err(Error::Precondition(format!(
            "disk has {} vertices, need at least 4",
            d.n()
        )));
    }
    if let Some(defect) = d.internal_4c_defect() {
        return Err(Error::NotInternally4Connected(defect));
    }
    Ok(())
}

/// Enumerates every 2-leg of the disk, sorted by (center, start, end).
pub fn find_two_legs(d: &TriangulatedDisk) -> Result<Vec<TwoLeg>> {
    require_peelable(d)?;
    let mut out = Vec::new();
    for x in d.interior_vertices() {
        let pos = outer_neighbor_positions(d, x);
        for (ai, &i) in pos.iter().enumerate() {
            for &j in &pos[ai + 1..] {
                if j >= i + 2 {
                    out.push(TwoLeg {
                        start: i,
                        center: x,
                        end: j,
                    });
                }
            }
        }
    }
    if out.is_empty() {
        return Err(Error::Internal(
            "internally 4-connected disk with n >= 4 must have a 2-leg".into(),
        ));
    }
    Ok(out)
}

/// Per-vertex flags marking everything strictly inside the region bounded
/// by `x`'s widest 2-leg together with the outer arc it spans. Decided by a
/// flood fill over faces that may not cross the region boundary.
fn region_inside_flags(d: &TriangulatedDisk, x: usize) -> Vec<bool> {
    let outer = d.outer_cycle();
    let pos = outer_neighbor_positions(d, x);
    let (lo, hi) = (pos[0], pos[pos.len() - 1]);

    let mut blocked: HashSet<(usize, usize)> = HashSet::new();
    let mut on_cycle = vec![false; d.n()];
    on_cycle[x] = true;
    for t in lo..=hi {
        on_cycle[outer[t]] = true;
        if t < hi {
            let (a, b) = (outer[t], outer[t + 1]);
            blocked.insert((a.min(b), a.max(b)));
        }
    }
    for &leg in &[outer[lo], outer[hi]] {
        blocked.insert((x.min(leg), x.max(leg)));
    }

    let faces = d.embedding().trace_faces();
    let mut reached = vec![false; faces.len()];
    let mut queue = VecDeque::from([d.outer_face_index()]);
    reached[d.outer_face_index()] = true;
    while let Some(fi) = queue.pop_front() {
        let face = &faces[fi];
        for i in 0..face.len() {
            let (a, b) = (face[i], face[(i + 1) % face.len()]);
            if blocked.contains(&(a.min(b), a.max(b))) {
                continue;
            }
            for &other in d.faces_of_edge(a, b) {
                if !reached[other] {
                    reached[other] = true;
                    queue.push_back(other);
                }
            }
        }
    }
    (0..d.n())
        .map(|v| !on_cycle[v] && !reached[d.face_of_vertex(v)])
        .collect()
}

/// Whether 2-leg-center `x` dominates 2-leg-center `y`, i.e. `y` lies
/// strictly inside the region bounded by a 2-leg of `x` and the outer arc
/// between its feet. It suffices to test the widest 2-leg of `x`.
pub fn dominates(d: &TriangulatedDisk, x: usize, y: usize) -> Result<bool> {
    let centers = two_leg_centers(d);
    for v in [x, y] {
        if !centers.contains(&v) {
            return Err(Error::Precondition(format!(
                "vertex {v} is not a 2-leg-center"
            )));
        }
    }
    Ok(region_inside_flags(d, x)[y])
}

/// The lowest-numbered 2-leg-center that dominates no other center.
/// Existence is guaranteed because dominance is acyclic (the dominated
/// center's region encloses strictly fewer faces).
pub fn minimal_center(d: &TriangulatedDisk) -> Result<usize> {
    require_peelable(d)?;
    let centers = two_leg_centers(d);
    if centers.is_empty() {
        return Err(Error::Internal(
            "internally 4-connected disk with n >= 4 must have a 2-leg-center".into(),
        ));
    }
    for &x in &centers {
        let inside = region_inside_flags(d, x);
        if centers.iter().all(|&y| y == x || !inside[y]) {
            return Ok(x);
        }
    }
    Err(Error::Internal(
        "dominance relation has no minimal element; it should be acyclic".into(),
    ))
}

/// Whether all outer vertices strictly between the feet of the 2-leg have
/// degree 3 (Basic) or not (Complex).
pub fn classify_two_leg(d: &TriangulatedDisk, leg: &TwoLeg) -> Result<LegKind> {
    let outer = d.outer_cycle();
    let valid = leg.start + 2 <= leg.end
        && leg.end < outer.len()
        && !d.is_outer(leg.center)
        && d.embedding().has_edge(leg.center, outer[leg.start])
        && d.embedding().has_edge(leg.center, outer[leg.end]);
    if !valid {
        return Err(Error::Precondition(format!("{leg:?} is not a 2-leg")));
    }
    let basic = (leg.start + 1..leg.end).all(|t| d.degree(outer[t]) == 3);
    Ok(if basic {
        LegKind::Basic
    } else {
        LegKind::Complex
    })
}

/// One peeling step: a vertex set that can be removed from the outer cycle
/// (never touching `u1`, `u2`) so that the disk stays internally
/// 4-connected.
///
/// With `x` a minimal 2-leg-center and `lo`/`hi` the extreme outer
/// positions adjacent to `x`: if every outer vertex strictly between has
/// degree 3 they form a fan with apex `x` and are removed together.
/// Otherwise some 2-leg of `x` is complex; among those pick the foot `c_j`
/// with the lowest vertex id, take the complex 2-leg `(i, x, j)` with `i`
/// maximal, and remove the singleton right after `c_i`.
pub fn peel(d: &TriangulatedDisk) -> Result<Step> {
    require_peelable(d)?;
    let outer = d.outer_cycle();
    let x = minimal_center(d)?;
    let pos = outer_neighbor_positions(d, x);
    let (lo, hi) = (pos[0], pos[pos.len() - 1]);
    debug_assert!(hi - lo >= 2);

    // deg4[t+1] - deg4[s] = number of outer positions in s..=t with degree >= 4
    let mut deg4 = vec![0usize; outer.len() + 1];
    for (t, &v) in outer.iter().enumerate() {
        deg4[t + 1] = deg4[t] + usize::from(d.degree(v) >= 4);
    }
    let has_deg4_between = |i: usize, j: usize| deg4[j] > deg4[i + 1];

    if !has_deg4_between(lo, hi) {
        // Basic case: all 2-legs of x are basic.
        return Ok(Step::Fan {
            vertices: outer[lo + 1..hi].to_vec(),
            apex: x,
        });
    }

    // Complex case. A foot position j admits a complex 2-leg of x iff the
    // widest window ending at j does.
    let complex_feet: Vec<usize> = pos
        .iter()
        .copied()
        .filter(|&j| j >= lo + 2 && has_deg4_between(lo, j))
        .collect();
    let j = complex_feet
        .into_iter()
        .min_by_key(|&j| outer[j])
        .expect("complex case implies a complex foot");
    let i = pos
        .iter()
        .copied()
        .filter(|&i| i + 2 <= j && has_deg4_between(i, j))
        .max()
        .expect("at least the widest starting foot qualifies");
    Ok(Step::Singleton {
        vertex: outer[i + 1],
    })
}

/// An ordered partition `V1..VL`: the base triangle at `(u1,u2)`, then
/// singleton/fan cells, then the top vertex `u3`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "OrderingFile", into = "OrderingFile")]
pub struct CanonicalOrdering {
    base: [usize; 3],
    middle: Vec<Step>,
    top: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum CellFile {
    Base { vertices: [usize; 3] },
    Fan { vertices: Vec<usize>, apex: usize },
    Singleton { vertex: usize },
    Top { vertex: usize },
}

#[derive(Serialize, Deserialize)]
struct OrderingFile {
    cells: Vec<CellFile>,
}

impl TryFrom<OrderingFile> for CanonicalOrdering {
    type Error = Error;
    fn try_from(f: OrderingFile) -> Result<CanonicalOrdering> {
        let bad = |msg: &str| Error::InvalidOrdering(msg.into());
        if f.cells.len() < 2 {
            return Err(bad("ordering needs at least a base and a top cell"));
        }
        let mut cells = f.cells.into_iter();
        let base = match cells.next().unwrap() {
            CellFile::Base { vertices } => vertices,
            _ => return Err(bad("first cell must have kind \"base\"")),
        };
        let mut middle = Vec::new();
        let mut top = None;
        for cell in cells {
            if top.is_some() {
                return Err(bad("cells after the top cell"));
            }
            match cell {
                CellFile::Base { .. } => return Err(bad("duplicate base cell")),
                CellFile::Fan { vertices, apex } => {
                    if vertices.is_empty() {
                        return Err(bad("empty fan cell"));
                    }
                    middle.push(Step::Fan { vertices, apex });
                }
                CellFile::Singleton { vertex } => middle.push(Step::Singleton { vertex }),
                CellFile::Top { vertex } => top = Some(vertex),
            }
        }
        let top = top.ok_or_else(|| bad("missing top cell"))?;
        Ok(CanonicalOrdering { base, middle, top })
    }
}

impl From<CanonicalOrdering> for OrderingFile {
    fn from(o: CanonicalOrdering) -> OrderingFile {
        let mut cells = vec![CellFile::Base { vertices: o.base }];
        cells.extend(o.middle.into_iter().map(|s| match s {
            Step::Singleton { vertex } => CellFile::Singleton { vertex },
            Step::Fan { vertices, apex } => CellFile::Fan { vertices, apex },
        }));
        cells.push(CellFile::Top { vertex: o.top });
        OrderingFile { cells }
    }
}

impl CanonicalOrdering {
    /// Assembles an ordering from raw parts (used by tests and tools that
    /// construct candidate orderings for verification).
    pub fn from_parts(base: [usize; 3], middle: Vec<Step>, top: usize) -> CanonicalOrdering {
        CanonicalOrdering { base, middle, top }
    }

    /// `[u1, u2, z]`.
    pub fn base(&self) -> [usize; 3] {
        self.base
    }

    pub fn middle(&self) -> &[Step] {
        &self.middle
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Number of cells `L`.
    pub fn len(&self) -> usize {
        self.middle.len() + 2
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Vertex lists of `V1..VL`; fan cells keep their outer-cycle order.
    pub fn cells(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::with_capacity(self.len());
        out.push(self.base.to_vec());
        out.extend(self.middle.iter().map(|s| s.vertices().to_vec()));
        out.push(vec![self.top]);
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("ordering serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<CanonicalOrdering> {
        serde_json::from_str(s).map_err(|e| {
            crate::error::wrap_parse_error(e, "invalid ordering: ", Error::InvalidOrdering)
        })
    }
}

/// The starting disk of the peeling construction: `g` minus its top vertex
/// `u3`, with the outer cycle (the neighbor cycle of `u3`) running from
/// `u1` to `u2`. Returns the disk plus the table mapping its dense vertex
/// ids back to the original labels. Validates that `g` is a 4-connected
/// triangulation first.
pub fn base_disk(g: &Embedding) -> Result<(TriangulatedDisk, Vec<usize>)> {
    g.check_triangulation()?;
    if g.n() < 5 {
        return Err(Error::Precondition(format!(
            "n = {} but no triangulation below 6 vertices is 4-connected",
            g.n()
        )));
    }
    if let Some(t) = g.find_separating_triangle()? {
        return Err(Error::SeparatingTriangle(t));
    }
    let (u1, u2) = g.base_edge();
    let u3 = g.top_vertex()?;
    let keep = VertexSet::new((0..g.n()).filter(|&v| v != u3))?;
    let (sub, labels) = g.induced_subgraph(&keep)?;
    let disk = disk_with_base_edge(&sub, &labels, u1, u2)?;
    Ok((disk, labels))
}

/// Computes a canonical ordering of a 4-connected triangulation by reverse
/// peeling: remove `u3`, then peel the remaining disk down to the base
/// triangle.
pub fn compute_31_ordering(g: &Embedding) -> Result<CanonicalOrdering> {
    let (mut disk, mut labels) = base_disk(g)?;
    let (u1, u2) = g.base_edge();
    let u3 = g.top_vertex()?;

    let mut middle_rev: Vec<Step> = Vec::new();
    while disk.n() >= 4 {
        let step = peel(&disk)?;
        let global_step = match &step {
            Step::Singleton { vertex } => Step::Singleton {
                vertex: labels[*vertex],
            },
            Step::Fan { vertices, apex } => Step::Fan {
                vertices: vertices.iter().map(|&v| labels[v]).collect(),
                apex: labels[*apex],
            },
        };
        let removal = VertexSet::new(step.vertices().iter().copied())?;
        let (next, new_to_old) = disk.remove_outer_set(&removal)?;
        labels = new_to_old.into_iter().map(|i| labels[i]).collect();
        disk = next;
        middle_rev.push(global_step);
    }

    let z = labels
        .iter()
        .copied()
        .find(|&v| v != u1 && v != u2)
        .ok_or_else(|| Error::Internal("base triangle lost u1 or u2".into()))?;
    middle_rev.reverse();
    Ok(CanonicalOrdering {
        base: [u1, u2, z],
        middle: middle_rev,
        top: u3,
    })
}

/// Wraps an embedding (with `u1`,`u2` given in original labels) into a disk
/// whose outer cycle starts at `u1` and ends at `u2`.
fn disk_with_base_edge(
    sub: &Embedding,
    labels: &[usize],
    u1: usize,
    u2: usize,
) -> Result<TriangulatedDisk> {
    let find = |orig: usize| {
        labels
            .iter()
            .position(|&l| l == orig)
            .ok_or_else(|| Error::Internal(format!("vertex {orig} missing from subgraph")))
    };
    let (lu1, lu2) = (find(u1)?, find(u2)?);
    let face = sub.face_from_directed_edge(lu2, lu1)?;
    let start = face
        .iter()
        .position(|&v| v == lu1)
        .ok_or_else(|| Error::Internal("u1 not on traced boundary".into()))?;
    let mut outer = Vec::with_capacity(face.len());
    outer.extend_from_slice(&face[start..]);
    outer.extend_from_slice(&face[..start]);
    TriangulatedDisk::new(sub.with_outer_face(&outer)?)
}

/// Independent check of the ordering definition, using only the brute-force
/// oracles of the graph layer. Prefixes larger than
/// [`FULL_CONNECTIVITY_LIMIT`] vertices are checked via the
/// internally-4-connected disk property instead of the subset-deletion
/// 3-connectivity oracle.
pub fn verify_ordering(g: &Embedding, o: &CanonicalOrdering) -> VerifyReport {
    verify_ordering_limit(g, o, FULL_CONNECTIVITY_LIMIT)
}

/// As [`verify_ordering`], with an explicit threshold for switching from
/// the brute-force 3-connectivity oracle to the disk-based check.
pub fn verify_ordering_limit(
    g: &Embedding,
    o: &CanonicalOrdering,
    full_conn_limit: usize,
) -> VerifyReport {
    let mut r = VerifyReport::new("canonical ordering");
    let n = g.n();
    let cells = o.cells();
    let cell_count = cells.len();

    // cells partition the vertex set
    let mut cell_of = vec![usize::MAX; n];
    let mut partition_ok = true;
    for (k, cell) in cells.iter().enumerate() {
        for &v in cell {
            if v >= n || cell_of[v] != usize::MAX {
                partition_ok = false;
            } else {
                cell_of[v] = k;
            }
        }
    }
    partition_ok &= cell_of.iter().all(|&k| k != usize::MAX);
    r.check(partition_ok, || {
        "cells do not partition the vertex set".into()
    });
    if !partition_ok {
        return r;
    }

    // base cell: {u1, u2, z} with z the third vertex of the interior face
    // at (u1, u2)
    let (u1, u2) = g.base_edge();
    match (g.top_vertex(), g.face_from_directed_edge(u1, u2)) {
        (Ok(u3), Ok(face)) => {
            let z = face
                .iter()
                .copied()
                .find(|&v| v != u1 && v != u2)
                .unwrap_or(usize::MAX);
            r.check(o.base() == [u1, u2, z], || {
                format!("base cell is {:?}, expected [{u1}, {u2}, {z}]", o.base())
            });
            r.check(o.top() == u3, || {
                format!("top cell is {{{}}}, expected {{{u3}}} = u3", o.top())
            });
        }
        _ => r.fail("graph outer face is not a triangle with a base edge"),
    }

    // interior cells are singletons or fans at insertion time
    let in_prefix_at = |v: usize, k: usize| cell_of[v] <= k;
    for (k, step) in o.middle().iter().enumerate() {
        let k = k + 1; // cell index (0-based) of this step
        if let Step::Fan { vertices, apex } = step {
            let fan_ok = fan_shape_ok(g, vertices, *apex, |v| in_prefix_at(v, k));
            r.check(fan_ok, || {
                format!(
                    "cell {} is not a fan with apex {apex} at insertion time",
                    k + 1
                )
            });
        }
    }

    // prefix 3-connectivity and suffix connectivity for 1 < k < L
    for k in 1..cell_count - 1 {
        let prefix: Vec<usize> = (0..n).filter(|&v| cell_of[v] <= k).collect();
        if prefix.len() <= full_conn_limit {
            let adj = induced_adjacency(g, &prefix);
            r.check(graph::is_k_connected_adj(&adj, 3), || {
                format!("prefix graph G_{} is not 3-connected", k + 1)
            });
        } else {
            r.check(prefix_is_i4c_disk(g, &prefix, u1, u2), || {
                format!(
                    "prefix graph G_{} is not an internally 4-connected disk",
                    k + 1
                )
            });
        }
        let suffix: Vec<usize> = (0..n).filter(|&v| cell_of[v] >= k).collect();
        let adj = induced_adjacency(g, &suffix);
        r.check(graph::is_k_connected_adj(&adj, 1), || {
            format!("complement graph at cell {} is not connected", k + 1)
        });
    }

    // spanning structure: every vertex except u3 has a neighbor in a
    // strictly later cell
    for v in 0..n {
        if v == o.top() {
            continue;
        }
        r.check(
            g.neighbors(v).iter().any(|&w| cell_of[w] > cell_of[v]),
            || format!("vertex {v} has no neighbor in a later cell"),
        );
    }

    r
}

/// Fan shape in the prefix graph: each fan vertex has degree exactly 3
/// there, consecutive fan vertices are adjacent, non-consecutive ones are
/// not, and all share the apex.
fn fan_shape_ok(
    g: &Embedding,
    vertices: &[usize],
    apex: usize,
    in_prefix: impl Fn(usize) -> bool,
) -> bool {
    if vertices.is_empty() {
        return false;
    }
    for (idx, &z) in vertices.iter().enumerate() {
        let deg = g.neighbors(z).iter().filter(|&&w| in_prefix(w)).count();
        if deg != 3 || !g.has_edge(z, apex) || !in_prefix(apex) {
            return false;
        }
        for (jdx, &w) in vertices.iter().enumerate() {
            if idx < jdx {
                let adjacent = g.has_edge(z, w);
                if adjacent != (jdx == idx + 1) {
                    return false;
                }
            }
        }
    }
    true
}

fn induced_adjacency(g: &Embedding, keep: &[usize]) -> Vec<Vec<usize>> {
    let mut local = vec![usize::MAX; g.n()];
    for (i, &v) in keep.iter().enumerate() {
        local[v] = i;
    }
    keep.iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .filter(|&&w| local[w] != usize::MAX)
                .map(|&w| local[w])
                .collect()
        })
        .collect()
}

fn prefix_is_i4c_disk(g: &Embedding, prefix: &[usize], u1: usize, u2: usize) -> bool {
    let Ok(keep) = VertexSet::new(prefix.iter().copied()) else {
        return false;
    };
    let Ok((sub, labels)) = g.induced_subgraph(&keep) else {
        return false;
    };
    match disk_with_base_edge(&sub, &labels, u1, u2) {
        Ok(disk) => disk.is_internally_4_connected(),
        Err(_) => false,
    }
}
