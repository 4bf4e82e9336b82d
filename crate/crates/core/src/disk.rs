//! Triangulated disks and internal 4-connectivity.
//!
//! A triangulated disk is a plane graph whose outer face is a simple cycle
//! and whose interior faces are all triangles. It is internally 4-connected
//! when the outer cycle has no chord and every 3-cycle bounds a face. These
//! are the objects the peeling step of the ordering construction consumes
//! and produces.

use crate::error::{Error, Result};
use crate::graph::{Embedding, VertexSet};
use std::collections::{HashMap, HashSet};

/// A validated triangulated disk. The outer cycle is the embedding's outer
/// face `c1..cl` (clockwise), with the distinguished endpoints `u1 = c1`
/// and `u2 = cl`; `(u1, u2)` is the outer edge closing the cycle.
///
/// Face data is cached at construction: the type is immutable and removal
/// operations return fresh disks.
#[derive(Debug, Clone)]
pub struct TriangulatedDisk {
    embedding: Embedding,
    /// vertex -> position on the outer cycle, `None` for interior vertices
    outer_pos: Vec<Option<usize>>,
    /// index of the outer face within `embedding.trace_faces()`
    outer_face: usize,
    /// normalized (u < v) edge -> incident face indices
    edge_faces: HashMap<(usize, usize), Vec<usize>>,
    /// one incident face per vertex
    vertex_face: Vec<usize>,
}

impl TriangulatedDisk {
    pub fn new(embedding: Embedding) -> Result<TriangulatedDisk> {
        check_triangulated_disk(&embedding)?;
        let outer_face = embedding.outer_face_index();
        let mut outer_pos = vec![None; embedding.n()];
        for (i, &v) in embedding.outer().iter().enumerate() {
            outer_pos[v] = Some(i);
        }
        let mut edge_faces: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        let mut vertex_face = vec![usize::MAX; embedding.n()];
        for (fi, face) in embedding.trace_faces().iter().enumerate() {
            for i in 0..face.len() {
                let (a, b) = (face[i], face[(i + 1) % face.len()]);
                edge_faces.entry((a.min(b), a.max(b))).or_default().push(fi);
                vertex_face[a] = fi;
            }
        }
        Ok(TriangulatedDisk {
            embedding,
            outer_pos,
            outer_face,
            edge_faces,
            vertex_face,
        })
    }

    pub fn embedding(&self) -> &Embedding {
        &self.embedding
    }

    pub fn n(&self) -> usize {
        self.embedding.n()
    }

    /// The outer cycle `c1..cl`, clockwise, `u1` first and `u2` last.
    pub fn outer_cycle(&self) -> &[usize] {
        self.embedding.outer()
    }

    pub fn u1(&self) -> usize {
        self.outer_cycle()[0]
    }

    pub fn u2(&self) -> usize {
        *self.outer_cycle().last().unwrap()
    }

    pub fn is_outer(&self, v: usize) -> bool {
        self.outer_pos[v].is_some()
    }

    /// Position of `v` on the outer cycle, if it is an outer vertex.
    pub fn outer_pos(&self, v: usize) -> Option<usize> {
        self.outer_pos[v]
    }

    pub fn interior_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(|&v| !self.is_outer(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.embedding.degree(v)
    }

    pub(crate) fn outer_face_index(&self) -> usize {
        self.outer_face
    }

    pub(crate) fn faces_of_edge(&self, u: usize, v: usize) -> &[usize] {
        self.edge_faces
            .get(&(u.min(v), u.max(v)))
            .map(|f| f.as_slice())
            .unwrap_or(&[])
    }

    pub(crate) fn face_of_vertex(&self, v: usize) -> usize {
        self.vertex_face[v]
    }

    /// No outer-cycle chord, and every 3-cycle is a face (the outer face
    /// counts when the disk is a single triangle).
    pub fn is_internally_4_connected(&self) -> bool {
        self.internal_4c_defect().is_none()
    }

    /// First violated internal-4-connectivity condition, if any.
    pub fn internal_4c_defect(&self) -> Option<String> {
        let l = self.outer_cycle().len();
        for &v in self.outer_cycle() {
            let pv = self.outer_pos[v].unwrap();
            for &w in self.embedding.neighbors(v) {
                if let Some(pw) = self.outer_pos[w] {
                    let d = (pv + l - pw) % l;
                    if d != 1 && d != l - 1 {
                        let mut chord = [v, w];
                        chord.sort_unstable();
                        return Some(format!("outer cycle has chord ({},{})", chord[0], chord[1]));
                    }
                }
            }
        }
        let face_set: HashSet<[usize; 3]> = self
            .embedding
            .trace_faces()
            .iter()
            .filter(|f| f.len() == 3)
            .map(|f| {
                let mut t = [f[0], f[1], f[2]];
                t.sort_unstable();
                t
            })
            .collect();
        for t in self.embedding.triangles() {
            if !face_set.contains(&t) {
                return Some(format!("triangle {t:?} is not a face"));
            }
        }
        None
    }

    /// Removes a set of outer vertices (none of them `u1`/`u2`) and returns
    /// the shrunken disk together with the new-to-old vertex map. The outer
    /// cycle is recomputed by tracing the face left of the closing edge
    /// `(u2, u1)`; removals that break the boundary into a non-simple walk
    /// or disconnect the graph are rejected.
    pub fn remove_outer_set(&self, s: &VertexSet) -> Result<(TriangulatedDisk, Vec<usize>)> {
        let (u1, u2) = (self.u1(), self.u2());
        for v in s.iter() {
            if v >= self.n() || !self.is_outer(v) {
                return Err(Error::Structure(format!(
                    "vertex {v} is not on the outer cycle"
                )));
            }
            if v == u1 || v == u2 {
                return Err(Error::Structure(format!(
                    "removal set touches endpoint {v}"
                )));
            }
        }
        if s.len() >= self.n() {
            return Err(Error::Structure("removal set covers the whole disk".into()));
        }
        let keep = VertexSet::new((0..self.n()).filter(|v| !s.contains(*v)))
            .expect("at least u1,u2 remain");
        let (sub, new_to_old) = self
            .embedding
            .induced_subgraph(&keep)
            .map_err(|e| Error::Structure(format!("removal disconnects the disk: {e}")))?;
        let mut old_to_new = vec![usize::MAX; self.n()];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = new;
        }
        // New outer face: trace from the (u2 -> u1) closing edge, then
        // rotate so u1 comes first.
        let face = sub.face_from_directed_edge(old_to_new[u2], old_to_new[u1])?;
        let start = face
            .iter()
            .position(|&v| v == old_to_new[u1])
            .expect("u1 on traced outer face");
        let mut outer = Vec::with_capacity(face.len());
        outer.extend_from_slice(&face[start..]);
        outer.extend_from_slice(&face[..start]);
        let mut distinct = outer.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != outer.len() || *outer.last().unwrap() != old_to_new[u2] {
            return Err(Error::Structure(
                "removal leaves a non-simple outer boundary".into(),
            ));
        }
        let disk = TriangulatedDisk::new(sub.with_outer_face(&outer)?)
            .map_err(|e| Error::Structure(format!("removal result invalid: {e}")))?;
        Ok((disk, new_to_old))
    }
}

/// True iff the embedding's outer face is a simple cycle and every other
/// face is a triangle.
pub fn is_triangulated_disk(e: &Embedding) -> bool {
    check_triangulated_disk(e).is_ok()
}

fn check_triangulated_disk(e: &Embedding) -> Result<()> {
    let outer = e.outer();
    if outer.len() < 3 {
        return Err(Error::NotTriangulatedDisk(format!(
            "outer face has length {}",
            outer.len()
        )));
    }
    let mut seen = HashSet::new();
    if !outer.iter().all(|&v| seen.insert(v)) {
        return Err(Error::NotTriangulatedDisk(
            "outer face is not a simple cycle".into(),
        ));
    }
    let outer_idx = e.outer_face_index();
    for (fi, face) in e.trace_faces().iter().enumerate() {
        if fi != outer_idx && face.len() != 3 {
            return Err(Error::NotTriangulatedDisk(format!(
                "interior face {face:?} is not a triangle"
            )));
        }
    }
    Ok(())
}
