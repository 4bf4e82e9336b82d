//! Combinatorial embeddings of simple planar graphs as rotation systems.
//!
//! A graph is stored as one cyclic neighbor list per vertex (counterclockwise
//! order) plus a designated outer face. Faces are recovered by the standard
//! tracing rule: the directed edge `u -> v` is followed by `v -> w` where `w`
//! is the predecessor of `u` in the rotation at `v`. Under that rule every
//! bounded face comes out counterclockwise and the outer face comes out
//! clockwise, so the stored outer face reads `c1..cl` in clockwise order.
//!
//! Conventions used throughout the crate:
//!
//! * the outer face list starts at `u1` and ends at `u2`; the closing edge
//!   `(u2, u1)` is the distinguished outer edge,
//! * for a triangulation the outer face is `[u1, u3, u2]`, i.e. the middle
//!   vertex is the one removed first when peeling.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap, HashSet};

/// A non-empty set of vertex identifiers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    members: BTreeSet<usize>,
}

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let members: BTreeSet<usize> = members.into_iter().collect();
        if members.is_empty() {
            return Err(Error::Precondition("vertex set must be non-empty".into()));
        }
        Ok(VertexSet { members })
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }
}

/// On-disk form of an embedding:
/// `{"n": int, "rotation": [[int,...],...], "outer": [int,...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct GraphFile {
    n: usize,
    rotation: Vec<Vec<usize>>,
    outer: Vec<usize>,
}

/// A validated combinatorial embedding of a simple connected planar graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphFile", into = "GraphFile")]
pub struct Embedding {
    rotation: Vec<Vec<usize>>,
    outer: Vec<usize>,
    edges: HashSet<(usize, usize)>,
    faces: Vec<Vec<usize>>,
}

impl TryFrom<GraphFile> for Embedding {
    type Error = Error;
    fn try_from(f: GraphFile) -> Result<Embedding> {
        if f.rotation.len() != f.n {
            return Err(Error::InvalidEmbedding(format!(
                "n = {} but rotation has {} entries",
                f.n,
                f.rotation.len()
            )));
        }
        Embedding::new(f.rotation, f.outer)
    }
}

impl From<Embedding> for GraphFile {
    fn from(e: Embedding) -> GraphFile {
        GraphFile {
            n: e.n(),
            rotation: e.rotation,
            outer: e.outer,
        }
    }
}

/// Traces all faces of a rotation system, validating that the adjacency is
/// symmetric and simple first. Each directed edge lands in exactly one face;
/// a face is reported as the cyclic sequence of tail vertices.
pub fn trace_rotation_faces(rotation: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    let n = rotation.len();
    let mut pos: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
    for (v, neighbors) in rotation.iter().enumerate() {
        for (i, &w) in neighbors.iter().enumerate() {
            if w >= n {
                return Err(Error::InvalidEmbedding(format!(
                    "vertex {v} lists out-of-range neighbor {w}"
                )));
            }
            if w == v {
                return Err(Error::InvalidEmbedding(format!("self-loop at vertex {v}")));
            }
            if pos[v].insert(w, i).is_some() {
                return Err(Error::InvalidEmbedding(format!(
                    "duplicate edge ({v},{w}) in rotation of {v}"
                )));
            }
        }
    }
    for (v, neighbors) in rotation.iter().enumerate() {
        for &w in neighbors {
            if !pos[w].contains_key(&v) {
                return Err(Error::InvalidEmbedding(format!(
                    "asymmetric adjacency: {v} lists {w} but not vice versa"
                )));
            }
        }
    }

    // Directed edge (v, rotation[v][i]) gets the flat index offset[v] + i.
    let mut offset = vec![0usize; n + 1];
    for v in 0..n {
        offset[v + 1] = offset[v] + rotation[v].len();
    }
    let mut visited = vec![false; offset[n]];
    let mut faces = Vec::new();
    for v in 0..n {
        for i in 0..rotation[v].len() {
            if visited[offset[v] + i] {
                continue;
            }
            let mut face = Vec::new();
            let (mut a, mut b) = (v, rotation[v][i]);
            loop {
                let ia = pos[a][&b];
                if visited[offset[a] + ia] {
                    break;
                }
                visited[offset[a] + ia] = true;
                face.push(a);
                // next directed edge: (b, predecessor of a in rotation[b])
                let ib = pos[b][&a];
                let deg_b = rotation[b].len();
                let next = rotation[b][(ib + deg_b - 1) % deg_b];
                a = b;
                b = next;
            }
            faces.push(face);
        }
    }
    Ok(faces)
}

/// Rotates a cyclic sequence so its smallest element comes first
/// (orientation preserved). Used to compare faces.
fn canonical_cycle(face: &[usize]) -> Vec<usize> {
    let k = face
        .iter()
        .enumerate()
        .min_by_key(|(_, &v)| v)
        .map(|(i, _)| i)
        .unwrap_or(0);
    let mut out = Vec::with_capacity(face.len());
    out.extend_from_slice(&face[k..]);
    out.extend_from_slice(&face[..k]);
    out
}

impl Embedding {
    /// Validates a rotation system plus outer-face designation.
    ///
    /// Rejects asymmetric or non-simple adjacency, rotation systems that do
    /// not satisfy Euler's formula `n - m + f = 2` (which also rules out
    /// disconnected graphs), and outer faces that are not traced faces of
    /// the system (orientation included).
    pub fn new(rotation: Vec<Vec<usize>>, outer: Vec<usize>) -> Result<Embedding> {
        let n = rotation.len();
        let faces = trace_rotation_faces(&rotation)?;
        let m: usize = rotation.iter().map(|r| r.len()).sum::<usize>() / 2;
        let f = faces.len();
        if n as i64 - m as i64 + f as i64 != 2 {
            return Err(Error::InvalidEmbedding(format!(
                "Euler check failed: n={n}, m={m}, f={f} gives {}",
                n as i64 - m as i64 + f as i64
            )));
        }
        if outer.is_empty() {
            return Err(Error::InvalidEmbedding("empty outer face".into()));
        }
        let canon_outer = canonical_cycle(&outer);
        if !faces
            .iter()
            .any(|face| canonical_cycle(face) == canon_outer)
        {
            return Err(Error::InvalidEmbedding(format!(
                "designated outer face {outer:?} is not a traced face \
                 (check vertex order and orientation)"
            )));
        }
        let mut edges = HashSet::new();
        for (v, neighbors) in rotation.iter().enumerate() {
            for &w in neighbors {
                edges.insert((v.min(w), v.max(w)));
            }
        }
        Ok(Embedding {
            rotation,
            outer,
            edges,
            faces,
        })
    }

    pub fn n(&self) -> usize {
        self.rotation.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    /// Neighbors of `v` in counterclockwise order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.rotation[u]
                .iter()
                .filter(move |&&v| v > u)
                .map(move |&v| (u, v))
        })
    }

    /// The designated outer face, `c1..cl` in clockwise order; `c1 = u1`
    /// and `cl = u2` are the endpoints of the distinguished outer edge.
    pub fn outer(&self) -> &[usize] {
        &self.outer
    }

    /// Endpoints of the distinguished outer edge `(u1, u2)`.
    pub fn base_edge(&self) -> (usize, usize) {
        (self.outer[0], *self.outer.last().unwrap())
    }

    /// For a triangular outer face, the third outer vertex `u3` (the one
    /// that tops every canonical ordering).
    pub fn top_vertex(&self) -> Result<usize> {
        if self.outer.len() != 3 {
            return Err(Error::Precondition(format!(
                "outer face has length {}, expected a triangle",
                self.outer.len()
            )));
        }
        Ok(self.outer[1])
    }

    /// All faces of the embedding. The outer face is among them.
    pub fn trace_faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn outer_face_index(&self) -> usize {
        let canon = canonical_cycle(&self.outer);
        self.faces
            .iter()
            .position(|f| canonical_cycle(f) == canon)
            .expect("outer face validated at construction")
    }

    /// The traced face that contains the directed edge `u -> v`, starting
    /// at `u`.
    pub fn face_from_directed_edge(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        if !self.has_edge(u, v) {
            return Err(Error::Precondition(format!("({u},{v}) is not an edge")));
        }
        let mut face = Vec::new();
        let (mut a, mut b) = (u, v);
        loop {
            face.push(a);
            let ib = self.rotation[b].iter().position(|&x| x == a).unwrap();
            let deg_b = self.rotation[b].len();
            let next = self.rotation[b][(ib + deg_b - 1) % deg_b];
            a = b;
            b = next;
            if (a, b) == (u, v) {
                break;
            }
        }
        Ok(face)
    }

    /// Re-designates the outer face. `face` must be a traced face, in trace
    /// orientation; the stored outer face keeps exactly the rotation given.
    pub fn with_outer_face(&self, face: &[usize]) -> Result<Embedding> {
        let canon = canonical_cycle(face);
        if !self.faces.iter().any(|f| canonical_cycle(f) == canon) {
            return Err(Error::Precondition(format!(
                "{face:?} is not a traced face of the embedding"
            )));
        }
        let mut out = self.clone();
        out.outer = face.to_vec();
        Ok(out)
    }

    /// Checks that this embedding is a triangulation: `m = 3n - 6` and every
    /// face (including the outer one) is a triangle.
    pub fn check_triangulation(&self) -> Result<()> {
        let n = self.n();
        if n < 3 {
            return Err(Error::NotTriangulation(format!("only {n} vertices")));
        }
        if self.m() != 3 * n - 6 {
            return Err(Error::NotTriangulation(format!(
                "m = {} but a triangulation on {n} vertices has {}",
                self.m(),
                3 * n - 6
            )));
        }
        for face in &self.faces {
            if face.len() != 3 {
                return Err(Error::NotTriangulation(format!(
                    "face {face:?} has length {}",
                    face.len()
                )));
            }
        }
        Ok(())
    }

    pub fn is_triangulation(&self) -> bool {
        self.check_triangulation().is_ok()
    }

    /// Subembedding induced by `keep`, with vertices renumbered densely.
    /// Returns the new embedding plus the table mapping new ids back to the
    /// original ones. Cyclic neighbor order is preserved; the outer face of
    /// the result is the original outer face when it survives intact, and
    /// otherwise an arbitrary but deterministic traced face — callers that
    /// care re-designate it via [`Embedding::with_outer_face`].
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<(Embedding, Vec<usize>)> {
        let n = self.n();
        for v in keep.iter() {
            if v >= n {
                return Err(Error::Precondition(format!(
                    "vertex {v} out of range 0..{n}"
                )));
            }
        }
        let new_to_old: Vec<usize> = keep.iter().collect();
        let mut old_to_new = vec![usize::MAX; n];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = new;
        }
        let rotation: Vec<Vec<usize>> = new_to_old
            .iter()
            .map(|&old| {
                self.rotation[old]
                    .iter()
                    .filter(|&&w| old_to_new[w] != usize::MAX)
                    .map(|&w| old_to_new[w])
                    .collect()
            })
            .collect();

        let faces = trace_rotation_faces(&rotation)?;
        let m: usize = rotation.iter().map(|r| r.len()).sum::<usize>() / 2;
        if new_to_old.len() as i64 - m as i64 + faces.len() as i64 != 2 {
            return Err(Error::Structure(
                "induced subgraph is not a connected plane graph".into(),
            ));
        }

        // Prefer the image of the original outer face if it survives.
        let outer = if self.outer.iter().all(|&v| old_to_new[v] != usize::MAX) {
            let mapped: Vec<usize> = self.outer.iter().map(|&v| old_to_new[v]).collect();
            let canon = canonical_cycle(&mapped);
            if faces.iter().any(|f| canonical_cycle(f) == canon) {
                mapped
            } else {
                lexicographically_first_face(&faces)
            }
        } else {
            lexicographically_first_face(&faces)
        };
        let e = Embedding::new(rotation, outer)?;
        Ok((e, new_to_old))
    }

    /// Plain brute-force vertex connectivity oracle: true iff `|V| > k` and
    /// deleting any vertex set of size `< k` leaves the graph connected.
    /// For `k = 1` this is plain connectivity. `k` must be in `1..=5`.
    pub fn is_k_connected(&self, k: usize) -> bool {
        assert!((1..=5).contains(&k), "k must be in 1..=5");
        is_k_connected_adj(&self.rotation, k)
    }

    /// Enumerates all 3-cliques, each exactly once, in a deterministic
    /// order.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for &v in &self.rotation[u] {
                if v <= u {
                    continue;
                }
                // scan the smaller adjacency list of the edge (u,v)
                let probe = if self.degree(u) <= self.degree(v) {
                    u
                } else {
                    v
                };
                for &w in &self.rotation[probe] {
                    if w > v && self.has_edge(u, w) && self.has_edge(v, w) {
                        out.push([u, v, w]);
                    }
                }
            }
        }
        out
    }

    /// First triangle that is not a face, if any. Defined for
    /// triangulations only. For `n >= 5`, a triangulation has such a
    /// triangle exactly when it is not 4-connected.
    pub fn find_separating_triangle(&self) -> Result<Option<[usize; 3]>> {
        self.check_triangulation()?;
        let face_set: HashSet<[usize; 3]> = self
            .faces
            .iter()
            .map(|f| {
                let mut t = [f[0], f[1], f[2]];
                t.sort_unstable();
                t
            })
            .collect();
        Ok(self.triangles().into_iter().find(|t| !face_set.contains(t)))
    }

    pub fn has_separating_triangle(&self) -> Result<bool> {
        Ok(self.find_separating_triangle()?.is_some())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("embedding serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Embedding> {
        serde_json::from_str(s).map_err(|e| {
            crate::error::wrap_parse_error(e, "invalid embedding: ", Error::InvalidEmbedding)
        })
    }
}

fn lexicographically_first_face(faces: &[Vec<usize>]) -> Vec<usize> {
    faces
        .iter()
        .map(|f| canonical_cycle(f))
        .min()
        .expect("at least one face")
}

/// Connectivity oracle over plain adjacency lists; shared by the embedding
/// oracle and the ordering verifier (which checks prefixes and complements
/// that are not embeddings).
pub(crate) fn is_k_connected_adj(adj: &[Vec<usize>], k: usize) -> bool {
    let n = adj.len();
    if k == 1 {
        return n >= 1 && connected_with_deleted(adj, &[]);
    }
    if n <= k {
        return false;
    }
    let mut subset = Vec::new();
    for size in 0..k {
        if !all_deletions_connected(adj, size, 0, &mut subset) {
            return false;
        }
    }
    true
}

fn all_deletions_connected(
    adj: &[Vec<usize>],
    size: usize,
    start: usize,
    subset: &mut Vec<usize>,
) -> bool {
    if subset.len() == size {
        return connected_with_deleted(adj, subset);
    }
    for v in start..adj.len() {
        subset.push(v);
        let ok = all_deletions_connected(adj, size, v + 1, subset);
        subset.pop();
        if !ok {
            return false;
        }
    }
    true
}

pub(crate) fn connected_with_deleted(adj: &[Vec<usize>], deleted: &[usize]) -> bool {
    let n = adj.len();
    if n <= 128 {
        let mut alive: u128 = if n == 128 { !0 } else { (1u128 << n) - 1 };
        for &d in deleted {
            alive &= !(1u128 << d);
        }
        if alive == 0 {
            return true;
        }
        let start = alive.trailing_zeros() as usize;
        let mut visited: u128 = 1 << start;
        let mut frontier = visited;
        while frontier != 0 {
            let mut next: u128 = 0;
            let mut bits = frontier;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                for &w in &adj[v] {
                    next |= 1u128 << w;
                }
            }
            next &= alive & !visited;
            visited |= next;
            frontier = next;
        }
        visited == alive
    } else {
        let mut dead = vec![false; n];
        for &d in deleted {
            dead[d] = true;
        }
        let Some(start) = (0..n).find(|&v| !dead[v]) else {
            return true;
        };
        let mut seen = vec![false; n];
        let mut stack = vec![start];
        seen[start] = true;
        let mut count = 0usize;
        while let Some(v) = stack.pop() {
            count += 1;
            for &w in &adj[v] {
                if !dead[w] && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        count == n - dead.iter().filter(|&&d| d).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use std::collections::BTreeSet;

    #[test]
    fn k4_has_four_triangular_faces() {
        let e = fixtures::k4();
        assert_eq!(e.trace_faces().len(), 4);
        assert!(e.trace_faces().iter().all(|f| f.len() == 3));
        assert!(e.is_triangulation());
    }

    #[test]
    fn octahedron_has_eight_triangular_faces() {
        let e = fixtures::octahedron();
        assert_eq!(e.n(), 6);
        assert_eq!(e.m(), 12);
        assert_eq!(e.trace_faces().len(), 8);
        assert!(e.trace_faces().iter().all(|f| f.len() == 3));
    }

    #[test]
    fn double_wheel_faces_match_hand_enumeration() {
        // 6-cycle plus two apexes: every face is (c_i, c_{i+1}, apex).
        let e = crate::gen::double_wheel(6).unwrap();
        assert_eq!(e.n(), 8);
        assert_eq!(e.m(), 18);
        let traced: BTreeSet<Vec<usize>> = e
            .trace_faces()
            .iter()
            .map(|f| {
                let mut t = f.clone();
                t.sort_unstable();
                t
            })
            .collect();
        let mut expected = BTreeSet::new();
        for i in 0..6 {
            let j = (i + 1) % 6;
            for apex in [6, 7] {
                let mut t = vec![i, j, apex];
                t.sort_unstable();
                expected.insert(t);
            }
        }
        assert_eq!(traced, expected);
        assert_eq!(traced.len(), 12);
    }

    #[test]
    fn directed_edges_partition_into_faces() {
        for e in [
            fixtures::k4(),
            fixtures::octahedron(),
            fixtures::icosahedron(),
            crate::gen::double_wheel(7).unwrap(),
        ] {
            let total: usize = e.trace_faces().iter().map(|f| f.len()).sum();
            assert_eq!(total, 2 * e.m());
            let mut seen = HashSet::new();
            for face in e.trace_faces() {
                for i in 0..face.len() {
                    let d = (face[i], face[(i + 1) % face.len()]);
                    assert!(seen.insert(d), "directed edge {d:?} traced twice");
                }
            }
        }
    }

    #[test]
    fn triangulation_check_reports_violations() {
        let octa = fixtures::octahedron();
        assert!(octa.is_triangulation());

        // Remove one edge (d,f): still a valid embedding, no longer a
        // triangulation.
        let mut rot: Vec<Vec<usize>> = (0..6).map(|v| octa.neighbors(v).to_vec()).collect();
        rot[3].retain(|&w| w != 5);
        rot[5].retain(|&w| w != 3);
        let e = Embedding::new(rot, octa.outer().to_vec()).unwrap();
        assert!(!e.is_triangulation());
        assert!(matches!(
            e.check_triangulation(),
            Err(Error::NotTriangulation(_))
        ));

        let hexagon = fixtures::cycle(6);
        assert!(!hexagon.is_triangulation());
    }

    #[test]
    fn induced_subgraph_identity_and_restriction() {
        let e = fixtures::octahedron();
        let all = VertexSet::new(0..6).unwrap();
        let (same, map) = e.induced_subgraph(&all).unwrap();
        assert_eq!(same, e);
        assert_eq!(map, vec![0, 1, 2, 3, 4, 5]);

        // outer triangle of the octahedron
        let (tri, map) = e
            .induced_subgraph(&VertexSet::new([0, 1, 2]).unwrap())
            .unwrap();
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(tri.m(), 3);
        assert_eq!(tri.trace_faces().len(), 2);
    }

    #[test]
    fn octahedron_minus_apex_is_disk_with_outer_four_cycle() {
        let e = fixtures::octahedron();
        let (u1, u2) = e.base_edge();
        let u3 = e.top_vertex().unwrap();
        assert_eq!((u1, u2, u3), (0, 1, 2));
        let keep = VertexSet::new((0..6).filter(|&v| v != u3)).unwrap();
        let (sub, map) = e.induced_subgraph(&keep).unwrap();
        let face = sub.face_from_directed_edge(1, 0).unwrap();
        // rotate so u1 comes first
        let k = face.iter().position(|&v| v == 0).unwrap();
        let mut outer: Vec<usize> = face[k..].to_vec();
        outer.extend_from_slice(&face[..k]);
        let outer_orig: Vec<usize> = outer.iter().map(|&v| map[v]).collect();
        assert_eq!(outer_orig, vec![0, 3, 5, 1]); // a, d, f, b
    }

    #[test]
    fn connectivity_oracle_matches_known_graphs() {
        let octa = fixtures::octahedron();
        assert!(octa.is_k_connected(4));
        assert!(!octa.is_k_connected(5));
        assert!(fixtures::k4().is_k_connected(3));
        assert!(!fixtures::k4().is_k_connected(4));
        let ico = fixtures::icosahedron();
        assert!(ico.is_k_connected(5));
        assert!(fixtures::cycle(6).is_k_connected(2));
        assert!(!fixtures::cycle(6).is_k_connected(3));
    }

    #[test]
    fn separating_triangle_detection() {
        assert!(!fixtures::octahedron().has_separating_triangle().unwrap());
        assert!(!fixtures::icosahedron().has_separating_triangle().unwrap());
        assert!(fixtures::icosahedron().is_k_connected(4));

        let glued = fixtures::glued_octahedra();
        assert!(glued.is_triangulation());
        assert_eq!(glued.find_separating_triangle().unwrap(), Some([3, 4, 5]));
        assert!(!glued.is_k_connected(4));

        let stacked = fixtures::stacked_octahedron();
        assert!(stacked.has_separating_triangle().unwrap());
        assert!(!stacked.is_k_connected(4));

        // non-triangulation input is an error
        assert!(fixtures::cycle(6).has_separating_triangle().is_err());
    }

    #[test]
    fn json_round_trip_and_rejection() {
        let e = fixtures::octahedron();
        let s = e.to_json();
        let back = Embedding::from_json(&s).unwrap();
        assert_eq!(back, e);

        // asymmetric adjacency
        let bad = r#"{"n":2,"rotation":[[1],[]],"outer":[0,1]}"#;
        assert!(Embedding::from_json(bad).is_err());
        // self loop
        let bad = r#"{"n":1,"rotation":[[0]],"outer":[0]}"#;
        assert!(Embedding::from_json(bad).is_err());
        // outer list not a face (wrong orientation)
        let mut f: GraphFile = serde_json::from_str(&s).unwrap();
        f.outer.reverse();
        let s2 = serde_json::to_string(&f).unwrap();
        assert!(Embedding::from_json(&s2).is_err());
        // n mismatch
        let bad = r#"{"n":3,"rotation":[[1],[0]],"outer":[0,1]}"#;
        assert!(Embedding::from_json(bad).is_err());
    }

    #[test]
    fn euler_rejects_disconnected_rotation_systems() {
        // two disjoint edges: 4 - 2 + 2 = 4 != 2
        let rot = vec![vec![1], vec![0], vec![3], vec![2]];
        assert!(Embedding::new(rot, vec![0, 1]).is_err());
    }
}
