//! Deterministic generators for 4-connected triangulation corpora.
//!
//! Two families: `double_wheel` (a cycle plus two apexes, 4-connected by
//! construction) and `random_4ct` (random stacked growth followed by random
//! diagonal flips until no separating triangle remains, with
//! reject-and-retry). Both are pure functions of their parameters, so a
//! fixed spec and seed always reproduce the same bytes.

use crate::error::{Error, Result};
use crate::graph::{trace_rotation_faces, Embedding};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

/// Generation request: a family plus the rule for designating the outer
/// face of the result.
#[derive(Debug, Clone)]
pub struct GenSpec {
    pub family: Family,
    pub outer: OuterChoice,
}

#[derive(Debug, Clone)]
pub enum Family {
    /// Cycle of length `cycle_len >= 4` plus two apexes adjacent to every
    /// cycle vertex.
    DoubleWheel { cycle_len: usize },
    /// Random triangulation growth plus diagonal flips, rejected until
    /// 4-connected.
    RandomFlip {
        n: usize,
        seed: u64,
        max_attempts: u64,
    },
}

#[derive(Debug, Clone, Default)]
pub enum OuterChoice {
    /// Whatever the family picks (`double_wheel`: a face through both the
    /// first cycle vertex and an apex; `random_4ct`: the lexicographically
    /// smallest facial triangle).
    #[default]
    FamilyDefault,
    LexSmallestFace,
    /// A specific facial triangle, given as an unordered vertex triple.
    Triangle([usize; 3]),
}

impl GenSpec {
    pub fn generate(&self) -> Result<Embedding> {
        let e = match self.family {
            Family::DoubleWheel { cycle_len } => double_wheel(cycle_len)?,
            Family::RandomFlip {
                n,
                seed,
                max_attempts,
            } => random_4ct_with_attempts(n, seed, max_attempts)?,
        };
        match &self.outer {
            OuterChoice::FamilyDefault => Ok(e),
            OuterChoice::LexSmallestFace => {
                let face = lex_smallest_triangle_face(&e)?;
                e.with_outer_face(&face)
            }
            OuterChoice::Triangle(t) => {
                let mut want = *t;
                want.sort_unstable();
                let face = e
                    .trace_faces()
                    .iter()
                    .find(|f| {
                        let mut s = f.to_vec();
                        s.sort_unstable();
                        s == want
                    })
                    .cloned()
                    .ok_or_else(|| {
                        Error::Precondition(format!("{t:?} is not a facial triangle"))
                    })?;
                e.with_outer_face(&face)
            }
        }
    }
}

fn lex_smallest_triangle_face(e: &Embedding) -> Result<Vec<usize>> {
    e.trace_faces()
        .iter()
        .filter(|f| f.len() == 3)
        .map(|f| {
            let k = f.iter().enumerate().min_by_key(|(_, &v)| v).unwrap().0;
            let mut out = f[k..].to_vec();
            out.extend_from_slice(&f[..k]);
            out
        })
        .min()
        .ok_or_else(|| Error::Precondition("no triangular face".into()))
}

/// Cycle `0..cycle_len` plus apexes `N = cycle_len` and `S = cycle_len+1`,
/// each adjacent to every cycle vertex. 4-connected for every
/// `cycle_len >= 4`; the outer face is `(c0, N, c1)`, so `u3 = N` and the
/// whole ordering collapses to a single fan around `S`.
pub fn double_wheel(cycle_len: usize) -> Result<Embedding> {
    if cycle_len < 4 {
        return Err(Error::Precondition(format!(
            "cycle_len = {cycle_len} < 4: both apexes would share triangles with the cycle"
        )));
    }
    let k = cycle_len;
    let (north, south) = (k, k + 1);
    let mut rot: Vec<Vec<usize>> = Vec::with_capacity(k + 2);
    for i in 0..k {
        rot.push(vec![north, (i + 1) % k, south, (i + k - 1) % k]);
    }
    // seen from the north apex the cycle winds backwards
    let mut north_rot = vec![0];
    north_rot.extend((1..k).rev());
    rot.push(north_rot);
    rot.push((0..k).collect());
    Embedding::new(rot, vec![0, north, 1])
}

/// Random stacked triangulation: start from `K4`, repeatedly insert a
/// degree-3 vertex into a uniformly random face. Contains separating
/// triangles for every `n >= 5`. Outer face: lexicographically smallest
/// facial triangle.
pub fn random_stacked(n: usize, seed: u64) -> Result<Embedding> {
    if n < 4 {
        return Err(Error::Precondition(format!("n = {n} < 4")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rot = grow_stacked(n, &mut rng);
    finish(rot)
}

/// Random 4-connected triangulation on `n >= 6` vertices, deterministic in
/// `seed`. Fails (for retry with another seed) if the flip walk does not
/// reach a 4-connected triangulation within the attempt budget.
pub fn random_4ct(n: usize, seed: u64) -> Result<Embedding> {
    random_4ct_with_attempts(n, seed, 1000 + 60 * n as u64)
}

pub fn random_4ct_with_attempts(n: usize, seed: u64, max_attempts: u64) -> Result<Embedding> {
    if n < 6 {
        return Err(Error::Precondition(format!(
            "n = {n}: no triangulation below 6 vertices is 4-connected"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rot = grow_stacked(n, &mut rng);

    let mut attempts = 0u64;
    loop {
        let separating = separating_triangles(&rot);
        if separating.is_empty() {
            break;
        }
        if attempts >= max_attempts {
            return Err(Error::GenerationFailed { attempts });
        }
        attempts += 1;
        // Flip an edge of a random separating triangle; that triangle loses
        // an edge and disappears. Fall back to a fully random flip when the
        // chosen triangle has no flippable edge.
        let tri = separating[rng.random_range(0..separating.len())];
        let mut edges = [(tri[0], tri[1]), (tri[0], tri[2]), (tri[1], tri[2])];
        edges.shuffle(&mut rng);
        let flipped = edges.iter().any(|&(u, v)| try_flip(&mut rot, u, v));
        if !flipped {
            let mut all: Vec<(usize, usize)> = all_edges(&rot);
            all.shuffle(&mut rng);
            if !all.into_iter().any(|(u, v)| try_flip(&mut rot, u, v)) {
                return Err(Error::GenerationFailed { attempts });
            }
        }
    }
    finish(rot)
}

fn finish(rot: Vec<Vec<usize>>) -> Result<Embedding> {
    let faces = trace_rotation_faces(&rot)?;
    let outer = faces
        .iter()
        .filter(|f| f.len() == 3)
        .map(|f| {
            let k = f.iter().enumerate().min_by_key(|(_, &v)| v).unwrap().0;
            let mut out = f[k..].to_vec();
            out.extend_from_slice(&f[..k]);
            out
        })
        .min()
        .ok_or_else(|| Error::Internal("generated graph has no triangular face".into()))?;
    Embedding::new(rot, outer)
}

fn grow_stacked(n: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<usize>> {
    // K4 with a consistent rotation system
    let mut rot: Vec<Vec<usize>> = vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![2, 0, 1]];
    let mut faces: Vec<[usize; 3]> = vec![[0, 2, 1], [0, 1, 3], [1, 2, 3], [2, 0, 3]];
    for t in 4..n {
        let fi = rng.random_range(0..faces.len());
        let [p, q, r] = faces[fi];
        insert_in_face(&mut rot, t, [p, q, r]);
        faces[fi] = [p, q, t];
        faces.push([q, r, t]);
        faces.push([r, p, t]);
    }
    rot
}

/// Splits the traced face `[p,q,r]` by a new degree-3 vertex `t`.
fn insert_in_face(rot: &mut Vec<Vec<usize>>, t: usize, [p, q, r]: [usize; 3]) {
    debug_assert_eq!(rot.len(), t);
    insert_before(&mut rot[q], p, t);
    insert_before(&mut rot[r], q, t);
    insert_before(&mut rot[p], r, t);
    rot.push(vec![p, q, r]);
}

fn insert_before(list: &mut Vec<usize>, anchor: usize, value: usize) {
    let i = list
        .iter()
        .position(|&x| x == anchor)
        .expect("anchor neighbor present");
    list.insert(i, value);
}

fn insert_after(list: &mut Vec<usize>, anchor: usize, value: usize) {
    let i = list
        .iter()
        .position(|&x| x == anchor)
        .expect("anchor neighbor present");
    list.insert(i + 1, value);
}

/// Third vertex of the traced face containing the directed edge `u -> v`:
/// the predecessor of `u` in the rotation at `v`.
fn face_companion(rot: &[Vec<usize>], u: usize, v: usize) -> usize {
    let list = &rot[v];
    let i = list.iter().position(|&x| x == u).expect("edge present");
    list[(i + list.len() - 1) % list.len()]
}

/// Diagonal flip of edge `(u,v)`: replace it by the opposite diagonal of
/// the quadrilateral formed by its two incident triangles. Refuses flips
/// that would create a multi-edge or drop an endpoint below degree 3.
fn try_flip(rot: &mut [Vec<usize>], u: usize, v: usize) -> bool {
    let w = face_companion(rot, u, v); // faces [u,v,w] and [v,u,x]
    let x = face_companion(rot, v, u);
    if w == x || rot[u].len() <= 3 || rot[v].len() <= 3 || rot[w].contains(&x) {
        return false;
    }
    rot[u].retain(|&y| y != v);
    rot[v].retain(|&y| y != u);
    insert_after(&mut rot[w], u, x);
    insert_after(&mut rot[x], v, w);
    true
}

fn all_edges(rot: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (u, nbrs) in rot.iter().enumerate() {
        for &v in nbrs {
            if v > u {
                out.push((u, v));
            }
        }
    }
    out
}

/// All 3-cliques that are not faces of the rotation system.
fn separating_triangles(rot: &[Vec<usize>]) -> Vec<[usize; 3]> {
    let faces = trace_rotation_faces(rot).expect("generator keeps rotations valid");
    let face_set: HashSet<[usize; 3]> = faces
        .iter()
        .filter(|f| f.len() == 3)
        .map(|f| {
            let mut t = [f[0], f[1], f[2]];
            t.sort_unstable();
            t
        })
        .collect();
    let adjacency: Vec<HashSet<usize>> = rot
        .iter()
        .map(|nbrs| nbrs.iter().copied().collect())
        .collect();
    let mut out = Vec::new();
    for (u, nbrs) in rot.iter().enumerate() {
        for &v in nbrs {
            if v <= u {
                continue;
            }
            let probe = if rot[u].len() <= rot[v].len() { u } else { v };
            for &w in &rot[probe] {
                if w > v && adjacency[u].contains(&w) && adjacency[v].contains(&w) {
                    let t = [u, v, w];
                    if !face_set.contains(&t) {
                        out.push(t);
                    }
                }
            }
        }
    }
    out
}
