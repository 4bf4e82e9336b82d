//! Hand-built embeddings used across the unit tests.
//!
//! Rotation systems were derived from explicit plane drawings; the
//! constructors validate them (Euler, symmetry, face orientation), so a
//! mistake here fails loudly.

use crate::graph::Embedding;

/// Tetrahedron; outer face `[0,2,1]`.
pub fn k4() -> Embedding {
    Embedding::new(
        vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![2, 0, 1]],
        vec![0, 2, 1],
    )
    .unwrap()
}

/// Octahedron with outer face `[0,2,1]`, i.e. `u1 = 0`, `u2 = 1`, `u3 = 2`.
///
/// Drawn as the outer triangle `0,1,2` with the inner triangle `3,4,5`
/// (vertex 3 adjacent to 0 and 2, vertex 4 to 0 and 1, vertex 5 to 1 and 2).
/// Antipodal pairs (non-edges): (0,5), (1,3), (2,4).
pub fn octahedron() -> Embedding {
    Embedding::new(
        vec![
            vec![1, 4, 3, 2],
            vec![2, 5, 4, 0],
            vec![0, 3, 5, 1],
            vec![5, 2, 0, 4],
            vec![5, 3, 0, 1],
            vec![2, 3, 4, 1],
        ],
        vec![0, 2, 1],
    )
    .unwrap()
}

/// Icosahedron: apex 0, upper ring 1..=5, lower ring 6..=10, apex 11.
pub fn icosahedron() -> Embedding {
    let u = |t: i64| 1 + t.rem_euclid(5) as usize;
    let l = |t: i64| 6 + t.rem_euclid(5) as usize;
    let mut rot = vec![vec![1, 2, 3, 4, 5]];
    for t in 0..5i64 {
        rot.push(vec![l(t), u(t + 1), 0, u(t - 1), l(t - 1)]);
    }
    for t in 0..5i64 {
        rot.push(vec![11, l(t + 1), u(t + 1), u(t), l(t - 1)]);
    }
    rot.push(vec![6, 10, 9, 8, 7]);
    Embedding::new(rot, vec![11, 6, 10]).unwrap()
}

/// Two octahedra identified along a triangle: the octahedron above with a
/// second one glued into its face (3,4,5). The glued triangle (3,4,5) is a
/// separating triangle, so this triangulation is not 4-connected.
pub fn glued_octahedra() -> Embedding {
    Embedding::new(
        vec![
            vec![1, 4, 3, 2],
            vec![2, 5, 4, 0],
            vec![0, 3, 5, 1],
            vec![5, 2, 0, 4, 8, 7],
            vec![5, 6, 8, 3, 0, 1],
            vec![2, 3, 7, 6, 4, 1],
            vec![5, 7, 8, 4],
            vec![5, 3, 8, 6],
            vec![6, 7, 3, 4],
        ],
        vec![0, 2, 1],
    )
    .unwrap()
}

/// Octahedron with one degree-3 vertex stacked into face (3,4,5).
pub fn stacked_octahedron() -> Embedding {
    Embedding::new(
        vec![
            vec![1, 4, 3, 2],
            vec![2, 5, 4, 0],
            vec![0, 3, 5, 1],
            vec![6, 5, 2, 0, 4],
            vec![5, 6, 3, 0, 1],
            vec![2, 3, 6, 4, 1],
            vec![3, 4, 5],
        ],
        vec![0, 2, 1],
    )
    .unwrap()
}

/// Plain cycle on `k` vertices.
pub fn cycle(k: usize) -> Embedding {
    let rot = (0..k).map(|i| vec![(i + k - 1) % k, (i + 1) % k]).collect();
    Embedding::new(rot, (0..k).collect()).unwrap()
}

/// Smallest peelable disk: outer triangle 0,1,2 plus a hub 3 adjacent to
/// all three. Outer cycle `[0,1,2]` with endpoints `u1 = 0`, `u2 = 2`.
pub fn four_vertex_disk() -> Embedding {
    Embedding::new(
        vec![vec![1, 2, 3], vec![0, 3, 2], vec![1, 3, 0], vec![1, 0, 2]],
        vec![0, 1, 2],
    )
    .unwrap()
}

/// Disk with outer pentagon 0..=4 and three interior vertices:
/// a high 2-leg-center `x = 5` (legs to c1 and c5) that dominates the two
/// side-by-side minimal centers `y = 6` (legs to c1,c3) and `y' = 7`
/// (legs to c3,c5).
pub fn pentagon_disk() -> Embedding {
    Embedding::new(
        vec![
            vec![1, 4, 5, 6],
            vec![0, 6, 2],
            vec![1, 6, 7, 3],
            vec![2, 7, 4],
            vec![3, 7, 5, 0],
            vec![6, 0, 4, 7],
            vec![1, 0, 5, 7, 2],
            vec![2, 6, 5, 4, 3],
        ],
        vec![0, 1, 2, 3, 4],
    )
    .unwrap()
}

/// Disk whose unique 2-leg-center `x = 4` has only complex 2-legs: the
/// outer vertex c2 = 1 between its legs has degree 4 via the two pocket
/// vertices 5 and 6, neither of which is a 2-leg-center. Peeling must take
/// the singleton branch and remove c2.
pub fn pocket_disk() -> Embedding {
    Embedding::new(
        vec![
            vec![1, 3, 4, 5],
            vec![0, 5, 6, 2],
            vec![1, 6, 4, 3],
            vec![2, 4, 0],
            vec![5, 0, 3, 2, 6],
            vec![1, 0, 4, 6],
            vec![1, 5, 4, 2],
        ],
        vec![0, 1, 2, 3],
    )
    .unwrap()
}

/// 4-cycle `0,1,2,3` with the chord (0,2); outer face is the 4-cycle.
pub fn square_with_chord() -> Embedding {
    Embedding::new(
        vec![vec![1, 3, 2], vec![0, 2], vec![1, 0, 3], vec![2, 0]],
        vec![0, 1, 2, 3],
    )
    .unwrap()
}
