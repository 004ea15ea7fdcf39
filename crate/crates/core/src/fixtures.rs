//! Named plane maps used throughout tests, examples and the CLI.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::crossings::Drawing;
use crate::error::Result;
use crate::geometry::{Point, Q};
use crate::graph::AbstractGraph;
use crate::plane_map::{DartId, PlaneMap};

/// Builds a map from consistently oriented face cycles of a closed sphere
/// map; each undirected edge must appear once in each direction.
pub fn from_oriented_faces(vertex_count: usize, faces: &[Vec<usize>]) -> Result<PlaneMap> {
    let mut index: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut edges = Vec::new();
    for face in faces {
        for i in 0..face.len() {
            let (a, b) = (face[i], face[(i + 1) % face.len()]);
            let key = (a.min(b), a.max(b));
            index.entry(key).or_insert_with(|| {
                edges.push(key);
                edges.len() - 1
            });
        }
    }
    let dart = |from: usize, to: usize| -> DartId {
        let e = index[&(from.min(to), from.max(to))];
        if from < to {
            2 * e
        } else {
            2 * e + 1
        }
    };
    // Around a face a -> b -> c the rotation at b sends dart b->a to b->c.
    let mut succ: BTreeMap<DartId, DartId> = BTreeMap::new();
    for face in faces {
        let k = face.len();
        for i in 0..k {
            let (a, b, c) = (face[i], face[(i + 1) % k], face[(i + 2) % k]);
            succ.insert(dart(b, a), dart(b, c));
        }
    }
    let mut rotations = vec![Vec::new(); vertex_count];
    let mut seen = BTreeMap::new();
    for &start in succ.keys() {
        if seen.contains_key(&start) {
            continue;
        }
        let (a, b) = edges[start / 2];
        let v = if start % 2 == 0 { a } else { b };
        let mut d = start;
        loop {
            seen.insert(d, ());
            rotations[v].push(d);
            d = succ[&d];
            if d == start {
                break;
            }
        }
    }
    let graph = AbstractGraph::new(vertex_count, edges)?;
    PlaneMap::new(graph, rotations)
}

/// Cycle `C_n` on `0..n`.
pub fn cycle_map(n: usize) -> PlaneMap {
    let g = AbstractGraph::cycle(n);
    let rotations = (0..n)
        .map(|i| vec![2 * i, 2 * ((i + n - 1) % n) + 1])
        .collect();
    PlaneMap::new(g, rotations).expect("cycle embeds")
}

/// Path on `n` vertices.
pub fn path_map(n: usize) -> PlaneMap {
    let g = AbstractGraph::path(n);
    let rotations = (0..n)
        .map(|i| {
            let mut r = Vec::new();
            if i > 0 {
                r.push(2 * (i - 1) + 1);
            }
            if i + 1 < n {
                r.push(2 * i);
            }
            r
        })
        .collect();
    PlaneMap::new(g, rotations).expect("path embeds")
}

/// Star `K_{1,k}`: centre `0`, leaves `1..=k` in rotation order.
pub fn star_map(k: usize) -> PlaneMap {
    let g = AbstractGraph::new(k + 1, (1..=k).map(|i| (0, i)).collect()).expect("star");
    let mut rotations = vec![(0..k).map(|i| 2 * i).collect::<Vec<_>>()];
    rotations.extend((0..k).map(|i| vec![2 * i + 1]));
    PlaneMap::new(g, rotations).expect("star embeds")
}

/// Single vertex.
pub fn single_vertex() -> PlaneMap {
    PlaneMap::new(AbstractGraph::empty(1), vec![Vec::new()]).expect("K1 embeds")
}

pub fn tetrahedron() -> PlaneMap {
    from_oriented_faces(
        4,
        &[vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 1], vec![1, 3, 2]],
    )
    .expect("tetrahedron")
}

/// Octahedron: poles `0` and `1`, equator `2..6`.
pub fn octahedron() -> PlaneMap {
    let mut faces = Vec::new();
    for i in 0..4 {
        let (a, b) = (2 + i, 2 + (i + 1) % 4);
        faces.push(vec![0, a, b]);
        faces.push(vec![1, b, a]);
    }
    from_oriented_faces(6, &faces).expect("octahedron")
}

/// Icosahedron: top `0`, upper ring `1..6`, lower ring `6..11`, bottom `11`.
pub fn icosahedron() -> PlaneMap {
    let up = |i: usize| 1 + i % 5;
    let low = |i: usize| 6 + i % 5;
    let mut faces = Vec::new();
    for i in 0..5 {
        faces.push(vec![0, up(i), up(i + 1)]);
        faces.push(vec![up(i), low(i), up(i + 1)]);
        faces.push(vec![up(i + 1), low(i), low(i + 1)]);
        faces.push(vec![11, low(i + 1), low(i)]);
    }
    from_oriented_faces(12, &faces).expect("icosahedron")
}

/// `rows x cols` grid; vertex `(r, c)` is `r * cols + c`.
pub fn grid_map(rows: usize, cols: usize) -> PlaneMap {
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    let mut index = BTreeMap::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                index.insert((id(r, c), id(r, c + 1)), edges.len());
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                index.insert((id(r, c), id(r + 1, c)), edges.len());
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    let dart = |a: usize, b: usize| {
        let e = index[&(a.min(b), a.max(b))];
        if a < b {
            2 * e
        } else {
            2 * e + 1
        }
    };
    let mut rotations = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let v = id(r, c);
            let mut rot = Vec::new();
            // East, north (row above), west, south: counter-clockwise with rows growing downwards.
            if c + 1 < cols {
                rot.push(dart(v, id(r, c + 1)));
            }
            if r > 0 {
                rot.push(dart(v, id(r - 1, c)));
            }
            if c > 0 {
                rot.push(dart(v, id(r, c - 1)));
            }
            if r + 1 < rows {
                rot.push(dart(v, id(r + 1, c)));
            }
            rotations.push(rot);
        }
    }
    let g = AbstractGraph::new(rows * cols, edges).expect("grid");
    PlaneMap::new(g, rotations).expect("grid embeds")
}

/// `n` points in convex position on the unit circle, with rational
/// coordinates `((1 - t^2) / (1 + t^2), 2t / (1 + t^2))`, `t = -2 + 4i/n`.
pub fn convex_points(n: usize) -> Vec<Point> {
    (0..n)
        .map(|i| {
            let t = Q::new(
                BigInt::from(4 * i as i64 - 2 * n as i64),
                BigInt::from(n as i64),
            );
            let one = Q::from_integer(BigInt::from(1));
            let t2 = &t * &t;
            let den = &one + &t2;
            let two_t = &t + &t;
            Point::new((&one - &t2) / &den, two_t / den)
        })
        .collect()
}

/// Straight-line `K_n` on [`convex_points`].
pub fn convex_complete_drawing(n: usize) -> Drawing {
    Drawing::straight(
        convex_points(n),
        AbstractGraph::complete(n).edges().to_vec(),
    )
}

/// Straight-line `K_5` with a single crossing: a triangle with two points inside.
pub fn k5_one_crossing_drawing() -> Drawing {
    let pts = [(0, 0), (10, 0), (5, 10), (4, 3), (6, 3)];
    Drawing::straight(
        pts.iter().map(|&(x, y)| Point::from_ints(x, y)).collect(),
        AbstractGraph::complete(5).edges().to_vec(),
    )
}

/// Convex `K_6` without its three long diagonals: the octahedron graph drawn
/// with two crossings on every diagonal.
pub fn convex_octahedron_drawing() -> Drawing {
    let edges = AbstractGraph::complete(6)
        .edges()
        .iter()
        .copied()
        .filter(|&(a, b)| b - a != 3)
        .collect();
    Drawing::straight(convex_points(6), edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polyhedra_have_expected_counts() {
        let t = tetrahedron();
        assert_eq!(
            (t.vertex_count(), t.edge_count(), t.face_count()),
            (4, 6, 4)
        );
        let o = octahedron();
        assert_eq!(
            (o.vertex_count(), o.edge_count(), o.face_count()),
            (6, 12, 8)
        );
        let i = icosahedron();
        assert_eq!(
            (i.vertex_count(), i.edge_count(), i.face_count()),
            (12, 30, 20)
        );
        assert!((0..12).all(|v| i.degree(v) == 5));
    }

    #[test]
    fn grid_and_star() {
        let g = grid_map(4, 4);
        assert_eq!(
            (g.vertex_count(), g.edge_count(), g.face_count()),
            (16, 24, 10)
        );
        let s = star_map(6);
        assert_eq!(s.face_count(), 1);
        assert_eq!(path_map(3).face_count(), 1);
    }
}
