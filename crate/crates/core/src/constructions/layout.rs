//! Barycentric (Tutte) straight-line layout of a triangulation.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::geometry::{orient, Point, Q};
use crate::plane_map::PlaneMap;

/// Relative residual the linear solve must reach.
pub const LAYOUT_TOLERANCE: f64 = 1e-9;

/// Coordinates are rounded to multiples of `2^-GRID_BITS`.
pub const GRID_BITS: u32 = 40;

#[derive(Clone, Debug, PartialEq)]
pub struct Layout {
    pub points: Vec<Point>,
    pub outer_face: usize,
    pub residual: f64,
}

/// Places face `outer` on the triangle `(0,0), (1,0), (1/2,1)` and every
/// other vertex at the average of its neighbours. Fails unless every inner
/// face comes out as a non-degenerate triangle of one orientation.
pub fn tutte_layout(map: &PlaneMap, outer: usize) -> Result<Layout> {
    let n = map.vertex_count();
    let face = map.face(outer);
    if face.len() != 3 || map.faces().iter().any(|f| f.len() != 3) {
        return Err(Error::ConstructionFailed(
            "layout needs a triangulation".into(),
        ));
    }
    let corners = [(0.0, 0.0), (1.0, 0.0), (0.5, 1.0)];
    let mut fixed: Vec<Option<(f64, f64)>> = vec![None; n];
    for (i, &v) in face.incident_vertices.iter().enumerate() {
        fixed[v] = Some(corners[i]);
    }
    let free: Vec<usize> = (0..n).filter(|&v| fixed[v].is_none()).collect();
    let mut index = vec![usize::MAX; n];
    for (i, &v) in free.iter().enumerate() {
        index[v] = i;
    }
    let k = free.len();
    // Laplacian rows: deg(v) x_v - sum of free neighbours = sum of fixed ones.
    let mut a = vec![vec![0.0f64; k]; k];
    let mut rhs = vec![[0.0f64; 2]; k];
    for (i, &v) in free.iter().enumerate() {
        for &d in map.rotation(v) {
            let w = map.head(d);
            a[i][i] += 1.0;
            match fixed[w] {
                Some((x, y)) => {
                    rhs[i][0] += x;
                    rhs[i][1] += y;
                }
                None => a[i][index[w]] -= 1.0,
            }
        }
    }
    let solution = solve(a.clone(), rhs.clone())?;
    let residual = relative_residual(&a, &rhs, &solution);
    if residual > LAYOUT_TOLERANCE {
        return Err(Error::DegenerateGeometry(format!(
            "layout residual {residual:e}"
        )));
    }
    let scale = (1u64 << GRID_BITS) as f64;
    let snap = |x: f64| {
        Q::new(
            BigInt::from((x * scale + 0.5) as i64),
            BigInt::from(1u64 << GRID_BITS),
        )
    };
    let points: Vec<Point> = (0..n)
        .map(|v| {
            let (x, y) = fixed[v].unwrap_or_else(|| (solution[index[v]][0], solution[index[v]][1]));
            Point::new(snap(x), snap(y))
        })
        .collect();
    check_faces(map, outer, &points)?;
    Ok(Layout {
        points,
        outer_face: outer,
        residual,
    })
}

/// Every inner face must have the same strict orientation, opposite to the
/// outer one.
fn check_faces(map: &PlaneMap, outer: usize, points: &[Point]) -> Result<()> {
    let sign = |f: usize| {
        let v = &map.face(f).incident_vertices;
        orient(&points[v[0]], &points[v[1]], &points[v[2]])
    };
    let outer_sign = sign(outer);
    for f in 0..map.face_count() {
        let s = sign(f);
        let bad = if f == outer {
            s == Ordering::Equal
        } else {
            s == Ordering::Equal || s == outer_sign
        };
        if bad {
            return Err(Error::DegenerateGeometry(format!(
                "face {f} is flat or flipped in the layout"
            )));
        }
    }
    Ok(())
}

/// Dense Gaussian elimination with partial pivoting.
fn solve(mut a: Vec<Vec<f64>>, mut b: Vec<[f64; 2]>) -> Result<Vec<[f64; 2]>> {
    let k = a.len();
    for col in 0..k {
        let pivot = (col..k)
            .max_by(|&i, &j| {
                a[i][col]
                    .abs()
                    .partial_cmp(&a[j][col].abs())
                    .unwrap_or(Ordering::Equal)
            })
            .expect("non-empty range");
        if a[pivot][col].abs() < 1e-300 {
            return Err(Error::DegenerateGeometry("singular layout system".into()));
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..k {
            let factor = a[row][col] / a[col][col];
            if factor == 0.0 {
                continue;
            }
            for c in col..k {
                a[row][c] -= factor * a[col][c];
            }
            for t in 0..2 {
                b[row][t] -= factor * b[col][t];
            }
        }
    }
    let mut x = vec![[0.0; 2]; k];
    for row in (0..k).rev() {
        for t in 0..2 {
            let mut s = b[row][t];
            for c in row + 1..k {
                s -= a[row][c] * x[c][t];
            }
            x[row][t] = s / a[row][row];
        }
    }
    Ok(x)
}

fn relative_residual(a: &[Vec<f64>], b: &[[f64; 2]], x: &[[f64; 2]]) -> f64 {
    let mut worst = 0.0f64;
    let mut norm = 1e-300f64;
    for (row, rhs) in a.iter().zip(b) {
        for t in 0..2 {
            let r: f64 = row.iter().zip(x).map(|(c, xi)| c * xi[t]).sum::<f64>() - rhs[t];
            worst = worst.max(r.abs());
            norm = norm.max(rhs[t].abs());
        }
    }
    worst / norm
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::generate::random_triangulation;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn platonic_triangulations_lay_out() {
        for map in [
            fixtures::tetrahedron(),
            fixtures::octahedron(),
            fixtures::icosahedron(),
        ] {
            let l = tutte_layout(&map, 0).unwrap();
            assert!(l.residual <= LAYOUT_TOLERANCE);
            assert_eq!(l.points.len(), map.vertex_count());
        }
    }

    #[test]
    fn random_triangulations_lay_out() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 4..30 {
            let t = random_triangulation(&mut rng, n, 2 * n);
            tutte_layout(&t, 0).unwrap();
        }
    }

    #[test]
    fn non_triangulations_are_refused() {
        assert!(tutte_layout(&fixtures::grid_map(3, 3), 0).is_err());
    }
}
