//! Saturation of a simple connected plane graph and the triangulation
//! obtained by adding its radial graph.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::AbstractGraph;
use crate::plane_map::{radial, DartId, PlaneMap};
use crate::wbw::{shared_corner, WbwCertificate};

/// `H̄`: every corner of `H` gets a new neighbour of its vertex, and the new
/// vertices inside each face are closed into a cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Saturation {
    pub map: PlaneMap,
    /// Original vertices keep their ids, original edges keep their darts.
    pub tau: Vec<usize>,
    /// New vertices in each corner `c(d)` of `H`, counter-clockwise.
    pub corner_vertices: Vec<Vec<usize>>,
    /// The spoke edge from the corner's vertex to each of those vertices.
    pub corner_spokes: Vec<Vec<usize>>,
    /// New neighbours of each original vertex.
    pub new_neighbours: Vec<Vec<usize>>,
}

fn check_input(h: &PlaneMap) -> Result<()> {
    if let Some((u, v)) = h.graph().first_parallel_pair() {
        return Err(Error::NotSimple { u, v });
    }
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

pub fn saturate(h: &PlaneMap) -> Result<Saturation> {
    check_input(h)?;
    let n = h.vertex_count();
    if h.edge_count() == 0 {
        // K_1: three new vertices in a triangle around it.
        let g = AbstractGraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)])?;
        let rot = vec![vec![0, 2, 4], vec![6, 1, 11], vec![8, 3, 7], vec![10, 5, 9]];
        let map = PlaneMap::new(g, rot)?;
        return Ok(Saturation {
            map,
            tau: vec![0],
            corner_vertices: Vec::new(),
            corner_spokes: Vec::new(),
            new_neighbours: vec![vec![1, 2, 3]],
        });
    }
    let mut edges: Vec<(usize, usize)> = h.graph().edges().to_vec();
    let mut next_vertex = n;
    let mut corner_vertices = vec![Vec::new(); h.dart_count()];
    let mut corner_spokes = vec![Vec::new(); h.dart_count()];
    for d in 0..h.dart_count() {
        let v = h.origin(d);
        let count = if h.degree(v) == 1 { 2 } else { 1 };
        for _ in 0..count {
            corner_vertices[d].push(next_vertex);
            corner_spokes[d].push(edges.len());
            edges.push((v, next_vertex));
            next_vertex += 1;
        }
    }
    let mut rotation: Vec<Vec<DartId>> = vec![Vec::new(); next_vertex];
    for v in 0..n {
        for &d in h.rotation(v) {
            rotation[v].push(d);
            rotation[v].extend(corner_spokes[d].iter().map(|&k| 2 * k));
        }
    }
    // Spoke darts at the new vertices, then the face cycles.
    let mut spoke_at = vec![0; next_vertex];
    for d in 0..h.dart_count() {
        for (&w, &k) in corner_vertices[d].iter().zip(&corner_spokes[d]) {
            spoke_at[w] = 2 * k + 1;
        }
    }
    let mut prev_dart = vec![0; next_vertex];
    let mut next_dart = vec![0; next_vertex];
    for face in h.faces() {
        // The corner entered just before leaving along boundary dart `b`.
        let cycle: Vec<usize> = face
            .boundary
            .iter()
            .flat_map(|&b| corner_vertices[h.rot_prev(b)].iter().copied())
            .collect();
        for i in 0..cycle.len() {
            let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
            let k = edges.len();
            edges.push((a, b));
            next_dart[a] = 2 * k;
            prev_dart[b] = 2 * k + 1;
        }
    }
    for w in n..next_vertex {
        rotation[w] = vec![next_dart[w], spoke_at[w], prev_dart[w]];
    }
    let graph = AbstractGraph::new(next_vertex, edges)?;
    let map = PlaneMap::new(graph, rotation)?;
    let new_neighbours = (0..n)
        .map(|v| {
            h.rotation(v)
                .iter()
                .flat_map(|&d| corner_vertices[d].iter().copied())
                .collect()
        })
        .collect();
    Ok(Saturation {
        map,
        tau: (0..n).collect(),
        corner_vertices,
        corner_spokes,
        new_neighbours,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangulationRecord {
    pub saturated: Saturation,
    /// `H̄ ∪ R_H̄`: vertices of `H̄`, then one vertex per face of `H̄`; edges of
    /// `H̄` keep their ids and radial edges follow.
    pub triangulation: PlaneMap,
    pub tau: Vec<usize>,
    /// Radial edge of each corner `c(d)` of `H̄`.
    pub radial_edge: Vec<usize>,
}

impl TriangulationRecord {
    pub fn new_vertices(&self, v: usize) -> &[usize] {
        &self.saturated.new_neighbours[v]
    }

    pub fn face_vertex(&self, face: usize) -> usize {
        self.saturated.map.vertex_count() + face
    }
}

pub fn triangulate(h: &PlaneMap) -> Result<TriangulationRecord> {
    let saturated = saturate(h)?;
    let s = &saturated.map;
    let r = radial(s)?;
    let m = s.edge_count();
    let mut edges = s.graph().edges().to_vec();
    edges.extend(r.map.graph().edges().iter().copied());
    let mut radial_edge = vec![0; s.dart_count()];
    let mut rotation: Vec<Vec<DartId>> = Vec::with_capacity(r.map.vertex_count());
    for v in 0..s.vertex_count() {
        let mut rot = Vec::with_capacity(2 * s.degree(v));
        for &d in s.rotation(v) {
            rot.push(d);
            let [k] = r.corner_edges[d][..] else {
                return Err(Error::ConstructionFailed(format!(
                    "corner at {v} has a doubled radial edge"
                )));
            };
            radial_edge[d] = m + k;
            rot.push(2 * (m + k));
        }
        rotation.push(rot);
    }
    for f in s.vertex_count()..r.map.vertex_count() {
        rotation.push(r.map.rotation(f).iter().map(|&d| d + 2 * m).collect());
    }
    let graph = AbstractGraph::new(r.map.vertex_count(), edges)?;
    let triangulation = PlaneMap::new(graph, rotation)?;
    let tau = saturated.tau.clone();
    let rec = TriangulationRecord {
        saturated,
        triangulation,
        tau,
        radial_edge,
    };
    check_triangulation(&rec.triangulation)?;
    Ok(rec)
}

/// Simple, every face a triangle, no separating pair of vertices.
pub fn check_triangulation(t: &PlaneMap) -> Result<()> {
    if !t.is_simple() {
        return Err(Error::ConstructionFailed(
            "triangulation has parallel edges".into(),
        ));
    }
    if let Some(f) = t.faces().iter().find(|f| f.len() != 3) {
        return Err(Error::ConstructionFailed(format!(
            "face {} has {} sides",
            f.id,
            f.len()
        )));
    }
    if !t.graph().is_three_connected() {
        return Err(Error::ConstructionFailed(
            "triangulation is not 3-connected".into(),
        ));
    }
    Ok(())
}

/// Lifts a wbw path of `H` to one of length `4ℓ - 3` in `H_Δ`: between two
/// attached edges goes the spoke of their corner, flanked by the radial edges
/// of the two corners it splits.
pub fn lift_wbw_path(
    rec: &TriangulationRecord,
    h: &PlaneMap,
    cert: &WbwCertificate,
) -> Result<WbwCertificate> {
    cert.validate(h)?;
    let s = &rec.saturated;
    let mut edges = vec![cert.edges[0]];
    for w in cert.edges.windows(2) {
        let (e, f) = (w[0], w[1]);
        let corner = shared_corner(h, e, f).ok_or_else(|| {
            Error::InvalidCertificate(format!("edges {e} and {f} are not attached"))
        })?;
        let spoke = s.corner_spokes[corner][0];
        // At the shared vertex `H̄` reads: corner dart, spoke, next dart.
        let spoke_dart = s
            .map
            .dart_of_edge_at(spoke, h.origin(corner))
            .expect("spoke leaves its corner");
        let (near_e, near_f) = if corner / 2 == e {
            (rec.radial_edge[corner], rec.radial_edge[spoke_dart])
        } else {
            (rec.radial_edge[spoke_dart], rec.radial_edge[corner])
        };
        edges.extend([near_e, spoke, near_f, f]);
    }
    let lifted = WbwCertificate {
        x: rec.tau[cert.x],
        y: rec.tau[cert.y],
        edges,
    };
    lifted.validate(&rec.triangulation)?;
    Ok(lifted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::generate::random_plane_map;
    use crate::wbw::{wbw_distance, wbw_distance_to_set};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn single_vertex_saturates_to_k4() {
        let s = saturate(&fixtures::single_vertex()).unwrap();
        assert_eq!(
            s.map.graph().normalized(),
            AbstractGraph::complete(4).normalized()
        );
        let t = triangulate(&fixtures::single_vertex()).unwrap();
        assert!(t.triangulation.faces().iter().all(|f| f.len() == 3));
        assert_eq!(t.triangulation.vertex_count(), 8);
    }

    #[test]
    fn saturation_counts() {
        let p2 = saturate(&fixtures::path_map(2)).unwrap();
        assert_eq!(p2.map.vertex_count(), 6);
        assert!(p2.map.graph().is_three_connected());
        let c3 = saturate(&fixtures::cycle_map(3)).unwrap();
        assert_eq!(c3.map.vertex_count(), 9);
        assert!(c3.map.graph().is_three_connected());
        // Each original edge sits between two spokes at both of its ends.
        for d in 0..6 {
            let v = c3.map.origin(d);
            assert_eq!(c3.map.degree(v), 4);
            assert!(c3
                .corner_spokes
                .iter()
                .flatten()
                .any(|&k| c3.map.rot_next(d) / 2 == k));
            assert!(c3
                .corner_spokes
                .iter()
                .flatten()
                .any(|&k| c3.map.rot_prev(d) / 2 == k));
        }
    }

    #[test]
    fn cycle_lift_has_length_five() {
        let h = fixtures::cycle_map(3);
        let rec = triangulate(&h).unwrap();
        let cert = WbwCertificate {
            x: 0,
            y: 2,
            edges: vec![0, 1],
        };
        cert.validate(&h).unwrap();
        assert_eq!(lift_wbw_path(&rec, &h, &cert).unwrap().len(), 5);
        let single = WbwCertificate {
            x: 0,
            y: 1,
            edges: vec![0],
        };
        assert_eq!(lift_wbw_path(&rec, &h, &single).unwrap().len(), 1);
    }

    fn triangulation_properties(h: &PlaneMap) {
        let rec = triangulate(h).unwrap();
        let t = &rec.triangulation;
        for (u, v) in h.graph().edges() {
            assert!(t.graph().has_edge(rec.tau[*u], rec.tau[*v]));
        }
        for x in 0..h.vertex_count() {
            for y in 0..h.vertex_count() {
                if x == y {
                    continue;
                }
                let Some(cert) = wbw_distance(h, x, y).unwrap() else {
                    continue;
                };
                let lifted = lift_wbw_path(&rec, h, &cert).unwrap();
                assert_eq!(lifted.len(), 4 * cert.len() - 3);
                let d = wbw_distance(t, x, y).unwrap().unwrap().len();
                assert!(d <= 4 * cert.len());
            }
        }
        let reach = wbw_distance_to_set(t, &rec.tau);
        assert!(reach.iter().all(|d| d.is_some_and(|d| d <= 4)));
    }

    #[test]
    fn properties_on_fixtures_and_random_maps() {
        for h in [
            fixtures::path_map(2),
            fixtures::star_map(4),
            fixtures::tetrahedron(),
            fixtures::grid_map(3, 3),
        ] {
            triangulation_properties(&h);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let n = rng.random_range(2..9);
            triangulation_properties(&random_plane_map(&mut rng, n, 6, false));
        }
    }

    #[test]
    fn rejects_multigraphs() {
        let g = AbstractGraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        let m = PlaneMap::new(g, vec![vec![0, 2], vec![1, 3]]).unwrap();
        assert!(matches!(saturate(&m), Err(Error::NotSimple { .. })));
    }
}
