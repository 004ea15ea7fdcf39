//! Drawings with crossings and their planarizations.
//!
//! A [`CrossedEmbedding`] stores the planarization of a drawing: original
//! vertices keep their ids `0..n`, crossing points become degree-4 vertices
//! `n..`, and every original edge is a trail of planarization darts.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{
    cmp_direction, on_segment, param, segment_contact, Bounds, Point, SegmentContact, Q,
};
use crate::graph::AbstractGraph;
use crate::plane_map::{DartId, PlaneMap};

/// A degree-4 crossing vertex and its two pairs of opposite darts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub vertex: usize,
    pub pairs: [(DartId, DartId); 2],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedEmbedding {
    planarization: PlaneMap,
    original_vertices: usize,
    crossings: Vec<Crossing>,
    trails: Vec<Vec<DartId>>,
}

impl CrossedEmbedding {
    /// Validates and wraps a planarization. Vertices `original_vertices..`
    /// are the crossings; `trails[e]` walks edge `e` from its first endpoint.
    pub fn new(
        planarization: PlaneMap,
        original_vertices: usize,
        trails: Vec<Vec<DartId>>,
    ) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidEmbedding(msg));
        let total = planarization.vertex_count();
        if original_vertices > total {
            return bad(format!(
                "{original_vertices} original vertices but only {total} in total"
            ));
        }
        let mut crossings = Vec::new();
        for c in original_vertices..total {
            let rot = planarization.rotation(c);
            if rot.len() != 4 {
                return bad(format!("crossing vertex {c} has degree {}", rot.len()));
            }
            crossings.push(Crossing {
                vertex: c,
                pairs: [(rot[0], rot[2]), (rot[1], rot[3])],
            });
        }
        let mut used = vec![false; planarization.edge_count()];
        for (e, trail) in trails.iter().enumerate() {
            let Some(&first) = trail.first() else {
                return bad(format!("trail {e} is empty"));
            };
            let last = *trail.last().unwrap();
            if planarization.origin(first) >= original_vertices
                || planarization.head(last) >= original_vertices
            {
                return bad(format!(
                    "trail {e} does not start and end at original vertices"
                ));
            }
            let mut visited = Vec::new();
            for (i, &d) in trail.iter().enumerate() {
                if d >= planarization.dart_count() {
                    return bad(format!("trail {e} uses missing dart {d}"));
                }
                if core::mem::replace(&mut used[d / 2], true) {
                    return bad(format!("planarization edge {} lies on two trails", d / 2));
                }
                if i + 1 < trail.len() {
                    let c = planarization.head(d);
                    if c < original_vertices {
                        return bad(format!("trail {e} stops at original vertex {c}"));
                    }
                    if visited.contains(&c) {
                        return bad(format!("edge {e} crosses itself at vertex {c}"));
                    }
                    visited.push(c);
                    let arrive = PlaneMap::twin(d);
                    let leave = trail[i + 1];
                    if planarization.origin(leave) != c {
                        return bad(format!("trail {e} is not contiguous at vertex {c}"));
                    }
                    let opposite = planarization.rot_next(planarization.rot_next(arrive));
                    if opposite != leave {
                        return bad(format!(
                            "trail {e} turns at crossing {c} instead of passing straight"
                        ));
                    }
                }
            }
        }
        if let Some(k) = used.iter().position(|u| !u) {
            return bad(format!("planarization edge {k} is on no trail"));
        }
        Ok(CrossedEmbedding {
            planarization,
            original_vertices,
            crossings,
            trails,
        })
    }

    /// A crossing-free embedding seen as a drawing.
    pub fn from_plane_map(map: PlaneMap) -> Self {
        let n = map.vertex_count();
        let trails = (0..map.edge_count()).map(|e| vec![2 * e]).collect();
        CrossedEmbedding::new(map, n, trails).expect("plane maps are crossing-free drawings")
    }

    pub fn planarization(&self) -> &PlaneMap {
        &self.planarization
    }

    pub fn original_vertex_count(&self) -> usize {
        self.original_vertices
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn trails(&self) -> &[Vec<DartId>] {
        &self.trails
    }

    pub fn is_crossing(&self, v: usize) -> bool {
        v >= self.original_vertices
    }

    /// Original edge carried by each planarization edge.
    pub fn edge_owner(&self) -> Vec<usize> {
        let mut owner = vec![0; self.planarization.edge_count()];
        for (e, t) in self.trails.iter().enumerate() {
            for &d in t {
                owner[d / 2] = e;
            }
        }
        owner
    }

    /// The drawn graph, recovered by splicing the trails.
    pub fn original_graph(&self) -> AbstractGraph {
        let edges = self
            .trails
            .iter()
            .map(|t| {
                (
                    self.planarization.origin(t[0]),
                    self.planarization.head(*t.last().unwrap()),
                )
            })
            .collect();
        AbstractGraph::new(self.original_vertices, edges).expect("validated trails")
    }

    /// Crossings on each original edge.
    pub fn crossings_per_edge(&self) -> Vec<usize> {
        self.trails.iter().map(|t| t.len() - 1).collect()
    }

    /// Largest number of crossings on one edge (0 when crossing-free).
    pub fn max_crossings(&self) -> usize {
        self.crossings_per_edge().into_iter().max().unwrap_or(0)
    }

    /// Crossing vertices along edge `e`, in trail order.
    pub fn crossings_on(&self, e: usize) -> Vec<usize> {
        let t = &self.trails[e];
        t[..t.len() - 1]
            .iter()
            .map(|&d| self.planarization.head(d))
            .collect()
    }
}

/// Necessary condition for `xi` crossings per edge: `m <= 4.108 sqrt(xi) n`,
/// evaluated exactly as `m^2 * 10^6 <= 4108^2 * xi * n^2`.
pub fn check_sparsity(g: &AbstractGraph, xi: usize) -> bool {
    let m = g.edge_count() as u128;
    let n = g.vertex_count() as u128;
    m * m * 1_000_000 <= 4108u128 * 4108 * xi as u128 * n * n
}

/// A drawing: vertex positions and one polyline per edge (endpoints included).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Drawing {
    pub vertices: Vec<Point>,
    pub edges: Vec<(usize, usize)>,
    pub polylines: Vec<Vec<Point>>,
}

impl Drawing {
    pub fn straight(vertices: Vec<Point>, edges: Vec<(usize, usize)>) -> Self {
        let polylines = edges
            .iter()
            .map(|&(a, b)| vec![vertices[a].clone(), vertices[b].clone()])
            .collect();
        Drawing {
            vertices,
            edges,
            polylines,
        }
    }

    pub fn graph(&self) -> Result<AbstractGraph> {
        AbstractGraph::new(self.vertices.len(), self.edges.clone())
    }
}

/// A planarized drawing together with the location of every crossing vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Planarized {
    pub embedding: CrossedEmbedding,
    pub crossing_points: Vec<Point>,
}

/// Where an edge meets a point: segment index and parameter in `[0, 1)`,
/// with bends normalized to `(i, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Passage {
    edge: usize,
    segment: usize,
    t: Q,
}

fn degenerate<T>(msg: String) -> Result<T> {
    Err(Error::DegenerateGeometry(msg))
}

/// Planarizes a polyline drawing exactly. Every contact between two edges
/// must be a transversal crossing of exactly two edges away from vertices;
/// anything else is reported as degenerate.
pub fn planarize_drawing(drawing: &Drawing) -> Result<Planarized> {
    let n = drawing.vertices.len();
    let graph = drawing.graph()?;
    if drawing.polylines.len() != drawing.edges.len() {
        return Err(Error::InvalidEmbedding(format!(
            "{} polylines for {} edges",
            drawing.polylines.len(),
            drawing.edges.len()
        )));
    }
    for i in 0..n {
        for j in i + 1..n {
            if drawing.vertices[i] == drawing.vertices[j] {
                return degenerate(format!("vertices {i} and {j} coincide"));
            }
        }
    }
    let mut segments: Vec<(usize, usize)> = Vec::new();
    for (e, (&(a, b), line)) in graph.edges().iter().zip(&drawing.polylines).enumerate() {
        if line.len() < 2
            || line[0] != drawing.vertices[a]
            || *line.last().unwrap() != drawing.vertices[b]
        {
            return Err(Error::InvalidEmbedding(format!(
                "polyline of edge {e} does not join its endpoints"
            )));
        }
        for i in 0..line.len() - 1 {
            if line[i] == line[i + 1] {
                return degenerate(format!("edge {e} has a zero-length segment"));
            }
            segments.push((e, i));
        }
    }
    let seg = |&(e, i): &(usize, usize)| (&drawing.polylines[e][i], &drawing.polylines[e][i + 1]);
    let boxes: Vec<Bounds> = segments
        .iter()
        .map(|s| {
            let (a, b) = seg(s);
            Bounds::of_segment(a, b)
        })
        .collect();
    // Vertices may only be touched by their own edges, at the ends.
    for (w, pw) in drawing.vertices.iter().enumerate() {
        let bw = Bounds::of_point(pw);
        for (s, bs) in segments.iter().zip(&boxes) {
            let (a, b) = seg(s);
            if !bs.meets(&bw) || !on_segment(a, b, pw) {
                continue;
            }
            let (e, i) = *s;
            let line = &drawing.polylines[e];
            let (u, v) = graph.edge(e);
            let at_start = i == 0 && *a == *pw && w == u;
            let at_end = i == line.len() - 2 && *b == *pw && w == v;
            if !(at_start || at_end) {
                return degenerate(format!("edge {e} passes through vertex {w}"));
            }
        }
    }
    let mut candidates: Vec<Point> = Vec::new();
    for (x, s) in segments.iter().enumerate() {
        for (y, t) in segments.iter().enumerate().skip(x + 1) {
            if !boxes[x].meets(&boxes[y]) {
                continue;
            }
            let (a, b) = seg(s);
            let (c, d) = seg(t);
            let contact = segment_contact(a, b, c, d);
            if s.0 == t.0 {
                let adjacent = s.1 + 1 == t.1;
                match contact {
                    SegmentContact::Disjoint => {}
                    SegmentContact::Touch(ref p) if adjacent && p == b => {}
                    _ => return degenerate(format!("edge {} intersects itself", s.0)),
                }
                continue;
            }
            match contact {
                SegmentContact::Disjoint => {}
                SegmentContact::Overlap => {
                    return degenerate(format!("edges {} and {} overlap", s.0, t.0));
                }
                SegmentContact::Proper(p) | SegmentContact::Touch(p) => {
                    if !drawing.vertices.contains(&p) {
                        candidates.push(p);
                    }
                }
            }
        }
    }
    candidates.sort();
    candidates.dedup();
    let mut passages_on_edge: Vec<Vec<(Passage, usize)>> = vec![Vec::new(); graph.edge_count()];
    for (k, p) in candidates.iter().enumerate() {
        let mut through: Vec<Passage> = Vec::new();
        let bp = Bounds::of_point(p);
        for (s, bs) in segments.iter().zip(&boxes) {
            let (a, b) = seg(s);
            if !bs.meets(&bp) || !on_segment(a, b, p) || p == b {
                continue;
            }
            through.push(Passage {
                edge: s.0,
                segment: s.1,
                t: param(a, b, p),
            });
        }
        if through.len() != 2 {
            return degenerate(format!(
                "{} edge passages meet at one crossing point",
                through.len()
            ));
        }
        if through[0].edge == through[1].edge {
            return degenerate(format!("edge {} intersects itself", through[0].edge));
        }
        // Transversality: the four directions must alternate between the edges.
        let mut dirs: Vec<(Point, usize)> = Vec::new();
        for (side, pass) in through.iter().enumerate() {
            let line = &drawing.polylines[pass.edge];
            let back = if pass.t.is_zero() {
                &line[pass.segment - 1]
            } else {
                &line[pass.segment]
            };
            let fwd = &line[pass.segment + 1];
            dirs.push((back.sub(p), side));
            dirs.push((fwd.sub(p), side));
        }
        dirs.sort_by(|u, v| cmp_direction(&u.0, &v.0));
        let alternating = (0..4).all(|i| dirs[i].1 != dirs[(i + 1) % 4].1)
            && (0..4).all(|i| cmp_direction(&dirs[i].0, &dirs[(i + 1) % 4].0) != Ordering::Equal);
        if !alternating {
            return degenerate(format!(
                "edges {} and {} touch without crossing",
                through[0].edge, through[1].edge
            ));
        }
        for pass in through {
            passages_on_edge[pass.edge].push((pass, k));
        }
    }
    // Planarization pieces: each edge is cut at its crossings in order.
    let mut edges = Vec::new();
    let mut trails = Vec::new();
    // Direction in which each planarization dart leaves its origin.
    let mut dart_dir: Vec<Point> = Vec::new();
    for (e, &(u, v)) in graph.edges().iter().enumerate() {
        let line = &drawing.polylines[e];
        let mut stops = passages_on_edge[e].clone();
        stops.sort();
        let mut nodes = vec![(u, 0usize, Q::zero())];
        nodes.extend(stops.iter().map(|(p, k)| (n + k, p.segment, p.t.clone())));
        nodes.push((v, line.len() - 2, Q::one()));
        let mut trail = Vec::new();
        for w in nodes.windows(2) {
            let (a, sa, ta) = &w[0];
            let (b, sb, tb) = &w[1];
            let pa = line[*sa].lerp(&line[*sa + 1], ta);
            let pb = line[*sb].lerp(&line[*sb + 1], tb);
            // First polyline point after pa, and last one before pb.
            let (ahead, behind) = if sa == sb {
                (pb.clone(), pa.clone())
            } else if tb.is_zero() {
                (line[*sa + 1].clone(), line[*sb - 1].clone())
            } else {
                (line[*sa + 1].clone(), line[*sb].clone())
            };
            let k = edges.len();
            edges.push((*a, *b));
            dart_dir.push(ahead.sub(&pa));
            dart_dir.push(behind.sub(&pb));
            trail.push(2 * k);
        }
        trails.push(trail);
    }
    let total = n + candidates.len();
    let mut rotations: Vec<Vec<DartId>> = vec![Vec::new(); total];
    for (k, &(a, b)) in edges.iter().enumerate() {
        rotations[a].push(2 * k);
        rotations[b].push(2 * k + 1);
    }
    for rot in rotations.iter_mut() {
        rot.sort_by(|&x, &y| cmp_direction(&dart_dir[x], &dart_dir[y]));
        for w in 0..rot.len() {
            let (x, y) = (rot[w], rot[(w + 1) % rot.len()]);
            if rot.len() > 1 && cmp_direction(&dart_dir[x], &dart_dir[y]) == Ordering::Equal {
                return degenerate(String::from(
                    "two edges leave a vertex in the same direction",
                ));
            }
        }
    }
    let pg = AbstractGraph::new(total, edges)?;
    let planarization = PlaneMap::new(pg, rotations)?;
    let embedding = CrossedEmbedding::new(planarization, n, trails)?;
    Ok(Planarized {
        embedding,
        crossing_points: candidates,
    })
}

/// Result of planarizing a straight-line drawing, possibly after jitter.
#[derive(Clone, Debug)]
pub struct StraightLinePlanarization {
    pub planarized: Planarized,
    /// The drawing actually used (perturbed when `attempts > 0`).
    pub drawing: Drawing,
    pub seed: u64,
    pub attempts: usize,
}

pub const MAX_PERTURBATIONS: usize = 16;

/// Planarizes a straight-line drawing; degenerate positions are perturbed by
/// deterministic jitter drawn from `seed`, at most [`MAX_PERTURBATIONS`] times.
pub fn planarize(
    vertices: &[Point],
    edges: &[(usize, usize)],
    seed: u64,
) -> Result<StraightLinePlanarization> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut drawing = Drawing::straight(vertices.to_vec(), edges.to_vec());
    let mut last = None;
    for attempt in 0..=MAX_PERTURBATIONS {
        match planarize_drawing(&drawing) {
            Ok(planarized) => {
                return Ok(StraightLinePlanarization {
                    planarized,
                    drawing,
                    seed,
                    attempts: attempt,
                });
            }
            Err(Error::DegenerateGeometry(msg)) => last = Some(msg),
            Err(other) => return Err(other),
        }
        // Jitter of at most 2^-20 per coordinate, on a 2^-40 grid.
        let scale = Q::new(BigInt::one(), BigInt::from(1u64 << 40));
        let moved: Vec<Point> = vertices
            .iter()
            .map(|p| {
                let dx: i64 = rng.random_range(-(1 << 20)..=(1 << 20));
                let dy: i64 = rng.random_range(-(1 << 20)..=(1 << 20));
                Point::new(
                    &p.x + Q::from_integer(dx.into()) * &scale,
                    &p.y + Q::from_integer(dy.into()) * &scale,
                )
            })
            .collect();
        drawing = Drawing::straight(moved, edges.to_vec());
    }
    Err(Error::DegenerateGeometry(format!(
        "still degenerate after {MAX_PERTURBATIONS} perturbations: {}",
        last.unwrap_or_default()
    )))
}

/// Independent recount of how often each edge of a drawing meets another
/// edge away from shared vertices (both proper crossings and touchings).
pub fn recount_crossings(drawing: &Drawing) -> Vec<usize> {
    let mut points: BTreeMap<(usize, Point), ()> = BTreeMap::new();
    let m = drawing.edges.len();
    let boxes: Vec<Vec<Bounds>> = drawing
        .polylines
        .iter()
        .map(|l| {
            l.windows(2)
                .map(|w| Bounds::of_segment(&w[0], &w[1]))
                .collect()
        })
        .collect();
    for e in 0..m {
        for f in 0..m {
            if e == f {
                continue;
            }
            let (le, lf) = (&drawing.polylines[e], &drawing.polylines[f]);
            for i in 0..le.len() - 1 {
                for j in 0..lf.len() - 1 {
                    if !boxes[e][i].meets(&boxes[f][j]) {
                        continue;
                    }
                    let p = match segment_contact(&le[i], &le[i + 1], &lf[j], &lf[j + 1]) {
                        SegmentContact::Proper(p) | SegmentContact::Touch(p) => p,
                        _ => continue,
                    };
                    if !drawing.vertices.contains(&p) {
                        points.insert((e, p), ());
                    }
                }
            }
        }
    }
    let mut counts = vec![0; m];
    for (e, _) in points.keys() {
        counts[*e] += 1;
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn two_crossing_segments_make_a_plus() {
        let d = Drawing::straight(
            vec![p(0, 0), p(2, 2), p(0, 2), p(2, 0)],
            vec![(0, 1), (2, 3)],
        );
        let pl = planarize_drawing(&d).unwrap();
        let ce = &pl.embedding;
        assert_eq!(ce.crossings().len(), 1);
        assert_eq!(ce.planarization().degree(4), 4);
        assert_eq!(ce.planarization().face_count(), 1);
        assert_eq!(ce.crossings_per_edge(), vec![1, 1]);
        assert_eq!(pl.crossing_points, vec![p(1, 1)]);
        assert_eq!(ce.original_graph(), d.graph().unwrap());
    }

    #[test]
    fn planar_k4_has_no_crossings() {
        let d = Drawing::straight(
            vec![p(0, 0), p(4, 0), p(2, 4), p(2, 1)],
            AbstractGraph::complete(4).edges().to_vec(),
        );
        let ce = planarize_drawing(&d).unwrap().embedding;
        assert_eq!(ce.max_crossings(), 0);
        assert_eq!(ce.planarization().face_count(), 4);
    }

    #[test]
    fn convex_k5_has_five_crossings_two_per_diagonal() {
        let d = fixtures::convex_complete_drawing(5);
        let ce = planarize_drawing(&d).unwrap().embedding;
        assert_eq!(ce.crossings().len(), 5);
        let counts = ce.crossings_per_edge();
        assert_eq!(counts, recount_crossings(&d));
        for (e, &(a, b)) in d.edges.iter().enumerate() {
            let side = b - a == 1 || b - a == 4;
            assert_eq!(counts[e], if side { 0 } else { 2 });
        }
        assert_eq!(counts.iter().sum::<usize>(), 2 * ce.crossings().len());
    }

    #[test]
    fn one_crossing_k5_and_convex_octahedron() {
        let ce = planarize_drawing(&fixtures::k5_one_crossing_drawing())
            .unwrap()
            .embedding;
        assert_eq!(ce.max_crossings(), 1);
        assert_eq!(ce.crossings().len(), 1);
        let d = fixtures::convex_octahedron_drawing();
        let ce = planarize_drawing(&d).unwrap().embedding;
        assert_eq!(ce.max_crossings(), 2);
        assert_eq!(ce.crossings_per_edge(), recount_crossings(&d));
    }

    #[test]
    fn degenerate_inputs_are_rejected_or_perturbed() {
        // Three segments through one point.
        let pts = vec![p(0, 0), p(2, 2), p(0, 2), p(2, 0), p(1, 0), p(1, 2)];
        let edges = vec![(0, 1), (2, 3), (4, 5)];
        let d = Drawing::straight(pts.clone(), edges.clone());
        assert!(matches!(
            planarize_drawing(&d),
            Err(Error::DegenerateGeometry(_))
        ));
        let fixed = planarize(&pts, &edges, 42).unwrap();
        assert!(fixed.attempts >= 1);
        assert_eq!(fixed.planarized.embedding.crossings().len(), 3);
        let again = planarize(&pts, &edges, 42).unwrap();
        assert_eq!(again.drawing, fixed.drawing);
        // An edge through a vertex.
        let d = Drawing::straight(vec![p(0, 0), p(2, 0), p(1, 0)], vec![(0, 1)]);
        assert!(planarize_drawing(&d).is_err());
        // A bent edge touching another at its bend without crossing.
        let mut d = Drawing::straight(
            vec![p(0, 0), p(4, 0), p(0, 2), p(4, 2)],
            vec![(0, 1), (2, 3)],
        );
        d.polylines[1] = vec![p(0, 2), p(2, 0), p(4, 2)];
        assert!(matches!(
            planarize_drawing(&d),
            Err(Error::DegenerateGeometry(_))
        ));
        // The same bend pushed through is a double crossing.
        d.polylines[1] = vec![p(0, 2), p(2, -1), p(4, 2)];
        let ce = planarize_drawing(&d).unwrap().embedding;
        assert_eq!(ce.crossings_per_edge(), vec![2, 2]);
    }

    #[test]
    fn bent_polyline_crossing_at_its_bend() {
        let mut d = Drawing::straight(
            vec![p(0, 0), p(4, 0), p(0, 2), p(4, -2)],
            vec![(0, 1), (2, 3)],
        );
        d.polylines[1] = vec![p(0, 2), p(2, 0), p(4, -2)];
        let pl = planarize_drawing(&d).unwrap();
        assert_eq!(pl.crossing_points, vec![p(2, 0)]);
        assert_eq!(pl.embedding.crossings_per_edge(), vec![1, 1]);
    }

    #[test]
    fn sparsity_screen() {
        let k20 = AbstractGraph::complete(20);
        assert!(!check_sparsity(&k20, 1));
        assert!(check_sparsity(&k20, 6));
        assert!(check_sparsity(fixtures::icosahedron().graph(), 1));
    }
}
