//! Seeded random instances: plane maps, triangulations and abstract graphs.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::IndexedRandom;
use rand::Rng;

use crate::fixtures;
use crate::graph::AbstractGraph;
use crate::plane_map::{DartId, MapBuilder, PlaneMap};

/// Connected plane map: a random tree on `n` vertices plus up to `chords`
/// edges, each drawn inside a random face. Parallel edges appear only when
/// `allow_parallel` is set.
pub fn random_plane_map<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    chords: usize,
    allow_parallel: bool,
) -> PlaneMap {
    assert!(n >= 1, "a plane map needs a vertex");
    let mut b = MapBuilder::with_vertices(n);
    for v in 1..n {
        let p = rng.random_range(0..v);
        let e = b.push_edge(p, v);
        let at = rng.random_range(0..=b.rotation[p].len());
        b.rotation[p].insert(at, 2 * e);
        b.rotation[v].push(2 * e + 1);
    }
    let mut map = b.build().expect("trees are plane").0;
    let mut added = 0;
    let mut attempts = 0;
    while added < chords && attempts < 20 * (chords + 1) {
        attempts += 1;
        if let Some(next) = random_chord(rng, &map, allow_parallel) {
            map = next;
            added += 1;
        }
    }
    map
}

fn random_chord<R: Rng + ?Sized>(
    rng: &mut R,
    map: &PlaneMap,
    allow_parallel: bool,
) -> Option<PlaneMap> {
    if map.dart_count() == 0 {
        return None;
    }
    let c1 = rng.random_range(0..map.dart_count());
    let f = map.corner_face(c1);
    let u = map.origin(c1);
    let options: Vec<DartId> = (0..map.dart_count())
        .filter(|&c| map.corner_face(c) == f)
        .filter(|&c| {
            let v = map.origin(c);
            v != u && (allow_parallel || !map.graph().has_edge(u, v))
        })
        .collect();
    let &c2 = options.choose(rng)?;
    map.with_chord(c1, c2).ok()
}

/// Simple triangulation on `n >= 3` vertices: random stacking followed by
/// `flips` attempted edge flips that keep the map simple with degrees >= 3.
pub fn random_triangulation<R: Rng + ?Sized>(rng: &mut R, n: usize, flips: usize) -> PlaneMap {
    assert!(n >= 3, "triangulations need three vertices");
    let mut map = fixtures::cycle_map(3);
    while map.vertex_count() < n {
        let f = rng.random_range(0..map.face_count());
        map = stack_vertex(&map, f);
    }
    for _ in 0..flips {
        let e = rng.random_range(0..map.edge_count());
        if let Some(next) = flip(&map, e) {
            map = next;
        }
    }
    map
}

/// Places a new vertex inside triangular face `f` joined to its corners.
pub fn stack_vertex(map: &PlaneMap, f: usize) -> PlaneMap {
    let boundary = map.face(f).boundary.clone();
    let mut b = MapBuilder::from_map(map);
    let w = b.add_vertex();
    let mut at_w = Vec::new();
    for &d in &boundary {
        let t = PlaneMap::twin(d);
        let e = b.push_edge(map.origin(t), w);
        b.insert_after(t, 2 * e);
        at_w.push(2 * e + 1);
    }
    at_w.reverse();
    b.rotation[w] = at_w;
    b.build().expect("stacking keeps the map plane").0
}

/// Flips edge `e` of a triangulation, or `None` when the flip would create a
/// parallel edge or drop a degree below 3.
pub fn flip(map: &PlaneMap, e: usize) -> Option<PlaneMap> {
    let d = 2 * e;
    let t = d + 1;
    let (a, b) = (map.origin(d), map.origin(t));
    if map.face(map.face_of(d)).len() != 3 || map.face(map.face_of(t)).len() != 3 {
        return None;
    }
    let c = map.head(map.face_next(d));
    let x = map.head(map.face_next(t));
    if c == x || map.graph().has_edge(c, x) || map.degree(a) < 4 || map.degree(b) < 4 {
        return None;
    }
    let cut = map.without_edge(e);
    // The merged quadrilateral is the only face containing both c and x.
    let quad = (0..cut.face_count()).find(|&f| {
        let inc = &cut.face(f).incident_vertices;
        cut.face(f).len() == 4 && inc.contains(&c) && inc.contains(&x)
    })?;
    let cc = cut
        .rotation(c)
        .iter()
        .copied()
        .find(|&k| cut.corner_face(k) == quad)?;
    let cx = cut
        .rotation(x)
        .iter()
        .copied()
        .find(|&k| cut.corner_face(k) == quad)?;
    cut.with_chord(cc, cx).ok()
}

/// Erdős–Rényi graph `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> AbstractGraph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.random_bool(p) {
                edges.push((a, b));
            }
        }
    }
    AbstractGraph::new(n, edges).expect("pairs of distinct vertices")
}

/// Disjoint union; vertices and edges of `b` are shifted after those of `a`.
pub fn disjoint_union(a: &PlaneMap, b: &PlaneMap) -> PlaneMap {
    let (n, m) = (a.vertex_count(), a.edge_count());
    let mut edges = a.graph().edges().to_vec();
    edges.extend(b.graph().edges().iter().map(|&(u, v)| (u + n, v + n)));
    let mut rotations = a.rotations().to_vec();
    rotations.extend(
        b.rotations()
            .iter()
            .map(|r| r.iter().map(|&d| d + 2 * m).collect()),
    );
    let g = AbstractGraph::new(n + b.vertex_count(), edges).expect("union of valid graphs");
    PlaneMap::new(g, rotations).expect("union of plane maps is plane")
}

/// A mix of small plane maps for exhaustive sweeps: multigraphs, trees,
/// simple maps and a few disconnected ones.
pub fn small_map_corpus<R: Rng + ?Sized>(
    rng: &mut R,
    count: usize,
    max_edges: usize,
) -> Vec<PlaneMap> {
    let mut out = vec![
        fixtures::path_map(2),
        fixtures::cycle_map(3),
        fixtures::star_map(6),
    ];
    while out.len() < count {
        let n = rng.random_range(2..=max_edges.min(9) + 1);
        let budget = max_edges.saturating_sub(n - 1);
        let chords = rng.random_range(0..=budget);
        let parallel = rng.random_bool(0.5);
        let map = random_plane_map(rng, n, chords, parallel);
        if rng.random_range(0..8) == 0 && map.edge_count() < max_edges {
            out.push(disjoint_union(&map, &fixtures::path_map(2)));
        } else {
            out.push(map);
        }
    }
    out
}
