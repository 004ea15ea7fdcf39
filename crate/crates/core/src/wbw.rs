//! The wall-by-wall metric on plane maps.
//!
//! Two edges are attached when they share a vertex and their darts are
//! consecutive in its rotation. Distances are breadth-first searches over
//! the attachment graph of edges, seeded with every edge at the source.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::AbstractGraph;
use crate::plane_map::{medial, PlaneMap};

/// True when `e != f` and some dart of `e` is rotation-consecutive with a dart
/// of `f` (in either direction).
pub fn attached(map: &PlaneMap, e: usize, f: usize) -> bool {
    if e == f {
        return false;
    }
    [2 * e, 2 * e + 1]
        .into_iter()
        .any(|d| map.rot_next(d) / 2 == f || map.rot_prev(d) / 2 == f)
}

/// A dart `d` such that `d` and `rot_next(d)` are darts of `e` and `f` (in
/// either order); its corner is where the two edges are attached.
pub fn shared_corner(map: &PlaneMap, e: usize, f: usize) -> Option<usize> {
    if e == f {
        return None;
    }
    [2 * e, 2 * e + 1].into_iter().find_map(|d| {
        if map.rot_next(d) / 2 == f {
            Some(d)
        } else {
            let p = map.rot_prev(d);
            (p / 2 == f).then_some(p)
        }
    })
}

/// Edges attached to `e`, each listed once, in increasing order.
pub fn attached_edges(map: &PlaneMap, e: usize) -> Vec<usize> {
    let mut out: Vec<usize> = [2 * e, 2 * e + 1]
        .into_iter()
        .flat_map(|d| [map.rot_next(d) / 2, map.rot_prev(d) / 2])
        .filter(|&f| f != e)
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// An explicit (x, y)-wbw-walk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WbwCertificate {
    pub x: usize,
    pub y: usize,
    pub edges: Vec<usize>,
}

impl WbwCertificate {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Checks distinctness, endpoint incidence and consecutive attachment.
    pub fn validate(&self, map: &PlaneMap) -> Result<()> {
        let bad = |msg: alloc::string::String| Err(Error::InvalidCertificate(msg));
        let n = map.vertex_count();
        for v in [self.x, self.y] {
            if v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    count: n,
                });
            }
        }
        if self.x == self.y {
            return Err(Error::SameVertex { vertex: self.x });
        }
        let (Some(&first), Some(&last)) = (self.edges.first(), self.edges.last()) else {
            return bad(format!("empty walk between {} and {}", self.x, self.y));
        };
        let m = map.edge_count();
        if let Some(&e) = self.edges.iter().find(|&&e| e >= m) {
            return Err(Error::EdgeOutOfRange { edge: e, count: m });
        }
        let mut seen = vec![false; m];
        for &e in &self.edges {
            if core::mem::replace(&mut seen[e], true) {
                return bad(format!("edge {e} is used twice"));
            }
        }
        let incident = |e: usize, v: usize| {
            let (a, b) = map.graph().edge(e);
            a == v || b == v
        };
        if !incident(first, self.x) {
            return bad(format!("first edge {first} does not touch {}", self.x));
        }
        if !incident(last, self.y) {
            return bad(format!("last edge {last} does not touch {}", self.y));
        }
        for w in self.edges.windows(2) {
            if !attached(map, w[0], w[1]) {
                return bad(format!("edges {} and {} are not attached", w[0], w[1]));
            }
        }
        Ok(())
    }

    /// True when the walk's edges form a forest.
    pub fn is_acyclic(&self, map: &PlaneMap) -> bool {
        let mut parent: Vec<usize> = (0..map.vertex_count()).collect();
        fn find(p: &mut [usize], mut v: usize) -> usize {
            while p[v] != v {
                p[v] = p[p[v]];
                v = p[v];
            }
            v
        }
        for &e in &self.edges {
            let (a, b) = map.graph().edge(e);
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return false;
            }
            parent[ra] = rb;
        }
        true
    }
}

fn require_incident(map: &PlaneMap, v: usize) -> Result<()> {
    let n = map.vertex_count();
    if v >= n {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            count: n,
        });
    }
    if map.degree(v) == 0 {
        return Err(Error::IsolatedVertex { vertex: v });
    }
    Ok(())
}

/// Edge-level BFS from the edges at `x`: distance (walk length) and parent of
/// every edge.
fn edge_bfs(map: &PlaneMap, x: usize) -> (Vec<usize>, Vec<usize>) {
    let m = map.edge_count();
    let mut dist = vec![usize::MAX; m];
    let mut parent = vec![usize::MAX; m];
    let mut queue = VecDeque::new();
    let mut seeds: Vec<usize> = map.rotation(x).iter().map(|&d| d / 2).collect();
    seeds.sort_unstable();
    seeds.dedup();
    for e in seeds {
        dist[e] = 1;
        queue.push_back(e);
    }
    while let Some(e) = queue.pop_front() {
        for f in attached_edges(map, e) {
            if dist[f] == usize::MAX {
                dist[f] = dist[e] + 1;
                parent[f] = e;
                queue.push_back(f);
            }
        }
    }
    (dist, parent)
}

/// Shortest (x, y)-wbw-walk, or `None` when x and y lie in different
/// components. Ties are broken towards smaller edge indices.
pub fn wbw_distance(map: &PlaneMap, x: usize, y: usize) -> Result<Option<WbwCertificate>> {
    require_incident(map, x)?;
    require_incident(map, y)?;
    if x == y {
        return Err(Error::SameVertex { vertex: x });
    }
    let (dist, parent) = edge_bfs(map, x);
    let target = map
        .rotation(y)
        .iter()
        .map(|&d| d / 2)
        .filter(|&e| dist[e] != usize::MAX)
        .min_by_key(|&e| (dist[e], e));
    let Some(mut e) = target else {
        return Ok(None);
    };
    let mut edges = vec![e];
    while parent[e] != usize::MAX {
        e = parent[e];
        edges.push(e);
    }
    edges.reverse();
    Ok(Some(WbwCertificate { x, y, edges }))
}

/// wbw distance from `x` to every vertex; `None` for `x` itself, isolated
/// vertices and other components.
pub fn wbw_distances_from(map: &PlaneMap, x: usize) -> Result<Vec<Option<usize>>> {
    require_incident(map, x)?;
    let (dist, _) = edge_bfs(map, x);
    Ok((0..map.vertex_count())
        .map(|y| {
            if y == x {
                return None;
            }
            map.rotation(y)
                .iter()
                .map(|&d| dist[d / 2])
                .min()
                .filter(|&l| l != usize::MAX)
        })
        .collect())
}

/// wbw distance from a vertex set: `Some(0)` on the set, otherwise the least
/// distance to any member; `None` when unreachable.
pub fn wbw_distance_to_set(map: &PlaneMap, sources: &[usize]) -> Vec<Option<usize>> {
    let m = map.edge_count();
    let mut dist = vec![usize::MAX; m];
    let mut queue = VecDeque::new();
    for &x in sources {
        for &d in map.rotation(x) {
            if dist[d / 2] == usize::MAX {
                dist[d / 2] = 1;
                queue.push_back(d / 2);
            }
        }
    }
    while let Some(e) = queue.pop_front() {
        for f in attached_edges(map, e) {
            if dist[f] == usize::MAX {
                dist[f] = dist[e] + 1;
                queue.push_back(f);
            }
        }
    }
    let mut out: Vec<Option<usize>> = (0..map.vertex_count())
        .map(|y| {
            map.rotation(y)
                .iter()
                .map(|&d| dist[d / 2])
                .min()
                .filter(|&l| l != usize::MAX)
        })
        .collect();
    for &x in sources {
        out[x] = Some(0);
    }
    out
}

/// The same distance computed in the medial map: one more than the
/// shortest medial distance between the boundaries of the faces of x and y.
pub fn wbw_distance_via_medial(map: &PlaneMap, x: usize, y: usize) -> Result<Option<usize>> {
    require_incident(map, x)?;
    require_incident(map, y)?;
    if x == y {
        return Err(Error::SameVertex { vertex: x });
    }
    let (comp, _) = map.graph().components();
    if comp[x] != comp[y] {
        return Ok(None);
    }
    let (sub, verts) = map.component_of(x);
    let local = |v: usize| {
        verts
            .iter()
            .position(|&w| w == v)
            .expect("vertex in component")
    };
    let med = medial(&sub)?;
    let m = &med.map;
    let boundary =
        |v: usize| -> Vec<usize> { m.face(med.vertex_face[v]).incident_vertices.clone() };
    let mut dist = vec![usize::MAX; m.vertex_count()];
    let mut queue = VecDeque::new();
    for a in boundary(local(x)) {
        if dist[a] == usize::MAX {
            dist[a] = 0;
            queue.push_back(a);
        }
    }
    let adjacency = m.graph().adjacency();
    while let Some(a) = queue.pop_front() {
        for &b in &adjacency[a] {
            if dist[b] == usize::MAX {
                dist[b] = dist[a] + 1;
                queue.push_back(b);
            }
        }
    }
    Ok(boundary(local(y))
        .into_iter()
        .map(|b| dist[b])
        .min()
        .map(|d| d + 1))
}

/// `H^λ`: all pairs of vertices at wbw distance at most λ (this includes the
/// edges of `H`).
pub fn lambda_power(host: &PlaneMap, lambda: usize) -> Result<AbstractGraph> {
    if lambda == 0 {
        return Err(Error::InvalidLambda(lambda));
    }
    if let Some((u, v)) = host.graph().first_parallel_pair() {
        return Err(Error::NotSimple { u, v });
    }
    let n = host.vertex_count();
    let mut edges = Vec::new();
    for x in 0..n {
        if host.degree(x) == 0 {
            continue;
        }
        let dist = wbw_distances_from(host, x)?;
        for (y, d) in dist.iter().enumerate().skip(x + 1) {
            if matches!(d, Some(l) if *l <= lambda) {
                edges.push((x, y));
            }
        }
    }
    AbstractGraph::new(n, edges)
}

/// How one edge of the guest graph is realized in the host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeWitness {
    /// The images of the endpoints are adjacent in the host.
    Host,
    /// A wbw-walk between the images, as host edge indices.
    Walk(Vec<usize>),
}

/// Certificate that a graph is a subgraph of `host^lambda` via `tau`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatWitness {
    pub host: PlaneMap,
    pub tau: Vec<usize>,
    pub lambda: usize,
    /// One entry per edge of the guest graph, in edge order.
    pub certificates: Vec<EdgeWitness>,
}

/// Validates a flat witness against `g`; the error names the first violation.
pub fn check_flat_witness(g: &AbstractGraph, w: &FlatWitness) -> Result<()> {
    let bad = |msg: alloc::string::String| Err(Error::InvalidWitness(msg));
    if w.lambda == 0 {
        return Err(Error::InvalidLambda(0));
    }
    if let Some((u, v)) = w.host.graph().first_parallel_pair() {
        return Err(Error::NotSimple { u, v });
    }
    if w.tau.len() != g.vertex_count() {
        return bad(format!(
            "tau has {} images for {} vertices",
            w.tau.len(),
            g.vertex_count()
        ));
    }
    let n = w.host.vertex_count();
    let mut used = vec![false; n];
    for (v, &t) in w.tau.iter().enumerate() {
        if t >= n {
            return bad(format!("tau({v}) = {t} is not a host vertex"));
        }
        if core::mem::replace(&mut used[t], true) {
            return bad(format!("tau is not injective at host vertex {t}"));
        }
    }
    if w.certificates.len() != g.edge_count() {
        return bad(format!(
            "{} certificates for {} edges",
            w.certificates.len(),
            g.edge_count()
        ));
    }
    for (e, (&(u, v), cert)) in g.edges().iter().zip(&w.certificates).enumerate() {
        let (x, y) = (w.tau[u], w.tau[v]);
        match cert {
            EdgeWitness::Host => {
                if !w.host.graph().has_edge(x, y) {
                    return bad(format!("edge {e} ({u}, {v}): host has no edge {x}-{y}"));
                }
            }
            EdgeWitness::Walk(edges) => {
                if edges.len() > w.lambda {
                    return bad(format!(
                        "edge {e} ({u}, {v}): walk of length {} exceeds lambda {}",
                        edges.len(),
                        w.lambda
                    ));
                }
                let c = WbwCertificate {
                    x,
                    y,
                    edges: edges.clone(),
                };
                if let Err(err) = c.validate(&w.host) {
                    return bad(format!("edge {e} ({u}, {v}): {err}"));
                }
            }
        }
    }
    Ok(())
}

/// Builds a witness for `g ⊆_tau host^lambda` by shortest walks, or reports
/// the first edge whose images are too far apart.
pub fn witness_from_distances(
    g: &AbstractGraph,
    host: PlaneMap,
    tau: Vec<usize>,
    lambda: usize,
) -> Result<FlatWitness> {
    let mut certificates = Vec::with_capacity(g.edge_count());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let (x, y) = (tau[u], tau[v]);
        if host.graph().has_edge(x, y) {
            certificates.push(EdgeWitness::Host);
            continue;
        }
        match wbw_distance(&host, x, y)? {
            Some(c) if c.len() <= lambda => certificates.push(EdgeWitness::Walk(c.edges)),
            found => {
                return Err(Error::InvalidWitness(format!(
                    "edge {e} ({u}, {v}): wbw distance {} exceeds lambda {lambda}",
                    found.map_or(usize::MAX, |c| c.len())
                )))
            }
        }
    }
    Ok(FlatWitness {
        host,
        tau,
        lambda,
        certificates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{cycle_map, octahedron, path_map, star_map, tetrahedron};

    /// Exhaustive walk enumeration: the shortest (x, y)-walk length.
    fn brute_force(map: &PlaneMap, x: usize, y: usize) -> Option<usize> {
        fn go(map: &PlaneMap, path: &mut Vec<usize>, y: usize, best: &mut Option<usize>) {
            let last = *path.last().unwrap();
            let (a, b) = map.graph().edge(last);
            if a == y || b == y {
                *best = Some(best.map_or(path.len(), |l| l.min(path.len())));
                return;
            }
            if best.is_some_and(|l| path.len() + 1 >= l) {
                return;
            }
            for f in 0..map.edge_count() {
                if !path.contains(&f) && attached(map, last, f) {
                    path.push(f);
                    go(map, path, y, best);
                    path.pop();
                }
            }
        }
        let mut best = None;
        for &d in map.rotation(x) {
            go(map, &mut vec![d / 2], y, &mut best);
        }
        best
    }

    #[test]
    fn attachment_on_the_star() {
        let s = star_map(6);
        assert!(attached(&s, 0, 1));
        assert!(attached(&s, 0, 5));
        assert!(!attached(&s, 0, 3));
        let p = path_map(3);
        assert!(attached(&p, 0, 1));
        assert!(!attached(&path_map(2), 0, 0));
    }

    #[test]
    fn star_leaves_follow_the_oracle() {
        let s = star_map(6);
        let c = wbw_distance(&s, 1, 4).unwrap().unwrap();
        assert_eq!(c.len(), 4);
        c.validate(&s).unwrap();
        for x in 1..=6 {
            for y in 1..=6 {
                if x != y {
                    let l = wbw_distance(&s, x, y).unwrap().map(|c| c.len());
                    assert_eq!(l, brute_force(&s, x, y));
                    assert_eq!(l, wbw_distance_via_medial(&s, x, y).unwrap());
                }
            }
        }
    }

    #[test]
    fn four_cycle_opposite_vertices_are_at_distance_two() {
        let c4 = cycle_map(4);
        assert_eq!(wbw_distance(&c4, 0, 2).unwrap().unwrap().len(), 2);
        assert_eq!(wbw_distance(&c4, 0, 1).unwrap().unwrap().len(), 1);
        assert_eq!(
            wbw_distance_via_medial(&cycle_map(3), 0, 1).unwrap(),
            Some(1)
        );
    }

    #[test]
    fn errors_and_infinite_distance() {
        let s = star_map(2);
        assert_eq!(wbw_distance(&s, 1, 1), Err(Error::SameVertex { vertex: 1 }));
        let lone = crate::fixtures::single_vertex();
        assert_eq!(
            wbw_distance(&lone, 0, 0),
            Err(Error::IsolatedVertex { vertex: 0 })
        );
        let two = crate::graph::AbstractGraph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        let m = PlaneMap::new(two, vec![vec![0], vec![1], vec![2], vec![3]]).unwrap();
        assert_eq!(wbw_distance(&m, 0, 2).unwrap(), None);
        assert_eq!(wbw_distance_via_medial(&m, 0, 2).unwrap(), None);
    }

    #[test]
    fn powers_of_small_maps() {
        let c3 = cycle_map(3);
        assert_eq!(lambda_power(&c3, 1).unwrap(), c3.graph().normalized());
        let k4 = tetrahedron();
        assert_eq!(lambda_power(&k4, 2).unwrap().edge_count(), 6);
        // In a triangulation two edges of a walk of length 2 share a vertex
        // and a face, so the square adds nothing; antipodes sit at 3.
        let o = octahedron();
        assert_eq!(lambda_power(&o, 2).unwrap().edge_count(), 12);
        assert_eq!(wbw_distance(&o, 0, 1).unwrap().unwrap().len(), 3);
        assert_eq!(lambda_power(&o, 3).unwrap(), AbstractGraph::complete(6));
        assert_eq!(lambda_power(&o, 0), Err(Error::InvalidLambda(0)));
    }

    #[test]
    fn flat_witness_checks() {
        let c4 = cycle_map(4);
        let k4 = AbstractGraph::complete(4);
        let w = witness_from_distances(&k4, c4.clone(), vec![0, 1, 2, 3], 2).unwrap();
        check_flat_witness(&k4, &w).unwrap();
        let mut bad = w.clone();
        let i = k4.edges().iter().position(|&e| e == (0, 2)).unwrap();
        bad.certificates[i] = EdgeWitness::Walk(vec![0, 1, 0]);
        bad.lambda = 3;
        assert!(check_flat_witness(&k4, &bad).is_err());
        let planar = fixture_identity(&tetrahedron());
        check_flat_witness(tetrahedron().graph(), &planar).unwrap();
        assert!(witness_from_distances(&k4, c4, vec![0, 1, 2, 3], 1).is_err());
    }

    #[test]
    fn medial_route_and_lower_bound_on_random_maps() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for map in crate::generate::small_map_corpus(&mut rng, 150, 9) {
            for x in 0..map.vertex_count() {
                if map.degree(x) == 0 {
                    continue;
                }
                let graph_dist = map.graph().distances_from(x);
                for y in 0..map.vertex_count() {
                    if y == x || map.degree(y) == 0 {
                        continue;
                    }
                    let c = wbw_distance(&map, x, y).unwrap();
                    let l = c.as_ref().map(|c| c.len());
                    assert_eq!(l, wbw_distance_via_medial(&map, x, y).unwrap());
                    assert_eq!(l, brute_force(&map, x, y));
                    if let Some(c) = c {
                        c.validate(&map).unwrap();
                        assert!(graph_dist[y].unwrap() <= c.len());
                    }
                }
            }
        }
    }

    fn fixture_identity(m: &PlaneMap) -> FlatWitness {
        FlatWitness {
            host: m.clone(),
            tau: (0..m.vertex_count()).collect(),
            lambda: 1,
            certificates: vec![EdgeWitness::Host; m.edge_count()],
        }
    }
}
