//! Abstract (unembedded) loopless multigraphs and the minor-style relations
//! on them: contraction sequences and subdivision witnesses.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// An undirected loopless multigraph on vertices `0..vertex_count`.
///
/// Edge order is significant: edge `k` owns darts `2k` and `2k + 1` once the
/// graph is embedded.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbstractGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl AbstractGraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for &(u, v) in &edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        count: vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::Loop { vertex: u });
            }
        }
        Ok(AbstractGraph {
            vertex_count,
            edges,
        })
    }

    pub fn empty(vertex_count: usize) -> Self {
        AbstractGraph {
            vertex_count,
            edges: Vec::new(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        AbstractGraph {
            vertex_count: n,
            edges,
        }
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least three vertices");
        let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
        AbstractGraph {
            vertex_count: n,
            edges,
        }
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|i| (i - 1, i)).collect();
        AbstractGraph {
            vertex_count: n,
            edges,
        }
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        AbstractGraph {
            vertex_count: a + b,
            edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// Same multigraph with every edge written `(min, max)` and the edge list sorted.
    pub fn normalized(&self) -> Self {
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        edges.sort_unstable();
        AbstractGraph {
            vertex_count: self.vertex_count,
            edges,
        }
    }

    /// Underlying simple graph, normalized.
    pub fn simplified(&self) -> Self {
        let mut g = self.normalized();
        g.edges.dedup();
        g
    }

    pub fn is_simple(&self) -> bool {
        self.first_parallel_pair().is_none()
    }

    pub(crate) fn first_parallel_pair(&self) -> Option<(usize, usize)> {
        let n = self.normalized();
        n.edges.windows(2).find(|w| w[0] == w[1]).map(|w| w[0])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Neighbour lists with multiplicity (one entry per incident edge).
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges
            .iter()
            .any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }

    /// Number of edges joining `u` and `v`.
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
            .count()
    }

    /// Component label per vertex and the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let adj = self.adjacency();
        let mut comp = vec![usize::MAX; self.vertex_count];
        let mut count = 0;
        for s in 0..self.vertex_count {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn is_connected(&self) -> bool {
        self.components().1 <= 1
    }

    /// Graph distances from `source` (`None` = unreachable).
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let adj = self.adjacency();
        let mut dist = vec![None; self.vertex_count];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in &adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Whether removing `removed` leaves the remaining vertices connected.
    pub fn connected_without(&self, removed: &[usize]) -> bool {
        let mut gone = vec![false; self.vertex_count];
        for &r in removed {
            gone[r] = true;
        }
        let Some(start) = (0..self.vertex_count).find(|&v| !gone[v]) else {
            return true;
        };
        let adj = self.adjacency();
        let mut seen = gone.clone();
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Exhaustive check that no set of at most two vertices disconnects the graph.
    ///
    /// Meant for the small instances the constructions are tested on.
    pub fn is_three_connected(&self) -> bool {
        let n = self.vertex_count;
        if n < 4 || !self.is_connected() {
            return false;
        }
        for a in 0..n {
            if !self.connected_without(&[a]) {
                return false;
            }
            for b in a + 1..n {
                if !self.connected_without(&[a, b]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Result of contracting a sequence of edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    /// Simple contracted graph.
    pub graph: AbstractGraph,
    /// Contracted vertex of each original vertex.
    pub class_of: Vec<usize>,
}

/// Contracts the edges `sequence` in order.
///
/// Each step names an edge by two original vertices; the step is valid when
/// their current classes are distinct and adjacent. Classes of the result are
/// numbered by their smallest original vertex. Loops disappear and parallel
/// edges collapse, so the result is simple.
pub fn contract_edges(graph: &AbstractGraph, sequence: &[(usize, usize)]) -> Result<Contraction> {
    let n = graph.vertex_count();
    for &(u, v) in sequence {
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    count: n,
                });
            }
        }
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    // Current adjacency between class representatives.
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for &(u, v) in graph.edges() {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    for &(u, v) in sequence {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv || !adj[ru].contains(&rv) {
            return Err(Error::MissingEdge { u, v });
        }
        let (keep, gone) = (ru.min(rv), ru.max(rv));
        parent[gone] = keep;
        let moved = core::mem::take(&mut adj[gone]);
        for w in moved {
            adj[w].remove(&gone);
            if w != keep {
                adj[w].insert(keep);
                adj[keep].insert(w);
            }
        }
        adj[keep].remove(&keep);
        adj[keep].remove(&gone);
    }
    let mut label = BTreeMap::new();
    let mut class_of = vec![0; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        let next = label.len();
        class_of[v] = *label.entry(r).or_insert(next);
    }
    let mut edges: Vec<(usize, usize)> = graph
        .edges()
        .iter()
        .map(|&(u, v)| (class_of[u], class_of[v]))
        .filter(|&(a, b)| a != b)
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    edges.sort_unstable();
    edges.dedup();
    Ok(Contraction {
        graph: AbstractGraph {
            vertex_count: label.len(),
            edges,
        },
        class_of,
    })
}

/// Branch vertices and realizing paths of a subdivision of a pattern graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionWitness {
    /// Image of each pattern vertex.
    pub branch: Vec<usize>,
    /// One vertex path per pattern edge, from the image of its first endpoint
    /// to the image of its second.
    pub paths: Vec<Vec<usize>>,
}

/// Checks that `witness` exhibits a subdivision of `pattern` inside `graph`.
///
/// Paths must run between the right branch vertices, use each graph edge at
/// most as often as it occurs, and be internally disjoint from each other and
/// from the branch vertices.
pub fn contains_subdivision(
    graph: &AbstractGraph,
    pattern: &AbstractGraph,
    witness: &SubdivisionWitness,
) -> bool {
    if witness.branch.len() != pattern.vertex_count() || witness.paths.len() != pattern.edge_count()
    {
        return false;
    }
    let n = graph.vertex_count();
    let mut used_vertex = vec![false; n];
    for &b in &witness.branch {
        if b >= n || used_vertex[b] {
            return false;
        }
        used_vertex[b] = true;
    }
    let mut available: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for &(u, v) in graph.edges() {
        *available.entry((u.min(v), u.max(v))).or_default() += 1;
    }
    for (e, path) in witness.paths.iter().enumerate() {
        let (pu, pv) = pattern.edge(e);
        if path.len() < 2
            || path[0] != witness.branch[pu]
            || path[path.len() - 1] != witness.branch[pv]
        {
            return false;
        }
        for &inner in &path[1..path.len() - 1] {
            if inner >= n || used_vertex[inner] {
                return false;
            }
            used_vertex[inner] = true;
        }
        for w in path.windows(2) {
            let key = (w[0].min(w[1]), w[0].max(w[1]));
            match available.get_mut(&key) {
                Some(c) if *c > 0 => *c -= 1,
                _ => return false,
            }
        }
    }
    true
}

/// Backtracking isomorphism test for small multigraphs.
pub fn is_isomorphic(a: &AbstractGraph, b: &AbstractGraph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mult = |g: &AbstractGraph| {
        let mut m = vec![vec![0usize; n]; n];
        for &(u, v) in g.edges() {
            m[u][v] += 1;
            m[v][u] += 1;
        }
        m
    };
    let (ma, mb) = (mult(a), mult(b));
    let deg = |m: &Vec<Vec<usize>>| {
        m.iter()
            .map(|r| r.iter().sum::<usize>())
            .collect::<Vec<_>>()
    };
    let (da, db) = (deg(&ma), deg(&mb));
    let mut sa = da.clone();
    let mut sb = db.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return false;
    }
    let mut map = Vec::with_capacity(n);
    let mut used = vec![false; n];
    extend_checked(0, &mut map, &mut used, &ma, &mb, &da, &db)
}

fn extend_checked(
    i: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    ma: &[Vec<usize>],
    mb: &[Vec<usize>],
    da: &[usize],
    db: &[usize],
) -> bool {
    let n = ma.len();
    if i == n {
        return true;
    }
    for c in 0..n {
        if used[c] || da[i] != db[c] {
            continue;
        }
        if (0..i).any(|j| ma[i][j] != mb[c][map[j]]) {
            continue;
        }
        map.push(c);
        used[c] = true;
        if extend_checked(i + 1, map, used, ma, mb, da, db) {
            return true;
        }
        map.pop();
        used[c] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loops_are_rejected() {
        assert_eq!(
            AbstractGraph::new(2, vec![(1, 1)]),
            Err(Error::Loop { vertex: 1 })
        );
        assert!(matches!(
            AbstractGraph::new(2, vec![(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, .. })
        ));
    }

    #[test]
    fn normalization_sorts_edges() {
        let g = AbstractGraph::new(3, vec![(2, 1), (1, 0), (0, 2), (1, 0)]).unwrap();
        assert_eq!(g.normalized().edges(), &[(0, 1), (0, 1), (0, 2), (1, 2)]);
        assert_eq!(g.simplified().edge_count(), 3);
        assert!(!g.is_simple());
    }

    #[test]
    fn contracting_a_triangle_edge_gives_a_single_edge() {
        let c = contract_edges(&AbstractGraph::cycle(3), &[(0, 1)]).unwrap();
        assert_eq!(c.graph, AbstractGraph::new(2, vec![(0, 1)]).unwrap());
        assert_eq!(c.class_of, vec![0, 0, 1]);
    }

    #[test]
    fn contracting_a_perfect_matching_of_c6_gives_c3() {
        let c = contract_edges(&AbstractGraph::cycle(6), &[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert!(is_isomorphic(&c.graph, &AbstractGraph::cycle(3)));
    }

    #[test]
    fn contraction_reports_missing_edges() {
        let g = AbstractGraph::path(3);
        assert_eq!(
            contract_edges(&g, &[(0, 2)]),
            Err(Error::MissingEdge { u: 0, v: 2 })
        );
        // Same class twice.
        assert_eq!(
            contract_edges(&g, &[(0, 1), (1, 0)]),
            Err(Error::MissingEdge { u: 1, v: 0 })
        );
        // Adjacent only after the first contraction.
        assert!(contract_edges(&g, &[(0, 1), (0, 2)]).is_ok());
    }

    #[test]
    fn subdivision_checker() {
        let c6 = AbstractGraph::cycle(6);
        let c3 = AbstractGraph::cycle(3);
        let w = SubdivisionWitness {
            branch: vec![0, 2, 4],
            paths: vec![vec![0, 1, 2], vec![2, 3, 4], vec![4, 5, 0]],
        };
        assert!(contains_subdivision(&c6, &c3, &w));
        let k4 = AbstractGraph::complete(4);
        let ident = SubdivisionWitness {
            branch: vec![0, 1, 2, 3],
            paths: k4.edges().iter().map(|&(u, v)| vec![u, v]).collect(),
        };
        assert!(contains_subdivision(&k4, &k4, &ident));
        // Two paths sharing an internal vertex.
        let bad = SubdivisionWitness {
            branch: vec![0, 2, 4],
            paths: vec![vec![0, 1, 2], vec![2, 1, 0, 5, 4], vec![4, 5, 0]],
        };
        assert!(!contains_subdivision(&c6, &c3, &bad));
        // Non-edge step.
        let bad = SubdivisionWitness {
            branch: vec![0, 2, 4],
            paths: vec![vec![0, 2], vec![2, 3, 4], vec![4, 5, 0]],
        };
        assert!(!contains_subdivision(&c6, &c3, &bad));
    }

    #[test]
    fn isomorphism_distinguishes_small_graphs() {
        let k33 = AbstractGraph::complete_bipartite(3, 3);
        let prism = AbstractGraph::new(
            6,
            vec![
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert!(!is_isomorphic(&k33, &prism));
        let relabeled = AbstractGraph::new(
            6,
            vec![
                (5, 0),
                (5, 2),
                (5, 4),
                (1, 0),
                (1, 2),
                (1, 4),
                (3, 0),
                (3, 2),
                (3, 4),
            ],
        )
        .unwrap();
        assert!(is_isomorphic(&k33, &relabeled));
    }

    #[test]
    fn three_connectivity() {
        assert!(AbstractGraph::complete(4).is_three_connected());
        assert!(!AbstractGraph::cycle(5).is_three_connected());
        assert!(!AbstractGraph::complete_bipartite(2, 3).is_three_connected());
    }
}
