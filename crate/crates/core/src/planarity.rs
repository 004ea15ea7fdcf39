//! Planarity testing with an embedding witness.
//!
//! Each biconnected block of the underlying simple graph is embedded by
//! repeated face splitting (Demoucron, Malgrange and Pertuiset). Block
//! rotations are concatenated at cut vertices and parallel edges are placed
//! next to their representative, which keeps the genus at zero.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::AbstractGraph;
use crate::plane_map::{DartId, PlaneMap};

pub fn is_planar(graph: &AbstractGraph) -> bool {
    planar_embedding(graph).is_some()
}

/// A plane map on exactly `graph` (same vertex and edge indices), or `None`
/// when the graph is not planar.
pub fn planar_embedding(graph: &AbstractGraph) -> Option<PlaneMap> {
    let n = graph.vertex_count();
    // Representative edge per vertex pair, parallels in index order.
    let mut classes: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (e, &(a, b)) in graph.edges().iter().enumerate() {
        classes.entry((a.min(b), a.max(b))).or_default().push(e);
    }
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in classes.keys() {
        adj[a].push(b);
        adj[b].push(a);
    }
    if classes.len() > 3 * n.saturating_sub(2) && n >= 3 {
        return None;
    }
    let mut rotation_vertices: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in biconnected_blocks(&adj) {
        let local = if block.vertices.len() == 2 {
            vec![vec![block.vertices[1]], vec![block.vertices[0]]]
        } else {
            embed_block(&block)?
        };
        for (i, &v) in block.vertices.iter().enumerate() {
            rotation_vertices[v].extend(local[i].iter().copied());
        }
    }
    let dart_to = |v: usize, e: usize| -> DartId {
        if graph.edge(e).0 == v {
            2 * e
        } else {
            2 * e + 1
        }
    };
    let mut rotations: Vec<Vec<DartId>> = Vec::with_capacity(n);
    for v in 0..n {
        let mut rot = Vec::new();
        for &w in &rotation_vertices[v] {
            let class = &classes[&(v.min(w), v.max(w))];
            // At the smaller endpoint parallels follow the representative,
            // at the larger one they precede it, so each pair bounds a digon.
            if v < w {
                rot.extend(class.iter().map(|&e| dart_to(v, e)));
            } else {
                rot.extend(class.iter().rev().map(|&e| dart_to(v, e)));
            }
        }
        rotations.push(rot);
    }
    let map = PlaneMap::new(graph.clone(), rotations).ok();
    debug_assert!(
        map.is_some(),
        "planarity witness failed its own Euler check"
    );
    map
}

struct Block {
    vertices: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

/// Biconnected blocks (edge-disjoint) of a simple graph; isolated vertices
/// produce none.
fn biconnected_blocks(adj: &[Vec<usize>]) -> Vec<Block> {
    let n = adj.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX || adj[root].is_empty() {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // Frames: (vertex, parent, next neighbour index).
        let mut frames = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, parent, ref mut i)) = frames.last_mut() {
            if *i < adj[v].len() {
                let w = adj[v][*i];
                *i += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    frames.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] >= disc[parent] {
                        let mut edges = Vec::new();
                        while let Some(e) = stack.pop() {
                            edges.push(e);
                            if e == (parent, v) {
                                break;
                            }
                        }
                        let mut vertices: Vec<usize> =
                            edges.iter().flat_map(|&(a, b)| [a, b]).collect();
                        vertices.sort_unstable();
                        vertices.dedup();
                        blocks.push(Block { vertices, edges });
                    }
                }
            }
        }
    }
    blocks
}

/// Face-splitting embedding of a biconnected block with at least 3 vertices;
/// returns, per block vertex, its neighbours in rotation order.
fn embed_block(block: &Block) -> Option<Vec<Vec<usize>>> {
    let k = block.vertices.len();
    let id: BTreeMap<usize, usize> = block
        .vertices
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i))
        .collect();
    let mut badj = vec![Vec::new(); k];
    for &(a, b) in &block.edges {
        badj[id[&a]].push(id[&b]);
        badj[id[&b]].push(id[&a]);
    }
    let m = block.edges.len();
    if m > 3 * k - 6 {
        return None;
    }
    let mut in_h = vec![false; k];
    let mut h_edges: BTreeMap<(usize, usize), ()> = BTreeMap::new();
    let cycle = find_cycle(&badj);
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        in_h[a] = true;
        h_edges.insert((a.min(b), a.max(b)), ());
    }
    let mut rev = cycle.clone();
    rev.reverse();
    let mut faces: Vec<Vec<usize>> = vec![cycle, rev];
    while h_edges.len() < m {
        let fragments = fragments(&badj, &in_h, &h_edges);
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&f| frag.attachments.iter().all(|a| faces[f].contains(a)))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face) = choice.expect("a fragment remains while edges remain");
        let path = fragment_path(&badj, &in_h, &fragments[fi]);
        for w in path.windows(2) {
            h_edges.insert((w[0].min(w[1]), w[0].max(w[1])), ());
        }
        for &v in &path {
            in_h[v] = true;
        }
        let old = faces.swap_remove(face);
        let (a, b) = (path[0], *path.last().unwrap());
        let i = old.iter().position(|&v| v == a).unwrap();
        let j = old.iter().position(|&v| v == b).unwrap();
        let len = old.len();
        let inner = &path[1..path.len() - 1];
        let mut f1 = Vec::new();
        let mut t = i;
        while t != j {
            f1.push(old[t]);
            t = (t + 1) % len;
        }
        f1.push(b);
        f1.extend(inner.iter().rev().copied());
        let mut f2 = Vec::new();
        let mut t = j;
        while t != i {
            f2.push(old[t]);
            t = (t + 1) % len;
        }
        f2.push(a);
        f2.extend(inner.iter().copied());
        faces.push(f1);
        faces.push(f2);
    }
    // Around face a -> b -> c the rotation at b sends b->a to b->c.
    let mut succ: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for f in &faces {
        let l = f.len();
        for t in 0..l {
            let (a, b, c) = (f[t], f[(t + 1) % l], f[(t + 2) % l]);
            succ.insert((b, a), c);
        }
    }
    let mut out = Vec::with_capacity(k);
    for v in 0..k {
        let start = badj[v][0];
        let mut rot = vec![block.vertices[start]];
        let mut w = succ[&(v, start)];
        while w != start {
            rot.push(block.vertices[w]);
            w = succ[&(v, w)];
        }
        debug_assert_eq!(rot.len(), badj[v].len());
        out.push(rot);
    }
    Some(out)
}

fn find_cycle(adj: &[Vec<usize>]) -> Vec<usize> {
    // Edge 0-w plus a shortest w-0 path avoiding that edge.
    let w = adj[0][0];
    let n = adj.len();
    let mut prev = vec![usize::MAX; n];
    prev[w] = w;
    let mut queue = VecDeque::from([w]);
    while let Some(v) = queue.pop_front() {
        for &u in &adj[v] {
            if v == w && u == 0 {
                continue;
            }
            if prev[u] == usize::MAX {
                prev[u] = v;
                queue.push_back(u);
            }
        }
    }
    let mut cycle = vec![0];
    let mut u = 0;
    while u != w {
        u = prev[u];
        cycle.push(u);
    }
    cycle
}

struct Fragment {
    attachments: Vec<usize>,
    /// A chord `(a, b)` or the vertices of a component outside H.
    chord: Option<(usize, usize)>,
    inner: Vec<usize>,
}

fn fragments(
    adj: &[Vec<usize>],
    in_h: &[bool],
    h_edges: &BTreeMap<(usize, usize), ()>,
) -> Vec<Fragment> {
    let k = adj.len();
    let mut out = Vec::new();
    for a in 0..k {
        for &b in &adj[a] {
            if a < b && in_h[a] && in_h[b] && !h_edges.contains_key(&(a, b)) {
                out.push(Fragment {
                    attachments: vec![a, b],
                    chord: Some((a, b)),
                    inner: vec![],
                });
            }
        }
    }
    let mut seen = vec![false; k];
    for s in 0..k {
        if in_h[s] || seen[s] {
            continue;
        }
        let mut inner = vec![s];
        let mut attachments = Vec::new();
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if in_h[w] {
                    attachments.push(w);
                } else if !seen[w] {
                    seen[w] = true;
                    inner.push(w);
                    queue.push_back(w);
                }
            }
        }
        attachments.sort_unstable();
        attachments.dedup();
        out.push(Fragment {
            attachments,
            chord: None,
            inner,
        });
    }
    out
}

/// Path through a fragment between two distinct attachments.
fn fragment_path(adj: &[Vec<usize>], in_h: &[bool], frag: &Fragment) -> Vec<usize> {
    if let Some((a, b)) = frag.chord {
        return vec![a, b];
    }
    let a = frag.attachments[0];
    let k = adj.len();
    let mut inside = vec![false; k];
    for &v in &frag.inner {
        inside[v] = true;
    }
    let mut prev = vec![usize::MAX; k];
    let mut queue = VecDeque::new();
    for &w in &adj[a] {
        if inside[w] && prev[w] == usize::MAX {
            prev[w] = a;
            queue.push_back(w);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if in_h[w] && w != a {
                let mut path = vec![w, v];
                let mut u = v;
                while prev[u] != a {
                    u = prev[u];
                    path.push(u);
                }
                path.push(a);
                path.reverse();
                return path;
            }
            if inside[w] && prev[w] == usize::MAX {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragments of a biconnected block have two attachments")
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// Tries every rotation system; only for tiny graphs.
    pub(crate) fn brute_force_planar(g: &AbstractGraph) -> Option<bool> {
        let n = g.vertex_count();
        let mut darts: Vec<Vec<DartId>> = vec![Vec::new(); n];
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            darts[a].push(2 * e);
            darts[b].push(2 * e + 1);
        }
        let mut total: u64 = 1;
        for d in &darts {
            for f in 2..d.len() as u64 {
                total = total.saturating_mul(f);
            }
        }
        if total > 20_000 {
            return None;
        }
        fn perms(rest: &[DartId]) -> Vec<Vec<DartId>> {
            if rest.len() <= 1 {
                return vec![rest.to_vec()];
            }
            let mut out = Vec::new();
            for i in 0..rest.len() {
                let mut r = rest.to_vec();
                let x = r.remove(i);
                for mut p in perms(&r) {
                    p.insert(0, x);
                    out.push(p);
                }
            }
            out
        }
        let options: Vec<Vec<Vec<DartId>>> = darts
            .iter()
            .map(|d| {
                if d.is_empty() {
                    vec![vec![]]
                } else {
                    perms(&d[1..])
                        .into_iter()
                        .map(|mut p| {
                            p.insert(0, d[0]);
                            p
                        })
                        .collect()
                }
            })
            .collect();
        let mut idx = vec![0usize; n];
        loop {
            let rot: Vec<Vec<DartId>> = (0..n).map(|v| options[v][idx[v]].clone()).collect();
            if PlaneMap::new(g.clone(), rot).is_ok() {
                return Some(true);
            }
            let mut v = 0;
            loop {
                if v == n {
                    return Some(false);
                }
                idx[v] += 1;
                if idx[v] < options[v].len() {
                    break;
                }
                idx[v] = 0;
                v += 1;
            }
        }
    }

    #[test]
    fn agrees_with_rotation_enumeration() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let mut checked = 0;
        for i in 0..400 {
            let n = 4 + i % 4;
            let g = crate::generate::random_graph(&mut rng, n, 0.6);
            if let Some(expected) = brute_force_planar(&g) {
                assert_eq!(is_planar(&g), expected, "{g:?}");
                checked += 1;
            }
        }
        assert!(checked > 60);
    }

    #[test]
    fn kuratowski_graphs() {
        assert!(is_planar(&AbstractGraph::complete(4)));
        assert!(!is_planar(&AbstractGraph::complete(5)));
        assert!(!is_planar(&AbstractGraph::complete_bipartite(3, 3)));
        assert!(is_planar(&AbstractGraph::complete_bipartite(2, 7)));
    }

    #[test]
    fn witness_keeps_edge_indices_and_parallels() {
        let g = AbstractGraph::new(
            5,
            vec![(0, 1), (1, 2), (0, 1), (2, 0), (3, 4), (1, 0), (2, 3)],
        )
        .unwrap();
        let m = planar_embedding(&g).unwrap();
        assert_eq!(m.graph(), &g);
        assert_eq!(m.euler_characteristic(), 2);
    }

    #[test]
    fn petersen_is_not_planar() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        assert!(!is_planar(&AbstractGraph::new(10, edges).unwrap()));
    }

    #[test]
    fn k5_minus_edge_and_brute_force_agreement() {
        let mut k5 = AbstractGraph::complete(5).edges().to_vec();
        k5.pop();
        let g = AbstractGraph::new(5, k5).unwrap();
        assert!(is_planar(&g));
        assert_eq!(brute_force_planar(&AbstractGraph::complete(5)), Some(false));
        assert_eq!(brute_force_planar(&g), Some(true));
    }
}
