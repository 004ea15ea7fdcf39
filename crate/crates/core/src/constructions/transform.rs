//! Plane transformation of a drawing and the flat witness it yields.
//!
//! Every edge crossed `k` times is subdivided with `k - 1` vertices so each
//! piece carries one crossing. Around every crossing the four neighbouring
//! vertices are joined by a 4-cycle drawn in the crossing's disc, and the
//! two crossing pieces are deleted.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::crossings::CrossedEmbedding;
use crate::error::{Error, Result};
use crate::graph::AbstractGraph;
use crate::plane_map::{MapBuilder, PlaneMap};
use crate::wbw::{
    check_flat_witness, wbw_distance, wbw_distance_to_set, EdgeWitness, FlatWitness, WbwCertificate,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformationRecord {
    /// The simple plane graph produced by the transformation.
    pub host: PlaneMap,
    /// Image of each original vertex (original ids are kept).
    pub tau: Vec<usize>,
    /// The cycle `n1 n2 n3 n4` added around each crossing, in rotation order.
    pub crossing_cycles: Vec<[usize; 4]>,
    /// The two original edges meeting at each crossing.
    pub deleted_pairs: Vec<(usize, usize)>,
    /// The two deleted pieces at each crossing, as host vertex pairs.
    pub deleted_segments: Vec<[(usize, usize); 2]>,
    /// Subdivision vertices of each original edge, in trail order.
    pub subdivision_map: Vec<Vec<usize>>,
    /// Crossings per original edge in the input drawing.
    pub crossings_per_edge: Vec<usize>,
    /// Vertices added only to remove parallel edges from the host.
    pub extra_subdivisions: usize,
}

impl TransformationRecord {
    /// `x, s_1, ..., s_{k-1}, y` for an edge with `k` crossings.
    pub fn stations(&self, g: &AbstractGraph, e: usize) -> Vec<usize> {
        let (x, y) = g.edge(e);
        let mut out = vec![self.tau[x]];
        out.extend(self.subdivision_map[e].iter().copied());
        out.push(self.tau[y]);
        out
    }

    /// The explicit walk of length `2k` for an edge crossed `k` times: two
    /// cycle edges around each crossing, taking at each subdivision vertex
    /// the side that keeps consecutive edges attached. `None` when the edge
    /// is uncrossed or the host lost one of the cycle edges.
    pub fn crossing_walk(&self, g: &AbstractGraph, e: usize) -> Option<WbwCertificate> {
        let stations = self.stations(g, e);
        let crossings: Vec<usize> = (0..self.deleted_pairs.len())
            .filter(|&c| self.deleted_pairs[c].0 == e || self.deleted_pairs[c].1 == e)
            .collect();
        if crossings.is_empty() {
            return None;
        }
        let host_edge = |a: usize, b: usize| {
            self.host.rotation(a).iter().map(|&d| d / 2).find(|&k| {
                let (p, q) = self.host.graph().edge(k);
                (p == a && q == b) || (p == b && q == a)
            })
        };
        // Try both sides at the first crossing; later sides are forced by
        // attachment, so keep whichever choice validates.
        for first_side in 0..2 {
            let mut edges = Vec::new();
            let mut ok = true;
            for j in 0..stations.len() - 1 {
                let (a, b) = (stations[j], stations[j + 1]);
                let Some(c) = crossings.iter().copied().find(|&c| {
                    let cyc = &self.crossing_cycles[c];
                    cyc.contains(&a) && cyc.contains(&b)
                }) else {
                    ok = false;
                    break;
                };
                let cyc = self.crossing_cycles[c];
                let ia = cyc.iter().position(|&v| v == a).unwrap();
                let sides = [cyc[(ia + 1) % 4], cyc[(ia + 3) % 4]];
                let pick = if j == 0 {
                    Some(sides[first_side])
                } else {
                    sides.into_iter().find(|&mid| {
                        host_edge(a, mid).is_some_and(|k| {
                            crate::wbw::attached(&self.host, *edges.last().unwrap(), k)
                        })
                    })
                };
                let Some(mid) = pick else {
                    ok = false;
                    break;
                };
                match (host_edge(a, mid), host_edge(mid, b)) {
                    (Some(p), Some(q)) => {
                        edges.push(p);
                        edges.push(q);
                    }
                    _ => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                let (x, y) = (stations[0], *stations.last().unwrap());
                let cert = WbwCertificate { x, y, edges };
                if cert.validate(&self.host).is_ok() {
                    return Some(cert);
                }
            }
        }
        None
    }
}

/// Applies the plane transformation to a drawing.
pub fn plane_transformation(ce: &CrossedEmbedding) -> Result<TransformationRecord> {
    let p = ce.planarization();
    let n = ce.original_vertex_count();
    let counts = ce.crossings_per_edge();
    let owner = ce.edge_owner();
    let mut b = MapBuilder::from_map(p);
    let mut subdivision_vertices: Vec<Vec<usize>> = vec![Vec::new(); counts.len()];
    for (e, trail) in ce.trails().iter().enumerate() {
        let interior = if trail.len() > 2 {
            &trail[1..trail.len() - 1]
        } else {
            &[][..]
        };
        for &d in interior {
            // Interior pieces run crossing to crossing; orientation of the
            // piece edge may be against the trail.
            let piece = d / 2;
            let (w, _) = b.subdivide(piece);
            subdivision_vertices[e].push(w);
        }
    }
    let mut crossing_cycles_raw = Vec::new();
    let mut deleted_pairs = Vec::new();
    let mut deleted_raw = Vec::new();
    let mut is_cycle_edge: BTreeMap<usize, ()> = BTreeMap::new();
    for c in &ce.crossings().to_vec() {
        let v = c.vertex;
        let rot = b.rotation[v].clone();
        let twins: Vec<usize> = rot.iter().map(|&d| d ^ 1).collect();
        let nb: Vec<usize> = twins.iter().map(|&t| b.origin(t)).collect();
        let (e0, e1) = (owner[p.rotation(v)[0] / 2], owner[p.rotation(v)[1] / 2]);
        for i in 0..4 {
            if nb[i] == nb[(i + 1) % 4] {
                return Err(Error::ConstructionFailed(format!(
                    "edges {e0} and {e1} share vertex {} and cross each other",
                    nb[i]
                )));
            }
        }
        let ks: Vec<usize> = (0..4)
            .map(|i| b.push_edge(nb[i], nb[(i + 1) % 4]))
            .collect();
        for i in 0..4 {
            b.replace_dart(twins[i], &[2 * ks[i], 2 * ks[(i + 3) % 4] + 1]);
            is_cycle_edge.insert(ks[i], ());
        }
        for &d in &rot {
            b.edges[d / 2] = None;
        }
        b.rotation[v].clear();
        crossing_cycles_raw.push([nb[0], nb[1], nb[2], nb[3]]);
        deleted_raw.push([(nb[0], nb[2]), (nb[1], nb[3])]);
        deleted_pairs.push((e0.min(e1), e0.max(e1)));
    }
    let keep: Vec<bool> = (0..b.rotation.len())
        .map(|v| v < n || v >= p.vertex_count())
        .collect();
    let cycle_flags: Vec<bool> = (0..b.edges.len())
        .map(|k| is_cycle_edge.contains_key(&k))
        .collect();
    let (map, new_edge, new_vertex) = b.build_keeping(&keep)?;
    let mut cycle = vec![false; map.edge_count()];
    for (k, ne) in new_edge.iter().enumerate() {
        if let Some(ne) = ne {
            cycle[*ne] = cycle_flags[k];
        }
    }
    let relabel = |v: usize| new_vertex[v].expect("kept vertex");
    let crossing_cycles: Vec<[usize; 4]> = crossing_cycles_raw
        .iter()
        .map(|c| [relabel(c[0]), relabel(c[1]), relabel(c[2]), relabel(c[3])])
        .collect();
    let deleted_segments: Vec<[(usize, usize); 2]> = deleted_raw
        .iter()
        .map(|s| {
            [
                (relabel(s[0].0), relabel(s[0].1)),
                (relabel(s[1].0), relabel(s[1].1)),
            ]
        })
        .collect();
    let subdivision_map: Vec<Vec<usize>> = subdivision_vertices
        .iter()
        .map(|l| l.iter().map(|&w| relabel(w)).collect())
        .collect();
    let before = map.vertex_count();
    let host = make_simple(map, cycle)?;
    Ok(TransformationRecord {
        extra_subdivisions: host.vertex_count() - before,
        host,
        tau: (0..n).collect(),
        crossing_cycles,
        deleted_pairs,
        deleted_segments,
        subdivision_map,
        crossings_per_edge: counts,
    })
}

/// Removes parallel edges: one edge of every digon face is deleted (this
/// never lengthens a wbw walk), then every remaining extra copy is
/// subdivided, keeping cycle edges whole where possible.
fn make_simple(mut map: PlaneMap, mut cycle: Vec<bool>) -> Result<PlaneMap> {
    loop {
        let digon = map.faces().iter().find_map(|f| {
            if f.len() != 2 {
                return None;
            }
            let (p, q) = (f.boundary[0] / 2, f.boundary[1] / 2);
            if p == q {
                return None;
            }
            Some(if cycle[p] && !cycle[q] {
                q
            } else if cycle[q] && !cycle[p] {
                p
            } else {
                p.max(q)
            })
        });
        let Some(drop) = digon else { break };
        map = map.without_edge(drop);
        cycle.remove(drop);
    }
    let mut classes: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (k, &(a, b)) in map.graph().edges().iter().enumerate() {
        classes.entry((a.min(b), a.max(b))).or_default().push(k);
    }
    let mut b = MapBuilder::from_map(&map);
    for (_, mut list) in classes {
        if list.len() < 2 {
            continue;
        }
        // Keep the first cycle edge (or the first edge) whole.
        list.sort_by_key(|&k| (!cycle[k], k));
        for &k in &list[1..] {
            b.subdivide(k);
        }
    }
    let host = b.build()?.0;
    debug_assert!(host.is_simple());
    Ok(host)
}

/// Flat witness for a drawing: `G ⊆ H^{2ξ}` where `H` is its plane
/// transformation (`λ = 1` and `H = G` when the drawing is crossing-free).
#[derive(Clone, Debug)]
pub struct NearlyPlanarFlattening {
    pub record: TransformationRecord,
    pub witness: FlatWitness,
    /// Crossings per edge of the drawing.
    pub xi: usize,
    /// Largest wbw distance from a host vertex to `tau(V(G))`.
    pub reach: usize,
}

pub fn nearly_planar_to_flat(ce: &CrossedEmbedding) -> Result<NearlyPlanarFlattening> {
    let g = ce.original_graph();
    let record = plane_transformation(ce)?;
    let xi = ce.max_crossings();
    let lambda = if xi == 0 { 1 } else { 2 * xi };
    let host = record.host.clone();
    let mut certificates = Vec::with_capacity(g.edge_count());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let (x, y) = (record.tau[u], record.tau[v]);
        if host.graph().has_edge(x, y) {
            certificates.push(EdgeWitness::Host);
            continue;
        }
        let cert = wbw_distance(&host, x, y)?.ok_or_else(|| {
            Error::ConstructionFailed(format!("edge {e} ends in different host components"))
        })?;
        let bound = (2 * record.crossings_per_edge[e]).max(2);
        if cert.len() > bound {
            return Err(Error::BoundViolation {
                edge: e,
                count: cert.len(),
                bound,
            });
        }
        certificates.push(EdgeWitness::Walk(cert.edges));
    }
    let witness = FlatWitness {
        host,
        tau: record.tau.clone(),
        lambda,
        certificates,
    };
    check_flat_witness(&g, &witness)?;
    let reach = host_reach(&witness.host, &witness.tau);
    if reach > xi.max(1) {
        return Err(Error::ConstructionFailed(format!(
            "a host vertex lies at wbw distance {reach} from the original vertices (bound {xi})"
        )));
    }
    Ok(NearlyPlanarFlattening {
        record,
        witness,
        xi,
        reach,
    })
}

/// Largest wbw distance from a non-isolated host vertex to `tau`'s image.
pub fn host_reach(host: &PlaneMap, tau: &[usize]) -> usize {
    wbw_distance_to_set(host, tau)
        .into_iter()
        .enumerate()
        .filter(|&(v, _)| host.degree(v) > 0 || tau.contains(&v))
        .map(|(_, d)| d.unwrap_or(usize::MAX))
        .max()
        .unwrap_or(0)
}

/// The gadget graph kept after adding the crossing cycles but before deleting
/// the crossed pieces, with its 2-flat witness over the transformed host.
#[derive(Clone, Debug)]
pub struct CrossedGadget {
    pub graph: AbstractGraph,
    pub witness: FlatWitness,
    pub record: TransformationRecord,
}

pub fn keep_crossed_gadget(ce: &CrossedEmbedding) -> Result<CrossedGadget> {
    let record = plane_transformation(ce)?;
    let host = record.host.clone();
    let mut edges: Vec<(usize, usize)> = host.graph().edges().to_vec();
    for segs in &record.deleted_segments {
        edges.extend(segs.iter().copied());
    }
    let graph = AbstractGraph::new(host.vertex_count(), edges)?;
    let lambda = if record.deleted_pairs.is_empty() {
        1
    } else {
        2
    };
    let witness = crate::wbw::witness_from_distances(
        &graph,
        host,
        (0..graph.vertex_count()).collect(),
        lambda,
    )?;
    check_flat_witness(&graph, &witness)?;
    Ok(CrossedGadget {
        graph,
        witness,
        record,
    })
}
