//! Moving between flat witnesses and drawings with few crossings per edge,
//! and the two gadget families showing that flatness is not minor-closed.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::constructions::draw::{draw_pairs, power_bound, PowerDrawing};
use crate::constructions::transform::{keep_crossed_gadget, nearly_planar_to_flat, CrossedGadget};
use crate::constructions::triangulate::triangulate;
use crate::crossings::{planarize, planarize_drawing, recount_crossings, CrossedEmbedding, Drawing};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::geometry::{Point, Q};
use crate::graph::{contract_edges, AbstractGraph, Contraction, SubdivisionWitness};
use crate::planarity::planar_embedding;
use crate::plane_map::{MapBuilder, PlaneMap};
use crate::wbw::{check_flat_witness, lambda_power, witness_from_distances, EdgeWitness, FlatWitness};

/// A drawing of `G` obtained from a flat witness.
#[derive(Clone, Debug)]
pub struct FlatDrawing {
    pub embedding: CrossedEmbedding,
    /// Geometry, absent when the witness is 1-flat and `G` is drawn as a
    /// plane subgraph of the host.
    pub drawing: Option<Drawing>,
    /// Power of the triangulated host the edges were routed in (`8λ`).
    pub exponent: usize,
    pub bound: usize,
    pub max_crossings: usize,
    pub components: Vec<PowerDrawing>,
}

/// Subdivides every edge once, so wbw walks at most double in length.
pub fn subdivide_all(map: &PlaneMap) -> PlaneMap {
    let mut b = MapBuilder::from_map(map);
    for e in 0..map.edge_count() {
        b.subdivide(e);
    }
    b.build().expect("subdivision keeps the map plane").0
}

/// Plane map of `g` as the subgraph of `host` given by `tau` (every edge of
/// `g` must be a host edge).
fn plane_subgraph(g: &AbstractGraph, host: &PlaneMap, tau: &[usize]) -> Result<PlaneMap> {
    let mut of_host_dart: BTreeMap<usize, usize> = BTreeMap::new();
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let (x, y) = (tau[u], tau[v]);
        let k = host
            .rotation(x)
            .iter()
            .map(|&d| d / 2)
            .find(|&k| host.head(2 * k) == y || host.origin(2 * k) == y)
            .ok_or(Error::MissingEdge { u: x, v: y })?;
        let d = host.dart_of_edge_at(k, x).expect("edge at its endpoint");
        of_host_dart.insert(d, 2 * i);
        of_host_dart.insert(d ^ 1, 2 * i + 1);
    }
    let rotations = (0..g.vertex_count())
        .map(|u| host.rotation(tau[u]).iter().filter_map(|d| of_host_dart.get(d).copied()).collect())
        .collect();
    PlaneMap::new(g.clone(), rotations)
}

/// Draws `g` from a witness `g ⊆ J^λ`: each component of `J` is subdivided
/// once, triangulated, and the edges of `g` are routed in that
/// triangulation's `8λ`-th power. Every edge ends up with at most `2^{8λ}`
/// crossings.
pub fn flat_to_nearly_planar(g: &AbstractGraph, w: &FlatWitness) -> Result<FlatDrawing> {
    check_flat_witness(g, w)?;
    if w.lambda == 1 || w.certificates.iter().all(|c| *c == EdgeWitness::Host) {
        let map = plane_subgraph(g, &w.host, &w.tau)?;
        return Ok(FlatDrawing {
            embedding: CrossedEmbedding::from_plane_map(map),
            drawing: None,
            exponent: 1,
            bound: 1,
            max_crossings: 0,
            components: Vec::new(),
        });
    }
    let exponent = 8 * w.lambda;
    let bound = power_bound(exponent);
    let (comp, count) = w.host.graph().components();
    let mut points: Vec<Option<Point>> = vec![None; g.vertex_count()];
    let mut polylines: Vec<Vec<Point>> = vec![Vec::new(); g.edge_count()];
    let mut cursor = Q::from_integer(BigInt::from(0));
    let one = Q::from_integer(BigInt::from(1));
    let mut components = Vec::new();
    for c in 0..count {
        let edges: Vec<usize> = (0..g.edge_count()).filter(|&e| comp[w.tau[g.edge(e).0]] == c).collect();
        if edges.is_empty() {
            continue;
        }
        let anchor = w.tau[g.edge(edges[0]).0];
        let (jc, ids) = w.host.component_of(anchor);
        let mut local = BTreeMap::new();
        for (i, &v) in ids.iter().enumerate() {
            local.insert(v, i);
        }
        let h = subdivide_all(&jc);
        let rec = triangulate(&h)?;
        let pairs: Vec<(usize, usize)> = edges
            .iter()
            .map(|&e| {
                let (u, v) = g.edge(e);
                (rec.tau[local[&w.tau[u]]], rec.tau[local[&w.tau[v]]])
            })
            .collect();
        let pd = draw_pairs(&rec.triangulation, &pairs, exponent)?;
        let pts: Vec<&Point> =
            pd.drawing.vertices.iter().chain(pd.drawing.polylines.iter().flatten()).collect();
        let min_x = pts.iter().map(|p| &p.x).min().expect("non-empty").clone();
        let max_x = pts.iter().map(|p| &p.x).max().expect("non-empty").clone();
        let shift = Point::new(&cursor - &min_x, Q::from_integer(BigInt::from(0)));
        cursor = &max_x + &shift.x + &one;
        for u in 0..g.vertex_count() {
            if comp[w.tau[u]] == c {
                let v = rec.tau[local[&w.tau[u]]];
                points[u] = Some(pd.drawing.vertices[v].add(&shift));
            }
        }
        for (&e, &(x, y)) in edges.iter().zip(&pairs) {
            let k = pd.edge_between(x, y).expect("every pair is drawn");
            let mut line: Vec<Point> = pd.drawing.polylines[k].iter().map(|p| p.add(&shift)).collect();
            if pd.drawing.edges[k].0 != x {
                line.reverse();
            }
            polylines[e] = line;
        }
        components.push(pd);
    }
    let mut spare = 0i64;
    let vertices: Vec<Point> = points
        .into_iter()
        .map(|p| {
            p.unwrap_or_else(|| {
                spare += 1;
                Point::new(&cursor + Q::from_integer(BigInt::from(spare)), Q::from_integer(BigInt::from(-1)))
            })
        })
        .collect();
    let drawing = Drawing { vertices, edges: g.edges().to_vec(), polylines };
    let embedding = planarize_drawing(&drawing)?.embedding;
    let counts = recount_crossings(&drawing);
    if counts != embedding.crossings_per_edge() {
        return Err(Error::ConstructionFailed("recount disagrees with the planarization".into()));
    }
    if let Some((edge, &count)) = counts.iter().enumerate().find(|&(_, &c)| c > bound) {
        return Err(Error::BoundViolation { edge, count, bound });
    }
    let max_crossings = counts.into_iter().max().unwrap_or(0);
    Ok(FlatDrawing { embedding, drawing: Some(drawing), exponent, bound, max_crossings, components })
}

/// Both directions checked on one graph. `λ` and `ξ` values are achieved
/// upper bounds, never claimed minima.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceCertificate {
    pub vertices: usize,
    pub edges: usize,
    /// `λ` of the given witness.
    pub lambda_given: usize,
    /// Most crossings on an edge of the given drawing.
    pub xi_given: usize,
    /// `λ` of the witness built from the drawing.
    pub lambda_from_drawing: usize,
    /// Most crossings on an edge of the drawing built from the witness.
    pub xi_from_witness: usize,
    /// `lambda_from_drawing <= max(1, 2 xi_given)`.
    pub lambda_bound_holds: bool,
    /// `xi_from_witness <= 2^{8 lambda_given}`.
    pub xi_bound_holds: bool,
}

impl EquivalenceCertificate {
    pub fn holds(&self) -> bool {
        self.lambda_bound_holds && self.xi_bound_holds
    }
}

pub fn certify_equivalence(
    g: &AbstractGraph,
    witness: &FlatWitness,
    drawing: &CrossedEmbedding,
) -> Result<EquivalenceCertificate> {
    let drawn = drawing.original_graph();
    if drawn.vertex_count() != g.vertex_count() || drawn.normalized() != g.normalized() {
        return Err(Error::InvalidEmbedding("the drawing is of a different graph".into()));
    }
    check_flat_witness(g, witness)?;
    let xi_given = drawing.max_crossings();
    let flat = nearly_planar_to_flat(drawing)?;
    let back = flat_to_nearly_planar(g, witness)?;
    let lambda_from_drawing = flat.witness.lambda;
    let xi_from_witness = back.max_crossings;
    Ok(EquivalenceCertificate {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        lambda_given: witness.lambda,
        xi_given,
        lambda_from_drawing,
        xi_from_witness,
        lambda_bound_holds: lambda_from_drawing <= (2 * xi_given).max(1),
        xi_bound_holds: xi_from_witness <= power_bound(8 * witness.lambda),
    })
}

/// `G_n`: a convex drawing of `K_n` after the crossing cycles are added but
/// before the crossed pieces are removed. It is 2-flat and contains a
/// subdivision of `K_n`.
#[derive(Clone, Debug)]
pub struct TopologicalGadget {
    pub n: usize,
    pub drawing: Drawing,
    pub gadget: CrossedGadget,
    pub subdivision: SubdivisionWitness,
}

pub fn gadget_topological_minor(n: usize) -> Result<TopologicalGadget> {
    if n < 4 {
        return Err(Error::ConstructionFailed(format!("gadget needs n >= 4, got {n}")));
    }
    let kn = AbstractGraph::complete(n);
    let planarized = planarize(&fixtures::convex_points(n), kn.edges(), n as u64)?;
    let gadget = keep_crossed_gadget(&planarized.planarized.embedding)?;
    let subdivision = SubdivisionWitness {
        branch: gadget.record.tau.clone(),
        paths: (0..kn.edge_count()).map(|e| gadget.record.stations(&kn, e)).collect(),
    };
    if !crate::graph::contains_subdivision(&gadget.graph, &kn, &subdivision) {
        return Err(Error::ConstructionFailed("stations do not form a subdivision".into()));
    }
    Ok(TopologicalGadget { n, drawing: planarized.drawing, gadget, subdivision })
}

/// `G_n`: the square of the `2n x 2n` grid, with branch sets contracting
/// it onto a graph that contains `K_{n,n}` spanning, and then onto `K_n`.
#[derive(Clone, Debug)]
pub struct ContractionGadget {
    pub n: usize,
    pub grid: PlaneMap,
    pub graph: AbstractGraph,
    pub witness: FlatWitness,
    /// Contracting these edges of `graph` leaves one vertex per branch set.
    pub to_bipartite: Vec<(usize, usize)>,
    pub bipartite: Contraction,
    /// Further merges `A_i` with `B_i`, giving `K_n`.
    pub to_complete: Vec<(usize, usize)>,
    pub complete: Contraction,
    /// Contracted vertex of the branch sets `A_0..A_n` and `B_0..B_n`.
    pub sides: (Vec<usize>, Vec<usize>),
}

pub fn gadget_contraction(n: usize) -> Result<ContractionGadget> {
    if n < 2 {
        return Err(Error::ConstructionFailed(format!("gadget needs n >= 2, got {n}")));
    }
    let side = 2 * n;
    let grid = fixtures::grid_map(side, side);
    let graph = lambda_power(&grid, 2)?;
    let witness = witness_from_distances(&graph, grid.clone(), (0..side * side).collect(), 2)?;
    let id = |r: usize, c: usize| r * side + c;
    // A_i zigzags through rows 2i, 2i+1; B_j through columns 2j, 2j+1.
    let mut to_bipartite = Vec::new();
    for i in 0..n {
        let (r, s) = (2 * i, 2 * i + 1);
        for c in 0..side - 1 {
            let (a, b) = if c % 2 == 0 { (id(r, c), id(s, c + 1)) } else { (id(s, c), id(r, c + 1)) };
            to_bipartite.push((a, b));
        }
    }
    for j in 0..n {
        let (c, d) = (2 * j, 2 * j + 1);
        for r in 0..side - 1 {
            let (a, b) = if r % 2 == 0 { (id(r, d), id(r + 1, c)) } else { (id(r, c), id(r + 1, d)) };
            to_bipartite.push((a, b));
        }
    }
    let bipartite = contract_edges(&graph, &to_bipartite)?;
    let a_side: Vec<usize> = (0..n).map(|i| bipartite.class_of[id(2 * i, 0)]).collect();
    let b_side: Vec<usize> = (0..n).map(|j| bipartite.class_of[id(0, 2 * j + 1)]).collect();
    for &a in &a_side {
        for &b in &b_side {
            if !bipartite.graph.has_edge(a, b) {
                return Err(Error::ConstructionFailed(format!("branch sets {a} and {b} are not adjacent")));
            }
        }
    }
    if bipartite.graph.vertex_count() != 2 * n {
        return Err(Error::ConstructionFailed("branch sets do not cover the grid".into()));
    }
    let mut to_complete = to_bipartite.clone();
    to_complete.extend((0..n).map(|i| (id(2 * i, 2 * i), id(2 * i, 2 * i + 1))));
    let complete = contract_edges(&graph, &to_complete)?;
    if complete.graph.normalized() != AbstractGraph::complete(n).normalized() {
        return Err(Error::ConstructionFailed("merged branch sets do not give K_n".into()));
    }
    Ok(ContractionGadget {
        n,
        grid,
        graph,
        witness,
        to_bipartite,
        bipartite,
        to_complete,
        complete,
        sides: (a_side, b_side),
    })
}

/// A 1-flat witness exists exactly for planar graphs: the witness is the
/// graph's own embedding.
pub fn one_flat_witness(g: &AbstractGraph) -> Option<FlatWitness> {
    let host = planar_embedding(&g.simplified())?;
    let witness = FlatWitness {
        tau: (0..g.vertex_count()).collect(),
        lambda: 1,
        certificates: vec![EdgeWitness::Host; g.edge_count()],
        host,
    };
    check_flat_witness(g, &witness).ok().map(|_| witness)
}

pub fn lambda_is_one_iff_planar(g: &AbstractGraph) -> bool {
    crate::planarity::is_planar(g) == one_flat_witness(g).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{random_graph, random_plane_map};
    use crate::graph::contains_subdivision;
    use crate::wbw::wbw_distance;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn one_flat_short_circuits() {
        let t = fixtures::tetrahedron();
        let g = t.graph().clone();
        let w = one_flat_witness(&g).unwrap();
        let d = flat_to_nearly_planar(&g, &w).unwrap();
        assert_eq!(d.max_crossings, 0);
        assert!(d.drawing.is_none());
    }

    #[test]
    fn k4_over_a_four_cycle() {
        let host = fixtures::cycle_map(4);
        let g = AbstractGraph::complete(4);
        let w = witness_from_distances(&g, host, (0..4).collect(), 2).unwrap();
        let d = flat_to_nearly_planar(&g, &w).unwrap();
        assert_eq!(d.exponent, 16);
        assert!(d.max_crossings <= d.bound);
        let drawing = d.drawing.unwrap();
        assert_eq!(recount_crossings(&drawing), d.embedding.crossings_per_edge());
    }

    #[test]
    fn subdivision_at_most_doubles_wbw() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..30 {
            let n = rng.random_range(2..7);
            let j = random_plane_map(&mut rng, n, 4, true);
            let h = subdivide_all(&j);
            assert!(h.is_simple());
            for x in 0..n {
                for y in x + 1..n {
                    let dj = wbw_distance(&j, x, y).unwrap().unwrap().len();
                    let dh = wbw_distance(&h, x, y).unwrap().unwrap().len();
                    assert!(dh <= 2 * dj, "{dh} > 2 * {dj}");
                }
            }
        }
        // Only an upper bound: opposite leaves of a six-leaf star go from 4 to 6.
        let s = fixtures::star_map(6);
        assert_eq!(wbw_distance(&s, 1, 4).unwrap().unwrap().len(), 4);
        assert_eq!(wbw_distance(&subdivide_all(&s), 1, 4).unwrap().unwrap().len(), 6);
    }

    #[test]
    fn certificate_for_k5() {
        let g = AbstractGraph::complete(5);
        let ce = planarize_drawing(&fixtures::k5_one_crossing_drawing()).unwrap().embedding;
        let w = nearly_planar_to_flat(&ce).unwrap().witness;
        let cert = certify_equivalence(&g, &w, &ce).unwrap();
        assert_eq!(cert.xi_given, 1);
        assert_eq!(cert.lambda_from_drawing, 2);
        assert!(cert.holds());
    }

    #[test]
    fn topological_gadgets() {
        for n in 4..=6 {
            let t = gadget_topological_minor(n).unwrap();
            assert_eq!(t.gadget.witness.lambda, 2);
            assert!(contains_subdivision(&t.gadget.graph, &AbstractGraph::complete(n), &t.subdivision));
            check_flat_witness(&t.gadget.graph, &t.gadget.witness).unwrap();
        }
    }

    #[test]
    fn contraction_gadgets() {
        for n in 2..=3 {
            let c = gadget_contraction(n).unwrap();
            check_flat_witness(&c.graph, &c.witness).unwrap();
            assert_eq!(c.bipartite.graph.vertex_count(), 2 * n);
            assert!(c.bipartite.graph.edge_count() >= n * n);
            assert_eq!(c.complete.graph.normalized(), AbstractGraph::complete(n).normalized());
        }
    }

    #[test]
    fn planar_iff_one_flat() {
        assert!(one_flat_witness(&AbstractGraph::complete(4)).is_some());
        assert!(one_flat_witness(&AbstractGraph::complete(5)).is_none());
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..100 {
            let n = rng.random_range(1..9);
            assert!(lambda_is_one_iff_planar(&random_graph(&mut rng, n, 0.5)));
        }
    }
}
