//! Drawing powers of a triangulation with few crossings per edge.
//!
//! Old edges are straight segments of a barycentric layout. A new edge
//! `{x, y}` follows a shortest wbw path `e_1, ..., e_l`: it leaves `x` inside
//! the face shared by `e_1, e_2`, crosses `e_2`, and so on until it reaches
//! `y` through the face shared by `e_{l-1}, e_l`. Inside every face the pieces
//! are straight chords between ports on the old edges, so crossings can be
//! counted combinatorially and recounted geometrically.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::layout::{tutte_layout, Layout};
use super::triangulate::check_triangulation;
use crate::crossings::{planarize_drawing, recount_crossings, CrossedEmbedding, Drawing};
use crate::error::{Error, Result};
use crate::geometry::{Point, Q};
use crate::plane_map::PlaneMap;
use crate::wbw::{shared_corner, wbw_distance, wbw_distances_from, WbwCertificate};

/// Port jitter retries when exact planarization finds a degenerate point.
pub const MAX_PORT_ATTEMPTS: usize = 16;

/// One drawn edge: an old edge of the host, or a routed new edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DrawnEdge {
    Old(usize),
    New(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Route {
    pub x: usize,
    pub y: usize,
    pub path: WbwCertificate,
    /// Faces `f_1, ..., f_{l-1}` passed through.
    pub faces: Vec<usize>,
    /// Old edges `e_2, ..., e_{l-1}` crossed.
    pub crossed: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PowerStats {
    pub max_old_edge: usize,
    pub max_new_edge: usize,
    /// Most new edges crossing one old edge allowed by the counting argument.
    pub counted_old_edge_bound: Option<usize>,
    /// The finer bound on crossings of a new edge from the same argument.
    pub counted_new_edge_bound: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct PowerDrawing {
    pub exponent: usize,
    /// `2^exponent`, saturating.
    pub bound: usize,
    pub layout: Layout,
    pub routes: Vec<Route>,
    /// What each edge of `drawing` is.
    pub items: Vec<DrawnEdge>,
    pub drawing: Drawing,
    pub embedding: CrossedEmbedding,
    /// Crossings per drawn edge counted during routing.
    pub counts: Vec<usize>,
    /// The same, recounted from the drawing by exact segment intersection.
    pub recount: Vec<usize>,
    pub stats: PowerStats,
    pub attempts: usize,
}

impl PowerDrawing {
    pub fn max_crossings(&self) -> usize {
        self.counts.iter().copied().max().unwrap_or(0)
    }

    /// Drawn edge joining `x` and `y`, if any.
    pub fn edge_between(&self, x: usize, y: usize) -> Option<usize> {
        let key = (x.min(y), x.max(y));
        self.drawing
            .edges
            .iter()
            .position(|&(a, b)| (a.min(b), a.max(b)) == key)
    }
}

pub fn power_bound(exponent: usize) -> usize {
    u32::try_from(exponent)
        .ok()
        .and_then(|e| 2usize.checked_pow(e))
        .unwrap_or(usize::MAX)
}

/// Draws `H^λ` for a simple 3-connected triangulation `H`: all old edges and
/// every pair at wbw distance `3..=λ` (closer pairs are already adjacent).
pub fn draw_power(h: &PlaneMap, lambda: usize) -> Result<PowerDrawing> {
    if lambda == 0 {
        return Err(Error::InvalidLambda(lambda));
    }
    check_triangulation(h)?;
    let mut pairs = Vec::new();
    for x in 0..h.vertex_count() {
        let dist = wbw_distances_from(h, x)?;
        for (y, d) in dist.into_iter().enumerate().skip(x + 1) {
            if d.is_some_and(|d| (3..=lambda).contains(&d)) {
                pairs.push((x, y));
            }
        }
    }
    let routes = pairs
        .iter()
        .map(|&(x, y)| route(h, x, y))
        .collect::<Result<Vec<_>>>()?;
    let mut items: Vec<DrawnEdge> = (0..h.edge_count()).map(DrawnEdge::Old).collect();
    items.extend((0..routes.len()).map(DrawnEdge::New));
    render(h, routes, items, lambda)
}

/// Draws only the given pairs, each at wbw distance at most `exponent`:
/// adjacent pairs as their old edge, the others routed. Crossings with old
/// edges that are not drawn are not counted.
pub fn draw_pairs(h: &PlaneMap, pairs: &[(usize, usize)], exponent: usize) -> Result<PowerDrawing> {
    check_triangulation(h)?;
    let mut items = Vec::new();
    let mut routes = Vec::new();
    let mut seen: BTreeMap<(usize, usize), ()> = BTreeMap::new();
    for &(x, y) in pairs {
        if seen.insert((x.min(y), x.max(y)), ()).is_some() {
            continue;
        }
        if let Some(e) = h
            .rotation(x)
            .iter()
            .map(|&d| d / 2)
            .find(|&e| h.head(2 * e) == y || h.origin(2 * e) == y)
        {
            items.push(DrawnEdge::Old(e));
            continue;
        }
        let r = route(h, x, y)?;
        if r.path.len() > exponent {
            return Err(Error::ConstructionFailed(format!(
                "{x} and {y} are at wbw distance {} > {exponent}",
                r.path.len()
            )));
        }
        items.push(DrawnEdge::New(routes.len()));
        routes.push(r);
    }
    render(h, routes, items, exponent)
}

fn route(h: &PlaneMap, x: usize, y: usize) -> Result<Route> {
    let path = wbw_distance(h, x, y)?.ok_or_else(|| {
        Error::ConstructionFailed(format!("{x} and {y} are in different components"))
    })?;
    if path.len() < 3 {
        return Err(Error::ConstructionFailed(format!(
            "{x} and {y} are already adjacent"
        )));
    }
    let faces = path
        .edges
        .windows(2)
        .map(|w| shared_corner(h, w[0], w[1]).map(|d| h.corner_face(d)))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::InvalidCertificate("route edges are not attached".into()))?;
    let crossed = path.edges[1..path.len() - 1].to_vec();
    Ok(Route {
        x,
        y,
        path,
        faces,
        crossed,
    })
}

/// A route seen from one of its crossings towards one side: the old edges
/// crossed further on.
fn tail(r: &Route, j: usize, toward: usize) -> Vec<usize> {
    if r.faces[j + 1] == toward {
        r.crossed[j + 1..].to_vec()
    } else {
        r.crossed[..j].iter().rev().copied().collect()
    }
}

fn apex(h: &PlaneMap, f: usize, a: usize, b: usize) -> usize {
    *h.face(f)
        .incident_vertices
        .iter()
        .find(|&&v| v != a && v != b)
        .expect("triangle")
}

fn other_face(h: &PlaneMap, e: usize, f: usize) -> usize {
    let (p, q) = (h.face_of(2 * e), h.face_of(2 * e + 1));
    if p == f {
        q
    } else {
        p
    }
}

/// Order from `a` to `b` along an old edge of two routes leaving it into
/// `face`: the one turning towards `a` first is nearer `a`.
fn compare_tails(
    h: &PlaneMap,
    mut a: usize,
    mut b: usize,
    mut face: usize,
    s: &[usize],
    t: &[usize],
) -> Ordering {
    let mut i = 0;
    loop {
        let c = apex(h, face, a, b);
        let class = |tl: &[usize]| match tl.get(i) {
            None => 1,
            Some(&d) => {
                let (p, q) = h.graph().edge(d);
                if (p == a && q == c) || (p == c && q == a) {
                    0
                } else {
                    2
                }
            }
        };
        let (cs, ct) = (class(s), class(t));
        if cs != ct || cs == 1 {
            return cs.cmp(&ct);
        }
        let d = s[i];
        if cs == 0 {
            b = c;
        } else {
            a = c;
        }
        face = other_face(h, d, face);
        i += 1;
    }
}

/// Ports on each old edge, listed from `origin(2e)` to `head(2e)` as
/// `(route, crossing index)`.
fn lanes(h: &PlaneMap, routes: &[Route]) -> Vec<Vec<(usize, usize)>> {
    let mut through: Vec<Vec<(usize, usize)>> = vec![Vec::new(); h.edge_count()];
    for (r, route) in routes.iter().enumerate() {
        for (j, &e) in route.crossed.iter().enumerate() {
            through[e].push((r, j));
        }
    }
    for (e, list) in through.iter_mut().enumerate() {
        let (a, b) = (h.origin(2 * e), h.head(2 * e));
        let (plus, minus) = (h.face_of(2 * e), h.face_of(2 * e + 1));
        list.sort_by(|&(r, j), &(s, k)| {
            let (rr, rs) = (&routes[r], &routes[s]);
            compare_tails(h, a, b, plus, &tail(rr, j, plus), &tail(rs, k, plus))
                .then_with(|| {
                    compare_tails(h, a, b, minus, &tail(rr, j, minus), &tail(rs, k, minus))
                })
                .then(r.cmp(&s))
        });
    }
    through
}

/// Boundary position inside a triangular face: side index and parameter
/// along the side in boundary order (corners have parameter 0).
type Position = (usize, Q);

fn vertex_position(h: &PlaneMap, f: usize, v: usize) -> Position {
    let s = h
        .face(f)
        .incident_vertices
        .iter()
        .position(|&w| w == v)
        .expect("vertex on face");
    (s, Q::from_integer(BigInt::from(0)))
}

fn port_position(h: &PlaneMap, f: usize, e: usize, t: &Q) -> Position {
    let face = h.face(f);
    let s = face
        .boundary
        .iter()
        .position(|&d| d / 2 == e)
        .expect("edge on face");
    if face.boundary[s] == 2 * e {
        (s, t.clone())
    } else {
        (s, Q::from_integer(BigInt::from(1)) - t)
    }
}

fn chords_cross(p: &(Position, Position), q: &(Position, Position)) -> bool {
    let (a, b) = if p.0 <= p.1 {
        (&p.0, &p.1)
    } else {
        (&p.1, &p.0)
    };
    let inside = |x: &Position| a < x && x < b;
    if [&q.0, &q.1].iter().any(|x| *x == a || *x == b) {
        return false;
    }
    inside(&q.0) != inside(&q.1)
}

fn render(
    h: &PlaneMap,
    routes: Vec<Route>,
    items: Vec<DrawnEdge>,
    exponent: usize,
) -> Result<PowerDrawing> {
    let layout = (0..h.face_count())
        .find_map(|f| tutte_layout(h, f).ok())
        .ok_or_else(|| Error::DegenerateGeometry("no outer face gives a valid layout".into()))?;
    let lanes = lanes(h, &routes);
    let mut drawn_old = vec![false; h.edge_count()];
    let mut drawn_new = vec![false; routes.len()];
    for it in &items {
        match *it {
            DrawnEdge::Old(e) => drawn_old[e] = true,
            DrawnEdge::New(r) => drawn_new[r] = true,
        }
    }
    let mut last_err = None;
    for attempt in 0..MAX_PORT_ATTEMPTS {
        let params = port_parameters(&lanes, &routes, attempt);
        let counts = combinatorial_counts(h, &routes, &items, &drawn_old, &drawn_new, &params);
        let drawing = build_drawing(h, &layout, &routes, &items, &drawn_new, &params);
        let planarized = match planarize_drawing(&drawing) {
            Ok(p) => p,
            Err(err @ Error::DegenerateGeometry(_)) => {
                last_err = Some(err);
                continue;
            }
            Err(err) => return Err(err),
        };
        let recount = recount_crossings(&drawing);
        let embedding = planarized.embedding;
        if recount != counts || embedding.crossings_per_edge() != counts {
            return Err(Error::ConstructionFailed(
                "routing counts disagree with the drawing".into(),
            ));
        }
        let bound = power_bound(exponent);
        if let Some((edge, &count)) = counts.iter().enumerate().find(|&(_, &c)| c > bound) {
            return Err(Error::BoundViolation { edge, count, bound });
        }
        let stats = stats(&items, &counts, exponent);
        return Ok(PowerDrawing {
            exponent,
            bound,
            layout,
            routes,
            items,
            drawing,
            embedding,
            counts,
            recount,
            stats,
            attempts: attempt + 1,
        });
    }
    Err(last_err.unwrap_or_else(|| Error::DegenerateGeometry("no port placement".into())))
}

/// Port parameter of every `(route, crossing index)`: evenly spaced along the
/// old edge, jittered within half a slot on retries.
fn port_parameters(lanes: &[Vec<(usize, usize)>], routes: &[Route], attempt: usize) -> Vec<Vec<Q>> {
    let mut rng = ChaCha8Rng::seed_from_u64(attempt as u64);
    let mut params: Vec<Vec<Q>> = routes
        .iter()
        .map(|r| vec![Q::from_integer(BigInt::from(0)); r.crossed.len()])
        .collect();
    let denom = 1i64 << 16;
    for list in lanes {
        let k = list.len() as i64;
        for (i, &(r, j)) in list.iter().enumerate() {
            let jitter = if attempt == 0 {
                0
            } else {
                rng.random_range(-denom / 4..=denom / 4)
            };
            let num = (i as i64 + 1) * denom + jitter;
            params[r][j] = Q::new(BigInt::from(num), BigInt::from((k + 1) * denom));
        }
    }
    params
}

fn chords_of(h: &PlaneMap, r: &Route, params: &[Q]) -> Vec<(usize, (Position, Position))> {
    let k = r.crossed.len();
    (0..=k)
        .map(|i| {
            let f = r.faces[i];
            let start = if i == 0 {
                vertex_position(h, f, r.x)
            } else {
                port_position(h, f, r.crossed[i - 1], &params[i - 1])
            };
            let end = if i == k {
                vertex_position(h, f, r.y)
            } else {
                port_position(h, f, r.crossed[i], &params[i])
            };
            (f, (start, end))
        })
        .collect()
}

fn combinatorial_counts(
    h: &PlaneMap,
    routes: &[Route],
    items: &[DrawnEdge],
    drawn_old: &[bool],
    drawn_new: &[bool],
    params: &[Vec<Q>],
) -> Vec<usize> {
    let mut old = vec![0; h.edge_count()];
    let mut new = vec![0; routes.len()];
    let mut by_face: Vec<Vec<(usize, (Position, Position))>> = vec![Vec::new(); h.face_count()];
    for (r, route) in routes.iter().enumerate() {
        if !drawn_new[r] {
            continue;
        }
        for &e in &route.crossed {
            if drawn_old[e] {
                old[e] += 1;
                new[r] += 1;
            }
        }
        for (f, chord) in chords_of(h, route, &params[r]) {
            by_face[f].push((r, chord));
        }
    }
    for chords in &by_face {
        for i in 0..chords.len() {
            for j in i + 1..chords.len() {
                if chords_cross(&chords[i].1, &chords[j].1) {
                    new[chords[i].0] += 1;
                    new[chords[j].0] += 1;
                }
            }
        }
    }
    items
        .iter()
        .map(|it| match *it {
            DrawnEdge::Old(e) => old[e],
            DrawnEdge::New(r) => new[r],
        })
        .collect()
}

fn build_drawing(
    h: &PlaneMap,
    layout: &Layout,
    routes: &[Route],
    items: &[DrawnEdge],
    drawn_new: &[bool],
    params: &[Vec<Q>],
) -> Drawing {
    let pts = &layout.points;
    let brackets = outer_brackets(h, layout, routes, drawn_new, params);
    let mut edges = Vec::with_capacity(items.len());
    let mut polylines = Vec::with_capacity(items.len());
    for it in items {
        match *it {
            DrawnEdge::Old(e) => {
                let (a, b) = h.graph().edge(e);
                edges.push((a, b));
                polylines.push(vec![pts[a].clone(), pts[b].clone()]);
            }
            DrawnEdge::New(r) => {
                let route = &routes[r];
                let mut line: Vec<Point> = vec![pts[route.x].clone()];
                for i in 0..=route.crossed.len() {
                    if let Some(bends) = brackets.get(&(r, i)) {
                        line.extend(bends.iter().cloned());
                    }
                    if let Some(&e) = route.crossed.get(i) {
                        let (a, b) = (h.origin(2 * e), h.head(2 * e));
                        line.push(pts[a].lerp(&pts[b], &params[r][i]));
                    }
                }
                line.push(pts[route.y].clone());
                edges.push((route.x, route.y));
                polylines.push(line);
            }
        }
    }
    Drawing {
        vertices: pts.clone(),
        edges,
        polylines,
    }
}

/// Pieces inside the unbounded face are drawn as brackets: out along a ray
/// from the centroid, around a scaled copy of the outer triangle, and back
/// in. Shorter pieces use lower levels, so two pieces meet exactly when
/// their ends interleave. Pieces ending at a corner leave it towards a
/// point just beside it, the longer piece closer to the corner.
fn outer_brackets(
    h: &PlaneMap,
    layout: &Layout,
    routes: &[Route],
    drawn_new: &[bool],
    params: &[Vec<Q>],
) -> BTreeMap<(usize, usize), Vec<Point>> {
    let outer = layout.outer_face;
    let corners: Vec<Point> = h
        .face(outer)
        .incident_vertices
        .iter()
        .map(|&v| layout.points[v].clone())
        .collect();
    let q = |n: i64, d: i64| Q::new(BigInt::from(n), BigInt::from(d));
    let three = q(3, 1);
    let centroid = Point::new(
        (&corners[0].x + &corners[1].x + &corners[2].x) / &three,
        (&corners[0].y + &corners[1].y + &corners[2].y) / &three,
    );
    let lin = |p: &Position| Q::from_integer(BigInt::from(p.0)) + &p.1;
    struct Piece {
        key: (usize, usize),
        ends: [Q; 2],
        at_corner: [bool; 2],
    }
    let mut pieces: Vec<Piece> = Vec::new();
    for (r, route) in routes.iter().enumerate() {
        if !drawn_new[r] {
            continue;
        }
        for (i, (f, (a, b))) in chords_of(h, route, &params[r]).into_iter().enumerate() {
            if f == outer {
                let at_corner = [a.1 == q(0, 1), b.1 == q(0, 1)];
                pieces.push(Piece {
                    key: (r, i),
                    ends: [lin(&a), lin(&b)],
                    at_corner,
                });
            }
        }
    }
    if pieces.is_empty() {
        return BTreeMap::new();
    }
    // Smallest gap between a corner and a port on the outer triangle.
    let slots = pieces.len() as i64 + 2;
    let base = q(1, 4 * slots);
    // Corner ends move to a virtual position just beside the corner.
    let mut by_corner: BTreeMap<(usize, bool), Vec<(Q, usize, usize)>> = BTreeMap::new();
    for (pi, p) in pieces.iter().enumerate() {
        for k in 0..2 {
            if p.at_corner[k] {
                let (me, other) = (&p.ends[k], &p.ends[1 - k]);
                let after = other > me;
                let corner = q(0, 1) + me;
                let len = if after { other - me } else { me - other };
                let idx = corner.to_integer().try_into().unwrap_or(0usize);
                by_corner
                    .entry((idx, after))
                    .or_default()
                    .push((len, pi, k));
            }
        }
    }
    let mut virt: Vec<[Q; 2]> = pieces.iter().map(|p| p.ends.clone()).collect();
    for ((_, after), mut list) in by_corner {
        list.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let cnt = list.len() as i64;
        for (rank, (_, pi, k)) in list.into_iter().enumerate() {
            let eps = &base * q(rank as i64 + 1, cnt + 1);
            virt[pi][k] = if after {
                &virt[pi][k] + eps
            } else {
                &virt[pi][k] - eps
            };
        }
    }
    let mut order: Vec<usize> = (0..pieces.len()).collect();
    let span = |pi: usize| {
        let [a, b] = &virt[pi];
        if a < b {
            b - a
        } else {
            a - b
        }
    };
    order.sort_by(|&a, &b| span(a).cmp(&span(b)).then(a.cmp(&b)));
    let boundary_point = |u: &Q| {
        let s: usize = u.floor().to_integer().try_into().unwrap_or(0);
        let s = s.min(2);
        let t = u - Q::from_integer(BigInt::from(s));
        corners[s].lerp(&corners[(s + 1) % 3], &t)
    };
    let mut out = BTreeMap::new();
    for (rank, &pi) in order.iter().enumerate() {
        let scale = q(4 + rank as i64 + 1, 4);
        let lift = |p: Point| centroid.add(&p.sub(&centroid).scale(&scale));
        let [a, b] = &virt[pi];
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let mut bends = vec![lift(boundary_point(lo))];
        for k in 1..3 {
            let c = Q::from_integer(BigInt::from(k));
            if *lo < c && c < *hi {
                bends.push(lift(corners[k].clone()));
            }
        }
        bends.push(lift(boundary_point(hi)));
        if a > b {
            bends.reverse();
        }
        out.insert(pieces[pi].key, bends);
    }
    out
}

fn stats(
    items: &[DrawnEdge],
    counts: &[usize],
    exponent: usize,
) -> PowerStats {
    let mut s = PowerStats::default();
    for (it, &c) in items.iter().zip(counts) {
        match it {
            DrawnEdge::Old(_) => s.max_old_edge = s.max_old_edge.max(c),
            DrawnEdge::New(_) => s.max_new_edge = s.max_new_edge.max(c),
        }
    }
    if (3..60).contains(&exponent) {
        let l = exponent;
        s.counted_old_edge_bound = Some((l - 3) * (1 << (l - 2)) + 1);
        s.counted_new_edge_bound = Some((l - 1) * (3 * l - 6) * (1 << (l - 3)));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::generate::random_triangulation;
    use crate::graph::AbstractGraph;

    #[test]
    fn tetrahedron_has_nothing_new() {
        let d = draw_power(&fixtures::tetrahedron(), 2).unwrap();
        assert!(d.routes.is_empty());
        assert_eq!(d.max_crossings(), 0);
    }

    #[test]
    fn octahedron_square_is_itself_and_cube_is_k6() {
        let o = fixtures::octahedron();
        assert_eq!(draw_power(&o, 2).unwrap().routes.len(), 0);
        let d = draw_power(&o, 3).unwrap();
        assert_eq!(
            d.drawing.graph().unwrap().normalized(),
            AbstractGraph::complete(6).normalized()
        );
        assert!(d.max_crossings() <= 8);
        assert_eq!(d.counts, d.recount);
    }

    #[test]
    fn icosahedron_cube_within_bound() {
        let d = draw_power(&fixtures::icosahedron(), 3).unwrap();
        assert_eq!(d.routes.len(), 30);
        assert!(d.max_crossings() <= 8);
        assert_eq!(d.counts, d.recount);
    }

    #[test]
    fn random_triangulations_within_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for n in [6, 8, 10, 12] {
            let t = random_triangulation(&mut rng, n, 2 * n);
            for lambda in 3..=4 {
                let d = draw_power(&t, lambda).unwrap();
                assert_eq!(d.counts, d.recount);
                assert!(d.max_crossings() <= power_bound(lambda));
            }
        }
    }

    #[test]
    fn pairs_mode_maps_old_and_new() {
        let o = fixtures::octahedron();
        let d = draw_pairs(&o, &[(0, 1), (0, 2)], 3).unwrap();
        assert_eq!(d.items.len(), 2);
        assert!(matches!(d.items[0], DrawnEdge::New(_)));
        assert!(matches!(d.items[1], DrawnEdge::Old(_)));
        assert_eq!(d.max_crossings(), 0);
    }
}
