//! Rotation systems of loopless plane multigraphs.
//!
//! Edge `k = (u, v)` owns dart `2k` leaving `u` and dart `2k + 1` leaving `v`.
//! The rotation at a vertex lists its outgoing darts in cyclic order and is
//! stored starting from its smallest dart so serialized maps are stable.
//! Faces are traced with `next(d) = rot_next(twin(d))`.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::AbstractGraph;

pub type DartId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Dart {
    pub id: DartId,
    pub edge: usize,
    pub origin: usize,
    pub twin: DartId,
}

/// A face as the cyclic dart sequence of its boundary walk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub id: usize,
    /// Boundary darts, starting from the smallest one.
    pub boundary: Vec<DartId>,
    /// Origins of the boundary darts (a vertex repeats once per corner).
    pub incident_vertices: Vec<usize>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }
}

/// A crossing-free embedding of a loopless multigraph in the sphere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneMap {
    graph: AbstractGraph,
    rotation: Vec<Vec<DartId>>,
    position: Vec<usize>,
    faces: Vec<Face>,
    face_of: Vec<usize>,
}

/// Builds a plane map, tracing faces and checking the Euler relation per
/// connected component.
pub fn build_plane_map(graph: AbstractGraph, rotations: Vec<Vec<DartId>>) -> Result<PlaneMap> {
    PlaneMap::new(graph, rotations)
}

impl PlaneMap {
    pub fn new(graph: AbstractGraph, rotations: Vec<Vec<DartId>>) -> Result<Self> {
        let n = graph.vertex_count();
        let darts = 2 * graph.edge_count();
        if rotations.len() != n {
            return Err(Error::MalformedRotation {
                vertex: rotations.len().min(n),
                reason: format!("expected {n} rotation lists, got {}", rotations.len()),
            });
        }
        let mut position = vec![usize::MAX; darts];
        let mut rotation = Vec::with_capacity(n);
        for (v, rot) in rotations.into_iter().enumerate() {
            for (i, &d) in rot.iter().enumerate() {
                if d >= darts {
                    return Err(Error::MalformedRotation {
                        vertex: v,
                        reason: format!("dart {d} does not exist"),
                    });
                }
                if position[d] != usize::MAX {
                    return Err(Error::MalformedRotation {
                        vertex: v,
                        reason: format!("dart {d} listed twice"),
                    });
                }
                let (a, b) = graph.edge(d / 2);
                let origin = if d.is_multiple_of(2) { a } else { b };
                if origin != v {
                    return Err(Error::MalformedRotation {
                        vertex: v,
                        reason: format!("dart {d} leaves vertex {origin}"),
                    });
                }
                position[d] = i;
            }
            rotation.push(canonical_cycle(rot));
        }
        if let Some(d) = position.iter().position(|&p| p == usize::MAX) {
            let (a, b) = graph.edge(d / 2);
            return Err(Error::MalformedRotation {
                vertex: if d.is_multiple_of(2) { a } else { b },
                reason: format!("dart {d} is missing"),
            });
        }
        for rot in &rotation {
            for (i, &d) in rot.iter().enumerate() {
                position[d] = i;
            }
        }
        let mut map = PlaneMap {
            graph,
            rotation,
            position,
            faces: Vec::new(),
            face_of: Vec::new(),
        };
        map.trace_faces();
        map.check_euler()?;
        Ok(map)
    }

    fn trace_faces(&mut self) {
        let darts = self.dart_count();
        let mut face_of = vec![usize::MAX; darts];
        let mut faces = Vec::new();
        for start in 0..darts {
            if face_of[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut boundary = Vec::new();
            let mut d = start;
            loop {
                face_of[d] = id;
                boundary.push(d);
                d = self.face_next(d);
                if d == start {
                    break;
                }
            }
            let incident_vertices = boundary.iter().map(|&d| self.origin(d)).collect();
            faces.push(Face {
                id,
                boundary,
                incident_vertices,
            });
        }
        self.faces = faces;
        self.face_of = face_of;
    }

    fn check_euler(&self) -> Result<()> {
        let (comp, count) = self.graph.components();
        let mut v = vec![0i64; count];
        let mut e = vec![0i64; count];
        let mut f = vec![0i64; count];
        for &c in &comp {
            v[c] += 1;
        }
        for &(a, _) in self.graph.edges() {
            e[comp[a]] += 1;
        }
        for face in &self.faces {
            f[comp[self.origin(face.boundary[0])]] += 1;
        }
        for c in 0..count {
            if e[c] > 0 && v[c] - e[c] + f[c] != 2 {
                return Err(Error::Genus {
                    vertices: v[c] as usize,
                    edges: e[c] as usize,
                    faces: f[c] as usize,
                });
            }
        }
        Ok(())
    }

    pub fn graph(&self) -> &AbstractGraph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn dart_count(&self) -> usize {
        2 * self.graph.edge_count()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn dart(&self, d: DartId) -> Dart {
        Dart {
            id: d,
            edge: d / 2,
            origin: self.origin(d),
            twin: d ^ 1,
        }
    }

    pub fn origin(&self, d: DartId) -> usize {
        let (a, b) = self.graph.edge(d / 2);
        if d.is_multiple_of(2) {
            a
        } else {
            b
        }
    }

    pub fn head(&self, d: DartId) -> usize {
        self.origin(d ^ 1)
    }

    pub fn twin(d: DartId) -> DartId {
        d ^ 1
    }

    pub fn rotation(&self, v: usize) -> &[DartId] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<DartId>] {
        &self.rotation
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    pub fn rot_next(&self, d: DartId) -> DartId {
        let rot = &self.rotation[self.origin(d)];
        rot[(self.position[d] + 1) % rot.len()]
    }

    pub fn rot_prev(&self, d: DartId) -> DartId {
        let rot = &self.rotation[self.origin(d)];
        rot[(self.position[d] + rot.len() - 1) % rot.len()]
    }

    /// Next dart along the boundary of the face containing `d`.
    pub fn face_next(&self, d: DartId) -> DartId {
        self.rot_next(d ^ 1)
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, f: usize) -> &Face {
        &self.faces[f]
    }

    pub fn face_of(&self, d: DartId) -> usize {
        self.face_of[d]
    }

    /// Face containing the corner between `d` and `rot_next(d)`.
    pub fn corner_face(&self, d: DartId) -> usize {
        self.face_of[self.rot_next(d)]
    }

    pub fn is_connected(&self) -> bool {
        self.graph.is_connected()
    }

    pub fn is_simple(&self) -> bool {
        self.graph.is_simple()
    }

    /// Euler characteristic `V - E + F` where `F` counts sphere faces
    /// (traced faces of all components share one outer region).
    pub fn euler_characteristic(&self) -> i64 {
        let (comp, count) = self.graph.components();
        let mut has_edge = vec![false; count];
        for &(a, _) in self.graph.edges() {
            has_edge[comp[a]] = true;
        }
        let traced = self.faces.len() as i64;
        let edgeless = has_edge.iter().filter(|&&h| !h).count() as i64;
        // Every component contributes its traced faces (an isolated vertex one
        // virtual face); all but one of those outer regions coincide.
        let sphere_faces = traced + edgeless - (count as i64 - 1).max(0);
        self.vertex_count() as i64 - self.edge_count() as i64 + sphere_faces
    }

    /// Dart of edge `e` leaving `v`, if `v` is an endpoint.
    pub fn dart_of_edge_at(&self, e: usize, v: usize) -> Option<DartId> {
        [2 * e, 2 * e + 1]
            .into_iter()
            .find(|&d| self.origin(d) == v)
    }

    /// Restriction to the connected component of `v`; returns the submap and
    /// the original id of each submap vertex.
    pub fn component_of(&self, v: usize) -> (PlaneMap, Vec<usize>) {
        let (comp, _) = self.graph.components();
        let target = comp[v];
        let verts: Vec<usize> = (0..self.vertex_count())
            .filter(|&w| comp[w] == target)
            .collect();
        let mut new_id = vec![usize::MAX; self.vertex_count()];
        for (i, &w) in verts.iter().enumerate() {
            new_id[w] = i;
        }
        let kept: Vec<usize> = (0..self.edge_count())
            .filter(|&e| comp[self.graph.edge(e).0] == target)
            .collect();
        let mut new_edge = vec![usize::MAX; self.edge_count()];
        for (i, &e) in kept.iter().enumerate() {
            new_edge[e] = i;
        }
        let edges = kept
            .iter()
            .map(|&e| {
                let (a, b) = self.graph.edge(e);
                (new_id[a], new_id[b])
            })
            .collect();
        let rotations = verts
            .iter()
            .map(|&w| {
                self.rotation[w]
                    .iter()
                    .map(|&d| 2 * new_edge[d / 2] + d % 2)
                    .collect()
            })
            .collect();
        let g = AbstractGraph::new(verts.len(), edges).expect("component of a valid map");
        (
            PlaneMap::new(g, rotations).expect("component of a valid map"),
            verts,
        )
    }

    /// Adds an edge from the corner after `c1` to the corner after `c2`;
    /// both corners must lie in the same face. The new edge is the last one.
    pub fn with_chord(&self, c1: DartId, c2: DartId) -> Result<PlaneMap> {
        let mut b = MapBuilder::from_map(self);
        let e = b.push_edge(self.origin(c1), self.origin(c2));
        b.insert_after(c1, 2 * e);
        b.insert_after(c2, 2 * e + 1);
        Ok(b.build()?.0)
    }

    /// Removes edge `e`; later edges shift down by one.
    pub fn without_edge(&self, e: usize) -> PlaneMap {
        let mut b = MapBuilder::from_map(self);
        b.remove_edge(e);
        b.build()
            .expect("deleting an edge keeps the map spherical")
            .0
    }

    /// Mirror image: every rotation reversed.
    pub fn mirrored(&self) -> PlaneMap {
        let rotations = self
            .rotation
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r.reverse();
                r
            })
            .collect();
        PlaneMap::new(self.graph.clone(), rotations).expect("mirror of a valid map")
    }
}

fn canonical_cycle(mut rot: Vec<DartId>) -> Vec<DartId> {
    if let Some(i) = rot
        .iter()
        .enumerate()
        .min_by_key(|&(_, &d)| d)
        .map(|(i, _)| i)
    {
        rot.rotate_left(i);
    }
    rot
}

/// Dual map: one vertex per face, one edge per primal edge, dart `d` of the
/// dual leaves the face containing primal dart `d`.
pub fn dual(map: &PlaneMap) -> Result<PlaneMap> {
    if map.edge_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !map.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut edges = Vec::with_capacity(map.edge_count());
    for e in 0..map.edge_count() {
        let (f, g) = (map.face_of(2 * e), map.face_of(2 * e + 1));
        if f == g {
            return Err(Error::LoopInDual { edge: e });
        }
        edges.push((f, g));
    }
    let graph = AbstractGraph::new(map.face_count(), edges)?;
    let rotations = map.faces().iter().map(|f| f.boundary.clone()).collect();
    PlaneMap::new(graph, rotations)
}

/// Radial map: bipartite on primal vertices `0..n` and face vertices
/// `n..n + F`, one edge per corner (two at degree-one incidences).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadialMap {
    pub map: PlaneMap,
    pub primal_vertices: usize,
    /// Radial edges of the corner following each primal dart in its rotation.
    pub corner_edges: Vec<Vec<usize>>,
}

impl RadialMap {
    pub fn is_face_vertex(&self, v: usize) -> bool {
        v >= self.primal_vertices
    }

    pub fn face_vertex(&self, face: usize) -> usize {
        self.primal_vertices + face
    }
}

pub fn radial(map: &PlaneMap) -> Result<RadialMap> {
    if map.edge_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !map.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = map.vertex_count();
    let mut edges = Vec::new();
    let mut corner_edges = vec![Vec::new(); map.dart_count()];
    for d in 0..map.dart_count() {
        let v = map.origin(d);
        let f = map.corner_face(d);
        let multiplicity = if map.degree(v) >= 2 && map.face(f).len() >= 2 {
            1
        } else {
            2
        };
        for _ in 0..multiplicity {
            corner_edges[d].push(edges.len());
            edges.push((v, n + f));
        }
    }
    let mut rotations: Vec<Vec<DartId>> = Vec::with_capacity(n + map.face_count());
    for v in 0..n {
        rotations.push(
            map.rotation(v)
                .iter()
                .flat_map(|&d| corner_edges[d].iter().map(|&k| 2 * k))
                .collect(),
        );
    }
    for face in map.faces() {
        let mut rot: Vec<DartId> = face
            .boundary
            .iter()
            .flat_map(|&d| corner_edges[d ^ 1].iter().map(|&k| 2 * k + 1))
            .collect();
        rot.reverse();
        rotations.push(rot);
    }
    let graph = AbstractGraph::new(n + map.face_count(), edges)?;
    let radial = PlaneMap::new(graph, rotations)?;
    Ok(RadialMap {
        map: radial,
        primal_vertices: n,
        corner_edges,
    })
}

/// Medial map `dual(radial(map))` together with its correspondence to the primal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MedialMap {
    pub map: PlaneMap,
    /// Medial face of each primal vertex.
    pub vertex_face: Vec<usize>,
    /// Medial vertex of each primal edge.
    pub edge_vertex: Vec<usize>,
}

pub fn medial(map: &PlaneMap) -> Result<MedialMap> {
    let r = radial(map)?;
    let m = dual(&r.map)?;
    let mut vertex_face = vec![usize::MAX; map.vertex_count()];
    for v in 0..map.vertex_count() {
        if let Some(&d) = r.map.rotation(v).first() {
            vertex_face[v] = m.face_of(d);
        }
    }
    let edge_vertex = (0..map.edge_count())
        .map(|e| r.map.face_of(2 * r.corner_edges[2 * e][0]))
        .collect();
    Ok(MedialMap {
        map: m,
        vertex_face,
        edge_vertex,
    })
}

/// Combinatorial map isomorphism, optionally allowing a global reflection.
///
/// Isolated vertices are matched by count only.
pub fn maps_isomorphic(a: &PlaneMap, b: &PlaneMap, allow_mirror: bool) -> bool {
    if a.vertex_count() != b.vertex_count()
        || a.edge_count() != b.edge_count()
        || a.face_count() != b.face_count()
    {
        return false;
    }
    if allow_mirror && maps_isomorphic(a, &b.mirrored(), false) {
        return true;
    }
    let (comp_a, count_a) = a.graph().components();
    let (_, count_b) = b.graph().components();
    if count_a != count_b {
        return false;
    }
    // Match components greedily by trying every dart of b as image of a
    // component's root dart; small maps only.
    let mut used_b = vec![false; b.dart_count()];
    for c in 0..count_a {
        let Some(root) = (0..a.dart_count()).find(|&d| comp_a[a.origin(d)] == c) else {
            continue;
        };
        let mut matched = false;
        for cand in 0..b.dart_count() {
            if used_b[cand] {
                continue;
            }
            if let Some(image) = extend_dart_map(a, b, root, cand) {
                if image.iter().all(|&(_, y)| !used_b[y]) {
                    for &(_, y) in &image {
                        used_b[y] = true;
                    }
                    matched = true;
                    break;
                }
            }
        }
        if !matched {
            return false;
        }
    }
    true
}

fn extend_dart_map(
    a: &PlaneMap,
    b: &PlaneMap,
    root: DartId,
    image: DartId,
) -> Option<Vec<(DartId, DartId)>> {
    let mut map = vec![usize::MAX; a.dart_count()];
    let mut inverse = vec![usize::MAX; b.dart_count()];
    let mut queue = VecDeque::from([(root, image)]);
    let mut pairs = Vec::new();
    while let Some((x, y)) = queue.pop_front() {
        if map[x] != usize::MAX {
            if map[x] != y {
                return None;
            }
            continue;
        }
        if inverse[y] != usize::MAX {
            return None;
        }
        map[x] = y;
        inverse[y] = x;
        pairs.push((x, y));
        queue.push_back((x ^ 1, y ^ 1));
        queue.push_back((a.rot_next(x), b.rot_next(y)));
    }
    Some(pairs)
}

/// Mutable rotation-system editor used by the constructions.
///
/// Removed edges leave holes that `build` compacts away, keeping the order of
/// surviving edges.
#[derive(Clone, Debug, Default)]
pub(crate) struct MapBuilder {
    pub(crate) edges: Vec<Option<(usize, usize)>>,
    pub(crate) rotation: Vec<Vec<DartId>>,
}

impl MapBuilder {
    pub(crate) fn from_map(map: &PlaneMap) -> Self {
        MapBuilder {
            edges: map.graph().edges().iter().map(|&e| Some(e)).collect(),
            rotation: map.rotations().to_vec(),
        }
    }

    pub(crate) fn with_vertices(n: usize) -> Self {
        MapBuilder {
            edges: Vec::new(),
            rotation: vec![Vec::new(); n],
        }
    }

    pub(crate) fn add_vertex(&mut self) -> usize {
        self.rotation.push(Vec::new());
        self.rotation.len() - 1
    }

    pub(crate) fn origin(&self, d: DartId) -> usize {
        let (a, b) = self.edges[d / 2].expect("live edge");
        if d.is_multiple_of(2) {
            a
        } else {
            b
        }
    }

    /// New edge without touching rotations; callers place its darts.
    pub(crate) fn push_edge(&mut self, u: usize, v: usize) -> usize {
        self.edges.push(Some((u, v)));
        self.edges.len() - 1
    }

    pub(crate) fn insert_after(&mut self, anchor: DartId, d: DartId) {
        let v = self.origin(anchor);
        let i = self.rotation[v]
            .iter()
            .position(|&x| x == anchor)
            .expect("anchor in rotation");
        self.rotation[v].insert(i + 1, d);
    }

    pub(crate) fn replace_dart(&mut self, old: DartId, new: &[DartId]) {
        let v = self.origin(old);
        let i = self.rotation[v]
            .iter()
            .position(|&x| x == old)
            .expect("dart in rotation");
        self.rotation[v].splice(i..i + 1, new.iter().copied());
    }

    pub(crate) fn remove_edge(&mut self, e: usize) {
        let (a, b) = self.edges[e].expect("live edge");
        self.rotation[a].retain(|&d| d != 2 * e);
        self.rotation[b].retain(|&d| d != 2 * e + 1);
        self.edges[e] = None;
    }

    /// Splits edge `e = (u, v)` at a new vertex `w`; `e` becomes `(u, w)` and
    /// the returned edge is `(w, v)`.
    pub(crate) fn subdivide(&mut self, e: usize) -> (usize, usize) {
        let (u, v) = self.edges[e].expect("live edge");
        let w = self.add_vertex();
        self.edges[e] = Some((u, w));
        let f = self.push_edge(w, v);
        // Dart 2e+1 used to leave v; now v holds dart 2f+1 in its place.
        let i = self.rotation[v]
            .iter()
            .position(|&x| x == 2 * e + 1)
            .expect("dart in rotation");
        self.rotation[v][i] = 2 * f + 1;
        self.rotation[w] = vec![2 * e + 1, 2 * f];
        (w, f)
    }

    /// Compacts and validates; returns the map and new index of each old edge.
    pub(crate) fn build(self) -> Result<(PlaneMap, Vec<Option<usize>>)> {
        let keep = vec![true; self.rotation.len()];
        self.build_keeping(&keep).map(|(m, e, _)| (m, e))
    }

    /// Like [`MapBuilder::build`] but drops the (already isolated) vertices
    /// with `keep[v] == false`; also returns the new index of each vertex.
    pub(crate) fn build_keeping(
        self,
        keep: &[bool],
    ) -> Result<(PlaneMap, Vec<Option<usize>>, Vec<Option<usize>>)> {
        let mut new_vertex = vec![None; self.rotation.len()];
        let mut count = 0;
        for (v, &k) in keep.iter().enumerate() {
            if k {
                new_vertex[v] = Some(count);
                count += 1;
            }
        }
        let mut new_edge = vec![None; self.edges.len()];
        let mut edges = Vec::new();
        for (e, slot) in self.edges.iter().enumerate() {
            if let Some((a, b)) = *slot {
                let (Some(a), Some(b)) = (new_vertex[a], new_vertex[b]) else {
                    return Err(Error::MalformedRotation {
                        vertex: a,
                        reason: format!("edge {e} touches a dropped vertex"),
                    });
                };
                new_edge[e] = Some(edges.len());
                edges.push((a, b));
            }
        }
        let rotations = self
            .rotation
            .iter()
            .enumerate()
            .filter(|&(v, _)| keep[v])
            .map(|(_, r)| {
                r.iter()
                    .map(|&d| 2 * new_edge[d / 2].expect("live dart") + d % 2)
                    .collect()
            })
            .collect();
        let graph = AbstractGraph::new(count, edges)?;
        Ok((PlaneMap::new(graph, rotations)?, new_edge, new_vertex))
    }
}
