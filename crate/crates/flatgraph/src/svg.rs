//! Deterministic SVG output for maps, drawings and flat witnesses.
//!
//! Maps are laid out by the barycentric method on their triangulation, so
//! every edge is straight (or bent once, for parallel edges). Highlighted
//! wbw-walks are bold, power edges are dotted and crossings are marked.

use std::fmt::Write;

use flatgraph_core::constructions::layout::tutte_layout;
use flatgraph_core::constructions::triangulate;
use flatgraph_core::crossings::{planarize_drawing, Drawing};
use flatgraph_core::equivalence::subdivide_all;
use flatgraph_core::geometry::Point;
use flatgraph_core::wbw::{lambda_power, EdgeWitness, FlatWitness};
use flatgraph_core::{AbstractGraph, PlaneMap, Result};

type P = (f64, f64);

/// Vertex positions and one polyline per edge.
#[derive(Clone, Debug, PartialEq)]
pub struct MapLayout {
    pub points: Vec<P>,
    pub edges: Vec<Vec<P>>,
}

const GAP: f64 = 0.25;

/// Straight-line layout, component by component from left to right.
pub fn map_layout(map: &PlaneMap) -> Result<MapLayout> {
    let n = map.vertex_count();
    let (comp, count) = map.graph().components();
    let mut points = vec![(0.0, 0.0); n];
    let mut edges = vec![Vec::new(); map.edge_count()];
    let mut seen = vec![false; count];
    let mut slot = 0.0;
    for v in 0..n {
        if std::mem::replace(&mut seen[comp[v]], true) {
            continue;
        }
        let (sub, verts) = map.component_of(v);
        let kept: Vec<usize> = (0..map.edge_count())
            .filter(|&e| comp[map.graph().edge(e).0] == comp[v])
            .collect();
        let local = component_layout(&sub)?;
        for (i, &w) in verts.iter().enumerate() {
            points[w] = (local.points[i].0 + slot, local.points[i].1);
        }
        for (i, &e) in kept.iter().enumerate() {
            edges[e] = local.edges[i].iter().map(|&(x, y)| (x + slot, y)).collect();
        }
        slot += 1.0 + GAP;
    }
    Ok(MapLayout { points, edges })
}

fn component_layout(map: &PlaneMap) -> Result<MapLayout> {
    let n = map.vertex_count();
    if n == 1 {
        return Ok(MapLayout {
            points: vec![(0.5, 0.5)],
            edges: Vec::new(),
        });
    }
    let simple = map.is_simple();
    let base = if simple { map.clone() } else { subdivide_all(map) };
    let rec = triangulate(&base)?;
    let layout = tutte_layout(&rec.triangulation, 0)?;
    let at = |v: usize| layout.points[v].to_f64();
    let points = (0..n).map(at).collect();
    let edges = map
        .graph()
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| {
            if simple {
                vec![at(u), at(v)]
            } else {
                vec![at(u), at(n + e), at(v)]
            }
        })
        .collect();
    Ok(MapLayout { points, edges })
}

#[derive(Clone, Debug, Default)]
pub struct MapStyle {
    /// Edges drawn bold, e.g. a wbw certificate.
    pub highlight: Vec<usize>,
    /// Also draw the edges of this power of the map, dotted.
    pub power: Option<usize>,
}

pub fn render_map(map: &PlaneMap, style: &MapStyle) -> Result<String> {
    let layout = map_layout(map)?;
    let mut svg = Canvas::new(&layout.points, layout.edges.iter().flatten());
    if let Some(lambda) = style.power {
        let power = lambda_power(map, lambda)?;
        for &(u, v) in power.edges() {
            if !map.graph().has_edge(u, v) {
                svg.line(&[layout.points[u], layout.points[v]], "power");
            }
        }
    }
    for (e, line) in layout.edges.iter().enumerate() {
        let class = if style.highlight.contains(&e) { "bold" } else { "edge" };
        svg.line(line, class);
    }
    for &p in &layout.points {
        svg.vertex(p, "vertex");
    }
    Ok(svg.finish())
}

fn to_f64(points: &[Point]) -> Vec<P> {
    points.iter().map(Point::to_f64).collect()
}

/// A polyline drawing; crossing points are marked when the drawing can be
/// planarized.
pub fn render_drawing(drawing: &Drawing) -> String {
    let points = to_f64(&drawing.vertices);
    let lines: Vec<Vec<P>> = drawing.polylines.iter().map(|l| to_f64(l)).collect();
    let mut svg = Canvas::new(&points, lines.iter().flatten());
    for line in &lines {
        svg.line(line, "edge");
    }
    if let Ok(p) = planarize_drawing(drawing) {
        for c in &p.crossing_points {
            svg.cross(c.to_f64());
        }
    }
    for &p in &points {
        svg.vertex(p, "vertex");
    }
    svg.finish()
}

/// The host with the images of `τ` filled, and each guest edge that is not
/// a host edge drawn dotted between its images over its bold walk.
pub fn render_witness(g: &AbstractGraph, w: &FlatWitness) -> Result<String> {
    let layout = map_layout(&w.host)?;
    let mut bold = vec![false; w.host.edge_count()];
    for cert in &w.certificates {
        if let EdgeWitness::Walk(walk) = cert {
            for &e in walk {
                if e < bold.len() {
                    bold[e] = true;
                }
            }
        }
    }
    let mut svg = Canvas::new(&layout.points, layout.edges.iter().flatten());
    for (e, line) in layout.edges.iter().enumerate() {
        svg.line(line, if bold[e] { "bold" } else { "edge" });
    }
    for (&(u, v), cert) in g.edges().iter().zip(&w.certificates) {
        if matches!(cert, EdgeWitness::Walk(_)) {
            svg.line(&[layout.points[w.tau[u]], layout.points[w.tau[v]]], "power");
        }
    }
    let mut image = vec![false; w.host.vertex_count()];
    for &t in &w.tau {
        image[t] = true;
    }
    for (v, &p) in layout.points.iter().enumerate() {
        svg.vertex(p, if image[v] { "vertex" } else { "hollow" });
    }
    Ok(svg.finish())
}

const SIZE: f64 = 480.0;
const MARGIN: f64 = 16.0;

const STYLE: &str = "\
.edge{stroke:#333;stroke-width:1.5;fill:none}\
.bold{stroke:#000;stroke-width:4;fill:none}\
.power{stroke:#1f5fbf;stroke-width:1.5;stroke-dasharray:2 4;fill:none}\
.cross{stroke:#c0392b;stroke-width:2}\
.vertex{fill:#000}\
.hollow{fill:#fff;stroke:#000;stroke-width:1.5}";

struct Canvas {
    body: String,
    min: P,
    scale: f64,
    height: f64,
    width: f64,
}

impl Canvas {
    fn new<'a>(points: &'a [P], extra: impl Iterator<Item = &'a P>) -> Self {
        let mut lo = (f64::INFINITY, f64::INFINITY);
        let mut hi = (f64::NEG_INFINITY, f64::NEG_INFINITY);
        for &(x, y) in points.iter().chain(extra) {
            lo = (lo.0.min(x), lo.1.min(y));
            hi = (hi.0.max(x), hi.1.max(y));
        }
        if lo.0 > hi.0 {
            lo = (0.0, 0.0);
            hi = (1.0, 1.0);
        }
        let span = (hi.0 - lo.0).max(hi.1 - lo.1).max(1e-9);
        let scale = SIZE / span;
        Canvas {
            body: String::new(),
            min: (lo.0, hi.1),
            scale,
            width: (hi.0 - lo.0) * scale + 2.0 * MARGIN,
            height: (hi.1 - lo.1) * scale + 2.0 * MARGIN,
        }
    }

    fn map(&self, (x, y): P) -> P {
        (
            MARGIN + (x - self.min.0) * self.scale,
            MARGIN + (self.min.1 - y) * self.scale,
        )
    }

    fn line(&mut self, points: &[P], class: &str) {
        let coords: Vec<String> = points
            .iter()
            .map(|&p| {
                let (x, y) = self.map(p);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        writeln!(
            self.body,
            "<polyline class=\"{class}\" points=\"{}\"/>",
            coords.join(" ")
        )
        .unwrap();
    }

    fn vertex(&mut self, p: P, class: &str) {
        let (x, y) = self.map(p);
        writeln!(self.body, "<circle class=\"{class}\" cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"4\"/>").unwrap();
    }

    fn cross(&mut self, p: P) {
        let (x, y) = self.map(p);
        let r = 4.0;
        writeln!(
            self.body,
            "<path class=\"cross\" d=\"M{:.2},{:.2}L{:.2},{:.2}M{:.2},{:.2}L{:.2},{:.2}\"/>",
            x - r,
            y - r,
            x + r,
            y + r,
            x - r,
            y + r,
            x + r,
            y - r
        )
        .unwrap();
    }

    fn finish(self) -> String {
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.0}\" height=\"{h:.0}\" viewBox=\"0 0 {w:.2} {h:.2}\">\n<style>{STYLE}</style>\n{}</svg>\n",
            self.body,
            w = self.width.ceil(),
            h = self.height.ceil(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use flatgraph_core::fixtures;
    use flatgraph_core::generate::disjoint_union;
    use flatgraph_core::wbw::wbw_distance;

    fn count(svg: &str, needle: &str) -> usize {
        svg.matches(needle).count()
    }

    #[test]
    fn triangle_has_three_nodes_and_edges() {
        let svg = render_map(&fixtures::cycle_map(3), &MapStyle::default()).unwrap();
        assert_eq!(count(&svg, "<circle"), 3);
        assert_eq!(count(&svg, "class=\"edge\""), 3);
        assert_eq!(render_map(&fixtures::cycle_map(3), &MapStyle::default()).unwrap(), svg);
    }

    #[test]
    fn square_adds_dotted_edges_for_wbw_two_pairs() {
        let map = fixtures::grid_map(3, 3);
        let svg = render_map(
            &map,
            &MapStyle {
                power: Some(2),
                ..MapStyle::default()
            },
        )
        .unwrap();
        let extra = lambda_power(&map, 2).unwrap().edge_count() - map.edge_count();
        assert!(extra > 0);
        assert_eq!(count(&svg, "class=\"power\""), extra);
    }

    #[test]
    fn highlighted_walk_is_bold() {
        let map = fixtures::star_map(6);
        let cert = wbw_distance(&map, 1, 4).unwrap().unwrap();
        let svg = render_map(
            &map,
            &MapStyle {
                highlight: cert.edges.clone(),
                ..MapStyle::default()
            },
        )
        .unwrap();
        assert_eq!(count(&svg, "class=\"bold\""), cert.len());
    }

    #[test]
    fn awkward_maps_lay_out() {
        let loose = disjoint_union(&fixtures::single_vertex(), &fixtures::path_map(2));
        let digon = crate::formats::parse_rot("2 2\n0 1\n0 1\n0 2\n3 1\n").unwrap();
        for map in [fixtures::single_vertex(), fixtures::path_map(2), loose, digon] {
            render_map(&map, &MapStyle::default()).unwrap();
        }
    }

    #[test]
    fn crossings_are_marked() {
        let svg = render_drawing(&fixtures::convex_complete_drawing(5));
        assert_eq!(count(&svg, "class=\"cross\""), 5);
    }
}
