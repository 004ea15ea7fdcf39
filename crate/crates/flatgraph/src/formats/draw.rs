//! `.draw`: `V x y` lines give vertex `0, 1, ...` its position, then
//! `P e: x1 y1 x2 y2 ...` lines give edge `e` as a polyline from one vertex
//! to another. The first and last points must be vertex positions; they
//! name the endpoints. Coordinates are exact rationals `p/q`.

use std::collections::BTreeMap;
use std::fmt::Write;

use flatgraph_core::crossings::Drawing;
use flatgraph_core::geometry::{Point, Q};

use super::{labelled, Lines};
use crate::error::{ParseError, ParseResult};

fn rational(line: usize, token: &str) -> ParseResult<Q> {
    token
        .parse::<Q>()
        .map_err(|_| ParseError::at(line, format!("`{token}` is not a rational")))
}

pub fn parse_draw(text: &str) -> ParseResult<Drawing> {
    let mut vertices = Vec::new();
    let mut at: BTreeMap<Point, usize> = BTreeMap::new();
    let mut edges = Vec::new();
    let mut polylines = Vec::new();
    for (n, l) in Lines::new(text) {
        if let Some(rest) = l.strip_prefix("V ") {
            if !polylines.is_empty() {
                return Err(ParseError::at(n, "`V` lines must precede the polylines"));
            }
            let t: Vec<&str> = rest.split_whitespace().collect();
            let [x, y] = t[..] else {
                return Err(ParseError::at(n, "vertex lines are `V x y`"));
            };
            let p = Point::new(rational(n, x)?, rational(n, y)?);
            if at.insert(p.clone(), vertices.len()).is_some() {
                return Err(ParseError::at(n, "two vertices share a position"));
            }
            vertices.push(p);
            continue;
        }
        let (e, body) = labelled(n, l, "P")?;
        if e != polylines.len() {
            return Err(ParseError::at(n, format!("expected polyline {}", polylines.len())));
        }
        let coords = body
            .split_whitespace()
            .map(|t| rational(n, t))
            .collect::<ParseResult<Vec<Q>>>()?;
        if coords.len() < 4 || coords.len() % 2 != 0 {
            return Err(ParseError::at(n, "a polyline needs at least two points"));
        }
        let points: Vec<Point> = coords
            .chunks(2)
            .map(|c| Point::new(c[0].clone(), c[1].clone()))
            .collect();
        let end = |p: &Point| {
            at.get(p)
                .copied()
                .ok_or_else(|| ParseError::at(n, "polyline does not end at a vertex"))
        };
        edges.push((end(&points[0])?, end(points.last().unwrap())?));
        polylines.push(points);
    }
    Ok(Drawing {
        vertices,
        edges,
        polylines,
    })
}

fn q(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn write_draw(drawing: &Drawing) -> String {
    let mut out = String::new();
    for p in &drawing.vertices {
        writeln!(out, "V {} {}", q(&p.x), q(&p.y)).unwrap();
    }
    for (e, line) in drawing.polylines.iter().enumerate() {
        let coords: Vec<String> = line.iter().flat_map(|p| [q(&p.x), q(&p.y)]).collect();
        writeln!(out, "P {e}: {}", coords.join(" ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use flatgraph_core::fixtures;

    #[test]
    fn convex_k5() {
        let d = fixtures::convex_complete_drawing(5);
        let text = write_draw(&d);
        assert!(text.lines().next().unwrap().contains('/'));
        assert_eq!(parse_draw(&text).unwrap(), d);
    }

    #[test]
    fn integers_and_bends() {
        let text = "V 0 0\nV 1 0\nP 0: 0 0 1/2 1/3 1 0\n";
        let d = parse_draw(text).unwrap();
        assert_eq!(d.edges, vec![(0, 1)]);
        assert_eq!(d.polylines[0].len(), 3);
    }

    #[test]
    fn dangling_polyline() {
        assert!(parse_draw("V 0 0\nV 1 0\nP 0: 0 0 2 0\n").is_err());
        assert!(parse_draw("V 0 0\nV 0 0\n").is_err());
        assert!(parse_draw("V 0 0\nV 1 0\nP 1: 0 0 1 0\n").is_err());
    }
}
