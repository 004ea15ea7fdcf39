//! `.rot`: a header `V E`, then `E` lines `u v` (edge `k` owns darts `2k`
//! leaving `u` and `2k+1` leaving `v`), then `V` lines listing the darts
//! around each vertex counter-clockwise. An isolated vertex is written `-`.

use std::fmt::Write;

use flatgraph_core::{AbstractGraph, PlaneMap};

use super::{join, numbers, Lines};
use crate::error::{ParseError, ParseResult};

pub fn parse_rot(text: &str) -> ParseResult<PlaneMap> {
    let mut lines = Lines::new(text);
    let map = read_rot(&mut lines)?;
    lines.finish()?;
    Ok(map)
}

pub(crate) fn read_rot(lines: &mut Lines<'_>) -> ParseResult<PlaneMap> {
    let (n, header) = lines.expect("header `V E`")?;
    let head: Vec<usize> = numbers(n, header)?;
    let [v, e] = head[..] else {
        return Err(ParseError::at(n, "header must be `V E`"));
    };
    let mut edges = Vec::with_capacity(e);
    for _ in 0..e {
        let (n, l) = lines.expect("an edge line")?;
        let ends: Vec<usize> = numbers(n, l)?;
        let [a, b] = ends[..] else {
            return Err(ParseError::at(n, "edge lines are `u v`"));
        };
        edges.push((a, b));
    }
    let mut rotations = Vec::with_capacity(v);
    for _ in 0..v {
        let (n, l) = lines.expect("a rotation line")?;
        rotations.push(if l == "-" { Vec::new() } else { numbers(n, l)? });
    }
    let graph = AbstractGraph::new(v, edges)?;
    Ok(PlaneMap::new(graph, rotations)?)
}

pub fn write_rot(map: &PlaneMap) -> String {
    let mut out = String::new();
    write_rot_into(&mut out, map);
    out
}

pub(crate) fn write_rot_into(out: &mut String, map: &PlaneMap) {
    writeln!(out, "{} {}", map.vertex_count(), map.edge_count()).unwrap();
    for &(u, v) in map.graph().edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    for v in 0..map.vertex_count() {
        let rot = map.rotation(v);
        if rot.is_empty() {
            out.push_str("-\n");
        } else {
            writeln!(out, "{}", join(rot)).unwrap();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use flatgraph_core::fixtures;

    #[test]
    fn triangle_text() {
        let text = write_rot(&fixtures::cycle_map(3));
        assert!(text.starts_with("3 3\n"));
        assert_eq!(parse_rot(&text).unwrap(), fixtures::cycle_map(3));
    }

    #[test]
    fn comments_and_isolated_vertices() {
        let text = "# two vertices, one edge, one loner\n3 1\n0 1\n\n0\n1 # back\n-\n";
        let map = parse_rot(text).unwrap();
        assert_eq!(map.vertex_count(), 3);
        assert_eq!(map.degree(2), 0);
    }

    #[test]
    fn errors_are_located() {
        match parse_rot("2 1\n0 x\n0\n1\n") {
            Err(ParseError::Syntax { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_rot("2 1\n0 1\n0\n"), Err(ParseError::Truncated(_))));
        assert!(matches!(
            parse_rot("3 3\n0 1\n1 2\n2 0\n0 9\n2 1\n3 4\n"),
            Err(ParseError::Invalid(_))
        ));
        assert!(parse_rot("1 0\n-\nextra\n").is_err());
    }
}
