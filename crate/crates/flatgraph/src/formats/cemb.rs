//! `.cemb`: a planarization in `.rot` form, then one `X c: a b c d` line per
//! crossing vertex (the opposite dart pairs `a b` and `c d`), then one
//! `TRAIL e: d1 d2 ...` line per original edge. Crossing vertices are the
//! last ones of the planarization.

use std::fmt::Write;

use flatgraph_core::crossings::CrossedEmbedding;

use super::rot::{read_rot, write_rot_into};
use super::{join, labelled, numbers, Lines};
use crate::error::{ParseError, ParseResult};

pub fn parse_cemb(text: &str) -> ParseResult<CrossedEmbedding> {
    let mut lines = Lines::new(text);
    let map = read_rot(&mut lines)?;
    let mut declared = Vec::new();
    let mut trails = Vec::new();
    for (n, l) in lines {
        if l.starts_with('X') {
            if !trails.is_empty() {
                return Err(ParseError::at(n, "`X` lines must precede the trails"));
            }
            let (c, body) = labelled(n, l, "X")?;
            let darts: Vec<usize> = numbers(n, body)?;
            let [a, b, c2, d] = darts[..] else {
                return Err(ParseError::at(n, "a crossing lists two dart pairs"));
            };
            declared.push((n, c, [(a, b), (c2, d)]));
        } else {
            let (e, body) = labelled(n, l, "TRAIL")?;
            if e != trails.len() {
                return Err(ParseError::at(n, format!("expected trail {}", trails.len())));
            }
            trails.push(numbers(n, body)?);
        }
    }
    let total = map.vertex_count();
    let original = total
        .checked_sub(declared.len())
        .ok_or_else(|| ParseError::Truncated("more crossings than vertices".into()))?;
    let embedding = CrossedEmbedding::new(map, original, trails)?;
    for (i, (n, c, pairs)) in declared.into_iter().enumerate() {
        if c != original + i {
            return Err(ParseError::at(n, format!("expected crossing vertex {}", original + i)));
        }
        let actual = embedding.crossings()[i].pairs;
        if normalize(pairs) != normalize(actual) {
            return Err(ParseError::at(
                n,
                format!("dart pairs do not match the rotation at vertex {c}"),
            ));
        }
    }
    Ok(embedding)
}

fn normalize(pairs: [(usize, usize); 2]) -> [(usize, usize); 2] {
    let mut p = pairs.map(|(a, b)| (a.min(b), a.max(b)));
    p.sort();
    p
}

pub fn write_cemb(embedding: &CrossedEmbedding) -> String {
    let mut out = String::new();
    write_rot_into(&mut out, embedding.planarization());
    for x in embedding.crossings() {
        let [(a, b), (c, d)] = x.pairs;
        writeln!(out, "X {}: {a} {b} {c} {d}", x.vertex).unwrap();
    }
    for (e, trail) in embedding.trails().iter().enumerate() {
        writeln!(out, "TRAIL {e}: {}", join(trail)).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use flatgraph_core::crossings::planarize_drawing;
    use flatgraph_core::fixtures;

    #[test]
    fn k5_with_one_crossing() {
        let ce = planarize_drawing(&fixtures::k5_one_crossing_drawing())
            .unwrap()
            .embedding;
        let text = write_cemb(&ce);
        assert_eq!(text.lines().filter(|l| l.starts_with("X ")).count(), 1);
        assert_eq!(parse_cemb(&text).unwrap(), ce);
    }

    #[test]
    fn plane_map_has_no_crossing_lines() {
        let ce = CrossedEmbedding::from_plane_map(fixtures::cycle_map(4));
        let text = write_cemb(&ce);
        assert!(!text.contains("X "));
        assert_eq!(parse_cemb(&text).unwrap(), ce);
    }

    #[test]
    fn wrong_pairing_is_rejected() {
        let ce = planarize_drawing(&fixtures::k5_one_crossing_drawing())
            .unwrap()
            .embedding;
        let x = &ce.crossings()[0];
        let [(a, b), (c, d)] = x.pairs;
        let good = format!("X {}: {a} {b} {c} {d}", x.vertex);
        let bad = format!("X {}: {a} {c} {b} {d}", x.vertex);
        let text = write_cemb(&ce).replace(&good, &bad);
        assert!(parse_cemb(&text).is_err());
    }
}
