//! `.flatw`: a host map in `.rot` form, then
//!
//! ```text
//! LAMBDA 2
//! TAU 0 1 2 3
//! EDGE 0 1 : HOST
//! EDGE 0 2 : 4 5
//! ```
//!
//! `TAU` lists the host vertex of every guest vertex; each `EDGE` line is a
//! guest edge with its host edge or wbw-walk. Without a `LAMBDA` line the
//! longest walk (at least 1) is used.

use std::fmt::Write;

use flatgraph_core::wbw::{EdgeWitness, FlatWitness};
use flatgraph_core::AbstractGraph;

use super::rot::{read_rot, write_rot_into};
use super::{join, number, numbers, Lines};
use crate::error::{ParseError, ParseResult};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatwFile {
    pub graph: AbstractGraph,
    pub witness: FlatWitness,
}

pub fn parse_flatw(text: &str) -> ParseResult<FlatwFile> {
    let mut lines = Lines::new(text);
    let host = read_rot(&mut lines)?;
    let mut lambda = None;
    if let Some((n, l)) = lines.peek() {
        if let Some(rest) = l.strip_prefix("LAMBDA") {
            lines.next();
            lambda = Some(number::<usize>(n, rest.trim())?);
        }
    }
    let (n, l) = lines.expect("a `TAU` line")?;
    let tau: Vec<usize> = match l.strip_prefix("TAU") {
        Some(rest) => numbers(n, rest)?,
        None => return Err(ParseError::at(n, "expected `TAU`")),
    };
    let mut edges = Vec::new();
    let mut certificates = Vec::new();
    for (n, l) in lines {
        let rest = l
            .strip_prefix("EDGE")
            .ok_or_else(|| ParseError::at(n, "expected `EDGE u v : ...`"))?;
        let (ends, cert) = rest
            .split_once(':')
            .ok_or_else(|| ParseError::at(n, "missing `:`"))?;
        let ends: Vec<usize> = numbers(n, ends)?;
        let [u, v] = ends[..] else {
            return Err(ParseError::at(n, "an edge has two endpoints"));
        };
        edges.push((u, v));
        let cert = cert.trim();
        certificates.push(if cert == "HOST" {
            EdgeWitness::Host
        } else {
            EdgeWitness::Walk(numbers(n, cert)?)
        });
    }
    let lambda = lambda.unwrap_or_else(|| {
        certificates
            .iter()
            .map(|c| match c {
                EdgeWitness::Host => 1,
                EdgeWitness::Walk(w) => w.len(),
            })
            .max()
            .unwrap_or(1)
            .max(1)
    });
    let graph = AbstractGraph::new(tau.len(), edges)?;
    Ok(FlatwFile {
        graph,
        witness: FlatWitness {
            host,
            tau,
            lambda,
            certificates,
        },
    })
}

pub fn write_flatw(graph: &AbstractGraph, witness: &FlatWitness) -> String {
    let mut out = String::new();
    write_rot_into(&mut out, &witness.host);
    writeln!(out, "LAMBDA {}", witness.lambda).unwrap();
    if witness.tau.is_empty() {
        out.push_str("TAU\n");
    } else {
        writeln!(out, "TAU {}", join(&witness.tau)).unwrap();
    }
    for (&(u, v), cert) in graph.edges().iter().zip(&witness.certificates) {
        match cert {
            EdgeWitness::Host => writeln!(out, "EDGE {u} {v} : HOST").unwrap(),
            EdgeWitness::Walk(w) => writeln!(out, "EDGE {u} {v} : {}", join(w)).unwrap(),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use flatgraph_core::fixtures;
    use flatgraph_core::wbw::{check_flat_witness, lambda_power, witness_from_distances};

    #[test]
    fn square_of_a_cycle() {
        let host = fixtures::cycle_map(5);
        let g = lambda_power(&host, 2).unwrap();
        let w = witness_from_distances(&g, host, (0..5).collect(), 2).unwrap();
        let text = write_flatw(&g, &w);
        assert!(text.contains("LAMBDA 2\nTAU 0 1 2 3 4\n"));
        let back = parse_flatw(&text).unwrap();
        assert_eq!(back.graph, g);
        assert_eq!(back.witness, w);
        check_flat_witness(&back.graph, &back.witness).unwrap();
    }

    #[test]
    fn lambda_defaults_to_longest_walk() {
        let text = "3 2\n0 1\n1 2\n0\n1 2\n3\nTAU 0 2\nEDGE 0 1 : 0 1\n";
        let f = parse_flatw(text).unwrap();
        assert_eq!(f.witness.lambda, 2);
        check_flat_witness(&f.graph, &f.witness).unwrap();
    }

    #[test]
    fn malformed_edge_lines() {
        assert!(parse_flatw("1 0\n-\nTAU 0\nEDGE 0 : HOST\n").is_err());
        assert!(parse_flatw("1 0\n-\nTAU 0\nEDGE 0 0 HOST\n").is_err());
        assert!(parse_flatw("1 0\n-\nEDGE 0 0 : HOST\n").is_err());
    }
}
