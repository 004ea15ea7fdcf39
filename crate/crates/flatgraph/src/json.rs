//! JSON certificates and the JSON-lines audit log.
//!
//! Fields serialize in declaration order, so output diffs cleanly.

use flatgraph_core::audit::AuditEntry;
use flatgraph_core::crossings::CrossedEmbedding;
use flatgraph_core::equivalence::{certify_equivalence, EquivalenceCertificate};
use flatgraph_core::AbstractGraph;
use serde::{Deserialize, Serialize};

use crate::error::{ParseError, ParseResult};
use crate::formats::{parse_cemb, parse_flatw, write_cemb, write_flatw, FlatwFile};

pub const CERTIFICATE_KIND: &str = "flatgraph-equivalence";

/// Both directions of the equivalence on one graph, with the inputs that
/// reproduce it embedded as `.flatw` and `.cemb` text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub kind: String,
    pub vertices: usize,
    pub edges: usize,
    pub lambda_given: usize,
    pub xi_given: usize,
    pub lambda_from_drawing: usize,
    pub xi_from_witness: usize,
    pub lambda_bound_holds: bool,
    pub xi_bound_holds: bool,
    pub holds: bool,
    pub witness: String,
    pub drawing: String,
}

impl CertificateJson {
    pub fn new(
        cert: &EquivalenceCertificate,
        graph: &AbstractGraph,
        witness: &flatgraph_core::wbw::FlatWitness,
        drawing: &CrossedEmbedding,
    ) -> Self {
        CertificateJson {
            kind: CERTIFICATE_KIND.into(),
            vertices: cert.vertices,
            edges: cert.edges,
            lambda_given: cert.lambda_given,
            xi_given: cert.xi_given,
            lambda_from_drawing: cert.lambda_from_drawing,
            xi_from_witness: cert.xi_from_witness,
            lambda_bound_holds: cert.lambda_bound_holds,
            xi_bound_holds: cert.xi_bound_holds,
            holds: cert.holds(),
            witness: write_flatw(graph, witness),
            drawing: write_cemb(drawing),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> ParseResult<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Re-runs the equivalence on the embedded payloads; `Ok(false)` when the
    /// recorded numbers differ from the recomputed ones or a bound fails.
    pub fn verify(&self) -> ParseResult<bool> {
        if self.kind != CERTIFICATE_KIND {
            return Err(ParseError::Truncated(format!("unknown certificate kind `{}`", self.kind)));
        }
        let FlatwFile { graph, witness } = parse_flatw(&self.witness)?;
        let drawing = parse_cemb(&self.drawing)?;
        let cert = certify_equivalence(&graph, &witness, &drawing)?;
        let again = CertificateJson::new(&cert, &graph, &witness, &drawing);
        Ok(again == *self && cert.holds())
    }
}

#[derive(Serialize)]
struct AuditLine<'a> {
    construction: &'a str,
    property: &'a str,
    value: &'a str,
    passed: bool,
}

/// One JSON object per line.
pub fn audit_lines(entries: &[AuditEntry]) -> String {
    let mut out = String::new();
    for e in entries {
        let line = AuditLine {
            construction: e.construction,
            property: e.property,
            value: &e.value,
            passed: e.passed,
        };
        out.push_str(&serde_json::to_string(&line).expect("plain data serializes"));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use flatgraph_core::equivalence::one_flat_witness;
    use flatgraph_core::fixtures;

    fn c4_certificate() -> CertificateJson {
        let map = fixtures::cycle_map(4);
        let g = map.graph().clone();
        let w = one_flat_witness(&g).unwrap();
        let ce = CrossedEmbedding::from_plane_map(map);
        let cert = certify_equivalence(&g, &w, &ce).unwrap();
        CertificateJson::new(&cert, &g, &w, &ce)
    }

    #[test]
    fn certificate_round_trips_and_verifies() {
        let c = c4_certificate();
        let text = c.to_json();
        let keys: Vec<usize> = ["\"kind\"", "\"vertices\"", "\"holds\"", "\"drawing\""]
            .iter()
            .map(|k| text.find(k).unwrap())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        let back = CertificateJson::from_json(&text).unwrap();
        assert_eq!(back, c);
        assert!(back.verify().unwrap());
    }

    #[test]
    fn tampered_numbers_fail_verification() {
        let mut c = c4_certificate();
        c.xi_from_witness += 1;
        assert!(!c.verify().unwrap());
    }

    #[test]
    fn audit_is_one_object_per_line() {
        let entries = vec![
            AuditEntry {
                construction: "a",
                property: "p",
                value: "1".into(),
                passed: true,
            };
            3
        ];
        let text = audit_lines(&entries);
        assert_eq!(text.lines().count(), 3);
        for l in text.lines() {
            let v: serde_json::Value = serde_json::from_str(l).unwrap();
            assert_eq!(v["passed"], true);
        }
    }
}
