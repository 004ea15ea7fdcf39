//! Per-construction records of the properties that were checked.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::constructions::{
    check_triangulation, host_reach, NearlyPlanarFlattening, PowerDrawing, TransformationRecord,
    TriangulationRecord,
};
use crate::crossings::CrossedEmbedding;
use crate::equivalence::EquivalenceCertificate;
use crate::graph::AbstractGraph;
use crate::plane_map::PlaneMap;
use crate::wbw::{check_flat_witness, FlatWitness};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditEntry {
    pub construction: &'static str,
    pub property: &'static str,
    pub value: String,
    pub passed: bool,
}

impl AuditEntry {
    fn new(construction: &'static str, property: &'static str, value: String, passed: bool) -> Self {
        AuditEntry {
            construction,
            property,
            value,
            passed,
        }
    }
}

pub fn all_passed(entries: &[AuditEntry]) -> bool {
    entries.iter().all(|e| e.passed)
}

pub fn audit_witness(construction: &'static str, g: &AbstractGraph, w: &FlatWitness) -> Vec<AuditEntry> {
    let check = check_flat_witness(g, w);
    let mut out = Vec::new();
    out.push(AuditEntry::new(
        construction,
        "witness_valid",
        match &check {
            Ok(()) => "ok".to_string(),
            Err(e) => e.to_string(),
        },
        check.is_ok(),
    ));
    out.push(AuditEntry::new(construction, "lambda", format!("{}", w.lambda), w.lambda >= 1));
    out
}

pub fn audit_transformation(ce: &CrossedEmbedding, rec: &TransformationRecord) -> Vec<AuditEntry> {
    let c = "transform";
    let host = &rec.host;
    let crossings = ce.crossings().len();
    alloc::vec![
        AuditEntry::new(c, "host_simple", format!("{}", host.is_simple()), host.is_simple()),
        AuditEntry::new(
            c,
            "host_spherical",
            format!("{}", host.euler_characteristic()),
            host.euler_characteristic() == 2 * host.graph().components().1 as i64,
        ),
        AuditEntry::new(
            c,
            "one_cycle_per_crossing",
            format!("{} cycles for {crossings} crossings", rec.crossing_cycles.len()),
            rec.crossing_cycles.len() == crossings,
        ),
    ]
}

pub fn audit_flattening(ce: &CrossedEmbedding, f: &NearlyPlanarFlattening) -> Vec<AuditEntry> {
    let c = "flatten";
    let g = ce.original_graph();
    let mut out = audit_transformation(ce, &f.record);
    out.extend(audit_witness(c, &g, &f.witness));
    let lambda_bound = (2 * f.xi).max(1);
    out.push(AuditEntry::new(
        c,
        "lambda_at_most_2xi",
        format!("{} <= {lambda_bound}", f.witness.lambda),
        f.witness.lambda <= lambda_bound,
    ));
    let reach = host_reach(&f.record.host, &f.record.tau);
    out.push(AuditEntry::new(
        c,
        "host_reach_at_most_xi",
        format!("{reach} <= {}", f.xi.max(1)),
        reach <= f.xi.max(1),
    ));
    out
}

pub fn audit_triangulation(h: &PlaneMap, rec: &TriangulationRecord) -> Vec<AuditEntry> {
    let c = "triangulate";
    let t = &rec.triangulation;
    let check = check_triangulation(t);
    let reach = host_reach(t, &rec.tau);
    alloc::vec![
        AuditEntry::new(
            c,
            "simple_triangular_3_connected",
            match &check {
                Ok(()) => "ok".to_string(),
                Err(e) => e.to_string(),
            },
            check.is_ok(),
        ),
        AuditEntry::new(
            c,
            "keeps_input_vertices",
            format!("{} of {}", rec.tau.len(), h.vertex_count()),
            rec.tau.len() == h.vertex_count(),
        ),
        AuditEntry::new(c, "reach_at_most_4", format!("{reach}"), reach <= 4),
    ]
}

pub fn audit_power(p: &PowerDrawing) -> Vec<AuditEntry> {
    let c = "draw_power";
    let max = p.max_crossings();
    let mut out = alloc::vec![
        AuditEntry::new(
            c,
            "crossings_per_edge_at_most_bound",
            format!("{max} <= {}", p.bound),
            max <= p.bound,
        ),
        AuditEntry::new(
            c,
            "recount_agrees",
            format!("{} edges", p.counts.len()),
            p.counts == p.recount,
        ),
        AuditEntry::new(c, "routes", format!("{}", p.routes.len()), true),
        AuditEntry::new(c, "max_old_edge", format!("{}", p.stats.max_old_edge), true),
        AuditEntry::new(c, "max_new_edge", format!("{}", p.stats.max_new_edge), true),
    ];
    if let Some(b) = p.stats.counted_old_edge_bound {
        out.push(AuditEntry::new(
            c,
            "old_edge_count_bound",
            format!("{} <= {b}", p.stats.max_old_edge),
            true,
        ));
    }
    out
}

pub fn audit_equivalence(cert: &EquivalenceCertificate) -> Vec<AuditEntry> {
    let c = "roundtrip";
    alloc::vec![
        AuditEntry::new(
            c,
            "lambda_from_drawing_at_most_2xi",
            format!("{} <= {}", cert.lambda_from_drawing, (2 * cert.xi_given).max(1)),
            cert.lambda_bound_holds,
        ),
        AuditEntry::new(
            c,
            "xi_from_witness_at_most_2_pow_8lambda",
            format!("{} (lambda {})", cert.xi_from_witness, cert.lambda_given),
            cert.xi_bound_holds,
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{draw_power, nearly_planar_to_flat, triangulate};
    use crate::crossings::planarize_drawing;
    use crate::fixtures;

    #[test]
    fn constructions_audit_clean() {
        let ce = planarize_drawing(&fixtures::k5_one_crossing_drawing())
            .unwrap()
            .embedding;
        let f = nearly_planar_to_flat(&ce).unwrap();
        assert!(all_passed(&audit_flattening(&ce, &f)));
        let h = fixtures::cycle_map(4);
        let t = triangulate(&h).unwrap();
        assert!(all_passed(&audit_triangulation(&h, &t)));
        let p = draw_power(&fixtures::octahedron(), 3).unwrap();
        assert!(all_passed(&audit_power(&p)));
    }

    #[test]
    fn broken_witness_is_flagged() {
        let g = AbstractGraph::complete(3);
        let w = FlatWitness {
            host: fixtures::path_map(3),
            tau: alloc::vec![0, 1, 2],
            lambda: 1,
            certificates: alloc::vec![crate::wbw::EdgeWitness::Host; 3],
        };
        assert!(!all_passed(&audit_witness("test", &g, &w)));
    }
}
