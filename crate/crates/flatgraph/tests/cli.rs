use std::path::PathBuf;
use std::process::Command;

use flatgraph::cli::run;
use flatgraph::formats::{parse_cemb, parse_draw, parse_flatw, parse_rot};
use flatgraph_core::wbw::check_flat_witness;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

struct Out {
    code: u8,
    stdout: String,
    stderr: String,
}

fn flatgraph(args: &[&str]) -> Out {
    flatgraph_stdin(args, "")
}

fn flatgraph_stdin(args: &[&str], input: &str) -> Out {
    let mut stdin = input.as_bytes();
    let (mut stdout, mut stderr) = (Vec::new(), Vec::new());
    let argv = std::iter::once("flatgraph").chain(args.iter().copied());
    let code = run(argv, &mut stdin, &mut stdout, &mut stderr);
    Out {
        code,
        stdout: String::from_utf8(stdout).unwrap(),
        stderr: String::from_utf8(stderr).unwrap(),
    }
}

#[test]
fn wbw_on_the_star() {
    let out = flatgraph(&["wbw", &data("star6.rot"), "1", "4"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let mut lines = out.stdout.lines();
    assert_eq!(lines.next(), Some("4"));
    assert_eq!(lines.next().unwrap().split_whitespace().count(), 4);
}

#[test]
fn wbw_json_and_unreachable() {
    let out = flatgraph(&["wbw", &data("star6.rot"), "1", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["distance"], 4);
    let two_parts = "4 2\n0 1\n2 3\n0\n1\n2\n3\n";
    let out = flatgraph_stdin(&["wbw", "-", "0", "3"], two_parts);
    assert_eq!(out.code, 1);
    assert_eq!(out.stdout, "unreachable\n");
}

#[test]
fn first_power_is_the_map_itself() {
    let text = std::fs::read_to_string(data("c3.rot")).unwrap();
    let out = flatgraph(&["power", &data("c3.rot"), "--lambda", "1"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, text);
}

#[test]
fn nonplanar_power_needs_a_witness_format() {
    let wheel = flatgraph(&["power", &data("star6.rot"), "--lambda", "2"]);
    assert_eq!(wheel.code, 0);
    assert_eq!(parse_rot(&wheel.stdout).unwrap().edge_count(), 12);
    let out = flatgraph(&["power", &data("star6.rot"), "--lambda", "3"]);
    assert_eq!(out.code, 1);
    let out = flatgraph(&["power", &data("star6.rot"), "--lambda", "3", "--format", "flatw"]);
    assert_eq!(out.code, 0);
    let f = parse_flatw(&out.stdout).unwrap();
    check_flat_witness(&f.graph, &f.witness).unwrap();
    // Leaves two apart around the centre are now adjacent too.
    assert_eq!(f.graph.edge_count(), 18);
}

#[test]
fn roundtrip_writes_a_checkable_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("k4.json");
    let out = flatgraph(&[
        "roundtrip",
        &data("k4-over-c4.flatw"),
        "--certificate",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(
        out.stdout,
        "lambda_given 2\nxi_given 1\nlambda_from_drawing 2\nxi_from_witness 1\n"
    );
    let check = flatgraph(&["check", cert.to_str().unwrap()]);
    assert_eq!(check.code, 0, "{}", check.stderr);
    let text = std::fs::read_to_string(&cert).unwrap();
    let tampered = text.replace("\"xi_given\": 1", "\"xi_given\": 0");
    assert_ne!(tampered, text);
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, tampered).unwrap();
    assert_eq!(flatgraph(&["check", bad.to_str().unwrap()]).code, 1);
}

#[test]
fn flatten_and_transform_the_k5_drawing() {
    let out = flatgraph(&["flatten", &data("k5-one-crossing.draw")]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let f = parse_flatw(&out.stdout).unwrap();
    assert_eq!(f.witness.lambda, 2);
    check_flat_witness(&f.graph, &f.witness).unwrap();
    let host = flatgraph(&["transform", &data("k5-one-crossing.draw")]);
    assert_eq!(host.code, 0);
    let host = parse_rot(&host.stdout).unwrap();
    assert!(host.is_simple());
    assert_eq!(host, f.witness.host);
}

#[test]
fn triangulate_then_draw_power() {
    let dir = tempfile::tempdir().unwrap();
    let tri = dir.path().join("t.rot");
    let audit = dir.path().join("audit.jsonl");
    let out = flatgraph(&[
        "triangulate",
        &data("c3.rot"),
        "-o",
        tri.to_str().unwrap(),
        "--audit",
        audit.to_str().unwrap(),
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let t = parse_rot(&std::fs::read_to_string(&tri).unwrap()).unwrap();
    assert!(t.faces().iter().all(|f| f.len() == 3));
    let draw = flatgraph(&["draw-power", tri.to_str().unwrap(), "--lambda", "3"]);
    assert_eq!(draw.code, 0, "{}", draw.stderr);
    let ce = parse_cemb(&draw.stdout).unwrap();
    assert!(ce.max_crossings() <= 8);
    let geometry = flatgraph(&[
        "draw-power",
        tri.to_str().unwrap(),
        "--lambda",
        "3",
        "--format",
        "draw",
        "--audit",
        audit.to_str().unwrap(),
    ]);
    parse_draw(&geometry.stdout).unwrap();
    let log = std::fs::read_to_string(&audit).unwrap();
    assert!(log.lines().count() >= 5);
    for line in log.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["passed"], true, "{line}");
    }
}

#[test]
fn gadgets_are_two_flat() {
    for (kind, n) in [("topological", "5"), ("contraction", "2")] {
        let out = flatgraph(&["gadget", kind, n]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        let f = parse_flatw(&out.stdout).unwrap();
        assert_eq!(f.witness.lambda, 2);
        check_flat_witness(&f.graph, &f.witness).unwrap();
    }
    assert_eq!(flatgraph(&["gadget", "contraction", "1"]).code, 1);
}

#[test]
fn render_is_deterministic() {
    let a = flatgraph(&["render", &data("c3.rot")]);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout.matches("<circle").count(), 3);
    assert_eq!(a.stdout, flatgraph(&["render", &data("c3.rot")]).stdout);
    let b = flatgraph(&["render", &data("star6.rot"), "--highlight", "1", "4"]);
    assert_eq!(b.stdout.matches("class=\"bold\"").count(), 4);
    let c = flatgraph(&["render", &data("k5-one-crossing.draw")]);
    assert_eq!(c.stdout.matches("class=\"cross\"").count(), 1);
    let d = flatgraph(&["render", &data("k4-over-c4.flatw")]);
    assert_eq!(d.stdout.matches("class=\"power\"").count(), 2);
}

#[test]
fn check_accepts_every_format() {
    for f in ["star6.rot", "c3.rot", "k4-over-c4.flatw", "k5-one-crossing.draw"] {
        let out = flatgraph(&["check", &data(f)]);
        assert_eq!(out.code, 0, "{f}: {}", out.stderr);
        assert!(out.stdout.starts_with("ok:"));
    }
}

#[test]
fn invalid_inputs_exit_one() {
    let out = flatgraph_stdin(&["check", "-"], "3 3\n0 1\n1 2\n2 0\n0 1\n2 3\n4 5\n");
    assert_eq!(out.code, 1);
    let bad_walk = std::fs::read_to_string(data("k4-over-c4.flatw"))
        .unwrap()
        .replace("EDGE 0 2 : 0 1", "EDGE 0 2 : 0 2");
    assert_eq!(flatgraph_stdin(&["check", "-"], &bad_walk).code, 1);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(flatgraph(&[]).code, 2);
    assert_eq!(flatgraph(&["frobnicate"]).code, 2);
    assert_eq!(flatgraph(&["wbw", &data("star6.rot"), "1"]).code, 2);
    assert_eq!(flatgraph(&["wbw", "/no/such/file.rot", "1", "2"]).code, 2);
    let out = flatgraph(&["render", &data("c3.rot"), "--format", "rot"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("svg"));
    assert_eq!(flatgraph(&["--help"]).code, 0);
}

#[test]
fn binary_reports_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_flatgraph");
    let ok = Command::new(bin)
        .args(["wbw", &data("star6.rot"), "1", "4"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).starts_with("4\n"));
    let usage = Command::new(bin).arg("power").output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
    let invalid = Command::new(bin)
        .args(["triangulate", &data("k4-over-c4.flatw")])
        .output()
        .unwrap();
    assert_eq!(invalid.status.code(), Some(1));
}
