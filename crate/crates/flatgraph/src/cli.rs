//! Command-line front end. [`run`] never panics on bad input: it returns the
//! process exit code (0 success, 1 validation failure, 2 usage error).

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use flatgraph_core::audit::{self, AuditEntry};
use flatgraph_core::constructions::{
    draw_power, nearly_planar_to_flat, plane_transformation, triangulate,
};
use flatgraph_core::crossings::{planarize, planarize_drawing, CrossedEmbedding};
use flatgraph_core::equivalence::{
    certify_equivalence, flat_to_nearly_planar, gadget_contraction, gadget_topological_minor,
};
use flatgraph_core::planarity::planar_embedding;
use flatgraph_core::wbw::{check_flat_witness, lambda_power, wbw_distance, witness_from_distances};
use flatgraph_core::PlaneMap;
use serde::Serialize;

use crate::error::ParseError;
use crate::formats::{self, Kind};
use crate::json::{audit_lines, CertificateJson};
use crate::svg::{render_drawing, render_map, render_witness, MapStyle};

pub const DEFAULT_SEED: u64 = 1;

#[derive(Debug, Parser)]
#[command(name = "flatgraph", version, about = "Wall-by-wall powers of plane graphs and drawings with few crossings per edge")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format; each subcommand accepts a subset.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Seed for perturbing degenerate straight-line drawings.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Write the result here instead of standard output.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
    /// Append the checked properties as JSON lines to this file.
    #[arg(long, global = true)]
    pub audit: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Rot,
    Cemb,
    Flatw,
    Json,
    Svg,
    Draw,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GadgetKind {
    /// 2-flat graph containing a subdivision of K_n.
    Topological,
    /// 2-flat graph contracting onto K_{n,n} and K_n.
    Contraction,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Wall-by-wall distance and a shortest walk between two vertices.
    Wbw { map: String, x: usize, y: usize },
    /// The lambda-power of a plane map.
    Power {
        map: String,
        #[arg(long)]
        lambda: usize,
    },
    /// Plane transformation of a drawing (.cemb or .draw).
    Transform { drawing: String },
    /// Flat witness of a drawing over its plane transformation.
    Flatten { drawing: String },
    /// 3-connected triangulation of a simple connected plane map.
    Triangulate { map: String },
    /// Drawing of the lambda-power of a triangulation.
    DrawPower {
        map: String,
        #[arg(long)]
        lambda: usize,
    },
    /// Both directions of the equivalence from a witness or a drawing.
    Roundtrip {
        input: String,
        /// Where to write the JSON certificate (default: next to the input).
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Gadget graphs with their 2-flat witnesses.
    Gadget {
        #[arg(value_enum)]
        kind: GadgetKind,
        n: usize,
    },
    /// SVG of a map, drawing or witness.
    Render {
        input: String,
        /// Draw the edges of this power of a map, dotted.
        #[arg(long)]
        lambda: Option<usize>,
        /// Draw a shortest wbw-walk between these two vertices in bold.
        #[arg(long, num_args = 2, value_names = ["X", "Y"])]
        highlight: Option<Vec<usize>>,
    },
    /// Validate any supported file.
    Check { input: String },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Invalid(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Invalid(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Invalid(m) => f.write_str(m),
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<flatgraph_core::Error> for CliError {
    fn from(e: flatgraph_core::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

/// Parses `args` and runs the subcommand.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = stdout.write_all(text.as_bytes());
            } else {
                let _ = stderr.write_all(text.as_bytes());
            }
            return code;
        }
    };
    let mut ctx = Context {
        cli: &cli,
        stdin,
        stdout,
        audit: Vec::new(),
    };
    let outcome = dispatch(&mut ctx);
    let audit = std::mem::take(&mut ctx.audit);
    let outcome = outcome.and_then(|()| write_audit(&cli, &audit));
    match outcome {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "flatgraph: {e}");
            e.code()
        }
    }
}

struct Context<'a> {
    cli: &'a Cli,
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    audit: Vec<AuditEntry>,
}

impl Context<'_> {
    fn read(&mut self, path: &str) -> CliResult<String> {
        if path == "-" {
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| CliError::Usage(format!("cannot read standard input: {e}")))?;
            Ok(s)
        } else {
            std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))
        }
    }

    fn emit(&mut self, text: &str) -> CliResult<()> {
        match &self.cli.output {
            Some(p) => std::fs::write(p, text)
                .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", p.display()))),
            None => self
                .stdout
                .write_all(text.as_bytes())
                .map_err(|e| CliError::Usage(format!("cannot write output: {e}"))),
        }
    }

    /// The requested format, `default` when none was given.
    fn format(&self, allowed: &[Format], default: Format) -> CliResult<Format> {
        let f = self.cli.format.unwrap_or(default);
        if allowed.contains(&f) {
            Ok(f)
        } else {
            let names: Vec<String> = allowed
                .iter()
                .map(|a| a.to_possible_value().unwrap().get_name().to_string())
                .collect();
            Err(CliError::Usage(format!(
                "--format {} is not available here; use one of: {}",
                f.to_possible_value().unwrap().get_name(),
                names.join(", ")
            )))
        }
    }

    fn audited(&mut self, entries: Vec<AuditEntry>) -> CliResult<()> {
        let failed: Vec<String> = entries
            .iter()
            .filter(|e| !e.passed)
            .map(|e| format!("{}: {} ({})", e.construction, e.property, e.value))
            .collect();
        self.audit.extend(entries);
        if failed.is_empty() {
            Ok(())
        } else {
            Err(CliError::Invalid(format!("failed checks: {}", failed.join("; "))))
        }
    }

    fn map(&mut self, path: &str) -> CliResult<PlaneMap> {
        let text = self.read(path)?;
        expect_kind(&text, Kind::Rot, path)?;
        Ok(formats::parse_rot(&text)?)
    }

    fn drawing(&mut self, path: &str) -> CliResult<CrossedEmbedding> {
        let text = self.read(path)?;
        parse_drawing(&text, path, self.cli.seed)
    }
}

/// A drawing from `.cemb` text, a planarized `.draw` file, or a plane map.
fn parse_drawing(text: &str, path: &str, seed: u64) -> CliResult<CrossedEmbedding> {
    match formats::detect(text) {
        Kind::Cemb => Ok(formats::parse_cemb(text)?),
        Kind::Draw => {
            let d = formats::parse_draw(text)?;
            if d.polylines.iter().all(|l| l.len() == 2) {
                Ok(planarize(&d.vertices, &d.edges, seed)?.planarized.embedding)
            } else {
                Ok(planarize_drawing(&d)?.embedding)
            }
        }
        Kind::Rot => Ok(CrossedEmbedding::from_plane_map(formats::parse_rot(text)?)),
        other => Err(CliError::Invalid(format!(
            "{path}: expected a drawing, found {other:?} content"
        ))),
    }
}

fn expect_kind(text: &str, want: Kind, path: &str) -> CliResult<()> {
    let got = formats::detect(text);
    if got == want {
        Ok(())
    } else {
        Err(CliError::Invalid(format!("{path}: expected {want:?} content, found {got:?}")))
    }
}

fn write_audit(cli: &Cli, entries: &[AuditEntry]) -> CliResult<()> {
    let Some(path) = &cli.audit else {
        return Ok(());
    };
    let mut f = std::fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(|e| CliError::Usage(format!("cannot open {}: {e}", path.display())))?;
    f.write_all(audit_lines(entries).as_bytes())
        .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn dispatch(ctx: &mut Context<'_>) -> CliResult<()> {
    match &ctx.cli.command {
        Command::Wbw { map, x, y } => wbw(ctx, map, *x, *y),
        Command::Power { map, lambda } => power(ctx, map, *lambda),
        Command::Transform { drawing } => transform(ctx, drawing),
        Command::Flatten { drawing } => flatten(ctx, drawing),
        Command::Triangulate { map } => triangulate_cmd(ctx, map),
        Command::DrawPower { map, lambda } => draw_power_cmd(ctx, map, *lambda),
        Command::Roundtrip { input, certificate } => roundtrip(ctx, input, certificate.clone()),
        Command::Gadget { kind, n } => gadget(ctx, *kind, *n),
        Command::Render {
            input,
            lambda,
            highlight,
        } => render(ctx, input, *lambda, highlight.clone()),
        Command::Check { input } => check(ctx, input),
    }
}

#[derive(Serialize)]
struct WbwJson {
    x: usize,
    y: usize,
    distance: Option<usize>,
    edges: Vec<usize>,
}

fn wbw(ctx: &mut Context<'_>, path: &str, x: usize, y: usize) -> CliResult<()> {
    let format = ctx.format(&[Format::Text, Format::Json, Format::Svg], Format::Text)?;
    let map = ctx.map(path)?;
    let cert = wbw_distance(&map, x, y)?;
    if let Some(c) = &cert {
        c.validate(&map)?;
    }
    let edges = cert.as_ref().map(|c| c.edges.clone()).unwrap_or_default();
    let out = match format {
        Format::Json => to_json(&WbwJson {
            x,
            y,
            distance: cert.as_ref().map(|c| c.len()),
            edges: edges.clone(),
        }),
        Format::Svg => render_map(
            &map,
            &MapStyle {
                highlight: edges.clone(),
                power: None,
            },
        )?,
        _ => match &cert {
            Some(c) => format!("{}\n{}\n", c.len(), formats::join(&c.edges)),
            None => "unreachable\n".to_string(),
        },
    };
    ctx.emit(&out)?;
    if cert.is_none() {
        return Err(CliError::Invalid(format!("vertices {x} and {y} lie in different components")));
    }
    Ok(())
}

#[derive(Serialize)]
struct PowerJson {
    lambda: usize,
    vertices: usize,
    edges: Vec<(usize, usize)>,
    new_edges: usize,
}

fn power(ctx: &mut Context<'_>, path: &str, lambda: usize) -> CliResult<()> {
    let format = ctx.format(&[Format::Rot, Format::Flatw, Format::Json, Format::Svg], Format::Rot)?;
    let map = ctx.map(path)?;
    let g = lambda_power(&map, lambda)?;
    let new_edges = g.edge_count().saturating_sub(map.graph().simplified().edge_count());
    let out = match format {
        Format::Rot => {
            if new_edges == 0 {
                formats::write_rot(&map)
            } else {
                let embedded = planar_embedding(&g).ok_or_else(|| {
                    CliError::Invalid(format!(
                        "the {lambda}-power is not planar; use --format flatw or json"
                    ))
                })?;
                formats::write_rot(&embedded)
            }
        }
        Format::Flatw => {
            let w = witness_from_distances(&g, map.clone(), (0..map.vertex_count()).collect(), lambda)?;
            ctx.audited(audit::audit_witness("power", &g, &w))?;
            formats::write_flatw(&g, &w)
        }
        Format::Json => to_json(&PowerJson {
            lambda,
            vertices: g.vertex_count(),
            edges: g.edges().to_vec(),
            new_edges,
        }),
        _ => render_map(
            &map,
            &MapStyle {
                highlight: Vec::new(),
                power: Some(lambda),
            },
        )?,
    };
    ctx.emit(&out)
}

#[derive(Serialize)]
struct TransformJson {
    crossings: usize,
    tau: Vec<usize>,
    crossing_cycles: Vec<[usize; 4]>,
    deleted_pairs: Vec<(usize, usize)>,
    subdivision_map: Vec<Vec<usize>>,
    crossings_per_edge: Vec<usize>,
    extra_subdivisions: usize,
    host: String,
}

fn transform(ctx: &mut Context<'_>, path: &str) -> CliResult<()> {
    let format = ctx.format(&[Format::Rot, Format::Json, Format::Svg], Format::Rot)?;
    let ce = ctx.drawing(path)?;
    let rec = plane_transformation(&ce)?;
    ctx.audited(audit::audit_transformation(&ce, &rec))?;
    let out = match format {
        Format::Rot => formats::write_rot(&rec.host),
        Format::Json => to_json(&TransformJson {
            crossings: ce.crossings().len(),
            tau: rec.tau.clone(),
            crossing_cycles: rec.crossing_cycles.clone(),
            deleted_pairs: rec.deleted_pairs.clone(),
            subdivision_map: rec.subdivision_map.clone(),
            crossings_per_edge: rec.crossings_per_edge.clone(),
            extra_subdivisions: rec.extra_subdivisions,
            host: formats::write_rot(&rec.host),
        }),
        _ => render_map(&rec.host, &MapStyle::default())?,
    };
    ctx.emit(&out)
}

#[derive(Serialize)]
struct FlattenJson {
    xi: usize,
    lambda: usize,
    reach: usize,
    seed: u64,
    witness: String,
}

fn flatten(ctx: &mut Context<'_>, path: &str) -> CliResult<()> {
    let format = ctx.format(&[Format::Flatw, Format::Json, Format::Svg], Format::Flatw)?;
    let ce = ctx.drawing(path)?;
    let f = nearly_planar_to_flat(&ce)?;
    ctx.audited(audit::audit_flattening(&ce, &f))?;
    let g = ce.original_graph();
    let out = match format {
        Format::Flatw => formats::write_flatw(&g, &f.witness),
        Format::Json => to_json(&FlattenJson {
            xi: f.xi,
            lambda: f.witness.lambda,
            reach: f.reach,
            seed: ctx.cli.seed,
            witness: formats::write_flatw(&g, &f.witness),
        }),
        _ => render_witness(&g, &f.witness)?,
    };
    ctx.emit(&out)
}

#[derive(Serialize)]
struct TriangulateJson {
    vertices: usize,
    edges: usize,
    tau: Vec<usize>,
    new_neighbours: Vec<Vec<usize>>,
    triangulation: String,
}

fn triangulate_cmd(ctx: &mut Context<'_>, path: &str) -> CliResult<()> {
    let format = ctx.format(&[Format::Rot, Format::Json, Format::Svg], Format::Rot)?;
    let map = ctx.map(path)?;
    let rec = triangulate(&map)?;
    ctx.audited(audit::audit_triangulation(&map, &rec))?;
    let t = &rec.triangulation;
    let out = match format {
        Format::Rot => formats::write_rot(t),
        Format::Json => to_json(&TriangulateJson {
            vertices: t.vertex_count(),
            edges: t.edge_count(),
            tau: rec.tau.clone(),
            new_neighbours: rec.saturated.new_neighbours.clone(),
            triangulation: formats::write_rot(t),
        }),
        _ => render_map(t, &MapStyle::default())?,
    };
    ctx.emit(&out)
}

#[derive(Serialize)]
struct DrawPowerJson {
    lambda: usize,
    bound: usize,
    routes: usize,
    max_crossings: usize,
    counts: Vec<usize>,
    recount_agrees: bool,
    max_old_edge: usize,
    max_new_edge: usize,
    old_edge_bound: Option<usize>,
    new_edge_bound: Option<usize>,
    attempts: usize,
    embedding: String,
    drawing: String,
}

fn draw_power_cmd(ctx: &mut Context<'_>, path: &str, lambda: usize) -> CliResult<()> {
    let format = ctx.format(
        &[Format::Cemb, Format::Draw, Format::Json, Format::Svg],
        Format::Cemb,
    )?;
    let map = ctx.map(path)?;
    let p = draw_power(&map, lambda)?;
    ctx.audited(audit::audit_power(&p))?;
    let out = match format {
        Format::Cemb => formats::write_cemb(&p.embedding),
        Format::Draw => formats::write_draw(&p.drawing),
        Format::Json => to_json(&DrawPowerJson {
            lambda,
            bound: p.bound,
            routes: p.routes.len(),
            max_crossings: p.max_crossings(),
            counts: p.counts.clone(),
            recount_agrees: p.counts == p.recount,
            max_old_edge: p.stats.max_old_edge,
            max_new_edge: p.stats.max_new_edge,
            old_edge_bound: p.stats.counted_old_edge_bound,
            new_edge_bound: p.stats.counted_new_edge_bound,
            attempts: p.attempts,
            embedding: formats::write_cemb(&p.embedding),
            drawing: formats::write_draw(&p.drawing),
        }),
        _ => render_drawing(&p.drawing),
    };
    ctx.emit(&out)
}

fn roundtrip(ctx: &mut Context<'_>, path: &str, target: Option<PathBuf>) -> CliResult<()> {
    let format = ctx.format(&[Format::Text, Format::Json], Format::Text)?;
    let text = ctx.read(path)?;
    let (g, witness, drawing) = match formats::detect(&text) {
        Kind::Flatw => {
            let f = formats::parse_flatw(&text)?;
            let drawn = flat_to_nearly_planar(&f.graph, &f.witness)?;
            (f.graph, f.witness, drawn.embedding)
        }
        _ => {
            let ce = parse_drawing(&text, path, ctx.cli.seed)?;
            let f = nearly_planar_to_flat(&ce)?;
            (ce.original_graph(), f.witness, ce)
        }
    };
    let cert = certify_equivalence(&g, &witness, &drawing)?;
    ctx.audited(audit::audit_equivalence(&cert))?;
    let json = CertificateJson::new(&cert, &g, &witness, &drawing).to_json();
    let target = target.or_else(|| {
        (path != "-").then(|| {
            let p = PathBuf::from(path);
            p.with_extension("cert.json")
        })
    });
    if let Some(t) = &target {
        std::fs::write(t, &json)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", t.display())))?;
    }
    let out = match format {
        Format::Json => json,
        _ => format!(
            "lambda_given {}\nxi_given {}\nlambda_from_drawing {}\nxi_from_witness {}\n",
            cert.lambda_given, cert.xi_given, cert.lambda_from_drawing, cert.xi_from_witness
        ),
    };
    ctx.emit(&out)
}

#[derive(Serialize)]
struct GadgetJson {
    kind: &'static str,
    n: usize,
    vertices: usize,
    edges: usize,
    witness: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    subdivision_paths: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    to_bipartite: Option<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    to_complete: Option<Vec<(usize, usize)>>,
}

fn gadget(ctx: &mut Context<'_>, kind: GadgetKind, n: usize) -> CliResult<()> {
    let format = ctx.format(&[Format::Flatw, Format::Json, Format::Svg], Format::Flatw)?;
    let (graph, witness, json) = match kind {
        GadgetKind::Topological => {
            let t = gadget_topological_minor(n)?;
            let g = t.gadget.graph.clone();
            let w = t.gadget.witness.clone();
            let json = GadgetJson {
                kind: "topological",
                n,
                vertices: g.vertex_count(),
                edges: g.edge_count(),
                witness: formats::write_flatw(&g, &w),
                subdivision_paths: Some(t.subdivision.paths.clone()),
                to_bipartite: None,
                to_complete: None,
            };
            (g, w, json)
        }
        GadgetKind::Contraction => {
            let c = gadget_contraction(n)?;
            let json = GadgetJson {
                kind: "contraction",
                n,
                vertices: c.graph.vertex_count(),
                edges: c.graph.edge_count(),
                witness: formats::write_flatw(&c.graph, &c.witness),
                subdivision_paths: None,
                to_bipartite: Some(c.to_bipartite.clone()),
                to_complete: Some(c.to_complete.clone()),
            };
            (c.graph, c.witness, json)
        }
    };
    ctx.audited(audit::audit_witness("gadget", &graph, &witness))?;
    let out = match format {
        Format::Flatw => formats::write_flatw(&graph, &witness),
        Format::Json => to_json(&json),
        _ => render_witness(&graph, &witness)?,
    };
    ctx.emit(&out)
}

fn render(
    ctx: &mut Context<'_>,
    path: &str,
    lambda: Option<usize>,
    highlight: Option<Vec<usize>>,
) -> CliResult<()> {
    ctx.format(&[Format::Svg], Format::Svg)?;
    let text = ctx.read(path)?;
    let out = match formats::detect(&text) {
        Kind::Rot => {
            let map = formats::parse_rot(&text)?;
            let mut style = MapStyle {
                highlight: Vec::new(),
                power: lambda,
            };
            if let Some(pair) = highlight {
                let cert = wbw_distance(&map, pair[0], pair[1])?.ok_or_else(|| {
                    CliError::Invalid(format!("no wbw-walk between {} and {}", pair[0], pair[1]))
                })?;
                style.highlight = cert.edges;
            }
            render_map(&map, &style)?
        }
        Kind::Flatw => {
            let f = formats::parse_flatw(&text)?;
            render_witness(&f.graph, &f.witness)?
        }
        Kind::Draw => render_drawing(&formats::parse_draw(&text)?),
        Kind::Cemb => {
            let ce = formats::parse_cemb(&text)?;
            render_map(ce.planarization(), &MapStyle::default())?
        }
        Kind::Json => return Err(CliError::Invalid(format!("{path}: certificates are not rendered"))),
    };
    ctx.emit(&out)
}

fn check(ctx: &mut Context<'_>, path: &str) -> CliResult<()> {
    ctx.format(&[Format::Text], Format::Text)?;
    let text = ctx.read(path)?;
    let report = match formats::detect(&text) {
        Kind::Rot => {
            let m = formats::parse_rot(&text)?;
            format!(
                "ok: plane map, {} vertices, {} edges, {} faces\n",
                m.vertex_count(),
                m.edge_count(),
                m.face_count()
            )
        }
        Kind::Flatw => {
            let f = formats::parse_flatw(&text)?;
            check_flat_witness(&f.graph, &f.witness)?;
            ctx.audited(audit::audit_witness("check", &f.graph, &f.witness))?;
            format!(
                "ok: {}-flat witness, {} vertices, {} edges\n",
                f.witness.lambda,
                f.graph.vertex_count(),
                f.graph.edge_count()
            )
        }
        Kind::Cemb => {
            let ce = formats::parse_cemb(&text)?;
            format!(
                "ok: drawing, {} crossings, at most {} per edge\n",
                ce.crossings().len(),
                ce.max_crossings()
            )
        }
        Kind::Draw => {
            let d = formats::parse_draw(&text)?;
            let p = planarize_drawing(&d)?;
            format!(
                "ok: geometric drawing, {} crossings, at most {} per edge\n",
                p.crossing_points.len(),
                p.embedding.max_crossings()
            )
        }
        Kind::Json => {
            let c = CertificateJson::from_json(&text)?;
            if !c.verify()? {
                return Err(CliError::Invalid(
                    "certificate does not match its recomputation".into(),
                ));
            }
            format!(
                "ok: equivalence certificate, lambda {} xi {}\n",
                c.lambda_given, c.xi_given
            )
        }
    };
    ctx.emit(&report)
}
