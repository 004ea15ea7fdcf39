use alloc::string::String;
use core::fmt;

/// Errors raised by map construction, metric queries and the constructions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    VertexOutOfRange {
        vertex: usize,
        count: usize,
    },
    EdgeOutOfRange {
        edge: usize,
        count: usize,
    },
    Loop {
        vertex: usize,
    },
    MalformedRotation {
        vertex: usize,
        reason: String,
    },
    /// The rotation system does not embed in the sphere.
    Genus {
        vertices: usize,
        edges: usize,
        faces: usize,
    },
    Disconnected,
    /// The dual would contain a loop (the edge is a bridge).
    LoopInDual {
        edge: usize,
    },
    EmptyGraph,
    MissingEdge {
        u: usize,
        v: usize,
    },
    SameVertex {
        vertex: usize,
    },
    IsolatedVertex {
        vertex: usize,
    },
    NotSimple {
        u: usize,
        v: usize,
    },
    InvalidLambda(usize),
    InvalidCertificate(String),
    InvalidEmbedding(String),
    DegenerateGeometry(String),
    BoundViolation {
        edge: usize,
        count: usize,
        bound: usize,
    },
    ConstructionFailed(String),
    InvalidWitness(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, count } => {
                write!(
                    f,
                    "vertex {vertex} out of range (graph has {count} vertices)"
                )
            }
            Error::EdgeOutOfRange { edge, count } => {
                write!(f, "edge {edge} out of range (graph has {count} edges)")
            }
            Error::Loop { vertex } => write!(f, "loop at vertex {vertex}"),
            Error::MalformedRotation { vertex, reason } => {
                write!(f, "malformed rotation at vertex {vertex}: {reason}")
            }
            Error::Genus {
                vertices,
                edges,
                faces,
            } => write!(
                f,
                "rotation system is not spherical: V - E + F = {vertices} - {edges} + {faces}"
            ),
            Error::Disconnected => f.write_str("map is disconnected"),
            Error::LoopInDual { edge } => {
                write!(
                    f,
                    "edge {edge} has the same face on both sides; its dual is a loop"
                )
            }
            Error::EmptyGraph => f.write_str("graph has no edges"),
            Error::MissingEdge { u, v } => write!(f, "no edge between {u} and {v}"),
            Error::SameVertex { vertex } => {
                write!(
                    f,
                    "wall-by-wall distance needs distinct vertices, got {vertex} twice"
                )
            }
            Error::IsolatedVertex { vertex } => write!(f, "vertex {vertex} has no incident edge"),
            Error::NotSimple { u, v } => write!(f, "parallel edges between {u} and {v}"),
            Error::InvalidLambda(l) => write!(f, "lambda must be positive, got {l}"),
            Error::InvalidCertificate(msg) => write!(f, "invalid wbw certificate: {msg}"),
            Error::InvalidEmbedding(msg) => write!(f, "invalid crossed embedding: {msg}"),
            Error::DegenerateGeometry(msg) => write!(f, "degenerate geometry: {msg}"),
            Error::BoundViolation { edge, count, bound } => write!(
                f,
                "edge {edge} is crossed {count} times, exceeding the bound {bound}"
            ),
            Error::ConstructionFailed(msg) => write!(f, "construction failed: {msg}"),
            Error::InvalidWitness(msg) => write!(f, "invalid witness: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
