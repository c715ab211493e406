//! Text formats: graph, configuration and embedding JSON, the sweep CSV,
//! and atomic file output.
//!
//! All writers are deterministic. Graph and configuration JSON use sorted
//! keys; embedding coordinates are written with 17 significant digits so
//! that reading them back recovers the same `f64`.

use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;
use thiserror::Error;

use crate::config::IncidenceConfiguration;
use crate::embedding::{Color, ConstructionParams, Embedding, FeasibilityMap, Point};
use crate::graph::{Graph, Role};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid document: {0}")]
    Invalid(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

// ---------------------------------------------------------------------------
// graphs and configurations

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    edges: Vec<[usize; 2]>,
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    roles: Option<RolesDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RolesDoc {
    hollow: Vec<usize>,
    solid: Vec<usize>,
}

/// `{"edges":[[a,b],…],"n":…,"roles":{"hollow":[…],"solid":[…]}}`, edges
/// sorted with the smaller id first; `roles` omitted when absent.
pub fn graph_to_json(g: &Graph) -> String {
    let doc = GraphDoc {
        edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
        n: g.vertex_count(),
        roles: g.roles().map(|_| RolesDoc {
            hollow: g.vertices_with_role(Role::Hollow),
            solid: g.vertices_with_role(Role::Solid),
        }),
    };
    serde_json::to_string(&doc).expect("graph documents serialize")
}

pub fn graph_from_json(text: &str) -> Result<Graph, FormatError> {
    let doc: GraphDoc = serde_json::from_str(text)?;
    let g = Graph::new(doc.n, doc.edges.iter().map(|e| (e[0], e[1])))
        .map_err(|e| FormatError::Invalid(e.to_string()))?;
    match doc.roles {
        None => Ok(g),
        Some(r) => {
            let mut roles = vec![None; doc.n];
            for (list, role) in [(&r.hollow, Role::Hollow), (&r.solid, Role::Solid)] {
                for &v in list {
                    let slot = roles.get_mut(v).ok_or_else(|| {
                        FormatError::Invalid(format!("role for unknown vertex {v}"))
                    })?;
                    if slot.replace(role).is_some() {
                        return Err(FormatError::Invalid(format!("vertex {v} has two roles")));
                    }
                }
            }
            let roles = roles
                .into_iter()
                .enumerate()
                .map(|(v, r)| {
                    r.ok_or_else(|| FormatError::Invalid(format!("vertex {v} has no role")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            g.with_roles(roles)
                .map_err(|e| FormatError::Invalid(e.to_string()))
        }
    }
}

#[derive(Serialize)]
struct ConfigDoc<'a> {
    flags: Vec<[usize; 2]>,
    line_labels: Vec<&'a str>,
    lines: usize,
    point_labels: Vec<&'a str>,
    points: usize,
}

/// `{"flags":[[point,line],…],"line_labels":[…],"lines":…,"point_labels":[…],"points":…}`.
pub fn config_to_json(c: &IncidenceConfiguration) -> String {
    let doc = ConfigDoc {
        flags: c.flags().map(|(p, l)| [p, l]).collect(),
        line_labels: (0..c.line_count()).map(|l| c.line_label(l)).collect(),
        lines: c.line_count(),
        point_labels: (0..c.point_count()).map(|p| c.point_label(p)).collect(),
        points: c.point_count(),
    };
    serde_json::to_string(&doc).expect("configuration documents serialize")
}

// ---------------------------------------------------------------------------
// embeddings

/// 17 significant digits: enough to round-trip any finite `f64`.
pub fn format_f64(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        "null".to_string()
    }
}

fn raw_number(x: f64) -> Box<RawValue> {
    RawValue::from_string(format_f64(x)).expect("formatted number is valid JSON")
}

#[derive(Serialize)]
struct ParamsOut {
    h: Box<RawValue>,
    theta: Box<RawValue>,
}

#[derive(Serialize)]
struct VertexOut {
    id: usize,
    role: &'static str,
    color: &'static str,
    x: Box<RawValue>,
    y: Box<RawValue>,
}

#[derive(Serialize)]
struct EmbeddingOut {
    params: Option<ParamsOut>,
    vertices: Vec<VertexOut>,
    edges: Vec<[usize; 2]>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexIn {
    id: usize,
    role: String,
    color: Color,
    x: f64,
    y: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EmbeddingIn {
    params: Option<ConstructionParams>,
    vertices: Vec<VertexIn>,
    edges: Vec<[usize; 2]>,
}

/// `{"params":{"h":…,"theta":…},"vertices":[{"id","role","color","x","y"},…],"edges":[[a,b],…]}`
/// with vertices ascending by id and edges sorted.
pub fn embedding_to_json(e: &Embedding) -> String {
    let g = e.graph();
    let doc = EmbeddingOut {
        params: e.params().map(|p| ParamsOut {
            h: raw_number(p.h),
            theta: raw_number(p.theta),
        }),
        vertices: (0..e.vertex_count())
            .map(|v| VertexOut {
                id: v,
                role: g.role(v).map_or("none", Role::as_str),
                color: e.color(v).as_str(),
                x: raw_number(e.coord(v).x),
                y: raw_number(e.coord(v).y),
            })
            .collect(),
        edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
    };
    serde_json::to_string(&doc).expect("embedding documents serialize")
}

pub fn embedding_from_json(text: &str) -> Result<Embedding, FormatError> {
    let doc: EmbeddingIn = serde_json::from_str(text)?;
    let n = doc.vertices.len();
    let mut slots: Vec<Option<VertexIn>> = (0..n).map(|_| None).collect();
    for v in doc.vertices {
        let id = v.id;
        let slot = slots
            .get_mut(id)
            .ok_or_else(|| FormatError::Invalid(format!("vertex id {id} outside 0..{n}")))?;
        if slot.replace(v).is_some() {
            return Err(FormatError::Invalid(format!("vertex id {id} repeated")));
        }
    }
    let vertices: Vec<VertexIn> = slots
        .into_iter()
        .map(|v| v.expect("ids are dense"))
        .collect();

    let roles = vertices
        .iter()
        .map(|v| match v.role.as_str() {
            "solid" => Ok(Some(Role::Solid)),
            "hollow" => Ok(Some(Role::Hollow)),
            "none" => Ok(None),
            other => Err(FormatError::Invalid(format!("unknown role {other:?}"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut graph = Graph::new(n, doc.edges.iter().map(|e| (e[0], e[1])))
        .map_err(|e| FormatError::Invalid(e.to_string()))?;
    if roles.iter().any(Option::is_some) {
        let roles = roles
            .into_iter()
            .enumerate()
            .map(|(v, r)| r.ok_or_else(|| FormatError::Invalid(format!("vertex {v} has no role"))))
            .collect::<Result<Vec<_>, _>>()?;
        graph = graph
            .with_roles(roles)
            .map_err(|e| FormatError::Invalid(e.to_string()))?;
    }
    let coords = vertices.iter().map(|v| Point::new(v.x, v.y)).collect();
    let colors = vertices.iter().map(|v| v.color).collect();
    Embedding::new(graph, coords, colors, doc.params)
        .map_err(|e| FormatError::Invalid(e.to_string()))
}

// ---------------------------------------------------------------------------
// sweep CSV

pub const SWEEP_CSV_HEADER: [&str; 5] =
    ["h", "theta", "status", "min_separation", "accidental_pairs"];

/// One row per grid point in h-major order under the fixed header.
/// Quantities that were not computed are left empty.
pub fn sweep_to_csv(map: &FeasibilityMap) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(SWEEP_CSV_HEADER).expect("in-memory write");
    for p in &map.points {
        w.write_record([
            p.h.to_string(),
            p.theta.to_string(),
            p.status.to_string(),
            p.min_separation.map(|d| d.to_string()).unwrap_or_default(),
            p.accidental_pairs
                .map(|k| k.to_string())
                .unwrap_or_default(),
        ])
        .expect("in-memory write");
    }
    let bytes = w.into_inner().expect("in-memory flush");
    String::from_utf8(bytes).expect("CSV output is ASCII")
}

/// Writes through a temporary file in the target directory and renames it
/// into place.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<(), FormatError> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| FormatError::Io(e.error))?;
    Ok(())
}
