//! Canonical serialization for graphs, labelings, instances and certificates,
//! plus DOT export.
//!
//! Documents are versioned JSON with a fixed field order and sorted arc
//! order, so equal values encode byte-identically and `decode . encode` is
//! the identity. Every structural invariant is re-checked on load.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::certify::{
    BaseColouring, Certificate, DomainTable, FaceRefutation, RefutationRow,
};
use crate::construct::{
    CaseTag, ConstructedInstance, Provenance, ProvenanceFace,
};
use crate::graph::{FaceId, PlaneGraph};
use crate::perm::{parse_cycles, GroupTable, Permutation};
use crate::slabel::{Arc, Colouring, SLabeledGraph};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("JSON parse error at byte {offset} (line {line}, column {column}): {message}")]
    Json {
        offset: usize,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unsupported schema version {0:?} (expected {SCHEMA_VERSION:?})")]
    Version(String),
    #[error("invalid document: {0}")]
    Invalid(String),
}

fn invalid(e: impl std::fmt::Display) -> FormatError {
    FormatError::Invalid(e.to_string())
}

/// Any value this library reads or writes as a file.
#[derive(Debug, Clone)]
pub enum Document {
    SLabeled(SLabeledGraph),
    Plane(PlaneGraph),
    Instance(ConstructedInstance),
    Certificate(Certificate),
    EdgeList(EdgeListInput),
}

/// Adapter input: an edge list with per-edge attributes and an optional group
/// table for gains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeListInput {
    pub vertices: usize,
    pub edges: Vec<EdgeAttributes>,
    pub group: Option<GroupTable>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeAttributes {
    pub tail: usize,
    pub head: usize,
    pub sign: Option<i8>,
    pub weight: Option<usize>,
    pub gain: Option<usize>,
}

// ---------------------------------------------------------------------------
// Raw JSON mirrors. Field order here is the canonical output order.
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct Envelope {
    schema_version: String,
    #[serde(flatten)]
    doc: RawDocument,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type")]
enum RawDocument {
    #[serde(rename = "slabeled")]
    SLabeled(RawSLabeled),
    #[serde(rename = "plane_graph")]
    Plane(RawPlane),
    #[serde(rename = "instance")]
    Instance(RawInstance),
    #[serde(rename = "certificate")]
    Certificate(RawCertificate),
    #[serde(rename = "edge_list")]
    EdgeList(RawEdgeList),
}

/// Permutations are accepted as an images array or a cycles string; images is
/// the canonical output form.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum LabelRepr {
    Images { images: Vec<usize> },
    Cycles { cycles: String },
}

impl LabelRepr {
    fn of(p: &Permutation) -> Self {
        LabelRepr::Images {
            images: p.images().to_vec(),
        }
    }

    fn resolve(&self, k: usize) -> Result<Permutation, FormatError> {
        match self {
            LabelRepr::Images { images } => {
                Permutation::from_images(images.clone()).map_err(invalid)
            }
            LabelRepr::Cycles { cycles } => parse_cycles(cycles, k).map_err(invalid),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RawArc {
    tail: usize,
    head: usize,
    label: LabelRepr,
}

#[derive(Serialize, Deserialize)]
struct RawSLabeled {
    k: usize,
    vertices: usize,
    arcs: Vec<RawArc>,
}

#[derive(Serialize, Deserialize)]
struct RawPlane {
    vertices: usize,
    edges: Vec<(usize, usize)>,
    rotations: Vec<Vec<usize>>,
    outer_face: FaceId,
}

#[derive(Serialize, Deserialize)]
struct RawInstance {
    #[serde(flatten)]
    slabeled: RawSLabeled,
    provenance: RawProvenance,
}

#[derive(Serialize, Deserialize)]
struct RawProvenance {
    case: CaseTag,
    conjugator: LabelRepr,
    base_vertices: usize,
    faces: Vec<RawProvenanceFace>,
}

#[derive(Serialize, Deserialize)]
struct RawProvenanceFace {
    face: FaceId,
    colouring: Vec<usize>,
    v: [usize; 3],
    a: usize,
    b: usize,
    c: usize,
    z: Option<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawCertificate {
    digest: String,
    base_colourings: Vec<RawBaseColouring>,
    faces: Vec<RawFaceRefutation>,
}

#[derive(Serialize, Deserialize)]
struct RawBaseColouring {
    face: FaceId,
    colouring: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawFaceRefutation {
    face: FaceId,
    a: usize,
    b: usize,
    c: usize,
    domains: RawDomains,
    rows: Vec<RawRow>,
}

#[derive(Serialize, Deserialize)]
struct RawDomains {
    a: Vec<usize>,
    b: Vec<usize>,
    c: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawRow {
    a: usize,
    b: usize,
    c: usize,
    violated_arc: (usize, usize),
    lhs: usize,
    rhs: usize,
}

#[derive(Serialize, Deserialize)]
struct RawEdgeList {
    vertices: usize,
    edges: Vec<RawEdgeAttr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    group: Option<RawGroup>,
}

#[derive(Serialize, Deserialize)]
struct RawEdgeAttr {
    tail: usize,
    head: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sign: Option<i8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weight: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    gain: Option<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawGroup {
    product: Vec<Vec<usize>>,
    identity: usize,
}

// ---------------------------------------------------------------------------
// Domain -> raw
// ---------------------------------------------------------------------------

fn raw_slabeled(l: &SLabeledGraph) -> RawSLabeled {
    RawSLabeled {
        k: l.k(),
        vertices: l.vertex_count(),
        arcs: l
            .arcs()
            .iter()
            .map(|a| RawArc {
                tail: a.tail,
                head: a.head,
                label: LabelRepr::of(&a.label),
            })
            .collect(),
    }
}

fn raw_plane(g: &PlaneGraph) -> RawPlane {
    RawPlane {
        vertices: g.vertex_count(),
        edges: g.edges(),
        rotations: g.rotations().to_vec(),
        outer_face: g.outer_face(),
    }
}

fn raw_instance(inst: &ConstructedInstance) -> RawInstance {
    let p = &inst.provenance;
    RawInstance {
        slabeled: raw_slabeled(&inst.labeled),
        provenance: RawProvenance {
            case: p.case,
            conjugator: LabelRepr::of(&p.conjugator),
            base_vertices: p.base_vertices,
            faces: p
                .faces
                .iter()
                .map(|f| RawProvenanceFace {
                    face: f.face,
                    colouring: f.colouring.0.clone(),
                    v: f.v,
                    a: f.a,
                    b: f.b,
                    c: f.c,
                    z: f.z,
                })
                .collect(),
        },
    }
}

fn raw_certificate(c: &Certificate) -> RawCertificate {
    RawCertificate {
        digest: c.digest.clone(),
        base_colourings: c
            .base_colourings
            .iter()
            .map(|b| RawBaseColouring {
                face: b.face,
                colouring: b.colouring.0.clone(),
            })
            .collect(),
        faces: c
            .faces
            .iter()
            .map(|f| RawFaceRefutation {
                face: f.face,
                a: f.a,
                b: f.b,
                c: f.c,
                domains: RawDomains {
                    a: f.domains.a.clone(),
                    b: f.domains.b.clone(),
                    c: f.domains.c.clone(),
                },
                rows: f
                    .rows
                    .iter()
                    .map(|r| RawRow {
                        a: r.a,
                        b: r.b,
                        c: r.c,
                        violated_arc: r.violated_arc,
                        lhs: r.lhs,
                        rhs: r.rhs,
                    })
                    .collect(),
            })
            .collect(),
    }
}

fn raw_edge_list(e: &EdgeListInput) -> RawEdgeList {
    RawEdgeList {
        vertices: e.vertices,
        edges: e
            .edges
            .iter()
            .map(|a| RawEdgeAttr {
                tail: a.tail,
                head: a.head,
                sign: a.sign,
                weight: a.weight,
                gain: a.gain,
            })
            .collect(),
        group: e.group.as_ref().map(|g| RawGroup {
            product: g.product.clone(),
            identity: g.identity,
        }),
    }
}

fn to_raw(doc: &Document) -> RawDocument {
    match doc {
        Document::SLabeled(l) => RawDocument::SLabeled(raw_slabeled(l)),
        Document::Plane(g) => RawDocument::Plane(raw_plane(g)),
        Document::Instance(i) => RawDocument::Instance(raw_instance(i)),
        Document::Certificate(c) => RawDocument::Certificate(raw_certificate(c)),
        Document::EdgeList(e) => RawDocument::EdgeList(raw_edge_list(e)),
    }
}

// ---------------------------------------------------------------------------
// Raw -> domain, re-validating every invariant
// ---------------------------------------------------------------------------

fn slabeled_from_raw(raw: RawSLabeled) -> Result<SLabeledGraph, FormatError> {
    let arcs = raw
        .arcs
        .iter()
        .map(|a| {
            Ok(Arc {
                tail: a.tail,
                head: a.head,
                label: a.label.resolve(raw.k)?,
            })
        })
        .collect::<Result<Vec<_>, FormatError>>()?;
    SLabeledGraph::new(raw.vertices, raw.k, arcs).map_err(invalid)
}

fn plane_from_raw(raw: RawPlane) -> Result<PlaneGraph, FormatError> {
    if raw.rotations.len() != raw.vertices {
        return Err(FormatError::Invalid(format!(
            "{} rotations for {} vertices",
            raw.rotations.len(),
            raw.vertices
        )));
    }
    let g = PlaneGraph::new(raw.rotations, raw.outer_face).map_err(invalid)?;
    if g.edges() != raw.edges {
        return Err(FormatError::Invalid(
            "edge list disagrees with the rotation system".into(),
        ));
    }
    Ok(g)
}

fn instance_from_raw(raw: RawInstance) -> Result<ConstructedInstance, FormatError> {
    let labeled = slabeled_from_raw(raw.slabeled)?;
    let p = raw.provenance;
    let conjugator = p.conjugator.resolve(labeled.k())?;
    if conjugator.k() != labeled.k() {
        return Err(FormatError::Invalid("conjugator alphabet mismatch".into()));
    }
    if p.base_vertices > labeled.vertex_count() {
        return Err(FormatError::Invalid("base_vertices exceeds vertex count".into()));
    }
    let n = labeled.vertex_count();
    let faces = p
        .faces
        .into_iter()
        .map(|f| {
            if f.colouring.len() != p.base_vertices {
                return Err(FormatError::Invalid(format!(
                    "face {}: colouring length {} != base_vertices {}",
                    f.face,
                    f.colouring.len(),
                    p.base_vertices
                )));
            }
            if f.colouring.iter().any(|&c| c < 1 || c > labeled.k()) {
                return Err(FormatError::Invalid("colour out of range".into()));
            }
            for x in [f.a, f.b, f.c].into_iter().chain(f.v).chain(f.z) {
                if x >= n {
                    return Err(FormatError::Invalid(format!("vertex {x} out of range")));
                }
            }
            Ok(ProvenanceFace {
                face: f.face,
                colouring: Colouring(f.colouring),
                v: f.v,
                a: f.a,
                b: f.b,
                c: f.c,
                z: f.z,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ConstructedInstance {
        labeled,
        provenance: Provenance {
            case: p.case,
            conjugator,
            base_vertices: p.base_vertices,
            faces,
        },
    })
}

fn certificate_from_raw(raw: RawCertificate) -> Result<Certificate, FormatError> {
    Ok(Certificate {
        digest: raw.digest,
        base_colourings: raw
            .base_colourings
            .into_iter()
            .map(|b| BaseColouring {
                face: b.face,
                colouring: Colouring(b.colouring),
            })
            .collect(),
        faces: raw
            .faces
            .into_iter()
            .map(|f| FaceRefutation {
                face: f.face,
                a: f.a,
                b: f.b,
                c: f.c,
                domains: DomainTable {
                    a: f.domains.a,
                    b: f.domains.b,
                    c: f.domains.c,
                },
                rows: f
                    .rows
                    .into_iter()
                    .map(|r| RefutationRow {
                        a: r.a,
                        b: r.b,
                        c: r.c,
                        violated_arc: r.violated_arc,
                        lhs: r.lhs,
                        rhs: r.rhs,
                    })
                    .collect(),
            })
            .collect(),
    })
}

fn edge_list_from_raw(raw: RawEdgeList) -> Result<EdgeListInput, FormatError> {
    for e in &raw.edges {
        if e.tail >= raw.vertices || e.head >= raw.vertices {
            return Err(FormatError::Invalid(format!(
                "edge {}-{} out of range for {} vertices",
                e.tail, e.head, raw.vertices
            )));
        }
        if let Some(s) = e.sign {
            if s != 1 && s != -1 {
                return Err(FormatError::Invalid(format!("sign {s} must be 1 or -1")));
            }
        }
    }
    let group = raw
        .group
        .map(|g| GroupTable::new(g.product, g.identity))
        .transpose()
        .map_err(invalid)?;
    Ok(EdgeListInput {
        vertices: raw.vertices,
        edges: raw
            .edges
            .into_iter()
            .map(|e| EdgeAttributes {
                tail: e.tail,
                head: e.head,
                sign: e.sign,
                weight: e.weight,
                gain: e.gain,
            })
            .collect(),
        group,
    })
}

// ---------------------------------------------------------------------------
// Public surface
// ---------------------------------------------------------------------------

/// Canonical bytes of a document: pretty JSON with fixed key order and a
/// trailing newline. Equal values encode identically.
pub fn encode(doc: &Document) -> Vec<u8> {
    let envelope = Envelope {
        schema_version: SCHEMA_VERSION.to_string(),
        doc: to_raw(doc),
    };
    let mut bytes = serde_json::to_vec_pretty(&envelope).expect("document serialization");
    bytes.push(b'\n');
    bytes
}

/// Parses and structurally validates a document.
pub fn decode(bytes: &[u8]) -> Result<Document, FormatError> {
    let envelope: Envelope = serde_json::from_slice(bytes).map_err(|e| json_error(bytes, &e))?;
    if envelope.schema_version != SCHEMA_VERSION {
        return Err(FormatError::Version(envelope.schema_version));
    }
    match envelope.doc {
        RawDocument::SLabeled(raw) => Ok(Document::SLabeled(slabeled_from_raw(raw)?)),
        RawDocument::Plane(raw) => Ok(Document::Plane(plane_from_raw(raw)?)),
        RawDocument::Instance(raw) => Ok(Document::Instance(instance_from_raw(raw)?)),
        RawDocument::Certificate(raw) => Ok(Document::Certificate(certificate_from_raw(raw)?)),
        RawDocument::EdgeList(raw) => Ok(Document::EdgeList(edge_list_from_raw(raw)?)),
    }
}

fn json_error(bytes: &[u8], e: &serde_json::Error) -> FormatError {
    let (line, column) = (e.line(), e.column());
    let mut offset = 0;
    for (i, l) in bytes.split(|&b| b == b'\n').enumerate() {
        if i + 1 == line {
            offset += column.saturating_sub(1);
            break;
        }
        offset += l.len() + 1;
    }
    FormatError::Json {
        offset,
        line,
        column,
        message: e.to_string(),
    }
}

/// Hex SHA-256 of the canonical encoding of the bare labeled graph; binds
/// certificates to their instance.
pub fn digest_slabeled(l: &SLabeledGraph) -> String {
    let envelope = Envelope {
        schema_version: SCHEMA_VERSION.to_string(),
        doc: RawDocument::SLabeled(raw_slabeled(l)),
    };
    let mut bytes = serde_json::to_vec_pretty(&envelope).expect("document serialization");
    bytes.push(b'\n');
    let digest = Sha256::digest(&bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// DOT export following the figure convention: identity arcs are drawn as
/// plain undirected edges, labeled arcs as directed edges annotated with
/// cycle notation.
pub fn to_dot(l: &SLabeledGraph) -> String {
    let mut out = String::from("digraph slabeled {\n  node [shape=circle];\n");
    for a in l.arcs() {
        if a.label.is_identity() {
            out.push_str(&format!("  {} -> {} [dir=none];\n", a.tail, a.head));
        } else {
            out.push_str(&format!(
                "  {} -> {} [label=\"{}\"];\n",
                a.tail, a.head, a.label
            ));
        }
    }
    out.push_str("}\n");
    out
}

/// Undirected DOT export of a plane graph.
pub fn plane_to_dot(g: &PlaneGraph) -> String {
    let mut out = String::from("graph plane {\n  node [shape=circle];\n");
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}
