//! Construction of the non-4-colourable labeled planar instances: a uniquely
//! 4-colourable stacked triangulation with 24 faces, a bijection between its
//! faces and its 24 colourings (with fix-up vertices where the pairing does
//! not put colours {1,2,3} on the face), and per-face gadgets whose labeled
//! arcs block every colouring.

use thiserror::Error;

use crate::graph::{FaceId, GraphError, PlaneGraph};
use crate::perm::{
    conjugacy_class_rep, identity, parse_cycles, symmetric_group, PermError, Permutation,
};
use crate::slabel::{relabel_colours, Arc, Colouring, SLabeledGraph, SlabelError};
use crate::solver::{enumerate_colourings, SolveError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Slabel(#[from] SlabelError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("expected a permutation of [4], got alphabet {0}")]
    NotS4(usize),
    #[error("the identity admits no counterexample")]
    NoWitness,
    #[error("internal construction invariant failed: {0}")]
    Internal(String),
}

/// Number of designated faces, equal to the number of 4-colourings of a
/// uniquely 4-colourable graph.
pub const DESIGNATED_FACES: usize = 24;

const STACKINGS: usize = 11;

/// One designated face paired with its colouring. `v[i]` is the face vertex
/// coloured `i + 1`; `z` is the fix-up vertex when the original pairing had to
/// be re-designated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceEntry {
    pub face: FaceId,
    pub colouring: Colouring,
    pub v: [usize; 3],
    pub z: Option<usize>,
}

/// The bijection between 24 designated faces and the 24 colourings, in
/// pairing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceColouringMap {
    pub entries: Vec<FaceEntry>,
}

impl FaceColouringMap {
    pub fn designated_faces(&self) -> Vec<FaceId> {
        self.entries.iter().map(|e| e.face).collect()
    }
}

/// Record of one fix-up: the stacked vertex, the three sub-faces it created
/// and the one that took over the designation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixupRecord {
    pub original_face: FaceId,
    pub z: usize,
    pub subfaces: [FaceId; 3],
    pub designated: FaceId,
}

/// Output of [`lemma1_graph`].
#[derive(Debug, Clone)]
pub struct Lemma1 {
    pub graph: PlaneGraph,
    pub map: FaceColouringMap,
    pub fixups: Vec<FixupRecord>,
}

/// The inner triangle inserted into one designated face. `a` is adjacent to
/// `v1, v2`, `b` to `v1, v3` and `c` to `v2, v3`; the three are mutually
/// adjacent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GadgetRecord {
    pub face: FaceId,
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub z: Option<usize>,
}

/// Which labeled construction an instance came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum CaseTag {
    #[serde(rename = "c123")]
    C123,
    #[serde(rename = "c1234")]
    C1234,
}

impl CaseTag {
    pub fn label(&self) -> &'static str {
        match self {
            CaseTag::C123 => "(123)",
            CaseTag::C1234 => "(1234)",
        }
    }
}

/// Construction metadata carried next to a labeled instance so that
/// certificates can be produced and checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub case: CaseTag,
    /// The conjugating permutation applied on top of the base construction;
    /// identity for the plain builds.
    pub conjugator: Permutation,
    /// Vertices `0..base_vertices` form the uniquely 4-colourable core.
    pub base_vertices: usize,
    pub faces: Vec<ProvenanceFace>,
}

/// Per-face provenance: designated face, its colouring of the core (already
/// conjugated where applicable), the colour-role vertices and the gadget
/// triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProvenanceFace {
    pub face: FaceId,
    pub colouring: Colouring,
    pub v: [usize; 3],
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub z: Option<usize>,
}

/// A labeled instance together with its construction provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructedInstance {
    pub labeled: SLabeledGraph,
    pub provenance: Provenance,
}

/// External results that settle the remaining conjugacy classes; no
/// construction is produced for them here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Citation {
    pub permutation: Permutation,
    pub class_rep: Permutation,
    pub note: String,
}

/// Dispatch result of [`bad_witness`].
#[derive(Debug, Clone)]
pub enum BadWitness {
    Instance(Box<ConstructedInstance>),
    Citation(Citation),
}

/// The stacked triangulation with 24 faces: start from a triangle and stack a
/// vertex into the lowest-id triangular face, eleven times. 14 vertices, 36
/// edges, uniquely 4-colourable.
pub fn base_triangulation() -> PlaneGraph {
    let mut g = PlaneGraph::triangle();
    for _ in 0..STACKINGS {
        let lowest = g.faces()[0].id;
        g = g.stack_vertex(lowest).expect("stacked faces stay triangular").0;
    }
    g
}

/// Pairs the 24 faces of the base triangulation (ascending face id) with its
/// 24 colourings (ascending colour vectors), then fixes up every face whose
/// paired colouring does not put `{1,2,3}` on it: a vertex is stacked inside,
/// every colouring extends to it with its unique forced colour, and the one
/// sub-face coloured `{1,2,3}` takes over the designation.
pub fn lemma1_graph() -> Result<Lemma1, ConstructError> {
    let mut g = base_triangulation();
    let all_id = SLabeledGraph::all_id(&g.to_simple(), 4)?;
    let enumeration = enumerate_colourings(&all_id, 10 * DESIGNATED_FACES)?;
    let mut colourings: Vec<Vec<usize>> = enumeration
        .colourings
        .iter()
        .map(|c| c.0.clone())
        .collect();
    if colourings.len() != DESIGNATED_FACES {
        return Err(ConstructError::Internal(format!(
            "base triangulation has {} colourings, expected {DESIGNATED_FACES}",
            colourings.len()
        )));
    }
    let faces: Vec<FaceId> = g.faces().iter().map(|w| w.id).collect();
    let mut designated: Vec<FaceId> = faces.clone();
    let mut zs: Vec<Option<usize>> = vec![None; DESIGNATED_FACES];
    let mut fixups = Vec::new();

    for i in 0..DESIGNATED_FACES {
        let walk = g.face(designated[i])?;
        let on_face: Vec<usize> = walk.vertices.iter().map(|&v| colourings[i][v]).collect();
        if is_one_two_three(&on_face) {
            continue;
        }
        let (stacked, z) = g.stack_vertex(designated[i])?;
        g = stacked;
        // The stacked vertex sees three distinct colours in every colouring;
        // colours sum to 10 over {1,2,3,4}.
        for col in colourings.iter_mut() {
            let seen: usize = walk.vertices.iter().map(|&v| col[v]).sum();
            col.push(10 - seen);
        }
        let subfaces: Vec<FaceId> = g
            .faces()
            .iter()
            .filter(|w| w.vertices.contains(&z))
            .map(|w| w.id)
            .collect();
        let chosen: Vec<FaceId> = subfaces
            .iter()
            .copied()
            .filter(|&f| {
                let w = g.face(f).expect("sub-face exists");
                let cols: Vec<usize> = w.vertices.iter().map(|&v| colourings[i][v]).collect();
                is_one_two_three(&cols)
            })
            .collect();
        if subfaces.len() != 3 || chosen.len() != 1 {
            return Err(ConstructError::Internal(format!(
                "fix-up of face {} produced {} sub-faces, {} usable",
                designated[i],
                subfaces.len(),
                chosen.len()
            )));
        }
        fixups.push(FixupRecord {
            original_face: designated[i],
            z,
            subfaces: [subfaces[0], subfaces[1], subfaces[2]],
            designated: chosen[0],
        });
        designated[i] = chosen[0];
        zs[i] = Some(z);
    }

    let n = g.vertex_count();
    let entries = (0..DESIGNATED_FACES)
        .map(|i| {
            let colouring = Colouring(colourings[i].clone());
            debug_assert_eq!(colouring.len(), n);
            let walk = g.face(designated[i])?;
            let mut v = [usize::MAX; 3];
            for &u in &walk.vertices {
                v[colourings[i][u] - 1] = u;
            }
            Ok(FaceEntry {
                face: designated[i],
                colouring,
                v,
                z: zs[i],
            })
        })
        .collect::<Result<Vec<_>, ConstructError>>()?;
    Ok(Lemma1 {
        graph: g,
        map: FaceColouringMap { entries },
        fixups,
    })
}

fn is_one_two_three(colours: &[usize]) -> bool {
    let mut sorted = colours.to_vec();
    sorted.sort_unstable();
    sorted == [1, 2, 3]
}

/// Inserts the inner triangle `a b c` with six spokes into every designated
/// face, producing seven triangular faces per gadget (the octahedral disk
/// `(v1,v2,a) (v2,c,a) (v2,v3,c) (v3,b,c) (v3,v1,b) (v1,a,b) (a,c,b)` when
/// the face walk runs `v1 -> v2 -> v3`, its mirror otherwise).
pub fn insert_gadgets(
    g_prime: &PlaneGraph,
    map: &FaceColouringMap,
) -> Result<(PlaneGraph, Vec<GadgetRecord>), ConstructError> {
    let mut rotations: Vec<Vec<usize>> = g_prime.rotations().to_vec();
    let mut records = Vec::with_capacity(map.entries.len());

    for entry in &map.entries {
        let walk = g_prime.face(entry.face)?;
        if walk.len() != 3 {
            return Err(GraphError::NotTriangularFace(entry.face).into());
        }
        let w = [walk.vertices[0], walk.vertices[1], walk.vertices[2]];
        let base = rotations.len();
        let (a, b, c) = (base, base + 1, base + 2);
        // Walk slots: slot i sits between w[i] and w[(i+1) % 3]. Roles by
        // adjacency: a joins v1 v2, b joins v1 v3, c joins v2 v3.
        let role_pairs = [
            sorted_pair(entry.v[0], entry.v[1]),
            sorted_pair(entry.v[0], entry.v[2]),
            sorted_pair(entry.v[1], entry.v[2]),
        ];
        let mut slot_vertex = [usize::MAX; 3];
        for slot in 0..3 {
            let pair = sorted_pair(w[slot], w[(slot + 1) % 3]);
            let role = role_pairs
                .iter()
                .position(|&p| p == pair)
                .ok_or_else(|| {
                    ConstructError::Internal(format!(
                        "face {} walk does not match its colour roles",
                        entry.face
                    ))
                })?;
            slot_vertex[slot] = [a, b, c][role];
        }
        let [x01, x12, x20] = slot_vertex;
        // Rotations of the disk interior; `from_parts` re-validates in debug
        // builds.
        let mut rot_of = vec![Vec::new(); 3];
        rot_of[x01 - base] = vec![x12, w[1], w[0], x20];
        rot_of[x12 - base] = vec![w[1], x01, x20, w[2]];
        rot_of[x20 - base] = vec![x01, w[0], w[2], x12];
        rotations.extend(rot_of);
        for (at, after, pair) in [
            (w[1], w[0], [x01, x12]),
            (w[2], w[1], [x12, x20]),
            (w[0], w[2], [x20, x01]),
        ] {
            let pos = rotations[at]
                .iter()
                .position(|&y| y == after)
                .ok_or_else(|| ConstructError::Internal("walk arc missing".into()))?;
            rotations[at].splice(pos + 1..pos + 1, pair);
        }
        records.push(GadgetRecord {
            face: entry.face,
            a,
            b,
            c,
            z: entry.z,
        });
    }
    let g = PlaneGraph::new(rotations, g_prime.outer_face())?;
    Ok((g, records))
}

fn sorted_pair(x: usize, y: usize) -> (usize, usize) {
    (x.min(y), x.max(y))
}

fn assemble(
    case: CaseTag,
    lem: &Lemma1,
    g: &PlaneGraph,
    records: &[GadgetRecord],
    special: Vec<(usize, usize, Permutation)>,
) -> Result<ConstructedInstance, ConstructError> {
    let k = 4;
    let id = identity(k)?;
    let mut by_edge: std::collections::BTreeMap<(usize, usize), Arc> = std::collections::BTreeMap::new();
    for (tail, head, label) in special {
        let prev = by_edge.insert(sorted_pair(tail, head), Arc { tail, head, label });
        if prev.is_some() {
            return Err(ConstructError::Internal(format!(
                "two labeled arcs on edge {tail}-{head}"
            )));
        }
    }
    let arcs = g
        .edges()
        .iter()
        .map(|&(u, v)| match by_edge.remove(&(u, v)) {
            Some(arc) => arc,
            None => Arc {
                tail: u,
                head: v,
                label: id.clone(),
            },
        })
        .collect();
    if !by_edge.is_empty() {
        return Err(ConstructError::Internal(
            "labeled arc on a non-existent edge".into(),
        ));
    }
    let labeled = SLabeledGraph::new(g.vertex_count(), k, arcs)?;
    let faces = lem
        .map
        .entries
        .iter()
        .zip(records)
        .map(|(e, r)| ProvenanceFace {
            face: e.face,
            colouring: e.colouring.clone(),
            v: e.v,
            a: r.a,
            b: r.b,
            c: r.c,
            z: r.z,
        })
        .collect();
    Ok(ConstructedInstance {
        labeled,
        provenance: Provenance {
            case,
            conjugator: identity(k)?,
            base_vertices: lem.graph.vertex_count(),
            faces,
        },
    })
}

/// The labeled instance for `S = {id, (123)}`: every edge identity except the
/// three inner-triangle arcs of each gadget, oriented `(b,a) (c,b) (a,c)` and
/// labeled `(123)`. Not 4-colourable.
pub fn build_c123() -> Result<ConstructedInstance, ConstructError> {
    let lem = lemma1_graph()?;
    let (g, records) = insert_gadgets(&lem.graph, &lem.map)?;
    let sigma = parse_cycles("(123)", 4)?;
    let special = records
        .iter()
        .flat_map(|r| {
            [
                (r.b, r.a, sigma.clone()),
                (r.c, r.b, sigma.clone()),
                (r.a, r.c, sigma.clone()),
            ]
        })
        .collect();
    assemble(CaseTag::C123, &lem, &g, &records, special)
}

/// The labeled instance for `S = {id, (1234)}`: per gadget the four arcs
/// `(v2,a) (c,a) (c,b) (v3,c)` are labeled `(1234)`, everything else is
/// identity (including the edge `a-b`). Not 4-colourable.
pub fn build_c1234() -> Result<ConstructedInstance, ConstructError> {
    let lem = lemma1_graph()?;
    let (g, records) = insert_gadgets(&lem.graph, &lem.map)?;
    let sigma = parse_cycles("(1234)", 4)?;
    let special = lem
        .map
        .entries
        .iter()
        .zip(&records)
        .flat_map(|(e, r)| {
            [
                (e.v[1], r.a, sigma.clone()),
                (r.c, r.a, sigma.clone()),
                (r.c, r.b, sigma.clone()),
                (e.v[2], r.c, sigma.clone()),
            ]
        })
        .collect();
    assemble(CaseTag::C1234, &lem, &g, &records, special)
}

/// Produces a non-4-colourable instance with labels in `{id, p}` when the
/// class of `p` admits one here (3-cycles and 4-cycles, by conjugating the
/// built cases), and a [`Citation`] for the classes of `(12)` and `(12)(34)`,
/// which are settled by external constructions.
pub fn bad_witness(p: &Permutation) -> Result<BadWitness, ConstructError> {
    if p.k() != 4 {
        return Err(ConstructError::NotS4(p.k()));
    }
    if p.is_identity() {
        return Err(ConstructError::NoWitness);
    }
    let rep = conjugacy_class_rep(p)?;
    let case = match rep.cycle_type().as_slice() {
        [3, 1] => CaseTag::C123,
        [4] => CaseTag::C1234,
        _ => {
            let note = if rep.cycle_type() == [2, 1, 1] {
                "delegated to citation: planar graphs that are not signed Z_4-colourable \
                 (Zhu) settle every S containing a transposition"
            } else {
                "delegated to citation: planar graphs that are not signed 4-colourable \
                 (Narboni and Tarkos) settle every S containing a double transposition"
            };
            return Ok(BadWitness::Citation(Citation {
                permutation: p.clone(),
                class_rep: rep,
                note: note.to_string(),
            }));
        }
    };
    let base = match case {
        CaseTag::C123 => build_c123()?,
        CaseTag::C1234 => build_c1234()?,
    };
    // Smallest conjugator taking the canonical representative to p.
    let s4 = symmetric_group(4)?;
    let pi = s4
        .members()
        .iter()
        .find(|pi| pi.conjugate(&rep).as_ref() == Ok(p))
        .ok_or_else(|| ConstructError::Internal("no conjugator found in S_4".into()))?;
    Ok(BadWitness::Instance(Box::new(conjugate_instance(&base, pi)?)))
}

/// Applies `relabel_colours` to a constructed instance and transports the
/// provenance along: colourings become `pi . f`.
pub fn conjugate_instance(
    inst: &ConstructedInstance,
    pi: &Permutation,
) -> Result<ConstructedInstance, ConstructError> {
    let labeled = relabel_colours(&inst.labeled, pi)?;
    let faces = inst
        .provenance
        .faces
        .iter()
        .map(|f| ProvenanceFace {
            colouring: f.colouring.map_colours(pi),
            ..f.clone()
        })
        .collect();
    Ok(ConstructedInstance {
        labeled,
        provenance: Provenance {
            case: inst.provenance.case,
            conjugator: pi.compose(&inst.provenance.conjugator)?,
            base_vertices: inst.provenance.base_vertices,
            faces,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::PermSet;
    use crate::slabel::labels_within;
    use crate::solver::{is_uniquely_k_colourable, solve, Status};

    #[test]
    fn base_triangulation_shape() {
        let g = base_triangulation();
        assert_eq!(g.vertex_count(), 14);
        assert_eq!(g.edge_count(), 36);
        assert_eq!(g.faces().len(), 24);
        assert!(g.is_triangulation());
        assert!(is_uniquely_k_colourable(&g.to_simple(), 4).unwrap());
    }

    #[test]
    fn lemma1_designations_and_fixups() {
        let lem = lemma1_graph().unwrap();
        assert_eq!(lem.map.entries.len(), 24);
        assert_eq!(
            lem.graph.vertex_count(),
            14 + lem.fixups.len(),
            "one stacked vertex per fix-up"
        );
        for e in &lem.map.entries {
            let walk = lem.graph.face(e.face).unwrap();
            let cols: Vec<usize> = walk.vertices.iter().map(|&v| e.colouring.get(v)).collect();
            assert!(is_one_two_three(&cols), "face {} not {{1,2,3}}", e.face);
            for i in 0..3 {
                assert_eq!(e.colouring.get(e.v[i]), i + 1);
            }
        }
        // The 24 colourings are pairwise distinct and exhaust the graph's
        // proper 4-colourings.
        let all_id = SLabeledGraph::all_id(&lem.graph.to_simple(), 4).unwrap();
        let mut listed: Vec<Colouring> =
            lem.map.entries.iter().map(|e| e.colouring.clone()).collect();
        listed.sort();
        listed.dedup();
        assert_eq!(listed.len(), 24);
        let enumerated = enumerate_colourings(&all_id, 100).unwrap();
        assert!(!enumerated.truncated);
        let mut expected = enumerated.colourings;
        expected.sort();
        assert_eq!(listed, expected);
        assert!(is_uniquely_k_colourable(&lem.graph.to_simple(), 4).unwrap());
        // Fix-ups designate the unique {1,2,3} sub-face.
        for fix in &lem.fixups {
            assert!(fix.subfaces.contains(&fix.designated));
        }
        // Designated faces are pairwise distinct.
        let mut faces = lem.map.designated_faces();
        faces.sort();
        faces.dedup();
        assert_eq!(faces.len(), 24);
    }

    #[test]
    fn gadget_insertion_shape() {
        let lem = lemma1_graph().unwrap();
        let nv = lem.graph.vertex_count();
        let ne = lem.graph.edge_count();
        let nf = lem.graph.faces().len();
        let (g, records) = insert_gadgets(&lem.graph, &lem.map).unwrap();
        assert_eq!(records.len(), 24);
        assert_eq!(g.vertex_count(), nv + 72);
        assert_eq!(g.edge_count(), ne + 24 * 9);
        assert_eq!(g.faces().len(), nf - 24 + 24 * 7);
        assert!(g.is_triangulation());
        for (e, r) in lem.map.entries.iter().zip(&records) {
            let [v1, v2, v3] = e.v;
            for (x, ys) in [
                (r.a, vec![v1, v2, r.b, r.c]),
                (r.b, vec![v1, v3, r.a, r.c]),
                (r.c, vec![v2, v3, r.a, r.b]),
            ] {
                let mut got = g.neighbours(x).to_vec();
                got.sort_unstable();
                let mut want = ys;
                want.sort_unstable();
                assert_eq!(got, want, "gadget vertex {x} of face {}", e.face);
            }
        }
    }

    #[test]
    fn c123_labels() {
        let inst = build_c123().unwrap();
        let sigma = parse_cycles("(123)", 4).unwrap();
        let labeled_count = inst
            .labeled
            .arcs()
            .iter()
            .filter(|a| a.label == sigma)
            .count();
        assert_eq!(labeled_count, 72);
        assert!(inst.labeled.arcs().iter().all(|a| a.label.is_identity() || a.label == sigma));
        let s = PermSet::new(4, [identity(4).unwrap(), sigma]).unwrap();
        assert!(labels_within(&inst.labeled, &s));
        let id_only = PermSet::new(4, [identity(4).unwrap()]).unwrap();
        assert!(!labels_within(&inst.labeled, &id_only));
        // Orientation of the inner triangles: (b,a), (c,b), (a,c).
        for f in &inst.provenance.faces {
            for (t, h) in [(f.b, f.a), (f.c, f.b), (f.a, f.c)] {
                let arc = inst.labeled.arc_on_edge(t, h).unwrap();
                assert_eq!((arc.tail, arc.head), (t, h));
            }
        }
    }

    #[test]
    fn c1234_labels() {
        let inst = build_c1234().unwrap();
        let sigma = parse_cycles("(1234)", 4).unwrap();
        let labeled_count = inst
            .labeled
            .arcs()
            .iter()
            .filter(|a| a.label == sigma)
            .count();
        assert_eq!(labeled_count, 96);
        for f in &inst.provenance.faces {
            let [_, v2, v3] = f.v;
            for (t, h) in [(v2, f.a), (f.c, f.a), (f.c, f.b), (v3, f.c)] {
                let arc = inst.labeled.arc_on_edge(t, h).unwrap();
                assert_eq!((arc.tail, arc.head), (t, h));
                assert_eq!(arc.label, sigma);
            }
            // a-b carries the identity.
            let ab = inst.labeled.arc_on_edge(f.a, f.b).unwrap();
            assert!(ab.label.is_identity());
        }
    }

    #[test]
    fn c123_is_unsat() {
        let inst = build_c123().unwrap();
        assert_eq!(solve(&inst.labeled).status, Status::Unsat);
    }

    /// In every 4-colouring of a stacked triangulation, each stacked vertex
    /// is forced: its earlier neighbours carry three distinct colours and the
    /// vertex takes the fourth.
    #[test]
    fn stacked_vertices_are_forced() {
        let g = base_triangulation();
        let all_id = SLabeledGraph::all_id(&g.to_simple(), 4).unwrap();
        let colourings = enumerate_colourings(&all_id, 100).unwrap().colourings;
        assert_eq!(colourings.len(), 24);
        for col in &colourings {
            for v in 3..g.vertex_count() {
                let mut earlier: Vec<usize> = g
                    .neighbours(v)
                    .iter()
                    .filter(|&&u| u < v)
                    .map(|&u| col.get(u))
                    .collect();
                earlier.sort_unstable();
                earlier.dedup();
                assert_eq!(earlier.len(), 3, "vertex {v} sees three earlier colours");
                assert!(!earlier.contains(&col.get(v)));
            }
        }
    }

    #[test]
    fn bad_witness_dispatch() {
        match bad_witness(&parse_cycles("(132)", 4).unwrap()).unwrap() {
            BadWitness::Instance(inst) => {
                let s = PermSet::new(
                    4,
                    [identity(4).unwrap(), parse_cycles("(132)", 4).unwrap()],
                )
                .unwrap();
                assert!(labels_within(&inst.labeled, &s));
                assert_eq!(solve(&inst.labeled).status, Status::Unsat);
            }
            BadWitness::Citation(_) => panic!("(132) must yield a construction"),
        }
        match bad_witness(&parse_cycles("(12)", 4).unwrap()).unwrap() {
            BadWitness::Citation(c) => {
                assert_eq!(c.class_rep, parse_cycles("(12)", 4).unwrap());
                assert!(c.note.contains("Zhu"));
            }
            BadWitness::Instance(_) => panic!("(12) is delegated"),
        }
        match bad_witness(&parse_cycles("(14)(23)", 4).unwrap()).unwrap() {
            BadWitness::Citation(c) => assert!(c.note.contains("Narboni")),
            BadWitness::Instance(_) => panic!("(12)(34) class is delegated"),
        }
        assert!(matches!(
            bad_witness(&identity(4).unwrap()),
            Err(ConstructError::NoWitness)
        ));
    }
}
