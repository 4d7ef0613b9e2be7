//! Plane graphs as combinatorial embeddings (rotation systems), face tracing
//! and triangle stacking.
//!
//! A face is identified by the lexicographically least directed edge on its
//! boundary walk, which keeps face ids stable across operations that do not
//! touch the face.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("no face with id {0}")]
    UnknownFace(FaceId),
    #[error("face {0} is not a triangle")]
    NotTriangularFace(FaceId),
}

/// Face id: the least directed edge `(tail, head)` on the face walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FaceId(pub usize, pub usize);

impl fmt::Display for FaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}>{})", self.0, self.1)
    }
}

/// Directed boundary walk of one face; `vertices[0] -> vertices[1]` is the
/// identifying arc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceWalk {
    pub id: FaceId,
    pub vertices: Vec<usize>,
}

impl FaceWalk {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Directed arcs around the walk.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }
}

/// A connected simple plane graph given by per-vertex cyclic neighbour orders.
///
/// The face-tracing rule: the arc `(u, v)` is followed by `(v, w)` where `w`
/// is the neighbour after `u` in the rotation at `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    rotations: Vec<Vec<usize>>,
    outer_face: FaceId,
}

impl PlaneGraph {
    /// Validates the rotation system: simple, symmetric, connected, and
    /// genus zero (Euler's formula).
    pub fn new(rotations: Vec<Vec<usize>>, outer_face: FaceId) -> Result<Self, GraphError> {
        let n = rotations.len();
        if n < 3 {
            return Err(GraphError::InvalidGraph(
                "a plane graph needs at least 3 vertices here".into(),
            ));
        }
        for (v, rot) in rotations.iter().enumerate() {
            let mut seen = vec![false; n];
            for &u in rot {
                if u >= n {
                    return Err(GraphError::InvalidGraph(format!(
                        "vertex {v} lists out-of-range neighbour {u}"
                    )));
                }
                if u == v {
                    return Err(GraphError::InvalidGraph(format!("loop at vertex {v}")));
                }
                if seen[u] {
                    return Err(GraphError::InvalidGraph(format!(
                        "vertex {v} lists neighbour {u} twice"
                    )));
                }
                seen[u] = true;
            }
        }
        for v in 0..n {
            for &u in &rotations[v] {
                if !rotations[u].contains(&v) {
                    return Err(GraphError::InvalidGraph(format!(
                        "edge {v}-{u} is not symmetric"
                    )));
                }
            }
        }
        let g = PlaneGraph {
            rotations,
            outer_face,
        };
        // Connectivity.
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &g.rotations[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        if count != n {
            return Err(GraphError::InvalidGraph("graph is not connected".into()));
        }
        let faces = g.faces();
        let (v, e, f) = (n as i64, g.edge_count() as i64, faces.len() as i64);
        if v - e + f != 2 {
            return Err(GraphError::InvalidEmbedding(format!(
                "Euler check failed: {v} - {e} + {f} != 2"
            )));
        }
        if !faces.iter().any(|w| w.id == outer_face) {
            return Err(GraphError::UnknownFace(outer_face));
        }
        Ok(g)
    }

    fn from_parts(rotations: Vec<Vec<usize>>, outer_face: FaceId) -> Self {
        let g = PlaneGraph {
            rotations,
            outer_face,
        };
        debug_assert!(PlaneGraph::new(g.rotations.clone(), g.outer_face).is_ok());
        g
    }

    /// K3 embedded with an inner face `(0>1)` and outer face `(0>2)`.
    pub fn triangle() -> Self {
        PlaneGraph::from_parts(vec![vec![1, 2], vec![2, 0], vec![0, 1]], FaceId(0, 2))
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rotations.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    pub fn outer_face(&self) -> FaceId {
        self.outer_face
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotations
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.rotations[v]
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        u < self.rotations.len() && self.rotations[u].contains(&v)
    }

    /// Undirected edges, normalized `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (v, rot) in self.rotations.iter().enumerate() {
            for &u in rot {
                if v < u {
                    out.push((v, u));
                }
            }
        }
        out.sort_unstable();
        out
    }

    fn next_after(&self, v: usize, u: usize) -> usize {
        let rot = &self.rotations[v];
        let pos = rot
            .iter()
            .position(|&x| x == u)
            .expect("arc endpoint must be a neighbour");
        rot[(pos + 1) % rot.len()]
    }

    fn trace_from(&self, start: (usize, usize)) -> Vec<(usize, usize)> {
        let mut walk = vec![start];
        let mut cur = start;
        loop {
            let next = (cur.1, self.next_after(cur.1, cur.0));
            if next == start {
                break;
            }
            walk.push(next);
            cur = next;
        }
        walk
    }

    /// All face walks, ascending by face id. Every directed edge lies on
    /// exactly one walk.
    pub fn faces(&self) -> Vec<FaceWalk> {
        let mut arcs: Vec<(usize, usize)> = Vec::new();
        for (v, rot) in self.rotations.iter().enumerate() {
            for &u in rot {
                arcs.push((v, u));
            }
        }
        arcs.sort_unstable();
        let mut visited = std::collections::HashSet::new();
        let mut out = Vec::new();
        for &arc in &arcs {
            if visited.contains(&arc) {
                continue;
            }
            let walk = self.trace_from(arc);
            for &a in &walk {
                visited.insert(a);
            }
            out.push(FaceWalk {
                id: FaceId(arc.0, arc.1),
                vertices: walk.iter().map(|&(t, _)| t).collect(),
            });
        }
        out
    }

    /// The face identified by `f`, if `f` is a valid face id.
    pub fn face(&self, f: FaceId) -> Result<FaceWalk, GraphError> {
        let FaceId(t, h) = f;
        if t >= self.rotations.len() || !self.rotations[t].contains(&h) {
            return Err(GraphError::UnknownFace(f));
        }
        let walk = self.trace_from((t, h));
        if walk.iter().min() != Some(&(t, h)) {
            return Err(GraphError::UnknownFace(f));
        }
        Ok(FaceWalk {
            id: f,
            vertices: walk.iter().map(|&(p, _)| p).collect(),
        })
    }

    /// True iff every face walk, the outer one included, has length 3.
    pub fn is_triangulation(&self) -> bool {
        self.faces().iter().all(|w| w.len() == 3)
    }

    /// Inserts a new vertex inside the triangular face `f` and joins it to the
    /// three corners, splitting `f` into three triangles. Returns the new
    /// graph and the new vertex id.
    pub fn stack_vertex(&self, f: FaceId) -> Result<(PlaneGraph, usize), GraphError> {
        let walk = self.face(f)?;
        if walk.len() != 3 {
            return Err(GraphError::NotTriangularFace(f));
        }
        let (u, v, w) = (walk.vertices[0], walk.vertices[1], walk.vertices[2]);
        let x = self.rotations.len();
        let mut rotations = self.rotations.clone();
        // Reverse walk order at the new vertex, and for every walk arc (p, q)
        // the new spoke goes right after p in the rotation at q. This is the
        // unique planar completion of the stacked disk.
        rotations.push(vec![u, w, v]);
        for (p, q) in [(u, v), (v, w), (w, u)] {
            let pos = rotations[q].iter().position(|&y| y == p).unwrap();
            rotations[q].insert(pos + 1, x);
        }
        Ok((PlaneGraph::from_parts(rotations, self.outer_face), x))
    }

    pub fn to_simple(&self) -> SimpleGraph {
        SimpleGraph::new(self.vertex_count(), self.edges()).expect("plane graph is simple")
    }
}

/// An abstract simple graph: a vertex count and a sorted list of edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut norm: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::InvalidGraph(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(GraphError::InvalidGraph(format!(
                    "edge {u}-{v} out of range for {n} vertices"
                )));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        let before = norm.len();
        norm.dedup();
        if norm.len() != before {
            return Err(GraphError::InvalidGraph("duplicate edge".into()));
        }
        Ok(SimpleGraph { n, edges: norm })
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        SimpleGraph::new(n, edges).expect("complete graph is simple")
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::InvalidGraph("cycle needs at least 3 vertices".into()));
        }
        SimpleGraph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_shape() {
        let g = PlaneGraph::triangle();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        let faces = g.faces();
        assert_eq!(faces.len(), 2);
        assert!(faces.iter().all(|w| w.len() == 3));
        assert!(g.is_triangulation());
        // Euler: 3 - 3 + 2 = 2 holds by construction (validated in new).
        assert_eq!(faces[0].id, FaceId(0, 1));
        assert_eq!(faces[1].id, FaceId(0, 2));
    }

    #[test]
    fn stack_into_triangle_gives_k4() {
        let g = PlaneGraph::triangle();
        let (g, x) = g.stack_vertex(FaceId(0, 1)).unwrap();
        assert_eq!(x, 3);
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.faces().len(), 4);
        assert!(g.is_triangulation());
        assert!(g.faces().iter().all(|w| w.len() == 3));
    }

    #[test]
    fn stacking_preserves_counts_and_triangulation() {
        let mut g = PlaneGraph::triangle();
        for s in 1..=11 {
            let lowest = g.faces()[0].id;
            let (next, _) = g.stack_vertex(lowest).unwrap();
            g = next;
            assert_eq!(g.vertex_count(), 3 + s);
            assert_eq!(g.edge_count(), 3 + 3 * s);
            assert_eq!(g.faces().len(), 2 + 2 * s);
            assert!(g.is_triangulation());
        }
        assert_eq!(g.vertex_count(), 14);
        assert_eq!(g.edge_count(), 36);
        assert_eq!(g.faces().len(), 24);
    }

    #[test]
    fn face_tracing_partitions_arcs() {
        let mut g = PlaneGraph::triangle();
        for _ in 0..5 {
            let f = g.faces()[0].id;
            g = g.stack_vertex(f).unwrap().0;
        }
        let total: usize = g.faces().iter().map(|w| w.len()).sum();
        assert_eq!(total, 2 * g.edge_count());
    }

    #[test]
    fn four_cycle_is_not_a_triangulation() {
        let rot = vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]];
        let g = PlaneGraph::new(rot, FaceId(0, 1)).unwrap();
        assert!(!g.is_triangulation());
        assert_eq!(g.faces().len(), 2);
    }

    #[test]
    fn stack_rejects_non_triangle() {
        let rot = vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]];
        let g = PlaneGraph::new(rot, FaceId(0, 1)).unwrap();
        assert!(matches!(
            g.stack_vertex(FaceId(0, 1)),
            Err(GraphError::NotTriangularFace(_))
        ));
    }

    #[test]
    fn face_lookup_rejects_non_canonical_ids() {
        let g = PlaneGraph::triangle();
        assert!(g.face(FaceId(0, 1)).is_ok());
        // (1, 2) lies on the face identified by (0, 1).
        assert!(matches!(g.face(FaceId(1, 2)), Err(GraphError::UnknownFace(_))));
        assert!(g.face(FaceId(0, 7)).is_err());
    }

    #[test]
    fn invalid_embeddings_rejected() {
        // Asymmetric incidence.
        assert!(PlaneGraph::new(vec![vec![1], vec![], vec![]], FaceId(0, 1)).is_err());
        // Disconnected.
        assert!(PlaneGraph::new(
            vec![vec![1], vec![0], vec![3], vec![2]],
            FaceId(0, 1)
        )
        .is_err());
        // K4 with a genus-1 rotation: Euler check fails.
        let twisted = vec![vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]];
        assert!(PlaneGraph::new(twisted, FaceId(0, 1)).is_err());
    }

    #[test]
    fn simple_graph_validation() {
        assert!(SimpleGraph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(SimpleGraph::new(3, [(0, 0)]).is_err());
        assert!(SimpleGraph::new(2, [(0, 5)]).is_err());
        assert_eq!(SimpleGraph::complete(4).edges().len(), 6);
        assert_eq!(SimpleGraph::cycle(4).unwrap().edges().len(), 4);
    }
}
