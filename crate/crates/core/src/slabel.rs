//! Permutation-labeled oriented graphs and their colouring semantics.
//!
//! An instance is an orientation of a simple graph plus a permutation label
//! per arc; a proper k-colouring is a vertex map `f` into `[k]` with
//! `label(f(tail)) != f(head)` on every arc. Adapters translate ordinary,
//! signed, group and gain colouring problems into this form.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::SimpleGraph;
use crate::perm::{
    self, cyclic_shift, gain_encode, identity, negation_permutation, GroupTable, PermError,
    PermSet, Permutation, SignedMode, MAX_ALPHABET,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SlabelError {
    #[error("colour count {0} out of range 1..={MAX_ALPHABET}")]
    BadColourCount(usize),
    #[error("arc {0}-{1} is invalid: {2}")]
    BadArc(usize, usize, String),
    #[error("no edge {0}-{1} in the graph")]
    UnknownEdge(usize, usize),
    #[error("label alphabet {0} does not match colour count {1}")]
    LabelSizeMismatch(usize, usize),
    #[error("colouring is not total on the vertex set (got {got}, need {need})")]
    PartialColouring { got: usize, need: usize },
    #[error("colour {0} out of range 1..={1}")]
    ColourOutOfRange(usize, usize),
    #[error("weight {0} out of range 0..{1}")]
    WeightOutOfRange(usize, usize),
    #[error("expected {need} edge attributes, got {got}")]
    AttributeCount { got: usize, need: usize },
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// One oriented, labeled edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
    pub label: Permutation,
}

impl Arc {
    fn edge_key(&self) -> (usize, usize) {
        (self.tail.min(self.head), self.tail.max(self.head))
    }
}

/// A labeled orientation of a simple graph together with the colour count k.
///
/// Arcs are kept sorted by underlying edge, one arc per edge, which makes
/// equal instances structurally identical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SLabeledGraph {
    k: usize,
    n: usize,
    arcs: Vec<Arc>,
}

impl SLabeledGraph {
    pub fn new(n: usize, k: usize, arcs: Vec<Arc>) -> Result<Self, SlabelError> {
        if k == 0 || k > MAX_ALPHABET {
            return Err(SlabelError::BadColourCount(k));
        }
        let mut arcs = arcs;
        for a in &arcs {
            if a.tail >= n || a.head >= n {
                return Err(SlabelError::BadArc(a.tail, a.head, "endpoint out of range".into()));
            }
            if a.tail == a.head {
                return Err(SlabelError::BadArc(a.tail, a.head, "loop".into()));
            }
            if a.label.k() != k {
                return Err(SlabelError::LabelSizeMismatch(a.label.k(), k));
            }
        }
        arcs.sort_by_key(|a| a.edge_key());
        for w in arcs.windows(2) {
            if w[0].edge_key() == w[1].edge_key() {
                return Err(SlabelError::BadArc(
                    w[1].tail,
                    w[1].head,
                    "two arcs on one edge".into(),
                ));
            }
        }
        Ok(SLabeledGraph { k, n, arcs })
    }

    /// The all-identity labeling of a simple graph: ordinary proper
    /// k-colouring, oriented small id -> large id.
    pub fn all_id(g: &SimpleGraph, k: usize) -> Result<Self, SlabelError> {
        let id = identity(k)?;
        let arcs = g
            .edges()
            .iter()
            .map(|&(u, v)| Arc {
                tail: u,
                head: v,
                label: id.clone(),
            })
            .collect();
        SLabeledGraph::new(g.vertex_count(), k, arcs)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn underlying(&self) -> SimpleGraph {
        SimpleGraph::new(self.n, self.arcs.iter().map(|a| (a.tail, a.head)))
            .expect("arcs form a simple graph")
    }

    /// The sub-instance induced on vertices `0..m`.
    pub fn restrict_to_prefix(&self, m: usize) -> Result<SLabeledGraph, SlabelError> {
        let arcs = self
            .arcs
            .iter()
            .filter(|a| a.tail < m && a.head < m)
            .cloned()
            .collect();
        SLabeledGraph::new(m.min(self.n), self.k, arcs)
    }

    fn arc_position(&self, u: usize, v: usize) -> Result<usize, SlabelError> {
        let key = (u.min(v), u.max(v));
        self.arcs
            .binary_search_by_key(&key, |a| a.edge_key())
            .map_err(|_| SlabelError::UnknownEdge(u, v))
    }

    /// The arc on the undirected edge `{u, v}`, whichever way it points.
    pub fn arc_on_edge(&self, u: usize, v: usize) -> Result<&Arc, SlabelError> {
        Ok(&self.arcs[self.arc_position(u, v)?])
    }
}

/// A total colour assignment; `values[v]` is the colour of vertex `v` in `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Colouring(pub Vec<usize>);

impl Colouring {
    pub fn get(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Applies `pi` to every colour.
    pub fn map_colours(&self, pi: &Permutation) -> Colouring {
        Colouring(self.0.iter().map(|&c| pi.apply(c)).collect())
    }

    /// Restriction to the vertex prefix `0..m`.
    pub fn prefix(&self, m: usize) -> Colouring {
        Colouring(self.0[..m].to_vec())
    }

    fn check_total(&self, l: &SLabeledGraph) -> Result<(), SlabelError> {
        if self.0.len() != l.vertex_count() {
            return Err(SlabelError::PartialColouring {
                got: self.0.len(),
                need: l.vertex_count(),
            });
        }
        for &c in &self.0 {
            if c < 1 || c > l.k() {
                return Err(SlabelError::ColourOutOfRange(c, l.k()));
            }
        }
        Ok(())
    }
}

/// True iff `label(f(tail)) != f(head)` holds on every arc.
pub fn check_colouring(l: &SLabeledGraph, f: &Colouring) -> Result<bool, SlabelError> {
    f.check_total(l)?;
    Ok(l
        .arcs()
        .iter()
        .all(|a| a.label.apply(f.get(a.tail)) != f.get(a.head)))
}

/// Flips the arc on edge `{u, v}` and replaces its label by the inverse.
/// The set of proper colourings is unchanged.
pub fn reverse_arc(l: &SLabeledGraph, u: usize, v: usize) -> Result<SLabeledGraph, SlabelError> {
    let pos = l.arc_position(u, v)?;
    let mut arcs = l.arcs.clone();
    let a = &arcs[pos];
    arcs[pos] = Arc {
        tail: a.head,
        head: a.tail,
        label: a.label.inverse(),
    };
    SLabeledGraph::new(l.n, l.k, arcs)
}

/// Replaces every label by its conjugate `pi . label . pi^-1`. A colouring `f`
/// is proper for the input iff `pi . f` is proper for the result.
pub fn relabel_colours(l: &SLabeledGraph, pi: &Permutation) -> Result<SLabeledGraph, SlabelError> {
    if pi.k() != l.k() {
        return Err(SlabelError::LabelSizeMismatch(pi.k(), l.k()));
    }
    let arcs = l
        .arcs
        .iter()
        .map(|a| {
            Ok(Arc {
                tail: a.tail,
                head: a.head,
                label: pi.conjugate(&a.label)?,
            })
        })
        .collect::<Result<Vec<_>, PermError>>()?;
    SLabeledGraph::new(l.n, l.k, arcs)
}

/// True iff every arc label belongs to `s`.
pub fn labels_within(l: &SLabeledGraph, s: &PermSet) -> bool {
    s.k() == l.k() && l.arcs().iter().all(|a| s.contains(&a.label))
}

/// Edge sign for the signed-colouring adapters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

/// Translates a signed graph: positive edges keep the identity label, negative
/// edges get the mode's negation permutation. Arcs point small id -> large id.
pub fn from_signed(
    g: &SimpleGraph,
    signs: &[Sign],
    k: usize,
    mode: SignedMode,
) -> Result<SLabeledGraph, SlabelError> {
    if signs.len() != g.edges().len() {
        return Err(SlabelError::AttributeCount {
            got: signs.len(),
            need: g.edges().len(),
        });
    }
    let id = identity(k)?;
    let neg = negation_permutation(k, mode)?;
    let arcs = g
        .edges()
        .iter()
        .zip(signs)
        .map(|(&(u, v), sign)| Arc {
            tail: u,
            head: v,
            label: match sign {
                Sign::Positive => id.clone(),
                Sign::Negative => neg.clone(),
            },
        })
        .collect();
    SLabeledGraph::new(g.vertex_count(), k, arcs)
}

/// Translates a Z_k group-colouring instance: the arc `(u, v)` with weight `a`
/// forbids exactly `f(v) = f(u) + a (mod k)`, i.e. carries the cyclic shift
/// by `a`.
pub fn from_group_zk(
    n: usize,
    weighted_arcs: &[(usize, usize, usize)],
    k: usize,
) -> Result<SLabeledGraph, SlabelError> {
    let mut arcs = Vec::with_capacity(weighted_arcs.len());
    for &(tail, head, a) in weighted_arcs {
        if a >= k {
            return Err(SlabelError::WeightOutOfRange(a, k));
        }
        arcs.push(Arc {
            tail,
            head,
            label: cyclic_shift(k, a)?,
        });
    }
    SLabeledGraph::new(n, k, arcs)
}

/// Translates a gain graph over `group` with `k` gain colours into a labeled
/// instance on `k * |group| + 1` colours via the block encoding.
pub fn from_gain(
    n: usize,
    gained_arcs: &[(usize, usize, usize)],
    group: &GroupTable,
    k: usize,
) -> Result<SLabeledGraph, SlabelError> {
    let kp = k
        .checked_mul(group.order())
        .and_then(|v| v.checked_add(1))
        .ok_or(SlabelError::BadColourCount(usize::MAX))?;
    let arcs = gained_arcs
        .iter()
        .map(|&(tail, head, gain)| {
            Ok(Arc {
                tail,
                head,
                label: gain_encode(group, k, gain)?,
            })
        })
        .collect::<Result<Vec<_>, SlabelError>>()?;
    SLabeledGraph::new(n, kp, arcs)
}

/// Convenience: parse a label in cycle notation against the instance alphabet.
pub fn parse_label(text: &str, k: usize) -> Result<Permutation, SlabelError> {
    Ok(perm::parse_cycles(text, k)?)
}
