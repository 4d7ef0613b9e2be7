//! Decision, enumeration and counting of proper k-colourings, a brute-force
//! oracle, and unique-colourability via partition signatures.
//!
//! The solver is a depth-first backtracking search over per-vertex candidate
//! sets. Fixing a vertex x with colour c removes `label(c)` from the head of
//! every out-arc of x and `label^-1(c)` from the tail of every in-arc. The
//! next decision vertex is the one with the smallest candidate set (ties by
//! smallest id), values are tried in ascending colour order. At every decision
//! node the unassigned vertices are split into connected components which are
//! solved independently; an unsatisfiable component fails the node without
//! touching its siblings, so independent subproblems never multiply.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::SimpleGraph;
use crate::slabel::{check_colouring, Colouring, SLabeledGraph, SlabelError};

/// Assignment cap for [`brute_force_colourings`].
pub const BRUTE_FORCE_CAP: u64 = 10_000_000;

/// Solution cap for [`is_uniquely_k_colourable`].
pub const UNIQUENESS_CAP: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("enumeration limit must be at least 1")]
    InvalidLimit,
    #[error(transparent)]
    Slabel(#[from] SlabelError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    Sat,
    Unsat,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    pub nodes: u64,
    pub propagations: u64,
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub status: Status,
    pub witness: Option<Colouring>,
    pub stats: SolveStats,
}

/// Search options. `seed` is reserved for future randomized policies; the
/// default policy ignores it and is fully deterministic.
#[derive(Debug, Clone, Copy, Default)]
pub struct SolveOptions {
    /// Break colour symmetry on the first vertices. Only applied when every
    /// label is the identity, where colour renaming is a true symmetry.
    pub symmetry_breaking: bool,
    pub seed: Option<u64>,
}

enum TrailEntry {
    Domain(usize, u128),
    Assign(usize),
}

struct Searcher {
    k: usize,
    n: usize,
    /// Per vertex: `(neighbour, forbid)` with `forbid[c - 1]` the neighbour
    /// value excluded when this vertex takes colour c.
    adj: Vec<Vec<(usize, Vec<usize>)>>,
    domains: Vec<u128>,
    assigned: Vec<usize>,
    trail: Vec<TrailEntry>,
    stats: SolveStats,
}

impl Searcher {
    fn new(l: &SLabeledGraph) -> Self {
        let n = l.vertex_count();
        let k = l.k();
        let mut adj: Vec<Vec<(usize, Vec<usize>)>> = vec![Vec::new(); n];
        for a in l.arcs() {
            let fwd: Vec<usize> = (1..=k).map(|c| a.label.apply(c)).collect();
            let inv_label = a.label.inverse();
            let inv: Vec<usize> = (1..=k).map(|c| inv_label.apply(c)).collect();
            adj[a.tail].push((a.head, fwd));
            adj[a.head].push((a.tail, inv));
        }
        let full = if k == 128 { u128::MAX } else { (1u128 << k) - 1 };
        Searcher {
            k,
            n,
            adj,
            domains: vec![full; n],
            assigned: vec![0; n],
            trail: Vec::new(),
            stats: SolveStats::default(),
        }
    }

    fn rewind(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().unwrap() {
                TrailEntry::Domain(v, old) => self.domains[v] = old,
                TrailEntry::Assign(v) => self.assigned[v] = 0,
            }
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.assigned[v] = c;
        self.trail.push(TrailEntry::Assign(v));
    }

    fn remove_value(&mut self, v: usize, c: usize) -> bool {
        let bit = 1u128 << (c - 1);
        let old = self.domains[v];
        if old & bit != 0 {
            self.trail.push(TrailEntry::Domain(v, old));
            self.domains[v] = old & !bit;
        }
        self.domains[v] != 0
    }

    fn propagate(&mut self, v: usize, c: usize) -> bool {
        for i in 0..self.adj[v].len() {
            let (u, forbidden) = {
                let e = &self.adj[v][i];
                (e.0, e.1[c - 1])
            };
            if self.assigned[u] != 0 {
                continue;
            }
            self.stats.propagations += 1;
            if !self.remove_value(u, forbidden) {
                return false;
            }
        }
        true
    }

    fn components(&self, active: &[usize]) -> Vec<Vec<usize>> {
        let mut in_active = vec![false; self.n];
        for &v in active {
            in_active[v] = true;
        }
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for &start in active {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for &(u, _) in &self.adj[v] {
                    if in_active[u] && !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        queue.push(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    fn search(&mut self, active: &[usize]) -> bool {
        if active.is_empty() {
            return true;
        }
        let comps = self.components(active);
        if comps.len() > 1 {
            let mark = self.trail.len();
            for comp in &comps {
                if !self.search(comp) {
                    self.rewind(mark);
                    return false;
                }
            }
            return true;
        }
        let comp = &comps[0];
        let v = *comp
            .iter()
            .min_by_key(|&&u| (self.domains[u].count_ones(), u))
            .unwrap();
        let rest: Vec<usize> = comp.iter().copied().filter(|&u| u != v).collect();
        self.stats.nodes += 1;
        let dom = self.domains[v];
        for c in 1..=self.k {
            if dom & (1u128 << (c - 1)) == 0 {
                continue;
            }
            let mark = self.trail.len();
            self.assign(v, c);
            if self.propagate(v, c) && self.search(&rest) {
                return true;
            }
            self.rewind(mark);
        }
        false
    }
}

/// Decides whether the instance has a proper colouring; a SAT result carries
/// a witness that has been re-checked against the colouring rule.
pub fn solve(l: &SLabeledGraph) -> SolveResult {
    solve_with(l, &SolveOptions::default())
}

pub fn solve_with(l: &SLabeledGraph, opts: &SolveOptions) -> SolveResult {
    let mut s = Searcher::new(l);
    if opts.symmetry_breaking && l.arcs().iter().all(|a| a.label.is_identity()) {
        apply_symmetry_prefix(l, &mut s);
    }
    let all: Vec<usize> = (0..l.vertex_count()).collect();
    if s.search(&all) {
        let witness = Colouring(s.assigned.clone());
        assert!(
            check_colouring(l, &witness).unwrap_or(false),
            "internal error: witness failed the colouring check"
        );
        SolveResult {
            status: Status::Sat,
            witness: Some(witness),
            stats: s.stats,
        }
    } else {
        SolveResult {
            status: Status::Unsat,
            witness: None,
            stats: s.stats,
        }
    }
}

/// Pins the colours of an initial clique among vertices 0, 1, 2. Sound only
/// under all-identity labels, where renaming colours is a solution symmetry.
fn apply_symmetry_prefix(l: &SLabeledGraph, s: &mut Searcher) {
    let n = l.vertex_count();
    if n == 0 || l.k() == 0 {
        return;
    }
    let adjacent = |u: usize, v: usize| l.arc_on_edge(u, v).is_ok();
    let mut pinned = vec![0usize];
    if n > 1 && l.k() > 1 && adjacent(0, 1) {
        pinned.push(1);
        if n > 2 && l.k() > 2 && adjacent(0, 2) && adjacent(1, 2) {
            pinned.push(2);
        }
    }
    for (i, &v) in pinned.iter().enumerate() {
        s.domains[v] = 1u128 << i;
    }
}

/// Enumeration output; `truncated` is set when more colourings exist than the
/// requested limit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub colourings: Vec<Colouring>,
    pub truncated: bool,
}

/// All proper colourings in lexicographic order of their colour vectors,
/// cut off (and flagged) after `limit` entries.
pub fn enumerate_colourings(l: &SLabeledGraph, limit: usize) -> Result<Enumeration, SolveError> {
    if limit == 0 {
        return Err(SolveError::InvalidLimit);
    }
    let mut s = Searcher::new(l);
    let mut out = Enumeration {
        colourings: Vec::new(),
        truncated: false,
    };
    enumerate_rec(&mut s, 0, limit, &mut out);
    Ok(out)
}

/// Fixed vertex order and ascending values keep the output lexicographic.
fn enumerate_rec(s: &mut Searcher, v: usize, limit: usize, out: &mut Enumeration) -> bool {
    if v == s.n {
        if out.colourings.len() == limit {
            out.truncated = true;
            return false;
        }
        out.colourings.push(Colouring(s.assigned.clone()));
        return true;
    }
    let dom = s.domains[v];
    for c in 1..=s.k {
        if dom & (1u128 << (c - 1)) == 0 {
            continue;
        }
        let mark = s.trail.len();
        s.assign(v, c);
        s.stats.nodes += 1;
        if s.propagate(v, c) && !enumerate_rec(s, v + 1, limit, out) {
            return false;
        }
        s.rewind(mark);
    }
    true
}

/// Every assignment `V -> [k]`, filtered by [`check_colouring`], in
/// lexicographic order. Independent of the search machinery above.
pub fn brute_force_colourings(l: &SLabeledGraph) -> Result<Vec<Colouring>, SolveError> {
    let n = l.vertex_count() as u32;
    let total = (l.k() as u64)
        .checked_pow(n)
        .filter(|&t| t <= BRUTE_FORCE_CAP)
        .ok_or_else(|| {
            SolveError::ResourceLimit(format!(
                "{}^{} assignments exceed the brute-force cap",
                l.k(),
                n
            ))
        })?;
    let n = l.vertex_count();
    let mut out = Vec::new();
    let mut values = vec![1usize; n];
    for step in 0..total {
        let f = Colouring(values.clone());
        if check_colouring(l, &f)? {
            out.push(f);
        }
        if step + 1 == total {
            break;
        }
        let mut i = n;
        loop {
            i -= 1;
            if values[i] < l.k() {
                values[i] += 1;
                break;
            }
            values[i] = 1;
        }
    }
    Ok(out)
}

/// The partition of the vertex set induced by a colouring, written in a
/// colour-name-independent canonical form: classes are numbered by first
/// appearance.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionSignature(Vec<usize>);

impl PartitionSignature {
    pub fn of(f: &Colouring) -> Self {
        let mut rename: Vec<Option<usize>> = Vec::new();
        let mut sig = Vec::with_capacity(f.len());
        for v in 0..f.len() {
            let c = f.get(v);
            if rename.len() < c {
                rename.resize(c, None);
            }
            let class = *rename[c - 1].get_or_insert_with(|| {
                // count previously named classes
                sig.iter().copied().max().map_or(0, |m: usize| m + 1)
            });
            sig.push(class);
        }
        PartitionSignature(sig)
    }
}

/// True iff the proper k-colourings of `g` (under the all-identity labeling)
/// induce exactly one partition of the vertex set into independent sets.
pub fn is_uniquely_k_colourable(g: &SimpleGraph, k: usize) -> Result<bool, SolveError> {
    let l = SLabeledGraph::all_id(g, k)?;
    let e = enumerate_colourings(&l, UNIQUENESS_CAP)?;
    if e.truncated {
        return Err(SolveError::ResourceLimit(format!(
            "more than {UNIQUENESS_CAP} colourings"
        )));
    }
    let signatures: BTreeSet<PartitionSignature> =
        e.colourings.iter().map(PartitionSignature::of).collect();
    Ok(signatures.len() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_cycles;
    use crate::slabel::Arc;

    fn triangle_all_id(k: usize) -> SLabeledGraph {
        SLabeledGraph::all_id(&SimpleGraph::complete(3), k).unwrap()
    }

    #[test]
    fn brute_force_counts() {
        assert_eq!(brute_force_colourings(&triangle_all_id(3)).unwrap().len(), 6);
        assert_eq!(brute_force_colourings(&triangle_all_id(2)).unwrap().len(), 0);

        let l = SLabeledGraph::new(
            2,
            2,
            vec![Arc {
                tail: 0,
                head: 1,
                label: parse_cycles("(12)", 2).unwrap(),
            }],
        )
        .unwrap();
        let sols = brute_force_colourings(&l).unwrap();
        assert_eq!(sols, vec![Colouring(vec![1, 1]), Colouring(vec![2, 2])]);
    }

    #[test]
    fn brute_force_guards_size() {
        let g = SimpleGraph::new(30, []).unwrap();
        let l = SLabeledGraph::all_id(&g, 4).unwrap();
        assert!(matches!(
            brute_force_colourings(&l),
            Err(SolveError::ResourceLimit(_))
        ));
    }

    #[test]
    fn solve_empty_graph_is_sat() {
        let l = SLabeledGraph::new(0, 4, vec![]).unwrap();
        let r = solve(&l);
        assert_eq!(r.status, Status::Sat);
        assert_eq!(r.witness, Some(Colouring(vec![])));
    }

    #[test]
    fn solve_matches_brute_force_on_triangles() {
        for k in 2..=4 {
            let l = triangle_all_id(k);
            let r = solve(&l);
            let bf = brute_force_colourings(&l).unwrap();
            assert_eq!(r.status == Status::Sat, !bf.is_empty());
        }
    }

    #[test]
    fn enumerate_is_lexicographic_and_truncates() {
        let l = triangle_all_id(4);
        let e = enumerate_colourings(&l, 100).unwrap();
        assert_eq!(e.colourings.len(), 24);
        assert!(!e.truncated);
        assert_eq!(e.colourings, brute_force_colourings(&l).unwrap());

        let e = enumerate_colourings(&l, 10).unwrap();
        assert_eq!(e.colourings.len(), 10);
        assert!(e.truncated);
        assert!(matches!(
            enumerate_colourings(&l, 0),
            Err(SolveError::InvalidLimit)
        ));
    }

    #[test]
    fn k4_all_id_has_24_colourings() {
        let l = SLabeledGraph::all_id(&SimpleGraph::complete(4), 4).unwrap();
        let e = enumerate_colourings(&l, 1000).unwrap();
        assert_eq!(e.colourings.len(), 24);
    }

    #[test]
    fn partition_signatures_forget_colour_names() {
        let a = Colouring(vec![1, 2, 1, 3]);
        let b = Colouring(vec![3, 1, 3, 2]);
        let c = Colouring(vec![1, 2, 2, 3]);
        assert_eq!(PartitionSignature::of(&a), PartitionSignature::of(&b));
        assert_ne!(PartitionSignature::of(&a), PartitionSignature::of(&c));
    }

    #[test]
    fn unique_colourability() {
        assert!(is_uniquely_k_colourable(&SimpleGraph::complete(4), 4).unwrap());
        let c4 = SimpleGraph::cycle(4).unwrap();
        assert!(is_uniquely_k_colourable(&c4, 2).unwrap());
        assert!(!is_uniquely_k_colourable(&c4, 3).unwrap());
    }

    #[test]
    fn symmetry_breaking_preserves_status() {
        let opts = SolveOptions {
            symmetry_breaking: true,
            seed: None,
        };
        for k in 2..=4 {
            let l = triangle_all_id(k);
            assert_eq!(solve(&l).status, solve_with(&l, &opts).status);
        }
        // Non-identity labels: the flag must not fire (conjugation is not a
        // solution symmetry); status must still match plain search.
        let l = SLabeledGraph::new(
            2,
            2,
            vec![Arc {
                tail: 0,
                head: 1,
                label: parse_cycles("(12)", 2).unwrap(),
            }],
        )
        .unwrap();
        assert_eq!(solve_with(&l, &opts).status, Status::Sat);
    }

    #[test]
    fn stats_are_recorded() {
        let r = solve(&triangle_all_id(3));
        assert!(r.stats.nodes > 0);
        assert!(r.stats.propagations > 0);
    }
}
