//! Colouring of permutation-labeled graphs.
//!
//! An instance pairs an orientation of a simple graph with a permutation of
//! `[k]` on every arc; a proper colouring must avoid `label(f(tail)) =
//! f(head)` on each arc. This crate provides:
//!
//! - the labeled-graph model with adapters from ordinary, signed, group and
//!   gain colouring ([`slabel`], [`perm`]);
//! - plane graphs as rotation systems with face tracing and triangle
//!   stacking ([`graph`]);
//! - a deterministic backtracking solver, exhaustive oracle and
//!   unique-colourability test ([`solver`]);
//! - constructions of planar triangulations that are not 4-colourable once
//!   labeled over `{id, (123)}` or `{id, (1234)}`, and their conjugates
//!   ([`construct`]);
//! - independently checkable refutation certificates ([`certify`]);
//! - canonical JSON serialization and DOT export ([`formats`]).

pub mod certify;
pub mod construct;
pub mod formats;
pub mod graph;
pub mod perm;
pub mod slabel;
pub mod solver;

pub use certify::{make_certificate, verify_certificate, Certificate};
pub use construct::{
    bad_witness, base_triangulation, build_c123, build_c1234, insert_gadgets, lemma1_graph,
    BadWitness, Citation, ConstructedInstance, FaceColouringMap, GadgetRecord,
};
pub use graph::{FaceId, FaceWalk, PlaneGraph, SimpleGraph};
pub use perm::{
    compose, conjugacy_class_rep, conjugate_set, cyclic_shift_set, gain_encode, identity, inverse,
    negation_permutation, parse_cycles, print_cycles, symmetric_group, GroupTable, PermSet,
    Permutation, SignedMode,
};
pub use slabel::{
    check_colouring, from_gain, from_group_zk, from_signed, labels_within, relabel_colours,
    reverse_arc, Arc, Colouring, SLabeledGraph, Sign,
};
pub use solver::{
    brute_force_colourings, enumerate_colourings, is_uniquely_k_colourable, solve, solve_with,
    PartitionSignature, SolveOptions, SolveResult, SolveStats, Status,
};
