//! Randomized invariants for the permutation algebra, the embedding
//! operations and the solver.

use proptest::prelude::*;

use slgraph::graph::PlaneGraph;
use slgraph::perm::{
    compose, identity, inverse, parse_cycles, print_cycles, symmetric_group, PermSet, Permutation,
};
use slgraph::slabel::{Arc, SLabeledGraph};
use slgraph::solver::{brute_force_colourings, solve, Status};

fn permutation(k: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=k).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).expect("shuffle is a bijection"))
}

proptest! {
    #[test]
    fn inverse_law(p in (1usize..=6).prop_flat_map(permutation)) {
        let k = p.k();
        prop_assert_eq!(compose(&p, &inverse(&p)).unwrap(), identity(k).unwrap());
        prop_assert_eq!(compose(&inverse(&p), &p).unwrap(), identity(k).unwrap());
    }

    #[test]
    fn cycle_notation_round_trips(p in (1usize..=12).prop_flat_map(permutation)) {
        let text = print_cycles(&p);
        prop_assert_eq!(parse_cycles(&text, p.k()).unwrap(), p);
    }

    #[test]
    fn conjugation_set_laws(
        picks in prop::collection::btree_set(0usize..24, 1..=6),
        pi_idx in 0usize..24,
    ) {
        let s4 = symmetric_group(4).unwrap();
        let members: Vec<Permutation> =
            picks.iter().map(|&i| s4.members()[i].clone()).collect();
        let s = PermSet::new(4, members).unwrap();
        let pi = s4.members()[pi_idx].clone();

        prop_assert_eq!(&slgraph::perm::conjugate_set(&s, &identity(4).unwrap()).unwrap(), &s);
        let conj = slgraph::perm::conjugate_set(&s, &pi).unwrap();
        prop_assert_eq!(conj.len(), s.len());
        let back = slgraph::perm::conjugate_set(&conj, &inverse(&pi)).unwrap();
        prop_assert_eq!(back, s);
    }

    /// A labeling into S is a labeling into any superset of S.
    #[test]
    fn label_membership_is_monotone(
        label_picks in prop::collection::vec(0usize..24, 0..=6),
    ) {
        let s4 = symmetric_group(4).unwrap();
        let labels: Vec<Permutation> =
            label_picks.iter().map(|&i| s4.members()[i].clone()).collect();
        let n = labels.len() + 1;
        let arcs: Vec<Arc> = labels
            .iter()
            .enumerate()
            .map(|(i, label)| Arc { tail: i, head: i + 1, label: label.clone() })
            .collect();
        let l = SLabeledGraph::new(n.max(1), 4, arcs).unwrap();
        let small = PermSet::new(4, labels).unwrap();
        prop_assert!(slgraph::slabel::labels_within(&l, &small));
        prop_assert!(small.is_subset_of(&s4));
        prop_assert!(slgraph::slabel::labels_within(&l, &s4));
    }

    /// Stacking arbitrary faces preserves the triangulation, the count
    /// formulas and the face-tracing partition.
    #[test]
    fn stacking_invariants(choices in prop::collection::vec(0usize..100, 0..=10)) {
        let mut g = PlaneGraph::triangle();
        for (s, &c) in choices.iter().enumerate() {
            let faces = g.faces();
            let f = faces[c % faces.len()].id;
            g = g.stack_vertex(f).unwrap().0;
            prop_assert_eq!(g.vertex_count(), 3 + s + 1);
            prop_assert_eq!(g.edge_count(), 3 + 3 * (s + 1));
            prop_assert_eq!(g.faces().len(), 2 + 2 * (s + 1));
            prop_assert!(g.is_triangulation());
        }
        let walk_total: usize = g.faces().iter().map(|w| w.len()).sum();
        prop_assert_eq!(walk_total, 2 * g.edge_count());
    }

    /// Decision agreement with the exhaustive oracle on labels the acceptance
    /// sweep does not cover (full S_4, k = 4).
    #[test]
    fn solver_agrees_with_oracle_k4(
        edge_mask in 0u32..64,
        label_picks in prop::collection::vec(0usize..24, 6),
    ) {
        let s4 = symmetric_group(4).unwrap();
        let pool: Vec<(usize, usize)> =
            (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect();
        let arcs: Vec<Arc> = pool
            .iter()
            .enumerate()
            .filter(|&(i, _)| edge_mask & (1 << i) != 0)
            .map(|(i, &(u, v))| Arc {
                tail: u,
                head: v,
                label: s4.members()[label_picks[i]].clone(),
            })
            .collect();
        let l = SLabeledGraph::new(4, 4, arcs).unwrap();
        let oracle = brute_force_colourings(&l).unwrap();
        let got = solve(&l);
        prop_assert_eq!(got.status == Status::Sat, !oracle.is_empty());
        if let Some(w) = got.witness {
            prop_assert!(slgraph::slabel::check_colouring(&l, &w).unwrap());
        }
    }
}
