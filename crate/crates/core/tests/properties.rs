mod common;

use common::{naive_colorable, naive_has_induced_cycle};
use diam2col::generate::{random_diam2, Constraint, GeneratorSpec};
use diam2col::graph::Graph;
use diam2col::instance::{parse_instance, write_instance, Instance};
use diam2col::lists::{
    run_to_fixpoint, run_to_fixpoint_with, ListAssignment, Propagation, WorklistOrder,
};
use diam2col::oracle::{brute_force, verify_coloring};
use diam2col::palette::ColorSet;
use diam2col::two_list::solve_2list;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::new(n, pairs.zip(bits).filter(|&(_, b)| b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn lists_for(
    n: usize,
    masks: std::ops::RangeInclusive<u8>,
) -> impl Strategy<Value = ListAssignment> {
    prop::collection::vec(masks, n).prop_map(|m| {
        ListAssignment::from_lists(
            m.into_iter()
                .map(|b| ColorSet::from_bits(b).unwrap())
                .collect(),
        )
    })
}

fn instance(max_n: usize) -> impl Strategy<Value = (Graph, ListAssignment)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), lists_for(n, 1..=7))
    })
}

fn two_list_instance(max_n: usize) -> impl Strategy<Value = (Graph, ListAssignment)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        let two = prop::sample::select(vec![1u8, 2, 4, 3, 5, 6]);
        (Just(g), prop::collection::vec(two, n)).prop_map(|(g, m)| {
            (
                g,
                ListAssignment::from_lists(
                    m.into_iter()
                        .map(|b| ColorSet::from_bits(b).unwrap())
                        .collect(),
                ),
            )
        })
    })
}

fn with_permutation<T: std::fmt::Debug + Clone>(
    s: impl Strategy<Value = (Graph, T)>,
) -> impl Strategy<Value = (Graph, T, Vec<usize>)> {
    s.prop_flat_map(|(g, t)| {
        let perm = Just((0..g.n()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), Just(t), perm)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn oracle_matches_plain_enumeration((g, l) in instance(8)) {
        let found = brute_force(&g, &l).unwrap();
        prop_assert_eq!(found.is_some(), naive_colorable(&g, &l));
        if let Some(c) = found {
            prop_assert!(verify_coloring(&g, &l, &c));
        }
    }

    #[test]
    fn relabeling_preserves_metric_cycles_and_decisions((g, l, perm) in with_permutation(instance(8))) {
        let h = g.relabel(&perm);
        let m = l.relabeled(&perm);
        prop_assert_eq!(g.diameter(), h.diameter());
        for k in 3..=7 {
            prop_assert_eq!(g.find_induced_cycle(k).is_some(), h.find_induced_cycle(k).is_some());
        }
        prop_assert_eq!(brute_force(&g, &l).unwrap().is_some(), brute_force(&h, &m).unwrap().is_some());
    }

    #[test]
    fn induced_cycle_search_is_exact(g in graph(8)) {
        for k in 3..=8 {
            match g.find_induced_cycle(k) {
                Some(c) => {
                    prop_assert_eq!(c.len(), k);
                    prop_assert!(c.is_valid_in(&g));
                }
                None => prop_assert!(!naive_has_induced_cycle(&g, k)),
            }
        }
        let triangle = g.edges().any(|(u, v)| g.common_neighbors(u, v).next().is_some());
        prop_assert_eq!(g.find_induced_cycle(3).is_some(), triangle);
        if let Some(c5) = g.find_induced_c5() {
            prop_assert_eq!(c5.to_vec(), g.find_induced_cycle(5).unwrap().vertices);
        }
    }

    #[test]
    fn fixpoint_is_safe_and_shrinks((g, l) in instance(8)) {
        let colorable = naive_colorable(&g, &l);
        match run_to_fixpoint(&g, l.clone()) {
            Propagation::No => prop_assert!(!colorable),
            Propagation::TwoListReady(r) | Propagation::Reduced(r) => {
                prop_assert_eq!(naive_colorable(&g, &r), colorable);
                for v in 0..g.n() {
                    prop_assert!(r.get(v).is_subset(l.get(v)));
                    prop_assert!(!r.get(v).is_empty());
                }
            }
        }
    }

    #[test]
    fn fixpoint_ignores_worklist_order((g, l) in instance(8)) {
        let (up, _) = run_to_fixpoint_with(&g, l.clone(), WorklistOrder::Ascending);
        let (down, _) = run_to_fixpoint_with(&g, l, WorklistOrder::Descending);
        prop_assert_eq!(up, down);
    }

    #[test]
    fn two_list_solver_matches_oracle((g, l) in two_list_instance(9)) {
        let found = solve_2list(&g, &l).unwrap();
        prop_assert_eq!(found.is_some(), naive_colorable(&g, &l));
        if let Some(c) = found {
            prop_assert!(verify_coloring(&g, &l, &c));
        }
    }

    #[test]
    fn instance_files_round_trip((g, l) in instance(9)) {
        let inst = Instance { graph: g, lists: l };
        let text = write_instance(&inst).unwrap();
        let back = parse_instance(&text).unwrap();
        prop_assert_eq!(&back, &inst);
        prop_assert_eq!(write_instance(&back).unwrap(), text);
    }

    #[test]
    fn generation_is_a_function_of_its_inputs(seed in any::<u64>(), n in 4usize..9) {
        let spec = GeneratorSpec { budget: 2000, ..GeneratorSpec::random(n, 0.55, seed, &[Constraint::C4Free]) };
        let a = random_diam2(&spec);
        prop_assert_eq!(&a, &random_diam2(&spec));
        if let Ok((g, _)) = a {
            prop_assert!(g.has_diameter_at_most(2));
            prop_assert!(g.find_induced_cycle(4).is_none());
        }
    }
}
