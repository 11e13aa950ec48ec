use incol_core::constructive::{construct, theorem_bound};
use incol_core::generators::{
    gen_corona, gen_grid, gen_random_graph, gen_random_halin, gen_random_tree,
};
use incol_core::harness::random_list_assignment;
use incol_core::io::{
    colouring_from_json, colouring_to_json, graph_from_json, graph_to_json, lists_from_json,
    lists_to_json,
};
use incol_core::solver::{
    greedy_degenerate, solve_list_colouring, GreedyOutcome, SolveOutcome, SolverConfig,
};
use incol_core::{
    incidence_adjacent, validate_colouring, Graph, IncidenceColouring, ListAssignment,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.0..0.8f64, any::<u64>())
        .prop_map(|(n, p, seed)| gen_random_graph(n, p, &mut ChaCha8Rng::seed_from_u64(seed)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn incidence_count_is_twice_edge_count(g in graph(20)) {
        prop_assert_eq!(g.incidence_count(), 2 * g.edge_count());
        prop_assert_eq!(g.incidences().len(), g.incidence_count());
    }

    #[test]
    fn neighbourhood_size(g in graph(15)) {
        for (id, inc) in g.incidences().into_iter().enumerate() {
            let want = 2 * g.degree(inc.vertex) + g.degree(inc.other) - 2;
            prop_assert_eq!(g.incidence_neighbourhood(id).len(), want);
        }
    }

    #[test]
    fn adjacency_symmetric_and_irreflexive(g in graph(12)) {
        let all = g.incidences();
        for &a in &all {
            prop_assert!(!incidence_adjacent(a, a));
            for &b in &all {
                prop_assert_eq!(incidence_adjacent(a, b), incidence_adjacent(b, a));
            }
        }
        let ig = g.incidence_graph();
        for i in 0..ig.n() {
            prop_assert!(!ig.neighbours(i).contains(&i));
        }
    }

    /// A valid colouring restricted to a spanning subgraph stays valid.
    #[test]
    fn colourings_restrict_to_subgraphs(g in graph(9), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.edge_count() > 0);
        let k = g.max_degree() + 3;
        let l = ListAssignment::uniform(&g, k as u32);
        let c = match greedy_degenerate(&g, &l) {
            GreedyOutcome::Colouring(c) => c,
            GreedyOutcome::Stuck { .. } => return Ok(()),
        };
        let (a, b) = g.edges()[pick.index(g.edge_count())];
        let h = g.without_edge(a, b);
        let restricted = IncidenceColouring::from_options(
            h.incidences().iter().map(|i| c.get(g.id(i.vertex, i.other))).collect(),
        );
        prop_assert!(validate_colouring(&h, None, &restricted).unwrap().is_valid());
    }

    #[test]
    fn json_round_trips(g in graph(12), seed in any::<u64>()) {
        prop_assume!(g.edge_count() > 0);
        let back = graph_from_json(&graph_to_json(&g)).unwrap();
        prop_assert_eq!(&back, &g);
        let l = random_list_assignment(&g, 4, 9, seed).unwrap();
        prop_assert_eq!(lists_from_json(&g, &lists_to_json(&g, &l)).unwrap(), l.clone());
        if let GreedyOutcome::Colouring(c) = greedy_degenerate(&g, &ListAssignment::uniform(&g, 3 * g.max_degree() as u32)) {
            prop_assert_eq!(colouring_from_json(&g, &colouring_to_json(&g, &c)).unwrap(), c);
        }
    }

    #[test]
    fn solver_outputs_are_valid(g in graph(7), k in 2..6usize, seed in any::<u64>()) {
        prop_assume!(g.edge_count() > 0);
        let l = random_list_assignment(&g, k, 2 * k, seed).unwrap();
        if let SolveOutcome::Colouring(c) = solve_list_colouring(&g, &l, &SolverConfig::default()).unwrap() {
            prop_assert!(validate_colouring(&g, Some(&l), &c).unwrap().is_valid());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn constructions_replay_and_validate(family in 0..4u8, a in 2..8usize, b in 1..6usize, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (g, spec) = match family {
            0 => gen_random_tree(a + 1, &mut rng).unwrap(),
            1 => gen_grid(a.max(b + 1), a.min(b + 1)).unwrap(),
            2 => gen_random_halin(a, 3, &mut rng).unwrap(),
            _ => gen_corona(a.clamp(3, 6), b).unwrap(),
        };
        let k = theorem_bound(&spec, &g).unwrap();
        let l = random_list_assignment(&g, k, 3 * k, seed).unwrap();
        let r = construct(&spec, &g, &l, &[]).unwrap();
        prop_assert!(validate_colouring(&g, Some(&l), &r.colouring).unwrap().is_valid());
        prop_assert_eq!(r.replay(), r.colouring.clone());
        prop_assert_eq!(r.trace.len(), g.incidence_count());
        let counted: usize = r.rule_counts().iter().map(|&(_, n)| n).sum();
        prop_assert_eq!(counted, r.trace.len());
    }
}
