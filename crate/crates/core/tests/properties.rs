mod common;

use common::*;
use proptest::prelude::*;

use twomega::classes::{
    chordality, dichotomy, in_class_s, is_block_cactus, is_chordal, is_perfect_elimination_ordering, is_planar,
    is_subcubic, Chordality,
};
use twomega::containment::{contains, relation_implication_check, Relation};
use twomega::exec::Exec;
use twomega::generators::{claw, complete_bipartite, random_block_cactus, random_chordal};
use twomega::graph::{emit_graph6, parse_edge_list, emit_edge_list, parse_graph6};
use twomega::harness::{verify_binding, Check, ClassDescriptor, ExperimentSpec, Family, GeneratorPlan};
use twomega::invariants::{clique_number, independence_number, treewidth_bounds, treewidth_exact, TreeDecomposition};
use twomega::solvers::{list_coloring_on_td, mwis_brute, mwis_k1q, mwis_on_td, ColorListAssignment};
use twomega::{Budget, Graph, VertexSet, WeightedGraph};

/// Decomposition properties checked directly on the bags and tree edges.
fn td_ok(g: &Graph, td: &TreeDecomposition) -> bool {
    let m = td.bags.len();
    if m == 0 {
        return g.n() == 0;
    }
    if td.edges.len() + 1 != m {
        return false;
    }
    let mut adj = vec![Vec::new(); m];
    for &(a, b) in &td.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let reach = |keep: &dyn Fn(usize) -> bool, start: usize| {
        let mut seen = vec![false; m];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] && keep(y) {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    };
    if reach(&|_| true, 0).iter().any(|&s| !s) {
        return false;
    }
    let edges_covered = g.edges().iter().all(|&(u, v)| td.bags.iter().any(|b| b.contains(u) && b.contains(v)));
    let vertices_connected = (0..g.n()).all(|v| {
        let nodes: Vec<usize> = (0..m).filter(|&i| td.bags[i].contains(v)).collect();
        !nodes.is_empty() && {
            let seen = reach(&|i| td.bags[i].contains(v), nodes[0]);
            nodes.iter().all(|&i| seen[i])
        }
    });
    edges_covered && vertices_connected
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn graph6_and_edge_list_round_trip(g in arb_graph(0, 20)) {
        prop_assert_eq!(parse_graph6(&emit_graph6(&g).unwrap()).unwrap(), g.clone());
        prop_assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g.clone());
        let json = serde_json::to_string(&g).unwrap();
        prop_assert_eq!(serde_json::from_str::<Graph>(&json).unwrap(), g);
    }

    #[test]
    fn exact_treewidth_matches_oracle(g in arb_graph(0, 10)) {
        let (tw, td) = treewidth_exact(&g).unwrap();
        prop_assert_eq!(tw, tw_oracle(&g));
        prop_assert!(td_ok(&g, &td));
        prop_assert_eq!(td.bags.iter().map(|b| b.len()).max().unwrap_or(1).saturating_sub(1), tw);
        let (lo, hi) = treewidth_bounds(&g);
        prop_assert!(lo <= tw && tw <= hi);
        let (omega, clique) = clique_number(&g);
        prop_assert_eq!(omega, clique_oracle(&g));
        prop_assert!(g.is_clique(clique) && clique.len() == omega);
        prop_assert!(tw + 1 >= omega);
    }

    #[test]
    fn chordal_members_have_tw_omega_minus_one(n in 1usize..16, k in 1usize..6, seed in any::<u64>()) {
        let g = random_chordal(n, k, seed).unwrap();
        prop_assert!(is_chordal(&g));
        prop_assert_eq!(treewidth_exact(&g).unwrap().0 + 1, clique_number(&g).0);
    }

    #[test]
    fn chordality_witnesses(g in arb_graph(0, 9)) {
        match chordality(&g) {
            Chordality::Chordal { peo } => prop_assert!(is_perfect_elimination_ordering(&g, &peo)),
            Chordality::Hole { cycle } => {
                let set: VertexSet = cycle.iter().collect();
                prop_assert!(cycle.len() >= 4 && set.len() == cycle.len());
                // induced cycle: consecutive vertices adjacent, nothing else
                prop_assert_eq!(g.edges_within(set), cycle.len());
                for i in 0..cycle.len() {
                    prop_assert!(g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]));
                }
            }
        }
        prop_assert_eq!(is_chordal(&g), !minor_oracle(&twomega::generators::cycle(4).unwrap(), &g, true));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn containment_matches_oracles(h in arb_graph(1, 4), g in arb_graph(0, 7)) {
        let rep = relation_implication_check(&h, &g).unwrap();
        prop_assert!(rep.violations.is_empty(), "{:?}", rep.violations);
        prop_assert_eq!(rep.holds(Relation::Subgraph), subgraph_oracle(&h, &g, false));
        prop_assert_eq!(rep.holds(Relation::InducedSubgraph), subgraph_oracle(&h, &g, true));
        prop_assert_eq!(rep.holds(Relation::Minor), minor_oracle(&h, &g, false));
        prop_assert_eq!(rep.holds(Relation::InducedMinor), minor_oracle(&h, &g, true));
        if is_subcubic(&h) {
            prop_assert_eq!(rep.holds(Relation::TopologicalMinor), rep.holds(Relation::Minor));
        }
    }

    #[test]
    fn containment_is_monotone_under_adding_a_vertex(
        h in arb_graph(1, 4),
        g in arb_graph(1, 6),
        nbrs in proptest::collection::vec(any::<bool>(), 6),
    ) {
        let mut big = g.clone();
        let x = big.push_vertex().unwrap();
        for v in (0..g.n()).filter(|&v| nbrs[v]) {
            big.add_edge(v, x);
        }
        for rel in Relation::ALL {
            if contains(&h, &g, rel).unwrap().is_some() {
                let w = contains(&h, &big, rel).unwrap();
                prop_assert!(w.is_some(), "{rel} lost after adding a vertex");
                prop_assert!(w.unwrap().validate(&h, &big, rel).is_ok());
            }
        }
    }

    #[test]
    fn dichotomy_is_consistent(h in arb_graph(1, 6)) {
        let b = |rel| dichotomy(&h, rel).unwrap().bounded;
        prop_assert_eq!(b(Relation::Subgraph), in_class_s(&h));
        prop_assert_eq!(b(Relation::TopologicalMinor), is_subcubic(&h) && is_planar(&h));
        prop_assert_eq!(b(Relation::Minor), is_planar(&h));
        // a smaller excluded class can only be easier to bound
        for (small, large) in [
            (Relation::TopologicalMinor, Relation::Subgraph),
            (Relation::Minor, Relation::TopologicalMinor),
            (Relation::InducedTopologicalMinor, Relation::InducedSubgraph),
            (Relation::InducedMinor, Relation::InducedTopologicalMinor),
            (Relation::Subgraph, Relation::InducedSubgraph),
            (Relation::TopologicalMinor, Relation::InducedTopologicalMinor),
            (Relation::Minor, Relation::InducedMinor),
        ] {
            prop_assert!(!b(large) || b(small), "{large} bounded but {small} not");
        }
    }

    #[test]
    fn block_cacti_are_diamond_free(blocks in 1usize..6, size in 2usize..6, seed in any::<u64>()) {
        let g = random_block_cactus(blocks, size, seed).unwrap();
        prop_assert!(is_block_cactus(&g));
        if g.n() <= 12 {
            let diamond = twomega::generators::complete_minus_edge(4).unwrap();
            prop_assert!(contains(&diamond, &g, Relation::InducedMinor).unwrap().is_none());
            prop_assert!(treewidth_exact(&g).unwrap().0 <= (clique_number(&g).0.saturating_sub(1)).max(2));
        }
    }

    #[test]
    fn mwis_solvers_match_oracle(g in arb_graph(0, 11), ws in proptest::collection::vec(0u64..50, 11)) {
        let w = ws[..g.n()].to_vec();
        let wg = WeightedGraph::new(g.clone(), w.clone()).unwrap();
        let best = mwis_oracle(&g, &w);
        let brute = mwis_brute(&wg, &Budget::default()).unwrap();
        prop_assert_eq!(brute.weight, best);
        let td = treewidth_exact(&g).unwrap().1;
        let dp = mwis_on_td(&wg, &td).unwrap();
        prop_assert_eq!(dp.weight, best);
        prop_assert!(g.is_independent(dp.set) && wg.weight_of(dp.set) == best);
        match mwis_k1q(&wg, 3) {
            // success is exact even when a star is present but never confined to one level
            Ok(s) => prop_assert_eq!(s.weight, best),
            Err(twomega::Error::InducedStar { q, independent, .. }) => {
                prop_assert_eq!(q, 3);
                let s: VertexSet = independent.iter().collect();
                prop_assert!(s.len() == 3 && g.is_independent(s));
                prop_assert!(contains(&claw(), &g, Relation::InducedMinor).unwrap().is_some());
            }
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn list_coloring_on_td_matches_oracle(
        g in arb_graph(0, 9),
        raw in proptest::collection::vec(proptest::collection::vec(1usize..=3, 0..=3), 9),
    ) {
        let lists: Vec<Vec<usize>> = raw[..g.n()].to_vec();
        let asg = ColorListAssignment::new(3, lists.clone()).unwrap();
        let td = treewidth_exact(&g).unwrap().1;
        let got = list_coloring_on_td(&g, &asg, &td).unwrap();
        prop_assert_eq!(got.is_some(), list_coloring_oracle(&g, &lists));
        if let Some(col) = got {
            prop_assert!(asg.check(&g, &col).is_ok());
        }
    }

    #[test]
    fn separators_in_k23_free_graphs_are_narrow(g in arb_graph(2, 8)) {
        if contains(&complete_bipartite(2, 3), &g, Relation::InducedMinor).unwrap().is_none() {
            for s in twomega::invariants::minimal_separators(&g).unwrap() {
                let sub = g.induced_subgraph(s.separator).unwrap();
                prop_assert!(independence_number(&sub).0 <= 2);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn reports_do_not_depend_on_execution_mode(seed in any::<u64>()) {
        let spec = ExperimentSpec {
            name: "cactus".into(),
            class: ClassDescriptor::Excludes {
                relation: Relation::InducedMinor,
                pattern: emit_graph6(&claw()).unwrap(),
            },
            generators: vec![
                GeneratorPlan {
                    family: Family::RandomGraph { n_min: 3, n_max: 9, p: 0.6 },
                    count: 20,
                    max_attempts: Some(400),
                },
            ],
            checks: vec![Check::Binding, Check::HereditaryBinding, Check::MwisK1q { q: 3 }],
            binding: None,
            budget: None,
            seed,
            hereditary_samples: 2,
        };
        let a = verify_binding(&spec, Exec::Parallel).unwrap();
        let b = verify_binding(&spec, Exec::Sequential).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.to_json_lines(), b.to_json_lines());
        prop_assert_eq!(a.summary.violations, 0);
    }
}
