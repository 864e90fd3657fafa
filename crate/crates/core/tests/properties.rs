use clique_core::catalog::{run_check, CheckId, Outcome, ParamSelection};
use clique_core::{
    brute_force_counts, clique_polynomial, count_cliques, enumerate_cliques, parse_graph6,
    to_graph6, EdgeRef, Graph, Poly, VertexSet,
};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
            move |bits| {
                let mut edges = Vec::new();
                let mut it = bits.into_iter();
                for a in 0..n {
                    for b in a + 1..n {
                        if it.next().unwrap() {
                            edges.push((a, b));
                        }
                    }
                }
                Graph::from_edges(n, &edges).unwrap()
            },
        )
    })
}

fn poly(g: &Graph) -> Poly {
    clique_polynomial(g).unwrap().to_poly().unwrap()
}

fn all_hold(check: CheckId, g: &Graph) -> bool {
    run_check(check, g, &ParamSelection::default())
        .unwrap()
        .iter()
        .all(|o| !o.failed())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        let s = to_graph6(&g);
        prop_assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn counting_matches_oracle(g in graph(9)) {
        let oracle = brute_force_counts(&g).unwrap();
        prop_assert_eq!(&count_cliques(&g).unwrap(), &oracle);
        prop_assert_eq!(enumerate_cliques(&g, None).unwrap().counts(), oracle);
    }

    #[test]
    fn disjoint_union_adds_polynomials(g in graph(6), h in graph(6)) {
        let u = g.disjoint_union(&h).unwrap();
        let expected = poly(&g).checked_add(&poly(&h)).unwrap().checked_sub(&Poly::constant(1)).unwrap();
        prop_assert_eq!(poly(&u), expected);
    }

    #[test]
    fn delete_vertex_drops_its_edges(g in graph(8), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.n() > 0);
        let v = pick.index(g.n());
        let h = g.delete_vertex(v).unwrap();
        prop_assert_eq!(h.n(), g.n() - 1);
        prop_assert_eq!(h.m(), g.m() - g.degree(v));
    }

    #[test]
    fn edge_set_deletion_is_order_independent(g in graph(8), seed in any::<u64>()) {
        let edges: Vec<EdgeRef> = g.edges().collect();
        prop_assume!(!edges.is_empty());
        let take = (seed as usize % edges.len()) + 1;
        let chosen = &edges[..take];
        let mut reversed = chosen.to_vec();
        reversed.reverse();
        let a = g.delete_edge_set(chosen).unwrap();
        prop_assert_eq!(&a, &g.delete_edge_set(&reversed).unwrap());
        prop_assert_eq!(a.m(), g.m() - take);
        prop_assert_eq!(a.n(), g.n());
    }

    #[test]
    fn common_neighborhood_is_intersection(g in graph(10), mask in any::<u64>()) {
        let set = VertexSet(mask).intersect(g.vertices());
        prop_assume!(!set.is_empty());
        let cn = g.common_neighborhood(set).unwrap();
        for w in 0..g.n() {
            let adjacent_to_all = set.iter().all(|v| g.has_edge(v, w));
            prop_assert_eq!(cn.contains(w), adjacent_to_all);
        }
    }

    #[test]
    fn derivatives_are_neighborhood_sums(g in graph(8)) {
        let cat = enumerate_cliques(&g, None).unwrap();
        for k in 1..=cat.omega() {
            let terms: Vec<Poly> = cat
                .of_size(k)
                .iter()
                .map(|q| poly(&g.induced_subgraph(g.common_neighborhood(q.set()).unwrap())))
                .collect();
            prop_assert_eq!(
                poly(&g).normalized_derivative(k).unwrap(),
                Poly::checked_sum(&terms).unwrap()
            );
        }
    }

    #[test]
    fn theorem_checks_hold(g in graph(8)) {
        for &c in &CheckId::theorems() {
            prop_assert!(all_hold(c, &g), "{} fails on {}", c, to_graph6(&g));
        }
        prop_assert!(all_hold(CheckId::KthDerivative, &g));
        prop_assert!(all_hold(CheckId::CliqueDeletionCliqueSubsets, &g));
    }

    #[test]
    fn deck_sums_match_vertex_and_edge_deletion(g in graph(8)) {
        let first: Vec<Poly> = (0..g.n()).map(|v| poly(&g.delete_vertex(v).unwrap())).collect();
        let second: Vec<Poly> = g.edges().map(|e| poly(&g.delete_edge(e).unwrap())).collect();
        let n = g.n() as i128;
        let m = g.m() as i128;
        let c = poly(&g);
        // sum_v C(G - v) = n C - x C', sum_e C(G - e) = m C - (x^2/2) C''
        let v_rhs = c.checked_scale(n).unwrap().checked_sub(&c.derivative(1).unwrap().shift(1)).unwrap();
        let e_rhs = c
            .checked_scale(m)
            .unwrap()
            .checked_sub(&c.normalized_derivative(2).unwrap().shift(2))
            .unwrap();
        prop_assert_eq!(Poly::checked_sum(&first).unwrap(), v_rhs);
        prop_assert_eq!(Poly::checked_sum(&second).unwrap(), e_rhs);
    }
}

#[test]
fn inapplicable_outside_hypothesis() {
    let k5 = Graph::complete(5).unwrap();
    let out = run_check(
        CheckId::ThirdDerivativeK5Free,
        &k5,
        &ParamSelection::default(),
    )
    .unwrap();
    assert!(matches!(out[..], [Outcome::Inapplicable(_)]));
    let k4 = Graph::complete(4).unwrap();
    let out = run_check(CheckId::Conjecture2, &k4, &ParamSelection::default()).unwrap();
    assert!(matches!(out[..], [Outcome::Inapplicable(_)]));
}
