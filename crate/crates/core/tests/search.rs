use std::time::Duration;

use proptest::prelude::*;

use commgraph::graph::clique::{self, Budget};
use commgraph::graph::{self, BitGraph, Diameter};
use commgraph::oracle;
use commgraph::trimat;
use commgraph::Ring;

fn random_graph() -> impl Strategy<Value = (BitGraph, Vec<u64>)> {
    (1usize..13).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (
            prop::collection::vec(any::<bool>(), pairs),
            prop::collection::vec(1u64..5, n),
        )
            .prop_map(move |(bits, weights)| {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                (BitGraph::from_edges(n, edges), weights)
            })
    })
}

/// Best clique weight and the number of cliques reaching it, over all subsets.
fn brute_force(g: &BitGraph, weights: &[u64]) -> (u64, u64) {
    let n = g.len();
    let mut best = 0;
    let mut count = 0;
    for mask in 1u32..1 << n {
        let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if !clique::is_clique(g, &set) {
            continue;
        }
        let w: u64 = set.iter().map(|&v| weights[v]).sum();
        if w > best {
            best = w;
            count = 0;
        }
        if w == best {
            count += 1;
        }
    }
    (best, count)
}

proptest! {
    #[test]
    fn weighted_clique_is_optimal((g, w) in random_graph()) {
        let found = clique::max_weight_clique(&g, &w, &mut Budget::unlimited());
        let (best, count) = brute_force(&g, &w);
        prop_assert!(found.exact);
        prop_assert_eq!(found.value, best);
        prop_assert_eq!(found.upper_bound, best);
        prop_assert!(clique::is_clique(&g, &found.witness));
        prop_assert_eq!(found.witness.iter().map(|&v| w[v]).sum::<u64>(), best);
        let counted = clique::count_max_weight_cliques(&g, &w, best, &mut Budget::unlimited());
        prop_assert_eq!(counted.count, count);
    }

    #[test]
    fn independent_set_is_clique_of_complement((g, _) in random_graph()) {
        let ones = vec![1; g.len()];
        let found = clique::max_independent_set(&g, &mut Budget::unlimited());
        let (best, _) = brute_force(&g.complement(), &ones);
        prop_assert_eq!(found.value, best);
        let w = &found.witness;
        let independent = w.iter().enumerate().all(|(i, &u)| w[i + 1..].iter().all(|&v| !g.has_edge(u, v)));
        prop_assert!(independent);
    }

    #[test]
    fn degeneracy_order_is_a_permutation((g, _) in random_graph()) {
        let mut order = clique::degeneracy_order(&g);
        order.sort_unstable();
        prop_assert_eq!(order, (0..g.len()).collect::<Vec<_>>());
    }
}

#[test]
fn branch_and_bound_agrees_with_exhaustive_search() {
    for spec in ["zmod:2", "zmod:3", "zmod:4", "gf:2^2", "prod:zmod:2,zmod:2"] {
        let r = Ring::parse(spec).unwrap();
        let g = graph::build_graph(&r).unwrap();
        let report = graph::invariants(&g, Duration::from_secs(30));
        let e = oracle::exhaustive_extremal(&g).unwrap();
        assert!(report.omega.exact && report.alpha.exact, "{spec}");
        assert_eq!(report.omega.value, e.omega, "{spec}");
        assert_eq!(report.alpha.value, e.alpha, "{spec}");
        assert_eq!(report.max_clique_count, Some(e.max_clique_count), "{spec}");
    }
}

#[test]
fn witnesses_hold_under_full_products() {
    for spec in ["zmod:6", "zmod:9", "gf:2^3", "prod:zmod:2,gf:2^2"] {
        let r = Ring::parse(spec).unwrap();
        let g = graph::build_graph(&r).unwrap();
        let report = graph::invariants(&g, Duration::from_secs(30));
        let vs = g.vertices();
        let commute = |u: usize, v: usize| {
            trimat::mul(&r, &vs[u], &vs[v]).unwrap() == trimat::mul(&r, &vs[v], &vs[u]).unwrap()
        };
        let w = &report.omega.witness;
        assert_eq!(w.len() as u64, report.omega.value);
        assert!(
            w.iter()
                .enumerate()
                .all(|(i, &u)| w[i + 1..].iter().all(|&v| commute(u, v))),
            "{spec}"
        );
        let w = &report.alpha.witness;
        assert_eq!(w.len() as u64, report.alpha.value);
        assert!(
            w.iter()
                .enumerate()
                .all(|(i, &u)| w[i + 1..].iter().all(|&v| !commute(u, v))),
            "{spec}"
        );
    }
}

#[test]
fn quotient_diameter_matches_plain_search() {
    for spec in [
        "zmod:4",
        "zmod:6",
        "zmod:12",
        "gf:3^1",
        "prod:zmod:2,zmod:3",
    ] {
        let r = Ring::parse(spec).unwrap();
        let g = graph::build_graph(&r).unwrap();
        let report = graph::invariants(&g, Duration::from_secs(30));
        let adj = g.adjacency().unwrap();
        assert_eq!(report.diameter, graph::all_sources_diameter(adj), "{spec}");
        assert_eq!(report.components, graph::components(adj), "{spec}");
    }
    let path = BitGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
    assert_eq!(graph::all_sources_diameter(&path), Diameter::Finite(3));
}

#[test]
fn exhausted_budget_reports_bounds() {
    let r = Ring::parse("zmod:12").unwrap();
    let g = graph::build_graph(&r).unwrap();
    let q = g.twin_quotient();
    let mut budget = Budget::new(Duration::ZERO);
    let s = clique::max_independent_set(&q.graph, &mut budget);
    if !s.exact {
        assert!(s.upper_bound >= s.value);
    }
    let report = graph::invariants(&g, Duration::ZERO);
    for e in [&report.omega, &report.alpha] {
        assert_eq!(e.exact, e.upper_bound.is_none());
        assert!(e.upper_bound.is_none_or(|ub| ub >= e.value));
    }
    let json = report.to_json();
    assert_eq!(
        json.contains("upper_bound"),
        !(report.omega.exact && report.alpha.exact)
    );
}

#[test]
fn implicit_mode_matches_dense() {
    let r = Ring::parse("zmod:10").unwrap();
    let dense = graph::build_graph(&r).unwrap();
    let opts = graph::GraphOptions {
        dense_cap: 10,
        allow_implicit: true,
        ..Default::default()
    };
    let implicit = graph::build_graph_with(&r, opts).unwrap();
    assert!(!implicit.is_dense());
    assert_eq!(implicit.edge_count(), dense.edge_count());
    let a = graph::invariants(&dense, Duration::from_secs(30));
    let b = graph::invariants(&implicit, Duration::from_secs(30));
    assert_eq!(
        (
            a.omega.value,
            a.alpha.value,
            a.diameter,
            a.components.clone()
        ),
        (
            b.omega.value,
            b.alpha.value,
            b.diameter,
            b.components.clone()
        )
    );
    let refused = graph::GraphOptions {
        dense_cap: 10,
        ..Default::default()
    };
    assert!(graph::build_graph_with(&r, refused).is_err());
}
