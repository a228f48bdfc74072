use proptest::prelude::*;

use commgraph::graph::{self, DEFAULT_PAIR_CAP};
use commgraph::oracle;
use commgraph::trimat::{self, Class, Ut2};
use commgraph::Ring;

const RINGS: &[&str] = &[
    "zmod:2",
    "zmod:4",
    "zmod:6",
    "zmod:9",
    "zmod:12",
    "zmod:36",
    "gf:2^2",
    "gf:2^3",
    "gf:3^2",
    "gf:5^2",
    "prod:zmod:2,zmod:3",
    "prod:zmod:4,gf:2^2",
    "prod:zmod:2,zmod:2,zmod:3",
];

fn ring_and_values(k: usize) -> impl Strategy<Value = (Ring, Vec<u32>)> {
    (0..RINGS.len()).prop_flat_map(move |i| {
        let r = Ring::parse(RINGS[i]).unwrap();
        let n = r.order() as u32;
        (Just(r), prop::collection::vec(0..n, k))
    })
}

fn matrices(r: &Ring, v: &[u32]) -> Vec<Ut2> {
    v.chunks(3)
        .map(|c| Ut2::from_values(r, c[0], c[1], c[2]).unwrap())
        .collect()
}

proptest! {
    #[test]
    fn ring_axioms((r, v) in ring_and_values(3)) {
        let [a, b, c] = [0, 1, 2].map(|i| r.elem(v[i]).unwrap());
        prop_assert_eq!(r.add(r.add(a, b), c), r.add(a, r.add(b, c)));
        prop_assert_eq!(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c)));
        prop_assert_eq!(r.mul(a, b), r.mul(b, a));
        prop_assert_eq!(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)));
        prop_assert_eq!(r.add(a, r.neg(a)), r.zero());
        prop_assert_eq!(r.sub(a, b), r.add(a, r.neg(b)));
        prop_assert_eq!(r.mul(a, r.one()), a);
        prop_assert_eq!(r.is_unit(a), !r.is_zero(a) && !r.is_zero_divisor(a));
        if r.is_unit(a) {
            prop_assert_eq!(r.mul(a, r.inverse(a).unwrap()), r.one());
        }
    }

    #[test]
    fn commuting_matches_products((r, v) in ring_and_values(6)) {
        let m = matrices(&r, &v);
        let by_product = trimat::mul(&r, &m[0], &m[1]).unwrap() == trimat::mul(&r, &m[1], &m[0]).unwrap();
        prop_assert_eq!(trimat::commutes(&r, &m[0], &m[1]).unwrap(), by_product);
    }

    #[test]
    fn central_shifts_preserve_commuting_and_class((r, v) in ring_and_values(7)) {
        let m = matrices(&r, &v[..6]);
        let s = trimat::Ut2::scalar(&r, r.elem(v[6]).unwrap());
        let shifted = trimat::add(&r, &m[0], &s).unwrap();
        prop_assert_eq!(
            trimat::commutes(&r, &shifted, &m[1]).unwrap(),
            trimat::commutes(&r, &m[0], &m[1]).unwrap()
        );
        prop_assert_eq!(trimat::is_central(&r, &shifted), trimat::is_central(&r, &m[0]));
        if !trimat::is_central(&r, &m[0]) {
            prop_assert_eq!(trimat::class_of(&r, &shifted).unwrap(), trimat::class_of(&r, &m[0]).unwrap());
        }
    }

    #[test]
    fn canonical_form_is_a_central_shift((r, v) in ring_and_values(3)) {
        let a = &matrices(&r, &v)[0];
        let c = trimat::canonicalize(&r, a);
        prop_assert!(r.is_zero(c.matrix.z));
        let back = trimat::add(&r, &c.matrix, &Ut2::scalar(&r, c.shift)).unwrap();
        prop_assert_eq!(&back, a);
    }

    #[test]
    fn class_degree_formula_matches_centralizer(i in 0..5usize, x in 0u32..16, y in 0u32..16) {
        let r = Ring::parse(["zmod:4", "zmod:6", "zmod:8", "gf:2^3", "prod:zmod:2,zmod:4"][i]).unwrap();
        let n = r.order() as u32;
        let a = Ut2::from_values(&r, x % n, y % n, 0).unwrap();
        prop_assume!(!trimat::is_central(&r, &a));
        let tag = trimat::classify(&r, &a).unwrap();
        let predicted = commgraph::formulas::predict_class_degree(&r, &tag, commgraph::formulas::Reading::Corrected).unwrap();
        let counted = oracle::exhaustive_centralizer_degree(&r, &a).unwrap().value;
        prop_assert_eq!(predicted, counted.into());
    }
}

const ENUMERABLE: &[&str] = &[
    "zmod:2",
    "zmod:3",
    "zmod:4",
    "zmod:5",
    "zmod:6",
    "zmod:7",
    "zmod:8",
    "zmod:9",
    "zmod:10",
    "zmod:11",
    "zmod:12",
    "gf:2^2",
    "gf:2^3",
    "gf:3^2",
    "prod:zmod:2,zmod:3",
    "prod:zmod:2,zmod:2",
    "prod:zmod:3,gf:2^2",
];

#[test]
fn handshake_and_partition() {
    for spec in ENUMERABLE {
        let r = Ring::parse(spec).unwrap();
        let n = r.order();
        let g = graph::build_graph(&r).unwrap();
        assert!(g.handshake_holds(), "{spec}");
        let sums = g.class_degree_sums();
        assert_eq!(sums.iter().sum::<u64>(), 2 * g.edge_count(), "{spec}");
        let formula = trimat::class_sizes_formula(&r);
        let counted = trimat::class_sizes(&r, DEFAULT_PAIR_CAP).unwrap();
        assert_eq!(formula.counts, counted.counts, "{spec}");
        assert_eq!(counted.counts.iter().sum::<u64>(), n * n * n - n, "{spec}");
        let mut by_vertex = [0u64; 8];
        for v in 0..g.vertex_count() {
            by_vertex[g.class_of(v).index()] += 1;
        }
        assert_eq!(by_vertex, counted.counts, "{spec}");
    }
}

#[test]
fn degree_is_constant_on_central_cosets() {
    for spec in ENUMERABLE
        .iter()
        .filter(|s| Ring::parse(s).unwrap().order() <= 10)
    {
        let r = Ring::parse(spec).unwrap();
        let g = graph::build_graph(&r).unwrap();
        for (v, a) in g.vertices().iter().enumerate() {
            for s in r.elements() {
                let b = trimat::add(&r, a, &Ut2::scalar(&r, s)).unwrap();
                assert_eq!(
                    g.degree(g.index_of(&b).unwrap()),
                    g.degree(v),
                    "{spec} {}",
                    a.literal(&r)
                );
            }
        }
    }
}

#[test]
fn fast_edge_count_matches_naive() {
    for spec in ENUMERABLE {
        let r = Ring::parse(spec).unwrap();
        let naive = oracle::naive_edge_count(&r).unwrap().value;
        assert_eq!(
            graph::edge_count_fast(&r, DEFAULT_PAIR_CAP).unwrap(),
            naive,
            "{spec}"
        );
        assert_eq!(
            graph::build_graph(&r).unwrap().edge_count(),
            naive,
            "{spec}"
        );
    }
}

#[test]
fn canonical_degrees_agree_with_graph() {
    for spec in ["zmod:8", "gf:3^2", "prod:zmod:2,zmod:4"] {
        let r = Ring::parse(spec).unwrap();
        let g = graph::build_graph(&r).unwrap();
        for c in graph::canonical_degrees(&r, DEFAULT_PAIR_CAP).unwrap() {
            let v = g.index_of(&c.matrix).unwrap();
            assert_eq!(g.degree(v), c.degree, "{spec} {}", c.matrix.literal(&r));
            assert_eq!(g.class_of(v), c.class);
        }
    }
}

#[test]
fn every_class_occurs_over_z8() {
    let r = Ring::parse("zmod:8").unwrap();
    let g = graph::build_graph(&r).unwrap();
    let seen: std::collections::BTreeSet<Class> =
        (0..g.vertex_count()).map(|v| g.class_of(v)).collect();
    assert_eq!(seen.len(), 8);
}
