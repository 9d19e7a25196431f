//! Property tests for the structural invariants: canonical-code permutation
//! invariance, graph6 round trips, exact radical arithmetic laws, and the
//! agreement of the two Randic routes.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use randic_core::graph::Graph;
use randic_core::radical::RadicalValue;
use randic_core::randic::{randic_exact, randic_float, randic_of_signature};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if bits[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn arb_graph_and_permutation(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (
            prop::collection::vec(any::<bool>(), pairs),
            prop::collection::vec(any::<u64>(), n),
        )
            .prop_map(move |(bits, keys)| {
                let mut edges = Vec::new();
                let mut idx = 0;
                for u in 0..n {
                    for v in (u + 1)..n {
                        if bits[idx] {
                            edges.push((u, v));
                        }
                        idx += 1;
                    }
                }
                let g = Graph::from_edges(n, &edges).unwrap();
                let mut order: Vec<usize> = (0..n).collect();
                order.sort_by_key(|&i| (keys[i], i));
                let mut perm = vec![0; n];
                for (pos, &v) in order.iter().enumerate() {
                    perm[v] = pos;
                }
                (g, perm)
            })
    })
}

fn arb_radical() -> impl Strategy<Value = RadicalValue> {
    prop::collection::vec((1u64..=60, -9i64..=9, 1i64..=9), 0..5).prop_map(|terms| {
        let mut v = RadicalValue::zero();
        for (s, num, den) in terms {
            let q = BigRational::new(BigInt::from(num), BigInt::from(den));
            v = v.add(&RadicalValue::from_term(q, s).unwrap());
        }
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn canonical_code_is_permutation_invariant((g, perm) in arb_graph_and_permutation(9)) {
        let relabeled = g.permuted(&perm);
        prop_assert_eq!(relabeled.canonical_code(), g.canonical_code());
    }

    #[test]
    fn graph6_round_trip_is_identity(g in arb_graph(12)) {
        let text = g.to_graph6();
        let back = Graph::from_graph6(&text).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn reciprocal_sqrt_squares_to_reciprocal(p in 1u64..=10_000) {
        let r = RadicalValue::reciprocal_sqrt(p).unwrap();
        let squared = r.mul(&r);
        let expected = RadicalValue::from_rational(
            BigRational::new(BigInt::from(1), BigInt::from(p)),
        );
        prop_assert_eq!(squared, expected);
    }

    #[test]
    fn radical_addition_laws(a in arb_radical(), b in arb_radical(), c in arb_radical(),
                             num in -7i64..=7, den in 1i64..=7) {
        let q = BigRational::new(BigInt::from(num), BigInt::from(den));
        // Associativity and commutativity.
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.add(&b), b.add(&a));
        // Scaling distributes over addition.
        prop_assert_eq!(a.add(&b).scale(&q), a.scale(&q).add(&b.scale(&q)));
        // A value cancels itself symbolically.
        prop_assert_eq!(a.sub(&a).sign(), Ordering::Equal);
    }

    #[test]
    fn radical_sign_matches_float(a in arb_radical()) {
        prop_assert_eq!(a.sign() == Ordering::Equal, a.is_zero());
        let f = a.to_f64();
        // The float check is only meaningful away from the rounding noise.
        if f.abs() > 1e-9 {
            let expected = if f > 0.0 { Ordering::Greater } else { Ordering::Less };
            prop_assert_eq!(a.sign(), expected);
        }
    }

    #[test]
    fn randic_routes_agree(g in arb_graph(9)) {
        let direct = randic_exact(&g);
        let via_signature = randic_of_signature(&g.edge_type_signature());
        prop_assert_eq!(&direct, &via_signature);
        // The float route tracks the exact value closely.
        let err = (randic_float(&g) - direct.to_f64()).abs();
        prop_assert!(err < 1e-9);
    }

    #[test]
    fn float_tracks_exact_at_larger_orders(edges in prop::collection::vec((0usize..32, 0usize..32), 0..80)) {
        let mut g = Graph::new(32).unwrap();
        for (u, v) in edges {
            if u != v && !g.has_edge(u, v) {
                g = g.with_edge(u, v).unwrap();
            }
        }
        let exact = randic_exact(&g);
        prop_assert!((randic_float(&g) - exact.to_f64()).abs() < 1e-9);
        // Cross-check against the decimal rendering at high precision.
        if !exact.is_zero() {
            let dec: f64 = exact.to_decimal(15).parse().unwrap();
            prop_assert!((randic_float(&g) - dec).abs() < 1e-9);
        }
    }
}
