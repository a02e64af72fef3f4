use chrombound::canon::canonical_key;
use chrombound::engine::{chromatic_polynomial, chromatic_polynomial_reference, count_colorings_bruteforce, MemoCache};
use chrombound::families::extremal_form;
use chrombound::graph::Graph;
use chrombound::verify::{check_bound, Verifier};
use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// Complement of a maximal triangle-free graph grown from a random edge
/// order, so the result has independence number at most two.
fn alpha_two(max_n: usize) -> impl Strategy<Value = Graph> {
    (5..=max_n).prop_flat_map(|n| {
        Just((0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(move |order| {
                let mut h = Graph::empty(n).unwrap();
                for (u, v) in order {
                    if h.neighbors(u) & h.neighbors(v) == 0 {
                        h = h.add_edge(u, v).unwrap();
                    }
                }
                h.complement()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn pipeline_matches_plain_recursion(g in graph(9)) {
        prop_assert_eq!(chromatic_polynomial(&g, &MemoCache::new()).unwrap(), chromatic_polynomial_reference(&g));
    }

    #[test]
    fn values_count_colorings(g in graph(6), x in 0u64..=4) {
        let pi = chromatic_polynomial(&g, &MemoCache::new()).unwrap();
        prop_assert_eq!(pi.eval_at(x as i64), BigInt::from(count_colorings_bruteforce(&g, x).unwrap()));
    }

    #[test]
    fn coefficient_structure(g in graph(10)) {
        let pi = chromatic_polynomial(&g, &MemoCache::new()).unwrap();
        let c = pi.coeffs();
        let n = g.order();
        prop_assert_eq!(c.len(), n + 1);
        prop_assert_eq!(&c[n], &BigInt::from(1));
        prop_assert_eq!(&c[n - 1], &BigInt::from(-(g.edge_count() as i64)));
        prop_assert_eq!(&c[0], &BigInt::from(0));
        for (i, a) in c.iter().enumerate().skip(1) {
            // coefficients alternate in sign
            prop_assert!(a.is_zero_or_sign((n - i) % 2 == 0));
        }
    }

    #[test]
    fn polynomial_is_isomorphism_invariant(
        (g, perm) in graph(8).prop_flat_map(|g| {
            let n = g.order();
            (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
        })
    ) {
        let h = g.permute(&perm);
        prop_assert_eq!(canonical_key(&g), canonical_key(&h));
        let cache = MemoCache::new();
        prop_assert_eq!(chromatic_polynomial(&g, &cache).unwrap(), chromatic_polynomial_reference(&h));
    }

    #[test]
    fn bound_holds_on_random_alpha_two_graphs(g in alpha_two(12)) {
        prop_assume!(g.is_connected());
        let k = g.chromatic_number();
        prop_assume!(k >= 4);
        let xs: Vec<u64> = (k as u64..=k as u64 + 6).collect();
        let c = check_bound(&g, k, &xs, &MemoCache::new()).unwrap();
        prop_assert!(c.holds(), "{:?}", c);
    }
}

trait SignCheck {
    fn is_zero_or_sign(&self, positive: bool) -> bool;
}

impl SignCheck for BigInt {
    fn is_zero_or_sign(&self, positive: bool) -> bool {
        *self == BigInt::from(0) || self.is_positive() == positive
    }
}

#[test]
fn bound_form_at_small_points() {
    // (x)_k (x-1)^(n-k) vanishes below k and is positive from k on
    for k in 2..=6usize {
        let b = extremal_form(k, 3);
        for x in 0..k as i64 {
            assert_eq!(b.eval_at(x), BigInt::from(0));
        }
        assert!(b.eval_at(k as i64).is_positive());
    }
}

#[test]
fn reports_are_reproducible() {
    let a = Verifier::new().verify_identities(200, 11).unwrap();
    let b = Verifier::new().verify_identities(200, 11).unwrap();
    assert_eq!(a, b);
    let c = Verifier::new().verify_identities(200, 12).unwrap();
    assert_eq!(c.params.seed, Some(12));
}
