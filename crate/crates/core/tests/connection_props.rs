use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;
use skewpart::catalog::eulerian_multigraphs;
use skewpart::connection::{
    catalan_rank, connection_submatrix, eulerian_fragments, falling_factorial, glue,
    hook_length_dimension, matching_matrix, signed_cycle_count_sum, verify_fragment_gram,
    verify_skew_relation,
};
use skewpart::matchdir::all_directed_matchings;
use skewpart::{
    bilinear_form, build_martin_model, skew_partition, tau_matching, Fragment, Limits, Multigraph,
    Rational, Scalar, SkewTensorQ, SparseTensorQ,
};

fn subsets(n: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .map(|mask| (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect())
        .collect()
}

fn skew_tensor(ell: usize) -> impl Strategy<Value = SkewTensorQ> {
    let count = 1usize << (2 * ell);
    prop::collection::vec(-3i64..=3, count).prop_map(move |vals| {
        subsets(2 * ell)
            .into_iter()
            .zip(vals)
            .fold(SkewTensorQ::new(ell), |h, (s, v)| {
                h.with(&s, Rational::from_int(v)).unwrap()
            })
    })
}

fn sparse(ell: usize, order: usize) -> impl Strategy<Value = SparseTensorQ> {
    prop::collection::vec(
        (prop::collection::vec(1..=2 * ell, order), -4i64..=4),
        0..10,
    )
    .prop_map(move |terms| {
        let mut t = SparseTensorQ::zero(ell, order);
        for (w, c) in terms {
            t.add_term(&w, Rational::from_int(c)).unwrap();
        }
        t
    })
}

/// Standard Young tableaux counted by removing corners one at a time.
fn syt_count(shape: &mut Vec<usize>) -> BigUint {
    if shape.iter().all(|&r| r == 0) {
        return BigUint::from(1u8);
    }
    let mut total = BigUint::from(0u8);
    for i in 0..shape.len() {
        let below = shape.get(i + 1).copied().unwrap_or(0);
        if shape[i] > below {
            shape[i] -= 1;
            total += syt_count(shape);
            shape[i] += 1;
        }
    }
    total
}

fn partition() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1usize..=4, 1..=4).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn form_is_graded_symmetric(x in sparse(2, 3), y in sparse(2, 3), a in sparse(1, 2), b in sparse(1, 2)) {
        prop_assert_eq!(bilinear_form(&x, &y).unwrap(), -bilinear_form(&y, &x).unwrap());
        prop_assert_eq!(bilinear_form(&a, &b).unwrap(), bilinear_form(&b, &a).unwrap());
    }

    #[test]
    fn hook_length_counts_tableaux(shape in partition()) {
        prop_assert_eq!(hook_length_dimension(&shape).unwrap(), syt_count(&mut shape.clone()));
    }

    #[test]
    fn signed_cycle_sum_is_falling_factorial(m in 0usize..=5, x in -6i64..=6) {
        let x = BigInt::from(x);
        prop_assert_eq!(signed_cycle_count_sum(m, &x, &Limits::default()).unwrap(), falling_factorial(&x, m));
    }

    #[test]
    fn relation_holds_for_any_skew_tensor(
        h in skew_tensor(1),
        g in prop::sample::select(eulerian_multigraphs(5)),
        a in 0usize..5,
        b in 0usize..5,
    ) {
        let m = g.edge_count();
        prop_assume!(m >= 2);
        let (a, b) = (a % m, b % m);
        prop_assume!(a != b);
        let lim = Limits::default();
        let f = |g: &Multigraph| skew_partition(&h, g, &lim);
        let report = verify_skew_relation(&f, &g, &[a, b], &lim).unwrap();
        prop_assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn fragment_gram_for_any_skew_tensor(h in skew_tensor(1), picks in prop::collection::vec(0usize..1000, 1..5)) {
        let family = eulerian_fragments(4, 4);
        let chosen: Vec<Fragment> = picks.iter().map(|&i| family[i % family.len()].clone()).collect();
        let report = verify_fragment_gram(&h, &chosen, &Limits::default()).unwrap();
        prop_assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn gluing_is_symmetric(i in 0usize..1000, j in 0usize..1000) {
        let family = eulerian_fragments(2, 3);
        let (a, b) = (&family[i % family.len()], &family[j % family.len()]);
        let h = build_martin_model::<Rational>(1);
        let lim = Limits::default();
        let ab = glue(a, b).unwrap();
        let ba = glue(b, a).unwrap();
        prop_assert_eq!(ab.edge_count(), ba.edge_count());
        prop_assert_eq!(skew_partition(&h, &ab, &lim).unwrap(), skew_partition(&h, &ba, &lim).unwrap());
    }
}

#[test]
fn matching_matrix_ranks_are_catalan() {
    let lim = Limits::default();
    for k in 1..=4 {
        let n = matching_matrix::<Rational>(-2, k, &lim).unwrap();
        assert!(n.is_symmetric());
        assert_eq!(BigUint::from(n.rank()), catalan_rank(k));
        assert_eq!(catalan_rank(k), hook_length_dimension(&vec![2; k]).unwrap());
    }
}

#[test]
fn tau_gram_matches_cycle_counts() {
    // ⟨τ(M), τ(M)⟩ = ±(2ℓ)^m for the standard matching
    for ell in 1..=2 {
        for m in 1..=2 {
            let t = tau_matching::<Rational>(&all_directed_matchings(m)[0], ell);
            let v = bilinear_form(&t, &t).unwrap();
            let expected = <Rational as Scalar>::powi(&Rational::from_int(2 * ell as i64), m);
            assert!(v == expected || v == -expected.clone(), "{v}");
        }
    }
}

#[test]
fn connection_rank_of_two_fragments() {
    let h = build_martin_model::<Rational>(1);
    let lim = Limits::default();
    let family = eulerian_fragments(2, 5);
    let m = connection_submatrix(|g: &Multigraph| skew_partition(&h, g, &lim), &family).unwrap();
    assert!(m.is_symmetric());
    let cert = m.rank_certificate();
    assert!(cert.rank <= 4);
    assert_eq!(
        m.select(&cert.pivot_rows, &cert.pivot_cols).rank(),
        cert.rank
    );
}

#[test]
fn mixed_label_counts_are_rejected() {
    let h = build_martin_model::<Rational>(1);
    let lim = Limits::default();
    let f = |g: &Multigraph| skew_partition(&h, g, &lim);
    assert!(connection_submatrix(f, &[Fragment::unit(1), Fragment::unit(2)]).is_err());
}
