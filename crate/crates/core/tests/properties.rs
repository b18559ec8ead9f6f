use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;
use quadrics_core::arith::{factorial, multinomial};
use quadrics_core::coxeter::{b_poly, descent_set, for_each_min_coset_rep, root_exponent, stat_a, stat_b, RootSubset};
use quadrics_core::hermite::{hermite_eval, hermite_via_convolution};
use quadrics_core::orbits::{composition_to_subset, subset_to_composition, Composition};
use quadrics_core::perm::Permutation;
use quadrics_core::tableaux::{enumerate_syt, num_skew_syt, num_syt, Partition, SkewShape};

fn partition(max_weight: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=max_weight, 0..=max_weight).prop_map(move |mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let mut total = 0;
        parts.retain(|&p| {
            total += p;
            total <= max_weight
        });
        Partition::new(parts).unwrap()
    })
}

fn nonempty_partition(max_weight: usize) -> impl Strategy<Value = Partition> {
    partition(max_weight).prop_filter("nonempty", |p| p.weight() > 0)
}

fn skew_shape() -> impl Strategy<Value = SkewShape> {
    prop::collection::vec(nonempty_partition(4), 1..=3)
        .prop_filter("weight <= 8", |fs| fs.iter().map(Partition::weight).sum::<usize>() <= 8)
        .prop_map(|fs| SkewShape::new(fs).unwrap())
}

fn subset(max_n: usize) -> impl Strategy<Value = RootSubset> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n - 1).prop_map(move |bits| {
            let members: Vec<usize> = (1..n).filter(|&i| bits[i - 1]).collect();
            RootSubset::new(n, &members).unwrap()
        })
    })
}

fn permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=n as u8).collect::<Vec<u8>>()).prop_shuffle())
        .prop_map(|w| Permutation::new(w).unwrap())
}

fn composition(max_n: usize) -> impl Strategy<Value = Composition> {
    prop::collection::vec(1usize..=4, 1..=max_n)
        .prop_filter("small", move |ps| ps.iter().sum::<usize>() <= max_n)
        .prop_map(|ps| Composition::new(ps).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn syt_count_is_conjugation_invariant(lambda in partition(10)) {
        prop_assert_eq!(num_syt(&lambda), num_syt(&lambda.conjugate()));
    }

    #[test]
    fn skew_formula_matches_fillings(shape in skew_shape()) {
        prop_assert_eq!(num_skew_syt(&shape), enumerate_syt(&shape, 8).unwrap());
    }

    #[test]
    fn skew_count_is_multinomial_times_factors(shape in skew_shape()) {
        let weights: Vec<usize> = shape.factors().iter().map(Partition::weight).collect();
        let product: BigUint = shape.factors().iter().map(num_syt).product();
        prop_assert_eq!(num_skew_syt(&shape), multinomial(shape.weight(), &weights) * product);
    }

    #[test]
    fn b_poly_counts_cosets(j in subset(7)) {
        let p = b_poly(&j);
        prop_assert!(p.has_nonnegative_coeffs());
        let at_one = p.eval(&BigInt::from(1));
        let blocks: Vec<usize> = j.block_sizes();
        prop_assert_eq!(at_one.clone(), BigInt::from(multinomial(j.n(), &blocks)));
        let runs = j.run_sizes();
        let identity = runs.iter().fold(factorial(j.n()), |acc, &m| acc / factorial(m + 1));
        prop_assert_eq!(at_one, BigInt::from(identity));
    }

    #[test]
    fn coset_reps_avoid_descents_in_j(j in subset(7)) {
        let mut count = 0usize;
        for_each_min_coset_rep(&j, |w| {
            let w = Permutation::new(w.to_vec()).unwrap();
            assert!(descent_set(&w).iter().all(|&i| !j.contains(i)), "{w} has a descent in {j}");
            count += 1;
        });
        prop_assert_eq!(BigUint::from(count), j.coset_count());
    }

    #[test]
    fn root_exponent_splits(j in subset(7).prop_filter("special", RootSubset::is_special), seed in any::<u64>()) {
        let mut reps = Vec::new();
        for_each_min_coset_rep(&j, |w| reps.push(w.to_vec()));
        let w = Permutation::new(reps[(seed as usize) % reps.len()].clone()).unwrap();
        prop_assert_eq!(root_exponent(&w, &j), stat_a(&w, &j) + stat_b(&w, &j));
    }

    #[test]
    fn inverse_composes_to_identity(w in permutation(12)) {
        prop_assert!(w.compose(&w.inverse()).is_identity());
        prop_assert_eq!(w.inverse().length(), w.length());
        prop_assert_eq!(w.is_involution(), w == w.inverse());
    }

    #[test]
    fn hermite_forms_agree(n in 0usize..=12, k in 1usize..=12) {
        prop_assert_eq!(
            hermite_eval(n, &BigInt::from(k)),
            BigInt::from(hermite_via_convolution(n, k))
        );
    }

    #[test]
    fn compositions_and_subsets_correspond(gamma in composition(20)) {
        let j = composition_to_subset(&gamma);
        prop_assert_eq!(subset_to_composition(&j), gamma.clone());
        let mut runs: Vec<usize> = gamma.parts().iter().filter(|&&p| p > 1).map(|p| p - 1).collect();
        let mut got = j.run_sizes();
        runs.sort_unstable();
        got.sort_unstable();
        prop_assert_eq!(got, runs);
    }
}
