use num_bigint::BigInt;
use num_traits::{One, Signed};
use proptest::prelude::*;

use young_monotone::dimension::dim_hook;
use young_monotone::measure::{dominates_flow, dominates_upperset, tv_distance};
use young_monotone::partition::{dominance_geq, enumerate_partitions};
use young_monotone::symfunc::{lr_coefficient, schur_ones, schur_product};
use young_monotone::{MeasureOnLevel, Partition, Rat};

fn partition(max_n: usize) -> impl Strategy<Value = Partition> {
    (0..=max_n).prop_flat_map(|n| {
        let all = enumerate_partitions(n);
        (0..all.len()).prop_map(move |k| all[k].clone())
    })
}

fn measure(n: usize) -> impl Strategy<Value = MeasureOnLevel> {
    let count = enumerate_partitions(n).len();
    prop::collection::vec(0u32..5, count).prop_map(move |w| {
        let parts = enumerate_partitions(n);
        let total: u32 = w.iter().sum::<u32>().max(1);
        let entries = parts
            .into_iter()
            .zip(w)
            .map(|(p, m)| (p, Rat::new(m.into(), total.into())));
        let m = MeasureOnLevel::new(n, entries).unwrap();
        if m.total_mass().is_one() {
            m
        } else {
            MeasureOnLevel::delta(&Partition::row(n))
        }
    })
}

proptest! {
    #[test]
    fn conjugation_is_an_involution_reversing_dominance(a in partition(9), b in partition(9)) {
        prop_assert_eq!(a.conjugate().conjugate(), a.clone());
        if a.size() == b.size() {
            let fwd = dominance_geq(&a, &b).unwrap();
            let back = dominance_geq(&b.conjugate(), &a.conjugate()).unwrap();
            prop_assert_eq!(fwd, back);
        }
    }

    #[test]
    fn text_round_trip(a in partition(12)) {
        let back: Partition = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn schur_products_are_commutative_and_sized(a in partition(4), b in partition(4)) {
        let ab = schur_product(&a, &b);
        prop_assert_eq!(&ab, &schur_product(&b, &a));
        for (kappa, c) in ab.iter() {
            prop_assert_eq!(kappa.size(), a.size() + b.size());
            prop_assert_eq!(c, &lr_coefficient(kappa, &a, &b));
        }
        // dim(a) dim(b) binom(|a|+|b|, |a|) = Σ c · dim(κ)
        let lhs: BigInt = ab.iter().map(|(k, c)| c * BigInt::from(dim_hook(k))).sum();
        let rhs = BigInt::from(dim_hook(&a))
            * BigInt::from(dim_hook(&b))
            * binom(a.size() + b.size(), a.size());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn principal_specialization_is_multiplicative(a in partition(4), b in partition(4), n in 4usize..7) {
        let lhs: Rat = schur_product(&a, &b)
            .iter()
            .filter(|(k, _)| k.length() <= n)
            .map(|(k, c)| Rat::from_integer(c.clone()) * schur_ones::<Rat>(k, n).unwrap())
            .sum();
        let rhs = schur_ones::<Rat>(&a, n).unwrap() * schur_ones::<Rat>(&b, n).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn projection_keeps_mass_and_contracts_tv(m in measure(6), h in measure(6), k in 0usize..6) {
        let (pm, ph) = (m.project_to(k).unwrap(), h.project_to(k).unwrap());
        prop_assert!(pm.total_mass().is_one());
        prop_assert!(tv_distance(&pm, &ph).unwrap() <= tv_distance(&m, &h).unwrap());
    }

    #[test]
    fn dominance_deciders_agree_and_projections_stay_ordered(m in measure(5), h in measure(5), k in 1usize..5) {
        let (flow, coupling) = dominates_flow(&m, &h).unwrap();
        prop_assert_eq!(flow, dominates_upperset(&m, &h, 8).unwrap());
        if let Some(c) = coupling {
            prop_assert!(c.is_valid_for(&m, &h));
        }
        if flow {
            let (pm, ph) = (m.project_to(k).unwrap(), h.project_to(k).unwrap());
            prop_assert!(dominates_flow(&pm, &ph).unwrap().0);
        }
        let diff = tv_distance(&m, &h).unwrap();
        prop_assert!(!diff.is_negative());
    }
}

fn binom(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}
