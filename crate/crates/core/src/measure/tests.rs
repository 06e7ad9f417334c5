use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::rat;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn measure(level: usize, entries: &[(&str, Rat)]) -> MeasureOnLevel {
    MeasureOnLevel::new(level, entries.iter().map(|(s, m)| (p(s), m.clone()))).unwrap()
}

fn random_measure(rng: &mut ChaCha8Rng, level: usize, mass: &Rat) -> MeasureOnLevel {
    let all = enumerate_partitions(level);
    let weights: Vec<u32> = all
        .iter()
        .map(|_| if rng.gen_bool(0.5) { rng.gen_range(1..6) } else { 0 })
        .collect();
    let total: u32 = weights.iter().sum();
    if total == 0 {
        return MeasureOnLevel::atom(&all[rng.gen_range(0..all.len())], mass.clone());
    }
    MeasureOnLevel::new(
        level,
        all.into_iter()
            .zip(weights)
            .map(|(l, w)| (l, mass * rat(w as i64, total as i64))),
    )
    .unwrap()
}

#[test]
fn projection_examples() {
    let m = MeasureOnLevel::delta(&p("2,1")).project_one().unwrap();
    assert_eq!(m, measure(2, &[("2", rat(1, 2)), ("1,1", rat(1, 2))]));
    for n in 1..=6 {
        let m = MeasureOnLevel::delta(&Partition::row(n)).project_one().unwrap();
        assert_eq!(m, MeasureOnLevel::delta(&Partition::row(n - 1)));
    }
    assert_eq!(
        MeasureOnLevel::delta(&p("2,1")).project_to(1).unwrap(),
        MeasureOnLevel::delta(&p("1"))
    );
    let m = measure(3, &[("3", rat(1, 3)), ("2,1", rat(2, 3))]);
    assert_eq!(m.project_to(3).unwrap(), m);
    assert!(m.project_to(4).is_err());
    assert!(MeasureOnLevel::zero(0).project_one().is_err());
}

#[test]
fn projection_composes_and_conserves_mass() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 1..=7 {
        let m = random_measure(&mut rng, n, &rat(3, 2));
        let one = m.project_one().unwrap();
        assert_eq!(one.total_mass(), m.total_mass());
        for k in 0..=n {
            let direct = m.project_to(k).unwrap();
            for j in 0..=k {
                assert_eq!(direct.project_to(j).unwrap(), m.project_to(j).unwrap());
            }
        }
    }
}

#[test]
fn direct_atom_projection_matches_iteration() {
    assert_eq!(
        project_atom_direct(&p("2,1"), 2).unwrap(),
        measure(2, &[("2", rat(1, 2)), ("1,1", rat(1, 2))])
    );
    assert_eq!(
        project_atom_direct(&p("3,1"), 4).unwrap(),
        MeasureOnLevel::delta(&p("3,1"))
    );
    for n in 0..=8 {
        for l in enumerate_partitions(n) {
            let delta = MeasureOnLevel::delta(&l);
            for r in 0..=n {
                assert_eq!(project_atom_direct(&l, r).unwrap(), delta.project_to(r).unwrap());
            }
        }
    }
}

#[test]
fn total_variation() {
    let m = measure(2, &[("2", rat(1, 2)), ("1,1", rat(1, 2))]);
    assert_eq!(tv_distance(&m, &m).unwrap(), rat(0, 1));
    let a = MeasureOnLevel::delta(&p("2"));
    let b = MeasureOnLevel::delta(&p("1,1"));
    assert_eq!(tv_distance(&a, &b).unwrap(), rat(1, 1));
    assert_eq!(tv_distance(&m, &a).unwrap(), rat(1, 2));
    assert!(tv_distance(&a, &MeasureOnLevel::delta(&p("1"))).is_err());
}

#[test]
fn projection_contracts_total_variation() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let n = rng.gen_range(1..=8);
        let a = random_measure(&mut rng, n, &rat(1, 1));
        let b = random_measure(&mut rng, n, &rat(1, 1));
        let d = tv_distance(&a, &b).unwrap();
        for k in 0..n {
            let dk = tv_distance(&a.project_to(k).unwrap(), &b.project_to(k).unwrap()).unwrap();
            assert!(dk <= d);
        }
    }
}

#[test]
fn dominance_examples() {
    let a = MeasureOnLevel::delta(&p("3,1"));
    let b = MeasureOnLevel::delta(&p("2,2"));
    let (ok, c) = dominates_flow(&a, &b).unwrap();
    assert!(ok);
    let c = c.unwrap();
    assert_eq!(c.entries.len(), 1);
    assert!(c.is_valid_for(&a, &b));
    assert!(dominates_upperset(&a, &b, 8).unwrap());

    let m = measure(4, &[("3,1", rat(1, 3)), ("2,1,1", rat(2, 3))]);
    assert!(dominates_flow(&m, &m).unwrap().0);
    assert!(dominates_upperset(&m, &m, 8).unwrap());

    let rho = measure(3, &[("3", rat(1, 2)), ("1,1,1", rat(1, 2))]);
    let rho_hat = MeasureOnLevel::delta(&p("2,1"));
    assert!(!dominates_flow(&rho, &rho_hat).unwrap().0);
    assert!(!dominates_upperset(&rho, &rho_hat, 8).unwrap());

    assert!(matches!(
        dominates_flow(&a, &MeasureOnLevel::atom(&p("2,2"), rat(1, 2))),
        Err(Error::MassMismatch(..))
    ));
    let (ok, c) = dominates_flow(&MeasureOnLevel::zero(3), &MeasureOnLevel::zero(3)).unwrap();
    assert!(ok && c.unwrap().entries.is_empty());
}

#[test]
fn deciders_agree_on_atoms() {
    for n in 0..=6 {
        let all = enumerate_partitions(n);
        for a in &all {
            for b in &all {
                let (da, db) = (MeasureOnLevel::delta(a), MeasureOnLevel::delta(b));
                let (flow, witness) = dominates_flow(&da, &db).unwrap();
                assert_eq!(flow, dominates_upperset(&da, &db, 8).unwrap());
                assert_eq!(flow, dominates_unchecked(a, b));
                if let Some(w) = witness {
                    assert!(w.is_valid_for(&da, &db));
                }
            }
        }
    }
}

#[test]
fn deciders_agree_on_random_measures() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..150 {
        let n = rng.gen_range(1..=6);
        let a = random_measure(&mut rng, n, &rat(1, 1));
        let b = random_measure(&mut rng, n, &rat(1, 1));
        let (flow, witness) = dominates_flow(&a, &b).unwrap();
        assert_eq!(flow, dominates_upperset(&a, &b, 8).unwrap(), "{a} vs {b}");
        if let Some(w) = witness {
            assert!(w.is_valid_for(&a, &b));
        }
    }
}

#[test]
fn dominance_is_transitive_via_composed_couplings() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0;
    for _ in 0..400 {
        let n = rng.gen_range(2..=6);
        let a = random_measure(&mut rng, n, &rat(1, 1));
        let b = random_measure(&mut rng, n, &rat(1, 1));
        let c = random_measure(&mut rng, n, &rat(1, 1));
        let (ab, w1) = dominates_flow(&a, &b).unwrap();
        let (bc, w2) = dominates_flow(&b, &c).unwrap();
        if ab && bc {
            let composed = w1.unwrap().compose(&w2.unwrap());
            assert!(composed.is_valid_for(&a, &c));
            assert!(dominates_flow(&a, &c).unwrap().0);
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn upper_set_guard() {
    let a = MeasureOnLevel::delta(&Partition::row(9));
    assert!(matches!(
        dominates_upperset(&a, &a, 8),
        Err(Error::LimitExceeded { .. })
    ));
}

#[test]
fn thm12_examples() {
    let rho = MeasureOnLevel::delta(&p("3"));
    let rho_hat = MeasureOnLevel::delta(&p("2,1"));
    match check_thm12(&rho, &rho_hat, 2).unwrap() {
        Thm12Outcome::Holds(c) => {
            let expected = measure(2, &[("2", rat(1, 2)), ("1,1", rat(1, 2))]);
            assert_eq!(rho_hat.project_to(2).unwrap(), expected);
            assert!(c.is_valid_for(&MeasureOnLevel::delta(&p("2")), &expected));
        }
        Thm12Outcome::Fails { .. } => panic!("projection lost dominance"),
    }
    let m = measure(4, &[("3,1", rat(1, 2)), ("2,2", rat(1, 2))]);
    for k in 0..4 {
        assert!(matches!(check_thm12(&m, &m, k).unwrap(), Thm12Outcome::Holds(_)));
    }
    assert!(matches!(
        check_thm12(&rho_hat, &rho, 1),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn json_wire_format() {
    let m = measure(4, &[("3,1", rat(1, 2)), ("2,2", rat(1, 2))]);
    let text = format!("{m}");
    assert_eq!(text, "{(3,1): 1/2, (2,2): 1/2}");
}
