mod common;

use common::{compatible_probe_points, find_failing_scalar, q, random_real_rooted};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sigmaroots::poly::{RatPoly, Rational};
use sigmaroots::realroots::{
    are_compatible, compatible_combo_probe, count_roots_in, interleaves, is_real_rooted, isolate_roots,
    squarefree_part, RootError, SturmChain,
};

fn rp(c: &[i64]) -> RatPoly {
    RatPoly::from_i64s(c)
}

fn small_poly() -> impl Strategy<Value = RatPoly> {
    (prop::collection::vec(-5i64..=5, 0..=8), 1i64..=5).prop_map(|(mut c, lead)| {
        c.push(lead);
        rp(&c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn certificate_matches_root_count(f in small_poly()) {
        let cert = is_real_rooted(&f).unwrap();
        let real: usize = isolate_roots(&f).unwrap().iter().map(|r| r.multiplicity).sum();
        prop_assert_eq!(cert.verdict, real == f.degree().unwrap());
        prop_assert_eq!(cert.verdict, cert.witness.is_none());
    }

    #[test]
    fn chain_degrees_decrease(f in small_poly()) {
        prop_assume!(f.degree().unwrap() >= 1);
        let d = SturmChain::new(&f).unwrap().degrees();
        prop_assert!(d.windows(2).all(|w| w[1] < w[0]));
    }

    #[test]
    fn counts_add_over_partitions(f in small_poly(), cut in -40i64..40) {
        prop_assume!(f.degree().unwrap() >= 1);
        let s = squarefree_part(&f).unwrap();
        let (a, m, b) = (q(-1001, 50), q(2 * cut + 1, 4), q(1001, 50));
        prop_assume!([&a, &m, &b].iter().all(|x| s.sign_at(x) != 0));
        let whole = count_roots_in(&s, &a, &b).unwrap();
        let parts = count_roots_in(&s, &a, &m).unwrap() + count_roots_in(&s, &m, &b).unwrap();
        prop_assert_eq!(whole, parts);
    }

    #[test]
    fn derivative_interleaves(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_real_rooted(&mut rng, 6);
        prop_assume!(f.degree().unwrap_or(0) >= 1);
        prop_assert!(interleaves(&f, &f.derivative()).unwrap());
    }

    #[test]
    fn compatibility_symmetric_and_reflexive(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_real_rooted(&mut rng, 5);
        let g = random_real_rooted(&mut rng, 5);
        prop_assert!(are_compatible(&f, &f).unwrap());
        prop_assert_eq!(are_compatible(&f, &g).unwrap(), are_compatible(&g, &f).unwrap());
    }
}

#[test]
fn compatibility_against_combo_probes() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut yes, mut no) = (0, 0);
    for _ in 0..200 {
        let f = random_real_rooted(&mut rng, 4);
        let g = random_real_rooted(&mut rng, 4);
        if are_compatible(&f, &g).unwrap() {
            yes += 1;
            for c in compatible_probe_points() {
                assert!(
                    compatible_combo_probe(&f, &g, &c).unwrap().verdict,
                    "{f} / {g} at {c}"
                );
            }
        } else {
            no += 1;
            assert!(
                find_failing_scalar(&f, &g).is_some(),
                "budget exhausted for {f} / {g}"
            );
        }
    }
    assert!(yes > 20 && no > 20, "{yes} compatible, {no} incompatible");
}

#[test]
fn degree_gap_pairs_are_incompatible() {
    let quartic = &(&rp(&[1, 1]) * &rp(&[2, 1])) * &(&rp(&[3, 1]) * &rp(&[4, 1]));
    let f = rp(&[1, 1]);
    assert!(!are_compatible(&f, &quartic).unwrap());
    let c = find_failing_scalar(&f, &quartic).expect("a failing scalar");
    assert!(!compatible_combo_probe(&f, &quartic, &c).unwrap().verdict);
}

#[test]
fn probe_alone_is_insufficient() {
    // (x²−1) + (x²+1) = 2x² is real-rooted even though x²+1 is not
    let one = Rational::from_integer(1.into());
    assert!(
        compatible_combo_probe(&rp(&[-1, 0, 1]), &rp(&[1, 0, 1]), &one)
            .unwrap()
            .verdict
    );
    assert_eq!(
        are_compatible(&rp(&[-1, 0, 1]), &rp(&[1, 0, 1])),
        Err(RootError::NotRealRooted)
    );
}

#[test]
fn isolation_brackets_sqrt_two() {
    let r = isolate_roots(&rp(&[-2, 0, 1])).unwrap();
    let f = rp(&[-2, 0, 1]);
    for iv in &r {
        assert!(f.sign_at(&iv.lo) * f.sign_at(&iv.hi) < 0);
    }
    assert!(r[0].hi <= q(0, 1) && r[1].lo >= q(0, 1));
    assert_eq!(count_roots_in(&f, &q(1, 1), &q(3, 2)).unwrap(), 1);
    assert_eq!(count_roots_in(&f, &q(-3, 2), &q(-1, 1)).unwrap(), 1);
}
