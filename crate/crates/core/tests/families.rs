use num_bigint::BigInt;
use proptest::prelude::*;
use sigmaroots::families::{
    f45_construction, f_family_cubic, f_family_sigma, join_with_clique, pointcover_complement,
    quadratic_compatibility_check, root_chain_check, sigma_pointcover_formula, AlphaBeta, FamilyError,
    FamilyMember, FamilySpec, PointCoverParams, Span,
};
use sigmaroots::graph::{chromatic_number, Graph};
use sigmaroots::poly::{IntPoly, Rational};
use sigmaroots::realroots::SturmChain;
use sigmaroots::sigma::{sigma, sigma_bruteforce};

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn params() -> impl Strategy<Value = PointCoverParams> {
    (
        0usize..=4,
        0usize..=4,
        0usize..=4,
        0usize..=4,
        1usize..=4,
        1usize..=4,
    )
        .prop_map(|(m1, m2, m3, r, j, k)| PointCoverParams::new(m1, m2, m3, r, j, k))
}

#[test]
fn variant_three_sturm_values() {
    for m in [0i64, 1, 7, 30] {
        let cubic = f_family_cubic(3, m as usize).unwrap().to_rational();
        let lead = SturmChain::unnormalized(&cubic).unwrap().leading_coefficients();
        let quad = m * m + m + 16;
        let quartic = 5 * m.pow(4) + 2 * m.pow(3) + 99 * m * m + 46 * m + 469;
        assert_eq!(
            lead,
            vec![q(1, 1), q(3, 1), q(2 * quad, 9), q(9 * quartic, 4 * quad * quad)],
            "m = {m}"
        );
    }
}

#[test]
fn closed_forms_are_real_rooted() {
    for variant in [2, 3] {
        for m in 0..=60 {
            let s = f_family_sigma(variant, m).unwrap();
            assert_eq!(s.low_order(), m + 3);
            let reduced = IntPoly::new(s.coeffs()[m + 3..].to_vec()).to_rational();
            assert!(sigmaroots::realroots::is_real_rooted(&reduced).unwrap().verdict);
        }
    }
    assert_eq!(f_family_cubic(7, 0), Err(FamilyError::UnknownVariant(7)));
}

#[test]
fn f45_graphs() {
    for variant in [4, 5] {
        for m in 0..=8 {
            let g = f45_construction(variant, m).unwrap();
            assert_eq!(g.order(), m + 6);
            assert_eq!(chromatic_number(&g), m + 3);
            assert!(sigma(&g).certify().unwrap().verdict);
        }
    }
    assert_eq!(f45_construction(3, 1), Err(FamilyError::UnknownVariant(3)));
    assert_eq!(f45_construction(4, 60), Err(FamilyError::TooLarge(66)));
    assert_eq!(
        join_with_clique(&Graph::complete(60).unwrap(), 5),
        Err(FamilyError::TooLarge(65))
    );
}

#[test]
fn quadratics_on_a_wide_grid() {
    for a in 1..=15 {
        for b in 1..=15 {
            let ab = AlphaBeta::new(a, b);
            assert!(quadratic_compatibility_check(ab).unwrap(), "α={a} β={b}");
            if a >= 2 && b >= 2 {
                assert!(root_chain_check(ab).unwrap().strict, "α={a} β={b}");
            }
        }
    }
    assert_eq!(
        root_chain_check(AlphaBeta::new(0, 3)),
        Err(FamilyError::DegenerateAlphaBeta)
    );
}

#[test]
fn discriminant_of_the_combination() {
    // c·q_J + q_K written out coefficient by coefficient
    for (a, b) in [(1i64, 1i64), (2, 5), (6, 3), (9, 9)] {
        let ab = AlphaBeta::new(a as usize, b as usize);
        for c in [q(1, 9), q(1, 1), q(7, 2), q(50, 1)] {
            let combo = &ab.quadratic_j().to_rational().scale(&c) + &ab.quadratic_k().to_rational();
            let [c0, c1, c2] = [0, 1, 2].map(|i| combo.coeff(i));
            let disc = &c1 * &c1 - q(4, 1) * &c2 * &c0;
            let c_plus = &c + q(1, 1);
            let (ra, rb) = (q(a, 1), q(b, 1));
            let reduced = &c_plus * (&ra - &rb) * (&ra - &rb) + q(4, 1) * (&c * &rb + &ra);
            assert_eq!(disc, &c_plus * reduced);
        }
    }
}

#[test]
fn formula_rejects_bad_parameters() {
    assert_eq!(
        sigma_pointcover_formula(&PointCoverParams::new(0, 0, 0, 0, 0, 2)),
        Err(FamilyError::EmptyJOrK)
    );
    assert_eq!(
        pointcover_complement(&PointCoverParams::new(20, 20, 20, 1, 1, 1)),
        Err(FamilyError::TooLarge(66))
    );
}

#[test]
fn grid_json() {
    let spec: FamilySpec = serde_json::from_str(
        r#"{"family": "pointcover", "m1": [0, 1], "m2": 2, "m3": 0, "r": [1, 2], "j": 1, "k": [1, 3]}"#,
    )
    .unwrap();
    let members = spec.members().unwrap();
    assert_eq!(members.len(), 2 * 2 * 3);
    assert!(members.iter().all(|m| matches!(m, FamilyMember::Graph { .. })));
    assert_eq!(members[0].label(), "pointcover(m1=0,m2=2,m3=0,r=1,j=1,k=1,t=0)");
    let back: FamilySpec = serde_json::from_str(&serde_json::to_string(&spec).unwrap()).unwrap();
    assert_eq!(back, spec);
    assert_eq!(Span::Range([2, 4]).values().count(), 3);
    assert!(serde_json::from_str::<FamilySpec>(r#"{"family": "nope"}"#).is_err());
    let sizes: Vec<usize> = FamilySpec::standard_grids()
        .iter()
        .map(|s| s.members().unwrap().len())
        .collect();
    assert_eq!(sizes, vec![40_000, 22, 202]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn formula_matches_direct_computation(p in params(), t in 0usize..3) {
        let g = pointcover_complement(&p).unwrap().complement();
        let formula = sigma_pointcover_formula(&p).unwrap();
        prop_assert_eq!(&sigma(&g), &formula);
        if g.order() <= 14 {
            prop_assert_eq!(&sigma_bruteforce(&g).unwrap(), &formula);
        }
        prop_assert_eq!(formula.chi(), chromatic_number(&g));
        prop_assert!(formula.certify().unwrap().verdict);
        let joined = join_with_clique(&g, t).unwrap();
        prop_assert_eq!(sigma(&joined).into_poly(), formula.poly().shift_by_power(t));
    }
}
