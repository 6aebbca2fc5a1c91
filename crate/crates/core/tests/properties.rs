//! Seeded property suites.

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

use so2m_core::aq::{
    class_records, compact_dual_hodge, conjugate_class, dominant_representative, hodge_polynomial, levi_coset_poincare,
    levi_hermitian_factor, parabolic_from_vector, LeviKind,
};
use so2m_core::exact::GaussianRational;
use so2m_core::liealg::{bracket, jacobi_holds};
use so2m_core::{build_context, build_root_system, ExactMatrix, Variant};

fn config(seed: u64, cases: u32) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(seed), failure_persistence: None, ..Config::default() }
}

fn element(m: usize, coeffs: &[i64]) -> ExactMatrix {
    let basis = build_context(m).unwrap().standard_g0_basis();
    basis
        .iter()
        .zip(coeffs.iter().cycle())
        .fold(ExactMatrix::zeros(m + 2), |acc, (b, &c)| &acc + &b.scale(&GaussianRational::from_int(c)))
}

proptest! {
    #![proptest_config(config(0x001a_c0b1, 48))]

    #[test]
    fn jacobi_on_sampled_triples(
        m in 2usize..=7,
        a in prop::collection::vec(-3i64..=3, 1..12),
        b in prop::collection::vec(-3i64..=3, 1..12),
        c in prop::collection::vec(-3i64..=3, 1..12),
    ) {
        let (x, y, z) = (element(m, &a), element(m, &b), element(m, &c));
        prop_assert!(jacobi_holds(&x, &y, &z));
        prop_assert!((&bracket(&x, &y) + &bracket(&y, &x)).is_zero());
        prop_assert!(build_context(m).unwrap().in_g0(&bracket(&x, &y)));
    }
}

proptest! {
    #![proptest_config(config(0xc0_1a7e, 64))]

    #[test]
    fn conjugate_class_swaps_variables(m in 2usize..=9, raw in prop::collection::vec(-6i64..=6, 6)) {
        let ctx = build_context(m).unwrap();
        let rs = build_root_system(&ctx, Variant::T0).unwrap();
        let h = dominant_representative(ctx.family, m, &raw[..ctx.l]);
        let q = parabolic_from_vector(&rs, &h).unwrap();
        let qc = conjugate_class(&rs, &q).unwrap();
        prop_assert_eq!(qc.r_plus, q.r_minus);
        prop_assert_eq!(qc.r_minus, q.r_plus);
        prop_assert_eq!(hodge_polynomial(&qc).unwrap(), hodge_polynomial(&q).unwrap().swap_variables());
        prop_assert_eq!(conjugate_class(&rs, &qc).unwrap().key(), q.key());
    }

    #[test]
    fn compact_duals_are_palindromic(m in 2usize..=11, raw in prop::collection::vec(-7i64..=7, 7)) {
        let ctx = build_context(m).unwrap();
        let rs = build_root_system(&ctx, Variant::T0).unwrap();
        let q = parabolic_from_vector(&rs, &dominant_representative(ctx.family, m, &raw[..ctx.l])).unwrap();
        let y = compact_dual_hodge(&levi_hermitian_factor(&q).unwrap().kind);
        prop_assert!(y.is_palindromic());
        prop_assert!(y.is_diagonal());
    }

    #[test]
    fn named_duals_have_euler_characteristic(n in 1usize..=12) {
        prop_assert_eq!(compact_dual_hodge(&LeviKind::Projective(n)).eval_one(), n as u64 + 1);
        if n % 2 == 1 {
            prop_assert_eq!(compact_dual_hodge(&LeviKind::QuadricOdd(n)).eval_one(), n as u64 + 1);
        } else {
            prop_assert_eq!(compact_dual_hodge(&LeviKind::QuadricEven(n)).eval_one(), n as u64 + 2);
        }
    }
}

#[test]
fn compact_duals_match_weyl_coset_oracle() {
    for m in 2..=9 {
        for rec in class_records(m).unwrap() {
            assert_eq!(
                compact_dual_hodge(&rec.factor),
                levi_coset_poincare(&rec.parabolic).unwrap(),
                "m = {m}, H = {:?}",
                rec.parabolic.defining_vector
            );
        }
    }
}
