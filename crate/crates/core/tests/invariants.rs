use gamma2d::mat2::{self, phase_collinearity};
use gamma2d::*;
use proptest::prelude::*;

fn rep_strategy() -> impl Strategy<Value = GammaRep> {
    (-10.0..10.0f64, -10.0..10.0f64, -10.0..10.0f64)
        .prop_map(|(a, b, g)| build_representation(&so3_from_euler(a, b, g).unwrap()).unwrap())
}

fn momentum_strategy() -> impl Strategy<Value = Momentum> {
    (-5.0..5.0f64, -5.0..5.0f64, 0.05..3.0f64)
        .prop_map(|(k1, k2, m)| Momentum::new(k1, k2, m).unwrap())
}

fn branch_strategy() -> impl Strategy<Value = Branch> {
    prop_oneof![Just(Branch::Positive), Just(Branch::Negative)]
}

fn axis_strategy() -> impl Strategy<Value = BoostAxis> {
    prop_oneof![Just(BoostAxis::X1), Just(BoostAxis::X2)]
}

/// Well-conditioned invertible matrix: unit-modulus diagonal dominance.
fn invertible_strategy() -> impl Strategy<Value = Mat2> {
    proptest::array::uniform4((-1.0..1.0f64, -1.0..1.0f64)).prop_map(|e| {
        let z = |i: usize| c64(e[i].0, e[i].1);
        Mat2::new(z(0) + c64(3.0, 0.0), z(1), z(2), z(3) + c64(0.0, 3.0))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn every_euler_rep_is_clifford(rep in rep_strategy()) {
        prop_assert!(so3_validate(rep.params(), 1e-12).passed());
        let report = full_check(&rep, 1e-12);
        prop_assert!(report.passed(), "{:?}", report.failures().collect::<Vec<_>>());
    }

    #[test]
    fn params_survive_entry_round_trip(rep in rep_strategy()) {
        let back = rep.read_params();
        for (x, y) in rep.params().matrix().iter().flatten().zip(back.matrix().iter().flatten()) {
            prop_assert!((x - y).abs() <= 1e-15);
        }
    }

    #[test]
    fn spinors_solve_dirac_and_are_unit(rep in rep_strategy(), mom in momentum_strategy(), branch in branch_strategy()) {
        let sol = spinor(&rep, &mom, branch).unwrap();
        let e = mom.energy();
        prop_assert!(sol.dirac_residual(&rep) < 1e-12 * e.max(1.0));
        let unit_tol = match sol.normalization {
            Normalization::ClosedForm => 1e-12,
            _ => 1e-10,
        };
        prop_assert!((mat2::norm(&sol.spinor) - 1.0).abs() < unit_tol);
        let oracle = nullspace_oracle(&rep, &mom, branch).unwrap();
        prop_assert!((phase_collinearity(&oracle, &sol.spinor) - 1.0).abs() < 1e-10);
    }

    #[test]
    fn denominator_is_nonnegative(rep in rep_strategy(), mom in momentum_strategy()) {
        prop_assert!(normalization_denominator(&rep, &mom) >= -1e-12);
    }

    #[test]
    fn on_shell_determinant_vanishes(rep in rep_strategy(), mom in momentum_strategy(), delta in 0.1..10.0f64) {
        let e = mom.energy();
        prop_assert!(dirac_matrix(&rep, e, &mom).det().norm() < 1e-10 * (1.0 + e * e));
        prop_assert!(dirac_matrix(&rep, e + delta, &mom).det().norm() >= delta * e * 0.1);
    }

    #[test]
    fn boosts_are_covariant(rep in rep_strategy(), theta in -3.0..3.0f64, axis in axis_strategy(),
                            mom in momentum_strategy(), branch in branch_strategy()) {
        let b = boost_operator(&rep, theta, axis).unwrap();
        let report = covariance_check(&rep, &b, 1e-10);
        prop_assert!(report.passed(), "{:?}", report);
        let sol = spinor(&rep, &mom, branch).unwrap();
        let out = boost_spinor(&b, &sol);
        prop_assert!(out.dirac_residual(&rep) < 1e-10 * out.energy.max(1.0));
        let s0 = bilinear_scalar(&sol.spinor, &sol.spinor, &rep);
        let s1 = bilinear_scalar(&out.spinor, &out.spinor, &rep);
        prop_assert!((s0 - s1).norm() < 1e-10);
    }

    #[test]
    fn current_transforms_as_a_vector(rep in rep_strategy(), theta in -3.0..3.0f64, axis in axis_strategy(),
                                      mom in momentum_strategy()) {
        let b = boost_operator(&rep, theta, axis).unwrap();
        let u = spinor(&rep, &mom, Branch::Positive).unwrap().spinor;
        let j = bilinear_current(&u, &rep);
        let jp = bilinear_current(&b.s.apply(&u), &rep);
        let ax = axis.index();
        let l = &b.lambda;
        prop_assert!((jp[0] - (j[0] * l[0][0] + j[ax] * l[0][1])).norm() < 1e-10 * j[0].norm().max(1.0) * theta.cosh());
        prop_assert!((jp[ax] - (j[0] * l[1][0] + j[ax] * l[1][1])).norm() < 1e-10 * j[0].norm().max(1.0) * theta.cosh());
        prop_assert!((jp[3 - ax] - j[3 - ax]).norm() < 1e-10 * j[0].norm().max(1.0) * theta.cosh());
    }

    #[test]
    fn boost_group_law(rep in rep_strategy(), t1 in -3.0..3.0f64, t2 in -3.0..3.0f64, axis in axis_strategy()) {
        let c = boost_compose(&boost_operator(&rep, t1, axis).unwrap(), &boost_operator(&rep, t2, axis).unwrap()).unwrap();
        let direct = boost_operator(&rep, t1 + t2, axis).unwrap();
        prop_assert!(c.s.max_abs_diff(&direct.s) < 1e-12 * (t1.abs() + t2.abs()).cosh());
    }

    #[test]
    fn conjugation_preserves_clifford(rep in rep_strategy(), m in invertible_strategy()) {
        let gammas = conjugate_representation(&rep, &m).unwrap();
        prop_assert!(clifford_report(&gammas, 1e-12).passed());
    }

    #[test]
    fn planted_intertwiner_round_trip(rep in rep_strategy(), m in invertible_strategy()) {
        let target = GammaRep::from_parts_unchecked(*rep.params(), conjugate_representation(&rep, &m).unwrap());
        let res = find_intertwiner(&rep, &target, 1e-9).unwrap();
        prop_assert_eq!(res.commutant_dim, 1);
        prop_assert!((matrix_collinearity(&res.m, &m) - 1.0).abs() < 1e-8);
        let report = verify_intertwiner(&res, &rep, &target, 1e-10);
        prop_assert!(report.passed());
        prop_assert!((report.max_residual() - res.residual).abs() < 1e-12);
    }

    #[test]
    fn parity_conjugates_gammas(rep in rep_strategy(), phi in -6.3..6.3f64) {
        let p = parity_operator(&rep, phi).unwrap();
        prop_assert!(parity_check(&rep, &p, 1e-12).passed());
    }
}
