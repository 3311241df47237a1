//! Gamma representations built from SO(3) parameters, and the algebraic
//! checks every such representation must pass.
//!
//! With `M_mu = [[c_mu, a_mu - i b_mu], [a_mu + i b_mu, -c_mu]]` the
//! representation is `gamma^0 = M_0`, `gamma^1 = i M_1`, `gamma^2 = i M_2`.

use crate::error::{Error, Result};
use crate::mat2::{c64, Complex64, Mat2, I, ONE};
use crate::report::VerificationReport;
use crate::so3::{self, so3_validate, SO3Params};

pub const DEFAULT_TOL: f64 = 1e-12;

/// Minkowski metric `diag(1, -1, -1)`; raised and lowered forms coincide.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Metric;

impl Metric {
    pub const DIAG: [f64; 3] = [1.0, -1.0, -1.0];

    pub fn g(mu: usize, nu: usize) -> f64 {
        if mu == nu {
            Self::DIAG[mu]
        } else {
            0.0
        }
    }
}

/// The triple `(gamma^0, gamma^1, gamma^2)` together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaRep {
    gammas: [Mat2; 3],
    params: SO3Params,
}

impl GammaRep {
    /// Pairs arbitrary matrices with parameters without any checking.
    /// Used for reading external documents and for fault injection.
    pub fn from_parts_unchecked(params: SO3Params, gammas: [Mat2; 3]) -> Self {
        GammaRep { gammas, params }
    }

    pub fn gamma(&self, mu: usize) -> &Mat2 {
        &self.gammas[mu]
    }

    pub fn gamma0(&self) -> &Mat2 {
        &self.gammas[0]
    }

    pub fn gamma1(&self) -> &Mat2 {
        &self.gammas[1]
    }

    pub fn gamma2(&self) -> &Mat2 {
        &self.gammas[2]
    }

    pub fn gammas(&self) -> &[Mat2; 3] {
        &self.gammas
    }

    pub fn params(&self) -> &SO3Params {
        &self.params
    }

    /// Replaces one matrix, keeping the parameters.
    pub fn with_gamma(mut self, mu: usize, m: Mat2) -> Self {
        self.gammas[mu] = m;
        self
    }

    /// Reads `(c, b, a)` back from the matrix entries.
    pub fn read_params(&self) -> SO3Params {
        let mut rows = [[0.0; 3]; 3];
        for (mu, g) in self.gammas.iter().enumerate() {
            let m = if mu == 0 { *g } else { g.scale(-I) };
            rows[0][mu] = m.get(0, 0).re;
            rows[1][mu] = m.get(1, 0).im;
            rows[2][mu] = m.get(1, 0).re;
        }
        SO3Params::from_rows_unchecked(rows[0], rows[1], rows[2])
    }
}

/// The Dirac-Pauli parameters `c0 = b1 = a2 = 1`.
pub fn preset_standard() -> SO3Params {
    SO3Params::IDENTITY
}

fn template(c: f64, b: f64, a: f64) -> Mat2 {
    Mat2::new(c64(c, 0.0), c64(a, -b), c64(a, b), c64(-c, 0.0))
}

/// Entrywise construction; refuses parameters that fail validation at
/// [`so3::ACCEPT_TOL`].
pub fn build_representation(p: &SO3Params) -> Result<GammaRep> {
    let report = so3_validate(p, so3::ACCEPT_TOL);
    if !report.passed() {
        return Err(Error::So3Invalid(report));
    }
    let gammas = std::array::from_fn(|mu| {
        let [c, b, a] = p.column(mu);
        let m = template(c, b, a);
        if mu == 0 {
            m
        } else {
            m.map(|z| c64(-z.im, z.re))
        }
        // Clear negative zeros.
        .map(|z| c64(z.re + 0.0, z.im + 0.0))
    });
    Ok(GammaRep { gammas, params: *p })
}

pub fn anticommutator(m: &Mat2, n: &Mat2) -> Mat2 {
    *m * *n + *n * *m
}

fn clifford_residual(gammas: &[Mat2; 3], metric_sign: f64) -> f64 {
    let mut worst: f64 = 0.0;
    for mu in 0..3 {
        for nu in mu..3 {
            let want = Mat2::IDENTITY.scale_re(2.0 * metric_sign * Metric::g(mu, nu));
            let got = anticommutator(&gammas[mu], &gammas[nu]);
            worst = worst.max(got.max_abs_diff(&want));
        }
    }
    worst
}

/// Checks `{gamma^mu, gamma^nu} = 2 g^{mu nu} I` on raw matrices.
pub fn clifford_report(gammas: &[Mat2; 3], tol: f64) -> VerificationReport {
    let mut report = VerificationReport::new();
    for mu in 0..3 {
        for nu in mu..3 {
            let want = Mat2::IDENTITY.scale_re(2.0 * Metric::g(mu, nu));
            let got = anticommutator(&gammas[mu], &gammas[nu]);
            report.record(format!("clifford-{mu}{nu}"), got.max_abs_diff(&want), tol);
        }
    }
    report
}

/// All six unordered pairs of the anticommutation relation.
pub fn verify_clifford(rep: &GammaRep, tol: f64) -> VerificationReport {
    clifford_report(&rep.gammas, tol)
}

/// `gamma_mu = g_{mu nu} gamma^nu`.
pub fn lower_index(rep: &GammaRep) -> [Mat2; 3] {
    std::array::from_fn(|mu| rep.gammas[mu].scale_re(Metric::DIAG[mu]))
}

/// Relation between `gamma_mu` and the lowered metric.
pub fn lowered_clifford_residual(rep: &GammaRep) -> f64 {
    clifford_residual(&lower_index(rep), 1.0)
}

/// `gamma^0 gamma^1 = -i gamma^2` and cyclic partners, `-i gamma^0 gamma^1 gamma^2 = I`,
/// and non-singularity of every pairwise product.
pub fn product_identities_check(rep: &GammaRep, tol: f64) -> VerificationReport {
    let [g0, g1, g2] = rep.gammas;
    let mut report = VerificationReport::new();
    report.record("product-01", (g0 * g1).max_abs_diff(&g2.scale(-I)), tol);
    report.record("product-12", (g1 * g2).max_abs_diff(&g0.scale(I)), tol);
    report.record("product-20", (g2 * g0).max_abs_diff(&g1.scale(-I)), tol);
    report.record(
        "product-012",
        (g0 * g1 * g2).scale(-I).max_abs_diff(&Mat2::IDENTITY),
        tol,
    );
    // |det gamma^mu| = 1 for every valid representation, so each pairwise
    // product has unit-modulus determinant.
    let mut worst: f64 = 0.0;
    for mu in 0..3 {
        for nu in 0..3 {
            let d = (rep.gammas[mu] * rep.gammas[nu]).det().norm();
            worst = worst.max((d - 1.0).abs());
        }
    }
    report.record("pairwise-product-nonsingular", worst, tol);
    report
}

/// Roots of the characteristic polynomial, no normality requirement.
pub(crate) fn eigenvalues_2x2(m: &Mat2) -> [Complex64; 2] {
    let half_tr = m.trace() * 0.5;
    let disc = (half_tr * half_tr - m.det()).sqrt();
    sort_eigenvalues([half_tr + disc, half_tr - disc])
}

/// Real parts closer than this are treated as tied.
const EIG_TIE: f64 = 1e-12;

fn sort_eigenvalues(mut ev: [Complex64; 2]) -> [Complex64; 2] {
    let swap = if (ev[0].re - ev[1].re).abs() <= EIG_TIE {
        ev[1].im > ev[0].im
    } else {
        ev[1].re > ev[0].re
    };
    if swap {
        ev.swap(0, 1);
    }
    ev
}

/// Eigenvalues of a normal 2x2 matrix, by descending real part and then
/// descending imaginary part.
pub fn eigen_gamma(m: &Mat2) -> Result<[Complex64; 2]> {
    let scale = 1.0 + m.max_abs() * m.max_abs();
    let defect = m.commutator(&m.adjoint()).max_abs();
    if !(defect <= 1e-12 * scale) {
        return Err(Error::Domain(format!(
            "matrix is not normal ([M, M^dagger] residual {defect:.3e})"
        )));
    }
    Ok(eigenvalues_2x2(m))
}

/// Properties of single matrices plus the row/column relations of the
/// parameters.
pub fn check_properties(rep: &GammaRep, tol: f64) -> VerificationReport {
    let g = &rep.gammas;
    let mut report = VerificationReport::new();

    let trace = g.iter().map(|m| m.trace().norm()).fold(0.0, f64::max);
    report.record("traceless", trace, tol);

    let normal = g
        .iter()
        .map(|m| m.commutator(&m.adjoint()).max_abs())
        .fold(0.0, f64::max);
    report.record("normal", normal, tol);

    report.record("gamma0-hermitian", g[0].adjoint().max_abs_diff(&g[0]), tol);
    let anti = g[1..]
        .iter()
        .map(|m| m.adjoint().max_abs_diff(&-*m))
        .fold(0.0, f64::max);
    report.record("spatial-anti-hermitian", anti, tol);

    report.record(
        "gamma0-squared",
        (g[0] * g[0]).max_abs_diff(&Mat2::IDENTITY),
        tol,
    );
    let sq = g[1..]
        .iter()
        .map(|m| (*m * *m).max_abs_diff(&-Mat2::IDENTITY))
        .fold(0.0, f64::max);
    report.record("spatial-squared", sq, tol);

    let ev0 = eigenvalues_2x2(&g[0]);
    let eig0 = (ev0[0] - ONE).norm().max((ev0[1] + ONE).norm());
    report.record("gamma0-eigenvalues", eig0, tol);
    let eig_sp = g[1..]
        .iter()
        .map(|m| {
            let ev = eigenvalues_2x2(m);
            (ev[0] - I).norm().max((ev[1] + I).norm())
        })
        .fold(0.0, f64::max);
    report.record("spatial-eigenvalues", eig_sp, tol);

    report.extend(element_relations_check(&rep.params, tol));
    report
}

/// Row and column orthonormality of `(c, b, a)` and the cross-product closure.
pub fn element_relations_check(p: &SO3Params, tol: f64) -> VerificationReport {
    let v = so3_validate(p, tol);
    let mut report = VerificationReport::new();
    for name in [
        "row-norm",
        "row-orthogonality",
        "column-orthonormality",
        "cross-product",
    ] {
        if let Some(c) = v.check(name) {
            report.record(format!("elements-{name}"), c.max_residual, tol);
        }
    }
    if let Some(c) = v.check("finite") {
        report.record("elements-finite", c.max_residual, tol);
    }
    report
}

/// Everything the representation must satisfy: Clifford relation, lowered
/// indices, products and the single-matrix properties.
pub fn full_check(rep: &GammaRep, tol: f64) -> VerificationReport {
    let mut report = verify_clifford(rep, tol);
    report.record("lowered-clifford", lowered_clifford_residual(rep), tol);
    report.extend(product_identities_check(rep, tol));
    report.extend(check_properties(rep, tol));
    report
}

/// `m gamma^mu m^-1` for each `mu`. The result generally is not of the
/// SO(3)-generated form, so raw matrices are returned.
pub fn conjugate_representation(rep: &GammaRep, m: &Mat2) -> Result<[Mat2; 3]> {
    let scale = m.max_abs() * m.max_abs();
    let inv = m
        .inverse(1e-12 * scale.max(f64::MIN_POSITIVE))
        .ok_or_else(|| Error::InvalidArgument("conjugating matrix is singular".into()))?;
    Ok(std::array::from_fn(|mu| *m * rep.gammas[mu] * inv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat2::ZERO;
    use crate::so3::so3_random;

    fn standard() -> GammaRep {
        build_representation(&preset_standard()).unwrap()
    }

    pub(crate) fn permuted_params() -> SO3Params {
        SO3Params::from_rows_unchecked([0.0, 1.0, 0.0], [0.0, 0.0, 1.0], [1.0, 0.0, 0.0])
    }

    #[test]
    fn standard_matches_dirac_pauli() {
        let rep = standard();
        assert_eq!(*rep.gamma0(), Mat2::real(1.0, 0.0, 0.0, -1.0));
        assert_eq!(*rep.gamma1(), Mat2::real(0.0, 1.0, -1.0, 0.0));
        assert_eq!(*rep.gamma2(), Mat2::new(ZERO, I, I, ZERO));
    }

    #[test]
    fn permuted_matches_hand_substitution() {
        let rep = build_representation(&permuted_params()).unwrap();
        assert_eq!(*rep.gamma0(), Mat2::real(0.0, 1.0, 1.0, 0.0));
        assert_eq!(*rep.gamma1(), Mat2::new(I, ZERO, ZERO, -I));
        assert_eq!(*rep.gamma2(), Mat2::real(0.0, 1.0, -1.0, 0.0));
    }

    #[test]
    fn invalid_params_are_refused() {
        let p = SO3Params::from_rows_unchecked([1.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]);
        match build_representation(&p) {
            Err(Error::So3Invalid(report)) => assert!(!report.passed()),
            other => panic!("expected refusal, got {other:?}"),
        }
    }

    #[test]
    fn anticommutator_examples() {
        let rep = standard();
        let i2 = Mat2::IDENTITY;
        assert_eq!(anticommutator(&i2, &i2), i2.scale_re(2.0));
        assert_eq!(anticommutator(rep.gamma0(), rep.gamma1()).max_abs(), 0.0);
        assert_eq!(
            anticommutator(rep.gamma1(), rep.gamma1()),
            i2.scale_re(-2.0)
        );
    }

    #[test]
    fn clifford_standard_and_random() {
        let r = verify_clifford(&standard(), 1e-15);
        assert!(r.passed());
        assert_eq!(r.checks.len(), 6);
        let rep = build_representation(&so3_random(7)).unwrap();
        assert!(verify_clifford(&rep, 1e-12).passed());
    }

    #[test]
    fn clifford_detects_zero_gamma1() {
        let rep = standard().with_gamma(1, Mat2::ZERO);
        let r = verify_clifford(&rep, 1e-12);
        assert!(!r.passed());
        assert!(!r.check("clifford-11").unwrap().passed);
    }

    #[test]
    fn lowered_indices() {
        let low = lower_index(&standard());
        assert_eq!(low[1], Mat2::real(0.0, -1.0, 1.0, 0.0));
        for seed in 0..20 {
            let rep = build_representation(&so3_random(seed)).unwrap();
            let low = lower_index(&rep);
            assert!(
                anticommutator(&low[0], &low[0]).max_abs_diff(&Mat2::IDENTITY.scale_re(2.0))
                    < 1e-12
            );
            assert!(anticommutator(&low[1], &low[2]).max_abs() < 1e-12);
            assert!(lowered_clifford_residual(&rep) < 1e-12);
        }
    }

    #[test]
    fn product_identities() {
        assert!(product_identities_check(&standard(), 1e-15).passed());
        for seed in 0..100 {
            let rep = build_representation(&so3_random(seed)).unwrap();
            assert!(
                product_identities_check(&rep, 1e-12).passed(),
                "seed {seed}"
            );
        }
        let flipped = standard().with_gamma(2, -*standard().gamma2());
        let r = product_identities_check(&flipped, 1e-12);
        assert!(!r.check("product-01").unwrap().passed);
    }

    #[test]
    fn eigenvalues() {
        for seed in 0..50 {
            let rep = build_representation(&so3_random(seed)).unwrap();
            let e0 = eigen_gamma(rep.gamma0()).unwrap();
            assert!((e0[0] - ONE).norm() < 1e-12 && (e0[1] + ONE).norm() < 1e-12);
            for mu in 1..3 {
                let e = eigen_gamma(rep.gamma(mu)).unwrap();
                assert!(
                    (e[0] - I).norm() < 1e-12 && (e[1] + I).norm() < 1e-12,
                    "{e:?}"
                );
            }
        }
        assert_eq!(eigen_gamma(&Mat2::IDENTITY).unwrap(), [ONE, ONE]);
        let jordan = Mat2::real(1.0, 1.0, 0.0, 1.0);
        assert!(matches!(eigen_gamma(&jordan), Err(Error::Domain(_))));
    }

    #[test]
    fn property_suite() {
        assert!(check_properties(&standard(), 1e-15).passed());
        for seed in 0..1000 {
            let rep = build_representation(&so3_random(seed)).unwrap();
            assert!(full_check(&rep, 1e-12).passed(), "seed {seed}");
        }
        // gamma^1 is anti-Hermitian, so its Hermitian part vanishes and the
        // suite trips on the squares instead.
        let rep = build_representation(&so3_random(5)).unwrap();
        let g1 = *rep.gamma1();
        let herm_part = (g1 + g1.adjoint()).scale_re(0.5);
        assert!(herm_part.max_abs() < 1e-15);
        let r = check_properties(&rep.with_gamma(1, herm_part), 1e-12);
        assert!(!r.check("spatial-squared").unwrap().passed);
        let r = check_properties(&rep.with_gamma(1, g1.scale(I)), 1e-12);
        assert!(!r.check("spatial-anti-hermitian").unwrap().passed);
    }

    #[test]
    fn params_round_trip_through_entries() {
        for seed in 0..200 {
            let p = so3_random(seed);
            let back = build_representation(&p).unwrap().read_params();
            for (x, y) in p
                .matrix()
                .iter()
                .flatten()
                .zip(back.matrix().iter().flatten())
            {
                assert!((x - y).abs() <= 1e-15);
            }
        }
    }

    #[test]
    fn conjugation() {
        let rep = standard();
        let same = conjugate_representation(&rep, &Mat2::IDENTITY).unwrap();
        assert_eq!(same, *rep.gammas());

        let g0 = *rep.gamma0();
        let c = conjugate_representation(&rep, &g0).unwrap();
        assert!(c[0].max_abs_diff(rep.gamma0()) < 1e-15);
        assert!(c[1].max_abs_diff(&-*rep.gamma1()) < 1e-15);
        assert!(c[2].max_abs_diff(&-*rep.gamma2()) < 1e-15);

        let m = Mat2::new(c64(1.0, 0.3), c64(-0.7, 2.0), c64(0.4, 0.0), c64(1.5, -1.0));
        let c = conjugate_representation(&rep, &m).unwrap();
        assert!(clifford_report(&c, 1e-12).passed());

        assert!(matches!(
            conjugate_representation(&rep, &Mat2::real(1.0, 2.0, 2.0, 4.0)),
            Err(Error::InvalidArgument(_))
        ));
    }
}
