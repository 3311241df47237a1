//! SO(3) parameters of a gamma representation.
//!
//! A representation is fixed by a proper rotation whose rows are named
//! `c`, `b`, `a` (in that order). Column `mu` of that matrix supplies the
//! coefficients `(c_mu, b_mu, a_mu)` of gamma^mu.

use nalgebra::Matrix3;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::report::VerificationReport;

/// Residual below which input is accepted as-is.
pub const ACCEPT_TOL: f64 = 1e-10;
/// Residual up to which input is projected onto the nearest rotation.
pub const REPAIR_TOL: f64 = 1e-6;

pub type Vec3 = [f64; 3];

/// Rows `c`, `b`, `a` of a (nominally) proper rotation.
///
/// Construction through [`SO3Params::from_rows_unchecked`] does not validate;
/// everything that builds gamma matrices runs [`so3_validate`] first.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SO3Params {
    c: Vec3,
    b: Vec3,
    a: Vec3,
}

/// How an explicit matrix was admitted.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Admission {
    Exact,
    /// Input drifted by `residual` and was replaced by the nearest rotation.
    Reprojected {
        residual: f64,
    },
}

impl SO3Params {
    pub const IDENTITY: SO3Params = SO3Params {
        c: [1.0, 0.0, 0.0],
        b: [0.0, 1.0, 0.0],
        a: [0.0, 0.0, 1.0],
    };

    pub const fn from_rows_unchecked(c: Vec3, b: Vec3, a: Vec3) -> Self {
        SO3Params { c, b, a }
    }

    /// Rows in `(c, b, a)` order.
    pub fn matrix(&self) -> [Vec3; 3] {
        [self.c, self.b, self.a]
    }

    pub fn c(&self) -> Vec3 {
        self.c
    }

    pub fn b(&self) -> Vec3 {
        self.b
    }

    pub fn a(&self) -> Vec3 {
        self.a
    }

    /// `(c_mu, b_mu, a_mu)`.
    pub fn column(&self, mu: usize) -> Vec3 {
        [self.c[mu], self.b[mu], self.a[mu]]
    }

    pub fn trace(&self) -> f64 {
        self.c[0] + self.b[1] + self.a[2]
    }

    pub fn is_finite(&self) -> bool {
        self.matrix().iter().flatten().all(|x| x.is_finite())
    }

    fn to_nalgebra(self) -> Matrix3<f64> {
        let m = self.matrix();
        Matrix3::from_fn(|i, j| m[i][j])
    }

    fn from_nalgebra(m: &Matrix3<f64>) -> Self {
        let row = |i: usize| [m[(i, 0)], m[(i, 1)], m[(i, 2)]];
        SO3Params::from_rows_unchecked(row(0), row(1), row(2))
    }
}

pub fn dot(u: &Vec3, v: &Vec3) -> f64 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

pub fn cross(u: &Vec3, v: &Vec3) -> Vec3 {
    [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
}

fn det3(m: &[Vec3; 3]) -> f64 {
    dot(&m[0], &cross(&m[1], &m[2]))
}

fn max_abs_diff3(u: &Vec3, v: &Vec3) -> f64 {
    (0..3).map(|i| (u[i] - v[i]).abs()).fold(0.0, f64::max)
}

fn rot_z(t: f64) -> Matrix3<f64> {
    let (s, c) = t.sin_cos();
    Matrix3::new(c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0)
}

fn rot_y(t: f64) -> Matrix3<f64> {
    let (s, c) = t.sin_cos();
    Matrix3::new(c, 0.0, s, 0.0, 1.0, 0.0, -s, 0.0, c)
}

/// ZYZ Euler angles: `Rz(alpha) Ry(beta) Rz(gamma)`.
pub fn so3_from_euler(alpha: f64, beta: f64, gamma: f64) -> Result<SO3Params> {
    if !(alpha.is_finite() && beta.is_finite() && gamma.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "Euler angles must be finite, got ({alpha}, {beta}, {gamma})"
        )));
    }
    let m = rot_z(alpha) * rot_y(beta) * rot_z(gamma);
    Ok(SO3Params::from_nalgebra(&m))
}

/// Rotation of the unit quaternion `w + xi + yj + zk`. The input is
/// normalized first; a zero or non-finite quaternion is rejected.
pub fn so3_from_quaternion(w: f64, x: f64, y: f64, z: f64) -> Result<SO3Params> {
    let n = (w * w + x * x + y * y + z * z).sqrt();
    if !n.is_finite() || n < 1e-12 {
        return Err(Error::InvalidArgument(format!(
            "quaternion ({w}, {x}, {y}, {z}) cannot be normalized"
        )));
    }
    let (w, x, y, z) = (w / n, x / n, y / n, z / n);
    Ok(SO3Params::from_rows_unchecked(
        [
            1.0 - 2.0 * (y * y + z * z),
            2.0 * (x * y - w * z),
            2.0 * (x * z + w * y),
        ],
        [
            2.0 * (x * y + w * z),
            1.0 - 2.0 * (x * x + z * z),
            2.0 * (y * z - w * x),
        ],
        [
            2.0 * (x * z - w * y),
            2.0 * (y * z + w * x),
            1.0 - 2.0 * (x * x + y * y),
        ],
    ))
}

/// Haar-uniform rotation drawn from `rng` (Shoemake's unit-quaternion method).
pub fn so3_random_with<R: Rng + ?Sized>(rng: &mut R) -> SO3Params {
    let u1: f64 = rng.random();
    let u2: f64 = rng.random();
    let u3: f64 = rng.random();
    let tau = std::f64::consts::TAU;
    let (s1, s2) = ((1.0 - u1).sqrt(), u1.sqrt());
    let (x, y) = (s1 * (tau * u2).sin(), s1 * (tau * u2).cos());
    let (z, w) = (s2 * (tau * u3).sin(), s2 * (tau * u3).cos());
    so3_from_quaternion(w, x, y, z).expect("unit quaternion from Shoemake sampling")
}

/// Deterministic Haar-uniform rotation for `seed`.
pub fn so3_random(seed: u64) -> SO3Params {
    so3_random_with(&mut ChaCha8Rng::seed_from_u64(seed))
}

/// Checks orthonormality, `det = +1` and the componentwise cross-product
/// relations (`a = c x b`, `b = a x c`, `c = b x a`).
pub fn so3_validate(p: &SO3Params, tol: f64) -> VerificationReport {
    let mut report = VerificationReport::new();
    if !p.is_finite() {
        report.record("finite", f64::INFINITY, tol);
        return report;
    }
    let rows = p.matrix();

    let norm_res = rows
        .iter()
        .map(|r| (dot(r, r).sqrt() - 1.0).abs())
        .fold(0.0, f64::max);
    report.record("row-norm", norm_res, tol);

    let orth_res = [(0, 1), (0, 2), (1, 2)]
        .iter()
        .map(|&(i, j)| dot(&rows[i], &rows[j]).abs())
        .fold(0.0, f64::max);
    report.record("row-orthogonality", orth_res, tol);

    let cols: [Vec3; 3] = std::array::from_fn(|j| p.column(j));
    let col_res = (0..3)
        .flat_map(|i| (0..3).map(move |j| (i, j)))
        .map(|(i, j)| {
            let delta = if i == j { 1.0 } else { 0.0 };
            (dot(&cols[i], &cols[j]) - delta).abs()
        })
        .fold(0.0, f64::max);
    report.record("column-orthonormality", col_res, tol);

    report.record("determinant", (det3(&rows) - 1.0).abs(), tol);

    let cross_res = max_abs_diff3(&p.a, &cross(&p.c, &p.b))
        .max(max_abs_diff3(&p.b, &cross(&p.a, &p.c)))
        .max(max_abs_diff3(&p.c, &cross(&p.b, &p.a)));
    report.record("cross-product", cross_res, tol);

    report
}

/// Admits an explicit 3x3 matrix (rows `c`, `b`, `a`).
///
/// Residual up to [`ACCEPT_TOL`] is taken verbatim; up to [`REPAIR_TOL`] the
/// matrix is replaced by its nearest rotation (polar factor); anything
/// further is rejected with the validation report.
pub fn so3_from_matrix(rows: [Vec3; 3]) -> Result<(SO3Params, Admission)> {
    let p = SO3Params::from_rows_unchecked(rows[0], rows[1], rows[2]);
    let report = so3_validate(&p, ACCEPT_TOL);
    if report.passed() {
        return Ok((p, Admission::Exact));
    }
    let residual = report.max_residual();
    if !(residual <= REPAIR_TOL) {
        return Err(Error::So3Invalid(so3_validate(&p, REPAIR_TOL)));
    }
    let repaired = nearest_rotation(&p);
    let check = so3_validate(&repaired, ACCEPT_TOL);
    if !check.passed() {
        return Err(Error::So3Invalid(check));
    }
    Ok((repaired, Admission::Reprojected { residual }))
}

/// Polar projection `U diag(1, 1, det(U V^T)) V^T`.
pub fn nearest_rotation(p: &SO3Params) -> SO3Params {
    let svd = p.to_nalgebra().svd(true, true);
    let (u, v_t) = (svd.u.unwrap(), svd.v_t.unwrap());
    let mut d = Matrix3::identity();
    if (u * v_t).determinant() < 0.0 {
        d[(2, 2)] = -1.0;
    }
    SO3Params::from_nalgebra(&(u * d * v_t))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force `A A^T` residual, written independently of the validator.
    fn gram_residual(p: &SO3Params) -> f64 {
        let m = p.matrix();
        let mut worst: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                let s: f64 = (0..3).map(|k| m[i][k] * m[j][k]).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((s - want).abs());
            }
        }
        worst
    }

    #[test]
    fn euler_zero_is_identity() {
        let p = so3_from_euler(0.0, 0.0, 0.0).unwrap();
        assert_eq!(p, SO3Params::IDENTITY);
        assert!(so3_validate(&p, 1e-15).passed());
        assert_eq!(so3_validate(&p, 1e-15).max_residual(), 0.0);
    }

    #[test]
    fn euler_generic_is_orthogonal() {
        let p = so3_from_euler(0.3, 1.1, -2.0).unwrap();
        assert!(gram_residual(&p) < 1e-12);
        assert!(so3_validate(&p, 1e-12).passed());
    }

    #[test]
    fn euler_rejects_non_finite() {
        assert!(matches!(
            so3_from_euler(f64::NAN, 0.0, 0.0),
            Err(Error::InvalidArgument(_))
        ));
        assert!(so3_from_euler(0.0, f64::INFINITY, 0.0).is_err());
    }

    #[test]
    fn quaternion_identity_and_zero() {
        assert_eq!(
            so3_from_quaternion(2.0, 0.0, 0.0, 0.0).unwrap(),
            SO3Params::IDENTITY
        );
        assert!(so3_from_quaternion(0.0, 0.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn degenerate_rows_fail_orthogonality() {
        let p = SO3Params::from_rows_unchecked([1.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]);
        let r = so3_validate(&p, 1e-10);
        assert!(!r.passed());
        assert!(!r.check("row-orthogonality").unwrap().passed);
    }

    #[test]
    fn improper_rotation_fails_determinant() {
        let p = SO3Params::from_rows_unchecked([1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, -1.0]);
        let r = so3_validate(&p, 1e-10);
        assert!(!r.check("determinant").unwrap().passed);
        assert!(!r.check("cross-product").unwrap().passed);
    }

    #[test]
    fn random_is_deterministic() {
        assert_eq!(so3_random(42), so3_random(42));
        assert_ne!(so3_random(42), so3_random(43));
    }

    #[test]
    fn random_samples_validate() {
        for seed in 0..10_000 {
            let p = so3_random(seed);
            assert!(so3_validate(&p, 1e-10).passed(), "seed {seed}");
        }
    }

    #[test]
    fn random_trace_has_haar_mean() {
        // Oracle: Haar measure on SO(3) is the image of the uniform measure on
        // S^3, and tr R(q) = 4 w^2 - 1 with E[w^2] = 1/4, so E[tr] = 0.
        let n = 10_000;
        let mean = (0..n).map(|s| so3_random(s).trace()).sum::<f64>() / n as f64;
        assert!(mean.abs() < 0.05, "mean trace {mean}");
    }

    #[test]
    fn explicit_matrix_admission_bands() {
        let exact = SO3Params::IDENTITY.matrix();
        assert_eq!(so3_from_matrix(exact).unwrap().1, Admission::Exact);

        let p = so3_from_euler(0.4, 0.2, 1.3).unwrap();
        let mut drifted = p.matrix();
        drifted[0][1] += 1e-8;
        let (fixed, how) = so3_from_matrix(drifted).unwrap();
        assert!(matches!(how, Admission::Reprojected { residual } if residual > 1e-10));
        assert!(so3_validate(&fixed, 1e-12).passed());
        assert!(gram_residual(&fixed) < 1e-14);

        let mut garbage = p.matrix();
        garbage[1][2] += 1e-3;
        assert!(matches!(
            so3_from_matrix(garbage),
            Err(Error::So3Invalid(_))
        ));
    }
}
