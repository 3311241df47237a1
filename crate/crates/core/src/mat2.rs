//! Fixed-size 2x2 complex matrices and 2-component spinors.
//!
//! Everything in this crate lives in two complex dimensions, so the matrix
//! type is a plain array with hand-written products instead of a general
//! linear-algebra container.

use std::ops::{Add, Mul, Neg, Sub};

pub use num_complex::Complex64;

/// Two-component complex column vector.
pub type Spinor = [Complex64; 2];

#[inline]
pub const fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub const ZERO: Complex64 = c64(0.0, 0.0);
pub const ONE: Complex64 = c64(1.0, 0.0);
pub const I: Complex64 = c64(0.0, 1.0);

/// Row-major 2x2 complex matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2(pub [[Complex64; 2]; 2]);

impl Mat2 {
    pub const ZERO: Mat2 = Mat2([[ZERO, ZERO], [ZERO, ZERO]]);
    pub const IDENTITY: Mat2 = Mat2([[ONE, ZERO], [ZERO, ONE]]);

    pub const fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Mat2([[a, b], [c, d]])
    }

    /// Matrix with purely real entries.
    pub const fn real(a: f64, b: f64, c: f64, d: f64) -> Self {
        Mat2([[c64(a, 0.0), c64(b, 0.0)], [c64(c, 0.0), c64(d, 0.0)]])
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.0[row][col]
    }

    pub fn scale(&self, s: Complex64) -> Self {
        self.map(|z| z * s)
    }

    pub fn scale_re(&self, s: f64) -> Self {
        self.map(|z| z * s)
    }

    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        let m = &self.0;
        Mat2([[f(m[0][0]), f(m[0][1])], [f(m[1][0]), f(m[1][1])]])
    }

    pub fn trace(&self) -> Complex64 {
        self.0[0][0] + self.0[1][1]
    }

    pub fn det(&self) -> Complex64 {
        self.0[0][0] * self.0[1][1] - self.0[0][1] * self.0[1][0]
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let m = &self.0;
        Mat2([
            [m[0][0].conj(), m[1][0].conj()],
            [m[0][1].conj(), m[1][1].conj()],
        ])
    }

    pub fn transpose(&self) -> Self {
        let m = &self.0;
        Mat2([[m[0][0], m[1][0]], [m[0][1], m[1][1]]])
    }

    /// Inverse via the adjugate. Returns `None` when `|det| <= min_det`.
    pub fn inverse(&self, min_det: f64) -> Option<Self> {
        let d = self.det();
        if !(d.norm() > min_det) {
            return None;
        }
        let m = &self.0;
        let inv = ONE / d;
        Some(Mat2([
            [m[1][1] * inv, -m[0][1] * inv],
            [-m[1][0] * inv, m[0][0] * inv],
        ]))
    }

    /// Largest entrywise modulus.
    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Mat2) -> f64 {
        (*self - *other).max_abs()
    }

    pub fn commutator(&self, other: &Mat2) -> Mat2 {
        *self * *other - *other * *self
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|z| z.is_finite())
    }

    pub fn apply(&self, v: &Spinor) -> Spinor {
        let m = &self.0;
        [
            m[0][0] * v[0] + m[0][1] * v[1],
            m[1][0] * v[0] + m[1][1] * v[1],
        ]
    }

    /// Row vector times matrix: `w M`.
    pub fn left_apply(&self, w: &Spinor) -> Spinor {
        let m = &self.0;
        [
            w[0] * m[0][0] + w[1] * m[1][0],
            w[0] * m[0][1] + w[1] * m[1][1],
        ]
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, rhs: Mat2) -> Mat2 {
        let (a, b) = (&self.0, &rhs.0);
        Mat2([
            [a[0][0] + b[0][0], a[0][1] + b[0][1]],
            [a[1][0] + b[1][0], a[1][1] + b[1][1]],
        ])
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, rhs: Mat2) -> Mat2 {
        let (a, b) = (&self.0, &rhs.0);
        Mat2([
            [a[0][0] - b[0][0], a[0][1] - b[0][1]],
            [a[1][0] - b[1][0], a[1][1] - b[1][1]],
        ])
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        self.map(|z| -z)
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        let (a, b) = (&self.0, &rhs.0);
        Mat2([
            [
                a[0][0] * b[0][0] + a[0][1] * b[1][0],
                a[0][0] * b[0][1] + a[0][1] * b[1][1],
            ],
            [
                a[1][0] * b[0][0] + a[1][1] * b[1][0],
                a[1][0] * b[0][1] + a[1][1] * b[1][1],
            ],
        ])
    }
}

impl Mul<Complex64> for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Complex64) -> Mat2 {
        self.scale(rhs)
    }
}

impl Mul<f64> for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: f64) -> Mat2 {
        self.scale_re(rhs)
    }
}

/// Hermitian inner product `<u, v> = u^dagger v`.
pub fn inner(u: &Spinor, v: &Spinor) -> Complex64 {
    u[0].conj() * v[0] + u[1].conj() * v[1]
}

pub fn norm(u: &Spinor) -> f64 {
    (u[0].norm_sqr() + u[1].norm_sqr()).sqrt()
}

/// `u / |u|`, or `None` for a (numerically) zero vector.
pub fn normalized(u: &Spinor, min_norm: f64) -> Option<Spinor> {
    let n = norm(u);
    if !(n > min_norm) {
        return None;
    }
    Some([u[0] / n, u[1] / n])
}

/// `|<u, v>| / (|u| |v|)`; 1 means the vectors agree up to a complex phase.
pub fn phase_collinearity(u: &Spinor, v: &Spinor) -> f64 {
    inner(u, v).norm() / (norm(u) * norm(v))
}
