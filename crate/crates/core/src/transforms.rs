//! Lorentz boosts and parity acting on spinors of a general representation.
//!
//! A boost along spatial axis `j` is `S = exp(-(theta/2) gamma^0 gamma^j)`.
//! The generator squares to `+I`, so `S = I cosh(theta/2) - G sinh(theta/2)`
//! exactly, and `S^-1` is the same expression at `-theta`.

use serde::Serialize;

use crate::clifford::GammaRep;
use crate::error::{Error, Result};
use crate::mat2::{Complex64, Mat2, Spinor};
use crate::planewave::{Branch, Momentum, Normalization, PlaneWaveSolution};
use crate::report::VerificationReport;

/// Largest accepted `|theta|`.
pub const MAX_RAPIDITY: f64 = 20.0;

/// Rapidity `theta`, with velocity `v = tanh(theta)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Rapidity(f64);

impl Rapidity {
    pub fn new(theta: f64) -> Result<Self> {
        if !theta.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "rapidity must be finite, got {theta}"
            )));
        }
        if theta.abs() > MAX_RAPIDITY {
            return Err(Error::RapidityOverflow(theta));
        }
        Ok(Rapidity(theta))
    }

    pub fn theta(self) -> f64 {
        self.0
    }

    pub fn velocity(self) -> f64 {
        self.0.tanh()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum BoostAxis {
    X1,
    X2,
}

impl BoostAxis {
    pub fn index(self) -> usize {
        match self {
            BoostAxis::X1 => 1,
            BoostAxis::X2 => 2,
        }
    }

    /// The spatial direction the boost leaves alone.
    pub fn transverse(self) -> usize {
        3 - self.index()
    }

    pub fn from_index(i: usize) -> Result<Self> {
        match i {
            1 => Ok(BoostAxis::X1),
            2 => Ok(BoostAxis::X2),
            _ => Err(Error::InvalidArgument(format!(
                "boost axis must be 1 or 2, got {i}"
            ))),
        }
    }
}

/// Spacetime matrix on `(x^0, x^axis)`.
pub type Lambda2 = [[f64; 2]; 2];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoostOp {
    pub s: Mat2,
    pub s_inv: Mat2,
    pub lambda: Lambda2,
    pub axis: BoostAxis,
    pub theta: f64,
    generator: Mat2,
}

impl BoostOp {
    /// `gamma^0 gamma^axis`.
    pub fn generator(&self) -> &Mat2 {
        &self.generator
    }
}

pub fn boost_lambda(theta: f64) -> Lambda2 {
    let (ch, sh) = (theta.cosh(), theta.sinh());
    [[ch, -sh], [-sh, ch]]
}

fn half_angle_exp(generator: &Mat2, theta: f64) -> Mat2 {
    let half = 0.5 * theta;
    Mat2::IDENTITY.scale_re(half.cosh()) - generator.scale_re(half.sinh())
}

pub fn boost_operator(rep: &GammaRep, theta: f64, axis: BoostAxis) -> Result<BoostOp> {
    let theta = Rapidity::new(theta)?.theta();
    let generator = *rep.gamma0() * *rep.gamma(axis.index());
    Ok(BoostOp {
        s: half_angle_exp(&generator, theta),
        s_inv: half_angle_exp(&generator, -theta),
        lambda: boost_lambda(theta),
        axis,
        theta,
        generator,
    })
}

/// Residuals of `S^-1 gamma^nu S = gamma^mu Lambda_mu^nu` plus the algebraic
/// properties of `S` itself (inverse, unit determinant, Hermiticity).
pub fn covariance_check(rep: &GammaRep, b: &BoostOp, tol: f64) -> VerificationReport {
    let (ch, sh) = (b.theta.cosh(), b.theta.sinh());
    let g0 = rep.gamma0();
    let gj = rep.gamma(b.axis.index());
    let gt = rep.gamma(b.axis.transverse());
    let conj = |g: &Mat2| b.s_inv * *g * b.s;

    let mut report = VerificationReport::new();
    report.record(
        "covariance-time",
        conj(g0).max_abs_diff(&(g0.scale_re(ch) - gj.scale_re(sh))),
        tol,
    );
    report.record(
        "covariance-axis",
        conj(gj).max_abs_diff(&(gj.scale_re(ch) - g0.scale_re(sh))),
        tol,
    );
    report.record("covariance-transverse", conj(gt).max_abs_diff(gt), tol);
    report.record(
        "boost-inverse",
        (b.s * b.s_inv).max_abs_diff(&Mat2::IDENTITY),
        tol,
    );
    report.record(
        "boost-unimodular",
        (b.s.det() - Complex64::new(1.0, 0.0)).norm(),
        tol,
    );
    report.record("boost-hermitian", b.s.adjoint().max_abs_diff(&b.s), tol);
    report
}

/// Applies `Lambda` to the signed energy and the momentum component along
/// the boost axis.
pub fn boost_momentum(b: &BoostOp, signed_energy: f64, mom: &Momentum) -> (f64, Momentum) {
    let k = match b.axis {
        BoostAxis::X1 => mom.k1,
        BoostAxis::X2 => mom.k2,
    };
    let l = &b.lambda;
    let e_new = l[0][0] * signed_energy + l[0][1] * k;
    let k_new = l[1][0] * signed_energy + l[1][1] * k;
    let mut out = *mom;
    match b.axis {
        BoostAxis::X1 => out.k1 = k_new,
        BoostAxis::X2 => out.k2 = k_new,
    }
    (e_new, out)
}

/// `u' = S u` at the `Lambda`-transformed momentum. Boosts do not preserve
/// `u^dagger u`, so the result is marked [`Normalization::Transformed`].
pub fn boost_spinor(b: &BoostOp, sol: &PlaneWaveSolution) -> PlaneWaveSolution {
    let (e_new, momentum) = boost_momentum(b, sol.signed_energy(), &sol.momentum);
    let branch = if e_new >= 0.0 {
        Branch::Positive
    } else {
        Branch::Negative
    };
    PlaneWaveSolution {
        momentum,
        branch,
        energy: e_new.abs(),
        spinor: b.s.apply(&sol.spinor),
        normalization: Normalization::Transformed,
    }
}

/// Product of two boosts along the same axis of the same representation.
pub fn boost_compose(b1: &BoostOp, b2: &BoostOp) -> Result<BoostOp> {
    if b1.axis != b2.axis {
        return Err(Error::InvalidArgument(format!(
            "cannot compose boosts along {:?} and {:?}",
            b1.axis, b2.axis
        )));
    }
    if b1.generator.max_abs_diff(&b2.generator) > 1e-12 {
        return Err(Error::InvalidArgument(
            "boosts were built from different representations".into(),
        ));
    }
    let theta = Rapidity::new(b1.theta + b2.theta)?.theta();
    let (l1, l2) = (&b1.lambda, &b2.lambda);
    let lambda =
        std::array::from_fn(|i| std::array::from_fn(|j| l2[i][0] * l1[0][j] + l2[i][1] * l1[1][j]));
    Ok(BoostOp {
        s: b2.s * b1.s,
        s_inv: b1.s_inv * b2.s_inv,
        lambda,
        axis: b1.axis,
        theta,
        generator: b1.generator,
    })
}

/// `P = e^{i phi} gamma^0`, reflecting `x^1` in the (1+1) reading.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParityOp {
    pub p: Mat2,
    pub phi: f64,
    /// `diag(1, -1)` on `(x^0, x^1)`.
    pub lambda: Lambda2,
}

pub fn parity_operator(rep: &GammaRep, phi: f64) -> Result<ParityOp> {
    if !phi.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "parity phase must be finite, got {phi}"
        )));
    }
    Ok(ParityOp {
        p: rep.gamma0().scale(Complex64::from_polar(1.0, phi)),
        phi,
        lambda: [[1.0, 0.0], [0.0, -1.0]],
    })
}

/// `P gamma^mu P^-1` against `+gamma^0, -gamma^1, -gamma^2`, and
/// `P^2 = e^{2 i phi} I`.
///
/// `P` flips both spatial gammas; only the (1+1) reading with `k2 = 0`
/// matches the single-axis reflection `Lambda = diag(1, -1)`.
pub fn parity_check(rep: &GammaRep, p: &ParityOp, tol: f64) -> VerificationReport {
    let mut report = VerificationReport::new();
    let Some(p_inv) = p.p.inverse(1e-12) else {
        report.record("parity-invertible", f64::INFINITY, tol);
        return report;
    };
    let conj = |g: &Mat2| p.p * *g * p_inv;
    report.record(
        "parity-gamma0",
        conj(rep.gamma0()).max_abs_diff(rep.gamma0()),
        tol,
    );
    report.record(
        "parity-gamma1",
        conj(rep.gamma1()).max_abs_diff(&-*rep.gamma1()),
        tol,
    );
    report.record(
        "parity-gamma2",
        conj(rep.gamma2()).max_abs_diff(&-*rep.gamma2()),
        tol,
    );
    let phase2 = Complex64::from_polar(1.0, 2.0 * p.phi);
    report.record(
        "parity-square",
        (p.p * p.p).max_abs_diff(&Mat2::IDENTITY.scale(phase2)),
        tol,
    );
    report
}

pub fn parity_apply(p: &ParityOp, sol: &PlaneWaveSolution) -> Spinor {
    p.p.apply(&sol.spinor)
}

/// Momentum at which `P u` solves the Dirac equation: both spatial
/// components flip, which is `(-k1, k2)` when `k2 = 0`.
pub fn parity_momentum(mom: &Momentum) -> Momentum {
    Momentum {
        k1: -mom.k1,
        k2: -mom.k2,
        m: mom.m,
    }
}
