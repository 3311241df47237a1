//! Plane-wave solutions `u(E, k) e^{i(k1 x + k2 y - E t)}` of the Dirac
//! equation in an arbitrary representation.

use crate::clifford::GammaRep;
use crate::error::{Error, Result};
use crate::mat2::{self, c64, Complex64, Mat2, Spinor};

/// Below this the closed-form normalization denominator is considered
/// degenerate.
pub const EPS_DENOM: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Momentum {
    pub k1: f64,
    pub k2: f64,
    pub m: f64,
}

impl Momentum {
    pub fn new(k1: f64, k2: f64, m: f64) -> Result<Self> {
        if !(k1.is_finite() && k2.is_finite() && m.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "momentum ({k1}, {k2}) and mass {m} must be finite"
            )));
        }
        if m < 0.0 {
            return Err(Error::InvalidArgument(format!(
                "mass must be >= 0, got {m}"
            )));
        }
        Ok(Momentum { k1, k2, m })
    }

    /// `sqrt(k1^2 + k2^2 + m^2)`.
    pub fn energy(&self) -> f64 {
        (self.k1 * self.k1 + self.k2 * self.k2 + self.m * self.m).sqrt()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Positive,
    Negative,
}

impl Branch {
    pub fn sign(self) -> f64 {
        match self {
            Branch::Positive => 1.0,
            Branch::Negative => -1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    /// The closed-form `N` scale.
    ClosedForm,
    /// `N` degenerated; the spinor was normalized numerically.
    NumericFallback,
    /// Produced by a transformation that does not preserve `u^dagger u`.
    Transformed,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneWaveSolution {
    pub momentum: Momentum,
    pub branch: Branch,
    /// Energy magnitude; the operator is evaluated at `branch.sign() * energy`.
    pub energy: f64,
    pub spinor: Spinor,
    pub normalization: Normalization,
}

impl PlaneWaveSolution {
    pub fn signed_energy(&self) -> f64 {
        self.branch.sign() * self.energy
    }

    /// `|D u|` with `D` evaluated at this solution's signed energy.
    pub fn dirac_residual(&self, rep: &GammaRep) -> f64 {
        mat2::norm(&dirac_matrix(rep, self.signed_energy(), &self.momentum).apply(&self.spinor))
    }
}

/// `(E+, E-)`.
pub fn dispersion(mom: &Momentum) -> (f64, f64) {
    let e = mom.energy();
    (e, -e)
}

/// `gamma^0 E - gamma^1 k1 - gamma^2 k2 - m I`.
pub fn dirac_matrix(rep: &GammaRep, energy: f64, mom: &Momentum) -> Mat2 {
    rep.gamma0().scale_re(energy)
        - rep.gamma1().scale_re(mom.k1)
        - rep.gamma2().scale_re(mom.k2)
        - Mat2::IDENTITY.scale_re(mom.m)
}

/// `2E (E + c0 m + c1 k2 - c2 k1)`, the squared length of the unnormalized
/// closed-form spinor.
pub fn normalization_denominator(rep: &GammaRep, mom: &Momentum) -> f64 {
    let c = rep.params().c();
    let e = mom.energy();
    2.0 * e * (e + c[0] * mom.m + c[1] * mom.k2 - c[2] * mom.k1)
}

/// Unnormalized closed-form spinor for either branch, with `E > 0`.
pub fn closed_form_vector(rep: &GammaRep, mom: &Momentum, branch: Branch) -> Spinor {
    let p = rep.params();
    let (a, b, c) = (p.a(), p.b(), p.c());
    let (k1, k2, m) = (mom.k1, mom.k2, mom.m);
    let e = mom.energy();
    let diag_re = c[0] * e + m;
    let diag_im = c[1] * k1 + c[2] * k2;
    let off_im = b[0] * e - a[1] * k1 - a[2] * k2;
    let off_re = a[0] * e + b[1] * k1 + b[2] * k2;
    match branch {
        Branch::Positive => [c64(diag_re, -diag_im), c64(off_re, off_im)],
        Branch::Negative => [c64(-off_re, off_im), c64(diag_re, diag_im)],
    }
}

/// Plane-wave spinor for the given branch.
///
/// Uses the closed form, whose squared length is
/// `2E(E + c0 m + c1 k2 - c2 k1)`; the length is taken from the vector
/// itself so `u^dagger u = 1` holds to rounding. When that denominator drops below [`EPS_DENOM`] the closed-form vector
/// has length below `sqrt(EPS_DENOM)`, so the solution is taken from the
/// null space of the Dirac matrix instead and flagged.
pub fn spinor(rep: &GammaRep, mom: &Momentum, branch: Branch) -> Result<PlaneWaveSolution> {
    if mom.k1 == 0.0 && mom.k2 == 0.0 && mom.m == 0.0 {
        return Err(Error::InvalidArgument(
            "zero momentum with zero mass has no plane-wave scale".into(),
        ));
    }
    let energy = mom.energy();
    let denom = normalization_denominator(rep, mom);
    let (spinor, normalization) = if denom >= EPS_DENOM {
        let v = closed_form_vector(rep, mom, branch);
        let n = 1.0 / mat2::norm(&v);
        ([v[0] * n, v[1] * n], Normalization::ClosedForm)
    } else {
        let d = dirac_matrix(rep, branch.sign() * energy, mom);
        (null_vector(&d)?, Normalization::NumericFallback)
    };
    Ok(PlaneWaveSolution {
        momentum: *mom,
        branch,
        energy,
        spinor,
        normalization,
    })
}

/// Unit null vector of a rank-one 2x2 matrix, taken orthogonal to its
/// larger row.
fn null_vector(d: &Mat2) -> Result<Spinor> {
    let r0 = d.0[0];
    let r1 = d.0[1];
    let n0 = r0[0].norm_sqr() + r0[1].norm_sqr();
    let n1 = r1[0].norm_sqr() + r1[1].norm_sqr();
    let row = if n0 >= n1 { r0 } else { r1 };
    let scale = n0.max(n1);
    if scale == 0.0 {
        return Err(Error::Inconsistent(
            "Dirac matrix vanishes identically".into(),
        ));
    }
    if d.det().norm() > 1e-10 * scale.max(1.0) {
        return Err(Error::Inconsistent(format!(
            "Dirac matrix is not rank-deficient (|det| = {:.3e})",
            d.det().norm()
        )));
    }
    mat2::normalized(&[-row[1], row[0]], 0.0)
        .ok_or_else(|| Error::Inconsistent("null vector vanished".into()))
}

/// Independent route to the plane-wave spinor: the unit null vector of the
/// on-shell Dirac matrix. Agrees with [`spinor`] up to a complex phase.
pub fn nullspace_oracle(rep: &GammaRep, mom: &Momentum, branch: Branch) -> Result<Spinor> {
    null_vector(&dirac_matrix(rep, branch.sign() * mom.energy(), mom))
}

/// `u^dagger gamma^0`, as a row vector.
pub fn adjoint_spinor(u: &Spinor, rep: &GammaRep) -> Spinor {
    rep.gamma0().left_apply(&[u[0].conj(), u[1].conj()])
}

fn row_times(row: &Spinor, v: &Spinor) -> Complex64 {
    row[0] * v[0] + row[1] * v[1]
}

/// `(u^dagger gamma^0) v`.
pub fn bilinear_scalar(u: &Spinor, v: &Spinor, rep: &GammaRep) -> Complex64 {
    row_times(&adjoint_spinor(u, rep), v)
}

/// `j^mu = (u^dagger gamma^0) gamma^mu u`; `j^0 = u^dagger u`.
pub fn bilinear_current(u: &Spinor, rep: &GammaRep) -> [Complex64; 3] {
    let bar = adjoint_spinor(u, rep);
    std::array::from_fn(|mu| row_times(&bar, &rep.gamma(mu).apply(u)))
}
