//! Equivalence of two representations.
//!
//! An intertwiner `M` satisfies `gamma'^mu M - M gamma^mu = 0` for every `mu`.
//! Column-major vectorization turns that into the homogeneous system
//! `(I (x) gamma'^mu - (gamma^mu)^T (x) I) vec(M) = 0`, three 4x4 blocks stacked
//! into a 12x4 complex matrix whose null space is read off its SVD.

use nalgebra::DMatrix;
use serde::Serialize;

use crate::clifford::GammaRep;
use crate::error::{Error, Result};
use crate::mat2::{Complex64, Mat2};
use crate::report::VerificationReport;

pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntertwinerResult {
    pub m: Mat2,
    /// `max_mu |M gamma^mu M^-1 - gamma'^mu|`.
    pub residual: f64,
    pub commutant_dim: usize,
    /// `det M = 1` with the largest entry on the positive real side.
    pub normalized: bool,
}

/// Singular values of the stacked system, descending, with the right
/// singular vector of the smallest one.
#[derive(Debug, Clone, Serialize)]
pub struct SystemSpectrum {
    pub singular_values: Vec<f64>,
    #[serde(skip)]
    null_vector: [Complex64; 4],
}

fn kron_block(gp: &Mat2, g: &Mat2) -> [[Complex64; 4]; 4] {
    // Row index r = i + 2 j and column index c = k + 2 l address M_{ij} and M_{kl}.
    let mut out = [[Complex64::new(0.0, 0.0); 4]; 4];
    for j in 0..2 {
        for i in 0..2 {
            for l in 0..2 {
                for k in 0..2 {
                    let mut v = Complex64::new(0.0, 0.0);
                    if l == j {
                        v += gp.get(i, k);
                    }
                    if k == i {
                        v -= g.get(l, j);
                    }
                    out[i + 2 * j][k + 2 * l] = v;
                }
            }
        }
    }
    out
}

/// The 12x4 matrix of the vectorized intertwining condition.
pub fn intertwining_system(rep_a: &GammaRep, rep_b: &GammaRep) -> DMatrix<Complex64> {
    let mut sys = DMatrix::zeros(12, 4);
    for mu in 0..3 {
        let block = kron_block(rep_b.gamma(mu), rep_a.gamma(mu));
        for (r, row) in block.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                sys[(4 * mu + r, c)] = *v;
            }
        }
    }
    sys
}

pub fn system_spectrum(rep_a: &GammaRep, rep_b: &GammaRep) -> SystemSpectrum {
    let svd = intertwining_system(rep_a, rep_b).svd(false, true);
    let v_t = svd.v_t.expect("requested V^H");
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&i, &j| svd.singular_values[j].total_cmp(&svd.singular_values[i]));
    let smallest = *order.last().expect("four singular values");
    SystemSpectrum {
        singular_values: order.iter().map(|&i| svd.singular_values[i]).collect(),
        null_vector: std::array::from_fn(|c| v_t[(smallest, c)].conj()),
    }
}

impl SystemSpectrum {
    /// Number of singular values at or below `tol * sigma_max`.
    pub fn null_dimension(&self, tol: f64) -> usize {
        let cutoff = tol * self.singular_values.first().copied().unwrap_or(0.0);
        self.singular_values
            .iter()
            .filter(|&&s| s <= cutoff)
            .count()
    }
}

/// Dimension of the space of `M` with `gamma'^mu M = M gamma^mu`.
/// For two valid representations this is 1.
pub fn commutant_dimension(rep_a: &GammaRep, rep_b: &GammaRep, tol: f64) -> usize {
    system_spectrum(rep_a, rep_b).null_dimension(tol)
}

fn conjugation_residuals(m: &Mat2, rep_a: &GammaRep, rep_b: &GammaRep) -> Option<[f64; 3]> {
    let scale = m.max_abs() * m.max_abs();
    let inv = m.inverse(1e-12 * scale)?;
    Some(std::array::from_fn(|mu| {
        (*m * *rep_a.gamma(mu) * inv).max_abs_diff(rep_b.gamma(mu))
    }))
}

/// Scales `M` to `det M = 1`, then flips the overall sign so the
/// largest-modulus entry has non-negative real part.
pub fn normalize_intertwiner(m: &Mat2) -> Option<Mat2> {
    let det = m.det();
    if !(det.norm() > 1e-300) {
        return None;
    }
    let mut out = m.scale(Complex64::new(1.0, 0.0) / det.sqrt());
    let pivot = out
        .0
        .iter()
        .flatten()
        .copied()
        .max_by(|x, y| x.norm().total_cmp(&y.norm()))
        .expect("four entries");
    if pivot.re < 0.0 {
        out = -out;
    }
    Some(out)
}

/// Solves for `M` with `M gamma^mu M^-1 = gamma'^mu` (`gamma` from `rep_a`,
/// `gamma'` from `rep_b`).
pub fn find_intertwiner(rep_a: &GammaRep, rep_b: &GammaRep, tol: f64) -> Result<IntertwinerResult> {
    let spectrum = system_spectrum(rep_a, rep_b);
    let commutant_dim = spectrum.null_dimension(tol);
    if commutant_dim == 0 {
        return Err(Error::Inconsistent(format!(
            "no intertwiner: smallest singular value {:.3e} exceeds cutoff",
            spectrum.singular_values.last().copied().unwrap_or(f64::NAN)
        )));
    }
    let v = spectrum.null_vector;
    let raw = Mat2::new(v[0], v[2], v[1], v[3]);
    let m = normalize_intertwiner(&raw)
        .ok_or_else(|| Error::Degenerate("null-space matrix is singular".into()))?;
    let residual = conjugation_residuals(&m, rep_a, rep_b)
        .ok_or_else(|| Error::Degenerate("normalized intertwiner is singular".into()))?
        .into_iter()
        .fold(0.0, f64::max);
    if !(residual <= tol) {
        return Err(Error::Inconsistent(format!(
            "candidate intertwiner misses by {residual:.3e}"
        )));
    }
    Ok(IntertwinerResult {
        m,
        residual,
        commutant_dim,
        normalized: true,
    })
}

/// Recomputes the conjugation residual for each `mu` from `res.m` alone.
pub fn verify_intertwiner(
    res: &IntertwinerResult,
    rep_a: &GammaRep,
    rep_b: &GammaRep,
    tol: f64,
) -> VerificationReport {
    let mut report = VerificationReport::new();
    match conjugation_residuals(&res.m, rep_a, rep_b) {
        Some(r) => {
            for (mu, value) in r.into_iter().enumerate() {
                report.record(format!("conjugation-{mu}"), value, tol);
            }
        }
        None => report.record("intertwiner-invertible", f64::INFINITY, tol),
    }
    report
}

/// `|<A, B>_F| / (|A|_F |B|_F)`: 1 when the matrices agree up to a complex scalar.
pub fn matrix_collinearity(a: &Mat2, b: &Mat2) -> f64 {
    let ip: Complex64 =
        a.0.iter()
            .flatten()
            .zip(b.0.iter().flatten())
            .map(|(x, y)| x.conj() * y)
            .sum();
    ip.norm() / (a.frobenius_norm() * b.frobenius_norm())
}

/// Rank of `{I, gamma^0, gamma^1, gamma^2}` as vectors in C^4. Rank 4 means
/// they already span every 2x2 matrix, leaving no room for a fourth gamma.
pub fn clifford_basis_rank(rep: &GammaRep, tol: f64) -> usize {
    let mats = [Mat2::IDENTITY, *rep.gamma0(), *rep.gamma1(), *rep.gamma2()];
    let sys = DMatrix::from_fn(4, 4, |r, c| mats[c].get(r / 2, r % 2));
    let sv = sys.singular_values();
    let max = sv.iter().copied().fold(0.0, f64::max);
    sv.iter().filter(|&&s| s > tol * max).count()
}
