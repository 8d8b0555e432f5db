//! Covariance functions and covariance-matrix assembly.
//!
//! Both tiers use anisotropic product kernels over their inputs:
//!
//! * exponential:          `σ² · exp(−Σ_l |a_l − b_l| / b_l)`
//! * squared-exponential:  `σ² · exp(−Σ_l (a_l − b_l)² / (2 b_l²))`
//!
//! with one positive length-scale per input dimension and a positive signal
//! variance. The product structure `c((x,z),(x',z')) = c_x(x,x')·c_z(z,z')`
//! is what makes the closed-form uncertainty propagation of [`crate::tier2`]
//! possible: the `z` coordinate factors out of the kernel exactly.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use faer::Mat;

/// Kernel family shared by both tiers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum KernelFamily {
    /// `exp(−|d|/b)` per dimension; a rough, Markovian (Matérn ν=1/2) kernel.
    Exponential,
    /// `exp(−d²/(2b²))` per dimension; an analytic, very smooth kernel.
    SquaredExponential,
}

impl KernelFamily {
    /// One-dimensional correlation at distance `d ≥ 0` with length-scale `b`.
    #[inline]
    pub fn corrp(self, d: f64, b: f64) -> f64 {
        match self {
            KernelFamily::Exponential => (-d / b).exp(),
            KernelFamily::SquaredExponential => (-0.5 * (d / b) * (d / b)).exp(),
        }
    }

    /// Exponent contribution of one dimension, so that a product kernel can
    /// be evaluated with a single `exp` call: `corr = exp(−Σ_l exponent_l)`.
    #[inline]
    pub fn exponent(self, d: f64, b: f64) -> f64 {
        match self {
            KernelFamily::Exponential => d.abs() / b,
            KernelFamily::SquaredExponential => 0.5 * (d / b) * (d / b),
        }
    }
}

/// Parameterization of an anisotropic product kernel.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct KernelSpec {
    /// Functional form shared by all dimensions.
    pub family: KernelFamily,
    /// One positive length-scale per input dimension.
    pub length_scales: Vec<f64>,
    /// Kernel value at zero distance.
    pub signal_variance: f64,
}

impl KernelSpec {
    /// Validating constructor: all length-scales and the signal variance must
    /// be strictly positive and finite.
    pub fn new(family: KernelFamily, length_scales: Vec<f64>, signal_variance: f64) -> Result<Self> {
        if length_scales.is_empty() {
            return Err(Error::input("kernel needs at least one length-scale"));
        }
        if let Some(b) = length_scales.iter().find(|b| !(b.is_finite() && **b > 0.0)) {
            return Err(Error::input(format!("length-scales must be positive, got {b}")));
        }
        if !(signal_variance.is_finite() && signal_variance > 0.0) {
            return Err(Error::input(format!(
                "signal variance must be positive, got {signal_variance}"
            )));
        }
        Ok(KernelSpec { family, length_scales, signal_variance })
    }

    /// Number of input dimensions this kernel covers.
    pub fn dim(&self) -> usize {
        self.length_scales.len()
    }

    /// Covariance between two points; errors if either point's dimension
    /// disagrees with the number of length-scales.
    pub fn eval(&self, a: &[f64], b: &[f64]) -> Result<f64> {
        if a.len() != self.dim() || b.len() != self.dim() {
            return Err(Error::input(format!(
                "kernel dimension mismatch: spec has {} length-scales, points have {} and {}",
                self.dim(),
                a.len(),
                b.len()
            )));
        }
        Ok(self.eval_unchecked(a, b))
    }

    /// Covariance between two points of already-validated dimension.
    #[inline]
    pub fn eval_unchecked(&self, a: &[f64], b: &[f64]) -> f64 {
        let mut s = 0.0;
        for l in 0..self.length_scales.len() {
            s += self.family.exponent(a[l] - b[l], self.length_scales[l]);
        }
        self.signal_variance * (-s).exp()
    }
}

/// Dense covariance matrix of a point set, with `jitter` added to the
/// diagonal: `G[i,j] = k(points_i, points_j) + jitter·1{i=j}`.
///
/// Only assembly happens here; factorization (and jitter escalation on
/// failure) lives in [`crate::linalg::chol_spd_escalating`].
pub fn gram_matrix(spec: &KernelSpec, points: &[Vec<f64>], jitter: f64) -> Result<Mat<f64>> {
    if points.is_empty() {
        return Err(Error::input("gram_matrix of an empty point set"));
    }
    for (i, p) in points.iter().enumerate() {
        if p.len() != spec.dim() {
            return Err(Error::input(format!(
                "gram_matrix point {i} has dimension {}, kernel expects {}",
                p.len(),
                spec.dim()
            )));
        }
    }
    if !(jitter >= 0.0) {
        return Err(Error::input(format!("jitter must be non-negative, got {jitter}")));
    }
    let n = points.len();
    let mut g = Mat::zeros(n, n);
    for i in 0..n {
        g[(i, i)] = spec.signal_variance + jitter;
        for j in 0..i {
            let v = spec.eval_unchecked(&points[i], &points[j]);
            g[(i, j)] = v;
            g[(j, i)] = v;
        }
    }
    Ok(g)
}

/// Covariance vector between one query point and a point set.
pub fn cross_vector(spec: &KernelSpec, points: &[Vec<f64>], query: &[f64]) -> Result<Vec<f64>> {
    if query.len() != spec.dim() {
        return Err(Error::input(format!(
            "cross_vector query has dimension {}, kernel expects {}",
            query.len(),
            spec.dim()
        )));
    }
    Ok(points.iter().map(|p| spec.eval_unchecked(p, query)).collect())
}
