//! Two-tier Gaussian-process surrogate modeling.
//!
//! Many experimental platforms cannot set their physically meaningful inputs
//! (*main factors*, e.g. a reaction temperature) directly. Instead an operator
//! steers them through *manipulating factors* (e.g. a laser power) under
//! uncontrolled *exogenous conditions* (e.g. the day an experiment is run),
//! so the realized main factor is only known imprecisely at prediction time.
//!
//! This crate models that situation with two stacked Gaussian processes:
//!
//! * **Tier 1** (module [`tier1`]): a semi-parametric manipulation model
//!   `z = g(u) + δ(ω)` with a polynomial trend `g`, a constant bias and a
//!   correlated residual process `δ` over the exogenous variable `ω`. Its
//!   posterior at a new `(u_*, ω_*)` is Gaussian with mean `ν_*` and
//!   standard deviation `t_*`.
//! * **Tier 2** (module [`tier2`]): a zero-mean GP `y = f(x, z) + ε` over the
//!   directly controlled factors `x` and the main factor(s) `z`. Prediction
//!   integrates the tier-2 posterior over the tier-1 posterior of `z_*`
//!   analytically, using closed-form expectations of exponential and
//!   squared-exponential kernels under a Gaussian measure.
//!
//! The closed forms are certified against two independent numerical oracles
//! (module [`oracle`]): seeded Monte-Carlo integration and adaptive
//! Gauss–Kronrod quadrature. The [`sim`] module contains a replicated
//! simulation study exercising the full pipeline, and [`metrics`] provides
//! MAE/MSE/NLPD evaluation. See `MATH_NOTES.md` in the repository root for
//! derivations of the propagation integrals.

pub mod analog;
pub mod artifact;
pub mod data;
pub mod error;
pub mod gp;
pub mod kernels;
pub mod linalg;
pub mod metrics;
pub mod optim;
pub mod oracle;
pub mod quad;
pub mod sim;
pub mod special;
pub mod tier1;
pub mod tier2;

pub use error::{Error, Result};
pub use gp::GpModel;
pub use kernels::{KernelFamily, KernelSpec};
pub use metrics::EvalReport;
pub use oracle::McEstimate;
pub use sim::{ScenarioConfig, SimDataset};
pub use tier1::Tier1Model;
pub use tier2::{GaussianPredictive, TwoTierModel};
