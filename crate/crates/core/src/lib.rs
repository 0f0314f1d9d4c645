//! Minimal sup-norm real symbols for self-adjoint Toeplitz matrices.
//!
//! Given `A = (a_{j-k})` of size `N+1`, [`minimax::solve_min`] finds the least
//! `c` such that `A` is induced by a real symbol with `|psi| <= c`, together
//! with the unique step function attaining it. [`ratio`] evaluates explicit
//! parameter families giving lower bounds for `sup c_A / ‖A‖`.

// `!(x > y)` is used on purpose so that NaN takes the error branch.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cf;
pub mod error;
pub mod minimax;
pub mod ratio;
pub mod series;
pub mod stepfn;
pub mod toeplitz;

pub use cf::{blaschke_order, cf_extremal, cf_norm, RationalInner};
pub use error::{Error, Result};
pub use minimax::{certificate, solve_min, solve_min_with, MinimizerResult, SolverConfig};
pub use series::{forward_map, inverse_map, CoefficientJet};
pub use stepfn::{AlternatingStepFunction, ArcSet, Sign};
pub use toeplitz::{operator_norm, HermitianToeplitzSpec, C64};
