//! The minimum problem: the least sup-norm of a real symbol inducing a given
//! self-adjoint Toeplitz matrix, and the step function attaining it.
//!
//! For a trial height `c` the analytic half `h` of the symbol is pushed
//! through the strip map into the disk, giving a jet `b`. The height is
//! minimal exactly when the lower-triangular Toeplitz matrix of `b` has norm
//! 1, so `c_A` is found by bisection on `c -> ‖B(c)‖ - 1`. The extremal
//! Blaschke product at that height then yields the minimizer.

use serde::{Deserialize, Serialize};

use crate::cf::{cf_extremal_with, cf_norm_with, ExtremalConfig, RationalInner};
use crate::error::{Error, Result};
use crate::series::forward_map;
use crate::stepfn::AlternatingStepFunction;
use crate::toeplitz::{operator_norm_with, HermitianToeplitzSpec};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    /// Allowed `|‖B(c)‖ - 1|` at the returned height.
    pub tol: f64,
    /// Maximum accepted Fourier mismatch of the minimizer.
    pub residual_threshold: f64,
    /// Off-diagonal coefficients below this make the matrix diagonal.
    pub diagonal_threshold: f64,
    /// Number of points in the sampled norm profile.
    pub profile_samples: usize,
    /// Upper bracket end as a multiple of `‖A‖`.
    pub upper_factor: f64,
    /// Doublings of the upper bracket end before giving up.
    pub max_expansions: usize,
    /// Phase grid override for jump localization.
    pub grid: Option<usize>,
    pub extremal: ExtremalConfig,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            residual_threshold: 1e-7,
            diagonal_threshold: 1e-14,
            profile_samples: 64,
            upper_factor: 3.0,
            max_expansions: 10,
            grid: None,
            extremal: ExtremalConfig::default(),
        }
    }
}

/// Outcome of [`solve_min`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MinimizerResult {
    pub c_min: f64,
    /// `None` for diagonal input, where the minimizer is constant.
    pub omega: Option<RationalInner>,
    pub step: AlternatingStepFunction,
    pub order: usize,
    pub operator_norm: f64,
    /// `c_min / ‖A‖`.
    pub norm_ratio: f64,
    /// `max |psi^(n) - a_n|` over `0 <= n <= N`.
    pub fourier_residual: f64,
    /// `|‖B(c_min)‖ - 1|`.
    pub norm_residual: f64,
    /// Max deviation of `|w|` from 1 on a 1024-point grid.
    pub unimodularity_residual: f64,
    /// Whether the sampled norm profile was strictly decreasing.
    pub profile_monotone: bool,
}

/// `‖B(c)‖` for the jet of `i tan(pi h / 2c)`.
pub fn norm_at(c: f64, spec: &HermitianToeplitzSpec) -> Result<f64> {
    norm_at_with(c, spec, &SolverConfig::default())
}

pub fn norm_at_with(c: f64, spec: &HermitianToeplitzSpec, cfg: &SolverConfig) -> Result<f64> {
    cf_norm_with(&forward_map(spec.coefficients(), c)?, &cfg.extremal.linalg)
}

pub fn solve_min(spec: &HermitianToeplitzSpec) -> Result<MinimizerResult> {
    solve_min_with(spec, &SolverConfig::default())
}

/// Like [`solve_min_unchecked`] but fails when the Fourier residual exceeds
/// `cfg.residual_threshold`.
pub fn solve_min_with(spec: &HermitianToeplitzSpec, cfg: &SolverConfig) -> Result<MinimizerResult> {
    let res = solve_min_unchecked(spec, cfg)?;
    if !(res.fourier_residual <= cfg.residual_threshold) {
        return Err(Error::FourierResidual {
            residual: res.fourier_residual,
            threshold: cfg.residual_threshold,
        });
    }
    Ok(res)
}

/// Solves the minimum problem and reports residuals without judging them.
pub fn solve_min_unchecked(
    spec: &HermitianToeplitzSpec,
    cfg: &SolverConfig,
) -> Result<MinimizerResult> {
    if spec.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    let a_norm = operator_norm_with(&spec.to_matrix(), &cfg.extremal.linalg)?;
    let a0 = spec.a0();
    if spec.is_diagonal(cfg.diagonal_threshold) {
        let step = AlternatingStepFunction::constant(a0)?;
        let fourier_residual = fourier_residual(&step, spec);
        return Ok(MinimizerResult {
            c_min: a0.abs(),
            omega: None,
            step,
            order: 0,
            operator_norm: a_norm,
            norm_ratio: a0.abs() / a_norm,
            fourier_residual,
            norm_residual: 0.0,
            unimodularity_residual: 0.0,
            profile_monotone: true,
        });
    }

    let f = |c: f64| norm_at_with(c, spec, cfg).map(|v| v - 1.0);
    let floor = a0.abs() * (1.0 + 4.0 * f64::EPSILON) + f64::MIN_POSITIVE;
    let lo = a_norm.max(floor);
    let mut hi = cfg.upper_factor * a_norm;
    let mut expansions = 0;
    while f(hi)? >= 0.0 {
        if expansions == cfg.max_expansions {
            return Err(Error::BracketFailure {
                profile: sample_profile(spec, cfg, lo, hi)?,
            });
        }
        hi *= 2.0;
        expansions += 1;
    }
    let profile = sample_profile(spec, cfg, lo, hi)?;
    let profile_monotone = profile.windows(2).all(|w| w[1].1 < w[0].1);
    if profile[0].1 < 1.0 {
        return Err(Error::BracketFailure { profile });
    }
    // First sampled crossing; equals the bracket [lo, hi] when monotone.
    let k = profile
        .iter()
        .position(|&(_, v)| v < 1.0)
        .expect("norm at hi is below 1");
    let (mut left, mut right) = (profile[k - 1].0, profile[k].0);
    let (mut f_left, mut f_right) = (profile[k - 1].1 - 1.0, profile[k].1 - 1.0);
    for _ in 0..200 {
        let mid = 0.5 * (left + right);
        if mid <= left || mid >= right {
            break;
        }
        let fm = f(mid)?;
        if fm >= 0.0 {
            left = mid;
            f_left = fm;
        } else {
            right = mid;
            f_right = fm;
        }
    }
    let (c_min, norm_residual) = if f_left.abs() <= f_right.abs() {
        (left, f_left.abs())
    } else {
        (right, f_right.abs())
    };
    if norm_residual > cfg.tol {
        return Err(Error::NormEquation {
            residual: norm_residual,
            tol: cfg.tol,
        });
    }

    let b = forward_map(spec.coefficients(), c_min)?;
    let omega = cf_extremal_with(&b, &cfg.extremal)?;
    let step = AlternatingStepFunction::step_from_blaschke_with_grid(&omega, c_min, cfg.grid)?;
    let fourier_residual = fourier_residual(&step, spec);
    Ok(MinimizerResult {
        c_min,
        order: step.order(),
        operator_norm: a_norm,
        norm_ratio: c_min / a_norm,
        fourier_residual,
        norm_residual,
        unimodularity_residual: omega.unimodularity_residual(1024),
        profile_monotone,
        omega: Some(omega),
        step,
    })
}

fn sample_profile(
    spec: &HermitianToeplitzSpec,
    cfg: &SolverConfig,
    lo: f64,
    hi: f64,
) -> Result<Vec<(f64, f64)>> {
    let n = cfg.profile_samples.max(2);
    (0..n)
        .map(|k| {
            let c = lo + (hi - lo) * k as f64 / (n - 1) as f64;
            norm_at_with(c, spec, cfg).map(|v| (c, v))
        })
        .collect()
}

/// `max |psi^(n) - a_n|` over `0 <= n <= N`.
pub fn fourier_residual(step: &AlternatingStepFunction, spec: &HermitianToeplitzSpec) -> f64 {
    spec.coefficients()
        .iter()
        .enumerate()
        .map(|(n, &a)| (step.fourier(n as i64) - a).norm())
        .fold(0.0, f64::max)
}

/// Summary of a solve checked against the matrix it came from.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub c_min: f64,
    pub operator_norm: f64,
    pub ratio: f64,
    pub fourier_residual: f64,
    pub unimodularity_residual: f64,
    pub diagonal: bool,
    /// `ratio >= 1`, and `ratio > 1` for non-diagonal input.
    pub ratio_ok: bool,
}

pub fn certificate(res: &MinimizerResult, spec: &HermitianToeplitzSpec) -> Result<Certificate> {
    certificate_with(res, spec, &SolverConfig::default())
}

pub fn certificate_with(
    res: &MinimizerResult,
    spec: &HermitianToeplitzSpec,
    cfg: &SolverConfig,
) -> Result<Certificate> {
    let operator_norm = operator_norm_with(&spec.to_matrix(), &cfg.extremal.linalg)?;
    let ratio = res.c_min / operator_norm;
    let diagonal = spec.is_diagonal(cfg.diagonal_threshold);
    let ratio_ok = if diagonal {
        ratio >= 1.0 - 1e-15
    } else {
        ratio > 1.0
    };
    Ok(Certificate {
        c_min: res.c_min,
        operator_norm,
        ratio,
        fourier_residual: fourier_residual(&res.step, spec),
        unimodularity_residual: res
            .omega
            .as_ref()
            .map_or(0.0, |w| w.unimodularity_residual(1024)),
        diagonal,
        ratio_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toeplitz::C64;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn diagonal_short_circuit() {
        let spec = HermitianToeplitzSpec::new(vec![c(-3.0, 0.0), c(0.0, 0.0)]).unwrap();
        let res = solve_min(&spec).unwrap();
        assert_eq!(res.c_min, 3.0);
        assert_eq!(res.order, 0);
        assert_eq!(res.step.eval(0.3).unwrap(), -3.0);
        let cert = certificate(&res, &spec).unwrap();
        assert_eq!(cert.ratio, 1.0);
        assert!(cert.ratio_ok && cert.diagonal);
    }

    #[test]
    fn zero_rejected() {
        let spec = HermitianToeplitzSpec::new(vec![c(0.0, 0.0); 3]).unwrap();
        assert_eq!(solve_min(&spec), Err(Error::ZeroMatrix));
    }

    #[test]
    fn norm_at_diagonal_closed_form() {
        let spec = HermitianToeplitzSpec::new(vec![c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        let v = norm_at(2.0, &spec).unwrap();
        assert!((v - (PI / 8.0).tan()).abs() < 1e-15);
    }

    #[test]
    fn norm_at_corner_spec_is_one() {
        for n in 1..=5 {
            let mut a = vec![c(0.0, 0.0); n + 1];
            a[n] = c(0.0, -2.0 / PI);
            let spec = HermitianToeplitzSpec::new(a).unwrap();
            assert!((norm_at(1.0, &spec).unwrap() - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn norm_at_decays() {
        let spec =
            HermitianToeplitzSpec::new(vec![c(0.2, 0.0), c(0.3, -0.1), c(0.05, 0.2)]).unwrap();
        let vals: Vec<f64> = [1.0, 10.0, 100.0, 1000.0]
            .iter()
            .map(|&cc| norm_at(cc, &spec).unwrap())
            .collect();
        assert!(vals.windows(2).all(|w| w[1] < w[0]));
        assert!(vals[3] < 1e-2);
    }

    #[test]
    fn arc_spec_at_pi() {
        let spec = HermitianToeplitzSpec::new(vec![c(0.0, 0.0), c(0.0, -2.0 / PI)]).unwrap();
        let res = solve_min(&spec).unwrap();
        assert!((res.c_min - 1.0).abs() < 1e-12);
        assert_eq!(res.order, 1);
        assert!(res.step.jumps()[0].abs() < 1e-12);
        assert!((res.step.jumps()[1] - PI).abs() < 1e-12);
        let cert = certificate(&res, &spec).unwrap();
        assert!((cert.ratio - PI / 2.0).abs() < 1e-12);
    }
}
