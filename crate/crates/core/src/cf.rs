//! The Carathéodory–Fejér step: norm of the lower-triangular Toeplitz
//! matrix of a jet, and the extremal finite Blaschke product `r/s`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::CoefficientJet;
use crate::toeplitz::{
    jacobi_svd, operator_norm_with, vec_norm, DenseComplexMatrix, LinalgConfig, C64,
};

/// Deviation of `|w|` from 1 on the circle beyond which a quotient is not
/// accepted as inner.
pub const UNIMODULAR_TOL: f64 = 1e-6;

/// A finite Blaschke product stored as `numerator / denominator`, with the
/// denominator zero-free on the closed disk and `denominator[0]` real
/// positive.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RationalInner {
    pub order: usize,
    pub numerator: Vec<C64>,
    pub denominator: Vec<C64>,
}

fn horner(p: &[C64], z: C64) -> C64 {
    p.iter()
        .rev()
        .fold(C64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

fn poly_mul(p: &[C64], q: &[C64]) -> Vec<C64> {
    let mut out = vec![C64::new(0.0, 0.0); p.len() + q.len() - 1];
    for (i, &a) in p.iter().enumerate() {
        for (j, &b) in q.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

impl RationalInner {
    /// Builds a quotient and measures its order by winding number.
    pub fn new(numerator: Vec<C64>, denominator: Vec<C64>) -> Result<Self> {
        let mut w = Self {
            order: 0,
            numerator,
            denominator,
        };
        w.order = blaschke_order(&w)?;
        Ok(w)
    }

    /// `z^n`.
    pub fn monomial(n: usize) -> Self {
        let mut numerator = vec![C64::new(0.0, 0.0); n + 1];
        numerator[n] = C64::new(1.0, 0.0);
        let mut denominator = vec![C64::new(0.0, 0.0); n + 1];
        denominator[0] = C64::new(1.0, 0.0);
        Self {
            order: n,
            numerator,
            denominator,
        }
    }

    /// `unimodular * prod (z - z_j)/(1 - conj(z_j) z)` for zeros in the open disk.
    pub fn from_zeros(zeros: &[C64], unimodular: C64) -> Self {
        let mut numerator = vec![unimodular];
        let mut denominator = vec![C64::new(1.0, 0.0)];
        for &zj in zeros {
            numerator = poly_mul(&numerator, &[-zj, C64::new(1.0, 0.0)]);
            denominator = poly_mul(&denominator, &[C64::new(1.0, 0.0), -zj.conj()]);
        }
        Self {
            order: zeros.len(),
            numerator,
            denominator,
        }
    }

    pub fn eval(&self, z: C64) -> C64 {
        horner(&self.numerator, z) / horner(&self.denominator, z)
    }

    pub fn eval_angle(&self, theta: f64) -> C64 {
        self.eval(C64::from_polar(1.0, theta))
    }

    /// Max of `| |w(e^{it})| - 1 |` over `samples` equally spaced angles.
    pub fn unimodularity_residual(&self, samples: usize) -> f64 {
        (0..samples)
            .map(|k| (self.eval_angle(2.0 * PI * k as f64 / samples as f64).norm() - 1.0).abs())
            .fold(0.0, f64::max)
    }

    /// Max of `|w(e^{it}) - other(e^{it})|` over `samples` angles.
    pub fn boundary_distance(&self, other: &Self, samples: usize) -> f64 {
        (0..samples)
            .map(|k| {
                let t = 2.0 * PI * k as f64 / samples as f64;
                (self.eval_angle(t) - other.eval_angle(t)).norm()
            })
            .fold(0.0, f64::max)
    }

    fn degree(&self) -> usize {
        self.numerator.len().max(self.denominator.len()) - 1
    }
}

/// `‖B‖` for the lower-triangular Toeplitz matrix with first column `b`.
pub fn cf_norm(b: &CoefficientJet) -> Result<f64> {
    cf_norm_with(b, &LinalgConfig::default())
}

pub fn cf_norm_with(b: &CoefficientJet, cfg: &LinalgConfig) -> Result<f64> {
    operator_norm_with(
        &DenseComplexMatrix::lower_triangular_toeplitz(b.coefficients()),
        cfg,
    )
}

/// Settings for [`cf_extremal_with`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtremalConfig {
    pub linalg: LinalgConfig,
    /// Singular values within `cluster_tol * sigma_max` of the top one are
    /// treated as one multiple singular value.
    pub cluster_tol: f64,
    /// Minimum `|s0|` (for unit `s`) accepted.
    pub min_s0: f64,
}

impl Default for ExtremalConfig {
    fn default() -> Self {
        Self {
            linalg: LinalgConfig::default(),
            cluster_tol: 1e-8,
            min_s0: 1e-8,
        }
    }
}

/// The Blaschke product `w` of least order with `‖B‖ w = b + O(z^{N+1})`.
pub fn cf_extremal(b: &CoefficientJet) -> Result<RationalInner> {
    cf_extremal_with(b, &ExtremalConfig::default())
}

pub fn cf_extremal_with(b: &CoefficientJet, cfg: &ExtremalConfig) -> Result<RationalInner> {
    if b.is_zero() {
        return Err(Error::ZeroJet);
    }
    let big_b = DenseComplexMatrix::lower_triangular_toeplitz(b.coefficients());
    let svd = jacobi_svd(&big_b, &cfg.linalg)?;
    let sigma = svd.singular_values[0];
    if sigma == 0.0 {
        return Err(Error::ZeroJet);
    }
    let multiplicity = svd
        .singular_values
        .iter()
        .take_while(|&&s| sigma - s <= cfg.cluster_tol * sigma)
        .count();

    let mut last_err = None;
    // A multiple top singular value means the extremal product has order
    // below N; its denominator is the lowest-degree vector in the subspace.
    for d in (1..=multiplicity).rev() {
        let s = lowest_degree_vector(&svd.right_vectors[..d], &cfg.linalg)?;
        match quotient_from_vector(&big_b, sigma, s, cfg) {
            Ok(w) => return Ok(w),
            Err(e) => last_err = Some(e),
        }
    }
    Err(last_err.expect("multiplicity is at least one"))
}

/// Unit vector in `span(basis)` whose top `basis.len() - 1` coordinates vanish.
fn lowest_degree_vector(basis: &[Vec<C64>], cfg: &LinalgConfig) -> Result<Vec<C64>> {
    let d = basis.len();
    if d == 1 {
        return Ok(basis[0].clone());
    }
    let n = basis[0].len();
    // rows: coordinates n-d+1 .. n-1, padded with a zero row to be square
    let mut m = DenseComplexMatrix::zeros(d, d);
    for (row, coord) in (n + 1 - d..n).enumerate() {
        for (i, v) in basis.iter().enumerate() {
            m[(row, i)] = v[coord];
        }
    }
    let svd = jacobi_svd(&m, cfg)?;
    let y = svd.right_vectors.last().expect("nonempty");
    let mut s = vec![C64::new(0.0, 0.0); n];
    for (v, &yi) in basis.iter().zip(y) {
        for (sk, &vk) in s.iter_mut().zip(v) {
            *sk += vk * yi;
        }
    }
    let norm = vec_norm(&s);
    Ok(s.into_iter().map(|x| x / norm).collect())
}

fn quotient_from_vector(
    big_b: &DenseComplexMatrix,
    sigma: f64,
    s: Vec<C64>,
    cfg: &ExtremalConfig,
) -> Result<RationalInner> {
    let s0 = s[0].norm();
    if s0 < cfg.min_s0 {
        return Err(Error::IllConditioned(s0));
    }
    let phase = s[0].conj() / s0;
    let s: Vec<C64> = s.into_iter().map(|x| x * phase).collect();
    let r: Vec<C64> = big_b.mul_vec(&s).into_iter().map(|x| x / sigma).collect();
    let mut w = RationalInner::new(r, s)?;
    trim_to_order(&mut w);
    Ok(w)
}

/// Drops numerator/denominator coefficients above the order when they are
/// numerically zero.
fn trim_to_order(w: &mut RationalInner) {
    let keep = w.order + 1;
    let scale = vec_norm(&w.denominator);
    let tail_small = |p: &[C64]| p.iter().skip(keep).all(|x| x.norm() <= 1e-9 * scale);
    if w.degree() + 1 > keep && tail_small(&w.numerator) && tail_small(&w.denominator) {
        w.numerator.truncate(keep);
        w.denominator.truncate(keep);
    }
}

/// Taylor coefficients of `r/s` through degree `m`.
pub fn jet_of(w: &RationalInner, m: usize) -> Result<CoefficientJet> {
    let s0 = w.denominator[0];
    if s0.norm() == 0.0 {
        return Err(Error::ZeroDenominatorAtOrigin);
    }
    let coef = |p: &[C64], k: usize| p.get(k).copied().unwrap_or(C64::new(0.0, 0.0));
    let mut out = vec![C64::new(0.0, 0.0); m + 1];
    for k in 0..=m {
        let mut acc = coef(&w.numerator, k);
        for j in 1..=k.min(w.denominator.len() - 1) {
            acc -= w.denominator[j] * out[k - j];
        }
        out[k] = acc / s0;
    }
    Ok(CoefficientJet::new(out))
}

/// Winding number of `w` around the unit circle.
pub fn blaschke_order(w: &RationalInner) -> Result<usize> {
    let deg = w.degree();
    let mut samples = (512 * deg).max(2048);
    loop {
        let mut max_dev = 0.0f64;
        let mut total = 0.0;
        let mut max_step = 0.0f64;
        let mut prev = w.eval_angle(0.0);
        max_dev = max_dev.max((prev.norm() - 1.0).abs());
        for k in 1..=samples {
            let cur = w.eval_angle(2.0 * PI * k as f64 / samples as f64);
            max_dev = max_dev.max((cur.norm() - 1.0).abs());
            let step = (cur / prev).arg();
            max_step = max_step.max(step.abs());
            total += step;
            prev = cur;
        }
        if max_dev > UNIMODULAR_TOL || !max_dev.is_finite() {
            return Err(Error::NotUnimodular(max_dev));
        }
        if max_step < PI / 4.0 || samples >= 1 << 22 {
            let winding = total / (2.0 * PI);
            let rounded = winding.round();
            if (winding - rounded).abs() > 0.1 || rounded < 0.0 {
                return Err(Error::WindingResidual(winding));
            }
            return Ok(rounded as usize);
        }
        samples *= 4;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn norm_of_constant_jet() {
        let b = CoefficientJet::constant(c(0.3, -0.4), 4);
        assert!((cf_norm(&b).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn norm_of_top_monomial() {
        let mut v = vec![c(0.0, 0.0); 4];
        v[3] = c(0.0, 0.7);
        assert!((cf_norm(&CoefficientJet::new(v)).unwrap() - 0.7).abs() < 1e-15);
    }

    #[test]
    fn monomial_extremal() {
        for n in 0..6 {
            let mut v = vec![c(0.0, 0.0); n + 1];
            v[n] = c(1.0, 0.0);
            let w = cf_extremal(&CoefficientJet::new(v)).unwrap();
            assert_eq!(w.order, n);
            assert!(w.boundary_distance(&RationalInner::monomial(n), 256) < 1e-12);
        }
    }

    #[test]
    fn zero_jet_rejected() {
        assert_eq!(cf_extremal(&CoefficientJet::zero(3)), Err(Error::ZeroJet));
    }

    #[test]
    fn jet_of_identity() {
        let j = jet_of(&RationalInner::monomial(1), 4).unwrap();
        assert_eq!(
            j.coefficients(),
            &[
                c(0.0, 0.0),
                c(1.0, 0.0),
                c(0.0, 0.0),
                c(0.0, 0.0),
                c(0.0, 0.0)
            ]
        );
    }

    #[test]
    fn jet_of_single_factor() {
        // (z - a)/(1 - a z) = -a + (1 - a^2) z + (1 - a^2) a z^2 + ...
        let a = 0.5;
        let w = RationalInner::from_zeros(&[c(a, 0.0)], c(1.0, 0.0));
        let j = jet_of(&w, 6).unwrap();
        assert!((j.coefficients()[0] - c(-a, 0.0)).norm() < 1e-15);
        for k in 1..=6 {
            let expected = (1.0 - a * a) * a.powi(k as i32 - 1);
            assert!((j.coefficients()[k] - c(expected, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn jet_of_needs_nonzero_s0() {
        let w = RationalInner {
            order: 1,
            numerator: vec![c(1.0, 0.0), c(0.0, 0.0)],
            denominator: vec![c(0.0, 0.0), c(1.0, 0.0)],
        };
        assert_eq!(jet_of(&w, 2), Err(Error::ZeroDenominatorAtOrigin));
    }

    #[test]
    fn orders_by_winding() {
        assert_eq!(blaschke_order(&RationalInner::monomial(5)).unwrap(), 5);
        let constant = RationalInner {
            order: 0,
            numerator: vec![C64::from_polar(1.0, 0.4)],
            denominator: vec![c(1.0, 0.0)],
        };
        assert_eq!(blaschke_order(&constant).unwrap(), 0);
        let zeros = [c(0.5, 0.1), c(-0.3, 0.6), c(0.0, -0.9), c(0.95, 0.0)];
        let w = RationalInner::from_zeros(&zeros, C64::from_polar(1.0, 1.0));
        assert_eq!(blaschke_order(&w).unwrap(), 4);
    }

    #[test]
    fn non_inner_flagged() {
        let w = RationalInner {
            order: 1,
            numerator: vec![c(0.0, 0.0), c(2.0, 0.0)],
            denominator: vec![c(1.0, 0.0)],
        };
        assert!(matches!(blaschke_order(&w), Err(Error::NotUnimodular(_))));
    }

    #[test]
    fn lower_order_extremal_from_padded_jet() {
        // jet of an order-2 product, prescribed to degree 4: B has a double
        // top singular value and the order-2 product must come back.
        let w0 = RationalInner::from_zeros(&[c(0.3, 0.2), c(-0.5, 0.1)], c(1.0, 0.0));
        let b = jet_of(&w0, 4).unwrap();
        let w = cf_extremal(&b).unwrap();
        assert_eq!(w.order, 2);
        assert!(w.boundary_distance(&w0, 512) < 1e-8);
    }
}
