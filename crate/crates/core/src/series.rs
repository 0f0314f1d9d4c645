//! Truncated power series and the coefficient correspondence between a
//! symbol's analytic half and the disk-valued composite `i tan(pi h / 2c)`.
//!
//! All arithmetic is exact modulo `z^(N+1)`; the degree never changes once a
//! jet is built.

use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::toeplitz::C64;

/// Taylor coefficients `c0..cN` of a germ at the origin.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CoefficientJet {
    coefficients: Vec<C64>,
}

impl CoefficientJet {
    pub fn new(coefficients: Vec<C64>) -> Self {
        assert!(
            !coefficients.is_empty(),
            "a jet has at least one coefficient"
        );
        Self { coefficients }
    }

    pub fn zero(degree: usize) -> Self {
        Self::new(vec![C64::new(0.0, 0.0); degree + 1])
    }

    pub fn constant(value: C64, degree: usize) -> Self {
        let mut j = Self::zero(degree);
        j.coefficients[0] = value;
        j
    }

    /// The identity germ `z`, truncated at `degree`.
    pub fn variable(degree: usize) -> Self {
        let mut j = Self::zero(degree);
        if degree >= 1 {
            j.coefficients[1] = C64::new(1.0, 0.0);
        }
        j
    }

    pub fn from_real(coefficients: &[f64]) -> Self {
        Self::new(coefficients.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[C64] {
        &self.coefficients
    }

    pub fn into_coefficients(self) -> Vec<C64> {
        self.coefficients
    }

    pub fn constant_term(&self) -> C64 {
        self.coefficients[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(|c| c.norm() == 0.0)
    }

    pub fn scale(&self, factor: C64) -> Self {
        Self::new(self.coefficients.iter().map(|&c| c * factor).collect())
    }

    /// Same germ truncated (or zero-padded) to `degree`.
    pub fn truncate(&self, degree: usize) -> Self {
        let mut c = self.coefficients.clone();
        c.resize(degree + 1, C64::new(0.0, 0.0));
        Self::new(c)
    }

    /// `self` with its constant term removed.
    pub fn without_constant(&self) -> Self {
        let mut j = self.clone();
        j.coefficients[0] = C64::new(0.0, 0.0);
        j
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let n = self.degree();
        let mut out = vec![C64::new(0.0, 0.0); n + 1];
        for (i, &a) in self.coefficients.iter().enumerate() {
            if a == C64::new(0.0, 0.0) {
                continue;
            }
            for (j, &b) in other.coefficients[..=n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(Self::new(out))
    }

    pub fn try_div(&self, divisor: &Self) -> Result<Self> {
        self.check_degree(divisor)?;
        let d0 = divisor.coefficients[0];
        if d0.norm() == 0.0 {
            return Err(Error::ZeroDivisor);
        }
        let n = self.degree();
        let mut q = vec![C64::new(0.0, 0.0); n + 1];
        for k in 0..=n {
            let mut acc = self.coefficients[k];
            for j in 1..=k {
                acc -= divisor.coefficients[j] * q[k - j];
            }
            q[k] = acc / d0;
        }
        Ok(Self::new(q))
    }

    /// `self(inner(z))`; `inner` must vanish at the origin.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.check_degree(inner)?;
        require_zero_constant(inner)?;
        // Horner in the truncated ring.
        let n = self.degree();
        let mut acc = Self::constant(self.coefficients[n], n);
        for k in (0..n).rev() {
            acc = acc.try_mul(inner)?;
            acc.coefficients[0] += self.coefficients[k];
        }
        Ok(acc)
    }

    /// Formal derivative, kept at the same degree (top coefficient zero).
    pub fn derivative(&self) -> Self {
        let n = self.degree();
        let mut d = vec![C64::new(0.0, 0.0); n + 1];
        for k in 1..=n {
            d[k - 1] = self.coefficients[k] * k as f64;
        }
        Self::new(d)
    }

    /// Antiderivative with the given constant, dropping the top term.
    pub fn integral(&self, constant: C64) -> Self {
        let n = self.degree();
        let mut out = Vec::with_capacity(n + 1);
        out.push(constant);
        out.extend((1..=n).map(|k| self.coefficients[k - 1] / k as f64));
        Self::new(out)
    }

    /// Principal-branch logarithm: `Log(g0) + log(1 + (g - g0)/g0)`.
    pub fn log(&self) -> Result<Self> {
        let g0 = self.coefficients[0];
        if g0.norm() == 0.0 {
            return Err(Error::ZeroDivisor);
        }
        let rate = self.derivative().try_div(self)?;
        Ok(rate.integral(g0.ln()))
    }

    /// Evaluates the truncated polynomial at `z`.
    pub fn eval(&self, z: C64) -> C64 {
        self.coefficients
            .iter()
            .rev()
            .fold(C64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.coefficients
            .iter()
            .zip(&other.coefficients)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

impl Add for &CoefficientJet {
    type Output = CoefficientJet;

    fn add(self, rhs: &CoefficientJet) -> CoefficientJet {
        assert_eq!(self.degree(), rhs.degree(), "jet degrees must match");
        CoefficientJet::new(
            self.coefficients
                .iter()
                .zip(&rhs.coefficients)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &CoefficientJet {
    type Output = CoefficientJet;

    fn sub(self, rhs: &CoefficientJet) -> CoefficientJet {
        self + &(-rhs)
    }
}

impl Neg for &CoefficientJet {
    type Output = CoefficientJet;

    fn neg(self) -> CoefficientJet {
        self.scale(C64::new(-1.0, 0.0))
    }
}

impl Mul for &CoefficientJet {
    type Output = CoefficientJet;

    fn mul(self, rhs: &CoefficientJet) -> CoefficientJet {
        self.try_mul(rhs).expect("jet degrees must match")
    }
}

fn require_zero_constant(u: &CoefficientJet) -> Result<()> {
    let u0 = u.constant_term().norm();
    if u0 != 0.0 {
        return Err(Error::NonzeroConstantTerm(u0));
    }
    Ok(())
}

/// `tan(u(z))` for a jet with zero constant term, from `t' = (1 + t^2) u'`.
pub fn tan_jet(u: &CoefficientJet) -> Result<CoefficientJet> {
    require_zero_constant(u)?;
    let n = u.degree();
    let uc = u.coefficients();
    let mut t = vec![C64::new(0.0, 0.0); n + 1];
    // w = 1 + t^2, filled one coefficient behind t
    let mut w = vec![C64::new(0.0, 0.0); n + 1];
    w[0] = C64::new(1.0, 0.0);
    for k in 1..=n {
        let mut acc = C64::new(0.0, 0.0);
        for j in 1..=k {
            acc += uc[j] * w[k - j] * j as f64;
        }
        t[k] = acc / k as f64;
        // t^2 coefficient k uses t[1..k-1] and t[k] (t[0] = 0)
        let mut sq = C64::new(0.0, 0.0);
        for j in 1..k {
            sq += t[j] * t[k - j];
        }
        w[k] = sq;
    }
    Ok(CoefficientJet::new(t))
}

fn check_a0(a: &[C64]) -> Result<f64> {
    let a0 = a.first().ok_or(Error::EmptyCoefficients)?;
    if a0.im.abs() > 1e-12 * a0.re.abs().max(1.0) {
        return Err(Error::NonRealDiagonal(a0.im));
    }
    Ok(a0.re)
}

/// Coefficients `b0..bN` of `i tan(pi h / 2c)` where
/// `h = a0/2 + a1 z + ... + aN z^N`.
///
/// Requires `c > |a0|`. The nonzero constant is handled through
/// `tan(x0 + u) = (tan x0 + tan u) / (1 - tan x0 tan u)`.
pub fn forward_map(a: &[C64], c: f64) -> Result<CoefficientJet> {
    let a0 = check_a0(a)?;
    if !(c > a0.abs()) {
        return Err(Error::StripDomain {
            c,
            a0_abs: a0.abs(),
        });
    }
    let n = a.len() - 1;
    let x0 = PI * a0 / (4.0 * c);
    let tau = C64::new(x0.tan(), 0.0);
    let mut u = a.to_vec();
    u[0] = C64::new(0.0, 0.0);
    let u = CoefficientJet::new(u).scale(C64::new(PI / (2.0 * c), 0.0));
    let tu = tan_jet(&u)?;
    let one = CoefficientJet::constant(C64::new(1.0, 0.0), n);
    let num = &CoefficientJet::constant(tau, n) + &tu;
    let den = &one - &tu.scale(tau);
    Ok(num.try_div(&den)?.scale(C64::new(0.0, 1.0)))
}

/// Inverse of [`forward_map`]: `a0 = 2 h0`, `an = hn` with
/// `h = (c / pi i) Log((1 + b)/(1 - b))`. Requires `|b0| < 1`.
pub fn inverse_map(b: &CoefficientJet, c: f64) -> Result<Vec<C64>> {
    let b0 = b.constant_term().norm();
    if !(b0 < 1.0) {
        return Err(Error::OutsideDisk(b0));
    }
    let n = b.degree();
    let one = CoefficientJet::constant(C64::new(1.0, 0.0), n);
    let ratio = (&one + b).try_div(&(&one - b))?;
    let h = ratio.log()?.scale(C64::new(0.0, -c / PI));
    let mut a = h.into_coefficients();
    a[0] *= 2.0;
    Ok(a)
}
