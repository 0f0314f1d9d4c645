//! Alternating step functions on the circle and their conversions to
//! Fourier coefficients, Toeplitz compressions and Blaschke products.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::cf::{blaschke_order, RationalInner};
use crate::error::{Error, Result};
use crate::minimax::{solve_min_with, SolverConfig};
use crate::toeplitz::{HermitianToeplitzSpec, C64};

/// Jumps closer than this are considered coincident.
pub const JUMP_SEPARATION_TOL: f64 = 1e-12;

/// Sign of the step function on its first arc.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "i8", into = "i8")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    fn of(x: f64) -> Self {
        if x < 0.0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;

    fn try_from(v: i8) -> std::result::Result<Self, String> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(format!("first_sign must be 1 or -1, got {other}")),
        }
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        match s {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// File form of a step function, angles in radians.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StepFunctionFile {
    pub height: f64,
    pub jumps_radians: Vec<f64>,
    pub first_sign: Sign,
}

/// Takes the values `+height` and `-height` alternately on the arcs between
/// consecutive jumps. `first_sign` is the sign on `(jumps[0], jumps[1])`;
/// with no jumps the function is the constant `first_sign * height`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "StepFunctionFile", into = "StepFunctionFile")]
pub struct AlternatingStepFunction {
    height: f64,
    jumps: Vec<f64>,
    first_sign: Sign,
}

impl TryFrom<StepFunctionFile> for AlternatingStepFunction {
    type Error = Error;

    fn try_from(f: StepFunctionFile) -> Result<Self> {
        Self::new(f.height, f.jumps_radians, f.first_sign)
    }
}

impl From<AlternatingStepFunction> for StepFunctionFile {
    fn from(s: AlternatingStepFunction) -> Self {
        Self {
            height: s.height,
            jumps_radians: s.jumps,
            first_sign: s.first_sign,
        }
    }
}

/// Arc set file: `{"arcs": [[start, end], ...]}` in radians.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArcSet {
    pub arcs: Vec<[f64; 2]>,
}

impl AlternatingStepFunction {
    pub fn new(height: f64, jumps: Vec<f64>, first_sign: Sign) -> Result<Self> {
        if !(height > 0.0 && height.is_finite()) {
            return Err(Error::InvalidStepFunction(format!(
                "height must be positive, got {height}"
            )));
        }
        if !jumps.len().is_multiple_of(2) {
            return Err(Error::InvalidStepFunction(format!(
                "odd number of jumps ({})",
                jumps.len()
            )));
        }
        if let Some(bad) = jumps.iter().find(|t| !(0.0..TAU).contains(*t)) {
            return Err(Error::InvalidStepFunction(format!(
                "jump {bad} outside [0, 2pi)"
            )));
        }
        if jumps.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidStepFunction(
                "jumps must be strictly increasing".into(),
            ));
        }
        Ok(Self {
            height,
            jumps,
            first_sign,
        })
    }

    /// Constant function `value`, order 0.
    pub fn constant(value: f64) -> Result<Self> {
        Self::new(value.abs(), Vec::new(), Sign::of(value))
    }

    /// Builds from arbitrary angles (reduced mod 2pi and sorted) and the
    /// value at a reference angle that is not a jump.
    pub fn from_angles(
        height: f64,
        angles: &[f64],
        reference: f64,
        value_at_reference: Sign,
    ) -> Result<Self> {
        let mut jumps: Vec<f64> = angles.iter().map(|&t| reduce_angle(t)).collect();
        jumps.sort_by(f64::total_cmp);
        let tmp = Self::new(height, jumps, Sign::Plus)?;
        let at_ref = tmp.eval(reference)?;
        let first_sign = if Sign::of(at_ref) == value_at_reference {
            Sign::Plus
        } else {
            Sign::Minus
        };
        Ok(Self { first_sign, ..tmp })
    }

    pub fn height(&self) -> f64 {
        self.height
    }

    pub fn jumps(&self) -> &[f64] {
        &self.jumps
    }

    pub fn first_sign(&self) -> Sign {
        self.first_sign
    }

    pub fn order(&self) -> usize {
        self.jumps.len() / 2
    }

    pub fn is_constant(&self) -> bool {
        self.jumps.is_empty()
    }

    /// `(start, end, value)` for each arc; the last arc ends at `jumps[0] + 2pi`.
    /// A constant has the single arc `(0, 2pi)`.
    pub fn arcs(&self) -> Vec<(f64, f64, f64)> {
        let n = self.jumps.len();
        if n == 0 {
            return vec![(0.0, TAU, self.first_sign.value() * self.height)];
        }
        (0..n)
            .map(|k| {
                let start = self.jumps[k];
                let end = if k + 1 < n {
                    self.jumps[k + 1]
                } else {
                    self.jumps[0] + TAU
                };
                let sign = if k % 2 == 0 {
                    self.first_sign
                } else {
                    self.first_sign.flip()
                };
                (start, end, sign.value() * self.height)
            })
            .collect()
    }

    pub fn eval(&self, theta: f64) -> Result<f64> {
        if self.jumps.is_empty() {
            return Ok(self.first_sign.value() * self.height);
        }
        let t = reduce_angle(theta);
        for &j in &self.jumps {
            let d = (t - j).abs();
            if d < 1e-14 || (TAU - d) < 1e-14 {
                return Err(Error::AtJump(theta));
            }
        }
        for (start, end, value) in self.arcs() {
            if (start < t && t < end) || (start < t + TAU && t + TAU < end) {
                return Ok(value);
            }
        }
        unreachable!("arcs partition the circle")
    }

    /// `psi^(m) = (1/2pi) ∫ psi(e^{it}) e^{-imt} dt`, in closed form.
    pub fn fourier(&self, m: i64) -> C64 {
        if m < 0 {
            return self.fourier(-m).conj();
        }
        if self.jumps.is_empty() {
            return if m == 0 {
                C64::new(self.first_sign.value() * self.height, 0.0)
            } else {
                C64::new(0.0, 0.0)
            };
        }
        let arcs = self.arcs();
        if m == 0 {
            let s: f64 = arcs.iter().map(|(a, b, v)| v * (b - a)).sum();
            return C64::new(s / TAU, 0.0);
        }
        let mf = m as f64;
        let mut acc = C64::new(0.0, 0.0);
        for (a, b, v) in arcs {
            acc += (C64::from_polar(1.0, -mf * a) - C64::from_polar(1.0, -mf * b)) * v;
        }
        acc / C64::new(0.0, TAU * mf)
    }

    /// The compression to polynomials of degree `<= n`: `a_m = psi^(m)`.
    pub fn toeplitz_of(&self, n: usize) -> HermitianToeplitzSpec {
        let coeffs = (0..=n as i64).map(|m| self.fourier(m)).collect();
        HermitianToeplitzSpec::new(coeffs).expect("mean of a real function is real")
    }

    /// Jumps opening a `+` arc and jumps opening a `-` arc, as the increasing
    /// sequences `alpha_1 < beta_1 < ... < beta_N < alpha_1 + 2pi`.
    pub fn arc_labels(&self) -> (Vec<f64>, Vec<f64>) {
        let n = self.order();
        match self.first_sign {
            Sign::Plus => (
                (0..n).map(|k| self.jumps[2 * k]).collect(),
                (0..n).map(|k| self.jumps[2 * k + 1]).collect(),
            ),
            Sign::Minus => (
                (0..n).map(|k| self.jumps[2 * k + 1]).collect(),
                (0..n)
                    .map(|k| {
                        if k + 1 < n {
                            self.jumps[2 * k + 2]
                        } else {
                            self.jumps[0] + TAU
                        }
                    })
                    .collect(),
            ),
        }
    }

    /// The polynomials `p` and `q` with zeros at `e^{i alpha_n}` and
    /// `e^{i beta_n}`, scaled by `e^{-i alpha/2}` and `e^{-i beta/2}`.
    pub fn arc_polynomials(&self) -> (Vec<C64>, Vec<C64>) {
        let (alphas, betas) = self.arc_labels();
        let build = |roots: &[f64]| {
            let total: f64 = roots.iter().sum();
            let mut p = vec![C64::from_polar(1.0, -total / 2.0)];
            for &r in roots {
                let root = C64::from_polar(1.0, r);
                let mut next = vec![C64::new(0.0, 0.0); p.len() + 1];
                for (i, &c) in p.iter().enumerate() {
                    next[i] -= c * root;
                    next[i + 1] += c;
                }
                p = next;
            }
            p
        };
        (build(&alphas), build(&betas))
    }

    /// Leading coefficient of `q - i p`.
    pub fn leading_coefficient(&self) -> C64 {
        let (alphas, betas) = self.arc_labels();
        let a: f64 = alphas.iter().sum();
        let b: f64 = betas.iter().sum();
        C64::from_polar(1.0, -b / 2.0) - C64::new(0.0, 1.0) * C64::from_polar(1.0, -a / 2.0)
    }

    /// `-i e^{i(beta - alpha)/2}`, the value of `(1 + w(0))/(1 - w(0))` for the
    /// normalized product.
    pub fn normalization_value(&self) -> C64 {
        let (alphas, betas) = self.arc_labels();
        let a: f64 = alphas.iter().sum();
        let b: f64 = betas.iter().sum();
        C64::new(0.0, -1.0) * C64::from_polar(1.0, (b - a) / 2.0)
    }

    /// The Blaschke product `w = (q - ip)/(q + ip)` of order N with
    /// `psi = (2c/pi) Arg((1 + w)/(1 - w))` on the circle and
    /// `|(1 + w(0))/(1 - w(0))| = 1`.
    pub fn blaschke_from_arcs(&self) -> Result<RationalInner> {
        let n = self.order();
        if n == 0 {
            return Err(Error::ConstantSymbol(
                "a constant step function has no Blaschke product".into(),
            ));
        }
        let gaps = self
            .jumps
            .windows(2)
            .map(|w| w[1] - w[0])
            .chain(std::iter::once(self.jumps[0] + TAU - self.jumps[2 * n - 1]));
        if gaps.into_iter().any(|g| g < JUMP_SEPARATION_TOL) {
            return Err(Error::DegenerateArcs);
        }
        if self.leading_coefficient().norm() < JUMP_SEPARATION_TOL {
            return Err(Error::DegenerateArcs);
        }
        let (p, q) = self.arc_polynomials();
        let i = C64::new(0.0, 1.0);
        let mut r: Vec<C64> = q.iter().zip(&p).map(|(&q, &p)| q - i * p).collect();
        let mut s: Vec<C64> = q.iter().zip(&p).map(|(&q, &p)| q + i * p).collect();
        let s0 = s[0];
        if s0.norm() == 0.0 {
            return Err(Error::DegenerateArcs);
        }
        let phase = s0.conj() / s0.norm();
        r.iter_mut().for_each(|x| *x *= phase);
        s.iter_mut().for_each(|x| *x *= phase);
        Ok(RationalInner {
            order: n,
            numerator: r,
            denominator: s,
        })
    }

    /// Recovers the step function `(2c/pi) Arg((1 + w)/(1 - w))` from an inner
    /// function of order `n >= 1`, using the default phase grid.
    pub fn step_from_blaschke(w: &RationalInner, c: f64) -> Result<Self> {
        Self::step_from_blaschke_with_grid(w, c, None)
    }

    /// As [`Self::step_from_blaschke`]; `grid` overrides the phase grid size
    /// `max(2048, 512 n)`.
    pub fn step_from_blaschke_with_grid(
        w: &RationalInner,
        c: f64,
        grid: Option<usize>,
    ) -> Result<Self> {
        let n = blaschke_order(w)?;
        if n == 0 {
            return Err(Error::ConstantSymbol(
                "order-0 inner function gives a constant".into(),
            ));
        }
        let samples = grid.unwrap_or((512 * n).max(2048));
        let mut thetas = Vec::with_capacity(samples + 1);
        let mut levels = Vec::with_capacity(samples + 1);
        let mut prev = w.eval_angle(0.0);
        let mut phase = prev.arg();
        thetas.push(0.0);
        levels.push(phase / PI);
        for k in 1..=samples {
            let theta = TAU * k as f64 / samples as f64;
            let cur = w.eval_angle(theta);
            phase += (cur / prev).arg();
            thetas.push(theta);
            levels.push(phase / PI);
            prev = cur;
        }
        let t0 = levels[0];
        // A crossing at theta = 0 must not be missed (or seen again at 2pi)
        // because of roundoff in the phase at 0.
        let first_level = (t0 - 1e-9).ceil();
        // (angle, level) pairs; level parity gives the sign on the arc that follows
        let mut crossings: Vec<(f64, i64)> = Vec::with_capacity(2 * n);
        let mut cell = 0;
        for j in 0..2 * n {
            let target = first_level + j as f64;
            while cell + 1 < levels.len() && levels[cell + 1] < target {
                cell += 1;
            }
            if cell + 1 >= levels.len() {
                return Err(Error::WindingResidual(levels[samples] - t0));
            }
            let theta = if levels[cell] >= target {
                thetas[cell]
            } else {
                bisect_level(w, thetas[cell], thetas[cell + 1], levels[cell], target)
            };
            crossings.push((reduce_angle(theta), target as i64));
        }
        crossings.sort_by(|a, b| a.0.total_cmp(&b.0));
        let jumps: Vec<f64> = crossings.iter().map(|&(t, _)| t).collect();
        if jumps.windows(2).any(|p| p[1] - p[0] < JUMP_SEPARATION_TOL) {
            return Err(Error::DegenerateArcs);
        }
        // On level interval (L, L+1) the phase lies in (L pi, (L+1) pi):
        // Im w > 0 exactly when L is even.
        let first_sign = if crossings[0].1.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        };
        Self::new(c, jumps, first_sign)
    }

    /// `g(e^{it}) = psi(e^{ikt})`: each jump is copied to the `k` preimages.
    pub fn dilated(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidStepFunction(
                "dilation factor must be positive".into(),
            ));
        }
        let jumps = (0..k)
            .flat_map(|j| {
                self.jumps
                    .iter()
                    .map(move |&t| (t + TAU * j as f64) / k as f64)
            })
            .collect();
        Self::new(self.height, jumps, self.first_sign)
    }

    /// `-psi`.
    pub fn negated(&self) -> Self {
        Self {
            first_sign: self.first_sign.flip(),
            ..self.clone()
        }
    }

    /// Maximum circular distance between matching jumps, or infinity when the
    /// jump counts differ.
    pub fn jump_distance(&self, other: &Self) -> f64 {
        if self.jumps.len() != other.jumps.len() {
            return f64::INFINITY;
        }
        // A jump near 0 may sort to the other end, so match up to rotation.
        let n = self.jumps.len();
        (0..n.max(1))
            .map(|r| {
                (0..n)
                    .map(|i| circular_distance(self.jumps[i], other.jumps[(i + r) % n]))
                    .fold(0.0, f64::max)
            })
            .fold(f64::INFINITY, f64::min)
    }
}

/// Finds `theta` in `[lo, hi]` where the unwrapped level of `w` reaches `target`.
fn bisect_level(w: &RationalInner, lo: f64, hi: f64, level_lo: f64, target: f64) -> f64 {
    let base = w.eval_angle(lo);
    let level = |t: f64| level_lo + (w.eval_angle(t) / base).arg() / PI;
    let (mut a, mut b) = (lo, hi);
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        if level(mid) < target {
            a = mid;
        } else {
            b = mid;
        }
    }
    0.5 * (a + b)
}

pub fn reduce_angle(theta: f64) -> f64 {
    let t = theta.rem_euclid(TAU);
    if t >= TAU {
        0.0
    } else {
        t
    }
}

pub fn circular_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    d.min(TAU - d)
}

/// Recovers the step function of order `<= N` from `psi^(0..=N)` and returns
/// `psi^(m)`.
pub fn extend_coefficients(a: &[C64], m: i64) -> Result<C64> {
    extend_coefficients_with(a, m, &SolverConfig::default())
}

pub fn extend_coefficients_with(a: &[C64], m: i64, cfg: &SolverConfig) -> Result<C64> {
    let spec = HermitianToeplitzSpec::new(a.to_vec())?;
    let res = solve_min_with(&spec, cfg)?;
    Ok(res.step.fourier(m))
}

/// Reconstructs a union of at most `n` disjoint closed arcs from the indicator
/// moments `chi^(0..=n)`. Arcs are returned as `[start, end]` with
/// `start` in `[0, 2pi)` and `end > start` (possibly past `2pi`).
pub fn recover_set(moments: &[C64], n: usize) -> Result<ArcSet> {
    recover_set_with(moments, n, &SolverConfig::default())
}

pub fn recover_set_with(moments: &[C64], n: usize, cfg: &SolverConfig) -> Result<ArcSet> {
    if moments.len() != n + 1 {
        return Err(Error::InvalidStepFunction(format!(
            "expected {} moments, got {}",
            n + 1,
            moments.len()
        )));
    }
    let coeffs: Vec<C64> = moments
        .iter()
        .enumerate()
        .map(|(k, &m)| if k == 0 { m * 2.0 - 1.0 } else { m * 2.0 })
        .collect();
    let spec = HermitianToeplitzSpec::new(coeffs)?;
    if spec.is_diagonal(cfg.diagonal_threshold) {
        return Err(Error::ConstantSymbol(
            "moments describe the empty set or the full circle".into(),
        ));
    }
    let res = solve_min_with(&spec, cfg)?;
    let height_err = (res.step.height() - 1.0).abs();
    if height_err > cfg.residual_threshold {
        return Err(Error::FourierResidual {
            residual: height_err,
            threshold: cfg.residual_threshold,
        });
    }
    let mut arcs: Vec<[f64; 2]> = res
        .step
        .arcs()
        .into_iter()
        .filter(|(_, _, v)| *v > 0.0)
        .map(|(a, b, _)| [a, b])
        .collect();
    let gaps_ok = res
        .step
        .arcs()
        .iter()
        .filter(|(_, _, v)| *v < 0.0)
        .all(|(a, b, _)| b - a > 1e-9);
    if !gaps_ok {
        return Err(Error::OverlappingArcs(
            "recovered arcs touch at an endpoint".into(),
        ));
    }
    arcs.sort_by(|x, y| x[0].total_cmp(&y[0]));
    Ok(ArcSet { arcs })
}

/// `chi_E^(m)` for a union of arcs `[start, end]` (radians, `end > start`).
pub fn indicator_moment(arcs: &[[f64; 2]], m: i64) -> C64 {
    if m == 0 {
        return C64::new(arcs.iter().map(|[a, b]| b - a).sum::<f64>() / TAU, 0.0);
    }
    let mf = m as f64;
    arcs.iter()
        .map(|&[a, b]| C64::from_polar(1.0, -mf * a) - C64::from_polar(1.0, -mf * b))
        .sum::<C64>()
        / C64::new(0.0, TAU * mf)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn half_circle() -> AlternatingStepFunction {
        AlternatingStepFunction::new(1.0, vec![0.0, PI], Sign::Plus).unwrap()
    }

    fn equal_arcs(n: usize) -> AlternatingStepFunction {
        let jumps = (0..2 * n).map(|k| k as f64 * PI / n as f64).collect();
        AlternatingStepFunction::new(1.0, jumps, Sign::Plus).unwrap()
    }

    #[test]
    fn eval_half_circle() {
        let psi = half_circle();
        assert_eq!(psi.eval(PI / 2.0).unwrap(), 1.0);
        assert_eq!(psi.eval(-PI / 2.0).unwrap(), -1.0);
        assert!(matches!(psi.eval(PI), Err(Error::AtJump(_))));
        assert!(matches!(psi.eval(TAU), Err(Error::AtJump(_))));
    }

    #[test]
    fn eval_constant() {
        let psi = AlternatingStepFunction::constant(-2.5).unwrap();
        assert_eq!(psi.eval(1.0).unwrap(), -2.5);
        assert_eq!(psi.order(), 0);
    }

    #[test]
    fn validation() {
        assert!(AlternatingStepFunction::new(1.0, vec![0.5], Sign::Plus).is_err());
        assert!(AlternatingStepFunction::new(1.0, vec![0.5, 0.2], Sign::Plus).is_err());
        assert!(AlternatingStepFunction::new(0.0, vec![], Sign::Plus).is_err());
        assert!(AlternatingStepFunction::new(1.0, vec![0.0, 7.0], Sign::Plus).is_err());
    }

    #[test]
    fn fourier_of_arc_step() {
        let alpha = 2.2;
        let psi = AlternatingStepFunction::new(1.0, vec![0.0, alpha], Sign::Plus).unwrap();
        assert!((psi.fourier(0) - c((alpha - PI) / PI, 0.0)).norm() < 1e-15);
        let expected = C64::from_polar(2.0 * (alpha / 2.0).sin() / PI, -alpha / 2.0);
        assert!((psi.fourier(1) - expected).norm() < 1e-15);
        assert_eq!(psi.fourier(-1), psi.fourier(1).conj());
    }

    #[test]
    fn fourier_constant() {
        let psi = AlternatingStepFunction::constant(0.75).unwrap();
        assert_eq!(psi.fourier(0), c(0.75, 0.0));
        assert_eq!(psi.fourier(3), c(0.0, 0.0));
        assert!(psi.toeplitz_of(3).is_diagonal(1e-300));
    }

    #[test]
    fn equal_arcs_corner_coefficient() {
        for n in 1..=7 {
            let spec = equal_arcs(n).toeplitz_of(n);
            for (m, a) in spec.coefficients().iter().enumerate() {
                let expected = if m == n {
                    c(0.0, -2.0 / PI)
                } else {
                    c(0.0, 0.0)
                };
                assert!((a - expected).norm() < 1e-14, "n={n} m={m} a={a}");
            }
        }
    }

    #[test]
    fn half_circle_blaschke_is_z() {
        let w = half_circle().blaschke_from_arcs().unwrap();
        assert_eq!(w.order, 1);
        assert!(w.boundary_distance(&RationalInner::monomial(1), 1024) < 1e-14);
    }

    #[test]
    fn equal_arcs_blaschke_is_monomial() {
        for n in 1..=7 {
            let w = equal_arcs(n).blaschke_from_arcs().unwrap();
            assert!(
                w.boundary_distance(&RationalInner::monomial(n), 1024) < 1e-12,
                "n={n}"
            );
        }
    }

    #[test]
    fn step_from_z() {
        let psi =
            AlternatingStepFunction::step_from_blaschke(&RationalInner::monomial(1), 1.0).unwrap();
        assert_eq!(psi.jumps().len(), 2);
        assert!(psi.jump_distance(&half_circle()) < 1e-14);
        assert_eq!(psi.first_sign(), Sign::Plus);
    }

    #[test]
    fn step_from_monomials() {
        for n in 1..=7 {
            let psi = AlternatingStepFunction::step_from_blaschke(&RationalInner::monomial(n), 2.0)
                .unwrap();
            assert_eq!(psi.order(), n);
            assert_eq!(psi.height(), 2.0);
            for (a, b, _) in psi.arcs() {
                assert!((b - a - PI / n as f64).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn constant_rejected_for_blaschke() {
        let psi = AlternatingStepFunction::constant(1.0).unwrap();
        assert!(matches!(
            psi.blaschke_from_arcs(),
            Err(Error::ConstantSymbol(_))
        ));
    }

    #[test]
    fn json_round_trip_and_validation() {
        let psi = half_circle();
        let s = serde_json::to_string(&psi).unwrap();
        assert!(s.contains("\"jumps_radians\""));
        let back: AlternatingStepFunction = serde_json::from_str(&s).unwrap();
        assert_eq!(back, psi);
        let bad = r#"{"height": 1.0, "jumps_radians": [0.1, 0.2, 0.3], "first_sign": 1}"#;
        assert!(serde_json::from_str::<AlternatingStepFunction>(bad).is_err());
        let bad_sign = r#"{"height": 1.0, "jumps_radians": [0.1, 0.2], "first_sign": 0}"#;
        assert!(serde_json::from_str::<AlternatingStepFunction>(bad_sign).is_err());
    }

    #[test]
    fn indicator_of_upper_half() {
        let arcs = [[0.0, PI]];
        assert!((indicator_moment(&arcs, 0) - c(0.5, 0.0)).norm() < 1e-16);
        // 1/(pi i)
        assert!((indicator_moment(&arcs, 1) - c(0.0, -1.0 / PI)).norm() < 1e-16);
    }
}
