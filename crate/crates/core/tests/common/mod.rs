#![allow(dead_code)]

use std::f64::consts::TAU;

use rand::Rng;
use toeplitz_minimax::{AlternatingStepFunction, HermitianToeplitzSpec, Sign, C64};

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// `2k` sorted angles in `[0, 2pi)` with circular gaps at least `min_gap`.
pub fn separated_angles<R: Rng>(rng: &mut R, count: usize, min_gap: f64) -> Vec<f64> {
    loop {
        let mut t: Vec<f64> = (0..count).map(|_| rng.gen_range(0.0..TAU)).collect();
        t.sort_by(f64::total_cmp);
        let ok = t.windows(2).all(|w| w[1] - w[0] >= min_gap)
            && (t.is_empty() || t[0] + TAU - t[count - 1] >= min_gap);
        if ok {
            return t;
        }
    }
}

pub fn random_step<R: Rng>(rng: &mut R, order: usize, min_gap: f64) -> AlternatingStepFunction {
    let jumps = separated_angles(rng, 2 * order, min_gap);
    let sign = if rng.gen_bool(0.5) {
        Sign::Plus
    } else {
        Sign::Minus
    };
    AlternatingStepFunction::new(rng.gen_range(0.5..2.0), jumps, sign).unwrap()
}

pub fn random_spec<R: Rng>(rng: &mut R, n: usize) -> HermitianToeplitzSpec {
    let mut a: Vec<C64> = (0..=n)
        .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    a[0].im = 0.0;
    HermitianToeplitzSpec::new(a).unwrap()
}

/// Spec of the order-1 example: `+1` on an arc of length `alpha`.
pub fn arc_spec(alpha: f64) -> HermitianToeplitzSpec {
    let a0 = (alpha - std::f64::consts::PI) / std::f64::consts::PI;
    let a1 = C64::from_polar(
        2.0 * (alpha / 2.0).sin() / std::f64::consts::PI,
        -alpha / 2.0,
    );
    HermitianToeplitzSpec::new(vec![c(a0, 0.0), a1]).unwrap()
}

/// Spec with a single corner coefficient `a_n = 2/(pi i)`.
pub fn corner_spec(n: usize) -> HermitianToeplitzSpec {
    let mut a = vec![c(0.0, 0.0); n + 1];
    a[n] = c(0.0, -2.0 / std::f64::consts::PI);
    HermitianToeplitzSpec::new(a).unwrap()
}

/// Random spec of order drawn from `1..=max_order`.
pub fn random_spec_up_to<R: Rng>(rng: &mut R, max_order: usize) -> HermitianToeplitzSpec {
    let n = rng.gen_range(1..=max_order);
    random_spec(rng, n)
}
