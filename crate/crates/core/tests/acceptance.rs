//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

mod common;

use std::f64::consts::PI;
use std::process::ExitCode;

use common::{arc_spec, c, corner_spec, random_spec, random_step, separated_angles};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toeplitz_minimax::cf::blaschke_order;
use toeplitz_minimax::ratio::{
    bound_table, dilation_norms, norm_identity_check, poly_bound_n3, solve_relations,
};
use toeplitz_minimax::stepfn::{circular_distance, indicator_moment, recover_set};
use toeplitz_minimax::{forward_map, inverse_map, operator_norm, solve_min, RationalInner, C64};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn c1_exactness() -> Outcome {
    let spec = arc_spec(PI);
    let res = solve_min(&spec).map_err(|e| e.to_string())?;
    let ratio = res.c_min / operator_norm(&spec.to_matrix()).map_err(|e| e.to_string())?;
    let (e1, e2) = ((res.c_min - 1.0).abs(), (ratio - PI / 2.0).abs());
    check(
        e1 <= 1e-9 && e2 <= 1e-9,
        format!("|c_min - 1| = {e1:.1e}, |ratio - pi/2| = {e2:.1e}"),
    )
}

fn arc_sweep() -> Outcome {
    let (mut norm_err, mut max_ratio) = (0.0f64, 0.0f64);
    for k in 1..=50 {
        let alpha = PI * k as f64 / 50.0;
        let spec = arc_spec(alpha);
        let norm = operator_norm(&spec.to_matrix()).map_err(|e| e.to_string())?;
        let want = ((alpha - PI).abs() + 2.0 * (alpha / 2.0).sin().abs()) / PI;
        norm_err = norm_err.max((norm - want).abs());
        let res = solve_min(&spec).map_err(|e| format!("alpha = {alpha}: {e}"))?;
        max_ratio = max_ratio.max(res.c_min / norm);
    }
    check(
        norm_err <= 1e-10 && max_ratio <= PI / 2.0 + 1e-9,
        format!("max norm error {norm_err:.1e}, max ratio {max_ratio:.12}"),
    )
}

fn monomial_family() -> Outcome {
    let (mut ce, mut we, mut le) = (0.0f64, 0.0f64, 0.0f64);
    for n in 1..=7 {
        let res = solve_min(&corner_spec(n)).map_err(|e| format!("N = {n}: {e}"))?;
        ce = ce.max((res.c_min - 1.0).abs());
        let omega = res.omega.as_ref().ok_or("missing omega")?;
        we = we.max(omega.boundary_distance(&RationalInner::monomial(n), 1024));
        if res.step.order() != n {
            return Err(format!("N = {n}: order {}", res.step.order()));
        }
        for (a, b, _) in res.step.arcs() {
            le = le.max((b - a - PI / n as f64).abs());
        }
    }
    check(
        ce <= 1e-7 && we <= 1e-7 && le <= 1e-7,
        format!("c_min error {ce:.1e}, omega error {we:.1e}, arc length error {le:.1e}"),
    )
}

fn table_reproduction() -> Outcome {
    let table = bound_table(1..=7, false).map_err(|e| e.to_string())?;
    let mut parts = Vec::new();
    let mut ok = true;
    for r in table.iter().skip(1) {
        let inside = r.pass == Some(true);
        ok &= inside;
        parts.push(format!(
            "N={} {:.8}{}",
            r.n,
            r.ratio,
            if inside { "" } else { " (out)" }
        ));
    }
    let poly = poly_bound_n3();
    let agree = (poly.bound - table[2].ratio).abs();
    ok &= agree <= 1e-9;
    parts.push(format!("N=3 polynomial agreement {agree:.1e}"));
    check(ok, parts.join(", "))
}

fn relation_roots() -> Outcome {
    let s2 = solve_relations(2).map_err(|e| e.to_string())?;
    let s5 = solve_relations(5).map_err(|e| e.to_string())?;
    let printed = [(0.2138, 1.0263), (0.4304, 0.2326)];
    let mut ok = true;
    let mut parts = Vec::new();
    for (s, (l, m)) in [&s2, &s5].iter().zip(printed) {
        let (dl, dm) = ((s.params[0] - l).abs(), (s.params[1] - m).abs());
        let res = s.max_residual();
        ok &= dl <= 5e-4 && dm <= 5e-4 && res < 1e-12;
        parts.push(format!(
            "N={}: L = {:.6} (off {dl:.1e}), M = {:.6} (off {dm:.1e}), residual {res:.1e}",
            s.n, s.params[0], s.params[1]
        ));
    }
    check(ok, parts.join("; "))
}

fn norm_identities() -> Outcome {
    let mut worst = 0.0f64;
    for n in [2, 3, 5] {
        let sol = solve_relations(n).map_err(|e| e.to_string())?;
        let rep = norm_identity_check(n, &sol.params).map_err(|e| e.to_string())?;
        worst = worst.max(rep.deviation);
    }
    check(worst <= 1e-9, format!("max deviation {worst:.1e}"))
}

fn dilation_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(71);
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let n = rng.gen_range(1..=4);
        let spec = random_spec(&mut rng, n);
        for k in [2, 3] {
            let (f, g) = dilation_norms(&spec.two_sided(), k).map_err(|e| e.to_string())?;
            worst = worst.max((f - g).abs());
        }
    }
    check(
        worst <= 1e-10,
        format!("max deviation {worst:.1e} over 100 pairs"),
    )
}

fn round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut je, mut he) = (0.0f64, 0.0f64);
    for i in 0..100 {
        let order = rng.gen_range(1..=4);
        let psi = random_step(&mut rng, order, 0.1);
        let res = solve_min(&psi.toeplitz_of(4)).map_err(|e| format!("case {i}: {e}"))?;
        let mut d = psi.jump_distance(&res.step);
        // Same jumps with opposite signs would be a different function.
        let mid = 0.5 * (psi.jumps()[0] + psi.jumps()[1]);
        let sign = |v: toeplitz_minimax::Result<f64>| v.map(f64::signum).ok();
        if sign(res.step.eval(mid)) != sign(psi.eval(mid)) {
            d = f64::INFINITY;
        }
        je = je.max(d);
        he = he.max((res.step.height() - psi.height()).abs());
    }
    check(
        je <= 1e-6 && he <= 1e-8,
        format!("max jump error {je:.1e} rad, max height error {he:.1e}"),
    )
}

fn arc_invariants() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(51);
    let (mut lead, mut unimod, mut norm1, mut normv) = (f64::INFINITY, 0.0f64, 0.0f64, 0.0f64);
    for i in 0..100 {
        let order = rng.gen_range(1..=4);
        let psi = random_step(&mut rng, order, 0.05);
        lead = lead.min(psi.leading_coefficient().norm());
        let w = psi
            .blaschke_from_arcs()
            .map_err(|e| format!("case {i}: {e}"))?;
        unimod = unimod.max(w.unimodularity_residual(1024));
        let k = blaschke_order(&w).map_err(|e| format!("case {i}: {e}"))?;
        if k != order {
            return Err(format!("case {i}: order {k}, expected {order}"));
        }
        let w0 = w.eval(c(0.0, 0.0));
        let v = (1.0 + w0) / (1.0 - w0);
        norm1 = norm1.max((v.norm() - 1.0).abs());
        normv = normv.max((v - psi.normalization_value()).norm());
    }
    check(
        lead > 0.0 && unimod <= 1e-9 && norm1 <= 1e-9 && normv <= 1e-9,
        format!(
            "min |lead| {lead:.2e}, unimodularity {unimod:.1e}, \
             |value| - 1 {norm1:.1e}, value error {normv:.1e}"
        ),
    )
}

/// b0..b3 from the composite `i tan(pi a0 / 4c + (pi/2c)(a1 z + a2 z^2 + a3 z^3))`.
fn closed_form_b(a: &[C64], cc: f64) -> [C64; 4] {
    let i = c(0.0, 1.0);
    let x = PI * a[0].re / (4.0 * cc);
    let k = PI / (2.0 * cc);
    let (t, s) = (x.tan(), 1.0 / x.cos().powi(2));
    [
        i * t,
        i * k * a[1] * s,
        i * (k * a[2] * s + k * k * a[1] * a[1] * s * t),
        i * (k * a[3] * s
            + 2.0 * k * k * a[1] * a[2] * s * t
            + k.powi(3) * a[1].powi(3) * (2.0 * s * t * t + s * s) / 3.0),
    ]
}

fn series_maps() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let (mut rt, mut cf) = (0.0f64, 0.0f64);
    for _ in 0..200 {
        let n = rng.gen_range(3..=6);
        let mut a: Vec<C64> = (0..=n)
            .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        a[0].im = 0.0;
        let cc = a[0].re.abs() + rng.gen_range(0.2..3.0);
        let b = forward_map(&a, cc).map_err(|e| e.to_string())?;
        let back = inverse_map(&b, cc).map_err(|e| e.to_string())?;
        rt = rt.max(
            a.iter()
                .zip(&back)
                .map(|(x, y)| (x - y).norm())
                .fold(0.0, f64::max),
        );
        for (got, want) in b.coefficients().iter().zip(closed_form_b(&a, cc)) {
            cf = cf.max((got - want).norm());
        }
    }
    check(
        rt <= 1e-10 && cf <= 1e-12,
        format!("round trip error {rt:.1e}, closed form error {cf:.1e}"),
    )
}

fn moment_recovery() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    let mut worst = 0.0f64;
    for i in 0..50 {
        let count = rng.gen_range(1..=3);
        let t = separated_angles(&mut rng, 2 * count, 0.1);
        let arcs: Vec<[f64; 2]> = t.chunks(2).map(|p| [p[0], p[1]]).collect();
        let moments: Vec<C64> = (0..=3).map(|m| indicator_moment(&arcs, m)).collect();
        let got = recover_set(&moments, 3).map_err(|e| format!("case {i}: {e}"))?;
        if got.arcs.len() != arcs.len() {
            return Err(format!(
                "case {i}: {} arcs, expected {}",
                got.arcs.len(),
                arcs.len()
            ));
        }
        for want in &arcs {
            let d = got
                .arcs
                .iter()
                .map(|g| circular_distance(g[0], want[0]).max(circular_distance(g[1], want[1])))
                .fold(f64::INFINITY, f64::min);
            worst = worst.max(d);
        }
    }
    check(worst <= 1e-6, format!("max endpoint error {worst:.1e} rad"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("order-1 exactness", c1_exactness),
        ("order-1 sweep", arc_sweep),
        ("z^N family", monomial_family),
        ("bound table", table_reproduction),
        ("relation roots", relation_roots),
        ("norm identities", norm_identities),
        ("dilation identity", dilation_suite),
        ("solver round trip", round_trip),
        ("arc invariants", arc_invariants),
        ("series maps", series_maps),
        ("moment recovery", moment_recovery),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(d) => println!("PASS {:>2} {name}: {d} [{secs:.2}s]", i + 1),
            Err(d) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {d} [{secs:.2}s]", i + 1)
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
