// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#![allow(clippy::excessive_precision)]

use std::process::ExitCode;
use std::time::{Duration, Instant};

use fracsolve::fracops::{gamma, rl_deriv_monomial, OrderRule};
use fracsolve::linalg::norm2;
use fracsolve::receiver::{build_params, f2_jacobian, ReceiverConstants};
use fracsolve::reference::{self, TableRow};
use fracsolve::simulate::{self, DEFAULT_DNI_RANGE, DEFAULT_TAIR_RANGE};
use fracsolve::solver::step_matrix;
use fracsolve::{
    alpha_sweep, classify, estimate_order, iterate, MethodSpec, OrderClass, PowerTerm, PowerTermSystem, ReceiverSystem,
    SolverConfig, System,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn timed<R>(f: impl FnOnce() -> R) -> (R, Duration) {
    let t = Instant::now();
    let r = f();
    (r, t.elapsed())
}

fn rel_err(got: f64, want: f64) -> f64 {
    if want == 0.0 {
        got.abs()
    } else {
        ((got - want) / want).abs()
    }
}

fn table_pair(unacc: usize, acc: usize) -> Outcome {
    let cases = reference::cases();
    let config = SolverConfig::default();
    let mut notes = Vec::new();
    for idx in [unacc, acc] {
        let case = &cases[idx];
        let (check, dt) = timed(|| reference::check_case(case, &config, None));
        ensure(check.error.is_none(), format!("table {}: {:?}", case.table, check.error))?;
        ensure(
            check.count_ok,
            format!("table {}: {} iterations, expected {}±1", case.table, check.iterations, check.expected_iterations),
        )?;
        let x_err = check.final_x.iter().zip(&check.expected_x).fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
        ensure(x_err <= 1e-5, format!("table {}: final iterate off by {x_err:e}", case.table))?;
        if case.accelerated {
            ensure(
                check.final_residual <= 1e-8,
                format!("table {}: final residual {:e}", case.table, check.final_residual),
            )?;
        }
        ensure(dt < Duration::from_secs(1), format!("table {}: took {dt:?}", case.table))?;
        notes.push(format!("T{} {} it, err {x_err:.1e}", case.table, check.iterations));
    }
    Ok(notes.join("; "))
}

fn criterion_1() -> Outcome {
    table_pair(0, 1)
}

fn criterion_2() -> Outcome {
    Ok(format!("{}; {}", table_pair(2, 3)?, table_pair(4, 5)?))
}

// Tabulated norms carry three significant digits. One row of the
// accelerated table rounds 1334.95 up to 1.34E+03, so allow a full unit in
// the last printed place.
fn printed_norm_ok(got: f64, want: f64) -> bool {
    let ulp = 10f64.powi(want.abs().log10().floor() as i32 - 2);
    (got - want).abs() <= ulp
}

fn criterion_3() -> Outcome {
    let config = SolverConfig::default();
    let mut worst = 0.0f64;
    for case in &reference::cases()[..2] {
        let trace = case.run(&config, None).map_err(|e| e.to_string())?;
        let params = case.params();
        for row in case.rows {
            let TableRow { i, t_hot, t_cold, .. } = *row;
            let x = trace.iterates.get(i).ok_or(format!("table {}: trace has no iterate {i}", case.table))?;
            let state = fracsolve::receiver::recover(x, &params).map_err(|e| e.to_string())?;
            for (got, want) in [(x[0], t_hot), (x[1], t_cold), (state.t_cell, row.t_cell)] {
                let e = rel_err(got, want);
                worst = worst.max(e);
                ensure(e <= 1e-4, format!("table {} row {i}: {got} vs {want}", case.table))?;
            }
            // Residuals near 1e-9 are rounding noise and implementation dependent.
            let residual_ok = row.f2_norm < 1e-6 || printed_norm_ok(trace.residual_norms[i - 1], row.f2_norm);
            ensure(
                printed_norm_ok(trace.step_norms[i - 1], row.step_norm) && residual_ok,
                format!("table {} row {i}: norms disagree with the printed digits", case.table),
            )?;
        }
    }
    Ok(format!("worst relative error {worst:.1e}"))
}

fn criterion_4() -> Outcome {
    let config = SolverConfig::default();
    let cases = reference::cases();
    let mut worst_f1 = 0.0f64;
    for case in cases.iter().filter(|c| c.accelerated) {
        let check = reference::check_case(case, &config, None);
        let f1 = check.f1_residual.ok_or(format!("table {}: recovery failed", case.table))?;
        ensure(f1 <= 1e-5, format!("table {}: ‖f1‖ = {f1:e}", case.table))?;
        let got = check.recovered.expect("recovered with f1");
        for (g, w) in got.iter().zip(&check.expected_recovered) {
            ensure((g - w).abs() <= 1e-5, format!("table {}: recovered {g} vs {w}", case.table))?;
        }
        worst_f1 = worst_f1.max(f1);
    }
    Ok(format!("max ‖f1‖ {worst_f1:.1e}"))
}

fn random_system(rng: &mut ChaCha8Rng) -> PowerTermSystem<f64> {
    let n = rng.random_range(1..=3usize);
    let components = (0..n)
        .map(|_| {
            let terms = rng.random_range(1..=4usize);
            let mut comp: Vec<PowerTerm<f64>> = (0..terms)
                .map(|_| {
                    let exps = (0..n).map(|_| rng.random_range(0..=3u32) as f64).collect();
                    PowerTerm::new(rng.random_range(-2.0..2.0), exps)
                })
                .collect();
            comp.push(PowerTerm::constant(rng.random_range(-3.0..3.0), n));
            comp
        })
        .collect();
    PowerTermSystem::new(n, components).expect("valid system")
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

/// Compares the order-1 quasi-Newton orbit with textbook Newton steps.
fn newton_orbit_matches<S: System<f64>>(f: &S, x0: &[f64], steps: usize) -> Result<usize, String> {
    let config = SolverConfig { max_iter: steps, step_tol: 1e-300, residual_tol: 1e-300, ..SolverConfig::default() };
    let trace = iterate(f, &MethodSpec::quasi_newton(1.0), x0, &config).map_err(|e| e.to_string())?;
    let mut x = x0.to_vec();
    for (i, got) in trace.iterates.iter().enumerate().skip(1) {
        let fx = f.eval(&x).map_err(|e| e.to_string())?;
        let jac = f.jacobian(&x).map_err(|e| e.to_string())?;
        let d = jac.solve(&fx).map_err(|e| e.to_string())?;
        x = x.iter().zip(d).map(|(a, b)| a - b).collect();
        ensure(
            got.iter().zip(&x).all(|(a, b)| close(*a, *b, 1e-12)),
            format!("orbit diverges from Newton at step {i}: {got:?} vs {x:?}"),
        )?;
    }
    Ok(trace.iterations())
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let unit = OrderRule::constant(1.0);
    let mut compared = 0;
    for s in 0..50 {
        let sys = random_system(&mut rng);
        let x: Vec<f64> = (0..sys.n()).map(|_| rng.random_range(0.2..3.0)).collect();
        let frac = sys.fractional_jacobian(&x, &unit, 1.0).map_err(|e| e.to_string())?;
        let classical = sys.classical_jacobian(&x).map_err(|e| e.to_string())?;
        let diff = frac.max_abs_diff(&classical);
        ensure(diff <= 1e-12, format!("system {s}: fractional vs classical Jacobian differ by {diff:e}"))?;
        compared += newton_orbit_matches(&sys, &x, 8).map_err(|e| format!("system {s}: {e}"))?;
    }
    let params = build_params(900.0, 20.0, &ReceiverConstants::default()).map_err(|e| e.to_string())?;
    let receiver = ReceiverSystem::new(params);
    let x0 = [3000.0, 3000.0];
    compared += newton_orbit_matches(&receiver, &x0, 40)?;
    let fx = receiver.eval(&x0).map_err(|e| e.to_string())?;
    let a = step_matrix(&receiver, &MethodSpec::quasi_newton(1.0), &x0, &fx).map_err(|e| e.to_string())?;
    let jac = f2_jacobian(&x0, &params).map_err(|e| e.to_string())?;
    let diff = a.max_abs_diff(&jac);
    ensure(diff <= 1e-12 * jac.max_norm(), format!("receiver order-1 matrix differs by {diff:e}"))?;
    Ok(format!("{compared} Newton steps compared"))
}

fn criterion_6() -> Outcome {
    let config = SolverConfig::default();
    let cases = reference::cases();
    let acc = cases[1].run(&config, None).map_err(|e| e.to_string())?;
    let order = estimate_order(&acc).map_err(|e| e.to_string())?;
    ensure(order >= 1.5, format!("accelerated order {order}"))?;
    let plain = cases[0].run(&config, None).map_err(|e| e.to_string())?;
    let s = &plain.step_norms;
    ensure(s.len() >= 6, "unaccelerated trace too short")?;
    let ratios: Vec<f64> = s.windows(2).rev().take(5).map(|w| w[1] / w[0]).collect();
    ensure(ratios.iter().all(|r| (0.35..=0.45).contains(r)), format!("step ratios {ratios:?}"))?;
    let (lo, hi) = ratios.iter().fold((f64::INFINITY, 0.0f64), |(l, h), &r| (l.min(r), h.max(r)));
    Ok(format!("order {order:.1}; ratios in [{lo:.4}, {hi:.4}]"))
}

fn criterion_7() -> Outcome {
    let config = SolverConfig { classification_tol: 1e-3, ..SolverConfig::default() };
    let case = reference::cases()[1];
    let root = case.run(&config, None).map_err(|e| e.to_string())?.final_iterate().to_vec();
    let system = ReceiverSystem::new(case.params());
    let acc = classify(&system, &case.method(case.alpha), &root, &config).map_err(|e| e.to_string())?;
    let plain = classify(&system, &MethodSpec::quasi_newton(case.alpha), &root, &config).map_err(|e| e.to_string())?;
    ensure(acc.classification == OrderClass::Ord2, format!("accelerated: {acc:?}"))?;
    ensure(plain.classification == OrderClass::Ord1, format!("unaccelerated: {plain:?}"))?;
    Ok(format!("‖Φ'‖ = {:.1e} (accelerated), {:.2} (unaccelerated)", acc.phi_jacobian_norm, plain.phi_jacobian_norm))
}

// High-precision reference values of Γ at random points.
const GAMMA_POINTS: [(f64, f64); 20] = [
    (-1.5855051165015386, 2.3040685692576196364),
    (-3.1423574346794827, 1.0096054870126091901),
    (1.3584102573586838, 0.89033180396423999247),
    (-3.8480734199921152, 0.35729286922138758823),
    (0.32293803876020277, 2.7691352860637405966),
    (-1.2087997477867303, 4.6524443841619168969),
    (-3.9780096770276385, 1.9600322860981597152),
    (0.066921598704782426, 14.428043981926039055),
    (-4.1625390740221357, -0.20907386181167029957),
    (-0.59718884703852737, -3.6877919490567939085),
    (-3.8713011878284296, 0.40317172430566166363),
    (-3.6835828799052144, 0.24866167879500652604),
    (-0.6793272977173741, -4.1064327690276058452),
    (2.9416691220483422, 1.8964759408533271139),
    (-3.3857823496531898, 0.33749576007565888881),
    (-2.4908493185368692, -0.95528108294707278415),
    (1.1468990016503033, 0.93407273933246281695),
    (4.0293804821130514, 6.2263293812679579753),
    (0.69392653755748768, 1.3077780148621422119),
    (-0.92987572814297881, -14.785193639328170622),
];

fn criterion_8() -> Outcome {
    let g = |x: f64| gamma(x).map_err(|e| e.to_string());
    let mut worst = 0.0f64;
    let mut factorial = 1.0;
    for n in 0..=10u32 {
        if n > 0 {
            factorial *= n as f64;
        }
        let e = rel_err(g(n as f64 + 1.0)?, factorial);
        worst = worst.max(e);
        ensure(e <= 1e-12, format!("Γ({}) off by {e:e}", n + 1))?;
    }
    for (x, want) in GAMMA_POINTS {
        let e = rel_err(g(x)?, want);
        let reflected = g(x)? * g(1.0 - x)? * (std::f64::consts::PI * x).sin() / std::f64::consts::PI;
        let r = (reflected - 1.0).abs();
        worst = worst.max(e).max(r);
        ensure(e <= 1e-12 && r <= 1e-12, format!("Γ({x}): rel err {e:e}, reflection err {r:e}"))?;
    }
    let inv_sqrt_pi = 0.564_189_583_547_756_3;
    for (mu, alpha, coef, exp) in
        [(0.0, 0.5, inv_sqrt_pi, -0.5), (1.0, 1.0, 1.0, 0.0), (1.0, 0.5, 2.0 * inv_sqrt_pi, 0.5)]
    {
        let d = rl_deriv_monomial(mu, alpha).map_err(|e| e.to_string())?;
        ensure(rel_err(d.coefficient, coef) <= 1e-12 && d.exponent == exp, format!("D^{alpha} x^{mu}: {d:?}"))?;
    }
    Ok(format!("worst relative error {worst:.1e}"))
}

fn criterion_9() -> Outcome {
    let cubic = PowerTermSystem::univariate(&[(1.0, 3.0), (-1.0, 1.0)]).map_err(|e| e.to_string())?;
    let alphas: Vec<f64> = (0..=36).map(|k| 0.1 + 0.05 * k as f64).filter(|a| (a - a.round()).abs() > 1e-9).collect();
    let method = MethodSpec::quasi_newton_accelerated(1.0, 13.0);
    let config = SolverConfig::default();
    let (result, dt) = timed(|| alpha_sweep(&cubic, &method, &[0.6], &alphas, &config));
    let roots: Vec<f64> = result.roots.iter().map(|r| r[0]).collect();
    for r in &roots {
        let res = norm2(&cubic.evaluate(&[*r]).map_err(|e| e.to_string())?);
        ensure(res <= 1e-8, format!("reported root {r} has residual {res:e}"))?;
    }
    ensure(roots.len() >= 2, format!("only {} distinct roots: {roots:?}", roots.len()))?;
    ensure(dt < Duration::from_secs(5), format!("took {dt:?}"))?;
    let mut shown: Vec<String> = roots.iter().map(|r| format!("{:.6}", r + 0.0)).collect();
    shown.sort();
    Ok(format!("{} roots from x0 = 0.6: {}", roots.len(), shown.join(", ")))
}

fn criterion_10() -> Outcome {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().map_err(|e| e.to_string())?;
    let samples = simulate::sample_uniform(2410, DEFAULT_DNI_RANGE, DEFAULT_TAIR_RANGE, 2410);
    let method = MethodSpec::quasi_newton_accelerated(0.89825, 13.0);
    let (records, dt) = timed(|| {
        pool.install(|| {
            simulate::run(&samples, &method, &[3000.0, 3000.0], &SolverConfig::default(), &ReceiverConstants::default())
        })
    });
    let converged = records.iter().filter(|r| r.converged).count();
    ensure(converged == records.len(), format!("{converged}/{} converged", records.len()))?;
    let in_band =
        records.iter().filter_map(|r| r.state.as_ref()).filter(|s| s.eta_cell > 0.40 && s.eta_cell < 0.44).count();
    let share = in_band as f64 / records.len() as f64;
    ensure(share >= 0.95, format!("only {:.1}% of η_cell in (0.40, 0.44)", 100.0 * share))?;
    ensure(dt < Duration::from_secs(30), format!("took {dt:?}"))?;
    Ok(format!("{converged}/{} converged, {:.1}% in band, {dt:.2?} on one thread", records.len(), 100.0 * share))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("table reproduction, example 1", criterion_1),
        ("table reproduction, examples 2 and 3", criterion_2),
        ("row-level trace agreement", criterion_3),
        ("recovery consistency", criterion_4),
        ("classical limit", criterion_5),
        ("acceleration", criterion_6),
        ("order classification", criterion_7),
        ("fractional-operator kernel", criterion_8),
        ("alpha-sweep multiplicity", criterion_9),
        ("simulation pipeline", criterion_10),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS  criterion {:>2}: {name} ({detail})", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {:>2}: {name}: {why}", k + 1);
            }
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
