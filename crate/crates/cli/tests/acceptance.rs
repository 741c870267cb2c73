//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Runs without the libtest harness so the lines print in order.

use std::f64::consts::FRAC_PI_4;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spinchain::dynamics::{
    analytic_state, evolve, lindblad_rhs, steady_state_limit, steady_state_trace_identity,
    x_state_from_unit_samples, IntegratorConfig, Sample,
};
use spinchain::events::{detect_events, EventKind};
use spinchain::measures::{concurrence_generic, concurrence_x, lqfi, lqfi_bruteforce, lqfi_distinct_pairs};
use spinchain::model::{hamiltonian_block, initial_state, jump_operators, ModelParams, Sector};
use spinchain::scenario::{run_scenario, TimeSeriesRecord};
use spinchain::{ComplexMatrix, DensityMatrix};
use spinchain_cli::commands::run_evolve;
use spinchain_cli::config::ScenarioConfig;
use spinchain_cli::validate::{run_validate, Status, ValidateOptions};

type Outcome = Result<String, String>;

fn within(label: &str, observed: f64, tol: f64) -> Outcome {
    if observed < tol {
        Ok(format!("{label}={observed:.3e} < {tol:.0e}"))
    } else {
        Err(format!("{label}={observed:.3e} >= {tol:.0e}"))
    }
}

fn timed<T>(limit: Duration, f: impl FnOnce() -> T) -> Result<T, String> {
    let start = Instant::now();
    let out = f();
    let elapsed = start.elapsed();
    if elapsed > limit {
        Err(format!("runtime {elapsed:.2?} exceeds {limit:.0?}"))
    } else {
        Ok(out)
    }
}

fn config(text: &str) -> ScenarioConfig {
    ScenarioConfig::parse(text).expect("built-in config parses")
}

fn records(text: &str) -> Result<Vec<TimeSeriesRecord>, String> {
    run_evolve(&config(text))
        .map(|(run, _)| run.records)
        .map_err(|e| e.to_string())
}

fn max_analytic_error(p: &ModelParams, traj: &[Sample]) -> Result<f64, String> {
    let mut worst: f64 = 0.0;
    for s in traj {
        let a = analytic_state(p, s.t).map_err(|e| e.to_string())?;
        worst = worst.max((a.matrix() - s.rho.matrix()).max_abs());
    }
    Ok(worst)
}

fn section_params(theta: f64, mu: Sector) -> ModelParams {
    ModelParams {
        theta,
        ..ModelParams::default().with_sector(mu)
    }
}

fn every_sample(dt: f64) -> IntegratorConfig {
    IntegratorConfig {
        dt,
        t_max: 20.0,
        record_every: 1,
    }
}

fn random_params(rng: &mut ChaCha8Rng) -> ModelParams {
    let mut u = || rng.gen_range(-3.0..3.0);
    let base = ModelParams {
        j: u(),
        jz: u(),
        eta: u(),
        j0: u(),
        b_uniform: u(),
        b_nonuniform: u(),
        ..ModelParams::default()
    };
    ModelParams {
        gamma: rng.gen_range(0.01..2.0),
        mu: Sector::try_from(rng.gen_range(-1..=1)).expect("sector in range"),
        ..base
    }
}

fn random_x(rng: &mut ChaCha8Rng) -> DensityMatrix {
    x_state_from_unit_samples(std::array::from_fn(|_| rng.gen::<f64>()))
}

fn criterion_1() -> Outcome {
    let recs = timed(Duration::from_secs(1), || records("theta = pi/4\n"))??;
    let r = recs.first().ok_or("no samples")?;
    let worst = [
        (r.concurrence - 1.0).abs(),
        (r.l1_coherence - 1.0).abs(),
        (r.lqfi - 1.0).abs(),
        (r.rho22 - 0.5).abs(),
        (r.rho33 - 0.5).abs(),
    ]
    .into_iter()
    .fold(0.0, f64::max);
    within("max |t=0 anchor error|", worst, 1e-6)
}

fn criterion_2(trajectories: &mut Vec<Vec<Sample>>) -> Outcome {
    let mut worst: f64 = 0.0;
    for theta in [0.0, FRAC_PI_4] {
        for mu in [Sector::Down, Sector::Zero, Sector::Up] {
            let p = section_params(theta, mu);
            let (traj, err) = timed(Duration::from_secs(10), || -> Result<_, String> {
                let traj = evolve(&initial_state(theta), &p, &every_sample(1e-3))
                    .map_err(|e| e.to_string())?;
                let err = max_analytic_error(&p, &traj)?;
                Ok((traj, err))
            })
            .map_err(|e| format!("theta={theta:.4} mu={mu}: {e}"))??;
            worst = worst.max(err);
            trajectories.push(traj);
        }
    }
    within("max elementwise error (6 cases)", worst, 1e-6)
}

fn criterion_3(trajectories: &[Vec<Sample>]) -> Outcome {
    let (mut trace, mut eig, mut leak) = (0.0f64, 0.0f64, 0.0f64);
    let mut n = 0usize;
    for s in trajectories.iter().flatten() {
        trace = trace.max(s.rho.trace_deviation());
        leak = leak.max(s.rho.off_block_leakage());
        eig = eig.min(s.rho.min_eigenvalue().map_err(|e| e.to_string())?);
        n += 1;
    }
    let detail = format!("{n} samples: trace_dev={trace:.3e} min_eig={eig:.3e} leakage={leak:.3e}");
    if n > 0 && trace < 1e-8 && eig > -1e-9 && leak < 1e-9 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut rhs, mut identity) = (0.0f64, 0.0f64);
    for _ in 0..100 {
        let p = random_params(&mut rng);
        let ss = steady_state_limit(&p).map_err(|e| e.to_string())?;
        let jumps = jump_operators(&p).map_err(|e| e.to_string())?;
        let d: ComplexMatrix =
            lindblad_rhs(ss.matrix(), &hamiltonian_block(&p), &jumps).map_err(|e| e.to_string())?;
        rhs = rhs.max(d.max_abs());
        identity = identity.max((steady_state_trace_identity(&p) - 1.0).abs());
    }
    let detail = format!("max ||rhs||inf={rhs:.3e} (<1e-8), max identity error={identity:.3e} (<1e-12)");
    if rhs < 1e-8 && identity < 1e-12 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (c_err, q_err) = timed(Duration::from_secs(60), || -> Result<_, String> {
        let mut c_err: f64 = 0.0;
        for _ in 0..1000 {
            let rho = random_x(&mut rng);
            let x = concurrence_x(&rho).map_err(|e| e.to_string())?.concurrence;
            let g = concurrence_generic(&rho).map_err(|e| e.to_string())?;
            c_err = c_err.max((x - g).abs());
        }
        let mut q_err: f64 = 0.0;
        for _ in 0..200 {
            let rho = random_x(&mut rng);
            let q = lqfi(&rho).map_err(|e| e.to_string())?;
            let grid = lqfi_bruteforce(&rho, 200, 400).map_err(|e| e.to_string())?;
            q_err = q_err.max((q - grid).abs());
        }
        Ok((c_err, q_err))
    })??;
    let detail = format!("concurrence max diff={c_err:.3e} (<1e-9), lqfi vs grid max diff={q_err:.3e} (<1e-3)");
    if c_err < 1e-9 && q_err < 1e-3 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn criterion_6() -> Outcome {
    let product = DensityMatrix::from_matrix_unchecked(ComplexMatrix::diag(&[1.0, 0.0, 0.0, 0.0]));
    let bell = initial_state(FRAC_PI_4);
    let mixed = DensityMatrix::maximally_mixed();
    let q = |rho: &DensityMatrix| lqfi(rho).map_err(|e| e.to_string());
    let (qm, qp, qb) = (q(&mixed)?, q(&product)?, q(&bell)?);
    let variant = lqfi_distinct_pairs(&product).map_err(|e| e.to_string())?;
    let report = run_validate(&ValidateOptions {
        quick: true,
        ..ValidateOptions::default()
    });
    let reported = report
        .lines
        .iter()
        .any(|l| l.status == Status::Report && l.name.contains("variant anchors") && l.detail.contains("product=1.000000"));
    let detail = format!(
        "Q(I/4)={qm:.3e} Q(product)={qp:.3e} Q(Bell)={qb:.12} variant(product)={variant:.6} reported={reported}"
    );
    if qm.abs() <= 1e-10 && qp.abs() <= 1e-9 && (qb - 1.0).abs() <= 1e-9 && (variant - 1.0).abs() < 1e-9 && reported {
        Ok(detail)
    } else {
        Err(detail)
    }
}

/// Event counts plus branch activity before the first death and after the
/// first revival that follows it.
fn describe_scenario(recs: &[TimeSeriesRecord]) -> (usize, usize, bool, bool) {
    let t: Vec<f64> = recs.iter().map(|r| r.t).collect();
    let c: Vec<f64> = recs.iter().map(|r| r.concurrence).collect();
    let report = detect_events(&t, &c);
    let first_esd = report.first(EventKind::Esd);
    let revival = first_esd.and_then(|d| {
        report
            .events
            .iter()
            .find(|e| e.kind == EventKind::Esb && e.t > d)
            .map(|e| e.t)
    });
    let esb_after_death = report
        .events
        .iter()
        .filter(|e| e.kind == EventKind::Esb && first_esd.is_some_and(|d| e.t > d))
        .count();
    let c1_early = recs
        .iter()
        .filter(|r| r.t > 0.0 && first_esd.map_or(true, |d| r.t < d))
        .any(|r| r.c1_branch > 0.0 && r.c1_branch > r.c2_branch);
    let c2_late = revival.is_some_and(|rv| {
        recs.iter()
            .filter(|r| r.t > rv)
            .any(|r| r.c2_branch > 0.0 && r.c2_branch > r.c1_branch)
    });
    (report.count(EventKind::Esd), esb_after_death, c1_early, c2_late)
}

fn criterion_7() -> Outcome {
    let zero = records("theta = 0\n")?;
    let bell = records("theta = pi/4\n")?;
    let (esd0, esb0, c1_0, c2_0) = describe_scenario(&zero);
    let (esd4, _, c1_4, c2_4) = describe_scenario(&bell);
    let detail = format!(
        "theta=0: ESD={esd0} ESB(after death)={esb0}; theta=pi/4: ESD={esd4}; \
         C1 early: {c1_0}/{c1_4}; C2 after revival: {c2_0}/{c2_4}"
    );
    if esd0 >= 1 && esb0 >= 1 && esd4 >= 1 && c1_0 && c1_4 && c2_0 && c2_4 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn criterion_8() -> Outcome {
    let cfg = config("theta = pi/4\ncompare_j0_zero = true\n");
    let run = run_scenario(&cfg.scenario).map_err(|e| e.to_string())?;
    let reference = run.reference.ok_or("comparison run missing")?;
    let (mut d23, mut d14) = (0.0f64, 0.0f64);
    for (a, b) in run.records.iter().zip(&reference) {
        d23 = d23.max((2.0 * a.abs_rho23 - 2.0 * b.abs_rho23).abs());
        d14 = d14.max((2.0 * a.abs_rho14 - 2.0 * b.abs_rho14).abs());
    }
    let detail = format!("max |d 2|rho23||={d23:.3e} (<1e-9), max |d 2|rho14||={d14:.3e} (>1e-3)");
    if d23 < 1e-9 && d14 > 1e-3 && run.records.len() == reference.len() {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn criterion_9() -> Outcome {
    let p = section_params(FRAC_PI_4, Sector::Up);
    let err = |dt: f64| -> Result<f64, String> {
        let cfg = IntegratorConfig {
            dt,
            t_max: 20.0,
            record_every: (0.01 / dt).round() as usize,
        };
        let traj = evolve(&initial_state(p.theta), &p, &cfg).map_err(|e| e.to_string())?;
        max_analytic_error(&p, &traj)
    };
    let (coarse, fine) = (err(1e-3)?, err(5e-4)?);
    let ratio = coarse / fine;
    let detail = format!("err(1e-3)={coarse:.3e} err(5e-4)={fine:.3e} ratio={ratio:.2} (>=8)");
    if ratio >= 8.0 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn main() -> ExitCode {
    let mut trajectories = Vec::new();
    let results: Vec<(usize, &str, Outcome)> = vec![
        (1, "initial-value anchors", criterion_1()),
        (2, "analytic-numeric equivalence", criterion_2(&mut trajectories)),
        (3, "conservation suite", criterion_3(&trajectories)),
        (4, "steady-state fixed point", criterion_4()),
        (5, "measure oracle equivalence", criterion_5()),
        (6, "LQFI anchor states", criterion_6()),
        (7, "qualitative ESD/ESB and branch activity", criterion_7()),
        (8, "coherence-channel comparison", criterion_8()),
        (9, "integrator order", criterion_9()),
    ];
    let mut failed = 0;
    for (n, name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("[PASS] criterion {n}: {name} -- {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] criterion {n}: {name} -- {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
