//! Self-check suite behind `spinchain validate`.

use std::f64::consts::FRAC_PI_4;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spinchain::dynamics::{
    analytic_state, analytic_state_printed, evolve, lindblad_rhs, steady_state_limit,
    steady_state_trace_identity, x_state_from_unit_samples, IntegratorConfig, Sample,
};
use spinchain::linalg::hermitian_eig;
use spinchain::measures::{concurrence_generic, concurrence_x, lqfi, lqfi_bruteforce, lqfi_distinct_pairs};
use spinchain::model::{
    hamiltonian_block, initial_state, jump_operators, spectrum_closed_form, ModelParams, Sector,
};
use spinchain::{ComplexMatrix, DensityMatrix};

pub const ANALYTIC_TOL: f64 = 1e-6;
pub const TRACE_TOL: f64 = 1e-8;
pub const POSITIVITY_TOL: f64 = 1e-9;
pub const LEAKAGE_TOL: f64 = 1e-9;
pub const STEADY_RHS_TOL: f64 = 1e-8;
pub const TRACE_IDENTITY_TOL: f64 = 1e-12;
pub const SPECTRUM_TOL: f64 = 1e-9;
pub const CONCURRENCE_TOL: f64 = 1e-9;
pub const LQFI_GRID_TOL: f64 = 1e-3;
pub const MIN_ORDER_RATIO: f64 = 8.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
    /// Informational; never fails the suite.
    Report,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
            Status::Report => "REPORT",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckLine {
    pub status: Status,
    pub name: String,
    pub detail: String,
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<6} {:<34} {}", self.status, self.name, self.detail)
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ValidationReport {
    pub lines: Vec<CheckLine>,
}

impl ValidationReport {
    fn push(&mut self, status: Status, name: &str, detail: String) {
        self.lines.push(CheckLine {
            status,
            name: name.to_string(),
            detail,
        });
    }

    fn check(&mut self, name: &str, observed: f64, tol: f64) {
        let ok = observed < tol;
        self.push(
            if ok { Status::Pass } else { Status::Fail },
            name,
            format!("max_err={observed:.3e} tol={tol:.0e}"),
        );
    }

    pub fn failures(&self) -> usize {
        self.lines.iter().filter(|l| l.status == Status::Fail).count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn find(&self, name: &str) -> Option<&CheckLine> {
        self.lines.iter().find(|l| l.name == name)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            writeln!(f, "{line}")?;
        }
        writeln!(
            f,
            "{} checks, {} failed",
            self.lines
                .iter()
                .filter(|l| matches!(l.status, Status::Pass | Status::Fail))
                .count(),
            self.failures()
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ValidateOptions {
    pub quick: bool,
    /// Integrator step override (default 1e-3).
    pub dt: Option<f64>,
    /// Decoherence rate override for the base parameter set.
    pub gamma: Option<f64>,
}

impl ValidateOptions {
    fn base_params(&self) -> ModelParams {
        let mut p = ModelParams::default();
        if let Some(g) = self.gamma {
            p.gamma = g;
        }
        p
    }

    fn dt(&self) -> f64 {
        self.dt.unwrap_or(1e-3)
    }
}

fn random_params(rng: &mut ChaCha8Rng, gamma: Option<f64>) -> ModelParams {
    let mut u = || rng.gen_range(-3.0..3.0);
    let p = ModelParams {
        j: u(),
        jz: u(),
        eta: u(),
        j0: u(),
        b_uniform: u(),
        b_nonuniform: u(),
        gamma: 0.0,
        mu: Sector::Up,
        theta: 0.0,
    };
    ModelParams {
        gamma: gamma.unwrap_or_else(|| rng.gen_range(0.01..2.0)),
        mu: Sector::try_from(rng.gen_range(-1..=1)).expect("sector in range"),
        ..p
    }
}

fn random_x(rng: &mut ChaCha8Rng) -> DensityMatrix {
    x_state_from_unit_samples(std::array::from_fn(|_| rng.gen::<f64>()))
}

fn max_analytic_error(
    p: &ModelParams,
    traj: &[Sample],
    closed: fn(&ModelParams, f64) -> spinchain::Result<DensityMatrix>,
) -> spinchain::Result<f64> {
    let mut worst: f64 = 0.0;
    for s in traj {
        let a = closed(p, s.t)?;
        worst = worst.max((a.matrix() - s.rho.matrix()).max_abs());
    }
    Ok(worst)
}

/// Runs every check and collects one line per check.
pub fn run_validate(opts: &ValidateOptions) -> ValidationReport {
    let mut report = ValidationReport::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let base = opts.base_params();
    let draws = |full: usize, quick: usize| if opts.quick { quick } else { full };

    // Closed-form spectrum.
    let mut worst: f64 = 0.0;
    for _ in 0..draws(1000, 100) {
        let p = random_params(&mut rng, None);
        match hermitian_eig(&hamiltonian_block(&p)) {
            Ok(es) => {
                for (a, b) in es.values.iter().zip(spectrum_closed_form(&p).sorted()) {
                    worst = worst.max((a - b).abs());
                }
            }
            Err(_) => worst = f64::INFINITY,
        }
    }
    report.check("spectrum closed form", worst, SPECTRUM_TOL);

    // Analytic vs numeric, plus conservation along the same trajectories.
    let cfg = IntegratorConfig {
        dt: opts.dt(),
        t_max: 20.0,
        record_every: ((0.05 / opts.dt()).round() as usize).max(1),
    };
    let mut analytic_err: f64 = 0.0;
    let mut printed_err: f64 = 0.0;
    let (mut trace_dev, mut min_eig, mut leakage) = (0.0f64, 0.0f64, 0.0f64);
    let mut failure = None;
    let mut trajectories = Vec::new();
    for theta in [0.0, FRAC_PI_4] {
        for mu in Sector::ALL {
            let p = ModelParams {
                theta,
                ..base.with_sector(mu)
            };
            match evolve(&initial_state(theta), &p, &cfg) {
                Ok(traj) => trajectories.push((p, traj)),
                Err(e) => failure = Some(format!("theta={theta:.4} mu={mu}: {e}")),
            }
        }
    }
    if let Some(msg) = failure {
        report.push(Status::Fail, "analytic vs numeric", msg);
    } else {
        for (p, traj) in &trajectories {
            match (
                max_analytic_error(p, traj, analytic_state),
                max_analytic_error(p, traj, analytic_state_printed),
            ) {
                (Ok(a), Ok(b)) => {
                    analytic_err = analytic_err.max(a);
                    printed_err = printed_err.max(b);
                }
                (Err(e), _) | (_, Err(e)) => {
                    failure = Some(e.to_string());
                }
            }
            for s in traj {
                trace_dev = trace_dev.max(s.rho.trace_deviation());
                leakage = leakage.max(s.rho.off_block_leakage());
                min_eig = min_eig.min(s.rho.min_eigenvalue().unwrap_or(f64::NEG_INFINITY));
            }
        }
        match failure {
            Some(msg) => report.push(Status::Skip, "analytic vs numeric", msg),
            None => {
                report.check("analytic vs numeric", analytic_err, ANALYTIC_TOL);
                report.push(
                    Status::Report,
                    "printed closed form vs numeric",
                    format!(
                        "max_err={printed_err:.3e} (inner block evaluated with the printed sign of b)"
                    ),
                );
            }
        }
        report.check("trace preservation", trace_dev, TRACE_TOL);
        report.check("positivity", (-min_eig).max(0.0), POSITIVITY_TOL);
        report.check("X-form preservation", leakage, LEAKAGE_TOL);
    }

    // Fourth-order convergence: dt against dt/2.
    let order_params = ModelParams {
        theta: FRAC_PI_4,
        ..base
    };
    let order_err = |dt: f64| -> spinchain::Result<f64> {
        let c = IntegratorConfig {
            dt,
            t_max: 20.0,
            record_every: ((0.5 / dt).round() as usize).max(1),
        };
        let traj = evolve(&initial_state(order_params.theta), &order_params, &c)?;
        max_analytic_error(&order_params, &traj, analytic_state)
    };
    match (order_err(opts.dt()), order_err(opts.dt() / 2.0)) {
        (Ok(coarse), Ok(fine)) => {
            let ratio = coarse / fine;
            report.push(
                if ratio >= MIN_ORDER_RATIO { Status::Pass } else { Status::Fail },
                "integrator order",
                format!("err(dt)={coarse:.3e} err(dt/2)={fine:.3e} ratio={ratio:.2} min={MIN_ORDER_RATIO}"),
            );
        }
        (Err(e), _) | (_, Err(e)) => report.push(Status::Fail, "integrator order", e.to_string()),
    }

    // Steady state.
    if base.gamma == 0.0 {
        report.push(
            Status::Skip,
            "steady-state fixed point",
            "gamma = 0: no dissipation, steady state undefined".into(),
        );
    } else {
        let mut worst_rhs: f64 = 0.0;
        let mut worst_identity: f64 = 0.0;
        let gamma = opts.gamma;
        let mut params = vec![base];
        params.extend((0..100).map(|_| random_params(&mut rng, gamma)));
        for p in &params {
            worst_identity = worst_identity.max((steady_state_trace_identity(p) - 1.0).abs());
            let rhs = steady_state_limit(p).and_then(|ss| {
                lindblad_rhs(ss.matrix(), &hamiltonian_block(p), &jump_operators(p)?)
            });
            worst_rhs = worst_rhs.max(rhs.map(|m: ComplexMatrix| m.max_abs()).unwrap_or(f64::INFINITY));
        }
        report.check("steady-state fixed point", worst_rhs, STEADY_RHS_TOL);
        report.check("steady-state trace identity", worst_identity, TRACE_IDENTITY_TOL);
    }

    // Concurrence: X shortcut against Wootters.
    let mut worst: f64 = 0.0;
    for _ in 0..draws(1000, 200) {
        let rho = random_x(&mut rng);
        let diff = match (concurrence_x(&rho), concurrence_generic(&rho)) {
            (Ok(x), Ok(g)) => (x.concurrence - g).abs(),
            _ => f64::INFINITY,
        };
        worst = worst.max(diff);
    }
    report.check("concurrence X vs generic", worst, CONCURRENCE_TOL);

    // LQFI against the sphere grid.
    let mut worst: f64 = 0.0;
    let mut below: f64 = 0.0;
    let mut variant_gap: f64 = 0.0;
    for _ in 0..draws(200, 20) {
        let rho = random_x(&mut rng);
        match (lqfi(&rho), lqfi_bruteforce(&rho, 200, 400), lqfi_distinct_pairs(&rho)) {
            (Ok(q), Ok(grid), Ok(v)) => {
                worst = worst.max((grid - q).abs());
                below = below.max(q - grid);
                variant_gap = variant_gap.max((v - q).abs());
            }
            _ => worst = f64::INFINITY,
        }
    }
    report.check("lqfi vs sphere grid", worst, LQFI_GRID_TOL);
    report.push(
        Status::Report,
        "lqfi i!=j variant vs lqfi",
        format!("max |difference| = {variant_gap:.3e} on random X states"),
    );
    if below > 1e-9 {
        report.push(
            Status::Fail,
            "lqfi grid upper bound",
            format!("grid fell below lqfi by {below:.3e}"),
        );
    }

    // Anchors.
    let product = DensityMatrix::from_matrix_unchecked(ComplexMatrix::diag(&[0.0, 0.0, 1.0, 0.0]));
    let bell = initial_state(FRAC_PI_4);
    let mixed = DensityMatrix::maximally_mixed();
    let anchor = |rho: &DensityMatrix, target: f64| {
        lqfi(rho).map(|q| (q - target).abs()).unwrap_or(f64::INFINITY)
    };
    report.check("lqfi(I/4) = 0", anchor(&mixed, 0.0), 1e-10);
    report.check("lqfi(pure product) = 0", anchor(&product, 0.0), 1e-9 + f64::EPSILON);
    report.check("lqfi(Bell) = 1", anchor(&bell, 1.0), 1e-9 + f64::EPSILON);
    let show = |r: spinchain::Result<f64>| r.map(|v| format!("{v:.6}")).unwrap_or_else(|e| e.to_string());
    report.push(
        Status::Report,
        "lqfi i!=j variant anchors",
        format!(
            "product={} bell={} I/4={} (full sum: product={}, bell={}, I/4={})",
            show(lqfi_distinct_pairs(&product)),
            show(lqfi_distinct_pairs(&bell)),
            show(lqfi_distinct_pairs(&mixed)),
            show(lqfi(&product)),
            show(lqfi(&bell)),
            show(lqfi(&mixed)),
        ),
    );
    report
}
