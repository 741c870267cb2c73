//! Lindblad evolution of the dimer: a fixed-step RK4 integrator, the
//! closed-form X-state solution and its t → ∞ limit.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, ComplexMatrix, EigenSystem, I, ZERO};
use crate::model::{hamiltonian_block, initial_state, jump_operators, JumpOperator, ModelParams};

pub const TRACE_TOL: f64 = 1e-9;
pub const POSITIVITY_TOL: f64 = 1e-9;
/// Trace drift that aborts an integration.
pub const UNSTABLE_TRACE_DEV: f64 = 1e-6;

/// Entries outside the X pattern: (row, col) with row+col odd.
const OFF_BLOCK: [(usize, usize); 8] = [
    (0, 1),
    (0, 2),
    (1, 0),
    (2, 0),
    (3, 1),
    (3, 2),
    (1, 3),
    (2, 3),
];

/// A 4×4 two-qubit density matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    m: ComplexMatrix,
}

/// The six independent entries of an X-form state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XView {
    pub rho11: f64,
    pub rho22: f64,
    pub rho33: f64,
    pub rho44: f64,
    pub rho14: Complex64,
    pub rho23: Complex64,
}

impl XView {
    pub fn trace(&self) -> f64 {
        self.rho11 + self.rho22 + self.rho33 + self.rho44
    }

    pub fn to_matrix(&self) -> ComplexMatrix {
        let mut m = ComplexMatrix::diag(&[self.rho11, self.rho22, self.rho33, self.rho44]);
        m[(0, 3)] = self.rho14;
        m[(3, 0)] = self.rho14.conj();
        m[(1, 2)] = self.rho23;
        m[(2, 1)] = self.rho23.conj();
        m
    }

    /// Largest |difference| across the six entries.
    pub fn max_diff(&self, other: &XView) -> f64 {
        [
            (self.rho11 - other.rho11).abs(),
            (self.rho22 - other.rho22).abs(),
            (self.rho33 - other.rho33).abs(),
            (self.rho44 - other.rho44).abs(),
            (self.rho14 - other.rho14).norm(),
            (self.rho23 - other.rho23).norm(),
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

impl DensityMatrix {
    /// Validates Hermiticity, unit trace and positivity.
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        if m.dim() != 4 {
            return Err(Error::DimensionMismatch {
                left: 4,
                right: m.dim(),
            });
        }
        let herm = m.hermitian_deviation();
        if herm > crate::linalg::HERMITIAN_TOL {
            return Err(Error::NotHermitian { deviation: herm });
        }
        let rho = Self { m };
        let dev = rho.trace_deviation();
        if dev > TRACE_TOL {
            return Err(Error::InvalidState(format!("trace deviates from 1 by {dev:e}")));
        }
        let min = rho.min_eigenvalue()?;
        if min < -POSITIVITY_TOL {
            return Err(Error::NegativeEigenvalue { value: min });
        }
        Ok(rho)
    }

    /// Wraps a matrix the caller knows to be a state (integrator output,
    /// closed forms). Diagnostics are still available on the result.
    pub fn from_matrix_unchecked(m: ComplexMatrix) -> Self {
        debug_assert_eq!(m.dim(), 4);
        Self { m }
    }

    pub fn from_x_view(v: &XView) -> Self {
        Self { m: v.to_matrix() }
    }

    pub fn maximally_mixed() -> Self {
        Self {
            m: ComplexMatrix::identity(4).scale_re(0.25),
        }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.m
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.m
    }

    pub fn x_view(&self) -> XView {
        let m = &self.m;
        XView {
            rho11: m[(0, 0)].re,
            rho22: m[(1, 1)].re,
            rho33: m[(2, 2)].re,
            rho44: m[(3, 3)].re,
            rho14: m[(0, 3)],
            rho23: m[(1, 2)],
        }
    }

    /// Max magnitude over the eight entries the X pattern forces to zero.
    pub fn off_block_leakage(&self) -> f64 {
        OFF_BLOCK
            .iter()
            .map(|&(r, c)| self.m[(r, c)].norm())
            .fold(0.0, f64::max)
    }

    pub fn trace_deviation(&self) -> f64 {
        (self.m.trace() - Complex64::new(1.0, 0.0)).norm()
    }

    pub fn purity(&self) -> f64 {
        (&self.m * &self.m).trace().re
    }

    pub fn eigen(&self) -> Result<EigenSystem> {
        hermitian_eig(&self.m)
    }

    pub fn min_eigenvalue(&self) -> Result<f64> {
        Ok(self.eigen()?.values[0])
    }

    /// U ρ U†
    pub fn transformed(&self, u: &ComplexMatrix) -> Result<Self> {
        Ok(Self {
            m: self.m.conjugate_by(u)?,
        })
    }

    /// Σ w_k ρ_k
    pub fn mixture(parts: &[(f64, &DensityMatrix)]) -> Self {
        let mut m = ComplexMatrix::zeros(4);
        for (w, rho) in parts {
            m = &m + &rho.m.scale_re(*w);
        }
        Self { m }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegratorConfig {
    pub dt: f64,
    pub t_max: f64,
    /// Record every n-th step (the final time is always recorded).
    pub record_every: usize,
}

impl Default for IntegratorConfig {
    fn default() -> Self {
        Self {
            dt: 1e-3,
            t_max: 20.0,
            record_every: 10,
        }
    }
}

impl IntegratorConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.dt > 0.0 && self.dt.is_finite()) {
            return Err(Error::InvalidParams(format!("dt must be > 0, got {}", self.dt)));
        }
        if !(self.t_max >= 0.0 && self.t_max.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "t_max must be >= 0, got {}",
                self.t_max
            )));
        }
        if self.record_every == 0 {
            return Err(Error::InvalidParams("record_every must be positive".into()));
        }
        Ok(())
    }
}

/// dρ/dt = −i[H,ρ] + Σ_j γ_j (L_j ρ L_j† − ½{L_j†L_j, ρ}).
pub fn lindblad_rhs(
    rho: &ComplexMatrix,
    h: &ComplexMatrix,
    jumps: &[JumpOperator],
) -> Result<ComplexMatrix> {
    let mut out = h.commutator(rho)?.scale(-I);
    for jump in jumps {
        if jump.rate == 0.0 {
            continue;
        }
        let l = &jump.op;
        let ld = l.dagger();
        let ldl = ld.matmul(l)?;
        let sandwich = l.matmul(rho)?.matmul(&ld)?;
        let anti = ldl.matmul(rho)?.add(&rho.matmul(&ldl)?)?;
        let d = sandwich.sub(&anti.scale_re(0.5))?;
        out = out.add(&d.scale_re(jump.rate))?;
    }
    Ok(out)
}

/// Precomputed generator for repeated evaluation inside the integrator.
#[derive(Debug, Clone)]
pub struct Lindbladian {
    /// H − (i/2) Σ γ L†L
    h_eff: ComplexMatrix,
    h_eff_dag: ComplexMatrix,
    jumps: Vec<(ComplexMatrix, ComplexMatrix, f64)>,
}

impl Lindbladian {
    pub fn new(h: &ComplexMatrix, jumps: &[JumpOperator]) -> Result<Self> {
        let mut decay = ComplexMatrix::zeros(h.dim());
        let mut kept = Vec::new();
        for j in jumps {
            if j.rate == 0.0 {
                continue;
            }
            let ld = j.op.dagger();
            decay = decay.add(&ld.matmul(&j.op)?.scale_re(j.rate))?;
            kept.push((j.op.clone(), ld, j.rate));
        }
        let h_eff = h.sub(&decay.scale(Complex64::new(0.0, 0.5)))?;
        Ok(Self {
            h_eff_dag: h_eff.dagger(),
            h_eff,
            jumps: kept,
        })
    }

    pub fn for_params(p: &ModelParams) -> Result<Self> {
        Self::new(&hamiltonian_block(p), &jump_operators(p)?)
    }

    pub fn apply(&self, rho: &ComplexMatrix) -> ComplexMatrix {
        // −i(H_eff ρ − ρ H_eff†) + Σ γ L ρ L†
        let mut out = (&(&self.h_eff * rho) - &(rho * &self.h_eff_dag)).scale(-I);
        for (l, ld, rate) in &self.jumps {
            out = &out + &(&(l * rho) * ld).scale_re(*rate);
        }
        out
    }

    fn rk4_step(&self, rho: &ComplexMatrix, h: f64) -> ComplexMatrix {
        let k1 = self.apply(rho);
        let k2 = self.apply(&(rho + &k1.scale_re(h / 2.0)));
        let k3 = self.apply(&(rho + &k2.scale_re(h / 2.0)));
        let k4 = self.apply(&(rho + &k3.scale_re(h)));
        let incr = &(&(&k1 + &k2.scale_re(2.0)) + &k3.scale_re(2.0)) + &k4;
        rho + &incr.scale_re(h / 6.0)
    }
}

/// One recorded point of a trajectory.
#[derive(Debug, Clone)]
pub struct Sample {
    pub t: f64,
    pub rho: DensityMatrix,
}

/// Integrates the master equation with classical fixed-step RK4.
pub fn evolve(
    rho0: &DensityMatrix,
    p: &ModelParams,
    cfg: &IntegratorConfig,
) -> Result<Vec<Sample>> {
    p.validate()?;
    evolve_with(rho0, &Lindbladian::for_params(p)?, cfg)
}

pub fn evolve_with(
    rho0: &DensityMatrix,
    gen: &Lindbladian,
    cfg: &IntegratorConfig,
) -> Result<Vec<Sample>> {
    cfg.validate()?;
    let full_steps = (cfg.t_max / cfg.dt + 1e-9).floor() as usize;
    let remainder = cfg.t_max - full_steps as f64 * cfg.dt;

    let mut out = Vec::with_capacity(full_steps / cfg.record_every + 2);
    let mut rho = rho0.matrix().clone();
    out.push(Sample {
        t: 0.0,
        rho: rho0.clone(),
    });
    for k in 1..=full_steps {
        rho = gen.rk4_step(&rho, cfg.dt);
        let t = k as f64 * cfg.dt;
        check_step(&rho, t)?;
        if k % cfg.record_every == 0 || (k == full_steps && remainder <= 1e-12) {
            out.push(Sample {
                t,
                rho: DensityMatrix::from_matrix_unchecked(rho.clone()),
            });
        }
    }
    if remainder > 1e-12 {
        rho = gen.rk4_step(&rho, remainder);
        check_step(&rho, cfg.t_max)?;
        out.push(Sample {
            t: cfg.t_max,
            rho: DensityMatrix::from_matrix_unchecked(rho),
        });
    }
    Ok(out)
}

fn check_step(rho: &ComplexMatrix, t: f64) -> Result<()> {
    let deviation = (rho.trace() - Complex64::new(1.0, 0.0)).norm();
    if !rho.as_slice().iter().all(|z| z.re.is_finite() && z.im.is_finite())
        || !(deviation <= UNSTABLE_TRACE_DEV)
    {
        return Err(Error::StepUnstable { t, deviation });
    }
    Ok(())
}

fn check_scales(p: &ModelParams) -> Result<crate::model::DerivedScales> {
    let s = p.scales();
    if s.omega_outer == 0.0 {
        return Err(Error::SingularScale("Omega"));
    }
    if s.omega_inner == 0.0 {
        return Err(Error::SingularScale("omega"));
    }
    Ok(s)
}

/// The closed-form X-state entries, as printed, for a given value of the
/// nonuniform field entering the expressions.
fn closed_form_entries(p: &ModelParams, b: f64, t: f64) -> Result<XView> {
    let s = check_scales(p)?;
    let (j, eta, g, th) = (p.j, p.eta, p.gamma, p.theta);
    let (delta, om_o, om_i) = (s.delta, s.omega_outer, s.omega_inner);
    let je2 = j * j * eta * eta;
    let (om_o2, om_i2, d2) = (om_o * om_o, om_i * om_i, delta * delta);
    let denom = om_o2 + g * g;
    let e1 = (-g * t).exp();
    let e2 = (-2.0 * g * t).exp();
    let (s2, c2) = (2.0 * th).sin_cos();
    let (sin_o, cos_o) = (om_o * t).sin_cos();
    let (sin_i, cos_i) = (om_i * t).sin_cos();

    let rho11 = je2 * (om_o * (1.0 - e2) - 2.0 * g * sin_o * e1) / (4.0 * om_o * denom);

    // Terms shared by ρ22 and ρ33.
    let shared = je2 * g * g * cos_o * e1 / (2.0 * om_o2 * denom) + je2 * (1.0 + e2) / (4.0 * denom);
    let rho22 = j * (2.0 * b * s2 - j * c2) * cos_i * e1 / (2.0 * om_i2)
        - (2.0 * om_o2 * b * b * c2 + om_o2 * j * b * s2 - 2.0 * d2 * om_i2) * e1 / (om_o2 * om_i2)
        + shared;
    let rho33 = j * (j * c2 - 2.0 * b * s2) * cos_i * e1 / (2.0 * om_i2)
        + (2.0 * om_o2 * b * b * c2 + om_o2 * j * b * s2 + 2.0 * d2 * om_i2) * e1 / (om_o2 * om_i2)
        + shared;

    let rho44 = je2 * g * (om_o * sin_o - 2.0 * g * cos_o) * e1 / (2.0 * om_o2 * denom)
        - 4.0 * d2 * e1 / om_o2
        + (-je2 * e2 + om_o2 + 12.0 * d2 + 4.0 * g * g) / (4.0 * denom);

    let osc = Complex64::new(2.0 * b * cos_i, om_i * sin_i);
    let rho23 = osc * (-(j * c2 - 2.0 * b * s2) * e1 / (2.0 * om_i2))
        + Complex64::new(j * (j * s2 + 2.0 * b * c2) * e1 / (2.0 * om_i2), 0.0);

    let ig_2d = Complex64::new(2.0 * delta, g);
    let rho14 = (ig_2d * (om_o * sin_o) + Complex64::new(-2.0 * g * delta, om_o2) * cos_o)
        * (j * eta * g * e1 / (2.0 * om_o2 * denom))
        + (Complex64::new(2.0 * delta * denom * e1, 0.0) - ig_2d * om_o2)
            * (j * eta / (2.0 * om_o2 * denom));

    Ok(XView {
        rho11,
        rho22,
        rho33,
        rho44,
        rho14,
        rho23,
    })
}

/// Closed-form ρ(t) for the initial state sinθ|01⟩ + cosθ|10⟩.
///
/// The printed inner-block expressions (ρ22, ρ33, ρ23) are exact for the
/// opposite sign of the nonuniform field relative to [`hamiltonian_block`]
/// with S3 as the first tensor factor, so they are evaluated at −b here.
/// The outer-block entries do not depend on b.
pub fn analytic_state(p: &ModelParams, t: f64) -> Result<DensityMatrix> {
    let v = closed_form_entries(p, -p.b_nonuniform, t)?;
    Ok(DensityMatrix::from_x_view(&v))
}

/// The closed-form expressions evaluated verbatim with the model's b.
pub fn analytic_state_printed(p: &ModelParams, t: f64) -> Result<DensityMatrix> {
    let v = closed_form_entries(p, p.b_nonuniform, t)?;
    Ok(DensityMatrix::from_x_view(&v))
}

/// The t → ∞ limit of the closed-form solution.
pub fn steady_state_limit(p: &ModelParams) -> Result<DensityMatrix> {
    let s = check_scales(p)?;
    if p.gamma == 0.0 {
        return Err(Error::NoDissipation);
    }
    let g = p.gamma;
    let je2 = p.j * p.j * p.eta * p.eta;
    let denom = s.omega_outer * s.omega_outer + g * g;
    let low = je2 / (4.0 * denom);
    let d2 = s.delta * s.delta;
    let v = XView {
        rho11: low,
        rho22: low,
        rho33: low,
        rho44: (s.omega_outer * s.omega_outer + 12.0 * d2 + 4.0 * g * g) / (4.0 * denom),
        rho14: Complex64::new(2.0 * s.delta, g) * (-p.j * p.eta / (2.0 * denom)),
        rho23: ZERO,
    };
    Ok(DensityMatrix::from_x_view(&v))
}

/// (4J²η² + 16Δ² + 4γ²) / (4(Ω² + γ²)), identically 1.
pub fn steady_state_trace_identity(p: &ModelParams) -> f64 {
    let s = p.scales();
    let je2 = p.j * p.j * p.eta * p.eta;
    let g2 = p.gamma * p.gamma;
    (4.0 * je2 + 16.0 * s.delta * s.delta + 4.0 * g2)
        / (4.0 * (s.omega_outer * s.omega_outer + g2))
}

/// Maps eight uniform samples in [0, 1) to a valid X state: Dirichlet(1)
/// diagonal, off-diagonal magnitudes scaled inside the positivity bounds
/// |ρ14| ≤ √(ρ11ρ44), |ρ23| ≤ √(ρ22ρ33), uniform phases.
pub fn x_state_from_unit_samples(u: [f64; 8]) -> DensityMatrix {
    let w: Vec<f64> = u[..4].iter().map(|x| -(1.0 - x).ln()).collect();
    let total: f64 = w.iter().sum();
    let d: Vec<f64> = if total > 0.0 {
        w.iter().map(|x| x / total).collect()
    } else {
        vec![0.25; 4]
    };
    let tau = 2.0 * std::f64::consts::PI;
    let v = XView {
        rho11: d[0],
        rho22: d[1],
        rho33: d[2],
        rho44: d[3],
        rho14: Complex64::from_polar(u[4] * (d[0] * d[3]).sqrt(), tau * u[5]),
        rho23: Complex64::from_polar(u[6] * (d[1] * d[2]).sqrt(), tau * u[7]),
    };
    DensityMatrix::from_x_view(&v)
}

/// Initial state for `p.theta`, evolved with `cfg`.
pub fn evolve_from_theta(p: &ModelParams, cfg: &IntegratorConfig) -> Result<Vec<Sample>> {
    evolve(&initial_state(p.theta), p, cfg)
}
