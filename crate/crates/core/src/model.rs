//! The Ising-XYZ dimer: couplings, the μ-sector Hamiltonian block, its
//! closed-form spectrum and the zero-temperature jump operators.
//!
//! Basis ordering is {|00⟩, |01⟩, |10⟩, |11⟩} with spin S3 as the first
//! tensor factor and |0⟩ = spin up.

use std::fmt;

use num_complex::Complex64;

use crate::dynamics::DensityMatrix;
use crate::error::{Error, Result};
use crate::linalg::{kron, pauli, ComplexMatrix};

/// Total z-spin of the two nodal Ising spins, μ = S1z + S2z.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sector {
    Down,
    Zero,
    Up,
}

impl Sector {
    pub const ALL: [Sector; 3] = [Sector::Up, Sector::Zero, Sector::Down];

    pub fn value(self) -> i32 {
        match self {
            Sector::Down => -1,
            Sector::Zero => 0,
            Sector::Up => 1,
        }
    }

    pub fn as_f64(self) -> f64 {
        self.value() as f64
    }
}

impl TryFrom<i32> for Sector {
    type Error = Error;
    fn try_from(v: i32) -> Result<Self> {
        match v {
            -1 => Ok(Sector::Down),
            0 => Ok(Sector::Zero),
            1 => Ok(Sector::Up),
            _ => Err(Error::InvalidParams(format!("mu must be -1, 0 or 1, got {v}"))),
        }
    }
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// Couplings, fields, decoherence rate and initial-state angle (ħ = 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    /// XY exchange J.
    pub j: f64,
    /// z exchange Jz.
    pub jz: f64,
    /// XY anisotropy η.
    pub eta: f64,
    /// Ising exchange J0 between nodal and dimer spins.
    pub j0: f64,
    /// Uniform longitudinal field B.
    pub b_uniform: f64,
    /// Nonuniform longitudinal field b.
    pub b_nonuniform: f64,
    /// Decoherence rate γ of each reservoir.
    pub gamma: f64,
    pub mu: Sector,
    /// Initial state sinθ|01⟩ + cosθ|10⟩.
    pub theta: f64,
}

impl Default for ModelParams {
    /// Reference parameter set: J=2, J0=1, γ=0.2,
    /// η=0.2, B=0.2, b=2, θ=π/4, μ=1, Jz=0.
    fn default() -> Self {
        Self {
            j: 2.0,
            jz: 0.0,
            eta: 0.2,
            j0: 1.0,
            b_uniform: 0.2,
            b_nonuniform: 2.0,
            gamma: 0.2,
            mu: Sector::Up,
            theta: std::f64::consts::FRAC_PI_4,
        }
    }
}

impl ModelParams {
    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("J", self.j),
            ("Jz", self.jz),
            ("eta", self.eta),
            ("J0", self.j0),
            ("B", self.b_uniform),
            ("b", self.b_nonuniform),
            ("gamma", self.gamma),
            ("theta", self.theta),
        ];
        for (name, v) in fields {
            if !v.is_finite() {
                return Err(Error::InvalidParams(format!("{name} is not finite")));
            }
        }
        if self.gamma < 0.0 {
            return Err(Error::InvalidParams(format!(
                "gamma must be >= 0, got {}",
                self.gamma
            )));
        }
        Ok(())
    }

    pub fn with_sector(mut self, mu: Sector) -> Self {
        self.mu = mu;
        self
    }

    /// The Heisenberg-XYZ reference model: same parameters with J0 = 0.
    pub fn reference_model(mut self) -> Self {
        self.j0 = 0.0;
        self
    }

    pub fn scales(&self) -> DerivedScales {
        DerivedScales::of(self)
    }
}

/// Δ = J0·μ + B, Ω = √(J²η² + 4Δ²), ω = √(J² + 4b²).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedScales {
    pub delta: f64,
    pub omega_outer: f64,
    pub omega_inner: f64,
}

impl DerivedScales {
    pub fn of(p: &ModelParams) -> Self {
        let delta = p.j0 * p.mu.as_f64() + p.b_uniform;
        let je = p.j * p.eta;
        Self {
            delta,
            omega_outer: (je * je + 4.0 * delta * delta).sqrt(),
            omega_inner: (p.j * p.j + 4.0 * p.b_nonuniform * p.b_nonuniform).sqrt(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumClosedForm {
    pub e1: f64,
    pub e2: f64,
    pub e3: f64,
    pub e4: f64,
}

impl SpectrumClosedForm {
    pub fn sorted(&self) -> [f64; 4] {
        let mut e = [self.e1, self.e2, self.e3, self.e4];
        e.sort_by(f64::total_cmp);
        e
    }
}

/// S = σ/2 on a single site.
fn spin(op: ComplexMatrix) -> ComplexMatrix {
    op.scale_re(0.5)
}

/// Sector block H_μ of the dimer Hamiltonian on sites 3 (first factor) and 4.
pub fn hamiltonian_block(p: &ModelParams) -> ComplexMatrix {
    let id = pauli::identity();
    let (sx, sy, sz) = (spin(pauli::x()), spin(pauli::y()), spin(pauli::z()));
    let s3z = kron(&sz, &id);
    let s4z = kron(&id, &sz);
    let mu = p.mu.as_f64();

    let xx = kron(&sx, &sx).scale_re(p.j * (1.0 + p.eta));
    let yy = kron(&sy, &sy).scale_re(p.j * (1.0 - p.eta));
    let zz = kron(&sz, &sz).scale_re(p.jz);
    let ising = (&s3z + &s4z).scale_re(p.j0 * mu);
    let fields = &s3z.scale_re(p.b_uniform + p.b_nonuniform)
        + &s4z.scale_re(p.b_uniform - p.b_nonuniform);
    // B/2 (S1z + S2z) is a scalar inside a sector.
    let nodal = ComplexMatrix::identity(4).scale_re(p.b_uniform * mu / 2.0);

    let mut h = &(&(&xx + &yy) + &zz) + &ising;
    h = &(&h + &fields) + &nodal;
    // Drop the ±0 imaginary parts the σy⊗σy product leaves behind.
    h.map(|z| Complex64::new(z.re, 0.0))
}

/// E_{1,4} = Bμ/2 + Jz/4 ± Ω/2, E_{2,3} = Bμ/2 − Jz/4 ± ω/2.
pub fn spectrum_closed_form(p: &ModelParams) -> SpectrumClosedForm {
    let s = p.scales();
    let base = p.b_uniform * p.mu.as_f64() / 2.0;
    SpectrumClosedForm {
        e1: base + p.jz / 4.0 + s.omega_outer / 2.0,
        e4: base + p.jz / 4.0 - s.omega_outer / 2.0,
        e2: base - p.jz / 4.0 + s.omega_inner / 2.0,
        e3: base - p.jz / 4.0 - s.omega_inner / 2.0,
    }
}

/// A Lindblad jump operator with its rate.
#[derive(Debug, Clone)]
pub struct JumpOperator {
    pub op: ComplexMatrix,
    pub rate: f64,
}

/// Lowering operators S3⁻ = σ⁻⊗𝕀 and S4⁻ = 𝕀⊗σ⁻, each at rate γ.
pub fn jump_operators(p: &ModelParams) -> Result<Vec<JumpOperator>> {
    if p.gamma < 0.0 {
        return Err(Error::InvalidParams("gamma must be >= 0".into()));
    }
    let id = pauli::identity();
    let lower = pauli::lowering();
    Ok(vec![
        JumpOperator {
            op: kron(&lower, &id),
            rate: p.gamma,
        },
        JumpOperator {
            op: kron(&id, &lower),
            rate: p.gamma,
        },
    ])
}

/// |Ψ⟩⟨Ψ| for |Ψ⟩ = sinθ|01⟩ + cosθ|10⟩.
pub fn initial_state(theta: f64) -> DensityMatrix {
    let (s, c) = theta.sin_cos();
    let mut m = ComplexMatrix::zeros(4);
    m[(1, 1)] = Complex64::new(s * s, 0.0);
    m[(2, 2)] = Complex64::new(c * c, 0.0);
    m[(1, 2)] = Complex64::new(s * c, 0.0);
    m[(2, 1)] = Complex64::new(s * c, 0.0);
    DensityMatrix::from_matrix_unchecked(m)
}
