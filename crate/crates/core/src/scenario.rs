//! Scenario runs: evolve one sector (or the equal-weight sector mixture)
//! and tabulate the measures at every recorded sample.

use crate::dynamics::{evolve, DensityMatrix, IntegratorConfig, Sample};
use crate::error::Result;
use crate::measures::{BasisRotation, MeasureSet};
use crate::model::{initial_state, ModelParams, Sector};

/// How the Ising sectors enter the dimer state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SectorMode {
    /// Use `ModelParams::mu` only.
    #[default]
    Single,
    /// ¼(ρ_{μ=1} + 2ρ_{μ=0} + ρ_{μ=−1}), measures evaluated on the average.
    Mixture,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Scenario {
    pub params: ModelParams,
    pub mode: SectorMode,
    pub integrator: IntegratorConfig,
    pub rotation: Option<BasisRotation>,
    /// Also run the J0 = 0 reference model.
    pub compare_j0_zero: bool,
}

/// One tabulated time sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeSeriesRecord {
    pub t: f64,
    pub rho11: f64,
    pub rho22: f64,
    pub rho33: f64,
    pub rho44: f64,
    pub abs_rho14: f64,
    pub abs_rho23: f64,
    pub concurrence: f64,
    pub c1_branch: f64,
    pub c2_branch: f64,
    pub l1_coherence: f64,
    pub l1_rotated: f64,
    pub lqfi: f64,
    pub trace_dev: f64,
    pub min_eig: f64,
}

impl TimeSeriesRecord {
    pub const COLUMNS: [&'static str; 15] = [
        "t",
        "rho11",
        "rho22",
        "rho33",
        "rho44",
        "abs_rho14",
        "abs_rho23",
        "concurrence",
        "c1_branch",
        "c2_branch",
        "l1_coherence",
        "l1_rotated",
        "lqfi",
        "trace_dev",
        "min_eig",
    ];

    pub fn from_state(t: f64, rho: &DensityMatrix, rot: Option<&BasisRotation>) -> Result<Self> {
        let v = rho.x_view();
        let m = MeasureSet::evaluate(rho, rot)?;
        Ok(Self {
            t,
            rho11: v.rho11,
            rho22: v.rho22,
            rho33: v.rho33,
            rho44: v.rho44,
            abs_rho14: v.rho14.norm(),
            abs_rho23: v.rho23.norm(),
            concurrence: m.concurrence,
            c1_branch: m.c1_branch,
            c2_branch: m.c2_branch,
            l1_coherence: m.l1_coherence,
            l1_rotated: m.l1_rotated,
            lqfi: m.lqfi,
            trace_dev: rho.trace_deviation(),
            min_eig: rho.min_eigenvalue()?,
        })
    }

    /// Values in [`Self::COLUMNS`] order.
    pub fn values(&self) -> [f64; 15] {
        [
            self.t,
            self.rho11,
            self.rho22,
            self.rho33,
            self.rho44,
            self.abs_rho14,
            self.abs_rho23,
            self.concurrence,
            self.c1_branch,
            self.c2_branch,
            self.l1_coherence,
            self.l1_rotated,
            self.lqfi,
            self.trace_dev,
            self.min_eig,
        ]
    }

    pub fn column(&self, name: &str) -> Option<f64> {
        let idx = Self::COLUMNS.iter().position(|c| *c == name)?;
        Some(self.values()[idx])
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioRun {
    pub records: Vec<TimeSeriesRecord>,
    /// J0 = 0 run, present when `compare_j0_zero` was set.
    pub reference: Option<Vec<TimeSeriesRecord>>,
}

/// Recorded states for `params` under the scenario's sector mode.
pub fn trajectory(
    params: &ModelParams,
    mode: SectorMode,
    cfg: &IntegratorConfig,
) -> Result<Vec<Sample>> {
    let rho0 = initial_state(params.theta);
    match mode {
        SectorMode::Single => evolve(&rho0, params, cfg),
        SectorMode::Mixture => {
            let up = evolve(&rho0, &params.with_sector(Sector::Up), cfg)?;
            let zero = evolve(&rho0, &params.with_sector(Sector::Zero), cfg)?;
            let down = evolve(&rho0, &params.with_sector(Sector::Down), cfg)?;
            Ok(up
                .iter()
                .zip(&zero)
                .zip(&down)
                .map(|((a, b), c)| Sample {
                    t: a.t,
                    rho: DensityMatrix::mixture(&[(0.25, &a.rho), (0.5, &b.rho), (0.25, &c.rho)]),
                })
                .collect())
        }
    }
}

pub fn tabulate(samples: &[Sample], rot: Option<&BasisRotation>) -> Result<Vec<TimeSeriesRecord>> {
    samples
        .iter()
        .map(|s| TimeSeriesRecord::from_state(s.t, &s.rho, rot))
        .collect()
}

pub fn run_scenario(sc: &Scenario) -> Result<ScenarioRun> {
    sc.params.validate()?;
    let rot = sc.rotation.as_ref();
    let records = tabulate(&trajectory(&sc.params, sc.mode, &sc.integrator)?, rot)?;
    let reference = if sc.compare_j0_zero {
        let p = sc.params.reference_model();
        Some(tabulate(&trajectory(&p, sc.mode, &sc.integrator)?, rot)?)
    } else {
        None
    };
    Ok(ScenarioRun { records, reference })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn short() -> Scenario {
        Scenario {
            integrator: IntegratorConfig {
                dt: 1e-3,
                t_max: 1.0,
                record_every: 100,
            },
            ..Scenario::default()
        }
    }

    #[test]
    fn first_record_is_the_bell_state() {
        let run = run_scenario(&short()).unwrap();
        let r = run.records[0];
        assert_eq!(run.records.len(), 11);
        assert!((r.concurrence - 1.0).abs() < 1e-12);
        assert!((r.l1_coherence - 1.0).abs() < 1e-12);
        assert!((r.lqfi - 1.0).abs() < 1e-9);
        assert!(run.reference.is_none());
    }

    #[test]
    fn mixture_of_identical_sectors_is_single() {
        // Without J0 and B every sector block has the same dynamics.
        let mut sc = short();
        sc.params.j0 = 0.0;
        sc.params.b_uniform = 0.0;
        let single = run_scenario(&sc).unwrap().records;
        sc.mode = SectorMode::Mixture;
        let mixed = run_scenario(&sc).unwrap().records;
        for (a, b) in single.iter().zip(&mixed) {
            for (x, y) in a.values().iter().zip(b.values()) {
                assert!((x - y).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn reference_run_has_matching_grid() {
        let mut sc = short();
        sc.compare_j0_zero = true;
        let run = run_scenario(&sc).unwrap();
        let reference = run.reference.unwrap();
        assert_eq!(reference.len(), run.records.len());
        assert!(reference.iter().zip(&run.records).all(|(a, b)| a.t == b.t));
    }

    #[test]
    fn column_lookup() {
        let r = run_scenario(&short()).unwrap().records[0];
        assert_eq!(r.column("t"), Some(0.0));
        assert_eq!(r.column("concurrence"), Some(r.concurrence));
        assert_eq!(r.column("nope"), None);
    }
}
