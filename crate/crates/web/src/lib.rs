//! Browser bindings: three SVG-producing operations over the dimer model.
//!
//! The `render_*` functions are plain Rust so they can be tested natively;
//! the `#[wasm_bindgen]` exports only convert errors for JavaScript.

use spinchain::dynamics::IntegratorConfig;
use spinchain::measures::BasisRotation;
use spinchain::plot::{HeatMap, LineChart, Series};
use spinchain::scenario::{run_scenario, Scenario, SectorMode, TimeSeriesRecord};
use spinchain::{ModelParams, Sector};
use wasm_bindgen::prelude::*;

/// Slider state from the page.
#[wasm_bindgen]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DemoParams {
    pub j: f64,
    pub jz: f64,
    pub eta: f64,
    pub j0: f64,
    pub b_uniform: f64,
    pub b_nonuniform: f64,
    pub gamma: f64,
    /// Sector μ ∈ {-1, 0, 1}.
    pub mu: i32,
    pub theta: f64,
    pub t_max: f64,
    pub dt: f64,
    /// Use the equal-weight sector mixture instead of `mu`.
    pub mixture: bool,
}

impl Default for DemoParams {
    fn default() -> Self {
        let p = ModelParams::default();
        let cfg = IntegratorConfig::default();
        Self {
            j: p.j,
            jz: p.jz,
            eta: p.eta,
            j0: p.j0,
            b_uniform: p.b_uniform,
            b_nonuniform: p.b_nonuniform,
            gamma: p.gamma,
            mu: p.mu.value(),
            theta: p.theta,
            t_max: cfg.t_max,
            dt: cfg.dt,
            mixture: false,
        }
    }
}

#[wasm_bindgen]
impl DemoParams {
    #[wasm_bindgen(constructor)]
    pub fn new() -> DemoParams {
        DemoParams::default()
    }
}

impl DemoParams {
    fn scenario(&self, samples: usize) -> spinchain::Result<Scenario> {
        let mu = Sector::try_from(self.mu)?;
        let params = ModelParams {
            j: self.j,
            jz: self.jz,
            eta: self.eta,
            j0: self.j0,
            b_uniform: self.b_uniform,
            b_nonuniform: self.b_nonuniform,
            gamma: self.gamma,
            mu,
            theta: self.theta,
        };
        let steps = (self.t_max / self.dt).ceil().max(1.0) as usize;
        let integrator = IntegratorConfig {
            dt: self.dt,
            t_max: self.t_max,
            record_every: (steps / samples.max(1)).max(1),
        };
        integrator.validate()?;
        Ok(Scenario {
            params,
            mode: if self.mixture {
                SectorMode::Mixture
            } else {
                SectorMode::Single
            },
            integrator,
            rotation: None,
            compare_j0_zero: false,
        })
    }
}

const LINE_SAMPLES: usize = 400;

type Column = (&'static str, fn(&TimeSeriesRecord) -> f64);

fn line_chart(
    title: &str,
    records: &[TimeSeriesRecord],
    columns: &[Column],
) -> spinchain::Result<String> {
    let t: Vec<f64> = records.iter().map(|r| r.t).collect();
    let series = columns
        .iter()
        .map(|(name, get)| {
            let ys: Vec<f64> = records.iter().map(get).collect();
            Series::new(*name, &t, &ys)
        })
        .collect();
    LineChart {
        title: title.to_string(),
        x_label: "t".into(),
        y_label: String::new(),
        series,
    }
    .render_svg()
}

/// Concurrence, l1 coherence and LQFI against time.
pub fn render_measures(p: &DemoParams) -> spinchain::Result<String> {
    let run = run_scenario(&p.scenario(LINE_SAMPLES)?)?;
    line_chart(
        "Correlation measures",
        &run.records,
        &[
            ("concurrence", |r| r.concurrence),
            ("l1_coherence", |r| r.l1_coherence),
            ("lqfi", |r| r.lqfi),
        ],
    )
}

/// Concurrence over (t, b) for `count` evenly spaced b in [b_min, b_max].
pub fn render_concurrence_map(
    p: &DemoParams,
    b_min: f64,
    b_max: f64,
    count: usize,
    time_samples: usize,
) -> spinchain::Result<String> {
    if count < 2 || !(b_max > b_min) {
        return Err(spinchain::Error::InvalidParams(format!(
            "need count >= 2 and b_max > b_min, got {count}, [{b_min}, {b_max}]"
        )));
    }
    let ys: Vec<f64> = (0..count)
        .map(|i| b_min + (b_max - b_min) * i as f64 / (count - 1) as f64)
        .collect();
    let mut xs = Vec::new();
    let mut values = Vec::with_capacity(count);
    for &b in &ys {
        let mut sc = p.scenario(time_samples)?;
        sc.params.b_nonuniform = b;
        let run = run_scenario(&sc)?;
        if xs.is_empty() {
            xs = run.records.iter().map(|r| r.t).collect();
        }
        values.push(run.records.iter().map(|r| r.concurrence).collect());
    }
    HeatMap {
        title: "Concurrence (white: unentangled)".into(),
        x_label: "t".into(),
        y_label: "b".into(),
        xs,
        ys,
        values,
    }
    .render_svg()
}

/// l1 coherence in the computational basis and after the local rotation.
pub fn render_rotated_coherence(p: &DemoParams, phi: f64, varphi: f64) -> spinchain::Result<String> {
    let mut sc = p.scenario(LINE_SAMPLES)?;
    sc.rotation = Some(BasisRotation::new(phi, varphi));
    let run = run_scenario(&sc)?;
    line_chart(
        "l1 coherence by basis",
        &run.records,
        &[
            ("l1_coherence", |r| r.l1_coherence),
            ("l1_rotated", |r| r.l1_rotated),
        ],
    )
}

fn js(r: spinchain::Result<String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen]
pub fn measures_svg(p: &DemoParams) -> Result<String, JsError> {
    js(render_measures(p))
}

#[wasm_bindgen]
pub fn concurrence_map_svg(
    p: &DemoParams,
    b_min: f64,
    b_max: f64,
    count: usize,
    time_samples: usize,
) -> Result<String, JsError> {
    js(render_concurrence_map(p, b_min, b_max, count, time_samples))
}

#[wasm_bindgen]
pub fn rotated_coherence_svg(p: &DemoParams, phi: f64, varphi: f64) -> Result<String, JsError> {
    js(render_rotated_coherence(p, phi, varphi))
}
