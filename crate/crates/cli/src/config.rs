//! Flat `key = value` scenario files.
//!
//! ```text
//! # Bell-state start, single sector
//! J = 2.0
//! J0 = 1.0
//! theta = pi/4
//! mode = single
//! ```
//!
//! Keys are case-sensitive (`B` is the uniform field, `b` the nonuniform
//! one). Angles accept `pi` expressions such as `pi/4` or `3*pi/8`.

use std::path::PathBuf;

use spinchain::measures::BasisRotation;
use spinchain::scenario::{Scenario, SectorMode};
use spinchain::Sector;

use crate::error::{CliError, Result};

pub const KEYS: [&str; 18] = [
    "J",
    "Jz",
    "eta",
    "J0",
    "B",
    "b",
    "gamma",
    "mu",
    "theta",
    "mode",
    "t_max",
    "dt",
    "record_every",
    "phi",
    "varphi",
    "compare_j0_zero",
    "output_path",
    "plot",
];

/// Keys a sweep may vary.
pub const SWEEPABLE: [&str; 8] = ["J", "Jz", "eta", "J0", "B", "b", "gamma", "theta"];

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ScenarioConfig {
    pub scenario: Scenario,
    pub output_path: Option<PathBuf>,
    pub plot: bool,
}

/// Parses a real number, allowing `pi` factors: `pi`, `-pi/2`, `0.25*pi`.
pub fn parse_number(s: &str) -> Result<f64> {
    let s = s.trim();
    let bad = || CliError::config(format!("not a number: {s:?}"));
    if !s.contains("pi") {
        return s.parse::<f64>().map_err(|_| bad());
    }
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1.0, rest),
        None => (1.0, s),
    };
    let mut value = 1.0;
    let mut op = '*';
    let mut token = String::new();
    let flush = |token: &str, op: char, value: &mut f64| -> Result<()> {
        let t = token.trim();
        let x = if t == "pi" {
            std::f64::consts::PI
        } else {
            t.parse::<f64>().map_err(|_| bad())?
        };
        match op {
            '*' => *value *= x,
            _ => *value /= x,
        }
        Ok(())
    };
    for ch in body.chars() {
        if ch == '*' || ch == '/' {
            flush(&token, op, &mut value)?;
            token.clear();
            op = ch;
        } else {
            token.push(ch);
        }
    }
    flush(&token, op, &mut value)?;
    Ok(sign * value)
}

fn parse_bool(s: &str) -> Result<bool> {
    match s.trim() {
        "true" | "1" | "yes" | "on" => Ok(true),
        "false" | "0" | "no" | "off" => Ok(false),
        other => Err(CliError::config(format!("not a boolean: {other:?}"))),
    }
}

impl ScenarioConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = Self::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::config(format!("line {}: expected `key = value`", lineno + 1))
            })?;
            cfg.set(key.trim(), value.trim())
                .map_err(|e| match e {
                    CliError::Config(msg) => CliError::config(format!("line {}: {msg}", lineno + 1)),
                    other => other,
                })?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    /// Parses a `KEY=VALUE` override.
    pub fn apply_override(&mut self, kv: &str) -> Result<()> {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| CliError::config(format!("override {kv:?} is not KEY=VALUE")))?;
        self.set(k.trim(), v.trim())
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let sc = &mut self.scenario;
        let p = &mut sc.params;
        match key {
            "J" => p.j = parse_number(value)?,
            "Jz" => p.jz = parse_number(value)?,
            "eta" => p.eta = parse_number(value)?,
            "J0" => p.j0 = parse_number(value)?,
            "B" => p.b_uniform = parse_number(value)?,
            "b" => p.b_nonuniform = parse_number(value)?,
            "gamma" => p.gamma = parse_number(value)?,
            "theta" => p.theta = parse_number(value)?,
            "mu" => {
                let v: i32 = value
                    .parse()
                    .map_err(|_| CliError::config(format!("mu must be an integer, got {value:?}")))?;
                p.mu = Sector::try_from(v).map_err(|e| CliError::config(e.to_string()))?;
            }
            "mode" => {
                sc.mode = match value {
                    "single" | "single-sector" => SectorMode::Single,
                    "mixture" | "sector-mixture" => SectorMode::Mixture,
                    other => return Err(CliError::config(format!("unknown mode {other:?}"))),
                }
            }
            "t_max" => sc.integrator.t_max = parse_number(value)?,
            "dt" => sc.integrator.dt = parse_number(value)?,
            "record_every" => {
                sc.integrator.record_every = value.parse().map_err(|_| {
                    CliError::config(format!("record_every must be a positive integer, got {value:?}"))
                })?
            }
            "phi" => {
                let rot = sc.rotation.get_or_insert_with(BasisRotation::default);
                rot.phi = parse_number(value)?;
            }
            "varphi" => {
                let rot = sc.rotation.get_or_insert_with(BasisRotation::default);
                rot.varphi = parse_number(value)?;
            }
            "compare_j0_zero" => sc.compare_j0_zero = parse_bool(value)?,
            "output_path" => self.output_path = Some(PathBuf::from(value)),
            "plot" => self.plot = parse_bool(value)?,
            other => return Err(CliError::config(format!("unknown key {other:?}"))),
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        self.scenario
            .params
            .validate()
            .map_err(|e| CliError::config(e.to_string()))?;
        self.scenario
            .integrator
            .validate()
            .map_err(|e| CliError::config(e.to_string()))
    }

    /// Writes the configuration back out in the same format.
    pub fn to_text(&self) -> String {
        let sc = &self.scenario;
        let p = &sc.params;
        let mut lines = vec![
            format!("J = {:?}", p.j),
            format!("Jz = {:?}", p.jz),
            format!("eta = {:?}", p.eta),
            format!("J0 = {:?}", p.j0),
            format!("B = {:?}", p.b_uniform),
            format!("b = {:?}", p.b_nonuniform),
            format!("gamma = {:?}", p.gamma),
            format!("mu = {}", p.mu),
            format!("theta = {:?}", p.theta),
            format!(
                "mode = {}",
                match sc.mode {
                    SectorMode::Single => "single",
                    SectorMode::Mixture => "mixture",
                }
            ),
            format!("t_max = {:?}", sc.integrator.t_max),
            format!("dt = {:?}", sc.integrator.dt),
            format!("record_every = {}", sc.integrator.record_every),
        ];
        if let Some(rot) = sc.rotation {
            lines.push(format!("phi = {:?}", rot.phi));
            lines.push(format!("varphi = {:?}", rot.varphi));
        }
        lines.push(format!("compare_j0_zero = {}", sc.compare_j0_zero));
        if let Some(path) = &self.output_path {
            lines.push(format!("output_path = {}", path.display()));
        }
        lines.push(format!("plot = {}", self.plot));
        lines.join("\n") + "\n"
    }
}
