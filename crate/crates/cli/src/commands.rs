//! The `evolve`, `sweep` and `plot` commands.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use spinchain::events::{detect_events, EventReport};
use spinchain::plot::{LineChart, Series};
use spinchain::scenario::{run_scenario, ScenarioRun};

use crate::config::{ScenarioConfig, SWEEPABLE};
use crate::error::{CliError, Result};
use crate::table::{self, Table};

pub const THREADS_ENV: &str = "SPINCHAIN_THREADS";

/// Columns drawn by `evolve --plot`.
pub const DEFAULT_PLOT_COLUMNS: [&str; 3] = ["concurrence", "l1_coherence", "lqfi"];

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| CliError::io(path, e))
}

pub fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

/// Runs a scenario and renders its CSV.
pub fn run_evolve(cfg: &ScenarioConfig) -> Result<(ScenarioRun, String)> {
    cfg.validate()?;
    let run = run_scenario(&cfg.scenario)?;
    let csv = table::render_run(&run);
    Ok((run, csv))
}

pub fn events_of(run: &ScenarioRun) -> EventReport {
    let t: Vec<f64> = run.records.iter().map(|r| r.t).collect();
    let c: Vec<f64> = run.records.iter().map(|r| r.concurrence).collect();
    detect_events(&t, &c)
}

/// Sibling path with the extension replaced by `svg`.
pub fn svg_path_for(csv: &Path) -> PathBuf {
    csv.with_extension("svg")
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub param: String,
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if self.count < 2 {
            return Err(CliError::config(format!(
                "sweep count must be >= 2, got {}",
                self.count
            )));
        }
        if !SWEEPABLE.contains(&self.param.as_str()) {
            return Err(CliError::config(format!(
                "cannot sweep {:?}; expected one of {}",
                self.param,
                SWEEPABLE.join(", ")
            )));
        }
        if !self.start.is_finite() || !self.stop.is_finite() {
            return Err(CliError::config("sweep bounds must be finite"));
        }
        Ok(())
    }

    pub fn values(&self) -> Vec<f64> {
        let n = self.count - 1;
        (0..self.count)
            .map(|i| {
                if i == n {
                    self.stop
                } else {
                    self.start + (self.stop - self.start) * i as f64 / n as f64
                }
            })
            .collect()
    }
}

/// Thread cap from `SPINCHAIN_THREADS`; 0 or unset means the default.
pub fn thread_cap() -> Result<usize> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(0),
        Ok(s) if s.trim().is_empty() => Ok(0),
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::config(format!("{THREADS_ENV} must be an integer, got {s:?}"))),
    }
}

/// One run per grid value, executed in parallel and emitted in grid order
/// as a long table: `sweep_value` followed by the evolve columns.
pub fn run_sweep(cfg: &ScenarioConfig, sweep: &SweepSpec) -> Result<String> {
    cfg.validate()?;
    sweep.validate()?;
    let configs = sweep
        .values()
        .into_iter()
        .map(|v| {
            let mut c = cfg.clone();
            c.set(&sweep.param, &format!("{v:e}"))?;
            c.validate()?;
            Ok((v, c))
        })
        .collect::<Result<Vec<_>>>()?;

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(thread_cap()?)
        .build()
        .map_err(|e| CliError::config(format!("thread pool: {e}")))?;
    let runs: Vec<Result<ScenarioRun>> = pool.install(|| {
        configs
            .par_iter()
            .map(|(_, c)| Ok(run_scenario(&c.scenario)?))
            .collect()
    });

    let mut header = vec!["sweep_value".to_string()];
    header.extend(table::run_header(cfg.scenario.compare_j0_zero));
    let mut rows = Vec::new();
    for ((value, _), run) in configs.iter().zip(runs) {
        for row in table::run_rows(&run?) {
            let mut full = vec![*value];
            full.extend(row);
            rows.push(full);
        }
    }
    Ok(table::render(&header, &rows))
}

/// Line chart of the requested columns against `t`.
pub fn emit_plot(csv: &str, columns: &[String]) -> Result<String> {
    let table = Table::parse(csv)?;
    if table.rows.is_empty() {
        return Err(spinchain::Error::EmptySeries.into());
    }
    let t = table
        .column("t")
        .ok_or_else(|| spinchain::Error::UnknownColumn("t".into()))?;
    let mut chart = LineChart {
        title: String::new(),
        x_label: "t".into(),
        y_label: columns.join(", "),
        series: Vec::new(),
    };
    for name in columns {
        let ys = table
            .column(name)
            .ok_or_else(|| spinchain::Error::UnknownColumn(name.clone()))?;
        chart.series.push(Series::new(name.clone(), &t, &ys));
    }
    Ok(chart.render_svg()?)
}

/// Columns for `evolve --plot`, adding `_ref` twins in comparison mode.
pub fn default_plot_columns(with_reference: bool) -> Vec<String> {
    let mut cols: Vec<String> = DEFAULT_PLOT_COLUMNS.iter().map(|s| s.to_string()).collect();
    if with_reference {
        cols.extend(DEFAULT_PLOT_COLUMNS.iter().map(|c| format!("{c}_ref")));
    }
    cols
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_grid_endpoints() {
        let s = SweepSpec {
            param: "b".into(),
            start: 0.0,
            stop: 4.0,
            count: 5,
        };
        assert_eq!(s.values(), vec![0.0, 1.0, 2.0, 3.0, 4.0]);
        let bad = SweepSpec { count: 1, ..s.clone() };
        assert!(bad.validate().is_err());
        let bad = SweepSpec {
            param: "mu".into(),
            ..s
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn plot_errors() {
        let cols = vec!["concurrence".to_string()];
        let header_only = "t,concurrence\n";
        assert!(matches!(
            emit_plot(header_only, &cols),
            Err(CliError::Core(spinchain::Error::EmptySeries))
        ));
        let csv = "t,concurrence\n0,1\n1,0.5\n";
        let missing = vec!["lqfi".to_string()];
        assert!(matches!(
            emit_plot(csv, &missing),
            Err(CliError::Core(spinchain::Error::UnknownColumn(_)))
        ));
        let svg = emit_plot(csv, &cols).unwrap();
        assert_eq!(svg.matches("<polyline").count(), 1);
    }
}
