use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use spinchain_cli::commands::{self, SweepSpec};
use spinchain_cli::config::ScenarioConfig;
use spinchain_cli::validate::{run_validate, ValidateOptions};
use spinchain_cli::{CliError, Result};

#[derive(Debug, Parser)]
#[command(name = "spinchain", version, about = "Open two-spin XYZ dynamics and quantum-correlation measures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Integrate one scenario and write its time series as CSV.
    Evolve {
        #[arg(long)]
        config: PathBuf,
        /// Output CSV (defaults to the config's output_path, else stdout).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write an SVG chart next to the CSV.
        #[arg(long)]
        plot: bool,
        /// Override a config key, e.g. --set b=1.5 (repeatable).
        #[arg(long = "set", value_name = "KEY=VALUE")]
        overrides: Vec<String>,
    },
    /// Run a scenario over an evenly spaced grid of one parameter.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        param: String,
        #[arg(long, allow_negative_numbers = true)]
        from: f64,
        #[arg(long, allow_negative_numbers = true)]
        to: f64,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long = "set", value_name = "KEY=VALUE")]
        overrides: Vec<String>,
    },
    /// Run the built-in self-checks.
    Validate {
        /// Fewer random draws.
        #[arg(long)]
        quick: bool,
        /// Integrator step for the dynamics checks.
        #[arg(long)]
        dt: Option<f64>,
        /// Decoherence rate for the base parameter set.
        #[arg(long)]
        gamma: Option<f64>,
    },
    /// Draw columns of a CSV against t as an SVG line chart.
    Plot {
        #[arg(long)]
        csv: PathBuf,
        #[arg(long, value_delimiter = ',')]
        columns: Vec<String>,
        #[arg(long)]
        out: PathBuf,
    },
}

fn load_config(path: &Path, overrides: &[String]) -> Result<ScenarioConfig> {
    let mut cfg = ScenarioConfig::parse(&commands::read_file(path)?)?;
    for kv in overrides {
        cfg.apply_override(kv)?;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => commands::write_file(path, text),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::io("<stdout>", e)),
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Evolve {
            config,
            out,
            plot,
            overrides,
        } => {
            let cfg = load_config(&config, &overrides)?;
            let out = out.or_else(|| cfg.output_path.clone());
            let (run, csv) = commands::run_evolve(&cfg)?;
            emit(out.as_deref(), &csv)?;
            let events = commands::events_of(&run);
            for e in &events.events {
                eprintln!("event {} t={:.6}", e.kind, e.t);
            }
            if plot || cfg.plot {
                let columns = commands::default_plot_columns(cfg.scenario.compare_j0_zero);
                let svg = commands::emit_plot(&csv, &columns)?;
                let svg_path = match &out {
                    Some(p) => commands::svg_path_for(p),
                    None => commands::svg_path_for(&config),
                };
                commands::write_file(&svg_path, &svg)?;
                eprintln!("wrote {}", svg_path.display());
            }
            Ok(())
        }
        Command::Sweep {
            config,
            param,
            from,
            to,
            count,
            out,
            overrides,
        } => {
            let cfg = load_config(&config, &overrides)?;
            let spec = SweepSpec {
                param,
                start: from,
                stop: to,
                count,
            };
            let csv = commands::run_sweep(&cfg, &spec)?;
            emit(out.as_deref(), &csv)
        }
        Command::Validate { quick, dt, gamma } => {
            if let Some(dt) = dt {
                if !(dt.is_finite() && dt > 0.0) {
                    return Err(CliError::config(format!("--dt must be positive, got {dt}")));
                }
            }
            if let Some(g) = gamma {
                if !(g.is_finite() && g >= 0.0) {
                    return Err(CliError::config(format!("--gamma must be >= 0, got {g}")));
                }
            }
            let report = run_validate(&ValidateOptions { quick, dt, gamma });
            print!("{report}");
            match report.failures() {
                0 => Ok(()),
                n => Err(CliError::Validation(n)),
            }
        }
        Command::Plot { csv, columns, out } => {
            if columns.is_empty() {
                return Err(CliError::config("--columns must name at least one column"));
            }
            let text = commands::read_file(&csv)?;
            let svg = commands::emit_plot(&text, &columns)?;
            commands::write_file(&out, &svg)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
