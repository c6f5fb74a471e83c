use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::args::{Generator, Grid, MethodArg};
use crate::error::{CliError, CliResult};

pub const TOOL: &str = "swiftwalk";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Everything that determines a run's outputs.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: &'static str,
    pub graph: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phases: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator: Option<Generator>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<MethodArg>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub from: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_max: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub steps: Option<usize>,
    pub tol: f64,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    pub out: String,
}

impl RunConfig {
    pub fn new(command: &'static str, graph: &Path, tol: f64, seed: u64, out: &Path) -> CliResult<Self> {
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(CliError::Usage(format!("--tol must be positive, got {tol}")));
        }
        Ok(RunConfig {
            command,
            graph: display(graph),
            phases: None,
            generator: None,
            method: None,
            from: None,
            t_max: None,
            steps: None,
            tol,
            seed,
            samples: None,
            out: display(out),
        })
    }

    pub fn with_grid(mut self, grid: &Grid) -> CliResult<Self> {
        if grid.steps < 2 {
            return Err(CliError::Usage(format!("--steps must be at least 2, got {}", grid.steps)));
        }
        if !(grid.t_max > 0.0 && grid.t_max.is_finite()) {
            return Err(CliError::Usage(format!("--t-max must be positive, got {}", grid.t_max)));
        }
        self.t_max = Some(grid.t_max);
        self.steps = Some(grid.steps);
        Ok(self)
    }

    pub fn with_phases(mut self, phases: Option<&PathBuf>) -> Self {
        self.phases = phases.map(|p| display(p));
        self
    }
}

fn display(p: &Path) -> String {
    p.to_string_lossy().into_owned()
}

/// Artifact envelope: tool, version and config ahead of the payload.
#[derive(Serialize)]
pub struct Envelope<'a, T: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub config: &'a RunConfig,
    #[serde(flatten)]
    pub payload: T,
}

pub fn envelope<T: Serialize>(config: &RunConfig, payload: T) -> Envelope<'_, T> {
    Envelope { tool: TOOL, version: VERSION, config, payload }
}

pub fn write_file(dir: &Path, name: &str, contents: &str) -> CliResult<PathBuf> {
    std::fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.to_path_buf(), source })?;
    let path = dir.join(name);
    std::fs::write(&path, contents).map_err(|source| CliError::Io { path: path.clone(), source })?;
    Ok(path)
}

pub fn write_json<T: Serialize>(dir: &Path, name: &str, value: &T) -> CliResult<PathBuf> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| CliError::Numerical(e.to_string()))?;
    text.push('\n');
    write_file(dir, name, &text)
}
