//! Command-line front end. `main.rs` only calls [`main_with`].
//!
//! Exit codes: 0 success, 1 a checked property was falsified, 2 bad input,
//! 3 a budget was exceeded.

mod demo;
mod play;

use std::ffi::OsString;
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::diagonal::is_delta_baire;
use crate::finite_topology::{enumerate_spaces, FiniteSpace, PointSet, MAX_ENUMERATION_POINTS};
use crate::groups::{theorem1_harness, FiniteTopoGroup, GroupSource, HarnessConfig, HarnessError};
use crate::service::space_report;

pub use demo::Construction;
pub use play::{parse_point_set, parse_interval, GameScript, ScriptBackend, ScriptStrategy};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSIFIED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// Budgets and defaults shared by every command.
#[derive(Debug, Clone, PartialEq, Eq, Args, Serialize, Deserialize)]
pub struct Config {
    /// Seed for every randomized strategy.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Default number of rounds for plays.
    #[arg(long, global = true, default_value_t = 10)]
    pub horizon: usize,
    /// Largest carrier that scans may enumerate.
    #[arg(long, global = true, default_value_t = 5)]
    pub max_points: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: 0,
            format: Format::Text,
            horizon: 10,
            max_points: 5,
        }
    }
}

impl Config {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.horizon == 0 {
            return Err(CliError::input("--horizon must be positive"));
        }
        if self.max_points == 0 {
            return Err(CliError::input("--max-points must be positive"));
        }
        if self.max_points > MAX_ENUMERATION_POINTS {
            return Err(CliError::budget(format!(
                "--max-points {} exceeds the enumeration limit {MAX_ENUMERATION_POINTS}",
                self.max_points
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Parser)]
#[command(name = "baire-lab", version, about = "Delta-Baire spaces, topologized groups and topological games")]
pub struct Cli {
    #[command(flatten)]
    pub config: Config,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Finite spaces.
    #[command(subcommand)]
    Space(SpaceCmd),
    /// Finite topologized groups.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Witnesses on the Sorgenfrey line.
    #[command(subcommand)]
    Sorgenfrey(SorgenfreyCmd),
    /// Play games.
    #[command(subcommand)]
    Game(GameCmd),
    /// Run the local session API.
    Serve {
        #[arg(long, default_value_t = 8080, value_parser = clap::value_parser!(u16).range(1..))]
        port: u16,
    },
}

#[derive(Debug, Subcommand)]
pub enum SpaceCmd {
    /// Regularity, Baire and Delta-Baire checks for a space JSON file.
    Check { file: PathBuf },
    /// Check every labeled topology on `points` points.
    Scan {
        #[arg(long)]
        points: usize,
    },
    /// List the named spaces.
    Catalog,
}

#[derive(Debug, Subcommand)]
pub enum GroupCmd {
    /// Classify a group JSON file; with `--u`, run the inverse-continuity witness.
    Check {
        file: PathBuf,
        /// Open set around the identity, e.g. `0,1`.
        #[arg(long)]
        u: Option<String>,
    },
    /// Exhaustive scan over groups and topologies.
    Scan {
        #[arg(long)]
        max_order: usize,
        #[arg(long)]
        json_report: Option<PathBuf>,
        /// Every labeled group table instead of one per isomorphism class.
        #[arg(long)]
        all_labeled: bool,
        #[arg(long, default_value_t = 2_000_000)]
        max_instances: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum SorgenfreyCmd {
    /// Print the inversion, Delta-Baire failure and separation witnesses.
    Demo {
        /// Interval `a,b` for the failure pair.
        #[arg(long, default_value = "0,1")]
        w: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum GameCmd {
    /// Run a play from a script file or from named strategies.
    Play(play::PlayArgs),
    /// Instrumented transcript of one strategy construction.
    Demo {
        #[arg(long, value_enum)]
        construction: Construction,
    },
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn input(m: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INPUT,
            message: m.into(),
        }
    }

    pub fn budget(m: impl Into<String>) -> Self {
        CliError {
            code: EXIT_BUDGET,
            message: m.into(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::input(e.to_string())
    }
}

/// Output sinks and the input used for human moves.
pub struct Io<'a> {
    pub out: &'a mut dyn Write,
    pub err: &'a mut dyn Write,
    pub input: Box<dyn BufRead + Send>,
}

/// Parses `args` (program name first) and runs; returns the exit code.
pub fn main_with<I, T>(args: I, io: Io<'_>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let Io { out, err, input } = io;
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match run(&cli, out, err, input) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write, input: Box<dyn BufRead + Send>) -> Result<i32, CliError> {
    let cfg = &cli.config;
    cfg.validate()?;
    match &cli.command {
        Command::Space(c) => cmd_space(cfg, c, out),
        Command::Group(c) => cmd_group(cfg, c, out),
        Command::Sorgenfrey(SorgenfreyCmd::Demo { w }) => demo::cmd_sorgenfrey(cfg, w, out),
        Command::Game(GameCmd::Play(args)) => play::cmd_play(cfg, args, out, err, input),
        Command::Game(GameCmd::Demo { construction }) => demo::cmd_demo(cfg, *construction, out),
        Command::Serve { port } => cmd_serve(*port, err),
    }
}

pub(crate) fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

pub(crate) fn emit_json(out: &mut dyn Write, v: &serde_json::Value) -> Result<(), CliError> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("json values serialize"))?;
    Ok(())
}

fn fmt_opt_set(s: Option<PointSet>) -> String {
    s.map_or("none".into(), |s| s.to_string())
}

fn cmd_space(cfg: &Config, c: &SpaceCmd, out: &mut dyn Write) -> Result<i32, CliError> {
    match c {
        SpaceCmd::Check { file } => {
            let space: FiniteSpace = read_json(file)?;
            let report = space_report(&space);
            match cfg.format {
                Format::Json => emit_json(out, &report)?,
                Format::Text => {
                    writeln!(out, "points: {}", space.len())?;
                    for key in ["regular", "baire", "delta_baire"] {
                        writeln!(out, "{key}: {}", report[key])?;
                    }
                    let w: Option<PointSet> = serde_json::from_value(report["witness"].clone()).ok().flatten();
                    writeln!(out, "witness: {}", fmt_opt_set(w))?;
                }
            }
            Ok(EXIT_OK)
        }
        SpaceCmd::Scan { points } => {
            if *points > cfg.max_points {
                return Err(CliError::budget(format!(
                    "{points} points exceeds --max-points {}",
                    cfg.max_points
                )));
            }
            let spaces = enumerate_spaces(*points).map_err(|e| CliError::budget(e.to_string()))?;
            let regular = spaces.iter().filter(|s| s.is_regular()).count();
            let failures: Vec<&FiniteSpace> = spaces
                .iter()
                .filter(|s| !s.is_empty() && !is_delta_baire(s))
                .collect();
            let report = json!({
                "format": 1,
                "points": points,
                "spaces": spaces.len(),
                "regular": regular,
                "not_delta_baire": failures,
            });
            match cfg.format {
                Format::Json => emit_json(out, &report)?,
                Format::Text => {
                    writeln!(out, "points: {points}")?;
                    writeln!(out, "spaces: {}", spaces.len())?;
                    writeln!(out, "regular: {regular}")?;
                    writeln!(out, "not delta-Baire: {}", failures.len())?;
                }
            }
            Ok(if failures.is_empty() { EXIT_OK } else { EXIT_FALSIFIED })
        }
        SpaceCmd::Catalog => {
            let list: Vec<_> = crate::presets::space_catalog()
                .into_iter()
                .map(|(name, s)| json!({"id": name, "space": s}))
                .collect();
            match cfg.format {
                Format::Json => emit_json(out, &json!({"format": 1, "spaces": list}))?,
                Format::Text => {
                    for (name, s) in crate::presets::space_catalog() {
                        let nb: Vec<String> = s.min_nbhds().iter().map(|n| n.to_string()).collect();
                        writeln!(out, "{name:<20} {}", nb.join(" "))?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn cmd_group(cfg: &Config, c: &GroupCmd, out: &mut dyn Write) -> Result<i32, CliError> {
    match c {
        GroupCmd::Check { file, u } => {
            let g: FiniteTopoGroup = read_json(file)?;
            let cls = g.classify();
            let delta = is_delta_baire(g.space());
            let mut report = json!({
                "format": 1,
                "order": g.group().order(),
                "classification": cls,
                "translation_invariant": g.is_translation_invariant(),
                "regular": g.space().is_regular(),
                "delta_baire": delta,
            });
            if let Some(u) = u {
                let u = parse_point_set(u).map_err(CliError::input)?;
                let w = g
                    .inverse_continuity_witness(u)
                    .map_err(|e| CliError::input(e.to_string()))?;
                report["witness"] = serde_json::to_value(&w).expect("witness serializes");
            }
            match cfg.format {
                Format::Json => emit_json(out, &report)?,
                Format::Text => {
                    writeln!(out, "order: {}", g.group().order())?;
                    writeln!(out, "semitopological: {}", cls.semitopological)?;
                    writeln!(out, "paratopological: {}", cls.paratopological)?;
                    writeln!(out, "topological: {}", cls.topological)?;
                    writeln!(out, "regular: {}", report["regular"])?;
                    writeln!(out, "delta_baire: {delta}")?;
                    if let Some(w) = report.get("witness") {
                        writeln!(out, "V: {}", set_field(w, "v"))?;
                        writeln!(out, "W: {}", set_field(w, "w"))?;
                        writeln!(out, "P = W^-1 W: {}", set_field(w, "p"))?;
                    }
                }
            }
            let falsified = cls.paratopological && delta && !cls.topological;
            Ok(if falsified { EXIT_FALSIFIED } else { EXIT_OK })
        }
        GroupCmd::Scan {
            max_order,
            json_report,
            all_labeled,
            max_instances,
        } => {
            let config = HarnessConfig {
                max_order: *max_order,
                max_space_points: cfg.max_points,
                groups: if *all_labeled {
                    GroupSource::AllLabeled
                } else {
                    GroupSource::Catalog
                },
                max_instances: *max_instances,
            };
            let report = theorem1_harness(&config).map_err(|e| match e {
                HarnessError::Topology(_) => CliError::input(e.to_string()),
                _ => CliError::budget(e.to_string()),
            })?;
            if let Some(path) = json_report {
                let text = serde_json::to_string_pretty(&report).expect("reports serialize");
                std::fs::write(path, text + "\n").map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
            }
            match cfg.format {
                Format::Json => emit_json(out, &serde_json::to_value(&report).expect("reports serialize"))?,
                Format::Text => {
                    writeln!(out, "order  groups  spaces  instances  para  topo  para+nonregular  violations")?;
                    for o in &report.orders {
                        writeln!(
                            out,
                            "{:>5}  {:>6}  {:>6}  {:>9}  {:>4}  {:>4}  {:>15}  {:>10}",
                            o.order,
                            o.groups,
                            o.spaces,
                            o.instances,
                            o.paratopological,
                            o.topological,
                            o.paratopological_nonregular,
                            o.violations
                        )?;
                    }
                    writeln!(out, "violations: {}", report.total.violations)?;
                }
            }
            Ok(if report.passed() { EXIT_OK } else { EXIT_FALSIFIED })
        }
    }
}

fn set_field(v: &serde_json::Value, key: &str) -> String {
    serde_json::from_value::<PointSet>(v[key].clone()).map_or("?".into(), |s| s.to_string())
}

fn cmd_serve(port: u16, err: &mut dyn Write) -> Result<i32, CliError> {
    writeln!(err, "serving on 127.0.0.1:{port}")?;
    let rt = tokio::runtime::Builder::new_multi_thread()
        .enable_all()
        .build()
        .map_err(|e| CliError::input(e.to_string()))?;
    rt.block_on(crate::service::serve(port))
        .map_err(|e| CliError::input(format!("serve: {e}")))?;
    Ok(EXIT_OK)
}
