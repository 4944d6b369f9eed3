//! Command orchestration behind the `bedrosian` binary.
//!
//! Exit-code contract: 0 for pass / exists, 1 for checked-and-failed (or
//! does not exist), 2 for invalid input. Reports are deterministic JSON:
//! identical configuration and seed give byte-identical documents.

use std::path::{Path, PathBuf};

use crate::config::AnalysisConfig;
use crate::decomposition::characteristic_decomposition;
use crate::error::{Error, Result};
use crate::existence::existence_decision;
use crate::hilbert_support::hilbert_support_test;
use crate::multiplier::structural_bedrosian_check;
use crate::raster;
use crate::report::{
    DecompositionSummary, ExistenceSummary, RunReport, StructuralSummary, SupportSummary,
    VerificationSummary,
};
use crate::scenarios;
use crate::signal::verify_bedrosian;

/// Flags shared by the config-driven subcommands; each `Option` overrides
/// the corresponding config field.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub seed: Option<u64>,
    pub trials: Option<u32>,
    pub tol: Option<f64>,
}

impl Overrides {
    fn apply(&self, config: &mut AnalysisConfig) {
        if let Some(seed) = self.seed {
            config.seed = seed;
        }
        if let Some(trials) = self.trials {
            config.trials = trials;
        }
        if let Some(tol) = self.tol {
            config.tolerances.constancy_tol = tol;
            config.tolerances.residual_tol = tol;
        }
    }
}

/// Output of one command: the report plus the process exit code.
pub struct CommandOutput {
    pub report: RunReport,
    /// CSV trial table, produced by `verify`.
    pub csv: Option<String>,
}

impl CommandOutput {
    pub fn exit_code(&self) -> i32 {
        self.report.exit_code
    }
}

/// Decompose the configured pair and report components, classes, and the
/// free region; with `raster_dir`, dump the labeled structures.
pub fn cmd_analyze(config: &AnalysisConfig, raster_dir: Option<&Path>) -> Result<CommandOutput> {
    let prepared = config.prepare(true, false)?;
    let (a, b) = (prepared.set_a.unwrap(), prepared.set_b.unwrap());
    let decomp = characteristic_decomposition(&a, &b)?;
    let mut report = RunReport::new("analyze", Some(&prepared.grid), config.echo());
    report.decomposition = Some(DecompositionSummary::from(&decomp));
    if a.clipped() || b.clipped() {
        report
            .warnings
            .push("a support was truncated to the window; topology outside is invisible".into());
    }
    if let Some(dir) = raster_dir {
        raster::export_decomposition(dir, &decomp)?;
    }
    report.status = "ok".into();
    report.exit_code = 0;
    Ok(CommandOutput { report, csv: None })
}

/// Decide whether a nontrivial operator exists for the pair. Exit 0 when it
/// does, 1 when it does not.
pub fn cmd_decide(config: &AnalysisConfig, raster_dir: Option<&Path>) -> Result<CommandOutput> {
    let prepared = config.prepare(true, false)?;
    let (a, b) = (prepared.set_a.unwrap(), prepared.set_b.unwrap());
    let decomp = characteristic_decomposition(&a, &b)?;
    let existence = existence_decision(&decomp);
    let mut report = RunReport::new("decide", Some(&prepared.grid), config.echo());
    report.decomposition = Some(DecompositionSummary::from(&decomp));
    report.existence = Some(ExistenceSummary::from(&existence));
    if let Some(dir) = raster_dir {
        raster::export_decomposition(dir, &decomp)?;
    }
    if existence.exists_nontrivial {
        report.status = "exists".into();
        report.exit_code = 0;
    } else {
        report.status = "not_exists".into();
        report.exit_code = 1;
    }
    Ok(CommandOutput { report, csv: None })
}

/// Structural verdict for the configured multiplier. Exit 0 pass, 1 fail.
pub fn cmd_check(config: &AnalysisConfig, raster_dir: Option<&Path>) -> Result<CommandOutput> {
    let prepared = config.prepare(true, true)?;
    let (a, b) = (prepared.set_a.unwrap(), prepared.set_b.unwrap());
    let m = prepared.multiplier.unwrap();
    let decomp = characteristic_decomposition(&a, &b)?;
    let verdict = structural_bedrosian_check(&m, &decomp, config.tolerances.constancy_tol);
    let mut report = RunReport::new("check", Some(&prepared.grid), config.echo());
    report.decomposition = Some(DecompositionSummary::from(&decomp));
    report.structural = Some(StructuralSummary::from(&verdict));
    if let Some(dir) = raster_dir {
        raster::export_decomposition(dir, &decomp)?;
    }
    report.status = if verdict.pass { "pass" } else { "fail" }.into();
    report.exit_code = if verdict.pass { 0 } else { 1 };
    Ok(CommandOutput { report, csv: None })
}

/// Seeded residual trials for the configured multiplier. Exit 0 iff the
/// maximum residual stays within the tolerance.
pub fn cmd_verify(config: &AnalysisConfig) -> Result<CommandOutput> {
    let prepared = config.prepare(true, true)?;
    let (a, b) = (prepared.set_a.unwrap(), prepared.set_b.unwrap());
    let m = prepared.multiplier.unwrap();
    let verification = verify_bedrosian(
        &m,
        &a,
        &b,
        config.tolerances.residual_tol,
        config.trials,
        config.seed,
    )?;
    let mut report = RunReport::new("verify", Some(&prepared.grid), config.echo());
    if verification.inputs_clipped {
        report
            .warnings
            .push("supports were clipped to the central half-window before synthesis".into());
    }
    report.verification = Some(VerificationSummary::from(&verification));
    report.status = if verification.pass { "pass" } else { "fail" }.into();
    report.exit_code = if verification.pass { 0 } else { 1 };
    Ok(CommandOutput {
        report,
        csv: Some(verification.to_csv()),
    })
}

/// Support-set criterion for the partial Hilbert transforms. Exit 0 pass,
/// 1 fail.
pub fn cmd_hsupport(config: &AnalysisConfig) -> Result<CommandOutput> {
    let prepared = config.prepare(true, false)?;
    let (a, b) = (prepared.set_a.unwrap(), prepared.set_b.unwrap());
    let support = hilbert_support_test(&a, &b)?;
    let mut report = RunReport::new("hsupport", Some(&prepared.grid), config.echo());
    report.support_test = Some(SupportSummary::from(&support));
    report.status = if support.pass { "pass" } else { "fail" }.into();
    report.exit_code = if support.pass { 0 } else { 1 };
    Ok(CommandOutput { report, csv: None })
}

/// Run the built-in example catalog and compare against the expected
/// verdicts. Exit 0 iff every selected scenario matches.
pub fn cmd_examples(selector: &str) -> Result<CommandOutput> {
    let outcomes = scenarios::run_selector(selector)?;
    let all_match = outcomes.iter().all(|o| o.matched());
    let mut report = RunReport::new(
        "examples",
        None,
        serde_json::json!({ "selector": selector }),
    );
    report.examples = Some(outcomes.iter().map(|o| o.to_summary()).collect());
    report.status = if all_match { "pass" } else { "mismatch" }.into();
    report.exit_code = if all_match { 0 } else { 1 };
    Ok(CommandOutput { report, csv: None })
}

/// Which subcommand to run, with its inputs resolved.
pub enum Invocation {
    Analyze { config: PathBuf, raster: Option<PathBuf> },
    Decide { config: PathBuf, raster: Option<PathBuf> },
    Check { config: PathBuf, raster: Option<PathBuf> },
    Verify { config: PathBuf },
    Hsupport { config: PathBuf },
    Examples { selector: String },
}

fn load_config(path: &Path, overrides: &Overrides) -> Result<AnalysisConfig> {
    let mut config = AnalysisConfig::load(path)?;
    overrides.apply(&mut config);
    Ok(config)
}

/// Run an invocation, write the report (stdout or `--out`), and return the
/// process exit code. Invalid input of any kind maps to exit 2 with a
/// one-line diagnostic on stderr.
pub fn run(invocation: Invocation, overrides: Overrides, out: Option<&Path>) -> i32 {
    let result = (|| -> Result<CommandOutput> {
        match &invocation {
            Invocation::Analyze { config, raster } => {
                cmd_analyze(&load_config(config, &overrides)?, raster.as_deref())
            }
            Invocation::Decide { config, raster } => {
                cmd_decide(&load_config(config, &overrides)?, raster.as_deref())
            }
            Invocation::Check { config, raster } => {
                cmd_check(&load_config(config, &overrides)?, raster.as_deref())
            }
            Invocation::Verify { config } => cmd_verify(&load_config(config, &overrides)?),
            Invocation::Hsupport { config } => cmd_hsupport(&load_config(config, &overrides)?),
            Invocation::Examples { selector } => cmd_examples(selector),
        }
    })();

    match result {
        Ok(output) => {
            let json = output.report.to_json_pretty();
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, json + "\n") {
                        eprintln!("bedrosian: cannot write report: {e}");
                        return 2;
                    }
                    if let Some(csv) = &output.csv {
                        let csv_path = path.with_extension("csv");
                        if let Err(e) = std::fs::write(&csv_path, csv) {
                            eprintln!("bedrosian: cannot write CSV: {e}");
                            return 2;
                        }
                    }
                }
                None => println!("{json}"),
            }
            output.exit_code()
        }
        Err(e) => {
            eprintln!("bedrosian: {e}");
            exit_code_for(&e)
        }
    }
}

fn exit_code_for(_e: &Error) -> i32 {
    // every library error reaching the CLI boundary is an input problem
    2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::AnalysisConfig;

    fn classical_config() -> AnalysisConfig {
        AnalysisConfig::from_json(
            r#"{
                "grid": {"dim": 1, "bins_per_axis": 1024, "half_width": 32.0},
                "set_a": {"box": {"lo": [-1.0], "hi": [2.0]}},
                "set_b": {"complement": {"box": {"lo": [-2.0], "hi": [1.0]}}},
                "multiplier": {"kind": "hilbert"},
                "trials": 3
            }"#,
        )
        .unwrap()
    }

    #[test]
    fn check_passes_classical_pair() {
        let out = cmd_check(&classical_config(), None).unwrap();
        assert_eq!(out.exit_code(), 0);
        assert_eq!(out.report.status, "pass");
    }

    #[test]
    fn verify_passes_classical_pair() {
        let out = cmd_verify(&classical_config()).unwrap();
        assert_eq!(out.exit_code(), 0);
        let csv = out.csv.unwrap();
        assert_eq!(csv.lines().count(), 4);
    }

    #[test]
    fn decide_exit_codes() {
        let mut cfg = classical_config();
        cfg.multiplier = None;
        let out = cmd_decide(&cfg, None).unwrap();
        assert_eq!(out.exit_code(), 0);
        assert_eq!(out.report.status, "exists");
    }

    #[test]
    fn missing_multiplier_is_invalid() {
        let mut cfg = classical_config();
        cfg.multiplier = None;
        assert!(cmd_check(&cfg, None).is_err());
    }

    #[test]
    fn examples_selector_errors() {
        assert!(cmd_examples("nope").is_err());
        let out = cmd_examples("4.4i").unwrap();
        assert_eq!(out.exit_code(), 0);
    }
}
