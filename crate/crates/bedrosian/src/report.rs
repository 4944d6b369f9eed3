//! JSON run reports. Field layout is stable and timestamp-free so identical
//! runs produce byte-identical documents; non-finite bounds serialize as the
//! string `"inf"`.

use serde::{Serialize, Serializer};

use crate::decomposition::CharacteristicDecomposition;
use crate::existence::{ExistenceReason, ExistenceReport};
use crate::grid::FrequencyGrid;
use crate::hilbert_support::HilbertSupportReport;
use crate::mask::robust_positive_measure;
use crate::multiplier::StructuralVerdict;
use crate::pointwise::PointwiseReport;
use crate::signal::{TrialRecord, VerificationReport};

/// A real number that renders as `"inf"` / `"-inf"` when non-finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtReal(pub f64);

impl Serialize for ExtReal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0.is_finite() {
            s.serialize_f64(self.0)
        } else if self.0 > 0.0 {
            s.serialize_str("inf")
        } else {
            s.serialize_str("-inf")
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GridSummary {
    pub dim: usize,
    pub bins_per_axis: usize,
    pub half_width: f64,
    pub bin_step: f64,
}

impl From<&FrequencyGrid> for GridSummary {
    fn from(g: &FrequencyGrid) -> Self {
        Self {
            dim: g.dim(),
            bins_per_axis: g.bins_per_axis(),
            half_width: g.half_width(),
            bin_step: g.bin_step(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassSummary {
    pub class_id: usize,
    /// 1-based characteristic-set ids merged into this class.
    pub members: Vec<usize>,
    /// Measure of the class mask on the doubled window.
    pub measure: f64,
    /// Measure of the restriction to the base window.
    pub window_measure: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct FreeRegionSummary {
    pub bin_count: usize,
    pub measure: f64,
    pub robust: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecompositionSummary {
    pub a_components: usize,
    pub b_components: usize,
    pub sum_components: usize,
    pub class_count: usize,
    pub classes: Vec<ClassSummary>,
    pub free_region: FreeRegionSummary,
    pub a_clipped: bool,
    pub b_clipped: bool,
}

impl From<&CharacteristicDecomposition> for DecompositionSummary {
    fn from(d: &CharacteristicDecomposition) -> Self {
        Self {
            a_components: d.a_labels.count(),
            b_components: d.b_labels.count(),
            sum_components: d.sum_labels.count(),
            class_count: d.class_count(),
            classes: d
                .classes
                .iter()
                .enumerate()
                .map(|(i, c)| ClassSummary {
                    class_id: i + 1,
                    members: c.members.clone(),
                    measure: c.mask.measure(),
                    window_measure: c.window_mask.measure(),
                })
                .collect(),
            free_region: FreeRegionSummary {
                bin_count: d.free_region.occupied_count(),
                measure: d.free_region.measure(),
                robust: robust_positive_measure(&d.free_region),
            },
            a_clipped: d.a_mask.clipped(),
            b_clipped: d.b_mask.clipped(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassVerdictSummary {
    pub class_id: usize,
    pub measure: f64,
    pub mean_re: f64,
    pub mean_im: f64,
    pub max_dev: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct StructuralSummary {
    pub tolerance: f64,
    pub pass: bool,
    pub max_dev: f64,
    pub classes: Vec<ClassVerdictSummary>,
}

impl From<&StructuralVerdict> for StructuralSummary {
    fn from(v: &StructuralVerdict) -> Self {
        Self {
            tolerance: v.tolerance,
            pass: v.pass,
            max_dev: v.max_dev(),
            classes: v
                .classes
                .iter()
                .map(|c| ClassVerdictSummary {
                    class_id: c.class_id,
                    measure: c.measure,
                    mean_re: c.mean.re,
                    mean_im: c.mean.im,
                    max_dev: c.max_dev,
                    pass: c.constant,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessEntry {
    pub class_id: usize,
    pub value_re: f64,
    pub value_im: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExistenceSummary {
    pub exists_nontrivial: bool,
    pub reason: ExistenceReason,
    pub class_count: usize,
    pub free_region_measure: f64,
    pub free_region_robust: bool,
    /// Piecewise table of the witness multiplier (value per merged class;
    /// zero on the free region), present iff a nontrivial operator exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<WitnessEntry>>,
}

impl From<&ExistenceReport> for ExistenceSummary {
    fn from(r: &ExistenceReport) -> Self {
        Self {
            exists_nontrivial: r.exists_nontrivial,
            reason: r.reason,
            class_count: r.class_count,
            free_region_measure: r.free_region_measure,
            free_region_robust: r.free_region_robust,
            witness: r.witness.as_ref().map(|_| {
                (1..=r.class_count)
                    .map(|q| WitnessEntry {
                        class_id: q,
                        value_re: q as f64,
                        value_im: 0.0,
                    })
                    .collect()
            }),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct QuadrantSummary {
    pub signs: Vec<i8>,
    pub infima: Vec<ExtReal>,
    pub empty: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SupportSummary {
    pub a: Vec<ExtReal>,
    pub b: Vec<ExtReal>,
    pub quadrants: Vec<QuadrantSummary>,
    pub a_inclusion_ok: bool,
    pub b_inclusion_ok: bool,
    pub pass: bool,
}

impl From<&HilbertSupportReport> for SupportSummary {
    fn from(r: &HilbertSupportReport) -> Self {
        Self {
            a: r.a_bounds.iter().map(|&v| ExtReal(v)).collect(),
            b: r.b_bounds.iter().map(|&v| ExtReal(v)).collect(),
            quadrants: r
                .quadrants
                .iter()
                .map(|q| QuadrantSummary {
                    signs: q.signs.clone(),
                    infima: q.infima.iter().map(|&v| ExtReal(v)).collect(),
                    empty: q.empty,
                })
                .collect(),
            a_inclusion_ok: r.a_inclusion_ok,
            b_inclusion_ok: r.b_inclusion_ok,
            pass: r.pass,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationSummary {
    pub tolerance: f64,
    pub trials: Vec<TrialRecord>,
    pub max_residual: f64,
    pub pass: bool,
    pub anti_aliasing_ok: bool,
    pub inputs_clipped: bool,
}

impl From<&VerificationReport> for VerificationSummary {
    fn from(r: &VerificationReport) -> Self {
        Self {
            tolerance: r.tolerance,
            trials: r.trials.clone(),
            max_residual: r.max_residual,
            pass: r.pass,
            anti_aliasing_ok: r.anti_aliasing_ok,
            inputs_clipped: r.inputs_clipped,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PointwiseSummary {
    pub pass: bool,
    pub worst_dev: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub worst_bin: Option<Vec<i64>>,
    pub pairs: usize,
}

impl PointwiseSummary {
    pub fn from_report(r: &PointwiseReport, dim: usize) -> Self {
        Self {
            pass: r.pass,
            worst_dev: r.worst_dev,
            worst_bin: r.worst_bin.map(|b| b[..dim].to_vec()),
            pairs: r.pairs,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ScenarioOutcomeSummary {
    pub id: String,
    pub title: String,
    pub expected_exists: bool,
    pub observed_exists: bool,
    pub expected_classes: usize,
    pub observed_classes: usize,
    pub matched: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub mismatches: Vec<String>,
}

/// Top-level report emitted by every subcommand.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub status: String,
    pub exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid: Option<GridSummary>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<DecompositionSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structural: Option<StructuralSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub existence: Option<ExistenceSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub support_test: Option<SupportSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pointwise: Option<PointwiseSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub examples: Option<Vec<ScenarioOutcomeSummary>>,
    pub config: serde_json::Value,
}

impl RunReport {
    pub fn new(command: &str, grid: Option<&FrequencyGrid>, config: serde_json::Value) -> Self {
        Self {
            command: command.to_string(),
            status: String::new(),
            exit_code: 0,
            grid: grid.map(GridSummary::from),
            warnings: Vec::new(),
            decomposition: None,
            structural: None,
            existence: None,
            support_test: None,
            verification: None,
            pointwise: None,
            examples: None,
            config,
        }
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
