//! Built-in example catalog: canonical support-set pairs with known verdicts,
//! runnable as executable regressions via the `examples` subcommand.
//!
//! Each scenario fixes a configuration and the expected outcome (existence,
//! class count and — where the geometry pins them — the exact class masks).
//! Box extents are chosen off the bin lattice (for example 1.03 at bin step
//! 1/16) so that rasterized open-set boundaries stay exact; quadrant corners
//! sit at the origin bin by nature, where sums lose one boundary bin, and the
//! affected checks allow exactly that one-bin margin.

use crate::config::{AnalysisConfig, GridConfig, ToleranceConfig};
use crate::decomposition::{characteristic_decomposition, CharacteristicDecomposition};
use crate::error::{Error, Result};
use crate::existence::{existence_decision, ExistenceReason};
use crate::grid::FrequencyGrid;
use crate::hilbert_support::hilbert_support_test;
use crate::mask::{rasterize, RegionMask};
use crate::multiplier::{structural_bedrosian_check, MultiplierField, MultiplierSpec};
use crate::region::RegionDescriptor;
use crate::report::ScenarioOutcomeSummary;

/// Expected verdict of one scenario.
#[derive(Debug, Clone)]
pub struct Expected {
    pub exists: bool,
    pub class_count: usize,
    pub reason: ExistenceReason,
    /// When set, every partial Hilbert multiplier must pass (or fail) the
    /// structural check.
    pub partial_hilberts_pass: Option<bool>,
    /// When set, the support-set criterion must agree.
    pub hsupport_pass: Option<bool>,
}

type ShapeCheck = fn(&CharacteristicDecomposition) -> Vec<String>;

pub struct Scenario {
    pub id: &'static str,
    pub title: &'static str,
    pub config: AnalysisConfig,
    pub expected: Expected,
    /// Extra geometric assertions on the computed decomposition; returns
    /// human-readable mismatch descriptions.
    pub shape_check: Option<ShapeCheck>,
}

pub const SELECTORS: &[&str] = &[
    "4.1i", "4.1ii", "4.1iii", "4.2", "4.3", "4.4i", "4.4ii", "4.5", "4.6",
];

fn config(dim: usize, set_a: RegionDescriptor, set_b: RegionDescriptor) -> AnalysisConfig {
    AnalysisConfig {
        grid: GridConfig {
            dim,
            bins_per_axis: None,
            half_width: None,
        },
        set_a: Some(set_a),
        set_b: Some(set_b),
        multiplier: None,
        tolerances: ToleranceConfig::default(),
        trials: 10,
        seed: 0,
    }
}

/// Ball pair: A is a ball, B the exterior of its reflection.
fn ball_pair(center: &[f64], radius: f64, margin: f64) -> (RegionDescriptor, RegionDescriptor) {
    let reflected: Vec<f64> = center.iter().map(|c| -c).collect();
    (
        RegionDescriptor::ball(center, radius),
        RegionDescriptor::complement(RegionDescriptor::ball(&reflected, radius + margin)),
    )
}

/// Extent used by the rectangular scenarios; off the bin lattice of the
/// default 2-D grid (step 1/16).
const BOX_EXTENT: f64 = 1.03;

fn check_half_lines(d: &CharacteristicDecomposition) -> Vec<String> {
    let mut mismatches = Vec::new();
    let g = &d.base_grid;
    for (sign, label) in [(1i64, "positive"), (-1i64, "negative")] {
        let expected: Vec<bool> = g
            .iter_bins()
            .map(|(_, idx)| idx[0].signum() == sign)
            .collect();
        if !d
            .classes
            .iter()
            .any(|c| c.window_mask.occupancy() == &expected[..])
        {
            mismatches.push(format!("no class equals the {label} half-line mask"));
        }
    }
    mismatches
}

fn check_annulus_class(d: &CharacteristicDecomposition) -> Vec<String> {
    // single class {|xi| > 0.97} up to the rasterization ring near the inner
    // boundary; free region contains the inner ball
    let mut mismatches = Vec::new();
    let g = &d.base_grid;
    let eps = 0.97;
    let outer = 1.35;
    let class = &d.classes[0].window_mask;
    for (flat, idx) in g.iter_bins() {
        let p = g.coord_of(&idx);
        let r = (p[0] * p[0] + p[1] * p[1]).sqrt();
        if class.get(flat) && r <= eps {
            mismatches.push(format!("class reaches into the free ball at radius {r:.4}"));
            break;
        }
        if !class.get(flat) && r >= outer {
            mismatches.push(format!("class misses a bin at radius {r:.4}"));
            break;
        }
        if d.free_region.get(flat) && r >= outer {
            mismatches.push(format!("free region reaches radius {r:.4}"));
            break;
        }
        if !d.free_region.get(flat) && r < eps - g.bin_step() {
            mismatches.push(format!("free region misses a bin at radius {r:.4}"));
            break;
        }
    }
    mismatches
}

fn check_quadrant_classes(d: &CharacteristicDecomposition) -> Vec<String> {
    let mut mismatches = Vec::new();
    let g = &d.base_grid;
    for signs in [[1i8, 1], [1, -1], [-1, 1], [-1, -1]] {
        let quadrant = rasterize(&RegionDescriptor::quadrant(&signs), g);
        if !d
            .classes
            .iter()
            .any(|c| c.window_mask.occupancy() == quadrant.occupancy())
        {
            mismatches.push(format!("no class equals open quadrant {signs:?}"));
        }
    }
    mismatches
}

fn check_half_space_class(d: &CharacteristicDecomposition) -> Vec<String> {
    // lone class {xi_1 > 0}: contained in the rasterized half-space, and
    // covering it except the one-bin corner losses at the quadrant boundary
    // and at the window frame
    let mut mismatches = Vec::new();
    let g = &d.base_grid;
    let class = &d.classes[0].window_mask;
    let step = g.bin_step();
    let hw = g.half_width();
    for (flat, idx) in g.iter_bins() {
        let p = g.coord_of(&idx);
        if class.get(flat) && p[0] <= 0.0 {
            mismatches.push(format!("class crosses the boundary at xi_1 = {}", p[0]));
            break;
        }
        let interior = p[0] >= 2.0 * step
            && p.iter()
                .take(2)
                .all(|&x| x >= -hw + step && x <= hw - 2.0 * step);
        if interior && !class.get(flat) {
            mismatches.push(format!(
                "class misses interior half-space bin at ({}, {})",
                p[0], p[1]
            ));
            break;
        }
    }
    mismatches
}

fn check_merged_from_four(d: &CharacteristicDecomposition) -> Vec<String> {
    let mut mismatches = Vec::new();
    if d.a_labels.count() != 4 {
        mismatches.push(format!(
            "expected 4 components of A, found {}",
            d.a_labels.count()
        ));
    }
    if d.sets.len() < 2 {
        mismatches.push(format!(
            "expected several characteristic sets before merging, found {}",
            d.sets.len()
        ));
    }
    mismatches
}

/// The full catalog in selector order.
pub fn catalog() -> Vec<Scenario> {
    let mut scenarios = Vec::new();

    // Ball and exterior ball, centers separated by more than the radius:
    // one characteristic set swallows the window.
    let (a, b) = ball_pair(&[1.41, 0.62], 1.0, 0.0);
    scenarios.push(Scenario {
        id: "4.1i",
        title: "ball vs exterior ball, separated centers",
        config: config(2, a, b),
        expected: Expected {
            exists: false,
            class_count: 1,
            reason: ExistenceReason::None,
            partial_hilberts_pass: None,
            hsupport_pass: None,
        },
        shape_check: None,
    });

    // Same in one dimension with overlapping centers: the sum splits at the
    // origin into two half-lines.
    let (a, b) = ball_pair(&[0.5], 1.0, 0.0);
    scenarios.push(Scenario {
        id: "4.1ii",
        title: "interval vs exterior interval on the line",
        config: config(1, a, b),
        expected: Expected {
            exists: true,
            class_count: 2,
            reason: ExistenceReason::MultipleClasses,
            partial_hilberts_pass: Some(true),
            hsupport_pass: Some(true),
        },
        shape_check: Some(check_half_lines),
    });

    // Two or more dimensions: the punctured window stays connected, and a
    // single bin cannot carry positive measure.
    let (a, b) = ball_pair(&[0.5, 0.0], 1.0, 0.0);
    scenarios.push(Scenario {
        id: "4.1iii",
        title: "ball vs exterior ball in the plane",
        config: config(2, a, b),
        expected: Expected {
            exists: false,
            class_count: 1,
            reason: ExistenceReason::None,
            partial_hilberts_pass: Some(false),
            hsupport_pass: Some(false),
        },
        shape_check: None,
    });

    // Widening the exterior by a margin frees a robust ball around the
    // origin.
    let (a, b) = ball_pair(&[0.5, 0.0], 1.0, 0.97);
    scenarios.push(Scenario {
        id: "4.2",
        title: "ball vs widened exterior ball",
        config: config(2, a, b),
        expected: Expected {
            exists: true,
            class_count: 1,
            reason: ExistenceReason::FreeRegionRobust,
            partial_hilberts_pass: None,
            hsupport_pass: None,
        },
        shape_check: Some(check_annulus_class),
    });

    // Open box vs per-axis exterior: the classes are exactly the open
    // quadrants and every partial Hilbert transform works.
    let e = BOX_EXTENT;
    scenarios.push(Scenario {
        id: "4.3",
        title: "box vs per-axis exterior (quadrant classes)",
        config: config(
            2,
            RegionDescriptor::rect(&[-e, -e], &[e, e]),
            RegionDescriptor::axis_exterior(&[e, e], &[e, e]),
        ),
        expected: Expected {
            exists: true,
            class_count: 4,
            reason: ExistenceReason::MultipleClasses,
            partial_hilberts_pass: Some(true),
            hsupport_pass: Some(true),
        },
        shape_check: Some(check_quadrant_classes),
    });

    // Opposite quadrants: sums fill the window, nothing is free.
    scenarios.push(Scenario {
        id: "4.4i",
        title: "quadrant vs opposite quadrant",
        config: config(
            2,
            RegionDescriptor::quadrant(&[1, 1]),
            RegionDescriptor::quadrant(&[-1, -1]),
        ),
        expected: Expected {
            exists: false,
            class_count: 1,
            reason: ExistenceReason::None,
            partial_hilberts_pass: None,
            hsupport_pass: None,
        },
        shape_check: None,
    });

    // Non-opposite quadrants: one class, the half-space on the shared sign
    // axis, leaving a robust free half-space.
    scenarios.push(Scenario {
        id: "4.4ii",
        title: "quadrant vs non-opposite quadrant",
        config: config(
            2,
            RegionDescriptor::quadrant(&[1, 1]),
            RegionDescriptor::quadrant(&[1, -1]),
        ),
        expected: Expected {
            exists: true,
            class_count: 1,
            reason: ExistenceReason::FreeRegionRobust,
            partial_hilberts_pass: None,
            hsupport_pass: None,
        },
        shape_check: Some(check_half_space_class),
    });

    // Roles swapped: the four characteristic sets all meet the central box
    // and merge into one class with no robust free region.
    scenarios.push(Scenario {
        id: "4.5",
        title: "per-axis exterior vs box (roles swapped)",
        config: config(
            2,
            RegionDescriptor::axis_exterior(&[e, e], &[e, e]),
            RegionDescriptor::rect(&[-e, -e], &[e, e]),
        ),
        expected: Expected {
            exists: false,
            class_count: 1,
            reason: ExistenceReason::None,
            partial_hilberts_pass: None,
            hsupport_pass: None,
        },
        shape_check: Some(check_merged_from_four),
    });

    // Two bounded balls: all characteristic sets bounded, so most of the
    // window is free.
    scenarios.push(Scenario {
        id: "4.6",
        title: "two bounded balls",
        config: config(
            2,
            RegionDescriptor::ball(&[-2.1, 0.3], 0.8),
            RegionDescriptor::ball(&[3.05, 1.1], 0.6),
        ),
        expected: Expected {
            exists: true,
            class_count: 1,
            reason: ExistenceReason::FreeRegionRobust,
            partial_hilberts_pass: None,
            hsupport_pass: None,
        },
        shape_check: None,
    });

    scenarios
}

/// Outcome of one scenario run, with observations and mismatch notes.
#[derive(Debug, Clone)]
pub struct ScenarioOutcome {
    pub id: String,
    pub title: String,
    pub expected: Expected,
    pub observed_exists: bool,
    pub observed_classes: usize,
    pub observed_reason: ExistenceReason,
    pub mismatches: Vec<String>,
}

impl ScenarioOutcome {
    pub fn matched(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn to_summary(&self) -> ScenarioOutcomeSummary {
        ScenarioOutcomeSummary {
            id: self.id.clone(),
            title: self.title.clone(),
            expected_exists: self.expected.exists,
            observed_exists: self.observed_exists,
            expected_classes: self.expected.class_count,
            observed_classes: self.observed_classes,
            matched: self.matched(),
            mismatches: self.mismatches.clone(),
        }
    }
}

fn partial_hilberts_all_pass(
    grid: &FrequencyGrid,
    decomp: &CharacteristicDecomposition,
    tol: f64,
) -> Result<bool> {
    for axis in 1..=grid.dim() {
        let m = MultiplierField::make(&MultiplierSpec::PartialHilbert { axis }, grid)?;
        if !structural_bedrosian_check(&m, decomp, tol).pass {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Run one scenario and compare against its expectations.
pub fn run_scenario(scenario: &Scenario) -> Result<ScenarioOutcome> {
    let prepared = scenario.config.prepare(true, false)?;
    let (a, b): (&RegionMask, &RegionMask) = (
        prepared.set_a.as_ref().expect("catalog sets set_a"),
        prepared.set_b.as_ref().expect("catalog sets set_b"),
    );
    let decomp = characteristic_decomposition(a, b)?;
    let existence = existence_decision(&decomp);
    let mut mismatches = Vec::new();

    if existence.exists_nontrivial != scenario.expected.exists {
        mismatches.push(format!(
            "existence: expected {}, observed {}",
            scenario.expected.exists, existence.exists_nontrivial
        ));
    }
    if existence.class_count != scenario.expected.class_count {
        mismatches.push(format!(
            "merged classes: expected {}, observed {}",
            scenario.expected.class_count, existence.class_count
        ));
    }
    if existence.reason != scenario.expected.reason {
        mismatches.push(format!(
            "reason: expected {:?}, observed {:?}",
            scenario.expected.reason, existence.reason
        ));
    }
    if let Some(expected_pass) = scenario.expected.partial_hilberts_pass {
        let tol = scenario.config.tolerances.constancy_tol;
        let observed = partial_hilberts_all_pass(&prepared.grid, &decomp, tol)?;
        if observed != expected_pass {
            mismatches.push(format!(
                "partial Hilbert structural check: expected pass={expected_pass}, observed pass={observed}"
            ));
        }
    }
    if let Some(expected_pass) = scenario.expected.hsupport_pass {
        let report = hilbert_support_test(a, b)?;
        if report.pass != expected_pass {
            mismatches.push(format!(
                "support-set criterion: expected pass={expected_pass}, observed pass={}",
                report.pass
            ));
        }
    }
    if let Some(check) = scenario.shape_check {
        mismatches.extend(check(&decomp));
    }

    Ok(ScenarioOutcome {
        id: scenario.id.to_string(),
        title: scenario.title.to_string(),
        expected: scenario.expected.clone(),
        observed_exists: existence.exists_nontrivial,
        observed_classes: existence.class_count,
        observed_reason: existence.reason,
        mismatches,
    })
}

/// Run the scenarios named by a selector: one id or `all`.
pub fn run_selector(selector: &str) -> Result<Vec<ScenarioOutcome>> {
    let all = catalog();
    let chosen: Vec<&Scenario> = if selector == "all" {
        all.iter().collect()
    } else {
        let matched: Vec<&Scenario> = all.iter().filter(|s| s.id == selector).collect();
        if matched.is_empty() {
            return Err(Error::UnknownSelector(selector.to_string()));
        }
        matched
    };
    chosen.iter().map(|s| run_scenario(s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_ids_match_selectors() {
        let ids: Vec<&str> = catalog().iter().map(|s| s.id).collect();
        assert_eq!(ids, SELECTORS);
    }

    #[test]
    fn unknown_selector_is_an_error() {
        assert!(matches!(
            run_selector("9.9"),
            Err(Error::UnknownSelector(_))
        ));
    }

    #[test]
    fn quadrant_pair_scenario_runs() {
        let all = catalog();
        let s = all.iter().find(|s| s.id == "4.4i").unwrap();
        let outcome = run_scenario(s).unwrap();
        assert!(outcome.matched(), "mismatches: {:?}", outcome.mismatches);
    }
}
