//! Existence decision for nontrivial operators satisfying the identity.

use num_complex::Complex64;
use serde::Serialize;

use crate::decomposition::CharacteristicDecomposition;
use crate::mask::robust_positive_measure;
use crate::multiplier::{MultiplierField, MultiplierKind};

/// Why a nontrivial operator exists (or `None` when it does not).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExistenceReason {
    MultipleClasses,
    FreeRegionRobust,
    None,
}

#[derive(Debug, Clone)]
pub struct ExistenceReport {
    pub exists_nontrivial: bool,
    pub reason: ExistenceReason,
    pub class_count: usize,
    pub free_region_measure: f64,
    pub free_region_robust: bool,
    /// A piecewise-constant multiplier witnessing existence: distinct
    /// constants per merged class, zero on the free region. Present iff
    /// `exists_nontrivial`.
    pub witness: Option<MultiplierField>,
}

/// A nontrivial multiplier exists iff at least two merged classes carry
/// independent constants, or the free region robustly has positive measure
/// (so a multiplier can vary there). When both hold, `multiple_classes` is
/// reported.
pub fn existence_decision(decomp: &CharacteristicDecomposition) -> ExistenceReport {
    let class_count = decomp.class_count();
    let free_robust = robust_positive_measure(&decomp.free_region);
    let (exists, reason) = if class_count >= 2 {
        (true, ExistenceReason::MultipleClasses)
    } else if free_robust {
        (true, ExistenceReason::FreeRegionRobust)
    } else {
        (false, ExistenceReason::None)
    };

    let witness = exists.then(|| {
        let grid = decomp.base_grid;
        let mut values = vec![Complex64::default(); grid.total_bins()];
        for (q, class) in decomp.classes.iter().enumerate() {
            let c = Complex64::new((q + 1) as f64, 0.0);
            for flat in class.window_mask.occupied_flats() {
                values[flat] = c;
            }
        }
        let mut field = MultiplierField::from_values(&grid, values)
            .expect("witness values are finite by construction");
        field.set_kind(MultiplierKind::PiecewiseConstant);
        field
    });

    ExistenceReport {
        exists_nontrivial: exists,
        reason,
        class_count,
        free_region_measure: decomp.free_region.measure(),
        free_region_robust: free_robust,
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::characteristic_decomposition;
    use crate::grid::FrequencyGrid;
    use crate::mask::rasterize;
    use crate::multiplier::structural_bedrosian_check;
    use crate::region::RegionDescriptor;

    #[test]
    fn separated_balls_give_no_operator() {
        // |z| > r: the lone characteristic set swallows the window
        let g = FrequencyGrid::new(2, 128, 8.0).unwrap();
        let z = [1.41, 0.62];
        let a = rasterize(&RegionDescriptor::ball(&z, 1.0), &g);
        let b = rasterize(
            &RegionDescriptor::complement(RegionDescriptor::ball(&[-z[0], -z[1]], 1.0)),
            &g,
        );
        let d = characteristic_decomposition(&a, &b).unwrap();
        let report = existence_decision(&d);
        assert_eq!(report.class_count, 1);
        assert!(!report.exists_nontrivial);
        assert_eq!(report.reason, ExistenceReason::None);
        assert!(report.witness.is_none());
    }

    #[test]
    fn half_line_split_gives_two_classes() {
        let g = FrequencyGrid::new(1, 512, 32.0).unwrap();
        let a = rasterize(&RegionDescriptor::ball(&[0.5], 1.0), &g);
        let b = rasterize(
            &RegionDescriptor::complement(RegionDescriptor::ball(&[-0.5], 1.0)),
            &g,
        );
        let d = characteristic_decomposition(&a, &b).unwrap();
        let report = existence_decision(&d);
        assert!(report.exists_nontrivial);
        assert_eq!(report.reason, ExistenceReason::MultipleClasses);
        assert_eq!(report.class_count, 2);
        let witness = report.witness.unwrap();
        let verdict = structural_bedrosian_check(&witness, &d, 0.0);
        assert!(verdict.pass);
    }

    #[test]
    fn robust_free_ball_gives_existence() {
        let g = FrequencyGrid::new(2, 128, 8.0).unwrap();
        let z = [0.5, 0.0];
        let a = rasterize(&RegionDescriptor::ball(&z, 1.0), &g);
        let b = rasterize(
            &RegionDescriptor::complement(RegionDescriptor::ball(&[-z[0], -z[1]], 1.97)),
            &g,
        );
        let d = characteristic_decomposition(&a, &b).unwrap();
        let report = existence_decision(&d);
        assert!(report.exists_nontrivial);
        assert_eq!(report.reason, ExistenceReason::FreeRegionRobust);
        assert_eq!(report.class_count, 1);
        let witness = report.witness.unwrap();
        // exact pass at zero tolerance, and non-constant over the window
        assert!(structural_bedrosian_check(&witness, &d, 0.0).pass);
        let first = witness.value(0);
        assert!(witness.values().iter().any(|&v| v != first));
    }
}
