//! Independent pointwise criterion: `m` satisfies the identity for `(A, B)`
//! iff for every frequency `xi`, `m` is constant on `(xi - A)` intersected
//! with `B` and equal to `m(xi)` there. This re-derives the verdict without
//! the characteristic-set machinery, so it serves as a cross-check oracle.

use crate::error::{Error, Result};
use crate::grid::BinIndex;
use crate::mask::RegionMask;
use crate::multiplier::MultiplierField;

#[derive(Debug, Clone, Copy)]
pub struct PointwiseReport {
    pub pass: bool,
    /// The window bin `xi` with the largest deviation, if any pair exists.
    pub worst_bin: Option<BinIndex>,
    pub worst_dev: f64,
    /// Number of `(xi, eta)` pairs examined.
    pub pairs: usize,
}

/// Exhaustively check `|m(eta) - m(xi)| <= tol` for every window bin `xi`
/// and `eta` in `(xi - A)` intersected with `B`. Pairs are enumerated as
/// `xi = alpha + beta` over occupied bins of `A` and `B`; sums falling
/// outside the window are dropped.
pub fn pointwise_criterion_oracle(
    m: &MultiplierField,
    a: &RegionMask,
    b: &RegionMask,
    tol: f64,
) -> Result<PointwiseReport> {
    if a.grid() != b.grid() || m.grid() != a.grid() {
        return Err(Error::GridMismatch(
            "pointwise oracle needs one shared grid".to_string(),
        ));
    }
    let grid = m.grid();
    let a_flats: Vec<(usize, BinIndex)> =
        a.occupied_flats().map(|f| (f, grid.index_of(f))).collect();
    let mut worst_dev: f64 = 0.0;
    let mut worst_bin = None;
    let mut pairs = 0usize;
    for eta_flat in b.occupied_flats() {
        let eta = grid.index_of(eta_flat);
        let m_eta = m.value(eta_flat);
        for (_, alpha) in &a_flats {
            let xi = [alpha[0] + eta[0], alpha[1] + eta[1], alpha[2] + eta[2]];
            let Some(xi_flat) = grid.flat_of(&xi) else {
                continue;
            };
            pairs += 1;
            let dev = (m.value(xi_flat) - m_eta).norm();
            if dev > worst_dev {
                worst_dev = dev;
                worst_bin = Some(xi);
            }
        }
    }
    Ok(PointwiseReport {
        pass: worst_dev <= tol,
        worst_bin,
        worst_dev,
        pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::FrequencyGrid;
    use crate::mask::rasterize;
    use crate::multiplier::{MultiplierField, MultiplierSpec};
    use crate::region::RegionDescriptor;
    use num_complex::Complex64;

    #[test]
    fn constant_multiplier_always_passes() {
        let g = FrequencyGrid::new(2, 32, 4.0).unwrap();
        let a = rasterize(&RegionDescriptor::ball(&[0.4, 0.0], 0.9), &g);
        let b = rasterize(&RegionDescriptor::ball(&[-1.0, 1.0], 0.7), &g);
        let c = MultiplierField::from_values(
            &g,
            vec![Complex64::new(2.0, -1.0); g.total_bins()],
        )
        .unwrap();
        let r = pointwise_criterion_oracle(&c, &a, &b, 0.0).unwrap();
        assert!(r.pass);
        assert_eq!(r.worst_dev, 0.0);
        assert!(r.pairs > 0);
    }

    #[test]
    fn hilbert_passes_classical_pair() {
        let g = FrequencyGrid::new(1, 512, 32.0).unwrap();
        let a = rasterize(&RegionDescriptor::rect(&[-1.0], &[2.0]), &g);
        let b = rasterize(
            &RegionDescriptor::complement(RegionDescriptor::rect(&[-2.0], &[1.0])),
            &g,
        );
        let m = MultiplierField::make(&MultiplierSpec::Hilbert, &g).unwrap();
        let r = pointwise_criterion_oracle(&m, &a, &b, 1e-9).unwrap();
        assert!(r.pass, "worst dev {} at {:?}", r.worst_dev, r.worst_bin);
    }

    #[test]
    fn partial_hilbert_fails_on_touching_balls() {
        let g = FrequencyGrid::new(2, 64, 8.0).unwrap();
        let z = [0.5, 0.0];
        let a = rasterize(&RegionDescriptor::ball(&z, 1.0), &g);
        let b = rasterize(
            &RegionDescriptor::complement(RegionDescriptor::ball(&[-z[0], -z[1]], 1.0)),
            &g,
        );
        let m = MultiplierField::make(&MultiplierSpec::PartialHilbert { axis: 1 }, &g).unwrap();
        let r = pointwise_criterion_oracle(&m, &a, &b, 1e-9).unwrap();
        assert!(!r.pass);
        assert!(r.worst_dev > 0.5);
        assert!(r.worst_bin.is_some());
    }
}
