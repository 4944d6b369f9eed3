//! Desk-scale check of the convolution support law: for compactly supported
//! weights, the convex hull of `supp(phi * psi)` equals the Minkowski sum of
//! the hulls of `supp(phi)` and `supp(psi)`.

use crate::error::{Error, Result};
use crate::geom::{convex_hull_2d, hull_hausdorff_distance, GeoPoint};
use crate::mask::RegionMask;

#[derive(Debug, Clone, Copy)]
pub struct TitchmarshReport {
    pub pass: bool,
    /// Hausdorff distance between the two hulls, in coordinate units.
    pub hull_discrepancy: f64,
    /// Threshold used for the pass verdict, `1.5 * bin_step`.
    pub threshold: f64,
}

/// Support threshold relative to the convolution peak.
const SUPPORT_THRESHOLD: f64 = 1e-9;

fn gaussian_weights(mask: &RegionMask) -> Vec<(usize, f64)> {
    let grid = mask.grid();
    let sigma = grid.half_width() / 4.0;
    mask.occupied_flats()
        .map(|flat| {
            let p = grid.coord_of(&grid.index_of(flat));
            let n2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
            (flat, (-n2 / (2.0 * sigma * sigma)).exp())
        })
        .collect()
}

fn hull_reduce(points: &[GeoPoint], dim: usize) -> Vec<GeoPoint> {
    match dim {
        1 => {
            let lo = points.iter().map(|p| p[0]).fold(f64::INFINITY, f64::min);
            let hi = points.iter().map(|p| p[0]).fold(f64::NEG_INFINITY, f64::max);
            vec![[lo, 0.0, 0.0], [hi, 0.0, 0.0]]
        }
        2 => {
            let hull = convex_hull_2d(points);
            if hull.is_empty() {
                points.to_vec()
            } else {
                hull
            }
        }
        // dimension 3 keeps the raw points; the distance routine works on
        // generating sets directly
        _ => points.to_vec(),
    }
}

/// Build Gaussian-weighted indicators of `a` and `b`, convolve them directly
/// (no transforms), threshold the support, and compare the support hull with
/// the Minkowski sum of the input hulls by Hausdorff distance. Passes when
/// the discrepancy stays within `1.5 * bin_step`.
///
/// Inputs must be nonempty, unclipped (genuinely bounded sets), and share a
/// grid; the convolution lives on the doubled window.
pub fn titchmarsh_check(a: &RegionMask, b: &RegionMask) -> Result<TitchmarshReport> {
    if a.grid() != b.grid() {
        return Err(Error::GridMismatch(
            "titchmarsh_check inputs live on different grids".to_string(),
        ));
    }
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyInput(
            "titchmarsh_check needs nonempty supports".to_string(),
        ));
    }
    if a.clipped() || b.clipped() {
        return Err(Error::InvalidConfig {
            path: "titchmarsh".to_string(),
            reason: "supports must be bounded within the window (clipped = false)".to_string(),
        });
    }

    let grid = a.grid();
    let dim = grid.dim();
    let sum_grid = grid.doubled();

    // direct convolution over occupied-bin pairs
    let wa = gaussian_weights(a);
    let wb = gaussian_weights(b);
    let mut conv = vec![0.0f64; sum_grid.total_bins()];
    for (fa, va) in &wa {
        let ia = grid.index_of(*fa);
        for (fb, vb) in &wb {
            let ib = grid.index_of(*fb);
            let sum = [ia[0] + ib[0], ia[1] + ib[1], ia[2] + ib[2]];
            let flat = sum_grid
                .flat_of(&sum)
                .expect("sum of window bins fits the doubled window");
            conv[flat] += va * vb;
        }
    }

    let peak = conv.iter().cloned().fold(0.0, f64::max);
    let cut = SUPPORT_THRESHOLD * peak;
    let conv_support: Vec<GeoPoint> = conv
        .iter()
        .enumerate()
        .filter(|(_, &v)| v > cut)
        .map(|(flat, _)| sum_grid.coord_of(&sum_grid.index_of(flat)))
        .collect();

    // Minkowski sum of the two input hulls = hull of pairwise vertex sums
    let pts = |mask: &RegionMask| -> Vec<GeoPoint> {
        mask.occupied_flats()
            .map(|f| grid.coord_of(&grid.index_of(f)))
            .collect()
    };
    let hull_a = hull_reduce(&pts(a), dim);
    let hull_b = hull_reduce(&pts(b), dim);
    let mut hull_sum: Vec<GeoPoint> = Vec::with_capacity(hull_a.len() * hull_b.len());
    for u in &hull_a {
        for v in &hull_b {
            hull_sum.push([u[0] + v[0], u[1] + v[1], u[2] + v[2]]);
        }
    }

    let discrepancy = hull_hausdorff_distance(&conv_support, &hull_sum, dim);
    let threshold = 1.5 * grid.bin_step();
    Ok(TitchmarshReport {
        pass: discrepancy <= threshold,
        hull_discrepancy: discrepancy,
        threshold,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::FrequencyGrid;
    use crate::mask::rasterize;
    use crate::region::RegionDescriptor;

    #[test]
    fn interval_hulls_add() {
        // (0,1) * (2,3): support hull [2,4] equals [0,1] + [2,3]
        let g = FrequencyGrid::new(1, 128, 8.0).unwrap();
        let a = rasterize(&RegionDescriptor::rect(&[0.0], &[1.0]), &g);
        let b = rasterize(&RegionDescriptor::rect(&[2.0], &[3.0]), &g);
        let r = titchmarsh_check(&a, &b).unwrap();
        assert!(r.pass, "discrepancy {}", r.hull_discrepancy);
    }

    #[test]
    fn single_bins_sum_to_single_bin() {
        let g = FrequencyGrid::new(2, 32, 4.0).unwrap();
        let mut a = RegionMask::empty(&g);
        a.set(g.flat_of(&[3, -2, 0]).unwrap(), true);
        let mut b = RegionMask::empty(&g);
        b.set(g.flat_of(&[-1, 5, 0]).unwrap(), true);
        let r = titchmarsh_check(&a, &b).unwrap();
        assert!(r.pass);
        assert!(r.hull_discrepancy < 1e-12);
    }

    #[test]
    fn disjoint_balls_agree() {
        let g = FrequencyGrid::new(2, 128, 8.0).unwrap();
        let a = rasterize(&RegionDescriptor::ball(&[-2.0, 0.0], 1.0), &g);
        let b = rasterize(&RegionDescriptor::ball(&[2.5, 1.0], 1.0), &g);
        let r = titchmarsh_check(&a, &b).unwrap();
        assert!(r.pass, "discrepancy {}", r.hull_discrepancy);
    }

    #[test]
    fn clipped_inputs_are_rejected() {
        let g = FrequencyGrid::new(1, 64, 8.0).unwrap();
        let a = rasterize(&RegionDescriptor::rect(&[0.0], &[1.0]), &g);
        let clipped = rasterize(
            &RegionDescriptor::complement(RegionDescriptor::rect(&[-1.0], &[1.0])),
            &g,
        );
        assert!(titchmarsh_check(&a, &clipped).is_err());
        assert!(titchmarsh_check(&a, &RegionMask::empty(&g)).is_err());
    }
}
