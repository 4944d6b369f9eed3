//! Support-set criterion for the partial Hilbert transforms.
//!
//! All partial Hilbert transforms satisfy the identity for `(A, B)` exactly
//! when `A` fits a closed box `prod [-a_j, b_j]` and `B` avoids the open gaps
//! `prod R \ (-b_j, a_j)`, for bounds recovered from the infima of `B` over
//! the open hyper-quadrants: with `B_nu = B` intersected with quadrant
//! `Q_nu` and `c^nu_j = inf { nu_j xi_j : xi in B_nu }`,
//! `a_j = min { c^nu_j : nu_j = +1 }` and `b_j = min { c^nu_j : nu_j = -1 }`.

use crate::error::{Error, Result};
use crate::grid::MAX_DIM;
use crate::mask::RegionMask;

/// Infima of one quadrant slice of `B`.
#[derive(Debug, Clone)]
pub struct QuadrantInfima {
    /// Sign vector of the quadrant, entries +1/-1.
    pub signs: Vec<i8>,
    /// `c^nu_j` per axis; `f64::INFINITY` when the slice is empty.
    pub infima: Vec<f64>,
    pub empty: bool,
}

#[derive(Debug, Clone)]
pub struct HilbertSupportReport {
    /// `a_j` per axis; infinite when no quadrant slice constrains it.
    pub a_bounds: Vec<f64>,
    /// `b_j` per axis.
    pub b_bounds: Vec<f64>,
    pub quadrants: Vec<QuadrantInfima>,
    /// Every occupied `A` bin lies in the closed box `prod [-a_j, b_j]`.
    pub a_inclusion_ok: bool,
    /// Every occupied `B` bin avoids `prod (-b_j + step, a_j - step)`; the
    /// one-bin slack absorbs the boundary rounding of the rasterized infima.
    pub b_inclusion_ok: bool,
    pub pass: bool,
}

/// Evaluate the support-set criterion on rasterized `A` and `B`.
///
/// Bins with any zero coordinate are excluded from every quadrant slice (the
/// quadrants are open), but still participate in the inclusion checks.
/// An empty `B` yields all bounds infinite and passes trivially.
pub fn hilbert_support_test(a: &RegionMask, b: &RegionMask) -> Result<HilbertSupportReport> {
    if a.grid() != b.grid() {
        return Err(Error::GridMismatch(
            "hilbert_support_test inputs live on different grids".to_string(),
        ));
    }
    let grid = a.grid();
    let dim = grid.dim();
    let step = grid.bin_step();

    let quadrant_count = 1usize << dim;
    let signs_of = |q: usize| -> Vec<i8> {
        (0..dim)
            .map(|axis| if (q >> axis) & 1 == 0 { 1i8 } else { -1 })
            .collect()
    };

    let mut quadrants: Vec<QuadrantInfima> = (0..quadrant_count)
        .map(|q| QuadrantInfima {
            signs: signs_of(q),
            infima: vec![f64::INFINITY; dim],
            empty: true,
        })
        .collect();

    for idx in b.occupied_indices() {
        if idx[..dim].contains(&0) {
            continue;
        }
        let mut q = 0usize;
        for (axis, &k) in idx[..dim].iter().enumerate() {
            if k < 0 {
                q |= 1 << axis;
            }
        }
        let p = grid.coord_of(&idx);
        let slice = &mut quadrants[q];
        slice.empty = false;
        for (axis, inf) in slice.infima.iter_mut().enumerate() {
            let v = slice.signs[axis] as f64 * p[axis];
            if v < *inf {
                *inf = v;
            }
        }
    }

    let mut a_bounds = vec![f64::INFINITY; dim];
    let mut b_bounds = vec![f64::INFINITY; dim];
    for slice in &quadrants {
        for axis in 0..dim {
            if slice.signs[axis] == 1 {
                a_bounds[axis] = a_bounds[axis].min(slice.infima[axis]);
            } else {
                b_bounds[axis] = b_bounds[axis].min(slice.infima[axis]);
            }
        }
    }

    let mut a_inclusion_ok = true;
    for idx in a.occupied_indices() {
        let p = grid.coord_of(&idx);
        for axis in 0..dim {
            if p[axis] < -a_bounds[axis] || p[axis] > b_bounds[axis] {
                a_inclusion_ok = false;
            }
        }
    }

    let mut b_inclusion_ok = true;
    for idx in b.occupied_indices() {
        let p = grid.coord_of(&idx);
        for axis in 0..dim {
            let lo = -b_bounds[axis] + step;
            let hi = a_bounds[axis] - step;
            if p[axis] > lo && p[axis] < hi {
                b_inclusion_ok = false;
            }
        }
    }

    Ok(HilbertSupportReport {
        a_bounds,
        b_bounds,
        quadrants,
        a_inclusion_ok,
        b_inclusion_ok,
        pass: a_inclusion_ok && b_inclusion_ok,
    })
}

/// True when every occupied bin of `mask` lies strictly inside one open
/// hyper-quadrant (no zero coordinates, one sign pattern).
pub fn contained_in_single_quadrant(mask: &RegionMask) -> bool {
    let dim = mask.grid().dim();
    let mut pattern: Option<[i64; MAX_DIM]> = None;
    for idx in mask.occupied_indices() {
        let mut signs = [0i64; MAX_DIM];
        for axis in 0..dim {
            signs[axis] = idx[axis].signum();
            if signs[axis] == 0 {
                return false;
            }
        }
        match pattern {
            None => pattern = Some(signs),
            Some(p) if p == signs => {}
            Some(_) => return false,
        }
    }
    true
}
