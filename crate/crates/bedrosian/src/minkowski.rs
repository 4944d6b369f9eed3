//! Discrete Minkowski sums of region masks.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fft::dft_nd;
use crate::grid::FrequencyGrid;
use crate::mask::RegionMask;

/// Bin-exact Minkowski sum: a bin of `out` at coordinate `xi` is occupied iff
/// occupied bins `alpha` of `a` and `beta` of `b` satisfy
/// `alpha + beta = xi` in bin-index arithmetic.
///
/// `a` and `b` must share a grid; `out` must use the same bin step with
/// half-width at least twice the inputs' (the usual choice is
/// `a.grid().doubled()`), so every index sum is representable and the
/// convolution below cannot wrap.
///
/// Computed as an indicator convolution via FFT: the convolution values are
/// pair counts, which are integers, so thresholding at 0.5 recovers the exact
/// support despite floating-point round-off.
pub fn minkowski_sum(a: &RegionMask, b: &RegionMask, out: &FrequencyGrid) -> Result<RegionMask> {
    if a.grid() != b.grid() {
        return Err(Error::GridMismatch(
            "minkowski_sum inputs live on different grids".to_string(),
        ));
    }
    if !a.grid().same_lattice(out) {
        return Err(Error::GridMismatch(
            "minkowski_sum output grid has a different bin step".to_string(),
        ));
    }
    if out.half_width() + 1e-12 * out.half_width() < 2.0 * a.grid().half_width() {
        return Err(Error::GridMismatch(format!(
            "minkowski_sum output window half-width {} is too small (need >= {})",
            out.half_width(),
            2.0 * a.grid().half_width()
        )));
    }

    let m = out.bins_per_axis();
    let dim = out.dim();
    let total = out.total_bins();

    // Indicator buffers in DFT order: signed index s goes to digit s mod m.
    let place = |mask: &RegionMask| -> Vec<Complex64> {
        let mut buf = vec![Complex64::default(); total];
        for idx in mask.occupied_indices() {
            let mut flat = 0usize;
            for &k in idx[..dim].iter() {
                let digit = k.rem_euclid(m as i64) as usize;
                flat = flat * m + digit;
            }
            buf[flat] = Complex64::new(1.0, 0.0);
        }
        buf
    };

    let mut fa = place(a);
    let mut fb = place(b);
    dft_nd(&mut fa, m, dim, false);
    dft_nd(&mut fb, m, dim, false);
    for (x, y) in fa.iter_mut().zip(&fb) {
        *x *= y;
    }
    dft_nd(&mut fa, m, dim, true);

    let scale = 1.0 / total as f64;
    let mut result = RegionMask::empty(out);
    for (flat, idx) in out.iter_bins() {
        let mut dft_flat = 0usize;
        for &k in idx[..dim].iter() {
            dft_flat = dft_flat * m + k.rem_euclid(m as i64) as usize;
        }
        if fa[dft_flat].re * scale > 0.5 {
            result.set(flat, true);
        }
    }
    result.set_clipped(a.clipped() || b.clipped());
    Ok(result)
}
