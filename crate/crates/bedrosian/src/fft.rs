//! Internal d-dimensional FFT helpers on row-major buffers.
//!
//! Buffers are indexed in "natural" order (signed bin index ascending per
//! axis, the same layout as [`RegionMask`](crate::mask::RegionMask)).
//! [`half_shift`] converts between natural order and the DFT's native order
//! where position `p` corresponds to signed index `p mod n`; for even `n` the
//! permutation is its own inverse.

use num_complex::Complex64;
use rustfft::FftPlanner;

/// Swap the two halves of every axis (natural order <-> DFT order).
pub fn half_shift(data: &[Complex64], n: usize, dim: usize) -> Vec<Complex64> {
    let total = data.len();
    debug_assert_eq!(total, n.pow(dim as u32));
    let half = n / 2;
    let mut out = vec![Complex64::default(); total];
    for (flat, &v) in data.iter().enumerate() {
        // shift each per-axis digit by n/2 mod n, innermost digit first
        let mut rem = flat;
        let mut target = 0usize;
        let mut stride = 1usize;
        for _ in 0..dim {
            let digit = rem % n;
            rem /= n;
            target += ((digit + half) % n) * stride;
            stride *= n;
        }
        out[target] = v;
    }
    out
}

/// In-place unnormalized DFT (or inverse DFT) along every axis of a row-major
/// `n^dim` buffer in DFT order.
pub fn dft_nd(data: &mut [Complex64], n: usize, dim: usize, inverse: bool) {
    let total = data.len();
    debug_assert_eq!(total, n.pow(dim as u32));
    let mut planner = FftPlanner::<f64>::new();
    let fft = if inverse {
        planner.plan_fft_inverse(n)
    } else {
        planner.plan_fft_forward(n)
    };
    let mut line = vec![Complex64::default(); n];
    // axis `a` counted with axis 0 slowest; its stride is n^(dim-1-a)
    for axis in 0..dim {
        let stride = n.pow((dim - 1 - axis) as u32);
        let lines = total / n;
        for l in 0..lines {
            let lo = l % stride;
            let hi = l / stride;
            let start = hi * stride * n + lo;
            for (t, slot) in line.iter_mut().enumerate() {
                *slot = data[start + t * stride];
            }
            fft.process(&mut line);
            for (t, &v) in line.iter().enumerate() {
                data[start + t * stride] = v;
            }
        }
    }
}

/// Unnormalized DFT of a natural-order buffer, returned in natural order.
pub fn dft_natural(data: &[Complex64], n: usize, dim: usize, inverse: bool) -> Vec<Complex64> {
    let mut buf = half_shift(data, n, dim);
    dft_nd(&mut buf, n, dim, inverse);
    half_shift(&buf, n, dim)
}
