//! Band-limited signal synthesis and numerical verification of the identity
//! `T(fg) = f (Tg)` by residual measurement.
//!
//! Signals live on the dual spatial grid of a [`FrequencyGrid`]: `N^d`
//! complex samples with spacing `pi / half_width` per axis, sample `n` at
//! `x = n * spatial_step` for signed `n`. Transforms use the unitary-on-L2
//! convention `(2 pi)^{-d/2} integral f(x) e^{-i x xi} dx`, discretized so
//! that a forward-then-inverse round trip is exact up to floating-point
//! round-off and the discrete Parseval identity holds between the spatial and
//! spectral norms.
//!
//! Supports are restricted to the central half-window `[-W/2, W/2)^d`: the
//! spectrum of a sample-wise product is the circular convolution of the
//! spectra, and the restriction makes circular convolution equal the linear
//! one, so no spectral content wraps. Violations are hard errors.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fft::dft_natural;
use crate::grid::FrequencyGrid;
use crate::mask::RegionMask;
use crate::multiplier::MultiplierField;

/// Complex samples on the dual spatial grid, natural (signed ascending)
/// order.
#[derive(Debug, Clone)]
pub struct SpatialSignal {
    grid: FrequencyGrid,
    samples: Vec<Complex64>,
}

impl SpatialSignal {
    pub fn from_samples(grid: &FrequencyGrid, samples: Vec<Complex64>) -> Result<Self> {
        if samples.len() != grid.total_bins() {
            return Err(Error::GridMismatch(format!(
                "sample buffer has {} entries, grid has {}",
                samples.len(),
                grid.total_bins()
            )));
        }
        Ok(Self {
            grid: *grid,
            samples,
        })
    }

    pub fn grid(&self) -> &FrequencyGrid {
        &self.grid
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    /// Discrete L2 norm: `sqrt(sum |f|^2 * dx^d)`.
    pub fn norm2(&self) -> f64 {
        let cell = self.grid.spatial_step().powi(self.grid.dim() as i32);
        (self.samples.iter().map(|v| v.norm_sqr()).sum::<f64>() * cell).sqrt()
    }

    /// Sample-wise product with another signal on the same grid.
    pub fn pointwise_product(&self, other: &SpatialSignal) -> Result<SpatialSignal> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch(
                "signal product needs one grid".to_string(),
            ));
        }
        let samples = self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| a * b)
            .collect();
        Ok(SpatialSignal {
            grid: self.grid,
            samples,
        })
    }

    pub fn linear_combination(
        &self,
        alpha: Complex64,
        other: &SpatialSignal,
        beta: Complex64,
    ) -> Result<SpatialSignal> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch(
                "signal combination needs one grid".to_string(),
            ));
        }
        let samples = self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| alpha * a + beta * b)
            .collect();
        Ok(SpatialSignal {
            grid: self.grid,
            samples,
        })
    }

    /// L2 distance to another signal.
    pub fn distance(&self, other: &SpatialSignal) -> Result<f64> {
        let diff = self.linear_combination(
            Complex64::new(1.0, 0.0),
            other,
            Complex64::new(-1.0, 0.0),
        )?;
        Ok(diff.norm2())
    }
}

/// Forward transform of a signal: spectrum values per frequency bin, natural
/// order, scaled so Parseval holds against `spectral_norm2`.
pub fn forward_spectrum(signal: &SpatialSignal) -> Vec<Complex64> {
    let g = signal.grid();
    let d = g.dim();
    let scale =
        (2.0 * std::f64::consts::PI).powf(-(d as f64) / 2.0) * g.spatial_step().powi(d as i32);
    let mut spec = dft_natural(signal.samples(), g.bins_per_axis(), d, false);
    for v in &mut spec {
        *v *= scale;
    }
    spec
}

/// Inverse transform of a natural-order spectrum into a spatial signal.
pub fn inverse_signal(grid: &FrequencyGrid, spectrum: &[Complex64]) -> Result<SpatialSignal> {
    if spectrum.len() != grid.total_bins() {
        return Err(Error::GridMismatch(format!(
            "spectrum buffer has {} entries, grid has {}",
            spectrum.len(),
            grid.total_bins()
        )));
    }
    let d = grid.dim();
    let scale =
        (2.0 * std::f64::consts::PI).powf(-(d as f64) / 2.0) * grid.bin_step().powi(d as i32);
    let mut samples = dft_natural(spectrum, grid.bins_per_axis(), d, true);
    for v in &mut samples {
        *v *= scale;
    }
    SpatialSignal::from_samples(grid, samples)
}

/// Spectral L2 norm `sqrt(sum |F|^2 * step^d)`; equals the spatial `norm2`
/// of the corresponding signal.
pub fn spectral_norm2(grid: &FrequencyGrid, spectrum: &[Complex64]) -> f64 {
    let cell = grid.bin_step().powi(grid.dim() as i32);
    (spectrum.iter().map(|v| v.norm_sqr()).sum::<f64>() * cell).sqrt()
}

fn check_half_window(mask: &RegionMask) -> Result<()> {
    let n = mask.grid().bins_per_axis() as i64;
    let dim = mask.grid().dim();
    for idx in mask.occupied_indices() {
        if idx[..dim].iter().any(|&k| 4 * k < -n || 4 * k >= n) {
            return Err(Error::AntiAliasing(format!(
                "mask bin {:?} lies outside the central half-window",
                &idx[..dim]
            )));
        }
    }
    Ok(())
}

/// Deterministic band-limited spectrum on the occupied bins of `mask`: each
/// bin gets `exp(-|xi|^2 / (2 sigma^2)) * w` with `sigma = half_width / 4`
/// and `w` a seeded pseudo-random complex weight with magnitude in
/// `[0.5, 1]` and uniform phase (ChaCha8 stream, bins drawn in scan order).
/// Bins outside the mask are exactly zero.
///
/// The mask must stay within the central half-window.
pub fn synthesize_spectrum(mask: &RegionMask, seed: u64) -> Result<Vec<Complex64>> {
    check_half_window(mask)?;
    let grid = mask.grid();
    let sigma = grid.half_width() / 4.0;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut spec = vec![Complex64::default(); grid.total_bins()];
    for flat in mask.occupied_flats() {
        let idx = grid.index_of(flat);
        let p = grid.coord_of(&idx);
        let norm_sqr = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
        let envelope = (-norm_sqr / (2.0 * sigma * sigma)).exp();
        let mag: f64 = rng.gen_range(0.5..=1.0);
        let phase: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        spec[flat] = Complex64::from_polar(envelope * mag, phase);
    }
    Ok(spec)
}

/// Synthesize a spatial signal whose spectrum is supported exactly on `mask`.
/// An empty mask yields the zero signal.
pub fn synthesize_bandlimited(
    mask: &RegionMask,
    seed: u64,
    grid: &FrequencyGrid,
) -> Result<SpatialSignal> {
    if mask.grid() != grid {
        return Err(Error::GridMismatch(
            "synthesis mask and grid differ".to_string(),
        ));
    }
    let spec = synthesize_spectrum(mask, seed)?;
    inverse_signal(grid, &spec)
}

/// Apply a multiplier operator: forward transform, bin-wise multiply, inverse
/// transform.
pub fn apply_multiplier(m: &MultiplierField, f: &SpatialSignal) -> Result<SpatialSignal> {
    if m.grid() != f.grid() {
        return Err(Error::GridMismatch(
            "multiplier and signal grids differ".to_string(),
        ));
    }
    let mut spec = forward_spectrum(f);
    for (v, w) in spec.iter_mut().zip(m.values()) {
        *v *= w;
    }
    inverse_signal(f.grid(), &spec)
}

/// Fraction of spectral magnitude outside the central half-window, relative
/// to the peak magnitude. Zero for a cleanly band-limited signal.
pub fn half_window_leakage(signal: &SpatialSignal) -> f64 {
    let spec = forward_spectrum(signal);
    let grid = signal.grid();
    let n = grid.bins_per_axis() as i64;
    let dim = grid.dim();
    let mut peak: f64 = 0.0;
    let mut outside: f64 = 0.0;
    for (flat, idx) in grid.iter_bins() {
        let mag = spec[flat].norm();
        peak = peak.max(mag);
        if idx[..dim].iter().any(|&k| 4 * k < -n || 4 * k >= n) {
            outside = outside.max(mag);
        }
    }
    if peak == 0.0 {
        0.0
    } else {
        outside / peak
    }
}

const LEAKAGE_LIMIT: f64 = 1e-9;
const RESIDUAL_FLOOR: f64 = 1e-30;

/// Relative residual `|T(fg) - f (Tg)|_2 / max(|fg|_2 * |m|_inf, 1e-30)`.
///
/// Both input spectra must stay within the central half-window (checked by
/// transforming them), so the product's spectrum fits the full window.
pub fn bedrosian_residual(
    m: &MultiplierField,
    f: &SpatialSignal,
    g: &SpatialSignal,
) -> Result<f64> {
    if f.grid() != g.grid() || m.grid() != f.grid() {
        return Err(Error::GridMismatch(
            "residual needs one shared grid".to_string(),
        ));
    }
    for (name, s) in [("f", f), ("g", g)] {
        let leak = half_window_leakage(s);
        if leak > LEAKAGE_LIMIT {
            return Err(Error::AntiAliasing(format!(
                "spectrum of {name} leaks outside the half-window (relative magnitude {leak:.3e})"
            )));
        }
    }
    let fg = f.pointwise_product(g)?;
    let lhs = apply_multiplier(m, &fg)?;
    let rhs = f.pointwise_product(&apply_multiplier(m, g)?)?;
    let diff = lhs.distance(&rhs)?;
    let denom = (fg.norm2() * m.sup_norm()).max(RESIDUAL_FLOOR);
    Ok(diff / denom)
}

/// One verification trial.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct TrialRecord {
    pub seed: u64,
    pub residual: f64,
}

/// Outcome of a batch of seeded residual trials.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub trials: Vec<TrialRecord>,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub anti_aliasing_ok: bool,
    /// True when the half-window clip removed bins from either support.
    pub inputs_clipped: bool,
    pub grid: FrequencyGrid,
}

/// Run `trials` seeded residual trials for multiplier `m` over supports
/// `(a, b)`. Both masks are clipped to the central half-window first; a
/// support emptied by the clip is an error. Trial `t` uses seed
/// `base_seed + t`, synthesizing `f` with stream `2*seed` and `g` with
/// stream `2*seed + 1`.
pub fn verify_bedrosian(
    m: &MultiplierField,
    a: &RegionMask,
    b: &RegionMask,
    tolerance: f64,
    trials: u32,
    base_seed: u64,
) -> Result<VerificationReport> {
    if trials == 0 {
        return Err(Error::InvalidConfig {
            path: "trials".to_string(),
            reason: "must be >= 1".to_string(),
        });
    }
    if a.grid() != b.grid() || m.grid() != a.grid() {
        return Err(Error::GridMismatch(
            "verification needs one shared grid".to_string(),
        ));
    }
    let (a_clipped, a_removed) = a.clip_to_half_window();
    let (b_clipped, b_removed) = b.clip_to_half_window();
    if a_clipped.is_empty() {
        return Err(Error::EmptyInput(
            "set A is empty after the half-window clip".to_string(),
        ));
    }
    if b_clipped.is_empty() {
        return Err(Error::EmptyInput(
            "set B is empty after the half-window clip".to_string(),
        ));
    }

    let grid = *m.grid();
    let mut records = Vec::with_capacity(trials as usize);
    let mut max_residual: f64 = 0.0;
    for t in 0..trials as u64 {
        let seed = base_seed.wrapping_add(t);
        let f = synthesize_bandlimited(&a_clipped, seed.wrapping_mul(2), &grid)?;
        let g = synthesize_bandlimited(&b_clipped, seed.wrapping_mul(2).wrapping_add(1), &grid)?;
        let residual = bedrosian_residual(m, &f, &g)?;
        max_residual = max_residual.max(residual);
        records.push(TrialRecord { seed, residual });
    }

    Ok(VerificationReport {
        trials: records,
        max_residual,
        tolerance,
        pass: max_residual <= tolerance,
        anti_aliasing_ok: true,
        inputs_clipped: a_removed || b_removed,
        grid,
    })
}

impl VerificationReport {
    /// CSV trial table with a `seed,residual` header row.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("seed,residual\n");
        for t in &self.trials {
            out.push_str(&format!("{},{:e}\n", t.seed, t.residual));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mask::rasterize;
    use crate::multiplier::MultiplierSpec;
    use crate::region::RegionDescriptor;

    fn grid1() -> FrequencyGrid {
        FrequencyGrid::new(1, 256, 16.0).unwrap()
    }

    #[test]
    fn empty_mask_gives_zero_signal() {
        let g = grid1();
        let s = synthesize_bandlimited(&RegionMask::empty(&g), 0, &g).unwrap();
        assert!(s.samples().iter().all(|v| v.norm() == 0.0));
    }

    #[test]
    fn single_bin_gives_constant_magnitude_wave() {
        let g = grid1();
        let mut mask = RegionMask::empty(&g);
        mask.set(g.flat_of(&[12, 0, 0]).unwrap(), true);
        let s = synthesize_bandlimited(&mask, 5, &g).unwrap();
        let mags: Vec<f64> = s.samples().iter().map(|v| v.norm()).collect();
        let first = mags[0];
        assert!(first > 0.0);
        for m in mags {
            assert!((m - first).abs() < 1e-12 * first);
        }
    }

    #[test]
    fn seeds_change_phases_not_support() {
        let g = grid1();
        let mask = rasterize(&RegionDescriptor::rect(&[-2.0], &[3.0]), &g);
        let s0 = synthesize_spectrum(&mask, 0).unwrap();
        let s1 = synthesize_spectrum(&mask, 1).unwrap();
        assert_ne!(
            s0.iter().map(|v| (v.re, v.im)).collect::<Vec<_>>(),
            s1.iter().map(|v| (v.re, v.im)).collect::<Vec<_>>()
        );
        for (a, b) in s0.iter().zip(&s1) {
            assert_eq!(a.norm() == 0.0, b.norm() == 0.0);
        }
        // determinism
        let again = synthesize_spectrum(&mask, 0).unwrap();
        assert_eq!(
            s0.iter().map(|v| (v.re, v.im)).collect::<Vec<_>>(),
            again.iter().map(|v| (v.re, v.im)).collect::<Vec<_>>()
        );
    }

    #[test]
    fn synthesis_rejects_half_window_violations() {
        let g = grid1();
        let wide = rasterize(&RegionDescriptor::rect(&[-10.0], &[10.0]), &g);
        assert!(matches!(
            synthesize_bandlimited(&wide, 0, &g),
            Err(Error::AntiAliasing(_))
        ));
    }

    #[test]
    fn round_trip_and_parseval() {
        let g = FrequencyGrid::new(2, 64, 8.0).unwrap();
        let mask = rasterize(&RegionDescriptor::ball(&[0.5, -0.3], 1.5), &g);
        let spec = synthesize_spectrum(&mask, 3).unwrap();
        let signal = inverse_signal(&g, &spec).unwrap();
        let back = forward_spectrum(&signal);
        let peak = spec.iter().map(|v| v.norm()).fold(0.0, f64::max);
        for (a, b) in back.iter().zip(&spec) {
            assert!((a - b).norm() < 1e-12 * peak);
        }
        let spatial = signal.norm2();
        let spectral = spectral_norm2(&g, &spec);
        assert!((spatial - spectral).abs() < 1e-12 * spectral);
    }

    #[test]
    fn identity_multiplier_is_transparent() {
        let g = grid1();
        let mask = rasterize(&RegionDescriptor::rect(&[-3.0], &[3.0]), &g);
        let f = synthesize_bandlimited(&mask, 7, &g).unwrap();
        let ident = MultiplierField::make(&MultiplierSpec::Identity, &g).unwrap();
        let out = apply_multiplier(&ident, &f).unwrap();
        assert!(out.distance(&f).unwrap() < 1e-12 * f.norm2());
    }

    #[test]
    fn hilbert_maps_cos_to_sin() {
        let g = grid1();
        let k0 = 24i64; // xi0 = 3.0
        let xi0 = k0 as f64 * g.bin_step();
        let dx = g.spatial_step();
        let n = g.bins_per_axis() as i64;
        let samples: Vec<Complex64> = (0..n)
            .map(|u| {
                let x = (u - n / 2) as f64 * dx;
                Complex64::new((xi0 * x).cos(), 0.0)
            })
            .collect();
        let f = SpatialSignal::from_samples(&g, samples).unwrap();
        let hilbert = MultiplierField::make(&MultiplierSpec::Hilbert, &g).unwrap();
        let out = apply_multiplier(&hilbert, &f).unwrap();
        for (u, v) in out.samples().iter().enumerate() {
            let x = (u as i64 - n / 2) as f64 * dx;
            let expect = (xi0 * x).sin();
            assert!((v.re - expect).abs() < 1e-10 && v.im.abs() < 1e-10);
        }
    }

    #[test]
    fn zero_multiplier_annihilates() {
        let g = grid1();
        let mask = rasterize(&RegionDescriptor::rect(&[-2.0], &[2.0]), &g);
        let f = synthesize_bandlimited(&mask, 1, &g).unwrap();
        let zero = MultiplierField::from_values(
            &g,
            vec![Complex64::default(); g.total_bins()],
        )
        .unwrap();
        let out = apply_multiplier(&zero, &f).unwrap();
        assert!(out.norm2() < 1e-14);
    }

    #[test]
    fn single_frequency_residual_vanishes() {
        // f = e^{i alpha x}, g = e^{i beta x}, alpha + beta > 0: the product
        // is a single positive-frequency wave, so the Hilbert identity is
        // exact
        let g = FrequencyGrid::new(1, 256, 32.0).unwrap();
        let mut a = RegionMask::empty(&g);
        a.set(g.flat_of(&[-2, 0, 0]).unwrap(), true); // alpha = -0.5
        let mut b = RegionMask::empty(&g);
        b.set(g.flat_of(&[12, 0, 0]).unwrap(), true); // beta = 3.0
        let f = synthesize_bandlimited(&a, 0, &g).unwrap();
        let gg = synthesize_bandlimited(&b, 1, &g).unwrap();
        let hilbert = MultiplierField::make(&MultiplierSpec::Hilbert, &g).unwrap();
        let r = bedrosian_residual(&hilbert, &f, &gg).unwrap();
        assert!(r < 1e-10, "residual {r}");
    }

    #[test]
    fn verification_runner_on_classical_pair() {
        let g = FrequencyGrid::new(1, 1024, 32.0).unwrap();
        let a = rasterize(&RegionDescriptor::rect(&[-1.0], &[2.0]), &g);
        let b = rasterize(
            &RegionDescriptor::complement(RegionDescriptor::rect(&[-2.0], &[1.0])),
            &g,
        );
        let hilbert = MultiplierField::make(&MultiplierSpec::Hilbert, &g).unwrap();
        let report = verify_bedrosian(&hilbert, &a, &b, 1e-9, 4, 0).unwrap();
        assert!(report.pass, "max residual {}", report.max_residual);
        assert!(report.inputs_clipped); // B reaches beyond the half-window
        assert_eq!(report.trials.len(), 4);
        let csv = report.to_csv();
        assert!(csv.starts_with("seed,residual\n"));
        assert_eq!(csv.lines().count(), 5);
    }

    #[test]
    fn trials_zero_is_invalid() {
        let g = grid1();
        let a = rasterize(&RegionDescriptor::rect(&[-1.0], &[1.0]), &g);
        let m = MultiplierField::make(&MultiplierSpec::Identity, &g).unwrap();
        assert!(verify_bedrosian(&m, &a, &a, 1e-9, 0, 0).is_err());
    }
}
