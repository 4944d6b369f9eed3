//! Shared test support: an FFT-free spectral-convolution oracle for the
//! residual, and seeded random instance generators.

#![allow(dead_code)]

use num_complex::Complex64;
use rand::Rng;

use bedrosian::config::{AnalysisConfig, GridConfig, ToleranceConfig};
use bedrosian::grid::FrequencyGrid;
use bedrosian::mask::{rasterize, RegionMask};
use bedrosian::multiplier::{MultiplierField, MultiplierSpec};
use bedrosian::region::RegionDescriptor;
use bedrosian::signal::{spectral_norm2, synthesize_spectrum};

/// Spectrum of a sample-wise product by direct linear convolution of the
/// factor spectra over their occupied bins (no transforms involved):
/// `(2 pi)^{-d/2} step^d * sum_j F[j] G[k - j]`. Both supports must sit in
/// the central half-window so every index sum stays inside the window.
pub fn direct_product_spectrum(
    grid: &FrequencyGrid,
    f_spec: &[Complex64],
    g_spec: &[Complex64],
) -> Vec<Complex64> {
    let d = grid.dim();
    let scale =
        (2.0 * std::f64::consts::PI).powf(-(d as f64) / 2.0) * grid.bin_step().powi(d as i32);
    let occupied = |spec: &[Complex64]| -> Vec<(bedrosian::grid::BinIndex, Complex64)> {
        spec.iter()
            .enumerate()
            .filter(|(_, v)| v.norm_sqr() > 0.0)
            .map(|(flat, v)| (grid.index_of(flat), *v))
            .collect()
    };
    let fs = occupied(f_spec);
    let gs = occupied(g_spec);
    let mut out = vec![Complex64::default(); grid.total_bins()];
    for (fi, fv) in &fs {
        for (gi, gv) in &gs {
            let sum = [fi[0] + gi[0], fi[1] + gi[1], fi[2] + gi[2]];
            let flat = grid
                .flat_of(&sum)
                .expect("half-window supports sum inside the window");
            out[flat] += fv * gv;
        }
    }
    for v in &mut out {
        *v *= scale;
    }
    out
}

/// FFT-free residual oracle reproducing one `verify` trial: synthesize the
/// trial spectra, form both sides of the identity by direct spectral
/// convolution, and measure the relative spectral distance.
pub fn residual_oracle(
    m: &MultiplierField,
    a: &RegionMask,
    b: &RegionMask,
    trial_seed: u64,
) -> f64 {
    let grid = *m.grid();
    let (a_clip, _) = a.clip_to_half_window();
    let (b_clip, _) = b.clip_to_half_window();
    assert!(!a_clip.is_empty() && !b_clip.is_empty());
    let f_spec = synthesize_spectrum(&a_clip, 2 * trial_seed).unwrap();
    let g_spec = synthesize_spectrum(&b_clip, 2 * trial_seed + 1).unwrap();

    let product = direct_product_spectrum(&grid, &f_spec, &g_spec);
    let lhs: Vec<Complex64> = product
        .iter()
        .enumerate()
        .map(|(flat, v)| m.value(flat) * v)
        .collect();
    let mg: Vec<Complex64> = g_spec
        .iter()
        .enumerate()
        .map(|(flat, v)| m.value(flat) * v)
        .collect();
    let rhs = direct_product_spectrum(&grid, &f_spec, &mg);

    let diff: Vec<Complex64> = lhs.iter().zip(&rhs).map(|(x, y)| x - y).collect();
    let denom = (spectral_norm2(&grid, &product) * m.sup_norm()).max(1e-30);
    spectral_norm2(&grid, &diff) / denom
}

/// A random union of 1..=3 balls/boxes confined to the central half-window
/// (components are several bins thick, so rasterized open sets behave like
/// open sets).
pub fn random_region<R: Rng>(rng: &mut R, dim: usize) -> RegionDescriptor {
    let count = rng.gen_range(1..=3);
    let mut parts = Vec::with_capacity(count);
    for _ in 0..count {
        if rng.gen_bool(0.5) {
            let center: Vec<f64> = (0..dim).map(|_| rng.gen_range(-2.2..2.2)).collect();
            let radius = rng.gen_range(0.8..1.6);
            parts.push(RegionDescriptor::ball(&center, radius));
        } else {
            let lo: Vec<f64> = (0..dim).map(|_| rng.gen_range(-2.2..0.7)).collect();
            let hi: Vec<f64> = lo
                .iter()
                .map(|l| l + rng.gen_range(1.0..1.5))
                .collect();
            parts.push(RegionDescriptor::rect(&lo, &hi));
        }
    }
    if parts.len() == 1 {
        parts.pop().unwrap()
    } else {
        RegionDescriptor::Union(parts)
    }
}

/// The small grid used by the randomized suites.
pub fn suite_grid(dim: usize) -> FrequencyGrid {
    FrequencyGrid::new(dim, 64, 8.0).unwrap()
}

/// One randomized support-set instance.
pub struct Instance {
    pub grid: FrequencyGrid,
    pub a_desc: RegionDescriptor,
    pub b_desc: RegionDescriptor,
    pub a: RegionMask,
    pub b: RegionMask,
}

pub fn random_instance<R: Rng>(rng: &mut R, dim: usize) -> Instance {
    let grid = suite_grid(dim);
    loop {
        let a_desc = random_region(rng, dim);
        let b_desc = random_region(rng, dim);
        let a = rasterize(&a_desc, &grid);
        let b = rasterize(&b_desc, &grid);
        if !a.is_empty() && !b.is_empty() {
            return Instance {
                grid,
                a_desc,
                b_desc,
                a,
                b,
            };
        }
    }
}

fn random_constant<R: Rng>(rng: &mut R) -> Complex64 {
    let choices = [
        Complex64::new(0.0, 0.0),
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, -1.0),
        Complex64::new(0.0, 1.0),
        Complex64::new(2.0, -1.0),
        Complex64::new(-0.5, 0.5),
    ];
    choices[rng.gen_range(0..choices.len())]
}

/// A random piecewise-constant multiplier spec: one or two regions (balls,
/// half-spaces, or quadrants) painted over a default.
pub fn random_piecewise<R: Rng>(rng: &mut R, dim: usize) -> MultiplierSpec {
    let piece_region = |rng: &mut R| -> RegionDescriptor {
        match rng.gen_range(0..3) {
            0 => {
                let center: Vec<f64> = (0..dim).map(|_| rng.gen_range(-3.0..3.0)).collect();
                RegionDescriptor::ball(&center, rng.gen_range(1.0..3.0))
            }
            1 => RegionDescriptor::HalfSpace {
                axis: rng.gen_range(1..=dim),
                orientation: if rng.gen_bool(0.5) {
                    bedrosian::region::Orientation::Pos
                } else {
                    bedrosian::region::Orientation::Neg
                },
                threshold: 0.0,
            },
            _ => {
                let signs: Vec<i8> = (0..dim)
                    .map(|_| if rng.gen_bool(0.5) { 1 } else { -1 })
                    .collect();
                RegionDescriptor::quadrant(&signs)
            }
        }
    };
    let count = rng.gen_range(1..=2);
    MultiplierSpec::PiecewiseConstant {
        default: random_constant(rng),
        pieces: (0..count)
            .map(|_| (piece_region(rng), random_constant(rng)))
            .collect(),
    }
}

/// Every built-in multiplier family on a grid, plus `extra` random piecewise
/// specs.
pub fn multiplier_suite<R: Rng>(
    rng: &mut R,
    grid: &FrequencyGrid,
    extra: usize,
) -> Vec<MultiplierField> {
    let mut specs = vec![MultiplierSpec::Identity, MultiplierSpec::Hilbert];
    for axis in 1..=grid.dim() {
        specs.push(MultiplierSpec::PartialHilbert { axis });
        specs.push(MultiplierSpec::Riesz { axis });
    }
    for _ in 0..extra {
        specs.push(random_piecewise(rng, grid.dim()));
    }
    specs
        .iter()
        .map(|s| MultiplierField::make(s, grid).unwrap())
        .collect()
}

/// Config builder for CLI-level tests.
pub fn make_config(
    dim: usize,
    bins: usize,
    half_width: f64,
    set_a: RegionDescriptor,
    set_b: RegionDescriptor,
) -> AnalysisConfig {
    AnalysisConfig {
        grid: GridConfig {
            dim,
            bins_per_axis: Some(bins),
            half_width: Some(half_width),
        },
        set_a: Some(set_a),
        set_b: Some(set_b),
        multiplier: None,
        tolerances: ToleranceConfig::default(),
        trials: 5,
        seed: 0,
    }
}
