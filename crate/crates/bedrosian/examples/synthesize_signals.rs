//! Band-limited signal synthesis and operator application: Parseval
//! consistency and the textbook cos -> sin action of the Hilbert transform.
//!
//! Run with `cargo run --example synthesize_signals`.

use num_complex::Complex64;

use bedrosian::signal::{forward_spectrum, spectral_norm2};
use bedrosian::{
    apply_multiplier, rasterize, synthesize_bandlimited, FrequencyGrid, MultiplierField,
    MultiplierSpec, RegionDescriptor, SpatialSignal,
};

fn main() -> bedrosian::Result<()> {
    let grid = FrequencyGrid::new(1, 1024, 32.0)?;

    // random band-limited signal on (-3, 5)
    let mask = rasterize(&RegionDescriptor::rect(&[-3.0], &[5.0]), &grid);
    let f = synthesize_bandlimited(&mask, 42, &grid)?;
    let spec = forward_spectrum(&f);
    println!(
        "synthesized {} spectral bins; spatial norm {:.6}, spectral norm {:.6}",
        mask.occupied_count(),
        f.norm2(),
        spectral_norm2(&grid, &spec)
    );

    // cos(3 x) -> sin(3 x) under the Hilbert transform
    let xi0 = 3.0;
    let n = grid.bins_per_axis() as i64;
    let dx = grid.spatial_step();
    let cos_samples: Vec<Complex64> = (0..n)
        .map(|u| {
            let x = (u - n / 2) as f64 * dx;
            Complex64::new((xi0 * x).cos(), 0.0)
        })
        .collect();
    let cosine = SpatialSignal::from_samples(&grid, cos_samples)?;
    let hilbert = MultiplierField::make(&MultiplierSpec::Hilbert, &grid)?;
    let transformed = apply_multiplier(&hilbert, &cosine)?;
    let mid = (n / 2 + 7) as usize;
    let x = 7.0 * dx;
    println!(
        "H cos at x = {:.4}: got {:.6}, sin gives {:.6}",
        x,
        transformed.samples()[mid].re,
        (xi0 * x).sin()
    );
    let max_err = transformed
        .samples()
        .iter()
        .enumerate()
        .map(|(u, v)| {
            let x = (u as i64 - n / 2) as f64 * dx;
            (v.re - (xi0 * x).sin()).abs().max(v.im.abs())
        })
        .fold(0.0, f64::max);
    println!("max sample error against sin: {max_err:.3e}");
    Ok(())
}
