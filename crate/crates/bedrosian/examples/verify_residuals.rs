//! Numerically verify (or refute) the identity by measuring the residual
//! |T(fg) - f(Tg)| / (|fg| |m|) on seeded band-limited signals.
//!
//! Run with `cargo run --example verify_residuals`.

use bedrosian::{
    rasterize, verify_bedrosian, FrequencyGrid, MultiplierField, MultiplierSpec, RegionDescriptor,
};

fn main() -> bedrosian::Result<()> {
    // the classical one-dimensional setup: low frequencies against the
    // complement of a larger gap
    let grid = FrequencyGrid::new(1, 4096, 32.0)?;
    let a = rasterize(&RegionDescriptor::rect(&[-1.0], &[2.0]), &grid);
    let b = rasterize(
        &RegionDescriptor::complement(RegionDescriptor::rect(&[-2.0], &[1.0])),
        &grid,
    );

    let hilbert = MultiplierField::make(&MultiplierSpec::Hilbert, &grid)?;
    let report = verify_bedrosian(&hilbert, &a, &b, 1e-9, 10, 0)?;
    println!("Hilbert transform on the interval pair:");
    for trial in &report.trials {
        println!("  seed {:2}: residual {:.3e}", trial.seed, trial.residual);
    }
    println!(
        "  max residual {:.3e}, tolerance {:.0e}, pass = {}",
        report.max_residual, report.tolerance, report.pass
    );

    // a multiplier that varies inside a characteristic set fails loudly
    let grid2 = FrequencyGrid::new(2, 256, 16.0)?;
    let a2 = rasterize(&RegionDescriptor::ball(&[0.5, 0.0], 1.0), &grid2);
    let b2 = rasterize(
        &RegionDescriptor::complement(RegionDescriptor::ball(&[-0.5, 0.0], 1.97)),
        &grid2,
    );
    let riesz = MultiplierField::make(&MultiplierSpec::Riesz { axis: 1 }, &grid2)?;
    let report = verify_bedrosian(&riesz, &a2, &b2, 1e-9, 5, 0)?;
    println!("first Riesz transform on the widened-ball pair:");
    println!(
        "  max residual {:.3e}, pass = {} (supports clipped: {})",
        report.max_residual, report.pass, report.inputs_clipped
    );
    Ok(())
}
