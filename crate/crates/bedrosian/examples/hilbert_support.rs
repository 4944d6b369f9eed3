//! Recover the box bounds under which every partial Hilbert transform
//! satisfies the identity, from the quadrant infima of B.
//!
//! Run with `cargo run --example hilbert_support`.

use bedrosian::{hilbert_support_test, rasterize, FrequencyGrid, RegionDescriptor};

fn main() -> bedrosian::Result<()> {
    let grid = FrequencyGrid::new(2, 256, 8.0)?;

    // A inside a box with asymmetric bounds, B outside the mirrored gaps
    let a_bounds = [0.9, 1.7];
    let b_bounds = [1.3, 0.8];
    let lo: Vec<f64> = a_bounds.iter().map(|v| -v).collect();
    let a = rasterize(&RegionDescriptor::rect(&lo, &b_bounds), &grid);
    let b = rasterize(&RegionDescriptor::axis_exterior(&a_bounds, &b_bounds), &grid);

    let report = hilbert_support_test(&a, &b)?;
    println!("true bounds:      a = {a_bounds:?}, b = {b_bounds:?}");
    println!(
        "recovered bounds: a = [{:.4}, {:.4}], b = [{:.4}, {:.4}] (bin step {})",
        report.a_bounds[0],
        report.a_bounds[1],
        report.b_bounds[0],
        report.b_bounds[1],
        grid.bin_step()
    );
    println!(
        "inclusions: A in closed box = {}, B avoids open gaps = {}, pass = {}",
        report.a_inclusion_ok, report.b_inclusion_ok, report.pass
    );

    // a ball pair has no such bounds: the quadrant infima collapse
    let a = rasterize(&RegionDescriptor::ball(&[0.5, 0.0], 1.0), &grid);
    let b = rasterize(
        &RegionDescriptor::complement(RegionDescriptor::ball(&[-0.5, 0.0], 1.0)),
        &grid,
    );
    let report = hilbert_support_test(&a, &b)?;
    println!(
        "ball pair: a = [{:.4}, {:.4}], pass = {}",
        report.a_bounds[0], report.a_bounds[1], report.pass
    );
    Ok(())
}
