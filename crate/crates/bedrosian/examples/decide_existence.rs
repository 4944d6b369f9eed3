//! Decide whether any nontrivial operator satisfies the identity for a pair,
//! and print the witness multiplier when one exists.
//!
//! Run with `cargo run --example decide_existence`.

use bedrosian::{
    characteristic_decomposition, existence_decision, rasterize, structural_bedrosian_check,
    FrequencyGrid, RegionDescriptor,
};

fn report(label: &str, a: &RegionDescriptor, b: &RegionDescriptor) -> bedrosian::Result<()> {
    let grid = FrequencyGrid::new(2, 256, 16.0)?;
    let a = rasterize(a, &grid);
    let b = rasterize(b, &grid);
    let decomp = characteristic_decomposition(&a, &b)?;
    let existence = existence_decision(&decomp);
    println!(
        "{label}: exists = {} ({:?}, {} classes, free region robust = {})",
        existence.exists_nontrivial,
        existence.reason,
        existence.class_count,
        existence.free_region_robust
    );
    if let Some(witness) = &existence.witness {
        let verdict = structural_bedrosian_check(witness, &decomp, 0.0);
        println!(
            "  witness: piecewise constant with {} class values, passes exactly = {}",
            existence.class_count, verdict.pass
        );
    }
    Ok(())
}

fn main() -> bedrosian::Result<()> {
    let ball = RegionDescriptor::ball(&[0.5, 0.0], 1.0);

    // touching exteriors leave no room: only the trivial operator works
    report(
        "touching balls ",
        &ball,
        &RegionDescriptor::complement(RegionDescriptor::ball(&[-0.5, 0.0], 1.0)),
    )?;

    // widening the exterior frees a ball around the origin
    report(
        "widened balls  ",
        &ball,
        &RegionDescriptor::complement(RegionDescriptor::ball(&[-0.5, 0.0], 1.97)),
    )?;

    // two bounded supports always leave free room
    report(
        "bounded balls  ",
        &RegionDescriptor::ball(&[-2.1, 0.3], 0.8),
        &RegionDescriptor::ball(&[3.05, 1.1], 0.6),
    )?;
    Ok(())
}
