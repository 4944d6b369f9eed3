//! Decompose a support-set pair into characteristic sets and merged classes.
//!
//! Run with `cargo run --example analyze_decomposition`.

use bedrosian::{
    characteristic_decomposition, rasterize, robust_positive_measure, FrequencyGrid,
    RegionDescriptor,
};

fn main() -> bedrosian::Result<()> {
    let grid = FrequencyGrid::new(2, 256, 16.0)?;

    // A is an open box around the origin, B the product of the per-axis
    // exteriors: the classic low-frequency / high-frequency split.
    let a = rasterize(
        &RegionDescriptor::rect(&[-1.03, -1.03], &[1.03, 1.03]),
        &grid,
    );
    let b = rasterize(
        &RegionDescriptor::axis_exterior(&[1.03, 1.03], &[1.03, 1.03]),
        &grid,
    );

    let decomp = characteristic_decomposition(&a, &b)?;

    println!("grid: {}^2 bins over [-16, 16)^2", grid.bins_per_axis());
    println!(
        "components: A = {}, B = {}, A+B = {}",
        decomp.a_labels.count(),
        decomp.b_labels.count(),
        decomp.sum_labels.count()
    );
    println!("characteristic sets: {}", decomp.sets.len());
    println!("merged classes: {}", decomp.class_count());
    for (i, class) in decomp.classes.iter().enumerate() {
        println!(
            "  class {}: members {:?}, window measure {:.3}",
            i + 1,
            class.members,
            class.window_mask.measure()
        );
    }
    println!(
        "free region: {} bins, measure {:.3}, robust = {}",
        decomp.free_region.occupied_count(),
        decomp.free_region.measure(),
        robust_positive_measure(&decomp.free_region)
    );
    Ok(())
}
