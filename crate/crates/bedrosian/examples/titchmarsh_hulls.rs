//! Check the convolution support law on the grid: the convex hull of the
//! support of a convolution equals the Minkowski sum of the input hulls.
//!
//! Run with `cargo run --example titchmarsh_hulls`.

use bedrosian::{rasterize, titchmarsh_check, FrequencyGrid, RegionDescriptor};

fn main() -> bedrosian::Result<()> {
    let g1 = FrequencyGrid::new(1, 256, 8.0)?;
    let a = rasterize(&RegionDescriptor::rect(&[0.0], &[1.0]), &g1);
    let b = rasterize(&RegionDescriptor::rect(&[2.0], &[3.0]), &g1);
    let r = titchmarsh_check(&a, &b)?;
    println!(
        "(0,1) * (2,3): hull discrepancy {:.3e} (threshold {:.3e}), pass = {}",
        r.hull_discrepancy, r.threshold, r.pass
    );

    let g2 = FrequencyGrid::new(2, 256, 8.0)?;
    let a = rasterize(&RegionDescriptor::ball(&[-2.0, 0.0], 1.0), &g2);
    let b = rasterize(&RegionDescriptor::ball(&[2.5, 1.0], 1.0), &g2);
    let r = titchmarsh_check(&a, &b)?;
    println!(
        "two unit balls: hull discrepancy {:.3e} (threshold {:.3e}), pass = {}",
        r.hull_discrepancy, r.threshold, r.pass
    );

    let union = RegionDescriptor::Union(vec![
        RegionDescriptor::ball(&[-1.5, -1.0], 0.8),
        RegionDescriptor::rect(&[0.5, 0.5], &[2.0, 1.8]),
    ]);
    let a = rasterize(&union, &g2);
    let b = rasterize(&RegionDescriptor::ball(&[1.0, -2.0], 1.2), &g2);
    let r = titchmarsh_check(&a, &b)?;
    println!(
        "ball-and-box union: hull discrepancy {:.3e}, pass = {}",
        r.hull_discrepancy, r.pass
    );
    Ok(())
}
