//! Dump the labeled structures of a decomposition as PGM images and JSON
//! bin-index lists under ./raster_out.
//!
//! Run with `cargo run --example export_rasters`.

use bedrosian::raster::export_decomposition;
use bedrosian::{characteristic_decomposition, rasterize, FrequencyGrid, RegionDescriptor};

fn main() -> bedrosian::Result<()> {
    let grid = FrequencyGrid::new(2, 256, 16.0)?;
    let a = rasterize(&RegionDescriptor::ball(&[0.5, 0.0], 1.0), &grid);
    let b = rasterize(
        &RegionDescriptor::complement(RegionDescriptor::ball(&[-0.5, 0.0], 1.97)),
        &grid,
    );
    let decomp = characteristic_decomposition(&a, &b)?;

    let dir = std::path::Path::new("raster_out");
    export_decomposition(dir, &decomp)?;
    println!("wrote labeled structures to {}/:", dir.display());
    for entry in std::fs::read_dir(dir)? {
        let entry = entry?;
        println!("  {} ({} bytes)", entry.file_name().to_string_lossy(), entry.metadata()?.len());
    }
    Ok(())
}
