//! Raster and index exports: binary PGM (P5) images for 2-D structures,
//! axis-aligned central slices for 3-D, and JSON bin-index lists for any
//! dimension.

use std::io::Write;
use std::path::Path;

use crate::components::ComponentLabeling;
use crate::decomposition::CharacteristicDecomposition;
use crate::error::Result;
use crate::grid::FrequencyGrid;
use crate::mask::RegionMask;
use crate::signal::SpatialSignal;

/// Write a P5 (binary) PGM with maxval 255.
pub fn write_pgm(path: &Path, width: usize, height: usize, pixels: &[u8]) -> Result<()> {
    assert_eq!(pixels.len(), width * height);
    let mut file = std::fs::File::create(path)?;
    write!(file, "P5\n{width} {height}\n255\n")?;
    file.write_all(pixels)?;
    Ok(())
}

/// Gray level for a component label: background 0, single component 255,
/// otherwise evenly spaced levels from 64 up to 255.
fn label_gray(label: u32, count: usize) -> u8 {
    if label == 0 {
        0
    } else if count <= 1 {
        255
    } else {
        (64 + ((label as usize - 1) * 191) / (count - 1)) as u8
    }
}

/// Render one 2-D slice of per-bin values. `fixed` pins the remaining axis
/// of a 3-D grid (`None` for 2-D). Columns run along `axis_h` ascending,
/// rows along `axis_v` descending (origin at the image center).
fn render_slice<F: Fn(usize) -> u8>(
    grid: &FrequencyGrid,
    value: &F,
    axis_h: usize,
    axis_v: usize,
    fixed: Option<(usize, i64)>,
) -> (usize, usize, Vec<u8>) {
    let n = grid.bins_per_axis();
    let half = n as i64 / 2;
    let mut pixels = vec![0u8; n * n];
    for row in 0..n {
        for col in 0..n {
            let mut idx = [0i64; 3];
            idx[axis_h] = col as i64 - half;
            idx[axis_v] = half - 1 - row as i64;
            if let Some((axis, k)) = fixed {
                idx[axis] = k;
            }
            if let Some(flat) = grid.flat_of(&idx) {
                pixels[row * n + col] = value(flat);
            }
        }
    }
    (n, n, pixels)
}

fn export_values<F: Fn(usize) -> u8>(
    dir: &Path,
    name: &str,
    grid: &FrequencyGrid,
    value: F,
) -> Result<()> {
    match grid.dim() {
        2 => {
            let (w, h, px) = render_slice(grid, &value, 0, 1, None);
            write_pgm(&dir.join(format!("{name}.pgm")), w, h, &px)?;
        }
        3 => {
            // one central slice per fixed axis
            for fixed_axis in 0..3usize {
                let (axis_h, axis_v) = match fixed_axis {
                    0 => (1, 2),
                    1 => (0, 2),
                    _ => (0, 1),
                };
                let (w, h, px) = render_slice(grid, &value, axis_h, axis_v, Some((fixed_axis, 0)));
                write_pgm(
                    &dir.join(format!("{name}_slice_axis{}.pgm", fixed_axis + 1)),
                    w,
                    h,
                    &px,
                )?;
            }
        }
        _ => {}
    }
    Ok(())
}

/// Occupied bin indices as JSON (`[[k1], [k2], ...]` style lists).
pub fn mask_index_json(mask: &RegionMask) -> String {
    let dim = mask.grid().dim();
    let list: Vec<Vec<i64>> = mask
        .occupied_indices()
        .map(|idx| idx[..dim].to_vec())
        .collect();
    serde_json::to_string(&list).expect("index list serializes")
}

/// Export a mask: PGM for 2-D (255 = occupied), central slices for 3-D, and
/// a JSON bin-index list in every dimension.
pub fn export_mask(dir: &Path, name: &str, mask: &RegionMask) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    export_values(dir, name, mask.grid(), |flat| {
        if mask.get(flat) {
            255
        } else {
            0
        }
    })?;
    std::fs::write(dir.join(format!("{name}.json")), mask_index_json(mask))?;
    Ok(())
}

/// Export a component labeling with one gray level per component.
pub fn export_labeling(dir: &Path, name: &str, labeling: &ComponentLabeling) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    let count = labeling.count();
    export_values(dir, name, labeling.grid(), |flat| {
        label_gray(labeling.label(flat), count)
    })
}

/// Export the labeled structures of a decomposition: A components, B
/// components, merged classes (on the base window), and the free region.
pub fn export_decomposition(dir: &Path, decomp: &CharacteristicDecomposition) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    export_labeling(dir, "a_components", &decomp.a_labels)?;
    export_labeling(dir, "b_components", &decomp.b_labels)?;
    let grid = decomp.base_grid;
    let class_count = decomp.class_count();
    let class_of = |flat: usize| -> u32 {
        let idx = grid.index_of(flat);
        for (q, class) in decomp.classes.iter().enumerate() {
            if class.window_mask.contains_index(&idx) {
                return q as u32 + 1;
            }
        }
        0
    };
    export_values(dir, "classes", &grid, |flat| {
        label_gray(class_of(flat), class_count)
    })?;
    export_mask(dir, "free_region", &decomp.free_region)?;
    Ok(())
}

/// Write signal samples as a little-endian binary array of interleaved
/// re/im doubles in row-major scan order, plus a JSON sidecar at
/// `<path>.json` describing the grid and layout.
pub fn export_signal(path: &Path, signal: &SpatialSignal) -> Result<()> {
    let mut bytes = Vec::with_capacity(signal.samples().len() * 16);
    for v in signal.samples() {
        bytes.extend_from_slice(&v.re.to_le_bytes());
        bytes.extend_from_slice(&v.im.to_le_bytes());
    }
    std::fs::write(path, bytes)?;
    let grid = signal.grid();
    let sidecar = serde_json::json!({
        "layout": "interleaved_re_im_f64_le",
        "order": "row_major_axis0_slowest",
        "samples": grid.total_bins(),
        "grid": {
            "dim": grid.dim(),
            "bins_per_axis": grid.bins_per_axis(),
            "half_width": grid.half_width(),
            "bin_step": grid.bin_step(),
            "spatial_step": grid.spatial_step(),
        },
    });
    let sidecar_path = path.with_extension(format!(
        "{}json",
        path.extension()
            .map(|e| format!("{}.", e.to_string_lossy()))
            .unwrap_or_default()
    ));
    std::fs::write(sidecar_path, serde_json::to_string_pretty(&sidecar)?)?;
    Ok(())
}
