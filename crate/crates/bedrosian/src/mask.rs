//! Boolean occupancy masks over a frequency grid, with rasterization from
//! region descriptors and grid-robust measure queries.

use crate::error::{Error, Result};
use crate::grid::{BinIndex, FrequencyGrid};
use crate::region::RegionDescriptor;

/// Boolean occupancy of frequency bins representing a measurable set at grid
/// resolution.
#[derive(Debug, Clone, PartialEq)]
pub struct RegionMask {
    grid: FrequencyGrid,
    occupancy: Vec<bool>,
    /// True when the generating descriptor has points outside the window, so
    /// topology beyond the window is invisible at this resolution.
    clipped: bool,
}

/// Rasterize a descriptor onto a grid: a bin is occupied iff the membership
/// predicate holds at the bin coordinate.
pub fn rasterize(desc: &RegionDescriptor, grid: &FrequencyGrid) -> RegionMask {
    let mut occupancy = vec![false; grid.total_bins()];
    for (flat, idx) in grid.iter_bins() {
        occupancy[flat] = desc.contains(&grid.coord_of(&idx));
    }
    RegionMask {
        grid: *grid,
        occupancy,
        clipped: desc.exceeds_window(grid),
    }
}

impl RegionMask {
    pub fn empty(grid: &FrequencyGrid) -> Self {
        Self {
            grid: *grid,
            occupancy: vec![false; grid.total_bins()],
            clipped: false,
        }
    }

    pub fn from_occupancy(grid: &FrequencyGrid, occupancy: Vec<bool>, clipped: bool) -> Self {
        assert_eq!(occupancy.len(), grid.total_bins());
        Self {
            grid: *grid,
            occupancy,
            clipped,
        }
    }

    pub fn grid(&self) -> &FrequencyGrid {
        &self.grid
    }

    pub fn clipped(&self) -> bool {
        self.clipped
    }

    pub fn set_clipped(&mut self, clipped: bool) {
        self.clipped = clipped;
    }

    pub fn occupancy(&self) -> &[bool] {
        &self.occupancy
    }

    pub fn get(&self, flat: usize) -> bool {
        self.occupancy[flat]
    }

    pub fn set(&mut self, flat: usize, value: bool) {
        self.occupancy[flat] = value;
    }

    /// Occupancy at a signed bin index; false outside the window.
    pub fn contains_index(&self, idx: &BinIndex) -> bool {
        self.grid.flat_of(idx).is_some_and(|f| self.occupancy[f])
    }

    pub fn occupied_count(&self) -> usize {
        self.occupancy.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.occupancy.iter().any(|&b| b)
    }

    /// Occupied-bin count times `bin_step^dim`.
    pub fn measure(&self) -> f64 {
        self.occupied_count() as f64 * self.grid.bin_step().powi(self.grid.dim() as i32)
    }

    pub fn occupied_flats(&self) -> impl Iterator<Item = usize> + '_ {
        self.occupancy
            .iter()
            .enumerate()
            .filter_map(|(flat, &b)| b.then_some(flat))
    }

    pub fn occupied_indices(&self) -> impl Iterator<Item = BinIndex> + '_ {
        self.occupied_flats().map(move |f| self.grid.index_of(f))
    }

    fn check_same_grid(&self, other: &RegionMask) -> Result<()> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch(
                "masks live on different grids".to_string(),
            ));
        }
        Ok(())
    }

    pub fn union(&self, other: &RegionMask) -> Result<RegionMask> {
        self.check_same_grid(other)?;
        let occupancy = self
            .occupancy
            .iter()
            .zip(&other.occupancy)
            .map(|(&a, &b)| a || b)
            .collect();
        Ok(RegionMask {
            grid: self.grid,
            occupancy,
            clipped: self.clipped || other.clipped,
        })
    }

    pub fn intersection(&self, other: &RegionMask) -> Result<RegionMask> {
        self.check_same_grid(other)?;
        let occupancy = self
            .occupancy
            .iter()
            .zip(&other.occupancy)
            .map(|(&a, &b)| a && b)
            .collect();
        Ok(RegionMask {
            grid: self.grid,
            occupancy,
            clipped: self.clipped || other.clipped,
        })
    }

    pub fn complement(&self) -> RegionMask {
        RegionMask {
            grid: self.grid,
            occupancy: self.occupancy.iter().map(|&b| !b).collect(),
            clipped: true,
        }
    }

    pub fn difference(&self, other: &RegionMask) -> Result<RegionMask> {
        self.check_same_grid(other)?;
        let occupancy = self
            .occupancy
            .iter()
            .zip(&other.occupancy)
            .map(|(&a, &b)| a && !b)
            .collect();
        Ok(RegionMask {
            grid: self.grid,
            occupancy,
            clipped: self.clipped,
        })
    }

    /// Bin-wise reflection through the origin. Bins whose reflection falls
    /// outside the window (the extreme `-N/2` row on each axis) are dropped.
    pub fn reflect(&self) -> RegionMask {
        let mut out = RegionMask::empty(&self.grid);
        out.clipped = self.clipped;
        for flat in self.occupied_flats() {
            let idx = self.grid.index_of(flat);
            let neg = [-idx[0], -idx[1], -idx[2]];
            if let Some(f) = self.grid.flat_of(&neg) {
                out.occupancy[f] = true;
            }
        }
        out
    }

    /// Copy occupancy into a larger (or equal) window on the same lattice.
    pub fn embed_into(&self, target: &FrequencyGrid) -> Result<RegionMask> {
        if !self.grid.same_lattice(target) {
            return Err(Error::GridMismatch(
                "embed target has a different bin step or dimension".to_string(),
            ));
        }
        let mut out = RegionMask::empty(target);
        out.clipped = self.clipped;
        for flat in self.occupied_flats() {
            let idx = self.grid.index_of(flat);
            let f = target.flat_of(&idx).ok_or_else(|| {
                Error::GridMismatch("embed target window too small".to_string())
            })?;
            out.occupancy[f] = true;
        }
        Ok(out)
    }

    /// Restrict occupancy to a smaller (or equal) window on the same lattice;
    /// bins outside the target window are dropped.
    pub fn restrict_to(&self, target: &FrequencyGrid) -> Result<RegionMask> {
        if !self.grid.same_lattice(target) {
            return Err(Error::GridMismatch(
                "restrict target has a different bin step or dimension".to_string(),
            ));
        }
        let mut out = RegionMask::empty(target);
        out.clipped = self.clipped;
        for flat in self.occupied_flats() {
            let idx = self.grid.index_of(flat);
            if let Some(f) = target.flat_of(&idx) {
                out.occupancy[f] = true;
            }
        }
        Ok(out)
    }

    /// Keep only bins whose coordinates lie in the central half-window
    /// `[-half_width/2, half_width/2)` on every axis. Returns the clipped
    /// mask and whether any occupied bin was removed.
    pub fn clip_to_half_window(&self) -> (RegionMask, bool) {
        let n = self.grid.bins_per_axis() as i64;
        let mut out = RegionMask::empty(&self.grid);
        out.clipped = self.clipped;
        let mut removed = false;
        for flat in self.occupied_flats() {
            let idx = self.grid.index_of(flat);
            let inside = idx[..self.grid.dim()]
                .iter()
                .all(|&k| 4 * k >= -n && 4 * k < n);
            if inside {
                out.occupancy[flat] = true;
            } else {
                removed = true;
            }
        }
        (out, removed)
    }
}

/// Grid-robust surrogate for "has positive Lebesgue measure": true iff the
/// mask contains a bin whose 2*dim face neighbors all exist within the window
/// and are occupied. Immune to single-bin rasterization artifacts and to thin
/// one-bin strips produced by window truncation.
pub fn robust_positive_measure(mask: &RegionMask) -> bool {
    let grid = mask.grid();
    'bins: for flat in mask.occupied_flats() {
        let idx = grid.index_of(flat);
        for axis in 0..grid.dim() {
            for step in [-1i64, 1] {
                let mut n = idx;
                n[axis] += step;
                match grid.flat_of(&n) {
                    Some(f) if mask.get(f) => {}
                    _ => continue 'bins,
                }
            }
        }
        return true;
    }
    false
}

/// The essential set of a mask. Every occupied bin already represents a
/// positive-measure cell at grid resolution, so this is the identity; it
/// exists as a named operation so callers can mirror essential-set notation.
pub fn essential_set(mask: &RegionMask) -> RegionMask {
    mask.clone()
}
