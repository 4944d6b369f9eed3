use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Maximum supported dimension.
pub const MAX_DIM: usize = 3;

/// A bin index vector. Only the first `dim` entries of a grid are meaningful;
/// trailing entries are zero. Entries are signed: bin `k` on an axis sits at
/// coordinate `k * bin_step`.
pub type BinIndex = [i64; MAX_DIM];

/// A point in frequency space. Trailing entries beyond `dim` are zero.
pub type Point = [f64; MAX_DIM];

/// A discretized frequency window `[-half_width, half_width)^dim`.
///
/// Each axis carries `bins_per_axis` bins at signed indices
/// `-N/2 ..= N/2 - 1`, with bin `k` mapping to the coordinate `k * bin_step`
/// where `bin_step = 2 * half_width / bins_per_axis`. Bin 0 sits exactly at
/// the origin on every axis. This is the substrate shared by region masks,
/// multiplier fields, and the spectral transforms (the layout matches DFT
/// bin frequencies after an fftshift).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FrequencyGrid {
    dim: usize,
    bins_per_axis: usize,
    half_width: f64,
    bin_step: f64,
}

impl FrequencyGrid {
    /// Build a grid, validating `1 <= dim <= 3`, even `bins_per_axis >= 8`,
    /// and `half_width > 0`.
    pub fn new(dim: usize, bins_per_axis: usize, half_width: f64) -> Result<Self> {
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::InvalidGrid(format!(
                "dim must be in 1..=3, got {dim}"
            )));
        }
        if bins_per_axis < 8 || !bins_per_axis.is_multiple_of(2) {
            return Err(Error::InvalidGrid(format!(
                "bins_per_axis must be even and >= 8, got {bins_per_axis}"
            )));
        }
        if !half_width.is_finite() || half_width <= 0.0 {
            return Err(Error::InvalidGrid(format!(
                "half_width must be positive and finite, got {half_width}"
            )));
        }
        Ok(Self {
            dim,
            bins_per_axis,
            half_width,
            bin_step: 2.0 * half_width / bins_per_axis as f64,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bins_per_axis(&self) -> usize {
        self.bins_per_axis
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    /// Bin spacing `2 * half_width / bins_per_axis`.
    pub fn bin_step(&self) -> f64 {
        self.bin_step
    }

    /// Spatial sample spacing of the dual grid, `pi / half_width`.
    pub fn spatial_step(&self) -> f64 {
        std::f64::consts::PI / self.half_width
    }

    /// Total number of bins, `bins_per_axis^dim`.
    pub fn total_bins(&self) -> usize {
        self.bins_per_axis.pow(self.dim as u32)
    }

    /// The grid covering `[-2*half_width, 2*half_width)^dim` at the same bin
    /// step. Sums of any two bin coordinates of `self` are exact bin
    /// coordinates of the doubled grid.
    pub fn doubled(&self) -> FrequencyGrid {
        FrequencyGrid {
            dim: self.dim,
            bins_per_axis: 2 * self.bins_per_axis,
            half_width: 2.0 * self.half_width,
            bin_step: self.bin_step,
        }
    }

    /// True when two grids share dimension and bin step (bin-index arithmetic
    /// between them is exact).
    pub fn same_lattice(&self, other: &FrequencyGrid) -> bool {
        self.dim == other.dim
            && (self.bin_step - other.bin_step).abs() <= 1e-12 * self.bin_step.abs()
    }

    /// Signed index range on each axis: `-N/2 ..= N/2 - 1`.
    pub fn index_min(&self) -> i64 {
        -(self.bins_per_axis as i64) / 2
    }

    pub fn index_max(&self) -> i64 {
        self.bins_per_axis as i64 / 2 - 1
    }

    pub fn contains_index(&self, idx: &BinIndex) -> bool {
        let (lo, hi) = (self.index_min(), self.index_max());
        idx[..self.dim].iter().all(|&k| lo <= k && k <= hi)
    }

    /// Row-major flat offset of a signed index vector, axis 0 slowest.
    /// Returns `None` when the index lies outside the window.
    pub fn flat_of(&self, idx: &BinIndex) -> Option<usize> {
        if !self.contains_index(idx) {
            return None;
        }
        let half = self.bins_per_axis as i64 / 2;
        let mut flat = 0usize;
        for &k in &idx[..self.dim] {
            flat = flat * self.bins_per_axis + (k + half) as usize;
        }
        Some(flat)
    }

    /// Signed index vector of a flat offset.
    pub fn index_of(&self, mut flat: usize) -> BinIndex {
        let half = self.bins_per_axis as i64 / 2;
        let mut idx = [0i64; MAX_DIM];
        for axis in (0..self.dim).rev() {
            idx[axis] = (flat % self.bins_per_axis) as i64 - half;
            flat /= self.bins_per_axis;
        }
        idx
    }

    /// Frequency coordinate of a signed index vector.
    pub fn coord_of(&self, idx: &BinIndex) -> Point {
        let mut p = [0.0; MAX_DIM];
        for axis in 0..self.dim {
            p[axis] = idx[axis] as f64 * self.bin_step;
        }
        p
    }

    /// Iterate all bins as `(flat, signed index)` in row-major scan order
    /// (lexicographic over signed indices).
    pub fn iter_bins(&self) -> impl Iterator<Item = (usize, BinIndex)> + '_ {
        (0..self.total_bins()).map(move |flat| (flat, self.index_of(flat)))
    }
}
