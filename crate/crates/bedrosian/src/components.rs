//! Connected-component labeling of region masks under face adjacency.

use crate::grid::FrequencyGrid;
use crate::mask::RegionMask;

/// Labels of the face-connected components of a mask.
///
/// Label 0 is background; components are numbered 1..=count in order of their
/// first bin in the row-major scan, so labeling is deterministic. Face
/// adjacency (2*dim neighbors) is deliberate: diagonal adjacency would join
/// open quadrants touching at the origin, which must remain distinct
/// components.
#[derive(Debug, Clone)]
pub struct ComponentLabeling {
    grid: FrequencyGrid,
    labels: Vec<u32>,
    count: usize,
    /// Flat index of the scan-first bin of each component (1-based label - 1).
    representatives: Vec<usize>,
    sizes: Vec<usize>,
}

impl ComponentLabeling {
    pub fn grid(&self) -> &FrequencyGrid {
        &self.grid
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label(&self, flat: usize) -> u32 {
        self.labels[flat]
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn representative(&self, component: usize) -> usize {
        self.representatives[component - 1]
    }

    pub fn size(&self, component: usize) -> usize {
        self.sizes[component - 1]
    }

    /// The mask of one component.
    pub fn component_mask(&self, component: usize) -> RegionMask {
        let occupancy = self
            .labels
            .iter()
            .map(|&l| l as usize == component)
            .collect();
        RegionMask::from_occupancy(&self.grid, occupancy, false)
    }
}

/// Flood-fill labeling under face adjacency. The empty mask yields zero
/// components.
pub fn connected_components(mask: &RegionMask) -> ComponentLabeling {
    let grid = *mask.grid();
    let total = grid.total_bins();
    let mut labels = vec![0u32; total];
    let mut representatives = Vec::new();
    let mut sizes = Vec::new();
    let mut stack = Vec::new();

    for start in 0..total {
        if !mask.get(start) || labels[start] != 0 {
            continue;
        }
        let id = representatives.len() as u32 + 1;
        representatives.push(start);
        let mut size = 0usize;
        labels[start] = id;
        stack.push(start);
        while let Some(flat) = stack.pop() {
            size += 1;
            let idx = grid.index_of(flat);
            for axis in 0..grid.dim() {
                for step in [-1i64, 1] {
                    let mut n = idx;
                    n[axis] += step;
                    if let Some(f) = grid.flat_of(&n) {
                        if mask.get(f) && labels[f] == 0 {
                            labels[f] = id;
                            stack.push(f);
                        }
                    }
                }
            }
        }
        sizes.push(size);
    }

    ComponentLabeling {
        grid,
        labels,
        count: representatives.len(),
        representatives,
        sizes,
    }
}
