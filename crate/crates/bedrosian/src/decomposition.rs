//! Characteristic-set decomposition of a support-set pair.
//!
//! Given nonempty masks `A` and `B` on one grid, the decomposition labels the
//! connected components `A_i`, `B_j`, and `C_k` of `A`, `B`, and the
//! Minkowski sum `S = A + B` (computed on the doubled window so no sum
//! wraps), attaches to each sum component `C_k` the index set
//! `J_k = {j : A_i + B_j lies inside C_k for some i}`, and forms the
//! characteristic sets `D_k = C_k union (union of B_j over J_k)`.
//!
//! Characteristic sets that overlap are forced to share one multiplier
//! constant, so transitively overlapping `D_k` are merged into classes with a
//! union-find pass. The free region is the part of the base window covered by
//! no characteristic set.

use crate::components::{connected_components, ComponentLabeling};
use crate::error::{Error, Result};
use crate::grid::FrequencyGrid;
use crate::mask::RegionMask;
use crate::minkowski::minkowski_sum;

/// One characteristic set `D_k`, kept on the doubled window.
#[derive(Debug, Clone)]
pub struct CharacteristicSet {
    /// 1-based component id of `C_k` in the sum labeling.
    pub sum_component: usize,
    /// 1-based ids of the `B_j` merged into this set.
    pub contributing_b: Vec<usize>,
    pub mask: RegionMask,
}

/// A maximal group of transitively overlapping characteristic sets.
#[derive(Debug, Clone)]
pub struct MergedClass {
    /// 1-based `D_k` ids (positions in `sets`, plus one).
    pub members: Vec<usize>,
    /// Union of the member masks on the doubled window.
    pub mask: RegionMask,
    /// The same union restricted to the base window.
    pub window_mask: RegionMask,
}

#[derive(Debug, Clone)]
pub struct CharacteristicDecomposition {
    pub base_grid: FrequencyGrid,
    pub sum_grid: FrequencyGrid,
    pub a_mask: RegionMask,
    pub b_mask: RegionMask,
    pub a_labels: ComponentLabeling,
    pub b_labels: ComponentLabeling,
    pub sum_mask: RegionMask,
    pub sum_labels: ComponentLabeling,
    pub sets: Vec<CharacteristicSet>,
    pub classes: Vec<MergedClass>,
    /// Base-window bins covered by no characteristic set.
    pub free_region: RegionMask,
}

impl CharacteristicDecomposition {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// True when any input or derived mask was truncated by the window.
    pub fn any_clipped(&self) -> bool {
        self.a_mask.clipped() || self.b_mask.clipped()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(size: usize) -> Self {
        Self {
            parent: (0..size).collect(),
        }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, i: usize, j: usize) {
        let (ri, rj) = (self.find(i), self.find(j));
        if ri != rj {
            // keep the smaller root so class order follows set order
            let (lo, hi) = (ri.min(rj), ri.max(rj));
            self.parent[hi] = lo;
        }
    }
}

/// Compute the characteristic decomposition of `(a, b)`.
///
/// Both masks must be nonempty and share a grid. The `J_k` assignment uses
/// one representative bin per `(A_i, B_j)` pair: the sum set `A_i + B_j` is
/// face-connected and contained in the sum support, so it lies inside exactly
/// the component of any single one of its bins.
pub fn characteristic_decomposition(
    a: &RegionMask,
    b: &RegionMask,
) -> Result<CharacteristicDecomposition> {
    if a.grid() != b.grid() {
        return Err(Error::GridMismatch(
            "characteristic_decomposition inputs live on different grids".to_string(),
        ));
    }
    if a.is_empty() {
        return Err(Error::EmptyInput("set A has no occupied bins".to_string()));
    }
    if b.is_empty() {
        return Err(Error::EmptyInput("set B has no occupied bins".to_string()));
    }

    let base_grid = *a.grid();
    let sum_grid = base_grid.doubled();

    let a_labels = connected_components(a);
    let b_labels = connected_components(b);
    let sum_mask = minkowski_sum(a, b, &sum_grid)?;
    let sum_labels = connected_components(&sum_mask);

    // J_k from representative pairs.
    let mut j_sets: Vec<Vec<usize>> = vec![Vec::new(); sum_labels.count()];
    for i in 1..=a_labels.count() {
        let rep_a = base_grid.index_of(a_labels.representative(i));
        for j in 1..=b_labels.count() {
            let rep_b = base_grid.index_of(b_labels.representative(j));
            let sum_idx = [rep_a[0] + rep_b[0], rep_a[1] + rep_b[1], rep_a[2] + rep_b[2]];
            let flat = sum_grid
                .flat_of(&sum_idx)
                .expect("sum of window bins fits the doubled window");
            let k = sum_labels.label(flat) as usize;
            debug_assert!(k > 0, "representative sum bin must be occupied");
            if !j_sets[k - 1].contains(&j) {
                j_sets[k - 1].push(j);
            }
        }
    }

    // D_k = C_k + the B_j for j in J_k, embedded into the doubled window.
    let b_component_masks: Vec<RegionMask> = (1..=b_labels.count())
        .map(|j| b_labels.component_mask(j).embed_into(&sum_grid))
        .collect::<Result<_>>()?;
    let mut sets = Vec::with_capacity(sum_labels.count());
    for k in 1..=sum_labels.count() {
        let mut mask = sum_labels.component_mask(k);
        for &j in &j_sets[k - 1] {
            mask = mask.union(&b_component_masks[j - 1])?;
        }
        sets.push(CharacteristicSet {
            sum_component: k,
            contributing_b: j_sets[k - 1].clone(),
            mask,
        });
    }

    // Merge transitively overlapping characteristic sets.
    let mut uf = UnionFind::new(sets.len());
    let mut owner: Vec<u32> = vec![0; sum_grid.total_bins()];
    for (pos, set) in sets.iter().enumerate() {
        for flat in set.mask.occupied_flats() {
            if owner[flat] == 0 {
                owner[flat] = pos as u32 + 1;
            } else {
                uf.union(owner[flat] as usize - 1, pos);
            }
        }
    }
    let mut class_of_root: Vec<Option<usize>> = vec![None; sets.len()];
    let mut classes: Vec<MergedClass> = Vec::new();
    for (pos, set) in sets.iter().enumerate() {
        let root = uf.find(pos);
        let class_idx = match class_of_root[root] {
            Some(c) => c,
            None => {
                let c = classes.len();
                class_of_root[root] = Some(c);
                classes.push(MergedClass {
                    members: Vec::new(),
                    mask: RegionMask::empty(&sum_grid),
                    window_mask: RegionMask::empty(&base_grid),
                });
                c
            }
        };
        classes[class_idx].members.push(pos + 1);
        classes[class_idx].mask = classes[class_idx].mask.union(&set.mask)?;
    }
    // when an input was truncated, every derived set inherits the caveat
    let inputs_clipped = a.clipped() || b.clipped();
    for set in &mut sets {
        set.mask.set_clipped(inputs_clipped);
    }
    for class in &mut classes {
        class.mask.set_clipped(inputs_clipped);
        class.window_mask = class.mask.restrict_to(&base_grid)?;
        class.window_mask.set_clipped(inputs_clipped);
    }

    // Free region: base-window bins in no characteristic set.
    let mut free_region = RegionMask::empty(&base_grid);
    for (flat, _) in base_grid.iter_bins() {
        let covered = classes.iter().any(|c| c.window_mask.get(flat));
        free_region.set(flat, !covered);
    }

    Ok(CharacteristicDecomposition {
        base_grid,
        sum_grid,
        a_mask: a.clone(),
        b_mask: b.clone(),
        a_labels,
        b_labels,
        sum_mask,
        sum_labels,
        sets,
        classes,
        free_region,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mask::{rasterize, robust_positive_measure};
    use crate::region::RegionDescriptor;

    #[test]
    fn interval_and_exterior_split_into_half_lines() {
        // A = (-1, 1), B = R \ [-1, 1]: characteristic sets are the two open
        // half-lines; the origin bin is free
        let g = FrequencyGrid::new(1, 256, 32.0).unwrap();
        let a = rasterize(&RegionDescriptor::rect(&[-1.0], &[1.0]), &g);
        let b = rasterize(
            &RegionDescriptor::complement(RegionDescriptor::rect(&[-1.0], &[1.0])),
            &g,
        );
        let d = characteristic_decomposition(&a, &b).unwrap();
        assert_eq!(d.sum_labels.count(), 2);
        assert_eq!(d.class_count(), 2);
        for class in &d.classes {
            let signs: Vec<i64> = class
                .window_mask
                .occupied_indices()
                .map(|i| i[0].signum())
                .collect();
            assert!(signs.iter().all(|&s| s == signs[0]));
        }
        assert_eq!(d.free_region.occupied_count(), 1);
        assert!(d.free_region.contains_index(&[0, 0, 0]));
        assert!(!robust_positive_measure(&d.free_region));
    }

    #[test]
    fn modified_balls_leave_a_robust_free_ball() {
        // A = B_1(z), B = {|x + z| > 1 + eps}: one characteristic set
        // {|xi| > eps}; the free region is the eps-ball
        let g = FrequencyGrid::new(2, 128, 8.0).unwrap();
        let z = [0.5, 0.0];
        let eps = 0.97;
        let a = rasterize(&RegionDescriptor::ball(&z, 1.0), &g);
        let b = rasterize(
            &RegionDescriptor::complement(RegionDescriptor::ball(&[-z[0], -z[1]], 1.0 + eps)),
            &g,
        );
        let d = characteristic_decomposition(&a, &b).unwrap();
        assert_eq!(d.class_count(), 1);
        assert!(d.classes[0].window_mask.clipped());
        // class stays outside the eps-ball; free region contains it
        for idx in d.classes[0].window_mask.occupied_indices() {
            let p = g.coord_of(&idx);
            assert!(p[0] * p[0] + p[1] * p[1] > eps * eps);
        }
        for (flat, idx) in g.iter_bins() {
            let p = g.coord_of(&idx);
            if p[0] * p[0] + p[1] * p[1] < (eps - g.bin_step()) * (eps - g.bin_step()) {
                assert!(d.free_region.get(flat));
            }
        }
        assert!(robust_positive_measure(&d.free_region));
    }

    #[test]
    fn rectangular_pair_yields_quadrants() {
        // off-bin box extent so rasterized open-set boundaries stay exact
        let g = FrequencyGrid::new(2, 64, 4.0).unwrap();
        let e = 1.03;
        let a = rasterize(&RegionDescriptor::rect(&[-e, -e], &[e, e]), &g);
        let b = rasterize(&RegionDescriptor::axis_exterior(&[e, e], &[e, e]), &g);
        let d = characteristic_decomposition(&a, &b).unwrap();
        assert_eq!(d.b_labels.count(), 4);
        assert_eq!(d.class_count(), 4);
        for class in &d.classes {
            let quadrant_signs: Vec<[i64; 2]> = class
                .window_mask
                .occupied_indices()
                .map(|i| [i[0].signum(), i[1].signum()])
                .collect();
            assert!(!quadrant_signs.is_empty());
            assert!(quadrant_signs.iter().all(|s| *s == quadrant_signs[0]));
            assert!(quadrant_signs[0][0] != 0 && quadrant_signs[0][1] != 0);
        }
        // exact match with the rasterized open quadrants
        for signs in [[1i8, 1], [1, -1], [-1, 1], [-1, -1]] {
            let quadrant = rasterize(&RegionDescriptor::quadrant(&signs), &g);
            assert!(
                d.classes
                    .iter()
                    .any(|c| c.window_mask.occupancy() == quadrant.occupancy()),
                "no class equals quadrant {signs:?}"
            );
        }
    }

    #[test]
    fn swapped_roles_merge_into_one_class() {
        // A = per-axis exterior, B = open box: four characteristic sets all
        // meet the box, so they merge into a single class
        let g = FrequencyGrid::new(2, 64, 4.0).unwrap();
        let e = 1.03;
        let a = rasterize(&RegionDescriptor::axis_exterior(&[e, e], &[e, e]), &g);
        let b = rasterize(&RegionDescriptor::rect(&[-e, -e], &[e, e]), &g);
        let d = characteristic_decomposition(&a, &b).unwrap();
        assert_eq!(d.a_labels.count(), 4);
        assert!(d.sets.len() >= 2);
        assert_eq!(d.class_count(), 1);
        assert!(!robust_positive_measure(&d.free_region));
    }

    #[test]
    fn set_containments_hold() {
        let g = FrequencyGrid::new(2, 48, 4.0).unwrap();
        let a = rasterize(&RegionDescriptor::ball(&[0.6, 0.2], 0.8), &g);
        let b = rasterize(
            &RegionDescriptor::Union(vec![
                RegionDescriptor::ball(&[-1.4, -0.8], 0.7),
                RegionDescriptor::ball(&[1.6, 1.2], 0.5),
            ]),
            &g,
        );
        let d = characteristic_decomposition(&a, &b).unwrap();
        let b_embedded = b.embed_into(&d.sum_grid).unwrap();
        let mut union_c = RegionMask::empty(&d.sum_grid);
        for set in &d.sets {
            let c_mask = d.sum_labels.component_mask(set.sum_component);
            union_c = union_c.union(&c_mask).unwrap();
            for flat in c_mask.occupied_flats() {
                assert!(set.mask.get(flat), "C_k not inside D_k");
            }
            for flat in set.mask.occupied_flats() {
                assert!(
                    d.sum_mask.get(flat) || b_embedded.get(flat),
                    "D_k escapes S union B"
                );
            }
        }
        assert_eq!(union_c.occupancy(), d.sum_mask.occupancy());
        // merged class masks are pairwise disjoint and cover the window
        // together with the free region
        for (i, c1) in d.classes.iter().enumerate() {
            for c2 in d.classes.iter().skip(i + 1) {
                assert!(c1.mask.intersection(&c2.mask).unwrap().is_empty());
            }
        }
        for (flat, idx) in g.iter_bins() {
            let in_class = d
                .classes
                .iter()
                .any(|c| c.window_mask.contains_index(&idx));
            assert_ne!(in_class, d.free_region.get(flat));
        }
    }

    #[test]
    fn empty_inputs_are_rejected() {
        let g = FrequencyGrid::new(1, 64, 8.0).unwrap();
        let a = rasterize(&RegionDescriptor::ball(&[0.0], 1.0), &g);
        let e = RegionMask::empty(&g);
        assert!(characteristic_decomposition(&a, &e).is_err());
        assert!(characteristic_decomposition(&e, &a).is_err());
    }
}
