//! Region descriptors: expression trees over geometric primitives with exact
//! pointwise membership predicates.
//!
//! Descriptors are the configuration-facing representation of frequency
//! support sets. They serialize as externally tagged JSON objects, e.g.
//! `{"ball": {"center": [0, 0], "radius": 1.0}}` or
//! `{"complement": {"ball": {...}}}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{FrequencyGrid, Point, MAX_DIM};

/// Half-space orientation: `+` keeps `x_axis > threshold`, `-` keeps
/// `x_axis < threshold`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Orientation {
    #[serde(rename = "+")]
    Pos,
    #[serde(rename = "-")]
    Neg,
}

/// An expression tree describing a subset of frequency space.
///
/// All primitives are open sets except `Full`/`Empty`; complements of open
/// primitives are closed. Membership is evaluated exactly at points, so the
/// open/closed distinction only matters for points landing precisely on a
/// boundary.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RegionDescriptor {
    /// Open ball `{x : |x - center| < radius}`.
    Ball { center: Vec<f64>, radius: f64 },
    /// Open axis-aligned box `{x : lo_j < x_j < hi_j}`.
    Box { lo: Vec<f64>, hi: Vec<f64> },
    /// Open half-space along one axis (1-based).
    HalfSpace {
        axis: usize,
        orientation: Orientation,
        threshold: f64,
    },
    /// Open hyper-quadrant `{x : signs_j * x_j > 0}` for signs in `{-1, 1}`.
    Quadrant { signs: Vec<i8> },
    Full,
    Empty,
    Union(Vec<RegionDescriptor>),
    Intersection(Vec<RegionDescriptor>),
    Complement(Box<RegionDescriptor>),
    /// `{x : x - offset in of}`.
    Translate {
        offset: Vec<f64>,
        of: Box<RegionDescriptor>,
    },
    /// `{x : -x in of}`.
    Reflect(Box<RegionDescriptor>),
}

impl RegionDescriptor {
    /// Exact membership predicate. Total on all points: coordinates beyond a
    /// primitive's stored vectors are treated as zero (use [`validate`] to
    /// reject mismatched dimensions up front).
    ///
    /// [`validate`]: RegionDescriptor::validate
    pub fn contains(&self, p: &Point) -> bool {
        match self {
            RegionDescriptor::Ball { center, radius } => {
                let mut d2 = 0.0;
                for (axis, &x) in p.iter().enumerate() {
                    let c = center.get(axis).copied().unwrap_or(0.0);
                    let d = x - c;
                    d2 += d * d;
                }
                d2 < radius * radius
            }
            RegionDescriptor::Box { lo, hi } => (0..MAX_DIM).all(|axis| {
                let l = lo.get(axis).copied().unwrap_or(0.0);
                let h = hi.get(axis).copied().unwrap_or(0.0);
                // axes beyond the stored extent are unconstrained
                if axis >= lo.len() && axis >= hi.len() {
                    true
                } else {
                    l < p[axis] && p[axis] < h
                }
            }),
            RegionDescriptor::HalfSpace {
                axis,
                orientation,
                threshold,
            } => {
                if *axis == 0 || *axis > MAX_DIM {
                    return false;
                }
                match orientation {
                    Orientation::Pos => p[*axis - 1] > *threshold,
                    Orientation::Neg => p[*axis - 1] < *threshold,
                }
            }
            RegionDescriptor::Quadrant { signs } => signs
                .iter()
                .enumerate()
                .all(|(axis, &s)| s as f64 * p[axis] > 0.0),
            RegionDescriptor::Full => true,
            RegionDescriptor::Empty => false,
            RegionDescriptor::Union(children) => children.iter().any(|c| c.contains(p)),
            RegionDescriptor::Intersection(children) => children.iter().all(|c| c.contains(p)),
            RegionDescriptor::Complement(child) => !child.contains(p),
            RegionDescriptor::Translate { offset, of } => {
                let mut q = *p;
                for (axis, slot) in q.iter_mut().enumerate() {
                    *slot -= offset.get(axis).copied().unwrap_or(0.0);
                }
                of.contains(&q)
            }
            RegionDescriptor::Reflect(child) => {
                let q = [-p[0], -p[1], -p[2]];
                child.contains(&q)
            }
        }
    }

    /// Check that every primitive's vectors match the grid dimension and that
    /// numeric parameters are sane. Returns the offending node path on error.
    pub fn validate(&self, dim: usize) -> Result<()> {
        self.validate_at(dim, "region")
    }

    fn validate_at(&self, dim: usize, path: &str) -> Result<()> {
        let err = |reason: String| {
            Err(Error::InvalidDescriptor {
                path: path.to_string(),
                reason,
            })
        };
        match self {
            RegionDescriptor::Ball { center, radius } => {
                if center.len() != dim {
                    return err(format!("center has {} entries, need {dim}", center.len()));
                }
                if !radius.is_finite() || *radius <= 0.0 {
                    return err(format!("radius must be positive and finite, got {radius}"));
                }
            }
            RegionDescriptor::Box { lo, hi } => {
                if lo.len() != dim || hi.len() != dim {
                    return err(format!(
                        "lo/hi have {}/{} entries, need {dim}",
                        lo.len(),
                        hi.len()
                    ));
                }
                for axis in 0..dim {
                    if lo[axis] >= hi[axis] {
                        return err(format!("lo[{axis}] must be < hi[{axis}]"));
                    }
                }
            }
            RegionDescriptor::HalfSpace { axis, threshold, .. } => {
                if *axis == 0 || *axis > dim {
                    return Err(Error::AxisOutOfRange { axis: *axis, dim });
                }
                if !threshold.is_finite() {
                    return err("threshold must be finite".to_string());
                }
            }
            RegionDescriptor::Quadrant { signs } => {
                if signs.len() != dim {
                    return err(format!("signs has {} entries, need {dim}", signs.len()));
                }
                if signs.iter().any(|&s| s != 1 && s != -1) {
                    return err("signs entries must be +1 or -1".to_string());
                }
            }
            RegionDescriptor::Full | RegionDescriptor::Empty => {}
            RegionDescriptor::Union(children) | RegionDescriptor::Intersection(children) => {
                for (i, c) in children.iter().enumerate() {
                    c.validate_at(dim, &format!("{path}[{i}]"))?;
                }
            }
            RegionDescriptor::Complement(child) => {
                child.validate_at(dim, &format!("{path}.complement"))?
            }
            RegionDescriptor::Translate { offset, of } => {
                if offset.len() != dim {
                    return err(format!("offset has {} entries, need {dim}", offset.len()));
                }
                of.validate_at(dim, &format!("{path}.translate"))?;
            }
            RegionDescriptor::Reflect(child) => {
                child.validate_at(dim, &format!("{path}.reflect"))?
            }
        }
        Ok(())
    }

    /// Structural test for whether rasterizing onto `grid` truncates the set:
    /// true when the tree is `Full`, contains a `Complement`, a `HalfSpace`,
    /// or a `Quadrant`, or when a ball/box extends beyond
    /// `[-half_width, half_width)` on some axis (after accumulated
    /// translations and reflections). Conservative for intersections.
    pub fn exceeds_window(&self, grid: &FrequencyGrid) -> bool {
        self.exceeds_inner(grid, 1.0, [0.0; MAX_DIM])
    }

    fn exceeds_inner(&self, grid: &FrequencyGrid, scale: f64, offset: Point) -> bool {
        let hw = grid.half_width();
        match self {
            RegionDescriptor::Ball { center, radius } => (0..grid.dim()).any(|axis| {
                let c = scale * center.get(axis).copied().unwrap_or(0.0) + offset[axis];
                c - radius < -hw || c + radius > hw
            }),
            RegionDescriptor::Box { lo, hi } => (0..grid.dim()).any(|axis| {
                let a = scale * lo.get(axis).copied().unwrap_or(0.0) + offset[axis];
                let b = scale * hi.get(axis).copied().unwrap_or(0.0) + offset[axis];
                a.min(b) < -hw || a.max(b) > hw
            }),
            RegionDescriptor::HalfSpace { .. } | RegionDescriptor::Quadrant { .. } => true,
            RegionDescriptor::Full => true,
            RegionDescriptor::Empty => false,
            RegionDescriptor::Union(children) | RegionDescriptor::Intersection(children) => {
                children.iter().any(|c| c.exceeds_inner(grid, scale, offset))
            }
            RegionDescriptor::Complement(_) => true,
            RegionDescriptor::Translate { offset: off, of } => {
                let mut shifted = offset;
                for (axis, slot) in shifted.iter_mut().enumerate() {
                    *slot += scale * off.get(axis).copied().unwrap_or(0.0);
                }
                of.exceeds_inner(grid, scale, shifted)
            }
            RegionDescriptor::Reflect(child) => child.exceeds_inner(grid, -scale, offset),
        }
    }

    /// Convenience constructors for common shapes.
    pub fn ball(center: &[f64], radius: f64) -> Self {
        RegionDescriptor::Ball {
            center: center.to_vec(),
            radius,
        }
    }

    pub fn rect(lo: &[f64], hi: &[f64]) -> Self {
        RegionDescriptor::Box {
            lo: lo.to_vec(),
            hi: hi.to_vec(),
        }
    }

    pub fn quadrant(signs: &[i8]) -> Self {
        RegionDescriptor::Quadrant {
            signs: signs.to_vec(),
        }
    }

    pub fn complement(inner: RegionDescriptor) -> Self {
        RegionDescriptor::Complement(Box::new(inner))
    }

    /// Product over axes of `R \ [-b_j, a_j]` — the per-axis two-sided
    /// exterior used by rectangular support-set constructions.
    pub fn axis_exterior(a: &[f64], b: &[f64]) -> Self {
        let dim = a.len();
        let factors = (0..dim)
            .map(|axis| {
                RegionDescriptor::Union(vec![
                    RegionDescriptor::HalfSpace {
                        axis: axis + 1,
                        orientation: Orientation::Neg,
                        threshold: -b[axis],
                    },
                    RegionDescriptor::HalfSpace {
                        axis: axis + 1,
                        orientation: Orientation::Pos,
                        threshold: a[axis],
                    },
                ])
            })
            .collect();
        RegionDescriptor::Intersection(factors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ball_membership_is_strict() {
        let b = RegionDescriptor::ball(&[0.0], 1.0);
        assert!(b.contains(&[0.999, 0.0, 0.0]));
        assert!(!b.contains(&[1.0, 0.0, 0.0]));
    }

    #[test]
    fn double_reflect_is_identity() {
        let d = RegionDescriptor::ball(&[1.0, 2.0], 0.5);
        let rr = RegionDescriptor::Reflect(Box::new(RegionDescriptor::Reflect(Box::new(
            d.clone(),
        ))));
        for p in [[1.2, 2.1, 0.0], [-1.0, -2.0, 0.0], [0.0, 0.0, 0.0]] {
            assert_eq!(d.contains(&p), rr.contains(&p));
        }
    }

    #[test]
    fn translate_shifts_membership() {
        let d = RegionDescriptor::Translate {
            offset: vec![2.0],
            of: Box::new(RegionDescriptor::ball(&[0.0], 1.0)),
        };
        assert!(d.contains(&[2.5, 0.0, 0.0]));
        assert!(!d.contains(&[0.0, 0.0, 0.0]));
    }

    #[test]
    fn serde_tagged_shape() {
        let d = RegionDescriptor::ball(&[0.0, 0.0], 1.0);
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(json, r#"{"ball":{"center":[0.0,0.0],"radius":1.0}}"#);
        let back: RegionDescriptor = serde_json::from_str(&json).unwrap();
        assert_eq!(back, d);

        let nested: RegionDescriptor = serde_json::from_str(
            r#"{"complement":{"box":{"lo":[-1.0,-1.0],"hi":[1.0,1.0]}}}"#,
        )
        .unwrap();
        assert!(nested.contains(&[2.0, 0.0, 0.0]));
        assert!(!nested.contains(&[0.0, 0.0, 0.0]));
    }

    #[test]
    fn validate_catches_dim_mismatch() {
        let d = RegionDescriptor::ball(&[0.0], 1.0);
        assert!(d.validate(1).is_ok());
        assert!(d.validate(2).is_err());
        let hs = RegionDescriptor::HalfSpace {
            axis: 3,
            orientation: Orientation::Pos,
            threshold: 0.0,
        };
        assert!(hs.validate(2).is_err());
    }

    #[test]
    fn window_excess_detection() {
        let g = FrequencyGrid::new(1, 256, 32.0).unwrap();
        assert!(!RegionDescriptor::ball(&[0.0], 1.05).exceeds_window(&g));
        assert!(RegionDescriptor::ball(&[31.5, 0.0], 1.0).exceeds_window(&g));
        assert!(RegionDescriptor::Full.exceeds_window(&g));
        assert!(RegionDescriptor::complement(RegionDescriptor::ball(&[0.0], 1.0))
            .exceeds_window(&g));
        let translated = RegionDescriptor::Translate {
            offset: vec![31.5],
            of: Box::new(RegionDescriptor::ball(&[0.0], 1.0)),
        };
        assert!(translated.exceeds_window(&g));
    }
}
