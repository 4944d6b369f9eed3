//! JSON analysis configuration: grid parameters, the two support-set
//! descriptors, an optional multiplier, tolerances, and trial controls.
//!
//! One canonical schema is shared by every subcommand so configurations can
//! be reused across tools. Complex values are written as `[re, im]` pairs
//! (a bare number is accepted as a real value).

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::grid::FrequencyGrid;
use crate::mask::{rasterize, RegionMask};
use crate::multiplier::{MultiplierField, MultiplierSpec};
use crate::region::RegionDescriptor;

/// A complex number that serializes as `[re, im]` and deserializes from
/// either a bare number or a two-element array.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ComplexValue(pub Complex64);

impl Serialize for ComplexValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.0.re, self.0.im].serialize(s)
    }
}

impl<'de> Deserialize<'de> for ComplexValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Real(f64),
            Pair([f64; 2]),
        }
        Ok(match Repr::deserialize(d)? {
            Repr::Real(re) => ComplexValue(Complex64::new(re, 0.0)),
            Repr::Pair([re, im]) => ComplexValue(Complex64::new(re, im)),
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GridConfig {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bins_per_axis: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub half_width: Option<f64>,
}

impl GridConfig {
    /// Dimension-dependent defaults keep every built-in example fast:
    /// 1-D 4096 bins over [-32, 32), 2-D 512 over [-16, 16), 3-D 64 over
    /// [-8, 8).
    pub fn build(&self) -> Result<FrequencyGrid> {
        let (default_bins, default_hw) = match self.dim {
            1 => (4096, 32.0),
            2 => (512, 16.0),
            3 => (64, 8.0),
            other => {
                return Err(Error::InvalidConfig {
                    path: "grid.dim".to_string(),
                    reason: format!("must be 1, 2, or 3, got {other}"),
                })
            }
        };
        FrequencyGrid::new(
            self.dim,
            self.bins_per_axis.unwrap_or(default_bins),
            self.half_width.unwrap_or(default_hw),
        )
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PieceConfig {
    pub region: RegionDescriptor,
    pub value: ComplexValue,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MultiplierConfig {
    Hilbert,
    PartialHilbert { axis: usize },
    Riesz { axis: usize },
    Identity,
    PiecewiseConstant {
        #[serde(default)]
        default: ComplexValue,
        pieces: Vec<PieceConfig>,
    },
}

impl MultiplierConfig {
    pub fn to_spec(&self) -> MultiplierSpec {
        match self {
            MultiplierConfig::Hilbert => MultiplierSpec::Hilbert,
            MultiplierConfig::PartialHilbert { axis } => {
                MultiplierSpec::PartialHilbert { axis: *axis }
            }
            MultiplierConfig::Riesz { axis } => MultiplierSpec::Riesz { axis: *axis },
            MultiplierConfig::Identity => MultiplierSpec::Identity,
            MultiplierConfig::PiecewiseConstant { default, pieces } => {
                MultiplierSpec::PiecewiseConstant {
                    default: default.0,
                    pieces: pieces
                        .iter()
                        .map(|p| (p.region.clone(), p.value.0))
                        .collect(),
                }
            }
        }
    }
}

fn default_constancy_tol() -> f64 {
    1e-9
}

fn default_residual_tol() -> f64 {
    1e-9
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ToleranceConfig {
    #[serde(default = "default_constancy_tol")]
    pub constancy_tol: f64,
    #[serde(default = "default_residual_tol")]
    pub residual_tol: f64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self {
            constancy_tol: default_constancy_tol(),
            residual_tol: default_residual_tol(),
        }
    }
}

fn default_trials() -> u32 {
    10
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AnalysisConfig {
    pub grid: GridConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub set_a: Option<RegionDescriptor>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub set_b: Option<RegionDescriptor>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplier: Option<MultiplierConfig>,
    #[serde(default)]
    pub tolerances: ToleranceConfig,
    #[serde(default = "default_trials")]
    pub trials: u32,
    #[serde(default)]
    pub seed: u64,
}

/// A config with its grid built, descriptors validated and rasterized, and
/// the multiplier field constructed when present.
#[derive(Debug)]
pub struct PreparedConfig {
    pub config: AnalysisConfig,
    pub grid: FrequencyGrid,
    pub set_a: Option<RegionMask>,
    pub set_b: Option<RegionMask>,
    pub multiplier: Option<MultiplierField>,
}

impl AnalysisConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json(&text)
    }

    /// Validate invariants and rasterize. `need_sets` / `need_multiplier`
    /// let commands require the inputs they use.
    pub fn prepare(&self, need_sets: bool, need_multiplier: bool) -> Result<PreparedConfig> {
        let grid = self.grid.build().map_err(|e| match e {
            Error::InvalidGrid(reason) => Error::InvalidConfig {
                path: "grid".to_string(),
                reason,
            },
            other => other,
        })?;
        if self.trials == 0 {
            return Err(Error::InvalidConfig {
                path: "trials".to_string(),
                reason: "must be >= 1".to_string(),
            });
        }
        for (name, tol) in [
            ("tolerances.constancy_tol", self.tolerances.constancy_tol),
            ("tolerances.residual_tol", self.tolerances.residual_tol),
        ] {
            if !tol.is_finite() || tol < 0.0 {
                return Err(Error::InvalidConfig {
                    path: name.to_string(),
                    reason: format!("must be a finite nonnegative number, got {tol}"),
                });
            }
        }

        let mut masks = [None, None];
        for (slot, (name, desc)) in [("set_a", &self.set_a), ("set_b", &self.set_b)]
            .into_iter()
            .enumerate()
        {
            if let Some(desc) = desc {
                desc.validate(grid.dim()).map_err(|e| Error::InvalidConfig {
                    path: name.to_string(),
                    reason: e.to_string(),
                })?;
                let mask = rasterize(desc, &grid);
                if mask.is_empty() {
                    return Err(Error::InvalidConfig {
                        path: name.to_string(),
                        reason: "rasterizes to an empty set on this grid".to_string(),
                    });
                }
                masks[slot] = Some(mask);
            } else if need_sets {
                return Err(Error::InvalidConfig {
                    path: name.to_string(),
                    reason: "required by this command".to_string(),
                });
            }
        }
        let [set_a, set_b] = masks;

        let multiplier = match &self.multiplier {
            Some(mc) => {
                if let MultiplierConfig::PiecewiseConstant { pieces, .. } = mc {
                    for (i, piece) in pieces.iter().enumerate() {
                        piece
                            .region
                            .validate(grid.dim())
                            .map_err(|e| Error::InvalidConfig {
                                path: format!("multiplier.pieces[{i}].region"),
                                reason: e.to_string(),
                            })?;
                    }
                }
                Some(
                    MultiplierField::make(&mc.to_spec(), &grid).map_err(|e| {
                        Error::InvalidConfig {
                            path: "multiplier".to_string(),
                            reason: e.to_string(),
                        }
                    })?,
                )
            }
            None => {
                if need_multiplier {
                    return Err(Error::InvalidConfig {
                        path: "multiplier".to_string(),
                        reason: "required by this command".to_string(),
                    });
                }
                None
            }
        };

        Ok(PreparedConfig {
            config: self.clone(),
            grid,
            set_a,
            set_b,
            multiplier,
        })
    }

    /// Canonical JSON echo (sorted keys, stable float formatting).
    pub fn echo(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("config serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_full_config() {
        let text = r#"{
            "grid": {"dim": 1, "bins_per_axis": 4096, "half_width": 32.0},
            "set_a": {"box": {"lo": [-1.0], "hi": [2.0]}},
            "set_b": {"complement": {"box": {"lo": [-2.0], "hi": [1.0]}}},
            "multiplier": {"kind": "hilbert"},
            "tolerances": {"constancy_tol": 1e-9, "residual_tol": 1e-9},
            "trials": 10,
            "seed": 0
        }"#;
        let cfg = AnalysisConfig::from_json(text).unwrap();
        let prepared = cfg.prepare(true, true).unwrap();
        assert_eq!(prepared.grid.bins_per_axis(), 4096);
        assert!(prepared.set_a.unwrap().occupied_count() > 0);
        assert!(prepared.multiplier.is_some());
    }

    #[test]
    fn grid_defaults_per_dimension() {
        for (dim, bins, hw) in [(1, 4096, 32.0), (2, 512, 16.0), (3, 64, 8.0)] {
            let cfg = GridConfig {
                dim,
                bins_per_axis: None,
                half_width: None,
            };
            let g = cfg.build().unwrap();
            assert_eq!(g.bins_per_axis(), bins);
            assert_eq!(g.half_width(), hw);
        }
    }

    #[test]
    fn complex_value_forms() {
        let v: ComplexValue = serde_json::from_str("2.5").unwrap();
        assert_eq!(v.0, Complex64::new(2.5, 0.0));
        let v: ComplexValue = serde_json::from_str("[1.0, -3.0]").unwrap();
        assert_eq!(v.0, Complex64::new(1.0, -3.0));
        assert_eq!(serde_json::to_string(&v).unwrap(), "[1.0,-3.0]");
    }

    #[test]
    fn piecewise_multiplier_config() {
        let text = r#"{
            "grid": {"dim": 2},
            "multiplier": {
                "kind": "piecewise_constant",
                "default": 0.0,
                "pieces": [
                    {"region": {"quadrant": {"signs": [1, 1]}}, "value": [0.0, -1.0]}
                ]
            }
        }"#;
        let cfg = AnalysisConfig::from_json(text).unwrap();
        let prepared = cfg.prepare(false, true).unwrap();
        let m = prepared.multiplier.unwrap();
        let g = prepared.grid;
        let inside = g.flat_of(&[5, 5, 0]).unwrap();
        let outside = g.flat_of(&[-5, 5, 0]).unwrap();
        assert_eq!(m.value(inside), Complex64::new(0.0, -1.0));
        assert_eq!(m.value(outside), Complex64::default());
    }

    #[test]
    fn invalid_inputs_name_the_config_path() {
        let missing = AnalysisConfig::from_json(r#"{"grid": {"dim": 2}}"#).unwrap();
        let err = missing.prepare(true, false).unwrap_err();
        assert!(err.to_string().contains("set_a"));

        let zero_trials =
            AnalysisConfig::from_json(r#"{"grid": {"dim": 1}, "trials": 0}"#).unwrap();
        assert!(zero_trials
            .prepare(false, false)
            .unwrap_err()
            .to_string()
            .contains("trials"));

        let bad_dim = AnalysisConfig::from_json(
            r#"{"grid": {"dim": 2}, "set_a": {"ball": {"center": [0.0], "radius": 1.0}}}"#,
        )
        .unwrap();
        let err = bad_dim.prepare(false, false).unwrap_err();
        assert!(err.to_string().contains("set_a"), "{err}");

        let empty_set = AnalysisConfig::from_json(
            r#"{"grid": {"dim": 1}, "set_a": "empty"}"#,
        )
        .unwrap();
        assert!(empty_set.prepare(false, false).is_err());
    }
}
