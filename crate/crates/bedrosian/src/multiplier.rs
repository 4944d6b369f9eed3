//! Fourier multiplier fields and almost-everywhere constancy checks.
//!
//! A bounded translation-invariant operator on the grid is represented by its
//! multiplier: one complex value per frequency bin. An operator satisfies the
//! factorization identity `T(fg) = f Tg` for supports `(A, B)` exactly when
//! its multiplier is constant on every characteristic set of the pair, with
//! overlapping sets sharing one constant — which is what
//! [`structural_bedrosian_check`] tests on the merged classes.

use num_complex::Complex64;

use crate::decomposition::CharacteristicDecomposition;
use crate::error::{Error, Result};
use crate::grid::FrequencyGrid;
use crate::mask::{rasterize, RegionMask};
use crate::region::RegionDescriptor;

/// Built-in multiplier families plus piecewise-constant tables.
#[derive(Debug, Clone, PartialEq)]
pub enum MultiplierSpec {
    /// `-i sgn(xi_1)`: the Hilbert transform in one dimension (equal to the
    /// first partial transform in higher dimensions).
    Hilbert,
    /// `-i sgn(xi_axis)`, axis 1-based.
    PartialHilbert { axis: usize },
    /// `-i xi_axis / |xi|`, zero at the origin bin; axis 1-based.
    Riesz { axis: usize },
    Identity,
    /// Ordered `(region, value)` pairs over a default; later pairs override
    /// earlier ones where regions overlap.
    PiecewiseConstant {
        default: Complex64,
        pieces: Vec<(RegionDescriptor, Complex64)>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultiplierKind {
    Hilbert,
    PartialHilbert(usize),
    Riesz(usize),
    Identity,
    PiecewiseConstant,
    Custom,
}

impl MultiplierKind {
    pub fn name(&self) -> String {
        match self {
            MultiplierKind::Hilbert => "hilbert".to_string(),
            MultiplierKind::PartialHilbert(j) => format!("partial_hilbert({j})"),
            MultiplierKind::Riesz(j) => format!("riesz({j})"),
            MultiplierKind::Identity => "identity".to_string(),
            MultiplierKind::PiecewiseConstant => "piecewise_constant".to_string(),
            MultiplierKind::Custom => "custom".to_string(),
        }
    }
}

/// A complex value per frequency bin of a grid, in row-major natural order.
#[derive(Debug, Clone)]
pub struct MultiplierField {
    grid: FrequencyGrid,
    values: Vec<Complex64>,
    kind: MultiplierKind,
}

impl MultiplierField {
    /// Build a field from a spec. Fails when an axis parameter is out of
    /// range for the grid dimension.
    pub fn make(spec: &MultiplierSpec, grid: &FrequencyGrid) -> Result<Self> {
        let check_axis = |axis: usize| -> Result<usize> {
            if axis == 0 || axis > grid.dim() {
                Err(Error::AxisOutOfRange {
                    axis,
                    dim: grid.dim(),
                })
            } else {
                Ok(axis - 1)
            }
        };
        let mut values = vec![Complex64::default(); grid.total_bins()];
        let kind = match spec {
            MultiplierSpec::Hilbert => {
                for (flat, idx) in grid.iter_bins() {
                    values[flat] = Complex64::new(0.0, -(idx[0].signum() as f64));
                }
                MultiplierKind::Hilbert
            }
            MultiplierSpec::PartialHilbert { axis } => {
                let a = check_axis(*axis)?;
                for (flat, idx) in grid.iter_bins() {
                    values[flat] = Complex64::new(0.0, -(idx[a].signum() as f64));
                }
                MultiplierKind::PartialHilbert(*axis)
            }
            MultiplierSpec::Riesz { axis } => {
                let a = check_axis(*axis)?;
                for (flat, idx) in grid.iter_bins() {
                    let p = grid.coord_of(&idx);
                    let norm = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
                    values[flat] = if norm == 0.0 {
                        Complex64::default()
                    } else {
                        Complex64::new(0.0, -p[a] / norm)
                    };
                }
                MultiplierKind::Riesz(*axis)
            }
            MultiplierSpec::Identity => {
                values.fill(Complex64::new(1.0, 0.0));
                MultiplierKind::Identity
            }
            MultiplierSpec::PiecewiseConstant { default, pieces } => {
                values.fill(*default);
                for (region, value) in pieces {
                    let mask = rasterize(region, grid);
                    for flat in mask.occupied_flats() {
                        values[flat] = *value;
                    }
                }
                MultiplierKind::PiecewiseConstant
            }
        };
        Ok(Self {
            grid: *grid,
            values,
            kind,
        })
    }

    /// Wrap raw per-bin values; rejects non-finite entries.
    pub fn from_values(grid: &FrequencyGrid, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.total_bins() {
            return Err(Error::GridMismatch(format!(
                "value buffer has {} entries, grid has {}",
                values.len(),
                grid.total_bins()
            )));
        }
        if let Some(bad) = values
            .iter()
            .position(|v| !v.re.is_finite() || !v.im.is_finite())
        {
            return Err(Error::NonFinite(bad));
        }
        Ok(Self {
            grid: *grid,
            values,
            kind: MultiplierKind::Custom,
        })
    }

    pub fn grid(&self) -> &FrequencyGrid {
        &self.grid
    }

    pub fn kind(&self) -> MultiplierKind {
        self.kind
    }

    pub(crate) fn set_kind(&mut self, kind: MultiplierKind) {
        self.kind = kind;
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn value(&self, flat: usize) -> Complex64 {
        self.values[flat]
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Bin-wise product (the multiplier of the composed operators).
    pub fn product(&self, other: &MultiplierField) -> Result<MultiplierField> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch(
                "multiplier product needs one grid".to_string(),
            ));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b)
            .collect();
        MultiplierField::from_values(&self.grid, values)
    }

    /// `alpha * self + beta * other`.
    pub fn linear_combination(
        &self,
        alpha: Complex64,
        other: &MultiplierField,
        beta: Complex64,
    ) -> Result<MultiplierField> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch(
                "multiplier combination needs one grid".to_string(),
            ));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| alpha * a + beta * b)
            .collect();
        MultiplierField::from_values(&self.grid, values)
    }
}

/// Result of an almost-everywhere constancy test over one mask.
#[derive(Debug, Clone, Copy)]
pub struct ConstancyCheck {
    pub constant: bool,
    /// Arithmetic mean of the field over the evaluated bins.
    pub value: Complex64,
    pub max_dev: f64,
    /// Number of bins actually evaluated (mask bins inside the field window).
    pub bins: usize,
}

/// Test whether `m` is constant (within `tol`, by max deviation from the
/// mean) over the occupied bins of `mask`. The mask may live on a larger
/// window on the same lattice; evaluation restricts to bins inside the field
/// window. An empty evaluation set counts as constant with value zero.
pub fn is_ae_constant_on(m: &MultiplierField, mask: &RegionMask, tol: f64) -> ConstancyCheck {
    debug_assert!(
        m.grid().same_lattice(mask.grid()),
        "field and mask must share a lattice"
    );
    let mut sum = Complex64::default();
    let mut flats = Vec::new();
    for idx in mask.occupied_indices() {
        if let Some(flat) = m.grid().flat_of(&idx) {
            sum += m.value(flat);
            flats.push(flat);
        }
    }
    if flats.is_empty() {
        return ConstancyCheck {
            constant: true,
            value: Complex64::default(),
            max_dev: 0.0,
            bins: 0,
        };
    }
    let mean = sum / flats.len() as f64;
    let max_dev = flats
        .iter()
        .map(|&f| (m.value(f) - mean).norm())
        .fold(0.0, f64::max);
    ConstancyCheck {
        constant: max_dev <= tol,
        value: mean,
        max_dev,
        bins: flats.len(),
    }
}

/// Per-class record of a structural verdict.
#[derive(Debug, Clone)]
pub struct ClassConstancy {
    /// 1-based merged-class id.
    pub class_id: usize,
    /// Measure of the class mask restricted to the field window.
    pub measure: f64,
    pub mean: Complex64,
    pub max_dev: f64,
    pub constant: bool,
}

/// Verdict of the characteristic-set constancy test: the operator satisfies
/// the identity for the pair exactly when every merged class passes.
#[derive(Debug, Clone)]
pub struct StructuralVerdict {
    pub classes: Vec<ClassConstancy>,
    pub tolerance: f64,
    pub pass: bool,
}

impl StructuralVerdict {
    pub fn max_dev(&self) -> f64 {
        self.classes.iter().map(|c| c.max_dev).fold(0.0, f64::max)
    }
}

/// Run [`is_ae_constant_on`] over every merged class of a decomposition.
pub fn structural_bedrosian_check(
    m: &MultiplierField,
    decomp: &CharacteristicDecomposition,
    tol: f64,
) -> StructuralVerdict {
    let step = m.grid().bin_step().powi(m.grid().dim() as i32);
    let classes: Vec<ClassConstancy> = decomp
        .classes
        .iter()
        .enumerate()
        .map(|(i, class)| {
            let check = is_ae_constant_on(m, &class.window_mask, tol);
            ClassConstancy {
                class_id: i + 1,
                measure: check.bins as f64 * step,
                mean: check.value,
                max_dev: check.max_dev,
                constant: check.constant,
            }
        })
        .collect();
    let pass = classes.iter().all(|c| c.constant);
    StructuralVerdict {
        classes,
        tolerance: tol,
        pass,
    }
}
