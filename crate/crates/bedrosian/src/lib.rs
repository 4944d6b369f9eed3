//! Decide, characterize, and numerically verify identities of the form
//! `T(fg) = f (Tg)` for bounded translation-invariant operators, given the
//! frequency supports of `f` and `g`.
//!
//! A bounded translation-invariant operator `T` on L2 acts through a Fourier
//! multiplier `m`: `(Tf)^ = m f^`. Whether `T` factors through a product
//! `fg` with `supp f^ in A` and `supp g^ in B` is a purely geometric
//! question about `(A, B)`: decompose `A`, `B`, and the Minkowski sum
//! `A + B` into connected components, attach to each sum component the `B`
//! components feeding it, and the operator satisfies the identity exactly
//! when `m` is constant on each of the resulting characteristic sets (with
//! overlapping sets sharing one constant).
//!
//! Everything here works on a discretized frequency window:
//!
//! - [`grid`]: the frequency lattice shared by all computations;
//! - [`region`] / [`mask`]: set descriptions and their rasterizations;
//! - [`components`] / [`minkowski`] / [`decomposition`]: the geometric
//!   characteristic-set machinery;
//! - [`multiplier`] / [`existence`] / [`hilbert_support`]: multiplier
//!   fields, structural verdicts, existence decisions, and the support-set
//!   criterion for the partial Hilbert transforms;
//! - [`signal`] / [`pointwise`] / [`titchmarsh`]: FFT-based numerical
//!   verification plus independent cross-check oracles;
//! - [`config`] / [`report`] / [`scenarios`] / [`cli`]: the JSON-driven
//!   command-line front end and the built-in example catalog.
//!
//! The `examples/` directory has one runnable program per capability; the
//! `bedrosian` binary exposes the same operations as subcommands.

pub mod cli;
pub mod components;
pub mod config;
pub mod decomposition;
pub mod error;
pub mod existence;
mod fft;
pub mod geom;
pub mod grid;
pub mod hilbert_support;
pub mod mask;
pub mod minkowski;
pub mod multiplier;
pub mod pointwise;
pub mod raster;
pub mod region;
pub mod report;
pub mod scenarios;
pub mod signal;
pub mod titchmarsh;

pub use components::{connected_components, ComponentLabeling};
pub use decomposition::{characteristic_decomposition, CharacteristicDecomposition, MergedClass};
pub use error::{Error, Result};
pub use existence::{existence_decision, ExistenceReason, ExistenceReport};
pub use grid::FrequencyGrid;
pub use hilbert_support::{hilbert_support_test, HilbertSupportReport};
pub use mask::{essential_set, rasterize, robust_positive_measure, RegionMask};
pub use minkowski::minkowski_sum;
pub use multiplier::{
    is_ae_constant_on, structural_bedrosian_check, MultiplierField, MultiplierSpec,
    StructuralVerdict,
};
pub use pointwise::{pointwise_criterion_oracle, PointwiseReport};
pub use region::RegionDescriptor;
pub use signal::{
    apply_multiplier, bedrosian_residual, synthesize_bandlimited, synthesize_spectrum,
    verify_bedrosian, SpatialSignal, VerificationReport,
};
pub use titchmarsh::{titchmarsh_check, TitchmarshReport};
