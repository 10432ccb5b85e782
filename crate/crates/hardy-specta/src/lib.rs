//! Linear fractional self-maps of the unit disc and the composition operators
//! they induce on Hardy spaces `H^p(D)`, `1 < p < oo`.
//!
//! The crate is organised around the pipeline a spectral query goes through:
//!
//! * [`mobius`] — exact algebra, fixed-point analysis, classification and
//!   canonicalisation of linear fractional self-maps of the disc.
//! * [`hardy`] — truncated Taylor-coefficient model of `H^p` elements:
//!   evaluation, boundary norms, the dual pairing, composition.
//! * [`operator`] — matrix model of `C_phi` and its adjoint on the monomial
//!   basis, symbol iteration, local spectral radius estimation.
//! * [`catalog`] — closed-form spectra, point spectra and eigenfunction
//!   families keyed by symbol class and intrinsic parameter.
//! * [`verdict`] — SVEP / Dunford property (C) / decomposability verdicts per
//!   class, local spectra and radii, invariant-subspace spectrum options and
//!   product stability.
//! * [`verify`] — numerical corroboration checks: eigen-residuals, the
//!   similarity identity, the eigenfunction-span density probe, radius
//!   regressions and classification fuzzing.
//!
//! The crate is `no_std` (with `alloc`); the `std` feature only adds
//! `std::error::Error` impls. Complex special functions route through
//! `libm` in every configuration.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(feature = "std")]
extern crate std;

pub mod catalog;
mod error;
pub mod hardy;
pub mod mobius;
pub mod operator;
pub mod verdict;
pub mod verify;

pub use error::{Error, Result};

/// Numerical tolerances shared by the symbol algebra.
///
/// `fixed_point` bounds fixed-point and conjugation residuals, `parabolic`
/// is the relative discriminant threshold that collapses two fixed points
/// into a parabolic double point, and `degeneracy` is the determinant floor
/// below which a coefficient matrix is rejected.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub fixed_point: f64,
    pub parabolic: f64,
    pub degeneracy: f64,
}

impl Tolerances {
    pub const fn new(fixed_point: f64, parabolic: f64, degeneracy: f64) -> Self {
        Self {
            fixed_point,
            parabolic,
            degeneracy,
        }
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::new(1e-10, 1e-9, 1e-12)
    }
}
