//! Closed-form spectra, point spectra and eigenfunction families keyed by
//! symbol class, intrinsic parameter and Hardy exponent.
//!
//! Hyperbolic automorphisms carry the annulus with radii
//! `((1+r)/(1-r))^{±1/p}`; hyperbolic non-automorphisms of the first kind
//! the closed disc of radius `r^{-1/p}`; of the second kind the closed disc
//! of radius `r^{1/p}` together with the isolated eigenvalue 1. Elliptic
//! rotations give the closure of the multiplier orbit. The remaining
//! classes are decomposable with spectra outside this catalog's closed
//! forms and are marked numeric-only.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[cfg_attr(feature = "std", allow(unused_imports))]
use num_traits::Float;
use crate::hardy::{cayley_power_coeffs, one_minus_z_power_coeffs, validate_exponent, TaylorFunction};
use crate::mobius::SymbolClass;
use crate::{Error, Result};

/// Membership comparisons on `|lambda|` are exact up to this tolerance.
pub const MEMBERSHIP_TOLERANCE: f64 = 1e-12;
/// `omega` counts as a root of unity when some power is this close to 1.
pub const ROOT_OF_UNITY_TOLERANCE: f64 = 1e-10;
/// Orders up to this bound are scanned for the root-of-unity test.
pub const MAX_ROTATION_ORDER: usize = 1024;

/// Symbolic region of the complex plane.
#[derive(Debug, Clone, PartialEq)]
pub enum RegionVariant {
    Annulus {
        inner: f64,
        outer: f64,
        closed: bool,
    },
    ClosedDisk {
        radius: f64,
    },
    OpenDisk {
        radius: f64,
    },
    DiskUnionPoint {
        radius: f64,
        point: Complex64,
    },
    /// Closure of the orbit `{omega^n}`: a finite cyclic set when `omega`
    /// is a root of unity (order recorded), the full unit circle otherwise.
    FiniteSetClosure {
        generator: Complex64,
        orbit_order: Option<usize>,
    },
    SingletonSet {
        points: Vec<Complex64>,
    },
    NumericOnly,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralRegion {
    pub variant: RegionVariant,
    pub certified_subset_only: bool,
}

impl SpectralRegion {
    pub fn new(variant: RegionVariant) -> Self {
        Self {
            variant,
            certified_subset_only: false,
        }
    }

    fn certified_subset(variant: RegionVariant) -> Self {
        Self {
            variant,
            certified_subset_only: true,
        }
    }

    pub fn is_numeric_only(&self) -> bool {
        matches!(self.variant, RegionVariant::NumericOnly)
    }

    /// Exact set membership, with closed/open boundaries respected up to
    /// [`MEMBERSHIP_TOLERANCE`].
    pub fn contains(&self, lambda: Complex64) -> Result<bool> {
        let t = MEMBERSHIP_TOLERANCE;
        let m = lambda.norm();
        match &self.variant {
            RegionVariant::Annulus {
                inner,
                outer,
                closed,
            } => Ok(if *closed {
                m >= inner - t && m <= outer + t
            } else {
                m > inner + t && m < outer - t
            }),
            RegionVariant::ClosedDisk { radius } => Ok(m <= radius + t),
            RegionVariant::OpenDisk { radius } => Ok(m < radius - t),
            RegionVariant::DiskUnionPoint { radius, point } => {
                Ok(m <= radius + t || (lambda - point).norm() <= t)
            }
            RegionVariant::FiniteSetClosure {
                generator,
                orbit_order,
            } => match orbit_order {
                Some(order) => {
                    let mut w = Complex64::new(1.0, 0.0);
                    for _ in 0..*order {
                        if (lambda - w).norm() <= t {
                            return Ok(true);
                        }
                        w *= generator;
                    }
                    Ok(false)
                }
                None => Ok((m - 1.0).abs() <= t),
            },
            RegionVariant::SingletonSet { points } => {
                Ok(points.iter().any(|p| (lambda - p).norm() <= t))
            }
            RegionVariant::NumericOnly => Err(Error::NumericOnlyRegion),
        }
    }

    /// Fills the bounded holes of the region (the full spectrum `eta`).
    pub fn full_spectrum(&self) -> Result<SpectralRegion> {
        let variant = match &self.variant {
            RegionVariant::Annulus { outer, .. } => RegionVariant::ClosedDisk { radius: *outer },
            RegionVariant::FiniteSetClosure {
                generator,
                orbit_order,
            } => match orbit_order {
                // A finite set has connected complement: nothing to fill.
                Some(_) => self.variant.clone(),
                // The full circle encloses the open disc.
                None => {
                    let _ = generator;
                    RegionVariant::ClosedDisk { radius: 1.0 }
                }
            },
            other => other.clone(),
        };
        if matches!(variant, RegionVariant::NumericOnly) {
            return Err(Error::NumericOnlyRegion);
        }
        Ok(SpectralRegion {
            variant,
            certified_subset_only: self.certified_subset_only,
        })
    }

    /// Supremum of `|lambda|` over the region.
    pub fn max_modulus(&self) -> Result<f64> {
        match &self.variant {
            RegionVariant::Annulus { outer, .. } => Ok(*outer),
            RegionVariant::ClosedDisk { radius } | RegionVariant::OpenDisk { radius } => {
                Ok(*radius)
            }
            RegionVariant::DiskUnionPoint { radius, point } => Ok(radius.max(point.norm())),
            RegionVariant::FiniteSetClosure { .. } => Ok(1.0),
            RegionVariant::SingletonSet { points } => Ok(points
                .iter()
                .map(|p| p.norm())
                .fold(0.0f64, |acc, x| acc.max(x))),
            RegionVariant::NumericOnly => Err(Error::NumericOnlyRegion),
        }
    }
}

/// The spectrum of `C_phi` on `H^p` for the canonical symbol of the class.
pub fn spectrum(class: SymbolClass, param: Complex64, p: f64) -> Result<SpectralRegion> {
    validate_exponent(p)?;
    match class {
        SymbolClass::HyperbolicAutomorphism => {
            let r = ratio_param(param)?;
            let big_k = (1.0 + r) / (1.0 - r);
            Ok(SpectralRegion::new(RegionVariant::Annulus {
                inner: big_k.powf(-1.0 / p),
                outer: big_k.powf(1.0 / p),
                closed: true,
            }))
        }
        SymbolClass::HyperbolicNonAutomorphismI => {
            let r = ratio_param(param)?;
            Ok(SpectralRegion::new(RegionVariant::ClosedDisk {
                radius: r.powf(-1.0 / p),
            }))
        }
        SymbolClass::HyperbolicNonAutomorphismII => {
            let r = ratio_param(param)?;
            Ok(SpectralRegion::new(RegionVariant::DiskUnionPoint {
                radius: r.powf(1.0 / p),
                point: Complex64::new(1.0, 0.0),
            }))
        }
        SymbolClass::EllipticAutomorphism => {
            let omega = unimodular_param(param)?;
            Ok(SpectralRegion::new(RegionVariant::FiniteSetClosure {
                generator: omega,
                orbit_order: rotation_order(omega),
            }))
        }
        SymbolClass::ParabolicAutomorphism
        | SymbolClass::ParabolicNonAutomorphism
        | SymbolClass::Loxodromic => Ok(SpectralRegion::new(RegionVariant::NumericOnly)),
    }
}

/// The point spectrum. For the first-kind hyperbolic non-automorphism the
/// open disc is only certified as a subset of the point spectrum.
pub fn point_spectrum(class: SymbolClass, param: Complex64, p: f64) -> Result<SpectralRegion> {
    validate_exponent(p)?;
    match class {
        SymbolClass::HyperbolicAutomorphism => {
            let r = ratio_param(param)?;
            let big_k = (1.0 + r) / (1.0 - r);
            Ok(SpectralRegion::new(RegionVariant::Annulus {
                inner: big_k.powf(-1.0 / p),
                outer: big_k.powf(1.0 / p),
                closed: false,
            }))
        }
        SymbolClass::HyperbolicNonAutomorphismI => {
            let r = ratio_param(param)?;
            Ok(SpectralRegion::certified_subset(RegionVariant::OpenDisk {
                radius: r.powf(-1.0 / p),
            }))
        }
        SymbolClass::HyperbolicNonAutomorphismII => {
            ratio_param(param)?;
            Ok(SpectralRegion::new(RegionVariant::SingletonSet {
                points: vec![Complex64::new(1.0, 0.0)],
            }))
        }
        _ => Ok(SpectralRegion::new(RegionVariant::NumericOnly)),
    }
}

/// An eigenvalue together with a truncated eigenfunction.
#[derive(Debug, Clone, PartialEq)]
pub struct Eigenpair {
    pub eigenvalue: Complex64,
    pub eigenfunction: TaylorFunction,
    pub parameter: Complex64,
}

/// Constructs the cataloged eigenpair of the canonical symbol.
///
/// * Hyperbolic automorphism: `w_lambda = ((1+z)/(1-z))^lambda` with
///   eigenvalue `((1+r)/(1-r))^lambda`, for `Re(lambda)` inside the strip
///   `(-1/p, 1/p)`.
/// * First-kind non-automorphism: `e_s = (1-z)^s` with eigenvalue `r^s`,
///   for `Re(s) > -1/p`.
/// * Second-kind non-automorphism: the constants, eigenvalue 1.
///
/// All complex powers take the principal branch.
pub fn eigenfunction(
    class: SymbolClass,
    param: Complex64,
    generator: Complex64,
    p: f64,
    n: usize,
) -> Result<Eigenpair> {
    validate_exponent(p)?;
    if n == 0 {
        return Err(Error::InvalidTruncation);
    }
    match class {
        SymbolClass::HyperbolicAutomorphism => {
            let r = ratio_param(param)?;
            if generator.re <= -1.0 / p || generator.re >= 1.0 / p {
                return Err(Error::InadmissibleGenerator);
            }
            let big_k = (1.0 + r) / (1.0 - r);
            let eigenvalue = (generator * big_k.ln()).exp();
            let eigenfunction = TaylorFunction::new(cayley_power_coeffs(generator, n), p)?;
            Ok(Eigenpair {
                eigenvalue,
                eigenfunction,
                parameter: generator,
            })
        }
        SymbolClass::HyperbolicNonAutomorphismI => {
            let r = ratio_param(param)?;
            if generator.re <= -1.0 / p {
                return Err(Error::InadmissibleGenerator);
            }
            let eigenvalue = (generator * r.ln()).exp();
            let eigenfunction = TaylorFunction::new(one_minus_z_power_coeffs(generator, n), p)?;
            Ok(Eigenpair {
                eigenvalue,
                eigenfunction,
                parameter: generator,
            })
        }
        SymbolClass::HyperbolicNonAutomorphismII => {
            ratio_param(param)?;
            Ok(Eigenpair {
                eigenvalue: Complex64::new(1.0, 0.0),
                eigenfunction: TaylorFunction::constant(Complex64::new(1.0, 0.0), p)?,
                parameter: generator,
            })
        }
        _ => Err(Error::UnsupportedClass),
    }
}

/// Smallest `k <= MAX_ROTATION_ORDER` with `omega^k = 1`, if any.
pub fn rotation_order(omega: Complex64) -> Option<usize> {
    let mut w = omega;
    for k in 1..=MAX_ROTATION_ORDER {
        if (w - Complex64::new(1.0, 0.0)).norm() < ROOT_OF_UNITY_TOLERANCE {
            return Some(k);
        }
        w *= omega;
    }
    None
}

fn ratio_param(param: Complex64) -> Result<f64> {
    if param.im.abs() > 1e-8 * (1.0 + param.norm()) {
        return Err(Error::InvalidClassParameter);
    }
    let r = param.re;
    if r > 0.0 && r < 1.0 {
        Ok(r)
    } else {
        Err(Error::InvalidClassParameter)
    }
}

fn unimodular_param(param: Complex64) -> Result<Complex64> {
    if (param.norm() - 1.0).abs() > 1e-8 {
        return Err(Error::InvalidClassParameter);
    }
    Ok(param / param.norm())
}
