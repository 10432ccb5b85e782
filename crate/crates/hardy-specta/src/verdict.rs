//! Queryable fact base: SVEP, Dunford property (C) and decomposability per
//! symbol class, cataloged local spectra and radii, invariant-subspace
//! spectrum options, and product stability for commuting symbols.
//!
//! Flags are three-valued. Facts quoted from the literature and facts
//! obtained by closing them under the implications
//! `decomposable => property (C) => SVEP` carry distinct citation entries;
//! cells the sources are silent on stay `NotStated`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[cfg_attr(feature = "std", allow(unused_imports))]
use num_traits::Float;
use crate::catalog::{point_spectrum, spectrum, RegionVariant, SpectralRegion};
use crate::hardy::{validate_exponent, TaylorFunction};
use crate::mobius::{MobiusMap, SymbolClass};
use crate::{Error, Result, Tolerances};

/// Relative tolerance for the constant / vanishing-at-zero membership tests.
pub const MEMBERSHIP_REL_TOLERANCE: f64 = 1e-12;

/// A three-valued verdict flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriState {
    Holds,
    Fails,
    NotStated,
}

impl TriState {
    pub fn as_str(self) -> &'static str {
        match self {
            TriState::Holds => "true",
            TriState::Fails => "false",
            TriState::NotStated => "notStatedInPaper",
        }
    }

    pub fn holds(self) -> bool {
        self == TriState::Holds
    }
}

/// A (claim, source) pair attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Citation {
    pub claim: String,
    pub anchor: String,
}

impl Citation {
    fn new(claim: &str, anchor: &str) -> Self {
        Self {
            claim: String::from(claim),
            anchor: String::from(anchor),
        }
    }
}

/// The verdict row of a symbol class.
#[derive(Debug, Clone, PartialEq)]
pub struct VerdictReport {
    pub class: SymbolClass,
    pub svep: TriState,
    pub svep_adjoint: TriState,
    pub dunford_c: TriState,
    pub dunford_c_adjoint: TriState,
    pub decomposable: TriState,
    pub decomposable_adjoint: TriState,
    pub citations: Vec<Citation>,
}

impl VerdictReport {
    /// Checks `property (C) => SVEP` and `decomposable => property (C)` in
    /// both directions on the emitted flags.
    pub fn implications_hold(&self) -> bool {
        let chain = |dec: TriState, c: TriState, svep: TriState| {
            (!dec.holds() || c.holds()) && (!c.holds() || svep.holds())
        };
        chain(self.decomposable, self.dunford_c, self.svep)
            && chain(
                self.decomposable_adjoint,
                self.dunford_c_adjoint,
                self.svep_adjoint,
            )
    }
}

const IMPLICATION_C_TO_SVEP: &str = "property (C) implies the single-valued extension property";
const IMPLICATION_DEC_TO_C: &str = "every decomposable operator has property (C)";

/// The verdict row for a symbol class.
pub fn verdict(class: SymbolClass) -> VerdictReport {
    let mut citations = Vec::new();
    let (svep, svep_adj, c, c_adj, dec, dec_adj) = match class {
        SymbolClass::HyperbolicAutomorphism => {
            citations.push(Citation::new(
                "C_phi fails the SVEP on H^p, 1 <= p < oo",
                "hyperbolic automorphism: annular point spectrum with interior",
            ));
            citations.push(Citation::new(
                "C_phi* has the Dunford property (C), 1 < p < oo",
                "hyperbolic automorphism: dense glocal subspaces spanned by ((1+z)/(1-z))^lambda",
            ));
            citations.push(Citation::new(
                "C_phi lacks property (C) and decomposability",
                IMPLICATION_C_TO_SVEP,
            ));
            citations.push(Citation::new("C_phi* has the SVEP", IMPLICATION_C_TO_SVEP));
            (
                TriState::Fails,
                TriState::Holds,
                TriState::Fails,
                TriState::Holds,
                TriState::Fails,
                TriState::NotStated,
            )
        }
        SymbolClass::EllipticAutomorphism | SymbolClass::ParabolicAutomorphism => {
            citations.push(Citation::new(
                "C_phi is generalized scalar, hence decomposable, and so is its adjoint",
                "Smith: elliptic and parabolic automorphisms induce generalized scalar operators",
            ));
            citations.push(Citation::new(
                "both directions inherit property (C) and the SVEP",
                IMPLICATION_DEC_TO_C,
            ));
            all_true()
        }
        SymbolClass::HyperbolicNonAutomorphismI => {
            citations.push(Citation::new(
                "C_phi fails the SVEP on H^p, 1 <= p < oo",
                "first-kind hyperbolic non-automorphism: eigenfunction family (1-z)^s on a disc",
            ));
            citations.push(Citation::new(
                "C_phi* has the Dunford property (C)",
                "first-kind hyperbolic non-automorphism: dense glocal subspaces from span{(1-z)^s}",
            ));
            citations.push(Citation::new(
                "C_phi lacks property (C) and decomposability",
                IMPLICATION_C_TO_SVEP,
            ));
            citations.push(Citation::new("C_phi* has the SVEP", IMPLICATION_C_TO_SVEP));
            (
                TriState::Fails,
                TriState::Holds,
                TriState::Fails,
                TriState::Holds,
                TriState::Fails,
                TriState::NotStated,
            )
        }
        SymbolClass::HyperbolicNonAutomorphismII => {
            citations.push(Citation::new(
                "C_phi has the Dunford property (C), 1 < p < oo",
                "second-kind hyperbolic non-automorphism: similarity to 1 (+) (r C_psi)*",
            ));
            citations.push(Citation::new(
                "C_phi* fails the SVEP",
                "second-kind hyperbolic non-automorphism: adjoint similar to 1 (+) r C_psi",
            ));
            citations.push(Citation::new("C_phi has the SVEP", IMPLICATION_C_TO_SVEP));
            citations.push(Citation::new(
                "C_phi* lacks property (C) and decomposability",
                IMPLICATION_C_TO_SVEP,
            ));
            (
                TriState::Holds,
                TriState::Fails,
                TriState::Holds,
                TriState::Fails,
                TriState::NotStated,
                TriState::Fails,
            )
        }
        SymbolClass::ParabolicNonAutomorphism => {
            citations.push(Citation::new(
                "C_phi is decomposable, and so is its adjoint",
                "Shapiro: parabolic non-automorphisms induce decomposable composition operators",
            ));
            citations.push(Citation::new(
                "both directions inherit property (C) and the SVEP",
                IMPLICATION_DEC_TO_C,
            ));
            all_true()
        }
        SymbolClass::Loxodromic => {
            citations.push(Citation::new(
                "sigma(C_phi) is totally disconnected, so C_phi and C_phi* are decomposable",
                "Kamowitz: loxodromic symbols give totally disconnected spectra",
            ));
            citations.push(Citation::new(
                "both directions inherit property (C) and the SVEP",
                IMPLICATION_DEC_TO_C,
            ));
            all_true()
        }
    };
    VerdictReport {
        class,
        svep,
        svep_adjoint: svep_adj,
        dunford_c: c,
        dunford_c_adjoint: c_adj,
        decomposable: dec,
        decomposable_adjoint: dec_adj,
        citations,
    }
}

fn all_true() -> (TriState, TriState, TriState, TriState, TriState, TriState) {
    (
        TriState::Holds,
        TriState::Holds,
        TriState::Holds,
        TriState::Holds,
        TriState::Holds,
        TriState::Holds,
    )
}

/// A cataloged local-spectrum answer.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalSpectrumAnswer {
    pub region: SpectralRegion,
    pub predicted_radius: f64,
    pub case_label: String,
}

/// `f` is a constant multiple of 1, up to the relative membership tolerance.
pub fn is_constant(f: &TaylorFunction) -> bool {
    let total = f.ell2_norm();
    if total == 0.0 {
        return false;
    }
    let tail: f64 = f.coefficients()[1..]
        .iter()
        .map(|c| c.norm_sqr())
        .sum::<f64>()
        .sqrt();
    tail <= MEMBERSHIP_REL_TOLERANCE * total
}

/// `f` lies in `H_0^p` (vanishes at the origin), up to the tolerance.
pub fn vanishes_at_origin(f: &TaylorFunction) -> bool {
    let total = f.ell2_norm();
    if total == 0.0 {
        return false;
    }
    f.coefficients()[0].norm() < MEMBERSHIP_REL_TOLERANCE * total
}

/// The local spectrum of `f`, where cataloged: both hyperbolic
/// non-automorphism adjoints fill the whole spectrum for every nonzero `f`;
/// the second-kind forward direction follows the constant / vanishing /
/// mixed trichotomy.
pub fn local_spectrum(
    class: SymbolClass,
    param: Complex64,
    p: f64,
    f: &TaylorFunction,
    adjoint: bool,
) -> Result<LocalSpectrumAnswer> {
    validate_exponent(p)?;
    if f.ell2_norm() == 0.0 {
        return Err(Error::ZeroFunction);
    }
    match (class, adjoint) {
        (SymbolClass::HyperbolicAutomorphism, true)
        | (SymbolClass::HyperbolicNonAutomorphismI, true) => {
            let region = spectrum(class, param, p)?;
            let predicted_radius = region.max_modulus()?;
            Ok(LocalSpectrumAnswer {
                region,
                predicted_radius,
                case_label: String::from("adjoint: local spectrum fills the spectrum"),
            })
        }
        (SymbolClass::HyperbolicNonAutomorphismII, false) => {
            if is_constant(f) {
                let region = point_spectrum(class, param, p)?;
                Ok(LocalSpectrumAnswer {
                    region,
                    predicted_radius: 1.0,
                    case_label: String::from("constant: singleton {1}"),
                })
            } else if vanishes_at_origin(f) {
                let full = spectrum(class, param, p)?;
                let radius = match full.variant {
                    RegionVariant::DiskUnionPoint { radius, .. } => radius,
                    _ => return Err(Error::NotCataloged),
                };
                Ok(LocalSpectrumAnswer {
                    region: SpectralRegion::new(RegionVariant::ClosedDisk { radius }),
                    predicted_radius: radius,
                    case_label: String::from("vanishes at origin: closed disc of radius r^(1/p)"),
                })
            } else {
                let region = spectrum(class, param, p)?;
                let predicted_radius = region.max_modulus()?;
                Ok(LocalSpectrumAnswer {
                    region,
                    predicted_radius,
                    case_label: String::from("mixed: full spectrum"),
                })
            }
        }
        _ => Err(Error::NotCataloged),
    }
}

/// Max modulus of the cataloged local spectrum.
pub fn local_radius_predicted(
    class: SymbolClass,
    param: Complex64,
    p: f64,
    f: &TaylorFunction,
    adjoint: bool,
) -> Result<f64> {
    Ok(local_spectrum(class, param, p, f, adjoint)?.predicted_radius)
}

/// The possible spectra of restrictions to non-trivial closed invariant
/// subspaces, where cataloged.
pub fn invariant_subspace_spectrum_options(
    class: SymbolClass,
    param: Complex64,
    p: f64,
    adjoint: bool,
) -> Result<Vec<SpectralRegion>> {
    validate_exponent(p)?;
    match (class, adjoint) {
        (SymbolClass::HyperbolicAutomorphism, true) => {
            let annulus = spectrum(class, param, p)?;
            let filled = annulus.full_spectrum()?;
            Ok(vec![annulus, filled])
        }
        (SymbolClass::HyperbolicNonAutomorphismI, true) => {
            Ok(vec![spectrum(class, param, p)?])
        }
        (SymbolClass::HyperbolicNonAutomorphismII, false) => {
            let full = spectrum(class, param, p)?;
            let radius = match full.variant {
                RegionVariant::DiskUnionPoint { radius, .. } => radius,
                _ => return Err(Error::NotCataloged),
            };
            Ok(vec![
                point_spectrum(class, param, p)?,
                SpectralRegion::new(RegionVariant::ClosedDisk { radius }),
                full,
            ])
        }
        _ => Err(Error::NotCataloged),
    }
}

/// Verdict for the product `C_phi C_psi = C_{psi ∘ phi}` of commuting
/// symbols. Commutation is checked projectively on the coefficient
/// matrices, which also covers the parabolic double-point case.
pub fn product_verdict(
    phi: &MobiusMap,
    psi: &MobiusMap,
    tol: &Tolerances,
) -> Result<VerdictReport> {
    if !phi.is_self_map(tol) || !psi.is_self_map(tol) {
        return Err(Error::NotSelfMap);
    }
    let forward = psi.compose(phi, tol)?;
    let backward = phi.compose(psi, tol)?;
    if forward.max_coefficient_distance(&backward) > 10.0 * tol.fixed_point {
        return Err(Error::NonCommuting);
    }
    let class = forward.classify(tol)?;
    Ok(verdict(class))
}
