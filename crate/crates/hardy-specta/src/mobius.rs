//! Exact algebra, fixed-point analysis, classification and canonicalisation
//! of linear fractional self-maps of the unit disc.
//!
//! A map `phi(z) = (az + b)/(cz + d)` with `ad - bc != 0` is stored in the
//! normalisation `ad - bc = 1`, with the remaining sign ambiguity fixed by
//! making the first nonzero coefficient of `(a, b, c, d)` have nonnegative
//! real part. This gives every map a single reproducible representative.

use core::fmt;

use num_complex::Complex64;
use crate::{Error, Result, Tolerances};

/// Fixed-point classes of non-identity linear fractional self-maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymbolClass {
    HyperbolicAutomorphism,
    EllipticAutomorphism,
    ParabolicAutomorphism,
    HyperbolicNonAutomorphismI,
    HyperbolicNonAutomorphismII,
    ParabolicNonAutomorphism,
    Loxodromic,
}

impl SymbolClass {
    pub const ALL: [SymbolClass; 7] = [
        SymbolClass::HyperbolicAutomorphism,
        SymbolClass::EllipticAutomorphism,
        SymbolClass::ParabolicAutomorphism,
        SymbolClass::HyperbolicNonAutomorphismI,
        SymbolClass::HyperbolicNonAutomorphismII,
        SymbolClass::ParabolicNonAutomorphism,
        SymbolClass::Loxodromic,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            SymbolClass::HyperbolicAutomorphism => "HA",
            SymbolClass::EllipticAutomorphism => "EA",
            SymbolClass::ParabolicAutomorphism => "PA",
            SymbolClass::HyperbolicNonAutomorphismI => "HNA_I",
            SymbolClass::HyperbolicNonAutomorphismII => "HNA_II",
            SymbolClass::ParabolicNonAutomorphism => "PNA",
            SymbolClass::Loxodromic => "LOX",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|c| c.tag() == tag)
    }

    /// True for the classes whose members are disc automorphisms.
    pub fn is_automorphism_class(self) -> bool {
        matches!(
            self,
            SymbolClass::HyperbolicAutomorphism
                | SymbolClass::EllipticAutomorphism
                | SymbolClass::ParabolicAutomorphism
        )
    }
}

impl fmt::Display for SymbolClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A point of the Riemann sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpherePoint {
    Finite(Complex64),
    Infinity,
}

impl SpherePoint {
    pub fn finite(self) -> Option<Complex64> {
        match self {
            SpherePoint::Finite(z) => Some(z),
            SpherePoint::Infinity => None,
        }
    }

    pub fn is_infinity(self) -> bool {
        matches!(self, SpherePoint::Infinity)
    }

    pub fn modulus(self) -> f64 {
        match self {
            SpherePoint::Finite(z) => z.norm(),
            SpherePoint::Infinity => f64::INFINITY,
        }
    }

    fn location(self, tol: f64) -> Location {
        match self {
            SpherePoint::Infinity => Location::Outside,
            SpherePoint::Finite(z) => {
                let m = z.norm();
                if (m - 1.0).abs() <= tol {
                    Location::Boundary
                } else if m < 1.0 {
                    Location::Inside
                } else {
                    Location::Outside
                }
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Location {
    Inside,
    Boundary,
    Outside,
}

/// Fixed points of a non-identity map, with the derivative at each.
///
/// `first` is the distinguished fixed point: the one inside the open disc if
/// exactly one is, otherwise the one with the smaller multiplier modulus
/// (the Denjoy-Wolff point for self-maps). For a parabolic map both points
/// coincide and both multipliers are 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedPointPair {
    pub first: SpherePoint,
    pub second: SpherePoint,
    pub first_multiplier: Complex64,
    pub second_multiplier: Complex64,
    pub is_parabolic: bool,
}

/// Canonical form of a classified symbol.
///
/// `param` is the intrinsic (conjugation-derived) parameter of the class:
/// the ratio `r` for the hyperbolic classes, the rotation number for the
/// elliptic class, the half-plane translation length for the parabolic
/// classes and the multiplier for loxodromic maps, whose canonical interior
/// fixed point is carried separately in `param_aux`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CanonicalDecomposition {
    pub class: SymbolClass,
    pub param: Complex64,
    pub param_aux: Option<Complex64>,
    pub conjugator: Option<MobiusMap>,
    pub conjugator_is_disc_automorphism: bool,
}

const ONE: Complex64 = Complex64::new(1.0, 0.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Boundary samples used by the automorphism test.
const AUTOMORPHISM_SAMPLES: usize = 16;
/// Boundary samples used to validate a canonical decomposition.
const CONJUGATION_SAMPLES: usize = 64;

/// A linear fractional transformation in the determinant-one normalisation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MobiusMap {
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
}

impl MobiusMap {
    /// Builds the map `z -> (az + b)/(cz + d)` and normalises it.
    pub fn new(
        a: Complex64,
        b: Complex64,
        c: Complex64,
        d: Complex64,
        tol: &Tolerances,
    ) -> Result<Self> {
        let scale = a.norm().max(b.norm()).max(c.norm()).max(d.norm());
        if scale == 0.0 || !scale.is_finite() {
            return Err(Error::Degenerate);
        }
        let (a, b, c, d) = (a / scale, b / scale, c / scale, d / scale);
        let det = a * d - b * c;
        if det.norm() < tol.degeneracy {
            return Err(Error::Degenerate);
        }
        let s = det.sqrt();
        let mut m = Self {
            a: a / s,
            b: b / s,
            c: c / s,
            d: d / s,
        };
        m.fix_phase();
        Ok(m)
    }

    /// Makes the first nonzero coefficient have nonnegative real part, so
    /// projectively equal maps share one representative.
    fn fix_phase(&mut self) {
        let total = self.a.norm() + self.b.norm() + self.c.norm() + self.d.norm();
        let cutoff = 1e-12 * total;
        for coef in [self.a, self.b, self.c, self.d] {
            if coef.norm() > cutoff {
                let re_negligible = coef.re.abs() <= 1e-12 * coef.norm();
                let flip = if re_negligible {
                    coef.im < 0.0
                } else {
                    coef.re < 0.0
                };
                if flip {
                    self.a = -self.a;
                    self.b = -self.b;
                    self.c = -self.c;
                    self.d = -self.d;
                }
                return;
            }
        }
    }

    pub fn identity() -> Self {
        Self {
            a: ONE,
            b: ZERO,
            c: ZERO,
            d: ONE,
        }
    }

    /// The map `z -> w z` for nonzero `w` (a rotation when `|w| = 1`).
    pub fn scaling(w: Complex64, tol: &Tolerances) -> Result<Self> {
        Self::new(w, ZERO, ZERO, ONE, tol)
    }

    /// The disc automorphism `z -> e^{i phase} (z - alpha)/(1 - conj(alpha) z)`.
    pub fn disc_automorphism(alpha: Complex64, phase: f64, tol: &Tolerances) -> Result<Self> {
        if alpha.norm() >= 1.0 {
            return Err(Error::InvalidClassParameter);
        }
        let rot = Complex64::from_polar(1.0, phase);
        Self::new(rot, -rot * alpha, -alpha.conj(), ONE, tol)
    }

    /// The map sending `(z1, z2, z3)` to `(0, 1, oo)`; inputs must be
    /// pairwise distinct and finite.
    pub fn through_points(
        z1: Complex64,
        z2: Complex64,
        z3: Complex64,
        tol: &Tolerances,
    ) -> Result<Self> {
        Self::new(z2 - z3, -z1 * (z2 - z3), z2 - z1, -z3 * (z2 - z1), tol)
    }

    pub fn coefficients(&self) -> [Complex64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn det(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    /// Evaluates the map at a finite point. Callers keep `z` away from the
    /// pole `-d/c`; for self-maps the pole lies outside the closed disc.
    pub fn apply(&self, z: Complex64) -> Complex64 {
        (self.a * z + self.b) / (self.c * z + self.d)
    }

    /// Evaluates the map on the Riemann sphere.
    pub fn apply_sphere(&self, p: SpherePoint) -> SpherePoint {
        let scale = self.a.norm() + self.b.norm() + self.c.norm() + self.d.norm();
        match p {
            SpherePoint::Infinity => {
                if self.c.norm() <= 1e-14 * scale {
                    SpherePoint::Infinity
                } else {
                    SpherePoint::Finite(self.a / self.c)
                }
            }
            SpherePoint::Finite(z) => {
                let den = self.c * z + self.d;
                if den.norm() <= 1e-14 * scale * z.norm().max(1.0) {
                    SpherePoint::Infinity
                } else {
                    SpherePoint::Finite((self.a * z + self.b) / den)
                }
            }
        }
    }

    /// Derivative `phi'(z) = (ad - bc)/(cz + d)^2`.
    pub fn derivative(&self, z: Complex64) -> Complex64 {
        let den = self.c * z + self.d;
        self.det() / (den * den)
    }

    /// `self` after `other`: `(self ∘ other)(z) = self(other(z))`.
    pub fn compose(&self, other: &Self, tol: &Tolerances) -> Result<Self> {
        Self::new(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
            tol,
        )
    }

    pub fn inverse(&self, tol: &Tolerances) -> Result<Self> {
        Self::new(self.d, -self.b, -self.c, self.a, tol)
    }

    pub fn is_identity(&self, tol: &Tolerances) -> bool {
        self.b.norm() <= tol.fixed_point
            && self.c.norm() <= tol.fixed_point
            && (self.a - self.d).norm() <= tol.fixed_point
    }

    /// Distance between normalised representatives, insensitive to the
    /// residual sign ambiguity of the phase fix.
    pub fn max_coefficient_distance(&self, other: &Self) -> f64 {
        let dist = |s: f64| -> f64 {
            let sign = Complex64::new(s, 0.0);
            (self.a - sign * other.a)
                .norm()
                .max((self.b - sign * other.b).norm())
                .max((self.c - sign * other.c).norm())
                .max((self.d - sign * other.d).norm())
        };
        dist(1.0).min(dist(-1.0))
    }

    /// Schur-type self-map test: `|b conj(d) - a conj(c)| + |ad - bc| <=
    /// |d|^2 - |c|^2`, with equality exactly when the image touches the
    /// unit circle.
    pub fn is_self_map(&self, tol: &Tolerances) -> bool {
        let lhs = (self.b * self.d.conj() - self.a * self.c.conj()).norm() + self.det().norm();
        let rhs = self.d.norm_sqr() - self.c.norm_sqr();
        let scale = self.a.norm_sqr() + self.b.norm_sqr() + self.c.norm_sqr() + self.d.norm_sqr();
        lhs <= rhs + tol.fixed_point * scale
    }

    /// Minimum and maximum of `|phi|` over `n` equispaced boundary samples.
    pub fn boundary_modulus_extremes(&self, n: usize) -> (f64, f64) {
        let mut lo = f64::INFINITY;
        let mut hi = 0.0f64;
        for k in 0..n {
            let theta = core::f64::consts::TAU * (k as f64) / (n as f64);
            let m = self.apply(Complex64::from_polar(1.0, theta)).norm();
            lo = lo.min(m);
            hi = hi.max(m);
        }
        (lo, hi)
    }

    /// A self-map is an automorphism exactly when the self-map inequality is
    /// an equality and the boundary is mapped onto the boundary; both
    /// criteria are checked.
    pub fn is_automorphism(&self, tol: &Tolerances) -> bool {
        if !self.is_self_map(tol) {
            return false;
        }
        let lhs = (self.b * self.d.conj() - self.a * self.c.conj()).norm() + self.det().norm();
        let rhs = self.d.norm_sqr() - self.c.norm_sqr();
        let scale = self.a.norm_sqr() + self.b.norm_sqr() + self.c.norm_sqr() + self.d.norm_sqr();
        if (rhs - lhs).abs() > tol.fixed_point * scale {
            return false;
        }
        let (lo, _) = self.boundary_modulus_extremes(AUTOMORPHISM_SAMPLES);
        lo >= 1.0 - 100.0 * tol.fixed_point
    }

    /// Solves `cz^2 + (d - a)z - b = 0` on the sphere and attaches the
    /// multipliers. Two fixed points collapse to a parabolic double point
    /// when the discriminant is below `eps_par * (|a| + |d|)^2`.
    pub fn fixed_points(&self, tol: &Tolerances) -> Result<FixedPointPair> {
        if self.is_identity(tol) {
            return Err(Error::IdentityMap);
        }
        let scale = self.a.norm() + self.d.norm();
        let coef_scale = scale + self.b.norm() + self.c.norm();
        let disc = (self.d - self.a) * (self.d - self.a) + 4.0 * self.b * self.c;
        let parabolic = disc.norm() < tol.parabolic * scale * scale;

        if self.c.norm() <= tol.degeneracy * coef_scale {
            // Affine map (az + b)/d.
            if parabolic {
                return Ok(FixedPointPair {
                    first: SpherePoint::Infinity,
                    second: SpherePoint::Infinity,
                    first_multiplier: ONE,
                    second_multiplier: ONE,
                    is_parabolic: true,
                });
            }
            let finite = SpherePoint::Finite(self.b / (self.d - self.a));
            let m_finite = self.a / self.d;
            let m_inf = self.d / self.a;
            return Ok(order_pair(
                (finite, m_finite),
                (SpherePoint::Infinity, m_inf),
                tol,
            ));
        }

        if parabolic {
            let z0 = (self.a - self.d) / (2.0 * self.c);
            let p = SpherePoint::Finite(z0);
            return Ok(FixedPointPair {
                first: p,
                second: p,
                first_multiplier: ONE,
                second_multiplier: ONE,
                is_parabolic: true,
            });
        }

        // Stable quadratic roots: pick the square-root branch that avoids
        // cancellation in -(B + s)/2.
        let bb = self.d - self.a;
        let mut s = disc.sqrt();
        if (bb.conj() * s).re < 0.0 {
            s = -s;
        }
        let q = -(bb + s) / 2.0;
        let z1 = q / self.c;
        let z2 = -self.b / q;
        let mult = |z: Complex64| {
            let den = self.c * z + self.d;
            self.det() / (den * den)
        };
        Ok(order_pair(
            (SpherePoint::Finite(z1), mult(z1)),
            (SpherePoint::Finite(z2), mult(z2)),
            tol,
        ))
    }

    /// Assigns the fixed-point class of a non-identity self-map.
    pub fn classify(&self, tol: &Tolerances) -> Result<SymbolClass> {
        if !self.is_self_map(tol) {
            return Err(Error::NotSelfMap);
        }
        if self.is_identity(tol) {
            return Err(Error::IdentityMap);
        }
        let fp = self.fixed_points(tol)?;
        let auto = self.is_automorphism(tol);
        if fp.is_parabolic {
            return Ok(if auto {
                SymbolClass::ParabolicAutomorphism
            } else {
                SymbolClass::ParabolicNonAutomorphism
            });
        }
        let l1 = fp.first.location(tol.fixed_point);
        let l2 = fp.second.location(tol.fixed_point);
        Ok(match (l1, l2) {
            (Location::Boundary, Location::Boundary) => SymbolClass::HyperbolicAutomorphism,
            (Location::Boundary, Location::Outside) | (Location::Outside, Location::Boundary) => {
                SymbolClass::HyperbolicNonAutomorphismI
            }
            (Location::Boundary, Location::Inside) | (Location::Inside, Location::Boundary) => {
                SymbolClass::HyperbolicNonAutomorphismII
            }
            _ => {
                if auto {
                    SymbolClass::EllipticAutomorphism
                } else {
                    SymbolClass::Loxodromic
                }
            }
        })
    }

    /// Extracts the intrinsic parameter and a disc-automorphism conjugator
    /// `sigma` with `phi = sigma ∘ phi_canon ∘ sigma^{-1}`.
    ///
    /// The parameter comes from conjugation invariants (multipliers at the
    /// fixed points; the Cayley-transported translation length for the
    /// parabolic classes). The conjugator is validated on 64 boundary
    /// samples and dropped if the round-trip residual exceeds `eps_fix`.
    pub fn to_canonical(&self, tol: &Tolerances) -> Result<CanonicalDecomposition> {
        let class = self.classify(tol)?;
        let fp = self.fixed_points(tol)?;

        let (param, param_aux, tau) = match class {
            SymbolClass::HyperbolicAutomorphism => {
                let z1 = fp.first.finite().ok_or(Error::InvalidClassParameter)?;
                let z2 = fp.second.finite().ok_or(Error::InvalidClassParameter)?;
                let mu = sanitize_positive_real(fp.first_multiplier)?;
                let r = (1.0 - mu) / (1.0 + mu);
                if !(r > 0.0 && r < 1.0) {
                    return Err(Error::InvalidClassParameter);
                }
                let mid = ccw_midpoint(unit(z1), unit(z2));
                let fwd = Self::through_points(unit(z1), mid, unit(z2), tol)?;
                let target = Self::through_points(
                    ONE,
                    Complex64::new(0.0, 1.0),
                    Complex64::new(-1.0, 0.0),
                    tol,
                )?;
                let tau = target.inverse(tol)?.compose(&fwd, tol)?;
                (Complex64::new(r, 0.0), None, tau)
            }
            SymbolClass::EllipticAutomorphism => {
                let p = fp.first.finite().ok_or(Error::InvalidClassParameter)?;
                let omega = unit(fp.first_multiplier);
                let tau = Self::disc_automorphism(p, 0.0, tol)?;
                (omega, None, tau)
            }
            SymbolClass::HyperbolicNonAutomorphismI => {
                let zeta = unit(fp.first.finite().ok_or(Error::InvalidClassParameter)?);
                let tau0 = match fp.second {
                    SpherePoint::Infinity => Self::identity(),
                    SpherePoint::Finite(q) => {
                        Self::disc_automorphism(ONE / q.conj(), 0.0, tol)?
                    }
                };
                let zeta1 = unit(tau0.apply(zeta));
                let tau = Self::scaling(zeta1.conj(), tol)?.compose(&tau0, tol)?;
                let r = sanitize_positive_real(fp.first_multiplier)?;
                if !(r > 0.0 && r < 1.0) {
                    return Err(Error::InvalidClassParameter);
                }
                (Complex64::new(r, 0.0), None, tau)
            }
            SymbolClass::HyperbolicNonAutomorphismII => {
                let p = fp.first.finite().ok_or(Error::InvalidClassParameter)?;
                let zeta = unit(fp.second.finite().ok_or(Error::InvalidClassParameter)?);
                let tau0 = Self::disc_automorphism(p, 0.0, tol)?;
                let zeta1 = unit(tau0.apply(zeta));
                let tau = Self::scaling(zeta1.conj(), tol)?.compose(&tau0, tol)?;
                let r = sanitize_positive_real(fp.first_multiplier)?;
                if !(r > 0.0 && r < 1.0) {
                    return Err(Error::InvalidClassParameter);
                }
                (Complex64::new(r, 0.0), None, tau)
            }
            SymbolClass::ParabolicAutomorphism | SymbolClass::ParabolicNonAutomorphism => {
                let zeta = unit(fp.first.finite().ok_or(Error::InvalidClassParameter)?);
                let tau = Self::scaling(zeta.conj(), tol)?;
                let conj_map = tau.compose(self, tol)?.compose(&tau.inverse(tol)?, tol)?;
                let w0 = conj_map.apply(ZERO);
                let a = (ONE + w0) / (ONE - w0) - ONE;
                let a = if class == SymbolClass::ParabolicAutomorphism {
                    Complex64::new(0.0, a.im)
                } else {
                    if a.re <= 0.0 {
                        return Err(Error::InvalidClassParameter);
                    }
                    a
                };
                (a, None, tau)
            }
            SymbolClass::Loxodromic => {
                let p = fp.first.finite().ok_or(Error::InvalidClassParameter)?;
                let tau = match fp.second {
                    SpherePoint::Infinity => Self::identity(),
                    SpherePoint::Finite(q) => {
                        Self::disc_automorphism(ONE / q.conj(), 0.0, tol)?
                    }
                };
                let c = tau.apply(p);
                (fp.first_multiplier, Some(c), tau)
            }
        };

        let sigma = tau.inverse(tol)?;
        let canon = canonical_map(class, param, param_aux, tol)?;
        let residual = conjugation_residual(self, &sigma, &canon, tol)?;
        let sigma_is_auto = sigma.is_automorphism(tol);
        let ok = residual < tol.fixed_point && sigma_is_auto;
        Ok(CanonicalDecomposition {
            class,
            param,
            param_aux,
            conjugator: if residual < tol.fixed_point {
                Some(sigma)
            } else {
                None
            },
            conjugator_is_disc_automorphism: ok,
        })
    }
}

/// Builds the canonical representative of a class from its parameter.
pub fn canonical_map(
    class: SymbolClass,
    param: Complex64,
    param_aux: Option<Complex64>,
    tol: &Tolerances,
) -> Result<MobiusMap> {
    match class {
        SymbolClass::HyperbolicAutomorphism => {
            let r = ratio_param(param)?;
            MobiusMap::new(ONE, Complex64::new(r, 0.0), Complex64::new(r, 0.0), ONE, tol)
        }
        SymbolClass::EllipticAutomorphism => {
            if (param.norm() - 1.0).abs() > 1e-8 || (param - ONE).norm() <= 1e-12 {
                return Err(Error::InvalidClassParameter);
            }
            MobiusMap::scaling(unit(param), tol)
        }
        SymbolClass::ParabolicAutomorphism => {
            if param.re.abs() > 1e-8 * (1.0 + param.norm()) || param.norm() <= 1e-12 {
                return Err(Error::InvalidClassParameter);
            }
            let a = Complex64::new(0.0, param.im);
            parabolic_canonical(a, tol)
        }
        SymbolClass::ParabolicNonAutomorphism => {
            if param.re <= 0.0 {
                return Err(Error::InvalidClassParameter);
            }
            parabolic_canonical(param, tol)
        }
        SymbolClass::HyperbolicNonAutomorphismI => {
            let r = ratio_param(param)?;
            MobiusMap::new(
                Complex64::new(r, 0.0),
                Complex64::new(1.0 - r, 0.0),
                ZERO,
                ONE,
                tol,
            )
        }
        SymbolClass::HyperbolicNonAutomorphismII => {
            let r = ratio_param(param)?;
            MobiusMap::new(
                Complex64::new(r, 0.0),
                ZERO,
                Complex64::new(r - 1.0, 0.0),
                ONE,
                tol,
            )
        }
        SymbolClass::Loxodromic => {
            let a = param;
            let c = param_aux.ok_or(Error::InvalidClassParameter)?;
            if a.norm() <= 1e-12 || c.norm() >= 1.0 {
                return Err(Error::InvalidClassParameter);
            }
            if a.norm() + (ONE - a).norm() * c.norm() > 1.0 + 1e-9 {
                return Err(Error::InvalidClassParameter);
            }
            // a(z - c) + c = az + c(1 - a)
            MobiusMap::new(a, c * (ONE - a), ZERO, ONE, tol)
        }
    }
}

/// `((2 - a)z + a) / (-az + 2 + a)`: the translation `w -> w + a` in the
/// right half-plane model `w = (1 + z)/(1 - z)`.
fn parabolic_canonical(a: Complex64, tol: &Tolerances) -> Result<MobiusMap> {
    MobiusMap::new(2.0 * ONE - a, a, -a, 2.0 * ONE + a, tol)
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

fn sanitize_positive_real(m: Complex64) -> Result<f64> {
    if m.im.abs() > 1e-8 * (1.0 + m.norm()) || m.re <= 0.0 {
        return Err(Error::InvalidClassParameter);
    }
    Ok(m.re)
}

fn unit(z: Complex64) -> Complex64 {
    z / z.norm()
}

/// Midpoint of the counterclockwise boundary arc from `z1` to `z2`; keeps
/// the three-point conjugator orientation-preserving.
fn ccw_midpoint(z1: Complex64, z2: Complex64) -> Complex64 {
    let t1 = z1.arg();
    let mut delta = (z2.arg() - t1) % core::f64::consts::TAU;
    if delta < 0.0 {
        delta += core::f64::consts::TAU;
    }
    Complex64::from_polar(1.0, t1 + delta / 2.0)
}

/// Max over boundary samples of `|phi(z) - sigma(canon(sigma^{-1}(z)))|`.
fn conjugation_residual(
    phi: &MobiusMap,
    sigma: &MobiusMap,
    canon: &MobiusMap,
    tol: &Tolerances,
) -> Result<f64> {
    let recomposed = sigma
        .compose(canon, tol)?
        .compose(&sigma.inverse(tol)?, tol)?;
    let mut worst = 0.0f64;
    for k in 0..CONJUGATION_SAMPLES {
        let z = Complex64::from_polar(
            1.0,
            core::f64::consts::TAU * (k as f64) / (CONJUGATION_SAMPLES as f64),
        );
        worst = worst.max((phi.apply(z) - recomposed.apply(z)).norm());
    }
    Ok(worst)
}

fn order_pair(
    x: (SpherePoint, Complex64),
    y: (SpherePoint, Complex64),
    tol: &Tolerances,
) -> FixedPointPair {
    let x_inside = x.0.location(tol.fixed_point) == Location::Inside;
    let y_inside = y.0.location(tol.fixed_point) == Location::Inside;
    let first_is_x = if x_inside != y_inside {
        x_inside
    } else if (x.1.norm() - y.1.norm()).abs() > 1e-14 {
        x.1.norm() < y.1.norm()
    } else {
        // Deterministic tie-break on coordinates.
        match (x.0, y.0) {
            (SpherePoint::Finite(u), SpherePoint::Finite(v)) => {
                (u.re, u.im) <= (v.re, v.im)
            }
            (SpherePoint::Finite(_), SpherePoint::Infinity) => true,
            _ => false,
        }
    };
    let (f, s) = if first_is_x { (x, y) } else { (y, x) };
    FixedPointPair {
        first: f.0,
        second: s.0,
        first_multiplier: f.1,
        second_multiplier: s.1,
        is_parabolic: false,
    }
}
