//! Truncated Taylor-coefficient model of `H^p(D)` elements.
//!
//! A [`TaylorFunction`] holds the first `N` Taylor coefficients of an
//! analytic function together with its Hardy exponent. Truncations are
//! polynomials, so boundary norms are plain quadratures over the unit
//! circle with no radial limit involved. Quadrature nodes sit at half-step
//! offsets `e^{2 pi i (j + 1/2)/M}` so boundary fixed points of the
//! canonical symbols never land exactly on a node.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[cfg_attr(feature = "std", allow(unused_imports))]
use num_traits::Float;
use crate::mobius::MobiusMap;
use crate::{Error, Result, Tolerances};

pub const DEFAULT_TRUNCATION: usize = 128;
pub const DEFAULT_QUADRATURE: usize = 4096;

/// Value of the sesquilinear dual pairing
/// `<f, g> = (1/2pi) ∫ f(e^{i t}) conj(g(e^{i t})) dt`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairingValue {
    pub value: Complex64,
}

/// A truncated power series `c_0 + c_1 z + ... + c_{N-1} z^{N-1}` regarded
/// as an element of `H^p(D)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TaylorFunction {
    coeffs: Vec<Complex64>,
    p: f64,
}

impl TaylorFunction {
    pub fn new(coeffs: Vec<Complex64>, p: f64) -> Result<Self> {
        validate_exponent(p)?;
        if coeffs.is_empty() {
            return Err(Error::InvalidTruncation);
        }
        Ok(Self { coeffs, p })
    }

    pub fn constant(value: Complex64, p: f64) -> Result<Self> {
        Self::new(vec![value], p)
    }

    /// The monomial `z^degree`.
    pub fn monomial(degree: usize, p: f64) -> Result<Self> {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); degree + 1];
        coeffs[degree] = Complex64::new(1.0, 0.0);
        Self::new(coeffs, p)
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn exponent(&self) -> f64 {
        self.p
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Membership in `H_0^p = z H^p`: the constant coefficient vanishes.
    pub fn vanishes_at_zero(&self) -> bool {
        self.coeffs[0] == Complex64::new(0.0, 0.0)
    }

    /// Horner evaluation of the truncated polynomial.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Coefficient `l^2` norm; equals the `H^2` norm of the truncation.
    pub fn ell2_norm(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|c| c.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// `l^2` norm of the first `k` coefficients.
    pub fn head_ell2(&self, k: usize) -> f64 {
        self.coeffs
            .iter()
            .take(k)
            .map(|c| c.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Boundary `H^p` norm: `(mean_j |f(z_j)|^p)^{1/p}` over `m` half-step
    /// offset nodes. Requires `m >= 4 * len` so the `p = 2` case is exact.
    pub fn hp_norm(&self, m: usize) -> Result<f64> {
        validate_exponent(self.p)?;
        if m < 4 * self.coeffs.len() {
            return Err(Error::QuadratureTooCoarse);
        }
        let mut acc = 0.0f64;
        for j in 0..m {
            let theta = core::f64::consts::TAU * (j as f64 + 0.5) / (m as f64);
            let v = self.evaluate(Complex64::from_polar(1.0, theta)).norm();
            acc += v.powf(self.p);
        }
        Ok((acc / m as f64).powf(1.0 / self.p))
    }

    /// Parseval form of the dual pairing: `sum_n c_n(f) conj(c_n(g))`.
    /// The shorter coefficient sequence is implicitly zero-padded.
    pub fn pairing(&self, other: &TaylorFunction) -> PairingValue {
        let value = self
            .coeffs
            .iter()
            .zip(other.coeffs.iter())
            .map(|(x, y)| x * y.conj())
            .sum();
        PairingValue { value }
    }

    /// First `n` Taylor coefficients of `f ∘ phi` for a self-map `phi`.
    pub fn truncated_compose(
        &self,
        symbol: &MobiusMap,
        n: usize,
        tol: &Tolerances,
    ) -> Result<TaylorFunction> {
        if !symbol.is_self_map(tol) {
            return Err(Error::NotSelfMap);
        }
        if n < self.coeffs.len() {
            return Err(Error::InvalidTruncation);
        }
        let phi = symbol_power_series(symbol, n)?;
        let mut acc = vec![Complex64::new(0.0, 0.0); n];
        acc[0] = self.coeffs[self.coeffs.len() - 1];
        for k in (0..self.coeffs.len() - 1).rev() {
            acc = series_mul_trunc(&acc, &phi, n);
            acc[0] += self.coeffs[k];
        }
        TaylorFunction::new(acc, self.p)
    }
}

pub(crate) fn validate_exponent(p: f64) -> Result<()> {
    if p.is_finite() && p > 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidExponent)
    }
}

/// First `n` Taylor coefficients of a linear fractional map, via the
/// geometric series of the denominator.
pub fn symbol_power_series(m: &MobiusMap, n: usize) -> Result<Vec<Complex64>> {
    let [a, b, c, d] = m.coefficients();
    let scale = a.norm() + b.norm() + c.norm() + d.norm();
    if d.norm() <= 1e-14 * scale {
        // Pole at the origin: no Taylor expansion on the disc.
        return Err(Error::Degenerate);
    }
    let t = -c / d;
    let mut geo = vec![Complex64::new(0.0, 0.0); n];
    geo[0] = Complex64::new(1.0, 0.0) / d;
    for k in 1..n {
        geo[k] = geo[k - 1] * t;
    }
    let mut out: Vec<Complex64> = geo.iter().map(|&g| b * g).collect();
    for (slot, &g) in out[1..].iter_mut().zip(geo.iter()) {
        *slot += a * g;
    }
    Ok(out)
}

/// Product of two truncated series, truncated to length `n`.
pub fn series_mul_trunc(x: &[Complex64], y: &[Complex64], n: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    for (i, &xi) in x.iter().enumerate().take(n) {
        if xi == Complex64::new(0.0, 0.0) {
            continue;
        }
        for (j, &yj) in y.iter().enumerate().take(n - i) {
            out[i + j] += xi * yj;
        }
    }
    out
}

/// Coefficients of `((1 + z)/(1 - z))^lambda`, from the recurrence induced
/// by `(1 - z^2) w' = 2 lambda w`. Principal branch; the base never meets
/// the cut for `z` in the disc.
pub fn cayley_power_coeffs(lambda: Complex64, n: usize) -> Vec<Complex64> {
    let mut c = vec![Complex64::new(0.0, 0.0); n];
    c[0] = Complex64::new(1.0, 0.0);
    if n > 1 {
        c[1] = 2.0 * lambda;
    }
    for k in 1..n.saturating_sub(1) {
        c[k + 1] = (2.0 * lambda * c[k] + (k as f64 - 1.0) * c[k - 1]) / (k as f64 + 1.0);
    }
    c
}

/// Coefficients of `(1 - z)^s` from the binomial recurrence
/// `c_{k+1} = c_k (k - s)/(k + 1)`. Principal branch.
pub fn one_minus_z_power_coeffs(s: Complex64, n: usize) -> Vec<Complex64> {
    let mut c = vec![Complex64::new(0.0, 0.0); n];
    c[0] = Complex64::new(1.0, 0.0);
    for k in 0..n.saturating_sub(1) {
        c[k + 1] = c[k] * (k as f64 - s) / (k as f64 + 1.0);
    }
    c
}
