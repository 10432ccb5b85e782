//! Matrix model of `C_phi` and `C_phi*` on the truncated monomial basis,
//! symbol iteration, and local spectral radius estimation.
//!
//! Column `n` of the matrix holds the first `N` Taylor coefficients of
//! `phi^n` (the image of the monomial `z^n`). The monomials are orthonormal
//! for the boundary pairing, so the adjoint's matrix is the conjugate
//! transpose regardless of the exponent.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[cfg_attr(feature = "std", allow(unused_imports))]
use num_traits::Float;
use crate::hardy::{series_mul_trunc, symbol_power_series, TaylorFunction};
use crate::mobius::MobiusMap;
use crate::{Error, Result, Tolerances};

/// Norm bounds within which power iterations are trusted.
const NORM_FLOOR: f64 = 1e-300;
const NORM_CEIL: f64 = 1e300;

/// Truncated matrix of a composition operator (or its adjoint).
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix {
    entries: Vec<Complex64>,
    n: usize,
    symbol: MobiusMap,
    adjoint: bool,
}

impl OperatorMatrix {
    /// Builds the `n x n` matrix of `C_phi`: column `j` holds the first `n`
    /// coefficients of `phi^j`.
    pub fn build(symbol: &MobiusMap, n: usize, tol: &Tolerances) -> Result<Self> {
        if !symbol.is_self_map(tol) {
            return Err(Error::NotSelfMap);
        }
        if n == 0 {
            return Err(Error::InvalidTruncation);
        }
        let phi = symbol_power_series(symbol, n)?;
        let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
        let mut col = vec![Complex64::new(0.0, 0.0); n];
        col[0] = Complex64::new(1.0, 0.0);
        for j in 0..n {
            if j > 0 {
                col = series_mul_trunc(&col, &phi, n);
            }
            for (k, &v) in col.iter().enumerate() {
                entries[k * n + j] = v;
            }
        }
        Ok(Self {
            entries,
            n,
            symbol: *symbol,
            adjoint: false,
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn symbol(&self) -> &MobiusMap {
        &self.symbol
    }

    pub fn is_adjoint(&self) -> bool {
        self.adjoint
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.n + col]
    }

    /// Row-major entries, for external diagnostics and serialization.
    pub fn row_major_entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// Conjugate transpose; models the adjoint for the boundary pairing.
    pub fn adjoint(&self) -> Self {
        let mut entries = vec![Complex64::new(0.0, 0.0); self.n * self.n];
        for k in 0..self.n {
            for j in 0..self.n {
                entries[k * self.n + j] = self.entries[j * self.n + k].conj();
            }
        }
        Self {
            entries,
            n: self.n,
            symbol: self.symbol,
            adjoint: !self.adjoint,
        }
    }

    /// Applies the matrix to a coefficient vector (zero-padded or truncated
    /// to the matrix size).
    pub fn apply(&self, coeffs: &[Complex64]) -> Vec<Complex64> {
        let cols = coeffs.len().min(self.n);
        (0..self.n)
            .map(|k| {
                let row = &self.entries[k * self.n..(k + 1) * self.n];
                row[..cols]
                    .iter()
                    .zip(coeffs.iter())
                    .map(|(a, x)| a * x)
                    .sum()
            })
            .collect()
    }

    /// Plain matrix product; both factors must share the truncation order.
    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "matrix sizes must agree");
        let n = self.n;
        let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
        for k in 0..n {
            for l in 0..n {
                let x = self.entries[k * n + l];
                if x == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    entries[k * n + j] += x * rhs.entries[l * n + j];
                }
            }
        }
        Self {
            entries,
            n,
            symbol: self.symbol,
            adjoint: self.adjoint,
        }
    }
}

/// `phi` composed with itself `n` times, via the coefficient-matrix power.
pub fn iterate_symbol(m: &MobiusMap, n: usize, tol: &Tolerances) -> Result<MobiusMap> {
    if n == 0 {
        return Err(Error::InvalidRange);
    }
    let mut acc: Option<MobiusMap> = None;
    let mut base = *m;
    let mut k = n;
    loop {
        if k & 1 == 1 {
            acc = Some(match acc {
                None => base,
                Some(a) => a.compose(&base, tol)?,
            });
        }
        k >>= 1;
        if k == 0 {
            break;
        }
        base = base.compose(&base, tol)?;
    }
    Ok(acc.expect("n >= 1"))
}

/// Least-squares fit of `log ||T^n f||` against `n`, exponentiated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusEstimate {
    pub estimate: f64,
    pub window: (usize, usize),
    pub residual: f64,
}

/// Estimates the local spectral radius `limsup ||T^n f||^{1/n}`.
///
/// The forward direction evaluates `f ∘ phi^(n)` through the exact symbol
/// iterate, so truncation error never compounds and the norm is an honest
/// boundary quadrature of a rational function. The adjoint direction uses
/// matrix powers of the conjugate transpose at truncation `trunc` and takes
/// norms in the dual exponent.
pub fn local_spectral_radius_estimate(
    symbol: &MobiusMap,
    f: &TaylorFunction,
    adjoint: bool,
    window: (usize, usize),
    trunc: usize,
    quad: usize,
    tol: &Tolerances,
) -> Result<RadiusEstimate> {
    if !symbol.is_self_map(tol) {
        return Err(Error::NotSelfMap);
    }
    if f.ell2_norm() == 0.0 {
        return Err(Error::ZeroFunction);
    }
    let (n0, n1) = window;
    if n0 < 1 || n1 <= n0 {
        return Err(Error::InvalidRange);
    }

    let mut log_norms = Vec::with_capacity(n1 - n0 + 1);
    if adjoint {
        if f.len() > trunc {
            return Err(Error::InvalidTruncation);
        }
        let p = f.exponent();
        let dual_p = p / (p - 1.0);
        let matrix = OperatorMatrix::build(symbol, trunc, tol)?.adjoint();
        let quad = quad.max(4 * trunc);
        let mut v = f.coefficients().to_vec();
        v.resize(trunc, Complex64::new(0.0, 0.0));
        for n in 1..=n1 {
            v = matrix.apply(&v);
            if n >= n0 {
                let g = TaylorFunction::new(v.clone(), dual_p)?;
                let norm = g.hp_norm(quad)?;
                if !(NORM_FLOOR..=NORM_CEIL).contains(&norm) {
                    return Err(Error::NumericalUnderflow);
                }
                log_norms.push(norm.ln());
            }
        }
    } else {
        let mut iterate = *symbol;
        for n in 1..=n1 {
            if n > 1 {
                iterate = iterate.compose(symbol, tol)?;
            }
            if n >= n0 {
                let norm = composed_boundary_norm(f, &iterate, quad)?;
                if !(NORM_FLOOR..=NORM_CEIL).contains(&norm) {
                    return Err(Error::NumericalUnderflow);
                }
                log_norms.push(norm.ln());
            }
        }
    }

    let (slope, residual) = slope_fit(n0, &log_norms);
    Ok(RadiusEstimate {
        estimate: slope.exp(),
        window,
        residual,
    })
}

/// `H^p` boundary norm of `f ∘ phi`, sampled without expanding the
/// composition in series.
fn composed_boundary_norm(f: &TaylorFunction, phi: &MobiusMap, m: usize) -> Result<f64> {
    if m < 4 * f.len() {
        return Err(Error::QuadratureTooCoarse);
    }
    let p = f.exponent();
    let mut acc = 0.0f64;
    for j in 0..m {
        let theta = core::f64::consts::TAU * (j as f64 + 0.5) / (m as f64);
        let z = Complex64::from_polar(1.0, theta);
        acc += f.evaluate(phi.apply(z)).norm().powf(p);
    }
    Ok((acc / m as f64).powf(1.0 / p))
}

/// Least-squares slope over `(n0 + i, y_i)` plus RMS fit residual.
fn slope_fit(n0: usize, ys: &[f64]) -> (f64, f64) {
    let len = ys.len() as f64;
    let xbar = (0..ys.len()).map(|i| (n0 + i) as f64).sum::<f64>() / len;
    let ybar = ys.iter().sum::<f64>() / len;
    let mut num = 0.0;
    let mut den = 0.0;
    for (i, &y) in ys.iter().enumerate() {
        let dx = (n0 + i) as f64 - xbar;
        num += dx * (y - ybar);
        den += dx * dx;
    }
    let slope = num / den;
    let intercept = ybar - slope * xbar;
    let mut sq = 0.0;
    for (i, &y) in ys.iter().enumerate() {
        let fit = slope * ((n0 + i) as f64) + intercept;
        sq += (y - fit) * (y - fit);
    }
    (slope, (sq / len).sqrt())
}
