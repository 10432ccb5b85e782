//! Numerical corroboration suite: eigen-residuals, the similarity-lemma
//! matrix identity, the eigenfunction-span density probe, local-radius
//! regression against prediction, and classification fuzzing.
//!
//! Every check is deterministic given its parameters (the fuzz takes an
//! explicit seed), so results reproduce bit for bit.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[cfg_attr(feature = "std", allow(unused_imports))]
use num_traits::Float;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog::eigenfunction;
use crate::hardy::{cayley_power_coeffs, TaylorFunction};
use crate::mobius::{canonical_map, MobiusMap, SymbolClass};
use crate::operator::{local_spectral_radius_estimate, OperatorMatrix};
use crate::verdict::local_radius_predicted;
use crate::{Error, Result, Tolerances};

/// Diagonal regularization floor for the density-probe Gram systems.
pub const GRAM_REGULARIZATION: f64 = 1e-14;
/// Prefixes stop growing once the Gram condition number exceeds this.
pub const CONDITION_LIMIT: f64 = 1e12;

/// One measured quantity against its threshold.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: String,
    pub measured: f64,
    pub threshold: f64,
    pub passed: bool,
    pub context: Vec<(String, String)>,
}

impl CheckResult {
    pub fn new(
        name: String,
        measured: f64,
        threshold: f64,
        context: Vec<(String, String)>,
    ) -> Self {
        let passed = measured <= threshold;
        Self {
            name,
            measured,
            threshold,
            passed,
            context,
        }
    }
}

fn ctx(key: &str, value: String) -> (String, String) {
    (String::from(key), value)
}

/// Relative `l^2` residual of `(C_phi - mu I)` on the truncated
/// eigenfunction, measured on the first `n/2` coefficients.
///
/// The eigenfunction and the composition are expanded to length `2n` so the
/// truncation tail (which the composition folds back toward low frequencies)
/// stays clear of the measured head; the reported number then measures the
/// eigen-identity itself rather than the truncation.
pub fn eigen_residual(
    class: SymbolClass,
    param: Complex64,
    generator: Complex64,
    p: f64,
    n: usize,
    threshold: f64,
    tol: &Tolerances,
) -> Result<CheckResult> {
    if n < 2 {
        return Err(Error::InvalidTruncation);
    }
    let work = 2 * n;
    let head = n / 2;
    let pair = eigenfunction(class, param, generator, p, work)?;
    let symbol = canonical_map(class, param, None, tol)?;
    let composed = pair.eigenfunction.truncated_compose(&symbol, work, tol)?;
    let w = pair.eigenfunction.coefficients();
    let g = composed.coefficients();
    let mut num = 0.0f64;
    let mut den = 0.0f64;
    for k in 0..head {
        num += (g[k] - pair.eigenvalue * w[k]).norm_sqr();
        den += w[k].norm_sqr();
    }
    let measured = (num / den).sqrt();
    Ok(CheckResult::new(
        format!("eigen-residual-{}", class.tag()),
        measured,
        threshold,
        vec![
            ctx("class", String::from(class.tag())),
            ctx("param", format!("{:e}", param)),
            ctx("generator", format!("{:e}", generator)),
            ctx("p", format!("{:e}", p)),
            ctx("n", format!("{}", n)),
            ctx("eigenvalue", format!("{:e}", pair.eigenvalue)),
        ],
    ))
}

/// Matrix form of the similarity identity for the second-kind hyperbolic
/// non-automorphism: on the span of `{z, ..., z^{N-1}}` the adjoint of
/// `C_{Phi_r}` equals `M_z (r C_{psi_r}) M_{1/z}` with `psi_r = rz + 1 - r`.
/// Returns the max entrywise deviation over the leading `(N/2) x (N/2)`
/// block of the two independently built matrices.
pub fn similarity_check(r: f64, p: f64, n: usize, threshold: f64, tol: &Tolerances) -> Result<CheckResult> {
    if n < 2 {
        return Err(Error::InvalidTruncation);
    }
    let param = Complex64::new(r, 0.0);
    let second_kind = canonical_map(SymbolClass::HyperbolicNonAutomorphismII, param, None, tol)?;
    let first_kind = canonical_map(SymbolClass::HyperbolicNonAutomorphismI, param, None, tol)?;
    let a = OperatorMatrix::build(&second_kind, n, tol)?;
    let b = OperatorMatrix::build(&first_kind, n, tol)?;
    let block = n / 2;
    let mut worst = 0.0f64;
    for i in 1..=block {
        for j in 1..=block {
            let lhs = a.entry(j, i).conj();
            let rhs = r * b.entry(i - 1, j - 1);
            worst = worst.max((lhs - rhs).norm());
        }
    }
    Ok(CheckResult::new(
        format!("similarity-r{:.2}-p{:.1}-n{}", r, p, n),
        worst,
        threshold,
        vec![
            ctx("r", format!("{:e}", r)),
            ctx("p", format!("{:e}", p)),
            ctx("n", format!("{}", n)),
            ctx("block", format!("{}", block)),
        ],
    ))
}

/// Residual sequence of least-squares projections of `target` onto the
/// spans of growing prefixes of `{w_{i t_k}}`, in the `H^2` pairing.
///
/// Returns `(residuals, condition_numbers, truncated_at)`: `residuals[k]`
/// is the distance after projecting on the first `k` frequencies
/// (`residuals[0] = ||target||`); the probe stops extending once the Gram
/// condition number passes [`CONDITION_LIMIT`], recording the prefix.
pub fn density_residuals(
    frequencies: &[f64],
    target: &TaylorFunction,
    n: usize,
) -> Result<(Vec<f64>, Vec<f64>, Option<usize>)> {
    if frequencies.is_empty() {
        return Err(Error::InvalidRange);
    }
    if target.len() > n / 4 {
        return Err(Error::InvalidTruncation);
    }
    let family: Vec<Vec<Complex64>> = frequencies
        .iter()
        .map(|&t| cayley_power_coeffs(Complex64::new(0.0, t), n))
        .collect();
    let mut g = target.coefficients().to_vec();
    g.resize(n, Complex64::new(0.0, 0.0));
    let norm = l2(&g);

    let mut residuals = vec![norm];
    let mut conds = Vec::new();
    let mut truncated_at = None;

    for k in 1..=family.len() {
        // Gram matrix with the regularization floor.
        let mut gram = vec![Complex64::new(0.0, 0.0); k * k];
        for a in 0..k {
            for b in 0..k {
                gram[a * k + b] = dot(&family[b], &family[a]);
            }
            gram[a * k + a] += Complex64::new(GRAM_REGULARIZATION, 0.0);
        }
        let chol = match cholesky(&gram, k) {
            Some(l) => l,
            None => {
                truncated_at = Some(k);
                break;
            }
        };
        let cond = condition_estimate(&gram, &chol, k);
        conds.push(cond);
        if cond > CONDITION_LIMIT {
            truncated_at = Some(k);
            break;
        }
        let rhs: Vec<Complex64> = (0..k).map(|a| dot(&g, &family[a])).collect();
        let coef = cholesky_solve(&chol, k, &rhs);
        let mut diff = g.clone();
        for (a, &ca) in coef.iter().enumerate() {
            for (x, w) in diff.iter_mut().zip(family[a].iter()) {
                *x -= ca * w;
            }
        }
        residuals.push(l2(&diff));
    }
    Ok((residuals, conds, truncated_at))
}

/// Density probe: one monotonicity check per target, with the residual
/// sequence and conditioning recorded in the context. Only the Hilbert
/// exponent admits a certified projection residual.
pub fn density_probe(
    r: f64,
    p: f64,
    frequencies: &[f64],
    targets: &[TaylorFunction],
    n: usize,
) -> Result<Vec<CheckResult>> {
    if (p - 2.0).abs() > 1e-12 {
        return Err(Error::InvalidExponent);
    }
    let mut out = Vec::new();
    for (i, target) in targets.iter().enumerate() {
        let (residuals, conds, truncated_at) = density_residuals(frequencies, target, n)?;
        let norm = residuals[0];
        let mut worst_increase = 0.0f64;
        for w in residuals.windows(2) {
            worst_increase = worst_increase.max(w[1] - w[0]);
        }
        let mut context = vec![
            ctx("r", format!("{:e}", r)),
            ctx("p", format!("{:e}", p)),
            ctx("n", format!("{}", n)),
            ctx("targetIndex", format!("{}", i)),
            ctx("targetNorm", format!("{:e}", norm)),
            ctx("prefixes", format!("{}", residuals.len() - 1)),
            ctx(
                "finalResidual",
                format!("{:e}", residuals[residuals.len() - 1]),
            ),
            ctx("residuals", join_floats(&residuals)),
            ctx("conditionNumbers", join_floats(&conds)),
        ];
        if let Some(at) = truncated_at {
            context.push(ctx("illConditionedAtPrefix", format!("{}", at)));
        }
        // Nested least squares is nonincreasing; allow only fp-level noise.
        out.push(CheckResult::new(
            format!("density-monotone-{}", i),
            worst_increase,
            1e-8 * norm.max(1.0),
            context,
        ));
    }
    Ok(out)
}

/// Compares the regression estimate of the local spectral radius with the
/// cataloged prediction; `measured = |estimate - predicted| / predicted`.
#[allow(clippy::too_many_arguments)]
pub fn radius_regression(
    class: SymbolClass,
    param: Complex64,
    p: f64,
    f: &TaylorFunction,
    adjoint: bool,
    window: (usize, usize),
    trunc: usize,
    quad: usize,
    threshold: f64,
    tol: &Tolerances,
) -> Result<CheckResult> {
    let predicted = local_radius_predicted(class, param, p, f, adjoint)?;
    let symbol = canonical_map(class, param, None, tol)?;
    let estimate = local_spectral_radius_estimate(&symbol, f, adjoint, window, trunc, quad, tol)?;
    let measured = (estimate.estimate - predicted).abs() / predicted;
    Ok(CheckResult::new(
        format!(
            "radius-{}-{}",
            class.tag(),
            if adjoint { "adjoint" } else { "forward" }
        ),
        measured,
        threshold,
        vec![
            ctx("class", String::from(class.tag())),
            ctx("param", format!("{:e}", param)),
            ctx("p", format!("{:e}", p)),
            ctx("adjoint", format!("{}", adjoint)),
            ctx("window", format!("{}..{}", window.0, window.1)),
            ctx("trunc", format!("{}", trunc)),
            ctx("quad", format!("{}", quad)),
            ctx("estimate", format!("{:e}", estimate.estimate)),
            ctx("predicted", format!("{:e}", predicted)),
            ctx("fitResidual", format!("{:e}", estimate.residual)),
        ],
    ))
}

/// Deterministic conjugation fuzz: draws `count` (symbol, automorphism)
/// pairs, conjugates, and asserts that the class and the conjugation-
/// invariant part of the intrinsic parameter survive.
///
/// Multiplier-derived parameters are invariant outright. The parabolic
/// translation length rescales by a positive factor under conjugation, so
/// only its direction is asserted; the loxodromic canonical centre rotates,
/// so its modulus is asserted alongside the multiplier.
pub fn class_invariance_fuzz(seed: u64, count: usize, tol: &Tolerances) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let class = SymbolClass::ALL[rng.gen_range(0..SymbolClass::ALL.len())];
        let (param, aux) = sample_params(class, &mut rng);
        let alpha = sample_disc(&mut rng, 0.6);
        let phase = rng.gen_range(0.0..core::f64::consts::TAU);

        let name = format!("class-invariance-{:03}", i);
        let context = vec![
            ctx("class", String::from(class.tag())),
            ctx("param", format!("{:e}", param)),
            ctx(
                "paramAux",
                aux.map(|c| format!("{:e}", c)).unwrap_or_default(),
            ),
            ctx("alpha", format!("{:e}", alpha)),
            ctx("phase", format!("{:e}", phase)),
        ];

        let drift = conjugation_drift(class, param, aux, alpha, phase, tol);
        out.push(CheckResult::new(
            name,
            drift.unwrap_or(f64::INFINITY),
            1e-8,
            context,
        ));
    }
    out
}

fn conjugation_drift(
    class: SymbolClass,
    param: Complex64,
    aux: Option<Complex64>,
    alpha: Complex64,
    phase: f64,
    tol: &Tolerances,
) -> Option<f64> {
    let phi = canonical_map(class, param, aux, tol).ok()?;
    let sigma = MobiusMap::disc_automorphism(alpha, phase, tol).ok()?;
    let conjugated = sigma
        .compose(&phi, tol)
        .ok()?
        .compose(&sigma.inverse(tol).ok()?, tol)
        .ok()?;
    let observed = conjugated.classify(tol).ok()?;
    if observed != class {
        return None;
    }
    let canon = conjugated.to_canonical(tol).ok()?;
    let drift = match class {
        SymbolClass::ParabolicAutomorphism | SymbolClass::ParabolicNonAutomorphism => {
            (canon.param / canon.param.norm() - param / param.norm()).norm()
        }
        SymbolClass::Loxodromic => {
            let a_drift = (canon.param - param).norm();
            let c_drift = match (canon.param_aux, aux) {
                (Some(x), Some(y)) => (x.norm() - y.norm()).abs(),
                _ => return None,
            };
            a_drift.max(c_drift)
        }
        _ => (canon.param - param).norm(),
    };
    Some(drift)
}

fn sample_params(class: SymbolClass, rng: &mut ChaCha8Rng) -> (Complex64, Option<Complex64>) {
    match class {
        SymbolClass::HyperbolicAutomorphism
        | SymbolClass::HyperbolicNonAutomorphismI
        | SymbolClass::HyperbolicNonAutomorphismII => {
            (Complex64::new(rng.gen_range(0.15..0.85), 0.0), None)
        }
        SymbolClass::EllipticAutomorphism => {
            let theta = rng.gen_range(0.25..core::f64::consts::TAU - 0.25);
            (Complex64::from_polar(1.0, theta), None)
        }
        SymbolClass::ParabolicAutomorphism => {
            let t = rng.gen_range(0.3..2.5);
            let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
            (Complex64::new(0.0, sign * t), None)
        }
        SymbolClass::ParabolicNonAutomorphism => (
            Complex64::new(rng.gen_range(0.3..2.5), rng.gen_range(-2.5..2.5)),
            None,
        ),
        SymbolClass::Loxodromic => {
            let a = Complex64::from_polar(
                rng.gen_range(0.15..0.75),
                rng.gen_range(0.0..core::f64::consts::TAU),
            );
            let mut c = sample_disc(rng, 0.45);
            // Shrink the centre until the self-map constraint holds.
            while a.norm() + (Complex64::new(1.0, 0.0) - a).norm() * c.norm() > 0.98 {
                c *= 0.5;
            }
            (a, Some(c))
        }
    }
}

fn sample_disc(rng: &mut ChaCha8Rng, radius: f64) -> Complex64 {
    Complex64::from_polar(
        rng.gen_range(0.0..radius),
        rng.gen_range(0.0..core::f64::consts::TAU),
    )
}

/// Named check suites mirroring the acceptance-grade parameter sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Eigen,
    Similarity,
    Density,
    Radius,
    Fuzz,
    All,
}

impl Suite {
    pub fn from_tag(tag: &str) -> Option<Self> {
        Some(match tag {
            "eigen" => Suite::Eigen,
            "similarity" => Suite::Similarity,
            "density" => Suite::Density,
            "radius" => Suite::Radius,
            "fuzz" => Suite::Fuzz,
            "all" => Suite::All,
            _ => return None,
        })
    }
}

/// Runs a canned suite; the seed only affects the fuzz checks.
pub fn run_suite(suite: Suite, seed: u64, tol: &Tolerances) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    let half = Complex64::new(0.5, 0.0);
    if matches!(suite, Suite::Eigen | Suite::All) {
        for s in 0..4 {
            out.push(eigen_residual(
                SymbolClass::HyperbolicNonAutomorphismI,
                half,
                Complex64::new(s as f64, 0.0),
                2.0,
                64,
                1e-12,
                tol,
            )?);
        }
        for lambda in [
            Complex64::new(0.0, 0.0),
            Complex64::new(0.1, 0.0),
            Complex64::new(0.2, 0.1),
        ] {
            out.push(eigen_residual(
                SymbolClass::HyperbolicAutomorphism,
                half,
                lambda,
                2.0,
                256,
                1e-6,
                tol,
            )?);
        }
    }
    if matches!(suite, Suite::Similarity | Suite::All) {
        for r in [0.25, 0.5, 0.75] {
            for p in [2.0, 3.0] {
                out.push(similarity_check(r, p, 64, 1e-10, tol)?);
            }
        }
    }
    if matches!(suite, Suite::Density | Suite::All) {
        let freqs = center_out_frequencies(51, 0.2);
        let targets = [
            TaylorFunction::constant(Complex64::new(1.0, 0.0), 2.0)?,
            TaylorFunction::monomial(1, 2.0)?,
            TaylorFunction::monomial(2, 2.0)?,
        ];
        let mut checks = density_probe(0.5, 2.0, &freqs, &targets, 256)?;
        out.append(&mut checks);
        // The zero frequency comes first, so the constant target must be
        // reproduced exactly at the first prefix.
        let one = TaylorFunction::constant(Complex64::new(1.0, 0.0), 2.0)?;
        let (residuals, _, _) = density_residuals(&freqs, &one, 256)?;
        out.push(CheckResult::new(
            String::from("density-constant-hits-zero"),
            residuals[1],
            1e-10,
            vec![ctx("frequencies", String::from("center-out 51 in [-5,5]"))],
        ));
    }
    if matches!(suite, Suite::Radius | Suite::All) {
        let quarter = Complex64::new(0.25, 0.0);
        let z = TaylorFunction::monomial(1, 2.0)?;
        let one = TaylorFunction::constant(Complex64::new(1.0, 0.0), 2.0)?;
        let one_plus_z = TaylorFunction::new(
            vec![Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)],
            2.0,
        )?;
        let hna2 = SymbolClass::HyperbolicNonAutomorphismII;
        out.push(radius_regression(
            hna2, quarter, 2.0, &z, false, (1, 5), 256, 4096, 0.05, tol,
        )?);
        out.push(radius_regression(
            hna2, quarter, 2.0, &one, false, (1, 5), 256, 4096, 1e-9, tol,
        )?);
        out.push(radius_regression(
            hna2,
            quarter,
            2.0,
            &one_plus_z,
            false,
            (1, 5),
            256,
            4096,
            0.05,
            tol,
        )?);
        out.push(radius_regression(
            SymbolClass::HyperbolicAutomorphism,
            half,
            2.0,
            &one,
            true,
            (2, 6),
            256,
            1024,
            0.10,
            tol,
        )?);
    }
    if matches!(suite, Suite::Fuzz | Suite::All) {
        out.extend(class_invariance_fuzz(seed, 200, tol));
    }
    Ok(out)
}

/// `count` frequencies `0, +step, -step, +2 step, ...`; putting zero first
/// keeps the probe informative even when conditioning truncates it early.
pub fn center_out_frequencies(count: usize, step: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(count);
    out.push(0.0);
    let mut k = 1;
    while out.len() < count {
        out.push(step * k as f64);
        if out.len() < count {
            out.push(-step * k as f64);
        }
        k += 1;
    }
    out
}

fn l2(xs: &[Complex64]) -> f64 {
    xs.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

/// `<x, y> = sum x_k conj(y_k)`.
fn dot(x: &[Complex64], y: &[Complex64]) -> Complex64 {
    x.iter().zip(y.iter()).map(|(a, b)| a * b.conj()).sum()
}

fn join_floats(xs: &[f64]) -> String {
    let mut s = String::new();
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(&format!("{:e}", x));
    }
    s
}

/// Cholesky factor of a Hermitian positive definite matrix (row-major).
fn cholesky(g: &[Complex64], k: usize) -> Option<Vec<Complex64>> {
    let mut l = vec![Complex64::new(0.0, 0.0); k * k];
    for i in 0..k {
        for j in 0..=i {
            let mut sum = g[i * k + j];
            for m in 0..j {
                sum -= l[i * k + m] * l[j * k + m].conj();
            }
            if i == j {
                if sum.re <= 0.0 {
                    return None;
                }
                l[i * k + i] = Complex64::new(sum.re.sqrt(), 0.0);
            } else {
                l[i * k + j] = sum / l[j * k + j];
            }
        }
    }
    Some(l)
}

/// Solves `L L^* x = rhs`.
fn cholesky_solve(l: &[Complex64], k: usize, rhs: &[Complex64]) -> Vec<Complex64> {
    let mut y = vec![Complex64::new(0.0, 0.0); k];
    for i in 0..k {
        let mut sum = rhs[i];
        for m in 0..i {
            sum -= l[i * k + m] * y[m];
        }
        y[i] = sum / l[i * k + i];
    }
    let mut x = vec![Complex64::new(0.0, 0.0); k];
    for i in (0..k).rev() {
        let mut sum = y[i];
        for m in i + 1..k {
            sum -= l[m * k + i].conj() * x[m];
        }
        x[i] = sum / l[i * k + i];
    }
    x
}

/// Condition estimate of a Hermitian positive definite matrix via power
/// iteration on `G` and inverse iteration through its Cholesky factor.
fn condition_estimate(g: &[Complex64], l: &[Complex64], k: usize) -> f64 {
    if k == 1 {
        return 1.0;
    }
    let matvec = |v: &[Complex64]| -> Vec<Complex64> {
        (0..k)
            .map(|i| (0..k).map(|j| g[i * k + j] * v[j]).sum())
            .collect()
    };
    let normalize = |v: &mut Vec<Complex64>| -> f64 {
        let n = l2(v);
        if n > 0.0 {
            for x in v.iter_mut() {
                *x /= n;
            }
        }
        n
    };
    let mut v: Vec<Complex64> = (0..k)
        .map(|i| Complex64::new(1.0, (i as f64 + 1.0).recip()))
        .collect();
    normalize(&mut v);
    let mut lambda_max = 0.0;
    for _ in 0..60 {
        let mut w = matvec(&v);
        lambda_max = normalize(&mut w);
        v = w;
    }
    let mut u: Vec<Complex64> = (0..k)
        .map(|i| Complex64::new(1.0, -((i as f64 + 1.0).recip())))
        .collect();
    normalize(&mut u);
    let mut growth = 0.0;
    for _ in 0..60 {
        let mut w = cholesky_solve(l, k, &u);
        growth = normalize(&mut w);
        u = w;
    }
    if growth <= 0.0 {
        return f64::INFINITY;
    }
    lambda_max * growth
}
