//! Run configuration: truncation, quadrature, exponent, tolerances and the
//! `HARDY_SPECTA_TOL` override of the fixed-point tolerance.

use hardy_specta::Tolerances;

use crate::CliError;

pub const ENV_TOLERANCE: &str = "HARDY_SPECTA_TOL";

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub trunc: usize,
    pub quad: usize,
    pub p: f64,
    pub tol: Tolerances,
    pub out: Option<String>,
}

impl RunConfig {
    pub fn new(
        trunc: usize,
        quad: usize,
        p: f64,
        out: Option<String>,
    ) -> Result<Self, CliError> {
        if trunc < 8 {
            return Err(CliError::usage("--trunc must be at least 8"));
        }
        if quad < 4 * trunc {
            return Err(CliError::usage("--quad must be at least 4 * trunc"));
        }
        if !p.is_finite() || p < 1.0 {
            return Err(CliError::usage("--p must be a finite number >= 1"));
        }
        if p == 1.0 {
            eprintln!(
                "warning: p = 1 is accepted for classification and SVEP-failure queries only; \
                 property (C) statements require 1 < p < oo"
            );
        }
        let mut tol = Tolerances::default();
        if let Ok(raw) = std::env::var(ENV_TOLERANCE) {
            let parsed: f64 = raw
                .trim()
                .parse()
                .map_err(|_| CliError::usage(&format!("{} must be a number", ENV_TOLERANCE)))?;
            if !(parsed.is_finite() && parsed > 0.0) {
                return Err(CliError::usage(&format!(
                    "{} must be a positive number",
                    ENV_TOLERANCE
                )));
            }
            tol.fixed_point = parsed;
        }
        Ok(Self {
            trunc,
            quad,
            p,
            tol,
            out,
        })
    }
}
