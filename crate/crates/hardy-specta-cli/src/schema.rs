//! Input file schemas and symbol resolution from command-line arguments.

use std::path::Path;

use hardy_specta::hardy::TaylorFunction;
use hardy_specta::mobius::{canonical_map, CanonicalDecomposition, MobiusMap, SymbolClass};
use hardy_specta::Tolerances;
use num_complex::Complex64;
use serde::Deserialize;

use crate::CliError;

/// `{"a":[re,im],"b":[re,im],"c":[re,im],"d":[re,im]}`
#[derive(Debug, Deserialize)]
pub struct SymbolFile {
    pub a: [f64; 2],
    pub b: [f64; 2],
    pub c: [f64; 2],
    pub d: [f64; 2],
}

/// `{"p": number, "coeffs": [[re,im],...]}`
#[derive(Debug, Deserialize)]
pub struct FunctionFile {
    pub p: f64,
    pub coeffs: Vec<[f64; 2]>,
}

fn byte_offset(input: &str, line: usize, column: usize) -> usize {
    let mut offset = 0;
    for (i, l) in input.split('\n').enumerate() {
        if i + 1 == line {
            return offset + column.saturating_sub(1);
        }
        offset += l.len() + 1;
    }
    offset
}

fn parse_json<T: serde::de::DeserializeOwned>(path: &Path, what: &str) -> Result<T, CliError> {
    let raw = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(&format!("cannot read {} file {:?}: {}", what, path, e)))?;
    serde_json::from_str(&raw).map_err(|e| {
        CliError::usage(&format!(
            "malformed {} JSON in {:?} at line {}, column {} (byte offset {}): {}",
            what,
            path,
            e.line(),
            e.column(),
            byte_offset(&raw, e.line(), e.column()),
            e
        ))
    })
}

pub fn load_symbol(path: &Path, tol: &Tolerances) -> Result<MobiusMap, CliError> {
    let file: SymbolFile = parse_json(path, "symbol")?;
    let c = |v: [f64; 2]| Complex64::new(v[0], v[1]);
    MobiusMap::new(c(file.a), c(file.b), c(file.c), c(file.d), tol).map_err(CliError::from)
}

pub fn load_function(path: &Path, default_p: f64) -> Result<TaylorFunction, CliError> {
    let file: FunctionFile = parse_json(path, "function")?;
    let p = if file.p > 0.0 { file.p } else { default_p };
    let coeffs = file
        .coeffs
        .iter()
        .map(|v| Complex64::new(v[0], v[1]))
        .collect();
    TaylorFunction::new(coeffs, p).map_err(CliError::from)
}

/// `RE,IM` (or a bare real part).
pub fn parse_complex(raw: &str) -> Result<Complex64, CliError> {
    let parts: Vec<&str> = raw.split(',').collect();
    let parse = |s: &str| -> Result<f64, CliError> {
        s.trim()
            .parse()
            .map_err(|_| CliError::usage(&format!("cannot parse number {:?}", s)))
    };
    match parts.as_slice() {
        [re] => Ok(Complex64::new(parse(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(parse(re)?, parse(im)?)),
        _ => Err(CliError::usage(&format!(
            "expected RE or RE,IM, got {:?}",
            raw
        ))),
    }
}

/// Symbol selection shared by most subcommands: a JSON file or a canonical
/// class plus its parameters.
#[derive(Debug, clap::Args)]
pub struct SymbolSource {
    /// Symbol JSON file {"a":[re,im],"b":..,"c":..,"d":..}
    #[arg(long, value_name = "FILE", conflicts_with = "class")]
    pub symbol: Option<std::path::PathBuf>,
    /// Canonical class tag: HA, EA, PA, HNA_I, HNA_II, PNA or LOX
    #[arg(long, value_name = "TAG")]
    pub class: Option<String>,
    /// Ratio parameter for HA, HNA_I, HNA_II (0 < r < 1)
    #[arg(long, value_name = "X")]
    pub r: Option<f64>,
    /// Rotation number for EA, as RE,IM on the unit circle
    #[arg(long, value_name = "RE,IM")]
    pub omega: Option<String>,
    /// Translation length for PA/PNA, or multiplier for LOX, as RE,IM
    #[arg(long, value_name = "RE,IM")]
    pub a: Option<String>,
    /// Canonical interior fixed point for LOX, as RE,IM
    #[arg(long, value_name = "RE,IM")]
    pub c: Option<String>,
}

impl SymbolSource {
    pub fn resolve(&self, tol: &Tolerances) -> Result<MobiusMap, CliError> {
        if let Some(path) = &self.symbol {
            return load_symbol(path, tol);
        }
        let tag = self
            .class
            .as_deref()
            .ok_or_else(|| CliError::usage("either --symbol FILE or --class TAG is required"))?;
        let class = SymbolClass::from_tag(tag)
            .ok_or_else(|| CliError::usage(&format!("unknown class tag {:?}", tag)))?;
        let (param, aux) = self.class_parameters(class)?;
        canonical_map(class, param, aux, tol).map_err(CliError::from)
    }

    fn class_parameters(
        &self,
        class: SymbolClass,
    ) -> Result<(Complex64, Option<Complex64>), CliError> {
        match class {
            SymbolClass::HyperbolicAutomorphism
            | SymbolClass::HyperbolicNonAutomorphismI
            | SymbolClass::HyperbolicNonAutomorphismII => {
                let r = self
                    .r
                    .ok_or_else(|| CliError::usage("--r X is required for this class"))?;
                Ok((Complex64::new(r, 0.0), None))
            }
            SymbolClass::EllipticAutomorphism => {
                let omega = self
                    .omega
                    .as_deref()
                    .ok_or_else(|| CliError::usage("--omega RE,IM is required for EA"))?;
                Ok((parse_complex(omega)?, None))
            }
            SymbolClass::ParabolicAutomorphism | SymbolClass::ParabolicNonAutomorphism => {
                let a = self
                    .a
                    .as_deref()
                    .ok_or_else(|| CliError::usage("--a RE,IM is required for PA/PNA"))?;
                Ok((parse_complex(a)?, None))
            }
            SymbolClass::Loxodromic => {
                let a = self
                    .a
                    .as_deref()
                    .ok_or_else(|| CliError::usage("--a RE,IM is required for LOX"))?;
                let c = self
                    .c
                    .as_deref()
                    .ok_or_else(|| CliError::usage("--c RE,IM is required for LOX"))?;
                Ok((parse_complex(a)?, Some(parse_complex(c)?)))
            }
        }
    }

    /// Resolves and canonicalises in one step.
    pub fn decompose(&self, tol: &Tolerances) -> Result<CanonicalDecomposition, CliError> {
        self.resolve(tol)?.to_canonical(tol).map_err(CliError::from)
    }
}
