//! Command-line front end: classification, spectra, verdicts,
//! eigenfunctions, local spectral data, the verification suites and region
//! rasters, all emitted as deterministic JSON on standard output.
//!
//! Exit status: 0 on success, 1 when a check fails or the mathematics
//! rejects the input (not a self-map, numeric-only region, ...), 2 on
//! usage errors including malformed input files.

mod config;
mod jsonout;
mod raster;
mod schema;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hardy_specta::catalog::{eigenfunction, point_spectrum, spectrum};
use hardy_specta::verdict::{local_spectrum, verdict};
use hardy_specta::verify::{run_suite, Suite};

use config::RunConfig;
use jsonout::{
    checks_json, jcomplex, jnum, jstr, mobius_json, region_json, run_config_json, verdict_json,
};
use schema::{load_function, parse_complex, SymbolSource};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Runtime(String),
}

impl CliError {
    fn usage(msg: &str) -> Self {
        CliError::Usage(msg.to_string())
    }

    fn code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Runtime(_) => ExitCode::from(1),
        }
    }
}

impl From<hardy_specta::Error> for CliError {
    fn from(e: hardy_specta::Error) -> Self {
        CliError::Runtime(e.to_string())
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Runtime(m) => f.write_str(m),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "hardy-specta",
    version,
    about = "Spectra and local spectral theory of linear fractional composition operators on Hardy spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Hardy exponent (p = 1 is accepted with a warning)
    #[arg(long, default_value_t = 2.0, value_name = "P")]
    p: f64,
    /// Truncation order of the coefficient model
    #[arg(long, default_value_t = hardy_specta::hardy::DEFAULT_TRUNCATION, value_name = "N")]
    trunc: usize,
    /// Boundary quadrature points (at least 4 * trunc)
    #[arg(long, default_value_t = hardy_specta::hardy::DEFAULT_QUADRATURE, value_name = "M")]
    quad: usize,
    /// Output file (PGM target for raster)
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

impl Common {
    fn config(&self) -> Result<RunConfig, CliError> {
        RunConfig::new(
            self.trunc,
            self.quad,
            self.p,
            self.out
                .as_ref()
                .map(|p| p.to_string_lossy().into_owned()),
        )
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify a symbol and report its canonical decomposition
    Classify {
        #[command(flatten)]
        source: SymbolSource,
        #[command(flatten)]
        common: Common,
    },
    /// Closed-form spectrum (or point spectrum) of the induced operator
    Spectrum {
        #[command(flatten)]
        source: SymbolSource,
        #[command(flatten)]
        common: Common,
        /// Report the point spectrum instead of the spectrum
        #[arg(long)]
        point: bool,
    },
    /// SVEP / property (C) / decomposability verdict for the symbol class
    Verdict {
        #[command(flatten)]
        source: SymbolSource,
        #[command(flatten)]
        common: Common,
        /// Highlight the adjoint direction in the report
        #[arg(long)]
        adjoint: bool,
    },
    /// Cataloged eigenpair of the canonical symbol
    Eigen {
        #[command(flatten)]
        source: SymbolSource,
        #[command(flatten)]
        common: Common,
        /// Eigenfunction generator (lambda or s), as RE,IM
        #[arg(long, default_value = "0,0", value_name = "RE,IM")]
        generator: String,
    },
    /// Cataloged local spectrum of a function under the operator
    Localspec {
        #[command(flatten)]
        source: SymbolSource,
        #[command(flatten)]
        common: Common,
        /// Function JSON file {"p":..,"coeffs":[[re,im],...]}
        #[arg(long = "fn", value_name = "FILE")]
        function: PathBuf,
        /// Query the adjoint direction
        #[arg(long)]
        adjoint: bool,
    },
    /// Predicted local spectral radius of a function
    Localradius {
        #[command(flatten)]
        source: SymbolSource,
        #[command(flatten)]
        common: Common,
        /// Function JSON file {"p":..,"coeffs":[[re,im],...]}
        #[arg(long = "fn", value_name = "FILE")]
        function: PathBuf,
        /// Query the adjoint direction
        #[arg(long)]
        adjoint: bool,
    },
    /// Run a verification suite and emit the check results
    Verify {
        /// Suite: eigen, similarity, density, radius, fuzz or all
        #[arg(long, default_value = "all", value_name = "SUITE")]
        suite: String,
        /// Seed for the fuzz checks
        #[arg(long, default_value_t = 1, value_name = "S")]
        seed: u64,
    },
    /// Rasterise the spectrum over [-R, R]^2 as a grid and a PGM
    Raster {
        #[command(flatten)]
        source: SymbolSource,
        #[command(flatten)]
        common: Common,
        /// Grid size, width and height
        #[arg(long, num_args = 2, value_names = ["W", "H"], required = true)]
        raster: Vec<usize>,
        /// Rasterise the point spectrum instead
        #[arg(long)]
        point: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            e.code()
        }
    }
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Classify { source, common } => {
            let cfg = common.config()?;
            let decomposition = source.decompose(&cfg.tol)?;
            let aux = decomposition
                .param_aux
                .map(jcomplex)
                .unwrap_or_else(|| "null".to_string());
            let conjugator = decomposition
                .conjugator
                .as_ref()
                .map(mobius_json)
                .unwrap_or_else(|| "null".to_string());
            println!(
                "{{\"class\":{},\"param\":{},\"paramAux\":{},\"conjugatorIsDiscAutomorphism\":{},\"conjugator\":{},\"runConfig\":{}}}",
                jstr(decomposition.class.tag()),
                jcomplex(decomposition.param),
                aux,
                decomposition.conjugator_is_disc_automorphism,
                conjugator,
                run_config_json(&cfg)
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Spectrum {
            source,
            common,
            point,
        } => {
            let cfg = common.config()?;
            let decomposition = source.decompose(&cfg.tol)?;
            let region = if point {
                point_spectrum(decomposition.class, decomposition.param, cfg.p)?
            } else {
                spectrum(decomposition.class, decomposition.param, cfg.p)?
            };
            println!(
                "{{\"class\":{},\"param\":{},\"p\":{},\"pointSpectrum\":{},\"region\":{},\"runConfig\":{}}}",
                jstr(decomposition.class.tag()),
                jcomplex(decomposition.param),
                jnum(cfg.p),
                point,
                region_json(&region),
                run_config_json(&cfg)
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Verdict {
            source,
            common,
            adjoint,
        } => {
            let cfg = common.config()?;
            let decomposition = source.decompose(&cfg.tol)?;
            let report = verdict(decomposition.class);
            println!("{}", verdict_json(&report, adjoint, &cfg));
            Ok(ExitCode::SUCCESS)
        }
        Command::Eigen {
            source,
            common,
            generator,
        } => {
            let cfg = common.config()?;
            let decomposition = source.decompose(&cfg.tol)?;
            let generator = parse_complex(&generator)?;
            let pair = eigenfunction(
                decomposition.class,
                decomposition.param,
                generator,
                cfg.p,
                cfg.trunc,
            )?;
            let coeffs: Vec<String> = pair
                .eigenfunction
                .coefficients()
                .iter()
                .map(|&z| jcomplex(z))
                .collect();
            println!(
                "{{\"class\":{},\"param\":{},\"generator\":{},\"p\":{},\"eigenvalue\":{},\"coefficients\":[{}],\"runConfig\":{}}}",
                jstr(decomposition.class.tag()),
                jcomplex(decomposition.param),
                jcomplex(generator),
                jnum(cfg.p),
                jcomplex(pair.eigenvalue),
                coeffs.join(","),
                run_config_json(&cfg)
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Localspec {
            source,
            common,
            function,
            adjoint,
        } => {
            let cfg = common.config()?;
            let decomposition = source.decompose(&cfg.tol)?;
            let f = load_function(&function, cfg.p)?;
            let answer = local_spectrum(
                decomposition.class,
                decomposition.param,
                cfg.p,
                &f,
                adjoint,
            )?;
            println!(
                "{{\"class\":{},\"param\":{},\"p\":{},\"adjoint\":{},\"caseLabel\":{},\"predictedRadius\":{},\"region\":{},\"runConfig\":{}}}",
                jstr(decomposition.class.tag()),
                jcomplex(decomposition.param),
                jnum(cfg.p),
                adjoint,
                jstr(&answer.case_label),
                jnum(answer.predicted_radius),
                region_json(&answer.region),
                run_config_json(&cfg)
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Localradius {
            source,
            common,
            function,
            adjoint,
        } => {
            let cfg = common.config()?;
            let decomposition = source.decompose(&cfg.tol)?;
            let f = load_function(&function, cfg.p)?;
            let answer = local_spectrum(
                decomposition.class,
                decomposition.param,
                cfg.p,
                &f,
                adjoint,
            )?;
            println!(
                "{{\"class\":{},\"param\":{},\"p\":{},\"adjoint\":{},\"caseLabel\":{},\"predictedRadius\":{},\"runConfig\":{}}}",
                jstr(decomposition.class.tag()),
                jcomplex(decomposition.param),
                jnum(cfg.p),
                adjoint,
                jstr(&answer.case_label),
                jnum(answer.predicted_radius),
                run_config_json(&cfg)
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, seed } => {
            let suite = Suite::from_tag(&suite).ok_or_else(|| {
                CliError::usage("--suite must be one of eigen, similarity, density, radius, fuzz, all")
            })?;
            let tol = RunConfig::new(
                hardy_specta::hardy::DEFAULT_TRUNCATION,
                hardy_specta::hardy::DEFAULT_QUADRATURE,
                2.0,
                None,
            )?
            .tol;
            let checks = run_suite(suite, seed, &tol)?;
            println!("{}", checks_json(&checks));
            let failures = checks.iter().filter(|c| !c.passed).count();
            if failures > 0 {
                eprintln!("{} of {} checks failed", failures, checks.len());
                Ok(ExitCode::from(1))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
        Command::Raster {
            source,
            common,
            raster,
            point,
        } => {
            let cfg = common.config()?;
            let decomposition = source.decompose(&cfg.tol)?;
            let region = if point {
                point_spectrum(decomposition.class, decomposition.param, cfg.p)?
            } else {
                spectrum(decomposition.class, decomposition.param, cfg.p)?
            };
            let grid = raster::rasterize(&region, raster[0], raster[1])?;
            let rows: Vec<String> = grid
                .rows
                .iter()
                .map(|row| {
                    let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                    format!("[{}]", cells.join(","))
                })
                .collect();
            let isolated: Vec<String> = grid
                .isolated
                .iter()
                .map(|(z, row, col)| {
                    format!(
                        "{{\"point\":{},\"pixel\":[{},{}]}}",
                        jcomplex(*z),
                        row,
                        col
                    )
                })
                .collect();
            println!(
                "{{\"class\":{},\"param\":{},\"p\":{},\"pointSpectrum\":{},\"width\":{},\"height\":{},\"extent\":{},\"region\":{},\"isolatedPoints\":[{}],\"grid\":[{}],\"runConfig\":{}}}",
                jstr(decomposition.class.tag()),
                jcomplex(decomposition.param),
                jnum(cfg.p),
                point,
                grid.width,
                grid.height,
                jnum(grid.extent),
                region_json(&region),
                isolated.join(","),
                rows.join(","),
                run_config_json(&cfg)
            );
            if let Some(path) = &common.out {
                std::fs::write(path, raster::to_pgm(&grid)).map_err(|e| {
                    CliError::Runtime(format!("cannot write PGM to {:?}: {}", path, e))
                })?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
