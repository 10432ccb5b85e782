//! Deterministic JSON emission: fixed field order and 17-significant-digit
//! float formatting, so identical inputs produce byte-identical reports.

use hardy_specta::catalog::{RegionVariant, SpectralRegion};
use hardy_specta::mobius::MobiusMap;
use hardy_specta::verdict::{Citation, VerdictReport};
use hardy_specta::verify::CheckResult;
use num_complex::Complex64;

use crate::config::RunConfig;

pub fn jnum(x: f64) -> String {
    format!("{:.16e}", x)
}

pub fn jcomplex(z: Complex64) -> String {
    format!("[{},{}]", jnum(z.re), jnum(z.im))
}

pub fn jstr(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            ch if (ch as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", ch as u32)),
            ch => out.push(ch),
        }
    }
    out.push('"');
    out
}

pub fn run_config_json(cfg: &RunConfig) -> String {
    let out = match &cfg.out {
        Some(path) => jstr(path),
        None => "null".to_string(),
    };
    format!(
        "{{\"trunc\":{},\"quad\":{},\"p\":{},\"tolerances\":{{\"epsFix\":{},\"epsPar\":{},\"epsDet\":{}}},\"outputPath\":{}}}",
        cfg.trunc,
        cfg.quad,
        jnum(cfg.p),
        jnum(cfg.tol.fixed_point),
        jnum(cfg.tol.parabolic),
        jnum(cfg.tol.degeneracy),
        out
    )
}

pub fn mobius_json(m: &MobiusMap) -> String {
    let [a, b, c, d] = m.coefficients();
    format!(
        "{{\"a\":{},\"b\":{},\"c\":{},\"d\":{}}}",
        jcomplex(a),
        jcomplex(b),
        jcomplex(c),
        jcomplex(d)
    )
}

pub fn region_json(region: &SpectralRegion) -> String {
    let (variant, params) = match &region.variant {
        RegionVariant::Annulus {
            inner,
            outer,
            closed,
        } => (
            "Annulus",
            format!(
                "{{\"inner\":{},\"outer\":{},\"closed\":{}}}",
                jnum(*inner),
                jnum(*outer),
                closed
            ),
        ),
        RegionVariant::ClosedDisk { radius } => {
            ("ClosedDisk", format!("{{\"radius\":{}}}", jnum(*radius)))
        }
        RegionVariant::OpenDisk { radius } => {
            ("OpenDisk", format!("{{\"radius\":{}}}", jnum(*radius)))
        }
        RegionVariant::DiskUnionPoint { radius, point } => (
            "DiskUnionPoint",
            format!(
                "{{\"radius\":{},\"point\":{}}}",
                jnum(*radius),
                jcomplex(*point)
            ),
        ),
        RegionVariant::FiniteSetClosure {
            generator,
            orbit_order,
        } => (
            "FiniteSetClosure",
            format!(
                "{{\"generator\":{},\"orbitOrder\":{}}}",
                jcomplex(*generator),
                orbit_order
                    .map(|k| k.to_string())
                    .unwrap_or_else(|| "null".to_string())
            ),
        ),
        RegionVariant::SingletonSet { points } => (
            "SingletonSet",
            format!(
                "{{\"points\":[{}]}}",
                points
                    .iter()
                    .map(|&p| jcomplex(p))
                    .collect::<Vec<_>>()
                    .join(",")
            ),
        ),
        RegionVariant::NumericOnly => ("NumericOnly", "{}".to_string()),
    };
    format!(
        "{{\"variant\":{},\"params\":{},\"certifiedSubsetOnly\":{}}}",
        jstr(variant),
        params,
        region.certified_subset_only
    )
}

fn citations_json(citations: &[Citation]) -> String {
    let items: Vec<String> = citations
        .iter()
        .map(|c| {
            format!(
                "{{\"claim\":{},\"anchor\":{}}}",
                jstr(&c.claim),
                jstr(&c.anchor)
            )
        })
        .collect();
    format!("[{}]", items.join(","))
}

pub fn verdict_json(report: &VerdictReport, adjoint_focus: bool, cfg: &RunConfig) -> String {
    format!(
        "{{\"class\":{},\"svep\":{},\"svepAdjoint\":{},\"dunfordC\":{},\"dunfordCAdjoint\":{},\"decomposable\":{},\"decomposableAdjoint\":{},\"focusAdjoint\":{},\"citations\":{},\"runConfig\":{}}}",
        jstr(report.class.tag()),
        jstr(report.svep.as_str()),
        jstr(report.svep_adjoint.as_str()),
        jstr(report.dunford_c.as_str()),
        jstr(report.dunford_c_adjoint.as_str()),
        jstr(report.decomposable.as_str()),
        jstr(report.decomposable_adjoint.as_str()),
        adjoint_focus,
        citations_json(&report.citations),
        run_config_json(cfg)
    )
}

pub fn checks_json(checks: &[CheckResult]) -> String {
    let items: Vec<String> = checks
        .iter()
        .map(|check| {
            let context: Vec<String> = check
                .context
                .iter()
                .map(|(k, v)| format!("{}:{}", jstr(k), jstr(v)))
                .collect();
            format!(
                "{{\"name\":{},\"measured\":{},\"threshold\":{},\"passed\":{},\"context\":{{{}}}}}",
                jstr(&check.name),
                jnum(check.measured),
                jnum(check.threshold),
                check.passed,
                context.join(",")
            )
        })
        .collect();
    format!("[{}]", items.join(","))
}
