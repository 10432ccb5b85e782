//! Region rasterisation over the square `[-R, R]^2`, `R = 1.25 * max
//! modulus`, as a membership grid plus a plain-text PGM escape hatch.
//!
//! Sets with empty interior need care: isolated points (the `{1}` of the
//! second-kind spectrum, singleton sets, finite rotation orbits) are
//! snapped to their nearest pixel, and the unit circle of an irrational
//! rotation is drawn by half-pixel-diagonal proximity. Plain sampling
//! would lose all of these.

use hardy_specta::catalog::{RegionVariant, SpectralRegion};
use hardy_specta::Error;
use num_complex::Complex64;

pub struct Raster {
    pub width: usize,
    pub height: usize,
    pub extent: f64,
    /// Row-major, row 0 at the top (`im = +R` side).
    pub rows: Vec<Vec<u8>>,
    /// Isolated points with the pixel each snapped to, as `(point, row, col)`.
    pub isolated: Vec<(Complex64, usize, usize)>,
}

pub fn rasterize(region: &SpectralRegion, width: usize, height: usize) -> Result<Raster, Error> {
    if region.is_numeric_only() {
        return Err(Error::NumericOnlyRegion);
    }
    if width < 16 || height < 16 {
        return Err(Error::InvalidRange);
    }
    let mut extent = 1.25 * region.max_modulus()?;
    if extent <= 0.0 {
        extent = 1.0;
    }
    let dx = 2.0 * extent / width as f64;
    let dy = 2.0 * extent / height as f64;
    let half_diag = 0.5 * (dx * dx + dy * dy).sqrt();

    let mut rows = vec![vec![0u8; width]; height];
    for (i, row) in rows.iter_mut().enumerate() {
        let y = extent - (i as f64 + 0.5) * dy;
        for (j, cell) in row.iter_mut().enumerate() {
            let x = -extent + (j as f64 + 0.5) * dx;
            let z = Complex64::new(x, y);
            let mut on = region.contains(z)?;
            if !on {
                if let RegionVariant::FiniteSetClosure {
                    orbit_order: None, ..
                } = region.variant
                {
                    on = (z.norm() - 1.0).abs() <= half_diag;
                }
            }
            *cell = on as u8;
        }
    }

    let mut isolated = Vec::new();
    let mut snap = |point: Complex64| {
        let col = (((point.re + extent) / (2.0 * extent) * width as f64).floor() as isize)
            .clamp(0, width as isize - 1) as usize;
        let row = (((extent - point.im) / (2.0 * extent) * height as f64).floor() as isize)
            .clamp(0, height as isize - 1) as usize;
        rows[row][col] = 1;
        isolated.push((point, row, col));
    };
    match &region.variant {
        RegionVariant::DiskUnionPoint { point, .. } => snap(*point),
        RegionVariant::SingletonSet { points } => points.iter().copied().for_each(&mut snap),
        RegionVariant::FiniteSetClosure {
            generator,
            orbit_order: Some(order),
        } => {
            let mut w = Complex64::new(1.0, 0.0);
            for _ in 0..*order {
                snap(w);
                w *= generator;
            }
        }
        _ => {}
    }

    Ok(Raster {
        width,
        height,
        extent,
        rows,
        isolated,
    })
}

/// Plain-text PGM (P2, maxval 1), row 0 at the top.
pub fn to_pgm(raster: &Raster) -> String {
    let mut out = format!("P2\n{} {}\n1\n", raster.width, raster.height);
    for row in &raster.rows {
        let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
