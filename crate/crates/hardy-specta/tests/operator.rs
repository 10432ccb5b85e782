use hardy_specta::hardy::TaylorFunction;
use hardy_specta::mobius::{canonical_map, MobiusMap, SymbolClass};
use hardy_specta::operator::{
    iterate_symbol, local_spectral_radius_estimate, OperatorMatrix,
};
use hardy_specta::{Error, Tolerances};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn tol() -> Tolerances {
    Tolerances::default()
}

fn binomial(n: usize, k: usize) -> f64 {
    let mut acc = 1.0f64;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

#[test]
fn rotation_matrix_is_diagonal() {
    let t = tol();
    let omega = Complex64::from_polar(1.0, 0.9);
    let rot = MobiusMap::scaling(omega, &t).unwrap();
    let a = OperatorMatrix::build(&rot, 16, &t).unwrap();
    for k in 0..16 {
        for j in 0..16 {
            let want = if k == j { omega.powu(j as u32) } else { c(0.0, 0.0) };
            assert!((a.entry(k, j) - want).norm() < 1e-12);
        }
    }
}

#[test]
fn affine_matrix_has_binomial_pattern() {
    let t = tol();
    let affine = MobiusMap::new(c(0.5, 0.0), c(0.5, 0.0), c(0.0, 0.0), c(1.0, 0.0), &t).unwrap();
    let a = OperatorMatrix::build(&affine, 12, &t).unwrap();
    for j in 0..12 {
        for k in 0..12 {
            let want = if k <= j {
                binomial(j, k) / 2f64.powi(j as i32)
            } else {
                0.0
            };
            assert!((a.entry(k, j) - c(want, 0.0)).norm() < 1e-12, "({}, {})", k, j);
        }
    }
    // First column is the coordinate vector of the constant.
    assert!((a.entry(0, 0) - c(1.0, 0.0)).norm() < 1e-15);
    for k in 1..12 {
        assert!(a.entry(k, 0).norm() < 1e-15);
    }
}

#[test]
fn second_kind_column_one_is_geometric() {
    let t = tol();
    let m = canonical_map(
        SymbolClass::HyperbolicNonAutomorphismII,
        c(0.5, 0.0),
        None,
        &t,
    )
    .unwrap();
    let a = OperatorMatrix::build(&m, 16, &t).unwrap();
    assert!(a.entry(0, 1).norm() < 1e-15);
    for k in 1..16 {
        assert!((a.entry(k, 1) - c(0.5f64.powi(k as i32), 0.0)).norm() < 1e-13);
    }
}

#[test]
fn adjoint_is_an_involution_and_respects_the_pairing() {
    let t = tol();
    let m = canonical_map(SymbolClass::HyperbolicAutomorphism, c(0.5, 0.0), None, &t).unwrap();
    let a = OperatorMatrix::build(&m, 64, &t).unwrap();
    let astar = a.adjoint();
    let back = astar.adjoint();
    for k in 0..64 {
        for j in 0..64 {
            assert!((a.entry(k, j) - back.entry(k, j)).norm() < 1e-15);
        }
    }
    // <A f, g> = <f, A* g> for low-degree inputs.
    let f = TaylorFunction::monomial(1, 2.0).unwrap();
    let g = TaylorFunction::constant(c(1.0, 0.0), 2.0).unwrap();
    let af = TaylorFunction::new(a.apply(f.coefficients()), 2.0).unwrap();
    let astar_g = TaylorFunction::new(astar.apply(g.coefficients()), 2.0).unwrap();
    let lhs = af.pairing(&g).value;
    let rhs = f.pairing(&astar_g).value;
    assert!((lhs - rhs).norm() < 1e-10);
}

#[test]
fn iterate_symbol_closed_forms() {
    let t = tol();
    let m = canonical_map(
        SymbolClass::HyperbolicNonAutomorphismII,
        c(0.5, 0.0),
        None,
        &t,
    )
    .unwrap();
    assert!(iterate_symbol(&m, 1, &t).unwrap().max_coefficient_distance(&m) < 1e-14);
    for n in [2usize, 3, 5, 9] {
        let iterated = iterate_symbol(&m, n, &t).unwrap();
        let want = canonical_map(
            SymbolClass::HyperbolicNonAutomorphismII,
            c(0.5f64.powi(n as i32), 0.0),
            None,
            &t,
        )
        .unwrap();
        assert!(iterated.max_coefficient_distance(&want) < 1e-12, "n = {}", n);
    }

    let ha = canonical_map(SymbolClass::HyperbolicAutomorphism, c(0.5, 0.0), None, &t).unwrap();
    for n in [2usize, 4, 7] {
        let iterated = iterate_symbol(&ha, n, &t).unwrap();
        let big = 3f64.powi(n as i32); // ((1+r)/(1-r))^n with r = 1/2
        let rn = (big - 1.0) / (big + 1.0);
        let want =
            canonical_map(SymbolClass::HyperbolicAutomorphism, c(rn, 0.0), None, &t).unwrap();
        // Coefficients grow like (1 - r_n^2)^{-1/2}; compare in that scale.
        let scale = want.coefficients()[0].norm();
        assert!(
            iterated.max_coefficient_distance(&want) < 1e-13 * scale.max(1.0),
            "n = {}",
            n
        );
        // Cross-check against direct composition.
        let mut direct = ha;
        for _ in 1..n {
            direct = direct.compose(&ha, &t).unwrap();
        }
        assert!(iterated.max_coefficient_distance(&direct) < 1e-13 * scale.max(1.0));
    }

    assert_eq!(iterate_symbol(&ha, 0, &t).err(), Some(Error::InvalidRange));
}

#[test]
fn matrix_agrees_with_series_composition() {
    let t = tol();
    let n = 128;
    let head = n / 4;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let symbols: Vec<MobiusMap> = vec![
        canonical_map(SymbolClass::HyperbolicAutomorphism, c(0.5, 0.0), None, &t).unwrap(),
        canonical_map(SymbolClass::EllipticAutomorphism, c(0.0, 1.0), None, &t).unwrap(),
        canonical_map(SymbolClass::ParabolicAutomorphism, c(0.0, 1.0), None, &t).unwrap(),
        canonical_map(SymbolClass::HyperbolicNonAutomorphismI, c(0.5, 0.0), None, &t).unwrap(),
        canonical_map(SymbolClass::HyperbolicNonAutomorphismII, c(0.5, 0.0), None, &t).unwrap(),
        canonical_map(SymbolClass::ParabolicNonAutomorphism, c(1.0, 0.0), None, &t).unwrap(),
        canonical_map(SymbolClass::Loxodromic, c(0.3, 0.1), Some(c(0.1, 0.0)), &t).unwrap(),
    ];
    let matrices: Vec<OperatorMatrix> = symbols
        .iter()
        .map(|m| OperatorMatrix::build(m, n, &t).unwrap())
        .collect();
    for trial in 0..50 {
        let deg = rng.gen_range(1..head);
        let coeffs: Vec<Complex64> = (0..=deg)
            .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let f = TaylorFunction::new(coeffs, 2.0).unwrap();
        for (m, a) in symbols.iter().zip(matrices.iter()) {
            let via_series = f.truncated_compose(m, n, &t).unwrap();
            let via_matrix = a.apply(f.coefficients());
            for (k, (s, m)) in via_series
                .coefficients()
                .iter()
                .zip(via_matrix.iter())
                .take(head)
                .enumerate()
            {
                assert!((s - m).norm() < 1e-9, "trial {} coefficient {}", trial, k);
            }
        }
    }
}

#[test]
fn matrix_powers_follow_the_semigroup() {
    let t = tol();
    let work = 256;
    let block = 64;
    for (class, param, aux) in [
        (SymbolClass::HyperbolicAutomorphism, c(0.5, 0.0), None),
        (SymbolClass::HyperbolicNonAutomorphismI, c(0.5, 0.0), None),
        (SymbolClass::HyperbolicNonAutomorphismII, c(0.5, 0.0), None),
        (SymbolClass::EllipticAutomorphism, c(0.0, 1.0), None),
        (SymbolClass::ParabolicNonAutomorphism, c(1.0, 0.0), None),
        (SymbolClass::Loxodromic, c(0.3, 0.1), Some(c(0.1, 0.0))),
    ] {
        let m = canonical_map(class, param, aux, &t).unwrap();
        let a = OperatorMatrix::build(&m, work, &t).unwrap();
        let squared = a.matmul(&a);
        let direct = OperatorMatrix::build(&iterate_symbol(&m, 2, &t).unwrap(), work, &t).unwrap();
        let mut worst = 0.0f64;
        for k in 0..block {
            for j in 0..block {
                worst = worst.max((squared.entry(k, j) - direct.entry(k, j)).norm());
            }
        }
        assert!(worst < 1e-8, "class {} deviation {}", class, worst);
    }
}

#[test]
fn radius_estimate_on_an_exact_eigenfunction() {
    let t = tol();
    // (1 - z) is an eigenfunction of rz + 1 - r with eigenvalue r = 0.5:
    // the norms form an exact geometric sequence.
    let m = canonical_map(SymbolClass::HyperbolicNonAutomorphismI, c(0.5, 0.0), None, &t)
        .unwrap();
    let f = TaylorFunction::new(vec![c(1.0, 0.0), c(-1.0, 0.0)], 2.0).unwrap();
    let est = local_spectral_radius_estimate(&m, &f, false, (1, 8), 64, 512, &t).unwrap();
    assert!((est.estimate - 0.5).abs() < 1e-9 * 0.5);
    assert!(est.residual < 1e-9);
}

#[test]
fn radius_estimate_rejects_bad_inputs() {
    let t = tol();
    let m = canonical_map(SymbolClass::HyperbolicNonAutomorphismII, c(0.25, 0.0), None, &t)
        .unwrap();
    let zero = TaylorFunction::new(vec![c(0.0, 0.0)], 2.0).unwrap();
    let z = TaylorFunction::monomial(1, 2.0).unwrap();
    assert_eq!(
        local_spectral_radius_estimate(&m, &zero, false, (1, 5), 64, 512, &t).err(),
        Some(Error::ZeroFunction)
    );
    assert_eq!(
        local_spectral_radius_estimate(&m, &z, false, (5, 5), 64, 512, &t).err(),
        Some(Error::InvalidRange)
    );
    let double = MobiusMap::scaling(c(2.0, 0.0), &t).unwrap();
    assert_eq!(
        local_spectral_radius_estimate(&double, &z, false, (1, 5), 64, 512, &t).err(),
        Some(Error::NotSelfMap)
    );
}
