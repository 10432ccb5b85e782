use hardy_specta::hardy::{
    cayley_power_coeffs, one_minus_z_power_coeffs, TaylorFunction,
};
use hardy_specta::mobius::{canonical_map, MobiusMap, SymbolClass};
use hardy_specta::operator::iterate_symbol;
use hardy_specta::{Error, Tolerances};
use num_complex::Complex64;
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn tol() -> Tolerances {
    Tolerances::default()
}

fn poly(coeffs: &[(f64, f64)], p: f64) -> TaylorFunction {
    TaylorFunction::new(coeffs.iter().map(|&(r, i)| c(r, i)).collect(), p).unwrap()
}

#[test]
fn evaluate_examples() {
    let f = poly(&[(1.0, 0.0), (-1.0, 0.0)], 2.0); // 1 - z
    assert!((f.evaluate(c(0.5, 0.0)) - c(0.5, 0.0)).norm() < 1e-15);
    let one = poly(&[(1.0, 0.0)], 2.0);
    assert!((one.evaluate(c(0.3, -0.8)) - c(1.0, 0.0)).norm() < 1e-15);
    let w = TaylorFunction::new(cayley_power_coeffs(c(0.3, 0.0), 64), 2.0).unwrap();
    assert!((w.evaluate(c(0.0, 0.0)) - c(1.0, 0.0)).norm() < 1e-15);
}

#[test]
fn exponent_validation() {
    assert_eq!(
        TaylorFunction::new(vec![c(1.0, 0.0)], 1.0).err(),
        Some(Error::InvalidExponent)
    );
    assert_eq!(
        TaylorFunction::new(vec![c(1.0, 0.0)], f64::INFINITY).err(),
        Some(Error::InvalidExponent)
    );
    assert!(TaylorFunction::new(vec![c(1.0, 0.0)], 1.0001).is_ok());
}

#[test]
fn hp_norm_examples() {
    // Monomials are unimodular on the circle for every exponent.
    for p in [1.5, 2.0, 4.0, 7.0] {
        let zn = TaylorFunction::monomial(5, p).unwrap();
        assert!((zn.hp_norm(256).unwrap() - 1.0).abs() < 1e-12, "p = {}", p);
    }
    let f2 = poly(&[(1.0, 0.0), (1.0, 0.0)], 2.0);
    assert!((f2.hp_norm(64).unwrap() - 2f64.sqrt()).abs() < 1e-12);
    let f4 = poly(&[(1.0, 0.0), (1.0, 0.0)], 4.0);
    assert!((f4.hp_norm(64).unwrap() - 6f64.powf(0.25)).abs() < 1e-12);
    assert!((6f64.powf(0.25) - 1.56508).abs() < 1e-5);
    // Coarse grids are rejected.
    assert_eq!(f4.hp_norm(7).err(), Some(Error::QuadratureTooCoarse));
}

#[test]
fn pairing_examples() {
    let f = poly(&[(1.0, 0.0), (2.0, 0.0)], 2.0);
    let g = poly(&[(1.0, 0.0), (1.0, 0.0)], 2.0);
    assert!((f.pairing(&g).value - c(3.0, 0.0)).norm() < 1e-15);
    let z = TaylorFunction::monomial(1, 2.0).unwrap();
    let one = poly(&[(1.0, 0.0)], 2.0);
    assert!((z.pairing(&one).value).norm() < 1e-15);
    let w = TaylorFunction::new(cayley_power_coeffs(c(0.3, 0.0), 128), 2.0).unwrap();
    assert!((w.pairing(&one).value - c(1.0, 0.0)).norm() < 1e-15);
}

#[test]
fn truncated_compose_examples() {
    let t = tol();
    let affine = MobiusMap::new(c(0.5, 0.0), c(0.5, 0.0), c(0.0, 0.0), c(1.0, 0.0), &t).unwrap();
    let z2 = TaylorFunction::monomial(2, 2.0).unwrap();
    let composed = z2.truncated_compose(&affine, 8, &t).unwrap();
    let want = [0.25, 0.5, 0.25, 0.0, 0.0, 0.0, 0.0, 0.0];
    for (k, &w) in want.iter().enumerate() {
        assert!((composed.coefficients()[k] - c(w, 0.0)).norm() < 1e-15);
    }

    let one = poly(&[(1.0, 0.0)], 2.0);
    let same = one.truncated_compose(&affine, 4, &t).unwrap();
    assert!((same.coefficients()[0] - c(1.0, 0.0)).norm() < 1e-15);

    // (1 - z) is an exact eigenfunction of rz + 1 - r with eigenvalue r.
    let hna1 = canonical_map(SymbolClass::HyperbolicNonAutomorphismI, c(0.5, 0.0), None, &t)
        .unwrap();
    let e1 = poly(&[(1.0, 0.0), (-1.0, 0.0)], 2.0);
    let composed = e1.truncated_compose(&hna1, 8, &t).unwrap();
    for k in 0..8 {
        let want = 0.5 * e1.coefficients().get(k).copied().unwrap_or(c(0.0, 0.0));
        assert!((composed.coefficients()[k] - want).norm() < 1e-15);
    }

    let double = MobiusMap::scaling(c(2.0, 0.0), &t).unwrap();
    assert_eq!(z2.truncated_compose(&double, 8, &t).err(), Some(Error::NotSelfMap));
    assert_eq!(z2.truncated_compose(&affine, 2, &t).err(), Some(Error::InvalidTruncation));
}

#[test]
fn eigenfunction_series_low_order_terms() {
    // (1 - z)^2 = 1 - 2z + z^2 exactly, then zeros.
    let e2 = one_minus_z_power_coeffs(c(2.0, 0.0), 6);
    let want = [1.0, -2.0, 1.0, 0.0, 0.0, 0.0];
    for (k, &w) in want.iter().enumerate() {
        assert!((e2[k] - c(w, 0.0)).norm() < 1e-15);
    }
    // w_0 = 1.
    let w0 = cayley_power_coeffs(c(0.0, 0.0), 8);
    assert!((w0[0] - c(1.0, 0.0)).norm() < 1e-15);
    assert!(w0[1..].iter().all(|x| x.norm() < 1e-15));
    // w_lambda starts 1 + 2 lambda z + 2 lambda^2 z^2.
    let lam = c(0.2, 0.1);
    let w = cayley_power_coeffs(lam, 4);
    assert!((w[1] - 2.0 * lam).norm() < 1e-15);
    assert!((w[2] - 2.0 * lam * lam).norm() < 1e-15);
}

#[test]
fn compose_is_multiplicative_in_the_symbol() {
    let t = tol();
    let n = 128;
    let head = n / 4;
    for (class, param, aux) in [
        (SymbolClass::HyperbolicAutomorphism, c(0.5, 0.0), None),
        (SymbolClass::EllipticAutomorphism, c(0.0, 1.0), None),
        (SymbolClass::ParabolicAutomorphism, c(0.0, 1.0), None),
        (SymbolClass::HyperbolicNonAutomorphismI, c(0.5, 0.0), None),
        (SymbolClass::HyperbolicNonAutomorphismII, c(0.5, 0.0), None),
        (SymbolClass::ParabolicNonAutomorphism, c(1.0, 0.0), None),
        (SymbolClass::Loxodromic, c(0.3, 0.1), Some(c(0.1, 0.0))),
    ] {
        let m = canonical_map(class, param, aux, &t).unwrap();
        let m2 = iterate_symbol(&m, 2, &t).unwrap();
        let f = poly(&[(0.3, 0.1), (0.0, -0.2), (1.0, 0.0), (0.5, 0.5)], 2.0);
        let direct = f.truncated_compose(&m2, n, &t).unwrap();
        let twice = f
            .truncated_compose(&m, n, &t)
            .unwrap()
            .truncated_compose(&m, n, &t)
            .unwrap();
        for k in 0..head {
            assert!(
                (direct.coefficients()[k] - twice.coefficients()[k]).norm() < 1e-9,
                "class {} coefficient {}",
                class,
                k
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parseval_consistency(coeffs in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..65)) {
        let f = poly(&coeffs, 2.0);
        let quad = f.hp_norm(4 * f.len().max(8)).unwrap();
        let ell2 = f.ell2_norm();
        prop_assert!((quad - ell2).abs() <= 1e-10 * ell2.max(1e-30));
    }

    #[test]
    fn pairing_is_sesquilinear_and_conjugate_symmetric(
        fc in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..17),
        gc in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..17),
        sc in (-1.0f64..1.0, -1.0f64..1.0),
    ) {
        let f = poly(&fc, 2.0);
        let g = poly(&gc, 2.0);
        let s = c(sc.0, sc.1);
        // Conjugate symmetry.
        let fg = f.pairing(&g).value;
        let gf = g.pairing(&f).value;
        prop_assert!((fg - gf.conj()).norm() < 1e-12);
        // Linearity in the first slot: <s f, g> = s <f, g>.
        let sf = TaylorFunction::new(
            f.coefficients().iter().map(|&x| s * x).collect(),
            2.0,
        ).unwrap();
        prop_assert!((sf.pairing(&g).value - s * fg).norm() < 1e-12);
        // Conjugate-linearity in the second slot.
        let sg = TaylorFunction::new(
            g.coefficients().iter().map(|&x| s * x).collect(),
            2.0,
        ).unwrap();
        prop_assert!((f.pairing(&sg).value - s.conj() * fg).norm() < 1e-12);
    }

    #[test]
    fn hoelder_bound(
        fc in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..17),
        gc in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..17),
        p in 1.2f64..4.0,
    ) {
        let q = p / (p - 1.0);
        let f = poly(&fc, p);
        let g = poly(&gc, q);
        let m = 4 * fc.len().max(gc.len()).max(8);
        let bound = f.hp_norm(m).unwrap() * g.hp_norm(m).unwrap();
        prop_assert!(f.pairing(&g).value.norm() <= bound + 1e-9);
    }
}
