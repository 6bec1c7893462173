use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use proptest::prelude::*;

use solvlat_core::lattice::{
    a_sequence, b_values, bock_certificate, char_poly_integer, companion_matrix, cubic_roots, discriminant, fi_family,
    in_sigma, integer_char_poly, integer_determinant, poly_from_roots, raices_oracle, sigma_region, spectrum,
    t_parameter, Complex64, TOLERANCE,
};
use solvlat_core::models::{g_b, m6_family};
use solvlat_core::scalar::int;

fn rounded_companion(coeffs: &[Complex64]) -> Option<Vec<Vec<BigInt>>> {
    let ints: Vec<BigInt> = coeffs.iter().map(|z| BigInt::from(z.re.round() as i64)).collect();
    companion_matrix(&ints).ok()
}

#[test]
fn sigma_symmetric_on_large_grid() {
    for m in -20..=20 {
        for n in -20..=20 {
            assert_eq!(in_sigma(m, n), in_sigma(n, m), "({m},{n})");
            if m * m < 3 * n {
                assert!(in_sigma(m, n), "({m},{n})");
            }
        }
    }
    assert!(sigma_region(20).windows(2).all(|w| (w[0].m, w[0].n) < (w[1].m, w[1].n)));
}

#[test]
fn cubic_invariants_on_grid() {
    for p in sigma_region(10) {
        let r = cubic_roots(p.m, p.n).unwrap();
        assert!(r.c > 0.0);
        assert!(r.residual_real <= 1e-12 * r.c.max(1.0).powi(3), "{p:?} {r:?}");
        assert!(r.residual_product <= 1e-12, "{p:?} {r:?}");
        assert!(r.residual_sum <= 1e-12, "{p:?} {r:?}");
        assert!(r.phi > 0.0 && r.phi < std::f64::consts::PI);
    }
}

#[test]
fn g_b_spectrum_matches_cubic() {
    // exp(log c · M_b) has eigenvalues c and c^{-1/2} e^{±i b log c}
    let r = cubic_roots(0, 3).unwrap();
    let h = b_values(0, 3, [0]).unwrap()[0].h;
    let z = Complex64::new(-0.5, h) * r.c.ln();
    let alpha = z.exp();
    assert!((alpha.re - r.alpha_re).abs() < 1e-12 && (alpha.im.abs() - r.alpha_im).abs() < 1e-12);
    assert_eq!(g_b(&int(0)).d(), 3);
}

#[test]
fn certificates_for_all_small_parameters() {
    for n in 2..=4usize {
        let fam = m6_family(n).unwrap();
        for m in 3..=10 {
            let p = char_poly_integer(n as i64, m).unwrap();
            let last = p.len() - 1;
            assert!((0..=last).all(|i| p[i] == -p[last - i].clone()));
            let c = companion_matrix(&p).unwrap();
            assert_eq!(integer_determinant(&c), BigInt::one());
            assert_eq!(integer_char_poly(&c), p);
            let cert = bock_certificate(&fam.spec, t_parameter(n as i64, m).unwrap(), &c).unwrap();
            assert!(cert.certified, "n={n} m={m} {cert:?}");
            assert!(cert.spectrum_residual <= TOLERANCE);
            let a = a_sequence(m, n as i64).unwrap();
            assert!(a.max_relative_residual <= 1e-9);
        }
    }
}

#[test]
fn unimodular_lck_member_never_certified() {
    let spec = fi_family(&int(1), &[int(0), int(0)]).unwrap();
    let eig = spectrum(&spec.m);
    for k in 1..=50 {
        let t = k as f64 / 10.0;
        let roots: Vec<Complex64> = eig.iter().map(|l| (l * t).exp()).collect();
        let Some(target) = rounded_companion(&poly_from_roots(&roots)) else {
            continue;
        };
        let cert = bock_certificate(&spec, t, &target).unwrap();
        assert!(!cert.certified, "t = {t}");
    }
}

#[test]
fn raices_scan() {
    let r = raices_oracle(2, 3, 1e-6).unwrap();
    assert_eq!(r.polynomials, 2401);
    assert!(r.violations.is_empty(), "{:?}", r.violations);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn b_values_self_consistent(m in -10i64..=10, n in -10i64..=10, k in -3i64..=3) {
        prop_assume!(in_sigma(m, n) && !(m == n && (0..=2).contains(&m)));
        let b = b_values(m, n, [k]).unwrap();
        prop_assert!(b[0].residual <= 1e-9);
    }

    #[test]
    fn discriminant_matches_float(m in -50i64..=50, n in -50i64..=50) {
        let (x, y) = (m as f64, n as f64);
        let f = -27.0 - 4.0 * x.powi(3) + 18.0 * x * y + x * x * y * y - 4.0 * y.powi(3);
        prop_assert_eq!(discriminant(m, n).to_f64().unwrap(), f);
    }

    #[test]
    fn recurrence_is_exact(m in 3i64..=12, n in 2i64..=6) {
        let a = a_sequence(m, n).unwrap().a;
        prop_assert_eq!(a[0].clone(), BigInt::from(2));
        prop_assert_eq!(a[1].clone(), BigInt::from(m));
        for k in 1..a.len() - 1 {
            prop_assert_eq!(a[k + 1].clone(), m * &a[k] - &a[k - 1]);
        }
    }
}
