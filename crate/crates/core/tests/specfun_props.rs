use num_complex::Complex64;
use proptest::prelude::*;
use spherical_singularities::specfun::{
    family, sph_bessel_asym, sph_bessel_series, sph_derivative, sph_eval, BesselOrder, Kind, DEFAULT_MAX_TERMS,
};

const NU: f64 = BesselOrder::TRANSVERSE;

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

/// Complex argument with `|z|` log-uniform in `[lo, hi]` and `|Im z| <= 2`.
fn argument(lo: f64, hi: f64) -> impl Strategy<Value = Complex64> {
    (lo.ln()..hi.ln(), -2.0f64..2.0).prop_map(|(log_r, im)| {
        let r = log_r.exp();
        let im = im.clamp(-r * 0.99, r * 0.99);
        Complex64::new((r * r - im * im).sqrt(), im)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn wronskian(z in argument(0.5, 1e5)) {
        let j = family(Kind::J, NU, z).unwrap();
        let y = family(Kind::Y, NU, z).unwrap();
        let w = j.center * y.derivative() - j.derivative() * y.center;
        prop_assert!(rel(w, 1.0 / (z * z)) < 1e-9, "z = {z}: {}", rel(w, 1.0 / (z * z)));
    }

    #[test]
    fn hankel_conjugation(z in argument(0.5, 1e5)) {
        let h1 = sph_eval(Kind::H1, NU, z.conj()).unwrap();
        let h2 = sph_eval(Kind::H2, NU, z).unwrap();
        prop_assert!(rel(h2, h1.conj()) < 1e-12, "z = {z}");
    }

    #[test]
    fn hankel_components(z in argument(0.5, 1e5)) {
        let i = Complex64::i();
        let j = family(Kind::J, NU, z).unwrap();
        let y = family(Kind::Y, NU, z).unwrap();
        let h1 = family(Kind::H1, NU, z).unwrap();
        let h2 = family(Kind::H2, NU, z).unwrap();
        for (a, b, c, d) in [
            (h1.lower, h2.lower, j.lower, y.lower),
            (h1.center, h2.center, j.center, y.center),
            (h1.upper, h2.upper, j.upper, y.upper),
        ] {
            prop_assert!(rel(a, c + i * d) < 1e-12);
            prop_assert!(rel(b, c - i * d) < 1e-12);
        }
    }

    /// Near a real zero of `j` the relative error of either branch is
    /// unbounded, so differences are measured against the `|h1|` envelope.
    #[test]
    fn branch_overlap(z in argument(30.0, 45.0)) {
        for kind in [Kind::J, Kind::Y, Kind::H1, Kind::H2] {
            let s = sph_bessel_series(kind, NU, z).unwrap();
            let a = sph_bessel_asym(kind, NU, z, DEFAULT_MAX_TERMS).unwrap();
            let scale = sph_eval(Kind::H1, NU, z).unwrap().norm().max(sph_eval(Kind::H2, NU, z).unwrap().norm());
            prop_assert!((s - a).norm() < 1e-9 * scale, "{kind:?} z = {z}: {s} vs {a}");
        }
    }

    #[test]
    fn derivative_matches_finite_difference(re in 0.5f64..200.0, im in -2.0f64..2.0) {
        let z = Complex64::new(re, im);
        let h = 1e-6;
        for kind in [Kind::J, Kind::Y, Kind::H1] {
            let fd = (sph_eval(kind, NU, z + h).unwrap() - sph_eval(kind, NU, z - h).unwrap()) / (2.0 * h);
            let d = sph_derivative(kind, NU, z).unwrap();
            prop_assert!((d - fd).norm() < 1e-8, "{kind:?} z = {z}: {d} vs {fd}");
        }
    }

    #[test]
    fn integer_order_closed_forms(z in argument(0.5, 1e4)) {
        let i = Complex64::i();
        let (s, c) = (z.sin(), z.cos());
        let j0 = s / z;
        let j1 = s / (z * z) - c / z;
        let y0 = -c / z;
        let h0 = -i * (i * z).exp() / z;
        prop_assert!(rel(sph_eval(Kind::J, 0.0, z).unwrap(), j0) < 1e-12, "j0 z = {z}");
        prop_assert!(rel(sph_eval(Kind::J, 1.0, z).unwrap(), j1) < 1e-12, "j1 z = {z}");
        prop_assert!(rel(sph_eval(Kind::Y, 0.0, z).unwrap(), y0) < 1e-12, "y0 z = {z}");
        prop_assert!(rel(sph_eval(Kind::H1, 0.0, z).unwrap(), h0) < 1e-12);
    }
}

#[test]
fn closed_form_points() {
    let cases = [
        (Kind::J, 0.0, 1.0, 0.841_470_984_807_896_5),
        (Kind::J, 1.0, 2.0, 0.435_397_774_979_992),
        (Kind::Y, 0.0, 1.0, -0.540_302_305_868_139_8),
    ];
    for (kind, nu, x, expected) in cases {
        let v = sph_eval(kind, nu, Complex64::new(x, 0.0)).unwrap();
        assert!(
            (v.re - expected).abs() < 1e-12 * expected.abs() && v.im.abs() < 1e-15,
            "{kind:?} {nu} {x}: {v}"
        );
    }
    let d = sph_derivative(Kind::J, 0.0, Complex64::new(1.0, 0.0)).unwrap();
    assert!((d.re + 0.301_168_678_939_756_8).abs() < 1e-12);
    let z = Complex64::new(5.0, 0.0);
    let i = Complex64::i();
    let dh = sph_derivative(Kind::H1, 0.0, z).unwrap();
    let expected = (i * z).exp() * (1.0 / z + i / (z * z));
    assert!(rel(dh, expected) < 1e-12);
}

#[test]
fn h0_asymptotic_terminates() {
    let z = Complex64::new(50.0, 0.0);
    let h = sph_bessel_asym(Kind::H1, 0.0, z, DEFAULT_MAX_TERMS).unwrap();
    let expected = -Complex64::i() * (Complex64::i() * z).exp() / z;
    assert!(rel(h, expected) < 1e-14);
}

#[test]
fn leading_asymptotics() {
    let z = Complex64::new(1e4, 0.0);
    let h = sph_eval(Kind::H1, NU, z).unwrap();
    let scaled = z * (-Complex64::i() * z).exp() * h;
    let limit = -Complex64::i() * Complex64::new(0.0, -std::f64::consts::FRAC_PI_2 * NU).exp();
    // Next order is A_1 / z ~ 1.2e-4.
    let expected = limit * (1.0 + Complex64::i() * spherical_singularities::specfun::coeff_a(1, NU) / z);
    assert!(rel(scaled, limit) < 2e-4);
    assert!(rel(scaled, expected) < 1e-8);
}

#[test]
fn large_argument_magnitude() {
    let z = Complex64::new(37768.0, -0.82);
    let h = sph_eval(Kind::H1, NU, z).unwrap();
    let envelope = (0.82f64).exp() / z.norm();
    assert!((h.norm() / envelope - 1.0).abs() < 1e-3);
}
