mod oracle;

use csl_heat::constants::Constants;
use csl_heat::heating::{invert_bound, specific_heating_rate, HeatingBudget};
use csl_heat::materials::{Material, Registry};
use csl_heat::spectrum::{
    lambda_eff, lambda_eff_gaussian_closed_form, Dispersion, NoiseSpectrum, QuadratureSettings,
};
use csl_heat::thermal::{
    q_transport, rod_far_temperature, rod_profile, rod_with_absorber_far_temperature,
    solve_surface_temperature, sphere_center_temperature, sphere_profile, PowerLawConductivity,
    TransportEnv,
};
use csl_heat::units::{Quantity, Unit};
use oracle::rel;
use proptest::prelude::*;

fn log_uniform(lo: f64, hi: f64) -> impl Strategy<Value = f64> {
    (lo.log10()..hi.log10()).prop_map(|e| 10f64.powf(e))
}

fn quad() -> QuadratureSettings {
    QuadratureSettings::default()
}

fn k(k0: f64, beta: f64) -> PowerLawConductivity {
    PowerLawConductivity::new(k0, beta).unwrap()
}

proptest! {
    #[test]
    fn conversion_round_trip(idx in 0usize..Unit::ALL.len(), other in 0usize..Unit::ALL.len(), v in -1e30f64..1e30) {
        let unit = Unit::ALL[idx];
        let target = Unit::ALL[other];
        let q = Quantity::new(v, unit).unwrap();
        match q.convert(target) {
            Ok(c) => {
                let back = c.convert(unit).unwrap().value();
                prop_assert!(rel(back, v) <= 1e-14);
            }
            Err(_) => prop_assert_ne!(unit.dimension(), target.dimension()),
        }
    }

    #[test]
    fn spectra_are_even(lambda in log_uniform(1e-20, 1e-2), tc in log_uniform(1e-15, 1e-6), omega in 0.0f64..1e15) {
        for s in [
            NoiseSpectrum::white(lambda).unwrap(),
            NoiseSpectrum::gaussian(lambda, tc).unwrap(),
            NoiseSpectrum::step(lambda, 1.0 / tc).unwrap(),
            NoiseSpectrum::tabulated(&[(0.0, lambda), (1.0 / tc, 0.5 * lambda), (2.0 / tc, 0.0)]).unwrap(),
        ] {
            prop_assert_eq!(s.eval(omega), s.eval(-omega));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lambda_eff_never_exceeds_spectrum(
        lambda in log_uniform(1e-20, 1e-2),
        tc in log_uniform(1e-15, 1e-8),
        vs in log_uniform(100.0, 1e4),
        rc in log_uniform(1e-9, 1e-5),
    ) {
        let d = Dispersion::linear(vs).unwrap();
        for s in [
            NoiseSpectrum::gaussian(lambda, tc).unwrap(),
            NoiseSpectrum::step(lambda, 1.0 / tc).unwrap(),
            NoiseSpectrum::tabulated(&[(0.0, 0.3 * lambda), (1.0 / tc, lambda), (3.0 / tc, 0.0)]).unwrap(),
        ] {
            let value = lambda_eff(&s, &d, rc, &quad()).unwrap();
            prop_assert!(value >= 0.0 && value <= s.sup());
        }
    }

    #[test]
    fn lambda_eff_decreases_with_correlation_time(
        lambda in log_uniform(1e-12, 1e-4),
        tc in log_uniform(1e-14, 1e-9),
        factor in 1.01f64..10.0,
        vs in log_uniform(100.0, 1e4),
        rc in log_uniform(1e-9, 1e-5),
    ) {
        let d = Dispersion::linear(vs).unwrap();
        let a = lambda_eff(&NoiseSpectrum::gaussian(lambda, tc).unwrap(), &d, rc, &quad()).unwrap();
        let b = lambda_eff(&NoiseSpectrum::gaussian(lambda, tc * factor).unwrap(), &d, rc, &quad()).unwrap();
        prop_assert!(b <= a * (1.0 + 1e-9));
    }

    #[test]
    fn lambda_eff_decreases_with_sound_speed(
        lambda in log_uniform(1e-12, 1e-4),
        tc in log_uniform(1e-14, 1e-9),
        vs in log_uniform(100.0, 1e4),
        factor in 1.01f64..10.0,
        rc in log_uniform(1e-9, 1e-5),
    ) {
        let s = NoiseSpectrum::gaussian(lambda, tc).unwrap();
        let a = lambda_eff(&s, &Dispersion::linear(vs).unwrap(), rc, &quad()).unwrap();
        let b = lambda_eff(&s, &Dispersion::linear(vs * factor).unwrap(), rc, &quad()).unwrap();
        prop_assert!(b <= a * (1.0 + 1e-9));
    }

    #[test]
    fn large_cutoff_falls_as_fifth_power(
        lambda in log_uniform(1e-12, 1e-4),
        vs in log_uniform(100.0, 1e4),
        rc in log_uniform(1e-9, 1e-5),
    ) {
        let d = Dispersion::linear(vs).unwrap();
        let at = |c: f64| lambda_eff(&NoiseSpectrum::gaussian(lambda, c * rc / vs).unwrap(), &d, rc, &quad()).unwrap();
        let ratio = at(100.0) / at(50.0);
        prop_assert!(rel(ratio, 2f64.powi(-5)) < 3e-3);
    }

    #[test]
    fn quadrature_matches_closed_form(
        lambda in log_uniform(1e-12, 1e-4),
        c in 0.0f64..40.0,
        vs in log_uniform(100.0, 1e4),
        rc in log_uniform(1e-9, 1e-5),
    ) {
        let tc = c * rc / vs;
        let q = lambda_eff(&NoiseSpectrum::gaussian(lambda, tc).unwrap(), &Dispersion::linear(vs).unwrap(), rc, &quad()).unwrap();
        let exact = lambda_eff_gaussian_closed_form(lambda, vs, tc, rc).unwrap();
        prop_assert!(rel(q, exact) < 1e-6);
    }

    #[test]
    fn tabulated_gaussian_is_consistent(
        lambda in log_uniform(1e-12, 1e-4),
        c in 0.05f64..10.0,
        vs in log_uniform(100.0, 1e4),
        rc in log_uniform(1e-9, 1e-5),
    ) {
        let tc = c * rc / vs;
        let points: Vec<(f64, f64)> = (0..=2000)
            .map(|i| {
                let omega = i as f64 * 6.0 / tc / 2000.0;
                (omega, lambda * (-(omega * tc).powi(2)).exp())
            })
            .collect();
        let spectrum = NoiseSpectrum::tabulated(&points).unwrap();
        let q_max = 8.0 / rc;
        let dispersion = Dispersion::tabulated(&[(0.0, 0.0), (0.5 * q_max, 0.5 * vs * q_max), (q_max, vs * q_max)]).unwrap();
        let tabulated = lambda_eff(&spectrum, &dispersion, rc, &quad()).unwrap();
        let exact = lambda_eff_gaussian_closed_form(lambda, vs, tc, rc).unwrap();
        prop_assert!(rel(tabulated, exact) < 1e-3);
    }

    #[test]
    fn quadrature_matches_simpson_for_step_cutoff(
        lambda in log_uniform(1e-12, 1e-4),
        c in 0.1f64..20.0,
        vs in log_uniform(100.0, 1e4),
        rc in log_uniform(1e-9, 1e-5),
    ) {
        let omega_c = vs / (c * rc);
        let s = NoiseSpectrum::step(lambda, omega_c).unwrap();
        let q = lambda_eff(&s, &Dispersion::linear(vs).unwrap(), rc, &quad()).unwrap();
        let simpson = oracle::lambda_eff_simpson(|_| lambda, |q| vs * q, rc, (1.0 / c).min(8.0));
        prop_assert!(rel(q, simpson) < 1e-6, "q={q} simpson={simpson}");
    }
}

#[test]
fn white_noise_identity_on_grid() {
    for i in 0..=12 {
        let rc = 10f64.powf(-9.0 + 0.5 * i as f64);
        for vs in [50.0, 1000.0, 4000.0, 2e4] {
            let lambda = 1.9952623149688786e-8;
            let v = lambda_eff(
                &NoiseSpectrum::white(lambda).unwrap(),
                &Dispersion::linear(vs).unwrap(),
                rc,
                &quad(),
            )
            .unwrap();
            assert!(rel(v, lambda) <= 1e-8, "rc={rc} vs={vs}: {v}");
        }
    }
}

proptest! {
    #[test]
    fn heating_matches_direct_formula(lambda in log_uniform(1e-20, 1e-2), rc in log_uniform(1e-9, 1e-3)) {
        let direct = 0.75 * (1.054571817e-34 / (rc * 1.67262e-27)).powi(2) * lambda;
        let h = specific_heating_rate(&Constants::default(), lambda, rc).unwrap();
        prop_assert!(rel(h, direct) < 1e-13);
    }

    #[test]
    fn bound_inversion_round_trips(budget in log_uniform(1e-16, 1e-6), rc in log_uniform(1e-9, 1e-3)) {
        let c = Constants::default();
        let b = HeatingBudget::new(budget, "test").unwrap();
        let max = invert_bound(&c, &b, rc).unwrap();
        prop_assert!(rel(specific_heating_rate(&c, max, rc).unwrap(), budget) < 1e-12);
    }

    #[test]
    fn transport_is_increasing_and_antisymmetric(
        eps in 0.0f64..1.0,
        a in 0.0f64..1.0,
        p in log_uniform(1e-4, 1e4),
        t1 in 0.0f64..10.0,
        t2 in 0.0f64..10.0,
        dt in 1e-6f64..1.0,
    ) {
        prop_assume!(eps > 0.0 || a > 0.0);
        let env = |wall: f64| TransportEnv::new(eps, a, p, wall).unwrap();
        let forward = q_transport(t1, &env(t2)).unwrap();
        let backward = q_transport(t2, &env(t1)).unwrap();
        prop_assert!((forward + backward).abs() <= 1e-12 * forward.abs().max(1e-300));
        prop_assert!(q_transport(t1 + dt, &env(t2)).unwrap() > forward);
    }

    #[test]
    fn surface_solve_balances(
        radius in log_uniform(1e-3, 10.0),
        heating in log_uniform(1e-12, 1e2),
        eps in 0.0f64..1.0,
        a in 0.01f64..1.0,
        p_mbar in log_uniform(1e-9, 1e-3),
        t2 in 0.0f64..0.1,
    ) {
        let env = TransportEnv::new(eps, a, p_mbar * 100.0, t2).unwrap();
        let s = solve_surface_temperature(radius, heating, &env, 1e-10).unwrap();
        prop_assert!(s.residual.abs() <= 1e-10 * s.flux);
        prop_assert!(s.surface_temperature >= t2);
        let bisected = oracle::surface_bisection(s.flux * 1e-4, eps, a, p_mbar, t2);
        prop_assert!((s.surface_temperature - bisected).abs() <= 1e-8 * (s.surface_temperature - t2) + 1e-15);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn closed_forms_match_ode(
        length in log_uniform(1e-3, 2.0),
        heating in log_uniform(1e-10, 1e-2),
        k0 in log_uniform(1e-4, 1e2),
        beta in -0.5f64..3.5,
        t_base in log_uniform(1e-3, 1.0),
        q_abs in prop_oneof![Just(0.0), log_uniform(1e-12, 1e-3)],
    ) {
        let kk = k(k0, beta);
        let sphere = sphere_center_temperature(length, heating, &kk, t_base).unwrap();
        prop_assert!(rel(sphere, oracle::sphere_center_ode(length, heating, k0, beta, t_base)) <= 1e-6);
        let mid = sphere_profile(length, heating, &kk, t_base, 0.5 * length).unwrap();
        prop_assert!(rel(mid, oracle::sphere_ode_at(length, heating, k0, beta, t_base, 0.5 * length)) <= 1e-6);
        let rod = rod_with_absorber_far_temperature(length, heating, q_abs, &kk, t_base).unwrap();
        prop_assert!(rel(rod, oracle::rod_far_ode(length, heating, q_abs, k0, beta, t_base)) <= 1e-6);
    }

    #[test]
    fn profiles_are_monotone(
        length in log_uniform(1e-3, 2.0),
        heating in log_uniform(1e-10, 1e-2),
        k0 in log_uniform(1e-4, 1e2),
        beta in -0.5f64..3.5,
        t_base in 0.0f64..0.1,
        q_abs in 0.0f64..1e-4,
        x in 0.0f64..1.0,
        y in 0.0f64..1.0,
    ) {
        prop_assume!(x < y);
        let kk = k(k0, beta);
        let s = |f: f64| sphere_profile(length, heating, &kk, t_base, f * length).unwrap();
        let r = |f: f64| rod_profile(length, heating, q_abs, &kk, t_base, f * length).unwrap();
        prop_assert!(s(x) >= s(y));
        prop_assert!(r(x) <= r(y));
        prop_assert!(s(1.0) == t_base && r(0.0) == t_base);
    }

    #[test]
    fn zero_absorber_is_plain_rod(
        length in log_uniform(1e-3, 2.0),
        heating in log_uniform(1e-10, 1e-2),
        k0 in log_uniform(1e-4, 1e2),
        beta in -0.5f64..3.5,
        t_near in 0.0f64..0.1,
    ) {
        let kk = k(k0, beta);
        prop_assert_eq!(
            rod_with_absorber_far_temperature(length, heating, 0.0, &kk, t_near).unwrap(),
            rod_far_temperature(length, heating, &kk, t_near).unwrap()
        );
    }

    #[test]
    fn constant_conductivity_limits(
        length in log_uniform(1e-3, 2.0),
        heating in log_uniform(1e-10, 1e-2),
        k0 in log_uniform(1e-4, 1e2),
        t_base in 0.0f64..0.1,
        q_abs in 0.0f64..1e-4,
    ) {
        let kk = k(k0, 0.0);
        let sphere = t_base + heating * length * length / (6.0 * k0);
        let rod = t_base + (heating * length * length / 2.0 + q_abs * length) / k0;
        prop_assert!(rel(sphere_center_temperature(length, heating, &kk, t_base).unwrap(), sphere) <= 4.0 * f64::EPSILON);
        prop_assert!(rel(rod_with_absorber_far_temperature(length, heating, q_abs, &kk, t_base).unwrap(), rod) <= 4.0 * f64::EPSILON);
    }

    #[test]
    fn gaps_scale_as_powers(
        length in log_uniform(1e-3, 2.0),
        heating in log_uniform(1e-10, 1e-2),
        k0 in log_uniform(1e-4, 1e2),
        beta in -0.5f64..3.5,
    ) {
        let kk = k(k0, beta);
        let p = 1.0 / (1.0 + beta);
        let sphere = |r: f64, h: f64| sphere_center_temperature(r, h, &kk, 0.0).unwrap();
        let rod = |l: f64| rod_far_temperature(l, heating, &kk, 0.0).unwrap();
        prop_assert!(rel(sphere(2.0 * length, heating) / sphere(length, heating), 4f64.powf(p)) < 1e-12);
        prop_assert!(rel(sphere(length, 3.0 * heating) / sphere(length, heating), 3f64.powf(p)) < 1e-12);
        prop_assert!(rel(rod(length) / sphere(length, heating), 3f64.powf(p)) < 1e-12);
    }
}

fn material_strategy() -> impl Strategy<Value = Material> {
    (
        "[a-z][a-z0-9 ]{0,10}",
        log_uniform(0.01, 25.0),
        prop::option::of(log_uniform(10.0, 2e4)),
        prop::option::of((log_uniform(1e-6, 1e3), -0.9f64..4.0)),
        0.0f64..=1.0,
    )
        .prop_map(|(name, density, vs, cond, eps)| {
            let mut m = Material::new(name, density);
            m.sound_speed = vs;
            m.conductivity = cond.map(|(k0, b)| PowerLawConductivity::new(k0, b).unwrap());
            m.emissivity = eps;
            m
        })
}

proptest! {
    #[test]
    fn material_files_round_trip(materials in prop::collection::vec(material_strategy(), 1..6)) {
        let mut registry = Registry::empty();
        for m in materials {
            registry.insert(m).unwrap();
        }
        let parsed = Registry::parse(&registry.to_toml()).unwrap();
        let a: Vec<&Material> = registry.iter().collect();
        let b: Vec<&Material> = parsed.iter().collect();
        prop_assert_eq!(a, b);
    }
}
