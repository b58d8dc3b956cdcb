//! Regression checks against the published estimates for collapse-noise
//! heating and the proposed sphere and rod experiments.

use crate::constants::Constants;
use crate::error::Result;
use crate::heating::{
    invert_bound, specific_heating_rate, volumetric_heating_from_budget, HeatingBudget,
};
use crate::materials::builtin_registry;
use crate::spectrum::{
    invert_gaussian_cutoff, lambda_eff, Dispersion, NoiseSpectrum, QuadratureSettings,
};
use crate::thermal::{
    q_sphere_surface, rod_far_temperature, sphere_center_temperature, TransportEnv,
};
use crate::units::{to_si, Quantity, Unit};

/// Coupling suggested by the cantilever noise excess, `10^-7.7` s^-1.
pub const LAMBDA_CANTILEVER: f64 = 1.995_262_314_968_878_6e-8;

/// Relative tolerance standing in for "exact": a few ulps.
pub const EXACT: f64 = 4.0 * f64::EPSILON;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub unit: &'static str,
    pub expected: f64,
    pub computed: f64,
    /// Relative tolerance.
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    fn new(
        name: &'static str,
        unit: &'static str,
        expected: f64,
        computed: f64,
        tolerance: f64,
    ) -> Self {
        let pass = computed.is_finite() && ((computed - expected) / expected).abs() <= tolerance;
        Check {
            name,
            unit,
            expected,
            computed,
            tolerance,
            pass,
        }
    }

    pub fn relative_error(&self) -> f64 {
        ((self.computed - self.expected) / self.expected).abs()
    }
}

/// Evaluates every check under `consts`.
pub fn run_checks(consts: &Constants) -> Result<Vec<Check>> {
    let r_c = consts.default_r_c;
    let registry = builtin_registry();
    let lead = registry.lookup("lead")?;
    let torlon = registry.lookup("torlon 4203")?;
    let torlon_k = torlon
        .conductivity
        .expect("builtin Torlon has a conductivity");
    let copper_vs = registry
        .lookup("copper")?
        .sound_speed
        .expect("builtin copper has a sound speed");
    let design = HeatingBudget::experiment_design();

    let mut checks = Vec::with_capacity(10);

    let rate = specific_heating_rate(consts, LAMBDA_CANTILEVER, r_c)?;
    checks.push(Check::new("specific-heating", "W/kg", 0.64e-8, rate, 0.10));

    let lab = invert_bound(consts, &HeatingBudget::cryostat_residual(), r_c)?;
    checks.push(Check::new("cryostat-bound", "s^-1", 3.1e-11, lab, 0.10));

    let earth = invert_bound(consts, &HeatingBudget::earth_unknown(), r_c)?;
    checks.push(Check::new("earth-bound", "s^-1", 1e-11, earth, 0.15));

    let copper = Dispersion::linear(copper_vs)?;
    let omega = copper.eval(1.0 / r_c)?;
    checks.push(Check::new(
        "copper-phonon-frequency",
        "s^-1",
        0.4e11,
        omega,
        0.02,
    ));

    let h_lead = volumetric_heating_from_budget(&design, lead.density())?;
    let flux = Quantity::new(q_sphere_surface(0.5, h_lead)?, Unit::WattPerSquareMeter)?
        .value_in(Unit::WattPerSquareCentimeter)?;
    checks.push(Check::new(
        "lead-sphere-flux",
        "W/cm^2",
        5.7e-13,
        flux,
        0.02,
    ));

    let env = TransportEnv::new(1.0, 0.02, to_si(1e-6, Unit::Millibar)?, 0.0)?;
    let per_mk = Quantity::new(env.gas_coefficient(), Unit::WattPerSquareMeter)?
        .value_in(Unit::WattPerSquareCentimeter)?
        * Unit::Millikelvin.si_factor();
    checks.push(Check::new(
        "gas-coefficient",
        "W cm^-2 mK^-1",
        4e-13,
        per_mk,
        EXACT,
    ));

    let h_torlon = volumetric_heating_from_budget(&design, torlon.density())?;
    let sphere_gap =
        sphere_center_temperature(0.5, h_torlon, &torlon_k, 0.0)? / Unit::Millikelvin.si_factor();
    checks.push(Check::new("torlon-sphere-gap", "mK", 6.1, sphere_gap, 0.02));

    let rod_gap =
        rod_far_temperature(0.5, h_torlon, &torlon_k, 0.0)? / Unit::Millikelvin.si_factor();
    checks.push(Check::new("torlon-rod-gap", "mK", 8.6, rod_gap, 0.02));

    let inversion = invert_gaussian_cutoff(LAMBDA_CANTILEVER, 1e-11, copper_vs, r_c)?;
    checks.push(Check::new(
        "cutoff-inversion",
        "1",
        4.5,
        inversion.ratio,
        0.02,
    ));

    let white = NoiseSpectrum::white(LAMBDA_CANTILEVER)?;
    let le = lambda_eff(&white, &copper, r_c, &QuadratureSettings::default())?;
    checks.push(Check::new(
        "white-noise-identity",
        "s^-1",
        LAMBDA_CANTILEVER,
        le,
        1e-8,
    ));

    Ok(checks)
}
