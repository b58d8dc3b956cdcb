//! Physical constants and the empirical cryostat transport coefficients.

/// Reduced Planck constant, J s.
pub const HBAR: f64 = 1.054_571_817e-34;

/// Nucleon mass, kg (proton mass rounded to six figures).
pub const NUCLEON_MASS: f64 = 1.672_62e-27;

/// Radiative transport coefficient in W cm^-2 K^-4, as printed for the
/// Stefan-Boltzmann term of the cryostat transport law.
pub const STEFAN_BOLTZMANN_COEFF: f64 = 5.67e-12;

/// Gas conduction coefficient in W cm^-2 mbar^-1 K^-1.
pub const GAS_CONDUCTION_COEFF: f64 = 0.02;

/// Conventional noise correlation length, cm.
pub const DEFAULT_R_C_CM: f64 = 1e-5;

/// Conventional noise correlation length, m.
pub const DEFAULT_R_C: f64 = 1e-7;

/// MeV per joule.
pub const MEV_PER_JOULE: f64 = 1.0 / crate::units::JOULES_PER_MEV;

/// Constants that enter the heating formulas.
///
/// Kept as a value rather than bare `const`s so that checks can be re-run
/// under perturbed constants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    pub hbar: f64,
    pub nucleon_mass: f64,
    pub stefan_boltzmann_coeff: f64,
    pub gas_conduction_coeff: f64,
    pub mev_per_joule: f64,
    pub default_r_c: f64,
}

impl Default for Constants {
    fn default() -> Self {
        Constants {
            hbar: HBAR,
            nucleon_mass: NUCLEON_MASS,
            stefan_boltzmann_coeff: STEFAN_BOLTZMANN_COEFF,
            gas_conduction_coeff: GAS_CONDUCTION_COEFF,
            mev_per_joule: MEV_PER_JOULE,
            default_r_c: DEFAULT_R_C,
        }
    }
}
