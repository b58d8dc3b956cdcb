//! Bulk heating by collapse-model (CSL) noise.
//!
//! * [`spectrum`]: noise power spectra, phonon dispersion and the effective
//!   coupling `lambda_eff` obtained by averaging the spectrum over phonon
//!   frequencies.
//! * [`heating`]: heating rates from a coupling and coupling bounds from a
//!   heating budget.
//! * [`thermal`]: steady-state temperatures of heated spheres and rods in a
//!   cryostat.
//! * [`materials`]: builtin and user-supplied material records.
//! * [`reproduce`]: checks against the published estimates.
//!
//! All functions take and return SI values; [`units`] converts at the edges.

pub mod constants;
pub mod error;
pub mod heating;
pub mod materials;
pub mod quadrature;
pub mod reproduce;
pub mod roots;
pub mod spectrum;
pub mod table;
pub mod thermal;
pub mod units;

pub use constants::Constants;
pub use error::{Error, Result};
pub use heating::HeatingBudget;
pub use materials::{builtin_registry, load_materials, Material, Registry};
pub use spectrum::{Dispersion, NoiseSpectrum, QuadratureSettings};
pub use thermal::{PowerLawConductivity, SteadyStateResult, TransportEnv};
pub use units::{Dimension, Quantity, Unit};
