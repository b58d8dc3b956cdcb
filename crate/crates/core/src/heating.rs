//! Heating rates from an effective coupling, and the inverse problem of
//! bounding the coupling from a measured heating budget.
//!
//! The energy gain per unit mass is `(3/4) lambda_eff hbar^2 / (r_c^2 m_N^2)`.

use crate::constants::Constants;
use crate::error::{non_negative, positive, Error, Result};

/// Power per unit mass that is available for unexplained heating.
#[derive(Debug, Clone, PartialEq)]
pub struct HeatingBudget {
    /// W/kg.
    pub specific_power: f64,
    pub label: String,
}

/// Named budgets.
///
/// * `cryostat-residual`: 1e-11 W/kg. Low temperature experiments reach
///   1e-10 W/kg, modelled to within about 1e-11 W/kg by radioactivity and muons.
/// * `earth-luminosity`: 6.4e-12 W/kg, Earth's luminosity to mass ratio
///   (de Pater and Lissauer, Planetary Sciences, table 6.3).
/// * `earth-unknown`: 3e-12 W/kg, the part of Earth's heat flow not accounted
///   for by primordial and radiogenic sources.
/// * `experiment-design`: 3e-12 W/kg, the budget used to size the proposed
///   sphere and rod experiments (`H = 3e-15 rho` W/cm^3 with rho in g/cm^3).
pub const PRESETS: [(&str, f64, &str); 4] = [
    ("cryostat-residual", 1e-11, "cryostat residual heating"),
    (
        "earth-luminosity",
        6.4e-12,
        "Earth luminosity to mass ratio",
    ),
    (
        "earth-unknown",
        3e-12,
        "Earth energy balance, unknown sources",
    ),
    ("experiment-design", 3e-12, "experiment design budget"),
];

impl HeatingBudget {
    pub fn new(specific_power: f64, label: impl Into<String>) -> Result<Self> {
        non_negative("specific_power", specific_power)?;
        Ok(HeatingBudget {
            specific_power,
            label: label.into(),
        })
    }

    pub fn preset(name: &str) -> Result<Self> {
        PRESETS
            .iter()
            .find(|(key, _, _)| key.eq_ignore_ascii_case(name))
            .map(|&(_, power, label)| HeatingBudget {
                specific_power: power,
                label: label.to_string(),
            })
            .ok_or_else(|| Error::Unknown {
                kind: "budget preset",
                name: name.to_string(),
            })
    }

    pub fn cryostat_residual() -> Self {
        Self::preset("cryostat-residual").expect("builtin preset")
    }

    pub fn earth_unknown() -> Self {
        Self::preset("earth-unknown").expect("builtin preset")
    }

    pub fn experiment_design() -> Self {
        Self::preset("experiment-design").expect("builtin preset")
    }
}

/// `(3/4) hbar^2 / (r_c^2 m_N^2)`, W/kg per unit coupling (W kg^-1 s).
fn heating_per_unit_coupling(consts: &Constants, r_c: f64) -> Result<f64> {
    positive("r_c", r_c)?;
    let x = consts.hbar / (r_c * consts.nucleon_mass);
    Ok(0.75 * x * x)
}

/// Energy gain rate per unit mass, W/kg.
pub fn specific_heating_rate(consts: &Constants, lambda_eff: f64, r_c: f64) -> Result<f64> {
    non_negative("lambda_eff", lambda_eff)?;
    Ok(lambda_eff * heating_per_unit_coupling(consts, r_c)?)
}

/// Energy gain rate of a body of mass `mass` (kg), W.
pub fn total_heating_rate(consts: &Constants, lambda_eff: f64, r_c: f64, mass: f64) -> Result<f64> {
    non_negative("mass", mass)?;
    Ok(mass * specific_heating_rate(consts, lambda_eff, r_c)?)
}

/// Heating per unit volume of a solid of density `rho` (kg/m^3), W/m^3.
pub fn volumetric_heating(consts: &Constants, lambda_eff: f64, r_c: f64, rho: f64) -> Result<f64> {
    positive("rho", rho)?;
    Ok(rho * specific_heating_rate(consts, lambda_eff, r_c)?)
}

/// Heating per unit volume when the whole budget is spent, W/m^3.
pub fn volumetric_heating_from_budget(budget: &HeatingBudget, rho: f64) -> Result<f64> {
    positive("rho", rho)?;
    Ok(rho * non_negative("specific_power", budget.specific_power)?)
}

/// Largest `lambda_eff` (s^-1) compatible with the budget.
pub fn invert_bound(consts: &Constants, budget: &HeatingBudget, r_c: f64) -> Result<f64> {
    non_negative("specific_power", budget.specific_power)?;
    Ok(budget.specific_power / heating_per_unit_coupling(consts, r_c)?)
}
