//! Steady-state heat transport for a uniformly heated sphere or rod.
//!
//! Two pieces: the surface balance between the heat escaping a sphere and the
//! radiative plus residual-gas transport to the cryostat walls, and the
//! interior temperature profiles for a power-law conductivity
//! `k(T) = k0 (T/K)^beta`, for which `Int k dT` has the closed form
//! `k0 T^(1+beta) / (1+beta)`.
//!
//! Units are SI throughout: m, K, W/m^3, W/m^2, Pa.

use crate::constants::{GAS_CONDUCTION_COEFF, STEFAN_BOLTZMANN_COEFF};
use crate::error::{non_negative, positive, unit_interval, Error, Result};
use crate::roots::{grow_bracket, solve_bracketed, RootSettings};
use crate::units::Unit;

/// `k(T) = k0_hat * (T / 1 K)^beta` in W/(m K).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerLawConductivity {
    k0_hat: f64,
    beta: f64,
}

impl PowerLawConductivity {
    /// `k0_hat` in W/m; `beta > -1`.
    pub fn new(k0_hat: f64, beta: f64) -> Result<Self> {
        positive("k0_hat", k0_hat)?;
        if !beta.is_finite() || beta <= -1.0 {
            return Err(Error::Domain {
                name: "beta",
                value: beta,
                reason: "must be finite and greater than -1",
            });
        }
        Ok(PowerLawConductivity { k0_hat, beta })
    }

    pub fn k0_hat(&self) -> f64 {
        self.k0_hat
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn at(&self, temperature: f64) -> f64 {
        self.k0_hat * temperature.powf(self.beta)
    }

    /// Temperature reached from `base` after conducting through a
    /// conductivity integral `Int k dT = integral` (W/m):
    /// `(base^(1+beta) + (1+beta) integral / k0)^(1/(1+beta))`.
    fn raise(&self, base: f64, integral: f64) -> f64 {
        if integral == 0.0 {
            return base;
        }
        let p = 1.0 + self.beta;
        (base.powf(p) + p * integral / self.k0_hat).powf(1.0 / p)
    }
}

/// Cryostat surroundings of the heated body.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransportEnv {
    emissivity: f64,
    accommodation: f64,
    /// Pa.
    pressure: f64,
    /// K.
    wall_temperature: f64,
}

impl TransportEnv {
    /// `pressure` in Pa, `wall_temperature` in K.
    pub fn new(
        emissivity: f64,
        accommodation: f64,
        pressure: f64,
        wall_temperature: f64,
    ) -> Result<Self> {
        Ok(TransportEnv {
            emissivity: unit_interval("emissivity", emissivity)?,
            accommodation: unit_interval("accommodation", accommodation)?,
            pressure: non_negative("pressure", pressure)?,
            wall_temperature: non_negative("wall_temperature", wall_temperature)?,
        })
    }

    pub fn emissivity(&self) -> f64 {
        self.emissivity
    }

    pub fn accommodation(&self) -> f64 {
        self.accommodation
    }

    pub fn pressure(&self) -> f64 {
        self.pressure
    }

    pub fn wall_temperature(&self) -> f64 {
        self.wall_temperature
    }

    /// Radiative coefficient `sigma * emissivity`, W m^-2 K^-4.
    pub fn radiative_coefficient(&self) -> f64 {
        STEFAN_BOLTZMANN_COEFF * Unit::WattPerSquareCentimeter.si_factor() * self.emissivity
    }

    /// Gas conduction coefficient `0.02 a P[mbar]` converted to W m^-2 K^-1.
    pub fn gas_coefficient(&self) -> f64 {
        let pressure_mbar = self.pressure / Unit::Millibar.si_factor();
        GAS_CONDUCTION_COEFF
            * self.accommodation
            * pressure_mbar
            * Unit::WattPerSquareCentimeter.si_factor()
    }

    fn has_channel(&self) -> bool {
        self.radiative_coefficient() > 0.0 || self.gas_coefficient() > 0.0
    }
}

/// Temperatures and fluxes of a solved steady state.
///
/// For a sphere: surface `T1` and center `T_c`, with the flux leaving unit
/// surface area. For a rod: far end and near (heat sunk) end, with the flux
/// entering the sink.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SteadyStateResult {
    pub surface_or_far_temperature: f64,
    pub center_or_near_temperature: f64,
    /// W/m^2.
    pub flux: f64,
    /// Balance residual of the surface solve, W/m^2; zero for closed forms.
    pub residual: f64,
}

/// Outcome of [`solve_surface_temperature`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceBalance {
    pub surface_temperature: f64,
    pub wall_temperature: f64,
    pub flux: f64,
    pub residual: f64,
    pub iterations: usize,
}

/// Heat leaving unit surface area of a uniformly heated sphere, `R H / 3`.
pub fn q_sphere_surface(radius: f64, heating: f64) -> Result<f64> {
    positive("radius", radius)?;
    non_negative("heating", heating)?;
    Ok(radius * heating / 3.0)
}

/// Net radiative plus gas transport per unit area from a surface at `t1` to
/// the walls, W/m^2.
pub fn q_transport(t1: f64, env: &TransportEnv) -> Result<f64> {
    non_negative("t1", t1)?;
    Ok(transport(t1, env))
}

fn transport(t1: f64, env: &TransportEnv) -> f64 {
    let t2 = env.wall_temperature;
    let quartic = (t1 + t2) * (t1 * t1 + t2 * t2);
    (t1 - t2) * (env.radiative_coefficient() * quartic + env.gas_coefficient())
}

/// Transport as a function of the rise `delta = T1 - T2`, free of the
/// cancellation in `T1^4 - T2^4` when the rise is small.
fn transport_rise(delta: f64, env: &TransportEnv) -> f64 {
    let t2 = env.wall_temperature;
    let quartic = 4.0 * t2.powi(3) + delta * (6.0 * t2 * t2 + delta * (4.0 * t2 + delta));
    delta * (env.radiative_coefficient() * quartic + env.gas_coefficient())
}

/// Default relative balance tolerance of the surface solve.
pub const SURFACE_TOLERANCE: f64 = 1e-10;

const INITIAL_BRACKET: f64 = 1e-3;

/// Surface temperature at which transport to the walls carries off the heat
/// generated in the sphere. `rel_tol` bounds the residual relative to the flux.
pub fn solve_surface_temperature(
    radius: f64,
    heating: f64,
    env: &TransportEnv,
    rel_tol: f64,
) -> Result<SurfaceBalance> {
    positive("rel_tol", rel_tol)?;
    let flux = q_sphere_surface(radius, heating)?;
    let t2 = env.wall_temperature;
    if flux == 0.0 {
        return Ok(SurfaceBalance {
            surface_temperature: t2,
            wall_temperature: t2,
            flux,
            residual: 0.0,
            iterations: 0,
        });
    }
    if !env.has_channel() {
        return Err(Error::Unboundable { flux });
    }

    let balance = |delta: f64| transport_rise(delta, env) - flux;
    let settings = RootSettings {
        f_tol: rel_tol * flux,
        ..Default::default()
    };
    let (lo, hi) = grow_bracket(&balance, 0.0, INITIAL_BRACKET, settings.max_expansions)?;
    let root = solve_bracketed(&balance, lo, hi, &settings)?;
    Ok(SurfaceBalance {
        surface_temperature: t2 + root.x,
        wall_temperature: t2,
        flux,
        residual: root.residual,
        iterations: root.iterations,
    })
}

/// Center temperature of a sphere with surface temperature `t1`.
pub fn sphere_center_temperature(
    radius: f64,
    heating: f64,
    k: &PowerLawConductivity,
    t1: f64,
) -> Result<f64> {
    sphere_profile(radius, heating, k, t1, 0.0)
}

/// Temperature at distance `r` from the center, from `-k(T) dT/dr = r H / 3`.
pub fn sphere_profile(
    radius: f64,
    heating: f64,
    k: &PowerLawConductivity,
    t1: f64,
    r: f64,
) -> Result<f64> {
    positive("radius", radius)?;
    non_negative("heating", heating)?;
    non_negative("t1", t1)?;
    non_negative("r", r)?;
    if r > radius {
        return Err(Error::Domain {
            name: "r",
            value: r,
            reason: "must not exceed the radius",
        });
    }
    let integral = heating * (radius * radius - r * r) / 6.0;
    Ok(k.raise(t1, integral))
}

/// Interior and surface temperatures of a sphere in the given surroundings.
pub fn sphere_steady_state(
    radius: f64,
    heating: f64,
    k: &PowerLawConductivity,
    env: &TransportEnv,
    rel_tol: f64,
) -> Result<SteadyStateResult> {
    let surface = solve_surface_temperature(radius, heating, env, rel_tol)?;
    let center = sphere_center_temperature(radius, heating, k, surface.surface_temperature)?;
    Ok(SteadyStateResult {
        surface_or_far_temperature: surface.surface_temperature,
        center_or_near_temperature: center,
        flux: surface.flux,
        residual: surface.residual,
    })
}

/// Far-end temperature of a rod of length `length` heat sunk at `t_near`.
pub fn rod_far_temperature(
    length: f64,
    heating: f64,
    k: &PowerLawConductivity,
    t_near: f64,
) -> Result<f64> {
    rod_with_absorber_far_temperature(length, heating, 0.0, k, t_near)
}

/// Far-end temperature with an extra flux `q_abs` (W/m^2) entering at the far
/// end, from `k(T) dT/dz = (L - z) H + q_abs`.
pub fn rod_with_absorber_far_temperature(
    length: f64,
    heating: f64,
    q_abs: f64,
    k: &PowerLawConductivity,
    t_near: f64,
) -> Result<f64> {
    positive("length", length)?;
    rod_profile(length, heating, q_abs, k, t_near, length)
}

/// Temperature at distance `z` from the heat-sunk end.
pub fn rod_profile(
    length: f64,
    heating: f64,
    q_abs: f64,
    k: &PowerLawConductivity,
    t_near: f64,
    z: f64,
) -> Result<f64> {
    positive("length", length)?;
    non_negative("heating", heating)?;
    non_negative("q_abs", q_abs)?;
    non_negative("t_near", t_near)?;
    non_negative("z", z)?;
    if z > length {
        return Err(Error::Domain {
            name: "z",
            value: z,
            reason: "must not exceed the rod length",
        });
    }
    let integral = if z == length {
        length * length * heating / 2.0 + q_abs * length
    } else {
        heating * (length * z - 0.5 * z * z) + q_abs * z
    };
    Ok(k.raise(t_near, integral))
}

/// Steady state of a rod with an absorber at its far end.
pub fn rod_steady_state(
    length: f64,
    heating: f64,
    q_abs: f64,
    k: &PowerLawConductivity,
    t_near: f64,
) -> Result<SteadyStateResult> {
    let far = rod_with_absorber_far_temperature(length, heating, q_abs, k, t_near)?;
    Ok(SteadyStateResult {
        surface_or_far_temperature: far,
        center_or_near_temperature: t_near,
        flux: length * heating + q_abs,
        residual: 0.0,
    })
}

/// Flux into the rod from an absorber whose heat all leaves through the rod
/// cross-section: `H_abs V_abs / A_rod`.
pub fn absorber_flux(absorber_heating: f64, absorber_volume: f64, rod_area: f64) -> Result<f64> {
    non_negative("absorber_heating", absorber_heating)?;
    non_negative("absorber_volume", absorber_volume)?;
    positive("rod_area", rod_area)?;
    Ok(absorber_heating * absorber_volume / rod_area)
}
