//! Noise power spectra, phonon dispersion, and the effective coupling
//! `lambda_eff` that governs phonon heating by a coloured collapse noise.
//!
//! For an isotropic dispersion the three-dimensional average
//!
//! ```text
//! lambda_eff = 2 / (3 pi^(3/2)) * Int d^3w exp(-w^2) w^2 lambda(omega_L(|w| / r_c))
//! ```
//!
//! collapses to the radial integral
//!
//! ```text
//! lambda_eff = 8 / (3 sqrt(pi)) * Int_0^inf dw w^4 exp(-w^2) lambda(omega_L(w / r_c))
//! ```
//!
//! which is what [`lambda_eff`] evaluates, truncated at `w_max`.

use std::f64::consts::PI;

use crate::error::{non_negative, positive, Error, Result};
use crate::quadrature::{self, Tolerance};
use crate::table::{parse_two_column, Table};

/// Frequency-dependent reduction rate `lambda(omega)`, in s^-1.
///
/// Spectra are defined for `omega >= 0` and mirrored, so evaluation is even
/// in `omega`.
#[derive(Debug, Clone, PartialEq)]
pub enum NoiseSpectrum {
    White {
        lambda: f64,
    },
    /// `lambda * exp(-omega^2 t_c^2)`.
    GaussianCutoff {
        lambda: f64,
        t_c: f64,
    },
    /// `lambda` below `omega_c`, zero above, `lambda / 2` at the edge.
    StepCutoff {
        lambda: f64,
        omega_c: f64,
    },
    /// Piecewise linear in `omega`; flat below the first point and zero above
    /// the last one.
    Tabulated(Table),
}

impl NoiseSpectrum {
    pub fn white(lambda: f64) -> Result<Self> {
        let s = NoiseSpectrum::White { lambda };
        s.validate()?;
        Ok(s)
    }

    pub fn gaussian(lambda: f64, t_c: f64) -> Result<Self> {
        let s = NoiseSpectrum::GaussianCutoff { lambda, t_c };
        s.validate()?;
        Ok(s)
    }

    pub fn step(lambda: f64, omega_c: f64) -> Result<Self> {
        let s = NoiseSpectrum::StepCutoff { lambda, omega_c };
        s.validate()?;
        Ok(s)
    }

    /// `(omega [s^-1], lambda [s^-1])` pairs, strictly increasing in omega.
    pub fn tabulated(points: &[(f64, f64)]) -> Result<Self> {
        Table::new(points, 1).map(NoiseSpectrum::Tabulated)
    }

    /// Reads a two-column `omega lambda` table.
    pub fn from_table_text(text: &str) -> Result<Self> {
        NoiseSpectrum::tabulated(&parse_two_column(text)?)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            NoiseSpectrum::White { lambda } => {
                non_negative("lambda", lambda)?;
            }
            NoiseSpectrum::GaussianCutoff { lambda, t_c } => {
                non_negative("lambda", lambda)?;
                non_negative("t_c", t_c)?;
            }
            NoiseSpectrum::StepCutoff { lambda, omega_c } => {
                non_negative("lambda", lambda)?;
                non_negative("omega_c", omega_c)?;
            }
            NoiseSpectrum::Tabulated(_) => {}
        }
        Ok(())
    }

    pub fn eval(&self, omega: f64) -> f64 {
        let w = omega.abs();
        match self {
            NoiseSpectrum::White { lambda } => *lambda,
            NoiseSpectrum::GaussianCutoff { lambda, t_c } => {
                let x = w * t_c;
                lambda * (-x * x).exp()
            }
            NoiseSpectrum::StepCutoff { lambda, omega_c } => {
                if w < *omega_c {
                    *lambda
                } else if w == *omega_c {
                    0.5 * lambda
                } else {
                    0.0
                }
            }
            NoiseSpectrum::Tabulated(table) => {
                let (first_w, first_l) = table.first();
                let (last_w, _) = table.last();
                if w <= first_w {
                    first_l
                } else if w > last_w {
                    0.0
                } else {
                    table.interpolate(w).max(0.0)
                }
            }
        }
    }

    /// Frequency at which the spectrum drops discontinuously, if any.
    fn jump(&self) -> Option<f64> {
        match self {
            NoiseSpectrum::StepCutoff { lambda, omega_c } if *lambda > 0.0 => Some(*omega_c),
            NoiseSpectrum::Tabulated(table) if table.last().1 > 0.0 => Some(table.last().0),
            _ => None,
        }
    }

    /// Least upper bound of `eval` over all frequencies.
    pub fn sup(&self) -> f64 {
        match self {
            NoiseSpectrum::White { lambda }
            | NoiseSpectrum::GaussianCutoff { lambda, .. }
            | NoiseSpectrum::StepCutoff { lambda, .. } => *lambda,
            NoiseSpectrum::Tabulated(table) => table.max_value(),
        }
    }
}

/// Longitudinal acoustic phonon dispersion `omega_L(q)`.
#[derive(Debug, Clone, PartialEq)]
pub enum Dispersion {
    /// `omega = v_s q`, sound speed in m/s.
    Linear { v_s: f64 },
    /// `(q [m^-1], omega [s^-1])` pairs, interpolated linearly, extrapolated
    /// from the end segments and clamped at zero.
    Tabulated(Table),
}

impl Dispersion {
    pub fn linear(v_s: f64) -> Result<Self> {
        positive("v_s", v_s)?;
        Ok(Dispersion::Linear { v_s })
    }

    pub fn tabulated(points: &[(f64, f64)]) -> Result<Self> {
        let table = Table::new(points, 2)?;
        if !table.is_nondecreasing() {
            return Err(Error::InvalidTable {
                index: 0,
                reason: "dispersion frequencies must be nondecreasing",
            });
        }
        Ok(Dispersion::Tabulated(table))
    }

    /// Reads a two-column `q omega` table.
    pub fn from_table_text(text: &str) -> Result<Self> {
        Dispersion::tabulated(&parse_two_column(text)?)
    }

    pub fn eval(&self, q: f64) -> Result<f64> {
        non_negative("q", q)?;
        Ok(self.omega_at(q))
    }

    /// Smallest wavenumber at which the dispersion reaches `omega`.
    fn wavenumber_for(&self, omega: f64) -> Option<f64> {
        match self {
            Dispersion::Linear { v_s } => Some(omega / v_s),
            Dispersion::Tabulated(table) => {
                let mut hi = table.last().0.max(1.0);
                let mut doublings = 0;
                while self.omega_at(hi) < omega {
                    hi *= 2.0;
                    doublings += 1;
                    if doublings > 1100 {
                        return None;
                    }
                }
                let mut lo = 0.0;
                for _ in 0..200 {
                    let mid = 0.5 * (lo + hi);
                    if self.omega_at(mid) < omega {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                Some(hi)
            }
        }
    }

    fn omega_at(&self, q: f64) -> f64 {
        match self {
            Dispersion::Linear { v_s } => v_s * q,
            Dispersion::Tabulated(table) => table.interpolate(q).max(0.0),
        }
    }
}

/// Numerical settings for [`lambda_eff`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSettings {
    /// Upper limit of the radial integral in units of `1 / r_c`.
    pub w_max: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureSettings {
    fn default() -> Self {
        QuadratureSettings {
            w_max: 8.0,
            rel_tol: 1e-8,
            max_subdivisions: 4000,
        }
    }
}

impl QuadratureSettings {
    pub fn validate(&self) -> Result<()> {
        positive("w_max", self.w_max)?;
        positive("rel_tol", self.rel_tol)?;
        if self.max_subdivisions == 0 {
            return Err(Error::Domain {
                name: "max_subdivisions",
                value: 0.0,
                reason: "must be positive",
            });
        }
        Ok(())
    }
}

const INITIAL_PANELS: usize = 16;

/// Effective coupling for bulk heating, s^-1.
pub fn lambda_eff(
    spectrum: &NoiseSpectrum,
    dispersion: &Dispersion,
    r_c: f64,
    settings: &QuadratureSettings,
) -> Result<f64> {
    positive("r_c", r_c)?;
    settings.validate()?;
    spectrum.validate()?;
    if let Dispersion::Linear { v_s } = dispersion {
        positive("v_s", *v_s)?;
    }

    let integrand = |w: f64| {
        let omega = dispersion.omega_at(w / r_c);
        w.powi(4) * (-w * w).exp() * spectrum.eval(omega)
    };
    let tol = Tolerance {
        relative: settings.rel_tol,
        absolute: 0.0,
        max_subdivisions: settings.max_subdivisions,
    };
    // The error estimate cannot see a jump inside a panel, so split there.
    let split = spectrum
        .jump()
        .and_then(|omega| dispersion.wavenumber_for(omega))
        .map(|q| q * r_c)
        .filter(|&w| w > 0.0 && w < settings.w_max);
    let integral = match split {
        Some(w) => {
            quadrature::integrate(integrand, 0.0, w, INITIAL_PANELS, tol)?.value
                + quadrature::integrate(integrand, w, settings.w_max, INITIAL_PANELS, tol)?.value
        }
        None => quadrature::integrate(integrand, 0.0, settings.w_max, INITIAL_PANELS, tol)?.value,
    };
    let value = 8.0 / (3.0 * PI.sqrt()) * integral;
    Ok(value.clamp(0.0, spectrum.sup()))
}

/// `lambda / (1 + (v_s t_c / r_c)^2)^(5/2)`: the Gaussian-cutoff spectrum
/// with a linear dispersion integrated in closed form.
pub fn lambda_eff_gaussian_closed_form(lambda: f64, v_s: f64, t_c: f64, r_c: f64) -> Result<f64> {
    non_negative("lambda", lambda)?;
    positive("v_s", v_s)?;
    non_negative("t_c", t_c)?;
    positive("r_c", r_c)?;
    let c = v_s * t_c / r_c;
    Ok(lambda * (1.0 + c * c).powf(-2.5))
}

/// Cutoff needed to bring a white coupling down to a bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CutoffInversion {
    /// `c = v_s t_c / r_c`.
    pub ratio: f64,
    /// Correlation time, s.
    pub t_c: f64,
}

/// Smallest Gaussian correlation time for which `lambda_eff <= lambda_eff_max`.
pub fn invert_gaussian_cutoff(
    lambda: f64,
    lambda_eff_max: f64,
    v_s: f64,
    r_c: f64,
) -> Result<CutoffInversion> {
    positive("lambda_eff_max", lambda_eff_max)?;
    positive("v_s", v_s)?;
    positive("r_c", r_c)?;
    if !lambda.is_finite() || lambda_eff_max > lambda {
        return Err(Error::Domain {
            name: "lambda_eff_max",
            value: lambda_eff_max,
            reason: "exceeds lambda; a cutoff cannot raise the effective coupling",
        });
    }
    let ratio = ((lambda / lambda_eff_max).powf(0.4) - 1.0).max(0.0).sqrt();
    Ok(CutoffInversion {
        ratio,
        t_c: ratio * r_c / v_s,
    })
}

/// Noise spectral density `gamma = 8 pi^(3/2) r_c^3 lambda`, m^3 s^-1.
pub fn gamma_from_lambda(lambda_value: f64, r_c: f64) -> Result<f64> {
    positive("r_c", r_c)?;
    Ok(8.0 * PI.powf(1.5) * r_c.powi(3) * lambda_value)
}
