use rayon::prelude::*;

use crate::args::*;
use crate::commands::{self, Context};
use crate::output::{Cell, Table};
use crate::CliError;

/// Evenly spaced sample points, validated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub scale: Scale,
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl SweepSpec {
    pub fn new(scale: Scale, start: f64, stop: f64, count: usize) -> Result<Self, CliError> {
        if !(start.is_finite() && stop.is_finite()) || start >= stop {
            return Err(CliError::Usage(format!(
                "sweep needs start < stop, got {start} and {stop}"
            )));
        }
        if scale == Scale::Log && start <= 0.0 {
            return Err(CliError::Usage(format!(
                "log sweep needs start > 0, got {start}"
            )));
        }
        if count < 2 {
            return Err(CliError::Usage(format!(
                "sweep needs count >= 2, got {count}"
            )));
        }
        Ok(SweepSpec {
            scale,
            start,
            stop,
            count,
        })
    }

    pub fn values(&self) -> Vec<f64> {
        let n = (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                if i == 0 {
                    return self.start;
                }
                if i + 1 == self.count {
                    return self.stop;
                }
                let t = i as f64 / n;
                match self.scale {
                    Scale::Linear => self.start + t * (self.stop - self.start),
                    Scale::Log => (self.start.ln() + t * (self.stop / self.start).ln()).exp(),
                }
            })
            .collect()
    }
}

fn default_target(p: SweepParameter) -> SweepTarget {
    match p {
        SweepParameter::Tc | SweepParameter::Vs | SweepParameter::Rc | SweepParameter::Lambda => {
            SweepTarget::LambdaEff
        }
        SweepParameter::PressureMbar | SweepParameter::Radius => SweepTarget::Sphere,
        SweepParameter::Length => SweepTarget::Rod,
        SweepParameter::Budget => SweepTarget::Bound,
    }
}

fn column(p: SweepParameter) -> &'static str {
    match p {
        SweepParameter::Tc => "tc_s",
        SweepParameter::Vs => "vs_m_per_s",
        SweepParameter::Rc => "rc_m",
        SweepParameter::Lambda => "lambda_per_s",
        SweepParameter::PressureMbar => "pressure_mbar",
        SweepParameter::Radius => "radius_m",
        SweepParameter::Length => "length_m",
        SweepParameter::Budget => "budget_W_per_kg",
    }
}

fn applies(p: SweepParameter, target: SweepTarget) -> bool {
    use SweepParameter::*;
    match target {
        SweepTarget::LambdaEff => matches!(p, Tc | Vs | Rc | Lambda),
        SweepTarget::Bound => matches!(p, Budget | Rc | Lambda | Vs),
        SweepTarget::Sphere => matches!(p, PressureMbar | Radius | Budget),
        SweepTarget::Rod => matches!(p, Length | Budget),
    }
}

fn with_value(args: &SweepArgs, v: f64) -> SweepArgs {
    let mut a = args.clone();
    match a.parameter {
        SweepParameter::Tc => {
            if a.spectrum.spectrum == SpectrumKind::White {
                a.spectrum.spectrum = SpectrumKind::Gaussian;
            }
            a.spectrum.tc = Some(v);
        }
        SweepParameter::Vs => a.dispersion.vs = Some(v),
        SweepParameter::Rc => {
            a.rc.rc = Some(v);
            a.rc.rc_cm = None;
        }
        SweepParameter::Lambda => a.spectrum.lambda = Some(v),
        SweepParameter::PressureMbar => a.env.pressure_mbar = v,
        SweepParameter::Radius => a.radius = Some(v),
        SweepParameter::Length => a.length = Some(v),
        SweepParameter::Budget => {
            a.budget.budget = Some(v);
            a.budget.preset = None;
        }
    }
    a
}

fn material(a: &SweepArgs, target: &str) -> Result<String, CliError> {
    a.material
        .clone()
        .ok_or_else(|| CliError::Usage(format!("a {target} sweep requires --material")))
}

fn point(a: &SweepArgs, target: SweepTarget, ctx: &Context) -> Result<Vec<Cell>, CliError> {
    match target {
        SweepTarget::LambdaEff => commands::lambda_eff_row(
            &LambdaEffArgs {
                spectrum: a.spectrum.clone(),
                dispersion: a.dispersion.clone(),
                rc: a.rc.clone(),
                material: a.material.clone(),
            },
            ctx,
        ),
        SweepTarget::Bound => commands::bound_row(
            &BoundArgs {
                budget: a.budget.clone(),
                rc: a.rc.clone(),
                lambda: a.spectrum.lambda,
                vs: a.dispersion.vs,
                material: if a.dispersion.vs.is_some() {
                    None
                } else {
                    a.material.clone()
                },
            },
            ctx,
        ),
        SweepTarget::Sphere => commands::sphere_row(
            &SphereArgs {
                material: material(a, "sphere")?,
                radius: a.radius,
                radius_cm: None,
                budget: a.budget.clone(),
                t1: a.t1,
                t1_mk: None,
                env: a.env.clone(),
            },
            ctx,
        ),
        SweepTarget::Rod => commands::rod_row(
            &RodArgs {
                material: material(a, "rod")?,
                length: a.length,
                length_cm: None,
                budget: a.budget.clone(),
                t_near: a.t_near,
                t_near_mk: None,
                absorber: AbsorberArgs {
                    q_abs: a.q_abs,
                    absorber_material: None,
                    absorber_volume_cm3: None,
                    rod_area_cm2: None,
                },
            },
            ctx,
        ),
    }
}

/// Evaluates the target at every sample point, in parallel, keeping order.
pub fn run(args: &SweepArgs, ctx: &Context) -> Result<Table, CliError> {
    let spec = SweepSpec::new(args.scale, args.start, args.stop, args.count)?;
    let target = args
        .target
        .unwrap_or_else(|| default_target(args.parameter));
    if !applies(args.parameter, target) {
        return Err(CliError::Usage(format!(
            "parameter '{}' does not enter the {:?} model",
            column(args.parameter),
            target
        )));
    }
    let model_headers = match target {
        SweepTarget::LambdaEff => commands::LAMBDA_EFF_HEADERS,
        SweepTarget::Bound => commands::BOUND_HEADERS,
        SweepTarget::Sphere => commands::SPHERE_HEADERS,
        SweepTarget::Rod => commands::ROD_HEADERS,
    };
    let rows: Vec<Result<Vec<Cell>, CliError>> = spec
        .values()
        .par_iter()
        .enumerate()
        .map(|(i, &v)| {
            let mut row = vec![Cell::Text(i.to_string()), Cell::Num(v)];
            row.extend(point(&with_value(args, v), target, ctx)?);
            Ok(row)
        })
        .collect();

    let mut headers = vec!["index", column(args.parameter)];
    headers.extend_from_slice(model_headers);
    let mut table = Table::new(headers);
    for row in rows {
        table.push(row?);
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endpoints_are_exact() {
        let v = SweepSpec::new(Scale::Log, 1e-13, 1e-9, 50)
            .unwrap()
            .values();
        assert_eq!(v.len(), 50);
        assert_eq!(v[0], 1e-13);
        assert_eq!(v[49], 1e-9);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
        let ratio = v[1] / v[0];
        assert!((v[30] / v[29] / ratio - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_ranges() {
        assert!(SweepSpec::new(Scale::Linear, 2.0, 1.0, 5).is_err());
        assert!(SweepSpec::new(Scale::Log, 0.0, 1.0, 5).is_err());
        assert!(SweepSpec::new(Scale::Linear, 0.0, 1.0, 1).is_err());
        assert!(SweepSpec::new(Scale::Linear, -1.0, 1.0, 3).is_ok());
    }
}
