use std::fs;
use std::io::Write;
use std::path::Path;

use csl_heat::constants::Constants;
use csl_heat::heating::{
    invert_bound, specific_heating_rate, total_heating_rate, volumetric_heating,
    volumetric_heating_from_budget,
};
use csl_heat::reproduce::run_checks;
use csl_heat::spectrum::{invert_gaussian_cutoff, lambda_eff, lambda_eff_gaussian_closed_form};
use csl_heat::thermal::{
    absorber_flux, q_sphere_surface, rod_with_absorber_far_temperature, solve_surface_temperature,
    sphere_center_temperature, SURFACE_TOLERANCE,
};
use csl_heat::units::{to_si, Quantity, Unit};
use csl_heat::{
    load_materials, Dispersion, HeatingBudget, Material, NoiseSpectrum, QuadratureSettings,
    Registry, TransportEnv,
};

use crate::args::*;
use crate::output::{Cell, Table};
use crate::sweep;
use crate::CliError;

/// Everything a command needs besides its own arguments.
pub struct Context {
    pub registry: Registry,
    pub quadrature: QuadratureSettings,
    pub solve_tol: f64,
    pub constants: Constants,
}

impl Context {
    pub fn from_cli(cli: &Cli) -> Result<Self, CliError> {
        let registry = match &cli.materials {
            Some(path) => load_materials(&read(path)?)?,
            None => csl_heat::builtin_registry(),
        };
        let mut quadrature = QuadratureSettings::default();
        let mut solve_tol = SURFACE_TOLERANCE;
        if let Some(tol) = cli.tol {
            if !(tol.is_finite() && tol > 0.0) {
                return Err(CliError::Usage(format!(
                    "--tol must be positive, got {tol}"
                )));
            }
            quadrature.rel_tol = tol;
            solve_tol = tol;
        }
        Ok(Context {
            registry,
            quadrature,
            solve_tol,
            constants: Constants::default(),
        })
    }

    fn material(&self, name: &str) -> Result<&Material, CliError> {
        Ok(self.registry.lookup(name)?)
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// Runs the parsed command, writing its output, and returns the exit status.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let ctx = Context::from_cli(cli)?;
    let mut status = 0;
    let table = match &cli.command {
        Command::LambdaEff(a) => single(LAMBDA_EFF_HEADERS, lambda_eff_row(a, &ctx)?),
        Command::Heating(a) => heating(a, &ctx)?,
        Command::Bound(a) => single(BOUND_HEADERS, bound_row(a, &ctx)?),
        Command::Sphere(a) => single(SPHERE_HEADERS, sphere_row(a, &ctx)?),
        Command::Rod(a) => single(ROD_HEADERS, rod_row(a, &ctx)?),
        Command::Sweep(a) => sweep::run(a, &ctx)?,
        Command::ReproducePaper(a) => {
            let (table, all_pass) = reproduce(a, &ctx)?;
            if !all_pass {
                status = 1;
            }
            table
        }
        Command::Materials(a) => {
            if a.toml {
                out.write_all(ctx.registry.to_toml().as_bytes())
                    .map_err(|e| CliError::Io(e.to_string()))?;
                return Ok(0);
            }
            materials(&ctx)
        }
    };
    table
        .emit(cli.csv.as_deref(), out)
        .map_err(|e| CliError::Io(e.to_string()))?;
    Ok(status)
}

fn single(headers: &[&'static str], row: Vec<Cell>) -> Table {
    let mut t = Table::new(headers.to_vec());
    t.push(row);
    t
}

pub fn resolve_rc(args: &RcArgs, ctx: &Context) -> Result<f64, CliError> {
    Ok(match (args.rc, args.rc_cm) {
        (Some(m), _) => m,
        (None, Some(cm)) => to_si(cm, Unit::Centimeter)?,
        (None, None) => ctx.constants.default_r_c,
    })
}

fn spectrum(args: &SpectrumArgs) -> Result<NoiseSpectrum, CliError> {
    let need = |v: Option<f64>, flag: &str| {
        v.ok_or_else(|| {
            CliError::Usage(
                format!("--spectrum {:?} requires {flag}", args.spectrum).to_lowercase(),
            )
        })
    };
    Ok(match args.spectrum {
        SpectrumKind::White => NoiseSpectrum::white(need(args.lambda, "--lambda")?)?,
        SpectrumKind::Gaussian => {
            NoiseSpectrum::gaussian(need(args.lambda, "--lambda")?, need(args.tc, "--tc")?)?
        }
        SpectrumKind::Step => NoiseSpectrum::step(
            need(args.lambda, "--lambda")?,
            need(args.omega_c, "--omega-c")?,
        )?,
        SpectrumKind::Table => {
            let path = args.spectrum_file.as_ref().ok_or_else(|| {
                CliError::Usage("--spectrum table requires --spectrum-file".into())
            })?;
            NoiseSpectrum::from_table_text(&read(path)?)?
        }
    })
}

fn sound_speed(vs: Option<f64>, material: Option<&Material>) -> Result<Option<f64>, CliError> {
    match (vs, material) {
        (Some(v), _) => Ok(Some(v)),
        (None, Some(m)) => m.sound_speed.map(Some).ok_or_else(|| {
            CliError::Usage(format!(
                "material '{}' has no sound speed; pass --vs",
                m.name
            ))
        }),
        (None, None) => Ok(None),
    }
}

fn dispersion(args: &DispersionArgs, material: Option<&Material>) -> Result<Dispersion, CliError> {
    if let Some(path) = &args.dispersion_file {
        return Ok(Dispersion::from_table_text(&read(path)?)?);
    }
    match sound_speed(args.vs, material)? {
        Some(v) => Ok(Dispersion::linear(v)?),
        None => Err(CliError::Usage(
            "a dispersion is required: pass --vs, --dispersion-file or --material".into(),
        )),
    }
}

fn budget(args: &BudgetArgs, default_preset: &str) -> Result<HeatingBudget, CliError> {
    Ok(match (&args.preset, args.budget) {
        (Some(name), _) => HeatingBudget::preset(name)?,
        (None, Some(w)) => HeatingBudget::new(w, "custom")?,
        (None, None) => HeatingBudget::preset(default_preset)?,
    })
}

pub const LAMBDA_EFF_HEADERS: &[&str] = &[
    "spectrum",
    "lambda_max_per_s",
    "r_c_m",
    "lambda_eff_per_s",
    "oracle_per_s",
    "relative_difference",
    "specific_heating_W_per_kg",
];

pub fn lambda_eff_row(a: &LambdaEffArgs, ctx: &Context) -> Result<Vec<Cell>, CliError> {
    let material = a.material.as_deref().map(|n| ctx.material(n)).transpose()?;
    let s = spectrum(&a.spectrum)?;
    let d = dispersion(&a.dispersion, material)?;
    let r_c = resolve_rc(&a.rc, ctx)?;
    let settings = QuadratureSettings {
        w_max: a.dispersion.w_max,
        ..ctx.quadrature
    };
    let value = lambda_eff(&s, &d, r_c, &settings)?;
    let oracle = match (&s, &d) {
        (NoiseSpectrum::White { lambda }, _) => Some(*lambda),
        (NoiseSpectrum::GaussianCutoff { lambda, t_c }, Dispersion::Linear { v_s }) => {
            Some(lambda_eff_gaussian_closed_form(*lambda, *v_s, *t_c, r_c)?)
        }
        _ => None,
    };
    let diff = oracle.map(|o| {
        if o == 0.0 {
            (value - o).abs()
        } else {
            ((value - o) / o).abs()
        }
    });
    let kind = format!("{:?}", a.spectrum.spectrum).to_lowercase();
    Ok(vec![
        kind.into(),
        s.sup().into(),
        r_c.into(),
        value.into(),
        oracle.into(),
        diff.into(),
        specific_heating_rate(&ctx.constants, value, r_c)?.into(),
    ])
}

const HEATING_HEADERS: &[&str] = &[
    "lambda_eff_per_s",
    "r_c_m",
    "specific_heating_W_per_kg",
    "specific_heating_MeV_per_g_s",
    "mass_kg",
    "total_heating_W",
    "density_g_per_cm3",
    "volumetric_heating_W_per_m3",
    "volumetric_heating_W_per_cm3",
];

fn heating(a: &HeatingArgs, ctx: &Context) -> Result<Table, CliError> {
    let c = &ctx.constants;
    let r_c = resolve_rc(&a.rc, ctx)?;
    let specific = specific_heating_rate(c, a.lambda_eff, r_c)?;
    let mev = Quantity::new(specific, Unit::WattPerKilogram)?.value_in(Unit::MevPerGramSecond)?;
    let total = a
        .mass
        .map(|m| total_heating_rate(c, a.lambda_eff, r_c, m))
        .transpose()?;
    let density = match (&a.material, a.density_g_cm3) {
        (Some(name), _) => Some(ctx.material(name)?.density_g_cm3),
        (None, d) => d,
    };
    let volumetric = density
        .map(|d| {
            volumetric_heating(
                c,
                a.lambda_eff,
                r_c,
                to_si(d, Unit::GramPerCubicCentimeter)?,
            )
        })
        .transpose()?;
    let per_cm3 = volumetric
        .map(|h| Quantity::new(h, Unit::WattPerCubicMeter)?.value_in(Unit::WattPerCubicCentimeter))
        .transpose()?;
    Ok(single(
        HEATING_HEADERS,
        vec![
            a.lambda_eff.into(),
            r_c.into(),
            specific.into(),
            mev.into(),
            a.mass.into(),
            total.into(),
            density.into(),
            volumetric.into(),
            per_cm3.into(),
        ],
    ))
}

pub const BOUND_HEADERS: &[&str] = &[
    "budget",
    "budget_W_per_kg",
    "r_c_m",
    "lambda_eff_max_per_s",
    "lambda_per_s",
    "v_s_m_per_s",
    "cutoff_ratio",
    "t_c_s",
];

pub fn bound_row(a: &BoundArgs, ctx: &Context) -> Result<Vec<Cell>, CliError> {
    let b = budget(&a.budget, "cryostat-residual")?;
    let r_c = resolve_rc(&a.rc, ctx)?;
    let max = invert_bound(&ctx.constants, &b, r_c)?;
    let material = a.material.as_deref().map(|n| ctx.material(n)).transpose()?;
    let v_s = sound_speed(a.vs, material)?;
    let inversion = match (a.lambda, v_s) {
        (Some(lambda), Some(v)) => Some(invert_gaussian_cutoff(lambda, max, v, r_c)?),
        (Some(_), None) => {
            return Err(CliError::Usage(
                "--lambda needs --vs or --material to invert the cutoff".into(),
            ))
        }
        _ => None,
    };
    Ok(vec![
        b.label.into(),
        b.specific_power.into(),
        r_c.into(),
        max.into(),
        a.lambda.into(),
        v_s.into(),
        inversion.map(|i| i.ratio).into(),
        inversion.map(|i| i.t_c).into(),
    ])
}

fn mk(kelvin: f64) -> f64 {
    kelvin / Unit::Millikelvin.si_factor()
}

fn either(si: Option<f64>, other: Option<f64>, unit: Unit) -> Result<Option<f64>, CliError> {
    Ok(match (si, other) {
        (Some(v), _) => Some(v),
        (None, Some(v)) => Some(to_si(v, unit)?),
        (None, None) => None,
    })
}

pub const SPHERE_HEADERS: &[&str] = &[
    "material",
    "radius_m",
    "heating_W_per_m3",
    "flux_W_per_m2",
    "flux_W_per_cm2",
    "t2_K",
    "t1_K",
    "surface_rise_mK",
    "tc_K",
    "gap_term_mK",
    "residual_W_per_m2",
];

pub fn sphere_row(a: &SphereArgs, ctx: &Context) -> Result<Vec<Cell>, CliError> {
    let m = ctx.material(&a.material)?;
    let radius = either(a.radius, a.radius_cm, Unit::Centimeter)?
        .ok_or_else(|| CliError::Usage("sphere requires --radius or --radius-cm".into()))?;
    let b = budget(&a.budget, "experiment-design")?;
    let h = volumetric_heating_from_budget(&b, m.density())?;
    let flux = q_sphere_surface(radius, h)?;

    let (t2, t1, residual) = match either(a.t1, a.t1_mk, Unit::Millikelvin)? {
        Some(t1) => (None, t1, None),
        None => {
            let env = transport_env(&a.env, m)?;
            let s = solve_surface_temperature(radius, h, &env, ctx.solve_tol)?;
            (
                Some(s.wall_temperature),
                s.surface_temperature,
                Some(s.residual),
            )
        }
    };
    let (tc, gap) = match &m.conductivity {
        Some(k) => (
            Some(sphere_center_temperature(radius, h, k, t1)?),
            Some(mk(sphere_center_temperature(radius, h, k, 0.0)?)),
        ),
        None => (None, None),
    };
    Ok(vec![
        m.name.clone().into(),
        radius.into(),
        h.into(),
        flux.into(),
        Quantity::new(flux, Unit::WattPerSquareMeter)?
            .value_in(Unit::WattPerSquareCentimeter)?
            .into(),
        t2.into(),
        t1.into(),
        t2.map(|t2| mk(t1 - t2)).into(),
        tc.into(),
        gap.into(),
        residual.into(),
    ])
}

fn transport_env(a: &EnvArgs, m: &Material) -> Result<TransportEnv, CliError> {
    let t2 = either(a.t2, a.t2_mk, Unit::Millikelvin)?.unwrap_or(0.0);
    Ok(TransportEnv::new(
        a.emissivity.unwrap_or(m.emissivity),
        a.accommodation,
        to_si(a.pressure_mbar, Unit::Millibar)?,
        t2,
    )?)
}

pub const ROD_HEADERS: &[&str] = &[
    "material",
    "length_m",
    "heating_W_per_m3",
    "q_abs_W_per_m2",
    "t_near_K",
    "t_far_K",
    "gap_term_mK",
    "sink_flux_W_per_m2",
];

pub fn rod_row(a: &RodArgs, ctx: &Context) -> Result<Vec<Cell>, CliError> {
    let m = ctx.material(&a.material)?;
    let k = m.conductivity.ok_or_else(|| {
        CliError::Usage(format!("material '{}' has no thermal conductivity", m.name))
    })?;
    let length = either(a.length, a.length_cm, Unit::Centimeter)?
        .ok_or_else(|| CliError::Usage("rod requires --length or --length-cm".into()))?;
    let b = budget(&a.budget, "experiment-design")?;
    let h = volumetric_heating_from_budget(&b, m.density())?;
    let t_near = either(a.t_near, a.t_near_mk, Unit::Millikelvin)?.unwrap_or(0.0);

    let q_abs = match (&a.absorber.q_abs, &a.absorber.absorber_material) {
        (Some(q), _) => *q,
        (None, Some(name)) => {
            let absorber = ctx.material(name)?;
            let h_abs = volumetric_heating_from_budget(&b, absorber.density())?;
            let volume = to_si(
                a.absorber.absorber_volume_cm3.unwrap_or(0.0),
                Unit::CubicCentimeter,
            )?;
            let area = to_si(
                a.absorber.rod_area_cm2.unwrap_or(0.0),
                Unit::SquareCentimeter,
            )?;
            absorber_flux(h_abs, volume, area)?
        }
        (None, None) => 0.0,
    };
    let far = rod_with_absorber_far_temperature(length, h, q_abs, &k, t_near)?;
    let gap = rod_with_absorber_far_temperature(length, h, q_abs, &k, 0.0)?;
    Ok(vec![
        m.name.clone().into(),
        length.into(),
        h.into(),
        q_abs.into(),
        t_near.into(),
        far.into(),
        mk(gap).into(),
        (length * h + q_abs).into(),
    ])
}

fn reproduce(a: &ReproduceArgs, ctx: &Context) -> Result<(Table, bool), CliError> {
    let mut consts = ctx.constants;
    if let Some(hbar) = a.hbar {
        consts.hbar = hbar;
    }
    let checks = run_checks(&consts)?;
    let mut t = Table::new(vec!["name", "expected", "computed", "tolerance", "pass"]);
    for c in &checks {
        t.push(vec![
            c.name.into(),
            c.expected.into(),
            c.computed.into(),
            c.tolerance.into(),
            c.pass.into(),
        ]);
    }
    let passed = checks.iter().filter(|c| c.pass).count();
    t.notes
        .push(format!("{passed}/{} checks passed", checks.len()));
    Ok((t, passed == checks.len()))
}

fn materials(ctx: &Context) -> Table {
    let mut t = Table::new(vec![
        "name",
        "density_g_per_cm3",
        "sound_speed_m_per_s",
        "k0_W_per_m",
        "beta",
        "emissivity",
    ]);
    for m in ctx.registry.iter() {
        t.push(vec![
            m.name.clone().into(),
            m.density_g_cm3.into(),
            m.sound_speed.into(),
            m.conductivity.map(|k| k.k0_hat()).into(),
            m.conductivity.map(|k| k.beta()).into(),
            m.emissivity.into(),
        ]);
    }
    t
}
