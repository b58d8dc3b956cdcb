use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Collapse-noise bulk heating: effective couplings, heating bounds and
/// cryogenic steady-state temperatures.
///
/// Plain numeric flags are SI (m, K, s, W/kg, W/m^2). Flags with a unit
/// suffix (`--rc-cm`, `--t1-mk`, `--pressure-mbar`, ...) take that unit.
#[derive(Debug, Parser)]
#[command(name = "csl-heat", version)]
pub struct Cli {
    /// Material definition file overlaid on the builtin registry.
    #[arg(long, global = true, value_name = "PATH")]
    pub materials: Option<PathBuf>,

    /// Emit CSV instead of a table, to PATH or standard output.
    #[arg(long, global = true, value_name = "PATH", num_args = 0..=1, default_missing_value = "-")]
    pub csv: Option<String>,

    /// Relative tolerance for quadrature and the surface-temperature solve.
    #[arg(long, global = true, value_name = "REL")]
    pub tol: Option<f64>,

    /// Flat `flag = value` file supplying defaults for the subcommand's flags.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Effective coupling for a noise spectrum and phonon dispersion.
    LambdaEff(LambdaEffArgs),
    /// Heating rates implied by an effective coupling.
    Heating(HeatingArgs),
    /// Largest effective coupling allowed by a heating budget.
    Bound(BoundArgs),
    /// Surface and center temperatures of a heated sphere.
    Sphere(SphereArgs),
    /// Far-end temperature of a heat-sunk rod, optionally with an absorber.
    Rod(RodArgs),
    /// Evaluate a model over a range of one parameter.
    Sweep(SweepArgs),
    /// Check the computed values against the published estimates.
    ReproducePaper(ReproduceArgs),
    /// List the material registry.
    Materials(MaterialsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpectrumKind {
    White,
    Gaussian,
    Step,
    Table,
}

#[derive(Debug, Clone, Args)]
pub struct SpectrumArgs {
    #[arg(long, value_enum, default_value = "white")]
    pub spectrum: SpectrumKind,

    /// Reduction rate lambda at zero frequency, s^-1.
    #[arg(long)]
    pub lambda: Option<f64>,

    /// Gaussian correlation time t_c, s.
    #[arg(long)]
    pub tc: Option<f64>,

    /// Step cutoff angular frequency, s^-1.
    #[arg(long)]
    pub omega_c: Option<f64>,

    /// Two-column `omega lambda` table (SI) for `--spectrum table`.
    #[arg(long, value_name = "PATH")]
    pub spectrum_file: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct DispersionArgs {
    /// Longitudinal sound speed, m/s (linear dispersion).
    #[arg(long)]
    pub vs: Option<f64>,

    /// Two-column `q omega` dispersion table (SI).
    #[arg(long, value_name = "PATH", conflicts_with = "vs")]
    pub dispersion_file: Option<PathBuf>,

    /// Upper limit of the radial integral in units of 1/r_c.
    #[arg(long, default_value_t = 8.0)]
    pub w_max: f64,
}

#[derive(Debug, Clone, Args)]
pub struct RcArgs {
    /// Noise correlation length, m [default: 1e-7].
    #[arg(long)]
    pub rc: Option<f64>,

    /// Noise correlation length, cm.
    #[arg(long, conflicts_with = "rc")]
    pub rc_cm: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct BudgetArgs {
    /// Heating budget, W/kg.
    #[arg(long)]
    pub budget: Option<f64>,

    /// Named budget: cryostat-residual, earth-luminosity, earth-unknown,
    /// experiment-design.
    #[arg(long, conflicts_with = "budget")]
    pub preset: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct EnvArgs {
    /// Emissivity [default: the material's, else 1].
    #[arg(long)]
    pub emissivity: Option<f64>,

    /// Accommodation coefficient of the residual gas.
    #[arg(long, default_value_t = 0.02)]
    pub accommodation: f64,

    /// Residual gas pressure, mbar.
    #[arg(long, default_value_t = 1e-6)]
    pub pressure_mbar: f64,

    /// Cryostat wall temperature, K [default: 0].
    #[arg(long)]
    pub t2: Option<f64>,

    /// Cryostat wall temperature, mK.
    #[arg(long, conflicts_with = "t2")]
    pub t2_mk: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct LambdaEffArgs {
    #[command(flatten)]
    pub spectrum: SpectrumArgs,
    #[command(flatten)]
    pub dispersion: DispersionArgs,
    #[command(flatten)]
    pub rc: RcArgs,
    /// Take the sound speed from this material when `--vs` is absent.
    #[arg(long)]
    pub material: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct HeatingArgs {
    /// Effective coupling, s^-1.
    #[arg(long)]
    pub lambda_eff: f64,
    #[command(flatten)]
    pub rc: RcArgs,
    /// Body mass, kg.
    #[arg(long)]
    pub mass: Option<f64>,
    /// Density, g/cm^3.
    #[arg(long, conflicts_with = "material")]
    pub density_g_cm3: Option<f64>,
    /// Take the density from this material.
    #[arg(long)]
    pub material: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct BoundArgs {
    #[command(flatten)]
    pub budget: BudgetArgs,
    #[command(flatten)]
    pub rc: RcArgs,
    /// White-noise coupling to be cut off down to the bound, s^-1.
    #[arg(long)]
    pub lambda: Option<f64>,
    /// Sound speed for the cutoff inversion, m/s.
    #[arg(long)]
    pub vs: Option<f64>,
    /// Take the sound speed from this material.
    #[arg(long, conflicts_with = "vs")]
    pub material: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct SphereArgs {
    #[arg(long)]
    pub material: String,
    /// Sphere radius, m.
    #[arg(long)]
    pub radius: Option<f64>,
    /// Sphere radius, cm.
    #[arg(long, conflicts_with = "radius")]
    pub radius_cm: Option<f64>,
    #[command(flatten)]
    pub budget: BudgetArgs,
    /// Surface temperature, K. When absent it is solved from the surface
    /// balance against the cryostat.
    #[arg(long)]
    pub t1: Option<f64>,
    /// Surface temperature, mK.
    #[arg(long, conflicts_with = "t1")]
    pub t1_mk: Option<f64>,
    #[command(flatten)]
    pub env: EnvArgs,
}

#[derive(Debug, Clone, Args)]
pub struct RodArgs {
    #[arg(long)]
    pub material: String,
    /// Rod length, m.
    #[arg(long)]
    pub length: Option<f64>,
    /// Rod length, cm.
    #[arg(long, conflicts_with = "length")]
    pub length_cm: Option<f64>,
    #[command(flatten)]
    pub budget: BudgetArgs,
    /// Heat-sink temperature at the near end, K [default: 0].
    #[arg(long)]
    pub t_near: Option<f64>,
    /// Heat-sink temperature, mK.
    #[arg(long, conflicts_with = "t_near")]
    pub t_near_mk: Option<f64>,
    #[command(flatten)]
    pub absorber: AbsorberArgs,
}

#[derive(Debug, Clone, Args)]
pub struct AbsorberArgs {
    /// Flux entering the far end from an absorber, W/m^2.
    #[arg(long, conflicts_with = "absorber_material")]
    pub q_abs: Option<f64>,
    /// Absorber material; its heat is computed from the same budget.
    #[arg(long, requires_all = ["absorber_volume_cm3", "rod_area_cm2"])]
    pub absorber_material: Option<String>,
    /// Absorber volume, cm^3.
    #[arg(long)]
    pub absorber_volume_cm3: Option<f64>,
    /// Rod cross-section, cm^2.
    #[arg(long)]
    pub rod_area_cm2: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepParameter {
    /// Gaussian correlation time, s.
    Tc,
    /// Sound speed, m/s.
    Vs,
    /// Correlation length, m.
    Rc,
    /// Spectrum amplitude, s^-1.
    Lambda,
    /// Residual gas pressure, mbar.
    #[value(alias = "pressure", alias = "p")]
    PressureMbar,
    /// Sphere radius, m.
    #[value(alias = "r")]
    Radius,
    /// Rod length, m.
    #[value(alias = "l")]
    Length,
    /// Heating budget, W/kg.
    Budget,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scale {
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepTarget {
    LambdaEff,
    Bound,
    Sphere,
    Rod,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    pub parameter: SweepParameter,
    #[arg(long, value_enum, default_value = "linear")]
    pub scale: Scale,
    #[arg(long, allow_negative_numbers = true)]
    pub start: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub stop: f64,
    #[arg(long)]
    pub count: usize,
    /// Model to evaluate [default: inferred from the parameter].
    #[arg(long, value_enum)]
    pub target: Option<SweepTarget>,

    #[command(flatten)]
    pub spectrum: SpectrumArgs,
    #[command(flatten)]
    pub dispersion: DispersionArgs,
    #[command(flatten)]
    pub rc: RcArgs,
    #[command(flatten)]
    pub budget: BudgetArgs,
    #[command(flatten)]
    pub env: EnvArgs,
    #[arg(long)]
    pub material: Option<String>,
    /// Sphere radius, m.
    #[arg(long)]
    pub radius: Option<f64>,
    /// Rod length, m.
    #[arg(long)]
    pub length: Option<f64>,
    /// Sphere surface temperature, K (skips the surface solve).
    #[arg(long)]
    pub t1: Option<f64>,
    /// Rod heat-sink temperature, K.
    #[arg(long)]
    pub t_near: Option<f64>,
    /// Absorber flux into the rod, W/m^2.
    #[arg(long)]
    pub q_abs: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct ReproduceArgs {
    /// Override the reduced Planck constant, J s.
    #[arg(long, hide = true)]
    pub hbar: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct MaterialsArgs {
    /// Print the registry as a material file instead of a table.
    #[arg(long)]
    pub toml: bool,
}
