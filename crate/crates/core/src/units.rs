//! Unit-carrying scalars.
//!
//! Every routine in this crate computes in SI. [`Quantity`] exists for the
//! boundaries: reading values given in the mixed units that are customary for
//! cryogenic work (cm, mK, mbar, MeV/(g s), W/cm^3, ...) and printing them back.
//! Dimensions are a closed set; there is no dimensional algebra.

use std::fmt;

use crate::error::{Error, Result};

/// Physical dimension of a [`Quantity`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dimension {
    Rate,
    Time,
    Length,
    Area,
    Volume,
    Wavenumber,
    Mass,
    Density,
    Temperature,
    Pressure,
    Power,
    PowerPerMass,
    PowerPerVolume,
    PowerPerArea,
    AngularFrequency,
    Speed,
    ThermalConductivityCoefficient,
    Dimensionless,
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Dimension::Rate => "rate",
            Dimension::Time => "time",
            Dimension::Length => "length",
            Dimension::Area => "area",
            Dimension::Volume => "volume",
            Dimension::Wavenumber => "wavenumber",
            Dimension::Mass => "mass",
            Dimension::Density => "density",
            Dimension::Temperature => "temperature",
            Dimension::Pressure => "pressure",
            Dimension::Power => "power",
            Dimension::PowerPerMass => "power per mass",
            Dimension::PowerPerVolume => "power per volume",
            Dimension::PowerPerArea => "power per area",
            Dimension::AngularFrequency => "angular frequency",
            Dimension::Speed => "speed",
            Dimension::ThermalConductivityCoefficient => "thermal conductivity coefficient",
            Dimension::Dimensionless => "dimensionless",
        };
        f.write_str(name)
    }
}

/// Joules in one MeV.
pub const JOULES_PER_MEV: f64 = 1.602_176_634e-13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Unit {
    PerSecond,
    Second,
    Meter,
    Centimeter,
    SquareMeter,
    SquareCentimeter,
    CubicMeter,
    CubicCentimeter,
    PerMeter,
    PerCentimeter,
    Kilogram,
    Gram,
    KilogramPerCubicMeter,
    GramPerCubicCentimeter,
    Kelvin,
    Millikelvin,
    Pascal,
    Millibar,
    Watt,
    WattPerKilogram,
    MevPerGramSecond,
    WattPerCubicMeter,
    WattPerCubicCentimeter,
    WattPerSquareMeter,
    WattPerSquareCentimeter,
    RadianPerSecond,
    MeterPerSecond,
    /// Prefactor of a power-law conductivity, `k(T) = k0 (T/K)^beta` W/(m K).
    WattPerMeter,
    WattPerCentimeter,
    One,
}

impl Unit {
    pub const ALL: [Unit; 30] = [
        Unit::PerSecond,
        Unit::Second,
        Unit::Meter,
        Unit::Centimeter,
        Unit::SquareMeter,
        Unit::SquareCentimeter,
        Unit::CubicMeter,
        Unit::CubicCentimeter,
        Unit::PerMeter,
        Unit::PerCentimeter,
        Unit::Kilogram,
        Unit::Gram,
        Unit::KilogramPerCubicMeter,
        Unit::GramPerCubicCentimeter,
        Unit::Kelvin,
        Unit::Millikelvin,
        Unit::Pascal,
        Unit::Millibar,
        Unit::Watt,
        Unit::WattPerKilogram,
        Unit::MevPerGramSecond,
        Unit::WattPerCubicMeter,
        Unit::WattPerCubicCentimeter,
        Unit::WattPerSquareMeter,
        Unit::WattPerSquareCentimeter,
        Unit::RadianPerSecond,
        Unit::MeterPerSecond,
        Unit::WattPerMeter,
        Unit::WattPerCentimeter,
        Unit::One,
    ];

    pub fn dimension(self) -> Dimension {
        use Dimension as D;
        match self {
            Unit::PerSecond => D::Rate,
            Unit::Second => D::Time,
            Unit::Meter | Unit::Centimeter => D::Length,
            Unit::SquareMeter | Unit::SquareCentimeter => D::Area,
            Unit::CubicMeter | Unit::CubicCentimeter => D::Volume,
            Unit::PerMeter | Unit::PerCentimeter => D::Wavenumber,
            Unit::Kilogram | Unit::Gram => D::Mass,
            Unit::KilogramPerCubicMeter | Unit::GramPerCubicCentimeter => D::Density,
            Unit::Kelvin | Unit::Millikelvin => D::Temperature,
            Unit::Pascal | Unit::Millibar => D::Pressure,
            Unit::Watt => D::Power,
            Unit::WattPerKilogram | Unit::MevPerGramSecond => D::PowerPerMass,
            Unit::WattPerCubicMeter | Unit::WattPerCubicCentimeter => D::PowerPerVolume,
            Unit::WattPerSquareMeter | Unit::WattPerSquareCentimeter => D::PowerPerArea,
            Unit::RadianPerSecond => D::AngularFrequency,
            Unit::MeterPerSecond => D::Speed,
            Unit::WattPerMeter | Unit::WattPerCentimeter => D::ThermalConductivityCoefficient,
            Unit::One => D::Dimensionless,
        }
    }

    /// Multiplier taking a value in this unit to the SI unit of its dimension.
    pub fn si_factor(self) -> f64 {
        match self {
            Unit::Centimeter => 1e-2,
            Unit::SquareCentimeter => 1e-4,
            Unit::CubicCentimeter => 1e-6,
            Unit::PerCentimeter => 1e2,
            Unit::Gram => 1e-3,
            Unit::GramPerCubicCentimeter => 1e3,
            Unit::Millikelvin => 1e-3,
            Unit::Millibar => 1e2,
            // MeV per gram per second
            Unit::MevPerGramSecond => JOULES_PER_MEV * 1e3,
            Unit::WattPerCubicCentimeter => 1e6,
            Unit::WattPerSquareCentimeter => 1e4,
            Unit::WattPerCentimeter => 1e2,
            _ => 1.0,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Unit::PerSecond => "s^-1",
            Unit::Second => "s",
            Unit::Meter => "m",
            Unit::Centimeter => "cm",
            Unit::SquareMeter => "m^2",
            Unit::SquareCentimeter => "cm^2",
            Unit::CubicMeter => "m^3",
            Unit::CubicCentimeter => "cm^3",
            Unit::PerMeter => "m^-1",
            Unit::PerCentimeter => "cm^-1",
            Unit::Kilogram => "kg",
            Unit::Gram => "g",
            Unit::KilogramPerCubicMeter => "kg/m^3",
            Unit::GramPerCubicCentimeter => "g/cm^3",
            Unit::Kelvin => "K",
            Unit::Millikelvin => "mK",
            Unit::Pascal => "Pa",
            Unit::Millibar => "mbar",
            Unit::Watt => "W",
            Unit::WattPerKilogram => "W/kg",
            Unit::MevPerGramSecond => "MeV/(g s)",
            Unit::WattPerCubicMeter => "W/m^3",
            Unit::WattPerCubicCentimeter => "W/cm^3",
            Unit::WattPerSquareMeter => "W/m^2",
            Unit::WattPerSquareCentimeter => "W/cm^2",
            Unit::RadianPerSecond => "rad/s",
            Unit::MeterPerSecond => "m/s",
            Unit::WattPerMeter => "W/m",
            Unit::WattPerCentimeter => "W/cm",
            Unit::One => "1",
        }
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// A finite value tagged with a unit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quantity {
    value: f64,
    unit: Unit,
}

impl Quantity {
    pub fn new(value: f64, unit: Unit) -> Result<Self> {
        if !value.is_finite() {
            return Err(Error::Domain {
                name: "quantity",
                value,
                reason: "must be finite",
            });
        }
        Ok(Quantity { value, unit })
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn unit(&self) -> Unit {
        self.unit
    }

    pub fn dimension(&self) -> Dimension {
        self.unit.dimension()
    }

    /// Value expressed in the SI unit of the dimension.
    pub fn si(&self) -> f64 {
        self.value * self.unit.si_factor()
    }

    /// Value in `unit`, failing when the dimensions differ.
    pub fn value_in(&self, unit: Unit) -> Result<f64> {
        self.convert(unit).map(|q| q.value)
    }

    pub fn convert(&self, target: Unit) -> Result<Quantity> {
        if target.dimension() != self.dimension() {
            return Err(Error::DimensionMismatch {
                expected: target.dimension(),
                found: self.dimension(),
            });
        }
        if target == self.unit {
            return Ok(*self);
        }
        Quantity::new(
            self.value * (self.unit.si_factor() / target.si_factor()),
            target,
        )
    }

    /// Sum in the unit of `self`.
    pub fn checked_add(&self, other: &Quantity) -> Result<Quantity> {
        let rhs = other.convert(self.unit)?;
        Quantity::new(self.value + rhs.value, self.unit)
    }

    pub fn checked_sub(&self, other: &Quantity) -> Result<Quantity> {
        let rhs = other.convert(self.unit)?;
        Quantity::new(self.value - rhs.value, self.unit)
    }

    pub fn scale(&self, factor: f64) -> Result<Quantity> {
        Quantity::new(self.value * factor, self.unit)
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match f.precision() {
            Some(p) => write!(f, "{:.*e} {}", p, self.value, self.unit),
            None => write!(f, "{:e} {}", self.value, self.unit),
        }
    }
}

/// Shorthand for `Quantity::new(value, unit)?.si()`.
pub fn to_si(value: f64, unit: Unit) -> Result<f64> {
    Quantity::new(value, unit).map(|q| q.si())
}
