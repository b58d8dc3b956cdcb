//! Material records and the registry the CLI resolves `--material` against.
//!
//! User materials are read from TOML with one table per material and a unit
//! suffix on every numeric key:
//!
//! ```toml
//! ["Torlon 4203"]
//! density_g_cm3 = 1.42
//! k0_w_m = 6.13e-3        # optional, with beta: k(T) = k0 (T/K)^beta W/(m K)
//! beta = 2.18
//! sound_speed_m_s = 2500  # optional
//! emissivity = 1.0        # optional, default 1
//! ```
//!
//! Names are matched case-insensitively, ignoring spaces and punctuation, so
//! `torlon4203`, `Torlon 4203` and `TORLON-4203` name the same record.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::thermal::PowerLawConductivity;
use crate::units::Unit;

#[derive(Debug, Clone, PartialEq)]
pub struct Material {
    pub name: String,
    pub density_g_cm3: f64,
    /// Longitudinal sound speed at low temperature, m/s.
    pub sound_speed: Option<f64>,
    pub conductivity: Option<PowerLawConductivity>,
    pub emissivity: f64,
}

impl Material {
    pub fn new(name: impl Into<String>, density_g_cm3: f64) -> Self {
        Material {
            name: name.into(),
            density_g_cm3,
            sound_speed: None,
            conductivity: None,
            emissivity: 1.0,
        }
    }

    /// Density in kg/m^3.
    pub fn density(&self) -> f64 {
        self.density_g_cm3 * Unit::GramPerCubicCentimeter.si_factor()
    }

    fn invalid(&self, field: &str, message: impl Into<String>) -> Error {
        Error::InvalidRecord {
            record: self.name.clone(),
            field: field.to_string(),
            message: message.into(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if normalize(&self.name).is_empty() {
            return Err(self.invalid("name", "must contain a letter or digit"));
        }
        if !(self.density_g_cm3.is_finite() && self.density_g_cm3 > 0.0) {
            return Err(self.invalid(
                "density_g_cm3",
                format!("{} is not positive", self.density_g_cm3),
            ));
        }
        if let Some(v) = self.sound_speed {
            if !(v.is_finite() && v > 0.0) {
                return Err(self.invalid("sound_speed_m_s", format!("{v} is not positive")));
            }
        }
        if !(0.0..=1.0).contains(&self.emissivity) {
            return Err(self.invalid(
                "emissivity",
                format!("{} is outside [0, 1]", self.emissivity),
            ));
        }
        Ok(())
    }
}

fn normalize(name: &str) -> String {
    name.chars()
        .filter(|c| c.is_alphanumeric())
        .flat_map(char::to_lowercase)
        .collect()
}

/// Ordered set of materials with unique (normalized) names.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Registry {
    materials: Vec<Material>,
}

impl Registry {
    pub fn empty() -> Self {
        Registry::default()
    }

    pub fn len(&self) -> usize {
        self.materials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.materials.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Material> {
        self.materials.iter()
    }

    pub fn get(&self, name: &str) -> Option<&Material> {
        let key = normalize(name);
        self.materials.iter().find(|m| normalize(&m.name) == key)
    }

    pub fn lookup(&self, name: &str) -> Result<&Material> {
        self.get(name).ok_or_else(|| Error::Unknown {
            kind: "material",
            name: name.to_string(),
        })
    }

    /// Adds or replaces (by normalized name) a validated record.
    pub fn insert(&mut self, material: Material) -> Result<()> {
        material.validate()?;
        let key = normalize(&material.name);
        match self
            .materials
            .iter_mut()
            .find(|m| normalize(&m.name) == key)
        {
            Some(slot) => *slot = material,
            None => self.materials.push(material),
        }
        Ok(())
    }

    /// Overlays `other` on `self`; records in `other` shadow same-named ones.
    pub fn merge(&mut self, other: Registry) {
        for m in other.materials {
            self.insert(m)
                .expect("registry records are validated on insertion");
        }
    }

    /// Parses a material file into a registry holding only its records.
    pub fn parse(text: &str) -> Result<Registry> {
        let doc: toml::map::Map<String, toml::Value> =
            toml::from_str(text).map_err(|e| parse_error(text, &e))?;
        let mut registry = Registry::empty();
        for (name, value) in doc {
            let record: MaterialRecord =
                value
                    .try_into()
                    .map_err(|e: toml::de::Error| Error::InvalidRecord {
                        record: name.clone(),
                        field: "record".to_string(),
                        message: e.message().to_string(),
                    })?;
            if registry.get(&name).is_some() {
                return Err(Error::InvalidRecord {
                    record: name,
                    field: "name".to_string(),
                    message: "defined more than once".to_string(),
                });
            }
            registry.insert(record.into_material(name)?)?;
        }
        Ok(registry)
    }

    pub fn to_toml(&self) -> String {
        let mut doc = toml::map::Map::new();
        for m in &self.materials {
            let record = MaterialRecord::from(m);
            doc.insert(
                m.name.clone(),
                toml::Value::try_from(record).expect("material records serialize"),
            );
        }
        toml::to_string(&doc).expect("material tables serialize")
    }
}

fn parse_error(text: &str, e: &toml::de::Error) -> Error {
    let line = e
        .span()
        .map(|span| text[..span.start.min(text.len())].matches('\n').count() + 1)
        .unwrap_or(0);
    Error::Parse {
        line,
        message: e.message().to_string(),
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MaterialRecord {
    density_g_cm3: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sound_speed_m_s: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    k0_w_m: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    beta: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    emissivity: Option<f64>,
}

impl MaterialRecord {
    fn into_material(self, name: String) -> Result<Material> {
        let mut m = Material::new(name, self.density_g_cm3);
        m.sound_speed = self.sound_speed_m_s;
        m.emissivity = self.emissivity.unwrap_or(1.0);
        m.conductivity = match (self.k0_w_m, self.beta) {
            (None, None) => None,
            (Some(k0), Some(beta)) => Some(PowerLawConductivity::new(k0, beta).map_err(|e| {
                let field = match e {
                    Error::Domain { name: "beta", .. } => "beta",
                    _ => "k0_w_m",
                };
                m.invalid(field, e.to_string())
            })?),
            (Some(_), None) => return Err(m.invalid("beta", "k0_w_m given without beta")),
            (None, Some(_)) => return Err(m.invalid("k0_w_m", "beta given without k0_w_m")),
        };
        m.validate()?;
        Ok(m)
    }
}

impl From<&Material> for MaterialRecord {
    fn from(m: &Material) -> Self {
        MaterialRecord {
            density_g_cm3: m.density_g_cm3,
            sound_speed_m_s: m.sound_speed,
            k0_w_m: m.conductivity.map(|k| k.k0_hat()),
            beta: m.conductivity.map(|k| k.beta()),
            emissivity: (m.emissivity != 1.0).then_some(m.emissivity),
        }
    }
}

/// Lead, copper and Torlon 4203.
///
/// Copper's density (8.96 g/cm^3) is the handbook room-temperature value; the
/// other numbers are the low-temperature figures the experiment estimates use.
pub fn builtin_registry() -> Registry {
    let lead = Material::new("lead", 11.4);

    let mut copper = Material::new("copper", 8.96);
    copper.sound_speed = Some(4000.0);

    let mut torlon = Material::new("Torlon 4203", 1.42);
    torlon.conductivity = Some(PowerLawConductivity::new(6.13e-3, 2.18).expect("valid builtin"));

    let mut r = Registry::empty();
    for m in [lead, copper, torlon] {
        r.insert(m).expect("valid builtin");
    }
    r
}

/// Builtins overlaid with the records in `source`.
pub fn load_materials(source: &str) -> Result<Registry> {
    let mut registry = builtin_registry();
    registry.merge(Registry::parse(source)?);
    Ok(registry)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins() {
        let r = builtin_registry();
        assert_eq!(r.lookup("lead").unwrap().density_g_cm3, 11.4);
        assert_eq!(r.lookup("LEAD").unwrap().density(), 11_400.0);
        let k = r.lookup("torlon 4203").unwrap().conductivity.unwrap();
        assert_eq!((k.k0_hat(), k.beta()), (6.13e-3, 2.18));
        assert!(r.lookup("torlon4203").is_ok());
        assert_eq!(r.lookup("copper").unwrap().sound_speed, Some(4000.0));
        assert_eq!(r.lookup("copper").unwrap().conductivity, None);
        assert!(matches!(
            r.lookup("unobtainium"),
            Err(Error::Unknown { .. })
        ));
    }

    #[test]
    fn empty_source_keeps_builtins() {
        assert_eq!(load_materials("").unwrap(), builtin_registry());
        assert_eq!(
            load_materials("# nothing here\n").unwrap(),
            builtin_registry()
        );
    }

    #[test]
    fn user_record_shadows_builtin() {
        let r = load_materials("[Lead]\ndensity_g_cm3 = 11.35\n").unwrap();
        assert_eq!(r.lookup("lead").unwrap().density_g_cm3, 11.35);
        assert_eq!(r.len(), builtin_registry().len());
    }

    #[test]
    fn adds_new_record() {
        let text = "[sapphire]\ndensity_g_cm3 = 3.98\nsound_speed_m_s = 11000\nk0_w_m = 2.0\nbeta = 3\nemissivity = 0.5\n";
        let r = load_materials(text).unwrap();
        let s = r.lookup("Sapphire").unwrap();
        assert_eq!(s.sound_speed, Some(11000.0));
        assert_eq!(s.emissivity, 0.5);
        assert_eq!(s.conductivity.unwrap().beta(), 3.0);
    }

    #[test]
    fn non_positive_density_names_field() {
        let err = load_materials("[foam]\ndensity_g_cm3 = 0\n").unwrap_err();
        match &err {
            Error::InvalidRecord { record, field, .. } => {
                assert_eq!(record, "foam");
                assert!(field.contains("density"));
            }
            other => panic!("{other:?}"),
        }
        assert!(err.to_string().contains("density"));
    }

    #[test]
    fn invariant_errors() {
        let err = load_materials("[x]\ndensity_g_cm3 = 1\nk0_w_m = 1\n").unwrap_err();
        assert!(matches!(err, Error::InvalidRecord { ref field, .. } if field == "beta"));
        let err = load_materials("[x]\ndensity_g_cm3 = 1\nk0_w_m = 1\nbeta = -1\n").unwrap_err();
        assert!(matches!(err, Error::InvalidRecord { ref field, .. } if field == "beta"));
        let err = load_materials("[x]\ndensity_g_cm3 = 1\nemissivity = 2\n").unwrap_err();
        assert!(matches!(err, Error::InvalidRecord { ref field, .. } if field == "emissivity"));
        let err = load_materials("[x]\ndensity_g_cm3 = 1\nsound_speed_m_s = -3\n").unwrap_err();
        assert!(
            matches!(err, Error::InvalidRecord { ref field, .. } if field == "sound_speed_m_s")
        );
        // unit suffix is mandatory
        let err = load_materials("[x]\ndensity = 1\n").unwrap_err();
        assert!(matches!(err, Error::InvalidRecord { .. }), "{err:?}");
        let err =
            load_materials("[lead]\ndensity_g_cm3 = 1\n[LEAD]\ndensity_g_cm3 = 2\n").unwrap_err();
        assert!(matches!(err, Error::InvalidRecord { ref field, .. } if field == "name"));
    }

    #[test]
    fn syntax_error_has_line() {
        let err = load_materials("[ok]\ndensity_g_cm3 = 1\n\n[bad\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }), "{err:?}");
    }

    #[test]
    fn serialize_round_trip() {
        let text = "[\"Glass, fused\"]\ndensity_g_cm3 = 2.203\nk0_w_m = 0.000123456789\nbeta = 1.9\nemissivity = 0.9\n";
        let once = load_materials(text).unwrap();
        let twice = load_materials(&once.to_toml()).unwrap();
        assert_eq!(once, twice);
    }
}
