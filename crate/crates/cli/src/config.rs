//! `--config` files: flat `flag = value` TOML whose entries become
//! `--flag=value` arguments unless the flag is already on the command line.
//!
//! ```toml
//! material = "torlon4203"
//! radius-cm = 50
//! preset = "experiment-design"
//! csv = true
//! ```

use std::ffi::OsString;
use std::fs;

/// Returns `args` with the entries of the `--config` file appended.
pub fn expand(args: Vec<OsString>) -> Result<Vec<OsString>, String> {
    let strings: Vec<String> = args
        .iter()
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let path = match config_path(&strings) {
        Some(p) => p,
        None => return Ok(args),
    };
    let text =
        fs::read_to_string(&path).map_err(|e| format!("cannot read config file {path}: {e}"))?;
    let table: toml::Table =
        toml::from_str(&text).map_err(|e| format!("config file {path}: {}", e.message()))?;

    let mut out = args;
    for (key, value) in table {
        let flag = format!("--{key}");
        let given = strings
            .iter()
            .any(|a| *a == flag || a.starts_with(&format!("{flag}=")));
        if given {
            continue;
        }
        match value {
            toml::Value::Boolean(true) => out.push(flag.into()),
            toml::Value::Boolean(false) => {}
            toml::Value::String(s) => out.push(format!("{flag}={s}").into()),
            toml::Value::Integer(i) => out.push(format!("{flag}={i}").into()),
            toml::Value::Float(x) => out.push(format!("{flag}={x:e}").into()),
            other => {
                return Err(format!(
                    "config file {path}: unsupported value for '{key}': {other}"
                ))
            }
        }
    }
    Ok(out)
}

fn config_path(args: &[String]) -> Option<String> {
    let mut iter = args.iter().skip(1);
    while let Some(a) = iter.next() {
        if a == "--config" {
            return iter.next().cloned();
        }
        if let Some(p) = a.strip_prefix("--config=") {
            return Some(p.to_string());
        }
    }
    None
}
