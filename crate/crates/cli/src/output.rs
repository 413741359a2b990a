//! Rendering of command results.

use crate::config::Format;
use crate::error::CliError;
use laurent_core::{BigInt, LaurentPoly, RationalFunc};
use serde_json::{json, Value};

/// One command's result in every format it supports.
#[derive(Clone, Debug)]
pub struct Report {
    pub json: Value,
    pub text: String,
    pub csv: Option<String>,
    pub default_format: Format,
    /// False when the command ran but its check failed (exit status 1).
    pub ok: bool,
}

impl Report {
    pub fn render(&self, format: Option<Format>) -> Result<String, CliError> {
        let mut out = match format.unwrap_or(self.default_format) {
            Format::Json => serde_json::to_string_pretty(&self.json).expect("serializable"),
            Format::Text => self.text.trim_end().to_string(),
            Format::Csv => self
                .csv
                .clone()
                .ok_or_else(|| CliError::usage("this command has no CSV output"))?
                .trim_end()
                .to_string(),
        };
        out.push('\n');
        Ok(out)
    }
}

/// A JSON integer when it fits in `i64`, its decimal string otherwise.
pub fn integer_json(c: &BigInt) -> Value {
    let s = c.to_string();
    s.parse::<i64>().map(Value::from).unwrap_or(Value::String(s))
}

pub fn poly_json(p: &LaurentPoly) -> Value {
    Value::Array(
        p.terms()
            .iter()
            .map(|(e, c)| json!({ "exp": e, "coeff": integer_json(c) }))
            .collect(),
    )
}

pub fn rational_json(f: &RationalFunc) -> Value {
    json!({
        "num": poly_json(f.num()),
        "den": poly_json(f.den()),
        "text": f.to_string(),
    })
}

/// A float in a fixed, platform-independent notation.
pub fn float_text(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.15e}")
    } else {
        x.to_string()
    }
}
