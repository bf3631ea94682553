//! Output documents, error classes and exit codes.

use emwave::Complex;
use serde_json::{json, Map, Value};

/// Output format requested with `--format`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Svg,
}

/// Rendered command output.
#[derive(Debug, Clone, PartialEq)]
pub enum Payload {
    Json(Value),
    Text(String),
}

impl Payload {
    /// Text written to stdout, newline-terminated.
    pub fn render(&self) -> String {
        match self {
            Payload::Json(v) => {
                let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
                s.push('\n');
                s
            }
            Payload::Text(t) if t.ends_with('\n') => t.clone(),
            Payload::Text(t) => format!("{t}\n"),
        }
    }
}

/// Failure classes mapped to exit codes.
#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    /// Malformed or out-of-range input.
    Validation(String),
    /// Well-formed input with no physical answer.
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Domain(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Validation(m) | CliError::Domain(m) => m,
        }
    }
}

impl From<emwave::Error> for CliError {
    fn from(e: emwave::Error) -> Self {
        use emwave::Error::*;
        match e {
            InvalidInput(_) | InvalidGeometry(_) | InvalidMode(_) => CliError::Validation(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn validation(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

/// JSON number; non-finite values become the strings `inf`, `-inf`, `nan`.
pub fn num(x: f64) -> Value {
    if x.is_nan() {
        json!("nan")
    } else if x.is_infinite() {
        json!(if x > 0.0 { "inf" } else { "-inf" })
    } else if x == 0.0 {
        json!(0.0)
    } else {
        json!(x)
    }
}

/// Complex value as `{re, im}`.
pub fn cx(z: Complex) -> Value {
    json!({ "re": num(z.re), "im": num(z.im) })
}

/// Complex value with its magnitude and phase.
pub fn polar(z: Complex) -> Value {
    let mut m = Map::new();
    m.insert("re".into(), num(z.re));
    m.insert("im".into(), num(z.im));
    m.insert("magnitude".into(), num(z.norm()));
    angle(&mut m, "angle", if z.norm() == 0.0 { 0.0 } else { z.arg() });
    Value::Object(m)
}

/// Inserts an angle in radians under `key` and in degrees under `key_deg`.
pub fn angle(m: &mut Map<String, Value>, key: &str, rad: f64) {
    m.insert(key.into(), num(rad));
    m.insert(format!("{key}_deg"), num(rad.to_degrees()));
}

/// Ordered key-value builder for JSON objects.
#[derive(Debug, Default)]
pub struct Obj(pub Map<String, Value>);

impl Obj {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.0.insert(key.into(), v.into());
        self
    }

    pub fn n(self, key: &str, x: f64) -> Self {
        self.set(key, num(x))
    }

    pub fn c(self, key: &str, z: Complex) -> Self {
        self.set(key, cx(z))
    }

    pub fn angle(mut self, key: &str, rad: f64) -> Self {
        angle(&mut self.0, key, rad);
        self
    }

    pub fn value(self) -> Value {
        Value::Object(self.0)
    }
}

impl From<Obj> for Value {
    fn from(o: Obj) -> Self {
        o.value()
    }
}

/// Single output document `{command, inputs_normalized, results}`.
pub fn document(command: &str, inputs: Obj, results: Obj) -> Payload {
    Payload::Json(json!({
        "command": command,
        "inputs_normalized": inputs.value(),
        "results": results.value(),
    }))
}

/// RFC 4180 CSV with a header row.
pub fn csv_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> CliResult<Payload> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::Domain(format!("csv output failed: {e}"));
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(&row).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Domain(format!("csv output failed: {e}")))?;
    Ok(Payload::Text(String::from_utf8(bytes).expect("CSV from UTF-8 fields is UTF-8")))
}

/// Rejects formats a command cannot produce.
pub fn only(format: Format, allowed: &[Format]) -> CliResult<Format> {
    if allowed.contains(&format) {
        Ok(format)
    } else {
        Err(validation(format!("format {format:?} is not available for this command").to_lowercase()))
    }
}
