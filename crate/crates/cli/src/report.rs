use std::collections::BTreeMap;
use std::io::Write;

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub value: Value,
    pub expected: Value,
    pub tolerance: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub params: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub data: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<Table>,
}

fn num(x: f64) -> Value {
    serde_json::Number::from_f64(x).map(Value::Number).unwrap_or_else(|| Value::String(format!("{x}")))
}

impl Report {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            params: BTreeMap::new(),
            checks: Vec::new(),
            elapsed_ms: 0,
            data: BTreeMap::new(),
            table: None,
        }
    }

    pub fn param(&mut self, key: &str, v: impl Serialize) -> &mut Self {
        self.params.insert(key.to_string(), serde_json::to_value(v).expect("serializable parameter"));
        self
    }

    pub fn datum(&mut self, key: &str, v: impl Serialize) -> &mut Self {
        self.data.insert(key.to_string(), serde_json::to_value(v).expect("serializable datum"));
        self
    }

    /// |value − expected| ≤ tolerance.
    pub fn close(&mut self, name: impl Into<String>, value: f64, expected: f64, tolerance: f64) {
        let pass = (value - expected).abs() <= tolerance;
        self.checks.push(Check { name: name.into(), pass, value: num(value), expected: num(expected), tolerance });
    }

    /// value ≤ tolerance, for residuals.
    pub fn residual(&mut self, name: impl Into<String>, value: f64, tolerance: f64) {
        let pass = value <= tolerance;
        self.checks.push(Check { name: name.into(), pass, value: num(value), expected: num(0.0), tolerance });
    }

    /// value ≥ −tolerance, for eigenvalue lower bounds.
    pub fn nonnegative(&mut self, name: impl Into<String>, value: f64, tolerance: f64) {
        let pass = value >= -tolerance;
        self.checks.push(Check {
            name: name.into(),
            pass,
            value: num(value),
            expected: Value::String(">= 0".into()),
            tolerance,
        });
    }

    pub fn flag(&mut self, name: impl Into<String>, value: impl Serialize, expected: impl Serialize, pass: bool) {
        self.checks.push(Check {
            name: name.into(),
            pass,
            value: serde_json::to_value(value).expect("serializable"),
            expected: serde_json::to_value(expected).expect("serializable"),
            tolerance: 0.0,
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn write_json<W: Write>(&self, w: &mut W) -> std::io::Result<()> {
        serde_json::to_writer_pretty(&mut *w, self)?;
        writeln!(w)
    }

    /// The table if there is one, otherwise the checks.
    pub fn write_csv<W: Write>(&self, w: W) -> std::io::Result<()> {
        let mut out = csv::Writer::from_writer(w);
        match &self.table {
            Some(t) => {
                out.write_record(&t.columns)?;
                for r in &t.rows {
                    out.write_record(r)?;
                }
            }
            None => {
                out.write_record(["name", "pass", "value", "expected", "tolerance"])?;
                for c in &self.checks {
                    out.write_record([
                        c.name.clone(),
                        c.pass.to_string(),
                        plain(&c.value),
                        plain(&c.expected),
                        format!("{}", c.tolerance),
                    ])?;
                }
            }
        }
        out.flush()
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
