//! Output records and their JSON / CSV renderings.

use std::collections::BTreeMap;

use cantor_quant::Rational;
use cantor_quant::rational::to_wire;
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// What every command emits. `parameters` and all nested objects are
/// `BTreeMap`-backed, so key order is stable.
#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub results: Value,
}

/// Flat rendering of the same results; headers are fixed per command.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

pub struct Output {
    pub record: OutputRecord,
    pub table: Table,
    /// `false` when a verification inside the command failed.
    pub ok: bool,
}

impl Output {
    pub fn render(&self, format: Format) -> anyhow::Result<String> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.record)?;
                s.push('\n');
                Ok(s)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.table.header)?;
                for row in &self.table.rows {
                    w.write_record(row)?;
                }
                Ok(String::from_utf8(w.into_inner()?)?)
            }
        }
    }
}

pub fn rat(r: &Rational) -> Value {
    Value::String(to_wire(r))
}

/// Twelve significant digits; positional between 1e-6 and 1e15,
/// scientific outside.
pub fn float(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-6..15).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa.to_string()))
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}
