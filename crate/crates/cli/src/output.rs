//! Record writers: JSON objects one per line, or RFC-4180 CSV with a header
//! row, '.' decimal separator and 17 significant digits.

use std::io::Write as _;

use clap::ValueEnum;
use zetalab_core::zeros::ZeroRecord;
use zetalab_core::EvalError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

/// 17 significant digits, scientific, deterministic across runs.
pub fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

pub struct Writer {
    format: OutputFormat,
    csv: Option<csv::Writer<std::io::Stdout>>,
    header_done: bool,
}

impl Writer {
    pub fn new(format: OutputFormat) -> Self {
        Writer {
            format,
            csv: match format {
                OutputFormat::Csv => Some(csv::Writer::from_writer(std::io::stdout())),
                OutputFormat::Json => None,
            },
            header_done: false,
        }
    }

    /// Emits one record; the first call of a CSV stream writes the header.
    pub fn record(&mut self, fields: &[&str], values: &[String]) -> Result<(), EvalError> {
        debug_assert_eq!(fields.len(), values.len());
        match self.format {
            OutputFormat::Json => {
                let mut map = serde_json::Map::new();
                for (f, v) in fields.iter().zip(values) {
                    // numbers stay strings deliberately: the 17-digit text is
                    // the canonical byte-stable representation
                    map.insert((*f).to_string(), serde_json::Value::String(v.clone()));
                }
                let line = serde_json::Value::Object(map).to_string();
                let mut out = std::io::stdout();
                writeln!(out, "{line}")
                    .map_err(|e| EvalError::Domain(format!("stdout write failed: {e}")))?;
                Ok(())
            }
            OutputFormat::Csv => {
                let w = self.csv.as_mut().expect("csv writer");
                if !self.header_done {
                    w.write_record(fields)
                        .map_err(|e| EvalError::Domain(format!("csv write failed: {e}")))?;
                    self.header_done = true;
                }
                w.write_record(values)
                    .map_err(|e| EvalError::Domain(format!("csv write failed: {e}")))?;
                w.flush()
                    .map_err(|e| EvalError::Domain(format!("csv flush failed: {e}")))?;
                Ok(())
            }
        }
    }

    /// Zero records share one schema everywhere: sigma, t, residual,
    /// multiplicity, method, plus the residual tolerance that certified it.
    pub fn zero_record(&mut self, z: &ZeroRecord) -> Result<(), EvalError> {
        self.record(
            &["record", "sigma", "t", "residual", "multiplicity", "method", "residual_tol"],
            &[
                "zero".into(),
                fmt17(z.location.re),
                fmt17(z.location.im),
                fmt17(z.residual),
                z.multiplicity.to_string(),
                format!("{:?}", z.method).to_lowercase(),
                fmt17(1e-7),
            ],
        )
    }
}
