use std::io::{self, Write};

use serde::Serialize;
use serde_json::{Map, Value};

use filterint::exactnum::to_ratio_string;
use filterint::Family;

use crate::Format;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutputRecord {
    pub family: String,
    pub n: u64,
    pub a: Option<String>,
    pub exact_coefficient: String,
    pub constant_tag: String,
    pub numeric_value: Option<f64>,
    pub verdict: Option<String>,
}

/// The request echoed at the top of JSON output.
#[derive(Debug, Clone)]
pub struct Query(Map<String, Value>);

impl Query {
    pub fn new(command: &str, family: &Family) -> Self {
        let mut m = Map::new();
        m.insert("command".into(), command.into());
        m.insert("family".into(), family.name().into());
        m.insert(
            "a".into(),
            family.param().map_or(Value::Null, |a| to_ratio_string(a).into()),
        );
        Self(m)
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.0.insert(key.into(), value.into());
        self
    }
}

pub fn write_records(
    out: &mut impl Write,
    format: Format,
    query: &Query,
    records: &[OutputRecord],
) -> io::Result<()> {
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                query: &'a Map<String, Value>,
                records: &'a [OutputRecord],
            }
            let doc = Doc {
                query: &query.0,
                records,
            };
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(&mut *out);
            for r in records {
                w.serialize(r)?;
            }
            if records.is_empty() {
                w.write_record([
                    "family",
                    "n",
                    "a",
                    "exact_coefficient",
                    "constant_tag",
                    "numeric_value",
                    "verdict",
                ])?;
            }
            w.flush()
        }
    }
}
