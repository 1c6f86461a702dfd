use anyhow::Result;
use clap::ValueEnum;
use serde_json::Value;
use std::io::Write;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Debug, Default)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Table { headers: headers.iter().map(|h| h.to_string()).collect(), rows: Vec::new() }
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.headers)?;
        for r in &self.rows {
            w.write_record(r)?;
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|r| Value::Object(self.headers.iter().cloned().zip(r.iter().map(|c| Value::String(c.clone()))).collect()))
                .collect(),
        )
    }
}

/// What a command produced, and whether every comparison in it passed.
pub struct Report {
    pub value: Value,
    pub table: Option<Table>,
    pub ok: bool,
}

impl Report {
    pub fn new(value: Value) -> Self {
        Report { value, table: None, ok: true }
    }

    pub fn render(&self, format: Format) -> Result<String> {
        Ok(match format {
            Format::Json => serde_json::to_string(&self.value)? + "\n",
            Format::Pretty => serde_json::to_string_pretty(&self.value)? + "\n",
            Format::Csv => match &self.table {
                Some(t) => t.to_csv()?,
                None => key_value_table(&self.value).to_csv()?,
            },
        })
    }

    pub fn emit(&self, format: Format) -> Result<()> {
        let text = self.render(format)?;
        let mut out = std::io::stdout().lock();
        out.write_all(text.as_bytes())?;
        out.flush()?;
        Ok(())
    }
}

fn key_value_table(v: &Value) -> Table {
    let mut t = Table::new(&["key", "value"]);
    if let Value::Object(m) = v {
        for (k, x) in m {
            let s = match x {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            t.rows.push(vec![k.clone(), s]);
        }
    }
    t
}

pub fn status(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}
