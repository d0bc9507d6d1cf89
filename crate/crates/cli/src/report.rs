use std::io::Write;

use clap::ValueEnum;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// A command result ready for any of the three output formats.
pub struct Report {
    pub json: Value,
    pub header: Vec<&'static str>,
    pub records: Vec<Vec<String>>,
    /// Overrides the default aligned table for text output.
    pub text: Option<String>,
    /// `false` when a verification inside the command failed.
    pub ok: bool,
}

impl Report {
    pub fn new(json: Value, header: Vec<&'static str>, records: Vec<Vec<String>>) -> Self {
        Self {
            json,
            header,
            records,
            text: None,
            ok: true,
        }
    }

    pub fn with_text(mut self, text: String) -> Self {
        self.text = Some(text);
        self
    }

    pub fn with_ok(mut self, ok: bool) -> Self {
        self.ok = ok;
        self
    }

    pub fn write<W: Write>(&self, format: Format, out: W) -> std::io::Result<()> {
        match format {
            Format::Json => {
                let mut out = out;
                serde_json::to_writer(&mut out, &self.json)?;
                writeln!(out)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.header)?;
                for r in &self.records {
                    w.write_record(r)?;
                }
                w.flush()
            }
            Format::Text => {
                let mut out = out;
                match &self.text {
                    Some(t) => write!(out, "{t}"),
                    None => write!(out, "{}", table(&self.header, &self.records)),
                }
            }
        }
    }
}

/// Left-aligned columns separated by two spaces.
pub fn table(header: &[&str], records: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in records {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut s = line(header.to_vec());
    for r in records {
        s += &line(r.iter().map(String::as_str).collect());
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aligned_table() {
        let t = table(
            &["n", "value"],
            &[
                vec!["1".into(), "10".into()],
                vec!["12".into(), "924".into()],
            ],
        );
        assert_eq!(t, "n   value\n1   10\n12  924\n");
    }

    #[test]
    fn csv_output() {
        let r = Report::new(
            Value::Null,
            vec!["size", "representative"],
            vec![vec!["4".into(), "{1,2}".into()]],
        );
        let mut buf = Vec::new();
        r.write(Format::Csv, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "size,representative\n4,\"{1,2}\"\n"
        );
    }
}
