//! CSV emission with reproducibility headers.
//!
//! Every output file starts with `#`-prefixed metadata lines carrying the
//! artifact version and the full effective configuration, followed by a
//! stable header row. Floats are printed with 17 significant digits so a
//! reparse recovers them bit-exactly.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

pub struct Report {
    next: Box<dyn Write>,
    buf: String,
}

impl Report {
    pub fn to_file(path: &Path) -> io::Result<Report> {
        Ok(Report {
            next: Box::new(BufWriter::new(File::create(path)?)),
            buf: String::new(),
        })
    }

    pub fn to_stdout() -> Report {
        Report {
            next: Box::new(io::stdout()),
            buf: String::new(),
        }
    }

    /// Writes the metadata preamble: artifact version plus one line per
    /// configuration entry.
    pub fn preamble(&mut self, command: &str, entries: &[(&str, String)]) -> io::Result<()> {
        writeln!(self.next, "# wpbench {}", env!("CARGO_PKG_VERSION"))?;
        writeln!(self.next, "# command={command}")?;
        for (key, value) in entries {
            writeln!(self.next, "# {key}={value}")?;
        }
        Ok(())
    }

    pub fn comment(&mut self, text: &str) -> io::Result<()> {
        writeln!(self.next, "# {text}")
    }

    pub fn header(&mut self, columns: &[&str]) -> io::Result<()> {
        writeln!(self.next, "{}", columns.join(","))
    }

    /// Writes one row; [`Field`] values format themselves.
    pub fn row(&mut self, fields: &[Field]) -> io::Result<()> {
        self.buf.clear();
        for (i, f) in fields.iter().enumerate() {
            if i > 0 {
                self.buf.push(',');
            }
            match f {
                Field::Float(x) => {
                    let _ = write!(self.buf, "{x:.16e}");
                }
                Field::Int(x) => {
                    let _ = write!(self.buf, "{x}");
                }
                Field::Text(s) => self.buf.push_str(s),
            }
        }
        writeln!(self.next, "{}", self.buf)
    }

    pub fn flush(&mut self) -> io::Result<()> {
        self.next.flush()
    }
}

pub enum Field<'a> {
    Float(f64),
    Int(i64),
    Text(&'a str),
}

/// Reads a numeric CSV, skipping `#` comments and an optional header row.
pub fn read_numeric_csv(path: &Path) -> io::Result<Vec<Vec<f64>>> {
    let text = std::fs::read_to_string(path)?;
    let mut rows = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parsed: Option<Vec<f64>> = line
            .split(',')
            .map(|t| t.trim().parse::<f64>().ok())
            .collect();
        match parsed {
            Some(v) if !v.is_empty() => rows.push(v),
            // a non-numeric line is the header
            _ => continue,
        }
    }
    Ok(rows)
}
