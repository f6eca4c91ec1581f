//! Output collected by a command, rendered as human text or TSV.

use std::fmt::Write as _;

use semidual_core::graded::{CheckReport, Status};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Human,
    Tsv,
}

enum Entry {
    Pair(String, String),
    Text(String),
    Tsv(String, String),
    Raw(String),
}

/// Ordered report lines plus the overall verdict.
#[derive(Default)]
pub struct Report {
    entries: Vec<Entry>,
    pub failed: bool,
}

impl Report {
    /// `key: value` for humans, `key<TAB>value` for scripts.
    pub fn pair(&mut self, key: impl Into<String>, value: impl ToString) {
        self.entries.push(Entry::Pair(key.into(), value.to_string()));
    }

    /// Free-form human text; omitted from TSV output.
    pub fn text(&mut self, text: impl Into<String>) {
        self.entries.push(Entry::Text(text.into()));
    }

    /// A key-value line that only appears in TSV output.
    pub fn tsv(&mut self, key: impl Into<String>, value: impl ToString) {
        self.entries.push(Entry::Tsv(key.into(), value.to_string()));
    }

    /// Text emitted verbatim in every format.
    pub fn raw(&mut self, text: impl Into<String>) {
        self.entries.push(Entry::Raw(text.into()));
    }

    /// A `verified`-style line: OK or FAIL.
    pub fn verdict(&mut self, key: &str, ok: bool) {
        self.pair(key, if ok { "OK" } else { "FAIL" });
        self.failed |= !ok;
    }

    pub fn checks(&mut self, prefix: &str, report: &CheckReport) {
        for line in &report.lines {
            let mut value = line.status.to_string();
            if let Some(d) = &line.detail {
                value.push(' ');
                value.push_str(d);
            }
            self.pair(format!("{prefix} {}", line.name), value);
            self.failed |= line.status == Status::Fail;
        }
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        for e in &self.entries {
            match (e, format) {
                (Entry::Pair(k, v), Format::Human) => writeln!(out, "{k}: {v}").unwrap(),
                (Entry::Pair(k, v), Format::Tsv) => writeln!(out, "{k}\t{v}").unwrap(),
                (Entry::Text(t), Format::Human) | (Entry::Raw(t), _) => {
                    out.push_str(t);
                    if !t.ends_with('\n') {
                        out.push('\n');
                    }
                }
                (Entry::Tsv(k, v), Format::Tsv) => writeln!(out, "{k}\t{v}").unwrap(),
                (Entry::Text(_), Format::Tsv) | (Entry::Tsv(..), Format::Human) => {}
            }
        }
        out
    }
}
