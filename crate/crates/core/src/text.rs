//! Positioned diagnostics shared by the text-format parsers.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    /// 1-based line number.
    pub line: usize,
    /// 1-based column number.
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError { line, column, message: message.into() }
    }
}

/// Non-blank lines with comments stripped, as `(line number, text)`.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            None
        } else {
            Some((i + 1, body))
        }
    })
}

/// 1-based column of `needle` inside `line`, assuming it is a subslice.
pub(crate) fn column_of(line: &str, needle: &str) -> usize {
    let offset = needle.as_ptr() as usize - line.as_ptr() as usize;
    line[..offset.min(line.len())].chars().count() + 1
}
