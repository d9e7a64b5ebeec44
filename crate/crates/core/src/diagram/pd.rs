use std::str::FromStr;

use thiserror::Error;

use super::{Crossing, DiagramError, PlanarDiagram};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("syntax error at line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

/// Parses one `X a,b,c,d` line. Columns are 1-based.
fn parse_line(line_no: usize, line: &str) -> Result<Crossing, ParseError> {
    let body = line.trim_start();
    let indent = line.len() - body.len();
    let rest = body
        .strip_prefix('X')
        .ok_or_else(|| ParseError::new(line_no, indent + 1, "expected `X`"))?;
    if !rest.starts_with([' ', '\t']) {
        return Err(ParseError::new(
            line_no,
            indent + 2,
            "expected whitespace after `X`",
        ));
    }
    let mut labels = [0u32; 4];
    let mut count = 0;
    let mut col = indent + 2;
    for field in rest.split(',') {
        let trimmed = field.trim();
        let lead = field.len() - field.trim_start().len();
        if count == 4 {
            return Err(ParseError::new(line_no, col + lead, "more than four labels"));
        }
        if trimmed.is_empty() || !trimmed.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseError::new(
                line_no,
                col + lead,
                format!("expected a positive integer label, found `{trimmed}`"),
            ));
        }
        let value: u32 = trimmed
            .parse()
            .map_err(|_| ParseError::new(line_no, col + lead, "label out of range"))?;
        if value == 0 {
            return Err(ParseError::new(line_no, col + lead, "labels start at 1"));
        }
        labels[count] = value;
        count += 1;
        col += field.len() + 1;
    }
    if count != 4 {
        return Err(ParseError::new(
            line_no,
            line.len() + 1,
            format!("expected four labels, found {count}"),
        ));
    }
    Ok(Crossing { slots: labels })
}

/// Parses PD text into crossings without the arity check. Comment lines
/// start with `#`; blank lines are ignored.
pub(crate) fn parse_crossings(text: &str) -> Result<Vec<Crossing>, ParseError> {
    let mut crossings = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        crossings.push(parse_line(i + 1, line.trim_end_matches('\r'))?);
    }
    if crossings.is_empty() {
        return Err(ParseError::new(1, 1, "no crossings"));
    }
    Ok(crossings)
}

impl PlanarDiagram {
    /// Parses the PD text format.
    pub fn parse_pd(text: &str) -> Result<PlanarDiagram, DiagramError> {
        PlanarDiagram::from_crossings(parse_crossings(text)?)
    }

    /// Canonical PD text: one crossing per line, LF terminated.
    pub fn to_pd_string(&self) -> String {
        self.to_string()
    }
}

impl FromStr for PlanarDiagram {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PlanarDiagram::parse_pd(s)
    }
}
