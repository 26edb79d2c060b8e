//! Instance documents, certificates and verdict output.
//!
//! Instance grammar (after dropping blank lines and lines whose first
//! non-blank byte is `#`):
//!
//! ```text
//! polyfeas 1
//! <m> <n>
//! <n rationals>      (m lines, row i of A)
//! <m rationals>      (b)
//! ```
//!
//! Fields are separated by runs of spaces or tabs. Rendering is canonical:
//! single spaces, reduced rationals, one trailing newline.

use serde::Serialize;

use crate::arith::{RMatrix, RVector, Rational};
use crate::decide::{Certificate, Status, Verdict};
use crate::error::{Error, ParseError};
use crate::model::FeasibilityInstance;

pub const HEADER: &str = "polyfeas 1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum VerdictFormat {
    #[default]
    Text,
    Json,
}

struct Token<'a> {
    column: usize,
    text: &'a str,
}

struct Line<'a> {
    number: usize,
    end_column: usize,
    tokens: Vec<Token<'a>>,
}

fn perr(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

fn decode(bytes: &[u8]) -> Result<&str, ParseError> {
    std::str::from_utf8(bytes).map_err(|e| {
        let good = &bytes[..e.valid_up_to()];
        let line = 1 + good.iter().filter(|&&b| b == b'\n').count();
        let line_start = good.iter().rposition(|&b| b == b'\n').map_or(0, |p| p + 1);
        perr(line, good.len() - line_start + 1, "invalid UTF-8")
    })
}

/// Tokenized non-blank, non-comment lines.
fn content_lines(text: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (idx, raw) in text.split('\n').enumerate() {
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        let mut tokens = Vec::new();
        let mut start = None;
        for (i, ch) in raw.char_indices() {
            if ch == ' ' || ch == '\t' {
                if let Some(s) = start.take() {
                    tokens.push(Token {
                        column: s + 1,
                        text: &raw[s..i],
                    });
                }
            } else if start.is_none() {
                start = Some(i);
            }
        }
        if let Some(s) = start {
            tokens.push(Token {
                column: s + 1,
                text: &raw[s..],
            });
        }
        if tokens.is_empty() || tokens[0].text.starts_with('#') {
            continue;
        }
        out.push(Line {
            number: idx + 1,
            end_column: raw.len() + 1,
            tokens,
        });
    }
    out
}

fn parse_token(line: &Line<'_>, tok: &Token<'_>) -> Result<Rational, ParseError> {
    tok.text.parse::<Rational>().map_err(|e| {
        let msg = match e {
            Error::ZeroDenominator => format!("zero denominator in {:?}", tok.text),
            _ => format!("invalid rational {:?}", tok.text),
        };
        perr(line.number, tok.column, msg)
    })
}

fn expect_count(line: &Line<'_>, count: usize, what: &str) -> Result<(), ParseError> {
    match line.tokens.len().cmp(&count) {
        std::cmp::Ordering::Equal => Ok(()),
        std::cmp::Ordering::Greater => Err(perr(
            line.number,
            line.tokens[count].column,
            format!(
                "expected {count} tokens for {what}, found {}",
                line.tokens.len()
            ),
        )),
        std::cmp::Ordering::Less => Err(perr(
            line.number,
            line.end_column,
            format!(
                "expected {count} tokens for {what}, found {}",
                line.tokens.len()
            ),
        )),
    }
}

fn parse_dim(line: &Line<'_>, tok: &Token<'_>, name: &str) -> Result<usize, ParseError> {
    if !tok.text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(perr(
            line.number,
            tok.column,
            format!("{name} must be a decimal integer"),
        ));
    }
    match tok.text.parse::<usize>() {
        Ok(0) => Err(perr(
            line.number,
            tok.column,
            format!("{name} must be at least 1"),
        )),
        Ok(v) => Ok(v),
        Err(_) => Err(perr(
            line.number,
            tok.column,
            format!("{name} is out of range"),
        )),
    }
}

/// Parses an instance document, normalizing every rational.
pub fn parse_instance(bytes: &[u8]) -> Result<FeasibilityInstance, ParseError> {
    let text = decode(bytes)?;
    let lines = content_lines(text);
    let eof_line = text.split('\n').count();
    let mut it = lines.iter();

    let header = it
        .next()
        .ok_or_else(|| perr(1, 1, "missing header \"polyfeas 1\""))?;
    let words: Vec<&str> = header.tokens.iter().map(|t| t.text).collect();
    if words != ["polyfeas", "1"] {
        return Err(perr(
            header.number,
            header.tokens[0].column,
            "missing header \"polyfeas 1\"",
        ));
    }

    let dims = it
        .next()
        .ok_or_else(|| perr(eof_line, 1, "missing dimension line"))?;
    expect_count(dims, 2, "the dimension line")?;
    let m = parse_dim(dims, &dims.tokens[0], "m")?;
    let n = parse_dim(dims, &dims.tokens[1], "n")?;

    let mut entries = Vec::with_capacity(m.saturating_mul(n).min(1 << 20));
    for i in 0..m {
        let row = it
            .next()
            .ok_or_else(|| perr(eof_line, 1, format!("missing row {} of A", i + 1)))?;
        expect_count(row, n, "a matrix row")?;
        for tok in &row.tokens {
            entries.push(parse_token(row, tok)?);
        }
    }
    let rhs = it
        .next()
        .ok_or_else(|| perr(eof_line, 1, "missing right-hand side line"))?;
    expect_count(rhs, m, "the right-hand side")?;
    let b = rhs
        .tokens
        .iter()
        .map(|t| parse_token(rhs, t))
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(extra) = it.next() {
        return Err(perr(
            extra.number,
            extra.tokens[0].column,
            "unexpected content after the right-hand side",
        ));
    }

    let a = RMatrix::new(m, n, entries).map_err(|e| perr(dims.number, 1, e.to_string()))?;
    let b = RVector::new(b).map_err(|e| perr(rhs.number, 1, e.to_string()))?;
    FeasibilityInstance::new(a, b).map_err(|e| perr(rhs.number, 1, e.to_string()))
}

fn join(values: &[Rational]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn render_instance(inst: &FeasibilityInstance) -> String {
    let mut out = format!("{HEADER}\n{} {}\n", inst.m(), inst.n());
    for row in inst.a().row_iter() {
        out.push_str(&join(row));
        out.push('\n');
    }
    out.push_str(&join(inst.b().as_slice()));
    out.push('\n');
    out
}

/// `x <r1> ... <rn>` or `farkas <r1> ... <rm>`, newline-terminated.
pub fn render_certificate(cert: &Certificate) -> String {
    match cert {
        Certificate::Witness(x) => format!("x {x}\n"),
        Certificate::Farkas(y) => format!("farkas {y}\n"),
    }
}

/// Reads the single `x ...` or `farkas ...` line of a certificate document.
///
/// Status and `value` lines of a rendered text verdict are skipped, so solve
/// output can be fed back in directly.
pub fn parse_certificate(bytes: &[u8]) -> Result<Certificate, ParseError> {
    let text = decode(bytes)?;
    let mut found: Option<(usize, Certificate)> = None;
    for line in content_lines(text) {
        let tag = line.tokens[0].text;
        if matches!(tag, "FEASIBLE" | "INFEASIBLE" | "value") {
            continue;
        }
        if tag != "x" && tag != "farkas" {
            return Err(perr(
                line.number,
                line.tokens[0].column,
                format!("unknown certificate tag {tag:?}"),
            ));
        }
        if let Some((first, _)) = found {
            return Err(perr(
                line.number,
                line.tokens[0].column,
                format!("second certificate line (first on line {first})"),
            ));
        }
        if line.tokens.len() < 2 {
            return Err(perr(
                line.number,
                line.end_column,
                "certificate has no entries",
            ));
        }
        let values = line.tokens[1..]
            .iter()
            .map(|t| parse_token(&line, t))
            .collect::<Result<Vec<_>, _>>()?;
        let v = RVector::new(values).expect("nonempty");
        let cert = if tag == "x" {
            Certificate::Witness(v)
        } else {
            Certificate::Farkas(v)
        };
        found = Some((line.number, cert));
    }
    found
        .map(|(_, c)| c)
        .ok_or_else(|| perr(text.split('\n').count(), 1, "no \"x\" or \"farkas\" line"))
}

#[derive(Serialize)]
struct VerdictJson {
    status: &'static str,
    optimal_value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    farkas: Option<Vec<String>>,
}

fn strings(v: &RVector) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// Text: status line, `value <r>`, then the certificate line.
/// JSON: one compact object with rationals as canonical strings.
/// Both end in a single newline.
pub fn render_verdict(v: &Verdict, format: VerdictFormat) -> String {
    match format {
        VerdictFormat::Text => {
            let status = match v.status {
                Status::Feasible => "FEASIBLE",
                Status::Infeasible => "INFEASIBLE",
            };
            format!(
                "{status}\nvalue {}\n{}",
                v.optimal_value,
                render_certificate(&v.certificate)
            )
        }
        VerdictFormat::Json => {
            let doc = VerdictJson {
                status: match v.status {
                    Status::Feasible => "feasible",
                    Status::Infeasible => "infeasible",
                },
                optimal_value: v.optimal_value.to_string(),
                witness: v.witness().map(strings),
                farkas: v.farkas().map(strings),
            };
            let mut s = serde_json::to_string(&doc).expect("plain struct serializes");
            s.push('\n');
            s
        }
    }
}
