//! Text formats: monomials, ideal files, and survey tables.
//!
//! Monomials are written either as products `x1^2*x2*x3` (or `1`) or as
//! exponent vectors `[2,1,1]`; a leading `[` selects the vector form.
//! Ideal files start with `n=<int>` followed by one generator per line;
//! `#` starts a comment.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exponent::ExponentVector;
use crate::ideal::MonomialIdeal;
use crate::oracle::SurveyRow;

/// Parses a monomial. `n` is required for product syntax and, when given,
/// must match the length of a vector.
pub fn parse_monomial(text: &str, n: Option<usize>) -> Result<ExponentVector> {
    let s = text.trim();
    let v = if s.starts_with('[') {
        parse_vector(s)?
    } else {
        let n = n.ok_or_else(|| {
            Error::Parse(format!(
                "product form `{s}` needs a known number of variables"
            ))
        })?;
        parse_product(s, n)?
    };
    if let Some(n) = n {
        if v.n() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: v.n(),
            });
        }
    }
    Ok(v)
}

fn parse_vector(s: &str) -> Result<ExponentVector> {
    let inner = s
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("malformed exponent vector `{s}`")))?;
    let exps = inner
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|e| Error::Parse(format!("bad exponent `{}` in `{s}`: {e}", t.trim())))
        })
        .collect::<Result<Vec<_>>>()?;
    ExponentVector::new(exps)
}

fn parse_product(s: &str, n: usize) -> Result<ExponentVector> {
    if n == 0 {
        return Err(Error::Parse("number of variables must be positive".into()));
    }
    let mut exps = vec![0u64; n];
    if s == "1" {
        return ExponentVector::new(exps);
    }
    for factor in s.split('*') {
        let factor = factor.trim();
        let body = factor.strip_prefix('x').ok_or_else(|| {
            Error::Parse(format!("factor `{factor}` must look like x<i> or x<i>^<e>"))
        })?;
        let (idx, exp) = match body.split_once('^') {
            Some((i, e)) => (
                i,
                e.trim()
                    .parse::<u64>()
                    .map_err(|err| Error::Parse(format!("bad exponent in `{factor}`: {err}")))?,
            ),
            None => (body, 1),
        };
        let idx: usize = idx
            .trim()
            .parse()
            .map_err(|err| Error::Parse(format!("bad variable index in `{factor}`: {err}")))?;
        if idx == 0 || idx > n {
            return Err(Error::Parse(format!(
                "variable x{idx} out of range 1..={n}"
            )));
        }
        exps[idx - 1] = exps[idx - 1].checked_add(exp).ok_or(Error::Overflow)?;
    }
    ExponentVector::new(exps)
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#')
        .map_or(line, |(before, _)| before)
        .trim()
}

/// Parses an ideal file. Generators need not be minimal or sorted.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let mut lines = text.lines().map(strip_comment).filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("ideal file is empty; expected `n=<int>`".into()))?;
    let n: usize = header
        .strip_prefix("n=")
        .and_then(|v| v.trim().parse().ok())
        .filter(|&n| n >= 1)
        .ok_or_else(|| Error::Parse(format!("expected header `n=<int>`, got `{header}`")))?;
    let gens = lines
        .map(|l| parse_monomial(l, Some(n)))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::from_generators(n, gens)
}

/// Ideal file text, generators in canonical order.
pub fn write_ideal(ideal: &MonomialIdeal) -> String {
    ideal.to_string()
}

#[derive(Serialize)]
struct CsvRow<'a> {
    n: usize,
    m: u64,
    d_min: u64,
    paper_bound: u64,
    els_bound: u64,
    witness: &'a str,
}

/// CSV with header `n,m,d_min,paper_bound,els_bound,witness`.
pub fn survey_csv(rows: &[SurveyRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        let witness = r
            .witness
            .as_ref()
            .map(ToString::to_string)
            .unwrap_or_default();
        w.serialize(CsvRow {
            n: r.n,
            m: r.m,
            d_min: r.d_min,
            paper_bound: r.paper_bound,
            els_bound: r.els_bound,
            witness: &witness,
        })
        .map_err(|e| Error::Internal(format!("csv encoding failed: {e}")))?;
    }
    if rows.is_empty() {
        w.write_record(["n", "m", "d_min", "paper_bound", "els_bound", "witness"])
            .map_err(|e| Error::Internal(format!("csv encoding failed: {e}")))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Internal(format!("csv encoding failed: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
}

/// JSON array of row objects; `witness` is an exponent array or `null`.
pub fn survey_json(rows: &[SurveyRow]) -> Result<String> {
    let mut s = serde_json::to_string_pretty(rows)
        .map_err(|e| Error::Internal(format!("json encoding failed: {e}")))?;
    s.push('\n');
    Ok(s)
}
