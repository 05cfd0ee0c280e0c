//! The polynomial text format `p^e:c0,c1,...,cd`.
//!
//! Coefficients are listed low-degree first. Each element of `GF(p^e)` is a
//! comma-free string of exactly `e` base-p digits, most significant first:
//! the element `sum_j a_j * gen^j` is written as the digits of
//! `a_{e-1} ... a_1 a_0`. Emission and parsing are bit-exact inverses.

use crate::field::{FieldCtx, FqElem};
use crate::poly::Poly;
use crate::{AlgebraError, Result};

fn err(offset: usize, message: impl Into<String>) -> AlgebraError {
    AlgebraError::Parse {
        offset,
        message: message.into(),
    }
}

pub fn format_elem(field: &FieldCtx, x: &FqElem) -> String {
    x.coeffs()
        .iter()
        .rev()
        .map(|&d| {
            assert!(field.p() <= 10, "digit format needs p <= 10");
            char::from_digit(d as u32, 10).unwrap()
        })
        .collect()
}

pub fn format_poly(f: &Poly) -> String {
    let fld = f.field();
    let coeffs: Vec<String> = if f.is_zero() {
        vec![format_elem(fld, &fld.zero())]
    } else {
        f.coeffs().iter().map(|c| format_elem(fld, c)).collect()
    };
    format!("{}^{}:{}", fld.p(), fld.e(), coeffs.join(","))
}

pub fn parse_elem(field: &FieldCtx, s: &str, offset: usize) -> Result<FqElem> {
    if s.len() != field.e() {
        return Err(err(
            offset,
            format!("element needs exactly {} digit(s), got {:?}", field.e(), s),
        ));
    }
    let mut coeffs = vec![0u64; field.e()];
    for (i, ch) in s.chars().enumerate() {
        let d = ch
            .to_digit(10)
            .ok_or_else(|| err(offset + i, format!("bad digit {ch:?}")))? as u64;
        if d >= field.p() {
            return Err(err(offset + i, format!("digit {d} out of range for p = {}", field.p())));
        }
        coeffs[field.e() - 1 - i] = d;
    }
    Ok(field.from_coeffs(&coeffs))
}

/// Parse `p^e:c0,c1,...,cd`. Whitespace around the separators is accepted.
/// The returned polynomial lives in a freshly created base field
/// `GF(p^e)`; callers needing a specific Frobenius base should parse with
/// [`parse_poly_in`].
pub fn parse_poly(s: &str) -> Result<(FieldCtx, Poly)> {
    let (field, rest, off) = parse_header(s)?;
    let poly = parse_body(&field, rest, off)?;
    Ok((field, poly))
}

/// Parse the coefficient list of `p^e:...` into an existing field
/// (which must have matching `p` and `e`).
pub fn parse_poly_in(field: &FieldCtx, s: &str) -> Result<Poly> {
    let (head, rest, off) = parse_header_raw(s)?;
    if head != (field.p(), field.e()) {
        return Err(err(
            0,
            format!(
                "header {}^{} does not match field GF({}^{})",
                head.0,
                head.1,
                field.p(),
                field.e()
            ),
        ));
    }
    parse_body(field, rest, off)
}

fn parse_header_raw(s: &str) -> Result<((u64, usize), &str, usize)> {
    let caret = s.find('^').ok_or_else(|| err(0, "expected p^e:..."))?;
    let colon = s.find(':').ok_or_else(|| err(0, "expected ':' after p^e"))?;
    if colon < caret {
        return Err(err(colon, "':' before '^'"));
    }
    let p: u64 = s[..caret]
        .trim()
        .parse()
        .map_err(|_| err(0, format!("bad prime {:?}", &s[..caret])))?;
    let e: usize = s[caret + 1..colon]
        .trim()
        .parse()
        .map_err(|_| err(caret + 1, format!("bad degree {:?}", &s[caret + 1..colon])))?;
    Ok(((p, e), &s[colon + 1..], colon + 1))
}

fn parse_header(s: &str) -> Result<(FieldCtx, &str, usize)> {
    let ((p, e), rest, off) = parse_header_raw(s)?;
    let field = FieldCtx::base(p, e)?;
    Ok((field, rest, off))
}

fn parse_body(field: &FieldCtx, rest: &str, off: usize) -> Result<Poly> {
    let mut coeffs = vec![];
    let mut pos = off;
    for piece in rest.split(',') {
        let trimmed = piece.trim();
        let lead = piece.len() - piece.trim_start().len();
        coeffs.push(parse_elem(field, trimmed, pos + lead)?);
        pos += piece.len() + 1;
    }
    Ok(Poly::new(field, coeffs))
}
