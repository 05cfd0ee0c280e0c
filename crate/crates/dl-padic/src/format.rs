//! Text I/O for pi-adic matrices and vectors.
//!
//! An entry is written as base-p digits of each power-basis coordinate,
//! least significant first, with coordinates separated by `|` and a
//! trailing precision marker: `1,0,2@8` (a Z_p entry known mod p^8) or
//! `1,0|2,1@8` (a quadratic-ring entry). Matrix rows are separated by `;`
//! or newlines, entries by whitespace.

use crate::matrix::PMatrix;
use crate::ring::{PadicCtx, PadicElem};
use crate::{PadicError, Result};
use num_bigint::BigUint;
use num_traits::Zero;

pub fn format_elem(ctx: &PadicCtx, x: &PadicElem) -> String {
    let p = BigUint::from(ctx.p());
    let coords: Vec<String> = x
        .coords
        .iter()
        .map(|c| {
            let mut digits = vec![];
            let mut rest = c.clone();
            for _ in 0..x.prec {
                digits.push((&rest % &p).to_string());
                rest /= &p;
            }
            digits.join(",")
        })
        .collect();
    format!("{}@{}", coords.join("|"), x.prec)
}

pub fn parse_elem(ctx: &PadicCtx, s: &str) -> Result<PadicElem> {
    let (body, prec_str) = s
        .rsplit_once('@')
        .ok_or_else(|| PadicError::BadParameter(format!("missing @precision in {s:?}")))?;
    let prec: usize = prec_str
        .parse()
        .map_err(|_| PadicError::BadParameter(format!("bad precision {prec_str:?}")))?;
    if prec > ctx.precision() {
        return Err(PadicError::BadParameter(format!(
            "precision {prec} exceeds the ring precision {}",
            ctx.precision()
        )));
    }
    let coord_parts: Vec<&str> = body.split('|').collect();
    if coord_parts.len() != ctx.e() {
        return Err(PadicError::BadParameter(format!(
            "entry has {} coordinate(s), ring needs {}",
            coord_parts.len(),
            ctx.e()
        )));
    }
    let p = BigUint::from(ctx.p());
    let mut coords = vec![];
    for part in coord_parts {
        let mut acc = BigUint::zero();
        let mut scale = BigUint::from(1u32);
        for digit in part.split(',') {
            let d: u64 = digit
                .trim()
                .parse()
                .map_err(|_| PadicError::BadParameter(format!("bad digit {digit:?}")))?;
            if d >= ctx.p() {
                return Err(PadicError::BadParameter(format!(
                    "digit {d} out of range for p = {}",
                    ctx.p()
                )));
            }
            acc += &scale * BigUint::from(d);
            scale *= &p;
        }
        coords.push(acc);
    }
    Ok(PadicElem { coords, prec })
}

pub fn format_matrix(ctx: &PadicCtx, m: &PMatrix) -> String {
    (0..m.rows)
        .map(|i| {
            (0..m.cols)
                .map(|j| format_elem(ctx, m.at(i, j)))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join(";\n")
}

pub fn parse_matrix(ctx: &PadicCtx, s: &str) -> Result<PMatrix> {
    let mut rows: Vec<Vec<PadicElem>> = vec![];
    for line in s.split(|c| c == ';' || c == '\n') {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut row = vec![];
        for tok in line.split_whitespace() {
            row.push(parse_elem(ctx, tok)?);
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(PadicError::BadParameter("empty matrix".into()));
    }
    let w = rows[0].len();
    if rows.iter().any(|r| r.len() != w) {
        return Err(PadicError::BadParameter("ragged matrix rows".into()));
    }
    let mut m = PMatrix::zero(ctx, rows.len(), w);
    for (i, row) in rows.into_iter().enumerate() {
        for (j, v) in row.into_iter().enumerate() {
            m.set(i, j, v);
        }
    }
    Ok(m)
}

pub fn parse_vector(ctx: &PadicCtx, s: &str) -> Result<Vec<PadicElem>> {
    let mut out = vec![];
    for tok in s.split_whitespace() {
        out.push(parse_elem(ctx, tok)?);
    }
    if out.is_empty() {
        return Err(PadicError::BadParameter("empty vector".into()));
    }
    Ok(out)
}
