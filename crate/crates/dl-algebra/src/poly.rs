//! Dense univariate polynomials over a [`FieldCtx`], low-degree first.

use crate::field::{FieldCtx, FieldEmbedding, FqElem};
use std::fmt;

/// A polynomial over a finite field. Coefficients are stored low-degree
/// first with no trailing zeros; the zero polynomial has an empty vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldCtx,
    coeffs: Vec<FqElem>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if self.field.is_zero(c) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{:?}*L^{}", c.coeffs(), i)?;
        }
        Ok(())
    }
}

impl Poly {
    pub fn new(field: &FieldCtx, mut coeffs: Vec<FqElem>) -> Poly {
        while coeffs.last().map(|c| field.is_zero(c)).unwrap_or(false) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &FieldCtx) -> Poly {
        Poly::new(field, vec![])
    }

    pub fn one(field: &FieldCtx) -> Poly {
        Poly::new(field, vec![field.one()])
    }

    pub fn constant(field: &FieldCtx, c: FqElem) -> Poly {
        Poly::new(field, vec![c])
    }

    /// The monomial `lambda`.
    pub fn lambda(field: &FieldCtx) -> Poly {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    /// `lambda - r`.
    pub fn lambda_minus(field: &FieldCtx, r: &FqElem) -> Poly {
        Poly::new(field, vec![field.neg(r), field.one()])
    }

    /// Lift a GF(p)-coefficient vector (little-endian) into this field.
    pub fn from_fp_coeffs(field: &FieldCtx, coeffs: &[u64]) -> Poly {
        Poly::new(
            field,
            coeffs.iter().map(|&c| field.from_u64(c)).collect(),
        )
    }

    pub fn from_i64_coeffs(field: &FieldCtx, coeffs: &[i64]) -> Poly {
        Poly::new(
            field,
            coeffs.iter().map(|&c| field.from_i64(c)).collect(),
        )
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.coeffs
    }

    /// Coefficient of `lambda^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> FqElem {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == self.field.one()
    }

    /// Degree; the zero polynomial has degree 0 by convention used here only
    /// for display. Callers must check `is_zero` first where it matters.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> FqElem {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.leading() == self.field.one()
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = self.field.inv(&self.leading());
        self.scale(&inv)
    }

    pub fn scale(&self, k: &FqElem) -> Poly {
        Poly::new(
            &self.field,
            self.coeffs.iter().map(|c| self.field.mul(c, k)).collect(),
        )
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(f.add(&self.coeff(i), &other.coeff(i)));
        }
        Poly::new(f, out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(f.sub(&self.coeff(i), &other.coeff(i)));
        }
        Poly::new(f, out)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Poly::zero(f);
        }
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        Poly::new(f, out)
    }

    pub fn pow(&self, n: usize) -> Poly {
        let mut result = Poly::one(&self.field);
        for _ in 0..n {
            result = result.mul(self);
        }
        result
    }

    /// Quotient and remainder; divisor must be nonzero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let f = &self.field;
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() || self.degree() < divisor.degree() {
            return (Poly::zero(f), self.clone());
        }
        let lead_inv = f.inv(&divisor.leading());
        let mut rem = self.coeffs.clone();
        let qlen = self.degree() - divisor.degree() + 1;
        let mut quot = vec![f.zero(); qlen];
        for k in (0..qlen).rev() {
            let top = rem[k + divisor.degree()].clone();
            if f.is_zero(&top) {
                continue;
            }
            let c = f.mul(&top, &lead_inv);
            quot[k] = c.clone();
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let idx = k + j;
                rem[idx] = f.sub(&rem[idx], &f.mul(&c, d));
            }
        }
        (Poly::new(f, quot), Poly::new(f, rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.div_rem(divisor).1
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Poly) -> Poly {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).is_zero()
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        if self.coeffs.len() <= 1 {
            return Poly::zero(f);
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(f.scale(c, i as u64));
        }
        Poly::new(f, out)
    }

    pub fn eval(&self, x: &FqElem) -> FqElem {
        let f = &self.field;
        let mut acc = f.zero();
        for c in self.coeffs.iter().rev() {
            acc = f.add(&f.mul(&acc, x), c);
        }
        acc
    }

    /// `self^exp mod m` by square-and-multiply.
    pub fn pow_mod(&self, mut exp: u128, m: &Poly) -> Poly {
        let mut result = Poly::one(&self.field);
        let mut b = self.rem(m);
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(&b).rem(m);
            }
            b = b.mul(&b).rem(m);
            exp >>= 1;
        }
        result
    }

    /// Map coefficients through a field embedding.
    pub fn map_field(&self, emb: &FieldEmbedding) -> Poly {
        Poly::new(
            emb.to_ctx(),
            self.coeffs.iter().map(|c| emb.apply(c)).collect(),
        )
    }

    /// Pull coefficients back along an embedding; `None` if any coefficient
    /// lies outside the subfield.
    pub fn pullback_field(&self, emb: &FieldEmbedding) -> Option<Poly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(emb.pullback(c)?);
        }
        Some(Poly::new(emb.from_ctx(), out))
    }

    /// Apply the q-power Frobenius to every coefficient.
    pub fn map_frobenius(&self, steps: usize) -> Poly {
        Poly::new(
            &self.field,
            self.coeffs
                .iter()
                .map(|c| self.field.frobenius(c, steps))
                .collect(),
        )
    }

    /// Deterministic total order key: (degree, coefficients from the top down
    /// by element value). Used for canonical sorting of factors.
    pub fn order_key(&self) -> (usize, Vec<u128>) {
        let p = self.field.p();
        (
            self.coeffs.len(),
            self.coeffs.iter().rev().map(|c| c.value_key(p)).collect(),
        )
    }

    /// Product of monic linear factors over the given roots.
    pub fn from_roots(field: &FieldCtx, roots: &[FqElem]) -> Poly {
        let mut acc = Poly::one(field);
        for r in roots {
            acc = acc.mul(&Poly::lambda_minus(field, r));
        }
        acc
    }
}
