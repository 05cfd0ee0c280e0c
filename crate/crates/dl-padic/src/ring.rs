//! Fixed-precision unramified pi-adic coefficient rings.
//!
//! Elements live in `O/pi^N` where `O` is the ring of integers of an
//! unramified extension (the uniformizer is `p` itself). Every element
//! carries the number of digits actually known; ring operations propagate
//! worst-case precision, and divisions that cannot be certified fail loudly
//! instead of rounding.

use crate::{PadicError, Result};
use dl_algebra::{FieldCtx, FqElem};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::fmt;
use std::sync::Arc;

#[derive(Debug)]
struct CtxInner {
    p: u64,
    /// Residue degree of the fixed field F: `q = p^f0`.
    f0: usize,
    /// Ring degree over Z_p: `f0` for the orthogonal setting, `2 f0` for
    /// the unitary one.
    e: usize,
    precision: usize,
    pn: BigUint,
    /// Monic lift of the canonical residue modulus, digits 0..p.
    modulus: Vec<BigUint>,
    residue_field: FieldCtx,
    /// Whether the ring carries the conjugation over F.
    unitary: bool,
    /// Image of the power-basis generator under the conjugation lift
    /// (identity when not unitary), as power-basis coordinates.
    conj_gen: Vec<BigUint>,
}

/// An unramified pi-adic coefficient ring at fixed precision.
#[derive(Clone)]
pub struct PadicCtx {
    inner: Arc<CtxInner>,
}

/// A ring element: power-basis coordinates, each reduced mod `p^prec`,
/// together with the number of certified digits.
#[derive(Clone, PartialEq, Eq)]
pub struct PadicElem {
    pub coords: Vec<BigUint>,
    pub prec: usize,
}

impl fmt::Debug for PadicElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Padic{:?}@{}", self.coords, self.prec)
    }
}

impl fmt::Debug for PadicCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "O(p={}, e={}, N={}{})",
            self.inner.p,
            self.inner.e,
            self.inner.precision,
            if self.inner.unitary { ", unitary" } else { "" }
        )
    }
}

fn biguint_pow(p: u64, k: usize) -> BigUint {
    let mut acc = BigUint::one();
    for _ in 0..k {
        acc *= p;
    }
    acc
}

impl PadicCtx {
    /// The ring `O_E` for the unitary setting: `E/F` unramified quadratic,
    /// residue field `GF(q^2)` with `q = p^f0`.
    pub fn unitary(p: u64, f0: usize, precision: usize) -> Result<PadicCtx> {
        Self::build(p, f0, 2 * f0, precision, true)
    }

    /// The ring `Z_p`-of-`F` for the orthogonal setting (residue `GF(p^f0)`;
    /// the applications use `f0 = 1`).
    pub fn orthogonal(p: u64, f0: usize, precision: usize) -> Result<PadicCtx> {
        Self::build(p, f0, f0, precision, false)
    }

    fn build(p: u64, f0: usize, e: usize, precision: usize, unitary: bool) -> Result<PadicCtx> {
        if precision < 2 {
            return Err(PadicError::BadParameter("precision must be at least 2".into()));
        }
        if f0 == 0 || e > 16 {
            return Err(PadicError::BadParameter("residue degree out of range".into()));
        }
        // residue field with the declared Frobenius base GF(p^f0)
        let residue_field = if e == f0 {
            FieldCtx::base(p, f0).map_err(PadicError::Algebra)?
        } else {
            let base = FieldCtx::base(p, f0).map_err(PadicError::Algebra)?;
            let (ext, _) = base.extension(2).map_err(PadicError::Algebra)?;
            ext
        };
        let modulus: Vec<BigUint> = residue_field
            .modulus()
            .iter()
            .map(|&c| BigUint::from(c))
            .collect();
        let pn = biguint_pow(p, precision);
        let mut ctx = PadicCtx {
            inner: Arc::new(CtxInner {
                p,
                f0,
                e,
                precision,
                pn,
                modulus,
                residue_field,
                unitary,
                conj_gen: vec![],
            }),
        };
        if unitary {
            let conj_gen = ctx.lift_conjugation()?;
            let inner = Arc::get_mut(&mut ctx.inner).unwrap();
            inner.conj_gen = conj_gen;
        }
        Ok(ctx)
    }

    /// Newton-lift the root of the modulus that reduces to `gen^(q)`:
    /// determines the conjugation automorphism.
    fn lift_conjugation(&self) -> Result<Vec<BigUint>> {
        let rf = self.residue_field();
        let target = rf.frobenius(&rf.generator(), 1);
        // start from the digit lift of the residue root
        let mut y = self.lift_residue(&target);
        let n = self.precision();
        let mut known = 1usize;
        while known < n {
            // y <- y - m(y)/m'(y)
            let m_y = self.eval_modulus(&y);
            let mprime_y = self.eval_modulus_derivative(&y);
            let corr = self.div(&m_y, &mprime_y)?;
            y = self.sub(&y, &corr);
            known *= 2;
        }
        let check = self.eval_modulus(&y);
        if !self.is_zero_at_full_precision(&check) {
            return Err(PadicError::Internal("conjugation lift failed".into()));
        }
        Ok(y.coords)
    }

    fn eval_modulus(&self, x: &PadicElem) -> PadicElem {
        let mut acc = self.zero();
        for c in self.inner.modulus.iter().rev() {
            acc = self.mul(&acc, x);
            acc = self.add(&acc, &self.from_biguint_scalar(c.clone()));
        }
        acc
    }

    fn eval_modulus_derivative(&self, x: &PadicElem) -> PadicElem {
        let mut acc = self.zero();
        for (j, c) in self.inner.modulus.iter().enumerate().skip(1).rev() {
            acc = self.mul(&acc, x);
            acc = self.add(
                &acc,
                &self.from_biguint_scalar(c.clone() * BigUint::from(j as u64)),
            );
        }
        acc
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }
    pub fn e(&self) -> usize {
        self.inner.e
    }
    pub fn f0(&self) -> usize {
        self.inner.f0
    }
    pub fn precision(&self) -> usize {
        self.inner.precision
    }
    pub fn is_unitary(&self) -> bool {
        self.inner.unitary
    }
    pub fn residue_field(&self) -> &FieldCtx {
        &self.inner.residue_field
    }

    fn pk(&self, k: usize) -> BigUint {
        biguint_pow(self.inner.p, k)
    }

    pub fn zero(&self) -> PadicElem {
        PadicElem {
            coords: vec![BigUint::zero(); self.inner.e],
            prec: self.inner.precision,
        }
    }

    pub fn one(&self) -> PadicElem {
        let mut c = vec![BigUint::zero(); self.inner.e];
        c[0] = BigUint::one();
        PadicElem {
            coords: c,
            prec: self.inner.precision,
        }
    }

    pub fn from_u64(&self, x: u64) -> PadicElem {
        let mut c = vec![BigUint::zero(); self.inner.e];
        c[0] = BigUint::from(x) % &self.inner.pn;
        PadicElem {
            coords: c,
            prec: self.inner.precision,
        }
    }

    pub fn from_i64(&self, x: i64) -> PadicElem {
        if x >= 0 {
            self.from_u64(x as u64)
        } else {
            self.neg(&self.from_u64((-x) as u64))
        }
    }

    fn from_biguint_scalar(&self, x: BigUint) -> PadicElem {
        let mut c = vec![BigUint::zero(); self.inner.e];
        c[0] = x % &self.inner.pn;
        PadicElem {
            coords: c,
            prec: self.inner.precision,
        }
    }

    /// `p^k` as a ring element.
    pub fn pi_pow(&self, k: usize) -> PadicElem {
        self.from_biguint_scalar(self.pk(k.min(self.inner.precision)))
    }

    /// Digit lift of a residue-field element at full precision.
    pub fn lift_residue(&self, x: &FqElem) -> PadicElem {
        assert_eq!(x.field_id(), self.inner.residue_field.id());
        PadicElem {
            coords: x.coeffs().iter().map(|&c| BigUint::from(c)).collect(),
            prec: self.inner.precision,
        }
    }

    /// Reduce mod p into the residue field; requires at least one certified
    /// digit.
    pub fn residue(&self, x: &PadicElem) -> Result<FqElem> {
        if x.prec == 0 {
            return Err(PadicError::PrecisionExhausted(
                "no certified digits left for a residue".into(),
            ));
        }
        let coords: Vec<u64> = x
            .coords
            .iter()
            .map(|c| (c % self.inner.p).try_into().unwrap_or(0u64))
            .collect();
        Ok(self.inner.residue_field.from_coeffs(&coords))
    }

    fn truncate(&self, x: &mut PadicElem) {
        let modulus = self.pk(x.prec.min(self.inner.precision));
        for c in x.coords.iter_mut() {
            *c %= &modulus;
        }
    }

    pub fn add(&self, a: &PadicElem, b: &PadicElem) -> PadicElem {
        let prec = a.prec.min(b.prec);
        let mut coords: Vec<BigUint> = a
            .coords
            .iter()
            .zip(&b.coords)
            .map(|(x, y)| x + y)
            .collect();
        let modulus = self.pk(prec);
        for c in coords.iter_mut() {
            *c %= &modulus;
        }
        PadicElem { coords, prec }
    }

    pub fn neg(&self, a: &PadicElem) -> PadicElem {
        let modulus = self.pk(a.prec);
        PadicElem {
            coords: a
                .coords
                .iter()
                .map(|x| (&modulus - (x % &modulus)) % &modulus)
                .collect(),
            prec: a.prec,
        }
    }

    pub fn sub(&self, a: &PadicElem, b: &PadicElem) -> PadicElem {
        self.add(a, &self.neg(&PadicElem { coords: b.coords.clone(), prec: a.prec.min(b.prec) }))
    }

    /// Certified valuation: `Ok(v)` with `v < prec`, or `Err(prec)` when the
    /// element is indistinguishable from zero at its precision.
    pub fn valuation(&self, a: &PadicElem) -> std::result::Result<usize, usize> {
        let mut v = a.prec;
        for c in &a.coords {
            if c.is_zero() {
                continue;
            }
            let mut k = 0usize;
            let mut rest = c.clone();
            let p = BigUint::from(self.inner.p);
            while (&rest % &p).is_zero() {
                rest /= &p;
                k += 1;
            }
            v = v.min(k);
        }
        if v >= a.prec {
            Err(a.prec)
        } else {
            Ok(v)
        }
    }

    pub fn is_zero_at_full_precision(&self, a: &PadicElem) -> bool {
        a.prec >= self.inner.precision && a.coords.iter().all(|c| c.is_zero())
    }

    pub fn mul(&self, a: &PadicElem, b: &PadicElem) -> PadicElem {
        let e = self.inner.e;
        let va = self.valuation(a).unwrap_or(a.prec);
        let vb = self.valuation(b).unwrap_or(b.prec);
        let prec = (a.prec + vb).min(b.prec + va).min(self.inner.precision);
        // polynomial multiplication mod (modulus, p^precision)
        let mut prod = vec![BigUint::zero(); (2 * e).saturating_sub(1).max(1)];
        for (i, x) in a.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        // reduce by the monic modulus
        for i in (e..prod.len()).rev() {
            let c = std::mem::replace(&mut prod[i], BigUint::zero());
            if c.is_zero() {
                continue;
            }
            for (j, m) in self.inner.modulus.iter().enumerate().take(e) {
                // prod[i - e + j] -= c * m: work mod p^N to stay positive
                let sub = (c.clone() * m) % &self.inner.pn;
                let cur = &prod[i - e + j] % &self.inner.pn;
                prod[i - e + j] = (cur + &self.inner.pn - sub) % &self.inner.pn;
            }
        }
        prod.truncate(e);
        let mut out = PadicElem { coords: prod, prec };
        self.truncate(&mut out);
        out
    }

    /// Inverse of a unit (valuation zero), by Hensel lifting from the
    /// residue field.
    pub fn inv(&self, a: &PadicElem) -> Result<PadicElem> {
        match self.valuation(a) {
            Ok(0) => {}
            Ok(v) => {
                return Err(PadicError::NotDivisible(format!(
                    "cannot invert an element of valuation {v}"
                )))
            }
            Err(prec) => {
                return Err(PadicError::PrecisionExhausted(format!(
                    "element indistinguishable from zero at precision {prec}"
                )))
            }
        }
        let rf = self.residue_field();
        let r = self.residue(a)?;
        let mut z = self.lift_residue(&rf.inv(&r));
        let two = self.from_u64(2);
        let mut known = 1usize;
        while known < a.prec {
            // z <- z (2 - a z)
            let az = self.mul(a, &z);
            let t = self.sub(&two, &az);
            z = self.mul(&z, &t);
            known *= 2;
        }
        z.prec = a.prec;
        self.truncate(&mut z);
        Ok(z)
    }

    /// Exact division `a / b`; requires `v(b) <= v(a)` certifiably, with the
    /// corresponding precision loss.
    pub fn div(&self, a: &PadicElem, b: &PadicElem) -> Result<PadicElem> {
        let vb = match self.valuation(b) {
            Ok(v) => v,
            Err(prec) => {
                return Err(PadicError::PrecisionExhausted(format!(
                    "divisor indistinguishable from zero at precision {prec}"
                )))
            }
        };
        if vb == 0 {
            return Ok(self.mul(a, &self.inv(b)?));
        }
        let va = self.valuation(a).unwrap_or(a.prec);
        if va < vb {
            return Err(PadicError::NotDivisible(format!(
                "valuation {va} < divisor valuation {vb}"
            )));
        }
        let a_shift = self.shift_down(a, vb)?;
        let b_shift = self.shift_down(b, vb)?;
        Ok(self.mul(&a_shift, &self.inv(&b_shift)?))
    }

    /// Divide by `p^k`, losing `k` digits of precision.
    pub fn shift_down(&self, a: &PadicElem, k: usize) -> Result<PadicElem> {
        if k == 0 {
            return Ok(a.clone());
        }
        let va = self.valuation(a).unwrap_or(a.prec);
        if va < k && !(va >= a.prec) {
            return Err(PadicError::NotDivisible(format!(
                "valuation {va} < shift {k}"
            )));
        }
        if a.prec < k {
            return Err(PadicError::PrecisionExhausted(
                "shift exceeds certified digits".into(),
            ));
        }
        let pk = self.pk(k);
        Ok(PadicElem {
            coords: a.coords.iter().map(|c| c / &pk).collect(),
            prec: a.prec - k,
        })
    }

    /// Multiply by `p^k` (no precision change beyond the cap).
    pub fn shift_up(&self, a: &PadicElem, k: usize) -> PadicElem {
        let pk = self.pk(k);
        let prec = (a.prec + k).min(self.inner.precision);
        let modulus = self.pk(prec);
        PadicElem {
            coords: a.coords.iter().map(|c| (c * &pk) % &modulus).collect(),
            prec,
        }
    }

    /// The conjugation over F (identity for orthogonal rings).
    pub fn conj(&self, a: &PadicElem) -> PadicElem {
        if !self.inner.unitary {
            return a.clone();
        }
        // evaluate the coordinate polynomial at the conjugated generator
        let gen_conj = PadicElem {
            coords: self.inner.conj_gen.clone(),
            prec: self.inner.precision,
        };
        let mut acc = self.zero();
        for c in a.coords.iter().rev() {
            acc = self.mul(&acc, &gen_conj);
            acc = self.add(&acc, &self.from_biguint_scalar(c.clone()));
        }
        acc.prec = a.prec;
        let mut out = acc;
        self.truncate(&mut out);
        out
    }

    /// Deterministic pseudo-random unit digit pattern (for tests and
    /// synthesis): a full-precision element with the given residue and
    /// random higher digits.
    pub fn random_lift(&self, residue: &FqElem, rng: &mut impl rand::Rng) -> PadicElem {
        let mut x = self.lift_residue(residue);
        for c in x.coords.iter_mut() {
            let mut acc = c.clone();
            let mut scale = BigUint::from(self.inner.p);
            for _ in 1..self.inner.precision {
                acc += &scale * BigUint::from(rng.gen_range(0..self.inner.p));
                scale *= self.inner.p;
            }
            *c = acc % &self.inner.pn;
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_arithmetic_and_valuation() {
        let ctx = PadicCtx::orthogonal(3, 1, 8).unwrap();
        let a = ctx.from_u64(9 * 2);
        assert_eq!(ctx.valuation(&a), Ok(2));
        let b = ctx.from_u64(3);
        let q = ctx.div(&a, &b).unwrap();
        assert_eq!(ctx.valuation(&q), Ok(1));
        assert_eq!(q.prec, 7);
        assert!(ctx.div(&b, &a).is_err());
    }

    #[test]
    fn unit_inverse_roundtrip() {
        let ctx = PadicCtx::unitary(3, 1, 10).unwrap();
        let rf = ctx.residue_field().clone();
        let x = ctx.lift_residue(&rf.generator());
        let one_plus = ctx.add(&x, &ctx.from_u64(4));
        let inv = ctx.inv(&one_plus).unwrap();
        let prod = ctx.mul(&one_plus, &inv);
        assert!(ctx.is_zero_at_full_precision(&ctx.sub(&prod, &ctx.one())));
    }

    #[test]
    fn conjugation_is_involutive_and_reduces_to_frobenius() {
        let ctx = PadicCtx::unitary(3, 1, 8).unwrap();
        let rf = ctx.residue_field().clone();
        let t = rf.generator();
        let x = ctx.lift_residue(&t);
        let cx = ctx.conj(&x);
        // residue of conj = frobenius of residue
        assert_eq!(ctx.residue(&cx).unwrap(), rf.frobenius(&t, 1));
        // involution
        let ccx = ctx.conj(&cx);
        assert!(ctx.is_zero_at_full_precision(&ctx.sub(&ccx, &x)));
        // fixes the prime subring
        let five = ctx.from_u64(5);
        assert!(ctx.is_zero_at_full_precision(&ctx.sub(&ctx.conj(&five), &five)));
    }

    #[test]
    fn precision_tracking_through_mul() {
        let ctx = PadicCtx::orthogonal(5, 1, 6).unwrap();
        let a = ctx.from_u64(25); // v = 2
        let b = ctx.shift_down(&ctx.from_u64(125), 1).unwrap(); // v = 2, prec 5
        let prod = ctx.mul(&a, &b);
        // prec = min(6 + 2, 5 + 2) = 7 capped at 6
        assert_eq!(prod.prec, 6);
        let c = ctx.shift_down(&a, 2).unwrap();
        assert_eq!(c.prec, 4);
    }
}
