//! Reciprocal polynomials, the SR/NSR splitting of factorizations, the
//! multiplicity product over NSR pairs, `UU* = h` enumerations, and
//! admissible enumerations of roots of self-reciprocal irreducibles.
//!
//! Two modes everywhere: plain (`conjugate = false`, coefficients in `GF(q)`,
//! sigma acts as the identity on coefficients) and conjugate
//! (`conjugate = true`, coefficients in `GF(q^2)`, sigma is `x -> x^q`).
//! The mode is always an explicit argument, never inferred from the field.

use crate::factor::{factor, is_irreducible, roots_in_field};
use crate::field::{FieldCtx, FieldEmbedding, FqElem};
use crate::poly::Poly;
use crate::{AlgebraError, Result};

/// `f*(lambda) = (f(0)^sigma)^-1 * lambda^deg(f) * f(1/lambda)^sigma`.
/// Non-monic input is normalized to monic first.
pub fn reciprocal(f: &Poly, conjugate: bool) -> Result<Poly> {
    if f.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let fld = f.field();
    if conjugate && !fld.has_conjugation() {
        return Err(AlgebraError::NoConjugation {
            e: fld.e(),
            q_exp: fld.q_exp(),
        });
    }
    let f = f.monic();
    if fld.is_zero(&f.coeff(0)) {
        return Err(AlgebraError::ZeroConstantTerm);
    }
    let sigma = |c: &FqElem| {
        if conjugate {
            fld.frobenius(c, 1)
        } else {
            c.clone()
        }
    };
    let mut rev: Vec<FqElem> = f.coeffs().iter().rev().map(|c| sigma(c)).collect();
    let scale = fld.inv(&sigma(&f.coeff(0)));
    for c in rev.iter_mut() {
        *c = fld.mul(c, &scale);
    }
    Ok(Poly::new(fld, rev))
}

/// Whether a monic polynomial equals its own reciprocal.
pub fn is_self_reciprocal(f: &Poly, conjugate: bool) -> Result<bool> {
    Ok(reciprocal(f, conjugate)? == f.monic())
}

/// The factorization of a self-reciprocal polynomial, split into
/// self-reciprocal irreducible factors and unordered pairs `{Q, Q*}` of
/// non-self-reciprocal ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SRFactorization {
    pub conjugate: bool,
    /// `(Q, m_Q)` with `Q = Q*`, canonically sorted.
    pub sr: Vec<(Poly, usize)>,
    /// `(Q, Q*, m)` with `Q` the lexicographically smaller of the pair.
    pub nsr_pairs: Vec<(Poly, Poly, usize)>,
}

impl SRFactorization {
    pub fn reassemble(&self, field: &FieldCtx) -> Poly {
        let mut acc = Poly::one(field);
        for (q, m) in &self.sr {
            acc = acc.mul(&q.pow(*m));
        }
        for (q, qs, m) in &self.nsr_pairs {
            acc = acc.mul(&q.mul(qs).pow(*m));
        }
        acc
    }

    /// Multiplicity of an irreducible among the SR factors (0 if absent).
    pub fn sr_multiplicity(&self, q: &Poly) -> usize {
        self.sr
            .iter()
            .find(|(p, _)| p == q)
            .map(|(_, m)| *m)
            .unwrap_or(0)
    }

    /// SR factors of odd multiplicity.
    pub fn odd_sr_factors(&self) -> Vec<(Poly, usize)> {
        self.sr
            .iter()
            .filter(|(_, m)| m % 2 == 1)
            .cloned()
            .collect()
    }

    /// The product over NSR pairs of `1 + multiplicity`.
    pub fn script_m(&self) -> u64 {
        self.nsr_pairs
            .iter()
            .map(|(_, _, m)| 1 + *m as u64)
            .product()
    }
}

/// Split the irreducible factorization of a self-reciprocal `f` into SR
/// factors and NSR pairs. Errors if `f` is not self-reciprocal.
pub fn sr_classify(f: &Poly, conjugate: bool) -> Result<SRFactorization> {
    let f = f.monic();
    if !is_self_reciprocal(&f, conjugate)? {
        return Err(AlgebraError::NotSelfReciprocal);
    }
    let fac = factor(&f)?;
    let mut sr = vec![];
    let mut nsr: Vec<(Poly, Poly, usize)> = vec![];
    let mut seen: Vec<Poly> = vec![];
    for (q, m) in &fac {
        let qstar = reciprocal(q, conjugate)?;
        if qstar == *q {
            sr.push((q.clone(), *m));
        } else {
            if seen.contains(q) {
                continue;
            }
            let mstar = fac
                .iter()
                .find(|(r, _)| *r == qstar)
                .map(|(_, mm)| *mm)
                .unwrap_or(0);
            assert_eq!(
                *m, mstar,
                "self-reciprocal polynomial with unbalanced NSR pair"
            );
            let (lo, hi) = if q.order_key() <= qstar.order_key() {
                (q.clone(), qstar.clone())
            } else {
                (qstar.clone(), q.clone())
            };
            seen.push(q.clone());
            seen.push(qstar);
            nsr.push((lo, hi, *m));
        }
    }
    nsr.sort_by(|a, b| a.0.order_key().cmp(&b.0.order_key()));
    Ok(SRFactorization {
        conjugate,
        sr,
        nsr_pairs: nsr,
    })
}

/// `M(f)` (plain mode) or `M_2(f)` (conjugate mode): the product over NSR
/// pairs dividing `f` of `1 + multiplicity`. Equals 1 when no pair divides.
pub fn script_m(f: &Poly, conjugate: bool) -> Result<u64> {
    Ok(sr_classify(f, conjugate)?.script_m())
}

/// All monic `U` with `U U* = f / Q0^m`, in deterministic order.
///
/// Requires `Q0` to be the unique SR irreducible factor of `f` of odd
/// multiplicity and `m` odd with `1 <= m <= m_Q0(f)`. The count always
/// equals `script_m(f)` and is independent of the chosen `m`.
pub fn enumerate_uu_star(f: &Poly, q0: &Poly, m: usize, conjugate: bool) -> Result<Vec<Poly>> {
    let fld = f.field();
    let cls = sr_classify(f, conjugate)?;
    let odd = cls.odd_sr_factors();
    if odd.len() != 1 || odd[0].0 != q0.monic() {
        return Err(AlgebraError::HypothesisViolation(format!(
            "Q0 must be the unique odd-multiplicity SR factor; found {} odd factor(s)",
            odd.len()
        )));
    }
    let m_q0 = odd[0].1;
    if m % 2 == 0 || m < 1 || m > m_q0 {
        return Err(AlgebraError::HypothesisViolation(format!(
            "m = {m} must be odd with 1 <= m <= {m_q0}"
        )));
    }
    // h = f / Q0^m: every SR factor of h has even multiplicity, and the
    // NSR pair multiplicities agree with those of f.
    let mut sr_half = Poly::one(fld);
    for (q, mq) in &cls.sr {
        let rem = if q == &q0.monic() { mq - m } else { *mq };
        debug_assert!(rem % 2 == 0);
        sr_half = sr_half.mul(&q.pow(rem / 2));
    }
    let mut out = vec![Poly::one(fld)];
    for (q, qs, mp) in &cls.nsr_pairs {
        let mut next = Vec::with_capacity(out.len() * (mp + 1));
        for u in &out {
            for i in 0..=*mp {
                next.push(u.mul(&q.pow(i)).mul(&qs.pow(mp - i)));
            }
        }
        out = next;
    }
    let mut result: Vec<Poly> = out.into_iter().map(|u| u.mul(&sr_half)).collect();
    result.sort_by(|a, b| a.order_key().cmp(&b.order_key()));
    debug_assert_eq!(result.len() as u64, cls.script_m());
    Ok(result)
}

/// Which flavour of admissible enumeration is requested.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdmissibleMode {
    /// `Q` self-reciprocal over `GF(q)` of even degree; sequences
    /// `l_1, ..., l_{d/2}, l_1^-1, ..., l_{d/2}^-1` with
    /// `l_j^sigma = l_{j+1}` and `l_{d/2}^sigma = l_1^-1`.
    EvenSr,
    /// `Q` self-reciprocal over `GF(q^2)` of odd degree; sequences
    /// `l_1, ..., l_d` with `l_j^{sigma^2} = l_{j+1}` cyclically.
    OddSr2,
}

/// Admissible enumerations of the roots of a self-reciprocal irreducible,
/// living in the canonical splitting field.
#[derive(Clone, Debug)]
pub struct AdmissibleEnumerations {
    pub splitting_field: FieldCtx,
    pub embedding: FieldEmbedding,
    /// Exactly `deg Q` sequences, each of length `deg Q`, cyclic shifts of
    /// one another. Sorted by the value key of the first entry.
    pub sequences: Vec<Vec<FqElem>>,
}

pub fn admissible_enumerations(q: &Poly, mode: AdmissibleMode) -> Result<AdmissibleEnumerations> {
    let fld = q.field();
    let conjugate = mode == AdmissibleMode::OddSr2;
    let d = q.degree();
    if !is_self_reciprocal(q, conjugate)? {
        return Err(AlgebraError::NotSelfReciprocal);
    }
    if !is_irreducible(q) {
        return Err(AlgebraError::HypothesisViolation(
            "admissible enumerations need an irreducible polynomial".into(),
        ));
    }
    match mode {
        AdmissibleMode::EvenSr => {
            if d % 2 != 0 {
                return Err(AlgebraError::HypothesisViolation(format!(
                    "even-SR mode needs even degree, got {d} (lambda +- 1 excluded)"
                )));
            }
        }
        AdmissibleMode::OddSr2 => {
            if d % 2 == 0 {
                return Err(AlgebraError::HypothesisViolation(format!(
                    "odd-SR2 mode needs odd degree, got {d}"
                )));
            }
        }
    }
    let (ext, emb) = fld.extension(d)?;
    let qext = q.map_field(&emb);
    let mut roots = roots_in_field(&qext);
    roots.sort_by_key(|r| r.value_key(ext.p()));
    assert_eq!(roots.len(), d, "irreducible must split with distinct roots");
    let mut sequences = vec![];
    match mode {
        AdmissibleMode::EvenSr => {
            for start in &roots {
                let mut half = vec![start.clone()];
                for _ in 1..d / 2 {
                    let prev = half.last().unwrap();
                    half.push(ext.frobenius(prev, 1));
                }
                let closes = ext.frobenius(half.last().unwrap(), 1) == ext.inv(&half[0]);
                if !closes {
                    continue;
                }
                let mut seq = half.clone();
                seq.extend(half.iter().map(|x| ext.inv(x)));
                let mut sorted = seq.clone();
                sorted.sort_by_key(|r| r.value_key(ext.p()));
                let mut expected = roots.clone();
                expected.sort_by_key(|r| r.value_key(ext.p()));
                if sorted == expected {
                    sequences.push(seq);
                }
            }
        }
        AdmissibleMode::OddSr2 => {
            for start in &roots {
                let mut seq = vec![start.clone()];
                for _ in 1..d {
                    let prev = seq.last().unwrap();
                    seq.push(ext.frobenius(prev, 2));
                }
                if ext.frobenius(seq.last().unwrap(), 2) != seq[0] {
                    continue;
                }
                let mut sorted = seq.clone();
                sorted.sort_by_key(|r| r.value_key(ext.p()));
                let mut expected = roots.clone();
                expected.sort_by_key(|r| r.value_key(ext.p()));
                if sorted == expected {
                    // inverse-shift relation: (l_j^-1)^sigma = l_{j + (d+1)/2}
                    if d >= 3 {
                        for j in 0..d {
                            let lhs = ext.frobenius(&ext.inv(&seq[j]), 1);
                            let rhs = &seq[(j + (d + 1) / 2) % d];
                            assert_eq!(&lhs, rhs, "odd-degree inverse-shift relation failed");
                        }
                    }
                    sequences.push(seq);
                }
            }
        }
    }
    sequences.sort_by_key(|s| s[0].value_key(ext.p()));
    assert_eq!(
        sequences.len(),
        d,
        "expected exactly deg Q admissible enumerations"
    );
    Ok(AdmissibleEnumerations {
        splitting_field: ext,
        embedding: emb,
        sequences,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;

    fn f3() -> FieldCtx {
        FieldCtx::base(3, 1).unwrap()
    }

    #[test]
    fn linear_self_reciprocal() {
        let f = f3();
        let p = Poly::from_i64_coeffs(&f, &[1, 1]); // L+1
        assert_eq!(reciprocal(&p, false).unwrap(), p);
    }

    #[test]
    fn reciprocal_symbolic_example() {
        let f = f3();
        let p = Poly::from_i64_coeffs(&f, &[2, 1, 1]); // L^2+L+2
        let expected = Poly::from_i64_coeffs(&f, &[2, 2, 1]); // L^2+2L+2
        assert_eq!(reciprocal(&p, false).unwrap(), expected);
    }

    #[test]
    fn conjugate_reciprocal_fixes_norm_one_linear() {
        let base = f3();
        let (f9, _) = base.extension(2).unwrap();
        let t = f9.generator(); // t^2 = -1, norm t^4 = 1
        let p = Poly::lambda_minus(&f9, &t);
        assert_eq!(reciprocal(&p, true).unwrap(), p);
        // a non-norm-one root is moved: N(1+t) = (1+t)^4 = 2
        let x = f9.add(&f9.one(), &t);
        let q = Poly::lambda_minus(&f9, &x);
        assert_ne!(reciprocal(&q, true).unwrap(), q);
    }

    #[test]
    fn reciprocal_rejects_zero_constant_term() {
        let f = f3();
        let p = Poly::from_i64_coeffs(&f, &[0, 1]);
        assert!(matches!(
            reciprocal(&p, false),
            Err(AlgebraError::ZeroConstantTerm)
        ));
    }

    #[test]
    fn classify_square_of_linear() {
        let f = f3();
        let p = Poly::from_i64_coeffs(&f, &[1, 1]).pow(2);
        let cls = sr_classify(&p, false).unwrap();
        assert_eq!(cls.sr.len(), 1);
        assert_eq!(cls.sr[0].1, 2);
        assert!(cls.nsr_pairs.is_empty());
        assert_eq!(cls.reassemble(&f), p);
    }

    #[test]
    fn classify_nsr_pair() {
        let f = f3();
        let q = Poly::from_i64_coeffs(&f, &[2, 1, 1]);
        let qs = reciprocal(&q, false).unwrap();
        let p = q.mul(&qs);
        let cls = sr_classify(&p, false).unwrap();
        assert!(cls.sr.is_empty());
        assert_eq!(cls.nsr_pairs.len(), 1);
        assert_eq!(cls.nsr_pairs[0].2, 1);
        assert_eq!(cls.script_m(), 2);
    }

    #[test]
    fn classify_two_sr_factors() {
        let f = f3();
        let p = Poly::from_i64_coeffs(&f, &[1, 0, 1]) // L^2+1: roots +-t, t^-1 = -t
            .mul(&Poly::from_i64_coeffs(&f, &[1, 1]));
        let cls = sr_classify(&p, false).unwrap();
        assert_eq!(cls.sr.len(), 2);
        assert!(cls.nsr_pairs.is_empty());
    }

    #[test]
    fn script_m_examples() {
        let f = FieldCtx::base(5, 1).unwrap();
        // Q0 = L^2+L+1: SR (constant term 1, palindromic), irreducible over GF(5)
        let q0 = Poly::from_i64_coeffs(&f, &[1, 1, 1]);
        assert!(is_self_reciprocal(&q0, false).unwrap());
        assert!(is_irreducible(&q0));
        assert_eq!(script_m(&q0.pow(3), false).unwrap(), 1);
        // one NSR pair, multiplicity 1 -> 2; squared with another pair -> 6
        let q = Poly::from_i64_coeffs(&f, &[2, 1]); // L+2: root 3, inverse 2, so Q* = L+3
        let qs = reciprocal(&q, false).unwrap();
        assert_ne!(q, qs);
        let pair = q.mul(&qs);
        assert_eq!(script_m(&pair, false).unwrap(), 2);
        let r = Poly::from_i64_coeffs(&f, &[1, 1, 0, 1]);
        let rs = reciprocal(&r, false).unwrap();
        assert!(r != rs && is_irreducible(&r));
        let f6 = pair.pow(2).mul(&r.mul(&rs));
        assert_eq!(script_m(&f6, false).unwrap(), 6);
    }

    #[test]
    fn uu_star_trivial_and_pair() {
        let f = f3();
        let q0 = Poly::from_i64_coeffs(&f, &[1, 0, 1]); // L^2+1 SR irreducible
        let us = enumerate_uu_star(&q0, &q0, 1, false).unwrap();
        assert_eq!(us, vec![Poly::one(&f)]);

        let f5 = FieldCtx::base(5, 1).unwrap();
        let q0 = Poly::from_i64_coeffs(&f5, &[1, 1, 1]);
        let q = Poly::from_i64_coeffs(&f5, &[2, 1]);
        let qs = reciprocal(&q, false).unwrap();
        let big = q0.mul(&q).mul(&qs);
        let us = enumerate_uu_star(&big, &q0, 1, false).unwrap();
        assert_eq!(us.len(), 2);
        for u in &us {
            let ustar = reciprocal(u, false).unwrap();
            assert_eq!(u.mul(&ustar), big.div_exact(&q0));
        }
    }

    #[test]
    fn uu_star_rejects_bad_hypotheses() {
        let f = f3();
        let q0 = Poly::from_i64_coeffs(&f, &[1, 0, 1]);
        assert!(enumerate_uu_star(&q0, &q0, 2, false).is_err()); // even m
        let sq = q0.pow(2);
        assert!(enumerate_uu_star(&sq, &q0, 1, false).is_err()); // no odd factor
    }

    #[test]
    fn admissible_even_degree_two() {
        let f = f3();
        let q = Poly::from_i64_coeffs(&f, &[1, 0, 1]); // L^2+1
        let adm = admissible_enumerations(&q, AdmissibleMode::EvenSr).unwrap();
        assert_eq!(adm.sequences.len(), 2);
        for seq in &adm.sequences {
            assert_eq!(seq.len(), 2);
            let ext = &adm.splitting_field;
            // l_1^sigma = l_1^-1 (d/2 = 1)
            assert_eq!(ext.frobenius(&seq[0], 1), ext.inv(&seq[0]));
        }
    }

    #[test]
    fn admissible_odd_degree_one() {
        let base = f3();
        let (f9, _) = base.extension(2).unwrap();
        let t = f9.generator();
        let q = Poly::lambda_minus(&f9, &t); // norm-one root
        let adm = admissible_enumerations(&q, AdmissibleMode::OddSr2).unwrap();
        assert_eq!(adm.sequences.len(), 1);
    }

    #[test]
    fn admissible_rejects_linear_even_mode() {
        let f = f3();
        let q = Poly::from_i64_coeffs(&f, &[1, 1]);
        assert!(admissible_enumerations(&q, AdmissibleMode::EvenSr).is_err());
    }
}
