//! Deterministic univariate factorization over finite fields:
//! squarefree radical (with p-th root extraction), distinct-degree
//! factorization, and equal-degree splitting seeded from the input
//! polynomial, so identical inputs factor identically across runs.

use crate::field::FqElem;
use crate::poly::Poly;
use crate::{AlgebraError, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn fnv_seed(f: &Poly) -> u64 {
    let p = f.field().p();
    let mut h: u64 = 0xcbf29ce484222325;
    for c in f.coeffs() {
        let k = c.value_key(p);
        for b in (k as u64).to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    }
    h
}

/// p-th root of a polynomial all of whose exponents are multiples of p.
fn pth_root(f: &Poly) -> Poly {
    let fld = f.field();
    let p = fld.p() as usize;
    let e = fld.e();
    let mut out = Vec::with_capacity(f.degree() / p + 1);
    for j in 0..=f.degree() / p {
        let a = f.coeff(j * p);
        // b with b^p = a: b = a^(p^(e-1))
        let mut b = a;
        for _ in 0..e.saturating_sub(1) {
            b = fld.pow(&b, p as u128);
        }
        out.push(b);
    }
    Poly::new(fld, out)
}

/// Product of the distinct monic irreducible factors.
pub fn squarefree_radical(f: &Poly) -> Result<Poly> {
    if f.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    Ok(radical_rec(&f.monic()))
}

fn radical_rec(f: &Poly) -> Poly {
    if f.degree() == 0 {
        return Poly::one(f.field());
    }
    let d = f.derivative();
    if d.is_zero() {
        return radical_rec(&pth_root(f).monic());
    }
    let g = f.gcd(&d);
    if g.is_one() {
        return f.clone();
    }
    let w = f.div_exact(&g).monic(); // squarefree: factors of multiplicity not divisible by p
    let r = radical_rec(&g.monic());
    // lcm(w, r)
    let common = w.gcd(&r);
    w.mul(&r.div_exact(&common)).monic()
}

fn field_order_pow(s: u128, d: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..d {
        acc = acc
            .checked_mul(s)
            .expect("field order power exceeds u128; polynomial too large to factor");
    }
    acc
}

/// Distinct-degree split of a squarefree monic polynomial: returns
/// `(degree, product-of-irreducibles-of-that-degree)` pairs.
fn distinct_degree(f: &Poly) -> Vec<(usize, Poly)> {
    let fld = f.field();
    let s = fld.order();
    let lambda = Poly::lambda(fld);
    let mut rem = f.clone();
    let mut out = vec![];
    let mut xq = lambda.clone();
    let mut d = 0;
    while !rem.is_one() && rem.degree() >= 1 {
        d += 1;
        if rem.degree() < 2 * d {
            out.push((rem.degree(), rem.clone()));
            break;
        }
        xq = xq.pow_mod(s, &rem);
        let g = rem.gcd(&xq.sub(&lambda));
        if !g.is_one() {
            out.push((d, g.clone()));
            rem = rem.div_exact(&g).monic();
            xq = xq.rem(&rem);
        }
    }
    out
}

/// Cantor–Zassenhaus equal-degree splitting (odd characteristic), driven by
/// a stream seeded from the polynomial's coefficients.
fn equal_degree(f: &Poly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Poly>) {
    if f.degree() == d {
        out.push(f.monic());
        return;
    }
    let fld = f.field();
    let s = fld.order();
    let exp = (field_order_pow(s, d) - 1) / 2;
    loop {
        // random nonconstant polynomial of degree < deg f
        let coeffs: Vec<FqElem> = (0..f.degree())
            .map(|_| {
                let k = rng.gen_range(0..fld.order() as u64);
                // decompose k into base-p digits
                let p = fld.p();
                let mut digits = Vec::with_capacity(fld.e());
                let mut kk = k;
                for _ in 0..fld.e() {
                    digits.push(kk % p);
                    kk /= p;
                }
                fld.from_coeffs(&digits)
            })
            .collect();
        let t = Poly::new(fld, coeffs);
        let te = t.pow_mod(exp, f);
        let g = f.gcd(&te.sub(&Poly::one(fld)));
        if !g.is_one() && g.degree() < f.degree() {
            equal_degree(&g, d, rng, out);
            equal_degree(&f.div_exact(&g).monic(), d, rng, out);
            return;
        }
    }
}

/// Complete factorization into monic irreducibles with multiplicities,
/// sorted canonically (degree, then coefficients top-down).
pub fn factor(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    if f.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let f = f.monic();
    if f.degree() == 0 {
        return Ok(vec![]);
    }
    let rad = squarefree_radical(&f)?;
    let mut rng = ChaCha8Rng::seed_from_u64(fnv_seed(&f));
    let mut irreducibles = vec![];
    for (d, g) in distinct_degree(&rad) {
        equal_degree(&g, d, &mut rng, &mut irreducibles);
    }
    let mut result = Vec::with_capacity(irreducibles.len());
    for q in irreducibles {
        let mut m = 0;
        let mut rem = f.clone();
        loop {
            let (quo, r) = rem.div_rem(&q);
            if !r.is_zero() {
                break;
            }
            m += 1;
            rem = quo;
        }
        debug_assert!(m >= 1);
        result.push((q, m));
    }
    result.sort_by(|a, b| a.0.order_key().cmp(&b.0.order_key()));
    // reassembly check
    debug_assert!({
        let mut acc = Poly::one(f.field());
        for (q, m) in &result {
            acc = acc.mul(&q.pow(*m));
        }
        acc == f
    });
    Ok(result)
}

/// Roots of `f` lying in its coefficient field, unsorted.
pub fn roots_in_field(f: &Poly) -> Vec<FqElem> {
    let fld = f.field();
    if f.is_zero() || f.degree() == 0 {
        return vec![];
    }
    let s = fld.order();
    let lambda = Poly::lambda(fld);
    let xq = lambda.pow_mod(s, &f.monic());
    let linear_part = f.monic().gcd(&xq.sub(&lambda));
    if linear_part.is_one() {
        return vec![];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(fnv_seed(f) ^ 0x9e3779b97f4a7c15);
    let mut lins = vec![];
    equal_degree(&linear_part, 1, &mut rng, &mut lins);
    lins.iter().map(|l| fld.neg(&l.coeff(0))).collect()
}

/// Irreducibility over the coefficient field (Rabin's test).
pub fn is_irreducible(f: &Poly) -> bool {
    if f.is_zero() || f.degree() == 0 {
        return false;
    }
    if f.degree() == 1 {
        return true;
    }
    let fld = f.field();
    let g = f.monic();
    let s = fld.order();
    let n = g.degree();
    let lambda = Poly::lambda(fld);
    let xsn = lambda.pow_mod(field_order_pow(s, n), &g);
    if !xsn.sub(&lambda).rem(&g).is_zero() {
        return false;
    }
    let mut primes = vec![];
    let mut m = n;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            primes.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        primes.push(m);
    }
    for l in primes {
        let xsk = lambda.pow_mod(field_order_pow(s, n / l), &g);
        if !g.gcd(&xsk.sub(&lambda)).is_one() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;

    #[test]
    fn factor_lambda_squared_minus_one() {
        let f3 = FieldCtx::base(3, 1).unwrap();
        let f = Poly::from_i64_coeffs(&f3, &[-1, 0, 1]);
        let fac = factor(&f).unwrap();
        assert_eq!(
            fac,
            vec![
                (Poly::from_i64_coeffs(&f3, &[1, 1]), 1),
                (Poly::from_i64_coeffs(&f3, &[2, 1]), 1),
            ]
        );
    }

    #[test]
    fn factor_cube_of_irreducible() {
        let f3 = FieldCtx::base(3, 1).unwrap();
        let q = Poly::from_i64_coeffs(&f3, &[1, 0, 1]); // L^2+1, irreducible over GF(3)
        assert!(is_irreducible(&q));
        let f = q.pow(3);
        let fac = factor(&f).unwrap();
        assert_eq!(fac, vec![(q, 3)]);
    }

    #[test]
    fn reassembly_of_random_polynomials() {
        let f3 = FieldCtx::base(3, 1).unwrap();
        let f5 = FieldCtx::base(5, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for fld in [&f3, &f5] {
            for _ in 0..100 {
                let deg = rng.gen_range(1..=8usize);
                let mut coeffs: Vec<_> =
                    (0..deg).map(|_| fld.from_u64(rng.gen_range(0..fld.p()))).collect();
                coeffs.push(fld.one());
                let f = Poly::new(fld, coeffs);
                let fac = factor(&f).unwrap();
                let mut acc = Poly::one(fld);
                for (q, m) in &fac {
                    assert!(is_irreducible(q), "non-irreducible factor {q:?}");
                    acc = acc.mul(&q.pow(*m));
                }
                assert_eq!(acc, f.monic());
            }
        }
    }

    #[test]
    fn radical_strips_p_divisible_multiplicities() {
        let f3 = FieldCtx::base(3, 1).unwrap();
        let a = Poly::from_i64_coeffs(&f3, &[-1, 1]); // L-1
        let b = Poly::from_i64_coeffs(&f3, &[1, 0, 1]); // L^2+1
        let f = a.pow(3).mul(&b.pow(6));
        assert_eq!(squarefree_radical(&f).unwrap(), a.mul(&b));
    }

    #[test]
    fn radical_agrees_with_factor_and_strip() {
        let f5 = FieldCtx::base(5, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let deg = rng.gen_range(1..=9usize);
            let mut coeffs: Vec<_> =
                (0..deg).map(|_| f5.from_u64(rng.gen_range(0..5))).collect();
            coeffs.push(f5.one());
            let f = Poly::new(&f5, coeffs);
            let via_gcd = squarefree_radical(&f).unwrap();
            let mut via_factor = Poly::one(&f5);
            for (q, _) in factor(&f).unwrap() {
                via_factor = via_factor.mul(&q);
            }
            assert_eq!(via_gcd, via_factor);
        }
    }

    #[test]
    fn roots_of_split_polynomial() {
        let f9 = FieldCtx::base(3, 2).unwrap();
        let t = f9.generator();
        let f = Poly::from_roots(&f9, &[t.clone(), f9.neg(&t), f9.one()]);
        let mut roots = roots_in_field(&f);
        roots.sort_by_key(|r| r.value_key(3));
        let mut expected = vec![t.clone(), f9.neg(&t), f9.one()];
        expected.sort_by_key(|r| r.value_key(3));
        assert_eq!(roots, expected);
    }

    #[test]
    fn determinism_of_factorization() {
        let f5 = FieldCtx::base(5, 1).unwrap();
        let f = Poly::from_i64_coeffs(&f5, &[2, 3, 0, 1, 1, 4, 1]);
        assert_eq!(factor(&f).unwrap(), factor(&f).unwrap());
    }
}
