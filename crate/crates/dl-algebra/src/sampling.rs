//! Enumeration and sampling of small irreducible polynomials, used by the
//! verification suites and by randomized cross-checks.

use crate::factor::is_irreducible;
use crate::field::{FieldCtx, FqElem};
use crate::poly::Poly;
use crate::reciprocal::{is_self_reciprocal, reciprocal};
use rand::Rng;

/// All monic irreducibles of exactly the given degree (brute force; the
/// coefficient space must stay small).
pub fn irreducibles(field: &FieldCtx, degree: usize) -> Vec<Poly> {
    assert!(degree >= 1);
    let count = field.order().checked_pow(degree as u32).expect("overflow");
    assert!(count <= 1 << 22, "coefficient space too large to enumerate");
    let elems = field.enumerate();
    let mut out = vec![];
    let mut idx = vec![0usize; degree];
    loop {
        let mut coeffs: Vec<_> = idx.iter().map(|&i| elems[i].clone()).collect();
        coeffs.push(field.one());
        let f = Poly::new(field, coeffs);
        if is_irreducible(&f) {
            out.push(f);
        }
        let mut i = 0;
        loop {
            if i == degree {
                out.sort_by(|a, b| a.order_key().cmp(&b.order_key()));
                return out;
            }
            idx[i] += 1;
            if idx[i] < elems.len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

/// Monic irreducible self-reciprocal polynomials of the given degree
/// (in the requested mode), excluding nothing: `lambda +- 1` appear at
/// degree one in plain mode. Cached: the enumeration is canonical.
pub fn sr_irreducibles(field: &FieldCtx, degree: usize, conjugate: bool) -> Vec<Poly> {
    use std::sync::{Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<std::collections::HashMap<(u64, usize, bool), Vec<Poly>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(std::collections::HashMap::new()));
    let key = (field.id(), degree, conjugate);
    if let Some(v) = cache.lock().unwrap().get(&key) {
        return v.clone();
    }
    let v: Vec<Poly> = irreducibles(field, degree)
        .into_iter()
        .filter(|f| !field.is_zero(&f.coeff(0)))
        .filter(|f| is_self_reciprocal(f, conjugate).unwrap())
        .collect();
    cache.lock().unwrap().insert(key, v.clone());
    v
}

/// Canonical representatives (the smaller element) of NSR pairs of the
/// given degree.
pub fn nsr_pair_reps(field: &FieldCtx, degree: usize, conjugate: bool) -> Vec<Poly> {
    irreducibles(field, degree)
        .into_iter()
        .filter(|f| !field.is_zero(&f.coeff(0)))
        .filter(|f| {
            let fs = reciprocal(f, conjugate).unwrap();
            fs != *f && f.order_key() <= fs.order_key()
        })
        .collect()
}

fn prime_factors(mut n: u128) -> Vec<u128> {
    let mut out = vec![];
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// An element of exact multiplicative order `m` in the field, found
/// deterministically by scanning elements in canonical order (lazily, so
/// large fields are fine); `m` must divide `order - 1`.
pub fn element_of_order(field: &FieldCtx, m: u128) -> FqElem {
    let full = field.order() - 1;
    assert!(full % m == 0, "order {m} does not divide {full}");
    let cofactor = full / m;
    let primes = prime_factors(m);
    let p = field.p();
    let e = field.e();
    let mut c = vec![0u64; e];
    loop {
        // advance the canonical counter first: skips zero
        let mut i = 0;
        loop {
            assert!(i < e, "scanned the whole field without finding a generator");
            c[i] += 1;
            if c[i] < p {
                break;
            }
            c[i] = 0;
            i += 1;
        }
        let x = field.from_coeffs(&c);
        let y = field.pow(&x, cofactor);
        if field.pow(&y, m) != field.one() {
            continue;
        }
        if primes.iter().all(|&l| field.pow(&y, m / l) != field.one()) {
            return y;
        }
    }
}

/// All self-reciprocal irreducibles of degree `d` over a `GF(q^2)` base
/// (conjugate mode), built from the circle `x^(q^d + 1) = 1` in the
/// splitting field: an irreducible of degree d over `GF(q^2)` is
/// self-reciprocal exactly when its roots satisfy `x^(q^d) = x^(-1)`.
pub fn sr2_irreducibles_via_circle(field: &FieldCtx, d: usize) -> Vec<Poly> {
    use std::sync::{Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<std::collections::HashMap<(u64, usize), Vec<Poly>>>> =
        OnceLock::new();
    assert!(field.has_conjugation(), "needs a GF(q^2) base");
    assert!(d % 2 == 1, "SR2 irreducibles have odd degree");
    let cache = CACHE.get_or_init(|| Mutex::new(std::collections::HashMap::new()));
    let key = (field.id(), d);
    if let Some(v) = cache.lock().unwrap().get(&key) {
        return v.clone();
    }
    let (ext, emb) = field.extension(d).unwrap();
    let q = field.q();
    let mut m: u128 = 1;
    for _ in 0..d {
        m *= q;
    }
    m += 1;
    let gen = element_of_order(&ext, m);
    let mut seen: Vec<Poly> = vec![];
    let mut x = ext.one();
    for _ in 0..m {
        x = ext.mul(&x, &gen);
        // minimal polynomial over GF(q^2): product over the sigma^2-orbit
        let mut orbit = vec![x.clone()];
        loop {
            let next = ext.frobenius(orbit.last().unwrap(), 2);
            if next == orbit[0] {
                break;
            }
            orbit.push(next);
        }
        if orbit.len() != d {
            continue;
        }
        let minpoly = Poly::from_roots(&ext, &orbit);
        let pulled = minpoly
            .pullback_field(&emb)
            .expect("minimal polynomial has base coefficients");
        if !seen.contains(&pulled) {
            debug_assert!(is_irreducible(&pulled));
            debug_assert!(is_self_reciprocal(&pulled, true).unwrap());
            seen.push(pulled);
        }
    }
    seen.sort_by(|a, b| a.order_key().cmp(&b.order_key()));
    cache.lock().unwrap().insert(key, seen.clone());
    seen
}

/// A random self-reciprocal polynomial with a unique odd-multiplicity SR
/// factor `Q0`. Returns `(f, Q0, m_Q0)`.
pub fn random_unique_odd_sr(
    field: &FieldCtx,
    conjugate: bool,
    rng: &mut impl Rng,
    max_extra_factors: usize,
) -> (Poly, Poly, usize) {
    let sr_degrees: &[usize] = if conjugate { &[1, 3] } else { &[1, 2, 4] };
    let mut pools_sr: Vec<Poly> = vec![];
    for &d in sr_degrees {
        pools_sr.extend(sr_irreducibles(field, d, conjugate));
    }
    let mut pools_nsr: Vec<Poly> = vec![];
    for d in 1..=2 {
        pools_nsr.extend(nsr_pair_reps(field, d, conjugate));
    }
    assert!(!pools_sr.is_empty());
    let q0 = pools_sr[rng.gen_range(0..pools_sr.len())].clone();
    let m0 = 2 * rng.gen_range(0..=1usize) + 1; // 1 or 3
    let mut f = q0.pow(m0);
    for _ in 0..rng.gen_range(0..=max_extra_factors) {
        if rng.gen_bool(0.5) && !pools_nsr.is_empty() {
            let q = pools_nsr[rng.gen_range(0..pools_nsr.len())].clone();
            let qs = reciprocal(&q, conjugate).unwrap();
            let m = rng.gen_range(1..=2usize);
            f = f.mul(&q.mul(&qs).pow(m));
        } else {
            let q = pools_sr[rng.gen_range(0..pools_sr.len())].clone();
            if q == q0 {
                continue;
            }
            f = f.mul(&q.pow(2));
        }
    }
    (f, q0, m0)
}
