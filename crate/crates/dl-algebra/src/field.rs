//! Finite fields `GF(p^e)` with exact arithmetic and an explicit Frobenius
//! base.
//!
//! A [`FieldCtx`] is immutable and cheaply cloneable (`Arc` inside). Every
//! element records the id of its owning field; mixing elements of distinct
//! fields is a hard error, never a coercion. The context also records
//! `q_exp`: the degree over `GF(p)` of the declared base field, so that the
//! Frobenius `sigma(x) = x^q` with `q = p^q_exp` is unambiguous even when the
//! same abstract field is used once as `GF(q^2)` (unitary base) and once as a
//! splitting field.

use crate::{AlgebraError, Result};
use std::fmt;
use std::sync::Arc;

/// Polynomials over `Z/p` as little-endian coefficient vectors, trimmed.
/// Internal helper layer for modulus construction and base arithmetic.
mod pmod {
    pub fn trim(mut v: Vec<u64>) -> Vec<u64> {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        let mut out = vec![0u64; n];
        for i in 0..n {
            let x = a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0) % p;
            out[i] = x % p;
        }
        trim(out)
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(out)
    }

    pub fn inv_mod(a: u64, p: u64) -> u64 {
        // extended Euclid on integers
        let (mut t, mut new_t): (i128, i128) = (0, 1);
        let (mut r, mut new_r): (i128, i128) = (p as i128, (a % p) as i128);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        assert_eq!(r, 1, "not invertible mod p");
        (t.rem_euclid(p as i128)) as u64
    }

    /// Remainder of a modulo b (b nonzero), both little-endian.
    pub fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let b = trim(b.to_vec());
        assert!(!b.is_empty());
        let mut r = trim(a.to_vec());
        let lead_inv = inv_mod(*b.last().unwrap(), p);
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let c = (*r.last().unwrap() * lead_inv) % p;
            if c != 0 {
                for (j, &bj) in b.iter().enumerate() {
                    let idx = shift + j;
                    r[idx] = (r[idx] + p - (c * bj) % p) % p;
                }
            }
            r.pop();
            r = trim(r);
            if r.is_empty() {
                break;
            }
        }
        r
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut x = trim(a.to_vec());
        let mut y = trim(b.to_vec());
        while !y.is_empty() {
            let r = rem(&x, &y, p);
            x = y;
            y = r;
        }
        if let Some(&l) = x.last() {
            let li = inv_mod(l, p);
            x = x.iter().map(|&c| c * li % p).collect();
        }
        x
    }

    /// x^(p^k) mod m, starting from x = lambda.
    pub fn pow_frobenius_of_lambda(m: &[u64], p: u64, k: usize) -> Vec<u64> {
        let mut x = vec![0, 1]; // lambda
        for _ in 0..k {
            x = pow_mod(&x, p, m, p);
        }
        x
    }

    pub fn pow_mod(base: &[u64], mut exp: u64, m: &[u64], p: u64) -> Vec<u64> {
        let mut result = vec![1u64];
        let mut b = rem(base, m, p);
        while exp > 0 {
            if exp & 1 == 1 {
                result = rem(&mul(&result, &b, p), m, p);
            }
            b = rem(&mul(&b, &b, p), m, p);
            exp >>= 1;
        }
        result
    }

    /// Rabin irreducibility test over GF(p).
    pub fn is_irreducible(m: &[u64], p: u64) -> bool {
        let m = trim(m.to_vec());
        let e = m.len().saturating_sub(1);
        if e == 0 {
            return false;
        }
        if e == 1 {
            return true;
        }
        // x^(p^e) == x mod m
        let xpe = pow_frobenius_of_lambda(&m, p, e);
        let x = vec![0, 1];
        if rem(&sub(&xpe, &x, p), &m, p) != Vec::<u64>::new() {
            return false;
        }
        // gcd(x^(p^(e/l)) - x, m) == 1 for each prime l | e
        let mut ls = vec![];
        let mut n = e;
        let mut d = 2;
        while d * d <= n {
            if n % d == 0 {
                ls.push(d);
                while n % d == 0 {
                    n /= d;
                }
            }
            d += 1;
        }
        if n > 1 {
            ls.push(n);
        }
        for l in ls {
            let xq = pow_frobenius_of_lambda(&m, p, e / l);
            let g = gcd(&sub(&xq, &x, p), &m, p);
            if g.len() != 1 {
                return false;
            }
        }
        true
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Canonical modulus: the monic irreducible of degree `e` over `GF(p)` whose
/// non-leading coefficient vector, read as the base-p integer
/// `c0 + c1*p + ...`, is least. Cached per `(p, e)`.
fn canonical_modulus(p: u64, e: usize) -> Vec<u64> {
    use std::collections::HashMap;
    use std::sync::{Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<HashMap<(u64, usize), Vec<u64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(m) = cache.lock().unwrap().get(&(p, e)) {
        return m.clone();
    }
    let m = canonical_modulus_uncached(p, e);
    cache.lock().unwrap().insert((p, e), m.clone());
    m
}

fn canonical_modulus_uncached(p: u64, e: usize) -> Vec<u64> {
    if e == 1 {
        return vec![0, 1]; // lambda itself: GF(p) = GF(p)[x]/(x)
    }
    let mut counter = vec![0u64; e];
    loop {
        let mut m = counter.clone();
        m.push(1);
        if pmod::is_irreducible(&m, p) {
            return m;
        }
        // increment base-p counter
        let mut i = 0;
        loop {
            counter[i] += 1;
            if counter[i] < p {
                break;
            }
            counter[i] = 0;
            i += 1;
            assert!(i < e, "no irreducible of degree {e} over GF({p})?");
        }
    }
}

#[derive(Debug)]
struct FieldInner {
    p: u64,
    e: usize,
    q_exp: usize,
    /// Monic irreducible over GF(p), little-endian, length e+1.
    modulus: Vec<u64>,
    id: u64,
    /// Matrix of the p-power Frobenius in the power basis: column j is
    /// (gen^j)^p. Stored row-major e x e over GF(p).
    frob_p: Vec<u64>,
}

/// An exact finite field `GF(p^e)` with a declared Frobenius base `q = p^q_exp`.
#[derive(Clone)]
pub struct FieldCtx {
    inner: Arc<FieldInner>,
}

/// An element of a [`FieldCtx`], as a coefficient vector in the power basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FqElem {
    field_id: u64,
    c: Vec<u64>,
}

impl fmt::Debug for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fq{:?}", self.c)
    }
}

impl FqElem {
    pub fn field_id(&self) -> u64 {
        self.field_id
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    /// Canonical integer key `c0 + c1*p + ...`; total order used everywhere a
    /// deterministic choice among elements is needed.
    pub fn value_key(&self, p: u64) -> u128 {
        let mut v: u128 = 0;
        for &c in self.c.iter().rev() {
            v = v * p as u128 + c as u128;
        }
        v
    }
}

fn fnv1a(data: &[u64]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for &x in data {
        for b in x.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    }
    h
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF({}^{}; q=p^{})",
            self.inner.p, self.inner.e, self.inner.q_exp
        )
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.inner.id == other.inner.id
    }
}
impl Eq for FieldCtx {}

impl std::hash::Hash for FieldCtx {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.inner.id.hash(state);
    }
}

impl FieldCtx {
    /// `GF(p^e)` declared as a base field: `sigma(x) = x^(p^e) = x` on it.
    pub fn base(p: u64, e: usize) -> Result<FieldCtx> {
        Self::with_q_exp(p, e, e)
    }

    fn with_q_exp(p: u64, e: usize, q_exp: usize) -> Result<FieldCtx> {
        if p < 3 || p % 2 == 0 || !is_prime(p) {
            return Err(AlgebraError::NotOddPrime(p));
        }
        if e == 0 || e > 16 {
            return Err(AlgebraError::DegreeOutOfRange(e));
        }
        assert!(e % q_exp == 0, "q_exp must divide e");
        assert!(p < (1 << 31), "p too large for u64 arithmetic");
        let modulus = canonical_modulus(p, e);
        let mut tag = vec![p, e as u64, q_exp as u64];
        tag.extend_from_slice(&modulus);
        let id = fnv1a(&tag);
        // p-power Frobenius matrix: columns are (gen^j)^p in the power basis.
        let mut frob_p = vec![0u64; e * e];
        let gen_p = pmod::pow_frobenius_of_lambda(&modulus, p, 1);
        let mut col = vec![1u64]; // gen^0 ^p = 1
        for j in 0..e {
            for (i, &ci) in col.iter().enumerate() {
                frob_p[i * e + j] = ci;
            }
            col = pmod::rem(&pmod::mul(&col, &gen_p, p), &modulus, p);
        }
        Ok(FieldCtx {
            inner: Arc::new(FieldInner {
                p,
                e,
                q_exp,
                modulus,
                id,
                frob_p,
            }),
        })
    }

    /// The degree-`d` extension, with the same Frobenius base, together with
    /// the canonical embedding (the one sending the generator of `self` to
    /// the least root of its modulus in the extension). Cached: the canonical
    /// embedding between two given fields is deterministic.
    pub fn extension(&self, d: usize) -> Result<(FieldCtx, FieldEmbedding)> {
        use std::collections::HashMap;
        use std::sync::{Mutex, OnceLock};
        static CACHE: OnceLock<Mutex<HashMap<(u64, u64), FieldEmbedding>>> = OnceLock::new();
        let e2 = self.inner.e * d;
        let ext = Self::with_q_exp(self.inner.p, e2, self.inner.q_exp)?;
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let key = (self.id(), ext.id());
        if let Some(emb) = cache.lock().unwrap().get(&key) {
            return Ok((ext, emb.clone()));
        }
        let emb = FieldEmbedding::new(self, &ext)?;
        cache.lock().unwrap().insert(key, emb.clone());
        Ok((ext, emb))
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }
    pub fn e(&self) -> usize {
        self.inner.e
    }
    /// Degree over GF(p) of the declared Frobenius base field.
    pub fn q_exp(&self) -> usize {
        self.inner.q_exp
    }
    /// Order of the declared base field (`q`).
    pub fn q(&self) -> u128 {
        (self.inner.p as u128).pow(self.inner.q_exp as u32)
    }
    /// Number of elements of the field itself.
    pub fn order(&self) -> u128 {
        (self.inner.p as u128).pow(self.inner.e as u32)
    }
    pub fn id(&self) -> u64 {
        self.inner.id
    }
    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    /// True when the field carries a quadratic structure over its Frobenius
    /// base, i.e. `e = 2*q_exp`; conjugation `x -> x^q` is then an involution.
    pub fn has_conjugation(&self) -> bool {
        self.inner.e == 2 * self.inner.q_exp
    }

    fn check(&self, x: &FqElem) {
        assert_eq!(
            x.field_id, self.inner.id,
            "element of a different field passed to {self:?}"
        );
    }

    pub fn zero(&self) -> FqElem {
        FqElem {
            field_id: self.inner.id,
            c: vec![0; self.inner.e],
        }
    }

    pub fn one(&self) -> FqElem {
        self.from_u64(1)
    }

    pub fn from_u64(&self, n: u64) -> FqElem {
        let mut c = vec![0; self.inner.e];
        c[0] = n % self.inner.p;
        FqElem {
            field_id: self.inner.id,
            c,
        }
    }

    pub fn from_i64(&self, n: i64) -> FqElem {
        let p = self.inner.p as i64;
        self.from_u64(n.rem_euclid(p) as u64)
    }

    /// The power-basis generator (the class of lambda).
    pub fn generator(&self) -> FqElem {
        let mut c = vec![0; self.inner.e];
        if self.inner.e == 1 {
            // modulus is lambda itself; generator degenerates to 0, use 1
            c[0] = 1;
        } else {
            c[1] = 1;
        }
        FqElem {
            field_id: self.inner.id,
            c,
        }
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> FqElem {
        assert!(coeffs.len() <= self.inner.e);
        let mut c: Vec<u64> = coeffs.iter().map(|&x| x % self.inner.p).collect();
        c.resize(self.inner.e, 0);
        FqElem {
            field_id: self.inner.id,
            c,
        }
    }

    pub fn is_zero(&self, x: &FqElem) -> bool {
        self.check(x);
        x.c.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &FqElem, b: &FqElem) -> FqElem {
        self.check(a);
        self.check(b);
        let p = self.inner.p;
        FqElem {
            field_id: a.field_id,
            c: a.c.iter().zip(&b.c).map(|(&x, &y)| (x + y) % p).collect(),
        }
    }

    pub fn sub(&self, a: &FqElem, b: &FqElem) -> FqElem {
        self.check(a);
        self.check(b);
        let p = self.inner.p;
        FqElem {
            field_id: a.field_id,
            c: a.c
                .iter()
                .zip(&b.c)
                .map(|(&x, &y)| (x + p - y) % p)
                .collect(),
        }
    }

    pub fn neg(&self, a: &FqElem) -> FqElem {
        self.sub(&self.zero(), a)
    }

    pub fn mul(&self, a: &FqElem, b: &FqElem) -> FqElem {
        self.check(a);
        self.check(b);
        let p = self.inner.p;
        let prod = pmod::mul(&a.c, &b.c, p);
        let mut c = pmod::rem(&prod, &self.inner.modulus, p);
        c.resize(self.inner.e, 0);
        FqElem {
            field_id: a.field_id,
            c,
        }
    }

    pub fn scale(&self, a: &FqElem, k: u64) -> FqElem {
        let p = self.inner.p;
        FqElem {
            field_id: a.field_id,
            c: a.c.iter().map(|&x| x * (k % p) % p).collect(),
        }
    }

    pub fn pow(&self, a: &FqElem, mut n: u128) -> FqElem {
        let mut result = self.one();
        let mut b = a.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = self.mul(&result, &b);
            }
            b = self.mul(&b, &b);
            n >>= 1;
        }
        result
    }

    pub fn inv(&self, a: &FqElem) -> FqElem {
        assert!(!self.is_zero(a), "division by zero");
        // x^(p^e - 2)
        self.pow(a, self.order() - 2)
    }

    pub fn div(&self, a: &FqElem, b: &FqElem) -> FqElem {
        self.mul(a, &self.inv(b))
    }

    /// One application of the p-power Frobenius (linear over GF(p)).
    fn frobenius_p(&self, a: &FqElem) -> FqElem {
        let e = self.inner.e;
        let p = self.inner.p;
        let m = &self.inner.frob_p;
        let mut c = vec![0u64; e];
        for i in 0..e {
            let mut acc = 0u64;
            for j in 0..e {
                acc = (acc + m[i * e + j] * a.c[j]) % p;
            }
            c[i] = acc;
        }
        FqElem {
            field_id: a.field_id,
            c,
        }
    }

    /// `x^(q^steps)` where `q = p^q_exp` is the declared base-field order.
    pub fn frobenius(&self, a: &FqElem, steps: usize) -> FqElem {
        self.check(a);
        let reps = (self.inner.q_exp * steps) % self.inner.e;
        let mut x = a.clone();
        for _ in 0..reps {
            x = self.frobenius_p(&x);
        }
        x
    }

    /// Conjugation `x -> x^q` for fields with `e = 2*q_exp`.
    pub fn conj(&self, a: &FqElem) -> Result<FqElem> {
        if !self.has_conjugation() {
            return Err(AlgebraError::NoConjugation {
                e: self.inner.e,
                q_exp: self.inner.q_exp,
            });
        }
        Ok(self.frobenius(a, 1))
    }

    /// All field elements in canonical (value-key) order. Intended for small
    /// fields only; panics above 2^22 elements.
    pub fn enumerate(&self) -> Vec<FqElem> {
        let n = self.order();
        assert!(n <= 1 << 22, "field too large to enumerate");
        let p = self.inner.p;
        let e = self.inner.e;
        let mut out = Vec::with_capacity(n as usize);
        let mut c = vec![0u64; e];
        loop {
            out.push(FqElem {
                field_id: self.inner.id,
                c: c.clone(),
            });
            let mut i = e;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                c[i] += 1;
                if c[i] < p {
                    break;
                }
                c[i] = 0;
            }
        }
    }
}

/// A field embedding, determined by the image of the source generator.
#[derive(Clone, Debug)]
pub struct FieldEmbedding {
    from_id: u64,
    to_id: u64,
    /// Images of gen^0, gen^1, ..., gen^(e_from - 1).
    gen_powers: Vec<FqElem>,
    p: u64,
    e_from: usize,
    e_to: usize,
    from_ctx: FieldCtx,
    to_ctx: FieldCtx,
}

impl FieldEmbedding {
    /// Canonical embedding: sends the generator of `from` to the least root
    /// (by value key) of `from.modulus` in `to`.
    pub fn new(from: &FieldCtx, to: &FieldCtx) -> Result<FieldEmbedding> {
        assert_eq!(from.p(), to.p());
        assert!(to.e() % from.e() == 0, "no embedding: degree mismatch");
        let modulus_in_to = crate::poly::Poly::from_fp_coeffs(to, from.modulus());
        let mut roots = crate::factor::roots_in_field(&modulus_in_to);
        roots.sort_by_key(|r| r.value_key(to.p()));
        let root = roots
            .first()
            .cloned()
            .expect("base modulus must split in the extension");
        let mut gen_powers = Vec::with_capacity(from.e());
        let mut acc = to.one();
        for _ in 0..from.e() {
            gen_powers.push(acc.clone());
            acc = to.mul(&acc, &root);
        }
        Ok(FieldEmbedding {
            from_id: from.id(),
            to_id: to.id(),
            gen_powers,
            p: from.p(),
            e_from: from.e(),
            e_to: to.e(),
            from_ctx: from.clone(),
            to_ctx: to.clone(),
        })
    }

    pub fn identity(f: &FieldCtx) -> FieldEmbedding {
        let mut gen_powers = Vec::with_capacity(f.e());
        let mut acc = f.one();
        for _ in 0..f.e() {
            gen_powers.push(acc.clone());
            acc = f.mul(&acc, &f.generator());
        }
        FieldEmbedding {
            from_id: f.id(),
            to_id: f.id(),
            gen_powers,
            p: f.p(),
            e_from: f.e(),
            e_to: f.e(),
            from_ctx: f.clone(),
            to_ctx: f.clone(),
        }
    }

    pub fn apply(&self, x: &FqElem) -> FqElem {
        assert_eq!(x.field_id, self.from_id, "embedding source mismatch");
        let to = &self.to_ctx;
        let mut acc = to.zero();
        for (j, gp) in self.gen_powers.iter().enumerate() {
            if x.c[j] != 0 {
                acc = to.add(&acc, &to.scale(gp, x.c[j]));
            }
        }
        acc
    }

    /// Inverse image, if `y` lies in the embedded subfield. Solves the
    /// GF(p)-linear system over the images of the generator powers.
    pub fn pullback(&self, y: &FqElem) -> Option<FqElem> {
        assert_eq!(y.field_id, self.to_id, "pullback target mismatch");
        // Build matrix with columns = gen_powers in GF(p)^e_to, solve M v = y.
        let rows = self.e_to;
        let cols = self.e_from;
        let p = self.p;
        let mut m = vec![0u64; rows * (cols + 1)];
        for (j, gp) in self.gen_powers.iter().enumerate() {
            for i in 0..rows {
                m[i * (cols + 1) + j] = gp.c[i];
            }
        }
        for i in 0..rows {
            m[i * (cols + 1) + cols] = y.c[i];
        }
        // Gaussian elimination over GF(p).
        let w = cols + 1;
        let mut pivot_row = 0;
        let mut pivots = vec![];
        for col in 0..cols {
            let mut sel = None;
            for r in pivot_row..rows {
                if m[r * w + col] != 0 {
                    sel = Some(r);
                    break;
                }
            }
            let Some(r) = sel else { continue };
            if r != pivot_row {
                for k in 0..w {
                    m.swap(pivot_row * w + k, r * w + k);
                }
            }
            let inv = pmod::inv_mod(m[pivot_row * w + col], p);
            for c in 0..w {
                m[pivot_row * w + c] = m[pivot_row * w + c] * inv % p;
            }
            for r2 in 0..rows {
                if r2 != pivot_row && m[r2 * w + col] != 0 {
                    let f = m[r2 * w + col];
                    for c in 0..w {
                        m[r2 * w + c] = (m[r2 * w + c] + (p - f % p) * m[pivot_row * w + c]) % p;
                    }
                }
            }
            pivots.push((pivot_row, col));
            pivot_row += 1;
        }
        // Consistency: rows beyond pivots must have zero rhs.
        for r in pivot_row..rows {
            if m[r * w + cols] != 0 {
                return None;
            }
        }
        let mut v = vec![0u64; cols];
        for &(r, c) in &pivots {
            v[c] = m[r * w + cols];
        }
        Some(self.from_ctx.from_coeffs(&v))
    }

    pub fn from_ctx(&self) -> &FieldCtx {
        &self.from_ctx
    }
    pub fn to_ctx(&self) -> &FieldCtx {
        &self.to_ctx
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_field_orders() {
        let f3 = FieldCtx::base(3, 1).unwrap();
        assert_eq!(f3.order(), 3);
        let f9 = FieldCtx::base(3, 2).unwrap();
        assert_eq!(f9.order(), 9);
        let f125 = FieldCtx::base(5, 3).unwrap();
        assert_eq!(f125.order(), 125);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(FieldCtx::base(4, 1).is_err());
        assert!(FieldCtx::base(2, 3).is_err());
        assert!(FieldCtx::base(9, 1).is_err());
        assert!(FieldCtx::base(3, 0).is_err());
        assert!(FieldCtx::base(3, 17).is_err());
    }

    #[test]
    fn f9_modulus_is_lambda_squared_plus_one() {
        let f9 = FieldCtx::base(3, 2).unwrap();
        assert_eq!(f9.modulus(), &[1, 0, 1]);
        // t^2 = -1 for the generator t
        let t = f9.generator();
        let t2 = f9.mul(&t, &t);
        assert_eq!(t2, f9.from_i64(-1));
    }

    #[test]
    fn field_axioms_sampled() {
        let f = FieldCtx::base(5, 2).unwrap();
        let elems = f.enumerate();
        for a in elems.iter().take(8) {
            for b in elems.iter().take(8) {
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.add(a, b), f.add(b, a));
                if !f.is_zero(b) {
                    let q = f.div(a, b);
                    assert_eq!(f.mul(&q, b), *a);
                }
            }
        }
        // x^(p^e) = x for everything
        for a in &elems {
            assert_eq!(f.pow(a, f.order()), *a);
        }
    }

    #[test]
    fn frobenius_on_f125_via_direct_exponentiation() {
        // q = 5 here (q_exp = 3 would make sigma trivial on the field; use a
        // tower: base GF(5), extension of degree 3).
        let f5 = FieldCtx::base(5, 1).unwrap();
        let (f125, emb) = f5.extension(3).unwrap();
        assert_eq!(f125.q(), 5);
        for (i, a) in f125.enumerate().into_iter().enumerate() {
            if i % 7 != 0 {
                continue; // ~20 samples
            }
            let direct = f125.pow(&a, 5);
            assert_eq!(f125.frobenius(&a, 1), direct);
            assert_eq!(f125.frobenius(&a, 3), a);
        }
        let _ = emb;
    }

    #[test]
    fn frobenius_fixes_base_field() {
        let f3 = FieldCtx::base(3, 1).unwrap();
        let (f81, emb) = f3.extension(4).unwrap();
        for x in f3.enumerate() {
            let y = emb.apply(&x);
            assert_eq!(f81.frobenius(&y, 1), y);
        }
        // random-ish x in GF(3^4): x^(q^4) = x with q = 3
        for (i, a) in f81.enumerate().into_iter().enumerate() {
            if i % 11 == 0 {
                assert_eq!(f81.frobenius(&a, 4), a);
            }
        }
    }

    #[test]
    fn conjugation_on_f9() {
        let f3 = FieldCtx::base(3, 1).unwrap();
        let (f9, _) = f3.extension(2).unwrap();
        assert!(f9.has_conjugation());
        let t = f9.generator(); // t^2 = -1
        assert_eq!(f9.conj(&t).unwrap(), f9.neg(&t)); // t^3 = -t
        let plain = FieldCtx::base(3, 2).unwrap();
        assert!(!plain.has_conjugation());
        assert!(plain.conj(&plain.one()).is_err());
    }

    #[test]
    fn embedding_pullback_roundtrip() {
        let f3 = FieldCtx::base(3, 1).unwrap();
        let (f9, _) = f3.extension(2).unwrap();
        let (f81, emb) = f9.extension(2).unwrap();
        for x in f9.enumerate() {
            let y = emb.apply(&x);
            assert_eq!(emb.pullback(&y), Some(x));
        }
        // an element outside the subfield has no pullback
        let g = f81.generator();
        assert_eq!(emb.pullback(&g), None);
    }

    #[test]
    #[should_panic(expected = "different field")]
    fn cross_field_arithmetic_panics() {
        let a = FieldCtx::base(3, 1).unwrap();
        let b = FieldCtx::base(5, 1).unwrap();
        let _ = a.add(&a.one(), &b.one());
    }
}
