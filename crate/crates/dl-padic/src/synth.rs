//! Reverse synthesis of minuscule test instances.
//!
//! Forward random sampling essentially never hits minuscule elements, so
//! instances are built backwards: on the quotient module `O[lambda]/(f)`
//! with `f` conjugate-self-reciprocal, multiplication by `lambda` preserves
//! a family of Hermitian forms `[x, y] = T(x iota(y))`, where `iota` is the
//! coefficient-conjugating inversion `lambda -> lambda^-1` and `T` any
//! conjugation-symmetric linear functional. Choosing `T` unimodular on one
//! coprime block and `p`-scaled on the other produces an element whose
//! Krylov lattice is the full module, with invariant `(1^a, 0^b)` and
//! prescribed residue characteristic polynomial.

use crate::matrix::PMatrix;
use crate::ring::{PadicCtx, PadicElem};
use crate::{PadicError, Result};
use dl_algebra::{FqElem, Poly};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Quotient-ring elements as coefficient vectors modulo a monic modulus.
struct ModPoly<'a> {
    ctx: &'a PadicCtx,
    modulus: Vec<PadicElem>, // monic, length d + 1
}

impl<'a> ModPoly<'a> {
    fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    fn zero(&self) -> Vec<PadicElem> {
        vec![self.ctx.zero(); self.degree()]
    }

    fn one(&self) -> Vec<PadicElem> {
        let mut v = self.zero();
        v[0] = self.ctx.one();
        v
    }

    fn mul(&self, a: &[PadicElem], b: &[PadicElem]) -> Vec<PadicElem> {
        let ctx = self.ctx;
        let d = self.degree();
        let mut prod = vec![ctx.zero(); 2 * d - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                let t = ctx.mul(x, y);
                prod[i + j] = ctx.add(&prod[i + j], &t);
            }
        }
        for i in (d..prod.len()).rev() {
            let c = prod[i].clone();
            prod[i] = ctx.zero();
            for j in 0..d {
                let t = ctx.mul(&c, &self.modulus[j]);
                prod[i - d + j] = ctx.sub(&prod[i - d + j], &t);
            }
        }
        prod.truncate(d);
        prod
    }

    /// The class of `lambda^-1`: `-f_0^-1 (lambda^(d-1) + f_(d-1) lambda^(d-2)
    /// + ... + f_1)`.
    fn lambda_inverse(&self) -> Result<Vec<PadicElem>> {
        let ctx = self.ctx;
        let d = self.degree();
        let f0_inv = ctx.inv(&self.modulus[0])?;
        let mut v = self.zero();
        for j in 1..=d {
            // coefficient of lambda^(j-1) is f_j (with f_d = 1)
            let c = if j == d {
                ctx.one()
            } else {
                self.modulus[j].clone()
            };
            v[j - 1] = ctx.neg(&ctx.mul(&f0_inv, &c));
        }
        Ok(v)
    }

    /// Powers `lambda^k` for `k = -(d-1) ..= d-1`, index shifted by `d-1`.
    fn lambda_power_table(&self) -> Result<Vec<Vec<PadicElem>>> {
        let d = self.degree();
        let mut lambda = self.zero();
        if d == 1 {
            // lambda = -f_0 as a constant
            lambda[0] = self.ctx.neg(&self.modulus[0]);
        } else {
            lambda[1] = self.ctx.one();
        }
        let linv = self.lambda_inverse()?;
        let mut table = vec![self.one(); 2 * d - 1];
        for k in 1..d {
            table[d - 1 + k] = self.mul(&table[d - 1 + k - 1], &lambda);
            table[d - 1 - k] = self.mul(&table[d - 1 - k + 1], &linv);
        }
        Ok(table)
    }
}

/// Lift a norm-one residue element to a norm-one ring element (Newton).
fn lift_norm_one(ctx: &PadicCtx, residue: &FqElem) -> Result<PadicElem> {
    let mut x = ctx.lift_residue(residue);
    let inv2 = ctx.inv(&ctx.from_u64(2))?;
    for _ in 0..ctx.precision() + 1 {
        let nx = ctx.mul(&x, &ctx.conj(&x));
        let diff = ctx.sub(&nx, &ctx.one());
        if ctx.valuation(&diff).is_err() {
            break;
        }
        // x <- x (1 + (N(x)^-1 - 1)/2)
        let e = ctx.mul(&ctx.sub(&ctx.inv(&nx)?, &ctx.one()), &inv2);
        x = ctx.mul(&x, &ctx.add(&ctx.one(), &e));
    }
    let check = ctx.sub(&ctx.mul(&x, &ctx.conj(&x)), &ctx.one());
    if !ctx.is_zero_at_full_precision(&check) {
        return Err(PadicError::Internal("norm-one lift did not converge".into()));
    }
    Ok(x)
}

/// Lift an odd-degree self-reciprocal residue polynomial to a
/// conjugate-self-reciprocal monic lift: `f_(d-j) = f_0 conj(f_j)` with
/// `f_0` of norm one.
fn lift_conjugate_self_reciprocal(
    ctx: &PadicCtx,
    fbar: &Poly,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<PadicElem>> {
    let d = fbar.degree();
    assert!(d % 2 == 1, "odd degree avoids a middle-coefficient constraint");
    let f0 = lift_norm_one(ctx, &fbar.coeff(0))?;
    let mut coeffs = vec![ctx.zero(); d + 1];
    coeffs[0] = f0.clone();
    coeffs[d] = ctx.one();
    for j in 1..=(d - 1) / 2 {
        coeffs[j] = ctx.random_lift(&fbar.coeff(j), rng);
    }
    for j in 1..=(d - 1) / 2 {
        coeffs[d - j] = ctx.mul(&f0, &ctx.conj(&coeffs[j]));
    }
    // residue and self-reciprocity checks
    for (j, c) in coeffs.iter().enumerate() {
        if ctx.residue(c)? != fbar.coeff(j) {
            return Err(PadicError::Internal("lift residue mismatch".into()));
        }
    }
    Ok(coeffs)
}

/// The conjugate-reciprocal of a monic ring polynomial with unit constant
/// term: `f*(lambda) = conj(f_0)^-1 lambda^d f(1/lambda)^conj`.
fn ring_conj_reciprocal(ctx: &PadicCtx, f: &[PadicElem]) -> Result<Vec<PadicElem>> {
    let d = f.len() - 1;
    let scale = ctx.inv(&ctx.conj(&f[0]))?;
    let mut out: Vec<PadicElem> = f.iter().rev().map(|c| ctx.conj(c)).collect();
    for c in out.iter_mut() {
        *c = ctx.mul(c, &scale);
    }
    let _ = d;
    Ok(out)
}

/// One block of the synthesized element: companion matrix together with a
/// compatible unimodular Hermitian Gram.
fn build_block(
    ctx: &PadicCtx,
    f: &[PadicElem],
    rng: &mut ChaCha8Rng,
) -> Result<(PMatrix, PMatrix)> {
    let d = f.len() - 1;
    let ring = ModPoly {
        ctx,
        modulus: f.to_vec(),
    };
    let table = ring.lambda_power_table()?;
    let rf = ctx.residue_field().clone();
    // companion matrix of f
    let mut companion = PMatrix::zero(ctx, d, d);
    for i in 1..d {
        companion.set(i, i - 1, ctx.one());
    }
    for i in 0..d {
        companion.set(i, d - 1, ctx.neg(&f[i]));
    }
    // search a coefficient functional S with unimodular symmetrized Gram
    let mut attempts: Vec<Vec<PadicElem>> = (0..d)
        .rev()
        .map(|j| {
            let mut s = vec![ctx.zero(); d];
            s[j] = ctx.one();
            s
        })
        .collect();
    for _ in 0..20 {
        let s: Vec<PadicElem> = (0..d)
            .map(|_| {
                let r = rf.enumerate()[rng.gen_range(0..rf.order() as usize)].clone();
                ctx.lift_residue(&r)
            })
            .collect();
        attempts.push(s);
    }
    for s in attempts {
        let apply_s = |z: &[PadicElem]| -> PadicElem {
            let mut acc = ctx.zero();
            for (c, w) in z.iter().zip(&s) {
                acc = ctx.add(&acc, &ctx.mul(c, w));
            }
            acc
        };
        // T(z) = S(z) + conj(S(iota(z))); on the power table,
        // iota(lambda^k) is exactly the lambda^-k element
        let t_of_power = |k: i64| -> PadicElem {
            let z = &table[(d as i64 - 1 + k) as usize];
            let zi = &table[(d as i64 - 1 - k) as usize];
            ctx.add(&apply_s(z), &ctx.conj(&apply_s(zi)))
        };
        let mut gram = PMatrix::zero(ctx, d, d);
        for a in 0..d {
            for b in 0..d {
                gram.set(a, b, t_of_power(a as i64 - b as i64));
            }
        }
        // unimodular?
        let det = gram.residue(ctx)?.det();
        if rf.is_zero(&det) {
            continue;
        }
        // Hermitian and companion-unitary; both are structural, verify hard
        let gh = gram.transpose(ctx).map_conj(ctx);
        for a in 0..d {
            for b in 0..d {
                let diff = ctx.sub(gram.at(a, b), gh.at(a, b));
                if !ctx.is_zero_at_full_precision(&diff) {
                    return Err(PadicError::Internal("Gram not Hermitian".into()));
                }
            }
        }
        let lhs = companion
            .transpose(ctx)
            .mul(ctx, &gram)
            .mul(ctx, &companion.map_conj(ctx));
        for a in 0..d {
            for b in 0..d {
                let diff = ctx.sub(lhs.at(a, b), gram.at(a, b));
                if !ctx.is_zero_at_full_precision(&diff) {
                    return Err(PadicError::Internal(
                        "companion not unitary for the built form".into(),
                    ));
                }
            }
        }
        return Ok((companion, gram));
    }
    Err(PadicError::Internal(
        "no unimodular symmetrized functional found".into(),
    ))
}

/// A fully synthesized minuscule instance.
pub struct SynthesizedInstance {
    pub g: PMatrix,
    pub u: Vec<PadicElem>,
    pub gram: PMatrix,
    pub n: usize,
    pub expected_inv: Vec<usize>,
    /// Expected residue characteristic polynomial, over the residue field.
    pub expected_residue_charpoly: Poly,
}

/// Synthesize an instance whose residue space has characteristic polynomial
/// `fbar1` (self-reciprocal, odd degree over the residue field) and whose
/// unimodular complement has dimension `filler_pairs * 2`.
pub fn synthesize_minuscule(
    ctx: &PadicCtx,
    fbar1: &Poly,
    filler_pairs: usize,
    rng: &mut ChaCha8Rng,
) -> Result<SynthesizedInstance> {
    let rf = ctx.residue_field().clone();
    assert_eq!(fbar1.field().id(), rf.id(), "residue polynomial field mismatch");
    let a = fbar1.degree();
    let f1 = lift_conjugate_self_reciprocal(ctx, fbar1, rng)?;
    // the lift is conjugate-self-reciprocal on the nose
    let f1_star = ring_conj_reciprocal(ctx, &f1)?;
    for (x, y) in f1.iter().zip(&f1_star) {
        let diff = ctx.sub(x, y);
        if !ctx.is_zero_at_full_precision(&diff) {
            return Err(PadicError::Internal("lift is not self-reciprocal".into()));
        }
    }
    let (c1, g1) = build_block(ctx, &f1, rng)?;

    // filler block: product of lifted reciprocal pairs, coprime to fbar1
    let mut f2: Vec<PadicElem> = vec![ctx.one()];
    let elems = rf.enumerate();
    for _ in 0..filler_pairs {
        loop {
            // random monic linear with nonzero constant term
            let c = elems[rng.gen_range(1..elems.len())].clone();
            let q = vec![ctx.random_lift(&c, rng), ctx.one()];
            let qstar = ring_conj_reciprocal(ctx, &q)?;
            let prod = poly_mul(ctx, &q, &qstar);
            let cand = poly_mul(ctx, &f2, &prod);
            // coprimality with fbar1 in the residue
            let cand_res = residue_poly(ctx, &cand)?;
            if cand_res.gcd(fbar1).is_one() && squarefree_enough(&cand_res) {
                f2 = cand;
                break;
            }
        }
    }
    let b = f2.len() - 1;
    let n = a + b;

    // assemble block diagonal data
    let mut g = PMatrix::zero(ctx, n, n);
    let mut gram = PMatrix::zero(ctx, n, n);
    for i in 0..a {
        for j in 0..a {
            g.set(i, j, c1.at(i, j).clone());
            gram.set(i, j, ctx.shift_up(g1.at(i, j), 1));
        }
    }
    if b > 0 {
        let (c2, g2) = build_block(ctx, &f2, rng)?;
        for i in 0..b {
            for j in 0..b {
                g.set(a + i, a + j, c2.at(i, j).clone());
                gram.set(a + i, a + j, g2.at(i, j).clone());
            }
        }
    }
    let mut u = vec![ctx.zero(); n];
    u[0] = ctx.one();
    if b > 0 {
        u[a] = ctx.one();
    }

    // conjugate by a random unimodular change of basis
    let (k, k_inv) = random_unimodular(ctx, n, rng);
    let g_out = k.mul(ctx, &g).mul(ctx, &k_inv);
    let gram_out = k_inv
        .transpose(ctx)
        .mul(ctx, &gram)
        .mul(ctx, &k_inv.map_conj(ctx));
    let u_out = k.mul_vec(ctx, &u);

    Ok(SynthesizedInstance {
        g: g_out,
        u: u_out,
        gram: gram_out,
        n,
        expected_inv: (0..n).map(|i| if i < a { 1 } else { 0 }).collect(),
        expected_residue_charpoly: fbar1.clone(),
    })
}

/// A unimodular instance: the Krylov lattice is self-dual, so the residue
/// space is zero-dimensional (the degenerate convention of the pipeline).
pub fn synthesize_unimodular(
    ctx: &PadicCtx,
    pairs: usize,
    rng: &mut ChaCha8Rng,
) -> Result<SynthesizedInstance> {
    assert!(pairs >= 1);
    let rf = ctx.residue_field().clone();
    let elems = rf.enumerate();
    let mut f2: Vec<PadicElem> = vec![ctx.one()];
    for _ in 0..pairs {
        loop {
            let c = elems[rng.gen_range(1..elems.len())].clone();
            let q = vec![ctx.random_lift(&c, rng), ctx.one()];
            let qstar = ring_conj_reciprocal(ctx, &q)?;
            let cand = poly_mul(ctx, &f2, &poly_mul(ctx, &q, &qstar));
            let cand_res = residue_poly(ctx, &cand)?;
            if squarefree_enough(&cand_res) {
                f2 = cand;
                break;
            }
        }
    }
    let n = f2.len() - 1;
    let (g, gram) = build_block(ctx, &f2, rng)?;
    let mut u = vec![ctx.zero(); n];
    u[0] = ctx.one();
    let (k, k_inv) = random_unimodular(ctx, n, rng);
    let g_out = k.mul(ctx, &g).mul(ctx, &k_inv);
    let gram_out = k_inv
        .transpose(ctx)
        .mul(ctx, &gram)
        .mul(ctx, &k_inv.map_conj(ctx));
    let u_out = k.mul_vec(ctx, &u);
    Ok(SynthesizedInstance {
        g: g_out,
        u: u_out,
        gram: gram_out,
        n,
        expected_inv: vec![0; n],
        expected_residue_charpoly: Poly::one(&rf),
    })
}

fn poly_mul(ctx: &PadicCtx, a: &[PadicElem], b: &[PadicElem]) -> Vec<PadicElem> {
    let mut out = vec![ctx.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            let t = ctx.mul(x, y);
            out[i + j] = ctx.add(&out[i + j], &t);
        }
    }
    out
}

fn residue_poly(ctx: &PadicCtx, f: &[PadicElem]) -> Result<Poly> {
    let rf = ctx.residue_field().clone();
    let mut coeffs = vec![];
    for c in f {
        coeffs.push(ctx.residue(c)?);
    }
    Ok(Poly::new(&rf, coeffs))
}

fn squarefree_enough(f: &Poly) -> bool {
    // keep filler squarefree so pair multiplicities stay transparent
    dl_algebra::squarefree_radical(f)
        .map(|r| r.degree() == f.degree())
        .unwrap_or(false)
}

/// A random unimodular matrix together with its inverse, as a product of
/// elementary operations.
pub fn random_unimodular(ctx: &PadicCtx, n: usize, rng: &mut ChaCha8Rng) -> (PMatrix, PMatrix) {
    let rf = ctx.residue_field().clone();
    let elems = rf.enumerate();
    let mut k = PMatrix::identity(ctx, n);
    let mut k_inv = PMatrix::identity(ctx, n);
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        while j == i && n > 1 {
            j = rng.gen_range(0..n);
        }
        if n == 1 {
            break;
        }
        let c = ctx.random_lift(&elems[rng.gen_range(0..elems.len())].clone(), rng);
        // E = I + c E_ij ; E^-1 = I - c E_ij
        let mut e = PMatrix::identity(ctx, n);
        e.set(i, j, c.clone());
        let mut e_inv = PMatrix::identity(ctx, n);
        e_inv.set(i, j, ctx.neg(&c));
        k = k.mul(ctx, &e);
        k_inv = e_inv.mul(ctx, &k_inv);
    }
    (k, k_inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn norm_one_lift() {
        let ctx = PadicCtx::unitary(3, 1, 12).unwrap();
        let rf = ctx.residue_field().clone();
        let t = rf.generator(); // t^(q+1) = 1
        let x = lift_norm_one(&ctx, &t).unwrap();
        assert_eq!(ctx.residue(&x).unwrap(), t);
    }

    #[test]
    fn synthesized_instance_is_unitary_and_cyclic() {
        let ctx = PadicCtx::unitary(3, 1, 16).unwrap();
        let rf = ctx.residue_field().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let fbar = dl_algebra::sampling::sr2_irreducibles_via_circle(&rf, 3)[0].clone();
        let inst = synthesize_minuscule(&ctx, &fbar, 1, &mut rng).unwrap();
        assert_eq!(inst.n, 5);
        // unitarity of g for the synthesized Gram
        let lhs = inst
            .g
            .transpose(&ctx)
            .mul(&ctx, &inst.gram)
            .mul(&ctx, &inst.g.map_conj(&ctx));
        for i in 0..inst.n {
            for j in 0..inst.n {
                let diff = ctx.sub(lhs.at(i, j), inst.gram.at(i, j));
                assert!(
                    ctx.valuation(&diff).is_err(),
                    "unitarity fails at ({i}, {j}): {diff:?}"
                );
            }
        }
    }
}
