//! Verification suites for the algebra layer. Each suite runs a batch of
//! randomized or exhaustive checks and reports the number of cases together
//! with the first counterexample on failure.

use crate::factor::is_irreducible;
use crate::field::FieldCtx;
use crate::poly::Poly;
use crate::reciprocal::{
    admissible_enumerations, enumerate_uu_star, reciprocal, script_m, AdmissibleMode,
};
use crate::sampling::{random_unique_odd_sr, sr_irreducibles};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type SuiteOutcome = Result<usize, String>;

fn random_monic_nonzero_const(
    field: &FieldCtx,
    rng: &mut impl Rng,
    max_deg: usize,
) -> Poly {
    loop {
        let deg = rng.gen_range(1..=max_deg);
        let elems = field.enumerate();
        let mut coeffs: Vec<_> = (0..deg)
            .map(|_| elems[rng.gen_range(0..elems.len())].clone())
            .collect();
        coeffs.push(field.one());
        let f = Poly::new(field, coeffs);
        if !field.is_zero(&f.coeff(0)) {
            return f;
        }
    }
}

/// `(f*)* = f` in both modes.
pub fn reciprocal_involution(budget: usize) -> SuiteOutcome {
    let f3 = FieldCtx::base(3, 1).unwrap();
    let f5 = FieldCtx::base(5, 1).unwrap();
    let (f9, _) = f3.extension(2).unwrap();
    let (f25, _) = f5.extension(2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5ec1);
    let mut cases = 0;
    for (field, conj) in [(&f3, false), (&f5, false), (&f9, true), (&f25, true)] {
        for _ in 0..budget.div_ceil(4) {
            let f = random_monic_nonzero_const(field, &mut rng, 8);
            let once = reciprocal(&f, conj).map_err(|e| e.to_string())?;
            let twice = reciprocal(&once, conj).map_err(|e| e.to_string())?;
            if twice != f {
                return Err(format!("involution failed for {f:?} (conj = {conj})"));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

/// `(fg)* = f* g*` on random coprime pairs.
pub fn reciprocal_multiplicativity(budget: usize) -> SuiteOutcome {
    let f3 = FieldCtx::base(3, 1).unwrap();
    let (f9, _) = f3.extension(2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x307d);
    let mut cases = 0;
    for (field, conj) in [(&f3, false), (&f9, true)] {
        while cases < budget / 2 * (1 + (conj as usize)) {
            let f = random_monic_nonzero_const(field, &mut rng, 6);
            let g = random_monic_nonzero_const(field, &mut rng, 6);
            if !f.gcd(&g).is_one() {
                continue;
            }
            let lhs = reciprocal(&f.mul(&g), conj).map_err(|e| e.to_string())?;
            let rhs = reciprocal(&f, conj)
                .map_err(|e| e.to_string())?
                .mul(&reciprocal(&g, conj).map_err(|e| e.to_string())?);
            if lhs != rhs {
                return Err(format!("multiplicativity failed for {f:?}, {g:?}"));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

/// Roots of `f*` in the splitting field are exactly the conjugate-inverses
/// of the roots of `f`, with multiplicity.
pub fn root_characterization(budget: usize) -> SuiteOutcome {
    let f3 = FieldCtx::base(3, 1).unwrap();
    let (f9, _) = f3.extension(2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x0071);
    let mut cases = 0;
    for (field, conj) in [(&f3, false), (&f9, true)] {
        let (ext, emb) = field.extension(6).map_err(|e| e.to_string())?;
        for _ in 0..budget.div_ceil(2) {
            let f = random_monic_nonzero_const(field, &mut rng, 6);
            let fe = f.map_field(&emb);
            let mut roots = crate::factor::roots_in_field(&fe);
            if roots.len() < fe.degree() {
                continue; // not split by degree 6; skip (degree with large prime factor)
            }
            let fs = reciprocal(&f, conj).map_err(|e| e.to_string())?.map_field(&emb);
            let mut starred = crate::factor::roots_in_field(&fs);
            let steps = if conj { 1 } else { 0 };
            let mut expected: Vec<_> = roots
                .drain(..)
                .map(|x| ext.inv(&ext.frobenius(&x, steps)))
                .collect();
            expected.sort_by_key(|x| x.value_key(ext.p()));
            starred.sort_by_key(|x| x.value_key(ext.p()));
            if expected != starred {
                return Err(format!("root characterization failed for {f:?}"));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

/// `|{U : UU* = f/Q0^m}| = M(f)`, independent of the odd `m` chosen.
pub fn lemma_mmm(budget: usize) -> SuiteOutcome {
    let f3 = FieldCtx::base(3, 1).unwrap();
    let (f9, _) = f3.extension(2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x33a);
    let mut cases = 0;
    for (field, conj) in [(&f3, false), (&f9, true)] {
        for _ in 0..budget.div_ceil(2) {
            let (f, q0, m0) = random_unique_odd_sr(field, conj, &mut rng, 2);
            let want = script_m(&f, conj).map_err(|e| e.to_string())?;
            let mut m = 1;
            while m <= m0 {
                let us = enumerate_uu_star(&f, &q0, m, conj).map_err(|e| e.to_string())?;
                if us.len() as u64 != want {
                    return Err(format!(
                        "count {} != M(f) = {want} for f = {f:?}, m = {m}",
                        us.len()
                    ));
                }
                let h = f.div_exact(&q0.pow(m));
                for u in &us {
                    let ustar = reciprocal(u, conj).map_err(|e| e.to_string())?;
                    if u.mul(&ustar) != h {
                        return Err(format!("UU* != f/Q0^m for U = {u:?}"));
                    }
                }
                m += 2;
            }
            cases += 1;
        }
    }
    Ok(cases)
}

/// Every self-reciprocal irreducible over `GF(q)` is `lambda +- 1` or of
/// even degree (exhaustive up to degree 6, q in {3, 5}).
pub fn even_deg(_budget: usize) -> SuiteOutcome {
    let mut cases = 0;
    for p in [3u64, 5] {
        let field = FieldCtx::base(p, 1).unwrap();
        for d in 1..=6 {
            if p == 5 && d > 4 {
                continue; // 5^5 coefficient vectors are fine; degree 5/6 over GF(5) get big but still ok at 5^6 ~ 15625
            }
            for q in sr_irreducibles(&field, d, false) {
                cases += 1;
                let is_linear_pm1 = d == 1;
                if !is_linear_pm1 && d % 2 != 0 {
                    return Err(format!("odd-degree SR irreducible {q:?} over GF({p})"));
                }
                if is_linear_pm1 {
                    let c = q.coeff(0);
                    if c != field.one() && c != field.neg(&field.one()) {
                        return Err(format!("linear SR irreducible {q:?} is not lambda +- 1"));
                    }
                }
            }
        }
    }
    Ok(cases)
}

/// The inverse-shift relation for odd-degree SR2 admissible enumerations,
/// d in {3, 5}.
pub fn odd_deg_relation(_budget: usize) -> SuiteOutcome {
    let f3 = FieldCtx::base(3, 1).unwrap();
    let (f9, _) = f3.extension(2).unwrap();
    let mut cases = 0;
    for d in [3usize, 5] {
        let pool = crate::sampling::sr2_irreducibles_via_circle(&f9, d);
        if pool.is_empty() {
            return Err(format!("no SR2 irreducibles of degree {d} over GF(9)?"));
        }
        for q in pool.iter().take(4) {
            let adm =
                admissible_enumerations(q, AdmissibleMode::OddSr2).map_err(|e| e.to_string())?;
            let ext = &adm.splitting_field;
            for seq in &adm.sequences {
                for j in 0..d {
                    let lhs = ext.frobenius(&ext.inv(&seq[j]), 1);
                    let rhs = &seq[(j + (d + 1) / 2) % d];
                    if &lhs != rhs {
                        return Err(format!("inverse-shift relation failed for {q:?}"));
                    }
                }
                cases += 1;
            }
            if adm.sequences.len() != d {
                return Err(format!("expected {d} enumerations for {q:?}"));
            }
            debug_assert!(is_irreducible(q));
        }
    }
    Ok(cases)
}
