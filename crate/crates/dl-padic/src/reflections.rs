//! Residual determinants of lattice-stabilizing reflection products:
//! the determinant on `L^vee / L` is `(-1)^k` where `k` counts the
//! reflection vectors of valuation-one norm.

use crate::lattice::LatticeData;
use crate::matrix::{congruence_diagonalize, solve_in_lattice, PMatrix};
use crate::ring::{PadicCtx, PadicElem};
use crate::{PadicError, Result};

/// Outcome of the determinant computation for one reflection product.
#[derive(Clone, Debug)]
pub struct DeterminantCheck {
    pub valuation_one_count: usize,
    pub det_is_one: bool,
    /// `det(hbar) == (-1)^valuation_one_count`.
    pub parity_law_holds: bool,
}

/// The reflection `x -> x - 2 [x, v]/[v, v] v` as a matrix, with the form
/// given by `gram` (symmetric; the ring must be orthogonal).
pub fn reflection_matrix(ctx: &PadicCtx, gram: &PMatrix, v: &[PadicElem]) -> Result<PMatrix> {
    let n = gram.rows;
    let gv = gram.mul_vec(ctx, &v.to_vec());
    // norm [v, v]
    let mut norm = ctx.zero();
    for i in 0..n {
        norm = ctx.add(&norm, &ctx.mul(&v[i], &gv[i]));
    }
    let two = ctx.from_u64(2);
    let mut m = PMatrix::identity(ctx, n);
    for col in 0..n {
        // [e_col, v] = (G v)_col by symmetry
        let coef = ctx.div(&ctx.mul(&two, &gv[col]), &norm)?;
        for row in 0..n {
            let t = ctx.sub(m.at(row, col), &ctx.mul(&coef, &v[row]));
            m.set(row, col, t);
        }
    }
    Ok(m)
}

/// Valuation of `[v, v]`, after certifying that `v` is primitive and the
/// reflection stabilizes the standard lattice.
pub fn certified_norm_valuation(
    ctx: &PadicCtx,
    gram: &PMatrix,
    v: &[PadicElem],
) -> Result<usize> {
    let n = gram.rows;
    // primitivity
    let minv = v
        .iter()
        .map(|x| ctx.valuation(x).unwrap_or(usize::MAX))
        .min()
        .unwrap_or(usize::MAX);
    if minv != 0 {
        return Err(PadicError::BadParameter(
            "reflection vector must be primitive in the lattice".into(),
        ));
    }
    let gv = gram.mul_vec(ctx, &v.to_vec());
    let mut norm = ctx.zero();
    for i in 0..n {
        norm = ctx.add(&norm, &ctx.mul(&v[i], &gv[i]));
    }
    let nv = ctx.valuation(&norm).map_err(|p| {
        PadicError::PrecisionExhausted(format!("norm indistinguishable from zero at {p}"))
    })?;
    // stability of the standard lattice: v([e_i, v]) >= v([v, v]) for all i
    let stable = gv
        .iter()
        .all(|x| ctx.valuation(x).map(|w| w >= nv).unwrap_or(true));
    if !stable {
        return Err(PadicError::BadParameter(
            "reflection does not stabilize the lattice".into(),
        ));
    }
    if nv >= 2 {
        return Err(PadicError::BadParameter(format!(
            "lattice-stabilizing reflection with norm valuation {nv} is malformed \
             (a primitive vector in a chain lattice has valuation 0 or 1)"
        )));
    }
    Ok(nv)
}

/// Compute the determinant of the product of the given reflections on
/// `L^vee / L` for the standard lattice with the given Gram matrix
/// (which must satisfy `p L^vee <= L <= L^vee`), and cross-check the
/// reflection-count parity law.
pub fn residual_determinant_check(
    ctx: &PadicCtx,
    gram: &PMatrix,
    vectors: &[Vec<PadicElem>],
) -> Result<DeterminantCheck> {
    if ctx.is_unitary() {
        return Err(PadicError::BadParameter(
            "determinant check runs over the orthogonal ring".into(),
        ));
    }
    let n = gram.rows;
    let (p_transform, diag) = congruence_diagonalize(ctx, gram)?;
    let inv: Vec<usize> = diag
        .iter()
        .map(|d| ctx.valuation(d).unwrap_or(usize::MAX))
        .collect();
    if inv.iter().any(|&r| r > 1) {
        return Err(PadicError::BadParameter(
            "Gram matrix is not a chain lattice (invariants exceed one)".into(),
        ));
    }
    let mut val_one = 0usize;
    let mut h = PMatrix::identity(ctx, n);
    for v in vectors {
        let nv = certified_norm_valuation(ctx, gram, v)?;
        if nv == 1 {
            val_one += 1;
        }
        let r = reflection_matrix(ctx, gram, v)?;
        h = h.mul(ctx, &r);
    }
    // order the normal basis with the valuation-one part first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(inv[i]));
    let mut p_sorted = PMatrix::zero(ctx, n, n);
    let mut d_sorted = vec![];
    for (newj, &oldj) in order.iter().enumerate() {
        for i in 0..n {
            p_sorted.set(i, newj, p_transform.at(i, oldj).clone());
        }
        d_sorted.push(diag[oldj].clone());
    }
    let v_dim = inv.iter().filter(|&&r| r == 1).count();
    let rf = ctx.residue_field().clone();
    let mut hbar = dl_classical::Matrix::zero(&rf, v_dim, v_dim);
    for i in 0..v_dim {
        let he = h.mul_vec(ctx, &p_sorted.column(i));
        let coords = solve_in_lattice(ctx, &p_sorted, &he)
            .map_err(|e| PadicError::NotStable(format!("product does not stabilize: {e}")))?;
        for j in 0..v_dim {
            let scaled = ctx.mul(&coords[j], &d_sorted[j]);
            let coeff = ctx.div(&scaled, &d_sorted[i]).map_err(|e| {
                PadicError::NotStable(format!("product does not stabilize the dual: {e}"))
            })?;
            hbar.set(j, i, ctx.residue(&coeff)?);
        }
    }
    let det = hbar.det();
    let det_is_one = det == rf.one();
    let expected = if val_one % 2 == 0 {
        rf.one()
    } else {
        rf.neg(&rf.one())
    };
    Ok(DeterminantCheck {
        valuation_one_count: val_one,
        det_is_one,
        parity_law_holds: det == expected,
    })
}

/// Convenience: the lattice data of the standard lattice under a Gram.
pub fn standard_lattice_data(ctx: &PadicCtx, gram: &PMatrix) -> Result<LatticeData> {
    let n = gram.rows;
    let (p_transform, diag) = congruence_diagonalize(ctx, gram)?;
    let vals: Vec<usize> = diag
        .iter()
        .map(|d| ctx.valuation(d).unwrap_or(usize::MAX))
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(vals[i]));
    let mut p_sorted = PMatrix::zero(ctx, n, n);
    let mut d_sorted = vec![];
    let mut inv = vec![];
    for (newj, &oldj) in order.iter().enumerate() {
        for i in 0..n {
            p_sorted.set(i, newj, p_transform.at(i, oldj).clone());
        }
        d_sorted.push(diag[oldj].clone());
        inv.push(vals[oldj]);
    }
    let minuscule = inv.iter().all(|&r| r <= 1);
    Ok(LatticeData {
        basis: PMatrix::identity(ctx, n),
        gram: gram.clone(),
        p_transform: p_sorted,
        diag_entries: d_sorted,
        invariant: inv,
        minuscule,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn chain_gram(ctx: &PadicCtx, unit_dim: usize, pi_dim: usize) -> PMatrix {
        let n = unit_dim + pi_dim;
        let mut g = PMatrix::identity(ctx, n);
        for i in unit_dim..n {
            g.set(i, i, ctx.pi_pow(1));
        }
        g
    }

    fn random_stabilizing_vector(
        ctx: &PadicCtx,
        gram: &PMatrix,
        rng: &mut ChaCha8Rng,
    ) -> Vec<PadicElem> {
        let rf = ctx.residue_field().clone();
        let elems = rf.enumerate();
        loop {
            let v: Vec<PadicElem> = (0..gram.rows)
                .map(|_| {
                    let r = elems[rng.gen_range(0..elems.len())].clone();
                    ctx.random_lift(&r, rng)
                })
                .collect();
            // primitivize
            let minv = v
                .iter()
                .filter_map(|x| ctx.valuation(x).ok())
                .min()
                .unwrap_or(usize::MAX);
            if minv == usize::MAX {
                continue;
            }
            let v: Vec<PadicElem> = v
                .iter()
                .map(|x| ctx.shift_down(x, minv).unwrap())
                .collect();
            if certified_norm_valuation(ctx, gram, &v).is_ok() {
                return v;
            }
        }
    }

    #[test]
    fn unit_norm_reflection_acts_trivially() {
        let ctx = PadicCtx::orthogonal(3, 1, 12).unwrap();
        let gram = chain_gram(&ctx, 2, 2);
        // e_0 has unit norm
        let v = vec![ctx.one(), ctx.zero(), ctx.zero(), ctx.zero()];
        let check = residual_determinant_check(&ctx, &gram, &[v.clone()]).unwrap();
        assert_eq!(check.valuation_one_count, 0);
        assert!(check.det_is_one);
        assert!(check.parity_law_holds);
        // stronger: the induced map on the residue space is the identity
        let data = standard_lattice_data(&ctx, &gram).unwrap();
        let refl = reflection_matrix(&ctx, &gram, &v).unwrap();
        let residue = crate::lattice::residue_space(&ctx, &data, &refl).unwrap();
        let rf = ctx.residue_field().clone();
        assert_eq!(
            residue.gbar,
            dl_classical::Matrix::identity(&rf, residue.dim)
        );
    }

    #[test]
    fn diagonal_pi_gram_invariants() {
        // Gram diag(p, 1, ..., 1): invariant (1, 0, ..., 0), minuscule;
        // diag(p^2, 1, ..., 1): invariant (2, 0, ..., 0), not minuscule
        let ctx = PadicCtx::orthogonal(3, 1, 12).unwrap();
        for (power, expect, minuscule) in
            [(1usize, vec![1, 0, 0], true), (2, vec![2, 0, 0], false)]
        {
            let mut gram = PMatrix::identity(&ctx, 3);
            gram.set(0, 0, ctx.pi_pow(power));
            let data = standard_lattice_data(&ctx, &gram).unwrap();
            assert_eq!(data.invariant, expect);
            assert_eq!(data.minuscule, minuscule);
        }
    }

    #[test]
    fn two_pi_norm_reflections_have_determinant_one() {
        let ctx = PadicCtx::orthogonal(3, 1, 12).unwrap();
        let gram = chain_gram(&ctx, 1, 2);
        // e_1 and e_2 have norm p
        let v1 = vec![ctx.zero(), ctx.one(), ctx.zero()];
        let v2 = vec![ctx.zero(), ctx.zero(), ctx.one()];
        let check = residual_determinant_check(&ctx, &gram, &[v1, v2]).unwrap();
        assert_eq!(check.valuation_one_count, 2);
        assert!(check.det_is_one);
        assert!(check.parity_law_holds);
    }

    #[test]
    fn parity_law_on_random_products() {
        let ctx = PadicCtx::orthogonal(5, 1, 10).unwrap();
        let gram = chain_gram(&ctx, 2, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..40 {
            let count = rng.gen_range(1..=6usize);
            let vs: Vec<Vec<PadicElem>> = (0..count)
                .map(|_| random_stabilizing_vector(&ctx, &gram, &mut rng))
                .collect();
            let check = residual_determinant_check(&ctx, &gram, &vs).unwrap();
            assert!(check.parity_law_holds);
            assert_eq!(check.det_is_one, check.valuation_one_count % 2 == 0);
        }
    }
}
