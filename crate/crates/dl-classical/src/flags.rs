//! Invariant isotropic flags: the divisor-kernel enumeration, the induced
//! Levi actions, and the exhaustive subspace-scan oracle.

use crate::linalg::Matrix;
use crate::space::ClassicalSpace;
use crate::{ClassicalError, Result};
use dl_algebra::{factor, reciprocal, FqElem, Poly};

/// Evaluate a polynomial at a matrix.
pub fn poly_at_matrix(p: &Poly, m: &Matrix) -> Matrix {
    let f = m.field();
    let n = m.rows();
    let mut acc = Matrix::zero(f, n, n);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(m);
        for i in 0..n {
            let cur = acc.at(i, i).clone();
            acc.set(i, i, f.add(&cur, c));
        }
    }
    acc
}

/// A `g`-stable totally isotropic subspace certified by its defining monic
/// divisor: the subspace is `ker U(g)` and `U U*` divides the characteristic
/// polynomial of `g`.
#[derive(Clone, Debug)]
pub struct FlagWitness {
    /// Monic divisor of degree `i - 1`.
    pub u: Poly,
    /// Basis of the subspace, one vector per row.
    pub basis: Matrix,
}

/// Whether the minimal polynomial equals the characteristic polynomial.
pub fn is_gl_regular(g: &Matrix) -> bool {
    g.minpoly() == g.charpoly()
}

/// All monic `U` of degree `deg` with `U U*` dividing `f`, in canonical
/// order.
pub fn divisors_with_reciprocal_pair(f: &Poly, deg: usize, conjugate: bool) -> Result<Vec<Poly>> {
    let fld = f.field();
    let fac = factor(f)?;
    // group into SR factors and NSR pairs
    let mut frames: Vec<(Poly, Poly, usize, bool)> = vec![]; // (P, P*, bound, sr)
    let mut seen: Vec<Poly> = vec![];
    for (p, m) in &fac {
        if seen.contains(p) {
            continue;
        }
        let pstar = reciprocal(p, conjugate)?;
        if pstar == *p {
            frames.push((p.clone(), pstar, *m, true));
            seen.push(p.clone());
        } else {
            let mstar = fac
                .iter()
                .find(|(r, _)| *r == pstar)
                .map(|(_, mm)| *mm)
                .unwrap_or(0);
            frames.push((p.clone(), pstar.clone(), (*m).min(mstar), false));
            seen.push(p.clone());
            seen.push(pstar);
        }
    }
    let mut out = vec![];
    let mut stack: Vec<(usize, Poly, usize)> = vec![(0, Poly::one(fld), 0)];
    while let Some((idx, acc, total)) = stack.pop() {
        if total > deg {
            continue;
        }
        if idx == frames.len() {
            if total == deg {
                out.push(acc);
            }
            continue;
        }
        let (p, pstar, bound, sr) = &frames[idx];
        let d = p.degree();
        if *sr {
            // exponent a with 2a <= bound
            for a in 0..=bound / 2 {
                stack.push((idx + 1, acc.mul(&p.pow(a)), total + a * d));
            }
        } else {
            // exponents (a, b) on P and P* with a + b <= bound
            for a in 0..=*bound {
                for b in 0..=bound - a {
                    stack.push((
                        idx + 1,
                        acc.mul(&p.pow(a)).mul(&pstar.pow(b)),
                        total + (a + b) * d,
                    ));
                }
            }
        }
    }
    out.sort_by(|a, b| a.order_key().cmp(&b.order_key()));
    Ok(out)
}

/// The stratum-`i` flag witnesses of a GL-regular isometry: one per monic
/// `U` of degree `i - 1` with `U U* | f_g`. Each subspace is recomputed as
/// `ker U(g)` and re-verified `g`-stable and totally isotropic by direct
/// bilinear checks.
pub fn invariant_flags(space: &ClassicalSpace, g: &Matrix, i: usize) -> Result<Vec<FlagWitness>> {
    assert!(i >= 1 && i <= space.kind.i_max(space.n), "stratum out of range");
    if !is_gl_regular(g) {
        return Err(ClassicalError::NotGlRegular);
    }
    let f = g.charpoly();
    let conj = space.kind.conjugate_mode();
    let mut out = vec![];
    for u in divisors_with_reciprocal_pair(&f, i - 1, conj)? {
        let ug = poly_at_matrix(&u, g);
        let kernel = ug.kernel();
        if kernel.len() != u.degree() {
            return Err(ClassicalError::WitnessInvariantBroken(format!(
                "kernel dimension {} differs from deg U = {}",
                kernel.len(),
                u.degree()
            )));
        }
        let basis = Matrix::from_rows(&space.field, kernel);
        verify_witness_subspace(space, g, &basis)?;
        out.push(FlagWitness { u, basis });
    }
    Ok(out)
}

fn verify_witness_subspace(space: &ClassicalSpace, g: &Matrix, basis: &Matrix) -> Result<()> {
    let fld = &space.field;
    let r = basis.rows();
    // totally isotropic
    for a in 0..r {
        for b in 0..r {
            if !fld.is_zero(&space.form(&basis.row(a), &basis.row(b))) {
                return Err(ClassicalError::WitnessInvariantBroken(
                    "subspace is not totally isotropic".into(),
                ));
            }
        }
    }
    // g-stable: g b reduces to zero against the rref of the basis
    let (rref, pivots) = basis.rref();
    for a in 0..r {
        let mut v = g.mul_vec(&basis.row(a));
        for (ri, &pc) in pivots.iter().enumerate() {
            let c = v[pc].clone();
            if fld.is_zero(&c) {
                continue;
            }
            for j in 0..basis.cols() {
                v[j] = fld.sub(&v[j], &fld.mul(&c, rref.at(ri, j)));
            }
        }
        if v.iter().any(|x| !fld.is_zero(x)) {
            return Err(ClassicalError::WitnessInvariantBroken(
                "subspace is not g-stable".into(),
            ));
        }
    }
    Ok(())
}

/// Induced data of a witness: the characteristic polynomials of the action
/// on the subspace and on perp-modulo-subspace, with the induced form
/// verified non-degenerate.
pub struct LeviProjection {
    pub sub_charpoly: Poly,
    pub quotient_charpoly: Poly,
    pub quotient_action: Matrix,
}

pub fn levi_projection(
    space: &ClassicalSpace,
    g: &Matrix,
    witness: &FlagWitness,
) -> Result<LeviProjection> {
    let fld = &space.field;
    let r = witness.basis.rows();
    let dim = space.dim;

    // action on the subspace: solve R * basis = basis * g^T rows
    let sub_action = restrict_action(&witness.basis, g)?;
    let sub_charpoly = sub_action.charpoly();
    if sub_charpoly != witness.u.monic() && r > 0 {
        return Err(ClassicalError::WitnessInvariantBroken(
            "subspace characteristic polynomial differs from U".into(),
        ));
    }

    // perp: x with [x, b] = 0 for all basis vectors b
    let mut perp_sys = Matrix::zero(fld, r, dim);
    for a in 0..r {
        let b = witness.basis.row(a);
        for j in 0..dim {
            let mut e = vec![fld.zero(); dim];
            e[j] = fld.one();
            perp_sys.set(a, j, space.form(&e, &b));
        }
    }
    let perp_basis = perp_sys.kernel();
    assert_eq!(perp_basis.len(), dim - r);

    // complement of the subspace inside perp
    let mut stacked_rows = vec![];
    for a in 0..r {
        stacked_rows.push(witness.basis.row(a));
    }
    let mut complement: Vec<Vec<FqElem>> = vec![];
    for cand in perp_basis {
        let mut trial = stacked_rows.clone();
        trial.extend(complement.iter().cloned());
        trial.push(cand.clone());
        let m = Matrix::from_rows(fld, trial);
        if m.rank() == r + complement.len() + 1 {
            complement.push(cand);
        }
    }
    assert_eq!(complement.len(), dim - 2 * r);

    // quotient action: g c_i modulo the subspace, in complement coordinates
    let qdim = complement.len();
    let mut full_rows = stacked_rows.clone();
    full_rows.extend(complement.iter().cloned());
    let full = Matrix::from_rows(fld, full_rows).transpose(); // columns span the perp
    let mut quotient_action = Matrix::zero(fld, qdim, qdim);
    for (ci, c) in complement.iter().enumerate() {
        let gc = g.mul_vec(c);
        let coords = full.solve(&gc).ok_or_else(|| {
            ClassicalError::WitnessInvariantBroken("g does not preserve the perp".into())
        })?;
        for qi in 0..qdim {
            quotient_action.set(qi, ci, coords[r + qi].clone());
        }
    }
    let quotient_charpoly = quotient_action.charpoly();

    // induced form on the quotient must be non-degenerate
    let mut induced = Matrix::zero(fld, qdim, qdim);
    for a in 0..qdim {
        for b in 0..qdim {
            induced.set(a, b, space.form(&complement[a], &complement[b]));
        }
    }
    if induced.rank() != qdim {
        return Err(ClassicalError::DegenerateInducedForm);
    }

    Ok(LeviProjection {
        sub_charpoly,
        quotient_charpoly,
        quotient_action,
    })
}

/// The matrix of the action of `g` restricted to the row space of `basis`.
fn restrict_action(basis: &Matrix, g: &Matrix) -> Result<Matrix> {
    let fld = basis.field();
    let r = basis.rows();
    if r == 0 {
        return Ok(Matrix::zero(fld, 0, 0));
    }
    // solve basis^T * X = (g * basis^T): columns of X are coordinates
    let bt = basis.transpose();
    let gb = g.mul(&bt);
    // augmented elimination
    let dim = basis.cols();
    let mut aug = Matrix::zero(fld, dim, r + r);
    for i in 0..dim {
        for j in 0..r {
            aug.set(i, j, bt.at(i, j).clone());
            aug.set(i, r + j, gb.at(i, j).clone());
        }
    }
    let (rr, pivots) = aug.rref();
    let mut x = Matrix::zero(fld, r, r);
    for (ri, &pc) in pivots.iter().enumerate() {
        if pc >= r {
            return Err(ClassicalError::WitnessInvariantBroken(
                "basis is not independent".into(),
            ));
        }
        for j in 0..r {
            x.set(pc, j, rr.at(ri, r + j).clone());
        }
    }
    Ok(x)
}

/// Count all `g`-stable totally isotropic subspaces of the given dimension
/// by exhaustive scan over reduced row echelon forms. Errors above the
/// candidate cap.
pub fn isotropic_stable_subspace_count(
    space: &ClassicalSpace,
    g: Option<&Matrix>,
    dim: usize,
    cap: u128,
) -> Result<u64> {
    let total = gaussian_binomial(space.field.order(), space.dim, dim);
    if total > cap {
        return Err(ClassicalError::ScanTooLarge(total));
    }
    if dim == 0 {
        return Ok(1);
    }
    let fld = space.field.clone();
    let elems = fld.enumerate();
    let n = space.dim;
    let mut count = 0u64;
    // enumerate pivot column combinations
    let mut pivot_cols: Vec<usize> = (0..dim).collect();
    loop {
        // free positions: (row i, col j) with j > pivots[i], j not a pivot
        let mut free_pos = vec![];
        for (i, &p) in pivot_cols.iter().enumerate() {
            for j in p + 1..n {
                if !pivot_cols.contains(&j) {
                    free_pos.push((i, j));
                }
            }
        }
        let mut assign = vec![0usize; free_pos.len()];
        loop {
            let mut basis = Matrix::zero(&fld, dim, n);
            for (i, &p) in pivot_cols.iter().enumerate() {
                basis.set(i, p, fld.one());
            }
            for (k, &(i, j)) in free_pos.iter().enumerate() {
                basis.set(i, j, elems[assign[k]].clone());
            }
            if subspace_qualifies(space, g, &basis) {
                count += 1;
            }
            // increment assignment
            let mut k = 0;
            loop {
                if k == assign.len() {
                    break;
                }
                assign[k] += 1;
                if assign[k] < elems.len() {
                    break;
                }
                assign[k] = 0;
                k += 1;
            }
            if k == assign.len() {
                break;
            }
        }
        // next pivot combination
        let mut i = dim;
        loop {
            if i == 0 {
                return Ok(count);
            }
            i -= 1;
            if pivot_cols[i] < n - (dim - i) {
                pivot_cols[i] += 1;
                for k in i + 1..dim {
                    pivot_cols[k] = pivot_cols[k - 1] + 1;
                }
                break;
            }
        }
    }
}

fn subspace_qualifies(space: &ClassicalSpace, g: Option<&Matrix>, basis: &Matrix) -> bool {
    let fld = &space.field;
    let r = basis.rows();
    for a in 0..r {
        for b in a..r {
            if !fld.is_zero(&space.form(&basis.row(a), &basis.row(b)))
                || !fld.is_zero(&space.form(&basis.row(b), &basis.row(a)))
            {
                return false;
            }
        }
    }
    if let Some(g) = g {
        // rows are already in rref with known pivots; reduce g*row
        let (rref, pivots) = basis.rref();
        for a in 0..r {
            let mut v = g.mul_vec(&basis.row(a));
            for (ri, &pc) in pivots.iter().enumerate() {
                let c = v[pc].clone();
                if fld.is_zero(&c) {
                    continue;
                }
                for j in 0..basis.cols() {
                    v[j] = fld.sub(&v[j], &fld.mul(&c, rref.at(ri, j)));
                }
            }
            if v.iter().any(|x| !fld.is_zero(x)) {
                return false;
            }
        }
    }
    true
}

/// Number of `dim`-dimensional subspaces of an `n`-space over a field of the
/// given order.
pub fn gaussian_binomial(q: u128, n: usize, dim: usize) -> u128 {
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for k in 0..dim {
        num *= qpow(q, n - k) - 1;
        den *= qpow(q, k + 1) - 1;
    }
    num / den
}

fn qpow(q: u128, e: usize) -> u128 {
    let mut acc = 1u128;
    for _ in 0..e {
        acc *= q;
    }
    acc
}

/// Multiplicity report for the eigenvalues 1 and -1 of an orthogonal
/// GL-regular isometry: each must be zero or odd.
#[derive(Clone, Debug)]
pub struct EigenParityReport {
    pub m_plus_one: usize,
    pub m_minus_one: usize,
    pub pass: bool,
}

pub fn eigen_parity_check(space: &ClassicalSpace, g: &Matrix) -> Result<EigenParityReport> {
    if !space.kind.is_orthogonal() {
        return Err(ClassicalError::WrongKind("orthogonal kinds only"));
    }
    if !is_gl_regular(g) {
        return Err(ClassicalError::NotGlRegular);
    }
    let f = g.charpoly();
    let fld = &space.field;
    let lm1 = Poly::lambda_minus(fld, &fld.one());
    let lp1 = Poly::lambda_minus(fld, &fld.neg(&fld.one()));
    let mult = |q: &Poly| {
        let mut m = 0;
        let mut rem = f.clone();
        loop {
            let (quo, r) = rem.div_rem(q);
            if !r.is_zero() {
                return m;
            }
            m += 1;
            rem = quo;
        }
    };
    let m_one = mult(&lm1);
    let m_minus = mult(&lp1);
    let ok = |m: usize| m == 0 || m % 2 == 1;
    Ok(EigenParityReport {
        m_plus_one: m_one,
        m_minus_one: m_minus,
        pass: ok(m_one) && ok(m_minus),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::{standard_space, SpaceKind};
    use dl_algebra::FieldCtx;

    fn f3() -> FieldCtx {
        FieldCtx::base(3, 1).unwrap()
    }

    #[test]
    fn stratum_one_is_always_trivial() {
        let s = standard_space(SpaceKind::Sp, 2, &f3()).unwrap();
        let g = s.random_isometry(1);
        if is_gl_regular(&g) {
            let flags = invariant_flags(&s, &g, 1).unwrap();
            assert_eq!(flags.len(), 1);
            assert!(flags[0].u.is_one());
            assert_eq!(flags[0].basis.rows(), 0);
        }
    }

    #[test]
    fn irreducible_charpoly_has_no_deep_strata() {
        let s = standard_space(SpaceKind::Sp, 2, &f3()).unwrap();
        for seed in 0..300 {
            let g = s.random_isometry(seed);
            if !is_gl_regular(&g) {
                continue;
            }
            let f = g.charpoly();
            if dl_algebra::is_irreducible(&f) {
                let flags = invariant_flags(&s, &g, 2).unwrap();
                assert!(flags.is_empty());
                return;
            }
        }
        panic!("no irreducible characteristic polynomial found in 300 draws");
    }

    #[test]
    fn divisor_count_matches_scan_sp4() {
        let s = standard_space(SpaceKind::Sp, 2, &f3()).unwrap();
        let mut tested = 0;
        for seed in 0..40 {
            let g = s.random_isometry(seed);
            if !is_gl_regular(&g) {
                continue;
            }
            for i in 1..=s.kind.i_max(s.n) {
                let flags = invariant_flags(&s, &g, i).unwrap();
                let scan =
                    isotropic_stable_subspace_count(&s, Some(&g), i - 1, 1 << 24).unwrap();
                assert_eq!(flags.len() as u64, scan, "seed {seed} stratum {i}");
            }
            tested += 1;
            if tested >= 8 {
                break;
            }
        }
        assert!(tested >= 1);
    }

    #[test]
    fn levi_projection_bookkeeping() {
        let s = standard_space(SpaceKind::SOOdd, 2, &f3()).unwrap();
        let conj = s.kind.conjugate_mode();
        let mut tested = 0;
        for seed in 0..60 {
            let g = s.random_isometry(seed);
            if !is_gl_regular(&g) {
                continue;
            }
            let f = g.charpoly();
            for i in 1..=s.kind.i_max(s.n) {
                for w in invariant_flags(&s, &g, i).unwrap() {
                    let levi = levi_projection(&s, &g, &w).unwrap();
                    let ustar = dl_algebra::reciprocal(&w.u, conj).unwrap();
                    assert_eq!(
                        levi.quotient_charpoly.mul(&w.u).mul(&ustar),
                        f,
                        "dimension bookkeeping"
                    );
                    assert!(is_gl_regular(&levi.quotient_action));
                    tested += 1;
                }
            }
            if tested > 10 {
                break;
            }
        }
        assert!(tested > 0);
    }

    #[test]
    fn eigen_parity_on_orthogonal_elements() {
        let s = standard_space(SpaceKind::SOOdd, 2, &f3()).unwrap();
        let mut tested = 0;
        for seed in 0..100 {
            let g = s.random_isometry(seed);
            if !is_gl_regular(&g) {
                continue;
            }
            let rep = eigen_parity_check(&s, &g).unwrap();
            assert!(rep.pass, "seed {seed}: {rep:?}");
            tested += 1;
        }
        assert!(tested > 20);
    }

    #[test]
    fn even_space_is_nonsplit() {
        // no 2-dimensional totally isotropic subspace in the rank-2
        // non-split even orthogonal space
        let s = standard_space(SpaceKind::SOEven, 2, &f3()).unwrap();
        let count = isotropic_stable_subspace_count(&s, None, 2, 1 << 24).unwrap();
        assert_eq!(count, 0);
        // Witt index is n - 1 = 1
        let lines = isotropic_stable_subspace_count(&s, None, 1, 1 << 24).unwrap();
        assert!(lines > 0);
    }

    #[test]
    fn gaussian_binomial_values() {
        assert_eq!(gaussian_binomial(3, 4, 2), 130);
        assert_eq!(gaussian_binomial(3, 7, 3), 925771);
    }
}
