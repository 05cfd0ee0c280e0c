//! Matrices over the fixed-precision ring: lattice column reduction, exact
//! linear solving with certified pivots, and congruence diagonalization of
//! Hermitian Gram matrices over the discrete valuation ring.

use crate::ring::{PadicCtx, PadicElem};
use crate::{PadicError, Result};

#[derive(Clone, Debug)]
pub struct PMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<PadicElem>,
}

impl PMatrix {
    pub fn zero(ctx: &PadicCtx, rows: usize, cols: usize) -> PMatrix {
        PMatrix {
            rows,
            cols,
            data: vec![ctx.zero(); rows * cols],
        }
    }

    pub fn identity(ctx: &PadicCtx, n: usize) -> PMatrix {
        let mut m = Self::zero(ctx, n, n);
        for i in 0..n {
            m.set(i, i, ctx.one());
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> &PadicElem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: PadicElem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<PadicElem> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn from_columns(ctx: &PadicCtx, cols: Vec<Vec<PadicElem>>) -> PMatrix {
        let rows = cols.first().map(|c| c.len()).unwrap_or(0);
        let mut m = Self::zero(ctx, rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn mul(&self, ctx: &PadicCtx, other: &PMatrix) -> PMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zero(ctx, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                for j in 0..other.cols {
                    let t = ctx.mul(a, other.at(k, j));
                    let cur = out.at(i, j).clone();
                    out.set(i, j, ctx.add(&cur, &t));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, ctx: &PadicCtx, v: &[PadicElem]) -> Vec<PadicElem> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = ctx.zero();
                for j in 0..self.cols {
                    acc = ctx.add(&acc, &ctx.mul(self.at(i, j), &v[j]));
                }
                acc
            })
            .collect()
    }

    pub fn transpose(&self, ctx: &PadicCtx) -> PMatrix {
        let mut out = Self::zero(ctx, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.at(i, j).clone());
            }
        }
        out
    }

    pub fn map_conj(&self, ctx: &PadicCtx) -> PMatrix {
        let mut out = self.clone();
        for v in out.data.iter_mut() {
            *v = ctx.conj(v);
        }
        out
    }

    /// Reduce mod p into the residue field.
    pub fn residue(&self, ctx: &PadicCtx) -> Result<dl_classical::Matrix> {
        let rf = ctx.residue_field();
        let mut rows = vec![];
        for i in 0..self.rows {
            let mut row = vec![];
            for j in 0..self.cols {
                row.push(ctx.residue(self.at(i, j))?);
            }
            rows.push(row);
        }
        Ok(dl_classical::Matrix::from_rows(rf, rows))
    }
}

/// Column reduction of a spanning set to a triangular lattice basis.
/// Returns the `rows x rows` basis matrix, or a rank-deficiency error when
/// a pivot cannot be certified.
pub fn column_lattice_basis(ctx: &PadicCtx, m: &PMatrix) -> Result<PMatrix> {
    let n = m.rows;
    let mut work = m.clone();
    let mut basis_cols: Vec<Vec<PadicElem>> = vec![];
    let mut live: Vec<usize> = (0..work.cols).collect();
    for row in 0..n {
        // pick the live column with the least certified valuation at `row`
        let mut best: Option<(usize, usize)> = None; // (column, valuation)
        for &j in &live {
            if let Ok(v) = ctx.valuation(work.at(row, j)) {
                if best.map(|(_, bv)| v < bv).unwrap_or(true) {
                    best = Some((j, v));
                }
            }
        }
        let Some((pj, pv)) = best else {
            return Err(PadicError::RankDeficient(format!(
                "no certifiable pivot in row {row}: lattice not of full rank at this precision"
            )));
        };
        // normalize: divide the column by its unit part so the pivot is p^pv
        let unit = ctx.shift_down(work.at(row, pj), pv)?;
        let unit_inv = ctx.inv(&unit)?;
        for i in 0..n {
            let t = ctx.mul(work.at(i, pj), &unit_inv);
            work.set(i, pj, t);
        }
        // eliminate the row from all other live columns
        for &j in &live {
            if j == pj {
                continue;
            }
            if let Ok(v) = ctx.valuation(work.at(row, j)) {
                if v >= pv {
                    let factor = ctx.shift_down(work.at(row, j), pv)?;
                    for i in 0..n {
                        let t = ctx.sub(work.at(i, j), &ctx.mul(&factor, work.at(i, pj)));
                        work.set(i, j, t);
                    }
                } else {
                    unreachable!("pivot had minimal valuation");
                }
            }
        }
        basis_cols.push(work.column(pj));
        live.retain(|&j| j != pj);
    }
    Ok(PMatrix::from_columns(ctx, basis_cols))
}

/// Solve `M x = rhs` for square `M` of full rank over the fraction field,
/// requiring all divisions to stay in the ring (certifying `rhs` lies in
/// the column lattice of `M`).
pub fn solve_in_lattice(ctx: &PadicCtx, m: &PMatrix, rhs: &[PadicElem]) -> Result<Vec<PadicElem>> {
    let n = m.rows;
    assert_eq!(m.cols, n);
    assert_eq!(rhs.len(), n);
    // augmented column elimination: [M | rhs] with row operations
    let mut work = PMatrix::zero(ctx, n, n + 1);
    for i in 0..n {
        for j in 0..n {
            work.set(i, j, m.at(i, j).clone());
        }
        work.set(i, n, rhs[i].clone());
    }
    let mut pivot_of_col: Vec<usize> = vec![usize::MAX; n];
    let mut used_rows = vec![false; n];
    for col in 0..n {
        // least-valuation certifiable pivot among unused rows
        let mut best: Option<(usize, usize)> = None;
        for (i, used) in used_rows.iter().enumerate() {
            if *used {
                continue;
            }
            if let Ok(v) = ctx.valuation(work.at(i, col)) {
                if best.map(|(_, bv)| v < bv).unwrap_or(true) {
                    best = Some((i, v));
                }
            }
        }
        let Some((pi, pv)) = best else {
            return Err(PadicError::RankDeficient(format!(
                "no certifiable pivot in column {col}"
            )));
        };
        used_rows[pi] = true;
        pivot_of_col[col] = pi;
        // scale the pivot row so the pivot becomes p^pv
        let unit = ctx.shift_down(work.at(pi, col), pv)?;
        let unit_inv = ctx.inv(&unit)?;
        for j in 0..=n {
            let t = ctx.mul(work.at(pi, j), &unit_inv);
            work.set(pi, j, t);
        }
        // clear the column elsewhere (entries with valuation >= pv)
        for i in 0..n {
            if i == pi {
                continue;
            }
            match ctx.valuation(work.at(i, col)) {
                Ok(v) if v < pv => {
                    return Err(PadicError::Internal(
                        "pivot was not minimal in its column".into(),
                    ))
                }
                Ok(_) => {
                    let factor = ctx.shift_down(work.at(i, col), pv)?;
                    for j in 0..=n {
                        let t = ctx.sub(work.at(i, j), &ctx.mul(&factor, work.at(pi, j)));
                        work.set(i, j, t);
                    }
                }
                Err(_) => {}
            }
        }
    }
    // back-read: x[col] = rhs-part of pivot row / p^(pivot valuation)
    let mut x = vec![ctx.zero(); n];
    for col in 0..n {
        let pi = pivot_of_col[col];
        let pivot = work.at(pi, col).clone();
        let pv = ctx
            .valuation(&pivot)
            .map_err(|p| PadicError::PrecisionExhausted(format!("pivot dead at precision {p}")))?;
        // row is: p^pv * x[col] (+ cleared entries) = rhs entry
        let val = work.at(pi, n).clone();
        x[col] = ctx.shift_down(&val, pv).map_err(|_| {
            PadicError::NotDivisible(format!(
                "solution coordinate {col} is not integral: membership fails"
            ))
        })?;
    }
    Ok(x)
}

/// Congruence diagonalization of a Hermitian (or symmetric) matrix `G`:
/// returns `(P, d)` with `P^T G conj(P) = diag(d)`, `P` invertible over the
/// ring, diagonal entries of non-decreasing reliability.
pub fn congruence_diagonalize(ctx: &PadicCtx, g: &PMatrix) -> Result<(PMatrix, Vec<PadicElem>)> {
    let n = g.rows;
    let mut work = g.clone();
    let mut p = PMatrix::identity(ctx, n);
    let mut diag = vec![];
    let mut handled = vec![false; n];
    for _step in 0..n {
        // least-valuation certifiable entry in the unhandled principal block
        let mut best: Option<(usize, usize, usize)> = None;
        for i in 0..n {
            if handled[i] {
                continue;
            }
            for j in 0..n {
                if handled[j] {
                    continue;
                }
                if let Ok(v) = ctx.valuation(work.at(i, j)) {
                    if best.map(|(_, _, bv)| v < bv).unwrap_or(true) {
                        best = Some((i, j, v));
                    }
                }
            }
        }
        let Some((bi, bj, bv)) = best else {
            return Err(PadicError::PrecisionExhausted(
                "Gram matrix block indistinguishable from zero".into(),
            ));
        };
        let pivot_index = if bi == bj {
            bi
        } else {
            // move the minimal valuation onto the diagonal: add a multiple of
            // row/column j to row/column i; a residue multiplier with
            // non-vanishing trace term always exists
            let rf = ctx.residue_field().clone();
            let mut chosen = None;
            for cand in rf.enumerate() {
                if rf.is_zero(&cand) {
                    continue;
                }
                let c = ctx.lift_residue(&cand);
                // new diagonal entry at (i, i): g_ii + c g_ji + conj(c) g_ij + c conj(c) g_jj
                let t1 = ctx.mul(&c, work.at(bj, bi));
                let t2 = ctx.mul(&ctx.conj(&c), work.at(bi, bj));
                let t3 = ctx.mul(&ctx.mul(&c, &ctx.conj(&c)), work.at(bj, bj));
                let new_diag = ctx.add(&ctx.add(work.at(bi, bi), &t1), &ctx.add(&t2, &t3));
                if ctx.valuation(&new_diag) == Ok(bv) {
                    chosen = Some(c);
                    break;
                }
            }
            let c = chosen.ok_or_else(|| {
                PadicError::Internal("no multiplier brings the pivot onto the diagonal".into())
            })?;
            // row_i += c * row_j; col_i += conj(c) * col_j; record in P
            add_multiple_symmetric(ctx, &mut work, &mut p, bi, bj, &c);
            bi
        };
        // clear row/column pivot_index against the pivot
        let pivot = work.at(pivot_index, pivot_index).clone();
        let pv = ctx.valuation(&pivot).map_err(|pr| {
            PadicError::PrecisionExhausted(format!("diagonal pivot dead at precision {pr}"))
        })?;
        let unit = ctx.shift_down(&pivot, pv)?;
        let unit_inv = ctx.inv(&unit)?;
        for j in 0..n {
            if handled[j] || j == pivot_index {
                continue;
            }
            // e_j' = e_j - (G[j][pivot]/d) e_pivot kills both off-diagonal
            // entries at the pivot (their Hermitian conjugates vanish
            // together)
            let entry = work.at(j, pivot_index).clone();
            match ctx.valuation(&entry) {
                Err(_) => continue,
                Ok(ev) => {
                    debug_assert!(ev >= pv);
                    let scaled = ctx.shift_down(&entry, pv)?;
                    let factor = ctx.neg(&ctx.mul(&scaled, &unit_inv));
                    add_multiple_symmetric_col(ctx, &mut work, &mut p, j, pivot_index, &factor);
                }
            }
        }
        handled[pivot_index] = true;
        diag.push((pivot_index, work.at(pivot_index, pivot_index).clone()));
    }
    // reorder the basis columns by the handling order
    let perm_cols: Vec<usize> = diag.iter().map(|(i, _)| *i).collect();
    let mut pfinal = PMatrix::zero(ctx, n, n);
    for (newj, &oldj) in perm_cols.iter().enumerate() {
        for i in 0..n {
            pfinal.set(i, newj, p.at(i, oldj).clone());
        }
    }
    Ok((pfinal, diag.into_iter().map(|(_, d)| d).collect()))
}

/// `row_i += c * row_j` and `col_i += conj(c) * col_j`, with the change of
/// basis recorded on the columns of `P` (congruence `G -> E^T G conj(E)`).
fn add_multiple_symmetric(
    ctx: &PadicCtx,
    g: &mut PMatrix,
    p: &mut PMatrix,
    i: usize,
    j: usize,
    c: &PadicElem,
) {
    let n = g.rows;
    for k in 0..n {
        let t = ctx.add(g.at(i, k), &ctx.mul(c, g.at(j, k)));
        g.set(i, k, t);
    }
    let cbar = ctx.conj(c);
    for k in 0..n {
        let t = ctx.add(g.at(k, i), &ctx.mul(&cbar, g.at(k, j)));
        g.set(k, i, t);
    }
    // basis vector e_i' = e_i + c e_j: column i of P gains c * column j
    for k in 0..n {
        let t = ctx.add(p.at(k, i), &ctx.mul(c, p.at(k, j)));
        p.set(k, i, t);
    }
}

/// `col_j += conj(c)... `: the elimination step `e_j' = e_j + c e_pivot`,
/// acting on the Gram by `G -> E^T G conj(E)`.
fn add_multiple_symmetric_col(
    ctx: &PadicCtx,
    g: &mut PMatrix,
    p: &mut PMatrix,
    j: usize,
    pivot: usize,
    c: &PadicElem,
) {
    let n = g.rows;
    // row_j += c * row_pivot
    for k in 0..n {
        let t = ctx.add(g.at(j, k), &ctx.mul(c, g.at(pivot, k)));
        g.set(j, k, t);
    }
    // col_j += conj(c) * col_pivot
    let cbar = ctx.conj(c);
    for k in 0..n {
        let t = ctx.add(g.at(k, j), &ctx.mul(&cbar, g.at(k, pivot)));
        g.set(k, j, t);
    }
    for k in 0..n {
        let t = ctx.add(p.at(k, j), &ctx.mul(c, p.at(k, pivot)));
        p.set(k, j, t);
    }
}
