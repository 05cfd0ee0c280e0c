//! Dense exact linear algebra over a finite field: elimination, kernels,
//! characteristic and minimal polynomials.

use dl_algebra::{FieldCtx, FqElem, Poly};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldCtx,
    rows: usize,
    cols: usize,
    data: Vec<FqElem>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{:?} ", self.at(i, j).coeffs())?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zero(field: &FieldCtx, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &FieldCtx, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &FieldCtx, rows: Vec<Vec<FqElem>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend(row);
        }
        Matrix {
            field: field.clone(),
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &FqElem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FqElem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<FqElem> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.at(i, j).clone());
            }
        }
        out
    }

    /// Entrywise Frobenius (q-power).
    pub fn map_frobenius(&self, steps: usize) -> Matrix {
        let mut out = self.clone();
        for v in out.data.iter_mut() {
            *v = self.field.frobenius(v, steps);
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let f = &self.field;
        let mut out = Matrix::zero(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.at(i, j).clone();
                    out.set(i, j, f.add(&cur, &f.mul(a, other.at(k, j))));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[FqElem]) -> Vec<FqElem> {
        assert_eq!(self.cols, v.len());
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for j in 0..self.cols {
                    acc = f.add(&acc, &f.mul(self.at(i, j), &v[j]));
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = f.add(a, b);
        }
        out
    }

    pub fn scale(&self, k: &FqElem) -> Matrix {
        let f = &self.field;
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = f.mul(a, k);
        }
        out
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = vec![];
        let mut r = 0;
        for c in 0..m.cols {
            let mut sel = None;
            for i in r..m.rows {
                if !f.is_zero(m.at(i, c)) {
                    sel = Some(i);
                    break;
                }
            }
            let Some(i) = sel else { continue };
            for j in 0..m.cols {
                let tmp = m.at(r, j).clone();
                m.set(r, j, m.at(i, j).clone());
                m.set(i, j, tmp);
            }
            let inv = f.inv(m.at(r, c));
            for j in 0..m.cols {
                m.set(r, j, f.mul(m.at(r, j), &inv));
            }
            for i2 in 0..m.rows {
                if i2 != r && !f.is_zero(m.at(i2, c)) {
                    let factor = m.at(i2, c).clone();
                    for j in 0..m.cols {
                        let v = f.sub(m.at(i2, j), &f.mul(&factor, m.at(r, j)));
                        m.set(i2, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel (row vectors `v` with `M v = 0`).
    pub fn kernel(&self) -> Vec<Vec<FqElem>> {
        let f = self.field.clone();
        let (r, pivots) = self.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut out = vec![];
        for &fc in &free {
            let mut v = vec![f.zero(); self.cols];
            v[fc] = f.one();
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.at(ri, fc));
            }
            out.push(v);
        }
        out
    }

    /// A solution of `M x = rhs` (free variables set to zero), when one
    /// exists.
    pub fn solve(&self, rhs: &[FqElem]) -> Option<Vec<FqElem>> {
        assert_eq!(self.rows, rhs.len());
        let f = self.field.clone();
        let mut aug = Matrix::zero(&f, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, self.cols, rhs[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![f.zero(); self.cols];
        for (ri, &pc) in pivots.iter().enumerate() {
            x[pc] = r.at(ri, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let f = self.field.clone();
        let n = self.rows;
        let mut aug = Matrix::zero(&f, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, n + i, f.one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut out = Matrix::zero(&f, n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, r.at(i, n + j).clone());
            }
        }
        Some(out)
    }

    pub fn det(&self) -> FqElem {
        assert_eq!(self.rows, self.cols);
        let f = self.field.clone();
        let mut m = self.clone();
        let n = self.rows;
        let mut det = f.one();
        for c in 0..n {
            let mut sel = None;
            for i in c..n {
                if !f.is_zero(m.at(i, c)) {
                    sel = Some(i);
                    break;
                }
            }
            let Some(i) = sel else {
                return f.zero();
            };
            if i != c {
                det = f.neg(&det);
                for j in 0..n {
                    let tmp = m.at(c, j).clone();
                    m.set(c, j, m.at(i, j).clone());
                    m.set(i, j, tmp);
                }
            }
            det = f.mul(&det, m.at(c, c));
            let inv = f.inv(m.at(c, c));
            for i2 in c + 1..n {
                if !f.is_zero(m.at(i2, c)) {
                    let factor = f.mul(m.at(i2, c), &inv);
                    for j in c..n {
                        let v = f.sub(m.at(i2, j), &f.mul(&factor, m.at(c, j)));
                        m.set(i2, j, v);
                    }
                }
            }
        }
        det
    }

    /// Characteristic polynomial `det(lambda I - M)`, via fraction-free
    /// elimination with polynomial entries.
    pub fn charpoly(&self) -> Poly {
        assert_eq!(self.rows, self.cols);
        let f = &self.field;
        let n = self.rows;
        if n == 0 {
            return Poly::one(f);
        }
        // entries of lambda I - M
        let mut m: Vec<Poly> = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut p = Poly::constant(f, f.neg(self.at(i, j)));
                if i == j {
                    p = p.add(&Poly::lambda(f));
                }
                m.push(p);
            }
        }
        // Bareiss: divisions are exact in the polynomial ring
        let mut sign_flip = false;
        let mut prev = Poly::one(f);
        for k in 0..n - 1 {
            if m[k * n + k].is_zero() {
                let swap = (k + 1..n).find(|&i| !m[i * n + k].is_zero());
                match swap {
                    Some(i) => {
                        for j in 0..n {
                            m.swap(k * n + j, i * n + j);
                        }
                        sign_flip = !sign_flip;
                    }
                    None => return Poly::zero(f), // cannot happen for charpoly
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = m[i * n + j]
                        .mul(&m[k * n + k])
                        .sub(&m[i * n + k].mul(&m[k * n + j]));
                    m[i * n + j] = t.div_exact(&prev);
                }
            }
            prev = m[k * n + k].clone();
        }
        let mut out = m[(n - 1) * n + (n - 1)].clone();
        if sign_flip {
            out = out.scale(&f.neg(&f.one()));
        }
        debug_assert!(out.is_monic() && out.degree() == n);
        out
    }

    /// Minimal polynomial: the least common multiple of the annihilators of
    /// the standard basis vectors.
    pub fn minpoly(&self) -> Poly {
        assert_eq!(self.rows, self.cols);
        let f = &self.field;
        let n = self.rows;
        let mut acc = Poly::one(f);
        for start in 0..n {
            let mut v = vec![f.zero(); n];
            v[start] = f.one();
            // Krylov vectors as rows; find the first dependence
            let mut krylov: Vec<Vec<FqElem>> = vec![v.clone()];
            loop {
                let next = self.mul_vec(krylov.last().unwrap());
                // solve: next = sum c_k krylov[k]?
                let mut sys = Matrix::zero(f, n, krylov.len() + 1);
                for (k, kv) in krylov.iter().enumerate() {
                    for i in 0..n {
                        sys.set(i, k, kv[i].clone());
                    }
                }
                for i in 0..n {
                    sys.set(i, krylov.len(), next[i].clone());
                }
                let (r, pivots) = sys.rref();
                if pivots.len() <= krylov.len() && !pivots.contains(&krylov.len()) {
                    // dependent: read coefficients
                    let mut coeffs = vec![f.zero(); krylov.len() + 1];
                    for (ri, &pc) in pivots.iter().enumerate() {
                        coeffs[pc] = f.neg(r.at(ri, krylov.len()));
                    }
                    coeffs[krylov.len()] = f.one();
                    let ann = Poly::new(f, coeffs);
                    let g = acc.gcd(&ann);
                    acc = acc.mul(&ann.div_exact(&g));
                    break;
                }
                krylov.push(next);
            }
            if acc.degree() == n {
                break;
            }
        }
        acc.monic()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> FieldCtx {
        FieldCtx::base(5, 1).unwrap()
    }

    fn companion(field: &FieldCtx, f: &Poly) -> Matrix {
        let n = f.degree();
        let mut m = Matrix::zero(field, n, n);
        for i in 1..n {
            m.set(i, i - 1, field.one());
        }
        for i in 0..n {
            m.set(i, n - 1, field.neg(&f.coeff(i)));
        }
        m
    }

    #[test]
    fn charpoly_of_companion_matrix() {
        let f = f5();
        let p = Poly::from_i64_coeffs(&f, &[2, 3, 1, 1]);
        let c = companion(&f, &p);
        assert_eq!(c.charpoly(), p);
        assert_eq!(c.minpoly(), p);
    }

    #[test]
    fn charpoly_of_identity() {
        let f = f5();
        let id = Matrix::identity(&f, 4);
        let lm1 = Poly::from_i64_coeffs(&f, &[-1, 1]);
        assert_eq!(id.charpoly(), lm1.pow(4));
        assert_eq!(id.minpoly(), lm1);
    }

    #[test]
    fn kernel_and_rank() {
        let f = f5();
        // rank-1 matrix
        let m = Matrix::from_rows(
            &f,
            vec![
                vec![f.from_u64(1), f.from_u64(2)],
                vec![f.from_u64(2), f.from_u64(4)],
            ],
        );
        assert_eq!(m.rank(), 1);
        let ker = m.kernel();
        assert_eq!(ker.len(), 1);
        assert!(m.mul_vec(&ker[0]).iter().all(|x| f.is_zero(x)));
    }

    #[test]
    fn inverse_roundtrip() {
        let f = f5();
        let m = Matrix::from_rows(
            &f,
            vec![
                vec![f.from_u64(1), f.from_u64(2), f.from_u64(0)],
                vec![f.from_u64(0), f.from_u64(1), f.from_u64(3)],
                vec![f.from_u64(4), f.from_u64(0), f.from_u64(2)],
            ],
        );
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(&f, 3));
        assert!(!f.is_zero(&m.det()));
    }

    #[test]
    fn charpoly_matches_subset_expansion_oracle() {
        // independent oracle: Leibniz expansion over all permutations
        let f = FieldCtx::base(3, 1).unwrap();
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let n = rng.gen_range(1..=4usize);
            let mut m = Matrix::zero(&f, n, n);
            for i in 0..n {
                for j in 0..n {
                    m.set(i, j, f.from_u64(rng.gen_range(0..3)));
                }
            }
            let cp = m.charpoly();
            let oracle = leibniz_charpoly(&f, &m);
            assert_eq!(cp, oracle);
        }
    }

    fn leibniz_charpoly(f: &FieldCtx, m: &Matrix) -> Poly {
        let n = m.rows();
        let mut entries = vec![];
        for i in 0..n {
            for j in 0..n {
                let mut p = Poly::constant(f, f.neg(m.at(i, j)));
                if i == j {
                    p = p.add(&Poly::lambda(f));
                }
                entries.push(p);
            }
        }
        let mut total = Poly::zero(f);
        let mut perm: Vec<usize> = (0..n).collect();
        permute(&mut perm, 0, &mut |p| {
            let mut term = Poly::one(f);
            for (i, &j) in p.iter().enumerate() {
                term = term.mul(&entries[i * n + j]);
            }
            let mut inversions = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if p[a] > p[b] {
                        inversions += 1;
                    }
                }
            }
            if inversions % 2 == 1 {
                term = term.scale(&f.neg(&f.one()));
            }
            total = total.add(&term);
        });
        total
    }

    fn permute(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, f);
            v.swap(k, i);
        }
    }
}
