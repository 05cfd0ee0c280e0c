//! The four standard classical spaces over finite fields and their isometry
//! tests, plus seeded random isometry generation.

use crate::linalg::Matrix;
use crate::{ClassicalError, Result};
use dl_algebra::{FieldCtx, FqElem};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpaceKind {
    /// Non-split even special orthogonal `SO_{2n}^-`.
    SOEven,
    /// Odd special orthogonal `SO_{2n+1}`.
    SOOdd,
    /// Symplectic `Sp_{2n}`.
    Sp,
    /// Odd unitary `U_{2n+1}` over `GF(q^2)`.
    Unitary,
}

impl SpaceKind {
    pub const ALL: [SpaceKind; 4] = [
        SpaceKind::SOEven,
        SpaceKind::SOOdd,
        SpaceKind::Sp,
        SpaceKind::Unitary,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SpaceKind::SOEven => "so-even",
            SpaceKind::SOOdd => "so-odd",
            SpaceKind::Sp => "sp",
            SpaceKind::Unitary => "u",
        }
    }

    pub fn from_name(s: &str) -> Option<SpaceKind> {
        Self::ALL.iter().copied().find(|k| k.name() == s)
    }

    pub fn dimension(&self, n: usize) -> usize {
        match self {
            SpaceKind::SOEven | SpaceKind::Sp => 2 * n,
            SpaceKind::SOOdd | SpaceKind::Unitary => 2 * n + 1,
        }
    }

    pub fn is_orthogonal(&self) -> bool {
        matches!(self, SpaceKind::SOEven | SpaceKind::SOOdd)
    }

    pub fn conjugate_mode(&self) -> bool {
        matches!(self, SpaceKind::Unitary)
    }

    pub fn min_rank(&self) -> usize {
        match self {
            SpaceKind::SOEven => 2,
            _ => 1,
        }
    }

    /// Number of strata of the closed stratified space at rank `n`.
    pub fn i_max(&self, n: usize) -> usize {
        match self {
            SpaceKind::SOEven => n,
            _ => n + 1,
        }
    }
}

/// One of the standard spaces, with its Gram matrix in the fixed basis.
#[derive(Clone, Debug)]
pub struct ClassicalSpace {
    pub kind: SpaceKind,
    pub n: usize,
    /// Coefficient field of matrices: `GF(q)`, or `GF(q^2)` for the unitary
    /// kind (with conjugation declared).
    pub field: FieldCtx,
    pub gram: Matrix,
    pub dim: usize,
}

/// The least non-square in the base field, by element order.
fn least_nonsquare(field: &FieldCtx) -> FqElem {
    let elems = field.enumerate();
    for x in &elems {
        if field.is_zero(x) {
            continue;
        }
        let mut is_square = false;
        for y in &elems {
            if &field.mul(y, y) == x {
                is_square = true;
                break;
            }
        }
        if !is_square {
            return x.clone();
        }
    }
    unreachable!("odd-order fields have non-squares")
}

/// The standard space of the given kind and rank over `GF(q)` (the unitary
/// kind extends the base internally to `GF(q^2)`).
pub fn standard_space(kind: SpaceKind, n: usize, q_field: &FieldCtx) -> Result<ClassicalSpace> {
    if q_field.p() % 2 == 0 {
        return Err(ClassicalError::EvenCharacteristic);
    }
    if n < kind.min_rank() {
        return Err(ClassicalError::RankTooSmall(kind.name(), n));
    }
    let dim = kind.dimension(n);
    let (field, gram) = match kind {
        SpaceKind::Sp => {
            let f = q_field.clone();
            let mut g = Matrix::zero(&f, dim, dim);
            for a in 0..dim {
                let b = dim - 1 - a;
                if a < b {
                    g.set(a, b, f.one());
                } else if a > b {
                    g.set(a, b, f.neg(&f.one()));
                }
            }
            (f, g)
        }
        SpaceKind::SOOdd => {
            let f = q_field.clone();
            let mut g = Matrix::zero(&f, dim, dim);
            for a in 0..dim {
                g.set(a, dim - 1 - a, f.one());
            }
            (f, g)
        }
        SpaceKind::Unitary => {
            let (f, _) = q_field.extension(2)?;
            let mut g = Matrix::zero(&f, dim, dim);
            for a in 0..dim {
                g.set(a, dim - 1 - a, f.one());
            }
            (f, g)
        }
        SpaceKind::SOEven => {
            // hyperbolic planes e_a/f_a on the outside, anisotropic plane
            // diag(1, -delta) in the middle: the norm form of GF(q^2)
            let f = q_field.clone();
            let delta = least_nonsquare(&f);
            let mut g = Matrix::zero(&f, dim, dim);
            for a in 0..n - 1 {
                g.set(a, dim - 1 - a, f.one());
                g.set(dim - 1 - a, a, f.one());
            }
            g.set(n - 1, n - 1, f.one());
            g.set(n, n, f.neg(&delta));
            (f, g)
        }
    };
    Ok(ClassicalSpace {
        kind,
        n,
        field,
        gram,
        dim,
    })
}

impl ClassicalSpace {
    /// The bilinear / sesquilinear form `[x, y]`.
    pub fn form(&self, x: &[FqElem], y: &[FqElem]) -> FqElem {
        let f = &self.field;
        let mut acc = f.zero();
        for a in 0..self.dim {
            if f.is_zero(&x[a]) {
                continue;
            }
            for b in 0..self.dim {
                let g = self.gram.at(a, b);
                if f.is_zero(g) {
                    continue;
                }
                let yb = if self.kind.conjugate_mode() {
                    f.frobenius(&y[b], 1)
                } else {
                    y[b].clone()
                };
                acc = f.add(&acc, &f.mul(&f.mul(&x[a], g), &yb));
            }
        }
        acc
    }

    /// Gram relation (plus the determinant condition for the special
    /// orthogonal kinds).
    pub fn is_isometry(&self, g: &Matrix) -> bool {
        if g.rows() != self.dim || g.cols() != self.dim {
            return false;
        }
        let f = &self.field;
        let g_sigma = if self.kind.conjugate_mode() {
            g.map_frobenius(1)
        } else {
            g.clone()
        };
        if g.transpose().mul(&self.gram).mul(&g_sigma) != self.gram {
            return false;
        }
        if self.kind.is_orthogonal() && g.det() != f.one() {
            return false;
        }
        true
    }

    fn random_vector(&self, rng: &mut ChaCha8Rng) -> Vec<FqElem> {
        let f = &self.field;
        let elems = f.enumerate();
        (0..self.dim)
            .map(|_| elems[rng.gen_range(0..elems.len())].clone())
            .collect()
    }

    fn random_anisotropic(&self, rng: &mut ChaCha8Rng) -> Vec<FqElem> {
        loop {
            let v = self.random_vector(rng);
            if !self.field.is_zero(&self.form(&v, &v)) {
                return v;
            }
        }
    }

    /// Matrix of `x -> x + c [x, v] v` columns.
    fn transvection(&self, v: &[FqElem], c: &FqElem) -> Matrix {
        let f = &self.field;
        let mut m = Matrix::identity(f, self.dim);
        for j in 0..self.dim {
            let mut e = vec![f.zero(); self.dim];
            e[j] = f.one();
            let coef = f.mul(c, &self.form(&e, v));
            for i in 0..self.dim {
                let cur = m.at(i, j).clone();
                m.set(i, j, f.add(&cur, &f.mul(&coef, &v[i])));
            }
        }
        m
    }

    /// Matrix of the (quasi-)reflection `x -> x + (alpha - 1) [x, v]/[v, v] v`;
    /// `alpha = -1` is the orthogonal reflection.
    fn quasi_reflection(&self, v: &[FqElem], alpha: &FqElem) -> Matrix {
        let f = &self.field;
        let nrm = self.form(v, v);
        let scale = f.div(&f.sub(alpha, &f.one()), &nrm);
        let mut m = Matrix::identity(f, self.dim);
        for j in 0..self.dim {
            let mut e = vec![f.zero(); self.dim];
            e[j] = f.one();
            let coef = f.mul(&scale, &self.form(&e, v));
            for i in 0..self.dim {
                let cur = m.at(i, j).clone();
                m.set(i, j, f.add(&cur, &f.mul(&coef, &v[i])));
            }
        }
        m
    }

    /// A seeded random element of the isometry group: an even product of
    /// reflections (orthogonal kinds), a product of symplectic transvections,
    /// or a product of unitary quasi-reflections.
    pub fn random_isometry(&self, seed: u64) -> Matrix {
        let f = &self.field;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let factors = 2 * self.dim + 2;
        let mut g = Matrix::identity(f, self.dim);
        match self.kind {
            SpaceKind::SOEven | SpaceKind::SOOdd => {
                for _ in 0..factors {
                    let v = self.random_anisotropic(&mut rng);
                    g = g.mul(&self.quasi_reflection(&v, &f.neg(&f.one())));
                }
                // even number of reflections: factors is even
            }
            SpaceKind::Sp => {
                let elems = f.enumerate();
                for _ in 0..factors {
                    let v = loop {
                        let v = self.random_vector(&mut rng);
                        if v.iter().any(|x| !f.is_zero(x)) {
                            break v;
                        }
                    };
                    let c = loop {
                        let c = elems[rng.gen_range(0..elems.len())].clone();
                        if !f.is_zero(&c) {
                            break c;
                        }
                    };
                    g = g.mul(&self.transvection(&v, &c));
                }
            }
            SpaceKind::Unitary => {
                for _ in 0..factors {
                    let v = self.random_anisotropic(&mut rng);
                    // norm-one alpha != 1 via Hilbert 90
                    let alpha = loop {
                        let y = loop {
                            let y = self.random_vector(&mut rng)[0].clone();
                            if !f.is_zero(&y) {
                                break y;
                            }
                        };
                        let a = f.div(&y, &f.frobenius(&y, 1));
                        if a != f.one() {
                            break a;
                        }
                    };
                    g = g.mul(&self.quasi_reflection(&v, &alpha));
                }
            }
        }
        debug_assert!(self.is_isometry(&g));
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> FieldCtx {
        FieldCtx::base(3, 1).unwrap()
    }

    #[test]
    fn sp2_gram() {
        let s = standard_space(SpaceKind::Sp, 1, &f3()).unwrap();
        let f = &s.field;
        assert_eq!(s.gram.at(0, 1), &f.one());
        assert_eq!(s.gram.at(1, 0), &f.neg(&f.one()));
        assert!(f.is_zero(s.gram.at(0, 0)));
    }

    #[test]
    fn so_odd_gram_antidiagonal() {
        let s = standard_space(SpaceKind::SOOdd, 1, &f3()).unwrap();
        for a in 0..3 {
            assert_eq!(s.gram.at(a, 2 - a), &s.field.one());
        }
    }

    #[test]
    fn identity_and_minus_identity() {
        let f = f3();
        for kind in SpaceKind::ALL {
            let s = standard_space(kind, 2, &f).unwrap();
            let id = Matrix::identity(&s.field, s.dim);
            assert!(s.is_isometry(&id));
            let neg = id.scale(&s.field.neg(&s.field.one()));
            match kind {
                SpaceKind::Sp | SpaceKind::Unitary | SpaceKind::SOEven => {
                    assert!(s.is_isometry(&neg))
                }
                SpaceKind::SOOdd => assert!(!s.is_isometry(&neg)), // det = -1
            }
        }
    }

    #[test]
    fn single_reflection_is_not_special() {
        let f = f3();
        let s = standard_space(SpaceKind::SOOdd, 1, &f).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let v = s.random_anisotropic(&mut rng);
        let r = s.quasi_reflection(&v, &s.field.neg(&s.field.one()));
        assert!(!s.is_isometry(&r)); // det = -1
        assert!(s.is_isometry(&r.mul(&r))); // even product
    }

    #[test]
    fn random_isometries_pass_checks() {
        let f = f3();
        for kind in SpaceKind::ALL {
            let s = standard_space(kind, 2, &f).unwrap();
            for seed in 0..25 {
                let g = s.random_isometry(seed);
                assert!(s.is_isometry(&g), "{kind:?} seed {seed}");
            }
            // determinism
            assert_eq!(s.random_isometry(7), s.random_isometry(7));
        }
    }

    #[test]
    fn even_orthogonal_form_is_anisotropic_in_middle() {
        let f = f3();
        let s = standard_space(SpaceKind::SOEven, 2, &f).unwrap();
        // no nonzero isotropic vector in the span of the middle two basis vectors
        let elems = s.field.enumerate();
        for x in &elems {
            for y in &elems {
                if s.field.is_zero(x) && s.field.is_zero(y) {
                    continue;
                }
                let mut v = vec![s.field.zero(); 4];
                v[1] = x.clone();
                v[2] = y.clone();
                assert!(!s.field.is_zero(&s.form(&v, &v)));
            }
        }
    }
}
