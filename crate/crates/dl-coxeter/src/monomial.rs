//! Monomial maps on coordinate tuples: signed permutations acting by
//! `(m . x)_{perm[b]} = x_b^{+-1}`. These model the Weyl groups of the
//! classical families acting on torus coordinates, together with the
//! Galois twists, which may lie outside the group itself.

use dl_algebra::{FieldCtx, FqElem};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    /// `perm[b]` is where coordinate `b` is sent.
    pub perm: Vec<usize>,
    /// `invert[b]` inverts coordinate `b` before placing it.
    pub invert: Vec<bool>,
}

impl Monomial {
    pub fn identity(r: usize) -> Monomial {
        Monomial {
            perm: (0..r).collect(),
            invert: vec![false; r],
        }
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    /// Plain transposition of coordinates `a` and `b`.
    pub fn swap(r: usize, a: usize, b: usize) -> Monomial {
        let mut m = Monomial::identity(r);
        m.perm.swap(a, b);
        m
    }

    /// Transposition of `a` and `b` with both coordinates inverted.
    pub fn swap_invert(r: usize, a: usize, b: usize) -> Monomial {
        let mut m = Monomial::swap(r, a, b);
        m.invert[a] = true;
        m.invert[b] = true;
        m
    }

    /// Inversion of the single coordinate `a`.
    pub fn flip(r: usize, a: usize) -> Monomial {
        let mut m = Monomial::identity(r);
        m.invert[a] = true;
        m
    }

    /// `self` after `other` (apply `other` first).
    pub fn compose(&self, other: &Monomial) -> Monomial {
        let r = self.rank();
        assert_eq!(r, other.rank());
        let mut perm = vec![0usize; r];
        let mut invert = vec![false; r];
        for b in 0..r {
            perm[b] = self.perm[other.perm[b]];
            invert[b] = other.invert[b] ^ self.invert[other.perm[b]];
        }
        Monomial { perm, invert }
    }

    pub fn inverse(&self) -> Monomial {
        let r = self.rank();
        let mut perm = vec![0usize; r];
        let mut invert = vec![false; r];
        for b in 0..r {
            perm[self.perm[b]] = b;
            invert[self.perm[b]] = self.invert[b];
        }
        Monomial { perm, invert }
    }

    pub fn conjugate(&self, by: &Monomial) -> Monomial {
        by.compose(self).compose(&by.inverse())
    }

    pub fn num_inversions(&self) -> usize {
        self.invert.iter().filter(|&&b| b).count()
    }

    /// Apply to a coordinate tuple over a field.
    pub fn apply(&self, field: &FieldCtx, x: &[FqElem]) -> Vec<FqElem> {
        let r = self.rank();
        assert_eq!(x.len(), r);
        let mut out = vec![field.zero(); r];
        for b in 0..r {
            let v = if self.invert[b] {
                field.inv(&x[b])
            } else {
                x[b].clone()
            };
            out[self.perm[b]] = v;
        }
        out
    }
}

/// Generate the subgroup of monomial maps spanned by the given generators.
pub fn generate(rank: usize, gens: &[Monomial]) -> Vec<Monomial> {
    let mut seen = std::collections::HashSet::new();
    let id = Monomial::identity(rank);
    seen.insert(id.clone());
    let mut out = vec![id];
    let mut head = 0;
    while head < out.len() {
        let cur = out[head].clone();
        head += 1;
        for g in gens {
            let next = g.compose(&cur);
            if seen.insert(next.clone()) {
                out.push(next);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_matches_pointwise_application() {
        let f = FieldCtx::base(5, 1).unwrap();
        let x = vec![f.from_u64(2), f.from_u64(3), f.from_u64(4)];
        let a = Monomial::swap_invert(3, 0, 2);
        let b = Monomial::flip(3, 1);
        let ab = a.compose(&b);
        assert_eq!(ab.apply(&f, &x), a.apply(&f, &b.apply(&f, &x)));
        let inv = ab.inverse();
        assert_eq!(inv.apply(&f, &ab.apply(&f, &x)), x);
    }

    #[test]
    fn hyperoctahedral_order() {
        // B_3 as monomials: 2^3 * 3! = 48
        let gens = vec![
            Monomial::swap(3, 0, 1),
            Monomial::swap(3, 1, 2),
            Monomial::flip(3, 2),
        ];
        assert_eq!(generate(3, &gens).len(), 48);
        // D_3: even sign changes only: 24
        let gens_d = vec![
            Monomial::swap(3, 0, 1),
            Monomial::swap(3, 1, 2),
            Monomial::swap_invert(3, 1, 2),
        ];
        assert_eq!(generate(3, &gens_d).len(), 24);
    }
}
