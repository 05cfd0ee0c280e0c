//! Exact Weyl groups from a Dynkin diagram, via the integral reflection
//! representation on the root lattice. Elements are interned matrices;
//! lengths come from counting inverted positive roots; the Bruhat order is
//! evaluated by the standard descent recursion.

use crate::diagram::DynkinDiagram;
use crate::{CoxeterError, Result};
use std::collections::HashMap;
use std::sync::Mutex;

pub type ElemId = u32;

const MAX_GROUP: usize = 100_000;

pub struct WeylGroup {
    rank: usize,
    elements: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, ElemId>,
    lengths: Vec<u32>,
    gen_ids: Vec<ElemId>,
    bruhat_cache: Mutex<HashMap<(ElemId, ElemId), bool>>,
}

impl WeylGroup {
    pub fn from_diagram(d: &DynkinDiagram) -> Result<WeylGroup> {
        let rank = d.rank();
        let cartan = d.cartan();
        let gens: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                let mut m = identity_matrix(rank);
                for j in 0..rank {
                    m[i * rank + j] -= cartan[i * rank + j];
                }
                m
            })
            .collect();

        // roots: orbit of the simple roots under the generators
        let mut roots: Vec<Vec<i64>> = vec![];
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut queue: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                let mut v = vec![0i64; rank];
                v[i] = 1;
                v
            })
            .collect();
        for v in &queue {
            seen.insert(v.clone(), ());
        }
        while let Some(v) = queue.pop() {
            roots.push(v.clone());
            for g in &gens {
                let w = apply(g, &v, rank);
                if !seen.contains_key(&w) {
                    seen.insert(w.clone(), ());
                    queue.push(w);
                }
            }
        }
        let positive_roots: Vec<Vec<i64>> = roots
            .iter()
            .filter(|v| v.iter().all(|&c| c >= 0))
            .cloned()
            .collect();
        debug_assert_eq!(2 * positive_roots.len(), roots.len());

        // enumerate the group by BFS
        let id = identity_matrix(rank);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id, 0 as ElemId);
        let mut head = 0usize;
        while head < elements.len() {
            let cur = elements[head].clone();
            head += 1;
            for g in &gens {
                let prod = matmul(&cur, g, rank);
                if !index.contains_key(&prod) {
                    if elements.len() >= MAX_GROUP {
                        return Err(CoxeterError::GroupTooLarge(elements.len() + 1));
                    }
                    index.insert(prod.clone(), elements.len() as ElemId);
                    elements.push(prod);
                }
            }
        }
        let lengths = elements
            .iter()
            .map(|m| {
                positive_roots
                    .iter()
                    .filter(|r| apply(m, r, rank).iter().any(|&c| c < 0))
                    .count() as u32
            })
            .collect();
        let gen_ids = gens.iter().map(|g| index[g]).collect();
        Ok(WeylGroup {
            rank,
            elements,
            index,
            lengths,
            gen_ids,
            bruhat_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> ElemId {
        0
    }

    pub fn generator(&self, i: usize) -> ElemId {
        self.gen_ids[i]
    }

    pub fn multiply(&self, a: ElemId, b: ElemId) -> ElemId {
        let m = matmul(
            &self.elements[a as usize],
            &self.elements[b as usize],
            self.rank,
        );
        self.index[&m]
    }

    pub fn inverse(&self, a: ElemId) -> ElemId {
        // finite group: scan powers is wasteful; invert the matrix by
        // transport: w^-1 is the interned matrix whose product with w is id.
        // Invert via permutation of the (signed) root arrangement is
        // overkill; exploit that elements are orthogonal on the root system:
        // search by multiplication with generators along a reduced word.
        let word = self.word(a);
        let mut acc = self.identity();
        for &s in word.iter().rev() {
            acc = self.multiply(acc, self.generator(s));
        }
        debug_assert_eq!(self.multiply(acc, a), self.identity());
        acc
    }

    pub fn length(&self, a: ElemId) -> usize {
        self.lengths[a as usize] as usize
    }

    /// A reduced word, by greedy left-descent stripping.
    pub fn word(&self, a: ElemId) -> Vec<usize> {
        let mut out = vec![];
        let mut cur = a;
        while self.length(cur) > 0 {
            let mut found = false;
            for i in 0..self.rank {
                let next = self.multiply(self.generator(i), cur);
                if self.length(next) < self.length(cur) {
                    out.push(i);
                    cur = next;
                    found = true;
                    break;
                }
            }
            assert!(found, "non-identity element without descent");
        }
        out
    }

    pub fn from_word(&self, word: &[usize]) -> ElemId {
        let mut acc = self.identity();
        for &s in word {
            acc = self.multiply(acc, self.generator(s));
        }
        acc
    }

    /// The support: simple reflections occurring in a reduced word.
    pub fn support(&self, a: ElemId) -> Vec<usize> {
        let mut s: Vec<usize> = self.word(a);
        s.sort_unstable();
        s.dedup();
        s
    }

    /// Transport of a node permutation to a group automorphism (conjugation
    /// by the permutation matrix in root coordinates).
    pub fn apply_node_permutation(&self, perm: &[usize], a: ElemId) -> ElemId {
        let n = self.rank;
        let m = &self.elements[a as usize];
        // (P M P^-1)[perm[i]][perm[j]] = M[i][j]
        let mut out = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                out[perm[i] * n + perm[j]] = m[i * n + j];
            }
        }
        self.index[&out]
    }

    /// Bruhat order by the descent recursion.
    pub fn bruhat_leq(&self, u: ElemId, w: ElemId) -> bool {
        if u == w || u == self.identity() {
            return true;
        }
        if self.length(u) >= self.length(w) {
            return false;
        }
        if let Some(&v) = self.bruhat_cache.lock().unwrap().get(&(u, w)) {
            return v;
        }
        // pick s with l(sw) < l(w)
        let mut result = None;
        for i in 0..self.rank {
            let sw = self.multiply(self.generator(i), w);
            if self.length(sw) < self.length(w) {
                let su = self.multiply(self.generator(i), u);
                let r = if self.length(su) < self.length(u) {
                    self.bruhat_leq(su, sw)
                } else {
                    self.bruhat_leq(u, sw)
                };
                result = Some(r);
                break;
            }
        }
        let r = result.expect("non-identity w must have a descent");
        self.bruhat_cache.lock().unwrap().insert((u, w), r);
        r
    }

    /// Elements of the standard parabolic subgroup generated by `j`.
    pub fn parabolic_elements(&self, j: &[usize]) -> Vec<ElemId> {
        let mut seen = vec![false; self.order()];
        let mut out = vec![self.identity()];
        seen[0] = true;
        let mut head = 0;
        while head < out.len() {
            let cur = out[head];
            head += 1;
            for &s in j {
                let next = self.multiply(cur, self.generator(s));
                if !seen[next as usize] {
                    seen[next as usize] = true;
                    out.push(next);
                }
            }
        }
        out
    }

    /// Minimal length coset representatives of `W_J \ W`: the elements with
    /// no left descent in `J`.
    pub fn minimal_coset_reps(&self, j: &[usize]) -> Vec<ElemId> {
        (0..self.order() as ElemId)
            .filter(|&w| {
                j.iter().all(|&s| {
                    let sw = self.multiply(self.generator(s), w);
                    self.length(sw) > self.length(w)
                })
            })
            .collect()
    }

    /// `{ w in ^J W : u w sigma(u)^-1 <= w1 for some u in W_J }`, by
    /// exhaustive search over `W_J`.
    pub fn closure_set(&self, sigma: &[usize], j: &[usize], w1: ElemId) -> Vec<ElemId> {
        let reps = self.minimal_coset_reps(j);
        let wj = self.parabolic_elements(j);
        let mut out = vec![];
        for &w in &reps {
            let mut member = false;
            for &u in &wj {
                let su = self.apply_node_permutation(sigma, u);
                let cand = self.multiply(self.multiply(u, w), self.inverse(su));
                if self.bruhat_leq(cand, w1) {
                    member = true;
                    break;
                }
            }
            if member {
                out.push(w);
            }
        }
        out
    }
}

fn identity_matrix(n: usize) -> Vec<i64> {
    let mut m = vec![0i64; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

fn matmul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0i64; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    out
}

fn apply(m: &[i64], v: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0i64; n];
    for i in 0..n {
        let mut acc = 0;
        for j in 0..n {
            acc += m[i * n + j] * v[j];
        }
        out[i] = acc;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_of_classical_groups() {
        for (d, expect) in [
            (DynkinDiagram::type_a(2), 6),
            (DynkinDiagram::type_a(3), 24),
            (DynkinDiagram::type_b(2), 8),
            (DynkinDiagram::type_b(3), 48),
            (DynkinDiagram::type_c(3), 48),
            (DynkinDiagram::type_d(2), 4),
            (DynkinDiagram::type_d(3), 24),
            (DynkinDiagram::type_d(4), 192),
            (DynkinDiagram::type_b(5), 3840),
        ] {
            let w = WeylGroup::from_diagram(&d).unwrap();
            assert_eq!(w.order(), expect);
        }
    }

    #[test]
    fn coset_reps_a2() {
        let w = WeylGroup::from_diagram(&DynkinDiagram::type_a(2)).unwrap();
        // J = {s1}: ^J W = {1, s2, s2 s1}
        let reps = w.minimal_coset_reps(&[0]);
        assert_eq!(reps.len(), 3);
        let expected: Vec<ElemId> = vec![
            w.identity(),
            w.from_word(&[1]),
            w.from_word(&[1, 0]),
        ];
        let mut reps_sorted = reps.clone();
        reps_sorted.sort_unstable();
        let mut expected_sorted = expected.clone();
        expected_sorted.sort_unstable();
        assert_eq!(reps_sorted, expected_sorted);
    }

    #[test]
    fn coset_reps_extremes() {
        let w = WeylGroup::from_diagram(&DynkinDiagram::type_b(2)).unwrap();
        assert_eq!(w.minimal_coset_reps(&[0, 1]), vec![w.identity()]);
        assert_eq!(w.minimal_coset_reps(&[]).len(), w.order());
    }

    #[test]
    fn unique_parabolic_factorization() {
        let w = WeylGroup::from_diagram(&DynkinDiagram::type_b(3)).unwrap();
        let j = [0usize, 1];
        let wj = w.parabolic_elements(&j);
        let reps = w.minimal_coset_reps(&j);
        let mut seen = vec![0usize; w.order()];
        for &u in &wj {
            for &r in &reps {
                let prod = w.multiply(u, r);
                assert_eq!(w.length(prod), w.length(u) + w.length(r));
                seen[prod as usize] += 1;
            }
        }
        assert!(seen.iter().all(|&c| c == 1));
    }

    #[test]
    fn bruhat_b2_matches_covering_closure() {
        let w = WeylGroup::from_diagram(&DynkinDiagram::type_b(2)).unwrap();
        let n = w.order() as ElemId;
        // independent oracle: transitive closure of length-1 subword covers
        // via multiplication by reflections
        let mut reflections = vec![];
        for a in 0..n {
            let word = w.word(a);
            if word.len() % 2 == 1 && w.multiply(a, a) == w.identity() && a != w.identity() {
                reflections.push(a);
            }
        }
        let mut leq = vec![vec![false; n as usize]; n as usize];
        for a in 0..n {
            leq[a as usize][a as usize] = true;
        }
        // covers: u -> t u with l(t u) = l(u) + 1, t reflection
        let mut changed = true;
        while changed {
            changed = false;
            for u in 0..n {
                for &t in &reflections {
                    let v = w.multiply(t, u);
                    if w.length(v) > w.length(u) {
                        for x in 0..n as usize {
                            if leq[x][u as usize] && !leq[x][v as usize] {
                                leq[x][v as usize] = true;
                                changed = true;
                            }
                        }
                    }
                }
            }
        }
        for u in 0..n {
            for v in 0..n {
                assert_eq!(
                    w.bruhat_leq(u, v),
                    leq[u as usize][v as usize],
                    "mismatch at {u} {v}"
                );
            }
        }
    }

    #[test]
    fn bruhat_reflexive_and_bottom() {
        let w = WeylGroup::from_diagram(&DynkinDiagram::type_a(3)).unwrap();
        for a in 0..w.order() as ElemId {
            assert!(w.bruhat_leq(a, a));
            assert!(w.bruhat_leq(w.identity(), a));
        }
    }
}
