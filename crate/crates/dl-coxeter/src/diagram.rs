//! Dynkin diagrams, diagram automorphisms, and sigma-unbranched data.

use crate::CoxeterError;
use std::collections::BTreeSet;

/// An edge of a Dynkin diagram, stored with both Cartan integers so the
/// bond multiplicity and arrow direction are unambiguous:
/// `a_to_b = <alpha_b, alpha_a^vee>`, `b_to_a = <alpha_a, alpha_b^vee>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub a_to_b: i64,
    pub b_to_a: i64,
}

impl Edge {
    pub fn single(a: usize, b: usize) -> Edge {
        Edge {
            a,
            b,
            a_to_b: -1,
            b_to_a: -1,
        }
    }

    /// Double bond with `long` the long root and `short` the short one.
    pub fn double(long: usize, short: usize) -> Edge {
        Edge {
            a: long,
            b: short,
            a_to_b: -1,
            b_to_a: -2,
        }
    }
}

/// A Dynkin diagram on named nodes.
#[derive(Clone, Debug)]
pub struct DynkinDiagram {
    names: Vec<String>,
    edges: Vec<Edge>,
}

impl DynkinDiagram {
    pub fn new(names: Vec<String>, edges: Vec<Edge>) -> DynkinDiagram {
        for e in &edges {
            assert!(e.a < names.len() && e.b < names.len() && e.a != e.b);
        }
        DynkinDiagram { names, edges }
    }

    fn standard_names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("s{i}")).collect()
    }

    /// Type A_n: a simply-laced path.
    pub fn type_a(n: usize) -> DynkinDiagram {
        let edges = (0..n.saturating_sub(1))
            .map(|i| Edge::single(i, i + 1))
            .collect();
        DynkinDiagram::new(Self::standard_names(n), edges)
    }

    /// Type B_n (Bourbaki): path with a double bond at the end, `s_n` short.
    pub fn type_b(n: usize) -> DynkinDiagram {
        let mut edges: Vec<Edge> = (0..n.saturating_sub(2))
            .map(|i| Edge::single(i, i + 1))
            .collect();
        if n >= 2 {
            edges.push(Edge::double(n - 2, n - 1));
        }
        DynkinDiagram::new(Self::standard_names(n), edges)
    }

    /// Type C_n (Bourbaki): path with a double bond at the end, `s_n` long.
    pub fn type_c(n: usize) -> DynkinDiagram {
        let mut edges: Vec<Edge> = (0..n.saturating_sub(2))
            .map(|i| Edge::single(i, i + 1))
            .collect();
        if n >= 2 {
            edges.push(Edge::double(n - 1, n - 2));
        }
        DynkinDiagram::new(Self::standard_names(n), edges)
    }

    /// Type D_n (Bourbaki): path `s_1 - ... - s_{n-1}` with the extra edge
    /// `s_{n-2} - s_n`; D_2 is the disconnected pair.
    pub fn type_d(n: usize) -> DynkinDiagram {
        assert!(n >= 2);
        let mut edges: Vec<Edge> = vec![];
        if n >= 3 {
            edges.extend((0..n - 2).map(|i| Edge::single(i, i + 1)));
            edges.push(Edge::single(n - 3, n - 1));
        }
        DynkinDiagram::new(Self::standard_names(n), edges)
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn node_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.edges
            .iter()
            .any(|e| (e.a == a && e.b == b) || (e.a == b && e.b == a))
    }

    /// Cartan matrix `A[i][j] = <alpha_j, alpha_i^vee>`, row-major.
    pub fn cartan(&self) -> Vec<i64> {
        let n = self.rank();
        let mut a = vec![0i64; n * n];
        for i in 0..n {
            a[i * n + i] = 2;
        }
        for e in &self.edges {
            a[e.a * n + e.b] = e.a_to_b;
            a[e.b * n + e.a] = e.b_to_a;
        }
        a
    }

    /// Check a node permutation is a diagram automorphism.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        if perm.len() != self.rank() {
            return false;
        }
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            if p >= perm.len() || seen[p] {
                return false;
            }
            seen[p] = true;
        }
        let c = self.cartan();
        let n = self.rank();
        for i in 0..n {
            for j in 0..n {
                if c[i * n + j] != c[perm[i] * n + perm[j]] {
                    return false;
                }
            }
        }
        true
    }

    /// Orbits of a node permutation, each sorted, in order of least element.
    pub fn orbits(&self, perm: &[usize]) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut out = vec![];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![];
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                orbit.push(x);
                x = perm[x];
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }
}

/// A sigma-unbranched datum: diagram, Frobenius action, parabolic subset `J`
/// and the ordered unbranched transversal `L = (r_1, ..., r_a)`.
#[derive(Clone, Debug)]
pub struct SigmaDatum {
    pub diagram: DynkinDiagram,
    pub sigma: Vec<usize>,
    pub j: BTreeSet<usize>,
    pub l_nodes: Vec<usize>,
}

/// Data derived from a validated sigma-unbranched datum.
#[derive(Clone, Debug)]
pub struct UnbranchedData {
    /// `w_i = r_a r_{a-1} ... r_i` as words in node indices, for
    /// `i = 1..=i_max`; the last word is empty (the identity).
    pub w_words: Vec<Vec<usize>>,
    /// For each `i`, the three node sets `(flat, middle, sharp)` partitioning
    /// the diagram: the sigma-support of `w_i`, the orbit of `r_{i-1}`, and
    /// the rest.
    pub sigma_sets: Vec<(BTreeSet<usize>, BTreeSet<usize>, BTreeSet<usize>)>,
    pub i_max: usize,
}

impl SigmaDatum {
    /// Validate the unbranched axioms and derive the stratification data.
    /// All violated axioms are reported, by name, in the error list.
    pub fn validate_unbranched(&self) -> std::result::Result<UnbranchedData, Vec<CoxeterError>> {
        let mut errors = vec![];
        let d = &self.diagram;
        if !d.is_automorphism(&self.sigma) {
            return Err(vec![CoxeterError::SigmaNotAutomorphism]);
        }
        let orbits = d.orbits(&self.sigma);
        let orbit_of = |x: usize| orbits.iter().position(|o| o.contains(&x)).unwrap();

        // (1) S - J contained in one sigma-orbit (and nonempty, else the
        // end-node axiom below fails anyway).
        let complement: Vec<usize> = (0..d.rank()).filter(|i| !self.j.contains(i)).collect();
        if !complement.is_empty() {
            let o = orbit_of(complement[0]);
            if complement.iter().any(|&x| orbit_of(x) != o) {
                errors.push(CoxeterError::ComplementNotInOneOrbit);
            }
        }

        // (2) L: complete transversal of the orbits.
        let mut orbit_hits = vec![0usize; orbits.len()];
        for &r in &self.l_nodes {
            orbit_hits[orbit_of(r)] += 1;
        }
        if orbit_hits.iter().any(|&h| h != 1) {
            errors.push(CoxeterError::LNotOrbitTransversal);
        }

        // (2) L: connected, without branching, listed consecutively.
        let a = self.l_nodes.len();
        if a > 0 {
            let consecutive = (0..a.saturating_sub(1))
                .all(|i| d.adjacent(self.l_nodes[i], self.l_nodes[i + 1]));
            // degree within L at most 2, and exactly the path edges
            let mut path_ok = consecutive;
            for (i, &x) in self.l_nodes.iter().enumerate() {
                for (j, &y) in self.l_nodes.iter().enumerate() {
                    if i < j && d.adjacent(x, y) && j != i + 1 {
                        path_ok = false;
                    }
                }
            }
            if !consecutive {
                errors.push(CoxeterError::LNotConnected);
            } else if !path_ok {
                errors.push(CoxeterError::LBranched);
            }

            // (2) exactly one end-node in S - J, and the ordering puts it last.
            let first = self.l_nodes[0];
            let last = self.l_nodes[a - 1];
            let first_out = !self.j.contains(&first);
            let last_out = !self.j.contains(&last);
            if a == 1 {
                if !last_out {
                    errors.push(CoxeterError::EndNode("the only node of L is in J".into()));
                }
            } else {
                match (first_out, last_out) {
                    (false, true) => {}
                    (true, false) => errors.push(CoxeterError::EndNode(
                        "the S - J end-node must be r_a (listed last)".into(),
                    )),
                    (true, true) => {
                        errors.push(CoxeterError::EndNode("both end-nodes lie in S - J".into()))
                    }
                    (false, false) => {
                        errors.push(CoxeterError::EndNode("no end-node lies in S - J".into()))
                    }
                }
            }
        } else {
            errors.push(CoxeterError::EndNode("L is empty".into()));
        }

        if !errors.is_empty() {
            return Err(errors);
        }

        // Derived data.
        let i_max = a + 1;
        let mut w_words = vec![];
        for i in 1..=i_max {
            // r_a r_{a-1} ... r_i  (i 1-based)
            let word: Vec<usize> = (i..=a).rev().map(|k| self.l_nodes[k - 1]).collect();
            w_words.push(word);
        }
        let mut sigma_sets = vec![];
        for i in 1..=i_max {
            let mut flat = BTreeSet::new();
            for k in i..=a {
                flat.extend(orbits[orbit_of(self.l_nodes[k - 1])].iter().copied());
            }
            let middle: BTreeSet<usize> = if i >= 2 {
                orbits[orbit_of(self.l_nodes[i - 2])].iter().copied().collect()
            } else {
                BTreeSet::new()
            };
            let sharp: BTreeSet<usize> = (0..d.rank())
                .filter(|x| !flat.contains(x) && !middle.contains(x))
                .collect();
            sigma_sets.push((flat, middle, sharp));
        }

        // Partition, sigma-stability, and flat/sharp disconnection.
        for (flat, middle, sharp) in &sigma_sets {
            let total = flat.len() + middle.len() + sharp.len();
            if total != d.rank() {
                return Err(vec![CoxeterError::DerivedCheck(
                    "sigma sets do not partition the diagram".into(),
                )]);
            }
            for set in [flat, middle, sharp] {
                if set.iter().any(|&x| !set.contains(&self.sigma[x])) {
                    return Err(vec![CoxeterError::DerivedCheck(
                        "sigma set is not sigma-stable".into(),
                    )]);
                }
            }
            for &x in flat {
                for &y in sharp {
                    if d.adjacent(x, y) {
                        return Err(vec![CoxeterError::DerivedCheck(
                            "flat and sharp sets are connected".into(),
                        )]);
                    }
                }
            }
        }

        // Explicit disconnection: for 3 <= i <= a and every power of sigma,
        // sigma^m{r_{i-2}, ..., r_1} is disconnected from {r_a, ..., r_i}.
        let sigma_order = {
            let mut ord = 1usize;
            let mut p: Vec<usize> = self.sigma.clone();
            while p.iter().enumerate().any(|(i, &x)| x != i) {
                p = p.iter().map(|&x| self.sigma[x]).collect();
                ord += 1;
            }
            ord
        };
        for i in 3..=a {
            let tail: Vec<usize> = (i..=a).map(|k| self.l_nodes[k - 1]).collect();
            for m in 0..sigma_order {
                for l in 1..=i - 2 {
                    let mut x = self.l_nodes[l - 1];
                    for _ in 0..m {
                        x = self.sigma[x];
                    }
                    for &t in &tail {
                        if d.adjacent(x, t) {
                            return Err(vec![CoxeterError::DerivedCheck(format!(
                                "sigma^{m}(r_{l}) is adjacent to the tail at r-index {t}"
                            ))]);
                        }
                    }
                }
            }
        }

        Ok(UnbranchedData {
            w_words,
            sigma_sets,
            i_max,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a_flip(n: usize) -> Vec<usize> {
        (0..n).map(|i| n - 1 - i).collect()
    }

    #[test]
    fn unitary_rank2_datum() {
        // U_5: A_4 diagram, sigma flips, J = S - {s2}, L = (s1, s2)
        let d = DynkinDiagram::type_a(4);
        let datum = SigmaDatum {
            sigma: a_flip(4),
            j: [0usize, 2, 3].into_iter().collect(),
            l_nodes: vec![0, 1],
            diagram: d,
        };
        let derived = datum.validate_unbranched().unwrap();
        assert_eq!(derived.i_max, 3);
        assert_eq!(derived.w_words, vec![vec![1, 0], vec![1], vec![]]);
    }

    #[test]
    fn rejects_both_end_nodes_outside_j() {
        let d = DynkinDiagram::type_b(3);
        let datum = SigmaDatum {
            sigma: vec![0, 1, 2],
            j: [1usize].into_iter().collect(), // S - J = {s1, s3}: two orbits and both ends
            l_nodes: vec![0, 1, 2],
            diagram: d,
        };
        let errs = datum.validate_unbranched().unwrap_err();
        assert!(errs
            .iter()
            .any(|e| matches!(e, CoxeterError::ComplementNotInOneOrbit)));
        assert!(errs.iter().any(|e| matches!(e, CoxeterError::EndNode(_))));
    }

    #[test]
    fn rejects_both_end_nodes_inside_j() {
        // B_3 with J = S: no end-node of L lies outside J
        let d = DynkinDiagram::type_b(3);
        let datum = SigmaDatum {
            sigma: vec![0, 1, 2],
            j: [0usize, 1, 2].into_iter().collect(),
            l_nodes: vec![0, 1, 2],
            diagram: d,
        };
        let errs = datum.validate_unbranched().unwrap_err();
        assert!(errs.iter().any(|e| matches!(e, CoxeterError::EndNode(_))));
    }

    #[test]
    fn d4_twisted_datum() {
        // 2D_4: J = S - {s3}, L = (s1, s2, s3)
        let d = DynkinDiagram::type_d(4);
        let datum = SigmaDatum {
            sigma: vec![0, 1, 3, 2],
            j: [0usize, 1, 3].into_iter().collect(),
            l_nodes: vec![0, 1, 2],
            diagram: d,
        };
        let derived = datum.validate_unbranched().unwrap();
        assert_eq!(derived.i_max, 4);
        // sigma sets at i = 2: flat = orbits of r_2, r_3 = {s2} u {s3, s4},
        // middle = {s1}, sharp = {}
        let (flat, middle, sharp) = &derived.sigma_sets[1];
        assert_eq!(flat.iter().copied().collect::<Vec<_>>(), vec![1, 2, 3]);
        assert_eq!(middle.iter().copied().collect::<Vec<_>>(), vec![0]);
        assert!(sharp.is_empty());
    }
}
