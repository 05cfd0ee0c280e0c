//! Brute-force oracle for admissible enumerations: enumerate all orderings
//! of the roots, filter by the defining relations, and compare against the
//! fast construction.

use dl_algebra::reciprocal::{admissible_enumerations, AdmissibleMode};
use dl_algebra::sampling::{sr2_irreducibles_via_circle, sr_irreducibles};
use dl_algebra::{roots_in_field, FieldCtx, FqElem};

fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = vec![];
    for (i, x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, x.clone());
            out.push(tail);
        }
    }
    out
}

/// Every degree-4 self-reciprocal irreducible over GF(3): the fast
/// construction returns exactly the orderings that pass the defining
/// relations, all 4 of them, forming one cyclic orbit.
#[test]
fn even_mode_degree_four_matches_exhaustive_filter() {
    let f3 = FieldCtx::base(3, 1).unwrap();
    for q in sr_irreducibles(&f3, 4, false) {
        let adm = admissible_enumerations(&q, AdmissibleMode::EvenSr).unwrap();
        let ext = adm.splitting_field.clone();
        let roots = roots_in_field(&q.map_field(&adm.embedding));
        assert_eq!(roots.len(), 4);

        // brute force: all 4! orderings, keep those of the admissible form
        let mut oracle: Vec<Vec<FqElem>> = vec![];
        for perm in permutations(&roots) {
            let (l1, l2) = (&perm[0], &perm[1]);
            let full = vec![l1.clone(), l2.clone(), ext.inv(l1), ext.inv(l2)];
            // the sequence must be exactly the root multiset
            let mut sorted: Vec<_> = full.iter().map(|r| r.value_key(3)).collect();
            sorted.sort_unstable();
            let mut expect: Vec<_> = roots.iter().map(|r| r.value_key(3)).collect();
            expect.sort_unstable();
            if sorted != expect {
                continue;
            }
            // defining relations: l1^sigma = l2, l2^sigma = l1^-1
            if ext.frobenius(l1, 1) == *l2
                && ext.frobenius(l2, 1) == ext.inv(l1)
                && !oracle.contains(&full)
            {
                oracle.push(full);
            }
        }
        assert_eq!(oracle.len(), 4, "oracle count for {q:?}");
        assert_eq!(adm.sequences.len(), 4);
        for seq in &adm.sequences {
            assert!(oracle.contains(seq), "fast sequence missing from oracle");
        }
        // single cyclic orbit: shifting any sequence by one gives another
        let shift = |s: &[FqElem]| {
            let mut v = s.to_vec();
            v.rotate_right(1);
            v
        };
        for seq in &adm.sequences {
            let rotated = shift(seq);
            assert!(
                adm.sequences.contains(&rotated),
                "cyclic shift leaves the admissible set"
            );
        }
    }
}

/// Odd conjugate mode at degree 3 over GF(9): the fast construction matches
/// the exhaustive filter on all 3! orderings.
#[test]
fn odd_mode_degree_three_matches_exhaustive_filter() {
    let f3 = FieldCtx::base(3, 1).unwrap();
    let (f9, _) = f3.extension(2).unwrap();
    for q in sr2_irreducibles_via_circle(&f9, 3).into_iter().take(6) {
        let adm = admissible_enumerations(&q, AdmissibleMode::OddSr2).unwrap();
        let ext = adm.splitting_field.clone();
        let roots = roots_in_field(&q.map_field(&adm.embedding));
        assert_eq!(roots.len(), 3);
        let mut oracle: Vec<Vec<FqElem>> = vec![];
        for perm in permutations(&roots) {
            let ok = (0..3).all(|j| ext.frobenius(&perm[j], 2) == perm[(j + 1) % 3]);
            if ok {
                oracle.push(perm);
            }
        }
        assert_eq!(oracle.len(), 3, "oracle count for {q:?}");
        for seq in &adm.sequences {
            assert!(oracle.contains(seq));
        }
    }
}
