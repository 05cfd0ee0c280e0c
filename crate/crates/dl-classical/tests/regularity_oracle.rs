//! Independent oracle for GL-regularity: an element is regular exactly when
//! every eigenspace over the splitting field is one-dimensional.

use dl_classical::{is_gl_regular, Matrix};
use dl_algebra::{factor, roots_in_field, FieldCtx};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// dim ker(g - lambda) for every eigenvalue lambda in the splitting field
/// of its irreducible factor.
fn all_eigenspaces_one_dimensional(g: &Matrix) -> bool {
    let field = g.field().clone();
    let f = g.charpoly();
    for (q, _) in factor(&f).unwrap() {
        let (ext, emb) = field.extension(q.degree()).unwrap();
        let qx = q.map_field(&emb);
        let mut gx = Matrix::zero(&ext, g.rows(), g.cols());
        for i in 0..g.rows() {
            for j in 0..g.cols() {
                gx.set(i, j, emb.apply(g.at(i, j)));
            }
        }
        for root in roots_in_field(&qx) {
            let mut shifted = gx.clone();
            for i in 0..g.rows() {
                let d = ext.sub(shifted.at(i, i), &root);
                shifted.set(i, i, d);
            }
            if shifted.kernel().len() != 1 {
                return false;
            }
        }
    }
    true
}

#[test]
fn minpoly_criterion_matches_eigenspace_oracle() {
    let f3 = FieldCtx::base(3, 1).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6e6e);
    let mut cases: Vec<Matrix> = vec![];
    for _ in 0..50 {
        let n = rng.gen_range(2..=4usize);
        let mut g = Matrix::zero(&f3, n, n);
        for i in 0..n {
            for j in 0..n {
                g.set(i, j, f3.from_u64(rng.gen_range(0..3)));
            }
        }
        cases.push(g);
    }
    // guaranteed-irregular shapes: scalar blocks repeat eigenvalues
    cases.push(Matrix::identity(&f3, 3));
    let mut two_blocks = Matrix::identity(&f3, 4);
    two_blocks.set(0, 1, f3.one());
    two_blocks.set(2, 3, f3.one()); // two identical Jordan blocks
    cases.push(two_blocks);
    let mut regular = 0;
    let mut irregular = 0;
    for g in &cases {
        let fast = is_gl_regular(g);
        let oracle = all_eigenspaces_one_dimensional(g);
        assert_eq!(fast, oracle, "disagreement on {g:?}");
        if fast {
            regular += 1;
        } else {
            irregular += 1;
        }
    }
    assert!(regular > 5 && irregular >= 2, "sweep covered both outcomes");
}

#[test]
fn identity_is_not_regular_and_is_rejected() {
    let f3 = FieldCtx::base(3, 1).unwrap();
    let id = Matrix::identity(&f3, 3);
    assert!(!is_gl_regular(&id));
    let space = dl_classical::standard_space(dl_classical::SpaceKind::SOOdd, 1, &f3).unwrap();
    assert!(matches!(
        dl_classical::eigen_parity_check(&space, &id),
        Err(dl_classical::ClassicalError::NotGlRegular)
    ));
    assert!(dl_classical::invariant_flags(&space, &id, 1).is_err());
}

#[test]
fn unitary_draws_cover_irreducible_cubics_quickly() {
    // an irreducible self-reciprocal cubic characteristic polynomial shows
    // up well within ten thousand seeded draws
    let f3 = FieldCtx::base(3, 1).unwrap();
    let space = dl_classical::standard_space(dl_classical::SpaceKind::Unitary, 1, &f3).unwrap();
    let found = (0..10_000u64).any(|seed| {
        let g = space.random_isometry(seed);
        dl_algebra::is_irreducible(&g.charpoly())
    });
    assert!(found);
}
