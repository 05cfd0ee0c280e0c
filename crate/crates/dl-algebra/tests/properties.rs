//! Property-based invariants of the polynomial layer.

use dl_algebra::{factor, format_poly, is_irreducible, parse_poly, reciprocal, FieldCtx, Poly};
use proptest::prelude::*;

fn arb_monic_poly(p: u64, max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(0..p, 1..=max_deg).prop_map(move |coeffs| {
        let field = FieldCtx::base(p, 1).unwrap();
        let mut cs: Vec<_> = coeffs.iter().map(|&c| field.from_u64(c)).collect();
        cs.push(field.one());
        Poly::new(&field, cs)
    })
}

fn arb_monic_nonzero_const(p: u64, max_deg: usize) -> impl Strategy<Value = Poly> {
    (1..p, prop::collection::vec(0..p, 0..max_deg)).prop_map(move |(c0, rest)| {
        let field = FieldCtx::base(p, 1).unwrap();
        let mut cs = vec![field.from_u64(c0)];
        cs.extend(rest.iter().map(|&c| field.from_u64(c)));
        cs.push(field.one());
        Poly::new(&field, cs)
    })
}

proptest! {
    /// Factorization reassembles its input, with irreducible factors.
    #[test]
    fn factor_reassembles(f in arb_monic_poly(3, 9)) {
        let fac = factor(&f).unwrap();
        let mut acc = Poly::one(f.field());
        for (q, m) in &fac {
            prop_assert!(is_irreducible(q));
            acc = acc.mul(&q.pow(*m));
        }
        prop_assert_eq!(acc, f);
    }

    /// The reciprocal is an involution on monic polynomials with nonzero
    /// constant term.
    #[test]
    fn reciprocal_involution(f in arb_monic_nonzero_const(5, 8)) {
        let once = reciprocal(&f, false).unwrap();
        prop_assert_eq!(reciprocal(&once, false).unwrap(), f);
    }

    /// The text format round-trips bit-exactly.
    #[test]
    fn format_roundtrip(f in arb_monic_poly(5, 8)) {
        let s = format_poly(&f);
        let (_, back) = parse_poly(&s).unwrap();
        prop_assert_eq!(back, f);
        // and emission is stable
        prop_assert_eq!(format_poly(&parse_poly(&s).unwrap().1), s);
    }

    /// Division is Euclidean: f = q g + r with deg r < deg g.
    #[test]
    fn euclidean_division(f in arb_monic_poly(3, 9), g in arb_monic_poly(3, 5)) {
        let (q, r) = f.div_rem(&g);
        prop_assert_eq!(q.mul(&g).add(&r), f.clone());
        prop_assert!(r.is_zero() || r.degree() < g.degree());
    }
}
