//! The four classical families and their maximal-torus coordinate models.
//!
//! Each stratum of a family carries a torus whose rational points are
//! described by an explicit Galois twist on coordinate tuples: a cyclic
//! shift composed with an inversion (orthogonal and symplectic cases), or a
//! half-turn shift with inversion (odd unitary case), followed by the
//! entrywise Frobenius. The counting quantity is evaluated two independent
//! ways: as twist-fixed cosets of the reflection stabilizer, and as rational
//! points in the Weyl orbit of the class representative.

use crate::diagram::{DynkinDiagram, SigmaDatum};
use crate::monomial::{generate, Monomial};
use crate::{CoxeterError, Result};
use dl_algebra::reciprocal::{is_self_reciprocal, AdmissibleMode};
use dl_algebra::{admissible_enumerations, is_irreducible, FieldCtx, FqElem, Poly};
use std::collections::HashMap;

/// One of the four infinite families of sigma-unbranched data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Non-split even special orthogonal group `SO_{2n}^-`.
    EvenSO,
    /// Odd special orthogonal group `SO_{2n+1}`.
    OddSO,
    /// Symplectic group `Sp_{2n}`.
    Sp,
    /// Odd unitary group `U_{2n+1}`.
    Unitary,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::EvenSO, Family::OddSO, Family::Sp, Family::Unitary];

    pub fn name(&self) -> &'static str {
        match self {
            Family::EvenSO => "so-even",
            Family::OddSO => "so-odd",
            Family::Sp => "sp",
            Family::Unitary => "u",
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        Family::ALL.iter().copied().find(|f| f.name() == s)
    }

    /// Coefficients of characteristic polynomials live in `GF(q^2)` here.
    pub fn conjugate_mode(&self) -> bool {
        matches!(self, Family::Unitary)
    }

    /// Dimension of the standard representation at rank `n`.
    pub fn dimension(&self, n: usize) -> usize {
        match self {
            Family::EvenSO | Family::Sp => 2 * n,
            Family::OddSO | Family::Unitary => 2 * n + 1,
        }
    }

    pub fn min_rank(&self) -> usize {
        match self {
            Family::EvenSO => 2,
            _ => 1,
        }
    }

    /// Number of strata of the closed stratified space at rank `n`.
    pub fn i_max(&self, n: usize) -> usize {
        match self {
            Family::EvenSO => n,
            _ => n + 1,
        }
    }

    /// Torus rank of the stratum-`i` group (1-based `i`).
    pub fn nprime(&self, n: usize, i: usize) -> usize {
        n + 1 - i
    }

    /// The sigma-unbranched datum of the family at rank `n`.
    pub fn datum(&self, n: usize) -> SigmaDatum {
        assert!(n >= self.min_rank());
        match self {
            Family::EvenSO => {
                let diagram = DynkinDiagram::type_d(n);
                let mut sigma: Vec<usize> = (0..n).collect();
                sigma.swap(n - 2, n - 1);
                SigmaDatum {
                    diagram,
                    sigma,
                    j: (0..n).filter(|&x| x != n - 2).collect(),
                    l_nodes: (0..n - 1).collect(),
                }
            }
            Family::OddSO => SigmaDatum {
                diagram: DynkinDiagram::type_b(n),
                sigma: (0..n).collect(),
                j: (0..n - 1).collect(),
                l_nodes: (0..n).collect(),
            },
            Family::Sp => SigmaDatum {
                diagram: DynkinDiagram::type_c(n),
                sigma: (0..n).collect(),
                j: (0..n - 1).collect(),
                l_nodes: (0..n).collect(),
            },
            Family::Unitary => SigmaDatum {
                diagram: DynkinDiagram::type_a(2 * n),
                sigma: (0..2 * n).rev().collect(),
                j: (0..2 * n).filter(|&x| x != n - 1).collect(),
                l_nodes: (0..n).collect(),
            },
        }
    }

    /// Number of torus coordinates at stratum torus rank `nprime`.
    pub fn coords(&self, nprime: usize) -> usize {
        match self {
            Family::Unitary => 2 * nprime + 1,
            _ => nprime,
        }
    }

    /// Generators of the stratum Weyl group in the monomial model.
    pub fn weyl_generators(&self, nprime: usize) -> Vec<Monomial> {
        let r = self.coords(nprime);
        let mut gens: Vec<Monomial> = (0..r.saturating_sub(1))
            .map(|a| Monomial::swap(r, a, a + 1))
            .collect();
        match self {
            Family::EvenSO => {
                if nprime >= 2 {
                    gens.push(Monomial::swap_invert(r, r - 2, r - 1));
                }
            }
            Family::OddSO | Family::Sp => {
                if nprime >= 1 {
                    gens.push(Monomial::flip(r, r - 1));
                }
            }
            Family::Unitary => {}
        }
        gens
    }

    /// Positive roots as `(exponent vector, reflection)`: the root evaluates
    /// on a coordinate tuple as `prod_b x_b^(exp_b)`.
    pub fn roots(&self, nprime: usize) -> Vec<(Vec<i64>, Monomial)> {
        let r = self.coords(nprime);
        let mut out = vec![];
        for a in 0..r {
            for b in a + 1..r {
                // e_a - e_b
                let mut minus = vec![0i64; r];
                minus[a] = 1;
                minus[b] = -1;
                out.push((minus, Monomial::swap(r, a, b)));
                if !matches!(self, Family::Unitary) {
                    // e_a + e_b
                    let mut plus = vec![0i64; r];
                    plus[a] = 1;
                    plus[b] = 1;
                    out.push((plus, Monomial::swap_invert(r, a, b)));
                }
            }
        }
        match self {
            Family::OddSO => {
                for a in 0..r {
                    let mut v = vec![0i64; r];
                    v[a] = 1;
                    out.push((v, Monomial::flip(r, a)));
                }
            }
            Family::Sp => {
                for a in 0..r {
                    let mut v = vec![0i64; r];
                    v[a] = 2;
                    out.push((v, Monomial::flip(r, a)));
                }
            }
            _ => {}
        }
        out
    }

    /// The monomial part of the Galois twist on torus coordinates; the full
    /// twist is this composed with the entrywise Frobenius.
    pub fn galois_twist(&self, nprime: usize) -> Monomial {
        let r = self.coords(nprime);
        match self {
            Family::Unitary => {
                // out[b] = x[(b + n') mod r]^-1, i.e. coordinate c goes to
                // position (c + n' + 1) mod r, inverted.
                let mut perm = vec![0usize; r];
                for c in 0..r {
                    perm[c] = (c + nprime + 1) % r;
                }
                Monomial {
                    perm,
                    invert: vec![true; r],
                }
            }
            _ => {
                // out[0] = x[r-1]^-1, out[b] = x[b-1] otherwise
                if r == 0 {
                    return Monomial::identity(0);
                }
                let mut perm = vec![0usize; r];
                let mut invert = vec![false; r];
                for c in 0..r.saturating_sub(1) {
                    perm[c] = c + 1;
                }
                perm[r - 1] = 0;
                invert[r - 1] = true;
                Monomial { perm, invert }
            }
        }
    }

    /// Apply the full Galois twist (monomial part then Frobenius is the same
    /// as Frobenius then monomial part, since the twist has integral
    /// exponents).
    pub fn galois_apply(&self, nprime: usize, field: &FieldCtx, x: &[FqElem]) -> Vec<FqElem> {
        let frobbed: Vec<FqElem> = x.iter().map(|c| field.frobenius(c, 1)).collect();
        self.galois_twist(nprime).apply(field, &frobbed)
    }

    /// As [`Family::galois_apply`], with inversions memoized; the twists
    /// invert every coordinate, and orbit sweeps hit the same small value
    /// set over and over.
    fn galois_apply_cached(
        &self,
        twist: &Monomial,
        field: &FieldCtx,
        x: &[FqElem],
        inv_cache: &mut HashMap<FqElem, FqElem>,
    ) -> Vec<FqElem> {
        let r = twist.rank();
        let mut out = vec![field.zero(); r];
        for b in 0..r {
            let f = field.frobenius(&x[b], 1);
            let v = if twist.invert[b] {
                inv_cache
                    .entry(f.clone())
                    .or_insert_with(|| field.inv(&f))
                    .clone()
            } else {
                f
            };
            out[twist.perm[b]] = v;
        }
        out
    }
}

/// A semisimple conjugacy-class representative in a stratum torus, given by
/// its characteristic polynomial shape `Q^m` (with the mandatory extra
/// eigenvalue 1 implicit in the odd orthogonal case).
#[derive(Clone, Debug)]
pub struct TorusClass {
    pub family: Family,
    pub nprime: usize,
    pub q_poly: Poly,
    pub m: usize,
}

impl TorusClass {
    pub fn new(family: Family, nprime: usize, q_poly: Poly, m: usize) -> Result<TorusClass> {
        let cls = TorusClass {
            family,
            nprime,
            q_poly,
            m,
        };
        cls.check_realizable()?;
        Ok(cls)
    }

    fn base_field(&self) -> &FieldCtx {
        self.q_poly.field()
    }

    fn is_lambda_plus_minus_one(&self) -> Option<i64> {
        let f = self.base_field();
        if self.q_poly.degree() != 1 {
            return None;
        }
        let c = self.q_poly.coeff(0);
        if c == f.neg(&f.one()) {
            Some(1) // lambda - 1
        } else if c == f.one() {
            Some(-1) // lambda + 1
        } else {
            None
        }
    }

    fn check_realizable(&self) -> Result<()> {
        let conj = self.family.conjugate_mode();
        let f = self.base_field();
        if conj && !f.has_conjugation() {
            return Err(CoxeterError::Unrealizable(
                "unitary classes need a GF(q^2) base field".into(),
            ));
        }
        if !is_irreducible(&self.q_poly) || !is_self_reciprocal(&self.q_poly, conj)? {
            return Err(CoxeterError::Unrealizable(
                "Q must be irreducible and self-reciprocal".into(),
            ));
        }
        let d = self.q_poly.degree();
        let eigen_count = match self.family {
            Family::Unitary => 2 * self.nprime + 1,
            _ => 2 * self.nprime,
        };
        if d * self.m != eigen_count {
            return Err(CoxeterError::Unrealizable(format!(
                "deg(Q) * m = {} does not match the torus eigenvalue count {}",
                d * self.m,
                eigen_count
            )));
        }
        match self.is_lambda_plus_minus_one() {
            Some(j) => {
                if self.family == Family::Unitary {
                    // a linear SR2 factor: fine, handled as the general case
                } else {
                    if self.family == Family::OddSO && j == -1 {
                        return Err(CoxeterError::Unrealizable(
                            "eigenvalue -1 classes are excluded in the odd orthogonal case \
                             (disconnected centralizer)"
                                .into(),
                        ));
                    }
                    // central class: m = 2n' forced by the degree check
                }
            }
            None => {
                if self.family != Family::Unitary && self.m % 2 == 0 {
                    return Err(CoxeterError::Unrealizable(
                        "non-central classes need odd multiplicity".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Coordinates of a rational representative in the splitting field.
    pub fn coordinates(&self) -> Result<(FieldCtx, Vec<FqElem>)> {
        let base = self.base_field();
        let conj = self.family.conjugate_mode();
        if let Some(j) = self.is_lambda_plus_minus_one() {
            if !conj {
                // central: all coordinates equal to the single eigenvalue
                let (ext, emb) = base.extension(1)?;
                let val = emb.apply(&base.from_i64(j));
                return Ok((ext, vec![val; self.nprime]));
            }
        }
        let mode = if conj {
            AdmissibleMode::OddSr2
        } else {
            AdmissibleMode::EvenSr
        };
        let adm = admissible_enumerations(&self.q_poly, mode)?;
        let ext = adm.splitting_field.clone();
        let seq = &adm.sequences[0];
        let d = self.q_poly.degree();
        let mut coords = vec![];
        if conj {
            for _ in 0..self.m {
                coords.extend(seq.iter().cloned());
            }
        } else {
            // blocks Lambda, Lambda^-1, ..., Lambda (m blocks, m odd)
            let half: Vec<FqElem> = seq[..d / 2].to_vec();
            let half_inv: Vec<FqElem> = half.iter().map(|x| ext.inv(x)).collect();
            for k in 0..self.m {
                if k % 2 == 0 {
                    coords.extend(half.iter().cloned());
                } else {
                    coords.extend(half_inv.iter().cloned());
                }
            }
        }
        assert_eq!(coords.len(), self.family.coords(self.nprime));
        Ok((ext, coords))
    }
}

/// The stratum Weyl group in the monomial model, cached per family and
/// torus rank (the S_7 case alone is five thousand elements).
fn weyl_elements_cached(family: Family, nprime: usize) -> std::sync::Arc<Vec<Monomial>> {
    use std::sync::{Arc, Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<HashMap<(Family, usize), Arc<Vec<Monomial>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&(family, nprime)) {
        return v.clone();
    }
    let r = family.coords(nprime);
    let v = Arc::new(generate(r, &family.weyl_generators(nprime)));
    cache.lock().unwrap().insert((family, nprime), v.clone());
    v
}

fn eval_root(field: &FieldCtx, coords: &[FqElem], exps: &[i64]) -> FqElem {
    let mut acc = field.one();
    for (c, &e) in coords.iter().zip(exps) {
        match e {
            0 => {}
            1 => acc = field.mul(&acc, c),
            -1 => acc = field.mul(&acc, &field.inv(c)),
            2 => {
                acc = field.mul(&acc, c);
                acc = field.mul(&acc, c);
            }
            _ => unreachable!("root exponents are -1, 0, 1, 2"),
        }
    }
    acc
}

/// Both brute-force routes (twist-fixed cosets of the reflection
/// stabilizer, and rational points in the Weyl orbit) over a single
/// coordinate computation.
pub fn torus_t_both_routes(class: &TorusClass) -> Result<(u64, u64)> {
    let (ext, coords) = class.coordinates()?;
    Ok((
        coset_count(class, &ext, &coords)?,
        orbit_rational_count(class, &ext, &coords),
    ))
}

/// The torus counting quantity, computed as the number of twist-fixed
/// cosets of the reflection stabilizer of the class representative inside
/// the stratum Weyl group.
pub fn torus_t_bruteforce(class: &TorusClass) -> Result<u64> {
    let (ext, coords) = class.coordinates()?;
    coset_count(class, &ext, &coords)
}

fn coset_count(class: &TorusClass, ext: &FieldCtx, coords: &[FqElem]) -> Result<u64> {
    let family = class.family;
    let nprime = class.nprime;
    // rationality of the representative
    let twisted = family.galois_apply(nprime, ext, coords);
    assert_eq!(
        twisted, coords,
        "class representative must be a rational point"
    );
    let r = family.coords(nprime);
    let w_all = weyl_elements_cached(family, nprime);
    let mut stab_gens = vec![];
    for (exps, refl) in family.roots(nprime) {
        if eval_root(ext, coords, &exps) == ext.one() {
            stab_gens.push(refl);
        }
    }
    let w_gamma = generate(r, &stab_gens);
    let tau = family.galois_twist(nprime);
    // twist-stability of the stabilizer
    for h in &w_gamma {
        let conj = h.conjugate(&tau);
        assert!(
            w_gamma.contains(&conj),
            "reflection stabilizer must be twist-stable"
        );
    }
    // enumerate cosets w * W_gamma and count the twist-fixed ones
    let mut coset_of: HashMap<Monomial, usize> = HashMap::new();
    let mut reps: Vec<Monomial> = vec![];
    for w in w_all.iter() {
        if coset_of.contains_key(w) {
            continue;
        }
        let idx = reps.len();
        for h in &w_gamma {
            coset_of.insert(w.compose(h), idx);
        }
        reps.push(w.clone());
    }
    let fixed = reps
        .iter()
        .enumerate()
        .filter(|(idx, w)| coset_of[&w.conjugate(&tau)] == *idx)
        .count();
    Ok(fixed as u64)
}

/// Independent route: the number of rational points in the Weyl orbit of
/// the class representative.
pub fn torus_orbit_rational_count(class: &TorusClass) -> Result<u64> {
    let (ext, coords) = class.coordinates()?;
    Ok(orbit_rational_count(class, &ext, &coords))
}

fn orbit_rational_count(class: &TorusClass, ext: &FieldCtx, coords: &[FqElem]) -> u64 {
    let family = class.family;
    let nprime = class.nprime;
    let r = family.coords(nprime);
    let w_all = weyl_elements_cached(family, nprime);
    // inverses repeat across the orbit; memoize them
    let mut inv_cache: HashMap<FqElem, FqElem> = HashMap::new();
    let mut orbit: std::collections::HashSet<Vec<FqElem>> = Default::default();
    for w in w_all.iter() {
        let mut pt = vec![ext.zero(); r];
        for b in 0..r {
            let v = if w.invert[b] {
                inv_cache
                    .entry(coords[b].clone())
                    .or_insert_with(|| ext.inv(&coords[b]))
                    .clone()
            } else {
                coords[b].clone()
            };
            pt[w.perm[b]] = v;
        }
        orbit.insert(pt);
    }
    let twist = family.galois_twist(nprime);
    let fixed = orbit
        .iter()
        .filter(|pt| &family.galois_apply_cached(&twist, ext, pt, &mut inv_cache) == *pt)
        .count();
    fixed as u64
}

/// The closed-form torus count for a realizable class.
pub fn torus_t_closed_form(class: &TorusClass) -> u64 {
    let d = class.q_poly.degree() as u64;
    if class.family != Family::Unitary && class.is_lambda_plus_minus_one().is_some() {
        return 1;
    }
    match class.family {
        Family::EvenSO => d / 2,
        _ => d,
    }
}

/// A characteristic-polynomial shape observed among rational torus points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointShape {
    pub q_poly: Poly,
    pub m: usize,
    /// The extra eigenvalue 1 in the odd orthogonal case.
    pub lambda_one: bool,
}

/// Enumerate all rational points of the stratum torus and classify their
/// characteristic polynomials. The group is cyclic of order `q^(n') + 1`
/// (orthogonal and symplectic) or `q^(2n'+1) + 1` (unitary), generated
/// through the coordinate Galois conditions.
pub fn torus_rational_points(
    family: Family,
    nprime: usize,
    base: &FieldCtx,
) -> Result<Vec<(PointShape, usize)>> {
    let conj = family.conjugate_mode();
    let q = base.q();
    let (circle_order, ext_degree): (u128, usize) = match family {
        Family::Unitary => {
            let mut m: u128 = 1;
            for _ in 0..2 * nprime + 1 {
                m *= q;
            }
            (m + 1, 2 * nprime + 1)
        }
        _ => {
            let mut m: u128 = 1;
            for _ in 0..nprime {
                m *= q;
            }
            (m + 1, 2 * nprime)
        }
    };
    if circle_order > 20_000 {
        return Err(CoxeterError::GroupTooLarge(circle_order as usize));
    }
    let (ext, emb) = base.extension(ext_degree)?;
    let gen = dl_algebra::sampling::element_of_order(&ext, circle_order);
    let mut shape_counts: Vec<(PointShape, usize)> = vec![];
    let mut x = ext.one();
    for _ in 0..circle_order {
        // coordinates determined by the first one
        let coords: Vec<FqElem> = if conj {
            (0..2 * nprime + 1)
                .map(|b| ext.frobenius(&x, 2 * b))
                .collect()
        } else {
            (0..nprime).map(|b| ext.frobenius(&x, b)).collect()
        };
        // rationality under the coordinate Galois twist
        debug_assert_eq!(family.galois_apply(nprime, &ext, &coords), coords);
        let mut charpoly = Poly::one(&ext);
        for c in &coords {
            charpoly = charpoly.mul(&Poly::lambda_minus(&ext, c));
            if !conj {
                charpoly = charpoly.mul(&Poly::lambda_minus(&ext, &ext.inv(c)));
            }
        }
        if family == Family::OddSO {
            charpoly = charpoly.mul(&Poly::lambda_minus(&ext, &ext.one()));
        }
        let down = charpoly
            .pullback_field(&emb)
            .expect("rational point has base-field characteristic polynomial");
        let shape = classify_shape(family, &down)?;
        match shape_counts.iter_mut().find(|(s, _)| *s == shape) {
            Some((_, c)) => *c += 1,
            None => shape_counts.push((shape, 1)),
        }
        x = ext.mul(&x, &gen);
    }
    shape_counts.sort_by(|a, b| {
        (a.0.q_poly.order_key(), a.0.m).cmp(&(b.0.q_poly.order_key(), b.0.m))
    });
    Ok(shape_counts)
}

fn classify_shape(family: Family, f: &Poly) -> Result<PointShape> {
    let conj = family.conjugate_mode();
    let mut work = f.clone();
    let lambda_one = family == Family::OddSO;
    if lambda_one {
        let lm1 = Poly::lambda_minus(f.field(), &f.field().one());
        if !lm1.divides(&work) {
            return Err(CoxeterError::DerivedCheck(
                "odd orthogonal point without eigenvalue 1".into(),
            ));
        }
        work = work.div_exact(&lm1);
        if work.degree() == 0 {
            // rank-zero degenerate: represent as (lambda - 1)^0 ... not used
            return Ok(PointShape {
                q_poly: lm1,
                m: 0,
                lambda_one,
            });
        }
    }
    let fac = dl_algebra::factor(&work)?;
    if fac.len() != 1 {
        return Err(CoxeterError::DerivedCheck(format!(
            "torus point characteristic polynomial is not a prime power: {f:?}"
        )));
    }
    let (q_poly, m) = fac.into_iter().next().unwrap();
    if !is_self_reciprocal(&q_poly, conj)? {
        return Err(CoxeterError::DerivedCheck(
            "torus point factor is not self-reciprocal".into(),
        ));
    }
    Ok(PointShape {
        q_poly,
        m,
        lambda_one,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_data_validate() {
        for family in Family::ALL {
            for n in family.min_rank()..=3 {
                let datum = family.datum(n);
                let derived = datum.validate_unbranched().unwrap();
                assert_eq!(derived.i_max, family.i_max(n));
            }
        }
    }

    #[test]
    fn unitary_torus_count_cubic() {
        let f3 = FieldCtx::base(3, 1).unwrap();
        let (f9, _) = f3.extension(2).unwrap();
        let pool = dl_algebra::sampling::sr2_irreducibles_via_circle(&f9, 3);
        let q = pool[0].clone();
        let class = TorusClass::new(Family::Unitary, 1, q, 1).unwrap();
        assert_eq!(torus_t_bruteforce(&class).unwrap(), 3);
        assert_eq!(torus_orbit_rational_count(&class).unwrap(), 3);
        assert_eq!(torus_t_closed_form(&class), 3);
    }

    #[test]
    fn even_so_torus_count_quartic() {
        let f3 = FieldCtx::base(3, 1).unwrap();
        let quartics = dl_algebra::sampling::sr_irreducibles(&f3, 4, false);
        assert!(!quartics.is_empty());
        let class = TorusClass::new(Family::EvenSO, 2, quartics[0].clone(), 1).unwrap();
        assert_eq!(torus_t_bruteforce(&class).unwrap(), 2);
        assert_eq!(torus_orbit_rational_count(&class).unwrap(), 2);
    }

    #[test]
    fn odd_so_quadratic_gives_full_degree() {
        let f3 = FieldCtx::base(3, 1).unwrap();
        let q = Poly::from_i64_coeffs(&f3, &[1, 0, 1]); // L^2+1
        let class = TorusClass::new(Family::OddSO, 1, q.clone(), 1).unwrap();
        assert_eq!(torus_t_bruteforce(&class).unwrap(), 2);
        let sp = TorusClass::new(Family::Sp, 1, q, 1).unwrap();
        assert_eq!(torus_t_bruteforce(&sp).unwrap(), 2);
    }

    #[test]
    fn central_classes_count_one() {
        let f3 = FieldCtx::base(3, 1).unwrap();
        let lm1 = Poly::from_i64_coeffs(&f3, &[-1, 1]);
        let lp1 = Poly::from_i64_coeffs(&f3, &[1, 1]);
        let id_sp = TorusClass::new(Family::Sp, 2, lm1.clone(), 4).unwrap();
        assert_eq!(torus_t_bruteforce(&id_sp).unwrap(), 1);
        let neg_sp = TorusClass::new(Family::Sp, 2, lp1.clone(), 4).unwrap();
        assert_eq!(torus_t_bruteforce(&neg_sp).unwrap(), 1);
        // odd orthogonal identity: f = (L-1)^(2n'+1)
        let id_so = TorusClass::new(Family::OddSO, 2, lm1, 4).unwrap();
        assert_eq!(torus_t_bruteforce(&id_so).unwrap(), 1);
        // odd orthogonal eigenvalue -1 classes are rejected
        assert!(TorusClass::new(Family::OddSO, 2, lp1, 4).is_err());
    }

    #[test]
    fn rational_points_even_so_rank_one() {
        let f3 = FieldCtx::base(3, 1).unwrap();
        let shapes = torus_rational_points(Family::EvenSO, 1, &f3).unwrap();
        let total: usize = shapes.iter().map(|(_, c)| c).sum();
        assert_eq!(total, 4); // q + 1
        // shapes: (L-1)^2, (L+1)^2, and L^2+1 with 2 points
        assert_eq!(shapes.len(), 3);
        for (shape, count) in &shapes {
            if shape.q_poly.degree() == 2 {
                assert_eq!(*count, 2);
                assert_eq!(shape.m, 1);
            } else {
                assert_eq!(*count, 1);
                assert_eq!(shape.m, 2);
            }
        }
    }

    #[test]
    fn rational_points_unitary_rank_zero() {
        let f3 = FieldCtx::base(3, 1).unwrap();
        let (f9, _) = f3.extension(2).unwrap();
        let shapes = torus_rational_points(Family::Unitary, 0, &f9).unwrap();
        let total: usize = shapes.iter().map(|(_, c)| c).sum();
        assert_eq!(total, 4); // q + 1 norm-one scalars
        for (shape, count) in &shapes {
            assert_eq!(shape.q_poly.degree(), 1);
            assert_eq!(shape.m, 1);
            assert_eq!(*count, 1);
        }
    }
}
