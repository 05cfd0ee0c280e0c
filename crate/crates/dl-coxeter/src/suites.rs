//! Verification suites for the Weyl-combinatorics layer.

use crate::diagram::SigmaDatum;
use crate::families::{
    torus_rational_points, torus_t_both_routes, torus_t_closed_form, Family, TorusClass,
};
use crate::table;
use crate::weyl::WeylGroup;
use dl_algebra::sampling::{sr2_irreducibles_via_circle, sr_irreducibles};
use dl_algebra::FieldCtx;

pub type SuiteOutcome = Result<usize, String>;

fn validated(datum: &SigmaDatum) -> Result<crate::diagram::UnbranchedData, String> {
    datum
        .validate_unbranched()
        .map_err(|e| format!("validation failed: {e:?}"))
}

/// Every stored table row validates at a few ranks, and the partition /
/// stability / disconnection checks pass (they are part of validation).
pub fn about_sigma(_budget: usize) -> SuiteOutcome {
    let mut cases = 0;
    for row in table::rows() {
        for n in row.min_n..row.min_n + 3 {
            let Some(datum) = row.instantiate(n) else {
                continue;
            };
            if datum.diagram.rank() > 6 {
                continue;
            }
            validated(&datum)?;
            cases += 1;
        }
    }
    for family in Family::ALL {
        for n in family.min_rank()..=4 {
            if family == Family::Unitary && n > 3 {
                continue;
            }
            validated(&family.datum(n))?;
            cases += 1;
        }
    }
    Ok(cases)
}

/// `w_i` lies in `^J W` and is a sigma-twisted Coxeter element of the
/// parabolic spanned by its sigma-support: its reduced word hits each
/// sigma-orbit of the support exactly once.
pub fn wi_twisted_coxeter(_budget: usize) -> SuiteOutcome {
    let mut cases = 0;
    for family in Family::ALL {
        for n in family.min_rank()..=3 {
            let datum = family.datum(n);
            let derived = validated(&datum)?;
            let w = WeylGroup::from_diagram(&datum.diagram).map_err(|e| e.to_string())?;
            let j: Vec<usize> = datum.j.iter().copied().collect();
            let reps = w.minimal_coset_reps(&j);
            for (k, word) in derived.w_words.iter().enumerate() {
                let wi = w.from_word(word);
                if w.length(wi) != word.len() {
                    return Err(format!(
                        "w_{} word not reduced for {} n={n}",
                        k + 1,
                        family.name()
                    ));
                }
                if !reps.contains(&wi) {
                    return Err(format!(
                        "w_{} not a minimal coset representative for {} n={n}",
                        k + 1,
                        family.name()
                    ));
                }
                // support hits each orbit of the flat set exactly once
                let (flat, _, _) = &derived.sigma_sets[k];
                let orbits = datum.diagram.orbits(&datum.sigma);
                let support = w.support(wi);
                let mut sigma_support: std::collections::BTreeSet<usize> = Default::default();
                for &s in &support {
                    let o = orbits.iter().find(|o| o.contains(&s)).unwrap();
                    sigma_support.extend(o.iter().copied());
                }
                if &sigma_support != flat {
                    return Err(format!(
                        "sigma-support of w_{} differs from the flat set",
                        k + 1
                    ));
                }
                for o in orbits.iter().filter(|o| o.iter().all(|x| flat.contains(x))) {
                    let hits = support.iter().filter(|s| o.contains(s)).count();
                    if hits != 1 {
                        return Err(format!(
                            "support of w_{} hits an orbit {hits} times",
                            k + 1
                        ));
                    }
                }
                cases += 1;
            }
        }
    }
    Ok(cases)
}

/// The twisted closure of the top stratum is exactly `{w_1, ..., w_imax}`.
pub fn closure_sets(_budget: usize) -> SuiteOutcome {
    let mut cases = 0;
    for family in Family::ALL {
        for n in family.min_rank()..=3 {
            let datum = family.datum(n);
            let derived = validated(&datum)?;
            let w = WeylGroup::from_diagram(&datum.diagram).map_err(|e| e.to_string())?;
            let j: Vec<usize> = datum.j.iter().copied().collect();
            let w1 = w.from_word(&derived.w_words[0]);
            let mut closure = w.closure_set(&datum.sigma, &j, w1);
            closure.sort_unstable();
            let mut expected: Vec<_> = derived
                .w_words
                .iter()
                .map(|word| w.from_word(word))
                .collect();
            expected.sort_unstable();
            expected.dedup();
            if closure != expected {
                return Err(format!(
                    "closure set mismatch for {} n={n}: got {} elements, expected {}",
                    family.name(),
                    closure.len(),
                    expected.len()
                ));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

/// All realizable torus classes at torus rank `nprime` over the given base.
pub fn realizable_classes(
    family: Family,
    nprime: usize,
    base: &FieldCtx,
) -> Result<Vec<TorusClass>, String> {
    let mut out = vec![];
    if family == Family::Unitary {
        let total = 2 * nprime + 1;
        for d in 1..=total {
            if total % d != 0 {
                continue;
            }
            for q in sr2_irreducibles_via_circle(base, d) {
                out.push(
                    TorusClass::new(family, nprime, q, total / d).map_err(|e| e.to_string())?,
                );
            }
        }
    } else {
        let total = 2 * nprime;
        for d in (2..=total).step_by(2) {
            if total % d != 0 || (total / d) % 2 == 0 {
                continue;
            }
            for q in sr_irreducibles(base, d, false) {
                out.push(
                    TorusClass::new(family, nprime, q, total / d).map_err(|e| e.to_string())?,
                );
            }
        }
        // central classes
        let one = dl_algebra::Poly::from_i64_coeffs(base, &[-1, 1]);
        out.push(TorusClass::new(family, nprime, one, total).map_err(|e| e.to_string())?);
        if family != Family::OddSO {
            let minus = dl_algebra::Poly::from_i64_coeffs(base, &[1, 1]);
            out.push(TorusClass::new(family, nprime, minus, total).map_err(|e| e.to_string())?);
        }
    }
    Ok(out)
}

/// Brute-force torus counts match the closed forms and the independent
/// orbit-rational route, for every realizable class with `nprime <= cap`,
/// over q = 3 and q = 5 (the unitary splitting circles at q = 5 stop at
/// torus rank 2, matching the engine configurations).
pub fn torus_counts(cap: usize) -> SuiteOutcome {
    let cap = cap.clamp(1, 3);
    let mut cases = 0;
    for q in [3u64, 5] {
        let fq = FieldCtx::base(q, 1).unwrap();
        let (fq2, _) = fq.extension(2).unwrap();
        for family in Family::ALL {
        let base = if family == Family::Unitary { &fq2 } else { &fq };
        for nprime in 1..=cap {
            if family == Family::Unitary && q == 5 && nprime > 2 {
                continue;
            }
            for class in realizable_classes(family, nprime, base)? {
                let (brute, orbit) =
                    torus_t_both_routes(&class).map_err(|e| e.to_string())?;
                let closed = torus_t_closed_form(&class);
                if brute != closed {
                    return Err(format!(
                        "count mismatch for {:?} nprime={nprime} Q={:?} m={}: brute {brute}, closed {closed}",
                        family, class.q_poly, class.m
                    ));
                }
                if orbit != closed {
                    return Err(format!(
                        "orbit-rational count mismatch for {:?} nprime={nprime}: {orbit} != {closed}",
                        family
                    ));
                }
                cases += 1;
            }
        }
        }
    }
    Ok(cases)
}

/// Rational torus points realize exactly the shapes the theory allows, and
/// every realizable shape occurs (q = 3, nprime <= 2).
pub fn torus_shapes(_budget: usize) -> SuiteOutcome {
    let f3 = FieldCtx::base(3, 1).unwrap();
    let (f9, _) = f3.extension(2).unwrap();
    let mut cases = 0;
    for family in Family::ALL {
        let base = if family == Family::Unitary { &f9 } else { &f3 };
        let lo = if family == Family::Unitary { 0 } else { 1 };
        for nprime in lo..=2usize {
            let shapes = torus_rational_points(family, nprime, base).map_err(|e| e.to_string())?;
            // necessary conditions on every observed shape
            for (shape, count) in &shapes {
                if *count == 0 {
                    return Err("empty shape bucket".into());
                }
                let d = shape.q_poly.degree();
                let is_linear_pm1 = d == 1 && {
                    let c = shape.q_poly.coeff(0);
                    c == base.one() || c == base.neg(&base.one())
                };
                if family != Family::Unitary && !is_linear_pm1 && shape.m % 2 == 0 {
                    return Err(format!(
                        "observed non-central shape with even multiplicity: {:?}^{}",
                        shape.q_poly, shape.m
                    ));
                }
                cases += 1;
            }
            // every realizable class occurs among the shapes
            for class in realizable_classes(family, nprime, base)? {
                let found = shapes.iter().any(|(s, _)| {
                    s.q_poly == class.q_poly
                        && (s.m == class.m
                            || (family == Family::OddSO
                                && class.is_central_identity()
                                && s.m == class.m))
                });
                if !found {
                    return Err(format!(
                        "realizable shape missing among rational points: {:?}^{} ({:?} nprime={nprime})",
                        class.q_poly, class.m, family
                    ));
                }
            }
        }
    }
    Ok(cases)
}

impl TorusClass {
    fn is_central_identity(&self) -> bool {
        let f = self.q_poly.field();
        self.q_poly.degree() == 1 && self.q_poly.coeff(0) == f.neg(&f.one())
    }
}
