//! Execution of the individual subcommands.

use crate::{padic_precision, Command, OutputFormat, RunError, RunResult};
use dl_algebra::{format_poly, FieldCtx, Poly};
use dl_classical::{standard_space, SpaceKind};
use dl_padic::{PadicCtx, PMatrix};
use dl_trace::{trace_closed_form, trace_engine, TorusCountMode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

fn usage(msg: impl Into<String>) -> RunError {
    RunError::Usage(msg.into())
}

fn precondition(msg: impl Into<String>) -> RunError {
    RunError::Precondition(msg.into())
}

fn parse_poly_arg(spec: &str, conjugate: bool) -> Result<(FieldCtx, Poly), RunError> {
    let (base, _) = dl_algebra::parse_poly(spec).map_err(|e| usage(e.to_string()))?;
    if !conjugate {
        return dl_algebra::parse_poly(spec).map_err(|e| usage(e.to_string()));
    }
    if base.e() % 2 != 0 {
        return Err(usage(format!(
            "conjugate mode needs an even extension degree, got {}",
            base.e()
        )));
    }
    let half = FieldCtx::base(base.p(), base.e() / 2).map_err(|e| usage(e.to_string()))?;
    let (quad, _) = half.extension(2).map_err(|e| usage(e.to_string()))?;
    let poly = dl_algebra::format::parse_poly_in(&quad, spec).map_err(|e| usage(e.to_string()))?;
    Ok((quad, poly))
}

#[derive(Serialize)]
struct FactorReport {
    schema: u32,
    input: String,
    conjugate: bool,
    self_reciprocal: bool,
    /// The reciprocal polynomial, shown when the input is not
    /// self-reciprocal (its factors pair with those of the input).
    reciprocal: Option<String>,
    factors: Vec<(String, usize)>,
    sr_factors: Vec<(String, usize)>,
    nsr_pairs: Vec<(String, String, usize)>,
    script_m: Option<u64>,
}

pub fn run(cmd: Command) -> RunResult {
    match cmd {
        Command::Factor {
            poly,
            conjugate,
            format,
        } => run_factor(&poly, conjugate, format),
        Command::Trace {
            kind,
            n,
            q,
            charpoly,
            random,
            seed,
            matrix,
            oracle,
            format,
        } => run_trace(&kind, n, q, charpoly, random, seed, matrix, oracle, format),
        Command::IntAfl {
            charpoly,
            synthesize,
            matrix,
            u,
            form,
            q,
            seed,
            residue_degree,
            filler_pairs,
            format,
        } => run_int_afl(
            charpoly, synthesize, matrix, u, form, q, seed, residue_degree, filler_pairs, format,
        ),
        Command::IntGspin {
            charpoly,
            check_determinant,
            q,
            seed,
            reflections,
            format,
        } => run_int_gspin(charpoly, check_determinant, q, seed, reflections, format),
        Command::Coxeter {
            family,
            n,
            datum,
            closure,
            format,
        } => run_coxeter(family, n, datum, closure, format),
        Command::Verify { suite, budget } => crate::verify::run_verify(&suite, &budget),
    }
}

fn run_factor(spec: &str, conjugate: bool, format: OutputFormat) -> RunResult {
    let (_field, poly) = parse_poly_arg(spec, conjugate)?;
    if poly.is_zero() {
        return Err(usage("cannot factor the zero polynomial"));
    }
    let factors = dl_algebra::factor(&poly).map_err(|e| usage(e.to_string()))?;
    let monic = poly.monic();
    let sr = dl_algebra::reciprocal::is_self_reciprocal(&monic, conjugate)
        .map_err(|e| precondition(e.to_string()))?;
    let recip = if sr {
        None
    } else {
        Some(format_poly(
            &dl_algebra::reciprocal(&monic, conjugate).map_err(|e| precondition(e.to_string()))?,
        ))
    };
    let mut report = FactorReport {
        schema: 1,
        input: format_poly(&poly),
        conjugate,
        self_reciprocal: sr,
        reciprocal: recip,
        factors: factors
            .iter()
            .map(|(q, m)| (format_poly(q), *m))
            .collect(),
        sr_factors: vec![],
        nsr_pairs: vec![],
        script_m: None,
    };
    if sr {
        let cls = dl_algebra::sr_classify(&monic, conjugate)
            .map_err(|e| precondition(e.to_string()))?;
        report.sr_factors = cls
            .sr
            .iter()
            .map(|(q, m)| (format_poly(q), *m))
            .collect();
        report.nsr_pairs = cls
            .nsr_pairs
            .iter()
            .map(|(q, qs, m)| (format_poly(q), format_poly(qs), *m))
            .collect();
        report.script_m = Some(cls.script_m());
    }
    match format {
        OutputFormat::Json => Ok(serde_json::to_string_pretty(&report).unwrap()),
        OutputFormat::Text => {
            let mut out = format!("input: {}\n", report.input);
            for (q, m) in &report.factors {
                out += &format!("  factor {q} ^ {m}\n");
            }
            out += &format!("self-reciprocal: {}\n", report.self_reciprocal);
            if let Some(m) = report.script_m {
                out += &format!("pair product M(f) = {m}\n");
            }
            Ok(out)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run_trace(
    kind_name: &str,
    n: usize,
    q: u64,
    charpoly: Option<String>,
    random: bool,
    seed: u64,
    matrix: Option<String>,
    oracle: bool,
    format: OutputFormat,
) -> RunResult {
    let kind = SpaceKind::from_name(kind_name)
        .ok_or_else(|| usage(format!("unknown kind {kind_name:?} (so-even, so-odd, sp, u)")))?;
    let base = FieldCtx::base(q, 1).map_err(|e| usage(e.to_string()))?;
    let space = standard_space(kind, n, &base).map_err(|e| precondition(e.to_string()))?;

    if let Some(spec) = charpoly {
        // closed form only
        let f = dl_algebra::format::parse_poly_in(&space.field, &spec)
            .map_err(|e| usage(e.to_string()))?;
        let closed = trace_closed_form(kind, &f).map_err(|e| precondition(e.to_string()))?;
        #[derive(Serialize)]
        struct ClosedReport {
            schema: u32,
            family: String,
            f: String,
            value: u64,
            diagnosis: String,
            script_m: u64,
        }
        let rep = ClosedReport {
            schema: 1,
            family: kind.name().into(),
            f: format_poly(&f),
            value: closed.value,
            diagnosis: closed.case_name(),
            script_m: closed.script_m,
        };
        return Ok(match format {
            OutputFormat::Json => serde_json::to_string_pretty(&rep).unwrap(),
            OutputFormat::Text => format!(
                "closed form: {} ({})\n",
                rep.value, rep.diagnosis
            ),
        });
    }

    let g = if let Some(path) = matrix {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| usage(format!("cannot read {path}: {e}")))?;
        let m = dl_classical::format::parse_matrix(&space.field, &text)
            .map_err(|e| usage(e.to_string()))?;
        if !space.is_isometry(&m) {
            return Err(precondition("matrix is not an isometry of the space"));
        }
        m
    } else if random {
        let mut found = None;
        for s in 0..20_000u64 {
            let cand = space.random_isometry(seed.wrapping_add(s));
            if dl_classical::is_gl_regular(&cand) {
                found = Some(cand);
                break;
            }
        }
        found.ok_or_else(|| precondition("no regular isometry found from this seed"))?
    } else {
        return Err(usage(
            "provide --charpoly, --random, or --matrix as the element source",
        ));
    };

    let report = trace_engine(&space, &g, TorusCountMode::ClosedForm)
        .map_err(|e| precondition(e.to_string()))?;
    if oracle {
        let brute = trace_engine(&space, &g, TorusCountMode::BruteForce)
            .map_err(|e| precondition(e.to_string()))?;
        if brute.total != report.total || !report.agreement() {
            return Err(RunError::Verification(format!(
                "oracle disagreement: engine {} brute {} closed {}",
                report.total, brute.total, report.closed_form_value
            )));
        }
    } else if !report.agreement() {
        return Err(RunError::Verification(format!(
            "engine total {} differs from the closed form {}",
            report.total, report.closed_form_value
        )));
    }
    Ok(match format {
        OutputFormat::Json => report.to_json(),
        OutputFormat::Text => {
            let mut out = format!(
                "f_g = {}\ntotal = {} ({})\n",
                report.f_g, report.total, report.status
            );
            for row in &report.strata {
                out += &format!(
                    "  stratum {}: {} x {} = {}  [{}]\n",
                    row.i, row.witnesses, row.torus_count, row.contribution, row.shape
                );
            }
            out
        }
    })
}

fn map_padic_err(e: dl_padic::PadicError) -> RunError {
    match e.stage_exit_code() {
        4 => RunError::Precision(e.to_string()),
        _ => RunError::Precondition(e.to_string()),
    }
}

#[allow(clippy::too_many_arguments)]
fn run_int_afl(
    charpoly: Option<String>,
    synthesize: bool,
    matrix: Option<String>,
    u_path: Option<String>,
    form: Option<String>,
    q: u64,
    seed: u64,
    residue_degree: usize,
    filler_pairs: usize,
    format: OutputFormat,
) -> RunResult {
    let ctx = PadicCtx::unitary(q, 1, padic_precision()).map_err(map_padic_err)?;
    let rf = ctx.residue_field().clone();
    if let (Some(mp), Some(up), Some(fp)) = (&matrix, &u_path, &form) {
        let read = |path: &str| {
            std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))
        };
        let g = dl_padic::format::parse_matrix(&ctx, &read(mp)?).map_err(map_padic_err)?;
        let u = dl_padic::format::parse_vector(&ctx, &read(up)?).map_err(map_padic_err)?;
        let gram = dl_padic::format::parse_matrix(&ctx, &read(fp)?).map_err(map_padic_err)?;
        let report = dl_padic::afl_pipeline(&ctx, &g, &u, &gram).map_err(map_padic_err)?;
        return Ok(match format {
            OutputFormat::Json => report.to_json(),
            OutputFormat::Text => format!(
                "inv = {:?}, dim V = {}, int = {:?}, agreement = {}\n",
                report.inv, report.dim_v, report.int, report.agreement
            ),
        });
    }
    if let Some(spec) = charpoly {
        let f = dl_algebra::format::parse_poly_in(&rf, &spec).map_err(|e| usage(e.to_string()))?;
        let int = dl_padic::afl_int(&f).map_err(map_padic_err)?;
        let cross = trace_closed_form(SpaceKind::Unitary, &f)
            .map_err(|e| precondition(e.to_string()))?;
        #[derive(Serialize)]
        struct IntReport {
            schema: u32,
            f: String,
            int: dl_padic::IntersectionValue,
            closed_form_cross: u64,
        }
        let rep = IntReport {
            schema: 1,
            f: format_poly(&f),
            int,
            closed_form_cross: cross.value,
        };
        return Ok(match format {
            OutputFormat::Json => serde_json::to_string_pretty(&rep).unwrap(),
            OutputFormat::Text => format!("{:?} (cross-check {})\n", rep.int, rep.closed_form_cross),
        });
    }
    if !synthesize {
        return Err(usage("provide --charpoly or --synthesize"));
    }
    if residue_degree % 2 == 0 {
        return Err(usage("the residue block degree must be odd"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool = dl_algebra::sampling::sr2_irreducibles_via_circle(&rf, residue_degree);
    let fbar = pool[rng.gen_range(0..pool.len())].clone();
    let inst = dl_padic::synthesize_minuscule(&ctx, &fbar, filler_pairs, &mut rng)
        .map_err(map_padic_err)?;
    let report = dl_padic::afl_pipeline(&ctx, &inst.g, &inst.u, &inst.gram).map_err(map_padic_err)?;
    Ok(match format {
        OutputFormat::Json => report.to_json(),
        OutputFormat::Text => format!(
            "inv = {:?}, dim V = {}, int = {:?}, agreement = {}\n",
            report.inv, report.dim_v, report.int, report.agreement
        ),
    })
}

fn run_int_gspin(
    charpoly: Option<String>,
    check_determinant: bool,
    q: u64,
    seed: u64,
    reflections: usize,
    format: OutputFormat,
) -> RunResult {
    if let Some(spec) = charpoly {
        let (_f_field, f) = dl_algebra::parse_poly(&spec).map_err(|e| usage(e.to_string()))?;
        let int = dl_padic::gspin_int(&f).map_err(map_padic_err)?;
        #[derive(Serialize)]
        struct IntReport {
            schema: u32,
            f: String,
            int: dl_padic::IntersectionValue,
        }
        let rep = IntReport {
            schema: 1,
            f: format_poly(&f),
            int,
        };
        return Ok(match format {
            OutputFormat::Json => serde_json::to_string_pretty(&rep).unwrap(),
            OutputFormat::Text => format!("{:?}\n", rep.int),
        });
    }
    if !check_determinant {
        return Err(usage("provide --charpoly or --check-determinant"));
    }
    let ctx = PadicCtx::orthogonal(q, 1, padic_precision()).map_err(map_padic_err)?;
    let rf = ctx.residue_field().clone();
    let elems = rf.enumerate();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = 5;
    let mut gram = PMatrix::identity(&ctx, n);
    for i in 2..n {
        gram.set(i, i, ctx.pi_pow(1));
    }
    let mut vs = vec![];
    while vs.len() < reflections {
        let v: Vec<dl_padic::PadicElem> = (0..n)
            .map(|_| {
                let r = elems[rng.gen_range(0..elems.len())].clone();
                ctx.random_lift(&r, &mut rng)
            })
            .collect();
        let minv = v
            .iter()
            .filter_map(|x| ctx.valuation(x).ok())
            .min()
            .unwrap_or(usize::MAX);
        if minv == usize::MAX {
            continue;
        }
        let v: Vec<dl_padic::PadicElem> = v
            .iter()
            .map(|x| ctx.shift_down(x, minv).unwrap())
            .collect();
        if dl_padic::reflections::certified_norm_valuation(&ctx, &gram, &v).is_ok() {
            vs.push(v);
        }
    }
    let check = dl_padic::residual_determinant_check(&ctx, &gram, &vs).map_err(map_padic_err)?;
    #[derive(Serialize)]
    struct DetReport {
        schema: u32,
        reflections: usize,
        valuation_one_count: usize,
        det_is_one: bool,
        parity_law_holds: bool,
    }
    let rep = DetReport {
        schema: 1,
        reflections,
        valuation_one_count: check.valuation_one_count,
        det_is_one: check.det_is_one,
        parity_law_holds: check.parity_law_holds,
    };
    if !rep.parity_law_holds {
        return Err(RunError::Verification("determinant parity law violated".into()));
    }
    Ok(match format {
        OutputFormat::Json => serde_json::to_string_pretty(&rep).unwrap(),
        OutputFormat::Text => format!(
            "{} reflections, {} of valuation one, det = 1: {}\n",
            rep.reflections, rep.valuation_one_count, rep.det_is_one
        ),
    })
}

fn run_coxeter(
    family: Option<String>,
    n: Option<usize>,
    datum_path: Option<String>,
    closure: bool,
    format: OutputFormat,
) -> RunResult {
    let datum = if let Some(name) = family {
        let fam = dl_coxeter::Family::from_name(&name)
            .ok_or_else(|| usage(format!("unknown family {name:?}")))?;
        let n = n.ok_or_else(|| usage("--family needs --n"))?;
        if n < fam.min_rank() {
            return Err(precondition(format!(
                "rank {n} below the minimum for {name}"
            )));
        }
        fam.datum(n)
    } else if let Some(path) = datum_path {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| usage(format!("cannot read {path}: {e}")))?;
        dl_coxeter::format::parse_datum(&text).map_err(|e| usage(e.to_string()))?
    } else {
        return Err(usage("provide --family NAME --n N or --datum FILE"));
    };
    let derived = datum
        .validate_unbranched()
        .map_err(|errs| {
            precondition(
                errs.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join("; "),
            )
        })?;
    let names = datum.diagram.names();
    let word_names = |word: &[usize]| -> Vec<String> {
        word.iter().map(|&i| names[i].clone()).collect()
    };
    #[derive(Serialize)]
    struct CoxeterReport {
        schema: u32,
        nodes: Vec<String>,
        sigma: Vec<String>,
        j: Vec<String>,
        l: Vec<String>,
        i_max: usize,
        w_words: Vec<Vec<String>>,
        sigma_sets: Vec<(Vec<String>, Vec<String>, Vec<String>)>,
        closure_matches: Option<bool>,
    }
    let name_set = |s: &std::collections::BTreeSet<usize>| -> Vec<String> {
        s.iter().map(|&i| names[i].clone()).collect()
    };
    let mut report = CoxeterReport {
        schema: 1,
        nodes: names.to_vec(),
        sigma: datum
            .sigma
            .iter()
            .map(|&i| names[i].clone())
            .collect(),
        j: datum.j.iter().map(|&i| names[i].clone()).collect(),
        l: datum.l_nodes.iter().map(|&i| names[i].clone()).collect(),
        i_max: derived.i_max,
        w_words: derived.w_words.iter().map(|w| word_names(w)).collect(),
        sigma_sets: derived
            .sigma_sets
            .iter()
            .map(|(a, b, c)| (name_set(a), name_set(b), name_set(c)))
            .collect(),
        closure_matches: None,
    };
    if closure {
        let w = dl_coxeter::WeylGroup::from_diagram(&datum.diagram)
            .map_err(|e| precondition(e.to_string()))?;
        let j: Vec<usize> = datum.j.iter().copied().collect();
        let w1 = w.from_word(&derived.w_words[0]);
        let mut set = w.closure_set(&datum.sigma, &j, w1);
        set.sort_unstable();
        let mut expected: Vec<_> = derived.w_words.iter().map(|x| w.from_word(x)).collect();
        expected.sort_unstable();
        expected.dedup();
        report.closure_matches = Some(set == expected);
        if set != expected {
            return Err(RunError::Verification(
                "closure set differs from the stratification list".into(),
            ));
        }
    }
    Ok(match format {
        OutputFormat::Json => serde_json::to_string_pretty(&report).unwrap(),
        OutputFormat::Text => {
            let mut out = format!("i_max = {}\n", report.i_max);
            for (k, word) in report.w_words.iter().enumerate() {
                out += &format!("  w_{} = {}\n", k + 1, if word.is_empty() { "1".into() } else { word.join(" ") });
            }
            out
        }
    })
}
