//! End-to-end checks of the command layer: determinism, exit-code mapping,
//! and the pi-adic file roundtrip.

use dl_cli::commands::run;
use dl_cli::{Command, OutputFormat, RunError};

fn factor_cmd(poly: &str) -> Command {
    Command::Factor {
        poly: poly.into(),
        conjugate: false,
        format: OutputFormat::Json,
    }
}

#[test]
fn identical_invocations_are_bit_identical() {
    let a = run(factor_cmd("5^1:2,3,0,1,1,4,1")).unwrap();
    let b = run(factor_cmd("5^1:2,3,0,1,1,4,1")).unwrap();
    assert_eq!(a, b);

    let trace = |seed| {
        run(Command::Trace {
            kind: "sp".into(),
            n: 2,
            q: 3,
            charpoly: None,
            random: true,
            seed,
            matrix: None,
            oracle: false,
            format: OutputFormat::Json,
        })
        .unwrap()
    };
    assert_eq!(trace(11), trace(11));
    assert_ne!(trace(11), trace(12));
}

#[test]
fn parse_errors_are_usage_errors() {
    let err = run(factor_cmd("3^1:9,1")).unwrap_err();
    assert_eq!(err.code(), 2);
    let err = run(factor_cmd("nonsense")).unwrap_err();
    assert_eq!(err.code(), 2);
}

#[test]
fn wrong_parity_is_a_precondition_error() {
    let err = run(Command::Trace {
        kind: "sp".into(),
        n: 1,
        q: 3,
        charpoly: Some("3^1:2,0,0,1".into()), // odd degree in an even-dimensional kind
        random: false,
        seed: 0,
        matrix: None,
        oracle: false,
        format: OutputFormat::Json,
    })
    .unwrap_err();
    assert!(matches!(err, RunError::Precondition(_)));
    assert_eq!(err.code(), 3);
}

#[test]
fn named_closed_form_values_via_cli() {
    let out = run(Command::Trace {
        kind: "sp".into(),
        n: 1,
        q: 3,
        charpoly: Some("3^1:1,1,1".into()),
        random: false,
        seed: 0,
        matrix: None,
        oracle: false,
        format: OutputFormat::Json,
    })
    .unwrap();
    assert!(out.contains("\"value\": 2"));
    let out = run(Command::Trace {
        kind: "so-odd".into(),
        n: 1,
        q: 3,
        charpoly: Some("3^1:2,0,0,1".into()),
        random: false,
        seed: 0,
        matrix: None,
        oracle: false,
        format: OutputFormat::Json,
    })
    .unwrap();
    assert!(out.contains("\"value\": 2"));
}

#[test]
fn verify_suite_smoke() {
    run(Command::Verify {
        suite: "closure-sets".into(),
        budget: "small".into(),
    })
    .unwrap();
    let err = run(Command::Verify {
        suite: "no-such-suite".into(),
        budget: "small".into(),
    })
    .unwrap_err();
    assert_eq!(err.code(), 2);
}

#[test]
fn afl_pipeline_roundtrips_through_files() {
    use dl_padic::{format, PadicCtx};
    use rand::SeedableRng;
    let ctx = PadicCtx::unitary(3, 1, 32).unwrap();
    let rf = ctx.residue_field().clone();
    let fbar = dl_algebra::sampling::sr2_irreducibles_via_circle(&rf, 3)[0].clone();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    let inst = dl_padic::synthesize_minuscule(&ctx, &fbar, 1, &mut rng).unwrap();
    let dir = std::env::temp_dir().join("dltrace-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let write = |name: &str, content: String| {
        let path = dir.join(name);
        std::fs::write(&path, content).unwrap();
        path.to_string_lossy().into_owned()
    };
    let mpath = write("g.mat", format::format_matrix(&ctx, &inst.g));
    let upath = write(
        "u.vec",
        inst.u
            .iter()
            .map(|x| format::format_elem(&ctx, x))
            .collect::<Vec<_>>()
            .join(" "),
    );
    let fpath = write("form.mat", format::format_matrix(&ctx, &inst.gram));
    let out = run(Command::IntAfl {
        charpoly: None,
        synthesize: false,
        matrix: Some(mpath),
        u: Some(upath),
        form: Some(fpath),
        q: 3,
        seed: 0,
        residue_degree: 3,
        filler_pairs: 1,
        format: OutputFormat::Json,
    })
    .unwrap();
    assert!(out.contains("\"agreement\": true"));
    assert!(out.contains("\"Length\": 3"));
}

#[test]
fn trace_accepts_a_matrix_file() {
    let f3 = dl_algebra::FieldCtx::base(3, 1).unwrap();
    let space = dl_classical::standard_space(dl_classical::SpaceKind::Sp, 1, &f3).unwrap();
    let g = (0..200u64)
        .map(|s| space.random_isometry(s))
        .find(dl_classical::is_gl_regular)
        .unwrap();
    let dir = std::env::temp_dir().join("dltrace-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("elem.mat");
    std::fs::write(&path, dl_classical::format::format_matrix(&g)).unwrap();
    let out = run(Command::Trace {
        kind: "sp".into(),
        n: 1,
        q: 3,
        charpoly: None,
        random: false,
        seed: 0,
        matrix: Some(path.to_string_lossy().into_owned()),
        oracle: true,
        format: OutputFormat::Json,
    })
    .unwrap();
    assert!(out.contains("\"schema\": 1"));
}

#[test]
fn coxeter_accepts_a_datum_file() {
    let dir = std::env::temp_dir().join("dltrace-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("datum.txt");
    std::fs::write(
        &path,
        "nodes: s1 s2\nedges: s1-s2\nsigma: (s1 s2)\nj: s2\nl: s1\n",
    )
    .unwrap();
    let out = run(Command::Coxeter {
        family: None,
        n: None,
        datum: Some(path.to_string_lossy().into_owned()),
        closure: true,
        format: OutputFormat::Json,
    })
    .unwrap();
    assert!(out.contains("\"closure_matches\": true"));
}
