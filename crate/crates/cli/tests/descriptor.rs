use stable_closure::Error;
use stable_closure_cli::descriptor::{parse_input, Job};
use stable_closure_cli::{exit_code, run_text};

const ONE: &str = r#"{"field": "Q", "algebra": {"dim": 1, "unit": [1], "mult": [[[[0, 1]]]]}}"#;

#[test]
fn minimal_algebra() {
    let j = Job::build(&parse_input(ONE).unwrap()).unwrap();
    assert_eq!(j.extension.dim(), 1);
    let o = run_text("prime", ONE, None, None).unwrap();
    assert_eq!(o.report["prime"], true);
}

#[test]
fn composite_characteristic() {
    let text = ONE.replace("\"Q\"", "\"F_4\"");
    let err = Job::build(&parse_input(&text).unwrap()).unwrap_err();
    assert!(matches!(err, Error::NotPrime(4)));
    assert!(err.to_string().contains("p must be prime"));
}

#[test]
fn smash_without_hopf() {
    let r = run_text("smash", ONE, None, None);
    assert!(matches!(r, Err(Error::Dependency(_))));
    assert_eq!(exit_code(&r), 2);
}

#[test]
fn unknown_key_rejected() {
    let text = ONE.replace("\"unit\"", "\"colour\": 1, \"unit\"");
    match parse_input(&text).unwrap_err() {
        Error::Parse { path, message } => {
            assert!(message.contains("colour"), "{message}");
            assert!(!path.is_empty());
        }
        other => panic!("{other}"),
    }
}

#[test]
fn syntax_error_has_line() {
    let err = parse_input("{\n  \"field\": \"Q\",\n  \"algebra\": \n}").unwrap_err();
    match err {
        Error::Parse { path, .. } => assert!(path.contains("line 4"), "{path}"),
        other => panic!("{other}"),
    }
}

#[test]
fn pointer_paths_for_bad_scalars() {
    let text = ONE.replace("[[[[0, 1]]]]", "[[[[0, \"1/0\"]]]]");
    let err = Job::build(&parse_input(&text).unwrap()).unwrap_err();
    match err {
        Error::Parse { path, .. } => assert_eq!(path, "/algebra/mult/0/0/0/1"),
        other => panic!("{other}"),
    }
    let text = ONE.replace("\"unit\": [1]", "\"unit\": [1, 0]");
    match Job::build(&parse_input(&text).unwrap()).unwrap_err() {
        Error::Parse { path, .. } => assert_eq!(path, "/algebra/unit"),
        other => panic!("{other}"),
    }
}

#[test]
fn non_associative_table() {
    // unit e0; e1 e1 = e2, e1 e2 = 0, e2 e1 = e1: (e1 e1) e1 != e1 (e1 e1)
    let text = r#"{"field": "Q", "algebra": {"dim": 3, "unit": [1, 0, 0],
        "mult": [[[[0, 1]], [[1, 1]], [[2, 1]]],
                 [[[1, 1]], [[2, 1]], []],
                 [[[2, 1]], [[1, 1]], []]]}}"#;
    let err = Job::build(&parse_input(text).unwrap()).unwrap_err();
    assert!(matches!(err, Error::Associativity { .. }), "{err}");
    let r = run_text("verify", text, None, None);
    assert_eq!(exit_code(&r), 2);
}

#[test]
fn radical_beyond_enumeration_regime() {
    // F_2^20 with a nilpotent shift: every radical strategy is out of range
    let n = 20;
    let mut mult = vec![vec![Vec::<(usize, i64)>::new(); n]; n];
    for i in 0..n {
        mult[0][i] = vec![(i, 1)];
        mult[i][0] = vec![(i, 1)];
    }
    let d = serde_json::json!({
        "field": "F_2",
        "algebra": {"dim": n, "unit": (0..n).map(|i| (i == 0) as i64).collect::<Vec<_>>(), "mult": mult},
        "extension": {"generators": "left"},
    });
    for radical in [None, Some("element-enumeration"), Some("trace-form"), Some("composition-series")] {
        let r = run_text("semiprime", &d.to_string(), radical, None);
        assert!(r.as_ref().is_err_and(|e| e.is_regime()), "{radical:?}: {:?}", r.as_ref().err());
        assert_eq!(exit_code(&r), 2);
    }
}
