use hog_wasm::demo;

fn source(name: &str) -> String {
    demo::builtin_source(name).unwrap()
}

#[test]
fn every_builtin_has_source_that_solves() {
    let names = demo::builtin_names();
    assert_eq!(names.len(), 9);
    for n in &names {
        let out = demo::solve(&source(n), false, "both").unwrap();
        assert!(out.starts_with("Strategy"), "{n}: {out}");
    }
}

#[test]
fn solve_keynes() {
    let out = demo::solve(&source("voting-keynes"), false, "selection").unwrap();
    assert!(out.contains("Selection equilibria: {AAA, ABB, BAA, BBB}"));
    assert!(!out.contains("Quantifier equilibria"));
    let json = demo::solve(&source("voting-keynes"), true, "both").unwrap();
    assert!(json.contains("\"schema_version\": 1"));
}

#[test]
fn analyze_matching_pennies() {
    let out = demo::analyze(&source("matching-pennies")).unwrap();
    assert_eq!(out.matches("closed: no").count(), 2);
}

#[test]
fn explain_bba() {
    let out = demo::explain_profile(&source("voting-keynes"), "B, B, A").unwrap();
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "BBA -> B");
    assert_eq!(
        lines[1],
        "J1: context {A->A, B->B}, good moves {A}, plays B: defects"
    );
    assert!(lines[2].ends_with("stays"));
    assert_eq!(
        lines[3],
        "J3: context {A->B, B->B}, good moves {B}, plays A: defects (selection only)"
    );
}

#[test]
fn errors_are_text() {
    let err = demo::solve("game g\nmoves J1 = { A }\n", false, "both").unwrap_err();
    assert!(err.contains("MissingDefinition"), "{err}");
    assert!(demo::solve(&source("voting-keynes"), false, "nash").is_err());
    assert!(demo::explain_profile(&source("voting-keynes"), "A,A").is_err());
    assert!(demo::builtin_source("nope").is_err());
}
