mod common;

use precedent_logic::bcl::formula::Formula;
use precedent_logic::bcl::parse::{parse_formula, print_formula, ParseErrorKind};
use precedent_logic::{AtomSet, Outcome, Signature};
use proptest::prelude::*;

fn sig() -> Signature {
    Signature::numbered(2, 2).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn print_then_parse_is_identity(f in common::formula_strategy(4)) {
        let sig = sig();
        let text = print_formula(&f, &sig);
        let back = parse_formula(&text, &sig);
        prop_assert_eq!(back.as_ref().ok(), Some(&f), "{}", text);
        prop_assert_eq!(print_formula(&back.unwrap(), &sig), text);
    }
}

#[test]
fn greek_aliases_parse_to_the_same_formula() {
    let sig = sig();
    let ascii = parse_formula("[pi1, delta2](pi2 -> ~t(?))", &sig).unwrap();
    let greek = parse_formula("[π1, δ2](π2 -> ~t(?))", &sig).unwrap();
    assert_eq!(ascii, greek);
    assert_eq!(
        ascii,
        Formula::boxed(
            sig.set_of(&["pi1", "delta2"]).unwrap(),
            Formula::implies(
                Formula::atom(1),
                Formula::not(Formula::t(Outcome::Undecided))
            )
        )
    );
}

#[test]
fn diamond_over_the_empty_set() {
    let sig = sig();
    assert_eq!(
        parse_formula("<> t(0)", &sig).unwrap(),
        Formula::diamond(AtomSet::EMPTY, Formula::t(Outcome::Defendant))
    );
    assert_eq!(
        parse_formula("<pi1>t(0)", &sig).unwrap(),
        Formula::diamond(AtomSet::singleton(0), Formula::t(Outcome::Defendant))
    );
}

#[test]
fn errors_carry_columns() {
    let sig = sig();
    let cases: &[(&str, usize)] = &[
        ("pi1 & ", 7),
        ("pi1 $ pi2", 5),
        ("t(2)", 1),
        ("t(1", 1),
        ("(pi1 & pi2", 11),
        ("[pi1, zeta] pi1", 7),
        ("pi1 pi2", 5),
        ("", 1),
        ("~", 2),
        ("[pi1 pi2", 6),
    ];
    for &(text, column) in cases {
        let err = parse_formula(text, &sig).unwrap_err();
        assert_eq!(err.column, column, "{text:?}: {err}");
        assert!(
            err.to_string().starts_with(&format!("column {column}:")),
            "{err}"
        );
    }
    let unknown = parse_formula("pi1 & zeta", &sig).unwrap_err();
    assert_eq!(unknown.kind, ParseErrorKind::UnknownAtom("zeta".into()));
}
