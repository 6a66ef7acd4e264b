mod common;

use common::*;
use precedent_logic::bcl::precedent::{build_2mon, check_2mon};
use precedent_logic::bcl::search::{enumerate_models, ModelClass};
use precedent_logic::bcl::Term;
use precedent_logic::bridge::{canonical_model, theorem1_decide};
use precedent_logic::explain::{
    enumerate_axp, enumerate_cxp, enumerate_prime_implicants, explanations_for, is_implicant,
    is_prime_implicant, minimal_hitting_sets as lib_mhs, ExplanationKind,
};
use precedent_logic::gen::{
    random_case_base, random_full_model, random_signature, random_subset, rng,
};
use precedent_logic::{AtomSet, Forced, Outcome, Signature};
use rand::Rng;

#[test]
fn pairwise_consistency_matches_reason_pairs() {
    let mut rng = rng(101);
    for _ in 0..2000 {
        let atoms = rng.gen_range(1..=6);
        let sig = random_signature(&mut rng, atoms);
        let cb = random_case_base(&mut rng, &sig, 5);
        let cases: Vec<_> = cb.cases().iter().map(raw).collect();
        assert_eq!(
            cb.is_consistent(),
            consistent_by_reason_pairs(Sides::of(&sig), &cases),
            "{cb:?}"
        );
    }
}

#[test]
fn forced_outcomes_and_canonical_model_match_direct_computation() {
    let mut rng = rng(102);
    for _ in 0..300 {
        let atoms = rng.gen_range(1..=5);
        let sig = random_signature(&mut rng, atoms);
        let sides = Sides::of(&sig);
        let cb = random_case_base(&mut rng, &sig, 4);
        let cases: Vec<_> = cb.cases().iter().map(raw).collect();
        let direct = |s: u64| {
            let forces = |x: u8| {
                cases.iter().any(|c| {
                    c.outcome == x
                        && subset(c.reason, s)
                        && subset(s & sides.con(x), c.facts & sides.con(x))
                })
            };
            match (forces(PLAINTIFF), forces(DEFENDANT)) {
                (true, true) => None,
                (true, false) => Some(PLAINTIFF),
                (false, true) => Some(DEFENDANT),
                (false, false) => Some(UNDECIDED),
            }
        };
        let mut any_conflict = false;
        for s in subsets(sides.all()) {
            let expected = direct(s);
            any_conflict |= expected.is_none();
            let got = match cb.forced_outcome(AtomSet::from_bits(s)) {
                Forced::Outcome(x) => Some(code(x)),
                Forced::Conflict => None,
            };
            assert_eq!(got, expected);
        }
        assert_eq!(any_conflict, !cb.is_consistent());
        match canonical_model(&cb).unwrap().model() {
            Some(m) => {
                let f = table(&m);
                for s in subsets(sides.all()) {
                    assert_eq!(Some(f[s as usize]), direct(s));
                }
                assert!(two_way_monotone(sides, &f));
            }
            None => assert!(any_conflict),
        }
    }
}

#[test]
fn theorem1_on_every_small_case_base() {
    for p in 0..=2 {
        let sig = Signature::numbered(p, 2 - p).unwrap();
        let sides = Sides::of(&sig);
        let tables = precedent_respecting_tables(sides);
        let cases = precedent_logic::gen::all_cases(&sig);
        for (i, a) in cases.iter().enumerate() {
            for b in &cases[i..] {
                let cb = precedent_logic::CaseBase::with_cases(sig.clone(), [a.clone(), b.clone()]);
                let raw_cases: Vec<_> = cb.cases().iter().map(raw).collect();
                let brute = translation_satisfiable(sides, &raw_cases, &tables);
                assert_eq!(theorem1_decide(&cb).unwrap(), brute);
                assert_eq!(cb.is_consistent(), brute);
            }
        }
    }
}

#[test]
fn semantic_two_way_monotonicity_matches_the_formula() {
    for atoms in 0..=2 {
        for p in 0..=atoms {
            let sig = Signature::numbered(p, atoms - p).unwrap();
            let f = build_2mon(&sig).unwrap();
            for m in enumerate_models(&sig, ModelClass::Cm).unwrap() {
                let semantic = check_2mon(&m);
                for &s in m.states() {
                    assert_eq!(m.satisfies(s, &f).unwrap(), semantic);
                }
            }
        }
    }
    let sig = Signature::numbered(2, 1).unwrap();
    let f = build_2mon(&sig).unwrap();
    let sides = Sides::of(&sig);
    let mut rng = rng(103);
    for _ in 0..400 {
        let m = random_full_model(&mut rng, &sig).unwrap();
        assert_eq!(
            m.holds_everywhere(&f).unwrap(),
            two_way_monotone(sides, &table(&m))
        );
        assert_eq!(check_2mon(&m), two_way_monotone(sides, &table(&m)));
    }
}

fn term_of(t: RawTerm) -> Term {
    Term::new(AtomSet::from_bits(t.0), AtomSet::from_bits(t.1)).unwrap()
}

#[test]
fn implicants_match_the_term_lattice() {
    let mut rng = rng(104);
    for _ in 0..300 {
        let atoms = rng.gen_range(0..=4);
        let sig = random_signature(&mut rng, atoms);
        let m = random_full_model(&mut rng, &sig).unwrap();
        let f = table(&m);
        let all = sig.all().bits();
        for x in Outcome::ALL {
            let mut expected: Vec<Term> = prime_implicants(&f, all, code(x))
                .into_iter()
                .map(term_of)
                .collect();
            expected.sort_by(Term::canonical_cmp);
            assert_eq!(enumerate_prime_implicants(&m, x).unwrap().terms, expected);
            for t in all_terms(all) {
                assert_eq!(is_implicant(&m, &term_of(t), x), implicant(&f, t, code(x)));
                assert_eq!(
                    is_prime_implicant(&m, &term_of(t), x),
                    prime_implicant(&f, t, code(x))
                );
            }
        }
    }
}

#[test]
fn explanation_families_match_brute_force() {
    let mut rng = rng(105);
    for _ in 0..400 {
        let atoms = rng.gen_range(1..=4);
        let sig = random_signature(&mut rng, atoms);
        let m = random_full_model(&mut rng, &sig).unwrap();
        let f = table(&m);
        let all = sig.all().bits();
        let s = random_subset(&mut rng, sig.all());
        let x = m.decision(s).unwrap();
        let sets = |kind| atom_bits(&explanations_for(&m, kind, s, x).unwrap().atom_sets());
        let mut waxp = weak_abductive(&f, all, s.bits());
        let mut wcxp = weak_contrastive(&f, all, s.bits());
        waxp.sort();
        wcxp.sort();
        assert_eq!(sets(ExplanationKind::WAXp), waxp);
        assert_eq!(sets(ExplanationKind::WCXp), wcxp);
        assert_eq!(
            atom_bits(&enumerate_axp(&m, s).unwrap().atom_sets()),
            subset_minimal(&waxp)
        );
        assert_eq!(
            atom_bits(&enumerate_cxp(&m, s).unwrap().atom_sets()),
            subset_minimal(&wcxp)
        );
    }
}

#[test]
fn hitting_sets_match_brute_force() {
    let mut rng = rng(106);
    for _ in 0..500 {
        let n = rng.gen_range(0..=5);
        let universe = AtomSet::first(n);
        let family: Vec<AtomSet> = (0..rng.gen_range(0..4))
            .map(|_| random_subset(&mut rng, universe))
            .collect();
        let raw_family: Vec<u64> = family.iter().map(|s| s.bits()).collect();
        assert_eq!(
            atom_bits(&lib_mhs(&family, universe)),
            minimal_hitting_sets(&raw_family, universe.bits())
        );
    }
}
