use std::collections::BTreeSet;

use irrtop::theorem_lab::{
    canonical_code, enumerate_posets, find_counterexample, implications, run_implication_suite, space_facts, Expr,
    EXTENDED_FLAGS,
};
use irrtop::{Error, FiniteSpace};

#[test]
fn every_implication_parses_over_the_vocabulary() {
    let imps = implications();
    assert_eq!(imps.len(), 41);
    let names: BTreeSet<&str> = imps.iter().map(|i| i.spec.name).collect();
    assert_eq!(names.len(), imps.len());
}

#[test]
fn suite_is_clean_up_to_four_points() {
    let r = run_implication_suite(4).unwrap();
    assert!(r.passed, "{:?}", r.violations.first());
    assert_eq!(r.spaces_checked, 1 + 3 + 19 + 219);
    assert!(matches!(run_implication_suite(7), Err(Error::TooLarge(7))));
}

#[test]
fn extended_flags_hold_on_a_diamond() {
    let s = irrtop::space::fixtures::diamond();
    let wanted: BTreeSet<&str> = EXTENDED_FLAGS.iter().copied().collect();
    let facts = space_facts(&s, &wanted);
    for f in EXTENDED_FLAGS {
        assert_eq!(facts.flag(f), Some(true), "{f}");
    }
}

#[test]
fn counterexample_search() {
    // finite spaces are sober and C-spaces, so nothing separates them
    assert_eq!(find_counterexample("sober ∧ ¬c_space", 4).unwrap(), None);
    let hit = find_counterexample("sober ∧ star", 3).unwrap().unwrap();
    assert_eq!(hit.space.points.len(), 1);
    assert_eq!(hit.flags.get("sober"), Some(&true));
    assert!(matches!(
        find_counterexample("sober ∧ nonsense", 2),
        Err(Error::BadQuery(_))
    ));
}

#[test]
fn unlabeled_representatives_are_distinct_classes() {
    for n in 1..=5 {
        let reps = enumerate_posets(n, true).unwrap();
        let codes: BTreeSet<u64> = reps.iter().map(canonical_code).collect();
        assert_eq!(codes.len(), reps.len());
        let labeled: BTreeSet<u64> = enumerate_posets(n, false).unwrap().iter().map(canonical_code).collect();
        assert_eq!(labeled, codes);
    }
}

#[test]
fn expression_spellings_agree() {
    let a = Expr::parse("sup-sober and not c-space implies oplus").unwrap();
    let b = Expr::parse("sup_sober ∧ ¬c_space ⇒ oplus").unwrap();
    let c = Expr::parse("sup_sober && !c_space -> oplus").unwrap();
    assert_eq!(a, b);
    assert_eq!(b, c);
    let s = FiniteSpace::alexandroff(&irrtop::Poset::chain(2));
    let facts = space_facts(&s, &a.flags());
    assert_eq!(a.eval(&|f| facts.flag(f)), Some(true));
}
