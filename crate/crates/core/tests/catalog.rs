use irrtop::catalog::{catalog_get, catalog_properties, catalog_way_below, q, CatalogName, CatalogPoint as P};
use irrtop::convergence::{
    catalog_irr_converges, catalog_topological_converges, catalog_way_below_convergence_char, CatalogNet, Generator,
    NetJson, TailRule,
};
use irrtop::si::{si_iterate, Stage};
use irrtop::theorem_lab::catalog_suite;
use irrtop::Error;

#[test]
fn property_matrix() {
    let row = |n| {
        let r = catalog_properties(n);
        (r.sober, r.sup_sober, r.irr_continuous, r.oplus, r.c_space)
    };
    assert_eq!(row(CatalogName::CofiniteNat), (false, true, true, false, false));
    assert!(!row(CatalogName::RationalScott).0);
    assert!(row(CatalogName::RationalScott).1 && row(CatalogName::RationalScott).2);
    assert!(row(CatalogName::PosetT).4 && !row(CatalogName::PosetT).2);
    for n in CatalogName::ALL {
        assert!(catalog_properties(n).is_consistent(), "{n:?}");
    }
}

#[test]
fn way_below_tables() {
    use CatalogName::*;
    assert!(catalog_way_below(PosetT, &P::Bottom, &P::A));
    assert!(!catalog_way_below(PosetT, &P::Nat(1), &P::A));
    assert!(catalog_way_below(RationalScott, &q(1, 3), &q(1, 2)));
    assert!(!catalog_way_below(RationalScott, &q(1, 2), &q(1, 2)));
    assert!(catalog_way_below(OmegaPlusOneAlex, &P::Nat(3), &P::Infinity));
    assert!(catalog_way_below(CofiniteNat, &P::Nat(2), &P::Nat(2)));
    assert!(!catalog_way_below(CofiniteNat, &P::Nat(2), &P::Nat(3)));
}

#[test]
fn derived_sequences() {
    let gammas: Vec<Option<usize>> = CatalogName::ALL
        .iter()
        .map(|&n| {
            let t = si_iterate(&Stage::Catalog(catalog_get(n.cli_name()).unwrap()), 8).unwrap();
            t.fixpoint_reached.then_some(t.gamma)
        })
        .collect();
    // cofinite, ω+1, T, ℚ
    assert_eq!(gammas, [Some(0), Some(1), Some(1), Some(0)]);
}

#[test]
fn nets_over_omega_plus_one() {
    let w = catalog_get("omega-plus-one").unwrap();
    let up = CatalogNet::monotone(Generator::Naturals);
    assert!(!catalog_topological_converges(&w, &up, &P::Infinity).unwrap());
    assert!(catalog_irr_converges(&w, &up, &P::Infinity).unwrap());
    assert!(catalog_irr_converges(&w, &up, &P::Nat(5)).unwrap());
    let constant = CatalogNet::constant(P::Nat(4));
    assert!(catalog_topological_converges(&w, &constant, &P::Nat(2)).unwrap());
    assert!(!catalog_topological_converges(&w, &constant, &P::Infinity).unwrap());
    let r = catalog_way_below_convergence_char(&w, &P::Nat(1), &P::Infinity, 8).unwrap();
    assert!(r.way_below);
}

#[test]
fn nets_over_the_rationals() {
    let qs = catalog_get("rational-scott").unwrap();
    let doc =
        NetJson::parse(r#"{"index": "nat", "prefix": [], "tail": {"kind": "monotone", "values": "1-1/n"}}"#).unwrap();
    let net = doc.to_catalog(&qs).unwrap();
    assert_eq!(
        net.tail,
        TailRule::Monotone(Generator::ApproachFromBelow(irrtop::catalog::rat(1, 1)))
    );
    assert!(catalog_topological_converges(&qs, &net, &q(1, 1)).unwrap());
    assert!(!catalog_topological_converges(&qs, &net, &q(3, 2)).unwrap());
    assert!(catalog_irr_converges(&qs, &net, &q(1, 1)).unwrap());
    assert!(!catalog_irr_converges(&qs, &net, &q(3, 2)).unwrap());

    let bad =
        NetJson::parse(r#"{"index": "nat", "prefix": [], "tail": {"kind": "monotone", "values": "n^2"}}"#).unwrap();
    assert!(matches!(bad.to_catalog(&qs), Err(Error::UndecidableTail(_))));
}

#[test]
fn unknown_names_and_points() {
    assert!(matches!(catalog_get("moore-plane"), Err(Error::UnknownSpace(_))));
    let t = catalog_get("poset-t").unwrap();
    assert!(t.parse_point("b").is_err());
    assert_eq!(t.parse_point("a").unwrap(), P::A);
}

#[test]
fn catalog_suite_is_clean() {
    let r = catalog_suite(8);
    assert!(r.passed, "{:?}", r.violations);
    assert_eq!(r.spaces_checked, 4);
}
