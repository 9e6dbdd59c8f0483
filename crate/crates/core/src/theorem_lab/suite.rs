//! Implications as data, checked over enumerated finite spaces and the
//! catalog.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::{enumerate_labeled, MAX_ENUMERATION};
use super::expr::{Expr, EXTENDED_FLAGS};
use crate::catalog::{self, CatalogName, CatalogPoint, CatalogSpace, OpenSchema};
use crate::convergence::{self as conv, ConvergenceClass, KelleyAxiom};
use crate::error::{Error, Result};
use crate::irr::{self, WayBelow};
use crate::properties::{c_space_witness, check_properties, PropertyReport, FLAG_NAMES};
use crate::si::{self, Stage};
use crate::space::FiniteSpace;

/// Budget for the Kelley sweeps of the suite.
pub const SUITE_BUDGET: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    /// Holds for every space.
    Any,
    /// A consequence of finiteness.
    Finite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ImplicationSpec {
    pub name: &'static str,
    pub hypothesis: &'static str,
    pub conclusion: &'static str,
    pub anchor: &'static str,
    pub scope: Scope,
}

const fn spec(
    name: &'static str,
    hypothesis: &'static str,
    conclusion: &'static str,
    anchor: &'static str,
    scope: Scope,
) -> ImplicationSpec {
    ImplicationSpec {
        name,
        hypothesis,
        conclusion,
        anchor,
        scope,
    }
}

use Scope::{Any, Finite};

pub const IMPLICATIONS: &[ImplicationSpec] = &[
    spec(
        "si-continuity-split",
        "true",
        "si_continuous ⇔ si_minus_continuous ∧ oplus",
        "definition of SI-continuity",
        Any,
    ),
    spec(
        "irr-plus-split",
        "true",
        "irr_plus_continuous ⇔ irr_continuous ∧ oplus",
        "definition of Irr⁺-continuity",
        Any,
    ),
    spec(
        "sober-chain",
        "sober",
        "bounded_sober",
        "sober spaces are bounded sober",
        Any,
    ),
    spec(
        "bounded-sober-chain",
        "bounded_sober",
        "sup_sober",
        "bounded sober spaces are sup-sober",
        Any,
    ),
    spec(
        "way-below-refines-order",
        "true",
        "wb_below",
        "way-below implies below",
        Any,
    ),
    spec("m-set-supremum", "irr_continuous", "m_sup", "M_x has supremum x", Any),
    spec(
        "m-set-irreducible",
        "irr_continuous ∧ sup_sober",
        "m_irreducible",
        "M_x is irreducible",
        Any,
    ),
    spec(
        "interpolation-sup-sober",
        "irr_continuous ∧ sup_sober",
        "interpolating",
        "interpolation under sup-sobriety",
        Any,
    ),
    spec(
        "interpolation-si-minus",
        "si_minus_continuous",
        "interpolating",
        "interpolation under SI⁻-continuity",
        Any,
    ),
    spec(
        "si-minus-is-irr",
        "si_minus_continuous",
        "irr_continuous",
        "SI⁻-continuity implies Irr-continuity",
        Any,
    ),
    spec(
        "star-gives-si-minus",
        "irr_continuous ∧ star",
        "si_minus_continuous",
        "Irr-continuity with ∗ gives SI⁻",
        Any,
    ),
    spec(
        "si-minus-gives-star",
        "si_minus_continuous ∧ sup_sober",
        "star",
        "SI⁻ and sup-sober give ∗",
        Any,
    ),
    spec("c-space-star", "c_space", "star", "C-spaces satisfy ∗", Any),
    spec(
        "si-c-space-irr-plus",
        "si_c_space",
        "irr_plus_continuous",
        "SI(X) a C-space gives Irr⁺",
        Any,
    ),
    spec(
        "si-c-space-s-sets",
        "si_c_space",
        "s_set_char",
        "lower closure of S_x is the way-below set",
        Any,
    ),
    spec(
        "irr-plus-c-space",
        "irr_plus_continuous ∧ sup_sober",
        "c_space",
        "Irr⁺ and sup-sober give a C-space",
        Any,
    ),
    spec(
        "irr-plus-iff-c-space",
        "sup_sober",
        "irr_plus_continuous ⇔ c_space",
        "Irr⁺ equals C-space under sup-sobriety",
        Any,
    ),
    spec(
        "si-iff-irr-plus",
        "sup_sober",
        "si_continuous ⇔ irr_plus_continuous",
        "SI equals Irr⁺ under sup-sobriety",
        Any,
    ),
    spec(
        "sup-sober-si-infty",
        "true",
        "sup_sober ⇔ si_infty",
        "sup-sober iff SI^∞",
        Any,
    ),
    spec(
        "way-below-dd-irreducible",
        "sup_sober",
        "dd_lemma",
        "the way-below set is irreducible",
        Any,
    ),
    spec(
        "kelley-constants-subnets",
        "true",
        "kelley_constants ∧ kelley_subnets",
        "Constants and Subnets always hold",
        Any,
    ),
    spec(
        "kelley-divergence",
        "irr_continuous ∨ si_minus_continuous",
        "kelley_divergence",
        "Divergence under continuity",
        Any,
    ),
    spec(
        "kelley-iterated-sup-sober",
        "irr_continuous ∧ sup_sober",
        "kelley_iterated",
        "Iterated limits under sup-sobriety",
        Any,
    ),
    spec(
        "kelley-iterated-si-minus",
        "si_minus_continuous",
        "kelley_iterated",
        "Iterated limits under SI⁻-continuity",
        Any,
    ),
    spec(
        "iterated-gives-continuity",
        "sup_sober ∧ star ∧ kelley_iterated",
        "irr_continuous ∧ si_minus_continuous",
        "Iterated limits give continuity",
        Any,
    ),
    spec(
        "kelley-is-topological",
        "true",
        "kelley ⇔ topological",
        "Kelley's characterization",
        Any,
    ),
    spec("location-lower", "topological", "si_within_irr", "τ_SI ⊆ τ_𝓘", Any),
    spec(
        "location-upper",
        "topological ∧ (irr_plus_continuous ∨ si_continuous)",
        "irr_within_tau",
        "τ_𝓘 ⊆ τ",
        Any,
    ),
    spec(
        "way-below-convergence",
        "true",
        "wb_char",
        "way-below via eventual lower bounds",
        Any,
    ),
    spec(
        "main-i",
        "irr_continuous ∧ sup_sober",
        "topological",
        "Irr-continuous sup-sober: 𝓘 topological",
        Any,
    ),
    spec(
        "main-i-oplus",
        "irr_continuous ∧ sup_sober ∧ oplus",
        "induces_tau",
        "with ⊕ the inducing topology is τ",
        Any,
    ),
    spec(
        "main-ii",
        "sup_sober ∧ star ∧ topological",
        "irr_continuous ∧ si_minus_continuous",
        "∗ and topological give continuity",
        Any,
    ),
    spec(
        "main-iii",
        "sup_sober",
        "si_minus_continuous ⇔ star ∧ topological",
        "SI⁻ iff ∗ and topological",
        Any,
    ),
    spec(
        "main-iii-oplus",
        "sup_sober ∧ si_minus_continuous ∧ oplus",
        "induces_tau",
        "with ⊕ the inducing topology is τ",
        Any,
    ),
    spec(
        "coincidence",
        "sup_sober ∧ c_space",
        "convergence_coincide",
        "convergences coincide on sup-sober C-spaces",
        Any,
    ),
    spec("finite-sober", "true", "sober", "finite T0 spaces are sober", Finite),
    spec(
        "finite-c-space",
        "true",
        "c_space",
        "finite spaces are C-spaces",
        Finite,
    ),
    spec(
        "finite-si-minus",
        "true",
        "si_minus_continuous",
        "finite spaces are SI⁻-continuous",
        Finite,
    ),
    spec("finite-star", "true", "star", "finite spaces satisfy ∗", Finite),
    spec("finite-oplus", "true", "oplus", "finite spaces satisfy ⊕", Finite),
    spec(
        "finite-si-fixpoint",
        "true",
        "si_infty",
        "SI(X) = X on finite spaces",
        Finite,
    ),
];

/// A specification with parsed sides.
#[derive(Clone, Debug)]
pub struct Implication {
    pub spec: ImplicationSpec,
    pub hypothesis: Expr,
    pub conclusion: Expr,
}

pub fn implications() -> Vec<Implication> {
    IMPLICATIONS
        .iter()
        .map(|s| Implication {
            spec: *s,
            hypothesis: Expr::parse(s.hypothesis).expect("suite hypotheses parse"),
            conclusion: Expr::parse(s.conclusion).expect("suite conclusions parse"),
        })
        .collect()
}

impl Implication {
    pub fn flags(&self) -> BTreeSet<&str> {
        let mut f = self.hypothesis.flags();
        f.extend(self.conclusion.flags());
        f
    }

    /// `None` when some flag is unknown for the space.
    pub fn holds(&self, flag: &impl Fn(&str) -> Option<bool>) -> Option<bool> {
        Some(!self.hypothesis.eval(flag)? || self.conclusion.eval(flag)?)
    }
}

/// Property report plus the extended flags that were requested.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpaceFacts {
    pub report: PropertyReport,
    pub extended: BTreeMap<&'static str, bool>,
}

impl SpaceFacts {
    pub fn flag(&self, name: &str) -> Option<bool> {
        self.report.flag(name).or_else(|| self.extended.get(name).copied())
    }
}

fn kelley(s: &FiniteSpace, a: KelleyAxiom) -> bool {
    conv::kelley_check(s, a, SUITE_BUDGET).is_ok_and(|r| r.passed)
}

/// Computes the report and each requested extended flag.
pub fn space_facts(s: &FiniteSpace, wanted: &BTreeSet<&str>) -> SpaceFacts {
    let report = check_properties(s);
    let want = |names: &[&str]| names.iter().any(|n| wanted.contains(n));
    let mut ext: BTreeMap<&'static str, bool> = BTreeMap::new();
    let n = s.len();
    let irr = irr::irr_plus(s);
    let wb = WayBelow::from_irr_plus(s, &irr);
    let all = |f: &dyn Fn(usize) -> bool| (0..n).all(f);

    if want(&["wb_below"]) {
        ext.insert("wb_below", all(&|x| wb.uu(x).is_subset(s.up(x))));
    }
    if want(&["m_sup"]) {
        ext.insert("m_sup", all(&|x| irr::sup(s, wb.m_set(x)) == Some(x)));
    }
    if want(&["m_irreducible"]) {
        ext.insert(
            "m_irreducible",
            all(&|x| irr::is_irreducible(s, wb.m_set(x)).unwrap_or(false)),
        );
    }
    if want(&["interpolating"]) {
        ext.insert("interpolating", irr::interpolation_witness(s, &wb).is_none());
    }
    if want(&["dd_lemma"]) {
        ext.insert(
            "dd_lemma",
            all(&|x| {
                let dd = wb.dd(x);
                let premise = irr.iter().any(|(e, m)| s.le(x, *m) && e.is_subset(dd));
                !premise || (irr::is_irreducible(s, dd).unwrap_or(false) && irr::sup(s, dd) == Some(x))
            }),
        );
    }
    if want(&["si_c_space", "s_set_char"]) {
        let derived = si::si_derivative(s);
        ext.insert("si_c_space", c_space_witness(&derived).is_none());
        ext.insert(
            "s_set_char",
            all(&|x| s.order().down_closure(si::s_set(s, x)) == wb.dd(x)),
        );
    }
    for (flag, axiom) in [
        ("kelley_constants", KelleyAxiom::Constants),
        ("kelley_subnets", KelleyAxiom::Subnets),
        ("kelley_divergence", KelleyAxiom::Divergence),
        ("kelley_iterated", KelleyAxiom::IteratedLimits),
    ] {
        if want(&[flag, "kelley"]) {
            ext.insert(flag, kelley(s, axiom));
        }
    }
    if want(&["kelley"]) {
        let k = [
            "kelley_constants",
            "kelley_subnets",
            "kelley_divergence",
            "kelley_iterated",
        ]
        .iter()
        .all(|f| ext[f]);
        ext.insert("kelley", k);
    }
    if want(&[
        "topological",
        "induces_tau",
        "convergence_coincide",
        "si_within_irr",
        "irr_within_tau",
    ]) {
        let class = ConvergenceClass::irr(s);
        let induced = class.induced_topology();
        ext.insert("topological", ConvergenceClass::of_topology(&induced) == class);
        ext.insert("induces_tau", induced == *s.topology());
        ext.insert("convergence_coincide", ConvergenceClass::topological(s) == class);
        ext.insert("si_within_irr", si::si_topology(s).is_coarser_than(&induced));
        ext.insert("irr_within_tau", induced.is_coarser_than(s.topology()));
    }
    if want(&["wb_char"]) {
        let ok = (0..n).all(|x| {
            (0..n).all(|y| {
                let r = conv::way_below_convergence_char(s, x, y);
                r.lemma_holds && r.converse_holds != Some(false)
            })
        });
        ext.insert("wb_char", ok);
    }
    SpaceFacts { report, extended: ext }
}

pub fn all_flags() -> BTreeSet<&'static str> {
    FLAG_NAMES.iter().chain(EXTENDED_FLAGS.iter()).copied().collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub space: String,
    pub implication: String,
    pub anchor: String,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub spaces_checked: usize,
    pub implications_checked: usize,
    pub passed: bool,
    pub violations: Vec<Violation>,
}

impl SuiteResult {
    fn new(spaces_checked: usize, implications_checked: usize, violations: Vec<Violation>) -> Self {
        SuiteResult {
            spaces_checked,
            implications_checked,
            passed: violations.is_empty(),
            violations,
        }
    }
}

/// `0 < 1, 0 < 2` style description of the order.
pub fn describe(s: &FiniteSpace) -> String {
    let covers: Vec<String> = s
        .order()
        .covers()
        .into_iter()
        .map(|(x, y)| format!("{} < {}", s.name(x), s.name(y)))
        .collect();
    format!("{}-point space {{{}}}", s.len(), covers.join(", "))
}

fn flag_values(imp: &Implication, facts: &impl Fn(&str) -> Option<bool>) -> String {
    imp.flags()
        .into_iter()
        .map(|f| match facts(f) {
            Some(v) => format!("{f}={v}"),
            None => format!("{f}=?"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Violations of `imps` on one finite space.
pub fn check_space(s: &FiniteSpace, imps: &[Implication], wanted: &BTreeSet<&str>) -> Vec<Violation> {
    let facts = space_facts(s, wanted);
    let f = |n: &str| facts.flag(n);
    imps.iter()
        .filter(|i| i.holds(&f) != Some(true))
        .map(|i| {
            let mut witness = flag_values(i, &f);
            for flag in i.conclusion.flags() {
                if let Some(w) = facts.report.witnesses.get(flag) {
                    witness.push_str(&format!("; {flag}: {w}"));
                }
            }
            Violation {
                space: describe(s),
                implication: format!("{}: {} ⇒ {}", i.spec.name, i.hypothesis, i.conclusion),
                anchor: i.spec.anchor.to_string(),
                witness,
            }
        })
        .collect()
}

/// Every implication on every labeled Alexandroff space of `1..=max_n`
/// points.
pub fn run_implication_suite(max_n: usize) -> Result<SuiteResult> {
    if max_n > MAX_ENUMERATION {
        return Err(Error::TooLarge(max_n));
    }
    let imps = implications();
    let wanted = all_flags();
    let mut spaces = 0;
    let mut violations = Vec::new();
    for n in 1..=max_n {
        let posets = enumerate_labeled(n)?;
        spaces += posets.len();
        let found: Vec<Vec<Violation>> = posets
            .par_iter()
            .map(|p| check_space(&FiniteSpace::alexandroff(p), &imps, &wanted))
            .collect();
        violations.extend(found.into_iter().flatten());
    }
    Ok(SuiteResult::new(spaces, imps.len(), violations))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub space: crate::space::SpaceJson,
    pub description: String,
    pub flags: BTreeMap<String, bool>,
}

/// The first enumerated space satisfying `query`.
pub fn find_counterexample(query: &str, max_n: usize) -> Result<Option<Counterexample>> {
    let q = Expr::parse(query)?;
    if max_n > MAX_ENUMERATION {
        return Err(Error::TooLarge(max_n));
    }
    let wanted = q.flags();
    for n in 1..=max_n {
        let posets = enumerate_labeled(n)?;
        let hit = posets.par_iter().find_map_first(|p| {
            let s = FiniteSpace::alexandroff(p);
            let facts = space_facts(&s, &wanted);
            (q.eval(&|f| facts.flag(f)) == Some(true)).then_some((s, facts))
        });
        if let Some((s, facts)) = hit {
            let flags = wanted
                .iter()
                .filter_map(|f| facts.flag(f).map(|v| (f.to_string(), v)))
                .collect();
            return Ok(Some(Counterexample {
                space: s.to_json(),
                description: describe(&s),
                flags,
            }));
        }
    }
    Ok(None)
}

/// Claims about the catalog spaces stated as example facts.
fn row_claims(name: CatalogName) -> &'static [(&'static str, bool)] {
    match name {
        CatalogName::CofiniteNat => &[
            ("irr_continuous", true),
            ("sup_sober", true),
            ("oplus", false),
            ("c_space", false),
        ],
        CatalogName::PosetT => &[("c_space", true), ("irr_continuous", false)],
        CatalogName::RationalScott => &[("irr_continuous", true), ("sup_sober", true), ("sober", false)],
        CatalogName::OmegaPlusOneAlex => &[],
    }
}

/// Frozen matrix, example claims, location, interpolation and convergence
/// checks on the four catalog spaces.
pub fn catalog_suite(fuel: usize) -> SuiteResult {
    let imps: Vec<Implication> = implications()
        .into_iter()
        .filter(|i| i.spec.scope == Scope::Any && i.flags().iter().all(|f| FLAG_NAMES.contains(f)))
        .collect();
    let mut checks = imps.len();
    let mut violations = Vec::new();
    for name in CatalogName::ALL {
        let mut fail = |what: &str, anchor: &str, witness: String| {
            violations.push(Violation {
                space: name.to_string(),
                implication: what.to_string(),
                anchor: anchor.to_string(),
                witness,
            })
        };
        let space = CatalogSpace::new(name);
        let report = catalog::catalog_properties(name);
        let flag = |f: &str| report.flag(f);
        if let Err(e) = catalog::validate_catalog(name, fuel) {
            fail("frozen matrix", "re-derived from the definitions", e.to_string());
        }
        if !report.is_consistent() {
            fail("row consistency", "definitional links", format!("{report:?}"));
        }
        for i in &imps {
            if i.holds(&flag) != Some(true) {
                fail(i.spec.name, i.spec.anchor, flag_values(i, &flag));
            }
        }
        for (f, v) in row_claims(name) {
            if report.flag(f) != Some(*v) {
                fail("example claim", f, format!("{f} expected {v}"));
            }
        }
        checks += 5;
        match name {
            CatalogName::PosetT => {
                let dd = catalog::frozen_dd(name, &CatalogPoint::A);
                if dd != catalog::DescribedSet::finite([CatalogPoint::Bottom]) {
                    fail("example claim", "way-below set of a", dd.to_string());
                }
            }
            CatalogName::OmegaPlusOneAlex => {
                let scott: BTreeSet<OpenSchema> = [OpenSchema::Empty, OpenSchema::Full, OpenSchema::UpRay].into();
                match si::si_iterate(&Stage::Catalog(space.clone()), fuel) {
                    Ok(t) if t.gamma == 1 && matches!(&t.stages[1], Stage::Catalog(c) if *c.schemas() == scott) => {}
                    Ok(t) => fail(
                        "example claim",
                        "SI derivative is Scott, γ = 1",
                        format!("γ = {}", t.gamma),
                    ),
                    Err(e) => fail("example claim", "SI derivative is Scott, γ = 1", e.to_string()),
                }
            }
            _ => {}
        }
        match conv::catalog_location_check(&space, fuel) {
            Ok(r) if r.si_within_irr && r.irr_within_tau != Some(false) => {
                if name == CatalogName::OmegaPlusOneAlex && !r.witnesses.iter().any(|w| w.starts_with("{∞}")) {
                    fail("location", "{∞} ∈ τ ∖ τ_𝓘", "no witness net".into());
                }
            }
            Ok(r) => fail("location", "τ_SI ⊆ τ_𝓘 ⊆ τ", r.witnesses.join("; ")),
            Err(e) => fail("location", "τ_SI ⊆ τ_𝓘 ⊆ τ", e.to_string()),
        }
        if let Some(w) = interpolation_gap(&space, &report, fuel) {
            fail("interpolation", "interpolation of ≪_Irr", w);
        }
        if let Some(w) = way_below_char_gap(&space, fuel) {
            fail("way-below-convergence", "way-below via eventual lower bounds", w);
        }
        if report.sup_sober && report.c_space {
            if let Some(w) = coincidence_gap(&space, fuel) {
                fail("coincidence", "convergences coincide on sup-sober C-spaces", w);
            }
        }
    }
    SuiteResult::new(CatalogName::ALL.len(), checks, violations)
}

fn interpolation_gap(space: &CatalogSpace, report: &PropertyReport, fuel: usize) -> Option<String> {
    if !(report.irr_continuous && report.sup_sober || report.si_minus_continuous) {
        return None;
    }
    let name = space.name();
    let pts = space.family().sample_points(fuel);
    for z in &pts {
        for x in &pts {
            if !catalog::catalog_way_below(name, z, x) {
                continue;
            }
            let mut cands = pts.clone();
            if let (CatalogPoint::Rational(a), CatalogPoint::Rational(b)) = (z, x) {
                cands.push(CatalogPoint::Rational((a + b) / 2));
            }
            let found = cands
                .iter()
                .any(|y| catalog::catalog_way_below(name, z, y) && catalog::catalog_way_below(name, y, x));
            if !found {
                return Some(format!("no interpolant for {z} ≪ {x}"));
            }
        }
    }
    None
}

fn way_below_char_gap(space: &CatalogSpace, fuel: usize) -> Option<String> {
    let pts = space.family().sample_points(fuel);
    let few = &pts[..pts.len().min(8)];
    for x in few {
        for y in few {
            match conv::catalog_way_below_convergence_char(space, x, y, fuel) {
                Ok(r) if r.lemma_holds && r.converse_holds != Some(false) => {}
                Ok(r) => return Some(format!("{x}, {y}: {r:?}")),
                Err(e) => return Some(e.to_string()),
            }
        }
    }
    None
}

fn coincidence_gap(space: &CatalogSpace, fuel: usize) -> Option<String> {
    let fam = space.family();
    for net in conv::sample_nets(fam, fuel) {
        for y in fam.sample_points(fuel) {
            let t = conv::catalog_topological_converges(space, &net, &y);
            let i = conv::catalog_irr_converges(space, &net, &y);
            match (t, i) {
                (Ok(t), Ok(i)) if t == i => {}
                (t, i) => return Some(format!("{net} to {y}: topological {t:?}, Irr {i:?}")),
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::space::fixtures::*;

    #[test]
    fn specs_parse_and_use_declared_flags() {
        let imps = implications();
        assert_eq!(imps.len(), IMPLICATIONS.len());
        let names: BTreeSet<&str> = IMPLICATIONS.iter().map(|s| s.name).collect();
        assert_eq!(names.len(), IMPLICATIONS.len());
    }

    #[test]
    fn small_suites_pass() {
        let r = run_implication_suite(1).unwrap();
        assert_eq!((r.spaces_checked, r.passed), (1, true));
        let r = run_implication_suite(3).unwrap();
        assert_eq!(r.spaces_checked, 23);
        assert!(r.passed, "{:#?}", r.violations);
    }

    #[test]
    fn extended_flags_on_fixtures() {
        for s in [chain3(), vee(), diamond()] {
            let f = space_facts(&s, &all_flags());
            for flag in EXTENDED_FLAGS {
                assert_eq!(f.flag(flag), Some(true), "{flag} on {}", describe(&s));
            }
        }
    }

    #[test]
    fn counterexample_queries() {
        assert!(find_counterexample("sup_sober ∧ ¬c_space", 4).unwrap().is_none());
        let c = find_counterexample("irr_continuous", 2).unwrap().unwrap();
        assert_eq!(c.space.points.len(), 1);
        assert!(matches!(find_counterexample("¬t0", 2), Err(Error::BadQuery(_))));
    }

    #[test]
    fn catalog_suite_passes() {
        let r = catalog_suite(6);
        assert!(r.passed, "{:#?}", r.violations);
        assert_eq!(r.spaces_checked, 4);
    }
}
