//! Symbolic oracles for four infinite example spaces.
//!
//! The order, the open families and membership are closed forms. The
//! `≪_Irr` relation and the property rows are frozen tables; `probe`
//! re-derives them from the definitions over fuel-bounded witness classes.

pub mod family;
pub mod probe;
pub mod symbolic;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::properties::{PropertyReport, Witness};

pub use family::Family;
pub use probe::{validate_catalog, ValidationReport};
pub use symbolic::{
    parse_rational, q, rat, CatalogPoint, DescribedSet, InfinitePart, OpenSchema, Rational, SymbolicOpen,
};

/// Default truncation level for probes and iteration.
pub const DEFAULT_FUEL: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CatalogName {
    #[serde(rename = "cofinite-nat")]
    CofiniteNat,
    #[serde(rename = "omega-plus-one")]
    OmegaPlusOneAlex,
    #[serde(rename = "poset-t")]
    PosetT,
    #[serde(rename = "rational-scott")]
    RationalScott,
}

impl CatalogName {
    pub const ALL: [CatalogName; 4] = [
        CatalogName::CofiniteNat,
        CatalogName::OmegaPlusOneAlex,
        CatalogName::PosetT,
        CatalogName::RationalScott,
    ];

    pub fn cli_name(self) -> &'static str {
        match self {
            CatalogName::CofiniteNat => "cofinite-nat",
            CatalogName::OmegaPlusOneAlex => "omega-plus-one",
            CatalogName::PosetT => "poset-t",
            CatalogName::RationalScott => "rational-scott",
        }
    }

    pub fn family(self) -> Family {
        match self {
            CatalogName::CofiniteNat => Family::CofiniteNat,
            CatalogName::OmegaPlusOneAlex => Family::OmegaPlusOne,
            CatalogName::PosetT => Family::PosetT,
            CatalogName::RationalScott => Family::Rationals,
        }
    }

    /// Open schemas of the catalogued topology.
    pub fn schemas(self) -> BTreeSet<OpenSchema> {
        use OpenSchema::*;
        let extra: &[OpenSchema] = match self {
            CatalogName::CofiniteNat => &[Cofinite],
            CatalogName::OmegaPlusOneAlex => &[UpRay, TopSingleton],
            CatalogName::PosetT => &[TUpperNoTail, TUpperWithTail],
            CatalogName::RationalScott => &[RationalRay],
        };
        [Empty, Full].into_iter().chain(extra.iter().copied()).collect()
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

impl FromStr for CatalogName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        Ok(match key.as_str() {
            "cofinite-nat" | "cofinitenat" => CatalogName::CofiniteNat,
            "omega-plus-one" | "omegaplusonealex" | "omega-plus-one-alex" => CatalogName::OmegaPlusOneAlex,
            "poset-t" | "posett" => CatalogName::PosetT,
            "rational-scott" | "rationalscott" => CatalogName::RationalScott,
            _ => return Err(Error::UnknownSpace(s.to_string())),
        })
    }
}

/// A catalogued carrier together with a topology given by open schemas.
///
/// The topologies reachable from the catalog (the originals and their SI
/// derivatives) are all unions of whole schemas.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CatalogSpace {
    name: CatalogName,
    schemas: BTreeSet<OpenSchema>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogStageJson {
    pub space: CatalogName,
    pub opens: Vec<String>,
}

pub fn catalog_get(name: &str) -> Result<CatalogSpace> {
    Ok(CatalogSpace::new(name.parse()?))
}

impl CatalogSpace {
    pub fn new(name: CatalogName) -> Self {
        CatalogSpace {
            name,
            schemas: name.schemas(),
        }
    }

    pub fn name(&self) -> CatalogName {
        self.name
    }

    pub fn family(&self) -> Family {
        self.name.family()
    }

    pub fn schemas(&self) -> &BTreeSet<OpenSchema> {
        &self.schemas
    }

    /// Whether this is the catalogued topology rather than a derived stage.
    pub fn is_original(&self) -> bool {
        self.schemas == self.name.schemas()
    }

    pub fn leq(&self, x: &CatalogPoint, y: &CatalogPoint) -> bool {
        self.family().leq(x, y)
    }

    pub fn parse_point(&self, s: &str) -> Result<CatalogPoint> {
        self.family()
            .parse_point(s)
            .ok_or_else(|| Error::UnknownPoint(s.to_string()))
    }

    pub fn is_open(&self, u: &SymbolicOpen) -> bool {
        self.schemas.contains(&u.schema()) && self.family_admits(u)
    }

    fn family_admits(&self, u: &SymbolicOpen) -> bool {
        use SymbolicOpen as O;
        matches!(
            (self.family(), u),
            (_, O::Empty | O::Full)
                | (Family::CofiniteNat, O::CofiniteComplement(_))
                | (Family::OmegaPlusOne, O::UpRay(_) | O::TopSingleton)
                | (Family::PosetT, O::UpSetOfT { .. })
                | (Family::Rationals, O::RationalRightRay(_))
        )
    }

    /// The opens of the topology with parameters inside the fuel window.
    pub fn instances(&self, fuel: usize) -> Vec<SymbolicOpen> {
        self.schemas
            .iter()
            .flat_map(|s| self.family().instances(*s, fuel))
            .collect()
    }

    /// Open-pair irreducibility over the fuel window.
    pub fn is_irreducible(&self, e: &DescribedSet, fuel: usize) -> bool {
        if e.is_empty() {
            return false;
        }
        let fam = self.family();
        let meeting: Vec<SymbolicOpen> = self.instances(fuel).into_iter().filter(|u| fam.meets(e, u)).collect();
        meeting
            .iter()
            .all(|u| meeting.iter().all(|v| fam.meets(e, &u.intersect(v))))
    }

    /// Members of `Irr⁺` among the registered witness classes.
    pub fn irr_plus_witnesses(&self, fuel: usize) -> Vec<(DescribedSet, CatalogPoint)> {
        let fam = self.family();
        fam.witness_sets(fuel)
            .into_iter()
            .filter_map(|e| fam.sup(&e).map(|s| (e, s)))
            .filter(|(e, _)| self.is_irreducible(e, fuel))
            .collect()
    }

    /// First `E ∈ Irr⁺` with `⋁E ∈ U` and `E ∩ U = ∅`.
    pub fn si_violation(&self, irr: &[(DescribedSet, CatalogPoint)], u: &SymbolicOpen) -> Option<DescribedSet> {
        let fam = self.family();
        irr.iter()
            .find(|(e, s)| u.contains(s) && !fam.meets(e, u))
            .map(|(e, _)| e.clone())
    }

    pub fn is_si_open(&self, u: &SymbolicOpen, fuel: usize) -> Result<bool> {
        if !self.is_open(u) {
            return Err(Error::NotOpen(u.to_string()));
        }
        Ok(self.si_violation(&self.irr_plus_witnesses(fuel), u).is_none())
    }

    /// A closed `C` is SI-closed iff it contains `⋁E` for each `E ∈ Irr⁺`
    /// inside it. `C` is given by its open complement.
    pub fn si_closed_check(&self, complement_of: &SymbolicOpen, fuel: usize) -> Result<bool> {
        if !self.is_open(complement_of) {
            return Err(Error::NotClosed(self.family().complement(complement_of).to_string()));
        }
        let fam = self.family();
        let c = fam.complement(complement_of);
        let inside = |e: &DescribedSet| {
            e.finite.iter().all(|p| c.contains(p))
                && e.infinite
                    .is_none_or(|part| part.sample(4 * fuel.max(1)).iter().all(|p| c.contains(p)))
        };
        Ok(self
            .irr_plus_witnesses(fuel)
            .iter()
            .all(|(e, s)| !inside(e) || c.contains(s)))
    }

    /// Keeps the schemas all of whose instances are SI-open.
    pub fn si_derivative(&self, fuel: usize) -> CatalogSpace {
        let irr = self.irr_plus_witnesses(fuel);
        let schemas = self
            .schemas
            .iter()
            .copied()
            .filter(|s| {
                self.family()
                    .instances(*s, fuel)
                    .iter()
                    .all(|u| self.si_violation(&irr, u).is_none())
            })
            .collect();
        CatalogSpace {
            name: self.name,
            schemas,
        }
    }

    pub fn meet(&self, other: &CatalogSpace) -> Option<CatalogSpace> {
        (self.name == other.name).then(|| CatalogSpace {
            name: self.name,
            schemas: self.schemas.intersection(&other.schemas).copied().collect(),
        })
    }

    pub fn to_stage_json(&self) -> CatalogStageJson {
        CatalogStageJson {
            space: self.name,
            opens: self.schemas.iter().map(|s| s.name().to_string()).collect(),
        }
    }

    /// `int(↑y)`, catalogued topology only.
    pub fn int_up(&self, y: &CatalogPoint) -> SymbolicOpen {
        frozen_int_up(self.name, y)
    }
}

/// Schemas removed by one SI step from the catalogued topology.
pub fn frozen_si_removed(name: CatalogName) -> &'static [OpenSchema] {
    match name {
        CatalogName::OmegaPlusOneAlex => &[OpenSchema::TopSingleton],
        CatalogName::PosetT => &[OpenSchema::TUpperNoTail],
        CatalogName::CofiniteNat | CatalogName::RationalScott => &[],
    }
}

/// Frozen `≪_Irr`.
pub fn catalog_way_below(name: CatalogName, x: &CatalogPoint, y: &CatalogPoint) -> bool {
    use CatalogPoint as P;
    let fam = name.family();
    if !fam.is_point(x) || !fam.is_point(y) {
        return false;
    }
    match name {
        CatalogName::CofiniteNat => x == y,
        CatalogName::OmegaPlusOneAlex => *x != P::Infinity && fam.leq(x, y),
        CatalogName::PosetT => match (x, y) {
            (P::Bottom, _) => true,
            (P::Nat(j), P::Nat(k)) => j <= k,
            (P::Nat(_), P::Top) => true,
            _ => false,
        },
        CatalogName::RationalScott => fam.lt(x, y),
    }
}

/// Frozen `↡y`.
pub fn frozen_dd(name: CatalogName, y: &CatalogPoint) -> DescribedSet {
    use CatalogPoint as P;
    match (name, y) {
        (CatalogName::CofiniteNat, _) => DescribedSet::finite([*y]),
        (CatalogName::OmegaPlusOneAlex, P::Nat(n)) => DescribedSet::finite((0..=*n).map(P::Nat)),
        (CatalogName::OmegaPlusOneAlex, _) => DescribedSet::infinite(InfinitePart::NatTail(0)),
        (CatalogName::PosetT, P::Nat(k)) => DescribedSet::finite([P::Bottom]).with_points((1..=*k).map(P::Nat)),
        (CatalogName::PosetT, P::Top) => DescribedSet::infinite(InfinitePart::NatTail(1)).with_points([P::Bottom]),
        (CatalogName::PosetT, _) => DescribedSet::finite([P::Bottom]),
        (CatalogName::RationalScott, P::Rational(v)) => DescribedSet::infinite(InfinitePart::RatBelow(*v)),
        (CatalogName::RationalScott, _) => DescribedSet::empty(),
    }
}

/// Frozen `↟x`: an open, or a described set that is not open.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UpArrow {
    Open(SymbolicOpen),
    NotOpen(DescribedSet),
}

impl UpArrow {
    pub fn contains(&self, p: &CatalogPoint) -> bool {
        match self {
            UpArrow::Open(u) => u.contains(p),
            UpArrow::NotOpen(d) => d.contains(p),
        }
    }
}

pub fn frozen_uu(name: CatalogName, x: &CatalogPoint) -> UpArrow {
    use CatalogPoint as P;
    use SymbolicOpen as O;
    UpArrow::Open(match (name, x) {
        (CatalogName::CofiniteNat, _) => return UpArrow::NotOpen(DescribedSet::finite([*x])),
        (CatalogName::OmegaPlusOneAlex, P::Nat(n)) => O::up_ray(*n),
        (CatalogName::OmegaPlusOneAlex, _) => O::Empty,
        (CatalogName::PosetT, P::Bottom) => O::Full,
        (CatalogName::PosetT, P::Nat(k)) => O::t_upper(false, Some(*k)),
        (CatalogName::PosetT, _) => O::Empty,
        (CatalogName::RationalScott, P::Rational(v)) => O::RationalRightRay(*v),
        (CatalogName::RationalScott, _) => O::Empty,
    })
}

/// Frozen `int(↑y)` in the catalogued topology.
pub fn frozen_int_up(name: CatalogName, y: &CatalogPoint) -> SymbolicOpen {
    use CatalogPoint as P;
    use SymbolicOpen as O;
    match (name, y) {
        (CatalogName::CofiniteNat, _) => O::Empty,
        (CatalogName::OmegaPlusOneAlex, P::Nat(n)) => O::up_ray(*n),
        (CatalogName::OmegaPlusOneAlex, _) => O::TopSingleton,
        (CatalogName::PosetT, P::Bottom) => O::Full,
        (CatalogName::PosetT, P::Nat(k)) => O::t_upper(false, Some(*k)),
        (CatalogName::PosetT, P::A) => O::t_upper(true, None),
        (CatalogName::PosetT, _) => O::t_upper(false, None),
        (CatalogName::RationalScott, P::Rational(v)) => O::RationalRightRay(*v),
        (CatalogName::RationalScott, _) => O::Empty,
    }
}

/// Frozen property row with witnesses for every false flag.
pub fn catalog_properties(name: CatalogName) -> PropertyReport {
    let d = |s: &str| Witness::Described(s.to_string());
    let (flags, witnesses): ([bool; 11], Vec<(&str, Witness)>) = match name {
        // sober bounded sup irr si- si irr+ oplus star c si_infty
        CatalogName::CofiniteNat => (
            [false, true, true, true, true, false, false, false, true, false, true],
            vec![
                ("sober", d("ℕ is irreducible and closed but not a point closure")),
                ("oplus", d("↟0 = {0} is not open")),
                ("si_continuous", d("↟0 = {0} is not open")),
                ("irr_plus_continuous", d("↟0 = {0} is not open")),
                ("c_space", d("0 in open ℕ; every int(↑y) = int({y}) is empty")),
            ],
        ),
        CatalogName::OmegaPlusOneAlex => (
            [false, false, false, true, true, true, true, true, true, true, false],
            vec![
                ("sober", d("ω is irreducible and closed with supremum ∞ ∉ ω")),
                ("bounded_sober", d("ω is irreducible and closed with supremum ∞ ∉ ω")),
                ("sup_sober", d("ω is irreducible and closed with supremum ∞ ∉ ω")),
                ("si_infty", d("{∞} is open but not SI-open: E = ω")),
            ],
        ),
        CatalogName::PosetT => (
            [false, false, false, false, false, false, false, true, true, true, false],
            vec![
                (
                    "sober",
                    d("{⊥, 1, 2, ..} is irreducible and closed with supremum ⊤ outside it"),
                ),
                (
                    "bounded_sober",
                    d("{⊥, 1, 2, ..} is irreducible and closed with supremum ⊤ outside it"),
                ),
                (
                    "sup_sober",
                    d("{⊥, 1, 2, ..} is irreducible and closed with supremum ⊤ outside it"),
                ),
                ("irr_continuous", d("↡a = {⊥} has supremum ⊥ ≠ a")),
                (
                    "si_minus_continuous",
                    d("↡a = {⊥} has no directed subset with supremum a"),
                ),
                ("si_continuous", d("↡a = {⊥} has no directed subset with supremum a")),
                ("irr_plus_continuous", d("↡a = {⊥} has supremum ⊥ ≠ a")),
                ("si_infty", d("{⊤} is open but not SI-open: E = {1, 2, ..}")),
            ],
        ),
        CatalogName::RationalScott => (
            [false, true, true, true, true, true, true, true, true, true, true],
            vec![("sober", d("ℚ is irreducible and closed but not a point closure"))],
        ),
    };
    let [sober, bounded_sober, sup_sober, irr_continuous, si_minus_continuous, si_continuous, irr_plus_continuous, oplus, star, c_space, si_infty] =
        flags;
    PropertyReport {
        sober,
        bounded_sober,
        sup_sober,
        irr_continuous,
        si_minus_continuous,
        si_continuous,
        irr_plus_continuous,
        oplus,
        star,
        c_space,
        si_infty,
        witnesses: witnesses
            .into_iter()
            .map(|(k, w)| (k.to_string(), w))
            .collect::<BTreeMap<_, _>>(),
    }
}
