//! Sobriety, continuity and separation flags of a space.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::irr::{irr_plus, WayBelow};
use crate::pointset::PointSet;
use crate::si;
use crate::space::FiniteSpace;

/// Counterexample attached to a failed flag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Point(String),
    Subset(Vec<String>),
    /// Symbolic description, used for infinite spaces.
    Described(String),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Point(p) => write!(f, "point {p}"),
            Witness::Subset(s) => write!(f, "set {{{}}}", s.join(", ")),
            Witness::Described(d) => f.write_str(d),
        }
    }
}

/// The property vector of a space.
///
/// `si_continuous` is `si_minus_continuous ∧ oplus` and
/// `irr_plus_continuous` is `irr_continuous ∧ oplus`; both are stored so the
/// JSON form is self-contained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub sober: bool,
    pub bounded_sober: bool,
    pub sup_sober: bool,
    pub irr_continuous: bool,
    pub si_minus_continuous: bool,
    pub si_continuous: bool,
    pub irr_plus_continuous: bool,
    pub oplus: bool,
    pub star: bool,
    pub c_space: bool,
    pub si_infty: bool,
    #[serde(default)]
    pub witnesses: BTreeMap<String, Witness>,
}

pub const FLAG_NAMES: [&str; 11] = [
    "sober",
    "bounded_sober",
    "sup_sober",
    "irr_continuous",
    "si_minus_continuous",
    "si_continuous",
    "irr_plus_continuous",
    "oplus",
    "star",
    "c_space",
    "si_infty",
];

impl PropertyReport {
    pub fn flag(&self, name: &str) -> Option<bool> {
        Some(match name {
            "sober" => self.sober,
            "bounded_sober" => self.bounded_sober,
            "sup_sober" => self.sup_sober,
            "irr_continuous" => self.irr_continuous,
            "si_minus_continuous" => self.si_minus_continuous,
            "si_continuous" => self.si_continuous,
            "irr_plus_continuous" => self.irr_plus_continuous,
            "oplus" => self.oplus,
            "star" => self.star,
            "c_space" => self.c_space,
            "si_infty" => self.si_infty,
            _ => return None,
        })
    }

    pub fn flags(&self) -> impl Iterator<Item = (&'static str, bool)> + '_ {
        FLAG_NAMES.iter().map(|n| (*n, self.flag(n).unwrap()))
    }

    /// Definitional links and the sobriety chain.
    pub fn is_consistent(&self) -> bool {
        self.si_continuous == (self.si_minus_continuous && self.oplus)
            && self.irr_plus_continuous == (self.irr_continuous && self.oplus)
            && (!self.sober || self.bounded_sober)
            && (!self.bounded_sober || self.sup_sober)
    }
}

/// Runs every checker by definitional scan.
pub fn check_properties(s: &FiniteSpace) -> PropertyReport {
    let irr = irr_plus(s);
    let wb = WayBelow::from_irr_plus(s, &irr);
    let mut witnesses = BTreeMap::new();
    let point = |x: usize| Witness::Point(s.name(x).to_string());
    let subset = |e: PointSet| Witness::Subset(s.labels_of(e));

    let mut record = |name: &str, w: Option<Witness>| -> bool {
        match w {
            Some(w) => {
                witnesses.insert(name.to_string(), w);
                false
            }
            None => true,
        }
    };

    let sober = record("sober", sobriety_witness(s, Sobriety::Sober).map(subset));
    let bounded_sober = record("bounded_sober", sobriety_witness(s, Sobriety::Bounded).map(subset));
    let sup_sober = record("sup_sober", sobriety_witness(s, Sobriety::Sup).map(subset));
    let irr_continuous = record("irr_continuous", irr_continuity_witness(s, &wb).map(point));
    let si_minus_continuous = record("si_minus_continuous", si_minus_witness(s, &wb).map(point));
    let oplus = record("oplus", oplus_witness(s, &wb).map(point));
    let star = record("star", star_witness(s, &irr).map(subset));
    let c_space = record(
        "c_space",
        c_space_witness(s)
            .map(|(u, x)| Witness::Described(format!("{} in open {{{}}}", s.name(x), s.labels_of(u).join(", ")))),
    );
    let si_infty = record("si_infty", si::non_si_open_witness(s, &irr).map(subset));
    let si_continuous = si_minus_continuous && oplus;
    let irr_plus_continuous = irr_continuous && oplus;
    if !si_continuous {
        let w = witnesses
            .get("si_minus_continuous")
            .or_else(|| witnesses.get("oplus"))
            .cloned();
        witnesses.extend(w.map(|w| ("si_continuous".to_string(), w)));
    }
    if !irr_plus_continuous {
        let w = witnesses
            .get("irr_continuous")
            .or_else(|| witnesses.get("oplus"))
            .cloned();
        witnesses.extend(w.map(|w| ("irr_plus_continuous".to_string(), w)));
    }
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
        witnesses,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sobriety {
    /// every irreducible closed set
    Sober,
    /// those bounded above
    Bounded,
    /// those with a supremum
    Sup,
}

/// First irreducible closed set in scope that is not a point closure.
pub fn sobriety_witness(s: &FiniteSpace, kind: Sobriety) -> Option<PointSet> {
    let p = s.order();
    let mut closed: Vec<PointSet> = s.topology().closed_sets().filter(|c| !c.is_empty()).collect();
    closed.sort();
    closed.into_iter().find(|&c| {
        let irreducible = crate::irr::is_irreducible(s, c).unwrap_or(false);
        let in_scope = match kind {
            Sobriety::Sober => true,
            Sobriety::Bounded => !p.upper_bounds(c).is_empty(),
            Sobriety::Sup => p.sup(c).is_some(),
        };
        let point_closures = (0..s.len()).filter(|&x| s.closure(PointSet::singleton(x)) == c).count();
        irreducible && in_scope && point_closures != 1
    })
}

/// First `x` with `↡x` empty, reducible, or not supremum `x`.
pub fn irr_continuity_witness(s: &FiniteSpace, wb: &WayBelow) -> Option<usize> {
    (0..s.len()).find(|&x| {
        let dd = wb.dd(x);
        dd.is_empty() || !crate::irr::is_irreducible(s, dd).unwrap_or(false) || s.order().sup(dd) != Some(x)
    })
}

/// First `x` such that no directed subset of `↡x` has supremum `x`.
pub fn si_minus_witness(s: &FiniteSpace, wb: &WayBelow) -> Option<usize> {
    let p = s.order();
    (0..s.len()).find(|&x| {
        !wb.dd(x)
            .nonempty_subsets()
            .any(|d| p.is_directed(d).unwrap_or(false) && p.sup(d) == Some(x))
    })
}

/// First `x` with `↟x` not open.
pub fn oplus_witness(s: &FiniteSpace, wb: &WayBelow) -> Option<usize> {
    (0..s.len()).find(|&x| !s.is_open(wb.uu(x)))
}

/// First `F ∈ Irr⁺` with no directed `D ⊆ ↓F` of the same supremum.
pub fn star_witness(s: &FiniteSpace, irr: &[(PointSet, usize)]) -> Option<PointSet> {
    let p = s.order();
    irr.iter()
        .find(|(f, m)| {
            !p.down_closure(*f)
                .nonempty_subsets()
                .any(|d| p.is_directed(d).unwrap_or(false) && p.sup(d) == Some(*m))
        })
        .map(|(f, _)| *f)
}

/// First `(U, x)` with `x ∈ U` open and no `y ∈ U` having `x ∈ int(↑y)`.
pub fn c_space_witness(s: &FiniteSpace) -> Option<(PointSet, usize)> {
    let int_up: Vec<PointSet> = (0..s.len()).map(|y| s.interior(s.up(y))).collect();
    s.opens().iter().find_map(|&u| {
        u.iter()
            .find(|&x| !u.iter().any(|y| int_up[y].contains(x)))
            .map(|x| (u, x))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::fixtures::*;

    fn all_true(r: &PropertyReport) -> bool {
        r.flags().all(|(_, v)| v)
    }

    #[test]
    fn small_alexandroff_spaces_have_every_property() {
        for s in [chain3(), vee(), diamond(), point(), discrete(2)] {
            let r = check_properties(&s);
            assert!(all_true(&r), "{r:?}");
            assert!(r.witnesses.is_empty());
            assert!(r.is_consistent());
        }
    }

    #[test]
    fn report_json_uses_field_names() {
        let v = serde_json::to_value(check_properties(&chain3())).unwrap();
        for name in FLAG_NAMES {
            assert_eq!(v[name], serde_json::Value::Bool(true), "{name}");
        }
        let back: PropertyReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, check_properties(&chain3()));
    }

    #[test]
    fn witness_display() {
        assert_eq!(Witness::Point("a".into()).to_string(), "point a");
        assert_eq!(Witness::Subset(vec!["a".into(), "b".into()]).to_string(), "set {a, b}");
    }
}
