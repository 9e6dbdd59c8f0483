//! The irreducibly-derived (SI) topology and its iteration to a fixpoint.

use serde::{Deserialize, Serialize};

use crate::catalog::{CatalogSpace, CatalogStageJson};
use crate::error::{Error, Result};
use crate::irr::irr_plus;
use crate::pointset::PointSet;
use crate::space::{FiniteSpace, SpaceJson, Topology};

/// `U` is SI-open: every `E ∈ Irr⁺` with `⋁E ∈ U` meets `U`.
pub fn is_si_open(s: &FiniteSpace, u: PointSet) -> Result<bool> {
    if !s.is_open(u) {
        return Err(Error::NotOpen(format!("{:?}", s.labels_of(u))));
    }
    Ok(si_open_in(&irr_plus(s), u))
}

fn si_open_in(irr: &[(PointSet, usize)], u: PointSet) -> bool {
    irr.iter().all(|(e, m)| !u.contains(*m) || e.meets(u))
}

/// First open of `s` that is not SI-open.
pub fn non_si_open_witness(s: &FiniteSpace, irr: &[(PointSet, usize)]) -> Option<PointSet> {
    s.opens().iter().copied().find(|u| !si_open_in(irr, *u))
}

/// `τ_SI` as a bare topology.
pub fn si_topology(s: &FiniteSpace) -> Topology {
    let irr = irr_plus(s);
    Topology::from_family(s.len(), s.opens().iter().copied().filter(|u| si_open_in(&irr, *u)))
        .expect("SI-open sets form a topology")
}

/// `SI(X)`: same carrier, only the SI-open sets.
pub fn si_derivative(s: &FiniteSpace) -> FiniteSpace {
    s.with_topology(si_topology(s))
        .expect("SI(X) keeps the specialization order, hence T0")
}

/// `int_SI(A)`.
pub fn si_interior(s: &FiniteSpace, a: PointSet) -> PointSet {
    si_topology(s).interior(a)
}

/// A closed `C` is SI-closed iff every `E ∈ Irr⁺` inside `C` has `⋁E ∈ C`.
pub fn si_closed_check(s: &FiniteSpace, c: PointSet) -> Result<bool> {
    if !s.is_closed(c) {
        return Err(Error::NotClosed(format!("{:?}", s.labels_of(c))));
    }
    Ok(irr_plus(s).iter().all(|(e, m)| !e.is_subset(c) || c.contains(*m)))
}

/// `S_x = {y | x ∈ int_SI(↑y)}`.
pub fn s_set(s: &FiniteSpace, x: usize) -> PointSet {
    let si = si_topology(s);
    (0..s.len()).filter(|&y| si.interior(s.up(y)).contains(x)).collect()
}

/// One stage of the derived-space sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stage {
    Finite(FiniteSpace),
    Catalog(CatalogSpace),
}

impl Stage {
    fn derive(&self, fuel: usize) -> Stage {
        match self {
            Stage::Finite(s) => Stage::Finite(si_derivative(s)),
            Stage::Catalog(c) => Stage::Catalog(c.si_derivative(fuel)),
        }
    }

    /// Limit stage: opens common to every stage given.
    pub fn meet(stages: &[Stage]) -> Option<Stage> {
        let (first, rest) = stages.split_first()?;
        rest.iter().try_fold(first.clone(), |acc, s| match (acc, s) {
            (Stage::Finite(a), Stage::Finite(b)) => a
                .topology()
                .meet(b.topology())
                .ok()
                .and_then(|t| a.with_topology(t).ok())
                .map(Stage::Finite),
            (Stage::Catalog(a), Stage::Catalog(b)) => a.meet(b).map(Stage::Catalog),
            _ => None,
        })
    }

    pub fn to_json(&self) -> StageJson {
        match self {
            Stage::Finite(s) => StageJson::Finite(s.to_json()),
            Stage::Catalog(c) => StageJson::Catalog(c.to_stage_json()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StageJson {
    Finite(SpaceJson),
    Catalog(CatalogStageJson),
}

/// `X⁰, X¹ = SI(X⁰), ..` up to the first repeat.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedSpaceTrace {
    pub stages: Vec<Stage>,
    /// First `k` with `stages[k + 1] == stages[k]`; only meaningful when
    /// `fixpoint_reached`.
    pub gamma: usize,
    pub fixpoint_reached: bool,
}

#[derive(Serialize, Deserialize)]
pub struct TraceJson {
    pub stages: Vec<StageJson>,
    pub gamma: Option<usize>,
    pub fixpoint_reached: bool,
}

impl DerivedSpaceTrace {
    pub fn fixpoint(&self) -> Option<&Stage> {
        self.fixpoint_reached.then(|| &self.stages[self.gamma])
    }

    pub fn to_json(&self) -> TraceJson {
        TraceJson {
            stages: self.stages.iter().map(Stage::to_json).collect(),
            gamma: self.fixpoint_reached.then_some(self.gamma),
            fixpoint_reached: self.fixpoint_reached,
        }
    }
}

/// Applies SI at most `fuel` times, stopping at the first fixpoint.
///
/// `fuel` also bounds the witness search used by catalog stages.
pub fn si_iterate(start: &Stage, fuel: usize) -> Result<DerivedSpaceTrace> {
    let fuel = fuel.max(1);
    let probe_fuel = fuel.max(crate::catalog::DEFAULT_FUEL);
    let mut stages = vec![start.clone()];
    for k in 0..fuel {
        let next = stages[k].derive(probe_fuel);
        let done = next == stages[k];
        stages.push(next);
        if done {
            return Ok(DerivedSpaceTrace {
                stages,
                gamma: k,
                fixpoint_reached: true,
            });
        }
    }
    let gamma = stages.len() - 1;
    Err(Error::FuelExhausted {
        fuel,
        partial: Box::new(DerivedSpaceTrace {
            stages,
            gamma,
            fixpoint_reached: false,
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::fixtures::*;

    #[test]
    fn si_open_examples() {
        let c = chain3();
        assert!(is_si_open(&c, c.set_of(&["c"]).unwrap()).unwrap());
        assert!(is_si_open(&c, PointSet::EMPTY).unwrap());
        assert!(matches!(
            is_si_open(&c, c.set_of(&["a"]).unwrap()),
            Err(Error::NotOpen(_))
        ));
    }

    #[test]
    fn finite_derivative_is_identity() {
        for s in [chain3(), vee(), diamond(), discrete(2), point()] {
            assert_eq!(si_derivative(&s), s);
        }
    }

    #[test]
    fn finite_iteration_stops_at_zero() {
        let t = si_iterate(&Stage::Finite(chain3()), 3).unwrap();
        assert!(t.fixpoint_reached);
        assert_eq!(t.gamma, 0);
        assert_eq!(t.stages.len(), 2);
        let t = si_iterate(&Stage::Finite(point()), 1).unwrap();
        assert_eq!(t.gamma, 0);
    }

    #[test]
    fn si_closed_examples() {
        let c = chain3();
        assert!(si_closed_check(&c, c.set_of(&["a", "b"]).unwrap()).unwrap());
        assert!(si_closed_check(&c, c.carrier()).unwrap());
        assert!(matches!(
            si_closed_check(&c, c.set_of(&["c"]).unwrap()),
            Err(Error::NotClosed(_))
        ));
    }

    #[test]
    fn s_set_examples() {
        let c = chain3();
        assert_eq!(s_set(&c, 2), c.carrier());
        assert_eq!(s_set(&c, 0), PointSet::singleton(0));
        assert_eq!(s_set(&point(), 0), PointSet::singleton(0));
    }

    #[test]
    fn meet_of_finite_stages() {
        let a = Stage::Finite(chain3());
        assert_eq!(Stage::meet(&[a.clone(), a.clone()]), Some(a));
    }
}
