//! Finite topologies and finite T0-spaces.
//!
//! A [`Topology`] is any family of subsets of `{0, .., n-1}` closed under
//! unions and intersections and containing `∅` and the carrier; it need not
//! be T0. A [`FiniteSpace`] is a T0 topology with point labels. All
//! algorithms run on indices; labels only appear at the edges.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pointset::{PointSet, MAX_POINTS};
use crate::poset::Poset;

/// A topology on a carrier of `n <= 16` points, opens kept sorted by mask.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Topology {
    n: usize,
    opens: Vec<PointSet>,
}

impl Topology {
    /// Closes `generators` under finite unions and intersections and adds
    /// `∅` and the carrier.
    pub fn generated_by(n: usize, generators: &[PointSet]) -> Result<Self> {
        if n > MAX_POINTS {
            return Err(Error::CarrierTooLarge(n));
        }
        let full = PointSet::full(n);
        if let Some(g) = generators.iter().find(|g| !g.is_subset(full)) {
            return Err(Error::NotOpen(format!("{g:?} leaves the carrier")));
        }
        // Minimal neighbourhoods: the intersection of all generators holding x.
        // Finite intersections of generators are unions of these, so closing
        // the family under unions of them gives the full ∪/∩-closure.
        let base: Vec<PointSet> = (0..n)
            .map(|x| {
                generators
                    .iter()
                    .filter(|g| g.contains(x))
                    .fold(full, |acc, g| acc.intersection(*g))
            })
            .collect();
        let mut seen: HashSet<PointSet> = HashSet::from([PointSet::EMPTY]);
        let mut work = vec![PointSet::EMPTY];
        while let Some(u) = work.pop() {
            for b in &base {
                let v = u.union(*b);
                if seen.insert(v) {
                    work.push(v);
                }
            }
        }
        seen.insert(full);
        let mut opens: Vec<PointSet> = seen.into_iter().collect();
        opens.sort();
        Ok(Topology { n, opens })
    }

    /// Takes `opens` verbatim; they must already form a topology.
    pub fn from_family(n: usize, opens: impl IntoIterator<Item = PointSet>) -> Option<Self> {
        let set: BTreeSet<PointSet> = opens.into_iter().collect();
        let t = Topology {
            n,
            opens: set.into_iter().collect(),
        };
        t.is_topology().then_some(t)
    }

    /// `∅`, the carrier, and closure under binary `∪`/`∩`.
    pub fn is_topology(&self) -> bool {
        let full = PointSet::full(self.n);
        self.is_open(PointSet::EMPTY)
            && self.is_open(full)
            && self.opens.iter().all(|u| u.is_subset(full))
            && self.opens.iter().all(|&u| {
                self.opens
                    .iter()
                    .all(|&v| self.is_open(u.union(v)) && self.is_open(u.intersection(v)))
            })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn carrier(&self) -> PointSet {
        PointSet::full(self.n)
    }

    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn is_open(&self, u: PointSet) -> bool {
        self.opens.binary_search(&u).is_ok()
    }

    pub fn is_closed(&self, c: PointSet) -> bool {
        self.is_open(c.complement(self.n))
    }

    pub fn closed_sets(&self) -> impl Iterator<Item = PointSet> + '_ {
        self.opens.iter().map(|u| u.complement(self.n))
    }

    /// Largest open subset of `a`.
    pub fn interior(&self, a: PointSet) -> PointSet {
        self.opens
            .iter()
            .filter(|u| u.is_subset(a))
            .fold(PointSet::EMPTY, |acc, u| acc.union(*u))
    }

    /// Smallest closed superset of `a`.
    pub fn closure(&self, a: PointSet) -> PointSet {
        self.closed_sets()
            .filter(|c| a.is_subset(*c))
            .fold(self.carrier(), |acc, c| acc.intersection(c))
    }

    /// Intersection of all opens containing `x`.
    pub fn min_open_nbhd(&self, x: usize) -> PointSet {
        self.opens
            .iter()
            .filter(|u| u.contains(x))
            .fold(self.carrier(), |acc, u| acc.intersection(*u))
    }

    pub fn is_t0(&self) -> bool {
        self.t0_violation().is_none()
    }

    fn t0_violation(&self) -> Option<(usize, usize)> {
        let nb: Vec<PointSet> = (0..self.n).map(|x| self.min_open_nbhd(x)).collect();
        (0..self.n)
            .flat_map(|x| ((x + 1)..self.n).map(move |y| (x, y)))
            .find(|&(x, y)| nb[x] == nb[y])
    }

    /// `τ ⊆ σ`.
    pub fn is_coarser_than(&self, other: &Topology) -> bool {
        self.n == other.n && self.opens.iter().all(|u| other.is_open(*u))
    }

    /// The topology whose opens lie in both families.
    pub fn meet(&self, other: &Topology) -> Result<Topology> {
        if self.n != other.n {
            return Err(Error::CarrierMismatch(self.n, other.n));
        }
        Ok(Topology {
            n: self.n,
            opens: self.opens.iter().copied().filter(|u| other.is_open(*u)).collect(),
        })
    }

    /// Every topology on `n` points (T0 or not), by filtering set families.
    /// Only sensible for `n <= 3`.
    pub fn enumerate_all(n: usize) -> Result<Vec<Topology>> {
        if n > 3 {
            return Err(Error::TooLarge(n));
        }
        let full = PointSet::full(n);
        let middle: Vec<PointSet> = PointSet::all_subsets(n)
            .filter(|s| !s.is_empty() && *s != full)
            .collect();
        let mut out = Vec::new();
        for pick in 0u64..(1 << middle.len()) {
            let family = middle
                .iter()
                .enumerate()
                .filter(|(i, _)| pick & (1 << i) != 0)
                .map(|(_, s)| *s)
                .chain([PointSet::EMPTY, full]);
            if let Some(t) = Topology::from_family(n, family) {
                out.push(t);
            }
        }
        Ok(out)
    }
}

/// A finite T0-space with user-facing labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteSpace {
    names: Vec<String>,
    topology: Topology,
    order: Poset,
}

impl FiniteSpace {
    /// Closure of `opens` under unions and intersections, with `∅` and the
    /// carrier added; fails unless the result is T0.
    pub fn from_opens(names: &[String], opens: &[PointSet]) -> Result<Self> {
        let names = check_labels(names)?;
        let topology = Topology::generated_by(names.len(), opens)?;
        Self::from_topology(names, topology)
    }

    /// Labels given by string slices; convenient in tests.
    pub fn from_labeled_opens(names: &[&str], opens: &[&[&str]]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let index = |s: &str| {
            names
                .iter()
                .position(|n| n == s)
                .ok_or_else(|| Error::UnknownPoint(s.to_string()))
        };
        let sets = opens
            .iter()
            .map(|o| o.iter().map(|s| index(s)).collect::<Result<PointSet>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_opens(&names, &sets)
    }

    pub fn from_topology(names: Vec<String>, topology: Topology) -> Result<Self> {
        if names.len() != topology.len() {
            return Err(Error::CarrierMismatch(names.len(), topology.len()));
        }
        if let Some((x, y)) = topology.t0_violation() {
            return Err(Error::NotT0(names[x].clone(), names[y].clone()));
        }
        let up = (0..topology.len()).map(|x| topology.min_open_nbhd(x)).collect();
        let order = Poset::from_up_sets_unchecked(up);
        Ok(FiniteSpace { names, topology, order })
    }

    /// All up-sets of `p` as opens. Points are labelled `0, 1, ..`.
    pub fn alexandroff(p: &Poset) -> Self {
        Self::alexandroff_named(p, default_names(p.len()))
    }

    pub fn alexandroff_named(p: &Poset, names: Vec<String>) -> Self {
        let opens = PointSet::all_subsets(p.len()).filter(|s| p.is_up_set(*s));
        let topology = Topology::from_family(p.len(), opens).expect("up-sets form a topology");
        FiniteSpace {
            names,
            topology,
            order: p.clone(),
        }
    }

    /// The topology generated by the complements of principal down-sets.
    pub fn upper_topology(p: &Poset) -> Self {
        let n = p.len();
        let gens: Vec<PointSet> = (0..n).map(|x| p.down(x).complement(n)).collect();
        let topology = Topology::generated_by(n, &gens).expect("carrier within bounds");
        Self::from_topology(default_names(n), topology).expect("upper topology of a poset is T0")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == label)
            .ok_or_else(|| Error::UnknownPoint(label.to_string()))
    }

    pub fn topology(&self) -> &Topology {
        &self.topology
    }

    pub fn opens(&self) -> &[PointSet] {
        self.topology.opens()
    }

    pub fn carrier(&self) -> PointSet {
        self.topology.carrier()
    }

    pub fn is_open(&self, u: PointSet) -> bool {
        self.topology.is_open(u)
    }

    pub fn is_closed(&self, c: PointSet) -> bool {
        self.topology.is_closed(c)
    }

    pub fn closure(&self, a: PointSet) -> PointSet {
        self.topology.closure(a)
    }

    pub fn interior(&self, a: PointSet) -> PointSet {
        self.topology.interior(a)
    }

    pub fn min_open_nbhd(&self, x: usize) -> PointSet {
        self.topology.min_open_nbhd(x)
    }

    /// `x <= y` iff `x ∈ cl{y}`, computed from closures.
    pub fn specialization(&self) -> Poset {
        let n = self.len();
        let mut up = vec![PointSet::EMPTY; n];
        for y in 0..n {
            for x in self.closure(PointSet::singleton(y)).iter() {
                up[x].insert(y);
            }
        }
        Poset::from_up_sets_unchecked(up)
    }

    /// Cached specialization order (equal to [`Self::specialization`]).
    pub fn order(&self) -> &Poset {
        &self.order
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        self.order.le(x, y)
    }

    pub fn up(&self, x: usize) -> PointSet {
        self.order.up(x)
    }

    pub fn down(&self, x: usize) -> PointSet {
        self.order.down(x)
    }

    /// Same labels, different opens (which must stay T0).
    pub fn with_topology(&self, topology: Topology) -> Result<Self> {
        Self::from_topology(self.names.clone(), topology)
    }

    pub fn set_of(&self, labels: &[&str]) -> Result<PointSet> {
        labels.iter().map(|l| self.index_of(l)).collect()
    }

    pub fn labels_of(&self, s: PointSet) -> Vec<String> {
        s.iter().map(|x| self.names[x].clone()).collect()
    }

    pub fn from_json(doc: &SpaceJson) -> Result<Self> {
        let names = check_labels(&doc.points)?;
        let opens = doc
            .opens
            .iter()
            .map(|o| {
                o.iter()
                    .map(|l| {
                        names
                            .iter()
                            .position(|n| n == l)
                            .ok_or_else(|| Error::UnknownPoint(l.clone()))
                    })
                    .collect::<Result<PointSet>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_opens(&names, &opens)
    }

    /// Reads either a space `{"points", "opens"}` or a poset
    /// `{"points", "le"}`, the latter with its Alexandroff topology.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_str(text)?;
        if value.get("le").is_some() {
            let doc: crate::poset::PosetJson = serde_json::from_value(value)?;
            let p = crate::poset::LabeledPoset::from_json(&doc)?;
            Ok(Self::alexandroff_named(&p.order, p.names))
        } else {
            Self::from_json(&serde_json::from_value(value)?)
        }
    }

    pub fn to_json(&self) -> SpaceJson {
        SpaceJson {
            points: self.names.clone(),
            opens: self.opens().iter().map(|u| self.labels_of(*u)).collect(),
        }
    }
}

/// JSON finite-space format: `{"points": [...], "opens": [[...], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SpaceJson {
    pub points: Vec<String>,
    pub opens: Vec<Vec<String>>,
}

pub(crate) fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

pub(crate) fn check_labels(names: &[String]) -> Result<Vec<String>> {
    if names.len() > MAX_POINTS {
        return Err(Error::CarrierTooLarge(names.len()));
    }
    let mut seen = HashSet::new();
    for n in names {
        if !seen.insert(n.as_str()) {
            return Err(Error::DuplicateLabel(n.clone()));
        }
    }
    Ok(names.to_vec())
}

/// Small named spaces used across the test suites.
pub mod fixtures {
    use super::*;

    pub fn names(labels: &[&str]) -> Vec<String> {
        labels.iter().map(|s| s.to_string()).collect()
    }

    /// `a < b < c` with the Alexandroff topology.
    pub fn chain3() -> FiniteSpace {
        FiniteSpace::alexandroff_named(&Poset::chain(3), names(&["a", "b", "c"]))
    }

    /// `⊥ < a`, `⊥ < b`.
    pub fn vee() -> FiniteSpace {
        let p = Poset::from_pairs(3, &[(0, 1), (0, 2)]).unwrap();
        FiniteSpace::alexandroff_named(&p, names(&["bot", "a", "b"]))
    }

    pub fn discrete(n: usize) -> FiniteSpace {
        FiniteSpace::alexandroff(&Poset::antichain(n))
    }

    /// Two points, opens `∅, {1}, X`.
    pub fn sierpinski() -> FiniteSpace {
        FiniteSpace::alexandroff(&Poset::chain(2))
    }

    pub fn point() -> FiniteSpace {
        FiniteSpace::alexandroff(&Poset::chain(1))
    }

    /// `⊥ < a, b < ⊤`.
    pub fn diamond() -> FiniteSpace {
        let p = Poset::from_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        FiniteSpace::alexandroff_named(&p, names(&["bot", "a", "b", "top"]))
    }
}
