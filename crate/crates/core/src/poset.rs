//! Finite partial orders over index carriers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pointset::{PointSet, MAX_POINTS};

/// A partial order on `{0, .., n-1}`, stored as principal up-sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poset {
    up: Vec<PointSet>,
    down: Vec<PointSet>,
}

impl Poset {
    /// Builds a poset from its principal up-sets (`up[x] = {y | x <= y}`),
    /// checking reflexivity, antisymmetry and transitivity.
    pub fn from_up_sets(up: Vec<PointSet>) -> Result<Self> {
        let n = up.len();
        if n > MAX_POINTS {
            return Err(Error::CarrierTooLarge(n));
        }
        for x in 0..n {
            if !up[x].contains(x) {
                return Err(Error::InvalidPoset(format!("{x} is not below itself")));
            }
            if !up[x].is_subset(PointSet::full(n)) {
                return Err(Error::InvalidPoset(format!("row {x} leaves the carrier")));
            }
            for y in up[x].iter() {
                if y != x && up[y].contains(x) {
                    return Err(Error::InvalidPoset(format!("{x} and {y} form a cycle")));
                }
                if !up[y].is_subset(up[x]) {
                    return Err(Error::InvalidPoset(format!("not transitive through {x} <= {y}")));
                }
            }
        }
        Ok(Self::from_up_sets_unchecked(up))
    }

    pub(crate) fn from_up_sets_unchecked(up: Vec<PointSet>) -> Self {
        let n = up.len();
        let mut down = vec![PointSet::EMPTY; n];
        for (x, row) in up.iter().enumerate() {
            for y in row.iter() {
                down[y].insert(x);
            }
        }
        Poset { up, down }
    }

    /// Builds a poset from a list of `(x, y)` pairs meaning `x <= y`.
    /// Reflexive and transitive closure is taken; the result must be antisymmetric.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_POINTS {
            return Err(Error::CarrierTooLarge(n));
        }
        let mut up: Vec<PointSet> = (0..n).map(PointSet::singleton).collect();
        for &(x, y) in pairs {
            if x >= n || y >= n {
                return Err(Error::InvalidPoset(format!("pair ({x}, {y}) outside carrier")));
            }
            up[x].insert(y);
        }
        // Warshall on bitmasks
        for k in 0..n {
            for x in 0..n {
                if up[x].contains(k) {
                    up[x] = up[x].union(up[k]);
                }
            }
        }
        Self::from_up_sets(up)
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_up_sets_unchecked((0..n).map(PointSet::singleton).collect())
    }

    /// `0 < 1 < .. < n-1`.
    pub fn chain(n: usize) -> Self {
        let full = PointSet::full(n);
        Self::from_up_sets_unchecked((0..n).map(|x| full.difference(PointSet::full(x))).collect())
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn up(&self, x: usize) -> PointSet {
        self.up[x]
    }

    pub fn down(&self, x: usize) -> PointSet {
        self.down[x]
    }

    pub fn up_sets(&self) -> &[PointSet] {
        &self.up
    }

    pub fn carrier(&self) -> PointSet {
        PointSet::full(self.len())
    }

    /// `↑A`.
    pub fn up_closure(&self, a: PointSet) -> PointSet {
        a.iter().fold(PointSet::EMPTY, |acc, x| acc.union(self.up[x]))
    }

    /// `↓A`.
    pub fn down_closure(&self, a: PointSet) -> PointSet {
        a.iter().fold(PointSet::EMPTY, |acc, x| acc.union(self.down[x]))
    }

    pub fn is_up_set(&self, a: PointSet) -> bool {
        self.up_closure(a) == a
    }

    /// Upper bounds of `A` (the whole carrier when `A` is empty).
    pub fn upper_bounds(&self, a: PointSet) -> PointSet {
        a.iter().fold(self.carrier(), |acc, x| acc.intersection(self.up[x]))
    }

    pub fn lower_bounds(&self, a: PointSet) -> PointSet {
        a.iter().fold(self.carrier(), |acc, x| acc.intersection(self.down[x]))
    }

    /// Least element of `A`, if `A` has one.
    pub fn least_of(&self, a: PointSet) -> Option<usize> {
        a.iter().find(|&x| a.is_subset(self.up[x]))
    }

    pub fn greatest_of(&self, a: PointSet) -> Option<usize> {
        a.iter().find(|&x| a.is_subset(self.down[x]))
    }

    /// Least upper bound of `A`; for empty `A` this is the bottom element if any.
    pub fn sup(&self, a: PointSet) -> Option<usize> {
        self.least_of(self.upper_bounds(a))
    }

    pub fn inf(&self, a: PointSet) -> Option<usize> {
        self.greatest_of(self.lower_bounds(a))
    }

    /// Every pair of members has an upper bound inside the set.
    pub fn is_directed(&self, d: PointSet) -> Result<bool> {
        if d.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(d.iter()
            .all(|x| d.iter().all(|y| self.up[x].intersection(self.up[y]).meets(d))))
    }

    /// Pairs `(x, y)` with `x < y` and nothing strictly between them.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            let strict = self.up[x].difference(PointSet::singleton(x));
            for y in strict.iter() {
                let between = strict.difference(PointSet::singleton(y)).iter().any(|z| self.le(z, y));
                if !between {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Relabels points: `perm[x]` is the new index of old point `x`.
    pub fn permute(&self, perm: &[usize]) -> Poset {
        let n = self.len();
        let mut up = vec![PointSet::EMPTY; n];
        for x in 0..n {
            up[perm[x]] = self.up[x].iter().map(|y| perm[y]).collect();
        }
        Poset::from_up_sets_unchecked(up)
    }
}

/// JSON poset format: `{"points": [...], "le": [["a", "b"], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PosetJson {
    pub points: Vec<String>,
    pub le: Vec<(String, String)>,
}

/// A poset together with user-facing point labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledPoset {
    pub names: Vec<String>,
    pub order: Poset,
}

impl LabeledPoset {
    pub fn from_json(doc: &PosetJson) -> Result<Self> {
        let names = crate::space::check_labels(&doc.points)?;
        let index = |s: &str| {
            names
                .iter()
                .position(|n| n == s)
                .ok_or_else(|| Error::UnknownPoint(s.to_string()))
        };
        let pairs = doc
            .le
            .iter()
            .map(|(a, b)| Ok((index(a)?, index(b)?)))
            .collect::<Result<Vec<_>>>()?;
        let order = Poset::from_pairs(names.len(), &pairs)?;
        Ok(LabeledPoset { names, order })
    }

    /// Emits the covering pairs only; reflexive/transitive pairs are implied.
    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            points: self.names.clone(),
            le: self
                .order
                .covers()
                .into_iter()
                .map(|(x, y)| (self.names[x].clone(), self.names[y].clone()))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs_are_closed_transitively() {
        let p = Poset::from_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.le(0, 2));
        assert_eq!(p, Poset::chain(3));
    }

    #[test]
    fn cycles_are_rejected() {
        let err = Poset::from_pairs(2, &[(0, 1), (1, 0)]).unwrap_err();
        assert!(matches!(err, Error::InvalidPoset(_)));
    }

    #[test]
    fn sup_of_empty_set_is_bottom() {
        let v = Poset::from_pairs(3, &[(0, 1), (0, 2)]).unwrap();
        assert_eq!(v.sup(PointSet::EMPTY), Some(0));
        assert_eq!(v.sup([1, 2].into_iter().collect()), None);
        assert_eq!(Poset::antichain(2).sup(PointSet::EMPTY), None);
    }

    #[test]
    fn covers_of_chain() {
        assert_eq!(Poset::chain(3).covers(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn directedness() {
        let c = Poset::chain(3);
        assert!(c.is_directed([0, 2].into_iter().collect()).unwrap());
        let v = Poset::from_pairs(3, &[(0, 1), (0, 2)]).unwrap();
        assert!(!v.is_directed([1, 2].into_iter().collect()).unwrap());
        assert!(v.is_directed(PointSet::singleton(2)).unwrap());
        assert!(matches!(v.is_directed(PointSet::EMPTY), Err(Error::EmptySet)));
    }
}
