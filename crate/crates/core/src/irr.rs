//! Irreducible sets, suprema and the Irr-way-below relation on finite spaces.

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::poset::Poset;
use crate::space::FiniteSpace;

/// Open-set test: every two opens meeting `E` also meet inside `E`.
pub fn is_irreducible(s: &FiniteSpace, e: PointSet) -> Result<bool> {
    if e.is_empty() {
        return Err(Error::EmptySet);
    }
    let meeting: Vec<PointSet> = s.opens().iter().copied().filter(|u| u.meets(e)).collect();
    Ok(meeting
        .iter()
        .all(|u1| meeting.iter().all(|u2| u1.intersection(*u2).meets(e))))
}

/// Closed-set test: `E ⊆ A1 ∪ A2` forces `E ⊆ A1` or `E ⊆ A2`.
pub fn is_irreducible_by_closed_sets(s: &FiniteSpace, e: PointSet) -> Result<bool> {
    if e.is_empty() {
        return Err(Error::EmptySet);
    }
    let closed: Vec<PointSet> = s.topology().closed_sets().collect();
    Ok(closed.iter().all(|a1| {
        closed
            .iter()
            .all(|a2| !e.is_subset(a1.union(*a2)) || e.is_subset(*a1) || e.is_subset(*a2))
    }))
}

/// Finite shortcut: `E` is irreducible iff it has a greatest element.
pub fn irreducible_has_greatest_fastpath(s: &FiniteSpace, e: PointSet) -> Result<bool> {
    if e.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(s.order().greatest_of(e).is_some())
}

/// Least upper bound in the specialization order.
pub fn sup(s: &FiniteSpace, a: PointSet) -> Option<usize> {
    s.order().sup(a)
}

/// `Irr⁺`: irreducible subsets paired with their suprema, in mask order.
pub fn irr_plus(s: &FiniteSpace) -> Vec<(PointSet, usize)> {
    s.carrier()
        .nonempty_subsets()
        .filter(|e| s.order().greatest_of(*e).is_some())
        .filter_map(|e| sup(s, e).map(|m| (e, m)))
        .collect()
}

/// `x ≪_Irr y`: every `E ∈ Irr⁺` with `⋁E ≥ y` meets `↑x`.
pub fn way_below_irr(s: &FiniteSpace, x: usize, y: usize) -> bool {
    way_below_in(s, &irr_plus(s), x, y)
}

/// Same as [`way_below_irr`] with a precomputed `Irr⁺`.
pub fn way_below_in(s: &FiniteSpace, irr: &[(PointSet, usize)], x: usize, y: usize) -> bool {
    let upx = s.up(x);
    irr.iter().filter(|(_, m)| s.le(y, *m)).all(|(e, _)| e.meets(upx))
}

/// The `≪_Irr` relation as rows: `rel[y]` is `↡y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WayBelow {
    below: Vec<PointSet>,
    above: Vec<PointSet>,
}

impl WayBelow {
    pub fn compute(s: &FiniteSpace) -> Self {
        Self::from_irr_plus(s, &irr_plus(s))
    }

    pub fn from_irr_plus(s: &FiniteSpace, irr: &[(PointSet, usize)]) -> Self {
        let n = s.len();
        let mut below = vec![PointSet::EMPTY; n];
        let mut above = vec![PointSet::EMPTY; n];
        for (x, up) in above.iter_mut().enumerate() {
            for (y, down) in below.iter_mut().enumerate() {
                if way_below_in(s, irr, x, y) {
                    down.insert(x);
                    up.insert(y);
                }
            }
        }
        WayBelow { below, above }
    }

    pub fn holds(&self, x: usize, y: usize) -> bool {
        self.below[y].contains(x)
    }

    /// `↡y = {x | x ≪_Irr y}`.
    pub fn dd(&self, y: usize) -> PointSet {
        self.below[y]
    }

    /// `↟x = {y | x ≪_Irr y}`.
    pub fn uu(&self, x: usize) -> PointSet {
        self.above[x]
    }

    /// `M_x = ⋃{↡y | y ≪_Irr x}`.
    pub fn m_set(&self, x: usize) -> PointSet {
        self.below[x]
            .iter()
            .fold(PointSet::EMPTY, |acc, y| acc.union(self.below[y]))
    }
}

pub fn dd_arrow(s: &FiniteSpace, x: usize) -> PointSet {
    WayBelow::compute(s).dd(x)
}

pub fn uu_arrow(s: &FiniteSpace, x: usize) -> PointSet {
    WayBelow::compute(s).uu(x)
}

pub fn m_set(s: &FiniteSpace, x: usize) -> PointSet {
    WayBelow::compute(s).m_set(x)
}

/// Whenever `z ≪ x` there is `y` with `z ≪ y ≪ x`.
pub fn interpolation_holds(s: &FiniteSpace) -> bool {
    interpolation_witness(s, &WayBelow::compute(s)).is_none()
}

/// First pair `(z, x)` with `z ≪ x` admitting no interpolant.
pub fn interpolation_witness(s: &FiniteSpace, wb: &WayBelow) -> Option<(usize, usize)> {
    let n = s.len();
    (0..n)
        .flat_map(|x| wb.dd(x).iter().map(move |z| (z, x)))
        .find(|&(z, x)| !(0..n).any(|y| wb.holds(z, y) && wb.holds(y, x)))
}

/// Pairwise upper bounds inside `D`.
pub fn is_directed(p: &Poset, d: PointSet) -> Result<bool> {
    p.is_directed(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::fixtures::*;

    fn set(s: &FiniteSpace, l: &[&str]) -> PointSet {
        s.set_of(l).unwrap()
    }

    #[test]
    fn irreducibility_examples() {
        let c = chain3();
        assert!(is_irreducible(&c, set(&c, &["a", "c"])).unwrap());
        let v = vee();
        assert!(!is_irreducible(&v, set(&v, &["a", "b"])).unwrap());
        for x in 0..3 {
            assert!(is_irreducible(&v, PointSet::singleton(x)).unwrap());
        }
        assert!(matches!(is_irreducible(&v, PointSet::EMPTY), Err(Error::EmptySet)));
    }

    #[test]
    fn fastpath_examples() {
        let c = chain3();
        assert_eq!(
            c.carrier()
                .nonempty_subsets()
                .filter(|e| irreducible_has_greatest_fastpath(&c, *e).unwrap())
                .count(),
            7
        );
        let v = vee();
        assert!(!irreducible_has_greatest_fastpath(&v, set(&v, &["a", "b"])).unwrap());
        assert!(irreducible_has_greatest_fastpath(&v, set(&v, &["bot", "a"])).unwrap());
        assert!(irreducible_has_greatest_fastpath(&v, PointSet::EMPTY).is_err());
    }

    #[test]
    fn closed_set_definition_agrees() {
        for s in [chain3(), vee(), diamond(), discrete(3), sierpinski()] {
            for e in s.carrier().nonempty_subsets() {
                assert_eq!(
                    is_irreducible(&s, e).unwrap(),
                    is_irreducible_by_closed_sets(&s, e).unwrap()
                );
            }
        }
    }

    #[test]
    fn sup_examples() {
        let v = vee();
        assert_eq!(sup(&v, set(&v, &["a", "b"])), None);
        let c = chain3();
        assert_eq!(sup(&c, set(&c, &["a", "b"])), Some(1));
        assert_eq!(sup(&c, PointSet::singleton(2)), Some(2));
    }

    #[test]
    fn irr_plus_examples() {
        assert_eq!(irr_plus(&chain3()).len(), 7);
        let v = vee();
        let got: Vec<PointSet> = irr_plus(&v).into_iter().map(|(e, _)| e).collect();
        let mut want = vec![
            set(&v, &["bot"]),
            set(&v, &["a"]),
            set(&v, &["b"]),
            set(&v, &["bot", "a"]),
            set(&v, &["bot", "b"]),
        ];
        want.sort();
        assert_eq!(got, want);
        assert_eq!(irr_plus(&point()).len(), 1);
        for (e, m) in irr_plus(&diamond()) {
            assert!(e.contains(m));
        }
    }

    #[test]
    fn way_below_examples() {
        let c = chain3();
        assert!(way_below_irr(&c, 0, 2));
        let v = vee();
        assert!(!way_below_irr(&v, 1, 0));
        for s in [chain3(), vee(), diamond()] {
            for x in 0..s.len() {
                if s.up(x) == PointSet::singleton(x) {
                    assert!(way_below_irr(&s, x, x));
                }
            }
        }
    }

    #[test]
    fn arrows_and_m_set_examples() {
        let c = chain3();
        assert_eq!(dd_arrow(&c, 2), c.carrier());
        assert_eq!(m_set(&c, 2), c.carrier());
        let v = vee();
        assert_eq!(dd_arrow(&v, 1), set(&v, &["bot", "a"]));
        assert_eq!(uu_arrow(&v, 1), set(&v, &["a"]));
        assert_eq!(m_set(&v, 1), set(&v, &["bot", "a"]));
        assert_eq!(m_set(&point(), 0), PointSet::singleton(0));
    }

    #[test]
    fn interpolation_examples() {
        assert!(interpolation_holds(&chain3()));
        assert!(interpolation_holds(&point()));
        assert!(interpolation_holds(&diamond()));
    }

    #[test]
    fn directed_examples() {
        let c = crate::poset::Poset::chain(3);
        assert!(is_directed(&c, [0, 2].into_iter().collect()).unwrap());
        let v = vee();
        assert!(!is_directed(v.order(), set(&v, &["a", "b"])).unwrap());
        assert!(is_directed(v.order(), set(&v, &["a"])).unwrap());
    }
}
