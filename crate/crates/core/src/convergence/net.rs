//! Concrete nets over finite spaces and their tail classes.

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::space::FiniteSpace;

/// A finite directed preorder, as a reflexive-transitive matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Preorder {
    le: Vec<Vec<bool>>,
}

impl Preorder {
    /// Reflexive-transitive closure of `pairs`; rejects non-directed results.
    pub fn from_pairs(size: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if size == 0 {
            return Err(Error::InvalidNet("empty index set".into()));
        }
        let mut le = vec![vec![false; size]; size];
        for (i, row) in le.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(i, j) in pairs {
            if i >= size || j >= size {
                return Err(Error::InvalidNet(format!("index pair ({i}, {j}) out of range")));
            }
            le[i][j] = true;
        }
        for k in 0..size {
            for i in 0..size {
                if le[i][k] {
                    let via = le[k].clone();
                    for (cell, &step) in le[i].iter_mut().zip(&via) {
                        *cell |= step;
                    }
                }
            }
        }
        let p = Preorder { le };
        if p.top_cluster().is_empty() {
            return Err(Error::NotDirected);
        }
        Ok(p)
    }

    pub fn chain(k: usize) -> Result<Self> {
        let pairs: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
        Self::from_pairs(k, &pairs)
    }

    /// `k` mutually equivalent indices.
    pub fn indiscrete(k: usize) -> Result<Self> {
        let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).collect();
        Self::from_pairs(k, &pairs)
    }

    /// A chain of `prefix` indices below a cluster of `cluster` equivalent ones.
    pub fn prefixed_cluster(prefix: usize, cluster: usize) -> Result<Self> {
        let n = prefix + cluster;
        let mut pairs: Vec<(usize, usize)> = (1..=prefix.min(n.saturating_sub(1))).map(|i| (i - 1, i)).collect();
        for i in prefix..n {
            for j in prefix..n {
                pairs.push((i, j));
            }
        }
        Self::from_pairs(n, &pairs)
    }

    pub fn len(&self) -> usize {
        self.le.len()
    }

    pub fn is_empty(&self) -> bool {
        self.le.is_empty()
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.le[i][j]
    }

    /// Indices above every index. Nonempty exactly when the finite
    /// preorder is directed.
    pub fn top_cluster(&self) -> Vec<usize> {
        let n = self.len();
        (0..n).filter(|&i| (0..n).all(|j| self.le[j][i])).collect()
    }

    /// Restriction to `keep`, renumbered in increasing order.
    fn restrict(&self, keep: &[usize]) -> Result<Self> {
        let pairs: Vec<(usize, usize)> = keep
            .iter()
            .enumerate()
            .flat_map(|(a, &i)| {
                keep.iter()
                    .enumerate()
                    .filter(move |(_, &j)| self.le[i][j])
                    .map(move |(b, _)| (a, b))
            })
            .collect();
        Self::from_pairs(keep.len(), &pairs)
    }
}

/// A net with values in a finite carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConcreteNet {
    /// `ℕ`-indexed: `prefix`, then `cycle` repeated forever.
    Sequence { prefix: Vec<usize>, cycle: Vec<usize> },
    /// Indexed by a finite directed preorder.
    Indexed { index: Preorder, values: Vec<usize> },
    /// The diagonal net `(m, f) ↦ S(m, f(m))` over `D × Π_m E_m` with the
    /// product order, from an outer net on `D` and one inner net per `m`.
    Diagonal {
        outer: Preorder,
        inner: Vec<(Preorder, Vec<usize>)>,
    },
}

impl ConcreteNet {
    pub fn constant(x: usize) -> Self {
        ConcreteNet::Sequence {
            prefix: Vec::new(),
            cycle: vec![x],
        }
    }

    pub fn sequence(prefix: Vec<usize>, cycle: Vec<usize>) -> Result<Self> {
        if cycle.is_empty() {
            return Err(Error::InvalidNet("periodic tail needs at least one value".into()));
        }
        Ok(ConcreteNet::Sequence { prefix, cycle })
    }

    pub fn indexed(index: Preorder, values: Vec<usize>) -> Result<Self> {
        if index.len() != values.len() {
            return Err(Error::InvalidNet(format!(
                "{} indices but {} values",
                index.len(),
                values.len()
            )));
        }
        Ok(ConcreteNet::Indexed { index, values })
    }

    pub fn diagonal(outer: Preorder, inner: Vec<(Preorder, Vec<usize>)>) -> Result<Self> {
        if inner.len() != outer.len() {
            return Err(Error::InvalidNet("one inner net per outer index".into()));
        }
        if inner.iter().any(|(p, v)| p.len() != v.len()) {
            return Err(Error::InvalidNet("inner net has mismatched values".into()));
        }
        Ok(ConcreteNet::Diagonal { outer, inner })
    }

    /// Every value, for range checks.
    pub fn values(&self) -> Vec<usize> {
        match self {
            ConcreteNet::Sequence { prefix, cycle } => prefix.iter().chain(cycle).copied().collect(),
            ConcreteNet::Indexed { values, .. } => values.clone(),
            ConcreteNet::Diagonal { inner, .. } => inner.iter().flat_map(|(_, v)| v.iter().copied()).collect(),
        }
    }

    pub fn check_carrier(&self, n: usize) -> Result<()> {
        match self.values().into_iter().find(|&v| v >= n) {
            Some(v) => Err(Error::UnknownPoint(format!("#{v}"))),
            None => Ok(()),
        }
    }

    /// The `i`-th term of a sequence.
    pub fn term(&self, i: usize) -> Option<usize> {
        match self {
            ConcreteNet::Sequence { prefix, cycle } => Some(if i < prefix.len() {
                prefix[i]
            } else {
                cycle[(i - prefix.len()) % cycle.len()]
            }),
            _ => None,
        }
    }
}

/// The set of cofinally occurring values of a net over a finite space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TailClass(pub(crate) PointSet);

impl TailClass {
    pub fn new(points: PointSet) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(TailClass(points))
    }

    pub fn points(self) -> PointSet {
        self.0
    }

    /// Every tail class over an `n`-point carrier.
    pub fn all(n: usize) -> impl Iterator<Item = TailClass> {
        PointSet::full(n).nonempty_subsets().map(TailClass)
    }
}

pub fn tail_class_of(net: &ConcreteNet) -> TailClass {
    let points = match net {
        ConcreteNet::Sequence { cycle, .. } => cycle.iter().copied().collect(),
        ConcreteNet::Indexed { index, values } => index.top_cluster().into_iter().map(|i| values[i]).collect(),
        ConcreteNet::Diagonal { outer, inner } => outer
            .top_cluster()
            .into_iter()
            .flat_map(|m| {
                let (e, v) = &inner[m];
                e.top_cluster().into_iter().map(move |k| v[k])
            })
            .collect(),
    };
    TailClass(points)
}

/// Direct simulation of `∃ i0 ∀ i ≥ i0. x_i ∈ U`.
pub fn eventually_in(net: &ConcreteNet, u: PointSet) -> bool {
    match net {
        ConcreteNet::Sequence { prefix, cycle } => {
            let (p, c) = (prefix.len(), cycle.len());
            // every start past the prefix repeats one of the first c starts
            (0..=p + c).any(|i0| (i0..i0 + p + 2 * c).all(|i| u.contains(net.term(i).unwrap())))
        }
        ConcreteNet::Indexed { index, values } => {
            (0..index.len()).any(|i0| (0..index.len()).all(|i| !index.le(i0, i) || u.contains(values[i])))
        }
        ConcreteNet::Diagonal { outer, inner } => {
            let elems = diagonal_elements(outer, inner);
            let le = |a: &(usize, Vec<usize>), b: &(usize, Vec<usize>)| {
                outer.le(a.0, b.0) && inner.iter().enumerate().all(|(m, (e, _))| e.le(a.1[m], b.1[m]))
            };
            elems
                .iter()
                .any(|i0| elems.iter().all(|i| !le(i0, i) || u.contains(inner[i.0].1[i.1[i.0]])))
        }
    }
}

/// Points `(m, f)` of `D × Π_m E_m`.
fn diagonal_elements(outer: &Preorder, inner: &[(Preorder, Vec<usize>)]) -> Vec<(usize, Vec<usize>)> {
    let mut fs: Vec<Vec<usize>> = vec![Vec::new()];
    for (e, _) in inner {
        fs = fs
            .into_iter()
            .flat_map(|f| {
                (0..e.len()).map(move |k| {
                    let mut g = f.clone();
                    g.push(k);
                    g
                })
            })
            .collect();
    }
    (0..outer.len())
        .flat_map(|m| fs.iter().map(move |f| (m, f.clone())))
        .collect()
}

/// How a subnet picks indices of its parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selector {
    /// `g(j) = offset + step · j` on `ℕ`.
    Affine { offset: usize, step: usize },
    /// A finite directed index `J` and `g: J → I`.
    Map { index: Preorder, g: Vec<usize> },
}

impl Selector {
    pub fn even() -> Self {
        Selector::Affine { offset: 0, step: 2 }
    }
}

/// `y_j = x_{g(j)}`, with `g` monotone and cofinal.
pub fn subnet(net: &ConcreteNet, selector: &Selector) -> Result<ConcreteNet> {
    match (net, selector) {
        (ConcreteNet::Sequence { prefix, cycle }, Selector::Affine { offset, step }) => {
            if *step == 0 {
                return Err(Error::NotCofinal("constant index selector".into()));
            }
            let (p, c) = (prefix.len(), cycle.len());
            let j0 = (0..).find(|j| offset + step * j >= p).unwrap();
            let y = |j: usize| net.term(offset + step * j).unwrap();
            ConcreteNet::sequence((0..j0).map(y).collect(), (j0..j0 + c).map(y).collect())
        }
        (ConcreteNet::Indexed { index, values }, Selector::Map { index: j, g }) => {
            if g.len() != j.len() || g.iter().any(|&i| i >= index.len()) {
                return Err(Error::InvalidNet("selector does not map into the index".into()));
            }
            for a in 0..j.len() {
                for b in 0..j.len() {
                    if j.le(a, b) && !index.le(g[a], g[b]) {
                        return Err(Error::NotCofinal(format!("selector is not monotone at ({a}, {b})")));
                    }
                }
            }
            if let Some(i) = (0..index.len()).find(|&i| !g.iter().any(|&gi| index.le(i, gi))) {
                return Err(Error::NotCofinal(format!("no selected index above {i}")));
            }
            ConcreteNet::indexed(j.clone(), g.iter().map(|&i| values[i]).collect())
        }
        (ConcreteNet::Sequence { .. }, Selector::Map { .. }) => {
            Err(Error::NotCofinal("a finite index cannot be cofinal in ℕ".into()))
        }
        _ => Err(Error::InvalidNet("selector does not fit this index set".into())),
    }
}

/// The subnet on `J = {j | x_j ≱ y}`; `NotCofinal` when `J` is not.
pub fn divergence_subnet(net: &ConcreteNet, s: &FiniteSpace, y: usize) -> Result<ConcreteNet> {
    let keep = |v: usize| !s.le(y, v);
    match net {
        ConcreteNet::Sequence { prefix, cycle } => {
            let cyc: Vec<usize> = cycle.iter().copied().filter(|&v| keep(v)).collect();
            if cyc.is_empty() {
                return Err(Error::NotCofinal(format!("eventually above {}", s.name(y))));
            }
            ConcreteNet::sequence(prefix.iter().copied().filter(|&v| keep(v)).collect(), cyc)
        }
        ConcreteNet::Indexed { index, values } => {
            let j: Vec<usize> = (0..index.len()).filter(|&i| keep(values[i])).collect();
            if !index.top_cluster().iter().any(|t| j.contains(t)) {
                return Err(Error::NotCofinal(format!("eventually above {}", s.name(y))));
            }
            let sel = Selector::Map {
                index: index.restrict(&j)?,
                g: j,
            };
            subnet(net, &sel)
        }
        ConcreteNet::Diagonal { .. } => Err(Error::InvalidNet(
            "divergence construction expects a sequence or a finite index".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::fixtures::*;

    #[test]
    fn tail_class_examples() {
        assert_eq!(
            tail_class_of(&ConcreteNet::constant(2)).points(),
            PointSet::singleton(2)
        );
        let v = vee();
        let alt = ConcreteNet::sequence(vec![], vec![1, 2]).unwrap();
        assert_eq!(tail_class_of(&alt).points(), v.set_of(&["a", "b"]).unwrap());
        let c = chain3();
        let net = ConcreteNet::sequence(vec![2, 2], vec![0]).unwrap();
        assert_eq!(tail_class_of(&net).points(), c.set_of(&["a"]).unwrap());
    }

    #[test]
    fn simulation_matches_tail_class() {
        let net = ConcreteNet::sequence(vec![0, 1, 3], vec![2, 1]).unwrap();
        for u in PointSet::all_subsets(4) {
            assert_eq!(eventually_in(&net, u), tail_class_of(&net).points().is_subset(u));
        }
        let idx = Preorder::prefixed_cluster(2, 2).unwrap();
        let net = ConcreteNet::indexed(idx, vec![3, 0, 1, 2]).unwrap();
        for u in PointSet::all_subsets(4) {
            assert_eq!(eventually_in(&net, u), tail_class_of(&net).points().is_subset(u));
        }
    }

    #[test]
    fn preorders() {
        assert_eq!(Preorder::chain(3).unwrap().top_cluster(), vec![2]);
        assert_eq!(Preorder::indiscrete(2).unwrap().top_cluster(), vec![0, 1]);
        assert!(matches!(Preorder::from_pairs(2, &[]), Err(Error::NotDirected)));
    }

    #[test]
    fn subnet_selectors() {
        let net = ConcreteNet::sequence(vec![3], vec![0, 1, 2]).unwrap();
        let even = subnet(&net, &Selector::even()).unwrap();
        for j in 0..20 {
            assert_eq!(even.term(j), net.term(2 * j));
        }
        assert!(matches!(
            subnet(&net, &Selector::Affine { offset: 4, step: 0 }),
            Err(Error::NotCofinal(_))
        ));
        let idx = Preorder::chain(3).unwrap();
        let inet = ConcreteNet::indexed(idx, vec![0, 1, 2]).unwrap();
        let sel = Selector::Map {
            index: Preorder::chain(1).unwrap(),
            g: vec![1],
        };
        assert!(matches!(subnet(&inet, &sel), Err(Error::NotCofinal(_))));
    }

    #[test]
    fn divergence_subnet_on_sequences() {
        let c = chain3();
        let net = ConcreteNet::sequence(vec![2], vec![0, 2, 1]).unwrap();
        let j = divergence_subnet(&net, &c, 2).unwrap();
        assert_eq!(tail_class_of(&j).points(), c.set_of(&["a", "b"]).unwrap());
        let net = ConcreteNet::constant(2);
        assert!(divergence_subnet(&net, &c, 1).is_err());
    }

    #[test]
    fn diagonal_tail_and_simulation() {
        let outer = Preorder::prefixed_cluster(1, 2).unwrap();
        let inner = vec![
            (Preorder::chain(1).unwrap(), vec![0]),
            (Preorder::prefixed_cluster(1, 1).unwrap(), vec![0, 1]),
            (Preorder::prefixed_cluster(1, 2).unwrap(), vec![3, 2, 1]),
        ];
        let net = ConcreteNet::diagonal(outer, inner).unwrap();
        let tc = tail_class_of(&net).points();
        assert_eq!(tc, [1, 2].into_iter().collect());
        for u in PointSet::all_subsets(4) {
            assert_eq!(eventually_in(&net, u), tc.is_subset(u));
        }
    }
}
