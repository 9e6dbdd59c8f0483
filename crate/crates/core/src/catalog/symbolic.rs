//! Points, open sets and described subsets of the catalogued infinite spaces.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;

pub type Rational = Ratio<i64>;

/// A point of one of the catalogued carriers.
///
/// `Nat` serves the naturals of the cofinite space, the finite ordinals of
/// `ω+1` and the chain `1 ≤ 2 ≤ ..` inside the poset `T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CatalogPoint {
    Nat(u64),
    Infinity,
    Bottom,
    Top,
    A,
    Rational(Rational),
}

impl fmt::Display for CatalogPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogPoint::Nat(n) => write!(f, "{n}"),
            CatalogPoint::Infinity => f.write_str("∞"),
            CatalogPoint::Bottom => f.write_str("⊥"),
            CatalogPoint::Top => f.write_str("⊤"),
            CatalogPoint::A => f.write_str("a"),
            CatalogPoint::Rational(q) => write!(f, "{q}"),
        }
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Ratio::new(n, d)
}

pub fn q(n: i64, d: i64) -> CatalogPoint {
    CatalogPoint::Rational(rat(n, d))
}

/// Parses `3`, `-1/2`, `0.25`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let d: i64 = d.trim().parse().ok()?;
        if d == 0 {
            return None;
        }
        return Some(Ratio::new(n.trim().parse().ok()?, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) || frac.len() > 12 {
            return None;
        }
        let neg = int.starts_with('-');
        let whole: i64 = if int == "-" || int.is_empty() {
            0
        } else {
            int.parse().ok()?
        };
        let den = 10i64.pow(frac.len() as u32);
        let f: i64 = frac.parse().ok()?;
        let num = whole.abs() * den + f;
        return Some(Ratio::new(if neg { -num } else { num }, den));
    }
    Some(Ratio::from_integer(s.parse().ok()?))
}

/// The infinite piece of a described subset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InfinitePart {
    /// `{n, n+1, ..}` among the `Nat` points.
    NatTail(u64),
    /// `{q - 1/k | k ≥ 1}`.
    RatIncreasing(Rational),
    /// `(-∞, q) ∩ ℚ`.
    RatBelow(Rational),
    /// `(-∞, q] ∩ ℚ`.
    RatAtMost(Rational),
    /// `[q, ∞) ∩ ℚ`.
    RatAtLeast(Rational),
    /// `(q, ∞) ∩ ℚ`.
    RatAbove(Rational),
    RatAll,
}

impl InfinitePart {
    pub fn contains(&self, p: &CatalogPoint) -> bool {
        match (self, p) {
            (InfinitePart::NatTail(n), CatalogPoint::Nat(k)) => k >= n,
            (InfinitePart::RatIncreasing(q), CatalogPoint::Rational(x)) => {
                // x = q - 1/k for some integer k >= 1
                let gap = q - x;
                gap > Ratio::from_integer(0) && gap <= Ratio::from_integer(1) && gap.numer() == &1
            }
            (InfinitePart::RatBelow(q), CatalogPoint::Rational(x)) => x < q,
            (InfinitePart::RatAtMost(q), CatalogPoint::Rational(x)) => x <= q,
            (InfinitePart::RatAtLeast(q), CatalogPoint::Rational(x)) => x >= q,
            (InfinitePart::RatAbove(q), CatalogPoint::Rational(x)) => x > q,
            (InfinitePart::RatAll, CatalogPoint::Rational(_)) => true,
            _ => false,
        }
    }

    /// The first `k` members in a fixed enumeration.
    pub fn sample(&self, k: usize) -> Vec<CatalogPoint> {
        let k = k.max(1) as i64;
        let r = CatalogPoint::Rational;
        let one = |j: i64| rat(1, j);
        match *self {
            InfinitePart::NatTail(n) => (0..k as u64).map(|i| CatalogPoint::Nat(n + i)).collect(),
            InfinitePart::RatIncreasing(q) => (1..=k).map(|j| r(q - one(j))).collect(),
            InfinitePart::RatBelow(q) => (1..=k).map(|j| r(q - one(j))).chain([r(q - 7)]).collect(),
            InfinitePart::RatAtMost(q) => std::iter::once(r(q)).chain((1..=k).map(|j| r(q - one(j)))).collect(),
            InfinitePart::RatAtLeast(q) => std::iter::once(r(q)).chain((1..=k).map(|j| r(q + one(j)))).collect(),
            InfinitePart::RatAbove(q) => (1..=k).map(|j| r(q + one(j))).chain([r(q + 7)]).collect(),
            InfinitePart::RatAll => (-k..=k).map(|j| r(Ratio::from_integer(j))).collect(),
        }
    }
}

impl fmt::Display for InfinitePart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InfinitePart::NatTail(n) => write!(f, "{{{n}, {}, ..}}", n + 1),
            InfinitePart::RatIncreasing(q) => write!(f, "{{{q} - 1/k | k ≥ 1}}"),
            InfinitePart::RatBelow(q) => write!(f, "(-∞, {q})"),
            InfinitePart::RatAtMost(q) => write!(f, "(-∞, {q}]"),
            InfinitePart::RatAtLeast(q) => write!(f, "[{q}, ∞)"),
            InfinitePart::RatAbove(q) => write!(f, "({q}, ∞)"),
            InfinitePart::RatAll => f.write_str("ℚ"),
        }
    }
}

/// A finite set of points plus at most one infinite piece.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DescribedSet {
    pub finite: BTreeSet<CatalogPoint>,
    pub infinite: Option<InfinitePart>,
}

impl DescribedSet {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn finite(points: impl IntoIterator<Item = CatalogPoint>) -> Self {
        DescribedSet {
            finite: points.into_iter().collect(),
            infinite: None,
        }
    }

    pub fn infinite(part: InfinitePart) -> Self {
        DescribedSet {
            finite: BTreeSet::new(),
            infinite: Some(part),
        }
    }

    pub fn with_points(mut self, points: impl IntoIterator<Item = CatalogPoint>) -> Self {
        self.finite.extend(points);
        self
    }

    pub fn is_empty(&self) -> bool {
        self.finite.is_empty() && self.infinite.is_none()
    }

    pub fn contains(&self, p: &CatalogPoint) -> bool {
        self.finite.contains(p) || self.infinite.is_some_and(|i| i.contains(p))
    }

    /// Finite members followed by `k` members of the infinite piece.
    pub fn sample(&self, k: usize) -> Vec<CatalogPoint> {
        let mut out: Vec<CatalogPoint> = self.finite.iter().copied().collect();
        if let Some(i) = self.infinite {
            out.extend(i.sample(k).into_iter().filter(|p| !self.finite.contains(p)));
        }
        out
    }
}

impl fmt::Display for DescribedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fin: Vec<String> = self.finite.iter().map(|p| p.to_string()).collect();
        match (fin.is_empty(), self.infinite) {
            (true, None) => f.write_str("∅"),
            (false, None) => write!(f, "{{{}}}", fin.join(", ")),
            (true, Some(i)) => write!(f, "{i}"),
            (false, Some(i)) => write!(f, "{{{}}} ∪ {i}", fin.join(", ")),
        }
    }
}

/// The shape of a family of opens; catalog topologies are sets of these.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OpenSchema {
    Empty,
    Full,
    /// `ℕ ∖ F`, `F` finite nonempty.
    Cofinite,
    /// `[n, ∞]` in `ω+1`, `n ≥ 1`.
    UpRay,
    /// `{∞}` in `ω+1`.
    TopSingleton,
    /// Up-sets of `T` without chain members: `{⊤}`, `{a, ⊤}`.
    TUpperNoTail,
    /// Up-sets of `T` with a chain tail.
    TUpperWithTail,
    /// `(q, ∞) ∩ ℚ`.
    RationalRay,
}

impl OpenSchema {
    pub fn name(self) -> &'static str {
        match self {
            OpenSchema::Empty => "empty",
            OpenSchema::Full => "full",
            OpenSchema::Cofinite => "cofinite",
            OpenSchema::UpRay => "up-ray",
            OpenSchema::TopSingleton => "top-singleton",
            OpenSchema::TUpperNoTail => "t-upper-no-tail",
            OpenSchema::TUpperWithTail => "t-upper-with-tail",
            OpenSchema::RationalRay => "rational-right-ray",
        }
    }
}

/// A single open set, with canonical payload.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SymbolicOpen {
    Empty,
    Full,
    /// Stores the excluded finite set.
    CofiniteComplement(BTreeSet<u64>),
    UpRay(u64),
    TopSingleton,
    /// `{⊤}`, optionally `a`, optionally the chain from `tail_start` on.
    /// Up-sets holding `⊥` are `Full`.
    UpSetOfT {
        with_a: bool,
        tail_start: Option<u64>,
    },
    RationalRightRay(Rational),
}

impl SymbolicOpen {
    /// Canonical constructors.
    pub fn cofinite(excluded: impl IntoIterator<Item = u64>) -> Self {
        let ex: BTreeSet<u64> = excluded.into_iter().collect();
        if ex.is_empty() {
            SymbolicOpen::Full
        } else {
            SymbolicOpen::CofiniteComplement(ex)
        }
    }

    pub fn up_ray(n: u64) -> Self {
        if n == 0 {
            SymbolicOpen::Full
        } else {
            SymbolicOpen::UpRay(n)
        }
    }

    pub fn t_upper(with_a: bool, tail_start: Option<u64>) -> Self {
        SymbolicOpen::UpSetOfT {
            with_a,
            tail_start: tail_start.map(|k| k.max(1)),
        }
    }

    pub fn schema(&self) -> OpenSchema {
        match self {
            SymbolicOpen::Empty => OpenSchema::Empty,
            SymbolicOpen::Full => OpenSchema::Full,
            SymbolicOpen::CofiniteComplement(_) => OpenSchema::Cofinite,
            SymbolicOpen::UpRay(_) => OpenSchema::UpRay,
            SymbolicOpen::TopSingleton => OpenSchema::TopSingleton,
            SymbolicOpen::UpSetOfT { tail_start: None, .. } => OpenSchema::TUpperNoTail,
            SymbolicOpen::UpSetOfT { .. } => OpenSchema::TUpperWithTail,
            SymbolicOpen::RationalRightRay(_) => OpenSchema::RationalRay,
        }
    }

    /// Membership; `Full` is relative to whichever carrier the point lives in.
    pub fn contains(&self, p: &CatalogPoint) -> bool {
        use CatalogPoint as P;
        match (self, p) {
            (SymbolicOpen::Empty, _) => false,
            (SymbolicOpen::Full, _) => true,
            (SymbolicOpen::CofiniteComplement(ex), P::Nat(n)) => !ex.contains(n),
            (SymbolicOpen::UpRay(k), P::Nat(n)) => n >= k,
            (SymbolicOpen::UpRay(_), P::Infinity) => true,
            (SymbolicOpen::TopSingleton, P::Infinity) => true,
            (SymbolicOpen::UpSetOfT { .. }, P::Top) => true,
            (SymbolicOpen::UpSetOfT { with_a, .. }, P::A) => *with_a,
            (SymbolicOpen::UpSetOfT { tail_start, .. }, P::Nat(n)) => tail_start.is_some_and(|k| *n >= k),
            (SymbolicOpen::RationalRightRay(q), P::Rational(x)) => x > q,
            _ => false,
        }
    }

    /// `U ∩ V`, for opens of the same family.
    pub fn intersect(&self, other: &SymbolicOpen) -> SymbolicOpen {
        use SymbolicOpen as O;
        match (self, other) {
            (O::Empty, _) | (_, O::Empty) => O::Empty,
            (O::Full, x) | (x, O::Full) => x.clone(),
            (O::CofiniteComplement(a), O::CofiniteComplement(b)) => O::cofinite(a.iter().chain(b.iter()).copied()),
            (O::UpRay(a), O::UpRay(b)) => O::up_ray(*a.max(b)),
            (O::UpRay(_), O::TopSingleton) | (O::TopSingleton, O::UpRay(_)) | (O::TopSingleton, O::TopSingleton) => {
                O::TopSingleton
            }
            (
                O::UpSetOfT {
                    with_a: a1,
                    tail_start: t1,
                },
                O::UpSetOfT {
                    with_a: a2,
                    tail_start: t2,
                },
            ) => O::t_upper(
                *a1 && *a2,
                match (t1, t2) {
                    (Some(x), Some(y)) => Some(*x.max(y)),
                    _ => None,
                },
            ),
            (O::RationalRightRay(p), O::RationalRightRay(q)) => O::RationalRightRay(*p.max(q)),
            (a, b) => panic!("intersection across families: {a} / {b}"),
        }
    }
}

impl fmt::Display for SymbolicOpen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymbolicOpen::Empty => f.write_str("∅"),
            SymbolicOpen::Full => f.write_str("X"),
            SymbolicOpen::CofiniteComplement(ex) => {
                let v: Vec<String> = ex.iter().map(|n| n.to_string()).collect();
                write!(f, "ℕ ∖ {{{}}}", v.join(", "))
            }
            SymbolicOpen::UpRay(n) => write!(f, "[{n}, ∞]"),
            SymbolicOpen::TopSingleton => f.write_str("{∞}"),
            SymbolicOpen::UpSetOfT { with_a, tail_start } => {
                let mut parts = vec!["⊤".to_string()];
                if *with_a {
                    parts.push("a".into());
                }
                if let Some(k) = tail_start {
                    parts.push(format!("{k}, {}, ..", k + 1));
                }
                write!(f, "{{{}}}", parts.join(", "))
            }
            SymbolicOpen::RationalRightRay(q) => write!(f, "({q}, ∞)"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_parse() {
        assert_eq!(parse_rational("1/2"), Some(rat(1, 2)));
        assert_eq!(parse_rational("-3"), Some(rat(-3, 1)));
        assert_eq!(parse_rational("0.25"), Some(rat(1, 4)));
        assert_eq!(parse_rational("-0.5"), Some(rat(-1, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn increasing_sequence_membership() {
        let s = InfinitePart::RatIncreasing(rat(1, 1));
        assert!(s.contains(&q(0, 1)));
        assert!(s.contains(&q(2, 3)));
        assert!(!s.contains(&q(3, 5)));
        assert!(!s.contains(&q(1, 1)));
        assert!(s.sample(4).iter().all(|p| s.contains(p)));
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(SymbolicOpen::up_ray(0), SymbolicOpen::Full);
        assert_eq!(SymbolicOpen::cofinite([]), SymbolicOpen::Full);
        assert_eq!(
            SymbolicOpen::cofinite([3, 1, 3]),
            SymbolicOpen::CofiniteComplement([1, 3].into_iter().collect())
        );
    }

    #[test]
    fn intersections() {
        let u = SymbolicOpen::t_upper(true, Some(2));
        let v = SymbolicOpen::t_upper(false, Some(5));
        assert_eq!(u.intersect(&v), SymbolicOpen::t_upper(false, Some(5)));
        assert_eq!(
            SymbolicOpen::UpRay(3).intersect(&SymbolicOpen::TopSingleton),
            SymbolicOpen::TopSingleton
        );
    }
}
