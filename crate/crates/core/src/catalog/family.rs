//! Order and set oracles for the four catalogued carriers.
//!
//! Each carrier has one fixed order; the topologies vary (a stage of the SI
//! iteration keeps the carrier and drops open schemas). Everything here is
//! a closed form on the symbolic encodings.

use std::collections::BTreeSet;

use num_rational::Ratio;

use super::symbolic::*;

/// The carrier and its order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// `ℕ`, discrete order.
    CofiniteNat,
    /// The chain `0 < 1 < .. < ∞`.
    OmegaPlusOne,
    /// `T = {⊥, a, ⊤, 1, 2, ..}` with `⊥ ≤ x ≤ ⊤` and `1 ≤ 2 ≤ ..`.
    PosetT,
    /// `(ℚ, ≤)`.
    Rationals,
}

use CatalogPoint as P;

impl Family {
    pub fn is_point(self, p: &CatalogPoint) -> bool {
        match (self, p) {
            (Family::CofiniteNat, P::Nat(_)) => true,
            (Family::OmegaPlusOne, P::Nat(_) | P::Infinity) => true,
            (Family::PosetT, P::Nat(k)) => *k >= 1,
            (Family::PosetT, P::Bottom | P::Top | P::A) => true,
            (Family::Rationals, P::Rational(_)) => true,
            _ => false,
        }
    }

    pub fn parse_point(self, s: &str) -> Option<CatalogPoint> {
        let t = s.trim();
        let p = match (self, t) {
            (Family::OmegaPlusOne, "inf" | "∞" | "omega" | "infinity") => P::Infinity,
            (Family::PosetT, "bot" | "⊥" | "bottom") => P::Bottom,
            (Family::PosetT, "top" | "⊤") => P::Top,
            (Family::PosetT, "a") => P::A,
            (Family::Rationals, _) => P::Rational(parse_rational(t)?),
            _ => P::Nat(t.parse().ok()?),
        };
        self.is_point(&p).then_some(p)
    }

    pub fn leq(self, x: &CatalogPoint, y: &CatalogPoint) -> bool {
        match self {
            Family::CofiniteNat => x == y,
            Family::OmegaPlusOne => match (x, y) {
                (P::Nat(a), P::Nat(b)) => a <= b,
                (_, P::Infinity) => true,
                _ => false,
            },
            Family::PosetT => match (x, y) {
                (P::Bottom, _) | (_, P::Top) => true,
                (P::Nat(a), P::Nat(b)) => a <= b,
                (P::A, P::A) => true,
                _ => false,
            },
            Family::Rationals => match (x, y) {
                (P::Rational(a), P::Rational(b)) => a <= b,
                _ => false,
            },
        }
    }

    pub fn lt(self, x: &CatalogPoint, y: &CatalogPoint) -> bool {
        x != y && self.leq(x, y)
    }

    /// Binary join, when it exists.
    pub fn lub(self, x: &CatalogPoint, y: &CatalogPoint) -> Option<CatalogPoint> {
        if self.leq(x, y) {
            Some(*y)
        } else if self.leq(y, x) {
            Some(*x)
        } else if self == Family::PosetT {
            Some(P::Top)
        } else {
            None
        }
    }

    /// Binary meet, when it exists.
    pub fn glb(self, x: &CatalogPoint, y: &CatalogPoint) -> Option<CatalogPoint> {
        if self.leq(x, y) {
            Some(*x)
        } else if self.leq(y, x) {
            Some(*y)
        } else if self == Family::PosetT {
            Some(P::Bottom)
        } else {
            None
        }
    }

    pub fn least(self) -> Option<CatalogPoint> {
        match self {
            Family::OmegaPlusOne => Some(P::Nat(0)),
            Family::PosetT => Some(P::Bottom),
            _ => None,
        }
    }

    /// The whole carrier as a described set.
    pub fn whole(self) -> DescribedSet {
        match self {
            Family::CofiniteNat => DescribedSet::infinite(InfinitePart::NatTail(0)),
            Family::OmegaPlusOne => DescribedSet::infinite(InfinitePart::NatTail(0)).with_points([P::Infinity]),
            Family::PosetT => DescribedSet::infinite(InfinitePart::NatTail(1)).with_points([P::Bottom, P::A, P::Top]),
            Family::Rationals => DescribedSet::infinite(InfinitePart::RatAll),
        }
    }

    fn infinite_sup(self, part: &InfinitePart) -> Option<CatalogPoint> {
        match (self, part) {
            (Family::OmegaPlusOne, InfinitePart::NatTail(_)) => Some(P::Infinity),
            (Family::PosetT, InfinitePart::NatTail(_)) => Some(P::Top),
            (
                Family::Rationals,
                InfinitePart::RatIncreasing(q) | InfinitePart::RatBelow(q) | InfinitePart::RatAtMost(q),
            ) => Some(P::Rational(*q)),
            _ => None,
        }
    }

    /// `⋁E`. For a nonempty infinite piece with no supremum the union has
    /// none either (true in all four carriers); the empty set's supremum is
    /// the least element.
    pub fn sup(self, e: &DescribedSet) -> Option<CatalogPoint> {
        let mut acc: Option<CatalogPoint> = match &e.infinite {
            Some(part) => Some(self.infinite_sup(part)?),
            None => None,
        };
        for p in &e.finite {
            acc = Some(match acc {
                None => *p,
                Some(a) => self.lub(&a, p)?,
            });
        }
        acc.or_else(|| self.least())
    }

    /// Largest member, if any.
    pub fn greatest(self, e: &DescribedSet) -> Option<CatalogPoint> {
        if e.is_empty() {
            return None;
        }
        self.sup(e).filter(|s| e.contains(s))
    }

    pub fn has_upper_bound(self, e: &DescribedSet) -> bool {
        match self {
            Family::OmegaPlusOne | Family::PosetT => true,
            Family::CofiniteNat => e.infinite.is_none() && e.finite.len() <= 1,
            Family::Rationals => !matches!(
                e.infinite,
                Some(InfinitePart::RatAll | InfinitePart::RatAtLeast(_) | InfinitePart::RatAbove(_))
            ),
        }
    }

    /// Every two members have an upper bound inside `E`.
    pub fn is_directed(self, e: &DescribedSet) -> bool {
        if e.is_empty() {
            return false;
        }
        let fin: Vec<&CatalogPoint> = e.finite.iter().collect();
        let pairs_ok = fin.iter().enumerate().all(|(i, p)| {
            fin[i + 1..]
                .iter()
                .all(|r| self.lub(p, r).is_some_and(|l| self.upset_meets(e, &l)))
        });
        let Some(part) = e.infinite else { return pairs_ok };
        // every infinite piece is a chain, except the discrete tail of ℕ
        if self == Family::CofiniteNat {
            return false;
        }
        let tail_only = DescribedSet::infinite(part);
        pairs_ok
            && fin
                .iter()
                .all(|p| self.upset_meets(&tail_only, p) || self.infinite_sup(&part).is_some_and(|s| self.leq(&s, p)))
    }

    /// `E ∩ ↑x ≠ ∅`.
    pub fn upset_meets(self, e: &DescribedSet, x: &CatalogPoint) -> bool {
        if e.finite.iter().any(|p| self.leq(x, p)) {
            return true;
        }
        let Some(part) = e.infinite else { return false };
        match (self, part, x) {
            (Family::CofiniteNat, InfinitePart::NatTail(n), P::Nat(m)) => *m >= n,
            (Family::OmegaPlusOne, InfinitePart::NatTail(_), P::Nat(_)) => true,
            (Family::PosetT, InfinitePart::NatTail(_), P::Nat(_) | P::Bottom) => true,
            (_, InfinitePart::RatIncreasing(q) | InfinitePart::RatBelow(q), P::Rational(v)) => *v < q,
            (_, InfinitePart::RatAtMost(q), P::Rational(v)) => *v <= q,
            (_, InfinitePart::RatAtLeast(_) | InfinitePart::RatAbove(_) | InfinitePart::RatAll, P::Rational(_)) => true,
            _ => false,
        }
    }

    /// `E ∩ U ≠ ∅`.
    pub fn meets(self, e: &DescribedSet, u: &SymbolicOpen) -> bool {
        if e.finite.iter().any(|p| u.contains(p)) {
            return true;
        }
        let Some(part) = e.infinite else { return false };
        use SymbolicOpen as O;
        match (u, part) {
            (O::Empty, _) => false,
            (O::Full, _) => true,
            (O::CofiniteComplement(_) | O::UpRay(_), InfinitePart::NatTail(_)) => true,
            (O::TopSingleton, _) => false,
            (O::UpSetOfT { tail_start, .. }, InfinitePart::NatTail(_)) => tail_start.is_some(),
            (
                O::RationalRightRay(p),
                InfinitePart::RatIncreasing(q) | InfinitePart::RatBelow(q) | InfinitePart::RatAtMost(q),
            ) => p < &q,
            (
                O::RationalRightRay(_),
                InfinitePart::RatAtLeast(_) | InfinitePart::RatAbove(_) | InfinitePart::RatAll,
            ) => true,
            _ => false,
        }
    }

    /// `X ∖ U`.
    pub fn complement(self, u: &SymbolicOpen) -> DescribedSet {
        use SymbolicOpen as O;
        match u {
            O::Empty => self.whole(),
            O::Full => DescribedSet::empty(),
            O::CofiniteComplement(ex) => DescribedSet::finite(ex.iter().map(|n| P::Nat(*n))),
            O::UpRay(n) => DescribedSet::finite((0..*n).map(P::Nat)),
            O::TopSingleton => DescribedSet::infinite(InfinitePart::NatTail(0)),
            O::UpSetOfT { with_a, tail_start } => {
                let mut fin: BTreeSet<CatalogPoint> = BTreeSet::from([P::Bottom]);
                if !with_a {
                    fin.insert(P::A);
                }
                match tail_start {
                    Some(k) => {
                        fin.extend((1..*k).map(P::Nat));
                        DescribedSet {
                            finite: fin,
                            infinite: None,
                        }
                    }
                    None => DescribedSet {
                        finite: fin,
                        infinite: Some(InfinitePart::NatTail(1)),
                    },
                }
            }
            O::RationalRightRay(q) => DescribedSet::infinite(InfinitePart::RatAtMost(*q)),
        }
    }

    /// `V ⊆ ↑y`.
    pub fn open_within_upset(self, v: &SymbolicOpen, y: &CatalogPoint) -> bool {
        use SymbolicOpen as O;
        match v {
            O::Empty => true,
            O::Full => self.least() == Some(*y),
            O::CofiniteComplement(_) => false,
            O::UpRay(n) => matches!(y, P::Nat(m) if m <= n),
            O::TopSingleton => true,
            O::UpSetOfT { with_a, tail_start } => {
                let a_ok = !with_a || matches!(y, P::Bottom | P::A);
                let tail_ok = match tail_start {
                    None => true,
                    Some(k) => matches!(y, P::Bottom) || matches!(y, P::Nat(m) if m <= k),
                };
                let top_ok = self.leq(y, &P::Top);
                a_ok && tail_ok && top_ok
            }
            O::RationalRightRay(p) => matches!(y, P::Rational(v) if v <= p),
        }
    }

    /// A finite window of the carrier.
    pub fn sample_points(self, fuel: usize) -> Vec<CatalogPoint> {
        let f = fuel.max(1) as u64;
        match self {
            Family::CofiniteNat => (0..f).map(P::Nat).collect(),
            Family::OmegaPlusOne => (0..f).map(P::Nat).chain([P::Infinity]).collect(),
            Family::PosetT => [P::Bottom, P::A, P::Top]
                .into_iter()
                .chain((1..=f).map(P::Nat))
                .collect(),
            Family::Rationals => {
                let mut pts: BTreeSet<CatalogPoint> = rational_grid(fuel).into_iter().map(P::Rational).collect();
                pts.extend((1..=fuel as i64).map(|k| P::Rational(Ratio::from_integer(1) - rat(1, k))));
                pts.into_iter().collect()
            }
        }
    }

    /// Opens of the given schema with parameters inside the fuel window.
    pub fn instances(self, schema: OpenSchema, fuel: usize) -> Vec<SymbolicOpen> {
        let f = fuel.max(1) as u64;
        match schema {
            OpenSchema::Empty => vec![SymbolicOpen::Empty],
            OpenSchema::Full => vec![SymbolicOpen::Full],
            OpenSchema::Cofinite => {
                let mut v: Vec<SymbolicOpen> = (0..f).map(|a| SymbolicOpen::cofinite([a])).collect();
                for a in 0..f {
                    for b in (a + 1)..f {
                        v.push(SymbolicOpen::cofinite([a, b]));
                    }
                }
                v
            }
            OpenSchema::UpRay => (1..=f).map(SymbolicOpen::UpRay).collect(),
            OpenSchema::TopSingleton => vec![SymbolicOpen::TopSingleton],
            OpenSchema::TUpperNoTail => vec![SymbolicOpen::t_upper(false, None), SymbolicOpen::t_upper(true, None)],
            OpenSchema::TUpperWithTail => (1..=f)
                .flat_map(|k| [false, true].map(|a| SymbolicOpen::t_upper(a, Some(k))))
                .collect(),
            OpenSchema::RationalRay => rational_grid(fuel)
                .into_iter()
                .map(SymbolicOpen::RationalRightRay)
                .collect(),
        }
    }

    /// Candidate members of `Irr⁺`: small finite sets from the window, and
    /// the registered infinite classes optionally joined with one window point.
    pub fn witness_sets(self, fuel: usize) -> Vec<DescribedSet> {
        let pts = self.sample_points(fuel);
        let max_finite = if self == Family::Rationals { 2 } else { 3 };
        let mut out: Vec<DescribedSet> = Vec::new();
        let m = pts.len();
        for i in 0..m {
            out.push(DescribedSet::finite([pts[i]]));
            if max_finite < 2 {
                continue;
            }
            for j in (i + 1)..m {
                out.push(DescribedSet::finite([pts[i], pts[j]]));
                if max_finite < 3 {
                    continue;
                }
                for k in (j + 1)..m {
                    out.push(DescribedSet::finite([pts[i], pts[j], pts[k]]));
                }
            }
        }
        let f = fuel.max(1) as u64;
        let parts: Vec<InfinitePart> = match self {
            Family::CofiniteNat | Family::OmegaPlusOne => (0..=f).map(InfinitePart::NatTail).collect(),
            Family::PosetT => (1..=f).map(InfinitePart::NatTail).collect(),
            Family::Rationals => pts
                .iter()
                .filter_map(|p| match p {
                    P::Rational(q) => Some(*q),
                    _ => None,
                })
                .flat_map(|q| {
                    [
                        InfinitePart::RatIncreasing(q),
                        InfinitePart::RatBelow(q),
                        InfinitePart::RatAtMost(q),
                    ]
                })
                .chain([InfinitePart::RatAll])
                .collect(),
        };
        for part in parts {
            out.push(DescribedSet::infinite(part));
            for p in &pts {
                if !part.contains(p) {
                    out.push(DescribedSet::infinite(part).with_points([*p]));
                }
            }
        }
        out
    }
}

/// Quarter steps around the unit interval: `{j/4 | -f-4 ≤ j ≤ f+4}`.
pub fn rational_grid(fuel: usize) -> Vec<Rational> {
    let f = fuel.max(1) as i64;
    (-(f + 4)..=(f + 4)).map(|j| rat(j, 4)).collect()
}
