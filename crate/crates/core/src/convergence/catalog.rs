//! `ℕ`-indexed nets over catalog spaces, given by a finite prefix and a
//! tail rule, with closed-form convergence verdicts.

use std::fmt;

use serde::Serialize;

use super::finite::WayBelowConvergenceReport;
use crate::catalog::family::rational_grid;
use crate::catalog::*;
use crate::error::{Error, Result};

/// Named strictly monotone sequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    /// `1, 2, 3, ..`
    Naturals,
    /// `q - 1, q - 1/2, q - 1/3, ..` on the rationals.
    ApproachFromBelow(Rational),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TailRule {
    Constant(CatalogPoint),
    Periodic(Vec<CatalogPoint>),
    Monotone(Generator),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogNet {
    pub prefix: Vec<CatalogPoint>,
    pub tail: TailRule,
}

/// How far up the eventual lower bounds reach.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Reach {
    Nothing,
    UpTo(CatalogPoint),
    Everything,
}

impl fmt::Display for CatalogNet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.prefix {
            write!(f, "{p}, ")?;
        }
        match &self.tail {
            TailRule::Constant(v) => write!(f, "{v}, {v}, …"),
            TailRule::Periodic(vs) => {
                let s: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
                write!(f, "({})…", s.join(", "))
            }
            TailRule::Monotone(Generator::Naturals) => f.write_str("1, 2, 3, …"),
            TailRule::Monotone(Generator::ApproachFromBelow(q)) => write!(f, "{q} - 1/n"),
        }
    }
}

impl CatalogNet {
    pub fn constant(v: CatalogPoint) -> Self {
        CatalogNet {
            prefix: Vec::new(),
            tail: TailRule::Constant(v),
        }
    }

    pub fn monotone(g: Generator) -> Self {
        CatalogNet {
            prefix: Vec::new(),
            tail: TailRule::Monotone(g),
        }
    }

    /// Every point belongs to the carrier and the generator fits the family.
    pub fn validate(&self, fam: Family) -> Result<()> {
        let pts: Vec<&CatalogPoint> = match &self.tail {
            TailRule::Constant(v) => vec![v],
            TailRule::Periodic(vs) if vs.is_empty() => {
                return Err(Error::InvalidNet("periodic tail needs at least one value".into()))
            }
            TailRule::Periodic(vs) => vs.iter().collect(),
            TailRule::Monotone(Generator::Naturals) => vec![],
            TailRule::Monotone(Generator::ApproachFromBelow(_)) if fam == Family::Rationals => vec![],
            TailRule::Monotone(g) => return Err(Error::UndecidableTail(format!("{g:?} has no values in {fam:?}"))),
        };
        match self.prefix.iter().chain(pts).find(|p| !fam.is_point(p)) {
            Some(p) => Err(Error::UnknownPoint(p.to_string())),
            None => Ok(()),
        }
    }

    /// The supremum the named generator approaches, if any.
    pub fn generator_limit(fam: Family, g: Generator) -> Option<CatalogPoint> {
        match (fam, g) {
            (Family::OmegaPlusOne, Generator::Naturals) => Some(CatalogPoint::Infinity),
            (Family::PosetT, Generator::Naturals) => Some(CatalogPoint::Top),
            (Family::Rationals, Generator::ApproachFromBelow(q)) => Some(CatalogPoint::Rational(q)),
            _ => None,
        }
    }

    /// Eventually inside the open `U`.
    pub fn eventually_in_open(&self, u: &SymbolicOpen) -> bool {
        use SymbolicOpen as O;
        match &self.tail {
            TailRule::Constant(v) => u.contains(v),
            TailRule::Periodic(vs) => vs.iter().all(|v| u.contains(v)),
            TailRule::Monotone(Generator::Naturals) => match u {
                O::Full | O::CofiniteComplement(_) | O::UpRay(_) | O::RationalRightRay(_) => true,
                O::UpSetOfT { tail_start, .. } => tail_start.is_some(),
                O::Empty | O::TopSingleton => false,
            },
            TailRule::Monotone(Generator::ApproachFromBelow(q)) => match u {
                O::Full => true,
                O::RationalRightRay(p) => p < q,
                _ => false,
            },
        }
    }

    /// Eventually inside a described set.
    pub fn eventually_in_set(&self, fam: Family, a: &DescribedSet) -> bool {
        use InfinitePart as I;
        match &self.tail {
            TailRule::Constant(v) => a.contains(v),
            TailRule::Periodic(vs) => vs.iter().all(|v| a.contains(v)),
            TailRule::Monotone(Generator::Naturals) => match (fam, a.infinite) {
                (Family::Rationals, Some(I::RatAll | I::RatAtLeast(_) | I::RatAbove(_))) => true,
                (Family::Rationals, _) => false,
                (_, Some(I::NatTail(_))) => true,
                _ => false,
            },
            TailRule::Monotone(Generator::ApproachFromBelow(q)) => match a.infinite {
                Some(I::RatIncreasing(r)) => r == *q,
                Some(I::RatBelow(r) | I::RatAtMost(r)) => r >= *q,
                Some(I::RatAtLeast(r) | I::RatAbove(r)) => r < *q,
                Some(I::RatAll) => true,
                _ => false,
            },
        }
    }

    /// `e ≤ x_n` eventually.
    pub fn is_eventual_lower_bound(&self, fam: Family, e: &CatalogPoint) -> bool {
        use CatalogPoint as P;
        match &self.tail {
            TailRule::Constant(v) => fam.leq(e, v),
            TailRule::Periodic(vs) => vs.iter().all(|v| fam.leq(e, v)),
            TailRule::Monotone(Generator::Naturals) => match fam {
                Family::CofiniteNat => false,
                Family::OmegaPlusOne => matches!(e, P::Nat(_)),
                Family::PosetT => matches!(e, P::Nat(_) | P::Bottom),
                Family::Rationals => true,
            },
            TailRule::Monotone(Generator::ApproachFromBelow(q)) => {
                matches!(e, P::Rational(x) if x < q)
            }
        }
    }

    /// The best supremum of an irreducible set of eventual lower bounds.
    /// Every set used is a chain or a point, hence irreducible in every
    /// topology of upper sets.
    fn reach(&self, fam: Family) -> Reach {
        match &self.tail {
            TailRule::Constant(v) => Reach::UpTo(*v),
            TailRule::Periodic(vs) => {
                let mut g = Some(vs[0]);
                for v in &vs[1..] {
                    g = g.and_then(|a| fam.glb(&a, v));
                }
                g.map_or(Reach::Nothing, Reach::UpTo)
            }
            TailRule::Monotone(Generator::Naturals) => match fam {
                Family::CofiniteNat => Reach::Nothing,
                Family::OmegaPlusOne => Reach::UpTo(CatalogPoint::Infinity),
                Family::PosetT => Reach::UpTo(CatalogPoint::Top),
                Family::Rationals => Reach::Everything,
            },
            TailRule::Monotone(Generator::ApproachFromBelow(q)) => Reach::UpTo(CatalogPoint::Rational(*q)),
        }
    }
}

fn check(space: &CatalogSpace, net: &CatalogNet, y: &CatalogPoint) -> Result<()> {
    net.validate(space.family())?;
    if !space.family().is_point(y) {
        return Err(Error::UnknownPoint(y.to_string()));
    }
    Ok(())
}

/// Every open containing `y` eventually holds the net, decided per schema.
pub fn catalog_topological_converges(space: &CatalogSpace, net: &CatalogNet, y: &CatalogPoint) -> Result<bool> {
    check(space, net, y)?;
    let fam = space.family();
    let has = |s: OpenSchema| space.schemas().contains(&s);
    Ok(match &net.tail {
        // some open holds y but not v iff y ∉ cl{v} iff y ≰ v
        TailRule::Constant(v) => fam.leq(y, v),
        TailRule::Periodic(vs) => vs.iter().all(|v| fam.leq(y, v)),
        TailRule::Monotone(Generator::Naturals) => {
            let escapes = (has(OpenSchema::TopSingleton) && *y == CatalogPoint::Infinity)
                || (has(OpenSchema::TUpperNoTail) && matches!(y, CatalogPoint::A | CatalogPoint::Top));
            !escapes
        }
        TailRule::Monotone(Generator::ApproachFromBelow(q)) => {
            !(has(OpenSchema::RationalRay) && matches!(y, CatalogPoint::Rational(v) if v > q))
        }
    })
}

/// Some irreducible set of eventual lower bounds has supremum `≥ y`.
pub fn catalog_irr_converges(space: &CatalogSpace, net: &CatalogNet, y: &CatalogPoint) -> Result<bool> {
    check(space, net, y)?;
    Ok(match net.reach(space.family()) {
        Reach::Nothing => false,
        Reach::UpTo(s) => space.leq(y, &s),
        Reach::Everything => true,
    })
}

/// Constants, two-value cycles, and the named generators.
pub fn sample_nets(fam: Family, fuel: usize) -> Vec<CatalogNet> {
    let pts = fam.sample_points(fuel);
    let mut nets: Vec<CatalogNet> = pts.iter().map(|p| CatalogNet::constant(*p)).collect();
    let few = &pts[..pts.len().min(6)];
    for (i, a) in few.iter().enumerate() {
        for b in &few[i + 1..] {
            nets.push(CatalogNet {
                prefix: vec![],
                tail: TailRule::Periodic(vec![*a, *b]),
            });
        }
    }
    nets.push(CatalogNet::monotone(Generator::Naturals));
    if fam == Family::Rationals {
        for p in &pts {
            if let CatalogPoint::Rational(q) = p {
                nets.push(CatalogNet::monotone(Generator::ApproachFromBelow(*q)));
            }
        }
    }
    nets
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogLocationReport {
    pub space: CatalogName,
    pub fuel: usize,
    pub opens_checked: usize,
    pub si_opens: usize,
    pub irr_opens: usize,
    pub si_within_irr: bool,
    /// Checked only under Irr⁺- or SI-continuity.
    pub irr_within_tau: Option<bool>,
    pub witnesses: Vec<String>,
}

/// First sampled net `→_Irr y ∈ A` that is not eventually in `A`.
fn escaping_net(
    space: &CatalogSpace,
    nets: &[CatalogNet],
    pts: &[CatalogPoint],
    member: impl Fn(&CatalogPoint) -> bool,
    eventually: impl Fn(&CatalogNet) -> bool,
) -> Result<Option<(CatalogNet, CatalogPoint)>> {
    for y in pts.iter().filter(|y| member(y)) {
        for n in nets {
            if catalog_irr_converges(space, n, y)? && !eventually(n) {
                return Ok(Some((n.clone(), *y)));
            }
        }
    }
    Ok(None)
}

/// `τ_SI ⊆ τ_𝓘 ⊆ τ` on a catalog space, with witness nets.
pub fn catalog_location_check(space: &CatalogSpace, fuel: usize) -> Result<CatalogLocationReport> {
    let fam = space.family();
    let nets = sample_nets(fam, fuel);
    let pts = fam.sample_points(fuel);
    let irr = space.irr_plus_witnesses(fuel);
    let instances = space.instances(fuel);
    let mut r = CatalogLocationReport {
        space: space.name(),
        fuel,
        opens_checked: instances.len(),
        si_opens: 0,
        irr_opens: 0,
        si_within_irr: true,
        irr_within_tau: None,
        witnesses: Vec::new(),
    };
    for u in &instances {
        let si_open = space.si_violation(&irr, u).is_none();
        let esc = escaping_net(space, &nets, &pts, |p| u.contains(p), |n| n.eventually_in_open(u))?;
        r.si_opens += si_open as usize;
        r.irr_opens += esc.is_none() as usize;
        if let Some((n, y)) = esc {
            r.witnesses.push(format!(
                "{u} ∈ τ ∖ τ_𝓘: net {n} Irr-converges to {y} but is not eventually in {u}"
            ));
            if si_open {
                r.si_within_irr = false;
            }
        }
    }
    let props = catalog_properties(space.name());
    if space.is_original() && (props.irr_plus_continuous || props.si_continuous) {
        let mut candidates: Vec<DescribedSet> = pts.iter().map(|p| DescribedSet::finite([*p])).collect();
        if fam == Family::Rationals {
            candidates.extend(
                rational_grid(fuel)
                    .into_iter()
                    .map(|q| DescribedSet::infinite(InfinitePart::RatAtLeast(q))),
            );
        }
        let mut within = true;
        for a in candidates {
            let window: Vec<CatalogPoint> = pts.iter().chain(a.sample(fuel).iter()).copied().collect();
            let is_open = std::iter::once(SymbolicOpen::Empty)
                .chain(instances.iter().cloned())
                .any(|u| window.iter().all(|p| u.contains(p) == a.contains(p)));
            if is_open {
                continue;
            }
            let esc = escaping_net(space, &nets, &pts, |p| a.contains(p), |n| n.eventually_in_set(fam, &a))?;
            if esc.is_none() {
                within = false;
                r.witnesses
                    .push(format!("{a} is not open but no sampled net leaves it"));
            }
        }
        r.irr_within_tau = Some(within);
    }
    Ok(r)
}

/// The Lemma relating `≪_Irr` to eventual lower bounds, over sampled nets.
pub fn catalog_way_below_convergence_char(
    space: &CatalogSpace,
    x: &CatalogPoint,
    y: &CatalogPoint,
    fuel: usize,
) -> Result<WayBelowConvergenceReport> {
    let fam = space.family();
    if !fam.is_point(x) || !fam.is_point(y) {
        return Err(Error::UnknownPoint(format!("{x} or {y}")));
    }
    let mut nets = sample_nets(fam, fuel);
    nets.push(CatalogNet::constant(*y));
    if let CatalogPoint::Rational(q) = y {
        nets.push(CatalogNet::monotone(Generator::ApproachFromBelow(*q)));
    }
    let mut converging = Vec::new();
    for n in &nets {
        if catalog_irr_converges(space, n, y)? {
            converging.push(n);
        }
    }
    let all_below = converging.iter().all(|n| n.is_eventual_lower_bound(fam, x));
    let wb = catalog_way_below(space.name(), x, y);
    let props = catalog_properties(space.name());
    Ok(WayBelowConvergenceReport {
        x: x.to_string(),
        y: y.to_string(),
        way_below: wb,
        nets_checked: converging.len(),
        lemma_holds: !wb || all_below,
        converse_holds: (props.irr_continuous || props.si_minus_continuous).then_some(!all_below || wb),
    })
}
