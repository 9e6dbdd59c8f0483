//! Fuel-bounded definitional re-derivation of the frozen catalog answers.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::*;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub space: CatalogName,
    pub fuel: usize,
    pub irr_plus_witnesses: usize,
    pub probes: usize,
    pub discoveries: Vec<String>,
}

struct Prober<'a> {
    space: &'a CatalogSpace,
    fam: Family,
    fuel: usize,
    irr: Vec<(DescribedSet, CatalogPoint)>,
    pts: Vec<CatalogPoint>,
    probes: usize,
}

fn mismatch(name: CatalogName, what: impl Into<String>) -> Error {
    Error::OracleMismatch(format!("{name}: {}", what.into()))
}

/// `x ≪_Irr y` by scanning `Irr⁺` witnesses; the first killer on failure.
pub fn way_below_killer(
    space: &CatalogSpace,
    irr: &[(DescribedSet, CatalogPoint)],
    x: &CatalogPoint,
    y: &CatalogPoint,
) -> Option<DescribedSet> {
    let fam = space.family();
    irr.iter()
        .find(|(e, s)| fam.leq(y, s) && !fam.upset_meets(e, x))
        .map(|(e, _)| e.clone())
}

impl<'a> Prober<'a> {
    fn new(space: &'a CatalogSpace, fuel: usize) -> Self {
        let fam = space.family();
        Prober {
            space,
            fam,
            fuel,
            irr: space.irr_plus_witnesses(fuel),
            pts: fam.sample_points(fuel),
            probes: 0,
        }
    }

    fn name(&self) -> CatalogName {
        self.space.name()
    }

    /// `D ⊆ A`, testing the infinite piece on a sample.
    fn inside(&self, d: &DescribedSet, a: impl Fn(&CatalogPoint) -> bool) -> bool {
        d.sample(4 * self.fuel).iter().all(a)
    }

    fn is_point_closure(&self, c: &DescribedSet) -> bool {
        match self.fam.greatest(c) {
            None => false,
            Some(g) => self
                .pts
                .iter()
                .chain(c.sample(2 * self.fuel).iter())
                .all(|p| c.contains(p) == self.fam.leq(p, &g)),
        }
    }

    fn check_way_below(&mut self) -> Result<()> {
        let (space, irr, pts) = (self.space, &self.irr, &self.pts);
        let results: Vec<(CatalogPoint, CatalogPoint, bool)> = pts
            .par_iter()
            .flat_map_iter(|x| {
                pts.iter()
                    .map(move |y| (*x, *y, way_below_killer(space, irr, x, y).is_none()))
            })
            .collect();
        for (x, y, probed) in results {
            self.probes += 1;
            if probed != catalog_way_below(self.name(), &x, &y) {
                return Err(mismatch(self.name(), format!("{x} ≪ {y} probed {probed}")));
            }
            if frozen_dd(self.name(), &y).contains(&x) != probed {
                return Err(mismatch(self.name(), format!("↡{y} at {x}")));
            }
            if frozen_uu(self.name(), &x).contains(&y) != probed {
                return Err(mismatch(self.name(), format!("↟{x} at {y}")));
            }
        }
        Ok(())
    }

    fn expect(&mut self, flag: &str, frozen: bool, violation: Option<String>) -> Result<()> {
        self.probes += 1;
        match (frozen, violation) {
            (true, Some(v)) => Err(mismatch(self.name(), format!("{flag} frozen true, violated by {v}"))),
            (false, None) => Err(mismatch(self.name(), format!("{flag} frozen false, no witness found"))),
            _ => Ok(()),
        }
    }

    fn sobriety_violation(&self, scope: crate::properties::Sobriety) -> Option<String> {
        use crate::properties::Sobriety;
        std::iter::once(SymbolicOpen::Empty)
            .chain(self.space.instances(self.fuel))
            .map(|u| self.fam.complement(&u))
            .filter(|c| !c.is_empty())
            .find(|c| {
                let in_scope = match scope {
                    Sobriety::Sober => true,
                    Sobriety::Bounded => self.fam.has_upper_bound(c),
                    Sobriety::Sup => self.fam.sup(c).is_some(),
                };
                in_scope && self.space.is_irreducible(c, self.fuel) && !self.is_point_closure(c)
            })
            .map(|c| c.to_string())
    }

    fn irr_continuity_violation(&self) -> Option<String> {
        self.pts
            .iter()
            .find(|y| {
                let dd = frozen_dd(self.name(), y);
                dd.is_empty() || !self.space.is_irreducible(&dd, self.fuel) || self.fam.sup(&dd) != Some(**y)
            })
            .map(|y| y.to_string())
    }

    /// Directed witness sets grouped by supremum.
    fn directed_by_sup(&self) -> BTreeMap<CatalogPoint, Vec<DescribedSet>> {
        let mut out: BTreeMap<CatalogPoint, Vec<DescribedSet>> = BTreeMap::new();
        for d in self.fam.witness_sets(self.fuel) {
            if self.fam.is_directed(&d) {
                if let Some(s) = self.fam.sup(&d) {
                    out.entry(s).or_default().push(d);
                }
            }
        }
        out
    }

    fn si_minus_violation(&self, directed: &BTreeMap<CatalogPoint, Vec<DescribedSet>>) -> Option<String> {
        self.pts
            .iter()
            .find(|y| {
                let dd = frozen_dd(self.name(), y);
                !directed
                    .get(*y)
                    .is_some_and(|ds| ds.iter().any(|d| self.inside(d, |p| dd.contains(p))))
            })
            .map(|y| y.to_string())
    }

    fn oplus_violation(&self) -> Option<String> {
        self.pts.iter().find_map(|x| match frozen_uu(self.name(), x) {
            UpArrow::Open(u) if self.space.is_open(&u) => None,
            UpArrow::Open(u) => Some(format!("↟{x} = {u}")),
            UpArrow::NotOpen(d) => {
                let window: Vec<CatalogPoint> = self.pts.iter().chain(d.sample(self.fuel).iter()).copied().collect();
                let matches_some_open = std::iter::once(SymbolicOpen::Empty)
                    .chain(self.space.instances(self.fuel))
                    .any(|u| window.iter().all(|p| u.contains(p) == d.contains(p)));
                (!matches_some_open).then(|| format!("↟{x} = {d}"))
            }
        })
    }

    fn star_violation(&self, directed: &BTreeMap<CatalogPoint, Vec<DescribedSet>>) -> Option<String> {
        self.irr
            .par_iter()
            .find_first(|(f, s)| {
                !directed
                    .get(s)
                    .is_some_and(|ds| ds.iter().any(|d| self.inside(d, |p| self.fam.upset_meets(f, p))))
            })
            .map(|(f, _)| f.to_string())
    }

    fn int_up_is_exact(&self, y: &CatalogPoint) -> Result<()> {
        let w = self.space.int_up(y);
        let within = self.fam.open_within_upset(&w, y);
        let maximal = self
            .space
            .instances(self.fuel)
            .iter()
            .all(|v| !self.fam.open_within_upset(v, y) || self.pts.iter().all(|p| !v.contains(p) || w.contains(p)));
        if !self.space.is_open(&w) || !within || !maximal {
            return Err(mismatch(self.name(), format!("int(↑{y}) = {w}")));
        }
        Ok(())
    }

    fn c_space_violation(&self) -> Option<String> {
        self.space.instances(self.fuel).into_iter().find_map(|u| {
            // rationals need a candidate strictly between the ray start and x
            let mut cands = self.pts.clone();
            for x in &self.pts {
                if let CatalogPoint::Rational(v) = x {
                    cands.push(CatalogPoint::Rational(v - rat(1, 1)));
                    if let SymbolicOpen::RationalRightRay(lo) = &u {
                        cands.push(CatalogPoint::Rational((*v + *lo) / rat(2, 1)));
                    }
                }
            }
            self.pts
                .iter()
                .filter(|x| u.contains(x))
                .find(|x| !cands.iter().any(|y| u.contains(y) && self.space.int_up(y).contains(x)))
                .map(|x| format!("{x} in {u}"))
        })
    }
}

/// Probes every frozen answer of the named space against the definitions.
pub fn validate_catalog(name: CatalogName, fuel: usize) -> Result<ValidationReport> {
    use crate::properties::Sobriety;
    let fuel = fuel.max(1);
    let space = CatalogSpace::new(name);
    let mut p = Prober::new(&space, fuel);
    let frozen = catalog_properties(name);
    let mut discoveries = Vec::new();

    for u in space.instances(fuel) {
        for x in &p.pts {
            for y in &p.pts {
                if u.contains(x) && p.fam.leq(x, y) && !u.contains(y) {
                    return Err(mismatch(name, format!("{u} is not an upper set")));
                }
            }
        }
    }

    p.check_way_below()?;

    let v = p.sobriety_violation(Sobriety::Sober);
    p.expect("sober", frozen.sober, v)?;
    let v = p.sobriety_violation(Sobriety::Bounded);
    p.expect("bounded_sober", frozen.bounded_sober, v)?;
    let v = p.sobriety_violation(Sobriety::Sup);
    p.expect("sup_sober", frozen.sup_sober, v)?;

    let v = p.irr_continuity_violation();
    p.expect("irr_continuous", frozen.irr_continuous, v)?;
    let directed = p.directed_by_sup();
    let v = p.si_minus_violation(&directed);
    p.expect("si_minus_continuous", frozen.si_minus_continuous, v)?;
    let v = p.oplus_violation();
    p.expect("oplus", frozen.oplus, v)?;
    let v = p.star_violation(&directed);
    p.expect("star", frozen.star, v)?;

    for y in p.pts.clone() {
        p.int_up_is_exact(&y)?;
    }
    let v = p.c_space_violation();
    p.expect("c_space", frozen.c_space, v)?;

    let derived = space.si_derivative(fuel);
    let removed: Vec<OpenSchema> = space.schemas().difference(derived.schemas()).copied().collect();
    if removed != frozen_si_removed(name) {
        return Err(mismatch(name, format!("SI removes {removed:?}")));
    }
    for schema in &removed {
        let e = space
            .family()
            .instances(*schema, fuel)
            .iter()
            .find_map(|u| space.si_violation(&p.irr, u).map(|e| (u.clone(), e)));
        if let Some((u, e)) = e {
            discoveries.push(format!("open {u} is not SI-open: E = {e}"));
        }
    }
    let v = removed.first().map(|s| s.name().to_string());
    p.expect("si_infty", frozen.si_infty, v)?;
    if derived.si_derivative(fuel) != derived {
        return Err(mismatch(name, "SI derivative is not a fixpoint after one step"));
    }
    if !frozen.is_consistent() {
        return Err(mismatch(name, "derived flags inconsistent"));
    }

    match name {
        CatalogName::PosetT => {
            let killers: Vec<String> = p
                .irr
                .iter()
                .filter(|(e, s)| {
                    e.infinite.is_none()
                        && p.fam.leq(&CatalogPoint::A, s)
                        && !p.fam.upset_meets(e, &CatalogPoint::Nat(1))
                })
                .map(|(e, _)| e.to_string())
                .collect();
            discoveries.push(format!("killers for 1 ≪ a: {}", killers.join(", ")));
        }
        CatalogName::CofiniteNat => {
            let multi: Vec<DescribedSet> = p
                .fam
                .witness_sets(fuel)
                .into_iter()
                .filter(|e| e.infinite.is_none() && e.finite.len() >= 2)
                .collect();
            let irreducible = multi.iter().filter(|e| space.is_irreducible(e, fuel)).count();
            if irreducible > 0 {
                return Err(mismatch(name, "a finite set of size ≥ 2 is irreducible"));
            }
            discoveries.push(format!(
                "{} finite sets of size ≥ 2 confirmed non-irreducible",
                multi.len()
            ));
        }
        CatalogName::RationalScott => {
            let k = way_below_killer(&space, &p.irr, &q(1, 1), &q(1, 1));
            if let Some(e) = k {
                discoveries.push(format!("killer for 1 ≪ 1: {e}"));
            }
        }
        CatalogName::OmegaPlusOneAlex => {}
    }

    Ok(ValidationReport {
        space: name,
        fuel,
        irr_plus_witnesses: p.irr.len(),
        probes: p.probes,
        discoveries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_catalog_space_validates_at_small_fuel() {
        for name in CatalogName::ALL {
            validate_catalog(name, 4).unwrap_or_else(|e| panic!("{e}"));
        }
    }
}
