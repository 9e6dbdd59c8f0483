//! Convergence classes over finite spaces, Kelley's axioms and the induced
//! topology.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::net::*;
use crate::error::{Error, Result};
use crate::irr::{irr_plus, WayBelow};
use crate::pointset::PointSet;
use crate::properties::{irr_continuity_witness, oplus_witness, si_minus_witness};
use crate::si::si_topology;
use crate::space::{FiniteSpace, Topology};

/// Every open containing `x` eventually holds the net.
pub fn topological_converges(s: &FiniteSpace, c: TailClass, x: usize) -> bool {
    c.points().is_subset(s.min_open_nbhd(x))
}

/// Some `E ∈ Irr⁺` with `⋁E ≥ y` consists of eventual lower bounds.
pub fn irr_converges(s: &FiniteSpace, c: TailClass, y: usize) -> bool {
    irr_converges_in(s, &irr_plus(s), c, y)
}

pub fn irr_converges_in(s: &FiniteSpace, irr: &[(PointSet, usize)], c: TailClass, y: usize) -> bool {
    let lower_bounds: PointSet = (0..s.len()).filter(|&e| c.points().is_subset(s.up(e))).collect();
    irr.iter().any(|(e, m)| s.le(y, *m) && e.is_subset(lower_bounds))
}

/// A convergence relation between tail classes and points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergenceClass {
    n: usize,
    /// `targets[C]`: the points the class `C` (as a mask) converges to.
    targets: Vec<PointSet>,
}

impl ConvergenceClass {
    pub fn from_fn(n: usize, f: impl Fn(TailClass, usize) -> bool) -> Self {
        let mut targets = vec![PointSet::EMPTY; 1 << n];
        for c in TailClass::all(n) {
            targets[c.points().bits() as usize] = (0..n).filter(|&x| f(c, x)).collect();
        }
        ConvergenceClass { n, targets }
    }

    /// `𝒮_τ` for any topology, T0 or not.
    pub fn of_topology(t: &Topology) -> Self {
        let nbhd: Vec<PointSet> = (0..t.carrier().len()).map(|x| t.min_open_nbhd(x)).collect();
        Self::from_fn(nbhd.len(), |c, x| c.points().is_subset(nbhd[x]))
    }

    pub fn topological(s: &FiniteSpace) -> Self {
        Self::of_topology(s.topology())
    }

    /// The Irr-convergence class `𝓘`.
    pub fn irr(s: &FiniteSpace) -> Self {
        let irr = irr_plus(s);
        Self::from_fn(s.len(), |c, y| irr_converges_in(s, &irr, c, y))
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn targets(&self, c: TailClass) -> PointSet {
        self.targets[c.points().bits() as usize]
    }

    pub fn converges(&self, c: TailClass, x: usize) -> bool {
        self.targets(c).contains(x)
    }

    pub fn is_subclass_of(&self, other: &ConvergenceClass) -> bool {
        self.n == other.n && self.targets.iter().zip(&other.targets).all(|(a, b)| a.is_subset(*b))
    }

    /// `⋃ {C | C → x}`.
    fn max_class(&self, x: usize) -> PointSet {
        TailClass::all(self.n)
            .filter(|c| self.converges(*c, x))
            .fold(PointSet::EMPTY, |acc, c| acc.union(c.points()))
    }

    /// `τ_𝒮`: the sets `U` with `C ⊆ U` whenever `C → x ∈ U`.
    pub fn induced_topology(&self) -> Topology {
        let n = self.n;
        let opens = PointSet::all_subsets(n)
            .filter(|&u| TailClass::all(n).all(|c| !self.targets(c).meets(u) || c.points().is_subset(u)));
        Topology::from_family(n, opens).expect("induced family is a topology")
    }
}

/// `τ_𝒮` as a space on the same labels; fails when it is not T0.
pub fn induced_topology(s: &FiniteSpace, class: &ConvergenceClass) -> Result<FiniteSpace> {
    if class.len() != s.len() {
        return Err(Error::CarrierMismatch(class.len(), s.len()));
    }
    s.with_topology(class.induced_topology())
}

/// Checks `τ ⊆ σ ⇔ 𝒮_σ ⊆ 𝒮_τ` on one pair; `true` means the equivalence held.
pub fn class_containment_check(tau: &Topology, sigma: &Topology) -> Result<bool> {
    let (n, m) = (tau.carrier().len(), sigma.carrier().len());
    if n != m {
        return Err(Error::CarrierMismatch(n, m));
    }
    let lhs = tau.is_coarser_than(sigma);
    let rhs = ConvergenceClass::of_topology(sigma).is_subclass_of(&ConvergenceClass::of_topology(tau));
    Ok(lhs == rhs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KelleyAxiom {
    Constants,
    Subnets,
    Divergence,
    IteratedLimits,
}

impl KelleyAxiom {
    pub const ALL: [KelleyAxiom; 4] = [
        KelleyAxiom::Constants,
        KelleyAxiom::Subnets,
        KelleyAxiom::Divergence,
        KelleyAxiom::IteratedLimits,
    ];
}

impl fmt::Display for KelleyAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KelleyAxiom::Constants => "constants",
            KelleyAxiom::Subnets => "subnets",
            KelleyAxiom::Divergence => "divergence",
            KelleyAxiom::IteratedLimits => "iterated-limits",
        })
    }
}

impl FromStr for KelleyAxiom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        KelleyAxiom::ALL
            .into_iter()
            .find(|a| a.to_string() == s.replace('_', "-").to_ascii_lowercase())
            .ok_or_else(|| Error::BadQuery(format!("unknown axiom `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KelleyReport {
    pub axiom: KelleyAxiom,
    pub passed: bool,
    /// Tail-class instances examined.
    pub instances: usize,
    /// Concrete nets built and simulated.
    pub replays: usize,
    pub example: Option<String>,
    pub violation: Option<String>,
}

/// Largest supported index budget.
pub const MAX_BUDGET: usize = 4;

fn labels(s: &FiniteSpace, c: PointSet) -> String {
    format!("{{{}}}", s.labels_of(c).join(", "))
}

/// Checks one axiom for `𝓘` on a finite space.
///
/// `budget` bounds the size of the cofinal part of every index set built
/// for concrete replays.
pub fn kelley_check(s: &FiniteSpace, axiom: KelleyAxiom, budget: usize) -> Result<KelleyReport> {
    if budget == 0 || budget > MAX_BUDGET {
        return Err(Error::BudgetExceeded(budget));
    }
    let class = ConvergenceClass::irr(s);
    let mut r = KelleyReport {
        axiom,
        passed: true,
        instances: 0,
        replays: 0,
        example: None,
        violation: None,
    };
    match axiom {
        KelleyAxiom::Constants => constants(s, &class, &mut r),
        KelleyAxiom::Subnets => subnets(s, &class, &mut r)?,
        KelleyAxiom::Divergence => divergence(s, &class, budget, &mut r)?,
        KelleyAxiom::IteratedLimits => iterated_limits(s, &class, budget, &mut r)?,
    }
    r.passed = r.violation.is_none();
    Ok(r)
}

fn constants(s: &FiniteSpace, class: &ConvergenceClass, r: &mut KelleyReport) {
    for x in 0..s.len() {
        r.instances += 1;
        let c = tail_class_of(&ConcreteNet::constant(x));
        r.replays += 1;
        if !class.converges(c, x) {
            r.violation = Some(format!("constant net at {} does not converge to it", s.name(x)));
            return;
        }
    }
}

fn subnets(s: &FiniteSpace, class: &ConvergenceClass, r: &mut KelleyReport) -> Result<()> {
    for c in TailClass::all(s.len()) {
        for x in class.targets(c).iter() {
            for sub in c.points().nonempty_subsets() {
                r.instances += 1;
                if !class.converges(TailClass::new(sub)?, x) {
                    r.violation = Some(format!(
                        "{} converges to {} but its subnet class {} does not",
                        labels(s, c.points()),
                        s.name(x),
                        labels(s, sub)
                    ));
                    return Ok(());
                }
            }
        }
        // concrete replay: the even subnet of the sequence cycling through C
        let cycle: Vec<usize> = c.points().iter().collect();
        let mut doubled = cycle.clone();
        doubled.extend(&cycle);
        let net = ConcreteNet::sequence(vec![], doubled)?;
        let sub = subnet(&net, &Selector::even())?;
        r.replays += 1;
        let t = tail_class_of(&sub);
        if !class.targets(c).is_subset(class.targets(t)) {
            r.violation = Some(format!("even subnet of {} loses a limit", labels(s, c.points())));
            return Ok(());
        }
    }
    Ok(())
}

/// `C ↛ y` must leave a subnet class no subnet class of which converges to
/// `y`; the witness is `{c ∈ C | c ≱ y}`.
fn divergence(s: &FiniteSpace, class: &ConvergenceClass, budget: usize, r: &mut KelleyReport) -> Result<()> {
    for c in TailClass::all(s.len()) {
        for y in (0..s.len()).filter(|&y| !class.converges(c, y)) {
            r.instances += 1;
            let w = c.points().difference(s.up(y));
            let ok = !w.is_empty() && w.nonempty_subsets().all(|sub| !class.converges(TailClass(sub), y));
            if !ok {
                r.violation = Some(format!(
                    "{} does not converge to {} yet every subnet class has a subnet converging to it",
                    labels(s, c.points()),
                    s.name(y)
                ));
                return Ok(());
            }
            if r.example.is_none() {
                r.example = Some(format!(
                    "{} ↛ {}: subnet class {}",
                    labels(s, c.points()),
                    s.name(y),
                    labels(s, w)
                ));
            }
            if c.points().len() <= budget {
                r.replays += 1;
                if let Some(v) = divergence_replay(s, class, c, y)? {
                    r.violation = Some(v);
                    return Ok(());
                }
            }
        }
    }
    Ok(())
}

/// Builds a net with tail class `C` behind a one-index prefix, takes the
/// subnet on `J = {j | x_j ≱ y}` and compares with the tail-class answer.
pub fn divergence_replay(s: &FiniteSpace, class: &ConvergenceClass, c: TailClass, y: usize) -> Result<Option<String>> {
    let pts: Vec<usize> = c.points().iter().collect();
    let noise = (0..s.len()).find(|&v| !s.le(y, v)).unwrap_or(pts[0]);
    let mut values = vec![noise];
    values.extend(&pts);
    let net = ConcreteNet::indexed(Preorder::prefixed_cluster(1, pts.len())?, values)?;
    let j = divergence_subnet(&net, s, y)?;
    let tc = tail_class_of(&j);
    let expected = c.points().difference(s.up(y));
    if tc.points() != expected {
        return Ok(Some(format!(
            "divergence subnet of {} has tail {} instead of {}",
            labels(s, c.points()),
            labels(s, tc.points()),
            labels(s, expected)
        )));
    }
    if tc
        .points()
        .nonempty_subsets()
        .any(|sub| class.converges(TailClass(sub), y))
    {
        return Ok(Some(format!(
            "a subnet of the divergence subnet converges to {}",
            s.name(y)
        )));
    }
    Ok(None)
}

fn iterated_limits(s: &FiniteSpace, class: &ConvergenceClass, budget: usize, r: &mut KelleyReport) -> Result<()> {
    let n = s.len();
    let maxc: Vec<PointSet> = (0..n).map(|x| class.max_class(x)).collect();
    let max_ok: Vec<bool> = (0..n)
        .map(|x| TailClass::new(maxc[x]).is_ok_and(|c| class.converges(c, x)))
        .collect();
    for y in 0..n {
        for top in TailClass::all(n).filter(|c| class.converges(*c, y)) {
            r.instances += 1;
            let verdict = if top.points().iter().all(|x| max_ok[x]) {
                // every admissible choice of inner classes lies inside these
                let union = top.points().iter().fold(PointSet::EMPTY, |a, x| a.union(maxc[x]));
                class.converges(TailClass(union), y)
            } else {
                all_choices_converge(class, top.points(), y, budget)?
            };
            if !verdict {
                r.violation = Some(format!(
                    "outer class {} → {} with convergent inner nets whose diagonal does not converge",
                    labels(s, top.points()),
                    s.name(y)
                ));
                return Ok(());
            }
            if top.points().len() <= budget {
                r.replays += 1;
                if let Some(v) = iterated_replay(s, class, top, y, budget)? {
                    r.violation = Some(v);
                    return Ok(());
                }
            }
        }
    }
    r.example = Some(format!("{} outer classes replayed as diagonal nets", r.replays));
    Ok(())
}

/// Exhaustive over inner classes of at most `budget` points.
fn all_choices_converge(class: &ConvergenceClass, top: PointSet, y: usize, budget: usize) -> Result<bool> {
    let n = class.len();
    let options: Vec<Vec<PointSet>> = top
        .iter()
        .map(|x| {
            TailClass::all(n)
                .filter(|c| c.points().len() <= budget && class.converges(*c, x))
                .map(|c| c.points())
                .collect()
        })
        .collect();
    let total: usize = options.iter().map(|o| o.len().max(1)).product();
    if total > 1 << 20 {
        return Err(Error::BudgetExceeded(budget));
    }
    let mut idx = vec![0usize; options.len()];
    if options.iter().any(|o| o.is_empty()) {
        return Ok(true);
    }
    loop {
        let union = options
            .iter()
            .zip(&idx)
            .fold(PointSet::EMPTY, |a, (o, &k)| a.union(o[k]));
        if !class.converges(TailClass(union), y) {
            return Ok(false);
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                return Ok(true);
            }
            idx[k] += 1;
            if idx[k] < options[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Concrete `D × Π E_m` replay for one outer class: each inner net uses the
/// largest convergent class of at most `budget` points.
pub fn iterated_replay(
    s: &FiniteSpace,
    class: &ConvergenceClass,
    top: TailClass,
    y: usize,
    budget: usize,
) -> Result<Option<String>> {
    let n = s.len();
    let noise = (0..n).find(|&v| !s.le(y, v)).unwrap_or(0);
    let outer_pts: Vec<usize> = top.points().iter().collect();
    let mut outer_vals = vec![noise];
    outer_vals.extend(&outer_pts);
    let outer = Preorder::prefixed_cluster(1, outer_pts.len())?;
    let mut inner = Vec::new();
    let mut expected = PointSet::EMPTY;
    for (m, &x) in outer_vals.iter().enumerate() {
        let cx = TailClass::all(n)
            .filter(|c| c.points().len() <= budget && class.converges(*c, x))
            .max_by_key(|c| (c.points().len(), c.points()))
            .map(|c| c.points())
            .unwrap_or(PointSet::singleton(x));
        if m > 0 {
            expected = expected.union(cx);
        }
        let pts: Vec<usize> = cx.iter().collect();
        let inner_noise = (0..n).find(|&v| !s.le(x, v)).unwrap_or(x);
        let mut vals = vec![inner_noise];
        vals.extend(&pts);
        inner.push((Preorder::prefixed_cluster(1, pts.len())?, vals));
    }
    let outer_net = ConcreteNet::indexed(outer.clone(), outer_vals)?;
    if tail_class_of(&outer_net) != top {
        return Ok(Some("outer replay net has the wrong tail".into()));
    }
    let diag = ConcreteNet::diagonal(outer, inner)?;
    let tc = tail_class_of(&diag);
    if tc.points() != expected {
        return Ok(Some(format!(
            "diagonal net tail {} differs from the union {}",
            labels(s, tc.points()),
            labels(s, expected)
        )));
    }
    if !class.converges(tc, y) {
        return Ok(Some(format!(
            "diagonal net with tail {} does not converge to {}",
            labels(s, tc.points()),
            s.name(y)
        )));
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocationReport {
    pub si_opens: usize,
    pub irr_opens: usize,
    pub opens: usize,
    pub si_within_irr: bool,
    /// Checked only under Irr⁺- or SI-continuity.
    pub irr_within_tau: Option<bool>,
    pub witnesses: Vec<String>,
}

/// `τ_SI ⊆ τ_𝓘`, and `τ_𝓘 ⊆ τ` when the space is Irr⁺- or SI-continuous.
pub fn location_check(s: &FiniteSpace) -> LocationReport {
    let si = si_topology(s);
    let irr = ConvergenceClass::irr(s).induced_topology();
    let tau = s.topology();
    let wb = WayBelow::compute(s);
    let oplus = oplus_witness(s, &wb).is_none();
    let si_cont = si_minus_witness(s, &wb).is_none() && oplus;
    let irr_plus_cont = irr_continuity_witness(s, &wb).is_none() && oplus;
    let mut witnesses = Vec::new();
    for u in tau.opens() {
        if !irr.is_open(*u) {
            witnesses.push(format!("{} ∈ τ ∖ τ_𝓘", labels(s, *u)));
        }
    }
    LocationReport {
        si_opens: si.len(),
        irr_opens: irr.len(),
        opens: tau.len(),
        si_within_irr: si.is_coarser_than(&irr),
        irr_within_tau: (irr_plus_cont || si_cont).then(|| irr.is_coarser_than(tau)),
        witnesses,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WayBelowConvergenceReport {
    pub x: String,
    pub y: String,
    pub way_below: bool,
    pub nets_checked: usize,
    /// `x ≪ y` makes `x` an eventual lower bound of every net `→_Irr y`.
    pub lemma_holds: bool,
    /// On Irr- or SI⁻-continuous spaces: the converse.
    pub converse_holds: Option<bool>,
}

pub fn way_below_convergence_char(s: &FiniteSpace, x: usize, y: usize) -> WayBelowConvergenceReport {
    let irr = irr_plus(s);
    let wb = WayBelow::from_irr_plus(s, &irr);
    let converging: Vec<TailClass> = TailClass::all(s.len())
        .filter(|c| irr_converges_in(s, &irr, *c, y))
        .collect();
    let x_eventually_below = converging.iter().all(|c| c.points().is_subset(s.up(x)));
    let continuous = irr_continuity_witness(s, &wb).is_none() || si_minus_witness(s, &wb).is_none();
    WayBelowConvergenceReport {
        x: s.name(x).to_string(),
        y: s.name(y).to_string(),
        way_below: wb.holds(x, y),
        nets_checked: converging.len(),
        lemma_holds: !wb.holds(x, y) || x_eventually_below,
        converse_holds: continuous.then(|| !x_eventually_below || wb.holds(x, y)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::fixtures::*;

    fn tc(s: &FiniteSpace, l: &[&str]) -> TailClass {
        TailClass::new(s.set_of(l).unwrap()).unwrap()
    }

    #[test]
    fn verdict_examples() {
        let c = chain3();
        assert!(topological_converges(&c, tc(&c, &["b"]), 0));
        assert!(!topological_converges(&c, tc(&c, &["a"]), 2));
        assert!(irr_converges(&c, tc(&c, &["c"]), 0));
        let v = vee();
        assert!(!irr_converges(&v, tc(&v, &["a", "b"]), 1));
        assert!(irr_converges(&v, tc(&v, &["a", "b"]), 0));
    }

    #[test]
    fn irr_class_is_up_set_inclusion() {
        for s in [chain3(), vee(), diamond(), sierpinski(), discrete(3)] {
            for c in TailClass::all(s.len()) {
                for y in 0..s.len() {
                    assert_eq!(irr_converges(&s, c, y), c.points().is_subset(s.up(y)));
                }
            }
        }
    }

    #[test]
    fn induced_topology_examples() {
        let c = chain3();
        assert_eq!(induced_topology(&c, &ConvergenceClass::irr(&c)).unwrap(), c);
        for s in [vee(), diamond(), discrete(2)] {
            assert_eq!(induced_topology(&s, &ConvergenceClass::topological(&s)).unwrap(), s);
            assert_eq!(induced_topology(&s, &ConvergenceClass::irr(&s)).unwrap(), s);
        }
    }

    #[test]
    fn containment_examples() {
        let c = chain3();
        let coarser = Topology::from_family(3, [PointSet::EMPTY, PointSet::singleton(2), PointSet::full(3)]).unwrap();
        assert!(class_containment_check(c.topology(), &coarser).unwrap());
        assert!(class_containment_check(&coarser, c.topology()).unwrap());
        assert!(class_containment_check(c.topology(), c.topology()).unwrap());
        assert!(class_containment_check(discrete(2).topology(), sierpinski().topology()).unwrap());
    }

    #[test]
    fn kelley_examples() {
        for s in [chain3(), vee(), diamond()] {
            for a in KelleyAxiom::ALL {
                let r = kelley_check(&s, a, 3).unwrap();
                assert!(r.passed, "{a} {r:?}");
            }
        }
        let d = kelley_check(&vee(), KelleyAxiom::Divergence, 3).unwrap();
        assert!(d.example.is_some());
        assert!(matches!(
            kelley_check(&vee(), KelleyAxiom::Constants, 9),
            Err(Error::BudgetExceeded(9))
        ));
    }

    #[test]
    fn location_on_finite_spaces_is_degenerate() {
        for s in [chain3(), vee(), diamond(), point()] {
            let r = location_check(&s);
            assert!(r.si_within_irr);
            assert_eq!(r.irr_within_tau, Some(true));
            assert_eq!((r.si_opens, r.irr_opens), (r.opens, r.opens));
        }
    }

    #[test]
    fn way_below_characterization() {
        let c = chain3();
        let r = way_below_convergence_char(&c, 0, 2);
        assert!(r.way_below && r.lemma_holds);
        assert_eq!(r.converse_holds, Some(true));
        let r = way_below_convergence_char(&c, 2, 0);
        assert!(!r.way_below);
        assert_eq!(r.converse_holds, Some(true));
    }
}
