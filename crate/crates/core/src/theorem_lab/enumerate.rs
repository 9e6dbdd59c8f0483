//! Labeled and unlabeled partial orders on small carriers.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::poset::Poset;

pub const MAX_ENUMERATION: usize = 6;

/// Extends `p` by a new greatest-index point `n` placed above the down-set
/// `d` and below the up-set `u`.
fn extensions(p: &Poset) -> Vec<Poset> {
    let n = p.len();
    let subsets: Vec<PointSet> = PointSet::all_subsets(n).collect();
    let ups: Vec<PointSet> = subsets.iter().copied().filter(|s| p.is_up_set(*s)).collect();
    let downs: Vec<PointSet> = subsets.iter().copied().filter(|s| p.down_closure(*s) == *s).collect();
    let mut out = Vec::new();
    for &d in &downs {
        for &u in &ups {
            if !d.intersection(u).is_empty() || d.iter().any(|x| !u.is_subset(p.up(x))) {
                continue;
            }
            let mut rows: Vec<PointSet> = (0..n)
                .map(|x| if d.contains(x) { p.up(x).with(n) } else { p.up(x) })
                .collect();
            rows.push(u.with(n));
            out.push(Poset::from_up_sets_unchecked(rows));
        }
    }
    out
}

/// Every labeled partial order on `n` points, in a fixed order.
pub fn enumerate_labeled(n: usize) -> Result<Vec<Poset>> {
    if n > MAX_ENUMERATION {
        return Err(Error::TooLarge(n));
    }
    let mut level = vec![Poset::antichain(0)];
    for _ in 0..n {
        level = level.par_iter().flat_map_iter(extensions).collect();
    }
    Ok(level)
}

/// Relation matrix as a bit string, row-major.
fn encode(p: &Poset, perm: &[usize]) -> u64 {
    let n = p.len();
    let mut code = 0u64;
    for x in 0..n {
        for y in 0..n {
            if p.le(perm[x], perm[y]) {
                code |= 1 << (x * n + y);
            }
        }
    }
    code
}

/// Orderings of the carrier that sort points by `(|↓x|, |↑x|)`, permuting
/// freely within each block.
fn block_orders(p: &Poset) -> Vec<Vec<usize>> {
    let n = p.len();
    let key = |x: usize| (p.down(x).len(), p.up(x).len());
    let mut pts: Vec<usize> = (0..n).collect();
    pts.sort_by_key(|&x| key(x));
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for x in pts {
        match blocks.last_mut() {
            Some(b) if key(b[0]) == key(x) => b.push(x),
            _ => blocks.push(vec![x]),
        }
    }
    let mut orders = vec![Vec::new()];
    for b in blocks {
        let perms = permutations(&b);
        orders = orders
            .into_iter()
            .flat_map(|o: Vec<usize>| {
                perms.iter().map(move |q| {
                    let mut o = o.clone();
                    o.extend(q);
                    o
                })
            })
            .collect();
    }
    orders
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Isomorphism-invariant code: the least encoding over sorted relabelings.
pub fn canonical_code(p: &Poset) -> u64 {
    block_orders(p).iter().map(|o| encode(p, o)).min().unwrap_or(0)
}

/// The representative of `p` carrying its canonical code.
pub fn canonical_form(p: &Poset) -> Poset {
    let best = block_orders(p)
        .into_iter()
        .min_by_key(|o| encode(p, o))
        .unwrap_or_default();
    let mut inverse = vec![0; p.len()];
    for (i, &x) in best.iter().enumerate() {
        inverse[x] = i;
    }
    p.permute(&inverse)
}

/// One representative per isomorphism class, each in canonical form.
pub fn enumerate_unlabeled(n: usize) -> Result<Vec<Poset>> {
    if n > MAX_ENUMERATION {
        return Err(Error::TooLarge(n));
    }
    let mut level = vec![Poset::antichain(0)];
    for _ in 0..n {
        let candidates: Vec<(u64, Poset)> = level
            .par_iter()
            .flat_map_iter(extensions)
            .map(|q| (canonical_code(&q), q))
            .collect();
        let mut seen = BTreeSet::new();
        level = candidates
            .into_iter()
            .filter(|(c, _)| seen.insert(*c))
            .map(|(_, q)| canonical_form(&q))
            .collect();
    }
    Ok(level)
}

pub fn enumerate_posets(n: usize, up_to_iso: bool) -> Result<Vec<Poset>> {
    if up_to_iso {
        enumerate_unlabeled(n)
    } else {
        enumerate_labeled(n)
    }
}

/// Number of relabelings fixing `p`.
pub fn automorphisms(p: &Poset) -> usize {
    let id: Vec<usize> = (0..p.len()).collect();
    let code = encode(p, &id);
    permutations(&id).iter().filter(|o| encode(p, o) == code).count()
}
