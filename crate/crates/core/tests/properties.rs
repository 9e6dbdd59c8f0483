use proptest::prelude::*;

use irrtop::convergence::{irr_converges, topological_converges, TailClass};
use irrtop::irr::{is_irreducible, way_below_irr};
use irrtop::properties::FLAG_NAMES;
use irrtop::si::si_derivative;
use irrtop::theorem_lab::{canonical_code, Expr};
use irrtop::{check_properties, FiniteSpace, PointSet, Poset};

/// A random poset on up to 5 points: edges only go from lower to higher
/// index, so the closure is antisymmetric.
fn poset() -> impl Strategy<Value = Poset> {
    (1usize..=5).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|x| (0..n).map(move |y| (x, y)))
                .filter(|&(x, y)| x < y && bits[x * n + y])
                .collect();
            Poset::from_pairs(n, &pairs).unwrap()
        })
    })
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        any::<bool>().prop_map(Expr::Const),
        proptest::sample::select(FLAG_NAMES.to_vec()).prop_map(|f| Expr::Flag(f.to_string())),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|a| Expr::Not(Box::new(a))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::And(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Or(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Implies(Box::new(a), Box::new(b))),
            (inner.clone(), inner).prop_map(|(a, b)| Expr::Iff(Box::new(a), Box::new(b))),
        ]
    })
}

proptest! {
    #[test]
    fn way_below_is_reverse_upset_inclusion(p in poset()) {
        let s = FiniteSpace::alexandroff(&p);
        for x in 0..s.len() {
            for y in 0..s.len() {
                prop_assert_eq!(way_below_irr(&s, x, y), s.up(y).is_subset(s.up(x)));
            }
        }
    }

    #[test]
    fn irreducible_iff_greatest(p in poset(), bits in any::<u16>()) {
        let s = FiniteSpace::alexandroff(&p);
        let e = PointSet::from_bits(bits).intersection(s.carrier());
        if e.is_empty() {
            prop_assert!(is_irreducible(&s, e).is_err());
        } else {
            let greatest = e.iter().any(|g| e.iter().all(|x| s.le(x, g)));
            prop_assert_eq!(is_irreducible(&s, e).unwrap(), greatest);
        }
    }

    #[test]
    fn finite_spaces_have_every_property(p in poset()) {
        let s = FiniteSpace::alexandroff(&p);
        let r = check_properties(&s);
        prop_assert!(r.is_consistent());
        for f in FLAG_NAMES {
            prop_assert_eq!(r.flag(f), Some(true), "{}", f);
        }
        prop_assert_eq!(si_derivative(&s), s);
    }

    #[test]
    fn convergence_coincides(p in poset()) {
        let s = FiniteSpace::alexandroff(&p);
        for c in TailClass::all(s.len()) {
            for x in 0..s.len() {
                prop_assert_eq!(irr_converges(&s, c, x), topological_converges(&s, c, x));
            }
        }
    }

    #[test]
    fn json_round_trip(p in poset()) {
        let s = FiniteSpace::alexandroff(&p);
        let text = serde_json::to_string(&s.to_json()).unwrap();
        prop_assert_eq!(FiniteSpace::from_json_str(&text).unwrap(), s);
    }

    #[test]
    fn canonical_code_ignores_labels(p in poset(), seed in any::<u64>()) {
        let n = p.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(canonical_code(&p.permute(&perm)), canonical_code(&p));
    }

    #[test]
    fn expressions_print_and_reparse(e in expr()) {
        let back = Expr::parse(&e.to_string()).unwrap();
        prop_assert_eq!(back, e);
    }
}
