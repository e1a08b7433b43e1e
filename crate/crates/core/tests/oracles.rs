mod common;

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use rand::Rng;

use booldeg::boolfn::{
    block_sensitivity_at_point, decision_tree_complexity, influence, Family, FamilyParams,
};
use booldeg::degrees::{deg, ndeg, partial_degree, rdeg, sdeg};
use booldeg::{BooleanFunction, PartialBooleanFunction};
use common::*;

fn all3() -> impl Iterator<Item = BooleanFunction> {
    (0..256u64).map(|i| BooleanFunction::from_index(3, i).unwrap())
}

#[test]
fn degree_matches_mobius() {
    for f in all3() {
        assert_eq!(deg(&f).degree, mobius_degree(&f), "{}", f.table_string());
    }
    let mut r = rng(11);
    for _ in 0..40 {
        let f = random_function(&mut r, 4);
        assert_eq!(deg(&f).degree, mobius_degree(&f));
    }
}

#[test]
fn ndeg_is_minimal_for_three_bits() {
    for f in all3() {
        let w = ndeg(&f);
        for x in 0..8 {
            assert_eq!(!w.polynomial.eval(x).is_zero(), f.value(x));
        }
        assert!(w.polynomial.degree() <= w.degree);
        assert!(ndeg_feasible(&f, w.degree));
        if w.degree > 0 {
            assert!(!ndeg_feasible(&f, w.degree - 1), "{}", f.table_string());
        }
    }
}

#[test]
fn sdeg_is_minimal_for_three_bits() {
    for f in all3() {
        let w = sdeg(&f);
        for x in 0..8 {
            let v = w.polynomial.eval(x);
            assert!(!v.is_zero());
            assert_eq!(v.is_negative(), f.value(x));
        }
        assert!(sdeg_feasible(&f, w.degree));
        if w.degree > 0 {
            assert!(!sdeg_feasible(&f, w.degree - 1), "{}", f.table_string());
        }
    }
}

#[test]
fn rdeg_is_max_of_oracle_ndegs() {
    let first = |f: &BooleanFunction| (0..=f.arity()).find(|&d| ndeg_feasible(f, d)).unwrap();
    for f in all3() {
        let want = first(&f).max(first(&f.negate()));
        assert_eq!(rdeg(&f).degree, want);
    }
}

#[test]
fn decision_tree_matches_plain_recursion() {
    for f in all3() {
        assert_eq!(decision_tree_complexity(&f), dtree_depth(3, f.table()));
    }
    let mut r = rng(12);
    for _ in 0..25 {
        let f = random_function(&mut r, 4);
        assert_eq!(decision_tree_complexity(&f), dtree_depth(4, f.table()));
    }
}

#[test]
fn block_sensitivity_and_influence_match_brute_force() {
    let mut r = rng(13);
    let fs: Vec<BooleanFunction> = all3()
        .chain((0..20).map(|_| random_function(&mut r, 4)))
        .collect();
    for f in &fs {
        for x in 0..1u32 << f.arity() {
            let packing = block_sensitivity_at_point(f, x);
            assert!(packing.is_valid_for(f));
            assert_eq!(packing.size(), bs_brute(f, x));
        }
        for i in 0..f.arity() {
            assert_eq!(influence(f, i).unwrap(), influence_brute(f, i));
        }
    }
}

#[test]
fn partial_degree_is_minimal() {
    for n in [2, 3] {
        let pf = Family::Counterexample
            .build(FamilyParams::n(n))
            .unwrap()
            .into_partial();
        let pd = partial_degree(&pf);
        assert!(partial_feasible(&pf, pd.degree));
        assert!(!partial_feasible(&pf, pd.degree - 1));
    }
    let mut r = rng(14);
    for _ in 0..60 {
        let mut values = BTreeMap::new();
        for x in 0..8u32 {
            if r.gen_bool(0.6) {
                values.insert(x, r.gen_bool(0.5));
            }
        }
        let pf = PartialBooleanFunction::new(3, values).unwrap();
        let pd = partial_degree(&pf);
        for (x, v) in pf.entries() {
            assert_eq!(pd.interpolant.eval(x), q(v as i64));
        }
        assert!(partial_feasible(&pf, pd.degree));
        if pd.degree > 0 {
            assert!(!partial_feasible(&pf, pd.degree - 1));
        }
    }
}
