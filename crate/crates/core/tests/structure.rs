//! Characteristic subgroups, Sylow theory and the nilpotence family,
//! checked against worked examples and brute-force oracles.

mod common;

use std::collections::BTreeSet;

use common::*;
use fncheck_core::{charsub, lattice, sylow, Budgets, Group, Subgroup};

fn b() -> Budgets {
    Budgets::default()
}

#[test]
fn centres() {
    assert!(charsub::centre(&Group::cyclic(6)).is_whole());
    assert!(charsub::centre(&s3().group).is_trivial());
    assert_eq!(charsub::centre(&q8()).order(), 2);
}

#[test]
fn hypercentre_examples() {
    assert!(charsub::hypercentre(&q8()).is_whole());
    assert!(charsub::hypercentre(&s3().group).is_trivial());
    let c2s3 = product(&cyclic(2), &s3().group);
    let factor = c2s3.generated_subgroup(&[6]); // (1, e)
    assert_eq!(charsub::hypercentre(&c2s3), factor);
    assert_eq!(charsub::hypercentre_by_chief(&c2s3, &b()).unwrap(), factor);
    assert!(charsub::hypercentre_by_chief(&s3().group, &b()).unwrap().is_trivial());
    assert!(charsub::hypercentre_by_chief(&d2n(4).group, &b()).unwrap().is_whole());
    // SL(2,3): the upper central series stops at the centre
    assert_eq!(charsub::hypercentre(&sl2_3()).order(), 2);
}

#[test]
fn hypercentre_dual_definition() {
    for (name, g) in small_groups() {
        let series = charsub::upper_central_series(&g);
        assert!(series.terms.windows(2).all(|w| w[0].is_proper_subset(&w[1])), "{name}");
        assert_eq!(
            charsub::hypercentre(&g),
            charsub::hypercentre_by_chief(&g, &b()).unwrap(),
            "{name}"
        );
    }
}

#[test]
fn derived_subgroups() {
    assert!(charsub::derived_subgroup(&Group::cyclic(12)).is_trivial());
    assert_eq!(charsub::derived_subgroup(&s3().group).order(), 3);
    let s4 = s4();
    let a4 = s4.sub(&[&[1, 2, 0, 3], &[1, 0, 3, 2]]);
    assert_eq!(a4.order(), 12);
    assert_eq!(charsub::derived_subgroup(&s4.group), a4);
    let series: Vec<usize> = charsub::derived_series(&s4.group).iter().map(Subgroup::order).collect();
    assert_eq!(series, vec![24, 12, 4, 1]);
    assert!(charsub::derived_subgroup(&a5().group).is_whole());
}

#[test]
fn cores() {
    let s4 = s4();
    let v4 = s4.sub(&[&[1, 0, 3, 2], &[2, 3, 0, 1]]);
    assert_eq!(charsub::p_core(&s4.group, 2), v4);
    assert!(charsub::p_core(&s3().group, 2).is_trivial());
    let g = ex330();
    assert!(charsub::pi_core(&g, &[2, 3, 5, 11], &b()).unwrap().is_whole());
    assert_eq!(charsub::pi_core(&g, &[3, 11], &b()).unwrap().order(), 33);
    assert_eq!(charsub::pi_core(&g, &[2, 5], &b()).unwrap().order(), 1);
}

#[test]
fn fitting_examples() {
    assert!(charsub::fitting(&q8()).is_whole());
    assert_eq!(charsub::fitting(&s3().group).order(), 3);
    assert_eq!(charsub::fitting(&s4().group).order(), 4);
    assert_eq!(charsub::fitting(&sl2_3()).order(), 8);
    assert_eq!(charsub::fitting(&ex330()).order(), 33);
}

#[test]
fn fitting_is_the_largest_normal_nilpotent_subgroup() {
    for (name, g) in small_groups() {
        let whole: Vec<u32> = (0..g.order() as u32).collect();
        let best = oracle_subgroups(&g)
            .into_iter()
            .filter(|h| normal_in(&g, h, &whole) && oracle_nilpotent(&g, h))
            .max_by_key(Vec::len)
            .unwrap();
        assert_eq!(elems(&charsub::fitting(&g)), best, "{name}");
    }
}

#[test]
fn nilpotent_subgroup_test_matches_oracle() {
    for (name, g) in small_groups() {
        let lat = lattice::all_subgroups(&g, &b()).unwrap();
        for h in lat.subgroups() {
            assert_eq!(g.is_nilpotent_subgroup(h), oracle_nilpotent(&g, h.elements()), "{name} {h:?}");
        }
    }
}

#[test]
fn frattini_examples() {
    let fr = |g: &Group| charsub::frattini(g, &lattice::all_subgroups(g, &b()).unwrap());
    assert!(fr(&Group::cyclic(7)).is_trivial());
    assert_eq!(fr(&Group::cyclic(4)).order(), 2);
    assert!(fr(&s3().group).is_trivial());
    assert_eq!(fr(&q8()).order(), 2);
    assert_eq!(fr(&sl2_3()).order(), 2);
    assert!(fr(&Group::cyclic(1)).is_whole());
}

#[test]
fn frattini_is_intersection_of_maximals() {
    for (name, g) in small_groups() {
        let all: Vec<Vec<u32>> = oracle_subgroups(&g).into_iter().collect();
        let n = g.order();
        let maximal: Vec<&Vec<u32>> = all
            .iter()
            .filter(|h| h.len() < n && !all.iter().any(|k| k.len() > h.len() && k.len() < n && h.iter().all(|x| k.contains(x))))
            .collect();
        let mut meet: BTreeSet<u32> = (0..n as u32).collect();
        for m in maximal {
            meet.retain(|x| m.contains(x));
        }
        let lat = lattice::all_subgroups(&g, &b()).unwrap();
        assert_eq!(elems(&charsub::frattini(&g, &lat)), meet.into_iter().collect::<Vec<_>>(), "{name}");
    }
}

#[test]
fn f0_examples() {
    assert!(charsub::f0(&d2n(4).group).is_whole());
    assert_eq!(charsub::f0(&s3().group).order(), 3);
    assert_eq!(charsub::f0(&ex330()).order(), 33);
    assert!(charsub::f0(&s4().group).is_trivial());
}

#[test]
fn focal_subgroups() {
    let c12 = Group::cyclic(12);
    assert!(charsub::focal_subgroup(&c12, &sylow::sylow_subgroup(&c12, 2)).unwrap().is_trivial());
    let s3 = s3();
    let a3 = s3.sub(&[&[1, 2, 0]]);
    assert_eq!(charsub::focal_subgroup(&s3.group, &a3).unwrap(), a3);
    let t = s3.sub(&[&[1, 0, 2]]);
    assert!(charsub::focal_subgroup(&s3.group, &t).unwrap().is_trivial());
    let not_sylow = s4().sub(&[&[1, 0, 2, 3]]);
    assert!(charsub::focal_subgroup(&s4().group, &not_sylow).is_err());
}

#[test]
fn sylow_subgroups() {
    let c12 = Group::cyclic(12);
    let p2 = sylow::sylow_subgroup(&c12, 2);
    assert_eq!(p2.order(), 4);
    assert!(c12.quotient(&p2).is_ok());
    assert_eq!(sylow::sylow_subgroup(&s3().group, 3).order(), 3);
    let s4 = s4().group;
    let p = sylow::sylow_subgroup(&s4, 2);
    assert_eq!(p.order(), 8);
    assert!(!g_is_abelian(&s4, &p));
    assert_eq!(sylow::all_sylow(&s3().group, 2).len(), 3);
    assert_eq!(sylow::all_sylow(&s4, 3).len(), 4);
    assert_eq!(sylow::all_sylow(&s4, 2).len(), 3);
    let a5 = a5().group;
    assert_eq!(sylow::all_sylow(&a5, 2).len(), 5);
    assert_eq!(sylow::all_sylow(&a5, 3).len(), 10);
    assert_eq!(sylow::all_sylow(&a5, 5).len(), 6);
    assert_eq!(sylow::all_sylow(&q8(), 2).len(), 1);
}

fn g_is_abelian(g: &Group, h: &Subgroup) -> bool {
    h.elements().iter().all(|&a| h.elements().iter().all(|&c| g.mul(a, c) == g.mul(c, a)))
}

#[test]
fn sylow_counts_match_lattice() {
    for (name, g) in small_groups() {
        let lat = lattice::all_subgroups(&g, &b()).unwrap();
        for &(p, e) in g.primes() {
            let full = p.pow(e) as usize;
            let expected = lat.subgroups().iter().filter(|h| h.order() == full).count();
            let found = sylow::all_sylow(&g, p);
            assert_eq!(found.len(), expected, "{name} p={p}");
            assert!(found.iter().all(|s| sylow::is_sylow(&g, s)));
        }
    }
}

#[test]
fn sylow_bases() {
    let s3 = s3().group;
    let basis = sylow::sylow_basis(&s3, &b()).unwrap().unwrap();
    assert!(basis.validate(&s3));
    assert_eq!(basis.member(2).unwrap().order(), 2);
    assert_eq!(basis.member(3).unwrap().order(), 3);
    let q = q8();
    let qb = sylow::sylow_basis(&q, &b()).unwrap().unwrap();
    assert!(qb.member(2).unwrap().is_whole());
    assert!(sylow::sylow_basis(&a5().group, &b()).unwrap().is_none());
    for (name, g) in small_groups() {
        match sylow::sylow_basis(&g, &b()).unwrap() {
            Some(basis) => assert!(basis.validate(&g), "{name}"),
            None => assert!(!sylow::is_soluble(&g), "{name}"),
        }
    }
}

#[test]
fn hall_subgroups() {
    let g = ex330();
    assert!(sylow::hall_subgroup(&g, &[2, 3, 5, 11], &b()).unwrap().unwrap().is_whole());
    let h = sylow::hall_subgroup(&g, &[2, 5], &b()).unwrap().unwrap();
    assert_eq!(h.order(), 10);
    let (inner, _) = g.subgroup_as_group(&h);
    assert!(inner.is_cyclic());
    let s3 = s3().group;
    assert_eq!(sylow::hall_subgroup(&s3, &[2], &b()).unwrap().unwrap().order(), 2);
}

#[test]
fn nilpotence_family() {
    assert!(sylow::is_nilpotent(&q8()));
    assert!(!sylow::is_nilpotent(&s3().group));
    assert!(sylow::is_soluble(&s4().group));
    assert!(!sylow::is_soluble(&a5().group));
    let s3 = s3().group;
    assert!(sylow::is_p_nilpotent(&s3, 2, &b()).unwrap());
    assert!(!sylow::is_p_nilpotent(&s3, 3, &b()).unwrap());
    assert!(sylow::is_p_soluble(&s3, 2, &b()).unwrap());
    assert!(!sylow::is_p_soluble(&a5().group, 2, &b()).unwrap());
    assert!(!sylow::is_p_soluble(&a5().group, 5, &b()).unwrap());
    assert!(sylow::is_p_soluble(&a5().group, 7, &b()).unwrap());
}

#[test]
fn p_decomposability() {
    assert!(sylow::is_p_decomposable(&Group::cyclic(6), 2, &b()).unwrap());
    assert!(sylow::is_p_decomposable(&product(&cyclic(2), &cyclic(4)), 2, &b()).unwrap());
    assert!(!sylow::is_p_decomposable(&s3().group, 3, &b()).unwrap());
    assert!(sylow::is_p_decomposable(&product(&cyclic(5), &s3().group), 5, &b()).unwrap());
}

#[test]
fn dispersion() {
    let ord = |g: &Group| sylow::dispersion_ordering(g, &b()).unwrap().map(|d| d.ordering);
    assert_eq!(ord(&s3().group), Some(vec![3, 2]));
    assert_eq!(ord(&Group::cyclic(30)), Some(vec![2, 3, 5]));
    assert_eq!(ord(&s4().group), None);
    assert_eq!(ord(&a4().group), Some(vec![2, 3]));
    assert_eq!(ord(&a5().group), None);
}

#[test]
fn dispersion_orderings_are_sylow_towers() {
    for (name, g) in small_groups() {
        let Some(d) = sylow::dispersion_ordering(&g, &b()).unwrap() else {
            continue;
        };
        let mut seed = Vec::new();
        for p in &d.ordering {
            seed.extend(g.generators(&sylow::sylow_subgroup(&g, *p)));
            let prefix = g.generated_subgroup(&seed);
            assert!(lattice::is_normal(&g, &prefix), "{name}");
        }
    }
}
