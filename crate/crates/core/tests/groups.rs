mod common;

use common::*;
use fncheck_core::group::format::{self, GroupText};
use fncheck_core::{Group, GroupError};
use proptest::prelude::*;

#[test]
fn s3_from_permutations() {
    let s3 = s3();
    let g = &s3.group;
    assert_eq!(g.order(), 6);
    assert_eq!(g.primes(), &[(2, 1), (3, 1)]);
    g.validate().unwrap();
    // builder indices agree with the independently computed element list
    for a in 0..6u32 {
        for b in 0..6u32 {
            let prod = compose(&s3.elements[a as usize], &s3.elements[b as usize]);
            assert_eq!(g.mul(a, b), s3.index(&prod));
        }
    }
}

#[test]
fn small_builders() {
    let c4 = Group::cyclic(4);
    assert_eq!(c4.order(), 4);
    assert!(c4.is_abelian() && c4.is_cyclic());
    assert_eq!(a5().group.order(), 60);
    assert_eq!(q8().order(), 8);
    let q = q8();
    let involutions = (1..8u32).filter(|&x| q.element_order(x) == 2).count();
    assert_eq!(involutions, 1);
    assert!(!q.is_abelian());
    assert_eq!(sl2_3().order(), 24);
}

#[test]
fn semidirect_examples() {
    let s3 = Group::semidirect_product_cyclic(3, 2, 2, MAX).unwrap();
    assert_eq!(s3.order(), 6);
    assert!(!s3.is_abelian());
    let c5 = Group::semidirect_product_cyclic(5, 1, 1, MAX).unwrap();
    assert!(c5.is_cyclic());
    let f55 = Group::semidirect_product_cyclic(11, 5, 3, MAX).unwrap();
    assert_eq!(f55.order(), 55);
    assert!(!f55.is_abelian());
    f55.validate().unwrap();
    assert!(matches!(
        Group::semidirect_product_cyclic(7, 3, 3, MAX),
        Err(GroupError::BadAction { .. })
    ));
}

#[test]
fn non_group_table_rejected() {
    let rows = vec![vec![0, 1, 2, 3], vec![1, 1, 3, 2], vec![2, 3, 0, 1], vec![3, 2, 1, 0]];
    assert!(matches!(Group::from_table(4, &rows), Err(GroupError::NotAGroup { .. })));
}

#[test]
fn non_associative_latin_square_rejected() {
    // a loop of order 5 that is not a group
    let rows = vec![
        vec![0, 1, 2, 3, 4],
        vec![1, 0, 3, 4, 2],
        vec![2, 4, 0, 1, 3],
        vec![3, 2, 4, 0, 1],
        vec![4, 3, 1, 2, 0],
    ];
    match Group::from_table(5, &rows) {
        Err(GroupError::NotAGroup { .. }) => {}
        other => panic!("expected NotAGroup, got {other:?}"),
    }
}

#[test]
fn bad_shapes_and_permutations() {
    assert!(matches!(Group::from_table(2, &[vec![0, 1]]), Err(GroupError::BadShape(_))));
    assert!(matches!(
        Group::from_permutations(3, &[vec![0, 0, 1]], MAX),
        Err(GroupError::NotAPermutation { index: 0, degree: 3 })
    ));
    assert!(matches!(
        Group::from_permutations(5, &[vec![1, 2, 3, 4, 0], vec![1, 0, 2, 3, 4]], 100),
        Err(GroupError::BudgetExceeded { .. })
    ));
}

#[test]
fn table_with_identity_elsewhere_is_normalized() {
    // C3 with identity at index 2
    let rows = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
    let g = Group::from_table(3, &rows).unwrap();
    g.validate().unwrap();
    assert!(g.is_cyclic());
}

#[test]
fn quotients() {
    let s3 = s3();
    let g = &s3.group;
    let a3 = s3.sub(&[&[1, 2, 0]]);
    let q = g.quotient(&a3).unwrap();
    assert_eq!(q.quotient.order(), 2);
    assert_eq!(q.kernel(), a3);
    let c2 = s3.sub(&[&[1, 0, 2]]);
    assert!(matches!(g.quotient(&c2), Err(GroupError::NotNormal)));

    let c6 = Group::cyclic(6);
    let c3 = c6.generated_subgroup(&[2]);
    let q = c6.quotient(&c3).unwrap();
    assert!(q.quotient.is_cyclic());
    assert_eq!(q.quotient.order(), 2);
}

#[test]
fn centralizers_and_normalizers() {
    let s4 = s4();
    let g = &s4.group;
    let p3 = s4.sub(&[&[1, 2, 0, 3]]);
    assert_eq!(g.normalizer(&p3).order(), 6);
    assert_eq!(g.centralizer(&p3).order(), 3);
    let s3 = s3();
    let t = s3.sub(&[&[1, 0, 2]]);
    assert_eq!(s3.group.centralizer(&t), t);
    assert_eq!(s3.group.normalizer(&t), t);
    // conjugating <(0 1)> by (0 1 2) gives <(1 2)>
    let x = s3.index(&[1, 2, 0]);
    let conj = s3.group.conjugate_subgroup(&t, x);
    let expected = s3.sub(&[&[0, 2, 1]]);
    assert_eq!(conj, expected);
}

#[test]
fn subgroup_validation() {
    let g = Group::cyclic(6);
    assert!(g.subgroup(&[0, 2, 4]).is_ok());
    assert!(g.subgroup(&[0, 1]).is_err());
    assert!(g.subgroup(&[1, 2]).is_err());
    assert!(g.subgroup(&[0, 9]).is_err());
}

#[test]
fn subgroup_as_group_round_trip() {
    let s4 = s4();
    let g = &s4.group;
    let d8 = s4.sub(&[&[1, 2, 3, 0], &[2, 1, 0, 3]]);
    assert_eq!(d8.order(), 8);
    let (inner, emb) = g.subgroup_as_group(&d8);
    inner.validate().unwrap();
    assert_eq!(inner.order(), 8);
    assert_eq!(g.embed(&emb, &inner.whole()), d8);
}

#[test]
fn table_hash_is_stable_for_equal_tables() {
    let a = s4().group;
    let b = s4().group;
    assert_eq!(a.table_hash(), b.table_hash());
    assert_eq!(a.table_hash().len(), 16);
    assert_ne!(a.table_hash(), sl2_3().table_hash());
}

#[test]
fn format_round_trips() {
    for (name, g) in small_groups() {
        let text = format::table_text(&g, &name);
        let back = format::parse_group(&text, MAX).unwrap();
        assert_eq!(back.order(), g.order());
        for a in 0..g.order() as u32 {
            assert_eq!(back.row(a), g.row(a), "{name}");
        }
        assert_eq!(back.name(), Some(name.as_str()));
    }
}

#[test]
fn perm_format() {
    let text = "perm C4\ndegree 4\n1 2 3 0\n";
    let g = format::parse_group(text, MAX).unwrap();
    assert_eq!(g.order(), 4);
    assert!(g.is_cyclic());
    let emitted = format::perm_text("C4", 4, &[vec![1, 2, 3, 0]]);
    assert_eq!(emitted, text);
    assert!(matches!(format::parse(text).unwrap(), GroupText::Perm { degree: 4, .. }));
}

#[test]
fn parse_errors_carry_positions() {
    let short_row = "group bad\norder 2\n0 1\n1\n";
    match format::parse(short_row) {
        Err(GroupError::Parse { line, .. }) => assert_eq!(line, 4),
        other => panic!("{other:?}"),
    }
    let double_space = "group bad\norder 2\n0  1\n1 0\n";
    match format::parse(double_space) {
        Err(GroupError::Parse { line, column, .. }) => assert_eq!((line, column), (3, 3)),
        other => panic!("{other:?}"),
    }
    assert!(matches!(format::parse("order 2\n"), Err(GroupError::Parse { line: 1, .. })));
    assert!(matches!(
        format::parse("group g\norder x\n"),
        Err(GroupError::Parse { line: 2, .. })
    ));
}

#[test]
fn regular_representation_rebuilds_the_group() {
    for (name, g) in small_groups() {
        let (degree, gens) = format::regular_permutations(&g);
        let h = Group::from_permutations(degree, &gens, MAX).unwrap();
        assert_eq!(h.order(), g.order(), "{name}");
        assert_eq!(h.is_abelian(), g.is_abelian(), "{name}");
    }
}

fn semidirect_params() -> impl Strategy<Value = (usize, usize, usize)> {
    (2usize..14, 1usize..7, 1usize..14).prop_filter_map("valid action", |(n, m, k)| {
        let k = k % n;
        let ok = fncheck_core::arith::gcd(k as u64, n as u64) == 1
            && fncheck_core::arith::pow_mod(k as u64, m as u64, n as u64) == 1;
        ok.then_some((n, m, k))
    })
}

fn random_perm_group() -> impl Strategy<Value = Group> {
    (
        Just((0u32..5).collect::<Vec<u32>>()).prop_shuffle(),
        Just((0u32..5).collect::<Vec<u32>>()).prop_shuffle(),
    )
        .prop_map(|(a, b)| Group::from_permutations(5, &[a, b], MAX).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn semidirect_is_a_group((n, m, k) in semidirect_params()) {
        let g = Group::semidirect_product_cyclic(n, m, k, MAX).unwrap();
        prop_assert_eq!(g.order(), n * m);
        g.validate().unwrap();
        prop_assert_eq!(g.is_abelian(), k == 1 % n || m == 1);
    }

    #[test]
    fn quotient_is_a_homomorphism(g in random_perm_group(), pick in any::<prop::sample::Index>()) {
        let normals = fncheck_core::lattice::normal_subgroups(&g, &Default::default()).unwrap();
        let n = pick.get(&normals);
        let q = g.quotient(n).unwrap();
        q.quotient.validate().unwrap();
        prop_assert_eq!(q.quotient.order() * n.order(), g.order());
        for a in 0..g.order() as u32 {
            for b in 0..g.order() as u32 {
                let lhs = q.projection[g.mul(a, b) as usize];
                let rhs = q.quotient.mul(q.projection[a as usize], q.projection[b as usize]);
                prop_assert_eq!(lhs, rhs);
            }
        }
        prop_assert_eq!(&q.kernel(), n);
    }

    #[test]
    fn conjugates_have_equal_order(g in random_perm_group(), x in any::<prop::sample::Index>(), y in any::<prop::sample::Index>()) {
        let n = g.order();
        let h = g.generated_subgroup(&[x.index(n) as u32]);
        let c = g.conjugate_subgroup(&h, y.index(n) as u32);
        prop_assert_eq!(c.order(), h.order());
        prop_assert_eq!(g.normalizer(&c).order(), g.normalizer(&h).order());
        prop_assert!(g.centralizer(&h).is_subset(&g.normalizer(&h)));
    }

    #[test]
    fn direct_product_order(a in 1usize..12, b in 1usize..12) {
        let p = Group::direct_product(&Group::cyclic(a), &Group::cyclic(b), MAX).unwrap();
        prop_assert_eq!(p.order(), a * b);
        prop_assert!(p.is_abelian());
        let coprime = fncheck_core::arith::gcd(a as u64, b as u64) == 1;
        prop_assert_eq!(p.is_cyclic(), coprime);
    }

    #[test]
    fn random_table_round_trip(g in random_perm_group()) {
        let text = format::table_text(&g, "r");
        let back = format::parse_group(&text, MAX).unwrap();
        for a in 0..g.order() as u32 {
            prop_assert_eq!(back.row(a), g.row(a));
        }
    }

    #[test]
    fn generated_subgroup_matches_naive_closure(g in random_perm_group(), seed in prop::collection::vec(any::<prop::sample::Index>(), 0..3)) {
        let s: Vec<u32> = seed.iter().map(|i| i.index(g.order()) as u32).collect();
        let h = g.generated_subgroup(&s);
        let naive: Vec<u32> = closure(&g, &s).into_iter().collect();
        prop_assert_eq!(h.elements(), naive.as_slice());
        prop_assert_eq!(g.order() % h.order(), 0);
        prop_assert_eq!(g.generated_subgroup(&g.generators(&h)), h);
    }
}
