#![allow(dead_code)]

use std::collections::BTreeSet;

use fncheck_core::{Budgets, Group, GroupContext, Subgroup};

pub const MAX: usize = 512;

pub fn perm(images: &[u32]) -> Vec<u32> {
    images.to_vec()
}

/// `(g h)(i) = g(h(i))`.
pub fn compose(g: &[u32], h: &[u32]) -> Vec<u32> {
    h.iter().map(|&i| g[i as usize]).collect()
}

/// Element list in builder index order, computed independently: identity,
/// then breadth-first layers each sorted lexicographically.
pub fn perm_elements(degree: usize, gens: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let id: Vec<u32> = (0..degree as u32).collect();
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    seen.insert(id.clone());
    let mut out = vec![id];
    let mut layer_start = 0;
    loop {
        let layer_end = out.len();
        let mut next: BTreeSet<Vec<u32>> = BTreeSet::new();
        for e in &out[layer_start..layer_end] {
            for g in gens {
                let y = compose(e, g);
                if !seen.contains(&y) {
                    next.insert(y);
                }
            }
        }
        if next.is_empty() {
            return out;
        }
        for y in next {
            seen.insert(y.clone());
            out.push(y);
        }
        layer_start = layer_end;
    }
}

pub struct PermGroup {
    pub group: Group,
    pub elements: Vec<Vec<u32>>,
}

impl PermGroup {
    pub fn new(degree: usize, gens: &[&[u32]]) -> Self {
        let gens: Vec<Vec<u32>> = gens.iter().map(|g| g.to_vec()).collect();
        let group = Group::from_permutations(degree, &gens, MAX).unwrap();
        let elements = perm_elements(degree, &gens);
        PermGroup { group, elements }
    }

    pub fn index(&self, p: &[u32]) -> u32 {
        self.elements.iter().position(|e| e == p).expect("element of the group") as u32
    }

    pub fn sub(&self, gens: &[&[u32]]) -> Subgroup {
        let idx: Vec<u32> = gens.iter().map(|g| self.index(g)).collect();
        self.group.generated_subgroup(&idx)
    }
}

pub fn s3() -> PermGroup {
    PermGroup::new(3, &[&[1, 0, 2], &[1, 2, 0]])
}

pub fn s4() -> PermGroup {
    PermGroup::new(4, &[&[1, 0, 2, 3], &[1, 2, 3, 0]])
}

pub fn a4() -> PermGroup {
    PermGroup::new(4, &[&[1, 2, 0, 3], &[1, 0, 3, 2]])
}

pub fn a5() -> PermGroup {
    PermGroup::new(5, &[&[1, 2, 0, 3, 4], &[1, 2, 3, 4, 0]])
}

pub fn d2n(n: usize) -> PermGroup {
    let r: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
    let s: Vec<u32> = (0..n as u32).map(|i| (n as u32 - i) % n as u32).collect();
    PermGroup::new(n, &[&r, &s])
}

/// Quaternion group as a subgroup of the symmetric group on 8 points
/// (left regular action).
pub fn q8() -> Group {
    Group::from_permutations(
        8,
        &[vec![1, 2, 3, 0, 5, 6, 7, 4], vec![4, 7, 6, 5, 2, 1, 0, 3]],
        MAX,
    )
    .unwrap()
}

pub fn sl2_3() -> Group {
    let mul = |a: &[u32; 4], b: &[u32; 4]| {
        [
            (a[0] * b[0] + a[1] * b[2]) % 3,
            (a[0] * b[1] + a[1] * b[3]) % 3,
            (a[2] * b[0] + a[3] * b[2]) % 3,
            (a[2] * b[1] + a[3] * b[3]) % 3,
        ]
    };
    Group::from_generators([1, 0, 0, 1], &[[1, 1, 0, 1], [0, 2, 1, 0]], mul, MAX).unwrap()
}

pub fn cyclic(n: usize) -> Group {
    Group::cyclic(n)
}

pub fn product(a: &Group, b: &Group) -> Group {
    Group::direct_product(a, b, MAX).unwrap()
}

pub fn v4() -> Group {
    product(&cyclic(2), &cyclic(2))
}

pub fn sd(n: usize, m: usize, k: usize) -> Group {
    Group::semidirect_product_cyclic(n, m, k, MAX).unwrap()
}

/// `S3 × (C11 ⋊ C5)`.
pub fn ex330() -> Group {
    product(&s3().group, &sd(11, 5, 3))
}

pub fn ctx(g: Group) -> GroupContext {
    GroupContext::new(g, Budgets::default())
}

/// A varied list of small groups (order at most 60) for exhaustive checks.
pub fn small_groups() -> Vec<(String, Group)> {
    let mut out: Vec<(String, Group)> = Vec::new();
    for n in [1, 2, 3, 4, 5, 6, 8, 9, 12, 16, 30] {
        out.push((format!("C{n}"), cyclic(n)));
    }
    out.push(("V4".into(), v4()));
    out.push(("C2xC2xC2".into(), product(&v4(), &cyclic(2))));
    out.push(("C2xC4".into(), product(&cyclic(2), &cyclic(4))));
    out.push(("C3xC3".into(), product(&cyclic(3), &cyclic(3))));
    out.push(("Q8".into(), q8()));
    for n in [3, 4, 5, 6, 8] {
        out.push((format!("D{}", 2 * n), d2n(n).group));
    }
    out.push(("S3".into(), s3().group));
    out.push(("A4".into(), a4().group));
    out.push(("S4".into(), s4().group));
    out.push(("A5".into(), a5().group));
    out.push(("SL2_3".into(), sl2_3()));
    out.push(("C3:C4".into(), sd(3, 4, 2)));
    out.push(("C5:C4".into(), sd(5, 4, 2)));
    out.push(("C7:C3".into(), sd(7, 3, 2)));
    out.push(("C9:C3".into(), sd(9, 3, 4)));
    out.push(("C2xS3".into(), product(&cyclic(2), &s3().group)));
    out.push(("C3xS3".into(), product(&cyclic(3), &s3().group)));
    out.push(("C2xA4".into(), product(&cyclic(2), &a4().group)));
    out.push(("S3xS3".into(), product(&s3().group, &s3().group)));
    out.push(("C2xD8".into(), product(&cyclic(2), &d2n(4).group)));
    out.push(("C2xQ8".into(), product(&cyclic(2), &q8())));
    out
}

// ---- brute-force oracles, written independently of the library ----

pub fn closure(g: &Group, seed: &[u32]) -> BTreeSet<u32> {
    let mut set: BTreeSet<u32> = BTreeSet::new();
    set.insert(0);
    set.extend(seed.iter().copied());
    loop {
        let cur: Vec<u32> = set.iter().copied().collect();
        let mut grew = false;
        for &a in &cur {
            for &b in &cur {
                grew |= set.insert(g.mul(a, b));
            }
        }
        if !grew {
            return set;
        }
    }
}

pub fn is_closed(g: &Group, s: &BTreeSet<u32>) -> bool {
    s.contains(&0) && s.iter().all(|&a| s.iter().all(|&b| s.contains(&g.mul(a, b))))
}

/// All subgroups, by joining cyclic subgroups until nothing new appears.
pub fn oracle_subgroups(g: &Group) -> BTreeSet<Vec<u32>> {
    let n = g.order() as u32;
    let cyclics: BTreeSet<Vec<u32>> = (0..n).map(|x| closure(g, &[x]).into_iter().collect()).collect();
    let mut all = cyclics.clone();
    let mut frontier: Vec<Vec<u32>> = all.iter().cloned().collect();
    while let Some(h) = frontier.pop() {
        for c in &cyclics {
            let mut seed = h.clone();
            seed.extend(c);
            let j: Vec<u32> = closure(g, &seed).into_iter().collect();
            if all.insert(j.clone()) {
                frontier.push(j);
            }
        }
    }
    all
}

/// All subgroups by testing every subset containing the identity.
pub fn oracle_subgroups_exhaustive(g: &Group) -> BTreeSet<Vec<u32>> {
    let n = g.order();
    assert!(n <= 16);
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << (n - 1)) {
        let s: BTreeSet<u32> = std::iter::once(0)
            .chain((1..n as u32).filter(|&i| mask & (1 << (i - 1)) != 0))
            .collect();
        if is_closed(g, &s) {
            out.insert(s.into_iter().collect());
        }
    }
    out
}

pub fn normal_in(g: &Group, h: &[u32], within: &[u32]) -> bool {
    within
        .iter()
        .all(|&x| h.iter().all(|&y| h.binary_search(&g.mul(g.mul(x, y), g.inv(x))).is_ok()))
}

/// Nilpotency by iterating the centre of successive quotients, on element
/// sets: `Z_{i+1} = { x : [x, y] in Z_i for all y in H }`.
pub fn oracle_nilpotent(g: &Group, h: &[u32]) -> bool {
    let mut z: BTreeSet<u32> = [0].into();
    loop {
        let next: BTreeSet<u32> = h
            .iter()
            .copied()
            .filter(|&x| h.iter().all(|&y| z.contains(&g.commutator(x, y))))
            .collect();
        if next.len() == h.len() {
            return true;
        }
        if next.len() == z.len() {
            return false;
        }
        z = next;
    }
}

pub fn elems(h: &Subgroup) -> Vec<u32> {
    h.elements().to_vec()
}
