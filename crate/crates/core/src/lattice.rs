//! Subgroup lattices and normal structure.

use std::collections::{HashMap, HashSet, VecDeque};

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::arith;
use crate::budget::Budgets;
use crate::error::{GroupError, Result};
use crate::group::{Group, Subgroup};

/// One factor `H/K` of a chief series.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChiefFactor {
    pub lower: Subgroup,
    pub upper: Subgroup,
    pub factor_order: usize,
    pub prime: Option<u64>,
    /// Whether `C_G(H/K) = G`.
    pub central: bool,
}

/// Every subgroup of a group, sorted by `(order, elements)`, with the
/// partition into conjugacy classes.
#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    subgroups: Vec<Subgroup>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    index: HashMap<Subgroup, usize>,
}

impl SubgroupLattice {
    fn new(g: &Group, mut subgroups: Vec<Subgroup>) -> Self {
        subgroups.sort();
        let index: HashMap<Subgroup, usize> = subgroups.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let gens = g.generators(&g.whole());
        let mut class_of = vec![usize::MAX; subgroups.len()];
        let mut classes = Vec::new();
        for i in 0..subgroups.len() {
            if class_of[i] != usize::MAX {
                continue;
            }
            let c = classes.len();
            let mut members = vec![i];
            class_of[i] = c;
            let mut frontier = vec![i];
            while let Some(j) = frontier.pop() {
                for &x in &gens {
                    let conj = g.conjugate_subgroup(&subgroups[j], x);
                    let k = index[&conj];
                    if class_of[k] == usize::MAX {
                        class_of[k] = c;
                        members.push(k);
                        frontier.push(k);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        SubgroupLattice {
            subgroups,
            classes,
            class_of,
            index,
        }
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    /// Conjugacy classes as index lists, ordered by least member.
    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, i: usize) -> &[usize] {
        &self.classes[self.class_of[i]]
    }

    pub fn index_of(&self, h: &Subgroup) -> Option<usize> {
        self.index.get(h).copied()
    }

    /// A subgroup is normal exactly when its conjugacy class is a singleton.
    pub fn is_normal_at(&self, i: usize) -> bool {
        self.class_of(i).len() == 1
    }

    pub fn normal_subgroups(&self) -> Vec<Subgroup> {
        (0..self.len())
            .filter(|&i| self.is_normal_at(i))
            .map(|i| self.subgroups[i].clone())
            .collect()
    }

    /// Proper subgroups not contained in a larger proper subgroup.
    pub fn maximal_subgroups(&self) -> Vec<Subgroup> {
        let proper = &self.subgroups[..self.len().saturating_sub(1)];
        proper
            .iter()
            .enumerate()
            .filter(|(i, h)| !proper[i + 1..].iter().any(|k| h.is_proper_subset(k)))
            .map(|(_, h)| h.clone())
            .collect()
    }

    /// Subgroups of prime-power order (excluding the trivial subgroup).
    pub fn primary_subgroups(&self) -> impl Iterator<Item = (usize, &Subgroup)> {
        self.subgroups
            .iter()
            .enumerate()
            .filter(|(_, h)| arith::prime_power_base(h.order() as u64).is_some())
    }
}

/// Distinct cyclic subgroups generated by elements whose order satisfies
/// `admit`, each represented by its least generator.
fn cyclic_generators(g: &Group, admit: impl Fn(u64) -> bool) -> Vec<u32> {
    let mut seen = HashSet::new();
    let mut reps = Vec::new();
    for x in 1..g.order() as u32 {
        if admit(g.element_order(x) as u64) && seen.insert(g.generated_subgroup(&[x])) {
            reps.push(x);
        }
    }
    reps
}

/// Breadth-first extension: every subgroup reached from the trivial one by
/// repeatedly adjoining one of `cyclic` and keeping results passing `keep`.
fn extend(g: &Group, cyclic: &[u32], budgets: &Budgets, keep: impl Fn(&Subgroup) -> bool) -> Result<Vec<Subgroup>> {
    let trivial = g.trivial_subgroup();
    let mut found: HashSet<Subgroup> = HashSet::from([trivial.clone()]);
    let mut queue = VecDeque::from([(trivial, Vec::<u32>::new())]);
    while let Some((h, gens)) = queue.pop_front() {
        for &x in cyclic {
            if h.contains(x) {
                continue;
            }
            let mut seed = gens.clone();
            seed.push(x);
            let k = g.generated_subgroup(&seed);
            if !keep(&k) || found.contains(&k) {
                continue;
            }
            if found.len() >= budgets.lattice_max_subgroups {
                return Err(GroupError::BudgetExceeded {
                    what: "subgroup count",
                    value: found.len() + 1,
                    limit: budgets.lattice_max_subgroups,
                });
            }
            found.insert(k.clone());
            queue.push_back((k, seed));
        }
    }
    Ok(found.into_iter().collect())
}

fn check_lattice_order(g: &Group, budgets: &Budgets) -> Result<()> {
    if g.order() > budgets.lattice_max_order {
        return Err(GroupError::BudgetExceeded {
            what: "lattice group order",
            value: g.order(),
            limit: budgets.lattice_max_order,
        });
    }
    Ok(())
}

/// Every subgroup of `g`, by cyclic extension over prime-power-order
/// cyclic subgroups.
pub fn all_subgroups(g: &Group, budgets: &Budgets) -> Result<SubgroupLattice> {
    check_lattice_order(g, budgets)?;
    let cyclic = cyclic_generators(g, |o| arith::prime_power_base(o).is_some());
    let subgroups = extend(g, &cyclic, budgets, |_| true)?;
    Ok(SubgroupLattice::new(g, subgroups))
}

/// Every subgroup of `p`-power order, extending over `p`-elements only.
pub fn all_p_subgroups(g: &Group, p: u64, budgets: &Budgets) -> Result<Vec<Subgroup>> {
    check_lattice_order(g, budgets)?;
    let cyclic = cyclic_generators(g, |o| o > 1 && arith::is_power_of(o, p));
    let mut subs = extend(g, &cyclic, budgets, |k| arith::is_power_of(k.order() as u64, p))?;
    subs.sort();
    Ok(subs)
}

/// Smallest subgroup of `within` that contains `h` and is normal in `within`.
pub fn normal_closure_in(g: &Group, within: &Subgroup, h: &Subgroup) -> Subgroup {
    let outer = g.generators(within);
    let mut current = h.clone();
    loop {
        let gens = g.generators(&current);
        let extra: Vec<u32> = outer
            .iter()
            .flat_map(|&x| gens.iter().map(move |&y| (x, y)))
            .map(|(x, y)| g.conjugate(x, y))
            .filter(|&c| !current.contains(c))
            .collect();
        if extra.is_empty() {
            return current;
        }
        let mut seed = gens;
        seed.extend(extra);
        current = g.generated_subgroup(&seed);
    }
}

pub fn normal_closure(g: &Group, h: &Subgroup) -> Subgroup {
    normal_closure_in(g, &g.whole(), h)
}

/// Largest normal subgroup of `g` inside `h`.
pub fn normal_core(g: &Group, h: &Subgroup) -> Subgroup {
    let mut mask = FixedBitSet::with_capacity(g.order());
    for &x in h.elements() {
        if (0..g.order() as u32).all(|y| h.contains(g.conjugate(y, x))) {
            mask.insert(x as usize);
        }
    }
    Subgroup::from_mask(mask)
}

pub fn is_normal(g: &Group, h: &Subgroup) -> bool {
    g.is_normal(h)
}

/// Wielandt's test: iterate normal closures `G ⊇ H^G ⊇ H^(H^G) ⊇ ...` until
/// the chain stops, and compare the limit with `h`.
pub fn is_subnormal(g: &Group, h: &Subgroup) -> bool {
    let mut k = g.whole();
    loop {
        let next = normal_closure_in(g, &k, h);
        if next == k {
            return k == *h;
        }
        k = next;
    }
}

/// Conjugacy classes of elements, each sorted, ordered by least element.
pub fn element_classes(g: &Group) -> Vec<Vec<u32>> {
    let gens = g.generators(&g.whole());
    let mut seen = vec![false; g.order()];
    let mut classes = Vec::new();
    for x in 0..g.order() as u32 {
        if seen[x as usize] {
            continue;
        }
        seen[x as usize] = true;
        let mut class = vec![x];
        let mut i = 0;
        while i < class.len() {
            let y = class[i];
            for &s in &gens {
                let c = g.conjugate(s, y);
                if !std::mem::replace(&mut seen[c as usize], true) {
                    class.push(c);
                }
            }
            i += 1;
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes
}

/// Every normal subgroup, as joins of normal closures of single elements.
/// Sorted by `(order, elements)`. Does not need the full lattice.
pub fn normal_subgroups(g: &Group, budgets: &Budgets) -> Result<Vec<Subgroup>> {
    let mut closures: Vec<Subgroup> = element_classes(g)
        .iter()
        .skip(1)
        .map(|c| normal_closure(g, &g.generated_subgroup(&[c[0]])))
        .collect();
    closures.sort();
    closures.dedup();
    let trivial = g.trivial_subgroup();
    let mut found: HashSet<Subgroup> = HashSet::from([trivial.clone()]);
    let mut queue = VecDeque::from([trivial]);
    while let Some(n) = queue.pop_front() {
        for k in &closures {
            if k.is_subset(&n) {
                continue;
            }
            let j = g.join(&n, k);
            if found.contains(&j) {
                continue;
            }
            if found.len() >= budgets.lattice_max_subgroups {
                return Err(GroupError::BudgetExceeded {
                    what: "normal subgroup count",
                    value: found.len() + 1,
                    limit: budgets.lattice_max_subgroups,
                });
            }
            found.insert(j.clone());
            queue.push_back(j);
        }
    }
    let mut out: Vec<Subgroup> = found.into_iter().collect();
    out.sort();
    Ok(out)
}

pub fn maximal_subgroups(lattice: &SubgroupLattice) -> Vec<Subgroup> {
    lattice.maximal_subgroups()
}

/// Nontrivial normal subgroups containing no smaller nontrivial normal one.
/// `normals` must be sorted by order.
pub fn minimal_normal_subgroups(normals: &[Subgroup]) -> Vec<Subgroup> {
    let nontrivial: Vec<&Subgroup> = normals.iter().filter(|n| !n.is_trivial()).collect();
    nontrivial
        .iter()
        .enumerate()
        .filter(|(i, n)| !nontrivial[..*i].iter().any(|m| m.is_proper_subset(n)))
        .map(|(_, n)| (*n).clone())
        .collect()
}

/// Whether `G` centralizes `upper / lower`, i.e. `[upper, G] <= lower`.
pub fn is_central_factor(g: &Group, lower: &Subgroup, upper: &Subgroup) -> bool {
    let hg = g.generators(upper);
    let gg = g.generators(&g.whole());
    hg.iter().all(|&h| gg.iter().all(|&y| lower.contains(g.commutator(h, y))))
}

fn make_factor(g: &Group, lower: &Subgroup, upper: &Subgroup) -> ChiefFactor {
    let factor_order = upper.order() / lower.order();
    ChiefFactor {
        lower: lower.clone(),
        upper: upper.clone(),
        factor_order,
        prime: arith::prime_power_base(factor_order as u64),
        central: is_central_factor(g, lower, upper),
    }
}

/// A chief series from 1 to `top` through normal subgroups of `g` contained
/// in `top`, choosing at each step the smallest (then lexicographically
/// least) normal subgroup strictly above the current term.
///
/// `normals` must be sorted by `(order, elements)`.
pub fn chief_series_to(g: &Group, normals: &[Subgroup], top: &Subgroup) -> Vec<ChiefFactor> {
    let mut factors = Vec::new();
    let mut current = g.trivial_subgroup();
    while current != *top {
        let next = normals
            .iter()
            .find(|m| current.is_proper_subset(m) && m.is_subset(top))
            .expect("top is normal, so a next term exists");
        factors.push(make_factor(g, &current, next));
        current = next.clone();
    }
    factors
}

pub fn chief_series(g: &Group, budgets: &Budgets) -> Result<Vec<ChiefFactor>> {
    let normals = normal_subgroups(g, budgets)?;
    Ok(chief_series_to(g, &normals, &g.whole()))
}
