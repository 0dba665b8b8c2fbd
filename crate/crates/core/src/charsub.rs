//! Characteristic subgroups: centre, hypercentre, derived subgroup, cores,
//! Fitting, Frattini, `F0` and focal subgroups.

use fixedbitset::FixedBitSet;

use crate::arith;
use crate::budget::Budgets;
use crate::error::{GroupError, Result};
use crate::group::{Group, Subgroup};
use crate::lattice::{self, SubgroupLattice};
use crate::sylow;

/// Upper central series `1 = Z0 <= Z1 <= ...`, ending at its first repeat.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralSeries {
    pub terms: Vec<Subgroup>,
    pub stabilized: bool,
}

impl CentralSeries {
    pub fn limit(&self) -> &Subgroup {
        self.terms.last().expect("series starts at the trivial subgroup")
    }
}

pub fn centre(g: &Group) -> Subgroup {
    g.centralizer(&g.whole())
}

/// `{x : [x, y] in below for all y}`, the preimage of `Z(G/below)`.
fn next_central_term(g: &Group, below: &Subgroup, gens: &[u32]) -> Subgroup {
    let mut mask = FixedBitSet::with_capacity(g.order());
    for x in 0..g.order() as u32 {
        if gens.iter().all(|&y| below.contains(g.commutator(x, y))) {
            mask.insert(x as usize);
        }
    }
    g.subgroup(&mask.ones().map(|x| x as u32).collect::<Vec<_>>())
        .expect("upper central term is a subgroup")
}

pub fn upper_central_series(g: &Group) -> CentralSeries {
    let gens = g.generators(&g.whole());
    let mut terms = vec![g.trivial_subgroup()];
    loop {
        let next = next_central_term(g, terms.last().unwrap(), &gens);
        if next == *terms.last().unwrap() {
            return CentralSeries { terms, stabilized: true };
        }
        terms.push(next);
    }
}

/// `Z∞(G)`: limit of the upper central series.
pub fn hypercentre(g: &Group) -> Subgroup {
    upper_central_series(g).limit().clone()
}

/// `Z∞(G)` as the largest normal subgroup all of whose chief factors below
/// it are central. Normal subgroups are scanned from the largest down.
pub fn hypercentre_by_chief(g: &Group, budgets: &Budgets) -> Result<Subgroup> {
    let normals = lattice::normal_subgroups(g, budgets)?;
    Ok(hypercentre_by_chief_from(g, &normals))
}

pub fn hypercentre_by_chief_from(g: &Group, normals: &[Subgroup]) -> Subgroup {
    normals
        .iter()
        .rev()
        .find(|n| lattice::chief_series_to(g, normals, n).iter().all(|f| f.central))
        .cloned()
        .expect("the trivial subgroup always qualifies")
}

/// `G'`, generated by all commutators.
pub fn derived_subgroup(g: &Group) -> Subgroup {
    let n = g.order() as u32;
    let mut mask = FixedBitSet::with_capacity(g.order());
    for a in 0..n {
        for b in 0..n {
            mask.insert(g.commutator(a, b) as usize);
        }
    }
    let seed: Vec<u32> = mask.ones().map(|x| x as u32).collect();
    g.generated_subgroup(&seed)
}

/// Derived series `G ⊇ G' ⊇ G'' ⊇ ...` down to its first repeat.
pub fn derived_series(g: &Group) -> Vec<Subgroup> {
    let mut series = vec![g.whole()];
    loop {
        let last = series.last().unwrap();
        let (sub, emb) = g.subgroup_as_group(last);
        let next = g.embed(&emb, &derived_subgroup(&sub));
        if next == *last {
            return series;
        }
        series.push(next);
    }
}

/// `O_p(G)`: the core of a Sylow `p`-subgroup.
pub fn p_core(g: &Group, p: u64) -> Subgroup {
    lattice::normal_core(g, &sylow::sylow_subgroup(g, p))
}

/// `O_π(G)`: the largest normal subgroup whose order involves only `pi`.
pub fn pi_core(g: &Group, pi: &[u64], budgets: &Budgets) -> Result<Subgroup> {
    let normals = lattice::normal_subgroups(g, budgets)?;
    Ok(pi_core_from(&normals, pi))
}

pub fn pi_core_from(normals: &[Subgroup], pi: &[u64]) -> Subgroup {
    normals
        .iter()
        .rev()
        .find(|n| arith::supported_on(n.order() as u64, pi))
        .cloned()
        .expect("the trivial subgroup is a π-group")
}

/// `F(G)`: product of the `p`-cores.
pub fn fitting(g: &Group) -> Subgroup {
    let seed: Vec<u32> = g
        .prime_divisors()
        .into_iter()
        .flat_map(|p| {
            let core = p_core(g, p);
            g.generators(&core)
        })
        .collect();
    g.generated_subgroup(&seed)
}

/// `Φ(G)`: intersection of the maximal subgroups (the whole group when there
/// are none, i.e. for the trivial group).
pub fn frattini(g: &Group, lattice: &SubgroupLattice) -> Subgroup {
    lattice
        .maximal_subgroups()
        .iter()
        .fold(g.whole(), |acc, m| acc.intersection(m))
}

/// `F0(G)`: product of the normal Sylow subgroups.
pub fn f0(g: &Group) -> Subgroup {
    let seed: Vec<u32> = g
        .prime_divisors()
        .into_iter()
        .map(|p| sylow::sylow_subgroup(g, p))
        .filter(|s| g.is_normal(s))
        .flat_map(|s| g.generators(&s))
        .collect();
    g.generated_subgroup(&seed)
}

/// `G' ∩ P` for a Sylow subgroup `P`.
pub fn focal_subgroup(g: &Group, sylow_p: &Subgroup) -> Result<Subgroup> {
    if !sylow::is_sylow(g, sylow_p) {
        return Err(GroupError::NotSylow);
    }
    Ok(derived_subgroup(g).intersection(sylow_p))
}
