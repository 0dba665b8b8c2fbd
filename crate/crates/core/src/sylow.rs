//! Sylow subgroups, Sylow bases, Hall subgroups and the nilpotence /
//! solubility family of predicates.

use std::collections::HashMap;

use itertools::Itertools;
use serde::Serialize;

use crate::arith;
use crate::budget::Budgets;
use crate::charsub;
use crate::error::{GroupError, Result};
use crate::group::{Group, Subgroup};
use crate::lattice;

/// One Sylow subgroup per prime divisor, pairwise permutable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SylowBasis {
    pub members: Vec<(u64, Subgroup)>,
}

impl SylowBasis {
    pub fn member(&self, p: u64) -> Option<&Subgroup> {
        self.members.iter().find(|(q, _)| *q == p).map(|(_, s)| s)
    }

    /// Re-checks every basis invariant against `g`.
    pub fn validate(&self, g: &Group) -> bool {
        let primes = g.prime_divisors();
        if self.members.iter().map(|(p, _)| *p).collect::<Vec<_>>() != primes {
            return false;
        }
        if !self
            .members
            .iter()
            .all(|(p, s)| is_sylow(g, s) && arith::is_power_of(s.order() as u64, *p))
        {
            return false;
        }
        for (i, (_, a)) in self.members.iter().enumerate() {
            for (_, b) in &self.members[i + 1..] {
                if !g.permutes(a, b) {
                    return false;
                }
            }
        }
        let seed: Vec<u32> = self.members.iter().flat_map(|(_, s)| g.generators(s)).collect();
        g.generated_subgroup(&seed).is_whole()
    }
}

/// A prime ordering along which the group has a Sylow tower.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DispersionOrdering {
    pub ordering: Vec<u64>,
}

pub fn is_sylow(g: &Group, s: &Subgroup) -> bool {
    match arith::prime_power_base(s.order() as u64) {
        Some(p) => arith::p_part(g.order() as u64, p) == s.order() as u64,
        None => false,
    }
}

/// A Sylow `p`-subgroup grown from the least element of order `p`, adjoining
/// at each step the least element of the normalizer that lies outside the
/// current subgroup and has its `p`-th power inside it.
pub fn sylow_subgroup(g: &Group, p: u64) -> Subgroup {
    let target = arith::p_part(g.order() as u64, p) as usize;
    if target == 1 {
        return g.trivial_subgroup();
    }
    let x = (1..g.order() as u32)
        .find(|&x| g.element_order(x) as u64 == p)
        .expect("Cauchy: an element of order p exists");
    let mut current = g.generated_subgroup(&[x]);
    while current.order() < target {
        let n = g.normalizer(&current);
        let y = n
            .elements()
            .iter()
            .copied()
            .find(|&y| !current.contains(y) && current.contains(g.pow(y, p)))
            .expect("a non-Sylow p-subgroup grows inside its normalizer");
        let mut seed = g.generators(&current);
        seed.push(y);
        current = g.generated_subgroup(&seed);
    }
    current
}

/// All conjugates of [`sylow_subgroup`], sorted.
pub fn all_sylow(g: &Group, p: u64) -> Vec<Subgroup> {
    let s = sylow_subgroup(g, p);
    let gens = g.generators(&g.whole());
    let mut seen: HashMap<Subgroup, ()> = HashMap::from([(s.clone(), ())]);
    let mut frontier = vec![s];
    while let Some(h) = frontier.pop() {
        for &x in &gens {
            let c = g.conjugate_subgroup(&h, x);
            if seen.insert(c.clone(), ()).is_none() {
                frontier.push(c);
            }
        }
    }
    let mut out: Vec<Subgroup> = seen.into_keys().collect();
    out.sort();
    let count = out.len() as u64;
    let index = g.order() as u64 / arith::p_part(g.order() as u64, p);
    assert!(count % p == 1 % p && index % count == 0, "Sylow count {count} violates Sylow's theorems");
    out
}

/// Depth-first search for a Sylow basis: primes in increasing order,
/// candidates in sorted order, pruning on pairwise permutability.
pub fn sylow_basis(g: &Group, budgets: &Budgets) -> Result<Option<SylowBasis>> {
    let primes = g.prime_divisors();
    let candidates: Vec<Vec<Subgroup>> = primes.iter().map(|&p| all_sylow(g, p)).collect();
    let mut chosen: Vec<usize> = Vec::new();
    let mut nodes = 0usize;
    if search_basis(g, &candidates, &mut chosen, &mut nodes, budgets.basis_max_nodes)? {
        let basis = SylowBasis {
            members: primes
                .iter()
                .zip(&chosen)
                .enumerate()
                .map(|(i, (&p, &c))| (p, candidates[i][c].clone()))
                .collect(),
        };
        assert!(basis.validate(g), "search produced an invalid Sylow basis");
        Ok(Some(basis))
    } else {
        Ok(None)
    }
}

fn search_basis(
    g: &Group,
    candidates: &[Vec<Subgroup>],
    chosen: &mut Vec<usize>,
    nodes: &mut usize,
    cap: usize,
) -> Result<bool> {
    let level = chosen.len();
    if level == candidates.len() {
        return Ok(true);
    }
    for (c, cand) in candidates[level].iter().enumerate() {
        *nodes += 1;
        if *nodes > cap {
            return Err(GroupError::BudgetExceeded {
                what: "Sylow basis search nodes",
                value: *nodes,
                limit: cap,
            });
        }
        let fits = chosen
            .iter()
            .enumerate()
            .all(|(i, &k)| g.permutes(&candidates[i][k], cand));
        if fits {
            chosen.push(c);
            if search_basis(g, candidates, chosen, nodes, cap)? {
                return Ok(true);
            }
            chosen.pop();
        }
    }
    Ok(false)
}

/// Hall `π`-subgroup as the product of the matching basis members.
pub fn hall_subgroup(g: &Group, pi: &[u64], budgets: &Budgets) -> Result<Option<Subgroup>> {
    Ok(sylow_basis(g, budgets)?.map(|basis| hall_from_basis(g, &basis, pi)))
}

pub fn hall_from_basis(g: &Group, basis: &SylowBasis, pi: &[u64]) -> Subgroup {
    let seed: Vec<u32> = basis
        .members
        .iter()
        .filter(|(p, _)| pi.contains(p))
        .flat_map(|(_, s)| g.generators(s))
        .collect();
    g.generated_subgroup(&seed)
}

pub fn is_nilpotent(g: &Group) -> bool {
    g.prime_divisors()
        .into_iter()
        .all(|p| g.is_normal(&sylow_subgroup(g, p)))
}

pub fn is_soluble(g: &Group) -> bool {
    charsub::derived_series(g).last().unwrap().is_trivial()
}

pub fn is_p_soluble(g: &Group, p: u64, budgets: &Budgets) -> Result<bool> {
    Ok(lattice::chief_series(g, budgets)?
        .iter()
        .all(|f| f.prime == Some(p) || f.factor_order as u64 % p != 0))
}

/// Whether a normal subgroup of order `|G|/p^a` (a normal `p`-complement)
/// exists.
pub fn is_p_nilpotent(g: &Group, p: u64, budgets: &Budgets) -> Result<bool> {
    let normals = lattice::normal_subgroups(g, budgets)?;
    Ok(is_p_nilpotent_from(g, &normals, p))
}

pub fn is_p_nilpotent_from(g: &Group, normals: &[Subgroup], p: u64) -> bool {
    let complement = g.order() / arith::p_part(g.order() as u64, p) as usize;
    normals.iter().any(|n| n.order() == complement)
}

/// `G = O_p(G) x O_p'(G)`.
pub fn is_p_decomposable(g: &Group, p: u64, budgets: &Budgets) -> Result<bool> {
    let normals = lattice::normal_subgroups(g, budgets)?;
    Ok(is_p_decomposable_from(g, &normals, p))
}

pub fn is_p_decomposable_from(g: &Group, normals: &[Subgroup], p: u64) -> bool {
    let op = charsub::p_core(g, p);
    let others: Vec<u64> = g.prime_divisors().into_iter().filter(|&q| q != p).collect();
    let op_prime = charsub::pi_core_from(normals, &others);
    op.intersection(&op_prime).is_trivial() && op.order() * op_prime.order() == g.order()
}

/// First prime ordering (lexicographically) with a Sylow tower.
pub fn dispersion_ordering(g: &Group, budgets: &Budgets) -> Result<Option<DispersionOrdering>> {
    let primes = g.prime_divisors();
    if primes.len() > 8 {
        return Err(GroupError::TooManyPrimes(primes.len()));
    }
    let normals = lattice::normal_subgroups(g, budgets)?;
    Ok(dispersion_ordering_from(g, &normals))
}

pub fn dispersion_ordering_from(g: &Group, normals: &[Subgroup]) -> Option<DispersionOrdering> {
    let primes = g.prime_divisors();
    let n = g.order() as u64;
    let k = primes.len();
    primes
        .iter()
        .copied()
        .permutations(k)
        .find(|ordering| {
            let mut prefix = 1u64;
            ordering.iter().all(|&p| {
                prefix *= arith::p_part(n, p);
                normals.iter().any(|m| m.order() as u64 == prefix)
            })
        })
        .map(|ordering| DispersionOrdering { ordering })
}
