use fixedbitset::FixedBitSet;

use super::{Group, Subgroup};
use crate::error::{GroupError, Result};

/// `G/N` together with the natural projection `G -> G/N`.
#[derive(Debug, Clone)]
pub struct QuotientResult {
    pub quotient: Group,
    /// `projection[g]` is the coset of `g`. Cosets are numbered in order of
    /// their least element, so the kernel maps to 0.
    pub projection: Vec<u32>,
}

impl QuotientResult {
    /// Image `HN/N` of a subgroup of the parent.
    pub fn image(&self, h: &Subgroup) -> Subgroup {
        let mut mask = FixedBitSet::with_capacity(self.quotient.order());
        for &x in h.elements() {
            mask.insert(self.projection[x as usize] as usize);
        }
        Subgroup::from_mask(mask)
    }

    /// Full preimage of a subgroup of the quotient.
    pub fn preimage(&self, q: &Subgroup) -> Subgroup {
        let mut mask = FixedBitSet::with_capacity(self.projection.len());
        for (g, &c) in self.projection.iter().enumerate() {
            if q.contains(c) {
                mask.insert(g);
            }
        }
        Subgroup::from_mask(mask)
    }

    pub fn kernel(&self) -> Subgroup {
        self.preimage(&self.quotient.trivial_subgroup())
    }
}

impl Group {
    pub fn is_normal(&self, h: &Subgroup) -> bool {
        let hg = self.generators(h);
        let gg = self.generators(&self.whole());
        gg.iter().all(|&x| hg.iter().all(|&y| h.contains(self.conjugate(x, y))))
    }

    pub fn quotient(&self, n: &Subgroup) -> Result<QuotientResult> {
        if !self.is_normal(n) {
            return Err(GroupError::NotNormal);
        }
        let order = self.order();
        let mut projection = vec![u32::MAX; order];
        let mut reps = Vec::new();
        for x in 0..order as u32 {
            if projection[x as usize] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(x);
            for &k in n.elements() {
                projection[self.mul(x, k) as usize] = id;
            }
        }
        let m = reps.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &reps {
            for &b in &reps {
                table.push(projection[self.mul(a, b) as usize]);
            }
        }
        let name = format!("{}/N{}", self.display_name(), n.order());
        Ok(QuotientResult {
            quotient: Group::from_trusted_table(m, table, Some(name)),
            projection,
        })
    }

    /// Whether the group has an element whose order equals the group order.
    pub fn is_cyclic(&self) -> bool {
        (0..self.order() as u32).any(|x| self.element_order(x) == self.order())
    }
}
