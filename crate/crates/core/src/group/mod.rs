//! Finite groups as dense multiplication tables.

mod build;
pub mod format;
mod ops;
mod subgroup;

use std::fmt;

use fixedbitset::FixedBitSet;
use sha2::{Digest, Sha256};

pub use build::Permutation;
pub use ops::QuotientResult;
pub use subgroup::Subgroup;

use crate::arith;
use crate::error::{GroupError, Result};

/// A finite group given by its Cayley table over the indices `0..order`.
///
/// The identity is always index 0. Row `g`, column `h` of the table holds
/// `g * h`. Groups are immutable once built.
#[derive(Clone)]
pub struct Group {
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    primes: Vec<(u64, u32)>,
    name: Option<String>,
}

impl Group {
    /// Builds a group from a table known to satisfy the axioms with identity 0.
    pub(crate) fn from_trusted_table(order: usize, table: Vec<u32>, name: Option<String>) -> Group {
        debug_assert_eq!(table.len(), order * order);
        let mut inverses = vec![0u32; order];
        for (x, inv) in inverses.iter_mut().enumerate() {
            let row = &table[x * order..(x + 1) * order];
            *inv = row.iter().position(|&v| v == 0).expect("row without identity") as u32;
        }
        Group {
            order,
            table,
            inverses,
            primes: arith::factorize(order as u64),
            name,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn display_name(&self) -> String {
        self.name.clone().unwrap_or_else(|| format!("G{}", self.order))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Group {
        self.name = Some(name.into());
        self
    }

    /// Prime factorization of the order, sorted by prime.
    pub fn primes(&self) -> &[(u64, u32)] {
        &self.primes
    }

    /// The primes dividing the order.
    pub fn prime_divisors(&self) -> Vec<u64> {
        self.primes.iter().map(|&(p, _)| p).collect()
    }

    pub fn identity(&self) -> u32 {
        0
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inverses[a as usize]
    }

    pub fn inverses(&self) -> &[u32] {
        &self.inverses
    }

    /// Row `a` of the Cayley table.
    pub fn row(&self, a: u32) -> &[u32] {
        &self.table[a as usize * self.order..(a as usize + 1) * self.order]
    }

    /// `x * h * x^-1`.
    #[inline]
    pub fn conjugate(&self, x: u32, h: u32) -> u32 {
        self.mul(self.mul(x, h), self.inv(x))
    }

    /// `a^-1 b^-1 a b`.
    #[inline]
    pub fn commutator(&self, a: u32, b: u32) -> u32 {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, a: u32, mut k: u64) -> u32 {
        let mut acc = 0;
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: u32) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order as u32).all(|a| (a + 1..self.order as u32).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// SHA-256 of the table (little-endian `u32`s), first 16 hex digits.
    pub fn table_hash(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update((self.order as u64).to_le_bytes());
        for &v in &self.table {
            hasher.update(v.to_le_bytes());
        }
        let digest = hasher.finalize();
        digest[..8].iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::trivial(self.order)
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::whole(self.order)
    }

    /// Validates an element set as a subgroup (contains identity, closed).
    pub fn subgroup(&self, elements: &[u32]) -> Result<Subgroup> {
        let mut sorted = elements.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.iter().any(|&x| x as usize >= self.order) {
            return Err(GroupError::NotAGroup {
                reason: "subgroup element out of range".into(),
                triple: None,
            });
        }
        let sub = Subgroup::from_sorted(self.order, sorted);
        if !sub.contains(0) {
            return Err(GroupError::NotAGroup {
                reason: "subgroup does not contain the identity".into(),
                triple: None,
            });
        }
        for &a in sub.elements() {
            if !sub.contains(self.inv(a)) {
                return Err(GroupError::NotAGroup {
                    reason: format!("subgroup not closed under inverse at {a}"),
                    triple: None,
                });
            }
            for &b in sub.elements() {
                if !sub.contains(self.mul(a, b)) {
                    return Err(GroupError::NotAGroup {
                        reason: format!("subgroup not closed: {a}*{b}"),
                        triple: Some((a, b, self.mul(a, b))),
                    });
                }
            }
        }
        Ok(sub)
    }

    /// Exhaustively re-checks every [`Group`] invariant, including the
    /// `O(n^3)` associativity scan.
    pub fn validate(&self) -> Result<()> {
        let n = self.order;
        if self.table.len() != n * n {
            return Err(GroupError::BadShape("table length".into()));
        }
        if self.table.iter().any(|&v| v as usize >= n) {
            return Err(not_a_group("entry out of range", None));
        }
        for x in 0..n as u32 {
            if self.mul(0, x) != x || self.mul(x, 0) != x {
                return Err(not_a_group(&format!("index 0 is not an identity at {x}"), None));
            }
            if self.mul(x, self.inv(x)) != 0 || self.mul(self.inv(x), x) != 0 {
                return Err(not_a_group(&format!("bad inverse for {x}"), None));
            }
        }
        if let Some(t) = first_non_associative(n, &self.table) {
            return Err(not_a_group("associativity fails", Some(t)));
        }
        let product: u64 = self.primes.iter().map(|&(p, e)| p.pow(e)).product();
        if product != n as u64 {
            return Err(not_a_group("prime factorization does not match order", None));
        }
        Ok(())
    }

    /// Smallest subgroup containing `seed`.
    pub fn generated_subgroup(&self, seed: &[u32]) -> Subgroup {
        let gens: Vec<u32> = seed.iter().copied().filter(|&x| x != 0).collect();
        let mut mask = FixedBitSet::with_capacity(self.order);
        mask.insert(0);
        let mut queue = vec![0u32];
        while let Some(e) = queue.pop() {
            for &g in &gens {
                let y = self.mul(e, g);
                if !mask.put(y as usize) {
                    queue.push(y);
                }
            }
        }
        Subgroup::from_mask(mask)
    }

    /// A small generating set of `h`, chosen greedily in element order.
    pub fn generators(&self, h: &Subgroup) -> Vec<u32> {
        let mut gens = Vec::new();
        let mut current = self.trivial_subgroup();
        for &x in h.elements() {
            if current.order() == h.order() {
                break;
            }
            if !current.contains(x) {
                gens.push(x);
                current = self.generated_subgroup(&gens);
            }
        }
        gens
    }

    /// Subgroup generated by the union of two subgroups.
    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        if a.is_subset(b) {
            return b.clone();
        }
        if b.is_subset(a) {
            return a.clone();
        }
        let mut seed = self.generators(a);
        seed.extend(self.generators(b));
        self.generated_subgroup(&seed)
    }

    /// The product set `AB` as a membership mask.
    pub fn product_set(&self, a: &Subgroup, b: &Subgroup) -> FixedBitSet {
        let mut mask = FixedBitSet::with_capacity(self.order);
        for &x in a.elements() {
            for &y in b.elements() {
                mask.insert(self.mul(x, y) as usize);
            }
        }
        mask
    }

    /// Whether `AB = BA`, i.e. whether the product set is a subgroup.
    pub fn permutes(&self, a: &Subgroup, b: &Subgroup) -> bool {
        let inter = a.intersection(b).order();
        let joined = self.join(a, b);
        joined.order() * inter == a.order() * b.order()
    }

    /// Sorted element set of `x * h * x^-1`.
    pub fn conjugate_subgroup(&self, h: &Subgroup, x: u32) -> Subgroup {
        let mut mask = FixedBitSet::with_capacity(self.order);
        for &y in h.elements() {
            mask.insert(self.conjugate(x, y) as usize);
        }
        Subgroup::from_mask(mask)
    }

    pub fn centralizer(&self, h: &Subgroup) -> Subgroup {
        let gens = self.generators(h);
        let mut mask = FixedBitSet::with_capacity(self.order);
        for x in 0..self.order as u32 {
            if gens.iter().all(|&g| self.mul(x, g) == self.mul(g, x)) {
                mask.insert(x as usize);
            }
        }
        Subgroup::from_mask(mask)
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let gens = self.generators(h);
        let mut mask = FixedBitSet::with_capacity(self.order);
        for x in 0..self.order as u32 {
            if gens.iter().all(|&g| h.contains(self.conjugate(x, g))) {
                mask.insert(x as usize);
            }
        }
        Subgroup::from_mask(mask)
    }

    /// Normalizer of `h` inside the subgroup `within`.
    pub fn normalizer_in(&self, within: &Subgroup, h: &Subgroup) -> Subgroup {
        self.normalizer(h).intersection(within)
    }

    /// Re-indexes a subgroup as a group in its own right.
    ///
    /// Elements keep their relative order, so index `i` of the returned group
    /// corresponds to `embedding[i]` in `self`.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> (Group, Vec<u32>) {
        let embedding = h.elements().to_vec();
        let mut index = vec![u32::MAX; self.order];
        for (i, &x) in embedding.iter().enumerate() {
            index[x as usize] = i as u32;
        }
        let k = embedding.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in &embedding {
            for &b in &embedding {
                table.push(index[self.mul(a, b) as usize]);
            }
        }
        (Group::from_trusted_table(k, table, None), embedding)
    }

    /// Maps a subgroup of `self.subgroup_as_group(h)` back into `self`.
    pub fn embed(&self, embedding: &[u32], inner: &Subgroup) -> Subgroup {
        let mut elems: Vec<u32> = inner.elements().iter().map(|&i| embedding[i as usize]).collect();
        elems.sort_unstable();
        Subgroup::from_sorted(self.order, elems)
    }

    /// Element-wise nilpotency test for a subgroup: elements of coprime
    /// order must commute.
    pub fn is_nilpotent_subgroup(&self, h: &Subgroup) -> bool {
        let orders: Vec<u64> = h.elements().iter().map(|&x| self.element_order(x) as u64).collect();
        let elems = h.elements();
        for i in 0..elems.len() {
            for j in i + 1..elems.len() {
                if arith::gcd(orders[i], orders[j]) == 1 && self.mul(elems[i], elems[j]) != self.mul(elems[j], elems[i]) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

fn not_a_group(reason: &str, triple: Option<(u32, u32, u32)>) -> GroupError {
    GroupError::NotAGroup {
        reason: reason.to_string(),
        triple,
    }
}

pub(crate) fn first_non_associative(n: usize, table: &[u32]) -> Option<(u32, u32, u32)> {
    for a in 0..n {
        for b in 0..n {
            let ab = table[a * n + b] as usize;
            for c in 0..n {
                let bc = table[b * n + c] as usize;
                if table[ab * n + c] != table[a * n + bc] {
                    return Some((a as u32, b as u32, c as u32));
                }
            }
        }
    }
    None
}
