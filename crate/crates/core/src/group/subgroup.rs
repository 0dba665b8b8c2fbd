use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};

/// A subgroup of some parent [`super::Group`], stored as a strictly sorted
/// list of element indices together with a membership mask.
///
/// Equality, hashing and ordering look only at the element list. Ordering is
/// by `(order, elements)`, which is the canonical lattice order.
#[derive(Clone)]
pub struct Subgroup {
    elements: Vec<u32>,
    mask: FixedBitSet,
}

impl Subgroup {
    /// Builds from a membership mask over the parent's `0..n`.
    ///
    /// Closure is not checked; callers in this crate only pass masks that
    /// are closed by construction.
    pub(crate) fn from_mask(mask: FixedBitSet) -> Self {
        let elements = mask.ones().map(|x| x as u32).collect();
        Subgroup { elements, mask }
    }

    pub(crate) fn from_sorted(parent_order: usize, elements: Vec<u32>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        let mut mask = FixedBitSet::with_capacity(parent_order);
        for &x in &elements {
            mask.insert(x as usize);
        }
        Subgroup { elements, mask }
    }

    pub(crate) fn trivial(parent_order: usize) -> Self {
        Self::from_sorted(parent_order, vec![0])
    }

    pub(crate) fn whole(parent_order: usize) -> Self {
        Self::from_sorted(parent_order, (0..parent_order as u32).collect())
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn mask(&self) -> &FixedBitSet {
        &self.mask
    }

    /// Order of the parent group this subgroup lives in.
    pub fn parent_order(&self) -> usize {
        self.mask.len()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.mask.contains(x as usize)
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.elements.len() == self.mask.len()
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.order() <= other.order() && self.mask.is_subset(&other.mask)
    }

    pub fn is_proper_subset(&self, other: &Subgroup) -> bool {
        self.order() < other.order() && self.mask.is_subset(&other.mask)
    }

    /// Intersection of two subgroups, itself a subgroup.
    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let mut mask = self.mask.clone();
        mask.intersect_with(&other.mask);
        Subgroup::from_mask(mask)
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.elements.cmp(&other.elements))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup{:?}", self.elements)
    }
}

impl Serialize for Subgroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.elements.serialize(serializer)
    }
}
