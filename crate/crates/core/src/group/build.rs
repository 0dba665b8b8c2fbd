use std::collections::HashMap;
use std::hash::Hash;

use super::{first_non_associative, not_a_group, Group};
use crate::arith;
use crate::error::{GroupError, Result};

/// A permutation of `0..degree` given by its image list.
pub type Permutation = Vec<u32>;

impl Group {
    /// Builds a group from a square Cayley table, checking every axiom.
    ///
    /// Whatever element acts as the identity is swapped with index 0.
    pub fn from_table(order: usize, rows: &[Vec<u32>]) -> Result<Group> {
        if order == 0 {
            return Err(GroupError::BadShape("order must be at least 1".into()));
        }
        if rows.len() != order {
            return Err(GroupError::BadShape(format!("expected {order} rows, found {}", rows.len())));
        }
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != order) {
            return Err(GroupError::BadShape(format!(
                "row {i} has {} entries, expected {order}",
                row.len()
            )));
        }
        let n = order;
        let mut table: Vec<u32> = rows.iter().flatten().copied().collect();
        if let Some(pos) = table.iter().position(|&v| v as usize >= n) {
            return Err(not_a_group(&format!("entry out of range at ({}, {})", pos / n, pos % n), None));
        }

        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e * n + x] as usize == x && table[x * n + e] as usize == x))
            .ok_or_else(|| not_a_group("no identity element", None))?;
        if identity != 0 {
            table = relabel_swap(n, &table, 0, identity as u32);
        }

        // Cancellation: every row and column is a permutation.
        for a in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for b in 0..n {
                let r = table[a * n + b] as usize;
                let c = table[b * n + a] as usize;
                if std::mem::replace(&mut seen_row[r], true) {
                    return Err(not_a_group(&format!("row {a} repeats {r}; cancellation fails"), None));
                }
                if std::mem::replace(&mut seen_col[c], true) {
                    return Err(not_a_group(&format!("column {a} repeats {c}; cancellation fails"), None));
                }
            }
        }
        for x in 0..n {
            let y = (0..n).find(|&y| table[x * n + y] == 0).expect("latin row");
            if table[y * n + x] != 0 {
                return Err(not_a_group(&format!("{x} has no two-sided inverse"), None));
            }
        }
        if let Some(t) = first_non_associative(n, &table) {
            return Err(not_a_group(
                &format!("({} {} {}) is not associative", t.0, t.1, t.2),
                Some(t),
            ));
        }
        Ok(Group::from_trusted_table(n, table, None))
    }

    /// Closure of a set of generators under an associative product.
    ///
    /// Elements are indexed identity first, then breadth-first: each new
    /// layer (products of the previous layer with every generator) is sorted
    /// by `Ord` before indexing, so the result does not depend on the order
    /// the generators are listed in.
    pub fn from_generators<T, F>(identity: T, generators: &[T], mul: F, max_order: usize) -> Result<Group>
    where
        T: Clone + Eq + Hash + Ord,
        F: Fn(&T, &T) -> T,
    {
        let mut index: HashMap<T, u32> = HashMap::new();
        let mut elements = vec![identity.clone()];
        index.insert(identity, 0);
        let mut layer = vec![0usize];
        while !layer.is_empty() {
            let mut next: Vec<T> = Vec::new();
            for &e in &layer {
                for g in generators {
                    let y = mul(&elements[e], g);
                    if !index.contains_key(&y) {
                        next.push(y);
                    }
                }
            }
            next.sort();
            next.dedup();
            layer.clear();
            for y in next {
                if elements.len() >= max_order {
                    return Err(GroupError::BudgetExceeded {
                        what: "group order",
                        value: elements.len() + 1,
                        limit: max_order,
                    });
                }
                index.insert(y.clone(), elements.len() as u32);
                layer.push(elements.len());
                elements.push(y);
            }
        }
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                table.push(index[&mul(a, b)]);
            }
        }
        Ok(Group::from_trusted_table(n, table, None))
    }

    /// Closure of permutations of `0..degree`. The product is composition
    /// of maps, `(g * h)(i) = g(h(i))`.
    pub fn from_permutations(degree: usize, generators: &[Permutation], max_order: usize) -> Result<Group> {
        for (index, g) in generators.iter().enumerate() {
            let mut seen = vec![false; degree];
            let ok = g.len() == degree
                && g.iter().all(|&x| (x as usize) < degree && !std::mem::replace(&mut seen[x as usize], true));
            if !ok {
                return Err(GroupError::NotAPermutation { index, degree });
            }
        }
        let identity: Permutation = (0..degree as u32).collect();
        Group::from_generators(identity, generators, |g, h| compose(g, h), max_order)
    }

    /// `a x b` with `(i, j)` indexed as `i * |b| + j`.
    pub fn direct_product(a: &Group, b: &Group, max_order: usize) -> Result<Group> {
        let (na, nb) = (a.order(), b.order());
        let n = na * nb;
        if n > max_order {
            return Err(GroupError::BudgetExceeded {
                what: "group order",
                value: n,
                limit: max_order,
            });
        }
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n as u32 {
            let (xa, xb) = (x / nb as u32, x % nb as u32);
            for y in 0..n as u32 {
                let (ya, yb) = (y / nb as u32, y % nb as u32);
                table.push(a.mul(xa, ya) * nb as u32 + b.mul(xb, yb));
            }
        }
        let name = format!("{}x{}", a.display_name(), b.display_name());
        Ok(Group::from_trusted_table(n, table, Some(name)))
    }

    /// `C_n ⋊ C_m` where the generator of `C_m` acts by `x -> x^k`.
    ///
    /// Element `x^i y^j` has index `i + n * j`.
    pub fn semidirect_product_cyclic(n: usize, m: usize, k: usize, max_order: usize) -> Result<Group> {
        let bad = GroupError::BadAction { n, m, k };
        if n == 0 || m == 0 {
            return Err(bad);
        }
        let (n64, k64) = (n as u64, k as u64);
        if arith::gcd(k64 % n64, n64) != 1 || arith::pow_mod(k64, m as u64, n64) != 1 % n64 {
            return Err(bad);
        }
        let order = n * m;
        if order > max_order {
            return Err(GroupError::BudgetExceeded {
                what: "group order",
                value: order,
                limit: max_order,
            });
        }
        let kpow: Vec<usize> = (0..m).map(|j| arith::pow_mod(k64, j as u64, n64) as usize).collect();
        let mut table = Vec::with_capacity(order * order);
        for x in 0..order {
            let (i, j) = (x % n, x / n);
            for y in 0..order {
                let (i2, j2) = (y % n, y / n);
                let ii = (i + kpow[j] * i2) % n;
                let jj = (j + j2) % m;
                table.push((ii + n * jj) as u32);
            }
        }
        Ok(Group::from_trusted_table(order, table, Some(format!("C{n}:C{m}"))))
    }

    pub fn cyclic(n: usize) -> Group {
        let table = (0..n).flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u32)).collect();
        Group::from_trusted_table(n, table, Some(format!("C{n}")))
    }
}

/// `g ∘ h`: apply `h`, then `g`.
pub(crate) fn compose(g: &[u32], h: &[u32]) -> Permutation {
    h.iter().map(|&i| g[i as usize]).collect()
}

fn relabel_swap(n: usize, table: &[u32], a: u32, b: u32) -> Vec<u32> {
    let sw = |x: u32| {
        if x == a {
            b
        } else if x == b {
            a
        } else {
            x
        }
    };
    let mut out = vec![0u32; n * n];
    for x in 0..n as u32 {
        for y in 0..n as u32 {
            out[x as usize * n + y as usize] = sw(table[sw(x) as usize * n + sw(y) as usize]);
        }
    }
    out
}
