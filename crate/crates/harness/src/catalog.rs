//! Builtin groups and how to build them.

use std::fmt;
use std::path::PathBuf;

use fncheck_core::{Group, GroupError, Permutation};

use crate::load::{load_group, LoadError};

/// How a catalog group is constructed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recipe {
    Cyclic(usize),
    /// `C_n ⋊ C_m` with the generator of `C_m` acting as `x -> x^k`.
    Semidirect { n: usize, m: usize, k: usize },
    Permutations { degree: usize, generators: Vec<Permutation> },
    /// 2x2 matrices over `F_p`, each generator given row-major.
    Matrices { p: u32, generators: Vec<[u32; 4]> },
    Direct(Box<Recipe>, Box<Recipe>),
    File(PathBuf),
}

#[derive(Debug, thiserror::Error)]
pub enum BuildError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Load(#[from] LoadError),
}

impl Recipe {
    pub fn build(&self, max_order: usize) -> Result<Group, BuildError> {
        Ok(match self {
            Recipe::Cyclic(n) => {
                if *n > max_order {
                    return Err(GroupError::BudgetExceeded {
                        what: "group order",
                        value: *n,
                        limit: max_order,
                    }
                    .into());
                }
                Group::cyclic(*n)
            }
            Recipe::Semidirect { n, m, k } => Group::semidirect_product_cyclic(*n, *m, *k, max_order)?,
            Recipe::Permutations { degree, generators } => Group::from_permutations(*degree, generators, max_order)?,
            Recipe::Matrices { p, generators } => {
                let p = *p;
                let mul = |a: &[u32; 4], b: &[u32; 4]| {
                    [
                        (a[0] * b[0] + a[1] * b[2]) % p,
                        (a[0] * b[1] + a[1] * b[3]) % p,
                        (a[2] * b[0] + a[3] * b[2]) % p,
                        (a[2] * b[1] + a[3] * b[3]) % p,
                    ]
                };
                Group::from_generators([1, 0, 0, 1], generators, mul, max_order)?
            }
            Recipe::Direct(a, b) => Group::direct_product(&a.build(max_order)?, &b.build(max_order)?, max_order)?,
            Recipe::File(path) => load_group(path, max_order)?,
        })
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Cyclic(n) => write!(f, "cyclic({n})"),
            Recipe::Semidirect { n, m, k } => write!(f, "semidirect({n},{m},{k})"),
            Recipe::Permutations { degree, generators } => {
                write!(f, "permutations(degree {degree}, {} generators)", generators.len())
            }
            Recipe::Matrices { p, generators } => write!(f, "matrices(F{p}, {} generators)", generators.len()),
            Recipe::Direct(a, b) => write!(f, "{a} x {b}"),
            Recipe::File(path) => write!(f, "file({})", path.display()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub recipe: Recipe,
    pub expected_order: usize,
}

impl CatalogEntry {
    fn new(name: impl Into<String>, recipe: Recipe, expected_order: usize) -> Self {
        CatalogEntry {
            name: name.into(),
            recipe,
            expected_order,
        }
    }

    /// Builds the group, names it after the entry and checks its order.
    pub fn build(&self, max_order: usize) -> Result<Group, BuildError> {
        if self.expected_order > max_order {
            return Err(GroupError::BudgetExceeded {
                what: "group order",
                value: self.expected_order,
                limit: max_order,
            }
            .into());
        }
        let g = self.recipe.build(max_order)?;
        if g.order() != self.expected_order {
            return Err(GroupError::BadShape(format!(
                "catalog entry {} built a group of order {} instead of {}",
                self.name,
                g.order(),
                self.expected_order
            ))
            .into());
        }
        Ok(g.with_name(self.name.clone()))
    }
}

fn cyc(n: usize) -> Recipe {
    Recipe::Cyclic(n)
}

fn sd(n: usize, m: usize, k: usize) -> Recipe {
    Recipe::Semidirect { n, m, k }
}

fn perms(degree: usize, generators: &[&[u32]]) -> Recipe {
    Recipe::Permutations {
        degree,
        generators: generators.iter().map(|g| g.to_vec()).collect(),
    }
}

fn mats(p: u32, generators: &[[u32; 4]]) -> Recipe {
    Recipe::Matrices {
        p,
        generators: generators.to_vec(),
    }
}

fn x(a: Recipe, b: Recipe) -> Recipe {
    Recipe::Direct(Box::new(a), Box::new(b))
}

/// Dihedral group of order `2n` acting on the vertices of an `n`-gon.
fn dihedral(n: usize) -> Recipe {
    let rotation: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
    let reflection: Vec<u32> = (0..n as u32).map(|i| (n as u32 - i) % n as u32).collect();
    Recipe::Permutations {
        degree: n,
        generators: vec![rotation, reflection],
    }
}

fn s3() -> Recipe {
    perms(3, &[&[1, 0, 2], &[1, 2, 0]])
}

fn s4() -> Recipe {
    perms(4, &[&[1, 0, 2, 3], &[1, 2, 3, 0]])
}

fn a4() -> Recipe {
    perms(4, &[&[1, 2, 0, 3], &[1, 0, 3, 2]])
}

fn a5() -> Recipe {
    perms(5, &[&[1, 2, 0, 3, 4], &[1, 2, 3, 4, 0]])
}

fn q8() -> Recipe {
    mats(3, &[[0, 2, 1, 0], [1, 1, 1, 2]])
}

fn sl2_3() -> Recipe {
    mats(3, &[[1, 1, 0, 1], [0, 2, 1, 0]])
}

/// `S3 × (C11 ⋊ C5)`, order 330.
pub fn ex12_330() -> CatalogEntry {
    CatalogEntry::new("ex12_330", x(s3(), sd(11, 5, 3)), 330)
}

/// Every builtin group, in catalog order.
pub fn builtin_catalog() -> Vec<CatalogEntry> {
    let mut out: Vec<CatalogEntry> = (1..=64).map(|n| CatalogEntry::new(format!("C{n}"), cyc(n), n)).collect();
    let e = CatalogEntry::new;
    out.extend([
        e("C2xC2", x(cyc(2), cyc(2)), 4),
        e("C2xC4", x(cyc(2), cyc(4)), 8),
        e("C2xC2xC2", x(x(cyc(2), cyc(2)), cyc(2)), 8),
        e("C3xC3", x(cyc(3), cyc(3)), 9),
        e("C4xC4", x(cyc(4), cyc(4)), 16),
        e("C2xC2xC2xC2", x(x(cyc(2), cyc(2)), x(cyc(2), cyc(2))), 16),
        e("C5xC5", x(cyc(5), cyc(5)), 25),
        e("Q8", q8(), 8),
        e("C2xQ8", x(cyc(2), q8()), 16),
    ]);
    out.extend((3..=12).map(|n| CatalogEntry::new(format!("D{}", 2 * n), dihedral(n), 2 * n)));
    out.extend([
        e("S3", s3(), 6),
        e("S4", s4(), 24),
        e("A4", a4(), 12),
        e("A5", a5(), 60),
        e("S5", perms(5, &[&[1, 0, 2, 3, 4], &[1, 2, 3, 4, 0]]), 120),
        e("SL2_3", sl2_3(), 24),
        e("GL2_3", mats(3, &[[1, 1, 0, 1], [0, 2, 1, 0], [2, 0, 0, 1]]), 48),
        e("SL2_5", mats(5, &[[1, 1, 0, 1], [0, 4, 1, 0]]), 120),
        e("PSL2_7", perms(8, &[&[1, 2, 3, 4, 5, 6, 0, 7], &[7, 6, 3, 2, 5, 4, 1, 0]]), 168),
        e("C3:C2", sd(3, 2, 2), 6),
        e("C5:C2", sd(5, 2, 4), 10),
        e("C7:C3", sd(7, 3, 2), 21),
        e("C11:C5", sd(11, 5, 3), 55),
        e("C13:C3", sd(13, 3, 3), 39),
        e("C3:C4", sd(3, 4, 2), 12),
        e("C5:C4", sd(5, 4, 2), 20),
        e("C7:C6", sd(7, 6, 3), 42),
        e("C13:C4", sd(13, 4, 5), 52),
        e("C9:C3", sd(9, 3, 4), 27),
        ex12_330(),
        e("C2xS3", x(cyc(2), s3()), 12),
        e("C3xS3", x(cyc(3), s3()), 18),
        e("C4xS3", x(cyc(4), s3()), 24),
        e("C5xS3", x(cyc(5), s3()), 30),
        e("S3xS3", x(s3(), s3()), 36),
        e("C2xA4", x(cyc(2), a4()), 24),
        e("C3xA4", x(cyc(3), a4()), 36),
        e("C5xA4", x(cyc(5), a4()), 60),
        e("C2xD8", x(cyc(2), dihedral(4)), 16),
        e("C3xQ8", x(cyc(3), q8()), 24),
        e("C2xC7:C3", x(cyc(2), sd(7, 3, 2)), 42),
        e("C3xC5:C4", x(cyc(3), sd(5, 4, 2)), 60),
        e("C2xS4", x(cyc(2), s4()), 48),
        e("C2xSL2_3", x(cyc(2), sl2_3()), 48),
        e("C2xA5", x(cyc(2), a5()), 120),
    ]);
    out
}

/// Looks up a builtin entry by exact name.
pub fn find(name: &str) -> Option<CatalogEntry> {
    builtin_catalog().into_iter().find(|e| e.name == name)
}
