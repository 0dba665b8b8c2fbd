//! Plain-text group formats.
//!
//! Cayley table:
//! ```text
//! group <name>
//! order <n>
//! <n lines of n space-separated 0-based indices>
//! ```
//! Permutation generators:
//! ```text
//! perm <name>
//! degree <d>
//! <one generator per line, d space-separated images>
//! ```

use super::{Group, Permutation};
use crate::error::{GroupError, Result};

/// Parsed contents of either file format, before the group is built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupText {
    Table { name: String, order: usize, rows: Vec<Vec<u32>> },
    Perm { name: String, degree: usize, generators: Vec<Permutation> },
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> GroupError {
    GroupError::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn header<'a>(lines: &[(usize, &'a str)], at: usize, keyword: &str) -> Result<&'a str> {
    let (no, line) = lines.get(at).copied().ok_or_else(|| parse_err(at + 1, 1, format!("missing `{keyword}` line")))?;
    let rest = line
        .strip_prefix(keyword)
        .filter(|r| r.starts_with(' '))
        .ok_or_else(|| parse_err(no, 1, format!("expected `{keyword} <value>`")))?;
    let value = rest.trim();
    if value.is_empty() {
        return Err(parse_err(no, keyword.len() + 2, format!("empty `{keyword}` value")));
    }
    Ok(value)
}

fn parse_row(no: usize, line: &str) -> Result<Vec<u32>> {
    let mut out = Vec::new();
    let mut column = 1;
    for tok in line.split(' ') {
        if tok.is_empty() {
            return Err(parse_err(no, column, "expected a single space between entries"));
        }
        let v = tok
            .parse::<u32>()
            .map_err(|_| parse_err(no, column, format!("`{tok}` is not a non-negative integer")))?;
        out.push(v);
        column += tok.len() + 1;
    }
    Ok(out)
}

fn parse_count(no: usize, value: &str, what: &str, column: usize) -> Result<usize> {
    value
        .parse::<usize>()
        .map_err(|_| parse_err(no, column, format!("`{value}` is not a valid {what}")))
}

pub fn parse(text: &str) -> Result<GroupText> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let first = lines.first().map(|(_, l)| *l).unwrap_or("");
    if first.starts_with("group ") {
        let name = header(&lines, 0, "group")?.to_string();
        let value = header(&lines, 1, "order")?;
        let order = parse_count(lines[1].0, value, "order", 7)?;
        let body = &lines[2..];
        if body.len() != order {
            let no = body.last().map_or(lines[1].0, |l| l.0);
            return Err(parse_err(no, 1, format!("expected {order} table rows, found {}", body.len())));
        }
        let mut rows = Vec::with_capacity(order);
        for &(no, line) in body {
            let row = parse_row(no, line)?;
            if row.len() != order {
                return Err(parse_err(no, 1, format!("row has {} entries, expected {order}", row.len())));
            }
            rows.push(row);
        }
        Ok(GroupText::Table { name, order, rows })
    } else if first.starts_with("perm ") {
        let name = header(&lines, 0, "perm")?.to_string();
        let value = header(&lines, 1, "degree")?;
        let degree = parse_count(lines[1].0, value, "degree", 8)?;
        let mut generators = Vec::new();
        for &(no, line) in &lines[2..] {
            let g = parse_row(no, line)?;
            if g.len() != degree {
                return Err(parse_err(no, 1, format!("generator has {} images, expected {degree}", g.len())));
            }
            generators.push(g);
        }
        Ok(GroupText::Perm { name, degree, generators })
    } else {
        Err(parse_err(1, 1, "expected `group <name>` or `perm <name>` header"))
    }
}

/// Parses and builds a group, taking its name from the header.
pub fn parse_group(text: &str, max_order: usize) -> Result<Group> {
    match parse(text)? {
        GroupText::Table { name, order, rows } => {
            if order > max_order {
                return Err(GroupError::BudgetExceeded {
                    what: "group order",
                    value: order,
                    limit: max_order,
                });
            }
            Ok(Group::from_table(order, &rows)?.with_name(name))
        }
        GroupText::Perm { name, degree, generators } => {
            Ok(Group::from_permutations(degree, &generators, max_order)?.with_name(name))
        }
    }
}

pub fn table_text(group: &Group, name: &str) -> String {
    let n = group.order();
    let mut out = format!("group {name}\norder {n}\n");
    for a in 0..n as u32 {
        let row: Vec<String> = group.row(a).iter().map(u32::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn perm_text(name: &str, degree: usize, generators: &[Permutation]) -> String {
    let mut out = format!("perm {name}\ndegree {degree}\n");
    for g in generators {
        let imgs: Vec<String> = g.iter().map(u32::to_string).collect();
        out.push_str(&imgs.join(" "));
        out.push('\n');
    }
    out
}

/// Right regular representation on a greedy generating set.
pub fn regular_permutations(group: &Group) -> (usize, Vec<Permutation>) {
    let gens = group.generators(&group.whole());
    let perms = gens
        .iter()
        .map(|&g| (0..group.order() as u32).map(|x| group.mul(x, g)).collect())
        .collect();
    (group.order(), perms)
}
