//! Theorem checks and published-table reproduction.
//!
//! Every check returns a [`Report`] with one clause per claim. Clauses
//! accumulate, so a single run shows every divergent `(poset, m)` cell.

mod report;
mod tables;
mod theorems;

pub use report::{Clause, Report, Status};
pub use tables::{
    parse_multiset, published_cells, reproduce_table, CellDiff, Erratum, MRange, RowStatus, Table, TableFamily,
    TableRow, ZIPPER_ERRATA,
};
pub use theorems::{
    check_bounded_union, check_branch_divisibility, check_comb_max, check_comb_min, check_equivariance,
    check_existence, check_star_order, check_star_uniform, check_three_leaf, check_trunk, check_zipper_min,
    multiset_notation, order_from_sizes, three_leaf_prediction,
};

use crate::error::Result;
use crate::families;
use crate::par::Exec;
use crate::poset::Poset;

/// Nonincreasing branch-length vectors with `k ≤ max_k` entries in `1..=max_b`.
pub fn star_shapes(max_b: usize, max_k: usize) -> Vec<Vec<usize>> {
    fn grow(prefix: &mut Vec<usize>, cap: usize, max_k: usize, out: &mut Vec<Vec<usize>>) {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        if prefix.len() == max_k {
            return;
        }
        for b in 1..=cap {
            prefix.push(b);
            grow(prefix, b, max_k, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    grow(&mut Vec::new(), max_b, max_k, &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Named posets used by the suite: combs 3..=6, zippers 1..=2, extended
/// stars with up to three branches of length ≤ 4, and `T(1..=8)`.
pub fn family_pool() -> Result<Vec<(String, Poset)>> {
    let mut pool = Vec::new();
    for n in 3..=6 {
        pool.push((format!("comb:{n}"), families::comb(n)?));
    }
    for n in 1..=2 {
        pool.push((format!("zipper:{n}"), families::zipper(n)?));
    }
    for shape in star_shapes(4, 3) {
        let name = shape.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        pool.push((format!("star:{name}"), families::extended_star(&shape)?));
    }
    for c in 1..=8 {
        pool.push((format!("t3:{c}"), families::three_leaf_tree(c)?));
    }
    Ok(pool)
}

/// The structural theorem checks over their standard ranges: comb and
/// zipper extremes, every star shape with `k ≤ 3`, `b_i ≤ 4` at every valid
/// `m`, uniform stars, `T(1..=8)`, and existence plus branch divisibility
/// over [`family_pool`].
pub fn theorem_suite(exec: Exec) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for n in 3..=6 {
        out.push(check_comb_max(n, exec)?);
        out.push(check_comb_min(n, exec)?);
    }
    for n in 1..=2 {
        out.push(check_zipper_min(n, exec)?);
    }
    for shape in star_shapes(4, 3) {
        let n = shape.iter().sum::<usize>() + 1;
        let h = shape[0];
        for m in h + 1..=n {
            out.push(check_star_order(&shape, m, exec)?);
        }
    }
    for b in 1..=4 {
        for k in 1..=3 {
            out.push(check_star_uniform(b, k, exec)?);
        }
    }
    for c in 1..=8 {
        out.push(check_three_leaf(c, exec)?);
    }
    for (name, p) in family_pool()? {
        let mut r = check_existence(&p)?;
        r.subject = name.clone();
        out.push(r);
        for m in p.height() + 1..=p.len() {
            let mut r = check_branch_divisibility(&p, m, exec)?;
            r.subject = format!("{name} m={m}");
            out.push(r);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_shape_count() {
        // multisets of size 1..=3 from 4 values: 4 + 10 + 20
        let shapes = star_shapes(4, 3);
        assert_eq!(shapes.len(), 34);
        assert_eq!(shapes[0], vec![1]);
        assert!(shapes.iter().all(|s| s.windows(2).all(|w| w[0] >= w[1])));
    }

    #[test]
    fn pool_names_are_unique() {
        let pool = family_pool().unwrap();
        let mut names: Vec<&str> = pool.iter().map(|(n, _)| n.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), pool.len());
    }
}
