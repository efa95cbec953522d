//! Constructors for the poset families used throughout the crate.
//!
//! Index layouts:
//! - `chain(n)`: `0 ⋖ 1 ⋖ … ⋖ n−1`.
//! - `extended_star(b_1, …, b_k)`: `0` is the minimum, then the branches in
//!   order, each listed bottom-up.
//! - `comb(n)`: spine `0..n` bottom-up, the leaf on spine element `i` is `n + i`.
//! - `open_comb(n)`: spine `0..=n` bottom-up, leaves `n + 1 + i` on spine
//!   elements `i < n`; the top spine element carries no leaf of its own.
//! - `zipper(n)` and `open_zipper(n)`: bounded unions of two copies, laid out
//!   as in [`bounded_union`].
//! - `three_leaf_tree(c)`: chain `0..=c`, leaves `u = c+1` and `v = c+2` on
//!   its top, leaf `w = c+3` on its bottom.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::poset::{bit, bits, bounded_union, Poset};

fn positive(name: &str, value: usize) -> Result<()> {
    if value == 0 {
        return Err(Error::InvalidParameter(format!("{name} must be at least 1")));
    }
    Ok(())
}

pub fn chain(n: usize) -> Result<Poset> {
    positive("chain length", n)?;
    let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Poset::new(n, &covers)
}

pub fn antichain(k: usize) -> Result<Poset> {
    positive("antichain size", k)?;
    Poset::new(k, &[])
}

pub fn extended_star(branches: &[usize]) -> Result<Poset> {
    if branches.is_empty() {
        return Err(Error::InvalidParameter("a star needs at least one branch".into()));
    }
    let mut covers = Vec::new();
    let mut next = 1;
    for &b in branches {
        positive("branch length", b)?;
        covers.push((0, next));
        for i in 1..b {
            covers.push((next + i - 1, next + i));
        }
        next += b;
    }
    Poset::new(next, &covers)
}

pub fn comb(n: usize) -> Result<Poset> {
    positive("comb size", n)?;
    let mut covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    covers.extend((0..n).map(|i| (i, n + i)));
    Poset::new(2 * n, &covers)
}

pub fn open_comb(n: usize) -> Result<Poset> {
    positive("comb size", n)?;
    let mut covers: Vec<_> = (1..=n).map(|i| (i - 1, i)).collect();
    covers.extend((0..n).map(|i| (i, n + 1 + i)));
    Poset::new(2 * n + 1, &covers)
}

pub fn zipper(n: usize) -> Result<Poset> {
    let c = comb(n)?;
    bounded_union(&c, &c)
}

pub fn open_zipper(n: usize) -> Result<Poset> {
    let c = open_comb(n)?;
    bounded_union(&c, &c)
}

pub fn three_leaf_tree(c: usize) -> Result<Poset> {
    positive("chain length", c)?;
    let mut covers: Vec<_> = (1..=c).map(|i| (i - 1, i)).collect();
    covers.extend([(c, c + 1), (c, c + 2), (0, c + 3)]);
    Poset::new(c + 4, &covers)
}

/// Minimum `0`, two middle elements `1, 2`, two top elements `3, 4`, each top
/// element covering both middle ones.
pub fn bottomed_bowtie() -> Poset {
    Poset::new(5, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4)]).expect("valid cover list")
}

/// One representative of every isomorphism class of posets on `n` elements
/// with a unique minimum. Representatives are naturally labeled (every cover
/// goes from a smaller to a larger index) with the minimum at index 0.
///
/// Isomorphism testing is by brute force over relabelings, so this is meant
/// for `n ≤ 7`.
pub fn rooted_posets(n: usize) -> Result<Vec<Poset>> {
    positive("poset size", n)?;
    if n > 8 {
        return Err(Error::InvalidParameter("rooted poset enumeration supports n ≤ 8".into()));
    }
    let mut below = vec![0u64; n];
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    extend_rooted(n, 1, &mut below, &mut seen, &mut out)?;
    Ok(out)
}

fn extend_rooted(
    n: usize,
    k: usize,
    below: &mut Vec<u64>,
    seen: &mut HashSet<Vec<u64>>,
    out: &mut Vec<Poset>,
) -> Result<()> {
    if k == n {
        if seen.insert(canonical_form(&below[..n])) {
            out.push(from_down_sets(&below[..n])?);
        }
        return Ok(());
    }
    // the strict down-set of the new element is any nonempty ideal of 0..k
    let prefix = from_down_sets(&below[..k])?;
    for ideal in prefix.ideals() {
        if ideal.is_empty() {
            continue;
        }
        below[k] = ideal.mask();
        extend_rooted(n, k + 1, below, seen, out)?;
    }
    below[k] = 0;
    Ok(())
}

fn from_down_sets(below: &[u64]) -> Result<Poset> {
    let mut covers = Vec::new();
    for (y, &down) in below.iter().enumerate() {
        for x in bits(down) {
            // x ⋖ y unless some z in the down-set of y sits above x
            if bits(down).all(|z| below[z] & bit(x) == 0) {
                covers.push((x, y));
            }
        }
    }
    Poset::new(below.len(), &covers)
}

fn canonical_form(below: &[u64]) -> Vec<u64> {
    let n = below.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<u64>> = None;
    loop {
        let mut image = vec![0u64; n];
        for x in 0..n {
            image[perm[x]] = bits(below[x]).fold(0u64, |m, y| m | bit(perm[y]));
        }
        if best.as_ref().is_none_or(|b| image < *b) {
            best = Some(image);
        }
        // the minimum stays at 0; permute the rest
        if !next_permutation(&mut perm[1..]) {
            break;
        }
    }
    best.unwrap_or_default()
}

fn next_permutation(xs: &mut [usize]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let Some(i) = (0..xs.len() - 1).rev().find(|&i| xs[i] < xs[i + 1]) else {
        return false;
    };
    let j = (i + 1..xs.len()).rev().find(|&j| xs[j] > xs[i]).expect("suffix has a larger element");
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        for n in 1..=6 {
            assert_eq!(comb(n).unwrap().len(), 2 * n);
            assert_eq!(zipper(n).unwrap().len(), 4 * n + 1);
            assert_eq!(open_zipper(n).unwrap().len(), 4 * n + 3);
        }
        for c in 1..=8 {
            assert_eq!(three_leaf_tree(c).unwrap().len(), c + 4);
        }
        assert_eq!(extended_star(&[1, 2, 3]).unwrap().len(), 7);
        assert_eq!(comb(1).unwrap(), chain(2).unwrap());
    }

    #[test]
    fn family_heights() {
        assert_eq!(comb(3).unwrap().height(), 3);
        assert_eq!(three_leaf_tree(3).unwrap().height(), 4);
        assert_eq!(zipper(2).unwrap().height(), 3);
        assert_eq!(open_zipper(2).unwrap().height(), 3);
    }

    #[test]
    fn zipper_is_union_of_combs() {
        let z = zipper(3).unwrap();
        let parts = z.principal_subposets().unwrap();
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|p| p.poset == comb(3).unwrap()));
    }

    #[test]
    fn invalid_parameters() {
        assert!(matches!(comb(0), Err(Error::InvalidParameter(_))));
        assert!(matches!(extended_star(&[]), Err(Error::InvalidParameter(_))));
        assert!(matches!(extended_star(&[2, 0]), Err(Error::InvalidParameter(_))));
        assert!(matches!(three_leaf_tree(0), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn rooted_poset_counts() {
        // posets with a 0̂ on n elements correspond to posets on n − 1 elements
        let counts: Vec<usize> = (1..=6).map(|n| rooted_posets(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 16, 63]);
        for p in rooted_posets(5).unwrap() {
            assert_eq!(p.minimum(), Some(0));
        }
    }
}
