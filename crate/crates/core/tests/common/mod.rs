//! Brute-force oracles. Each one works from the cover list alone and shares
//! no code with the library algorithms.
#![allow(dead_code)]

use std::collections::BTreeMap;

use kpromo::Poset;
use rand::Rng;

/// `less[x][y]` iff `x < y`, from the cover list by repeated relaxation.
pub fn strict_order(p: &Poset) -> Vec<Vec<bool>> {
    let n = p.len();
    let mut less = vec![vec![false; n]; n];
    for &(a, b) in p.covers() {
        less[a][b] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if less[i][k] && less[k][j] {
                    less[i][j] = true;
                }
            }
        }
    }
    less
}

/// Every vector in `[m]^n` that increases along covers and uses all of `[m]`.
pub fn brute_packed(p: &Poset, m: usize) -> Vec<Vec<u8>> {
    let n = p.len();
    let mut out = Vec::new();
    if m == 0 {
        return out;
    }
    let mut v = vec![1u8; n];
    loop {
        let increasing = p.covers().iter().all(|&(a, b)| v[a] < v[b]);
        let onto = (1..=m as u8).all(|k| v.contains(&k));
        if increasing && onto {
            out.push(v.clone());
        }
        // odometer, last position fastest
        let mut i = n;
        loop {
            if i == 0 {
                out.sort();
                return out;
            }
            i -= 1;
            if (v[i] as usize) < m {
                v[i] += 1;
                break;
            }
            v[i] = 1;
        }
    }
}

/// K-promotion by the slide description: unlabel the 1s, then for
/// `i = 2..=m` move each label `i` down onto its unlabeled lower covers,
/// then decrement and give the holes `m`.
pub fn slide_k_promote(p: &Poset, labels: &[u8], m: usize) -> Vec<u8> {
    let n = p.len();
    let mut cur: Vec<Option<u8>> = labels.iter().map(|&v| (v != 1).then_some(v)).collect();
    for i in 2..=m as u8 {
        let snapshot = cur.clone();
        let mut next = cur.clone();
        for &(x, y) in p.covers() {
            if snapshot[x].is_none() && snapshot[y] == Some(i) {
                next[x] = Some(i);
                next[y] = None;
            }
        }
        cur = next;
    }
    (0..n)
        .map(|x| match cur[x] {
            Some(v) => v - 1,
            None => m as u8,
        })
        .collect()
}

/// All down-closed subsets as bitmasks, by filtering `2^n`.
pub fn brute_ideals(p: &Poset) -> Vec<u64> {
    let n = p.len();
    assert!(n <= 20);
    (0u64..1 << n)
        .filter(|&s| p.covers().iter().all(|&(a, b)| s >> b & 1 == 0 || s >> a & 1 == 1))
        .collect()
}

/// `ρ(I)`: ideal generated by the minimal elements of `P − I`.
pub fn brute_rowmotion(p: &Poset, ideal: u64) -> u64 {
    let less = strict_order(p);
    let n = p.len();
    let outside: Vec<usize> = (0..n).filter(|&x| ideal >> x & 1 == 0).collect();
    let minimal: Vec<usize> = outside
        .iter()
        .copied()
        .filter(|&x| !outside.iter().any(|&y| less[y][x]))
        .collect();
    let mut out = 0u64;
    for (x, row) in less.iter().enumerate() {
        if minimal.iter().any(|&z| z == x || row[z]) {
            out |= 1 << x;
        }
    }
    out
}

/// Number of linear extensions, by dynamic programming over down-sets.
pub fn linear_extension_count(p: &Poset) -> u128 {
    let n = p.len();
    assert!(n <= 20);
    let mut below = vec![0u64; n];
    for &(a, b) in p.covers() {
        below[b] |= 1 << a;
    }
    let mut ways = vec![0u128; 1 << n];
    ways[0] = 1;
    for s in 0u64..1 << n {
        let w = ways[s as usize];
        if w == 0 {
            continue;
        }
        for x in 0..n {
            if s >> x & 1 == 0 && below[x] & !s == 0 {
                ways[(s | 1 << x) as usize] += w;
            }
        }
    }
    ways[(1usize << n) - 1]
}

/// Orbit-size multiset of a permutation, by following cycles.
pub fn cycle_sizes<T: Ord + Clone>(states: &[T], f: impl Fn(&T) -> T) -> BTreeMap<usize, usize> {
    let index: BTreeMap<&T, usize> = states.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut seen = vec![false; states.len()];
    let mut sizes = BTreeMap::new();
    for start in 0..states.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            len += 1;
            i = *index.get(&f(&states[i])).expect("operator stays in the state set");
        }
        assert_eq!(i, start, "not a permutation");
        *sizes.entry(len).or_insert(0) += 1;
    }
    sizes
}

/// Cover list of the order generated by `relation` (pairs `a < b`).
pub fn transitive_reduction(n: usize, relation: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut less = vec![vec![false; n]; n];
    for &(a, b) in relation {
        less[a][b] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if less[i][k] && less[k][j] {
                    less[i][j] = true;
                }
            }
        }
    }
    let mut covers = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if less[a][b] && !(0..n).any(|c| less[a][c] && less[c][b]) {
                covers.push((a, b));
            }
        }
    }
    covers
}

/// A random poset on `n` elements with minimum 0: each later element
/// sits above a random nonempty set of earlier ones.
pub fn random_rooted_poset(rng: &mut impl Rng, n: usize) -> Poset {
    let mut relation = Vec::new();
    for j in 1..n {
        let first = rng.gen_range(0..j);
        relation.push((first, j));
        for i in 0..j {
            if i != first && rng.gen_bool(0.3) {
                relation.push((i, j));
            }
        }
    }
    Poset::new(n, &transitive_reduction(n, &relation)).expect("reduced relation is a valid cover list")
}

pub fn lcm(a: u128, b: u128) -> u128 {
    fn gcd(a: u128, b: u128) -> u128 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}
