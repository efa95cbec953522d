//! Finite posets stored by their Hasse diagram.
//!
//! Elements are the dense indices `0..n`. A [`Poset`] is validated on
//! construction (acyclic, transitively reduced, no duplicate covers) and then
//! carries bitmask caches of the strict up- and down-sets of every element, so
//! comparisons are a single mask test. Posets are immutable after
//! construction and can be shared freely between worker threads.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::ideal::Ideal;

/// Largest supported element count (bitmask width).
pub const MAX_ELEMENTS: usize = 64;

pub(crate) fn bit(x: usize) -> u64 {
    1u64 << x
}

/// Iterates the set bits of `mask` in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let x = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(x)
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    covers: Vec<(usize, usize)>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    upper_mask: Vec<u64>,
    lower_mask: Vec<u64>,
    above: Vec<u64>,
    below: Vec<u64>,
    /// Longest chain length (in covers) below / above each element.
    depth: Vec<usize>,
    up_height: Vec<usize>,
    /// `dist[x * n + y]`: longest chain length from `x` up to `y`, 0 if `x` is not below `y`.
    dist: Vec<u8>,
}

/// Rank information for a poset with a unique minimum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankData {
    /// Length of the longest saturated chain from the minimum to each
    /// element. Equal to the rank when `is_ranked` holds.
    pub ranks: Vec<usize>,
    pub is_ranked: bool,
    /// Ranked and every maximal chain has length `h(P)`.
    pub uniform_maximal_chain_length: bool,
}

/// The maximal chain `0̂ = x_1 ⋖ … ⋖ x_t` of elements each covered by exactly
/// one element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrunkInfo {
    pub trunk: Vec<usize>,
}

impl TrunkInfo {
    pub fn len(&self) -> usize {
        self.trunk.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trunk.is_empty()
    }
}

/// A connected component of `P − 0̂`, with its embedding into `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalSubposet {
    /// Elements of `P` in increasing index order; element `i` of `poset` is `elements[i]`.
    pub elements: Vec<usize>,
    pub poset: Poset,
}

impl PrincipalSubposet {
    pub fn is_chain(&self) -> bool {
        self.poset.height() + 1 == self.poset.len()
    }
}

impl Poset {
    /// Builds and validates a poset from its cover relations `(lower, upper)`.
    pub fn new(n: usize, covers: &[(usize, usize)]) -> Result<Self> {
        if n == 0 || n > MAX_ELEMENTS {
            return Err(Error::InvalidSize { n, max: MAX_ELEMENTS });
        }
        for &(a, b) in covers {
            for index in [a, b] {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, n });
                }
            }
            if a == b {
                return Err(Error::CycleDetected);
            }
        }
        let mut sorted = covers.to_vec();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateCover(w[0].0, w[0].1));
        }

        let mut upper = vec![Vec::new(); n];
        let mut lower = vec![Vec::new(); n];
        let mut upper_mask = vec![0u64; n];
        let mut lower_mask = vec![0u64; n];
        for &(a, b) in &sorted {
            upper[a].push(b);
            lower[b].push(a);
            upper_mask[a] |= bit(b);
            lower_mask[b] |= bit(a);
        }

        let topo = topological_order(n, &upper, &lower).ok_or(Error::CycleDetected)?;

        let mut above = vec![0u64; n];
        let mut up_height = vec![0usize; n];
        for &x in topo.iter().rev() {
            for &y in &upper[x] {
                above[x] |= bit(y) | above[y];
                up_height[x] = up_height[x].max(up_height[y] + 1);
            }
        }
        let mut depth = vec![0usize; n];
        for &x in &topo {
            for &y in &lower[x] {
                depth[x] = depth[x].max(depth[y] + 1);
            }
        }

        for &(x, y) in &sorted {
            if let Some(&z) = upper[x].iter().find(|&&z| z != y && above[z] & bit(y) != 0) {
                return Err(Error::NotTransitivelyReduced {
                    lower: x,
                    middle: z,
                    upper: y,
                });
            }
        }

        let mut below = vec![0u64; n];
        for (x, &up) in above.iter().enumerate() {
            for y in bits(up) {
                below[y] |= bit(x);
            }
        }

        let mut dist = vec![0u8; n * n];
        for &x in topo.iter().rev() {
            for &y in &upper[x] {
                dist[x * n + y] = dist[x * n + y].max(1);
                for z in bits(above[y]) {
                    let through = dist[y * n + z] + 1;
                    if through > dist[x * n + z] {
                        dist[x * n + z] = through;
                    }
                }
            }
        }

        Ok(Poset {
            n,
            covers: sorted,
            upper,
            lower,
            upper_mask,
            lower_mask,
            above,
            below,
            depth,
            up_height,
            dist,
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower[x]
    }

    pub fn upper_cover_mask(&self, x: usize) -> u64 {
        self.upper_mask[x]
    }

    pub fn lower_cover_mask(&self, x: usize) -> u64 {
        self.lower_mask[x]
    }

    /// Strict up-set of `x` as a bitmask.
    pub fn above_mask(&self, x: usize) -> u64 {
        self.above[x]
    }

    /// Strict down-set of `x` as a bitmask.
    pub fn below_mask(&self, x: usize) -> u64 {
        self.below[x]
    }

    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            bit(self.n) - 1
        }
    }

    /// `x < y` in the poset.
    pub fn less(&self, x: usize, y: usize) -> bool {
        self.above[x] & bit(y) != 0
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        x == y || self.less(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.less(y, x)
    }

    /// Longest chain length from `x` up to `y`; `None` unless `x < y`.
    pub fn chain_distance(&self, x: usize, y: usize) -> Option<usize> {
        match self.dist[x * self.n + y] {
            0 => None,
            d => Some(d as usize),
        }
    }

    /// Longest chain length ending at `x`.
    pub fn depth(&self, x: usize) -> usize {
        self.depth[x]
    }

    /// Longest chain length starting at `x`.
    pub fn up_height(&self, x: usize) -> usize {
        self.up_height[x]
    }

    /// Length (in covers) of a longest chain.
    pub fn height(&self) -> usize {
        self.depth.iter().copied().max().unwrap_or(0)
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.lower[x].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.upper[x].is_empty()).collect()
    }

    /// The unique minimal element `0̂`, if there is one.
    pub fn minimum(&self) -> Option<usize> {
        match self.minimal_elements().as_slice() {
            [x] => Some(*x),
            _ => None,
        }
    }

    fn require_minimum(&self) -> Result<usize> {
        self.minimum().ok_or(Error::NoUniqueMinimum)
    }

    /// Topological order that always takes the smallest available index.
    pub fn linear_extension(&self) -> Vec<usize> {
        topological_order(self.n, &self.upper, &self.lower).expect("validated poset is acyclic")
    }

    pub fn is_linear_extension(&self, order: &[usize]) -> bool {
        if order.len() != self.n {
            return false;
        }
        let mut seen = 0u64;
        for &x in order {
            if x >= self.n || seen & bit(x) != 0 || self.below[x] & !seen != 0 {
                return false;
            }
            seen |= bit(x);
        }
        true
    }

    pub fn rank_data(&self) -> Result<RankData> {
        let zero = self.require_minimum()?;
        let mut shortest = vec![usize::MAX; self.n];
        shortest[zero] = 0;
        for x in self.linear_extension() {
            for &y in &self.upper[x] {
                shortest[y] = shortest[y].min(shortest[x] + 1);
            }
        }
        let is_ranked = (0..self.n).all(|x| shortest[x] == self.depth[x]);
        let h = self.height();
        let uniform_maximal_chain_length =
            is_ranked && self.maximal_elements().iter().all(|&x| self.depth[x] == h);
        Ok(RankData {
            ranks: self.depth.clone(),
            is_ranked,
            uniform_maximal_chain_length,
        })
    }

    pub fn trunk(&self) -> Result<TrunkInfo> {
        let mut x = self.require_minimum()?;
        let mut trunk = Vec::new();
        while let [next] = self.upper[x].as_slice() {
            trunk.push(x);
            x = *next;
        }
        Ok(TrunkInfo { trunk })
    }

    /// `P − T` for the trunk `T`, reindexed in increasing original order,
    /// together with `t = #T`.
    pub fn remove_trunk(&self) -> Result<(Poset, usize)> {
        let trunk = self.trunk()?;
        let mask = trunk.trunk.iter().fold(0u64, |m, &x| m | bit(x));
        let rest: Vec<usize> = (0..self.n).filter(|&x| mask & bit(x) == 0).collect();
        if rest.is_empty() {
            return Err(Error::EmptyResult);
        }
        Ok((self.induced(&rest)?, trunk.len()))
    }

    /// The subposet induced on `elements`, reindexed in the given order.
    pub fn induced(&self, elements: &[usize]) -> Result<Poset> {
        let mut sub = 0u64;
        for &x in elements {
            if x >= self.n {
                return Err(Error::IndexOutOfRange { index: x, n: self.n });
            }
            sub |= bit(x);
        }
        let mut covers = Vec::new();
        for (i, &x) in elements.iter().enumerate() {
            for (j, &y) in elements.iter().enumerate() {
                if self.less(x, y) && self.above[x] & self.below[y] & sub == 0 {
                    covers.push((i, j));
                }
            }
        }
        Poset::new(elements.len(), &covers)
    }

    /// Connected components of `P − 0̂`, ordered by smallest element.
    pub fn principal_subposets(&self) -> Result<Vec<PrincipalSubposet>> {
        let zero = self.require_minimum()?;
        let mut unvisited = self.full_mask() & !bit(zero);
        let mut parts = Vec::new();
        while unvisited != 0 {
            let start = unvisited.trailing_zeros() as usize;
            let mut component = bit(start);
            let mut frontier = bit(start);
            while frontier != 0 {
                let mut next = 0u64;
                for x in bits(frontier) {
                    next |= self.upper_mask[x] | self.lower_mask[x];
                }
                next &= unvisited & !component;
                component |= next;
                frontier = next;
            }
            unvisited &= !component;
            let elements: Vec<usize> = bits(component).collect();
            let poset = self.induced(&elements)?;
            parts.push(PrincipalSubposet { elements, poset });
        }
        Ok(parts)
    }

    /// Principal subposets that are chains, each listed bottom-up.
    pub fn branches(&self) -> Result<Vec<Vec<usize>>> {
        Ok(self
            .principal_subposets()?
            .into_iter()
            .filter(PrincipalSubposet::is_chain)
            .map(|part| {
                let mut chain = part.elements;
                chain.sort_by_key(|&x| self.depth[x]);
                chain
            })
            .collect())
    }

    /// Whether the Hasse diagram is a tree hanging from a unique minimum.
    pub fn is_rooted_tree(&self) -> bool {
        self.minimum().is_some() && (0..self.n).all(|x| self.lower[x].len() <= 1)
    }

    /// All order ideals, by cardinality and then lexicographically.
    pub fn ideals(&self) -> Vec<Ideal> {
        crate::ideal::enumerate_ideals(self)
    }
}

/// `P ∪̂ Q`: disjoint union with a new minimum adjoined. The new minimum is
/// element 0, followed by the elements of `p` and then those of `q`.
pub fn bounded_union(p: &Poset, q: &Poset) -> Result<Poset> {
    let (np, nq) = (p.len(), q.len());
    let mut covers = Vec::with_capacity(p.covers.len() + q.covers.len() + 4);
    covers.extend(p.minimal_elements().into_iter().map(|x| (0, x + 1)));
    covers.extend(q.minimal_elements().into_iter().map(|x| (0, x + 1 + np)));
    covers.extend(p.covers.iter().map(|&(a, b)| (a + 1, b + 1)));
    covers.extend(q.covers.iter().map(|&(a, b)| (a + 1 + np, b + 1 + np)));
    Poset::new(1 + np + nq, &covers)
}

fn topological_order(n: usize, upper: &[Vec<usize>], lower: &[Vec<usize>]) -> Option<Vec<usize>> {
    let mut indegree: Vec<usize> = lower.iter().map(Vec::len).collect();
    let mut ready: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&x| indegree[x] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(x)) = ready.pop() {
        order.push(x);
        for &y in &upper[x] {
            indegree[y] -= 1;
            if indegree[y] == 0 {
                ready.push(Reverse(y));
            }
        }
    }
    (order.len() == n).then_some(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn rejects_bad_cover_lists() {
        assert!(matches!(
            Poset::new(3, &[(0, 1), (1, 2), (0, 2)]),
            Err(Error::NotTransitivelyReduced { lower: 0, middle: 1, upper: 2 })
        ));
        assert!(matches!(Poset::new(2, &[(0, 1), (0, 1)]), Err(Error::DuplicateCover(0, 1))));
        assert!(matches!(Poset::new(3, &[(0, 1), (1, 2), (2, 0)]), Err(Error::CycleDetected)));
        assert!(matches!(Poset::new(2, &[(0, 2)]), Err(Error::IndexOutOfRange { index: 2, n: 2 })));
        assert!(matches!(Poset::new(0, &[]), Err(Error::InvalidSize { .. })));
    }

    #[test]
    fn two_chain() {
        let p = Poset::new(2, &[(0, 1)]).unwrap();
        assert_eq!(p.height(), 1);
        assert!(p.less(0, 1));
        assert!(!p.less(1, 0));
        assert_eq!(p.minimum(), Some(0));
    }

    #[test]
    fn trunk_of_tailed_diamond() {
        // u ⋖ v ⋖ w, w ⋖ x, w ⋖ y, x ⋖ z, y ⋖ z
        let p = Poset::new(6, &[(0, 1), (1, 2), (2, 3), (2, 4), (3, 5), (4, 5)]).unwrap();
        assert_eq!(p.trunk().unwrap().trunk, vec![0, 1]);
        let (rest, t) = p.remove_trunk().unwrap();
        assert_eq!(t, 2);
        let diamond = Poset::new(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(rest, diamond);
    }

    #[test]
    fn trunk_edge_cases() {
        assert!(families::extended_star(&[2, 2]).unwrap().trunk().unwrap().is_empty());
        assert_eq!(families::chain(5).unwrap().trunk().unwrap().len(), 4);
        assert!(families::chain(1).unwrap().trunk().unwrap().is_empty());
        let two_minima = Poset::new(3, &[(0, 2), (1, 2)]).unwrap();
        assert!(matches!(two_minima.trunk(), Err(Error::NoUniqueMinimum)));
    }

    #[test]
    fn principal_subposets_and_branches() {
        let star = families::extended_star(&[1, 2, 3]).unwrap();
        let parts = star.principal_subposets().unwrap();
        let sizes: Vec<usize> = parts.iter().map(|p| p.elements.len()).collect();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert!(parts.iter().all(PrincipalSubposet::is_chain));
        assert_eq!(star.branches().unwrap().len(), 3);
        assert!(families::chain(1).unwrap().principal_subposets().unwrap().is_empty());
    }

    #[test]
    fn bounded_union_shape() {
        let one = families::chain(1).unwrap();
        let v = bounded_union(&one, &one).unwrap();
        assert_eq!(v, Poset::new(3, &[(0, 1), (0, 2)]).unwrap());
        let c = families::comb(3).unwrap();
        let s = families::extended_star(&[2, 1]).unwrap();
        let u = bounded_union(&c, &s).unwrap();
        assert_eq!(u.len(), c.len() + s.len() + 1);
        assert_eq!(u.height(), 1 + c.height().max(s.height()));
        let parts: Vec<Poset> = u.principal_subposets().unwrap().into_iter().map(|p| p.poset).collect();
        assert_eq!(parts, vec![c, s]);
    }

    #[test]
    fn rank_data_flags() {
        let diamond = Poset::new(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let r = diamond.rank_data().unwrap();
        assert!(r.is_ranked && r.uniform_maximal_chain_length);
        assert_eq!(r.ranks, vec![0, 1, 1, 2]);

        let star = families::extended_star(&[1, 2]).unwrap();
        let r = star.rank_data().unwrap();
        assert!(r.is_ranked);
        assert!(!r.uniform_maximal_chain_length);

        // 0 ⋖ 1 ⋖ 2 ⋖ 3 and 0 ⋖ 4 ⋖ 3: element 3 has chains of length 2 and 3
        let skew = Poset::new(5, &[(0, 1), (1, 2), (2, 3), (0, 4), (4, 3)]).unwrap();
        assert!(!skew.rank_data().unwrap().is_ranked);
    }

    #[test]
    fn linear_extension_prefers_small_indices() {
        let p = Poset::new(4, &[(3, 0), (3, 1), (2, 1)]).unwrap();
        assert_eq!(p.linear_extension(), vec![2, 3, 0, 1]);
        assert!(p.is_linear_extension(&[3, 2, 1, 0]));
        assert!(!p.is_linear_extension(&[0, 3, 2, 1]));
    }

    #[test]
    fn chain_distance_is_longest() {
        // 0 ⋖ 1 ⋖ 2 ⋖ 3, 0 ⋖ 4 ⋖ 3
        let p = Poset::new(5, &[(0, 1), (1, 2), (2, 3), (0, 4), (4, 3)]).unwrap();
        assert_eq!(p.chain_distance(0, 3), Some(3));
        assert_eq!(p.chain_distance(4, 3), Some(1));
        assert_eq!(p.chain_distance(3, 0), None);
        assert_eq!(p.chain_distance(1, 4), None);
    }
}
