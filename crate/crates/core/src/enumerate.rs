//! Exhaustive enumeration of m-packed labelings.
//!
//! Depth-first assignment in element-index order, so labelings come out
//! lexicographically sorted. Each element's candidate range is cut down by
//! longest-chain distances to the already assigned elements, by the depth
//! and up-height of the element itself, and by a surjectivity bound: the
//! number of unused values may never exceed the number of unassigned
//! elements.

use crate::labeling::{Label, PackedLabeling};
use crate::par::Exec;
use crate::poset::Poset;

/// All m-packed labelings of one poset, lexicographically sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelingSet {
    m: usize,
    labelings: Vec<PackedLabeling>,
}

impl LabelingSet {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.labelings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labelings.is_empty()
    }

    pub fn labelings(&self) -> &[PackedLabeling] {
        &self.labelings
    }

    pub fn into_vec(self) -> Vec<PackedLabeling> {
        self.labelings
    }

    pub fn iter(&self) -> std::slice::Iter<'_, PackedLabeling> {
        self.labelings.iter()
    }

    /// Position of `labeling` in the canonical order.
    pub fn index_of(&self, labeling: &PackedLabeling) -> Option<usize> {
        self.labelings.binary_search(labeling).ok()
    }
}

impl<'a> IntoIterator for &'a LabelingSet {
    type Item = &'a PackedLabeling;
    type IntoIter = std::slice::Iter<'a, PackedLabeling>;

    fn into_iter(self) -> Self::IntoIter {
        self.labelings.iter()
    }
}

/// Whether `h(P) + 1 ≤ m ≤ #P`, the exact range where m-packed labelings exist.
pub fn m_in_range(p: &Poset, m: usize) -> bool {
    p.height() < m && m <= p.len()
}

/// Streaming iterator over the m-packed labelings of `p`.
pub struct PackedLabelings<'a> {
    poset: &'a Poset,
    m: usize,
    labels: Vec<Label>,
    hi: Vec<Label>,
    used: Vec<u32>,
    missing: usize,
    /// Positions below `fixed` are pinned to a prefix.
    fixed: usize,
    /// Emit once this many positions are assigned.
    stop: usize,
    started: bool,
    done: bool,
}

impl<'a> PackedLabelings<'a> {
    pub fn new(poset: &'a Poset, m: usize) -> Self {
        Self::bounded(poset, m, poset.len())
    }

    fn bounded(poset: &'a Poset, m: usize, stop: usize) -> Self {
        let n = poset.len();
        let live = m_in_range(poset, m);
        PackedLabelings {
            poset,
            m,
            labels: vec![0; n],
            hi: vec![0; n],
            used: vec![0; if live { m + 1 } else { 0 }],
            missing: m,
            fixed: 0,
            stop,
            started: false,
            done: !live,
        }
    }

    /// Completions of a prefix produced by a bounded enumerator.
    fn with_prefix(poset: &'a Poset, m: usize, prefix: &[Label]) -> Self {
        let mut it = Self::bounded(poset, m, poset.len());
        for (x, &v) in prefix.iter().enumerate() {
            it.assign(x, v);
        }
        it.fixed = prefix.len();
        it
    }

    fn assign(&mut self, x: usize, v: Label) {
        self.labels[x] = v;
        let slot = &mut self.used[v as usize];
        if *slot == 0 {
            self.missing -= 1;
        }
        *slot += 1;
    }

    fn unassign(&mut self, x: usize) {
        let v = self.labels[x] as usize;
        self.used[v] -= 1;
        if self.used[v] == 0 {
            self.missing += 1;
        }
        self.labels[x] = 0;
    }

    /// Candidate range for position `x` given positions `0..x`.
    fn bounds(&self, x: usize) -> (usize, usize) {
        let p = self.poset;
        let mut lo = 1 + p.depth(x);
        let mut hi = self.m.saturating_sub(p.up_height(x));
        for y in 0..x {
            let l = self.labels[y] as usize;
            if let Some(d) = p.chain_distance(y, x) {
                lo = lo.max(l + d);
            } else if let Some(d) = p.chain_distance(x, y) {
                hi = hi.min(l.saturating_sub(d));
            }
        }
        (lo, hi)
    }

    /// Assigns the smallest admissible value `≥ from` at `x`.
    fn place_from(&mut self, x: usize, from: usize) -> bool {
        let remaining = self.poset.len() - x - 1;
        for v in from..=self.hi[x] as usize {
            self.assign(x, v as Label);
            if self.missing <= remaining {
                return true;
            }
            self.unassign(x);
        }
        false
    }

    fn descend(&mut self, x: usize) -> bool {
        let (lo, hi) = self.bounds(x);
        if lo > hi {
            return false;
        }
        self.hi[x] = hi as Label;
        self.place_from(x, lo)
    }

    fn bump(&mut self, x: usize) -> bool {
        let current = self.labels[x] as usize;
        self.unassign(x);
        self.place_from(x, current + 1)
    }

    fn emit(&self) -> PackedLabeling {
        PackedLabeling::from_parts(self.labels[..self.stop].to_vec(), self.m)
    }
}

impl Iterator for PackedLabelings<'_> {
    type Item = PackedLabeling;

    fn next(&mut self) -> Option<PackedLabeling> {
        if self.done {
            return None;
        }
        if self.fixed == self.stop {
            // fully pinned prefix: a single candidate
            self.done = true;
            return (self.missing == 0 || self.stop < self.poset.len()).then(|| self.emit());
        }
        let (mut x, mut fresh) = if self.started {
            (self.stop - 1, false)
        } else {
            self.started = true;
            (self.fixed, true)
        };
        loop {
            let ok = if fresh { self.descend(x) } else { self.bump(x) };
            if ok {
                if x + 1 == self.stop {
                    return Some(self.emit());
                }
                x += 1;
                fresh = true;
            } else {
                if x == self.fixed {
                    self.done = true;
                    return None;
                }
                x -= 1;
                fresh = false;
            }
        }
    }
}

/// All m-packed labelings of `p`, empty when `m` is out of range.
pub fn enumerate_packed(p: &Poset, m: usize) -> LabelingSet {
    enumerate_packed_with(p, m, Exec::default())
}

/// As [`enumerate_packed`]; in parallel mode disjoint prefix subtrees are
/// enumerated by separate workers and concatenated in prefix order.
pub fn enumerate_packed_with(p: &Poset, m: usize, exec: Exec) -> LabelingSet {
    let labelings = if exec.is_parallel() && p.len() > 6 {
        let depth = split_depth(p);
        let prefixes: Vec<PackedLabeling> = PackedLabelings::bounded(p, m, depth).collect();
        exec.map(&prefixes, |prefix| {
            PackedLabelings::with_prefix(p, m, prefix.labels()).collect::<Vec<_>>()
        })
        .into_iter()
        .flatten()
        .collect()
    } else {
        PackedLabelings::new(p, m).collect()
    };
    LabelingSet { m, labelings }
}

fn split_depth(p: &Poset) -> usize {
    (p.len() / 3).clamp(1, 4)
}

pub fn count_packed(p: &Poset, m: usize) -> u64 {
    PackedLabelings::new(p, m).count() as u64
}

pub fn has_packed(p: &Poset, m: usize) -> bool {
    PackedLabelings::new(p, m).next().is_some()
}
