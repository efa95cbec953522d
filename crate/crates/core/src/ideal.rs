//! Order ideals (down-closed subsets) as element bitmasks.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poset::{bit, bits, Poset};

/// A down-closed subset of a poset.
///
/// Ideals are ordered by cardinality and then lexicographically on their
/// sorted element lists, which is the canonical enumeration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Ideal(u64);

impl Ideal {
    pub const EMPTY: Ideal = Ideal(0);

    /// Wraps a mask after checking that it is down-closed in `p`.
    pub fn from_mask(p: &Poset, mask: u64) -> Result<Self> {
        if mask & !p.full_mask() != 0 || !is_down_closed(p, mask) {
            return Err(Error::NotAnIdeal);
        }
        Ok(Ideal(mask))
    }

    pub fn from_elements(p: &Poset, elements: &[usize]) -> Result<Self> {
        let mut mask = 0u64;
        for &x in elements {
            if x >= p.len() {
                return Err(Error::IndexOutOfRange { index: x, n: p.len() });
            }
            mask |= bit(x);
        }
        Self::from_mask(p, mask)
    }

    /// The down-closure of `generators`.
    pub fn generated_by(p: &Poset, generators: u64) -> Self {
        let mut mask = generators;
        for x in bits(generators) {
            mask |= p.below_mask(x);
        }
        Ideal(mask)
    }

    pub(crate) fn from_mask_unchecked(mask: u64) -> Self {
        Ideal(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn contains(self, x: usize) -> bool {
        x < 64 && self.0 & bit(x) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn elements(self) -> Vec<usize> {
        bits(self.0).collect()
    }

    pub fn is_ideal_of(self, p: &Poset) -> bool {
        self.0 & !p.full_mask() == 0 && is_down_closed(p, self.0)
    }
}

pub(crate) fn is_down_closed(p: &Poset, mask: u64) -> bool {
    bits(mask).all(|x| p.lower_cover_mask(x) & !mask == 0)
}

impl Ord for Ideal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                // the first differing element belongs to `self`
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in bits(self.0).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for Ideal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.elements().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Ideal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let elements = Vec::<usize>::deserialize(deserializer)?;
        let mut mask = 0u64;
        for x in elements {
            if x >= 64 {
                return Err(serde::de::Error::custom(format!("element {x} out of range")));
            }
            mask |= bit(x);
        }
        Ok(Ideal(mask))
    }
}

/// All ideals of `p` in canonical order.
pub(crate) fn enumerate_ideals(p: &Poset) -> Vec<Ideal> {
    let order = p.linear_extension();
    let mut out = Vec::new();
    // include/exclude each element in linear-extension order; an element may
    // join only once all of its lower covers have
    fn walk(p: &Poset, order: &[usize], k: usize, mask: u64, out: &mut Vec<Ideal>) {
        if k == order.len() {
            out.push(Ideal(mask));
            return;
        }
        let x = order[k];
        walk(p, order, k + 1, mask, out);
        if p.lower_cover_mask(x) & !mask == 0 {
            walk(p, order, k + 1, mask | bit(x), out);
        }
    }
    walk(p, &order, 0, 0, &mut out);
    out.sort_unstable();
    out
}
