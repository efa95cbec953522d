//! m-packed labelings: order-increasing maps onto exactly `{1, …, m}`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::Poset;

pub type Label = u8;

/// An m-packed labeling, labels listed in element-index order.
///
/// Ordering is lexicographic on the label sequence (all labelings being
/// compared share the same `m`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PackedLabeling {
    m: usize,
    labels: Vec<Label>,
}

/// A single reason a label vector fails to be m-packed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    OutOfRange { element: usize, label: usize },
    NotIncreasing { lower: usize, upper: usize },
    MissingValue(usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OutOfRange { element, label } => {
                write!(f, "element {element} has label {label} outside 1..=m")
            }
            Violation::NotIncreasing { lower, upper } => {
                write!(f, "cover {lower} ⋖ {upper} is not strictly increasing")
            }
            Violation::MissingValue(v) => write!(f, "value {v} is not used"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Validation {
    pub violations: Vec<Violation>,
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that `labels` is increasing along every cover of `p` and has image
/// exactly `{1, …, m}`.
pub fn validate(p: &Poset, labels: &[Label], m: usize) -> Result<Validation> {
    if labels.len() != p.len() {
        return Err(Error::LengthMismatch {
            expected: p.len(),
            actual: labels.len(),
        });
    }
    let mut violations = Vec::new();
    let mut seen = vec![false; m + 1];
    for (element, &label) in labels.iter().enumerate() {
        let label = label as usize;
        if label == 0 || label > m {
            violations.push(Violation::OutOfRange { element, label });
        } else {
            seen[label] = true;
        }
    }
    for &(lower, upper) in p.covers() {
        if labels[lower] >= labels[upper] {
            violations.push(Violation::NotIncreasing { lower, upper });
        }
    }
    violations.extend((1..=m).filter(|&v| !seen[v]).map(Violation::MissingValue));
    Ok(Validation { violations })
}

impl PackedLabeling {
    pub fn new(p: &Poset, labels: Vec<Label>, m: usize) -> Result<Self> {
        let check = validate(p, &labels, m)?;
        if let Some(v) = check.violations.first() {
            return Err(Error::NotPacked(v.to_string()));
        }
        Ok(PackedLabeling { m, labels })
    }

    /// Wraps labels already known to be m-packed for the poset at hand.
    pub(crate) fn from_parts(labels: Vec<Label>, m: usize) -> Self {
        PackedLabeling { m, labels }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> usize {
        self.labels[x] as usize
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn into_labels(self) -> Vec<Label> {
        self.labels
    }

    /// Re-validates against `p`; used at API boundaries where the labeling
    /// may have been built for a different poset.
    pub fn check_against(&self, p: &Poset) -> Result<()> {
        let check = validate(p, &self.labels, self.m)?;
        match check.violations.first() {
            Some(v) => Err(Error::NotPacked(v.to_string())),
            None => Ok(()),
        }
    }
}

impl fmt::Display for PackedLabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, l) in self.labels.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}

/// Up-set sizes `h_x = #{y : y ≥ x}` of a rooted tree.
pub fn hook_lengths(t: &Poset) -> Result<Vec<usize>> {
    if !t.is_rooted_tree() {
        return Err(Error::NotRootedTree);
    }
    Ok((0..t.len()).map(|x| 1 + t.above_mask(x).count_ones() as usize).collect())
}

/// Number of natural labelings of a rooted tree, `n! / ∏ h_x`.
pub fn hook_count(t: &Poset) -> Result<BigUint> {
    let hooks = hook_lengths(t)?;
    let factorial = (1..=t.len()).fold(BigUint::one(), |acc, k| acc * k);
    let product = hooks.iter().fold(BigUint::one(), |acc, &h| acc * h);
    Ok(factorial / product)
}

/// Number of elements with `L(x) = rk x + 1`.
pub fn min_labeled_count(p: &Poset, labeling: &PackedLabeling) -> Result<usize> {
    let ranks = p.rank_data()?;
    if !ranks.is_ranked {
        return Err(Error::NotRanked);
    }
    if labeling.len() != p.len() {
        return Err(Error::LengthMismatch {
            expected: p.len(),
            actual: labeling.len(),
        });
    }
    Ok(count_minimal(&ranks.ranks, labeling.labels()))
}

pub(crate) fn count_minimal(ranks: &[usize], labels: &[Label]) -> usize {
    ranks.iter().zip(labels).filter(|(&r, &l)| l as usize == r + 1).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn validate_reports_each_failure() {
        let p = families::bottomed_bowtie();
        assert!(validate(&p, &[1, 2, 2, 3, 4], 4).unwrap().is_valid());
        let missing = validate(&p, &[1, 2, 2, 3, 4], 5).unwrap();
        assert_eq!(missing.violations, vec![Violation::MissingValue(5)]);
        let decreasing = validate(&p, &[2, 1, 3, 4, 5], 5).unwrap();
        assert!(decreasing.violations.contains(&Violation::NotIncreasing { lower: 0, upper: 1 }));
        assert!(matches!(
            validate(&p, &[1, 2], 2),
            Err(Error::LengthMismatch { expected: 5, actual: 2 })
        ));
        assert!(matches!(PackedLabeling::new(&p, vec![1, 2, 2, 3, 4], 5), Err(Error::NotPacked(_))));
    }

    #[test]
    fn hooks() {
        assert_eq!(hook_lengths(&families::chain(4).unwrap()).unwrap(), vec![4, 3, 2, 1]);
        assert_eq!(hook_lengths(&families::extended_star(&[1, 1]).unwrap()).unwrap(), vec![3, 1, 1]);
        assert_eq!(hook_count(&families::comb(3).unwrap()).unwrap(), BigUint::from(15u32));
        assert_eq!(hook_count(&families::chain(7).unwrap()).unwrap(), BigUint::one());
        assert!(matches!(hook_lengths(&families::bottomed_bowtie()), Err(Error::NotRootedTree)));
    }

    #[test]
    fn hook_count_is_exact_past_u64() {
        // root hook 26, leaf hooks 1: 26!/26 = 25!
        let star = families::extended_star(&[1; 25]).unwrap();
        let expected = (1..=25u32).fold(BigUint::one(), |acc, k| acc * k);
        assert_eq!(hook_count(&star).unwrap(), expected);
    }

    #[test]
    fn minimally_labeled() {
        let p = families::bottomed_bowtie();
        let l = PackedLabeling::new(&p, vec![1, 2, 2, 3, 4], 4).unwrap();
        assert_eq!(min_labeled_count(&p, &l).unwrap(), 4);
        let image = PackedLabeling::new(&p, vec![1, 2, 2, 4, 3], 4).unwrap();
        assert_eq!(min_labeled_count(&p, &image).unwrap(), 4);
        let chain = families::chain(4).unwrap();
        let forced = PackedLabeling::new(&chain, vec![1, 2, 3, 4], 4).unwrap();
        assert_eq!(min_labeled_count(&chain, &forced).unwrap(), 4);
    }
}
