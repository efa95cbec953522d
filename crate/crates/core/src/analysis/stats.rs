//! Orbit statistics and the homomesy / homometry checks.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::dynamics::{Orbit, OrbitDecomposition};
use crate::error::{Error, Result};
use crate::labeling::{count_minimal, PackedLabeling};
use crate::par::Exec;
use crate::poset::Poset;

/// An integer-valued function on states.
pub trait Statistic<S>: Sync {
    fn eval(&self, state: &S) -> i64;
}

impl<S, F> Statistic<S> for F
where
    F: Fn(&S) -> i64 + Sync,
{
    fn eval(&self, state: &S) -> i64 {
        self(state)
    }
}

/// Number of elements with `L(x) = rk x + 1`.
#[derive(Clone, Debug)]
pub struct MinimallyLabeled {
    ranks: Vec<usize>,
}

impl MinimallyLabeled {
    pub fn new(p: &Poset) -> Result<Self> {
        let data = p.rank_data()?;
        if !data.is_ranked {
            return Err(Error::NotRanked);
        }
        Ok(MinimallyLabeled { ranks: data.ranks })
    }
}

impl Statistic<PackedLabeling> for MinimallyLabeled {
    fn eval(&self, l: &PackedLabeling) -> i64 {
        count_minimal(&self.ranks, l.labels()) as i64
    }
}

/// The label of one element.
#[derive(Clone, Copy, Debug)]
pub struct LabelOf(pub usize);

impl Statistic<PackedLabeling> for LabelOf {
    fn eval(&self, l: &PackedLabeling) -> i64 {
        l.label(self.0) as i64
    }
}

#[derive(Clone, Copy, Debug)]
pub struct LabelSum;

impl Statistic<PackedLabeling> for LabelSum {
    fn eval(&self, l: &PackedLabeling) -> i64 {
        l.labels().iter().map(|&v| v as i64).sum()
    }
}

pub fn statistic_sum<S>(orbit: &Orbit<S>, st: &dyn Statistic<S>) -> BigInt {
    orbit.iter().map(|s| BigInt::from(st.eval(s))).sum()
}

pub fn orbit_average<S>(orbit: &Orbit<S>, st: &dyn Statistic<S>) -> BigRational {
    BigRational::new(statistic_sum(orbit, st), BigInt::from(orbit.len()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitStat {
    pub size: usize,
    #[serde(serialize_with = "as_string")]
    pub sum: BigInt,
    #[serde(serialize_with = "as_string")]
    pub average: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomomesyReport {
    pub orbits: Vec<OrbitStat>,
    /// The common average, when all orbit averages agree.
    #[serde(serialize_with = "opt_as_string")]
    pub constant: Option<BigRational>,
}

impl HomomesyReport {
    pub fn is_homomesic(&self) -> bool {
        self.constant.is_some()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomometryReport {
    pub orbits: Vec<OrbitStat>,
    /// Orbit sizes whose orbits do not all share one statistic sum.
    pub conflicting_sizes: Vec<usize>,
}

impl HomometryReport {
    pub fn is_homometric(&self) -> bool {
        self.conflicting_sizes.is_empty()
    }
}

fn as_string<T: ToString, Ser: serde::Serializer>(v: &T, s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
    s.serialize_str(&v.to_string())
}

fn opt_as_string<T: ToString, Ser: serde::Serializer>(
    v: &Option<T>,
    s: Ser,
) -> std::result::Result<Ser::Ok, Ser::Error> {
    match v {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}

fn orbit_stats<S: Sync>(d: &OrbitDecomposition<S>, st: &dyn Statistic<S>, exec: Exec) -> Vec<OrbitStat> {
    exec.map(d.orbits(), |o| {
        let sum = statistic_sum(o, st);
        OrbitStat {
            size: o.len(),
            average: BigRational::new(sum.clone(), BigInt::from(o.len())),
            sum,
        }
    })
}

/// Exact per-orbit averages; homomesic iff they all coincide.
pub fn homomesy_check<S: Sync>(d: &OrbitDecomposition<S>, st: &dyn Statistic<S>) -> HomomesyReport {
    let orbits = orbit_stats(d, st, Exec::default());
    let constant = match orbits.split_first() {
        Some((first, rest)) if rest.iter().all(|o| o.average == first.average) => {
            Some(first.average.clone())
        }
        Some(_) => None,
        // vacuous on an empty state set
        None => Some(BigRational::zero()),
    };
    HomomesyReport { orbits, constant }
}

/// Homometric iff orbits of equal size have equal statistic sums.
pub fn homometry_check<S: Sync>(d: &OrbitDecomposition<S>, st: &dyn Statistic<S>) -> HomometryReport {
    let orbits = orbit_stats(d, st, Exec::default());
    let mut by_size: BTreeMap<usize, Vec<&BigInt>> = BTreeMap::new();
    for o in &orbits {
        by_size.entry(o.size).or_default().push(&o.sum);
    }
    let conflicting_sizes = by_size
        .into_iter()
        .filter(|(_, sums)| sums.iter().any(|s| *s != sums[0]))
        .map(|(size, _)| size)
        .collect();
    HomometryReport { orbits, conflicting_sizes }
}
