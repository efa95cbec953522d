//! Dynamical operators on labelings and ideals, and their orbit structure.

mod orbit;
mod promotion;
mod rowmotion;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

pub use orbit::{decompose, lcm_all, orbit_of, Orbit, OrbitDecomposition};
pub use promotion::{
    k_promote, k_promote_inverse, k_promote_inverse_unchecked, k_promote_unchecked,
    k_promote_via_toggles, promote_natural, toggle_labeling,
};
pub use rowmotion::{
    pi_map, rank_ideals, restricted_ideals, rowmotion, rowmotion_inverse,
    rowmotion_inverse_via_toggles, rowmotion_via_toggles, toggle_ideal,
};

use crate::enumerate::enumerate_packed_with;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::labeling::PackedLabeling;
use crate::par::Exec;
use crate::poset::Poset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Operator {
    Kpromotion,
    KpromotionInverse,
    Promotion,
    Rowmotion,
    RowmotionInverse,
}

impl Operator {
    pub const ALL: [Operator; 5] = [
        Operator::Kpromotion,
        Operator::KpromotionInverse,
        Operator::Promotion,
        Operator::Rowmotion,
        Operator::RowmotionInverse,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Operator::Kpromotion => "kpromotion",
            Operator::KpromotionInverse => "kpromotion-inverse",
            Operator::Promotion => "promotion",
            Operator::Rowmotion => "rowmotion",
            Operator::RowmotionInverse => "rowmotion-inverse",
        }
    }

    /// Whether the operator acts on ideals rather than labelings.
    pub fn acts_on_ideals(self) -> bool {
        matches!(self, Operator::Rowmotion | Operator::RowmotionInverse)
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Operator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Operator::ALL
            .into_iter()
            .find(|op| op.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown operator '{s}'")))
    }
}

/// Orbits of one operator, over labelings or over ideals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposition {
    Labelings(OrbitDecomposition<PackedLabeling>),
    Ideals(OrbitDecomposition<Ideal>),
}

impl Decomposition {
    pub fn sizes(&self) -> std::collections::BTreeMap<usize, usize> {
        match self {
            Decomposition::Labelings(d) => d.sizes(),
            Decomposition::Ideals(d) => d.sizes(),
        }
    }

    pub fn order(&self) -> BigUint {
        match self {
            Decomposition::Labelings(d) => d.order(),
            Decomposition::Ideals(d) => d.order(),
        }
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        match self {
            Decomposition::Labelings(d) => d.orbits().iter().map(Orbit::len).collect(),
            Decomposition::Ideals(d) => d.orbits().iter().map(Orbit::len).collect(),
        }
    }

    pub fn state_count(&self) -> usize {
        match self {
            Decomposition::Labelings(d) => d.state_count(),
            Decomposition::Ideals(d) => d.state_count(),
        }
    }

    pub fn as_labelings(&self) -> Option<&OrbitDecomposition<PackedLabeling>> {
        match self {
            Decomposition::Labelings(d) => Some(d),
            Decomposition::Ideals(_) => None,
        }
    }
}

/// `∂_K` on `𝓛_m(P)`.
pub fn k_orbits(p: &Poset, m: usize, exec: Exec) -> Result<OrbitDecomposition<PackedLabeling>> {
    let states = enumerate_packed_with(p, m, exec).into_vec();
    decompose(states, |l| k_promote_unchecked(p, l), exec)
}

/// Orbits of `op`. Labeling operators act on `𝓛_m(P)` (`promotion` needs
/// `m = #P`); rowmotion acts on all of `𝓙(P)` and ignores `m`.
pub fn orbit_decomposition(p: &Poset, m: usize, op: Operator, exec: Exec) -> Result<Decomposition> {
    Ok(match op {
        Operator::Kpromotion => Decomposition::Labelings(k_orbits(p, m, exec)?),
        Operator::KpromotionInverse => {
            let states = enumerate_packed_with(p, m, exec).into_vec();
            Decomposition::Labelings(decompose(states, |l| k_promote_inverse_unchecked(p, l), exec)?)
        }
        Operator::Promotion => {
            if m != p.len() {
                return Err(Error::InvalidParameter(format!(
                    "promotion acts on natural labelings, m must be {}",
                    p.len()
                )));
            }
            let states = enumerate_packed_with(p, m, exec).into_vec();
            let f = |l: &PackedLabeling| promote_natural(p, l).expect("natural labeling");
            Decomposition::Labelings(decompose(states, f, exec)?)
        }
        Operator::Rowmotion => {
            let f = |i: &Ideal| rowmotion::rowmotion_unchecked(p, *i);
            Decomposition::Ideals(decompose(p.ideals(), f, exec)?)
        }
        Operator::RowmotionInverse => {
            let f = |i: &Ideal| rowmotion::rowmotion_inverse_unchecked(p, *i);
            Decomposition::Ideals(decompose(p.ideals(), f, exec)?)
        }
    })
}

pub fn order_of(p: &Poset, m: usize, op: Operator, exec: Exec) -> Result<BigUint> {
    Ok(orbit_decomposition(p, m, op, exec)?.order())
}

/// The orbit of one labeling under a labeling operator.
pub fn orbit(p: &Poset, l: &PackedLabeling, op: Operator) -> Result<Vec<PackedLabeling>> {
    l.check_against(p)?;
    let step: fn(&Poset, &PackedLabeling) -> Result<PackedLabeling> = match op {
        Operator::Kpromotion => k_promote,
        Operator::KpromotionInverse => k_promote_inverse,
        Operator::Promotion => promote_natural,
        Operator::Rowmotion | Operator::RowmotionInverse => {
            return Err(Error::InvalidParameter(format!("{op} acts on ideals")))
        }
    };
    orbit_of(l, |x| step(p, x), usize::MAX)
}
