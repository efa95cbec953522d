//! Orbit decomposition of a bijection on a finite sorted state set.

use std::collections::BTreeMap;
use std::fmt::Debug;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::par::Exec;

/// One cycle, starting at its smallest state; `states[i + 1]` is the image
/// of `states[i]`, cyclically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit<S> {
    states: Vec<S>,
}

impl<S> Orbit<S> {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn representative(&self) -> &S {
        &self.states[0]
    }

    pub fn states(&self) -> &[S] {
        &self.states
    }

    pub fn iter(&self) -> std::slice::Iter<'_, S> {
        self.states.iter()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDecomposition<S> {
    orbits: Vec<Orbit<S>>,
}

impl<S> OrbitDecomposition<S> {
    /// Orbits sorted by size, then by representative.
    pub fn orbits(&self) -> &[Orbit<S>] {
        &self.orbits
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn state_count(&self) -> usize {
        self.orbits.iter().map(Orbit::len).sum()
    }

    /// Orbit size → number of orbits of that size.
    pub fn sizes(&self) -> BTreeMap<usize, usize> {
        let mut sizes = BTreeMap::new();
        for o in &self.orbits {
            *sizes.entry(o.len()).or_insert(0) += 1;
        }
        sizes
    }

    /// The order of the action: lcm of the orbit sizes (1 for no states).
    pub fn order(&self) -> BigUint {
        lcm_all(self.orbits.iter().map(Orbit::len))
    }
}

pub fn lcm_all(sizes: impl IntoIterator<Item = usize>) -> BigUint {
    sizes.into_iter().fold(BigUint::one(), |acc, s| acc.lcm(&BigUint::from(s)))
}

/// Splits `states` into cycles of `f`.
///
/// `states` must be strictly increasing and `f` a permutation of them; a
/// missing image or a collision is reported as [`Error::NotABijection`].
/// Images are computed through `exec`, the cycle walk itself is sequential
/// so the result does not depend on the execution mode.
pub fn decompose<S, F>(states: Vec<S>, f: F, exec: Exec) -> Result<OrbitDecomposition<S>>
where
    S: Ord + Clone + Debug + Send + Sync,
    F: Fn(&S) -> S + Sync + Send,
{
    if states.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParameter("state list must be strictly increasing".into()));
    }
    let next: Vec<Option<usize>> = exec.map(&states, |s| states.binary_search(&f(s)).ok());
    let mut hit = vec![false; states.len()];
    let mut succ = Vec::with_capacity(states.len());
    for (i, image) in next.into_iter().enumerate() {
        let j = image.ok_or_else(|| {
            Error::NotABijection(format!("image of {:?} is outside the state set", states[i]))
        })?;
        if std::mem::replace(&mut hit[j], true) {
            return Err(Error::NotABijection(format!("{:?} has two preimages", states[j])));
        }
        succ.push(j);
    }
    let mut seen = vec![false; states.len()];
    let mut orbits = Vec::new();
    for start in 0..states.len() {
        if seen[start] {
            continue;
        }
        // the first unseen index of a cycle is its smallest member
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(states[i].clone());
            i = succ[i];
        }
        orbits.push(Orbit { states: cycle });
    }
    orbits.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.states[0].cmp(&b.states[0])));
    Ok(OrbitDecomposition { orbits })
}

/// The cycle through `start`, rotated to begin at its smallest member.
/// Gives up after `limit` steps.
pub fn orbit_of<S, F>(start: &S, f: F, limit: usize) -> Result<Vec<S>>
where
    S: Ord + Clone,
    F: Fn(&S) -> Result<S>,
{
    let mut cycle = vec![start.clone()];
    loop {
        let next = f(cycle.last().expect("nonempty"))?;
        if next == *start {
            break;
        }
        if cycle.len() >= limit {
            return Err(Error::NotABijection("orbit did not close".into()));
        }
        cycle.push(next);
    }
    let min = (0..cycle.len()).min_by(|&a, &b| cycle[a].cmp(&cycle[b])).unwrap_or(0);
    cycle.rotate_left(min);
    Ok(cycle)
}
