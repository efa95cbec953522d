//! Ideal toggles, rowmotion and the map from labelings to ideals.

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::labeling::{count_minimal, PackedLabeling};
use crate::poset::{bit, bits, Poset};

fn require_ideal(p: &Poset, i: Ideal) -> Result<()> {
    if i.is_ideal_of(p) {
        Ok(())
    } else {
        Err(Error::NotAnIdeal)
    }
}

/// `t_x`: flips membership of `x` when the result is still an ideal.
pub fn toggle_ideal(p: &Poset, i: Ideal, x: usize) -> Result<Ideal> {
    if x >= p.len() {
        return Err(Error::IndexOutOfRange { index: x, n: p.len() });
    }
    require_ideal(p, i)?;
    Ok(toggle_unchecked(p, i, x))
}

fn toggle_unchecked(p: &Poset, i: Ideal, x: usize) -> Ideal {
    let mask = i.mask();
    let flipped = if mask & bit(x) != 0 {
        if p.upper_cover_mask(x) & mask == 0 {
            mask & !bit(x)
        } else {
            mask
        }
    } else if p.lower_cover_mask(x) & !mask == 0 {
        mask | bit(x)
    } else {
        mask
    };
    Ideal::from_mask_unchecked(flipped)
}

/// `ρ(I)`: the ideal generated by the minimal elements of `P − I`.
pub fn rowmotion(p: &Poset, i: Ideal) -> Result<Ideal> {
    require_ideal(p, i)?;
    Ok(rowmotion_unchecked(p, i))
}

pub(crate) fn rowmotion_unchecked(p: &Poset, i: Ideal) -> Ideal {
    let mask = i.mask();
    let minimal = bits(p.full_mask() & !mask)
        .filter(|&x| p.lower_cover_mask(x) & !mask == 0)
        .fold(0u64, |m, x| m | bit(x));
    Ideal::generated_by(p, minimal)
}

/// `ρ^{-1}(I)`: the complement of the filter generated by the maximal
/// elements of `I`.
pub fn rowmotion_inverse(p: &Poset, i: Ideal) -> Result<Ideal> {
    require_ideal(p, i)?;
    Ok(rowmotion_inverse_unchecked(p, i))
}

pub(crate) fn rowmotion_inverse_unchecked(p: &Poset, i: Ideal) -> Ideal {
    let mask = i.mask();
    let filter = bits(mask)
        .filter(|&x| p.upper_cover_mask(x) & mask == 0)
        .fold(0u64, |m, x| m | bit(x) | p.above_mask(x));
    Ideal::from_mask_unchecked(p.full_mask() & !filter)
}

fn check_extension(p: &Poset, ext: &[usize]) -> Result<()> {
    if p.is_linear_extension(ext) {
        Ok(())
    } else {
        Err(Error::InvalidParameter("not a linear extension".into()))
    }
}

/// `ρ = t_{x_1} ⋯ t_{x_n}` for a linear extension `x_1, …, x_n`: toggles
/// are applied from the top of the extension down.
pub fn rowmotion_via_toggles(p: &Poset, i: Ideal, ext: &[usize]) -> Result<Ideal> {
    require_ideal(p, i)?;
    check_extension(p, ext)?;
    Ok(ext.iter().rev().fold(i, |acc, &x| toggle_unchecked(p, acc, x)))
}

/// `ρ^{-1} = t_{x_n} ⋯ t_{x_1}`: toggles applied bottom-up.
pub fn rowmotion_inverse_via_toggles(p: &Poset, i: Ideal, ext: &[usize]) -> Result<Ideal> {
    require_ideal(p, i)?;
    check_extension(p, ext)?;
    Ok(ext.iter().fold(i, |acc, &x| toggle_unchecked(p, acc, x)))
}

/// Ranks, provided every maximal chain of `p` has the same length.
fn uniform_ranks(p: &Poset) -> Result<Vec<usize>> {
    let data = p.rank_data()?;
    if !data.uniform_maximal_chain_length {
        return Err(Error::PreconditionViolated(
            "poset must be ranked with all maximal chains of equal length".into(),
        ));
    }
    Ok(data.ranks)
}

/// `I(L) = {x : L(x) = rk x + 1}`, defined for `m = h(P) + 2`.
pub fn pi_map(p: &Poset, l: &PackedLabeling) -> Result<Ideal> {
    let ranks = uniform_ranks(p)?;
    if l.m() != p.height() + 2 {
        return Err(Error::PreconditionViolated(format!(
            "m must equal h + 2 = {}, got {}",
            p.height() + 2,
            l.m()
        )));
    }
    l.check_against(p)?;
    let mask = ranks
        .iter()
        .zip(l.labels())
        .enumerate()
        .filter(|(_, (&r, &v))| v as usize == r + 1)
        .fold(0u64, |m, (x, _)| m | bit(x));
    debug_assert_eq!(mask.count_ones() as usize, count_minimal(&ranks, l.labels()));
    Ideal::from_mask(p, mask)
}

/// The `h + 2` ideals `{x : rk x ≤ k}` for `k = −1, 0, …, h`, smallest first.
pub fn rank_ideals(p: &Poset) -> Result<Vec<Ideal>> {
    let ranks = uniform_ranks(p)?;
    let mut out = vec![Ideal::EMPTY];
    for k in 0..=p.height() {
        let mask = (0..p.len()).filter(|&x| ranks[x] <= k).fold(0u64, |m, x| m | bit(x));
        out.push(Ideal::from_mask_unchecked(mask));
    }
    Ok(out)
}

/// All ideals except the rank ideals, in canonical order.
pub fn restricted_ideals(p: &Poset) -> Result<Vec<Ideal>> {
    let excluded = rank_ideals(p)?;
    Ok(p.ideals().into_iter().filter(|i| !excluded.contains(i)).collect())
}
