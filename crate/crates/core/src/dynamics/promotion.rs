//! Promotion, K-promotion and the labeling toggles `s_i`.

use crate::error::{Error, Result};
use crate::labeling::{Label, PackedLabeling};
use crate::poset::{bit, bits, Poset};

/// Schützenberger promotion on a natural labeling: delete the 1, slide the
/// smallest label among the covers of the gap down into it until the gap is
/// maximal, decrement every label and put `n` in the gap.
pub fn promote_natural(p: &Poset, l: &PackedLabeling) -> Result<PackedLabeling> {
    l.check_against(p)?;
    if l.m() != p.len() {
        return Err(Error::NotNatural);
    }
    let mut labels = l.labels().to_vec();
    let mut gap = labels.iter().position(|&v| v == 1).ok_or(Error::NotNatural)?;
    while let Some(&next) = p.upper_covers(gap).iter().min_by_key(|&&y| labels[y]) {
        labels[gap] = labels[next];
        gap = next;
    }
    for v in labels.iter_mut() {
        *v -= 1;
    }
    labels[gap] = p.len() as Label;
    Ok(PackedLabeling::from_parts(labels, l.m()))
}

/// K-promotion `∂_K`.
pub fn k_promote(p: &Poset, l: &PackedLabeling) -> Result<PackedLabeling> {
    l.check_against(p)?;
    Ok(k_promote_unchecked(p, l))
}

/// K-promotion without re-validating the input.
///
/// A single ascending sweep: `hole` is the current set of unlabeled
/// elements. At value `v` every element labeled `v` that covers a hole moves
/// its label down into all the holes it covers and becomes a hole itself.
pub fn k_promote_unchecked(p: &Poset, l: &PackedLabeling) -> PackedLabeling {
    let m = l.m();
    let labels = l.labels();
    let by_label = masks_by_label(labels, m);
    let mut out: Vec<Label> = labels.iter().map(|&v| v.saturating_sub(1)).collect();
    let mut hole = by_label[1];
    for (v, &mask) in by_label.iter().enumerate().take(m + 1).skip(2) {
        let mut movers = 0u64;
        let mut filled = 0u64;
        for y in bits(mask) {
            let below = p.lower_cover_mask(y) & hole;
            if below != 0 {
                movers |= bit(y);
                filled |= below;
            }
        }
        // filled elements now carry v, i.e. v − 1 after the final decrement
        for x in bits(filled) {
            out[x] = (v - 1) as Label;
        }
        hole = (hole & !filled) | movers;
    }
    for x in bits(hole) {
        out[x] = m as Label;
    }
    PackedLabeling::from_parts(out, m)
}

/// `∂_K^{-1}`: the mirror sweep, descending from `m`.
pub fn k_promote_inverse(p: &Poset, l: &PackedLabeling) -> Result<PackedLabeling> {
    l.check_against(p)?;
    Ok(k_promote_inverse_unchecked(p, l))
}

pub fn k_promote_inverse_unchecked(p: &Poset, l: &PackedLabeling) -> PackedLabeling {
    let m = l.m();
    let labels = l.labels();
    let by_label = masks_by_label(labels, m);
    let mut out: Vec<Label> = labels.iter().map(|&v| v + 1).collect();
    let mut hole = by_label[m];
    for w in (1..m).rev() {
        let mut movers = 0u64;
        let mut filled = 0u64;
        for x in bits(by_label[w]) {
            let above = p.upper_cover_mask(x) & hole;
            if above != 0 {
                movers |= bit(x);
                filled |= above;
            }
        }
        for y in bits(filled) {
            out[y] = (w + 1) as Label;
        }
        hole = (hole & !filled) | movers;
    }
    for x in bits(hole) {
        out[x] = 1;
    }
    PackedLabeling::from_parts(out, m)
}

fn masks_by_label(labels: &[Label], m: usize) -> Vec<u64> {
    let mut by_label = vec![0u64; m + 2];
    for (x, &v) in labels.iter().enumerate() {
        by_label[v as usize] |= bit(x);
    }
    by_label
}

/// The toggle `s_i` for `1 ≤ i ≤ m − 1`.
///
/// Every element is tested against the original labeling: a label `i`
/// becomes `i + 1` unless an upper cover is labeled `i + 1`, and a label
/// `i + 1` becomes `i` unless a lower cover is labeled `i`.
pub fn toggle_labeling(p: &Poset, l: &PackedLabeling, i: usize) -> Result<PackedLabeling> {
    let m = l.m();
    if i == 0 || i >= m {
        return Err(Error::ToggleOutOfRange { i, max: m.saturating_sub(1) });
    }
    l.check_against(p)?;
    Ok(toggle_unchecked(p, l, i))
}

pub(crate) fn toggle_unchecked(p: &Poset, l: &PackedLabeling, i: usize) -> PackedLabeling {
    let labels = l.labels();
    let (lo, hi) = (i as Label, (i + 1) as Label);
    let mut out = labels.to_vec();
    for x in 0..labels.len() {
        if labels[x] == lo {
            if p.upper_covers(x).iter().all(|&y| labels[y] != hi) {
                out[x] = hi;
            }
        } else if labels[x] == hi && p.lower_covers(x).iter().all(|&y| labels[y] != lo) {
            out[x] = lo;
        }
    }
    PackedLabeling::from_parts(out, l.m())
}

/// `s_{m−1} ⋯ s_2 s_1`, applying `s_1` first.
pub fn k_promote_via_toggles(p: &Poset, l: &PackedLabeling) -> Result<PackedLabeling> {
    l.check_against(p)?;
    let mut cur = l.clone();
    for i in 1..l.m() {
        cur = toggle_unchecked(p, &cur, i);
    }
    Ok(cur)
}
