//! Exhaustive checks of the structural results on orbit sizes.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::report::{Report, Status};
use crate::analysis::{double_falling, homomesy_check, MinimallyLabeled, Statistic};
use crate::dynamics::{
    k_orbits, k_promote_unchecked, lcm_all, orbit_decomposition, pi_map, rank_ideals, restricted_ideals,
    rowmotion, rowmotion_inverse, Operator, Orbit, OrbitDecomposition,
};
use crate::enumerate::{enumerate_packed_with, has_packed, m_in_range};
use crate::error::{Error, Result};
use crate::families;
use crate::ideal::Ideal;
use crate::labeling::{Label, PackedLabeling};
use crate::par::Exec;
use crate::poset::{bounded_union, Poset};

fn subject(p: &Poset) -> String {
    format!("poset with n={} h={}", p.len(), p.height())
}

fn sorted_sizes<S>(d: &OrbitDecomposition<S>) -> Vec<usize> {
    let mut v: Vec<usize> = d.orbits().iter().map(Orbit::len).collect();
    v.sort_unstable();
    v
}

/// Orbit sizes in `k^l` notation.
pub fn multiset_notation(sizes: &[usize]) -> String {
    let mut counts = std::collections::BTreeMap::new();
    for &s in sizes {
        *counts.entry(s).or_insert(0usize) += 1;
    }
    let parts: Vec<String> = counts.iter().map(|(k, l)| format!("{k}^{l}")).collect();
    if parts.is_empty() {
        "∅".into()
    } else {
        parts.join(", ")
    }
}

fn all_sizes_equal(r: &mut Report, name: &str, sizes: &[usize], expected: usize) {
    let ok = sizes.iter().all(|&s| s == expected);
    r.check(
        name,
        ok,
        format!("expected every orbit of size {expected}, got {}", multiset_notation(sizes)),
    );
}

/// `𝓛_m(P)` is nonempty exactly for `h + 1 ≤ m ≤ #P`; tested on `m = 1..=#P + 1`.
pub fn check_existence(p: &Poset) -> Result<Report> {
    let mut r = Report::new("existence", subject(p));
    for m in 1..=p.len() + 1 {
        let nonempty = has_packed(p, m);
        let predicted = m_in_range(p, m);
        r.check(
            format!("m={m}"),
            nonempty == predicted,
            format!("nonempty={nonempty}, predicted={predicted}"),
        );
    }
    Ok(r)
}

/// Removing the trunk `T` (`t` elements) and shifting labels by `t` is an
/// equivariant bijection `𝓛_m(P) → 𝓛_{m−t}(P − T)`.
pub fn check_trunk(p: &Poset, exec: Exec) -> Result<Report> {
    let mut r = Report::new("trunk", subject(p));
    let trunk = p.trunk()?.trunk;
    if trunk.is_empty() {
        r.not_applicable("trunk", "the minimum is covered by more than one element");
        return Ok(r);
    }
    let t = trunk.len();
    let (rest, _) = p.remove_trunk()?;
    let keep: Vec<usize> = (0..p.len()).filter(|x| !trunk.contains(x)).collect();
    let shift = |l: &PackedLabeling| -> PackedLabeling {
        let labels: Vec<Label> = keep.iter().map(|&x| l.labels()[x] - t as Label).collect();
        PackedLabeling::new(&rest, labels, l.m() - t).unwrap_or_else(|_| {
            // invalid shifts are reported below through the forced-label clause
            PackedLabeling::new(&rest, vec![0; rest.len()], l.m() - t).unwrap_or_else(|_| l.clone())
        })
    };
    for m in p.height() + 1..=p.len() {
        let sub_m = m - t;
        let dp = k_orbits(p, m, exec)?;
        let dq = k_orbits(&rest, sub_m, exec)?;
        r.check(
            format!("o_{m}(P) = o_{sub_m}(P−T)"),
            dp.sizes() == dq.sizes(),
            format!("{} vs {}", multiset_notation(&sorted_sizes(&dp)), multiset_notation(&sorted_sizes(&dq))),
        );
        let states: Vec<&PackedLabeling> = dp.orbits().iter().flat_map(Orbit::iter).collect();
        let forced = states
            .iter()
            .all(|l| trunk.iter().enumerate().all(|(i, &x)| l.label(x) == i + 1));
        r.check(format!("m={m}: trunk labels forced to 1..t"), forced, "");
        let mut shifted: Vec<PackedLabeling> = states.iter().map(|l| shift(l)).collect();
        let commutes = states
            .iter()
            .zip(&shifted)
            .all(|(l, s)| shift(&k_promote_unchecked(p, l)) == k_promote_unchecked(&rest, s));
        r.check(format!("m={m}: shift commutes with K-promotion"), commutes, "");
        shifted.sort();
        let target = enumerate_packed_with(&rest, sub_m, exec).into_vec();
        r.check(format!("m={m}: shift is a bijection"), shifted == target, "");
    }
    Ok(r)
}

/// With a branch of `k ≤ m − 2` elements hanging off the minimum, `m − 1`
/// divides the order, and divides every orbit size when `gcd(k, m−1) = 1`.
pub fn check_branch_divisibility(p: &Poset, m: usize, exec: Exec) -> Result<Report> {
    let mut r = Report::new("branch-divisibility", format!("{} m={m}", subject(p)));
    let ks: BTreeSet<usize> = p
        .branches()?
        .iter()
        .map(Vec::len)
        .filter(|&k| m >= 3 && k <= m - 2)
        .collect();
    if !m_in_range(p, m) || ks.is_empty() {
        r.not_applicable("hypotheses", "no labelings or no branch with k ≤ m−2 elements");
        return Ok(r);
    }
    let d = k_orbits(p, m, exec)?;
    let order = d.order();
    let step = m - 1;
    r.check(
        "(m−1) divides the order",
        (&order % BigUint::from(step)).is_zero(),
        format!("order {order}, m−1 = {step}"),
    );
    for k in ks {
        let name = format!("branch k={k}: (m−1) divides every orbit size");
        if k.gcd(&step) == 1 {
            let sizes = sorted_sizes(&d);
            r.check(name, sizes.iter().all(|s| s % step == 0), multiset_notation(&sizes));
        } else {
            r.not_applicable(name, format!("gcd({k}, {step}) > 1"));
        }
    }
    Ok(r)
}

/// At `m = h + 1` on both parts, orbits of `P ∪̂ Q` at `m + 1` come from
/// pairs of orbits: sizes `c` and `d` give `gcd(c, d)` orbits of size
/// `lcm(c, d)`.
pub fn check_bounded_union(p: &Poset, q: &Poset, exec: Exec) -> Result<Report> {
    let mut r = Report::new("bounded-union", format!("{} ∪̂ {}", subject(p), subject(q)));
    if p.minimum().is_none() || q.minimum().is_none() {
        return Err(Error::NoUniqueMinimum);
    }
    if p.height() != q.height() {
        r.not_applicable("heights", format!("h(P)={} ≠ h(Q)={}", p.height(), q.height()));
        return Ok(r);
    }
    let m = p.height() + 1;
    let cs = sorted_sizes(&k_orbits(p, m, exec)?);
    let ds = sorted_sizes(&k_orbits(q, m, exec)?);
    let mut weighted = Vec::new();
    let mut per_pair = Vec::new();
    for &c in &cs {
        for &d in &ds {
            let l = c.lcm(&d);
            per_pair.push(l);
            weighted.extend(std::iter::repeat_n(l, c.gcd(&d)));
        }
    }
    weighted.sort_unstable();
    per_pair.sort_unstable();
    let u = bounded_union(p, q)?;
    let computed = sorted_sizes(&k_orbits(&u, m + 1, exec)?);
    r.check(
        format!("o_{}(P ∪̂ Q) from pairwise lcms", m + 1),
        computed == weighted,
        format!("computed {}, predicted {}", multiset_notation(&computed), multiset_notation(&weighted)),
    );
    let status = if computed == per_pair {
        Status::Pass
    } else if computed == weighted {
        Status::Discrepancy
    } else {
        Status::Fail
    };
    r.push(
        "one lcm per pair of orbits",
        status,
        format!("predicts {}", multiset_notation(&per_pair)),
    );
    Ok(r)
}

fn uniform_height(p: &Poset) -> Result<usize> {
    if !p.rank_data()?.uniform_maximal_chain_length {
        return Err(Error::PreconditionViolated(
            "equivariance needs a ranked poset with all maximal chains of equal length".into(),
        ));
    }
    Ok(p.height())
}

/// For `m = h + 2`: `π ∘ ∂_K = ρ^{-1} ∘ π`, `π` is a bijection onto the
/// ideals other than the rank ideals, and the rank ideals form one
/// rowmotion orbit of size `h + 2`.
pub fn check_equivariance(p: &Poset, exec: Exec) -> Result<Report> {
    let h = uniform_height(p)?;
    let m = h + 2;
    let mut r = Report::new("equivariance", format!("{} m={m}", subject(p)));
    let labelings = enumerate_packed_with(p, m, exec).into_vec();
    let pairs: Vec<Result<(Ideal, bool)>> = exec.map(&labelings, |l| {
        let image = pi_map(p, l)?;
        let lhs = pi_map(p, &k_promote_unchecked(p, l))?;
        Ok((image, lhs == rowmotion_inverse(p, image)?))
    });
    let pairs: Vec<(Ideal, bool)> = pairs.into_iter().collect::<Result<_>>()?;
    let bad = pairs.iter().filter(|(_, ok)| !ok).count();
    r.check(
        "π∘∂_K = ρ^{-1}∘π",
        bad == 0,
        format!("{bad} of {} labelings violate the identity", labelings.len()),
    );
    let mut images: Vec<Ideal> = pairs.iter().map(|(i, _)| *i).collect();
    images.sort_unstable();
    images.dedup();
    let target = restricted_ideals(p)?;
    r.check(
        "π is a bijection onto the non-rank ideals",
        images.len() == labelings.len() && images == target,
        format!("{} labelings, {} distinct images, {} target ideals", labelings.len(), images.len(), target.len()),
    );
    let ranks: BTreeSet<Ideal> = rank_ideals(p)?.into_iter().collect();
    let mut cycle = vec![Ideal::EMPTY];
    loop {
        let next = rowmotion(p, *cycle.last().expect("nonempty"))?;
        if next == Ideal::EMPTY {
            break;
        }
        cycle.push(next);
    }
    let cycle_set: BTreeSet<Ideal> = cycle.iter().copied().collect();
    r.check(
        "rank ideals form one rowmotion orbit of size h+2",
        cycle.len() == h + 2 && cycle_set == ranks,
        format!("orbit of ∅ has size {}", cycle.len()),
    );
    let ideals = p.ideals().len();
    r.check(
        "|𝓛_{h+2}| = |𝓙| − (h+2)",
        labelings.len() + h + 2 == ideals,
        format!("{} labelings, {ideals} ideals", labelings.len()),
    );
    Ok(r)
}

/// On `S(b_1, …, b_k)` the order of `∂_K` is 1 when every `b_i = m − 1`
/// and `m − 1` otherwise.
pub fn check_star_order(branches: &[usize], m: usize, exec: Exec) -> Result<Report> {
    let p = families::extended_star(branches)?;
    let mut r = Report::new("star-order", format!("S{branches:?} m={m}"));
    if !m_in_range(&p, m) {
        r.not_applicable("labelings", "no m-packed labelings");
        return Ok(r);
    }
    let predicted = if branches.iter().all(|&b| b == m - 1) { 1 } else { m - 1 };
    let order = k_orbits(&p, m, exec)?.order();
    r.check("order", order == BigUint::from(predicted), format!("computed {order}, predicted {predicted}"));
    Ok(r)
}

/// Orbit structure of `∂_K` on `S(b^k)` at `m = b + 2`.
pub fn check_star_uniform(b: usize, k: usize, exec: Exec) -> Result<Report> {
    let branches = vec![b; k];
    let p = families::extended_star(&branches)?;
    let m = b + 2;
    let mut r = Report::new("star-uniform", format!("S({b}^{k}) m={m}"));
    let d = k_orbits(&p, m, exec)?;
    let sizes = sorted_sizes(&d);
    let published = (b + 1).pow(k as u32 - 1);
    if d.is_empty() {
        r.not_applicable("(a) every orbit has size b+1", "no labelings");
    } else {
        all_sizes_equal(&mut r, "(a) every orbit has size b+1", &sizes, b + 1);
    }
    r.check(
        "(b) number of orbits is (b+1)^(k−1)",
        d.len() == published,
        format!("{} orbits, predicted {published}", d.len()),
    );
    let rowmotion_orbits = orbit_decomposition(&p, m, Operator::Rowmotion, exec)?.orbit_sizes().len();
    r.check(
        "(b′) (b+1)^(k−1) − 1 labeling orbits, (b+1)^(k−1) rowmotion orbits on all ideals",
        d.len() + 1 == published && rowmotion_orbits == published,
        format!("{} labeling orbits, {rowmotion_orbits} rowmotion orbits", d.len()),
    );
    let st = MinimallyLabeled::new(&p)?;
    let target = b + 1 + k * b * (b + 1) / 2;
    if d.is_empty() {
        r.not_applicable("(c) M(O) = b+1 + k·C(b+1,2)", "no labelings");
        r.not_applicable("M is homomesic", "no labelings");
        return Ok(r);
    }
    let sums: Vec<i64> = d.orbits().iter().map(|o| o.iter().map(|l| st.eval(l)).sum()).collect();
    r.check(
        "(c) M(O) = b+1 + k·C(b+1,2)",
        sums.iter().all(|&s| s == target as i64),
        format!("target {target}, sums {:?}", sums.iter().collect::<BTreeSet<_>>()),
    );
    let report = homomesy_check(&d, &st);
    let expected = BigRational::new(target.into(), (b + 1).into());
    r.check(
        "M is homomesic",
        report.constant.as_ref() == Some(&expected),
        format!(
            "constant {}, expected {expected}",
            report.constant.map_or("none".into(), |c| c.to_string())
        ),
    );
    Ok(r)
}

/// On `𝓛_{2n}(C_n)` every orbit has size `(2n−1)↓↓_{⌈n/2⌉}`.
pub fn check_comb_max(n: usize, exec: Exec) -> Result<Report> {
    let p = families::comb(n)?;
    let mut r = Report::new("comb-max", format!("C_{n} m={}", 2 * n));
    let expected = double_falling(2 * n as i64 - 1, n.div_ceil(2))
        .to_usize()
        .ok_or_else(|| Error::InvalidParameter("comb too large".into()))?;
    let d = k_orbits(&p, 2 * n, exec)?;
    all_sizes_equal(&mut r, "every orbit has size (2n−1)↓↓⌈n/2⌉", &sorted_sizes(&d), expected);
    Ok(r)
}

fn lcm_upto(n: usize) -> usize {
    (1..=n).fold(1, |acc: usize, k| acc.lcm(&k))
}

/// On `𝓛_{n+1}(C_n)` every orbit has size `lcm(1, …, n)`.
pub fn check_comb_min(n: usize, exec: Exec) -> Result<Report> {
    let p = families::comb(n)?;
    let mut r = Report::new("comb-min", format!("C_{n} m={}", n + 1));
    let d = k_orbits(&p, n + 1, exec)?;
    all_sizes_equal(&mut r, "every orbit has size lcm(1..n)", &sorted_sizes(&d), lcm_upto(n));
    Ok(r)
}

/// On `𝓛_{n+2}(Z_n)` every orbit has size `lcm(1, …, n)`.
pub fn check_zipper_min(n: usize, exec: Exec) -> Result<Report> {
    let p = families::zipper(n)?;
    let mut r = Report::new("zipper-min", format!("Z_{n} m={}", n + 2));
    let d = k_orbits(&p, n + 2, exec)?;
    all_sizes_equal(&mut r, "every orbit has size lcm(1..n)", &sorted_sizes(&d), lcm_upto(n));
    Ok(r)
}

/// Predicted orbit sizes of `∂_K` on `T(c)` for `m ∈ {n−2, n−1, n}`.
pub fn three_leaf_prediction(c: usize, m: usize) -> Option<Vec<usize>> {
    let n = c + 4;
    let s = m - 1;
    let even = c.is_multiple_of(2);
    if m == n - 2 {
        Some(vec![s])
    } else if m == n - 1 {
        Some(if even { vec![s; 3] } else { vec![s, 2 * s] })
    } else if m == n {
        Some(if even { vec![s; 2] } else { vec![2 * s] })
    } else {
        None
    }
}

pub fn check_three_leaf(c: usize, exec: Exec) -> Result<Report> {
    let p = families::three_leaf_tree(c)?;
    let n = p.len();
    let mut r = Report::new("three-leaf", format!("T({c})"));
    for (case, m) in [("(a)", n - 2), ("(b)", n - 1), ("(c)", n)] {
        let predicted = three_leaf_prediction(c, m).expect("m in the covered range");
        let computed = sorted_sizes(&k_orbits(&p, m, exec)?);
        r.check(
            format!("{case} m={m}"),
            computed == predicted,
            format!("computed {}, predicted {}", multiset_notation(&computed), multiset_notation(&predicted)),
        );
    }
    Ok(r)
}

/// Orbit order of `∂_K` as an lcm, kept for callers that only have sizes.
pub fn order_from_sizes(sizes: &[usize]) -> BigUint {
    lcm_all(sizes.iter().copied())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn notation() {
        assert_eq!(multiset_notation(&[15, 40, 15, 60]), "15^2, 40^1, 60^1");
        assert_eq!(multiset_notation(&[]), "∅");
    }

    #[test]
    fn existence_on_bowtie() {
        assert!(check_existence(&families::bottomed_bowtie()).unwrap().passed());
    }

    #[test]
    fn trunk_of_tailed_chain() {
        // 0 ⋖ 1 ⋖ {2, 3}: trunk {0, 1}
        let p = Poset::new(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        let r = check_trunk(&p, Exec::Sequential).unwrap();
        assert!(r.passed(), "{r}");
        let r = check_trunk(&families::comb(3).unwrap(), Exec::Sequential).unwrap();
        assert_eq!(r.clauses[0].status, Status::NotApplicable);
    }

    #[test]
    fn bounded_union_small_cases() {
        let c = families::chain(2).unwrap();
        let r = check_bounded_union(&c, &c, Exec::Sequential).unwrap();
        assert!(r.clauses.iter().all(|c| c.status == Status::Pass), "{r}");
        let c1 = families::comb(1).unwrap();
        let r = check_bounded_union(&c1, &c1, Exec::Sequential).unwrap();
        assert!(r.clauses.iter().all(|c| c.status == Status::Pass), "{r}");
        let comb = families::comb(2).unwrap();
        let r = check_bounded_union(&comb, &comb, Exec::Sequential).unwrap();
        assert_eq!(r.clauses[0].status, Status::Pass, "{r}");
        assert_eq!(r.clauses[1].status, Status::Discrepancy, "{r}");
    }

    #[test]
    fn star_checks() {
        assert!(check_star_order(&[3, 3], 4, Exec::Sequential).unwrap().passed());
        assert!(check_star_order(&[2, 3], 5, Exec::Sequential).unwrap().passed());
        assert!(check_star_order(&[1], 2, Exec::Sequential).unwrap().passed());
        let r = check_star_uniform(2, 2, Exec::Sequential).unwrap();
        let failing: Vec<&str> = r.failures().map(|c| c.name.as_str()).collect();
        assert_eq!(failing, vec!["(b) number of orbits is (b+1)^(k−1)"]);
    }

    #[test]
    fn three_leaf_table() {
        assert_eq!(three_leaf_prediction(2, 5), Some(vec![4, 4, 4]));
        assert_eq!(three_leaf_prediction(3, 7), Some(vec![12]));
        assert_eq!(three_leaf_prediction(2, 4), Some(vec![3]));
        assert!(check_three_leaf(2, Exec::Sequential).unwrap().passed());
    }

    #[test]
    fn equivariance_on_bowtie() {
        let r = check_equivariance(&families::bottomed_bowtie(), Exec::Sequential).unwrap();
        assert!(r.passed(), "{r}");
        assert!(check_equivariance(&families::three_leaf_tree(1).unwrap(), Exec::Sequential).is_err());
    }
}
