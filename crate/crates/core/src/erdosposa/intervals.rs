//! Choosing disjoint subpaths of a path from several families.
//!
//! Subpaths of the path `1..=p_len` are inclusive intervals `(a, b)`. Given
//! families `P_1, .., P_m` and quotas `x_1, .., x_m`, where every family has
//! `k = x_1 + .. + x_m` pairwise disjoint members, we pick `x_i` members of
//! each `P_i` so that all picks are pairwise disjoint.
//!
//! The greedy sweeps left to right and always takes, among families with an
//! unmet quota, the interval starting after the last pick with the smallest
//! right end. If `e_i(z)` counts the disjoint members of `P_i` lying right of
//! `z`, every step lowers the total remaining quota `R` by one and each
//! `e_i(z)` by at most one, so `e_i(z) >= R` holds throughout and the sweep
//! never gets stuck.

use crate::error::ErdosPosaError;

pub type Interval = (usize, usize);

/// Largest number of pairwise disjoint intervals of `family` starting after
/// position `after`, by the earliest-end greedy.
pub fn max_disjoint(family: &[Interval], after: usize) -> usize {
    let mut sorted: Vec<Interval> = family.iter().copied().filter(|&(a, _)| a > after).collect();
    sorted.sort_by_key(|&(a, b)| (b, a));
    let mut last = after;
    let mut count = 0;
    for (a, b) in sorted {
        if a > last {
            count += 1;
            last = b;
        }
    }
    count
}

/// Picks `x[i]` intervals of `families[i]` for every `i`, all pairwise
/// disjoint. Ties go to the smaller family index, then the smaller start.
pub fn select_disjoint_subpaths(
    p_len: usize,
    families: &[Vec<Interval>],
    x: &[usize],
) -> Result<Vec<Vec<Interval>>, ErdosPosaError> {
    if families.len() != x.len() {
        return Err(ErdosPosaError::Precondition(format!("{} families but {} quotas", families.len(), x.len())));
    }
    for (i, fam) in families.iter().enumerate() {
        if let Some(&(a, b)) = fam.iter().find(|&&(a, b)| a == 0 || a > b || b > p_len) {
            return Err(ErdosPosaError::Precondition(format!(
                "interval ({a}, {b}) of family {i} is not a subpath of 1..={p_len}"
            )));
        }
    }
    let k: usize = x.iter().sum();
    for (i, fam) in families.iter().enumerate() {
        let have = max_disjoint(fam, 0);
        if have < k {
            return Err(ErdosPosaError::Hypothesis(format!("family {i} has only {have} disjoint members, {k} needed")));
        }
    }
    let mut left: Vec<usize> = x.to_vec();
    let mut out: Vec<Vec<Interval>> = vec![Vec::new(); families.len()];
    let mut last = 0;
    while left.iter().any(|&c| c > 0) {
        let pick = families
            .iter()
            .enumerate()
            .filter(|(i, _)| left[*i] > 0)
            .flat_map(|(i, fam)| fam.iter().filter(|&&(a, _)| a > last).map(move |&(a, b)| (b, i, a)))
            .min();
        let Some((b, i, a)) = pick else {
            return Err(ErdosPosaError::Hypothesis("the sweep ran out of intervals".into()));
        };
        out[i].push((a, b));
        left[i] -= 1;
        last = b;
    }
    Ok(out)
}
