//! Transversals for a single tree of size `O(k log k)`.
//!
//! With `k = ν_T(G)`, the graph has pathwidth at most `t(k+1) - 2`. Along a
//! nice decomposition `B_1, .., B_p` let `ℓ_i` and `r_i` be the packing numbers
//! of the parts strictly left and strictly right of `B_i`. The left values
//! grow by at most one per bag, so some bag splits the packing roughly in
//! half; that bag goes into the transversal and both sides are handled
//! recursively. Packing numbers come from the exhaustive oracle.

use crate::error::ErdosPosaError;
use crate::graph::{mask_of, set_of, Graph};
use crate::pathwidth::{make_nice, PathwidthSolver};

use super::family::{Family, Transversal};
use super::oracle::{ContainmentTable, Oracle};

/// `3(t+1)k·log2((t+1)k) - t`, the size guarantee for `ν_T(G) = k >= 1`.
pub fn klogk_bound(t: usize, k: usize) -> f64 {
    let a = ((t + 1) * k) as f64;
    3.0 * a * a.log2() - t as f64
}

/// A `{T}`-transversal of `g` within [`klogk_bound`], empty when `g` has no
/// `T` minor.
pub fn klogk_transversal(tree: &Graph, g: &Graph) -> Result<Transversal, ErdosPosaError> {
    klogk_transversal_with(&Oracle::default(), &PathwidthSolver::default(), tree, g)
}

pub fn klogk_transversal_with(
    oracle: &Oracle,
    solver: &PathwidthSolver,
    tree: &Graph,
    g: &Graph,
) -> Result<Transversal, ErdosPosaError> {
    if !tree.is_tree() {
        return Err(ErdosPosaError::Precondition("the pattern must be a tree".into()));
    }
    let fam = Family::single(tree.clone())?;
    let mut table = oracle.table(&fam, g)?;
    let full = table.full();
    let x = split(&mut table, solver, g, full)?;
    Ok(Transversal::new(set_of(x)))
}

fn split(table: &mut ContainmentTable, solver: &PathwidthSolver, g: &Graph, s: u64) -> Result<u64, ErdosPosaError> {
    let k = table.nu(s);
    if k == 0 {
        return Ok(0);
    }
    let sub = g.induced(&set_of(s))?;
    let (_, pd) = solver.exact(&sub.graph)?;
    let pd = make_nice(&pd)?;
    let bags: Vec<u64> = pd.bags.iter().map(|b| mask_of(&sub.lift_set(b))).collect();
    let p = bags.len();
    let mut before = vec![0u64; p];
    let mut after = vec![0u64; p];
    for i in 1..p {
        before[i] = before[i - 1] | bags[i - 1];
    }
    for i in (0..p.saturating_sub(1)).rev() {
        after[i] = after[i + 1] | bags[i + 1];
    }
    let left: Vec<u64> = (0..p).map(|i| before[i] & !bags[i]).collect();
    let right: Vec<u64> = (0..p).map(|i| after[i] & !bags[i]).collect();
    let ell: Vec<usize> = left.iter().map(|&m| table.nu(m)).collect();
    let r: Vec<usize> = right.iter().map(|&m| table.nu(m)).collect();

    if k == 1 {
        let j = (0..p).find(|&j| r[j] == 0).expect("the last bag has nothing to its right");
        return Ok(if ell[j] == 0 { bags[j] } else { bags[j - 1] | bags[j] });
    }
    let j = (0..p)
        .find(|&j| ell[j] <= k.div_ceil(2) && r[j] <= k / 2)
        .expect("the left values climb by at most one per bag");
    let x = split(table, solver, g, left[j])?;
    let y = split(table, solver, g, right[j])?;
    Ok(bags[j] | x | y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::erdosposa::oracle::nu_exact;
    use crate::minors::MinorSearch;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn check(tree: &Graph, g: &Graph) -> usize {
        let x = klogk_transversal(tree, g).unwrap();
        let fam = Family::single(tree.clone()).unwrap();
        assert!(x.is_valid(&fam, g, &MinorSearch::default()).unwrap());
        let k = nu_exact(&fam, g).unwrap().0;
        if k == 0 {
            assert!(x.is_empty());
        } else {
            assert!(x.size() as f64 <= klogk_bound(tree.n(), k) + 1e-9);
        }
        x.size()
    }

    #[test]
    fn no_minor_gives_empty() {
        assert_eq!(check(&Graph::path(4), &Graph::star(5)), 0);
    }

    #[test]
    fn edge_in_k4() {
        assert_eq!(klogk_bound(2, 2).floor(), 44.0);
        assert!(check(&Graph::complete(2), &Graph::complete(4)) <= 4);
    }

    #[test]
    fn two_claws() {
        check(&Graph::path(3), &Graph::star(3).repeat(2));
    }

    #[test]
    fn random_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let trees = [Graph::complete(2), Graph::path(3), Graph::path(4), Graph::star(3)];
        for _ in 0..40 {
            let n = rng.gen_range(1..=10);
            let p = rng.gen_range(0.1..0.6);
            let g = crate::enumerate::random_graph(&mut rng, n, p);
            check(&trees[rng.gen_range(0..trees.len())], &g);
        }
    }
}
