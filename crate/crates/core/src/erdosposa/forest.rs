//! Transversals for families containing a forest.
//!
//! The forest `F` is completed to a tree `T` on the same vertices. A
//! `T`-transversal `X` leaves a graph without a `T` minor, hence of pathwidth
//! at most `|T| - 2`, and the bounded-pathwidth routine finishes the job on
//! `G - X`.

use crate::error::ErdosPosaError;
use crate::graph::Graph;
use crate::minors::MinorSearch;
use crate::pathwidth::PathwidthSolver;

use super::bounded_pw::bounded_pw_duality_with;
use super::family::{Family, Transversal};
use super::klogk::{klogk_bound, klogk_transversal_with};
use super::oracle::Oracle;

/// Adds edges to a forest until it is a tree, each time joining vertex 0 to
/// the smallest vertex outside its component.
pub fn tree_from_forest(f: &Graph) -> Result<Graph, ErdosPosaError> {
    if !f.is_forest() {
        return Err(ErdosPosaError::Precondition("not a forest".into()));
    }
    let mut t = f.clone();
    loop {
        let comps = t.connected_components();
        let Some(comp0) = comps.iter().find(|c| c.contains(&0)) else {
            return Ok(t);
        };
        match (0..t.n()).find(|v| !comp0.contains(v)) {
            Some(v) => {
                t.add_edge(0, v)?;
            }
            None => return Ok(t),
        }
    }
}

/// `3(t+1)k·log2((t+1)k) + 2qrtk - t`, the size guarantee for
/// `ν_F(G) = k >= 1`.
pub fn forest_bound(fam: &Family, k: usize) -> Option<f64> {
    let t = fam.t()?;
    Some(klogk_bound(t, k) + (2 * fam.q() * fam.r() * t * k) as f64)
}

/// A tree transversal followed by the bounded-pathwidth pass on what is left.
pub fn forest_transversal(fam: &Family, g: &Graph) -> Result<Transversal, ErdosPosaError> {
    forest_transversal_with(&Oracle::default(), &PathwidthSolver::default(), fam, g)
}

pub fn forest_transversal_with(
    oracle: &Oracle,
    solver: &PathwidthSolver,
    fam: &Family,
    g: &Graph,
) -> Result<Transversal, ErdosPosaError> {
    let f = fam.forest().ok_or(ErdosPosaError::NoForest)?;
    let tree = tree_from_forest(f)?;
    let x = klogk_transversal_with(oracle, solver, &tree, g)?;
    let rest = g.remove_vertices(&x.vertices)?;
    let mut out = x.vertices;
    if rest.graph.n() > 0 {
        let (w, pd) = solver.exact(&rest.graph)?;
        let search: MinorSearch = oracle.search;
        let (_, y) = bounded_pw_duality_with(&search, fam, &rest.graph, &pd, w + 1)?;
        out.extend(rest.lift_set(&y.vertices));
    }
    Ok(Transversal::new(out))
}
