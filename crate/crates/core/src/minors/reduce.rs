//! Replacing the small side of a separation by a smaller rooted graph with
//! the same deletion folio.
//!
//! Candidates are the rooted minors of `(G1, R)` that keep every root, tried
//! in order of size. A candidate is accepted when its `p`-deletion `q`-folio
//! equals that of `(G1, R)`, with `p` the order of the separation and
//! `q = p(|T| + 1)`.

use std::collections::BTreeMap;

use crate::error::MinorError;
use crate::graph::{validate_separation, Graph, RootedGraph, Separation, VertexSet};

use super::canon::CanonicalRootedGraph;
use super::folio::{subsets_of_size, DeletionFolio, FolioBuilder};
use super::model::MinorSearch;

/// Replacement graphs never have more vertices than this.
pub const REDUCTION_SIZE_CAP: usize = 10;

/// Number of candidate replacements compared before giving up.
pub const DEFAULT_CANDIDATE_BUDGET: usize = 400;

/// Everything needed to check and undo a reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionCertificate {
    pub p: usize,
    pub q: usize,
    /// `V(G1)` in the ids of the original graph.
    pub left: VertexSet,
    /// The cut in increasing order; root `i` of the replacement is glued to
    /// `cut[i]`.
    pub cut: Vec<usize>,
    /// The replacement `(G1', R)`.
    pub replacement: RootedGraph,
    /// The deletion folio shared by `(G1, R)` and `(G1', R)`.
    pub folio: DeletionFolio,
    /// Original id of each vertex of the reduced graph, `None` for the
    /// non-root vertices of the replacement.
    pub origin: Vec<Option<usize>>,
}

impl ReductionCertificate {
    /// Vertices of `G1` outside the cut.
    pub fn interior(&self) -> VertexSet {
        self.left.iter().copied().filter(|v| self.cut.binary_search(v).is_err()).collect()
    }

    /// Turns a `T`-transversal of the reduced graph into one of `g` that is
    /// no larger: vertices outside the replacement map back directly, and the
    /// replacement part is swapped for an equally large set inside `G1`
    /// found by search. Returns `None` if no such set exists.
    pub fn lift_transversal(
        &self,
        search: &MinorSearch,
        g: &Graph,
        t_tree: &Graph,
        x_reduced: &VertexSet,
    ) -> Result<Option<VertexSet>, MinorError> {
        let mut base = VertexSet::new();
        let mut inside = 0;
        for &v in x_reduced {
            match self.origin.get(v).copied().flatten() {
                Some(o) => {
                    base.insert(o);
                }
                None => inside += 1,
            }
        }
        let interior: Vec<usize> = self.interior().into_iter().collect();
        for size in 0..=inside.min(interior.len()) {
            for z in subsets_of_size(&interior, size) {
                let mut x = base.clone();
                x.extend(z);
                let rest = g.remove_vertices(&x)?;
                if search.find(t_tree, &rest.graph)?.is_none() {
                    return Ok(Some(x));
                }
            }
        }
        Ok(None)
    }
}

/// Reduction with explicit budgets.
#[derive(Clone, Copy, Debug)]
pub struct Reducer {
    pub folios: FolioBuilder,
    pub candidate_budget: usize,
    pub size_cap: usize,
}

impl Default for Reducer {
    fn default() -> Self {
        Reducer {
            folios: FolioBuilder::default(),
            candidate_budget: DEFAULT_CANDIDATE_BUDGET,
            size_cap: REDUCTION_SIZE_CAP,
        }
    }
}

impl Reducer {
    pub fn reduce(
        &self,
        g: &Graph,
        sep: &Separation,
        t_tree: &Graph,
    ) -> Result<Option<(Graph, ReductionCertificate)>, MinorError> {
        if !t_tree.is_tree() {
            return Err(MinorError::Precondition("the pattern must be a tree".into()));
        }
        if !validate_separation(g, sep) {
            return Err(MinorError::Precondition("not a separation of the graph".into()));
        }
        let g1 = g.induced(&sep.left)?;
        if self.folios.search.find(t_tree, &g1.graph)?.is_some() {
            return Err(MinorError::Precondition("the small side contains the tree as a minor".into()));
        }
        let cut: Vec<usize> = sep.cut().into_iter().collect();
        let p = cut.len();
        let q = p * (t_tree.n() + 1);
        let roots: Vec<usize> = cut.iter().map(|&v| g1.project(v).expect("cut lies in G1")).collect();
        let host = RootedGraph::new(g1.graph.clone(), roots)?;
        let limit = (host.n().saturating_sub(1)).min(self.size_cap);
        if limit < p || q == 0 {
            return Ok(None);
        }
        let target = self.folios.deletion_folio(&host, p, q)?;

        let mut candidates: Vec<CanonicalRootedGraph> = self.folios.rooted_minors(&host, limit)?.into_iter().collect();
        candidates.sort_by_key(|c| (c.n(), c.edge_count(), c.clone()));
        for (tried, cand) in candidates.iter().enumerate() {
            if tried == self.candidate_budget {
                return Err(MinorError::BudgetExhausted(self.candidate_budget as u64));
            }
            let rg = cand.to_rooted_graph();
            if self.folios.deletion_folio(&rg, p, q)? == target {
                let (reduced, origin) = splice(g, sep, &cut, &rg)?;
                let cert =
                    ReductionCertificate { p, q, left: sep.left.clone(), cut, replacement: rg, folio: target, origin };
                return Ok(Some((reduced, cert)));
            }
        }
        Ok(None)
    }
}

/// Glues the replacement onto `G2`. Edges inside the cut come from the
/// replacement only.
fn splice(
    g: &Graph,
    sep: &Separation,
    cut: &[usize],
    replacement: &RootedGraph,
) -> Result<(Graph, Vec<Option<usize>>), MinorError> {
    let right: Vec<usize> = sep.right.iter().copied().collect();
    let mut id: BTreeMap<usize, usize> = BTreeMap::new();
    let mut origin: Vec<Option<usize>> = Vec::new();
    for &v in &right {
        id.insert(v, origin.len());
        origin.push(Some(v));
    }
    let h = replacement.graph();
    let mut local = vec![usize::MAX; h.n()];
    for (i, &r) in replacement.roots().iter().enumerate() {
        local[r] = id[&cut[i]];
    }
    for slot in local.iter_mut() {
        if *slot == usize::MAX {
            *slot = origin.len();
            origin.push(None);
        }
    }
    let in_cut = |v: usize| cut.binary_search(&v).is_ok();
    let mut out = Graph::new(origin.len());
    for (u, v) in g.edges() {
        if sep.right.contains(&u) && sep.right.contains(&v) && !(in_cut(u) && in_cut(v)) {
            out.add_edge(id[&u], id[&v])?;
        }
    }
    for (u, v) in h.edges() {
        out.add_edge(local[u], local[v])?;
    }
    Ok((out, origin))
}

/// [`Reducer::reduce`] with default budgets.
pub fn reduce_separation(
    g: &Graph,
    sep: &Separation,
    t_tree: &Graph,
) -> Result<Option<(Graph, ReductionCertificate)>, MinorError> {
    Reducer::default().reduce(g, sep, t_tree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minors::find_model;

    /// A pendant star with `leaves` leaves hung at vertex 0 of a triangle.
    fn star_behind_triangle(leaves: usize) -> (Graph, Separation) {
        let mut g = Graph::complete(3).disjoint_union(&Graph::star(leaves));
        // glue the star centre (vertex 3) to triangle vertex 0 by an edge
        g.add_edge(0, 3).unwrap();
        let left: VertexSet = (3..g.n()).collect();
        let right: VertexSet = [0, 1, 2, 3].into_iter().collect();
        (g, Separation::new(left, right))
    }

    #[test]
    fn pendant_star_shrinks() {
        let (g, sep) = star_behind_triangle(8);
        let p4 = Graph::path(4);
        let (reduced, cert) = reduce_separation(&g, &sep, &p4).unwrap().expect("a reduction");
        assert!(reduced.n() < g.n());
        assert_eq!(cert.cut, vec![3]);
        assert_eq!(cert.q, 5);
        assert!(find_model(&p4, &reduced).unwrap().is_some());
    }

    #[test]
    fn tree_minor_on_small_side_is_rejected() {
        let g = Graph::path(6);
        let sep = Separation::new((0..4).collect(), (3..6).collect());
        let err = reduce_separation(&g, &sep, &Graph::path(3)).unwrap_err();
        assert!(matches!(err, MinorError::Precondition(_)));
    }

    #[test]
    fn minimal_side_gives_nothing() {
        // a single pendant leaf cannot be replaced by anything smaller
        let g = Graph::path(4);
        let sep = Separation::new([2, 3].into_iter().collect(), [0, 1, 2].into_iter().collect());
        assert_eq!(reduce_separation(&g, &sep, &Graph::path(4)).unwrap(), None);
    }

    #[test]
    fn transversal_lifts_back() {
        let (g, sep) = star_behind_triangle(6);
        let p4 = Graph::path(4);
        let search = MinorSearch::default();
        let (reduced, cert) = reduce_separation(&g, &sep, &p4).unwrap().expect("a reduction");
        // a triangle vertex and one replacement leaf hit every P4 of the reduced graph
        let t0 = cert.origin.iter().position(|&o| o == Some(0)).unwrap();
        let leaf = cert.origin.iter().position(Option::is_none).unwrap();
        let x: VertexSet = [t0, leaf].into_iter().collect();
        let rest = reduced.remove_vertices(&x).unwrap();
        assert!(search.find(&p4, &rest.graph).unwrap().is_none());
        let lifted = cert.lift_transversal(&search, &g, &p4, &x).unwrap().unwrap();
        assert!(lifted.len() <= x.len());
        let rest = g.remove_vertices(&lifted).unwrap();
        assert!(search.find(&p4, &rest.graph).unwrap().is_none());
    }
}
