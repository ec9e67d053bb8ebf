//! `q`-folios and `p`-deletion `q`-folios of rooted graphs.
//!
//! Root subsets are recorded as increasing lists of positions into the root
//! sequence of the rooted graph, so folios of different graphs over the same
//! number of roots can be compared directly.
//!
//! The rooted minors with at most `q` vertices form a down-closed family, and
//! every member arises from a smaller member by adding an isolated non-root
//! vertex or an edge. The folio is therefore grown upwards from the edgeless
//! graph on the roots, testing each extension with the model search.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::MinorError;
use crate::graph::{Graph, RootedGraph, VertexSet};

use super::canon::{canonical_unchecked, CanonicalRootedGraph};
use super::model::MinorSearch;

/// Largest root count accepted by the folio routines.
pub const DEFAULT_MAX_ROOTS: usize = 4;

/// For every root subset, the canonical forms of the rooted minors on at most
/// `q` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Folio {
    pub q: usize,
    pub entries: BTreeMap<Vec<usize>, BTreeSet<CanonicalRootedGraph>>,
}

impl Folio {
    /// Entry for the given root positions, if that subset was recorded.
    pub fn entry(&self, positions: &[usize]) -> Option<&BTreeSet<CanonicalRootedGraph>> {
        self.entries.get(positions)
    }

    /// Total number of recorded minors over all entries.
    pub fn size(&self) -> usize {
        self.entries.values().map(BTreeSet::len).sum()
    }
}

/// Layer `i` maps each deleted root set `X` (as positions, `|X| <= i`) to the
/// folios of `(G - (X ∪ Y), R - X)` over all non-root sets `Y` with
/// `|X| + |Y| = i`. Keys with no admissible `Y` are left out.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeletionFolio {
    pub p: usize,
    pub q: usize,
    pub layers: Vec<BTreeMap<Vec<usize>, BTreeSet<Folio>>>,
}

/// Folio computation with an explicit minor-search budget and root limit.
#[derive(Clone, Copy, Debug)]
pub struct FolioBuilder {
    pub search: MinorSearch,
    pub max_roots: usize,
}

impl Default for FolioBuilder {
    fn default() -> Self {
        FolioBuilder { search: MinorSearch::default(), max_roots: DEFAULT_MAX_ROOTS }
    }
}

impl FolioBuilder {
    fn check(&self, g: &RootedGraph, q: usize) -> Result<(), MinorError> {
        if q == 0 {
            return Err(MinorError::Precondition("q must be at least 1".into()));
        }
        if g.roots().len() > self.max_roots {
            return Err(MinorError::Precondition(format!(
                "{} roots exceed the folio limit of {}",
                g.roots().len(),
                self.max_roots
            )));
        }
        if g.n() > 64 {
            return Err(MinorError::HostTooLarge { n: g.n(), limit: 64 });
        }
        Ok(())
    }

    pub fn folio(&self, g: &RootedGraph, q: usize) -> Result<Folio, MinorError> {
        self.check(g, q)?;
        let labelled: Vec<(usize, usize)> = g.roots().iter().copied().enumerate().collect();
        self.folio_labelled(g.graph(), &labelled, q)
    }

    /// Folio of `g` whose roots carry explicit position labels.
    fn folio_labelled(&self, g: &Graph, roots: &[(usize, usize)], q: usize) -> Result<Folio, MinorError> {
        let mut entries = BTreeMap::new();
        for mask in 0u32..(1 << roots.len()) {
            let chosen: Vec<(usize, usize)> =
                roots.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &r)| r).collect();
            let positions = chosen.iter().map(|&(p, _)| p).collect();
            let vertices: Vec<usize> = chosen.iter().map(|&(_, v)| v).collect();
            let host = RootedGraph::new(g.clone(), vertices)?;
            entries.insert(positions, self.rooted_minors(&host, q)?);
        }
        Ok(Folio { q, entries })
    }

    /// Canonical forms of all rooted minors of `g` (keeping every root) with
    /// at most `q` vertices.
    pub fn rooted_minors(&self, g: &RootedGraph, q: usize) -> Result<BTreeSet<CanonicalRootedGraph>, MinorError> {
        let k = g.roots().len();
        let mut found = BTreeSet::new();
        if k > q.min(g.n()) {
            return Ok(found);
        }
        let base = Graph::new(k);
        let base_roots: Vec<usize> = (0..k).collect();
        let mut rejected = BTreeSet::new();
        found.insert(canonical_unchecked(&base, &base_roots));
        let mut queue = vec![(base, base_roots)];
        while let Some((h, roots)) = queue.pop() {
            let mut next = Vec::new();
            if h.n() < q.min(g.n()) {
                next.push(h.disjoint_union(&Graph::new(1)));
            }
            for u in 0..h.n() {
                for v in u + 1..h.n() {
                    if !h.has_edge(u, v) {
                        let mut e = h.clone();
                        e.add_edge(u, v)?;
                        next.push(e);
                    }
                }
            }
            for cand in next {
                let key = canonical_unchecked(&cand, &roots);
                if found.contains(&key) || rejected.contains(&key) {
                    continue;
                }
                let pattern = RootedGraph::new(cand.clone(), roots.clone())?;
                if self.search.find_rooted(&pattern, g)?.is_some() {
                    found.insert(key);
                    queue.push((cand, roots.clone()));
                } else {
                    rejected.insert(key);
                }
            }
        }
        Ok(found)
    }

    pub fn deletion_folio(&self, g: &RootedGraph, p: usize, q: usize) -> Result<DeletionFolio, MinorError> {
        self.check(g, q)?;
        let roots = g.roots();
        let root_set: VertexSet = roots.iter().copied().collect();
        let others: Vec<usize> = (0..g.n()).filter(|v| !root_set.contains(v)).collect();
        let mut layers = Vec::with_capacity(p + 1);
        for i in 0..=p {
            let mut layer: BTreeMap<Vec<usize>, BTreeSet<Folio>> = BTreeMap::new();
            for xmask in 0u32..(1 << roots.len()) {
                let x: Vec<usize> = (0..roots.len()).filter(|j| xmask & (1 << j) != 0).collect();
                if x.len() > i || i - x.len() > others.len() {
                    continue;
                }
                let kept: Vec<(usize, usize)> =
                    (0..roots.len()).filter(|j| xmask & (1 << j) == 0).map(|j| (j, roots[j])).collect();
                let mut folios = BTreeSet::new();
                for y in subsets_of_size(&others, i - x.len()) {
                    let mut gone: VertexSet = y.into_iter().collect();
                    gone.extend(x.iter().map(|&j| roots[j]));
                    let sub = g.graph().remove_vertices(&gone)?;
                    let relabelled: Vec<(usize, usize)> =
                        kept.iter().map(|&(j, v)| (j, sub.project(v).expect("kept root survives"))).collect();
                    folios.insert(self.folio_labelled(&sub.graph, &relabelled, q)?);
                }
                layer.insert(x, folios);
            }
            layers.push(layer);
        }
        Ok(DeletionFolio { p, q, layers })
    }
}

/// `k`-subsets of `items` in lexicographic order.
pub(crate) fn subsets_of_size(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    go(items, k, 0, &mut cur, &mut out);
    out
}

pub fn q_folio(g: &RootedGraph, q: usize) -> Result<Folio, MinorError> {
    FolioBuilder::default().folio(g, q)
}

pub fn deletion_folio(g: &RootedGraph, p: usize, q: usize) -> Result<DeletionFolio, MinorError> {
    FolioBuilder::default().deletion_folio(g, p, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate;
    use crate::minors::{canonical_form, find_rooted_model};

    fn rooted(g: Graph, roots: &[usize]) -> RootedGraph {
        RootedGraph::new(g, roots.to_vec()).unwrap()
    }

    fn canon(g: Graph, roots: &[usize]) -> CanonicalRootedGraph {
        canonical_form(&rooted(g, roots)).unwrap()
    }

    /// Same folio computed by testing every rooted pattern on at most `q`
    /// vertices.
    fn folio_by_patterns(g: &RootedGraph, q: usize) -> Folio {
        let k = g.roots().len();
        let mut entries = BTreeMap::new();
        for mask in 0u32..(1 << k) {
            let pos: Vec<usize> = (0..k).filter(|i| mask & (1 << i) != 0).collect();
            let host = rooted(g.graph().clone(), &pos.iter().map(|&i| g.roots()[i]).collect::<Vec<_>>());
            let mut set = BTreeSet::new();
            for n in 0..=q {
                if n < pos.len() {
                    continue;
                }
                for pat in enumerate::rooted_graphs(n, pos.len()) {
                    if find_rooted_model(&pat, &host).unwrap().is_some() {
                        set.insert(canonical_form(&pat).unwrap());
                    }
                }
            }
            entries.insert(pos, set);
        }
        Folio { q, entries }
    }

    #[test]
    fn point_folio() {
        let f = q_folio(&rooted(Graph::new(1), &[0]), 1).unwrap();
        assert_eq!(f.entry(&[0]).unwrap(), &BTreeSet::from([canon(Graph::new(1), &[0])]));
        assert_eq!(f.entry(&[]).unwrap(), &BTreeSet::from([canon(Graph::new(0), &[]), canon(Graph::new(1), &[])]));
    }

    #[test]
    fn edge_folio() {
        let f = q_folio(&rooted(Graph::complete(2), &[0]), 2).unwrap();
        let e = f.entry(&[0]).unwrap();
        assert!(e.contains(&canon(Graph::new(1), &[0])));
        assert!(e.contains(&canon(Graph::complete(2), &[0])));
    }

    #[test]
    fn square_has_a_triangle() {
        let f = q_folio(&RootedGraph::unrooted(Graph::cycle(4)), 3).unwrap();
        assert!(f.entry(&[]).unwrap().contains(&canon(Graph::complete(3), &[])));
    }

    #[test]
    fn growth_matches_pattern_enumeration() {
        let cases = [
            rooted(Graph::cycle(5), &[0, 2]),
            rooted(Graph::star(4), &[0]),
            rooted(Graph::star(4), &[1, 2]),
            rooted(Graph::path(5), &[4, 0]),
            rooted(Graph::complete(3).disjoint_union(&Graph::path(2)), &[3]),
        ];
        for g in &cases {
            for q in 1..=4 {
                assert_eq!(q_folio(g, q).unwrap(), folio_by_patterns(g, q), "{g:?} q={q}");
            }
        }
    }

    #[test]
    fn deletion_folio_layers() {
        let g = rooted(Graph::path(3), &[0]);
        let d = deletion_folio(&g, 0, 2).unwrap();
        assert_eq!(d.layers.len(), 1);
        assert_eq!(d.layers[0].len(), 1);
        assert_eq!(d.layers[0][&vec![]], BTreeSet::from([q_folio(&g, 2).unwrap()]));

        let pair = rooted(Graph::new(2), &[0]);
        let d = deletion_folio(&pair, 1, 1).unwrap();
        let layer = &d.layers[1];
        let after_y = q_folio(&rooted(Graph::new(1), &[0]), 1).unwrap();
        assert!(layer[&vec![]].contains(&after_y));
        // deleting the root leaves one unrooted point
        let after_x = &layer[&vec![0]];
        assert_eq!(after_x.len(), 1);
        let f = after_x.iter().next().unwrap();
        assert_eq!(f.entries.keys().cloned().collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
        assert!(layer.len() <= g.roots().len() + 1);
    }

    #[test]
    fn deletion_folio_rejects_too_many_roots() {
        let g = rooted(Graph::path(6), &[0, 1, 2, 3, 4]);
        assert!(matches!(deletion_folio(&g, 1, 2), Err(MinorError::Precondition(_))));
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(subsets_of_size(&[1, 2, 3], 2), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(subsets_of_size(&[1, 2], 0), vec![Vec::<usize>::new()]);
        assert!(subsets_of_size(&[1], 2).is_empty());
    }
}
