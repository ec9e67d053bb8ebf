use std::collections::BTreeMap;

use crate::error::PathwidthError;
use crate::graph::{Graph, VertexSet};

/// An ordered sequence of bags. Vertex ids refer to whatever graph the
/// decomposition is checked against; for a decomposition of an induced
/// subgraph they are the ids of the host.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PathDecomposition {
    pub bags: Vec<VertexSet>,
}

impl PathDecomposition {
    pub fn new(bags: Vec<VertexSet>) -> Self {
        PathDecomposition { bags }
    }

    /// Largest bag size minus one (0 when there are no nonempty bags).
    pub fn width(&self) -> usize {
        self.bags.iter().map(VertexSet::len).max().unwrap_or(0).saturating_sub(1)
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    pub fn first(&self) -> Option<&VertexSet> {
        self.bags.first()
    }

    pub fn last(&self) -> Option<&VertexSet> {
        self.bags.last()
    }

    /// Union of all bags.
    pub fn vertices(&self) -> VertexSet {
        self.bags.iter().flatten().copied().collect()
    }

    /// `[first, last]` bag index of each vertex, or `None` when some vertex
    /// occurs in a non-contiguous run of bags.
    pub fn intervals(&self) -> Option<BTreeMap<usize, (usize, usize)>> {
        let mut iv: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        for (i, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                match iv.get_mut(&v) {
                    None => {
                        iv.insert(v, (i, i));
                    }
                    Some(span) if span.1 + 1 == i => span.1 = i,
                    Some(_) => return None,
                }
            }
        }
        Some(iv)
    }

    /// Checks the decomposition against the subgraph of `g` induced by `s`.
    pub fn is_valid_for_subgraph(&self, g: &Graph, s: &VertexSet) -> bool {
        if self.vertices() != *s || s.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let Some(iv) = self.intervals() else {
            return false;
        };
        s.iter().all(|&u| {
            g.neighbors(u).iter().filter(|&&v| u < v && s.contains(&v)).all(|&v| {
                let (a, b) = (iv[&u], iv[&v]);
                let (lo, hi) = (a.0.max(b.0), a.1.min(b.1));
                lo <= hi && (lo..=hi).any(|i| self.bags[i].contains(&u) && self.bags[i].contains(&v))
            })
        })
    }

    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.is_valid_for_subgraph(g, &g.vertices())
    }
}

/// True iff `pd` is a path decomposition of `g`.
pub fn validate_path_decomposition(g: &Graph, pd: &PathDecomposition) -> bool {
    pd.is_valid_for(g)
}

/// Refines `pd` so consecutive bags differ in exactly one vertex, keeping the
/// first bag, the last bag and the width. Vertices leaving are dropped one at a
/// time before the entering ones are added.
pub fn make_nice(pd: &PathDecomposition) -> Result<PathDecomposition, PathwidthError> {
    if pd.intervals().is_none() {
        return Err(PathwidthError::InvalidDecomposition);
    }
    let mut out: Vec<VertexSet> = Vec::with_capacity(pd.len());
    for bag in &pd.bags {
        let Some(prev) = out.last().cloned() else {
            out.push(bag.clone());
            continue;
        };
        if prev == *bag {
            continue;
        }
        let mut cur = prev.clone();
        for v in prev.difference(bag) {
            cur.remove(v);
            out.push(cur.clone());
        }
        for v in bag.difference(&prev) {
            cur.insert(*v);
            out.push(cur.clone());
        }
    }
    Ok(PathDecomposition::new(out))
}

#[cfg(test)]
fn is_nice(pd: &PathDecomposition) -> bool {
    pd.bags.windows(2).all(|w| w[0].symmetric_difference(&w[1]).count() == 1)
}
