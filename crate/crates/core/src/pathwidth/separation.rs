//! `t`-separations: a separation `(G1, G2)` where `G1` carries a path
//! decomposition of width at most `t` whose first and last bags together form
//! `V(G1) ∩ V(G2)`.

use crate::error::PathwidthError;
use crate::graph::{validate_separation, Graph, Separation, VertexSet};

use super::decomposition::{make_nice, PathDecomposition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TSeparation {
    pub sep: Separation,
    /// Decomposition of `G[sep.left]`, in the ids of the host graph.
    pub decomposition: PathDecomposition,
    pub t: usize,
}

impl TSeparation {
    pub fn left_size(&self) -> usize {
        self.sep.left.len()
    }

    /// Checks every `t`-separation invariant against `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let pd = &self.decomposition;
        if !validate_separation(g, &self.sep)
            || !pd.is_valid_for_subgraph(g, &self.sep.left)
            || (!pd.is_empty() && pd.width() > self.t)
            || self.sep.order() > 2 * self.t + 2
        {
            return false;
        }
        let ends: VertexSet = match (pd.first(), pd.last()) {
            (Some(a), Some(b)) => a.union(b).copied().collect(),
            _ => VertexSet::new(),
        };
        ends == self.sep.cut()
    }

    /// Vertices of `G1` that are not in `G2`.
    pub fn interior(&self) -> VertexSet {
        self.sep.left.difference(&self.sep.right).copied().collect()
    }
}

/// Given a decomposition of `g` of width `t` and a set of marked vertices,
/// returns a `t`-separation `(G1, G2)` with
/// `|G1| >= (|G| - k(t+1)) / (k+1)` (`k = |marked|`) and no marked vertex in
/// `V(G1) \ V(G2)`.
///
/// Each marked vertex marks its leftmost bag. Among the gaps between
/// consecutive marked bags (with the two end bags added) the one with the
/// largest interior wins, ties going to the leftmost gap.
pub fn marked_separation(g: &Graph, pd: &PathDecomposition, marked: &VertexSet) -> Result<TSeparation, PathwidthError> {
    if !pd.is_valid_for(g) {
        return Err(PathwidthError::InvalidDecomposition);
    }
    g.check_set(marked)?;
    let t = pd.width();
    if g.n() == 0 {
        return Ok(TSeparation {
            sep: Separation::new(VertexSet::new(), VertexSet::new()),
            decomposition: PathDecomposition::default(),
            t,
        });
    }
    let p = pd.len();
    if marked.is_empty() {
        let right: VertexSet = pd.bags[0].union(&pd.bags[p - 1]).copied().collect();
        return Ok(TSeparation { sep: Separation::new(g.vertices(), right), decomposition: pd.clone(), t });
    }
    let iv = pd.intervals().expect("validated");
    let mut cuts: Vec<usize> = marked.iter().map(|v| iv[v].0).collect();
    cuts.push(0);
    cuts.push(p - 1);
    cuts.sort_unstable();
    cuts.dedup();

    // Y_{a,b} = (B_{a+1} ∪ .. ∪ B_{b-1}) \ (B_a ∪ B_b): the vertices whose
    // interval lies strictly between a and b.
    let interior = |a: usize, b: usize| -> VertexSet {
        iv.iter().filter(|(_, &(l, r))| l > a && r < b).map(|(&v, _)| v).collect()
    };
    // With a single bag the only window is the bag itself.
    let (mut a, mut b, mut best) = (0, 0, None::<VertexSet>);
    for w in cuts.windows(2) {
        let y = interior(w[0], w[1]);
        if best.as_ref().is_none_or(|s| y.len() > s.len()) {
            (a, b, best) = (w[0], w[1], Some(y));
        }
    }
    let best = best.unwrap_or_default();
    let ends: VertexSet = pd.bags[a].union(&pd.bags[b]).copied().collect();
    let left: VertexSet = best.union(&ends).copied().collect();
    let right: VertexSet = g.vertices().difference(&best).copied().collect();
    Ok(TSeparation {
        sep: Separation::new(left, right),
        decomposition: PathDecomposition::new(pd.bags[a..=b].to_vec()),
        t,
    })
}

/// Shrinks a `t`-separation so that `|G1'| = ell` exactly, with
/// `G1' ⊆ G1`, `G2 ⊆ G2'` and still no marked vertex in `V(G1') \ V(G2')`.
/// Requires `1 <= ell <= ceil(|G1| / (k+1))` for `k = |marked|`.
pub fn refine_separation(
    g: &Graph,
    tsep: &TSeparation,
    marked: &VertexSet,
    ell: usize,
) -> Result<TSeparation, PathwidthError> {
    if !tsep.is_valid_for(g) {
        return Err(PathwidthError::InvalidDecomposition);
    }
    g.check_set(marked)?;
    let g1 = &tsep.sep.left;
    let max = g1.len().div_ceil(marked.len() + 1);
    if ell == 0 || ell > max {
        return Err(PathwidthError::WindowOutOfRange { ell, max });
    }
    let t = tsep.t;
    if ell <= t + 1 {
        let y: VertexSet = g1.iter().take(ell).copied().collect();
        return Ok(TSeparation {
            sep: Separation::new(y.clone(), g.vertices()),
            decomposition: PathDecomposition::new(vec![y]),
            t,
        });
    }
    let pd = make_nice(&tsep.decomposition)?;
    let p = pd.len();
    let iv = pd.intervals().expect("nice decompositions stay contiguous");
    let mut cuts: Vec<usize> = marked.iter().filter_map(|v| iv.get(v).map(|s| s.0)).collect();
    cuts.push(0);
    cuts.push(p - 1);
    cuts.sort_unstable();
    cuts.dedup();

    let window = |a: usize, b: usize| -> VertexSet { pd.bags[a..=b].iter().flatten().copied().collect() };
    for w in cuts.windows(2) {
        let (a, end) = (w[0], w[1]);
        if window(a, end).len() < ell {
            continue;
        }
        let mut acc = pd.bags[a].clone();
        for b in a + 1..=end {
            acc.extend(pd.bags[b].iter().copied());
            if acc.len() == ell {
                let inner: VertexSet =
                    acc.iter().filter(|v| !pd.bags[a].contains(v) && !pd.bags[b].contains(v)).copied().collect();
                let right: VertexSet = g.vertices().difference(&inner).copied().collect();
                return Ok(TSeparation {
                    sep: Separation::new(acc, right),
                    decomposition: PathDecomposition::new(pd.bags[a..=b].to_vec()),
                    t,
                });
            }
        }
    }
    unreachable!("a window of size ell exists whenever ell <= ceil(|G1|/(k+1))")
}
