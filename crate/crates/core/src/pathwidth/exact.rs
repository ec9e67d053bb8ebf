//! Exact pathwidth through the vertex separation number.
//!
//! For a vertex ordering, the boundary of a prefix `S` is the set of vertices
//! of `S` with a neighbour outside `S`; the pathwidth equals the minimum over
//! orderings of the largest prefix boundary. Small components are solved with
//! a full table over all vertex subsets, larger ones by a thresholded search
//! over the same subset space with memoised dead ends.

use std::collections::{HashSet, VecDeque};

use crate::error::PathwidthError;
use crate::graph::{bits, Graph, VertexSet};

use super::decomposition::PathDecomposition;

/// Default vertex cap of the exact solver.
pub const DEFAULT_PATHWIDTH_CAP: usize = 24;

/// Components up to this size are solved with a dense table of `2^n` bytes.
const DENSE_TABLE_LIMIT: usize = 22;

/// Exact pathwidth solver with an explicit vertex cap. Instances above the cap
/// fail with [`PathwidthError::TooLarge`]; there is no heuristic fallback.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathwidthSolver {
    pub cap: usize,
}

impl Default for PathwidthSolver {
    fn default() -> Self {
        PathwidthSolver { cap: DEFAULT_PATHWIDTH_CAP }
    }
}

impl PathwidthSolver {
    pub fn with_cap(cap: usize) -> Self {
        PathwidthSolver { cap: cap.min(64) }
    }

    fn check(&self, g: &Graph) -> Result<(), PathwidthError> {
        if g.n() > self.cap || g.n() > 64 {
            Err(PathwidthError::TooLarge { n: g.n(), cap: self.cap.min(64) })
        } else {
            Ok(())
        }
    }

    /// Minimum width together with a decomposition attaining it.
    pub fn exact(&self, g: &Graph) -> Result<(usize, PathDecomposition), PathwidthError> {
        self.check(g)?;
        let mut width = 0;
        let mut bags = Vec::new();
        for comp in g.connected_components() {
            let sub = g.induced(&comp)?;
            let order = if comp.len() <= DENSE_TABLE_LIMIT {
                let (w, order) = dense_order(&sub.graph);
                width = width.max(w);
                order
            } else {
                let masks = sub.graph.masks();
                let mut t = clique_lower_bound(&masks);
                loop {
                    if let Some(order) = threshold_order(&masks, t) {
                        width = width.max(t);
                        break order;
                    }
                    t += 1;
                }
            };
            let pd = order_to_decomposition(&sub.graph, &order);
            bags.extend(pd.bags.into_iter().map(|b| sub.lift_set(&b)));
        }
        Ok((width, PathDecomposition::new(bags)))
    }

    /// Decides `pw(g) <= t`, returning a witness of width at most `t` if so.
    pub fn at_most(&self, g: &Graph, t: usize) -> Result<Option<PathDecomposition>, PathwidthError> {
        self.check(g)?;
        let mut bags = Vec::new();
        for comp in g.connected_components() {
            let sub = g.induced(&comp)?;
            let order = if comp.len() <= t + 1 {
                (0..comp.len()).collect()
            } else {
                let masks = sub.graph.masks();
                if clique_lower_bound(&masks) > t {
                    return Ok(None);
                }
                match threshold_order(&masks, t) {
                    Some(order) => order,
                    None => return Ok(None),
                }
            };
            let pd = order_to_decomposition(&sub.graph, &order);
            bags.extend(pd.bags.into_iter().map(|b| sub.lift_set(&b)));
        }
        Ok(Some(PathDecomposition::new(bags)))
    }

    /// Just the width.
    pub fn pathwidth(&self, g: &Graph) -> Result<usize, PathwidthError> {
        Ok(self.exact(g)?.0)
    }
}

/// Exact pathwidth with the default cap.
pub fn exact_pathwidth(g: &Graph) -> Result<(usize, PathDecomposition), PathwidthError> {
    PathwidthSolver::default().exact(g)
}

/// Decision version with the default cap.
pub fn pathwidth_at_most(g: &Graph, t: usize) -> Result<(bool, Option<PathDecomposition>), PathwidthError> {
    let w = PathwidthSolver::default().at_most(g, t)?;
    Ok((w.is_some(), w))
}

fn boundary_size(masks: &[u64], full: u64, s: u64) -> u32 {
    let outside = full & !s;
    bits(s).filter(|&v| masks[v] & outside != 0).count() as u32
}

/// Dense DP: `best[S] = max(|∂S|, min_v best[S - v])`.
fn dense_order(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.n();
    if n == 0 {
        return (0, Vec::new());
    }
    let masks = g.masks();
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = vec![0u8; 1usize << n];
    for s in 1..(1u64 << n) {
        let mut m = u8::MAX;
        for v in bits(s) {
            m = m.min(best[(s & !(1 << v)) as usize]);
        }
        best[s as usize] = m.max(boundary_size(&masks, full, s) as u8);
    }
    let width = best[full as usize] as usize;
    let mut order = VecDeque::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let v = bits(s).find(|&v| best[(s & !(1 << v)) as usize] as usize <= width).expect("dp table is consistent");
        order.push_front(v);
        s &= !(1 << v);
    }
    (width, order.into())
}

/// Depth-first search for an ordering whose prefix boundaries never exceed
/// `t`. Subsets already explored without success are remembered.
fn threshold_order(masks: &[u64], t: usize) -> Option<Vec<usize>> {
    let n = masks.len();
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut dead: HashSet<u64> = HashSet::new();
    let mut order = Vec::with_capacity(n);
    fn go(masks: &[u64], full: u64, t: u32, s: u64, dead: &mut HashSet<u64>, order: &mut Vec<usize>) -> bool {
        if s == full {
            return true;
        }
        if dead.contains(&s) {
            return false;
        }
        // Vertices whose whole neighbourhood is already placed can go next
        // without ever enlarging a boundary.
        for v in bits(full & !s) {
            if masks[v] & !s & full == 0 {
                order.push(v);
                if go(masks, full, t, s | (1 << v), dead, order) {
                    return true;
                }
                order.pop();
                dead.insert(s);
                return false;
            }
        }
        for v in bits(full & !s) {
            let next = s | (1 << v);
            if boundary_size(masks, full, next) <= t {
                order.push(v);
                if go(masks, full, t, next, dead, order) {
                    return true;
                }
                order.pop();
            }
        }
        dead.insert(s);
        false
    }
    go(masks, full, t as u32, 0, &mut dead, &mut order).then_some(order)
}

/// Bags `{v_i} ∪ ∂{v_1..v_{i-1}}`.
pub(crate) fn order_to_decomposition(g: &Graph, order: &[usize]) -> PathDecomposition {
    let n = g.n();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // last position at which a vertex is still needed
    let reach: Vec<usize> =
        (0..n).map(|v| g.neighbors(v).iter().map(|&u| pos[u]).chain([pos[v]]).max().unwrap()).collect();
    let bags = order
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let mut bag: VertexSet = order[..i].iter().copied().filter(|&u| reach[u] >= i).collect();
            bag.insert(v);
            bag
        })
        .collect();
    PathDecomposition::new(bags)
}

/// Size of a largest clique minus one, a lower bound on the pathwidth.
fn clique_lower_bound(masks: &[u64]) -> usize {
    fn grow(masks: &[u64], cand: u64, size: usize, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let mut c = cand;
        while c != 0 {
            if size + c.count_ones() as usize <= *best {
                return;
            }
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            grow(masks, c & masks[v], size + 1, best);
        }
    }
    let n = masks.len();
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0;
    grow(masks, full, 0, &mut best);
    best.saturating_sub(1)
}
