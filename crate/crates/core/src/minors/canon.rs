//! Canonical forms of rooted graphs by individualisation and refinement.
//!
//! The search tree is the usual one: refine the colouring to an equitable
//! partition, individualise each vertex of the first non-singleton cell in
//! turn, and take the smallest encoding over all discrete leaves. Vertices of
//! a cell that are twins of an already tried vertex are skipped, since
//! swapping two twins is an automorphism of the coloured graph.

use crate::error::MinorError;
use crate::graph::{Graph, RootedGraph};

/// Default vertex cap for [`canonical_form`].
pub const DEFAULT_CANON_CAP: usize = 10;

/// Byte string identifying a rooted graph up to root-respecting isomorphism.
///
/// Layout: vertex count, root count, canonical position of each root in
/// order, then the upper triangle of the canonically ordered adjacency matrix
/// packed eight bits per byte.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalRootedGraph {
    encoding: Vec<u8>,
}

impl CanonicalRootedGraph {
    pub fn encoding(&self) -> &[u8] {
        &self.encoding
    }

    pub fn n(&self) -> usize {
        self.encoding[0] as usize
    }

    pub fn root_count(&self) -> usize {
        self.encoding[1] as usize
    }

    pub fn edge_count(&self) -> usize {
        self.encoding[2 + self.root_count()..].iter().map(|b| b.count_ones() as usize).sum()
    }

    /// The canonical representative itself.
    pub fn to_rooted_graph(&self) -> RootedGraph {
        let n = self.n();
        let k = self.root_count();
        let roots = self.encoding[2..2 + k].iter().map(|&p| p as usize).collect();
        let packed = &self.encoding[2 + k..];
        let mut g = Graph::new(n);
        let mut idx = 0;
        for u in 0..n {
            for v in u + 1..n {
                if packed[idx / 8] & (1 << (idx % 8)) != 0 {
                    g.add_edge(u, v).expect("decoded ids are in range");
                }
                idx += 1;
            }
        }
        RootedGraph::new(g, roots).expect("encoded roots are distinct")
    }
}

/// Canonical form with the default cap of [`DEFAULT_CANON_CAP`] vertices.
pub fn canonical_form(rg: &RootedGraph) -> Result<CanonicalRootedGraph, MinorError> {
    canonical_form_with_cap(rg, DEFAULT_CANON_CAP)
}

pub fn canonical_form_with_cap(rg: &RootedGraph, cap: usize) -> Result<CanonicalRootedGraph, MinorError> {
    if rg.n() > cap.min(64) {
        return Err(MinorError::CanonTooLarge { n: rg.n(), cap: cap.min(64) });
    }
    Ok(canonical_unchecked(rg.graph(), rg.roots()))
}

/// Canonical form without a cap; the caller keeps `n <= 64` and small enough
/// for the search to be cheap.
pub(crate) fn canonical_unchecked(g: &Graph, roots: &[usize]) -> CanonicalRootedGraph {
    let order = canonical_order(g, roots);
    CanonicalRootedGraph { encoding: encode(g, roots, &order) }
}

/// A canonical labelling: `order[i]` is the vertex placed at position `i`.
pub(crate) fn canonical_order(g: &Graph, roots: &[usize]) -> Vec<usize> {
    let n = g.n();
    let masks = g.masks();
    let mut colours = vec![0u32; n];
    for (i, &r) in roots.iter().enumerate() {
        colours[r] = i as u32 + 1;
    }
    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    search(g, &masks, roots, colours, &mut best);
    best.map(|(_, o)| o).unwrap_or_default()
}

fn search(g: &Graph, masks: &[u64], roots: &[usize], colours: Vec<u32>, best: &mut Option<(Vec<u8>, Vec<usize>)>) {
    let colours = refine(g, colours);
    let n = g.n();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    {
        let mut by_colour: Vec<(u32, usize)> = (0..n).map(|v| (colours[v], v)).collect();
        by_colour.sort_unstable();
        for (c, v) in by_colour {
            match cells.last_mut() {
                Some(cell) if colours[cell[0]] == c => cell.push(v),
                _ => cells.push(vec![v]),
            }
        }
    }
    let Some(target) = cells.iter().find(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
        let enc = encode(g, roots, &order);
        if best.as_ref().is_none_or(|(b, _)| enc < *b) {
            *best = Some((enc, order));
        }
        return;
    };
    let mut tried: Vec<usize> = Vec::new();
    for &v in target {
        let twin = tried.iter().any(|&u| {
            let (mu, mv) = (masks[u] & !(1 << v), masks[v] & !(1 << u));
            mu == mv
        });
        if twin {
            continue;
        }
        tried.push(v);
        let next: Vec<u32> = (0..n).map(|x| if x == v { 2 * colours[x] } else { 2 * colours[x] + 1 }).collect();
        search(g, masks, roots, next, best);
    }
}

/// Colour refinement to the coarsest equitable partition finer than the
/// input. New colours are ranks of `(old colour, sorted neighbour colours)`.
fn refine(g: &Graph, mut colours: Vec<u32>) -> Vec<u32> {
    let n = g.n();
    let mut count = distinct(&colours);
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).iter().map(|&u| colours[u]).collect();
                nb.sort_unstable();
                (colours[v], nb)
            })
            .collect();
        let mut sorted: Vec<&(u32, Vec<u32>)> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        colours = sigs.iter().map(|s| sorted.binary_search(&s).expect("signature present") as u32).collect();
        let now = sorted.len();
        if now == count {
            return colours;
        }
        count = now;
    }
}

fn distinct(colours: &[u32]) -> usize {
    let mut c = colours.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn encode(g: &Graph, roots: &[usize], order: &[usize]) -> Vec<u8> {
    let n = g.n();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut out = Vec::with_capacity(2 + roots.len() + n * n / 16 + 1);
    out.push(n as u8);
    out.push(roots.len() as u8);
    out.extend(roots.iter().map(|&r| pos[r] as u8));
    let masks = g.masks();
    let (mut byte, mut used) = (0u8, 0);
    for i in 0..n {
        for j in i + 1..n {
            if masks[order[i]] & (1 << order[j]) != 0 {
                byte |= 1 << used;
            }
            used += 1;
            if used == 8 {
                out.push(byte);
                (byte, used) = (0, 0);
            }
        }
    }
    if used > 0 {
        out.push(byte);
    }
    out
}
