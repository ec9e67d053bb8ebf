//! Small graphs up to isomorphism, rooted trees, and seeded random graphs.

use std::collections::BTreeMap;

use rand::Rng;

use crate::graph::{Graph, RootedGraph};
use crate::minors::canon::{canonical_order, canonical_unchecked, CanonicalRootedGraph};

/// Relabels `g` by its canonical order, so isomorphic inputs give equal
/// outputs.
fn canonical_copy(g: &Graph, roots: &[usize]) -> (Graph, Vec<usize>) {
    let order = canonical_order(g, roots);
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let h =
        Graph::from_edges(g.n(), g.edges().map(|(u, v)| (pos[u], pos[v]))).expect("relabelling keeps the graph simple");
    (h, roots.iter().map(|&r| pos[r]).collect())
}

/// One representative of every isomorphism class of graphs on exactly `n`
/// vertices, in canonical labelling, ordered by edge count.
///
/// Classes are grown edge by edge: every graph with `m + 1` edges arises from
/// one with `m` edges by adding an edge.
pub fn graphs(n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut level: BTreeMap<CanonicalRootedGraph, Graph> = BTreeMap::new();
    let empty = Graph::new(n);
    level.insert(canonical_unchecked(&empty, &[]), empty);
    while !level.is_empty() {
        let mut next = BTreeMap::new();
        for g in level.values() {
            for u in 0..n {
                for v in u + 1..n {
                    if g.has_edge(u, v) {
                        continue;
                    }
                    let mut h = g.clone();
                    h.add_edge(u, v).expect("non-edge in range");
                    let key = canonical_unchecked(&h, &[]);
                    next.entry(key).or_insert_with(|| canonical_copy(&h, &[]).0);
                }
            }
        }
        out.extend(level.into_values().map(|g| canonical_copy(&g, &[]).0));
        level = next;
    }
    out
}

/// All graphs on `1..=n` vertices up to isomorphism.
pub fn graphs_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(graphs).collect()
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    graphs(n).into_iter().filter(Graph::is_connected).collect()
}

/// Forests on exactly `n` vertices up to isomorphism.
pub fn forests(n: usize) -> Vec<Graph> {
    graphs(n).into_iter().filter(Graph::is_forest).collect()
}

/// Rooted graphs on exactly `n` vertices with `k` roots, up to
/// root-respecting isomorphism.
pub fn rooted_graphs(n: usize, k: usize) -> Vec<RootedGraph> {
    let mut seen: BTreeMap<CanonicalRootedGraph, RootedGraph> = BTreeMap::new();
    for g in graphs(n) {
        for roots in ordered_tuples(n, k) {
            let key = canonical_unchecked(&g, &roots);
            seen.entry(key).or_insert_with(|| {
                let (h, r) = canonical_copy(&g, &roots);
                RootedGraph::new(h, r).expect("distinct roots")
            });
        }
    }
    seen.into_values().collect()
}

/// Connected graphs on `n` vertices with one root, up to isomorphism.
pub fn rooted_connected_graphs(n: usize) -> Vec<RootedGraph> {
    rooted_graphs(n, 1).into_iter().filter(|rg| rg.graph().is_connected()).collect()
}

/// Ordered `k`-tuples of distinct elements of `0..n`.
pub(crate) fn ordered_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !cur.contains(&v) {
                cur.push(v);
                go(n, k, cur, out);
                cur.pop();
            }
        }
    }
    go(n, k, &mut cur, &mut out);
    out
}

/// Rooted trees on exactly `n >= 1` vertices up to isomorphism, each rooted
/// at vertex 0.
///
/// A rooted tree is a root plus a multiset of smaller rooted trees; listing
/// the subtrees in non-increasing `(size, index)` order produces every
/// multiset exactly once.
pub fn rooted_trees(n: usize) -> Vec<Graph> {
    let mut by_size: Vec<Vec<Graph>> = vec![Vec::new(), vec![Graph::new(1)]];
    for size in 2..=n {
        let mut trees = Vec::new();
        let mut chosen: Vec<(usize, usize)> = Vec::new();
        fn go(
            by_size: &[Vec<Graph>],
            left: usize,
            bound: (usize, usize),
            chosen: &mut Vec<(usize, usize)>,
            out: &mut Vec<Graph>,
        ) {
            if left == 0 {
                let mut g = Graph::new(1);
                for &(s, i) in chosen.iter() {
                    let child = g.n();
                    g = g.disjoint_union(&by_size[s][i]);
                    g.add_edge(0, child).expect("fresh child");
                }
                out.push(g);
                return;
            }
            for s in (1..=left.min(bound.0)).rev() {
                let top = if s == bound.0 { bound.1 + 1 } else { by_size[s].len() };
                for i in (0..top.min(by_size[s].len())).rev() {
                    chosen.push((s, i));
                    go(by_size, left - s, (s, i), chosen, out);
                    chosen.pop();
                }
            }
        }
        go(&by_size, size - 1, (size - 1, usize::MAX - 1), &mut chosen, &mut trees);
        by_size.push(trees);
    }
    by_size.get(n).cloned().unwrap_or_default()
}

/// `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    g
}

/// Uniform labelled tree on `n` vertices via a random Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Graph {
    if n <= 2 {
        return Graph::path(n);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &x in &seq {
        degree[x] += 1;
    }
    let mut g = Graph::new(n);
    for &x in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        g.add_edge(leaf, x).expect("in range");
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    g.add_edge(rest[0], rest[1]).expect("two vertices remain");
    g
}

/// A random spanning tree plus each remaining pair independently with
/// probability `p`; always connected.
pub fn random_connected_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = random_tree(rng, n);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_bool(p) {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    g
}
