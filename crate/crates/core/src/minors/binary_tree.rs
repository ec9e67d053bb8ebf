//! Rooted complete-binary-tree minors of rooted trees.

use crate::error::MinorError;
use crate::graph::{Graph, RootedGraph};

/// Largest `h` such that the rooted tree contains the complete binary tree of
/// height `h` as a rooted minor.
///
/// At a vertex `v` the answer is the larger of the best value of a child
/// (stretch the root branch set down to it) and one more than the second
/// largest child value (split into two subtrees). A single vertex hosts only
/// the height-0 tree.
pub fn binary_tree_depth(t: &RootedGraph) -> Result<usize, MinorError> {
    let g = t.graph();
    if !g.is_tree() || t.roots().len() != 1 {
        return Err(MinorError::Precondition("expected a tree with exactly one root".into()));
    }
    let root = t.roots()[0];
    let (order, parent) = dfs_order(g, root);
    let mut best = vec![0usize; g.n()];
    for &v in order.iter().rev() {
        let mut top = [None::<usize>, None];
        for &c in g.neighbors(v) {
            if Some(c) == parent[v] {
                continue;
            }
            let b = best[c];
            if top[0].is_none_or(|x| b > x) {
                top[1] = top[0];
                top[0] = Some(b);
            } else if top[1].is_none_or(|x| b > x) {
                top[1] = Some(b);
            }
        }
        best[v] = match top {
            [Some(a), Some(b)] => a.max(b + 1),
            [Some(a), None] => a,
            _ => 0,
        };
    }
    Ok(best[root])
}

/// Whether `(t, root)` contains the height-`k` complete binary tree as a
/// rooted minor. Height 0 is the single vertex.
pub fn has_rooted_binary_tree_minor(t: &RootedGraph, k: usize) -> Result<bool, MinorError> {
    Ok(binary_tree_depth(t)? >= k)
}

/// Depth of the rooted tree: the largest distance from the root.
pub fn tree_height(g: &Graph, root: usize) -> usize {
    g.bfs_distances(root).map(|d| d.values().copied().max().unwrap_or(0)).unwrap_or(0)
}

fn dfs_order(g: &Graph, root: usize) -> (Vec<usize>, Vec<Option<usize>>) {
    let mut parent = vec![None; g.n()];
    let mut order = Vec::with_capacity(g.n());
    let mut stack = vec![root];
    let mut seen = vec![false; g.n()];
    seen[root] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                parent[u] = Some(v);
                stack.push(u);
            }
        }
    }
    (order, parent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minors::find_rooted_model;

    fn rooted(g: Graph, r: usize) -> RootedGraph {
        RootedGraph::new(g, vec![r]).unwrap()
    }

    #[test]
    fn height_zero_always_fits() {
        assert!(has_rooted_binary_tree_minor(&rooted(Graph::new(1), 0), 0).unwrap());
        assert!(has_rooted_binary_tree_minor(&rooted(Graph::path(5), 2), 0).unwrap());
    }

    #[test]
    fn rooted_path_has_no_branching() {
        assert!(!has_rooted_binary_tree_minor(&rooted(Graph::path(6), 0), 1).unwrap());
        // rooted in the middle the two halves give height 1
        assert!(has_rooted_binary_tree_minor(&rooted(Graph::path(5), 2), 1).unwrap());
    }

    #[test]
    fn binary_tree_contains_itself() {
        for h in 0..4 {
            let b = rooted(Graph::complete_binary_tree(h), 0);
            assert_eq!(binary_tree_depth(&b).unwrap(), h);
        }
    }

    #[test]
    fn agrees_with_model_search() {
        let b2 = RootedGraph::new(Graph::complete_binary_tree(2), vec![0]).unwrap();
        let mut rng_trees = crate::enumerate::rooted_trees(8);
        rng_trees.truncate(120);
        for t in rng_trees {
            let rt = rooted(t, 0);
            let fast = has_rooted_binary_tree_minor(&rt, 2).unwrap();
            let slow = find_rooted_model(&b2, &rt).unwrap().is_some();
            assert_eq!(fast, slow, "{rt:?}");
        }
    }

    #[test]
    fn non_tree_is_rejected() {
        assert!(binary_tree_depth(&rooted(Graph::cycle(4), 0)).is_err());
    }

    #[test]
    fn heights() {
        assert_eq!(tree_height(&Graph::path(5), 0), 4);
        assert_eq!(tree_height(&Graph::complete_binary_tree(3), 0), 3);
    }
}
