//! Simple undirected graphs over dense vertex ids, rooted graphs and separations.
//!
//! Every operation that removes or merges vertices returns a fresh [`Graph`]
//! together with the id mapping it applied; nothing is mutated in place once a
//! graph has been built.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::GraphError;

/// Sorted set of vertex ids.
pub type VertexSet = BTreeSet<usize>;

/// A finite simple undirected graph on the vertices `0..n`.
///
/// Adjacency lists are kept sorted and symmetric, so two graphs compare equal
/// exactly when they have the same labelled edge set.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list. Repeated edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts the edge `uv`. Returns `Ok(false)` if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(true)
            }
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted neighbours of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nb)| nb.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        (0..self.n()).collect()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<(), GraphError> {
        match s.iter().next_back() {
            Some(&v) => self.check_vertex(v),
            None => Ok(()),
        }
    }

    /// The subgraph induced by `s`, renumbered in increasing order of the old
    /// ids, and the old→new mapping.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, BTreeMap<usize, usize>), GraphError> {
        let sub = self.induced(s)?;
        let map = sub.to_old.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        Ok((sub.graph, map))
    }

    /// Same as [`Graph::induced_subgraph`] but with a dense mapping, which is
    /// what the algorithms in this crate work with.
    pub fn induced(&self, s: &VertexSet) -> Result<Subgraph, GraphError> {
        self.check_set(s)?;
        let to_old: Vec<usize> = s.iter().copied().collect();
        let mut to_new = vec![usize::MAX; self.n()];
        for (i, &v) in to_old.iter().enumerate() {
            to_new[v] = i;
        }
        let adj = to_old
            .iter()
            .map(|&v| self.adj[v].iter().filter_map(|&u| (to_new[u] != usize::MAX).then_some(to_new[u])).collect())
            .collect();
        Ok(Subgraph { graph: Graph { adj }, to_old })
    }

    /// `G - s`.
    pub fn remove_vertices(&self, s: &VertexSet) -> Result<Subgraph, GraphError> {
        self.check_set(s)?;
        let keep: VertexSet = (0..self.n()).filter(|v| !s.contains(v)).collect();
        self.induced(&keep)
    }

    /// Contracts the edge `uv`. The merged vertex takes the smaller of the two
    /// ids and every id above the larger one shifts down by one. Loops and
    /// parallel edges produced by the contraction are dropped.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let (keep, drop) = if u < v { (u, v) } else { (v, u) };
        let relabel = |x: usize| -> usize {
            if x == drop {
                keep
            } else if x > drop {
                x - 1
            } else {
                x
            }
        };
        let mut g = Graph::new(self.n() - 1);
        for (a, b) in self.edges() {
            let (a, b) = (relabel(a), relabel(b));
            if a != b {
                g.add_edge(a, b).expect("relabelled ids are in range");
            }
        }
        Ok(g)
    }

    /// Vertex sets of the connected components, each sorted, listed by their
    /// smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = VertexSet::new();
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Breadth-first distances from `w`; unreachable vertices are absent.
    pub fn bfs_distances(&self, w: usize) -> Result<BTreeMap<usize, usize>, GraphError> {
        self.check_vertex(w)?;
        let mut dist = BTreeMap::new();
        dist.insert(w, 0);
        let mut queue = VecDeque::from([w]);
        while let Some(v) = queue.pop_front() {
            let d = dist[&v];
            for &u in &self.adj[v] {
                if let std::collections::btree_map::Entry::Vacant(e) = dist.entry(u) {
                    e.insert(d + 1);
                    queue.push_back(u);
                }
            }
        }
        Ok(dist)
    }

    /// A shortest path from `from` to the nearest vertex of `targets`
    /// (ties broken by smallest id), as a vertex list starting at `from`.
    pub fn shortest_path_to_set(&self, from: usize, targets: &VertexSet) -> Option<Vec<usize>> {
        if targets.contains(&from) {
            return Some(vec![from]);
        }
        let mut parent = vec![usize::MAX; self.n()];
        parent[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            for &u in &self.adj[v] {
                if parent[u] == usize::MAX {
                    parent[u] = v;
                    if targets.contains(&u) {
                        let mut path = vec![u];
                        let mut x = u;
                        while x != from {
                            x = parent[x];
                            path.push(x);
                        }
                        path.reverse();
                        return Some(path);
                    }
                    queue.push_back(u);
                }
            }
        }
        None
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|nb| nb.iter().map(|&u| u + off).collect()));
        Graph { adj }
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.connected_components().len() == self.n()
    }

    pub fn is_tree(&self) -> bool {
        self.n() > 0 && self.is_connected() && self.edge_count() + 1 == self.n()
    }

    /// Whether `s` induces a connected subgraph (the empty set does not).
    pub fn is_connected_set(&self, s: &VertexSet) -> bool {
        let Some(&start) = s.iter().next() else {
            return false;
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &u in &self.adj[v] {
                if s.contains(&u) && seen.insert(u) {
                    stack.push(u);
                }
            }
        }
        seen.len() == s.len()
    }

    /// Adjacency as bitmasks; only meaningful for `n <= 64`.
    pub(crate) fn masks(&self) -> Vec<u64> {
        debug_assert!(self.n() <= 64);
        self.adj.iter().map(|nb| nb.iter().fold(0u64, |m, &u| m | (1 << u))).collect()
    }

    // -- named graphs -------------------------------------------------------

    /// Path on `n` vertices `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    /// Cycle `0-1-...-(n-1)-0`; needs `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Self {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("valid clique")
    }

    /// Star `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Self {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("valid star")
    }

    /// Complete binary tree of height `h` in heap order (root 0, children of
    /// `i` are `2i+1` and `2i+2`).
    pub fn complete_binary_tree(h: usize) -> Self {
        let n = (1usize << (h + 1)) - 1;
        Graph::from_edges(n, (1..n).map(|i| ((i - 1) / 2, i))).expect("valid tree")
    }

    /// `copies` disjoint copies of `self`.
    pub fn repeat(&self, copies: usize) -> Graph {
        (0..copies).fold(Graph::new(0), |acc, _| acc.disjoint_union(self))
    }
}

/// An induced subgraph together with the ids it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    /// `to_old[new] = old`, increasing.
    pub to_old: Vec<usize>,
}

impl Subgraph {
    pub fn lift(&self, v: usize) -> usize {
        self.to_old[v]
    }

    pub fn lift_set(&self, s: &VertexSet) -> VertexSet {
        s.iter().map(|&v| self.to_old[v]).collect()
    }

    /// New id of an old vertex, if it survived.
    pub fn project(&self, old: usize) -> Option<usize> {
        self.to_old.binary_search(&old).ok()
    }

    pub fn project_set(&self, s: &VertexSet) -> VertexSet {
        s.iter().filter_map(|&v| self.project(v)).collect()
    }
}

/// A graph with an ordered sequence of distinct roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootedGraph {
    graph: Graph,
    roots: Vec<usize>,
}

impl RootedGraph {
    pub fn new(graph: Graph, roots: Vec<usize>) -> Result<Self, GraphError> {
        let mut seen = BTreeSet::new();
        for &r in &roots {
            graph.check_vertex(r)?;
            if !seen.insert(r) {
                return Err(GraphError::DuplicateRoot(r));
            }
        }
        Ok(RootedGraph { graph, roots })
    }

    pub fn unrooted(graph: Graph) -> Self {
        RootedGraph { graph, roots: Vec::new() }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }
}

/// A separation `(G1, G2)` given by the two vertex sets; both sides are
/// understood as induced subgraphs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Separation {
    pub left: VertexSet,
    pub right: VertexSet,
}

impl Separation {
    pub fn new(left: VertexSet, right: VertexSet) -> Self {
        Separation { left, right }
    }

    pub fn cut(&self) -> VertexSet {
        self.left.intersection(&self.right).copied().collect()
    }

    /// `|left ∩ right|`.
    pub fn order(&self) -> usize {
        self.left.intersection(&self.right).count()
    }

    /// See [`validate_separation`].
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        validate_separation(g, self)
    }
}

/// True iff the sides cover `V(g)` and no edge joins `left \ right` to
/// `right \ left`. Containment of one side in the other is allowed.
pub fn validate_separation(g: &Graph, sep: &Separation) -> bool {
    let n = g.n();
    if sep.left.iter().chain(&sep.right).any(|&v| v >= n) {
        return false;
    }
    if (0..n).any(|v| !sep.left.contains(&v) && !sep.right.contains(&v)) {
        return false;
    }
    g.edges().all(|(u, v)| {
        let only_left = |x: usize| sep.left.contains(&x) && !sep.right.contains(&x);
        let only_right = |x: usize| sep.right.contains(&x) && !sep.left.contains(&x);
        !(only_left(u) && only_right(v) || only_right(u) && only_left(v))
    })
}

/// Iterates the set bits of a mask, lowest first.
pub(crate) fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

pub(crate) fn mask_of(s: &VertexSet) -> u64 {
    s.iter().fold(0, |m, &v| m | (1u64 << v))
}

pub(crate) fn set_of(m: u64) -> VertexSet {
    bits(m).collect()
}
