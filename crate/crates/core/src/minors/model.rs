//! Branch-and-prune search for minor models.
//!
//! Pattern vertices are placed one at a time. A vertex with an already placed
//! neighbour gets a branch set grown from the free neighbourhood of that
//! neighbour's branch set; the first vertex of each pattern component starts
//! anywhere. Connected sets are enumerated without repetition by the usual
//! include/exclude recursion over the frontier.

use crate::error::MinorError;
use crate::graph::{bits, set_of, Graph, RootedGraph, VertexSet};

/// Node budget used by [`find_model`] and [`find_rooted_model`].
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

/// One branch set per pattern vertex, indexed by pattern vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MinorModel {
    pub branch_sets: Vec<VertexSet>,
}

impl MinorModel {
    /// Union of all branch sets.
    pub fn vertices(&self) -> VertexSet {
        self.branch_sets.iter().flatten().copied().collect()
    }

    /// Disjoint, nonempty, connected branch sets realising every pattern edge.
    pub fn is_valid(&self, h: &Graph, g: &Graph) -> bool {
        if self.branch_sets.len() != h.n() {
            return false;
        }
        let mut seen = VertexSet::new();
        for s in &self.branch_sets {
            if s.is_empty() || s.iter().any(|&v| v >= g.n() || !seen.insert(v)) {
                return false;
            }
            if !g.is_connected_set(s) {
                return false;
            }
        }
        h.edges().all(|(x, y)| {
            self.branch_sets[x].iter().any(|&u| g.neighbors(u).iter().any(|v| self.branch_sets[y].contains(v)))
        })
    }

    /// [`MinorModel::is_valid`] plus the root condition: the `i`-th root of
    /// `g` lies in the branch set of the `i`-th root of `h`.
    pub fn is_valid_rooted(&self, h: &RootedGraph, g: &RootedGraph) -> bool {
        h.roots().len() == g.roots().len()
            && self.is_valid(h.graph(), g.graph())
            && h.roots().iter().zip(g.roots()).all(|(&w, v)| self.branch_sets[w].contains(v))
    }
}

/// Complete minor search with an explicit node budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinorSearch {
    pub budget: u64,
}

impl Default for MinorSearch {
    fn default() -> Self {
        MinorSearch { budget: DEFAULT_NODE_BUDGET }
    }
}

impl MinorSearch {
    pub fn with_budget(budget: u64) -> Self {
        MinorSearch { budget }
    }

    pub fn find(&self, h: &Graph, g: &Graph) -> Result<Option<MinorModel>, MinorError> {
        self.run(h, &[], g, &[])
    }

    pub fn find_rooted(&self, h: &RootedGraph, g: &RootedGraph) -> Result<Option<MinorModel>, MinorError> {
        if h.roots().len() != g.roots().len() {
            return Err(MinorError::RootArityMismatch { pattern: h.roots().len(), host: g.roots().len() });
        }
        self.run(h.graph(), h.roots(), g.graph(), g.roots())
    }

    /// Whether `h` is a minor of `g`.
    pub fn contains(&self, h: &Graph, g: &Graph) -> Result<bool, MinorError> {
        Ok(self.find(h, g)?.is_some())
    }

    fn run(
        &self,
        h: &Graph,
        h_roots: &[usize],
        g: &Graph,
        g_roots: &[usize],
    ) -> Result<Option<MinorModel>, MinorError> {
        if g.n() > 64 {
            return Err(MinorError::HostTooLarge { n: g.n(), limit: 64 });
        }
        if h.n() > g.n() || h.edge_count() > g.edge_count() {
            return Ok(None);
        }
        if h.n() == 0 {
            return Ok(Some(MinorModel { branch_sets: Vec::new() }));
        }
        let mut root_of = vec![None; h.n()];
        for (&w, &v) in h_roots.iter().zip(g_roots) {
            root_of[w] = Some(v);
        }
        let mut st = State {
            h,
            hm: h.masks(),
            gm: g.masks(),
            root_of,
            reserved: g_roots.iter().fold(0, |m, &v| m | (1u64 << v)),
            sets: vec![0; h.n()],
            placed: 0,
            free: if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 },
            nodes: 0,
            budget: self.budget,
        };
        st.free &= !st.reserved;
        if st.place()? {
            Ok(Some(MinorModel { branch_sets: st.sets.iter().map(|&m| set_of(m)).collect() }))
        } else {
            Ok(None)
        }
    }
}

struct State<'a> {
    h: &'a Graph,
    hm: Vec<u64>,
    gm: Vec<u64>,
    root_of: Vec<Option<usize>>,
    /// Host roots not yet handed to their pattern vertex.
    reserved: u64,
    sets: Vec<u64>,
    placed: u64,
    free: u64,
    nodes: u64,
    budget: u64,
}

impl State<'_> {
    fn tick(&mut self) -> Result<(), MinorError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(MinorError::BudgetExhausted(self.budget))
        } else {
            Ok(())
        }
    }

    fn nbhd(&self, s: u64) -> u64 {
        bits(s).fold(0, |m, v| m | self.gm[v]) & !s
    }

    /// Roots first, then the unplaced vertex with most placed neighbours,
    /// then highest degree, then smallest id.
    fn next_vertex(&self) -> Option<usize> {
        let n = self.h.n();
        let unplaced = (0..n).filter(|&x| self.placed & (1 << x) == 0);
        unplaced.max_by_key(|&x| {
            (self.root_of[x].is_some(), (self.hm[x] & self.placed).count_ones(), self.h.degree(x), std::cmp::Reverse(x))
        })
    }

    fn place(&mut self) -> Result<bool, MinorError> {
        let Some(x) = self.next_vertex() else {
            return Ok(true);
        };
        self.tick()?;
        let unplaced = self.h.n() - self.placed.count_ones() as usize;
        let roots_left = self.reserved.count_ones() as usize;
        if (self.free.count_ones() as usize) + roots_left < unplaced {
            return Ok(false);
        }
        // every placed vertex still owed an edge needs a free neighbour
        for y in bits(self.placed) {
            if self.hm[y] & !self.placed != 0 {
                let avail = self.free | self.reserved;
                if self.nbhd(self.sets[y]) & avail == 0 {
                    return Ok(false);
                }
            }
        }
        let placed_nbrs = self.hm[x] & self.placed;
        let anchor = bits(placed_nbrs).next();
        let own_root = self.root_of[x];
        let mut allowed = self.free;
        if let Some(r) = own_root {
            allowed |= 1 << r;
        }
        let starts: Vec<usize> = match (own_root, anchor) {
            (Some(r), _) => vec![r],
            (None, Some(y)) => bits(self.nbhd(self.sets[y]) & allowed).collect(),
            (None, None) => bits(allowed).collect(),
        };
        let mut banned = 0u64;
        for s in starts {
            let set = 1u64 << s;
            let frontier = self.gm[s] & allowed & !banned & !set;
            if self.grow(x, set, frontier, banned | set, allowed & !banned)? {
                return Ok(true);
            }
            banned |= 1 << s;
        }
        Ok(false)
    }

    /// Enumerates connected sets `S ⊇ set` inside `allowed`, never using a
    /// vertex of `excluded` outside `set`.
    fn grow(&mut self, x: usize, set: u64, frontier: u64, excluded: u64, allowed: u64) -> Result<bool, MinorError> {
        let remaining = self.h.n() - self.placed.count_ones() as usize - 1;
        if (((self.free | self.reserved) & !set).count_ones() as usize) < remaining {
            return Ok(false);
        }
        if self.try_set(x, set)? {
            return Ok(true);
        }
        let mut frontier = frontier & !excluded;
        let mut excluded = excluded;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let next = set | (1 << v);
            let nf = (frontier | self.gm[v]) & allowed & !excluded & !next;
            if self.grow(x, next, nf, excluded | (1 << v), allowed)? {
                return Ok(true);
            }
            excluded |= 1 << v;
        }
        Ok(false)
    }

    fn try_set(&mut self, x: usize, set: u64) -> Result<bool, MinorError> {
        self.tick()?;
        let nb = self.nbhd(set);
        for y in bits(self.hm[x] & self.placed) {
            if nb & self.sets[y] == 0 {
                return Ok(false);
            }
        }
        // each unplaced pattern neighbour needs its own vertex next to `set`
        let unplaced_nbrs = (self.hm[x] & !self.placed & !(1 << x)).count_ones();
        if (nb & (self.free | self.reserved) & !set).count_ones() < unplaced_nbrs {
            return Ok(false);
        }
        self.sets[x] = set;
        self.placed |= 1 << x;
        let (old_free, old_reserved) = (self.free, self.reserved);
        self.free &= !set;
        self.reserved &= !set;
        let ok = self.place()?;
        if !ok {
            self.placed &= !(1 << x);
            self.sets[x] = 0;
            self.free = old_free;
            self.reserved = old_reserved;
        }
        Ok(ok)
    }
}

/// [`MinorSearch::find`] with the default budget.
pub fn find_model(h: &Graph, g: &Graph) -> Result<Option<MinorModel>, MinorError> {
    MinorSearch::default().find(h, g)
}

/// [`MinorSearch::find_rooted`] with the default budget.
pub fn find_rooted_model(h: &RootedGraph, g: &RootedGraph) -> Result<Option<MinorModel>, MinorError> {
    MinorSearch::default().find_rooted(h, g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rooted(g: Graph, roots: &[usize]) -> RootedGraph {
        RootedGraph::new(g, roots.to_vec()).unwrap()
    }

    #[test]
    fn edge_in_any_graph_with_an_edge() {
        let g = Graph::from_edges(5, [(3, 4)]).unwrap();
        let m = find_model(&Graph::complete(2), &g).unwrap().unwrap();
        assert!(m.is_valid(&Graph::complete(2), &g));
        assert!(find_model(&Graph::complete(2), &Graph::new(5)).unwrap().is_none());
    }

    #[test]
    fn triangle_in_five_cycle() {
        let c5 = Graph::cycle(5);
        let m = find_model(&Graph::complete(3), &c5).unwrap().unwrap();
        assert!(m.is_valid(&Graph::complete(3), &c5));
        assert_eq!(m.vertices().len(), 5);
    }

    #[test]
    fn no_cycle_in_forests() {
        for g in [Graph::path(8), Graph::complete_binary_tree(3), Graph::star(6)] {
            assert!(find_model(&Graph::complete(3), &g).unwrap().is_none());
        }
    }

    #[test]
    fn claw_needs_four_vertices() {
        assert!(find_model(&Graph::star(3), &Graph::complete(3)).unwrap().is_none());
        assert!(find_model(&Graph::star(3), &Graph::complete(4)).unwrap().is_some());
    }

    #[test]
    fn rooted_examples() {
        let m = find_rooted_model(&rooted(Graph::new(1), &[0]), &rooted(Graph::cycle(4), &[2])).unwrap().unwrap();
        assert!(m.branch_sets[0].contains(&2));

        let k2 = rooted(Graph::complete(2), &[0]);
        let p3 = rooted(Graph::path(3), &[1]);
        let m = find_rooted_model(&k2, &p3).unwrap().unwrap();
        assert!(m.is_valid_rooted(&k2, &p3));

        let both = rooted(Graph::complete(2), &[0, 1]);
        let apart = rooted(Graph::new(2), &[0, 1]);
        assert!(find_rooted_model(&both, &apart).unwrap().is_none());
    }

    #[test]
    fn rooted_model_respects_root_order() {
        // host path 0-1-2-3 with roots (0, 3); pattern path a-b-c with roots (a, c)
        let h = rooted(Graph::path(3), &[0, 2]);
        let g = rooted(Graph::path(4), &[0, 3]);
        let m = find_rooted_model(&h, &g).unwrap().unwrap();
        assert!(m.is_valid_rooted(&h, &g));
        // roots (middle, end) cannot map onto the two ends of a short path
        let h = rooted(Graph::path(3), &[1, 2]);
        let g = rooted(Graph::path(3), &[0, 2]);
        assert!(find_rooted_model(&h, &g).unwrap().is_none());
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let h = rooted(Graph::complete(2), &[0]);
        let g = rooted(Graph::complete(3), &[0, 1]);
        assert_eq!(find_rooted_model(&h, &g), Err(MinorError::RootArityMismatch { pattern: 1, host: 2 }));
    }

    #[test]
    fn budget_exhaustion_is_distinct() {
        let search = MinorSearch::with_budget(3);
        let err = search.find(&Graph::complete(4), &Graph::cycle(10)).unwrap_err();
        assert_eq!(err, MinorError::BudgetExhausted(3));
        assert!(err.is_budget());
    }

    #[test]
    fn k4_in_wheel_but_not_in_outerplanar() {
        // wheel with hub 0 and rim 1..5
        let mut wheel = Graph::new(6);
        for i in 1..=5 {
            wheel.add_edge(0, i).unwrap();
            wheel.add_edge(i, i % 5 + 1).unwrap();
        }
        assert!(find_model(&Graph::complete(4), &wheel).unwrap().is_some());
        // fan: a path plus one vertex adjacent to all of it, outerplanar
        let mut fan = Graph::path(6);
        for i in 0..5 {
            fan.add_edge(5, i).ok();
        }
        assert!(find_model(&Graph::complete(4), &fan).unwrap().is_none());
    }
}
