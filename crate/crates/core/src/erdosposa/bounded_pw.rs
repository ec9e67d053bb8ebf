//! Packing or transversal on graphs of bounded pathwidth.
//!
//! Fix a path decomposition `B_0, .., B_{p-1}` of width below `t`. For a
//! window `[a, b]` of bag indices let `V[a, b]` be the vertices whose bags all
//! lie in the window. A connected subgraph occupies a contiguous run of bags,
//! so models in disjoint windows are vertex-disjoint, and a model of a
//! connected graph avoiding `B_e` lies entirely left or right of `e`.
//!
//! For each component `C` of a member, a left-to-right sweep takes the window
//! starting at the current position with the smallest right end `e` such
//! that `G[V[pos, e]]` has a `C` minor, then continues at `e + 1`. The sweep
//! yields disjoint windows, and when it runs dry the bags at the right ends
//! meet every `C`-model of `G`.

use crate::error::{ErdosPosaError, PathwidthError};
use crate::graph::{Graph, Subgraph, VertexSet};
use crate::minors::{MinorModel, MinorSearch};
use crate::pathwidth::PathDecomposition;

use super::family::{lift_model, Family, Packing, Transversal};
use super::intervals::select_disjoint_subpaths;

/// Result of one round: `s` disjoint member models, or a transversal of at
/// most `s·q·r·t` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PackingOrTransversal {
    Packing(Packing),
    Transversal(Transversal),
}

/// Either `s` vertex-disjoint models of one member, or a transversal made of
/// fewer than `s·c_i` bags per member.
pub fn packing_or_transversal_bounded_pw(
    fam: &Family,
    g: &Graph,
    pd: &PathDecomposition,
    t: usize,
    s: usize,
) -> Result<PackingOrTransversal, ErdosPosaError> {
    let windows = Windows::new(g, pd, t)?;
    windows.round(&MinorSearch::default(), fam, s)
}

/// Runs rounds with `s = 1, 2, ..` until a transversal appears and returns
/// it with the packing of the previous round. The transversal has at most
/// `(|packing| + 1)·q·r·t` vertices, and none when no member is a minor of
/// `g`.
pub fn bounded_pw_duality(
    fam: &Family,
    g: &Graph,
    pd: &PathDecomposition,
    t: usize,
) -> Result<(Packing, Transversal), ErdosPosaError> {
    bounded_pw_duality_with(&MinorSearch::default(), fam, g, pd, t)
}

pub(crate) fn bounded_pw_duality_with(
    search: &MinorSearch,
    fam: &Family,
    g: &Graph,
    pd: &PathDecomposition,
    t: usize,
) -> Result<(Packing, Transversal), ErdosPosaError> {
    let windows = Windows::new(g, pd, t)?;
    if !fam.has_member_minor(search, g)? {
        return Ok((Packing::default(), Transversal::default()));
    }
    let mut best = Packing::default();
    for s in 1.. {
        match windows.round(search, fam, s)? {
            PackingOrTransversal::Packing(p) => best = p,
            PackingOrTransversal::Transversal(x) => return Ok((best, x)),
        }
    }
    unreachable!("a packing never exceeds the vertex count")
}

struct Windows<'a> {
    g: &'a Graph,
    pd: &'a PathDecomposition,
    /// Vertices with their bag interval, by left end.
    spans: Vec<(usize, usize, usize)>,
}

impl<'a> Windows<'a> {
    fn new(g: &'a Graph, pd: &'a PathDecomposition, t: usize) -> Result<Self, ErdosPosaError> {
        if !pd.is_valid_for(g) {
            return Err(PathwidthError::InvalidDecomposition.into());
        }
        if t == 0 {
            return Err(ErdosPosaError::Precondition("the width bound t must be at least 1".into()));
        }
        if g.n() > 0 && pd.width() + 1 > t {
            return Err(PathwidthError::WidthTooLarge { width: pd.width(), limit: t - 1 }.into());
        }
        let iv = pd.intervals().expect("validated");
        let mut spans: Vec<(usize, usize, usize)> = iv.iter().map(|(&v, &(a, b))| (a, b, v)).collect();
        spans.sort_unstable();
        Ok(Windows { g, pd, spans })
    }

    fn inside(&self, a: usize, b: usize) -> VertexSet {
        self.spans.iter().filter(|&&(l, r, _)| l >= a && r <= b).map(|&(_, _, v)| v).collect()
    }

    /// Smallest `e >= a` such that `G[V[a, e]]` has a `c` minor.
    fn earliest_end(&self, search: &MinorSearch, c: &Graph, a: usize) -> Result<Option<usize>, ErdosPosaError> {
        let mut last_size = usize::MAX;
        for e in a..self.pd.len() {
            let v = self.inside(a, e);
            if v.len() < c.n() || v.len() == last_size {
                continue;
            }
            last_size = v.len();
            let sub = self.g.induced(&v)?;
            if search.find(c, &sub.graph)?.is_some() {
                return Ok(Some(e));
            }
        }
        Ok(None)
    }

    /// The sweep for one connected graph, stopping once `need` windows are
    /// found.
    fn sweep(&self, search: &MinorSearch, c: &Graph, need: usize) -> Result<Vec<(usize, usize)>, ErdosPosaError> {
        let mut out = Vec::new();
        let mut pos = 0;
        while out.len() < need && pos < self.pd.len() {
            match self.earliest_end(search, c, pos)? {
                Some(e) => {
                    out.push((pos, e));
                    pos = e + 1;
                }
                None => break,
            }
        }
        Ok(out)
    }

    fn round(&self, search: &MinorSearch, fam: &Family, s: usize) -> Result<PackingOrTransversal, ErdosPosaError> {
        if s == 0 {
            return Ok(PackingOrTransversal::Packing(Packing::default()));
        }
        let mut x = VertexSet::new();
        for (i, h) in fam.members().iter().enumerate() {
            let comps = h.connected_components();
            let need = s * comps.len();
            let mut found = Vec::with_capacity(comps.len());
            let mut hit: Option<VertexSet> = None;
            for comp in &comps {
                let c = h.induced(comp)?;
                let windows = self.sweep(search, &c.graph, need)?;
                if windows.len() < need {
                    let ends: VertexSet = windows.iter().flat_map(|&(_, e)| self.pd.bags[e].iter().copied()).collect();
                    if hit.as_ref().is_none_or(|b| ends.len() < b.len()) {
                        hit = Some(ends);
                    }
                }
                found.push((c, windows));
            }
            match hit {
                Some(ends) => x.extend(ends),
                None => return self.assemble(search, i, h, &found, s).map(PackingOrTransversal::Packing),
            }
        }
        Ok(PackingOrTransversal::Transversal(Transversal::new(x)))
    }

    /// Every component has `s·c` disjoint windows: pick `s` per component,
    /// all disjoint, and glue one model of each component into `s` models of
    /// the member.
    fn assemble(
        &self,
        search: &MinorSearch,
        i: usize,
        h: &Graph,
        found: &[(Subgraph, Vec<(usize, usize)>)],
        s: usize,
    ) -> Result<Packing, ErdosPosaError> {
        let families: Vec<Vec<(usize, usize)>> =
            found.iter().map(|(_, w)| w.iter().map(|&(a, b)| (a + 1, b + 1)).collect()).collect();
        let x = vec![s; found.len()];
        let picks = select_disjoint_subpaths(self.pd.len(), &families, &x)?;
        let mut models: Vec<MinorModel> =
            (0..s).map(|_| MinorModel { branch_sets: vec![VertexSet::new(); h.n()] }).collect();
        for ((c, _), chosen) in found.iter().zip(&picks) {
            for (k, &(a, b)) in chosen.iter().enumerate() {
                let window = self.g.induced(&self.inside(a - 1, b - 1))?;
                let m = search.find(&c.graph, &window.graph)?.expect("the window was chosen for this model");
                let m = lift_model(&window, &m);
                for (local, set) in m.branch_sets.into_iter().enumerate() {
                    models[k].branch_sets[c.lift(local)] = set;
                }
            }
        }
        Ok(Packing { models: models.into_iter().map(|m| (i, m)).collect() })
    }
}
