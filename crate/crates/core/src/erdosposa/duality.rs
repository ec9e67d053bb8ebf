//! Packing and transversal of comparable size for families with a forest.
//!
//! The forest `F` of the family is completed to a tree `T`. The tree stage
//! works component by component: graphs of pathwidth at most `|T| - 2` go to
//! the bounded-pathwidth routine; otherwise a subgraph of pathwidth at least
//! `|T| - 1`, which contains `T` as a minor, is harvested: one `T`-model joins
//! the packing, all its vertices join the transversal, and the rest of the
//! graph is handled recursively. What survives the tree transversal has
//! pathwidth below `|T| - 1`, and the bounded-pathwidth routine finishes
//! the family.
//!
//! In faithful mode the harvested subgraph comes from the small-subgraph
//! search; a separation outcome is cut down to `r` vertices on the small side
//! and either harvested or replaced through the folio reduction. In practical
//! mode the harvested subgraph is a minimal connected one of pathwidth at
//! least `|T| - 1`, and the final transversal is pruned vertex by vertex.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::ErdosPosaError;
use crate::graph::{Graph, VertexSet};
use crate::minors::{MinorModel, MinorSearch, Reducer, REDUCTION_SIZE_CAP};
use crate::pathwidth::{refine_separation, PathwidthSolver, TSeparation};

use super::bounded_pw::bounded_pw_duality_with;
use super::family::{lift_model, Family, Packing, Transversal};
use super::forest::tree_from_forest;
use super::main_pw::{
    find_small_pw_subgraph_with, minimal_pw_subgraph_with, ConstantsSource, LiteralConstants, Magnitude, SmallPwOutcome,
};

/// Size of the small side after refining a separation outcome; one more than
/// the largest replacement the reduction may produce, so every reduction
/// shrinks the graph.
pub const SEPARATION_SIZE: usize = REDUCTION_SIZE_CAP + 1;

static LITERAL: LiteralConstants = LiteralConstants;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Faithful,
    Practical,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Faithful => "faithful",
            Mode::Practical => "practical",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "faithful" => Ok(Mode::Faithful),
            "practical" => Ok(Mode::Practical),
            other => Err(format!("unknown mode '{other}', expected faithful or practical")),
        }
    }
}

/// A verified-by-construction pair of packing and transversal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityCertificate {
    pub mode: Mode,
    pub packing: Packing,
    pub transversal: Transversal,
    /// The factor `c` with `|X| <= c·max(1, |P|)` for this run.
    pub constant_used: Magnitude,
    /// Set when faithful mode had to fall back to the practical steps, or a
    /// lifted packing came back smaller.
    pub degraded: bool,
}

impl DualityCertificate {
    /// `|X| / max(1, |P|)`.
    pub fn ratio(&self) -> f64 {
        self.transversal.size() as f64 / self.packing.size().max(1) as f64
    }
}

/// Knobs of the driver.
#[derive(Clone, Copy)]
pub struct DualityConfig<'a> {
    pub mode: Mode,
    pub constants: &'a dyn ConstantsSource,
    pub solver: PathwidthSolver,
    pub search: MinorSearch,
    pub reducer: Reducer,
    /// Size of the small side of a refined separation.
    pub r: usize,
}

impl DualityConfig<'static> {
    pub fn new(mode: Mode) -> Self {
        DualityConfig {
            mode,
            constants: &LITERAL,
            solver: PathwidthSolver::default(),
            search: MinorSearch::default(),
            reducer: Reducer::default(),
            r: SEPARATION_SIZE,
        }
    }
}

/// The driver with default settings.
pub fn ep_duality(fam: &Family, g: &Graph, mode: Mode) -> Result<DualityCertificate, ErdosPosaError> {
    ep_duality_with(&DualityConfig::new(mode), fam, g)
}

pub fn ep_duality_with(cfg: &DualityConfig<'_>, fam: &Family, g: &Graph) -> Result<DualityCertificate, ErdosPosaError> {
    let forest_index = fam.forest_index().ok_or(ErdosPosaError::NoForest)?;
    let tree = tree_from_forest(&fam.members()[forest_index])?;
    let t = tree.n();
    let mut stage =
        TreeStage { cfg, tree_fam: Family::single(tree.clone())?, tree, t, degraded: false, max_harvest: 0 };
    let (tree_models, x) = stage.run(g)?;

    let rest = g.remove_vertices(&x)?;
    let mut transversal = x;
    let mut forest_stage = Packing::default();
    if rest.graph.n() > 0 {
        let (w, pd) = cfg.solver.exact(&rest.graph)?;
        let (p, y) = bounded_pw_duality_with(&cfg.search, fam, &rest.graph, &pd, w + 1)?;
        forest_stage = p.lift(&rest);
        transversal.extend(rest.lift_set(&y.vertices));
    }
    // a T-model is an F-model with the same branch sets, since F ⊆ T
    let as_forest = Packing { models: tree_models.into_iter().map(|m| (forest_index, m)).collect() };
    let packing = if forest_stage.size() > as_forest.size() { forest_stage } else { as_forest };

    if cfg.mode == Mode::Practical {
        transversal = prune(&cfg.search, fam, g, transversal)?;
    }
    let extra = BigUint::from(2 * fam.q() * fam.r() * t);
    let base = match cfg.mode {
        Mode::Faithful => match cfg.constants.f(t - 1, cfg.r) {
            Some(f) => Magnitude::from_usize(f.max(1).max(2 * (t - 1)).max(cfg.r)),
            None => Magnitude::Astronomical,
        },
        Mode::Practical => Magnitude::from_usize(stage.max_harvest.max(1).max(2 * (t - 1))),
    };
    let constant_used = match base {
        Magnitude::Finite(c) => Magnitude::Finite(c + extra),
        Magnitude::Astronomical => Magnitude::Astronomical,
    };
    Ok(DualityCertificate {
        mode: cfg.mode,
        packing,
        transversal: Transversal::new(transversal),
        constant_used,
        degraded: stage.degraded,
    })
}

/// Drops transversal vertices, smallest first, while the rest still meets
/// every member model.
fn prune(search: &MinorSearch, fam: &Family, g: &Graph, x: VertexSet) -> Result<VertexSet, ErdosPosaError> {
    let mut x = x;
    for v in x.clone() {
        x.remove(&v);
        let rest = g.remove_vertices(&x)?;
        if fam.has_member_minor(search, &rest.graph)? {
            x.insert(v);
        }
    }
    Ok(x)
}

/// Re-checks both halves of a certificate against `g` from scratch.
pub fn verify_certificate(fam: &Family, g: &Graph, cert: &DualityCertificate) -> bool {
    cert.packing.is_valid(fam, g) && cert.transversal.is_valid(fam, g, &MinorSearch::default()).unwrap_or(false)
}

struct TreeStage<'c> {
    cfg: &'c DualityConfig<'c>,
    tree: Graph,
    tree_fam: Family,
    t: usize,
    degraded: bool,
    max_harvest: usize,
}

type Stage = (Vec<MinorModel>, VertexSet);

impl TreeStage<'_> {
    fn run(&mut self, g: &Graph) -> Result<Stage, ErdosPosaError> {
        if g.n() == 0 {
            return Ok(Stage::default());
        }
        let comps = g.connected_components();
        if comps.len() > 1 {
            let mut out = Stage::default();
            for comp in comps {
                let sub = g.induced(&comp)?;
                let (models, x) = self.run(&sub.graph)?;
                out.0.extend(models.iter().map(|m| lift_model(&sub, m)));
                out.1.extend(sub.lift_set(&x));
            }
            return Ok(out);
        }
        let (pw, pd) = self.cfg.solver.exact(g)?;
        if pw + 2 <= self.t {
            let (p, x) = bounded_pw_duality_with(&self.cfg.search, &self.tree_fam, g, &pd, self.t - 1)?;
            return Ok((p.models.into_iter().map(|(_, m)| m).collect(), x.vertices));
        }
        match self.cfg.mode {
            Mode::Practical => self.harvest_minimal(g),
            Mode::Faithful => {
                match find_small_pw_subgraph_with(self.cfg.constants, &self.cfg.solver, g, 0, self.t - 1, self.cfg.r) {
                    Ok(SmallPwOutcome::Subgraph(s)) => self.harvest(g, &s),
                    Ok(SmallPwOutcome::Separation(ts)) => self.separation(g, &ts),
                    Err(ErdosPosaError::ConstantsTooSmall(_)) => {
                        self.degraded = true;
                        self.harvest_minimal(g)
                    }
                    Err(e) => Err(e),
                }
            }
        }
    }

    fn harvest_minimal(&mut self, g: &Graph) -> Result<Stage, ErdosPosaError> {
        let s = minimal_pw_subgraph_with(&self.cfg.solver, g, self.t - 1)?;
        self.harvest(g, &s)
    }

    /// `G[s]` has pathwidth at least `|T| - 1` and so a `T`-model; take it
    /// and recurse on `G - s`.
    fn harvest(&mut self, g: &Graph, s: &VertexSet) -> Result<Stage, ErdosPosaError> {
        let sub = g.induced(s)?;
        let model = self
            .cfg
            .search
            .find(&self.tree, &sub.graph)?
            .ok_or_else(|| ErdosPosaError::Precondition("the harvested subgraph has no tree model".into()))?;
        self.max_harvest = self.max_harvest.max(s.len());
        let rest = g.remove_vertices(s)?;
        let (models, x) = self.run(&rest.graph)?;
        let mut out: Stage = (models.iter().map(|m| lift_model(&rest, m)).collect(), rest.lift_set(&x));
        out.0.push(lift_model(&sub, &model));
        out.1.extend(s.iter().copied());
        Ok(out)
    }

    fn separation(&mut self, g: &Graph, ts: &TSeparation) -> Result<Stage, ErdosPosaError> {
        let ell = self.cfg.r.min(ts.sep.left.len()).max(1);
        let refined = refine_separation(g, ts, &VertexSet::new(), ell)?;
        let left = refined.sep.left.clone();
        if self.cfg.search.find(&self.tree, &g.induced(&left)?.graph)?.is_some() {
            return self.harvest(g, &left);
        }
        let (reduced, cert) = match self.cfg.reducer.reduce(g, &refined.sep, &self.tree) {
            Ok(Some(found)) => found,
            Ok(None) => {
                self.degraded = true;
                return self.harvest_minimal(g);
            }
            Err(e) if e.is_budget() => {
                self.degraded = true;
                return self.harvest_minimal(g);
            }
            Err(e) => return Err(e.into()),
        };
        let (models, x) = self.run(&reduced)?;
        let Some(x) = cert.lift_transversal(&self.cfg.search, g, &self.tree, &x)? else {
            self.degraded = true;
            return self.harvest_minimal(g);
        };
        // models that avoid the replacement map back unchanged when still valid
        let mut kept: Vec<MinorModel> = Vec::new();
        let mut used = VertexSet::new();
        for m in &models {
            let mapped: Option<Vec<VertexSet>> = m
                .branch_sets
                .iter()
                .map(|b| b.iter().map(|&v| cert.origin[v]).collect::<Option<VertexSet>>())
                .collect();
            if let Some(branch_sets) = mapped {
                let lifted = MinorModel { branch_sets };
                let verts = lifted.vertices();
                if lifted.is_valid(&self.tree, g) && verts.is_disjoint(&used) {
                    used.extend(verts);
                    kept.push(lifted);
                }
            }
        }
        // refill from what is left
        while kept.len() < models.len() {
            let rest = g.remove_vertices(&used)?;
            match self.cfg.search.find(&self.tree, &rest.graph)? {
                Some(m) => {
                    let m = lift_model(&rest, &m);
                    used.extend(m.vertices());
                    kept.push(m);
                }
                None => {
                    self.degraded = true;
                    break;
                }
            }
        }
        Ok((kept, x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::erdosposa::main_pw::FixedConstants;
    use crate::erdosposa::oracle::Oracle;

    fn fam(h: Graph) -> Family {
        Family::single(h).unwrap()
    }

    #[test]
    fn five_triangles_and_p3() {
        let f = fam(Graph::path(3));
        let g = Graph::complete(3).repeat(5);
        let cert = ep_duality(&f, &g, Mode::Practical).unwrap();
        assert!(verify_certificate(&f, &g, &cert));
        assert_eq!(cert.packing.size(), 5);
        assert_eq!(cert.transversal.size(), 5);
        assert_eq!(cert.ratio(), 1.0);
        assert_eq!(Oracle::with_cap(15).tau(&f, &g).unwrap().0, 5);
    }

    #[test]
    fn edgeless() {
        let f = fam(Graph::complete(2));
        for mode in [Mode::Faithful, Mode::Practical] {
            let cert = ep_duality(&f, &Graph::new(6), mode).unwrap();
            assert!(cert.packing.is_empty() && cert.transversal.is_empty());
        }
    }

    #[test]
    fn p4_in_p4() {
        let f = fam(Graph::path(4));
        let g = Graph::path(4);
        for mode in [Mode::Faithful, Mode::Practical] {
            let cert = ep_duality(&f, &g, mode).unwrap();
            assert!(verify_certificate(&f, &g, &cert));
            assert_eq!(cert.packing.size(), 1);
            assert!(cert.transversal.size() >= 1);
        }
    }

    #[test]
    fn faithful_constant() {
        let f = fam(Graph::complete(2));
        let cert = ep_duality(&f, &Graph::cycle(5), Mode::Faithful).unwrap();
        assert_eq!(cert.constant_used, Magnitude::Astronomical);
        // a single vertex as the forest: f(0, r) = 1 and c = max(1, 0, r, 1) + 2
        let f = fam(Graph::new(1));
        let cert = ep_duality(&f, &Graph::cycle(5), Mode::Faithful).unwrap();
        assert_eq!(cert.constant_used, Magnitude::from_usize(SEPARATION_SIZE + 2));
        assert_eq!(cert.packing.size(), 5);
        assert_eq!(cert.transversal.size(), 5);
    }

    #[test]
    fn no_forest() {
        let f = fam(Graph::complete(3));
        assert_eq!(ep_duality(&f, &Graph::path(3), Mode::Practical), Err(ErdosPosaError::NoForest));
    }

    #[test]
    fn tampered_certificates_fail() {
        let f = fam(Graph::complete(3));
        let f2 = Family::new(vec![Graph::complete(3), Graph::path(5)]).unwrap();
        let g = Graph::complete(3).repeat(2);
        let mut cert = ep_duality(&f2, &g, Mode::Practical).unwrap();
        assert!(verify_certificate(&f2, &g, &cert));
        cert.transversal.vertices.pop_first();
        assert!(!verify_certificate(&f, &g, &cert) || cert.transversal.size() >= 2);
        let m = MinorModel { branch_sets: vec![[0].into(), [1].into(), [2].into()] };
        let bad = DualityCertificate {
            mode: Mode::Practical,
            packing: Packing { models: vec![(0, m.clone()), (0, m)] },
            transversal: Transversal::new([0, 3].into()),
            constant_used: Magnitude::from_usize(1),
            degraded: false,
        };
        assert!(!verify_certificate(&f, &g, &bad));
    }

    #[test]
    fn separation_outcome_with_small_constants() {
        // a long path of triangles: pathwidth 2 everywhere, tree P3 needs pathwidth 2
        let mut g = Graph::new(0);
        for i in 0..8 {
            g = g.disjoint_union(&Graph::complete(3));
            if i > 0 {
                g.add_edge(3 * i - 1, 3 * i).unwrap();
            }
        }
        let f = fam(Graph::path(3));
        let src = FixedConstants { f: 6, delta: 3, d: 3 };
        let cfg = DualityConfig { constants: &src, r: 4, ..DualityConfig::new(Mode::Faithful) };
        let cert = ep_duality_with(&cfg, &f, &g).unwrap();
        assert!(verify_certificate(&f, &g, &cert));
        assert!(cert.transversal.size() >= cert.packing.size());
    }
}
