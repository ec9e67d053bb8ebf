//! Deleting at most `k` vertices to bring pathwidth below `t`.
//!
//! Components are solved separately with the smallest budget that works for
//! each. A connected graph of pathwidth at least `t` contains a small
//! connected subgraph of pathwidth at least `t`; every solution deletes one of
//! its vertices, so the search branches on nonempty subsets of it.

use crate::error::ErdosPosaError;
use crate::graph::{Graph, VertexSet};
use crate::minors::subsets_of_size;
use crate::pathwidth::PathwidthSolver;

use super::duality::{Mode, SEPARATION_SIZE};
use super::main_pw::{
    find_small_pw_subgraph_with, minimal_pw_subgraph_with, ConstantsSource, LiteralConstants, SmallPwOutcome,
};

static LITERAL: LiteralConstants = LiteralConstants;

/// Knobs of the branching algorithm.
#[derive(Clone, Copy)]
pub struct FptConfig<'a> {
    /// Faithful mode branches on the subgraph from the small-subgraph search
    /// when it returns one; practical mode always uses a minimal subgraph.
    pub mode: Mode,
    pub constants: &'a dyn ConstantsSource,
    pub solver: PathwidthSolver,
    pub r: usize,
}

impl FptConfig<'static> {
    pub fn new(mode: Mode) -> Self {
        FptConfig { mode, constants: &LITERAL, solver: PathwidthSolver::default(), r: SEPARATION_SIZE }
    }
}

/// A set of at most `k` vertices whose removal leaves pathwidth below `t`,
/// or `None` if there is none.
pub fn fpt_pw_deletion(g: &Graph, t: usize, k: usize) -> Result<Option<VertexSet>, ErdosPosaError> {
    fpt_pw_deletion_with(&FptConfig::new(Mode::Practical), g, t, k)
}

pub fn fpt_pw_deletion_with(
    cfg: &FptConfig<'_>,
    g: &Graph,
    t: usize,
    k: usize,
) -> Result<Option<VertexSet>, ErdosPosaError> {
    if t == 0 {
        return Err(ErdosPosaError::Precondition("pathwidth bound must be at least 1".into()));
    }
    solve(cfg, g, t, k)
}

fn solve(cfg: &FptConfig<'_>, g: &Graph, t: usize, k: usize) -> Result<Option<VertexSet>, ErdosPosaError> {
    if g.n() == 0 {
        return Ok(Some(VertexSet::new()));
    }
    let comps = g.connected_components();
    if comps.len() > 1 {
        let mut out = VertexSet::new();
        for comp in comps {
            let sub = g.induced(&comp)?;
            let left = k - out.len();
            let mut found = None;
            for ell in 0..=left {
                if let Some(x) = solve(cfg, &sub.graph, t, ell)? {
                    found = Some(x);
                    break;
                }
            }
            match found {
                Some(x) => out.extend(sub.lift_set(&x)),
                None => return Ok(None),
            }
        }
        return Ok(Some(out));
    }
    if cfg.solver.at_most(g, t - 1)?.is_some() {
        return Ok(Some(VertexSet::new()));
    }
    if k == 0 {
        return Ok(None);
    }
    let s = obstruction(cfg, g, t)?;
    let s: Vec<usize> = s.into_iter().collect();
    for size in 1..=k.min(s.len()) {
        for y in subsets_of_size(&s, size) {
            let y: VertexSet = y.into_iter().collect();
            let rest = g.remove_vertices(&y)?;
            if let Some(z) = solve(cfg, &rest.graph, t, k - size)? {
                let mut x = y;
                x.extend(rest.lift_set(&z));
                return Ok(Some(x));
            }
        }
    }
    Ok(None)
}

/// A connected subgraph of pathwidth at least `t`.
fn obstruction(cfg: &FptConfig<'_>, g: &Graph, t: usize) -> Result<VertexSet, ErdosPosaError> {
    if cfg.mode == Mode::Faithful {
        match find_small_pw_subgraph_with(cfg.constants, &cfg.solver, g, 0, t, cfg.r) {
            Ok(SmallPwOutcome::Subgraph(s)) => return Ok(s),
            Ok(SmallPwOutcome::Separation(_)) | Err(ErdosPosaError::ConstantsTooSmall(_)) => {}
            Err(e) => return Err(e),
        }
    }
    minimal_pw_subgraph_with(&cfg.solver, g, t)
}
