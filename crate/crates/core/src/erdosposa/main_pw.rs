//! Small connected subgraphs of large pathwidth, or a large `(t-1)`-separation.
//!
//! Given a connected graph of pathwidth at least `t` and a vertex `w`, the
//! search returns either a connected vertex set containing `w` of size at
//! most `f(t, r)` inducing pathwidth at least `t`, or a `(t-1)`-separation
//! `(G1, G2)` with `|G1| >= r`.
//!
//! If the ball of radius `d` around `w` has bounded degree, some BFS layer
//! grows by at most a factor `1 + ε` and marking it yields the separation.
//! Otherwise a high-degree vertex `x` collects three disjoint connected
//! subgraphs of pathwidth at least `t - 1` next to it, found recursively, and
//! together with `x` they reach pathwidth `t`.
//!
//! The literal constants are astronomically large, so on any graph the
//! search can handle the first outcome is the whole graph. Smaller constants
//! can be supplied through [`ConstantsSource`] to exercise the case analysis;
//! whenever such constants are too small for a step to go through, the search
//! stops with [`ErdosPosaError::ConstantsTooSmall`] rather than return an
//! unchecked answer.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::ErdosPosaError;
use crate::graph::{Graph, Separation, Subgraph, VertexSet};
use crate::pathwidth::{marked_separation, refine_separation, PathDecomposition, PathwidthSolver, TSeparation};

/// Finite values are kept up to this many bits; anything larger is
/// [`Magnitude::Astronomical`].
pub const MAX_CONSTANT_BITS: u64 = 1 << 16;

/// A nonnegative integer that may be too large to write down.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Magnitude {
    Finite(BigUint),
    Astronomical,
}

impl Magnitude {
    pub fn from_usize(v: usize) -> Self {
        Magnitude::Finite(BigUint::from(v))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Magnitude::Finite(_))
    }

    pub fn to_usize(&self) -> Option<usize> {
        match self {
            Magnitude::Finite(v) => v.to_usize(),
            Magnitude::Astronomical => None,
        }
    }

    pub fn max(self, other: Magnitude) -> Magnitude {
        match (self, other) {
            (Magnitude::Finite(a), Magnitude::Finite(b)) => Magnitude::Finite(a.max(b)),
            _ => Magnitude::Astronomical,
        }
    }

    fn map2(&self, other: &Magnitude, f: impl FnOnce(&BigUint, &BigUint) -> BigUint) -> Magnitude {
        match (self, other) {
            (Magnitude::Finite(a), Magnitude::Finite(b)) => Magnitude::Finite(f(a, b)).clamped(),
            _ => Magnitude::Astronomical,
        }
    }

    fn clamped(self) -> Magnitude {
        match self {
            Magnitude::Finite(v) if v.bits() > MAX_CONSTANT_BITS => Magnitude::Astronomical,
            m => m,
        }
    }

    /// Whether the value is at most `v`.
    pub fn at_most(&self, v: usize) -> bool {
        match self {
            Magnitude::Finite(x) => *x <= BigUint::from(v),
            Magnitude::Astronomical => false,
        }
    }
}

impl fmt::Display for Magnitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Magnitude::Finite(v) => write!(f, "{v}"),
            Magnitude::Astronomical => write!(f, "astronomical"),
        }
    }
}

/// The constants of the small-subgraph search for one pair `(t, r)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MainPwConstants {
    pub t: usize,
    pub r: usize,
    pub r1: Magnitude,
    pub r2: Magnitude,
    pub r3: Magnitude,
    pub delta: Magnitude,
    /// `ε = 1 / eps_denominator` with `eps_denominator = 2r + t`.
    pub eps_denominator: usize,
    pub d: f64,
    pub f: Magnitude,
}

impl MainPwConstants {
    pub fn eps(&self) -> f64 {
        1.0 / self.eps_denominator as f64
    }
}

/// All constants for `(t, r)`. `f(0, r) = 1`; for `t >= 1`,
///
/// * `r1 = (r+t-1) + (r+t)2t + r`,
/// * `r_{i+1} = (r+t-1)(1 + f(t-1, r1) + .. + f(t-1, r_i)) + (r+t)2t + r`,
/// * `Δ = (r+t)(f(t-1, r1) + f(t-1, r2) + f(t-1, r3) + 2t + 1) + r - 1`,
/// * `ε = 1/(2r+t)`, `d = max(2t ln(Δ+1) / ln(1+ε), (2t / ln(1+ε))^2)`,
/// * `f(t, r) = max(Δ^(⌈d⌉+1), Δ + ⌈d⌉ + 1)`.
///
/// The exponent uses `⌈d⌉`, which can only enlarge `f`.
pub fn main_pw_constants(t: usize, r: usize) -> MainPwConstants {
    let mut memo = BTreeMap::new();
    constants(t, r, &mut memo)
}

fn f_value(t: usize, r: &Magnitude, memo: &mut BTreeMap<(usize, usize), Magnitude>) -> Magnitude {
    if t == 0 {
        return Magnitude::from_usize(1);
    }
    let Some(r) = r.to_usize() else {
        return Magnitude::Astronomical;
    };
    if let Some(f) = memo.get(&(t, r)) {
        return f.clone();
    }
    let f = constants(t, r, memo).f;
    memo.insert((t, r), f.clone());
    f
}

fn constants(t: usize, r: usize, memo: &mut BTreeMap<(usize, usize), Magnitude>) -> MainPwConstants {
    let eps_denominator = 2 * r + t;
    if t == 0 {
        return MainPwConstants {
            t,
            r,
            r1: Magnitude::from_usize(0),
            r2: Magnitude::from_usize(0),
            r3: Magnitude::from_usize(0),
            delta: Magnitude::from_usize(0),
            eps_denominator,
            d: 0.0,
            f: Magnitude::from_usize(1),
        };
    }
    let big = |v: usize| Magnitude::from_usize(v);
    let a = big(r + t - 1);
    let tail = big((r + t) * 2 * t + r);
    let mut sum = big(1);
    let mut rs = Vec::with_capacity(3);
    for _ in 0..3 {
        let ri = a.map2(&sum, |x, y| x * y).map2(&tail, |x, y| x + y);
        let fi = f_value(t - 1, &ri, memo);
        sum = sum.map2(&fi, |x, y| x + y);
        rs.push(ri);
    }
    // Δ = (r+t)(Σ f + 2t + 1) + r - 1, with Σ f = sum - 1
    let delta = sum
        .map2(&big(2 * t), |x, y| x + y)
        .map2(&big(r + t), |x, y| x * y)
        .map2(&big(r), |x, y| x + y)
        .map2(&big(1), |x, y| x - y);
    let ln1eps = (1.0 / eps_denominator as f64).ln_1p();
    let tf = t as f64;
    let d = match &delta {
        Magnitude::Finite(v) => (2.0 * tf * ln_big(&(v + 1u32)) / ln1eps).max((2.0 * tf / ln1eps).powi(2)),
        Magnitude::Astronomical => f64::INFINITY,
    };
    let f = match &delta {
        Magnitude::Finite(v) if d.is_finite() => {
            let dc = d.ceil();
            let exp = dc + 1.0;
            let linear = v + BigUint::from(dc as u64) + 1u32;
            let power = if v.is_zero() || v.is_one() {
                Magnitude::Finite(v.clone())
            } else if exp * (v.bits() as f64) > MAX_CONSTANT_BITS as f64 {
                Magnitude::Astronomical
            } else {
                Magnitude::Finite(v.pow(exp as u32)).clamped()
            };
            power.max(Magnitude::Finite(linear)).clamped()
        }
        _ => Magnitude::Astronomical,
    };
    let mut rs = rs.into_iter();
    MainPwConstants {
        t,
        r,
        r1: rs.next().expect("three values"),
        r2: rs.next().expect("three values"),
        r3: rs.next().expect("three values"),
        delta,
        eps_denominator,
        d,
        f,
    }
}

fn ln_big(v: &BigUint) -> f64 {
    let bits = v.bits();
    if bits <= 1000 {
        return v.to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    let top = (v >> shift).to_f64().expect("64 bits fit");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Where the search takes its constants from. `None` stands for a value
/// larger than any graph the search will see.
pub trait ConstantsSource {
    fn f(&self, t: usize, r: usize) -> Option<usize>;
    fn delta(&self, t: usize, r: usize) -> Option<usize>;
    fn d(&self, t: usize, r: usize) -> Option<usize>;
}

/// The constants of [`main_pw_constants`].
#[derive(Clone, Copy, Debug, Default)]
pub struct LiteralConstants;

impl ConstantsSource for LiteralConstants {
    fn f(&self, t: usize, r: usize) -> Option<usize> {
        main_pw_constants(t, r).f.to_usize()
    }

    fn delta(&self, t: usize, r: usize) -> Option<usize> {
        main_pw_constants(t, r).delta.to_usize()
    }

    fn d(&self, t: usize, r: usize) -> Option<usize> {
        let d = main_pw_constants(t, r).d.ceil();
        (d.is_finite() && d < usize::MAX as f64).then_some(d as usize)
    }
}

/// The same `f`, `Δ` and `d` for every `t >= 1` and `r`; `f(0, r) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FixedConstants {
    pub f: usize,
    pub delta: usize,
    pub d: usize,
}

impl ConstantsSource for FixedConstants {
    fn f(&self, t: usize, _r: usize) -> Option<usize> {
        Some(if t == 0 { 1 } else { self.f })
    }

    fn delta(&self, _t: usize, _r: usize) -> Option<usize> {
        Some(self.delta)
    }

    fn d(&self, _t: usize, _r: usize) -> Option<usize> {
        Some(self.d)
    }
}

/// The two outcomes of the search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SmallPwOutcome {
    /// A connected vertex set containing `w` inducing pathwidth at least `t`.
    Subgraph(VertexSet),
    /// A `(t-1)`-separation with `|G1| >= r`.
    Separation(TSeparation),
}

/// The search with the literal constants.
pub fn find_small_pw_subgraph(g: &Graph, w: usize, t: usize, r: usize) -> Result<SmallPwOutcome, ErdosPosaError> {
    find_small_pw_subgraph_with(&LiteralConstants, &PathwidthSolver::default(), g, w, t, r)
}

pub fn find_small_pw_subgraph_with(
    source: &dyn ConstantsSource,
    solver: &PathwidthSolver,
    g: &Graph,
    w: usize,
    t: usize,
    r: usize,
) -> Result<SmallPwOutcome, ErdosPosaError> {
    g.check_vertex(w)?;
    if !g.is_connected() {
        return Err(ErdosPosaError::Precondition("the graph must be connected".into()));
    }
    if solver.pathwidth(g)? < t {
        return Err(ErdosPosaError::Precondition(format!("the graph has pathwidth below {t}")));
    }
    Search { source, solver }.run(g, w, t, r)
}

struct Search<'a> {
    source: &'a dyn ConstantsSource,
    solver: &'a PathwidthSolver,
}

fn too_small(what: &str) -> ErdosPosaError {
    ErdosPosaError::ConstantsTooSmall(what.into())
}

impl Search<'_> {
    fn run(&self, g: &Graph, w: usize, t: usize, r: usize) -> Result<SmallPwOutcome, ErdosPosaError> {
        if t == 0 {
            return Ok(SmallPwOutcome::Subgraph([w].into_iter().collect()));
        }
        if r <= 1 {
            let one: VertexSet = [w].into_iter().collect();
            return Ok(SmallPwOutcome::Separation(TSeparation {
                sep: Separation::new(one.clone(), g.vertices()),
                decomposition: PathDecomposition::new(vec![one]),
                t: t - 1,
            }));
        }
        let f = self.source.f(t, r);
        if f.is_none_or(|f| g.n() <= f) {
            return Ok(SmallPwOutcome::Subgraph(g.vertices()));
        }
        let f = f.expect("checked above");
        let (Some(delta), Some(d)) = (self.source.delta(t, r), self.source.d(t, r)) else {
            return Err(too_small("Δ or d is unbounded while f is not"));
        };
        let dist = g.bfs_distances(w)?;
        let heavy = dist.iter().filter(|(&v, &k)| k <= d && g.degree(v) > delta).map(|(&v, &k)| (k, v)).min();
        match heavy {
            None => self.bounded_degree(g, t, r, f, d, &dist),
            Some((_, x)) => self.high_degree(g, w, t, r, f, d, x),
        }
    }

    /// Every vertex near `w` has small degree: find a thin BFS layer and cut
    /// along it.
    #[allow(clippy::too_many_arguments)]
    fn bounded_degree(
        &self,
        g: &Graph,
        t: usize,
        r: usize,
        f: usize,
        d: usize,
        dist: &BTreeMap<usize, usize>,
    ) -> Result<SmallPwOutcome, ErdosPosaError> {
        let ball = |i: usize| -> VertexSet { dist.iter().filter(|(_, &k)| k <= i).map(|(&v, _)| v).collect() };
        let hd = ball(d);
        let sub = g.induced(&hd)?;
        if self.solver.pathwidth(&sub.graph)? >= t {
            if hd.len() > f {
                return Err(too_small("the ball of radius d exceeds f"));
            }
            return Ok(SmallPwOutcome::Subgraph(hd));
        }
        let eps = 1.0 / (2 * r + t) as f64;
        let j = (1..=d).find(|&j| {
            let (hj, hprev) = (ball(j).len(), ball(j - 1).len());
            hj > hprev && hj as f64 <= (1.0 + eps) * hprev as f64
        });
        let Some(j) = j else {
            return Err(too_small("no BFS layer grows slowly enough"));
        };
        let hj = ball(j);
        let layer: VertexSet = hj.difference(&ball(j - 1)).copied().collect();
        let hsub = g.induced(&hj)?;
        let (_, pd) = self.solver.exact(&hsub.graph)?;
        let ts = marked_separation(&hsub.graph, &pd, &hsub.project_set(&layer))?;
        if ts.left_size() < r {
            return Err(too_small("the separation along the thin layer is too small"));
        }
        self.lift_separation(g, &hsub, &ts, t)
    }

    /// Lifts a `(t-1)`-separation `(L1, L2)` of an induced subgraph whose
    /// interior has no neighbours outside `L1` to `(L1, G - (L1 \ L2))`.
    fn lift_separation(
        &self,
        g: &Graph,
        sub: &Subgraph,
        ts: &TSeparation,
        t: usize,
    ) -> Result<SmallPwOutcome, ErdosPosaError> {
        let left = sub.lift_set(&ts.sep.left);
        let interior = sub.lift_set(&ts.interior());
        let right: VertexSet = g.vertices().difference(&interior).copied().collect();
        let decomposition = PathDecomposition::new(ts.decomposition.bags.iter().map(|b| sub.lift_set(b)).collect());
        let out = TSeparation { sep: Separation::new(left, right), decomposition, t: t - 1 };
        if !out.is_valid_for(g) {
            return Err(too_small("the lifted separation is not a separation of the graph"));
        }
        Ok(SmallPwOutcome::Separation(out))
    }

    #[allow(clippy::too_many_arguments)]
    fn high_degree(
        &self,
        g: &Graph,
        w: usize,
        t: usize,
        r: usize,
        f: usize,
        d: usize,
        x: usize,
    ) -> Result<SmallPwOutcome, ErdosPosaError> {
        let claims = Claims { search: self, g, w, t, r, f, d, x };
        let tail = (r + t) * 2 * t + r;
        let mut xs: VertexSet = [x].into_iter().collect();
        let mut sum = 1usize;
        for _ in 0..3 {
            let rj = (r + t - 1).saturating_mul(sum).saturating_add(tail);
            let rest = g.remove_vertices(&xs)?;
            // components of G - X next to x, with their pathwidth
            let mut heavy: Option<(VertexSet, usize)> = None;
            for comp in rest.graph.connected_components() {
                let comp_old = rest.lift_set(&comp);
                let Some(&nbr) = g.neighbors(x).iter().find(|v| comp_old.contains(v)) else {
                    continue;
                };
                let csub = g.induced(&comp_old)?;
                if self.solver.pathwidth(&csub.graph)? >= t && heavy.as_ref().is_none_or(|(_, n)| nbr < *n) {
                    heavy = Some((comp_old, nbr));
                }
            }
            let Some((comp, nbr)) = heavy else {
                return claims.exists2(&xs);
            };
            let csub = g.induced(&comp)?;
            let local = csub.project(nbr).expect("the neighbour lies in its component");
            match self.run(&csub.graph, local, t - 1, rj)? {
                SmallPwOutcome::Subgraph(h) => {
                    let h = csub.lift_set(&h);
                    sum = sum.saturating_add(self.source.f(t - 1, rj).unwrap_or(usize::MAX));
                    xs.extend(h);
                }
                SmallPwOutcome::Separation(ts) => {
                    // extend (C1, C2) to G - X by adding the other components to C2
                    let left = csub.lift_set(&ts.sep.left);
                    let c_rest: VertexSet = comp.difference(&csub.lift_set(&ts.interior())).copied().collect();
                    let others: VertexSet =
                        g.vertices().difference(&xs).filter(|v| !comp.contains(v)).copied().collect();
                    let right: VertexSet = c_rest.union(&others).copied().collect();
                    let decomposition =
                        PathDecomposition::new(ts.decomposition.bags.iter().map(|b| csub.lift_set(b)).collect());
                    let on_rest = TSeparation {
                        sep: Separation::new(rest.project_set(&left), rest.project_set(&right)),
                        decomposition: PathDecomposition::new(
                            decomposition.bags.iter().map(|b| rest.project_set(b)).collect(),
                        ),
                        t: ts.t,
                    };
                    return claims.exists1(&xs, &rest, &on_rest);
                }
            }
        }
        let target = xs.clone();
        let path = g.shortest_path_to_set(w, &target).ok_or_else(|| too_small("x is unreachable from w"))?;
        let mut out = xs;
        out.extend(path);
        let sub = g.induced(&out)?;
        if self.solver.pathwidth(&sub.graph)? < t {
            return Err(too_small("the three subgraphs at x did not raise the pathwidth"));
        }
        if out.len() > f {
            return Err(too_small("the collected subgraph exceeds f"));
        }
        Ok(SmallPwOutcome::Subgraph(out))
    }
}

/// The helper steps of the high-degree case.
struct Claims<'s, 'a> {
    search: &'s Search<'a>,
    g: &'s Graph,
    w: usize,
    t: usize,
    r: usize,
    f: usize,
    d: usize,
    x: usize,
}

impl Claims<'_, '_> {
    /// A connected `h` containing `x` with pathwidth at least `t` and at most
    /// `f - d` vertices, joined to `w` by a shortest path.
    fn link_up(&self, h: &VertexSet) -> Result<SmallPwOutcome, ErdosPosaError> {
        debug_assert!(h.contains(&self.x));
        if h.len() + self.d > self.f {
            return Err(too_small("the subgraph at x exceeds f - d"));
        }
        let path = self
            .g
            .shortest_path_to_set(self.w, &[self.x].into_iter().collect())
            .ok_or_else(|| too_small("x is unreachable from w"))?;
        let mut out = h.clone();
        out.extend(path);
        Ok(SmallPwOutcome::Subgraph(out))
    }

    fn needed(&self, x_len: usize) -> usize {
        (self.r + self.t - 1) * x_len + (self.r + self.t) * 2 * self.t + self.r
    }

    /// `X` connected with `x ∈ X`, and `G - X` has a `(t-1)`-separation
    /// `(H1, H2)` with `|H1|` large: shrink `H1`, add `X`, and either find the
    /// subgraph at `x` or cut off a part of size at least `r`.
    fn exists1(&self, xs: &VertexSet, rest: &Subgraph, hsep: &TSeparation) -> Result<SmallPwOutcome, ErdosPosaError> {
        let solver = self.search.solver;
        let ell = self.needed(xs.len());
        if hsep.left_size() < ell {
            return Err(too_small("the separation of G - X is smaller than required"));
        }
        let refined = refine_separation(&rest.graph, hsep, &VertexSet::new(), ell)?;
        let h1 = rest.lift_set(&refined.sep.left);
        let j: VertexSet = h1.union(xs).copied().collect();
        let jsub = self.g.induced(&j)?;
        let (pw, pd) = solver.exact(&jsub.graph)?;
        if pw >= self.t {
            let xl = jsub.project(self.x).expect("x lies in J");
            let comp = jsub
                .graph
                .connected_components()
                .into_iter()
                .find(|c| c.contains(&xl))
                .expect("every vertex has a component");
            return self.link_up(&jsub.lift_set(&comp));
        }
        let cut = rest.lift_set(&refined.sep.cut());
        let y: VertexSet = xs.union(&cut).copied().collect();
        let ts = marked_separation(&jsub.graph, &pd, &jsub.project_set(&y))?;
        if ts.left_size() < self.r {
            return Err(too_small("the separation of J is smaller than r"));
        }
        self.search.lift_separation(self.g, &jsub, &ts, self.t)
    }

    /// `X` connected with `x ∈ X`, and every component of `G - X` next to `x`
    /// has pathwidth below `t`.
    fn exists2(&self, xs: &VertexSet) -> Result<SmallPwOutcome, ErdosPosaError> {
        let rest = self.g.remove_vertices(xs)?;
        let near: VertexSet = rest
            .graph
            .connected_components()
            .into_iter()
            .filter(|c| c.iter().any(|&v| self.g.has_edge(self.x, rest.lift(v))))
            .flatten()
            .collect();
        let hsub = rest.graph.induced(&near)?;
        let (_, pd) = self.search.solver.exact(&hsub.graph)?;
        let ts = marked_separation(&hsub.graph, &pd, &VertexSet::new())?;
        // (H1, H2) of H becomes a separation of G - X with the far
        // components on the right
        let far: VertexSet = rest.graph.vertices().difference(&near).copied().collect();
        let left = hsub.lift_set(&ts.sep.left);
        let right: VertexSet = hsub.lift_set(&ts.sep.right).union(&far).copied().collect();
        let decomposition = PathDecomposition::new(ts.decomposition.bags.iter().map(|b| hsub.lift_set(b)).collect());
        let on_rest = TSeparation { sep: Separation::new(left, right), decomposition, t: self.t - 1 };
        self.exists1(xs, &rest, &on_rest)
    }
}

/// Shrinks `V(g)` to a connected set inducing pathwidth at least `t` from
/// which no single vertex can be removed without every remaining component
/// dropping below `t`.
pub fn minimal_pw_subgraph(g: &Graph, t: usize) -> Result<VertexSet, ErdosPosaError> {
    minimal_pw_subgraph_with(&PathwidthSolver::default(), g, t)
}

pub fn minimal_pw_subgraph_with(solver: &PathwidthSolver, g: &Graph, t: usize) -> Result<VertexSet, ErdosPosaError> {
    let heavy_component = |s: &VertexSet| -> Result<Option<VertexSet>, ErdosPosaError> {
        let sub = g.induced(s)?;
        for comp in sub.graph.connected_components() {
            let c = sub.graph.induced(&comp)?;
            if solver.pathwidth(&c.graph)? >= t {
                return Ok(Some(sub.lift_set(&comp)));
            }
        }
        Ok(None)
    };
    let Some(mut s) = heavy_component(&g.vertices())? else {
        return Err(ErdosPosaError::Precondition(format!("the graph has pathwidth below {t}")));
    };
    'shrink: loop {
        for &v in &s {
            let mut smaller = s.clone();
            smaller.remove(&v);
            if let Some(c) = heavy_component(&smaller)? {
                s = c;
                continue 'shrink;
            }
        }
        return Ok(s);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pathwidth::exact_pathwidth;

    fn pw_of(g: &Graph, s: &VertexSet) -> usize {
        exact_pathwidth(&g.induced(s).unwrap().graph).unwrap().0
    }

    fn check(g: &Graph, w: usize, t: usize, r: usize, out: &SmallPwOutcome) {
        match out {
            SmallPwOutcome::Subgraph(s) => {
                assert!(s.contains(&w));
                assert!(g.is_connected_set(s));
                assert!(pw_of(g, s) >= t);
            }
            SmallPwOutcome::Separation(ts) => {
                assert!(ts.is_valid_for(g));
                assert_eq!(ts.t + 1, t);
                assert!(ts.left_size() >= r);
            }
        }
    }

    #[test]
    fn literal_constants() {
        let c = main_pw_constants(0, 5);
        assert_eq!(c.f, Magnitude::from_usize(1));
        let c = main_pw_constants(1, 2);
        assert_eq!(c.eps_denominator, 5);
        assert_eq!(c.r1, Magnitude::from_usize(10));
        assert_eq!(c.r2, Magnitude::from_usize(12));
        assert_eq!(c.r3, Magnitude::from_usize(14));
        assert_eq!(c.delta, Magnitude::from_usize(19));
        let Magnitude::Finite(f) = &c.f else { panic!("f(1, 2) is finite") };
        let dc = c.d.ceil() as u64;
        assert!(*f >= BigUint::from(20 + dc));
        assert_eq!(*f, BigUint::from(19u32).pow(dc as u32 + 1));
        assert_eq!(main_pw_constants(2, 2).f, Magnitude::Astronomical);
    }

    #[test]
    fn trivial_outcomes() {
        let g = Graph::cycle(4);
        assert_eq!(find_small_pw_subgraph(&g, 2, 0, 5).unwrap(), SmallPwOutcome::Subgraph([2].into_iter().collect()));
        let out = find_small_pw_subgraph(&g, 1, 2, 1).unwrap();
        check(&g, 1, 2, 1, &out);
        let out = find_small_pw_subgraph(&g, 0, 2, 2).unwrap();
        assert_eq!(out, SmallPwOutcome::Subgraph(g.vertices()));
    }

    #[test]
    fn precondition() {
        assert!(matches!(find_small_pw_subgraph(&Graph::path(4), 0, 2, 2), Err(ErdosPosaError::Precondition(_))));
    }

    #[test]
    fn ball_on_a_long_path() {
        let g = Graph::path(15);
        let src = FixedConstants { f: 5, delta: 2, d: 2 };
        let out = find_small_pw_subgraph_with(&src, &PathwidthSolver::default(), &g, 7, 1, 2).unwrap();
        check(&g, 7, 1, 2, &out);
        assert_eq!(out, SmallPwOutcome::Subgraph((5..=9).collect()));
    }

    #[test]
    fn thin_layer_gives_a_separation() {
        // a long cycle: every ball is a path, so pathwidth 2 needs the whole cycle
        let g = Graph::cycle(20);
        let src = FixedConstants { f: 10, delta: 2, d: 8 };
        let out = find_small_pw_subgraph_with(&src, &PathwidthSolver::default(), &g, 0, 2, 2).unwrap();
        check(&g, 0, 2, 2, &out);
        assert!(matches!(out, SmallPwOutcome::Separation(_)));
    }

    #[test]
    fn high_degree_star() {
        let g = Graph::star(12);
        let src = FixedConstants { f: 14, delta: 3, d: 2 };
        let out = find_small_pw_subgraph_with(&src, &PathwidthSolver::default(), &g, 5, 1, 2).unwrap();
        check(&g, 5, 1, 2, &out);
    }

    #[test]
    fn contrived_constants_never_lie() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let solver = PathwidthSolver::default();
        for _ in 0..60 {
            let n = rng.gen_range(6..16);
            let g = crate::enumerate::random_connected_graph(&mut rng, n, 0.1);
            let pw = solver.pathwidth(&g).unwrap();
            let t = rng.gen_range(1..=pw.max(1));
            let r = rng.gen_range(2..5);
            let src = FixedConstants { f: rng.gen_range(3..8), delta: rng.gen_range(2..5), d: rng.gen_range(1..4) };
            let w = rng.gen_range(0..n);
            if pw < t {
                continue;
            }
            match find_small_pw_subgraph_with(&src, &solver, &g, w, t, r) {
                Ok(out) => check(&g, w, t, r, &out),
                Err(e) => assert!(matches!(e, ErdosPosaError::ConstantsTooSmall(_)), "{e}"),
            }
        }
    }

    #[test]
    fn minimal_subgraphs() {
        let g = Graph::complete(4).disjoint_union(&Graph::path(6));
        let mut g2 = g.clone();
        g2.add_edge(3, 4).unwrap();
        assert_eq!(minimal_pw_subgraph(&g2, 3).unwrap(), (0..4).collect());
        assert_eq!(minimal_pw_subgraph(&Graph::cycle(4), 2).unwrap(), (0..4).collect());
        let e = minimal_pw_subgraph(&Graph::path(5), 1).unwrap();
        assert_eq!(e.len(), 2);
        assert!(Graph::path(5).is_connected_set(&e));
    }
}
