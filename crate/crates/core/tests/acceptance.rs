//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.
//!
//! Every check is exact (tolerance 0). Random instances come from fixed
//! seeds, so the run is reproducible.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use forestep::enumerate::{
    connected_graphs, forests, graphs, random_connected_graph, random_graph, rooted_connected_graphs, rooted_trees,
};
use forestep::erdosposa::{
    bounded_pw_duality, ep_duality, fpt_pw_deletion, fpt_pw_deletion_with, klogk_bound, klogk_transversal, nu_exact,
    packing_or_transversal_bounded_pw, verify_certificate, Family, FptConfig, Magnitude, Mode, Oracle,
    PackingOrTransversal,
};
use forestep::experiment::ratio_experiment;
use forestep::minors::{binary_tree_depth, find_model, find_rooted_model, reduce_separation, tree_height, MinorSearch};
use forestep::pathwidth::{apex_join, marked_separation, refine_separation, PathDecomposition, PathwidthSolver};
use forestep::{validate_separation, Graph, RootedGraph, Separation, VertexSet};

const TIME_LIMIT: Duration = Duration::from_secs(600);

#[derive(Default)]
struct Outcome {
    checks: usize,
    required: usize,
    violations: Vec<String>,
    note: String,
    time_limit: Option<Duration>,
}

impl Outcome {
    fn require(required: usize) -> Self {
        Outcome { required, ..Outcome::default() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.violations.push(what());
        }
    }
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("forest minors in connected graphs of large pathwidth", forest_minors),
        ("packing and covering numbers of K2 against matching and vertex cover", koenig),
        ("single-tree transversal size bound", tree_transversal_bound),
        ("bounded-pathwidth transversal bound", bounded_pw_bound),
        ("marked and refined separations", separations),
        ("size of rooted trees without a complete binary tree minor", binary_tree_free),
        ("rooted tree minors at pathwidth 2t-2", rooted_tree_minors),
        ("pathwidth of apex joins", apex_joins),
        ("reduction preserves packing and covering numbers", reductions),
        ("pathwidth deletion against exhaustive search", fpt_agreement),
        ("duality certificates and complete-graph ratios", duality),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let in_time = out.time_limit.is_none_or(|limit| elapsed <= limit);
        let pass = out.violations.is_empty() && out.checks >= out.required && in_time;
        if !pass {
            failed += 1;
        }
        println!(
            "{} criterion {:>2}: {name}: {} checks{}, {} violations, tolerance 0, {:.1}s{}{}",
            if pass { "PASS" } else { "FAIL" },
            i + 1,
            out.checks,
            if out.required > 0 { format!(" (need {})", out.required) } else { String::new() },
            out.violations.len(),
            elapsed.as_secs_f64(),
            if in_time { "" } else { " (over time limit)" },
            if out.note.is_empty() { String::new() } else { format!("; {}", out.note) },
        );
        for v in out.violations.iter().take(3) {
            println!("    violation: {v}");
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn pw(g: &Graph) -> usize {
    PathwidthSolver::default().pathwidth(g).unwrap()
}

fn family(members: &[Graph]) -> Family {
    Family::new(members.to_vec()).unwrap()
}

/// A decomposition read off a vertex ordering: position `i` holds its own
/// vertex and every earlier vertex with a neighbour at position `i` or later.
fn decomposition_from_order(g: &Graph, order: &[usize]) -> PathDecomposition {
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let last: Vec<usize> =
        (0..g.n()).map(|v| g.neighbors(v).iter().map(|&u| pos[u]).fold(pos[v], usize::max)).collect();
    let bags = (0..order.len())
        .map(|i| order[..=i].iter().copied().filter(|&u| u == order[i] || last[u] >= i).collect())
        .collect();
    PathDecomposition::new(bags)
}

fn forest_minors() -> Outcome {
    let mut out = Outcome { time_limit: Some(TIME_LIMIT), ..Default::default() };
    let fs: Vec<Graph> = (1..=5).flat_map(forests).collect();
    for n in 1..=7 {
        for g in connected_graphs(n) {
            let w = pw(&g);
            for f in fs.iter().filter(|f| w + 1 >= f.n()) {
                let found = find_model(f, &g).unwrap();
                let ok = found.as_ref().is_some_and(|m| m.is_valid(f, &g));
                out.check(ok, || format!("no model of {:?} in {:?}", f, g));
            }
        }
    }
    // K_{t-1} has pathwidth t-2 and no forest on t vertices
    for t in 3..=5 {
        let k = Graph::complete(t - 1);
        out.check(pw(&k) == t - 2, || format!("pathwidth of K{}", t - 1));
        for f in forests(t) {
            out.check(find_model(&f, &k).unwrap().is_none(), || format!("{f:?} inside K{}", t - 1));
        }
    }
    out.note = format!("{} forests on at most 5 vertices", fs.len());
    out
}

fn matching_number(g: &Graph) -> usize {
    fn go(g: &Graph, alive: u32) -> usize {
        if alive == 0 {
            return 0;
        }
        let v = alive.trailing_zeros() as usize;
        let rest = alive & !(1 << v);
        let mut best = go(g, rest);
        for &u in g.neighbors(v) {
            if rest & (1 << u) != 0 {
                best = best.max(1 + go(g, rest & !(1 << u)));
            }
        }
        best
    }
    go(g, (1u32 << g.n()) - 1)
}

fn vertex_cover_number(g: &Graph) -> usize {
    (0u32..1 << g.n())
        .filter(|c| g.edges().all(|(u, v)| c & (1 << u) != 0 || c & (1 << v) != 0))
        .map(u32::count_ones)
        .min()
        .unwrap() as usize
}

fn koenig() -> Outcome {
    let mut out = Outcome::require(1000);
    let fam = family(&[Graph::complete(2)]);
    let oracle = Oracle::default();
    for n in 1..=7 {
        for g in graphs(n) {
            let nu = oracle.nu(&fam, &g).unwrap().0;
            let tau = oracle.tau(&fam, &g).unwrap().0;
            out.check(nu == matching_number(&g) && tau == vertex_cover_number(&g), || {
                format!("{g:?}: nu {nu} tau {tau}")
            });
        }
    }
    out
}

fn tree_transversal_bound() -> Outcome {
    let mut out = Outcome::require(1000);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let trees = [Graph::complete(2), Graph::path(3), Graph::path(4), Graph::star(3)];
    let search = MinorSearch::default();
    let mut max_k = 0;
    for _ in 0..500 {
        let tree = trees.choose(&mut rng).unwrap();
        let n = rng.gen_range(1..=12);
        let p = rng.gen_range(0.1..0.7);
        let g = random_graph(&mut rng, n, p);
        let fam = family(std::slice::from_ref(tree));
        let x = klogk_transversal(tree, &g).unwrap();
        let k = nu_exact(&fam, &g).unwrap().0;
        max_k = max_k.max(k);
        out.check(x.is_valid(&fam, &g, &search).unwrap(), || format!("invalid transversal for {tree:?} in {g:?}"));
        let within = if k == 0 { x.is_empty() } else { x.size() as f64 <= klogk_bound(tree.n(), k) };
        out.check(within, || format!("size {} with k = {k} for {tree:?} in {g:?}", x.size()));
    }
    out.note = format!("500 instances, packing numbers up to {max_k}");
    out
}

fn bounded_pw_bound() -> Outcome {
    let mut out = Outcome::require(400);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let families = [
        vec![Graph::complete(2)],
        vec![Graph::path(3)],
        vec![Graph::complete(3)],
        vec![Graph::complete(2).repeat(2)],
        vec![Graph::complete(3), Graph::path(4)],
        vec![Graph::cycle(4), Graph::star(3)],
        vec![Graph::path(3).disjoint_union(&Graph::complete(2))],
    ];
    let search = MinorSearch::default();
    let mut instances = 0;
    while instances < 200 {
        let t = rng.gen_range(1..=3);
        let n = rng.gen_range(1..=11);
        let p = rng.gen_range(0.05..0.5);
        let g = random_graph(&mut rng, n, p);
        let (w, pd) = PathwidthSolver::default().exact(&g).unwrap();
        if w >= t {
            continue;
        }
        instances += 1;
        let fam = family(families.choose(&mut rng).unwrap());
        let (q, r) = (fam.q(), fam.r());
        let nu = nu_exact(&fam, &g).unwrap().0;
        let (_, x) = bounded_pw_duality(&fam, &g, &pd, t).unwrap();
        out.check(x.is_valid(&fam, &g, &search).unwrap(), || format!("invalid transversal in {g:?}"));
        out.check(x.size() <= 2 * q * r * t * nu, || format!("|X| = {} > 2qrt·{nu} in {g:?}", x.size()));
        // with s = nu + 1 no packing exists, so the hitting sets must come back
        match packing_or_transversal_bounded_pw(&fam, &g, &pd, t, nu + 1).unwrap() {
            PackingOrTransversal::Transversal(y) => out
                .check(y.size() <= (nu + 1) * q * r * t && y.is_valid(&fam, &g, &search).unwrap(), || {
                    format!("hitting set of size {} in {g:?}", y.size())
                }),
            PackingOrTransversal::Packing(p) => {
                out.check(false, || format!("packing of size {} above nu = {nu}", p.size()))
            }
        }
    }
    out
}

fn separations() -> Outcome {
    let mut out = Outcome::require(2000);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=14);
        let p = rng.gen_range(0.05..0.5);
        let g = random_graph(&mut rng, n, p);
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let pd = decomposition_from_order(&g, &order);
        let density = rng.gen_range(0.0..0.4);
        let marked: VertexSet = (0..n).filter(|_| rng.gen_bool(density)).collect();
        let k = marked.len();
        let t = pd.width();

        let ts = marked_separation(&g, &pd, &marked).unwrap();
        let g1 = ts.sep.left.len();
        let ok = ts.is_valid_for(&g)
            && validate_separation(&g, &ts.sep)
            && ((k + 1) * g1) as i64 >= n as i64 - (k * (t + 1)) as i64
            && ts.interior().is_disjoint(&marked);
        out.check(ok, || format!("marked separation of {g:?} with {marked:?}"));

        let ell = rng.gen_range(1..=g1.div_ceil(k + 1));
        let refined = refine_separation(&g, &ts, &marked, ell).unwrap();
        let ok = refined.is_valid_for(&g)
            && validate_separation(&g, &refined.sep)
            && refined.sep.left.len() == ell
            && refined.sep.left.is_subset(&ts.sep.left)
            && ts.sep.right.is_subset(&refined.sep.right)
            && refined.interior().is_disjoint(&marked);
        out.check(ok, || format!("refinement to {ell} of {g:?} with {marked:?}"));
    }
    out
}

fn binary_tree_free() -> Outcome {
    let mut out = Outcome::default();
    let mut trees = 0;
    for n in 1..=12 {
        for t in rooted_trees(n) {
            trees += 1;
            let h = tree_height(&t, 0);
            let delta = t.max_degree();
            let depth = binary_tree_depth(&RootedGraph::new(t.clone(), vec![0]).unwrap()).unwrap();
            for k in 0..=2u32 {
                if depth < k as usize + 1 {
                    let bound = ((h + 1) as u128).pow(k + 1) * ((delta + 1) as u128).pow(k + 1);
                    out.check(n as u128 <= bound, || format!("{t:?}: {n} > {bound} for k = {k}"));
                }
            }
        }
    }
    out.note = format!("{trees} rooted trees");
    out
}

fn rooted_tree_minors() -> Outcome {
    let mut out = Outcome::default();
    for n in 1..=7 {
        for host in rooted_connected_graphs(n) {
            let w = pw(host.graph());
            for t in 1..=3 {
                if w + 2 < 2 * t {
                    continue;
                }
                for tree in rooted_trees(t) {
                    let pattern = RootedGraph::new(tree.clone(), vec![0]).unwrap();
                    let found = find_rooted_model(&pattern, &host).unwrap();
                    let ok = found.as_ref().is_some_and(|m| m.is_valid_rooted(&pattern, &host));
                    out.check(ok, || format!("{tree:?} not in {host:?}"));
                }
            }
        }
    }
    out
}

fn apex_joins() -> Outcome {
    let mut out = Outcome::require(300);
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let solver = PathwidthSolver::with_cap(30);
    for k in 1..=3 {
        for _ in 0..100 {
            let mut parts = Vec::new();
            while parts.len() < 3 {
                let n = rng.gen_range(k + 1..=8);
                let p = rng.gen_range(0.2..0.9);
                let g = random_connected_graph(&mut rng, n, p);
                if pw(&g) >= k {
                    let v = rng.gen_range(0..n);
                    parts.push((g, v));
                }
            }
            let j = apex_join(&parts[0].0, parts[0].1, &parts[1].0, parts[1].1, &parts[2].0, parts[2].1).unwrap();
            let below = solver.at_most(&j, k).unwrap();
            out.check(below.is_none(), || format!("join of width {k} parts has pathwidth {k}: {j:?}"));
        }
    }
    out
}

/// `core` plus a star on `leaves` leaves glued to core vertex 0. Hung by a
/// leaf, the cut is core vertex 0 and the small side is the star plus that
/// vertex; hung by the centre, the centre itself is the cut.
fn pendant_star(core: &Graph, leaves: usize, by_leaf: bool) -> (Graph, Separation) {
    let c = core.n();
    let mut g = core.disjoint_union(&Graph::star(leaves));
    g.add_edge(0, c).unwrap();
    let mut left: VertexSet = (c..g.n()).collect();
    let mut right: VertexSet = (0..c).collect();
    if by_leaf {
        left.insert(0);
    } else {
        right.insert(c);
    }
    (g, Separation::new(left, right))
}

fn reductions() -> Outcome {
    let mut out = Outcome::require(40);
    let oracle = Oracle::with_cap(14);
    let cores = [Graph::complete(3), Graph::cycle(4), Graph::path(3), Graph::complete(4), Graph::cycle(5)];
    let p4 = Graph::path(4);
    let fam = family(std::slice::from_ref(&p4));
    let (mut cases, mut reduced_count) = (0, 0);
    for core in &cores {
        for by_leaf in [true, false] {
            for leaves in 6..=13 - core.n() {
                cases += 1;
                let (g, sep) = pendant_star(core, leaves, by_leaf);
                let Some((reduced, _)) = reduce_separation(&g, &sep, &p4).unwrap() else {
                    continue;
                };
                reduced_count += 1;
                let before = (oracle.nu(&fam, &g).unwrap().0, oracle.tau(&fam, &g).unwrap().0);
                let after = (oracle.nu(&fam, &reduced).unwrap().0, oracle.tau(&fam, &reduced).unwrap().0);
                out.check(reduced.n() < g.n(), || format!("no shrink on {g:?}"));
                out.check(before == after, || format!("(nu, tau) {before:?} became {after:?} on {g:?}"));
            }
        }
    }
    out.note = format!("{cases} instances, {reduced_count} reduced");
    out
}

fn min_deletion(g: &Graph, t: usize, kmax: usize) -> Option<usize> {
    let solver = PathwidthSolver::default();
    let n = g.n();
    (0..=kmax).find(|&k| {
        (0u32..1 << n).filter(|m| m.count_ones() as usize == k).any(|m| {
            let x: VertexSet = (0..n).filter(|v| m & (1 << v) != 0).collect();
            solver.at_most(&g.remove_vertices(&x).unwrap().graph, t - 1).unwrap().is_some()
        })
    })
}

fn fpt_agreement() -> Outcome {
    let mut out = Outcome { time_limit: Some(TIME_LIMIT), ..Default::default() };
    let faithful = FptConfig::new(Mode::Faithful);
    let solver = PathwidthSolver::default();
    for n in 1..=7 {
        for g in graphs(n) {
            for t in 1..=2 {
                let best = min_deletion(&g, t, 3);
                for k in 0..=3 {
                    for (mode, got) in [
                        ("practical", fpt_pw_deletion(&g, t, k).unwrap()),
                        ("faithful", fpt_pw_deletion_with(&faithful, &g, t, k).unwrap()),
                    ] {
                        let ok = match (&got, best) {
                            (Some(x), Some(b)) if b <= k => {
                                x.len() <= k
                                    && solver.at_most(&g.remove_vertices(x).unwrap().graph, t - 1).unwrap().is_some()
                            }
                            (None, None) => true,
                            (None, Some(b)) => b > k,
                            _ => false,
                        };
                        out.check(ok, || format!("{mode} t = {t} k = {k} on {g:?}: {got:?} vs {best:?}"));
                    }
                }
            }
        }
    }
    out
}

fn duality() -> Outcome {
    let mut out = Outcome::require(1000);
    let families = [
        vec![Graph::complete(2)],
        vec![Graph::path(3)],
        vec![Graph::path(4)],
        vec![Graph::star(3)],
        vec![Graph::complete(2).repeat(2)],
        vec![Graph::complete(3), Graph::path(3)],
        vec![Graph::cycle(4), Graph::path(3).disjoint_union(&Graph::new(1))],
    ];
    let mut worst = 0.0f64;
    for n in 1..=6 {
        for g in graphs(n) {
            for members in &families {
                let fam = family(members);
                for mode in [Mode::Practical, Mode::Faithful] {
                    let cert = ep_duality(&fam, &g, mode).unwrap();
                    out.check(verify_certificate(&fam, &g, &cert), || format!("{mode} certificate for {g:?}"));
                    out.check(cert.transversal.size() >= cert.packing.size(), || format!("|X| < |P| on {g:?}"));
                    let within = match &cert.constant_used {
                        Magnitude::Finite(c) => {
                            cert.degraded
                                || num_bigint::BigUint::from(cert.transversal.size()) <= c * cert.packing.size().max(1)
                        }
                        Magnitude::Astronomical => true,
                    };
                    out.check(within, || format!("{mode} ratio above the reported constant on {g:?}"));
                    if mode == Mode::Practical {
                        worst = worst.max(cert.ratio());
                    }
                }
            }
        }
    }
    let fam = family(&[Graph::complete(2)]);
    let mut rows = Vec::new();
    for n in [4usize, 6, 8] {
        let report = ratio_experiment(&Oracle::default(), &fam, n, 0, 0).unwrap();
        let row = &report.rows[0];
        let expected = (n - 1) as f64 / (n / 2) as f64;
        out.check(
            row.graph == format!("K{n}") && row.tau * (n / 2) == (n - 1) * row.nu && row.ratio == Some(expected),
            || format!("K{n}: tau {} nu {}", row.tau, row.nu),
        );
        rows.push(format!("K{n} {}/{}", row.tau, row.nu));
    }
    out.note = format!("largest practical ratio {worst:.3}; {}", rows.join(", "));
    out
}
