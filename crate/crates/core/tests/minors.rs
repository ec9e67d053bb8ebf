use forestep::enumerate::{graphs, random_graph};
use forestep::minors::{canonical_form, find_model, find_rooted_model};
use forestep::{Graph, RootedGraph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn masks(g: &Graph) -> Vec<u32> {
    (0..g.n()).map(|v| g.neighbors(v).iter().fold(0, |m, &u| m | 1 << u)).collect()
}

fn connected(adj: &[u32], set: u32) -> bool {
    if set == 0 {
        return false;
    }
    let mut reach = set & set.wrapping_neg();
    loop {
        let grow = (0..adj.len()).filter(|v| reach & (1 << v) != 0).fold(reach, |m, v| m | (adj[v] & set));
        if grow == reach {
            return reach == set;
        }
        reach = grow;
    }
}

/// Tries every map from host vertices to pattern vertices or "unused".
fn naive_minor(h: &Graph, g: &Graph) -> bool {
    let (k, n) = (h.n(), g.n());
    if k > n {
        return false;
    }
    let adj = masks(g);
    let h_edges: Vec<(usize, usize)> = h.edges().collect();
    let mut label = vec![0usize; n];
    loop {
        let mut sets = vec![0u32; k + 1];
        for (v, &l) in label.iter().enumerate() {
            sets[l] |= 1 << v;
        }
        let ok = (0..k).all(|i| connected(&adj, sets[i]))
            && h_edges.iter().all(|&(a, b)| (0..n).any(|v| sets[a] & (1 << v) != 0 && adj[v] & sets[b] != 0));
        if ok {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            label[i] += 1;
            if label[i] <= k {
                break;
            }
            label[i] = 0;
            i += 1;
        }
    }
}

#[test]
fn model_search_matches_naive_oracle() {
    let patterns: Vec<Graph> = (1..=4).flat_map(graphs).collect();
    for n in 1..=6 {
        for g in graphs(n) {
            for h in &patterns {
                let found = find_model(h, &g).unwrap();
                if let Some(m) = &found {
                    assert!(m.is_valid(h, &g));
                }
                assert_eq!(found.is_some(), naive_minor(h, &g), "{h:?} in {g:?}");
            }
        }
    }
}

#[test]
fn minor_relation_is_transitive() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut chains = 0;
    for _ in 0..400 {
        let sizes = [rng.gen_range(1..=4), rng.gen_range(1..=6), rng.gen_range(1..=8)];
        let [a, b, c] = sizes.map(|n| random_graph(&mut rng, n, 0.5));
        if find_model(&a, &b).unwrap().is_some() && find_model(&b, &c).unwrap().is_some() {
            chains += 1;
            assert!(find_model(&a, &c).unwrap().is_some(), "{a:?} < {b:?} < {c:?}");
        }
    }
    assert!(chains > 20);
}

#[test]
fn canonical_form_ignores_non_root_labels() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=7);
        let g = random_graph(&mut rng, n, 0.4);
        let k = rng.gen_range(0..=n.min(3));
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let roots: Vec<usize> = perm[..k].to_vec();
        // shuffle the non-roots and keep roots in place
        let mut rest: Vec<usize> = (0..n).filter(|v| !roots.contains(v)).collect();
        let orig = rest.clone();
        rest.shuffle(&mut rng);
        let mut map: Vec<usize> = (0..n).collect();
        for (a, b) in orig.iter().zip(&rest) {
            map[*a] = *b;
        }
        let h = Graph::from_edges(n, g.edges().map(|(u, v)| (map[u], map[v]))).unwrap();
        let a = canonical_form(&RootedGraph::new(g, roots.clone()).unwrap()).unwrap();
        let b = canonical_form(&RootedGraph::new(h, roots).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn rooted_models_follow_the_roots() {
    // P3 rooted at an end fits a star rooted at a leaf, but not one rooted at
    // the centre: the middle branch set would be a leaf with no way onward
    let p3 = RootedGraph::new(Graph::path(3), vec![0]).unwrap();
    let star_leaf = RootedGraph::new(Graph::star(3), vec![1]).unwrap();
    let star_centre = RootedGraph::new(Graph::star(3), vec![0]).unwrap();
    assert!(find_rooted_model(&p3, &star_leaf).unwrap().is_some());
    assert!(find_rooted_model(&p3, &star_centre).unwrap().is_none());
    // rooted at both ends of P3: the roots of a path pattern must be far apart
    let ends = RootedGraph::new(Graph::path(3), vec![0, 2]).unwrap();
    let edge = RootedGraph::new(Graph::path(3), vec![0, 1]).unwrap();
    assert!(find_rooted_model(&ends, &edge).unwrap().is_none());
    assert!(find_rooted_model(&ends, &RootedGraph::new(Graph::path(4), vec![0, 3]).unwrap()).unwrap().is_some());
}
