//! Empirical packing/covering ratios on random graphs.
//!
//! Every row records exact `ν_F` and `τ_F`. The complete graph `K_n` is always
//! the first row, followed by seeded samples `G(n, p)` with `p` drawn
//! uniformly from `[0.2, 0.8]`. Rows with `ν_F = 0` carry no ratio.

use std::collections::BTreeMap;
use std::fmt::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::enumerate::random_graph;
use crate::erdosposa::{Family, Oracle};
use crate::error::ErdosPosaError;
use crate::graph::Graph;

pub const CSV_HEADER: &str = "seed,graph,n,nu,tau,ratio";

#[derive(Clone, Debug, PartialEq)]
pub struct RatioRow {
    pub seed: u64,
    /// `K{n}` for the complete graph, `sample{i}` for the samples.
    pub graph: String,
    pub n: usize,
    pub nu: usize,
    pub tau: usize,
    pub ratio: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RatioReport {
    pub rows: Vec<RatioRow>,
}

impl RatioReport {
    /// Largest ratio over rows with `ν > 0`.
    pub fn max_ratio(&self) -> Option<f64> {
        self.rows.iter().filter_map(|r| r.ratio).reduce(f64::max)
    }

    /// Row counts per `(τ, ν)` pair with `ν > 0`, and the number of rows
    /// excluded because `ν = 0`.
    pub fn histogram(&self) -> (BTreeMap<(usize, usize), usize>, usize) {
        let mut hist = BTreeMap::new();
        let mut excluded = 0;
        for row in &self.rows {
            if row.nu == 0 {
                excluded += 1;
            } else {
                *hist.entry((row.tau, row.nu)).or_insert(0) += 1;
            }
        }
        (hist, excluded)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            let ratio = r.ratio.map_or_else(|| "excluded".to_string(), |x| format!("{x:.6}"));
            writeln!(out, "{},{},{},{},{},{}", r.seed, r.graph, r.n, r.nu, r.tau, ratio).expect("writing to a string");
        }
        out
    }
}

/// Exact `τ_F / ν_F` on `K_n` and `samples` random graphs on `n` vertices.
pub fn ratio_experiment(
    oracle: &Oracle,
    fam: &Family,
    n: usize,
    samples: usize,
    seed: u64,
) -> Result<RatioReport, ErdosPosaError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut graphs = vec![(format!("K{n}"), Graph::complete(n))];
    for i in 0..samples {
        let p = rng.gen_range(0.2..=0.8);
        graphs.push((format!("sample{i}"), random_graph(&mut rng, n, p)));
    }
    let mut rows = Vec::with_capacity(graphs.len());
    for (name, g) in graphs {
        let mut table = oracle.table(fam, &g)?;
        let full = table.full();
        let nu = table.nu(full);
        let tau = table.tau(full);
        let ratio = (nu > 0).then(|| tau as f64 / nu as f64);
        rows.push(RatioRow { seed, graph: name, n, nu, tau, ratio });
    }
    Ok(RatioReport { rows })
}
