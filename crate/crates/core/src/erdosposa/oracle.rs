//! Exact packing and transversal numbers by exhaustive search over vertex
//! subsets.
//!
//! A table records, for every subset `S` of the host, whether `G[S]` has a
//! member of the family as a minor. Containment is monotone, so `S` contains
//! a member whenever some `S - v` does, and only the remaining subsets need a
//! model search. The subsets that contain a member while none of their
//! maximal proper subsets do are the minimal ones; every packing can be
//! shrunk to one made of minimal sets.

use crate::error::ErdosPosaError;
use crate::graph::{bits, mask_of, set_of, Graph, VertexSet};
use crate::minors::MinorSearch;

use super::family::{lift_model, Family, Packing, Transversal};

/// Largest host accepted by default.
pub const DEFAULT_ORACLE_CAP: usize = 12;

/// Hard ceiling on [`Oracle::cap`]; the table has `2^n` entries.
pub const MAX_ORACLE_CAP: usize = 24;

const UNKNOWN: u8 = u8::MAX;

/// Exhaustive oracle with an explicit vertex cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    pub cap: usize,
    pub search: MinorSearch,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { cap: DEFAULT_ORACLE_CAP, search: MinorSearch::default() }
    }
}

impl Oracle {
    pub fn with_cap(cap: usize) -> Self {
        Oracle { cap: cap.min(MAX_ORACLE_CAP), ..Oracle::default() }
    }

    /// Builds the containment table of `fam` over all subsets of `V(g)`.
    pub fn table(&self, fam: &Family, g: &Graph) -> Result<ContainmentTable, ErdosPosaError> {
        if g.n() > self.cap {
            return Err(ErdosPosaError::OracleCap { n: g.n(), cap: self.cap });
        }
        ContainmentTable::build(self.search, fam, g)
    }

    /// `ν_F(g)` with a maximum packing.
    pub fn nu(&self, fam: &Family, g: &Graph) -> Result<(usize, Packing), ErdosPosaError> {
        let mut table = self.table(fam, g)?;
        let full = table.full();
        let packing = table.packing(full)?;
        Ok((packing.size(), packing))
    }

    /// `τ_F(g)` with the lexicographically smallest minimum transversal.
    pub fn tau(&self, fam: &Family, g: &Graph) -> Result<(usize, Transversal), ErdosPosaError> {
        let table = self.table(fam, g)?;
        let x = table.transversal(table.full());
        Ok((x.len(), Transversal::new(x)))
    }
}

/// Containment of family members in every induced subgraph of one host.
#[derive(Clone, Debug)]
pub struct ContainmentTable {
    fam: Family,
    g: Graph,
    search: MinorSearch,
    contains: Vec<bool>,
    minimal: Vec<u64>,
    nu: Vec<u8>,
}

impl ContainmentTable {
    fn build(search: MinorSearch, fam: &Family, g: &Graph) -> Result<Self, ErdosPosaError> {
        let n = g.n();
        let size = 1usize << n;
        let masks = g.masks();
        let min_order = fam.members().iter().map(Graph::n).min().unwrap_or(0);
        let min_edges = fam.members().iter().map(Graph::edge_count).min().unwrap_or(0);
        let connected = fam.all_connected();
        let mut contains = vec![false; size];
        let mut minimal = Vec::new();
        for s in 1..size as u64 {
            if bits(s).any(|v| contains[(s & !(1 << v)) as usize]) {
                contains[s as usize] = true;
                continue;
            }
            if (s.count_ones() as usize) < min_order {
                continue;
            }
            let edges: u32 = bits(s).map(|v| (masks[v] & s).count_ones()).sum::<u32>() / 2;
            if (edges as usize) < min_edges {
                continue;
            }
            // a connected member inside a disconnected G[S] sits in one
            // component, hence in some S - v already
            if connected && !is_connected_mask(&masks, s) {
                continue;
            }
            let sub = g.induced(&set_of(s))?;
            if fam.has_member_minor(&search, &sub.graph)? {
                contains[s as usize] = true;
                minimal.push(s);
            }
        }
        Ok(ContainmentTable { fam: fam.clone(), g: g.clone(), search, contains, minimal, nu: vec![UNKNOWN; size] })
    }

    /// The mask of all vertices.
    pub fn full(&self) -> u64 {
        if self.g.n() == 64 {
            u64::MAX
        } else {
            (1u64 << self.g.n()) - 1
        }
    }

    pub fn contains(&self, s: u64) -> bool {
        self.contains[s as usize]
    }

    /// Minimal subsets containing a member, in increasing numeric order.
    pub fn minimal_sets(&self) -> &[u64] {
        &self.minimal
    }

    /// `ν_F(G[S])`.
    pub fn nu(&mut self, s: u64) -> usize {
        if s == 0 || !self.contains[s as usize] {
            return 0;
        }
        let memo = self.nu[s as usize];
        if memo != UNKNOWN {
            return memo as usize;
        }
        let v = s.trailing_zeros();
        // either v is unused, or it lies in a minimal set of the packing
        let mut best = self.nu(s & !(1 << v));
        for i in 0..self.minimal.len() {
            let m = self.minimal[i];
            if m & !s == 0 && m & (1 << v) != 0 {
                best = best.max(1 + self.nu(s & !m));
            }
        }
        self.nu[s as usize] = best as u8;
        best
    }

    /// A maximum packing of `G[S]`, in host ids.
    pub fn packing(&mut self, s: u64) -> Result<Packing, ErdosPosaError> {
        let mut chosen = Vec::new();
        let mut cur = s;
        while self.nu(cur) > 0 {
            let k = self.nu(cur);
            let v = cur.trailing_zeros();
            if self.nu(cur & !(1 << v)) == k {
                cur &= !(1 << v);
                continue;
            }
            let mut found = None;
            for i in 0..self.minimal.len() {
                let m = self.minimal[i];
                if m & !cur == 0 && m & (1 << v) != 0 && 1 + self.nu(cur & !m) == k {
                    found = Some(m);
                    break;
                }
            }
            let m = found.expect("the recorded value is attained");
            chosen.push(m);
            cur &= !m;
        }
        let mut packing = Packing::default();
        for m in chosen {
            let sub = self.g.induced(&set_of(m))?;
            let (i, model) = self.fam.find_member(&self.search, &sub.graph)?.expect("minimal sets contain a member");
            packing.models.push((i, lift_model(&sub, &model)));
        }
        Ok(packing)
    }

    /// A minimum transversal of `G[S]`: the complement of a largest
    /// member-free subset, lexicographically smallest among minimum ones.
    pub fn transversal(&self, s: u64) -> VertexSet {
        let mut best: Option<Vec<usize>> = None;
        let mut sub = s;
        loop {
            if !self.contains[sub as usize] {
                let x: Vec<usize> = bits(s & !sub).collect();
                let better = match &best {
                    None => true,
                    Some(b) => x.len() < b.len() || (x.len() == b.len() && x < *b),
                };
                if better {
                    best = Some(x);
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & s;
        }
        best.unwrap_or_default().into_iter().collect()
    }

    /// `τ_F(G[S])`.
    pub fn tau(&self, s: u64) -> usize {
        self.transversal(s).len()
    }

    /// Mask of a vertex set of the host.
    pub fn mask(&self, s: &VertexSet) -> u64 {
        mask_of(s)
    }
}

fn is_connected_mask(masks: &[u64], s: u64) -> bool {
    if s == 0 {
        return true;
    }
    let mut seen = s & s.wrapping_neg();
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = masks[v] & s & !seen;
        seen |= new;
        frontier |= new;
    }
    seen == s
}

/// `ν_F(g)` with the default cap.
pub fn nu_exact(fam: &Family, g: &Graph) -> Result<(usize, Packing), ErdosPosaError> {
    Oracle::default().nu(fam, g)
}

/// `τ_F(g)` with the default cap.
pub fn tau_exact(fam: &Family, g: &Graph) -> Result<(usize, Transversal), ErdosPosaError> {
    Oracle::default().tau(fam, g)
}
