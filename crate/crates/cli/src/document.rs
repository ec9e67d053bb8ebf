//! JSON certificate documents.
//!
//! A document binds to its graph through `graph_digest`, the SHA-256 of the
//! vertex count and the sorted edge list, and to its own content through
//! `payload_digest`, the SHA-256 of the document serialised with that field
//! empty. Verification recomputes both and re-checks every model and the
//! transversal against the graph.

use std::collections::BTreeMap;
use std::fmt::Write;

use forestep::erdosposa::{verify_certificate, DualityCertificate, Family, Magnitude, Mode, Packing, Transversal};
use forestep::minors::{MinorModel, MinorSearch};
use forestep::pathwidth::PathwidthSolver;
use forestep::{Graph, VertexSet};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::family_spec::Member;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Packing,
    Transversal,
    Duality,
    Fpt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MemberDoc {
    pub name: String,
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelDoc {
    pub member: usize,
    /// Pattern vertex to branch set.
    pub branch_sets: BTreeMap<usize, Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateDocument {
    pub kind: Kind,
    pub graph_digest: String,
    pub vertices: usize,
    pub family: Vec<MemberDoc>,
    pub mode: Option<String>,
    pub constant_used: Option<String>,
    pub ratio: Option<f64>,
    pub degraded: Option<bool>,
    /// For `fpt`: the pathwidth of `G - X` must be below this.
    pub pathwidth_below: Option<usize>,
    /// For `fpt`: the deletion budget.
    pub budget: Option<usize>,
    pub packing: Vec<ModelDoc>,
    pub transversal: Vec<usize>,
    pub payload_digest: String,
}

pub fn graph_digest(g: &Graph) -> String {
    let mut text = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(text, "{u} {v}").expect("writing to a string");
    }
    hex::encode(Sha256::digest(text.as_bytes()))
}

fn member_doc(m: &Member) -> MemberDoc {
    MemberDoc { name: m.name.clone(), vertices: m.graph.n(), edges: m.graph.edges().map(|(u, v)| [u, v]).collect() }
}

fn model_doc(member: usize, m: &MinorModel) -> ModelDoc {
    ModelDoc {
        member,
        branch_sets: m.branch_sets.iter().enumerate().map(|(i, b)| (i, b.iter().copied().collect())).collect(),
    }
}

impl CertificateDocument {
    fn blank(kind: Kind, g: &Graph, members: &[Member]) -> Self {
        CertificateDocument {
            kind,
            graph_digest: graph_digest(g),
            vertices: g.n(),
            family: members.iter().map(member_doc).collect(),
            mode: None,
            constant_used: None,
            ratio: None,
            degraded: None,
            pathwidth_below: None,
            budget: None,
            packing: Vec::new(),
            transversal: Vec::new(),
            payload_digest: String::new(),
        }
    }

    pub fn duality(g: &Graph, members: &[Member], cert: &DualityCertificate) -> Self {
        let mut doc = Self::blank(Kind::Duality, g, members);
        doc.mode = Some(cert.mode.to_string());
        doc.constant_used = Some(cert.constant_used.to_string());
        doc.ratio = Some(cert.ratio());
        doc.degraded = Some(cert.degraded);
        doc.packing = cert.packing.models.iter().map(|(i, m)| model_doc(*i, m)).collect();
        doc.transversal = cert.transversal.vertices.iter().copied().collect();
        doc.seal()
    }

    pub fn packing(g: &Graph, members: &[Member], packing: &Packing) -> Self {
        let mut doc = Self::blank(Kind::Packing, g, members);
        doc.packing = packing.models.iter().map(|(i, m)| model_doc(*i, m)).collect();
        doc.seal()
    }

    pub fn transversal(g: &Graph, members: &[Member], x: &Transversal) -> Self {
        let mut doc = Self::blank(Kind::Transversal, g, members);
        doc.transversal = x.vertices.iter().copied().collect();
        doc.seal()
    }

    pub fn fpt(g: &Graph, t: usize, k: usize, x: &VertexSet) -> Self {
        let mut doc = Self::blank(Kind::Fpt, g, &[]);
        doc.pathwidth_below = Some(t);
        doc.budget = Some(k);
        doc.transversal = x.iter().copied().collect();
        doc.seal()
    }

    fn content_digest(&self) -> String {
        let mut copy = self.clone();
        copy.payload_digest = String::new();
        let bytes = serde_json::to_vec(&copy).expect("documents serialise");
        hex::encode(Sha256::digest(&bytes))
    }

    fn seal(mut self) -> Self {
        self.payload_digest = self.content_digest();
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialise");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Re-checks the document against `g`; the error names the first failed
    /// check.
    pub fn verify(&self, g: &Graph) -> Result<(), String> {
        if self.vertices != g.n() || self.graph_digest != graph_digest(g) {
            return Err("graph digest does not match the graph".into());
        }
        if self.payload_digest != self.content_digest() {
            return Err("payload digest does not match the document".into());
        }
        let transversal = self.transversal_set(g)?;
        if self.kind == Kind::Fpt {
            return self.verify_fpt(g, &transversal);
        }
        let fam = self.family()?;
        let packing = self.packing_models(&fam, g)?;
        let search = MinorSearch::default();
        match self.kind {
            Kind::Packing => {
                if !transversal.is_empty() {
                    return Err("a packing document carries no transversal".into());
                }
                if !packing.is_valid(&fam, g) {
                    return Err("packing is not valid".into());
                }
            }
            Kind::Transversal => {
                if !packing.is_empty() {
                    return Err("a transversal document carries no packing".into());
                }
                let x = Transversal::new(transversal);
                if !x.is_valid(&fam, g, &search).map_err(|e| e.to_string())? {
                    return Err("the transversal misses a member minor".into());
                }
            }
            Kind::Duality => self.verify_duality(&fam, g, packing, transversal)?,
            Kind::Fpt => unreachable!("handled above"),
        }
        Ok(())
    }

    fn transversal_set(&self, g: &Graph) -> Result<VertexSet, String> {
        if !self.transversal.windows(2).all(|w| w[0] < w[1]) {
            return Err("transversal must be strictly increasing".into());
        }
        match self.transversal.iter().find(|&&v| v >= g.n()) {
            Some(v) => Err(format!("transversal vertex {v} out of range")),
            None => Ok(self.transversal.iter().copied().collect()),
        }
    }

    fn family(&self) -> Result<Family, String> {
        let mut members = Vec::with_capacity(self.family.len());
        for m in &self.family {
            let edges = m.edges.iter().map(|&[u, v]| (u, v));
            members.push(Graph::from_edges(m.vertices, edges).map_err(|e| format!("member {}: {e}", m.name))?);
        }
        Family::new(members).map_err(|e| e.to_string())
    }

    fn packing_models(&self, fam: &Family, g: &Graph) -> Result<Packing, String> {
        let mut models = Vec::with_capacity(self.packing.len());
        for (j, m) in self.packing.iter().enumerate() {
            let h = fam.members().get(m.member).ok_or(format!("model {j}: no member {}", m.member))?;
            if !m.branch_sets.keys().copied().eq(0..h.n()) {
                return Err(format!("model {j}: branch sets must be keyed 0..{}", h.n()));
            }
            let mut branch_sets = Vec::with_capacity(h.n());
            for b in m.branch_sets.values() {
                if let Some(v) = b.iter().find(|&&v| v >= g.n()) {
                    return Err(format!("model {j}: vertex {v} out of range"));
                }
                let set: VertexSet = b.iter().copied().collect();
                if set.len() != b.len() {
                    return Err(format!("model {j}: repeated vertex in a branch set"));
                }
                branch_sets.push(set);
            }
            models.push((m.member, MinorModel { branch_sets }));
        }
        Ok(Packing { models })
    }

    fn verify_duality(&self, fam: &Family, g: &Graph, packing: Packing, x: VertexSet) -> Result<(), String> {
        let mode: Mode = self.mode.as_deref().ok_or("missing mode")?.parse()?;
        let constant_used = match self.constant_used.as_deref().ok_or("missing constant")? {
            "astronomical" => Magnitude::Astronomical,
            s => Magnitude::Finite(s.parse::<BigUint>().map_err(|_| format!("bad constant '{s}'"))?),
        };
        let cert = DualityCertificate {
            mode,
            packing,
            transversal: Transversal::new(x),
            constant_used,
            degraded: self.degraded.ok_or("missing degraded flag")?,
        };
        if self.ratio != Some(cert.ratio()) {
            return Err("ratio does not match the packing and transversal sizes".into());
        }
        if let Magnitude::Finite(c) = &cert.constant_used {
            let bound = c * BigUint::from(cert.packing.size().max(1));
            if mode == Mode::Faithful && !cert.degraded && BigUint::from(cert.transversal.size()) > bound {
                return Err("transversal exceeds the constant times the packing".into());
            }
        }
        if !verify_certificate(fam, g, &cert) {
            return Err("packing or transversal is not valid".into());
        }
        Ok(())
    }

    fn verify_fpt(&self, g: &Graph, x: &VertexSet) -> Result<(), String> {
        if !self.family.is_empty() || !self.packing.is_empty() {
            return Err("a deletion document carries no family or packing".into());
        }
        let t = self.pathwidth_below.ok_or("missing pathwidth bound")?;
        let k = self.budget.ok_or("missing budget")?;
        if t == 0 {
            return Err("pathwidth bound must be at least 1".into());
        }
        if x.len() > k {
            return Err(format!("{} deletions exceed the budget {k}", x.len()));
        }
        let rest = g.remove_vertices(x).map_err(|e| e.to_string())?;
        match PathwidthSolver::default().at_most(&rest.graph, t - 1) {
            Ok(Some(_)) => Ok(()),
            Ok(None) => Err(format!("pathwidth after deletion is still at least {t}")),
            Err(e) => Err(e.to_string()),
        }
    }
}
