//! Excluded-minor families, packings and transversals.

use crate::error::{ErdosPosaError, MinorError};
use crate::graph::{Graph, Subgraph, VertexSet};
use crate::minors::{MinorModel, MinorSearch};

/// A nonempty finite set of nonempty graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    members: Vec<Graph>,
    r: usize,
    forest: Option<usize>,
}

impl Family {
    pub fn new(members: Vec<Graph>) -> Result<Self, ErdosPosaError> {
        if members.is_empty() || members.iter().any(Graph::is_empty) {
            return Err(ErdosPosaError::EmptyFamily);
        }
        let r = members.iter().map(|h| h.connected_components().len()).max().unwrap_or(0);
        // the smallest forest, earliest on ties
        let forest =
            members.iter().enumerate().filter(|(_, h)| h.is_forest()).min_by_key(|(i, h)| (h.n(), *i)).map(|(i, _)| i);
        Ok(Family { members, r, forest })
    }

    pub fn single(h: Graph) -> Result<Self, ErdosPosaError> {
        Family::new(vec![h])
    }

    pub fn members(&self) -> &[Graph] {
        &self.members
    }

    /// Number of members.
    pub fn q(&self) -> usize {
        self.members.len()
    }

    /// Largest number of components of a member.
    pub fn r(&self) -> usize {
        self.r
    }

    /// Index of the designated forest member: the smallest one.
    pub fn forest_index(&self) -> Option<usize> {
        self.forest
    }

    pub fn forest(&self) -> Option<&Graph> {
        self.forest.map(|i| &self.members[i])
    }

    /// Vertex count of the designated forest.
    pub fn t(&self) -> Option<usize> {
        self.forest().map(Graph::n)
    }

    pub fn all_connected(&self) -> bool {
        self.members.iter().all(Graph::is_connected)
    }

    /// Whether some member is a minor of `g`.
    pub fn has_member_minor(&self, search: &MinorSearch, g: &Graph) -> Result<bool, MinorError> {
        for h in &self.members {
            if search.find(h, g)?.is_some() {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// First member that is a minor of `g`, with a model.
    pub fn find_member(&self, search: &MinorSearch, g: &Graph) -> Result<Option<(usize, MinorModel)>, MinorError> {
        for (i, h) in self.members.iter().enumerate() {
            if let Some(m) = search.find(h, g)? {
                return Ok(Some((i, m)));
            }
        }
        Ok(None)
    }
}

/// Vertex-disjoint models of family members, each tagged with its member.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Packing {
    pub models: Vec<(usize, MinorModel)>,
}

impl Packing {
    pub fn size(&self) -> usize {
        self.models.len()
    }

    pub fn is_empty(&self) -> bool {
        self.models.is_empty()
    }

    pub fn vertices(&self) -> VertexSet {
        self.models.iter().flat_map(|(_, m)| m.vertices()).collect()
    }

    /// Every model is valid for its member and no two models share a vertex.
    pub fn is_valid(&self, fam: &Family, g: &Graph) -> bool {
        let mut used = VertexSet::new();
        self.models.iter().all(|(i, m)| {
            fam.members().get(*i).is_some_and(|h| m.is_valid(h, g)) && m.vertices().into_iter().all(|v| used.insert(v))
        })
    }

    /// Maps the models of a packing of `sub.graph` back to the host.
    pub fn lift(&self, sub: &Subgraph) -> Packing {
        Packing { models: self.models.iter().map(|(i, m)| (*i, lift_model(sub, m))).collect() }
    }
}

/// A vertex set meeting every model of every member.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Transversal {
    pub vertices: VertexSet,
}

impl Transversal {
    pub fn new(vertices: VertexSet) -> Self {
        Transversal { vertices }
    }

    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Whether `g - X` has no member as a minor.
    pub fn is_valid(&self, fam: &Family, g: &Graph, search: &MinorSearch) -> Result<bool, MinorError> {
        if self.vertices.iter().any(|&v| v >= g.n()) {
            return Ok(false);
        }
        let rest = g.remove_vertices(&self.vertices)?;
        Ok(!fam.has_member_minor(search, &rest.graph)?)
    }
}

pub(crate) fn lift_model(sub: &Subgraph, m: &MinorModel) -> MinorModel {
    MinorModel { branch_sets: m.branch_sets.iter().map(|s| sub.lift_set(s)).collect() }
}
