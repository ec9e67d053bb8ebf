use crate::error::PathwidthError;
use crate::graph::Graph;

/// Disjoint union of three connected graphs plus a new apex adjacent to one
/// designated vertex of each. The parts keep their order and are shifted by
/// the sizes of the earlier parts; the apex is the last vertex.
pub fn apex_join(g1: &Graph, v1: usize, g2: &Graph, v2: usize, g3: &Graph, v3: usize) -> Result<Graph, PathwidthError> {
    let parts = [(g1, v1), (g2, v2), (g3, v3)];
    let mut joined = Graph::new(0);
    let mut anchors = Vec::with_capacity(3);
    for (i, (g, v)) in parts.into_iter().enumerate() {
        g.check_vertex(v)?;
        if !g.is_connected() {
            return Err(PathwidthError::DisconnectedPart(i + 1));
        }
        anchors.push(joined.n() + v);
        joined = joined.disjoint_union(g);
    }
    let mut out = joined.disjoint_union(&Graph::new(1));
    let apex = out.n() - 1;
    for a in anchors {
        out.add_edge(apex, a)?;
    }
    Ok(out)
}
