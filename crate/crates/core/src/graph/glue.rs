use std::collections::BTreeSet;

use super::Graph;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Places `b` after `a`: vertex `v` of `b` becomes `a.order() + v`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.order();
    let set = a
        .edges()
        .iter()
        .copied()
        .chain(b.edges().iter().map(|&(u, v)| (u + shift, v + shift)))
        .collect();
    Graph::from_edge_set(a.order() + b.order(), set)
}

/// Collapses each group of vertices to a single vertex.
///
/// The smallest member of a group represents it. Surviving vertices are
/// renumbered `0..` in their original relative order, and the returned map
/// sends every old vertex to its new index. Parallel edges created by the
/// collapse are merged and loops are dropped, so the result is always simple.
pub fn identify(g: &Graph, groups: &[Vec<usize>]) -> Result<(Graph, Vec<usize>)> {
    let n = g.order();
    let mut rep: Vec<usize> = (0..n).collect();
    let mut grouped = vec![false; n];
    for group in groups {
        let min = *group.iter().min().ok_or(Error::EmptyGroup)?;
        for &v in group {
            g.check_vertex(v)?;
            if std::mem::replace(&mut grouped[v], true) {
                return Err(Error::OverlappingGroups(v));
            }
            rep[v] = min;
        }
    }

    let mut new_index = vec![usize::MAX; n];
    let mut next = 0;
    for v in 0..n {
        if rep[v] == v {
            new_index[v] = next;
            next += 1;
        }
    }
    let map: Vec<usize> = (0..n).map(|v| new_index[rep[v]]).collect();

    let set: BTreeSet<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (map[u], map[v]))
        .filter(|(a, b)| a != b)
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    Ok((Graph::from_edge_set(next, set), map))
}

/// Inputs of the anchored gluing operator: pieces are hung on `attach`
/// vertices of `host` in consecutive blocks whose sizes are the parts of
/// `partition`.
#[derive(Clone, Debug)]
pub struct GlueSpec {
    pub host: Graph,
    pub attach: Vec<usize>,
    pub partition: Partition,
    pub pieces: Vec<Graph>,
    /// One anchor per piece; `anchors[i]` is a vertex of `pieces[i]`.
    pub anchors: Vec<usize>,
}

impl GlueSpec {
    pub fn validate(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for &v in &self.attach {
            self.host.check_vertex(v)?;
            if !seen.insert(v) {
                return Err(Error::InvalidGlue(format!("attach vertex {v} repeated")));
            }
        }
        if self.partition.len() > self.attach.len() {
            return Err(Error::InvalidGlue(format!(
                "partition {} has {} parts but only {} attach vertices",
                self.partition,
                self.partition.len(),
                self.attach.len()
            )));
        }
        if self.partition.total() != self.pieces.len() {
            return Err(Error::InvalidGlue(format!(
                "partition {} sums to {} but {} pieces were given",
                self.partition,
                self.partition.total(),
                self.pieces.len()
            )));
        }
        if self.anchors.len() != self.pieces.len() {
            return Err(Error::InvalidGlue(format!(
                "{} anchors for {} pieces",
                self.anchors.len(),
                self.pieces.len()
            )));
        }
        for (piece, &a) in self.pieces.iter().zip(&self.anchors) {
            piece.check_vertex(a)?;
        }
        Ok(())
    }
}

/// Builds the glued graph.
///
/// Host vertices keep their indices. Non-anchor vertices of the pieces follow
/// in piece order, each piece's vertices in their original order.
pub fn glue(spec: &GlueSpec) -> Result<Graph> {
    spec.validate()?;
    let mut union = spec.host.clone();
    let mut offsets = Vec::with_capacity(spec.pieces.len());
    for piece in &spec.pieces {
        offsets.push(union.order());
        union = disjoint_union(&union, piece);
    }

    let mut groups = Vec::with_capacity(spec.partition.len());
    let mut next_piece = 0;
    for (&part, &target) in spec.partition.parts().iter().zip(&spec.attach) {
        let mut group = vec![target];
        let block = next_piece..next_piece + part;
        group.extend(
            offsets[block.clone()]
                .iter()
                .zip(&spec.anchors[block])
                .map(|(o, a)| o + a),
        );
        next_piece += part;
        groups.push(group);
    }
    let (glued, _) = identify(&union, &groups)?;
    Ok(glued)
}

/// What kind of graph [`join_extend`] appends.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum JoinKind {
    /// The new vertices form a clique.
    Complete,
    /// The new vertices are mutually non-adjacent.
    Empty,
}

/// Appends `r` new vertices (a clique or an independent set) and joins every
/// vertex of `x` to every new vertex. Returns the new graph and the indices of
/// the appended vertices.
pub fn join_extend(
    g: &Graph,
    x: &[usize],
    r: usize,
    kind: JoinKind,
) -> Result<(Graph, Vec<usize>)> {
    if r == 0 {
        return Err(Error::InvalidParameter(
            "join needs at least one new vertex".into(),
        ));
    }
    let mut xs = BTreeSet::new();
    for &v in x {
        g.check_vertex(v)?;
        xs.insert(v);
    }
    let n = g.order();
    let fresh: Vec<usize> = (n..n + r).collect();
    let mut set: BTreeSet<(usize, usize)> = g.edges().iter().copied().collect();
    if kind == JoinKind::Complete {
        for (i, &a) in fresh.iter().enumerate() {
            for &b in &fresh[i + 1..] {
                set.insert((a, b));
            }
        }
    }
    for &u in &xs {
        for &w in &fresh {
            set.insert((u, w));
        }
    }
    Ok((Graph::from_edge_set(n + r, set), fresh))
}
