//! Simple undirected graphs on vertices `0..order`.
//!
//! A [`Graph`] is validated once at construction and never mutated
//! afterwards; every builder returns a fresh value.

mod glue;
pub mod named;

pub use glue::{disjoint_union, glue, identify, join_extend, GlueSpec, JoinKind};

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple undirected graph. Edges are stored as `(u, v)` with `u < v`,
/// sorted ascending.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    order: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    order: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = Error;

    fn try_from(raw: RawGraph) -> Result<Self> {
        Graph::new(raw.order, raw.edges)
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph {
            order: g.order,
            edges: g.edges,
        }
    }
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, out-of-range
    /// endpoints and repeated pairs (in either orientation).
    pub fn new<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::Loop(u));
            }
            if u >= order || v >= order {
                return Err(Error::EdgeOutOfRange { u, v, order });
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge { u, v });
            }
        }
        Ok(Self::from_edge_set(order, set))
    }

    /// Builds a graph from pairs that are already known to be valid; used by
    /// the internal builders that produce normalized edges by construction.
    pub(crate) fn from_edge_set(order: usize, set: BTreeSet<(usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); order];
        for &(u, v) in &set {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            order,
            edges: set.into_iter().collect(),
            adjacency,
        }
    }

    /// The graph on `order` vertices with no edges.
    pub fn empty(order: usize) -> Self {
        Self::from_edge_set(order, BTreeSet::new())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Degrees sorted in ascending order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        seq.sort_unstable();
        seq
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                order: self.order,
            })
        }
    }

    /// Connected components, each sorted ascending, listed in order of their
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for start in 0..self.order {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &y in &self.adjacency[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// `labels[v]` is the index of the component containing `v`, numbered as in
    /// [`Graph::components`].
    pub fn component_labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.order];
        for (i, comp) in self.components().iter().enumerate() {
            for &v in comp {
                labels[v] = i;
            }
        }
        labels
    }

    pub fn is_connected(&self) -> bool {
        self.order <= 1 || self.components().len() == 1
    }

    /// Renames every vertex `v` to `perm[v]`. `perm` must be a permutation of
    /// `0..order`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.order {
            return Err(Error::InvalidParameter(format!(
                "permutation has length {}, graph has order {}",
                perm.len(),
                self.order
            )));
        }
        let mut hit = vec![false; self.order];
        for &p in perm {
            if p >= self.order || std::mem::replace(&mut hit[p], true) {
                return Err(Error::InvalidParameter(
                    "relabeling is not a permutation".into(),
                ));
            }
        }
        let set = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        Ok(Self::from_edge_set(self.order, set))
    }

    /// Returns a copy with the edge `{u, v}` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        Graph::new(self.order, self.edges.iter().copied().chain([(u, v)]))
    }

    /// The subgraph induced on `vertices` (in the given order), with vertex
    /// `vertices[i]` becoming `i`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.order];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let set = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u].min(index[v]), index[u].max(index[v])))
            .collect();
        Self::from_edge_set(vertices.len(), set)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(order {}; ", self.order)?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str(")")
    }
}
