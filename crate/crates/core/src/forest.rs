//! Resistance by counting spanning forests.
//!
//! For `u ≠ v` in one component, the effective resistance equals the number
//! of spanning 2-forests with `u` and `v` in different trees divided by the
//! number of spanning trees. This module counts both by brute force over edge
//! subsets and shares no code with [`crate::resistance`], so it can serve as
//! an independent check on the linear-algebra path.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::ExtRational;

/// Largest component edge count the enumeration accepts.
pub const FOREST_EDGE_BOUND: usize = 20;

struct DisjointSets(Vec<usize>);

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    /// False if `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

/// Spanning-tree and separating-2-forest counts for `u`, `v` in the
/// component containing them.
pub fn forest_counts(g: &Graph, u: usize, v: usize) -> Result<(u64, u64)> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::Precondition("forest oracle needs u ≠ v".into()));
    }
    let labels = g.component_labels();
    if labels[u] != labels[v] {
        return Err(Error::Disconnected { u, v });
    }
    let comp: Vec<usize> = (0..g.order()).filter(|&x| labels[x] == labels[u]).collect();
    let mut local = vec![usize::MAX; g.order()];
    for (i, &x) in comp.iter().enumerate() {
        local[x] = i;
    }
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|&&(a, _)| labels[a] == labels[u])
        .map(|&(a, b)| (local[a], local[b]))
        .collect();
    if edges.len() > FOREST_EDGE_BOUND {
        return Err(Error::OracleBound {
            edges: edges.len(),
            bound: FOREST_EDGE_BOUND,
        });
    }

    let c = comp.len();
    let (lu, lv) = (local[u], local[v]);
    let mut trees = 0u64;
    let mut forests = 0u64;
    for mask in 0u32..(1u32 << edges.len()) {
        let k = mask.count_ones() as usize;
        if k + 1 != c && k + 2 != c {
            continue;
        }
        let mut sets = DisjointSets::new(c);
        let acyclic = edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .all(|(_, &(a, b))| sets.union(a, b));
        if !acyclic {
            continue;
        }
        if k + 1 == c {
            trees += 1;
        } else if sets.find(lu) != sets.find(lv) {
            forests += 1;
        }
    }
    Ok((trees, forests))
}

/// Effective resistance as forests / trees.
pub fn forest_oracle_resistance(g: &Graph, u: usize, v: usize) -> Result<ExtRational> {
    let (trees, forests) = forest_counts(g, u, v)?;
    Ok(ExtRational::from_bigints(
        BigInt::from(forests),
        BigInt::from(trees),
    ))
}
