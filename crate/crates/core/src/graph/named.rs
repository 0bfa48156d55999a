//! Elementary graph families and the two anchored trees-with-a-cycle used by
//! the branch-swap constructions.
//!
//! The trees `T1` and `T2` are labeled so that the vertex drawn as `t_{i,j}`
//! gets index `j - 1`:
//!
//! | index | 0 | 1 | 2 | 3 | 4 | 5 | 6 | 7 | 8 |
//! |-------|---|---|---|---|---|---|---|---|---|
//! | `T1`  | t₁,₁ | t₁,₂ | t₁,₃ | t₁,₄ | t₁,₅ | t₁,₆ | t₁,₇ | t₁,₈ | t₁,₉ |
//! | `T2`  | t₂,₁ | t₂,₂ | t₂,₃ | t₂,₄ | t₂,₅ | t₂,₆ | t₂,₇ | t₂,₈ | t₂,₉ |
//!
//! Both are anchored at index [`T_ANCHOR`] (the vertex `t_{i,3}`).

use super::Graph;
use crate::error::{Error, Result};

/// Index of the anchor vertex `t_{i,3}` in [`t1`] and [`t2`].
pub const T_ANCHOR: usize = 2;

const T1_EDGES: [(usize, usize); 9] = [
    (1, 2),
    (1, 3),
    (2, 4),
    (3, 4),
    (4, 5),
    (4, 6),
    (5, 7),
    (6, 8),
    (8, 0),
];

const T2_EDGES: [(usize, usize); 9] = [
    (1, 0),
    (0, 2),
    (0, 3),
    (2, 4),
    (3, 4),
    (4, 5),
    (5, 6),
    (5, 7),
    (7, 8),
];

fn positive(name: &str, n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidParameter(format!(
            "{name} needs a positive size"
        )))
    } else {
        Ok(())
    }
}

/// The path of length `n`, on `n + 1` vertices `0 - 1 - ... - n`.
pub fn path(n: usize) -> Result<Graph> {
    positive("path", n)?;
    Ok(Graph::from_edge_set(
        n + 1,
        (0..n).map(|i| (i, i + 1)).collect(),
    ))
}

/// The cycle on `n ≥ 3` vertices.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "a simple cycle needs at least 3 vertices, got {n}"
        )));
    }
    let set = (0..n).map(|i| {
        let j = (i + 1) % n;
        (i.min(j), i.max(j))
    });
    Ok(Graph::from_edge_set(n, set.collect()))
}

/// The complete graph `K_n`.
pub fn complete(n: usize) -> Result<Graph> {
    positive("complete", n)?;
    let set = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    Ok(Graph::from_edge_set(n, set))
}

/// The edgeless graph on `n` vertices.
pub fn empty(n: usize) -> Result<Graph> {
    positive("empty", n)?;
    Ok(Graph::empty(n))
}

/// The star `K_{1,n}` with center 0.
pub fn star(n: usize) -> Result<Graph> {
    positive("star", n)?;
    Ok(Graph::from_edge_set(
        n + 1,
        (1..=n).map(|i| (0, i)).collect(),
    ))
}

pub fn t1() -> Graph {
    Graph::new(9, T1_EDGES).expect("T1 edge table is valid")
}

pub fn t2() -> Graph {
    Graph::new(9, T2_EDGES).expect("T2 edge table is valid")
}

/// Looks a family up by name; `T1` and `T2` ignore `size`.
pub fn named_graph(name: &str, size: Option<usize>) -> Result<Graph> {
    let need =
        || size.ok_or_else(|| Error::InvalidParameter(format!("`{name}` needs a size parameter")));
    match name {
        "path" => path(need()?),
        "cycle" => cycle(need()?),
        "complete" => complete(need()?),
        "empty" => empty(need()?),
        "star" => star(need()?),
        "T1" | "t1" => Ok(t1()),
        "T2" | "t2" => Ok(t2()),
        other => Err(Error::UnknownGraph(other.to_string())),
    }
}
