//! Exact effective resistance with unit resistors on every edge.
//!
//! Each connected component is handled separately: ground its smallest
//! vertex, delete that row and column from the Laplacian, and solve the
//! remaining (nonsingular) integer system with fraction-free elimination.
//! Pairs in different components are at resistance `+∞`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::graph::Graph;
use crate::rational::ExtRational;
use crate::spectrum::RMultiset;

/// Solves `a · y = d · b` over the integers, where `d` is the last Bareiss
/// pivot (± det a). Returns `(d, y)`; the true solution is `y / d`.
///
/// `a` is `n × n` and must be nonsingular, `b` is `n × k`.
fn solve_scaled(mut a: Vec<Vec<BigInt>>, mut b: Vec<Vec<BigInt>>) -> (BigInt, Vec<Vec<BigInt>>) {
    let n = a.len();
    let k = b.first().map_or(0, Vec::len);
    if n == 0 {
        return (BigInt::one(), b);
    }
    let mut prev = BigInt::one();
    for p in 0..n {
        if a[p][p].is_zero() {
            let r = (p + 1..n)
                .find(|&r| !a[r][p].is_zero())
                .expect("reduced Laplacian of a connected component is nonsingular");
            a.swap(p, r);
            b.swap(p, r);
        }
        let (top, rest) = a.split_at_mut(p + 1);
        let (btop, brest) = b.split_at_mut(p + 1);
        let pivot_row = &top[p];
        let pivot_rhs = &btop[p];
        let pivot = &pivot_row[p];
        for (row, rhs) in rest.iter_mut().zip(brest.iter_mut()) {
            let factor = std::mem::take(&mut row[p]);
            for j in p + 1..n {
                row[j] = (&row[j] * pivot - &factor * &pivot_row[j]) / &prev;
            }
            for j in 0..k {
                rhs[j] = (&rhs[j] * pivot - &factor * &pivot_rhs[j]) / &prev;
            }
        }
        prev = a[p][p].clone();
    }
    let det = prev;

    let mut y = vec![vec![BigInt::zero(); k]; n];
    for col in 0..k {
        for i in (0..n).rev() {
            let mut acc = &det * &b[i][col];
            for j in i + 1..n {
                if !a[i][j].is_zero() {
                    acc -= &a[i][j] * &y[j][col];
                }
            }
            debug_assert!((&acc % &a[i][i]).is_zero(), "inexact back substitution");
            y[i][col] = acc / &a[i][i];
        }
    }
    (det, y)
}

/// Reduced Laplacian of `component` (sorted vertex list) with its first vertex
/// grounded. `local[v]` gives the row of vertex `v`, `None` for the ground.
fn reduced_laplacian(g: &Graph, component: &[usize]) -> (Vec<Vec<BigInt>>, Vec<Option<usize>>) {
    let mut local = vec![None; g.order()];
    for (i, &v) in component.iter().enumerate().skip(1) {
        local[v] = Some(i - 1);
    }
    let m = component.len() - 1;
    let mut lap = vec![vec![BigInt::zero(); m]; m];
    for &v in &component[1..] {
        let i = local[v].expect("non-ground vertex");
        lap[i][i] = BigInt::from(g.degree(v));
        for &w in g.neighbors(v) {
            if let Some(j) = local[w] {
                lap[i][j] = BigInt::from(-1);
            }
        }
    }
    (lap, local)
}

/// Effective resistance between `u` and `v`.
pub fn effective_resistance(g: &Graph, u: usize, v: usize) -> Result<ExtRational> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Ok(ExtRational::zero());
    }
    let labels = g.component_labels();
    if labels[u] != labels[v] {
        return Ok(ExtRational::Infinity);
    }
    let component: Vec<usize> = (0..g.order()).filter(|&x| labels[x] == labels[u]).collect();
    let (lap, local) = reduced_laplacian(g, &component);
    let mut rhs = vec![vec![BigInt::zero()]; lap.len()];
    if let Some(i) = local[u] {
        rhs[i][0] += 1;
    }
    if let Some(j) = local[v] {
        rhs[j][0] -= 1;
    }
    let (det, y) = solve_scaled(lap, rhs);
    let at = |x: usize| local[x].map_or_else(BigInt::zero, |i| y[i][0].clone());
    Ok(ExtRational::from_bigints(at(u) - at(v), det))
}

/// All pairwise resistances of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResistanceMatrix {
    order: usize,
    entries: Vec<ExtRational>,
}

impl ResistanceMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, u: usize, v: usize) -> &ExtRational {
        &self.entries[u * self.order + v]
    }

    pub fn row(&self, v: usize) -> &[ExtRational] {
        &self.entries[v * self.order..(v + 1) * self.order]
    }

    /// Multiset of all `C(order, 2)` off-diagonal entries.
    pub fn spectrum(&self) -> RMultiset {
        let mut ms = RMultiset::new();
        for u in 0..self.order {
            for v in u + 1..self.order {
                ms.insert(self.get(u, v).clone());
            }
        }
        ms
    }

    /// Resistances from `v` to every other vertex.
    pub fn rsv(&self, v: usize) -> RMultiset {
        self.row(v)
            .iter()
            .enumerate()
            .filter(|&(u, _)| u != v)
            .map(|(_, r)| r.clone())
            .collect()
    }
}

/// Every pairwise resistance, factoring each component once.
pub fn resistance_matrix(g: &Graph) -> ResistanceMatrix {
    let n = g.order();
    let mut entries = vec![ExtRational::Infinity; n * n];
    for v in 0..n {
        entries[v * n + v] = ExtRational::zero();
    }
    for component in g.components() {
        if component.len() < 2 {
            continue;
        }
        let (lap, local) = reduced_laplacian(g, &component);
        let m = lap.len();
        let identity = (0..m)
            .map(|i| (0..m).map(|j| BigInt::from((i == j) as u8)).collect())
            .collect();
        // y = det · L'^{-1}; the grounded vertex contributes zero entries
        let (det, y) = solve_scaled(lap, identity);
        let entry = |a: usize, b: usize| match (local[a], local[b]) {
            (Some(i), Some(j)) => y[i][j].clone(),
            _ => BigInt::zero(),
        };
        for (ia, &a) in component.iter().enumerate() {
            for &b in &component[ia + 1..] {
                let num = entry(a, a) + entry(b, b) - entry(a, b) * 2;
                let r = ExtRational::from_bigints(num, det.clone());
                entries[a * n + b] = r.clone();
                entries[b * n + a] = r;
            }
        }
    }
    ResistanceMatrix { order: n, entries }
}

/// Resistances from `v` to every other vertex.
pub fn rsv(g: &Graph, v: usize) -> Result<RMultiset> {
    g.check_vertex(v)?;
    Ok(resistance_matrix(g).rsv(v))
}
