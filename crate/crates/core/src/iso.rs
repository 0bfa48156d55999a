//! Canonical forms for exact isomorphism testing.
//!
//! The search refines the vertex coloring by neighbor-color multisets until
//! it is stable, then individualizes each vertex of the first smallest
//! non-singleton cell in turn and recurses. Every discrete coloring reached
//! is a relabeling of the graph; the canonical form is the relabeling whose
//! upper-triangle adjacency bit string is lexicographically smallest.
//! Leaves that encode the same graph reveal automorphisms, which are used to
//! skip children lying in an orbit that was already explored.

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default bound on the order accepted by [`canonical_form`].
pub const DEFAULT_MAX_ORDER: usize = 128;

/// Environment variable overriding [`DEFAULT_MAX_ORDER`].
pub const MAX_ORDER_ENV: &str = "RESSPEC_MAX_ORDER";

/// The configured order bound, read once from [`MAX_ORDER_ENV`].
pub fn max_order() -> usize {
    static BOUND: OnceLock<usize> = OnceLock::new();
    *BOUND.get_or_init(|| {
        std::env::var(MAX_ORDER_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_MAX_ORDER)
    })
}

/// Canonical relabeling of a graph. Two graphs are isomorphic exactly when
/// their canonical forms are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalForm {
    order: usize,
    edges: Vec<(usize, usize)>,
}

impl CanonicalForm {
    /// The form of the graph with no vertices.
    pub fn of_empty() -> Self {
        CanonicalForm {
            order: 0,
            edges: Vec::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn to_graph(&self) -> Graph {
        Graph::new(self.order, self.edges.iter().copied()).expect("canonical edges are valid")
    }
}

struct Leaf {
    code: Vec<u64>,
    /// `at[i]` is the vertex placed at position `i`.
    at: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    adj: Vec<bool>,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

/// Replaces arbitrary color values by their ranks `0..k`; returns `k`.
fn compress<T: Ord + Clone>(keys: &[T], colors: &mut [usize]) -> usize {
    let mut sorted: Vec<T> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    for (c, key) in colors.iter_mut().zip(keys) {
        *c = sorted.binary_search(key).expect("key present");
    }
    sorted.len()
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        let mut adj = vec![false; n * n];
        for &(u, v) in g.edges() {
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        Search {
            g,
            adj,
            first: None,
            best: None,
            automorphisms: Vec::new(),
        }
    }

    /// Refines to the coarsest stable coloring finer than `colors`.
    fn refine(&self, colors: &mut [usize]) {
        let n = colors.len();
        let mut cells = {
            let mut distinct = colors.to_vec();
            distinct.sort_unstable();
            distinct.dedup();
            distinct.len()
        };
        loop {
            let keys: Vec<(usize, Vec<usize>)> = (0..n)
                .map(|v| {
                    let mut nb: Vec<usize> =
                        self.g.neighbors(v).iter().map(|&w| colors[w]).collect();
                    nb.sort_unstable();
                    (colors[v], nb)
                })
                .collect();
            let next = compress(&keys, colors);
            if next == cells {
                return;
            }
            cells = next;
        }
    }

    fn leaf(&mut self, colors: &[usize]) {
        let n = colors.len();
        let mut at = vec![0; n];
        for (v, &c) in colors.iter().enumerate() {
            at[c] = v;
        }
        let bits = n * n.saturating_sub(1) / 2;
        let mut code = vec![0u64; bits.div_ceil(64)];
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.adj[at[i] * n + at[j]] {
                    code[k / 64] |= 1 << (63 - k % 64);
                }
                k += 1;
            }
        }
        let leaf = Leaf { code, at };

        for reference in [&self.first, &self.best].into_iter().flatten() {
            if reference.code == leaf.code {
                let mut gamma = vec![0; n];
                for i in 0..n {
                    gamma[reference.at[i]] = leaf.at[i];
                }
                if gamma.iter().enumerate().any(|(v, &w)| v != w) {
                    self.automorphisms.push(gamma);
                }
                break;
            }
        }
        if self.first.is_none() {
            self.first = Some(Leaf {
                code: leaf.code.clone(),
                at: leaf.at.clone(),
            });
        }
        if self.best.as_ref().is_none_or(|b| leaf.code < b.code) {
            self.best = Some(leaf);
        }
    }

    /// Whether `v` lies in the orbit of an explored sibling under the known
    /// automorphisms fixing `path` pointwise.
    fn pruned(&self, path: &[usize], explored: &[usize], v: usize) -> bool {
        if explored.is_empty() {
            return false;
        }
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for gamma in &self.automorphisms {
            if path.iter().any(|&x| gamma[x] != x) {
                continue;
            }
            for (x, &y) in gamma.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&w| find(&mut parent, w) == rv)
    }

    fn visit(&mut self, colors: Vec<usize>, path: &mut Vec<usize>) {
        let n = colors.len();
        let mut sizes = vec![0usize; n];
        for &c in &colors {
            sizes[c] += 1;
        }
        let target = (0..n)
            .filter(|&c| sizes[c] > 1)
            .min_by_key(|&c| (sizes[c], c));
        let Some(target) = target else {
            self.leaf(&colors);
            return;
        };
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut explored = Vec::new();
        for &v in &cell {
            if self.pruned(path, &explored, v) {
                continue;
            }
            let mut child: Vec<usize> = colors
                .iter()
                .enumerate()
                .map(|(u, &c)| 2 * c + usize::from(c == target && u != v))
                .collect();
            self.refine(&mut child);
            path.push(v);
            self.visit(child, path);
            path.pop();
            explored.push(v);
        }
    }
}

/// Canonical form under an explicit order bound.
pub fn canonical_form_bounded(g: &Graph, bound: usize) -> Result<CanonicalForm> {
    let n = g.order();
    if n > bound {
        return Err(Error::OrderBound { order: n, bound });
    }
    let mut search = Search::new(g);
    let mut colors = vec![0; n];
    search.refine(&mut colors);
    search.visit(colors, &mut Vec::new());

    let mut pos = vec![0; n];
    if let Some(best) = &search.best {
        for (i, &v) in best.at.iter().enumerate() {
            pos[v] = i;
        }
    }
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v])))
        .collect();
    edges.sort_unstable();
    Ok(CanonicalForm { order: n, edges })
}

/// Canonical form under the configured bound ([`max_order`]).
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_form_bounded(g, max_order())
}

/// Exact isomorphism test. Order, size and degree sequence are compared
/// before any search.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    let bound = max_order();
    for g in [a, b] {
        if g.order() > bound {
            return Err(Error::OrderBound {
                order: g.order(),
                bound,
            });
        }
    }
    if a.order() != b.order() || a.size() != b.size() || a.degree_sequence() != b.degree_sequence()
    {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{disjoint_union, named};

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn triangle_labelings_agree() {
        let c3 = named::cycle(3).unwrap();
        let forms: Vec<CanonicalForm> = permutations(3)
            .iter()
            .map(|p| canonical_form(&c3.relabel(p).unwrap()).unwrap())
            .collect();
        assert_eq!(forms.len(), 6);
        assert!(forms.iter().all(|f| f == &forms[0]));
    }

    #[test]
    fn star_and_path_differ() {
        let star = named::star(3).unwrap();
        let p4 = named::path(3).unwrap();
        assert_ne!(canonical_form(&star).unwrap(), canonical_form(&p4).unwrap());
        assert!(!are_isomorphic(&star, &p4).unwrap());
    }

    #[test]
    fn t1_t2_not_isomorphic() {
        assert!(!are_isomorphic(&named::t1(), &named::t2()).unwrap());
        let p = [4, 7, 0, 2, 8, 1, 3, 6, 5];
        assert!(are_isomorphic(&named::t1(), &named::t1().relabel(&p).unwrap()).unwrap());
    }

    #[test]
    fn regular_graphs_with_equal_degrees() {
        // C6 versus two triangles: degree sequences agree, refinement does not split
        let c6 = named::cycle(6).unwrap();
        let c3 = named::cycle(3).unwrap();
        let two = disjoint_union(&c3, &c3);
        assert!(!are_isomorphic(&c6, &two).unwrap());
        let perm = [3, 5, 1, 0, 4, 2];
        assert!(are_isomorphic(&two, &two.relabel(&perm).unwrap()).unwrap());
    }

    #[test]
    fn highly_symmetric_graphs_finish() {
        for n in [1, 2, 10, 40] {
            let k = named::complete(n).unwrap();
            assert_eq!(canonical_form(&k).unwrap().edges().len(), n * (n - 1) / 2);
            assert_eq!(canonical_form(&Graph::empty(n)).unwrap().order(), n);
        }
        let empty = Graph::empty(0);
        assert_eq!(canonical_form(&empty).unwrap().order(), 0);
    }

    #[test]
    fn form_round_trips_to_an_isomorphic_graph() {
        let g = named::t2();
        let form = canonical_form(&g).unwrap();
        let back = form.to_graph();
        assert_eq!(canonical_form(&back).unwrap(), form);
    }

    #[test]
    fn bound_is_enforced() {
        let g = Graph::empty(5);
        assert_eq!(
            canonical_form_bounded(&g, 4),
            Err(Error::OrderBound { order: 5, bound: 4 })
        );
    }
}
