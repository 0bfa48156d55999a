//! Exhaustive search for non-isomorphic graphs with equal spectra.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use crate::constructions::{PairReport, Provenance};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::{canonical_form, CanonicalForm};
use crate::spectrum::{resistance_spectrum, RMultiset};

/// Largest order for which [`MineSource::Exhaustive`] is accepted.
pub const EXHAUSTIVE_MAX_ORDER: usize = 7;

/// Where [`mine`] takes its candidate graphs from.
#[derive(Clone, Debug)]
pub enum MineSource {
    /// Every graph of the given order, up to isomorphism.
    Exhaustive,
    /// A caller-supplied list; isomorphic duplicates are dropped.
    Graphs(Vec<Graph>),
}

/// One representative of every isomorphism class of graphs on `order`
/// vertices, sorted by canonical form.
///
/// Each graph on `n` vertices arises from one on `n − 1` by adding a vertex
/// with some neighborhood, so extending every representative of the
/// previous order in all `2^(n−1)` ways and keeping one graph per canonical
/// form is exhaustive.
pub fn enumerate_nonisomorphic(order: usize) -> Result<Vec<Graph>> {
    let mut reps = vec![CanonicalForm::of_empty()];
    for n in 1..=order {
        let mut next: HashSet<CanonicalForm> = HashSet::new();
        for rep in &reps {
            let base = rep.to_graph();
            for mask in 0u64..1 << (n - 1) {
                let mut edges = base.edges().to_vec();
                edges.extend(
                    (0..n - 1)
                        .filter(|&u| mask >> u & 1 == 1)
                        .map(|u| (u, n - 1)),
                );
                let g = Graph::new(n, edges)?;
                next.insert(canonical_form(&g)?);
            }
        }
        reps = next.into_iter().collect();
        reps.sort();
    }
    Ok(reps.iter().map(CanonicalForm::to_graph).collect())
}

/// Every pair of non-isomorphic graphs with equal spectra among the
/// candidates. Pairs come grouped by spectrum, groups ordered by their first
/// member; indices in the provenance refer to the deduplicated candidate
/// list.
pub fn mine(order: usize, source: MineSource) -> Result<Vec<PairReport>> {
    let graphs = match source {
        MineSource::Exhaustive => {
            if order > EXHAUSTIVE_MAX_ORDER {
                return Err(Error::InvalidParameter(format!(
                    "exhaustive search is limited to order {EXHAUSTIVE_MAX_ORDER}; \
                     supply a graph list for order {order}"
                )));
            }
            enumerate_nonisomorphic(order)?
        }
        MineSource::Graphs(list) => {
            let mut seen = HashSet::new();
            let mut unique = Vec::new();
            for g in list {
                if g.order() != order {
                    return Err(Error::Precondition(format!(
                        "candidate of order {} in a search of order {order}",
                        g.order()
                    )));
                }
                if seen.insert(canonical_form(&g)?) {
                    unique.push(g);
                }
            }
            unique
        }
    };

    let spectra: Vec<RMultiset> = graphs.par_iter().map(resistance_spectrum).collect();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot: HashMap<&RMultiset, usize> = HashMap::new();
    for (i, s) in spectra.iter().enumerate() {
        let k = *slot.entry(s).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[k].push(i);
    }

    let mut out = Vec::new();
    for group in groups.iter().filter(|g| g.len() > 1) {
        for (x, &i) in group.iter().enumerate() {
            for &j in &group[x + 1..] {
                out.push(PairReport {
                    graph_a: graphs[i].clone(),
                    graph_b: graphs[j].clone(),
                    spectrum: spectra[i].clone(),
                    isomorphic: false,
                    provenance: Provenance::Mined {
                        order,
                        first: i,
                        second: j,
                    },
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        // number of graphs on n unlabeled vertices
        let want = [1, 1, 2, 4, 11, 34, 156];
        for (n, &count) in want.iter().enumerate() {
            assert_eq!(
                enumerate_nonisomorphic(n).unwrap().len(),
                count,
                "order {n}"
            );
        }
    }

    #[test]
    fn no_pairs_up_to_seven() {
        for n in 1..=EXHAUSTIVE_MAX_ORDER {
            assert!(
                mine(n, MineSource::Exhaustive).unwrap().is_empty(),
                "order {n}"
            );
        }
        assert!(mine(8, MineSource::Exhaustive).is_err());
    }

    #[test]
    fn list_input_is_deduplicated() {
        let c4 = crate::graph::named::cycle(4).unwrap();
        let again = c4.relabel(&[2, 0, 3, 1]).unwrap();
        let g = crate::graph::named::star(3).unwrap();
        assert!(mine(4, MineSource::Graphs(vec![c4.clone(), again, g]))
            .unwrap()
            .is_empty());
        assert!(mine(5, MineSource::Graphs(vec![c4])).is_err());
    }

    #[test]
    fn list_input_finds_known_pair() {
        let pair = crate::constructions::family_q(10).unwrap().remove(0);
        let found = mine(
            10,
            MineSource::Graphs(vec![pair.graph_a.clone(), pair.graph_b.clone()]),
        )
        .unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].spectrum, pair.spectrum);
        found[0].verify().unwrap();
    }
}
