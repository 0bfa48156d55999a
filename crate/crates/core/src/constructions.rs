//! Predicates and generators for families of non-isomorphic graphs that share
//! a resistance spectrum.
//!
//! Two mechanisms produce such families:
//!
//! * **Branch swapping.** If two anchored graphs have equal spectra and equal
//!   anchor profiles (relation 𝒰), hanging one or the other on a host leaves
//!   the host's spectrum unchanged. With the pair `(T1, T2)` hung on `k`
//!   vertices of a long path this gives `2^k` graphs ([`family_2k`]).
//! * **Equal sums of squares.** On a resistance-transitive vertex set, the
//!   spectrum of a gluing only depends on the partition through
//!   `Σ aᵢ(aᵢ−1)/2` and `Σ_{i<j} aᵢaⱼ`, so partitions with equal sums of
//!   squares give equal spectra ([`equal_squares_check`], [`family_q`]).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::named::{self, T_ANCHOR};
use crate::graph::{glue, join_extend, GlueSpec, Graph, JoinKind};
use crate::iso::are_isomorphic;
use crate::partition::{partitions, Partition};
use crate::resistance::{resistance_matrix, rsv};
use crate::spectrum::{
    closed_form_spectrum, resistance_spectrum, spectra_equal, RMultiset, STransitiveProfile,
};

/// Whether `G` and `H` have equal spectra and `g`, `h` have equal
/// resistance profiles.
pub fn relation_u(big_g: &Graph, g: usize, big_h: &Graph, h: usize) -> Result<bool> {
    big_g.check_vertex(g)?;
    big_h.check_vertex(h)?;
    let (mg, mh) = (resistance_matrix(big_g), resistance_matrix(big_h));
    Ok(mg.spectrum() == mh.spectrum() && mg.rsv(g) == mh.rsv(h))
}

/// Resistance-transitivity test; see [`STransitiveProfile`].
pub fn s_transitive(g: &Graph, set: &[usize]) -> Result<Option<STransitiveProfile>> {
    STransitiveProfile::compute(g, set)
}

/// Two anchored graphs known to be in relation 𝒰.
#[derive(Clone, Debug)]
pub struct UPair {
    left: Graph,
    left_anchor: usize,
    right: Graph,
    right_anchor: usize,
}

impl UPair {
    pub fn new(left: Graph, left_anchor: usize, right: Graph, right_anchor: usize) -> Result<Self> {
        if !relation_u(&left, left_anchor, &right, right_anchor)? {
            return Err(Error::Precondition(
                "graphs are not in relation U at the given anchors".into(),
            ));
        }
        Ok(UPair {
            left,
            left_anchor,
            right,
            right_anchor,
        })
    }

    /// `T1` and `T2`, both anchored at `t_{·,3}`.
    pub fn t1_t2() -> Self {
        UPair {
            left: named::t1(),
            left_anchor: T_ANCHOR,
            right: named::t2(),
            right_anchor: T_ANCHOR,
        }
    }

    pub fn left(&self) -> (&Graph, usize) {
        (&self.left, self.left_anchor)
    }

    pub fn right(&self) -> (&Graph, usize) {
        (&self.right, self.right_anchor)
    }

    pub fn swapped(&self) -> Self {
        UPair {
            left: self.right.clone(),
            left_anchor: self.right_anchor,
            right: self.left.clone(),
            right_anchor: self.left_anchor,
        }
    }
}

/// How a reported pair was produced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "construction", rename_all = "snake_case")]
pub enum Provenance {
    /// Gluing by two partitions with equal sums of squares.
    EqualSquares {
        host_order: usize,
        set: Vec<usize>,
        a: Partition,
        b: Partition,
        piece_order: usize,
        anchor: usize,
    },
    /// A member pair of the order-`n` family: cliques shaped by `blocks`
    /// (the `index`-th partition of `n − 9`), the first `j` of them joined to
    /// three new vertices forming `join`.
    OrderFamily {
        n: usize,
        index: usize,
        blocks: Partition,
        j: usize,
        join: JoinKind,
        a: Partition,
        b: Partition,
    },
    /// Identical host and blocks, pieces swapped between 𝒰-related graphs.
    BranchSwap {
        set: Vec<usize>,
        partition: Partition,
    },
    /// Two graphs found to share a spectrum by exhaustive search.
    Mined {
        order: usize,
        first: usize,
        second: usize,
    },
}

/// Two graphs with a common resistance spectrum, and where they came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairReport {
    pub graph_a: Graph,
    pub graph_b: Graph,
    pub spectrum: RMultiset,
    pub isomorphic: bool,
    pub provenance: Provenance,
}

impl PairReport {
    /// Recomputes both spectra and the isomorphism flag from the graphs and
    /// checks them against the recorded values.
    pub fn verify(&self) -> Result<()> {
        for (name, g) in [("graph_a", &self.graph_a), ("graph_b", &self.graph_b)] {
            let cmp = spectra_equal(&resistance_spectrum(g), &self.spectrum);
            if !cmp.is_equal() {
                return Err(Error::Verification(format!(
                    "{name} spectrum differs from the recorded one ({cmp})"
                )));
            }
        }
        let iso = are_isomorphic(&self.graph_a, &self.graph_b)?;
        if iso != self.isomorphic {
            return Err(Error::Verification(format!(
                "recorded isomorphic = {}, recomputed {iso}",
                self.isomorphic
            )));
        }
        Ok(())
    }
}

fn require_equal(a: &RMultiset, b: &RMultiset, what: &str) -> Result<()> {
    let cmp = spectra_equal(a, b);
    if cmp.is_equal() {
        Ok(())
    } else {
        Err(Error::Verification(format!("{what}: {cmp}")))
    }
}

/// One member of the `2^k` family: `selector[i] ∈ {1, 2}` says whether `T1`
/// or `T2` hangs on the `i`-th path vertex of the middle block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyMember {
    pub selector: Vec<u8>,
    pub graph: Graph,
}

/// Largest `k` accepted by [`family_2k`].
pub const MAX_FAMILY_K: usize = 20;

/// The path `u₁…u_p v₁…v_k w₁…w_q` with the attachment vertices `v₁…v_k`.
pub fn family_2k_host(k: usize, p: usize, q: usize) -> Result<(Graph, Vec<usize>)> {
    if k == 0 || k > MAX_FAMILY_K {
        return Err(Error::InvalidParameter(format!(
            "k must be in 1..={MAX_FAMILY_K}, got {k}"
        )));
    }
    if p + 1 < 8 || q < p + 1 {
        return Err(Error::InvalidParameter(format!(
            "need q ≥ p + 1 ≥ 8, got p = {p}, q = {q}"
        )));
    }
    let host = named::path(k + p + q - 1)?;
    Ok((host, (p..p + k).collect()))
}

/// All `2^k` graphs obtained by hanging `T1` or `T2` (anchored at
/// `t_{·,3}`) on each middle vertex of the path `u₁…u_p v₁…v_k w₁…w_q`,
/// in lexicographic selector order. Requires `q ≥ p + 1 ≥ 8`.
pub fn family_2k(k: usize, p: usize, q: usize) -> Result<Vec<FamilyMember>> {
    let (host, attach) = family_2k_host(k, p, q)?;
    let trees = [named::t1(), named::t2()];
    let mut out = Vec::with_capacity(1 << k);
    for bits in 0..1usize << k {
        let selector: Vec<u8> = (0..k)
            .map(|i| 1 + (bits >> (k - 1 - i) & 1) as u8)
            .collect();
        let spec = GlueSpec {
            host: host.clone(),
            attach: attach.clone(),
            partition: Partition::ones(k)?,
            pieces: selector
                .iter()
                .map(|&s| trees[s as usize - 1].clone())
                .collect(),
            anchors: vec![T_ANCHOR; k],
        };
        out.push(FamilyMember {
            selector,
            graph: glue(&spec)?,
        });
    }
    Ok(out)
}

/// Checks that every member of a family has the same spectrum and that no
/// two members are isomorphic. Returns the common spectrum.
pub fn verify_family(members: &[FamilyMember]) -> Result<RMultiset> {
    let first = members
        .first()
        .ok_or_else(|| Error::Precondition("empty family".into()))?;
    let spectrum = resistance_spectrum(&first.graph);
    for m in &members[1..] {
        require_equal(&spectrum, &resistance_spectrum(&m.graph), "family spectra")?;
    }
    let forms = members
        .iter()
        .map(|m| crate::iso::canonical_form(&m.graph))
        .collect::<Result<Vec<_>>>()?;
    for i in 0..forms.len() {
        for j in i + 1..forms.len() {
            if forms[i] == forms[j] {
                return Err(Error::Verification(format!(
                    "members {:?} and {:?} are isomorphic",
                    members[i].selector, members[j].selector
                )));
            }
        }
    }
    Ok(spectrum)
}

/// Hangs the left graphs of `upairs` on `host` in one gluing and the right
/// graphs in another, under identical `(set, partition)`, and checks that
/// the spectra agree. Isomorphism is recorded but not required.
pub fn branch_swap_check(
    host: &Graph,
    set: &[usize],
    partition: &Partition,
    upairs: &[UPair],
) -> Result<PairReport> {
    if upairs.len() != partition.total() {
        return Err(Error::Precondition(format!(
            "{} pairs for a partition of {}",
            upairs.len(),
            partition.total()
        )));
    }
    let build = |side: fn(&UPair) -> (&Graph, usize)| {
        glue(&GlueSpec {
            host: host.clone(),
            attach: set.to_vec(),
            partition: partition.clone(),
            pieces: upairs.iter().map(|u| side(u).0.clone()).collect(),
            anchors: upairs.iter().map(|u| side(u).1).collect(),
        })
    };
    let graph_a = build(UPair::left)?;
    let graph_b = build(UPair::right)?;
    let spectrum = resistance_spectrum(&graph_a);
    require_equal(&spectrum, &resistance_spectrum(&graph_b), "branch swap")?;
    let isomorphic = are_isomorphic(&graph_a, &graph_b)?;
    Ok(PairReport {
        graph_a,
        graph_b,
        spectrum,
        isomorphic,
        provenance: Provenance::BranchSwap {
            set: set.to_vec(),
            partition: partition.clone(),
        },
    })
}

/// Glues `t` copies of `piece` onto the resistance-transitive set `set` of
/// `g` by partitions `a` and `b` (equal sums of squares), and checks that the
/// two direct spectra and both closed forms all coincide.
pub fn equal_squares_check(
    g: &Graph,
    set: &[usize],
    a: &Partition,
    b: &Partition,
    piece: &Graph,
    anchor: usize,
    t: usize,
) -> Result<PairReport> {
    piece.check_vertex(anchor)?;
    let profile = s_transitive(g, set)?.ok_or_else(|| {
        Error::Precondition(format!("graph is not resistance transitive on {set:?}"))
    })?;
    if a.total() != t || b.total() != t {
        return Err(Error::Precondition(format!(
            "{a} and {b} must both partition {t}"
        )));
    }
    if a == b {
        return Err(Error::Precondition(format!(
            "{a} and {b} are the same partition"
        )));
    }
    if a.sum_of_squares() != b.sum_of_squares() {
        return Err(Error::Precondition(format!(
            "{a} and {b} have unequal sums of squares ({} vs {})",
            a.sum_of_squares(),
            b.sum_of_squares()
        )));
    }
    for p in [a, b] {
        if p.len() > set.len() {
            return Err(Error::Precondition(format!(
                "{p} has more parts than |S| = {}",
                set.len()
            )));
        }
    }

    let build = |part: &Partition| {
        glue(&GlueSpec {
            host: g.clone(),
            attach: set.to_vec(),
            partition: part.clone(),
            pieces: vec![piece.clone(); t],
            anchors: vec![anchor; t],
        })
    };
    let graph_a = build(a)?;
    let graph_b = build(b)?;
    let spectrum = resistance_spectrum(&graph_a);
    require_equal(&spectrum, &resistance_spectrum(&graph_b), "direct spectra")?;

    let rs_piece = resistance_spectrum(piece);
    let rsv_piece = rsv(piece, anchor)?;
    for p in [a, b] {
        let closed = closed_form_spectrum(&profile, p, &rs_piece, &rsv_piece, piece.order())?;
        require_equal(&spectrum, &closed, &format!("closed form for {p}"))?;
    }

    let isomorphic = are_isomorphic(&graph_a, &graph_b)?;
    Ok(PairReport {
        graph_a,
        graph_b,
        spectrum,
        isomorphic,
        provenance: Provenance::EqualSquares {
            host_order: g.order(),
            set: set.to_vec(),
            a: a.clone(),
            b: b.clone(),
            piece_order: piece.order(),
            anchor,
        },
    })
}

/// Disjoint cliques with sizes given by the parts of `blocks`, in order.
pub fn clique_blocks(blocks: &Partition) -> Graph {
    blocks
        .parts()
        .iter()
        .map(|&c| named::complete(c).expect("parts are positive"))
        .fold(Graph::empty(0), |acc, k| {
            crate::graph::disjoint_union(&acc, &k)
        })
}

/// One host of the order-`n` family: clique blocks with the first `j`
/// vertices joined to three new vertices. Returns the host and the new
/// vertices.
pub fn family_q_host(blocks: &Partition, j: usize, join: JoinKind) -> Result<(Graph, Vec<usize>)> {
    let base = clique_blocks(blocks);
    if j == 0 || j > base.order() {
        return Err(Error::InvalidParameter(format!(
            "j must be in 1..={}, got {j}",
            base.order()
        )));
    }
    let x: Vec<usize> = (0..j).collect();
    join_extend(&base, &x, 3, join)
}

/// All `2(n−9)p(n−9)` verified pairs of order `n ≥ 10`, enumerated by
/// partition, then `j`, then join kind (clique before independent set).
pub fn family_q(n: usize) -> Result<Vec<PairReport>> {
    if n < 10 {
        return Err(Error::InvalidParameter(format!("need n ≥ 10, got {n}")));
    }
    let t = n - 9;
    let a = Partition::new(vec![3, 3])?;
    let b = Partition::new(vec![4, 1, 1])?;
    let p2 = named::path(1)?;
    let mut out = Vec::new();
    for (index, blocks) in partitions(t)?.enumerate() {
        for j in 1..=t {
            for join in [JoinKind::Complete, JoinKind::Empty] {
                let (host, fresh) = family_q_host(&blocks, j, join)?;
                let mut report = equal_squares_check(&host, &fresh, &a, &b, &p2, 0, 6)?;
                if report.isomorphic {
                    return Err(Error::Verification(format!(
                        "pair for blocks {blocks}, j = {j}, {join:?} is isomorphic"
                    )));
                }
                debug_assert_eq!(report.graph_a.order(), n);
                report.provenance = Provenance::OrderFamily {
                    n,
                    index: index + 1,
                    blocks: blocks.clone(),
                    j,
                    join,
                    a: a.clone(),
                    b: b.clone(),
                };
                out.push(report);
            }
        }
    }
    Ok(out)
}
