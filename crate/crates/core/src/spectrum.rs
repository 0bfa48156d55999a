//! Resistance spectra as exact multisets, and the formulas that compose the
//! spectrum of a glued graph from the spectra of its parts.
//!
//! The canonical text form lists `value^multiplicity` in ascending order,
//! comma separated, e.g. `2/3^3,1^6,5/3^12,2^6,8/3^9`. Values are written in
//! lowest terms, integers without a denominator, and `+∞` as `inf`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{disjoint_union, identify, Graph};
use crate::partition::Partition;
use crate::rational::ExtRational;
use crate::resistance::resistance_matrix;

/// A multiset of resistances with arbitrary-precision multiplicities.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct RMultiset {
    counts: BTreeMap<ExtRational, BigUint>,
}

impl RMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    /// A multiset holding `value` once.
    pub fn singleton(value: ExtRational) -> Self {
        let mut ms = Self::new();
        ms.insert(value);
        ms
    }

    pub fn insert(&mut self, value: ExtRational) {
        self.insert_many(value, BigUint::one());
    }

    pub fn insert_many(&mut self, value: ExtRational, count: BigUint) {
        if count.is_zero() {
            return;
        }
        *self.counts.entry(value).or_default() += count;
    }

    /// Total number of elements, counted with multiplicity.
    pub fn len(&self) -> BigUint {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Number of distinct values.
    pub fn distinct(&self) -> usize {
        self.counts.len()
    }

    pub fn multiplicity(&self, value: &ExtRational) -> BigUint {
        self.counts.get(value).cloned().unwrap_or_default()
    }

    /// `(value, multiplicity)` in ascending value order.
    pub fn iter(&self) -> impl Iterator<Item = (&ExtRational, &BigUint)> {
        self.counts.iter()
    }
}

impl FromIterator<ExtRational> for RMultiset {
    fn from_iter<I: IntoIterator<Item = ExtRational>>(iter: I) -> Self {
        let mut ms = RMultiset::new();
        for v in iter {
            ms.insert(v);
        }
        ms
    }
}

impl fmt::Display for RMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, m)) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}^{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl FromStr for RMultiset {
    type Err = Error;

    /// Parses the canonical text form. Terms may appear in any order and a
    /// bare value counts once; the empty string is the empty multiset.
    fn from_str(s: &str) -> Result<Self> {
        let mut ms = RMultiset::new();
        for term in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (value, count) = match term.rsplit_once('^') {
                Some((v, m)) => {
                    let m: BigUint = m.trim().parse().map_err(|_| Error::Parse {
                        line: 0,
                        message: format!("bad multiplicity in `{term}`"),
                    })?;
                    (v, m)
                }
                None => (term, BigUint::one()),
            };
            ms.insert_many(value.parse()?, count);
        }
        Ok(ms)
    }
}

impl Serialize for RMultiset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RMultiset {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// Pairwise sums without the nonempty check; an empty operand gives an
/// empty result.
fn sum_unchecked(a: &RMultiset, b: &RMultiset) -> RMultiset {
    let mut out = RMultiset::new();
    for (x, m) in a.iter() {
        for (y, n) in b.iter() {
            out.insert_many(x + y, m * n);
        }
    }
    out
}

/// `{a + b | a ∈ A, b ∈ B}` with multiplicity; `+∞` absorbs.
pub fn msum(a: &RMultiset, b: &RMultiset) -> Result<RMultiset> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyMultiset);
    }
    Ok(sum_unchecked(a, b))
}

/// Multiplicity-additive union.
pub fn munion<'a, I>(parts: I) -> RMultiset
where
    I: IntoIterator<Item = &'a RMultiset>,
{
    let mut out = RMultiset::new();
    for part in parts {
        for (v, m) in part.iter() {
            out.insert_many(v.clone(), m.clone());
        }
    }
    out
}

/// Every multiplicity scaled by `k`; `k = 0` gives the empty multiset.
pub fn mrepeat(a: &RMultiset, k: u64) -> RMultiset {
    let mut out = RMultiset::new();
    let k = BigUint::from(k);
    for (v, m) in a.iter() {
        out.insert_many(v.clone(), m * &k);
    }
    out
}

/// Multiset of all pairwise resistances.
pub fn resistance_spectrum(g: &Graph) -> RMultiset {
    resistance_matrix(g).spectrum()
}

/// Spectrum and anchor profile of the graph obtained by identifying vertex
/// `g` of `g1` with vertex `h` of `h1`, assembled from the parts alone.
///
/// The identified vertex is a cut vertex, so a resistance across it is the
/// sum of the resistances on either side.
pub fn cut_vertex_spectrum(
    g1: &Graph,
    g: usize,
    h1: &Graph,
    h: usize,
) -> Result<(RMultiset, RMultiset)> {
    g1.check_vertex(g)?;
    h1.check_vertex(h)?;
    let mg = resistance_matrix(g1);
    let mh = resistance_matrix(h1);
    let (rsv_g, rsv_h) = (mg.rsv(g), mh.rsv(h));
    let rs = munion([
        &mg.spectrum(),
        &mh.spectrum(),
        &sum_unchecked(&rsv_g, &rsv_h),
    ]);
    let rsv = munion([&rsv_g, &rsv_h]);
    Ok((rs, rsv))
}

/// The one-point gluing itself, for comparison with [`cut_vertex_spectrum`].
/// Vertex `g` of `g1` keeps its index.
pub fn one_point_gluing(g1: &Graph, g: usize, h1: &Graph, h: usize) -> Result<Graph> {
    g1.check_vertex(g)?;
    h1.check_vertex(h)?;
    let union = disjoint_union(g1, h1);
    let (glued, _) = identify(&union, &[vec![g, g1.order() + h]])?;
    Ok(glued)
}

/// A graph together with a vertex set `S` on which it is resistance
/// transitive: all pairs inside `S` are at the same resistance `c`, and every
/// vertex outside `S` is at the same resistance from each member of `S`.
#[derive(Clone, Debug)]
pub struct STransitiveProfile {
    base: Graph,
    base_spectrum: RMultiset,
    set: Vec<usize>,
    c: ExtRational,
    outer: Vec<ExtRational>,
}

impl STransitiveProfile {
    /// Checks both defining properties. `Ok(None)` means the graph is not
    /// resistance transitive on `set`; errors are reserved for bad input.
    pub fn compute(g: &Graph, set: &[usize]) -> Result<Option<Self>> {
        if set.len() < 3 {
            return Err(Error::Precondition(format!(
                "resistance transitivity needs |S| ≥ 3, got {}",
                set.len()
            )));
        }
        let mut in_set = vec![false; g.order()];
        for &v in set {
            g.check_vertex(v)?;
            if std::mem::replace(&mut in_set[v], true) {
                return Err(Error::Precondition(format!("vertex {v} repeated in S")));
            }
        }
        let m = resistance_matrix(g);
        let c = m.get(set[0], set[1]).clone();
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                if m.get(u, v) != &c {
                    return Ok(None);
                }
            }
        }
        let mut outer = Vec::new();
        for x in (0..g.order()).filter(|&x| !in_set[x]) {
            let r = m.get(x, set[0]);
            if set[1..].iter().any(|&u| m.get(x, u) != r) {
                return Ok(None);
            }
            outer.push(r.clone());
        }
        Ok(Some(STransitiveProfile {
            base: g.clone(),
            base_spectrum: m.spectrum(),
            set: set.to_vec(),
            c,
            outer,
        }))
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    /// The transitive set, in attachment order; its first vertex is the
    /// reference vertex for the outer resistances.
    pub fn set(&self) -> &[usize] {
        &self.set
    }

    /// Common resistance between distinct members of the set.
    pub fn c(&self) -> &ExtRational {
        &self.c
    }

    /// Resistance from each vertex outside the set (ascending index) to the set.
    pub fn outer(&self) -> &[ExtRational] {
        &self.outer
    }

    pub fn base_spectrum(&self) -> &RMultiset {
        &self.base_spectrum
    }
}

fn binomial2(n: usize) -> BigUint {
    let n = BigUint::from(n);
    if n < BigUint::from(2u8) {
        return BigUint::zero();
    }
    &n * (&n - 1u8) / 2u8
}

/// Closed-form spectrum of the graph obtained by hanging `t = a.total()`
/// copies of a piece on the transitive set of `profile`, in blocks sized by
/// the parts of `a`.
///
/// `rs_piece` and `rsv_piece` are the spectrum of the piece and the
/// resistance profile of its anchor, `piece_order` its vertex count. Every
/// piece must share these (pieces pairwise in relation 𝒰 with equal anchor
/// profiles); this function only sees the shared values.
pub fn closed_form_spectrum(
    profile: &STransitiveProfile,
    a: &Partition,
    rs_piece: &RMultiset,
    rsv_piece: &RMultiset,
    piece_order: usize,
) -> Result<RMultiset> {
    let s = profile.set.len();
    let t = a.total();
    if a.len() > s {
        return Err(Error::Precondition(format!(
            "partition {a} has {} parts but the transitive set has {s} vertices",
            a.len()
        )));
    }
    if piece_order == 0 {
        return Err(Error::Precondition("pieces must have a vertex".into()));
    }
    if rs_piece.len() != binomial2(piece_order) || rsv_piece.len() != BigUint::from(piece_order - 1)
    {
        return Err(Error::Precondition(format!(
            "piece spectra do not match a piece of order {piece_order}"
        )));
    }

    let c = RMultiset::singleton(profile.c.clone());
    let pair = sum_unchecked(rsv_piece, rsv_piece);
    let mut parts = vec![
        profile.base_spectrum.clone(),
        mrepeat(rs_piece, t as u64),
        mrepeat(&pair, a.within_block_pairs()),
        mrepeat(&sum_unchecked(&pair, &c), a.pairwise_product_sum()),
        mrepeat(&sum_unchecked(rsv_piece, &c), (t * s - t) as u64),
    ];
    for r in &profile.outer {
        let shifted = sum_unchecked(&RMultiset::singleton(r.clone()), rsv_piece);
        parts.push(mrepeat(&shifted, t as u64));
    }
    let out = munion(&parts);

    let total_order = profile.base.order() + t * (piece_order - 1);
    if out.len() != binomial2(total_order) {
        return Err(Error::Verification(format!(
            "closed form has {} entries, expected C({total_order}, 2)",
            out.len()
        )));
    }
    Ok(out)
}

/// One value whose multiplicities differ between two spectra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityDiff {
    pub value: ExtRational,
    pub left: BigUint,
    pub right: BigUint,
}

impl fmt::Display for MultiplicityDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} vs {}", self.value, self.left, self.right)
    }
}

/// Result of [`spectra_equal`]; empty `diffs` means the multisets are equal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumComparison {
    pub diffs: Vec<MultiplicityDiff>,
}

impl SpectrumComparison {
    pub fn is_equal(&self) -> bool {
        self.diffs.is_empty()
    }
}

impl fmt::Display for SpectrumComparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_equal() {
            return f.write_str("equal");
        }
        for (i, d) in self.diffs.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Exact multiset comparison, listing every value with differing
/// multiplicity in ascending order.
pub fn spectra_equal(a: &RMultiset, b: &RMultiset) -> SpectrumComparison {
    let mut values: Vec<&ExtRational> = a.counts.keys().chain(b.counts.keys()).collect();
    values.sort();
    values.dedup();
    let diffs = values
        .into_iter()
        .filter_map(|v| {
            let (left, right) = (a.multiplicity(v), b.multiplicity(v));
            (left != right).then(|| MultiplicityDiff {
                value: v.clone(),
                left,
                right,
            })
        })
        .collect();
    SpectrumComparison { diffs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{glue, named, GlueSpec};

    fn ms(s: &str) -> RMultiset {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_text() {
        let m = ms("1^6,2/3^3,8/3^9,2^6,5/3^12");
        assert_eq!(m.to_string(), "2/3^3,1^6,5/3^12,2^6,8/3^9");
        assert_eq!(m.len(), BigUint::from(36u8));
        assert_eq!(ms("inf, 1, 1").to_string(), "1^2,inf^1");
        assert_eq!(ms("").to_string(), "");
        assert!("1^x".parse::<RMultiset>().is_err());
    }

    #[test]
    fn sum_examples() {
        assert_eq!(msum(&ms("1,2"), &ms("3")).unwrap(), ms("4,5"));
        assert_eq!(msum(&ms("1^2"), &ms("1^2")).unwrap(), ms("2^4"));
        assert_eq!(msum(&ms("1,inf"), &ms("2")).unwrap(), ms("3,inf"));
        assert_eq!(msum(&ms(""), &ms("2")), Err(Error::EmptyMultiset));
    }

    #[test]
    fn union_and_repeat() {
        assert_eq!(munion([&ms("1"), &ms("1")]), ms("1^2"));
        assert_eq!(mrepeat(&ms("2/3,1"), 3), ms("2/3^3,1^3"));
        assert!(mrepeat(&ms("2/3,1"), 0).is_empty());
    }

    #[test]
    fn comparison_reports_diff() {
        let row1 = ms("1^6,2^6,inf^24");
        assert!(spectra_equal(&row1, &row1).is_equal());
        let cmp = spectra_equal(&ms("1"), &ms("1^2"));
        assert_eq!(cmp.to_string(), "1: 1 vs 2");
        let cmp = spectra_equal(&ms("1,3"), &ms("2,3"));
        assert_eq!(cmp.to_string(), "1: 1 vs 0; 2: 0 vs 1");
    }

    #[test]
    fn empty_host_gluing_spectrum() {
        let spec = GlueSpec {
            host: Graph::empty(3),
            attach: vec![0, 1, 2],
            partition: Partition::new(vec![3, 3]).unwrap(),
            pieces: vec![named::path(1).unwrap(); 6],
            anchors: vec![0; 6],
        };
        let g = glue(&spec).unwrap();
        assert_eq!(resistance_spectrum(&g).to_string(), "1^6,2^6,inf^24");
    }

    #[test]
    fn triangle_gluing_spectrum() {
        let spec = GlueSpec {
            host: named::cycle(3).unwrap(),
            attach: vec![1, 2],
            partition: Partition::new(vec![3, 3]).unwrap(),
            pieces: vec![named::path(1).unwrap(); 6],
            anchors: vec![0; 6],
        };
        let g = glue(&spec).unwrap();
        assert_eq!(
            resistance_spectrum(&g).to_string(),
            "2/3^3,1^6,5/3^12,2^6,8/3^9"
        );
    }

    #[test]
    fn t1_spectrum() {
        assert_eq!(
            resistance_spectrum(&named::t1()).to_string(),
            "3/4^4,1^7,7/4^4,2^6,11/4^4,3^5,15/4^2,4^3,5^1"
        );
    }

    #[test]
    fn cut_vertex_two_edges() {
        let p2 = named::path(1).unwrap();
        let (rs, rsv) = cut_vertex_spectrum(&p2, 0, &p2, 0).unwrap();
        assert_eq!(rs, ms("1^2,2"));
        assert_eq!(rsv, ms("1^2"));
    }

    #[test]
    fn cut_vertex_tadpole() {
        let c3 = named::cycle(3).unwrap();
        let p2 = named::path(1).unwrap();
        let (rs, rsv) = cut_vertex_spectrum(&c3, 0, &p2, 0).unwrap();
        assert_eq!(rs, ms("2/3^3,1,5/3^2"));
        let direct = one_point_gluing(&c3, 0, &p2, 0).unwrap();
        assert_eq!(rs, resistance_spectrum(&direct));
        assert_eq!(rsv, crate::resistance::rsv(&direct, 0).unwrap());
    }

    #[test]
    fn cut_vertex_t1_and_edge() {
        let t1 = named::t1();
        let p2 = named::path(1).unwrap();
        let (rs, rsv) = cut_vertex_spectrum(&t1, named::T_ANCHOR, &p2, 0).unwrap();
        let direct = one_point_gluing(&t1, named::T_ANCHOR, &p2, 0).unwrap();
        assert_eq!(direct.order(), 10);
        assert_eq!(rs, resistance_spectrum(&direct));
        assert_eq!(
            rsv,
            crate::resistance::rsv(&direct, named::T_ANCHOR).unwrap()
        );
    }

    #[test]
    fn cut_vertex_with_single_vertex_piece() {
        let c3 = named::cycle(3).unwrap();
        let (rs, rsv) = cut_vertex_spectrum(&c3, 1, &Graph::empty(1), 0).unwrap();
        assert_eq!(rs, resistance_spectrum(&c3));
        assert_eq!(rsv, ms("2/3^2"));
    }

    fn p2_piece() -> (RMultiset, RMultiset) {
        (ms("1"), ms("1"))
    }

    #[test]
    fn closed_form_k3_host() {
        let k3 = named::complete(3).unwrap();
        let profile = STransitiveProfile::compute(&k3, &[0, 1, 2])
            .unwrap()
            .unwrap();
        assert_eq!(profile.c(), &ExtRational::ratio(2, 3));
        assert!(profile.outer().is_empty());
        let (rs, rsv) = p2_piece();
        let a = Partition::new(vec![3, 3]).unwrap();
        let got = closed_form_spectrum(&profile, &a, &rs, &rsv, 2).unwrap();
        assert_eq!(got.to_string(), "2/3^3,1^6,5/3^12,2^6,8/3^9");
    }

    #[test]
    fn closed_form_empty_host() {
        let profile = STransitiveProfile::compute(&Graph::empty(3), &[0, 1, 2])
            .unwrap()
            .unwrap();
        assert_eq!(profile.c(), &ExtRational::Infinity);
        let (rs, rsv) = p2_piece();
        let a = Partition::new(vec![4, 1, 1]).unwrap();
        let got = closed_form_spectrum(&profile, &a, &rs, &rsv, 2).unwrap();
        assert_eq!(got.to_string(), "1^6,2^6,inf^24");
    }

    #[test]
    fn closed_form_k4_with_outer_vertex() {
        let k4 = named::complete(4).unwrap();
        let profile = STransitiveProfile::compute(&k4, &[0, 1, 2])
            .unwrap()
            .unwrap();
        assert_eq!(profile.c(), &ExtRational::ratio(1, 2));
        assert_eq!(profile.outer(), &[ExtRational::ratio(1, 2)]);
        let (rs, rsv) = p2_piece();
        let a = Partition::new(vec![1]).unwrap();
        let got = closed_form_spectrum(&profile, &a, &rs, &rsv, 2).unwrap();
        let direct = glue(&GlueSpec {
            host: k4,
            attach: vec![0, 1, 2],
            partition: a,
            pieces: vec![named::path(1).unwrap()],
            anchors: vec![0],
        })
        .unwrap();
        assert_eq!(got, resistance_spectrum(&direct));
    }

    #[test]
    fn closed_form_rejects_too_many_parts() {
        let k3 = named::complete(3).unwrap();
        let profile = STransitiveProfile::compute(&k3, &[0, 1, 2])
            .unwrap()
            .unwrap();
        let (rs, rsv) = p2_piece();
        let a = Partition::new(vec![3, 1, 1, 1]).unwrap();
        assert!(matches!(
            closed_form_spectrum(&profile, &a, &rs, &rsv, 2),
            Err(Error::Precondition(_))
        ));
        // piece data inconsistent with the claimed order
        let a = Partition::new(vec![1]).unwrap();
        assert!(closed_form_spectrum(&profile, &a, &rs, &rsv, 3).is_err());
    }

    #[test]
    fn transitivity_fails_on_a_path() {
        let p4 = named::path(3).unwrap();
        assert!(STransitiveProfile::compute(&p4, &[0, 1, 2])
            .unwrap()
            .is_none());
        assert!(STransitiveProfile::compute(&p4, &[0, 1]).is_err());
        assert!(STransitiveProfile::compute(&p4, &[0, 1, 1]).is_err());
    }
}
