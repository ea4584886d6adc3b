//! Zero-divisor graphs of `Z_N` and `Z_2^k`, reduced graphs and induced
//! subgraphs.
//!
//! Adjacency is a dense symmetric bit matrix. Every verifier in this crate
//! asks pair queries, and the graphs stay in the low thousands of vertices.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::arith::gcd_raw;
use crate::error::{invalid, Error, Result};

/// Index of a vertex in its graph's label list.
pub type VertexId = usize;

/// Largest vertex count a [`ZdGraph`] may be built with (32 MiB of adjacency).
pub const VERTEX_LIMIT: u64 = 1 << 14;

/// Element of `Z_2^k`, `k <= 63`.
///
/// Coordinate 1 is the leftmost character of the printed form and the most
/// significant bit of the mask, so comparing masks orders vectors as binary
/// numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitVector {
    k: u8,
    mask: u64,
}

impl BitVector {
    pub fn from_mask(k: u32, mask: u64) -> Result<Self> {
        if k == 0 || k > 63 {
            return Err(invalid(format!("bit vector length {k} outside 1..=63")));
        }
        if mask >> k != 0 {
            return Err(invalid(format!("mask {mask:#b} has more than {k} bits")));
        }
        Ok(BitVector { k: k as u8, mask })
    }

    /// Standard basis vector `e_j`, `1 <= j <= k`.
    pub fn basis(k: u32, j: u32) -> Result<Self> {
        if j == 0 || j > k {
            return Err(invalid(format!("basis index {j} outside 1..={k}")));
        }
        Self::from_mask(k, 1 << (k - j))
    }

    pub fn len(&self) -> u32 {
        self.k as u32
    }

    pub fn is_empty(&self) -> bool {
        self.k == 0
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    /// Value of coordinate `j` (1-based).
    pub fn coordinate(&self, j: u32) -> bool {
        debug_assert!(j >= 1 && j <= self.len());
        self.mask >> (self.len() - j) & 1 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.mask == 0
    }

    pub fn is_ones(&self) -> bool {
        self.mask == (1u64 << self.k) - 1
    }

    /// Coordinatewise sum in `Z_2^k`.
    pub fn plus(&self, other: &BitVector) -> BitVector {
        debug_assert_eq!(self.k, other.k);
        BitVector { k: self.k, mask: self.mask ^ other.mask }
    }

    /// Coordinatewise product is the zero vector.
    pub fn annihilates(&self, other: &BitVector) -> bool {
        self.mask & other.mask == 0
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 1..=self.len() {
            f.write_str(if self.coordinate(j) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() || s.len() > 63 || !s.bytes().all(|b| b == b'0' || b == b'1') {
            return Err(invalid(format!("`{s}` is not a bit string")));
        }
        let mask = s.bytes().fold(0u64, |m, b| m << 1 | (b - b'0') as u64);
        BitVector::from_mask(s.len() as u32, mask)
    }
}

/// Vertex label: a residue of `Z_N` (also used for plain integer ids of
/// external graphs) or an element of `Z_2^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Residue(u64),
    Bits(BitVector),
}

impl Label {
    pub fn residue(&self) -> Option<u64> {
        match self {
            Label::Residue(u) => Some(*u),
            Label::Bits(_) => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Residue(u) => write!(f, "{u}"),
            Label::Bits(b) => write!(f, "{b}"),
        }
    }
}

impl From<u64> for Label {
    fn from(u: u64) -> Self {
        Label::Residue(u)
    }
}

impl From<BitVector> for Label {
    fn from(b: BitVector) -> Self {
        Label::Bits(b)
    }
}

/// Where a graph came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Origin {
    Zn(u64),
    Boolean(u32),
    Reduced,
    Induced,
    External,
}

/// Dense symmetric irreflexive relation on `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct AdjMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl AdjMatrix {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        AdjMatrix { n, words, bits: vec![0; n * words] }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, u: VertexId, v: VertexId) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Inserts `uv`. Loops are ignored.
    pub fn insert(&mut self, u: VertexId, v: VertexId) {
        if u == v {
            return;
        }
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn row(&self, u: VertexId) -> &[u64] {
        &self.bits[u * self.words..(u + 1) * self.words]
    }

    pub fn degree(&self, u: VertexId) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn neighbors(&self, u: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.row(u).iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn is_subset_of(&self, other: &AdjMatrix) -> bool {
        self.n == other.n && self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }
}

impl fmt::Debug for AdjMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.edges()).finish()
    }
}

/// Answers "is `x` a vertex" and "are `x`, `y` adjacent" by label.
///
/// Implemented both by materialized graphs and by the rings themselves, so
/// that witnesses for large `N` can be checked without building `Γ(Z_N)`.
pub trait Adjacency {
    fn has_vertex(&self, x: &Label) -> bool;
    /// Only called on vertices.
    fn is_adjacent(&self, x: &Label, y: &Label) -> bool;
}

/// `Γ(Z_N)` decided arithmetically: `u ~ v` iff `u != v` and `N | uv`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZnRing(pub u64);

impl Adjacency for ZnRing {
    fn has_vertex(&self, x: &Label) -> bool {
        match *x {
            Label::Residue(u) => u >= 1 && u < self.0 && gcd_raw(u, self.0) > 1,
            Label::Bits(_) => false,
        }
    }

    fn is_adjacent(&self, x: &Label, y: &Label) -> bool {
        match (*x, *y) {
            (Label::Residue(u), Label::Residue(v)) => u != v && (u as u128 * v as u128) % self.0 as u128 == 0,
            _ => false,
        }
    }
}

/// `Γ(Z_2^k)` decided arithmetically: disjoint supports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BooleanRing(pub u32);

impl Adjacency for BooleanRing {
    fn has_vertex(&self, x: &Label) -> bool {
        match x {
            Label::Bits(b) => b.len() == self.0 && !b.is_zero() && !b.is_ones(),
            Label::Residue(_) => false,
        }
    }

    fn is_adjacent(&self, x: &Label, y: &Label) -> bool {
        match (x, y) {
            (Label::Bits(a), Label::Bits(b)) => a != b && a.annihilates(b),
            _ => false,
        }
    }
}

/// Finite simple graph with labelled vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZdGraph {
    labels: Vec<Label>,
    index: BTreeMap<Label, VertexId>,
    adj: AdjMatrix,
    origin: Origin,
}

impl ZdGraph {
    fn with_labels(labels: Vec<Label>, origin: Origin) -> Result<Self> {
        let mut index = BTreeMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(*l, i).is_some() {
                return Err(invalid(format!("duplicate vertex label {l}")));
            }
        }
        let adj = AdjMatrix::new(labels.len());
        Ok(ZdGraph { labels, index, adj, origin })
    }

    /// Graph on vertices `0..n` with the given edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n as u64 > VERTEX_LIMIT {
            return Err(Error::GraphTooLarge { vertices: n as u64, limit: VERTEX_LIMIT });
        }
        let labels = (0..n as u64).map(Label::Residue).collect();
        let mut g = Self::with_labels(labels, Origin::External)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(invalid(format!("edge ({u}, {v}) references a vertex outside 0..{n}")));
            }
            if u == v {
                return Err(invalid(format!("self-loop at {u}")));
            }
            g.adj.insert(u, v);
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> Label {
        self.labels[v]
    }

    pub fn vertex(&self, l: &Label) -> Option<VertexId> {
        self.index.get(l).copied()
    }

    pub fn origin(&self) -> Origin {
        self.origin
    }

    pub fn adjacency(&self) -> &AdjMatrix {
        &self.adj
    }

    #[inline]
    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.adj.contains(u, v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.edge_count()
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj.edges()
    }

    pub fn neighbors(&self, u: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.neighbors(u)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.edge_count() == n * n.saturating_sub(1) / 2
    }

    /// Non-adjacent pairs `(u, v)`, `u < v`.
    pub fn non_edges(&self) -> Vec<(VertexId, VertexId)> {
        let n = self.order();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !self.adjacent(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

impl Adjacency for ZdGraph {
    fn has_vertex(&self, x: &Label) -> bool {
        self.index.contains_key(x)
    }

    fn is_adjacent(&self, x: &Label, y: &Label) -> bool {
        match (self.vertex(x), self.vertex(y)) {
            (Some(u), Some(v)) => self.adjacent(u, v),
            _ => false,
        }
    }
}

/// Nonzero zero divisors of `Z_N` in increasing order.
pub fn zero_divisors(n: u64) -> Result<Vec<u64>> {
    if n < 2 {
        return Err(invalid(format!("Z_{n}: N must be at least 2")));
    }
    if n > 4 * VERTEX_LIMIT {
        return Err(Error::GraphTooLarge { vertices: n - 1, limit: VERTEX_LIMIT });
    }
    Ok((1..n).filter(|&u| gcd_raw(u, n) > 1).collect())
}

/// `Γ(Z_N)`: vertices are the nonzero zero divisors, `u ~ v` iff `N | uv`.
pub fn build_zn_graph(n: u64) -> Result<ZdGraph> {
    let zd = zero_divisors(n)?;
    if zd.len() as u64 > VERTEX_LIMIT {
        return Err(Error::GraphTooLarge { vertices: zd.len() as u64, limit: VERTEX_LIMIT });
    }
    let mut g = ZdGraph::with_labels(zd.iter().map(|&u| Label::Residue(u)).collect(), Origin::Zn(n))?;
    // N | uv  iff  N / gcd(u, N) divides v, so walk the multiples directly.
    for (i, &u) in zd.iter().enumerate() {
        let step = n / gcd_raw(u, n);
        let mut v = step;
        while v < n {
            if v > u {
                let j = g.index[&Label::Residue(v)];
                g.adj.insert(i, j);
            }
            v += step;
        }
    }
    Ok(g)
}

/// `Γ(Z_2^k)`: all `k`-bit vectors except `0` and `1`, adjacent iff their
/// supports are disjoint. Vertices are ordered as binary numbers.
pub fn build_boolean_graph(k: u32) -> Result<ZdGraph> {
    if k < 2 {
        return Err(invalid(format!("Z_2^{k}: k must be at least 2")));
    }
    let count = (1u64 << k.min(63)) - 2;
    if k > 14 || count > VERTEX_LIMIT {
        return Err(Error::GraphTooLarge { vertices: count, limit: VERTEX_LIMIT });
    }
    let labels =
        (1..(1u64 << k) - 1).map(|m| BitVector::from_mask(k, m).map(Label::Bits)).collect::<Result<Vec<_>>>()?;
    let mut g = ZdGraph::with_labels(labels, Origin::Boolean(k))?;
    // vertex index = mask - 1
    for x in 1..(1u64 << k) - 1 {
        for y in x + 1..(1u64 << k) - 1 {
            if x & y == 0 {
                g.adj.insert(x as usize - 1, y as usize - 1);
            }
        }
    }
    Ok(g)
}

/// Quotient of a graph by "equal open neighbourhood".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedGraph {
    /// One vertex per class, labelled by the class's smallest label.
    pub graph: ZdGraph,
    /// Class index of every original vertex.
    pub class_of: Vec<usize>,
    /// Original labels of each class, increasing.
    pub class_members: Vec<Vec<Label>>,
}

impl ReducedGraph {
    pub fn class_count(&self) -> usize {
        self.class_members.len()
    }

    /// Class containing the original vertex labelled `l`.
    pub fn class_containing(&self, original: &ZdGraph, l: &Label) -> Option<usize> {
        original.vertex(l).map(|v| self.class_of[v])
    }
}

pub fn reduce_graph(g: &ZdGraph) -> ReducedGraph {
    let mut by_row: BTreeMap<&[u64], usize> = BTreeMap::new();
    let mut class_of = Vec::with_capacity(g.order());
    let mut class_members: Vec<Vec<Label>> = Vec::new();
    for v in 0..g.order() {
        let next = class_members.len();
        let c = *by_row.entry(g.adj.row(v)).or_insert(next);
        if c == next {
            class_members.push(Vec::new());
        }
        class_members[c].push(g.label(v));
        class_of.push(c);
    }
    for m in &mut class_members {
        m.sort();
    }
    // Renumber classes by representative so output is independent of vertex order.
    let mut order: Vec<usize> = (0..class_members.len()).collect();
    order.sort_by_key(|&c| class_members[c][0]);
    let mut rank = vec![0; order.len()];
    for (r, &c) in order.iter().enumerate() {
        rank[c] = r;
    }
    let class_members: Vec<Vec<Label>> = order.iter().map(|&c| core::mem::take(&mut class_members[c])).collect();
    let class_of: Vec<usize> = class_of.into_iter().map(|c| rank[c]).collect();

    let labels = class_members.iter().map(|m| m[0]).collect();
    let mut graph = ZdGraph::with_labels(labels, Origin::Reduced).expect("representatives are distinct");
    for (u, v) in g.edges() {
        graph.adj.insert(class_of[u], class_of[v]);
    }
    ReducedGraph { graph, class_of, class_members }
}

/// Subgraph induced on `subset`, vertices in the given order.
pub fn induced_subgraph(g: &ZdGraph, subset: &[Label]) -> Result<ZdGraph> {
    let ids = subset
        .iter()
        .map(|l| g.vertex(l).ok_or_else(|| invalid(format!("{l} is not a vertex"))))
        .collect::<Result<Vec<_>>>()?;
    let mut h = ZdGraph::with_labels(subset.to_vec(), Origin::Induced)?;
    for (a, &u) in ids.iter().enumerate() {
        for (b, &v) in ids.iter().enumerate().skip(a + 1) {
            if g.adjacent(u, v) {
                h.adj.insert(a, b);
            }
        }
    }
    Ok(h)
}

/// Renders `u v` pairs, one per line, using labels.
pub fn describe_edges(g: &ZdGraph) -> String {
    let mut s = String::new();
    for (u, v) in g.edges() {
        s.push_str(&format!("{} {}\n", g.label(u), g.label(v)));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn res(v: &[u64]) -> Vec<Label> {
        v.iter().map(|&u| Label::Residue(u)).collect()
    }

    fn bits(s: &str) -> Label {
        Label::Bits(s.parse().unwrap())
    }

    fn edge_labels(g: &ZdGraph) -> Vec<(Label, Label)> {
        g.edges().map(|(u, v)| (g.label(u), g.label(v))).collect()
    }

    fn totient(n: u64) -> u64 {
        (1..=n).filter(|&k| gcd_raw(k, n) == 1).count() as u64
    }

    #[test]
    fn zn_examples() {
        let g = build_zn_graph(6).unwrap();
        assert_eq!(g.labels(), &res(&[2, 3, 4])[..]);
        assert_eq!(edge_labels(&g), vec![(2.into(), 3.into()), (3.into(), 4.into())]);
        assert_eq!(build_zn_graph(7).unwrap().order(), 0);
        let g = build_zn_graph(9).unwrap();
        assert_eq!(g.labels(), &res(&[3, 6])[..]);
        assert_eq!(g.edge_count(), 1);
        assert!(build_zn_graph(1).is_err());
        assert_eq!(build_zn_graph(4).unwrap().labels(), &res(&[2])[..]);
    }

    #[test]
    fn zn_brute_force_and_totient() {
        for n in 2..=300u64 {
            let g = build_zn_graph(n).unwrap();
            assert_eq!(g.order() as u64, n - 1 - totient(n), "N={n}");
            for u in 0..g.order() {
                for v in 0..g.order() {
                    let (a, b) = (g.label(u).residue().unwrap(), g.label(v).residue().unwrap());
                    assert_eq!(g.adjacent(u, v), a != b && (a * b) % n == 0);
                }
            }
        }
    }

    #[test]
    fn adjacency_symmetric_irreflexive_sweep() {
        for n in 2..=2000u64 {
            let g = build_zn_graph(n).unwrap();
            for (u, v) in g.edges() {
                assert!(g.adjacent(v, u));
            }
            assert!((0..g.order()).all(|u| !g.adjacent(u, u)));
        }
    }

    #[test]
    fn boolean_examples() {
        let g = build_boolean_graph(2).unwrap();
        assert_eq!(g.labels(), &[bits("01"), bits("10")]);
        assert_eq!(g.edge_count(), 1);
        let g = build_boolean_graph(3).unwrap();
        assert_eq!(g.order(), 6);
        let mut expected = vec![
            (bits("100"), bits("011")),
            (bits("100"), bits("010")),
            (bits("100"), bits("001")),
            (bits("010"), bits("001")),
            (bits("010"), bits("101")),
            (bits("001"), bits("110")),
        ];
        let mut got = edge_labels(&g);
        for e in expected.iter_mut().chain(got.iter_mut()) {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        expected.sort();
        got.sort();
        assert_eq!(got, expected);
        assert!(build_boolean_graph(1).is_err());
        for k in 2..=10 {
            assert_eq!(build_boolean_graph(k).unwrap().order() as u64, (1 << k) - 2);
        }
    }

    #[test]
    fn bitvector_layout() {
        let e1 = BitVector::basis(4, 1).unwrap();
        assert_eq!(e1.to_string(), "1000");
        assert!(e1.coordinate(1) && !e1.coordinate(2));
        let v = e1.plus(&BitVector::basis(4, 2).unwrap());
        assert_eq!(v.to_string(), "1100");
        assert_eq!("0011".parse::<BitVector>().unwrap().mask(), 3);
        assert!("0012".parse::<BitVector>().is_err());
        assert!(BitVector::basis(3, 4).is_err());
    }

    #[test]
    fn reduce_z12() {
        let g = build_zn_graph(12).unwrap();
        let r = reduce_graph(&g);
        assert_eq!(r.class_members, vec![res(&[2, 10]), res(&[3, 9]), res(&[4, 8]), res(&[6])]);
        let mut e = edge_labels(&r.graph);
        e.sort();
        assert_eq!(e, vec![(2.into(), 6.into()), (3.into(), 4.into()), (4.into(), 6.into())]);
    }

    #[test]
    fn reduce_z9_and_empty() {
        let r = reduce_graph(&build_zn_graph(9).unwrap());
        assert_eq!(r.class_members, vec![res(&[3]), res(&[6])]);
        assert_eq!(r.graph.edge_count(), 1);
        let r = reduce_graph(&build_zn_graph(7).unwrap());
        assert_eq!(r.class_count(), 0);
    }

    #[test]
    fn reduce_invariants() {
        for n in 2..=600u64 {
            let g = build_zn_graph(n).unwrap();
            let r = reduce_graph(&g);
            for u in 0..g.order() {
                for v in 0..g.order() {
                    let same_nbhd = g.adjacency().row(u) == g.adjacency().row(v);
                    assert_eq!(same_nbhd, r.class_of[u] == r.class_of[v]);
                    if r.class_of[u] == r.class_of[v] {
                        assert!(!g.adjacent(u, v), "class not independent for N={n}");
                    } else {
                        assert_eq!(g.adjacent(u, v), r.graph.adjacent(r.class_of[u], r.class_of[v]));
                    }
                }
            }
        }
    }

    #[test]
    fn reduced_classes_are_divisors_for_squarefree_even() {
        for n in [6u64, 10, 30, 42, 210, 330, 2310] {
            let f = crate::arith::factorize(n).unwrap();
            assert!(f.is_squarefree());
            let r = reduce_graph(&build_zn_graph(n).unwrap());
            let divisors = (2..n).filter(|d| n % d == 0).count();
            assert_eq!(r.class_count(), divisors, "N={n}");
            assert_eq!(r.class_count(), (1 << f.len()) - 2);
        }
    }

    #[test]
    fn induced_examples() {
        let g = build_zn_graph(12).unwrap();
        let h = induced_subgraph(&g, &res(&[3, 6, 4, 8])).unwrap();
        let e = |a: u64, b: u64| h.is_adjacent(&a.into(), &b.into());
        assert!(e(3, 4) && e(3, 8) && e(6, 4) && e(6, 8));
        assert!(!e(3, 6) && !e(4, 8));
        assert_eq!(induced_subgraph(&g, &[]).unwrap().order(), 0);
        let all = induced_subgraph(&g, g.labels()).unwrap();
        assert_eq!(all.adjacency(), g.adjacency());
        assert!(induced_subgraph(&g, &res(&[5])).is_err());
    }

    #[test]
    fn ring_adjacency_matches_graph() {
        for n in [12u64, 18, 54, 100, 210] {
            let g = build_zn_graph(n).unwrap();
            let ring = ZnRing(n);
            for u in 1..n {
                assert_eq!(ring.has_vertex(&u.into()), g.has_vertex(&u.into()));
            }
            for (a, b) in g.labels().iter().zip(g.labels().iter().rev()) {
                assert_eq!(ring.is_adjacent(a, b), g.is_adjacent(a, b));
            }
        }
        let g = build_boolean_graph(5).unwrap();
        for a in g.labels() {
            assert!(BooleanRing(5).has_vertex(a));
            for b in g.labels() {
                assert_eq!(BooleanRing(5).is_adjacent(a, b), g.is_adjacent(a, b));
            }
        }
        assert!(!BooleanRing(3).has_vertex(&bits("111")));
    }

    #[test]
    fn external_graph() {
        let c4 = ZdGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert_eq!(c4.non_edges(), vec![(0, 2), (1, 3)]);
        assert!(ZdGraph::from_edges(2, &[(0, 0)]).is_err());
        assert!(ZdGraph::from_edges(2, &[(0, 2)]).is_err());
        assert_eq!(describe_edges(&c4).to_string(), "0 1\n0 3\n1 2\n2 3\n");
    }
}
