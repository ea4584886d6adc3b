//! Lower-bound witnesses.
//!
//! A [`RobertsWitness`] names `t` disjoint vertex pairs that should induce
//! the complement of a perfect matching on `2t` vertices, which has
//! boxicity `t`. Since boxicity does not increase on induced subgraphs, a
//! verified witness proves `box(G) >= t`.

use alloc::format;
use alloc::vec::Vec;

use crate::arith::{pow, Factorization};
use crate::error::{invalid, Result};
use crate::graph::{Adjacency, BitVector, Label, ZdGraph};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RobertsWitness {
    pub pairs: Vec<(Label, Label)>,
}

impl RobertsWitness {
    pub fn size(&self) -> usize {
        self.pairs.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Label> + '_ {
        self.pairs.iter().flat_map(|&(a, b)| [a, b])
    }

    fn from_residues(pairs: impl IntoIterator<Item = (u64, u64)>) -> Self {
        RobertsWitness { pairs: pairs.into_iter().map(|(a, b)| (Label::Residue(a), Label::Residue(b))).collect() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessFailure {
    Repeated(Label),
    PairAdjacent(Label, Label),
    CrossNonAdjacent(Label, Label),
}

/// Outcome of [`verify_roberts_witness`]. `lower_bound` is the witness size
/// when it verifies and 0 otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessVerdict {
    pub failures: Vec<WitnessFailure>,
    pub lower_bound: usize,
}

impl WitnessVerdict {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// How to read the first special pair in the `N ≡ 2 (mod 4)`, `n_κ >= 3`
/// case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Case2Reading {
    /// `{N/2, N/(2 p_κ)}`: an independent pair.
    Repaired,
    /// `{N/2, 2N/(2 p_κ)} = {N/2, N/p_κ}`, kept so the repair stays
    /// falsifiable. This pair is always adjacent.
    Literal,
}

/// Which of the three lower-bound constructions applies to `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessCase {
    /// `N ≢ 2 (mod 4)`: one pair per prime factor.
    NotTwiceOdd,
    /// `N ≡ 2 (mod 4)` and the odd prime with index `kappa` (1-based) has
    /// exponent at least 3.
    CubedOddPrime { kappa: usize },
    /// `N ≡ 2 (mod 4)` and every odd exponent is at most 2.
    SmallOddExponents,
}

pub fn witness_case(fact: &Factorization) -> WitnessCase {
    if !fact.is_twice_odd() {
        return WitnessCase::NotTwiceOdd;
    }
    match (2..=fact.len()).find(|&i| fact.factor(i).n >= 3) {
        Some(kappa) => WitnessCase::CubedOddPrime { kappa },
        None => WitnessCase::SmallOddExponents,
    }
}

/// `{N / p_i^{n_i}, 2N / p_i^{n_i}}`.
fn prime_power_pair(fact: &Factorization, i: usize) -> (u64, u64) {
    let q = fact.n() / fact.factor(i).value();
    (q, 2 * q)
}

/// Induced Roberts graph in `Γ(Z_N)` of size `a` (or `a - 1` when every odd
/// exponent of an `N ≡ 2 (mod 4)` is at most 2).
pub fn roberts_witness_zn(fact: &Factorization) -> Result<RobertsWitness> {
    roberts_witness_zn_with(fact, Case2Reading::Repaired)
}

pub fn roberts_witness_zn_with(fact: &Factorization, reading: Case2Reading) -> Result<RobertsWitness> {
    let a = fact.len();
    if a < 2 {
        return Err(invalid(format!("N = {} has fewer than two prime factors", fact.n())));
    }
    let n = fact.n();
    let w = match witness_case(fact) {
        WitnessCase::NotTwiceOdd => RobertsWitness::from_residues((1..=a).map(|i| prime_power_pair(fact, i))),
        WitnessCase::SmallOddExponents => RobertsWitness::from_residues((2..=a).map(|i| prime_power_pair(fact, i))),
        WitnessCase::CubedOddPrime { kappa } => {
            let pk = fact.factor(kappa);
            let first = match reading {
                Case2Reading::Repaired => (n / 2, n / (2 * pk.p)),
                Case2Reading::Literal => (n / 2, 2 * n / (2 * pk.p)),
            };
            let q = n / pow(pk.p, pk.n - 1);
            let second = (q, 2 * q);
            let rest = (2..=a).filter(|&i| i != kappa).map(|i| prime_power_pair(fact, i));
            RobertsWitness::from_residues([first, second].into_iter().chain(rest))
        }
    };
    Ok(w)
}

/// Pairs `(e_{2i-1}, e_{2i-1} + e_{2i})`, `1 <= i <= ⌊k/2⌋`.
///
/// For `k = 2` the second vector is all-ones, which is not a vertex, so the
/// witness is empty.
pub fn roberts_witness_boolean(k: u32) -> Result<RobertsWitness> {
    if k < 2 {
        return Err(invalid(format!("Z_2^{k}: k must be at least 2")));
    }
    if k == 2 {
        return Ok(RobertsWitness::default());
    }
    let pairs = (1..=k / 2)
        .map(|i| {
            let odd = BitVector::basis(k, 2 * i - 1)?;
            let both = odd.plus(&BitVector::basis(k, 2 * i)?);
            Ok((Label::Bits(odd), Label::Bits(both)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RobertsWitness { pairs })
}

/// Checks that the witness vertices are distinct, each pair is non-adjacent
/// and every two vertices from different pairs are adjacent.
pub fn verify_roberts_witness<G: Adjacency + ?Sized>(g: &G, w: &RobertsWitness) -> Result<WitnessVerdict> {
    let verts: Vec<Label> = w.vertices().collect();
    if let Some(bad) = verts.iter().find(|v| !g.has_vertex(v)) {
        return Err(invalid(format!("witness vertex {bad} is not a vertex of the graph")));
    }
    let mut failures = Vec::new();
    for (i, v) in verts.iter().enumerate() {
        if verts[..i].contains(v) {
            failures.push(WitnessFailure::Repeated(*v));
        }
    }
    for (i, &(a, b)) in w.pairs.iter().enumerate() {
        if g.is_adjacent(&a, &b) {
            failures.push(WitnessFailure::PairAdjacent(a, b));
        }
        for &(c, d) in &w.pairs[i + 1..] {
            for (x, y) in [(a, c), (a, d), (b, c), (b, d)] {
                if !g.is_adjacent(&x, &y) {
                    failures.push(WitnessFailure::CrossNonAdjacent(x, y));
                }
            }
        }
    }
    let lower_bound = if failures.is_empty() { w.size() } else { 0 };
    Ok(WitnessVerdict { failures, lower_bound })
}

/// A single non-adjacent pair if the graph is not complete, otherwise the
/// empty witness.
pub fn small_lower_bound(g: &ZdGraph) -> RobertsWitness {
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            if !g.adjacent(u, v) {
                return RobertsWitness { pairs: alloc::vec![(g.label(u), g.label(v))] };
            }
        }
    }
    RobertsWitness::default()
}

/// Pairwise non-adjacent vertices.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IndependenceWitness {
    pub vertices: Vec<Label>,
}

/// `{p_1 u : 1 <= u, u^2 < N / p_1^2}`. Products of two members stay below
/// `N`, so none of them are adjacent.
pub fn independence_witness_zn(fact: &Factorization) -> IndependenceWitness {
    let n = fact.n();
    let p1 = fact.factor(1).p;
    let sq = p1 as u128 * p1 as u128;
    let vertices = (1u64..)
        .take_while(|&u| (u as u128) * (u as u128) * sq < n as u128)
        .map(|u| u * p1)
        .filter(|&x| x < n)
        .map(Label::Residue)
        .collect();
    IndependenceWitness { vertices }
}

pub fn verify_independence<G: Adjacency + ?Sized>(g: &G, w: &IndependenceWitness) -> Result<bool> {
    if let Some(bad) = w.vertices.iter().find(|v| !g.has_vertex(v)) {
        return Err(invalid(format!("witness vertex {bad} is not a vertex of the graph")));
    }
    for (i, a) in w.vertices.iter().enumerate() {
        for b in &w.vertices[i + 1..] {
            if a == b || g.is_adjacent(a, b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{factorize, isqrt};
    use crate::graph::{build_boolean_graph, build_zn_graph, BooleanRing, ZnRing};
    use alloc::vec;

    fn res_pairs(v: &[(u64, u64)]) -> Vec<(Label, Label)> {
        v.iter().map(|&(a, b)| (Label::Residue(a), Label::Residue(b))).collect()
    }

    fn bits(s: &str) -> Label {
        Label::Bits(s.parse().unwrap())
    }

    #[test]
    fn zn_witness_examples() {
        let w = roberts_witness_zn(&factorize(12).unwrap()).unwrap();
        assert_eq!(w.pairs, res_pairs(&[(3, 6), (4, 8)]));
        let w = roberts_witness_zn(&factorize(30).unwrap()).unwrap();
        assert_eq!(w.pairs, res_pairs(&[(10, 20), (6, 12)]));
        let f54 = factorize(54).unwrap();
        assert_eq!(witness_case(&f54), WitnessCase::CubedOddPrime { kappa: 2 });
        let w = roberts_witness_zn(&f54).unwrap();
        assert_eq!(w.pairs, res_pairs(&[(27, 9), (6, 12)]));
        assert!(roberts_witness_zn(&factorize(8).unwrap()).is_err());
    }

    #[test]
    fn zn_witness_verifies_against_graph() {
        let g = build_zn_graph(12).unwrap();
        let w = roberts_witness_zn(&factorize(12).unwrap()).unwrap();
        let v = verify_roberts_witness(&g, &w).unwrap();
        assert!(v.ok());
        assert_eq!(v.lower_bound, 2);

        let bad = RobertsWitness { pairs: res_pairs(&[(3, 4)]) };
        let v = verify_roberts_witness(&g, &bad).unwrap();
        assert_eq!(v.failures, vec![WitnessFailure::PairAdjacent(3.into(), 4.into())]);
        assert_eq!(v.lower_bound, 0);

        let v = verify_roberts_witness(&g, &RobertsWitness::default()).unwrap();
        assert!(v.ok() && v.lower_bound == 0);

        let unknown = RobertsWitness { pairs: res_pairs(&[(5, 7)]) };
        assert!(verify_roberts_witness(&g, &unknown).is_err());

        let repeated = RobertsWitness { pairs: res_pairs(&[(3, 6), (3, 8)]) };
        let v = verify_roberts_witness(&g, &repeated).unwrap();
        assert!(v.failures.contains(&WitnessFailure::Repeated(3.into())));
    }

    #[test]
    fn literal_case2_pair_is_adjacent() {
        let f = factorize(54).unwrap();
        let w = roberts_witness_zn_with(&f, Case2Reading::Literal).unwrap();
        assert_eq!(w.pairs[0], (27.into(), 18.into()));
        let v = verify_roberts_witness(&ZnRing(54), &w).unwrap();
        assert!(v.failures.contains(&WitnessFailure::PairAdjacent(27.into(), 18.into())));
    }

    #[test]
    fn witness_sizes_sweep() {
        for n in 6..=5000u64 {
            let f = factorize(n).unwrap();
            if f.len() < 2 {
                continue;
            }
            let w = roberts_witness_zn(&f).unwrap();
            let v = verify_roberts_witness(&ZnRing(n), &w).unwrap();
            assert!(v.ok(), "N={n}: {:?}", v.failures);
            let expected = if f.has_small_odd_exponents() { f.len() - 1 } else { f.len() };
            assert_eq!(v.lower_bound, expected, "N={n}");
        }
    }

    #[test]
    fn boolean_witness_examples() {
        let w = roberts_witness_boolean(4).unwrap();
        assert_eq!(w.pairs, vec![(bits("1000"), bits("1100")), (bits("0010"), bits("0011"))]);
        assert_eq!(roberts_witness_boolean(2).unwrap().size(), 0);
        let w5 = roberts_witness_boolean(5).unwrap();
        assert_eq!(w5.pairs, vec![(bits("10000"), bits("11000")), (bits("00100"), bits("00110"))]);
        for k in 3..=12 {
            let w = roberts_witness_boolean(k).unwrap();
            let v = verify_roberts_witness(&BooleanRing(k), &w).unwrap();
            assert!(v.ok(), "k={k}");
            assert_eq!(v.lower_bound, (k / 2) as usize);
        }
        let g = build_boolean_graph(6).unwrap();
        assert!(verify_roberts_witness(&g, &roberts_witness_boolean(6).unwrap()).unwrap().ok());
    }

    #[test]
    fn small_lower_bound_examples() {
        let w = small_lower_bound(&build_zn_graph(8).unwrap());
        assert_eq!(w.pairs, res_pairs(&[(2, 6)]));
        assert_eq!(small_lower_bound(&build_zn_graph(9).unwrap()).size(), 0);
        assert_eq!(small_lower_bound(&build_zn_graph(7).unwrap()).size(), 0);
    }

    #[test]
    fn independence_examples() {
        let w = independence_witness_zn(&factorize(100).unwrap());
        assert_eq!(w.vertices, vec![2.into(), 4.into(), 6.into(), 8.into()]);
        let w = independence_witness_zn(&factorize(12).unwrap());
        assert_eq!(w.vertices, vec![2.into()]);
        assert!(independence_witness_zn(&factorize(7).unwrap()).vertices.is_empty());
        assert!(independence_witness_zn(&factorize(4).unwrap()).vertices.is_empty());
    }

    #[test]
    fn independence_sweep() {
        for n in 4..=3000u64 {
            let f = factorize(n).unwrap();
            let w = independence_witness_zn(&f);
            assert!(verify_independence(&ZnRing(n), &w).unwrap(), "N={n}");
            let p1 = f.factor(1).p;
            let floor_root = isqrt(n / (p1 * p1));
            assert!(w.vertices.len() as u64 + 1 >= floor_root, "N={n}");
        }
    }
}
