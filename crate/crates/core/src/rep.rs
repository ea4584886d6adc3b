//! Explicit interval representations of `Γ(Z_N)` and `Γ(Z_2^k)`.
//!
//! Three constructions are provided:
//!
//! * [`build_general_rep`]: one threshold interval graph per prime factor of
//!   `N`, so `box(Γ(Z_N)) <= dim_TH(Γ(Z_N)) <= a`.
//! * [`build_improved_rep`]: for `N = 2 * Π p_i^{n_i}` with every odd
//!   exponent at most 2, one interval graph per odd prime, so
//!   `box(Γ(Z_N)) <= a - 1`.
//! * [`build_boolean_rep`]: `k` threshold interval graphs for `Γ(Z_2^k)`.
//!
//! Builders only construct. Whether a representation is correct is decided
//! by [`crate::certify`].

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{factorize, gcd_raw, valuation_raw, Factorization, Rational};
use crate::error::{invalid, Error, Result};
use crate::graph::{build_boolean_graph, zero_divisors, Label, VertexId};

/// Closed interval `[lo, hi]`, `lo <= hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(invalid(format!("empty interval [{lo}, {hi}]")));
        }
        Ok(Interval { lo, hi })
    }

    pub fn point(x: Rational) -> Self {
        Interval { lo: x, hi: x }
    }

    fn ints(lo: i64, hi: i64) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo: Rational::integer(lo), hi: Rational::integer(hi) }
    }

    pub fn lo(&self) -> Rational {
        self.lo
    }

    pub fn hi(&self) -> Rational {
        self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    /// `max(lo) <= min(hi)`, compared exactly.
    #[inline]
    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// One interval graph: an interval for every vertex, indexed by [`VertexId`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalAssignment {
    pub label: String,
    pub intervals: Vec<Interval>,
}

/// Which construction produced a representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    /// No dimensions: the target is complete (or has no vertices).
    Complete,
    General,
    Improved,
    Boolean,
}

impl Construction {
    pub fn name(&self) -> &'static str {
        match self {
            Construction::Complete => "complete",
            Construction::General => "general",
            Construction::Improved => "improved",
            Construction::Boolean => "boolean",
        }
    }
}

/// A `d`-box representation candidate: `dims.len()` interval assignments
/// over `vertices`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxRepresentation {
    pub construction: Construction,
    pub vertices: Vec<Label>,
    pub dims: Vec<IntervalAssignment>,
}

impl BoxRepresentation {
    pub fn dimension(&self) -> usize {
        self.dims.len()
    }

    pub fn dim(&self, label: &str) -> Option<&IntervalAssignment> {
        self.dims.iter().find(|d| d.label == label)
    }
}

/// Weights and threshold claiming that one interval graph is the threshold
/// graph `{uv : w(u) + w(v) >= S}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdCertificate {
    pub dimension: String,
    pub weights: Vec<Rational>,
    pub threshold: Rational,
}

/// Valuation class of a residue for one prime factor.
///
/// `j` is the exponent of `p_i` in `gcd(u, N)`; `kbit` is 1 when
/// `gcd(u, N)` is even and 0 otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassIndex {
    pub j: u32,
    pub kbit: u32,
}

/// Class of `u` with respect to the `i`-th prime factor (1-based).
pub fn class_of(fact: &Factorization, i: usize, u: u64) -> ClassIndex {
    let n = fact.n();
    debug_assert!(i >= 1 && i <= fact.len());
    debug_assert!(u >= 1 && u < n);
    let g = gcd_raw(u, n);
    ClassIndex { j: valuation_raw(fact.factor(i).p, g), kbit: (g % 2 == 0) as u32 }
}

fn dim_label(i: usize) -> String {
    format!("I_{i}")
}

/// `g(u) = u / 2N`.
fn perturbation(u: u64, n: u64) -> Result<Rational> {
    Rational::of_fraction(u, 2 * n)
}

fn shifted_point(shift: i64, u: u64, n: u64) -> Result<Interval> {
    Ok(Interval::point(Rational::integer(shift).checked_add(perturbation(u, n)?)?))
}

fn zn_vertices(n: u64) -> Result<Vec<u64>> {
    zero_divisors(n)
}

/// One dimension per prime factor `p_i^{n_i}`: a vertex in class `j` gets
/// the point `j + u/2N` if `j < ⌈n_i/2⌉` and `[n_i - j, n_i]` otherwise.
/// Certificates use weights `j` and threshold `n_i`.
pub fn build_general_rep(n: u64) -> Result<(BoxRepresentation, Vec<ThresholdCertificate>)> {
    let fact = factorize(n)?;
    let zd = zn_vertices(n)?;
    let vertices: Vec<Label> = zd.iter().map(|&u| Label::Residue(u)).collect();
    if zd.is_empty() {
        let rep = BoxRepresentation { construction: Construction::Complete, vertices, dims: Vec::new() };
        return Ok((rep, Vec::new()));
    }
    let mut dims = Vec::with_capacity(fact.len());
    let mut certs = Vec::with_capacity(fact.len());
    for i in 1..=fact.len() {
        let ni = fact.factor(i).n;
        let half = ni.div_ceil(2);
        let mut intervals = Vec::with_capacity(zd.len());
        let mut weights = Vec::with_capacity(zd.len());
        for &u in &zd {
            let j = class_of(&fact, i, u).j;
            let iv = if j < half { shifted_point(j as i64, u, n)? } else { Interval::ints((ni - j) as i64, ni as i64) };
            intervals.push(iv);
            weights.push(Rational::integer(j as i64));
        }
        dims.push(IntervalAssignment { label: dim_label(i), intervals });
        certs.push(ThresholdCertificate { dimension: dim_label(i), weights, threshold: Rational::integer(ni as i64) });
    }
    Ok((BoxRepresentation { construction: Construction::General, vertices, dims }, certs))
}

/// Checks the structural precondition of [`build_improved_rep`].
pub fn improved_case_applies(fact: &Factorization) -> Result<()> {
    if !fact.is_twice_odd() {
        return Err(Error::CaseMismatch("N must be congruent to 2 mod 4"));
    }
    if fact.len() < 2 {
        return Err(Error::CaseMismatch("N must have at least two distinct prime factors"));
    }
    if fact.factors()[1..].iter().any(|f| f.n > 2) {
        return Err(Error::CaseMismatch("every odd prime exponent must be at most 2"));
    }
    Ok(())
}

/// `a - 1` dimensions labelled `I_2 .. I_a`, one per odd prime.
///
/// Odd primes with exponent 1 use the four-row table, exponent 2 the six-row
/// table, both keyed by `(j, kbit)`.
pub fn build_improved_rep(n: u64) -> Result<BoxRepresentation> {
    let fact = factorize(n)?;
    improved_case_applies(&fact)?;
    let zd = zn_vertices(n)?;
    let vertices: Vec<Label> = zd.iter().map(|&u| Label::Residue(u)).collect();
    let three_halves = Rational::of_fraction(3, 2)?;
    let mut dims = Vec::with_capacity(fact.len() - 1);
    for i in 2..=fact.len() {
        let squared = fact.factor(i).n == 2;
        let mut intervals = Vec::with_capacity(zd.len());
        for &u in &zd {
            let c = class_of(&fact, i, u);
            let iv = match (squared, c.j, c.kbit) {
                (_, 0, 0) => shifted_point(0, u, n)?,
                (_, 0, 1) => shifted_point(1, u, n)?,
                (false, 1, 1) => Interval::ints(0, 2),
                (false, 1, 0) => Interval::ints(1, 2),
                (true, 1, 0) => shifted_point(2, u, n)?,
                (true, 2, 0) => Interval::ints(1, 2),
                (true, 1, 1) => Interval::new(three_halves, Rational::integer(3))?,
                (true, 2, 1) => Interval::ints(0, 3),
                _ => unreachable!("class ({}, {}) outside the table", c.j, c.kbit),
            };
            intervals.push(iv);
        }
        dims.push(IntervalAssignment { label: dim_label(i), intervals });
    }
    Ok(BoxRepresentation { construction: Construction::Improved, vertices, dims })
}

/// Injective map of the `rank`-th vertex (0-based) of `count` into `(0, 1)`.
fn boolean_perturbation(rank: usize, count: usize) -> Result<Rational> {
    Rational::of_fraction(rank as u64 + 1, count as u64 + 2)
}

/// `k` dimensions: in dimension `i`, vectors with coordinate `i` set get a
/// distinct point in `(0, 1)`, all others get `[0, 1]`. Certificates use
/// weight 0 for set coordinates, 1 otherwise, threshold 1.
pub fn build_boolean_rep(k: u32) -> Result<(BoxRepresentation, Vec<ThresholdCertificate>)> {
    let g = build_boolean_graph(k)?;
    let vertices = g.labels().to_vec();
    let count = vertices.len();
    let mut dims = Vec::with_capacity(k as usize);
    let mut certs = Vec::with_capacity(k as usize);
    for i in 1..=k {
        let mut intervals = Vec::with_capacity(count);
        let mut weights = Vec::with_capacity(count);
        for (rank, l) in vertices.iter().enumerate() {
            let Label::Bits(b) = l else { unreachable!("boolean graph has bit-vector labels") };
            if b.coordinate(i) {
                intervals.push(Interval::point(boolean_perturbation(rank, count)?));
                weights.push(Rational::ZERO);
            } else {
                intervals.push(Interval::ints(0, 1));
                weights.push(Rational::ONE);
            }
        }
        dims.push(IntervalAssignment { label: dim_label(i as usize), intervals });
        certs.push(ThresholdCertificate { dimension: dim_label(i as usize), weights, threshold: Rational::ONE });
    }
    Ok((BoxRepresentation { construction: Construction::Boolean, vertices, dims }, certs))
}

/// Representation whose dimension equals the predicted boxicity of `Γ(Z_N)`.
pub fn build_representation(n: u64) -> Result<BoxRepresentation> {
    let fact = factorize(n)?;
    if fact.is_prime_power() && fact.factor(1).n <= 2 {
        // Γ(Z_p) has no vertices and Γ(Z_{p^2}) is complete.
        let vertices = zn_vertices(n)?.into_iter().map(Label::Residue).collect();
        return Ok(BoxRepresentation { construction: Construction::Complete, vertices, dims: Vec::new() });
    }
    if improved_case_applies(&fact).is_ok() {
        return build_improved_rep(n);
    }
    Ok(build_general_rep(n)?.0)
}

/// Every dimension must carry exactly one interval per vertex.
pub(crate) fn check_shape(rep: &BoxRepresentation) -> Result<()> {
    for d in &rep.dims {
        if d.intervals.len() != rep.vertices.len() {
            return Err(Error::VertexMismatch(format!(
                "dimension {} has {} intervals for {} vertices",
                d.label,
                d.intervals.len(),
                rep.vertices.len()
            )));
        }
    }
    Ok(())
}

/// Interval of vertex `v` in dimension `label`.
pub fn interval_of(rep: &BoxRepresentation, label: &str, v: &Label) -> Option<Interval> {
    let idx: VertexId = rep.vertices.iter().position(|x| x == v)?;
    rep.dim(label).map(|d| d.intervals[idx])
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn r(k: u64, m: u64) -> Rational {
        Rational::of_fraction(k, m).unwrap()
    }

    fn iv(lo: Rational, hi: Rational) -> Interval {
        Interval::new(lo, hi).unwrap()
    }

    fn int(v: i64) -> Rational {
        Rational::integer(v)
    }

    fn at(rep: &BoxRepresentation, dim: &str, u: u64) -> Interval {
        interval_of(rep, dim, &Label::Residue(u)).unwrap()
    }

    #[test]
    fn class_examples() {
        let f12 = factorize(12).unwrap();
        assert_eq!(class_of(&f12, 1, 8).j, 2);
        let f18 = factorize(18).unwrap();
        assert_eq!(class_of(&f18, 2, 9), ClassIndex { j: 2, kbit: 0 });
        assert_eq!(class_of(&f18, 2, 6), ClassIndex { j: 1, kbit: 1 });
        // valuation of u itself may exceed n_i; the class uses gcd(u, N)
        let f24 = factorize(24).unwrap();
        assert_eq!(class_of(&f24, 1, 16).j, 3);
    }

    #[test]
    fn general_rep_n12() {
        let (rep, certs) = build_general_rep(12).unwrap();
        assert_eq!(rep.dimension(), 2);
        assert_eq!(at(&rep, "I_1", 3), Interval::point(r(3, 24)));
        assert_eq!(at(&rep, "I_1", 6), iv(int(1), int(2)));
        assert_eq!(at(&rep, "I_1", 8), iv(int(0), int(2)));
        assert_eq!(at(&rep, "I_2", 2), Interval::point(r(2, 24)));
        assert_eq!(at(&rep, "I_2", 3), iv(int(0), int(1)));
        assert_eq!(certs[0].threshold, int(2));
        assert_eq!(certs[1].threshold, int(1));
        let idx8 = rep.vertices.iter().position(|l| *l == Label::Residue(8)).unwrap();
        assert_eq!(certs[0].weights[idx8], int(2));
    }

    #[test]
    fn general_rep_prime_power() {
        let (rep, _) = build_general_rep(8).unwrap();
        assert_eq!(rep.dimension(), 1);
        assert_eq!(at(&rep, "I_1", 2), Interval::point(int(1) + r(2, 16)));
        assert_eq!(at(&rep, "I_1", 4), iv(int(1), int(3)));
        let (rep, certs) = build_general_rep(7).unwrap();
        assert_eq!((rep.dimension(), certs.len()), (0, 0));
    }

    #[test]
    fn improved_rep_examples() {
        let rep = build_improved_rep(18).unwrap();
        assert_eq!(rep.dimension(), 1);
        assert_eq!(rep.dims[0].label, "I_2");
        assert_eq!(at(&rep, "I_2", 9), iv(int(1), int(2)));
        assert_eq!(at(&rep, "I_2", 6), iv(r(3, 2), int(3)));
        assert_eq!(at(&rep, "I_2", 3), Interval::point(int(2) + r(3, 36)));
        assert_eq!(at(&rep, "I_2", 2), Interval::point(int(1) + r(2, 36)));

        let rep = build_improved_rep(30).unwrap();
        let labels: Vec<_> = rep.dims.iter().map(|d| d.label.as_str()).collect();
        assert_eq!(labels, vec!["I_2", "I_3"]);
        assert_eq!(at(&rep, "I_2", 15), iv(int(1), int(2)));
        assert_eq!(at(&rep, "I_2", 6), iv(int(0), int(2)));
    }

    #[test]
    fn improved_rep_rejects() {
        assert_eq!(build_improved_rep(12), Err(Error::CaseMismatch("N must be congruent to 2 mod 4")));
        assert_eq!(build_improved_rep(54), Err(Error::CaseMismatch("every odd prime exponent must be at most 2")));
        assert!(matches!(build_improved_rep(2), Err(Error::CaseMismatch(_))));
    }

    #[test]
    fn boolean_rep_examples() {
        let (rep, certs) = build_boolean_rep(2).unwrap();
        let v10 = Label::Bits("10".parse().unwrap());
        let v01 = Label::Bits("01".parse().unwrap());
        assert!(interval_of(&rep, "I_1", &v10).unwrap().is_point());
        assert_eq!(interval_of(&rep, "I_1", &v01).unwrap(), iv(int(0), int(1)));
        assert_eq!(certs.len(), 2);

        let (rep, _) = build_boolean_rep(3).unwrap();
        let v110 = Label::Bits("110".parse().unwrap());
        assert!(interval_of(&rep, "I_1", &v110).unwrap().is_point());
        assert!(interval_of(&rep, "I_2", &v110).unwrap().is_point());
        assert_eq!(interval_of(&rep, "I_3", &v110).unwrap(), iv(int(0), int(1)));
        // points are distinct and strictly inside (0, 1)
        let mut pts: Vec<Rational> = rep.dims[0].intervals.iter().filter(|i| i.is_point()).map(|i| i.lo()).collect();
        assert!(pts.iter().all(|p| *p > int(0) && *p < int(1)));
        pts.sort();
        pts.dedup();
        assert_eq!(pts.len(), 3);
    }

    #[test]
    fn dispatch() {
        assert_eq!(build_representation(9).unwrap().dimension(), 0);
        assert_eq!(build_representation(7).unwrap().dimension(), 0);
        assert_eq!(build_representation(4).unwrap().dimension(), 0);
        assert_eq!(build_representation(8).unwrap().dimension(), 1);
        let r18 = build_representation(18).unwrap();
        assert_eq!((r18.dimension(), r18.construction), (1, Construction::Improved));
        let r12 = build_representation(12).unwrap();
        assert_eq!((r12.dimension(), r12.construction), (2, Construction::General));
        assert_eq!(build_representation(54).unwrap().dimension(), 2);
        assert_eq!(build_representation(30).unwrap().dimension(), 2);
    }

    #[test]
    fn interval_rules() {
        assert!(Interval::new(int(2), int(1)).is_err());
        assert!(iv(int(1), int(2)).intersects(&iv(r(3, 2), int(3))));
        assert!(Interval::point(r(1, 12)).intersects(&Interval::point(r(1, 12))));
        assert!(!Interval::point(r(3, 24)).intersects(&iv(int(1), int(2))));
        assert_eq!(alloc::format!("{}", iv(int(0), int(1))), "[0/1, 1/1]");
    }
}
