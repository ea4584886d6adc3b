//! Verification of representations, threshold certificates and witnesses,
//! and the end-to-end certification pipelines.
//!
//! Nothing a builder produces is trusted: every report is assembled from
//! verdicts computed here against the graph itself.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::arith::factorize;
use crate::bounds::{
    boolean_bounds, cograph_dim_upper, cubicity_bounds, theorem_box_value, threshold_dim_bounds, BoxValue,
    BoxicityReport, CaseLabel, Check, Subject,
};
use crate::error::{Error, Result};
use crate::graph::{build_boolean_graph, build_zn_graph, AdjMatrix, Label, VertexId, ZdGraph, ZnRing};
use crate::rep::{
    build_boolean_rep, build_general_rep, build_representation, check_shape, BoxRepresentation, Construction, Interval,
    IntervalAssignment, ThresholdCertificate,
};
use crate::witness::{
    independence_witness_zn, roberts_witness_boolean, roberts_witness_zn, small_lower_bound, verify_independence,
    verify_roberts_witness, RobertsWitness,
};

/// At most this many failures are recorded per verdict; all are counted.
pub const MAX_RECORDED_FAILURES: usize = 64;

/// A vertex pair on which a check disagrees with the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub u: Label,
    pub v: Label,
    /// Offending dimension, when the check is per dimension.
    pub dimension: Option<String>,
    pub expected: bool,
    pub got: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Verdict {
    pub failures: Vec<Failure>,
    pub failure_count: usize,
}

impl Verdict {
    pub fn ok(&self) -> bool {
        self.failure_count == 0
    }

    fn record(&mut self, f: Failure) {
        if self.failures.len() < MAX_RECORDED_FAILURES {
            self.failures.push(f);
        }
        self.failure_count += 1;
    }

    /// Associative merge of two verdicts.
    pub fn merge(mut self, other: Verdict) -> Verdict {
        self.failure_count += other.failure_count;
        for f in other.failures {
            if self.failures.len() < MAX_RECORDED_FAILURES {
                self.failures.push(f);
            }
        }
        self
    }
}

#[inline]
pub fn intersects(x: &Interval, y: &Interval) -> bool {
    x.intersects(y)
}

/// The interval graph of one assignment, on vertex ids `0..len`.
pub fn edges_of_assignment(a: &IntervalAssignment) -> AdjMatrix {
    let n = a.intervals.len();
    let mut m = AdjMatrix::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if a.intervals[u].intersects(&a.intervals[v]) {
                m.insert(u, v);
            }
        }
    }
    m
}

/// Maps representation positions to graph vertex ids; the vertex sets must
/// coincide.
fn align(g: &ZdGraph, vertices: &[Label]) -> Result<Vec<VertexId>> {
    if vertices.len() != g.order() {
        return Err(Error::VertexMismatch(format!("{} vertices given for a graph on {}", vertices.len(), g.order())));
    }
    let map = vertices
        .iter()
        .map(|l| g.vertex(l).ok_or_else(|| Error::VertexMismatch(format!("{l} is not a vertex of the graph"))))
        .collect::<Result<Vec<_>>>()?;
    let mut seen = alloc::vec![false; g.order()];
    for &v in &map {
        if core::mem::replace(&mut seen[v], true) {
            return Err(Error::VertexMismatch(format!("{} listed twice", g.label(v))));
        }
    }
    Ok(map)
}

fn check_len(vertices: &[Label], a: &IntervalAssignment) -> Result<()> {
    if a.intervals.len() != vertices.len() {
        return Err(Error::VertexMismatch(format!(
            "dimension {} has {} intervals for {} vertices",
            a.label,
            a.intervals.len(),
            vertices.len()
        )));
    }
    Ok(())
}

/// Every edge of `g` is an edge of the interval graph `a`.
pub fn verify_supergraph(g: &ZdGraph, vertices: &[Label], a: &IntervalAssignment) -> Result<Verdict> {
    check_len(vertices, a)?;
    let map = align(g, vertices)?;
    let mut verdict = Verdict::default();
    for x in 0..vertices.len() {
        for y in x + 1..vertices.len() {
            if g.adjacent(map[x], map[y]) && !a.intervals[x].intersects(&a.intervals[y]) {
                verdict.record(Failure {
                    u: vertices[x],
                    v: vertices[y],
                    dimension: Some(a.label.clone()),
                    expected: true,
                    got: false,
                });
            }
        }
    }
    Ok(verdict)
}

/// `uv ∈ E(G)` iff the intervals of `u` and `v` meet in every dimension.
/// With no dimensions this says `G` is complete.
pub fn verify_intersection(g: &ZdGraph, rep: &BoxRepresentation) -> Result<Verdict> {
    check_shape(rep)?;
    let map = align(g, &rep.vertices)?;
    let n = rep.vertices.len();
    let mut verdict = Verdict::default();
    for x in 0..n {
        for y in x + 1..n {
            let expected = g.adjacent(map[x], map[y]);
            let got = rep.dims.iter().all(|d| d.intervals[x].intersects(&d.intervals[y]));
            if expected != got {
                verdict.record(Failure { u: rep.vertices[x], v: rep.vertices[y], dimension: None, expected, got });
            }
        }
    }
    Ok(verdict)
}

/// The interval graph of `a` equals `{uv : w(u) + w(v) >= S}`.
pub fn verify_threshold(vertices: &[Label], a: &IntervalAssignment, c: &ThresholdCertificate) -> Result<Verdict> {
    check_len(vertices, a)?;
    if c.weights.len() != vertices.len() {
        return Err(Error::VertexMismatch(format!(
            "certificate {} has {} weights for {} vertices",
            c.dimension,
            c.weights.len(),
            vertices.len()
        )));
    }
    let mut verdict = Verdict::default();
    for x in 0..vertices.len() {
        for y in x + 1..vertices.len() {
            let expected = c.weights[x].checked_add(c.weights[y])? >= c.threshold;
            let got = a.intervals[x].intersects(&a.intervals[y]);
            if expected != got {
                verdict.record(Failure {
                    u: vertices[x],
                    v: vertices[y],
                    dimension: Some(a.label.clone()),
                    expected,
                    got,
                });
            }
        }
    }
    Ok(verdict)
}

fn verdict_check(name: impl Into<String>, v: &Verdict) -> Check {
    let detail = match v.failures.first() {
        None => String::new(),
        Some(f) => format!(
            "{} failure(s); first: {{{}, {}}}{} expected {} got {}",
            v.failure_count,
            f.u,
            f.v,
            f.dimension.as_ref().map(|d| format!(" in {d}")).unwrap_or_default(),
            adjacency_word(f.expected),
            adjacency_word(f.got),
        ),
    };
    Check { name: name.into(), passed: v.ok(), failures: v.failure_count, detail }
}

fn adjacency_word(b: bool) -> &'static str {
    if b {
        "adjacent"
    } else {
        "non-adjacent"
    }
}

fn threshold_checks(rep: &BoxRepresentation, certs: &[ThresholdCertificate], checks: &mut Vec<Check>) -> Result<()> {
    if certs.len() != rep.dims.len() {
        checks.push(Check {
            name: "threshold-certificates".into(),
            passed: false,
            failures: 1,
            detail: format!("{} certificates for {} dimensions", certs.len(), rep.dims.len()),
        });
        return Ok(());
    }
    for (d, c) in rep.dims.iter().zip(certs) {
        let v = verify_threshold(&rep.vertices, d, c)?;
        checks.push(verdict_check(format!("threshold {}", c.dimension), &v));
    }
    Ok(())
}

fn witness_check(name: &str, v: &crate::witness::WitnessVerdict) -> Check {
    let detail = match v.failures.first() {
        None => String::new(),
        Some(f) => format!("{} failure(s); first: {f:?}", v.failures.len()),
    };
    Check { name: name.into(), passed: v.ok(), failures: v.failures.len(), detail }
}

/// Builds `Γ(Z_N)`, its representation, threshold certificates and lower
/// bound witnesses, verifies all of them, and reports the boxicity as an
/// exact value only when the verified lower and upper bounds meet.
pub fn certify_zn(n: u64) -> Result<BoxicityReport> {
    let fact = factorize(n)?;
    let graph = build_zn_graph(n)?;
    let (predicted, case) = theorem_box_value(&fact);

    let representation = build_representation(n)?;
    let (general, certificates) = build_general_rep(n)?;
    let threshold_representation = (representation.construction != Construction::General).then_some(general);

    let roberts = if fact.len() >= 2 { roberts_witness_zn(&fact)? } else { small_lower_bound(&graph) };
    let independence = independence_witness_zn(&fact);

    let mut checks = Vec::new();
    let rep_verdict = verify_intersection(&graph, &representation)?;
    checks.push(verdict_check("box representation", &rep_verdict));
    let threshold_rep = threshold_representation.as_ref().unwrap_or(&representation);
    if let Some(t) = &threshold_representation {
        let v = verify_intersection(&graph, t)?;
        checks.push(verdict_check("threshold representation", &v));
    }
    threshold_checks(threshold_rep, &certificates, &mut checks)?;

    let wv = verify_roberts_witness(&graph, &roberts)?;
    checks.push(witness_check("roberts witness", &wv));
    let indep_ok = verify_independence(&ZnRing(n), &independence)?;
    checks.push(Check {
        name: "independence witness".into(),
        passed: indep_ok,
        failures: (!indep_ok) as usize,
        detail: String::new(),
    });

    let lower = wv.lower_bound as u64;
    let upper = rep_verdict.ok().then_some(representation.dimension() as u64);
    let exact = wv.ok() && upper == Some(lower);
    checks.push(Check {
        name: "bounds meet".into(),
        passed: exact,
        failures: (!exact) as usize,
        detail: if exact {
            String::new()
        } else {
            format!("verified lower {lower}, verified upper {}", upper.map_or("none".to_string(), |u| u.to_string()))
        },
    });

    let ok = checks.iter().all(|c| c.passed);
    let box_value = if ok { BoxValue::Exact(lower) } else { BoxValue::Range { lo: lower, hi: upper } };
    Ok(BoxicityReport {
        cubicity: Some(cubicity_bounds(&fact)),
        dim_th: threshold_dim_bounds(&fact),
        dim_cog_upper: cograph_dim_upper(&Subject::Zn(fact.clone())),
        theorem_bounds: crate::bounds::Bounds { lo: predicted, hi: predicted },
        predicted_box: Some(predicted),
        subject: Subject::Zn(fact),
        case,
        box_value,
        representation,
        threshold_representation,
        threshold_certificates: certificates,
        roberts,
        independence: Some(independence),
        checks,
        ok,
    })
}

/// The `Γ(Z_2^k)` pipeline. Only the bound pair `[⌊k/2⌋, k]` is claimed, so
/// the box value is always a range.
pub fn certify_boolean(k: u32) -> Result<BoxicityReport> {
    let graph = build_boolean_graph(k)?;
    let (representation, certificates) = build_boolean_rep(k)?;
    let roberts = roberts_witness_boolean(k)?;

    let mut checks = Vec::new();
    let rep_verdict = verify_intersection(&graph, &representation)?;
    checks.push(verdict_check("box representation", &rep_verdict));
    threshold_checks(&representation, &certificates, &mut checks)?;
    let wv = verify_roberts_witness(&graph, &roberts)?;
    checks.push(witness_check("roberts witness", &wv));

    let ok = checks.iter().all(|c| c.passed);
    let upper = rep_verdict.ok().then_some(representation.dimension() as u64);
    let bounds = boolean_bounds(k);
    let subject = Subject::Boolean(k);
    Ok(BoxicityReport {
        dim_cog_upper: cograph_dim_upper(&subject),
        subject,
        case: CaseLabel::Boolean(k),
        predicted_box: None,
        box_value: BoxValue::Range { lo: wv.lower_bound as u64, hi: upper },
        theorem_bounds: bounds,
        dim_th: bounds,
        cubicity: None,
        representation,
        threshold_representation: None,
        threshold_certificates: certificates,
        roberts,
        independence: None,
        checks,
        ok,
    })
}

/// Re-verifies a representation and witness against `Γ(Z_N)` without
/// trusting how they were produced.
pub fn recheck_zn(n: u64, rep: &BoxRepresentation, roberts: &RobertsWitness) -> Result<(Verdict, usize)> {
    let g = build_zn_graph(n)?;
    let v = verify_intersection(&g, rep)?;
    let w = verify_roberts_witness(&g, roberts)?;
    Ok((v, w.lower_bound))
}
