//! JSON certificate bundles.
//!
//! A bundle carries everything needed to re-verify a report without this
//! tool's constructions: the vertex list, every interval with exact
//! `num/den` endpoints, the threshold weights and the witnesses.

use serde::{Deserialize, Serialize};
use thiserror::Error;
use zdbox_core::{
    build_boolean_graph, build_zn_graph, factorize, verify_independence, verify_intersection, verify_roberts_witness,
    verify_threshold, BitVector, BoxRepresentation, BoxValue, BoxicityReport, Construction, IndependenceWitness,
    Interval, IntervalAssignment, Label, Rational, RobertsWitness, Subject, ThresholdCertificate, ZdGraph,
};

pub const SCHEMA_VERSION: &str = "zdbox-certificate/1";

#[derive(Debug, Error)]
pub enum BundleError {
    #[error("unsupported schema version `{0}`")]
    Schema(String),
    #[error("malformed bundle: {0}")]
    Malformed(String),
    #[error(transparent)]
    Core(#[from] zdbox_core::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn malformed(msg: impl Into<String>) -> BundleError {
    BundleError::Malformed(msg.into())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimePowerJson {
    pub p: u64,
    pub n: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "ring", rename_all = "snake_case")]
pub enum SubjectJson {
    Zn { n: u64, factorization: Vec<PrimePowerJson> },
    Boolean { k: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxJson {
    /// Present only when the lower and upper certificates meet.
    pub exact: Option<u64>,
    pub lo: u64,
    pub hi: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubicityJson {
    pub lower: String,
    pub lower_expr: String,
    pub clamped: bool,
    pub upper: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalJson {
    pub vertex: String,
    pub lo: String,
    pub hi: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionJson {
    pub label: String,
    pub intervals: Vec<IntervalJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationJson {
    pub construction: String,
    pub dims: Vec<DimensionJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightJson {
    pub vertex: String,
    pub weight: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdJson {
    pub dimension: String,
    pub threshold: String,
    pub weights: Vec<WeightJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    pub name: String,
    pub passed: bool,
    pub failures: usize,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateBundle {
    pub schema_version: String,
    pub subject: SubjectJson,
    pub case: String,
    pub case_description: String,
    #[serde(rename = "box")]
    pub box_value: BoxJson,
    pub predicted_box: Option<u64>,
    pub theorem_bounds: [u64; 2],
    pub dim_th: [u64; 2],
    pub dim_cog_upper: u64,
    pub cubicity: Option<CubicityJson>,
    pub vertices: Vec<String>,
    pub representation: RepresentationJson,
    pub threshold_representation: Option<RepresentationJson>,
    pub threshold_certificates: Vec<ThresholdJson>,
    pub roberts_witness: Vec<[String; 2]>,
    pub independence_witness: Option<Vec<String>>,
    pub checks: Vec<CheckJson>,
    pub ok: bool,
}

fn representation_json(rep: &BoxRepresentation) -> RepresentationJson {
    RepresentationJson {
        construction: rep.construction.name().to_string(),
        dims: rep
            .dims
            .iter()
            .map(|d| DimensionJson {
                label: d.label.clone(),
                intervals: rep
                    .vertices
                    .iter()
                    .zip(&d.intervals)
                    .map(|(v, iv)| IntervalJson {
                        vertex: v.to_string(),
                        lo: iv.lo().to_string(),
                        hi: iv.hi().to_string(),
                    })
                    .collect(),
            })
            .collect(),
    }
}

impl CertificateBundle {
    pub fn from_report(r: &BoxicityReport) -> Self {
        let rep = &r.representation;
        let subject = match &r.subject {
            Subject::Zn(f) => SubjectJson::Zn {
                n: f.n(),
                factorization: f.factors().iter().map(|pp| PrimePowerJson { p: pp.p, n: pp.n }).collect(),
            },
            Subject::Boolean(k) => SubjectJson::Boolean { k: *k },
        };
        let box_value = match r.box_value {
            BoxValue::Exact(v) => BoxJson { exact: Some(v), lo: v, hi: Some(v) },
            BoxValue::Range { lo, hi } => BoxJson { exact: None, lo, hi },
        };
        let threshold_vertices = &r.threshold_rep().vertices;
        CertificateBundle {
            schema_version: SCHEMA_VERSION.to_string(),
            subject,
            case: r.case.as_str(),
            case_description: r.case.description(),
            box_value,
            predicted_box: r.predicted_box,
            theorem_bounds: [r.theorem_bounds.lo, r.theorem_bounds.hi],
            dim_th: [r.dim_th.lo, r.dim_th.hi],
            dim_cog_upper: r.dim_cog_upper,
            cubicity: r.cubicity.as_ref().map(|c| CubicityJson {
                lower: c.lower_decimal(),
                lower_expr: c.lower_expr.clone(),
                clamped: c.clamped,
                upper: c.upper,
            }),
            vertices: rep.vertices.iter().map(Label::to_string).collect(),
            representation: representation_json(rep),
            threshold_representation: r.threshold_representation.as_ref().map(representation_json),
            threshold_certificates: r
                .threshold_certificates
                .iter()
                .map(|c| ThresholdJson {
                    dimension: c.dimension.clone(),
                    threshold: c.threshold.to_string(),
                    weights: threshold_vertices
                        .iter()
                        .zip(&c.weights)
                        .map(|(v, w)| WeightJson { vertex: v.to_string(), weight: w.to_string() })
                        .collect(),
                })
                .collect(),
            roberts_witness: r.roberts.pairs.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect(),
            independence_witness: r.independence.as_ref().map(|w| w.vertices.iter().map(Label::to_string).collect()),
            checks: r
                .checks
                .iter()
                .map(|c| CheckJson {
                    name: c.name.clone(),
                    passed: c.passed,
                    failures: c.failures,
                    detail: c.detail.clone(),
                })
                .collect(),
            ok: r.ok,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("bundle serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, BundleError> {
        let b: CertificateBundle = serde_json::from_str(text)?;
        if b.schema_version != SCHEMA_VERSION {
            return Err(BundleError::Schema(b.schema_version));
        }
        Ok(b)
    }

    fn label(&self, s: &str) -> Result<Label, BundleError> {
        match self.subject {
            SubjectJson::Zn { .. } => {
                s.parse::<u64>().map(Label::Residue).map_err(|_| malformed(format!("`{s}` is not a residue")))
            }
            SubjectJson::Boolean { .. } => Ok(Label::Bits(s.parse::<BitVector>()?)),
        }
    }

    fn labels(&self, items: &[String]) -> Result<Vec<Label>, BundleError> {
        items.iter().map(|s| self.label(s)).collect()
    }

    fn representation(&self, r: &RepresentationJson) -> Result<BoxRepresentation, BundleError> {
        let vertices = self.labels(&self.vertices)?;
        let construction = match r.construction.as_str() {
            "complete" => Construction::Complete,
            "general" => Construction::General,
            "improved" => Construction::Improved,
            "boolean" => Construction::Boolean,
            other => return Err(malformed(format!("unknown construction `{other}`"))),
        };
        let mut dims = Vec::with_capacity(r.dims.len());
        for d in &r.dims {
            if d.intervals.len() != vertices.len() {
                return Err(malformed(format!(
                    "{} has {} intervals for {} vertices",
                    d.label,
                    d.intervals.len(),
                    vertices.len()
                )));
            }
            let mut intervals = Vec::with_capacity(vertices.len());
            for (iv, v) in d.intervals.iter().zip(&vertices) {
                if self.label(&iv.vertex)? != *v {
                    return Err(malformed(format!("{}: interval for `{}` out of vertex order", d.label, iv.vertex)));
                }
                intervals.push(Interval::new(iv.lo.parse::<Rational>()?, iv.hi.parse::<Rational>()?)?);
            }
            dims.push(IntervalAssignment { label: d.label.clone(), intervals });
        }
        Ok(BoxRepresentation { construction, vertices, dims })
    }

    pub fn box_representation(&self) -> Result<BoxRepresentation, BundleError> {
        self.representation(&self.representation)
    }

    /// The representation the threshold certificates refer to.
    pub fn threshold_representation(&self) -> Result<BoxRepresentation, BundleError> {
        self.representation(self.threshold_representation.as_ref().unwrap_or(&self.representation))
    }

    pub fn threshold_certificates(&self) -> Result<Vec<ThresholdCertificate>, BundleError> {
        let vertices = self.labels(&self.vertices)?;
        self.threshold_certificates
            .iter()
            .map(|c| {
                if c.weights.len() != vertices.len() {
                    return Err(malformed(format!("{} has {} weights", c.dimension, c.weights.len())));
                }
                let mut weights = Vec::with_capacity(vertices.len());
                for (w, v) in c.weights.iter().zip(&vertices) {
                    if self.label(&w.vertex)? != *v {
                        return Err(malformed(format!(
                            "{}: weight for `{}` out of vertex order",
                            c.dimension, w.vertex
                        )));
                    }
                    weights.push(w.weight.parse()?);
                }
                Ok(ThresholdCertificate { dimension: c.dimension.clone(), weights, threshold: c.threshold.parse()? })
            })
            .collect()
    }

    pub fn roberts(&self) -> Result<RobertsWitness, BundleError> {
        let pairs = self
            .roberts_witness
            .iter()
            .map(|[a, b]| Ok((self.label(a)?, self.label(b)?)))
            .collect::<Result<_, BundleError>>()?;
        Ok(RobertsWitness { pairs })
    }

    pub fn graph(&self) -> Result<ZdGraph, BundleError> {
        Ok(match &self.subject {
            SubjectJson::Zn { n, factorization } => {
                let f = factorize(*n)?;
                let listed: Vec<_> = factorization.iter().map(|pp| (pp.p, pp.n)).collect();
                let actual: Vec<_> = f.factors().iter().map(|pp| (pp.p, pp.n)).collect();
                if listed != actual {
                    return Err(malformed(format!("factorization does not match N = {n}")));
                }
                build_zn_graph(*n)?
            }
            SubjectJson::Boolean { k } => build_boolean_graph(*k)?,
        })
    }

    /// Re-verifies every certificate in the bundle against a freshly built
    /// graph and checks that the claimed box value follows from them.
    pub fn recheck(&self) -> Result<Recheck, BundleError> {
        let g = self.graph()?;
        let mut checks = Vec::new();

        let rep = self.box_representation()?;
        let rep_ok = verify_intersection(&g, &rep)?.ok();
        checks.push(("box representation".to_string(), rep_ok));

        let threshold_rep = self.threshold_representation()?;
        if self.threshold_representation.is_some() {
            checks.push(("threshold representation".to_string(), verify_intersection(&g, &threshold_rep)?.ok()));
        }
        let certs = self.threshold_certificates()?;
        checks.push(("threshold count".to_string(), certs.len() == threshold_rep.dims.len()));
        for (d, c) in threshold_rep.dims.iter().zip(&certs) {
            let ok = d.label == c.dimension && verify_threshold(&threshold_rep.vertices, d, c)?.ok();
            checks.push((format!("threshold {}", c.dimension), ok));
        }

        let wv = verify_roberts_witness(&g, &self.roberts()?)?;
        checks.push(("roberts witness".to_string(), wv.ok()));
        if let Some(ind) = &self.independence_witness {
            let w = IndependenceWitness { vertices: self.labels(ind)? };
            checks.push(("independence witness".to_string(), verify_independence(&g, &w)?));
        }

        let lower = wv.lower_bound as u64;
        let upper = rep_ok.then_some(rep.dimension() as u64);
        let claim_ok = match self.box_value.exact {
            Some(v) => upper == Some(v) && lower == v && self.box_value.lo == v && self.box_value.hi == Some(v),
            None => self.box_value.lo <= lower && (self.box_value.hi.is_none() || self.box_value.hi == upper),
        };
        checks.push(("claimed box".to_string(), claim_ok));
        let ok = checks.iter().all(|(_, passed)| *passed);
        Ok(Recheck { checks, ok })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recheck {
    pub checks: Vec<(String, bool)>,
    pub ok: bool,
}
