//! Closed-form bounds and the certified report.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{ceil_log2, isqrt, Factorization};
use crate::error::Result;
use crate::graph::{build_zn_graph, reduce_graph, Label};
use crate::rep::{BoxRepresentation, ThresholdCertificate};
use crate::witness::{IndependenceWitness, RobertsWitness};

/// Which branch of the boxicity formula applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseLabel {
    /// `N = p`: no zero divisors.
    Prime,
    /// `N = p^2`: complete graph.
    PrimeSquare,
    /// `N = p^n`, `n >= 3`: boxicity 1.
    PrimePowerCubePlus,
    /// `N ≡ 2 (mod 4)`, odd exponents at most 2: boxicity `a - 1`.
    TwiceOddSmallExponents,
    /// Everything else with `a >= 2`: boxicity `a`.
    General,
    Boolean(u32),
}

impl CaseLabel {
    pub fn as_str(&self) -> String {
        match self {
            CaseLabel::Prime => "prime".into(),
            CaseLabel::PrimeSquare => "prime-square".into(),
            CaseLabel::PrimePowerCubePlus => "prime-power-cube+".into(),
            CaseLabel::TwiceOddSmallExponents => "case-2mod4-small-exponents".into(),
            CaseLabel::General => "general".into(),
            CaseLabel::Boolean(k) => format!("boolean({k})"),
        }
    }

    pub fn description(&self) -> String {
        match self {
            CaseLabel::Prime => "empty graph".into(),
            CaseLabel::PrimeSquare => "complete graph, N = p^2".into(),
            CaseLabel::PrimePowerCubePlus => "N = p^n, n >= 3".into(),
            CaseLabel::TwiceOddSmallExponents => "2 mod 4, exponents <= 2".into(),
            CaseLabel::General => "general, box = a".into(),
            CaseLabel::Boolean(k) => format!("Z_2^{k}"),
        }
    }

    pub fn parse(s: &str) -> Option<CaseLabel> {
        Some(match s {
            "prime" => CaseLabel::Prime,
            "prime-square" => CaseLabel::PrimeSquare,
            "prime-power-cube+" => CaseLabel::PrimePowerCubePlus,
            "case-2mod4-small-exponents" => CaseLabel::TwiceOddSmallExponents,
            "general" => CaseLabel::General,
            _ => {
                let k = s.strip_prefix("boolean(")?.strip_suffix(')')?.parse().ok()?;
                CaseLabel::Boolean(k)
            }
        })
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.as_str())
    }
}

/// Closed integer range `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub lo: u64,
    pub hi: u64,
}

impl fmt::Display for Bounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Predicted `box(Γ(Z_N))` and the branch that produced it.
pub fn theorem_box_value(fact: &Factorization) -> (u64, CaseLabel) {
    let a = fact.len() as u64;
    if fact.is_prime_power() {
        return match fact.factor(1).n {
            1 => (0, CaseLabel::Prime),
            2 => (0, CaseLabel::PrimeSquare),
            _ => (1, CaseLabel::PrimePowerCubePlus),
        };
    }
    if fact.has_small_odd_exponents() {
        (a - 1, CaseLabel::TwiceOddSmallExponents)
    } else {
        (a, CaseLabel::General)
    }
}

/// `[a - 1, a]` for `a >= 2`; `[0, 1]` for prime powers.
pub fn threshold_dim_bounds(fact: &Factorization) -> Bounds {
    let a = fact.len() as u64;
    if a < 2 {
        Bounds { lo: 0, hi: 1 }
    } else {
        Bounds { lo: a - 1, hi: a }
    }
}

/// Cubicity bounds, all logarithms base 2.
///
/// `lower = log2(⌊√(N/p_1²)⌋ - 1) / 2`, clamped to 0 when the argument of
/// the logarithm is not positive; `upper = a ⌈log2 N⌉`.
#[derive(Debug, Clone, PartialEq)]
pub struct CubicityBounds {
    pub lower: f64,
    /// The lower bound as an exact expression, e.g. `log2(4)/2`.
    pub lower_expr: String,
    pub clamped: bool,
    pub upper: u64,
}

impl CubicityBounds {
    /// Six decimal places.
    pub fn lower_decimal(&self) -> String {
        format!("{:.6}", self.lower)
    }
}

pub fn cubicity_bounds(fact: &Factorization) -> CubicityBounds {
    let n = fact.n();
    let p1 = fact.factor(1).p;
    let arg = isqrt(n / (p1 * p1)) as i64 - 1;
    let upper = fact.len() as u64 * ceil_log2(n) as u64;
    if arg >= 1 {
        CubicityBounds {
            lower: libm::log2(arg as f64) / 2.0,
            lower_expr: format!("log2({arg})/2"),
            clamped: false,
            upper,
        }
    } else {
        CubicityBounds {
            lower: 0.0,
            lower_expr: format!("log2({arg})/2 undefined, clamped to 0"),
            clamped: true,
            upper,
        }
    }
}

/// `[⌊k/2⌋, k]`.
pub fn boolean_bounds(k: u32) -> Bounds {
    Bounds { lo: (k / 2) as u64, hi: k as u64 }
}

/// What a report is about.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Subject {
    Zn(Factorization),
    Boolean(u32),
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Zn(fact) => write!(f, "Γ(Z_{})", fact.n()),
            Subject::Boolean(k) => write!(f, "Γ(Z_2^{k})"),
        }
    }
}

/// `a` for `Z_N`, `k` for `Z_2^k`.
pub fn cograph_dim_upper(subject: &Subject) -> u64 {
    match subject {
        Subject::Zn(fact) => fact.len() as u64,
        Subject::Boolean(k) => *k as u64,
    }
}

/// One row per class of vertices with equal open neighbourhoods.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassRow {
    /// Smallest member.
    pub representative: Label,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSizeTable {
    pub n: u64,
    pub rows: Vec<ClassRow>,
}

impl ClassSizeTable {
    pub fn size_of(&self, representative: u64) -> Option<usize> {
        self.rows.iter().find(|r| r.representative == Label::Residue(representative)).map(|r| r.size)
    }

    pub fn singletons(&self) -> impl Iterator<Item = &ClassRow> {
        self.rows.iter().filter(|r| r.size == 1)
    }

    pub fn total(&self) -> usize {
        self.rows.iter().map(|r| r.size).sum()
    }
}

/// Class sizes of the reduced graph of `Γ(Z_N)`.
pub fn class_size_table(n: u64) -> Result<ClassSizeTable> {
    let g = build_zn_graph(n)?;
    let r = reduce_graph(&g);
    let rows = r.class_members.iter().map(|m| ClassRow { representative: m[0], size: m.len() }).collect();
    Ok(ClassSizeTable { n, rows })
}

/// Boxicity as certified: a single value only when verified lower and
/// upper bounds coincide.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoxValue {
    Exact(u64),
    /// `hi` is `None` when no upper bound could be verified.
    Range {
        lo: u64,
        hi: Option<u64>,
    },
}

impl fmt::Display for BoxValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoxValue::Exact(v) => write!(f, "{v}"),
            BoxValue::Range { lo, hi: Some(hi) } => write!(f, "[{lo}, {hi}]"),
            BoxValue::Range { lo, hi: None } => write!(f, "[{lo}, ?]"),
        }
    }
}

/// Result of one verification step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub failures: usize,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoxicityReport {
    pub subject: Subject,
    pub case: CaseLabel,
    /// Value of the closed formula (Z_N only).
    pub predicted_box: Option<u64>,
    pub box_value: BoxValue,
    /// Bounds claimed by the theory: the predicted value twice for `Z_N`,
    /// `[⌊k/2⌋, k]` for `Z_2^k`.
    pub theorem_bounds: Bounds,
    pub dim_th: Bounds,
    pub dim_cog_upper: u64,
    pub cubicity: Option<CubicityBounds>,
    pub representation: BoxRepresentation,
    /// Threshold representation when it differs from `representation`.
    pub threshold_representation: Option<BoxRepresentation>,
    pub threshold_certificates: Vec<ThresholdCertificate>,
    pub roberts: RobertsWitness,
    pub independence: Option<IndependenceWitness>,
    pub checks: Vec<Check>,
    pub ok: bool,
}

impl BoxicityReport {
    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn threshold_rep(&self) -> &BoxRepresentation {
        self.threshold_representation.as_ref().unwrap_or(&self.representation)
    }
}
