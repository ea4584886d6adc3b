use std::fmt::Write as _;
use std::path::Path;

use anyhow::{bail, Context, Result};
use zdbox_core::{
    brute_force_boxicity, certify_boolean, certify_zn, class_size_table, factorize, BoxValue, BoxicityReport, Error,
    Label, OracleGuard,
};

use crate::bundle::CertificateBundle;
use crate::edgelist;

/// Text produced by a command and whether every verdict in it passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

pub const GUARD_OVERRIDE_VAR: &str = "ZDBOX_GUARD_OVERRIDE";

fn status(ok: bool) -> &'static str {
    if ok {
        "VERIFIED"
    } else {
        "NOT VERIFIED"
    }
}

fn write_checks(out: &mut String, r: &BoxicityReport) {
    for c in &r.checks {
        let mark = if c.passed { "pass" } else { "FAIL" };
        if c.detail.is_empty() {
            writeln!(out, "  [{mark}] {}", c.name).unwrap();
        } else {
            writeln!(out, "  [{mark}] {}: {}", c.name, c.detail).unwrap();
        }
    }
}

pub fn analyze(n: u64) -> Result<Outcome> {
    if n < 2 {
        bail!("N must be at least 2");
    }
    let r = certify_zn(n)?;
    let fact = factorize(n)?;
    let mut out = String::new();
    writeln!(out, "N = {n} = {fact}").unwrap();
    writeln!(out, "box = {} (case: {}) - {}", r.box_value, r.case.description(), status(r.ok)).unwrap();
    writeln!(out, "case label: {}", r.case).unwrap();
    writeln!(out, "vertices: {}", r.representation.vertices.len()).unwrap();
    writeln!(
        out,
        "representation: {} ({} dimensions)",
        r.representation.construction.name(),
        r.representation.dimension()
    )
    .unwrap();
    writeln!(out, "roberts witness: {} pairs", r.roberts.size()).unwrap();
    writeln!(out, "dim_TH in {}", r.dim_th).unwrap();
    writeln!(out, "dim_COG <= {}", r.dim_cog_upper).unwrap();
    if let Some(c) = &r.cubicity {
        let note = if c.clamped { " (clamped)" } else { "" };
        writeln!(out, "cub in [{}, {}], lower = {}{note}", c.lower_decimal(), c.upper, c.lower_expr).unwrap();
    }
    writeln!(out, "checks:").unwrap();
    write_checks(&mut out, &r);
    Ok(Outcome { text: out, ok: r.ok })
}

fn emit_bundle(r: &BoxicityReport, json: Option<&Path>) -> Result<Outcome> {
    let text = CertificateBundle::from_report(r).to_json();
    match json {
        Some(path) => {
            std::fs::write(path, &text).with_context(|| format!("cannot write {}", path.display()))?;
            let mut out = String::new();
            writeln!(out, "{}: box = {} - {}", r.subject, r.box_value, status(r.ok)).unwrap();
            writeln!(out, "wrote {}", path.display()).unwrap();
            if !r.ok {
                write_checks(&mut out, r);
            }
            Ok(Outcome { text: out, ok: r.ok })
        }
        None => Ok(Outcome { text, ok: r.ok }),
    }
}

pub fn certify(n: u64, json: Option<&Path>) -> Result<Outcome> {
    if n < 2 {
        bail!("N must be at least 2");
    }
    emit_bundle(&certify_zn(n)?, json)
}

pub fn boolean(k: u32, json: Option<&Path>) -> Result<Outcome> {
    if k < 2 {
        bail!("k must be at least 2");
    }
    emit_bundle(&certify_boolean(k)?, json)
}

/// Re-verifies a bundle written by `certify` or `boolean`.
pub fn verify(path: &Path) -> Result<Outcome> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let bundle = CertificateBundle::from_json(&text).with_context(|| format!("{}", path.display()))?;
    let r = bundle.recheck()?;
    let mut out = String::new();
    for (name, passed) in &r.checks {
        writeln!(out, "  [{}] {name}", if *passed { "pass" } else { "FAIL" }).unwrap();
    }
    writeln!(out, "{}", status(r.ok)).unwrap();
    Ok(Outcome { text: out, ok: r.ok })
}

/// Guard settings: defaults, lifted when the override variable is set,
/// then any explicit flags.
pub fn oracle_guard(
    override_var: Option<&str>,
    max_dim: Option<usize>,
    max_nonedges: Option<usize>,
    max_vertices: Option<usize>,
) -> (OracleGuard, bool) {
    let lifted = matches!(override_var, Some(v) if !v.is_empty() && v != "0");
    let mut g = if lifted { OracleGuard::lifted() } else { OracleGuard::default() };
    if let Some(d) = max_dim {
        g.max_dim = d;
    }
    if let Some(m) = max_nonedges {
        g.max_nonedges = m;
    }
    if let Some(v) = max_vertices {
        g.max_vertices = v;
    }
    (g, lifted)
}

pub fn oracle(edges: &Path, guard: &OracleGuard) -> Result<Outcome> {
    let text = std::fs::read_to_string(edges).with_context(|| format!("cannot read {}", edges.display()))?;
    let g = edgelist::parse(&text).with_context(|| format!("{}", edges.display()))?;
    match brute_force_boxicity(&g, guard) {
        Ok(b) => Ok(Outcome { text: format!("boxicity = {b}\n"), ok: true }),
        Err(Error::Resource(r)) => Ok(Outcome { text: format!("stopped: {r}\n"), ok: false }),
        Err(e) => Err(e.into()),
    }
}

pub fn scan(from: u64, to: u64) -> Result<Outcome> {
    if from < 2 || from > to {
        bail!("need 2 <= from <= to");
    }
    let mut out = String::new();
    writeln!(out, "{:>8}  {:<28}  {:>6}  verified", "N", "case", "box").unwrap();
    let mut failed = Vec::new();
    for n in from..=to {
        let r = certify_zn(n)?;
        let b = match r.box_value {
            BoxValue::Exact(v) => v.to_string(),
            other => other.to_string(),
        };
        writeln!(out, "{n:>8}  {:<28}  {b:>6}  {}", r.case.as_str(), if r.ok { "yes" } else { "NO" }).unwrap();
        if !r.ok {
            failed.push(n);
        }
    }
    let rows = to - from + 1;
    writeln!(out, "{rows} rows, {} verified, {} failed", rows - failed.len() as u64, failed.len()).unwrap();
    if !failed.is_empty() {
        let list: Vec<String> = failed.iter().map(u64::to_string).collect();
        writeln!(out, "failed: {}", list.join(", ")).unwrap();
    }
    Ok(Outcome { text: out, ok: failed.is_empty() })
}

pub fn classes(n: u64) -> Result<Outcome> {
    if n < 2 {
        bail!("N must be at least 2");
    }
    let fact = factorize(n)?;
    let table = class_size_table(n)?;
    let members = zdbox_core::reduce_graph(&zdbox_core::build_zn_graph(n)?).class_members;
    let mark_half = fact.is_squarefree() && n % 2 == 0;
    let mut out = String::new();
    writeln!(out, "N = {n} = {fact}: {} classes, {} vertices", table.rows.len(), table.total()).unwrap();
    writeln!(out, "{:>8}  {:>6}  members", "rep", "size").unwrap();
    for (row, m) in table.rows.iter().zip(&members) {
        let list: Vec<String> = m.iter().map(Label::to_string).collect();
        let note =
            if mark_half && row.representative == Label::Residue(n / 2) { "  <- singleton class of N/2" } else { "" };
        writeln!(out, "{:>8}  {:>6}  {{{}}}{note}", row.representative.to_string(), row.size, list.join(", ")).unwrap();
    }
    Ok(Outcome { text: out, ok: true })
}
