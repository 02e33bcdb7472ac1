//! Human-readable renderings of analyses, family reports and verification runs.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::family::FamilyReport;
use crate::hilbert::HilbertData;
use crate::stretched::{Analysis, CheckStatus, ClassificationReport};
use crate::verification::CriterionOutcome;

/// Serialized form of a single-ideal analysis.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalyzeOutput {
    pub semigroup: Vec<u32>,
    /// Minimal generators (valuations) of the ideal.
    pub ideal: Vec<u64>,
    pub hilbert: HilbertData,
    pub report: ClassificationReport,
}

fn joined<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn set<T: ToString>(v: &[T]) -> String {
    format!("{{{}}}", joined(v, ","))
}

fn list<T: ToString>(v: &[T]) -> String {
    format!("[{}]", joined(v, ", "))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn render_classification(s: &mut String, rep: &ClassificationReport) {
    let _ = writeln!(
        s,
        "e0 = {}, e1 = {}, l(A/I) = {}",
        rep.e0, rep.e1, rep.colength
    );
    let _ = writeln!(s, "h-polynomial      {}", list(&rep.h_poly));
    let _ = writeln!(
        s,
        "k = {}, r = {}, nilpotency n = {}",
        rep.k, rep.r, rep.n_nilp
    );
    let _ = writeln!(
        s,
        "l(I^(n+1)/QI^n)   {} for n = 1..=r",
        list(&rep.quotient_lengths)
    );
    let _ = writeln!(s, "Λ                 {}", set(&rep.lambda));
    let _ = writeln!(s, "rank e1-e0+l(A/I) {}", rep.rank);
    let _ = writeln!(
        s,
        "stretched (w.r.t. monomial reduction): {}",
        yes_no(rep.stretched)
    );
    let _ = writeln!(s, "G Cohen-Macaulay: {}", yes_no(rep.g_cm));
    if let Some(p) = &rep.pattern {
        let _ = writeln!(s, "pattern: {p}");
    }
    let (pass, na): (Vec<_>, Vec<_>) = rep
        .checks
        .iter()
        .filter(|c| c.status != CheckStatus::Fail)
        .partition(|c| c.status == CheckStatus::Pass);
    let _ = writeln!(s, "checks: {} pass, {} n/a", pass.len(), na.len());
    for c in rep.checks.iter().filter(|c| c.status == CheckStatus::Fail) {
        let _ = writeln!(s, "  FAIL {}", c.name);
    }
}

pub fn render_analysis(out: &AnalyzeOutput) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "semigroup <{}>", joined(&out.semigroup, ","));
    let _ = writeln!(s, "ideal gens={}", joined(&out.ideal, ","));
    let shown = out.hilbert.hf.len().min(13);
    let _ = writeln!(
        s,
        "HF(0..{})         {}",
        shown - 1,
        list(&out.hilbert.hf[..shown])
    );
    render_classification(&mut s, &out.report);
    s
}

impl AnalyzeOutput {
    pub fn from_analysis(semigroup: Vec<u32>, ideal: Vec<u64>, a: Analysis) -> Self {
        AnalyzeOutput {
            semigroup,
            ideal,
            hilbert: a.hilbert,
            report: a.report,
        }
    }
}

pub fn render_family(rep: &FamilyReport) -> String {
    let mut s = String::new();
    let p = &rep.params;
    let table: Vec<String> = p.b_table.iter().map(|(n, v)| format!("b{n}={v}")).collect();
    let _ = writeln!(
        s,
        "b={}, e={}, ell={}, {}",
        p.b,
        p.e,
        p.ell,
        table.join(", ")
    );
    let _ = writeln!(s, "semigroup <{}>", joined(&rep.semigroup, ","));
    let _ = writeln!(s, "{:<20} {:>14} {:>14}", "", "predicted", "computed");
    let row = |s: &mut String, name: &str, a: String, b: String| {
        let _ = writeln!(s, "{name:<20} {a:>14} {b:>14}");
    };
    let (x, y) = (&rep.predicted, &rep.computed);
    row(&mut s, "k", x.k.to_string(), y.k.to_string());
    row(&mut s, "r", x.r.to_string(), y.r.to_string());
    row(&mut s, "Λ", set(&x.lambda), set(&y.lambda));
    row(
        &mut s,
        "HF constant",
        x.hf_constant.to_string(),
        y.hf_constant.to_string(),
    );
    row(
        &mut s,
        "type",
        x.semigroup_type.to_string(),
        y.semigroup_type.to_string(),
    );
    row(
        &mut s,
        "embedding dimension",
        x.embedding_dimension.to_string(),
        y.embedding_dimension.to_string(),
    );
    row(
        &mut s,
        "G Cohen-Macaulay",
        yes_no(x.g_cm).into(),
        yes_no(y.g_cm).into(),
    );
    for c in &rep.assertions {
        let _ = writeln!(s, "  {:<4} {}", c.status, c.name);
    }
    let _ = writeln!(s, "{}", if rep.passed() { "pass" } else { "FAIL" });
    s
}

pub fn render_verification(outcomes: &[CriterionOutcome]) -> String {
    let mut s = String::new();
    for o in outcomes {
        let _ = writeln!(s, "{}", o.line());
        for n in &o.notes {
            let _ = writeln!(s, "    {n}");
        }
        for f in o.failures.iter().take(20) {
            let _ = writeln!(s, "    failure: {f}");
        }
        if o.failures.len() > 20 {
            let _ = writeln!(s, "    … {} more failures", o.failures.len() - 20);
        }
    }
    s
}
