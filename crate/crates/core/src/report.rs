//! Command reports: one JSON document or one text rendering per invocation,
//! both built from the same view structs.

use std::fmt::Write as _;
use std::io::Write;

use serde::Serialize;

use crate::catalog::CatalogEntry;
use crate::dsub::{CoprimePair, DKind, DResult};
use crate::eseries::{Classification, ESeriesResult, StepKind};
use crate::group::{Elem, ElementSet, Group};
use crate::structure::{FrobeniusWitness, TwoFrobeniusWitness};
use crate::verify::{Caps, Outcome, SuiteReport};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, Serialize)]
pub struct GroupInfo {
    pub name: String,
    pub order: usize,
    pub source: String,
}

impl GroupInfo {
    pub fn of(g: &Group) -> Self {
        GroupInfo {
            name: g.display_name(),
            order: g.order(),
            source: g.source().to_string(),
        }
    }
}

/// Members of a set as ids and labels.
#[derive(Clone, Debug, Serialize)]
pub struct SetView {
    pub order: usize,
    pub members: Vec<Elem>,
    pub labels: Vec<String>,
}

impl SetView {
    pub fn new(g: &Group, set: &ElementSet) -> Self {
        SetView {
            order: set.len(),
            members: set.members().to_vec(),
            labels: set.iter().map(|x| g.label(x).to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DView {
    pub kind: DKind,
    pub m: u64,
    pub n: Option<u64>,
    #[serde(flatten)]
    pub set: SetView,
    pub is_subgroup: bool,
    pub is_nilpotent: Option<bool>,
}

impl DView {
    pub fn new(g: &Group, d: &DResult) -> Self {
        DView {
            kind: d.kind,
            m: d.m,
            n: d.n,
            set: SetView::new(g, &d.members),
            is_subgroup: d.is_subgroup,
            is_nilpotent: d.is_nilpotent,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DsubView {
    pub l_m: DView,
    pub d_m: DView,
    pub d_mn: DView,
}

#[derive(Clone, Debug, Serialize)]
pub struct StepView {
    pub index: usize,
    pub kind: StepKind,
    pub increment_nilpotent: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ESeriesView {
    pub orders: Vec<usize>,
    pub terms: Vec<Vec<Elem>>,
    pub steps: Vec<StepView>,
    pub reached: bool,
    pub length: Option<usize>,
    pub stabilized_at: Option<usize>,
    pub classification: Classification,
}

impl ESeriesView {
    pub fn new(r: &ESeriesResult) -> Self {
        ESeriesView {
            orders: r.orders(),
            terms: r.terms.iter().map(|t| t.members().to_vec()).collect(),
            steps: r
                .steps
                .iter()
                .enumerate()
                .map(|(i, s)| StepView {
                    index: i + 1,
                    kind: s.kind,
                    increment_nilpotent: s.increment_nilpotent,
                })
                .collect(),
            reached: r.reached,
            length: r.length,
            stabilized_at: r.stabilized_at,
            classification: r.classification,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FrobeniusView {
    pub kernel: Vec<Elem>,
    pub complement: Option<Vec<Elem>>,
    pub fixed_point_free_checked: bool,
}

impl FrobeniusView {
    pub fn new(w: &FrobeniusWitness) -> Self {
        FrobeniusView {
            kernel: w.kernel.members().to_vec(),
            complement: w.complement.as_ref().map(|h| h.members().to_vec()),
            fixed_point_free_checked: w.fixed_point_free_checked,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TwoFrobeniusView {
    pub k: Vec<Elem>,
    pub l: Vec<Elem>,
}

impl TwoFrobeniusView {
    pub fn new(w: &TwoFrobeniusWitness) -> Self {
        TwoFrobeniusView {
            k: w.k.members().to_vec(),
            l: w.l.members().to_vec(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassifyView {
    pub classification: Classification,
    pub length: Option<usize>,
    pub nilpotent: bool,
    pub frobenius: Option<FrobeniusView>,
    pub two_frobenius: Option<TwoFrobeniusView>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifySummary {
    pub suites: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub failing_suites: Vec<String>,
    pub all_pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyView {
    pub caps: Caps,
    pub corpus_size: usize,
    pub summary: VerifySummary,
    pub suites: Vec<SuiteReport>,
}

impl VerifyView {
    pub fn new(caps: Caps, corpus_size: usize, suites: Vec<SuiteReport>) -> Self {
        let failing_suites: Vec<String> = suites
            .iter()
            .filter(|s| s.counts_as_failure())
            .map(|s| s.suite_id.clone())
            .collect();
        let summary = VerifySummary {
            suites: suites.len(),
            passed: suites.iter().map(|s| s.passed).sum(),
            failed: suites.iter().map(|s| s.failed).sum(),
            skipped: suites.iter().map(|s| s.skipped).sum(),
            all_pass: failing_suites.is_empty(),
            failing_suites,
        };
        VerifyView {
            caps,
            corpus_size,
            summary,
            suites,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogRow {
    pub name: String,
    pub order: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogView {
    pub entries: Vec<CatalogRow>,
}

impl CatalogView {
    pub fn new(entries: &[CatalogEntry]) -> Self {
        CatalogView {
            entries: entries
                .iter()
                .map(|e| CatalogRow {
                    name: e.name.clone(),
                    order: e.expected_order,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum ResultView {
    Dsub(DsubView),
    ESeries(ESeriesView),
    Classify(ClassifyView),
    Verify(VerifyView),
    Catalog(CatalogView),
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub group: Option<GroupInfo>,
    pub params: Option<CoprimePair>,
    pub result: ResultView,
    pub version: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl Report {
    pub fn new(
        command: &str,
        group: Option<&Group>,
        params: Option<CoprimePair>,
        result: ResultView,
    ) -> Self {
        Report {
            command: command.to_string(),
            group: group.map(GroupInfo::of),
            params,
            result,
            version: VERSION.to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(g) = &self.group {
            let _ = writeln!(out, "group {} (order {}, {})", g.name, g.order, g.source);
        }
        if let Some(p) = &self.params {
            let _ = writeln!(out, "params m={} n={}", p.m(), p.n());
        }
        match &self.result {
            ResultView::Dsub(v) => {
                for d in [&v.l_m, &v.d_m, &v.d_mn] {
                    dview_text(&mut out, d);
                }
            }
            ResultView::ESeries(v) => eseries_text(&mut out, v),
            ResultView::Classify(v) => classify_text(&mut out, v),
            ResultView::Verify(v) => verify_text(&mut out, v),
            ResultView::Catalog(v) => {
                for e in &v.entries {
                    let _ = writeln!(out, "{:<12} {:>5}", e.name, e.order);
                }
            }
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json(),
        }
    }

    pub fn emit(&self, format: Format, sink: &mut dyn Write) -> std::io::Result<()> {
        sink.write_all(self.render(format).as_bytes())?;
        sink.flush()
    }
}

fn ids(members: &[Elem]) -> String {
    let parts: Vec<String> = members.iter().map(Elem::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn opt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn dview_text(out: &mut String, d: &DView) {
    let name = match (d.kind, d.n) {
        (DKind::LM, _) => format!("L_{}", d.m),
        (_, Some(n)) => format!("D_{{{},{}}}", d.m, n),
        _ => format!("D_{}", d.m),
    };
    let _ = writeln!(
        out,
        "{name}: order {}, subgroup={}, nilpotent={}",
        d.set.order,
        d.is_subgroup,
        opt(d.is_nilpotent)
    );
    let _ = writeln!(out, "  ids    {}", ids(&d.set.members));
    let _ = writeln!(out, "  labels {}", d.set.labels.join(", "));
}

fn eseries_text(out: &mut String, v: &ESeriesView) {
    for (k, term) in v.terms.iter().enumerate() {
        let via = match k {
            0 => "start".to_string(),
            _ => format!("{:?}", v.steps[k - 1].kind).to_lowercase(),
        };
        let _ = writeln!(out, "E_{k}: order {:>4} ({via}) {}", v.orders[k], ids(term));
    }
    let _ = writeln!(
        out,
        "reached={} length={} stabilized_at={} classification={}",
        v.reached,
        opt(v.length),
        opt(v.stabilized_at),
        v.classification
    );
}

fn classify_text(out: &mut String, v: &ClassifyView) {
    let _ = writeln!(
        out,
        "classification={} length={} nilpotent={}",
        v.classification,
        opt(v.length),
        v.nilpotent
    );
    if let Some(f) = &v.frobenius {
        let _ = writeln!(out, "frobenius kernel {}", ids(&f.kernel));
        if let Some(h) = &f.complement {
            let _ = writeln!(
                out,
                "frobenius complement {} fixed_point_free={}",
                ids(h),
                f.fixed_point_free_checked
            );
        }
    }
    if let Some(t) = &v.two_frobenius {
        let _ = writeln!(out, "two-frobenius K {} L {}", ids(&t.k), ids(&t.l));
    }
}

fn verify_text(out: &mut String, v: &VerifyView) {
    let _ = writeln!(
        out,
        "corpus {} groups, max order {}, subgroup cap {}",
        v.corpus_size, v.caps.max_order, v.caps.subgroup_cap
    );
    for s in &v.suites {
        let verdict = match (s.has_failures(), s.informational) {
            (false, _) => "PASS",
            (true, true) => "INFO",
            (true, false) => "FAIL",
        };
        let _ = writeln!(
            out,
            "{verdict} {:<32} pass {:>5} fail {:>4} skip {:>5} ({:.2?})",
            s.suite_id, s.passed, s.failed, s.skipped, s.elapsed
        );
        for o in s.outcomes.iter() {
            if let Outcome::Fail { witness } = &o.outcome {
                let _ = writeln!(out, "    {}: {}", o.instance.label(), witness.detail);
                if !witness.elements.is_empty() {
                    let _ = writeln!(out, "      elements {}", ids(&witness.elements));
                }
                for h in &witness.subgroups {
                    let _ = writeln!(out, "      subgroup {}", ids(h));
                }
            }
        }
    }
    let m = &v.summary;
    let _ = writeln!(
        out,
        "{} suites: {} passed, {} failed, {} skipped instances; {}",
        m.suites,
        m.passed,
        m.failed,
        m.skipped,
        if m.all_pass {
            "all pass".to_string()
        } else {
            format!("failing: {}", m.failing_suites.join(", "))
        }
    );
}
