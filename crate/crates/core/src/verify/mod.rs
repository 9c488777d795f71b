//! Property suites evaluated over a catalog corpus and a parameter sweep.
//!
//! A suite maps each instance (a group, sometimes a second group, and the
//! parameters) to pass, fail with a replayable witness, or skip with the
//! unmet hypothesis. Instances run in parallel; reports keep scope order.

mod suites;

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::arith;
use crate::catalog::{self, CatalogEntry};
use crate::dsub::CoprimePair;
use crate::error::{Error, Result};
use crate::eseries::coprime_factorizations;
use crate::group::{Elem, Group, Limits};

/// Size limits for a verification run.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Caps {
    /// Largest group order evaluated at all.
    pub max_order: usize,
    /// Largest group order for suites that enumerate every subgroup.
    pub subgroup_cap: usize,
    pub limits: Limits,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_order: 200,
            subgroup_cap: 48,
            limits: Limits::default(),
        }
    }
}

/// How a suite builds its instances from the corpus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Scope {
    /// One instance per group.
    Groups,
    /// `(G, m)` for every divisor `m` of `|G|`.
    Divisors,
    /// `(G, m, n)` for every coprime split `mn = |G|` with `m, n > 1`.
    Factorizations,
    /// `(G, m, n)` for every coprime split `mn = exp(G)`.
    ExponentSplits,
    /// `(G, H, m, n)` for corpus pairs of equal exponent, `mn` that exponent.
    ProductPairs,
    /// Factorizations restricted to the listed group names.
    Named(&'static [&'static str]),
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct SuiteDescriptor {
    pub id: &'static str,
    pub statement: &'static str,
    /// Quantifies over all subgroups, so it honors the subgroup cap.
    pub subgroup_capped: bool,
    /// Reported but excluded from the aggregate exit status.
    pub informational: bool,
    #[serde(skip)]
    scope: Scope,
    #[serde(skip)]
    check: fn(&Case) -> Result<Outcome>,
}

/// One point of a suite's scope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub group: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub second: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
}

impl Instance {
    pub fn new(group: impl Into<String>, m: Option<u64>, n: Option<u64>) -> Self {
        Instance {
            group: group.into(),
            second: None,
            m,
            n,
        }
    }

    pub fn label(&self) -> String {
        let mut s = self.group.clone();
        if let Some(h) = &self.second {
            s = format!("{s} & {h}");
        }
        match (self.m, self.n) {
            (Some(m), Some(n)) => format!("{s} (m={m}, n={n})"),
            (Some(m), None) => format!("{s} (m={m})"),
            _ => s,
        }
    }
}

/// Concrete data that reproduces a violation, in element ids of the
/// instance group.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub detail: String,
    pub elements: Vec<Elem>,
    pub subgroups: Vec<Vec<Elem>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail { witness: Witness },
    Skip { reason: String },
}

impl Outcome {
    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail { .. })
    }

    pub fn is_skip(&self) -> bool {
        matches!(self, Outcome::Skip { .. })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceOutcome {
    #[serde(flatten)]
    pub instance: Instance,
    #[serde(flatten)]
    pub outcome: Outcome,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite_id: String,
    pub informational: bool,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub outcomes: Vec<InstanceOutcome>,
    /// Wall time; kept out of JSON so reports are reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn has_failures(&self) -> bool {
        self.failed > 0
    }

    /// Failures that count toward the exit status.
    pub fn counts_as_failure(&self) -> bool {
        !self.informational && self.has_failures()
    }
}

/// Inputs of a single check.
pub(crate) struct Case<'a> {
    pub g: &'a Group,
    pub h: Option<&'a Group>,
    pub m: Option<u64>,
    pub n: Option<u64>,
    pub caps: &'a Caps,
}

impl Case<'_> {
    pub fn pair(&self) -> CoprimePair {
        CoprimePair::new(
            self.m.expect("suite needs m"),
            self.n.expect("suite needs n"),
        )
        .expect("scope yields coprime pairs")
    }
}

pub fn list_suites() -> &'static [SuiteDescriptor] {
    suites::SUITES
}

pub fn descriptor(id: &str) -> Result<&'static SuiteDescriptor> {
    list_suites()
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::UnknownSuite(id.to_string()))
}

/// Corpus groups built once and shared by every suite of a run.
pub struct Workspace {
    entries: Vec<CatalogEntry>,
    groups: HashMap<String, Group>,
}

impl Workspace {
    pub fn new(corpus: &[CatalogEntry]) -> Result<Self> {
        let built: Vec<(String, Group)> = corpus
            .par_iter()
            .map(|e| e.build().map(|g| (e.name.clone(), g)))
            .collect::<Result<_>>()?;
        Ok(Workspace {
            entries: corpus.to_vec(),
            groups: built.into_iter().collect(),
        })
    }

    fn group(&self, name: &str) -> Result<std::borrow::Cow<'_, Group>> {
        match self.groups.get(name) {
            Some(g) => Ok(std::borrow::Cow::Borrowed(g)),
            None => catalog::build(name).map(std::borrow::Cow::Owned),
        }
    }

    fn instances(&self, scope: Scope, caps: &Caps) -> Vec<Instance> {
        let mut out = Vec::new();
        let fits: Vec<&CatalogEntry> = self
            .entries
            .iter()
            .filter(|e| e.expected_order <= caps.max_order)
            .collect();
        let exponent = |e: &CatalogEntry| self.groups[&e.name].exponent();
        match scope {
            Scope::Groups => out.extend(fits.iter().map(|e| Instance::new(&e.name, None, None))),
            Scope::Divisors => {
                for e in &fits {
                    for m in arith::divisors(e.expected_order as u64) {
                        out.push(Instance::new(&e.name, Some(m), None));
                    }
                }
            }
            Scope::Factorizations => {
                for e in &fits {
                    for p in coprime_factorizations(e.expected_order as u64) {
                        out.push(Instance::new(&e.name, Some(p.m()), Some(p.n())));
                    }
                }
            }
            Scope::Named(names) => {
                for e in fits.iter().filter(|e| names.contains(&e.name.as_str())) {
                    for p in coprime_factorizations(e.expected_order as u64) {
                        out.push(Instance::new(&e.name, Some(p.m()), Some(p.n())));
                    }
                }
            }
            Scope::ExponentSplits => {
                for e in &fits {
                    for (m, n) in arith::hall_splits(exponent(e)) {
                        out.push(Instance::new(&e.name, Some(m), Some(n)));
                    }
                }
            }
            Scope::ProductPairs => {
                for (i, a) in fits.iter().enumerate() {
                    for b in &fits[i..] {
                        if a.expected_order * b.expected_order > caps.max_order
                            || exponent(a) != exponent(b)
                        {
                            continue;
                        }
                        for (m, n) in arith::hall_splits(exponent(a)) {
                            out.push(Instance {
                                group: a.name.clone(),
                                second: Some(b.name.clone()),
                                m: Some(m),
                                n: Some(n),
                            });
                        }
                    }
                }
            }
        }
        out
    }

    pub fn run_suite(&self, id: &str, caps: &Caps) -> Result<SuiteReport> {
        let suite = descriptor(id)?;
        let start = Instant::now();
        let instances = self.instances(suite.scope, caps);
        let outcomes: Vec<InstanceOutcome> = instances
            .into_par_iter()
            .map(|instance| {
                let outcome = self.evaluate(suite, &instance, caps);
                InstanceOutcome { instance, outcome }
            })
            .collect();
        let count = |f: fn(&Outcome) -> bool| outcomes.iter().filter(|o| f(&o.outcome)).count();
        Ok(SuiteReport {
            suite_id: suite.id.to_string(),
            informational: suite.informational,
            passed: count(|o| *o == Outcome::Pass),
            failed: count(Outcome::is_fail),
            skipped: count(Outcome::is_skip),
            outcomes,
            elapsed: start.elapsed(),
        })
    }

    pub fn run_all(&self, caps: &Caps) -> Vec<SuiteReport> {
        list_suites()
            .par_iter()
            .map(|s| self.run_suite(s.id, caps).expect("listed suites exist"))
            .collect()
    }

    fn evaluate(&self, suite: &SuiteDescriptor, instance: &Instance, caps: &Caps) -> Outcome {
        let g = match self.group(&instance.group) {
            Ok(g) => g,
            Err(e) => {
                return Outcome::Skip {
                    reason: e.to_string(),
                }
            }
        };
        let h = match instance
            .second
            .as_deref()
            .map(|name| self.group(name))
            .transpose()
        {
            Ok(h) => h,
            Err(e) => {
                return Outcome::Skip {
                    reason: e.to_string(),
                }
            }
        };
        if g.order() > caps.max_order {
            return Outcome::Skip {
                reason: format!(
                    "cap-exceeded: |G| = {} > max order {}",
                    g.order(),
                    caps.max_order
                ),
            };
        }
        if suite.subgroup_capped && g.order() > caps.subgroup_cap {
            return Outcome::Skip {
                reason: format!(
                    "cap-exceeded: |G| = {} > subgroup cap {}",
                    g.order(),
                    caps.subgroup_cap
                ),
            };
        }
        let case = Case {
            g: &g,
            h: h.as_deref(),
            m: instance.m,
            n: instance.n,
            caps,
        };
        match (suite.check)(&case) {
            Ok(outcome) => outcome,
            Err(e @ Error::CapExceeded { .. }) => Outcome::Skip {
                reason: format!("cap-exceeded: {e}"),
            },
            Err(Error::HypothesisNotMet(reason)) => Outcome::Skip { reason },
            Err(e) => Outcome::Fail {
                witness: Witness {
                    detail: format!("unexpected error: {e}"),
                    ..Witness::default()
                },
            },
        }
    }
}

/// Runs one suite over `corpus`.
pub fn run_suite(id: &str, corpus: &[CatalogEntry], caps: &Caps) -> Result<SuiteReport> {
    descriptor(id)?;
    Workspace::new(corpus)?.run_suite(id, caps)
}

/// Runs every suite over `corpus`, in listing order.
pub fn run_all(corpus: &[CatalogEntry], caps: &Caps) -> Result<Vec<SuiteReport>> {
    Ok(Workspace::new(corpus)?.run_all(caps))
}

/// Re-evaluates a single instance, e.g. to replay a failure witness.
pub fn run_instance(id: &str, instance: &Instance, caps: &Caps) -> Result<Outcome> {
    let suite = descriptor(id)?;
    Ok(Workspace::new(&[])?.evaluate(suite, instance, caps))
}

/// Any failure outside informational suites.
pub fn any_failure(reports: &[SuiteReport]) -> bool {
    reports.iter().any(SuiteReport::counts_as_failure)
}
