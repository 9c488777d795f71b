//! The alternating E-series `1 = E_0 <= E_1 <= ...`: odd steps apply
//! `D_{m,n}` to `G/E_{2i}`, even steps apply `D_{n,m}` to `G/E_{2i+1}`, and
//! a step whose quotient is nilpotent jumps straight to `G`.

use serde::Serialize;

use crate::arith;
use crate::dsub::{d_mn_set, CoprimePair};
use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};

pub const DEFAULT_MAX_STEPS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    Nilpotent,
    Frobenius,
    TwoFrobenius,
    NotENilpotent,
    Unclassified,
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Classification::Nilpotent => "nilpotent",
            Classification::Frobenius => "frobenius",
            Classification::TwoFrobenius => "two-frobenius",
            Classification::NotENilpotent => "not-e-nilpotent",
            Classification::Unclassified => "unclassified",
        })
    }
}

/// How term `k` was obtained from term `k - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepKind {
    /// `G/E_{k-1}` was nilpotent, so `E_k = G`.
    NilpotentQuotient,
    /// `E_k/E_{k-1} = D_{m,n}(G/E_{k-1})` (odd `k`).
    Dmn,
    /// `E_k/E_{k-1} = D_{n,m}(G/E_{k-1})` (even `k`).
    Dnm,
}

#[derive(Clone, Debug, Serialize)]
pub struct Step {
    pub kind: StepKind,
    /// `E_k/E_{k-1}` is nilpotent.
    pub increment_nilpotent: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ESeriesResult {
    pub params: CoprimePair,
    pub terms: Vec<Subgroup>,
    /// `steps[k - 1]` produced `terms[k]`.
    pub steps: Vec<Step>,
    pub reached: bool,
    /// `k + 1` for the first `k` with `E_k = G`.
    pub length: Option<usize>,
    /// First index of the constant tail, when the series settled.
    pub stabilized_at: Option<usize>,
    pub classification: Classification,
}

impl ESeriesResult {
    pub fn orders(&self) -> Vec<usize> {
        self.terms.iter().map(Subgroup::order).collect()
    }

    /// `E_k`, extending a settled series by its constant value.
    pub fn term(&self, k: usize) -> Option<&Subgroup> {
        match self.terms.get(k) {
            Some(t) => Some(t),
            None if self.stabilized_at.is_some() => self.terms.last(),
            None => None,
        }
    }
}

/// Runs the recursion until it reaches `G`, settles, or exhausts `max_steps`.
///
/// The series has settled once three consecutive terms agree: both operators
/// then fixed the same quotient. Two equal terms are not enough, since
/// `E_1 = E_0 = 1` is common and the other operator may still grow.
pub fn compute_e_series(g: &Group, pair: CoprimePair, max_steps: usize) -> ESeriesResult {
    let mut terms = vec![g.trivial_subgroup()];
    let mut steps = Vec::new();
    let mut stabilized_at = None;
    if g.order() == 1 {
        stabilized_at = Some(0);
    }
    for k in 1..=max_steps {
        let prev = terms.last().unwrap();
        if g.is_whole(prev) {
            break;
        }
        let (quotient, map) = g.quotient_unchecked(prev);
        let (next, kind) = if quotient.is_nilpotent() {
            (g.whole(), StepKind::NilpotentQuotient)
        } else {
            let (params, kind) = if k % 2 == 1 {
                (pair, StepKind::Dmn)
            } else {
                (pair.swapped(), StepKind::Dnm)
            };
            let d = d_mn_set(&quotient, params);
            (g.pull_back(&map, &d), kind)
        };
        let increment = quotient.subgroup_unchecked(map.image(&next));
        let increment_nilpotent = quotient.induced(&increment).0.is_nilpotent();
        steps.push(Step {
            kind,
            increment_nilpotent,
        });
        terms.push(next);
        let n = terms.len();
        if g.is_whole(&terms[n - 1]) {
            stabilized_at = Some(n - 1);
            break;
        }
        if n >= 3 && terms[n - 1] == terms[n - 2] && terms[n - 2] == terms[n - 3] {
            stabilized_at = Some(first_of_tail(&terms));
            break;
        }
    }
    let reached = g.is_whole(terms.last().unwrap());
    let length = reached.then(|| terms.iter().position(|t| g.is_whole(t)).unwrap() + 1);
    ESeriesResult {
        params: pair,
        classification: classify_length(length),
        terms,
        steps,
        reached,
        length,
        stabilized_at,
    }
}

fn first_of_tail(terms: &[Subgroup]) -> usize {
    let last = terms.last().unwrap();
    terms.iter().position(|t| t == last).unwrap()
}

fn classify_length(length: Option<usize>) -> Classification {
    match length {
        None => Classification::NotENilpotent,
        Some(0..=2) => Classification::Nilpotent,
        Some(3) => Classification::Frobenius,
        Some(4) => Classification::TwoFrobenius,
        Some(_) => Classification::Unclassified,
    }
}

/// Label from the series length: 2 nilpotent, 3 Frobenius, 4 2-Frobenius.
pub fn classify(g: &Group, pair: CoprimePair) -> Classification {
    compute_e_series(g, pair, DEFAULT_MAX_STEPS).classification
}

/// `E_3 = E_4` for a non-nilpotent `G` of order `mn` with `m, n > 1` whose
/// series takes the operator branch at steps 2 to 4.
///
/// A series that already equals `G` at step 3 satisfies `E_3 = E_4 = G`
/// and is accepted; any other nilpotent jump at steps 1 to 4 fails the
/// hypothesis.
pub fn stabilization_check(g: &Group, pair: CoprimePair) -> Result<bool> {
    if g.order() as u64 != pair.product() || pair.m() == 1 || pair.n() == 1 {
        return Err(Error::HypothesisNotMet(format!(
            "needs |G| = mn with m, n > 1 (|G| = {}, m = {}, n = {})",
            g.order(),
            pair.m(),
            pair.n()
        )));
    }
    let series = compute_e_series(g, pair, DEFAULT_MAX_STEPS);
    for (k, step) in series.steps.iter().enumerate().take(4) {
        let index = k + 1;
        if step.kind == StepKind::NilpotentQuotient && index != 3 {
            return Err(Error::HypothesisNotMet(format!(
                "G/E_{} is nilpotent, so step {index} does not apply an operator",
                index - 1
            )));
        }
    }
    match (series.term(3), series.term(4)) {
        (Some(e3), Some(e4)) => Ok(e3 == e4),
        (Some(e3), None) if g.is_whole(e3) => Ok(true),
        _ => Err(Error::HypothesisNotMet("series stopped before E_4".into())),
    }
}

/// All `(m, n)` with `mn = order`, `gcd(m, n) = 1` and `m, n > 1`, in
/// increasing `m`; each unordered split appears in both orders.
pub fn coprime_factorizations(order: u64) -> Vec<CoprimePair> {
    arith::hall_splits(order)
        .into_iter()
        .filter(|&(m, n)| m > 1 && n > 1)
        .map(|(m, n)| CoprimePair::new(m, n).expect("hall splits are coprime"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn pair(m: u64, n: u64) -> CoprimePair {
        CoprimePair::new(m, n).unwrap()
    }

    #[test]
    fn small_examples() {
        let s3 = catalog::build("S3").unwrap();
        let r = compute_e_series(&s3, pair(3, 2), DEFAULT_MAX_STEPS);
        assert_eq!(r.orders(), vec![1, 3, 6]);
        assert_eq!(
            (r.length, r.classification),
            (Some(3), Classification::Frobenius)
        );

        let s4 = catalog::build("S4").unwrap();
        let r = compute_e_series(&s4, pair(8, 3), DEFAULT_MAX_STEPS);
        assert_eq!(r.orders(), vec![1, 4, 12, 24]);
        assert_eq!(r.classification, Classification::TwoFrobenius);
        assert_eq!(
            r.steps.iter().map(|s| s.kind).collect::<Vec<_>>(),
            vec![StepKind::Dmn, StepKind::Dnm, StepKind::NilpotentQuotient]
        );

        let c12 = catalog::build("C12").unwrap();
        let r = compute_e_series(&c12, pair(4, 3), DEFAULT_MAX_STEPS);
        assert_eq!((r.orders(), r.length), (vec![1, 12], Some(2)));
    }

    #[test]
    fn trivial_first_step_does_not_stop_the_series() {
        // D_{2,3}(S3) = 1, and D_{3,2}(S3) = A3 follows
        let s3 = catalog::build("S3").unwrap();
        let r = compute_e_series(&s3, pair(2, 3), DEFAULT_MAX_STEPS);
        assert_eq!(r.orders(), vec![1, 1, 3, 6]);
        assert_eq!(r.length, Some(4));
    }

    #[test]
    fn simple_groups_stay_trivial() {
        let a5 = catalog::build("A5").unwrap();
        for p in coprime_factorizations(60) {
            let r = compute_e_series(&a5, p, DEFAULT_MAX_STEPS);
            assert!(r.terms.iter().all(Subgroup::is_trivial));
            assert!(!r.reached);
            assert_eq!(r.classification, Classification::NotENilpotent);
            assert_eq!(r.stabilized_at, Some(0));
        }
    }

    #[test]
    fn stabilization() {
        let s4 = catalog::build("S4").unwrap();
        assert_eq!(stabilization_check(&s4, pair(8, 3)), Ok(true));
        let c12 = catalog::build("C12").unwrap();
        assert!(matches!(
            stabilization_check(&c12, pair(4, 3)),
            Err(Error::HypothesisNotMet(_))
        ));
    }

    #[test]
    fn factorizations() {
        assert_eq!(coprime_factorizations(6), vec![pair(2, 3), pair(3, 2)]);
        assert_eq!(coprime_factorizations(12), vec![pair(3, 4), pair(4, 3)]);
        assert!(coprime_factorizations(8).is_empty());
        assert_eq!(coprime_factorizations(30).len(), 6);
    }
}
