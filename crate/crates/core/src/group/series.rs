use serde::Serialize;

use super::{Elem, Group, Subgroup};
use crate::arith;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeriesKind {
    UpperCentral,
    Derived,
    Fitting,
}

/// A chain of normal subgroups in the order it was computed.
///
/// Upper central and Fitting series ascend from the trivial subgroup; the
/// derived series descends from `G`. Each chain stops at its first repeat.
#[derive(Clone, Debug, Serialize)]
pub struct SeriesResult {
    pub kind: SeriesKind,
    pub terms: Vec<Subgroup>,
    /// The chain ended at its natural endpoint: `G` for the ascending kinds,
    /// the trivial subgroup for the derived series.
    pub reached_end: bool,
}

impl SeriesResult {
    pub fn orders(&self) -> Vec<usize> {
        self.terms.iter().map(Subgroup::order).collect()
    }
}

impl Group {
    /// `Z_0 = 1`, `Z_{i+1}/Z_i = Z(G/Z_i)`.
    pub fn upper_central_series(&self) -> SeriesResult {
        let mut terms = vec![self.trivial_subgroup()];
        loop {
            let last = terms.last().unwrap();
            if self.is_whole(last) {
                break;
            }
            let next = self.next_central_term(last);
            if next.order() == last.order() {
                break;
            }
            terms.push(next);
        }
        let reached_end = self.is_whole(terms.last().unwrap());
        SeriesResult {
            kind: SeriesKind::UpperCentral,
            terms,
            reached_end,
        }
    }

    /// `{x : [x, g] in z for every generator g}` for normal `z`.
    fn next_central_term(&self, z: &Subgroup) -> Subgroup {
        let set = super::ElementSet::new(
            self.order,
            self.elements()
                .filter(|&x| self.gens.iter().all(|&g| z.contains(self.commutator(x, g)))),
        );
        self.subgroup_unchecked(set)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.upper_central_series().reached_end
    }

    /// `G >= G' >= G'' >= ...`
    pub fn derived_series(&self) -> SeriesResult {
        let mut terms = vec![self.whole()];
        loop {
            let last = terms.last().unwrap();
            if last.is_trivial() {
                break;
            }
            let next = self.commutator_subgroup(last, last);
            if next.order() == last.order() {
                break;
            }
            terms.push(next);
        }
        let reached_end = terms.last().unwrap().is_trivial();
        SeriesResult {
            kind: SeriesKind::Derived,
            terms,
            reached_end,
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().reached_end
    }

    /// A Sylow `p`-subgroup grown through normalizers: start from the
    /// smallest-id element of order `p`, then repeatedly adjoin the
    /// smallest-id `p`-element of `N(P)` outside `P`.
    ///
    /// Returns the trivial subgroup when `p` does not divide `|G|`.
    pub fn sylow(&self, p: u64) -> Subgroup {
        let target = arith::p_part(self.order as u64, p) as usize;
        let is_p_elem = |x: Elem| arith::p_part(self.element_order(x), p) == self.element_order(x);
        let mut current = self.trivial_subgroup();
        while current.order() < target {
            let normalizer = self.normalizer(&current);
            let next = normalizer
                .iter()
                .find(|&x| !current.contains(x) && is_p_elem(x))
                .expect("a proper p-subgroup has p-elements in its normalizer outside it");
            current = self.closure_from(&current, &[next]);
        }
        current
    }

    /// `O_p(G)`: the intersection of all conjugates of a Sylow `p`-subgroup.
    pub fn p_core(&self, p: u64) -> Subgroup {
        let sylow = self.sylow(p);
        if sylow.is_trivial() || self.is_normal(&sylow) {
            return sylow;
        }
        let mut core = sylow.as_set().clone();
        for g in self.elements() {
            let conj = self.conjugate_subgroup(g, &sylow);
            core = core.intersection(&conj);
            if core.len() == 1 {
                break;
            }
        }
        self.subgroup_unchecked(core)
    }

    /// Largest normal nilpotent subgroup, the product of the `p`-cores.
    pub fn fitting(&self) -> Subgroup {
        arith::prime_divisors(self.order as u64)
            .into_iter()
            .map(|p| self.p_core(p))
            .fold(self.trivial_subgroup(), |acc, core| {
                self.product_of_normal(&acc, &core)
            })
    }

    /// `F_0 = 1`, `F_{i+1}/F_i = F(G/F_i)`; stops at `G` or at a repeat.
    pub fn fitting_series(&self) -> SeriesResult {
        let mut terms = vec![self.trivial_subgroup()];
        loop {
            let last = terms.last().unwrap();
            if self.is_whole(last) {
                break;
            }
            let (quotient, map) = self.quotient_unchecked(last);
            let next = self.pull_back(&map, quotient.fitting().as_set());
            if next.order() == last.order() {
                break;
            }
            terms.push(next);
        }
        let reached_end = self.is_whole(terms.last().unwrap());
        SeriesResult {
            kind: SeriesKind::Fitting,
            terms,
            reached_end,
        }
    }

    /// Least `h` with `F_h = G`; `None` for non-solvable groups. The trivial
    /// group has height 0.
    pub fn fitting_height(&self) -> Option<usize> {
        let series = self.fitting_series();
        series.reached_end.then(|| series.terms.len() - 1)
    }
}

#[cfg(test)]
mod tests {
    use crate::catalog;

    #[test]
    fn nilpotency_and_solvability() {
        assert!(catalog::build("C12").unwrap().is_nilpotent());
        assert!(catalog::build("Q8").unwrap().is_nilpotent());
        let s3 = catalog::build("S3").unwrap();
        assert!(!s3.is_nilpotent());
        assert_eq!(s3.upper_central_series().orders(), vec![1]);
        assert!(catalog::build("S4").unwrap().is_solvable());
        assert!(!catalog::build("A5").unwrap().is_solvable());
        assert_eq!(
            catalog::build("S4").unwrap().derived_series().orders(),
            vec![24, 12, 4, 1]
        );
        assert_eq!(
            catalog::build("D16")
                .unwrap()
                .upper_central_series()
                .orders(),
            vec![1, 2, 4, 16]
        );
    }

    #[test]
    fn sylow_orders() {
        let s4 = catalog::build("S4").unwrap();
        assert_eq!(s4.sylow(2).order(), 8);
        assert_eq!(s4.sylow(3).order(), 3);
        assert!(s4.sylow(5).is_trivial());
        let c12 = catalog::build("C12").unwrap();
        let p = c12.sylow(2);
        assert_eq!(p.order(), 4);
        assert!(p.iter().all(|x| 4 % c12.element_order(x) == 0));
        assert_eq!(catalog::build("A5").unwrap().sylow(2).order(), 4);
    }

    #[test]
    fn fitting_subgroups() {
        let s3 = catalog::build("S3").unwrap();
        assert_eq!(s3.fitting().order(), 3);
        assert_eq!(s3.fitting_height(), Some(2));
        let s4 = catalog::build("S4").unwrap();
        assert_eq!(s4.fitting().order(), 4);
        assert_eq!(s4.fitting_series().orders(), vec![1, 4, 12, 24]);
        assert_eq!(s4.fitting_height(), Some(3));
        assert_eq!(catalog::build("Q8").unwrap().fitting_height(), Some(1));
        assert_eq!(catalog::build("A5").unwrap().fitting_height(), None);
        assert_eq!(catalog::build("C1").unwrap().fitting_height(), Some(0));
    }
}
