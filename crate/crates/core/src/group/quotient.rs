use super::{Elem, ElementSet, Group, Subgroup};
use crate::error::{Error, Result};

/// Projection `G -> G/N` recorded alongside a quotient group.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    projection: Vec<Elem>,
    representatives: Vec<Elem>,
    kernel: Subgroup,
}

impl QuotientMap {
    #[inline]
    pub fn project(&self, x: Elem) -> Elem {
        self.projection[x as usize]
    }

    /// Smallest-id element of each coset, indexed by quotient element.
    pub fn representative(&self, coset: Elem) -> Elem {
        self.representatives[coset as usize]
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn image(&self, set: &ElementSet) -> ElementSet {
        ElementSet::new(
            self.representatives.len(),
            set.iter().map(|x| self.project(x)),
        )
    }

    /// Full preimage of a set of cosets.
    pub fn preimage(&self, set: &ElementSet) -> ElementSet {
        ElementSet::new(
            self.projection.len(),
            (0..self.projection.len() as Elem).filter(|&x| set.contains(self.project(x))),
        )
    }
}

impl Group {
    /// The coset group `G/N` with its projection.
    ///
    /// Cosets are numbered by their smallest member, in ascending order, so the
    /// trivial coset `N` is element 0 whenever the identity is element 0.
    pub fn quotient(&self, n: &Subgroup) -> Result<(Group, QuotientMap)> {
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        Ok(self.quotient_unchecked(n))
    }

    pub(crate) fn quotient_unchecked(&self, n: &Subgroup) -> (Group, QuotientMap) {
        const UNSET: Elem = Elem::MAX;
        let mut projection = vec![UNSET; self.order];
        let mut representatives = Vec::with_capacity(self.order / n.order());
        for g in self.elements() {
            if projection[g as usize] != UNSET {
                continue;
            }
            let id = representatives.len() as Elem;
            representatives.push(g);
            for k in n.iter() {
                projection[self.mul(g, k) as usize] = id;
            }
        }
        let q = representatives.len();
        let mut table = vec![0; q * q];
        for (a, &ra) in representatives.iter().enumerate() {
            for (b, &rb) in representatives.iter().enumerate() {
                table[a * q + b] = projection[self.mul(ra, rb) as usize];
            }
        }
        let labels = representatives
            .iter()
            .map(|&r| format!("{}N", self.label(r)))
            .collect();
        let identity = projection[self.identity as usize];
        let g = Group::from_trusted_table(table, identity, labels)
            .with_name(format!("{}/{}", self.display_name(), n.order()))
            .with_source(format!(
                "quotient of {} by a normal subgroup of order {}",
                self.display_name(),
                n.order()
            ));
        let map = QuotientMap {
            projection,
            representatives,
            kernel: n.clone(),
        };
        (g, map)
    }

    /// Preimage of a subgroup of a quotient, as a subgroup of `self`.
    pub fn pull_back(&self, map: &QuotientMap, h: &ElementSet) -> Subgroup {
        self.subgroup_unchecked(map.preimage(h))
    }
}
