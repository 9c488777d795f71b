use std::collections::{HashSet, VecDeque};

use super::{Group, Subgroup};
use crate::error::{Error, Result};

impl Group {
    /// Every subgroup, sorted by order and then by member list.
    ///
    /// Breadth-first join-closure starting from the cyclic subgroups; every
    /// subgroup is a join of cyclic ones, so the search is complete.
    pub fn all_subgroups(&self, cap: usize) -> Result<Vec<Subgroup>> {
        if self.order > cap {
            return Err(Error::CapExceeded {
                what: "all_subgroups",
                order: self.order,
                cap,
            });
        }
        let mut cyclic: Vec<Subgroup> = Vec::new();
        let mut seen_cyclic = HashSet::new();
        for x in self.elements() {
            let c = self.closure_of(&[x]);
            if seen_cyclic.insert(c.clone()) {
                cyclic.push(c);
            }
        }
        Ok(self.join_closure(&cyclic))
    }

    /// Every normal subgroup, sorted by order and then by member list.
    ///
    /// Joins of normal closures of single elements; a normal subgroup is the
    /// join of the normal closures of its members.
    pub fn normal_subgroups(&self, cap: usize) -> Result<Vec<Subgroup>> {
        if self.order > cap {
            return Err(Error::CapExceeded {
                what: "normal_subgroups",
                order: self.order,
                cap,
            });
        }
        let mut seeds: Vec<Subgroup> = Vec::new();
        let mut seen = HashSet::new();
        let mut done = vec![false; self.order];
        for x in self.elements() {
            if done[x as usize] {
                continue;
            }
            // conjugates share a normal closure
            for g in self.elements() {
                done[self.conjugate(g, x) as usize] = true;
            }
            let c = self.normal_closure(&[x]);
            if seen.insert(c.clone()) {
                seeds.push(c);
            }
        }
        Ok(self.join_closure(&seeds))
    }

    /// Subgroups of order `h`, sorted by member list.
    pub fn subgroups_of_order(&self, h: usize, cap: usize) -> Result<Vec<Subgroup>> {
        Ok(self
            .all_subgroups(cap)?
            .into_iter()
            .filter(|s| s.order() == h)
            .collect())
    }

    fn join_closure(&self, seeds: &[Subgroup]) -> Vec<Subgroup> {
        let mut found: HashSet<Subgroup> = HashSet::new();
        let mut queue: VecDeque<Subgroup> = VecDeque::new();
        let trivial = self.trivial_subgroup();
        found.insert(trivial.clone());
        queue.push_back(trivial);
        for s in seeds {
            if found.insert(s.clone()) {
                queue.push_back(s.clone());
            }
        }
        while let Some(s) = queue.pop_front() {
            for c in seeds {
                if c.is_subset(&s) {
                    continue;
                }
                let j = self.join(&s, c);
                if !found.contains(&j) {
                    found.insert(j.clone());
                    queue.push_back(j);
                }
            }
        }
        let mut out: Vec<Subgroup> = found.into_iter().collect();
        out.sort_by(|a, b| {
            a.order()
                .cmp(&b.order())
                .then_with(|| a.members().cmp(b.members()))
        });
        out
    }
}

#[cfg(test)]
mod tests {
    use crate::catalog;
    use crate::group::ElementSet;

    /// Every subset containing the identity that is closed under products.
    fn brute_force_subgroup_count(g: &crate::group::Group) -> usize {
        let n = g.order();
        let others: Vec<u32> = g.elements().filter(|&x| x != g.identity()).collect();
        (0u64..1 << others.len())
            .filter(|bits| {
                let set = ElementSet::new(
                    n,
                    std::iter::once(g.identity()).chain(
                        others
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| bits >> i & 1 == 1)
                            .map(|(_, &x)| x),
                    ),
                );
                g.as_subgroup(&set).is_some()
            })
            .count()
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(
            catalog::build("C6")
                .unwrap()
                .all_subgroups(96)
                .unwrap()
                .len(),
            4
        );
        for (name, count) in [("S3", 6), ("Q8", 6), ("D8", 10), ("V4", 5), ("C2xC4", 8)] {
            let g = catalog::build(name).unwrap();
            assert_eq!(g.all_subgroups(96).unwrap().len(), count, "{name}");
            assert_eq!(brute_force_subgroup_count(&g), count, "{name}");
        }
        assert_eq!(
            catalog::build("S4")
                .unwrap()
                .all_subgroups(96)
                .unwrap()
                .len(),
            30
        );
        assert_eq!(
            catalog::build("A5")
                .unwrap()
                .all_subgroups(96)
                .unwrap()
                .len(),
            59
        );
    }

    #[test]
    fn normal_subgroups_of_s4() {
        let s4 = catalog::build("S4").unwrap();
        let orders: Vec<usize> = s4
            .normal_subgroups(512)
            .unwrap()
            .iter()
            .map(|s| s.order())
            .collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
        let oracle: Vec<_> = s4
            .all_subgroups(96)
            .unwrap()
            .into_iter()
            .filter(|h| s4.elements().all(|g| s4.conjugate_subgroup(g, h) == *h))
            .collect();
        assert_eq!(s4.normal_subgroups(512).unwrap(), oracle);
    }

    #[test]
    fn caps_are_enforced() {
        let a5 = catalog::build("A5").unwrap();
        assert!(a5.all_subgroups(48).is_err());
        assert_eq!(a5.normal_subgroups(512).unwrap().len(), 2);
    }
}
