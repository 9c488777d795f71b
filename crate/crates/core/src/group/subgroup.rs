use std::collections::VecDeque;

use serde::Serialize;

use super::{Elem, Group};

/// A set of element ids of one parent group, kept sorted with a membership mask.
#[derive(Clone, Debug)]
pub struct ElementSet {
    members: Vec<Elem>,
    mask: Vec<bool>,
}

impl PartialEq for ElementSet {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for ElementSet {}

impl std::hash::Hash for ElementSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl Serialize for ElementSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.members.serialize(s)
    }
}

impl ElementSet {
    /// Builds a set inside a group of `parent_order` elements. Duplicates are dropped.
    pub fn new(parent_order: usize, items: impl IntoIterator<Item = Elem>) -> Self {
        let mut mask = vec![false; parent_order];
        for x in items {
            mask[x as usize] = true;
        }
        Self::from_mask(mask)
    }

    pub fn from_mask(mask: Vec<bool>) -> Self {
        let members = mask
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i as Elem))
            .collect();
        ElementSet { members, mask }
    }

    pub fn empty(parent_order: usize) -> Self {
        ElementSet {
            members: Vec::new(),
            mask: vec![false; parent_order],
        }
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.mask[x as usize]
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn parent_order(&self) -> usize {
        self.mask.len()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        ElementSet::new(
            self.parent_order(),
            self.members.iter().copied().filter(|&x| other.contains(x)),
        )
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.iter().copied()
    }
}

/// An [`ElementSet`] known to be closed under multiplication and inverses.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup(ElementSet);

impl Serialize for Subgroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl std::ops::Deref for Subgroup {
    type Target = ElementSet;
    fn deref(&self) -> &ElementSet {
        &self.0
    }
}

impl Subgroup {
    pub fn as_set(&self) -> &ElementSet {
        &self.0
    }

    pub fn into_set(self) -> ElementSet {
        self.0
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.0.len() == 1
    }
}

impl Group {
    /// Checks closure and returns the set as a subgroup when it is one.
    pub fn as_subgroup(&self, set: &ElementSet) -> Option<Subgroup> {
        if !set.contains(self.identity) {
            return None;
        }
        for x in set.iter() {
            if !set.contains(self.inv(x)) {
                return None;
            }
            for y in set.iter() {
                if !set.contains(self.mul(x, y)) {
                    return None;
                }
            }
        }
        Some(Subgroup(set.clone()))
    }

    /// Wraps a set already known to be closed.
    pub(crate) fn subgroup_unchecked(&self, set: ElementSet) -> Subgroup {
        debug_assert!(set.contains(self.identity));
        Subgroup(set)
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup(ElementSet::new(self.order, [self.identity]))
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup(ElementSet::from_mask(vec![true; self.order]))
    }

    pub fn is_whole(&self, h: &ElementSet) -> bool {
        h.len() == self.order
    }

    /// Smallest subgroup containing `items`.
    pub fn closure_of(&self, items: &[Elem]) -> Subgroup {
        self.closure_from(&self.trivial_subgroup(), items)
    }

    /// Smallest subgroup containing `start` and `items`.
    pub fn closure_from(&self, start: &Subgroup, items: &[Elem]) -> Subgroup {
        if items.iter().all(|&x| start.contains(x)) {
            return start.clone();
        }
        let mut gens = self.generators_of(start);
        let mut current = start.clone();
        for &x in items {
            if !current.contains(x) {
                gens.push(x);
                current = self.extend(&current, &gens);
            }
        }
        current
    }

    /// Breadth-first closure of `current` under right multiplication by
    /// `gens`, which must include a generating set of `current`. In a finite
    /// group closure under products already gives inverses.
    fn extend(&self, current: &Subgroup, gens: &[Elem]) -> Subgroup {
        let mut mask = current.mask.clone();
        let mut queue: VecDeque<Elem> = current.iter().collect();
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !mask[y as usize] {
                    mask[y as usize] = true;
                    queue.push_back(y);
                }
            }
        }
        Subgroup(ElementSet::from_mask(mask))
    }

    /// Subgroup generated by an arbitrary element set.
    pub fn subgroup_generated(&self, set: &ElementSet) -> Subgroup {
        self.closure_of(set.members())
    }

    /// A small generating set of `h`, chosen greedily by element id.
    pub fn generators_of(&self, h: &Subgroup) -> Vec<Elem> {
        if h.order() == self.order && !self.gens.is_empty() {
            return self.gens.clone();
        }
        let mut gens = Vec::new();
        let mut current = self.trivial_subgroup();
        for x in h.iter() {
            if current.order() == h.order() {
                break;
            }
            if !current.contains(x) {
                gens.push(x);
                current = self.extend(&current, &gens);
            }
        }
        gens
    }

    /// Join of two subgroups.
    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        if a.is_subset(b) {
            return b.clone();
        }
        if b.is_subset(a) {
            return a.clone();
        }
        let gens = self.generators_of(b);
        self.closure_from(a, &gens)
    }

    pub fn intersect(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        Subgroup(a.intersection(b))
    }

    /// `{g : g s = s g for all s in set}`
    pub fn centralizer(&self, set: &[Elem]) -> Subgroup {
        let mask = self
            .elements()
            .map(|g| set.iter().all(|&s| self.mul(g, s) == self.mul(s, g)))
            .collect();
        Subgroup(ElementSet::from_mask(mask))
    }

    /// Centralizer of `set` restricted to the members of `within`.
    pub fn centralizer_in(&self, within: &Subgroup, set: &[Elem]) -> Subgroup {
        Subgroup(ElementSet::new(
            self.order,
            within
                .iter()
                .filter(|&g| set.iter().all(|&s| self.mul(g, s) == self.mul(s, g))),
        ))
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer(&self.gens.clone())
    }

    /// Center of the subgroup `h`.
    pub fn center_of(&self, h: &Subgroup) -> Subgroup {
        let gens = self.generators_of(h);
        self.centralizer_in(h, &gens)
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let gens = self.generators_of(h);
        let mask = self
            .elements()
            .map(|g| gens.iter().all(|&x| h.contains(self.conjugate(g, x))))
            .collect();
        Subgroup(ElementSet::from_mask(mask))
    }

    /// `true` when `g h g^-1 = h` for every `g`.
    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.is_normal_in(&self.whole(), h)
    }

    /// Normality of `h` inside the subgroup `within` (both given in parent ids).
    pub fn is_normal_in(&self, within: &Subgroup, h: &Subgroup) -> bool {
        if !h.is_subset(within) {
            return false;
        }
        let outer = self.generators_of(within);
        let inner = self.generators_of(h);
        outer
            .iter()
            .all(|&g| inner.iter().all(|&x| h.contains(self.conjugate(g, x))))
    }

    /// Smallest normal subgroup containing `items`.
    pub fn normal_closure(&self, items: &[Elem]) -> Subgroup {
        let mut current = self.closure_of(items);
        loop {
            let gens = self.generators_of(&current);
            let outside: Vec<Elem> = self
                .gens
                .iter()
                .flat_map(|&g| gens.iter().map(move |&x| (g, x)))
                .map(|(g, x)| self.conjugate(g, x))
                .filter(|&y| !current.contains(y))
                .collect();
            if outside.is_empty() {
                return current;
            }
            current = self.closure_from(&current, &outside);
        }
    }

    /// `{a b : a in a_set, b in b_set}` for subgroups where one normalizes the
    /// other, which makes the product a subgroup.
    pub fn product_of_normal(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut mask = vec![false; self.order];
        for x in a.iter() {
            for y in b.iter() {
                mask[self.mul(x, y) as usize] = true;
            }
        }
        Subgroup(ElementSet::from_mask(mask))
    }

    /// Conjugate subgroup `g h g^-1`.
    pub fn conjugate_subgroup(&self, g: Elem, h: &Subgroup) -> Subgroup {
        Subgroup(ElementSet::new(
            self.order,
            h.iter().map(|x| self.conjugate(g, x)),
        ))
    }

    /// Commutator subgroup `[a, b]`.
    pub fn commutator_subgroup(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let ga = self.generators_of(a);
        let gb = self.generators_of(b);
        let mut comms: Vec<Elem> = Vec::new();
        for &x in &ga {
            for &y in &gb {
                comms.push(self.commutator(x, y));
            }
        }
        // [A,B] is the normal closure in <A,B> of the generator commutators
        let ab = self.join(a, b);
        let outer = self.generators_of(&ab);
        let mut current = self.closure_of(&comms);
        loop {
            let gens = self.generators_of(&current);
            let outside: Vec<Elem> = outer
                .iter()
                .flat_map(|&g| gens.iter().map(move |&x| (g, x)))
                .map(|(g, x)| self.conjugate(g, x))
                .filter(|&y| !current.contains(y))
                .collect();
            if outside.is_empty() {
                return current;
            }
            current = self.closure_from(&current, &outside);
        }
    }
}
