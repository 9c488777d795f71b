//! Finite groups materialized as indexed element sets.
//!
//! Elements are the ids `0..order`. Multiplication is either a dense Cayley
//! table (order up to [`DENSE_TABLE_LIMIT`]) or composition of stored
//! permutations looked up in an index. Everything built on top of [`Group`]
//! only uses [`Group::mul`], [`Group::inv`] and the cached element orders.

mod lattice;
pub mod perm;
mod quotient;
mod series;
mod subgroup;

use std::collections::HashMap;
use std::collections::VecDeque;

use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};

pub use perm::{parse_cycle_notation, print_cycle_notation, Perm};
pub use quotient::QuotientMap;
pub use series::{SeriesKind, SeriesResult};
pub use subgroup::{ElementSet, Subgroup};

/// Element identifier inside one group.
pub type Elem = u32;

/// Orders above this use permutation composition instead of a dense table.
pub const DENSE_TABLE_LIMIT: usize = 4096;
/// Associativity is checked on every triple up to this order, sampled above.
pub const EXHAUSTIVE_AXIOM_LIMIT: usize = 512;

/// Size limits for enumeration-heavy operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Limits {
    /// Largest group `enumerate_from_generators` and products will build.
    pub max_order: usize,
    /// Largest group `all_subgroups` will enumerate.
    pub all_subgroups_cap: usize,
    /// Largest group `normal_subgroups` will enumerate.
    pub normal_subgroups_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: 100_000,
            all_subgroups_cap: 96,
            normal_subgroups_cap: 512,
        }
    }
}

#[derive(Clone, Debug)]
enum Mult {
    Table(Vec<Elem>),
    Perms {
        perms: Vec<Perm>,
        index: HashMap<Perm, Elem>,
    },
}

/// A finite group with element ids `0..order`.
///
/// Immutable after construction; every query takes `&self`.
#[derive(Clone, Debug)]
pub struct Group {
    name: String,
    source: String,
    order: usize,
    identity: Elem,
    mult: Mult,
    inv: Vec<Elem>,
    orders: Vec<u32>,
    labels: Vec<String>,
    gens: Vec<Elem>,
}

/// Coarse structure description used in reports instead of isomorphism types.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub order: usize,
    pub abelian: bool,
    pub exponent: u64,
    pub nilpotent: bool,
}

impl Group {
    /// Closure of permutation generators under composition.
    ///
    /// Elements are numbered in breadth-first order from the identity, so the
    /// identity is always element 0. Labels are cycle-notation words.
    pub fn from_permutations(gens: &[Perm], max_order: usize) -> Result<Group> {
        let degree = gens.iter().map(Perm::degree).max().unwrap_or(0);
        if degree > perm::MAX_POINTS {
            return Err(Error::InvalidPermutation(format!(
                "acts on {degree} points, at most {} supported",
                perm::MAX_POINTS
            )));
        }
        let gens: Vec<Perm> = gens.iter().map(|g| g.padded(degree)).collect();
        for g in &gens {
            Perm::from_images(g.images().collect())?;
        }
        let id = Perm::identity(degree);
        let mut index: HashMap<Perm, Elem> = HashMap::new();
        let mut perms = vec![id.clone()];
        index.insert(id, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &gens {
                let p = perms[i].then(g);
                if !index.contains_key(&p) {
                    if perms.len() >= max_order {
                        return Err(Error::CapExceeded {
                            what: "generated group",
                            order: perms.len() + 1,
                            cap: max_order,
                        });
                    }
                    index.insert(p.clone(), perms.len() as Elem);
                    queue.push_back(perms.len());
                    perms.push(p);
                }
            }
        }
        let n = perms.len();
        let labels = perms.iter().map(|p| p.to_string()).collect();
        let inv = perms.iter().map(|p| index[&p.inverse()]).collect();
        let orders = perms.iter().map(|p| p.order() as u32).collect();
        let mult = if n <= DENSE_TABLE_LIMIT {
            let mut table = vec![0; n * n];
            for (a, pa) in perms.iter().enumerate() {
                for (b, pb) in perms.iter().enumerate() {
                    table[a * n + b] = index[&pa.then(pb)];
                }
            }
            Mult::Table(table)
        } else {
            Mult::Perms { perms, index }
        };
        let mut g = Group {
            name: String::new(),
            source: format!("gens:{}", print_cycle_notation(&gens)),
            order: n,
            identity: 0,
            mult,
            inv,
            orders,
            labels,
            gens: Vec::new(),
        };
        g.gens = g.greedy_generators();
        Ok(g)
    }

    /// Reads a group from its Cayley table, rejecting anything that is not a
    /// group. `table[i][j]` holds the id of `i * j`.
    pub fn from_cayley_table(table: &[Vec<usize>]) -> Result<Group> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotLatinSquare("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotLatinSquare(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= n) {
                return Err(Error::NotLatinSquare(format!(
                    "row {i} contains {bad}, outside 0..{n}"
                )));
            }
        }
        let flat: Vec<Elem> = table.iter().flatten().map(|&v| v as Elem).collect();
        let at = |a: usize, b: usize| flat[a * n + b] as usize;

        let identity = (0..n)
            .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or(Error::NoIdentity)?;
        let mut inv = vec![0 as Elem; n];
        for (x, slot) in inv.iter_mut().enumerate() {
            let y = (0..n)
                .find(|&y| at(x, y) == identity && at(y, x) == identity)
                .ok_or(Error::MissingInverse(x as Elem))?;
            *slot = y as Elem;
        }
        check_associative(n, &at)?;
        for i in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for j in 0..n {
                if std::mem::replace(&mut row_seen[at(i, j)], true) {
                    return Err(Error::NotLatinSquare(format!(
                        "row {i} repeats {}",
                        at(i, j)
                    )));
                }
                if std::mem::replace(&mut col_seen[at(j, i)], true) {
                    return Err(Error::NotLatinSquare(format!(
                        "column {i} repeats {}",
                        at(j, i)
                    )));
                }
            }
        }
        let labels = (0..n).map(|i| format!("g{i}")).collect();
        let mut g = Group::from_trusted_table(flat, identity as Elem, labels);
        g.inv = inv;
        g.source = "cayley".into();
        Ok(g)
    }

    /// Builds a group from a table already known to satisfy the axioms
    /// (recipes, products, quotients, induced subgroups).
    pub(crate) fn from_trusted_table(
        table: Vec<Elem>,
        identity: Elem,
        labels: Vec<String>,
    ) -> Group {
        let n = labels.len();
        debug_assert_eq!(table.len(), n * n);
        let mut inv = vec![0; n];
        for a in 0..n {
            let row = &table[a * n..(a + 1) * n];
            inv[a] = row
                .iter()
                .position(|&c| c == identity)
                .expect("row contains identity") as Elem;
        }
        let mut g = Group {
            name: String::new(),
            source: String::new(),
            order: n,
            identity,
            mult: Mult::Table(table),
            inv,
            orders: Vec::new(),
            labels,
            gens: Vec::new(),
        };
        g.orders = (0..n as Elem).map(|x| g.compute_order(x)).collect();
        g.gens = g.greedy_generators();
        g
    }

    /// Direct product with componentwise multiplication. Element `(g, h)` has
    /// id `g * |H| + h`.
    pub fn direct_product(&self, other: &Group, max_order: usize) -> Result<Group> {
        let (a, b) = (self.order, other.order);
        let n = a * b;
        if n > max_order.min(DENSE_TABLE_LIMIT) {
            return Err(Error::CapExceeded {
                what: "direct product",
                order: n,
                cap: max_order.min(DENSE_TABLE_LIMIT),
            });
        }
        let mut table = vec![0; n * n];
        for x in 0..n {
            let (x1, x2) = (x / b, x % b);
            for y in 0..n {
                let (y1, y2) = (y / b, y % b);
                let p1 = self.mul(x1 as Elem, y1 as Elem) as usize;
                let p2 = other.mul(x2 as Elem, y2 as Elem) as usize;
                table[x * n + y] = (p1 * b + p2) as Elem;
            }
        }
        let labels = (0..n)
            .map(|x| format!("({}, {})", self.labels[x / b], other.labels[x % b]))
            .collect();
        let identity = self.identity as usize * b + other.identity as usize;
        let mut g = Group::from_trusted_table(table, identity as Elem, labels);
        g.name = format!("{}x{}", self.name, other.name);
        g.source = format!("product:({})x({})", self.source, other.source);
        Ok(g)
    }

    /// Embeds an element pair into a direct product built by [`Group::direct_product`].
    pub fn product_elem(second_order: usize, x: Elem, y: Elem) -> Elem {
        x * second_order as Elem + y
    }

    /// Subgroup `h` as a group in its own right, with the embedding
    /// `new id -> parent id`. Ids follow the sorted member order.
    pub fn induced(&self, h: &Subgroup) -> (Group, Vec<Elem>) {
        let members = h.members().to_vec();
        let n = members.len();
        let mut pos = HashMap::with_capacity(n);
        for (i, &m) in members.iter().enumerate() {
            pos.insert(m, i as Elem);
        }
        let mut table = vec![0; n * n];
        for (i, &x) in members.iter().enumerate() {
            for (j, &y) in members.iter().enumerate() {
                table[i * n + j] = pos[&self.mul(x, y)];
            }
        }
        let labels = members
            .iter()
            .map(|&m| self.labels[m as usize].clone())
            .collect();
        let identity = pos[&self.identity];
        let mut g = Group::from_trusted_table(table, identity, labels);
        g.name = format!("{}<{}>", self.name, n);
        g.source = format!("subgroup of {}", self.display_name());
        (g, members)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Group {
        self.name = name.into();
        self
    }

    pub fn with_source(mut self, source: impl Into<String>) -> Group {
        self.source = source.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn display_name(&self) -> String {
        if self.name.is_empty() {
            format!("group of order {}", self.order)
        } else {
            self.name.clone()
        }
    }

    /// Where the group came from, e.g. `catalog:S4` or `gens:(1 2 3), (1 2)`.
    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        0..self.order as Elem
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.mult {
            Mult::Table(t) => t[a as usize * self.order + b as usize],
            Mult::Perms { perms, index } => index[&perms[a as usize].then(&perms[b as usize])],
        }
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a as usize]
    }

    pub fn pow(&self, a: Elem, mut k: u64) -> Elem {
        let mut base = a;
        let mut acc = self.identity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `g x g^-1`
    pub fn conjugate(&self, g: Elem, x: Elem) -> Elem {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `x^-1 y^-1 x y`
    pub fn commutator(&self, x: Elem, y: Elem) -> Elem {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn label(&self, x: Elem) -> &str {
        &self.labels[x as usize]
    }

    /// The generating set used internally (chosen greedily by element id).
    pub fn generators(&self) -> &[Elem] {
        &self.gens
    }

    /// Least `t >= 1` with `x^t = 1`.
    #[inline]
    pub fn element_order(&self, x: Elem) -> u64 {
        self.orders[x as usize] as u64
    }

    /// lcm of all element orders.
    pub fn exponent(&self) -> u64 {
        self.orders
            .iter()
            .fold(1, |acc, &o| arith::lcm(acc, o as u64))
    }

    pub fn is_abelian(&self) -> bool {
        self.gens.iter().enumerate().all(|(i, &a)| {
            self.gens[i + 1..]
                .iter()
                .all(|&b| self.mul(a, b) == self.mul(b, a))
        })
    }

    pub fn summary(&self) -> Summary {
        Summary {
            order: self.order,
            abelian: self.is_abelian(),
            exponent: self.exponent(),
            nilpotent: self.is_nilpotent(),
        }
    }

    /// Re-checks the group axioms: exhaustive associativity up to
    /// [`EXHAUSTIVE_AXIOM_LIMIT`], `10 * order^2` sampled triples above.
    pub fn validate(&self) -> Result<()> {
        let n = self.order;
        for x in self.elements() {
            if self.mul(self.identity, x) != x || self.mul(x, self.identity) != x {
                return Err(Error::NoIdentity);
            }
            let y = self.inv(x);
            if self.mul(x, y) != self.identity || self.mul(y, x) != self.identity {
                return Err(Error::MissingInverse(x));
            }
        }
        check_associative(n, &|a, b| self.mul(a as Elem, b as Elem) as usize)
    }

    fn compute_order(&self, x: Elem) -> u32 {
        let mut y = x;
        let mut t = 1;
        while y != self.identity {
            y = self.mul(y, x);
            t += 1;
        }
        t
    }

    fn greedy_generators(&self) -> Vec<Elem> {
        let mut gens = Vec::new();
        let mut inside = vec![false; self.order];
        inside[self.identity as usize] = true;
        let mut count = 1;
        for x in self.elements() {
            if count == self.order {
                break;
            }
            if !inside[x as usize] {
                gens.push(x);
                let closure = self.closure_of(&gens);
                count = closure.len();
                for &m in closure.members() {
                    inside[m as usize] = true;
                }
            }
        }
        gens
    }
}

fn check_associative(n: usize, at: &dyn Fn(usize, usize) -> usize) -> Result<()> {
    let fail = |a: usize, b: usize, c: usize| Error::NotAssociative {
        a: a as Elem,
        b: b as Elem,
        c: c as Elem,
    };
    if n <= EXHAUSTIVE_AXIOM_LIMIT {
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(fail(a, b, c));
                    }
                }
            }
        }
    } else {
        // fixed-seed LCG keeps validation deterministic
        let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
        let mut next = || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 33) % n as u64) as usize
        };
        for _ in 0..10 * n * n {
            let (a, b, c) = (next(), next(), next());
            if at(at(a, b), c) != at(a, at(b, c)) {
                return Err(fail(a, b, c));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perms(text: &str) -> Vec<Perm> {
        parse_cycle_notation(text).unwrap()
    }

    #[test]
    fn enumerate_small_symmetric_groups() {
        assert_eq!(
            Group::from_permutations(&perms("(1 2 3), (1 2)"), 1000)
                .unwrap()
                .order(),
            6
        );
        assert_eq!(
            Group::from_permutations(&perms("(1 2 3 4), (1 2)"), 1000)
                .unwrap()
                .order(),
            24
        );
        let trivial = Group::from_permutations(&[], 1000).unwrap();
        assert_eq!(trivial.order(), 1);
        assert_eq!(trivial.label(0), "()");
    }

    #[test]
    fn enumeration_cap() {
        let err = Group::from_permutations(&perms("(1 2 3 4 5), (1 2)"), 100).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { cap: 100, .. }));
    }

    #[test]
    fn large_groups_use_permutation_composition() {
        // S7 has 5040 elements, above the dense-table limit
        let g = Group::from_permutations(&perms("(1 2 3 4 5 6 7), (1 2)"), 10_000).unwrap();
        assert_eq!(g.order(), 5040);
        assert!(matches!(g.mult, Mult::Perms { .. }));
        assert_eq!(g.exponent(), 420);
        let x = 17;
        assert_eq!(g.mul(x, g.inv(x)), g.identity());
        for (a, b, c) in [(1, 2, 3), (100, 2000, 4999), (17, 17, 17)] {
            assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        }
    }

    #[test]
    fn cayley_tables() {
        assert_eq!(Group::from_cayley_table(&[vec![0]]).unwrap().order(), 1);
        let c2 = Group::from_cayley_table(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(c2.order(), 2);
        assert_eq!(c2.element_order(1), 2);
        let non_assoc = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 0, 0]];
        assert!(matches!(
            Group::from_cayley_table(&non_assoc),
            Err(Error::NotAssociative { .. })
        ));
        let no_identity = vec![vec![1, 0], vec![1, 0]];
        assert_eq!(
            Group::from_cayley_table(&no_identity).unwrap_err(),
            Error::NoIdentity
        );
        // identity 0, but 1*2 = 0 while 2*1 = 1
        let one_sided = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 1, 0]];
        assert!(matches!(
            Group::from_cayley_table(&one_sided),
            Err(Error::MissingInverse(_))
        ));
        assert!(matches!(
            Group::from_cayley_table(&[vec![0, 1], vec![1]]),
            Err(Error::NotLatinSquare(_))
        ));
    }

    #[test]
    fn element_orders_and_exponent() {
        let s4 = Group::from_permutations(&perms("(1 2 3 4), (1 2)"), 1000).unwrap();
        assert_eq!(s4.element_order(s4.identity()), 1);
        let four_cycle = (0..24).find(|&x| s4.label(x) == "(1 2 3 4)").unwrap();
        assert_eq!(s4.element_order(four_cycle), 4);
        let transposition = (0..24).find(|&x| s4.label(x) == "(1 2)").unwrap();
        assert_eq!(s4.element_order(transposition), 2);
        assert_eq!(s4.exponent(), 12);
        let s3 = Group::from_permutations(&perms("(1 2 3), (1 2)"), 1000).unwrap();
        assert_eq!(s3.exponent(), 6);
    }

    #[test]
    fn products() {
        let s3 = Group::from_permutations(&perms("(1 2 3), (1 2)"), 1000).unwrap();
        assert_eq!(s3.direct_product(&s3, 1000).unwrap().order(), 36);
        let c1 = Group::from_permutations(&[], 10).unwrap();
        let copy = c1.direct_product(&s3, 1000).unwrap();
        for a in s3.elements() {
            for b in s3.elements() {
                assert_eq!(copy.mul(a, b), s3.mul(a, b));
            }
        }
        let c2 = Group::from_cayley_table(&[vec![0, 1], vec![1, 0]]).unwrap();
        let v4 = c2.direct_product(&c2, 100).unwrap();
        assert_eq!(v4.order(), 4);
        assert_eq!(v4.exponent(), 2);
        assert!(matches!(
            s3.direct_product(&s3, 30),
            Err(Error::CapExceeded { .. })
        ));
    }
}
