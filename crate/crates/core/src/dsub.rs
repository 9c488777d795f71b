//! The sets `L_m`, `D_m(x)`, `D_{m,n}(x)`, `D_m(G)` and `D_{m,n}(G)`, computed
//! by enumerating element orders of products.

use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};
use crate::group::{Elem, ElementSet, Group};

/// Parameters `(m, n)` with `gcd(m, n) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CoprimePair {
    m: u64,
    n: u64,
}

impl CoprimePair {
    pub fn new(m: u64, n: u64) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidParams(format!(
                "m and n must be positive (got m={m}, n={n})"
            )));
        }
        if arith::gcd(m, n) != 1 {
            return Err(Error::NotCoprime { m, n });
        }
        Ok(CoprimePair { m, n })
    }

    /// `m` = the `pi`-part of `order`, `n` = the rest.
    pub fn from_primes(order: u64, primes: &[u64]) -> Result<Self> {
        if let Some(&p) = primes.iter().find(|&&p| !arith::is_prime(p)) {
            return Err(Error::InvalidParams(format!("{p} is not a prime")));
        }
        let m = arith::pi_part(order, primes);
        CoprimePair::new(m, order / m)
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn product(&self) -> u64 {
        self.m * self.n
    }

    pub fn pi_m(&self) -> Vec<u64> {
        arith::prime_divisors(self.m)
    }

    pub fn pi_n(&self) -> Vec<u64> {
        arith::prime_divisors(self.n)
    }

    /// `(n, m)`
    pub fn swapped(&self) -> Self {
        CoprimePair {
            m: self.n,
            n: self.m,
        }
    }
}

impl std::fmt::Display for CoprimePair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.m, self.n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DKind {
    #[serde(rename = "L_m")]
    LM,
    #[serde(rename = "D_m_elt")]
    DmElt,
    #[serde(rename = "D_mn_elt")]
    DmnElt,
    #[serde(rename = "D_m_group")]
    DmGroup,
    #[serde(rename = "D_mn_group")]
    DmnGroup,
}

#[derive(Clone, Debug, Serialize)]
pub struct DResult {
    pub m: u64,
    /// Absent for the kinds that only involve `m`.
    pub n: Option<u64>,
    pub kind: DKind,
    pub members: ElementSet,
    pub is_subgroup: bool,
    pub is_nilpotent: Option<bool>,
}

impl DResult {
    pub fn order(&self) -> usize {
        self.members.len()
    }
}

/// `o(x)` divides `k`.
#[inline]
fn order_divides(g: &Group, x: Elem, k: u64) -> bool {
    k % g.element_order(x) == 0
}

/// `{x : x^m = 1}`
pub fn l_set(g: &Group, m: u64) -> ElementSet {
    ElementSet::new(g.order(), g.elements().filter(|&x| order_divides(g, x, m)))
}

/// `{y in L_m : o(xy) | m}`
pub fn d_m_of_element(g: &Group, x: Elem, m: u64) -> Result<ElementSet> {
    if !order_divides(g, x, m) {
        return Err(Error::NotAnMElement(x));
    }
    Ok(ElementSet::new(
        g.order(),
        g.elements()
            .filter(|&y| order_divides(g, y, m) && order_divides(g, g.mul(x, y), m)),
    ))
}

/// `{u in L_n : o(xu) | n}`
pub fn d_mn_of_element(g: &Group, x: Elem, pair: CoprimePair) -> Result<ElementSet> {
    if !order_divides(g, x, pair.m) {
        return Err(Error::NotAnMElement(x));
    }
    Ok(ElementSet::new(
        g.order(),
        g.elements()
            .filter(|&u| order_divides(g, u, pair.n) && order_divides(g, g.mul(x, u), pair.n)),
    ))
}

/// Members of `D_m(G)` with no closure assertion.
pub fn d_m_set(g: &Group, m: u64) -> ElementSet {
    let lm: Vec<Elem> = l_set(g, m).iter().collect();
    ElementSet::new(
        g.order(),
        lm.iter()
            .copied()
            .filter(|&x| lm.iter().all(|&y| order_divides(g, g.mul(x, y), m))),
    )
}

/// Members of `D_{m,n}(G)` with no closure assertion. Trivial when `G` has
/// no nontrivial `n`-elements.
pub fn d_mn_set(g: &Group, pair: CoprimePair) -> ElementSet {
    let id = g.identity();
    let ln: Vec<Elem> = g
        .elements()
        .filter(|&u| u != id && order_divides(g, u, pair.n))
        .collect();
    if ln.is_empty() {
        return ElementSet::new(g.order(), [id]);
    }
    ElementSet::new(
        g.order(),
        g.elements().filter(|&x| {
            order_divides(g, x, pair.m) && ln.iter().all(|&u| order_divides(g, g.mul(x, u), pair.n))
        }),
    )
}

fn is_nilpotent_set(g: &Group, set: &ElementSet) -> Option<bool> {
    let h = g.as_subgroup(set)?;
    Some(g.induced(&h).0.is_nilpotent())
}

pub fn l_result(g: &Group, m: u64) -> DResult {
    let members = l_set(g, m);
    DResult {
        m,
        n: None,
        kind: DKind::LM,
        is_subgroup: g.as_subgroup(&members).is_some(),
        is_nilpotent: None,
        members,
    }
}

/// `D_m(G)`; closure under products always holds and is asserted.
pub fn d_m_group(g: &Group, m: u64) -> Result<DResult> {
    let members = d_m_set(g, m);
    if g.as_subgroup(&members).is_none() {
        return Err(Error::InternalInconsistency(format!(
            "D_{m}({}) is not closed under multiplication",
            g.display_name()
        )));
    }
    Ok(DResult {
        m,
        n: None,
        kind: DKind::DmGroup,
        is_subgroup: true,
        is_nilpotent: is_nilpotent_set(g, &members),
        members,
    })
}

/// `D_{m,n}(G)`. When `exp(G)` divides `mn` the set must be a nilpotent
/// subgroup; a violation is reported as an internal inconsistency.
pub fn d_mn_group(g: &Group, pair: CoprimePair) -> Result<DResult> {
    let members = d_mn_set(g, pair);
    let is_subgroup = g.as_subgroup(&members).is_some();
    let is_nilpotent = is_nilpotent_set(g, &members);
    if pair.product() % g.exponent() == 0 && (!is_subgroup || is_nilpotent != Some(true)) {
        return Err(Error::InternalInconsistency(format!(
            "D_{{{},{}}}({}) should be a nilpotent subgroup (subgroup: {is_subgroup}, nilpotent: {is_nilpotent:?})",
            pair.m,
            pair.n,
            g.display_name()
        )));
    }
    Ok(DResult {
        m: pair.m,
        n: Some(pair.n),
        kind: DKind::DmnGroup,
        is_subgroup,
        is_nilpotent,
        members,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn pair(m: u64, n: u64) -> CoprimePair {
        CoprimePair::new(m, n).unwrap()
    }

    #[test]
    fn coprime_pairs() {
        assert!(matches!(
            CoprimePair::new(4, 2),
            Err(Error::NotCoprime { m: 4, n: 2 })
        ));
        assert!(CoprimePair::new(0, 3).is_err());
        let p = pair(12, 35);
        assert_eq!(p.pi_m(), vec![2, 3]);
        assert_eq!(p.pi_n(), vec![5, 7]);
        assert_eq!(p.swapped(), pair(35, 12));
        assert_eq!(CoprimePair::from_primes(24, &[2]).unwrap(), pair(8, 3));
        assert!(CoprimePair::from_primes(24, &[4]).is_err());
    }

    #[test]
    fn l_sets() {
        let s3 = catalog::build("S3").unwrap();
        assert_eq!(l_set(&s3, 1).members(), &[s3.identity()]);
        assert_eq!(l_set(&s3, 3).len(), 3);
        assert_eq!(l_set(&s3, 2).len(), 4);
    }

    #[test]
    fn element_level_sets() {
        let s3 = catalog::build("S3").unwrap();
        let r = s3.elements().find(|&x| s3.element_order(x) == 3).unwrap();
        let t = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        assert_eq!(
            d_m_of_element(&s3, s3.identity(), 3).unwrap(),
            l_set(&s3, 3)
        );
        assert_eq!(d_m_of_element(&s3, r, 3).unwrap().len(), 3);
        assert_eq!(d_m_of_element(&s3, t, 3), Err(Error::NotAnMElement(t)));
        let transpositions: Vec<Elem> = s3
            .elements()
            .filter(|&x| s3.element_order(x) == 2)
            .collect();
        assert_eq!(
            d_mn_of_element(&s3, r, pair(3, 2)).unwrap().members(),
            transpositions.as_slice()
        );
        let c6 = catalog::build("C6").unwrap();
        let x = c6.elements().find(|&x| c6.element_order(x) == 3).unwrap();
        assert!(d_mn_of_element(&c6, x, pair(3, 2)).unwrap().is_empty());
    }

    #[test]
    fn group_level_sets() {
        let s3 = catalog::build("S3").unwrap();
        let a3 = l_set(&s3, 3);
        assert_eq!(d_m_group(&s3, 3).unwrap().members, a3);
        assert_eq!(d_mn_group(&s3, pair(3, 2)).unwrap().members, a3);
        let s3s3 = catalog::build("S3xS3").unwrap();
        assert_eq!(d_m_group(&s3s3, 3).unwrap().order(), 9);
        assert_eq!(d_mn_group(&s3s3, pair(3, 2)).unwrap().order(), 1);
        let c12 = catalog::build("C12").unwrap();
        assert_eq!(
            d_mn_group(&c12, pair(4, 3)).unwrap().members.members(),
            &[c12.identity()]
        );
        assert_eq!(d_m_group(&c12, 12).unwrap().order(), 12);
        let f20 = catalog::build("F20").unwrap();
        let d = d_mn_group(&f20, pair(5, 4)).unwrap();
        assert_eq!(d.order(), 5);
        assert_eq!(d.is_nilpotent, Some(true));
    }

    #[test]
    fn no_n_elements_gives_trivial() {
        let c5 = catalog::build("C5").unwrap();
        assert_eq!(d_mn_group(&c5, pair(5, 2)).unwrap().order(), 1);
        assert_eq!(d_mn_group(&c5, pair(5, 1)).unwrap().order(), 1);
    }
}
