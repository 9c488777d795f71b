//! Frobenius and 2-Frobenius detection and the order laws of semidirect
//! decompositions.

use serde::Serialize;

use crate::arith;
use crate::dsub::CoprimePair;
use crate::error::{Error, Result};
use crate::group::{Elem, Group, Limits, Subgroup};

#[derive(Clone, Debug, Serialize)]
pub struct FrobeniusWitness {
    pub kernel: Subgroup,
    pub complement: Option<Subgroup>,
    /// A complement was found and acts without nontrivial fixed points.
    pub fixed_point_free_checked: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TwoFrobeniusWitness {
    pub k: Subgroup,
    pub l: Subgroup,
    /// `L` with kernel `K`, in ids of `G`.
    pub inner: FrobeniusWitness,
    /// `G/K` with kernel `L/K`, in ids of the quotient.
    pub outer: FrobeniusWitness,
}

/// `K` is a normal subgroup of `within`, `1 < |K| < |within|`, and no
/// element of `within` outside `K` centralizes a nontrivial element of `K`.
pub fn is_frobenius_kernel_in(g: &Group, within: &Subgroup, k: &Subgroup) -> bool {
    if k.order() <= 1 || k.order() >= within.order() || !g.is_normal_in(within, k) {
        return false;
    }
    let outside: Vec<Elem> = within.iter().filter(|&w| !k.contains(w)).collect();
    k.iter()
        .filter(|&x| x != g.identity())
        .all(|x| outside.iter().all(|&w| g.mul(w, x) != g.mul(x, w)))
}

pub fn is_frobenius_with_kernel(g: &Group, k: &Subgroup) -> bool {
    is_frobenius_kernel_in(g, &g.whole(), k)
}

/// `C_K(h) = 1` for every `h != 1` in `H`.
pub fn acts_fixed_point_free(g: &Group, k: &Subgroup, h: &Subgroup) -> bool {
    let id = g.identity();
    h.iter().filter(|&y| y != id).all(|y| {
        k.iter()
            .filter(|&x| x != id)
            .all(|x| g.mul(x, y) != g.mul(y, x))
    })
}

/// The first normal subgroup (by order, then member list) that is a
/// Frobenius kernel. A complement is searched for when `|G|` is within the
/// all-subgroups cap.
pub fn find_frobenius(g: &Group, limits: &Limits) -> Result<Option<FrobeniusWitness>> {
    let normals = g.normal_subgroups(limits.normal_subgroups_cap)?;
    let Some(kernel) = normals.into_iter().find(|k| is_frobenius_with_kernel(g, k)) else {
        return Ok(None);
    };
    let mut witness = FrobeniusWitness {
        kernel,
        complement: None,
        fixed_point_free_checked: false,
    };
    if g.order() <= limits.all_subgroups_cap {
        let index = g.order() / witness.kernel.order();
        let complement = g
            .subgroups_of_order(index, limits.all_subgroups_cap)?
            .into_iter()
            .find(|h| h.intersection(&witness.kernel).len() == 1);
        if let Some(h) = complement {
            if !acts_fixed_point_free(g, &witness.kernel, &h) {
                return Err(Error::InternalInconsistency(format!(
                    "Frobenius kernel of order {} in {} has a complement with fixed points",
                    witness.kernel.order(),
                    g.display_name()
                )));
            }
            witness.complement = Some(h);
            witness.fixed_point_free_checked = true;
        }
    }
    Ok(Some(witness))
}

/// A pair `K <= L` of normal subgroups with `L` Frobenius with kernel `K`
/// and `G/K` Frobenius with kernel `L/K`; the first such pair in the
/// normal-subgroup order.
pub fn find_two_frobenius(g: &Group, limits: &Limits) -> Result<Option<TwoFrobeniusWitness>> {
    let normals = g.normal_subgroups(limits.normal_subgroups_cap)?;
    for k in normals.iter().filter(|k| !k.is_trivial()) {
        let candidates: Vec<&Subgroup> = normals
            .iter()
            .filter(|l| l.order() > k.order() && k.is_subset(l) && is_frobenius_kernel_in(g, l, k))
            .collect();
        if candidates.is_empty() {
            continue;
        }
        let (quotient, map) = g.quotient_unchecked(k);
        for l in candidates {
            let image = quotient.subgroup_unchecked(map.image(l));
            if is_frobenius_with_kernel(&quotient, &image) {
                return Ok(Some(TwoFrobeniusWitness {
                    k: k.clone(),
                    l: l.clone(),
                    inner: FrobeniusWitness {
                        kernel: k.clone(),
                        complement: None,
                        fixed_point_free_checked: false,
                    },
                    outer: FrobeniusWitness {
                        kernel: image,
                        complement: None,
                        fixed_point_free_checked: false,
                    },
                }));
            }
        }
    }
    Ok(None)
}

/// Outcome of checking the product-order laws on `G = K H`.
#[derive(Clone, Debug, Serialize)]
pub struct OrderLawReport {
    /// First `(x, y)` in `K x H` with `o(y)` not dividing `o(xy)`.
    pub divisibility_violation: Option<(Elem, Elem)>,
    /// First `(x, y)` in `K x (H \ 1)` with `o(xy) != o(y)`.
    pub equality_violation: Option<(Elem, Elem)>,
    /// `K` is a Frobenius kernel of `G`, in which case equality must hold.
    pub frobenius: bool,
}

impl OrderLawReport {
    pub fn divisibility_holds(&self) -> bool {
        self.divisibility_violation.is_none()
    }

    pub fn equality_holds(&self) -> bool {
        self.equality_violation.is_none()
    }
}

pub fn semidirect_order_law_check(g: &Group, k: &Subgroup, h: &Subgroup) -> Result<OrderLawReport> {
    if !g.is_normal(k) {
        return Err(Error::NotSemidirect("K is not normal".into()));
    }
    if h.intersection(k).len() != 1 {
        return Err(Error::NotSemidirect(
            "K and H intersect nontrivially".into(),
        ));
    }
    if k.order() * h.order() != g.order() {
        return Err(Error::NotSemidirect(format!(
            "|K||H| = {} but |G| = {}",
            k.order() * h.order(),
            g.order()
        )));
    }
    let mut divisibility_violation = None;
    let mut equality_violation = None;
    for x in k.iter() {
        for y in h.iter() {
            let (oy, oxy) = (g.element_order(y), g.element_order(g.mul(x, y)));
            if divisibility_violation.is_none() && oxy % oy != 0 {
                divisibility_violation = Some((x, y));
            }
            if equality_violation.is_none() && y != g.identity() && oxy != oy {
                equality_violation = Some((x, y));
            }
        }
    }
    Ok(OrderLawReport {
        divisibility_violation,
        equality_violation,
        frobenius: is_frobenius_with_kernel(g, k),
    })
}

fn primes_within(small: u64, large: u64) -> bool {
    arith::prime_divisors(small).iter().all(|p| large % p == 0)
}

/// First `(x, y)` with `x` in `L_m`, `y` in `L_n \ 1` and a prime of `o(xy)`
/// not dividing `o(y)`.
pub fn fro1_violation(g: &Group, pair: CoprimePair) -> Result<Option<(Elem, Elem)>> {
    if g.order() as u64 != pair.product() {
        return Err(Error::OrderMismatch {
            order: g.order(),
            product: pair.product(),
        });
    }
    let id = g.identity();
    let lm: Vec<Elem> = g
        .elements()
        .filter(|&x| pair.m() % g.element_order(x) == 0)
        .collect();
    let ln: Vec<Elem> = g
        .elements()
        .filter(|&y| y != id && pair.n() % g.element_order(y) == 0)
        .collect();
    for &x in &lm {
        for &y in &ln {
            if !primes_within(g.element_order(g.mul(x, y)), g.element_order(y)) {
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}

/// `pi(o(xy))` is contained in `pi(o(y))` for every `m`-element `x` and
/// nontrivial `n`-element `y`.
pub fn fro1_condition(g: &Group, pair: CoprimePair) -> Result<bool> {
    Ok(fro1_violation(g, pair)?.is_none())
}

/// The same containment over all nontrivial `x`, `y` of coprime orders.
pub fn fro1_all_pairs_violation(g: &Group) -> Option<(Elem, Elem)> {
    let id = g.identity();
    for x in g.elements().filter(|&x| x != id) {
        for y in g.elements().filter(|&y| y != id) {
            let (ox, oy) = (g.element_order(x), g.element_order(y));
            if arith::gcd(ox, oy) == 1 && !primes_within(g.element_order(g.mul(x, y)), oy) {
                return Some((x, y));
            }
        }
    }
    None
}

/// A `p`-group is cyclic, or generalized quaternion: order `2^t` with
/// `t >= 3` and a single involution.
pub fn cyclic_or_generalized_quaternion(g: &Group, p: &Subgroup) -> Result<bool> {
    let order = p.order() as u64;
    let primes = arith::prime_divisors(order);
    if primes.len() > 1 {
        return Err(Error::NotAPGroup(p.order()));
    }
    if p.iter().any(|x| g.element_order(x) == order) {
        return Ok(true);
    }
    let involutions = p.iter().filter(|&x| g.element_order(x) == 2).count();
    Ok(primes == [2] && order >= 8 && involutions == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn limits() -> Limits {
        Limits::default()
    }

    fn subgroup_of_order(g: &Group, order: usize) -> Subgroup {
        g.normal_subgroups(512)
            .unwrap()
            .into_iter()
            .find(|s| s.order() == order)
            .unwrap()
    }

    #[test]
    fn frobenius_kernels() {
        let s3 = catalog::build("S3").unwrap();
        let a3 = subgroup_of_order(&s3, 3);
        assert!(is_frobenius_with_kernel(&s3, &a3));
        assert!(!is_frobenius_with_kernel(&s3, &s3.whole()));
        let s4 = catalog::build("S4").unwrap();
        assert!(!is_frobenius_with_kernel(&s4, &subgroup_of_order(&s4, 12)));
        let a4 = catalog::build("A4").unwrap();
        assert!(is_frobenius_with_kernel(&a4, &subgroup_of_order(&a4, 4)));
    }

    #[test]
    fn finding_frobenius_decompositions() {
        let s3 = catalog::build("S3").unwrap();
        let w = find_frobenius(&s3, &limits()).unwrap().unwrap();
        assert_eq!(w.kernel.order(), 3);
        assert_eq!(w.complement.as_ref().unwrap().order(), 2);
        assert!(w.fixed_point_free_checked);
        let f20 = catalog::build("F20").unwrap();
        assert_eq!(
            find_frobenius(&f20, &limits())
                .unwrap()
                .unwrap()
                .kernel
                .order(),
            5
        );
        assert!(find_frobenius(&catalog::build("C12").unwrap(), &limits())
            .unwrap()
            .is_none());
        assert!(find_frobenius(&catalog::build("S4").unwrap(), &limits())
            .unwrap()
            .is_none());
    }

    #[test]
    fn finding_two_frobenius_decompositions() {
        let s4 = catalog::build("S4").unwrap();
        let w = find_two_frobenius(&s4, &limits()).unwrap().unwrap();
        assert_eq!((w.k.order(), w.l.order()), (4, 12));
        assert!(
            find_two_frobenius(&catalog::build("S3").unwrap(), &limits())
                .unwrap()
                .is_none()
        );
        assert!(
            find_two_frobenius(&catalog::build("A5").unwrap(), &limits())
                .unwrap()
                .is_none()
        );
    }

    #[test]
    fn order_laws() {
        let s3 = catalog::build("S3").unwrap();
        let a3 = subgroup_of_order(&s3, 3);
        let t = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        let report = semidirect_order_law_check(&s3, &a3, &s3.closure_of(&[t])).unwrap();
        assert!(report.frobenius && report.divisibility_holds() && report.equality_holds());

        let c6 = catalog::build("C6").unwrap();
        let c3 = c6.closure_of(&[2]);
        let c2 = c6.closure_of(&[3]);
        let report = semidirect_order_law_check(&c6, &c3, &c2).unwrap();
        assert!(!report.frobenius && report.divisibility_holds());
        let (x, y) = report.equality_violation.unwrap();
        assert_eq!(c6.element_order(c6.mul(x, y)), 6);

        assert!(matches!(
            semidirect_order_law_check(&c6, &c3, &c3),
            Err(Error::NotSemidirect(_))
        ));
    }

    #[test]
    fn fro1() {
        let pair = |m, n| CoprimePair::new(m, n).unwrap();
        assert!(fro1_condition(&catalog::build("S3").unwrap(), pair(3, 2)).unwrap());
        assert!(!fro1_condition(&catalog::build("C12").unwrap(), pair(4, 3)).unwrap());
        assert!(fro1_condition(&catalog::build("F20").unwrap(), pair(5, 4)).unwrap());
        assert!(matches!(
            fro1_condition(&catalog::build("S3").unwrap(), pair(3, 4)),
            Err(Error::OrderMismatch { .. })
        ));
    }

    #[test]
    fn cyclic_or_quaternion() {
        let c8 = catalog::build("C8").unwrap();
        assert!(cyclic_or_generalized_quaternion(&c8, &c8.whole()).unwrap());
        let q8 = catalog::build("Q8").unwrap();
        assert!(cyclic_or_generalized_quaternion(&q8, &q8.whole()).unwrap());
        let v4 = catalog::build("V4").unwrap();
        assert!(!cyclic_or_generalized_quaternion(&v4, &v4.whole()).unwrap());
        let d8 = catalog::build("D8").unwrap();
        assert!(!cyclic_or_generalized_quaternion(&d8, &d8.whole()).unwrap());
        let s3 = catalog::build("S3").unwrap();
        assert_eq!(
            cyclic_or_generalized_quaternion(&s3, &s3.whole()),
            Err(Error::NotAPGroup(6))
        );
    }
}
