use super::{Case, Outcome, Scope, SuiteDescriptor, Witness};
use crate::arith;
use crate::dsub::{d_m_of_element, d_m_set, d_mn_of_element, d_mn_set, l_set, CoprimePair};
use crate::error::{Error, Result};
use crate::eseries::{compute_e_series, stabilization_check, ESeriesResult, DEFAULT_MAX_STEPS};
use crate::group::{Elem, ElementSet, Group, Subgroup};
use crate::structure::{
    cyclic_or_generalized_quaternion, find_frobenius, find_two_frobenius, fro1_all_pairs_violation,
    fro1_condition, fro1_violation, is_frobenius_kernel_in, is_frobenius_with_kernel,
    semidirect_order_law_check,
};

const fn suite(
    id: &'static str,
    statement: &'static str,
    scope: Scope,
    check: fn(&Case) -> Result<Outcome>,
) -> SuiteDescriptor {
    SuiteDescriptor {
        id,
        statement,
        subgroup_capped: false,
        informational: false,
        scope,
        check,
    }
}

const fn capped(mut s: SuiteDescriptor) -> SuiteDescriptor {
    s.subgroup_capped = true;
    s
}

const fn informational(mut s: SuiteDescriptor) -> SuiteDescriptor {
    s.informational = true;
    s
}

pub(super) static SUITES: &[SuiteDescriptor] = &[
    // operator laws
    suite("frobenius-divisibility", "m divides |L_m(G)| for every divisor m of |G|", Scope::Divisors, frobenius_divisibility),
    suite("lemma-2.3-i", "exp(G) = mn: D_m(x)N/N <= D_m(xN) and D_{m,n}(x)N/N <= D_{m,n}(xN) for normal N", Scope::ExponentSplits, element_images),
    suite("lemma-2.3-ii", "exp(G) = mn: D_m(G)N/N <= D_m(G/N) and D_{m,n}(G)N/N <= D_{m,n}(G/N) for normal N", Scope::ExponentSplits, group_images),
    suite("lemma-2.3-iii", "exp(G) = exp(H) = mn: D_m(GxH) = D_m(G)xD_m(H) and D_{m,n}(GxH) <= D_{m,n}(G)xD_{m,n}(H)", Scope::ProductPairs, direct_products),
    capped(suite("lemma-2.3-iv", "exp(G) = exp(H) = mn, H <= G: D_m(G) n H <= D_m(H) and D_{m,n}(G) n H <= D_{m,n}(H)", Scope::ExponentSplits, subgroup_restriction)),
    suite("example-2.4", "D_3(S3) = D_{3,2}(S3) = A3; D_3(S3xS3) has order 9, D_{3,2}(S3xS3) = 1, so D_{3,2} is not monotone", Scope::Named(&["S3", "S3xS3"]), small_examples),
    suite("lemma-2.5-i-conjugation", "|G| = mn: D_m(G) and D_{m,n}(G) are invariant under conjugation", Scope::Factorizations, conjugation_invariance),
    suite("lemma-2.5-ii", "|G| = mn: D_m(G) and D_{m,n}(G) are closed under multiplication", Scope::Factorizations, closure),
    suite("lemma-2.5-iii", "|G| = mn: D_{m,n}(G) <= D_m(G)", Scope::Factorizations, containment),
    suite("remark-2.6-proper", "|G| = mn, n > 1: D_{m,n}(G) != G", Scope::Factorizations, proper),
    suite("prop-factor-i", "|G| = mn: D_{m,n}(G / D_{m,n}(G)) = 1", Scope::Factorizations, factor_quotient_trivial),
    suite("cor-nil2", "|G| = mn: D_{m,n}(G) is a normal nilpotent subgroup", Scope::Factorizations, normal_nilpotent),
    // Frobenius structure
    suite("thm-nil", "|G| = mn, D = D_{m,n}(G) != 1: <D, x> is Frobenius with kernel D for every x != 1 in L_n(G)", Scope::Factorizations, frobenius_over_d),
    suite("thm-fro1", "|G| = mn: pi(o(xy)) <= pi(o(y)) for x in L_m, 1 != y in L_n iff G is Frobenius with kernel of order m", Scope::Factorizations, fro1),
    informational(suite("thm-fro1-intro-form", "|G| = mn: pi(o(xy)) <= pi(o(y)) for all x, y != 1 of coprime orders iff G is Frobenius with kernel of order m", Scope::Factorizations, fro1_intro)),
    suite("lemma-2.7", "G = K x| H: o(y) | o(xy) for x in K, y in H, with o(xy) = o(y) for y != 1 when K is a Frobenius kernel", Scope::Groups, order_laws),
    suite("prop-factor-ii", "|G| = mn, D_{m,n}(G) != 1: Sylow p-subgroups for p | n are cyclic or generalized quaternion; with 2 | n and a cyclic Sylow 2-subgroup or 3 not dividing |G|, G = KH with |K| = m, |H| = n", Scope::Factorizations, sylow_shape),
    suite("thm-frob", "D = D_{m,n}(G), U/D = D_{n,m}(G/D), V/U = D_{m,n}(G/U): D_{m,n}(G/V) = 1; U != V implies V is 2-Frobenius; U != D implies U is Frobenius with kernel D", Scope::Factorizations, three_step),
    // nilpotency criteria
    capped(suite("thm-min1", "|G| = mn, n > 1: G is nilpotent iff D_{m,n}(M/Z(M)) = 1 for every M <= G", Scope::Factorizations, min1)),
    capped(suite("thm-min2", "|G| = mn, D_{m,n}(G) != 1, D_{m,n}(M/Z(M)) = 1 for every proper non-nilpotent M: G is Frobenius with kernel D_{m,n}(G)", Scope::Factorizations, min2)),
    capped(suite("lemma-2.16", "|G| = mn, G nilpotent: D_{m,n}(G) = 1", Scope::Factorizations, nilpotent_trivial)),
    // E-series
    suite("thm-3.5-length2-iff-nilpotent", "|G| = mn, m, n > 1: the E-series has length 2 iff G is nilpotent", Scope::Factorizations, length_two),
    suite("thm-r", "|G| = mn: E-series length 2, 3, 4 implies nilpotent, Frobenius, 2-Frobenius", Scope::Factorizations, length_classes),
    suite("thm-r-length-bound", "|G| = mn: an E-series that reaches G has length at most 4", Scope::Factorizations, length_bound),
    suite("thm-can", "|G| = mn, m, n > 1, operator steps at 2 to 4: E_3 = E_4", Scope::Factorizations, stabilization),
    suite("remark-3.2-alternation", "|G| = mn, D_{m,n}(G) != 1: repeating D_{m,n} on G/D_{m,n}(G) adds nothing", Scope::Factorizations, alternation),
    suite("remark-3.6-solvable", "|G| = mn: an E-series that reaches G implies G solvable", Scope::Factorizations, solvable),
    suite("remark-3.7-simple", "non-abelian simple G of order mn: every E-series term is trivial", Scope::Factorizations, simple),
    suite("cor-fitting-height", "|G| = mn: an E-series that reaches G implies Fitting height at most 4", Scope::Factorizations, fitting_height),
    suite("examples-3.3-3.4", "S3 (3, 2): 1 < A3 < S3, length 3; S4 (8, 3): 1 < V4 < A4 < S4, length 4", Scope::Named(&["S3", "S4"]), series_examples),
    // brute-force oracles
    suite("baumslag-wiegold-oracle", "G is nilpotent iff o(xy) = o(x)o(y) whenever gcd(o(x), o(y)) = 1", Scope::Groups, baumslag_wiegold),
    suite("sylow-oracle", "the computed Sylow p-subgroup is a largest p-subgroup in the subgroup lattice", Scope::Groups, sylow_oracle),
    suite("fitting-oracle", "the computed Fitting subgroup is normal, nilpotent and contains every normal nilpotent subgroup", Scope::Groups, fitting_oracle),
];

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome::Fail {
        witness: Witness {
            detail: detail.into(),
            ..Witness::default()
        },
    }
}

fn fail_with(
    detail: impl Into<String>,
    elements: Vec<Elem>,
    subgroups: Vec<&ElementSet>,
) -> Outcome {
    Outcome::Fail {
        witness: Witness {
            detail: detail.into(),
            elements,
            subgroups: subgroups
                .into_iter()
                .map(|s| s.members().to_vec())
                .collect(),
        },
    }
}

fn unmet(reason: impl Into<String>) -> Error {
    Error::HypothesisNotMet(reason.into())
}

fn require_order_mn(g: &Group, pair: CoprimePair) -> Result<()> {
    if g.order() as u64 == pair.product() {
        Ok(())
    } else {
        Err(unmet(format!(
            "|G| = {} != mn = {}",
            g.order(),
            pair.product()
        )))
    }
}

fn require_exponent_mn(g: &Group, pair: CoprimePair) -> Result<()> {
    if g.exponent() == pair.product() {
        Ok(())
    } else {
        Err(unmet(format!(
            "exp(G) = {} != mn = {}",
            g.exponent(),
            pair.product()
        )))
    }
}

fn trivial_set(set: &ElementSet) -> bool {
    set.len() == 1
}

fn subgroup(g: &Group, set: &ElementSet, what: &str) -> Result<Subgroup> {
    g.as_subgroup(set)
        .ok_or_else(|| Error::InternalInconsistency(format!("{what} is not a subgroup")))
}

/// Ids of `set` inside the induced group with embedding `members`.
fn localize(members: &[Elem], set: &ElementSet) -> ElementSet {
    ElementSet::new(
        members.len(),
        set.iter()
            .filter_map(|x| members.binary_search(&x).ok().map(|i| i as Elem)),
    )
}

/// `D_{m,n}(M/Z(M))`, with `M` given in ids of `g`.
fn d_mod_center(g: &Group, m: &Subgroup, pair: CoprimePair) -> ElementSet {
    let (mg, _) = g.induced(m);
    let (q, _) = mg.quotient_unchecked(&mg.center());
    d_mn_set(&q, pair)
}

fn series(case: &Case) -> Result<ESeriesResult> {
    let pair = case.pair();
    require_order_mn(case.g, pair)?;
    Ok(compute_e_series(case.g, pair, DEFAULT_MAX_STEPS))
}

fn reached_length(r: &ESeriesResult) -> Result<usize> {
    r.length.ok_or_else(|| unmet("E-series does not reach G"))
}

fn frobenius_divisibility(case: &Case) -> Result<Outcome> {
    let m = case.m.expect("divisor scope");
    let l = l_set(case.g, m);
    Ok(if l.len() as u64 % m == 0 {
        Outcome::Pass
    } else {
        fail_with(
            format!("|L_{m}| = {} is not a multiple of {m}", l.len()),
            vec![],
            vec![&l],
        )
    })
}

fn element_images(case: &Case) -> Result<Outcome> {
    let (g, pair) = (case.g, case.pair());
    require_exponent_mn(g, pair)?;
    let lm: Vec<Elem> = l_set(g, pair.m()).iter().collect();
    for n in g.normal_subgroups(case.caps.limits.normal_subgroups_cap)? {
        let (q, map) = g.quotient_unchecked(&n);
        for &x in &lm {
            let xn = map.project(x);
            let dm = map.image(&d_m_of_element(g, x, pair.m())?);
            if !dm.is_subset(&d_m_of_element(&q, xn, pair.m())?) {
                return Ok(fail_with(
                    format!("D_{}(x)N/N is not inside D_{}(xN)", pair.m(), pair.m()),
                    vec![x],
                    vec![&n],
                ));
            }
            let dmn = map.image(&d_mn_of_element(g, x, pair)?);
            if !dmn.is_subset(&d_mn_of_element(&q, xn, pair)?) {
                return Ok(fail_with(
                    format!("D_{{{pair}}}(x)N/N is not inside D_{{{pair}}}(xN)"),
                    vec![x],
                    vec![&n],
                ));
            }
        }
    }
    Ok(Outcome::Pass)
}

fn group_images(case: &Case) -> Result<Outcome> {
    let (g, pair) = (case.g, case.pair());
    require_exponent_mn(g, pair)?;
    let dm = d_m_set(g, pair.m());
    let dmn = d_mn_set(g, pair);
    for n in g.normal_subgroups(case.caps.limits.normal_subgroups_cap)? {
        let (q, map) = g.quotient_unchecked(&n);
        if !map.image(&dm).is_subset(&d_m_set(&q, pair.m())) {
            return Ok(fail_with(
                "D_m(G)N/N is not inside D_m(G/N)",
                vec![],
                vec![&n, &dm],
            ));
        }
        if !map.image(&dmn).is_subset(&d_mn_set(&q, pair)) {
            return Ok(fail_with(
                "D_{m,n}(G)N/N is not inside D_{m,n}(G/N)",
                vec![],
                vec![&n, &dmn],
            ));
        }
    }
    Ok(Outcome::Pass)
}

fn product_set(a: &ElementSet, b: &ElementSet) -> ElementSet {
    let second = b.parent_order();
    ElementSet::new(
        a.parent_order() * second,
        a.iter()
            .flat_map(|x| b.iter().map(move |y| Group::product_elem(second, x, y))),
    )
}

fn direct_products(case: &Case) -> Result<Outcome> {
    let (g, pair) = (case.g, case.pair());
    let h = case.h.expect("product scope");
    require_exponent_mn(g, pair)?;
    require_exponent_mn(h, pair)?;
    let gh = g.direct_product(h, case.caps.max_order)?;
    let dm = d_m_set(&gh, pair.m());
    let expected = product_set(&d_m_set(g, pair.m()), &d_m_set(h, pair.m()));
    if dm != expected {
        return Ok(fail_with(
            "D_m(GxH) != D_m(G) x D_m(H)",
            vec![],
            vec![&dm, &expected],
        ));
    }
    let dmn = d_mn_set(&gh, pair);
    let bound = product_set(&d_mn_set(g, pair), &d_mn_set(h, pair));
    if !dmn.is_subset(&bound) {
        return Ok(fail_with(
            "D_{m,n}(GxH) is not inside D_{m,n}(G) x D_{m,n}(H)",
            vec![],
            vec![&dmn, &bound],
        ));
    }
    Ok(Outcome::Pass)
}

fn subgroup_restriction(case: &Case) -> Result<Outcome> {
    let (g, pair) = (case.g, case.pair());
    require_exponent_mn(g, pair)?;
    let dm = d_m_set(g, pair.m());
    let dmn = d_mn_set(g, pair);
    for h in g.all_subgroups(case.caps.subgroup_cap)? {
        let (hg, members) = g.induced(&h);
        if hg.exponent() != pair.product() {
            continue;
        }
        if !localize(&members, &dm.intersection(&h)).is_subset(&d_m_set(&hg, pair.m())) {
            return Ok(fail_with(
                "D_m(G) n H is not inside D_m(H)",
                vec![],
                vec![&h],
            ));
        }
        if !localize(&members, &dmn.intersection(&h)).is_subset(&d_mn_set(&hg, pair)) {
            return Ok(fail_with(
                "D_{m,n}(G) n H is not inside D_{m,n}(H)",
                vec![],
                vec![&h],
            ));
        }
    }
    Ok(Outcome::Pass)
}

fn small_examples(case: &Case) -> Result<Outcome> {
    let (g, pair) = (case.g, case.pair());
    if pair != CoprimePair::new(3, 2)? {
        return Err(unmet("example uses (m, n) = (3, 2)"));
    }
    let dm = d_m_set(g, 3);
    let dmn = d_mn_set(g, pair);
    match g.order() {
        6 => {
            let a3 = l_set(g, 3);
            if a3.len() != 3 || dm != a3 || dmn != a3 {
                return Ok(fail_with(
                    "expected D_3(S3) = D_{3,2}(S3) = A3",
                    vec![],
                    vec![&dm, &dmn],
                ));
            }
        }
        36 => {
            let abelian = dm
                .iter()
                .all(|x| dm.iter().all(|y| g.mul(x, y) == g.mul(y, x)));
            if dm.len() != 9 || !abelian || dm.iter().any(|x| 3 % g.element_order(x) != 0) {
                return Ok(fail_with(
                    "expected D_3(S3xS3) of order 9 and exponent 3",
                    vec![],
                    vec![&dm],
                ));
            }
            if !trivial_set(&dmn) {
                return Ok(fail_with("expected D_{3,2}(S3xS3) = 1", vec![], vec![&dmn]));
            }
            // S3 x 1 keeps D_{3,2}(S3) = A3, which is not inside D_{3,2}(S3xS3)
            let factor = crate::catalog::build("S3")?;
            let embedded = ElementSet::new(
                g.order(),
                d_mn_set(&factor, pair)
                    .iter()
                    .map(|x| Group::product_elem(6, x, factor.identity())),
            );
            if embedded.is_subset(&dmn) {
                return Ok(fail_with(
                    "D_{3,2}(S3 x 1) unexpectedly lies in D_{3,2}(S3xS3)",
                    vec![],
                    vec![&embedded],
                ));
            }
        }
        _ => return Err(unmet("not one of the example groups")),
    }
    Ok(Outcome::Pass)
}

fn conjugation_invariance(case: &Case) -> Result<Outcome> {
    let (g, pair) = (case.g, case.pair());
    for (name, set) in [
        ("D_m", d_m_set(g, pair.m())),
        ("D_{m,n}", d_mn_set(g, pair)),
    ] {
        for &s in g.generators() {
            if let Some(x) = set.iter().find(|&x| !set.contains(g.conjugate(s, x))) {
                return Ok(fail_with(
                    format!("{name}(G) is not closed under conjugation"),
                    vec![s, x],
                    vec![&set],
                ));
            }
        }
    }
    Ok(Outcome::Pass)
}

fn closure(case: &Case) -> Result<Outcome> {
    let (g, pair) = (case.g, case.pair());
    require_order_mn(g, pair)?;
    for (name, set) in [
        ("D_m", d_m_set(g, pair.m())),
        ("D_{m,n}", d_mn_set(g, pair)),
    ] {
        for x in set.iter() {
            if let Some(y) = set.iter().find(|&y| !set.contains(g.mul(x, y))) {
                return Ok(fail_with(
                    format!("{name}(G) is not closed"),
                    vec![x, y],
                    vec![&set],
                ));
            }
        }
    }
    Ok(Outcome::Pass)
}

fn containment(case: &Case) -> Result<Outcome> {
    let (g, pair) = (case.g, case.pair());
    require_order_mn(g, pair)?;
    let dmn = d_mn_set(g, pair);
    let dm = d_m_set(g, pair.m());
    let outside = dmn.iter().find(|&x| !dm.contains(x));
    Ok(match outside {
        None => Outcome::Pass,
        Some(x) => fail_with("D_{m,n}(G) is not inside D_m(G)", vec![x], vec![&dmn, &dm]),
    })
}

fn proper(case: &Case) -> Result<Outcome> {
    let (g, pair) = (case.g, case.pair());
    require_order_mn(g, pair)?;
    Ok(if d_mn_set(g, pair).len() < g.order() {
        Outcome::Pass
    } else {
        fail("D_{m,n}(G) = G")
    })
}

fn factor_quotient_trivial(case: &Case) -> Result<Outcome> {
    let (g, pair) = (case.g, case.pair());
    require_order_mn(g, pair)?;
    let d = subgroup(g, &d_mn_set(g, pair), "D_{m,n}(G)")?;
    let (q, map) = g.quotient(&d)?;
    let again = d_mn_set(&q, pair);
    Ok(if trivial_set(&again) {
        Outcome::Pass
    } else {
        let lifted = map.preimage(&again);
        fail_with("D_{m,n}(G/D) != 1", vec![], vec![&d, &lifted])
    })
}

fn normal_nilpotent(case: &Case) -> Result<Outcome> {
    let (g, pair) = (case.g, case.pair());
    require_order_mn(g, pair)?;
    let d = subgroup(g, &d_mn_set(g, pair), "D_{m,n}(G)")?;
    if !g.is_normal(&d) {
        return Ok(fail_with("D_{m,n}(G) is not normal", vec![], vec![&d]));
    }
    Ok(if g.induced(&d).0.is_nilpotent() {
        Outcome::Pass
    } else {
        fail_with("D_{m,n}(G) is not nilpotent", vec![], vec![&d])
    })
}

fn nontrivial_d(g: &Group, pair: CoprimePair) -> Result<Subgroup> {
    let d = subgroup(g, &d_mn_set(g, pair), "D_{m,n}(G)")?;
    if d.is_trivial() {
        return Err(unmet("D_{m,n}(G) = 1"));
    }
    Ok(d)
}

fn frobenius_over_d(case: &Case) -> Result<Outcome> {
    let (g, pair) = (case.g, case.pair());
    require_order_mn(g, pair)?;
    let d = nontrivial_d(g, pair)?;
    for x in l_set(g, pair.n()).iter().filter(|&x| x != g.identity()) {
        let w = g.closure_from(&d, &[x]);
        if !is_frobenius_kernel_in(g, &w, &d) {
            return Ok(fail_with(
                "<D, x> is not Frobenius with kernel D",
                vec![x],
                vec![&d, &w],
            ));
        }
    }
    Ok(Outcome::Pass)
}

fn frobenius_kernel_order(case: &Case) -> Result<Option<Subgroup>> {
    Ok(find_frobenius(case.g, &case.caps.limits)?.map(|w| w.kernel))
}

fn fro1(case: &Case) -> Result<Outcome> {
    let (g, pair) = (case.g, case.pair());
    require_order_mn(g, pair)?;
    let condition = fro1_condition(g, pair)?;
    let kernel = frobenius_kernel_order(case)?;
    let frobenius = kernel
        .as_ref()
        .is_some_and(|k| k.order() as u64 == pair.m());
    if condition == frobenius {
        return Ok(Outcome::Pass);
    }
    Ok(match fro1_violation(g, pair)? {
        Some((x, y)) => fail_with(
            "G is Frobenius with kernel of order m but the order condition fails",
            vec![x, y],
            vec![],
        ),
        None => fail_with(
            "the order condition holds but G is not Frobenius with kernel of order m",
            vec![],
            kernel.iter().map(|k| k.as_set()).collect(),
        ),
    })
}

fn fro1_intro(case: &Case) -> Result<Outcome> {
    let (g, pair) = (case.g, case.pair());
    require_order_mn(g, pair)?;
    let violation = fro1_all_pairs_violation(g);
    let frobenius = frobenius_kernel_order(case)?.is_some_and(|k| k.order() as u64 == pair.m());
    Ok(match (violation, frobenius) {
        (None, true) | (Some(_), false) => Outcome::Pass,
        (Some((x, y)), true) => fail_with(
            "G is Frobenius with kernel of order m but the all-pairs condition fails",
            vec![x, y],
            vec![],
        ),
        (None, false) => {
            fail("the all-pairs condition holds but G is not Frobenius with kernel of order m")
        }
    })
}

/// Complements of a normal `k`: every subgroup of the right order meeting
/// `k` trivially when the lattice is small enough, otherwise only a Sylow
/// subgroup when the index is a prime power.
fn complements(case: &Case, k: &Subgroup) -> Result<Vec<Subgroup>> {
    let g = case.g;
    let index = g.order() / k.order();
    let candidates = if g.order() <= case.caps.limits.all_subgroups_cap {
        g.subgroups_of_order(index, case.caps.limits.all_subgroups_cap)?
    } else {
        match arith::prime_divisors(index as u64).as_slice() {
            [p] => vec![g.sylow(*p)]
                .into_iter()
                .filter(|s| s.order() == index)
                .collect(),
            _ => vec![],
        }
    };
    Ok(candidates
        .into_iter()
        .filter(|h| trivial_set(&h.intersection(k)))
        .collect())
}

fn order_laws(case: &Case) -> Result<Outcome> {
    let g = case.g;
    let mut checked = 0;
    for k in g.normal_subgroups(case.caps.limits.normal_subgroups_cap)? {
        if k.is_trivial() || g.is_whole(&k) {
            continue;
        }
        for h in complements(case, &k)? {
            checked += 1;
            let report = semidirect_order_law_check(g, &k, &h)?;
            if let Some((x, y)) = report.divisibility_violation {
                return Ok(fail_with(
                    "o(y) does not divide o(xy)",
                    vec![x, y],
                    vec![&k, &h],
                ));
            }
            if report.frobenius {
                if let Some((x, y)) = report.equality_violation {
                    return Ok(fail_with(
                        "K is a Frobenius kernel but o(xy) != o(y)",
                        vec![x, y],
                        vec![&k, &h],
                    ));
                }
            }
        }
    }
    if checked == 0 {
        return Err(unmet("no split normal subgroup found"));
    }
    Ok(Outcome::Pass)
}

fn sylow_shape(case: &Case) -> Result<Outcome> {
    let (g, pair) = (case.g, case.pair());
    require_order_mn(g, pair)?;
    nontrivial_d(g, pair)?;
    let mut two_ok = true;
    for p in pair.pi_n() {
        let s = g.sylow(p);
        if !cyclic_or_generalized_quaternion(g, &s)? {
            return Ok(fail_with(
                format!("Sylow {p}-subgroup is neither cyclic nor generalized quaternion"),
                vec![],
                vec![&s],
            ));
        }
        if p == 2 {
            let cyclic = s.iter().any(|x| g.element_order(x) == s.order() as u64);
            two_ok = cyclic || g.order() % 3 != 0;
        }
    }
    if pair.n() % 2 != 0 || !two_ok || g.order() > case.caps.limits.all_subgroups_cap {
        return Ok(Outcome::Pass);
    }
    let cap = case.caps.limits.all_subgroups_cap;
    let has_order =
        |k: u64| -> Result<bool> { Ok(!g.subgroups_of_order(k as usize, cap)?.is_empty()) };
    if !has_order(pair.m())? || !has_order(pair.n())? {
        return Ok(fail("no Hall subgroups K, H of orders m and n"));
    }
    Ok(Outcome::Pass)
}

fn three_step(case: &Case) -> Result<Outcome> {
    let (g, pair) = (case.g, case.pair());
    require_order_mn(g, pair)?;
    let d = subgroup(g, &d_mn_set(g, pair), "D")?;
    let (q1, map1) = g.quotient(&d)?;
    let u = g.pull_back(&map1, &d_mn_set(&q1, pair.swapped()));
    let (q2, map2) = g.quotient(&u)?;
    let v = g.pull_back(&map2, &d_mn_set(&q2, pair));
    let (q3, map3) = g.quotient(&v)?;
    let last = d_mn_set(&q3, pair);
    if !trivial_set(&last) {
        return Ok(fail_with(
            "D_{m,n}(G/V) != 1",
            vec![],
            vec![&v, &map3.preimage(&last)],
        ));
    }
    if u != v {
        let (vg, _) = g.induced(&v);
        if find_two_frobenius(&vg, &case.caps.limits)?.is_none() {
            return Ok(fail_with(
                "U != V but V is not 2-Frobenius",
                vec![],
                vec![&d, &u, &v],
            ));
        }
    }
    if u != d && !is_frobenius_kernel_in(g, &u, &d) {
        return Ok(fail_with(
            "U != D but U is not Frobenius with kernel D",
            vec![],
            vec![&d, &u],
        ));
    }
    Ok(Outcome::Pass)
}

fn min1(case: &Case) -> Result<Outcome> {
    let (g, pair) = (case.g, case.pair());
    require_order_mn(g, pair)?;
    let nilpotent = g.is_nilpotent();
    let offender = g
        .all_subgroups(case.caps.subgroup_cap)?
        .into_iter()
        .find(|m| !trivial_set(&d_mod_center(g, m, pair)));
    Ok(match (nilpotent, offender) {
        (true, None) | (false, Some(_)) => Outcome::Pass,
        (true, Some(m)) => fail_with("G is nilpotent but D_{m,n}(M/Z(M)) != 1", vec![], vec![&m]),
        (false, None) => fail("D_{m,n}(M/Z(M)) = 1 for every M but G is not nilpotent"),
    })
}

fn min2(case: &Case) -> Result<Outcome> {
    let (g, pair) = (case.g, case.pair());
    require_order_mn(g, pair)?;
    let d = nontrivial_d(g, pair)?;
    for m in g.all_subgroups(case.caps.subgroup_cap)? {
        if g.is_whole(&m) || g.induced(&m).0.is_nilpotent() {
            continue;
        }
        if !trivial_set(&d_mod_center(g, &m, pair)) {
            return Err(unmet("a proper non-nilpotent M has D_{m,n}(M/Z(M)) != 1"));
        }
    }
    Ok(if is_frobenius_with_kernel(g, &d) {
        Outcome::Pass
    } else {
        fail_with(
            "G is not Frobenius with kernel D_{m,n}(G)",
            vec![],
            vec![&d],
        )
    })
}

fn nilpotent_trivial(case: &Case) -> Result<Outcome> {
    let (g, pair) = (case.g, case.pair());
    require_order_mn(g, pair)?;
    if !g.is_nilpotent() {
        return Err(unmet("G is not nilpotent"));
    }
    let d = d_mn_set(g, pair);
    Ok(if trivial_set(&d) {
        Outcome::Pass
    } else {
        fail_with("D_{m,n}(G) != 1", vec![], vec![&d])
    })
}

fn length_two(case: &Case) -> Result<Outcome> {
    let r = series(case)?;
    let nilpotent = case.g.is_nilpotent();
    Ok(if (r.length == Some(2)) == nilpotent {
        Outcome::Pass
    } else {
        fail(format!("length {:?} but nilpotent = {nilpotent}", r.length))
    })
}

fn term_sets(r: &ESeriesResult) -> Vec<&ElementSet> {
    r.terms.iter().map(|t| t.as_set()).collect()
}

fn length_classes(case: &Case) -> Result<Outcome> {
    let r = series(case)?;
    let g = case.g;
    let ok = match reached_length(&r)? {
        2 => g.is_nilpotent(),
        3 => find_frobenius(g, &case.caps.limits)?.is_some(),
        4 => find_two_frobenius(g, &case.caps.limits)?.is_some(),
        other => return Err(unmet(format!("length {other} is outside 2 to 4"))),
    };
    Ok(if ok {
        Outcome::Pass
    } else {
        fail_with(
            format!(
                "length {} but G is not {}",
                r.length.unwrap(),
                r.classification
            ),
            vec![],
            term_sets(&r),
        )
    })
}

fn length_bound(case: &Case) -> Result<Outcome> {
    let r = series(case)?;
    let length = reached_length(&r)?;
    Ok(if length <= 4 {
        Outcome::Pass
    } else {
        fail_with(format!("length {length} > 4"), vec![], term_sets(&r))
    })
}

fn stabilization(case: &Case) -> Result<Outcome> {
    let r = series(case)?;
    Ok(if stabilization_check(case.g, case.pair())? {
        Outcome::Pass
    } else {
        fail_with("E_3 != E_4", vec![], term_sets(&r))
    })
}

fn alternation(case: &Case) -> Result<Outcome> {
    let (g, pair) = (case.g, case.pair());
    require_order_mn(g, pair)?;
    let d = nontrivial_d(g, pair)?;
    let (q, map) = g.quotient(&d)?;
    let again = d_mn_set(&q, pair);
    Ok(if trivial_set(&again) {
        Outcome::Pass
    } else {
        fail_with("D_{m,n}(G/D) != 1", vec![], vec![&d, &map.preimage(&again)])
    })
}

fn solvable(case: &Case) -> Result<Outcome> {
    let r = series(case)?;
    reached_length(&r)?;
    Ok(if case.g.is_solvable() {
        Outcome::Pass
    } else {
        fail_with(
            "series reaches G but G is not solvable",
            vec![],
            term_sets(&r),
        )
    })
}

fn simple(case: &Case) -> Result<Outcome> {
    let g = case.g;
    let normals = g.normal_subgroups(case.caps.limits.normal_subgroups_cap)?;
    if g.is_abelian() || normals.len() != 2 {
        return Err(unmet("G is not a non-abelian simple group"));
    }
    let r = series(case)?;
    Ok(match r.terms.iter().find(|t| !t.is_trivial()) {
        None => Outcome::Pass,
        Some(t) => fail_with("nontrivial term in a simple group", vec![], vec![t]),
    })
}

fn fitting_height(case: &Case) -> Result<Outcome> {
    let r = series(case)?;
    reached_length(&r)?;
    Ok(match case.g.fitting_height() {
        Some(h) if h <= 4 => Outcome::Pass,
        h => fail(format!("series reaches G but Fitting height is {h:?}")),
    })
}

fn series_examples(case: &Case) -> Result<Outcome> {
    let (g, pair) = (case.g, case.pair());
    let expected: (&[usize], usize) = match (g.order(), pair.m(), pair.n()) {
        (6, 3, 2) => (&[1, 3, 6], 3),
        (24, 8, 3) => (&[1, 4, 12, 24], 4),
        _ => return Err(unmet("not one of the example parameter sets")),
    };
    let r = compute_e_series(g, pair, DEFAULT_MAX_STEPS);
    if r.orders() != expected.0 || r.length != Some(expected.1) {
        return Ok(fail_with(
            format!("orders {:?}, length {:?}", r.orders(), r.length),
            vec![],
            term_sets(&r),
        ));
    }
    // each term is normal, and E_1 is elementary abelian
    let e1 = &r.terms[1];
    if r.terms.iter().any(|t| !g.is_normal(t))
        || e1.iter().any(|x| {
            pair.m() % g.element_order(x) != 0 || !e1.iter().all(|y| g.mul(x, y) == g.mul(y, x))
        })
    {
        return Ok(fail_with(
            "unexpected term structure",
            vec![],
            term_sets(&r),
        ));
    }
    Ok(Outcome::Pass)
}

fn baumslag_wiegold(case: &Case) -> Result<Outcome> {
    let g = case.g;
    let orders: Vec<u64> = g.elements().map(|x| g.element_order(x)).collect();
    let mut witness = None;
    'outer: for x in g.elements() {
        for y in g.elements() {
            let (ox, oy) = (orders[x as usize], orders[y as usize]);
            if arith::gcd(ox, oy) == 1 && orders[g.mul(x, y) as usize] != ox * oy {
                witness = Some((x, y));
                break 'outer;
            }
        }
    }
    let nilpotent = g.is_nilpotent();
    Ok(match (nilpotent, witness) {
        (true, None) | (false, Some(_)) => Outcome::Pass,
        (true, Some((x, y))) => fail_with("nilpotent but o(xy) != o(x)o(y)", vec![x, y], vec![]),
        (false, None) => fail("order products are multiplicative but G is not nilpotent"),
    })
}

fn sylow_oracle(case: &Case) -> Result<Outcome> {
    let g = case.g;
    let subgroups = g.all_subgroups(case.caps.limits.all_subgroups_cap)?;
    for p in arith::prime_divisors(g.order() as u64) {
        let s = g.sylow(p);
        let largest = subgroups
            .iter()
            .filter(|h| {
                arith::prime_divisors(h.order() as u64)
                    .iter()
                    .all(|&q| q == p)
            })
            .map(Subgroup::order)
            .max()
            .unwrap_or(1);
        if s.order() as u64 != arith::p_part(g.order() as u64, p)
            || s.order() != largest
            || !subgroups.contains(&s)
        {
            return Ok(fail_with(
                format!(
                    "Sylow {p}-subgroup of order {} (largest {p}-subgroup {largest})",
                    s.order()
                ),
                vec![],
                vec![&s],
            ));
        }
    }
    Ok(Outcome::Pass)
}

fn fitting_oracle(case: &Case) -> Result<Outcome> {
    let g = case.g;
    let f = g.fitting();
    if !g.is_normal(&f) || !g.induced(&f).0.is_nilpotent() {
        return Ok(fail_with(
            "Fitting subgroup is not a normal nilpotent subgroup",
            vec![],
            vec![&f],
        ));
    }
    for h in g.all_subgroups(case.caps.limits.all_subgroups_cap)? {
        if g.is_normal(&h) && !h.is_subset(&f) && g.induced(&h).0.is_nilpotent() {
            return Ok(fail_with(
                "a normal nilpotent subgroup is outside the Fitting subgroup",
                vec![],
                vec![&f, &h],
            ));
        }
    }
    Ok(Outcome::Pass)
}
