//! Brute-force cross-checks. Each oracle recomputes a value from the bare
//! definitions (powers, coset arithmetic, exhaustive subgroup lists) without
//! going through the code path it checks.

use grouptool::catalog::{self, CatalogEntry};
use grouptool::dsub::{d_m_set, d_mn_set, l_set, CoprimePair};
use grouptool::eseries::{compute_e_series, coprime_factorizations, DEFAULT_MAX_STEPS};
use grouptool::structure::{find_two_frobenius, is_frobenius_with_kernel};
use grouptool::{arith, Elem, ElementSet, Group, Subgroup};

fn corpus(max: usize) -> Vec<(CatalogEntry, Group)> {
    catalog::standard_corpus(max)
        .into_iter()
        .map(|e| {
            let g = e.build().unwrap();
            (e, g)
        })
        .collect()
}

fn is_one(g: &Group, x: Elem) -> bool {
    x == g.identity()
}

fn kills(g: &Group, x: Elem, k: u64) -> bool {
    is_one(g, g.pow(x, k))
}

fn pairs_for(g: &Group) -> Vec<(u64, u64)> {
    let mut out = arith::hall_splits(g.order() as u64);
    out.extend(arith::hall_splits(g.exponent()));
    out.sort_unstable();
    out.dedup();
    out
}

#[test]
fn operator_sets_match_definitions() {
    for (e, g) in corpus(72) {
        for (m, n) in pairs_for(&g) {
            let lm: Vec<Elem> = g.elements().filter(|&x| kills(&g, x, m)).collect();
            let ln: Vec<Elem> = g
                .elements()
                .filter(|&u| kills(&g, u, n) && !is_one(&g, u))
                .collect();
            assert_eq!(l_set(&g, m).members(), lm.as_slice(), "{} L_{m}", e.name);

            let dm: Vec<Elem> = lm
                .iter()
                .copied()
                .filter(|&x| lm.iter().all(|&y| kills(&g, g.mul(x, y), m)))
                .collect();
            assert_eq!(d_m_set(&g, m).members(), dm.as_slice(), "{} D_{m}", e.name);

            let dmn: Vec<Elem> = if ln.is_empty() {
                vec![g.identity()]
            } else {
                lm.iter()
                    .copied()
                    .filter(|&x| ln.iter().all(|&u| kills(&g, g.mul(x, u), n)))
                    .collect()
            };
            let pair = CoprimePair::new(m, n).unwrap();
            assert_eq!(
                d_mn_set(&g, pair).members(),
                dmn.as_slice(),
                "{} D_{{{m},{n}}}",
                e.name
            );
        }
    }
}

/// `N` normal by conjugating every member by every element.
fn normal_by_conjugation(g: &Group, h: &Subgroup) -> bool {
    g.elements()
        .all(|a| h.iter().all(|x| h.contains(g.mul(g.mul(a, x), g.inv(a)))))
}

fn p_power(k: usize, p: u64) -> bool {
    arith::prime_divisors(k as u64).iter().all(|&q| q == p)
}

#[test]
fn nilpotent_iff_every_sylow_is_normal() {
    for (e, g) in corpus(96) {
        let subgroups = g.all_subgroups(96).unwrap();
        let sylows_normal = arith::prime_divisors(g.order() as u64)
            .into_iter()
            .all(|p| {
                let top = arith::p_part(g.order() as u64, p) as usize;
                subgroups
                    .iter()
                    .filter(|h| h.order() == top && p_power(h.order(), p))
                    .all(|h| normal_by_conjugation(&g, h))
            });
        assert_eq!(g.is_nilpotent(), sylows_normal, "{}", e.name);
    }
}

#[test]
fn fitting_is_join_of_normal_nilpotent_subgroups() {
    for (e, g) in corpus(96) {
        let mut join = g.trivial_subgroup();
        for h in g.all_subgroups(96).unwrap() {
            if normal_by_conjugation(&g, &h) && g.induced(&h).0.is_nilpotent() {
                join = g.join(&join, &h);
            }
        }
        assert_eq!(g.fitting(), join, "{}", e.name);
    }
}

#[test]
fn normal_subgroups_match_filtered_lattice() {
    for (e, g) in corpus(96) {
        let filtered: Vec<Subgroup> = g
            .all_subgroups(96)
            .unwrap()
            .into_iter()
            .filter(|h| normal_by_conjugation(&g, h))
            .collect();
        assert_eq!(g.normal_subgroups(512).unwrap(), filtered, "{}", e.name);
    }
}

/// Frobenius by the complement definition: some `H` with `|H| = |G:K|`,
/// `H n K = 1`, and `C_K(h) = 1` for every `h != 1` in `H`.
fn frobenius_by_complement(g: &Group, within: &[Subgroup], whole: &Subgroup, k: &Subgroup) -> bool {
    if k.order() <= 1 || k.order() >= whole.order() || !k.is_subset(whole) {
        return false;
    }
    let normal = whole
        .iter()
        .all(|a| k.iter().all(|x| k.contains(g.mul(g.mul(a, x), g.inv(a)))));
    if !normal {
        return false;
    }
    let index = whole.order() / k.order();
    within
        .iter()
        .filter(|h| h.order() == index && h.is_subset(whole) && h.intersection(k).len() == 1)
        .any(|h| {
            h.iter().filter(|&y| !is_one(g, y)).all(|y| {
                k.iter()
                    .filter(|&x| !is_one(g, x))
                    .all(|x| g.mul(x, y) != g.mul(y, x))
            })
        })
}

#[test]
fn frobenius_kernel_test_matches_complement_definition() {
    for (e, g) in corpus(72) {
        let subgroups = g.all_subgroups(96).unwrap();
        let whole = g.whole();
        for k in g.normal_subgroups(512).unwrap() {
            assert_eq!(
                is_frobenius_with_kernel(&g, &k),
                frobenius_by_complement(&g, &subgroups, &whole, &k),
                "{} kernel of order {}",
                e.name,
                k.order()
            );
        }
    }
}

#[test]
fn two_frobenius_matches_definition() {
    for (e, g) in corpus(48) {
        let subgroups = g.all_subgroups(96).unwrap();
        let normals: Vec<&Subgroup> = subgroups
            .iter()
            .filter(|h| normal_by_conjugation(&g, h))
            .collect();
        let mut expected = false;
        'search: for k in &normals {
            for l in &normals {
                if !frobenius_by_complement(&g, &subgroups, l, k) {
                    continue;
                }
                let (q, map) = g.quotient(k).unwrap();
                let image = q.as_subgroup(&map.image(l)).unwrap();
                if frobenius_by_complement(&q, &q.all_subgroups(96).unwrap(), &q.whole(), &image) {
                    expected = true;
                    break 'search;
                }
            }
        }
        assert_eq!(
            find_two_frobenius(&g, &Default::default())
                .unwrap()
                .is_some(),
            expected,
            "{}",
            e.name
        );
    }
}

/// Coset arithmetic in `G` itself: `o(xE)` is the least `t` with `x^t` in `E`.
fn coset_order(g: &Group, e: &ElementSet, x: Elem) -> u64 {
    let mut y = x;
    let mut t = 1;
    while !e.contains(y) {
        y = g.mul(y, x);
        t += 1;
    }
    t
}

/// `G/E` nilpotent iff coset orders multiply on coprime pairs.
fn quotient_nilpotent(g: &Group, e: &ElementSet) -> bool {
    g.elements().all(|x| {
        g.elements().all(|y| {
            let (ox, oy) = (coset_order(g, e, x), coset_order(g, e, y));
            arith::gcd(ox, oy) != 1 || coset_order(g, e, g.mul(x, y)) == ox * oy
        })
    })
}

/// Preimage of `D_{m,n}(G/E)`, evaluated on representatives.
fn operator_preimage(g: &Group, e: &ElementSet, m: u64, n: u64) -> ElementSet {
    let nontrivial_n: Vec<Elem> = g
        .elements()
        .filter(|&u| !e.contains(u) && n % coset_order(g, e, u) == 0)
        .collect();
    if nontrivial_n.is_empty() {
        return e.clone();
    }
    ElementSet::new(
        g.order(),
        g.elements().filter(|&x| {
            m % coset_order(g, e, x) == 0
                && nontrivial_n
                    .iter()
                    .all(|&u| n % coset_order(g, e, g.mul(x, u)) == 0)
        }),
    )
}

#[test]
fn e_series_matches_coset_recomputation() {
    for (e, g) in corpus(60) {
        for pair in coprime_factorizations(g.order() as u64) {
            let r = compute_e_series(&g, pair, DEFAULT_MAX_STEPS);
            let mut term = ElementSet::new(g.order(), [g.identity()]);
            for k in 1..r.terms.len() {
                term = if quotient_nilpotent(&g, &term) {
                    ElementSet::new(g.order(), g.elements())
                } else if k % 2 == 1 {
                    operator_preimage(&g, &term, pair.m(), pair.n())
                } else {
                    operator_preimage(&g, &term, pair.n(), pair.m())
                };
                assert_eq!(r.terms[k].as_set(), &term, "{} {pair} E_{k}", e.name);
            }
        }
    }
}

#[test]
fn subgroup_counts_of_known_groups() {
    let counts = [
        ("C12", 6),
        ("D12", 16),
        ("Q16", 11),
        ("A4", 10),
        ("S4", 30),
        ("C2xC2xC2", 16),
        ("F21", 10),
        ("A5", 59),
    ];
    for (name, count) in counts {
        let g = catalog::build(name).unwrap();
        assert_eq!(g.all_subgroups(96).unwrap().len(), count, "{name}");
    }
}

#[test]
fn fitting_heights_of_known_groups() {
    let heights = [
        ("C1", Some(0)),
        ("C30", Some(1)),
        ("S3", Some(2)),
        ("A4", Some(2)),
        ("S4", Some(3)),
        ("S4xC3", Some(3)),
        ("A5", None),
    ];
    for (name, h) in heights {
        assert_eq!(catalog::build(name).unwrap().fitting_height(), h, "{name}");
    }
}
