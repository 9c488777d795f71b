use std::sync::OnceLock;

use proptest::prelude::*;

use grouptool::catalog;
use grouptool::dsub::{d_m_set, d_mn_set, l_set, CoprimePair};
use grouptool::group::{parse_cycle_notation, print_cycle_notation, Perm};
use grouptool::{arith, Elem, Group, Subgroup};

fn groups() -> &'static [Group] {
    static GROUPS: OnceLock<Vec<Group>> = OnceLock::new();
    GROUPS.get_or_init(|| {
        catalog::standard_corpus(120)
            .iter()
            .map(|e| e.build().unwrap())
            .collect()
    })
}

fn any_group() -> impl Strategy<Value = &'static Group> {
    prop::sample::select(groups().iter().collect::<Vec<_>>())
}

fn perm_strategy() -> impl Strategy<Value = Perm> {
    (1usize..10).prop_flat_map(|n| {
        Just((0..n).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(|images| Perm::from_images(images).unwrap())
    })
}

fn element(g: &Group, seed: usize) -> Elem {
    (seed % g.order()) as Elem
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cycle_notation_round_trips(perms in prop::collection::vec(perm_strategy(), 1..4)) {
        let text = print_cycle_notation(&perms);
        let parsed = parse_cycle_notation(&text).unwrap();
        prop_assert_eq!(parsed.len(), perms.len());
        for (a, b) in parsed.iter().zip(&perms) {
            let degree = a.degree().max(b.degree());
            prop_assert_eq!(a.padded(degree), b.padded(degree));
        }
    }

    #[test]
    fn quotient_map_is_a_homomorphism(g in any_group(), pick in any::<usize>(), a in any::<usize>(), b in any::<usize>()) {
        let normals = g.normal_subgroups(512).unwrap();
        let n = &normals[pick % normals.len()];
        let (q, map) = g.quotient(n).unwrap();
        prop_assert_eq!(q.order() * n.order(), g.order());
        let (x, y) = (element(g, a), element(g, b));
        prop_assert_eq!(map.project(g.mul(x, y)), q.mul(map.project(x), map.project(y)));
        prop_assert_eq!(map.project(x) == q.identity(), n.contains(x));
    }

    #[test]
    fn subgroup_orders_divide_group_order(g in any_group(), seeds in prop::collection::vec(any::<usize>(), 1..4)) {
        let items: Vec<Elem> = seeds.iter().map(|&s| element(g, s)).collect();
        let h: Subgroup = g.closure_of(&items);
        prop_assert_eq!(g.order() % h.order(), 0);
        for &x in &items {
            prop_assert_eq!(g.order() as u64 % g.element_order(x), 0);
        }
    }

    #[test]
    fn operator_sets_nest(g in any_group(), pick in any::<usize>()) {
        let splits = arith::hall_splits(g.order() as u64);
        let (m, n) = splits[pick % splits.len()];
        let pair = CoprimePair::new(m, n).unwrap();
        let lm = l_set(g, m);
        let dm = d_m_set(g, m);
        let dmn = d_mn_set(g, pair);
        prop_assert!(dmn.is_subset(&dm));
        prop_assert!(dm.is_subset(&lm));
        prop_assert!(g.as_subgroup(&dm).is_some());
        prop_assert!(g.as_subgroup(&dmn).is_some());
        prop_assert_eq!(lm.len() as u64 % m, 0);
    }

    #[test]
    fn operator_subgroups_are_normal(g in any_group(), pick in any::<usize>()) {
        let splits = arith::hall_splits(g.order() as u64);
        let (m, n) = splits[pick % splits.len()];
        let pair = CoprimePair::new(m, n).unwrap();
        for set in [d_m_set(g, m), d_mn_set(g, pair)] {
            let h = g.as_subgroup(&set).unwrap();
            prop_assert!(g.is_normal(&h));
        }
    }
}
