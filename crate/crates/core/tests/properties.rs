use std::sync::{Arc, OnceLock};

use cwfkit_core::catalog::{self, enumerate_cwf, enumerate_split_typecat, skeletonize};
use cwfkit_core::presheaf::all_presheaves;
use cwfkit_core::relu::{
    cwf_from_rep_gaunt, cwf_to_relu, forget, identity_square, is_weak_relative_universe, relu_to_cwf, rep_check,
    transfer_universe_split, yoneda_data,
};
use cwfkit_core::structures::{
    is_compatible, qq_from_term, term_from_qq, term_structure_iso, verify_unique_compatible_qq,
};
use cwfkit_core::{CwfStructure, FinCat, FinFunctor, SplitTypeCatStructure};
use proptest::prelude::*;

fn categories() -> &'static [(String, Arc<FinCat>)] {
    static CATS: OnceLock<Vec<(String, Arc<FinCat>)>> = OnceLock::new();
    CATS.get_or_init(|| {
        let mut out: Vec<(String, Arc<FinCat>)> = catalog::suite_categories()
            .into_iter()
            .map(|(n, c)| (n.to_string(), Arc::new(c)))
            .collect();
        out.push(("three-iso".into(), Arc::new(catalog::three_with_iso_pair())));
        out.push(("chain(3)".into(), Arc::new(catalog::chain(3))));
        out.push(("discrete(2)".into(), Arc::new(catalog::discrete(2))));
        out.push(("idempotent".into(), Arc::new(catalog::monoid(&[vec![0, 1], vec![1, 1]]).unwrap())));
        out.push((
            "parallel".into(),
            Arc::new(catalog::free_category(2, &[(0, 1), (0, 1)]).unwrap()),
        ));
        out
    })
}

fn cwfs() -> &'static [Vec<CwfStructure>] {
    static CWFS: OnceLock<Vec<Vec<CwfStructure>>> = OnceLock::new();
    CWFS.get_or_init(|| {
        categories()
            .iter()
            .map(|(_, c)| if c.objects() <= 3 { enumerate_cwf(c, 1) } else { Vec::new() })
            .collect()
    })
}

fn stys() -> &'static [Vec<SplitTypeCatStructure>] {
    static STYS: OnceLock<Vec<Vec<SplitTypeCatStructure>>> = OnceLock::new();
    STYS.get_or_init(|| {
        categories()
            .iter()
            .map(|(_, c)| if c.objects() <= 3 { enumerate_split_typecat(c, 1) } else { Vec::new() })
            .collect()
    })
}

fn pick<T>(list: &[T], seed: usize) -> Option<&T> {
    (!list.is_empty()).then(|| &list[seed % list.len()])
}

/// Searches for an isomorphism of categories: an object bijection and
/// hom-wise arrow bijections that respect identities and composition.
fn isomorphic(a: &FinCat, b: &FinCat) -> bool {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    fn extend(a: &FinCat, b: &FinCat, obj: &[usize], map: &mut Vec<Option<usize>>, f: usize) -> bool {
        if f == a.arrow_count() {
            return a
                .compose_entries()
                .into_iter()
                .all(|(g, h, hg)| b.then(map[h].unwrap(), map[g].unwrap()) == map[hg].unwrap());
        }
        let (x, y) = (obj[a.src(f)], obj[a.dst(f)]);
        let candidates: Vec<usize> = if a.is_identity(f) {
            vec![b.identity(x)]
        } else {
            b.hom(x, y).iter().copied().filter(|&g| !b.is_identity(g)).collect()
        };
        for g in candidates {
            if map.contains(&Some(g)) {
                continue;
            }
            map[f] = Some(g);
            if extend(a, b, obj, map, f + 1) {
                return true;
            }
        }
        map[f] = None;
        false
    }

    if a.objects() != b.objects() || a.arrow_count() != b.arrow_count() {
        return false;
    }
    perms(a.objects()).into_iter().any(|obj| {
        let homs_match = (0..a.objects())
            .all(|x| (0..a.objects()).all(|y| a.hom(x, y).len() == b.hom(obj[x], obj[y]).len()));
        homs_match && extend(a, b, &obj, &mut vec![None; a.arrow_count()], 0)
    })
}

#[test]
fn catalog_categories_are_valid() {
    for (name, c) in categories() {
        assert!(c.check().is_empty(), "{name}");
    }
}

/// The two-element monoids swap into each other under a single entry change;
/// every other valid mutant is isomorphic to its original.
#[test]
fn valid_non_isomorphic_mutants_are_exactly_the_monoid_flips() {
    let mut found = Vec::new();
    for (name, c) in categories() {
        for (g, f, _) in c.compose_entries() {
            for v in 0..c.arrow_count() {
                let m = c.with_composite(f, g, v).unwrap();
                if m.check().is_empty() && !isomorphic(c, &m) {
                    found.push((name.as_str(), f, g, v));
                }
            }
        }
    }
    assert_eq!(found, vec![("z2", 1, 1, 1), ("idempotent", 1, 1, 0)]);
}

#[test]
fn isomorphism_search_sees_relabelling() {
    let a = catalog::free_category(2, &[(0, 1)]).unwrap();
    let b = catalog::free_category(2, &[(1, 0)]).unwrap();
    assert!(isomorphic(&a, &b));
    assert!(!isomorphic(&catalog::z2(), &catalog::monoid(&[vec![0, 1], vec![1, 1]]).unwrap()));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn composition_mutants_fail_or_are_isomorphic(which in 0usize..64, entry in 0usize..256, value in 0usize..64) {
        let (_, c) = &categories()[which % categories().len()];
        let entries = c.compose_entries();
        let (g, f, _) = entries[entry % entries.len()];
        let m = c.with_composite(f, g, value % c.arrow_count()).unwrap();
        let two_element_monoid = c.objects() == 1 && c.arrow_count() == 2;
        prop_assert!(!m.check().is_empty() || isomorphic(c, &m) || two_element_monoid);
    }

    #[test]
    fn inverse_of_an_inverse(which in 0usize..64, arrow in 0usize..64) {
        let (_, c) = &categories()[which % categories().len()];
        let f = arrow % c.arrow_count();
        if let Some(g) = c.is_iso(f) {
            prop_assert_eq!(c.is_iso(g), Some(f));
        }
    }

    #[test]
    fn identity_functor_is_a_weak_equivalence(which in 0usize..64) {
        let (_, c) = &categories()[which % categories().len()];
        let props = FinFunctor::identity(c.clone()).properties();
        prop_assert!(props.full && props.faithful);
        let split = props.split_ess_surj.unwrap();
        prop_assert!(split.iter().enumerate().all(|(d, &(x, u))| x == d && u == c.identity(d)));
    }

    #[test]
    fn skeleton_is_idempotent_and_an_equivalence(which in 0usize..64) {
        let (_, c) = &categories()[which % categories().len()];
        let sk = skeletonize(c);
        prop_assert!(sk.check().is_empty());
        prop_assert!(sk.projection.properties().is_weak_equivalence());
        prop_assert!(sk.skeleton.is_gaunt() || sk.skeleton.iso_classes().iter().all(|k| k.len() == 1));
        let again = skeletonize(&sk.skeleton);
        prop_assert_eq!(&again.skeleton, &sk.skeleton);
        prop_assert_eq!(again.projection, FinFunctor::identity(sk.skeleton.clone()));
    }

    #[test]
    fn precomposition_preserves_validity(which in 0usize..64, seed in 0usize..4096) {
        let (_, c) = &categories()[which % categories().len()];
        let all = all_presheaves(c, 2);
        let p = pick(&all, seed).unwrap();
        let sk = skeletonize(c);
        let on_skeleton = p.precompose(&sk.section).unwrap();
        prop_assert!(on_skeleton.check().is_empty());
        prop_assert!(on_skeleton.precompose(&sk.projection).unwrap().check().is_empty());
    }

    #[test]
    fn enumerated_cwfs_are_valid_and_round_trip(which in 0usize..64, seed in 0usize..100_000) {
        let i = which % categories().len();
        let Some(w) = pick(&cwfs()[i], seed) else { return Ok(()) };
        prop_assert!(w.check().is_empty());
        let z = qq_from_term(w.term()).unwrap();
        prop_assert!(z.check().is_empty());
        prop_assert_eq!(is_compatible(w.term(), &z).unwrap(), None);
        prop_assert!(verify_unique_compatible_qq(w.term()));
        let back = term_from_qq(&z).unwrap();
        prop_assert!(term_structure_iso(w.term(), &back).unwrap().is_some());

        let u = cwf_to_relu(w).unwrap();
        prop_assert!(u.check().unwrap().is_empty());
        prop_assert_eq!(&relu_to_cwf(&u).unwrap(), w);
        prop_assert_eq!(&transfer_universe_split(&identity_square(w.obj_ext().base()), &u).unwrap(), &u);

        let p = forget(w);
        prop_assert!(rep_check(&p));
        if w.obj_ext().base().is_gaunt() {
            prop_assert_eq!(&cwf_from_rep_gaunt(&p).unwrap(), w);
        }
    }

    #[test]
    fn enumerated_split_typecats_round_trip_exactly(which in 0usize..64, seed in 0usize..100_000) {
        let i = which % categories().len();
        let Some(t) = pick(&stys()[i], seed) else { return Ok(()) };
        prop_assert!(t.check().is_empty());
        let y = term_from_qq(t.qq()).unwrap();
        prop_assert!(y.check().is_empty());
        prop_assert_eq!(is_compatible(&y, t.qq()).unwrap(), None);
        let z = qq_from_term(&y).unwrap();
        prop_assert_eq!(z.q_table(), t.qq().q_table());
    }

    #[test]
    fn representable_iff_weak_universe(which in 0usize..64, src in 0usize..4096, dst in 0usize..4096, map in 0usize..4096) {
        let (_, c) = &categories()[which % categories().len()];
        if c.objects() > 3 {
            return Ok(());
        }
        let all = all_presheaves(c, 2);
        let tm = Arc::new(pick(&all, src).unwrap().clone());
        let ty = Arc::new(pick(&all, dst).unwrap().clone());
        let maps = cwfkit_core::presheaf::all_maps(&tm, &ty);
        let Some(p) = pick(&maps, map) else { return Ok(()) };
        prop_assert_eq!(rep_check(p), is_weak_relative_universe(&yoneda_data(p)).unwrap());
    }
}

