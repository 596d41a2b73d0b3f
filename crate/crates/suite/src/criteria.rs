use std::sync::Arc;

use cwfkit_core::catalog::{self, skeletonize};
use cwfkit_core::presheaf::{all_maps, all_presheaves, transpose_inverse, yoneda, yoneda_on_arrow};
use cwfkit_core::relu::{
    check_jpullback, cwf_from_rep_gaunt, cwf_to_relu, forget, identity_square, is_weak_relative_universe, jpullbacks,
    relu_to_cwf, rep_check, representations, skeleton_square, transfer_universe_split, weak_universe_equivalence_suite,
    weak_universe_pair, yoneda_data,
};
use cwfkit_core::structures::{
    is_compatible, qq_from_term, term_from_qq, term_structure_iso, verify_unique_compatible_qq,
};
use cwfkit_core::{CommutingSquare, Error, FinCat, Presheaf, PresheafMap, PresheafSquare};

use crate::oracle::{self, Tables};
use crate::{mutation, small_categories, yoneda_categories, CriterionReport, SuiteReport};

/// Identifiers and titles of the criteria the suite runs.
pub const CRITERIA: [(u8, &str); 7] = [
    (1, "CwF and split type-category structures correspond"),
    (2, "CwFs are relative universes over Yoneda"),
    (3, "representable maps are weak relative universes"),
    (4, "representations are unique on gaunt bases"),
    (5, "universes transfer along functor squares"),
    (6, "pullback checkers agree with independent oracles"),
    (7, "every mutation fixture is rejected"),
];

pub fn run_criterion(id: u8, bounds: usize) -> CriterionReport {
    match id {
        1 => equivalence(bounds),
        2 => yoneda_universes(bounds),
        3 => representable_weak(bounds),
        4 => gaunt_uniqueness(bounds),
        5 => transfer(bounds),
        6 => oracles(bounds),
        7 => mutations(bounds),
        _ => panic!("no criterion {id}"),
    }
}

pub fn run_all(bounds: usize) -> SuiteReport {
    let criteria: Vec<CriterionReport> = CRITERIA.iter().map(|&(id, _)| run_criterion(id, bounds)).collect();
    SuiteReport {
        bounds,
        passed: criteria.iter().all(|c| c.passed),
        criteria,
    }
}

fn title(id: u8) -> &'static str {
    CRITERIA[usize::from(id) - 1].1
}

fn suite() -> Vec<(&'static str, Arc<FinCat>)> {
    catalog::suite_categories().into_iter().map(|(n, c)| (n, Arc::new(c))).collect()
}

fn equivalence(bounds: usize) -> CriterionReport {
    let mut r = CriterionReport::new(1, title(1));
    for (name, c) in suite() {
        let cwfs = catalog::enumerate_cwf(&c, bounds);
        r.add(format!("{name}.term-structures"), cwfs.len());
        for (i, w) in cwfs.iter().enumerate() {
            let y = w.term();
            let at = || format!("{name} term #{i}");
            let z = match qq_from_term(y) {
                Ok(z) => z,
                Err(e) => {
                    r.fail(format!("{}: qq_from_term failed: {e}", at()));
                    continue;
                }
            };
            r.expect(z.check().is_empty(), || format!("{}: derived q-morphisms invalid", at()));
            r.expect(matches!(is_compatible(y, &z), Ok(None)), || format!("{}: derived q-morphisms incompatible", at()));
            r.expect(verify_unique_compatible_qq(y), || format!("{}: compatible q-morphisms not unique", at()));
            match term_from_qq(&z).and_then(|y2| term_structure_iso(y, &y2)) {
                Ok(Some(_)) => {}
                Ok(None) => r.fail(format!("{}: term-side round trip not isomorphic", at())),
                Err(e) => r.fail(format!("{}: term-side round trip failed: {e}", at())),
            }
        }
        let stys = catalog::enumerate_split_typecat(&c, bounds);
        r.add(format!("{name}.q-structures"), stys.len());
        for (i, t) in stys.iter().enumerate() {
            let z = t.qq();
            let at = || format!("{name} q-structure #{i}");
            let y = match term_from_qq(z) {
                Ok(y) => y,
                Err(e) => {
                    r.fail(format!("{}: term_from_qq failed: {e}", at()));
                    continue;
                }
            };
            r.expect(y.check().is_empty(), || format!("{}: derived term structure invalid", at()));
            r.expect(matches!(is_compatible(&y, z), Ok(None)), || format!("{}: derived term structure incompatible", at()));
            r.expect(qq_from_term(&y).as_ref() == Ok(z), || format!("{}: q-side round trip not exact", at()));
        }
    }
    r.finish()
}

fn yoneda_universes(bounds: usize) -> CriterionReport {
    let mut r = CriterionReport::new(2, title(2));
    for (name, c) in suite() {
        let cwfs = catalog::enumerate_cwf(&c, bounds);
        r.add(format!("{name}.cwfs"), cwfs.len());
        for (i, w) in cwfs.iter().enumerate() {
            let at = || format!("{name} cwf #{i}");
            let u = match cwf_to_relu(w) {
                Ok(u) => u,
                Err(e) => {
                    r.fail(format!("{}: cwf_to_relu failed: {e}", at()));
                    continue;
                }
            };
            r.expect(matches!(u.check(), Ok(f) if f.is_empty()), || format!("{}: universe invalid", at()));
            match relu_to_cwf(&u) {
                Ok(back) => {
                    r.expect(back == *w, || format!("{}: relu_to_cwf is not inverse", at()));
                    r.expect(cwf_to_relu(&back).as_ref() == Ok(&u), || format!("{}: cwf_to_relu is not inverse", at()));
                }
                Err(e) => r.fail(format!("{}: relu_to_cwf failed: {e}", at())),
            }
        }
    }
    r.finish()
}

fn maps_up_to(c: &Arc<FinCat>, bound: usize) -> Vec<PresheafMap> {
    let ps: Vec<Arc<Presheaf>> = all_presheaves(c, bound).into_iter().map(Arc::new).collect();
    let mut out = Vec::new();
    for a in &ps {
        for b in &ps {
            out.extend(all_maps(a, b));
        }
    }
    out
}

fn representable_weak(bounds: usize) -> CriterionReport {
    let mut r = CriterionReport::new(3, title(3));
    for (name, c) in small_categories() {
        let c = Arc::new(c);
        let (mut yes, mut no) = (0, 0);
        for (i, p) in maps_up_to(&c, bounds).iter().enumerate() {
            let rep = rep_check(p);
            if rep {
                yes += 1;
            } else {
                no += 1;
            }
            match is_weak_relative_universe(&yoneda_data(p)) {
                Ok(weak) => r.expect(weak == rep, || format!("{name} map #{i}: representable {rep}, weak {weak}")),
                Err(e) => r.fail(format!("{name} map #{i}: {e}")),
            }
            r.expect(oracle::representable(p) == rep, || format!("{name} map #{i}: oracle disagrees on representability"));
        }
        r.add(format!("{name}.representable"), yes);
        r.add(format!("{name}.not-representable"), no);
    }
    r.finish()
}

fn gaunt_uniqueness(bounds: usize) -> CriterionReport {
    let mut r = CriterionReport::new(4, title(4));
    for (name, c) in suite() {
        let cwfs = catalog::enumerate_cwf(&c, bounds);
        if !c.is_gaunt() {
            let refused = cwfs
                .iter()
                .all(|w| matches!(cwf_from_rep_gaunt(&forget(w)), Err(Error::Precondition(m)) if m.contains("base not gaunt")));
            r.expect(refused, || format!("{name}: non-gaunt base was not refused"));
            r.notes.push(format!("{name} is not gaunt: uniqueness not claimed, reconstruction refused"));
            continue;
        }
        r.add(format!("{name}.cwfs"), cwfs.len());
        let mut searches = 0;
        for (i, w) in cwfs.iter().enumerate() {
            let at = || format!("{name} cwf #{i}");
            let p = forget(w);
            r.expect(cwf_from_rep_gaunt(&p).as_ref() == Ok(w), || format!("{}: reconstruction differs", at()));
            for (g, a) in w.obj_ext().types() {
                searches += 1;
                let n = representations(&p, g, a).len();
                r.expect(n == 1, || format!("{}: {n} representations at ({g}, {a})", at()));
            }
            let data = yoneda_data(&p);
            for x in 0..c.objects() {
                for f in data.classifying_maps(x) {
                    searches += 1;
                    match jpullbacks(&data, x, &f) {
                        Ok(found) => r.expect(found.len() == 1, || format!("{}: {} J-pullbacks at X = {x}", at(), found.len())),
                        Err(e) => r.fail(format!("{}: {e}", at())),
                    }
                }
            }
        }
        r.add(format!("{name}.searches"), searches);
    }
    r.finish()
}

fn transfer(bounds: usize) -> CriterionReport {
    let mut r = CriterionReport::new(5, title(5));
    for (name, c) in suite() {
        let sq = identity_square(&c);
        let mut searched = sq.clone();
        searched.r_split = None;
        searched.s_full = None;
        let cwfs = catalog::enumerate_cwf(&c, bounds);
        r.add(format!("identity.{name}.universes"), cwfs.len());
        for (i, w) in cwfs.iter().enumerate() {
            let u = cwf_to_relu(w).expect("enumerated structures are valid");
            for (mode, s) in [("oracle", &sq), ("search", &searched)] {
                r.expect(transfer_universe_split(s, &u).as_ref() == Ok(&u), || {
                    format!("identity square on {name} ({mode}) moved universe #{i}")
                });
            }
        }
    }

    let c = Arc::new(catalog::three_with_iso_pair());
    let sk = skeletonize(&c);
    let sq = skeleton_square(&sk);
    let cwfs = catalog::enumerate_cwf(&c, bounds);
    r.add("skeleton.universes", cwfs.len());
    let mut squares = 0;
    for (i, w) in cwfs.iter().enumerate() {
        let u = cwf_to_relu(w).expect("enumerated structures are valid");
        match transfer_universe_split(&sq, &u) {
            Ok(moved) => {
                for (x, f, cand) in &moved.table {
                    squares += 1;
                    r.expect(matches!(check_jpullback(&moved.data, *x, f, cand), Ok(true)), || {
                        format!("skeleton universe #{i}: entry at X = {x} is not a J-pullback")
                    });
                }
                r.expect(matches!(moved.check(), Ok(f) if f.is_empty()), || format!("skeleton universe #{i} invalid"));
                r.expect(relu_to_cwf(&moved).is_ok_and(|w2| w2.check().is_empty()), || {
                    format!("skeleton universe #{i} does not read back as a CwF")
                });
            }
            Err(e) => r.fail(format!("skeleton universe #{i}: {e}")),
        }
    }
    r.add("skeleton.squares", squares);

    let inventory = maps_up_to(&c, bounds);
    let (mut weak, mut not_weak) = (0, 0);
    for (i, p) in inventory.iter().enumerate() {
        match weak_universe_pair(&sq, p) {
            Ok((lhs, rhs)) => {
                r.expect(lhs == rhs, || format!("inventory map #{i}: weak {lhs} on C, {rhs} on the skeleton"));
                if lhs {
                    weak += 1;
                } else {
                    not_weak += 1;
                }
            }
            Err(e) => r.fail(format!("inventory map #{i}: {e}")),
        }
    }
    r.add("inventory.weak", weak);
    r.add("inventory.not-weak", not_weak);
    r.expect(weak > 0 && not_weak > 0, || "inventory does not exercise both cases".into());
    match weak_universe_equivalence_suite(&sq, &inventory) {
        Ok(report) => {
            r.expect(report.corresponds, || "S does not preserve and reflect weak universes".into());
            r.expect(report.unique == Some(true), || "J'-pullbacks on the gaunt skeleton are not unique".into());
        }
        Err(e) => r.fail(format!("equivalence suite: {e}")),
    }
    r.finish()
}

/// Every commuting square of `c`.
fn commuting_squares(c: &FinCat) -> Vec<CommutingSquare> {
    let mut out = Vec::new();
    let n = c.arrow_count();
    for top in 0..n {
        for left in (0..n).filter(|&l| c.src(l) == c.src(top)) {
            for &bottom in (0..c.objects()).flat_map(|d| c.hom(c.dst(left), d)) {
                for &right in c.hom(c.dst(top), c.dst(bottom)) {
                    if c.then(left, bottom) == c.then(top, right) {
                        out.push(CommutingSquare::new(top, left, bottom, right));
                    }
                }
            }
        }
    }
    out
}

/// The presheaves the square corpus is drawn from: carriers at most one,
/// representables and the constant presheaf on two elements.
fn square_corners(c: &Arc<FinCat>) -> Vec<Arc<Presheaf>> {
    let mut out: Vec<Presheaf> = all_presheaves(c, 1);
    for x in 0..c.objects() {
        out.push(yoneda(c, x));
    }
    out.push(Presheaf::constant(c.clone(), 2));
    let mut unique: Vec<Presheaf> = Vec::new();
    for p in out {
        if !unique.contains(&p) {
            unique.push(p);
        }
    }
    unique.into_iter().map(Arc::new).collect()
}

fn oracles(bounds: usize) -> CriterionReport {
    let mut r = CriterionReport::new(6, title(6));
    for (name, c) in small_categories() {
        let t = Tables::of(&c);
        let (mut yes, mut no) = (0, 0);
        for sq in commuting_squares(&c) {
            let ours = sq.is_pullback(&c).expect("commuting square");
            let theirs = t.is_pullback(sq.top, sq.left, sq.bottom, sq.right);
            r.expect(ours == theirs, || format!("{name}: square {sq:?}: checker {ours}, oracle {theirs}"));
            if ours {
                yes += 1;
            } else {
                no += 1;
            }
        }
        r.add(format!("{name}.squares.pullback"), yes);
        r.add(format!("{name}.squares.other"), no);
    }

    let apex_bound = bounds + 1;
    for (name, c) in small_categories() {
        let c = Arc::new(c);
        let mut cones = oracle::ConeOracle::new(all_presheaves(&c, apex_bound).into_iter().map(Arc::new).collect());
        let corners = square_corners(&c);
        let (mut yes, mut no) = (0, 0);
        for p in &corners {
            for a in &corners {
                for b in &corners {
                    for d in &corners {
                        let bottoms = all_maps(a, d);
                        let rights = all_maps(b, d);
                        if bottoms.is_empty() || rights.is_empty() {
                            continue;
                        }
                        let lefts = all_maps(p, a);
                        let tops = all_maps(p, b);
                        for bottom in &bottoms {
                            for right in &rights {
                                for left in &lefts {
                                    for top in &tops {
                                        let sq = PresheafSquare::new(top.clone(), left.clone(), bottom.clone(), right.clone())
                                            .expect("square");
                                        if !sq.commutes() {
                                            continue;
                                        }
                                        let ours = sq.is_pullback().expect("commutes");
                                        let theirs = cones.is_pullback(&sq);
                                        r.expect(ours == theirs, || {
                                            format!("{name}: presheaf square: checker {ours}, oracle {theirs}")
                                        });
                                        if ours {
                                            yes += 1;
                                        } else {
                                            no += 1;
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        r.add(format!("{name}.presheaf-squares.pullback"), yes);
        r.add(format!("{name}.presheaf-squares.other"), no);
        r.add(format!("{name}.apexes"), cones.apexes());
    }

    for (name, c) in yoneda_categories() {
        let c = Arc::new(c);
        let mut pairs = 0;
        for a in 0..c.objects() {
            for b in 0..c.objects() {
                pairs += 1;
                let (ya, yb) = (Arc::new(yoneda(&c, a)), Arc::new(yoneda(&c, b)));
                let maps = all_maps(&ya, &yb);
                r.expect(maps.len() == oracle::naive_maps(&ya, &yb).len(), || {
                    format!("{name}: map enumeration disagrees with the oracle at ({a}, {b})")
                });
                let mut images: Vec<usize> = maps.iter().map(|m| transpose_inverse(m, a).expect("from y(a)")).collect();
                images.sort_unstable();
                let expected: Vec<usize> = (0..c.hom(a, b).len()).collect();
                r.expect(images == expected, || format!("{name}: transpose is not a bijection onto hom({a}, {b})"));
                for &f in c.hom(a, b) {
                    r.expect(transpose_inverse(&yoneda_on_arrow(&c, f), a) == Ok(c.hom_position(f)), || {
                        format!("{name}: y({f}) does not transpose to {f}")
                    });
                }
            }
        }
        r.add(format!("{name}.yoneda-pairs"), pairs);
    }
    r.finish()
}

fn mutations(bounds: usize) -> CriterionReport {
    let mut r = CriterionReport::new(7, title(7));
    for (kind, o) in mutation::all_kinds(bounds) {
        r.add(format!("{kind}.seeds"), o.seeds);
        r.add(format!("{kind}.mutants"), o.mutants);
        r.add(format!("{kind}.invalid"), o.invalid);
        r.add(format!("{kind}.rejected"), o.rejected);
        r.expect(o.invalid > 0, || format!("{kind}: no invalid mutants generated"));
        for f in o.failures {
            r.fail(format!("{kind}: {f}"));
        }
    }
    r.finish()
}
