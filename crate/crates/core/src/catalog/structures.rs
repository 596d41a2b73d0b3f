//! Bounded exhaustive generators of structures.
//!
//! Everything is enumerated in a fixed order and every emitted structure is
//! valid. Cost grows exponentially with the carrier bound.

use std::sync::Arc;

use crate::fincat::FinCat;
use crate::presheaf::{all_maps, all_presheaves, presheaves_with_carriers, transpose, yoneda_on_arrow, PresheafSquare};
use crate::structures::{CwfStructure, ObjExtStructure, QMorphismStructure, SplitTypeCatStructure, TermStructure};

/// Odometer over `choices`, first slot slowest.
fn product<T: Clone>(choices: &[Vec<T>]) -> Vec<Vec<T>> {
    if choices.iter().any(Vec::is_empty) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx = vec![0; choices.len()];
    loop {
        out.push(idx.iter().zip(choices).map(|(&i, c)| c[i].clone()).collect());
        let mut k = choices.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if idx[k] + 1 < choices[k].len() {
                idx[k] += 1;
                idx[k + 1..].iter_mut().for_each(|v| *v = 0);
                break;
            }
        }
    }
}

/// Every extension structure whose type presheaf has carriers at most
/// `bound`: types first, then `(Γ.A, π_A)` per type by object and arrow.
pub fn enumerate_obj_ext(c: &Arc<FinCat>, bound: usize) -> Vec<ObjExtStructure> {
    let mut out = Vec::new();
    for ty in all_presheaves(c, bound) {
        let ty = Arc::new(ty);
        let slots: Vec<Vec<(usize, usize)>> = (0..c.objects())
            .flat_map(|g| {
                (0..ty.carrier(g)).map(move |_| {
                    (0..c.objects())
                        .flat_map(|x| c.hom(x, g).iter().map(move |&pi| (x, pi)))
                        .collect()
                })
            })
            .collect();
        for pick in product(&slots) {
            let mut it = pick.into_iter();
            let mut ext = Vec::new();
            let mut dpr = Vec::new();
            for g in 0..c.objects() {
                let row: Vec<(usize, usize)> = it.by_ref().take(ty.carrier(g)).collect();
                ext.push(row.iter().map(|e| e.0).collect());
                dpr.push(row.iter().map(|e| e.1).collect());
            }
            out.push(ObjExtStructure::new(ty.clone(), ext, dpr).expect("enumerated shape"));
        }
    }
    out
}

/// Arrows `h: x -> Γ.A` with `h;π_A = g`.
fn lifts(over: &ObjExtStructure, x: usize, g: usize, a: usize, along: usize) -> usize {
    let c = over.base();
    let pi = over.dpr(g, a);
    c.hom(x, over.ext(g, a)).iter().filter(|&&h| c.then(h, pi) == along).count()
}

/// Every valid term structure over `over` with term carriers at most
/// `bound`.
///
/// A valid structure has `|p⁻¹(B)| = #sections of π_B` at every `(X, B)`,
/// which fixes the carriers of `Tm` before any table is enumerated.
pub fn enumerate_term(over: &Arc<ObjExtStructure>, bound: usize) -> Vec<TermStructure> {
    if !over.check().is_empty() {
        return Vec::new();
    }
    let c = over.base();
    let ty = over.ty();
    let fiber: Vec<Vec<usize>> = (0..c.objects())
        .map(|x| (0..ty.carrier(x)).map(|b| lifts(over, x, x, b, c.identity(x))).collect())
        .collect();
    let carriers: Vec<usize> = fiber.iter().map(|v| v.iter().sum()).collect();
    if carriers.iter().any(|&n| n > bound) {
        return Vec::new();
    }
    for (g, a) in over.types() {
        for x in 0..c.objects() {
            for &h in c.hom(x, g) {
                if lifts(over, x, g, a, h) != fiber[x][ty.act(h, a)] {
                    return Vec::new();
                }
            }
        }
    }

    let mut out = Vec::new();
    for tm in presheaves_with_carriers(c, &carriers) {
        let tm = Arc::new(tm);
        for p in all_maps(&tm, ty) {
            let sizes_match = (0..c.objects()).all(|x| {
                let mut count = vec![0; ty.carrier(x)];
                p.component(x).iter().for_each(|&b| count[b] += 1);
                count == fiber[x]
            });
            if !sizes_match {
                continue;
            }
            let options: Vec<Vec<usize>> = over
                .types()
                .map(|(g, a)| {
                    let x = over.ext(g, a);
                    let pi = over.dpr(g, a);
                    let bottom = transpose(ty, g, a).expect("type in range");
                    let left = yoneda_on_arrow(c, pi);
                    (0..tm.carrier(x))
                        .filter(|&t| p.apply(x, t) == ty.act(pi, a))
                        .filter(|&t| {
                            let top = transpose(&tm, x, t).expect("term in range");
                            let sq = PresheafSquare::new(top, left.clone(), bottom.clone(), p.clone()).expect("square");
                            sq.pointwise_failure().is_none()
                        })
                        .collect()
                })
                .collect();
            for pick in product(&options) {
                let mut it = pick.into_iter();
                let te = (0..c.objects()).map(|g| it.by_ref().take(ty.carrier(g)).collect()).collect();
                out.push(TermStructure::new(over.clone(), p.clone(), te).expect("enumerated shape"));
            }
        }
    }
    out
}

/// Every valid q-morphism structure over `over`, by backtracking over the
/// `(f, A)` slots in arrow order.
pub fn enumerate_qq(over: &Arc<ObjExtStructure>) -> Vec<QMorphismStructure> {
    if !over.check().is_empty() {
        return Vec::new();
    }
    let c = &**over.base();
    let ty = over.ty();
    let mut slot_of = vec![Vec::new(); c.arrow_count()];
    let mut slots = Vec::new();
    for f in 0..c.arrow_count() {
        for a in 0..ty.carrier(c.dst(f)) {
            slot_of[f].push(slots.len());
            slots.push((f, a));
        }
    }
    let probe = QMorphismStructure::new(over.clone(), slot_of.iter().map(|r| vec![0; r.len()]).collect())
        .expect("shape");
    let candidates: Vec<Vec<usize>> = slots
        .iter()
        .map(|&(f, a)| {
            let (g2, g) = (c.src(f), c.dst(f));
            let (from, to) = (over.ext(g2, ty.act(f, a)), over.ext(g, a));
            if c.is_identity(f) {
                return vec![c.identity(to)];
            }
            c.hom(from, to)
                .iter()
                .copied()
                .filter(|&q| {
                    let mut sq = probe.square(f, a);
                    sq.top = q;
                    sq.commutes(c).unwrap_or(false) && sq.is_pullback(c).unwrap_or(false)
                })
                .collect()
        })
        .collect();
    // composition constraints (f';f, A) = (f', f*A);(f, A), filed under the latest slot
    let mut constraints: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); slots.len()];
    for f2 in 0..c.arrow_count() {
        for f in (0..c.arrow_count()).filter(|&f| c.src(f) == c.dst(f2)) {
            for a in 0..ty.carrier(c.dst(f)) {
                let s = (slot_of[c.then(f2, f)][a], slot_of[f2][ty.act(f, a)], slot_of[f][a]);
                constraints[s.0.max(s.1).max(s.2)].push(s);
            }
        }
    }

    fn go(
        k: usize,
        c: &FinCat,
        candidates: &[Vec<usize>],
        constraints: &[Vec<(usize, usize, usize)>],
        chosen: &mut Vec<usize>,
        emit: &mut dyn FnMut(&[usize]),
    ) {
        if k == candidates.len() {
            emit(chosen);
            return;
        }
        for &q in &candidates[k] {
            chosen.push(q);
            if constraints[k].iter().all(|&(ff, f2, f)| chosen[ff] == c.then(chosen[f2], chosen[f])) {
                go(k + 1, c, candidates, constraints, chosen, emit);
            }
            chosen.pop();
        }
    }

    let mut out = Vec::new();
    let mut emit = |chosen: &[usize]| {
        let q = slot_of.iter().map(|r| r.iter().map(|&s| chosen[s]).collect()).collect();
        out.push(QMorphismStructure::new(over.clone(), q).expect("shape"));
    };
    go(0, c, &candidates, &constraints, &mut Vec::new(), &mut emit);
    out
}

/// Every category with families on `c` with all carriers at most `bound`.
pub fn enumerate_cwf(c: &Arc<FinCat>, bound: usize) -> Vec<CwfStructure> {
    enumerate_obj_ext(c, bound)
        .into_iter()
        .flat_map(|x| enumerate_term(&Arc::new(x), bound))
        .map(CwfStructure::new)
        .collect()
}

/// Every split type-category on `c` with type carriers at most `bound`.
pub fn enumerate_split_typecat(c: &Arc<FinCat>, bound: usize) -> Vec<SplitTypeCatStructure> {
    enumerate_obj_ext(c, bound)
        .into_iter()
        .flat_map(|x| enumerate_qq(&Arc::new(x)))
        .map(SplitTypeCatStructure::new)
        .collect()
}
