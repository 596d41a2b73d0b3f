use std::sync::Arc;

use super::{CwfStructure, QMorphismStructure, SplitTypeCatStructure, TermStructure};
use crate::error::{Error, Result};
use crate::presheaf::{find_iso, Presheaf, PresheafMap};

fn sound_over(over: &super::ObjExtStructure) -> Result<()> {
    match over.check().first() {
        None => Ok(()),
        Some(f) => Err(Error::precondition(format!("extension structure is invalid: {f}"))),
    }
}

/// First `(f, A)` at which `q(f, A)* te_A != te_{f*A}`, if any.
pub fn is_compatible(y: &TermStructure, z: &QMorphismStructure) -> Result<Option<(usize, usize)>> {
    if y.over() != z.over() {
        return Err(Error::malformed("term and q-morphism structures sit over different extension structures"));
    }
    let over = y.over();
    let c = over.base();
    let ty = over.ty();
    for f in 0..c.arrow_count() {
        let (g2, g) = (c.src(f), c.dst(f));
        for a in 0..ty.carrier(g) {
            let fa = ty.act(f, a);
            let q = z.q(f, a);
            if c.src(q) != over.ext(g2, fa) || c.dst(q) != over.ext(g, a) {
                return Ok(Some((f, a)));
            }
            if y.tm().act(q, y.te(g, a)) != y.te(g2, fa) {
                return Ok(Some((f, a)));
            }
        }
    }
    Ok(None)
}

/// Every `g: Γ'.f*A -> Γ.A` with `g;π_A = π_{f*A};f` and `g* te_A = te_{f*A}`.
pub fn qq_candidates(y: &TermStructure, f: usize, a: usize) -> Vec<usize> {
    let over = y.over();
    let c = over.base();
    let (g2, g) = (c.src(f), c.dst(f));
    let fa = over.ty().act(f, a);
    let over_f = c.then(over.dpr(g2, fa), f);
    c.hom(over.ext(g2, fa), over.ext(g, a))
        .iter()
        .copied()
        .filter(|&q| c.then(q, over.dpr(g, a)) == over_f && y.tm().act(q, y.te(g, a)) == y.te(g2, fa))
        .collect()
}

/// The q-morphism structure compatible with `y`: each `q(f, A)` is the
/// unique arrow over `f` carrying `te_A` to `te_{f*A}`.
pub fn qq_from_term(y: &TermStructure) -> Result<QMorphismStructure> {
    let over = y.over();
    sound_over(over)?;
    let c = over.base();
    let mut q = Vec::with_capacity(c.arrow_count());
    for f in 0..c.arrow_count() {
        let mut row = Vec::new();
        for a in 0..over.ty().carrier(c.dst(f)) {
            match qq_candidates(y, f, a)[..] {
                [g] => row.push(g),
                ref found => {
                    return Err(Error::inconsistent(format!(
                        "{} candidates for q({f}, {a}); the term structure is not valid",
                        found.len()
                    )))
                }
            }
        }
        q.push(row);
    }
    QMorphismStructure::new(over.clone(), q)
}

/// Every q-arrow is pinned down by compatibility. For a valid `y` this
/// says any compatible q-morphism structure equals `qq_from_term(y)`.
pub fn verify_unique_compatible_qq(y: &TermStructure) -> bool {
    let over = y.over();
    if sound_over(over).is_err() {
        return false;
    }
    let c = over.base();
    (0..c.arrow_count()).all(|f| (0..over.ty().carrier(c.dst(f))).all(|a| qq_candidates(y, f, a).len() == 1))
}

/// The term structure of sections: `Tm(Γ)` is the pairs `(A, s)` with
/// `s: Γ -> Γ.A` a section of `π_A`, ordered by `A` then `s`.
pub fn term_from_qq(z: &QMorphismStructure) -> Result<TermStructure> {
    let over = z.over();
    sound_over(over)?;
    let c = &**over.base();
    let ty = over.ty();
    for f in 0..c.arrow_count() {
        for a in 0..ty.carrier(c.dst(f)) {
            let q = z.q(f, a);
            let fa = ty.act(f, a);
            if c.src(q) != over.ext(c.src(f), fa) || c.dst(q) != over.ext(c.dst(f), a) {
                return Err(Error::precondition(format!("q({f}, {a}) has the wrong endpoints")));
            }
        }
    }

    let elements: Vec<Vec<(usize, usize)>> = (0..c.objects())
        .map(|g| {
            (0..ty.carrier(g))
                .flat_map(|a| {
                    let pi = over.dpr(g, a);
                    c.hom(g, over.ext(g, a))
                        .iter()
                        .copied()
                        .filter(move |&s| c.then(s, pi) == c.identity(g))
                        .map(move |s| (a, s))
                })
                .collect()
        })
        .collect();
    let index = |g: usize, e: (usize, usize)| elements[g].binary_search(&e).expect("section is listed");

    // s' with s';q(f, A) = f;s and s';π_{f*A} = id
    let reindex = |f: usize, a: usize, s: usize| -> Result<usize> {
        let (g2, fa) = (c.src(f), ty.act(f, a));
        let target = c.then(f, s);
        let found: Vec<usize> = c
            .hom(g2, over.ext(g2, fa))
            .iter()
            .copied()
            .filter(|&s2| c.then(s2, z.q(f, a)) == target && c.then(s2, over.dpr(g2, fa)) == c.identity(g2))
            .collect();
        match found[..] {
            [s2] => Ok(s2),
            _ => Err(Error::inconsistent(format!(
                "{} mediators reindexing the section {s} of type {a} along {f}",
                found.len()
            ))),
        }
    };
    let mut action = Vec::with_capacity(c.arrow_count());
    for f in 0..c.arrow_count() {
        let (g2, g) = (c.src(f), c.dst(f));
        let mut table = Vec::with_capacity(elements[g].len());
        for &(a, s) in &elements[g] {
            table.push(index(g2, (ty.act(f, a), reindex(f, a, s)?)));
        }
        action.push(table);
    }
    let tm = Arc::new(Presheaf::new(
        over.base().clone(),
        elements.iter().map(Vec::len).collect(),
        action,
    )?);
    let p = PresheafMap::new(
        tm,
        ty.clone(),
        elements.iter().map(|v| v.iter().map(|e| e.0).collect()).collect(),
    )?;

    // te_A = (π_A* A, δ) with δ the diagonal of the q-square at (π_A, A)
    let mut te = Vec::with_capacity(c.objects());
    for g in 0..c.objects() {
        let mut row = Vec::new();
        for a in 0..ty.carrier(g) {
            let (x, pi) = (over.ext(g, a), over.dpr(g, a));
            let pa = ty.act(pi, a);
            let id = c.identity(x);
            let found: Vec<usize> = c
                .hom(x, over.ext(x, pa))
                .iter()
                .copied()
                .filter(|&d| c.then(d, over.dpr(x, pa)) == id && c.then(d, z.q(pi, a)) == id)
                .collect();
            match found[..] {
                [d] => row.push(index(x, (pa, d))),
                _ => {
                    return Err(Error::inconsistent(format!(
                        "{} diagonals for the generic term at ({g}, {a})",
                        found.len()
                    )))
                }
            }
        }
        te.push(row);
    }
    TermStructure::new(over.clone(), p, te)
}

/// First isomorphism `tm(y) ≅ tm(y2)` over `Ty` carrying generic terms to
/// generic terms, in the enumeration order of [`find_iso`].
pub fn term_structure_iso(y: &TermStructure, y2: &TermStructure) -> Result<Option<PresheafMap>> {
    if y.over() != y2.over() {
        return Err(Error::malformed("term structures sit over different extension structures"));
    }
    let over = y.over();
    let c = over.base();
    // forced[x][t] = required image of t when t is a generic term
    let mut forced: Vec<Vec<Option<usize>>> = (0..c.objects()).map(|x| vec![None; y.tm().carrier(x)]).collect();
    for (g, a) in over.types() {
        let x = over.ext(g, a);
        let slot = &mut forced[x][y.te(g, a)];
        match *slot {
            Some(t) if t != y2.te(g, a) => return Ok(None),
            _ => *slot = Some(y2.te(g, a)),
        }
    }
    Ok(find_iso(
        y.tm(),
        y2.tm(),
        |x, s, t| y.p().apply(x, s) == y2.p().apply(x, t) && forced[x][s].is_none_or(|u| u == t),
        |_| true,
    ))
}

pub fn split_typecat_to_cwf(t: &SplitTypeCatStructure) -> Result<CwfStructure> {
    Ok(CwfStructure::new(term_from_qq(t.qq())?))
}

pub fn cwf_to_split_typecat(w: &CwfStructure) -> Result<SplitTypeCatStructure> {
    Ok(SplitTypeCatStructure::new(qq_from_term(w.term())?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::structures::ObjExtStructure;

    fn two_types() -> TermStructure {
        let t = Arc::new(catalog::terminal());
        let ty = Arc::new(Presheaf::constant(t.clone(), 2));
        let over = Arc::new(ObjExtStructure::new(ty.clone(), vec![vec![0, 0]], vec![vec![0, 0]]).unwrap());
        let tm = Arc::new(Presheaf::constant(t, 2));
        TermStructure::new(over, PresheafMap::new(tm, ty, vec![vec![1, 0]]).unwrap(), vec![vec![1, 0]]).unwrap()
    }

    #[test]
    fn trivial_conversions() {
        for (_, c) in catalog::suite_categories() {
            let c = Arc::new(c);
            let y = TermStructure::trivial(c.clone());
            let z = qq_from_term(&y).unwrap();
            assert_eq!(z, QMorphismStructure::trivial(c.clone()));
            assert_eq!(is_compatible(&y, &z).unwrap(), None);
            assert!(verify_unique_compatible_qq(&y));
            let y2 = term_from_qq(&z).unwrap();
            assert!(y2.check().is_empty());
            assert!(y2.tm().carriers().iter().all(|&n| n == 1));
            assert!(term_structure_iso(&y, &y2).unwrap().is_some());
        }
    }

    #[test]
    fn interval_q_is_the_arrow() {
        let y = TermStructure::trivial(Arc::new(catalog::interval()));
        assert_eq!(qq_from_term(&y).unwrap().q(2, 0), 2);
    }

    #[test]
    fn two_types_on_the_terminal_category() {
        let y = two_types();
        assert!(y.check().is_empty());
        let z = qq_from_term(&y).unwrap();
        assert_eq!(z.q_table(), &[vec![0, 0]]);
        let y2 = term_from_qq(&z).unwrap();
        assert_eq!(y2.tm().carriers(), &[2]);
        assert!(y2.check().is_empty());
        let iso = term_structure_iso(&y, &y2).unwrap().unwrap();
        assert_eq!(iso.components(), &[vec![1, 0]]);
        assert_eq!(qq_from_term(&y2).unwrap(), z);
    }

    #[test]
    fn mismatched_q_is_incompatible() {
        let c = Arc::new(catalog::iso_pair());
        let y = TermStructure::trivial(c.clone());
        let z = QMorphismStructure::trivial(c).with_q(0, 0, 2).unwrap();
        assert_eq!(is_compatible(&y, &z).unwrap(), Some((0, 0)));
    }

    #[test]
    fn uniqueness_alone_does_not_imply_validity() {
        let t = Arc::new(catalog::terminal());
        let ty = Arc::new(Presheaf::terminal(t.clone()));
        let over = Arc::new(ObjExtStructure::new(ty.clone(), vec![vec![0]], vec![vec![0]]).unwrap());
        let tm = Arc::new(Presheaf::constant(t, 2));
        let y = TermStructure::new(over, PresheafMap::new(tm, ty, vec![vec![0, 0]]).unwrap(), vec![vec![0]]).unwrap();
        assert!(!y.check().is_empty());
        assert!(verify_unique_compatible_qq(&y));
        let y_other = y.with_te(0, 0, 1).unwrap();
        assert!(term_structure_iso(&y, &y_other).unwrap().is_some());
    }

    #[test]
    fn different_carriers_are_not_isomorphic() {
        let t = Arc::new(catalog::terminal());
        let y = TermStructure::trivial(t.clone());
        let tm = Arc::new(Presheaf::constant(t, 2));
        let y2 = y
            .with_p(PresheafMap::new(tm, y.over().ty().clone(), vec![vec![0, 0]]).unwrap())
            .unwrap();
        assert!(term_structure_iso(&y, &y2).unwrap().is_none());
    }
}
