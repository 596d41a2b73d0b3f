use std::sync::Arc;

use super::target::{yoneda_embedding, PresheafCategory};
use super::universe::RelUnivData;
use crate::error::{Error, Result};
use crate::finding::{Finding, Law};
use crate::presheaf::{transpose, yoneda_on_arrow, PresheafMap, PresheafSquare};
use crate::structures::{CwfStructure, ObjExtStructure, TermStructure};

/// Every representation `(Γ.A, π_A, te_A)` of the fiber of `p` over
/// `A ∈ Ty(Γ)`, searched over objects, arrows into `Γ` and terms.
pub fn representations(p: &PresheafMap, g: usize, a: usize) -> Vec<(usize, usize, usize)> {
    let (tm, ty) = (p.source(), p.target());
    let c = ty.base();
    let bottom = transpose(ty, g, a).expect("type in range");
    let mut out = Vec::new();
    for x in 0..c.objects() {
        for &pi in c.hom(x, g) {
            let over = ty.act(pi, a);
            let left = yoneda_on_arrow(c, pi);
            for t in (0..tm.carrier(x)).filter(|&t| p.apply(x, t) == over) {
                let top = transpose(tm, x, t).expect("term in range");
                let sq = PresheafSquare::new(top, left.clone(), bottom.clone(), p.clone()).expect("square");
                if sq.pointwise_failure().is_none() {
                    out.push((x, pi, t));
                }
            }
        }
    }
    out
}

/// First `(Γ, A)` whose fiber has no representation.
pub fn rep_failure(p: &PresheafMap) -> Option<(usize, usize)> {
    let ty = p.target();
    (0..ty.base().objects())
        .flat_map(|g| (0..ty.carrier(g)).map(move |a| (g, a)))
        .find(|&(g, a)| representations(p, g, a).is_empty())
}

/// Every fiber of `p` is representable.
pub fn rep_check(p: &PresheafMap) -> bool {
    rep_failure(p).is_none()
}

/// Presheaf laws of both ends, naturality of `p`, then representability.
pub fn rep_map_check(p: &PresheafMap) -> Vec<Finding> {
    let mut out = p.source().check();
    out.extend(p.target().check());
    out.extend(p.check());
    if out.is_empty() {
        if let Some((g, a)) = rep_failure(p) {
            out.push(Finding::new(
                Law::FiberRepresentable,
                format!("(Γ, A) = ({g}, {a})"),
                "no (Γ.A, π_A, te_A) makes the fiber square a pullback",
            ));
        }
    }
    out
}

/// The universe data of `p` relative to the Yoneda embedding.
pub fn yoneda_data(p: &PresheafMap) -> RelUnivData<PresheafCategory> {
    let (target, j) = yoneda_embedding(p.target().base());
    RelUnivData { target, j, p: p.clone() }
}

/// Drops the chosen representations.
pub fn forget(w: &CwfStructure) -> PresheafMap {
    w.term().p().clone()
}

/// On a gaunt base a representable map has exactly one representation per
/// fiber; assemble them into a category with families.
pub fn cwf_from_rep_gaunt(p: &PresheafMap) -> Result<CwfStructure> {
    let ty = p.target();
    let c = ty.base();
    if let Some(f) = c.gaunt_counterexample() {
        return Err(Error::precondition(format!("base not gaunt: arrow {f} is a non-identity isomorphism")));
    }
    if let Some(f) = p.check().first() {
        return Err(Error::precondition(format!("p is not natural: {f}")));
    }
    let mut ext = Vec::new();
    let mut dpr = Vec::new();
    let mut te = Vec::new();
    for g in 0..c.objects() {
        let (mut er, mut dr, mut tr) = (Vec::new(), Vec::new(), Vec::new());
        for a in 0..ty.carrier(g) {
            match representations(p, g, a)[..] {
                [(x, pi, t)] => {
                    er.push(x);
                    dr.push(pi);
                    tr.push(t);
                }
                [] => return Err(Error::precondition(format!("p is not representable at (Γ, A) = ({g}, {a})"))),
                ref many => {
                    return Err(Error::inconsistent(format!(
                        "{} representations at (Γ, A) = ({g}, {a}) over a gaunt base",
                        many.len()
                    )))
                }
            }
        }
        ext.push(er);
        dpr.push(dr);
        te.push(tr);
    }
    let over = Arc::new(ObjExtStructure::new(ty.clone(), ext, dpr)?);
    Ok(CwfStructure::new(TermStructure::new(over, p.clone(), te)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::presheaf::Presheaf;
    use crate::relu::universe::is_weak_relative_universe;

    fn on_terminal(p: Vec<usize>, ty: usize) -> PresheafMap {
        let t = Arc::new(catalog::terminal());
        let tm = Arc::new(Presheaf::constant(t.clone(), p.len()));
        PresheafMap::new(tm, Arc::new(Presheaf::constant(t, ty)), vec![p]).unwrap()
    }

    #[test]
    fn terminal_category_fibers() {
        assert!(rep_check(&on_terminal(vec![0], 1)));
        assert!(rep_check(&on_terminal(vec![1, 0], 2)));
        assert_eq!(rep_failure(&on_terminal(vec![0, 0], 1)), Some((0, 0)));
        assert_eq!(rep_failure(&on_terminal(vec![], 1)), Some((0, 0)));
    }

    #[test]
    fn agrees_with_weak_universe_on_terminal() {
        for p in [on_terminal(vec![0], 1), on_terminal(vec![0, 0], 1), on_terminal(vec![1, 0], 2), on_terminal(vec![], 1)] {
            assert_eq!(rep_check(&p), is_weak_relative_universe(&yoneda_data(&p)).unwrap());
        }
    }

    #[test]
    fn gaunt_reconstruction() {
        let w = cwf_from_rep_gaunt(&on_terminal(vec![1, 0], 2)).unwrap();
        assert!(w.check().is_empty());
        assert_eq!(w.term().te_table(), &[vec![1, 0]]);
        for (_, c) in catalog::suite_categories().into_iter().filter(|(_, c)| c.is_gaunt()) {
            let c = Arc::new(c);
            let triv = CwfStructure::trivial(c);
            assert_eq!(cwf_from_rep_gaunt(&forget(&triv)).unwrap(), triv);
        }
    }

    #[test]
    fn non_gaunt_base_is_refused() {
        let c = Arc::new(catalog::iso_pair());
        let err = cwf_from_rep_gaunt(&forget(&CwfStructure::trivial(c))).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
        assert!(err.to_string().contains("base not gaunt"));
    }
}
