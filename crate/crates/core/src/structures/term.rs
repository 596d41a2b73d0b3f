use std::sync::Arc;

use super::ObjExtStructure;
use crate::error::{Error, Result};
use crate::finding::{Finding, Law};
use crate::presheaf::{transpose, yoneda_on_arrow, Presheaf, PresheafMap, PresheafSquare};

/// A presheaf of terms `Tm` with `p: Tm -> Ty` and a generic term
/// `te_A ∈ Tm(Γ.A)` for every type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermStructure {
    over: Arc<ObjExtStructure>,
    tm: Arc<Presheaf>,
    p: PresheafMap,
    te: Vec<Vec<usize>>,
}

impl TermStructure {
    /// `p` must run from `tm` to the type presheaf; `te[Γ][A] ∈ tm(Γ.A)`.
    pub fn new(over: Arc<ObjExtStructure>, p: PresheafMap, te: Vec<Vec<usize>>) -> Result<Self> {
        if p.target() != over.ty() {
            return Err(Error::malformed("p does not land in the type presheaf"));
        }
        let tm = p.source().clone();
        let c = over.base();
        if te.len() != c.objects() {
            return Err(Error::malformed("generic term table needs one row per object"));
        }
        for (g, row) in te.iter().enumerate() {
            if row.len() != over.ty().carrier(g) {
                return Err(Error::malformed(format!("generic term row {g} needs one entry per type")));
            }
            for (a, &t) in row.iter().enumerate() {
                if t >= tm.carrier(over.ext(g, a)) {
                    return Err(Error::malformed(format!("generic term at ({g}, {a}) out of range")));
                }
            }
        }
        Ok(TermStructure { over, tm, p, te })
    }

    /// Over the trivial extension structure: `Tm = Ty = 1`, `te = 0`.
    pub fn trivial(base: Arc<crate::fincat::FinCat>) -> Self {
        let over = Arc::new(ObjExtStructure::trivial(base));
        let p = PresheafMap::identity(over.ty().clone());
        let te = (0..over.base().objects()).map(|_| vec![0]).collect();
        TermStructure {
            tm: over.ty().clone(),
            over,
            p,
            te,
        }
    }

    pub fn over(&self) -> &Arc<ObjExtStructure> {
        &self.over
    }

    pub fn tm(&self) -> &Arc<Presheaf> {
        &self.tm
    }

    pub fn p(&self) -> &PresheafMap {
        &self.p
    }

    pub fn te(&self, g: usize, a: usize) -> usize {
        self.te[g][a]
    }

    pub fn te_table(&self) -> &[Vec<usize>] {
        &self.te
    }

    pub fn with_te(&self, g: usize, a: usize, t: usize) -> Result<Self> {
        let mut te = self.te.clone();
        *te.get_mut(g).and_then(|r| r.get_mut(a)).ok_or_else(|| Error::malformed("no such type"))? = t;
        Self::new(self.over.clone(), self.p.clone(), te)
    }

    pub fn with_p(&self, p: PresheafMap) -> Result<Self> {
        Self::new(self.over.clone(), p, self.te.clone())
    }

    /// The fiber square at `(Γ, A)`:
    ///
    /// ```text
    /// y(Γ.A) --te_A--> Tm
    ///   |               |
    /// y(π_A)            p
    ///   v               v
    /// y(Γ) ----A-----> Ty
    /// ```
    pub fn fiber_square(&self, g: usize, a: usize) -> Result<PresheafSquare> {
        let base = self.over.base();
        let x = self.over.ext(g, a);
        PresheafSquare::new(
            transpose(&self.tm, x, self.te[g][a])?,
            yoneda_on_arrow(base, self.over.dpr(g, a)),
            transpose(self.over.ty(), g, a)?,
            self.p.clone(),
        )
    }

    /// Everything a category with families asks of its term side: the
    /// extension structure, presheaf laws, naturality of `p`, the typing of
    /// each generic term and the pullback condition on each fiber square.
    pub fn check(&self) -> Vec<Finding> {
        let mut out = self.over.check();
        out.extend(self.tm.check());
        out.extend(self.p.check());
        if !out.is_empty() {
            return out;
        }
        let ty = self.over.ty();
        for (g, a) in self.over.types() {
            let x = self.over.ext(g, a);
            let pi = self.over.dpr(g, a);
            let here = format!("(Γ, A) = ({g}, {a})");
            let lies_over = self.p.apply(x, self.te[g][a]);
            let expected = ty.act(pi, a);
            if lies_over != expected {
                out.push(Finding::new(
                    Law::GenericTermTyping,
                    here,
                    format!("p(te) = {lies_over}, π*A = {expected}"),
                ));
                continue;
            }
            let sq = self.fiber_square(g, a).expect("validated shapes");
            if let Some(w) = sq.pointwise_failure() {
                out.push(Finding::new(Law::FiberPullback, here, format!("{w:?}")));
            }
        }
        out
    }
}

/// A category with families: an extension structure completed by a term
/// structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CwfStructure {
    term: TermStructure,
}

impl CwfStructure {
    pub fn new(term: TermStructure) -> Self {
        CwfStructure { term }
    }

    pub fn trivial(base: Arc<crate::fincat::FinCat>) -> Self {
        CwfStructure::new(TermStructure::trivial(base))
    }

    pub fn obj_ext(&self) -> &Arc<ObjExtStructure> {
        self.term.over()
    }

    pub fn term(&self) -> &TermStructure {
        &self.term
    }

    pub fn into_term(self) -> TermStructure {
        self.term
    }

    pub fn check(&self) -> Vec<Finding> {
        self.term.check()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    /// Terminal category, `Ty = Tm = 2`, `p` given, `te = p⁻¹`.
    fn two_types(p: Vec<usize>) -> TermStructure {
        let t = Arc::new(catalog::terminal());
        let ty = Arc::new(Presheaf::constant(t.clone(), 2));
        let over = Arc::new(ObjExtStructure::new(ty.clone(), vec![vec![0, 0]], vec![vec![0, 0]]).unwrap());
        let tm = Arc::new(Presheaf::constant(t, 2));
        let te = vec![(0..2).map(|a| p.iter().position(|&x| x == a).unwrap_or(0)).collect()];
        TermStructure::new(over, PresheafMap::new(tm, ty, vec![p]).unwrap(), te).unwrap()
    }

    #[test]
    fn trivial_structure_is_valid() {
        for (_, c) in catalog::suite_categories() {
            let y = TermStructure::trivial(Arc::new(c));
            assert!(y.check().is_empty());
            for (g, a) in y.over().types() {
                assert!(y.fiber_square(g, a).unwrap().is_pullback().unwrap());
            }
        }
    }

    #[test]
    fn bijective_p_on_the_terminal_category_is_valid() {
        assert!(two_types(vec![0, 1]).check().is_empty());
        assert!(two_types(vec![1, 0]).check().is_empty());
    }

    #[test]
    fn non_injective_p_breaks_the_fiber_pullback() {
        let y = two_types(vec![0, 0]);
        let f = y.check();
        assert!(f.iter().any(|f| f.law == Law::FiberPullback || f.law == Law::GenericTermTyping));
    }

    #[test]
    fn corrupted_generic_term_is_caught() {
        let y = two_types(vec![0, 1]).with_te(0, 0, 1).unwrap();
        let f = y.check();
        assert_eq!(f[0].law, Law::GenericTermTyping);
        assert_eq!(f[0].location, "(Γ, A) = (0, 0)");
    }
}
