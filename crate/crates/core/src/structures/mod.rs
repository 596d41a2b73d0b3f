//! Object extension structures and their two completions: term structures
//! (giving categories with families) and q-morphism structures (giving
//! split type-categories), with the conversions between them.

mod convert;
mod qq;
mod term;

pub use convert::{
    cwf_to_split_typecat, is_compatible, qq_candidates, qq_from_term, split_typecat_to_cwf, term_from_qq,
    term_structure_iso, verify_unique_compatible_qq,
};
pub use qq::{QMorphismStructure, SplitTypeCatStructure};
pub use term::{CwfStructure, TermStructure};

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::FinCat;
use crate::finding::{Finding, Law};
use crate::presheaf::Presheaf;

/// A presheaf of types `Ty` with a chosen extension `Γ.A` and projection
/// `π_A: Γ.A -> Γ` for every `A ∈ Ty(Γ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObjExtStructure {
    ty: Arc<Presheaf>,
    ext: Vec<Vec<usize>>,
    dpr: Vec<Vec<usize>>,
}

impl ObjExtStructure {
    /// `ext[Γ][A]` and `dpr[Γ][A]`.
    pub fn new(ty: Arc<Presheaf>, ext: Vec<Vec<usize>>, dpr: Vec<Vec<usize>>) -> Result<Self> {
        let c = ty.base();
        if ext.len() != c.objects() || dpr.len() != c.objects() {
            return Err(Error::malformed("extension tables need one row per object"));
        }
        for g in 0..c.objects() {
            if ext[g].len() != ty.carrier(g) || dpr[g].len() != ty.carrier(g) {
                return Err(Error::malformed(format!("extension row {g} needs one entry per type")));
            }
            if ext[g].iter().any(|&x| x >= c.objects()) || dpr[g].iter().any(|&f| f >= c.arrow_count()) {
                return Err(Error::malformed(format!("extension row {g} leaves the category")));
            }
        }
        Ok(ObjExtStructure { ty, ext, dpr })
    }

    /// `Γ.* = Γ` and `π = id` over the terminal type presheaf.
    pub fn trivial(base: Arc<FinCat>) -> Self {
        let ext = (0..base.objects()).map(|g| vec![g]).collect();
        let dpr = (0..base.objects()).map(|g| vec![base.identity(g)]).collect();
        ObjExtStructure {
            ty: Arc::new(Presheaf::terminal(base)),
            ext,
            dpr,
        }
    }

    pub fn base(&self) -> &Arc<FinCat> {
        self.ty.base()
    }

    pub fn ty(&self) -> &Arc<Presheaf> {
        &self.ty
    }

    /// `Γ.A`.
    pub fn ext(&self, g: usize, a: usize) -> usize {
        self.ext[g][a]
    }

    /// `π_A`.
    pub fn dpr(&self, g: usize, a: usize) -> usize {
        self.dpr[g][a]
    }

    pub fn ext_table(&self) -> &[Vec<usize>] {
        &self.ext
    }

    pub fn dpr_table(&self) -> &[Vec<usize>] {
        &self.dpr
    }

    /// Every `(Γ, A)` with `A ∈ Ty(Γ)`, in lexicographic order.
    pub fn types(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.base().objects()).flat_map(move |g| (0..self.ty.carrier(g)).map(move |a| (g, a)))
    }

    /// The comparison `Γ.A -> Γ.B` for equal types. Equal types are
    /// identical elements here, so it is the identity or nothing.
    pub fn ext_compare(&self, g: usize, a: usize, b: usize) -> Option<usize> {
        (a == b && a < self.ty.carrier(g)).then(|| self.base().identity(self.ext[g][a]))
    }

    pub fn with_dpr(&self, g: usize, a: usize, f: usize) -> Result<Self> {
        let mut dpr = self.dpr.clone();
        *dpr.get_mut(g).and_then(|r| r.get_mut(a)).ok_or_else(|| Error::malformed("no such type"))? = f;
        Self::new(self.ty.clone(), self.ext.clone(), dpr)
    }

    pub fn with_ext(&self, g: usize, a: usize, x: usize) -> Result<Self> {
        let mut ext = self.ext.clone();
        *ext.get_mut(g).and_then(|r| r.get_mut(a)).ok_or_else(|| Error::malformed("no such type"))? = x;
        Self::new(self.ty.clone(), ext, self.dpr.clone())
    }

    pub fn with_ty(&self, ty: Arc<Presheaf>) -> Result<Self> {
        Self::new(ty, self.ext.clone(), self.dpr.clone())
    }

    /// Presheaf laws of `Ty` and the endpoints of every projection.
    pub fn check(&self) -> Vec<Finding> {
        let mut out = self.ty.check();
        let c = self.base();
        for (g, a) in self.types() {
            let f = self.dpr[g][a];
            if c.src(f) != self.ext[g][a] || c.dst(f) != g {
                out.push(Finding::new(
                    Law::ProjectionEndpoints,
                    format!("(Γ, A) = ({g}, {a})"),
                    format!("π = {f}: {} -> {}, Γ.A = {}", c.src(f), c.dst(f), self.ext[g][a]),
                ));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn trivial_structure_is_valid() {
        for (_, c) in catalog::suite_categories() {
            let x = ObjExtStructure::trivial(Arc::new(c));
            assert!(x.check().is_empty());
            assert_eq!(x.ext_compare(0, 0, 0), Some(x.base().identity(0)));
        }
    }

    #[test]
    fn wrong_projection_is_reported() {
        let i = Arc::new(catalog::interval());
        let x = ObjExtStructure::trivial(i).with_dpr(1, 0, 2).unwrap();
        let f = x.check();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].law, Law::ProjectionEndpoints);
        assert_eq!(f[0].location, "(Γ, A) = (1, 0)");
    }

    #[test]
    fn shape_errors_are_malformed() {
        let t = Arc::new(catalog::terminal());
        let ty = Arc::new(Presheaf::terminal(t));
        assert!(matches!(ObjExtStructure::new(ty.clone(), vec![vec![]], vec![vec![0]]), Err(Error::Malformed(_))));
        assert!(matches!(ObjExtStructure::new(ty, vec![vec![1]], vec![vec![0]]), Err(Error::Malformed(_))));
    }
}
