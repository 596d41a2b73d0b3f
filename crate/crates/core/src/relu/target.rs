use std::fmt::Debug;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{CommutingSquare, FinCat, FinFunctor};
use crate::finding::{Finding, Law};
use crate::presheaf::{all_maps, yoneda, yoneda_on_arrow, Presheaf, PresheafMap, PresheafSquare};

/// A square of morphisms in some target category, laid out as
/// `top: P -> B`, `left: P -> A`, `bottom: A -> D`, `right: B -> D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Square<M> {
    pub top: M,
    pub left: M,
    pub bottom: M,
    pub right: M,
}

/// The operations the universe machinery needs from a category `D`.
/// Objects need not be enumerable; hom-sets between given objects must be.
pub trait TargetCategory: Clone + PartialEq + Eq + Debug {
    type Obj: Clone + Eq + Debug;
    type Mor: Clone + Eq + Debug;

    fn dom(&self, f: &Self::Mor) -> Self::Obj;
    fn cod(&self, f: &Self::Mor) -> Self::Obj;
    fn id(&self, x: &Self::Obj) -> Self::Mor;
    /// `f;g`.
    fn then(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;
    fn hom(&self, a: &Self::Obj, b: &Self::Obj) -> Vec<Self::Mor>;
    fn inverse(&self, f: &Self::Mor) -> Option<Self::Mor>;
    /// Precondition error if the square does not commute.
    fn is_pullback(&self, sq: &Square<Self::Mor>) -> Result<bool>;

    fn commutes(&self, sq: &Square<Self::Mor>) -> Result<bool> {
        Ok(self.then(&sq.left, &sq.bottom)? == self.then(&sq.top, &sq.right)?)
    }
}

/// A finite category as a target: objects and arrows are indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCatTarget {
    pub cat: Arc<FinCat>,
}

impl TargetCategory for FinCatTarget {
    type Obj = usize;
    type Mor = usize;

    fn dom(&self, f: &usize) -> usize {
        self.cat.src(*f)
    }

    fn cod(&self, f: &usize) -> usize {
        self.cat.dst(*f)
    }

    fn id(&self, x: &usize) -> usize {
        self.cat.identity(*x)
    }

    fn then(&self, f: &usize, g: &usize) -> Result<usize> {
        self.cat.try_then(*f, *g)
    }

    fn hom(&self, a: &usize, b: &usize) -> Vec<usize> {
        self.cat.hom(*a, *b).to_vec()
    }

    fn inverse(&self, f: &usize) -> Option<usize> {
        self.cat.is_iso(*f)
    }

    fn is_pullback(&self, sq: &Square<usize>) -> Result<bool> {
        CommutingSquare::new(sq.top, sq.left, sq.bottom, sq.right).is_pullback(&self.cat)
    }
}

/// Presheaves on `base`, given one at a time. Hom-sets are enumerated in
/// full and pullbacks are tested pointwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresheafCategory {
    pub base: Arc<FinCat>,
}

impl TargetCategory for PresheafCategory {
    type Obj = Arc<Presheaf>;
    type Mor = PresheafMap;

    fn dom(&self, f: &PresheafMap) -> Arc<Presheaf> {
        f.source().clone()
    }

    fn cod(&self, f: &PresheafMap) -> Arc<Presheaf> {
        f.target().clone()
    }

    fn id(&self, x: &Arc<Presheaf>) -> PresheafMap {
        PresheafMap::identity(x.clone())
    }

    fn then(&self, f: &PresheafMap, g: &PresheafMap) -> Result<PresheafMap> {
        f.then(g)
    }

    fn hom(&self, a: &Arc<Presheaf>, b: &Arc<Presheaf>) -> Vec<PresheafMap> {
        all_maps(a, b)
    }

    fn inverse(&self, f: &PresheafMap) -> Option<PresheafMap> {
        f.inverse()
    }

    fn is_pullback(&self, sq: &Square<PresheafMap>) -> Result<bool> {
        PresheafSquare::new(sq.top.clone(), sq.left.clone(), sq.bottom.clone(), sq.right.clone())?.is_pullback()
    }
}

/// A functor from a finite category into a target category, as tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding<D: TargetCategory> {
    source: Arc<FinCat>,
    objects: Vec<D::Obj>,
    arrows: Vec<D::Mor>,
}

impl<D: TargetCategory> Embedding<D> {
    pub fn new(source: Arc<FinCat>, objects: Vec<D::Obj>, arrows: Vec<D::Mor>) -> Result<Self> {
        if objects.len() != source.objects() || arrows.len() != source.arrow_count() {
            return Err(Error::malformed("functor tables do not match the source category"));
        }
        Ok(Embedding { source, objects, arrows })
    }

    pub fn source(&self) -> &Arc<FinCat> {
        &self.source
    }

    pub fn object(&self, x: usize) -> &D::Obj {
        &self.objects[x]
    }

    pub fn arrow(&self, f: usize) -> &D::Mor {
        &self.arrows[f]
    }

    /// Functor laws, checked in the target.
    pub fn check(&self, d: &D) -> Vec<Finding> {
        let c = &*self.source;
        let mut out = Vec::new();
        for f in 0..c.arrow_count() {
            let m = &self.arrows[f];
            if d.dom(m) != self.objects[c.src(f)] || d.cod(m) != self.objects[c.dst(f)] {
                out.push(Finding::new(Law::FunctorEndpoints, format!("arrow {f}"), ""));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for x in 0..c.objects() {
            if self.arrows[c.identity(x)] != d.id(&self.objects[x]) {
                out.push(Finding::new(Law::FunctorIdentity, format!("object {x}"), ""));
            }
        }
        for f in 0..c.arrow_count() {
            for g in (0..c.arrow_count()).filter(|&g| c.src(g) == c.dst(f)) {
                let composite = d.then(&self.arrows[f], &self.arrows[g]);
                if composite.as_ref().ok() != Some(&self.arrows[c.then(f, g)]) {
                    out.push(Finding::new(Law::FunctorComposition, format!("arrows ({f}, {g})"), ""));
                }
            }
        }
        out
    }

    /// Every hom-map `C(a, b) -> D(J a, J b)` is a bijection.
    pub fn is_fully_faithful(&self, d: &D) -> bool {
        let c = &*self.source;
        (0..c.objects()).all(|a| {
            (0..c.objects()).all(|b| {
                let homs = d.hom(&self.objects[a], &self.objects[b]);
                let hom = c.hom(a, b);
                homs.len() == hom.len() && homs.iter().all(|m| hom.iter().any(|&f| self.arrows[f] == *m))
            })
        })
    }
}

impl Embedding<FinCatTarget> {
    pub fn from_functor(f: &FinFunctor) -> Self {
        Embedding {
            source: f.source().clone(),
            objects: f.object_map().to_vec(),
            arrows: f.arrow_map().to_vec(),
        }
    }
}

/// The Yoneda embedding of `c` into its presheaf category.
pub fn yoneda_embedding(c: &Arc<FinCat>) -> (PresheafCategory, Embedding<PresheafCategory>) {
    let objects = (0..c.objects()).map(|x| Arc::new(yoneda(c, x))).collect();
    let arrows = (0..c.arrow_count()).map(|f| yoneda_on_arrow(c, f)).collect();
    (
        PresheafCategory { base: c.clone() },
        Embedding {
            source: c.clone(),
            objects,
            arrows,
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn yoneda_is_a_fully_faithful_functor() {
        for (_, c) in catalog::suite_categories() {
            let c = Arc::new(c);
            let (d, y) = yoneda_embedding(&c);
            assert!(y.check(&d).is_empty());
            assert!(y.is_fully_faithful(&d));
        }
    }

    #[test]
    fn fincat_functors_embed() {
        let c = Arc::new(catalog::chain(2));
        let d = FinCatTarget { cat: c.clone() };
        let id = Embedding::from_functor(&FinFunctor::identity(c));
        assert!(id.check(&d).is_empty());
        assert!(id.is_fully_faithful(&d));
    }
}
