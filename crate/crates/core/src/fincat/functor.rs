use std::collections::BTreeSet;
use std::sync::Arc;

use super::FinCat;
use crate::error::{Error, Result};
use crate::finding::{Finding, Law};

/// A functor between finite categories, given by its object and arrow maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinFunctor {
    source: Arc<FinCat>,
    target: Arc<FinCat>,
    on_objects: Vec<usize>,
    on_arrows: Vec<usize>,
}

/// What [`FinFunctor::properties`] finds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctorProperties {
    pub full: bool,
    pub faithful: bool,
    /// For each target object `d`, a source object `c` and an iso `F c -> d`.
    pub split_ess_surj: Option<Vec<(usize, usize)>>,
}

impl FunctorProperties {
    pub fn is_weak_equivalence(&self) -> bool {
        self.full && self.faithful && self.split_ess_surj.is_some()
    }
}

impl FinFunctor {
    pub fn new(
        source: Arc<FinCat>,
        target: Arc<FinCat>,
        on_objects: Vec<usize>,
        on_arrows: Vec<usize>,
    ) -> Result<Self> {
        if on_objects.len() != source.objects() || on_arrows.len() != source.arrow_count() {
            return Err(Error::malformed("functor tables do not match the source category"));
        }
        if on_objects.iter().any(|&x| x >= target.objects()) || on_arrows.iter().any(|&f| f >= target.arrow_count()) {
            return Err(Error::malformed("functor maps outside the target category"));
        }
        Ok(FinFunctor {
            source,
            target,
            on_objects,
            on_arrows,
        })
    }

    pub fn identity(c: Arc<FinCat>) -> Self {
        let on_objects = (0..c.objects()).collect();
        let on_arrows = (0..c.arrow_count()).collect();
        FinFunctor {
            source: c.clone(),
            target: c,
            on_objects,
            on_arrows,
        }
    }

    /// The functor from `source` to `target` constant at `object`.
    pub fn constant(source: Arc<FinCat>, target: Arc<FinCat>, object: usize) -> Result<Self> {
        if object >= target.objects() {
            return Err(Error::malformed("constant object out of range"));
        }
        let id = target.identity(object);
        let on_objects = vec![object; source.objects()];
        let on_arrows = vec![id; source.arrow_count()];
        Self::new(source, target, on_objects, on_arrows)
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &FinFunctor) -> Result<FinFunctor> {
        if *self.target != *next.source {
            return Err(Error::malformed("functors are not composable"));
        }
        Ok(FinFunctor {
            source: self.source.clone(),
            target: next.target.clone(),
            on_objects: self.on_objects.iter().map(|&x| next.on_objects[x]).collect(),
            on_arrows: self.on_arrows.iter().map(|&f| next.on_arrows[f]).collect(),
        })
    }

    pub fn source(&self) -> &Arc<FinCat> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinCat> {
        &self.target
    }

    pub fn object(&self, x: usize) -> usize {
        self.on_objects[x]
    }

    pub fn arrow(&self, f: usize) -> usize {
        self.on_arrows[f]
    }

    pub fn object_map(&self) -> &[usize] {
        &self.on_objects
    }

    pub fn arrow_map(&self) -> &[usize] {
        &self.on_arrows
    }

    /// Functor laws, checked by enumeration.
    pub fn check(&self) -> Vec<Finding> {
        let (c, d) = (&*self.source, &*self.target);
        let mut out = Vec::new();
        for f in 0..c.arrow_count() {
            let img = self.on_arrows[f];
            if d.src(img) != self.on_objects[c.src(f)] || d.dst(img) != self.on_objects[c.dst(f)] {
                out.push(Finding::new(Law::FunctorEndpoints, format!("arrow {f}"), format!("image {img}")));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for x in 0..c.objects() {
            let img = self.on_arrows[c.identity(x)];
            if img != d.identity(self.on_objects[x]) {
                out.push(Finding::new(Law::FunctorIdentity, format!("object {x}"), format!("image {img}")));
            }
        }
        for f in 0..c.arrow_count() {
            for g in (0..c.arrow_count()).filter(|&g| c.src(g) == c.dst(f)) {
                let lhs = self.on_arrows[c.then(f, g)];
                let rhs = d.then(self.on_arrows[f], self.on_arrows[g]);
                if lhs != rhs {
                    out.push(Finding::new(
                        Law::FunctorComposition,
                        format!("arrows ({f}, {g})"),
                        format!("F(f;g) = {lhs}, F f;F g = {rhs}"),
                    ));
                }
            }
        }
        out
    }

    pub fn is_full(&self) -> bool {
        self.fullness_failure().is_none()
    }

    /// First `(a, b, target arrow)` with no preimage.
    pub fn fullness_failure(&self) -> Option<(usize, usize, usize)> {
        let (c, d) = (&*self.source, &*self.target);
        for a in 0..c.objects() {
            for b in 0..c.objects() {
                let image: BTreeSet<usize> = c.hom(a, b).iter().map(|&f| self.on_arrows[f]).collect();
                if let Some(&g) = d
                    .hom(self.on_objects[a], self.on_objects[b])
                    .iter()
                    .find(|g| !image.contains(g))
                {
                    return Some((a, b, g));
                }
            }
        }
        None
    }

    pub fn is_faithful(&self) -> bool {
        let c = &*self.source;
        (0..c.objects()).all(|a| {
            (0..c.objects()).all(|b| {
                let hom = c.hom(a, b);
                let image: BTreeSet<usize> = hom.iter().map(|&f| self.on_arrows[f]).collect();
                image.len() == hom.len()
            })
        })
    }

    /// For target object `d`: the iso into `d` of lowest arrow index whose
    /// source is in the image, paired with the least source object hitting it.
    pub fn ess_surj_witness(&self, d: usize) -> Option<(usize, usize)> {
        let t = &*self.target;
        (0..t.arrow_count())
            .filter(|&i| t.dst(i) == d && t.is_iso(i).is_some())
            .find_map(|i| {
                (0..self.source.objects())
                    .find(|&c| self.on_objects[c] == t.src(i))
                    .map(|c| (c, i))
            })
    }

    pub fn properties(&self) -> FunctorProperties {
        let split = (0..self.target.objects())
            .map(|d| self.ess_surj_witness(d))
            .collect::<Option<Vec<_>>>();
        FunctorProperties {
            full: self.is_full(),
            faithful: self.is_faithful(),
            split_ess_surj: split,
        }
    }
}

/// A natural isomorphism between parallel functors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatIso {
    pub source_functor: FinFunctor,
    pub target_functor: FinFunctor,
    /// `components[c] : F c -> G c` in the common target category.
    pub components: Vec<usize>,
}

impl NatIso {
    pub fn new(source_functor: FinFunctor, target_functor: FinFunctor, components: Vec<usize>) -> Result<Self> {
        if source_functor.source != target_functor.source || source_functor.target != target_functor.target {
            return Err(Error::malformed("natural isomorphism between non-parallel functors"));
        }
        if components.len() != source_functor.source.objects()
            || components.iter().any(|&a| a >= source_functor.target.arrow_count())
        {
            return Err(Error::malformed("natural isomorphism component table has the wrong shape"));
        }
        Ok(NatIso {
            source_functor,
            target_functor,
            components,
        })
    }

    pub fn check(&self) -> Vec<Finding> {
        let (f_, g_) = (&self.source_functor, &self.target_functor);
        let (c, d) = (&*f_.source, &*f_.target);
        let mut out = Vec::new();
        for x in 0..c.objects() {
            let a = self.components[x];
            if d.src(a) != f_.object(x) || d.dst(a) != g_.object(x) {
                out.push(Finding::new(Law::NatIsoComponent, format!("object {x}"), format!("component {a} has wrong endpoints")));
            } else if d.is_iso(a).is_none() {
                out.push(Finding::new(Law::NatIsoComponent, format!("object {x}"), format!("component {a} is not invertible")));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for f in 0..c.arrow_count() {
            let lhs = d.then(f_.arrow(f), self.components[c.dst(f)]);
            let rhs = d.then(self.components[c.src(f)], g_.arrow(f));
            if lhs != rhs {
                out.push(Finding::new(Law::NatIsoNaturality, format!("arrow {f}"), format!("{lhs} != {rhs}")));
            }
        }
        out
    }
}
