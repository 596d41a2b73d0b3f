use std::sync::Arc;

use super::Presheaf;
use crate::error::{Error, Result};
use crate::fincat::FinFunctor;
use crate::finding::{Finding, Law};

/// A natural transformation between presheaves on the same base, given by
/// one function table per object. Equality is table equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresheafMap {
    source: Arc<Presheaf>,
    target: Arc<Presheaf>,
    components: Vec<Vec<usize>>,
}

impl PresheafMap {
    pub fn new(source: Arc<Presheaf>, target: Arc<Presheaf>, components: Vec<Vec<usize>>) -> Result<Self> {
        if !(Arc::ptr_eq(source.base(), target.base()) || source.base() == target.base()) {
            return Err(Error::malformed("presheaf map between different bases"));
        }
        let n = source.base().objects();
        if components.len() != n {
            return Err(Error::malformed(format!("presheaf map has {} components for {n} objects", components.len())));
        }
        for (c, comp) in components.iter().enumerate() {
            if comp.len() != source.carrier(c) || comp.iter().any(|&y| y >= target.carrier(c)) {
                return Err(Error::malformed(format!("component {c} has the wrong shape")));
            }
        }
        Ok(PresheafMap {
            source,
            target,
            components,
        })
    }

    pub fn identity(p: Arc<Presheaf>) -> Self {
        let components = p.carriers().iter().map(|&n| (0..n).collect()).collect();
        PresheafMap {
            source: p.clone(),
            target: p,
            components,
        }
    }

    pub fn source(&self) -> &Arc<Presheaf> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Presheaf> {
        &self.target
    }

    pub fn component(&self, c: usize) -> &[usize] {
        &self.components[c]
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn apply(&self, c: usize, x: usize) -> usize {
        self.components[c][x]
    }

    pub fn with_entry(&self, c: usize, x: usize, y: usize) -> Result<Self> {
        let mut components = self.components.clone();
        let slot = components
            .get_mut(c)
            .and_then(|t| t.get_mut(x))
            .ok_or_else(|| Error::malformed("component entry out of range"))?;
        *slot = y;
        Self::new(self.source.clone(), self.target.clone(), components)
    }

    /// `self;next`.
    pub fn then(&self, next: &PresheafMap) -> Result<PresheafMap> {
        if self.target != next.source {
            return Err(Error::malformed("presheaf maps are not composable"));
        }
        let components = self
            .components
            .iter()
            .zip(&next.components)
            .map(|(a, b)| a.iter().map(|&x| b[x]).collect())
            .collect();
        Ok(PresheafMap {
            source: self.source.clone(),
            target: next.target.clone(),
            components,
        })
    }

    /// Naturality on every arrow of the base.
    pub fn check(&self) -> Vec<Finding> {
        let c = self.source.base();
        let mut out = Vec::new();
        for f in 0..c.arrow_count() {
            let (a, b) = (c.src(f), c.dst(f));
            for x in 0..self.source.carrier(b) {
                let lhs = self.components[a][self.source.act(f, x)];
                let rhs = self.target.act(f, self.components[b][x]);
                if lhs != rhs {
                    out.push(Finding::new(
                        Law::Naturality,
                        format!("arrow {f}"),
                        format!("element {x}: {lhs} != {rhs}"),
                    ));
                    break;
                }
            }
        }
        out
    }

    /// Componentwise inverse, if every component is a bijection.
    pub fn inverse(&self) -> Option<PresheafMap> {
        let mut components = Vec::with_capacity(self.components.len());
        for (c, comp) in self.components.iter().enumerate() {
            if self.source.carrier(c) != self.target.carrier(c) {
                return None;
            }
            let mut inv = vec![usize::MAX; comp.len()];
            for (x, &y) in comp.iter().enumerate() {
                if inv[y] != usize::MAX {
                    return None;
                }
                inv[y] = x;
            }
            components.push(inv);
        }
        Some(PresheafMap {
            source: self.target.clone(),
            target: self.source.clone(),
            components,
        })
    }

    pub fn is_iso(&self) -> bool {
        self.inverse().is_some()
    }

    /// The same components viewed between `F∘P` and `F∘Q`.
    pub fn precompose(&self, functor: &FinFunctor) -> Result<PresheafMap> {
        let source = Arc::new(self.source.precompose(functor)?);
        let target = Arc::new(self.target.precompose(functor)?);
        let components = (0..functor.source().objects())
            .map(|x| self.components[functor.object(x)].clone())
            .collect();
        PresheafMap::new(source, target, components)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn identity_is_natural_and_invertible() {
        let c = Arc::new(catalog::chain(2));
        let y = Arc::new(super::super::yoneda(&c, 2));
        let id = PresheafMap::identity(y);
        assert!(id.check().is_empty());
        assert_eq!(id.inverse().unwrap(), id);
        assert_eq!(id.then(&id).unwrap(), id);
    }

    #[test]
    fn unnatural_map_is_reported() {
        let i = Arc::new(catalog::interval());
        // y(1) has carriers (1, 1); y(0) has (1, 0).
        let two = Arc::new(Presheaf::constant(i.clone(), 2));
        let swap = Arc::new(Presheaf::new(i.clone(), vec![2, 2], vec![vec![0, 1], vec![0, 1], vec![1, 0]]).unwrap());
        let m = PresheafMap::new(two, swap, vec![vec![0, 1], vec![0, 1]]).unwrap();
        let f = m.check();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].law, Law::Naturality);
        assert_eq!(f[0].location, "arrow 2");
    }
}
