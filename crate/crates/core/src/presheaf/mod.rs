//! Finite presheaves on a [`FinCat`], maps between them, the Yoneda
//! embedding and pointwise pullbacks.
//!
//! A presheaf assigns to each object `c` the set `{0, .., carrier(c) - 1}`
//! and to each arrow `f: a -> b` a function table `P(b) -> P(a)`.

mod enumerate;
mod map;
mod square;
mod yoneda;

pub use enumerate::{all_maps, all_presheaves, find_iso, isomorphic, presheaves_with_carriers};
pub use map::PresheafMap;
pub use square::{PointwiseFailure, PresheafSquare};
pub use yoneda::{transpose, transpose_inverse, yoneda, yoneda_on_arrow};

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{FinCat, FinFunctor};
use crate::finding::{Finding, Law};

#[derive(Debug, Clone)]
pub struct Presheaf {
    base: Arc<FinCat>,
    carrier: Vec<usize>,
    action: Vec<Vec<usize>>,
}

impl PartialEq for Presheaf {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.base, &other.base) || self.base == other.base)
            && self.carrier == other.carrier
            && self.action == other.action
    }
}

impl Eq for Presheaf {}

impl Presheaf {
    /// `action[f]` is the table of `P(f): P(dst f) -> P(src f)`.
    pub fn new(base: Arc<FinCat>, carrier: Vec<usize>, action: Vec<Vec<usize>>) -> Result<Self> {
        if carrier.len() != base.objects() {
            return Err(Error::malformed(format!(
                "presheaf has {} carriers for {} objects",
                carrier.len(),
                base.objects()
            )));
        }
        if action.len() != base.arrow_count() {
            return Err(Error::malformed(format!(
                "presheaf has {} action tables for {} arrows",
                action.len(),
                base.arrow_count()
            )));
        }
        for (f, table) in action.iter().enumerate() {
            if table.len() != carrier[base.dst(f)] {
                return Err(Error::malformed(format!("action table of arrow {f} has the wrong length")));
            }
            if table.iter().any(|&y| y >= carrier[base.src(f)]) {
                return Err(Error::malformed(format!("action table of arrow {f} leaves its codomain")));
            }
        }
        Ok(Presheaf { base, carrier, action })
    }

    /// Every carrier has `size` elements and every arrow acts as the identity.
    pub fn constant(base: Arc<FinCat>, size: usize) -> Self {
        let carrier = vec![size; base.objects()];
        let action = vec![(0..size).collect(); base.arrow_count()];
        Presheaf { base, carrier, action }
    }

    pub fn terminal(base: Arc<FinCat>) -> Self {
        Self::constant(base, 1)
    }

    pub fn empty(base: Arc<FinCat>) -> Self {
        Self::constant(base, 0)
    }

    pub fn base(&self) -> &Arc<FinCat> {
        &self.base
    }

    pub fn carrier(&self, c: usize) -> usize {
        self.carrier[c]
    }

    pub fn carriers(&self) -> &[usize] {
        &self.carrier
    }

    pub fn action(&self, f: usize) -> &[usize] {
        &self.action[f]
    }

    /// `f* x`.
    pub fn act(&self, f: usize, x: usize) -> usize {
        self.action[f][x]
    }

    pub fn actions(&self) -> &[Vec<usize>] {
        &self.action
    }

    pub fn with_action_entry(&self, f: usize, x: usize, y: usize) -> Result<Self> {
        let mut action = self.action.clone();
        let slot = action
            .get_mut(f)
            .and_then(|t| t.get_mut(x))
            .ok_or_else(|| Error::malformed("action entry out of range"))?;
        *slot = y;
        Self::new(self.base.clone(), self.carrier.clone(), action)
    }

    /// Functor laws. Empty means the tables form a presheaf.
    pub fn check(&self) -> Vec<Finding> {
        let c = &*self.base;
        let mut out = Vec::new();
        for x in 0..c.objects() {
            let id = c.identity(x);
            if let Some(e) = (0..self.carrier[x]).find(|&e| self.action[id][e] != e) {
                out.push(Finding::new(
                    Law::PresheafIdentity,
                    format!("object {x}"),
                    format!("identity sends {e} to {}", self.action[id][e]),
                ));
            }
        }
        for f in 0..c.arrow_count() {
            for g in (0..c.arrow_count()).filter(|&g| c.src(g) == c.dst(f)) {
                let fg = c.then(f, g);
                if let Some(e) = (0..self.carrier[c.dst(g)]).find(|&e| self.action[fg][e] != self.action[f][self.action[g][e]]) {
                    out.push(Finding::new(
                        Law::PresheafComposition,
                        format!("arrows ({f}, {g})"),
                        format!(
                            "(f;g)* {e} = {}, f*(g* {e}) = {}",
                            self.action[fg][e],
                            self.action[f][self.action[g][e]]
                        ),
                    ));
                }
            }
        }
        out
    }

    /// `P ∘ F^op` for `F: C -> D` and `P` on `D`.
    pub fn precompose(&self, functor: &FinFunctor) -> Result<Presheaf> {
        if **functor.target() != *self.base {
            return Err(Error::malformed("functor does not land in the presheaf's base"));
        }
        let c = functor.source();
        let carrier = (0..c.objects()).map(|x| self.carrier[functor.object(x)]).collect();
        let action = (0..c.arrow_count()).map(|f| self.action[functor.arrow(f)].clone()).collect();
        Presheaf::new(c.clone(), carrier, action)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn terminal_presheaf_is_valid_everywhere() {
        for (_, c) in catalog::suite_categories() {
            assert!(Presheaf::terminal(Arc::new(c)).check().is_empty());
        }
    }

    #[test]
    fn mutating_an_action_entry_is_caught() {
        let i = Arc::new(catalog::interval());
        let p = Presheaf::constant(i, 2);
        let bad = p.with_action_entry(2, 0, 1).unwrap();
        assert!(bad.check().is_empty(), "any function is an action on the interval");
        let bad = p.with_action_entry(0, 0, 1).unwrap();
        let f = bad.check();
        assert_eq!(f[0].law, Law::PresheafIdentity);
        assert_eq!(f[0].location, "object 0");
    }

    #[test]
    fn shape_errors_are_malformed() {
        let i = Arc::new(catalog::interval());
        assert!(matches!(Presheaf::new(i.clone(), vec![1], vec![]), Err(Error::Malformed(_))));
        assert!(matches!(
            Presheaf::new(i, vec![1, 1], vec![vec![0], vec![0], vec![1]]),
            Err(Error::Malformed(_))
        ));
    }

    #[test]
    fn precompose_along_identity_and_to_terminal() {
        let i = Arc::new(catalog::interval());
        let t = Arc::new(catalog::terminal());
        let y1 = yoneda(&i, 1);
        assert_eq!(y1.precompose(&FinFunctor::identity(i.clone())).unwrap(), y1);
        let bang = FinFunctor::constant(i.clone(), t.clone(), 0).unwrap();
        assert_eq!(
            Presheaf::terminal(t).precompose(&bang).unwrap(),
            Presheaf::terminal(i)
        );
    }
}
