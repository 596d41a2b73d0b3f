use std::sync::Arc;

use super::{Presheaf, PresheafMap};
use crate::error::{Error, Result};

/// A square of presheaf maps, laid out like
/// [`CommutingSquare`](crate::fincat::CommutingSquare):
/// `top: P -> B`, `left: P -> A`, `bottom: A -> D`, `right: B -> D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresheafSquare {
    pub top: PresheafMap,
    pub left: PresheafMap,
    pub bottom: PresheafMap,
    pub right: PresheafMap,
}

/// Why the comparison map `P(c) -> A(c) ×_D(c) B(c)` is not a bijection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointwiseFailure {
    NotInjective { object: usize, first: usize, second: usize },
    NotSurjective { object: usize, left: usize, top: usize },
}

impl PresheafSquare {
    pub fn new(top: PresheafMap, left: PresheafMap, bottom: PresheafMap, right: PresheafMap) -> Result<Self> {
        if top.source() != left.source()
            || left.target() != bottom.source()
            || top.target() != right.source()
            || bottom.target() != right.target()
        {
            return Err(Error::malformed("presheaf maps do not form a square"));
        }
        Ok(PresheafSquare { top, left, bottom, right })
    }

    pub fn commutes(&self) -> bool {
        let n = self.top.source().base().objects();
        (0..n).all(|c| {
            (0..self.top.source().carrier(c))
                .all(|x| self.bottom.apply(c, self.left.apply(c, x)) == self.right.apply(c, self.top.apply(c, x)))
        })
    }

    /// Pullbacks of presheaves are computed pointwise: the square is a
    /// pullback iff at every object the corner maps bijectively onto the
    /// fiber product of sets.
    pub fn pullback_failure(&self) -> Result<Option<PointwiseFailure>> {
        if !self.commutes() {
            return Err(Error::precondition("presheaf square does not commute"));
        }
        Ok(self.pointwise_failure())
    }

    pub fn is_pullback(&self) -> Result<bool> {
        Ok(self.pullback_failure()?.is_none())
    }

    pub(crate) fn pointwise_failure(&self) -> Option<PointwiseFailure> {
        let corner = self.top.source();
        let (a, b) = (self.left.target(), self.top.target());
        for c in 0..corner.base().objects() {
            let (na, nb) = (a.carrier(c), b.carrier(c));
            let mut hit = vec![usize::MAX; na * nb];
            for x in 0..corner.carrier(c) {
                let slot = self.left.apply(c, x) * nb + self.top.apply(c, x);
                if hit[slot] != usize::MAX {
                    return Some(PointwiseFailure::NotInjective {
                        object: c,
                        first: hit[slot],
                        second: x,
                    });
                }
                hit[slot] = x;
            }
            for l in 0..na {
                for t in 0..nb {
                    if hit[l * nb + t] == usize::MAX && self.bottom.apply(c, l) == self.right.apply(c, t) {
                        return Some(PointwiseFailure::NotSurjective { object: c, left: l, top: t });
                    }
                }
            }
        }
        None
    }

    /// The canonical pullback of a cospan: at each object, the pairs
    /// `(l, t)` with `bottom(l) == right(t)` in lexicographic order.
    pub fn fiber_product(bottom: PresheafMap, right: PresheafMap) -> Result<Self> {
        if bottom.target() != right.target() {
            return Err(Error::malformed("cospan legs have different codomains"));
        }
        let (a, b) = (bottom.source().clone(), right.source().clone());
        let base = a.base().clone();
        let pairs: Vec<Vec<(usize, usize)>> = (0..base.objects())
            .map(|c| {
                let mut v = Vec::new();
                for l in 0..a.carrier(c) {
                    for t in 0..b.carrier(c) {
                        if bottom.apply(c, l) == right.apply(c, t) {
                            v.push((l, t));
                        }
                    }
                }
                v
            })
            .collect();
        let index = |c: usize, pair: (usize, usize)| pairs[c].iter().position(|&q| q == pair).expect("pair in fiber");
        let action = (0..base.arrow_count())
            .map(|f| {
                let (s, d) = (base.src(f), base.dst(f));
                pairs[d].iter().map(|&(l, t)| index(s, (a.act(f, l), b.act(f, t)))).collect()
            })
            .collect();
        let corner = Arc::new(Presheaf::new(base, pairs.iter().map(Vec::len).collect(), action)?);
        let left = PresheafMap::new(corner.clone(), a, pairs.iter().map(|v| v.iter().map(|p| p.0).collect()).collect())?;
        let top = PresheafMap::new(corner, b, pairs.iter().map(|v| v.iter().map(|p| p.1).collect()).collect())?;
        Self::new(top, left, bottom, right)
    }
}
