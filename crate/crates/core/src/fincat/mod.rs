//! Finite categories given by explicit identity and composition tables.

mod functor;
mod square;

pub use functor::{FinFunctor, FunctorProperties, NatIso};
pub use square::{is_pullback, CommutingSquare, ConeFailure};

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::finding::{Finding, Law};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub src: usize,
    pub dst: usize,
}

/// A finite category.
///
/// Arrows are indexed globally; hom-sets are derived views listing arrows in
/// ascending index order. Composition is stored in diagrammatic order:
/// `then(f, g)` is `f;g`, defined exactly when `dst(f) == src(g)`.
///
/// Construction only validates indexing. The category laws are checked by
/// [`FinCat::check`], so a `FinCat` may be a malformed-but-indexable table
/// (this is what mutation tests feed to the checker). Every other operation
/// assumes the laws hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCat {
    objects: usize,
    arrows: Vec<Arrow>,
    identity: Vec<usize>,
    // table[f * arrows.len() + g] = f;g
    table: Vec<Option<usize>>,
    homs: Vec<Vec<usize>>,
    hom_pos: Vec<usize>,
}

impl FinCat {
    /// Builds a category from composition entries `(g, f, f;g)`, the order
    /// used by the JSON format. Every composable pair must be listed exactly
    /// once and no other pair may be.
    pub fn new(
        objects: usize,
        arrows: Vec<Arrow>,
        identity: Vec<usize>,
        compose: impl IntoIterator<Item = (usize, usize, usize)>,
    ) -> Result<Self> {
        let n = arrows.len();
        for (i, a) in arrows.iter().enumerate() {
            if a.src >= objects || a.dst >= objects {
                return Err(Error::malformed(format!("arrow {i} has an endpoint out of range")));
            }
        }
        if identity.len() != objects {
            return Err(Error::malformed(format!(
                "identity table has {} entries for {objects} objects",
                identity.len()
            )));
        }
        if let Some(c) = identity.iter().position(|&a| a >= n) {
            return Err(Error::malformed(format!("identity of object {c} is out of range")));
        }
        let mut table = vec![None; n * n];
        for (g, f, fg) in compose {
            if f >= n || g >= n || fg >= n {
                return Err(Error::malformed(format!("compose entry ({g}, {f}) has an index out of range")));
            }
            if arrows[f].dst != arrows[g].src {
                return Err(Error::malformed(format!("compose entry ({g}, {f}) is not a composable pair")));
            }
            if table[f * n + g].replace(fg).is_some() {
                return Err(Error::malformed(format!("compose entry ({g}, {f}) listed twice")));
            }
        }
        for f in 0..n {
            for g in 0..n {
                if arrows[f].dst == arrows[g].src && table[f * n + g].is_none() {
                    return Err(Error::malformed(format!("compose entry ({g}, {f}) is missing")));
                }
            }
        }
        Ok(Self::assemble(objects, arrows, identity, table))
    }

    /// Builds a category from a composition function `(f, g) -> f;g`
    /// evaluated on every composable pair.
    pub fn from_fn(
        objects: usize,
        arrows: Vec<Arrow>,
        identity: Vec<usize>,
        mut then: impl FnMut(usize, usize) -> usize,
    ) -> Result<Self> {
        let n = arrows.len();
        let mut entries = Vec::new();
        for f in 0..n {
            for g in 0..n {
                if arrows[f].dst == arrows[g].src {
                    entries.push((g, f, then(f, g)));
                }
            }
        }
        Self::new(objects, arrows, identity, entries)
    }

    fn assemble(objects: usize, arrows: Vec<Arrow>, identity: Vec<usize>, table: Vec<Option<usize>>) -> Self {
        let mut homs = vec![Vec::new(); objects * objects];
        let mut hom_pos = vec![0; arrows.len()];
        for (i, a) in arrows.iter().enumerate() {
            let hom = &mut homs[a.src * objects + a.dst];
            hom_pos[i] = hom.len();
            hom.push(i);
        }
        FinCat {
            objects,
            arrows,
            identity,
            table,
            homs,
            hom_pos,
        }
    }

    pub fn objects(&self) -> usize {
        self.objects
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn src(&self, f: usize) -> usize {
        self.arrows[f].src
    }

    pub fn dst(&self, f: usize) -> usize {
        self.arrows[f].dst
    }

    pub fn identity(&self, c: usize) -> usize {
        self.identity[c]
    }

    pub fn identities(&self) -> &[usize] {
        &self.identity
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identity[self.arrows[f].src] == f
    }

    /// `f;g`. Panics if the pair is not composable.
    pub fn then(&self, f: usize, g: usize) -> usize {
        self.table[f * self.arrows.len() + g]
            .unwrap_or_else(|| panic!("arrows {f} and {g} are not composable"))
    }

    pub fn try_then(&self, f: usize, g: usize) -> Result<usize> {
        let n = self.arrows.len();
        if f >= n || g >= n {
            return Err(Error::malformed(format!("arrow index out of range in ({f}, {g})")));
        }
        self.table[f * n + g]
            .ok_or_else(|| Error::malformed(format!("arrows {f} and {g} are not composable")))
    }

    /// Arrows `a -> b` in ascending index order.
    pub fn hom(&self, a: usize, b: usize) -> &[usize] {
        &self.homs[a * self.objects + b]
    }

    /// Position of `f` within its hom-set.
    pub fn hom_position(&self, f: usize) -> usize {
        self.hom_pos[f]
    }

    /// Composition entries `(g, f, f;g)` in ascending `(f, g)` order.
    pub fn compose_entries(&self) -> Vec<(usize, usize, usize)> {
        let n = self.arrows.len();
        let mut out = Vec::new();
        for f in 0..n {
            for g in 0..n {
                if let Some(fg) = self.table[f * n + g] {
                    out.push((g, f, fg));
                }
            }
        }
        out
    }

    /// A copy with the composite `f;g` replaced.
    pub fn with_composite(&self, f: usize, g: usize, fg: usize) -> Result<Self> {
        self.try_then(f, g)?;
        if fg >= self.arrows.len() {
            return Err(Error::malformed(format!("arrow {fg} out of range")));
        }
        let mut out = self.clone();
        out.table[f * self.arrows.len() + g] = Some(fg);
        Ok(out)
    }

    /// A copy with the identity of `c` replaced.
    pub fn with_identity(&self, c: usize, id: usize) -> Result<Self> {
        if c >= self.objects || id >= self.arrows.len() {
            return Err(Error::malformed("identity replacement out of range"));
        }
        let mut out = self.clone();
        out.identity[c] = id;
        Ok(out)
    }

    /// Checks identity, endpoint, unit and associativity laws on every
    /// composable tuple. An empty result means the table is a category.
    pub fn check(&self) -> Vec<Finding> {
        let mut out = Vec::new();
        for c in 0..self.objects {
            let id = self.identity[c];
            if self.arrows[id].src != c || self.arrows[id].dst != c {
                out.push(Finding::new(
                    Law::IdentityEndpoints,
                    format!("object {c}"),
                    format!("identity {id} runs {} -> {}", self.arrows[id].src, self.arrows[id].dst),
                ));
            }
        }
        let n = self.arrows.len();
        let composable = |f: usize, g: usize| self.arrows[f].dst == self.arrows[g].src;
        let mut endpoint_ok = true;
        for f in 0..n {
            for g in 0..n {
                if !composable(f, g) {
                    continue;
                }
                let fg = self.then(f, g);
                if self.arrows[fg].src != self.arrows[f].src || self.arrows[fg].dst != self.arrows[g].dst {
                    endpoint_ok = false;
                    out.push(Finding::new(
                        Law::CompositeEndpoints,
                        format!("arrows ({f}, {g})"),
                        format!("composite {fg}"),
                    ));
                }
            }
        }
        for f in 0..n {
            let a = self.arrows[f];
            // Identities with wrong endpoints were reported above.
            if let Ok(left) = self.try_then(self.identity[a.src], f) {
                if left != f {
                    out.push(Finding::new(Law::LeftIdentity, format!("arrow {f}"), format!("id;{f} = {left}")));
                }
            }
            if let Ok(right) = self.try_then(f, self.identity[a.dst]) {
                if right != f {
                    out.push(Finding::new(Law::RightIdentity, format!("arrow {f}"), format!("{f};id = {right}")));
                }
            }
        }
        // Associativity is only meaningful once composites land in the right hom-sets.
        if endpoint_ok {
            for f in 0..n {
                for g in 0..n {
                    if !composable(f, g) {
                        continue;
                    }
                    let fg = self.then(f, g);
                    for h in 0..n {
                        if !composable(g, h) {
                            continue;
                        }
                        let lhs = self.then(fg, h);
                        let rhs = self.then(f, self.then(g, h));
                        if lhs != rhs {
                            out.push(Finding::new(
                                Law::Associativity,
                                format!("arrows ({f}, {g}, {h})"),
                                format!("({f};{g});{h} = {lhs}, {f};({g};{h}) = {rhs}"),
                            ));
                        }
                    }
                }
            }
        }
        out
    }

    /// The inverse of `f`, if `f` is an isomorphism.
    pub fn is_iso(&self, f: usize) -> Option<usize> {
        let a = self.arrows[f];
        self.hom(a.dst, a.src)
            .iter()
            .copied()
            .find(|&g| self.then(f, g) == self.identity[a.src] && self.then(g, f) == self.identity[a.dst])
    }

    /// Lowest-index non-identity isomorphism, if any.
    pub fn gaunt_counterexample(&self) -> Option<usize> {
        (0..self.arrows.len()).find(|&f| !self.is_identity(f) && self.is_iso(f).is_some())
    }

    /// Every isomorphism is an identity.
    pub fn is_gaunt(&self) -> bool {
        self.gaunt_counterexample().is_none()
    }

    /// Isomorphism classes of objects, each sorted, ordered by least member.
    pub fn iso_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = BTreeSet::new();
        let mut classes = Vec::new();
        for a in 0..self.objects {
            if seen.contains(&a) {
                continue;
            }
            let class: Vec<usize> = (0..self.objects)
                .filter(|&b| self.first_iso(a, b).is_some())
                .collect();
            seen.extend(class.iter().copied());
            classes.push(class);
        }
        classes
    }

    /// Lowest-index isomorphism `a -> b`.
    pub fn first_iso(&self, a: usize, b: usize) -> Option<usize> {
        self.hom(a, b).iter().copied().find(|&f| self.is_iso(f).is_some())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn terminal_and_interval_are_valid() {
        assert!(catalog::terminal().check().is_empty());
        let i = catalog::interval();
        assert_eq!(i.objects(), 2);
        assert_eq!(i.arrow_count(), 3);
        assert!(i.check().is_empty());
    }

    #[test]
    fn redirected_left_identity_is_reported() {
        // interval: id0 = 0, id1 = 1, s = 2 : 0 -> 1
        let i = catalog::interval();
        let bad = i.with_composite(0, 2, 0).unwrap();
        let findings = bad.check();
        let left: Vec<_> = findings.iter().filter(|f| f.law == Law::LeftIdentity).collect();
        assert_eq!(left.len(), 1);
        assert_eq!(left[0].location, "arrow 2");
        assert_eq!(left[0].to_string(), "category: left identity fails at arrow 2 (id;2 = 0)");
    }

    #[test]
    fn missing_or_extra_compose_entries_are_malformed() {
        let arrows = vec![Arrow { src: 0, dst: 0 }];
        assert!(matches!(FinCat::new(1, arrows.clone(), vec![0], []), Err(Error::Malformed(_))));
        assert!(matches!(
            FinCat::new(1, arrows.clone(), vec![0], [(0, 0, 0), (0, 0, 0)]),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(FinCat::new(1, arrows, vec![3], [(0, 0, 0)]), Err(Error::Malformed(_))));
        let two = vec![Arrow { src: 0, dst: 0 }, Arrow { src: 1, dst: 1 }];
        assert!(matches!(
            FinCat::new(2, two, vec![0, 1], [(0, 0, 0), (1, 1, 1), (1, 0, 0)]),
            Err(Error::Malformed(_))
        ));
    }

    #[test]
    fn querying_a_non_composable_pair_is_malformed() {
        let i = catalog::interval();
        assert!(matches!(i.try_then(2, 0), Err(Error::Malformed(_))));
        assert_eq!(i.try_then(0, 2), Ok(2));
    }

    #[test]
    fn isos() {
        let i = catalog::interval();
        assert_eq!(i.is_iso(0), Some(0));
        assert_eq!(i.is_iso(2), None);
        let p = catalog::iso_pair();
        assert_eq!(p.is_iso(2), Some(3));
        assert_eq!(p.is_iso(3), Some(2));
    }

    #[test]
    fn gauntness() {
        assert!(catalog::chain(3).is_gaunt());
        assert_eq!(catalog::iso_pair().gaunt_counterexample(), Some(2));
        assert_eq!(catalog::z2().gaunt_counterexample(), Some(1));
    }

    #[test]
    fn iso_classes_of_three_object_category() {
        let c = catalog::three_with_iso_pair();
        assert_eq!(c.iso_classes(), vec![vec![0], vec![1, 2]]);
    }
}
