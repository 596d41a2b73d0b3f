use std::sync::Arc;

use super::ObjExtStructure;
use crate::error::{Error, Result};
use crate::fincat::{CommutingSquare, FinCat};
use crate::finding::{Finding, Law};

/// Chosen arrows `q(f, A): Γ'.f*A -> Γ.A` for every `f: Γ' -> Γ` and
/// `A ∈ Ty(Γ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMorphismStructure {
    over: Arc<ObjExtStructure>,
    q: Vec<Vec<usize>>,
}

impl QMorphismStructure {
    /// `q[f][A]` with `A` ranging over `Ty(dst f)`.
    pub fn new(over: Arc<ObjExtStructure>, q: Vec<Vec<usize>>) -> Result<Self> {
        let c = over.base();
        if q.len() != c.arrow_count() {
            return Err(Error::malformed("q table needs one row per arrow"));
        }
        for (f, row) in q.iter().enumerate() {
            if row.len() != over.ty().carrier(c.dst(f)) {
                return Err(Error::malformed(format!("q row {f} needs one entry per type over its codomain")));
            }
            if row.iter().any(|&g| g >= c.arrow_count()) {
                return Err(Error::malformed(format!("q row {f} leaves the category")));
            }
        }
        Ok(QMorphismStructure { over, q })
    }

    /// `q(f, *) = f` over the trivial extension structure.
    pub fn trivial(base: Arc<FinCat>) -> Self {
        let q = (0..base.arrow_count()).map(|f| vec![f]).collect();
        QMorphismStructure {
            over: Arc::new(ObjExtStructure::trivial(base)),
            q,
        }
    }

    pub fn over(&self) -> &Arc<ObjExtStructure> {
        &self.over
    }

    pub fn q(&self, f: usize, a: usize) -> usize {
        self.q[f][a]
    }

    pub fn q_table(&self) -> &[Vec<usize>] {
        &self.q
    }

    pub fn with_q(&self, f: usize, a: usize, g: usize) -> Result<Self> {
        let mut q = self.q.clone();
        *q.get_mut(f).and_then(|r| r.get_mut(a)).ok_or_else(|| Error::malformed("no such (f, A)"))? = g;
        Self::new(self.over.clone(), q)
    }

    /// `q(f, A)` over `f` against `π_A`:
    ///
    /// ```text
    /// Γ'.f*A --q(f,A)--> Γ.A
    ///    |                |
    ///  π_f*A             π_A
    ///    v                v
    ///    Γ' ------f-----> Γ
    /// ```
    pub fn square(&self, f: usize, a: usize) -> CommutingSquare {
        let fa = self.over.ty().act(f, a);
        let c = self.over.base();
        CommutingSquare::new(self.q[f][a], self.over.dpr(c.src(f), fa), f, self.over.dpr(c.dst(f), a))
    }

    fn endpoints_ok(&self, f: usize, a: usize) -> bool {
        let c = self.over.base();
        let g = self.q[f][a];
        let fa = self.over.ty().act(f, a);
        c.src(g) == self.over.ext(c.src(f), fa) && c.dst(g) == self.over.ext(c.dst(f), a)
    }

    /// The split type-category laws: each q-square commutes and is a
    /// pullback, `q(id, A) = id` and `q(f';f, A) = q(f', f*A);q(f, A)`.
    pub fn check(&self) -> Vec<Finding> {
        let mut out = self.over.check();
        if !out.is_empty() {
            return out;
        }
        let c = &**self.over.base();
        let ty = self.over.ty();
        let mut shape_ok = true;
        for f in 0..c.arrow_count() {
            for a in 0..ty.carrier(c.dst(f)) {
                let here = format!("(f, A) = ({f}, {a})");
                let g = self.q[f][a];
                if !self.endpoints_ok(f, a) {
                    shape_ok = false;
                    out.push(Finding::new(
                        Law::QEndpoints,
                        here,
                        format!("q = {g}: {} -> {}", c.src(g), c.dst(g)),
                    ));
                    continue;
                }
                let sq = self.square(f, a);
                if !sq.commutes(c).expect("validated square") {
                    out.push(Finding::new(
                        Law::QCommutes,
                        here,
                        format!("q;π = {}, π;f = {}", c.then(sq.top, sq.right), c.then(sq.left, sq.bottom)),
                    ));
                    continue;
                }
                if let Some(cone) = sq.pullback_failure(c).expect("commuting square") {
                    out.push(Finding::new(
                        Law::QPullback,
                        here,
                        format!(
                            "cone from {} via ({}, {}) has mediators {:?}",
                            cone.apex, cone.to_left, cone.to_top, cone.mediators
                        ),
                    ));
                }
            }
        }
        for g in 0..c.objects() {
            let id = c.identity(g);
            for a in 0..ty.carrier(g) {
                let want = c.identity(self.over.ext(g, a));
                if self.q[id][a] != want {
                    out.push(Finding::new(
                        Law::QIdentity,
                        format!("(Γ, A) = ({g}, {a})"),
                        format!("q(1, A) = {}, identity is {want}", self.q[id][a]),
                    ));
                }
            }
        }
        if !shape_ok {
            return out;
        }
        for f2 in 0..c.arrow_count() {
            for f in (0..c.arrow_count()).filter(|&f| c.src(f) == c.dst(f2)) {
                let ff = c.then(f2, f);
                for a in 0..ty.carrier(c.dst(f)) {
                    let lhs = self.q[ff][a];
                    let rhs = c.then(self.q[f2][ty.act(f, a)], self.q[f][a]);
                    if lhs != rhs {
                        out.push(Finding::new(
                            Law::QComposition,
                            format!("(f', f, A) = ({f2}, {f}, {a})"),
                            format!("q(f';f, A) = {lhs}, q(f', f*A);q(f, A) = {rhs}"),
                        ));
                    }
                }
            }
        }
        out
    }
}

/// A split type-category: an extension structure completed by a
/// q-morphism structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitTypeCatStructure {
    qq: QMorphismStructure,
}

impl SplitTypeCatStructure {
    pub fn new(qq: QMorphismStructure) -> Self {
        SplitTypeCatStructure { qq }
    }

    pub fn trivial(base: Arc<FinCat>) -> Self {
        SplitTypeCatStructure::new(QMorphismStructure::trivial(base))
    }

    pub fn obj_ext(&self) -> &Arc<ObjExtStructure> {
        self.qq.over()
    }

    pub fn qq(&self) -> &QMorphismStructure {
        &self.qq
    }

    pub fn into_qq(self) -> QMorphismStructure {
        self.qq
    }

    pub fn check(&self) -> Vec<Finding> {
        self.qq.check()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::finding::has_law;

    #[test]
    fn trivial_structure_is_valid() {
        for (_, c) in catalog::suite_categories() {
            assert!(QMorphismStructure::trivial(Arc::new(c)).check().is_empty());
        }
    }

    #[test]
    fn identity_law_mutation() {
        let z = QMorphismStructure::trivial(Arc::new(catalog::z2()));
        let bad = z.with_q(0, 0, 1).unwrap();
        assert!(has_law(&bad.check(), Law::QIdentity));
        let c = Arc::new(catalog::iso_pair());
        let bad = QMorphismStructure::trivial(c).with_q(0, 0, 2).unwrap();
        assert!(has_law(&bad.check(), Law::QEndpoints));
    }

    #[test]
    fn composition_law_on_chain() {
        let c = Arc::new(catalog::chain(2));
        let z = QMorphismStructure::trivial(c.clone());
        assert!(z.check().is_empty());
        for f2 in 0..c.arrow_count() {
            for f in (0..c.arrow_count()).filter(|&f| c.src(f) == c.dst(f2)) {
                assert_eq!(z.q(c.then(f2, f), 0), c.then(z.q(f2, 0), z.q(f, 0)));
            }
        }
    }

    #[test]
    fn z2_identity_over_the_swap_does_not_commute() {
        let z = QMorphismStructure::trivial(Arc::new(catalog::z2())).with_q(1, 0, 0).unwrap();
        assert!(has_law(&z.check(), Law::QCommutes));
    }
}
