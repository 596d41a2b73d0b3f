use std::fmt;
use std::sync::Arc;

use super::rep::cwf_from_rep_gaunt;
use super::target::{yoneda_embedding, Embedding, FinCatTarget, PresheafCategory, Square, TargetCategory};
use super::universe::{
    cwf_to_relu, is_weak_relative_universe, jpullback_failure, jpullbacks, relu_to_cwf, JPullback, RelUnivData,
    RelativeUniverse,
};
use crate::catalog::{skeletonize, SkeletonData};
use crate::error::{Error, Result};
use crate::fincat::{FinCat, FinFunctor};
use crate::presheaf::{yoneda, Presheaf, PresheafMap};
use crate::structures::CwfStructure;

/// A functor `S: D -> E` between target categories.
pub trait TargetFunctor<D: TargetCategory, E: TargetCategory> {
    fn object(&self, x: &D::Obj) -> Result<E::Obj>;
    fn arrow(&self, f: &D::Mor) -> Result<E::Mor>;
}

impl TargetFunctor<FinCatTarget, FinCatTarget> for FinFunctor {
    fn object(&self, x: &usize) -> Result<usize> {
        if *x >= self.source().objects() {
            return Err(Error::malformed(format!("object {x} out of range")));
        }
        Ok(FinFunctor::object(self, *x))
    }

    fn arrow(&self, f: &usize) -> Result<usize> {
        if *f >= self.source().arrow_count() {
            return Err(Error::malformed(format!("arrow {f} out of range")));
        }
        Ok(FinFunctor::arrow(self, *f))
    }
}

/// Restriction of presheaves along `along: C' -> C`, a functor
/// `PSh(C) -> PSh(C')`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Precomposition {
    pub along: FinFunctor,
}

impl TargetFunctor<PresheafCategory, PresheafCategory> for Precomposition {
    fn object(&self, x: &Arc<Presheaf>) -> Result<Arc<Presheaf>> {
        Ok(Arc::new(x.precompose(&self.along)?))
    }

    fn arrow(&self, f: &PresheafMap) -> Result<PresheafMap> {
        f.precompose(&self.along)
    }
}

/// Given `S a`, `S b` preimages `a`, `b` and `m: S a -> S b`, a preimage of `m`.
pub type LiftOracle<D, E> = Arc<
    dyn Fn(&<D as TargetCategory>::Obj, &<D as TargetCategory>::Obj, &<E as TargetCategory>::Mor) -> Option<<D as TargetCategory>::Mor>
        + Send
        + Sync,
>;

/// ```text
///      J
///   C ----> D
///   |       |
///  R|   α   |S
///   v       v
///   C' ---> E
///      J'
/// ```
///
/// with `α_X: S(J X) -> J'(R X)`. Missing splittings are searched for.
#[derive(Clone)]
pub struct FunctorSquare<D: TargetCategory, E: TargetCategory, S> {
    pub source: D,
    pub target: E,
    pub j: Embedding<D>,
    pub j2: Embedding<E>,
    pub r: FinFunctor,
    pub s: S,
    pub alpha: Vec<E::Mor>,
    /// `r_split[X'] = (X, i: R X -> X')`.
    pub r_split: Option<Vec<(usize, usize)>>,
    pub s_full: Option<LiftOracle<D, E>>,
}

impl<D: TargetCategory + fmt::Debug, E: TargetCategory + fmt::Debug, S: fmt::Debug> fmt::Debug for FunctorSquare<D, E, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FunctorSquare")
            .field("r", &self.r)
            .field("s", &self.s)
            .field("alpha", &self.alpha)
            .field("r_split", &self.r_split)
            .field("s_full", &self.s_full.as_ref().map(|_| "oracle"))
            .finish()
    }
}

impl<D: TargetCategory, E: TargetCategory, S: TargetFunctor<D, E>> FunctorSquare<D, E, S> {
    /// Each `α_X` is an isomorphism `S(J X) -> J'(R X)` and `α` is natural.
    pub fn check_alpha(&self) -> Result<()> {
        let c = self.j.source();
        if self.alpha.len() != c.objects() {
            return Err(Error::malformed("α needs one component per object"));
        }
        for x in 0..c.objects() {
            let a = &self.alpha[x];
            let sjx = self.s.object(self.j.object(x))?;
            if self.target.dom(a) != sjx
                || self.target.cod(a) != *self.j2.object(self.r.object(x))
                || self.target.inverse(a).is_none()
            {
                return Err(Error::Oracle(format!("α component at object {x} is not an isomorphism S(J X) -> J'(R X)")));
            }
        }
        for f in 0..c.arrow_count() {
            let lhs = self.target.then(&self.s.arrow(self.j.arrow(f))?, &self.alpha[c.dst(f)])?;
            let rhs = self.target.then(&self.alpha[c.src(f)], self.j2.arrow(self.r.arrow(f)))?;
            if lhs != rhs {
                return Err(Error::Oracle(format!("α not natural at arrow {f}")));
            }
        }
        Ok(())
    }

    /// `(X, i: R X -> X')`, from the oracle (verified) or by search.
    pub fn split(&self, x2: usize) -> Result<(usize, usize)> {
        let c2 = self.r.target();
        match &self.r_split {
            Some(table) => {
                let &(x, i) = table
                    .get(x2)
                    .ok_or_else(|| Error::Oracle(format!("R-splitting has no entry for object {x2}")))?;
                if x >= self.r.source().objects()
                    || i >= c2.arrow_count()
                    || c2.src(i) != self.r.object(x)
                    || c2.dst(i) != x2
                    || c2.is_iso(i).is_none()
                {
                    return Err(Error::Oracle(format!("R-splitting at object {x2} is not an iso R({x}) -> {x2}")));
                }
                Ok((x, i))
            }
            None => self
                .r
                .ess_surj_witness(x2)
                .ok_or_else(|| Error::Hypothesis(format!("R not essentially surjective at object {x2}"))),
        }
    }

    /// A preimage of `m: S a -> S b`, from the oracle (verified) or by search.
    pub fn lift(&self, a: &D::Obj, b: &D::Obj, m: &E::Mor) -> Result<D::Mor> {
        match &self.s_full {
            Some(oracle) => {
                let g = oracle(a, b, m).ok_or_else(|| Error::Oracle("S-fullness oracle returned nothing".into()))?;
                if self.source.dom(&g) != *a || self.source.cod(&g) != *b || self.s.arrow(&g)? != *m {
                    return Err(Error::Oracle("S-fullness oracle returned a map S does not send to the target".into()));
                }
                Ok(g)
            }
            None => {
                for g in self.source.hom(a, b) {
                    if self.s.arrow(&g)? == *m {
                        return Ok(g);
                    }
                }
                Err(Error::Hypothesis(format!("S not full: {m:?} has no preimage")))
            }
        }
    }

    fn s_hom_map(&self, a: &D::Obj, b: &D::Obj) -> Result<(Vec<E::Mor>, Vec<E::Mor>)> {
        let images = self
            .source
            .hom(a, b)
            .iter()
            .map(|g| self.s.arrow(g))
            .collect::<Result<Vec<_>>>()?;
        let all = self.target.hom(&self.s.object(a)?, &self.s.object(b)?);
        Ok((images, all))
    }

    fn s_full_on(&self, a: &D::Obj, b: &D::Obj, what: &str) -> Result<()> {
        let (images, all) = self.s_hom_map(a, b)?;
        match all.iter().position(|m| !images.contains(m)) {
            None => Ok(()),
            Some(k) => Err(Error::Hypothesis(format!("S not full at {what}: map {k} has no preimage"))),
        }
    }

    fn s_faithful_on(&self, a: &D::Obj, b: &D::Obj, what: &str) -> Result<()> {
        let (images, _) = self.s_hom_map(a, b)?;
        for (k, m) in images.iter().enumerate() {
            if images[..k].contains(m) {
                return Err(Error::Hypothesis(format!("S not faithful at {what}: map {k} collides")));
            }
        }
        Ok(())
    }

    fn data(&self, p: &D::Mor) -> RelUnivData<D>
    where
        D: Clone,
    {
        RelUnivData {
            target: self.source.clone(),
            j: self.j.clone(),
            p: p.clone(),
        }
    }

    fn pushed_data(&self, p: &D::Mor) -> Result<RelUnivData<E>>
    where
        E: Clone,
    {
        Ok(RelUnivData {
            target: self.target.clone(),
            j: self.j2.clone(),
            p: self.s.arrow(p)?,
        })
    }
}

/// Transfers a relative universe along a square: for `f: J' X' -> S U`,
/// split `X'` as `i: R X -> X'`, lift `α_X;J'i;f` to `f̄: J X -> U`, push
/// the chosen J-pullback at `(X, f̄)` through `S` and correct it by `α` and `i`.
pub fn transfer_universe_split<D, E, S>(sq: &FunctorSquare<D, E, S>, u: &RelativeUniverse<D>) -> Result<RelativeUniverse<E>>
where
    D: TargetCategory + Clone,
    E: TargetCategory + Clone,
    S: TargetFunctor<D, E>,
{
    if u.data.j != sq.j {
        return Err(Error::malformed("universe is not relative to the square's J"));
    }
    sq.check_alpha()?;
    let e = &sq.target;
    let c2 = sq.r.target();
    let data2 = sq.pushed_data(&u.data.p)?;
    let big_u = u.data.base_object();
    let mut table = Vec::new();
    for x2 in 0..c2.objects() {
        let (xb, i) = sq.split(x2)?;
        for f in data2.classifying_maps(x2) {
            let target_map = e.then(&e.then(&sq.alpha[xb], sq.j2.arrow(i))?, &f)?;
            let fb = sq.lift(sq.j.object(xb), &big_u, &target_map)?;
            let entry = u
                .entry(xb, &fb)
                .ok_or_else(|| Error::precondition(format!("universe has no J-pullback at X = {xb}")))?;
            let sq_q = sq.s.arrow(&entry.q)?;
            let pushed = Square {
                top: sq_q.clone(),
                left: sq.s.arrow(sq.j.arrow(entry.proj))?,
                bottom: sq.s.arrow(&fb)?,
                right: data2.p.clone(),
            };
            if !e.is_pullback(&pushed)? {
                return Err(Error::Preservation(format!(
                    "S does not preserve the J-pullback at X = {xb} with apex {}",
                    entry.apex
                )));
            }
            let alpha_inv = e.inverse(&sq.alpha[entry.apex]).expect("α checked invertible");
            let cand = JPullback {
                apex: sq.r.object(entry.apex),
                proj: c2.then(sq.r.arrow(entry.proj), i),
                q: e.then(&alpha_inv, &sq_q)?,
            };
            if let Some(bad) = jpullback_failure(&data2, x2, &f, &cand)? {
                return Err(Error::inconsistent(format!("transferred J-pullback fails: {bad}")));
            }
            table.push((x2, f, cand));
        }
    }
    RelativeUniverse::new(data2, table)
}

/// Checks that `R` is split essentially surjective and `S` is full where
/// the transfer needs it, then decides whether `S p` is a weak universe.
pub fn transfer_weak_universe<D, E, S>(sq: &FunctorSquare<D, E, S>, p: &D::Mor) -> Result<bool>
where
    D: TargetCategory + Clone,
    E: TargetCategory + Clone,
    S: TargetFunctor<D, E>,
{
    sq.check_alpha()?;
    for x2 in 0..sq.r.target().objects() {
        sq.split(x2)?;
    }
    let data = sq.data(p);
    let big_u = data.base_object();
    for x in 0..sq.j.source().objects() {
        sq.s_full_on(sq.j.object(x), &big_u, &format!("hom(J({x}), U)"))?;
    }
    is_weak_relative_universe(&sq.pushed_data(p)?)
}

/// The extra hypotheses for the converse: `R` full and `S` faithful.
pub fn converse_hypotheses<D, E, S>(sq: &FunctorSquare<D, E, S>, p: &D::Mor) -> Result<()>
where
    D: TargetCategory + Clone,
    E: TargetCategory + Clone,
    S: TargetFunctor<D, E>,
{
    if let Some((a, b, g)) = sq.r.fullness_failure() {
        return Err(Error::Hypothesis(format!("R not full at ({a}, {b}): arrow {g} has no preimage")));
    }
    let data = sq.data(p);
    let (big_u, total) = (data.base_object(), data.total());
    for x in 0..sq.j.source().objects() {
        sq.s_faithful_on(sq.j.object(x), &big_u, &format!("hom(J({x}), U)"))?;
        sq.s_faithful_on(sq.j.object(x), &total, &format!("hom(J({x}), Ũ)"))?;
    }
    Ok(())
}

/// `(p weak over J, S p weak over J')`, with all hypotheses of both
/// directions checked.
pub fn weak_universe_pair<D, E, S>(sq: &FunctorSquare<D, E, S>, p: &D::Mor) -> Result<(bool, bool)>
where
    D: TargetCategory + Clone,
    E: TargetCategory + Clone,
    S: TargetFunctor<D, E>,
{
    converse_hypotheses(sq, p)?;
    let pushed = transfer_weak_universe(sq, p)?;
    Ok((is_weak_relative_universe(&sq.data(p))?, pushed))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceEntry {
    pub source_weak: bool,
    pub target_weak: bool,
    /// J'-pullbacks of `S p` per `(X', f)`, when the uniqueness clause runs.
    pub jpullback_counts: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub entries: Vec<EquivalenceEntry>,
    /// `S p` is weak exactly when `p` is, for every `p` in the inventory.
    pub corresponds: bool,
    /// Every weak `S p` has exactly one J'-pullback per `(X', f)` and the
    /// others at most one. `None` when the clause was skipped.
    pub unique: Option<bool>,
    pub notice: Option<String>,
}

/// Compares weak universes on both sides of the square over an inventory
/// of maps `p`, and on a gaunt `C'` with `J'` fully faithful counts
/// J'-pullbacks.
pub fn weak_universe_equivalence_suite<D, E, S>(sq: &FunctorSquare<D, E, S>, inventory: &[D::Mor]) -> Result<EquivalenceReport>
where
    D: TargetCategory + Clone,
    E: TargetCategory + Clone,
    S: TargetFunctor<D, E>,
{
    let c2 = sq.j2.source();
    let notice = if !c2.is_gaunt() {
        Some("uniqueness clause skipped: base is not gaunt".to_string())
    } else if !sq.j2.is_fully_faithful(&sq.target) {
        Some("uniqueness clause skipped: J' is not fully faithful".to_string())
    } else {
        None
    };
    let mut entries = Vec::with_capacity(inventory.len());
    for p in inventory {
        let (source_weak, target_weak) = weak_universe_pair(sq, p)?;
        let pushed = sq.pushed_data(p)?;
        let jpullback_counts = match notice {
            Some(_) => None,
            None => {
                let mut counts = Vec::new();
                for x2 in 0..c2.objects() {
                    for f in pushed.classifying_maps(x2) {
                        counts.push(jpullbacks(&pushed, x2, &f)?.len());
                    }
                }
                Some(counts)
            }
        };
        entries.push(EquivalenceEntry {
            source_weak,
            target_weak,
            jpullback_counts,
        });
    }
    let corresponds = entries.iter().all(|e| e.source_weak == e.target_weak);
    let unique = notice.is_none().then(|| {
        entries.iter().all(|e| {
            let counts = e.jpullback_counts.as_ref().expect("counted");
            if e.target_weak {
                counts.iter().all(|&n| n == 1)
            } else {
                counts.iter().all(|&n| n <= 1)
            }
        })
    });
    Ok(EquivalenceReport {
        entries,
        corresponds,
        unique,
        notice,
    })
}

type PresheafSquareOfFunctors = FunctorSquare<PresheafCategory, PresheafCategory, Precomposition>;

/// The identity square on Yoneda: `R`, `S` and `α` all identities.
pub fn identity_square(c: &Arc<FinCat>) -> PresheafSquareOfFunctors {
    let (d, j) = yoneda_embedding(c);
    let alpha = (0..c.objects()).map(|x| PresheafMap::identity(j.object(x).clone())).collect();
    FunctorSquare {
        source: d.clone(),
        target: d,
        j: j.clone(),
        j2: j,
        r: FinFunctor::identity(c.clone()),
        s: Precomposition {
            along: FinFunctor::identity(c.clone()),
        },
        alpha,
        r_split: Some((0..c.objects()).map(|x| (x, c.identity(x))).collect()),
        s_full: Some(Arc::new(|a: &Arc<Presheaf>, b: &Arc<Presheaf>, m: &PresheafMap| {
            PresheafMap::new(a.clone(), b.clone(), m.components().to_vec()).ok()
        })),
    }
}

/// The square relating Yoneda on `C` to Yoneda on its skeleton: `R` is the
/// projection `F`, `S` restricts along the section `G`, and `α_X` sends
/// `g: G k -> X` to `F g`.
pub fn skeleton_square(sk: &SkeletonData) -> PresheafSquareOfFunctors {
    let c = sk.original.clone();
    let k = sk.skeleton.clone();
    let (d, j) = yoneda_embedding(&c);
    let (e, j2) = yoneda_embedding(&k);
    let f = sk.projection.clone();
    let g = sk.section.clone();
    let alpha = (0..c.objects())
        .map(|x| {
            let restricted = Arc::new(yoneda(&c, x).precompose(&g).expect("section lands in C"));
            let comps = (0..k.objects())
                .map(|s| {
                    c.hom(g.object(s), x)
                        .iter()
                        .map(|&h| k.hom_position(f.arrow(h)))
                        .collect()
                })
                .collect();
            PresheafMap::new(restricted, j2.object(f.object(x)).clone(), comps).expect("α component shape")
        })
        .collect();
    let r_split = Some((0..k.objects()).map(|s| (sk.representatives[s], k.identity(s))).collect());
    let u: Vec<usize> = (0..c.objects()).map(|x| sk.to_representative(x)).collect();
    let u_inv: Vec<usize> = u.iter().map(|&a| c.is_iso(a).expect("u is an iso")).collect();
    let rep_of = sk.rep_of.clone();
    // ψ_X(x) = Q(u_X)(φ_{F X}(P(u_X⁻¹)(x)))
    let lift = move |a: &Arc<Presheaf>, b: &Arc<Presheaf>, m: &PresheafMap| {
        let comps = (0..a.base().objects())
            .map(|x| {
                (0..a.carrier(x))
                    .map(|e| b.act(u[x], m.apply(rep_of[x], a.act(u_inv[x], e))))
                    .collect()
            })
            .collect();
        PresheafMap::new(a.clone(), b.clone(), comps).ok().filter(|psi| psi.check().is_empty())
    };
    FunctorSquare {
        source: d,
        target: e,
        j,
        j2,
        r: f,
        s: Precomposition { along: g },
        alpha,
        r_split,
        s_full: Some(Arc::new(lift)),
    }
}

/// Moves a category with families on `C` to one on the skeleton of `C` by
/// transferring its Yoneda universe along the skeleton square.
pub fn transfer_cwf_to_skeleton(w: &CwfStructure) -> Result<CwfStructure> {
    let u = cwf_to_relu(w)?;
    let sk = skeletonize(w.obj_ext().base());
    let moved = transfer_universe_split(&skeleton_square(&sk), &u)?;
    relu_to_cwf(&moved)
}

/// A representable map on `C` restricted to a gaunt skeleton, where its
/// representations are unique and so form a category with families.
pub fn rep_to_skeleton_cwf(p: &PresheafMap) -> Result<CwfStructure> {
    let sk = skeletonize(p.target().base());
    sk.gaunt_completion()?;
    cwf_from_rep_gaunt(&p.precompose(&sk.section)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::presheaf::{all_maps, all_presheaves};
    use crate::relu::rep::{rep_check, yoneda_data};

    #[test]
    fn identity_square_transfer_is_the_identity() {
        for (_, c) in catalog::suite_categories() {
            let c = Arc::new(c);
            let sq = identity_square(&c);
            sq.check_alpha().unwrap();
            let u = cwf_to_relu(&CwfStructure::trivial(c)).unwrap();
            assert_eq!(transfer_universe_split(&sq, &u).unwrap(), u);
        }
    }

    #[test]
    fn searched_splittings_agree_on_the_identity_square() {
        let c = Arc::new(catalog::chain(2));
        let mut sq = identity_square(&c);
        sq.r_split = None;
        sq.s_full = None;
        let u = cwf_to_relu(&CwfStructure::trivial(c)).unwrap();
        assert_eq!(transfer_universe_split(&sq, &u).unwrap(), u);
    }

    #[test]
    fn skeleton_square_transfers_the_trivial_universe() {
        let c = Arc::new(catalog::three_with_iso_pair());
        let sk = skeletonize(&c);
        let sq = skeleton_square(&sk);
        sq.check_alpha().unwrap();
        let u = cwf_to_relu(&CwfStructure::trivial(c)).unwrap();
        let moved = transfer_universe_split(&sq, &u).unwrap();
        assert!(moved.check().unwrap().is_empty());
        assert_eq!(moved.data.j.source().objects(), 2);
        assert_eq!(relu_to_cwf(&moved).unwrap(), CwfStructure::trivial(sk.skeleton.clone()));
    }

    #[test]
    fn broken_alpha_is_an_oracle_error() {
        let z = Arc::new(catalog::z2());
        let mut sq = identity_square(&z);
        sq.alpha[0] = sq.alpha[0].with_entry(0, 1, 0).unwrap();
        let u = cwf_to_relu(&CwfStructure::trivial(z)).unwrap();
        assert!(matches!(transfer_universe_split(&sq, &u), Err(Error::Oracle(_))));
    }

    #[test]
    fn weak_transfer_on_the_skeleton_square() {
        let c = Arc::new(catalog::three_with_iso_pair());
        let sq = skeleton_square(&skeletonize(&c));
        let ps = all_presheaves(&c, 1);
        for a in &ps {
            for b in &ps {
                let (a, b) = (Arc::new(a.clone()), Arc::new(b.clone()));
                for p in all_maps(&a, &b) {
                    let (lhs, rhs) = weak_universe_pair(&sq, &p).unwrap();
                    assert_eq!(lhs, rhs);
                    assert_eq!(lhs, rep_check(&p));
                    assert_eq!(lhs, is_weak_relative_universe(&yoneda_data(&p)).unwrap());
                }
            }
        }
    }

    #[test]
    fn chain_counts_are_one() {
        let c = Arc::new(catalog::chain(2));
        let sq = identity_square(&c);
        let triv = PresheafMap::identity(Arc::new(Presheaf::terminal(c)));
        let report = weak_universe_equivalence_suite(&sq, &[triv]).unwrap();
        assert!(report.corresponds);
        assert_eq!(report.unique, Some(true));
        assert!(report.entries[0].jpullback_counts.as_ref().unwrap().iter().all(|&n| n == 1));
    }

    #[test]
    fn non_gaunt_base_skips_uniqueness() {
        let c = Arc::new(catalog::z2());
        let sq = identity_square(&c);
        let triv = PresheafMap::identity(Arc::new(Presheaf::terminal(c)));
        let report = weak_universe_equivalence_suite(&sq, &[triv]).unwrap();
        assert_eq!(report.unique, None);
        assert!(report.notice.unwrap().contains("not gaunt"));
    }

    #[test]
    fn skeleton_composites() {
        let c = Arc::new(catalog::three_with_iso_pair());
        let w = CwfStructure::trivial(c.clone());
        let moved = transfer_cwf_to_skeleton(&w).unwrap();
        assert!(moved.check().is_empty());
        let again = rep_to_skeleton_cwf(w.term().p()).unwrap();
        assert_eq!(again, moved);
        let z = Arc::new(catalog::z2());
        assert!(rep_to_skeleton_cwf(CwfStructure::trivial(z).term().p()).is_err());
    }
}
