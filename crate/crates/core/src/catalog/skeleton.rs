use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{Arrow, FinCat, FinFunctor, NatIso};
use crate::finding::Finding;

/// A skeleton of a finite category together with the equivalence data
/// relating it to the original.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonData {
    pub original: Arc<FinCat>,
    pub skeleton: Arc<FinCat>,
    /// `F`: every object goes to its representative.
    pub projection: FinFunctor,
    /// `G`: the inclusion of the representatives.
    pub section: FinFunctor,
    /// `G;F ⇒ Id`, all identities.
    pub unit: NatIso,
    /// `Id ⇒ F;G` with components `u_X: X -> rep(X)`.
    pub counit: NatIso,
    /// `rep_of[x]` is the skeleton object of `x`.
    pub rep_of: Vec<usize>,
    /// `representatives[k]` is the original object behind skeleton object `k`.
    pub representatives: Vec<usize>,
}

/// Collapse each isomorphism class to its least object.
///
/// `u_X` is the lowest-index iso `X -> rep(X)`, except that representatives
/// use their identity, which makes `G;F` the identity functor.
pub fn skeletonize(c: &Arc<FinCat>) -> SkeletonData {
    let classes = c.iso_classes();
    let mut rep_of = vec![0; c.objects()];
    let representatives: Vec<usize> = classes.iter().map(|class| class[0]).collect();
    for (k, class) in classes.iter().enumerate() {
        for &x in class {
            rep_of[x] = k;
        }
    }
    let u: Vec<usize> = (0..c.objects())
        .map(|x| {
            let r = representatives[rep_of[x]];
            if r == x {
                c.identity(x)
            } else {
                c.first_iso(x, r).expect("iso class member has an iso to its representative")
            }
        })
        .collect();

    let kept: Vec<usize> = (0..c.arrow_count())
        .filter(|&f| representatives[rep_of[c.src(f)]] == c.src(f) && representatives[rep_of[c.dst(f)]] == c.dst(f))
        .collect();
    let mut skel_index = vec![usize::MAX; c.arrow_count()];
    for (i, &f) in kept.iter().enumerate() {
        skel_index[f] = i;
    }
    let arrows = kept
        .iter()
        .map(|&f| Arrow {
            src: rep_of[c.src(f)],
            dst: rep_of[c.dst(f)],
        })
        .collect();
    let identity = representatives.iter().map(|&r| skel_index[c.identity(r)]).collect();
    let skeleton = Arc::new(
        FinCat::from_fn(representatives.len(), arrows, identity, |f, g| skel_index[c.then(kept[f], kept[g])])
            .expect("full subcategory of a category"),
    );

    let inverse = |f: usize| c.is_iso(f).expect("u is an iso");
    let projection = FinFunctor::new(
        c.clone(),
        skeleton.clone(),
        rep_of.clone(),
        (0..c.arrow_count())
            .map(|f| skel_index[c.then(c.then(inverse(u[c.src(f)]), f), u[c.dst(f)])])
            .collect(),
    )
    .expect("projection tables");
    let section = FinFunctor::new(skeleton.clone(), c.clone(), representatives.clone(), kept.clone()).expect("inclusion tables");
    let gf = section.then(&projection).expect("composable");
    let unit = NatIso::new(
        gf,
        FinFunctor::identity(skeleton.clone()),
        (0..skeleton.objects()).map(|k| skeleton.identity(k)).collect(),
    )
    .expect("unit tables");
    let counit = NatIso::new(
        FinFunctor::identity(c.clone()),
        projection.then(&section).expect("composable"),
        u,
    )
    .expect("counit tables");
    SkeletonData {
        original: c.clone(),
        skeleton,
        projection,
        section,
        unit,
        counit,
        rep_of,
        representatives,
    }
}

impl SkeletonData {
    /// Re-verifies both functors and both natural isomorphisms.
    pub fn check(&self) -> Vec<Finding> {
        let mut out = self.projection.check();
        out.extend(self.section.check());
        out.extend(self.unit.check());
        out.extend(self.counit.check());
        out
    }

    /// `u_X: X -> G F X`.
    pub fn to_representative(&self, x: usize) -> usize {
        self.counit.components[x]
    }

    /// The skeleton, when it is gaunt and so can stand in for a completion.
    pub fn gaunt_completion(&self) -> Result<&Arc<FinCat>> {
        match self.skeleton.gaunt_counterexample() {
            None => Ok(&self.skeleton),
            Some(f) => Err(Error::precondition(format!(
                "no gaunt completion available: skeleton has the non-identity iso {f}"
            ))),
        }
    }
}
