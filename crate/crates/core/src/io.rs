//! The JSON envelope format shared by every fixture and output file.
//!
//! Each document is an object `{"schema": "<kind>/v1", "base_category": {..}, ..}`.
//! Indices are zero-based. Per-(object, type) tables are lists of triples
//! `[Γ, A, value]` that must cover every pair exactly once.

use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::catalog::{skeletonize, SkeletonData};
use crate::error::{Error, Result};
use crate::fincat::{Arrow, FinCat, FinFunctor};
use crate::presheaf::{transpose, Presheaf, PresheafMap};
use crate::relu::{
    identity_square, skeleton_square, yoneda_embedding, FunctorSquare, JPullback, Precomposition, PresheafCategory,
    RelUnivData, RelativeUniverse,
};
use crate::structures::{CwfStructure, ObjExtStructure, QMorphismStructure, SplitTypeCatStructure, TermStructure};

/// The document kinds the envelope can carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Category,
    Presheaf,
    ObjExt,
    Term,
    Qq,
    Cwf,
    SplitTypecat,
    RepMap,
    RelUniverse,
    Square,
    Skeleton,
}

impl Kind {
    pub const ALL: [Kind; 11] = [
        Kind::Category,
        Kind::Presheaf,
        Kind::ObjExt,
        Kind::Term,
        Kind::Qq,
        Kind::Cwf,
        Kind::SplitTypecat,
        Kind::RepMap,
        Kind::RelUniverse,
        Kind::Square,
        Kind::Skeleton,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Category => "category",
            Kind::Presheaf => "presheaf",
            Kind::ObjExt => "obj-ext",
            Kind::Term => "term",
            Kind::Qq => "qq",
            Kind::Cwf => "cwf",
            Kind::SplitTypecat => "split-typecat",
            Kind::RepMap => "rep-map",
            Kind::RelUniverse => "rel-universe",
            Kind::Square => "square",
            Kind::Skeleton => "skeleton",
        }
    }

    pub fn parse(name: &str) -> Result<Kind> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == name)
            .ok_or_else(|| Error::malformed(format!("unknown kind {name}")))
    }

    pub fn schema(self) -> String {
        format!("{}/v1", self.name())
    }
}

/// Reads the `schema` field of a document.
pub fn kind_of(text: &str) -> Result<Kind> {
    #[derive(Deserialize)]
    struct Head {
        schema: String,
    }
    let head: Head = serde_json::from_str(text).map_err(|e| Error::malformed(format!("invalid JSON: {e}")))?;
    let name = head
        .schema
        .strip_suffix("/v1")
        .ok_or_else(|| Error::malformed(format!("unsupported schema {}", head.schema)))?;
    Kind::parse(name)
}

fn envelope<T: DeserializeOwned>(text: &str, kind: Kind) -> Result<T> {
    let found = kind_of(text)?;
    if found != kind {
        return Err(Error::malformed(format!("expected a {} document, found {}", kind.name(), found.name())));
    }
    serde_json::from_str(text).map_err(|e| Error::malformed(format!("{} document: {e}", kind.name())))
}

fn render<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryJson {
    pub objects: usize,
    pub arrows: Vec<ArrowJson>,
    pub identity: Vec<usize>,
    pub compose: Vec<(usize, usize, usize)>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowJson {
    pub src: usize,
    pub dst: usize,
}

impl CategoryJson {
    pub fn from_cat(c: &FinCat) -> Self {
        CategoryJson {
            objects: c.objects(),
            arrows: c.arrows().iter().map(|a| ArrowJson { src: a.src, dst: a.dst }).collect(),
            identity: c.identities().to_vec(),
            compose: c.compose_entries(),
        }
    }

    pub fn to_cat(&self) -> Result<Arc<FinCat>> {
        let arrows = self.arrows.iter().map(|a| Arrow { src: a.src, dst: a.dst }).collect();
        Ok(Arc::new(FinCat::new(self.objects, arrows, self.identity.clone(), self.compose.iter().copied())?))
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PresheafJson {
    carrier: Vec<usize>,
    /// `[arrow, images]`; identities may be omitted.
    action: Vec<(usize, Vec<usize>)>,
}

impl PresheafJson {
    fn from_presheaf(p: &Presheaf) -> Self {
        PresheafJson {
            carrier: p.carriers().to_vec(),
            action: p.actions().iter().cloned().enumerate().collect(),
        }
    }

    fn to_presheaf(&self, base: &Arc<FinCat>) -> Result<Arc<Presheaf>> {
        let c = &**base;
        if self.carrier.len() != c.objects() {
            return Err(Error::malformed("presheaf needs one carrier per object"));
        }
        let mut action: Vec<Option<Vec<usize>>> = vec![None; c.arrow_count()];
        for (f, images) in &self.action {
            let slot = action
                .get_mut(*f)
                .ok_or_else(|| Error::malformed(format!("action given for unknown arrow {f}")))?;
            if slot.replace(images.clone()).is_some() {
                return Err(Error::malformed(format!("action of arrow {f} given twice")));
            }
        }
        let action = action
            .into_iter()
            .enumerate()
            .map(|(f, a)| match a {
                Some(a) => Ok(a),
                None if c.is_identity(f) => Ok((0..self.carrier[c.dst(f)]).collect()),
                None => Err(Error::malformed(format!("action of arrow {f} is missing"))),
            })
            .collect::<Result<_>>()?;
        Ok(Arc::new(Presheaf::new(base.clone(), self.carrier.clone(), action)?))
    }
}

fn triples(rows: &[Vec<usize>]) -> Vec<(usize, usize, usize)> {
    rows.iter()
        .enumerate()
        .flat_map(|(g, row)| row.iter().enumerate().map(move |(a, &v)| (g, a, v)))
        .collect()
}

/// Rebuilds `rows[g][a]` from triples, with `lens[g]` entries in row `g`.
fn grid(entries: &[(usize, usize, usize)], lens: &[usize], what: &str) -> Result<Vec<Vec<usize>>> {
    let mut rows: Vec<Vec<Option<usize>>> = lens.iter().map(|&n| vec![None; n]).collect();
    for &(g, a, v) in entries {
        let slot = rows
            .get_mut(g)
            .and_then(|r| r.get_mut(a))
            .ok_or_else(|| Error::malformed(format!("{what} entry ({g}, {a}) out of range")))?;
        if slot.replace(v).is_some() {
            return Err(Error::malformed(format!("{what} entry ({g}, {a}) given twice")));
        }
    }
    rows.into_iter()
        .enumerate()
        .map(|(g, row)| {
            row.into_iter()
                .enumerate()
                .map(|(a, v)| v.ok_or_else(|| Error::malformed(format!("{what} entry ({g}, {a}) is missing"))))
                .collect()
        })
        .collect()
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CategoryDoc {
    schema: String,
    base_category: CategoryJson,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PresheafDoc {
    schema: String,
    base_category: CategoryJson,
    presheaf: PresheafJson,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ObjExtDoc {
    schema: String,
    base_category: CategoryJson,
    ty: PresheafJson,
    ext: Vec<(usize, usize, usize)>,
    dpr: Vec<(usize, usize, usize)>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermDoc {
    schema: String,
    base_category: CategoryJson,
    ty: PresheafJson,
    ext: Vec<(usize, usize, usize)>,
    dpr: Vec<(usize, usize, usize)>,
    tm: PresheafJson,
    /// Components of `p: Tm -> Ty`, one list per object.
    p: Vec<Vec<usize>>,
    te: Vec<(usize, usize, usize)>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct QqDoc {
    schema: String,
    base_category: CategoryJson,
    ty: PresheafJson,
    ext: Vec<(usize, usize, usize)>,
    dpr: Vec<(usize, usize, usize)>,
    /// `[f, A, q(f, A)]`.
    q: Vec<(usize, usize, usize)>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RepMapDoc {
    schema: String,
    base_category: CategoryJson,
    tm: PresheafJson,
    ty: PresheafJson,
    p: Vec<Vec<usize>>,
}

/// Universes relative to Yoneda. `f: y(X) -> Ty` and `Q: y(X') -> Tm` are
/// given by the elements they transpose to: `[X, A, X', p', e]`.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RelUniverseDoc {
    schema: String,
    base_category: CategoryJson,
    tm: PresheafJson,
    ty: PresheafJson,
    p: Vec<Vec<usize>>,
    table: Vec<(usize, usize, usize, usize, usize)>,
}

fn obj_ext_from(base: &Arc<FinCat>, ty: &PresheafJson, ext: &[(usize, usize, usize)], dpr: &[(usize, usize, usize)]) -> Result<Arc<ObjExtStructure>> {
    let ty = ty.to_presheaf(base)?;
    let ext = grid(ext, ty.carriers(), "ext")?;
    let dpr = grid(dpr, ty.carriers(), "dpr")?;
    Ok(Arc::new(ObjExtStructure::new(ty, ext, dpr)?))
}

fn presheaf_map(source: Arc<Presheaf>, target: Arc<Presheaf>, comps: &[Vec<usize>]) -> Result<PresheafMap> {
    PresheafMap::new(source, target, comps.to_vec())
}

pub fn read_category(text: &str) -> Result<Arc<FinCat>> {
    envelope::<CategoryDoc>(text, Kind::Category)?.base_category.to_cat()
}

pub fn write_category(c: &FinCat) -> String {
    render(&CategoryDoc {
        schema: Kind::Category.schema(),
        base_category: CategoryJson::from_cat(c),
    })
}

pub fn read_presheaf(text: &str) -> Result<Arc<Presheaf>> {
    let doc: PresheafDoc = envelope(text, Kind::Presheaf)?;
    doc.presheaf.to_presheaf(&doc.base_category.to_cat()?)
}

pub fn write_presheaf(p: &Presheaf) -> String {
    render(&PresheafDoc {
        schema: Kind::Presheaf.schema(),
        base_category: CategoryJson::from_cat(p.base()),
        presheaf: PresheafJson::from_presheaf(p),
    })
}

pub fn read_obj_ext(text: &str) -> Result<Arc<ObjExtStructure>> {
    let doc: ObjExtDoc = envelope(text, Kind::ObjExt)?;
    obj_ext_from(&doc.base_category.to_cat()?, &doc.ty, &doc.ext, &doc.dpr)
}

pub fn write_obj_ext(o: &ObjExtStructure) -> String {
    render(&ObjExtDoc {
        schema: Kind::ObjExt.schema(),
        base_category: CategoryJson::from_cat(o.base()),
        ty: PresheafJson::from_presheaf(o.ty()),
        ext: triples(o.ext_table()),
        dpr: triples(o.dpr_table()),
    })
}

fn term_from_doc(doc: TermDoc) -> Result<TermStructure> {
    let base = doc.base_category.to_cat()?;
    let over = obj_ext_from(&base, &doc.ty, &doc.ext, &doc.dpr)?;
    let tm = doc.tm.to_presheaf(&base)?;
    let p = presheaf_map(tm, over.ty().clone(), &doc.p)?;
    let lens: Vec<usize> = over.ty().carriers().to_vec();
    let te = grid(&doc.te, &lens, "te")?;
    TermStructure::new(over, p, te)
}

fn term_doc(kind: Kind, y: &TermStructure) -> TermDoc {
    let o = y.over();
    TermDoc {
        schema: kind.schema(),
        base_category: CategoryJson::from_cat(o.base()),
        ty: PresheafJson::from_presheaf(o.ty()),
        ext: triples(o.ext_table()),
        dpr: triples(o.dpr_table()),
        tm: PresheafJson::from_presheaf(y.tm()),
        p: y.p().components().to_vec(),
        te: triples(y.te_table()),
    }
}

pub fn read_term(text: &str) -> Result<TermStructure> {
    term_from_doc(envelope(text, Kind::Term)?)
}

pub fn write_term(y: &TermStructure) -> String {
    render(&term_doc(Kind::Term, y))
}

pub fn read_cwf(text: &str) -> Result<CwfStructure> {
    Ok(CwfStructure::new(term_from_doc(envelope(text, Kind::Cwf)?)?))
}

pub fn write_cwf(w: &CwfStructure) -> String {
    render(&term_doc(Kind::Cwf, w.term()))
}

fn qq_from_doc(doc: QqDoc) -> Result<QMorphismStructure> {
    let base = doc.base_category.to_cat()?;
    let over = obj_ext_from(&base, &doc.ty, &doc.ext, &doc.dpr)?;
    let lens: Vec<usize> = (0..base.arrow_count()).map(|f| over.ty().carrier(base.dst(f))).collect();
    let q = grid(&doc.q, &lens, "q")?;
    QMorphismStructure::new(over, q)
}

fn qq_doc(kind: Kind, z: &QMorphismStructure) -> QqDoc {
    let o = z.over();
    QqDoc {
        schema: kind.schema(),
        base_category: CategoryJson::from_cat(o.base()),
        ty: PresheafJson::from_presheaf(o.ty()),
        ext: triples(o.ext_table()),
        dpr: triples(o.dpr_table()),
        q: triples(z.q_table()),
    }
}

pub fn read_qq(text: &str) -> Result<QMorphismStructure> {
    qq_from_doc(envelope(text, Kind::Qq)?)
}

pub fn write_qq(z: &QMorphismStructure) -> String {
    render(&qq_doc(Kind::Qq, z))
}

pub fn read_split_typecat(text: &str) -> Result<SplitTypeCatStructure> {
    Ok(SplitTypeCatStructure::new(qq_from_doc(envelope(text, Kind::SplitTypecat)?)?))
}

pub fn write_split_typecat(t: &SplitTypeCatStructure) -> String {
    render(&qq_doc(Kind::SplitTypecat, t.qq()))
}

pub fn read_rep_map(text: &str) -> Result<PresheafMap> {
    let doc: RepMapDoc = envelope(text, Kind::RepMap)?;
    let base = doc.base_category.to_cat()?;
    presheaf_map(doc.tm.to_presheaf(&base)?, doc.ty.to_presheaf(&base)?, &doc.p)
}

pub fn write_rep_map(p: &PresheafMap) -> String {
    render(&RepMapDoc {
        schema: Kind::RepMap.schema(),
        base_category: CategoryJson::from_cat(p.source().base()),
        tm: PresheafJson::from_presheaf(p.source()),
        ty: PresheafJson::from_presheaf(p.target()),
        p: p.components().to_vec(),
    })
}

pub fn read_rel_universe(text: &str) -> Result<RelativeUniverse<PresheafCategory>> {
    let doc: RelUniverseDoc = envelope(text, Kind::RelUniverse)?;
    let base = doc.base_category.to_cat()?;
    let tm = doc.tm.to_presheaf(&base)?;
    let ty = doc.ty.to_presheaf(&base)?;
    let p = presheaf_map(tm.clone(), ty.clone(), &doc.p)?;
    let (target, j) = yoneda_embedding(&base);
    let mut table = Vec::with_capacity(doc.table.len());
    for &(x, a, apex, proj, e) in &doc.table {
        if apex >= base.objects() || proj >= base.arrow_count() {
            return Err(Error::malformed(format!("table entry at X = {x} leaves the category")));
        }
        let f = transpose(&ty, x, a)?;
        let q = transpose(&tm, apex, e)?;
        table.push((x, f, JPullback { apex, proj, q }));
    }
    RelativeUniverse::new(RelUnivData { target, j, p }, table)
}

/// Only universes whose entries are all Yoneda transposes can be written.
pub fn write_rel_universe(u: &RelativeUniverse<PresheafCategory>) -> Result<String> {
    let base = u.data.j.source();
    if u.data.j != yoneda_embedding(base).1 {
        return Err(Error::malformed("universe is not relative to the Yoneda embedding"));
    }
    let (tm, ty) = (u.data.p.source(), u.data.p.target());
    let element = |m: &PresheafMap, x: usize| m.apply(x, base.hom_position(base.identity(x)));
    let mut table: Vec<_> = u
        .table
        .iter()
        .map(|(x, f, e)| (*x, element(f, *x), e.apex, e.proj, element(&e.q, e.apex)))
        .collect();
    table.sort();
    Ok(render(&RelUniverseDoc {
        schema: Kind::RelUniverse.schema(),
        base_category: CategoryJson::from_cat(base),
        tm: PresheafJson::from_presheaf(tm),
        ty: PresheafJson::from_presheaf(ty),
        p: u.data.p.components().to_vec(),
        table,
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SquareShape {
    /// Yoneda on both sides with `R`, `S` and `α` identities.
    Identity,
    /// Yoneda on `C` and on its skeleton, `R = F`, `S` restriction along `G`.
    Skeleton,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum LiftMode {
    /// Use the closed-form splittings that come with the shape.
    #[default]
    Oracle,
    /// Find splittings and lifts by exhaustive search.
    Search,
}

/// A square of functors described by its shape, with optional replacement
/// components for `α`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareSpec {
    pub base: Arc<FinCat>,
    pub shape: SquareShape,
    pub lift: LiftMode,
    pub alpha: Vec<(usize, Vec<Vec<usize>>)>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SquareDoc {
    schema: String,
    base_category: CategoryJson,
    shape: SquareShape,
    #[serde(default)]
    lift: LiftMode,
    /// `[X, components of α_X]`.
    #[serde(default)]
    alpha: Vec<(usize, Vec<Vec<usize>>)>,
}

impl SquareSpec {
    pub fn build(&self) -> Result<FunctorSquare<PresheafCategory, PresheafCategory, Precomposition>> {
        let mut sq = match self.shape {
            SquareShape::Identity => identity_square(&self.base),
            SquareShape::Skeleton => skeleton_square(&skeletonize(&self.base)),
        };
        if self.lift == LiftMode::Search {
            sq.r_split = None;
            sq.s_full = None;
        }
        for (x, comps) in &self.alpha {
            let slot = sq
                .alpha
                .get_mut(*x)
                .ok_or_else(|| Error::malformed(format!("α override for unknown object {x}")))?;
            *slot = presheaf_map(slot.source().clone(), slot.target().clone(), comps)?;
        }
        Ok(sq)
    }
}

pub fn read_square(text: &str) -> Result<SquareSpec> {
    let doc: SquareDoc = envelope(text, Kind::Square)?;
    Ok(SquareSpec {
        base: doc.base_category.to_cat()?,
        shape: doc.shape,
        lift: doc.lift,
        alpha: doc.alpha,
    })
}

pub fn write_square(s: &SquareSpec) -> String {
    render(&SquareDoc {
        schema: Kind::Square.schema(),
        base_category: CategoryJson::from_cat(&s.base),
        shape: s.shape,
        lift: s.lift,
        alpha: s.alpha.clone(),
    })
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FunctorJson {
    objects: Vec<usize>,
    arrows: Vec<usize>,
}

impl FunctorJson {
    fn from_functor(f: &FinFunctor) -> Self {
        FunctorJson {
            objects: f.object_map().to_vec(),
            arrows: f.arrow_map().to_vec(),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SkeletonDoc {
    schema: String,
    base_category: CategoryJson,
    skeleton: CategoryJson,
    projection: FunctorJson,
    section: FunctorJson,
    representatives: Vec<usize>,
    /// `u_X: X -> G F X`.
    counit: Vec<usize>,
    gaunt: bool,
}

pub fn write_skeleton(sk: &SkeletonData) -> String {
    render(&SkeletonDoc {
        schema: Kind::Skeleton.schema(),
        base_category: CategoryJson::from_cat(&sk.original),
        skeleton: CategoryJson::from_cat(&sk.skeleton),
        projection: FunctorJson::from_functor(&sk.projection),
        section: FunctorJson::from_functor(&sk.section),
        representatives: sk.representatives.clone(),
        counit: sk.counit.components.clone(),
        gaunt: sk.skeleton.is_gaunt(),
    })
}

/// Reads a skeleton file back and re-derives it from its base category;
/// the stored data must match.
pub fn read_skeleton(text: &str) -> Result<SkeletonData> {
    let doc: SkeletonDoc = envelope(text, Kind::Skeleton)?;
    let sk = skeletonize(&doc.base_category.to_cat()?);
    if render(&doc) != write_skeleton(&sk) {
        return Err(Error::malformed("skeleton data does not match its base category"));
    }
    Ok(sk)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::relu::cwf_to_relu;

    #[test]
    fn category_round_trip() {
        for (_, c) in catalog::suite_categories() {
            assert_eq!(*read_category(&write_category(&c)).unwrap(), c);
        }
    }

    #[test]
    fn structure_round_trips() {
        for (_, c) in catalog::suite_categories() {
            let c = Arc::new(c);
            for w in catalog::enumerate_cwf(&c, 1) {
                assert_eq!(read_cwf(&write_cwf(&w)).unwrap(), w);
                assert_eq!(read_term(&write_term(w.term())).unwrap(), *w.term());
                assert_eq!(*read_obj_ext(&write_obj_ext(w.obj_ext())).unwrap(), **w.obj_ext());
                assert_eq!(read_rep_map(&write_rep_map(w.term().p())).unwrap(), *w.term().p());
                let u = cwf_to_relu(&w).unwrap();
                assert_eq!(read_rel_universe(&write_rel_universe(&u).unwrap()).unwrap(), u);
            }
            for t in catalog::enumerate_split_typecat(&c, 1) {
                assert_eq!(read_split_typecat(&write_split_typecat(&t)).unwrap(), t);
                assert_eq!(read_qq(&write_qq(t.qq())).unwrap(), *t.qq());
            }
        }
    }

    #[test]
    fn schema_mismatch_is_malformed() {
        let text = write_category(&catalog::terminal());
        assert!(matches!(read_cwf(&text), Err(Error::Malformed(_))));
        assert!(matches!(read_cwf("{\"schema\": \"cwf/v1\""), Err(Error::Malformed(_))));
        assert!(matches!(kind_of("{\"schema\": \"cwf/v9\"}"), Err(Error::Malformed(_))));
    }

    #[test]
    fn missing_compose_entry_is_malformed() {
        let mut doc: serde_json::Value = serde_json::from_str(&write_category(&catalog::interval())).unwrap();
        doc["base_category"]["compose"].as_array_mut().unwrap().pop();
        let text = doc.to_string();
        assert!(matches!(read_category(&text), Err(Error::Malformed(_))));
    }

    #[test]
    fn identity_actions_may_be_omitted() {
        let text = r#"{"schema": "presheaf/v1",
            "base_category": {"objects": 2, "arrows": [{"src":0,"dst":0},{"src":1,"dst":1},{"src":0,"dst":1}],
                              "identity": [0, 1], "compose": [[0,0,0],[1,1,1],[2,0,2],[1,2,2]]},
            "presheaf": {"carrier": [2, 1], "action": [[2, [1]]]}}"#;
        let p = read_presheaf(text).unwrap();
        assert_eq!(p.actions(), &[vec![0, 1], vec![0], vec![1]]);
    }

    #[test]
    fn square_and_skeleton_documents() {
        let c = Arc::new(catalog::three_with_iso_pair());
        let spec = SquareSpec {
            base: c.clone(),
            shape: SquareShape::Skeleton,
            lift: LiftMode::Search,
            alpha: Vec::new(),
        };
        let back = read_square(&write_square(&spec)).unwrap();
        assert_eq!(back, spec);
        assert!(back.build().unwrap().s_full.is_none());
        let sk = skeletonize(&c);
        assert_eq!(read_skeleton(&write_skeleton(&sk)).unwrap(), sk);
    }
}
