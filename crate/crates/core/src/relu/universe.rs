use std::sync::Arc;

use super::target::{yoneda_embedding, Embedding, PresheafCategory, Square, TargetCategory};
use crate::error::{Error, Result};
use crate::finding::{Finding, Law};
use crate::presheaf::{transpose, transpose_inverse};
use crate::structures::{CwfStructure, ObjExtStructure, TermStructure};

/// A functor `J: C -> D` and a morphism `p: Ũ -> U` of `D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelUnivData<D: TargetCategory> {
    pub target: D,
    pub j: Embedding<D>,
    pub p: D::Mor,
}

impl<D: TargetCategory> RelUnivData<D> {
    /// `Ũ`.
    pub fn total(&self) -> D::Obj {
        self.target.dom(&self.p)
    }

    /// `U`.
    pub fn base_object(&self) -> D::Obj {
        self.target.cod(&self.p)
    }

    /// Every `f: J X -> U`, for each `X` in order.
    pub fn classifying_maps(&self, x: usize) -> Vec<D::Mor> {
        self.target.hom(self.j.object(x), &self.base_object())
    }
}

/// `(X', p': X' -> X, Q: J X' -> Ũ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JPullback<D: TargetCategory> {
    pub apex: usize,
    pub proj: usize,
    pub q: D::Mor,
}

fn check_f<D: TargetCategory>(u: &RelUnivData<D>, x: usize, f: &D::Mor) -> Result<()> {
    if x >= u.j.source().objects() {
        return Err(Error::malformed(format!("object {x} out of range")));
    }
    if u.target.dom(f) != *u.j.object(x) || u.target.cod(f) != u.base_object() {
        return Err(Error::malformed(format!("f does not run from J({x}) to U")));
    }
    Ok(())
}

/// Why `cand` is not a J-pullback of `p` along `f`, if it is not.
pub fn jpullback_failure<D: TargetCategory>(
    u: &RelUnivData<D>,
    x: usize,
    f: &D::Mor,
    cand: &JPullback<D>,
) -> Result<Option<Finding>> {
    check_f(u, x, f)?;
    let c = u.j.source();
    let d = &u.target;
    let here = format!("(X, f) = ({x}, {f:?})");
    if cand.apex >= c.objects()
        || cand.proj >= c.arrow_count()
        || c.src(cand.proj) != cand.apex
        || c.dst(cand.proj) != x
        || d.dom(&cand.q) != *u.j.object(cand.apex)
        || d.cod(&cand.q) != u.total()
    {
        return Ok(Some(Finding::new(
            Law::JPullbackEndpoints,
            here,
            format!("X' = {}, p' = {}", cand.apex, cand.proj),
        )));
    }
    let sq = Square {
        top: cand.q.clone(),
        left: u.j.arrow(cand.proj).clone(),
        bottom: f.clone(),
        right: u.p.clone(),
    };
    if !d.commutes(&sq)? {
        return Ok(Some(Finding::new(Law::JPullbackCommutes, here, format!("X' = {}, p' = {}", cand.apex, cand.proj))));
    }
    if !d.is_pullback(&sq)? {
        return Ok(Some(Finding::new(Law::JPullbackPullback, here, format!("X' = {}, p' = {}", cand.apex, cand.proj))));
    }
    Ok(None)
}

pub fn check_jpullback<D: TargetCategory>(u: &RelUnivData<D>, x: usize, f: &D::Mor, cand: &JPullback<D>) -> Result<bool> {
    Ok(jpullback_failure(u, x, f, cand)?.is_none())
}

fn search<D: TargetCategory>(u: &RelUnivData<D>, x: usize, f: &D::Mor, first_only: bool) -> Result<Vec<JPullback<D>>> {
    check_f(u, x, f)?;
    let c = u.j.source();
    let total = u.total();
    let mut out = Vec::new();
    for apex in 0..c.objects() {
        let qs = u.target.hom(u.j.object(apex), &total);
        for &proj in c.hom(apex, x) {
            for q in &qs {
                let cand = JPullback { apex, proj, q: q.clone() };
                if jpullback_failure(u, x, f, &cand)?.is_none() {
                    out.push(cand);
                    if first_only {
                        return Ok(out);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Every J-pullback of `p` along `f`, by exhaustive search over `X'`, `p'`
/// and `Q` in that order.
pub fn jpullbacks<D: TargetCategory>(u: &RelUnivData<D>, x: usize, f: &D::Mor) -> Result<Vec<JPullback<D>>> {
    search(u, x, f, false)
}

pub fn first_jpullback<D: TargetCategory>(u: &RelUnivData<D>, x: usize, f: &D::Mor) -> Result<Option<JPullback<D>>> {
    Ok(search(u, x, f, true)?.pop())
}

/// First `(X, f)` with no J-pullback at all.
pub fn weak_universe_failure<D: TargetCategory>(u: &RelUnivData<D>) -> Result<Option<(usize, D::Mor)>> {
    for x in 0..u.j.source().objects() {
        for f in u.classifying_maps(x) {
            if first_jpullback(u, x, &f)?.is_none() {
                return Ok(Some((x, f)));
            }
        }
    }
    Ok(None)
}

pub fn is_weak_relative_universe<D: TargetCategory>(u: &RelUnivData<D>) -> Result<bool> {
    Ok(weak_universe_failure(u)?.is_none())
}

/// Relative universe data with a chosen J-pullback for each `(X, f)`.
/// Two universes are equal when their data agree and their tables hold the
/// same entries, in any order.
#[derive(Debug, Clone)]
pub struct RelativeUniverse<D: TargetCategory> {
    pub data: RelUnivData<D>,
    pub table: Vec<(usize, D::Mor, JPullback<D>)>,
}

impl<D: TargetCategory + PartialEq> PartialEq for RelativeUniverse<D> {
    fn eq(&self, other: &Self) -> bool {
        self.data == other.data
            && self.table.len() == other.table.len()
            && self.table.iter().all(|e| other.table.contains(e))
    }
}

impl<D: TargetCategory> RelativeUniverse<D> {
    pub fn new(data: RelUnivData<D>, table: Vec<(usize, D::Mor, JPullback<D>)>) -> Result<Self> {
        for (i, (x, f, _)) in table.iter().enumerate() {
            check_f(&data, *x, f)?;
            if table[..i].iter().any(|(y, g, _)| y == x && g == f) {
                return Err(Error::malformed(format!("two table entries at X = {x}")));
            }
        }
        Ok(RelativeUniverse { data, table })
    }

    pub fn entry(&self, x: usize, f: &D::Mor) -> Option<&JPullback<D>> {
        self.table.iter().find(|(y, g, _)| *y == x && g == f).map(|e| &e.2)
    }

    /// Functor laws of `J`, totality of the table, and every entry.
    pub fn check(&self) -> Result<Vec<Finding>> {
        let mut out = self.data.j.check(&self.data.target);
        if !out.is_empty() {
            return Ok(out);
        }
        for x in 0..self.data.j.source().objects() {
            for f in self.data.classifying_maps(x) {
                if self.entry(x, &f).is_none() {
                    out.push(Finding::new(Law::UniverseTotality, format!("(X, f) = ({x}, {f:?})"), "no entry"));
                }
            }
        }
        for (x, f, cand) in &self.table {
            out.extend(jpullback_failure(&self.data, *x, f, cand)?);
        }
        Ok(out)
    }
}

/// A category with families as a universe relative to the Yoneda
/// embedding: the entry at `(Γ, Â)` is `(Γ.A, π_A, te_A^)`.
pub fn cwf_to_relu(w: &CwfStructure) -> Result<RelativeUniverse<PresheafCategory>> {
    if let Some(f) = w.check().first() {
        return Err(Error::precondition(format!("structure is invalid: {f}")));
    }
    let term = w.term();
    let over = w.obj_ext();
    let (target, j) = yoneda_embedding(over.base());
    let mut table = Vec::new();
    for (g, a) in over.types() {
        let x = over.ext(g, a);
        let q = transpose(term.tm(), x, term.te(g, a))?;
        table.push((g, transpose(over.ty(), g, a)?, JPullback { apex: x, proj: over.dpr(g, a), q }));
    }
    RelativeUniverse::new(RelUnivData { target, j, p: term.p().clone() }, table)
}

/// Reads a category with families back from a universe over Yoneda.
pub fn relu_to_cwf(u: &RelativeUniverse<PresheafCategory>) -> Result<CwfStructure> {
    let base = u.data.j.source();
    if u.data.j != yoneda_embedding(base).1 {
        return Err(Error::malformed("universe is not relative to the Yoneda embedding"));
    }
    let ty = u.data.p.target().clone();
    let mut ext = Vec::new();
    let mut dpr = Vec::new();
    let mut te = Vec::new();
    for g in 0..base.objects() {
        let (mut er, mut dr, mut tr) = (Vec::new(), Vec::new(), Vec::new());
        for a in 0..ty.carrier(g) {
            let f = transpose(&ty, g, a)?;
            let e = u
                .entry(g, &f)
                .ok_or_else(|| Error::precondition(format!("universe has no entry at (Γ, A) = ({g}, {a})")))?;
            er.push(e.apex);
            dr.push(e.proj);
            tr.push(transpose_inverse(&e.q, e.apex)?);
        }
        ext.push(er);
        dpr.push(dr);
        te.push(tr);
    }
    let over = Arc::new(ObjExtStructure::new(ty, ext, dpr)?);
    Ok(CwfStructure::new(TermStructure::new(over, u.data.p.clone(), te)?))
}
