//! Single-entry mutants of valid structures, classified by the oracles and
//! fed to the core checkers.

use std::sync::Arc;

use cwfkit_core::catalog;
use cwfkit_core::presheaf::{all_maps, all_presheaves, transpose};
use cwfkit_core::relu::{cwf_to_relu, rep_map_check, yoneda_embedding, JPullback, RelUnivData, RelativeUniverse};
use cwfkit_core::structures::{CwfStructure, ObjExtStructure, QMorphismStructure, SplitTypeCatStructure, TermStructure};
use cwfkit_core::{FinCat, Finding, Law, Presheaf, PresheafMap};

use crate::oracle::{self, QqTables, TermTables};

/// What happened to the mutants of one structure kind.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct KindOutcome {
    pub seeds: usize,
    pub mutants: usize,
    /// Mutants the oracle classifies invalid.
    pub invalid: usize,
    /// Invalid mutants the checker rejects with a clause of this kind.
    pub rejected: usize,
    /// Descriptions of disagreements.
    pub failures: Vec<String>,
}

impl KindOutcome {
    fn record(&mut self, what: impl FnOnce() -> String, oracle_valid: bool, findings: &[Finding], allowed: &[Law]) {
        self.mutants += 1;
        if oracle_valid {
            if let Some(f) = findings.first() {
                self.failures.push(format!("{}: valid mutant rejected with {f}", what()));
            }
            return;
        }
        self.invalid += 1;
        match findings.first() {
            None => self.failures.push(format!("{}: invalid mutant accepted", what())),
            Some(f) if !allowed.contains(&f.law) || f.law.clause().is_empty() => {
                self.failures.push(format!("{}: rejected under an unrelated clause: {f}", what()));
            }
            Some(_) => self.rejected += 1,
        }
    }
}

const CATEGORY: &[Law] = &[
    Law::IdentityEndpoints,
    Law::CompositeEndpoints,
    Law::LeftIdentity,
    Law::RightIdentity,
    Law::Associativity,
];
const PRESHEAF: &[Law] = &[Law::PresheafIdentity, Law::PresheafComposition];
const MAP: &[Law] = &[Law::PresheafIdentity, Law::PresheafComposition, Law::Naturality];
const OBJ_EXT: &[Law] = &[Law::PresheafIdentity, Law::PresheafComposition, Law::ProjectionEndpoints];
const TERM: &[Law] = &[
    Law::PresheafIdentity,
    Law::PresheafComposition,
    Law::ProjectionEndpoints,
    Law::Naturality,
    Law::GenericTermTyping,
    Law::FiberPullback,
];
const QQ: &[Law] = &[
    Law::PresheafIdentity,
    Law::PresheafComposition,
    Law::ProjectionEndpoints,
    Law::QEndpoints,
    Law::QCommutes,
    Law::QPullback,
    Law::QIdentity,
    Law::QComposition,
];
const REP: &[Law] = &[Law::PresheafIdentity, Law::PresheafComposition, Law::Naturality, Law::FiberRepresentable];
const UNIVERSE: &[Law] = &[
    Law::PresheafIdentity,
    Law::PresheafComposition,
    Law::Naturality,
    Law::JPullbackEndpoints,
    Law::JPullbackCommutes,
    Law::JPullbackPullback,
    Law::UniverseTotality,
];

/// Categories the category mutants start from.
pub fn category_seeds() -> Vec<(String, FinCat)> {
    crate::yoneda_categories()
}

pub fn categories() -> KindOutcome {
    let mut out = KindOutcome::default();
    for (name, c) in category_seeds() {
        out.seeds += 1;
        let n = c.arrow_count();
        for (g, f, fg) in c.compose_entries() {
            for v in (0..n).filter(|&v| v != fg) {
                let m = c.with_composite(f, g, v).expect("in range");
                let valid = oracle::Tables::of(&m).laws_hold();
                out.record(|| format!("{name}: {f};{g} := {v}"), valid, &m.check(), CATEGORY);
            }
        }
        for x in 0..c.objects() {
            for v in (0..n).filter(|&v| v != c.identity(x)) {
                let m = c.with_identity(x, v).expect("in range");
                let valid = oracle::Tables::of(&m).laws_hold();
                out.record(|| format!("{name}: id({x}) := {v}"), valid, &m.check(), CATEGORY);
            }
        }
    }
    out
}

fn presheaf_mutants(p: &Presheaf) -> Vec<(String, Presheaf)> {
    let c = p.base();
    let mut out = Vec::new();
    for f in 0..c.arrow_count() {
        for x in 0..p.carrier(c.dst(f)) {
            for v in (0..p.carrier(c.src(f))).filter(|&v| v != p.act(f, x)) {
                out.push((format!("P({f})({x}) := {v}"), p.with_action_entry(f, x, v).expect("in range")));
            }
        }
    }
    out
}

fn map_mutants(m: &PresheafMap) -> Vec<(String, PresheafMap)> {
    let mut out = Vec::new();
    for c in 0..m.source().base().objects() {
        for x in 0..m.source().carrier(c) {
            for v in (0..m.target().carrier(c)).filter(|&v| v != m.apply(c, x)) {
                out.push((format!("component {c} at {x} := {v}"), m.with_entry(c, x, v).expect("in range")));
            }
        }
    }
    out
}

pub fn presheaves(bound: usize) -> KindOutcome {
    let mut out = KindOutcome::default();
    for (name, c) in catalog::suite_categories() {
        let c = Arc::new(c);
        for (i, p) in all_presheaves(&c, bound).iter().enumerate() {
            out.seeds += 1;
            for (what, m) in presheaf_mutants(p) {
                out.record(|| format!("{name} #{i}: {what}"), oracle::presheaf_laws(&m), &m.check(), PRESHEAF);
            }
        }
    }
    out
}

pub fn presheaf_maps(bound: usize) -> KindOutcome {
    let mut out = KindOutcome::default();
    for (name, c) in catalog::suite_categories() {
        let c = Arc::new(c);
        let ps: Vec<Arc<Presheaf>> = all_presheaves(&c, bound).into_iter().map(Arc::new).collect();
        for a in &ps {
            for b in &ps {
                for m in all_maps(a, b) {
                    out.seeds += 1;
                    for (what, bad) in map_mutants(&m) {
                        out.record(|| format!("{name}: {what}"), oracle::natural(&bad), &bad.check(), MAP);
                    }
                }
            }
        }
    }
    out
}

fn obj_ext_mutants(o: &ObjExtStructure) -> Vec<(String, ObjExtStructure)> {
    let c = o.base();
    let mut out = Vec::new();
    for (g, a) in o.types() {
        for x in (0..c.objects()).filter(|&x| x != o.ext(g, a)) {
            out.push((format!("ext({g}, {a}) := {x}"), o.with_ext(g, a, x).expect("in range")));
        }
        for f in (0..c.arrow_count()).filter(|&f| f != o.dpr(g, a)) {
            out.push((format!("dpr({g}, {a}) := {f}"), o.with_dpr(g, a, f).expect("in range")));
        }
    }
    out
}

fn obj_ext_valid(o: &ObjExtStructure) -> bool {
    oracle::obj_ext_laws(&oracle::Tables::of(o.base()), o.ty(), o.ext_table(), o.dpr_table())
}

pub fn obj_ext(bound: usize) -> KindOutcome {
    let mut out = KindOutcome::default();
    for (name, c) in catalog::suite_categories() {
        let c = Arc::new(c);
        for (i, o) in catalog::enumerate_obj_ext(&c, bound).iter().enumerate() {
            out.seeds += 1;
            for (what, m) in obj_ext_mutants(o) {
                out.record(|| format!("{name} #{i}: {what}"), obj_ext_valid(&m), &m.check(), OBJ_EXT);
            }
        }
    }
    out
}

fn term_valid(y: &TermStructure) -> bool {
    let o = y.over();
    oracle::term_laws(&TermTables {
        ty: o.ty(),
        ext: o.ext_table(),
        dpr: o.dpr_table(),
        p: y.p(),
        te: y.te_table(),
    })
}

/// Mutants of `te` and of the components of `p`.
fn term_mutants(y: &TermStructure) -> Vec<(String, TermStructure)> {
    let o = y.over();
    let mut out = Vec::new();
    for (g, a) in o.types() {
        for t in (0..y.tm().carrier(o.ext(g, a))).filter(|&t| t != y.te(g, a)) {
            out.push((format!("te({g}, {a}) := {t}"), y.with_te(g, a, t).expect("in range")));
        }
    }
    for (what, p) in map_mutants(y.p()) {
        out.push((format!("p {what}"), y.with_p(p).expect("same ends")));
    }
    out
}

pub fn terms(bound: usize) -> KindOutcome {
    let mut out = KindOutcome::default();
    for (name, c) in catalog::suite_categories() {
        let c = Arc::new(c);
        for (i, w) in catalog::enumerate_cwf(&c, bound).iter().enumerate() {
            out.seeds += 1;
            for (what, m) in term_mutants(w.term()) {
                out.record(|| format!("{name} #{i}: {what}"), term_valid(&m), &m.check(), TERM);
            }
        }
    }
    out
}

/// Term mutants plus mutants of the extension data underneath.
pub fn cwfs(bound: usize) -> KindOutcome {
    let mut out = KindOutcome::default();
    for (name, c) in catalog::suite_categories() {
        let c = Arc::new(c);
        for (i, w) in catalog::enumerate_cwf(&c, bound).iter().enumerate() {
            out.seeds += 1;
            let y = w.term();
            let mut mutants = term_mutants(y);
            for (what, o) in obj_ext_mutants(y.over()) {
                if let Ok(m) = TermStructure::new(Arc::new(o), y.p().clone(), y.te_table().to_vec()) {
                    mutants.push((what, m));
                }
            }
            for (what, m) in mutants {
                let m = CwfStructure::new(m);
                out.record(|| format!("{name} #{i}: {what}"), term_valid(m.term()), &m.check(), TERM);
            }
        }
    }
    out
}

fn qq_valid(z: &QMorphismStructure) -> bool {
    let o = z.over();
    oracle::qq_laws(&QqTables {
        ty: o.ty(),
        ext: o.ext_table(),
        dpr: o.dpr_table(),
        q: z.q_table(),
    })
}

fn qq_mutants(z: &QMorphismStructure) -> Vec<(String, QMorphismStructure)> {
    let c = z.over().base();
    let mut out = Vec::new();
    for f in 0..c.arrow_count() {
        for a in 0..z.over().ty().carrier(c.dst(f)) {
            for g in (0..c.arrow_count()).filter(|&g| g != z.q(f, a)) {
                out.push((format!("q({f}, {a}) := {g}"), z.with_q(f, a, g).expect("in range")));
            }
        }
    }
    out
}

pub fn qqs(bound: usize) -> KindOutcome {
    let mut out = KindOutcome::default();
    for (name, c) in catalog::suite_categories() {
        let c = Arc::new(c);
        for (i, t) in catalog::enumerate_split_typecat(&c, bound).iter().enumerate() {
            out.seeds += 1;
            for (what, m) in qq_mutants(t.qq()) {
                out.record(|| format!("{name} #{i}: {what}"), qq_valid(&m), &m.check(), QQ);
            }
        }
    }
    out
}

pub fn split_typecats(bound: usize) -> KindOutcome {
    let mut out = KindOutcome::default();
    for (name, c) in catalog::suite_categories() {
        let c = Arc::new(c);
        for (i, t) in catalog::enumerate_split_typecat(&c, bound).iter().enumerate() {
            out.seeds += 1;
            let z = t.qq();
            let mut mutants = qq_mutants(z);
            for (what, o) in obj_ext_mutants(z.over()) {
                mutants.push((what, QMorphismStructure::new(Arc::new(o), z.q_table().to_vec()).expect("same shape")));
            }
            for (what, m) in mutants {
                let m = SplitTypeCatStructure::new(m);
                out.record(|| format!("{name} #{i}: {what}"), qq_valid(m.qq()), &m.check(), QQ);
            }
        }
    }
    out
}

/// Seeds are the maps `p` of all suite structures together with every map
/// between presheaves of carriers at most one.
pub fn rep_maps(bound: usize) -> KindOutcome {
    let mut out = KindOutcome::default();
    for (name, c) in catalog::suite_categories() {
        let c = Arc::new(c);
        let mut seeds: Vec<PresheafMap> = catalog::enumerate_cwf(&c, bound).iter().map(|w| w.term().p().clone()).collect();
        let small: Vec<Arc<Presheaf>> = all_presheaves(&c, 1).into_iter().map(Arc::new).collect();
        for a in &small {
            for b in &small {
                seeds.extend(all_maps(a, b));
            }
        }
        for (i, p) in seeds.iter().enumerate() {
            out.seeds += 1;
            for (what, m) in map_mutants(p) {
                out.record(|| format!("{name} #{i}: {what}"), oracle::representable(&m), &rep_map_check(&m), REP);
            }
        }
    }
    out
}

type Entry = (usize, usize, usize, usize, usize);

fn build_universe(p: &PresheafMap, table: &[Entry]) -> Option<RelativeUniverse<cwfkit_core::relu::PresheafCategory>> {
    let (tm, ty) = (p.source(), p.target());
    let base = ty.base();
    let (target, j) = yoneda_embedding(base);
    let mut rows = Vec::new();
    for &(x, a, apex, proj, e) in table {
        let f = transpose(ty, x, a).ok()?;
        let q = transpose(tm, apex, e).ok()?;
        rows.push((x, f, JPullback { apex, proj, q }));
    }
    RelativeUniverse::new(RelUnivData { target, j, p: p.clone() }, rows).ok()
}

pub fn universes(bound: usize) -> KindOutcome {
    let mut out = KindOutcome::default();
    for (name, c) in catalog::suite_categories() {
        let c = Arc::new(c);
        for (i, w) in catalog::enumerate_cwf(&c, bound).iter().enumerate() {
            out.seeds += 1;
            let u = cwf_to_relu(w).expect("valid structure");
            let o = w.obj_ext();
            let table: Vec<Entry> = o.types().map(|(g, a)| (g, a, o.ext(g, a), o.dpr(g, a), w.term().te(g, a))).collect();
            let mut mutants: Vec<(String, PresheafMap, Vec<Entry>)> = Vec::new();
            for (k, &(x, a, apex, proj, e)) in table.iter().enumerate() {
                let mut with = |what: String, entry: Entry| {
                    let mut t = table.clone();
                    t[k] = entry;
                    mutants.push((what, u.data.p.clone(), t));
                };
                for v in (0..c.objects()).filter(|&v| v != apex) {
                    with(format!("apex at ({x}, {a}) := {v}"), (x, a, v, proj, e));
                }
                for v in (0..c.arrow_count()).filter(|&v| v != proj) {
                    with(format!("proj at ({x}, {a}) := {v}"), (x, a, apex, v, e));
                }
                for v in (0..w.term().tm().carrier(apex)).filter(|&v| v != e) {
                    with(format!("Q at ({x}, {a}) := {v}"), (x, a, apex, proj, v));
                }
            }
            for (what, p) in map_mutants(&u.data.p) {
                mutants.push((format!("p {what}"), p, table.clone()));
            }
            for (what, p, t) in mutants {
                let Some(m) = build_universe(&p, &t) else { continue };
                let findings = match m.check() {
                    Ok(f) => f,
                    Err(e) => {
                        out.failures.push(format!("{name} #{i}: {what}: checker error {e}"));
                        continue;
                    }
                };
                out.record(|| format!("{name} #{i}: {what}"), oracle::universe_laws(&p, &t), &findings, UNIVERSE);
            }
        }
    }
    out
}

/// All kinds in report order.
pub fn all_kinds(bound: usize) -> Vec<(&'static str, KindOutcome)> {
    vec![
        ("category", categories()),
        ("presheaf", presheaves(bound)),
        ("presheaf-map", presheaf_maps(bound)),
        ("obj-ext", obj_ext(bound)),
        ("term", terms(bound)),
        ("cwf", cwfs(bound)),
        ("qq", qqs(bound)),
        ("split-typecat", split_typecats(bound)),
        ("rep-map", rep_maps(bound)),
        ("rel-universe", universes(bound)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn category_mutants_are_all_caught() {
        let o = categories();
        assert!(o.failures.is_empty(), "{:?}", &o.failures[..o.failures.len().min(5)]);
        assert!(o.invalid > 0 && o.rejected == o.invalid);
    }

    #[test]
    fn qq_mutants_on_the_terminal_category() {
        let t = Arc::new(catalog::terminal());
        let mut o = KindOutcome::default();
        for s in catalog::enumerate_split_typecat(&t, 2) {
            for (what, m) in qq_mutants(s.qq()) {
                o.record(|| what.clone(), qq_valid(&m), &m.check(), QQ);
            }
        }
        assert!(o.failures.is_empty());
    }
}
