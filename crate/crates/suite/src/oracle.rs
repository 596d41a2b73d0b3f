//! Second implementations of every law the core checks, written against the
//! raw tables only. They share no checking code with `cwfkit-core`.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use cwfkit_core::{FinCat, Presheaf, PresheafMap, PresheafSquare};

/// A category as bare tables: `comp[(f, g)] = f;g`.
#[derive(Debug, Clone)]
pub struct Tables {
    pub objects: usize,
    pub src: Vec<usize>,
    pub dst: Vec<usize>,
    pub id: Vec<usize>,
    pub comp: HashMap<(usize, usize), usize>,
}

impl Tables {
    pub fn of(c: &FinCat) -> Tables {
        Tables {
            objects: c.objects(),
            src: c.arrows().iter().map(|a| a.src).collect(),
            dst: c.arrows().iter().map(|a| a.dst).collect(),
            id: c.identities().to_vec(),
            comp: c.compose_entries().into_iter().map(|(g, f, fg)| ((f, g), fg)).collect(),
        }
    }

    pub fn arrows(&self) -> usize {
        self.src.len()
    }

    pub fn then(&self, f: usize, g: usize) -> usize {
        self.comp[&(f, g)]
    }

    pub fn between(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.arrows()).filter(|&f| self.src[f] == a && self.dst[f] == b).collect()
    }

    fn composable(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.arrows();
        (0..n).flat_map(move |f| (0..n).filter(move |&g| self.dst[f] == self.src[g]).map(move |g| (f, g)))
    }

    pub fn laws_hold(&self) -> bool {
        let ids_ok = (0..self.objects).all(|x| self.src[self.id[x]] == x && self.dst[self.id[x]] == x);
        if !ids_ok {
            return false;
        }
        let ends_ok = self.composable().all(|(f, g)| {
            let h = self.then(f, g);
            self.src[h] == self.src[f] && self.dst[h] == self.dst[g]
        });
        if !ends_ok {
            return false;
        }
        let units = (0..self.arrows())
            .all(|f| self.then(self.id[self.src[f]], f) == f && self.then(f, self.id[self.dst[f]]) == f);
        units
            && self.composable().all(|(f, g)| {
                (0..self.arrows())
                    .filter(|&h| self.src[h] == self.dst[g])
                    .all(|h| self.then(self.then(f, g), h) == self.then(f, self.then(g, h)))
            })
    }

    /// For every test object `t`, `m ↦ (m;left, m;top)` must be a bijection
    /// from `hom(t, P)` onto the cones over the cospan: the image has as
    /// many distinct pairs as there are cones and as there are arrows `m`.
    pub fn is_pullback(&self, top: usize, left: usize, bottom: usize, right: usize) -> bool {
        let corner = self.src[top];
        let (a, b) = (self.dst[left], self.dst[top]);
        (0..self.objects).all(|t| {
            let arrows = self.between(t, corner);
            let image: HashSet<(usize, usize)> =
                arrows.iter().map(|&m| (self.then(m, left), self.then(m, top))).collect();
            let mut cones = 0;
            for x in self.between(t, a) {
                for y in self.between(t, b) {
                    if self.then(x, bottom) == self.then(y, right) {
                        cones += 1;
                    }
                }
            }
            image.len() == arrows.len() && image.len() == cones
        })
    }

    /// Some `g` is a two-sided inverse of `f`.
    pub fn is_iso(&self, f: usize) -> bool {
        (0..self.arrows()).any(|g| {
            self.src[g] == self.dst[f]
                && self.dst[g] == self.src[f]
                && self.then(f, g) == self.id[self.src[f]]
                && self.then(g, f) == self.id[self.dst[f]]
        })
    }
}

/// Identity acts trivially and `P(f;g) = P(f) ∘ P(g)`.
pub fn presheaf_laws(p: &Presheaf) -> bool {
    let t = Tables::of(p.base());
    let shapes = (0..t.arrows()).all(|f| {
        p.action(f).len() == p.carrier(t.dst[f]) && p.action(f).iter().all(|&y| y < p.carrier(t.src[f]))
    });
    shapes
        && (0..t.objects).all(|x| (0..p.carrier(x)).all(|e| p.act(t.id[x], e) == e))
        && t
            .composable()
            .all(|(f, g)| (0..p.carrier(t.dst[g])).all(|e| p.act(t.then(f, g), e) == p.act(f, p.act(g, e))))
}

pub fn natural(m: &PresheafMap) -> bool {
    let t = Tables::of(m.source().base());
    (0..t.arrows()).all(|f| {
        (0..m.source().carrier(t.dst[f]))
            .all(|e| m.apply(t.src[f], m.source().act(f, e)) == m.target().act(f, m.apply(t.dst[f], e)))
    })
}

/// All natural maps `x -> y`: elements are assigned object by object and
/// an arrow's naturality is checked once both its ends are assigned.
pub fn naive_maps(x: &Arc<Presheaf>, y: &Arc<Presheaf>) -> Vec<PresheafMap> {
    let t = Tables::of(x.base());
    let n = t.objects;
    let mut ready: Vec<Vec<usize>> = vec![Vec::new(); n];
    for f in 0..t.arrows() {
        ready[t.src[f].max(t.dst[f])].push(f);
    }
    let mut comps: Vec<Vec<usize>> = (0..n).map(|c| vec![0; x.carrier(c)]).collect();
    let mut out = Vec::new();

    fn assign(
        c: usize,
        e: usize,
        t: &Tables,
        x: &Arc<Presheaf>,
        y: &Arc<Presheaf>,
        ready: &[Vec<usize>],
        comps: &mut Vec<Vec<usize>>,
        out: &mut Vec<PresheafMap>,
    ) {
        if c == t.objects {
            out.push(PresheafMap::new(x.clone(), y.clone(), comps.clone()).expect("in range"));
            return;
        }
        if e == x.carrier(c) {
            let natural = ready[c].iter().all(|&f| {
                (0..x.carrier(t.dst[f])).all(|v| comps[t.src[f]][x.act(f, v)] == y.act(f, comps[t.dst[f]][v]))
            });
            if natural {
                assign(c + 1, 0, t, x, y, ready, comps, out);
            }
            return;
        }
        for v in 0..y.carrier(c) {
            comps[c][e] = v;
            assign(c, e + 1, t, x, y, ready, comps, out);
        }
    }

    assign(0, 0, &t, x, y, &ready, &mut comps, &mut out);
    out
}

/// Universal property by brute force: for every apex `X` and every cone
/// `(x: X -> A, y: X -> B)` over the cospan there is exactly one mediator
/// `X -> P`. Maps out of each apex are cached per target presheaf.
pub struct ConeOracle {
    apexes: Vec<Arc<Presheaf>>,
    cache: Vec<(Arc<Presheaf>, Vec<Vec<PresheafMap>>)>,
}

impl ConeOracle {
    pub fn new(apexes: Vec<Arc<Presheaf>>) -> Self {
        ConeOracle { apexes, cache: Vec::new() }
    }

    pub fn apexes(&self) -> usize {
        self.apexes.len()
    }

    fn maps_into(&mut self, target: &Arc<Presheaf>) -> usize {
        if let Some(i) = self.cache.iter().position(|(p, _)| p == target) {
            return i;
        }
        let maps = self.apexes.iter().map(|x| naive_maps(x, target)).collect();
        self.cache.push((target.clone(), maps));
        self.cache.len() - 1
    }

    pub fn is_pullback(&mut self, sq: &PresheafSquare) -> bool {
        let (ia, ib, ip) = (
            self.maps_into(sq.left.target()),
            self.maps_into(sq.top.target()),
            self.maps_into(sq.top.source()),
        );
        (0..self.apexes.len()).all(|k| {
            let legs: Vec<(PresheafMap, PresheafMap)> = self.cache[ip].1[k]
                .iter()
                .map(|m| (m.then(&sq.left).expect("composable"), m.then(&sq.top).expect("composable")))
                .collect();
            let to_b: Vec<(&PresheafMap, PresheafMap)> = self.cache[ib].1[k]
                .iter()
                .map(|y| (y, y.then(&sq.right).expect("composable")))
                .collect();
            self.cache[ia].1[k].iter().all(|x| {
                let xb = x.then(&sq.bottom).expect("composable");
                to_b.iter()
                    .filter(|(_, yr)| *yr == xb)
                    .all(|(y, _)| legs.iter().filter(|(l, t)| l == x && t == *y).count() == 1)
            })
        })
    }
}

/// Extension data as raw tables: `ext[Γ][A]`, `dpr[Γ][A]`.
pub fn obj_ext_laws(t: &Tables, ty: &Presheaf, ext: &[Vec<usize>], dpr: &[Vec<usize>]) -> bool {
    presheaf_laws(ty)
        && (0..t.objects).all(|g| {
            (0..ty.carrier(g)).all(|a| {
                let (x, pi) = (ext[g][a], dpr[g][a]);
                x < t.objects && pi < t.arrows() && t.src[pi] == x && t.dst[pi] == g
            })
        })
}

/// The fiber square of `p` at `A ∈ Ty(Γ)` with chosen `(x, π, e)` is a
/// pullback: for every `d`, `k ↦ (k;π, k* e)` is a bijection from
/// `hom(d, x)` onto the pairs `(h: d -> Γ, t ∈ Tm(d))` with `h* A = p(t)`.
pub fn represents(t: &Tables, p: &PresheafMap, g: usize, a: usize, x: usize, pi: usize, e: usize) -> bool {
    let (tm, ty) = (p.source(), p.target());
    if t.src[pi] != x || t.dst[pi] != g || e >= tm.carrier(x) || p.apply(x, e) != ty.act(pi, a) {
        return false;
    }
    (0..t.objects).all(|d| {
        let ks = t.between(d, x);
        let image: HashSet<(usize, usize)> = ks.iter().map(|&k| (t.then(k, pi), tm.act(k, e))).collect();
        let mut fiber = 0;
        for h in t.between(d, g) {
            fiber += (0..tm.carrier(d)).filter(|&s| p.apply(d, s) == ty.act(h, a)).count();
        }
        image.len() == ks.len() && image.len() == fiber
    })
}

pub fn map_laws(p: &PresheafMap) -> bool {
    presheaf_laws(p.source()) && presheaf_laws(p.target()) && natural(p)
}

/// Every fiber of `p` has some representation.
pub fn representable(p: &PresheafMap) -> bool {
    let t = Tables::of(p.target().base());
    map_laws(p)
        && (0..t.objects).all(|g| {
            (0..p.target().carrier(g)).all(|a| {
                (0..t.objects).any(|x| {
                    t.between(x, g)
                        .into_iter()
                        .any(|pi| (0..p.source().carrier(x)).any(|e| represents(&t, p, g, a, x, pi, e)))
                })
            })
        })
}

/// Raw term-structure data.
pub struct TermTables<'a> {
    pub ty: &'a Presheaf,
    pub ext: &'a [Vec<usize>],
    pub dpr: &'a [Vec<usize>],
    pub p: &'a PresheafMap,
    pub te: &'a [Vec<usize>],
}

pub fn term_laws(w: &TermTables<'_>) -> bool {
    let t = Tables::of(w.ty.base());
    obj_ext_laws(&t, w.ty, w.ext, w.dpr)
        && map_laws(w.p)
        && *w.p.target().as_ref() == *w.ty
        && (0..t.objects).all(|g| {
            (0..w.ty.carrier(g)).all(|a| represents(&t, w.p, g, a, w.ext[g][a], w.dpr[g][a], w.te[g][a]))
        })
}

/// Raw q-morphism data: `q[f][A]` for `A ∈ Ty(dst f)`.
pub struct QqTables<'a> {
    pub ty: &'a Presheaf,
    pub ext: &'a [Vec<usize>],
    pub dpr: &'a [Vec<usize>],
    pub q: &'a [Vec<usize>],
}

pub fn qq_laws(z: &QqTables<'_>) -> bool {
    let t = Tables::of(z.ty.base());
    if !obj_ext_laws(&t, z.ty, z.ext, z.dpr) {
        return false;
    }
    let ok = |f: usize, a: usize| {
        let (delta, gamma) = (t.src[f], t.dst[f]);
        let fa = z.ty.act(f, a);
        let q = z.q[f][a];
        if t.src[q] != z.ext[delta][fa] || t.dst[q] != z.ext[gamma][a] {
            return false;
        }
        let (pi_fa, pi_a) = (z.dpr[delta][fa], z.dpr[gamma][a]);
        t.then(q, pi_a) == t.then(pi_fa, f) && t.is_pullback(q, pi_fa, f, pi_a)
    };
    let all_ok = (0..t.arrows()).all(|f| (0..z.ty.carrier(t.dst[f])).all(|a| ok(f, a)));
    all_ok
        && (0..t.objects).all(|g| (0..z.ty.carrier(g)).all(|a| z.q[t.id[g]][a] == t.id[z.ext[g][a]]))
        && t.composable().all(|(g, f)| {
            (0..z.ty.carrier(t.dst[f])).all(|a| {
                z.q[t.then(g, f)][a] == t.then(z.q[g][z.ty.act(f, a)], z.q[f][a])
            })
        })
}

/// A universe over Yoneda as element data: entries `(X, A, X', p', e)`.
pub fn universe_laws(p: &PresheafMap, table: &[(usize, usize, usize, usize, usize)]) -> bool {
    let t = Tables::of(p.target().base());
    if !map_laws(p) {
        return false;
    }
    let mut seen = HashSet::new();
    for &(x, a, apex, proj, e) in table {
        if !seen.insert((x, a)) || proj >= t.arrows() || t.dst[proj] != x || t.src[proj] != apex {
            return false;
        }
        if !represents(&t, p, x, a, apex, proj, e) {
            return false;
        }
    }
    (0..t.objects).all(|x| (0..p.target().carrier(x)).all(|a| seen.contains(&(x, a))))
}

/// Every valid structure on the terminal category whose types, terms and
/// extension data fit in `bound`, found by listing set-level data directly:
/// `Ty` is a set of `n` types, `ext` is forced, and a term structure is a
/// function `p: Tm -> Ty` with every fiber a singleton together with the
/// forced generic terms. Returns the `(|Ty|, |Tm|, p)` triples.
pub fn terminal_cwf_shapes(bound: usize) -> Vec<(usize, usize, Vec<usize>)> {
    let mut out = Vec::new();
    for n in 0..=bound {
        for m in 0..=bound {
            let mut p = vec![0; m];
            loop {
                if n > 0 || m == 0 {
                    let fibers_singletons = (0..n).all(|a| p.iter().filter(|&&b| b == a).count() == 1);
                    if fibers_singletons && (m == 0 || p.iter().all(|&b| b < n)) {
                        out.push((n, m, p.clone()));
                    }
                }
                let mut k = m;
                loop {
                    if k == 0 {
                        break;
                    }
                    k -= 1;
                    if p[k] + 1 < n {
                        p[k] += 1;
                        break;
                    }
                    p[k] = 0;
                }
                if k == 0 && p.iter().all(|&v| v == 0) {
                    break;
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use cwfkit_core::catalog;

    #[test]
    fn tables_agree_with_builtins() {
        for (_, c) in catalog::suite_categories() {
            assert!(Tables::of(&c).laws_hold());
        }
        let broken = catalog::z2().with_composite(0, 1, 0).unwrap();
        assert!(!Tables::of(&broken).laws_hold());
        // a;a := a turns Z/2 into the idempotent monoid
        let flipped = catalog::z2().with_composite(1, 1, 1).unwrap();
        assert!(Tables::of(&flipped).laws_hold());
    }

    #[test]
    fn terminal_shapes_are_bijections() {
        // n types, n terms, p a bijection: 1 + 1 + 2
        let shapes = terminal_cwf_shapes(2);
        assert_eq!(shapes.len(), 4);
        assert!(shapes.iter().all(|(n, m, _)| n == m));
    }

    #[test]
    fn naive_maps_count_elements() {
        let z = Arc::new(catalog::z2());
        let y = Arc::new(cwfkit_core::presheaf::yoneda(&z, 0));
        assert_eq!(naive_maps(&y, &y).len(), 2);
    }
}
