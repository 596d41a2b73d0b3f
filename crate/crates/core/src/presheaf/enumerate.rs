//! Exhaustive enumeration of small presheaves and presheaf maps.
//!
//! Cost is exponential in the carrier bound; everything here is meant for
//! carriers of size two or three over categories with a handful of arrows.

use std::sync::Arc;

use super::{Presheaf, PresheafMap};
use crate::fincat::FinCat;

/// All functions `{0..len} -> {0..range}` in lexicographic order.
fn functions(len: usize, range: usize) -> Vec<Vec<usize>> {
    if len > 0 && range == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = vec![0; len];
    loop {
        out.push(cur.clone());
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] + 1 < range {
                cur[i] += 1;
                cur[i + 1..].iter_mut().for_each(|v| *v = 0);
                break;
            }
        }
    }
}

/// Every presheaf on `base` whose carriers have at most `max_carrier`
/// elements. Carrier vectors are visited lexicographically (object 0 varies
/// slowest), then action tables lexicographically in arrow order.
pub fn all_presheaves(base: &Arc<FinCat>, max_carrier: usize) -> Vec<Presheaf> {
    let n = base.objects();
    let mut out = Vec::new();
    let mut carrier = vec![0; n];
    loop {
        actions_for(base, &carrier, &mut out);
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if carrier[i] < max_carrier {
                carrier[i] += 1;
                carrier[i + 1..].iter_mut().for_each(|v| *v = 0);
                break;
            }
        }
    }
}

/// Every presheaf on `base` with exactly the given carriers.
pub fn presheaves_with_carriers(base: &Arc<FinCat>, carrier: &[usize]) -> Vec<Presheaf> {
    let mut out = Vec::new();
    if carrier.len() == base.objects() {
        actions_for(base, carrier, &mut out);
    }
    out
}

fn actions_for(base: &Arc<FinCat>, carrier: &[usize], out: &mut Vec<Presheaf>) {
    let c = &**base;
    let free: Vec<usize> = (0..c.arrow_count()).filter(|&f| !c.is_identity(f)).collect();
    let mut order = vec![usize::MAX; c.arrow_count()];
    for (k, &f) in free.iter().enumerate() {
        order[f] = k;
    }
    let candidates: Vec<Vec<Vec<usize>>> = free
        .iter()
        .map(|&f| functions(carrier[c.dst(f)], carrier[c.src(f)]))
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return;
    }
    let mut action: Vec<Vec<usize>> = (0..c.arrow_count())
        .map(|f| if c.is_identity(f) { (0..carrier[c.dst(f)]).collect() } else { Vec::new() })
        .collect();
    // Composable pairs (f, g) whose latest-assigned member is free[k].
    let mut checks: Vec<Vec<(usize, usize)>> = vec![Vec::new(); free.len()];
    let rank = |a: usize| if c.is_identity(a) { None } else { Some(order[a]) };
    for f in 0..c.arrow_count() {
        for g in (0..c.arrow_count()).filter(|&g| c.src(g) == c.dst(f)) {
            let last = [rank(f), rank(g), rank(c.then(f, g))].into_iter().flatten().max();
            if let Some(k) = last {
                checks[k].push((f, g));
            }
        }
    }

    fn go(
        k: usize,
        c: &FinCat,
        free: &[usize],
        candidates: &[Vec<Vec<usize>>],
        checks: &[Vec<(usize, usize)>],
        action: &mut Vec<Vec<usize>>,
        emit: &mut dyn FnMut(&[Vec<usize>]),
    ) {
        if k == free.len() {
            emit(action);
            return;
        }
        for cand in &candidates[k] {
            action[free[k]] = cand.clone();
            let ok = checks[k].iter().all(|&(f, g)| {
                let fg = c.then(f, g);
                action[fg].iter().enumerate().all(|(x, &y)| action[f][action[g][x]] == y)
            });
            if ok {
                go(k + 1, c, free, candidates, checks, action, emit);
            }
        }
    }

    let mut emit = |a: &[Vec<usize>]| {
        out.push(Presheaf {
            base: base.clone(),
            carrier: carrier.to_vec(),
            action: a.to_vec(),
        })
    };
    go(0, c, &free, &candidates, &checks, &mut action, &mut emit);
}

/// Every presheaf map `source -> target`, components chosen object by
/// object in lexicographic order.
pub fn all_maps(source: &Arc<Presheaf>, target: &Arc<Presheaf>) -> Vec<PresheafMap> {
    let mut out = Vec::new();
    let candidates: Vec<Vec<Vec<usize>>> = (0..source.base().objects())
        .map(|c| functions(source.carrier(c), target.carrier(c)))
        .collect();
    search(source, target, &candidates, &mut |m| {
        out.push(m);
        false
    });
    out
}

/// First natural isomorphism `source -> target` (bijections per object in
/// lexicographic order) whose entries all satisfy `accept(object, x, y)`
/// and which passes `finish`.
pub fn find_iso(
    source: &Arc<Presheaf>,
    target: &Arc<Presheaf>,
    accept: impl Fn(usize, usize, usize) -> bool,
    finish: impl Fn(&PresheafMap) -> bool,
) -> Option<PresheafMap> {
    if source.carriers() != target.carriers() {
        return None;
    }
    let candidates: Vec<Vec<Vec<usize>>> = (0..source.base().objects())
        .map(|c| {
            let n = source.carrier(c);
            functions(n, n)
                .into_iter()
                .filter(|f| {
                    let mut seen = vec![false; n];
                    f.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
                })
                .filter(|f| f.iter().enumerate().all(|(x, &y)| accept(c, x, y)))
                .collect()
        })
        .collect();
    let mut found = None;
    search(source, target, &candidates, &mut |m| {
        if finish(&m) {
            found = Some(m);
            true
        } else {
            false
        }
    });
    found
}

/// Any isomorphism between two presheaves.
pub fn isomorphic(source: &Arc<Presheaf>, target: &Arc<Presheaf>) -> Option<PresheafMap> {
    find_iso(source, target, |_, _, _| true, |_| true)
}

/// Backtracking over per-object candidates with naturality pruning.
/// `emit` returns true to stop.
fn search(
    source: &Arc<Presheaf>,
    target: &Arc<Presheaf>,
    candidates: &[Vec<Vec<usize>>],
    emit: &mut dyn FnMut(PresheafMap) -> bool,
) {
    let base = source.base().clone();
    let n = base.objects();
    // Arrows to check once object c is assigned: both ends <= c, one end == c.
    let checks: Vec<Vec<usize>> = (0..n)
        .map(|c| {
            (0..base.arrow_count())
                .filter(|&f| base.src(f).max(base.dst(f)) == c)
                .collect()
        })
        .collect();
    let mut comps: Vec<Vec<usize>> = vec![Vec::new(); n];

    #[allow(clippy::too_many_arguments)]
    fn go(
        c: usize,
        base: &FinCat,
        source: &Arc<Presheaf>,
        target: &Arc<Presheaf>,
        candidates: &[Vec<Vec<usize>>],
        checks: &[Vec<usize>],
        comps: &mut Vec<Vec<usize>>,
        emit: &mut dyn FnMut(PresheafMap) -> bool,
    ) -> bool {
        if c == candidates.len() {
            let m = PresheafMap::new(source.clone(), target.clone(), comps.clone()).expect("enumerated map has the right shape");
            return emit(m);
        }
        for cand in &candidates[c] {
            comps[c] = cand.clone();
            let natural = checks[c].iter().all(|&f| {
                let (a, b) = (base.src(f), base.dst(f));
                (0..source.carrier(b)).all(|x| comps[a][source.act(f, x)] == target.act(f, comps[b][x]))
            });
            if natural && go(c + 1, base, source, target, candidates, checks, comps, emit) {
                return true;
            }
        }
        false
    }

    go(0, &base, source, target, candidates, &checks, &mut comps, emit);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::presheaf::yoneda;

    #[test]
    fn functions_are_lexicographic() {
        assert_eq!(functions(2, 2), vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(functions(0, 0), vec![Vec::<usize>::new()]);
        assert!(functions(1, 0).is_empty());
    }

    #[test]
    fn presheaves_on_the_terminal_category_are_sets() {
        let t = Arc::new(catalog::terminal());
        let all = all_presheaves(&t, 3);
        assert_eq!(all.iter().map(|p| p.carrier(0)).collect::<Vec<_>>(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn presheaves_on_z2_are_involutions() {
        // sets of size <= 2 with an involution: 1 + 1 + 2
        let z = Arc::new(catalog::z2());
        assert_eq!(all_presheaves(&z, 2).len(), 4);
    }

    #[test]
    fn presheaves_on_the_interval_are_functions() {
        // sum over (n0, n1) in {0,1,2}^2 of n0^n1, with 0^0 = 1
        let i = Arc::new(catalog::interval());
        let expected: usize = (0..=2u32)
            .flat_map(|a| (0..=2u32).map(move |b| (a as usize).pow(b)))
            .sum();
        let all = all_presheaves(&i, 2);
        assert_eq!(all.len(), expected);
        assert!(all.iter().all(|p| p.check().is_empty()));
    }

    #[test]
    fn maps_out_of_a_representable_match_elements() {
        for (_, c) in catalog::suite_categories() {
            let c = Arc::new(c);
            for p in all_presheaves(&c, 2) {
                let p = Arc::new(p);
                for x in 0..c.objects() {
                    let y = Arc::new(yoneda(&c, x));
                    assert_eq!(all_maps(&y, &p).len(), p.carrier(x));
                }
            }
        }
    }

    #[test]
    fn iso_search_finds_the_swap() {
        let z = Arc::new(catalog::z2());
        let all = all_presheaves(&z, 2);
        let free = Arc::new(all.iter().find(|p| p.carrier(0) == 2 && p.act(1, 0) == 1).unwrap().clone());
        let y = Arc::new(yoneda(&z, 0));
        assert!(isomorphic(&free, &y).is_some());
        let trivial = Arc::new(Presheaf::constant(z.clone(), 2));
        assert!(isomorphic(&free, &trivial).is_none());
    }
}
