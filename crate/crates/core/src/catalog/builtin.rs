use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::fincat::{Arrow, FinCat};

/// A thin category on `objects` whose non-identity arrows are the listed
/// pairs. Identities come first, then the pairs in the order given.
pub fn preorder(objects: usize, pairs: &[(usize, usize)]) -> Result<FinCat> {
    let mut arrows: Vec<Arrow> = (0..objects).map(|c| Arrow { src: c, dst: c }).collect();
    let mut index = HashMap::new();
    for c in 0..objects {
        index.insert((c, c), c);
    }
    for &(a, b) in pairs {
        if a >= objects || b >= objects {
            return Err(Error::malformed(format!("pair ({a}, {b}) out of range")));
        }
        if index.insert((a, b), arrows.len()).is_some() {
            return Err(Error::malformed(format!("pair ({a}, {b}) listed twice")));
        }
        arrows.push(Arrow { src: a, dst: b });
    }
    let mut missing = None;
    let cat = FinCat::from_fn(objects, arrows.clone(), (0..objects).collect(), |f, g| {
        let key = (arrows[f].src, arrows[g].dst);
        match index.get(&key) {
            Some(&h) => h,
            None => {
                missing = Some(key);
                0
            }
        }
    })?;
    if let Some((a, b)) = missing {
        return Err(Error::malformed(format!("relation is not transitive: missing ({a}, {b})")));
    }
    Ok(cat)
}

pub fn terminal() -> FinCat {
    discrete(1)
}

pub fn discrete(n: usize) -> FinCat {
    preorder(n, &[]).expect("discrete category")
}

/// The poset `0 < 1 < .. < n`: `n + 1` objects.
pub fn chain(n: usize) -> FinCat {
    let mut pairs = Vec::new();
    for a in 0..=n {
        for b in a + 1..=n {
            pairs.push((a, b));
        }
    }
    preorder(n + 1, &pairs).expect("chain is a poset")
}

/// `0 -> 1`: identities 0, 1 and the arrow 2.
pub fn interval() -> FinCat {
    chain(1)
}

/// Two objects and an isomorphism between them: `2: 0 -> 1`, `3: 1 -> 0`.
pub fn iso_pair() -> FinCat {
    preorder(2, &[(0, 1), (1, 0)]).expect("indiscrete category")
}

/// `0 -> 1 ≅ 2`: arrows `3: 0 -> 1`, `4: 0 -> 2`, `5: 1 -> 2`, `6: 2 -> 1`.
pub fn three_with_iso_pair() -> FinCat {
    preorder(3, &[(0, 1), (0, 2), (1, 2), (2, 1)]).expect("preorder")
}

/// The free category on a finite directed acyclic graph: arrows are paths.
/// Identities come first, then paths by length and edge sequence.
pub fn free_category(objects: usize, edges: &[(usize, usize)]) -> Result<FinCat> {
    if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| a >= objects || b >= objects) {
        return Err(Error::malformed(format!("edge ({a}, {b}) out of range")));
    }
    // Kahn's algorithm; a leftover vertex lies on a cycle.
    let mut indegree = vec![0; objects];
    for &(_, b) in edges {
        indegree[b] += 1;
    }
    let mut ready: BTreeSet<usize> = (0..objects).filter(|&v| indegree[v] == 0).collect();
    let mut sorted = 0;
    while let Some(v) = ready.pop_first() {
        sorted += 1;
        for &(a, b) in edges {
            if a == v {
                indegree[b] -= 1;
                if indegree[b] == 0 {
                    ready.insert(b);
                }
            }
        }
    }
    if sorted != objects {
        return Err(Error::malformed("graph has a cycle, so its free category is infinite"));
    }

    let mut paths: Vec<(usize, usize, Vec<usize>)> = (0..objects).map(|c| (c, c, Vec::new())).collect();
    let mut frontier: Vec<Vec<usize>> = (0..edges.len()).map(|e| vec![e]).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in frontier {
            let (src, dst) = (edges[p[0]].0, edges[*p.last().unwrap()].1);
            for (e, &(a, _)) in edges.iter().enumerate() {
                if a == dst {
                    let mut q = p.clone();
                    q.push(e);
                    next.push(q);
                }
            }
            paths.push((src, dst, p));
        }
        next.sort();
        frontier = next;
    }
    let index: HashMap<Vec<usize>, usize> = paths
        .iter()
        .enumerate()
        .skip(objects)
        .map(|(i, (_, _, p))| (p.clone(), i))
        .collect();
    let arrows: Vec<Arrow> = paths.iter().map(|&(src, dst, _)| Arrow { src, dst }).collect();
    FinCat::from_fn(objects, arrows, (0..objects).collect(), |f, g| {
        if f < objects {
            return g;
        }
        if g < objects {
            return f;
        }
        let mut p = paths[f].2.clone();
        p.extend_from_slice(&paths[g].2);
        index[&p]
    })
}

/// One-object category of a finite monoid with `table[a][b] = a·b`.
/// Arrow `i` is element `i`; `f;g` is `g·f`.
pub fn monoid(table: &[Vec<usize>]) -> Result<FinCat> {
    let n = table.len();
    if n == 0 || table.iter().any(|row| row.len() != n || row.iter().any(|&v| v >= n)) {
        return Err(Error::malformed("monoid table must be a non-empty square table of elements"));
    }
    let unit = (0..n)
        .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
        .ok_or_else(|| Error::malformed("monoid table has no unit"))?;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::malformed(format!("monoid table is not associative at ({a}, {b}, {c})")));
                }
            }
        }
    }
    let arrows = vec![Arrow { src: 0, dst: 0 }; n];
    FinCat::from_fn(1, arrows, vec![unit], |f, g| table[g][f])
}

/// The group of order two as a one-object category: `0` is the unit.
pub fn z2() -> FinCat {
    monoid(&[vec![0, 1], vec![1, 0]]).expect("Z/2")
}

/// The categories the exhaustive suites run over.
pub fn suite_categories() -> Vec<(&'static str, FinCat)> {
    vec![
        ("terminal", terminal()),
        ("interval", interval()),
        ("chain(2)", chain(2)),
        ("iso-pair", iso_pair()),
        ("z2", z2()),
    ]
}

/// Looks a builtin up by name. Parameterised entries take their parameter
/// from `param`.
pub fn builtin(name: &str, param: Option<usize>) -> Result<FinCat> {
    let need = || param.ok_or_else(|| Error::malformed(format!("builtin {name} needs a parameter")));
    match name {
        "terminal" => Ok(terminal()),
        "interval" => Ok(interval()),
        "iso-pair" => Ok(iso_pair()),
        "three-iso" => Ok(three_with_iso_pair()),
        "z2" => Ok(z2()),
        "discrete" => Ok(discrete(need()?)),
        "chain" => Ok(chain(need()?)),
        _ => Err(Error::malformed(format!("unknown builtin category {name}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let c = chain(2);
        assert_eq!((c.objects(), c.arrow_count()), (3, 6));
        let t = terminal();
        assert_eq!((t.objects(), t.arrow_count()), (1, 1));
        let z = z2();
        assert_eq!((z.objects(), z.arrow_count()), (1, 2));
        assert!(!z.is_gaunt());
        assert_eq!(discrete(3).arrow_count(), 3);
    }

    #[test]
    fn builtins_are_categories() {
        for (_, c) in suite_categories() {
            assert!(c.check().is_empty());
        }
        assert!(three_with_iso_pair().check().is_empty());
        assert!(chain(4).check().is_empty());
        assert!(monoid(&[vec![0, 1], vec![1, 1]]).unwrap().check().is_empty());
    }

    #[test]
    fn free_category_on_a_square_graph() {
        // 0 -> 1 -> 3, 0 -> 2 -> 3: two distinct paths 0 -> 3
        let c = free_category(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert!(c.check().is_empty());
        assert_eq!(c.arrow_count(), 4 + 4 + 2);
        assert_eq!(c.hom(0, 3).len(), 2);
        assert!(c.is_gaunt());
    }

    #[test]
    fn free_category_with_parallel_edges() {
        let c = free_category(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(c.hom(0, 1), &[2, 3]);
        assert!(c.check().is_empty());
    }

    #[test]
    fn cyclic_graph_is_rejected() {
        assert!(matches!(free_category(2, &[(0, 1), (1, 0)]), Err(Error::Malformed(_))));
        assert!(matches!(free_category(1, &[(0, 0)]), Err(Error::Malformed(_))));
    }

    #[test]
    fn bad_monoid_tables() {
        assert!(monoid(&[vec![1, 0], vec![0, 0]]).is_err());
        // unit 0; 1·1 = 2, 2·1 = 1, 1·2 = 0 breaks associativity
        let t = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 1, 2]];
        assert!(monoid(&t).is_err());
    }

    #[test]
    fn non_transitive_relation_is_rejected() {
        assert!(preorder(3, &[(0, 1), (1, 2)]).is_err());
    }
}
