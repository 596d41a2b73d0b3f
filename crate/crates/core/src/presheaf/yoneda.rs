use std::sync::Arc;

use super::{Presheaf, PresheafMap};
use crate::error::{Error, Result};
use crate::fincat::FinCat;

/// `y(obj)`: `y(obj)(d)` is the hom-set `d -> obj` in ascending arrow order,
/// and `f: a -> b` acts by precomposition `g ↦ f;g`.
pub fn yoneda(base: &Arc<FinCat>, obj: usize) -> Presheaf {
    let c = &**base;
    let carrier = (0..c.objects()).map(|d| c.hom(d, obj).len()).collect();
    let action = (0..c.arrow_count())
        .map(|f| {
            c.hom(c.dst(f), obj)
                .iter()
                .map(|&g| c.hom_position(c.then(f, g)))
                .collect()
        })
        .collect();
    Presheaf {
        base: base.clone(),
        carrier,
        action,
    }
}

/// `y(f): y(a) -> y(b)` for `f: a -> b`, postcomposition with `f`.
pub fn yoneda_on_arrow(base: &Arc<FinCat>, f: usize) -> PresheafMap {
    let c = &**base;
    let (a, b) = (c.src(f), c.dst(f));
    let components = (0..c.objects())
        .map(|d| c.hom(d, a).iter().map(|&g| c.hom_position(c.then(g, f))).collect())
        .collect();
    PresheafMap::new(Arc::new(yoneda(base, a)), Arc::new(yoneda(base, b)), components)
        .expect("postcomposition has the right shape")
}

/// The Yoneda transpose `y(obj) -> P` of `elem ∈ P(obj)`: at `d` it sends
/// `g: d -> obj` to `g* elem`.
pub fn transpose(p: &Arc<Presheaf>, obj: usize, elem: usize) -> Result<PresheafMap> {
    let c = &**p.base();
    if obj >= c.objects() {
        return Err(Error::malformed(format!("object {obj} out of range")));
    }
    if elem >= p.carrier(obj) {
        return Err(Error::malformed(format!(
            "element {elem} out of range for carrier of size {} at object {obj}",
            p.carrier(obj)
        )));
    }
    let components = (0..c.objects())
        .map(|d| c.hom(d, obj).iter().map(|&g| p.act(g, elem)).collect())
        .collect();
    PresheafMap::new(Arc::new(yoneda(p.base(), obj)), p.clone(), components)
}

/// Inverse transpose: evaluate `eta: y(obj) -> P` at `id_obj`.
pub fn transpose_inverse(eta: &PresheafMap, obj: usize) -> Result<usize> {
    let base = eta.source().base();
    if obj >= base.objects() || **eta.source() != yoneda(base, obj) {
        return Err(Error::malformed(format!("map does not start at y({obj})")));
    }
    Ok(eta.apply(obj, base.hom_position(base.identity(obj))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use proptest::prelude::*;

    #[test]
    fn yoneda_carriers_on_the_interval() {
        let i = Arc::new(catalog::interval());
        assert_eq!(yoneda(&i, 0).carriers(), &[1, 0]);
        assert_eq!(yoneda(&i, 1).carriers(), &[1, 1]);
        let t = Arc::new(catalog::terminal());
        assert_eq!(yoneda(&t, 0).carriers(), &[1]);
    }

    #[test]
    fn yoneda_presheaves_are_valid() {
        for (_, c) in catalog::suite_categories() {
            let c = Arc::new(c);
            for x in 0..c.objects() {
                assert!(yoneda(&c, x).check().is_empty());
            }
            for f in 0..c.arrow_count() {
                assert!(yoneda_on_arrow(&c, f).check().is_empty());
            }
        }
    }

    #[test]
    fn yoneda_on_arrows_is_functorial() {
        for (_, c) in catalog::suite_categories() {
            let c = Arc::new(c);
            for x in 0..c.objects() {
                let id = yoneda_on_arrow(&c, c.identity(x));
                assert_eq!(id, PresheafMap::identity(Arc::new(yoneda(&c, x))));
            }
            for f in 0..c.arrow_count() {
                for g in (0..c.arrow_count()).filter(|&g| c.src(g) == c.dst(f)) {
                    let lhs = yoneda_on_arrow(&c, c.then(f, g));
                    let rhs = yoneda_on_arrow(&c, f).then(&yoneda_on_arrow(&c, g)).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn interval_arrow_image() {
        let i = Arc::new(catalog::interval());
        let m = yoneda_on_arrow(&i, 2);
        assert_eq!(m.components(), &[vec![0], vec![]]);
    }

    #[test]
    fn transpose_of_identity_is_identity() {
        for (_, c) in catalog::suite_categories() {
            let c = Arc::new(c);
            for x in 0..c.objects() {
                let y = Arc::new(yoneda(&c, x));
                let id_pos = c.hom_position(c.identity(x));
                assert_eq!(transpose(&y, x, id_pos).unwrap(), PresheafMap::identity(y));
            }
        }
    }

    #[test]
    fn transpose_into_terminal() {
        let c = Arc::new(catalog::chain(2));
        let one = Arc::new(Presheaf::terminal(c.clone()));
        let m = transpose(&one, 1, 0).unwrap();
        assert!(m.check().is_empty());
        assert!(matches!(transpose(&one, 1, 1), Err(Error::Malformed(_))));
    }

    proptest! {
        #[test]
        fn transpose_round_trips(which in 0usize..5, seed in 0usize..1000) {
            let (_, c) = catalog::suite_categories().swap_remove(which);
            let c = Arc::new(c);
            let all = crate::presheaf::all_presheaves(&c, 2);
            let p = Arc::new(all[seed % all.len()].clone());
            for x in 0..c.objects() {
                for e in 0..p.carrier(x) {
                    let eta = transpose(&p, x, e).unwrap();
                    prop_assert!(eta.check().is_empty());
                    prop_assert_eq!(transpose_inverse(&eta, x).unwrap(), e);
                }
            }
        }
    }
}
