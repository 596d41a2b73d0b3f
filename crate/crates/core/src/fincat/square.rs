use super::FinCat;
use crate::error::{Error, Result};

/// A square in one category:
///
/// ```text
///   P --top--> B
///   |          |
///  left      right
///   v          v
///   A -bottom-> D
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CommutingSquare {
    pub top: usize,
    pub left: usize,
    pub bottom: usize,
    pub right: usize,
}

/// A cone `(T, t_left: T -> A, t_top: T -> B)` that does not have exactly
/// one mediating arrow into the corner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeFailure {
    pub apex: usize,
    pub to_left: usize,
    pub to_top: usize,
    pub mediators: Vec<usize>,
}

impl CommutingSquare {
    pub fn new(top: usize, left: usize, bottom: usize, right: usize) -> Self {
        CommutingSquare { top, left, bottom, right }
    }

    fn validate(&self, c: &FinCat) -> Result<()> {
        let n = c.arrow_count();
        if [self.top, self.left, self.bottom, self.right].iter().any(|&a| a >= n) {
            return Err(Error::malformed("square arrow out of range"));
        }
        if c.src(self.top) != c.src(self.left)
            || c.dst(self.left) != c.src(self.bottom)
            || c.dst(self.top) != c.src(self.right)
            || c.dst(self.bottom) != c.dst(self.right)
        {
            return Err(Error::malformed("square arrows do not form a square"));
        }
        Ok(())
    }

    pub fn commutes(&self, c: &FinCat) -> Result<bool> {
        self.validate(c)?;
        Ok(c.then(self.left, self.bottom) == c.then(self.top, self.right))
    }

    /// Every cone failing the pullback property, by brute force over all
    /// apexes and leg pairs in ascending order.
    pub fn pullback_failures(&self, c: &FinCat) -> Result<Vec<ConeFailure>> {
        self.failures(c, false)
    }

    /// The first cone failing the pullback property.
    pub fn pullback_failure(&self, c: &FinCat) -> Result<Option<ConeFailure>> {
        Ok(self.failures(c, true)?.into_iter().next())
    }

    pub fn is_pullback(&self, c: &FinCat) -> Result<bool> {
        Ok(self.pullback_failure(c)?.is_none())
    }

    fn failures(&self, c: &FinCat, first_only: bool) -> Result<Vec<ConeFailure>> {
        if !self.commutes(c)? {
            return Err(Error::precondition("square does not commute"));
        }
        let corner = c.src(self.top);
        let a = c.dst(self.left);
        let b = c.dst(self.top);
        let mut out = Vec::new();
        for t in 0..c.objects() {
            for &x in c.hom(t, a) {
                let base = c.then(x, self.bottom);
                for &y in c.hom(t, b) {
                    if c.then(y, self.right) != base {
                        continue;
                    }
                    let mediators: Vec<usize> = c
                        .hom(t, corner)
                        .iter()
                        .copied()
                        .filter(|&m| c.then(m, self.left) == x && c.then(m, self.top) == y)
                        .collect();
                    if mediators.len() != 1 {
                        out.push(ConeFailure {
                            apex: t,
                            to_left: x,
                            to_top: y,
                            mediators,
                        });
                        if first_only {
                            return Ok(out);
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

/// `is_pullback` for a square given as a tuple.
pub fn is_pullback(c: &FinCat, sq: &CommutingSquare) -> Result<bool> {
    sq.is_pullback(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn identity_square_is_a_pullback() {
        let t = catalog::terminal();
        assert!(CommutingSquare::new(0, 0, 0, 0).is_pullback(&t).unwrap());
    }

    #[test]
    fn interval_square_over_the_arrow() {
        // apex 0, base 1: top = s, left = id0, bottom = s, right = id1
        let i = catalog::interval();
        assert!(CommutingSquare::new(2, 0, 2, 1).is_pullback(&i).unwrap());
        // apex 0 over the cospan (id1, id1) is not: the cone (id1, id1) from 1 has no mediator
        let sq = CommutingSquare::new(2, 2, 1, 1);
        let fail = sq.pullback_failure(&i).unwrap().unwrap();
        assert_eq!((fail.apex, fail.to_left, fail.to_top), (1, 1, 1));
        assert!(fail.mediators.is_empty());
    }

    #[test]
    fn two_mediators_in_the_idempotent_monoid() {
        // {e, a} with a;a = a. Square with top = left = a over identities.
        let m = catalog::monoid(&[vec![0, 1], vec![1, 1]]).unwrap();
        let sq = CommutingSquare::new(1, 1, 0, 0);
        let failures = sq.pullback_failures(&m).unwrap();
        assert_eq!(
            failures,
            vec![
                ConeFailure { apex: 0, to_left: 0, to_top: 0, mediators: vec![] },
                ConeFailure { apex: 0, to_left: 1, to_top: 1, mediators: vec![0, 1] },
            ]
        );
    }

    #[test]
    fn non_commuting_square_is_a_precondition_error() {
        let z = catalog::z2();
        let sq = CommutingSquare::new(1, 0, 0, 0);
        assert!(matches!(sq.is_pullback(&z), Err(Error::Precondition(_))));
        let i = catalog::interval();
        assert!(matches!(CommutingSquare::new(2, 2, 2, 2).is_pullback(&i), Err(Error::Malformed(_))));
    }
}
