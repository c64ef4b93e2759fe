use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Maximum number of indeterminates in a ring.
pub const MAX_VARS: usize = 16;

/// A power product over the ring's indeterminates.
///
/// Ordered graded-lexicographically: total degree first, then exponents
/// compared from the first indeterminate on.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u32,
    exps: [u16; MAX_VARS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        degree: 0,
        exps: [0; MAX_VARS],
    };

    pub fn var(i: usize, e: u16) -> Monomial {
        let mut m = Monomial::ONE;
        m.exps[i] = e;
        m.degree = e as u32;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Monomial {
        let mut m = Monomial::ONE;
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = e;
            m.degree += e as u32;
        }
        m
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn exponents(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        let mut out = Monomial::ONE;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i]
                .checked_add(other.exps[i])
                .ok_or(Error::ExponentOverflow)?;
        }
        out.degree = self.degree + other.degree;
        Ok(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Monomial::ONE;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].checked_sub(other.exps[i])?;
        }
        out.degree = self.degree - other.degree;
        Some(out)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = Monomial::ONE;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].min(other.exps[i]);
            out.degree += out.exps[i] as u32;
        }
        out
    }

    pub(crate) fn with_exp(&self, i: usize, e: u16) -> Monomial {
        let mut out = *self;
        out.degree = out.degree - out.exps[i] as u32 + e as u32;
        out.exps[i] = e;
        out
    }

    /// True if only the listed indeterminates appear.
    pub fn supported_on(&self, vars: &[usize]) -> bool {
        self.exps
            .iter()
            .enumerate()
            .all(|(i, &e)| e == 0 || vars.contains(&i))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let last = self.exps.iter().rposition(|&e| e != 0).map_or(0, |p| p + 1);
        write!(f, "M{:?}", &self.exps[..last])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let x = Monomial::var(0, 1);
        let y2 = Monomial::var(1, 2);
        let xy = x.mul(&Monomial::var(1, 1)).unwrap();
        assert!(y2 > x);
        assert!(xy > y2);
        assert!(Monomial::var(0, 2) > xy);
        assert!(Monomial::ONE < x);
    }

    #[test]
    fn division_and_gcd() {
        let a = Monomial::from_exponents(&[2, 1, 3]);
        let b = Monomial::from_exponents(&[1, 1]);
        assert_eq!(a.div(&b), Some(Monomial::from_exponents(&[1, 0, 3])));
        assert_eq!(b.div(&a), None);
        assert_eq!(a.gcd(&b), b);
    }

    #[test]
    fn overflow_is_reported() {
        let a = Monomial::var(0, u16::MAX);
        assert_eq!(a.mul(&Monomial::var(0, 1)), Err(Error::ExponentOverflow));
    }
}
