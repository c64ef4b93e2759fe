//! Cheap modular screening for exact polynomial division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::poly::Polynomial;
use super::Rational;

const P: u64 = 2_147_483_647;

fn reduce(c: &BigInt) -> u64 {
    let r = c.mod_floor(&BigInt::from(P));
    r.to_u64().unwrap()
}

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    b %= P;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64) -> Option<u64> {
    if a == 0 {
        None
    } else {
        Some(pow_mod(a, P - 2))
    }
}

fn rational_mod(c: &Rational) -> Option<u64> {
    let d = reduce(c.denom());
    Some(reduce(c.numer()) * inv_mod(d)? % P)
}

/// Specializes every indeterminate except `keep` to fixed residues and
/// returns the dense univariate image, lowest degree first.
fn univariate_image(p: &Polynomial, keep: usize, values: &[u64]) -> Option<Vec<u64>> {
    let deg = p.degree_in(keep) as usize;
    let mut out = vec![0u64; deg + 1];
    for (m, c) in p.terms() {
        let mut t = rational_mod(c)?;
        for (i, &e) in m.exponents().iter().enumerate() {
            if i != keep && e > 0 {
                t = t * pow_mod(values[i], e as u64) % P;
            }
        }
        let k = m.exp(keep) as usize;
        out[k] = (out[k] + t) % P;
    }
    Some(out)
}

/// Returns `false` only when `divisor` certainly does not divide `p`.
pub(crate) fn may_divide(p: &Polynomial, divisor: &Polynomial) -> bool {
    let n = p.ring().len();
    let keep = match (0..n).max_by_key(|&v| divisor.degree_in(v)) {
        Some(v) if divisor.degree_in(v) > 0 => v,
        _ => return true,
    };
    let values: Vec<u64> = (0..n as u64).map(|i| 1_000_003 + 7919 * i * i + 31 * i).collect();
    let (Some(mut a), Some(b)) = (
        univariate_image(p, keep, &values),
        univariate_image(divisor, keep, &values),
    ) else {
        return true;
    };
    let db = b.len() - 1;
    let Some(lead_inv) = inv_mod(b[db]) else {
        return true;
    };
    while a.len() > db && !a.is_empty() {
        let top = *a.last().unwrap();
        let shift = a.len() - 1 - db;
        if top != 0 {
            let q = top * lead_inv % P;
            for (k, &bk) in b.iter().enumerate() {
                let idx = shift + k;
                a[idx] = (a[idx] + P - q * bk % P) % P;
            }
        }
        a.pop();
    }
    a.iter().all(|c| c.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfield::Ring;

    #[test]
    fn screening_rejects_non_divisors() {
        let r = Ring::standard();
        let x = Polynomial::var(&r, "xi").unwrap();
        let b = Polynomial::var(&r, "beta").unwrap();
        let one = Polynomial::from_int(&r, 1);
        let f = &(&x + &b) * &(&x - &one);
        assert!(may_divide(&f, &(&x + &b)));
        assert!(!may_divide(&f, &(&x + &one)));
    }
}
