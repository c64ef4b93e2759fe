use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::ring::Ring;
use super::Rational;
use crate::error::{Error, Result};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept sorted ascending in graded-lex order with no zero
/// coefficients, so the leading term is the last one.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<Ring>) -> Polynomial {
        Polynomial::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Arc<Ring>, c: Rational) -> Polynomial {
        Polynomial::term(ring, Monomial::ONE, c)
    }

    pub fn from_int(ring: &Arc<Ring>, c: i64) -> Polynomial {
        Polynomial::constant(ring, Rational::from_integer(c.into()))
    }

    pub fn term(ring: &Arc<Ring>, m: Monomial, c: Rational) -> Polynomial {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// The indeterminate `name` as a polynomial.
    pub fn var(ring: &Arc<Ring>, name: &str) -> Result<Polynomial> {
        let i = ring.require(name)?;
        Ok(Polynomial::var_index(ring, i))
    }

    pub fn var_index(ring: &Arc<Ring>, i: usize) -> Polynomial {
        Polynomial::term(ring, Monomial::var(i, 1), Rational::one())
    }

    /// Builds a polynomial from unsorted terms, combining duplicates.
    pub fn from_terms(ring: &Arc<Ring>, mut terms: Vec<(Monomial, Rational)>) -> Polynomial {
        terms.sort_unstable_by_key(|a| a.0);
        let mut out: Vec<(Monomial, Rational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if lc.is_zero() {
                out.pop();
            }
        }
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The constant value, if the polynomial has no indeterminates.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, Rational)> {
        self.terms.last()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.last().map_or(0, |(m, _)| m.degree())
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m.exp(var)).max().unwrap_or(0)
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .binary_search_by(|(tm, _)| tm.cmp(m))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    /// True if the polynomial involves only the listed indeterminates.
    pub fn supported_on(&self, vars: &[usize]) -> bool {
        self.terms.iter().all(|(m, _)| m.supported_on(vars))
    }

    pub fn depends_on(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(var) > 0)
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if Ring::compatible(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::IncompatibleRings)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        if let Some(c) = self.as_constant() {
            return Ok(other.scale(&c));
        }
        if let Some(c) = other.as_constant() {
            return Ok(self.scale(&c));
        }
        let mut prod = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                prod.push((ma.mul(mb)?, ca * cb));
            }
        }
        Ok(Polynomial::from_terms(&self.ring, prod))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Result<Polynomial> {
        let terms = self
            .terms
            .iter()
            .map(|(tm, c)| Ok((tm.mul(m)?, c.clone())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// Divides every term by `m`; `m` must divide each term.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Polynomial> {
        let terms = self
            .terms
            .iter()
            .map(|(tm, c)| Some((tm.div(m)?, c.clone())))
            .collect::<Option<Vec<_>>>()?;
        Some(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(var) > 0)
            .map(|(m, c)| {
                let e = m.exp(var);
                (m.with_exp(var, e - 1), c * Rational::from_integer(e.into()))
            })
            .collect();
        // Lowering one exponent uniformly keeps graded-lex order.
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// Greatest common monomial divisor of all terms.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::ONE,
            Some((m, _)) => it.fold(*m, |g, (tm, _)| g.gcd(tm)),
        }
    }

    /// Rational `c` such that `self / c` has coprime integer coefficients
    /// and a positive leading coefficient.
    pub fn content(&self) -> Rational {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        if num_gcd.is_zero() {
            return Rational::one();
        }
        let mut c = Rational::new(num_gcd, den_lcm);
        if self.terms.last().is_some_and(|(_, lc)| lc.is_negative()) {
            c = -c;
        }
        c
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Polynomial::zero(&self.ring));
        }
        if let Some(c) = divisor.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        if divisor.terms.len() == 1 {
            let (dm, dc) = &divisor.terms[0];
            return Some(self.div_monomial(dm)?.scale(&dc.recip()));
        }
        for v in 0..self.ring.len() {
            if divisor.degree_in(v) > self.degree_in(v) {
                return None;
            }
        }
        let (dm, dc) = divisor.leading().unwrap();
        let dc_inv = dc.recip();
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm.div(dm)?;
            let qc = rc * &dc_inv;
            let step = divisor.mul_monomial(&qm).ok()?.scale(&qc);
            quotient.push((qm, qc));
            rem = rem.merge(&step, true);
        }
        Some(Polynomial::from_terms(&self.ring, quotient))
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t *= num_traits::pow(point[i].clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes fixed values for some indeterminates.
    pub fn specialize(&self, values: &[(usize, Rational)]) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut m = *m;
                let mut c = c.clone();
                for (v, val) in values {
                    let e = m.exp(*v);
                    if e > 0 {
                        c *= num_traits::pow(val.clone(), e as usize);
                        m = m.with_exp(*v, 0);
                    }
                }
                (m, c)
            })
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Groups terms by their exponents in `vars`; the map values are the
    /// cofactor polynomials in the remaining indeterminates.
    pub fn split_by(&self, vars: &[usize]) -> Vec<(Vec<u16>, Polynomial)> {
        let mut groups: std::collections::BTreeMap<Vec<u16>, Vec<(Monomial, Rational)>> =
            Default::default();
        for (m, c) in &self.terms {
            let key: Vec<u16> = vars.iter().map(|&v| m.exp(v)).collect();
            let mut rest = *m;
            for &v in vars {
                rest = rest.with_exp(v, 0);
            }
            groups.entry(key).or_default().push((rest, c.clone()));
        }
        groups
            .into_iter()
            .map(|(k, t)| (k, Polynomial::from_terms(&self.ring, t)))
            .collect()
    }

    pub(crate) fn write_with(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mono = format_monomial(&self.ring, m);
            match (abs.is_one(), mono.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{mono}")?,
                (false, true) => write_rational(f, &abs)?,
                (false, false) => {
                    write_rational(f, &abs)?;
                    write!(f, "*{mono}")?
                }
            }
        }
        Ok(())
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, c: &Rational) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

/// Renders a monomial; half-power coordinates print as `x^k*sqrt(x*y)`.
pub(crate) fn format_monomial(ring: &Ring, m: &Monomial) -> String {
    let mut parts = Vec::new();
    let mut roots = Vec::new();
    for i in 0..ring.len() {
        let e = m.exp(i);
        if e == 0 {
            continue;
        }
        match ring.half_power_name(i) {
            Some(name) => {
                let whole = e / 2;
                if whole == 1 {
                    parts.push(name.to_string());
                } else if whole > 1 {
                    parts.push(format!("{name}^{whole}"));
                }
                if e % 2 == 1 {
                    roots.push(name.to_string());
                }
            }
            None => {
                let name = ring.display_name(i);
                if e == 1 {
                    parts.push(name.to_string());
                } else {
                    parts.push(format!("{name}^{e}"));
                }
            }
        }
    }
    if !roots.is_empty() {
        parts.push(format!("sqrt({})", roots.join("*")));
    }
    parts.join("*")
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        Ring::compatible(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Polynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let a = self.terms.iter().rev();
        let b = other.terms.iter().rev();
        for (x, y) in a.zip(b) {
            let o = x.0.cmp(&y.0).then_with(|| x.1.cmp(&y.1));
            if o != Ordering::Equal {
                return o;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$try(rhs).expect("incompatible rings")
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$try(&rhs).expect("incompatible rings")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Arc<Ring> {
        Ring::standard()
    }

    fn v(name: &str) -> Polynomial {
        Polynomial::var(&ring(), name).unwrap()
    }

    fn int(c: i64) -> Polynomial {
        Polynomial::from_int(&ring(), c)
    }

    #[test]
    fn cancellation_in_sum() {
        let x = v("xi");
        let s = &(&x + &int(1)) + &(&x - &int(1));
        assert_eq!(s, x.scale(&Rational::from_integer(2.into())));
    }

    #[test]
    fn distributivity_example() {
        let b = v("beta");
        let p = &(&b + &int(2)) * &(&b + &int(1));
        assert_eq!(p, &(&b.pow(2) + &b.scale(&Rational::from_integer(3.into()))) + &int(2));
    }

    #[test]
    fn product_of_lattice_denominators() {
        let r = ring();
        let b = v("beta");
        let b2 = &b + &int(2);
        let p = &b2 * &(&b2 * &(&b + &int(1)));
        let mut point = vec![Rational::zero(); r.len()];
        point[r.index("beta").unwrap()] = Rational::one();
        // (1+2)^2 (1+1) = 18
        assert_eq!(p.evaluate(&point), Rational::from_integer(18.into()));
        assert_eq!(p.total_degree(), 3);
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let other = Arc::new(Ring::new(&["a", "b"]).unwrap());
        let a = Polynomial::var(&other, "a").unwrap();
        assert_eq!(a.try_add(&v("xi")), Err(Error::IncompatibleRings));
        assert_eq!(a.try_mul(&v("xi")), Err(Error::IncompatibleRings));
    }

    #[test]
    fn exact_division() {
        let x = v("xi");
        let y = v("eta");
        let f = &(&x + &y) * &(&x - &y.scale(&Rational::from_integer(3.into())));
        let q = f.div_exact(&(&x + &y)).unwrap();
        assert_eq!(q, &x - &y.scale(&Rational::from_integer(3.into())));
        assert!(f.div_exact(&(&x + &int(1))).is_none());
    }

    #[test]
    fn content_is_positive_leading() {
        let x = v("xi");
        let p = &x.scale(&Rational::new((-4).into(), 3.into())) + &int(2);
        let c = p.content();
        assert_eq!(c, Rational::new((-2).into(), 3.into()));
        let prim = p.scale(&c.recip());
        assert_eq!(prim, &x.scale(&Rational::from_integer(2.into())) - &int(3));
    }

    #[test]
    fn display_uses_half_powers() {
        let x = v("xi");
        let y = v("eta");
        let p = &(&x.pow(3) * &y) + &x.pow(2);
        assert_eq!(p.to_string(), "x*sqrt(x*y) + x");
    }
}
