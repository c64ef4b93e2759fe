use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::modp;
use super::monomial::Monomial;
use super::poly::Polynomial;
use super::ring::Ring;
use super::Rational;
use crate::error::{Error, Result};

/// An exact quotient of polynomials.
///
/// The denominator is kept as a product of primitive, non-constant factors
/// with positive leading coefficient; the overall constant lives in the
/// numerator. After every operation, numerator factors that match a
/// denominator factor by exact division are cancelled. This is not a full
/// GCD reduction, so equality is decided by cross-multiplication.
#[derive(Clone)]
pub struct RationalFunction {
    num: Polynomial,
    den: Vec<(Polynomial, u32)>,
}

type Factors = Vec<(Polynomial, u32)>;

impl RationalFunction {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial::zero(ring).into()
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Polynomial::one(ring).into()
    }

    pub fn constant(ring: &Arc<Ring>, c: Rational) -> Self {
        Polynomial::constant(ring, c).into()
    }

    pub fn from_int(ring: &Arc<Ring>, c: i64) -> Self {
        Polynomial::from_int(ring, c).into()
    }

    pub fn from_ratio(ring: &Arc<Ring>, n: i64, d: i64) -> Self {
        Self::constant(ring, Rational::new(n.into(), d.into()))
    }

    pub fn var(ring: &Arc<Ring>, name: &str) -> Result<Self> {
        Ok(Polynomial::var(ring, name)?.into())
    }

    pub fn var_index(ring: &Arc<Ring>, i: usize) -> Self {
        Polynomial::var_index(ring, i).into()
    }

    /// `n / d` with the denominator factored as far as cheaply possible.
    pub fn from_polys(n: Polynomial, d: &Polynomial) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        RationalFunction::from(n).checked_div(&d.clone().into())
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.num.ring()
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator_factors(&self) -> &[(Polynomial, u32)] {
        &self.den
    }

    /// The expanded denominator.
    pub fn denominator(&self) -> Polynomial {
        let mut d = Polynomial::one(self.ring());
        for (f, e) in &self.den {
            d = &d * &f.pow(*e);
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_empty() && self.num.is_one()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.den.is_empty() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        self.den.is_empty().then_some(&self.num)
    }

    /// True if neither numerator nor denominator involves the listed
    /// indeterminates.
    pub fn is_free_of(&self, vars: &[usize]) -> bool {
        vars.iter().all(|&v| {
            !self.num.depends_on(v) && self.den.iter().all(|(f, _)| !f.depends_on(v))
        })
    }

    fn check(&self, other: &Self) -> Result<()> {
        if Ring::compatible(self.ring(), other.ring()) {
            Ok(())
        } else {
            Err(Error::IncompatibleRings)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.den == other.den {
            let num = self.num.try_add(&other.num)?;
            return Ok(reduce(num, self.den.clone()));
        }
        let (lcm, fa, fb) = lcm_cofactors(self.ring(), &self.den, &other.den);
        let num = (&self.num * &fa).try_add(&(&other.num * &fb))?;
        Ok(reduce(num, lcm))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ring()));
        }
        let (na, db) = cancel(self.num.clone(), other.den.clone());
        let (nb, da) = cancel(other.num.clone(), self.den.clone());
        let mut den = da;
        for (f, e) in db {
            insert_factor(&mut den, f, e);
        }
        Ok(RationalFunction {
            num: na.try_mul(&nb)?,
            den,
        })
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let (c, factors) = factor_polynomial(&self.num, &self.den);
        let mut num = Polynomial::constant(self.ring(), c.recip());
        for (f, e) in &self.den {
            num = &num * &f.pow(*e);
        }
        Ok(RationalFunction { num, den: factors })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if other.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        self.try_mul(&other.recip()?)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.ring());
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let mut acc = Self::one(self.ring());
        for _ in 0..e.unsigned_abs() {
            acc = acc.try_mul(&base)?;
        }
        Ok(acc)
    }

    /// Partial derivative with respect to indeterminate `var`.
    pub fn derivative(&self, var: usize) -> Self {
        let moving: Vec<usize> = (0..self.den.len())
            .filter(|&i| self.den[i].0.depends_on(var))
            .collect();
        if moving.is_empty() {
            return RationalFunction {
                num: self.num.derivative(var),
                den: self.den.clone(),
            };
        }
        // d(n/D) = (n' P - n sum_i e_i f_i' P/f_i) / (D P), P = prod of moving f_i
        let ring = self.ring().clone();
        let mut p_all = Polynomial::one(&ring);
        for &i in &moving {
            p_all = &p_all * &self.den[i].0;
        }
        let mut num = &self.num.derivative(var) * &p_all;
        for &i in &moving {
            let (f, e) = &self.den[i];
            let mut rest = Polynomial::constant(&ring, Rational::from_integer((*e).into()));
            rest = &rest * &f.derivative(var);
            for &j in &moving {
                if j != i {
                    rest = &rest * &self.den[j].0;
                }
            }
            num = &num - &(&self.num * &rest);
        }
        let mut den = self.den.clone();
        for &i in &moving {
            den[i].1 += 1;
        }
        reduce(num, den)
    }

    /// Exact value at a full assignment of the ring's indeterminates.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        let mut d = Rational::one();
        for (f, e) in &self.den {
            let v = f.evaluate(point);
            if v.is_zero() {
                return Err(Error::Pole);
            }
            d *= num_traits::pow(v, *e as usize);
        }
        Ok(self.num.evaluate(point) / d)
    }

    /// Evaluates with named values; every indeterminate that occurs must be
    /// assigned.
    pub fn evaluate_named(&self, values: &[(&str, Rational)]) -> Result<Rational> {
        let ring = self.ring();
        let mut point = vec![None; ring.len()];
        for (name, v) in values {
            point[ring.require(name)?] = Some(v.clone());
        }
        for i in 0..ring.len() {
            if point[i].is_none() && self.depends_on(i) {
                return Err(Error::Unassigned(ring.name(i).to_string()));
            }
        }
        let point: Vec<Rational> = point.into_iter().map(|p| p.unwrap_or_default()).collect();
        self.evaluate(&point)
    }

    pub fn depends_on(&self, var: usize) -> bool {
        self.num.depends_on(var) || self.den.iter().any(|(f, _)| f.depends_on(var))
    }

    /// Replaces some indeterminates by fixed rationals.
    pub fn specialize(&self, values: &[(usize, Rational)]) -> Result<Self> {
        let num: Self = self.num.specialize(values).into();
        let mut out = num;
        for (f, e) in &self.den {
            let fv: Self = f.specialize(values).into();
            if fv.is_zero() {
                return Err(Error::Pole);
            }
            out = out.checked_div(&fv.pow(*e as i32)?)?;
        }
        Ok(out)
    }

    /// Replaces indeterminates by rational functions.
    pub fn substitute(&self, images: &[(usize, RationalFunction)]) -> Result<Self> {
        let mut out = substitute_poly(&self.num, images)?;
        for (f, e) in &self.den {
            let fv = substitute_poly(f, images)?;
            if fv.is_zero() {
                return Err(Error::Pole);
            }
            out = out.checked_div(&fv.pow(*e as i32)?)?;
        }
        Ok(out)
    }

    /// Cross-multiplication equality test.
    pub fn rf_equal(&self, other: &Self) -> bool {
        if !Ring::compatible(self.ring(), other.ring()) {
            return false;
        }
        if self.den == other.den {
            return self.num == other.num;
        }
        let (_, fa, fb) = lcm_cofactors(self.ring(), &self.den, &other.den);
        &self.num * &fa == &other.num * &fb
    }

    /// Re-runs factor cancellation; never changes the `rf_equal` class.
    pub fn normalize(&self) -> Self {
        reduce(self.num.clone(), self.den.clone())
    }

    /// Splits into Laurent coefficients with respect to `vars`.
    ///
    /// Denominator factors in `vars` must be single indeterminates; every
    /// other denominator factor must be free of `vars`.
    pub fn laurent_split(&self, vars: &[usize]) -> Result<Vec<(Vec<i32>, RationalFunction)>> {
        let mut shift = vec![0i32; vars.len()];
        let mut rest: Factors = Vec::new();
        for (f, e) in &self.den {
            let mono_var = match f.terms() {
                [(m, c)] if m.degree() == 1 && c.is_one() => {
                    vars.iter().position(|&v| m.exp(v) == 1)
                }
                _ => None,
            };
            match mono_var {
                Some(k) => shift[k] -= *e as i32,
                None => {
                    if vars.iter().any(|&v| f.depends_on(v)) {
                        return Err(Error::InvalidArgument(format!(
                            "denominator factor {f} depends on a split variable"
                        )));
                    }
                    rest.push((f.clone(), *e));
                }
            }
        }
        Ok(self
            .num
            .split_by(vars)
            .into_iter()
            .map(|(k, p)| {
                let key = k.iter().zip(&shift).map(|(&a, &s)| a as i32 + s).collect();
                (key, reduce(p, rest.clone()))
            })
            .collect())
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(num: Polynomial) -> Self {
        RationalFunction {
            num,
            den: Vec::new(),
        }
    }
}

fn insert_factor(den: &mut Factors, f: Polynomial, e: u32) {
    if e == 0 {
        return;
    }
    match den.binary_search_by(|(g, _)| g.cmp(&f)) {
        Ok(i) => den[i].1 += e,
        Err(i) => den.insert(i, (f, e)),
    }
}

/// Least common multiple of two factor lists and the cofactors `lcm / a`,
/// `lcm / b`.
fn lcm_cofactors(
    ring: &Arc<Ring>,
    a: &Factors,
    b: &Factors,
) -> (Factors, Polynomial, Polynomial) {
    let mut lcm = a.clone();
    for (f, e) in b {
        match lcm.binary_search_by(|(g, _)| g.cmp(f)) {
            Ok(i) => lcm[i].1 = lcm[i].1.max(*e),
            Err(i) => lcm.insert(i, (f.clone(), *e)),
        }
    }
    let cofactor = |src: &Factors| {
        let mut c = Polynomial::one(ring);
        for (f, e) in &lcm {
            let have = src
                .binary_search_by(|(g, _)| g.cmp(f))
                .map(|i| src[i].1)
                .unwrap_or(0);
            if *e > have {
                c = &c * &f.pow(e - have);
            }
        }
        c
    };
    let fa = cofactor(a);
    let fb = cofactor(b);
    (lcm, fa, fb)
}

fn single_var(f: &Polynomial) -> Option<usize> {
    match f.terms() {
        [(m, c)] if m.degree() == 1 && c.is_one() => m.exponents().iter().position(|&e| e == 1),
        _ => None,
    }
}

/// Cancels denominator factors that divide the numerator.
fn cancel(mut num: Polynomial, mut den: Factors) -> (Polynomial, Factors) {
    if num.is_zero() {
        return (num, Vec::new());
    }
    for (f, e) in den.iter_mut() {
        if let Some(v) = single_var(f) {
            let k = (num.monomial_content().exp(v) as u32).min(*e);
            if k > 0 {
                num = num.div_monomial(&Monomial::var(v, k as u16)).unwrap();
                *e -= k;
            }
            continue;
        }
        while *e > 0 && modp::may_divide(&num, f) {
            match num.div_exact(f) {
                Some(q) => {
                    num = q;
                    *e -= 1;
                }
                None => break,
            }
        }
    }
    den.retain(|(_, e)| *e > 0);
    (num, den)
}

fn reduce(num: Polynomial, den: Factors) -> RationalFunction {
    let (num, den) = cancel(num, den);
    RationalFunction { num, den }
}

/// Splits `p` into a rational constant and primitive factors, using the
/// `known` factors for trial division.
fn factor_polynomial(p: &Polynomial, known: &Factors) -> (Rational, Factors) {
    let ring = p.ring().clone();
    let mut factors = Vec::new();
    let mono = p.monomial_content();
    let mut rest = p.div_monomial(&mono).unwrap();
    for v in 0..ring.len() {
        let e = mono.exp(v);
        if e > 0 {
            insert_factor(&mut factors, Polynomial::var_index(&ring, v), e as u32);
        }
    }
    let c = rest.content();
    rest = rest.scale(&c.recip());
    if rest.as_constant().is_none() {
        for (f, _) in known {
            if single_var(f).is_some() {
                continue;
            }
            while rest.total_degree() >= f.total_degree() && modp::may_divide(&rest, f) {
                match rest.div_exact(f) {
                    Some(q) => {
                        // both primitive with positive leading coefficient,
                        // so the quotient is too
                        rest = q;
                        insert_factor(&mut factors, f.clone(), 1);
                    }
                    None => break,
                }
            }
            if rest.as_constant().is_some() {
                break;
            }
        }
    }
    match rest.as_constant() {
        Some(k) => (c * k, factors),
        None => {
            insert_factor(&mut factors, rest, 1);
            (c, factors)
        }
    }
}

/// Evaluates a polynomial at rational-function images of some indeterminates.
fn substitute_poly(p: &Polynomial, images: &[(usize, RationalFunction)]) -> Result<RationalFunction> {
    let ring = p.ring().clone();
    if images.is_empty() {
        return Ok(p.clone().into());
    }
    // Clear image denominators: p(n/d) = sum c m' prod n^e d^(D-e) / prod d^D.
    let degs: Vec<u16> = images.iter().map(|(v, _)| p.degree_in(*v)).collect();
    let nums: Vec<Polynomial> = images.iter().map(|(_, r)| r.num.clone()).collect();
    let dens: Vec<Polynomial> = images.iter().map(|(_, r)| r.denominator()).collect();
    let mut pow_cache: Vec<Vec<Polynomial>> = Vec::new();
    let mut den_cache: Vec<Vec<Polynomial>> = Vec::new();
    for k in 0..images.len() {
        let mut pn = vec![Polynomial::one(&ring)];
        let mut pd = vec![Polynomial::one(&ring)];
        for e in 1..=degs[k] as usize {
            pn.push(&pn[e - 1] * &nums[k]);
            pd.push(&pd[e - 1] * &dens[k]);
        }
        pow_cache.push(pn);
        den_cache.push(pd);
    }
    let mut groups: std::collections::BTreeMap<Vec<u16>, Vec<(Monomial, Rational)>> =
        Default::default();
    for (m, c) in p.terms() {
        let key: Vec<u16> = images.iter().map(|(v, _)| m.exp(*v)).collect();
        let mut rest = *m;
        for (v, _) in images {
            rest = rest.with_exp(*v, 0);
        }
        groups.entry(key).or_default().push((rest, c.clone()));
    }
    let mut num = Polynomial::zero(&ring);
    for (key, terms) in groups {
        let mut t = Polynomial::from_terms(&ring, terms);
        for (k, &e) in key.iter().enumerate() {
            t = &t * &pow_cache[k][e as usize];
            t = &t * &den_cache[k][(degs[k] - e) as usize];
        }
        num = &num + &t;
    }
    let mut out: RationalFunction = num.into();
    for (k, (_, img)) in images.iter().enumerate() {
        if degs[k] == 0 {
            continue;
        }
        let mut den: Factors = Vec::new();
        for (f, e) in &img.den {
            insert_factor(&mut den, f.clone(), e * degs[k] as u32);
        }
        out = out.try_mul(&RationalFunction {
            num: Polynomial::one(&ring),
            den,
        })?;
    }
    Ok(out)
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        self.rf_equal(other)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        let simple_num = self.num.len() == 1
            && !self.num.terms()[0].1.is_negative()
            && self.num.terms()[0].1.is_integer();
        if simple_num {
            write!(f, "{}", self.num)?;
        } else {
            write!(f, "({})", self.num)?;
        }
        write!(f, "/")?;
        let factors: Vec<String> = self
            .den
            .iter()
            .map(|(p, e)| {
                let monic_monomial = p.len() == 1 && p.terms()[0].1.is_one();
                if monic_monomial {
                    // coordinate powers fold into x, y and their roots
                    return p.pow(*e).to_string();
                }
                let atomic = p.len() == 1 && !p.to_string().contains('*');
                match (atomic, *e) {
                    (true, 1) => p.to_string(),
                    (true, e) => format!("{p}^{e}"),
                    (false, 1) => format!("({p})"),
                    (false, e) => format!("({p})^{e}"),
                }
            })
            .collect();
        let joined = factors.join("*");
        if factors.len() == 1 && !joined.contains('*') {
            write!(f, "{joined}")
        } else {
            write!(f, "({joined})")
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                self.$try(rhs).expect("rational function arithmetic")
            }
        }
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$try(&rhs).expect("rational function arithmetic")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}
