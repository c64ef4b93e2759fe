use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::One;

use crate::error::{Error, Result};
use crate::ratfield::{q, Rational, RationalFunction, Ring};

/// Index of the first internal coordinate (`xi`, with `x = xi^2`).
pub const XI: usize = 0;
/// Index of the second internal coordinate (`eta`, with `y = eta^2`).
pub const ETA: usize = 1;

/// Derivative multi-index `(i, j)` for `d_xi^i d_eta^j`.
pub type MultiIndex = (u32, u32);

/// A linear differential operator in the two internal coordinates,
/// `sum c_ij d_xi^i d_eta^j`, with rational-function coefficients written
/// to the left of the derivatives.
#[derive(Clone)]
pub struct DiffOp {
    ring: Arc<Ring>,
    terms: BTreeMap<MultiIndex, RationalFunction>,
}

fn binomial(n: u32, k: u32) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc = acc * Rational::from_integer((n - i).into()) / Rational::from_integer((i + 1).into());
    }
    acc
}

impl DiffOp {
    pub fn zero(ring: &Arc<Ring>) -> DiffOp {
        DiffOp {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(ring: &Arc<Ring>) -> DiffOp {
        DiffOp::function(RationalFunction::one(ring))
    }

    /// Multiplication by `f`.
    pub fn function(f: RationalFunction) -> DiffOp {
        DiffOp::term((0, 0), f)
    }

    pub fn term(index: MultiIndex, c: RationalFunction) -> DiffOp {
        let ring = c.ring().clone();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(index, c);
        }
        DiffOp { ring, terms }
    }

    pub fn d_xi(ring: &Arc<Ring>) -> DiffOp {
        DiffOp::term((1, 0), RationalFunction::one(ring))
    }

    pub fn d_eta(ring: &Arc<Ring>) -> DiffOp {
        DiffOp::term((0, 1), RationalFunction::one(ring))
    }

    /// `d/dx = 1/(2 xi) d/dxi`.
    pub fn dx(ring: &Arc<Ring>) -> DiffOp {
        let c = RationalFunction::var_index(ring, XI).recip().unwrap().scale(&q(1, 2));
        DiffOp::term((1, 0), c)
    }

    /// `d/dy = 1/(2 eta) d/deta`.
    pub fn dy(ring: &Arc<Ring>) -> DiffOp {
        let c = RationalFunction::var_index(ring, ETA).recip().unwrap().scale(&q(1, 2));
        DiffOp::term((0, 1), c)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<MultiIndex, RationalFunction> {
        &self.terms
    }

    pub fn coefficient(&self, index: MultiIndex) -> RationalFunction {
        self.terms
            .get(&index)
            .cloned()
            .unwrap_or_else(|| RationalFunction::zero(&self.ring))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest total derivative order; zero for the zero operator.
    pub fn order(&self) -> u32 {
        self.terms.keys().map(|(i, j)| i + j).max().unwrap_or(0)
    }

    /// The function this operator multiplies by, if it has order zero.
    pub fn as_function(&self) -> Option<RationalFunction> {
        match self.terms.keys().next_back() {
            None => Some(RationalFunction::zero(&self.ring)),
            Some(&(0, 0)) => Some(self.coefficient((0, 0))),
            _ => None,
        }
    }

    fn from_map(ring: &Arc<Ring>, terms: BTreeMap<MultiIndex, RationalFunction>) -> DiffOp {
        DiffOp {
            ring: ring.clone(),
            terms: terms.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn try_add(&self, other: &DiffOp) -> Result<DiffOp> {
        if !Ring::compatible(&self.ring, &other.ring) {
            return Err(Error::IncompatibleRings);
        }
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            let sum = match terms.get(k) {
                Some(a) => a.try_add(c)?,
                None => c.clone(),
            };
            if sum.is_zero() {
                terms.remove(k);
            } else {
                terms.insert(*k, sum);
            }
        }
        Ok(DiffOp {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn try_sub(&self, other: &DiffOp) -> Result<DiffOp> {
        self.try_add(&-other)
    }

    pub fn scale(&self, c: &Rational) -> DiffOp {
        DiffOp::from_map(
            &self.ring,
            self.terms.iter().map(|(k, v)| (*k, v.scale(c))).collect(),
        )
    }

    /// Left multiplication by a function, `f * self`.
    pub fn mul_function(&self, f: &RationalFunction) -> DiffOp {
        DiffOp::from_map(
            &self.ring,
            self.terms.iter().map(|(k, v)| (*k, f * v)).collect(),
        )
    }

    /// Operator product `self ∘ other` by the two-variable Leibniz rule.
    pub fn compose(&self, other: &DiffOp) -> DiffOp {
        assert!(
            Ring::compatible(&self.ring, &other.ring),
            "incompatible rings"
        );
        let mut acc: BTreeMap<MultiIndex, Vec<RationalFunction>> = BTreeMap::new();
        for (&(b1, b2), g) in &other.terms {
            let mut derivs = DerivativeCache::new(g.clone());
            for (&(a1, a2), f) in &self.terms {
                for k1 in 0..=a1 {
                    for k2 in 0..=a2 {
                        let d = derivs.get(a1 - k1, a2 - k2);
                        if d.is_zero() {
                            continue;
                        }
                        let c = binomial(a1, k1) * binomial(a2, k2);
                        let mut t = f * d;
                        if !c.is_one() {
                            t = t.scale(&c);
                        }
                        acc.entry((k1 + b1, k2 + b2)).or_default().push(t);
                    }
                }
            }
        }
        let terms = acc
            .into_iter()
            .map(|(k, parts)| (k, sum_all(&self.ring, parts)))
            .collect();
        DiffOp::from_map(&self.ring, terms)
    }

    pub fn commutator(&self, other: &DiffOp) -> DiffOp {
        &self.compose(other) - &other.compose(self)
    }

    pub fn pow(&self, n: u32) -> DiffOp {
        let mut acc = DiffOp::identity(&self.ring);
        for _ in 0..n {
            acc = acc.compose(self);
        }
        acc
    }

    /// Action on a rational function.
    pub fn apply_rf(&self, f: &RationalFunction) -> RationalFunction {
        let mut derivs = DerivativeCache::new(f.clone());
        let parts = self
            .terms
            .iter()
            .map(|(&(i, j), c)| c * derivs.get(i, j))
            .collect();
        sum_all(&self.ring, parts)
    }

    /// True iff every coefficient of `self - other` vanishes identically.
    pub fn op_equal(&self, other: &DiffOp) -> bool {
        self.first_difference(other).is_none()
    }

    /// The lowest multi-index at which the operators differ, with both
    /// coefficients.
    pub fn first_difference(
        &self,
        other: &DiffOp,
    ) -> Option<(MultiIndex, RationalFunction, RationalFunction)> {
        let keys: std::collections::BTreeSet<_> =
            self.terms.keys().chain(other.terms.keys()).copied().collect();
        keys.into_iter().find_map(|k| {
            let a = self.coefficient(k);
            let b = other.coefficient(k);
            (!a.rf_equal(&b)).then_some((k, a, b))
        })
    }

    /// Applies `f` to every coefficient.
    pub fn map_coefficients<F>(&self, mut f: F) -> Result<DiffOp>
    where
        F: FnMut(&RationalFunction) -> Result<RationalFunction>,
    {
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| Ok((*k, f(c)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(DiffOp::from_map(&self.ring, terms))
    }

    /// Rewrites the operator in the basis `d_x^i d_y^j` of the original
    /// coordinates; the returned coefficients are still functions of the
    /// internal coordinates.
    pub fn xy_terms(&self) -> BTreeMap<MultiIndex, RationalFunction> {
        let mut rest = self.clone();
        let mut out = BTreeMap::new();
        let dx = DiffOp::dx(&self.ring);
        let dy = DiffOp::dy(&self.ring);
        let two_xi = RationalFunction::var_index(&self.ring, XI).scale(&q(2, 1));
        let two_eta = RationalFunction::var_index(&self.ring, ETA).scale(&q(2, 1));
        while let Some((&(i, j), c)) = rest
            .terms
            .iter()
            .max_by_key(|(&(i, j), _)| (i + j, i))
        {
            let coef = c * &(two_xi.pow(i as i32).unwrap() * two_eta.pow(j as i32).unwrap());
            let basis = dx.pow(i).compose(&dy.pow(j));
            rest = &rest - &basis.mul_function(&coef);
            out.insert((i, j), coef);
        }
        out
    }
}

/// Memoized mixed partial derivatives of one coefficient.
struct DerivativeCache {
    cache: HashMap<MultiIndex, RationalFunction>,
}

impl DerivativeCache {
    fn new(f: RationalFunction) -> Self {
        let mut cache = HashMap::new();
        cache.insert((0, 0), f);
        DerivativeCache { cache }
    }

    fn get(&mut self, i: u32, j: u32) -> &RationalFunction {
        if !self.cache.contains_key(&(i, j)) {
            let v = if j > 0 {
                self.get(i, j - 1).derivative(ETA)
            } else {
                self.get(i - 1, j).derivative(XI)
            };
            self.cache.insert((i, j), v);
        }
        &self.cache[&(i, j)]
    }
}

/// Sums by pairwise halving so that denominators grow evenly.
pub(crate) fn sum_all(ring: &Arc<Ring>, mut parts: Vec<RationalFunction>) -> RationalFunction {
    if parts.is_empty() {
        return RationalFunction::zero(ring);
    }
    while parts.len() > 1 {
        let mut next = Vec::with_capacity(parts.len().div_ceil(2));
        let mut it = parts.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(&a + &b),
                None => next.push(a),
            }
        }
        parts = next;
    }
    parts.pop().unwrap()
}

impl PartialEq for DiffOp {
    fn eq(&self, other: &Self) -> bool {
        self.op_equal(other)
    }
}

fn write_derivative(f: &mut fmt::Formatter<'_>, name: &str, e: u32) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, "{name}"),
        _ => write!(f, "{name}^{e}"),
    }
}

/// Prints in the `x`, `y` presentation, highest order first, e.g.
/// `x^2*dx^2 + 3/2*x*dx`.
impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.xy_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<_> = terms.into_iter().collect();
        ordered.sort_by_key(|&((i, j), _)| (std::cmp::Reverse(i + j), std::cmp::Reverse(i)));
        for (k, ((i, j), c)) in ordered.into_iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let cs = c.to_string();
            let plain = !cs.contains([' ', '/']) || (i == 0 && j == 0);
            if i == 0 && j == 0 {
                write!(f, "{cs}")?;
                continue;
            }
            if cs != "1" {
                if plain {
                    write!(f, "{cs}*")?;
                } else {
                    write!(f, "({cs})*")?;
                }
            }
            write_derivative(f, "dx", i)?;
            if i > 0 && j > 0 {
                write!(f, "*")?;
            }
            write_derivative(f, "dy", j)?;
        }
        Ok(())
    }
}

impl fmt::Debug for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiffOp({self})")
    }
}

impl Add<&DiffOp> for &DiffOp {
    type Output = DiffOp;
    fn add(self, rhs: &DiffOp) -> DiffOp {
        self.try_add(rhs).expect("incompatible rings")
    }
}

impl Sub<&DiffOp> for &DiffOp {
    type Output = DiffOp;
    fn sub(self, rhs: &DiffOp) -> DiffOp {
        self.try_sub(rhs).expect("incompatible rings")
    }
}

impl Mul<&DiffOp> for &DiffOp {
    type Output = DiffOp;
    fn mul(self, rhs: &DiffOp) -> DiffOp {
        self.compose(rhs)
    }
}

impl Add for DiffOp {
    type Output = DiffOp;
    fn add(self, rhs: DiffOp) -> DiffOp {
        &self + &rhs
    }
}

impl Sub for DiffOp {
    type Output = DiffOp;
    fn sub(self, rhs: DiffOp) -> DiffOp {
        &self - &rhs
    }
}

impl Mul for DiffOp {
    type Output = DiffOp;
    fn mul(self, rhs: DiffOp) -> DiffOp {
        self.compose(&rhs)
    }
}

impl Neg for &DiffOp {
    type Output = DiffOp;
    fn neg(self) -> DiffOp {
        DiffOp {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Neg for DiffOp {
    type Output = DiffOp;
    fn neg(self) -> DiffOp {
        -&self
    }
}

impl From<RationalFunction> for DiffOp {
    fn from(f: RationalFunction) -> Self {
        DiffOp::function(f)
    }
}

