use std::collections::HashMap;
use std::sync::{Arc, LazyLock, Mutex};

use crate::diffop::{QuasiFunction, ETA, XI};
use crate::error::{Error, Result};
use crate::ratfield::{q, RationalFunction, Ring};
use crate::systems::{system, Params, SystemName};

/// One row `P_{n,0}, ..., P_{0,n}` of the triangular lattice of monic
/// polynomial eigenfunctions of the gauged `A` system.
#[derive(Clone, Debug)]
pub struct PolyLattice {
    pub n: usize,
    pub entries: Vec<QuasiFunction>,
    /// `lambda_n = n(n + beta - 1)`.
    pub eigenvalue: RationalFunction,
}

impl PolyLattice {
    /// `P_{n-k,k}`.
    pub fn entry(&self, k: usize) -> &QuasiFunction {
        &self.entries[k]
    }
}

fn int(ring: &Arc<Ring>, n: i64) -> RationalFunction {
    RationalFunction::from_int(ring, n)
}

/// `n(n + beta - 1)`.
pub fn lambda_n(n: usize, p: &Params) -> RationalFunction {
    let ring = p.ring();
    let n = n as i64;
    &(&p.get("beta") + &int(ring, n - 1)) * &int(ring, n)
}

/// `beta + c`.
fn beta_plus(p: &Params, c: i64) -> RationalFunction {
    &p.get("beta") + &int(p.ring(), c)
}

fn over(num: RationalFunction, factors: &[RationalFunction]) -> Result<RationalFunction> {
    factors.iter().try_fold(num, |acc, f| acc.checked_div(f))
}

/// `A_n = alpha(beta - 2)/((beta + 2n)(beta + 2n - 2))` and
/// `B_n = alpha^2 n (n + beta - 2)/((beta + 2n - 1)(beta + 2n - 2)^2 (beta + 2n - 3))`.
pub fn rx_coefficients(n: usize, p: &Params) -> Result<(RationalFunction, RationalFunction)> {
    let ring = p.ring();
    let a = p.get("alpha");
    let m = 2 * n as i64;
    let an = over(&a * &beta_plus(p, -2), &[beta_plus(p, m), beta_plus(p, m - 2)])?;
    let bn_num = &(&(&a * &a) * &int(ring, n as i64)) * &beta_plus(p, n as i64 - 2);
    let bn = over(
        bn_num,
        &[beta_plus(p, m - 1), beta_plus(p, m - 2), beta_plus(p, m - 2), beta_plus(p, m - 3)],
    )?;
    Ok((an, bn))
}

/// The coefficients of the `r_y` recursion for `P_{0,n}`.
pub fn ry_coefficients(n: usize, p: &Params) -> Result<(RationalFunction, RationalFunction)> {
    let ring = p.ring();
    let g = p.get("gamma");
    let n = n as i64;
    let m = 2 * n;
    let gn = |s: i64| &g - &int(ring, n - s);
    let an = &over(&int(ring, n + 1) * &gn(0), &[beta_plus(p, m)])?
        - &over(&int(ring, n) * &gn(1), &[beta_plus(p, m - 2)])?;
    let inner = &(&over(&int(ring, n + 1) * &gn(0), &[beta_plus(p, m - 1)])?
        - &over(&int(ring, 2 * n) * &gn(1), &[beta_plus(p, m - 2)])?)
        + &over(&int(ring, n - 1) * &gn(2), &[beta_plus(p, m - 3)])?;
    let pre = over((&int(ring, n) * &gn(1)).scale(&q(-1, 2)), &[beta_plus(p, m - 2)])?;
    Ok((an, &pre * &inner))
}

fn x_of(ring: &Arc<Ring>) -> RationalFunction {
    crate::diffop::x(ring)
}

fn y_of(ring: &Arc<Ring>) -> RationalFunction {
    crate::diffop::y(ring)
}

/// The three-term recursion `next = (t + a) cur + b prev`.
fn three_term(t: &RationalFunction, a: &RationalFunction, b: &RationalFunction, cur: &RationalFunction, prev: &RationalFunction) -> RationalFunction {
    &(&(t + a) * cur) + &(b * prev)
}

/// `P_{0,0}, ..., P_{n,0}` from `r_x`, symbolic in the parameters of `p`.
fn rx_sequence(n: usize, p: &Params) -> Result<Vec<RationalFunction>> {
    let ring = p.ring();
    let x = x_of(ring);
    let mut seq = vec![RationalFunction::one(ring)];
    let mut prev = RationalFunction::zero(ring);
    for k in 0..n {
        let (a, b) = rx_coefficients(k, p)?;
        let next = three_term(&x, &a, &b, &seq[k], &prev);
        prev = seq[k].clone();
        seq.push(next);
    }
    Ok(seq)
}

/// `P_{0,0}, ..., P_{0,n}` from `r_y`.
pub fn ry_sequence(n: usize, p: &Params) -> Result<Vec<QuasiFunction>> {
    let ring = p.ring();
    let y = y_of(ring);
    let mut seq = vec![RationalFunction::one(ring)];
    let mut prev = RationalFunction::zero(ring);
    for k in 0..n {
        let (a, b) = ry_coefficients(k, p)?;
        let next = three_term(&y, &a, &b, &seq[k], &prev);
        prev = seq[k].clone();
        seq.push(next);
    }
    Ok(seq.into_iter().map(QuasiFunction::rational).collect())
}

/// Replacement of `alpha`, `beta`, `gamma` by the values in `p` that are not
/// the plain indeterminates.
fn abg_images(p: &Params) -> Vec<(usize, RationalFunction)> {
    let ring = p.ring();
    ["alpha", "beta", "gamma"]
        .into_iter()
        .filter_map(|name| {
            let i = ring.index(name)?;
            let v = p.get(name);
            (v != RationalFunction::var_index(ring, i)).then_some((i, v))
        })
        .collect()
}

/// Specializes a symbolic result, naming the denominator factor that
/// vanishes if there is one.
fn specialize(f: &QuasiFunction, images: &[(usize, RationalFunction)]) -> Result<QuasiFunction> {
    if images.is_empty() {
        return Ok(f.clone());
    }
    match f.body().substitute(images) {
        Ok(b) => Ok(QuasiFunction::rational(b)),
        Err(Error::Pole) => {
            let factor = f
                .body()
                .denominator_factors()
                .iter()
                .find(|(g, _)| RationalFunction::from(g.clone()).substitute(images).is_ok_and(|v| v.is_zero()))
                .map(|(g, _)| g.to_string())
                .unwrap_or_else(|| "?".into());
            Err(Error::VanishingDenominator { factor })
        }
        Err(e) => Err(e),
    }
}

/// `P_{n,0}`, the monic degree-`n` eigenfunction of
/// `L_x = x^2 dx^2 + (beta x + alpha) dx`, built by `r_x`.
pub fn build_pn0(n: usize, params: &Params) -> Result<QuasiFunction> {
    let sym = Params::symbolic(params.ring());
    let p = QuasiFunction::rational(rx_sequence(n, &sym)?.pop().expect("nonempty"));
    specialize(&p, &abg_images(params))
}

/// `P_{n,0}` from the eigenvalue equation alone: writing
/// `P = sum rho_j x^j` with `rho_n = 1`, the coefficient of `x^(j-1)` gives
/// `rho_(j-1) = alpha j rho_j / (lambda_n - (j-1)(j-2+beta))`.
pub fn pn0_from_coefficients(n: usize, params: &Params) -> Result<QuasiFunction> {
    let ring = params.ring();
    let lam = lambda_n(n, params);
    let x = x_of(ring);
    let mut rho = RationalFunction::one(ring);
    let mut out = x.pow(n as i32)?;
    for j in (1..=n).rev() {
        let lam_j = lambda_n(j - 1, params);
        let num = &(&params.get("alpha") * &int(ring, j as i64)) * &rho;
        rho = num.checked_div(&(&lam - &lam_j))?;
        out = &out + &(&rho * &x.pow(j as i32 - 1)?);
    }
    Ok(QuasiFunction::rational(out))
}

fn require_alpha(params: &Params) -> Result<()> {
    if params.get("alpha").is_zero() {
        return Err(Error::DegenerateAlpha);
    }
    Ok(())
}

/// `P_{n-k-1,k+1} = ((n-k)(n-k-1+beta+gamma) P_{n-k,k} - I2 P_{n-k,k}) / (alpha (n-k))`.
pub fn descend_i2(p: &QuasiFunction, n: usize, k: usize, params: &Params) -> Result<QuasiFunction> {
    require_alpha(params)?;
    if k >= n {
        return Err(Error::InvalidArgument(format!("descent needs k < n, got k = {k}, n = {n}")));
    }
    let ring = params.ring();
    let i2 = system(SystemName::AGauged, params).i2;
    let nk = (n - k) as i64;
    let coef = &int(ring, nk) * &(&(&params.get("beta") + &params.get("gamma")) + &int(ring, nk - 1));
    let lhs = p.mul_rf(&coef).try_sub(&i2.apply(p)?)?;
    Ok(lhs.mul_rf(&(&params.get("alpha") * &int(ring, nk)).recip()?))
}

type RowCache = Mutex<HashMap<(usize, Vec<String>), Arc<Vec<QuasiFunction>>>>;

static SYMBOLIC_ROWS: LazyLock<RowCache> = LazyLock::new(|| Mutex::new(HashMap::new()));

fn symbolic_row(n: usize, ring: &Arc<Ring>) -> Result<Arc<Vec<QuasiFunction>>> {
    let key = (n, ring.names().to_vec());
    if let Some(row) = SYMBOLIC_ROWS.lock().expect("cache lock").get(&key) {
        return Ok(row.clone());
    }
    let sym = Params::symbolic(ring);
    let mut row = vec![QuasiFunction::rational(rx_sequence(n, &sym)?.pop().expect("nonempty"))];
    for k in 0..n {
        let next = descend_i2(&row[k], n, k, &sym)?;
        row.push(next);
    }
    let row = Arc::new(row);
    SYMBOLIC_ROWS.lock().expect("cache lock").insert(key, row.clone());
    Ok(row)
}

/// The row `P_{n,0}, ..., P_{0,n}`: `r_x` for the seed, then the `I2`
/// descent. Computed with symbolic `alpha`, `beta`, `gamma` and specialized
/// afterwards, so removable singularities of the recursion coefficients do
/// not matter.
pub fn build_lattice(n: usize, params: &Params) -> Result<PolyLattice> {
    require_alpha(params)?;
    let images = abg_images(params);
    let entries = symbolic_row(n, params.ring())?
        .iter()
        .map(|f| specialize(f, &images))
        .collect::<Result<Vec<_>>>()?;
    Ok(PolyLattice {
        n,
        entries,
        eigenvalue: lambda_n(n, params),
    })
}

/// Whether `f` is `x^i y^j` plus terms of lower total degree.
pub fn leading_monomial_is(f: &QuasiFunction, i: usize, j: usize) -> Result<bool> {
    if !f.xi_exp().is_zero() || !f.eta_exp().is_zero() {
        return Ok(false);
    }
    let split = f.body().laurent_split(&[XI, ETA])?;
    let top = (2 * (i + j)) as i32;
    let mut found = false;
    for (k, c) in split {
        let deg = k[0] + k[1];
        if deg > top || k.iter().any(|&e| e < 0 || e % 2 != 0) {
            return Ok(false);
        }
        if deg == top {
            if k != [2 * i as i32, 2 * j as i32] || !c.is_one() {
                return Ok(false);
            }
            found = true;
        }
    }
    Ok(found)
}
