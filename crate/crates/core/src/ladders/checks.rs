use std::sync::Arc;

use crate::anchors;
use crate::check::{Check, Sides};
use crate::diffop::{AffineExponent, DiffOp, QuasiFunction, RationalMap, ETA, XI};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::ratfield::{q, Rational, RationalFunction, Ring};
use crate::systems::{i1_i3_rhs, i2_i3_rhs, cubic_rhs, killing_basis, laplace_beltrami, system, Params, SystemName};

use super::ansatz::eigen_ansatz_solve;
use super::basis::span_rank;
use super::ef::{chain_eigenvalue, chain_system, ef_construct};
use super::hw::{explicit_recursion_step, generic_recursion_coefficients, hw_construct, lowering, weight};
use super::lattice::{
    build_lattice, build_pn0, lambda_n, leading_monomial_is, pn0_from_coefficients, rx_coefficients, ry_sequence,
};
use super::qlattice::q_lattice;
use super::rep::{matrix_span_rank, rep_matrices};

/// Largest lattice level checked.
pub const LATTICE_MAX: usize = 6;
/// Largest level for the ansatz comparison.
pub const ANSATZ_MAX: usize = 4;
/// Largest level for representation matrices.
pub const REP_MAX: usize = 5;
/// Largest level for the lattice carried over by the involution.
pub const Q_MAX: usize = 2;
/// Largest integer weight for finite modules and chains.
pub const MODULE_MAX: usize = 4;

/// Coordinates and parameters as rational functions, for writing printed
/// formulas.
struct Sym {
    one: RationalFunction,
    x: RationalFunction,
    y: RationalFunction,
    xi: RationalFunction,
    eta: RationalFunction,
    a: RationalFunction,
    b: RationalFunction,
    g: RationalFunction,
}

impl Sym {
    fn new(p: &Params) -> Sym {
        let ring = p.ring();
        Sym {
            one: RationalFunction::one(ring),
            x: crate::diffop::x(ring),
            y: crate::diffop::y(ring),
            xi: RationalFunction::var_index(ring, XI),
            eta: RationalFunction::var_index(ring, ETA),
            a: p.get("alpha"),
            b: p.get("beta"),
            g: p.get("gamma"),
        }
    }

    fn int(&self, n: i64) -> RationalFunction {
        RationalFunction::from_int(self.one.ring(), n)
    }

    fn b_plus(&self, n: i64) -> RationalFunction {
        &self.b + &self.int(n)
    }
}

fn func(f: RationalFunction) -> QuasiFunction {
    QuasiFunction::rational(f)
}

/// Passes when every labelled pair agrees; otherwise names the first
/// mismatch.
fn all_equal(pairs: Vec<(String, QuasiFunction, QuasiFunction)>) -> Result<Sides> {
    for (label, a, b) in pairs {
        if !a.qf_equal(&b) {
            let detail = match a.try_sub(&b) {
                Ok(d) => format!("{label}: difference {d}"),
                Err(_) => format!("{label}: {a} vs {b}"),
            };
            return Ok(Sides::Claim { holds: false, detail });
        }
    }
    Ok(Sides::Claim {
        holds: true,
        detail: String::new(),
    })
}

/// Whether `c` is independent of the coordinates; decided by derivatives
/// since ratios are not reduced by their multivariate gcd.
fn coordinate_free(c: &RationalFunction) -> bool {
    c.derivative(XI).is_zero() && c.derivative(ETA).is_zero()
}

fn claim(holds: bool, detail: impl Into<String>) -> Result<Sides> {
    Ok(Sides::Claim {
        holds,
        detail: detail.into(),
    })
}

fn a_gauged(p: &Params) -> crate::systems::SystemSpec {
    system(SystemName::AGauged, p)
}

/// `(n - k)(n - k - 1 + beta + gamma)`, the diagonal of the `I2` action.
fn i2_diagonal(s: &Sym, n: usize, k: usize) -> RationalFunction {
    let nk = (n - k) as i64;
    &s.int(nk) * &(&(&s.b + &s.g) + &s.int(nk - 1))
}

/// `I1 P_{n-k,k} = k alpha P_{n-k,k} + k(k - gamma - 1) P_{n-k+1,k-1}` and
/// `I2 P_{n-k,k} = (n-k)(n-k-1+beta+gamma) P_{n-k,k} - alpha(n-k) P_{n-k-1,k+1}`
/// on a row of functions, with `P` outside the row taken as zero.
fn lattice_actions(
    s: &Sym,
    row: &[QuasiFunction],
    i1: &DiffOp,
    i2: &DiffOp,
) -> Result<Vec<(String, QuasiFunction, QuasiFunction)>> {
    let n = row.len() - 1;
    let mut out = Vec::new();
    for (k, pk) in row.iter().enumerate() {
        let kk = s.int(k as i64);
        let mut rhs1 = pk.mul_rf(&(&kk * &s.a));
        if k > 0 {
            let c = &kk * &(&kk - &(&s.g + &s.one));
            rhs1 = rhs1.try_add(&row[k - 1].mul_rf(&c))?;
        }
        out.push((format!("I1 P[{k}]"), i1.apply(pk)?, rhs1));
        let mut rhs2 = pk.mul_rf(&i2_diagonal(s, n, k));
        if k < n {
            let c = -&(&s.a * &s.int((n - k) as i64));
            rhs2 = rhs2.try_add(&row[k + 1].mul_rf(&c))?;
        }
        out.push((format!("I2 P[{k}]"), i2.apply(pk)?, rhs2));
    }
    Ok(out)
}

/// The printed low-level lattice entries, the recursions, eigenvalues,
/// lattice actions and admissibility.
pub fn lattice_checks() -> Vec<Check> {
    type Printed = fn(&Sym) -> RationalFunction;
    let printed: [(&str, usize, usize, Printed); 5] = [
        ("P10", 1, 0, |s| &s.x + &(&s.a / &s.b)),
        ("P20", 2, 0, |s| {
            let lin = &(&s.x * &s.a.scale(&q(2, 1))) / &s.b_plus(2);
            let cst = &(&s.a * &s.a) / &(&s.b_plus(2) * &s.b_plus(1));
            &(&(&s.x * &s.x) + &lin) + &cst
        }),
        ("P01", 1, 1, |s| &s.y + &(&s.g / &s.b)),
        ("P11", 2, 1, |s| {
            let lin = &(&(&s.g * &s.x) + &(&s.a * &s.y)) / &s.b_plus(2);
            let cst = &(&s.a * &s.g) / &(&s.b_plus(2) * &s.b_plus(1));
            &(&(&s.x * &s.y) + &lin) + &cst
        }),
        ("P02", 2, 2, |s| {
            let gm1 = &s.g - &s.one;
            let lin = &(&gm1 * &s.y).scale(&q(2, 1)) / &s.b_plus(2);
            let cst = &(&s.g * &gm1) / &(&s.b_plus(2) * &s.b_plus(1));
            &(&(&s.y * &s.y) + &lin) + &cst
        }),
    ];
    let mut out = Vec::new();
    for (name, n, k, f) in printed {
        let anchor = if n == 1 && k == 0 || name == "P20" { anchors::SEED } else { anchors::LATTICE_EXAMPLES };
        out.push(Check::new(format!("lattice.{name}"), "function", anchor, move |p| {
            let row = build_lattice(n, p)?;
            Ok(Sides::Funcs(row.entry(k).clone(), func(f(&Sym::new(p)))))
        }));
    }
    out.push(Check::new("lattice.P00=1", "function", anchors::LATTICE, |p| {
        let row = build_lattice(0, p)?;
        Ok(Sides::Funcs(row.entry(0).clone(), func(RationalFunction::one(p.ring()))))
    }));
    out.push(Check::new("lattice.A0=alpha/beta", "value", anchors::RX, |p| {
        let s = Sym::new(p);
        Ok(Sides::Values(rx_coefficients(0, p)?.0, &s.a / &s.b))
    }));
    out.push(Check::new("lattice.alpha=0-rejected", "claim", anchors::DESCENT, |p| {
        let p = p.clone().with_value("alpha", q(0, 1));
        let rejected = matches!(build_lattice(1, &p), Err(Error::DegenerateAlpha));
        claim(rejected, "descent accepted alpha = 0")
    }));
    for n in 0..=LATTICE_MAX {
        out.push(Check::new(format!("lattice.n{n}.monic"), "claim", anchors::LATTICE, move |p| {
            let row = build_lattice(n, p)?;
            for k in 0..=n {
                if !leading_monomial_is(row.entry(k), n - k, k)? {
                    return claim(false, format!("P[{k}] does not lead with x^{} y^{k}", n - k));
                }
            }
            claim(true, "")
        }));
        out.push(Check::new(format!("lattice.n{n}.eigenvalue"), "eigen", anchors::EIGENVALUE, move |p| {
            let row = build_lattice(n, p)?;
            let l = a_gauged(p).l;
            let pairs = (0..=n)
                .map(|k| Ok((format!("L P[{k}]"), l.apply(row.entry(k))?, row.entry(k).mul_rf(&lambda_n(n, p)))))
                .collect::<Result<Vec<_>>>()?;
            all_equal(pairs)
        }));
        out.push(Check::new(format!("lattice.n{n}.rx"), "function", anchors::RX, move |p| {
            Ok(Sides::Funcs(build_pn0(n, p)?, pn0_from_coefficients(n, p)?))
        }));
        out.push(Check::new(format!("lattice.n{n}.ry"), "function", anchors::RY, move |p| {
            let row = build_lattice(n, p)?;
            Ok(Sides::Funcs(row.entry(n).clone(), ry_sequence(n, p)?.swap_remove(n)))
        }));
        out.push(Check::new(format!("lattice.n{n}.actions"), "eigen", anchors::I1_ACTION, move |p| {
            let row = build_lattice(n, p)?;
            let s = a_gauged(p);
            all_equal(lattice_actions(&Sym::new(p), &row.entries, &s.i1, &s.i2)?)
        }));
        out.push(Check::new(format!("lattice.n{n}.I2P0n=0"), "eigen", anchors::DESCENT, move |p| {
            let row = build_lattice(n, p)?;
            let image = a_gauged(p).i2.apply(row.entry(n))?;
            Ok(Sides::Funcs(image, func(RationalFunction::zero(p.ring()))))
        }));
    }
    out.push(Check::new("lattice.eigenvalues-distinct", "claim", anchors::ADMISSIBLE, |p| {
        let s = Sym::new(p);
        for n in 1..=LATTICE_MAX {
            for m in 0..n {
                let diff = &lambda_n(n, p) - &lambda_n(m, p);
                let expected = &s.int((n - m) as i64) * &s.b_plus((n + m) as i64 - 1);
                if !diff.rf_equal(&expected) || diff.is_zero() {
                    return claim(false, format!("lambda_{n} - lambda_{m} = {diff}"));
                }
            }
        }
        claim(true, "")
    }));
    for n in 0..=ANSATZ_MAX {
        out.push(Check::new(format!("ansatz.n{n}.dimension"), "claim", anchors::ADMISSIBLE, move |p| {
            let sols = eigen_ansatz_solve(n, p)?;
            claim(sols.len() == n + 1, format!("eigenspace has dimension {}, expected {}", sols.len(), n + 1))
        }));
        out.push(Check::new(format!("ansatz.n{n}.span"), "claim", anchors::ADMISSIBLE, move |p| {
            let sols = eigen_ansatz_solve(n, p)?;
            let row = build_lattice(n, p)?.entries;
            let (ra, rl) = (span_rank(&sols)?, span_rank(&row)?);
            let joint = span_rank(&[sols, row].concat())?;
            claim(
                ra == n + 1 && rl == n + 1 && joint == n + 1,
                format!("ranks: ansatz {ra}, lattice {rl}, joint {joint}"),
            )
        }));
    }
    out
}

fn matrices(a: Matrix, b: Matrix) -> Result<Sides> {
    Ok(Sides::Matrices(a, b))
}

/// The quadratic relations as matrix identities, `M_L = lambda I`, and the
/// escape of commutators from the span of the four matrices.
pub fn rep_checks() -> Vec<Check> {
    let mut out = vec![Check::new("rep.n1.example", "claim", anchors::REPRESENTATION, |p| {
        let r = rep_matrices(1, p)?;
        let s = Sym::new(p);
        let z = RationalFunction::zero(p.ring());
        let i1 = Matrix::from_rows(p.ring(), vec![vec![z.clone(), -&s.g], vec![z.clone(), s.a.clone()]])?;
        let i2 = Matrix::from_rows(p.ring(), vec![vec![&s.b + &s.g, z.clone()], vec![-&s.a, z]])?;
        claim(
            r.i1 == i1 && r.i2 == i2,
            format!("M_I1 = {}, M_I2 = {}", r.i1, r.i2),
        )
    })];
    out.push(Check::new("rep.n0.trivial", "claim", anchors::REPRESENTATION, |p| {
        let r = rep_matrices(0, p)?;
        claim(
            r.named().iter().all(|(_, m)| m.is_zero()) && r.dimension() == 1,
            "1x1 matrices are not all zero",
        )
    }));
    for n in 1..=REP_MAX {
        let rep = move |p: &Params| rep_matrices(n, p);
        out.push(Check::new(format!("rep.n{n}.L=lambda"), "matrix", anchors::REPRESENTATION, move |p| {
            let r = rep(p)?;
            matrices(r.l, Matrix::scalar(n + 1, &lambda_n(n, p)))
        }));
        out.push(Check::new(format!("rep.n{n}.[I1,I2]=I3"), "matrix", anchors::REPRESENTATION, move |p| {
            let r = rep(p)?;
            matrices(r.i1.commutator(&r.i2)?, r.i3)
        }));
        out.push(Check::new(format!("rep.n{n}.[I1,I3]"), "matrix", anchors::REPRESENTATION, move |p| {
            let r = rep(p)?;
            matrices(r.i1.commutator(&r.i3)?, i1_i3_rhs(p, &r.l, &r.i1, &r.i2))
        }));
        out.push(Check::new(format!("rep.n{n}.[I2,I3]"), "matrix", anchors::REPRESENTATION, move |p| {
            let r = rep(p)?;
            matrices(r.i2.commutator(&r.i3)?, i2_i3_rhs(p, &r.l, &r.i1, &r.i2))
        }));
        out.push(Check::new(format!("rep.n{n}.I3^2"), "matrix", anchors::REPRESENTATION, move |p| {
            let r = rep(p)?;
            matrices(r.i3.try_mul(&r.i3)?, cubic_rhs(p, &r.l, &r.i1, &r.i2))
        }));
        if n >= 2 {
            out.push(Check::new(format!("rep.n{n}.larger-algebra"), "claim", anchors::LARGER_ALGEBRA, move |p| {
                let r = rep(p)?;
                let c = r.i1.commutator(&r.i3)?;
                let base = matrix_span_rank(&[&r.l, &r.i1, &r.i2, &r.i3])?;
                let with = matrix_span_rank(&[&r.l, &r.i1, &r.i2, &r.i3, &c])?;
                claim(with > base, format!("[M_I1, M_I3] stays in the span (rank {base})"))
            }));
        }
    }
    out
}

/// The lattice carried over by the involution and the same relations for
/// the transformed system.
pub fn q_lattice_checks() -> Vec<Check> {
    let mut out = vec![
        Check::new("q.Q10", "function", anchors::Q_FUNCTIONS, |p| {
            let s = Sym::new(p);
            let ym1 = &s.y - &s.one;
            let expected = &(&(&ym1 * &ym1) / &s.x) + &(&s.a / &s.b);
            Ok(Sides::Funcs(q_lattice(1, p)?.swap_remove(0), func(expected)))
        }),
        Check::new("q.Q00=1", "function", anchors::Q_FUNCTIONS, |p| {
            Ok(Sides::Funcs(q_lattice(0, p)?.swap_remove(0), func(RationalFunction::one(p.ring()))))
        }),
    ];
    for n in 0..=Q_MAX {
        out.push(Check::new(format!("q.n{n}.eigenvalue"), "eigen", anchors::Q_FUNCTIONS, move |p| {
            let row = q_lattice(n, p)?;
            let l = system(SystemName::B, p).l;
            let pairs = row
                .iter()
                .enumerate()
                .map(|(k, f)| Ok((format!("L Q[{k}]"), l.apply(f)?, f.mul_rf(&lambda_n(n, p)))))
                .collect::<Result<Vec<_>>>()?;
            all_equal(pairs)
        }));
        out.push(Check::new(format!("q.n{n}.actions"), "eigen", anchors::Q_FUNCTIONS, move |p| {
            let row = q_lattice(n, p)?;
            let s = system(SystemName::B, p);
            all_equal(lattice_actions(&Sym::new(p), &row, &s.i1, &s.i2)?)
        }));
    }
    out
}

/// Integer and fractional weights exercised by the module checks; the
/// fractional one is truncated.
fn module_weights() -> Vec<(Rational, Option<usize>)> {
    let mut w: Vec<_> = (0..=MODULE_MAX as i64).map(|n| (q(n, 1), None)).collect();
    w.push((q(3, 2), Some(5)));
    w.push((q(1, 3), Some(4)));
    w
}

fn weight_label(n: &Rational) -> String {
    n.to_string().replace('/', "_")
}

/// The highest-weight modules of `sl(2)` and their recursion.
pub fn hw_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for (n, len) in module_weights() {
        let label = weight_label(&n);
        let (n1, n2, n3, n4) = (n.clone(), n.clone(), n.clone(), n.clone());
        out.push(Check::new(format!("hw.n{label}.module"), "eigen", anchors::HW_MODULE, move |p| {
            let m = hw_construct(p.ring(), &n1, len)?;
            let k = killing_basis(p.ring());
            let mut pairs = Vec::new();
            for r in 1..=m.vectors.len() {
                let psi = m.psi(r);
                pairs.push((format!("H psi[{r}]"), k.h.apply(&psi)?, psi.scale(&weight(&n1, r))));
                pairs.push((format!("E psi[{r}]"), k.e.apply(&psi)?, m.psi(r - 1).scale(&lowering(&n1, r))));
            }
            all_equal(pairs)
        }));
        out.push(Check::new(format!("hw.n{label}.casimir"), "eigen", anchors::HW_CASIMIR, move |p| {
            let m = hw_construct(p.ring(), &n2, len)?;
            let lb = laplace_beltrami(p.ring());
            let lam = &n2 * (&n2 + q(1, 1)) * q(1, 4);
            let pairs = (1..=m.vectors.len())
                .map(|r| Ok((format!("L_b psi[{r}]"), lb.apply(&m.psi(r))?, m.psi(r).scale(&lam))))
                .collect::<Result<Vec<_>>>()?;
            all_equal(pairs)
        }));
        out.push(Check::new(format!("hw.n{label}.recursion"), "function", anchors::HW_RECURSION, move |p| {
            let m = hw_construct(p.ring(), &n3, len)?;
            let pairs = (1..m.vectors.len())
                .map(|r| Ok((format!("psi[{}]", r + 1), m.psi(r + 1), explicit_recursion_step(&m, r)?)))
                .collect::<Result<Vec<_>>>()?;
            all_equal(pairs)
        }));
        out.push(Check::new(format!("hw.n{label}.psi1-psi2"), "function", anchors::HW_RECURSION, move |p| {
            let ring = p.ring();
            let m = hw_construct(ring, &n4, Some(2))?;
            let s = Sym::new(p);
            let psi1 = QuasiFunction::new(s.one.clone(), AffineExponent::constant(n4.clone()), AffineExponent::zero())?;
            let body = (&s.eta / &s.xi).scale(&(&n4 * q(2, 1)));
            let psi2 = QuasiFunction::new(body, AffineExponent::constant(n4.clone()), AffineExponent::zero())?;
            all_equal(vec![("psi[1]".into(), m.psi(1), psi1), ("psi[2]".into(), m.psi(2), psi2)])
        }));
        if len.is_none() {
            let n5 = n.clone();
            out.push(Check::new(format!("hw.n{label}.dimension"), "claim", anchors::HW_MODULE, move |p| {
                let m = hw_construct(p.ring(), &n5, None)?;
                let dim = m.vectors.len();
                let f = killing_basis(p.ring()).f;
                let nonzero = m.vectors.iter().all(|v| !v.is_zero());
                let closes = f.apply(m.vectors.last().expect("nonempty"))?.is_zero();
                let expected = (&n5 * q(2, 1) + q(1, 1)).to_integer();
                claim(
                    nonzero && closes && num_bigint::BigInt::from(dim) == expected,
                    format!("dimension {dim}, all nonzero {nonzero}, F annihilates last {closes}"),
                )
            }));
        }
    }
    out.push(Check::new("hw.generic-coefficient-1", "value", anchors::HW_RECURSION, |p| {
        let s = Sym::new(p);
        Ok(Sides::Values(generic_recursion_coefficients(p.ring())?.0, &s.eta / &s.xi))
    }));
    out.push(Check::new("hw.generic-coefficient-2", "value", anchors::HW_RECURSION, |p| {
        let s = Sym::new(p);
        Ok(Sides::Values(generic_recursion_coefficients(p.ring())?.1, &(&s.y - &s.one) / &s.x))
    }));
    out.push(Check::new("hw.n2.quintuple", "function", anchors::HW_EXAMPLE, |p| {
        let m = hw_construct(p.ring(), &q(2, 1), None)?;
        let pairs = n2_quintuple(&Sym::new(p))
            .into_iter()
            .enumerate()
            .map(|(i, f)| (format!("psi[{}]", i + 1), m.psi(i + 1), func(f)))
            .collect();
        all_equal(pairs)
    }));
    out
}

/// `x, 4 sqrt(xy), 4(3y - 1), 24(y - 1) sqrt(y/x), 24(y - 1)^2/x`.
fn n2_quintuple(s: &Sym) -> [RationalFunction; 5] {
    let ym1 = &s.y - &s.one;
    [
        s.x.clone(),
        (&s.xi * &s.eta).scale(&q(4, 1)),
        (&s.y.scale(&q(3, 1)) - &s.one).scale(&q(4, 1)),
        &(&ym1 * &s.eta).scale(&q(24, 1)) / &s.xi,
        &(&ym1 * &ym1).scale(&q(24, 1)) / &s.x,
    ]
}

fn symbolic(name: &str) -> AffineExponent {
    AffineExponent::param(name, q(1, 1))
}

fn constant(n: i64) -> AffineExponent {
    AffineExponent::constant(q(n, 1))
}

/// `body * y^p`.
fn times_y_p(body: RationalFunction) -> Result<QuasiFunction> {
    QuasiFunction::with_xy_powers(body, &AffineExponent::zero(), &symbolic("p"))
}

/// The printed `n = 2` chain with `phi_3` as it must read for weight `-4`.
fn n2_chain(ring: &Arc<Ring>) -> Result<[QuasiFunction; 3]> {
    let s = Sym::new(&Params::symbolic(ring));
    let pv = RationalFunction::var(ring, "p")?;
    let ym1 = &s.y - &s.one;
    let phi2 = &(&s.y.scale(&q(3, 1)) - &s.one) + &(&pv.scale(&q(4, 1)) * &ym1);
    let quad = &(&(&pv * &pv).scale(&q(16, 1)) + &pv.scale(&q(16, 1))) + &s.int(3);
    Ok([
        times_y_p(s.x.clone())?,
        times_y_p(phi2.scale(&q(4, 1)))?,
        times_y_p(&(&(&ym1 * &ym1) * &quad).scale(&q(8, 1)) / &s.x)?,
    ])
}

/// The chains of system `C`: weights, eigenvalue, termination, the `n = 2`
/// example and the reduction to the `sl(2)` modules.
pub fn ef_checks() -> Vec<Check> {
    let mut out = vec![
        Check::new("ef.weights", "eigen", anchors::EF_WEIGHT, |p| {
            let ch = ef_construct(p.ring(), &symbolic("p"), &symbolic("w"), 3)?;
            let h = killing_basis(p.ring()).h;
            let w = RationalFunction::var(p.ring(), "w")?;
            let pairs = (1..=3)
                .map(|k| {
                    let mu = &w - &RationalFunction::from_int(p.ring(), 4 * (k as i64 - 1));
                    Ok((format!("H phi[{k}]"), h.apply(ch.phi(k))?, ch.phi(k).mul_rf(&mu)))
                })
                .collect::<Result<Vec<_>>>()?;
            all_equal(pairs)
        }),
        Check::new("ef.eigenvalue", "eigen", anchors::EF_EIGENVALUE, |p| {
            let ch = ef_construct(p.ring(), &symbolic("p"), &symbolic("w"), 3)?;
            let l = chain_system(p.ring(), &symbolic("p"))?.l;
            let pairs = (1..=3)
                .map(|k| Ok((format!("L phi[{k}]"), l.apply(ch.phi(k))?, ch.phi(k).mul_rf(&ch.eigenvalue))))
                .collect::<Result<Vec<_>>>()?;
            all_equal(pairs)
        }),
        Check::new("ef.I1phi1=0", "eigen", anchors::EF_WEIGHT, |p| {
            let ch = ef_construct(p.ring(), &symbolic("p"), &symbolic("w"), 1)?;
            let i1 = chain_system(p.ring(), &symbolic("p"))?.i1;
            Ok(Sides::Funcs(i1.apply(ch.phi(1))?, ch.phi(1).mul_rf(&RationalFunction::zero(p.ring()))))
        }),
        Check::new("ef.length1", "eigen", anchors::EF_WEIGHT, |p| {
            let ch = ef_construct(p.ring(), &symbolic("p"), &symbolic("w"), 1)?;
            let h = killing_basis(p.ring()).h;
            let w = RationalFunction::var(p.ring(), "w")?;
            Ok(Sides::Funcs(h.apply(ch.phi(1))?, ch.phi(1).mul_rf(&w)))
        }),
    ];
    for n in 0..=MODULE_MAX {
        out.push(Check::new(format!("ef.n{n}.termination"), "claim", anchors::EF_TERMINATION, move |p| {
            let ring = p.ring();
            let ch = ef_construct(ring, &symbolic("p"), &constant(2 * n as i64), n + 2)?;
            let nonzero = ch.vectors.iter().filter(|v| !v.is_zero()).count();
            let ends = ch.phi(n + 2).is_zero();
            claim(
                nonzero == n + 1 && ends,
                format!("{nonzero} nonzero vectors, I2 phi[{}] = 0: {ends}", n + 1),
            )
        }));
        out.push(Check::new(format!("ef.n{n}.closure"), "claim", anchors::EF_TERMINATION, move |p| {
            let ring = p.ring();
            let ch = ef_construct(ring, &symbolic("p"), &constant(2 * n as i64), n + 1)?;
            let i1 = chain_system(ring, &symbolic("p"))?.i1;
            // I1 lowers the chain: I1 phi_k is a parameter multiple of phi_(k-1)
            for k in 2..=n + 1 {
                let image = i1.apply(ch.phi(k))?;
                let proportional = image
                    .ratio(ch.phi(k - 1))
                    .is_ok_and(|c| coordinate_free(&c) && !c.is_zero());
                if !proportional {
                    return claim(false, format!("I1 phi[{k}] is not a multiple of phi[{}]", k - 1));
                }
            }
            let mirrored = RationalMap::involution(ring).substitute(ch.phi(1))?;
            let matched = mirrored.ratio(ch.phi(n + 1)).is_ok_and(|c| coordinate_free(&c));
            claim(matched, format!("the involution image of phi[1] is not a multiple of phi[{}]", n + 1))
        }));
        out.push(Check::new(format!("ef.n{n}.eigenvalue@m=-1"), "value", anchors::EF_REDUCTION, move |p| {
            let ring = p.ring();
            let lam = chain_eigenvalue(&RationalFunction::from_int(ring, 2 * n as i64), &RationalFunction::from_int(ring, -1));
            let expected = RationalFunction::constant(ring, q((n * (n + 1)) as i64, 4));
            Ok(Sides::Values(lam, expected))
        }));
    }
    for k in 1..=3 {
        out.push(Check::new(format!("ef.n2.phi{k}"), "function", anchors::EF_EXAMPLE, move |p| {
            let ch = ef_construct(p.ring(), &symbolic("p"), &constant(4), 3)?;
            let expected = n2_chain(p.ring())?[k - 1].clone();
            Ok(Sides::Funcs(ch.phi(k).clone(), expected))
        }));
    }
    out.push(Check::new("ef.n2.phi3-printed-lacks-1/x", "function", anchors::EF_EXAMPLE, |p| {
        // the printed phi_3 has H-weight 0 instead of -4; it is x times the chain element
        let ch = ef_construct(p.ring(), &symbolic("p"), &constant(4), 3)?;
        let s = Sym::new(p);
        let pv = RationalFunction::var(p.ring(), "p")?;
        let ym1 = &s.y - &s.one;
        let quad = &(&(&pv * &pv).scale(&q(16, 1)) + &pv.scale(&q(16, 1))) + &s.int(3);
        let printed = times_y_p((&(&ym1 * &ym1) * &quad).scale(&q(8, 1)))?;
        Ok(Sides::Funcs(ch.phi(3).mul_rf(&s.x), printed))
    }));
    out.push(Check::new("ef.p0.reduction", "function", anchors::EF_REDUCTION, |p| {
        let ring = p.ring();
        let ch = ef_construct(ring, &AffineExponent::zero(), &constant(4), 3)?;
        let m = hw_construct(ring, &q(2, 1), None)?;
        let pairs = [(1, 1), (2, 3), (3, 5)]
            .into_iter()
            .map(|(k, r)| (format!("phi[{k}] vs psi[{r}]"), ch.phi(k).clone(), m.psi(r)))
            .collect();
        all_equal(pairs)
    }));
    out
}

/// Every ladder check.
pub fn ladder_checks() -> Vec<Check> {
    let mut out = lattice_checks();
    out.extend(rep_checks());
    out.extend(q_lattice_checks());
    out.extend(hw_checks());
    out.extend(ef_checks());
    out
}
