use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::error::Error;
use crate::ratfield::{q, Monomial, Polynomial, RationalFunction, Ring};

fn r() -> Arc<Ring> {
    Ring::standard()
}

fn v(name: &str) -> RationalFunction {
    RationalFunction::var(&r(), name).unwrap()
}

fn k(n: i64) -> RationalFunction {
    RationalFunction::from_int(&r(), n)
}

fn f(c: RationalFunction) -> DiffOp {
    DiffOp::function(c)
}

#[test]
fn canonical_weyl_relation() {
    let xi = v("xi");
    let d = DiffOp::d_xi(&r());
    let lhs = d.compose(&f(xi.clone()));
    let rhs = &DiffOp::term((1, 0), xi) + &DiffOp::identity(&r());
    assert!(lhs.op_equal(&rhs));
}

#[test]
fn euler_operator_square() {
    // hand Leibniz oracle in internal coordinates:
    // x d_x = (xi/2) d_xi, (x d_x)^2 = xi^2/4 d_xi^2 + xi/4 d_xi
    let ring = r();
    let euler = f(x(&ring)).compose(&DiffOp::dx(&ring));
    let sq = euler.compose(&euler);
    let xi = v("xi");
    let expected = &DiffOp::term((2, 0), (&xi * &xi).scale(&q(1, 4)))
        + &DiffOp::term((1, 0), xi.scale(&q(1, 4)));
    assert!(sq.op_equal(&expected));
    // and in the x presentation it is x^2 d_x^2 + x d_x
    let xy = sq.xy_terms();
    assert_eq!(xy.len(), 2);
    assert!(xy[&(2, 0)].rf_equal(&x(&ring).pow(2).unwrap()));
    assert!(xy[&(1, 0)].rf_equal(&x(&ring)));
    assert_eq!(sq.to_string(), "x^2*dx^2 + x*dx");
}

#[test]
fn commutator_examples() {
    let ring = r();
    let dx = DiffOp::dx(&ring);
    let euler = f(x(&ring)).compose(&dx);
    let second = f(x(&ring).pow(2).unwrap()).compose(&dx.compose(&dx));
    assert!(euler.commutator(&euler).is_zero());
    assert!(euler.commutator(&second).is_zero());
    assert!(!dx.commutator(&euler).is_zero());
}

#[test]
fn symbolic_power_rule() {
    let ring = r();
    let p = AffineExponent::param("p", q(1, 1));
    let yp = QuasiFunction::with_xy_powers(k(1), &AffineExponent::zero(), &p).unwrap();
    let out = DiffOp::dy(&ring).apply(&yp).unwrap();
    let expected = QuasiFunction::with_xy_powers(
        v("p"),
        &AffineExponent::zero(),
        &p.add(&AffineExponent::constant(q(-1, 1))),
    )
    .unwrap();
    assert!(out.qf_equal(&expected));
}

#[test]
fn canonical_exponents() {
    // x^(3/2) = xi^3: integer part moves to the body
    let a = QuasiFunction::new(k(1), AffineExponent::constant(q(3, 1)), AffineExponent::zero())
        .unwrap();
    assert!(a.xi_exp().is_zero());
    assert!(a.body().rf_equal(&v("xi").pow(3).unwrap()));
    let b = QuasiFunction::new(k(1), AffineExponent::constant(q(-1, 2)), AffineExponent::zero())
        .unwrap();
    assert_eq!(b.xi_exp().constant_part(), &q(1, 2));
    assert!(b.body().rf_equal(&v("xi").pow(-1).unwrap()));
    assert_eq!(a.try_add(&b).unwrap_err(), Error::ExponentMismatch);
}

#[test]
fn gauge_examples() {
    let ring = r();
    let d = &f(x(&ring)).compose(&DiffOp::dx(&ring)) + &DiffOp::dy(&ring);
    let trivial = GaugeData::new(k(0), k(0)).unwrap();
    assert!(d.gauge_conjugate(&trivial).op_equal(&d));
    // G = exp(alpha x) = exp(alpha xi^2): d log G = (2 alpha xi, 0)
    let g = GaugeData::new(v("alpha") * v("xi").scale(&q(2, 1)), k(0)).unwrap();
    let conj = DiffOp::dx(&ring).gauge_conjugate(&g);
    let expected = &DiffOp::dx(&ring) + &f(v("alpha"));
    assert!(conj.op_equal(&expected));
    assert_eq!(
        GaugeData::new(v("eta"), k(0)).unwrap_err(),
        Error::InexactGauge
    );
}

#[test]
fn involution_squares_to_identity() {
    let ring = r();
    let inv = RationalMap::involution(&ring);
    assert!(inv.is_verified_involution());
    let p = &(&x(&ring) + &(&v("alpha") / &v("beta"))) * &y(&ring);
    let once = inv.substitute(&p.clone().into()).unwrap();
    let twice = inv.substitute(&once).unwrap();
    assert!(twice.qf_equal(&p.into()));
    let one: QuasiFunction = k(1).into();
    assert!(inv.substitute(&one).unwrap().qf_equal(&one));
}

#[test]
fn substitution_rejects_open_exponents() {
    let ring = r();
    let inv = RationalMap::involution(&ring);
    let root_x = QuasiFunction::with_xy_powers(
        k(1),
        &AffineExponent::constant(q(1, 4)),
        &AffineExponent::zero(),
    )
    .unwrap();
    assert_eq!(inv.substitute(&root_x).unwrap_err(), Error::ExponentNotClosed);
    // powers of y pass through since y is fixed
    let yp = QuasiFunction::with_xy_powers(
        x(&ring),
        &AffineExponent::zero(),
        &AffineExponent::param("p", q(1, 1)),
    )
    .unwrap();
    assert!(inv.substitute(&yp).is_ok());
}

#[test]
fn pullback_requires_verified_involution() {
    let ring = r();
    let not_inv = RationalMap::new(v("xi").scale(&q(2, 1)), v("eta"), true);
    assert_eq!(
        not_inv.pullback(&DiffOp::d_xi(&ring)).unwrap_err(),
        Error::NotInvolution
    );
    let undeclared = RationalMap::new(v("xi"), v("eta"), false);
    assert_eq!(
        undeclared.pullback(&DiffOp::d_xi(&ring)).unwrap_err(),
        Error::NotInvolution
    );
}

#[test]
fn pullback_intertwines_on_a_test_function() {
    let ring = r();
    let inv = RationalMap::involution(&ring);
    let d = &f(x(&ring).pow(2).unwrap()).compose(&DiffOp::dx(&ring).pow(2))
        + &f(&y(&ring) - &k(1)).compose(&DiffOp::dy(&ring));
    let test = &(&x(&ring).pow(3).unwrap() * &y(&ring)) + &v("alpha");
    let lhs = inv.pullback(&d).unwrap().apply_rf(&inv.compose_rf(&test).unwrap());
    let rhs = inv.compose_rf(&d.apply_rf(&test)).unwrap();
    assert!(lhs.rf_equal(&rhs));
}

fn coeff() -> impl Strategy<Value = RationalFunction> {
    let term = (0u16..3, 0u16..3, -3i64..=3);
    (prop::collection::vec(term, 1..3), 0i32..2).prop_map(|(ts, den)| {
        let ring = r();
        let terms = ts
            .into_iter()
            .map(|(a, b, c)| (Monomial::from_exponents(&[a, b]), q(c, 1)))
            .collect();
        let p: RationalFunction = Polynomial::from_terms(&ring, terms).into();
        &p / &RationalFunction::var_index(&ring, XI).pow(den).unwrap()
    })
}

fn small_op() -> impl Strategy<Value = DiffOp> {
    prop::collection::vec(((0u32..3, 0u32..3), coeff()), 1..4).prop_map(|ts| {
        let ring = r();
        ts.into_iter()
            .filter(|((i, j), _)| i + j <= 2)
            .fold(DiffOp::zero(&ring), |acc, (idx, c)| &acc + &DiffOp::term(idx, c))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn compose_is_associative(a in small_op(), b in small_op(), c in small_op()) {
        prop_assert!(a.compose(&b).compose(&c).op_equal(&a.compose(&b.compose(&c))));
    }

    #[test]
    fn commutator_antisymmetry_and_jacobi(a in small_op(), b in small_op(), c in small_op()) {
        prop_assert!((&a.commutator(&b) + &b.commutator(&a)).is_zero());
        let jacobi = &(&a.commutator(&b.commutator(&c)) + &b.commutator(&c.commutator(&a)))
            + &c.commutator(&a.commutator(&b));
        prop_assert!(jacobi.is_zero());
    }

    #[test]
    fn apply_respects_composition(a in small_op(), b in small_op(), body in coeff(), p in -3i64..3) {
        let f = QuasiFunction::new(body, AffineExponent::param("p", q(1, 1)),
            AffineExponent::constant(q(p, 3))).unwrap();
        let lhs = a.compose(&b).apply(&f).unwrap();
        let rhs = a.apply(&b.apply(&f).unwrap()).unwrap();
        prop_assert!(lhs.qf_equal(&rhs));
    }

    #[test]
    fn pullback_is_a_homomorphism(a in small_op(), b in small_op()) {
        let inv = RationalMap::involution(&r());
        let lhs = inv.pullback(&a.commutator(&b)).unwrap();
        let rhs = inv.pullback(&a).unwrap().commutator(&inv.pullback(&b).unwrap());
        prop_assert!(lhs.op_equal(&rhs));
    }

    #[test]
    fn gauge_distributes_over_composition(a in small_op(), b in small_op()) {
        let ring = r();
        let xi = RationalFunction::var_index(&ring, XI);
        let eta = RationalFunction::var_index(&ring, ETA);
        // G = xi^beta exp(xi eta)
        let g = GaugeData::new(&v("beta") / &xi + eta.clone(), xi).unwrap();
        let lhs = a.compose(&b).gauge_conjugate(&g);
        let rhs = a.gauge_conjugate(&g).compose(&b.gauge_conjugate(&g));
        prop_assert!(lhs.op_equal(&rhs));
    }

    #[test]
    fn order_bookkeeping(a in small_op(), b in small_op()) {
        let c = a.compose(&b);
        prop_assert!(c.order() <= a.order() + b.order());
    }
}

#[test]
fn square_roots_of_coordinate_monomials() {
    let ring = Ring::standard();
    let (x, y) = (super::x(&ring), super::y(&ring));
    let xi = RationalFunction::var_index(&ring, XI);
    let eta = RationalFunction::var_index(&ring, ETA);
    assert_eq!(sqrt_monomial(&(&x * &y)).unwrap(), &xi * &eta);
    assert_eq!(sqrt_monomial(&(&y / &x).scale(&q(9, 4))).unwrap(), (&eta / &xi).scale(&q(3, 2)));
    assert_eq!(sqrt_monomial(&x.pow(3).unwrap()).unwrap().to_string(), "x*sqrt(x)");
    for f in [&x + &y, x.scale(&q(2, 1)), x.scale(&q(-1, 1)), &x * &RationalFunction::var(&ring, "alpha").unwrap()] {
        assert!(matches!(sqrt_monomial(&f), Err(crate::Error::BadSquareRoot(_))), "{f}");
    }
}
