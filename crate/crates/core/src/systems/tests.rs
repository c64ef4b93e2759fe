use super::killing::Coords;
use proptest::prelude::*;

use super::*;
use crate::check::{run_checks, Check, CheckOptions, Sides};
use crate::diffop::{DiffOp, QuasiFunction, RationalMap, ETA, XI};
use crate::error::Error;
use crate::ratfield::{q, RationalFunction, Ring};

fn ring() -> std::sync::Arc<Ring> {
    Ring::standard()
}

fn rf(name: &str) -> RationalFunction {
    RationalFunction::var(&ring(), name).unwrap()
}

fn xi() -> RationalFunction {
    RationalFunction::var_index(&ring(), XI)
}

fn eta() -> RationalFunction {
    RationalFunction::var_index(&ring(), ETA)
}

fn int(n: i64) -> RationalFunction {
    RationalFunction::from_int(&ring(), n)
}

#[test]
fn all_system_checks_pass() {
    let r = run_checks(&system_checks(), &Params::standard(), &CheckOptions::default());
    assert!(r.passed(), "{}", r.to_text());
}

#[test]
fn gauged_i1_matches_internal_form() {
    // x y dy^2 + (alpha y - gamma x) dy written directly in xi, eta:
    // (xi^2/4) deta^2 + ((2 alpha eta^2 - 2 gamma xi^2 - xi^2) / (4 eta)) deta
    let s = system(SystemName::AGauged, &Params::standard());
    let xi2 = &xi() * &xi();
    let first = &(&(&rf("alpha") * &(&eta() * &eta())).scale(&q(2, 1)) - &(&rf("gamma") * &xi2).scale(&q(2, 1))) - &xi2;
    let oracle = &DiffOp::term((0, 2), xi2.scale(&q(1, 4)))
        + &DiffOp::term((0, 1), first.checked_div(&eta().scale(&q(4, 1))).unwrap());
    assert!(s.i1.op_equal(&oracle));
}

#[test]
fn c_integral_is_e_squared_minus_potential() {
    let s = system(SystemName::C, &Params::standard());
    let k = killing_basis(&ring());
    let v = (&s.i1 - &(&k.e * &k.e)).as_function().unwrap();
    let expected = (&rf("c1") * &(&xi() * &xi())).checked_div(&(&eta() * &eta())).unwrap().scale(&q(-4, 1));
    assert_eq!(v, expected);
}

#[test]
fn b_i2_dx_coefficient() {
    let s = system(SystemName::B, &Params::standard());
    let c = Coords::new(&ring());
    let expected = &(&(&(&int(2) - &rf("beta")) - &rf("gamma")) * &c.x)
        - &(&rf("alpha") * &(&c.x * &c.x)).checked_div(&(&int(1) - &c.y)).unwrap();
    assert_eq!(s.i2.xy_terms()[&(1, 0)], expected);
}

#[test]
fn system_lookup() {
    assert_eq!(system_by_name("a_gauged", &Params::standard()).unwrap().name, SystemName::AGauged);
    assert!(matches!(system_by_name("D", &Params::standard()), Err(Error::UnknownSystem(_))));
    assert_eq!(SystemName::BRaw.to_string(), "B_raw");
}

#[test]
fn flat_and_singular_metrics() {
    let (one, zero) = (int(1), int(0));
    let flat = laplace_beltrami_from_metric(&[[one.clone(), zero.clone()], [zero.clone(), one.clone()]]).unwrap();
    let (dx, dy) = (DiffOp::dx(&ring()), DiffOp::dy(&ring()));
    assert!(flat.op_equal(&(&(&dx * &dx) + &(&dy * &dy))));
    let c = Coords::new(&ring());
    let singular = [[c.x.clone(), c.x.clone()], [c.x.clone(), c.x.clone()]];
    assert!(matches!(laplace_beltrami_from_metric(&singular), Err(Error::SingularMetric)));
}

#[test]
fn killing_actions_by_hand() {
    let k = killing_basis(&ring());
    // E = xi d/deta, so E(sqrt(x^n y)) = sqrt(x^(n+1))
    for n in 0..4 {
        let f = QuasiFunction::rational(&xi().pow(n).unwrap() * &eta());
        let g = QuasiFunction::rational(xi().pow(n + 1).unwrap());
        assert_eq!(k.e.apply(&f).unwrap(), g);
    }
    let x = QuasiFunction::rational(crate::diffop::x(&ring()));
    assert_eq!(k.h.apply(&x).unwrap(), x.scale(&q(4, 1)));
}

#[test]
fn perturbed_integral_fails_with_localized_witness() {
    let build: SpecBuilder = std::sync::Arc::new(|p| {
        let mut s = system(SystemName::AGauged, p);
        s.i1 = &s.i1 + &DiffOp::dy(p.ring());
        s
    });
    let r = run_checks(&commuting_checks("A_gauged+dy", build), &Params::standard(), &CheckOptions::default());
    let bad = r.get("A_gauged+dy.[L,I1]=0").unwrap();
    assert!(!bad.passed());
    let w = bad.witness.as_deref().unwrap();
    assert_eq!(w, "pre-filter: dx*dy: -2*x vs 0");
    assert!(r.get("A_gauged+dy.[L,I2]=0").unwrap().passed());

    let exact = CheckOptions {
        exact_only: true,
        ..CheckOptions::default()
    };
    let r = run_checks(&commuting_checks("A_gauged+dy", catalog_perturbed()), &Params::standard(), &exact);
    let w = r.get("A_gauged+dy.[L,I1]=0").unwrap().witness.clone().unwrap();
    assert_eq!(w, "dx*dy: -2*x vs 0");
}

fn catalog_perturbed() -> SpecBuilder {
    std::sync::Arc::new(|p| {
        let mut s = system(SystemName::AGauged, p);
        s.i1 = &s.i1 + &DiffOp::dy(p.ring());
        s
    })
}

#[test]
fn comm_h_e_against_3e_reports_both_coefficients() {
    let c = Check::new("neg", "identity", "sl2-commutation", |p| {
        let k = killing_basis(p.ring());
        Ok(Sides::Ops(k.h.commutator(&k.e), k.e.scale(&q(3, 1))))
    });
    let e = c.run(&Params::standard(), &CheckOptions::default());
    assert_eq!(e.witness.as_deref(), Some("pre-filter: dy: 4*sqrt(x*y) vs 6*sqrt(x*y)"));
}

#[test]
fn every_quadratic_relation_detects_a_perturbed_integral() {
    let perturbed: SpecBuilder = std::sync::Arc::new(|p| {
        let mut s = system(SystemName::B, p);
        s.i2 = &s.i2 + &DiffOp::function(crate::diffop::y(p.ring()));
        s
    });
    let r = run_checks(&quadratic_algebra_checks("B'", perturbed), &Params::standard(), &CheckOptions::default());
    assert!(r.entries.iter().all(|e| !e.passed() && e.witness.is_some()), "{}", r.to_text());
}

#[test]
fn quadratic_algebra_rejects_other_systems() {
    assert!(verify_quadratic_algebra(SystemName::C, &Params::standard(), &CheckOptions::default()).is_err());
    let r = verify_quadratic_algebra(SystemName::AGauged, &Params::standard(), &CheckOptions::default()).unwrap();
    assert!(r.passed());
}

#[test]
fn gauge_constants_are_locked() {
    let p = Params::standard().with_gauge_constraints();
    let links = gauge_links(&p).unwrap();
    for (link, (name, factor, shift)) in links.iter().zip(locked_gauge_constants(&p)) {
        assert_eq!(link.name, name);
        assert_eq!(link.factor, factor, "{name}");
        assert_eq!(link.constant_shift().unwrap(), shift, "{name}");
    }
}

#[test]
fn breaking_any_constraint_breaks_the_gauge_link() {
    let good = Params::standard().with_gauge_constraints();
    for c in ["c0", "c1", "c2"] {
        let broken = good.clone().with(c, &good.get(c) + &int(1));
        let links = gauge_links(&broken).unwrap();
        assert!(links[0].constant_shift().is_none(), "L link survives a broken {c}");
        assert!(links.iter().filter(|l| l.constant_shift().is_none()).count() >= 2, "{c}");
    }
}

#[test]
fn involution_link_and_ef_algebra_reports_pass() {
    let opts = CheckOptions::default();
    assert!(verify_involution_link(&Params::standard(), &opts).passed());
    assert!(verify_ef_algebra(&Params::standard(), &opts).passed());
    assert!(verify_gauge_link(&Params::standard(), &opts).passed());
    assert!(verify_system(SystemName::ARaw, &Params::standard(), &opts).passed());
}

#[test]
fn reports_are_deterministic_across_modes() {
    let p = Params::standard();
    let serial = run_checks(&involution_checks(), &p, &CheckOptions::default());
    let parallel = run_checks(
        &involution_checks(),
        &p,
        &CheckOptions {
            parallel: true,
            ..CheckOptions::default()
        },
    );
    assert_eq!(serial.to_json(), parallel.to_json());
    assert_eq!(serial.to_json(), run_checks(&involution_checks(), &p, &CheckOptions::default()).to_json());
}

#[test]
fn specialized_parameters_still_verify() {
    let p = Params::standard()
        .with_value("alpha", q(2, 1))
        .with_value("beta", q(0, 1))
        .with_value("gamma", q(0, 1));
    assert_eq!(gauge_constraints(&p)[0].as_constant(), Some(q(2, 1)));
    let r = verify_system(SystemName::AGauged, &p, &CheckOptions::default());
    assert!(r.passed());
}

fn small() -> impl Strategy<Value = i64> {
    -3i64..4
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn killing_tensors_commute_with_lb(c in proptest::collection::vec(small(), 6)) {
        let k = killing_basis(&ring());
        let forms = [
            &k.h * &k.h,
            &k.e * &k.e,
            &k.f * &k.f,
            &(&k.h * &k.e) + &(&k.e * &k.h),
            &(&k.h * &k.f) + &(&k.f * &k.h),
            &(&k.e * &k.f) + &(&k.f * &k.e),
        ];
        let kt = forms.iter().zip(&c).fold(DiffOp::zero(&ring()), |acc, (f, &n)| &acc + &f.scale(&q(n, 1)));
        prop_assert!(laplace_beltrami(&ring()).commutator(&kt).is_zero());
    }

    #[test]
    fn involution_acts_as_the_automorphism(a in small(), b in small(), c in small()) {
        let k = killing_basis(&ring());
        let v = &(&k.h.scale(&q(a, 1)) + &k.e.scale(&q(b, 1))) + &k.f.scale(&q(c, 1));
        let image = &(&k.h.scale(&q(-a, 1)) + &k.f.scale(&q(b, 1))) + &k.e.scale(&q(c, 1));
        let inv = RationalMap::involution(&ring());
        prop_assert!(inv.pullback(&v).unwrap().op_equal(&image));
    }

    #[test]
    fn raw_systems_commute_at_rational_constants(c0 in small(), c1 in small(), c2 in small(), d in 1i64..5) {
        let p = Params::standard()
            .with_value("c0", q(c0, d))
            .with_value("c1", q(c1, d))
            .with_value("c2", q(c2, d));
        for name in [SystemName::ARaw, SystemName::BRaw, SystemName::C] {
            let s = system(name, &p);
            prop_assert!(s.l.commutator(&s.i1).is_zero());
            prop_assert!(s.l.commutator(&s.i2).is_zero());
        }
    }
}
