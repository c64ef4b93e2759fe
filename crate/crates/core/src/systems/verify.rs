use std::sync::Arc;

use crate::anchors;
use crate::check::{run_checks, Check, CheckOptions, Sides};
use crate::diffop::{DiffOp, QuasiFunction, RationalMap};
use crate::error::{Error, Result};
use crate::ratfield::{q, RationalFunction};
use crate::report::Report;

use super::catalog::{system, SystemName, SystemSpec};
use super::gauge::{gauge_data, gauge_links, locked_gauge_constants};
use super::killing::{casimir, killing_basis, laplace_beltrami, laplace_beltrami_from_metric, metric_inverse, Coords};
use super::params::Params;
use super::relations::{cubic_rhs, ef_bracket_rhs, ef_casimir, ef_casimir_in_l, i1_i3_rhs, i2_i3_rhs};

/// Produces a system from parameter values; lets checks run on catalogue
/// systems and on deliberately altered ones alike.
pub type SpecBuilder = Arc<dyn Fn(&Params) -> SystemSpec + Send + Sync>;

pub fn catalog(name: SystemName) -> SpecBuilder {
    Arc::new(move |p| system(name, p))
}

fn ops(a: DiffOp, b: DiffOp) -> Result<Sides> {
    Ok(Sides::Ops(a, b))
}

fn zero(d: &DiffOp) -> DiffOp {
    DiffOp::zero(d.ring())
}

/// `sl(2)` relations, the Casimir form of `L_b`, the metric formula and the
/// commuting Killing tensors.
pub fn killing_checks() -> Vec<Check> {
    let k = |p: &Params| killing_basis(p.ring());
    let mut out = vec![
        Check::new("sl2.[H,E]=2E", "identity", anchors::SL2, move |p| {
            let k = k(p);
            ops(k.h.commutator(&k.e), k.e.scale(&q(2, 1)))
        }),
        Check::new("sl2.[H,F]=-2F", "identity", anchors::SL2, move |p| {
            let k = k(p);
            ops(k.h.commutator(&k.f), k.f.scale(&q(-2, 1)))
        }),
        Check::new("sl2.[E,F]=H", "identity", anchors::SL2, move |p| {
            let k = k(p);
            ops(k.e.commutator(&k.f), k.h)
        }),
        Check::new("casimir.metric=casimir", "identity", anchors::CASIMIR, move |p| {
            ops(laplace_beltrami_from_metric(&metric_inverse(p.ring()))?, casimir(&k(p)))
        }),
        Check::new("casimir.metric=explicit", "identity", anchors::METRIC, |p| {
            ops(laplace_beltrami_from_metric(&metric_inverse(p.ring()))?, laplace_beltrami(p.ring()))
        }),
        Check::new("casimir.dx-coefficient=3x/2", "value", anchors::CASIMIR, |p| {
            let lb = laplace_beltrami_from_metric(&metric_inverse(p.ring()))?;
            let c = Coords::new(p.ring());
            Ok(Sides::Values(lb.xy_terms()[&(1, 0)].clone(), c.x.scale(&q(3, 2))))
        }),
        Check::new("casimir.dy-coefficient=(3y-1)/2", "value", anchors::CASIMIR, |p| {
            let lb = laplace_beltrami_from_metric(&metric_inverse(p.ring()))?;
            let c = Coords::new(p.ring());
            let v = (&c.y.scale(&q(3, 1)) - &c.one).scale(&q(1, 2));
            Ok(Sides::Values(lb.xy_terms()[&(0, 1)].clone(), v))
        }),
        Check::new("casimir.H.x=4x", "eigen", anchors::SL2, move |p| {
            let x = QuasiFunction::rational(crate::diffop::x(p.ring()));
            Ok(Sides::Funcs(k(p).h.apply(&x)?, x.scale(&q(4, 1))))
        }),
    ];
    type Pick = fn(&super::Killing) -> DiffOp;
    let forms: [(&str, Pick); 6] = [
        ("H^2", |k| &k.h * &k.h),
        ("E^2", |k| &k.e * &k.e),
        ("F^2", |k| &k.f * &k.f),
        ("HE+EH", |k| &(&k.h * &k.e) + &(&k.e * &k.h)),
        ("HF+FH", |k| &(&k.h * &k.f) + &(&k.f * &k.h)),
        ("EF+FE", |k| &(&k.e * &k.f) + &(&k.f * &k.e)),
    ];
    for (name, form) in forms {
        out.push(Check::new(
            format!("killing.[L_b,{name}]=0"),
            "identity",
            anchors::KILLING_TENSORS,
            move |p| {
                let lb = laplace_beltrami(p.ring());
                let c = lb.commutator(&form(&k(p)));
                ops(c, zero(&lb))
            },
        ));
    }
    out
}

fn commuting_anchor(label: &str) -> &'static str {
    match label {
        "A_raw" | "B_raw" => anchors::RAW_SYSTEM,
        "A_gauged" => anchors::GAUGED_SYSTEM,
        "B" => anchors::TRANSFORMED_SYSTEM,
        _ => anchors::EF_SYSTEM,
    }
}

/// `[L, I1] = [L, I2] = 0`.
pub fn commuting_checks(label: &str, build: SpecBuilder) -> Vec<Check> {
    let anchor = commuting_anchor(label);
    let b2 = build.clone();
    vec![
        Check::new(format!("{label}.[L,I1]=0"), "identity", anchor, move |p| {
            let s = build(p);
            ops(s.l.commutator(&s.i1), zero(&s.l))
        }),
        Check::new(format!("{label}.[L,I2]=0"), "identity", anchor, move |p| {
            let s = b2(p);
            ops(s.l.commutator(&s.i2), zero(&s.l))
        }),
    ]
}

/// The quadratic algebra closed by `I3 = [I1, I2]` and the cubic relation
/// satisfied by `I3^2`.
pub fn quadratic_algebra_checks(label: &str, build: SpecBuilder) -> Vec<Check> {
    let b = [build.clone(), build.clone(), build.clone(), build.clone(), build];
    let [b0, b1, b2, b3, b4] = b;
    vec![
        Check::new(format!("{label}.[L,I3]=0"), "identity", anchors::QUADRATIC_ALGEBRA, move |p| {
            let s = b0(p);
            ops(s.l.commutator(&s.i3()), zero(&s.l))
        }),
        Check::new(format!("{label}.[I1,I3]"), "identity", anchors::QUADRATIC_ALGEBRA, move |p| {
            let s = b1(p);
            ops(s.i1.commutator(&s.i3()), i1_i3_rhs(p, &s.l, &s.i1, &s.i2))
        }),
        Check::new(format!("{label}.[I2,I3]"), "identity", anchors::QUADRATIC_ALGEBRA, move |p| {
            let s = b2(p);
            ops(s.i2.commutator(&s.i3()), i2_i3_rhs(p, &s.l, &s.i1, &s.i2))
        }),
        Check::new(format!("{label}.I3^2"), "identity", anchors::CUBIC, move |p| {
            let s = b3(p);
            let i3 = s.i3();
            ops(&i3 * &i3, cubic_rhs(p, &s.l, &s.i1, &s.i2))
        }),
        Check::new(format!("{label}.[I1,I3]@alpha=0"), "identity", anchors::QUADRATIC_ALGEBRA, move |p| {
            let p = p.clone().with_value("alpha", q(0, 1));
            let s = b4(&p);
            ops(s.i1.commutator(&s.i3()), (&s.i1 * &s.i1).scale(&q(2, 1)))
        }),
    ]
}

type SpecSides = Box<dyn Fn(&Params, SystemSpec) -> Result<Sides> + Send + Sync>;

/// The algebra of `L`, `I1`, `I2`, `H` for system `C`, its Casimir, the
/// involution symmetry and the zero-potential reduction.
pub fn ef_algebra_checks(build: SpecBuilder) -> Vec<Check> {
    let h = |p: &Params| killing_basis(p.ring()).h;
    let mut out = Vec::new();
    let mut add = |id: &str, anchor: &'static str, f: SpecSides| {
        let b = build.clone();
        out.push(Check::new(format!("C.{id}"), "identity", anchor, move |p| f(p, b(p))));
    };
    add("[H,I1]=4I1", anchors::EF_ALGEBRA, Box::new(move |p, s| ops(h(p).commutator(&s.i1), s.i1.scale(&q(4, 1)))));
    add("[H,I2]=-4I2", anchors::EF_ALGEBRA, Box::new(move |p, s| ops(h(p).commutator(&s.i2), s.i2.scale(&q(-4, 1)))));
    add("[L,H]=0", anchors::EF_ALGEBRA, Box::new(move |p, s| ops(s.l.commutator(&h(p)), zero(&s.l))));
    add(
        "[I1,I2]",
        anchors::EF_ALGEBRA,
        Box::new(move |p, s| ops(s.i1.commutator(&s.i2), ef_bracket_rhs(p, &s.l, &h(p)))),
    );
    add(
        "casimir",
        anchors::EF_CASIMIR,
        Box::new(move |p, s| ops(ef_casimir(p, &s.l, &s.i1, &s.i2, &h(p)), ef_casimir_in_l(p, &s.l))),
    );
    let inv = |p: &Params| RationalMap::involution(p.ring());
    add("involution.L", anchors::EF_ALGEBRA, Box::new(move |p, s| ops(inv(p).pullback(&s.l)?, s.l)));
    add("involution.I1->I2", anchors::EF_ALGEBRA, Box::new(move |p, s| ops(inv(p).pullback(&s.i1)?, s.i2)));
    add("involution.I2->I1", anchors::EF_ALGEBRA, Box::new(move |p, s| ops(inv(p).pullback(&s.i2)?, s.i1)));
    add("involution.H->-H", anchors::EF_ALGEBRA, Box::new(move |p, _| ops(inv(p).pullback(&h(p))?, -&h(p))));
    add(
        "c1=0.I1=E^2",
        anchors::EF_SYSTEM,
        Box::new(|p, _| {
            let s = system(SystemName::C, &p.clone().with_value("c1", q(0, 1)));
            let k = killing_basis(p.ring());
            ops(s.i1, &k.e * &k.e)
        }),
    );
    add(
        "c1=0.I2=F^2",
        anchors::EF_SYSTEM,
        Box::new(|p, _| {
            let s = system(SystemName::C, &p.clone().with_value("c1", q(0, 1)));
            let k = killing_basis(p.ring());
            ops(s.i2, &k.f * &k.f)
        }),
    );
    out
}

/// Conjugating the raw system by the gauge factor gives the gauged system
/// up to the locked factors and parameter-only shifts.
pub fn gauge_link_checks() -> Vec<Check> {
    let mut out = vec![Check::new("gauge.exact", "claim", anchors::GAUGE, |p| {
        let ok = gauge_data(p).is_ok();
        Ok(Sides::Claim {
            holds: ok,
            detail: "d log G is not closed".into(),
        })
    })];
    for (i, name) in ["L", "I1", "I2"].into_iter().enumerate() {
        out.push(Check::new(format!("gauge.{name}.shift-is-constant"), "claim", anchors::GAUGE, move |p| {
            let p = p.clone().with_gauge_constraints();
            let link = gauge_links(&p)?.swap_remove(i);
            let holds = link.constant_shift().is_some();
            Ok(Sides::Claim {
                holds,
                detail: format!("shift {} depends on the coordinates", link.shift),
            })
        }));
        out.push(Check::new(format!("gauge.{name}.locked"), "identity", anchors::GAUGE, move |p| {
            let p = p.clone().with_gauge_constraints();
            let (_, factor, shift) = locked_gauge_constants(&p)[i].clone();
            let link = gauge_links(&p)?.swap_remove(i);
            let expected = &link.gauged.mul_function(&factor) + &DiffOp::function(shift);
            ops(link.conjugated, expected)
        }));
    }
    out.push(Check::new("gauge.L.shift@alpha=beta=gamma=0", "value", anchors::GAUGE, |p| {
        let p = zero_abg(p, q(0, 1), q(0, 1));
        let shift = gauge_links(&p)?[0].constant_shift().ok_or(Error::InexactGauge)?;
        Ok(Sides::Values(shift, RationalFunction::constant(p.ring(), q(3, 16))))
    }));
    out.push(Check::new("gauge.L.shift@trivial-gauge", "value", anchors::GAUGE, |p| {
        // alpha = 0, beta = 3/2, gamma = -1/2 makes G = 1 and every c_i = 0
        let p = zero_abg(p, q(3, 2), q(-1, 2));
        let shift = gauge_links(&p)?[0].constant_shift().ok_or(Error::InexactGauge)?;
        Ok(Sides::Values(shift, RationalFunction::zero(p.ring())))
    }));
    out
}

fn zero_abg(p: &Params, beta: crate::ratfield::Rational, gamma: crate::ratfield::Rational) -> Params {
    p.clone()
        .with_value("alpha", q(0, 1))
        .with_value("beta", beta)
        .with_value("gamma", gamma)
        .with_gauge_constraints()
}

/// The involution fixes `L_b`, realizes `E <-> F`, `H -> -H`, and carries
/// each `A` operator to its `B` counterpart.
pub fn involution_checks() -> Vec<Check> {
    let inv = |p: &Params| RationalMap::involution(p.ring());
    let k = |p: &Params| killing_basis(p.ring());
    let mut out = vec![
        Check::new("involution.squares-to-identity", "claim", anchors::INVOLUTION, move |p| {
            Ok(Sides::Claim {
                holds: inv(p).is_verified_involution(),
                detail: "map composed with itself is not the identity".into(),
            })
        }),
        Check::new("involution.L_b", "identity", anchors::INVOLUTION, move |p| {
            let lb = laplace_beltrami(p.ring());
            ops(inv(p).pullback(&lb)?, lb)
        }),
        Check::new("involution.H->-H", "identity", anchors::AUTOMORPHISM, move |p| {
            let k = k(p);
            ops(inv(p).pullback(&k.h)?, -&k.h)
        }),
        Check::new("involution.E->F", "identity", anchors::AUTOMORPHISM, move |p| {
            let k = k(p);
            ops(inv(p).pullback(&k.e)?, k.f)
        }),
        Check::new("involution.F->E", "identity", anchors::AUTOMORPHISM, move |p| {
            let k = k(p);
            ops(inv(p).pullback(&k.f)?, k.e)
        }),
    ];
    for (from, to) in [(SystemName::ARaw, SystemName::BRaw), (SystemName::AGauged, SystemName::B)] {
        for op in ["L", "I1", "I2"] {
            out.push(Check::new(
                format!("involution.{from}.{op}->{to}.{op}"),
                "identity",
                anchors::TRANSFORMED_SYSTEM,
                move |p| {
                    let (a, b) = (system(from, p), system(to, p));
                    let pick = |s: &SystemSpec| match op {
                        "L" => s.l.clone(),
                        "I1" => s.i1.clone(),
                        _ => s.i2.clone(),
                    };
                    ops(inv(p).pullback(&pick(&a))?, pick(&b))
                },
            ));
        }
    }
    out
}

/// All operator-identity checks on the catalogue systems.
pub fn system_checks() -> Vec<Check> {
    let mut out = killing_checks();
    for name in [SystemName::ARaw, SystemName::AGauged, SystemName::BRaw, SystemName::B, SystemName::C] {
        out.extend(commuting_checks(name.as_str(), catalog(name)));
    }
    for name in [SystemName::AGauged, SystemName::B] {
        out.extend(quadratic_algebra_checks(name.as_str(), catalog(name)));
    }
    out.extend(ef_algebra_checks(catalog(SystemName::C)));
    out.extend(gauge_link_checks());
    out.extend(involution_checks());
    out
}

pub fn verify_commuting(name: SystemName, params: &Params, opts: &CheckOptions) -> Report {
    run_checks(&commuting_checks(name.as_str(), catalog(name)), params, opts)
}

pub fn verify_quadratic_algebra(name: SystemName, params: &Params, opts: &CheckOptions) -> Result<Report> {
    if !matches!(name, SystemName::AGauged | SystemName::B) {
        return Err(Error::InvalidArgument(format!(
            "the quadratic algebra is defined for A_gauged and B, not {name}"
        )));
    }
    Ok(run_checks(&quadratic_algebra_checks(name.as_str(), catalog(name)), params, opts))
}

pub fn verify_ef_algebra(params: &Params, opts: &CheckOptions) -> Report {
    run_checks(&ef_algebra_checks(catalog(SystemName::C)), params, opts)
}

pub fn verify_gauge_link(params: &Params, opts: &CheckOptions) -> Report {
    run_checks(&gauge_link_checks(), params, opts)
}

pub fn verify_involution_link(params: &Params, opts: &CheckOptions) -> Report {
    run_checks(&involution_checks(), params, opts)
}

/// Every check relevant to one system.
pub fn verify_system(name: SystemName, params: &Params, opts: &CheckOptions) -> Report {
    let mut checks = commuting_checks(name.as_str(), catalog(name));
    match name {
        SystemName::AGauged | SystemName::B => checks.extend(quadratic_algebra_checks(name.as_str(), catalog(name))),
        SystemName::C => checks.extend(ef_algebra_checks(catalog(name))),
        SystemName::ARaw => checks.extend(gauge_link_checks()),
        SystemName::BRaw => {}
    }
    run_checks(&checks, params, opts)
}
