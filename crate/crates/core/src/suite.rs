//! The full verification suite, grouped into numbered criteria, with
//! negative controls that must fail.

use std::sync::Arc;

use crate::anchors;
use crate::check::{exact_witness, run_checks, Check, CheckOptions, Sides};
use crate::diffop::{DiffOp, RationalMap};
use crate::ladders::{
    action_matrix, build_lattice, ef_checks, hw_checks, hw_construct, lambda_n, lattice_checks, lowering,
    q_lattice_checks, rep_checks,
};
use crate::linalg::Matrix;
use crate::ratfield::{q, RationalFunction};
use crate::report::Report;
use crate::systems::{
    catalog, commuting_checks, ef_algebra_checks, gauge_link_checks, gauge_links, i1_i3_rhs, involution_checks,
    killing_basis, killing_checks, laplace_beltrami, quadratic_algebra_checks, system, casimir, Params, SpecBuilder,
    SystemName,
};

pub struct Criterion {
    pub number: usize,
    pub title: &'static str,
    pub checks: Vec<Check>,
}

/// A control passes when the perturbed identity is refuted with a witness.
fn control<F>(id: &str, build: F) -> Check
where
    F: Fn(&Params) -> crate::Result<Sides> + Send + Sync + 'static,
{
    Check::new(format!("control.{id}"), "control", anchors::NEGATIVE_CONTROL, move |p| {
        let sides = build(p)?;
        Ok(match exact_witness(&sides) {
            Some(w) if !w.is_empty() => Sides::Claim {
                holds: true,
                detail: w,
            },
            _ => Sides::Claim {
                holds: false,
                detail: "perturbed identity still holds".into(),
            },
        })
    })
}

fn perturbed(name: SystemName, f: fn(&mut crate::systems::SystemSpec, &Params)) -> SpecBuilder {
    Arc::new(move |p| {
        let mut s = system(name, p);
        f(&mut s, p);
        s
    })
}

fn dx(p: &Params) -> DiffOp {
    DiffOp::dx(p.ring())
}

fn dy(p: &Params) -> DiffOp {
    DiffOp::dy(p.ring())
}

/// The sides of the first check produced by `checks`.
fn first_sides(checks: Vec<Check>, p: &Params) -> crate::Result<Sides> {
    checks.into_iter().next().expect("nonempty check list").sides(p)
}

/// Each control adds one term to one verified operator.
pub fn negative_controls() -> Vec<Check> {
    vec![
        control("sl2.[H,E+dx]", |p| {
            let k = killing_basis(p.ring());
            let e = &k.e + &dx(p);
            Ok(Sides::Ops(k.h.commutator(&e), e.scale(&q(2, 1))))
        }),
        control("casimir.L_b+dy", |p| {
            let k = killing_basis(p.ring());
            Ok(Sides::Ops(&laplace_beltrami(p.ring()) + &dy(p), casimir(&k)))
        }),
        control("A_gauged.I1+dy", |p| {
            first_sides(commuting_checks("A_gauged", perturbed(SystemName::AGauged, |s, p| s.i1 = &s.i1 + &dy(p))), p)
        }),
        control("C.L+y", |p| {
            let b = perturbed(SystemName::C, |s, p| s.l = &s.l + &DiffOp::function(crate::diffop::y(p.ring())));
            first_sides(commuting_checks("C", b), p)
        }),
        control("B.[I1,I3].I2+dx", |p| {
            let b = perturbed(SystemName::B, |s, p| s.i2 = &s.i2 + &dx(p));
            let s = b(p);
            Ok(Sides::Ops(s.i1.commutator(&s.i3()), i1_i3_rhs(p, &s.l, &s.i1, &s.i2)))
        }),
        control("gauge.c0+1", |p| {
            let good = p.clone().with_gauge_constraints();
            let broken = good.clone().with("c0", &good.get("c0") + &RationalFunction::one(p.ring()));
            let link = gauge_links(&broken)?.swap_remove(0);
            Ok(Sides::Claim {
                holds: link.constant_shift().is_some(),
                detail: format!("shift {}", link.shift),
            })
        }),
        control("involution.E->F+dy", |p| {
            let k = killing_basis(p.ring());
            Ok(Sides::Ops(RationalMap::involution(p.ring()).pullback(&k.e)?, &k.f + &dy(p)))
        }),
        control("lattice.n2.L+dy", |p| {
            let row = build_lattice(2, p)?;
            let l = &system(SystemName::AGauged, p).l + &dy(p);
            let f = row.entry(1);
            Ok(Sides::Funcs(l.apply(f)?, f.mul_rf(&lambda_n(2, p))))
        }),
        control("rep.n2.L+1", |p| {
            let row = build_lattice(2, p)?;
            let one = RationalFunction::one(p.ring());
            let shifted = &system(SystemName::AGauged, p).l + &DiffOp::function(one);
            let m = action_matrix(&shifted, &row.entries)?;
            Ok(Sides::Matrices(m, Matrix::scalar(3, &lambda_n(2, p))))
        }),
        control("C.[H,I1].I1+dy", |p| {
            let s = perturbed(SystemName::C, |s, p| s.i1 = &s.i1 + &dy(p))(p);
            let h = killing_basis(p.ring()).h;
            Ok(Sides::Ops(h.commutator(&s.i1), s.i1.scale(&q(4, 1))))
        }),
        control("hw.n2.E+dx", |p| {
            let m = hw_construct(p.ring(), &q(2, 1), None)?;
            let e = &killing_basis(p.ring()).e + &dx(p);
            Ok(Sides::Funcs(e.apply(&m.psi(2))?, m.psi(1).scale(&lowering(&q(2, 1), 2))))
        }),
    ]
}

/// The numbered acceptance criteria with their checks.
pub fn criteria() -> Vec<Criterion> {
    let (sl2, casimir_checks): (Vec<_>, Vec<_>) = killing_checks().into_iter().partition(|c| c.anchor == anchors::SL2);
    let commuting = SystemName::ALL
        .into_iter()
        .flat_map(|n| commuting_checks(n.as_str(), catalog(n)))
        .collect();
    let quadratic = [SystemName::AGauged, SystemName::B]
        .into_iter()
        .flat_map(|n| quadratic_algebra_checks(n.as_str(), catalog(n)))
        .collect();
    let (admissible, mut lattice): (Vec<_>, Vec<_>) =
        lattice_checks().into_iter().partition(|c| c.anchor == anchors::ADMISSIBLE);
    lattice.extend(q_lattice_checks());
    let mut ef = ef_algebra_checks(catalog(SystemName::C));
    ef.extend(ef_checks());
    let list: [(&str, Vec<Check>); 12] = [
        ("sl(2) relations", sl2),
        ("Casimir form of the Laplace-Beltrami operator", casimir_checks),
        ("commuting integrals", commuting),
        ("quadratic algebra and cubic relation", quadratic),
        ("gauge link", gauge_link_checks()),
        ("involution", involution_checks()),
        ("polynomial lattice", lattice),
        ("admissibility against the ansatz", admissible),
        ("representation matrices", rep_checks()),
        ("E, F algebra and its chains", ef),
        ("highest-weight modules", hw_checks()),
        ("negative controls", negative_controls()),
    ];
    list.into_iter()
        .enumerate()
        .map(|(i, (title, checks))| Criterion {
            number: i + 1,
            title,
            checks,
        })
        .collect()
}

/// Every check of every criterion, in criterion order.
pub fn paper_suite() -> Vec<Check> {
    criteria().into_iter().flat_map(|c| c.checks).collect()
}

/// Runs the criteria, one report each.
pub fn run_criteria(params: &Params, opts: &CheckOptions) -> Vec<(Criterion, Report)> {
    criteria()
        .into_iter()
        .map(|c| {
            let r = run_checks(&c.checks, params, opts);
            (c, r)
        })
        .collect()
}
