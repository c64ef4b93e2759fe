//! Executes a parsed script against the core library.
//!
//! Bindings are kept as expressions and evaluated afresh for every parameter
//! assignment, so assertions go through the same randomized pre-filter and
//! exact comparison as the built-in checks.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use opalg_core::anchors;
use opalg_core::check::{exact_witness, run_checks, Check, CheckOptions, Sides};
use opalg_core::diffop::{self, sqrt_monomial, AffineExponent, DiffOp, QuasiFunction};
use opalg_core::ladders::{
    build_lattice, chain_system, ef_construct, exponent_of, hw_construct, lambda_n, lowering, rep_matrices, weight,
};
use opalg_core::linalg::Matrix;
use opalg_core::ratfield::{q, Rational, RationalFunction, PARAMETERS};
use opalg_core::report::{Entry, Report};
use opalg_core::suite::paper_suite;
use opalg_core::systems::{
    cubic_rhs, i1_i3_rhs, i2_i3_rhs, killing_basis, system, verify_system, Params, SystemName,
};
use opalg_core::{Error, Result};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::dsl::{print_directive, print_expr, Arg, BinOp, CmpOp, Directive, Expr, Script, Stmt};

type Bindings = BTreeMap<String, Arc<Expr>>;

/// The parameter a DSL name refers to; Greek letters are accepted for the
/// first three.
pub fn parameter(name: &str) -> Option<&'static str> {
    let alias = match name {
        "α" => "alpha",
        "β" => "beta",
        "γ" => "gamma",
        other => other,
    };
    PARAMETERS.iter().copied().find(|p| *p == alias)
}

fn predeclared(name: &str) -> bool {
    name == "x" || name == "y" || parameter(name).is_some()
}

struct Eval<'a> {
    env: &'a Bindings,
    params: &'a Params,
    cache: HashMap<String, DiffOp>,
}

impl<'a> Eval<'a> {
    fn new(env: &'a Bindings, params: &'a Params) -> Self {
        Eval {
            env,
            params,
            cache: HashMap::new(),
        }
    }

    fn function(&mut self, e: &Expr) -> Result<RationalFunction> {
        self.eval(e)?.as_function().ok_or(Error::NotAFunction)
    }

    fn name(&mut self, n: &str) -> Result<DiffOp> {
        let ring = self.params.ring();
        if let Some(p) = parameter(n) {
            return Ok(DiffOp::function(self.params.get(p)));
        }
        match n {
            "x" => return Ok(DiffOp::function(diffop::x(ring))),
            "y" => return Ok(DiffOp::function(diffop::y(ring))),
            _ => {}
        }
        if let Some(v) = self.cache.get(n) {
            return Ok(v.clone());
        }
        let expr = self
            .env
            .get(n)
            .ok_or_else(|| Error::InvalidArgument(format!("unbound name `{n}`")))?
            .clone();
        let v = self.eval(&expr)?;
        self.cache.insert(n.to_string(), v.clone());
        Ok(v)
    }

    fn eval(&mut self, e: &Expr) -> Result<DiffOp> {
        let ring = self.params.ring().clone();
        Ok(match e {
            Expr::Num(n) => DiffOp::function(RationalFunction::constant(&ring, Rational::from_integer(n.clone()))),
            Expr::Name(n) => self.name(n)?,
            Expr::Dx => DiffOp::dx(&ring),
            Expr::Dy => DiffOp::dy(&ring),
            Expr::Sqrt(a) => DiffOp::function(sqrt_monomial(&self.function(a)?)?),
            Expr::Comm(a, b) => self.eval(a)?.commutator(&self.eval(b)?),
            Expr::Apply(a, f) => {
                let op = self.eval(a)?;
                DiffOp::function(op.apply_rf(&self.function(f)?))
            }
            Expr::Neg(a) => self.eval(a)?.scale(&q(-1, 1)),
            Expr::Pow(a, n) => self.eval(a)?.pow(*n),
            Expr::Bin(op, a, b) => {
                let a = self.eval(a)?;
                match op {
                    BinOp::Add => a.try_add(&self.eval(b)?)?,
                    BinOp::Sub => a.try_sub(&self.eval(b)?)?,
                    BinOp::Mul => a.compose(&self.eval(b)?),
                    BinOp::Div => a.mul_function(&self.function(b)?.recip()?),
                }
            }
        })
    }
}

/// Compares as functions when both sides have order zero.
fn sides(a: DiffOp, b: DiffOp) -> Sides {
    match (a.as_function(), b.as_function()) {
        (Some(f), Some(g)) => Sides::Values(f, g),
        _ => Sides::Ops(a, b),
    }
}

/// Passes when every labelled pair agrees, otherwise names the first
/// mismatch.
fn all_agree(pairs: Vec<(String, Sides)>) -> Sides {
    for (label, s) in pairs {
        if let Some(w) = exact_witness(&s) {
            return Sides::Claim {
                holds: false,
                detail: format!("{label}: {w}"),
            };
        }
    }
    Sides::Claim {
        holds: true,
        detail: String::new(),
    }
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(|v| v.to_string()).collect()
}

fn exponent(arg: &Arg, p: &Params) -> Result<AffineExponent> {
    match arg {
        Arg::Value(r) => Ok(AffineExponent::constant(r.clone())),
        Arg::Name(n) => {
            let name = parameter(n).ok_or_else(|| Error::InvalidArgument(format!("`{n}` is not a parameter")))?;
            exponent_of(p, name)
        }
    }
}

fn lattice_check(id: String, n: usize) -> Check {
    Check::new(id, "directive", anchors::LATTICE, move |p| {
        let row = build_lattice(n, p)?;
        let l = system(SystemName::AGauged, p).l;
        let pairs = row
            .entries
            .iter()
            .enumerate()
            .map(|(k, f)| Ok((format!("L P[{k}]"), Sides::Funcs(l.apply(f)?, f.mul_rf(&row.eigenvalue)))))
            .collect::<Result<Vec<_>>>()?;
        Ok(all_agree(pairs))
    })
}

fn lattice_data(n: usize, p: &Params) -> Result<Value> {
    let row = build_lattice(n, p)?;
    Ok(json!({
        "n": n,
        "eigenvalue": row.eigenvalue.to_string(),
        "entries": strings(&row.entries),
    }))
}

fn rep_check(id: String, n: usize) -> Check {
    Check::new(id, "directive", anchors::REPRESENTATION, move |p| {
        let r = rep_matrices(n, p)?;
        let pairs = vec![
            ("L".to_string(), Sides::Matrices(r.l.clone(), Matrix::scalar(n + 1, &lambda_n(n, p)))),
            ("[I1,I2]".to_string(), Sides::Matrices(r.i1.commutator(&r.i2)?, r.i3.clone())),
            ("[I1,I3]".to_string(), Sides::Matrices(r.i1.commutator(&r.i3)?, i1_i3_rhs(p, &r.l, &r.i1, &r.i2))),
            ("[I2,I3]".to_string(), Sides::Matrices(r.i2.commutator(&r.i3)?, i2_i3_rhs(p, &r.l, &r.i1, &r.i2))),
            ("I3^2".to_string(), Sides::Matrices(r.i3.try_mul(&r.i3)?, cubic_rhs(p, &r.l, &r.i1, &r.i2))),
        ];
        Ok(all_agree(pairs))
    })
}

fn rep_data(n: usize, p: &Params) -> Result<Value> {
    let r = rep_matrices(n, p)?;
    let mut out = serde_json::Map::new();
    out.insert("n".into(), json!(n));
    for (name, m) in r.named() {
        out.insert(name.into(), json!(m.to_strings()));
    }
    Ok(Value::Object(out))
}

fn hw_check(id: String, n: Rational, len: Option<usize>) -> Check {
    Check::new(id, "directive", anchors::HW_MODULE, move |p| {
        let m = hw_construct(p.ring(), &n, len)?;
        let k = killing_basis(p.ring());
        let mut pairs = Vec::new();
        for r in 1..=m.vectors.len() {
            let psi = m.psi(r);
            pairs.push((format!("H psi[{r}]"), Sides::Funcs(k.h.apply(&psi)?, psi.scale(&weight(&n, r)))));
            let lowered = m.psi(r - 1).scale(&lowering(&n, r));
            pairs.push((format!("E psi[{r}]"), Sides::Funcs(k.e.apply(&psi)?, lowered)));
        }
        if let Some(d) = m.finite_dimension().filter(|d| *d == m.vectors.len()) {
            pairs.push((format!("F psi[{d}]"), Sides::Funcs(k.f.apply(&m.psi(d))?, m.psi(d + 1))));
        }
        Ok(all_agree(pairs))
    })
}

fn hw_data(n: &Rational, len: Option<usize>, p: &Params) -> Result<Value> {
    let m = hw_construct(p.ring(), n, len)?;
    Ok(json!({
        "n": n.to_string(),
        "dimension": m.finite_dimension(),
        "vectors": strings(&m.vectors),
    }))
}

fn ef_check(id: String, pa: Arg, wa: Arg, len: usize) -> Check {
    Check::new(id, "directive", anchors::EF_EIGENVALUE, move |p| {
        let ring = p.ring();
        let (pe, we) = (exponent(&pa, p)?, exponent(&wa, p)?);
        let ch = ef_construct(ring, &pe, &we, len)?;
        let l = chain_system(ring, &pe)?.l;
        let h = killing_basis(ring).h;
        let w = we.to_rf(ring)?;
        let mut pairs = Vec::new();
        for (i, phi) in ch.vectors.iter().enumerate() {
            let k = i + 1;
            pairs.push((format!("L phi[{k}]"), Sides::Funcs(l.apply(phi)?, phi.mul_rf(&ch.eigenvalue))));
            let mu = &w - &RationalFunction::from_int(ring, 4 * i as i64);
            pairs.push((format!("H phi[{k}]"), Sides::Funcs(h.apply(phi)?, phi.mul_rf(&mu))));
        }
        Ok(all_agree(pairs))
    })
}

fn ef_data(pa: &Arg, wa: &Arg, len: usize, p: &Params) -> Result<Value> {
    let (pe, we) = (exponent(pa, p)?, exponent(wa, p)?);
    let ch = ef_construct(p.ring(), &pe, &we, len)?;
    Ok(json!({
        "p": pe.to_string(),
        "w": we.to_string(),
        "eigenvalue": ch.eigenvalue.to_string(),
        "vectors": strings::<QuasiFunction>(&ch.vectors),
    }))
}

/// Builds the data attached to a directive entry.
type DataFn = Box<dyn Fn(&Params) -> Result<Value> + Send + Sync>;

/// One unit of work in a script, run independently of the others.
enum Item {
    Done(Entry),
    Assert { check: Check, anchor: String },
    Construct { check: Check, data: DataFn },
    Verify(String),
    Suite,
}

impl Item {
    fn run(&self, params: &Params, opts: &CheckOptions) -> Vec<Entry> {
        match self {
            Item::Done(e) => vec![e.clone()],
            Item::Assert { check, anchor } => {
                let mut e = check.run(params, opts);
                e.paper_anchor = anchor.clone();
                vec![e]
            }
            Item::Construct { check, data } => {
                let e = check.run(params, opts);
                vec![match data(params) {
                    Ok(d) => e.with_data(d),
                    Err(_) => e,
                }]
            }
            Item::Verify(name) => match name.parse::<SystemName>() {
                Ok(s) => verify_system(s, params, opts).entries,
                Err(err) => vec![Entry::fail(format!("verify({name})"), "directive", "script", err.to_string())],
            },
            Item::Suite => run_checks(&paper_suite(), params, opts).entries,
        }
    }
}

fn directive_item(d: &Directive) -> Item {
    let id = print_directive(d);
    match d.clone() {
        Directive::BuildLattice(n) => Item::Construct {
            check: lattice_check(id, n),
            data: Box::new(move |p| lattice_data(n, p)),
        },
        Directive::RepMatrices(n) => Item::Construct {
            check: rep_check(id, n),
            data: Box::new(move |p| rep_data(n, p)),
        },
        Directive::Hw(n, len) => Item::Construct {
            check: hw_check(id, n.clone(), len),
            data: Box::new(move |p| hw_data(&n, len, p)),
        },
        Directive::EfChain { p, w, len } => {
            for a in [&p, &w] {
                if let Arg::Name(name) = a {
                    if parameter(name).is_none() {
                        return Item::Done(Entry::fail(id, "directive", "script", format!("`{name}` is not a parameter")));
                    }
                }
            }
            let (p2, w2) = (p.clone(), w.clone());
            Item::Construct {
                check: ef_check(id, p, w, len),
                data: Box::new(move |params| ef_data(&p2, &w2, len, params)),
            }
        }
        Directive::Verify(name) => Item::Verify(name),
        Directive::PaperSuite => Item::Suite,
    }
}

fn unbound<'e>(e: &'e Expr, env: &Bindings) -> Option<&'e str> {
    e.names().into_iter().find(|n| !predeclared(n) && !env.contains_key(*n))
}

/// Turns statements into items; bindings are resolved in order, so a name
/// must be bound before it is used.
fn items(script: &Script, params: &Params) -> Vec<Item> {
    let mut env = Bindings::new();
    let mut out = Vec::new();
    for st in &script.statements {
        let anchor = format!("script line {}", st.line);
        match &st.stmt {
            Stmt::Let { name, expr } => {
                let id = format!("let {name}");
                let problem = if predeclared(name) {
                    Some(format!("`{name}` is predeclared"))
                } else if env.contains_key(name) {
                    Some(format!("`{name}` is already bound"))
                } else if let Some(u) = unbound(expr, &env) {
                    Some(format!("unbound name `{u}`"))
                } else {
                    Eval::new(&env, params).eval(expr).err().map(|e| format!("error: {e}"))
                };
                match problem {
                    Some(w) => out.push(Item::Done(Entry::fail(id, "let", anchor, w))),
                    None => {
                        env.insert(name.clone(), Arc::new(expr.clone()));
                    }
                }
            }
            Stmt::Assert { lhs, op, rhs } => {
                let sym = match op {
                    CmpOp::Eq => "==",
                    CmpOp::Ne => "!=",
                };
                let id = format!("{} {sym} {}", print_expr(lhs), print_expr(rhs));
                if let Some(u) = unbound(lhs, &env).or_else(|| unbound(rhs, &env)) {
                    out.push(Item::Done(Entry::fail(id, "assert", anchor, format!("unbound name `{u}`"))));
                    continue;
                }
                let snapshot = Arc::new(env.clone());
                let (lhs, rhs, op) = (lhs.clone(), rhs.clone(), *op);
                let check = Check::new(id, "assert", "script", move |p| {
                    let mut ev = Eval::new(&snapshot, p);
                    let s = sides(ev.eval(&lhs)?, ev.eval(&rhs)?);
                    Ok(match op {
                        CmpOp::Eq => s,
                        CmpOp::Ne => Sides::Claim {
                            holds: exact_witness(&s).is_some(),
                            detail: "both sides are equal".into(),
                        },
                    })
                });
                out.push(Item::Assert { check, anchor });
            }
            Stmt::Directive(d) => out.push(directive_item(d)),
        }
    }
    out
}

/// Runs every statement; entries appear in statement order in both modes.
pub fn run_script(script: &Script, params: &Params, opts: &CheckOptions) -> Report {
    let items = items(script, params);
    let entries: Vec<Vec<Entry>> = if opts.parallel {
        items.par_iter().map(|it| it.run(params, opts)).collect()
    } else {
        items.iter().map(|it| it.run(params, opts)).collect()
    };
    entries.into_iter().flatten().collect()
}
