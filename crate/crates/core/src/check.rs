//! Named identity checks and the runner that turns them into a [`Report`].
//!
//! Each check is a builder from [`Params`] to the two sides of an identity.
//! The runner first builds the identity at random rational parameter values
//! and compares coefficients at random points; a mismatch there is already a
//! proof of failure. Otherwise the identity is rebuilt with the requested
//! parameters and compared exactly.

use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;

use crate::diffop::{DiffOp, QuasiFunction};
use crate::error::Result;
use crate::linalg::Matrix;
use crate::ratfield::{random_identity_check, RationalFunction};
use crate::report::{Entry, Report};
use crate::systems::Params;

const WITNESS_LIMIT: usize = 400;

/// The two sides of an identity, or an already decided claim.
#[derive(Clone, Debug)]
pub enum Sides {
    Ops(DiffOp, DiffOp),
    Funcs(QuasiFunction, QuasiFunction),
    Values(RationalFunction, RationalFunction),
    Matrices(Matrix, Matrix),
    Claim { holds: bool, detail: String },
}

pub type Builder = Arc<dyn Fn(&Params) -> Result<Sides> + Send + Sync>;

#[derive(Clone)]
pub struct Check {
    pub id: String,
    pub kind: &'static str,
    pub anchor: &'static str,
    build: Builder,
}

impl Check {
    pub fn new<F>(id: impl Into<String>, kind: &'static str, anchor: &'static str, build: F) -> Check
    where
        F: Fn(&Params) -> Result<Sides> + Send + Sync + 'static,
    {
        Check {
            id: id.into(),
            kind,
            anchor,
            build: Arc::new(build),
        }
    }

    /// The same check with its builder post-processed by `f`; used for
    /// perturbation controls.
    pub fn map<F>(self, f: F) -> Check
    where
        F: Fn(Sides) -> Sides + Send + Sync + 'static,
    {
        let inner = self.build.clone();
        Check {
            build: Arc::new(move |p| inner(p).map(&f)),
            ..self
        }
    }

    pub fn sides(&self, params: &Params) -> Result<Sides> {
        (self.build)(params)
    }

    pub fn run(&self, params: &Params, opts: &CheckOptions) -> Entry {
        let start = Instant::now();
        let mut entry = match self.decide(params, opts) {
            None => Entry::pass(&self.id, self.kind, self.anchor),
            Some(w) => Entry::fail(&self.id, self.kind, self.anchor, truncate(w)),
        };
        if opts.timing {
            entry.ms = start.elapsed().as_millis() as u64;
        }
        entry
    }

    /// `None` on success, otherwise a witness.
    fn decide(&self, params: &Params, opts: &CheckOptions) -> Option<String> {
        let seed = mix(opts.seed, &self.id);
        if !opts.exact_only {
            // a build error at random parameters may be a pole; the exact
            // stage decides
            if let Ok(sides) = self.sides(&params.randomized(seed)) {
                if let Some(w) = probe(&sides, seed) {
                    return Some(format!("pre-filter: {w}"));
                }
            }
        }
        match self.sides(params) {
            Err(e) => Some(format!("error: {e}")),
            Ok(sides) => exact_witness(&sides),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckOptions {
    pub seed: u64,
    pub exact_only: bool,
    pub parallel: bool,
    pub timing: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            seed: 1,
            exact_only: false,
            parallel: false,
            timing: false,
        }
    }
}

/// Runs every check; entries keep the order of `checks` in both modes.
pub fn run_checks(checks: &[Check], params: &Params, opts: &CheckOptions) -> Report {
    if opts.parallel {
        checks.par_iter().map(|c| c.run(params, opts)).collect::<Vec<_>>().into_iter().collect()
    } else {
        checks.iter().map(|c| c.run(params, opts)).collect()
    }
}

fn mix(seed: u64, id: &str) -> u64 {
    id.bytes()
        .fold(seed ^ 0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

fn truncate(mut s: String) -> String {
    if s.len() > WITNESS_LIMIT {
        let mut cut = WITNESS_LIMIT;
        while !s.is_char_boundary(cut) {
            cut -= 1;
        }
        s.truncate(cut);
        s.push_str("...");
    }
    s
}

fn probe(sides: &Sides, seed: u64) -> Option<String> {
    match sides {
        Sides::Ops(a, b) => {
            let keys: std::collections::BTreeSet<_> = a.terms().keys().chain(b.terms().keys()).collect();
            let differs = keys
                .into_iter()
                .any(|&k| !random_identity_check(&a.coefficient(k), &b.coefficient(k), 2, seed));
            differs.then(|| op_witness(a, b).unwrap_or_default())
        }
        Sides::Values(a, b) => (!random_identity_check(a, b, 2, seed)).then(|| value_witness(a, b)),
        Sides::Matrices(a, b) => {
            if (a.rows(), a.cols()) != (b.rows(), b.cols()) {
                return exact_witness(sides);
            }
            let differs = a
                .entries()
                .iter()
                .zip(b.entries())
                .any(|(x, y)| !random_identity_check(x, y, 2, seed));
            differs.then(|| exact_witness(sides).unwrap_or_default())
        }
        Sides::Funcs(..) | Sides::Claim { .. } => exact_witness(sides),
    }
}

/// The witness of an exact comparison, `None` when the sides agree.
pub fn exact_witness(sides: &Sides) -> Option<String> {
    match sides {
        Sides::Ops(a, b) => op_witness(a, b),
        Sides::Funcs(a, b) => func_witness(a, b),
        Sides::Values(a, b) => (!a.rf_equal(b)).then(|| value_witness(a, b)),
        Sides::Matrices(a, b) => {
            if (a.rows(), a.cols()) != (b.rows(), b.cols()) {
                return Some(format!("shape {}x{} vs {}x{}", a.rows(), a.cols(), b.rows(), b.cols()));
            }
            a.first_difference(b)
                .map(|(i, j, x, y)| format!("entry ({i},{j}): {x} vs {y}"))
        }
        Sides::Claim { holds, detail } => (!holds).then(|| detail.clone()),
    }
}

fn value_witness(a: &RationalFunction, b: &RationalFunction) -> String {
    format!("{a} vs {b}")
}

fn func_witness(a: &QuasiFunction, b: &QuasiFunction) -> Option<String> {
    if a.qf_equal(b) {
        return None;
    }
    Some(match a.try_sub(b) {
        Ok(d) => format!("difference {d}"),
        Err(_) => format!("{a} vs {b}"),
    })
}

/// The highest-order coefficient, in the `dx^i dy^j` basis, where the two
/// operators differ.
pub fn op_witness(a: &DiffOp, b: &DiffOp) -> Option<String> {
    if a.op_equal(b) {
        return None;
    }
    let (ta, tb) = (a.xy_terms(), b.xy_terms());
    let zero = RationalFunction::zero(a.ring());
    let mut keys: Vec<_> = ta.keys().chain(tb.keys()).copied().collect();
    keys.sort_by_key(|&(i, j)| std::cmp::Reverse((i + j, i)));
    keys.dedup();
    keys.into_iter().find_map(|k| {
        let ca = ta.get(&k).unwrap_or(&zero);
        let cb = tb.get(&k).unwrap_or(&zero);
        (!ca.rf_equal(cb)).then(|| format!("{}: {ca} vs {cb}", derivative_label(k)))
    })
}

pub fn derivative_label((i, j): (u32, u32)) -> String {
    let part = |name: &str, e: u32| match e {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{e}")),
    };
    let parts: Vec<String> = [part("dx", i), part("dy", j)].into_iter().flatten().collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}
