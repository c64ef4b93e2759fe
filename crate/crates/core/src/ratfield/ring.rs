use std::fmt;
use std::sync::{Arc, LazyLock};

use crate::error::{Error, Result};

use super::monomial::MAX_VARS;

/// Names of the standard indeterminates, in monomial-order priority.
///
/// `xi` and `eta` are the internal coordinates with `x = xi^2`, `y = eta^2`.
pub const STANDARD_VARS: [&str; 11] = [
    "xi", "eta", "alpha", "beta", "gamma", "c0", "c1", "c2", "m", "p", "w",
];

/// Parameters of the standard ring (everything but the two coordinates).
pub const PARAMETERS: [&str; 9] = ["alpha", "beta", "gamma", "c0", "c1", "c2", "m", "p", "w"];

static STANDARD: LazyLock<Arc<Ring>> = LazyLock::new(|| {
    let mut ring = Ring::new(&STANDARD_VARS).expect("standard ring");
    ring.half_power[0] = Some("x".to_string());
    ring.half_power[1] = Some("y".to_string());
    Arc::new(ring)
});

/// An ordered list of indeterminates.
///
/// The first two indeterminates are the coordinates differentiated by
/// [`crate::diffop::DiffOp`]. A variable may carry a "half power" display
/// name: `xi` with half-power name `x` prints `xi^2` as `x`.
#[derive(Clone, PartialEq, Eq)]
pub struct Ring {
    names: Vec<String>,
    display: Vec<String>,
    half_power: Vec<Option<String>>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Ring> {
        if names.len() > MAX_VARS {
            return Err(Error::TooManyIndeterminates(names.len(), MAX_VARS));
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        Ok(Ring {
            display: names.clone(),
            half_power: vec![None; names.len()],
            names,
        })
    }

    /// The shared workbench ring over [`STANDARD_VARS`].
    pub fn standard() -> Arc<Ring> {
        STANDARD.clone()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index(name)
            .ok_or_else(|| Error::UnknownIndeterminate(name.to_string()))
    }

    pub(crate) fn display_name(&self, i: usize) -> &str {
        &self.display[i]
    }

    pub(crate) fn half_power_name(&self, i: usize) -> Option<&str> {
        self.half_power[i].as_deref()
    }

    pub fn compatible(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
        Arc::ptr_eq(a, b) || a.names == b.names
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring{:?}", self.names)
    }
}
