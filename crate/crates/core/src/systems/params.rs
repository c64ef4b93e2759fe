use std::collections::BTreeMap;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::ratfield::{q, random_rational, Rational, RationalFunction, Ring, PARAMETERS};

/// Values for the named parameters: each is either the symbolic
/// indeterminate itself or a specialization.
#[derive(Clone, Debug)]
pub struct Params {
    ring: Arc<Ring>,
    values: BTreeMap<String, RationalFunction>,
}

impl Params {
    /// Every parameter of the ring left symbolic.
    pub fn symbolic(ring: &Arc<Ring>) -> Params {
        let values = PARAMETERS
            .iter()
            .filter_map(|&name| Some((name.to_string(), RationalFunction::var(ring, name).ok()?)))
            .collect();
        Params {
            ring: ring.clone(),
            values,
        }
    }

    pub fn standard() -> Params {
        Params::symbolic(&Ring::standard())
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn with(mut self, name: &str, value: RationalFunction) -> Params {
        self.values.insert(name.to_string(), value);
        self
    }

    pub fn with_value(self, name: &str, value: Rational) -> Params {
        let v = RationalFunction::constant(&self.ring, value);
        self.with(name, v)
    }

    pub fn get(&self, name: &str) -> RationalFunction {
        self.values
            .get(name)
            .cloned()
            .unwrap_or_else(|| RationalFunction::var(&self.ring, name).expect("known parameter"))
    }

    /// The value of `name` if it has been specialized to a constant.
    pub fn constant(&self, name: &str) -> Option<Rational> {
        self.values.get(name).and_then(|v| v.as_constant())
    }

    /// All parameters specialized to a constant.
    pub fn constants(&self) -> Vec<(&str, Rational)> {
        self.values
            .iter()
            .filter_map(|(k, v)| Some((k.as_str(), v.as_constant()?)))
            .collect()
    }

    /// Replaces every parameter that is still a plain indeterminate by a
    /// random rational; derived values (e.g. `c1` tied to `m`) are
    /// re-evaluated at the drawn point.
    pub fn randomized(&self, seed: u64) -> Params {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut draws: Vec<(usize, Rational)> = Vec::new();
        for name in PARAMETERS {
            if let Some(i) = self.ring.index(name) {
                draws.push((i, random_rational(&mut rng)));
            }
        }
        let values = self
            .values
            .iter()
            .map(|(k, v)| {
                let s = v.specialize(&draws).unwrap_or_else(|_| v.clone());
                (k.clone(), s)
            })
            .collect();
        Params {
            ring: self.ring.clone(),
            values,
        }
    }

    /// Ties `c0`, `c1`, `c2` to `alpha`, `beta`, `gamma` as required by the
    /// gauge that produces the Krall–Sheffer form.
    pub fn with_gauge_constraints(self) -> Params {
        let [c0, c1, c2] = gauge_constraints(&self);
        self.with("c0", c0).with("c1", c1).with("c2", c2)
    }

    /// `c1 = (m^2 - 1)/16`.
    pub fn with_c1_from_m(self) -> Params {
        let m = self.get("m");
        let c1 = (&(&m * &m) - &RationalFunction::one(&self.ring)).scale(&q(1, 16));
        self.with("c1", c1)
    }

    /// `m = 4p - 1`, together with `c1 = (m^2 - 1)/16`.
    pub fn with_m_from_p(self) -> Params {
        let m = &self.get("p").scale(&q(4, 1)) - &RationalFunction::one(&self.ring);
        self.with("m", m).with_c1_from_m()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.values.keys().map(|k| k.as_str())
    }
}

/// `[c0, c1, c2] = [alpha(2 - beta - gamma)/2, (2 gamma + 1)(2 gamma + 3)/16, alpha^2/4]`.
pub fn gauge_constraints(p: &Params) -> [RationalFunction; 3] {
    let ring = p.ring();
    let one = RationalFunction::one(ring);
    let two = RationalFunction::from_int(ring, 2);
    let (a, b, g) = (p.get("alpha"), p.get("beta"), p.get("gamma"));
    let c0 = (&a * &(&(&two - &b) - &g)).scale(&q(1, 2));
    let c1 = (&(&g.scale(&q(2, 1)) + &one) * &(&g.scale(&q(2, 1)) + &RationalFunction::from_int(ring, 3)))
        .scale(&q(1, 16));
    let c2 = (&a * &a).scale(&q(1, 4));
    [c0, c1, c2]
}
