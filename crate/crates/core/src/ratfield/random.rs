use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{RationalFunction, Rational};

const MAX_REDRAWS: usize = 64;

/// A random rational with numerator and denominator uniform in `[1, 10^4]`.
pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    let n: i64 = rng.gen_range(1..=10_000);
    let d: i64 = rng.gen_range(1..=10_000);
    Rational::new(n.into(), d.into())
}

/// Probabilistic check that `a - b` vanishes identically.
///
/// Evaluates both sides at `trials` random points, redrawing points that hit
/// a pole. A `false` result is a certificate of inequality; `true` is only
/// evidence and should be confirmed with [`RationalFunction::rf_equal`].
pub fn random_identity_check(
    a: &RationalFunction,
    b: &RationalFunction,
    trials: usize,
    seed: u64,
) -> bool {
    let n = a.ring().len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials.max(1) {
        let mut evaluated = false;
        for _ in 0..MAX_REDRAWS {
            let point: Vec<Rational> = (0..n).map(|_| random_rational(&mut rng)).collect();
            if let (Ok(va), Ok(vb)) = (a.evaluate(&point), b.evaluate(&point)) {
                if va != vb {
                    return false;
                }
                evaluated = true;
                break;
            }
        }
        if !evaluated {
            // every draw hit a pole; defer to the exact check
            return a.rf_equal(b);
        }
    }
    true
}
