use crate::diffop::{QuasiFunction, RationalMap};
use crate::error::Result;
use crate::systems::Params;

use super::lattice::build_lattice;

/// `Q_{n-k,k}(x, y) = P_{n-k,k}((y - 1)^2/x, y)`, the lattice carried over by
/// the involution.
pub fn q_lattice(n: usize, params: &Params) -> Result<Vec<QuasiFunction>> {
    let map = RationalMap::involution(params.ring());
    build_lattice(n, params)?
        .entries
        .iter()
        .map(|p| map.substitute(p))
        .collect()
}
