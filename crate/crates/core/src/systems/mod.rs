//! The catalogue of super-integrable systems on the constant-curvature
//! metric and the checks of their operator identities.

mod catalog;
mod gauge;
mod killing;
mod params;
mod relations;
mod verify;

pub use catalog::{system, system_by_name, SystemName, SystemSpec};
pub use gauge::{gauge_data, gauge_links, locked_gauge_constants, GaugeLink};
pub use killing::{
    casimir, killing_basis, laplace_beltrami, laplace_beltrami_from_metric, metric_inverse, Killing,
};
pub use params::{gauge_constraints, Params};
pub use relations::{
    cubic_rhs, ef_bracket_rhs, ef_casimir, ef_casimir_in_l, i1_i3_rhs, i2_i3_rhs, Algebra,
};
pub use verify::{
    catalog, commuting_checks, ef_algebra_checks, gauge_link_checks, involution_checks,
    killing_checks, quadratic_algebra_checks, system_checks, verify_commuting, verify_ef_algebra,
    verify_gauge_link, verify_involution_link, verify_quadratic_algebra, verify_system, SpecBuilder,
};


#[cfg(test)]
mod tests;
