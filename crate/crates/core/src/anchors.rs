//! Topic slugs attached to report entries.

pub const SL2: &str = "sl2-commutation";
pub const CASIMIR: &str = "casimir-laplace-beltrami";
pub const METRIC: &str = "laplace-beltrami-metric";
pub const KILLING_TENSORS: &str = "killing-tensors";
pub const AUTOMORPHISM: &str = "involution-automorphism";
pub const INVOLUTION: &str = "involution-invariance";
pub const RAW_SYSTEM: &str = "raw-potentials";
pub const GAUGED_SYSTEM: &str = "gauged-operators";
pub const TRANSFORMED_SYSTEM: &str = "transformed-system";
pub const EF_SYSTEM: &str = "ef-subcase";
pub const GAUGE: &str = "gauge-change";
pub const QUADRATIC_ALGEBRA: &str = "quadratic-algebra";
pub const CUBIC: &str = "cubic-relation";
pub const EF_ALGEBRA: &str = "ef-algebra";
pub const EF_CASIMIR: &str = "ef-casimir";
pub const EF_WEIGHT: &str = "ef-highest-weight";
pub const EF_EIGENVALUE: &str = "ef-eigenvalue";
pub const EF_TERMINATION: &str = "ef-termination";
pub const EF_EXAMPLE: &str = "ef-example";
pub const EF_REDUCTION: &str = "ef-reduction";
pub const SEED: &str = "lattice-seed";
pub const EIGENVALUE: &str = "lattice-eigenvalue";
pub const RX: &str = "rx-recursion";
pub const DESCENT: &str = "i2-descent";
pub const RY: &str = "ry-recursion";
pub const I1_ACTION: &str = "i1-action";
pub const LATTICE: &str = "lattice";
pub const LATTICE_EXAMPLES: &str = "lattice-examples";
pub const ADMISSIBLE: &str = "admissibility";
pub const REPRESENTATION: &str = "representation";
pub const LARGER_ALGEBRA: &str = "larger-lie-algebra";
pub const Q_FUNCTIONS: &str = "q-functions";
pub const HW_MODULE: &str = "hw-module";
pub const HW_CASIMIR: &str = "hw-casimir";
pub const HW_RECURSION: &str = "hw-recursion";
pub const HW_EXAMPLE: &str = "hw-example";
pub const NEGATIVE_CONTROL: &str = "negative-control";
