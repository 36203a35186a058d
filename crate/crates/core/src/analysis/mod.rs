//! Error measures, closed-form error identities, convergence studies and
//! the inf-sup stability estimate.

mod function;
mod identities;
mod infsup;
mod norms;
mod study;

pub use function::{derivative_coefficients, FunctionSpec};
pub use identities::{
    predicted_error_cubic_at_node, predicted_error_cubic_at_tilde, predicted_error_quadratic,
    x_tilde,
};
pub use infsup::{dual_gram, estimate_inf_sup, jacobi_eigenvalues, MAX_INF_SUP_ELEMENTS};
pub use norms::{error_l2, error_l2_interior, error_max_nodal, NodeSet, Norm};
pub use study::{
    convergence_study, loglog_slope, pairwise_rate, ConvergenceRecord, Study, StudyConfig,
};
