//! Exact dense linear algebra and sparse tensors over Q(ζ_N): solving,
//! kernels, rank, operator order, and eigenprojections of finite-order
//! operators.

mod matrix;
mod projections;
mod sparse;
mod solve;
mod tensor;

pub use matrix::{dot, scale_vec, FieldMatrix};
pub use projections::{
    finite_order_eigenprojections, joint_refine, projections_for_eigenvalues, ProjectionFamily,
};
pub use solve::{
    inverse, kernel_basis, rank, restrict_kernel, solve_linear, weighted_sum, RowSpan,
    SolveOutcome,
};
pub use sparse::SparseSystem;
pub use tensor::SparseTensor3;

use crate::cyclotomic::CycError;

#[derive(Debug, Clone, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {context}")]
    DimensionMismatch { context: String },
    #[error("mixed cyclotomic orders: expected {expected}, found {found}")]
    MixedOrders { expected: u32, found: u32 },
    #[error(transparent)]
    Scalar(#[from] CycError),
    #[error("operator order exceeds cap {cap}")]
    OrderExceedsCap { cap: u32 },
    #[error("Q(zeta_{order}) lacks the {needed}-th roots of unity")]
    MissingRootsOfUnity { order: u32, needed: u32 },
    #[error("operators do not commute: {context}")]
    NonCommuting { context: String },
    #[error("operator is not annihilated by the given eigenvalue list")]
    NotAnnihilated,
    #[error("matrix power {power} is not the identity")]
    NotFiniteOrder { power: u32 },
    #[error("exact self-check failed: {context}")]
    SelfCheckFailed { context: String },
}
