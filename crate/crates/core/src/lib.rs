//! Exact computation with finite-dimensional Hopf algebras presented by
//! structure constants over cyclotomic fields: constructions (group
//! algebras, Taft algebras, Drinfeld doubles), integrals and distinguished
//! group-likes, antipode-order gradings, and machine verification of the
//! structural trace and dimension identities those objects satisfy.

pub mod constructions;
pub mod cyclotomic;
pub mod hopf;
pub mod interchange;
pub mod pipeline;
pub mod structure;
pub mod report;
pub mod spectral;

pub mod linalg;

pub use cyclotomic::{CycError, CycNumber, CycPoly, Rational};
pub use hopf::{FinHopfAlgebra, HopfElement, HopfError, HopfFunctional};
pub use linalg::{FieldMatrix, LinalgError, ProjectionFamily, SparseTensor3};
pub use report::{CheckEntry, CheckStatus, VerificationReport};
