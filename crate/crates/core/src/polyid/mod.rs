//! Multilinear polynomial identities of structure-constant algebras.
//!
//! [`fill_and_reduce`] finds every identity of a given degree by evaluating
//! all monomials at random arguments. The per-partition pipeline
//! ([`analyze`]) does the same inside each isotypic component of the
//! `S_n`-module of multilinear polynomials, where the matrices are far
//! smaller, and compares the result with the consequences of known
//! identities.

mod eval;
pub mod expr;
pub mod fill;
pub mod module;
pub mod named;
pub mod poly;
pub mod types;

pub use expr::Expr;
pub use fill::{fill_and_reduce, module_generators, module_span, new_generators, FillConfig, FillResult};
pub use module::{
    analyze, compute_allmat, compute_allmat_resumable, compute_oldmat, membership_test, new_identities,
    row_to_poly, Allmat, AllmatCheckpoint, IdentityModuleReport, Membership, OldmatBuilder, PartitionReport,
};
pub use named::{alternative_laws, lift_all, standard_polynomial, NamedIdentity};
pub use poly::{Monomial, MultilinearPoly, TypeBasis};
pub use types::{association_type, association_types, num_types, AssociationType};
