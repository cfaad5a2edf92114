//! Computational representation theory of the symmetric group and
//! polynomial identities of finite-dimensional nonassociative algebras.
//!
//! The layers build on each other:
//!
//! * [`perm`] and [`tableau`]: permutations, partitions, standard tableaux.
//! * [`groupalg`] and [`repmat`]: the group algebra `F S_n`, its idempotents
//!   and matrix units, and the natural representation via Clifton matrices.
//! * [`linalg`]: exact dense linear algebra over a [`Field`].
//! * [`algebras`]: structure-constant algebras (octonions, matrix algebras).
//! * [`polyid`]: multilinear identities, fill-and-reduce and the
//!   per-partition module computations.
//!
//! Scalars are generic over [`Field`]; the crate ships [`Rational`] and the
//! prime fields [`Fp`].

pub mod algebras;
pub mod error;
pub mod groupalg;
pub mod linalg;
pub mod perm;
pub mod polyid;
pub mod repmat;
pub mod scalar;
pub mod tableau;


pub use algebras::{AlgebraElement, StructureAlgebra};
pub use error::{Error, Result};
pub use groupalg::{GroupAlgebraElement, MatrixUnits};
pub use linalg::{LeadingProfile, Matrix, RowReducer};
pub use perm::Permutation;
pub use scalar::{Field, Fp, Rational};
pub use tableau::{Partition, Tableau};

/// Residues modulo 101, the default modulus for identity computations.
pub type F101 = Fp<101>;

/// Dense matrix over `F_P`.
pub type MatrixModP<const P: u32> = Matrix<Fp<P>>;

/// Dense matrix over the rationals.
pub type RationalMatrix = Matrix<Rational>;
