//! Exact computation of Schur polynomial specializations, watermelon
//! lattice-path ensembles and boxed plane partitions, together with a
//! harness that checks the determinant and product identities relating
//! them as exact polynomial equalities.

pub mod exact_ring;
pub mod identities;
pub mod partitions;
pub mod paths;
pub mod planepartitions;
pub mod qcombinat;
pub mod schur;

pub use exact_ring::{BigInt, LaurentPoly, Matrix, PolyMatrix};
pub use identities::IdentityReport;
pub use partitions::Partition;
pub use paths::Watermelon;
pub use planepartitions::PlanePartition;
pub use schur::{GeometricPoint, Tableau};
