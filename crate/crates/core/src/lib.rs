//! Exact computation of the canonical objects attached to a finite-dimensional
//! bialgebra: the quotient `B⊘B`, the coinvariants `B⊠B`, n-antipodes, the
//! Hopf envelope and the cofree Hopf algebra.

pub mod bialgebra;
pub mod canonical;
pub mod coalgebra;
pub mod cofree;
pub mod convolution;
pub mod corpus;
pub mod envelope;
pub mod error;
pub mod families;
pub mod linalg;
pub mod monoid;
pub mod oracle;

pub use bialgebra::{morphism_check, Bialgebra, BialgebraMorphism, Side};
pub use canonical::{BoxslashSpace, FrobeniusReport, OslashSpace};
pub use coalgebra::{Axiom, AxiomReport, Coalgebra};
pub use convolution::{Endo, NAntipodeResult};
pub use envelope::{Direction, HopfResult};
pub use error::{Error, Result};
pub use linalg::{Field, Matrix, Scalar, Subspace};
