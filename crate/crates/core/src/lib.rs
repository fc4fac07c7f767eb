//! Virtual resolutions, multigraded regularity and rational curves over the
//! Cox ring of a product of projective spaces, with coefficients in GF(p).

pub mod betti;
pub mod cohomology;
pub mod complex;
pub mod curves;
pub mod error;
pub mod field;
pub mod groebner;
pub mod ideal;
pub mod linalg;
pub mod module;
pub mod monomial;
pub mod multidegree;
pub mod parse;
pub mod poly;
pub mod problem;
pub mod ring;
pub mod submodule;
pub mod virtual_res;

pub use betti::BettiTally;
pub use complex::ChainComplex;
pub use error::{AlgebraError, Result};
pub use field::{Coeff, PrimeField};
pub use ideal::Ideal;
pub use module::{FreeModule, Matrix};
pub use monomial::{Monomial, MonomialOrder};
pub use multidegree::Multidegree;
pub use poly::Polynomial;
pub use ring::MultigradedRing;
