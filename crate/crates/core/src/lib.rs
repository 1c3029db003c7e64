//! Bound quiver algebras, gentle algebras and their trivial extensions as
//! Brauer graph algebras, and support τ-tilting pairs of special biserial
//! algebras.
//!
//! Everything is generic over [`scalar::Scalar`]; the aliases below fix
//! exact rationals, which is what all shipped computations use.

pub mod brauer;
pub mod corpus;
pub mod fixtures;
pub mod gentle;
pub mod linalg;
pub mod presentation;
pub mod repmod;
pub mod scalar;
pub mod stt;

pub type Rational = num_rational::Ratio<i64>;
pub type Algebra = presentation::BoundAlgebra<Rational>;
pub type Module = repmod::RepModule<Rational>;
pub type RationalMatrix = linalg::Matrix<Rational>;
pub type ModuleCatalog = stt::Catalog<Rational>;
pub type Enumeration = stt::SttEnumeration<Rational>;
