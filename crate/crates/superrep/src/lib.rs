//! Representation groups of Lie superalgebras twisted by Clifford algebras,
//! computed with exact arithmetic.

pub mod algebra;
pub mod classify;
pub mod exactnum;
pub mod kring;
pub mod supermodule;
pub mod superspace;

pub use exactnum::{FieldTag, Gaussian, IntegerMatrix, Matrix, Rational};

/// Dense matrix over ℚ.
pub type QMatrix = Matrix<Rational>;
/// Dense matrix over ℚ(i).
pub type QiMatrix = Matrix<Gaussian>;
