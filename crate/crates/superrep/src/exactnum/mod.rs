//! Exact scalars, dense and sparse linear algebra over ℚ and ℚ(i), and
//! integer lattices.

mod integer;
mod matrix;
mod scalar;
mod sparse;

pub use integer::{
    hermite_columns, int_matrix, integer_kernel, lattice_compare, quotient_invariants,
    smith_normal_form, solve_integer, Hermite, IntegerMatrix, LatticeRelation, Smith,
};
pub use matrix::{Echelon, Matrix};
pub use scalar::{
    field_sqrt, format_gaussian, format_rational, gauss, gaussian_sqrt, imag_unit, is_real,
    parse_gaussian, parse_rational, rat, ratio, rational_sqrt, real, Field, FieldTag, Gaussian,
    Rational,
};
pub use sparse::SparseEliminator;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumError {
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("field mismatch: {0:?} vs {1:?}")]
    FieldMismatch(FieldTag, FieldTag),
    #[error("entry {0} is not in ℚ")]
    NotReal(String),
    #[error("shape mismatch: {0}x{1} vs {2}x{3}")]
    Shape(usize, usize, usize, usize),
}

/// Matrix over ℚ(i) tagged with the field its entries are meant to live in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    field: FieldTag,
    data: Matrix<Gaussian>,
}

impl ExactMatrix {
    pub fn new(field: FieldTag, data: Matrix<Gaussian>) -> Result<Self, NumError> {
        if let Some(z) = data.entries().find(|z| !field.admits(z)) {
            return Err(NumError::NotReal(format_gaussian(z)));
        }
        Ok(ExactMatrix { field, data })
    }

    pub fn parse(field: FieldTag, rows: &[Vec<String>]) -> Result<Self, NumError> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_gaussian(s)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let c = parsed.first().map_or(0, Vec::len);
        if let Some(bad) = parsed.iter().find(|r| r.len() != c) {
            return Err(NumError::Shape(parsed.len(), c, 1, bad.len()));
        }
        Self::new(field, Matrix::from_rows(parsed))
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn matrix(&self) -> &Matrix<Gaussian> {
        &self.data
    }

    pub fn into_matrix(self) -> Matrix<Gaussian> {
        self.data
    }

    pub fn text_rows(&self) -> Vec<Vec<String>> {
        (0..self.data.rows())
            .map(|i| self.data.row(i).iter().map(format_gaussian).collect())
            .collect()
    }

    fn same_field(&self, other: &Self) -> Result<(), NumError> {
        if self.field != other.field {
            return Err(NumError::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, NumError> {
        self.same_field(other)?;
        if self.data.cols() != other.data.rows() {
            return Err(NumError::Shape(
                self.data.rows(),
                self.data.cols(),
                other.data.rows(),
                other.data.cols(),
            ));
        }
        Ok(ExactMatrix { field: self.field, data: self.data.mul(&other.data) })
    }

    pub fn add(&self, other: &Self) -> Result<Self, NumError> {
        self.same_field(other)?;
        if (self.data.rows(), self.data.cols()) != (other.data.rows(), other.data.cols()) {
            return Err(NumError::Shape(
                self.data.rows(),
                self.data.cols(),
                other.data.rows(),
                other.data.cols(),
            ));
        }
        Ok(ExactMatrix { field: self.field, data: self.data.add(&other.data) })
    }

    pub fn rref(&self) -> (Self, Vec<usize>) {
        let e = self.data.rref();
        (ExactMatrix { field: self.field, data: e.reduced }, e.pivots)
    }

    pub fn kernel(&self) -> Vec<Vec<Gaussian>> {
        self.data.kernel()
    }
}
