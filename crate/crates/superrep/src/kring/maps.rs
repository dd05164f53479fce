use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::registry::{class_of, GroupElement, IrreducibleRegistry};
use super::KringError;
use crate::exactnum::{integer_kernel, IntegerMatrix};
use crate::supermodule::{
    conjugate, delta, forget, morita_embed, parity_reverse, restrict_generator, tensor_modules, SuperModule,
};

#[derive(Clone, Debug)]
pub enum Functor {
    Pi,
    Dag,
    Delta,
    Forget,
    /// `i*`: drops the last e-generator.
    Restrict,
    /// `i*` composed with a Morita embedding, from degree `n` to `n − 1`
    /// through `n − 2`.
    WrapRestrict,
    TensorByFixedModule(Box<SuperModule>),
}

impl Functor {
    pub fn apply(&self, m: &SuperModule) -> Result<SuperModule, KringError> {
        Ok(match self {
            Functor::Pi => parity_reverse(m)?,
            Functor::Dag => conjugate(m),
            Functor::Delta => delta(m)?,
            Functor::Forget => forget(m)?,
            Functor::Restrict => restrict_generator(m)?,
            Functor::WrapRestrict => restrict_generator(&morita_embed(m)?)?,
            Functor::TensorByFixedModule(w) => tensor_modules(m, w)?,
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Functor::Pi => "Pi",
            Functor::Dag => "Dag",
            Functor::Delta => "Delta",
            Functor::Forget => "f",
            Functor::Restrict => "i*",
            Functor::WrapRestrict => "i*",
            Functor::TensorByFixedModule(_) => "tensor",
        }
    }
}

/// Column `j` is the class of the functor applied to source generator `j`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupMap {
    pub matrix: IntegerMatrix,
}

impl GroupMap {
    pub fn from_columns(columns: &[GroupElement], rows: usize) -> Self {
        let cols: Vec<Vec<BigInt>> = columns.iter().map(|c| c.padded(rows)).collect();
        GroupMap { matrix: IntegerMatrix::from_columns(&cols, rows) }
    }

    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.matrix.mul_vec(x)
    }
}

/// Extends `columns` to cover every generator of `source`; `target` may
/// grow. Returns whether it did.
pub(crate) fn extend_columns(
    functor: &Functor,
    source: &IrreducibleRegistry,
    target: &mut IrreducibleRegistry,
    columns: &mut Vec<GroupElement>,
) -> Result<bool, KringError> {
    let before = target.len();
    for j in columns.len()..source.len() {
        let image = functor.apply(source.module(j))?;
        columns.push(class_of(&image, target)?);
    }
    Ok(target.len() != before)
}

/// Integer matrix of `functor` between two registries. When `target` grows
/// the rows cover the grown registry.
pub fn map_matrix(
    functor: &Functor,
    source: &IrreducibleRegistry,
    target: &mut IrreducibleRegistry,
) -> Result<GroupMap, KringError> {
    let mut columns = Vec::new();
    extend_columns(functor, source, target, &mut columns)?;
    Ok(GroupMap::from_columns(&columns, target.len()))
}

/// `Π` (graded) or `†` (ungraded) as a permutation matrix on the registry.
pub fn involution_map(reg: &IrreducibleRegistry) -> GroupMap {
    let n = reg.len();
    GroupMap {
        matrix: IntegerMatrix::from_fn(n, n, |i, j| {
            if reg.pi_partner(j) == i {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        }),
    }
}

/// Basis (columns) of the `±1` eigenlattice of an involution matrix.
pub fn eigenlattice(pi: &GroupMap, sign: i64) -> Result<IntegerMatrix, KringError> {
    let a = &pi.matrix;
    let n = a.rows();
    if a.cols() != n || a.mul(a) != IntegerMatrix::identity(n) {
        return Err(KringError::NotInvolution);
    }
    let shifted = a.sub(&IntegerMatrix::identity(n).scale(&BigInt::from(sign)));
    Ok(integer_kernel(&shifted))
}
