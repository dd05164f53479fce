//! Super vector spaces with a fixed basis order (even block, then odd block),
//! homogeneous maps and the Koszul sign rule for tensor products.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactnum::{FieldTag, Gaussian, Matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn add(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

/// `(−1)^{|p||q|}`.
pub fn koszul_sign(p: Parity, q: Parity) -> i32 {
    if p.is_odd() && q.is_odd() {
        -1
    } else {
        1
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpaceError {
    #[error("field mismatch: {0:?} vs {1:?}")]
    FieldMismatch(FieldTag, FieldTag),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: String, got: String },
    #[error("map is not homogeneous of parity {0:?}")]
    NotHomogeneous(Parity),
    #[error("entry outside the field {0:?}")]
    OutsideField(FieldTag),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SuperSpace {
    pub even: usize,
    pub odd: usize,
    pub field: FieldTag,
}

impl SuperSpace {
    pub fn new(even: usize, odd: usize, field: FieldTag) -> Self {
        SuperSpace { even, odd, field }
    }

    pub fn dim(&self) -> usize {
        self.even + self.odd
    }

    pub fn parity_of(&self, i: usize) -> Parity {
        if i < self.even {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn indices(&self, p: Parity) -> std::ops::Range<usize> {
        match p {
            Parity::Even => 0..self.even,
            Parity::Odd => self.even..self.dim(),
        }
    }

    /// `(−1)^F`: `+1` on the even block, `−1` on the odd block.
    pub fn grading(&self) -> Matrix<Gaussian> {
        Matrix::from_fn(self.dim(), self.dim(), |i, j| {
            if i != j {
                Gaussian::zero()
            } else if i < self.even {
                Gaussian::one()
            } else {
                -Gaussian::one()
            }
        })
    }

    pub fn identity(&self) -> GradedMap {
        GradedMap {
            source: *self,
            target: *self,
            matrix: Matrix::identity(self.dim()),
            parity: Parity::Even,
        }
    }

    pub fn display(&self) -> String {
        format!("({}|{})", self.even, self.odd)
    }
}

/// Whether `m: source → target` has the block pattern of parity `p`.
pub fn has_parity(m: &Matrix<Gaussian>, source: &SuperSpace, target: &SuperSpace, p: Parity) -> bool {
    (0..target.dim()).all(|i| {
        (0..source.dim()).all(|j| {
            m[(i, j)].is_zero() || target.parity_of(i).add(source.parity_of(j)) == p
        })
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    pub source: SuperSpace,
    pub target: SuperSpace,
    pub matrix: Matrix<Gaussian>,
    pub parity: Parity,
}

impl GradedMap {
    pub fn new(
        source: SuperSpace,
        target: SuperSpace,
        matrix: Matrix<Gaussian>,
        parity: Parity,
    ) -> Result<Self, SpaceError> {
        if source.field != target.field {
            return Err(SpaceError::FieldMismatch(source.field, target.field));
        }
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(SpaceError::Dimension {
                expected: format!("{}x{}", target.dim(), source.dim()),
                got: format!("{}x{}", matrix.rows(), matrix.cols()),
            });
        }
        if matrix.entries().any(|z| !source.field.admits(z)) {
            return Err(SpaceError::OutsideField(source.field));
        }
        if !has_parity(&matrix, &source, &target, parity) {
            return Err(SpaceError::NotHomogeneous(parity));
        }
        Ok(GradedMap { source, target, matrix, parity })
    }

    pub fn grading(space: &SuperSpace) -> Self {
        GradedMap {
            source: *space,
            target: *space,
            matrix: space.grading(),
            parity: Parity::Even,
        }
    }

    pub fn compose(&self, first: &GradedMap) -> Result<GradedMap, SpaceError> {
        if first.target != self.source {
            return Err(SpaceError::Dimension {
                expected: self.source.display(),
                got: first.target.display(),
            });
        }
        Ok(GradedMap {
            source: first.source,
            target: self.target,
            matrix: self.matrix.mul(&first.matrix),
            parity: self.parity.add(first.parity),
        })
    }
}

/// Tensor product space with the position of each `v_i ⊗ w_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorSpace {
    pub space: SuperSpace,
    /// `position[i][j]` is the basis index of `v_i ⊗ w_j`.
    pub position: Vec<Vec<usize>>,
}

/// Even block `V₀⊗W₀, V₁⊗W₁`; odd block `V₁⊗W₀, V₀⊗W₁`; each piece in
/// lexicographic order of `(i, j)`.
pub fn tensor_space(v: &SuperSpace, w: &SuperSpace) -> Result<TensorSpace, SpaceError> {
    if v.field != w.field {
        return Err(SpaceError::FieldMismatch(v.field, w.field));
    }
    let mut position = vec![vec![0; w.dim()]; v.dim()];
    let mut next = 0;
    for (pv, pw) in [
        (Parity::Even, Parity::Even),
        (Parity::Odd, Parity::Odd),
        (Parity::Odd, Parity::Even),
        (Parity::Even, Parity::Odd),
    ] {
        for i in v.indices(pv) {
            for j in w.indices(pw) {
                position[i][j] = next;
                next += 1;
            }
        }
    }
    let space = SuperSpace::new(v.even * w.even + v.odd * w.odd, v.odd * w.even + v.even * w.odd, v.field);
    Ok(TensorSpace { space, position })
}

/// `(f⊗g)(v⊗w) = (−1)^{|g||v|} f(v)⊗g(w)`.
pub fn map_tensor(f: &GradedMap, g: &GradedMap) -> Result<GradedMap, SpaceError> {
    let src = tensor_space(&f.source, &g.source)?;
    let tgt = tensor_space(&f.target, &g.target)?;
    let mut m = Matrix::zeros(tgt.space.dim(), src.space.dim());
    for i in 0..f.source.dim() {
        let sign = koszul_sign(g.parity, f.source.parity_of(i));
        for k in 0..f.target.dim() {
            let a = &f.matrix[(k, i)];
            if a.is_zero() {
                continue;
            }
            let a = if sign < 0 { -a.clone() } else { a.clone() };
            for j in 0..g.source.dim() {
                for l in 0..g.target.dim() {
                    let b = &g.matrix[(l, j)];
                    if !b.is_zero() {
                        m[(tgt.position[k][l], src.position[i][j])] = a.clone() * b.clone();
                    }
                }
            }
        }
    }
    Ok(GradedMap { source: src.space, target: tgt.space, matrix: m, parity: f.parity.add(g.parity) })
}

/// `V^Π` together with the new position of each old basis index.
pub fn parity_reverse_space(v: &SuperSpace) -> (SuperSpace, Vec<usize>) {
    let rev = SuperSpace::new(v.odd, v.even, v.field);
    let perm = (0..v.dim())
        .map(|i| if i < v.even { v.odd + i } else { i - v.even })
        .collect();
    (rev, perm)
}
