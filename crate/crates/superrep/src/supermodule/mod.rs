//! Modules over a shifted context and the functors between them.

mod functors;
pub(crate) use functors::direct_sum_perm;
mod hom;
mod morita;
pub mod samples;

pub use functors::{
    boxtimes, change_basis, conjugate, degrade, delta, diag_lift, direct_sum, direct_sum_all,
    forget, parity_reverse, project_even, regrade, restrict_generator, tensor_modules,
};
pub use hom::{hom_space, involution_exists, iso_test, HomSpace, Involution, IsoVerdict};
pub use morita::{morita_embed, morita_reduce};

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{clifford_matrices_check, ShiftedContext};
use crate::exactnum::{format_gaussian, Gaussian, Matrix};
use crate::superspace::{has_parity, GradedMap, Parity, SuperSpace};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModuleError {
    #[error("modules live over different contexts")]
    ContextMismatch,
    #[error("operation needs a graded module")]
    NeedsGraded,
    #[error("operation needs an ungraded module")]
    NeedsUngraded,
    #[error("no e-generator available")]
    NoEGenerator,
    #[error("no f-generator available")]
    NoFGenerator,
    #[error("signature too small for this reduction")]
    SignatureTooSmall,
    #[error("operation needs the complex field")]
    NeedsComplex,
    #[error("grading operator does not split the space evenly: {0}")]
    BadGrading(String),
    #[error("basis change is not invertible or not even")]
    BadBasisChange,
    #[error("{0}")]
    Shape(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuperModule {
    pub context: ShiftedContext,
    /// Ungraded modules have `odd = 0`.
    pub space: SuperSpace,
    pub graded: bool,
    pub g_action: Vec<Matrix<Gaussian>>,
    /// `e_1..e_p, f_1..f_q`
    pub cliff_action: Vec<Matrix<Gaussian>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ModuleViolation {
    pub relation: String,
    pub residual: Option<Matrix<Gaussian>>,
}

impl std::fmt::Display for ModuleViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.relation)?;
        if let Some(r) = &self.residual {
            let nz = (0..r.rows())
                .flat_map(|i| (0..r.cols()).map(move |j| (i, j)))
                .find(|&c| !r[c].is_zero());
            if let Some((i, j)) = nz {
                write!(f, " (residual entry ({i},{j}) = {})", format_gaussian(&r[(i, j)]))?;
            }
        }
        Ok(())
    }
}

fn violation(relation: String, residual: Option<Matrix<Gaussian>>) -> ModuleViolation {
    ModuleViolation { relation, residual }
}

impl SuperModule {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn field(&self) -> crate::exactnum::FieldTag {
        self.space.field
    }

    /// Every acting operator with its parity: g-generators, then Clifford.
    pub fn operators(&self) -> Vec<(&Matrix<Gaussian>, Parity)> {
        let g = &self.context.algebra;
        self.g_action
            .iter()
            .enumerate()
            .map(|(i, m)| (m, g.parity(i)))
            .chain(self.cliff_action.iter().map(|m| (m, Parity::Odd)))
            .collect()
    }

    pub fn g_map(&self, i: usize) -> GradedMap {
        GradedMap {
            source: self.space,
            target: self.space,
            matrix: self.g_action[i].clone(),
            parity: self.context.algebra.parity(i),
        }
    }

    pub fn grading(&self) -> Matrix<Gaussian> {
        self.space.grading()
    }

    pub fn same_context(&self, other: &SuperModule) -> bool {
        self.context.signature == other.context.signature
            && self.context.same_algebra(&other.context)
            && self.graded == other.graded
            && self.field() == other.field()
    }

    /// The zero-dimensional module.
    pub fn zero(context: &ShiftedContext, graded: bool) -> SuperModule {
        let empty = Matrix::zeros(0, 0);
        SuperModule {
            context: context.clone(),
            space: SuperSpace::new(0, 0, context.field()),
            graded,
            g_action: vec![empty.clone(); context.algebra.dim()],
            cliff_action: vec![empty; context.signature.count()],
        }
    }

    /// All operators zero.
    pub fn trivial(context: &ShiftedContext, even: usize, odd: usize) -> SuperModule {
        let space = SuperSpace::new(even, odd, context.field());
        let z = Matrix::zeros(space.dim(), space.dim());
        SuperModule {
            context: context.clone(),
            space,
            graded: true,
            g_action: vec![z.clone(); context.algebra.dim()],
            cliff_action: vec![z; context.signature.count()],
        }
    }

    /// Checks shapes, field, parity patterns, brackets, Clifford relations
    /// and supercommutation of Clifford with g.
    pub fn validate(&self) -> Result<(), ModuleViolation> {
        let g = &self.context.algebra;
        let sig = &self.context.signature;
        let d = self.dim();
        if self.g_action.len() != g.dim() || self.cliff_action.len() != sig.count() {
            return Err(violation(
                format!(
                    "expected {} g-operators and {} Clifford operators, got {} and {}",
                    g.dim(),
                    sig.count(),
                    self.g_action.len(),
                    self.cliff_action.len()
                ),
                None,
            ));
        }
        if self.field() != g.field() {
            return Err(violation("module and algebra fields differ".into(), None));
        }
        if !self.graded && self.space.odd != 0 {
            return Err(violation("ungraded module with an odd block".into(), None));
        }
        let names: Vec<String> = (0..g.dim())
            .map(|i| g.name(i).to_string())
            .chain((0..sig.count()).map(|k| sig.generator_name(k)))
            .collect();
        for ((m, p), name) in self.operators().into_iter().zip(&names) {
            if m.rows() != d || m.cols() != d {
                return Err(violation(format!("{name} is not {d}x{d}"), None));
            }
            if let Some(z) = m.entries().find(|z| !self.field().admits(z)) {
                return Err(violation(
                    format!("{name} has entry {} outside the field", format_gaussian(z)),
                    None,
                ));
            }
            if self.graded && !has_parity(m, &self.space, &self.space, p) {
                return Err(violation(format!("{name} does not have parity {p:?}"), None));
            }
        }
        for i in 0..g.dim() {
            for j in i..g.dim() {
                let (a, b) = (&self.g_action[i], &self.g_action[j]);
                let sign = if g.parity(i).is_odd() && g.parity(j).is_odd() { -1 } else { 1 };
                let ab = a.mul(b);
                let ba = b.mul(a);
                let lhs = if sign < 0 { ab.add(&ba) } else { ab.sub(&ba) };
                let mut rhs = Matrix::zeros(d, d);
                for (k, c) in g.bracket(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        rhs = rhs.add(&self.g_action[k].scale(c));
                    }
                }
                let residual = lhs.sub(&rhs);
                if !residual.is_zero() {
                    return Err(violation(
                        format!("bracket [{},{}] is not respected", g.name(i), g.name(j)),
                        Some(residual),
                    ));
                }
            }
        }
        clifford_matrices_check(sig, &self.cliff_action).map_err(|v| {
            violation(format!("Clifford relation: {v}"), Some(v.residual.clone()))
        })?;
        for (k, c) in self.cliff_action.iter().enumerate() {
            for i in 0..g.dim() {
                let x = &self.g_action[i];
                let cx = c.mul(x);
                let xc = x.mul(c);
                let residual = if g.parity(i).is_odd() { cx.add(&xc) } else { cx.sub(&xc) };
                if !residual.is_zero() {
                    return Err(violation(
                        format!(
                            "{} does not supercommute with {}",
                            sig.generator_name(k),
                            g.name(i)
                        ),
                        Some(residual),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Applies `f` to every operator.
    pub(crate) fn map_operators(
        &self,
        space: SuperSpace,
        mut f: impl FnMut(&Matrix<Gaussian>, Parity) -> Matrix<Gaussian>,
    ) -> SuperModule {
        let g = &self.context.algebra;
        SuperModule {
            context: self.context.clone(),
            space,
            graded: self.graded,
            g_action: self.g_action.iter().enumerate().map(|(i, m)| f(m, g.parity(i))).collect(),
            cliff_action: self.cliff_action.iter().map(|m| f(m, Parity::Odd)).collect(),
        }
    }
}

/// Invariant subspace given by the rows of a reduced echelon matrix, split
/// into submodule and quotient. The subspace must be graded when the
/// module is.
pub fn split_along(m: &SuperModule, reduced: &Matrix<Gaussian>, pivots: &[usize]) -> (SuperModule, SuperModule) {
    let d = m.dim();
    let r = pivots.len();
    let rest: Vec<usize> = (0..d).filter(|c| !pivots.contains(c)).collect();
    let all: Vec<usize> = (0..d).collect();
    let rows: Vec<usize> = (0..r).collect();
    // columns of `basis` span the subspace and are the identity on pivot rows
    let basis = reduced.submatrix(&rows, &all).transpose();
    let basis_rest = basis.submatrix(&rest, &rows);
    let sub_space = if m.graded {
        let even = pivots.iter().filter(|&&p| p < m.space.even).count();
        SuperSpace::new(even, r - even, m.field())
    } else {
        SuperSpace::new(r, 0, m.field())
    };
    let quo_space = if m.graded {
        let even = rest.iter().filter(|&&p| p < m.space.even).count();
        SuperSpace::new(even, d - r - even, m.field())
    } else {
        SuperSpace::new(d - r, 0, m.field())
    };
    let sub = m.map_operators(sub_space, |a, _| a.mul(&basis).submatrix(pivots, &rows));
    let quo = m.map_operators(quo_space, |a, _| {
        a.submatrix(&rest, &rest).sub(&basis_rest.mul(&a.submatrix(pivots, &rest)))
    });
    (sub, quo)
}
