//! Composition factors, type M/Q and real division-type tags, explicit
//! Clifford irreducibles and degree shifts of irreducible lists.

mod clifford;
mod commutant;
mod decompose;

pub use clifford::{clifford_irreducibles, MAX_GENERATORS};
pub use commutant::DivisionKind;
pub use decompose::{composition_factors, composition_factors_seeded, CompositionReport, DEFAULT_SEED};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::CliffordSignature;
use crate::exactnum::{field_sqrt, FieldTag, Gaussian, Matrix};
use crate::superspace::{parity_reverse_space, Parity};
use crate::supermodule::{
    conjugate, direct_sum, direct_sum_perm, hom_space, involution_exists, iso_test, parity_reverse, Involution,
    ModuleError, SuperModule,
};
use commutant::{analyze, Commutant};

type M = Matrix<Gaussian>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ClassifyError {
    #[error("signature ({0},{1}) is too large")]
    SignatureTooLarge(usize, usize),
    #[error("input not ℝ-irreducible")]
    NotRealIrreducible,
    #[error("input not absolutely irreducible")]
    NotAbsolutelyIrreducible,
    #[error("input is reducible")]
    Reducible,
    #[error("commutant structure could not be determined")]
    Undetermined,
    #[error("degree shifts of irreducible lists need the complex field and graded modules")]
    NeedsComplexGraded,
    #[error(transparent)]
    Module(#[from] ModuleError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuperType {
    M,
    Q,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RealDivision {
    R,
    C,
    H,
    NotApplicable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvolutionTag {
    Yes,
    No,
    Undecided,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IrreducibleTag {
    /// Ungraded modules are reported as type M.
    pub kind: SuperType,
    pub real_division: RealDivision,
    /// `V ≅ ΠV` (graded) or `V ≅ V†` (ungraded).
    pub self_dual: bool,
    pub involution: InvolutionTag,
    /// `c` with `α² = c·Id` for the odd commutant element found.
    pub alpha_square: Option<Gaussian>,
}

pub fn classify_irreducible(m: &SuperModule) -> Result<IrreducibleTag, ClassifyError> {
    let even = hom_space(m, m, Parity::Even)?;
    let real_division = match (m.field(), analyze(m.field(), &even.basis)) {
        (_, Commutant::Split(_)) => return Err(ClassifyError::Reducible),
        (_, Commutant::NotRealIrreducible) => return Err(ClassifyError::NotRealIrreducible),
        (_, Commutant::NotAbsolutelyIrreducible) => return Err(ClassifyError::NotAbsolutelyIrreducible),
        (_, Commutant::Unknown) => return Err(ClassifyError::Undetermined),
        (FieldTag::ComplexQi, Commutant::Division(_)) => RealDivision::NotApplicable,
        (FieldTag::RealQ, Commutant::Division(k)) => match k {
            DivisionKind::Real => RealDivision::R,
            DivisionKind::Complex => RealDivision::C,
            DivisionKind::Quaternion => RealDivision::H,
        },
    };
    if !m.graded {
        return Ok(IrreducibleTag {
            kind: SuperType::M,
            real_division,
            self_dual: iso_test(m, &conjugate(m))?.is_iso(),
            involution: InvolutionTag::NotApplicable,
            alpha_square: None,
        });
    }
    let odd = hom_space(m, m, Parity::Odd)?;
    let (involution, alpha_square) = match involution_exists(m)? {
        Involution::Yes { square, .. } => (InvolutionTag::Yes, Some(square)),
        Involution::No => (InvolutionTag::No, None),
        Involution::Undecided => (InvolutionTag::Undecided, None),
    };
    Ok(IrreducibleTag {
        kind: if odd.dim() > 0 { SuperType::Q } else { SuperType::M },
        real_division,
        self_dual: iso_test(m, &parity_reverse(m)?)?.is_iso(),
        involution,
        alpha_square,
    })
}

/// Degree `n + 1` irreducibles built from a complete list at degree `n`.
#[derive(Clone, Debug)]
pub struct ShiftResult {
    pub modules: Vec<SuperModule>,
    /// Type Q inputs whose `α² = c` has no square root in the field; no
    /// modules are emitted for them.
    pub obstructed: Vec<(usize, Gaussian)>,
}

fn with_new_generator(base: &SuperModule, e: M) -> SuperModule {
    let sig = base.context.signature;
    let mut out = base.clone();
    out.cliff_action.insert(sig.p, e);
    out.context = base.context.with_signature(CliffordSignature::new(sig.p + 1, sig.q));
    out
}

/// Each type M pair `{M, ΠM}` gives `M ⊕ ΠM` with `e = [[0, G],[−G, 0]]`,
/// `G = (−1)^F` of `M`; each type Q module gives `Q± = (Q, ±(−1)^F α)` with
/// `α² = Id`.
pub fn shift_irreducibles(irreps: &[SuperModule]) -> Result<ShiftResult, ClassifyError> {
    let mut out = ShiftResult { modules: Vec::new(), obstructed: Vec::new() };
    let mut type_m_done: Vec<SuperModule> = Vec::new();
    for (idx, v) in irreps.iter().enumerate() {
        if v.field() != FieldTag::ComplexQi || !v.graded {
            return Err(ClassifyError::NeedsComplexGraded);
        }
        let g = v.grading();
        if hom_space(v, v, Parity::Odd)?.dim() == 0 {
            let pv = parity_reverse(v)?;
            let mut seen = false;
            for w in &type_m_done {
                if iso_test(w, &pv)?.is_iso() || iso_test(w, v)?.is_iso() {
                    seen = true;
                    break;
                }
            }
            if seen {
                continue;
            }
            type_m_done.push(v.clone());
            let sum = direct_sum(v, &pv)?;
            let d = v.dim();
            let z = M::zeros(d, d);
            // same vector of V, read in the reordered basis of ΠV
            let (_, perm) = parity_reverse_space(&v.space);
            let to_pv = M::from_fn(d, d, |r, c| if r == perm[c] { Gaussian::one() } else { Gaussian::zero() });
            let e = z
                .hstack(&g.mul(&to_pv.transpose()))
                .vstack(&to_pv.mul(&g).neg().hstack(&z))
                .permute(&direct_sum_perm(&v.space, &pv.space));
            out.modules.push(with_new_generator(&sum, e));
        } else {
            let Involution::Yes { witness, square } = involution_exists(v)? else {
                return Err(ClassifyError::Undetermined);
            };
            let Some(root) = field_sqrt(v.field(), &square) else {
                out.obstructed.push((idx, square));
                continue;
            };
            let alpha = witness.scale(&(Gaussian::one() / root));
            let e = g.mul(&alpha);
            out.modules.push(with_new_generator(v, e.clone()));
            out.modules.push(with_new_generator(v, e.neg()));
        }
    }
    Ok(out)
}
