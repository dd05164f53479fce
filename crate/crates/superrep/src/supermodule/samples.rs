//! The explicit q(1) modules: `I`, `Π`, `C_μ` and `L_λ`.

use super::SuperModule;
use crate::algebra::{q1, CliffordSignature, ShiftedContext};
use crate::exactnum::{field_sqrt, FieldTag, Gaussian, Matrix};
use crate::superspace::SuperSpace;
use num_traits::Zero;

pub fn q1_context(field: FieldTag) -> ShiftedContext {
    ShiftedContext::new(q1(field), CliffordSignature::new(0, 0))
}

/// `I = (1|0)` with trivial action.
pub fn q1_even_trivial(ctx: &ShiftedContext) -> SuperModule {
    SuperModule::trivial(ctx, 1, 0)
}

/// `Π = (0|1)` with trivial action.
pub fn q1_odd_trivial(ctx: &ShiftedContext) -> SuperModule {
    SuperModule::trivial(ctx, 0, 1)
}

/// Ungraded `C_μ`: `H ↦ μ²`, `Q ↦ μ`.
pub fn q1_c(ctx: &ShiftedContext, mu: &Gaussian) -> SuperModule {
    let one = |z: Gaussian| Matrix::from_rows(vec![vec![z]]);
    SuperModule {
        context: ctx.clone(),
        space: SuperSpace::new(1, 0, ctx.field()),
        graded: false,
        g_action: vec![one(mu.clone() * mu.clone()), one(mu.clone())],
        cliff_action: vec![],
    }
}

/// `L_λ = (1|1)`: `H ↦ λ·Id`, `Q ↦ [[0,√λ],[√λ,0]]`. `None` when `√λ` is
/// not in the field or `λ = 0`.
pub fn q1_l(ctx: &ShiftedContext, lambda: &Gaussian) -> Option<SuperModule> {
    if lambda.is_zero() {
        return None;
    }
    let s = field_sqrt(ctx.field(), lambda)?;
    let z = Gaussian::zero();
    Some(SuperModule {
        context: ctx.clone(),
        space: SuperSpace::new(1, 1, ctx.field()),
        graded: true,
        g_action: vec![
            Matrix::from_rows(vec![vec![lambda.clone(), z.clone()], vec![z.clone(), lambda.clone()]]),
            Matrix::from_rows(vec![vec![z.clone(), s.clone()], vec![s, z]]),
        ],
        cliff_action: vec![],
    })
}
