use super::{ModuleError, SuperModule};
use crate::algebra::CliffordSignature;
use crate::exactnum::{imag_unit, FieldTag, Gaussian, Matrix};
use crate::superspace::{map_tensor, parity_reverse_space, tensor_space, GradedMap, Parity, SuperSpace};

type M = Matrix<Gaussian>;

fn require_graded(m: &SuperModule) -> Result<(), ModuleError> {
    if m.graded {
        Ok(())
    } else {
        Err(ModuleError::NeedsGraded)
    }
}

fn require_ungraded(m: &SuperModule) -> Result<(), ModuleError> {
    if m.graded {
        Err(ModuleError::NeedsUngraded)
    } else {
        Ok(())
    }
}

fn identity(n: usize) -> M {
    M::identity(n)
}

/// `[[a, b], [c, d]]` from four equal-size square blocks.
fn blocks(a: &M, b: &M, c: &M, d: &M) -> M {
    a.hstack(b).vstack(&c.hstack(d))
}

/// Same matrices on the swapped grading.
pub fn parity_reverse(m: &SuperModule) -> Result<SuperModule, ModuleError> {
    require_graded(m)?;
    let (space, perm) = parity_reverse_space(&m.space);
    Ok(m.map_operators(space, |a, _| a.permute(&perm)))
}

/// Negates every odd operator, Clifford generators included.
pub fn conjugate(m: &SuperModule) -> SuperModule {
    m.map_operators(m.space, |a, p| if p.is_odd() { a.neg() } else { a.clone() })
}

/// Position in `a ⊕ b` (even parts first) of each index of the
/// concatenated basis.
pub(crate) fn direct_sum_perm(a: &SuperSpace, b: &SuperSpace) -> Vec<usize> {
    let (ae, ao, be, bo) = (a.even, a.odd, b.even, b.odd);
    (0..ae)
        .chain(ae + be..ae + be + ao)
        .chain(ae..ae + be)
        .chain(ae + be + ao..ae + be + ao + bo)
        .collect()
}

pub fn direct_sum(a: &SuperModule, b: &SuperModule) -> Result<SuperModule, ModuleError> {
    if !a.same_context(b) {
        return Err(ModuleError::ContextMismatch);
    }
    let perm = direct_sum_perm(&a.space, &b.space);
    let space = SuperSpace::new(a.space.even + b.space.even, a.space.odd + b.space.odd, a.field());
    let ops_b: Vec<&M> = b.operators().into_iter().map(|o| o.0).collect();
    let mut k = 0;
    Ok(a.map_operators(space, |x, _| {
        let y = ops_b[k];
        k += 1;
        M::block_diag(&[x, y]).permute(&perm)
    }))
}

pub fn direct_sum_all(parts: &[SuperModule]) -> Result<SuperModule, ModuleError> {
    let (first, rest) = parts.split_first().ok_or(ModuleError::Shape("empty direct sum".into()))?;
    rest.iter().try_fold(first.clone(), |acc, p| direct_sum(&acc, p))
}

/// `P⁻¹ A P` for every operator; `P` must be invertible and even when the
/// module is graded.
pub fn change_basis(m: &SuperModule, p: &M) -> Result<SuperModule, ModuleError> {
    let inv = p.inverse().ok_or(ModuleError::BadBasisChange)?;
    if m.graded && !crate::superspace::has_parity(p, &m.space, &m.space, Parity::Even) {
        return Err(ModuleError::BadBasisChange);
    }
    Ok(m.map_operators(m.space, |a, _| inv.mul(a).mul(p)))
}

/// `Δ̃U` on `U ⊕ U`: even operators diagonal, odd ones `[[0,x],[x,0]]`,
/// and a new generator `e_{p+1} = [[0,−1],[1,0]]`.
pub fn diag_lift(u: &SuperModule) -> Result<SuperModule, ModuleError> {
    require_ungraded(u)?;
    let d = u.dim();
    let z = M::zeros(d, d);
    let space = SuperSpace::new(d, d, u.field());
    let mut out = u.map_operators(space, |x, p| {
        if p.is_odd() {
            blocks(&z, x, x, &z)
        } else {
            blocks(x, &z, &z, x)
        }
    });
    out.graded = true;
    let sig = u.context.signature;
    let new_e = blocks(&z, &identity(d).neg(), &identity(d), &z);
    out.cliff_action.insert(sig.p, new_e);
    out.context = u.context.with_signature(CliffordSignature::new(sig.p + 1, sig.q));
    Ok(out)
}

/// Drops the last e-generator.
pub fn restrict_generator(m: &SuperModule) -> Result<SuperModule, ModuleError> {
    let sig = m.context.signature;
    if sig.p == 0 {
        return Err(ModuleError::NoEGenerator);
    }
    let mut out = m.clone();
    out.cliff_action.remove(sig.p - 1);
    out.context = m.context.with_signature(CliffordSignature::new(sig.p - 1, sig.q));
    Ok(out)
}

/// `Δ = i* ∘ Δ̃`.
pub fn delta(u: &SuperModule) -> Result<SuperModule, ModuleError> {
    restrict_generator(&diag_lift(u)?)
}

/// Forgets the grading.
pub fn forget(v: &SuperModule) -> Result<SuperModule, ModuleError> {
    require_graded(v)?;
    let mut out = v.clone();
    out.graded = false;
    out.space = SuperSpace::new(v.dim(), 0, v.field());
    Ok(out)
}

/// `p₀`: the even block with odd operators twisted by `α = e·(−1)^F`,
/// `e` the last e-generator.
pub fn project_even(v: &SuperModule) -> Result<SuperModule, ModuleError> {
    require_graded(v)?;
    let sig = v.context.signature;
    if sig.p == 0 {
        return Err(ModuleError::NoEGenerator);
    }
    if v.space.even != v.space.odd {
        return Err(ModuleError::BadGrading(format!("{}", v.space.display())));
    }
    let reduced = restrict_generator(v)?;
    let alpha = v.cliff_action[sig.p - 1].mul(&v.grading());
    let even: Vec<usize> = (0..v.space.even).collect();
    let space = SuperSpace::new(v.space.even, 0, v.field());
    let mut out = reduced.map_operators(space, |x, p| {
        if p.is_odd() {
            alpha.mul(x).submatrix(&even, &even)
        } else {
            x.submatrix(&even, &even)
        }
    });
    out.graded = false;
    Ok(out)
}

/// Regrades an ungraded module by the ±1 eigenspaces of `g`, which must
/// square to the identity and anticommute with every odd operator left
/// in `m`.
fn regrade_by(m: &SuperModule, g: &M) -> Result<SuperModule, ModuleError> {
    let d = m.dim();
    let plus = g.sub(&identity(d)).kernel();
    let minus = g.add(&identity(d)).kernel();
    if plus.len() + minus.len() != d {
        return Err(ModuleError::BadGrading("grading operator is not an involution".into()));
    }
    let cols: Vec<Vec<Gaussian>> = plus.iter().chain(&minus).cloned().collect();
    let p = M::from_columns(&cols, d);
    let inv = p.inverse().ok_or(ModuleError::BadGrading("eigenbasis singular".into()))?;
    let space = SuperSpace::new(plus.len(), minus.len(), m.field());
    let mut out = m.map_operators(space, |a, _| inv.mul(a).mul(&p));
    out.graded = true;
    Ok(out)
}

/// Ungraded over `(p, q+1)` to graded over `(p, q)` with `(−1)^F = f_last`
/// (real); ungraded over `(p+1, q)` to graded over `(p, q)` with
/// `(−1)^F = −i·e_last` (complex).
pub fn regrade(m: &SuperModule) -> Result<SuperModule, ModuleError> {
    require_ungraded(m)?;
    let sig = m.context.signature;
    match m.field() {
        FieldTag::RealQ => {
            if sig.q == 0 {
                return Err(ModuleError::NoFGenerator);
            }
            let g = m.cliff_action[sig.p + sig.q - 1].clone();
            let mut rest = m.clone();
            rest.cliff_action.pop();
            rest.context = m.context.with_signature(CliffordSignature::new(sig.p, sig.q - 1));
            regrade_by(&rest, &g)
        }
        FieldTag::ComplexQi => {
            if sig.p == 0 {
                return Err(ModuleError::NoEGenerator);
            }
            let g = m.cliff_action[sig.p - 1].scale(&-imag_unit());
            regrade_by(&restrict_generator(m)?, &g)
        }
    }
}

/// Inverse of [`regrade`]: the grading becomes a new f-generator (real) or
/// the e-generator `i·(−1)^F` (complex).
pub fn degrade(v: &SuperModule) -> Result<SuperModule, ModuleError> {
    let mut out = forget(v)?;
    let sig = v.context.signature;
    match v.field() {
        FieldTag::RealQ => {
            out.cliff_action.push(v.grading());
            out.context = v.context.with_signature(CliffordSignature::new(sig.p, sig.q + 1));
        }
        FieldTag::ComplexQi => {
            out.cliff_action.insert(sig.p, v.grading().scale(&imag_unit()));
            out.context = v.context.with_signature(CliffordSignature::new(sig.p + 1, sig.q));
        }
    }
    Ok(out)
}

fn as_map(space: SuperSpace, m: &M, p: Parity) -> GradedMap {
    GradedMap { source: space, target: space, matrix: m.clone(), parity: p }
}

/// `V ⊗ W` with `X ↦ X⊗1 + (−1)^{|X|F}⊗X`, Clifford generators of `V`
/// acting as `c⊗1` and those of `W` as `(−1)^F⊗c`. `W` may be ungraded, in
/// which case so is the result.
pub fn tensor_modules(v: &SuperModule, w: &SuperModule) -> Result<SuperModule, ModuleError> {
    require_graded(v)?;
    if !v.context.same_algebra(&w.context) || v.field() != w.field() {
        return Err(ModuleError::ContextMismatch);
    }
    let ts = tensor_space(&v.space, &w.space).map_err(|e| ModuleError::Shape(e.to_string()))?;
    let id_v = v.space.identity();
    let id_w = w.space.identity();
    let left = |a: &M, p: Parity| map_tensor(&as_map(v.space, a, p), &id_w).unwrap().matrix;
    let right = |b: &M, p: Parity| map_tensor(&id_v, &as_map(w.space, b, p)).unwrap().matrix;
    let g = &v.context.algebra;
    let g_action = (0..g.dim())
        .map(|i| left(&v.g_action[i], g.parity(i)).add(&right(&w.g_action[i], g.parity(i))))
        .collect();
    let (sv, sw) = (v.context.signature, w.context.signature);
    let odd = Parity::Odd;
    let mut cliff_action: Vec<M> = Vec::new();
    cliff_action.extend(v.cliff_action[..sv.p].iter().map(|c| left(c, odd)));
    cliff_action.extend(w.cliff_action[..sw.p].iter().map(|c| right(c, odd)));
    cliff_action.extend(v.cliff_action[sv.p..].iter().map(|c| left(c, odd)));
    cliff_action.extend(w.cliff_action[sw.p..].iter().map(|c| right(c, odd)));
    let space = if w.graded { ts.space } else { SuperSpace::new(ts.space.dim(), 0, v.field()) };
    Ok(SuperModule {
        context: v.context.with_signature(CliffordSignature::new(sv.p + sw.p, sv.q + sw.q)),
        space,
        graded: w.graded,
        g_action,
        cliff_action,
    })
}

/// `U ⊠ W`: `(ΔU)⊗W` regraded by `(−1)^F = [[0, i],[−i, 0]]` on the two
/// copies of `U⊗W`.
pub fn boxtimes(u: &SuperModule, w: &SuperModule) -> Result<SuperModule, ModuleError> {
    require_ungraded(u)?;
    require_ungraded(w)?;
    if u.field() != FieldTag::ComplexQi {
        return Err(ModuleError::NeedsComplex);
    }
    let m = tensor_modules(&delta(u)?, w)?;
    let n = u.dim() * w.dim();
    let z = M::zeros(n, n);
    let i = identity(n).scale(&imag_unit());
    let g = blocks(&z, &i, &i.neg(), &z);
    regrade_by(&m, &g)
}
