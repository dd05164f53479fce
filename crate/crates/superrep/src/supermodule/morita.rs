use super::{split_along, ModuleError, SuperModule};
use crate::algebra::CliffordSignature;
use crate::exactnum::{gauss, imag_unit, FieldTag, Gaussian, Matrix};
use crate::superspace::SuperSpace;

type M = Matrix<Gaussian>;

/// Removes a `ℂ(2)` (last two e-generators, `ω = i·e e'`) or `ℝ(2)` (last
/// e and last f, `ω = e·f`) factor: the result is the `+1` eigenspace of
/// `ω`, on which every remaining operator acts.
pub fn morita_reduce(m: &SuperModule) -> Result<SuperModule, ModuleError> {
    let sig = m.context.signature;
    let (omega, rest_sig, drop) = match m.field() {
        FieldTag::ComplexQi => {
            if sig.p < 2 {
                return Err(ModuleError::SignatureTooSmall);
            }
            let (a, b) = (&m.cliff_action[sig.p - 2], &m.cliff_action[sig.p - 1]);
            (a.mul(b).scale(&imag_unit()), CliffordSignature::new(sig.p - 2, sig.q), vec![sig.p - 2, sig.p - 1])
        }
        FieldTag::RealQ => {
            if sig.p < 1 || sig.q < 1 {
                return Err(ModuleError::SignatureTooSmall);
            }
            let last_f = sig.p + sig.q - 1;
            let (a, b) = (&m.cliff_action[sig.p - 1], &m.cliff_action[last_f]);
            (a.mul(b), CliffordSignature::new(sig.p - 1, sig.q - 1), vec![sig.p - 1, last_f])
        }
    };
    let mut rest = m.clone();
    for k in drop.into_iter().rev() {
        rest.cliff_action.remove(k);
    }
    rest.context = m.context.with_signature(rest_sig);
    let fixed = omega.sub(&M::identity(m.dim())).kernel();
    if 2 * fixed.len() != m.dim() {
        return Err(ModuleError::BadGrading("ω does not split the space in half".into()));
    }
    let rows = M::from_rows(fixed).rref();
    Ok(split_along(&rest, &rows.reduced, &rows.pivots).0)
}

/// Inverse of [`morita_reduce`] up to isomorphism: `V ⊗ k²` with odd
/// operators and the grading twisted by `ω`, plus the new generators.
pub fn morita_embed(v: &SuperModule) -> Result<SuperModule, ModuleError> {
    let sig = v.context.signature;
    let z = gauss(0, 0);
    let one = gauss(1, 0);
    let (omega, new_e, new_other, new_sig) = match v.field() {
        FieldTag::ComplexQi => {
            let i = imag_unit();
            let e1 = M::from_rows(vec![vec![z.clone(), -one.clone()], vec![one.clone(), z.clone()]]);
            let e2 = M::from_rows(vec![vec![z.clone(), i.clone()], vec![i, z.clone()]]);
            let omega = M::from_rows(vec![vec![one.clone(), z.clone()], vec![z.clone(), -one.clone()]]);
            (omega, vec![e1, e2], None, CliffordSignature::new(sig.p + 2, sig.q))
        }
        FieldTag::RealQ => {
            let e = M::from_rows(vec![vec![z.clone(), -one.clone()], vec![one.clone(), z.clone()]]);
            let f = M::from_rows(vec![vec![z.clone(), one.clone()], vec![one.clone(), z.clone()]]);
            let omega = e.mul(&f);
            (omega, vec![e], Some(f), CliffordSignature::new(sig.p + 1, sig.q + 1))
        }
    };
    let id2 = M::identity(2);
    let d = v.dim();
    // positions in V⊗k² (index 2i + a) sorted so the twisted grading is even-first
    let perm: Vec<usize> = if v.graded {
        let grading = v.grading().kron(&omega);
        let even: Vec<usize> = (0..2 * d).filter(|&k| grading[(k, k)] == one).collect();
        let odd: Vec<usize> = (0..2 * d).filter(|&k| grading[(k, k)] != one).collect();
        let order: Vec<usize> = even.iter().chain(&odd).copied().collect();
        let mut perm = vec![0; 2 * d];
        for (new, &old) in order.iter().enumerate() {
            perm[old] = new;
        }
        perm
    } else {
        (0..2 * d).collect()
    };
    let space = if v.graded {
        let even = (0..2 * d).filter(|&k| perm[k] < d).count();
        SuperSpace::new(even, 2 * d - even, v.field())
    } else {
        SuperSpace::new(2 * d, 0, v.field())
    };
    let mut out = v.map_operators(space, |x, p| {
        let twist = if p.is_odd() { &omega } else { &id2 };
        x.kron(twist).permute(&perm)
    });
    let lift = |c: &M| M::identity(d).kron(c).permute(&perm);
    for (k, e) in new_e.iter().enumerate() {
        out.cliff_action.insert(sig.p + k, lift(e));
    }
    if let Some(f) = new_other {
        out.cliff_action.push(lift(&f));
    }
    out.context = v.context.with_signature(new_sig);
    Ok(out)
}
