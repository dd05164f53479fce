use super::ClassifyError;
use crate::algebra::{CliffordSignature, LieSuperAlgebra, ShiftedContext};
use crate::exactnum::{gauss, imag_unit, FieldTag, Gaussian, Matrix};
use crate::superspace::SuperSpace;
use crate::supermodule::{morita_embed, regrade, SuperModule};

type M = Matrix<Gaussian>;

pub const MAX_GENERATORS: usize = 9;

fn m(rows: &[&[i64]]) -> M {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| gauss(x, 0)).collect()).collect())
}

/// Left multiplication by `i` and `j` on `ℍ = ℝ⁴` (basis `1, i, j, k`).
fn quaternion_units() -> (M, M) {
    let li = m(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
    let lj = m(&[&[0, 0, -1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, -1, 0, 0]]);
    (li, lj)
}

fn module(field: FieldTag, p: usize, q: usize, gens: Vec<M>) -> SuperModule {
    let d = gens.first().map_or(1, |g| g.rows());
    let ctx = ShiftedContext::new(LieSuperAlgebra::trivial(field), CliffordSignature::new(p, q));
    SuperModule { context: ctx, space: SuperSpace::new(d, 0, field), graded: false, g_action: vec![], cliff_action: gens }
}

/// Ungraded real irreducibles of `Cl(p,q)` as generator lists
/// `e_1..e_p, f_1..f_q`. Path:
/// - base cases `(0,0)`, `(1,0)`, `(0,1)`, `(2,0)`, `(0,2)`;
/// - `p, q ≥ 1`: `Cl(p,q) ≅ Cl(p−1,q−1) ⊗ ℝ(2)` (Morita embedding);
/// - `(0,q)`, `q ≥ 3`: `Cl(0,q) ≅ Cl(q−2,0) ⊗ Cl(0,2)`;
/// - `(3,0)`: `Cl(3,0) ≅ Cl(0,1) ⊗ Cl(2,0)`;
/// - `(p,0)`, `p ≥ 4`: `Cl(p,0) ≅ Cl(p−4,4)` through `ω = f₁f₂f₃f₄`.
fn real_ungraded(p: usize, q: usize) -> Vec<Vec<M>> {
    let one = || m(&[&[1]]);
    match (p, q) {
        (0, 0) => vec![vec![]],
        (1, 0) => vec![vec![m(&[&[0, -1], &[1, 0]])]],
        (0, 1) => vec![vec![one()], vec![one().neg()]],
        (2, 0) => {
            let (i, j) = quaternion_units();
            vec![vec![i, j]]
        }
        (0, 2) => vec![vec![m(&[&[1, 0], &[0, -1]]), m(&[&[0, 1], &[1, 0]])]],
        (p, q) if p >= 1 && q >= 1 => real_ungraded(p - 1, q - 1)
            .into_iter()
            .map(|gens| {
                let v = module(FieldTag::RealQ, p - 1, q - 1, gens);
                morita_embed(&v).expect("real embedding").cliff_action
            })
            .collect(),
        (0, q) => {
            let f1 = m(&[&[1, 0], &[0, -1]]);
            let f2 = m(&[&[0, 1], &[1, 0]]);
            let w = f1.mul(&f2);
            real_ungraded(q - 2, 0)
                .into_iter()
                .map(|gens| {
                    let d = gens.first().map_or(1, |g| g.rows());
                    let mut out: Vec<M> = gens.iter().map(|a| a.kron(&w)).collect();
                    out.push(M::identity(d).kron(&f1));
                    out.push(M::identity(d).kron(&f2));
                    out
                })
                .collect()
        }
        (3, 0) => {
            let (i, j) = quaternion_units();
            let w = i.mul(&j);
            real_ungraded(0, 1)
                .into_iter()
                .map(|gens| vec![gens[0].kron(&w), M::identity(1).kron(&i), M::identity(1).kron(&j)])
                .collect()
        }
        (p, _) => real_ungraded(p - 4, 4)
            .into_iter()
            .map(|gens| {
                let k = p - 4;
                let d = gens[0].rows();
                let f = &gens[k..];
                let w = f[0].mul(&f[1]).mul(&f[2]).mul(&f[3]);
                let e: Vec<M> = f.iter().map(|x| x.mul(&w)).collect();
                let we = e[0].mul(&e[1]).mul(&e[2]).mul(&e[3]);
                let twist = w.mul(&we);
                debug_assert_eq!(twist.mul(&twist), M::identity(d));
                gens[..k].iter().map(|a| a.mul(&twist)).chain(e).collect()
            })
            .collect(),
    }
}

/// Ungraded complex irreducibles of `Cl(n)`: `e = ±i` at `n = 1`, and
/// `Cl(n+2) ≅ Cl(n) ⊗ ℂ(2)`.
fn complex_ungraded(n: usize) -> Vec<Vec<M>> {
    match n {
        0 => vec![vec![]],
        1 => {
            let i = Matrix::from_rows(vec![vec![imag_unit()]]);
            vec![vec![i.clone()], vec![i.neg()]]
        }
        _ => complex_ungraded(n - 2)
            .into_iter()
            .map(|gens| {
                let v = module(FieldTag::ComplexQi, n - 2, 0, gens);
                morita_embed(&v).expect("complex embedding").cliff_action
            })
            .collect(),
    }
}

fn ungraded(p: usize, q: usize, field: FieldTag) -> Vec<SuperModule> {
    let lists = match field {
        FieldTag::RealQ => real_ungraded(p, q),
        // f = i·e over ℂ
        FieldTag::ComplexQi => complex_ungraded(p + q)
            .into_iter()
            .map(|mut gens| {
                for g in gens[p..].iter_mut() {
                    *g = g.scale(&imag_unit());
                }
                gens
            })
            .collect(),
    };
    lists.into_iter().map(|gens| module(field, p, q, gens)).collect()
}

/// One representative of every irreducible `Cl(p,q)`-module (graded: of
/// every graded irreducible, obtained by regrading the ungraded irreducibles
/// of `Cl(p,q+1)` over ℝ or `Cl(p+1,q)` over ℂ).
pub fn clifford_irreducibles(p: usize, q: usize, field: FieldTag, graded: bool) -> Result<Vec<SuperModule>, ClassifyError> {
    if p + q > MAX_GENERATORS {
        return Err(ClassifyError::SignatureTooLarge(p, q));
    }
    if !graded {
        return Ok(ungraded(p, q, field));
    }
    let lifted = match field {
        FieldTag::RealQ => ungraded(p, q + 1, field),
        FieldTag::ComplexQi => ungraded(p + 1, q, field),
    };
    lifted.iter().map(|u| regrade(u).map_err(ClassifyError::Module)).collect()
}

