use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ModuleError, SuperModule};
use crate::exactnum::{gauss, imag_unit, real, FieldTag, Gaussian, Matrix, SparseEliminator};
use crate::superspace::Parity;

type M = Matrix<Gaussian>;

#[derive(Clone, Debug)]
pub struct HomSpace {
    pub parity: Parity,
    pub basis: Vec<M>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn combination(&self, coeffs: &[Gaussian]) -> M {
        let first = &self.basis[0];
        let mut out = M::zeros(first.rows(), first.cols());
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if !c.is_zero() {
                out = out.add(&b.scale(c));
            }
        }
        out
    }
}

fn sparse_rows(a: &M) -> Vec<Vec<(usize, Gaussian)>> {
    (0..a.rows())
        .map(|i| {
            a.row(i)
                .iter()
                .enumerate()
                .filter(|(_, z)| !z.is_zero())
                .map(|(k, z)| (k, z.clone()))
                .collect()
        })
        .collect()
}

/// Maps `T: v → w` of the given parity with `T ρ_v(a) = ρ_w(a) T` for every
/// acting operator `a`.
pub fn hom_space(v: &SuperModule, w: &SuperModule, parity: Parity) -> Result<HomSpace, ModuleError> {
    if !v.same_context(w) {
        return Err(ModuleError::ContextMismatch);
    }
    if !v.graded && parity == Parity::Odd {
        return Err(ModuleError::NeedsGraded);
    }
    let (dv, dw) = (v.dim(), w.dim());
    let allowed = |k: usize, j: usize| {
        !v.graded || w.space.parity_of(k).add(v.space.parity_of(j)) == parity
    };
    let mut var = vec![usize::MAX; dw * dv];
    let mut count = 0;
    for k in 0..dw {
        for j in 0..dv {
            if allowed(k, j) {
                var[k * dv + j] = count;
                count += 1;
            }
        }
    }
    let mut elim = SparseEliminator::new(count);
    for ((a, _), (b, _)) in v.operators().into_iter().zip(w.operators()) {
        let b_rows = sparse_rows(b);
        let a_cols = sparse_rows(&a.transpose());
        for i in 0..dw {
            for j in 0..dv {
                let mut row = Vec::new();
                for (k, z) in &b_rows[i] {
                    let c = var[k * dv + j];
                    if c != usize::MAX {
                        row.push((c, z.clone()));
                    }
                }
                for (k, z) in &a_cols[j] {
                    let c = var[i * dv + k];
                    if c != usize::MAX {
                        row.push((c, -z.clone()));
                    }
                }
                if !row.is_empty() {
                    elim.push(row);
                }
            }
        }
    }
    let basis = elim
        .kernel()
        .into_iter()
        .map(|x| {
            M::from_fn(dw, dv, |k, j| {
                let c = var[k * dv + j];
                if c == usize::MAX {
                    Gaussian::zero()
                } else {
                    x[c].clone()
                }
            })
        })
        .collect();
    Ok(HomSpace { parity, basis })
}

#[derive(Clone, Debug)]
pub enum IsoVerdict {
    Isomorphic { witness: M, inverse: M },
    NotIsomorphic,
    Undecided,
}

impl IsoVerdict {
    pub fn is_iso(&self) -> bool {
        matches!(self, IsoVerdict::Isomorphic { .. })
    }
}

fn traces_match(v: &SuperModule, w: &SuperModule) -> bool {
    let gv = v.grading();
    let gw = w.grading();
    v.operators().into_iter().zip(w.operators()).all(|((a, _), (b, _))| {
        a.trace() == b.trace() && gv.mul(a).trace() == gw.mul(b).trace()
    })
}

fn coefficient_set(field: FieldTag) -> Vec<Gaussian> {
    let mut c = vec![gauss(1, 0), gauss(-1, 0)];
    if field == FieldTag::ComplexQi {
        c.push(imag_unit());
        c.push(-imag_unit());
    }
    c
}

fn invertible(t: &M) -> Option<M> {
    if t.determinant().is_zero() {
        None
    } else {
        t.inverse()
    }
}

/// Looks for an invertible even map `v → w`.
///
/// Tries each basis element of the hom-space, then (above dimension 2) a
/// few seeded random combinations, then pairs with unit coefficients. When
/// the hom-space has dimension at most 2 the pencil `B₁ + tB₂` is sampled at
/// enough points to decide exactly.
pub fn iso_test(v: &SuperModule, w: &SuperModule) -> Result<IsoVerdict, ModuleError> {
    if !v.same_context(w) {
        return Err(ModuleError::ContextMismatch);
    }
    if v.space != w.space || !traces_match(v, w) {
        return Ok(IsoVerdict::NotIsomorphic);
    }
    if v.dim() == 0 {
        return Ok(IsoVerdict::Isomorphic { witness: M::zeros(0, 0), inverse: M::zeros(0, 0) });
    }
    let hom = hom_space(v, w, Parity::Even)?;
    let found = |t: M| invertible(&t).map(|inv| IsoVerdict::Isomorphic { witness: t, inverse: inv });
    for b in &hom.basis {
        if let Some(r) = found(b.clone()) {
            return Ok(r);
        }
    }
    // a generic combination is invertible whenever any element is, so for
    // large hom-spaces random draws come before the pair sweep
    let random = |k: usize| -> Option<IsoVerdict> {
        let mut rng = ChaCha8Rng::seed_from_u64(0x150 + k as u64);
        (0..24).find_map(|_| {
            let c: Vec<Gaussian> = (0..k).map(|_| gauss(rng.gen_range(-1000..=1000), 0)).collect();
            found(hom.combination(&c))
        })
    };
    if hom.dim() > 2 {
        if let Some(r) = random(hom.dim()) {
            return Ok(r);
        }
    }
    let coeffs = coefficient_set(v.field());
    for i in 0..hom.dim() {
        for j in i + 1..hom.dim() {
            for c in &coeffs {
                if let Some(r) = found(hom.basis[i].add(&hom.basis[j].scale(c))) {
                    return Ok(r);
                }
            }
        }
    }
    match hom.dim() {
        0 | 1 => Ok(IsoVerdict::NotIsomorphic),
        2 => {
            // det(B₁ + tB₂) has degree ≤ n in t
            for t in 0..=v.dim() as i64 {
                if let Some(r) = found(hom.basis[0].add(&hom.basis[1].scale(&gauss(t, 0)))) {
                    return Ok(r);
                }
            }
            Ok(IsoVerdict::NotIsomorphic)
        }
        _ => Ok(IsoVerdict::Undecided),
    }
}

#[derive(Clone, Debug)]
pub enum Involution {
    /// `witness² = square·Id` with `square` positive (real) or nonzero
    /// (complex); rescaling by `√square` over the modeled field gives the
    /// involution.
    Yes { witness: M, square: Gaussian },
    No,
    Undecided,
}

impl Involution {
    pub fn is_yes(&self) -> bool {
        matches!(self, Involution::Yes { .. })
    }
}

fn acceptable_square(field: FieldTag, c: &Gaussian) -> bool {
    match field {
        FieldTag::RealQ => c.im.is_zero() && c.re.is_positive(),
        FieldTag::ComplexQi => !c.is_zero(),
    }
}

/// Some `x` with `xᵀ G x` positive (real) or nonzero (complex).
fn representing_vector(field: FieldTag, gram: &Matrix<Gaussian>) -> Option<Vec<Gaussian>> {
    let n = gram.rows();
    let unit = |i: usize| {
        let mut v = vec![Gaussian::zero(); n];
        v[i] = Gaussian::one();
        v
    };
    let form = |x: &[Gaussian], y: &[Gaussian]| {
        let gy = gram.mul_vec(y);
        x.iter().zip(&gy).fold(Gaussian::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    };
    let mut vecs: Vec<Vec<Gaussian>> = (0..n).map(unit).collect();
    loop {
        let g = |i: usize, j: usize| form(&vecs[i], &vecs[j]);
        let m = vecs.len();
        if m == 0 {
            return None;
        }
        if let Some(i) = (0..m).find(|&i| acceptable_square(field, &g(i, i))) {
            return Some(vecs[i].clone());
        }
        if let Some(i) = (0..m).find(|&i| g(i, i).is_zero()) {
            if let Some(j) = (0..m).find(|&j| j != i && !g(i, j).is_zero()) {
                let gij = g(i, j);
                let gjj = g(j, j);
                let t = (Gaussian::one() - gjj) / (gij * gauss(2, 0));
                let x = vecs[i].iter().zip(&vecs[j]).map(|(a, b)| t.clone() * a.clone() + b.clone()).collect();
                return Some(x);
            }
            vecs.remove(i);
            continue;
        }
        if field == FieldTag::ComplexQi {
            return None;
        }
        // every remaining diagonal entry is negative: split off vecs[0]
        let g00 = g(0, 0);
        let coeffs: Vec<Gaussian> = (1..m).map(|j| g(0, j) / g00.clone()).collect();
        let pivot = vecs[0].clone();
        vecs = vecs[1..]
            .iter()
            .zip(coeffs)
            .map(|(v, c)| v.iter().zip(&pivot).map(|(a, b)| a.clone() - c.clone() * b.clone()).collect())
            .collect();
    }
}

/// Decides whether the odd commutant of `v` contains an element squaring
/// to a positive (real) or nonzero (complex) multiple of the identity.
pub fn involution_exists(v: &SuperModule) -> Result<Involution, ModuleError> {
    if !v.graded {
        return Err(ModuleError::NeedsGraded);
    }
    let odd = hom_space(v, v, Parity::Odd)?;
    if odd.dim() == 0 {
        return Ok(Involution::No);
    }
    let field = v.field();
    let check = |a: M| -> Option<Involution> {
        let c = a.mul(&a).as_scalar()?;
        acceptable_square(field, &c).then_some(Involution::Yes { witness: a, square: c })
    };
    for b in &odd.basis {
        if let Some(r) = check(b.clone()) {
            return Ok(r);
        }
    }
    for i in 0..odd.dim() {
        for j in i + 1..odd.dim() {
            for c in coefficient_set(field) {
                if let Some(r) = check(odd.basis[i].add(&odd.basis[j].scale(&c))) {
                    return Ok(r);
                }
            }
        }
    }
    let k = odd.dim();
    let mut gram = Matrix::zeros(k, k);
    let half = real(crate::exactnum::ratio(1, 2));
    for i in 0..k {
        for j in i..k {
            let (a, b) = (&odd.basis[i], &odd.basis[j]);
            let s = a.mul(b).add(&b.mul(a));
            let Some(c) = s.as_scalar() else {
                return Ok(Involution::Undecided);
            };
            gram[(i, j)] = c.clone() * half.clone();
            gram[(j, i)] = c * half.clone();
        }
    }
    Ok(match representing_vector(field, &gram) {
        Some(x) => {
            let a = odd.combination(&x);
            let square = a.mul(&a).as_scalar().expect("scalar by construction");
            Involution::Yes { witness: a, square }
        }
        None => Involution::No,
    })
}
