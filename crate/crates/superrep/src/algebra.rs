//! Lie superalgebras by structure constants, Clifford signatures and the
//! shifted contexts `U(g) ⊗̃ Cl(p,q)`.

use std::sync::Arc;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactnum::{format_gaussian, rat, real, FieldTag, Gaussian, Matrix};
use crate::superspace::{GradedMap, Parity};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("duplicate generator {0:?}")]
    DuplicateGenerator(String),
    #[error("bracket [{0},{1}] has a component along {2} of the wrong parity")]
    BracketParity(String, String, String),
    #[error("brackets [{0},{1}] and [{1},{0}] are inconsistent with super antisymmetry")]
    Antisymmetry(String, String),
    #[error("constant {0} is outside the field {1:?}")]
    OutsideField(String, FieldTag),
    #[error("unknown builtin {0:?}")]
    UnknownBuiltin(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieSuperAlgebra {
    field: FieldTag,
    names: Vec<String>,
    parities: Vec<Parity>,
    /// `[X_i, X_j] = Σ_k c[i][j][k] X_k`
    consts: Vec<Vec<Vec<Gaussian>>>,
}

/// One bracket entry `[x, y] ∋ coeff · z`.
#[derive(Clone, Debug, PartialEq)]
pub struct BracketTerm {
    pub x: String,
    pub y: String,
    pub z: String,
    pub coeff: Gaussian,
}

impl BracketTerm {
    pub fn new(x: &str, y: &str, z: &str, coeff: Gaussian) -> Self {
        BracketTerm { x: x.into(), y: y.into(), z: z.into(), coeff }
    }
}

impl LieSuperAlgebra {
    pub fn trivial(field: FieldTag) -> Self {
        LieSuperAlgebra { field, names: vec![], parities: vec![], consts: vec![] }
    }

    /// Builds the algebra from listed brackets, filling in the super
    /// antisymmetric partner of each. Generators are reordered so the even
    /// ones come first.
    pub fn from_brackets(
        field: FieldTag,
        generators: &[(String, Parity)],
        brackets: &[BracketTerm],
    ) -> Result<Self, AlgebraError> {
        let mut gens: Vec<(String, Parity)> = generators.to_vec();
        gens.sort_by_key(|g| g.1);
        for (k, g) in gens.iter().enumerate() {
            if gens[..k].iter().any(|h| h.0 == g.0) {
                return Err(AlgebraError::DuplicateGenerator(g.0.clone()));
            }
        }
        let n = gens.len();
        let names: Vec<String> = gens.iter().map(|g| g.0.clone()).collect();
        let parities: Vec<Parity> = gens.iter().map(|g| g.1).collect();
        let idx = |s: &str| {
            names.iter().position(|m| m == s).ok_or_else(|| AlgebraError::UnknownGenerator(s.into()))
        };
        let mut consts = vec![vec![vec![Gaussian::zero(); n]; n]; n];
        let mut given = vec![vec![false; n]; n];
        for t in brackets {
            if !field.admits(&t.coeff) {
                return Err(AlgebraError::OutsideField(format_gaussian(&t.coeff), field));
            }
            let (i, j, k) = (idx(&t.x)?, idx(&t.y)?, idx(&t.z)?);
            if parities[i].add(parities[j]) != parities[k] && !t.coeff.is_zero() {
                return Err(AlgebraError::BracketParity(t.x.clone(), t.y.clone(), t.z.clone()));
            }
            consts[i][j][k] = consts[i][j][k].clone() + t.coeff.clone();
            given[i][j] = true;
        }
        for i in 0..n {
            for j in 0..n {
                let sign = if parities[i].is_odd() && parities[j].is_odd() { 1 } else { -1 };
                for k in 0..n {
                    let mirrored = real(rat(sign)) * consts[j][i][k].clone();
                    if given[i][j] && given[j][i] {
                        if consts[i][j][k] != mirrored {
                            return Err(AlgebraError::Antisymmetry(names[i].clone(), names[j].clone()));
                        }
                    } else if !given[i][j] && given[j][i] {
                        consts[i][j][k] = mirrored;
                    }
                }
            }
        }
        Ok(LieSuperAlgebra { field, names, parities, consts })
    }

    /// Raw constructor; no consistency checks. Generators must already be
    /// ordered even first.
    pub fn from_constants(
        field: FieldTag,
        generators: Vec<(String, Parity)>,
        consts: Vec<Vec<Vec<Gaussian>>>,
    ) -> Self {
        let (names, parities) = generators.into_iter().unzip();
        LieSuperAlgebra { field, names, parities, consts }
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Gaussian {
        &self.consts[i][j][k]
    }

    /// `[X_i, X_j]` as a coordinate vector.
    pub fn bracket(&self, i: usize, j: usize) -> &[Gaussian] {
        &self.consts[i][j]
    }

    pub fn with_field(&self, field: FieldTag) -> Self {
        LieSuperAlgebra { field, ..self.clone() }
    }

    /// Bracket of two coordinate vectors.
    pub fn bracket_vectors(&self, u: &[Gaussian], v: &[Gaussian]) -> Vec<Gaussian> {
        let n = self.dim();
        let mut out = vec![Gaussian::zero(); n];
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if v[j].is_zero() {
                    continue;
                }
                let c = u[i].clone() * v[j].clone();
                for (k, ck) in self.consts[i][j].iter().enumerate() {
                    if !ck.is_zero() {
                        out[k] = out[k].clone() + c.clone() * ck.clone();
                    }
                }
            }
        }
        out
    }

    /// `ḡ`: the bracket of two odd generators changes sign.
    pub fn bar(&self) -> Self {
        let mut out = self.clone();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                if self.parities[i].is_odd() && self.parities[j].is_odd() {
                    for c in out.consts[i][j].iter_mut() {
                        *c = -c.clone();
                    }
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum JacobiViolation {
    Antisymmetry { x: String, y: String },
    Parity { x: String, y: String, z: String },
    Jacobi { x: String, y: String, z: String, lhs: Vec<Gaussian>, rhs: Vec<Gaussian> },
}

impl std::fmt::Display for JacobiViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let show = |v: &[Gaussian]| v.iter().map(format_gaussian).collect::<Vec<_>>().join(", ");
        match self {
            JacobiViolation::Antisymmetry { x, y } => {
                write!(f, "[{x},{y}] and [{y},{x}] violate super antisymmetry")
            }
            JacobiViolation::Parity { x, y, z } => {
                write!(f, "[{x},{y}] has a component along {z} of the wrong parity")
            }
            JacobiViolation::Jacobi { x, y, z, lhs, rhs } => write!(
                f,
                "Jacobi fails at ({x},{y},{z}): [{x},[{y},{z}]] = ({}) but right side = ({})",
                show(lhs),
                show(rhs)
            ),
        }
    }
}

/// Checks super antisymmetry, bracket parity and the super Jacobi identity.
/// Triples with more odd entries are examined first.
pub fn check_jacobi(g: &LieSuperAlgebra) -> Result<(), JacobiViolation> {
    let n = g.dim();
    let name = |i: usize| g.names[i].clone();
    for i in 0..n {
        for j in 0..n {
            let s = if g.parities[i].is_odd() && g.parities[j].is_odd() { -1 } else { 1 };
            for k in 0..n {
                if g.consts[i][j][k] != -(real(rat(s)) * g.consts[j][i][k].clone()) {
                    return Err(JacobiViolation::Antisymmetry { x: name(i), y: name(j) });
                }
                if !g.consts[i][j][k].is_zero() && g.parities[i].add(g.parities[j]) != g.parities[k] {
                    return Err(JacobiViolation::Parity { x: name(i), y: name(j), z: name(k) });
                }
            }
        }
    }
    let mut triples: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
        .collect();
    let odd_count = |t: &(usize, usize, usize)| {
        [t.0, t.1, t.2].iter().filter(|&&a| g.parities[a].is_odd()).count()
    };
    triples.sort_by_key(|t| std::cmp::Reverse(odd_count(t)));
    let unit = |i: usize| {
        let mut v = vec![Gaussian::zero(); n];
        v[i] = Gaussian::one();
        v
    };
    for (x, y, z) in triples {
        let (ux, uy, uz) = (unit(x), unit(y), unit(z));
        let lhs = g.bracket_vectors(&ux, &g.bracket_vectors(&uy, &uz));
        let first = g.bracket_vectors(&g.bracket_vectors(&ux, &uy), &uz);
        let second = g.bracket_vectors(&uy, &g.bracket_vectors(&ux, &uz));
        let s = if g.parities[x].is_odd() && g.parities[y].is_odd() { -1 } else { 1 };
        let rhs: Vec<Gaussian> =
            first.iter().zip(&second).map(|(a, b)| a.clone() + real(rat(s)) * b.clone()).collect();
        if lhs != rhs {
            return Err(JacobiViolation::Jacobi { x: name(x), y: name(y), z: name(z), lhs, rhs });
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CliffordSignature {
    /// generators `e_1..e_p` with `e² = −1`
    pub p: usize,
    /// generators `f_1..f_q` with `f² = +1`
    pub q: usize,
}

impl CliffordSignature {
    pub fn new(p: usize, q: usize) -> Self {
        CliffordSignature { p, q }
    }

    pub fn count(&self) -> usize {
        self.p + self.q
    }

    /// Generators are stored `e_1..e_p, f_1..f_q`.
    pub fn square(&self, k: usize) -> i64 {
        if k < self.p {
            -1
        } else {
            1
        }
    }

    pub fn generator_name(&self, k: usize) -> String {
        if k < self.p {
            format!("e{}", k + 1)
        } else {
            format!("f{}", k - self.p + 1)
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CliffordViolation {
    pub a: String,
    pub b: String,
    pub residual: Matrix<Gaussian>,
}

impl std::fmt::Display for CliffordViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.a == self.b {
            write!(f, "{}² has the wrong sign", self.a)
        } else {
            write!(f, "{} and {} do not anticommute", self.a, self.b)
        }
    }
}

/// Checks squares and anticommutators of the given Clifford operators.
pub fn clifford_matrices_check(
    sig: &CliffordSignature,
    actions: &[Matrix<Gaussian>],
) -> Result<(), CliffordViolation> {
    assert_eq!(actions.len(), sig.count(), "one operator per Clifford generator");
    for a in 0..actions.len() {
        for b in a..actions.len() {
            let ab = actions[a].mul(&actions[b]);
            let residual = if a == b {
                let target = real(rat(sig.square(a)));
                ab.sub(&Matrix::identity(ab.rows()).scale(&target))
            } else {
                ab.add(&actions[b].mul(&actions[a]))
            };
            if !residual.is_zero() {
                return Err(CliffordViolation {
                    a: sig.generator_name(a),
                    b: sig.generator_name(b),
                    residual,
                });
            }
        }
    }
    Ok(())
}

/// As [`clifford_matrices_check`], also requiring every operator to be odd.
pub fn clifford_relation_check(
    sig: &CliffordSignature,
    actions: &[GradedMap],
) -> Result<(), CliffordViolation> {
    for (k, a) in actions.iter().enumerate() {
        if a.parity != Parity::Odd {
            return Err(CliffordViolation {
                a: sig.generator_name(k),
                b: sig.generator_name(k),
                residual: a.matrix.clone(),
            });
        }
    }
    let mats: Vec<Matrix<Gaussian>> = actions.iter().map(|a| a.matrix.clone()).collect();
    clifford_matrices_check(sig, &mats)
}

/// `U(g) ⊗̃ Cl(p,q)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ShiftedContext {
    pub algebra: Arc<LieSuperAlgebra>,
    pub signature: CliffordSignature,
}

impl ShiftedContext {
    pub fn new(algebra: LieSuperAlgebra, signature: CliffordSignature) -> Self {
        ShiftedContext { algebra: Arc::new(algebra), signature }
    }

    pub fn field(&self) -> FieldTag {
        self.algebra.field()
    }

    pub fn with_signature(&self, signature: CliffordSignature) -> Self {
        ShiftedContext { algebra: Arc::clone(&self.algebra), signature }
    }

    pub fn same_algebra(&self, other: &ShiftedContext) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra
    }
}

/// `q(1)`: even `H`, odd `Q`, `[Q,Q] = 2H`.
pub fn q1(field: FieldTag) -> LieSuperAlgebra {
    LieSuperAlgebra::from_brackets(
        field,
        &[("H".into(), Parity::Even), ("Q".into(), Parity::Odd)],
        &[BracketTerm::new("Q", "Q", "H", real(rat(2)))],
    )
    .expect("q(1) presentation is consistent")
}

/// `trivial`, `q1`, or `clifford:p,q`.
pub fn builtin(name: &str, field: FieldTag) -> Result<ShiftedContext, AlgebraError> {
    let unknown = || AlgebraError::UnknownBuiltin(name.into());
    match name {
        "trivial" => Ok(ShiftedContext::new(LieSuperAlgebra::trivial(field), CliffordSignature::new(0, 0))),
        "q1" => Ok(ShiftedContext::new(q1(field), CliffordSignature::new(0, 0))),
        _ => {
            let sig = name.strip_prefix("clifford:").ok_or_else(unknown)?;
            let (p, q) = sig.split_once(',').ok_or_else(unknown)?;
            let p = p.trim().parse().map_err(|_| unknown())?;
            let q = q.trim().parse().map_err(|_| unknown())?;
            Ok(ShiftedContext::new(LieSuperAlgebra::trivial(field), CliffordSignature::new(p, q)))
        }
    }
}
