use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactnum::{field_sqrt, gauss, real, FieldTag, Gaussian, Matrix, Rational};

type M = Matrix<Gaussian>;

fn flat(m: &M) -> Vec<Gaussian> {
    m.entries().cloned().collect()
}

/// Monic minimal polynomial of `t`, coefficients in ascending degree.
pub(crate) fn min_poly(t: &M) -> Vec<Gaussian> {
    let n = t.rows();
    let mut powers = vec![M::identity(n)];
    loop {
        let next = powers.last().expect("nonempty").mul(t);
        let cols: Vec<Vec<Gaussian>> = powers.iter().map(flat).collect();
        if let Some(x) = M::from_columns(&cols, n * n).solve(&flat(&next)) {
            let mut p: Vec<Gaussian> = x.into_iter().map(|c| -c).collect();
            p.push(Gaussian::one());
            return p;
        }
        powers.push(next);
    }
}

fn eval(p: &[Gaussian], x: &Gaussian) -> Gaussian {
    p.iter().rev().fold(Gaussian::zero(), |acc, c| acc * x.clone() + c.clone())
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let Some(small) = n.to_u64().filter(|&v| v > 0 && v <= 1_000_000) else {
        return vec![BigInt::one()];
    };
    (1..=small).filter(|d| small % d == 0).map(BigInt::from).collect()
}

/// Roots in the field: closed form up to degree 2, otherwise rational-root
/// candidates and small Gaussian integers.
pub(crate) fn roots_in_field(field: FieldTag, p: &[Gaussian]) -> Vec<Gaussian> {
    let admit = |z: &Gaussian| field.admits(z);
    match p.len() {
        0 | 1 => vec![],
        2 => Some(-p[0].clone()).filter(admit).into_iter().collect(),
        3 => {
            let (c, b) = (&p[0], &p[1]);
            let disc = b.clone() * b.clone() - gauss(4, 0) * c.clone();
            let Some(s) = field_sqrt(field, &disc) else { return vec![] };
            let half = real(Rational::new(1.into(), 2.into()));
            let mut r = vec![(s.clone() - b.clone()) * half.clone()];
            if !s.is_zero() {
                r.push((-s - b.clone()) * half);
            }
            r
        }
        _ => {
            let mut cands: Vec<Gaussian> = Vec::new();
            if p.iter().all(|c| c.im.is_zero()) {
                let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.re.denom()));
                let ints: Vec<BigInt> = p.iter().map(|c| (&c.re * Rational::from(lcm.clone())).to_integer()).collect();
                let lead = ints.last().expect("nonempty");
                let low = ints.iter().find(|c| !c.is_zero()).expect("monic");
                if ints[0].is_zero() {
                    cands.push(Gaussian::zero());
                }
                for a in divisors(low) {
                    for b in divisors(lead) {
                        let q = Rational::new(a.clone(), b);
                        cands.push(real(q.clone()));
                        cands.push(real(-q));
                    }
                }
            }
            if field == FieldTag::ComplexQi {
                for a in -3..=3 {
                    for b in -3..=3 {
                        cands.push(gauss(a, b));
                    }
                }
            }
            let mut out: Vec<Gaussian> = Vec::new();
            for z in cands {
                if admit(&z) && !out.contains(&z) && eval(p, &z).is_zero() {
                    out.push(z);
                }
            }
            out
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DivisionKind {
    Real,
    Complex,
    Quaternion,
}

#[derive(Clone, Debug)]
pub(crate) enum Commutant {
    /// A nonzero singular element.
    Split(M),
    Division(DivisionKind),
    NotRealIrreducible,
    NotAbsolutelyIrreducible,
    Unknown,
}

fn zero_divisor(field: FieldTag, candidates: &[M]) -> Option<M> {
    for t in candidates {
        if t.as_scalar().is_some() {
            continue;
        }
        if let Some(r) = roots_in_field(field, &min_poly(t)).into_iter().next() {
            return Some(t.sub(&M::identity(t.rows()).scale(&r)));
        }
    }
    None
}

fn is_negative(z: &Gaussian) -> bool {
    z.im.is_zero() && z.re.is_negative()
}

/// Structure of an even commutant given by a basis.
pub(crate) fn analyze(field: FieldTag, basis: &[M]) -> Commutant {
    let n = basis.len();
    if n <= 1 {
        return Commutant::Division(DivisionKind::Real);
    }
    let mut candidates: Vec<M> = basis.to_vec();
    if n <= 6 {
        for i in 0..n {
            for j in i + 1..n {
                candidates.push(basis[i].add(&basis[j]));
                candidates.push(basis[i].mul(&basis[j]));
            }
        }
    }
    if let Some(z) = zero_divisor(field, &candidates) {
        return Commutant::Split(z);
    }
    let Some(t) = basis.iter().find(|t| t.as_scalar().is_none()) else {
        return Commutant::Unknown;
    };
    let p = min_poly(t);
    match (field, n) {
        (FieldTag::ComplexQi, 2) => Commutant::NotAbsolutelyIrreducible,
        (FieldTag::ComplexQi, _) => Commutant::Unknown,
        (FieldTag::RealQ, 2) => {
            let disc = p[1].clone() * p[1].clone() - gauss(4, 0) * p[0].clone();
            if is_negative(&disc) {
                Commutant::Division(DivisionKind::Complex)
            } else {
                Commutant::NotRealIrreducible
            }
        }
        (FieldTag::RealQ, 4) => quaternion_check(t, &p, basis),
        _ => Commutant::Unknown,
    }
}

/// `u² = a`, `v² = b`, `uv = −vu` with `a, b < 0` means the real span of
/// `1, u, v, uv` is Hamilton's quaternions.
fn quaternion_check(t: &M, p: &[Gaussian], basis: &[M]) -> Commutant {
    if p.len() != 3 {
        return Commutant::NotRealIrreducible;
    }
    let d = t.rows();
    let half_b = p[1].clone() * real(Rational::new(1.into(), 2.into()));
    let u = t.add(&M::identity(d).scale(&half_b));
    let Some(a) = u.mul(&u).as_scalar() else { return Commutant::Unknown };
    let Some(v) = basis.iter().map(|s| u.mul(s).sub(&s.mul(&u))).find(|v| !v.is_zero()) else {
        return Commutant::NotRealIrreducible;
    };
    let Some(b) = v.mul(&v).as_scalar() else { return Commutant::Unknown };
    if !u.mul(&v).add(&v.mul(&u)).is_zero() {
        return Commutant::Unknown;
    }
    if is_negative(&a) && is_negative(&b) {
        Commutant::Division(DivisionKind::Quaternion)
    } else {
        Commutant::NotRealIrreducible
    }
}
