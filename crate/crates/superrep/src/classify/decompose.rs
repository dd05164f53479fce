use std::collections::VecDeque;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::commutant::{analyze, Commutant};
use crate::exactnum::{gauss, Gaussian, Matrix};
use crate::superspace::Parity;
use crate::supermodule::{hom_space, iso_test, split_along, SuperModule};

type M = Matrix<Gaussian>;

pub const DEFAULT_SEED: u64 = 0x5eed;

/// Composition factors up to isomorphism, with multiplicities.
#[derive(Clone, Debug)]
pub struct CompositionReport {
    pub factors: Vec<SuperModule>,
    pub multiplicities: Vec<usize>,
    /// `false` means "presumed irreducible": no proper submodule was found
    /// but irreducibility could not be proved.
    pub certified: Vec<bool>,
}

impl CompositionReport {
    pub fn total_dim(&self) -> usize {
        self.factors.iter().zip(&self.multiplicities).map(|(f, k)| f.dim() * k).sum()
    }

    pub fn all_certified(&self) -> bool {
        self.certified.iter().all(|&c| c)
    }
}

/// Incrementally reduced spanning set.
struct Span {
    rows: Vec<(usize, Vec<Gaussian>)>,
}

impl Span {
    fn new() -> Self {
        Span { rows: Vec::new() }
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }

    fn insert(&mut self, mut v: Vec<Gaussian>) -> bool {
        for (p, r) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let c = v[*p].clone();
            for (x, y) in v.iter_mut().zip(r) {
                if !y.is_zero() {
                    *x = x.clone() - c.clone() * y.clone();
                }
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = Gaussian::one() / v[p].clone();
        for x in v.iter_mut() {
            *x = x.clone() * inv.clone();
        }
        self.rows.push((p, v));
        true
    }

    fn vectors(self) -> Vec<Vec<Gaussian>> {
        self.rows.into_iter().map(|r| r.1).collect()
    }
}

/// Smallest subspace containing `seeds` and stable under `ops`.
fn closure(ops: &[M], seeds: &[Vec<Gaussian>], d: usize) -> Span {
    let mut span = Span::new();
    let mut queue = VecDeque::new();
    for s in seeds {
        if span.insert(s.clone()) {
            queue.push_back(s.clone());
        }
    }
    while let Some(v) = queue.pop_front() {
        if span.dim() == d {
            break;
        }
        for x in ops {
            let w = x.mul_vec(&v);
            if span.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    span
}

/// Acting operators, plus the grading for graded modules so that invariant
/// subspaces are automatically graded.
fn acting(m: &SuperModule) -> Vec<M> {
    let mut ops: Vec<M> = m.operators().into_iter().map(|(a, _)| a.clone()).collect();
    if m.graded {
        ops.push(m.grading());
    }
    ops
}

/// Exact when the context has no g-generators (the image is a quotient of
/// a Clifford algebra); otherwise the trace form of the image algebra is
/// tested for degeneracy, for small modules only.
fn is_semisimple(m: &SuperModule, ops: &[M]) -> Option<bool> {
    if m.context.algebra.dim() == 0 {
        return Some(true);
    }
    let d = m.dim();
    if d > 12 {
        return None;
    }
    let flat = |a: &M| a.entries().cloned().collect::<Vec<_>>();
    let mut span = Span::new();
    let mut basis: Vec<M> = Vec::new();
    let mut queue = VecDeque::from([M::identity(d)]);
    span.insert(flat(&M::identity(d)));
    basis.push(M::identity(d));
    while let Some(b) = queue.pop_front() {
        for x in ops {
            let w = x.mul(&b);
            if span.insert(flat(&w)) {
                basis.push(w.clone());
                queue.push_back(w);
            }
        }
    }
    let k = basis.len();
    let mut gram = M::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let mut t = Gaussian::zero();
            for a in 0..d {
                for c in 0..d {
                    let (x, y) = (&basis[i][(a, c)], &basis[j][(c, a)]);
                    if !x.is_zero() && !y.is_zero() {
                        t = t + x.clone() * y.clone();
                    }
                }
            }
            gram[(i, j)] = t.clone();
            gram[(j, i)] = t;
        }
    }
    Some(!gram.determinant().is_zero())
}

enum Split {
    Sub(Vec<Vec<Gaussian>>),
    Irreducible { certified: bool },
}

fn proper(span: &Span, d: usize) -> bool {
    span.dim() > 0 && span.dim() < d
}

fn annihilator(rows: Vec<Vec<Gaussian>>) -> Vec<Vec<Gaussian>> {
    M::from_rows(rows).kernel()
}

fn seed_search(ops: &[M], d: usize, seed: u64) -> Option<Vec<Vec<Gaussian>>> {
    let dual: Vec<M> = ops.iter().map(|x| x.transpose()).collect();
    let primal = |v: &Vec<Gaussian>| {
        let s = closure(ops, std::slice::from_ref(v), d);
        proper(&s, d).then(|| s.vectors())
    };
    let on_dual = |v: &Vec<Gaussian>| {
        let s = closure(&dual, std::slice::from_ref(v), d);
        proper(&s, d).then(|| annihilator(s.vectors()))
    };
    for (x, xt) in ops.iter().zip(&dual) {
        for v in x.kernel() {
            if let Some(s) = primal(&v) {
                return Some(s);
            }
        }
        for v in xt.kernel() {
            if let Some(s) = on_dual(&v) {
                return Some(s);
            }
        }
    }
    let unit = |i: usize| {
        let mut v = vec![Gaussian::zero(); d];
        v[i] = Gaussian::one();
        v
    };
    let mut seeds: Vec<Vec<Gaussian>> = (0..d).map(unit).collect();
    if d <= 8 {
        let signs = [gauss(1, 0), gauss(-1, 0)];
        for i in 0..d {
            for j in i + 1..d {
                for sj in &signs {
                    let mut v = unit(i);
                    v[j] = sj.clone();
                    seeds.push(v.clone());
                    for k in j + 1..d {
                        for sk in &signs {
                            let mut w = v.clone();
                            w[k] = sk.clone();
                            seeds.push(w);
                        }
                    }
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..8 {
        seeds.push((0..d).map(|_| gauss(rng.gen_range(-9..=9), 0)).collect());
    }
    seeds.iter().find_map(|v| primal(v).or_else(|| on_dual(v)))
}

fn find_split(m: &SuperModule, seed: u64) -> Split {
    let d = m.dim();
    if d <= 1 {
        return Split::Irreducible { certified: true };
    }
    let ops = acting(m);
    let end = hom_space(m, m, Parity::Even).expect("same context").basis;
    let structure = analyze(m.field(), &end);
    if let Commutant::Split(t) = &structure {
        return Split::Sub(t.kernel());
    }
    let semisimple = is_semisimple(m, &ops) == Some(true);
    match structure {
        Commutant::Division(_) if semisimple => return Split::Irreducible { certified: true },
        // `{1, t}` with `t` having no eigenvalue in the field: a quadratic
        // field extension, so irreducible over the base field
        Commutant::NotRealIrreducible | Commutant::NotAbsolutelyIrreducible if semisimple && end.len() == 2 => {
            return Split::Irreducible { certified: true }
        }
        Commutant::NotRealIrreducible | Commutant::NotAbsolutelyIrreducible if semisimple => {
            return Split::Irreducible { certified: false }
        }
        _ => {}
    }
    match seed_search(&ops, d, seed) {
        Some(basis) => Split::Sub(basis),
        None => Split::Irreducible { certified: false },
    }
}

pub fn composition_factors(m: &SuperModule) -> CompositionReport {
    composition_factors_seeded(m, DEFAULT_SEED)
}

/// Splits along proper invariant subspaces until none can be found. The
/// search order is: zero divisors in the even commutant, kernels of the
/// acting operators (and of their transposes, through annihilators), basis
/// vectors, signed sums of up to three basis vectors, then seeded random
/// vectors.
pub fn composition_factors_seeded(m: &SuperModule, seed: u64) -> CompositionReport {
    let mut raw: Vec<(SuperModule, bool)> = Vec::new();
    let mut stack = vec![m.clone()];
    while let Some(v) = stack.pop() {
        if v.dim() == 0 {
            continue;
        }
        match find_split(&v, seed) {
            Split::Sub(basis) => {
                let e = M::from_rows(basis).rref();
                let (sub, quo) = split_along(&v, &e.reduced, &e.pivots);
                stack.push(quo);
                stack.push(sub);
            }
            Split::Irreducible { certified } => raw.push((v, certified)),
        }
    }
    let mut report = CompositionReport { factors: vec![], multiplicities: vec![], certified: vec![] };
    for (f, cert) in raw {
        let known = report
            .factors
            .iter()
            .position(|g| iso_test(g, &f).map(|r| r.is_iso()).unwrap_or(false));
        match known {
            Some(k) => {
                report.multiplicities[k] += 1;
                report.certified[k] |= cert;
            }
            None => {
                report.factors.push(f);
                report.multiplicities.push(1);
                report.certified.push(cert);
            }
        }
    }
    report
}
