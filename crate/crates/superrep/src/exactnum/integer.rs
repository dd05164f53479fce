use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::Matrix;

pub type IntegerMatrix = Matrix<BigInt>;

pub fn int_matrix(rows: &[&[i64]]) -> IntegerMatrix {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
}

/// `u · a · v = d` with `d` diagonal and each diagonal entry dividing the next.
#[derive(Clone, Debug)]
pub struct Smith {
    pub u: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl Smith {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

fn swap_rows(m: &mut IntegerMatrix, a: usize, b: usize) {
    if a != b {
        for j in 0..m.cols() {
            let t = m[(a, j)].clone();
            m[(a, j)] = m[(b, j)].clone();
            m[(b, j)] = t;
        }
    }
}

fn swap_cols(m: &mut IntegerMatrix, a: usize, b: usize) {
    if a != b {
        for i in 0..m.rows() {
            let t = m[(i, a)].clone();
            m[(i, a)] = m[(i, b)].clone();
            m[(i, b)] = t;
        }
    }
}

// row[dst] += c * row[src]
fn add_row(m: &mut IntegerMatrix, dst: usize, src: usize, c: &BigInt) {
    for j in 0..m.cols() {
        if !m[(src, j)].is_zero() {
            let v = &m[(dst, j)] + c * &m[(src, j)];
            m[(dst, j)] = v;
        }
    }
}

// col[dst] += c * col[src]
fn add_col(m: &mut IntegerMatrix, dst: usize, src: usize, c: &BigInt) {
    for i in 0..m.rows() {
        if !m[(i, src)].is_zero() {
            let v = &m[(i, dst)] + c * &m[(i, src)];
            m[(i, dst)] = v;
        }
    }
}

fn negate_row(m: &mut IntegerMatrix, r: usize) {
    for j in 0..m.cols() {
        let v = -m[(r, j)].clone();
        m[(r, j)] = v;
    }
}

fn negate_col(m: &mut IntegerMatrix, c: usize) {
    for i in 0..m.rows() {
        let v = -m[(i, c)].clone();
        m[(i, c)] = v;
    }
}

fn smallest_nonzero(
    d: &IntegerMatrix,
    cells: impl Iterator<Item = (usize, usize)>,
) -> Option<(usize, usize)> {
    cells
        .filter(|&c| !d[c].is_zero())
        .min_by(|&a, &b| d[a].abs().cmp(&d[b].abs()))
}

pub fn smith_normal_form(a: &IntegerMatrix) -> Smith {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntegerMatrix::identity(m);
    let mut v = IntegerMatrix::identity(n);
    for t in 0..m.min(n) {
        let cells = (t..m).flat_map(|i| (t..n).map(move |j| (i, j)));
        let Some((pi, pj)) = smallest_nonzero(&d, cells) else { break };
        swap_rows(&mut d, t, pi);
        swap_rows(&mut u, t, pi);
        swap_cols(&mut d, t, pj);
        swap_cols(&mut v, t, pj);
        loop {
            for i in t + 1..m {
                if !d[(i, t)].is_zero() {
                    let q = -(&d[(i, t)] / &d[(t, t)]);
                    add_row(&mut d, i, t, &q);
                    add_row(&mut u, i, t, &q);
                }
            }
            for j in t + 1..n {
                if !d[(t, j)].is_zero() {
                    let q = -(&d[(t, j)] / &d[(t, t)]);
                    add_col(&mut d, j, t, &q);
                    add_col(&mut v, j, t, &q);
                }
            }
            let rest = (t + 1..m).map(|i| (i, t)).chain((t + 1..n).map(|j| (t, j)));
            if let Some((i, j)) = smallest_nonzero(&d, rest) {
                if j == t {
                    swap_rows(&mut d, t, i);
                    swap_rows(&mut u, t, i);
                } else {
                    swap_cols(&mut d, t, j);
                    swap_cols(&mut v, t, j);
                }
                continue;
            }
            let p = d[(t, t)].clone();
            let bad = (t + 1..m)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&c| !d[c].is_multiple_of(&p));
            match bad {
                Some((i, _)) => {
                    add_row(&mut d, t, i, &BigInt::one());
                    add_row(&mut u, t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            negate_row(&mut d, t);
            negate_row(&mut u, t);
        }
    }
    Smith { u, d, v }
}

/// Free rank and torsion coefficients (all > 1) of `ℤ^rows / span(columns)`.
pub fn quotient_invariants(relations: &IntegerMatrix) -> (usize, Vec<BigInt>) {
    let s = smith_normal_form(relations);
    let diag = s.diagonal();
    let rank = diag.iter().filter(|x| !x.is_zero()).count();
    let torsion = diag.into_iter().filter(|x| *x > BigInt::one()).collect();
    (relations.rows() - rank, torsion)
}

/// Columns spanning `{x : a·x = 0}` over ℤ.
pub fn integer_kernel(a: &IntegerMatrix) -> IntegerMatrix {
    let s = smith_normal_form(a);
    let r = s.rank();
    let cols: Vec<usize> = (r..a.cols()).collect();
    let rows: Vec<usize> = (0..a.cols()).collect();
    s.v.submatrix(&rows, &cols)
}

/// Some integer `x` with `a·x = b`.
pub fn solve_integer(a: &IntegerMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let s = smith_normal_form(a);
    let c = s.u.mul_vec(b);
    let diag = s.diagonal();
    let mut y = vec![BigInt::zero(); a.cols()];
    for (i, ci) in c.iter().enumerate() {
        match diag.get(i) {
            Some(di) if !di.is_zero() => {
                let (q, r) = ci.div_rem(di);
                if !r.is_zero() {
                    return None;
                }
                y[i] = q;
            }
            _ if !ci.is_zero() => return None,
            _ => {}
        }
    }
    Some(s.v.mul_vec(&y))
}

/// Column Hermite form: a basis of the column lattice in echelon shape,
/// with pivot rows strictly increasing and positive pivots.
#[derive(Clone, Debug)]
pub struct Hermite {
    pub basis: IntegerMatrix,
    pub pivot_rows: Vec<usize>,
}

pub fn hermite_columns(a: &IntegerMatrix) -> Hermite {
    let mut h = a.clone();
    let (m, n) = (h.rows(), h.cols());
    let mut k = 0;
    let mut pivot_rows = Vec::new();
    for r in 0..m {
        if k == n {
            break;
        }
        loop {
            let Some((_, j)) = smallest_nonzero(&h, (k..n).map(|j| (r, j))) else { break };
            swap_cols(&mut h, k, j);
            let mut clean = true;
            for j in k + 1..n {
                if !h[(r, j)].is_zero() {
                    let q = -(&h[(r, j)] / &h[(r, k)]);
                    add_col(&mut h, j, k, &q);
                    clean &= h[(r, j)].is_zero();
                }
            }
            if clean {
                break;
            }
        }
        if h[(r, k)].is_zero() {
            continue;
        }
        if h[(r, k)].is_negative() {
            negate_col(&mut h, k);
        }
        let p = h[(r, k)].clone();
        for j in 0..k {
            let q = -h[(r, j)].div_floor(&p);
            if !q.is_zero() {
                add_col(&mut h, j, k, &q);
            }
        }
        pivot_rows.push(r);
        k += 1;
    }
    let rows: Vec<usize> = (0..m).collect();
    let cols: Vec<usize> = (0..k).collect();
    Hermite { basis: h.submatrix(&rows, &cols), pivot_rows }
}

impl Hermite {
    pub fn contains(&self, b: &[BigInt]) -> bool {
        let mut b = b.to_vec();
        for (k, &r) in self.pivot_rows.iter().enumerate() {
            let (q, rem) = b[r].div_rem(&self.basis[(r, k)]);
            if !rem.is_zero() {
                return false;
            }
            if !q.is_zero() {
                for i in r..b.len() {
                    b[i] -= &q * &self.basis[(i, k)];
                }
            }
        }
        b.iter().all(Zero::is_zero)
    }

    pub fn contains_all(&self, cols: &IntegerMatrix) -> bool {
        (0..cols.cols()).all(|j| self.contains(&cols.column(j)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeRelation {
    Equal,
    /// The first lattice strictly contains the second.
    Contains,
    /// The first lattice is strictly contained in the second.
    ContainedIn,
    Incomparable,
}

/// Compares the column spans of `a` and `b` in `ℤ^rows`.
pub fn lattice_compare(a: &IntegerMatrix, b: &IntegerMatrix) -> LatticeRelation {
    assert_eq!(a.rows(), b.rows(), "lattices live in different ambients");
    let ab = hermite_columns(a).contains_all(b);
    let ba = hermite_columns(b).contains_all(a);
    match (ab, ba) {
        (true, true) => LatticeRelation::Equal,
        (true, false) => LatticeRelation::Contains,
        (false, true) => LatticeRelation::ContainedIn,
        (false, false) => LatticeRelation::Incomparable,
    }
}
