use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use superrep::exactnum::*;

fn gm(rows: &[&[i64]]) -> Matrix<Gaussian> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| gauss(x, 0)).collect()).collect())
}

fn exact(rows: &[&[i64]]) -> ExactMatrix {
    ExactMatrix::new(FieldTag::RealQ, gm(rows)).unwrap()
}

#[test]
fn rref_examples() {
    let (r, piv) = exact(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).rref();
    assert_eq!(piv, [0, 1, 2]);
    assert_eq!(r.matrix(), &Matrix::identity(3));
    let (r, piv) = exact(&[&[1, 2], &[2, 4]]).rref();
    assert_eq!(piv.len(), 1);
    assert_eq!(r.matrix(), &gm(&[&[1, 2], &[0, 0]]));
    assert_eq!(gm(&[&[0, -1], &[1, 0]]).rank(), 2);
}

#[test]
fn kernel_examples() {
    assert_eq!(exact(&[&[0, 0], &[0, 0]]).kernel().len(), 2);
    let k = exact(&[&[1, 1]]).kernel();
    assert_eq!(k, vec![vec![gauss(-1, 0), gauss(1, 0)]]);
    assert!(exact(&[&[0, -1], &[1, 0]]).kernel().is_empty());
}

#[test]
fn gaussian_arithmetic() {
    let i = imag_unit();
    assert_eq!(&i * &i, gauss(-1, 0));
    assert_eq!(gauss(3, -2).conj(), gauss(3, 2));
    let q = ratio(6, -4);
    assert_eq!((q.numer().clone(), q.denom().clone()), (BigInt::from(-3), BigInt::from(2)));
}

#[test]
fn scalar_text_forms() {
    for (s, z) in [
        ("3/4", real(ratio(3, 4))),
        ("-2", gauss(-2, 0)),
        ("i", imag_unit()),
        ("-i", -imag_unit()),
        ("1/2+3/5*i", Gaussian::new(ratio(1, 2), ratio(3, 5))),
        ("2-i", gauss(2, -1)),
        ("7/3*i", Gaussian::new(rat(0), ratio(7, 3))),
    ] {
        assert_eq!(parse_gaussian(s).unwrap(), z, "{s}");
        assert_eq!(parse_gaussian(&format_gaussian(&z)).unwrap(), z);
    }
    assert_eq!(format_gaussian(&gauss(1, -1)), "1-i");
    assert!(parse_gaussian("1/0").is_err());
    assert!(parse_gaussian("x").is_err());
}

#[test]
fn field_tags_are_enforced() {
    let im = Matrix::from_rows(vec![vec![imag_unit()]]);
    assert!(ExactMatrix::new(FieldTag::RealQ, im.clone()).is_err());
    let c = ExactMatrix::new(FieldTag::ComplexQi, im).unwrap();
    let r = exact(&[&[1]]);
    assert!(matches!(r.mul(&c), Err(NumError::FieldMismatch(..))));
    assert!(matches!(r.add(&c), Err(NumError::FieldMismatch(..))));
    assert!(ExactMatrix::parse(FieldTag::RealQ, &[vec!["1".into(), "2".into()], vec!["3".into()]]).is_err());
}

#[test]
fn square_roots() {
    assert_eq!(field_sqrt(FieldTag::RealQ, &gauss(9, 0)), Some(gauss(3, 0)));
    assert_eq!(field_sqrt(FieldTag::RealQ, &gauss(-4, 0)), None);
    assert_eq!(field_sqrt(FieldTag::ComplexQi, &gauss(-4, 0)), Some(gauss(0, 2)));
    assert_eq!(field_sqrt(FieldTag::ComplexQi, &gauss(0, 2)), Some(gauss(1, 1)));
    assert_eq!(field_sqrt(FieldTag::ComplexQi, &gauss(2, 0)), None);
    assert_eq!(field_sqrt(FieldTag::RealQ, &real(ratio(4, 9))), Some(real(ratio(2, 3))));
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[test]
fn smith_examples() {
    assert_eq!(smith_normal_form(&int_matrix(&[&[2, 0], &[0, 3]])).diagonal(), ints(&[1, 6]));
    assert_eq!(smith_normal_form(&int_matrix(&[&[2]])).diagonal(), ints(&[2]));
    let z = smith_normal_form(&IntegerMatrix::zeros(2, 3));
    assert_eq!(z.rank(), 0);
    assert_eq!(quotient_invariants(&IntegerMatrix::zeros(2, 3)), (2, vec![]));
    assert_eq!(quotient_invariants(&int_matrix(&[&[2, 0], &[0, 4]])), (0, ints(&[2, 4])));
}

#[test]
fn lattice_examples() {
    let col = |v: &[&[i64]]| int_matrix(v);
    assert_eq!(lattice_compare(&col(&[&[2], &[0]]), &col(&[&[2, 4], &[0, 0]])), LatticeRelation::Equal);
    assert_eq!(lattice_compare(&col(&[&[1], &[0]]), &col(&[&[2], &[0]])), LatticeRelation::Contains);
    assert_eq!(lattice_compare(&col(&[&[2], &[0]]), &col(&[&[1], &[0]])), LatticeRelation::ContainedIn);
    assert_eq!(lattice_compare(&col(&[&[1], &[0]]), &col(&[&[0], &[1]])), LatticeRelation::Incomparable);
    // index two, invisible to rational solving
    let h = hermite_columns(&col(&[&[2, 0], &[0, 1]]));
    assert!(!h.contains(&ints(&[1, 0])));
    assert!(h.contains(&ints(&[4, -3])));
}

#[test]
fn integer_kernel_and_solve() {
    let a = int_matrix(&[&[2, 4, 6]]);
    let k = integer_kernel(&a);
    assert_eq!(k.cols(), 2);
    assert!(a.mul(&k).is_zero());
    assert_eq!(solve_integer(&int_matrix(&[&[2, 0], &[0, 3]]), &ints(&[4, 9])), Some(ints(&[2, 3])));
    assert_eq!(solve_integer(&int_matrix(&[&[2]]), &ints(&[3])), None);
}

fn to_rational(m: &IntegerMatrix) -> Matrix<Rational> {
    m.map(|x| Rational::from_integer(x.clone()))
}

fn det_int(m: &[Vec<i64>]) -> i64 {
    if m.is_empty() {
        return 1;
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..].iter().map(|r| [&r[..j], &r[j + 1..]].concat()).collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] * det_int(&minor)
        })
        .sum()
}

fn choose(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = choose(n - 1, k);
    for mut s in choose(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Determinantal divisors: `d_k = gcd of k×k minors`, factors `d_k/d_{k−1}`.
fn minor_factors(m: &[Vec<i64>]) -> Vec<i64> {
    let (r, c) = (m.len(), m[0].len());
    let mut prev = 1;
    let mut out = Vec::new();
    for k in 1..=r.min(c) {
        let mut g = 0;
        for rows in choose(r, k) {
            for cols in choose(c, k) {
                let sub: Vec<Vec<i64>> = rows.iter().map(|&i| cols.iter().map(|&j| m[i][j]).collect()).collect();
                g = gcd(g, det_int(&sub));
            }
        }
        out.push(if g == 0 { 0 } else { g / prev });
        if g != 0 {
            prev = g;
        }
    }
    out
}

fn int_rows() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..=3, c), r))
}

fn gauss_matrix(field: FieldTag) -> impl Strategy<Value = Matrix<Gaussian>> {
    let im: i64 = if field == FieldTag::ComplexQi { 2 } else { 0 };
    (1usize..=4, 1usize..=5).prop_flat_map(move |(r, c)| {
        prop::collection::vec((-3i64..=3, -im..=im), r * c)
            .prop_map(move |v| Matrix::from_fn(r, c, |i, j| gauss(v[i * c + j].0, v[i * c + j].1)))
    })
}

fn from_rows(m: &[Vec<i64>]) -> IntegerMatrix {
    IntegerMatrix::from_rows(m.iter().map(|r| ints(r)).collect())
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in gauss_matrix(FieldTag::ComplexQi)) {
        let e = m.rref();
        let again = e.reduced.rref();
        prop_assert_eq!(&again.reduced, &e.reduced);
        prop_assert_eq!(again.pivots, e.pivots);
    }

    #[test]
    fn kernel_is_a_complement_of_rank(m in gauss_matrix(FieldTag::RealQ)) {
        let k = m.kernel();
        prop_assert_eq!(k.len() + m.rank(), m.cols());
        for x in &k {
            prop_assert!(m.mul_vec(x).iter().all(Zero::is_zero));
        }
        let basis = Matrix::from_columns(&k, m.cols());
        prop_assert_eq!(basis.rank(), k.len());
    }

    #[test]
    fn smith_matches_minors(m in int_rows()) {
        let a = from_rows(&m);
        let s = smith_normal_form(&a);
        prop_assert_eq!(&s.u.mul(&a).mul(&s.v), &s.d);
        prop_assert!(to_rational(&s.u).determinant().abs().is_one());
        prop_assert!(to_rational(&s.v).determinant().abs().is_one());
        let diag = s.diagonal();
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                prop_assert!(i == j || s.d[(i, j)].is_zero());
            }
        }
        for w in diag.windows(2) {
            prop_assert!(!w[0].is_negative());
            let divides = if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() };
            prop_assert!(divides);
        }
        let want: Vec<BigInt> = minor_factors(&m).into_iter().map(BigInt::from).collect();
        prop_assert_eq!(diag, want);
    }

    #[test]
    fn lattice_compare_is_consistent(m in int_rows(), extra in prop::collection::vec(-3i64..=3, 4)) {
        let a = from_rows(&m);
        prop_assert_eq!(lattice_compare(&a, &a), LatticeRelation::Equal);
        let col: Vec<BigInt> = ints(&extra[..a.rows()]);
        let bigger = a.hstack(&IntegerMatrix::from_columns(&[col.clone()], a.rows()));
        let rel = lattice_compare(&bigger, &a);
        let inside = hermite_columns(&a).contains(&col);
        prop_assert_eq!(rel, if inside { LatticeRelation::Equal } else { LatticeRelation::Contains });
        let doubled = a.map(|x| x * 2);
        let rel = lattice_compare(&a, &doubled);
        prop_assert!(rel == LatticeRelation::Contains || a.is_zero());
    }

    #[test]
    fn integer_kernel_is_saturated(m in int_rows()) {
        let a = from_rows(&m);
        let k = integer_kernel(&a);
        prop_assert!(a.mul(&k).is_zero());
        prop_assert_eq!(k.cols(), a.cols() - to_rational(&a).rank());
        // saturated: cokernel of the kernel lattice inside Z^n is free
        prop_assert!(quotient_invariants(&k).1.is_empty());
    }

    #[test]
    fn gaussian_text_round_trip(a in -50i64..50, b in 1i64..20, c in -50i64..50, d in 1i64..20) {
        let z = Gaussian::new(ratio(a, b), ratio(c, d));
        prop_assert_eq!(parse_gaussian(&format_gaussian(&z)).unwrap(), z);
    }
}
