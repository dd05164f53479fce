use proptest::prelude::*;
use superrep::algebra::*;
use superrep::exactnum::{gauss, imag_unit, FieldTag, Gaussian, Matrix};
use superrep::supermodule::samples::q1_l;
use superrep::supermodule::SuperModule;
use superrep::superspace::{GradedMap, Parity, SuperSpace};

fn gens(list: &[(&str, Parity)]) -> Vec<(String, Parity)> {
    list.iter().map(|(n, p)| (n.to_string(), *p)).collect()
}

fn q1_with(extra: &[BracketTerm]) -> LieSuperAlgebra {
    let mut b = vec![BracketTerm::new("Q", "Q", "H", gauss(2, 0))];
    b.extend_from_slice(extra);
    LieSuperAlgebra::from_brackets(FieldTag::ComplexQi, &gens(&[("H", Parity::Even), ("Q", Parity::Odd)]), &b).unwrap()
}

#[test]
fn q1_presentation() {
    let g = q1(FieldTag::ComplexQi);
    assert_eq!(g.names(), ["H", "Q"]);
    assert_eq!(g.parity(0), Parity::Even);
    assert_eq!(g.parity(1), Parity::Odd);
    assert_eq!(g.bracket(1, 1), [gauss(2, 0), gauss(0, 0)]);
    assert_eq!(g.bracket(0, 1), [gauss(0, 0), gauss(0, 0)]);
    assert!(check_jacobi(&g).is_ok());
    assert_eq!(g, q1_with(&[]));
}

#[test]
fn jacobi_examples() {
    let abelian = LieSuperAlgebra::from_brackets(
        FieldTag::RealQ,
        &gens(&[("A", Parity::Even), ("B", Parity::Even), ("C", Parity::Even)]),
        &[],
    )
    .unwrap();
    assert!(check_jacobi(&abelian).is_ok());
    assert!(check_jacobi(&LieSuperAlgebra::trivial(FieldTag::RealQ)).is_ok());

    let broken = q1_with(&[BracketTerm::new("H", "Q", "Q", gauss(1, 0))]);
    match check_jacobi(&broken) {
        Err(JacobiViolation::Jacobi { x, y, z, lhs, rhs }) => {
            assert_eq!((x.as_str(), y.as_str(), z.as_str()), ("Q", "Q", "Q"));
            // [Q,[Q,Q]] = [Q,2H] = −2Q; [[Q,Q],Q] − [Q,[Q,Q]] = 2Q + 2Q
            assert_eq!(lhs, [gauss(0, 0), gauss(-2, 0)]);
            assert_eq!(rhs, [gauss(0, 0), gauss(4, 0)]);
        }
        other => panic!("expected a Jacobi violation, got {other:?}"),
    }
}

#[test]
fn presentation_errors() {
    let g = gens(&[("H", Parity::Even), ("Q", Parity::Odd)]);
    let bad = |b: &[BracketTerm]| LieSuperAlgebra::from_brackets(FieldTag::RealQ, &g, b).unwrap_err();
    assert!(matches!(bad(&[BracketTerm::new("Q", "Q", "Q", gauss(1, 0))]), AlgebraError::BracketParity(..)));
    assert!(matches!(bad(&[BracketTerm::new("Q", "Q", "X", gauss(1, 0))]), AlgebraError::UnknownGenerator(_)));
    assert!(matches!(bad(&[BracketTerm::new("Q", "Q", "H", imag_unit())]), AlgebraError::OutsideField(..)));
    assert!(matches!(
        bad(&[BracketTerm::new("H", "Q", "Q", gauss(1, 0)), BracketTerm::new("Q", "H", "Q", gauss(1, 0))]),
        AlgebraError::Antisymmetry(..)
    ));
    let dup = gens(&[("H", Parity::Even), ("H", Parity::Odd)]);
    assert!(LieSuperAlgebra::from_brackets(FieldTag::RealQ, &dup, &[]).is_err());
}

#[test]
fn bar_examples() {
    let g = q1(FieldTag::ComplexQi);
    assert_eq!(g.bar().bracket(1, 1), [gauss(-2, 0), gauss(0, 0)]);
    assert_eq!(g.bar().bar(), g);
    let even = LieSuperAlgebra::from_brackets(
        FieldTag::RealQ,
        &gens(&[("X", Parity::Even), ("Y", Parity::Even)]),
        &[BracketTerm::new("X", "Y", "Y", gauss(1, 0))],
    )
    .unwrap();
    assert_eq!(even.bar(), even);
}

fn odd_map(rows: &[&[i64]], field: FieldTag) -> GradedMap {
    let v = SuperSpace::new(1, 1, field);
    let m = Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| gauss(x, 0)).collect()).collect());
    GradedMap::new(v, v, m, Parity::Odd).unwrap()
}

#[test]
fn clifford_relation_examples() {
    let e = odd_map(&[&[0, -1], &[1, 0]], FieldTag::RealQ);
    assert!(clifford_relation_check(&CliffordSignature::new(1, 0), &[e.clone()]).is_ok());
    let f = odd_map(&[&[0, 1], &[1, 0]], FieldTag::RealQ);
    assert!(clifford_relation_check(&CliffordSignature::new(0, 1), &[f.clone()]).is_ok());
    assert!(clifford_relation_check(&CliffordSignature::new(1, 0), &[f.clone()]).is_err());
    assert!(clifford_relation_check(&CliffordSignature::new(1, 1), &[e, f]).is_ok());

    // f = [[0,i],[−i,0]] squares to 1 and commutes with e
    let v = SuperSpace::new(1, 1, FieldTag::ComplexQi);
    let e = odd_map(&[&[0, -1], &[1, 0]], FieldTag::ComplexQi);
    let i = imag_unit();
    let z = gauss(0, 0);
    let f = GradedMap::new(v, v, Matrix::from_rows(vec![vec![z.clone(), i.clone()], vec![-i, z]]), Parity::Odd).unwrap();
    assert!(clifford_matrices_check(&CliffordSignature::new(0, 1), &[f.matrix.clone()]).is_ok());
    assert_eq!(e.matrix.mul(&f.matrix), f.matrix.mul(&e.matrix));
    let err = clifford_relation_check(&CliffordSignature::new(1, 1), &[e, f]).unwrap_err();
    assert_eq!((err.a.as_str(), err.b.as_str()), ("e1", "f1"));
    assert!(!err.residual.is_zero());

    let even = GradedMap::grading(&v);
    assert!(clifford_relation_check(&CliffordSignature::new(0, 1), &[even]).is_err());
}

#[test]
fn builtins() {
    let q = builtin("q1", FieldTag::RealQ).unwrap();
    assert_eq!(q.algebra.names(), ["H", "Q"]);
    assert_eq!(q.signature, CliffordSignature::new(0, 0));
    let t = builtin("trivial", FieldTag::RealQ).unwrap();
    assert_eq!(t.algebra.dim(), 0);
    let c = builtin("clifford:1,1", FieldTag::ComplexQi).unwrap();
    assert_eq!((c.algebra.dim(), c.signature), (0, CliffordSignature::new(1, 1)));
    for bad in ["gl11", "clifford:1", "clifford:a,b"] {
        assert!(matches!(builtin(bad, FieldTag::RealQ), Err(AlgebraError::UnknownBuiltin(_))));
    }
}

/// Random brackets respecting parity; only unordered pairs are listed.
fn random_algebra() -> impl Strategy<Value = LieSuperAlgebra> {
    (0usize..=2, 1usize..=2, any::<bool>()).prop_flat_map(|(a, b, central)| {
        let n = a + b;
        prop::collection::vec(-2i64..=2, n * n * n).prop_map(move |c| {
            let names: Vec<(String, Parity)> = (0..n)
                .map(|i| if i < a { (format!("X{i}"), Parity::Even) } else { (format!("Y{i}"), Parity::Odd) })
                .collect();
            let par = |i: usize| names[i].1;
            let mut terms = Vec::new();
            for i in 0..n {
                for j in i..n {
                    if i == j && !par(i).is_odd() {
                        continue;
                    }
                    // central: only odd-odd brackets, landing in the even part
                    if central && !(par(i).is_odd() && par(j).is_odd()) {
                        continue;
                    }
                    for k in 0..n {
                        if par(i).add(par(j)) == par(k) {
                            let coeff = c[(i * n + j) * n + k];
                            terms.push(BracketTerm::new(&names[i].0, &names[j].0, &names[k].0, gauss(coeff, 0)));
                        }
                    }
                }
            }
            LieSuperAlgebra::from_brackets(FieldTag::ComplexQi, &names, &terms).unwrap()
        })
    })
}

fn with_algebra(m: &SuperModule, g: LieSuperAlgebra) -> SuperModule {
    let mut out = m.clone();
    out.context = ShiftedContext::new(g, m.context.signature);
    out
}

/// `ρ′(X) = i·ρ(X)` on odd generators.
fn twist(m: &SuperModule) -> SuperModule {
    let g = m.context.algebra.bar();
    let mut out = with_algebra(m, g);
    for (k, a) in out.g_action.iter_mut().enumerate() {
        if m.context.algebra.parity(k).is_odd() {
            *a = a.scale(&imag_unit());
        }
    }
    out
}

fn q1_module() -> impl Strategy<Value = SuperModule> {
    let ctx = builtin("q1", FieldTag::ComplexQi).unwrap();
    prop_oneof![
        (-6i64..=6, -6i64..=6).prop_filter_map("no root", {
            let ctx = ctx.clone();
            move |(a, b)| q1_l(&ctx, &gauss(a * a - b * b, 2 * a * b))
        }),
        prop::collection::vec(-2i64..=2, 6).prop_map(move |v| {
            let z = Gaussian::from(gauss(0, 0));
            SuperModule {
                context: ctx.clone(),
                space: SuperSpace::new(1, 1, FieldTag::ComplexQi),
                graded: true,
                g_action: vec![
                    Matrix::from_rows(vec![vec![gauss(v[0], 0), z.clone()], vec![z.clone(), gauss(v[1], 0)]]),
                    Matrix::from_rows(vec![vec![z.clone(), gauss(v[2], v[3])], vec![gauss(v[4], v[5]), z]]),
                ],
                cliff_action: vec![],
            }
        }),
    ]
}

proptest! {
    #[test]
    fn bar_preserves_jacobi(g in random_algebra()) {
        prop_assert_eq!(check_jacobi(&g).is_ok(), check_jacobi(&g.bar()).is_ok());
        prop_assert_eq!(g.bar().bar(), g);
    }

    #[test]
    fn central_extensions_satisfy_jacobi(g in random_algebra()) {
        let central = (0..g.dim()).all(|i| {
            g.parity(i).is_odd() || (0..g.dim()).all(|j| g.bracket(i, j).iter().all(|c| *c == gauss(0, 0)))
        });
        if central {
            prop_assert!(check_jacobi(&g).is_ok());
        }
    }

    #[test]
    fn twisting_odd_generators_exchanges_g_and_gbar(m in q1_module()) {
        let t = twist(&m);
        prop_assert_eq!(m.validate().is_ok(), t.validate().is_ok());
        // the same matrices do not in general serve ḡ
        if m.validate().is_ok() && m.g_action[0] != Matrix::zeros(2, 2) {
            prop_assert!(with_algebra(&m, m.context.algebra.bar()).validate().is_err());
        }
    }
}
