use superrep::algebra::builtin;
use superrep::classify::*;
use superrep::exactnum::{gauss, FieldTag, Gaussian, Matrix};
use superrep::superspace::SuperSpace;
use superrep::supermodule::samples::*;
use superrep::supermodule::*;

const C: FieldTag = FieldTag::ComplexQi;
const R: FieldTag = FieldTag::RealQ;

fn m(rows: &[&[i64]]) -> Matrix<Gaussian> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| gauss(x, 0)).collect()).collect())
}

fn iso(a: &SuperModule, b: &SuperModule) -> bool {
    iso_test(a, b).unwrap().is_iso()
}

fn cl1_graded(field: FieldTag) -> SuperModule {
    SuperModule {
        context: builtin("clifford:1,0", field).unwrap(),
        space: SuperSpace::new(1, 1, field),
        graded: true,
        g_action: vec![],
        cliff_action: vec![m(&[&[0, -1], &[1, 0]])],
    }
}

#[test]
fn trivial_pair_splits() {
    let ctx = q1_context(C);
    let (i, p) = (q1_even_trivial(&ctx), q1_odd_trivial(&ctx));
    let r = composition_factors(&direct_sum(&i, &p).unwrap());
    assert_eq!(r.factors.len(), 2);
    assert_eq!(r.multiplicities, vec![1, 1]);
    assert!(r.all_certified());
    assert!(r.factors.iter().any(|f| iso(f, &i)));
    assert!(r.factors.iter().any(|f| iso(f, &p)));
}

#[test]
fn delta_c2_is_one_factor() {
    let ctx = q1_context(C);
    let d = delta(&q1_c(&ctx, &gauss(2, 0))).unwrap();
    let r = composition_factors(&d);
    assert_eq!(r.factors.len(), 1);
    assert_eq!(r.multiplicities, vec![1]);
    assert!(iso(&r.factors[0], &q1_l(&ctx, &gauss(4, 0)).unwrap()));
}

#[test]
fn graded_cl1_regular_is_irreducible() {
    let r = composition_factors(&cl1_graded(C));
    assert_eq!((r.factors.len(), r.multiplicities[0]), (1, 1));
    assert!(r.certified[0]);
}

#[test]
fn tags_from_examples() {
    let ctx = q1_context(C);
    let t = classify_irreducible(&q1_even_trivial(&ctx)).unwrap();
    assert_eq!(t.kind, SuperType::M);
    assert!(!t.self_dual);
    let t = classify_irreducible(&q1_l(&ctx, &gauss(4, 0)).unwrap()).unwrap();
    assert_eq!((t.kind, t.involution), (SuperType::Q, InvolutionTag::Yes));
    assert!(t.self_dual);
    let t = classify_irreducible(&cl1_graded(R)).unwrap();
    assert!(t.self_dual);
    assert_eq!(t.involution, InvolutionTag::No);
    assert_eq!(t.real_division, RealDivision::R);
}

#[test]
fn split_real_commutant_is_rejected() {
    // ℚ-irreducible but ℝ-reducible: x ↦ [[0,2],[1,0]] has eigenvalues ±√2
    let ctx = superrep::algebra::ShiftedContext::new(
        superrep::algebra::LieSuperAlgebra::from_brackets(R, &[("X".into(), superrep::superspace::Parity::Even)], &[])
            .unwrap(),
        superrep::algebra::CliffordSignature::new(0, 0),
    );
    let v = SuperModule {
        context: ctx,
        space: SuperSpace::new(2, 0, R),
        graded: true,
        g_action: vec![m(&[&[0, 2], &[1, 0]])],
        cliff_action: vec![],
    };
    assert!(v.validate().is_ok());
    assert_eq!(classify_irreducible(&v), Err(ClassifyError::NotRealIrreducible));
}

#[test]
fn small_real_clifford_models() {
    let a = clifford_irreducibles(1, 0, R, false).unwrap();
    assert_eq!(a.len(), 1);
    assert_eq!(a[0].cliff_action[0], m(&[&[0, -1], &[1, 0]]));
    let b = clifford_irreducibles(0, 1, R, false).unwrap();
    assert_eq!(b.len(), 2);
    assert_eq!(b[0].cliff_action[0], m(&[&[1]]));
    assert_eq!(b[1].cliff_action[0], m(&[&[-1]]));
    let c = clifford_irreducibles(8, 0, R, false).unwrap();
    assert_eq!(c.len(), 1);
    assert_eq!(c[0].dim(), 16);
    assert!(c[0].validate().is_ok());
}

fn real_count(p: usize, q: usize) -> usize {
    if (q as i64 - p as i64).rem_euclid(4) == 1 {
        2
    } else {
        1
    }
}

fn real_kind(p: usize, q: usize) -> RealDivision {
    match (q as i64 - p as i64).rem_euclid(8) {
        0..=2 => RealDivision::R,
        3 | 7 => RealDivision::C,
        _ => RealDivision::H,
    }
}

#[test]
fn real_ungraded_table() {
    for n in 0..=6 {
        for p in 0..=n {
            let q = n - p;
            let irr = clifford_irreducibles(p, q, R, false).unwrap();
            assert_eq!(irr.len(), real_count(p, q), "Cl({p},{q})");
            for v in &irr {
                assert!(v.validate().is_ok(), "Cl({p},{q})");
                let t = classify_irreducible(v).unwrap();
                assert_eq!(t.real_division, real_kind(p, q), "Cl({p},{q})");
            }
            if irr.len() == 2 {
                assert!(!iso(&irr[0], &irr[1]));
            }
        }
    }
}

#[test]
fn large_signatures_validate() {
    for (p, q) in [(9, 0), (0, 9), (5, 4), (7, 2)] {
        let irr = clifford_irreducibles(p, q, R, false).unwrap();
        assert_eq!(irr.len(), real_count(p, q));
        assert!(irr.iter().all(|v| v.validate().is_ok()), "Cl({p},{q})");
    }
    assert!(clifford_irreducibles(5, 5, R, false).is_err());
}

#[test]
fn complex_graded_counts() {
    for n in 0..=6 {
        let irr = clifford_irreducibles(n, 0, C, true).unwrap();
        assert!(irr.iter().all(|v| v.validate().is_ok()));
        assert_eq!(irr.len(), if n % 2 == 0 { 2 } else { 1 }, "n = {n}");
        if n % 2 == 0 {
            assert!(iso(&irr[0], &parity_reverse(&irr[1]).unwrap()));
            assert!(!iso(&irr[0], &irr[1]));
        } else {
            assert!(iso(&irr[0], &parity_reverse(&irr[0]).unwrap()));
        }
        let u = clifford_irreducibles(n, 0, C, false).unwrap();
        assert_eq!(u.len(), if n % 2 == 1 { 2 } else { 1 });
        assert_eq!(u[0].dim(), 1 << (n / 2));
    }
}

#[test]
fn real_graded_counts_follow_figure() {
    let want = [2, 1, 1, 1, 2, 1, 1, 1, 2];
    for (n, &k) in want.iter().enumerate() {
        let irr = clifford_irreducibles(n, 0, R, true).unwrap();
        assert_eq!(irr.len(), k, "n = {n}");
        assert!(irr.iter().all(|v| v.validate().is_ok() && v.graded));
    }
}

#[test]
fn shift_trivial_algebra() {
    let ctx = builtin("trivial", C).unwrap();
    let i = SuperModule::trivial(&ctx, 1, 0);
    let p = SuperModule::trivial(&ctx, 0, 1);
    let one = shift_irreducibles(&[i.clone(), p]).unwrap();
    assert_eq!(one.modules.len(), 1);
    let v = &one.modules[0];
    assert!(v.validate().is_ok());
    assert_eq!(v.space, SuperSpace::new(1, 1, C));
    let two = shift_irreducibles(&one.modules).unwrap();
    assert_eq!(two.modules.len(), 2);
    for w in &two.modules {
        assert!(w.validate().is_ok());
        let back = morita_reduce(w).unwrap();
        assert!(iso(&back, &i) || iso(&back, &parity_reverse(&i).unwrap()));
    }
    let back = morita_reduce(&two.modules[0]).unwrap();
    assert!(iso(&back, &i) || iso(&back, &SuperModule::trivial(&ctx, 0, 1)));
}

#[test]
fn shift_l4_gives_opposite_pair() {
    let ctx = q1_context(C);
    let l4 = q1_l(&ctx, &gauss(4, 0)).unwrap();
    let s = shift_irreducibles(&[l4]).unwrap();
    assert!(s.obstructed.is_empty());
    let (qp, qm) = (&s.modules[0], &s.modules[1]);
    assert!(qp.validate().is_ok() && qm.validate().is_ok());
    assert!(!iso(qp, qm));
    assert!(iso(qp, &parity_reverse(qm).unwrap()));
    assert_eq!(classify_irreducible(qp).unwrap().kind, SuperType::M);
}

#[test]
fn tensor_of_l4_l9_has_h_13() {
    let ctx = q1_context(C);
    let t = tensor_modules(&q1_l(&ctx, &gauss(4, 0)).unwrap(), &q1_l(&ctx, &gauss(9, 0)).unwrap()).unwrap();
    let r = composition_factors(&t);
    assert_eq!(r.total_dim(), 4);
    for f in &r.factors {
        assert_eq!(f.g_action[0].as_scalar(), Some(gauss(13, 0)));
    }
}

#[test]
fn nilpotent_extension_splits() {
    let ctx = q1_context(C);
    let v = SuperModule {
        context: ctx.clone(),
        space: SuperSpace::new(1, 1, C),
        graded: true,
        g_action: vec![m(&[&[0, 0], &[0, 0]]), m(&[&[0, 0], &[1, 0]])],
        cliff_action: vec![],
    };
    assert!(v.validate().is_ok());
    let r = composition_factors(&v);
    assert_eq!(r.factors.len(), 2);
    assert!(r.factors.iter().any(|f| iso(f, &q1_even_trivial(&ctx))));
}
