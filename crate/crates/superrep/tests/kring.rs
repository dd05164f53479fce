use num_bigint::BigInt;
use superrep::algebra::builtin;
use superrep::classify::clifford_irreducibles;
use superrep::exactnum::{gauss, int_matrix, IntegerMatrix, LatticeRelation};
use superrep::kring::*;
use superrep::supermodule::samples::{q1_c, q1_even_trivial, q1_l, q1_odd_trivial};
use superrep::supermodule::*;
use superrep::FieldTag;

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn trivial(field: FieldTag) -> IrrepProvider {
    IrrepProvider::clifford(&builtin("trivial", field).unwrap())
}

fn q1() -> IrrepProvider {
    IrrepProvider::q1(&builtin("q1", FieldTag::ComplexQi).unwrap(), &[gauss(4, 0), gauss(-4, 0)])
}

fn graded_registry(p: &IrrepProvider, n: usize) -> IrreducibleRegistry {
    IrreducibleRegistry::seeded(&p.context(n), true, &p.graded(n).unwrap()).unwrap()
}

fn invariants(seq: &ExactSequence) -> Vec<(usize, Vec<u64>)> {
    seq.nodes.iter().map(|n| n.group.invariants()).collect()
}

fn z(r: usize) -> (usize, Vec<u64>) {
    (r, vec![])
}

fn z2() -> (usize, Vec<u64>) {
    (0, vec![2])
}

fn all_exact(seq: &ExactSequence) -> bool {
    check_exactness(seq).iter().all(NodeVerdict::is_exact)
}

/// q(1) at degree 0: graded `[I, Π, L₄, L₋₄]` and ungraded `[C₀, C₂, C₋₂]`.
fn q1_registries() -> (IrreducibleRegistry, IrreducibleRegistry) {
    let ctx = builtin("q1", FieldTag::ComplexQi).unwrap();
    let graded = vec![
        q1_even_trivial(&ctx),
        q1_odd_trivial(&ctx),
        q1_l(&ctx, &gauss(4, 0)).unwrap(),
        q1_l(&ctx, &gauss(-4, 0)).unwrap(),
    ];
    let ungraded = vec![q1_c(&ctx, &gauss(0, 0)), q1_c(&ctx, &gauss(2, 0)), q1_c(&ctx, &gauss(-2, 0))];
    (
        IrreducibleRegistry::seeded(&ctx, true, &graded).unwrap(),
        IrreducibleRegistry::seeded(&ctx, false, &ungraded).unwrap(),
    )
}

#[test]
fn registry_is_closed_under_partner() {
    let (g, u) = q1_registries();
    assert_eq!(g.len(), 4);
    assert_eq!((g.pi_partner(0), g.pi_partner(1), g.pi_partner(2)), (1, 0, 2));
    assert_eq!((u.pi_partner(0), u.pi_partner(1), u.pi_partner(2)), (0, 2, 1));
    let mut g = g;
    let again = g.insert(&q1_l(g.context(), &gauss(4, 0)).unwrap()).unwrap();
    assert_eq!((again, g.len()), (2, 4));
}

#[test]
fn provider_modules_validate() {
    let p = IrrepProvider::q1(&builtin("q1", FieldTag::ComplexQi).unwrap(), &[gauss(1, 0), gauss(0, 2)]);
    for n in 0..4 {
        for m in p.graded(n).unwrap().iter().chain(&p.ungraded(n).unwrap()) {
            assert!(m.validate().is_ok(), "degree -{n}: {}|{}", m.space.even, m.space.odd);
        }
    }
}

#[test]
fn class_of_examples() {
    let ctx = builtin("q1", FieldTag::ComplexQi).unwrap();
    let mut reg = IrreducibleRegistry::seeded(&ctx, true, &[q1_even_trivial(&ctx)]).unwrap();
    assert_eq!(reg.len(), 2);
    let sum = direct_sum(&q1_even_trivial(&ctx), &q1_odd_trivial(&ctx)).unwrap();
    assert_eq!(class_of(&sum, &mut reg).unwrap(), GroupElement::from_i64(&[1, 1]));
    let zero = SuperModule::zero(&ctx, true);
    assert!(class_of(&zero, &mut reg).unwrap().is_zero());
    let (mut g, _) = q1_registries();
    let c = class_of(&delta(&q1_c(&ctx, &gauss(2, 0))).unwrap(), &mut g).unwrap();
    assert_eq!(c, GroupElement::from_i64(&[0, 0, 1, 0]));
}

#[test]
fn class_of_grows_the_registry() {
    let ctx = builtin("q1", FieldTag::ComplexQi).unwrap();
    let mut reg = IrreducibleRegistry::new(&ctx, true);
    let m = direct_sum(&q1_l(&ctx, &gauss(9, 0)).unwrap(), &q1_even_trivial(&ctx)).unwrap();
    let c = class_of(&m, &mut reg).unwrap();
    assert_eq!(reg.len(), 3);
    assert_eq!(c.coefficients.iter().filter(|x| **x == BigInt::from(1)).count(), 2);
}

#[test]
fn class_of_rejects_wrong_degree() {
    let p = trivial(FieldTag::RealQ);
    let mut reg = graded_registry(&p, 0);
    let v = p.graded(1).unwrap().remove(0);
    assert_eq!(class_of(&v, &mut reg), Err(KringError::WrongDegree));
}

#[test]
fn pi_swaps_trivial_degree_zero() {
    let p = trivial(FieldTag::RealQ);
    let reg = graded_registry(&p, 0);
    let swap = int_matrix(&[&[0, 1], &[1, 0]]);
    assert_eq!(involution_map(&reg).matrix, swap);
    assert_eq!(map_matrix(&Functor::Pi, &reg, &mut reg.clone()).unwrap().matrix, swap);
}

#[test]
fn q1_golden_maps() {
    let (mut g, mut u) = q1_registries();
    let d = map_matrix(&Functor::Delta, &u, &mut g).unwrap();
    assert_eq!(d.matrix, int_matrix(&[&[1, 0, 0], &[1, 0, 0], &[0, 1, 1], &[0, 0, 0]]));
    let f = map_matrix(&Functor::Forget, &g, &mut u).unwrap();
    // L₋₄ forgets to C_{2i} + C_{−2i}, two new entries
    assert_eq!(
        f.matrix,
        int_matrix(&[&[1, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[0, 0, 0, 1]])
    );
    assert_eq!((g.len(), u.len()), (4, 5));
}

#[test]
fn restriction_from_q1_degree_one() {
    let p = q1();
    let reg1 = graded_registry(&p, 1);
    let mut reg0 = graded_registry(&p, 0);
    assert_eq!(reg1.len(), 5);
    let r = map_matrix(&Functor::Restrict, &reg1, &mut reg0).unwrap();
    assert_eq!(reg0.len(), 4);
    // the type M pair I ⊕ Π, then Q±₄ and Q±₋₄
    let mut cols: Vec<Vec<i64>> = (0..5)
        .map(|j| r.matrix.column(j).iter().map(|x| i64::try_from(x).unwrap()).collect())
        .collect();
    cols.sort();
    assert_eq!(
        cols,
        vec![vec![0, 0, 0, 1], vec![0, 0, 0, 1], vec![0, 0, 1, 0], vec![0, 0, 1, 0], vec![1, 1, 0, 0]]
    );
}

#[test]
fn eigenlattice_examples() {
    let reg = graded_registry(&trivial(FieldTag::RealQ), 0);
    let pi = involution_map(&reg);
    let plus = eigenlattice(&pi, 1).unwrap();
    let minus = eigenlattice(&pi, -1).unwrap();
    assert_eq!(lattice_compare_eq(&plus, &int_matrix(&[&[1], &[1]])), true);
    assert_eq!(lattice_compare_eq(&minus, &int_matrix(&[&[1], &[-1]])), true);

    let (g, _) = q1_registries();
    let plus = eigenlattice(&involution_map(&g), 1).unwrap();
    let expected = int_matrix(&[&[1, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
    assert!(lattice_compare_eq(&plus, &expected));

    let id = GroupMap { matrix: IntegerMatrix::identity(3) };
    assert_eq!(eigenlattice(&id, 1).unwrap().cols(), 3);
    assert_eq!(eigenlattice(&id, -1).unwrap().cols(), 0);
    let bad = GroupMap { matrix: int_matrix(&[&[1, 1], &[0, 1]]) };
    assert_eq!(eigenlattice(&bad, 1), Err(KringError::NotInvolution));
}

fn lattice_compare_eq(a: &IntegerMatrix, b: &IntegerMatrix) -> bool {
    superrep::exactnum::lattice_compare(a, b) == LatticeRelation::Equal
}

#[test]
fn quotient_group_examples() {
    let (mut g, u) = q1_registries();
    let d = map_matrix(&Functor::Delta, &u, &mut g).unwrap();
    let sr = quotient_group(g.len(), &d.matrix);
    assert_eq!(sr.invariants(), z(1 + 1));
    // with the sampled λ = −4 also covered by Δ the quotient is Z
    let mut u2 = u.clone();
    u2.insert(&q1_c(u.context(), &gauss(0, 2))).unwrap();
    let d2 = map_matrix(&Functor::Delta, &u2, &mut g).unwrap();
    let sr = quotient_group(g.len(), &d2.matrix);
    assert_eq!(sr.invariants(), z(1));
    assert!(sr.is_zero(&ints(&[1, 1, 0, 0])));
    assert!(!sr.is_zero(&ints(&[1, 0, 0, 0])));
    assert_eq!(sr.to_string(), "Z");

    let real = build_tower(&trivial(FieldTag::RealQ), 1).unwrap();
    assert_eq!(real.levels[1].sr.invariants(), z2());
    assert_eq!(real.levels[1].sr.to_string(), "Z/2");

    let free = quotient_group(3, &IntegerMatrix::zeros(3, 0));
    assert_eq!(free.invariants(), z(3));
    assert_eq!(free.to_string(), "Z^3");
    assert_eq!(quotient_group(1, &int_matrix(&[&[1]])).to_string(), "0");
}

#[test]
fn connecting_map_examples() {
    let t = build_tower(&trivial(FieldTag::RealQ), 0).unwrap();
    let l = &t.levels[0];
    let c = connecting_maps(&l.pi, &l.restriction).unwrap();
    assert_eq!(c.delta.mul_vec(&ints(&[1, 0])), ints(&[1, -1]));
    assert_eq!(c.delta.mul_vec(&ints(&[0, 0])), ints(&[0, 0]));

    let t = build_tower(&q1(), 0).unwrap();
    let l = &t.levels[0];
    let c = connecting_maps(&l.pi, &l.restriction).unwrap();
    let i = (0..l.registry.len()).find(|&k| l.registry.module(k).space.dim() == 1 && l.registry.module(k).space.even == 1).unwrap();
    let mut e = vec![BigInt::from(0); l.registry.len()];
    e[i] = BigInt::from(1);
    let out = c.delta.mul_vec(&e);
    let j = l.registry.pi_partner(i);
    assert_eq!((out[i].clone(), out[j].clone()), (BigInt::from(1), BigInt::from(-1)));

    let bogus = int_matrix(&[&[1], &[0]]);
    assert!(matches!(connecting_maps(&l.pi.clone(), &pad(&bogus, l.registry.len())), Err(KringError::Inconsistent(_))));
}

fn pad(m: &IntegerMatrix, rows: usize) -> IntegerMatrix {
    IntegerMatrix::from_fn(rows, m.cols(), |i, j| if i < m.rows() { m[(i, j)].clone() } else { BigInt::from(0) })
}

#[test]
fn six_complex_trivial() {
    let seq = six_complex(&trivial(FieldTag::ComplexQi)).unwrap();
    assert_eq!(invariants(&seq), vec![z(1), z(1), z(2), z(1), z(0), z(1)]);
    assert!(all_exact(&seq));
    // Δ ≅ R₊ at degree 0 through i* from degree −1
    assert!(is_injective(&seq.arrows[5].matrix, &seq.nodes[5].group, &seq.nodes[0].group));
    assert!(is_surjective(&seq.arrows[5].matrix, &seq.nodes[0].group));
}

fn assert_split(seq: &ExactSequence) {
    // both i* arrows onto R₊, both δ injective on SR
    for k in [2, 5] {
        assert!(is_surjective(&seq.arrows[k].matrix, &seq.nodes[seq.target(k)].group), "i* at {k}");
    }
    for k in [1, 4] {
        assert!(is_injective(&seq.arrows[k].matrix, &seq.nodes[k].group, &seq.nodes[k + 1].group), "δ at {k}");
    }
}

#[test]
fn six_complex_splits() {
    for p in [trivial(FieldTag::ComplexQi), q1()] {
        let seq = six_complex(&p).unwrap();
        assert!(all_exact(&seq));
        assert_split(&seq);
        assert!((0..6).all(|k| well_defined(&seq, k)));
    }
}

#[test]
fn q1_six_complex_groups() {
    let seq = six_complex(&q1()).unwrap();
    let inv = invariants(&seq);
    // SR⁰ = Z (Π = −I); SR¹ is Z per sampled λ ([Q₋] = −[Q₊])
    assert_eq!(inv[1], z(1));
    assert_eq!(inv[4], z(2));
    let sr1 = &seq.nodes[4].group;
    let reg1 = graded_registry(&q1(), 1);
    for i in 0..reg1.len() {
        let j = reg1.pi_partner(i);
        let mut x = vec![BigInt::from(0); reg1.len()];
        x[i] += 1;
        x[j] += 1;
        assert!(sr1.is_zero(&x));
    }
}

#[test]
fn twentyfour_is_exact() {
    let seq = twentyfour(&trivial(FieldTag::RealQ)).unwrap();
    let verdicts = check_exactness(&seq);
    assert_eq!(verdicts.len(), 24);
    assert!(verdicts.iter().all(NodeVerdict::is_exact));
    assert!((0..seq.arrows.len()).all(|k| well_defined(&seq, k)));
}

#[test]
fn figure_columns() {
    let t = build_tower(&trivial(FieldTag::RealQ), 8).unwrap();
    for l in &t.levels {
        let rz2 = if l.n % 4 == 0 { 2 } else { 1 };
        assert_eq!(l.graded_group().invariants(), z(rz2), "n = {}", l.n);
        assert_eq!(l.plus_group().invariants(), z(1));
        let sr = match l.n % 8 {
            0 | 4 => z(1),
            1 | 2 => z2(),
            _ => z(0),
        };
        assert_eq!(l.sr.invariants(), sr, "n = {}", l.n);
        let coker = if matches!(l.n % 8, 1 | 2) { z2() } else { z(0) };
        assert_eq!(l.restriction_cokernel().unwrap().invariants(), coker, "n = {}", l.n);
    }
}

#[test]
fn corrupted_arrow_fails_locally() {
    let mut seq = twentyfour(&trivial(FieldTag::RealQ)).unwrap();
    // zero the i* arrow into R₊^{-4}
    let k = seq.nodes.iter().position(|n| n.label == "R+^-4").unwrap() - 1;
    let a = &mut seq.arrows[k].matrix;
    *a = IntegerMatrix::zeros(a.rows(), a.cols());
    let bad: Vec<usize> = check_exactness(&seq).into_iter().filter(|v| !v.is_exact()).map(|v| v.node).collect();
    assert!(!bad.is_empty());
    assert!(bad.iter().all(|&b| b == k || b == k + 1), "{bad:?}");
}

#[test]
fn six_real_four_shapes() {
    let p = trivial(FieldTag::RealQ);
    let expected = [
        vec![z(1), z(1), z(2), z(1), z(0), z(1)],
        vec![z(1), z2(), z(1), z(1), z(0), z(1)],
        vec![z(1), z2(), z(1), z(1), z(0), z(1)],
        vec![z(1), z(0), z(1), z(1), z(1), z(2)],
    ];
    for (n, e) in expected.iter().enumerate() {
        let seq = six_real(&p, n).unwrap();
        assert_eq!(&invariants(&seq), e, "n = {n}");
        assert!(all_exact(&seq), "n = {n}");
    }
    for k in 0..4 {
        let mut rotated = expected[k].clone();
        rotated.rotate_left(3);
        let seq = six_real(&p, 7 - k).unwrap();
        assert_eq!(invariants(&seq), rotated, "n = {}", 7 - k);
        assert!(all_exact(&seq));
    }
}

#[test]
fn abs_tables() {
    let c: Vec<String> = abs_table(&trivial(FieldTag::ComplexQi), 0..=5).unwrap().into_iter().map(|(_, g)| g.to_string()).collect();
    assert_eq!(c, ["Z", "0", "Z", "0", "Z", "0"]);
    let r: Vec<String> = abs_table(&trivial(FieldTag::RealQ), 0..=8).unwrap().into_iter().map(|(_, g)| g.to_string()).collect();
    assert_eq!(r, ["Z", "Z/2", "Z/2", "0", "Z", "0", "0", "0", "Z"]);
}

/// `a : x → y` and `b : y → x`, recomputed until neither registry grows.
fn stable_pair(
    a: &Functor,
    b: &Functor,
    x: &mut IrreducibleRegistry,
    y: &mut IrreducibleRegistry,
) -> (GroupMap, GroupMap) {
    loop {
        let (nx, ny) = (x.len(), y.len());
        let ma = map_matrix(a, x, y).unwrap();
        let mb = map_matrix(b, y, x).unwrap();
        if (x.len(), y.len()) == (nx, ny) {
            return (ma, mb);
        }
    }
}

#[test]
fn functor_lattice_identities() {
    for (mut g, mut u) in [q1_registries(), {
        let p = trivial(FieldTag::RealQ);
        (graded_registry(&p, 2), IrreducibleRegistry::seeded(&p.context(2), false, &p.ungraded(2).unwrap()).unwrap())
    }] {
        let (d, f) = stable_pair(&Functor::Delta, &Functor::Forget, &mut u, &mut g);
        let pi = involution_map(&g);
        let dag = involution_map(&u);
        assert_eq!(pi.matrix.mul(&pi.matrix), IntegerMatrix::identity(g.len()));
        assert_eq!(dag.matrix.mul(&dag.matrix), IntegerMatrix::identity(u.len()));
        let plus = eigenlattice(&pi, 1).unwrap();
        let minus = eigenlattice(&pi, -1).unwrap();
        let ac = eigenlattice(&dag, -1).unwrap();
        assert!(superrep::exactnum::hermite_columns(&plus).contains_all(&d.matrix));
        let ker_f = superrep::exactnum::integer_kernel(&f.matrix);
        assert!(lattice_compare_eq(&ker_f, &minus));
        let ker_d = superrep::exactnum::integer_kernel(&d.matrix);
        assert!(lattice_compare_eq(&ker_d, &ac));
    }
}

#[test]
fn parity_reversal_is_negation_in_sr() {
    for (p, top) in [(q1(), 1), (trivial(FieldTag::RealQ), 4)] {
        let t = build_tower(&p, top).unwrap();
        for l in &t.levels {
            for i in 0..l.registry.len() {
                let mut x = vec![BigInt::from(0); l.registry.len()];
                x[i] += 1;
                x[l.registry.pi_partner(i)] += 1;
                assert!(l.sr.is_zero(&x));
            }
            for j in 0..l.plus.cols() {
                let twice: Vec<BigInt> = l.plus.column(j).iter().map(|c| c * 2).collect();
                assert!(l.sr.is_zero(&twice));
            }
        }
    }
}

#[test]
fn periodicity_of_sr() {
    let c = build_tower(&trivial(FieldTag::ComplexQi), 5).unwrap();
    for n in 0..4 {
        assert_eq!(c.levels[n].sr.invariants(), c.levels[n + 2].sr.invariants());
    }
    let q = build_tower(&q1(), 2).unwrap();
    assert_eq!(q.levels[0].sr.invariants(), q.levels[2].sr.invariants());
    let r = build_tower(&trivial(FieldTag::RealQ), 8).unwrap();
    assert_eq!(r.levels[0].sr.invariants(), r.levels[8].sr.invariants());
}

#[test]
fn opposite_degree_ranks_for_trivial() {
    let p = trivial(FieldTag::RealQ);
    for n in 0..=7 {
        let minus = p.graded(n).unwrap().len();
        let plus = clifford_irreducibles(0, n, FieldTag::RealQ, true).unwrap().len();
        assert_eq!(minus, plus, "n = {n}");
    }
}

fn sr_class(v: &SuperModule, level: &mut IrreducibleRegistry) -> GroupElement {
    class_of(v, level).unwrap()
}

#[test]
fn q1_products_supercommute() {
    let p = q1();
    let d0 = p.graded(0).unwrap();
    let d1 = p.graded(1).unwrap();
    let mut reg0 = graded_registry(&p, 0);
    let mut reg1 = graded_registry(&p, 1);
    let mut pairs0 = Vec::new();
    let mut pairs1 = Vec::new();
    for v in &d1 {
        for w in &d1 {
            let vw = sr_class(&morita_reduce(&tensor_modules(v, w).unwrap()).unwrap(), &mut reg0);
            let wv = sr_class(&morita_reduce(&tensor_modules(w, v).unwrap()).unwrap(), &mut reg0);
            pairs0.push((vw, wv, -1));
        }
        for u in &d0 {
            let vu = sr_class(&tensor_modules(v, u).unwrap(), &mut reg1);
            let uv = sr_class(&tensor_modules(u, v).unwrap(), &mut reg1);
            pairs1.push((vu, uv, 1));
        }
    }
    let (rel1, rel0) = stable_pair(&Functor::WrapRestrict, &Functor::Restrict, &mut reg0, &mut reg1);
    let sr0 = quotient_group(reg0.len(), &rel0.matrix);
    let sr1 = quotient_group(reg1.len(), &rel1.matrix);
    let mut nonzero = 0;
    for (sr, pairs) in [(&sr0, &pairs0), (&sr1, &pairs1)] {
        for (a, b, sign) in pairs {
            let (a, b) = (a.padded(sr.rank), b.padded(sr.rank));
            let diff: Vec<BigInt> = a.iter().zip(&b).map(|(x, y)| x - y * sign).collect();
            assert!(sr.is_zero(&diff));
            nonzero += usize::from(!sr.is_zero(&a));
        }
    }
    assert!(nonzero > 0);
}

#[test]
fn real_degree_one_square_is_nonzero() {
    let p = trivial(FieldTag::RealQ);
    let t = build_tower(&p, 2).unwrap();
    let v = p.graded(1).unwrap().remove(0);
    let vv = tensor_modules(&v, &v).unwrap();
    let mut reg2 = t.levels[2].registry.clone();
    let c = class_of(&vv, &mut reg2).unwrap();
    assert_eq!(reg2.len(), t.levels[2].registry.len());
    let sr = &t.levels[2].sr;
    assert!(!sr.is_zero(&c.padded(sr.rank)));
    let twice: Vec<BigInt> = c.padded(sr.rank).iter().map(|x| x * 2).collect();
    assert!(sr.is_zero(&twice));
}
