use num_traits::Zero;

use super::maps::{eigenlattice, extend_columns, involution_map, Functor, GroupMap};
use super::presentation::{quotient_group, GroupPresentation};
use super::provider::IrrepProvider;
use super::registry::{GroupElement, IrreducibleRegistry};
use super::KringError;
use crate::exactnum::{integer_kernel, lattice_compare, solve_integer, IntegerMatrix, LatticeRelation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    SixComplex,
    SixReal,
    TwentyFour,
}

#[derive(Clone, Debug)]
pub struct Node {
    pub label: String,
    pub group: GroupPresentation,
}

/// Integer matrix from the ambient lattice of one node to the next.
#[derive(Clone, Debug)]
pub struct Arrow {
    pub label: String,
    pub matrix: IntegerMatrix,
}

/// `arrows[k]` goes from `nodes[k]` to `nodes[k + 1]` (cyclically when
/// `cyclic`).
#[derive(Clone, Debug)]
pub struct ExactSequence {
    pub variant: Variant,
    pub nodes: Vec<Node>,
    pub arrows: Vec<Arrow>,
    pub cyclic: bool,
}

impl ExactSequence {
    pub fn target(&self, k: usize) -> usize {
        (k + 1) % self.nodes.len()
    }

    /// Nodes with an arrow on both sides.
    pub fn checked_nodes(&self) -> Vec<usize> {
        if self.cyclic {
            (0..self.nodes.len()).collect()
        } else {
            (1..self.nodes.len() - 1).collect()
        }
    }

    fn incoming(&self, b: usize) -> usize {
        (b + self.nodes.len() - 1) % self.nodes.len()
    }
}

#[derive(Clone, Debug)]
pub struct NodeVerdict {
    pub node: usize,
    pub label: String,
    /// The composite of the two adjacent arrows lands in the relations.
    pub composite_zero: bool,
    /// Image lattice compared with kernel lattice, both containing the
    /// node's relations.
    pub relation: LatticeRelation,
    pub image: IntegerMatrix,
    pub kernel: IntegerMatrix,
}

impl NodeVerdict {
    pub fn is_exact(&self) -> bool {
        self.composite_zero && self.relation == LatticeRelation::Equal
    }
}

/// `{x : g x ∈ Rel_C} + Rel_B` as columns.
pub fn kernel_lattice(g: &IntegerMatrix, rel_b: &IntegerMatrix, rel_c: &IntegerMatrix) -> IntegerMatrix {
    let b = g.cols();
    let stacked = g.hstack(&rel_c.neg());
    let k = integer_kernel(&stacked);
    let rows: Vec<usize> = (0..b).collect();
    let cols: Vec<usize> = (0..k.cols()).collect();
    k.submatrix(&rows, &cols).hstack(rel_b)
}

/// `Im f + Rel_B` as columns.
pub fn image_lattice(f: &IntegerMatrix, rel_b: &IntegerMatrix) -> IntegerMatrix {
    f.hstack(rel_b)
}

fn lies_in(cols: &IntegerMatrix, group: &GroupPresentation) -> bool {
    (0..cols.cols()).all(|j| group.is_zero(&cols.column(j)))
}

pub fn check_node(seq: &ExactSequence, b: usize) -> NodeVerdict {
    let a = seq.incoming(b);
    let c = seq.target(b);
    let f = &seq.arrows[a].matrix;
    let g = &seq.arrows[b].matrix;
    let (rb, rc) = (&seq.nodes[b].group.relations, &seq.nodes[c].group.relations);
    let image = image_lattice(f, rb);
    let kernel = kernel_lattice(g, rb, rc);
    NodeVerdict {
        node: b,
        label: seq.nodes[b].label.clone(),
        composite_zero: lies_in(&g.mul(f), &seq.nodes[c].group),
        relation: lattice_compare(&image, &kernel),
        image,
        kernel,
    }
}

/// Im = Ker at every node with arrows on both sides.
pub fn check_exactness(seq: &ExactSequence) -> Vec<NodeVerdict> {
    seq.checked_nodes().into_iter().map(|b| check_node(seq, b)).collect()
}

/// Arrow `k` maps the relations of its source into those of its target.
pub fn well_defined(seq: &ExactSequence, k: usize) -> bool {
    let src = &seq.nodes[k].group;
    let tgt = &seq.nodes[seq.target(k)].group;
    lies_in(&seq.arrows[k].matrix.mul(&src.relations), tgt)
}

/// Coordinates of `cols` in the lattice basis `basis`.
pub fn coordinates(basis: &IntegerMatrix, cols: &IntegerMatrix, what: &str) -> Result<IntegerMatrix, KringError> {
    let mut out = Vec::new();
    for j in 0..cols.cols() {
        let x = solve_integer(basis, &cols.column(j)).ok_or_else(|| KringError::NotInLattice(what.into()))?;
        out.push(x);
    }
    Ok(IntegerMatrix::from_columns(&out, basis.cols()))
}

pub fn is_surjective(f: &IntegerMatrix, target: &GroupPresentation) -> bool {
    let full = IntegerMatrix::identity(target.rank);
    lattice_compare(&image_lattice(f, &target.relations), &full) == LatticeRelation::Equal
}

pub fn is_injective(f: &IntegerMatrix, source: &GroupPresentation, target: &GroupPresentation) -> bool {
    let k = kernel_lattice(f, &source.relations, &target.relations);
    lattice_compare(&k, &source.relations) == LatticeRelation::Equal
}

/// `π : R₊ → SR` (inclusion of the eigenlattice basis) and
/// `δ = 1 − Π : SR → R_Z2`, evaluated on ambient representatives.
#[derive(Clone, Debug)]
pub struct ConnectingMaps {
    pub quotient_map: IntegerMatrix,
    pub delta: IntegerMatrix,
}

/// Connecting maps for an involution (`Π`, or `†` for `δ′`) and the
/// relation lattice of the quotient. Fails when `δ` is not constant on
/// cosets.
pub fn connecting_maps(involution: &GroupMap, relations: &IntegerMatrix) -> Result<ConnectingMaps, KringError> {
    let plus = eigenlattice(involution, 1)?;
    let n = involution.matrix.rows();
    let delta = IntegerMatrix::identity(n).sub(&involution.matrix);
    if !delta.mul(relations).entries().all(Zero::is_zero) {
        return Err(KringError::Inconsistent("δ depends on the coset representative".into()));
    }
    Ok(ConnectingMaps { quotient_map: plus, delta })
}

/// Registries plus functor maps between them, grown to a common fixpoint.
struct Workspace {
    regs: Vec<IrreducibleRegistry>,
    maps: Vec<(Functor, usize, usize, Vec<GroupElement>)>,
}

impl Workspace {
    fn new() -> Self {
        Workspace { regs: Vec::new(), maps: Vec::new() }
    }

    fn registry(&mut self, reg: IrreducibleRegistry) -> usize {
        self.regs.push(reg);
        self.regs.len() - 1
    }

    fn map(&mut self, f: Functor, src: usize, tgt: usize) -> usize {
        assert_ne!(src, tgt);
        self.maps.push((f, src, tgt, Vec::new()));
        self.maps.len() - 1
    }

    fn close(&mut self) -> Result<(), KringError> {
        loop {
            let mut changed = false;
            for (f, s, t, cols) in &mut self.maps {
                if cols.len() == self.regs[*s].len() {
                    continue;
                }
                changed = true;
                let source = self.regs[*s].clone();
                extend_columns(f, &source, &mut self.regs[*t], cols)?;
            }
            if !changed {
                return Ok(());
            }
        }
    }

    fn matrix(&self, k: usize) -> IntegerMatrix {
        let (_, _, t, cols) = &self.maps[k];
        GroupMap::from_columns(cols, self.regs[*t].len()).matrix
    }
}

/// Graded data at one degree `−n`: the registry, `Π`, the `R₊`/`R₋`
/// eigenlattices and `SR^{-n}` presented as `R_Z2^{-n}` modulo the image of
/// `i*` from degree `−n−1`.
#[derive(Clone, Debug)]
pub struct Level {
    pub n: usize,
    pub registry: IrreducibleRegistry,
    pub pi: GroupMap,
    pub plus: IntegerMatrix,
    pub minus: IntegerMatrix,
    /// `i* : R_Z2^{-n-1} → R_Z2^{-n}` in ambient coordinates.
    pub restriction: IntegerMatrix,
    pub sr: GroupPresentation,
}

impl Level {
    pub fn graded_group(&self) -> GroupPresentation {
        GroupPresentation::free(self.registry.len())
    }

    pub fn plus_group(&self) -> GroupPresentation {
        GroupPresentation::free(self.plus.cols())
    }

    pub fn minus_group(&self) -> GroupPresentation {
        GroupPresentation::free(self.minus.cols())
    }

    /// `i*` into `R₊^{-n}`, in eigenlattice coordinates.
    pub fn restriction_into_plus(&self) -> Result<IntegerMatrix, KringError> {
        coordinates(&self.plus, &self.restriction, &format!("i* image in R+^-{}", self.n))
    }

    /// `R₊^{-n} / i* R_Z2^{-n-1}`.
    pub fn restriction_cokernel(&self) -> Result<GroupPresentation, KringError> {
        Ok(quotient_group(self.plus.cols(), &self.restriction_into_plus()?))
    }
}

/// Graded registries at degrees `0, −1, …, −(top+1)` linked by `i*`.
#[derive(Clone, Debug)]
pub struct Tower {
    pub levels: Vec<Level>,
    /// Registry at degree `−(top+1)`, source of the last restriction.
    pub cap: IrreducibleRegistry,
}

pub fn build_tower(provider: &IrrepProvider, top: usize) -> Result<Tower, KringError> {
    let mut ws = Workspace::new();
    for n in 0..=top + 1 {
        let reg = IrreducibleRegistry::seeded(&provider.context(n), true, &provider.graded(n)?)?;
        ws.registry(reg);
    }
    let res: Vec<usize> = (0..=top).map(|n| ws.map(Functor::Restrict, n + 1, n)).collect();
    ws.close()?;
    let mut levels = Vec::new();
    for n in 0..=top {
        let registry = ws.regs[n].clone();
        let pi = involution_map(&registry);
        let restriction = ws.matrix(res[n]);
        levels.push(Level {
            n,
            plus: eigenlattice(&pi, 1)?,
            minus: eigenlattice(&pi, -1)?,
            sr: quotient_group(registry.len(), &restriction),
            registry,
            pi,
            restriction,
        });
    }
    Ok(Tower { levels, cap: ws.regs[top + 1].clone() })
}

/// `0`, `-1`, `-2`, …
fn degree(n: usize) -> String {
    if n == 0 {
        "0".into()
    } else {
        format!("-{n}")
    }
}

fn node(label: String, group: GroupPresentation) -> Node {
    Node { label, group }
}

fn arrow(label: &str, matrix: IntegerMatrix) -> Arrow {
    Arrow { label: label.into(), matrix }
}

/// `R₊ →π SR →δ R_Z2` at one level.
fn triple(level: &Level, tag: &str, nodes: &mut Vec<Node>, arrows: &mut Vec<Arrow>) -> Result<(), KringError> {
    let maps = connecting_maps(&level.pi, &level.restriction)?;
    nodes.push(node(format!("R+^{tag}"), level.plus_group()));
    nodes.push(node(format!("SR^{tag}"), level.sr.clone()));
    nodes.push(node(format!("RZ2^{tag}"), level.graded_group()));
    arrows.push(arrow("π", maps.quotient_map));
    arrows.push(arrow("δ", maps.delta));
    Ok(())
}

/// `… → R_Z2^{-n-1} →i* R₊^{-n} →π SR^{-n} →δ R_Z2^{-n} → …` for
/// `n = 8, …, 1`, between `R_Z2^{-9}` and `R₊^0`: one full period, 24
/// interior nodes.
pub fn twentyfour(provider: &IrrepProvider) -> Result<ExactSequence, KringError> {
    let tower = build_tower(provider, 8)?;
    let mut nodes = vec![node("RZ2^-9".into(), GroupPresentation::free(tower.cap.len()))];
    let mut arrows = Vec::new();
    for n in (1..=8).rev() {
        let level = &tower.levels[n];
        arrows.push(arrow("i*", level.restriction_into_plus()?));
        triple(level, &degree(n), &mut nodes, &mut arrows)?;
    }
    let bottom = &tower.levels[0];
    arrows.push(arrow("i*", bottom.restriction_into_plus()?));
    nodes.push(node("R+^0".into(), bottom.plus_group()));
    Ok(ExactSequence { variant: Variant::TwentyFour, nodes, arrows, cyclic: false })
}

/// The six-term complex sequence on degrees `0` and `−1`, closed through
/// the Morita periodicity `R_Z2^0 ≅ R_Z2^{-2}`.
pub fn six_complex(provider: &IrrepProvider) -> Result<ExactSequence, KringError> {
    let mut ws = Workspace::new();
    let r0 = ws.registry(IrreducibleRegistry::seeded(&provider.context(0), true, &provider.graded(0)?)?);
    let r1 = ws.registry(IrreducibleRegistry::seeded(&provider.context(1), true, &provider.graded(1)?)?);
    let down = ws.map(Functor::Restrict, r1, r0);
    let wrap = ws.map(Functor::WrapRestrict, r0, r1);
    ws.close()?;
    let level = |n: usize, reg: usize, res: usize| -> Result<Level, KringError> {
        let registry = ws.regs[reg].clone();
        let pi = involution_map(&registry);
        let restriction = ws.matrix(res);
        Ok(Level {
            n,
            plus: eigenlattice(&pi, 1)?,
            minus: eigenlattice(&pi, -1)?,
            sr: quotient_group(registry.len(), &restriction),
            registry,
            pi,
            restriction,
        })
    };
    let l0 = level(0, r0, down)?;
    let l1 = level(1, r1, wrap)?;
    let (mut nodes, mut arrows) = (Vec::new(), Vec::new());
    triple(&l0, "0", &mut nodes, &mut arrows)?;
    arrows.push(arrow("i*", l1.restriction_into_plus()?));
    triple(&l1, "-1", &mut nodes, &mut arrows)?;
    arrows.push(arrow("i*", l0.restriction_into_plus()?));
    Ok(ExactSequence { variant: Variant::SixComplex, nodes, arrows, cyclic: true })
}

/// The six-term real sequence at degree `−n`. The bottom row is realized on
/// ungraded modules at degree `−n` through `R_Z2^{-n-1} ≅ R_0^{-n}`, which
/// carries `R₊^{-n-1}` to `R_sc^{-n}`, `SR^{n+1}(ḡ)` to `R_0^{-n}/f R_Z2^{-n}`
/// and `i*` to `Δ`.
pub fn six_real(provider: &IrrepProvider, n: usize) -> Result<ExactSequence, KringError> {
    let mut ws = Workspace::new();
    let g = ws.registry(IrreducibleRegistry::seeded(&provider.context(n), true, &provider.graded(n)?)?);
    let u = ws.registry(IrreducibleRegistry::seeded(&provider.context(n), false, &provider.ungraded(n)?)?);
    let diag = ws.map(Functor::Delta, u, g);
    let fgt = ws.map(Functor::Forget, g, u);
    ws.close()?;
    let (gr, ur) = (&ws.regs[g], &ws.regs[u]);
    let (dm, fm) = (ws.matrix(diag), ws.matrix(fgt));
    let pi = involution_map(gr);
    let dag = involution_map(ur);
    let top = connecting_maps(&pi, &dm)?;
    let bottom = connecting_maps(&dag, &fm)?;
    let sc = bottom.quotient_map.clone();
    let (d, e, m) = (degree(n), degree(n + 1), n + 1);
    let nodes = vec![
        node(format!("R+^{d}"), GroupPresentation::free(top.quotient_map.cols())),
        node(format!("SR^{d}"), quotient_group(gr.len(), &dm)),
        node(format!("RZ2^{d}"), GroupPresentation::free(gr.len())),
        node(format!("R+^{e}"), GroupPresentation::free(sc.cols())),
        node(format!("SR^{m}(gbar)"), quotient_group(ur.len(), &fm)),
        node(format!("RZ2^{e}"), GroupPresentation::free(ur.len())),
    ];
    let arrows = vec![
        arrow("π", top.quotient_map.clone()),
        arrow("δ", top.delta),
        arrow("f", coordinates(&sc, &fm, "f image in R_sc")?),
        arrow("π'", sc),
        arrow("δ'", bottom.delta),
        arrow("i*", coordinates(&top.quotient_map, &dm, "Δ image in R+")?),
    ];
    Ok(ExactSequence { variant: Variant::SixReal, nodes, arrows, cyclic: true })
}

pub fn build_sequence(provider: &IrrepProvider, variant: Variant, n: usize) -> Result<ExactSequence, KringError> {
    match variant {
        Variant::SixComplex => six_complex(provider),
        Variant::SixReal => six_real(provider, n),
        Variant::TwentyFour => twentyfour(provider),
    }
}

/// `SR^{-n}` of the base context for `n` in `degrees`.
pub fn abs_table(provider: &IrrepProvider, degrees: std::ops::RangeInclusive<usize>) -> Result<Vec<(usize, GroupPresentation)>, KringError> {
    let tower = build_tower(provider, *degrees.end())?;
    Ok(degrees.map(|n| (n, tower.levels[n].sr.clone())).collect())
}
