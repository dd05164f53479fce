use super::KringError;
use crate::algebra::{CliffordSignature, ShiftedContext};
use crate::classify::{clifford_irreducibles, shift_irreducibles};
use crate::exactnum::{FieldTag, Gaussian};
use crate::supermodule::samples::{q1_even_trivial, q1_l, q1_odd_trivial};
use crate::supermodule::{iso_test, project_even, SuperModule};

/// Irreducibles at degree `−n`, i.e. over `base` with `n` extra
/// e-generators.
#[derive(Clone, Debug)]
pub struct IrrepProvider {
    base: ShiftedContext,
    source: Source,
}

#[derive(Clone, Debug)]
enum Source {
    /// Trivial algebra: explicit Clifford modules.
    Clifford,
    /// Graded irreducibles at degree 0, shifted upward.
    Seeds(Vec<SuperModule>),
}

impl IrrepProvider {
    /// Explicit Clifford irreducibles; `base` must carry the trivial algebra.
    pub fn clifford(base: &ShiftedContext) -> Self {
        IrrepProvider { base: base.clone(), source: Source::Clifford }
    }

    /// `I`, `Π` and `L_λ` for each sample with `√λ` in the field.
    pub fn q1(base: &ShiftedContext, samples: &[Gaussian]) -> Self {
        let mut seeds = vec![q1_even_trivial(base), q1_odd_trivial(base)];
        seeds.extend(samples.iter().filter_map(|l| q1_l(base, l)));
        IrrepProvider { base: base.clone(), source: Source::Seeds(seeds) }
    }

    /// A complete list of graded irreducibles at degree 0 supplied by the
    /// caller.
    pub fn seeds(base: &ShiftedContext, seeds: Vec<SuperModule>) -> Self {
        IrrepProvider { base: base.clone(), source: Source::Seeds(seeds) }
    }

    pub fn base(&self) -> &ShiftedContext {
        &self.base
    }

    pub fn context(&self, n: usize) -> ShiftedContext {
        let s = self.base.signature;
        self.base.with_signature(CliffordSignature::new(s.p + n, s.q))
    }

    pub fn graded(&self, n: usize) -> Result<Vec<SuperModule>, KringError> {
        match &self.source {
            Source::Clifford => self.clifford_list(n, true),
            Source::Seeds(seeds) => {
                let mut list = seeds.clone();
                for _ in 0..n {
                    let shifted = shift_irreducibles(&list)?;
                    if !shifted.obstructed.is_empty() {
                        return Err(KringError::Obstructed);
                    }
                    list = shifted.modules;
                }
                Ok(list)
            }
        }
    }

    /// Ungraded irreducibles at degree `−n`, obtained as `p₀` of the graded
    /// ones at degree `−n−1` unless the Clifford path applies.
    pub fn ungraded(&self, n: usize) -> Result<Vec<SuperModule>, KringError> {
        if let Source::Clifford = self.source {
            return self.clifford_list(n, false);
        }
        let mut out: Vec<SuperModule> = Vec::new();
        for v in self.graded(n + 1)? {
            let u = project_even(&v)?;
            let mut seen = false;
            for w in &out {
                if iso_test(w, &u)?.is_iso() {
                    seen = true;
                    break;
                }
            }
            if !seen {
                out.push(u);
            }
        }
        Ok(out)
    }

    fn clifford_list(&self, n: usize, graded: bool) -> Result<Vec<SuperModule>, KringError> {
        if self.base.algebra.dim() != 0 {
            return Err(KringError::NoProvider);
        }
        let s = self.base.signature;
        let field: FieldTag = self.base.field();
        let mut list = clifford_irreducibles(s.p + n, s.q, field, graded)?;
        for m in &mut list {
            m.context = self.context(n);
        }
        Ok(list)
    }
}
