use num_bigint::BigInt;
use num_traits::Zero;

use super::KringError;
use crate::algebra::{CliffordSignature, ShiftedContext};
use crate::classify::{classify_irreducible, composition_factors, IrreducibleTag};
use crate::supermodule::{conjugate, iso_test, parity_reverse, IsoVerdict, SuperModule};

/// Pairwise non-isomorphic irreducibles over one shifted context, closed
/// under `Π` (graded) or `†` (ungraded). Grows on demand.
#[derive(Clone, Debug)]
pub struct IrreducibleRegistry {
    context: ShiftedContext,
    graded: bool,
    modules: Vec<SuperModule>,
    tags: Vec<Option<IrreducibleTag>>,
    partner: Vec<usize>,
}

impl IrreducibleRegistry {
    pub fn new(context: &ShiftedContext, graded: bool) -> Self {
        IrreducibleRegistry {
            context: context.clone(),
            graded,
            modules: Vec::new(),
            tags: Vec::new(),
            partner: Vec::new(),
        }
    }

    /// Registry holding `seeds` (assumed irreducible) and their partners.
    pub fn seeded(context: &ShiftedContext, graded: bool, seeds: &[SuperModule]) -> Result<Self, KringError> {
        let mut reg = Self::new(context, graded);
        for m in seeds {
            reg.insert(m)?;
        }
        Ok(reg)
    }

    pub fn context(&self) -> &ShiftedContext {
        &self.context
    }

    pub fn degree(&self) -> CliffordSignature {
        self.context.signature
    }

    pub fn graded(&self) -> bool {
        self.graded
    }

    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn modules(&self) -> &[SuperModule] {
        &self.modules
    }

    pub fn module(&self, i: usize) -> &SuperModule {
        &self.modules[i]
    }

    /// `None` when the classifier could not settle the entry's structure.
    pub fn tag(&self, i: usize) -> Option<&IrreducibleTag> {
        self.tags[i].as_ref()
    }

    /// Index of `ΠV_i` (graded) or `V_i†` (ungraded).
    pub fn pi_partner(&self, i: usize) -> usize {
        self.partner[i]
    }

    fn accepts(&self, m: &SuperModule) -> Result<(), KringError> {
        if m.graded != self.graded
            || m.context.signature != self.context.signature
            || !m.context.same_algebra(&self.context)
            || m.field() != self.context.field()
        {
            return Err(KringError::WrongDegree);
        }
        Ok(())
    }

    pub fn find(&self, m: &SuperModule) -> Result<Option<usize>, KringError> {
        self.accepts(m)?;
        for (i, v) in self.modules.iter().enumerate() {
            match iso_test(v, m)? {
                IsoVerdict::Isomorphic { .. } => return Ok(Some(i)),
                IsoVerdict::NotIsomorphic => {}
                IsoVerdict::Undecided => return Err(KringError::Undecided(i)),
            }
        }
        Ok(None)
    }

    fn partner_module(&self, m: &SuperModule) -> Result<SuperModule, KringError> {
        Ok(if self.graded { parity_reverse(m)? } else { conjugate(m) })
    }

    fn push(&mut self, m: SuperModule) -> usize {
        self.tags.push(classify_irreducible(&m).ok());
        self.modules.push(m);
        self.partner.push(usize::MAX);
        self.modules.len() - 1
    }

    /// Index of `m`, appending it (and its partner) when unseen. `m` must be
    /// irreducible.
    pub fn insert(&mut self, m: &SuperModule) -> Result<usize, KringError> {
        if let Some(i) = self.find(m)? {
            return Ok(i);
        }
        let i = self.push(m.clone());
        let other = self.partner_module(m)?;
        let j = match iso_test(m, &other)? {
            IsoVerdict::Isomorphic { .. } => i,
            IsoVerdict::NotIsomorphic => match self.find(&other)? {
                Some(j) => j,
                None => self.push(other),
            },
            IsoVerdict::Undecided => return Err(KringError::Undecided(i)),
        };
        self.partner[i] = j;
        self.partner[j] = i;
        Ok(i)
    }
}

/// Integer combination of registry generators. Shorter vectors are padded
/// with zeros, since registries only grow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    pub coefficients: Vec<BigInt>,
}

impl GroupElement {
    pub fn zero(len: usize) -> Self {
        GroupElement { coefficients: vec![BigInt::zero(); len] }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        GroupElement { coefficients: c.iter().map(|&x| BigInt::from(x)).collect() }
    }

    pub fn padded(&self, len: usize) -> Vec<BigInt> {
        let mut c = self.coefficients.clone();
        c.resize(len, BigInt::zero());
        c
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }
}

/// Class of `m` in the Grothendieck group: multiplicities of its
/// composition factors, with unseen factors appended to `reg`.
pub fn class_of(m: &SuperModule, reg: &mut IrreducibleRegistry) -> Result<GroupElement, KringError> {
    reg.accepts(m)?;
    let report = composition_factors(m);
    if let Some(k) = report.certified.iter().position(|c| !c) {
        return Err(KringError::Uncertified(report.factors[k].dim()));
    }
    let mut pairs = Vec::new();
    for (f, &k) in report.factors.iter().zip(&report.multiplicities) {
        pairs.push((reg.insert(f)?, k));
    }
    let mut out = GroupElement::zero(reg.len());
    for (i, k) in pairs {
        out.coefficients[i] += k;
    }
    Ok(out)
}
