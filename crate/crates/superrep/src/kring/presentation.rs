use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactnum::{hermite_columns, quotient_invariants, IntegerMatrix};

/// `ℤ^rank / span(relations)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupPresentation {
    pub rank: usize,
    pub relations: IntegerMatrix,
    pub free_rank: usize,
    /// Invariant factors greater than one.
    pub torsion: Vec<BigInt>,
}

impl GroupPresentation {
    pub fn free(rank: usize) -> Self {
        quotient_group(rank, &IntegerMatrix::zeros(rank, 0))
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Whether `x` is zero in the quotient.
    pub fn is_zero(&self, x: &[BigInt]) -> bool {
        hermite_columns(&self.relations).contains(x)
    }

    /// Order of `x` in the quotient; `None` when infinite.
    pub fn order(&self, x: &[BigInt]) -> Option<BigInt> {
        let h = hermite_columns(&self.relations);
        let bound = self.torsion.last().cloned().unwrap_or_else(BigInt::one);
        let mut k = BigInt::one();
        while k <= bound {
            let kx: Vec<BigInt> = x.iter().map(|c| c * &k).collect();
            if h.contains(&kx) {
                return Some(k);
            }
            k += 1;
        }
        None
    }

    /// `(free rank, torsion)` with torsion as machine integers, for tests
    /// and reports.
    pub fn invariants(&self) -> (usize, Vec<u64>) {
        let t = self.torsion.iter().map(|d| u64::try_from(d).expect("small torsion")).collect();
        (self.free_rank, t)
    }
}

/// Presents `ℤ^rank` modulo the column span of `relations`.
pub fn quotient_group(rank: usize, relations: &IntegerMatrix) -> GroupPresentation {
    assert_eq!(relations.rows(), rank, "relations live outside the ambient lattice");
    let (free_rank, torsion) = quotient_invariants(relations);
    GroupPresentation { rank, relations: relations.clone(), free_rank, torsion }
}

impl fmt::Display for GroupPresentation {
    /// `Z^r ⊕ Z/d₁ ⊕ …`, `Z` for rank one and `0` for the trivial group.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            if !d.is_zero() {
                parts.push(format!("Z/{d}"));
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}
