use std::collections::HashMap;

use super::scalar::Field;

/// Incremental elimination for large, very sparse homogeneous systems.
///
/// Rows are fed one at a time and reduced against the pivots seen so far;
/// only the reduced rows are stored.
#[derive(Debug)]
pub struct SparseEliminator<F> {
    unknowns: usize,
    pivots: HashMap<usize, Vec<(usize, F)>>,
}

fn axpy<F: Field>(row: &[(usize, F)], c: &F, piv: &[(usize, F)]) -> Vec<(usize, F)> {
    // row - c * piv
    let mut out = Vec::with_capacity(row.len() + piv.len());
    let (mut a, mut b) = (0, 0);
    while a < row.len() || b < piv.len() {
        let ca = row.get(a).map_or(usize::MAX, |e| e.0);
        let cb = piv.get(b).map_or(usize::MAX, |e| e.0);
        if ca < cb {
            out.push(row[a].clone());
            a += 1;
        } else if cb < ca {
            out.push((cb, -(c.clone() * piv[b].1.clone())));
            b += 1;
        } else {
            let v = row[a].1.clone() - c.clone() * piv[b].1.clone();
            if !v.is_zero() {
                out.push((ca, v));
            }
            a += 1;
            b += 1;
        }
    }
    out
}

impl<F: Field> SparseEliminator<F> {
    pub fn new(unknowns: usize) -> Self {
        SparseEliminator { unknowns, pivots: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds the equation `Σ c·x[col] = 0`. Duplicate columns are summed.
    pub fn push(&mut self, mut row: Vec<(usize, F)>) {
        row.sort_by_key(|e| e.0);
        let mut merged: Vec<(usize, F)> = Vec::with_capacity(row.len());
        for (c, v) in row {
            match merged.last_mut() {
                Some(last) if last.0 == c => last.1 = last.1.clone() + v,
                _ => merged.push((c, v)),
            }
        }
        merged.retain(|e| !e.1.is_zero());
        let mut row = merged;
        while let Some((lead, _)) = row.first() {
            let Some(piv) = self.pivots.get(lead) else { break };
            let c = row[0].1.clone();
            row = axpy(&row, &c, piv);
        }
        if let Some((lead, v)) = row.first().cloned() {
            let inv = v.inv();
            for e in row.iter_mut() {
                e.1 = e.1.clone() * inv.clone();
            }
            self.pivots.insert(lead, row);
        }
    }

    /// Null-space basis, one vector per free unknown.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let mut order: Vec<usize> = self.pivots.keys().copied().collect();
        order.sort_unstable_by(|a, b| b.cmp(a));
        (0..self.unknowns)
            .filter(|c| !self.pivots.contains_key(c))
            .map(|free| {
                let mut x = vec![F::zero(); self.unknowns];
                x[free] = F::one();
                for &p in &order {
                    let mut acc = F::zero();
                    for (c, v) in &self.pivots[&p][1..] {
                        if !x[*c].is_zero() {
                            acc = acc + v.clone() * x[*c].clone();
                        }
                    }
                    x[p] = -acc;
                }
                x
            })
            .collect()
    }
}
