use std::collections::BTreeMap;

use crate::algebra::LaurentPoly;
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Finitely supported combination of partitions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartitionVector(BTreeMap<Partition, LaurentPoly>);

impl PartitionVector {
    pub fn basis(p: Partition) -> PartitionVector {
        PartitionVector(BTreeMap::from([(p, LaurentPoly::one())]))
    }

    pub fn coefficient(&self, p: &Partition) -> LaurentPoly {
        self.0.get(p).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &LaurentPoly)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn add(&mut self, p: Partition, c: LaurentPoly) {
        let slot = self.0.entry(p.clone()).or_insert_with(LaurentPoly::zero);
        *slot += &c;
        if slot.is_zero() {
            self.0.remove(&p);
        }
    }
}

/// Length of column `i` (one-based).
fn column_len(p: &Partition, i: u32) -> usize {
    p.parts().iter().take_while(|&&x| x >= i).count()
}

/// Add a box in column `i` when the result is a partition.
pub fn add_in_column(p: &Partition, i: u32) -> Option<Partition> {
    let c = column_len(p, i);
    if p.part(c + 1) != i - 1 {
        return None;
    }
    let mut parts = p.parts().to_vec();
    if c < parts.len() {
        parts[c] += 1;
    } else {
        parts.push(1);
    }
    Some(Partition::new(parts).expect("valid box addition"))
}

/// Remove a box from column `i` when the result is a partition.
pub fn remove_in_column(p: &Partition, i: u32) -> Option<Partition> {
    let c = column_len(p, i);
    if c == 0 || p.part(c) != i {
        return None;
    }
    let mut parts = p.parts().to_vec();
    parts[c - 1] -= 1;
    Some(Partition::new(parts).expect("valid box removal"))
}

/// `(1 + x ũ_i) v` with `ũ_i = u_i - β u_i d_i`, states outside the box dropped.
fn apply_factor(v: &PartitionVector, i: u32, x: &LaurentPoly, beta: &LaurentPoly, rows: usize, cols: u32) -> PartitionVector {
    let mut out = v.clone();
    for (p, c) in v.iter() {
        if let Some(q) = add_in_column(p, i) {
            if q.fits_in(rows, cols) {
                out.add(q, c * x);
            }
        }
        if let Some(q) = remove_in_column(p, i) {
            // u_i d_i restores the same shape.
            let back = add_in_column(&q, i).expect("re-adding a removed box");
            debug_assert_eq!(&back, p);
            out.add(back, -(&(c * x) * beta));
        }
    }
    out
}

/// `A(x) = …(1 + x ũ_2)(1 + x ũ_1)` truncated to columns `1..=cols`.
pub fn apply_a(v: &PartitionVector, x: &LaurentPoly, beta: &LaurentPoly, rows: usize, cols: u32) -> PartitionVector {
    let mut cur = v.clone();
    for i in 1..=cols {
        cur = apply_factor(&cur, i, x, beta, rows, cols);
    }
    cur
}

/// `⟨A(x_n) ⋯ A(x_1) μ, λ⟩` computed on states inside a `rows × cols` box.
pub fn schur_op_skew(
    lam: &Partition,
    mu: &Partition,
    x: &[LaurentPoly],
    beta: &LaurentPoly,
    rows: usize,
    cols: u32,
) -> Result<LaurentPoly> {
    for p in [lam, mu] {
        if !p.fits_in(rows, cols) {
            return Err(Error::BoxOverflow(format!("{p} outside {rows}x{cols}")));
        }
    }
    let mut v = PartitionVector::basis(mu.clone());
    for xi in x {
        v = apply_a(&v, xi, beta, rows, cols);
    }
    Ok(v.coefficient(lam))
}
