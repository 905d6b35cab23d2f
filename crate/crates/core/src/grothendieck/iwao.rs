use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{complete, gen_binomial, LaurentPoly, RingMatrix, Scalar, Var};
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Sign convention for the inner binomial sum of the determinant formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IwaoVariant {
    /// `Σ_k (-1)^k binom(1-j, k) H^{(i-1)}_{λ_i-μ_j-i+j+k}`; agrees with the
    /// chain-sum evaluator.
    Corrected,
    /// `Σ_k binom(1-j, k) H^{(i-1)}_{λ_i-μ_j-i+j+k}` exactly as usually quoted
    /// from the `β = -1` source; disagrees once `ℓ(μ) ≥ 2`.
    AsPrinted,
}

/// Smallest admissible size: `max(ℓ(λ), n + ℓ(μ))`.
pub fn default_r(lam: &Partition, mu: &Partition, n: usize) -> usize {
    lam.len().max(n + mu.len())
}

/// `r × r` determinant formula for `G_{λ//μ}(z_1, …, z_n)`.
pub fn skew_iwao(lam: &Partition, mu: &Partition, z: &[Var], r: usize, variant: IwaoVariant) -> Result<LaurentPoly> {
    let need = default_r(lam, mu, z.len());
    if r < need {
        return Err(Error::Argument(format!("r = {r} below the admissible bound {need}")));
    }
    if r == 0 {
        return Ok(LaurentPoly::one());
    }
    let sign = |k: i64| -> Scalar {
        if variant == IwaoVariant::Corrected && k % 2 == 1 {
            -Scalar::one()
        } else {
            Scalar::one()
        }
    };
    // each entry is a scalar combination of h_d; collect coefficients first
    // so every h_d is built once
    let mut coeffs = vec![vec![BTreeMap::<i64, Scalar>::new(); r]; r];
    for (i0, row) in coeffs.iter_mut().enumerate() {
        let i = i0 as i64 + 1;
        let lam_i = lam.part(i0 + 1) as i64;
        for (j0, cell) in row.iter_mut().enumerate() {
            let j = j0 as i64 + 1;
            let mu_j = mu.part(j0 + 1) as i64;
            for k in 0..=mu_j - j + r as i64 {
                let b = gen_binomial(1 - j, k)? * sign(k);
                if b.is_zero() {
                    continue;
                }
                // H^{(i-1)}_p = Σ_l binom(i-1, l) (-1)^l h_{p+l}
                let p = lam_i - mu_j - i + j + k;
                for l in 0..i {
                    let d = p + l;
                    if d < 0 {
                        continue;
                    }
                    let mut c = gen_binomial(i - 1, l)? * &b;
                    if l % 2 == 1 {
                        c = -c;
                    }
                    *cell.entry(d).or_insert_with(Scalar::zero) += c;
                }
            }
        }
    }
    let mut h: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
    let m = RingMatrix::from_fn(r, |i0, j0| {
        let mut acc = LaurentPoly::zero();
        for (&d, c) in &coeffs[i0][j0] {
            let hd = h.entry(d).or_insert_with(|| complete(z, d));
            acc += &hd.scale(c);
        }
        acc
    })?;
    Ok(m.determinant())
}
