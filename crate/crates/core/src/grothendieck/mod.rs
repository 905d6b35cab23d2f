//! Closed-form evaluators for Grothendieck polynomials: bialternant and
//! double versions, branching-chain skew polynomials, the determinant
//! formula for skew polynomials and the Schur-operator construction.

pub mod determinant;
pub mod iwao;
pub mod schur_ops;
pub mod skew;

use std::collections::HashMap;

pub use determinant::{groth_det, groth_det_at, groth_double, groth_double_at, groth_or_zero, oplus};
pub use iwao::{default_r, skew_iwao, IwaoVariant};
pub use schur_ops::{apply_a, schur_op_skew, PartitionVector};
pub use skew::{chain_sum, skew_multi, skew_one_var, skew_one_var_beta};

use crate::algebra::{LaurentPoly, Var};
use crate::error::{Error, Result};
use crate::lattice::SpectralParam;
use crate::partitions::Partition;

/// `1 - u^{-1}`.
pub fn z_of_u(u: &SpectralParam) -> LaurentPoly {
    &LaurentPoly::one() - &u.inv_poly()
}

/// Substitute `z_j = 1 - u_j^{-1}` into a polynomial in `z`.
pub fn z_to_u(p: &LaurentPoly, z: &[Var], u: &[SpectralParam]) -> Result<LaurentPoly> {
    if z.len() != u.len() {
        return Err(Error::Argument("z and u lists differ in length".into()));
    }
    let map: HashMap<Var, LaurentPoly> = z.iter().zip(u).map(|(&zv, uv)| (zv, z_of_u(uv))).collect();
    p.substitute_laurent(&map)
}

/// `G_λ(ū, u_{ℓ+1}) = Σ_{λ ≻ μ} G_{λ//μ}(u_{ℓ+1}) G_μ(ū)` with `ū = u_1..u_ℓ`.
pub fn branching_check(lam: &Partition, u: &[SpectralParam]) -> Result<bool> {
    let Some((last, head)) = u.split_last() else {
        return Err(Error::Argument("branching needs at least one variable".into()));
    };
    let zs: Vec<LaurentPoly> = u.iter().map(z_of_u).collect();
    let lhs = groth_or_zero(lam, &zs)?;
    let mut rhs = LaurentPoly::zero();
    for mu in lam.interlaced_below() {
        let g = groth_or_zero(&mu, &zs[..head.len()])?;
        if g.is_zero() {
            continue;
        }
        rhs += &(&skew_one_var(lam, &mu, last) * &g);
    }
    Ok(lhs == rhs)
}
