use crate::algebra::{LaurentPoly, RingMatrix, Var};
use crate::error::{Error, Result};
use crate::partitions::Partition;

fn vandermonde_desc(z: &[LaurentPoly]) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for i in 0..z.len() {
        for j in i + 1..z.len() {
            acc = &acc * &(&z[i] - &z[j]);
        }
    }
    acc
}

/// `det(f_i(λ_j + n - j) (1 - z_i)^{j-1}) / ∏_{i<j} (z_i - z_j)` where
/// `f_i(p)` is the `p`-th "power" of `z_i`.
fn bialternant(
    lam: &Partition,
    z: &[LaurentPoly],
    power: impl Fn(usize, u32) -> LaurentPoly,
) -> Result<LaurentPoly> {
    let n = z.len();
    if lam.len() > n {
        return Err(Error::Argument(format!("{lam} has more than {n} parts")));
    }
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let one = LaurentPoly::one();
    let om: Vec<LaurentPoly> = z.iter().map(|zi| &one - zi).collect();
    let m = RingMatrix::from_fn(n, |i, j| {
        let e = lam.part(j + 1) + (n - 1 - j) as u32;
        &power(i, e) * &om[i].pow(j as u32)
    })?;
    m.determinant()
        .exact_div(&vandermonde_desc(z))
        .map_err(|e| Error::Internal(format!("bialternant quotient for {lam}: {e}")))
}

/// Grassmannian Grothendieck polynomial `G_λ(z_1, …, z_n)` from its
/// bialternant formula, in arbitrary Laurent-polynomial arguments.
pub fn groth_det_at(lam: &Partition, z: &[LaurentPoly]) -> Result<LaurentPoly> {
    bialternant(lam, z, |i, e| z[i].pow(e))
}

/// `G_λ(z_1, …, z_n)` in the given variables.
pub fn groth_det(lam: &Partition, z: &[Var]) -> Result<LaurentPoly> {
    let zs: Vec<LaurentPoly> = z.iter().map(|&v| LaurentPoly::var(v)).collect();
    groth_det_at(lam, &zs)
}

/// `G_λ` with zero for partitions longer than the number of variables.
pub fn groth_or_zero(lam: &Partition, z: &[LaurentPoly]) -> Result<LaurentPoly> {
    if lam.len() > z.len() {
        Ok(LaurentPoly::zero())
    } else {
        groth_det_at(lam, z)
    }
}

/// `z ⊕ v = z + v - z v`.
pub fn oplus(z: &LaurentPoly, v: &LaurentPoly) -> LaurentPoly {
    &(z + v) - &(z * v)
}

/// Double Grothendieck polynomial `G_λ(z | v)`: the bialternant with
/// `z_i^p` replaced by `(z_i ⊕ v_1)…(z_i ⊕ v_p)`. Missing `v_t` (for
/// `t > |v|`) are taken to be zero.
pub fn groth_double_at(lam: &Partition, z: &[LaurentPoly], v: &[LaurentPoly]) -> Result<LaurentPoly> {
    let zero = LaurentPoly::zero();
    bialternant(lam, z, |i, e| {
        (0..e as usize)
            .map(|t| oplus(&z[i], v.get(t).unwrap_or(&zero)))
            .product()
    })
}

pub fn groth_double(lam: &Partition, z: &[Var], v: &[Var]) -> Result<LaurentPoly> {
    let zs: Vec<LaurentPoly> = z.iter().map(|&x| LaurentPoly::var(x)).collect();
    let vs: Vec<LaurentPoly> = v.iter().map(|&x| LaurentPoly::var(x)).collect();
    groth_double_at(lam, &zs, &vs)
}

#[cfg(test)]
mod tests {
    use std::collections::HashMap;

    use super::*;
    use crate::partitions::enumerate_in_box;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_values() {
        let z = Var::indexed("z", 3);
        for n in 0..=3 {
            assert!(groth_det(&Partition::empty(), &z[..n]).unwrap().is_one());
        }
        assert_eq!(groth_det(&p("1"), &z[..1]).unwrap(), LaurentPoly::var(z[0]));
        assert_eq!(
            groth_det(&p("1,1"), &z[..2]).unwrap(),
            &LaurentPoly::var(z[0]) * &LaurentPoly::var(z[1])
        );
        assert!(groth_det(&p("1,1"), &z[..1]).is_err());
    }

    #[test]
    fn double_reduces_and_single_box() {
        let z = Var::indexed("z", 2);
        let v = Var::indexed("v", 3);
        let zl = LaurentPoly::var(z[0]);
        let vl = LaurentPoly::var(v[0]);
        assert_eq!(groth_double(&p("1"), &z[..1], &v[..1]).unwrap(), oplus(&zl, &vl));
        let zero: HashMap<Var, LaurentPoly> = v.iter().map(|&x| (x, LaurentPoly::zero())).collect();
        for lam in enumerate_in_box(2, 2) {
            let d = groth_double(&lam, &z, &v).unwrap().substitute_laurent(&zero).unwrap();
            assert_eq!(d, groth_det(&lam, &z).unwrap(), "λ = {lam}");
        }
    }

    #[test]
    fn symmetric_in_z() {
        let z = Var::indexed("z", 3);
        let v = Var::indexed("v", 2);
        let swapped = [z[2], z[0], z[1]];
        for lam in enumerate_in_box(3, 2) {
            assert_eq!(groth_det(&lam, &z).unwrap(), groth_det(&lam, &swapped).unwrap());
            assert_eq!(groth_double(&lam, &z, &v).unwrap(), groth_double(&lam, &swapped, &v).unwrap());
        }
    }
}
