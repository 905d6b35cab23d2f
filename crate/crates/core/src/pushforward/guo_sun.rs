use std::fmt;

use rand::Rng;

use super::params::sample_alpha;
use super::{subsets, Comparison, Mode};
use crate::algebra::{split_cofactor, vandermonde, LaurentPoly, RatFunc, Var};
use crate::error::{Error, Result};
use crate::grothendieck::groth_or_zero;
use crate::partitions::{prepend_rect, Partition};

/// Which rectangle sits on top of `λ` on the left-hand side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GuoSunVariant {
    /// `((m-k)^{n-k}, λ)`, the shape forced by the pushforward theorem.
    Corrected,
    /// `(m^{n-k}, λ)` as commonly printed; fails already for `m = 1, n = 2, k = 1, λ = ∅`.
    Printed,
}

impl fmt::Display for GuoSunVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GuoSunVariant::Corrected => "corrected",
            GuoSunVariant::Printed => "printed",
        })
    }
}

fn compare_at(lam: &Partition, m: usize, k: usize, variant: GuoSunVariant, z: &[LaurentPoly]) -> Result<Comparison> {
    let n = z.len();
    let width = match variant {
        GuoSunVariant::Corrected => m - k,
        GuoSunVariant::Printed => m,
    };
    let lhs = RatFunc::from(groth_or_zero(&prepend_rect(lam, n - k, width as u32)?, z)?);
    let one = LaurentPoly::one();
    let mut num = LaurentPoly::zero();
    for in_s in subsets(n, k) {
        let zs: Vec<LaurentPoly> = z.iter().zip(&in_s).filter(|p| *p.1).map(|p| p.0.clone()).collect();
        let mut term = groth_or_zero(lam, &zs)?;
        if term.is_zero() {
            continue;
        }
        for (zi, &inside) in z.iter().zip(&in_s) {
            let f = if inside { (&one - zi).pow((n - k) as u32) } else { zi.pow(m as u32) };
            term = &term * &f;
        }
        num += &(&term * &split_cofactor(z, &in_s));
    }
    let rhs = RatFunc::new(num, vandermonde(z))?;
    Ok(Comparison::of(&lhs, &rhs))
}

/// `G_{(R, λ)}(z) = Σ_S G_λ(z_S) ∏_{i∈S}(1-z_i)^{n-k} ∏_{j∉S} z_j^m / ∏_{i∈S, j∉S}(z_j - z_i)`
/// with `R` the rectangle chosen by `variant`.
#[allow(clippy::too_many_arguments)]
pub fn guo_sun_check<R: Rng + ?Sized>(
    lam: &Partition,
    m: usize,
    k: usize,
    n: usize,
    variant: GuoSunVariant,
    mode: Mode,
    trials: usize,
    rng: &mut R,
) -> Result<Comparison> {
    if k > n || k > m || n == 0 {
        return Err(Error::Argument(format!("need 0 ≤ k ≤ min(m, n), n ≥ 1; got m = {m}, k = {k}, n = {n}")));
    }
    if !lam.fits_in(k, (m - k) as u32) {
        return Err(Error::BoxOverflow(format!("{lam} does not fit in {k} rows of width {}", m - k)));
    }
    match mode {
        Mode::Symbolic => {
            let z: Vec<LaurentPoly> = Var::indexed("z", n).into_iter().map(LaurentPoly::var).collect();
            compare_at(lam, m, k, variant, &z)
        }
        Mode::Sample => {
            if trials == 0 {
                return Err(Error::Argument("sample mode needs at least one trial".into()));
            }
            let parts = (0..trials)
                .map(|_| {
                    let alpha = sample_alpha(n, rng);
                    Ok(compare_at(lam, m, k, variant, &alpha.polys())?.with_note(format!("z={alpha}")))
                })
                .collect::<Result<Vec<_>>>()?;
            let mut c = Comparison::merge(parts);
            if c.holds {
                c.note = None;
            }
            Ok(c)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn rng() -> rand_chacha::ChaCha8Rng {
        rand_chacha::ChaCha8Rng::seed_from_u64(3)
    }

    #[test]
    fn single_box_two_variables() {
        let c = guo_sun_check(&"1".parse().unwrap(), 2, 1, 2, GuoSunVariant::Corrected, Mode::Symbolic, 1, &mut rng()).unwrap();
        assert!(c.holds);
        assert_eq!(c.lhs, "z1*z2");
    }

    #[test]
    fn printed_rectangle_fails_on_smallest_case() {
        let e = Partition::empty();
        let bad = guo_sun_check(&e, 1, 1, 2, GuoSunVariant::Printed, Mode::Symbolic, 1, &mut rng()).unwrap();
        assert!(!bad.holds);
        assert_eq!(bad.rhs, "1");
        assert_eq!(bad.lhs, "-z1*z2 + z1 + z2");
        let good = guo_sun_check(&e, 1, 1, 2, GuoSunVariant::Corrected, Mode::Symbolic, 1, &mut rng()).unwrap();
        assert!(good.holds);
    }

    #[test]
    fn empty_rectangle_gives_one() {
        for n in 1..=3 {
            let c = guo_sun_check(&Partition::empty(), n, n, n, GuoSunVariant::Corrected, Mode::Symbolic, 1, &mut rng()).unwrap();
            assert!(c.holds);
            assert_eq!(c.lhs, "1");
        }
    }

    #[test]
    fn corrected_holds_on_small_box() {
        let mut r = rng();
        for n in 1..=3 {
            for m in 1..=3 {
                for k in 0..=n.min(m) {
                    for lam in crate::partitions::enumerate_in_box(k.min(2), (m - k).min(2) as u32) {
                        let c = guo_sun_check(&lam, m, k, n, GuoSunVariant::Corrected, Mode::Symbolic, 1, &mut r).unwrap();
                        assert!(c.holds, "m={m} k={k} n={n} {lam}: {c:?}");
                        assert!(guo_sun_check(&lam, m, k, n, GuoSunVariant::Corrected, Mode::Sample, 2, &mut r).unwrap().holds);
                    }
                }
            }
        }
    }
}
