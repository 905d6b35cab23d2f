use std::fmt;

use rand::Rng;

use super::localization::{class_g, localization_pushforward, pushforward_target, verify_pushforward};
use super::params::{sample_alpha, AlphaAssignment, GrothClassExpr, PushforwardParams};
use super::residue::residue_pushforward;
use super::{Comparison, Mode};
use crate::algebra::{LaurentPoly, RatFunc, Scalar};
use crate::error::{Error, Result};
use crate::grothendieck::{groth_or_zero, skew_multi, z_of_u};
use crate::lattice::SpectralParam;
use crate::partitions::Partition;

/// Specializations of the pushforward formula with independent closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpecialCase {
    /// `ℓ = 0, μ = ∅`: the class factorizes as `G_λ(σ) G_{m^{n-k}}(ω)`.
    NonSkew,
    /// `k = n-1`, `λ = ∅`: `π_*((1-ω^{-1})^m) = G_{(m-n+1)}(1-α^{-1})`.
    ProjectiveBundle,
    /// Target shape built from integer sequences: `(m^{n-k} - k^{n-k}, λ)`.
    SequenceTarget,
    /// Residue integral of the general class `g`.
    ResidueSkew,
    /// Residue integral of the factorized class.
    ResidueNonSkew,
    /// `m = k`, `λ = ∅`: the residue integral is 1.
    ResidueUnit,
}

impl SpecialCase {
    pub const ALL: [SpecialCase; 6] = [
        SpecialCase::NonSkew,
        SpecialCase::ProjectiveBundle,
        SpecialCase::SequenceTarget,
        SpecialCase::ResidueSkew,
        SpecialCase::ResidueNonSkew,
        SpecialCase::ResidueUnit,
    ];

    /// Whether the parameters lie in this specialization.
    pub fn applies(self, p: &PushforwardParams) -> bool {
        let plain = p.l == 0 && p.mu.is_empty();
        match self {
            SpecialCase::NonSkew | SpecialCase::SequenceTarget | SpecialCase::ResidueNonSkew => plain,
            SpecialCase::ProjectiveBundle => plain && p.k + 1 == p.n && p.lambda.is_empty(),
            SpecialCase::ResidueSkew => true,
            SpecialCase::ResidueUnit => plain && p.m == p.k,
        }
    }
}

impl fmt::Display for SpecialCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpecialCase::NonSkew => "non-skew",
            SpecialCase::ProjectiveBundle => "projective-bundle",
            SpecialCase::SequenceTarget => "sequence-target",
            SpecialCase::ResidueSkew => "residue-skew",
            SpecialCase::ResidueNonSkew => "residue-non-skew",
            SpecialCase::ResidueUnit => "residue-unit",
        })
    }
}

impl std::str::FromStr for SpecialCase {
    type Err = Error;
    fn from_str(s: &str) -> Result<SpecialCase> {
        SpecialCase::ALL
            .into_iter()
            .find(|c| c.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown special case `{s}`")))
    }
}

/// `G_λ(1-σ^{-1}) ∏_j (1-ω_j^{-1})^m`, built directly from the determinant.
fn factorized_class(lam: &Partition, m: usize, k: usize, n: usize) -> Result<GrothClassExpr> {
    let (sigma, omega) = GrothClassExpr::standard_roots(k, n);
    let zs: Vec<LaurentPoly> = sigma.iter().map(|&v| z_of_u(&SpectralParam::Sym(v))).collect();
    let mut poly = groth_or_zero(lam, &zs)?;
    for &w in &omega {
        poly = &poly * &z_of_u(&SpectralParam::Sym(w)).pow(m as u32);
    }
    GrothClassExpr::new(poly, sigma, omega)
}

fn groth_at_alpha(lam: &Partition, alpha: &AlphaAssignment) -> Result<LaurentPoly> {
    let z: Vec<LaurentPoly> = alpha.params().iter().map(z_of_u).collect();
    groth_or_zero(lam, &z)
}

/// `(I_1 - k, …, I_{n-k} - k, λ_1, λ_2, …)` with `I = m^{n-k}`.
fn sequence_target(m: usize, n: usize, k: usize, lam: &Partition) -> Result<Partition> {
    let head = std::iter::repeat_n(m as i64, n - k).map(|i| i - k as i64);
    let seq: Vec<i64> = head.chain(lam.parts().iter().map(|&p| p as i64)).collect();
    if seq.iter().any(|&x| x < 0) {
        return Err(Error::NotAPartition(format!("{seq:?}")));
    }
    Partition::new(seq.into_iter().map(|x| x as u32))
}

fn points<R: Rng + ?Sized>(n: usize, mode: Mode, trials: usize, rng: &mut R, rational_only: bool) -> Result<Vec<AlphaAssignment>> {
    match mode {
        Mode::Symbolic if rational_only => Ok(vec![AlphaAssignment::ints(&(2..=n as i64 + 1).collect::<Vec<_>>())?]),
        Mode::Symbolic => Ok(vec![AlphaAssignment::symbols("a", n)]),
        Mode::Sample if trials == 0 => Err(Error::Argument("sample mode needs at least one trial".into())),
        Mode::Sample => Ok((0..trials).map(|_| sample_alpha(n, rng)).collect()),
    }
}

fn each_point(
    alphas: Vec<AlphaAssignment>,
    mut f: impl FnMut(&AlphaAssignment) -> Result<Comparison>,
) -> Result<Comparison> {
    let single = alphas.len() == 1;
    let parts = alphas
        .iter()
        .map(|a| {
            let c = f(a)?;
            Ok(if single { c } else { c.with_note(format!("alpha={a}")) })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut c = Comparison::merge(parts);
    if c.holds && !single {
        c.note = None;
    }
    Ok(c)
}

fn require(ok: bool, case: SpecialCase, p: &PushforwardParams) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Argument(format!("{p} is outside the {case} specialization")))
    }
}

/// Run one specialization. Residue cases always evaluate at rational
/// roots; in symbolic mode they use the fixed point `α = (2, 3, …, n+1)`.
pub fn special_case<R: Rng + ?Sized>(
    case: SpecialCase,
    p: &PushforwardParams,
    mode: Mode,
    trials: usize,
    rng: &mut R,
) -> Result<Comparison> {
    require(case.applies(p), case, p)?;
    let (m, n, k) = (p.m, p.n, p.k);
    match case {
        SpecialCase::NonSkew => {
            let explicit = factorized_class(&p.lambda, m, k, n)?;
            if class_g(p)? != explicit {
                return Ok(Comparison::of(class_g(p)?.poly(), explicit.poly())
                    .with_note("general class differs from the factorized one"));
            }
            verify_pushforward(p, mode, trials, rng)
        }
        SpecialCase::ProjectiveBundle => {
            if m + 1 < n {
                return Err(Error::Argument(format!("needs m ≥ n - 1, got m = {m}, n = {n}")));
            }
            let class = factorized_class(&Partition::empty(), m, k, n)?;
            let target = Partition::new([(m + 1 - n) as u32])?;
            each_point(points(n, mode, trials, rng, false)?, |a| {
                let lhs = localization_pushforward(&class, a)?;
                Ok(Comparison::of(&lhs, &RatFunc::from(groth_at_alpha(&target, a)?)))
            })
        }
        SpecialCase::SequenceTarget => {
            let target = sequence_target(m, n, k, &p.lambda)?;
            let expected = pushforward_target(p)?;
            if target != expected {
                return Ok(Comparison::of(&target, &expected).with_note("sequence target differs from the partition target"));
            }
            let class = class_g(p)?;
            each_point(points(n, mode, trials, rng, false)?, |a| {
                let lhs = localization_pushforward(&class, a)?;
                Ok(Comparison::of(&lhs, &RatFunc::from(groth_at_alpha(&target, a)?)))
            })
        }
        SpecialCase::ResidueSkew => {
            let class = class_g(p)?;
            let target = pushforward_target(p)?;
            each_point(points(n, mode, trials, rng, true)?, |a| {
                let lhs = residue_pushforward(&class, a)?;
                let rhs = skew_multi(&target, &p.mu, a.params());
                Ok(Comparison::of(&LaurentPoly::constant(lhs), &rhs))
            })
        }
        SpecialCase::ResidueNonSkew => {
            let class = factorized_class(&p.lambda, m, k, n)?;
            let target = pushforward_target(p)?;
            each_point(points(n, mode, trials, rng, true)?, |a| {
                let lhs = residue_pushforward(&class, a)?;
                Ok(Comparison::of(&LaurentPoly::constant(lhs), &groth_at_alpha(&target, a)?))
            })
        }
        SpecialCase::ResidueUnit => {
            let class = factorized_class(&Partition::empty(), m, k, n)?;
            each_point(points(n, mode, trials, rng, true)?, |a| {
                let lhs = residue_pushforward(&class, a)?;
                Ok(Comparison::of(&lhs, &Scalar::from_integer(1.into())))
            })
        }
    }
}
