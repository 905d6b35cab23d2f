use rand::Rng;

use super::params::{sample_alpha, AlphaAssignment, GrothClassExpr, PushforwardParams};
use super::{subsets, Comparison, Mode};
use crate::algebra::{split_cofactor, vandermonde, LaurentPoly, RatFunc};
use crate::error::{Error, Result};
use crate::grothendieck::skew_multi;
use crate::lattice::{partition_function, PfKind, SpectralParam};
use crate::partitions::{enumerate_in_box, prepend_rect, Partition};

/// `∏_{i∈S, j∉S} (1 - v_i/v_j)^{-1}` times the Vandermonde in `v`, a polynomial.
fn cleared_weight(vals: &[LaurentPoly], in_s: &[bool]) -> LaurentPoly {
    let mut acc = split_cofactor(vals, in_s);
    for (j, v) in vals.iter().enumerate() {
        if !in_s[j] {
            for _ in in_s.iter().filter(|&&b| b) {
                acc = &acc * v;
            }
        }
    }
    acc
}

fn split<T: Clone>(vals: &[T], in_s: &[bool]) -> (Vec<T>, Vec<T>) {
    let inside = vals.iter().zip(in_s).filter(|p| *p.1).map(|p| p.0.clone()).collect();
    let outside = vals.iter().zip(in_s).filter(|p| !*p.1).map(|p| p.0.clone()).collect();
    (inside, outside)
}

/// `Σ_S ∏_{i∈S, j∉S} (1 - α_i/α_j)^{-1} f(α_S; α_{S̄})` over `k`-subsets `S`.
///
/// Summed over the common denominator `∏_{i<j}(α_j - α_i)`, then reduced;
/// the result is a polynomial exactly when the denominators cancel.
pub fn localization_pushforward(f: &GrothClassExpr, alpha: &AlphaAssignment) -> Result<RatFunc> {
    let n = f.n();
    if alpha.len() != n {
        return Err(Error::Argument(format!("class has {n} roots, got {} values", alpha.len())));
    }
    let vals = alpha.polys();
    let mut num = LaurentPoly::zero();
    for in_s in subsets(n, f.k()) {
        let (a, b) = split(&vals, &in_s);
        let fs = f.evaluate_at(&a, &b)?;
        if fs.is_zero() {
            continue;
        }
        num += &(&cleared_weight(&vals, &in_s) * &fs);
    }
    RatFunc::new(num, vandermonde(&vals))
}

/// `g(σ; ω) = Σ_{ν ⊆ (m-ℓ)^ℓ} G_{λ//ν}(1-σ^{-1}) G_{((m-ℓ)^{n-k}, ν)//μ}(1-ω^{-1})`.
pub fn class_g(p: &PushforwardParams) -> Result<GrothClassExpr> {
    let (sigma, omega) = GrothClassExpr::standard_roots(p.k, p.n);
    let sp: Vec<SpectralParam> = sigma.iter().copied().map(SpectralParam::Sym).collect();
    let op: Vec<SpectralParam> = omega.iter().copied().map(SpectralParam::Sym).collect();
    let width = (p.m - p.l) as u32;
    let mut acc = LaurentPoly::zero();
    for nu in enumerate_in_box(p.l, width) {
        let left = skew_multi(&p.lambda, &nu, &sp);
        if left.is_zero() {
            continue;
        }
        let right = skew_multi(&prepend_rect(&nu, p.n - p.k, width)?, &p.mu, &op);
        acc += &(&left * &right);
    }
    GrothClassExpr::new(acc, sigma, omega)
}

/// `((m-ℓ-k)^{n-k}, λ)`, the outer shape of the pushed-forward class.
pub fn pushforward_target(p: &PushforwardParams) -> Result<Partition> {
    prepend_rect(&p.lambda, p.n - p.k, (p.m - p.l - p.k) as u32)
}

fn pushforward_at(p: &PushforwardParams, g: &GrothClassExpr, alpha: &AlphaAssignment) -> Result<Comparison> {
    let lhs = localization_pushforward(g, alpha)?;
    let rhs = RatFunc::from(skew_multi(&pushforward_target(p)?, &p.mu, alpha.params()));
    let mut c = Comparison::of(&lhs, &rhs);
    if lhs.as_poly().is_none() {
        c.holds = false;
        c = c.with_note("localization sum did not reduce to a Laurent polynomial");
    }
    Ok(c)
}

/// `π_*(g) = G_{((m-ℓ-k)^{n-k}, λ)//μ}(1-α^{-1})`, symbolically in `α` or at
/// `trials` random rational points.
pub fn verify_pushforward<R: Rng + ?Sized>(p: &PushforwardParams, mode: Mode, trials: usize, rng: &mut R) -> Result<Comparison> {
    let g = class_g(p)?;
    match mode {
        Mode::Symbolic => pushforward_at(p, &g, &AlphaAssignment::symbols("a", p.n)),
        Mode::Sample => {
            if trials == 0 {
                return Err(Error::Argument("sample mode needs at least one trial".into()));
            }
            let parts = (0..trials)
                .map(|_| {
                    let alpha = sample_alpha(p.n, rng);
                    Ok(pushforward_at(p, &g, &alpha)?.with_note(format!("alpha={alpha}")))
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

/// The class `g` against the lattice value `⟨y| B(σ_1)…B(σ_k) D(ω_1)…D(ω_{n-k}) |x⟩`.
pub fn class_g_matches_lattice(p: &PushforwardParams) -> Result<Comparison> {
    let g = class_g(p)?;
    let (x, y) = p.positions();
    let params: Vec<SpectralParam> =
        g.sigma().iter().chain(g.omega()).copied().map(SpectralParam::Sym).collect();
    let z = partition_function(PfKind::Zbd, p.m, p.k, &x, &y, &params)?;
    Ok(Comparison::of(g.poly(), &z))
}

/// `Z_DB(u) = Σ_S ∏_{i∈S, j∉S}(1 - u_i/u_j)^{-1} Z_BD(u_S | u_{S̄})`, both
/// sides computed on the lattice; compared after clearing the Vandermonde.
pub fn zdb_expansion_check(p: &PushforwardParams) -> Result<Comparison> {
    let (x, y) = p.positions();
    let u = SpectralParam::symbols("u", p.n);
    let vals: Vec<LaurentPoly> = u.iter().map(SpectralParam::as_poly).collect();
    let lhs = &partition_function(PfKind::Zdb, p.m, p.k, &x, &y, &u)? * &vandermonde(&vals);
    let mut rhs = LaurentPoly::zero();
    for in_s in subsets(p.n, p.k) {
        let (mut order, rest) = split(&u, &in_s);
        order.extend(rest);
        let z = partition_function(PfKind::Zbd, p.m, p.k, &x, &y, &order)?;
        if z.is_zero() {
            continue;
        }
        rhs += &(&cleared_weight(&vals, &in_s) * &z);
    }
    Ok(Comparison::of(&lhs, &rhs))
}
