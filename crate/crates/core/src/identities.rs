//! Case-level checks tying lattice partition functions to the polynomial
//! evaluators, and the evaluators to each other.

use crate::algebra::{LaurentPoly, Var};
use crate::compare::Comparison;
use crate::error::{Error, Result};
use crate::grothendieck::{
    chain_sum, default_r, groth_det, groth_det_at, schur_op_skew, skew_iwao, skew_multi, skew_one_var_beta, z_of_u,
    z_to_u, IwaoVariant,
};
use crate::lattice::{partition_function, PfKind, SpectralParam};
use crate::partitions::{partition_to_positions, prepend_rect, Partition, PositionSeq};
use crate::pushforward::PushforwardParams;

fn empty_positions(m: usize) -> PositionSeq {
    PositionSeq::new(Vec::new(), m).expect("empty sequence")
}

/// `⟨y| B(u_1)…B(u_n) |∅⟩ = G_λ(1-u^{-1})` with `λ` read from `y` on
/// `λ_1 + n` sites.
pub fn wavefunction_check(lam: &Partition, n: usize) -> Result<Comparison> {
    let m = lam.first() as usize + n;
    let y = partition_to_positions(lam, n, m)?;
    let u = SpectralParam::symbols("u", n);
    let z = partition_function(PfKind::Z, m, 0, &empty_positions(m), &y, &u)?;
    let z_vars = Var::indexed("z", n);
    let det = z_to_u(&groth_det(lam, &z_vars)?, &z_vars, &u)?;
    Ok(Comparison::of(&z, &det))
}

/// Lattice `B`-word matrix element with `ℓ` initial particles on `m` sites.
fn lattice_skew(lam: &Partition, mu: &Partition, l: usize, m: usize, u: &[SpectralParam]) -> Result<LaurentPoly> {
    let x = partition_to_positions(mu, l, m)?;
    let y = partition_to_positions(lam, l + u.len(), m)?;
    partition_function(PfKind::Z, m, 0, &x, &y, u)
}

/// `⟨y| B(u_1)…B(u_n) |x⟩ = G_{λ//μ}(1-u^{-1})`, on the smallest chain
/// holding both shapes with `ℓ = len(μ)`.
pub fn lattice_skew_check(lam: &Partition, mu: &Partition, n: usize) -> Result<Comparison> {
    let l = mu.len().max(lam.len().saturating_sub(n));
    let m = l + n + lam.first().max(mu.first()) as usize;
    let u = SpectralParam::symbols("u", n);
    let z = lattice_skew(lam, mu, l, m, &u)?;
    Ok(Comparison::of(&z, &skew_multi(lam, mu, &u)))
}

/// Chain sum, Iwao determinant, Schur operators at `β = 1` and the lattice,
/// all for `G_{λ//μ}` in `n` variables. The left side is the chain sum; the
/// right side repeats it when all four agree, otherwise names the outlier.
pub fn evaluator_agreement(lam: &Partition, mu: &Partition, n: usize) -> Result<Comparison> {
    let u = SpectralParam::symbols("u", n);
    let chain = skew_multi(lam, mu, &u);
    let z_vars = Var::indexed("z", n);
    let r = default_r(lam, mu, n);
    let iwao = z_to_u(&skew_iwao(lam, mu, &z_vars, r, IwaoVariant::Corrected)?, &z_vars, &u)?;
    let rows = lam.len().max(mu.len());
    let cols = lam.first().max(mu.first());
    let xs: Vec<LaurentPoly> = u.iter().map(z_of_u).collect();
    let ops = schur_op_skew(lam, mu, &xs, &LaurentPoly::one(), rows, cols)?;
    let l = mu.len().max(lam.len().saturating_sub(n));
    let lattice = lattice_skew(lam, mu, l, l + n + cols as usize, &u)?;
    for (name, v) in [("determinant", &iwao), ("schur-operators", &ops), ("lattice", &lattice)] {
        if *v != chain {
            return Ok(Comparison::of(&chain, v).with_note(format!("{name} evaluator disagrees")));
        }
    }
    Ok(Comparison::of(&chain, &chain))
}

/// `⟨y| D(u_1)…D(u_n) |x⟩ = G_{((m-ℓ)^n, λ)//μ}(1-u^{-1})`, `x, y` both with `ℓ` particles.
pub fn u_function_check(m: usize, l: usize, lam: &Partition, mu: &Partition, n: usize) -> Result<Comparison> {
    if l > m {
        return Err(Error::Argument(format!("ℓ = {l} exceeds m = {m}")));
    }
    let x = partition_to_positions(mu, l, m)?;
    let y = partition_to_positions(lam, l, m)?;
    let u = SpectralParam::symbols("u", n);
    let z = partition_function(PfKind::U, m, 0, &x, &y, &u)?;
    let outer = prepend_rect(lam, n, (m - l) as u32)?;
    Ok(Comparison::of(&z, &skew_multi(&outer, mu, &u)))
}

/// `⟨y| D(u_n)…D(u_{k+1}) B(u_k)…B(u_1) |x⟩ = G_{((m-ℓ-k)^{n-k}, λ)//μ}(1-u^{-1})`.
pub fn db_function_check(p: &PushforwardParams) -> Result<Comparison> {
    let (x, y) = p.positions();
    let u = SpectralParam::symbols("u", p.n);
    let z = partition_function(PfKind::Zdb, p.m, p.k, &x, &y, &u)?;
    let outer = prepend_rect(&p.lambda, p.n - p.k, (p.m - p.l - p.k) as u32)?;
    Ok(Comparison::of(&z, &skew_multi(&outer, &p.mu, &u)))
}

/// `G_{(m^N)}(z_1..z_N) = ∏ z_j^m`.
pub fn rectangle_factorization(m: u32, rows: usize) -> Result<Comparison> {
    let z = Var::indexed("z", rows);
    let lhs = groth_det(&Partition::rect(rows, m), &z)?;
    let rhs: LaurentPoly = z.iter().map(|&v| LaurentPoly::var_pow(v, m as i32)).product();
    Ok(Comparison::of(&lhs, &rhs))
}

/// `G_λ(z, 0) = G_λ(z)` when `z` has at least `len(λ)` entries.
pub fn stability_check(lam: &Partition, n: usize) -> Result<Comparison> {
    let z: Vec<LaurentPoly> = Var::indexed("z", n).into_iter().map(LaurentPoly::var).collect();
    let mut padded = z.clone();
    padded.push(LaurentPoly::zero());
    Ok(Comparison::of(&groth_det_at(lam, &padded)?, &groth_det_at(lam, &z)?))
}

/// Schur-operator product against the `β`-deformed branching chain, with
/// `β` a free symbol.
pub fn schur_operator_check(lam: &Partition, mu: &Partition, n: usize) -> Result<Comparison> {
    let xs: Vec<LaurentPoly> = Var::indexed("x", n).into_iter().map(LaurentPoly::var).collect();
    let beta = LaurentPoly::var(Var::new("beta"));
    let rows = lam.len().max(mu.len());
    let cols = lam.first().max(mu.first());
    let ops = schur_op_skew(lam, mu, &xs, &beta, rows, cols)?;
    // the operator applied first carries x_1 and meets μ, i.e. the bottom step
    let chain = chain_sum(lam, mu, n, &|a, b, j| skew_one_var_beta(a, b, &xs[n - 1 - j], &beta));
    Ok(Comparison::of(&ops, &chain))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_in_box;

    #[test]
    fn worked_example_on_lattice() {
        let c = lattice_skew_check(&"5,3,3,1".parse().unwrap(), &"4,3,2".parse().unwrap(), 1).unwrap();
        assert!(c.holds, "{c:?}");
    }

    #[test]
    fn small_agreement() {
        for lam in enumerate_in_box(2, 2) {
            for mu in enumerate_in_box(2, 2) {
                for n in 1..=2 {
                    let c = evaluator_agreement(&lam, &mu, n).unwrap();
                    assert!(c.holds, "{lam} {mu} {n}: {c:?}");
                    assert!(schur_operator_check(&lam, &mu, n).unwrap().holds, "{lam} {mu} {n}");
                }
            }
        }
    }

    #[test]
    fn u_function_small() {
        for m in 1..=3 {
            for l in 0..=m {
                for lam in enumerate_in_box(l, (m - l) as u32) {
                    for mu in enumerate_in_box(l, (m - l) as u32) {
                        assert!(u_function_check(m, l, &lam, &mu, 2).unwrap().holds, "{m} {l} {lam} {mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn factorization_and_stability() {
        assert!(rectangle_factorization(2, 3).unwrap().holds);
        assert!(stability_check(&"2,1".parse().unwrap(), 2).unwrap().holds);
        assert!(wavefunction_check(&"2,1".parse().unwrap(), 3).unwrap().holds);
    }
}
