use num_traits::{One, Zero};

use super::laurent::LaurentPoly;
use super::monomial::Monomial;
use super::symbol::Var;
use super::Scalar;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymKind {
    Elementary,
    Complete,
}

/// `e_d` or `h_d` in the given variables, with `h_d = e_d = 0` for `d < 0`.
pub fn symmetric_poly(kind: SymKind, vars: &[Var], degree: i64) -> LaurentPoly {
    if degree < 0 {
        return LaurentPoly::zero();
    }
    let d = degree as usize;
    // every exponent vector summing to d, entries capped at 1 for e_d
    let cap = match kind {
        SymKind::Elementary => 1,
        SymKind::Complete => d,
    };
    let mut terms = Vec::new();
    let mut exps = vec![0usize; vars.len()];
    fn rec(i: usize, left: usize, cap: usize, vars: &[Var], exps: &mut Vec<usize>, out: &mut Vec<Monomial>) {
        if i == vars.len() {
            if left == 0 {
                out.push(Monomial::from_pairs(vars.iter().zip(exps.iter()).map(|(&v, &e)| (v, e as i32))));
            }
            return;
        }
        for e in 0..=left.min(cap) {
            exps[i] = e;
            rec(i + 1, left - e, cap, vars, exps, out);
        }
        exps[i] = 0;
    }
    rec(0, d, cap, vars, &mut exps, &mut terms);
    LaurentPoly::from_terms(terms.into_iter().map(|m| (m, Scalar::one())))
}

pub fn elementary(vars: &[Var], degree: i64) -> LaurentPoly {
    symmetric_poly(SymKind::Elementary, vars, degree)
}

pub fn complete(vars: &[Var], degree: i64) -> LaurentPoly {
    symmetric_poly(SymKind::Complete, vars, degree)
}

/// `p (p-1) … (p-q+1) / q!` for any integer `p`.
pub fn gen_binomial(p: i64, q: i64) -> Result<Scalar> {
    if q < 0 {
        return Err(Error::Domain(format!("binomial lower index {q} is negative")));
    }
    let mut acc = Scalar::one();
    for j in 0..q {
        acc *= Scalar::from_integer((p - j).into());
        acc /= Scalar::from_integer((j + 1).into());
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

/// `H_p^{(i)} = Σ_{l=0}^{i} binom(i,l) (-1)^l h_{p+l}`.
pub fn h_twisted(p: i64, i: u32, vars: &[Var]) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    for l in 0..=i as i64 {
        let h = complete(vars, p + l);
        if h.is_zero() {
            continue;
        }
        let mut c = gen_binomial(i as i64, l).expect("nonnegative");
        if l % 2 == 1 {
            c = -c;
        }
        acc += &h.scale(&c);
    }
    acc
}

/// `∏_{i<j} (v_j - v_i)`.
pub fn vandermonde(vals: &[LaurentPoly]) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for j in 0..vals.len() {
        for i in 0..j {
            acc = &acc * &(&vals[j] - &vals[i]);
        }
    }
    acc
}

/// `V / ∏_{i∈S, j∉S} (v_j - v_i)` as a polynomial: the same-side Vandermonde
/// factors with sign `(-1)^{#{i<j : i∉S, j∈S}}`.
pub fn split_cofactor(vals: &[LaurentPoly], in_s: &[bool]) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    let mut flips = 0usize;
    for j in 0..vals.len() {
        for i in 0..j {
            match (in_s[i], in_s[j]) {
                (a, b) if a == b => acc = &acc * &(&vals[j] - &vals[i]),
                (false, true) => flips += 1,
                _ => {}
            }
        }
    }
    if flips % 2 == 1 {
        -acc
    } else {
        acc
    }
}
