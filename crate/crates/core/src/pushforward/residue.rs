use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::params::{AlphaAssignment, GrothClassExpr};
use crate::algebra::{gen_binomial, LaurentPoly, Monomial, Scalar, Var};
use crate::error::{Error, Result};

/// Univariate Laurent polynomial as exponent → coefficient.
type Uni = BTreeMap<i32, Scalar>;

fn uni_mul(a: &Uni, b: &Uni) -> Uni {
    let mut out = Uni::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            *out.entry(ea + eb).or_insert_with(Scalar::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// First `len` Taylor coefficients of `p(a + t)` in `t`.
fn taylor(p: &Uni, a: &Scalar, len: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); len];
    for (&e, c) in p {
        // c a^e (1 + t/a)^e
        let base = c * pow_signed(a, e);
        let mut ar = Scalar::one();
        for (r, slot) in out.iter_mut().enumerate() {
            let b = gen_binomial(e as i64, r as i64).expect("nonnegative index");
            if b.is_zero() && e >= 0 {
                break;
            }
            *slot += &base * &b / &ar;
            ar *= a;
        }
    }
    out
}

fn pow_signed(a: &Scalar, e: i32) -> Scalar {
    let p = crate::algebra::laurent::pow_scalar(a, e.unsigned_abs());
    if e < 0 {
        Scalar::one() / p
    } else {
        p
    }
}

/// Residue of `num/den` at `z = a`, read off the Laurent expansion in
/// `t = z - a`; poles of any order are handled.
fn residue_at(num: &Uni, den: &Uni, a: &Scalar) -> Result<Scalar> {
    if den.is_empty() {
        return Err(Error::DivisionByZero);
    }
    let span = (den.keys().last().unwrap() - den.keys().next().unwrap()) as usize;
    let d_series = taylor(den, a, span + 1);
    // a nonzero Laurent polynomial vanishes to order at most its span away from 0
    let Some(d) = d_series.iter().position(|c| !c.is_zero()) else {
        return Err(Error::Internal("denominator vanishes identically at a pole".into()));
    };
    if d == 0 {
        return Ok(Scalar::zero());
    }
    let q = taylor(den, a, 2 * d);
    let q = &q[d..];
    let n_series = taylor(num, a, d);
    // coefficient of t^{d-1} in N/Q by power-series division
    let mut quot: Vec<Scalar> = Vec::with_capacity(d);
    for r in 0..d {
        let mut acc = n_series[r].clone();
        for s in 1..=r {
            acc -= &q[s] * &quot[r - s];
        }
        quot.push(acc / &q[0]);
    }
    Ok(quot[d - 1].clone())
}

/// Residue data of one integration variable: `Res_{z=α_j} z^{e-1} / ∏_t (z/α_t - 1)`.
struct Kernel {
    alpha: Vec<Scalar>,
    den: Uni,
    cache: HashMap<(i32, usize), Scalar>,
}

impl Kernel {
    fn new(alpha: Vec<Scalar>) -> Kernel {
        let mut den = Uni::from([(0, Scalar::one())]);
        for a in &alpha {
            den = uni_mul(&den, &Uni::from([(1, Scalar::one() / a), (0, -Scalar::one())]));
        }
        Kernel { alpha, den, cache: HashMap::new() }
    }

    fn at(&mut self, e: i32, j: usize) -> Result<Scalar> {
        if let Some(v) = self.cache.get(&(e, j)) {
            return Ok(v.clone());
        }
        let num = Uni::from([(e - 1, Scalar::one())]);
        let v = residue_at(&num, &self.den, &self.alpha[j])?;
        self.cache.insert((e, j), v.clone());
        Ok(v)
    }

    /// Sum over every enclosed pole.
    fn total(&mut self, e: i32) -> Result<Scalar> {
        let mut acc = Scalar::zero();
        for j in 0..self.alpha.len() {
            acc += self.at(e, j)?;
        }
        Ok(acc)
    }
}

fn rational_roots(f: &GrothClassExpr, alpha: &AlphaAssignment) -> Result<Vec<Scalar>> {
    if alpha.len() != f.n() {
        return Err(Error::Argument(format!("class has {} roots, got {} values", f.n(), alpha.len())));
    }
    alpha
        .as_rationals()
        .ok_or_else(|| Error::Argument("residue evaluation needs rational roots".into()))
}

/// `f(z) ∏_{i<j}(1 - z_j/z_i)` with `z = (σ, ω)`.
fn integrand_numerator(f: &GrothClassExpr) -> (Vec<Var>, LaurentPoly) {
    let z: Vec<Var> = f.sigma().iter().chain(f.omega()).copied().collect();
    let mut p = f.poly().clone();
    let one = LaurentPoly::one();
    for i in 0..z.len() {
        for j in i + 1..z.len() {
            let ratio = LaurentPoly::term(Monomial::from_pairs([(z[j], 1), (z[i], -1)]), Scalar::one());
            p = &p * &(&one - &ratio);
        }
    }
    (z, p)
}

/// Iterated contour integral
/// `∮ f(z) ∏_{i<j}(1 - z_j/z_i) / ∏_{i,j}(z_i/α_j - 1) ∏ dz_i/(2πi z_i)`
/// with every contour around the `α`'s and not around 0.
///
/// The last variable is integrated first; each step is a univariate residue
/// sum computed from Laurent expansions at the poles.
pub fn residue_pushforward(f: &GrothClassExpr, alpha: &AlphaAssignment) -> Result<Scalar> {
    let roots = rational_roots(f, alpha)?;
    let (z, mut p) = integrand_numerator(f);
    let mut kernel = Kernel::new(roots);
    for &v in z.iter().rev() {
        let mut next = LaurentPoly::zero();
        for (mono, c) in p.terms() {
            let e = mono.exponent(v);
            let r = kernel.total(e)?;
            if r.is_zero() {
                continue;
            }
            next.add_term(mono.div(&Monomial::var_pow(v, e)), c * &r);
        }
        p = next;
    }
    p.as_constant()
        .ok_or_else(|| Error::Internal("integration left free variables".into()))
}

/// Contribution of each pole assignment `z_i = α_{j(i)}`, for all `n^n` maps `j`.
pub fn residue_contributions(f: &GrothClassExpr, alpha: &AlphaAssignment) -> Result<Vec<(Vec<usize>, Scalar)>> {
    let roots = rational_roots(f, alpha)?;
    let n = roots.len();
    let (z, p) = integrand_numerator(f);
    let mut kernel = Kernel::new(roots);
    let mut out = Vec::new();
    let total = n.pow(n as u32);
    for code in 0..total.max(1) {
        let mut assign = Vec::with_capacity(n);
        let mut c = code;
        for _ in 0..n {
            assign.push(c % n.max(1));
            c /= n.max(1);
        }
        let mut acc = Scalar::zero();
        for (mono, coef) in p.terms() {
            let mut t = coef.clone();
            for (i, &v) in z.iter().enumerate() {
                t *= kernel.at(mono.exponent(v), assign[i])?;
                if t.is_zero() {
                    break;
                }
            }
            acc += t;
        }
        out.push((assign, acc));
    }
    Ok(out)
}
