use std::collections::HashMap;

use crate::algebra::LaurentPoly;
use crate::lattice::SpectralParam;
use crate::partitions::{interlaces, skew_stats, Partition};

/// One-variable skew polynomial `G_{λ//μ}(1 - u^{-1})`:
/// `(1-u^{-1})^{|λ|-|μ|} ∏_{j ≤ ℓ(μ)} {u^{-1} + δ_{λ_{j+1}, μ_j}(1-u^{-1})}` on
/// interlacing pairs, zero otherwise.
pub fn skew_one_var(lam: &Partition, mu: &Partition, u: &SpectralParam) -> LaurentPoly {
    let ui = u.inv_poly();
    let x = &LaurentPoly::one() - &ui;
    strip_weight(lam, mu, &x, &ui)
}

/// `x^{|λ|-|μ|} c^{a(λ//μ)}` on interlacing pairs, zero otherwise.
fn strip_weight(lam: &Partition, mu: &Partition, x: &LaurentPoly, c: &LaurentPoly) -> LaurentPoly {
    if !lam.contains(mu) || !interlaces(lam, mu) {
        return LaurentPoly::zero();
    }
    let s = skew_stats(lam, mu).expect("containment checked");
    &x.pow(s.weight) * &c.pow(s.a_stat)
}

/// `G^β_{λ//μ}(x)` for general `β`.
pub fn skew_one_var_beta(lam: &Partition, mu: &Partition, x: &LaurentPoly, beta: &LaurentPoly) -> LaurentPoly {
    let omb = &LaurentPoly::one() - &(beta * x);
    strip_weight(lam, mu, x, &omb)
}

/// Sum over interlacing chains `λ = λ^(0) ≻ λ^(1) ≻ … ≻ λ^(n) = μ` of
/// `∏_j weight(λ^(j-1), λ^(j), j)`, memoized on `(λ^(j), j)`.
pub fn chain_sum(
    lam: &Partition,
    mu: &Partition,
    n: usize,
    weight: &dyn Fn(&Partition, &Partition, usize) -> LaurentPoly,
) -> LaurentPoly {
    fn rec(
        cur: &Partition,
        j: usize,
        n: usize,
        mu: &Partition,
        weight: &dyn Fn(&Partition, &Partition, usize) -> LaurentPoly,
        memo: &mut HashMap<(Partition, usize), LaurentPoly>,
    ) -> LaurentPoly {
        if j == n {
            return if cur == mu { LaurentPoly::one() } else { LaurentPoly::zero() };
        }
        if let Some(v) = memo.get(&(cur.clone(), j)) {
            return v.clone();
        }
        let mut acc = LaurentPoly::zero();
        for next in cur.interlaced_below() {
            if !next.contains(mu) {
                continue;
            }
            let tail = rec(&next, j + 1, n, mu, weight, memo);
            if tail.is_zero() {
                continue;
            }
            acc += &(&weight(cur, &next, j) * &tail);
        }
        memo.insert((cur.clone(), j), acc.clone());
        acc
    }
    if !lam.contains(mu) {
        return LaurentPoly::zero();
    }
    rec(lam, 0, n, mu, weight, &mut HashMap::new())
}

/// Multi-variable skew polynomial `G_{λ//μ}(1-u_1^{-1}, …, 1-u_n^{-1})`
/// with `u_1` attached to the top step of the chain.
pub fn skew_multi(lam: &Partition, mu: &Partition, u: &[SpectralParam]) -> LaurentPoly {
    chain_sum(lam, mu, u.len(), &|a, b, j| skew_one_var(a, b, &u[j]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{descent_count, enumerate_in_box};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn one_variable_examples() {
        let u = SpectralParam::sym("u");
        let om = &LaurentPoly::one() - &u.inv_poly();
        assert_eq!(skew_one_var(&p("5,3,3,1"), &p("4,3,2"), &u), &om.pow(3) * &u.inv_poly().pow(2));
        assert_eq!(skew_one_var(&p("1"), &p("1"), &u), u.inv_poly());
        assert!(skew_one_var(&p("1,1"), &Partition::empty(), &u).is_zero());
    }

    #[test]
    fn stationary_chains() {
        let u = SpectralParam::symbols("u", 3);
        for lam in enumerate_in_box(3, 3) {
            let expect: LaurentPoly = u.iter().map(|x| x.inv_poly().pow(descent_count(&lam))).product();
            assert_eq!(skew_multi(&lam, &lam, &u), expect, "λ = {lam}");
        }
    }

    #[test]
    fn single_box_and_containment() {
        let u = SpectralParam::symbols("u", 1);
        assert_eq!(skew_multi(&p("1"), &Partition::empty(), &u), &LaurentPoly::one() - &u[0].inv_poly());
        let u2 = SpectralParam::symbols("u", 2);
        assert!(skew_multi(&p("1"), &p("2"), &u2).is_zero());
        assert!(skew_multi(&p("2,1"), &p("1,1,1"), &u2).is_zero());
    }
}
