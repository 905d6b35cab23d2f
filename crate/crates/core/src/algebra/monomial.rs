use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use super::symbol::Var;

/// A Laurent monomial: sorted `(variable, exponent)` pairs with no zero exponents.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(SmallVec<[(Var, i32); 4]>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(SmallVec::new())
    }

    pub fn var(v: Var) -> Monomial {
        Monomial::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: i32) -> Monomial {
        let mut m = Monomial::one();
        if e != 0 {
            m.0.push((v, e));
        }
        m
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, i32)>) -> Monomial {
        let mut acc = Monomial::one();
        for (v, e) in pairs {
            acc = acc.mul(&Monomial::var_pow(v, e));
        }
        acc
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pairs(&self) -> &[(Var, i32)] {
        &self.0
    }

    pub fn exponent(&self, v: Var) -> i32 {
        self.0
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    pub fn inverse(&self) -> Monomial {
        self.pow(-1)
    }

    /// `self / other`, always defined for Laurent monomials.
    pub fn div(&self, other: &Monomial) -> Monomial {
        self.mul(&other.inverse())
    }

    /// True when every exponent of `other` is at most the matching exponent of
    /// `self`, i.e. `self / other` has no negative exponent where `self` has none.
    pub fn divisible_by(&self, other: &Monomial) -> bool {
        other.0.iter().all(|&(v, e)| self.exponent(v) >= e)
    }

    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(|&(_, e)| e >= 0)
    }

    /// Componentwise minimum with zero floor dropped: `gcd`-like for Laurent monomials.
    pub fn min_with(&self, other: &Monomial) -> Monomial {
        let mut vars: SmallVec<[Var; 8]> = self.0.iter().chain(other.0.iter()).map(|p| p.0).collect();
        vars.sort();
        vars.dedup();
        Monomial::from_sorted(
            vars.into_iter()
                .map(|v| (v, self.exponent(v).min(other.exponent(v))))
                .filter(|&(_, e)| e != 0),
        )
    }

    fn from_sorted(pairs: impl IntoIterator<Item = (Var, i32)>) -> Monomial {
        Monomial(pairs.into_iter().collect())
    }

    /// Replace each variable by its image under `f` (variables may merge).
    pub fn rename(&self, f: impl Fn(Var) -> Var) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|&(v, e)| (f(v), e)))
    }

    /// Graded lexicographic order with variables ranked by name.
    pub fn cmp_grlex(&self, other: &Monomial) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let mut vars: SmallVec<[(&'static str, Var); 8]> = self
            .0
            .iter()
            .chain(other.0.iter())
            .map(|&(v, _)| (v.name(), v))
            .collect();
        vars.sort();
        vars.dedup();
        for (_, v) in vars {
            match self.exponent(v).cmp(&other.exponent(v)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    /// Pairs in name order, for printing.
    pub fn named_pairs(&self) -> Vec<(&'static str, i32)> {
        let mut p: Vec<_> = self.0.iter().map(|&(v, e)| (v.name(), e)).collect();
        p.sort();
        p
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (i, (name, e)) in self.named_pairs().into_iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
