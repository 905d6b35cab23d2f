use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::monomial::Monomial;
use super::ratfunc::RatFunc;
use super::symbol::Var;
use super::Scalar;
use crate::error::{Error, Result};

/// Multivariate Laurent polynomial with exact rational coefficients.
///
/// Terms with zero coefficient are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        LaurentPoly::term(Monomial::one(), c)
    }

    pub fn int(c: i64) -> Self {
        LaurentPoly::constant(Scalar::from_integer(c.into()))
    }

    pub fn var(v: Var) -> Self {
        LaurentPoly::term(Monomial::var(v), Scalar::one())
    }

    pub fn var_pow(v: Var, e: i32) -> Self {
        LaurentPoly::term(Monomial::var_pow(v, e), Scalar::one())
    }

    pub fn term(m: Monomial, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// The value when the polynomial is a constant (including zero).
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// `(monomial, coefficient)` when the polynomial has exactly one term.
    pub fn as_term(&self) -> Option<(&Monomial, &Scalar)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.pairs().iter().map(|&(v, _)| v))
            .collect()
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = LaurentPoly::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power; negative exponents only for single-term polynomials,
    /// the units of the Laurent ring.
    pub fn pow_i(&self, k: i32) -> Result<Self> {
        if k >= 0 {
            return Ok(self.pow(k as u32));
        }
        match self.as_term() {
            Some((m, c)) => {
                let inv = Scalar::one() / c;
                Ok(LaurentPoly::term(m.pow(k), pow_scalar(&inv, (-k) as u32)))
            }
            None if self.is_zero() => Err(Error::DivisionByZero),
            None => Err(Error::Domain(format!("{self} is not a unit of the Laurent ring"))),
        }
    }

    /// Leading term under graded lexicographic order on variable names.
    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms
            .iter()
            .max_by(|a, b| a.0.cmp_grlex(b.0))
    }

    /// Largest monomial dividing every term (componentwise minimum exponent).
    pub fn monomial_content(&self) -> Monomial {
        // Absent variables count as exponent 0 in the minimum.
        let pairs = self.variables().into_iter().map(|v| {
            let min = self.terms.keys().map(|m| m.exponent(v)).min().unwrap_or(0);
            (v, min)
        });
        Monomial::from_pairs(pairs)
    }

    /// Exact quotient `self / divisor`; fails unless the division is exact.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        if let Some((m, c)) = divisor.as_term() {
            let inv = Scalar::one() / c;
            return Ok(self.mul_monomial(&m.inverse()).scale(&inv));
        }
        // Strip monomial content so both sides are genuine polynomials; any exact
        // Laurent quotient is then a polynomial quotient.
        let ca = self.monomial_content();
        let cb = divisor.monomial_content();
        let mut rem = self.mul_monomial(&ca.inverse());
        let b = divisor.mul_monomial(&cb.inverse());
        let (lm_b, lc_b) = b.leading_term().map(|(m, c)| (m.clone(), c.clone())).expect("nonzero");
        let mut quot = LaurentPoly::zero();
        while let Some((lm, lc)) = rem.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
            if !lm.divisible_by(&lm_b) {
                return Err(Error::InexactDivision);
            }
            let qm = lm.div(&lm_b);
            let qc = &lc / &lc_b;
            rem -= &b.mul_monomial(&qm).scale(&qc);
            quot.add_term(qm, qc);
        }
        Ok(quot.mul_monomial(&ca.div(&cb)))
    }

    pub fn rename(&self, map: &HashMap<Var, Var>) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (m.rename(|v| *map.get(&v).unwrap_or(&v)), c.clone())),
        )
    }

    /// Ring homomorphism sending variables to Laurent polynomials. Negative
    /// powers are only available for single-term images.
    pub fn substitute_laurent(&self, map: &HashMap<Var, LaurentPoly>) -> Result<LaurentPoly> {
        let mut cache: HashMap<(Var, i32), LaurentPoly> = HashMap::new();
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let mut term = LaurentPoly::constant(c.clone());
            let mut kept = Monomial::one();
            for &(v, e) in m.pairs() {
                match map.get(&v) {
                    None => kept = kept.mul(&Monomial::var_pow(v, e)),
                    Some(val) => {
                        let p = match cache.get(&(v, e)) {
                            Some(p) => p.clone(),
                            None => {
                                let p = val.pow_i(e).map_err(|err| match err {
                                    Error::DivisionByZero => Error::Pole(v.name().to_string()),
                                    other => other,
                                })?;
                                cache.insert((v, e), p.clone());
                                p
                            }
                        };
                        term = &term * &p;
                    }
                }
            }
            out += &term.mul_monomial(&kept);
        }
        Ok(out)
    }

    /// General substitution into rational functions, returning a single
    /// fraction over the product of the needed denominators.
    pub fn substitute(&self, map: &HashMap<Var, RatFunc>) -> Result<RatFunc> {
        // Exponent range per substituted variable.
        let mut range: BTreeMap<Var, (i32, i32)> = BTreeMap::new();
        for m in self.terms.keys() {
            for &(v, e) in m.pairs() {
                if map.contains_key(&v) {
                    let r = range.entry(v).or_insert((0, 0));
                    r.0 = r.0.min(e);
                    r.1 = r.1.max(e);
                }
            }
        }
        let mut den = LaurentPoly::one();
        for (&v, &(lo, hi)) in &range {
            let val = &map[&v];
            if lo < 0 && val.numer().is_zero() {
                return Err(Error::Pole(v.name().to_string()));
            }
            den = &den * &val.denom().pow(hi as u32);
            den = &den * &val.numer().pow((-lo) as u32);
        }
        let mut cache: HashMap<(Var, bool, u32), LaurentPoly> = HashMap::new();
        let mut power = |v: Var, numer: bool, k: u32| -> LaurentPoly {
            cache
                .entry((v, numer, k))
                .or_insert_with(|| {
                    let val = &map[&v];
                    if numer {
                        val.numer().pow(k)
                    } else {
                        val.denom().pow(k)
                    }
                })
                .clone()
        };
        let mut num = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let mut term = LaurentPoly::constant(c.clone());
            let mut kept = Monomial::one();
            let mut seen = BTreeSet::new();
            for &(v, e) in m.pairs() {
                if let Some(&(lo, hi)) = range.get(&v) {
                    seen.insert(v);
                    term = &term * &power(v, true, (e - lo) as u32);
                    term = &term * &power(v, false, (hi - e) as u32);
                } else {
                    kept = kept.mul(&Monomial::var_pow(v, e));
                }
            }
            // Variables absent from this monomial still carry the common factor.
            for (&v, &(lo, hi)) in &range {
                if !seen.contains(&v) {
                    term = &term * &power(v, true, (-lo) as u32);
                    term = &term * &power(v, false, hi as u32);
                }
            }
            num += &term.mul_monomial(&kept);
        }
        if den.is_zero() {
            return Err(Error::Pole(
                range.keys().next().map(|v| v.name().to_string()).unwrap_or_default(),
            ));
        }
        RatFunc::new(num, den)
    }

    /// Full numeric evaluation; every variable must be assigned.
    pub fn evaluate(&self, values: &HashMap<Var, Scalar>) -> Result<Scalar> {
        let mut acc = Scalar::zero();
        let mut cache: HashMap<(Var, i32), Scalar> = HashMap::new();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.pairs() {
                let x = values
                    .get(&v)
                    .ok_or_else(|| Error::Argument(format!("no value for variable `{v}`")))?;
                let p = match cache.get(&(v, e)) {
                    Some(p) => p.clone(),
                    None => {
                        if e < 0 && x.is_zero() {
                            return Err(Error::Pole(v.name().to_string()));
                        }
                        let p = if e >= 0 {
                            pow_scalar(x, e as u32)
                        } else {
                            pow_scalar(&(Scalar::one() / x), (-e) as u32)
                        };
                        cache.insert((v, e), p.clone());
                        p
                    }
                };
                t *= p;
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Partial numeric evaluation: assigned variables become numbers.
    pub fn evaluate_partial(&self, values: &HashMap<Var, Scalar>) -> Result<LaurentPoly> {
        let map: HashMap<Var, LaurentPoly> = values
            .iter()
            .map(|(v, x)| (*v, LaurentPoly::constant(x.clone())))
            .collect();
        self.substitute_laurent(&map)
    }

    /// Canonical textual form: terms in decreasing graded-lex order.
    pub fn canonical_string(&self) -> String {
        self.to_string()
    }

    fn sorted_terms(&self) -> Vec<(&Monomial, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.cmp_grlex(a.0));
        v
    }
}

pub fn pow_scalar(x: &Scalar, k: u32) -> Scalar {
    num_traits::pow(x.clone(), k as usize)
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Var> for LaurentPoly {
    fn from(v: Var) -> Self {
        LaurentPoly::var(v)
    }
}

impl From<Scalar> for LaurentPoly {
    fn from(c: Scalar) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::int(c)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        if let Some(out) = mul_small_integers(self, rhs) {
            return out;
        }
        let mut acc: HashMap<Monomial, Scalar> = HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Scalar::zero) += ca * cb;
            }
        }
        LaurentPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

/// Product over machine integers when every coefficient is an integer that
/// fits; `None` sends the caller to the exact path.
fn mul_small_integers(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    fn small(p: &LaurentPoly) -> Option<Vec<(&Monomial, i64)>> {
        p.terms
            .iter()
            .map(|(m, c)| if c.denom().is_one() { c.numer().to_i64().map(|v| (m, v)) } else { None })
            .collect()
    }
    let (sa, sb) = (small(a)?, small(b)?);
    let mut acc: HashMap<Monomial, i128> = HashMap::with_capacity(sa.len() * sb.len());
    for &(ma, ca) in &sa {
        for &(mb, cb) in &sb {
            let slot = acc.entry(ma.mul(mb)).or_insert(0);
            *slot = slot.checked_add(ca as i128 * cb as i128)?;
        }
    }
    Some(LaurentPoly {
        terms: acc
            .into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|(m, c)| (m, Scalar::from_integer(c.into())))
            .collect(),
    })
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$f(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |a, b| &a * &b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> LaurentPoly {
        LaurentPoly::var(Var::new(s))
    }

    #[test]
    fn distributivity_with_inverse_monomial() {
        let u = Var::new("u");
        let p = &LaurentPoly::one() - &LaurentPoly::var_pow(u, -1);
        assert_eq!(&p * &v("u"), &v("u") - &LaurentPoly::one());
    }

    #[test]
    fn additive_identity() {
        let p = &v("z1") * &v("z2") - LaurentPoly::int(3);
        assert_eq!(&p + &LaurentPoly::zero(), p);
    }

    #[test]
    fn inverse_monomials_multiply_to_one() {
        let (u, w) = (Var::new("u"), Var::new("w"));
        let a = LaurentPoly::term(Monomial::from_pairs([(w, 1), (u, -1)]), Scalar::one());
        let b = LaurentPoly::term(Monomial::from_pairs([(u, 1), (w, -1)]), Scalar::one());
        assert!((&a * &b).is_one());
    }

    #[test]
    fn exact_div_difference_of_squares() {
        let (z1, z2) = (v("z1"), v("z2"));
        let a = &z1.pow(2) - &z2.pow(2);
        let q = a.exact_div(&(&z1 - &z2)).unwrap();
        assert_eq!(q, &z1 + &z2);
    }

    #[test]
    fn exact_div_two_by_two_vandermonde_quotient() {
        let (z1, z2) = (v("z1"), v("z2"));
        let one = LaurentPoly::one();
        let det = &z1 * &(&one - &z2) - &z2 * &(&one - &z1);
        assert!(det.exact_div(&(&z1 - &z2)).unwrap().is_one());
    }

    #[test]
    fn exact_div_rejects_non_multiple() {
        let (z1, z2) = (v("z1"), v("z2"));
        let a = &z1 + &LaurentPoly::one();
        assert_eq!(a.exact_div(&(&z1 - &z2)), Err(Error::InexactDivision));
    }

    #[test]
    fn exact_div_with_laurent_shift() {
        let u = Var::new("u");
        let ui = LaurentPoly::var_pow(u, -1);
        let b = &LaurentPoly::one() - &ui;
        let a = &b.pow(3) * &ui.pow(2);
        assert_eq!(a.exact_div(&b).unwrap(), &b.pow(2) * &ui.pow(2));
    }

    #[test]
    fn substitute_binomial_expansion() {
        let (z, u) = (Var::new("z"), Var::new("u"));
        let img = RatFunc::from(&LaurentPoly::one() - &LaurentPoly::var_pow(u, -1));
        let map = HashMap::from([(z, img)]);
        let out = v("z").pow(2).substitute(&map).unwrap();
        let ui = LaurentPoly::var_pow(u, -1);
        let expect = &(&LaurentPoly::one() - &ui.scale(&Scalar::from_integer(2.into()))) + &ui.pow(2);
        assert_eq!(out, RatFunc::from(expect));
    }

    #[test]
    fn evaluate_one_minus_inverse() {
        let u = Var::new("u");
        let p = &LaurentPoly::one() - &LaurentPoly::var_pow(u, -1);
        let val = p
            .evaluate(&HashMap::from([(u, Scalar::from_integer(2.into()))]))
            .unwrap();
        assert_eq!(val, Scalar::new(1.into(), 2.into()));
    }

    #[test]
    fn identity_substitution_is_noop() {
        let (z1, z2) = (Var::new("z1"), Var::new("z2"));
        let p = &(&v("z1").pow(3) * &LaurentPoly::var_pow(z2, -2)) + &LaurentPoly::int(5);
        let map = HashMap::from([(z1, RatFunc::from(v("z1"))), (z2, RatFunc::from(v("z2")))]);
        assert_eq!(p.substitute(&map).unwrap(), RatFunc::from(p.clone()));
    }

    #[test]
    fn pole_detected() {
        let u = Var::new("u");
        let p = LaurentPoly::var_pow(u, -1);
        let err = p.evaluate(&HashMap::from([(u, Scalar::zero())])).unwrap_err();
        assert!(matches!(err, Error::Pole(_)));
        let err = p
            .substitute(&HashMap::from([(u, RatFunc::from(LaurentPoly::zero()))]))
            .unwrap_err();
        assert!(matches!(err, Error::Pole(_)));
    }

    #[test]
    fn display_is_grlex_sorted() {
        let p = &(&v("b") + &v("a").pow(2)) - &LaurentPoly::int(1);
        assert_eq!(p.to_string(), "a^2 + b - 1");
    }
}
