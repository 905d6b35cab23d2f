use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::One;

use super::laurent::LaurentPoly;
use super::Scalar;
use crate::error::{Error, Result};

/// Quotient of two Laurent polynomials.
///
/// Kept lightly normalized: monomial factors are cleared from the
/// denominator, exact quotients collapse to polynomials and the denominator
/// is made monic. Equality is decided by cross-multiplication.
#[derive(Clone)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc::normalized(num, den))
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> RatFunc {
        if num.is_zero() {
            return RatFunc::zero();
        }
        if let Some((m, c)) = den.as_term() {
            let inv = Scalar::one() / c;
            return RatFunc {
                num: num.mul_monomial(&m.inverse()).scale(&inv),
                den: LaurentPoly::one(),
            };
        }
        if let Ok(q) = num.exact_div(&den) {
            return RatFunc { num: q, den: LaurentPoly::one() };
        }
        let content = den.monomial_content().inverse();
        let lc = den.leading_term().map(|(_, c)| Scalar::one() / c).expect("nonzero");
        RatFunc {
            num: num.mul_monomial(&content).scale(&lc),
            den: den.mul_monomial(&content).scale(&lc),
        }
    }

    pub fn zero() -> RatFunc {
        RatFunc::from(LaurentPoly::zero())
    }

    pub fn one() -> RatFunc {
        RatFunc::from(LaurentPoly::one())
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial value when the denominator has been cleared.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    /// Reduce to a Laurent polynomial; fails when the fraction is not one.
    pub fn into_poly(self) -> Result<LaurentPoly> {
        if self.den.is_one() {
            Ok(self.num)
        } else {
            self.num.exact_div(&self.den)
        }
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        self.as_poly().and_then(LaurentPoly::as_constant)
    }

    pub fn recip(&self) -> Result<RatFunc> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: u32) -> RatFunc {
        RatFunc::normalized(self.num.pow(k), self.den.pow(k))
    }

    /// Integer power; negative exponents invert first.
    pub fn pow_i(&self, k: i32) -> Result<RatFunc> {
        if k >= 0 {
            Ok(self.pow(k as u32))
        } else {
            Ok(self.recip()?.pow(k.unsigned_abs()))
        }
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc::normalized(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn scale(&self, c: &Scalar) -> RatFunc {
        RatFunc::normalized(self.num.scale(c), self.den.clone())
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc { num: p, den: LaurentPoly::one() }
    }
}

impl From<Scalar> for RatFunc {
    fn from(c: Scalar) -> Self {
        RatFunc::from(LaurentPoly::constant(c))
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &RatFunc) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFunc {}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::normalized(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::normalized(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; use [`RatFunc::checked_div`] otherwise.
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $f(self, rhs: RatFunc) -> RatFunc {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $f(self, rhs: &RatFunc) -> RatFunc {
                (&self).$f(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl std::iter::Sum for RatFunc {
    fn sum<I: Iterator<Item = RatFunc>>(iter: I) -> Self {
        iter.fold(RatFunc::zero(), |a, b| &a + &b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Var;

    #[test]
    fn exchange_coefficients_sum_to_one() {
        // 1/(1 - b/a) + 1/(1 - a/b) = 1
        let (a, b) = (Var::new("a"), Var::new("b"));
        let one = LaurentPoly::one();
        let ba = &LaurentPoly::var(b) * &LaurentPoly::var_pow(a, -1);
        let ab = &LaurentPoly::var(a) * &LaurentPoly::var_pow(b, -1);
        let x = RatFunc::new(one.clone(), &one - &ba).unwrap();
        let y = RatFunc::new(one.clone(), &one - &ab).unwrap();
        let s = &x + &y;
        assert_eq!(s, RatFunc::one());
        assert!(s.as_poly().is_some_and(LaurentPoly::is_one));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RatFunc::new(LaurentPoly::one(), LaurentPoly::zero()).is_err());
    }

    #[test]
    fn cross_multiplied_equality() {
        let z = LaurentPoly::var(Var::new("z"));
        let one = LaurentPoly::one();
        let p = RatFunc::new(&z * &(&one + &z), &one + &z.pow(2)).unwrap();
        let q = RatFunc::new((&z * &(&one + &z)).scale(&Scalar::from_integer(2.into())), (&one + &z.pow(2)).scale(&Scalar::from_integer(2.into()))).unwrap();
        assert_eq!(p, q);
    }
}
