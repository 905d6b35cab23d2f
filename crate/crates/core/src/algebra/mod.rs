//! Exact arithmetic: Laurent polynomials and rational functions over the
//! rationals, matrices and symmetric-function primitives.

pub mod laurent;
pub mod matrix;
pub mod monomial;
pub mod ratfunc;
pub mod symbol;
pub mod symmetric;

pub use laurent::LaurentPoly;
pub use matrix::{determinant, RingMatrix};
pub use monomial::Monomial;
pub use ratfunc::RatFunc;
pub use symbol::Var;
pub use symmetric::{complete, elementary, gen_binomial, h_twisted, split_cofactor, symmetric_poly, vandermonde, SymKind};

pub type Scalar = num_rational::BigRational;

/// Integer as an exact scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(n.into())
}

/// `p/q` as an exact scalar. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(p.into(), q.into())
}
