use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{LaurentPoly, Scalar, Var};
use crate::error::{Error, Result};

/// Spectral parameter: a formal symbol or a nonzero exact rational.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum SpectralParam {
    Sym(Var),
    Value(Scalar),
}

impl SpectralParam {
    pub fn sym(name: &str) -> SpectralParam {
        SpectralParam::Sym(Var::new(name))
    }

    pub fn value(x: Scalar) -> Result<SpectralParam> {
        if x.is_zero() {
            return Err(Error::Domain("spectral parameter must be nonzero".into()));
        }
        Ok(SpectralParam::Value(x))
    }

    /// `u_1, …, u_n` as symbols with the given prefix.
    pub fn symbols(prefix: &str, n: usize) -> Vec<SpectralParam> {
        Var::indexed(prefix, n).into_iter().map(SpectralParam::Sym).collect()
    }

    pub fn as_poly(&self) -> LaurentPoly {
        match self {
            SpectralParam::Sym(v) => LaurentPoly::var(*v),
            SpectralParam::Value(x) => LaurentPoly::constant(x.clone()),
        }
    }

    pub fn inv_poly(&self) -> LaurentPoly {
        match self {
            SpectralParam::Sym(v) => LaurentPoly::var_pow(*v, -1),
            SpectralParam::Value(x) => LaurentPoly::constant(Scalar::one() / x),
        }
    }

    /// `w / u` with `self = u`.
    pub fn ratio_from(&self, w: &SpectralParam) -> LaurentPoly {
        &w.as_poly() * &self.inv_poly()
    }
}

impl fmt::Display for SpectralParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralParam::Sym(v) => write!(f, "{v}"),
            SpectralParam::Value(x) => write!(f, "{x}"),
        }
    }
}

impl fmt::Debug for SpectralParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `[R(u,w)]_{ε1 ε2}^{δ1 δ2}`: inputs `ε`, outputs `δ`, first slot auxiliary.
pub fn r_elem(e1: u8, e2: u8, d1: u8, d2: u8, u: &SpectralParam, w: &SpectralParam) -> LaurentPoly {
    match (e1, e2, d1, d2) {
        (0, 0, 0, 0) | (1, 1, 1, 1) | (1, 0, 0, 1) => LaurentPoly::one(),
        (0, 1, 1, 0) => u.ratio_from(w),
        (1, 0, 1, 0) => &LaurentPoly::one() - &u.ratio_from(w),
        _ => LaurentPoly::zero(),
    }
}

/// Signature of an R-matrix element function, used to run the Yang–Baxter
/// check against alternative (e.g. deliberately broken) matrices.
pub type RElemFn<'a> = dyn Fn(u8, u8, u8, u8, &SpectralParam, &SpectralParam) -> LaurentPoly + Sync + 'a;

/// Component identities of `R12(u,v) R13(u,w) R23(v,w) = R23(v,w) R13(u,w) R12(u,v)`
/// that fail, as `[ε1, ε2, ε3, δ1, δ2, δ3]`.
pub fn yang_baxter_failures(
    r: &RElemFn<'_>,
    u: &SpectralParam,
    v: &SpectralParam,
    w: &SpectralParam,
) -> Vec<[u8; 6]> {
    let mut failures = Vec::new();
    for idx in 0u8..64 {
        let b = |k: u8| (idx >> (5 - k)) & 1;
        let (e1, e2, e3, d1, d2, d3) = (b(0), b(1), b(2), b(3), b(4), b(5));
        let mut lhs = LaurentPoly::zero();
        let mut rhs = LaurentPoly::zero();
        for g in 0u8..8 {
            let (g1, g2, g3) = (g >> 2 & 1, g >> 1 & 1, g & 1);
            let l = &(&r(g3, g1, d1, d2, u, v) * &r(e1, g2, g3, d3, u, w)) * &r(e2, e3, g1, g2, v, w);
            lhs += &l;
            let rr = &(&r(g2, g3, d2, d3, v, w) * &r(g1, e3, d1, g3, u, w)) * &r(e1, e2, g1, g2, u, v);
            rhs += &rr;
        }
        if lhs != rhs {
            failures.push([e1, e2, e3, d1, d2, d3]);
        }
    }
    failures
}

/// All 64 component identities of the Yang–Baxter relation hold.
pub fn check_yang_baxter(u: &SpectralParam, v: &SpectralParam, w: &SpectralParam) -> bool {
    yang_baxter_failures(&r_elem, u, v, w).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entries() {
        let (u, w) = (SpectralParam::sym("u"), SpectralParam::sym("w"));
        let wu = &w.as_poly() * &u.inv_poly();
        assert_eq!(r_elem(0, 1, 1, 0, &u, &w), wu);
        assert_eq!(r_elem(1, 0, 1, 0, &u, &w), &LaurentPoly::one() - &wu);
        assert!(r_elem(0, 0, 1, 1, &u, &w).is_zero());
        for idx in 0u8..16 {
            let (e1, e2, d1, d2) = (idx >> 3 & 1, idx >> 2 & 1, idx >> 1 & 1, idx & 1);
            if e1 + e2 != d1 + d2 {
                assert!(r_elem(e1, e2, d1, d2, &u, &w).is_zero());
            }
        }
    }

    #[test]
    fn yang_baxter_symbolic() {
        let p = SpectralParam::symbols("ybu", 3);
        assert!(check_yang_baxter(&p[0], &p[1], &p[2]));
    }

    #[test]
    fn perturbed_matrix_fails() {
        let broken = |e1, e2, d1, d2, u: &SpectralParam, w: &SpectralParam| {
            if (e1, e2, d1, d2) == (1, 0, 1, 0) {
                &LaurentPoly::one() - &(&u.ratio_from(w) * &LaurentPoly::int(2))
            } else {
                r_elem(e1, e2, d1, d2, u, w)
            }
        };
        let p = SpectralParam::symbols("ybp", 3);
        assert!(!yang_baxter_failures(&broken, &p[0], &p[1], &p[2]).is_empty());
    }
}
