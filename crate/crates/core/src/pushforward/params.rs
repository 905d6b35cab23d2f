use std::collections::HashMap;
use std::fmt;

use rand::Rng;

use crate::algebra::{elementary, LaurentPoly, Scalar, Var};
use crate::error::{Error, Result};
use crate::lattice::SpectralParam;
use crate::partitions::{partition_to_positions, positions_to_partition, Partition, PositionSeq};

/// Data of one instance of the Grassmann-bundle pushforward identity:
/// `k`-planes in a rank `n` bundle, `ℓ` initial particles on `m` sites,
/// `μ` read from the initial positions and `λ` from the final ones.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PushforwardParams {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub lambda: Partition,
    pub mu: Partition,
}

impl PushforwardParams {
    pub fn new(m: usize, n: usize, k: usize, l: usize, lambda: Partition, mu: Partition) -> Result<Self> {
        if n == 0 {
            return Err(Error::Argument("bundle rank n must be positive".into()));
        }
        if k > n {
            return Err(Error::Argument(format!("k = {k} exceeds n = {n}")));
        }
        if k > m || l > m - k {
            return Err(Error::Argument(format!("need ℓ ≤ m - k, got m = {m}, k = {k}, ℓ = {l}")));
        }
        if !mu.fits_in(l, (m - l) as u32) {
            return Err(Error::BoxOverflow(format!("μ = {mu} with {l} particles on {m} sites")));
        }
        if !lambda.fits_in(l + k, (m - l - k) as u32) {
            return Err(Error::BoxOverflow(format!("λ = {lambda} with {} particles on {m} sites", l + k)));
        }
        Ok(PushforwardParams { m, n, k, l, lambda, mu })
    }

    /// Parameters read off initial positions `x` and final positions `y`.
    pub fn from_positions(n: usize, x: &PositionSeq, y: &PositionSeq) -> Result<Self> {
        let m = x.chain_length();
        if y.chain_length() != m {
            return Err(Error::Argument("x and y live on different chains".into()));
        }
        let l = x.count();
        let k = y
            .count()
            .checked_sub(l)
            .ok_or_else(|| Error::Argument("y has fewer particles than x".into()))?;
        PushforwardParams::new(m, n, k, l, positions_to_partition(y), positions_to_partition(x))
    }

    /// Initial and final positions `(x, y)`.
    pub fn positions(&self) -> (PositionSeq, PositionSeq) {
        let x = partition_to_positions(&self.mu, self.l, self.m).expect("validated");
        let y = partition_to_positions(&self.lambda, self.l + self.k, self.m).expect("validated");
        (x, y)
    }

    /// Every valid parameter tuple with `m ∈ ms`, `n ∈ ns`, `k ≤ k_max`, `ℓ ≤ l_max`.
    pub fn sweep(
        ms: impl IntoIterator<Item = usize>,
        ns: impl IntoIterator<Item = usize> + Clone,
        k_max: usize,
        l_max: usize,
    ) -> Vec<PushforwardParams> {
        let mut out = Vec::new();
        for m in ms {
            for n in ns.clone() {
                if n == 0 {
                    continue;
                }
                for k in 0..=n.min(k_max).min(m) {
                    for l in 0..=(m - k).min(l_max) {
                        let lams = crate::partitions::enumerate_in_box(l + k, (m - l - k) as u32);
                        let mus = crate::partitions::enumerate_in_box(l, (m - l) as u32);
                        for lam in &lams {
                            for mu in &mus {
                                out.push(PushforwardParams {
                                    m,
                                    n,
                                    k,
                                    l,
                                    lambda: lam.clone(),
                                    mu: mu.clone(),
                                });
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for PushforwardParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "m={} n={} k={} l={} lambda={} mu={}",
            self.m, self.n, self.k, self.l, self.lambda, self.mu
        )
    }
}

/// A class `f(σ; ω)` given as a Laurent polynomial, symmetric in each of
/// the two root sets separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrothClassExpr {
    poly: LaurentPoly,
    sigma: Vec<Var>,
    omega: Vec<Var>,
}

impl GrothClassExpr {
    pub fn new(poly: LaurentPoly, sigma: Vec<Var>, omega: Vec<Var>) -> Result<Self> {
        let mut all = sigma.clone();
        all.extend(&omega);
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != all.len() {
            return Err(Error::Argument("σ and ω roots must be distinct variables".into()));
        }
        for roots in [&sigma, &omega] {
            for w in roots.windows(2) {
                let swap = HashMap::from([(w[0], w[1]), (w[1], w[0])]);
                if poly.rename(&swap) != poly {
                    return Err(Error::Domain(format!("class is not symmetric under {} <-> {}", w[0], w[1])));
                }
            }
        }
        Ok(GrothClassExpr { poly, sigma, omega })
    }

    /// Default root names `s1..sk` and `w1..w_{n-k}`.
    pub fn standard_roots(k: usize, n: usize) -> (Vec<Var>, Vec<Var>) {
        (Var::indexed("s", k), Var::indexed("w", n - k))
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.poly
    }

    pub fn sigma(&self) -> &[Var] {
        &self.sigma
    }

    pub fn omega(&self) -> &[Var] {
        &self.omega
    }

    pub fn k(&self) -> usize {
        self.sigma.len()
    }

    pub fn n(&self) -> usize {
        self.sigma.len() + self.omega.len()
    }

    /// `f(a; b)` with `σ_i ↦ a_i`, `ω_j ↦ b_j`.
    pub fn evaluate_at(&self, a: &[LaurentPoly], b: &[LaurentPoly]) -> Result<LaurentPoly> {
        if a.len() != self.sigma.len() || b.len() != self.omega.len() {
            return Err(Error::Argument("wrong number of roots".into()));
        }
        let map: HashMap<Var, LaurentPoly> = self
            .sigma
            .iter()
            .zip(a)
            .chain(self.omega.iter().zip(b))
            .map(|(&v, p)| (v, p.clone()))
            .collect();
        self.poly.substitute_laurent(&map)
    }
}

impl fmt::Display for GrothClassExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.poly, f)
    }
}

/// Pairwise distinct Grothendieck roots of the base bundle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaAssignment(Vec<SpectralParam>);

impl AlphaAssignment {
    pub fn new(values: Vec<SpectralParam>) -> Result<Self> {
        for j in 0..values.len() {
            for i in 0..j {
                if values[i] == values[j] {
                    return Err(Error::NotDistinct(format!("root {} repeats at positions {} and {}", values[i], i + 1, j + 1)));
                }
            }
        }
        Ok(AlphaAssignment(values))
    }

    pub fn symbols(prefix: &str, n: usize) -> Self {
        AlphaAssignment(SpectralParam::symbols(prefix, n))
    }

    pub fn rationals(values: Vec<Scalar>) -> Result<Self> {
        AlphaAssignment::new(values.into_iter().map(SpectralParam::value).collect::<Result<_>>()?)
    }

    pub fn ints(values: &[i64]) -> Result<Self> {
        AlphaAssignment::rationals(values.iter().map(|&v| crate::algebra::int(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn params(&self) -> &[SpectralParam] {
        &self.0
    }

    pub fn polys(&self) -> Vec<LaurentPoly> {
        self.0.iter().map(SpectralParam::as_poly).collect()
    }

    /// The values when every root is a rational number.
    pub fn as_rationals(&self) -> Option<Vec<Scalar>> {
        self.0
            .iter()
            .map(|p| match p {
                SpectralParam::Value(x) => Some(x.clone()),
                SpectralParam::Sym(_) => None,
            })
            .collect()
    }
}

impl fmt::Display for AlphaAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `n` distinct rationals `p/q` with `1 ≤ p, q ≤ 50`, none equal to 1.
pub fn sample_alpha<R: Rng + ?Sized>(n: usize, rng: &mut R) -> AlphaAssignment {
    let mut vals: Vec<Scalar> = Vec::with_capacity(n);
    while vals.len() < n {
        let p: i64 = rng.random_range(1..=50);
        let q: i64 = rng.random_range(1..=50);
        if p == q {
            continue;
        }
        let x = crate::algebra::ratio(p, q);
        if !vals.contains(&x) {
            vals.push(x);
        }
    }
    AlphaAssignment::rationals(vals).expect("distinct and nonzero")
}

/// A random class built from elementary symmetric functions of each root
/// set, with top-degree ones also allowed to negative powers.
pub fn random_class<R: Rng + ?Sized>(k: usize, n: usize, rng: &mut R) -> GrothClassExpr {
    let (sigma, omega) = GrothClassExpr::standard_roots(k, n);
    let mut poly = LaurentPoly::zero();
    for _ in 0..rng.random_range(1..=3) {
        let mut c: i64 = 0;
        while c == 0 {
            c = rng.random_range(-3..=3);
        }
        let mut term = LaurentPoly::int(c);
        for roots in [&sigma, &omega] {
            let r = roots.len();
            term = &term * &elementary(roots, rng.random_range(0..=r as i64));
            if r > 0 {
                let top = elementary(roots, r as i64);
                term = &term * &top.pow_i(rng.random_range(-1..=1)).expect("monomial is a unit");
            }
        }
        poly += &term;
    }
    GrothClassExpr::new(poly, sigma, omega).expect("symmetric by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn positions_roundtrip() {
        let p = PushforwardParams::new(4, 3, 1, 1, "2,1".parse().unwrap(), "1".parse().unwrap()).unwrap();
        let (x, y) = p.positions();
        assert_eq!(PushforwardParams::from_positions(3, &x, &y).unwrap(), p);
    }

    #[test]
    fn invalid_params_rejected() {
        let e = Partition::empty();
        assert!(PushforwardParams::new(2, 1, 2, 0, e.clone(), e.clone()).is_err());
        assert!(PushforwardParams::new(2, 2, 1, 2, e.clone(), e.clone()).is_err());
        assert!(PushforwardParams::new(2, 2, 1, 0, "2".parse().unwrap(), e.clone()).is_err());
        assert!(PushforwardParams::new(2, 0, 0, 0, e.clone(), e).is_err());
    }

    #[test]
    fn repeated_roots_rejected() {
        assert!(matches!(AlphaAssignment::ints(&[2, 3, 2]), Err(Error::NotDistinct(_))));
        assert!(AlphaAssignment::ints(&[0, 3]).is_err());
    }

    #[test]
    fn asymmetric_class_rejected() {
        let (s, w) = GrothClassExpr::standard_roots(2, 2);
        assert!(GrothClassExpr::new(LaurentPoly::var(s[0]), s.clone(), w.clone()).is_err());
        assert!(GrothClassExpr::new(&LaurentPoly::var(s[0]) + &LaurentPoly::var(s[1]), s, w).is_ok());
    }

    #[test]
    fn sampled_roots_distinct_and_not_one() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 1..6 {
            let a = sample_alpha(n, &mut rng).as_rationals().unwrap();
            assert!(a.iter().all(|x| *x != crate::algebra::int(1)));
            assert_eq!(AlphaAssignment::rationals(a).unwrap().len(), n);
        }
    }
}
