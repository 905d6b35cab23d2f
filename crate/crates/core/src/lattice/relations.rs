use std::fmt;

use itertools::Itertools;

use crate::algebra::{self, LaurentPoly, RatFunc};
use crate::error::{Error, Result};
use crate::partitions::PositionSeq;

use super::rmatrix::{r_elem, SpectralParam};
use super::sector::{OpKind, OperatorWord, SectorVector};

/// Named exchange relations between monodromy entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `D(u1)B(u2) = B(u2)D(u1)/(1-u2/u1) + B(u1)D(u2)/(1-u1/u2)`
    DbExchange,
    /// `D(u1)B(u2) = D(u2)B(u1)`
    DbSwap,
    /// `B(u1)B(u2) = B(u2)B(u1)`
    BCommute,
    /// `D(u1)D(u2) = D(u2)D(u1)`
    DCommute,
    /// `∏_{j>k} D(u_j) ∏_{j≤k} B(u_j) = Σ_S ∏_{i∈S, j∉S} 1/(1-u_i/u_j) ∏_{i∈S} B(u_i) ∏_{j∉S} D(u_j)`
    MultipleDb { n: usize, k: usize },
    /// The RTT relation with auxiliary boundary `(ε_a, ε_b)` in and `(γ_a, γ_b)` out.
    Rtt { ea: u8, eb: u8, ga: u8, gb: u8 },
}

impl Relation {
    /// Number of spectral parameters the relation involves.
    pub fn arity(self) -> usize {
        match self {
            Relation::MultipleDb { n, .. } => n,
            _ => 2,
        }
    }

    pub fn all_rtt() -> Vec<Relation> {
        (0u8..16)
            .map(|i| Relation::Rtt { ea: i >> 3 & 1, eb: i >> 2 & 1, ga: i >> 1 & 1, gb: i & 1 })
            .collect()
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::DbExchange => f.write_str("db-exchange"),
            Relation::DbSwap => f.write_str("db-swap"),
            Relation::BCommute => f.write_str("b-commute"),
            Relation::DCommute => f.write_str("d-commute"),
            Relation::MultipleDb { n, k } => write!(f, "multiple-db(n={n},k={k})"),
            Relation::Rtt { ea, eb, ga, gb } => write!(f, "rtt({ea}{eb}->{ga}{gb})"),
        }
    }
}

pub type Terms = Vec<(RatFunc, OperatorWord)>;

/// Both sides of a relation as coefficient/word lists.
#[derive(Clone, Debug)]
pub struct RelationTerms {
    pub lhs: Terms,
    pub rhs: Terms,
}

fn word(ops: Vec<(OpKind, SpectralParam)>) -> OperatorWord {
    OperatorWord::new(ops).expect("nonempty word")
}

fn one() -> RatFunc {
    RatFunc::one()
}

/// `1 / (1 - a/b)`.
fn inv_one_minus_ratio(a: &SpectralParam, b: &SpectralParam) -> Result<RatFunc> {
    let d = &LaurentPoly::one() - &b.ratio_from(a);
    RatFunc::new(LaurentPoly::one(), d).map_err(|_| Error::NotDistinct(format!("{a} and {b}")))
}

pub fn relation_terms(rel: Relation, u: &[SpectralParam]) -> Result<RelationTerms> {
    if u.len() != rel.arity() {
        return Err(Error::Argument(format!("{rel} needs {} parameters", rel.arity())));
    }
    use OpKind::*;
    let p = |i: usize| u[i].clone();
    Ok(match rel {
        Relation::DbExchange => RelationTerms {
            lhs: vec![(one(), word(vec![(D, p(0)), (B, p(1))]))],
            rhs: vec![
                (inv_one_minus_ratio(&u[1], &u[0])?, word(vec![(B, p(1)), (D, p(0))])),
                (inv_one_minus_ratio(&u[0], &u[1])?, word(vec![(B, p(0)), (D, p(1))])),
            ],
        },
        Relation::DbSwap => RelationTerms {
            lhs: vec![(one(), word(vec![(D, p(0)), (B, p(1))]))],
            rhs: vec![(one(), word(vec![(D, p(1)), (B, p(0))]))],
        },
        Relation::BCommute => RelationTerms {
            lhs: vec![(one(), word(vec![(B, p(0)), (B, p(1))]))],
            rhs: vec![(one(), word(vec![(B, p(1)), (B, p(0))]))],
        },
        Relation::DCommute => RelationTerms {
            lhs: vec![(one(), word(vec![(D, p(0)), (D, p(1))]))],
            rhs: vec![(one(), word(vec![(D, p(1)), (D, p(0))]))],
        },
        Relation::MultipleDb { n, k } => {
            if k > n || n == 0 {
                return Err(Error::Argument(format!("need 0 ≤ k ≤ n and n ≥ 1, got n={n}, k={k}")));
            }
            let lhs_word: Vec<_> = (k..n).map(|j| (D, p(j))).chain((0..k).map(|j| (B, p(j)))).collect();
            let mut rhs = Vec::new();
            for s in (0..n).combinations(k) {
                let rest: Vec<usize> = (0..n).filter(|j| !s.contains(j)).collect();
                let mut c = one();
                for &i in &s {
                    for &j in &rest {
                        c = &c * &inv_one_minus_ratio(&u[i], &u[j])?;
                    }
                }
                let w: Vec<_> = s.iter().map(|&i| (B, p(i))).chain(rest.iter().map(|&j| (D, p(j)))).collect();
                rhs.push((c, word(w)));
            }
            RelationTerms { lhs: vec![(one(), word(lhs_word))], rhs }
        }
        Relation::Rtt { ea, eb, ga, gb } => {
            let mut lhs = Vec::new();
            let mut rhs = Vec::new();
            for (da, db) in [(0u8, 0u8), (0, 1), (1, 0), (1, 1)] {
                let cl = r_elem(da, db, ga, gb, &u[0], &u[1]);
                if !cl.is_zero() {
                    let w = vec![(OpKind::from_boundary(ea, da), p(0)), (OpKind::from_boundary(eb, db), p(1))];
                    lhs.push((RatFunc::from(cl), word(w)));
                }
                let cr = r_elem(ea, eb, da, db, &u[0], &u[1]);
                if !cr.is_zero() {
                    let w = vec![(OpKind::from_boundary(db, gb), p(1)), (OpKind::from_boundary(da, ga), p(0))];
                    rhs.push((RatFunc::from(cr), word(w)));
                }
            }
            RelationTerms { lhs, rhs }
        }
    })
}

/// `∏_{i<j} (u_j - u_i)`.
fn vandermonde(u: &[SpectralParam]) -> LaurentPoly {
    algebra::vandermonde(&u.iter().map(SpectralParam::as_poly).collect::<Vec<_>>())
}

fn clear<'a>(terms: &'a Terms, mult: &LaurentPoly) -> Result<Vec<(LaurentPoly, &'a OperatorWord)>> {
    terms
        .iter()
        .map(|(c, w)| Ok(((c * &RatFunc::from(mult.clone())).into_poly()?, w)))
        .collect()
}

fn apply_or_zero(v: &SectorVector, kind: OpKind, u: &SpectralParam) -> SectorVector {
    match v.apply(kind, u) {
        Ok(r) => r,
        Err(_) => SectorVector::zero(v.chain_length(), v.chain_length()),
    }
}

fn act(w: &OperatorWord, v: &SectorVector) -> SectorVector {
    let mut cur = v.clone();
    for (k, u) in w.ops().iter().rev() {
        if cur.is_zero() {
            break;
        }
        cur = apply_or_zero(&cur, *k, u);
    }
    cur
}

fn side_on(terms: &[(LaurentPoly, &OperatorWord)], ket: &SectorVector) -> Vec<(u64, LaurentPoly)> {
    let mut acc: std::collections::BTreeMap<u64, LaurentPoly> = Default::default();
    for (c, w) in terms {
        let v = act(w, ket);
        for (k, a) in v.masks() {
            let e = acc.entry(*k).or_insert_with(LaurentPoly::zero);
            *e += &(a * c);
        }
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// Compare both sides of `rel` on every basis state of a chain of `m` sites.
/// Coefficients are cleared by the Vandermonde product of the parameters
/// when they carry denominators. Returns the masks of failing input states.
pub fn commutation_failures(rel: Relation, m: usize, u: &[SpectralParam]) -> Result<Vec<u64>> {
    let terms = relation_terms(rel, u)?;
    let needs_clearing = terms.lhs.iter().chain(&terms.rhs).any(|(c, _)| c.as_poly().is_none());
    let mult = if needs_clearing { vandermonde(u) } else { LaurentPoly::one() };
    if mult.is_zero() {
        return Err(Error::NotDistinct("spectral parameters".into()));
    }
    let lhs = clear(&terms.lhs, &mult)?;
    let rhs = clear(&terms.rhs, &mult)?;
    let mut failures = Vec::new();
    for mask in 0u64..1 << m {
        let ket = SectorVector::basis(&PositionSeq::from_mask(mask, m)?);
        if side_on(&lhs, &ket) != side_on(&rhs, &ket) {
            failures.push(mask);
        }
    }
    Ok(failures)
}

/// Relation holds on every state of a chain of `m` sites, with symbolic
/// parameters `u1, …`.
pub fn check_commutation(rel: Relation, m: usize) -> Result<bool> {
    let u = SpectralParam::symbols("u", rel.arity());
    Ok(commutation_failures(rel, m, &u)?.is_empty())
}

/// Term lists equal as multisets (coefficients compared exactly, words literally).
pub fn same_terms(a: &Terms, b: &Terms) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    a.iter().all(|(ca, wa)| {
        let hit = b
            .iter()
            .enumerate()
            .position(|(i, (cb, wb))| !used[i] && wa == wb && ca == cb);
        hit.map(|i| used[i] = true).is_some()
    })
}

fn subsets(m: usize, count: usize) -> impl Iterator<Item = u64> {
    (0u64..1 << m).filter(move |x| x.count_ones() as usize == count)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LemmaReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl LemmaReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `D`-operator matrix elements on `m` sites equal `B`-operator matrix
/// elements on `m+n` sites with sites `m+1..m+n` filled in the final state.
pub fn check_d_layers_as_b(m: usize, u: &[SpectralParam]) -> Result<LemmaReport> {
    let n = u.len();
    let dword = super::sector::pf_word(super::sector::PfKind::U, 0, u)?;
    let bword = super::sector::pf_word(super::sector::PfKind::Z, 0, u)?;
    let tail: u64 = ((1u64 << n) - 1) << m;
    let mut rep = LemmaReport::default();
    for l in 0..=m {
        for xm in subsets(m, l) {
            let short = dword.act(&SectorVector::basis(&PositionSeq::from_mask(xm, m)?))?;
            let long = bword.act(&SectorVector::basis(&PositionSeq::from_mask(xm, m + n)?))?;
            for ym in subsets(m, l) {
                rep.checked += 1;
                if short.amplitude_mask(ym) != long.amplitude_mask(ym | tail) {
                    rep.failures.push(format!("m={m} n={n} x={xm:b} y={ym:b}"));
                }
            }
        }
    }
    Ok(rep)
}

/// Reversed mixed layers `D…D B…B` on `m` sites equal `B`-operator matrix
/// elements on `m+n-k` sites with sites `m+1..m+n-k` filled.
pub fn check_mixed_layers_as_b(m: usize, k: usize, u: &[SpectralParam]) -> Result<LemmaReport> {
    let n = u.len();
    if k > n {
        return Err(Error::Argument(format!("k = {k} exceeds n = {n}")));
    }
    let mixed = super::sector::pf_word(super::sector::PfKind::Zdb, k, u)?;
    let bword = super::sector::pf_word(super::sector::PfKind::Z, 0, u)?;
    let ext = m + n - k;
    let tail: u64 = ((1u64 << (n - k)) - 1) << m;
    let mut rep = LemmaReport::default();
    for l in 0..=m.saturating_sub(k) {
        if l + k > m {
            continue;
        }
        for xm in subsets(m, l) {
            let short = mixed.act(&SectorVector::basis(&PositionSeq::from_mask(xm, m)?))?;
            let long = bword.act(&SectorVector::basis(&PositionSeq::from_mask(xm, ext)?))?;
            for ym in subsets(m, l + k) {
                rep.checked += 1;
                if short.amplitude_mask(ym) != long.amplitude_mask(ym | tail) {
                    rep.failures.push(format!("m={m} n={n} k={k} x={xm:b} y={ym:b}"));
                }
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_relations_small_chains() {
        for m in 1..=3 {
            for rel in [Relation::DbExchange, Relation::DbSwap, Relation::BCommute, Relation::DCommute] {
                assert!(check_commutation(rel, m).unwrap(), "{rel} m={m}");
            }
        }
    }

    #[test]
    fn rtt_reproduces_exchange_case() {
        // ε_a = ε_b = γ_a = 1, γ_b = 0
        let u = SpectralParam::symbols("u", 2);
        let t = relation_terms(Relation::Rtt { ea: 1, eb: 1, ga: 1, gb: 0 }, &u).unwrap();
        assert_eq!(t.lhs.len(), 2);
        assert_eq!(t.rhs.len(), 1);
        assert_eq!(t.rhs[0].1.to_string(), "B(u2)D(u1)");
        for m in 1..=3 {
            for rel in Relation::all_rtt() {
                assert!(check_commutation(rel, m).unwrap(), "{rel} m={m}");
            }
        }
    }

    #[test]
    fn multiple_relation_single_swap_is_exchange() {
        let u = SpectralParam::symbols("u", 2);
        let multi = relation_terms(Relation::MultipleDb { n: 2, k: 1 }, &u).unwrap();
        let swapped = [u[1].clone(), u[0].clone()];
        let ex = relation_terms(Relation::DbExchange, &swapped).unwrap();
        assert!(same_terms(&multi.lhs, &ex.lhs));
        assert!(same_terms(&multi.rhs, &ex.rhs));
        let plain = relation_terms(Relation::DbExchange, &u).unwrap();
        assert!(!same_terms(&multi.lhs, &plain.lhs));
    }

    #[test]
    fn broken_exchange_detected() {
        // Dropping one term must fail somewhere.
        let u = SpectralParam::symbols("u", 2);
        let mut t = relation_terms(Relation::DbExchange, &u).unwrap();
        t.rhs.pop();
        let mult = vandermonde(&u);
        let lhs = clear(&t.lhs, &mult).unwrap();
        let rhs = clear(&t.rhs, &mult).unwrap();
        let ket = SectorVector::vacuum(2);
        assert_ne!(side_on(&lhs, &ket), side_on(&rhs, &ket));
    }

    #[test]
    fn lemmas_small() {
        let u = SpectralParam::symbols("u", 2);
        let rep = check_d_layers_as_b(3, &u).unwrap();
        assert!(rep.ok(), "{:?}", rep.failures);
        for k in 0..=2 {
            let rep = check_mixed_layers_as_b(3, k, &u).unwrap();
            assert!(rep.ok(), "{:?}", rep.failures);
            assert!(rep.checked > 0);
        }
    }
}
