use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::LaurentPoly;
use crate::error::{Error, Result};
use crate::partitions::PositionSeq;

use super::rmatrix::SpectralParam;

/// Monodromy-matrix entry, named by its auxiliary boundary (in, out).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OpKind {
    A,
    B,
    C,
    D,
}

impl OpKind {
    pub fn from_boundary(aux_in: u8, aux_out: u8) -> OpKind {
        match (aux_in, aux_out) {
            (0, 0) => OpKind::A,
            (1, 0) => OpKind::B,
            (0, 1) => OpKind::C,
            _ => OpKind::D,
        }
    }

    pub fn aux_in(self) -> u8 {
        matches!(self, OpKind::B | OpKind::D) as u8
    }

    pub fn aux_out(self) -> u8 {
        matches!(self, OpKind::C | OpKind::D) as u8
    }

    /// Change in particle number.
    pub fn charge(self) -> i32 {
        self.aux_in() as i32 - self.aux_out() as i32
    }
}

impl fmt::Display for OpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// One row sweep: every output configuration reachable from `input` with
/// the given auxiliary boundary, as `(output mask, #u^{-1} factors, #(1-u^{-1}) factors)`.
pub fn sweep_paths(m: usize, input: u64, kind: OpKind) -> Vec<(u64, u32, u32)> {
    let mut out = Vec::new();
    let target = kind.aux_out();
    let mut stack = vec![(0usize, kind.aux_in(), 0u64, 0u32, 0u32)];
    while let Some((site, aux, mask, a, b)) = stack.pop() {
        if site == m {
            if aux == target {
                out.push((mask, a, b));
            }
            continue;
        }
        let eps = (input >> site & 1) as u8;
        match (aux, eps) {
            (0, 0) => stack.push((site + 1, 0, mask, a, b)),
            (1, 1) => stack.push((site + 1, 1, mask | 1 << site, a, b)),
            (0, 1) => stack.push((site + 1, 1, mask, a + 1, b)),
            _ => {
                stack.push((site + 1, 0, mask | 1 << site, a, b));
                stack.push((site + 1, 1, mask, a, b + 1));
            }
        }
    }
    out.sort_unstable();
    out
}

/// `u^{-a} (1 - u^{-1})^b` with cached powers.
struct Weights {
    inv: Vec<LaurentPoly>,
    om: Vec<LaurentPoly>,
}

impl Weights {
    fn new(u: &SpectralParam, m: usize) -> Weights {
        let ui = u.inv_poly();
        let om1 = &LaurentPoly::one() - &ui;
        let mut inv = vec![LaurentPoly::one()];
        let mut om = vec![LaurentPoly::one()];
        for i in 1..=m {
            inv.push(&inv[i - 1] * &ui);
            om.push(&om[i - 1] * &om1);
        }
        Weights { inv, om }
    }

    fn get(&self, a: u32, b: u32) -> LaurentPoly {
        &self.inv[a as usize] * &self.om[b as usize]
    }
}

/// Vector in a fixed particle-number sector of a chain, keyed by occupation mask.
#[derive(Clone, PartialEq, Eq)]
pub struct SectorVector {
    m: usize,
    count: usize,
    amps: BTreeMap<u64, LaurentPoly>,
}

impl SectorVector {
    pub fn zero(m: usize, count: usize) -> SectorVector {
        SectorVector { m, count, amps: BTreeMap::new() }
    }

    pub fn basis(x: &PositionSeq) -> SectorVector {
        let mut v = SectorVector::zero(x.chain_length(), x.count());
        v.amps.insert(x.mask(), LaurentPoly::one());
        v
    }

    pub fn vacuum(m: usize) -> SectorVector {
        SectorVector::basis(&PositionSeq::new(Vec::new(), m).expect("empty sequence"))
    }

    pub fn chain_length(&self) -> usize {
        self.m
    }

    pub fn particle_count(&self) -> usize {
        self.count
    }

    pub fn is_zero(&self) -> bool {
        self.amps.is_empty()
    }

    pub fn amplitude(&self, y: &PositionSeq) -> LaurentPoly {
        if y.chain_length() != self.m || y.count() != self.count {
            return LaurentPoly::zero();
        }
        self.amplitude_mask(y.mask())
    }

    pub fn amplitude_mask(&self, mask: u64) -> LaurentPoly {
        self.amps.get(&mask).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    /// Nonzero amplitudes in increasing mask order.
    pub fn entries(&self) -> impl Iterator<Item = (PositionSeq, &LaurentPoly)> {
        self.amps
            .iter()
            .map(|(&k, v)| (PositionSeq::from_mask(k, self.m).expect("mask within chain"), v))
    }

    pub fn masks(&self) -> impl Iterator<Item = (&u64, &LaurentPoly)> {
        self.amps.iter()
    }

    pub fn add_scaled(&mut self, other: &SectorVector, c: &LaurentPoly) {
        debug_assert_eq!((self.m, self.count), (other.m, other.count));
        for (k, v) in &other.amps {
            let add = v * c;
            let slot = self.amps.entry(*k).or_insert_with(LaurentPoly::zero);
            *slot += &add;
            if slot.is_zero() {
                self.amps.remove(k);
            }
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> SectorVector {
        let mut out = SectorVector::zero(self.m, self.count);
        out.add_scaled(self, c);
        out
    }

    /// Apply one monodromy entry with `w = 1`.
    pub fn apply(&self, kind: OpKind, u: &SpectralParam) -> Result<SectorVector> {
        let count = self.count as i64 + kind.charge() as i64;
        if count > self.m as i64 {
            return Err(Error::SectorOverflow(self.m));
        }
        if count < 0 {
            return Ok(SectorVector::zero(self.m, 0));
        }
        let w = Weights::new(u, self.m);
        let mut out = SectorVector::zero(self.m, count as usize);
        for (&mask, c) in &self.amps {
            for (omask, a, b) in sweep_paths(self.m, mask, kind) {
                let add = c * &w.get(a, b);
                let slot = out.amps.entry(omask).or_insert_with(LaurentPoly::zero);
                *slot += &add;
                if slot.is_zero() {
                    out.amps.remove(&omask);
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for SectorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.amps.iter().map(|(k, v)| (format!("{k:0w$b}", w = self.m), v)))
            .finish()
    }
}

pub fn apply_operator(v: &SectorVector, kind: OpKind, u: &SpectralParam) -> Result<SectorVector> {
    v.apply(kind, u)
}

/// Operator product written left to right; the rightmost factor acts first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorWord(Vec<(OpKind, SpectralParam)>);

impl OperatorWord {
    pub fn new(ops: Vec<(OpKind, SpectralParam)>) -> Result<OperatorWord> {
        if ops.is_empty() {
            return Err(Error::Argument("operator word must be nonempty".into()));
        }
        Ok(OperatorWord(ops))
    }

    pub fn ops(&self) -> &[(OpKind, SpectralParam)] {
        &self.0
    }

    pub fn charge(&self) -> i32 {
        self.0.iter().map(|(k, _)| k.charge()).sum()
    }

    pub fn act(&self, v: &SectorVector) -> Result<SectorVector> {
        let mut cur = v.clone();
        for (k, u) in self.0.iter().rev() {
            cur = cur.apply(*k, u)?;
        }
        Ok(cur)
    }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, u) in &self.0 {
            write!(f, "{k}({u})")?;
        }
        Ok(())
    }
}

/// `⟨bra| word |ket⟩`; zero when the particle counts cannot match, including
/// through a full intermediate sector.
pub fn matrix_element(bra: &PositionSeq, word: &OperatorWord, ket: &PositionSeq) -> Result<LaurentPoly> {
    if bra.chain_length() != ket.chain_length() {
        return Err(Error::Argument("bra and ket live on different chains".into()));
    }
    if bra.count() as i64 != ket.count() as i64 + word.charge() as i64 {
        return Ok(LaurentPoly::zero());
    }
    match word.act(&SectorVector::basis(ket)) {
        Ok(v) => Ok(v.amplitude(bra)),
        // an intermediate state would need more particles than sites
        Err(Error::SectorOverflow(_)) => Ok(LaurentPoly::zero()),
        Err(e) => Err(e),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PfKind {
    /// `⟨y| B(u_1)…B(u_n) |x⟩`
    Z,
    /// `⟨y| D(u_1)…D(u_n) |x⟩`
    U,
    /// `⟨y| B(u_1)…B(u_k) D(u_{k+1})…D(u_n) |x⟩`
    Zbd,
    /// `⟨y| D(u_n)…D(u_{k+1}) B(u_k)…B(u_1) |x⟩`
    Zdb,
}

/// The operator word of a partition-function family.
pub fn pf_word(kind: PfKind, k: usize, params: &[SpectralParam]) -> Result<OperatorWord> {
    let n = params.len();
    if matches!(kind, PfKind::Zbd | PfKind::Zdb) && k > n {
        return Err(Error::Argument(format!("k = {k} exceeds n = {n}")));
    }
    let p = |i: usize| params[i].clone();
    let ops = match kind {
        PfKind::Z => (0..n).map(|i| (OpKind::B, p(i))).collect(),
        PfKind::U => (0..n).map(|i| (OpKind::D, p(i))).collect(),
        PfKind::Zbd => (0..k)
            .map(|i| (OpKind::B, p(i)))
            .chain((k..n).map(|i| (OpKind::D, p(i))))
            .collect(),
        PfKind::Zdb => (k..n)
            .rev()
            .map(|i| (OpKind::D, p(i)))
            .chain((0..k).rev().map(|i| (OpKind::B, p(i))))
            .collect(),
    };
    OperatorWord::new(ops)
}

/// Partition function of the given family on a chain of `m` sites.
pub fn partition_function(
    kind: PfKind,
    m: usize,
    k: usize,
    x: &PositionSeq,
    y: &PositionSeq,
    params: &[SpectralParam],
) -> Result<LaurentPoly> {
    let n = params.len();
    let l = x.count();
    let expect = match kind {
        PfKind::Z => l + n,
        PfKind::U => l,
        PfKind::Zbd | PfKind::Zdb => l + k,
    };
    if y.count() != expect {
        return Err(Error::Argument(format!(
            "{kind:?} needs {expect} final positions, got {}",
            y.count()
        )));
    }
    if x.chain_length() != m || y.chain_length() != m {
        return Err(Error::Argument(format!("configurations must live on {m} sites")));
    }
    matrix_element(y, &pf_word(kind, k, params)?, x)
}
