//! Partitions, skew-shape statistics and the dictionary between partitions
//! and particle positions on a chain.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive parts; trailing zeros are dropped,
/// so the empty list is the empty partition φ.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: impl IntoIterator<Item = u32>) -> Result<Partition> {
        let mut parts: Vec<u32> = parts.into_iter().collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    /// Rectangle `width^rows`.
    pub fn rect(rows: usize, width: u32) -> Partition {
        if width == 0 {
            return Partition::empty();
        }
        Partition(vec![width; rows])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Size `|λ|`.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// One-based part `λ_j`, zero beyond the length.
    pub fn part(&self, j: usize) -> u32 {
        if j == 0 {
            return u32::MAX;
        }
        self.0.get(j - 1).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u32 {
        self.part(1)
    }

    /// `other ⊆ self` as Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (1..=other.len()).all(|j| other.part(j) <= self.part(j))
    }

    /// Fits inside the rectangle with `rows` rows and `cols` columns.
    pub fn fits_in(&self, rows: usize, cols: u32) -> bool {
        self.len() <= rows && self.first() <= cols
    }

    /// Every `μ` with `self` interlacing `μ`, i.e. `λ_{j+1} ≤ μ_j ≤ λ_j`.
    pub fn interlaced_below(&self) -> Vec<Partition> {
        let l = self.len();
        let mut out = Vec::new();
        let mut cur = vec![0u32; l];
        fn rec(lam: &Partition, j: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if j > lam.len() {
                out.push(Partition::new(cur.iter().copied()).expect("interlacing keeps order"));
                return;
            }
            for v in lam.part(j + 1)..=lam.part(j) {
                cur[j - 1] = v;
                rec(lam, j + 1, cur, out);
            }
        }
        rec(self, 1, &mut cur, &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `5,3,3,1`, `(5,3,3,1)`, `[5,3,3,1]`, and `[]`, `()`, `φ` or an
/// empty string for the empty partition.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Partition> {
        let t = s.trim();
        let t = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .or_else(|| t.strip_prefix('(').and_then(|x| x.strip_suffix(')')))
            .unwrap_or(t)
            .trim();
        if t.is_empty() || t == "φ" || t == "phi" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|e| Error::Parse(format!("`{p}`: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Increasing particle positions on a chain of `m` sites (one-based).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PositionSeq {
    positions: Vec<usize>,
    m: usize,
}

impl PositionSeq {
    pub fn new(positions: Vec<usize>, m: usize) -> Result<PositionSeq> {
        if positions.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Argument(format!("positions {positions:?} not strictly increasing")));
        }
        if positions.first().is_some_and(|&p| p == 0) || positions.last().is_some_and(|&p| p > m) {
            return Err(Error::Argument(format!("positions {positions:?} outside 1..={m}")));
        }
        Ok(PositionSeq { positions, m })
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn chain_length(&self) -> usize {
        self.m
    }

    pub fn count(&self) -> usize {
        self.positions.len()
    }

    /// Occupation bitmask: bit `p-1` set for each position `p`.
    pub fn mask(&self) -> u64 {
        self.positions.iter().fold(0, |acc, &p| acc | 1 << (p - 1))
    }

    pub fn from_mask(mask: u64, m: usize) -> Result<PositionSeq> {
        let positions = (1..=m).filter(|&p| mask >> (p - 1) & 1 == 1).collect();
        if m < 64 && mask >> m != 0 {
            return Err(Error::Argument(format!("mask {mask:#b} exceeds chain length {m}")));
        }
        PositionSeq::new(positions, m)
    }

    /// Union with extra positions, kept sorted.
    pub fn with_positions(&self, extra: impl IntoIterator<Item = usize>, m: usize) -> Result<PositionSeq> {
        let mut all: BTreeSet<usize> = self.positions.iter().copied().collect();
        for p in extra {
            if !all.insert(p) {
                return Err(Error::Argument(format!("position {p} already occupied")));
            }
        }
        PositionSeq::new(all.into_iter().collect(), m)
    }
}

/// `λ_j = y_{c-j+1} - c + j - 1` with `c` the number of positions.
pub fn positions_to_partition(y: &PositionSeq) -> Partition {
    let c = y.count();
    let parts = (1..=c).map(|j| (y.positions[c - j] + j - 1 - c) as u32);
    Partition::new(parts).expect("increasing positions give a partition")
}

/// Inverse of [`positions_to_partition`] for `count` particles on `m` sites.
pub fn partition_to_positions(lam: &Partition, count: usize, m: usize) -> Result<PositionSeq> {
    if lam.len() > count || lam.first() as usize + count > m {
        return Err(Error::BoxOverflow(format!(
            "{lam} with {count} particles on {m} sites"
        )));
    }
    let positions = (1..=count).map(|i| lam.part(count - i + 1) as usize + i).collect();
    PositionSeq::new(positions, m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SkewStats {
    pub weight: u32,
    pub a_stat: u32,
    pub horizontal: bool,
}

/// `λ_1 ≥ μ_1 ≥ λ_2 ≥ … ≥ μ_ℓ ≥ λ_{ℓ+1}` with `ℓ = len(μ)` and
/// `len(λ) ≤ ℓ + 1`.
pub fn interlaces(lam: &Partition, mu: &Partition) -> bool {
    let l = mu.len();
    lam.len() <= l + 1 && (1..=l).all(|j| lam.part(j) >= mu.part(j) && mu.part(j) >= lam.part(j + 1))
}

/// Boxes `(i, μ_i)` with `μ_i > μ_{i+1}`, one-based.
pub fn removable_boxes(mu: &Partition) -> BTreeSet<(usize, u32)> {
    (1..=mu.len())
        .filter(|&i| mu.part(i) > mu.part(i + 1))
        .map(|i| (i, mu.part(i)))
        .collect()
}

/// Weight, the `a` statistic `#{j ≤ len(μ) : λ_{j+1} ≠ μ_j}` and the
/// horizontal-strip flag.
pub fn skew_stats(lam: &Partition, mu: &Partition) -> Result<SkewStats> {
    if !lam.contains(mu) {
        return Err(Error::Containment { inner: mu.to_string(), outer: lam.to_string() });
    }
    let a_stat = (1..=mu.len()).filter(|&j| lam.part(j + 1) != mu.part(j)).count() as u32;
    Ok(SkewStats {
        weight: lam.size() - mu.size(),
        a_stat,
        horizontal: interlaces(lam, mu),
    })
}

/// Number of `i` with `λ_i > λ_{i+1}`, the last part compared with 0.
pub fn descent_count(lam: &Partition) -> u32 {
    (1..=lam.len()).filter(|&i| lam.part(i) > lam.part(i + 1)).count() as u32
}

/// Every partition with at most `rows` parts each at most `cols`, in
/// lexicographic order of part lists.
pub fn enumerate_in_box(rows: usize, cols: u32) -> Vec<Partition> {
    fn rec(prefix: &mut Vec<u32>, max: u32, rows_left: usize, out: &mut Vec<Partition>) {
        out.push(Partition(prefix.clone()));
        if rows_left == 0 {
            return;
        }
        for p in 1..=max {
            prefix.push(p);
            rec(prefix, p, rows_left - 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), cols, rows, &mut out);
    out
}

/// `(width^rows, λ_1, λ_2, …)`.
pub fn prepend_rect(lam: &Partition, rows: usize, width: u32) -> Result<Partition> {
    if lam.first() > width {
        return Err(Error::NotAPartition(format!(
            "cannot place {lam} below a rectangle of width {width}"
        )));
    }
    if width == 0 {
        return Ok(lam.clone());
    }
    Partition::new(std::iter::repeat_n(width, rows).chain(lam.parts().iter().copied()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("5,3,3,1").parts(), &[5, 3, 3, 1]);
        assert!(p("[]").is_empty());
        assert!(p("φ").is_empty());
        assert_eq!(p("(2,1,0,0)").to_string(), "(2,1)");
        assert!("1,2".parse::<Partition>().is_err());
    }

    #[test]
    fn interlacing_examples() {
        assert!(interlaces(&p("5,3,3,1"), &p("4,3,2")));
        assert!(interlaces(&p("1"), &p("1")));
        assert!(!interlaces(&p("1,1"), &Partition::empty()));
    }

    #[test]
    fn removable_box_examples() {
        let expect: BTreeSet<_> = [(1, 4), (2, 3), (3, 2)].into_iter().collect();
        assert_eq!(removable_boxes(&p("4,3,2")), expect);
        assert!(removable_boxes(&Partition::empty()).is_empty());
        assert_eq!(removable_boxes(&p("2,2")), [(2, 2)].into_iter().collect());
    }

    #[test]
    fn skew_stats_examples() {
        let s = skew_stats(&p("5,3,3,1"), &p("4,3,2")).unwrap();
        assert_eq!(s, SkewStats { weight: 3, a_stat: 2, horizontal: true });
        let lam = p("5,3,3,1");
        let s = skew_stats(&lam, &lam).unwrap();
        assert_eq!((s.weight, s.a_stat), (0, descent_count(&lam)));
        let s = skew_stats(&p("1"), &Partition::empty()).unwrap();
        assert_eq!((s.weight, s.a_stat), (1, 0));
        assert!(matches!(skew_stats(&p("1"), &p("2")), Err(Error::Containment { .. })));
    }

    #[test]
    fn descents() {
        assert_eq!(descent_count(&p("1")), 1);
        assert_eq!(descent_count(&Partition::empty()), 0);
        assert_eq!(descent_count(&p("5,3,3,1")), 3);
    }

    #[test]
    fn positions_dictionary() {
        let y = PositionSeq::new(vec![2, 5, 6, 9], 9).unwrap();
        assert_eq!(positions_to_partition(&y), p("5,3,3,1"));
        let x = PositionSeq::new(vec![3, 5, 7], 9).unwrap();
        assert_eq!(positions_to_partition(&x), p("4,3,2"));
        let packed = PositionSeq::new(vec![1, 2, 3], 5).unwrap();
        assert!(positions_to_partition(&packed).is_empty());
        assert_eq!(partition_to_positions(&p("5,3,3,1"), 4, 9).unwrap(), y);
        assert!(matches!(partition_to_positions(&p("6"), 4, 9), Err(Error::BoxOverflow(_))));
    }

    #[test]
    fn box_enumeration() {
        assert_eq!(enumerate_in_box(1, 1), vec![Partition::empty(), p("1")]);
        assert_eq!(enumerate_in_box(2, 2).len(), 6);
        assert_eq!(enumerate_in_box(0, 5), vec![Partition::empty()]);
        let all = enumerate_in_box(2, 2);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn rectangle_prefix() {
        assert_eq!(prepend_rect(&p("1"), 1, 1).unwrap(), p("1,1"));
        assert_eq!(prepend_rect(&Partition::empty(), 2, 3).unwrap(), p("3,3"));
        assert!(prepend_rect(&p("2"), 1, 1).is_err());
    }

    #[test]
    fn interlaced_below_matches_filter() {
        for lam in enumerate_in_box(3, 3) {
            let expect: Vec<_> = enumerate_in_box(3, 3)
                .into_iter()
                .filter(|mu| lam.contains(mu) && interlaces(&lam, mu))
                .collect();
            assert_eq!(lam.interlaced_below(), expect, "λ = {lam}");
        }
    }
}
