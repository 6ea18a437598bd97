//! Integer partitions as immutable values.
//!
//! Partitions are weakly decreasing sequences of positive integers; the
//! empty sequence is the unique partition of 0. Zero tails are never stored.
//! All operations are pure, so values can be shared freely across threads.

use crate::{Error, Result};
use std::fmt;

/// A validated modulus `m >= 2` for the flat/distinct/regular predicates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Modulus(u32);

impl Modulus {
    pub fn new(m: u32) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidModulus(m));
        }
        Ok(Modulus(m))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A partition: weakly decreasing positive parts, zero tail suppressed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Validates weak decrease and positivity. Trailing zeros are rejected,
    /// not trimmed; use [`Partition::from_padded`] for sequences with zeros.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for (i, w) in parts.windows(2).enumerate() {
            if w[0] < w[1] {
                return Err(Error::NotSorted { index: i + 1 });
            }
        }
        if let Some(i) = parts.iter().position(|&p| p == 0) {
            return Err(Error::ZeroPart { index: i });
        }
        Ok(Partition { parts })
    }

    /// Accepts a weakly decreasing sequence with zeros allowed and drops the
    /// zero tail.
    pub fn from_padded(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|lambda|`, the sum of parts.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// 1-based part access; positions past the last part read as 0.
    pub fn part(&self, position: usize) -> u32 {
        if position == 0 {
            panic!("parts are 1-indexed");
        }
        self.parts.get(position - 1).copied().unwrap_or(0)
    }

    /// Reflects the Ferrers diagram, swapping rows and columns.
    pub fn conjugate(&self) -> Partition {
        let mut cols = Vec::new();
        if let Some(&first) = self.parts.first() {
            cols.reserve(first as usize);
            for c in 1..=first {
                let height = self.parts.iter().take_while(|&&p| p >= c).count();
                cols.push(height as u32);
            }
        }
        Partition { parts: cols }
    }

    /// 1-based position whose gap to the next part (or to 0 after the final
    /// part) is `>= m`, if any. `None` means the partition is m-flat.
    pub fn flatness_violation(&self, m: Modulus) -> Option<usize> {
        let m = m.get();
        for (i, w) in self.parts.windows(2).enumerate() {
            if w[0] - w[1] >= m {
                return Some(i + 1);
            }
        }
        match self.parts.last() {
            Some(&last) if last >= m => Some(self.parts.len()),
            _ => None,
        }
    }

    /// Successive differences all `< m`, including the final positive part
    /// against 0.
    pub fn is_m_flat(&self, m: Modulus) -> bool {
        self.flatness_violation(m).is_none()
    }

    /// No part size occurs `m` or more times.
    pub fn is_m_distinct(&self, m: Modulus) -> bool {
        let m = m.get() as usize;
        self.parts.chunk_by(|a, b| a == b).all(|run| run.len() < m)
    }

    /// No part divisible by `m`.
    pub fn is_m_regular(&self, m: Modulus) -> bool {
        self.parts.iter().all(|&p| p % m.get() != 0)
    }

    /// `n * lambda`, componentwise.
    pub fn scaled(&self, n: u32) -> Partition {
        if n == 0 {
            return Partition::empty();
        }
        Partition {
            parts: self.parts.iter().map(|&p| n * p).collect(),
        }
    }

    /// `lambda + mu`, componentwise; the shorter operand is zero-padded.
    pub fn plus(&self, other: &Partition) -> Partition {
        let len = self.parts.len().max(other.parts.len());
        let parts = (1..=len)
            .map(|i| self.part(i) + other.part(i))
            .collect();
        Partition { parts }
    }

    /// Hooklengths along the Durfee-square diagonal:
    /// `h_j = lambda_j + lambda'_j - 2j + 1` for `j` up to the square's side.
    /// Strictly decreasing; the values sum to `|lambda|`.
    pub fn diagonal_hooklengths(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut hooks = Vec::new();
        let mut j = 1u32;
        while self.part(j as usize) >= j {
            hooks.push(self.part(j as usize) + conj.part(j as usize) + 1 - 2 * j);
            j += 1;
        }
        hooks
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite sequence of nonzero residues mod `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueVector {
    modulus: Modulus,
    entries: Vec<u32>,
}

impl ResidueVector {
    pub fn new(modulus: Modulus, entries: Vec<u32>) -> Result<Self> {
        for (i, &v) in entries.iter().enumerate() {
            if v == 0 || v >= modulus.get() {
                return Err(Error::InvalidResidue {
                    modulus: modulus.get(),
                    index: i + 1,
                    value: v,
                });
            }
        }
        Ok(ResidueVector { modulus, entries })
    }

    /// Residue sequence of an m-regular partition, in part order.
    pub fn of_partition(p: &Partition, m: Modulus) -> Result<Self> {
        if let Some(i) = p.parts().iter().position(|&x| x % m.get() == 0) {
            return Err(Error::NotRegular {
                modulus: m.get(),
                index: i + 1,
            });
        }
        let entries = p.parts().iter().map(|&x| x % m.get()).collect();
        Ok(ResidueVector { modulus: m, entries })
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }
}

/// The unique m-regular, m-flat partition whose part at position `i` is
/// congruent to `v_i` mod `m`.
///
/// Built greedily from the smallest part upward: the final part must equal
/// its residue (flatness against 0), and each earlier part is the unique
/// representative of its residue class in the half-open window
/// `[next_part, next_part + m)`.
pub fn lambda_of_residues(v: &ResidueVector) -> Partition {
    let m = v.modulus().get();
    let mut parts = vec![0u32; v.entries().len()];
    let mut below = 0u32;
    for (slot, &r) in parts.iter_mut().zip(v.entries().iter()).rev() {
        let base = below - below % m;
        let mut value = base + r;
        if value < below {
            value += m;
        }
        *slot = value;
        below = value;
    }
    Partition { parts }
}

/// A weakly decreasing sequence of fixed declared length with zeros allowed,
/// used by the generating-function recurrences where "partitions into exactly
/// N nonnegative parts" are counted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaddedPartition {
    parts: Vec<u32>,
}

impl PaddedPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for (i, w) in parts.windows(2).enumerate() {
            if w[0] < w[1] {
                return Err(Error::NotSorted { index: i + 1 });
            }
        }
        Ok(PaddedPartition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn declared_len(&self) -> usize {
        self.parts.len()
    }

    /// 1-based access (always in range for positions <= declared length).
    pub fn part(&self, position: usize) -> u32 {
        self.parts.get(position - 1).copied().unwrap_or(0)
    }

    /// Drops the zero tail.
    pub fn positive(&self) -> Partition {
        let parts: Vec<u32> = self.parts.iter().copied().filter(|&p| p > 0).collect();
        Partition { parts }
    }
}

/// All weakly decreasing length-`len` sequences over `0..=max_part` in which
/// no value repeats more than `max_rep` times.
pub fn padded_partitions(len: usize, max_part: u32, max_rep: usize) -> Vec<PaddedPartition> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(
        cur: &mut Vec<u32>,
        len: usize,
        bound: u32,
        max_rep: usize,
        out: &mut Vec<PaddedPartition>,
    ) {
        if cur.len() == len {
            out.push(PaddedPartition { parts: cur.clone() });
            return;
        }
        for v in (0..=bound).rev() {
            let run = cur.iter().rev().take_while(|&&x| x == v).count();
            if run >= max_rep {
                continue;
            }
            cur.push(v);
            rec(cur, len, v, max_rep, out);
            cur.pop();
        }
    }
    rec(&mut cur, len, max_part, max_rep, &mut out);
    out
}

/// Iterator over all partitions of `n` in reverse-lexicographic order:
/// `(n)` first, `(1,1,...,1)` last.
pub struct PartitionIter {
    next: Option<Vec<u32>>,
    max_part: u32,
}

impl PartitionIter {
    fn first(n: u32, max_part: u32) -> Option<Vec<u32>> {
        if n == 0 {
            return Some(Vec::new());
        }
        if max_part == 0 {
            return None;
        }
        let mut parts = Vec::new();
        let mut rem = n;
        while rem > 0 {
            let p = rem.min(max_part);
            parts.push(p);
            rem -= p;
        }
        Some(parts)
    }
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.next.take()?;
        // successor: shrink the rightmost part > 1 and refill greedily
        let succ = (|| {
            let j = cur.iter().rposition(|&p| p > 1)?;
            let cap = cur[j] - 1;
            let mut tail: u32 = cur[j..].iter().sum();
            let mut next = cur[..j].to_vec();
            while tail > 0 {
                let p = tail.min(cap);
                next.push(p);
                tail -= p;
            }
            Some(next)
        })();
        self.next = succ;
        let _ = self.max_part;
        Some(Partition { parts: cur })
    }
}

/// All partitions of `n`, reverse-lexicographic.
pub fn partitions_of(n: u32) -> PartitionIter {
    PartitionIter {
        next: PartitionIter::first(n, n),
        max_part: n,
    }
}

/// All partitions of `n` with parts at most `max_part`, reverse-lexicographic.
pub fn partitions_with_max_part(n: u32, max_part: u32) -> PartitionIter {
    PartitionIter {
        next: PartitionIter::first(n, max_part),
        max_part,
    }
}

/// Partitions of `n` satisfying an arbitrary pure predicate.
pub fn enumerate_partitions<F>(n: u32, constraint: F) -> impl Iterator<Item = Partition>
where
    F: Fn(&Partition) -> bool,
{
    partitions_of(n).filter(move |p| constraint(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn m(v: u32) -> Modulus {
        Modulus::new(v).unwrap()
    }

    #[test]
    fn conjugate_worked_example() {
        assert_eq!(p(&[4, 2, 2, 1]).conjugate(), p(&[4, 3, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[5]).conjugate(), p(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn predicates() {
        assert!(p(&[12, 8, 6, 4, 4, 2]).is_m_flat(m(5)));
        assert!(!p(&[6, 1]).is_m_flat(m(5)));
        assert_eq!(p(&[6, 1]).flatness_violation(m(5)), Some(1));
        // the final positive part counts against 0
        assert!(!p(&[5]).is_m_flat(m(5)));
        assert_eq!(p(&[7, 5]).flatness_violation(m(5)), Some(2));
        assert!(!p(&[3, 3, 3, 1]).is_m_distinct(m(3)));
        assert!(p(&[3, 3, 1]).is_m_distinct(m(3)));
        assert!(p(&[12, 8, 6, 4, 4, 2]).is_m_regular(m(5)));
        assert!(!p(&[12, 8, 5]).is_m_regular(m(5)));
    }

    #[test]
    fn validation_errors() {
        assert_eq!(Modulus::new(1).unwrap_err(), Error::InvalidModulus(1));
        assert_eq!(
            Partition::new(vec![2, 3]).unwrap_err(),
            Error::NotSorted { index: 1 }
        );
        assert_eq!(
            Partition::new(vec![2, 0]).unwrap_err(),
            Error::ZeroPart { index: 1 }
        );
    }

    #[test]
    fn vector_operations() {
        assert_eq!(p(&[6, 5, 1]).scaled(5), p(&[30, 25, 5]));
        let a = p(&[21, 17, 14, 13, 11, 7, 3]);
        let b = p(&[20, 10, 10, 10, 10, 5]);
        assert_eq!(a.plus(&b), p(&[41, 27, 24, 23, 21, 12, 3]));
        assert_eq!(a.plus(&Partition::empty()), a);
    }

    #[test]
    fn lambda_of_residues_examples() {
        let v = ResidueVector::new(m(5), vec![2, 3, 1, 4, 4, 2]).unwrap();
        assert_eq!(lambda_of_residues(&v), p(&[12, 8, 6, 4, 4, 2]));
        let v = ResidueVector::new(m(2), vec![1]).unwrap();
        assert_eq!(lambda_of_residues(&v), p(&[1]));
        // frozen from the brute-force uniqueness check below
        let v = ResidueVector::new(m(3), vec![1, 2]).unwrap();
        assert_eq!(lambda_of_residues(&v), p(&[4, 2]));
    }

    #[test]
    fn lambda_of_residues_satisfies_its_contract() {
        // m <= 7, length <= 8: output is m-flat, m-regular, with the
        // prescribed residues.
        for modulus in 2..=7u32 {
            let mm = m(modulus);
            for len in 0..=8usize {
                // a pseudo-random but fixed sample of residue tuples
                let mut state = 0x9e3779b97f4a7c15u64;
                for _ in 0..40 {
                    let residues: Vec<u32> = (0..len)
                        .map(|_| {
                            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                            1 + ((state >> 33) as u32) % (modulus - 1)
                        })
                        .collect();
                    let v = ResidueVector::new(mm, residues.clone()).unwrap();
                    let lam = lambda_of_residues(&v);
                    assert!(lam.is_m_flat(mm) && lam.is_m_regular(mm));
                    assert_eq!(
                        lam.parts().iter().map(|x| x % modulus).collect::<Vec<_>>(),
                        residues
                    );
                }
            }
        }
    }

    #[test]
    fn lambda_of_residues_is_unique_by_exhaustion() {
        // Every m-flat m-regular partition of n <= 25 is recovered from its
        // own residue sequence, so no residue sequence has two such
        // partitions in this range.
        for modulus in 2..=5u32 {
            let mm = m(modulus);
            for n in 0..=25u32 {
                for lam in partitions_of(n) {
                    if lam.is_m_flat(mm) && lam.is_m_regular(mm) {
                        let v = ResidueVector::of_partition(&lam, mm).unwrap();
                        assert_eq!(lambda_of_residues(&v), lam);
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_counts_and_order() {
        let got: Vec<Partition> = enumerate_partitions(7, |p| p.len() == 3).collect();
        let want = [
            p(&[5, 1, 1]),
            p(&[4, 2, 1]),
            p(&[3, 3, 1]),
            p(&[3, 2, 2]),
        ];
        assert_eq!(got, want);

        let all0: Vec<Partition> = partitions_of(0).collect();
        assert_eq!(all0, vec![Partition::empty()]);

        let two_distinct = enumerate_partitions(10, |p| p.is_m_distinct(m(2))).count();
        assert_eq!(two_distinct, 10);

        // reverse-lexicographic: first is (n), last is all ones
        let all: Vec<Partition> = partitions_of(6).collect();
        assert_eq!(all.len(), 11);
        assert_eq!(all[0], p(&[6]));
        assert_eq!(all[10], p(&[1, 1, 1, 1, 1, 1]));
        for w in all.windows(2) {
            assert!(w[0].parts() > w[1].parts(), "order violated");
        }
    }

    #[test]
    fn hooklengths() {
        // oracle over cells: hook(j,j) = arm + leg + 1
        let cell_oracle = |lam: &Partition| -> Vec<u32> {
            let conj = lam.conjugate();
            (1..)
                .take_while(|&j| lam.part(j) >= j as u32)
                .map(|j| {
                    let arm = lam.part(j) - j as u32;
                    let leg = conj.part(j) - j as u32;
                    arm + leg + 1
                })
                .collect()
        };
        let lam = p(&[4, 3, 1, 1]);
        assert_eq!(cell_oracle(&lam), vec![7, 2]);
        assert_eq!(lam.diagonal_hooklengths(), vec![7, 2]);
        assert_eq!(Partition::empty().diagonal_hooklengths(), Vec::<u32>::new());
        assert_eq!(p(&[1]).diagonal_hooklengths(), vec![1]);
        for n in 0..=18u32 {
            for lam in partitions_of(n) {
                let hooks = lam.diagonal_hooklengths();
                assert_eq!(hooks, cell_oracle(&lam));
                assert_eq!(hooks.iter().map(|&h| u64::from(h)).sum::<u64>(), lam.weight());
                assert!(hooks.windows(2).all(|w| w[0] > w[1]));
            }
        }
    }

    #[test]
    fn padded_enumeration() {
        let all = padded_partitions(3, 2, 2);
        // weakly decreasing triples over {0,1,2}, no value thrice
        assert!(all.iter().all(|pp| {
            pp.parts().windows(2).all(|w| w[0] >= w[1])
                && pp.parts().chunk_by(|a, b| a == b).all(|r| r.len() <= 2)
        }));
        assert_eq!(all.len(), 7);
        assert_eq!(all[0].positive(), p(&[2, 2, 1]));
    }
}
