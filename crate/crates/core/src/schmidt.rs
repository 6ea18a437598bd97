//! Schmidt-type statistics and exhaustive counting functions.
//!
//! A [`SchmidtSpec`] fixes a modulus `m` and a set `S` of counted place
//! residues with `1 in S`. The central statistic is the place-weighted size
//! (the sum of parts standing in counted places), refined by the
//! [`DiffVector`] of place-residue difference sums. The counting functions
//! here are all exhaustive enumerations over provably finite search spaces;
//! the generating-function module provides the independent series oracles
//! they are compared against.

use crate::partition::{partitions_of, Modulus, Partition};
use crate::stockhofe::{ColoredPart, ColoredPartition};
use crate::{Error, Result};
use std::collections::HashMap;

/// Modulus `m >= 2` together with the counted residue set
/// `S = {s_1 < s_2 < ... < s_i}` with `s_1 = 1` and all `s_j < m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SchmidtSpec {
    m: Modulus,
    s: Vec<u32>,
}

impl SchmidtSpec {
    pub fn new(m: u32, mut s: Vec<u32>) -> Result<Self> {
        let m = Modulus::new(m)?;
        s.sort_unstable();
        s.dedup();
        if s.first() != Some(&1) {
            return Err(Error::InvalidSpec("counted set must contain 1".into()));
        }
        if s.last().copied().unwrap_or(0) >= m.get() {
            return Err(Error::InvalidSpec(format!(
                "counted residues must lie in 1..{}",
                m.get()
            )));
        }
        Ok(SchmidtSpec { m, s })
    }

    pub fn modulus(&self) -> Modulus {
        self.m
    }

    pub fn m(&self) -> u32 {
        self.m.get()
    }

    /// The sorted counted residues `s_1, ..., s_i`.
    pub fn counted_residues(&self) -> &[u32] {
        &self.s
    }

    /// `i`, the number of counted residues (and of size classes mod `i`).
    pub fn class_count(&self) -> u32 {
        self.s.len() as u32
    }

    /// Colors are labeled `1..m-1`.
    pub fn color_count(&self) -> u32 {
        self.m.get() - 1
    }

    /// Is the 1-based place `pos` counted? (Residue `m` reads as 0 and is
    /// never counted.)
    pub fn counted_place(&self, pos: usize) -> bool {
        let r = (pos as u64 % u64::from(self.m.get())) as u32;
        self.s.binary_search(&r).is_ok()
    }

    /// Number of counted residues `<= r` for `0 <= r < m`.
    fn counted_up_to(&self, r: u32) -> u32 {
        self.s.partition_point(|&x| x <= r) as u32
    }

    /// Counted boxes in a row of length `x`: `i * floor(x/m) + #{s in S : s <= x mod m}`.
    pub fn reduced_size(&self, x: u32) -> u32 {
        let m = self.m.get();
        self.class_count() * (x / m) + self.counted_up_to(x % m)
    }

    /// Size class `k in 1..=i` of a reduced part size (`k = i` for multiples
    /// of `i`).
    pub fn class_of_size(&self, size: u32) -> u32 {
        let i = self.class_count();
        let r = size % i;
        if r == 0 {
            i
        } else {
            r
        }
    }

    /// `s_{k+1}` with the convention `s_{i+1} = m`.
    fn s_bound(&self, k: u32) -> u32 {
        self.s
            .get(k as usize)
            .copied()
            .unwrap_or_else(|| self.m.get())
    }

    /// Color labels available to class `k`: `s_k ..= s_{k+1} - 1`.
    pub fn colors_for_class(&self, k: u32) -> std::ops::RangeInclusive<u32> {
        self.s[(k - 1) as usize]..=self.s_bound(k) - 1
    }

    /// Color labels available to a part of the given (reduced) size.
    pub fn colors_for_size(&self, size: u32) -> std::ops::RangeInclusive<u32> {
        self.colors_for_class(self.class_of_size(size))
    }

    /// The class `k` whose color range contains `color`.
    pub fn class_of_color(&self, color: u32) -> Result<u32> {
        if color == 0 || color >= self.m.get() {
            return Err(Error::InvalidColored(format!(
                "color {color} outside 1..{}",
                self.m.get()
            )));
        }
        Ok(self.counted_up_to(color))
    }

    /// Smallest size a part of color `color` can have (`k` for classes
    /// `1..i-1`, `i` for the multiples-of-`i` class).
    pub fn min_size_for_color(&self, color: u32) -> Result<u32> {
        self.class_of_color(color)
    }

    /// The 0/1 weight vector of period `m` counting places in `S`.
    pub fn indicator_weights(&self) -> Vec<u64> {
        (1..=self.m.get())
            .map(|r| u64::from(self.s.binary_search(&(r % self.m.get())).is_ok()))
            .collect()
    }
}

/// The difference vector `rho` of length `m - 1`:
/// `rho_k = sum over places c == k (mod m) of (lambda_c - lambda_{c+1})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiffVector(pub Vec<u32>);

impl DiffVector {
    pub fn zero(m: Modulus) -> Self {
        DiffVector(vec![0; (m.get() - 1) as usize])
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&x| u64::from(x)).sum()
    }
}

/// A periodic integer weight sequence whose initial partial sums are all
/// positive, so that the weighted size statistic has finite level sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    weights: Vec<i64>,
}

impl WeightVector {
    pub fn new(weights: Vec<i64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidWeights { prefix_len: 0 });
        }
        // positive partial sums over one period force positivity forever
        let mut sum = 0i64;
        for (i, &w) in weights.iter().enumerate() {
            sum += w;
            if sum <= 0 {
                return Err(Error::InvalidWeights { prefix_len: i + 1 });
            }
        }
        Ok(WeightVector { weights })
    }

    pub fn period(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// Weight applied at the 1-based place `pos`.
    pub fn at(&self, pos: usize) -> i64 {
        self.weights[(pos - 1) % self.weights.len()]
    }

    /// The weights as nonnegative values, if they all are. The exhaustive
    /// enumerators only handle nonnegative weight vectors.
    pub fn nonnegative(&self) -> Option<Vec<u64>> {
        self.weights
            .iter()
            .map(|&w| u64::try_from(w).ok())
            .collect()
    }
}

/// `sum of lambda_c over counted places c` (Theorem-level statistic `n`).
pub fn schmidt_weight(p: &Partition, spec: &SchmidtSpec) -> u64 {
    (1..=p.len())
        .filter(|&pos| spec.counted_place(pos))
        .map(|pos| u64::from(p.part(pos)))
        .sum()
}

/// The difference vector of `p` with respect to `m`; parts past the end read
/// as 0, so the final part's full value enters its place residue.
pub fn diff_vector(p: &Partition, m: Modulus) -> DiffVector {
    let mut rho = vec![0u32; (m.get() - 1) as usize];
    for pos in 1..=p.len() {
        let r = (pos as u64 % u64::from(m.get())) as u32;
        if r != 0 {
            rho[(r - 1) as usize] += p.part(pos) - p.part(pos + 1);
        }
    }
    DiffVector(rho)
}

/// Dot product of the periodic extension of `w` with the parts of `p`.
pub fn weighted_size(p: &Partition, w: &WeightVector) -> i64 {
    (1..=p.len())
        .map(|pos| w.at(pos) * i64::from(p.part(pos)))
        .sum()
}

/// Visits every partition (the empty one included) in which no part size
/// repeats more than `max_rep` times and whose weighted size under the
/// periodic nonnegative `weights` is at most `max_weight`. Each partition is
/// visited exactly once, together with its weighted size.
///
/// Termination: `weights` must come from a valid [`WeightVector`], so each
/// full period contributes at least 1 to the weighted size of any extension;
/// the recursion depth is bounded by `period * (max_weight + 1)`.
pub fn for_each_bounded<F>(weights: &[u64], max_rep: usize, max_weight: u64, f: &mut F)
where
    F: FnMut(&[u32], u64),
{
    assert!(!weights.is_empty() && weights[0] >= 1);
    assert!(max_rep >= 1);
    let depth_bound = weights.len() * (max_weight as usize + 2);
    let mut stack: Vec<u32> = Vec::new();
    visit(weights, max_rep, max_weight, depth_bound, &mut stack, 0, f);

    fn visit<F: FnMut(&[u32], u64)>(
        weights: &[u64],
        max_rep: usize,
        max_weight: u64,
        depth_bound: usize,
        stack: &mut Vec<u32>,
        acc: u64,
        f: &mut F,
    ) {
        f(stack, acc);
        assert!(stack.len() <= depth_bound, "search bound breached");
        let pos = stack.len() + 1;
        let w = weights[(pos - 1) % weights.len()];
        let prev = stack.last().copied().unwrap_or(u32::MAX);
        let largest = match (max_weight - acc).checked_div(w) {
            Some(room) => prev.min(u32::try_from(room).unwrap_or(u32::MAX)),
            None => prev,
        };
        for v in (1..=largest).rev() {
            let run = stack.iter().rev().take_while(|&&x| x == v).count();
            if run >= max_rep {
                continue;
            }
            stack.push(v);
            visit(weights, max_rep, max_weight, depth_bound, stack, acc + w * u64::from(v), f);
            stack.pop();
        }
    }
}

/// All m-distinct partitions with Schmidt weight exactly `n` under `spec`,
/// in the enumerator's canonical order.
pub fn schmidt_partitions(spec: &SchmidtSpec, n: u64) -> Vec<Partition> {
    let weights = spec.indicator_weights();
    let max_rep = (spec.m() - 1) as usize;
    let mut out = Vec::new();
    for_each_bounded(&weights, max_rep, n, &mut |parts, acc| {
        if acc == n {
            out.push(Partition::new(parts.to_vec()).expect("enumerator yields partitions"));
        }
    });
    out
}

/// Joint census of (Schmidt weight, difference vector) over all m-distinct
/// partitions with weight at most `max_n`.
pub fn schmidt_census(spec: &SchmidtSpec, max_n: u64) -> HashMap<(u64, Vec<u32>), u64> {
    let weights = spec.indicator_weights();
    let max_rep = (spec.m() - 1) as usize;
    let m = spec.modulus();
    let mut census = HashMap::new();
    for_each_bounded(&weights, max_rep, max_n, &mut |parts, acc| {
        let p = Partition::new(parts.to_vec()).expect("enumerator yields partitions");
        let rho = diff_vector(&p, m);
        *census.entry((acc, rho.0)).or_insert(0) += 1;
    });
    census
}

/// `P_{m,S}(n; rho)`: m-distinct partitions with Schmidt weight `n` and
/// difference vector `rho`.
pub fn count_p(spec: &SchmidtSpec, n: u64, rho: &DiffVector) -> u64 {
    let mut count = 0;
    let weights = spec.indicator_weights();
    let max_rep = (spec.m() - 1) as usize;
    let m = spec.modulus();
    for_each_bounded(&weights, max_rep, n, &mut |parts, acc| {
        if acc == n {
            let p = Partition::new(parts.to_vec()).expect("enumerator yields partitions");
            if diff_vector(&p, m).0 == rho.0 {
                count += 1;
            }
        }
    });
    count
}

/// Weight histogram `R_{m,i}(0..=max_n)` for the initial-segment spec
/// `S = {1, ..., i}`.
pub fn count_r_histogram(m: u32, i: u32, max_n: u64) -> Result<Vec<u64>> {
    if i == 0 || i >= m {
        return Err(Error::InvalidSpec(format!("need 1 <= i < m, got i={i}, m={m}")));
    }
    let spec = SchmidtSpec::new(m, (1..=i).collect())?;
    Ok(schmidt_weight_histogram(&spec, max_n))
}

/// Weight histogram for an arbitrary spec.
pub fn schmidt_weight_histogram(spec: &SchmidtSpec, max_n: u64) -> Vec<u64> {
    let weights = spec.indicator_weights();
    let max_rep = (spec.m() - 1) as usize;
    let mut hist = vec![0u64; max_n as usize + 1];
    for_each_bounded(&weights, max_rep, max_n, &mut |_, acc| {
        hist[acc as usize] += 1;
    });
    hist
}

/// `R_{m,i}(n)`: m-distinct partitions whose first-`i`-places-per-period sum
/// is `n`.
pub fn count_r(m: u32, i: u32, n: u64) -> Result<u64> {
    Ok(count_r_histogram(m, i, n)?[n as usize])
}

fn alternating_sum(p: &Partition, upper: usize, lower: usize, period: usize) -> u64 {
    // sum over blocks j >= 0 of (lambda_{j*period+upper} - lambda_{j*period+lower})
    let mut total = 0u64;
    let mut j = 0usize;
    loop {
        let hi = j * period + upper;
        if hi > p.len() {
            break;
        }
        total += u64::from(p.part(hi)) - u64::from(p.part(j * period + lower));
        j += 1;
    }
    total
}

/// The parts statistic of the modulus-`k` theorems:
/// `lambda_1 - lambda_k + lambda_{k+1} - lambda_{2k} + ...`.
pub fn fk_statistic(p: &Partition, k: u32) -> u64 {
    alternating_sum(p, 1, k as usize, k as usize)
}

/// The two color statistics of the two-tracker modulus-3 theorem:
/// `(sum lambda_{3j+1} - lambda_{3j+2}, sum lambda_{3j+2} - lambda_{3j+3})`.
pub fn f31_statistics(p: &Partition) -> (u64, u64) {
    (alternating_sum(p, 1, 2, 3), alternating_sum(p, 2, 3, 3))
}

/// `f_{3,2}(n, m)`: parts repeat at most twice, `n` is the sum over places
/// not divisible by 3, and `m = lambda_1 - lambda_3 + lambda_4 - lambda_6 + ...`.
pub fn count_f32(n: u64, m: u64) -> u64 {
    count_fk(3, n, m).expect("k=3 is valid")
}

/// `f_{3,1}(n; m_1, m_2)`: parts repeat at most twice, `n` is the sum over
/// places 1 mod 3, `m_1` and `m_2` are the two alternating difference sums.
pub fn count_f31(n: u64, m1: u64, m2: u64) -> u64 {
    let spec = SchmidtSpec::new(3, vec![1]).expect("valid spec");
    let weights = spec.indicator_weights();
    let mut count = 0;
    for_each_bounded(&weights, 2, n, &mut |parts, acc| {
        if acc == n {
            let p = Partition::new(parts.to_vec()).expect("enumerator yields partitions");
            if alternating_sum(&p, 1, 2, 3) == m1 && alternating_sum(&p, 2, 3, 3) == m2 {
                count += 1;
            }
        }
    });
    count
}

/// `f_{k,k-1}(n, m)`: parts repeat fewer than `k` times,
/// `n = sum of all parts minus the parts in places divisible by k`, and
/// `m = lambda_1 - lambda_k + lambda_{k+1} - lambda_{2k} + ...`.
pub fn count_fk(k: u32, n: u64, m: u64) -> Result<u64> {
    if k < 2 {
        return Err(Error::InvalidSpec(format!("need k > 1, got {k}")));
    }
    let spec = SchmidtSpec::new(k, (1..k).collect())?;
    let weights = spec.indicator_weights();
    let mut count = 0;
    for_each_bounded(&weights, (k - 1) as usize, n, &mut |parts, acc| {
        if acc == n {
            let p = Partition::new(parts.to_vec()).expect("enumerator yields partitions");
            if alternating_sum(&p, 1, k as usize, k as usize) == m {
                count += 1;
            }
        }
    });
    Ok(count)
}

/// All colored partitions of `n` under the spec's palette with prescribed
/// color multiplicities, in size-major color-minor descending order.
pub fn colored_partitions(n: u64, spec: &SchmidtSpec, rho: &DiffVector) -> Vec<ColoredPartition> {
    let mut out = Vec::new();
    let mut remaining: Vec<u32> = rho.0.clone();
    let mut cur: Vec<ColoredPart> = Vec::new();
    // minimum total size of the parts still owed, per remaining multiset
    fn min_needed(spec: &SchmidtSpec, remaining: &[u32]) -> u64 {
        remaining
            .iter()
            .enumerate()
            .map(|(idx, &cnt)| {
                let color = idx as u32 + 1;
                let min = spec.min_size_for_color(color).expect("color in range");
                u64::from(cnt) * u64::from(min)
            })
            .sum()
    }
    fn rec(
        n_left: u64,
        spec: &SchmidtSpec,
        remaining: &mut Vec<u32>,
        cur: &mut Vec<ColoredPart>,
        out: &mut Vec<ColoredPartition>,
    ) {
        if remaining.iter().all(|&c| c == 0) {
            if n_left == 0 {
                out.push(ColoredPartition::from_sorted(cur.clone()));
            }
            return;
        }
        if min_needed(spec, remaining) > n_left {
            return;
        }
        let bound = cur.last().copied();
        let max_size = u32::try_from(n_left).unwrap_or(u32::MAX);
        for size in (1..=max_size).rev() {
            for color in spec.colors_for_size(size).rev() {
                let part = ColoredPart { size, color };
                if let Some(prev) = bound {
                    if part > prev {
                        continue;
                    }
                }
                let cidx = (color - 1) as usize;
                if remaining[cidx] == 0 {
                    continue;
                }
                remaining[cidx] -= 1;
                cur.push(part);
                rec(n_left - u64::from(size), spec, remaining, cur, out);
                cur.pop();
                remaining[cidx] += 1;
            }
        }
    }
    rec(n, spec, &mut remaining, &mut cur, &mut out);
    out
}

/// Number of colored partitions of `n` with color-`j` multiplicity `rho_j`.
pub fn count_colored(n: u64, spec: &SchmidtSpec, rho: &DiffVector) -> u64 {
    colored_partitions(n, spec, rho).len() as u64
}

/// Census of (size, color multiplicities) over all colored partitions of
/// size at most `max_n` under the spec's palette.
pub fn colored_census(spec: &SchmidtSpec, max_n: u64) -> HashMap<(u64, Vec<u32>), u64> {
    let mut census = HashMap::new();
    let colors = spec.color_count() as usize;
    let mut cur: Vec<ColoredPart> = Vec::new();
    fn rec(
        n_left: u64,
        spec: &SchmidtSpec,
        cur: &mut Vec<ColoredPart>,
        census: &mut HashMap<(u64, Vec<u32>), u64>,
        colors: usize,
        total: u64,
    ) {
        let mut rho = vec![0u32; colors];
        for part in cur.iter() {
            rho[(part.color - 1) as usize] += 1;
        }
        *census.entry((total, rho)).or_insert(0) += 1;
        let bound = cur.last().copied();
        let max_size = u32::try_from(n_left).unwrap_or(u32::MAX);
        for size in (1..=max_size).rev() {
            for color in spec.colors_for_size(size).rev() {
                let part = ColoredPart { size, color };
                if let Some(prev) = bound {
                    if part > prev {
                        continue;
                    }
                }
                cur.push(part);
                rec(
                    n_left - u64::from(size),
                    spec,
                    cur,
                    census,
                    colors,
                    total + u64::from(size),
                );
                cur.pop();
            }
        }
    }
    rec(max_n, spec, &mut cur, &mut census, colors, 0);
    census
}

/// Partitions counted with the periodic weight vector `w` and parts
/// repeating at most `max_rep` times, at weighted size exactly `n`.
pub fn count_weighted(w: &WeightVector, max_rep: usize, n: u64) -> Result<u64> {
    let weights = w
        .nonnegative()
        .ok_or_else(|| Error::InvalidSpec("enumeration needs nonnegative weights".into()))?;
    let mut count = 0;
    for_each_bounded(&weights, max_rep, n, &mut |_, acc| {
        if acc == n {
            count += 1;
        }
    });
    Ok(count)
}

/// Partitions of `n` whose parts are all congruent to 1, 3, 6, or 8 mod 9.
pub fn mod9_class_count(n: u64) -> u64 {
    let classes = [1u32, 3, 6, 8];
    partitions_of(n as u32)
        .filter(|p| p.parts().iter().all(|&x| classes.contains(&(x % 9))))
        .count() as u64
}

/// The two sides of the hooklength statement at level `n`, each sorted:
/// the odd-indexed subpartitions of distinct-part partitions whose
/// subpartition sum is `n`, and the diagonal hooklength sequences of
/// partitions of `n`.
pub fn hook_multisets(n: u64) -> (Vec<Vec<u32>>, Vec<Vec<u32>>) {
    // side A: distinct parts, statistic = lambda_1 + lambda_3 + ...
    let mut side_a: Vec<Vec<u32>> = Vec::new();
    for_each_bounded(&[1, 0], 1, n, &mut |parts, acc| {
        if acc == n && !parts.is_empty() {
            let sub: Vec<u32> = parts.iter().copied().step_by(2).collect();
            side_a.push(sub);
        }
    });
    // side B: diagonal hooklengths over all partitions of n
    let mut side_b: Vec<Vec<u32>> = partitions_of(n as u32)
        .filter(|p| !p.is_empty())
        .map(|p| p.diagonal_hooklengths())
        .collect();
    side_a.sort();
    side_b.sort();
    (side_a, side_b)
}

/// Multiset equality between the odd-indexed subpartitions of distinct-part
/// partitions (subpartition sum `n`) and the diagonal hooklength sequences
/// of partitions of `n`.
pub fn hook_multiset_check(n: u64) -> bool {
    let (a, b) = hook_multisets(n);
    a == b
}

/// `p(n, m)`: partitions of `n` into exactly `m` parts.
pub fn partitions_exact_parts(n: u64, m: u64) -> u64 {
    if m == 0 {
        return u64::from(n == 0);
    }
    if n < m {
        return 0;
    }
    let n = n as usize;
    let m = m as usize;
    // p(n, m) = p(n-1, m-1) + p(n-m, m)
    let mut table = vec![vec![0u64; m + 1]; n + 1];
    table[0][0] = 1;
    for nn in 1..=n {
        for mm in 1..=m.min(nn) {
            table[nn][mm] = table[nn - 1][mm - 1]
                + if nn >= mm { table[nn - mm][mm] } else { 0 };
        }
    }
    table[n][m]
}

/// `p(n; m_1, m_2)`: 2-colored partitions of `n` with `m_1` parts of the
/// first color and `m_2` of the second.
pub fn partitions_two_colored(n: u64, m1: u64, m2: u64) -> u64 {
    (0..=n)
        .map(|a| partitions_exact_parts(a, m1) * partitions_exact_parts(n - a, m2))
        .sum()
}
