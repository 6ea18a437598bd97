//! The direct bijection between m-flat and m-regular partitions, with the
//! colored reduction that realizes the counting equivalence.
//!
//! Forward map: starting from an m-flat partition, parts divisible by `m`
//! are removed in two passes. Pass 1, smallest part to largest, removes any
//! multiple of `m` whose removal leaves the partition m-flat (one part at a
//! time, re-testing after each removal). Pass 2, largest remaining multiple
//! to smallest, removes the part at position `i`, subtracts `m` from every
//! larger part, and records the adjusted value `part + (i-1)m`. What is left
//! is the unique m-regular m-flat partition with the input's residue
//! sequence; the image is `lambda(v) + m * conj(mu/m)` where `mu` collects
//! all removed values.

use crate::partition::{lambda_of_residues, Modulus, Partition, ResidueVector};
use crate::schmidt::SchmidtSpec;
use crate::{Error, Result};
use std::fmt;

fn is_flat_slice(parts: &[u32], m: u32) -> bool {
    parts.windows(2).all(|w| w[0] - w[1] < m) && parts.last().is_none_or(|&last| last < m)
}

/// Removal record of one application of the bijection. `mu` holds every
/// removed value (pass-1 parts verbatim, pass-2 parts adjusted), so the image
/// equals `lambda_v + m * conjugate(mu / m)` and the input can be rebuilt.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiTrace {
    /// Pass-1 removals in removal order (smallest first).
    pub removed_step1: Vec<u32>,
    /// Pass-2 removals in removal order: (part value, adjusted value).
    pub removed_step2: Vec<(u32, u32)>,
    /// All removed values as a partition.
    pub mu: Partition,
    /// The m-regular m-flat remainder.
    pub lambda_v: Partition,
}

/// The bijection from m-flat to m-regular partitions. Returns the image and
/// the removal trace.
pub fn phi(p: &Partition, m: Modulus) -> Result<(Partition, PhiTrace)> {
    if let Some(index) = p.flatness_violation(m) {
        return Err(Error::NotFlat {
            modulus: m.get(),
            index,
        });
    }
    let mv = m.get();
    let mut parts: Vec<u32> = p.parts().to_vec();
    let mut removed_step1 = Vec::new();

    // Pass 1: smallest to largest, remove multiples of m that leave the
    // partition m-flat.
    let mut i = parts.len();
    while i > 0 {
        i -= 1;
        if parts[i].is_multiple_of(mv) {
            let value = parts[i];
            let mut candidate = parts.clone();
            candidate.remove(i);
            if is_flat_slice(&candidate, mv) {
                removed_step1.push(value);
                parts = candidate;
            }
        }
    }

    // Pass 2: top-down; surviving multiples are isolated and never at the
    // top, so removing one and subtracting m from everything above keeps the
    // partition m-flat.
    let mut removed_step2 = Vec::new();
    let mut i = 0usize;
    while i < parts.len() {
        if parts[i].is_multiple_of(mv) {
            let value = parts[i];
            let adjusted = value + (i as u32) * mv;
            removed_step2.push((value, adjusted));
            parts.remove(i);
            for upper in parts[..i].iter_mut() {
                *upper -= mv;
            }
            debug_assert!(is_flat_slice(&parts, mv));
        } else {
            i += 1;
        }
    }

    let lambda_v = Partition::new(parts).expect("remainder is a partition");
    debug_assert!(lambda_v.is_m_flat(m) && lambda_v.is_m_regular(m));

    let mut mu_values: Vec<u32> = removed_step1
        .iter()
        .copied()
        .chain(removed_step2.iter().map(|&(_, adj)| adj))
        .collect();
    mu_values.sort_unstable_by(|a, b| b.cmp(a));
    let mu = Partition::new(mu_values).expect("sorted removals form a partition");

    let quotient = Partition::new(mu.parts().iter().map(|&v| v / mv).collect())
        .expect("mu values are positive multiples of m");
    let image = lambda_v.plus(&quotient.conjugate().scaled(mv));
    debug_assert!(image.is_m_regular(m));
    debug_assert_eq!(image.weight(), p.weight());

    Ok((
        image,
        PhiTrace {
            removed_step1,
            removed_step2,
            mu,
            lambda_v,
        },
    ))
}

/// Writes an m-regular partition uniquely as `lambda(v) + m * conj(mu)`,
/// returning `(lambda_v, mu)`.
pub fn decompose_regular(p: &Partition, m: Modulus) -> Result<(Partition, Partition)> {
    let v = ResidueVector::of_partition(p, m)?;
    let lambda_v = lambda_of_residues(&v);
    let mv = m.get();
    let diffs: Vec<u32> = p
        .parts()
        .iter()
        .zip(lambda_v.parts())
        .map(|(&a, &b)| (a - b) / mv)
        .collect();
    let mu_conj = Partition::from_padded(diffs)
        .expect("same-residue componentwise differences are weakly decreasing");
    let mu = mu_conj.conjugate();
    // parts of mu never exceed the number of parts of lambda_v
    debug_assert!(mu.parts().iter().all(|&d| (d as usize) <= lambda_v.len()));
    Ok((lambda_v, mu))
}

/// Inverse of [`phi`]: rebuilds the unique m-flat preimage of an m-regular
/// partition.
///
/// The removed values are recovered from the decomposition and undone in
/// decreasing order. A value `v` at most one gap above the current top part
/// reverses a pass-1 removal (plain sorted insertion, which always preserves
/// flatness). A larger `v` reverses a pass-2 removal: the insertion position
/// `i` forces the inserted part to be the unique multiple of `m` in
/// `(cur[i-1], cur[i-1] + m]`, and at most one position admits a flat result.
pub fn phi_inverse(p: &Partition, m: Modulus) -> Result<Partition> {
    let (lambda_v, mu) = decompose_regular(p, m)?;
    let mv = m.get();
    let mut cur: Vec<u32> = lambda_v.parts().to_vec();
    for &q in mu.parts() {
        let v = q * mv;
        undo_removal(&mut cur, v, mv);
    }
    let preimage = Partition::new(cur).expect("undo yields a partition");
    debug_assert!(preimage.is_m_flat(m));
    Ok(preimage)
}

fn undo_removal(cur: &mut Vec<u32>, v: u32, m: u32) {
    let top = cur.first().copied().unwrap_or(0);
    if v < top + m {
        // pass-1 undo: insert at the sorted position; splitting a gap < m in
        // two keeps both halves < m, and at the top v - top < m by the branch
        let pos = cur.partition_point(|&x| x >= v);
        cur.insert(pos, v);
        debug_assert!(is_flat_slice(cur, m));
        return;
    }
    // pass-2 undo
    let mut applied = false;
    for i in 2..=cur.len() {
        let above = cur[i - 2];
        let forced = (above / m + 1) * m;
        if v < ((i - 1) as u32) * m {
            break;
        }
        if v - ((i - 1) as u32) * m != forced {
            continue;
        }
        let below = cur.get(i - 1).copied().unwrap_or(0);
        if forced < below || forced - below >= m {
            continue;
        }
        for upper in cur[..i - 1].iter_mut() {
            *upper += m;
        }
        cur.insert(i - 1, forced);
        debug_assert!(is_flat_slice(cur, m));
        applied = true;
        break;
    }
    assert!(
        applied,
        "no valid reinsertion for value {v}: input is outside the bijection's image"
    );
}

/// A part size with a color subscript.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoredPart {
    pub size: u32,
    pub color: u32,
}

impl fmt::Display for ColoredPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.size, self.color)
    }
}

/// A partition into colored parts: sizes weakly decreasing, colors weakly
/// decreasing among parts of equal size.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredPartition {
    parts: Vec<ColoredPart>,
}

impl ColoredPartition {
    /// Accepts parts already in canonical order (size-major, color-minor,
    /// both descending).
    pub fn from_sorted(parts: Vec<ColoredPart>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        ColoredPartition { parts }
    }

    /// Sorts the parts into canonical order and validates sizes positive.
    pub fn new(mut parts: Vec<ColoredPart>) -> Result<Self> {
        if let Some(i) = parts.iter().position(|p| p.size == 0) {
            return Err(Error::ZeroPart { index: i });
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(ColoredPartition { parts })
    }

    /// Validates this partition against a spec's palette: every part's color
    /// must be admissible for its size class.
    pub fn check_palette(&self, spec: &SchmidtSpec) -> Result<()> {
        for p in &self.parts {
            if !spec.colors_for_size(p.size).contains(&p.color) {
                return Err(Error::InvalidColored(format!(
                    "part {} has color {} outside its class palette",
                    p.size, p.color
                )));
            }
        }
        Ok(())
    }

    pub fn parts(&self) -> &[ColoredPart] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of part sizes.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|p| u64::from(p.size)).sum()
    }

    /// Multiplicity of each color label `1..=color_count`.
    pub fn color_multiplicities(&self, color_count: u32) -> Vec<u32> {
        let mut rho = vec![0u32; color_count as usize];
        for p in &self.parts {
            rho[(p.color - 1) as usize] += 1;
        }
        rho
    }
}

impl fmt::Display for ColoredPartition {
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

/// Sends an m-distinct partition to its colored reduction: conjugate (giving
/// an m-flat partition), apply the bijection, then replace every image part
/// by its counted-box count, colored by the part's residue mod `m`.
///
/// The resulting colored partition's size is the Schmidt weight of the
/// input, and the multiplicity of color `j` is the difference-vector entry
/// `rho_j`.
pub fn schmidt_to_colored(p: &Partition, spec: &SchmidtSpec) -> Result<ColoredPartition> {
    let m = spec.modulus();
    if !p.is_m_distinct(m) {
        let size = p
            .parts()
            .chunk_by(|a, b| a == b)
            .find(|run| run.len() >= m.get() as usize)
            .map(|run| run[0])
            .unwrap_or(0);
        return Err(Error::NotDistinct {
            modulus: m.get(),
            size,
        });
    }
    let flat = p.conjugate();
    debug_assert!(flat.is_m_flat(m));
    let (image, _) = phi(&flat, m)?;
    let parts: Vec<ColoredPart> = image
        .parts()
        .iter()
        .map(|&x| ColoredPart {
            size: spec.reduced_size(x),
            color: x % m.get(),
        })
        .collect();
    // image order is already size-major color-minor descending
    let colored = ColoredPartition::from_sorted(parts);
    debug_assert!(colored.check_palette(spec).is_ok());
    Ok(colored)
}

/// Inverse of [`schmidt_to_colored`].
pub fn colored_to_schmidt(cp: &ColoredPartition, spec: &SchmidtSpec) -> Result<Partition> {
    cp.check_palette(spec)?;
    let m = spec.modulus();
    let i = spec.class_count();
    let mut sizes: Vec<u32> = Vec::with_capacity(cp.parts().len());
    for part in cp.parts() {
        let k = spec.class_of_color(part.color)?;
        if part.size % i != k % i {
            return Err(Error::InvalidColored(format!(
                "part {} cannot carry color {}: size class mismatch",
                part.size, part.color
            )));
        }
        // reduced = i * floor(x/m) + k with x = m*a + color
        let a = (part.size - k) / i;
        sizes.push(m.get() * a + part.color);
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    let regular = Partition::new(sizes).expect("sorted positive sizes");
    debug_assert!(regular.is_m_regular(m));
    let flat = phi_inverse(&regular, m)?;
    Ok(flat.conjugate())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;
    use crate::schmidt::{diff_vector, schmidt_weight};
    use std::collections::HashSet;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn m(v: u32) -> Modulus {
        Modulus::new(v).unwrap()
    }

    #[test]
    fn phi_worked_example() {
        let input = part(&[26, 25, 22, 19, 15, 13, 11, 7, 5, 5, 3]);
        let (image, trace) = phi(&input, m(5)).unwrap();
        assert_eq!(image, part(&[41, 27, 24, 23, 21, 12, 3]));
        assert_eq!(trace.mu, part(&[30, 25, 5, 5]));
        assert_eq!(trace.lambda_v, part(&[21, 17, 14, 13, 11, 7, 3]));
        assert_eq!(trace.removed_step1, vec![5, 5, 25]);
        assert_eq!(trace.removed_step2, vec![(15, 30)]);
        assert_eq!(phi_inverse(&image, m(5)).unwrap(), input);
    }

    #[test]
    fn phi_fixes_regular_flat_partitions() {
        let p = part(&[12, 8, 6, 4, 4, 2]);
        let (image, trace) = phi(&p, m(5)).unwrap();
        assert_eq!(image, p);
        assert!(trace.mu.is_empty());
    }

    #[test]
    fn phi_rejects_non_flat() {
        let err = phi(&part(&[6, 1]), m(5)).unwrap_err();
        assert_eq!(
            err,
            Error::NotFlat {
                modulus: 5,
                index: 1
            }
        );
        // final part against zero counts
        let err = phi(&part(&[2, 2]), m(2)).unwrap_err();
        assert_eq!(
            err,
            Error::NotFlat {
                modulus: 2,
                index: 2
            }
        );
    }

    #[test]
    fn phi_smallest_case_by_hand() {
        // m=2, (2,1): pass 1 removes 2 (leaving (1), flat), no pass 2;
        // mu = (2), conj(mu/2) = (1), image = (1) + 2*(1) = (3)
        let (image, trace) = phi(&part(&[2, 1]), m(2)).unwrap();
        assert_eq!(image, part(&[3]));
        assert_eq!(trace.mu, part(&[2]));
        assert_eq!(trace.lambda_v, part(&[1]));
    }

    #[test]
    fn decompose_worked_example() {
        let p = part(&[41, 27, 24, 23, 21, 12, 3]);
        let (lambda_v, mu) = decompose_regular(&p, m(5)).unwrap();
        assert_eq!(lambda_v, part(&[21, 17, 14, 13, 11, 7, 3]));
        assert_eq!(mu, part(&[6, 5, 1, 1]));
        // reassemble
        assert_eq!(lambda_v.plus(&mu.conjugate().scaled(5)), p);
    }

    #[test]
    fn decompose_derived_example() {
        let (lambda_v, mu) = decompose_regular(&part(&[7, 5]), m(3)).unwrap();
        assert_eq!(lambda_v, part(&[4, 2]));
        assert_eq!(mu, part(&[2]));
        let p = part(&[12, 8, 6, 4, 4, 2]);
        let (lv, mu) = decompose_regular(&p, m(5)).unwrap();
        assert_eq!(lv, p);
        assert!(mu.is_empty());
    }

    #[test]
    fn phi_bijection_exhaustive_small() {
        // m in 2..=6, n <= 18 here; the acceptance suite pushes to 25
        for modulus in 2..=6u32 {
            let mm = m(modulus);
            for n in 0..=18u32 {
                let mut images = HashSet::new();
                let mut flat_count = 0u32;
                let mut regular_count = 0u32;
                for p in partitions_of(n) {
                    if p.is_m_regular(mm) {
                        regular_count += 1;
                    }
                    if !p.is_m_flat(mm) {
                        continue;
                    }
                    flat_count += 1;
                    let (image, _) = phi(&p, mm).unwrap();
                    assert!(image.is_m_regular(mm));
                    assert_eq!(image.weight(), p.weight());
                    assert!(images.insert(image.clone()), "phi not injective");
                    assert_eq!(phi_inverse(&image, mm).unwrap(), p, "round trip failed");
                }
                assert_eq!(flat_count, regular_count, "m={modulus} n={n}");
            }
        }
    }

    #[test]
    fn phi_inverse_requires_regular() {
        let err = phi_inverse(&part(&[10, 2]), m(5)).unwrap_err();
        assert_eq!(
            err,
            Error::NotRegular {
                modulus: 5,
                index: 1
            }
        );
    }

    #[test]
    fn colored_worked_example() {
        let schmidt = part(&[
            11, 11, 11, 10, 10, 8, 8, 7, 7, 7, 7, 6, 6, 5, 5, 4, 4, 4, 4, 3, 3, 3, 2, 2, 2, 1,
        ]);
        let spec = SchmidtSpec::new(5, vec![1, 2, 3]).unwrap();
        let colored = schmidt_to_colored(&schmidt, &spec).unwrap();
        let want = ColoredPartition::from_sorted(vec![
            ColoredPart { size: 25, color: 1 },
            ColoredPart { size: 17, color: 2 },
            ColoredPart { size: 15, color: 4 },
            ColoredPart { size: 15, color: 3 },
            ColoredPart { size: 13, color: 1 },
            ColoredPart { size: 8, color: 2 },
            ColoredPart { size: 3, color: 3 },
        ]);
        assert_eq!(colored, want);
        assert_eq!(colored.weight(), 96);
        assert_eq!(colored.weight(), schmidt_weight(&schmidt, &spec));
        assert_eq!(
            colored.color_multiplicities(spec.color_count()),
            vec![2, 2, 2, 1]
        );
        assert_eq!(
            diff_vector(&schmidt, m(5)).0,
            colored.color_multiplicities(spec.color_count())
        );
        assert_eq!(colored_to_schmidt(&colored, &spec).unwrap(), schmidt);
    }

    #[test]
    fn colored_empty() {
        let spec = SchmidtSpec::new(4, vec![1, 3]).unwrap();
        let colored = schmidt_to_colored(&Partition::empty(), &spec).unwrap();
        assert!(colored.is_empty());
        assert_eq!(
            colored_to_schmidt(&colored, &spec).unwrap(),
            Partition::empty()
        );
    }

    #[test]
    fn schmidt_to_colored_rejects_repeats() {
        let spec = SchmidtSpec::new(3, vec![1, 2]).unwrap();
        let err = schmidt_to_colored(&part(&[2, 2, 2]), &spec).unwrap_err();
        assert_eq!(
            err,
            Error::NotDistinct {
                modulus: 3,
                size: 2
            }
        );
    }

    #[test]
    fn colored_map_single_color_case() {
        // m=2, S={1}: images over 2-distinct partitions with Schmidt weight 4
        // are exactly the p(4) = 5 one-color partitions of 4
        let spec = SchmidtSpec::new(2, vec![1]).unwrap();
        let sources = crate::schmidt::schmidt_partitions(&spec, 4);
        assert_eq!(sources.len(), 5);
        let mut images = HashSet::new();
        for p in &sources {
            let c = schmidt_to_colored(p, &spec).unwrap();
            assert_eq!(c.weight(), 4);
            assert!(c.parts().iter().all(|cp| cp.color == 1));
            assert!(images.insert(c.clone()));
            assert_eq!(&colored_to_schmidt(&c, &spec).unwrap(), p);
        }
        assert_eq!(images.len(), 5);
    }

    #[test]
    fn color_preserved_under_shifts_of_m() {
        // adding m to a part moves its reduced size up one full class cycle
        // but never changes the color assignment
        for (mv, s) in [(5u32, vec![1u32, 2, 3]), (4, vec![1, 3]), (3, vec![1])] {
            let spec = SchmidtSpec::new(mv, s).unwrap();
            for x in 1..=60u32 {
                if x % mv == 0 {
                    continue;
                }
                assert_eq!(x % mv, (x + mv) % mv);
                assert_eq!(
                    spec.reduced_size(x + mv),
                    spec.reduced_size(x) + spec.class_count()
                );
            }
        }
    }
}
