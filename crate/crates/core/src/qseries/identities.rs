//! Coefficient-exact checkers for the sum-product identities and finite
//! summation lemmas.
//!
//! Series identities are compared after truncation at a requested order;
//! each unbounded outer summation index is cut only once the term's provable
//! minimal q-degree exceeds the order, and that bound is asserted against
//! the computed term. Finite identities involving `q^{-M}` Pochhammers are
//! cleared to Laurent polynomials (multiplying both sides by the largest
//! finite Pochhammer that appears in a denominator) and compared exactly.

use super::laurent::{poch_linear, poch_neg_q, LaurentPoly, QBinomialTable};
use super::series::{inv_pochhammer, Caps, Mono, PochLength, Series};

fn binom2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

/// First mismatching monomial of a series comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeriesMismatch {
    pub mono: Mono,
    pub lhs: i64,
    pub rhs: i64,
}

fn compare(lhs: &Series, rhs: &Series) -> Option<SeriesMismatch> {
    lhs.first_difference(rhs)
        .map(|(mono, lhs, rhs)| SeriesMismatch { mono, lhs, rhs })
}

/// First mismatching power of a Laurent-polynomial comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolyMismatch {
    pub q_exp: i64,
    pub lhs: i64,
    pub rhs: i64,
}

fn compare_poly(lhs: &LaurentPoly, rhs: &LaurentPoly) -> Option<PolyMismatch> {
    lhs.first_difference(rhs)
        .map(|(q_exp, lhs, rhs)| PolyMismatch { q_exp, lhs, rhs })
}

/// `1/(tq;q)_inf`, the two-variable generating function of partitions graded
/// by size and number of parts.
pub fn all_partitions_by_length(order: u32, cap_t: u32) -> Series {
    let caps = Caps {
        t: cap_t,
        t1: 0,
        t2: 0,
    };
    inv_pochhammer(1, Mono::new(1, 1, 0, 0), 1, PochLength::Infinite, order, caps)
}

/// Sum side of the modulus-3 identity:
/// `sum_{n >= j >= 0} (-1)^j q^{n^2-n+binom(j+n+1,2)} (-q;q)_{n-j} [n over j]_{q^2}
///  t^{j+n} / ((tq;q)_{2n} (q^2;q^2)_n)`.
pub fn f32_sum_side(order: u32, cap_t: u32) -> Series {
    let caps = Caps {
        t: cap_t,
        t1: 0,
        t2: 0,
    };
    let mut table = QBinomialTable::new();
    let mut acc = Series::zero(order, caps);
    let mut n = 0u64;
    // every monomial of the n-th term has q-degree >= n^2 - n
    while n * n - n <= u64::from(order) {
        let mut numer = Series::zero(order, caps);
        for j in 0..=n {
            if j + n > u64::from(cap_t) {
                continue;
            }
            let e = n * n - n + binom2(j + n + 1);
            if e > u64::from(order) {
                continue;
            }
            let poly = &poch_neg_q((n - j) as u32) * &table.binomial_base(n as i64, j as i64, 2);
            let sign = if j % 2 == 0 { 1 } else { -1 };
            let mono = Mono::new(e as u32, (j + n) as u32, 0, 0);
            numer = numer.add(&Series::from_laurent(&poly, sign, mono, order, caps));
        }
        if !numer.is_zero() {
            debug_assert!(numer.min_q_degree().is_none_or(|d| u64::from(d) >= n * n - n));
            let inv_a = inv_pochhammer(
                1,
                Mono::new(1, 1, 0, 0),
                1,
                PochLength::Finite(2 * n as i64),
                order,
                caps,
            );
            let inv_b = inv_pochhammer(
                1,
                Mono::q(2),
                2,
                PochLength::Finite(n as i64),
                order,
                caps,
            );
            acc = acc.add(&numer.mul(&inv_a).mul(&inv_b));
        }
        n += 1;
    }
    acc
}

/// Checks the modulus-3 identity `f32 sum = 1/(tq;q)_inf` to the given order
/// and tracker cap.
pub fn check_identity_f32(order: u32, cap_t: u32) -> Option<SeriesMismatch> {
    compare(
        &f32_sum_side(order, cap_t),
        &all_partitions_by_length(order, cap_t),
    )
}

/// Sum side of the two-color modulus-3 identity:
/// `sum_N sum_{j,k <= N, j+k >= N} t1^j t2^k (-1)^{j+k-N}
///  q^{binom(N,2)+binom(j+1,2)+binom(k+1,2)} [N over N-j,N-k,j+k-N]_q
///  / ((t1 q;q)_N (t2 q;q)_N (q;q)_N)`.
pub fn f31_sum_side(order: u32, cap_t1: u32, cap_t2: u32) -> Series {
    let caps = Caps {
        t: 0,
        t1: cap_t1,
        t2: cap_t2,
    };
    let mut table = QBinomialTable::new();
    let mut acc = Series::zero(order, caps);
    let mut n = 0u64;
    // every monomial of the N-th term has q-degree >= binom(N,2)
    while binom2(n) <= u64::from(order) {
        let mut numer = Series::zero(order, caps);
        for j in 0..=n.min(u64::from(cap_t1)) {
            for k in 0..=n.min(u64::from(cap_t2)) {
                if j + k < n {
                    continue;
                }
                let e = binom2(n) + binom2(j + 1) + binom2(k + 1);
                if e > u64::from(order) {
                    continue;
                }
                let poly = table.multinomial(&[
                    (n - j) as i64,
                    (n - k) as i64,
                    (j + k - n) as i64,
                ]);
                let sign = if (j + k - n).is_multiple_of(2) { 1 } else { -1 };
                let mono = Mono::new(e as u32, 0, j as u32, k as u32);
                numer = numer.add(&Series::from_laurent(&poly, sign, mono, order, caps));
            }
        }
        if !numer.is_zero() {
            debug_assert!(numer.min_q_degree().is_none_or(|d| u64::from(d) >= binom2(n)));
            let inv1 = inv_pochhammer(
                1,
                Mono::new(1, 0, 1, 0),
                1,
                PochLength::Finite(n as i64),
                order,
                caps,
            );
            let inv2 = inv_pochhammer(
                1,
                Mono::new(1, 0, 0, 1),
                1,
                PochLength::Finite(n as i64),
                order,
                caps,
            );
            let inv3 = inv_pochhammer(
                1,
                Mono::q(1),
                1,
                PochLength::Finite(n as i64),
                order,
                caps,
            );
            acc = acc.add(&numer.mul(&inv1).mul(&inv2).mul(&inv3));
        }
        n += 1;
    }
    acc
}

/// Product side `1/((t1 q;q)_inf (t2 q;q)_inf)`: 2-colored partitions graded
/// by parts of each color.
pub fn two_colored_by_lengths(order: u32, cap_t1: u32, cap_t2: u32) -> Series {
    let caps = Caps {
        t: 0,
        t1: cap_t1,
        t2: cap_t2,
    };
    let a = inv_pochhammer(1, Mono::new(1, 0, 1, 0), 1, PochLength::Infinite, order, caps);
    let b = inv_pochhammer(1, Mono::new(1, 0, 0, 1), 1, PochLength::Infinite, order, caps);
    a.mul(&b)
}

pub fn check_identity_f31(order: u32, cap_t1: u32, cap_t2: u32) -> Option<SeriesMismatch> {
    compare(
        &f31_sum_side(order, cap_t1, cap_t2),
        &two_colored_by_lengths(order, cap_t1, cap_t2),
    )
}

/// Sum side of the general modulus-`k` identity:
/// `sum_n [ sum_{i=n}^{(k-1)n} t^i sum_{j=0}^{n} (-1)^{n+i+j}
///  q^{(k-1)(binom(n-j,2)+ij)+binom(i+1,2)} [(k-1)(n-j) over i]_q [n over j]_{q^{k-1}} ]
///  / ((tq;q)_{(k-1)n} (q^{k-1};q^{k-1})_n)`.
pub fn genf_sum_side(k: u32, order: u32, cap_t: u32) -> Series {
    assert!(k >= 2);
    let caps = Caps {
        t: cap_t,
        t1: 0,
        t2: 0,
    };
    let mut table = QBinomialTable::new();
    let mut acc = Series::zero(order, caps);
    let mut n = 0u64;
    // i >= n, so every monomial of the n-th term has q-degree >= binom(n+1,2)
    while binom2(n + 1) <= u64::from(order) {
        let mut numer = Series::zero(order, caps);
        for i in n..=(u64::from(k) - 1) * n {
            if i > u64::from(cap_t) {
                continue;
            }
            for j in 0..=n {
                let top = (u64::from(k) - 1) * (n - j);
                if i > top {
                    continue;
                }
                let e = (u64::from(k) - 1) * (binom2(n - j) + i * j) + binom2(i + 1);
                if e > u64::from(order) {
                    continue;
                }
                let b1 = table.binomial(top as i64, i as i64);
                if b1.is_zero() {
                    continue;
                }
                let b2 = table.binomial_base(n as i64, j as i64, k - 1);
                let sign = if (n + i + j).is_multiple_of(2) { 1 } else { -1 };
                let mono = Mono::new(e as u32, i as u32, 0, 0);
                numer = numer.add(&Series::from_laurent(&(&b1 * &b2), sign, mono, order, caps));
            }
        }
        if !numer.is_zero() {
            debug_assert!(numer
                .min_q_degree()
                .is_none_or(|d| u64::from(d) >= binom2(n + 1)));
            let inv_a = inv_pochhammer(
                1,
                Mono::new(1, 1, 0, 0),
                1,
                PochLength::Finite(((k - 1) as i64) * n as i64),
                order,
                caps,
            );
            let inv_b = inv_pochhammer(
                1,
                Mono::q(k - 1),
                k - 1,
                PochLength::Finite(n as i64),
                order,
                caps,
            );
            acc = acc.add(&numer.mul(&inv_a).mul(&inv_b));
        }
        n += 1;
    }
    acc
}

pub fn check_identity_genf(k: u32, order: u32, cap_t: u32) -> Option<SeriesMismatch> {
    compare(
        &genf_sum_side(k, order, cap_t),
        &all_partitions_by_length(order, cap_t),
    )
}

/// Product side of the initial-segment corollary:
/// `1/((q;q)_inf (q^i;q^i)_inf^{m-i-1})`, a series in `q` alone.
pub fn firsti_product(m: u32, i: u32, order: u32) -> Series {
    assert!(i >= 1 && i < m);
    let caps = Caps::uniform(0);
    let mut acc = inv_pochhammer(1, Mono::q(1), 1, PochLength::Infinite, order, caps);
    for _ in 0..(m - i - 1) {
        acc = acc.mul(&inv_pochhammer(
            1,
            Mono::q(i),
            i,
            PochLength::Infinite,
            order,
            caps,
        ));
    }
    acc
}

/// Two-color-odd/one-color-even product `(-q;q)_inf / (q;q)_inf`
/// (overpartitions).
pub fn overpartition_product(order: u32) -> Series {
    let caps = Caps::uniform(0);
    let numer = super::series::pochhammer(
        -1,
        Mono::q(1),
        1,
        PochLength::Infinite,
        order,
        caps,
    );
    let denom_inv = inv_pochhammer(1, Mono::q(1), 1, PochLength::Infinite, order, caps);
    numer.mul(&denom_inv)
}

/// Terminating `q^{-M}` summation: for integer `M >= 0`,
/// `sum_j (q^{-M};q^2)_j (q^{-M+1};q^2)_j q^{2Mj-j^2} (-1)^j / (q^2;q^2)_j
///  = q^{binom(M,2)}`.
///
/// Terms vanish for `j > floor(M/2)`; both sides are multiplied by
/// `(q^2;q^2)_{floor(M/2)}` and compared as exact Laurent polynomials.
pub fn check_lemma_2phi1(m_param: u32) -> Option<PolyMismatch> {
    let jmax = m_param / 2;
    let mm = i64::from(m_param);
    let mut lhs = LaurentPoly::zero();
    for j in 0..=jmax {
        let jj = i64::from(j);
        let numer = &poch_linear(-mm, 2, j) * &poch_linear(-mm + 1, 2, j);
        if numer.is_zero() {
            continue;
        }
        // (q^2;q^2)_{jmax} / (q^2;q^2)_j
        let mut cofactor = LaurentPoly::one();
        for i in (jj + 1)..=i64::from(jmax) {
            cofactor = &cofactor * &LaurentPoly::one_minus_q(2 * i);
        }
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let term = (&numer * &cofactor).shifted(2 * mm * jj - jj * jj).scaled(sign);
        lhs = lhs + term;
    }
    let rhs = poch_linear(2, 2, jmax).shifted(binom2(u64::from(m_param)) as i64);
    compare_poly(&lhs, &rhs)
}

/// Double-sum evaluation lemma: for `u1, u2 >= 0`, not both zero,
/// `sum_{j,k} q^{(t-j)(u1-j)+(t-k)(u2-k)}
///  / ((q)_{t-j} (q)_{u1-j} (q)_{j+k-t} (q)_{t-k} (q)_{u2-k})
///  = [u1+u2 over t]_q / ((q)_{u1} (q)_{u2})`.
///
/// Both sides are multiplied by `(q;q)_{u1+u2}`, turning every term into a
/// polynomial (the five lower indices sum to at most `u1+u2`).
pub fn check_lemma_lemmab(u1: u32, u2: u32, t: u32) -> Option<PolyMismatch> {
    assert!(u1 + u2 >= 1, "at least one of u1 and u2 must be positive");
    let mut table = QBinomialTable::new();
    let total = u1 + u2;
    let mut lhs = LaurentPoly::zero();
    for j in 0..=u1 {
        for k in 0..=u2 {
            if j > t || k > t || j + k < t {
                continue;
            }
            let lower = [
                i64::from(t - j),
                i64::from(u1 - j),
                i64::from(j + k - t),
                i64::from(t - k),
                i64::from(u2 - k),
            ];
            let ratio = table.pochhammer_ratio(total, &lower);
            let e = i64::from(t - j) * i64::from(u1 - j) + i64::from(t - k) * i64::from(u2 - k);
            lhs = lhs + ratio.shifted(e);
        }
    }
    let rhs = &table.binomial(i64::from(total), i64::from(t))
        * &table.binomial(i64::from(total), i64::from(u1));
    compare_poly(&lhs, &rhs)
}

/// Alternating triple sum: for `u1, u2 >= 0`, not both zero, and `t >= 0`,
/// `sum_{N=0}^{t} sum_{j,k} (-1)^N q^{binom(N,2)+(N-j)(u1-j)+(N-k)(u2-k)}
///  / ((q)_{N-j} (q)_{u1-j} (q)_{j+k-N} (q)_{N-k} (q)_{u2-k})
///  = (-1)^t q^{binom(t+1,2)} [u1+u2-1 over t]_q / ((q)_{u1} (q)_{u2})`.
pub fn check_identity_sum_a(u1: u32, u2: u32, t: u32) -> Option<PolyMismatch> {
    assert!(u1 + u2 >= 1, "at least one of u1 and u2 must be positive");
    let mut table = QBinomialTable::new();
    let total = u1 + u2;
    let mut lhs = LaurentPoly::zero();
    for n in 0..=t {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        for j in 0..=u1.min(n) {
            for k in 0..=u2.min(n) {
                if j + k < n {
                    continue;
                }
                let lower = [
                    i64::from(n - j),
                    i64::from(u1 - j),
                    i64::from(j + k - n),
                    i64::from(n - k),
                    i64::from(u2 - k),
                ];
                let ratio = table.pochhammer_ratio(total, &lower);
                let e = binom2(u64::from(n)) as i64
                    + i64::from(n - j) * i64::from(u1 - j)
                    + i64::from(n - k) * i64::from(u2 - k);
                lhs = lhs + ratio.shifted(e).scaled(sign);
            }
        }
    }
    let sign = if t.is_multiple_of(2) { 1 } else { -1 };
    let rhs = (&table.binomial(i64::from(total) - 1, i64::from(t))
        * &table.binomial(i64::from(total), i64::from(u1)))
        .shifted(binom2(u64::from(t + 1)) as i64)
        .scaled(sign);
    compare_poly(&lhs, &rhs)
}

/// q-Pascal: `[n over k] = [n-1 over k-1] + q^k [n-1 over k]`.
pub fn q_pascal_holds(n: u32, k: u32, table: &mut QBinomialTable) -> Option<PolyMismatch> {
    let lhs = table.binomial(i64::from(n), i64::from(k));
    let rhs = table.binomial(i64::from(n) - 1, i64::from(k) - 1)
        + table
            .binomial(i64::from(n) - 1, i64::from(k))
            .shifted(i64::from(k));
    compare_poly(&lhs, &rhs)
}

/// q-Vandermonde:
/// `sum_j [m over k-j] [n over j] q^{j(m-k+j)} = [m+n over k]`.
pub fn q_vandermonde_holds(
    m: u32,
    n: u32,
    k: u32,
    table: &mut QBinomialTable,
) -> Option<PolyMismatch> {
    let mut lhs = LaurentPoly::zero();
    for j in 0..=k.min(n) {
        let a = table.binomial(i64::from(m), i64::from(k) - i64::from(j));
        if a.is_zero() {
            continue;
        }
        let b = table.binomial(i64::from(n), i64::from(j));
        let e = i64::from(j) * (i64::from(m) - i64::from(k) + i64::from(j));
        lhs = lhs + (&a * &b).shifted(e);
    }
    let rhs = table.binomial(i64::from(m) + i64::from(n), i64::from(k));
    compare_poly(&lhs, &rhs)
}

/// q-binomial theorem:
/// `sum_{n=0}^{N} z^n q^{binom(n+1,2)} [N over n] = (-zq;q)_N`,
/// checked as a two-variable polynomial identity with `z` as the tracker.
pub fn q_binomial_theorem_holds(n_upper: u32) -> Option<SeriesMismatch> {
    let order = u32::try_from(binom2(u64::from(n_upper) + 1)).expect("order fits") + 1;
    let caps = Caps {
        t: n_upper,
        t1: 0,
        t2: 0,
    };
    let mut table = QBinomialTable::new();
    let mut lhs = Series::zero(order, caps);
    for n in 0..=n_upper {
        let e = binom2(u64::from(n) + 1);
        let poly = table.binomial(i64::from(n_upper), i64::from(n));
        lhs = lhs.add(&Series::from_laurent(
            &poly,
            1,
            Mono::new(e as u32, n, 0, 0),
            order,
            caps,
        ));
    }
    let rhs = super::series::pochhammer(
        -1,
        Mono::new(1, 1, 0, 0),
        1,
        PochLength::Finite(i64::from(n_upper)),
        order,
        caps,
    );
    compare(&lhs, &rhs)
}
