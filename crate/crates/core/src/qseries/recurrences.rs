//! Generating-function recurrences for bounded-multiplicity partitions with
//! periodic counted places, their polynomial numerators, and the closed
//! forms those numerators satisfy.
//!
//! For the one-tracker family with modulus `k`, the substituted step
//! monomials are `X_i = q^{i - floor(i/k)} t^{[k does not divide i]}`; the
//! full generating functions obey
//! `P_N = (X_{N-1} P_{N-1} + ... + X_{N-k+1} P_{N-k+1}) / (1 - X_N)` with
//! `P_0 = 1` (the shorter sums at small `N` reproduce the closed initial
//! values). Numerators `pi_N = P_N * prod (1 - X_i)` satisfy the matching
//! polynomial recurrence and are computed without any division.
//!
//! The two-tracker modulus-3 family uses `Y_i = q^{ceil(i/3)} * t(i)` with
//! `t(i) = t1, t2, 1` as `i = 1, 2, 0 mod 3`; its numerator is `kappa_N`.

use super::laurent::QBinomialTable;
use super::series::{geometric, pochhammer, Caps, Mono, PochLength, Series};

/// Exponent pair of `X_i` in the one-tracker modulus-`k` family.
pub fn x_mono(k: u32, i: u32) -> Mono {
    assert!(k >= 2);
    let q = i - i / k;
    let t = u32::from(!i.is_multiple_of(k));
    Mono::new(q, t, 0, 0)
}

/// `Y_i` in the two-tracker modulus-3 family.
pub fn y_mono(i: u32) -> Mono {
    let q = i.div_ceil(3);
    match i % 3 {
        1 => Mono::new(q, 0, 1, 0),
        2 => Mono::new(q, 0, 0, 1),
        _ => Mono::new(q, 0, 0, 0),
    }
}

fn binom2(x: u64) -> u64 {
    x * (x.saturating_sub(1)) / 2
}

/// `P_n` for the one-tracker modulus-`k` family, truncated at `order` with
/// tracker cap `cap_t`.
pub fn p_family(k: u32, n: u32, order: u32, cap_t: u32) -> Series {
    let caps = Caps {
        t: cap_t,
        t1: 0,
        t2: 0,
    };
    let mut table: Vec<Series> = Vec::with_capacity(n as usize + 1);
    table.push(Series::one(order, caps));
    for j in 1..=n {
        let mut numer = Series::zero(order, caps);
        for r in 1..=(k - 1).min(j) {
            let idx = j - r;
            let term = table[idx as usize].mul_mono(1, x_mono(k, idx));
            numer = numer.add(&term);
        }
        let inv = geometric(1, x_mono(k, j), order, caps);
        table.push(numer.mul(&inv));
    }
    table.pop().expect("table is nonempty")
}

/// `Q_n` for the two-tracker family.
pub fn q_family(n: u32, order: u32, caps: Caps) -> Series {
    let mut table: Vec<Series> = Vec::with_capacity(n as usize + 1);
    table.push(Series::one(order, caps));
    for j in 1..=n {
        let mut numer = Series::zero(order, caps);
        for r in 1..=2.min(j) {
            let idx = j - r;
            let term = table[idx as usize].mul_mono(1, y_mono(idx));
            numer = numer.add(&term);
        }
        let inv = geometric(1, y_mono(j), order, caps);
        table.push(numer.mul(&inv));
    }
    table.pop().expect("table is nonempty")
}

/// `sum over N of P_{kN}`: the full two-variable generating function of the
/// modulus-`k` Schmidt family. A partition with `kN` nonnegative parts and
/// multiplicities below `k` has at least `kN - (k-1)` positive parts and so
/// at least `(k-1)(N-1) + 1` counted positive places; the sum is cut once
/// that lower bound exceeds `order`.
pub fn p_family_sum(k: u32, order: u32, cap_t: u32) -> Series {
    let caps = Caps {
        t: cap_t,
        t1: 0,
        t2: 0,
    };
    let mut acc = Series::zero(order, caps);
    let mut n = 0u32;
    loop {
        if n > 0 && u64::from(k - 1) * u64::from(n - 1) + 1 > u64::from(order) {
            break;
        }
        let term = p_family(k, k * n, order, cap_t);
        if n > 0 {
            debug_assert!(term.min_q_degree().is_none_or(|d| {
                u64::from(d) > u64::from(k - 1) * u64::from(n - 1)
            }));
        }
        acc = acc.add(&term);
        n += 1;
    }
    acc
}

/// `sum over N of Q_{3N}`; a partition with `3N` parts contributes `q`-degree
/// at least `N`.
pub fn q_family_sum(order: u32, caps: Caps) -> Series {
    let mut acc = Series::zero(order, caps);
    for n in 0..=order {
        acc = acc.add(&q_family(3 * n, order, caps));
    }
    acc
}

const POLY_ORDER: u32 = super::series::POLY_BOUND;

fn poly_caps() -> Caps {
    Caps::unbounded_poly()
}

/// Numerator `pi_n` of the modulus-`k` family: exact polynomial, computed by
/// the full (unreduced) recurrence
/// `pi_n = X_{n-1} pi_{n-1} + sum_{r=2}^{k-1} X_{n-r} (1-X_{n-1})...(1-X_{n-r+1}) pi_{n-r}`
/// with `pi_0 = ... = pi_{k-1} = 1`.
pub fn pi_poly(k: u32, n: u32) -> Series {
    let caps = poly_caps();
    let one = Series::one(POLY_ORDER, caps);
    let mut table: Vec<Series> = Vec::with_capacity(n as usize + 1);
    for j in 0..=n {
        if j < k {
            table.push(one.clone());
            continue;
        }
        let mut acc = table[(j - 1) as usize].mul_mono(1, x_mono(k, j - 1));
        let mut guard = one.clone();
        for r in 2..=(k - 1) {
            guard = guard.mul(&one.sub(&Series::monomial(
                1,
                x_mono(k, j - (r - 1)),
                POLY_ORDER,
                caps,
            )));
            let term = table[(j - r) as usize]
                .mul_mono(1, x_mono(k, j - r))
                .mul(&guard);
            acc = acc.add(&term);
        }
        table.push(acc);
    }
    table.pop().expect("table is nonempty")
}

/// The same numerator via the telescoped two-term recurrence
/// `pi_n = pi_{n-1} - X_{n-k} (1-X_{n-1})...(1-X_{n-k+1}) pi_{n-k}`,
/// obtained by expanding `pi_{n-1}` inside the full recurrence. (The sign
/// and the trailing factor follow from that expansion.)
pub fn pi_poly_reduced(k: u32, n: u32) -> Series {
    let caps = poly_caps();
    let one = Series::one(POLY_ORDER, caps);
    let mut table: Vec<Series> = Vec::with_capacity(n as usize + 1);
    for j in 0..=n {
        if j < k {
            table.push(one.clone());
            continue;
        }
        let mut guard = one.clone();
        for s in 1..=(k - 1) {
            guard = guard.mul(&one.sub(&Series::monomial(
                1,
                x_mono(k, j - s),
                POLY_ORDER,
                caps,
            )));
        }
        let drop = table[(j - k) as usize]
            .mul_mono(1, x_mono(k, j - k))
            .mul(&guard);
        table.push(table[(j - 1) as usize].sub(&drop));
    }
    table.pop().expect("table is nonempty")
}

/// Numerator `kappa_n` of the two-tracker family:
/// `kappa_n = Y_{n-1} kappa_{n-1} + (1 - Y_{n-1}) Y_{n-2} kappa_{n-2}`,
/// `kappa_0 = kappa_1 = kappa_2 = 1`.
pub fn kappa_poly(n: u32) -> Series {
    let caps = poly_caps();
    let one = Series::one(POLY_ORDER, caps);
    let mut table: Vec<Series> = Vec::with_capacity(n as usize + 1);
    for j in 0..=n {
        if j < 3 {
            table.push(one.clone());
            continue;
        }
        let a = table[(j - 1) as usize].mul_mono(1, y_mono(j - 1));
        let guard = one.sub(&Series::monomial(1, y_mono(j - 1), POLY_ORDER, caps));
        let b = table[(j - 2) as usize]
            .mul_mono(1, y_mono(j - 2))
            .mul(&guard);
        table.push(a.add(&b));
    }
    table.pop().expect("table is nonempty")
}

/// Closed form for the modulus-3 numerator at index `3n + r`:
/// `sum_{j=0}^{n} (-1)^j q^{n^2-n+r(n+j)+binom(j+n+1,2)} (-q;q)_{n-j} [n over j]_{q^2} t^{j+n}`.
pub fn pi3_closed(index: u32) -> Series {
    let caps = poly_caps();
    let n = index / 3;
    let r = index % 3;
    let mut table = QBinomialTable::new();
    let mut acc = Series::zero(POLY_ORDER, caps);
    for j in 0..=n {
        let e = u64::from(n) * u64::from(n) - u64::from(n)
            + u64::from(r) * u64::from(n + j)
            + binom2(u64::from(j + n + 1));
        let poly = &super::laurent::poch_neg_q(n - j)
            * &table.binomial_base(i64::from(n), i64::from(j), 2);
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let mono = Mono::new(u32::try_from(e).expect("exponent fits"), j + n, 0, 0);
        acc = acc.add(&Series::from_laurent(&poly, sign, mono, POLY_ORDER, caps));
    }
    acc
}

/// Closed form for the two-tracker numerator: at index `3N`,
/// `sum over j,k <= N, j+k >= N of t1^j t2^k (-1)^{j+k-N}
///  q^{binom(N,2)+binom(j+1,2)+binom(k+1,2)} [N over N-j, N-k, j+k-N]_q`;
/// index `3N+1` substitutes `t1 -> t1 q`, index `3N+2` also `t2 -> t2 q`.
pub fn kappa_closed(index: u32) -> Series {
    let caps = poly_caps();
    let n = index / 3;
    let r = index % 3;
    let mut table = QBinomialTable::new();
    let mut acc = Series::zero(POLY_ORDER, caps);
    for j in 0..=n {
        for k in 0..=n {
            if j + k < n {
                continue;
            }
            let e = binom2(u64::from(n))
                + binom2(u64::from(j + 1))
                + binom2(u64::from(k + 1));
            let poly = table.multinomial(&[
                i64::from(n - j),
                i64::from(n - k),
                i64::from(j + k - n),
            ]);
            let sign = if (j + k - n).is_multiple_of(2) { 1 } else { -1 };
            let mono = Mono::new(u32::try_from(e).expect("exponent fits"), 0, j, k);
            acc = acc.add(&Series::from_laurent(&poly, sign, mono, POLY_ORDER, caps));
        }
    }
    match r {
        0 => acc,
        1 => acc.shift_trackers_by_q(1, 0),
        _ => acc.shift_trackers_by_q(1, 1),
    }
}

/// Coefficient `c(kN+r, i)` of `t^i` in the general modulus-`k` numerator:
/// `sum_{j=0}^{N} (-1)^{N+i+j} q^{(k-1)(binom(N-j,2)+ij)+binom(i+1,2)+ir}
///  [(k-1)(N-j) over i]_q [N over j]_{q^{k-1}}` for `N <= i <= (k-1)N`.
pub fn genlemma_coefficient(
    k: u32,
    n_outer: u32,
    r: u32,
    i: u32,
    table: &mut QBinomialTable,
) -> super::laurent::LaurentPoly {
    assert!(n_outer <= i && i <= (k - 1) * n_outer || (n_outer == 0 && i == 0));
    let mut acc = super::laurent::LaurentPoly::zero();
    for j in 0..=n_outer {
        let top = i64::from((k - 1) * (n_outer - j));
        let b1 = table.binomial(top, i64::from(i));
        if b1.is_zero() {
            continue;
        }
        let b2 = table.binomial_base(i64::from(n_outer), i64::from(j), k - 1);
        let e = u64::from(k - 1)
            * (binom2(u64::from(n_outer - j)) + u64::from(i) * u64::from(j))
            + binom2(u64::from(i + 1))
            + u64::from(i) * u64::from(r);
        let sign = if (n_outer + i + j).is_multiple_of(2) { 1 } else { -1 };
        acc = acc + (&b1 * &b2).shifted(e as i64).scaled(sign);
    }
    acc
}

/// Closed form `pi_{kN+r} = sum_{i=N}^{(k-1)N} t^i c(kN+r, i)` for the
/// general modulus-`k` family.
pub fn genlemma_closed(k: u32, index: u32) -> Series {
    let caps = poly_caps();
    let n = index / k;
    let r = index % k;
    let mut table = QBinomialTable::new();
    let mut acc = Series::zero(POLY_ORDER, caps);
    for i in n..=(k - 1) * n {
        let poly = genlemma_coefficient(k, n, r, i, &mut table);
        acc = acc.add(&Series::from_laurent(
            &poly,
            1,
            Mono::t(i),
            POLY_ORDER,
            caps,
        ));
    }
    acc
}

/// Denominator `prod_{i=1}^{n} (1 - X_i)` of the one-tracker family.
pub fn p_denominator(k: u32, n: u32, order: u32, cap_t: u32) -> Series {
    let caps = Caps {
        t: cap_t,
        t1: 0,
        t2: 0,
    };
    let mut acc = Series::one(order, caps);
    for i in 1..=n {
        acc = acc.mul(&Series::one(order, caps).sub(&Series::monomial(
            1,
            x_mono(k, i),
            order,
            caps,
        )));
    }
    acc
}

/// Denominator `prod_{i=1}^{n} (1 - Y_i)` of the two-tracker family.
pub fn q_denominator(n: u32, order: u32, caps: Caps) -> Series {
    let mut acc = Series::one(order, caps);
    for i in 1..=n {
        acc = acc.mul(&Series::one(order, caps).sub(&Series::monomial(
            1,
            y_mono(i),
            order,
            caps,
        )));
    }
    acc
}

/// The product form of the modulus-3 denominator at index `3N`:
/// `(tq;q)_{2N} (q^2;q^2)_N`.
pub fn p3_denominator_product(n_outer: u32, order: u32, cap_t: u32) -> Series {
    let caps = Caps {
        t: cap_t,
        t1: 0,
        t2: 0,
    };
    let a = pochhammer(
        1,
        Mono::new(1, 1, 0, 0),
        1,
        PochLength::Finite(i64::from(2 * n_outer)),
        order,
        caps,
    );
    let b = pochhammer(
        1,
        Mono::q(2),
        2,
        PochLength::Finite(i64::from(n_outer)),
        order,
        caps,
    );
    a.mul(&b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::padded_partitions;

    #[test]
    fn x_substitution_values() {
        // k = 3: X_i = q^{ceil(2i/3)} t^{chi_3(i)}
        let expect = [
            (0u32, 0u32),
            (1, 1),
            (2, 1),
            (2, 0),
            (3, 1),
            (4, 1),
            (4, 0),
            (5, 1),
        ];
        for (i, &(q, t)) in expect.iter().enumerate() {
            let m = x_mono(3, i as u32);
            assert_eq!((m.q_exp(), m.t_exp()), (q, t), "X_{i}");
        }
    }

    #[test]
    fn pi_initial_values_and_small_case() {
        let caps = poly_caps();
        let one = Series::one(POLY_ORDER, caps);
        for idx in 0..3 {
            assert_eq!(pi_poly(3, idx), one);
        }
        // pi_3 = X_2 + X_1 - X_1 X_2 = q^2 t + q t - q^3 t^2
        let pi3 = pi_poly(3, 3);
        assert_eq!(pi3.coeff(Mono::new(2, 1, 0, 0)), 1);
        assert_eq!(pi3.coeff(Mono::new(1, 1, 0, 0)), 1);
        assert_eq!(pi3.coeff(Mono::new(3, 2, 0, 0)), -1);
        assert_eq!(pi3.term_count(), 3);
    }

    #[test]
    fn reduced_recurrence_matches_full() {
        for k in 2..=5u32 {
            for n in 0..=12u32 {
                assert_eq!(
                    pi_poly(k, n).first_difference(&pi_poly_reduced(k, n)),
                    None,
                    "k={k} n={n}"
                );
            }
        }
    }

    #[test]
    fn pi3_closed_form_initial_values() {
        let caps = poly_caps();
        let one = Series::one(POLY_ORDER, caps);
        for idx in 0..3 {
            assert_eq!(pi3_closed(idx), one, "pi_{idx}");
        }
    }

    #[test]
    fn pi3_closed_matches_recurrence_small() {
        for idx in 0..=9u32 {
            assert_eq!(
                pi3_closed(idx).first_difference(&pi_poly(3, idx)),
                None,
                "index {idx}"
            );
        }
    }

    #[test]
    fn kappa_closed_matches_recurrence_small() {
        for idx in 0..=9u32 {
            assert_eq!(
                kappa_closed(idx).first_difference(&kappa_poly(idx)),
                None,
                "index {idx}"
            );
        }
    }

    #[test]
    fn genlemma_matches_recurrence_small() {
        for k in 3..=4u32 {
            for idx in 0..=8u32 {
                assert_eq!(
                    genlemma_closed(k, idx).first_difference(&pi_poly(k, idx)),
                    None,
                    "k={k} index {idx}"
                );
            }
        }
    }

    #[test]
    fn p_family_counts_padded_partitions() {
        // P_N for k=3 counts weakly decreasing N-tuples >= 0, no value
        // appearing 3 times, graded by counted places and the alternating
        // statistic
        let order = 12;
        let n = 5u32;
        let p = p_family(3, n, order, 12);
        let mut expect = std::collections::HashMap::<(u32, u32), i64>::new();
        for padded in padded_partitions(n as usize, order, 2) {
            let q_exp: u32 = (1..=n as usize)
                .filter(|pos| pos % 3 != 0)
                .map(|pos| padded.part(pos))
                .sum();
            let t_exp: u32 = (0..)
                .take_while(|j| 3 * j < n as usize)
                .map(|j| padded.part(3 * j + 1) - padded.part(3 * j + 3))
                .sum();
            if q_exp <= order {
                *expect.entry((q_exp, t_exp)).or_insert(0) += 1;
            }
        }
        for ((q_exp, t_exp), count) in expect {
            if t_exp <= 12 {
                assert_eq!(
                    p.coeff(Mono::new(q_exp, t_exp, 0, 0)),
                    count,
                    "q^{q_exp} t^{t_exp}"
                );
            }
        }
    }

    #[test]
    fn p_equals_pi_over_denominator() {
        let order = 20;
        for n in 0..=5u32 {
            let p = p_family(3, 3 * n, order, order);
            let lhs = p.mul(&p3_denominator_product(n, order, order));
            let rhs = pi_poly(3, 3 * n).truncated(order);
            assert_eq!(lhs.first_difference(&rhs), None, "N={n}");
        }
    }

    #[test]
    fn q_family_zero_tracker_level_is_origin_only() {
        let order = 10;
        let caps = Caps {
            t: 0,
            t1: 8,
            t2: 8,
        };
        let total = q_family_sum(order, caps);
        for q in 0..=order {
            let expect = i64::from(q == 0);
            assert_eq!(total.coeff(Mono::q(q)), expect, "q^{q} at level (0,0)");
        }
    }

    #[test]
    fn kappa_small_case_by_hand() {
        // kappa_3 = Y_2 + Y_1 - Y_1 Y_2 = q t2 + q t1 - q^2 t1 t2
        let k3 = kappa_poly(3);
        assert_eq!(k3.coeff(Mono::new(1, 0, 0, 1)), 1);
        assert_eq!(k3.coeff(Mono::new(1, 0, 1, 0)), 1);
        assert_eq!(k3.coeff(Mono::new(2, 0, 1, 1)), -1);
        assert_eq!(k3.term_count(), 3);
    }
}
