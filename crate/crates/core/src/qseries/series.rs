//! Truncated formal power series in `q` with tracker variables `t`, `t1`,
//! `t2` and exact integer coefficients.
//!
//! The q-truncation order and the per-tracker caps are part of every series
//! value; arithmetic takes the minimum of the operands' bounds and never
//! widens them. All exponents are nonnegative, so dropping monomials above
//! the bounds is a ring quotient and low-order coefficients stay exact.

use super::laurent::LaurentPoly;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// A monomial `q^a t^b t1^c t2^d`, packed for cheap ordering (q-major).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono(u64);

const LIMB: u64 = 0xFFFF;

impl Mono {
    pub fn new(q: u32, t: u32, t1: u32, t2: u32) -> Self {
        debug_assert!(
            q <= LIMB as u32 && t <= LIMB as u32 && t1 <= LIMB as u32 && t2 <= LIMB as u32
        );
        Mono((u64::from(q) << 48) | (u64::from(t) << 32) | (u64::from(t1) << 16) | u64::from(t2))
    }

    pub fn one() -> Self {
        Mono(0)
    }

    pub fn q(e: u32) -> Self {
        Mono::new(e, 0, 0, 0)
    }

    pub fn t(e: u32) -> Self {
        Mono::new(0, e, 0, 0)
    }

    pub fn t1(e: u32) -> Self {
        Mono::new(0, 0, e, 0)
    }

    pub fn t2(e: u32) -> Self {
        Mono::new(0, 0, 0, e)
    }

    pub fn q_exp(self) -> u32 {
        (self.0 >> 48) as u32
    }

    pub fn t_exp(self) -> u32 {
        ((self.0 >> 32) & LIMB) as u32
    }

    pub fn t1_exp(self) -> u32 {
        ((self.0 >> 16) & LIMB) as u32
    }

    pub fn t2_exp(self) -> u32 {
        (self.0 & LIMB) as u32
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    fn product(self, other: Mono) -> Mono {
        // exponentwise sums; limbs cannot carry because factors are bounded
        // by order/caps <= 0xFFFF/2 wherever products are formed
        Mono(self.0 + other.0)
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (name, e) in [
            ("q", self.q_exp()),
            ("t", self.t_exp()),
            ("t1", self.t1_exp()),
            ("t2", self.t2_exp()),
        ] {
            if e > 0 {
                if wrote {
                    write!(f, "*")?;
                }
                if e == 1 {
                    write!(f, "{name}")?;
                } else {
                    write!(f, "{name}^{e}")?;
                }
                wrote = true;
            }
        }
        if !wrote {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Per-tracker exponent caps.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Caps {
    pub t: u32,
    pub t1: u32,
    pub t2: u32,
}

pub const DEFAULT_TRACKER_CAP: u32 = 32;

/// Bound usable when a computation is known to be a polynomial and must not
/// be truncated (fits the packed-exponent budget with room for products).
pub const POLY_BOUND: u32 = 0x7FFF;

impl Caps {
    pub fn uniform(cap: u32) -> Self {
        Caps {
            t: cap,
            t1: cap,
            t2: cap,
        }
    }

    pub fn unbounded_poly() -> Self {
        Caps::uniform(POLY_BOUND)
    }

    fn min(self, other: Caps) -> Caps {
        Caps {
            t: self.t.min(other.t),
            t1: self.t1.min(other.t1),
            t2: self.t2.min(other.t2),
        }
    }

    fn admits(self, m: Mono) -> bool {
        m.t_exp() <= self.t && m.t1_exp() <= self.t1 && m.t2_exp() <= self.t2
    }
}

impl Default for Caps {
    fn default() -> Self {
        Caps::uniform(DEFAULT_TRACKER_CAP)
    }
}

/// Truncated series: exact integer coefficients on monomials with
/// `q`-exponent at most `order` and tracker exponents within `caps`.
#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    order: u32,
    caps: Caps,
    coeffs: BTreeMap<Mono, i64>,
}

impl Series {
    pub fn zero(order: u32, caps: Caps) -> Self {
        // packed 16-bit limbs cannot carry as long as exponents stay below
        // half the limb range
        assert!(order <= POLY_BOUND);
        assert!(caps.t <= POLY_BOUND && caps.t1 <= POLY_BOUND && caps.t2 <= POLY_BOUND);
        Series {
            order,
            caps,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(order: u32, caps: Caps) -> Self {
        Series::monomial(1, Mono::one(), order, caps)
    }

    pub fn monomial(coeff: i64, m: Mono, order: u32, caps: Caps) -> Self {
        let mut s = Series::zero(order, caps);
        if coeff != 0 && m.q_exp() <= order && caps.admits(m) {
            s.coeffs.insert(m, coeff);
        }
        s
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, m: Mono) -> i64 {
        self.coeffs.get(&m).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Mono, i64)> + '_ {
        self.coeffs.iter().map(|(&m, &c)| (m, c))
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    pub fn min_q_degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|m| m.q_exp()).min()
    }

    pub fn add(&self, other: &Series) -> Series {
        let mut out = Series::zero(self.order.min(other.order), self.caps.min(other.caps));
        for (m, c) in self.iter().chain(other.iter()) {
            if m.q_exp() <= out.order && out.caps.admits(m) {
                let slot = out.coeffs.entry(m).or_insert(0);
                *slot += c;
                if *slot == 0 {
                    out.coeffs.remove(&m);
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Series) -> Series {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Series {
        self.scale(-1)
    }

    pub fn scale(&self, c: i64) -> Series {
        let mut out = Series::zero(self.order, self.caps);
        if c != 0 {
            out.coeffs = self.coeffs.iter().map(|(&m, &x)| (m, x * c)).collect();
        }
        out
    }

    pub fn mul(&self, other: &Series) -> Series {
        let order = self.order.min(other.order);
        let caps = self.caps.min(other.caps);
        let mut acc: HashMap<Mono, i64> = HashMap::new();
        for (ma, ca) in self.iter() {
            if ma.q_exp() > order {
                continue;
            }
            for (mb, cb) in other.iter() {
                if ma.q_exp() + mb.q_exp() > order
                    || ma.t_exp() + mb.t_exp() > caps.t
                    || ma.t1_exp() + mb.t1_exp() > caps.t1
                    || ma.t2_exp() + mb.t2_exp() > caps.t2
                {
                    continue;
                }
                *acc.entry(ma.product(mb)).or_insert(0) += ca * cb;
            }
        }
        let mut out = Series::zero(order, caps);
        out.coeffs = acc.into_iter().filter(|&(_, c)| c != 0).collect();
        out
    }

    /// Multiplication by a single monomial.
    pub fn mul_mono(&self, coeff: i64, m: Mono) -> Series {
        let mut out = Series::zero(self.order, self.caps);
        if coeff == 0 {
            return out;
        }
        for (ma, ca) in self.iter() {
            if ma.q_exp() + m.q_exp() > out.order {
                continue;
            }
            let prod = ma.product(m);
            if out.caps.admits(prod) {
                out.coeffs.insert(prod, ca * coeff);
            }
        }
        out
    }

    /// Restricts to a (possibly lower) q-order.
    pub fn truncated(&self, order: u32) -> Series {
        let order = order.min(self.order);
        let mut out = Series::zero(order, self.caps);
        out.coeffs = self
            .iter()
            .filter(|(m, _)| m.q_exp() <= order)
            .collect();
        out
    }

    /// The q-polynomial multiplying the tracker monomial `t^a t1^b t2^c`.
    pub fn tracker_slice(&self, t: u32, t1: u32, t2: u32) -> LaurentPoly {
        let mut poly = LaurentPoly::zero();
        for (m, c) in self.iter() {
            if m.t_exp() == t && m.t1_exp() == t1 && m.t2_exp() == t2 {
                poly = poly + LaurentPoly::monomial(c, i64::from(m.q_exp()));
            }
        }
        poly
    }

    /// Substitutes `t1 -> t1 * q^shift1`, `t2 -> t2 * q^shift2` (each
    /// monomial's q-exponent grows by its tracker exponent times the shift).
    pub fn shift_trackers_by_q(&self, shift1: u32, shift2: u32) -> Series {
        let mut out = Series::zero(self.order, self.caps);
        for (m, c) in self.iter() {
            let q = m.q_exp() + shift1 * m.t1_exp() + shift2 * m.t2_exp();
            if q <= out.order {
                let shifted = Mono::new(q, m.t_exp(), m.t1_exp(), m.t2_exp());
                out.coeffs.insert(shifted, c);
            }
        }
        out
    }

    /// Embeds a Laurent polynomial with nonnegative exponents, multiplied by
    /// `coeff` and the tracker monomial `m`.
    pub fn from_laurent(
        poly: &LaurentPoly,
        coeff: i64,
        m: Mono,
        order: u32,
        caps: Caps,
    ) -> Series {
        let mut out = Series::zero(order, caps);
        if !caps.admits(m) {
            return out;
        }
        for (e, c) in poly.iter() {
            let e = u32::try_from(e).expect("nonnegative exponents required");
            if e + m.q_exp() <= order {
                let mono = Mono::new(e + m.q_exp(), m.t_exp(), m.t1_exp(), m.t2_exp());
                let slot = out.coeffs.entry(mono).or_insert(0);
                *slot += c * coeff;
                if *slot == 0 {
                    out.coeffs.remove(&mono);
                }
            }
        }
        out
    }

    /// First monomial (in q-major order) where two series differ, compared
    /// over the common region (min order, min caps).
    pub fn first_difference(&self, other: &Series) -> Option<(Mono, i64, i64)> {
        let order = self.order.min(other.order);
        let caps = self.caps.min(other.caps);
        let mut monos: Vec<Mono> = self
            .coeffs
            .keys()
            .chain(other.coeffs.keys())
            .copied()
            .filter(|m| m.q_exp() <= order && caps.admits(*m))
            .collect();
        monos.sort_unstable();
        monos.dedup();
        for m in monos {
            let (a, b) = (self.coeff(m), other.coeff(m));
            if a != b {
                return Some((m, a, b));
            }
        }
        None
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 + O(q^{})", self.order + 1);
        }
        for (i, (m, c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " {} ", if c < 0 { "-" } else { "+" })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a == 1 {
                write!(f, "{m:?}")?;
            } else {
                write!(f, "{a}*{m:?}")?;
            }
            if i >= 40 {
                write!(f, " ... ({} terms)", self.term_count())?;
                break;
            }
        }
        write!(f, " + O(q^{})", self.order + 1)
    }
}

/// Length argument of a Pochhammer symbol.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PochLength {
    Finite(i64),
    Infinite,
}

/// `(a; q^step)_n` where the base monomial is `coeff * m`: the product of
/// `(1 - coeff * m * q^{step*i})` over `i = 0..n`, truncated at `order`.
/// Finite negative lengths are not a series; use [`inv_pochhammer`] for the
/// reciprocal convention.
pub fn pochhammer(
    coeff: i64,
    m: Mono,
    step: u32,
    n: PochLength,
    order: u32,
    caps: Caps,
) -> Series {
    assert!(step >= 1);
    let mut acc = Series::one(order, caps);
    let mut i = 0i64;
    loop {
        match n {
            PochLength::Finite(limit) => {
                assert!(limit >= 0, "finite Pochhammer length must be nonnegative");
                if i >= limit {
                    break;
                }
            }
            PochLength::Infinite => {}
        }
        let q = m.q_exp() as u64 + u64::from(step) * i as u64;
        if q > u64::from(order) {
            // all remaining factors are 1 modulo the truncation
            break;
        }
        let factor_mono = Mono::new(q as u32, m.t_exp(), m.t1_exp(), m.t2_exp());
        let factor = Series::one(order, caps).sub(&Series::monomial(coeff, factor_mono, order, caps));
        acc = acc.mul(&factor);
        i += 1;
    }
    acc
}

/// `1 / (1 - coeff * m)` as the geometric series, truncated.
pub fn geometric(coeff: i64, m: Mono, order: u32, caps: Caps) -> Series {
    assert!(!m.is_one(), "cannot invert 1 - c at c != 0");
    if coeff == 0 {
        return Series::one(order, caps);
    }
    let mut acc = Series::zero(order, caps);
    let mut power = Mono::one();
    let mut c = 1i64;
    loop {
        if power.q_exp() > order || !caps.admits(power) {
            break;
        }
        acc.coeffs.insert(power, c);
        power = power.product(m);
        c *= coeff;
    }
    acc
}

/// `1 / (a; q^step)_n` with the standard convention: zero for `n < 0`.
pub fn inv_pochhammer(
    coeff: i64,
    m: Mono,
    step: u32,
    n: PochLength,
    order: u32,
    caps: Caps,
) -> Series {
    assert!(step >= 1);
    if let PochLength::Finite(limit) = n {
        if limit < 0 {
            return Series::zero(order, caps);
        }
    }
    let mut acc = Series::one(order, caps);
    let mut i = 0i64;
    loop {
        if let PochLength::Finite(limit) = n {
            if i >= limit {
                break;
            }
        }
        let q = m.q_exp() as u64 + u64::from(step) * i as u64;
        if q > u64::from(order) {
            break;
        }
        let factor_mono = Mono::new(q as u32, m.t_exp(), m.t1_exp(), m.t2_exp());
        if factor_mono.is_one() {
            panic!("non-invertible factor (1 - c) in inv_pochhammer");
        }
        acc = acc.mul(&geometric(coeff, factor_mono, order, caps));
        i += 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn caps() -> Caps {
        Caps::uniform(16)
    }

    #[test]
    fn basic_ring_ops() {
        let order = 10;
        let one_plus_q = Series::one(order, caps()).add(&Series::monomial(1, Mono::q(1), order, caps()));
        let one_minus_q = Series::one(order, caps()).sub(&Series::monomial(1, Mono::q(1), order, caps()));
        let prod = one_plus_q.mul(&one_minus_q);
        let want = Series::one(order, caps()).sub(&Series::monomial(1, Mono::q(2), order, caps()));
        assert_eq!(prod, want);
    }

    #[test]
    fn geometric_expansion() {
        let s = geometric(1, Mono::q(1), 3, caps());
        for e in 0..=3 {
            assert_eq!(s.coeff(Mono::q(e)), 1);
        }
        assert_eq!(s.coeff(Mono::q(4)), 0);
    }

    #[test]
    fn euler_partition_generating_function() {
        // prod 1/(1-q^i): coefficient of q^7 is p(7) = 15
        let order = 12;
        let mut gen = Series::one(order, caps());
        for i in 1..=order {
            gen = gen.mul(&geometric(1, Mono::q(i), order, caps()));
        }
        assert_eq!(gen.coeff(Mono::q(7)), 15);
        for n in 0..=order {
            let expect = partitions_of(n).count() as i64;
            assert_eq!(gen.coeff(Mono::q(n)), expect, "p({n})");
        }
    }

    #[test]
    fn pochhammer_finite_and_empty() {
        // (q;q)_0 = 1
        let s = pochhammer(1, Mono::q(1), 1, PochLength::Finite(0), 10, caps());
        assert_eq!(s, Series::one(10, caps()));
        // 1/(q;q)_{-1} = 0
        let z = inv_pochhammer(1, Mono::q(1), 1, PochLength::Finite(-1), 10, caps());
        assert!(z.is_zero());
    }

    #[test]
    fn euler_expansion_of_tq_infinite_product() {
        // (tq;q)_inf = sum_m (-1)^m q^{binom(m+1,2)} t^m / (q;q)_m
        let order = 10;
        let lhs = pochhammer(1, Mono::new(1, 1, 0, 0), 1, PochLength::Infinite, order, caps());
        let mut rhs = Series::zero(order, caps());
        let mut m = 0u32;
        loop {
            let e = m * (m + 1) / 2;
            if e > order {
                break;
            }
            let sign = if m.is_multiple_of(2) { 1 } else { -1 };
            let term = Series::monomial(sign, Mono::new(e, m, 0, 0), order, caps()).mul(
                &inv_pochhammer(1, Mono::q(1), 1, PochLength::Finite(i64::from(m)), order, caps()),
            );
            rhs = rhs.add(&term);
            m += 1;
        }
        assert_eq!(lhs.first_difference(&rhs), None);
    }

    #[test]
    fn tracker_caps_are_a_quotient() {
        // computing at a low cap matches truncating a high-cap result
        let order = 8;
        let lo = Caps { t: 3, t1: 0, t2: 0 };
        let hi = Caps { t: 12, t1: 0, t2: 0 };
        let build = |c: Caps| {
            let mut s = Series::one(order, c);
            for i in 1..=4 {
                s = s.mul(&geometric(1, Mono::new(i, 1, 0, 0), order, c));
            }
            s
        };
        let a = build(lo);
        let b = build(hi);
        for (m, c) in a.iter() {
            assert_eq!(c, b.coeff(m));
        }
        for (m, c) in b.iter() {
            if m.t_exp() <= 3 {
                assert_eq!(c, a.coeff(m));
            }
        }
    }

    #[test]
    fn min_rule_on_orders() {
        let a = Series::one(10, caps());
        let b = Series::one(6, caps());
        assert_eq!(a.mul(&b).order(), 6);
        assert_eq!(a.add(&b).order(), 6);
    }

    #[test]
    fn shift_trackers() {
        let order = 10;
        let c = Caps::uniform(8);
        // t1^2 q -> q^{1+2} t1^2
        let s = Series::monomial(3, Mono::new(1, 0, 2, 0), order, c);
        let shifted = s.shift_trackers_by_q(1, 0);
        assert_eq!(shifted.coeff(Mono::new(3, 0, 2, 0)), 3);
    }
}
