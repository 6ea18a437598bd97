//! Dense Laurent polynomials in `q` with exact integer coefficients, and
//! Gaussian binomial/multinomial coefficients built on them.
//!
//! These are the workhorses of the finite identity checks: every quantity is
//! either a genuine polynomial or is cleared to one before comparison, so
//! equality here is exact, not truncated.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A Laurent polynomial: dense coefficients starting at exponent `min`.
/// Normalized so that the first and last stored coefficients are nonzero
/// (the zero polynomial stores nothing).
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    min: i64,
    coeffs: Vec<i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            min: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        LaurentPoly {
            min: 0,
            coeffs: vec![1],
        }
    }

    pub fn monomial(coeff: i64, exp: i64) -> Self {
        if coeff == 0 {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            min: exp,
            coeffs: vec![coeff],
        }
    }

    /// `1 - q^e` (the `e = 0` case collapses to the zero polynomial).
    pub fn one_minus_q(e: i64) -> Self {
        LaurentPoly::one() - LaurentPoly::monomial(1, e)
    }

    /// `1 + q^e`.
    pub fn one_plus_q(e: i64) -> Self {
        LaurentPoly::one() + LaurentPoly::monomial(1, e)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        if exp < self.min {
            return 0;
        }
        self.coeffs
            .get((exp - self.min) as usize)
            .copied()
            .unwrap_or(0)
    }

    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.min)
    }

    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.min + self.coeffs.len() as i64 - 1)
    }

    pub fn shifted(&self, by: i64) -> Self {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            min: self.min + by,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scaled(&self, c: i64) -> Self {
        if c == 0 {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            min: self.min,
            coeffs: self.coeffs.iter().map(|&x| x * c).collect(),
        }
    }

    /// Substitutes `q -> q^s` for `s >= 1` (exponent scaling).
    pub fn exponents_scaled(&self, s: i64) -> Self {
        assert!(s >= 1);
        if self.is_zero() || s == 1 {
            return self.clone();
        }
        let mut coeffs = vec![0i64; (self.coeffs.len() - 1) * s as usize + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i * s as usize] = c;
        }
        LaurentPoly {
            min: self.min * s,
            coeffs,
        }
        .normalized()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c != 0)
            .map(|(i, &c)| (self.min + i as i64, c))
    }

    /// First exponent (lowest first) where the two polynomials differ.
    pub fn first_difference(&self, other: &LaurentPoly) -> Option<(i64, i64, i64)> {
        let lo = match (self.min_exp(), other.min_exp()) {
            (None, None) => return None,
            (a, b) => a.into_iter().chain(b).min().unwrap(),
        };
        let hi = self
            .max_exp()
            .into_iter()
            .chain(other.max_exp())
            .max()
            .unwrap();
        (lo..=hi).find_map(|e| {
            let (a, b) = (self.coeff(e), other.coeff(e));
            (a != b).then_some((e, a, b))
        })
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let leading_zeros = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if leading_zeros > 0 {
            self.coeffs.drain(..leading_zeros);
            self.min += leading_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.min = 0;
        }
        self
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let min = self.min.min(rhs.min);
        let max = self.max_exp().unwrap().max(rhs.max_exp().unwrap());
        let mut coeffs = vec![0i64; (max - min + 1) as usize];
        for (e, c) in self.iter().chain(rhs.iter()) {
            coeffs[(e - min) as usize] += c;
        }
        LaurentPoly { min, coeffs }.normalized()
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &(-rhs)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scaled(-1)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly {
            min: self.min + rhs.min,
            coeffs,
        }
        .normalized()
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.iter() {
            if !first {
                write!(f, " {} ", if c < 0 { "-" } else { "+" })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            let a = c.abs();
            match e {
                0 => write!(f, "{a}")?,
                1 if a == 1 => write!(f, "q")?,
                1 => write!(f, "{a}*q")?,
                _ if a == 1 => write!(f, "q^{e}")?,
                _ => write!(f, "{a}*q^{e}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// `(q^a; q^b)_n = prod_{i=0}^{n-1} (1 - q^{a + b*i})` as a Laurent
/// polynomial; `a` may be negative.
pub fn poch_linear(a: i64, b: i64, n: u32) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for i in 0..i64::from(n) {
        acc = &acc * &LaurentPoly::one_minus_q(a + b * i);
    }
    acc
}

/// `(q; q)_n`.
pub fn poch_q(n: u32) -> LaurentPoly {
    poch_linear(1, 1, n)
}

/// `(-q; q)_n = prod_{i=1}^{n} (1 + q^i)`.
pub fn poch_neg_q(n: u32) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for i in 1..=i64::from(n) {
        acc = &acc * &LaurentPoly::one_plus_q(i);
    }
    acc
}

/// Memoizing table of Gaussian binomials in bases `q^step`, plus the
/// multinomials built from them. Out-of-range lower indices give the zero
/// polynomial.
pub struct QBinomialTable {
    cache: HashMap<(u32, u32, u32), LaurentPoly>,
}

impl QBinomialTable {
    pub fn new() -> Self {
        QBinomialTable {
            cache: HashMap::new(),
        }
    }

    /// `[n over k]_q`.
    pub fn binomial(&mut self, n: i64, k: i64) -> LaurentPoly {
        self.binomial_base(n, k, 1)
    }

    /// `[n over k]_{q^step}`.
    pub fn binomial_base(&mut self, n: i64, k: i64, step: u32) -> LaurentPoly {
        assert!(step >= 1);
        assert!(n >= 0, "negative upper index");
        if k < 0 || k > n {
            return LaurentPoly::zero();
        }
        self.binomial_inner(n as u32, k as u32, step)
    }

    fn binomial_inner(&mut self, n: u32, k: u32, step: u32) -> LaurentPoly {
        let k = k.min(n - k); // symmetry
        if k == 0 {
            return LaurentPoly::one();
        }
        if let Some(hit) = self.cache.get(&(n, k, step)) {
            return hit.clone();
        }
        // q-Pascal: [n k] = [n-1 k-1] + Q^k [n-1 k], Q = q^step
        let a = self.binomial_inner(n - 1, k - 1, step);
        let b = self.binomial_inner(n - 1, k.min(n - 1 - k), step);
        let result = &a + &b.shifted(i64::from(step) * i64::from(k));
        self.cache.insert((n, k, step), result.clone());
        result
    }

    /// `[b_1 + ... + b_r over b_1, ..., b_r]_q`, zero if any index is
    /// negative.
    pub fn multinomial(&mut self, parts: &[i64]) -> LaurentPoly {
        if parts.iter().any(|&b| b < 0) {
            return LaurentPoly::zero();
        }
        let mut acc = LaurentPoly::one();
        let mut total = 0i64;
        for &b in parts {
            total += b;
            acc = &acc * &self.binomial(total, b);
        }
        acc
    }

    /// `(q;q)_n / prod (q;q)_{a_i}` for nonnegative `a_i` with sum `<= n`:
    /// the multinomial over the `a_i` times the cofactor
    /// `prod_{j=s+1}^{n} (1 - q^j)`. Zero if any `a_i` is negative.
    pub fn pochhammer_ratio(&mut self, n: u32, lower: &[i64]) -> LaurentPoly {
        if lower.iter().any(|&a| a < 0) {
            return LaurentPoly::zero();
        }
        let s: i64 = lower.iter().sum();
        assert!(
            s <= i64::from(n),
            "pochhammer_ratio needs sum of lower indices <= n"
        );
        let mut acc = self.multinomial(lower);
        for j in s + 1..=i64::from(n) {
            acc = &acc * &LaurentPoly::one_minus_q(j);
        }
        acc
    }
}

impl Default for QBinomialTable {
    fn default() -> Self {
        Self::new()
    }
}
