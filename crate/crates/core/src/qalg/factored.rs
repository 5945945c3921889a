use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Div, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::series::{pow_rat, QSeries};
use super::BigRat;
use crate::error::{Error, Result};

/// `prefactor · q^exponent · ∏_k (1 - q^k)^{m_k}` with `k ≥ 1`, `m_k ∈ ℤ`.
///
/// A zero prefactor is the canonical zero element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QFactored {
    prefactor: BigRat,
    exponent: i64,
    factors: BTreeMap<u64, i64>,
}

impl QFactored {
    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn zero() -> Self {
        Self::constant(BigRat::zero())
    }

    pub fn constant(r: BigRat) -> Self {
        QFactored { prefactor: r, exponent: 0, factors: BTreeMap::new() }
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Self::constant(BigRat::from_integer(n.into()))
    }

    /// `q^e`.
    pub fn q_power(e: i64) -> Self {
        QFactored { prefactor: BigRat::one(), exponent: e, factors: BTreeMap::new() }
    }

    /// `(1 - q^k)^m`, `k ≥ 1`.
    pub fn factor(k: u64, m: i64) -> Self {
        assert!(k >= 1, "factor index must be positive");
        let mut f = Self::one();
        f.push(k, m);
        f
    }

    /// `1 - q^e` for any integer `e`; zero when `e = 0`.
    pub fn one_minus_q_pow(e: i64) -> Self {
        match e.cmp(&0) {
            std::cmp::Ordering::Equal => Self::zero(),
            std::cmp::Ordering::Greater => Self::factor(e as u64, 1),
            std::cmp::Ordering::Less => {
                let mut f = Self::factor((-e) as u64, 1);
                f.prefactor = -f.prefactor;
                f.exponent = e;
                f
            }
        }
    }

    /// Assembles a product from its parts; zero multiplicities are dropped.
    pub(crate) fn from_parts(prefactor: BigRat, exponent: i64, mut factors: BTreeMap<u64, i64>) -> Self {
        factors.retain(|_, m| *m != 0);
        QFactored { prefactor, exponent, factors }.canonical()
    }

    fn push(&mut self, k: u64, m: i64) {
        if m == 0 {
            return;
        }
        let e = self.factors.entry(k).or_insert(0);
        *e += m;
        if *e == 0 {
            self.factors.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.prefactor.is_zero()
    }

    pub fn prefactor(&self) -> &BigRat {
        &self.prefactor
    }

    pub fn q_exponent(&self) -> i64 {
        self.exponent
    }

    pub fn factors(&self) -> &BTreeMap<u64, i64> {
        &self.factors
    }

    /// `Σ_k m_k`.
    pub fn net_degree(&self) -> i64 {
        self.factors.values().sum()
    }

    pub fn pow(&self, p: i64) -> Self {
        if self.is_zero() {
            assert!(p > 0, "zero to a non-positive power");
            return Self::zero();
        }
        let prefactor = if p >= 0 {
            num_traits::pow(self.prefactor.clone(), p as usize)
        } else {
            num_traits::pow(self.prefactor.recip(), (-p) as usize)
        };
        QFactored {
            prefactor,
            exponent: self.exponent * p,
            factors: self.factors.iter().map(|(&k, &m)| (k, m * p)).collect(),
        }
    }

    pub fn recip(&self) -> Self {
        self.pow(-1)
    }

    fn canonical(mut self) -> Self {
        if self.prefactor.is_zero() {
            self.exponent = 0;
            self.factors.clear();
        }
        self
    }

    /// Coefficients through `q^t`. Negative multiplicities expand as
    /// geometric series. The prefactor must be an integer.
    pub fn expand(&self, t: i64) -> Result<QSeries> {
        if self.is_zero() {
            return Ok(QSeries::zero(Some(t)));
        }
        if !self.prefactor.is_integer() {
            return Err(Error::NonInteger(format!("prefactor {}", self.prefactor)));
        }
        if t < self.exponent {
            return Ok(QSeries::zero(Some(t)));
        }
        let len = (t - self.exponent + 1) as usize;
        let mut c = vec![BigInt::zero(); len];
        c[0] = self.prefactor.to_integer();
        for (&k, &m) in &self.factors {
            let k = k as usize;
            if k >= len {
                continue;
            }
            if m > 0 {
                for _ in 0..m {
                    for i in (k..len).rev() {
                        let sub = c[i - k].clone();
                        c[i] -= sub;
                    }
                }
            } else {
                for _ in 0..(-m) {
                    for i in k..len {
                        let add = c[i - k].clone();
                        c[i] += add;
                    }
                }
            }
        }
        Ok(QSeries::from_coeffs(self.exponent, c, Some(t)))
    }

    /// True when every pole cancels: for each `d`, the multiplicities of the
    /// factors `1 - q^k` with `d | k` sum to a nonnegative number.
    pub fn is_polynomial(&self) -> bool {
        let max = self.factors.keys().copied().max().unwrap_or(0);
        (1..=max).all(|d| self.factors.iter().filter(|(&k, _)| k % d == 0).map(|(_, &m)| m).sum::<i64>() >= 0)
    }

    /// The exact Laurent polynomial, when all poles cancel.
    pub fn to_polynomial(&self) -> Result<QSeries> {
        if self.is_zero() {
            return Ok(QSeries::zero(None));
        }
        if !self.is_polynomial() {
            return Err(Error::NotPolynomial(self.to_string()));
        }
        let top = self.exponent + self.factors.iter().map(|(&k, &m)| k as i64 * m).sum::<i64>();
        Ok(self.expand(top)?.into_exact())
    }

    /// `lim_{q→1} (q;q)_m · self`.
    pub fn limit_q1(&self, m: u64) -> Result<BigRat> {
        if self.is_zero() {
            return Ok(BigRat::zero());
        }
        // each 1 - q^k behaves like k(1 - q)
        let net = self.net_degree() + m as i64;
        if net < 0 {
            return Err(Error::DivergentLimit(net));
        }
        if net > 0 {
            return Ok(BigRat::zero());
        }
        let (mut num, mut den) = (super::factorial(m), BigInt::one());
        for (&k, &mk) in &self.factors {
            let p = BigInt::from(k).pow(mk.unsigned_abs() as u32);
            if mk > 0 {
                num *= p;
            } else {
                den *= p;
            }
        }
        Ok(&self.prefactor * BigRat::new(num, den))
    }

    /// Value at a rational `q`.
    pub fn eval(&self, q: &BigRat) -> Result<BigRat> {
        if self.is_zero() {
            return Ok(BigRat::zero());
        }
        if q.is_zero() && self.exponent < 0 {
            return Err(Error::Pole("negative power of q at q = 0".into()));
        }
        let mut v = self.prefactor.clone() * pow_rat(q, self.exponent);
        for (&k, &m) in &self.factors {
            let base = BigRat::one() - pow_rat(q, k as i64);
            if base.is_zero() && m < 0 {
                return Err(Error::Pole(format!("1 - q^{k} vanishes")));
            }
            v *= pow_rat(&base, m);
        }
        Ok(v)
    }
}

/// `(q^s; q)_k = ∏_{i<k} (1 - q^{s+i})`. A factor with `s + i = 0` makes the
/// product zero; negative exponents use `1 - q^{-j} = -q^{-j}(1 - q^j)`.
pub fn poch(s: i64, k: u64) -> QFactored {
    let mut f = QFactored::one();
    for i in 0..k as i64 {
        f = &f * &QFactored::one_minus_q_pow(s + i);
        if f.is_zero() {
            break;
        }
    }
    f
}

impl Mul for &QFactored {
    type Output = QFactored;
    fn mul(self, rhs: &QFactored) -> QFactored {
        let mut out = QFactored {
            prefactor: &self.prefactor * &rhs.prefactor,
            exponent: self.exponent + rhs.exponent,
            factors: self.factors.clone(),
        };
        for (&k, &m) in &rhs.factors {
            out.push(k, m);
        }
        out.canonical()
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for &QFactored {
    type Output = QFactored;
    fn div(self, rhs: &QFactored) -> QFactored {
        self * &rhs.recip()
    }
}

impl Mul for QFactored {
    type Output = QFactored;
    fn mul(self, rhs: QFactored) -> QFactored {
        &self * &rhs
    }
}

impl Div for QFactored {
    type Output = QFactored;
    fn div(self, rhs: QFactored) -> QFactored {
        &self / &rhs
    }
}

impl std::iter::Product for QFactored {
    fn product<I: Iterator<Item = QFactored>>(iter: I) -> Self {
        iter.fold(QFactored::one(), |a, b| &a * &b)
    }
}

impl fmt::Display for QFactored {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        write!(f, "{} * q^{}", self.prefactor, self.exponent)?;
        for (k, m) in &self.factors {
            write!(f, " * (1-q^{k})^{m}")?;
        }
        Ok(())
    }
}
