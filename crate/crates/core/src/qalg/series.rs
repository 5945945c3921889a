use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::BigRat;
use crate::error::{Error, Result};

/// A Laurent series in `q` with integer coefficients, known exactly through
/// `q^horizon`. A horizon of `None` means the series is an exact Laurent
/// polynomial.
///
/// The derived `PartialEq` is structural (horizons must match too). Use
/// [`QSeries::agrees_through`] or [`QSeries::agrees`] to compare values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSeries {
    low: i64,
    coeffs: Vec<BigInt>,
    horizon: Option<i64>,
}

fn min_horizon(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl QSeries {
    pub fn from_coeffs(low: i64, coeffs: Vec<BigInt>, horizon: Option<i64>) -> Self {
        let mut s = QSeries { low, coeffs, horizon };
        s.normalize();
        s
    }

    /// Builds from small integer coefficients starting at `q^low`.
    pub fn from_i64s(low: i64, coeffs: &[i64], horizon: Option<i64>) -> Self {
        Self::from_coeffs(low, coeffs.iter().map(|&c| BigInt::from(c)).collect(), horizon)
    }

    pub fn zero(horizon: Option<i64>) -> Self {
        QSeries { low: 0, coeffs: Vec::new(), horizon }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// The exact polynomial `c q^e`.
    pub fn monomial(c: BigInt, e: i64) -> Self {
        Self::from_coeffs(e, vec![c], None)
    }

    fn normalize(&mut self) {
        if let Some(t) = self.horizon {
            let keep = (t - self.low + 1).max(0) as usize;
            self.coeffs.truncate(keep);
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
        } else if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
    }

    pub fn horizon(&self) -> Option<i64> {
        self.horizon
    }

    pub fn is_exact(&self) -> bool {
        self.horizon.is_none()
    }

    /// True when every known coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient, if any is known.
    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.low)
    }

    /// Highest exponent with a nonzero known coefficient.
    pub fn degree(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Coefficient of `q^e`; asking past the horizon is an error.
    pub fn coeff(&self, e: i64) -> Result<BigInt> {
        if let Some(t) = self.horizon {
            if e > t {
                return Err(Error::BeyondHorizon { requested: e, horizon: t });
            }
        }
        Ok(self.coeff_known(e))
    }

    fn coeff_known(&self, e: i64) -> BigInt {
        if e < self.low {
            return BigInt::zero();
        }
        self.coeffs.get((e - self.low) as usize).cloned().unwrap_or_default()
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        let low = self.low;
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (low + i as i64, c))
    }

    /// Forgets everything above `q^t`.
    pub fn truncate(&self, t: i64) -> Self {
        Self::from_coeffs(self.low, self.coeffs.clone(), min_horizon(self.horizon, Some(t)))
    }

    /// Declares a truncated series to be an exact polynomial. Callers use this
    /// only when the degree is known to be below the horizon.
    pub(crate) fn into_exact(mut self) -> Self {
        self.horizon = None;
        self
    }

    /// Coefficientwise equality through `q^t`; an error if either side is
    /// not known that far.
    pub fn agrees_through(&self, other: &Self, t: i64) -> Result<bool> {
        for h in [self.horizon, other.horizon].into_iter().flatten() {
            if t > h {
                return Err(Error::BeyondHorizon { requested: t, horizon: h });
            }
        }
        let lo = self.low.min(other.low);
        Ok((lo..=t).all(|e| self.coeff_known(e) == other.coeff_known(e)))
    }

    /// Equality up to the common horizon, or full equality if both are exact.
    pub fn agrees(&self, other: &Self) -> bool {
        match min_horizon(self.horizon, other.horizon) {
            Some(t) => self.agrees_through(other, t).expect("common horizon"),
            None => self.low == other.low && self.coeffs == other.coeffs,
        }
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        QSeries { low: self.low + e, coeffs: self.coeffs.clone(), horizon: self.horizon.map(|t| t + e) }.normalized()
    }

    fn normalized(mut self) -> Self {
        self.normalize();
        self
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.low, self.coeffs.iter().map(|x| x * c).collect(), self.horizon)
    }

    /// A lower bound for the valuation that also holds for the unknown tail.
    fn valuation_bound(&self) -> Option<i64> {
        match (self.valuation(), self.horizon) {
            (Some(v), _) => Some(v),
            (None, Some(t)) => Some(t + 1),
            (None, None) => None,
        }
    }

    /// Sum of the coefficients of an exact polynomial.
    pub fn eval_at_one(&self) -> Result<BigInt> {
        if let Some(t) = self.horizon {
            return Err(Error::BeyondHorizon { requested: i64::MAX, horizon: t });
        }
        Ok(self.coeffs.iter().sum())
    }

    /// Value of an exact Laurent polynomial at a rational `q`.
    pub fn eval(&self, q: &BigRat) -> Result<BigRat> {
        if let Some(t) = self.horizon {
            return Err(Error::BeyondHorizon { requested: i64::MAX, horizon: t });
        }
        if self.is_zero() {
            return Ok(BigRat::zero());
        }
        if q.is_zero() && self.low < 0 {
            return Err(Error::Pole("negative power of q at q = 0".into()));
        }
        let mut acc = BigRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + BigRat::from_integer(c.clone());
        }
        Ok(acc * pow_rat(q, self.low))
    }

    /// `1 / self` through `q^t`; the lowest coefficient must be `±1`.
    pub fn inverse(&self, t: i64) -> Result<Self> {
        let v = self.valuation().ok_or_else(|| Error::Pole("inverse of zero series".into()))?;
        let lead = &self.coeffs[0];
        if !lead.abs().is_one() {
            return Err(Error::NonInteger(format!("inverse with leading coefficient {lead}")));
        }
        let relh = match self.horizon {
            Some(h) => (h - v).min(t + v),
            None => t + v,
        };
        if relh < 0 {
            return Ok(QSeries::zero(Some(relh - v)));
        }
        let n = relh as usize + 1;
        let mut out: Vec<BigInt> = Vec::with_capacity(n);
        for k in 0..n {
            let mut s = if k == 0 { BigInt::one() } else { BigInt::zero() };
            for i in 1..=k.min(self.coeffs.len() - 1) {
                s -= &self.coeffs[i] * &out[k - i];
            }
            out.push(s * lead);
        }
        Ok(QSeries::from_coeffs(-v, out, Some(relh - v)))
    }
}

pub(crate) fn pow_rat(q: &BigRat, e: i64) -> BigRat {
    if e >= 0 {
        num_traits::pow(q.clone(), e as usize)
    } else {
        num_traits::pow(q.recip(), (-e) as usize)
    }
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        combine(self, rhs, |a, b| a + b)
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        combine(self, rhs, |a, b| a - b)
    }
}

fn combine(x: &QSeries, y: &QSeries, op: impl Fn(&BigInt, &BigInt) -> BigInt) -> QSeries {
    let horizon = min_horizon(x.horizon, y.horizon);
    if x.is_zero() && y.is_zero() {
        return QSeries::zero(horizon);
    }
    let lo = match (x.valuation(), y.valuation()) {
        (Some(a), Some(b)) => a.min(b),
        (Some(a), None) | (None, Some(a)) => a,
        (None, None) => unreachable!(),
    };
    let hi = x.degree().unwrap_or(lo).max(y.degree().unwrap_or(lo));
    let hi = horizon.map_or(hi, |t| hi.min(t));
    let coeffs = (lo..=hi).map(|e| op(&x.coeff_known(e), &y.coeff_known(e))).collect();
    QSeries::from_coeffs(lo, coeffs, horizon)
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect(), horizon: self.horizon }
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        let from_x = self.horizon.zip(rhs.valuation_bound()).map(|(t, v)| t + v);
        let from_y = rhs.horizon.zip(self.valuation_bound()).map(|(t, v)| t + v);
        let horizon = min_horizon(from_x, from_y);
        if self.is_zero() || rhs.is_zero() {
            return QSeries::zero(horizon);
        }
        let low = self.low + rhs.low;
        let mut len = self.coeffs.len() + rhs.coeffs.len() - 1;
        if let Some(t) = horizon {
            len = len.min((t - low + 1).max(0) as usize);
        }
        let mut out = vec![BigInt::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len || a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(len - i) {
                out[i + j] += a * b;
            }
        }
        QSeries::from_coeffs(low, out, horizon)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for QSeries {
            type Output = QSeries;
            fn $m(self, rhs: QSeries) -> QSeries { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let var = match e {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{e}"),
            };
            if var.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&var);
            } else {
                out.push_str(&format!("{mag} {var}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        if let Some(t) = self.horizon {
            out.push_str(&format!(" (+O(q^{}))", t + 1));
        }
        write!(f, "{out}")
    }
}
