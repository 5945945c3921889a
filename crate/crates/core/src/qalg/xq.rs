use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::series::QSeries;
use crate::error::Result;

/// A polynomial in `x` whose coefficients are `q`-series sharing the
/// horizon `q^horizon`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XQSeries {
    horizon: i64,
    terms: BTreeMap<u64, QSeries>,
}

impl XQSeries {
    pub fn zero(horizon: i64) -> Self {
        XQSeries { horizon, terms: BTreeMap::new() }
    }

    pub fn one(horizon: i64) -> Self {
        Self::monomial(BigInt::one(), 0, 0, horizon)
    }

    /// `c x^xd q^qd`.
    pub fn monomial(c: BigInt, xd: u64, qd: i64, horizon: i64) -> Self {
        let mut s = Self::zero(horizon);
        s.insert(xd, QSeries::monomial(c, qd));
        s
    }

    /// `1 / (1 - x^xd q^qd)` with `qd ≥ 1`, through the horizon.
    pub fn geometric(xd: u64, qd: i64, horizon: i64) -> Self {
        assert!(qd >= 1);
        let mut s = Self::zero(horizon);
        let mut j = 0;
        while j * qd <= horizon {
            s.insert(j as u64 * xd, QSeries::monomial(BigInt::one(), j * qd));
            j += 1;
        }
        s
    }

    fn insert(&mut self, xd: u64, s: QSeries) {
        let s = s.truncate(self.horizon);
        let merged = match self.terms.remove(&xd) {
            Some(old) => &old + &s,
            None => s,
        };
        if !merged.is_zero() {
            self.terms.insert(xd, merged);
        }
    }

    pub fn horizon(&self) -> i64 {
        self.horizon
    }

    /// Coefficient of `x^xd` as a series through the horizon.
    pub fn x_coeff(&self, xd: u64) -> QSeries {
        self.terms.get(&xd).cloned().unwrap_or_else(|| QSeries::zero(Some(self.horizon)))
    }

    pub fn x_degrees(&self) -> impl Iterator<Item = u64> + '_ {
        self.terms.keys().copied()
    }

    /// Accumulates `c x^xd q^qd`; ignored beyond the horizon.
    pub fn add_term(&mut self, c: BigInt, xd: u64, qd: i64) {
        if qd <= self.horizon && !c.is_zero() {
            self.insert(xd, QSeries::monomial(c, qd));
        }
    }

    pub fn mul(&self, other: &XQSeries) -> XQSeries {
        let mut prods = Vec::new();
        for (&i, a) in &self.terms {
            for (&j, b) in &other.terms {
                prods.push((i + j, a * b));
            }
        }
        Self::collect(self.horizon.min(other.horizon), prods)
    }

    /// Multiplies every coefficient by a `q`-series.
    pub fn mul_q(&self, s: &QSeries) -> XQSeries {
        let prods = self.terms.iter().map(|(&i, a)| (i, a * s)).collect();
        let h = s.horizon().map_or(self.horizon, |t| self.horizon.min(t));
        Self::collect(h, prods)
    }

    fn collect(mut horizon: i64, prods: Vec<(u64, QSeries)>) -> XQSeries {
        for (_, p) in &prods {
            if let Some(t) = p.horizon() {
                horizon = horizon.min(t);
            }
        }
        let mut out = XQSeries::zero(horizon);
        for (i, p) in prods {
            out.insert(i, p);
        }
        out
    }

    pub fn shift_x(&self, d: u64) -> XQSeries {
        XQSeries { horizon: self.horizon, terms: self.terms.iter().map(|(&k, v)| (k + d, v.clone())).collect() }
    }

    /// The `q`-series obtained at `x = 1`.
    pub fn at_x_one(&self) -> QSeries {
        self.terms.values().fold(QSeries::zero(Some(self.horizon)), |acc, s| &acc + s)
    }

    /// Coefficientwise agreement through the common horizon.
    pub fn agrees(&self, other: &XQSeries) -> Result<bool> {
        let t = self.horizon.min(other.horizon);
        for k in self.terms.keys().chain(other.terms.keys()) {
            if !self.x_coeff(*k).agrees_through(&other.x_coeff(*k), t)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for XQSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut mono: Vec<(i64, u64, &BigInt)> = Vec::new();
        for (&xd, s) in &self.terms {
            for (qd, c) in s.terms() {
                mono.push((qd, xd, c));
            }
        }
        mono.sort_by_key(|&(qd, xd, _)| (qd, xd));
        let mut out = String::new();
        for (qd, xd, c) in mono {
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut parts: Vec<String> = Vec::new();
            let mag = c.abs();
            if !mag.is_one() || (xd == 0 && qd == 0) {
                parts.push(mag.to_string());
            }
            match xd {
                0 => {}
                1 => parts.push("x".into()),
                _ => parts.push(format!("x^{xd}")),
            }
            match qd {
                0 => {}
                1 => parts.push("q".into()),
                _ => parts.push(format!("q^{qd}")),
            }
            out.push_str(&parts.join(" "));
        }
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "{out} (+O(q^{}))", self.horizon + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_display() {
        let g = XQSeries::geometric(1, 1, 2);
        assert_eq!(g.to_string(), "1 + x q + x^2 q^2 (+O(q^3))");
        assert_eq!(g.at_x_one().to_string(), "1 + q + q^2 (+O(q^3))");
    }

    #[test]
    fn product_matches_at_one() {
        let a = XQSeries::geometric(1, 1, 6);
        let b = XQSeries::geometric(0, 2, 6);
        let p = a.mul(&b);
        let lhs = p.at_x_one();
        let rhs = &a.at_x_one() * &b.at_x_one();
        assert!(lhs.agrees(&rhs));
        assert_eq!(p.x_coeff(0).to_string(), "1 + q^2 + q^4 + q^6 (+O(q^7))");
    }
}
