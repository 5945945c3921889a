//! Exact arithmetic: rationals, truncated `q`-series, factored `q`-products
//! and alternant determinants.

mod alternant;
mod factored;
mod series;
mod xq;

use num_bigint::BigInt;
use num_traits::One;

pub use alternant::{alternant, alternant_with, vandermonde_reversed, DetMethod, PERMUTATION_LIMIT};
pub use factored::{poch, QFactored};
pub(crate) use series::pow_rat;
pub use series::QSeries;
pub use xq::XQSeries;

use crate::error::Result;

pub type BigRat = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(n.into(), d.into())
}

pub fn int(n: impl Into<BigInt>) -> BigRat {
    BigRat::from_integer(n.into())
}

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `Φ(n) = ∏_{i=1}^{n-1} i!`.
pub fn phi(n: u64) -> BigInt {
    (1..n).fold(BigInt::one(), |acc, i| acc * factorial(i))
}

/// `∏_{i=1}^{⌊n/2⌋} (n-2i)!`.
pub fn gimel(n: u64) -> BigInt {
    (1..=n / 2).fold(BigInt::one(), |acc, i| acc * factorial(n - 2 * i))
}

/// `(2n-1)!! = 1·3···(2n-1)`.
pub fn odd_double_factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * (2 * i - 1))
}

/// `∏_{i=1}^{n-1} (q;q)_i`.
pub fn phi_q(n: u64) -> QFactored {
    (1..n).map(|i| poch(1, i)).product()
}

/// `∏_{i=1}^{⌊n/2⌋} (q;q)_{n-2i}`.
pub fn gimel_q(n: u64) -> QFactored {
    (1..=n / 2).map(|i| poch(1, n - 2 * i)).product()
}

pub fn expand(f: &QFactored, t: i64) -> Result<QSeries> {
    f.expand(t)
}

pub fn limit_q1(f: &QFactored, m: u64) -> Result<BigRat> {
    f.limit_q1(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn special_numbers() {
        assert_eq!(phi(5), BigInt::from(288));
        assert_eq!(gimel(5), BigInt::from(6));
        assert_eq!([phi(0), phi(1), gimel(0), gimel(1)], [1, 1, 1, 1].map(BigInt::from));
        assert_eq!(odd_double_factorial(4), BigInt::from(105));
        assert_eq!(phi_q(3), &poch(1, 1) * &poch(1, 2));
        assert_eq!(gimel_q(5), &poch(1, 3) * &poch(1, 1));
        assert_eq!(phi_q(4).limit_q1(0).unwrap(), rat(0, 1));
        let ratio = &phi_q(4) / &(&poch(1, 1) * &(&poch(1, 2) * &poch(1, 3)));
        assert_eq!(ratio, QFactored::one());
    }
}
