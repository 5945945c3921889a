use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Div, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::qalg::{factorial, BigRat};

/// `r · 2^s · √π^k · ∏ Γ(θ)^{e_θ}` with `r` rational, `s ∈ [0,1)` rational,
/// and every `θ` in `(0, 1/2)`.
///
/// Gamma values at other rational points are reduced with `Γ(x+1) = xΓ(x)`
/// and the duplication formula `Γ(z)Γ(z+1/2) = 2^{1-2z} √π Γ(2z)`, so
/// products that agree through these identities have equal normal forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaProduct {
    rational: BigRat,
    two_power: BigRat,
    sqrt_pi: i64,
    gammas: BTreeMap<BigRat, i64>,
}

impl GammaProduct {
    pub fn rational(r: BigRat) -> Self {
        let mut g = GammaProduct { rational: r, two_power: BigRat::zero(), sqrt_pi: 0, gammas: BTreeMap::new() };
        g.normalize();
        g
    }

    pub fn one() -> Self {
        Self::rational(BigRat::one())
    }

    pub fn sqrt_pi() -> Self {
        GammaProduct { sqrt_pi: 1, ..Self::one() }
    }

    pub fn rational_part(&self) -> &BigRat {
        &self.rational
    }

    pub fn is_rational(&self) -> bool {
        self.two_power.is_zero() && self.sqrt_pi == 0 && self.gammas.is_empty()
    }

    /// `2^s` for rational `s`.
    pub fn two_to(s: BigRat) -> Self {
        let mut g = GammaProduct { two_power: s, ..Self::one() };
        g.normalize();
        g
    }

    fn basis_gamma(theta: BigRat, e: i64) -> Self {
        let mut gammas = BTreeMap::new();
        gammas.insert(theta, e);
        GammaProduct { gammas, ..Self::one() }
    }

    pub fn pow(&self, e: i64) -> Self {
        if self.rational.is_zero() {
            return self.clone();
        }
        let rational = if e >= 0 {
            num_traits::pow(self.rational.clone(), e as usize)
        } else {
            num_traits::pow(self.rational.recip(), (-e) as usize)
        };
        let mut g = GammaProduct {
            rational,
            two_power: &self.two_power * BigRat::from_integer(e.into()),
            sqrt_pi: self.sqrt_pi * e,
            gammas: self.gammas.iter().map(|(t, &k)| (t.clone(), k * e)).collect(),
        };
        g.normalize();
        g
    }

    fn normalize(&mut self) {
        if self.rational.is_zero() {
            self.two_power = BigRat::zero();
            self.sqrt_pi = 0;
            self.gammas.clear();
            return;
        }
        let whole = self.two_power.floor();
        self.two_power -= &whole;
        let w = whole.to_integer();
        let two = BigRat::from_integer(2.into());
        let mag: usize = w.abs().try_into().expect("power of two fits");
        let scale = num_traits::pow(two, mag);
        if w.is_negative() {
            self.rational /= scale;
        } else {
            self.rational *= scale;
        }
        self.gammas.retain(|_, e| *e != 0);
    }
}

/// `Γ(x)` for rational `x > 0`.
pub fn gamma(x: &BigRat) -> Result<GammaProduct> {
    if !x.is_positive() {
        return Err(Error::InvalidParameters(format!("Γ({x}) needs a positive argument")));
    }
    let k = x.floor();
    let theta = x - &k;
    let k: u64 = k.to_integer().try_into().map_err(|_| Error::InvalidParameters(format!("Γ({x}) too large")))?;
    if theta.is_zero() {
        return Ok(GammaProduct::rational(BigRat::from_integer(factorial(k - 1))));
    }
    let rising = (0..k).fold(BigRat::one(), |acc, i| acc * (&theta + BigRat::from_integer(i.into())));
    Ok(gamma_fraction(&theta) * GammaProduct::rational(rising))
}

/// `Γ(θ)` for `θ ∈ (0,1)` in normal form.
fn gamma_fraction(theta: &BigRat) -> GammaProduct {
    let half = BigRat::new(BigInt::one(), 2.into());
    if *theta == half {
        return GammaProduct::sqrt_pi();
    }
    if *theta < half {
        return GammaProduct::basis_gamma(theta.clone(), 1);
    }
    // Γ(z + 1/2) = 2^{1-2z} √π Γ(2z) / Γ(z) with z = θ - 1/2 in (0, 1/2)
    let z = theta - &half;
    let two_z = &z * BigRat::from_integer(2.into());
    GammaProduct::two_to(BigRat::one() - &two_z) * GammaProduct::sqrt_pi() * gamma_fraction(&two_z)
        / GammaProduct::basis_gamma(z, 1)
}

impl Mul for GammaProduct {
    type Output = GammaProduct;
    fn mul(mut self, rhs: GammaProduct) -> GammaProduct {
        self.rational *= rhs.rational;
        self.two_power += rhs.two_power;
        self.sqrt_pi += rhs.sqrt_pi;
        for (t, e) in rhs.gammas {
            *self.gammas.entry(t).or_insert(0) += e;
        }
        self.normalize();
        self
    }
}

impl Div for GammaProduct {
    type Output = GammaProduct;
    fn div(self, rhs: GammaProduct) -> GammaProduct {
        self * rhs.pow(-1)
    }
}

impl std::iter::Product for GammaProduct {
    fn product<I: Iterator<Item = GammaProduct>>(iter: I) -> Self {
        iter.fold(GammaProduct::one(), |a, b| a * b)
    }
}

impl fmt::Display for GammaProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rational)?;
        if !self.two_power.is_zero() {
            write!(f, " * 2^({})", self.two_power)?;
        }
        if self.sqrt_pi != 0 {
            write!(f, " * sqrt(pi)^{}", self.sqrt_pi)?;
        }
        for (t, e) in &self.gammas {
            write!(f, " * Gamma({t})^{e}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalg::{int, rat};

    #[test]
    fn integer_and_half_values() {
        assert_eq!(gamma(&int(5)).unwrap(), GammaProduct::rational(int(24)));
        let g = gamma(&rat(5, 2)).unwrap();
        assert_eq!(g, GammaProduct::rational(rat(3, 4)) * GammaProduct::sqrt_pi());
        assert!(gamma(&int(0)).is_err());
    }

    #[test]
    fn duplication_is_built_in() {
        for z in [rat(1, 3), rat(1, 6), rat(2, 5), rat(7, 4)] {
            let lhs = gamma(&z).unwrap() * gamma(&(&z + rat(1, 2))).unwrap();
            let rhs =
                GammaProduct::two_to(int(1) - int(2) * &z) * GammaProduct::sqrt_pi() * gamma(&(int(2) * &z)).unwrap();
            assert_eq!(lhs, rhs, "z = {z}");
        }
    }

    #[test]
    fn beta_values_are_rational() {
        let b = gamma(&rat(1, 3)).unwrap() * gamma(&int(3)).unwrap() / gamma(&rat(10, 3)).unwrap();
        assert!(b.is_rational());
        assert_eq!(*b.rational_part(), rat(2, 1) / (rat(1, 3) * rat(4, 3) * rat(7, 3)));
    }
}
