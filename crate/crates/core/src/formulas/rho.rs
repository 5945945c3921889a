use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::excited::{for_each_excited, HookTable};
use crate::oracle::Caps;
use crate::qalg::{factorial, int, phi, BigRat};
use crate::shapes::{build_rho, RowIntervals};

fn phi_r(n: u32) -> BigRat {
    int(phi(n as u64))
}

pub(crate) fn to_integer(v: BigRat) -> Result<BigInt> {
    if !v.is_integer() {
        return Err(Error::NonInteger(v.to_string()));
    }
    Ok(v.to_integer())
}

/// Standard tableau count of `((n+b+c)^{n+a},(n+c)^d) / (c+1, c^{a-1}, 1)`.
pub fn f_rho(n: u32, a: u32, b: u32, c: u32, d: u32) -> Result<BigInt> {
    if a == 0 || c == 0 {
        return Err(Error::InvalidParameters("the formula needs a, c >= 1".into()));
    }
    let size = build_rho(n, a, b, c, d)?.size() as u64;
    let s = n + a + b + c + d;
    let (aa, bb) = (a + c, b + d);
    let num = [n, a, b, c, d, n + a + c, n + b + d, s].map(phi_r).into_iter().product::<BigRat>();
    let den = [a + c, b + d, n + a + b, n + c + d, 2 * n + a + b + c + d].map(phi_r).into_iter().product::<BigRat>();
    let [n, a, b, c, d, s, aa, bb] = [n, a, b, c, d, s, aa, bb].map(BigInt::from);
    let ns = &n * &s;
    let poly = &a * &c * (&ns * (&ns + &aa * &bb) + &b * &d * (&aa - 1) * (&aa + 1));
    let tail = BigRat::new(poly, (&aa - 1) * (&aa + 1));
    to_integer(int(factorial(size)) * num / den * tail)
}

/// The same count under the parameter order used in the introduction,
/// which swaps the roles of `b` and `c`.
pub fn f_rho_intro(n: u32, a: u32, b: u32, c: u32, d: u32) -> Result<BigInt> {
    f_rho(n, a, c, b, d)
}

/// The `a = b = c = d` specialisation in its own closed form.
pub fn f_rho_conjecture11(a: u32, n: u32) -> Result<BigInt> {
    if a == 0 {
        return Err(Error::InvalidParameters("a must be positive".into()));
    }
    let size = build_rho(n, a, a, a, a)?.size() as u64;
    let num = num_traits::pow(phi_r(a), 4) * phi_r(n) * phi_r(n + 4 * a);
    let den = num_traits::pow(phi_r(2 * a), 2) * phi_r(2 * n + 4 * a);
    let (a, n) = (BigInt::from(a), BigInt::from(n));
    let inner = &n * &n + 4 * &a * &n + 2 * &a * &a;
    let tail = BigRat::new(&a * &a * (&inner * &inner - &a * &a), 4 * &a * &a - 1);
    to_integer(int(factorial(size)) * num / den * tail)
}

/// `Σ_D lim_{q→1} (q;q)_{|ρ|} · (summand of the q-analog for D)`, which
/// must reproduce the standard tableau count.
pub fn rho_limit_from_q_analog(n: u32, a: u32, b: u32, c: u32, d: u32) -> Result<BigRat> {
    let shape = build_rho(n, a, b, c, d)?;
    let size = shape.size() as u64;
    let table = HookTable::new(&shape);
    let mut acc = BigRat::zero();
    for_each_excited(&shape, &Caps::from_env(), &mut |d| {
        acc += table.q_term(d).limit_q1(size)?;
        Ok(())
    })?;
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(f_rho(1, 1, 0, 1, 0).unwrap(), BigInt::from(1));
        assert_eq!(f_rho(1, 1, 1, 1, 1).unwrap(), BigInt::from(16));
        assert_eq!(f_rho(1, 1, 2, 1, 0).unwrap(), BigInt::from(5));
        assert!(f_rho(1, 0, 1, 1, 1).is_err());
        assert_eq!(f_rho_intro(1, 1, 1, 2, 0).unwrap(), BigInt::from(5));
    }

    #[test]
    fn conjecture_matches() {
        assert_eq!(f_rho_conjecture11(1, 1).unwrap(), BigInt::from(16));
        for a in 1..=3 {
            for n in 1..=4 {
                assert_eq!(f_rho_conjecture11(a, n).unwrap(), f_rho(n, a, a, a, a).unwrap());
            }
        }
    }

    #[test]
    fn limit_bridge() {
        assert_eq!(rho_limit_from_q_analog(1, 1, 1, 1, 1).unwrap(), int(16));
    }
}
