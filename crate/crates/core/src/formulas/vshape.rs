use num_bigint::BigInt;
use num_traits::One;

use super::rho::to_integer;
use crate::error::Result;
use crate::qalg::{factorial, gimel, int, phi, BigRat};
use crate::shapes::{build_v, shifted_hook_with, triangle_region, CellSet, RowIntervals};

fn common_prefactor(n: u32, a: u32, size: u64) -> BigRat {
    let (n, a) = (n as u64, a as u64);
    let num = int(factorial(size)) * int(phi(n + 2 * a)) * int(phi(a)) * int(gimel(2 * a)) * int(gimel(n));
    let den = int(BigInt::from(2u32).pow(a as u32)) * int(phi(2 * a)) * int(phi(n + a)) * int(gimel(n + 2 * a));
    num / den
}

/// Hook form of the standard tableau count of the V-shape, leaving out
/// the cells `{(i, n+j) : 1 ≤ i ≤ j ≤ a}` of the outer shifted diagram.
pub fn g_v_hook(n: u32, a: u32, b: u32, m: u32) -> Result<BigInt> {
    g_v_hook_with_region(n, a, b, m, &triangle_region(n, a))
}

/// Hook form with an explicit region of omitted cells; cells outside the
/// outer shifted diagram are ignored.
pub fn g_v_hook_with_region(n: u32, a: u32, b: u32, m: u32, region: &CellSet) -> Result<BigInt> {
    let shape = build_v(n, a, b, m)?;
    let outer = shape.outer();
    let rest = outer.staircase_remainder();
    let rest_conj = rest.conjugate();
    let mut denom = BigInt::one();
    for c in outer.cells().filter(|&c| !region.contains(c)) {
        denom *= shifted_hook_with(outer, &rest, &rest_conj, c);
    }
    to_integer(common_prefactor(n, a, shape.size() as u64) / int(denom))
}

/// The hook form with every shifted hook length written out as explicit
/// factorials and linear factors.
pub fn g_v_closed(n: u32, a: u32, b: u32, m: u32) -> Result<BigInt> {
    let size = build_v(n, a, b, m)?.size() as u64;
    let (n, a, b, m) = (n as u64, a as u64, b as u64, m as u64);
    let len = n + a;
    let two_b1 = 2 * (b + 1);
    let mut num = int(BigInt::from(m).pow((len * len.saturating_sub(1) / 2) as u32)) * int(phi(len));
    for i in 1..=a {
        for j in 0..i {
            num *= int(two_b1 + (n + i + j - 1) * m);
        }
    }
    let mut den = BigRat::one();
    for i in 0..len {
        den *= int(factorial(b + m * i)) * int(b + 1 + m * i);
    }
    for i in 1..len {
        for j in 0..i {
            den *= int(two_b1 + (i + j) * m);
        }
    }
    to_integer(common_prefactor(n as u32, a as u32, size) * num / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::count_syt;
    use crate::shapes::d_region;

    #[test]
    fn examples() {
        for (n, a, b, m) in [(1, 0, 1, 1), (1, 1, 0, 1), (2, 0, 0, 1)] {
            assert_eq!(g_v_hook(n, a, b, m).unwrap(), BigInt::from(1));
            assert_eq!(g_v_closed(n, a, b, m).unwrap(), BigInt::from(1));
        }
        let oracle = count_syt(build_v(2, 1, 1, 2).unwrap()).unwrap();
        assert_eq!(g_v_hook(2, 1, 1, 2).unwrap(), oracle);
        assert_eq!(g_v_closed(2, 1, 1, 2).unwrap(), oracle);
    }

    #[test]
    fn literal_region_differs_when_a_exceeds_n() {
        let oracle = count_syt(build_v(1, 2, 1, 1).unwrap()).unwrap();
        assert_eq!(g_v_hook(1, 2, 1, 1).unwrap(), oracle);
        let literal = g_v_hook_with_region(1, 2, 1, 1, &d_region(1));
        assert!(literal.map_or(true, |v| v != oracle));
    }
}
