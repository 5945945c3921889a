use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::gamma::{gamma, GammaProduct};
use super::{q_integral_ordered, QPoint, QValue};
use crate::error::{Error, Result};
use crate::qalg::{factorial, gimel, int, phi, pow_rat, rat, BigRat};
use crate::shapes::Partition;

/// `(x; q)_k = ∏_{j<k} (1 - x q^j)` at rational arguments.
fn poch_at(x: &BigRat, q: &BigRat, k: i64) -> BigRat {
    let mut acc = BigRat::one();
    let mut t = x.clone();
    for _ in 0..k.max(0) {
        acc *= BigRat::one() - &t;
        t *= q;
    }
    acc
}

fn choose(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn fact(n: i64) -> Result<BigRat> {
    if n < 0 {
        return Err(Error::InvalidParameters(format!("factorial of {n}")));
    }
    Ok(int(factorial(n as u64)))
}

fn phi_r(n: i64) -> BigRat {
    int(phi(n.max(0) as u64))
}

/// The Selberg density `Δ(X)^2 ∏ (q x_i/a; q)_{α-1} (q x_i/b; q)_{β-1}`, or
/// `Δ(X)^2 ∏ x_i^{α-1} (q x_i/b; q)_{β-1}` when `a = 0`, together with a
/// bound on its absolute value over the lattice in `[0, b]`.
#[allow(clippy::type_complexity)]
pub fn q_selberg_integrand(
    n: usize,
    alpha: u32,
    beta: u32,
    a: &BigRat,
    b: &BigRat,
    q: &BigRat,
) -> Result<(Box<dyn Fn(&[BigRat]) -> BigRat>, BigRat)> {
    if alpha == 0 || beta == 0 {
        return Err(Error::InvalidParameters("alpha and beta must be positive".into()));
    }
    if a.is_negative() || a >= b || *b > BigRat::one() {
        return Err(Error::InvalidParameters(format!("need 0 <= a < b <= 1, got a = {a}, b = {b}")));
    }
    let (a, b, q) = (a.clone(), b.clone(), q.clone());
    let one = BigRat::one();
    let mut per_point = poch_bound(&q, &b, &b, beta);
    if a.is_zero() {
        per_point *= num_traits::pow(b.clone(), alpha as usize - 1);
    } else {
        per_point *= poch_bound(&q, &b, &a, alpha);
    }
    let sup = num_traits::pow(b.clone(), n * n.saturating_sub(1)) * num_traits::pow(per_point, n);
    let f = move |x: &[BigRat]| {
        let mut v = one.clone();
        for i in 0..x.len() {
            for j in i + 1..x.len() {
                let d = &x[j] - &x[i];
                v *= &d * &d;
            }
        }
        for xi in x {
            let first = if a.is_zero() {
                num_traits::pow(xi.clone(), alpha as usize - 1)
            } else {
                poch_at(&(&q * xi / &a), &q, alpha as i64 - 1)
            };
            v *= first * poch_at(&(&q * xi / &b), &q, beta as i64 - 1);
        }
        v
    };
    Ok((Box::new(f), sup))
}

/// `∏_{k=1}^{e-1} (1 + q^k top/scale)`, bounding `|(q x/scale; q)_{e-1}|` for
/// `0 ≤ x ≤ top`.
fn poch_bound(q: &BigRat, top: &BigRat, scale: &BigRat, e: u32) -> BigRat {
    (1..e as i64).map(|k| BigRat::one() + pow_rat(q, k) * top / scale).product()
}

/// The ordered lattice sum over `a ≤ x_1 ≤ ... ≤ x_n ≤ b` of the Selberg
/// density.
pub fn q_selberg_lhs(n: usize, alpha: u32, beta: u32, a: &BigRat, b: &BigRat, pt: &QPoint) -> Result<QValue> {
    let (f, sup) = q_selberg_integrand(n, alpha, beta, a, b, &pt.q)?;
    q_integral_ordered(&*f, &sup, n, a, b, pt)
}

/// The product evaluation of the `q`-Selberg integral; for `a = 0` the
/// specialised product with the density `x^{α-1}`.
pub fn q_selberg_rhs(n: usize, alpha: u32, beta: u32, a: &BigRat, b: &BigRat, q: &BigRat) -> Result<BigRat> {
    if a == b {
        return Err(Error::Pole("a = b".into()));
    }
    let one = BigRat::one();
    let (n, alpha, beta) = (n as i64, alpha as i64, beta as i64);
    let qq = |k: i64| poch_at(q, q, k);
    if a.is_zero() {
        let e = (alpha - 1) * choose(n, 2) + n * (n - 1) * (2 * n - 1) / 6;
        let mut v = pow_rat(q, e) * pow_rat(b, n * alpha + n * (n - 1)) * num_traits::pow(&one - q, n as usize);
        for i in 1..=n {
            v *= qq(beta + i - 2) * qq(i - 1) / poch_at(&pow_rat(q, alpha - 1 + i), q, n + beta - 1);
        }
        return Ok(v);
    }
    let sign = if choose(n, 2) % 2 == 0 { one.clone() } else { -one.clone() };
    let mut v = sign * pow_rat(q, choose(n, 3));
    for i in 0..n {
        v *= pow_rat(&(&one - q), n - 2 * i)
            * qq(alpha + i - 1)
            * qq(beta + i - 1)
            * qq(i)
            * poch_at(&(a / b), q, beta + i)
            * poch_at(&(b / a), q, alpha + i)
            * pow_rat(&(a * b), i + 1)
            / ((a - b) * qq(alpha + beta + n + i - 2));
    }
    Ok(v)
}

/// The same evaluation written with `Γ_q(k) = (q;q)_{k-1} / (1-q)^{k-1}`.
pub fn q_selberg_rhs_gamma_q(n: usize, alpha: u32, beta: u32, a: &BigRat, b: &BigRat, q: &BigRat) -> Result<BigRat> {
    if a == b || a.is_zero() {
        return Err(Error::Pole("needs a != b and a != 0".into()));
    }
    let one = BigRat::one();
    let gq = |k: i64| poch_at(q, q, k - 1) / pow_rat(&(&one - q), k - 1);
    let (n, alpha, beta) = (n as i64, alpha as i64, beta as i64);
    let sign = if choose(n, 2) % 2 == 0 { one.clone() } else { -one.clone() };
    let mut v = sign * pow_rat(q, choose(n, 3));
    for i in 0..n {
        v *= gq(alpha + i)
            * gq(beta + i)
            * gq(i + 1)
            * poch_at(&(a / b), q, beta + i)
            * poch_at(&(b / a), q, alpha + i)
            * pow_rat(&(a * b), i + 1)
            / (gq(alpha + beta + n + i - 1) * (a - b));
    }
    Ok(v)
}

/// The Selberg integral with `γ = 1/2`, exponent `(b+1)/m - 1` and
/// `(1-x)^a`, as its Γ-product and as the explicit even/odd product.
pub fn selberg_gamma_forms(n: u32, a: u32, b: u32, m: u32) -> Result<(GammaProduct, GammaProduct)> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameters("n and m must be positive".into()));
    }
    let beta = rat(b as i64 + 1, m as i64);
    let half = |k: i64| rat(k, 2);
    let mut gform = GammaProduct::rational(BigRat::one() / int(factorial(n as u64)));
    for j in 1..=n as i64 {
        let num = gamma(&(&beta + half(j - 1)))? * gamma(&(int(a + 1) + half(j - 1)))? * gamma(&(int(1) + half(j)))?;
        let den = gamma(&(&beta + int(a + 1) + half(n as i64 + j - 2)))? * gamma(&rat(3, 2))?;
        gform = gform * num / den;
    }
    let (a, b, m) = (a as i64, b as i64, m as i64);
    let big_n = n as i64 / 2;
    let two_b1 = 2 * (b + 1);
    let mf = |e: i64| int(BigInt::from(m).pow(e as u32));
    let cform = if n.is_multiple_of(2) {
        let mut den = int(gimel((2 * big_n + 2 * a) as u64)) * phi_r(2 * a);
        for i in 0..big_n {
            den *= int(b + 1 + m * i);
        }
        for j in 1..=2 * big_n {
            for i in 0..big_n + a {
                den *= int(two_b1 + (2 * i + j) * m);
            }
        }
        mf(big_n + 2 * big_n * (big_n + a))
            * int(BigInt::from(2).pow(big_n as u32))
            * phi_r(2 * big_n + 2 * a)
            * int(gimel(2 * a as u64))
            * int(gimel(2 * big_n as u64))
            / den
    } else {
        let mut den = int(gimel((2 * big_n + 2 * a + 1) as u64)) * phi_r(2 * a);
        for j in 1..=2 * big_n + 1 {
            for i in 0..=big_n + a {
                den *= int(two_b1 + (2 * i + j - 1) * m);
            }
        }
        mf((2 * big_n + 1) * (big_n + a + 1))
            * int(BigInt::from(2).pow(2 * big_n as u32 + 1))
            * phi_r(2 * big_n + 2 * a + 1)
            * int(gimel(2 * a as u64))
            * int(gimel(2 * big_n as u64 + 1))
            / den
    };
    Ok((gform, GammaProduct::rational(cform)))
}

/// `∫_{[0,1]^n} s_λ(X) ∏ x_i^{α-1}(1-x_i)^{β-1} Δ(X)^2 dX` in product form:
/// `∏_{(i,j)∈λ} (n-i+j)/h(i,j) · ∏_i (α+n-i+λ_i-1)! (β+i-2)! i! / (α+β+2n-i-2+λ_i)!`.
pub fn warnaar_rhs(lam: &Partition, alpha: i64, beta: i64, n: usize) -> Result<BigRat> {
    let parts = lam.padded(n)?;
    let mut v = BigRat::one();
    for c in lam.cells() {
        let h = lam.hook_length(c)? as i64;
        v *= rat(n as i64 - c.row as i64 + c.col as i64, h);
    }
    let n = n as i64;
    for i in 1..=n {
        let l = parts[i as usize - 1] as i64;
        v *= fact(alpha + n - i + l - 1)? * fact(beta + i - 2)? * fact(i)? / fact(alpha + beta + 2 * n - i - 2 + l)?;
    }
    Ok(v)
}

/// The four integrals whose sum gives the ρ-shape count, their sum, and the
/// combined closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoIntegrals {
    pub addends: [BigRat; 4],
    pub sum: BigRat,
    pub closed: BigRat,
}

pub fn rho_integral_identity(n: u32, a: u32, b: u32, c: u32, d: u32) -> Result<RhoIntegrals> {
    if a == 0 || c == 0 {
        return Err(Error::InvalidParameters("a and c must be positive".into()));
    }
    let (n, a, b, c, d) = (n as i64, a as i64, b as i64, c as i64, d as i64);
    let (aa, bb, s) = (a + c, b + d, n + a + b + c + d);
    let ac = int(a * c);
    let p = phi_r(n + 1) * phi_r(n + aa) * phi_r(n + bb) / (phi_r(bb) * phi_r(2 * n + aa + bb));
    let i1 = &ac * int(choose(n, 2)) * fact(s + 1)? / fact(aa + 1)? * &p * phi_r(s - 1) / phi_r(aa - 1);
    let i2 = &ac * int(choose(n + 1, 2)) * fact(aa - 2)? / fact(s - 2)? * &p * phi_r(s + 1) / phi_r(aa + 1);
    let i3 = &ac * int(n * bb) * fact(aa - 1)? / fact(s - 1)? * &p * phi_r(s + 1) / phi_r(aa + 1);
    let i4 = int(a * b * c * d) * &p * phi_r(s) / phi_r(aa);
    let sum = &i1 + &i2 + &i3 + &i4;
    let ns = n * s;
    let closed = &ac / int((aa - 1) * (aa + 1)) * &p * phi_r(s) / phi_r(aa)
        * int(ns * (ns + aa * bb) + b * d * (aa - 1) * (aa + 1));
    if sum != closed {
        return Err(Error::Mismatch(format!("integral sum {sum} differs from the closed form {closed}")));
    }
    Ok(RhoIntegrals { addends: [i1, i2, i3, i4], sum, closed })
}

/// The four integrals evaluated through [`warnaar_rhs`]. These are the
/// integrals over the cube `[0,1]^n`, which is `n!` times the ordered
/// simplex.
pub fn rho_integrals_via_warnaar(n: u32, a: u32, b: u32, c: u32, d: u32) -> Result<[BigRat; 4]> {
    let nn = n as usize;
    let (a, b, c, d) = (a as i64, b as i64, c as i64, d as i64);
    let (aa, bb) = (a + c, b + d);
    let ac = int(a * c);
    let shape = |v: Vec<u32>| Partition::new(v);
    let i1 = if n >= 2 {
        let mut parts = vec![2; nn - 2];
        parts.extend([1, 1]);
        &ac * warnaar_rhs(&shape(parts)?, aa - 1, bb + 1, nn)?
    } else {
        BigRat::zero()
    };
    let i2 = if n >= 1 { &ac * warnaar_rhs(&shape(vec![2; nn - 1])?, aa - 1, bb + 1, nn)? } else { BigRat::zero() };
    let i3 =
        if n >= 1 { &ac * int(bb) * warnaar_rhs(&shape(vec![1; nn - 1])?, aa, bb + 1, nn)? } else { BigRat::zero() };
    let i4 = int(a * b * c * d) * warnaar_rhs(&Partition::empty(), aa + 1, bb + 1, nn)?;
    Ok([i1, i2, i3, i4])
}
