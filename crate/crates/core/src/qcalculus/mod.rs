//! Jackson `q`-integrals evaluated as exact lattice sums at rational `q`,
//! with the Selberg-type closed forms they are compared against.

mod gamma;
mod selberg;

use num_traits::{One, Signed, Zero};

pub use gamma::{gamma, GammaProduct};
pub use selberg::{
    q_selberg_integrand, q_selberg_lhs, q_selberg_rhs, q_selberg_rhs_gamma_q, rho_integral_identity,
    rho_integrals_via_warnaar, selberg_gamma_forms, warnaar_rhs, RhoIntegrals,
};

use crate::error::{Error, Result};
use crate::qalg::BigRat;
use crate::shapes::partitions_in_box;

pub const DEFAULT_DEPTH: u32 = 40;

/// A rational `q` in `(0,1)` and the lattice depth `K`: the points
/// `q^0, ..., q^K` of each geometric chain are summed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPoint {
    pub q: BigRat,
    pub depth: u32,
}

impl QPoint {
    pub fn new(q: BigRat, depth: u32) -> Result<Self> {
        if !(q.is_positive() && q < BigRat::one()) {
            return Err(Error::InvalidParameters(format!("q = {q} is not in (0,1)")));
        }
        Ok(QPoint { q, depth })
    }

    fn tail_factor(&self) -> BigRat {
        num_traits::pow(self.q.clone(), self.depth as usize + 1)
    }
}

/// A truncated lattice sum and a bound on what the truncation dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QValue {
    pub value: BigRat,
    pub tail_bound: BigRat,
}

impl QValue {
    /// Whether `exact` lies within the tail bound of the value.
    pub fn contains(&self, exact: &BigRat) -> bool {
        (&self.value - exact).abs() <= self.tail_bound
    }
}

fn check_sup(v: &BigRat, sup: &BigRat) -> Result<()> {
    if v.abs() > *sup {
        return Err(Error::DivergenceSuspected(format!("|f| = {} exceeds the stated bound {sup}", v.abs())));
    }
    Ok(())
}

/// `∫_a^b f(x) d_q x = (1-q) Σ_{i≥0} (f(bq^i) b q^i - f(aq^i) a q^i)`, summed
/// for `i ≤ K`. `sup` must bound `|f|` on the lattice; a larger value
/// anywhere is reported as suspected divergence.
pub fn q_integral(f: &dyn Fn(&BigRat) -> BigRat, sup: &BigRat, a: &BigRat, b: &BigRat, pt: &QPoint) -> Result<QValue> {
    let one_minus_q = BigRat::one() - &pt.q;
    let mut acc = BigRat::zero();
    for (end, sign) in [(b, 1), (a, -1)] {
        if end.is_zero() {
            continue;
        }
        let mut x = end.clone();
        for _ in 0..=pt.depth {
            let v = f(&x);
            check_sup(&v, sup)?;
            let term = &one_minus_q * v * &x;
            if sign > 0 {
                acc += term;
            } else {
                acc -= term;
            }
            x *= &pt.q;
        }
    }
    let tail_bound = sup * (a.abs() + b.abs()) * pt.tail_factor();
    Ok(QValue { value: acc, tail_bound })
}

/// `∫_a^b x^k d_q x = (1-q)(b^{k+1} - a^{k+1}) / (1 - q^{k+1})` in closed form.
pub fn q_integral_monomial(k: u32, a: &BigRat, b: &BigRat, q: &BigRat) -> BigRat {
    let p = |x: &BigRat| num_traits::pow(x.clone(), k as usize + 1);
    (BigRat::one() - q) * (p(b) - p(a)) / (BigRat::one() - p(q))
}

/// The ordered integral over `lower ≤ x_1 ≤ ... ≤ x_n ≤ upper`, iterated as
/// `∫_lower^upper ∫_lower^{x_n} ... ∫_lower^{x_2} f d_q x_1 ... d_q x_n`.
pub fn q_integral_ordered(
    f: &dyn Fn(&[BigRat]) -> BigRat,
    sup: &BigRat,
    n: usize,
    lower: &BigRat,
    upper: &BigRat,
    pt: &QPoint,
) -> Result<QValue> {
    let one_minus_q = BigRat::one() - &pt.q;
    let mut coords = vec![BigRat::zero(); n];
    let value = nested(f, sup, n, lower, upper, pt, &one_minus_q, &mut coords)?;
    let span = lower.abs() + upper.abs();
    let tail_bound = BigRat::from_integer(n.into()) * num_traits::pow(span, n) * sup * pt.tail_factor();
    Ok(QValue { value, tail_bound })
}

#[allow(clippy::too_many_arguments)]
fn nested(
    f: &dyn Fn(&[BigRat]) -> BigRat,
    sup: &BigRat,
    k: usize,
    lower: &BigRat,
    upper: &BigRat,
    pt: &QPoint,
    one_minus_q: &BigRat,
    coords: &mut [BigRat],
) -> Result<BigRat> {
    if k == 0 {
        let v = f(coords);
        check_sup(&v, sup)?;
        return Ok(v);
    }
    let mut acc = BigRat::zero();
    for (end, positive) in [(upper.clone(), true), (lower.clone(), false)] {
        if end.is_zero() {
            continue;
        }
        let mut x = end;
        for _ in 0..=pt.depth {
            coords[k - 1] = x.clone();
            let inner = nested(f, sup, k - 1, lower, &x, pt, one_minus_q, coords)?;
            let term = one_minus_q * &x * inner;
            if positive {
                acc += term;
            } else {
                acc -= term;
            }
            x *= &pt.q;
        }
    }
    Ok(acc)
}

/// The ordered integral over `0 ≤ x_1 ≤ ... ≤ x_n ≤ 1`.
pub fn q_integral_simplex(f: &dyn Fn(&[BigRat]) -> BigRat, sup: &BigRat, n: usize, pt: &QPoint) -> Result<QValue> {
    q_integral_ordered(f, sup, n, &BigRat::zero(), &BigRat::one(), pt)
}

/// `Σ_{μ ∈ Par_n, μ_1 ≤ K} q^{|μ+δ_n|} f(q^{μ+δ_n})`, where the point is
/// listed in increasing order `x_1 ≤ ... ≤ x_n` to match the simplex.
pub fn partition_sum(f: &dyn Fn(&[BigRat]) -> BigRat, sup: &BigRat, n: usize, pt: &QPoint) -> Result<QValue> {
    let mut acc = BigRat::zero();
    for mu in partitions_in_box(n, pt.depth) {
        let parts = mu.padded(n)?;
        let exps: Vec<i64> = (0..n).rev().map(|i| parts[i] as i64 + (n - 1 - i) as i64).collect();
        let coords: Vec<BigRat> = exps.iter().map(|&e| crate::qalg::pow_rat(&pt.q, e)).collect();
        let v = f(&coords);
        check_sup(&v, sup)?;
        acc += coords.iter().product::<BigRat>() * v;
    }
    let staircase = n * n.saturating_sub(1) / 2;
    let tail_bound =
        sup * num_traits::pow(pt.q.clone(), staircase) * pt.tail_factor() / num_traits::pow(BigRat::one() - &pt.q, n);
    Ok(QValue { value: acc, tail_bound })
}

/// Both sides of the change of variables `x^m -> x` for the integrand
/// `f(x, q) = x^j q^e` on `[0,1]`, each summed in closed form from its
/// lattice definition: `∫ f(x^m, q^m) d_q x` and
/// `(1-q)/(1-p) ∫ f(x, p) x^{(1-m)/m} d_p x` with `p = q^m`.
pub fn change_of_variables(m: u32, j: u32, e: u32, q: &BigRat) -> Result<(BigRat, BigRat)> {
    if m == 0 {
        return Err(Error::InvalidParameters("m must be positive".into()));
    }
    let one = BigRat::one();
    let qp = |k: u64| num_traits::pow(q.clone(), k as usize);
    let (m, j, e) = (m as u64, j as u64, e as u64);
    // (1-q) Σ_i q^{me} q^{mij} q^i
    let lhs = (&one - q) * qp(m * e) / (&one - qp(m * j + 1));
    // (1-p) Σ_i p^e (p^i)^{j + (1-m)/m + 1}, whose ratio is q^{m(j+1) + 1 - m}
    let p = qp(m);
    let inner = (&one - &p) * num_traits::pow(p.clone(), e as usize) / (&one - qp(m * (j + 1) + 1 - m));
    let rhs = (&one - q) / (&one - &p) * inner;
    Ok((lhs, rhs))
}
