use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::series::QSeries;
use crate::error::Result;
use crate::shapes::Partition;

/// Largest size evaluated by permutation expansion.
pub const PERMUTATION_LIMIT: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DetMethod {
    Auto,
    Permutations,
    Elimination,
}

/// `det[q^{ν_{n+1-j} (λ_i + n - i)}]_{i,j=1..n}` with `n = ν.len()`, which is
/// `ā_{λ+δ_n}(q^{ν_1}, ..., q^{ν_n})`.
pub fn alternant(lam: &Partition, nu: &[i64]) -> Result<QSeries> {
    alternant_with(lam, nu, DetMethod::Auto)
}

pub fn alternant_with(lam: &Partition, nu: &[i64], method: DetMethod) -> Result<QSeries> {
    let n = nu.len();
    let parts = lam.padded(n)?;
    let exps: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let row_power = parts[i] as i64 + (n - 1 - i) as i64;
            (0..n).map(|j| nu[n - 1 - j] * row_power).collect()
        })
        .collect();
    let use_perm = match method {
        DetMethod::Auto => n <= PERMUTATION_LIMIT,
        DetMethod::Permutations => true,
        DetMethod::Elimination => false,
    };
    Ok(if use_perm { det_permutations(&exps) } else { det_elimination(&exps) })
}

/// Determinant of a matrix of monomials `q^{e_ij}` by summing over
/// permutations (Heap's algorithm, tracking the sign).
fn det_permutations(exps: &[Vec<i64>]) -> QSeries {
    let n = exps.len();
    let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut sign = 1i64;
    let mut record = |perm: &[usize], sign: i64| {
        let e: i64 = (0..n).map(|i| exps[i][perm[i]]).sum();
        *acc.entry(e).or_default() += sign;
    };
    record(&perm, sign);
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            record(&perm, sign);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    from_map(acc)
}

fn from_map(acc: BTreeMap<i64, BigInt>) -> QSeries {
    let Some((&lo, _)) = acc.iter().next() else {
        return QSeries::zero(None);
    };
    let hi = *acc.keys().last().expect("nonempty");
    let coeffs = (lo..=hi).map(|e| acc.get(&e).cloned().unwrap_or_default()).collect();
    QSeries::from_coeffs(lo, coeffs, None)
}

type Poly = Vec<BigInt>;

fn poly_trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    poly_trim(out)
}

fn poly_sub(a: &Poly, b: &Poly) -> Poly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    poly_trim((0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect())
}

/// Exact division in `ℤ[q]`; panics if the divisor does not divide.
fn poly_div_exact(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() {
        return Vec::new();
    }
    let db = b.len() - 1;
    let lead = &b[db];
    let mut rem = a.clone();
    let mut quo = vec![BigInt::zero(); a.len() - db];
    for k in (0..quo.len()).rev() {
        let top = rem[k + db].clone();
        if top.is_zero() {
            continue;
        }
        let (qk, r) = top.div_rem(lead);
        assert!(r.is_zero(), "inexact division in fraction-free elimination");
        for (i, bi) in b.iter().enumerate() {
            rem[k + i] -= &qk * bi;
        }
        quo[k] = qk;
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact division in fraction-free elimination");
    poly_trim(quo)
}

/// Bareiss fraction-free elimination over `ℤ[q]` after pulling the lowest
/// power of `q` out of each row.
fn det_elimination(exps: &[Vec<i64>]) -> QSeries {
    let n = exps.len();
    if n == 0 {
        return QSeries::one();
    }
    let mut shift = 0i64;
    let mut m: Vec<Vec<Poly>> = exps
        .iter()
        .map(|row| {
            let lo = *row.iter().min().expect("nonempty row");
            shift += lo;
            row.iter()
                .map(|&e| {
                    let mut p = vec![BigInt::zero(); (e - lo) as usize + 1];
                    p[(e - lo) as usize] = BigInt::one();
                    p
                })
                .collect()
        })
        .collect();
    let mut sign = BigInt::one();
    let mut prev: Poly = vec![BigInt::one()];
    for k in 0..n - 1 {
        if m[k][k].is_empty() {
            match (k + 1..n).find(|&r| !m[r][k].is_empty()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return QSeries::zero(None),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = poly_sub(&poly_mul(&m[i][j], &m[k][k]), &poly_mul(&m[i][k], &m[k][j]));
                m[i][j] = poly_div_exact(&num, &prev);
            }
            m[i][k] = Vec::new();
        }
        prev = m[k][k].clone();
    }
    let det: Poly = m[n - 1][n - 1].iter().map(|c| c * &sign).collect();
    QSeries::from_coeffs(shift, det, None)
}

/// `∏_{i<j} (q^{ν_j} - q^{ν_i})`, the product form of `alternant(∅, ν)`.
pub fn vandermonde_reversed(nu: &[i64]) -> QSeries {
    let mut acc = QSeries::one();
    for i in 0..nu.len() {
        for j in i + 1..nu.len() {
            let diff = &QSeries::monomial(BigInt::one(), nu[j]) - &QSeries::monomial(BigInt::one(), nu[i]);
            acc = &acc * &diff;
        }
    }
    acc
}
