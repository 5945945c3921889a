use crate::error::{Error, Result};
use crate::qalg::{poch, QFactored, QSeries, XQSeries};
use crate::shapes::{build_m, hook_with_conjugate, Cell, RowIntervals, SkewShape};

/// `Σ_{(i,j) ∈ λ/(c^a)} (λ'_j - i)`.
pub fn m_exponent(shape: &SkewShape) -> i64 {
    let conj = shape.outer().conjugate();
    shape.cell_list().iter().map(|c| conj.part(c.col as usize) as i64 - c.row as i64).sum()
}

/// `∏_{i ≤ n, j ≤ a, k ≤ c} (1 - q^{m(i+j+k-1)}) / (1 - q^{m(i+j+k-2)})`.
pub fn triple_product(n: u32, a: u32, c: u32, m: u32) -> QFactored {
    let m = m as u64;
    let mut f = QFactored::one();
    for i in 1..=n as u64 {
        for j in 1..=a as u64 {
            for k in 1..=c as u64 {
                f = &f * &QFactored::factor(m * (i + j + k - 1), 1);
                f = &f * &QFactored::factor(m * (i + j + k - 2), -1);
            }
        }
    }
    f
}

/// The `a × c` block in rows `n+1..n+a` whose hooks are left out.
fn in_removed_block(cell: Cell, n: u32, a: u32, c: u32) -> bool {
    cell.row > n && cell.row <= n + a && cell.col <= c
}

/// Whether a cell lies in the `(n+c)^{n+a}` rectangle.
pub fn chi(cell: Cell, n: u32, a: u32, c: u32) -> bool {
    cell.row <= n + a && cell.col <= n + c
}

/// Hooks of the outer shape outside the removed block, with their cells.
fn kept_hooks(shape: &SkewShape, n: u32, a: u32, c: u32) -> Vec<(Cell, u64)> {
    let outer = shape.outer();
    let conj = outer.conjugate();
    outer
        .cells()
        .filter(|&cell| !in_removed_block(cell, n, a, c))
        .map(|cell| (cell, hook_with_conjugate(outer, &conj, cell) as u64))
        .collect()
}

/// The product generating function of SSYT of the M-shape as a factored
/// `q`-product.
pub fn s_m_factored(n: u32, a: u32, b: u32, c: u32, d: u32, m: u32) -> Result<QFactored> {
    let shape = build_m(n, a, b, c, d, m)?;
    let mut f = &QFactored::q_power(m_exponent(&shape)) * &triple_product(n, a, c, m);
    for (_, h) in kept_hooks(&shape, n, a, c) {
        f = &f * &QFactored::factor(h, -1);
    }
    Ok(f)
}

/// [`s_m_factored`] expanded through `q^t`.
pub fn s_m_gf(n: u32, a: u32, b: u32, c: u32, d: u32, m: u32, t: i64) -> Result<QSeries> {
    s_m_factored(n, a, b, c, d, m)?.expand(t)
}

/// Generating function of SSYT of the M-shape (`m = 1`) with entries at most
/// `bound`, as an exact polynomial.
pub fn s_m_bounded(n: u32, a: u32, b: u32, c: u32, d: u32, bound: u32) -> Result<QSeries> {
    let mut f = s_m_factored(n, a, b, c, d, 1)?;
    let big_n = bound as i64;
    let (n, a, b, c, d) = (n as i64, a as i64, b as i64, c as i64, d as i64);
    for i in 1..=b {
        f = &f * &poch(big_n - a + 1 + i, a as u64);
    }
    for i in 1..=d {
        f = &f * &poch(big_n + 2 - i, c as u64);
    }
    for i in 1..=n {
        f = &f * &poch(big_n - n - a - d + 1 + i, (n + a + b + c + d) as u64);
    }
    f.to_polynomial()
}

/// `Σ x^{tr(T)} q^{|T|}` over SSYT of the M-shape through `q^t`.
pub fn trace_gf_formula(n: u32, a: u32, b: u32, c: u32, d: u32, m: u32, t: i64) -> Result<XQSeries> {
    let shape = build_m(n, a, b, c, d, m)?;
    let mut plain = &QFactored::q_power(m_exponent(&shape)) * &triple_product(n, a, c, m);
    let mut traced = XQSeries::one(t);
    for (cell, h) in kept_hooks(&shape, n, a, c) {
        if chi(cell, n, a, c) {
            traced = traced.mul(&XQSeries::geometric(1, h as i64, t));
        } else {
            plain = &plain * &QFactored::factor(h, -1);
        }
    }
    let x_shift = (n * a + n * n.saturating_sub(1) / 2) as u64;
    if !plain.prefactor().is_integer() {
        return Err(Error::NonInteger(plain.to_string()));
    }
    Ok(traced.mul_q(&plain.expand(t)?).shift_x(x_shift))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{gf_bounded, gf_tableaux, gf_trace, TableauKind};

    #[test]
    fn single_cell() {
        assert_eq!(s_m_gf(1, 0, 0, 0, 0, 1, 3).unwrap().to_string(), "1 + q + q^2 + q^3 (+O(q^4))");
        assert_eq!(s_m_bounded(1, 0, 0, 0, 0, 2).unwrap().to_string(), "1 + q + q^2");
        assert_eq!(s_m_bounded(1, 0, 0, 0, 0, 0).unwrap().to_string(), "1");
        assert_eq!(trace_gf_formula(1, 0, 0, 0, 0, 1, 2).unwrap().to_string(), "1 + x q + x^2 q^2 (+O(q^3))");
    }

    #[test]
    fn small_m_shape() {
        assert_eq!(s_m_bounded(1, 1, 0, 1, 0, 1).unwrap().to_string(), "q + q^2");
        let shape = build_m(1, 1, 0, 1, 0, 1).unwrap();
        let oracle = gf_tableaux(shape.clone(), TableauKind::Ssyt, 4, None).unwrap();
        assert_eq!(s_m_gf(1, 1, 0, 1, 0, 1, 4).unwrap(), oracle);
        let poly = gf_bounded(shape, TableauKind::Ssyt, 3).unwrap();
        assert_eq!(s_m_bounded(1, 1, 0, 1, 0, 3).unwrap(), poly);
        let tr = trace_gf_formula(1, 1, 0, 1, 0, 1, 4).unwrap();
        assert!(tr.agrees(&gf_trace(1, 1, 0, 1, 0, 1, 4).unwrap()).unwrap());
    }

    #[test]
    fn trace_without_chi_region() {
        let tr = trace_gf_formula(0, 1, 1, 1, 0, 1, 6).unwrap();
        assert_eq!(tr.x_degrees().collect::<Vec<_>>(), vec![0]);
        assert_eq!(tr.at_x_one(), s_m_gf(0, 1, 1, 1, 0, 1, 6).unwrap());
    }
}
