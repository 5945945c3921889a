use crate::error::{Error, Result};
use crate::oracle::TableauKind;
use crate::qalg::{alternant, poch, QFactored, QSeries};
use crate::shapes::{Partition, StrictPartition};

/// The shifted shape `(δ_{n+1} + λ)*`.
pub fn staircase_plus(lam: &Partition, n: usize) -> Result<StrictPartition> {
    let parts = lam.padded(n)?;
    StrictPartition::new((0..n).map(|i| parts[i] + (n - i) as u32).collect())
}

/// Right side of the fixed-diagonal generating function for fillings of
/// `(δ_{n+1}+λ)*` whose reverse diagonal is `diag`, through `q^t`.
pub fn fixed_diag_rhs(kind: TableauKind, lam: &Partition, diag: &Partition, n: usize, t: i64) -> Result<QSeries> {
    let lam_parts = lam.padded(n)?;
    let diag_parts = diag.padded(n)?;
    let nu: Vec<i64> = match kind {
        TableauKind::Rpp => (0..n).map(|i| diag_parts[i] as i64 + (n - 1 - i) as i64).collect(),
        _ => diag_parts.iter().map(|&v| v as i64).collect(),
    };
    let nu_size: i64 = nu.iter().sum();
    let exponent = match kind {
        TableauKind::Rpp => {
            nu_size - staircase_plus(lam, n)?.parts().iter().enumerate().map(|(i, &p)| i as i64 * p as i64).sum::<i64>()
        }
        TableauKind::Ssyt => nu_size,
        TableauKind::Rst => {
            let (nn, nn_conj) = (lam.nn() as i64, lam.conjugate().nn() as i64);
            let n = n as i64;
            nu_size + nn_conj - nn + n * lam.size() as i64 + (n + 1) * n * (n - 1) / 6
        }
    };
    let mut pre = QFactored::q_power(exponent);
    for (j, &p) in lam_parts.iter().enumerate() {
        pre = &pre / &poch(1, p as u64 + (n - 1 - j) as u64);
    }
    let alt = alternant(lam, &nu)?;
    let Some(v) = alt.valuation() else {
        return Ok(QSeries::zero(Some(t)));
    };
    Ok((&pre.expand(t - v)? * &alt).truncate(t))
}

/// `∏_{i ≤ a, j ≤ b, k ≤ c} (1 - q^{i+j+k-1}) / (1 - q^{i+j+k-2})`.
pub fn macmahon_box(a: u32, b: u32, c: u32) -> QFactored {
    let mut f = QFactored::one();
    for i in 1..=a as u64 {
        for j in 1..=b as u64 {
            for k in 1..=c as u64 {
                f = &f * &QFactored::factor(i + j + k - 1, 1);
                f = &f * &QFactored::factor(i + j + k - 2, -1);
            }
        }
    }
    f
}

/// The generating function of SSYT of the `a × b` rectangle with entries
/// at most `c`: `q^{b·C(a,2)}` times [`macmahon_box`].
pub fn ssyt_box(a: u32, b: u32, c: u32) -> QFactored {
    let shift = b as i64 * (a as i64 * (a as i64 - 1) / 2);
    &QFactored::q_power(shift) * &macmahon_box(a, b, c)
}

/// Bounded reverse plane partitions of the `a × b` box, written through the
/// fixed-diagonal formula with `λ = ∅`, `n = a+b` and reverse diagonal
/// `(c^b, 0^a)`.
pub fn box_via_fixed_diag(a: u32, b: u32, c: u32) -> Result<QSeries> {
    let n = (a + b) as usize;
    let diag = Partition::rectangle(b as usize, c);
    let t = (a * b * c) as i64 + c as i64 * (b as i64 * (b as i64 + 1) / 2);
    let rhs = fixed_diag_rhs(TableauKind::Rpp, &Partition::empty(), &diag, n, t)?;
    let shifted = rhs.shift(-(c as i64) * (b as i64 * (b as i64 + 1) / 2));
    if shifted.valuation().is_some_and(|v| v < 0) {
        return Err(Error::NotPolynomial(shifted.to_string()));
    }
    // the largest weight in the box is abc, so nothing is lost
    Ok(shifted.truncate(t - c as i64 * (b as i64 * (b as i64 + 1) / 2)).into_exact())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{count_box_rpp, gf_fixed_diag};

    #[test]
    fn one_row_examples() {
        let e = Partition::empty();
        let rhs = fixed_diag_rhs(TableauKind::Rpp, &e, &Partition::new(vec![3]).unwrap(), 1, 6).unwrap();
        assert_eq!(rhs.to_string(), "q^3 (+O(q^7))");
        let rhs = fixed_diag_rhs(
            TableauKind::Rpp,
            &Partition::new(vec![1]).unwrap(),
            &Partition::new(vec![2]).unwrap(),
            1,
            6,
        )
        .unwrap();
        assert_eq!(rhs.to_string(), "q^4 + q^5 + q^6 (+O(q^7))");
    }

    #[test]
    fn ssyt_against_oracle() {
        let lam = Partition::new(vec![1]).unwrap();
        let nu = Partition::new(vec![2]).unwrap();
        let rhs = fixed_diag_rhs(TableauKind::Ssyt, &lam, &nu, 2, 8).unwrap();
        let outer = staircase_plus(&lam, 2).unwrap();
        let oracle = gf_fixed_diag(&outer, TableauKind::Ssyt, &[2, 0], 8).unwrap();
        assert_eq!(rhs, oracle);
    }

    #[test]
    fn macmahon_examples() {
        assert_eq!(macmahon_box(1, 1, 1).to_polynomial().unwrap().to_string(), "1 + q");
        assert_eq!(macmahon_box(2, 3, 0), QFactored::one());
        assert_eq!(macmahon_box(2, 2, 2).limit_q1(0).unwrap(), crate::qalg::int(20));
        assert_eq!(macmahon_box(2, 2, 2).to_polynomial().unwrap(), count_box_rpp(2, 2, 2).unwrap());
    }

    #[test]
    fn box_reduction() {
        for (a, b, c) in [(1, 1, 1), (2, 1, 2), (1, 2, 2), (2, 2, 1)] {
            let red = box_via_fixed_diag(a, b, c).unwrap();
            let direct = count_box_rpp(a, b, c).unwrap();
            assert!(red.agrees(&direct), "{a},{b},{c}: {red} vs {direct}");
        }
    }
}
