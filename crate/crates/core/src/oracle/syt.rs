use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Caps;
use crate::error::{Error, Result};
use crate::qalg::QSeries;
use crate::shapes::{RowIntervals, Shape, SkewShape};

/// Per-row filled-prefix lengths of a downset of the cell poset.
pub type DownsetKey = Vec<u8>;

/// Row-interval view of a diagram with the cover relations precomputed.
struct Frontier {
    starts: Vec<u32>,
    lens: Vec<u8>,
}

impl Frontier {
    fn new(shape: &impl RowIntervals) -> Self {
        let rows = shape.row_intervals();
        let starts = rows.iter().map(|&(lo, _)| lo).collect();
        let lens = rows.iter().map(|&(lo, hi)| if hi >= lo { (hi - lo + 1) as u8 } else { 0 }).collect();
        Frontier { starts, lens }
    }

    /// Column of the next cell to fill in row `r`, if it can be added to `key`.
    fn addable(&self, key: &[u8], r: usize) -> Option<u32> {
        if key[r] >= self.lens[r] {
            return None;
        }
        let col = self.starts[r] + key[r] as u32;
        if r > 0 {
            let (s, l) = (self.starts[r - 1], self.lens[r - 1] as u32);
            let above_in_shape = col >= s && col < s + l;
            if above_in_shape && col >= s + key[r - 1] as u32 {
                return None;
            }
        }
        Some(col)
    }

    /// Row-major position of the next cell in row `r`.
    fn row_major_index(&self, key: &[u8], r: usize) -> usize {
        self.lens[..r].iter().map(|&l| l as usize).sum::<usize>() + key[r] as usize
    }
}

fn check_cap(size: usize, caps: &Caps) -> Result<()> {
    if size > caps.count_cells {
        return Err(Error::CapExceeded { what: "shape", size, cap: caps.count_cells });
    }
    Ok(())
}

/// Number of standard fillings, by dynamic programming over downsets.
pub fn count_syt_downset(shape: &impl RowIntervals, caps: &Caps) -> Result<BigInt> {
    check_cap(shape.size(), caps)?;
    let fr = Frontier::new(shape);
    let mut memo: HashMap<DownsetKey, BigInt> = HashMap::new();
    fn go(fr: &Frontier, key: &mut DownsetKey, memo: &mut HashMap<DownsetKey, BigInt>) -> BigInt {
        if key.iter().zip(&fr.lens).all(|(k, l)| k == l) {
            return BigInt::one();
        }
        if let Some(v) = memo.get(key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for r in 0..key.len() {
            if fr.addable(key, r).is_some() {
                key[r] += 1;
                total += go(fr, key, memo);
                key[r] -= 1;
            }
        }
        memo.insert(key.clone(), total.clone());
        total
    }
    let mut key = vec![0u8; fr.lens.len()];
    Ok(go(&fr, &mut key, &mut memo))
}

/// Number of standard fillings of `λ/μ` by removing outer corners of `λ`
/// (the cell holding the largest entry) recursively.
pub fn count_syt_corners(shape: &SkewShape, caps: &Caps) -> Result<BigInt> {
    check_cap(shape.size(), caps)?;
    let inner: Vec<u32> = shape.inner().padded(shape.outer().len()).expect("contained");
    let mut memo: HashMap<Vec<u32>, BigInt> = HashMap::new();
    fn go(lam: &mut Vec<u32>, inner: &[u32], memo: &mut HashMap<Vec<u32>, BigInt>) -> BigInt {
        if lam.as_slice() == inner {
            return BigInt::one();
        }
        if let Some(v) = memo.get(lam) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for i in 0..lam.len() {
            let next = lam.get(i + 1).copied().unwrap_or(0);
            if lam[i] > inner[i] && lam[i] > next {
                lam[i] -= 1;
                total += go(lam, inner, memo);
                lam[i] += 1;
            }
        }
        memo.insert(lam.clone(), total.clone());
        total
    }
    let mut lam = shape.outer().parts().to_vec();
    Ok(go(&mut lam, &inner, &mut memo))
}

/// Number of standard Young tableaux. Unshifted shapes are counted by two
/// independent methods which must agree.
pub fn count_syt(shape: impl Into<Shape>) -> Result<BigInt> {
    count_syt_with(&shape.into(), &Caps::from_env())
}

pub fn count_syt_with(shape: &Shape, caps: &Caps) -> Result<BigInt> {
    let by_downsets = count_syt_downset(shape, caps)?;
    if let Shape::Skew(s) = shape {
        let by_corners = count_syt_corners(s, caps)?;
        if by_corners != by_downsets {
            return Err(Error::Mismatch(format!(
                "SYT counts for {s} disagree: downsets {by_downsets}, corners {by_corners}"
            )));
        }
    }
    Ok(by_downsets)
}

/// `W(q) = Σ_w q^{maj(w)}` over standard fillings, with the descent
/// statistic chosen so that the reverse plane partitions of the shape have
/// generating function `W(q) / (q;q)_p`. Filling `k+1` strictly above `k`
/// is a descent of weight `p - k`.
pub fn rpp_numerator(shape: &impl RowIntervals, caps: &Caps) -> Result<QSeries> {
    let p = shape.size();
    check_cap(p, caps)?;
    let fr = Frontier::new(shape);
    let rows = fr.lens.len();
    // layer: (downset, row of the last added cell) -> polynomial coefficients
    let mut layer: HashMap<(DownsetKey, usize), Vec<BigInt>> = HashMap::new();
    let start = vec![0u8; rows];
    for r in 0..rows {
        if fr.addable(&start, r).is_some() {
            let mut k = start.clone();
            k[r] += 1;
            layer.insert((k, r), vec![BigInt::one()]);
        }
    }
    if p == 0 {
        return Ok(QSeries::one());
    }
    for k in 1..p {
        let mut next: HashMap<(DownsetKey, usize), Vec<BigInt>> = HashMap::new();
        for ((key, last_row), poly) in &layer {
            let mut prev_key = key.clone();
            prev_key[*last_row] -= 1;
            let last_pos = fr.row_major_index(&prev_key, *last_row);
            for r in 0..rows {
                if fr.addable(key, r).is_none() {
                    continue;
                }
                let pos = fr.row_major_index(key, r);
                let shift = if pos < last_pos { p - k } else { 0 };
                let mut nk = key.clone();
                nk[r] += 1;
                let entry = next.entry((nk, r)).or_default();
                if entry.len() < poly.len() + shift {
                    entry.resize(poly.len() + shift, BigInt::zero());
                }
                for (i, c) in poly.iter().enumerate() {
                    entry[i + shift] += c;
                }
            }
        }
        layer = next;
    }
    let mut total: Vec<BigInt> = Vec::new();
    for poly in layer.values() {
        if total.len() < poly.len() {
            total.resize(poly.len(), BigInt::zero());
        }
        for (i, c) in poly.iter().enumerate() {
            total[i] += c;
        }
    }
    Ok(QSeries::from_coeffs(0, total, None))
}
