//! Excited diagrams and Naruse's hook length formula for skew shapes,
//! together with its `q`-analog.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::oracle::Caps;
use crate::qalg::{factorial, BigRat, QFactored, QSeries};
use crate::shapes::{hook_with_conjugate, Cell, CellSet, SkewShape};

/// All excited diagrams of a skew shape, in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExcitedFamily {
    pub shape: SkewShape,
    pub diagrams: Vec<CellSet>,
}

impl ExcitedFamily {
    pub fn len(&self) -> usize {
        self.diagrams.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagrams.is_empty()
    }
}

/// Closure of the inner diagram under moves `(i,j) -> (i+1,j+1)`, allowed
/// when the target lies in the outer shape and none of `(i,j+1)`, `(i+1,j)`,
/// `(i+1,j+1)` is occupied.
pub fn excited_diagrams(shape: &SkewShape) -> Result<ExcitedFamily> {
    excited_diagrams_with(shape, &Caps::from_env())
}

pub fn excited_diagrams_with(shape: &SkewShape, caps: &Caps) -> Result<ExcitedFamily> {
    let mut diagrams = Vec::new();
    for_each_excited(shape, caps, &mut |cells| {
        diagrams.push(cells.iter().copied().collect());
        Ok(())
    })?;
    diagrams.sort_unstable();
    Ok(ExcitedFamily { shape: shape.clone(), diagrams })
}

/// Calls `visit` with the cells of every excited diagram, in no particular
/// order, and returns how many there were.
pub(crate) fn for_each_excited(
    shape: &SkewShape,
    caps: &Caps,
    visit: &mut dyn FnMut(&[Cell]) -> Result<()>,
) -> Result<usize> {
    // A diagram is fixed by how far each inner cell slid along its diagonal.
    // The shifts weakly increase along rows and down columns, and every cell
    // must stay inside the outer shape; each such array is one diagram.
    let outer = shape.outer();
    let inner = shape.inner().parts().to_vec();
    let start: Vec<Cell> = shape.inner().cells().collect();
    let reach: Vec<u32> = start
        .iter()
        .map(|c| (0..).take_while(|&k| outer.contains(Cell::new(c.row + k, c.col + k))).count() as u32 - 1)
        .collect();
    let index = |row: u32, col: u32| -> Option<usize> {
        if (row as usize) <= inner.len() && col <= inner[row as usize - 1] {
            Some(inner[..row as usize - 1].iter().sum::<u32>() as usize + col as usize - 1)
        } else {
            None
        }
    };
    let mut walk = Walk {
        right: start.iter().map(|c| index(c.row, c.col + 1)).collect(),
        below: start.iter().map(|c| index(c.row + 1, c.col)).collect(),
        cells: start.clone(),
        start,
        reach,
        shifts: Vec::new(),
        count: 0,
        cap: caps.excited_diagrams,
    };
    walk.shifts = vec![0; walk.start.len()];
    walk.fill(walk.start.len(), visit)?;
    Ok(walk.count)
}

struct Walk {
    start: Vec<Cell>,
    cells: Vec<Cell>,
    reach: Vec<u32>,
    right: Vec<Option<usize>>,
    below: Vec<Option<usize>>,
    shifts: Vec<u32>,
    count: usize,
    cap: usize,
}

impl Walk {
    fn fill(&mut self, k: usize, visit: &mut dyn FnMut(&[Cell]) -> Result<()>) -> Result<()> {
        if k == 0 {
            self.count += 1;
            if self.count > self.cap {
                return Err(Error::CapExceeded { what: "excited diagram family", size: self.count, cap: self.cap });
            }
            return visit(&self.cells);
        }
        let i = k - 1;
        let mut top = self.reach[i];
        for nb in [self.right[i], self.below[i]].into_iter().flatten() {
            top = top.min(self.shifts[nb]);
        }
        let c = self.start[i];
        for s in 0..=top {
            self.shifts[i] = s;
            self.cells[i] = Cell { row: c.row + s, col: c.col + s };
            self.fill(i, visit)?;
        }
        Ok(())
    }
}

/// Hook length and `λ'_j - i` for every cell of the outer shape, with the
/// totals over all cells.
pub(crate) struct HookTable {
    rows: Vec<Vec<(u32, i64)>>,
    hook_product: BigInt,
    exponent: i64,
    hooks: BTreeMap<u64, i64>,
}

impl HookTable {
    pub(crate) fn new(shape: &SkewShape) -> Self {
        let outer = shape.outer();
        let conj = outer.conjugate();
        let mut rows = Vec::with_capacity(outer.len());
        let (mut hook_product, mut exponent, mut hooks) = (BigInt::from(1), 0, BTreeMap::new());
        for (i, &len) in outer.parts().iter().enumerate() {
            let row: Vec<(u32, i64)> = (1..=len)
                .map(|j| {
                    let c = Cell::new(i as u32 + 1, j);
                    (hook_with_conjugate(outer, &conj, c), conj.part(j as usize) as i64 - c.row as i64)
                })
                .collect();
            for &(h, e) in &row {
                hook_product *= h;
                exponent += e;
                *hooks.entry(h as u64).or_insert(0) -= 1;
            }
            rows.push(row);
        }
        HookTable { rows, hook_product, exponent, hooks }
    }

    fn at(&self, c: Cell) -> (u32, i64) {
        self.rows[c.row as usize - 1][c.col as usize - 1]
    }

    /// `∏_{c ∈ D} h(c)`, so that the Naruse summand is this over the full
    /// hook product.
    fn diagram_hooks(&self, d: &[Cell]) -> BigInt {
        d.iter().fold(BigInt::from(1), |acc, &c| acc * self.at(c).0)
    }

    pub(crate) fn q_term(&self, d: &[Cell]) -> QFactored {
        let mut hooks = self.hooks.clone();
        let mut exponent = self.exponent;
        for &c in d {
            let (h, e) = self.at(c);
            exponent -= e;
            let m = hooks.entry(h as u64).or_insert(0);
            *m += 1;
            if *m == 0 {
                hooks.remove(&(h as u64));
            }
        }
        QFactored::from_parts(BigRat::from_integer(1.into()), exponent, hooks)
    }
}

/// The Naruse summand for one diagram: `∏_{(i,j) ∈ λ \ D} 1/h_λ(i,j)`.
pub fn naruse_term(shape: &SkewShape, d: &CellSet) -> BigRat {
    let table = HookTable::new(shape);
    BigRat::new(table.diagram_hooks(d.as_slice()), table.hook_product.clone())
}

/// `f^{λ/μ} = |λ/μ|! Σ_D ∏_{λ\D} 1/h_λ`.
pub fn naruse_count(shape: &SkewShape) -> Result<BigInt> {
    let table = HookTable::new(shape);
    let mut sum = BigInt::zero();
    for_each_excited(shape, &Caps::from_env(), &mut |d| {
        sum += table.diagram_hooks(d);
        Ok(())
    })?;
    let total = BigRat::new(sum * factorial(crate::shapes::RowIntervals::size(shape) as u64), table.hook_product);
    if !total.is_integer() {
        return Err(Error::NonInteger(total.to_string()));
    }
    Ok(total.to_integer())
}

/// The `q`-summand for one diagram: `∏_{(i,j) ∈ λ \ D} q^{λ'_j - i} / (1 - q^{h_λ(i,j)})`.
pub fn naruse_q_term(shape: &SkewShape, d: &CellSet) -> QFactored {
    HookTable::new(shape).q_term(d.as_slice())
}

/// The right side of the `q`-analog expanded through `q^t`; equals the
/// semistandard generating function of the shape.
pub fn naruse_q_series(shape: &SkewShape, t: i64) -> Result<QSeries> {
    let table = HookTable::new(shape);
    let mut acc = QSeries::zero(Some(t));
    for_each_excited(shape, &Caps::from_env(), &mut |d| {
        acc = &acc + &table.q_term(d).expand(t)?;
        Ok(())
    })?;
    Ok(acc)
}
