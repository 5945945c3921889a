use num_bigint::BigInt;

use super::Caps;
use crate::error::{Error, Result};
use crate::qalg::{QSeries, XQSeries};
use crate::shapes::{build_m, Cell, Partition, RowIntervals, Shape, ShiftedSkewShape, SkewShape, StrictPartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TableauKind {
    /// Rows weak, columns strict.
    Ssyt,
    /// Rows weak, columns weak.
    Rpp,
    /// Rows strict, columns weak.
    Rst,
}

impl TableauKind {
    fn strictness(self) -> (u64, u64) {
        match self {
            TableauKind::Ssyt => (0, 1),
            TableauKind::Rpp => (0, 0),
            TableauKind::Rst => (1, 0),
        }
    }
}

impl std::str::FromStr for TableauKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ssyt" => Ok(TableauKind::Ssyt),
            "rpp" => Ok(TableauKind::Rpp),
            "rst" => Ok(TableauKind::Rst),
            _ => Err(Error::Parse(format!("unknown tableau kind {s:?}"))),
        }
    }
}

/// Depth-first enumeration in row-major order.
struct Filler {
    left: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
    pinned: Vec<Option<u64>>,
    traced: Vec<bool>,
    /// Minimal weight of cells `k..`.
    rest_min: Vec<u64>,
    row_strict: u64,
    col_strict: u64,
    max_entry: u64,
    budget: Option<u64>,
}

impl Filler {
    fn new(cells: &[Cell], kind: TableauKind, max_entry: u64, budget: Option<u64>) -> Self {
        let pos = |c: Cell| cells.binary_search(&c).ok();
        let left = cells.iter().map(|c| if c.col > 1 { pos(Cell::new(c.row, c.col - 1)) } else { None }).collect();
        let above = cells.iter().map(|c| if c.row > 1 { pos(Cell::new(c.row - 1, c.col)) } else { None }).collect();
        let (row_strict, col_strict) = kind.strictness();
        let n = cells.len();
        Filler {
            left,
            above,
            pinned: vec![None; n],
            traced: vec![false; n],
            rest_min: vec![0; n + 1],
            row_strict,
            col_strict,
            max_entry,
            budget,
        }
    }

    /// Propagates lower bounds; `false` when a pin is below its bound.
    fn prepare(&mut self) -> bool {
        let n = self.left.len();
        let mut minval = vec![0u64; n];
        let mut ok = true;
        for k in 0..n {
            let mut lo = 0;
            if let Some(l) = self.left[k] {
                lo = lo.max(minval[l] + self.row_strict);
            }
            if let Some(a) = self.above[k] {
                lo = lo.max(minval[a] + self.col_strict);
            }
            minval[k] = match self.pinned[k] {
                Some(p) => {
                    ok &= p >= lo;
                    p
                }
                None => lo,
            };
        }
        for k in (0..n).rev() {
            self.rest_min[k] = self.rest_min[k + 1] + minval[k];
        }
        ok
    }

    /// Calls `leaf(weight, trace)` once per filling within the budget.
    fn run(&self, leaf: &mut dyn FnMut(u64, u64)) {
        let mut vals = vec![0u64; self.left.len()];
        self.dfs(0, 0, 0, &mut vals, leaf);
    }

    fn dfs(&self, k: usize, weight: u64, trace: u64, vals: &mut [u64], leaf: &mut dyn FnMut(u64, u64)) {
        if k == vals.len() {
            leaf(weight, trace);
            return;
        }
        let mut lo = 0;
        if let Some(l) = self.left[k] {
            lo = lo.max(vals[l] + self.row_strict);
        }
        if let Some(a) = self.above[k] {
            lo = lo.max(vals[a] + self.col_strict);
        }
        let mut hi = self.max_entry;
        if let Some(b) = self.budget {
            let floor = weight + self.rest_min[k + 1];
            if floor > b {
                return;
            }
            hi = hi.min(b - floor);
        }
        let (lo, hi) = match self.pinned[k] {
            Some(p) if p >= lo && p <= hi => (p, p),
            Some(_) => return,
            None => (lo, hi),
        };
        for v in lo..=hi {
            vals[k] = v;
            let t = if self.traced[k] { trace + v } else { trace };
            self.dfs(k + 1, weight + v, t, vals, leaf);
        }
    }
}

fn check_cells(n: usize, caps: &Caps) -> Result<()> {
    if n > caps.enumeration_cells {
        return Err(Error::CapExceeded { what: "shape", size: n, cap: caps.enumeration_cells });
    }
    Ok(())
}

fn check_weight(t: i64, caps: &Caps) -> Result<u64> {
    if t < 0 {
        return Ok(0);
    }
    if t > caps.series_weight {
        return Err(Error::CapExceeded {
            what: "truncation order",
            size: t as usize,
            cap: caps.series_weight as usize,
        });
    }
    Ok(t as u64)
}

fn series_from_counts(counts: &[u64], horizon: Option<i64>) -> QSeries {
    QSeries::from_coeffs(0, counts.iter().map(|&c| BigInt::from(c)).collect(), horizon)
}

/// `Σ q^{|T|}` over fillings of the given kind through `q^t`, with entries at
/// most `max_entry` (default `t`, which makes every coefficient exact).
pub fn gf_tableaux(shape: impl Into<Shape>, kind: TableauKind, t: i64, max_entry: Option<u64>) -> Result<QSeries> {
    gf_tableaux_with(&shape.into(), kind, t, max_entry, &Caps::from_env())
}

pub fn gf_tableaux_with(
    shape: &Shape,
    kind: TableauKind,
    t: i64,
    max_entry: Option<u64>,
    caps: &Caps,
) -> Result<QSeries> {
    let cells = shape.cell_list();
    check_cells(cells.len(), caps)?;
    let budget = check_weight(t, caps)?;
    if t < 0 {
        return Ok(QSeries::zero(Some(t)));
    }
    let mut f = Filler::new(&cells, kind, max_entry.unwrap_or(budget), Some(budget));
    f.prepare();
    let mut counts = vec![0u64; budget as usize + 1];
    f.run(&mut |w, _| counts[w as usize] += 1);
    Ok(series_from_counts(&counts, Some(t)))
}

/// The full polynomial `Σ q^{|T|}` over fillings with entries in `0..=max_entry`.
pub fn gf_bounded(shape: impl Into<Shape>, kind: TableauKind, max_entry: u64) -> Result<QSeries> {
    gf_bounded_with(&shape.into(), kind, max_entry, &Caps::from_env())
}

pub fn gf_bounded_with(shape: &Shape, kind: TableauKind, max_entry: u64, caps: &Caps) -> Result<QSeries> {
    let cells = shape.cell_list();
    check_cells(cells.len(), caps)?;
    let mut f = Filler::new(&cells, kind, max_entry, None);
    f.prepare();
    let mut counts = vec![0u64; cells.len() * max_entry as usize + 1];
    f.run(&mut |w, _| counts[w as usize] += 1);
    Ok(series_from_counts(&counts, None))
}

/// Fillings of the shifted shape `outer*` whose diagonal cell `(i,i)` holds
/// `rdiag[ℓ - i]`, through `q^t`.
pub fn gf_fixed_diag(outer: &StrictPartition, kind: TableauKind, rdiag: &[u64], t: i64) -> Result<QSeries> {
    gf_fixed_diag_with(outer, kind, rdiag, t, &Caps::from_env())
}

pub fn gf_fixed_diag_with(
    outer: &StrictPartition,
    kind: TableauKind,
    rdiag: &[u64],
    t: i64,
    caps: &Caps,
) -> Result<QSeries> {
    let l = outer.len();
    if rdiag.len() != l {
        return Err(Error::DimensionMismatch { expected: l, got: rdiag.len() });
    }
    let shape = ShiftedSkewShape::straight(outer.clone());
    let cells = shape.cell_list();
    check_cells(cells.len(), caps)?;
    let budget = check_weight(t, caps)?;
    let pin_max = rdiag.iter().copied().max().unwrap_or(0);
    let mut f = Filler::new(&cells, kind, budget.max(pin_max), Some(budget));
    for (k, c) in cells.iter().enumerate() {
        if c.row == c.col {
            f.pinned[k] = Some(rdiag[l - c.row as usize]);
        }
    }
    if !f.prepare() {
        return Err(Error::InfeasibleDiagonal);
    }
    let mut counts = vec![0u64; budget as usize + 1];
    if t >= 0 {
        f.run(&mut |w, _| counts[w as usize] += 1);
    }
    Ok(series_from_counts(&counts, Some(t)))
}

/// Cells of the M-shape whose entries make up the trace: those with
/// `col - row = c - a`.
pub fn trace_cells(shape: &SkewShape, a: u32, c: u32) -> Vec<Cell> {
    shape.cell_list().into_iter().filter(|cell| cell.col as i64 - cell.row as i64 == c as i64 - a as i64).collect()
}

/// `Σ x^{tr(T)} q^{|T|}` over SSYT of the M-shape through `q^t`.
pub fn gf_trace(n: u32, a: u32, b: u32, c: u32, d: u32, m: u32, t: i64) -> Result<XQSeries> {
    gf_trace_with(n, a, b, c, d, m, t, &Caps::from_env())
}

#[allow(clippy::too_many_arguments)]
pub fn gf_trace_with(n: u32, a: u32, b: u32, c: u32, d: u32, m: u32, t: i64, caps: &Caps) -> Result<XQSeries> {
    let shape = build_m(n, a, b, c, d, m)?;
    let cells = shape.cell_list();
    check_cells(cells.len(), caps)?;
    let budget = check_weight(t, caps)?;
    let traced = trace_cells(&shape, a, c);
    let mut f = Filler::new(&cells, TableauKind::Ssyt, budget, Some(budget));
    for (k, cell) in cells.iter().enumerate() {
        f.traced[k] = traced.contains(cell);
    }
    f.prepare();
    let mut out = XQSeries::zero(t);
    if t >= 0 {
        let mut counts = vec![vec![0u64; budget as usize + 1]; budget as usize + 1];
        f.run(&mut |w, tr| counts[tr as usize][w as usize] += 1);
        for (tr, row) in counts.iter().enumerate() {
            for (w, &cnt) in row.iter().enumerate() {
                out.add_term(BigInt::from(cnt), tr as u64, w as i64);
            }
        }
    }
    Ok(out)
}

/// Reverse plane partitions of the `a × b` rectangle with entries at most
/// `c`, as an exact polynomial.
pub fn count_box_rpp(a: u32, b: u32, c: u32) -> Result<QSeries> {
    let caps = Caps::from_env();
    let volume = (a * b * c) as usize;
    if volume > caps.box_volume {
        return Err(Error::CapExceeded { what: "box", size: volume, cap: caps.box_volume });
    }
    let rect = SkewShape::straight(Partition::rectangle(a as usize, b));
    gf_bounded_with(&rect.into(), TableauKind::Rpp, c as u64, &caps)
}
