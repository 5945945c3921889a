//! Partitions, skew and shifted skew diagrams, hook lengths, and the three
//! shape families used throughout the crate.
//!
//! Cells use 1-based `(row, col)` matrix coordinates. A shifted diagram puts
//! row `i` in columns `i ..= i + λ_i - 1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    pub fn new(row: u32, col: u32) -> Self {
        assert!(row >= 1 && col >= 1, "cells are 1-based");
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// dropped on construction.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameters(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary parts into a partition.
    pub fn from_multiset(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("sorted")
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(k^len)`.
    pub fn rectangle(len: usize, k: u32) -> Self {
        Partition::new(vec![k; len]).expect("constant sequence")
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of positive parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// `λ_i` for 1-based `i`, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Result<Vec<u32>> {
        if self.len() > n {
            return Err(Error::DimensionMismatch { expected: n, got: self.len() });
        }
        let mut v = self.0.clone();
        v.resize(n, 0);
        Ok(v)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1) as usize;
        let parts = (1..=width).map(|j| self.0.iter().filter(|&&p| p as usize >= j).count() as u32).collect();
        Partition(parts)
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.col <= self.part(c.row as usize)
    }

    pub fn contains_partition(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i as u32 + 1, j)))
    }

    /// `λ_i + λ'_j - i - j + 1`.
    pub fn hook_length(&self, c: Cell) -> Result<u32> {
        if !self.contains(c) {
            return Err(Error::CellOutsideShape(c));
        }
        let conj = self.conjugate();
        Ok(hook_with_conjugate(self, &conj, c))
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn nn(&self) -> u64 {
        self.0.iter().enumerate().map(|(i, &p)| i as u64 * p as u64).sum()
    }

    /// All partitions contained in `self`, including `∅` and `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(lam: &[u32], i: usize, bound: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if i == lam.len() {
                out.push(Partition::new(cur.clone()).expect("decreasing"));
                return;
            }
            for p in 0..=bound.min(lam[i]) {
                cur.push(p);
                rec(lam, i + 1, p, cur, out);
                cur.pop();
            }
        }
        rec(&self.0, 0, u32::MAX, &mut cur, &mut out);
        out.sort();
        out.dedup();
        out
    }
}

pub(crate) fn hook_with_conjugate(lam: &Partition, conj: &Partition, c: Cell) -> u32 {
    lam.part(c.row as usize) + conj.part(c.col as usize) + 1 - c.row - c.col
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

fn parse_parts(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}"))))
        .collect()
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions with at most `len` parts, each at most `max_part`.
pub fn partitions_in_box(len: usize, max_part: u32) -> Vec<Partition> {
    Partition::rectangle(len, max_part).subpartitions()
}

/// A strictly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition(Vec<u32>);

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] <= w[1]) || parts.last() == Some(&0) {
            return Err(Error::InvalidParameters(format!("{parts:?} is not a strict partition")));
        }
        Ok(StrictPartition(parts))
    }

    pub fn empty() -> Self {
        StrictPartition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// The partition `μ` with `λ = δ_{L+1} + μ`, `L = ℓ(λ)`.
    pub fn staircase_remainder(&self) -> Partition {
        let l = self.len() as u32;
        let parts = self.0.iter().enumerate().map(|(i, &p)| p - (l - i as u32)).collect();
        Partition::new(parts).expect("strict parts leave a partition")
    }

    pub fn contains(&self, c: Cell) -> bool {
        let i = c.row as usize;
        i <= self.len() && c.col >= c.row && c.col < c.row + self.part(i)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &p)| {
            let r = i as u32 + 1;
            (r..r + p).map(move |j| Cell::new(r, j))
        })
    }

    /// Shifted hook length. Diagonal cells get the full row length `λ_i`.
    pub fn shifted_hook_length(&self, c: Cell) -> Result<u32> {
        if !self.contains(c) {
            return Err(Error::CellOutsideShape(c));
        }
        let rest = self.staircase_remainder();
        Ok(shifted_hook_with(self, &rest, &rest.conjugate(), c))
    }
}

pub(crate) fn shifted_hook_with(lam: &StrictPartition, rest: &Partition, rest_conj: &Partition, c: Cell) -> u32 {
    let l = lam.len() as u32;
    let (i, j) = (c.row, c.col);
    if i == j {
        lam.part(i as usize)
    } else if j <= l {
        rest.part(i as usize) + rest.part(j as usize) + 2 * (l + 1) - i - j
    } else {
        hook_with_conjugate(rest, rest_conj, Cell::new(i, j - l))
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for StrictPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        StrictPartition::new(parse_parts(s)?).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Strict partitions of `n`.
pub fn strict_partitions_of(n: u32) -> Vec<StrictPartition> {
    let mut out = Vec::new();
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<StrictPartition>) {
        if rem == 0 {
            out.push(StrictPartition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p - 1, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Cells listed row by row as inclusive column intervals. Both skew and
/// shifted skew shapes have this form; row `i` of the result is row `i + 1`.
pub trait RowIntervals {
    fn row_intervals(&self) -> Vec<(u32, u32)>;

    fn size(&self) -> usize {
        self.row_intervals().iter().map(|&(lo, hi)| if hi >= lo { (hi - lo + 1) as usize } else { 0 }).sum()
    }

    fn cell_list(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for (i, &(lo, hi)) in self.row_intervals().iter().enumerate() {
            for j in lo..=hi {
                out.push(Cell::new(i as u32 + 1, j));
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains_partition(&inner) {
            return Err(Error::InvalidParameters(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.outer.contains(c) && !self.inner.contains(c)
    }

    pub fn cells(&self) -> CellSet {
        CellSet::from_iter(self.cell_list())
    }
}

impl RowIntervals for SkewShape {
    fn row_intervals(&self) -> Vec<(u32, u32)> {
        (1..=self.outer.len()).map(|i| (self.inner.part(i) + 1, self.outer.part(i))).collect()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl FromStr for SkewShape {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (o, i) = s.split_once('/').unwrap_or((s, ""));
        SkewShape::new(o.parse()?, i.parse()?).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShiftedSkewShape {
    outer: StrictPartition,
    inner: StrictPartition,
}

impl ShiftedSkewShape {
    pub fn new(outer: StrictPartition, inner: StrictPartition) -> Result<Self> {
        let ok = inner.len() <= outer.len() && inner.0.iter().zip(&outer.0).all(|(a, b)| a <= b);
        if !ok {
            return Err(Error::InvalidParameters(format!("{inner}* is not contained in {outer}*")));
        }
        Ok(ShiftedSkewShape { outer, inner })
    }

    pub fn straight(outer: StrictPartition) -> Self {
        ShiftedSkewShape { outer, inner: StrictPartition::empty() }
    }

    pub fn outer(&self) -> &StrictPartition {
        &self.outer
    }

    pub fn inner(&self) -> &StrictPartition {
        &self.inner
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.outer.contains(c) && !self.inner.contains(c)
    }

    pub fn cells(&self) -> CellSet {
        CellSet::from_iter(self.cell_list())
    }
}

impl RowIntervals for ShiftedSkewShape {
    fn row_intervals(&self) -> Vec<(u32, u32)> {
        (1..=self.outer.len())
            .map(|i| {
                let r = i as u32;
                (r + self.inner.part(i), r + self.outer.part(i) - 1)
            })
            .collect()
    }
}

impl fmt::Display for ShiftedSkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl FromStr for ShiftedSkewShape {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (o, i) = s.split_once('/').unwrap_or((s, ""));
        ShiftedSkewShape::new(o.parse()?, i.parse()?).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Either kind of diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    Skew(SkewShape),
    Shifted(ShiftedSkewShape),
}

impl RowIntervals for Shape {
    fn row_intervals(&self) -> Vec<(u32, u32)> {
        match self {
            Shape::Skew(s) => s.row_intervals(),
            Shape::Shifted(s) => s.row_intervals(),
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Skew(s) => write!(f, "{s}"),
            Shape::Shifted(s) => write!(f, "{s}*"),
        }
    }
}

impl From<SkewShape> for Shape {
    fn from(s: SkewShape) -> Self {
        Shape::Skew(s)
    }
}

impl From<ShiftedSkewShape> for Shape {
    fn from(s: ShiftedSkewShape) -> Self {
        Shape::Shifted(s)
    }
}

/// Sorted, duplicate-free set of cells.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellSet(Vec<Cell>);

impl CellSet {
    pub fn new() -> Self {
        CellSet(Vec::new())
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.0.binary_search(&c).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Cell> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Cell] {
        &self.0
    }

    pub fn insert(&mut self, c: Cell) -> bool {
        match self.0.binary_search(&c) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, c);
                true
            }
        }
    }

    pub fn remove(&mut self, c: Cell) -> bool {
        match self.0.binary_search(&c) {
            Ok(pos) => {
                self.0.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn is_subset(&self, other: &CellSet) -> bool {
        self.0.iter().all(|&c| other.contains(c))
    }
}

impl FromIterator<Cell> for CellSet {
    fn from_iter<I: IntoIterator<Item = Cell>>(iter: I) -> Self {
        let mut v: Vec<Cell> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        CellSet(v)
    }
}

impl<'a> IntoIterator for &'a CellSet {
    type Item = &'a Cell;
    type IntoIter = std::slice::Iter<'a, Cell>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for CellSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(Cell::to_string).collect();
        write!(f, "{}", s.join(" "))
    }
}

/// `δ_n = (n-1, ..., 1, 0)`.
pub fn delta(n: usize) -> Partition {
    Partition::new((0..n as u32).rev().collect()).expect("staircase")
}

/// Componentwise sum.
pub fn add(lam: &Partition, mu: &Partition) -> Partition {
    let n = lam.len().max(mu.len());
    let parts = (1..=n).map(|i| lam.part(i) + mu.part(i)).collect();
    Partition::new(parts).expect("sum of partitions")
}

/// Multiset union of parts.
pub fn union(lam: &Partition, mu: &Partition) -> Partition {
    Partition::from_multiset(lam.parts().iter().chain(mu.parts()).copied().collect())
}

pub fn scale(m: u32, lam: &Partition) -> Partition {
    Partition::new(lam.parts().iter().map(|&p| m * p).collect()).expect("scaled partition")
}

pub fn nn(lam: &Partition) -> u64 {
    lam.nn()
}

/// The skew shape `((n+b+c)^{n+a}, (n+c)^d) / (c+1, c^{a-1}, 1)`.
pub fn build_rho(n: u32, a: u32, b: u32, c: u32, d: u32) -> Result<SkewShape> {
    if a == 0 {
        return Err(Error::InvalidParameters("a = 0 leaves no inner staircase".into()));
    }
    let mut outer = vec![n + b + c; (n + a) as usize];
    outer.extend(std::iter::repeat_n(n + c, d as usize));
    let mut inner = vec![c + 1];
    inner.extend(std::iter::repeat_n(c, a as usize - 1));
    inner.push(1);
    let inner = Partition::new(inner)?;
    SkewShape::new(Partition::new(outer)?, inner)
}

/// The shifted skew shape `((n+a+b, ..., b+1) + (m-1)δ_{n+a})* / δ_{a+1}*`.
pub fn build_v(n: u32, a: u32, b: u32, m: u32) -> Result<ShiftedSkewShape> {
    if m == 0 {
        return Err(Error::InvalidParameters("m must be positive".into()));
    }
    let len = n + a;
    let outer = (1..=len).map(|i| (len + b + 1 - i) + (m - 1) * (len - i)).collect();
    let inner = (1..=a).rev().collect();
    ShiftedSkewShape::new(StrictPartition::new(outer)?, StrictPartition::new(inner)?)
}

/// Outer partition of the M-shape: `((n+c+b)^{n+a} + (m-1)δ_{n+a}) ∪ ν'`
/// with `ν = (d^{n+c}) + (m-1)δ_{n+c}`.
pub fn m_outer(n: u32, a: u32, b: u32, c: u32, d: u32, m: u32) -> Partition {
    let top = add(&Partition::rectangle((n + a) as usize, n + c + b), &scale(m - 1, &delta((n + a) as usize)));
    let nu = add(&Partition::rectangle((n + c) as usize, d), &scale(m - 1, &delta((n + c) as usize)));
    union(&top, &nu.conjugate())
}

/// The skew shape `λ / (c^a)` with `λ` from [`m_outer`].
pub fn build_m(n: u32, a: u32, b: u32, c: u32, d: u32, m: u32) -> Result<SkewShape> {
    if m == 0 {
        return Err(Error::InvalidParameters("m must be positive".into()));
    }
    SkewShape::new(m_outer(n, a, b, c, d, m), Partition::rectangle(a as usize, c))
}

/// `{(i, n+j) : 1 ≤ i ≤ j ≤ n}`.
pub fn d_region(n: u32) -> CellSet {
    triangle_region(n, n)
}

/// `{(i, n+j) : 1 ≤ i ≤ j ≤ k}`, the cells left out of the hook product for
/// the V-shape when `k = a`.
pub fn triangle_region(n: u32, k: u32) -> CellSet {
    (1..=k).flat_map(|j| (1..=j).map(move |i| Cell::new(i, n + j))).collect()
}
