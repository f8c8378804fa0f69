//! Partitions, Young diagrams and tableau counting.
//!
//! Box positions are zero-based `(row, col)` pairs throughout the crate.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, factorial, odd_double_factorial, Nat};
use crate::error::{Error, Result};

/// An integer partition, stored without zero parts.
///
/// The derived `Ord` is lexicographic on the parts, which is the total order
/// used to pick canonical representatives and to lay out Bratteli rows.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition from weakly decreasing parts; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        if parts.contains(&0) {
            return Err(Error::Parse(format!(
                "parts {parts:?} contain an interior zero"
            )));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// The one-row partition `[n]`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self(vec![n])
        }
    }

    /// The one-column partition `[1^n]`.
    pub fn column(n: usize) -> Self {
        Self(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`-th part (zero-based), zero beyond the last row.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let cols = self.part(0);
        Self(
            (0..cols)
                .map(|c| self.0.iter().filter(|&&p| p > c).count())
                .collect(),
        )
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// `λ^#`, the partition with its largest part removed.
    pub fn without_first_part(&self) -> Self {
        Self(self.0.iter().skip(1).copied().collect())
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn contains_box(&self, row: usize, col: usize) -> bool {
        col < self.part(row)
    }

    pub fn odd_parts(&self) -> usize {
        self.0.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// Boxes that can be removed while leaving a partition, top to bottom.
    pub fn removable_corners(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .filter(|&r| self.part(r) > self.part(r + 1))
            .map(|r| (r, self.part(r) - 1))
            .collect()
    }

    /// Cells that can be added while staying a partition, top to bottom.
    pub fn addable_corners(&self) -> Vec<(usize, usize)> {
        (0..=self.len())
            .filter(|&r| r == 0 || self.part(r - 1) > self.part(r))
            .map(|r| (r, self.part(r)))
            .collect()
    }

    /// Removes the last box of row `row`; the caller guarantees it is a corner.
    pub fn remove_box(&self, row: usize) -> Result<Self> {
        if row >= self.len() || self.part(row) <= self.part(row + 1) {
            return Err(Error::NotACorner {
                row,
                col: self.part(row).saturating_sub(1),
            });
        }
        let mut parts = self.0.clone();
        parts[row] -= 1;
        Self::new(parts)
    }

    /// Appends a box at the end of row `row`; the caller guarantees it is addable.
    pub fn add_box(&self, row: usize) -> Result<Self> {
        if row > self.len() || (row > 0 && self.part(row - 1) <= self.part(row)) {
            return Err(Error::OutOfShape {
                row,
                col: self.part(row),
            });
        }
        let mut parts = self.0.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        Ok(Self(parts))
    }

    /// The single box of `self` not in `smaller`, if `smaller` is `self` minus one box.
    pub fn box_difference(&self, smaller: &Partition) -> Option<(usize, usize)> {
        if self.size() != smaller.size() + 1 || !self.contains(smaller) {
            return None;
        }
        (0..self.len())
            .find(|&r| self.part(r) != smaller.part(r))
            .map(|r| (r, self.part(r) - 1))
    }

    pub fn hook_length(&self, row: usize, col: usize) -> Result<usize> {
        if !self.contains_box(row, col) {
            return Err(Error::OutOfShape { row, col });
        }
        let arm = self.part(row) - col - 1;
        let leg = self.0[row + 1..].iter().filter(|&&p| p > col).count();
        Ok(arm + leg + 1)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("empty");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "empty" {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::Parse(format!("partition {s:?} has a zero part")));
        }
        Self::new(parts)
    }
}

/// Outcome of comparing two partitions of the same size in dominance order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dominance {
    Less,
    Equal,
    Greater,
    Incomparable,
}

/// Dominance order by partial sums.
pub fn dominance_compare(lambda: &Partition, mu: &Partition) -> Result<Dominance> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            expected: lambda.size(),
            found: mu.size(),
        });
    }
    let (mut ge, mut le) = (true, true);
    let (mut a, mut b) = (0, 0);
    for i in 0..lambda.len().max(mu.len()) {
        a += lambda.part(i);
        b += mu.part(i);
        match a.cmp(&b) {
            Ordering::Greater => le = false,
            Ordering::Less => ge = false,
            Ordering::Equal => {}
        }
    }
    Ok(match (ge, le) {
        (true, true) => Dominance::Equal,
        (true, false) => Dominance::Greater,
        (false, true) => Dominance::Less,
        (false, false) => Dominance::Incomparable,
    })
}

/// `outer / inner` with `inner ⊆ outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Domain(format!(
                "{inner} does not fit inside {outer}"
            )));
        }
        Ok(Self { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }
}

/// A weak composition: the content (type) of a semistandard tableau.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeakComposition(pub Vec<usize>);

impl WeakComposition {
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The hook type `[n-t, 1^t]`; for `t = n` the leading entry is zero, i.e. `[1^n]`.
    pub fn hook_type(n: usize, t: usize) -> Self {
        let mut entries = vec![n - t];
        entries.extend(std::iter::repeat_n(1, t));
        Self(entries)
    }
}

/// A semistandard tableau with nonnegative entries; zero is a legal entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct SemistandardTableau {
    rows: Vec<Vec<u32>>,
}

impl SemistandardTableau {
    /// Validates row lengths, weakly increasing rows and strictly increasing columns.
    pub fn new(mut rows: Vec<Vec<u32>>) -> Result<Self> {
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) || rows.iter().any(|r| r.is_empty()) {
            return Err(Error::Domain("row lengths do not form a partition".into()));
        }
        for row in &rows {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::Domain(format!(
                    "row {row:?} is not weakly increasing"
                )));
            }
        }
        for w in rows.windows(2) {
            if w[1].iter().zip(&w[0]).any(|(below, above)| below <= above) {
                return Err(Error::Domain("columns are not strictly increasing".into()));
            }
        }
        Ok(Self { rows })
    }

    /// The tableau of shape `[n]` filled with zeros.
    pub fn zeros(n: usize) -> Self {
        let rows = if n == 0 { Vec::new() } else { vec![vec![0; n]] };
        Self { rows }
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        Self { rows }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<u32>> {
        &mut self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(Vec::len).collect())
    }

    pub fn entries(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.iter().flatten().copied()
    }

    pub fn position_of(&self, value: u32) -> Option<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .find_map(|(r, row)| row.iter().position(|&v| v == value).map(|c| (r, c)))
    }
}

impl TryFrom<Vec<Vec<u32>>> for SemistandardTableau {
    type Error = Error;

    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self> {
        Self::new(rows)
    }
}

impl From<SemistandardTableau> for Vec<Vec<u32>> {
    fn from(t: SemistandardTableau) -> Self {
        t.rows
    }
}

impl fmt::Display for SemistandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        f.write_str(&rows.join(" / "))
    }
}

/// `f^λ` by the hook-length formula.
pub fn num_syt(lambda: &Partition) -> Nat {
    let mut hooks = Nat::one();
    for (r, &len) in lambda.parts().iter().enumerate() {
        for c in 0..len {
            hooks *= lambda.hook_length(r, c).expect("box is inside the shape");
        }
    }
    factorial(lambda.size()) / hooks
}

/// Number of standard fillings of a skew shape.
pub fn num_skew_syt(shape: &SkewShape) -> Nat {
    let mut memo = HashMap::new();
    skew_count(shape.outer(), shape.inner(), &mut memo)
}

fn skew_count(outer: &Partition, inner: &Partition, memo: &mut HashMap<Partition, Nat>) -> Nat {
    if outer == inner {
        return Nat::one();
    }
    if let Some(v) = memo.get(outer) {
        return v.clone();
    }
    // The largest entry sits in a corner of `outer` that is not part of `inner`.
    let mut total = Nat::zero();
    for (r, c) in outer.removable_corners() {
        if inner.contains_box(r, c) {
            continue;
        }
        let smaller = outer.remove_box(r).expect("corner is removable");
        total += skew_count(&smaller, inner, memo);
    }
    memo.insert(outer.clone(), total.clone());
    total
}

/// Kostka number `K_{λ,γ}`: semistandard tableaux of shape `λ` and content `γ`.
///
/// Tableaux are enumerated value by value: the cells holding value `i` form a
/// horizontal strip, so the search walks chains of horizontal strips inside
/// `λ`, memoized on the partial shape.
pub fn kostka(lambda: &Partition, content: &WeakComposition) -> Result<Nat> {
    if lambda.size() != content.size() {
        return Err(Error::SizeMismatch {
            expected: lambda.size(),
            found: content.size(),
        });
    }
    let mut memo = HashMap::new();
    Ok(strip_chains(
        lambda,
        &content.0,
        0,
        &Partition::empty(),
        &mut memo,
    ))
}

fn strip_chains(
    target: &Partition,
    content: &[usize],
    idx: usize,
    current: &Partition,
    memo: &mut HashMap<(usize, Partition), Nat>,
) -> Nat {
    if idx == content.len() {
        return if current == target {
            Nat::one()
        } else {
            Nat::zero()
        };
    }
    let key = (idx, current.clone());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = Nat::zero();
    for shape in horizontal_strips(target, current, content[idx]) {
        total += strip_chains(target, content, idx + 1, &shape, memo);
    }
    memo.insert(key, total.clone());
    total
}

/// All `ν` with `current ⊆ ν ⊆ bound` and `ν / current` a horizontal strip of `size` cells.
fn horizontal_strips(bound: &Partition, current: &Partition, size: usize) -> Vec<Partition> {
    fn go(
        row: usize,
        remaining: usize,
        bound: &Partition,
        current: &Partition,
        acc: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if row == bound.len() {
            if remaining == 0 {
                out.push(Partition::new(acc.clone()).expect("strip rows are decreasing"));
            }
            return;
        }
        let base = current.part(row);
        // interlacing: ν_row <= current_{row-1}
        let cap = if row == 0 {
            bound.part(0)
        } else {
            current.part(row - 1).min(bound.part(row))
        };
        if cap < base {
            return;
        }
        for add in 0..=remaining.min(cap - base) {
            acc.push(base + add);
            go(row + 1, remaining - add, bound, current, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(0, size, bound, current, &mut Vec::new(), &mut out);
    out
}

/// `K_{λ,[n-t,1^t]}` through the skew identity: the `n - t` zeros fill the
/// start of the first row and the rest is a standard skew filling.
pub fn kostka_hook_type(lambda: &Partition, n: usize, t: usize) -> Result<Nat> {
    if lambda.size() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: lambda.size(),
        });
    }
    if t > n {
        return Err(Error::TOutOfRange { t, n });
    }
    if n - t > lambda.part(0) {
        return Ok(Nat::zero());
    }
    let skew = SkewShape::new(lambda.clone(), Partition::row(n - t))?;
    Ok(num_skew_syt(&skew))
}

/// All partitions of `n` in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(acc.clone()));
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            acc.push(part);
            go(remaining - part, part, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Involutions of `S_r` with exactly `p` fixed points: `C(r,p) (r-p-1)!!`.
pub fn involutions_with_fixed_points(r: usize, p: usize) -> Nat {
    if p > r || (r - p) % 2 == 1 {
        return Nat::zero();
    }
    binomial(r, p) * odd_double_factorial(r as i64 - p as i64 - 1).expect("r - p - 1 is odd or -1")
}
