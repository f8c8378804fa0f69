//! Bijection between vacillating tableaux (root-to-vertex paths in the
//! `(S_n, S_{n-1})` diagram) and pairs `(P, T)` of a set partition and a
//! semistandard tableau whose positive entries are the block maxima of `P`.
//!
//! Zero is an ordinary tableau value here. Box positions are zero-based
//! `(row, column)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::young::{Partition, SemistandardTableau};

/// A set partition of `{1, ..., k}`, blocks sorted internally and ordered by minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::Domain("set partition has an empty block".into()));
            }
            b.sort_unstable();
        }
        blocks.sort();
        let mut all: Vec<usize> = blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        if all.iter().enumerate().any(|(i, &v)| v != i + 1) {
            return Err(Error::Domain(format!(
                "blocks {blocks:?} do not partition {{1..{}}}",
                all.len()
            )));
        }
        Ok(Self { blocks })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// `k`, the size of the ground set.
    pub fn ground_size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Block maxima in increasing order.
    pub fn maxima(&self) -> Vec<usize> {
        let mut m: Vec<usize> = self
            .blocks
            .iter()
            .map(|b| *b.last().expect("nonempty"))
            .collect();
        m.sort_unstable();
        m
    }
}

impl TryFrom<Vec<Vec<usize>>> for SetPartition {
    type Error = Error;

    fn try_from(blocks: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(blocks)
    }
}

impl From<SetPartition> for Vec<Vec<usize>> {
    fn from(p: SetPartition) -> Self {
        p.blocks
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return f.write_str("empty");
        }
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
            .collect();
        f.write_str(&parts.join("|"))
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "empty" {
            return Ok(Self::empty());
        }
        let blocks = s
            .split('|')
            .map(|b| {
                b.split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad element {x:?} in {s:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(blocks)
    }
}

/// A sequence `λ^(0), λ^(1/2), ..., λ^(k)` of partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VacillatingTableau(pub Vec<Partition>);

impl VacillatingTableau {
    /// Number of integer steps `k`.
    pub fn k(&self) -> usize {
        self.0.len().saturating_sub(1) / 2
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.0
    }

    /// Checks that this is a path in the diagram of `(S_n, S_{n-1})` ending at an integer level.
    pub fn validate(&self, n: usize) -> Result<()> {
        let s = &self.0;
        if s.is_empty() || s.len().is_multiple_of(2) {
            return Err(Error::MalformedPath(format!(
                "a path needs an odd number of shapes, got {}",
                s.len()
            )));
        }
        if s[0] != Partition::row(n) {
            return Err(Error::MalformedPath(format!(
                "path must start at [{n}], got {}",
                s[0]
            )));
        }
        for (i, w) in s.windows(2).enumerate() {
            let (big, small) = if i % 2 == 0 {
                (&w[0], &w[1])
            } else {
                (&w[1], &w[0])
            };
            if big.size() != small.size() + 1 || big.box_difference(small).is_none() {
                return Err(Error::MalformedPath(format!(
                    "step {} from {} to {} does not {} one box",
                    i + 1,
                    w[0],
                    w[1],
                    if i % 2 == 0 { "remove" } else { "add" }
                )));
            }
        }
        Ok(())
    }
}

/// Row-inserts `b` into `t`, returning the new tableau and the added box.
pub fn row_insert(t: &SemistandardTableau, b: u32) -> (SemistandardTableau, (usize, usize)) {
    let mut rows = t.rows().to_vec();
    let mut x = b;
    for (r, row) in rows.iter_mut().enumerate() {
        match row.iter().position(|&v| v > x) {
            Some(c) => x = std::mem::replace(&mut row[c], x),
            None => {
                row.push(x);
                let c = row.len() - 1;
                return (SemistandardTableau::from_rows_unchecked(rows), (r, c));
            }
        }
    }
    let r = rows.len();
    rows.push(vec![x]);
    (SemistandardTableau::from_rows_unchecked(rows), (r, 0))
}

/// Inverse of [`row_insert`] through the removable corner `corner`.
pub fn row_uninsert(
    t: &SemistandardTableau,
    corner: (usize, usize),
) -> Result<(SemistandardTableau, u32)> {
    let (r, c) = corner;
    let shape = t.shape();
    if !shape.removable_corners().contains(&corner) {
        return Err(Error::NotACorner { row: r, col: c });
    }
    let mut u = t.clone();
    let rows = u.rows_mut();
    let mut x = rows[r].pop().expect("corner row is nonempty");
    if rows[r].is_empty() {
        rows.pop();
    }
    for row in rows[..r].iter_mut().rev() {
        let j = row
            .iter()
            .rposition(|&v| v < x)
            .expect("semistandard columns always leave a smaller entry above");
        x = std::mem::replace(&mut row[j], x);
    }
    Ok((u, x))
}

/// Maps a path to its pair `(P, T)`.
pub fn path_to_pair(
    vt: &VacillatingTableau,
    n: usize,
) -> Result<(SetPartition, SemistandardTableau)> {
    vt.validate(n)?;
    let s = vt.shapes();
    let mut t = SemistandardTableau::zeros(n);
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for i in 1..=vt.k() {
        let (prev, mid, next) = (&s[2 * i - 2], &s[2 * i - 1], &s[2 * i]);
        let corner = prev.box_difference(mid).expect("validated");
        let (smaller, b) = row_uninsert(&t, corner)?;
        if b == 0 {
            blocks.push(vec![i]);
        } else {
            let block = blocks
                .iter_mut()
                .find(|blk| blk.last() == Some(&(b as usize)))
                .expect("positive entries are block maxima");
            block.push(i);
        }
        let (row, col) = next.box_difference(mid).expect("validated");
        let mut rows = smaller.rows().to_vec();
        if row == rows.len() {
            rows.push(Vec::new());
        }
        debug_assert_eq!(rows[row].len(), col);
        rows[row].push(i as u32);
        t = SemistandardTableau::from_rows_unchecked(rows);
    }
    Ok((SetPartition::new(blocks)?, t))
}

/// Maps a pair `(P, T)` back to its path.
pub fn pair_to_path(
    p: &SetPartition,
    t: &SemistandardTableau,
    n: usize,
) -> Result<VacillatingTableau> {
    let shape = t.shape();
    if shape.size() != n {
        return Err(Error::IncompatiblePair(format!(
            "tableau has {} boxes, expected {n}",
            shape.size()
        )));
    }
    let zeros = t.entries().filter(|&v| v == 0).count();
    if zeros + p.block_count() != n {
        return Err(Error::IncompatiblePair(format!(
            "tableau has {zeros} zeros but the set partition has {} blocks (n = {n})",
            p.block_count()
        )));
    }
    let mut positive: Vec<usize> = t.entries().filter(|&v| v > 0).map(|v| v as usize).collect();
    positive.sort_unstable();
    if positive != p.maxima() {
        return Err(Error::IncompatiblePair(format!(
            "positive entries {positive:?} differ from the block maxima {:?}",
            p.maxima()
        )));
    }

    let k = p.ground_size();
    let mut blocks = p.blocks().to_vec();
    let mut t = t.clone();
    let mut shapes = vec![shape];
    for i in (1..=k).rev() {
        let (r, c) = t
            .position_of(i as u32)
            .expect("i is the largest block maximum");
        let mut rows = t.rows().to_vec();
        rows[r].pop();
        if rows[r].is_empty() {
            rows.pop();
        }
        debug_assert_eq!(c, rows.get(r).map_or(0, Vec::len));
        let removed = SemistandardTableau::from_rows_unchecked(rows);
        shapes.push(removed.shape());

        let bi = blocks
            .iter()
            .position(|b| b.last() == Some(&i))
            .expect("i is the maximum of its block at this stage");
        blocks[bi].pop();
        let b = match blocks[bi].last() {
            Some(&second) => second as u32,
            None => {
                blocks.remove(bi);
                0
            }
        };
        let (inserted, _) = row_insert(&removed, b);
        shapes.push(inserted.shape());
        t = inserted;
    }
    shapes.reverse();
    Ok(VacillatingTableau(shapes))
}

/// JSON form of a pair: `{"setPartition": [[1,3],[2]], "tableau": [[0,0],[2,3]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PairJson {
    pub set_partition: SetPartition,
    pub tableau: SemistandardTableau,
}
