//! Branching rules for `(S_n, S_{n-1})`, `(S_n, A_n)` and `(A_n, A_{n-1})`.
//!
//! Irreducible `A_n`-modules are labelled by [`AltLabel`]: a conjugate pair
//! `{λ, λ*}` with `λ ≠ λ*` collapses to its lexicographically greater member,
//! and a self-conjugate `λ` splits into `λ+` and `λ-`. For `n <= 1` the groups
//! `A_n` and `S_n` coincide and nothing splits.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::Nat;
use crate::error::{Error, Result};
use crate::young::{num_syt, partitions_of, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AltSign {
    None,
    Plus,
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AltLabel {
    base: Partition,
    sign: AltSign,
}

/// Canonical member of the conjugate pair `{λ, λ*}`.
pub fn canonical(lambda: &Partition) -> Partition {
    let conj = lambda.conjugate();
    if conj > *lambda {
        conj
    } else {
        lambda.clone()
    }
}

/// Whether `Res^{S_m}_{A_m}` splits the self-conjugate labels (false for `m <= 1`).
fn splits(m: usize) -> bool {
    m >= 2
}

impl AltLabel {
    pub fn new(base: Partition, sign: AltSign) -> Result<Self> {
        let self_conj = base.is_self_conjugate();
        let ok = match sign {
            AltSign::None => !splits(base.size()) || (!self_conj && canonical(&base) == base),
            AltSign::Plus | AltSign::Minus => splits(base.size()) && self_conj,
        };
        if !ok {
            return Err(Error::Parse(format!(
                "{base} with sign {sign:?} is not a valid alternating-group label"
            )));
        }
        Ok(Self { base, sign })
    }

    /// The unsigned label of a non-split class, canonicalising the representative.
    pub fn unsigned(lambda: &Partition) -> Result<Self> {
        Self::new(canonical(lambda), AltSign::None)
    }

    pub fn base(&self) -> &Partition {
        &self.base
    }

    pub fn sign(&self) -> AltSign {
        self.sign
    }

    pub fn size(&self) -> usize {
        self.base.size()
    }

    pub fn is_signed(&self) -> bool {
        self.sign != AltSign::None
    }

    /// Dimension of the `A_n`-module: `f^λ` unsigned, `f^λ / 2` signed.
    pub fn module_dim(&self) -> Nat {
        let f = num_syt(&self.base);
        if self.is_signed() {
            f / 2u32
        } else {
            f
        }
    }

    fn order_key(&self) -> (std::cmp::Reverse<Partition>, AltSign) {
        (std::cmp::Reverse(self.base.clone()), self.sign)
    }
}

impl PartialOrd for AltLabel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Row order: decreasing lexicographic base, then unsigned, `+`, `-`.
impl Ord for AltLabel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl fmt::Display for AltLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base)?;
        match self.sign {
            AltSign::None => Ok(()),
            AltSign::Plus => f.write_str("+"),
            AltSign::Minus => f.write_str("-"),
        }
    }
}

impl FromStr for AltLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (body, sign) = if let Some(b) = s.strip_suffix('+') {
            (b, AltSign::Plus)
        } else if let Some(b) = s.strip_suffix('-').or_else(|| s.strip_suffix('\u{2212}')) {
            (b, AltSign::Minus)
        } else {
            (s, AltSign::None)
        };
        let base: Partition = body.parse()?;
        if sign == AltSign::None && splits(base.size()) && !base.is_self_conjugate() {
            return Self::unsigned(&base);
        }
        Self::new(base, sign)
    }
}

/// `S_n -> S_{n-1}`: remove one removable corner.
pub fn restrict_sym(lambda: &Partition) -> Result<Vec<Partition>> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let mut out: Vec<Partition> = lambda
        .removable_corners()
        .into_iter()
        .map(|(r, _)| lambda.remove_box(r).expect("corner is removable"))
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

/// `S_{n-1} -> S_n`: add one addable corner.
pub fn induce_sym(mu: &Partition, n: usize) -> Result<Vec<Partition>> {
    if mu.size() + 1 != n {
        return Err(Error::SizeMismatch {
            expected: n.saturating_sub(1),
            found: mu.size(),
        });
    }
    let mut out: Vec<Partition> = mu
        .addable_corners()
        .into_iter()
        .map(|(r, _)| mu.add_box(r).expect("corner is addable"))
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

/// `Res^{S_n}_{A_n}`.
pub fn restrict_sym_to_alt(lambda: &Partition) -> Vec<AltLabel> {
    if splits(lambda.size()) && lambda.is_self_conjugate() {
        vec![
            AltLabel {
                base: lambda.clone(),
                sign: AltSign::Plus,
            },
            AltLabel {
                base: lambda.clone(),
                sign: AltSign::Minus,
            },
        ]
    } else {
        vec![AltLabel {
            base: canonical(lambda),
            sign: AltSign::None,
        }]
    }
}

/// `Res^{A_n}_{A_{n-1}}` as a multiset (every multiplicity is one in practice).
pub fn restrict_alt(label: &AltLabel) -> Result<Vec<AltLabel>> {
    let sym = restrict_sym(label.base())?;
    let mut out = Vec::new();
    match label.sign {
        AltSign::None => {
            for mu in &sym {
                out.extend(restrict_sym_to_alt(mu));
            }
        }
        sign => {
            // Corners of a self-conjugate shape pair up under conjugation; each
            // pair restricts to one unsigned label, the diagonal corner keeps the sign.
            let mut seen = Vec::new();
            for mu in &sym {
                let c = canonical(mu);
                if seen.contains(&c) {
                    continue;
                }
                seen.push(c.clone());
                if splits(mu.size()) && mu.is_self_conjugate() {
                    out.push(AltLabel {
                        base: mu.clone(),
                        sign,
                    });
                } else {
                    out.push(AltLabel {
                        base: c,
                        sign: AltSign::None,
                    });
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// All `A_m` labels in row order.
pub fn alt_labels_of(m: usize) -> Vec<AltLabel> {
    let mut out = Vec::new();
    for lambda in partitions_of(m) {
        if splits(m) && lambda.is_self_conjugate() {
            out.push(AltLabel {
                base: lambda.clone(),
                sign: AltSign::Plus,
            });
            out.push(AltLabel {
                base: lambda,
                sign: AltSign::Minus,
            });
        } else if canonical(&lambda) == lambda {
            out.push(AltLabel {
                base: lambda,
                sign: AltSign::None,
            });
        }
    }
    out.sort();
    out
}

/// `Ind^{A_n}_{A_{n-1}}`: restriction edges read upward, with multiplicity.
pub fn induce_alt(label: &AltLabel, n: usize) -> Result<Vec<AltLabel>> {
    if label.size() + 1 != n {
        return Err(Error::SizeMismatch {
            expected: n.saturating_sub(1),
            found: label.size(),
        });
    }
    let mut out = Vec::new();
    for kappa in alt_labels_of(n) {
        let mult = restrict_alt(&kappa)?.iter().filter(|a| *a == label).count();
        out.extend(std::iter::repeat_n(kappa, mult));
    }
    Ok(out)
}

/// A vertex label of a restriction–induction Bratteli diagram.
pub trait BranchingLabel: Clone + Eq + Hash + Ord + fmt::Display + fmt::Debug {
    fn size(&self) -> usize;
    /// Restriction to the next smaller group, as a multiset.
    fn restrict(&self) -> Result<Vec<Self>>;
    /// All labels for the group of degree `m`, in row order.
    fn labels_of(m: usize) -> Vec<Self>;
    /// The trivial module of the group of degree `m`.
    fn trivial(m: usize) -> Self;
}

/// Newtype giving partitions the decreasing-lexicographic row order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SymLabel(pub Partition);

impl PartialOrd for SymLabel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SymLabel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other.0.cmp(&self.0)
    }
}

impl fmt::Display for SymLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl BranchingLabel for SymLabel {
    fn size(&self) -> usize {
        self.0.size()
    }

    fn restrict(&self) -> Result<Vec<Self>> {
        Ok(restrict_sym(&self.0)?.into_iter().map(SymLabel).collect())
    }

    fn labels_of(m: usize) -> Vec<Self> {
        partitions_of(m).into_iter().map(SymLabel).collect()
    }

    fn trivial(m: usize) -> Self {
        SymLabel(Partition::row(m))
    }
}

impl BranchingLabel for AltLabel {
    fn size(&self) -> usize {
        self.base.size()
    }

    fn restrict(&self) -> Result<Vec<Self>> {
        restrict_alt(self)
    }

    fn labels_of(m: usize) -> Vec<Self> {
        alt_labels_of(m)
    }

    fn trivial(m: usize) -> Self {
        AltLabel {
            base: Partition::row(m),
            sign: AltSign::None,
        }
    }
}

/// Multiset helper: label -> multiplicity.
pub fn multiplicities<L: Ord + Clone>(items: &[L]) -> BTreeMap<L, usize> {
    let mut m = BTreeMap::new();
    for it in items {
        *m.entry(it.clone()).or_insert(0) += 1;
    }
    m
}
