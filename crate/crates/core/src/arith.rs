//! Exact integer combinatorics: binomials, Stirling numbers of the second
//! kind, Bell numbers and a few relatives.
//!
//! Every count is a [`Nat`] (arbitrary precision). The Stirling table is a
//! process-wide cache guarded by an `RwLock`; rows are appended in order and
//! never modified afterwards, so readers on other threads only ever see
//! complete rows.

use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative integer used for every count and dimension.
pub type Nat = BigUint;

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> Nat {
    if k > n {
        return Nat::zero();
    }
    let k = k.min(n - k);
    let mut acc = Nat::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: usize) -> Nat {
    (1..=n).fold(Nat::one(), |acc, i| acc * i)
}

fn stirling_rows() -> &'static RwLock<Vec<Vec<Nat>>> {
    static ROWS: OnceLock<RwLock<Vec<Vec<Nat>>>> = OnceLock::new();
    ROWS.get_or_init(|| RwLock::new(vec![vec![Nat::one()]]))
}

fn ensure_stirling_rows(k: usize) {
    if stirling_rows()
        .read()
        .expect("stirling cache poisoned")
        .len()
        > k
    {
        return;
    }
    let mut rows = stirling_rows().write().expect("stirling cache poisoned");
    while rows.len() <= k {
        // {m+1 t} = t {m t} + {m t-1}
        let prev = rows.last().expect("row 0 is always present");
        let m = rows.len() - 1;
        let mut next = vec![Nat::zero(); m + 2];
        for t in 1..=m + 1 {
            let mut v = prev[t - 1].clone();
            if t <= m {
                v += &prev[t] * t;
            }
            next[t] = v;
        }
        rows.push(next);
    }
}

/// Stirling number of the second kind `{k t}`: set partitions of a `k`-set
/// into exactly `t` nonempty blocks.
pub fn stirling2(k: usize, t: usize) -> Nat {
    if t > k {
        return Nat::zero();
    }
    ensure_stirling_rows(k);
    stirling_rows().read().expect("stirling cache poisoned")[k][t].clone()
}

/// Bell number `B(k)`.
pub fn bell(k: usize) -> Nat {
    bell_restricted(k, k)
}

/// `B(k, n)`: set partitions of a `k`-set into at most `n` blocks.
pub fn bell_restricted(k: usize, n: usize) -> Nat {
    (0..=n.min(k)).map(|t| stirling2(k, t)).sum()
}

/// `m!! = m (m-2) ... 3 1` for odd `m`, with `(-1)!! = 0!! = 1`.
pub fn odd_double_factorial(m: i64) -> Result<Nat> {
    match m {
        -1 | 0 => Ok(Nat::one()),
        m if m > 0 && m % 2 == 1 => Ok((1..=m as usize)
            .step_by(2)
            .fold(Nat::one(), |acc, i| acc * i)),
        m => Err(Error::Domain(format!(
            "double factorial is only defined here for odd m >= -1 (or 0), got {m}"
        ))),
    }
}

/// Iterator over the restricted growth strings of length `len`; each string
/// `a` encodes the set partition in which `i` and `j` share a block iff
/// `a[i] == a[j]`. Strings come out in lexicographic order.
#[derive(Debug, Clone)]
pub struct RestrictedGrowthStrings {
    current: Option<Vec<usize>>,
}

impl RestrictedGrowthStrings {
    pub fn new(len: usize) -> Self {
        Self {
            current: Some(vec![0; len]),
        }
    }
}

impl Iterator for RestrictedGrowthStrings {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let mut next = out.clone();
        let mut prefix_max = Vec::with_capacity(next.len());
        let mut m = 0;
        for &a in &next {
            m = m.max(a);
            prefix_max.push(m);
        }
        for i in (1..next.len()).rev() {
            if next[i] <= prefix_max[i - 1] {
                next[i] += 1;
                for slot in next.iter_mut().skip(i + 1) {
                    *slot = 0;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// Number of blocks in the set partition encoded by a restricted growth string.
pub fn rgs_block_count(rgs: &[usize]) -> usize {
    rgs.iter().max().map_or(0, |m| m + 1)
}

/// `υ_m`: set partitions of an `m`-set with no singleton block, by direct
/// enumeration.
pub fn singleton_free_bell(m: usize) -> Nat {
    let mut count = 0u64;
    for rgs in RestrictedGrowthStrings::new(m) {
        let mut sizes = vec![0usize; rgs_block_count(&rgs)];
        for &b in &rgs {
            sizes[b] += 1;
        }
        if sizes.iter().all(|&s| s != 1) {
            count += 1;
        }
    }
    Nat::from(count)
}

/// Converts a signed total to [`Nat`], failing if it is negative.
pub(crate) fn to_nat(value: BigInt, what: &str) -> Result<Nat> {
    match value.sign() {
        Sign::Minus => Err(Error::Domain(format!(
            "{what} evaluated to negative value {value}"
        ))),
        _ => Ok(value.magnitude().clone()),
    }
}

/// `Σ_{ℓ=0}^{k} (-1)^{k-ℓ} C(k,ℓ) term(ℓ)`, the binomial inverse of a sequence.
pub(crate) fn binomial_inverse<F>(k: usize, mut term: F) -> Result<BigInt>
where
    F: FnMut(usize) -> Result<Nat>,
{
    let mut acc = BigInt::zero();
    for l in 0..=k {
        let v = BigInt::from(binomial(k, l) * term(l)?);
        if (k - l).is_multiple_of(2) {
            acc += v;
        } else {
            acc -= v;
        }
    }
    Ok(acc)
}
