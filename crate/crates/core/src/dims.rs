//! Closed-form dimensions of irreducible modules for the centralizer algebras
//! of `S_n`, `S_{n-1}`, `A_n`, `A_{n-1}` on tensor powers of the permutation
//! module `M_n` and the reflection module `R_n = S^{[n-1,1]}`.
//!
//! By Schur–Weyl duality each dimension is also the multiplicity of the
//! corresponding group irreducible in the tensor power. Level `k` means the
//! `k`-th tensor power under the big group; level `k + 1/2` means the same
//! power restricted to the point stabilizer.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{
    bell_restricted, binomial, binomial_inverse, odd_double_factorial, stirling2, to_nat, Nat,
};
use crate::branch::{alt_labels_of, AltLabel};
use crate::error::{Error, Result};
use crate::young::{
    kostka, num_skew_syt, num_syt, partitions_of, Partition, SkewShape, WeakComposition,
};

/// A level `ℓ ∈ ½ℤ≥0`, stored as `2ℓ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HalfLevel {
    twice: usize,
}

impl HalfLevel {
    pub fn from_twice(twice: usize) -> Self {
        Self { twice }
    }

    /// Integer level `k`.
    pub fn integer(k: usize) -> Self {
        Self { twice: 2 * k }
    }

    /// Level `k + 1/2`.
    pub fn half(k: usize) -> Self {
        Self { twice: 2 * k + 1 }
    }

    pub fn twice(self) -> usize {
        self.twice
    }

    pub fn is_integer(self) -> bool {
        self.twice.is_multiple_of(2)
    }

    /// `⌊ℓ⌋`, which is also the tensor power at this level.
    pub fn floor(self) -> usize {
        self.twice / 2
    }
}

impl fmt::Display for HalfLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl FromStr for HalfLevel {
    type Err = Error;

    /// Accepts `"3"`, `"7/2"` and `"3.5"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad level {s:?}; expected e.g. 3, 7/2 or 3.5"));
        if let Some((num, den)) = s.split_once('/') {
            let num: usize = num.trim().parse().map_err(|_| bad())?;
            return match den.trim() {
                "1" => Ok(Self::integer(num)),
                "2" => Ok(Self::from_twice(num)),
                _ => Err(bad()),
            };
        }
        if let Some((int, frac)) = s.split_once('.') {
            let int: usize = int.parse().map_err(|_| bad())?;
            let frac = frac.trim_end_matches('0');
            return match frac {
                "" => Ok(Self::integer(int)),
                "5" => Ok(Self::half(int)),
                _ => Err(bad()),
            };
        }
        s.parse().map(Self::integer).map_err(|_| bad())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Group {
    Sym,
    Alt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Module {
    Perm,
    Refl,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Group::Sym => "S",
            Group::Alt => "A",
        })
    }
}

impl fmt::Display for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Module::Perm => "perm",
            Module::Refl => "refl",
        })
    }
}

/// Identifies one centralizer algebra: group, degree, module and level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupModuleContext {
    pub group: Group,
    pub n: usize,
    pub module: Module,
    pub level: HalfLevel,
}

impl GroupModuleContext {
    pub fn new(group: Group, n: usize, module: Module, level: HalfLevel) -> Result<Self> {
        let ctx = Self {
            group,
            n,
            module,
            level,
        };
        ctx.validate()?;
        Ok(ctx)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidContext("n must be at least 1".into()));
        }
        Ok(())
    }

    /// Degree of the group acting at this level (`n` or `n - 1`).
    pub fn acting_degree(&self) -> usize {
        if self.level.is_integer() {
            self.n
        } else {
            self.n - 1
        }
    }

    pub fn tensor_power(&self) -> usize {
        self.level.floor()
    }
}

/// Label of an irreducible module of whichever group a context names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum IrrepLabel {
    Sym(Partition),
    Alt(AltLabel),
}

impl IrrepLabel {
    pub fn size(&self) -> usize {
        match self {
            IrrepLabel::Sym(p) => p.size(),
            IrrepLabel::Alt(a) => a.size(),
        }
    }

    /// Parses a label for `group`: `"3,1"`, `"2,2+"`, `"empty"`.
    pub fn parse(group: Group, s: &str) -> Result<Self> {
        match group {
            Group::Sym => Ok(IrrepLabel::Sym(s.parse()?)),
            Group::Alt => Ok(IrrepLabel::Alt(s.parse()?)),
        }
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrepLabel::Sym(p) => p.fmt(f),
            IrrepLabel::Alt(a) => a.fmt(f),
        }
    }
}

fn check_size(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::SizeMismatch { expected, found });
    }
    Ok(())
}

fn hook_kostka(lambda: &Partition, n: usize, t: usize) -> Nat {
    kostka(lambda, &WeakComposition::hook_type(n, t)).expect("hook type has size n")
}

fn skew_by_row(lambda: &Partition, row: usize) -> Nat {
    match SkewShape::new(lambda.clone(), Partition::row(row)) {
        Ok(s) => num_skew_syt(&s),
        Err(_) => Nat::zero(),
    }
}

/// Multiplicity of `S_n^λ` in `M_n^{⊗k}`: `Σ_t {k t} K_{λ,[n-t,1^t]}`.
pub fn dim_z(n: usize, k: usize, lambda: &Partition) -> Result<Nat> {
    check_size(n, lambda.size())?;
    Ok((0..=n)
        .map(|t| stirling2(k, t) * hook_kostka(lambda, n, t))
        .sum())
}

/// Multiplicity of `S_{n-1}^μ` in `M_n^{⊗k}`: `Σ_t {k+1 t+1} K_{μ,[n-1-t,1^t]}`.
pub fn dim_z_half(n: usize, k: usize, mu: &Partition) -> Result<Nat> {
    if n == 0 {
        return Err(Error::InvalidContext("n must be at least 1".into()));
    }
    check_size(n - 1, mu.size())?;
    Ok((0..n)
        .map(|t| stirling2(k + 1, t + 1) * hook_kostka(mu, n - 1, t))
        .sum())
}

/// `Σ_{t ≥ |λ^#|} {k t} f^{λ/[n-t]}`.
pub fn dim_z_skew_form(n: usize, k: usize, lambda: &Partition) -> Result<Nat> {
    check_size(n, lambda.size())?;
    let start = lambda.without_first_part().size();
    Ok((start..=n)
        .map(|t| stirling2(k, t) * skew_by_row(lambda, n - t))
        .sum())
}

/// Splits the skew sum where `f^{λ/[n-t]} = C(t, |λ^#|) f^{λ^#}` holds (`t ≤ n - λ_2`).
pub fn dim_z_split_form(n: usize, k: usize, lambda: &Partition) -> Result<Nat> {
    check_size(n, lambda.size())?;
    let sharp = lambda.without_first_part();
    let s = sharp.size();
    let cut = n - lambda.part(1);
    let head: Nat = (s..=cut).map(|t| stirling2(k, t) * binomial(t, s)).sum();
    let tail: Nat = (cut + 1..=n)
        .map(|t| stirling2(k, t) * skew_by_row(lambda, n - t))
        .sum();
    Ok(num_syt(&sharp) * head + tail)
}

/// Half-level analogue of [`dim_z_skew_form`].
pub fn dim_z_half_skew_form(n: usize, k: usize, mu: &Partition) -> Result<Nat> {
    if n == 0 {
        return Err(Error::InvalidContext("n must be at least 1".into()));
    }
    check_size(n - 1, mu.size())?;
    let m = n - 1;
    let start = mu.without_first_part().size();
    Ok((start..=m)
        .map(|t| stirling2(k + 1, t + 1) * skew_by_row(mu, m - t))
        .sum())
}

/// Half-level analogue of [`dim_z_split_form`], with the tail running to `n - 1`.
pub fn dim_z_half_split_form(n: usize, k: usize, mu: &Partition) -> Result<Nat> {
    if n == 0 {
        return Err(Error::InvalidContext("n must be at least 1".into()));
    }
    check_size(n - 1, mu.size())?;
    let m = n - 1;
    let sharp = mu.without_first_part();
    let s = sharp.size();
    let cut = m - mu.part(1);
    let head: Nat = (s..=cut)
        .map(|t| stirling2(k + 1, t + 1) * binomial(t, s))
        .sum();
    let tail: Nat = (cut + 1..=m)
        .map(|t| stirling2(k + 1, t + 1) * skew_by_row(mu, m - t))
        .sum();
    Ok(num_syt(&sharp) * head + tail)
}

/// Closed form valid when `1 ≤ λ_2 ≤ 2`; `None` otherwise.
pub fn dim_z_small_second_part(n: usize, k: usize, lambda: &Partition) -> Result<Option<Nat>> {
    check_size(n, lambda.size())?;
    if !(1..=2).contains(&lambda.part(1)) {
        return Ok(None);
    }
    let top = stirling2(k, n - 1) + stirling2(k, n);
    if lambda.part(0) == 1 {
        return Ok(Some(top));
    }
    let sharp = lambda.without_first_part();
    let s = sharp.size();
    let head: Nat = (s..=n.saturating_sub(2))
        .map(|t| binomial(t, s) * stirling2(k, t))
        .sum();
    Ok(Some(num_syt(&sharp) * head + num_syt(lambda) * top))
}

/// Dimension of the irreducible partition-algebra module `P^ν` at a generic
/// parameter, integer or half level.
pub fn dim_partition_algebra_irr(level: HalfLevel, nu: &Partition) -> Result<Nat> {
    let k = level.floor();
    let r = nu.size();
    if r > k {
        return Err(Error::NuTooLarge { size: r, k });
    }
    let sum: Nat = if level.is_integer() {
        (r..=k).map(|t| binomial(t, r) * stirling2(k, t)).sum()
    } else {
        (r..=k)
            .map(|t| binomial(t, r) * stirling2(k + 1, t + 1))
            .sum()
    };
    Ok(num_syt(nu) * sum)
}

fn splits(m: usize) -> bool {
    m >= 2
}

fn alt_combine<F>(label: &AltLabel, mut f: F) -> Result<Nat>
where
    F: FnMut(&Partition) -> Result<Nat>,
{
    let base = label.base();
    if label.is_signed() || base.is_self_conjugate() {
        f(base)
    } else {
        Ok(f(base)? + f(&base.conjugate())?)
    }
}

/// `A_n` analogue of [`dim_z`].
pub fn dim_z_alt(n: usize, k: usize, label: &AltLabel) -> Result<Nat> {
    check_size(n, label.size())?;
    alt_combine(label, |p| dim_z(n, k, p))
}

/// `A_{n-1}` analogue of [`dim_z_half`].
pub fn dim_z_alt_half(n: usize, k: usize, label: &AltLabel) -> Result<Nat> {
    check_size(n.saturating_sub(1), label.size())?;
    alt_combine(label, |p| dim_z_half(n, k, p))
}

fn inverse_of<F>(k: usize, what: &str, term: F) -> Result<Nat>
where
    F: FnMut(usize) -> Result<Nat>,
{
    to_nat(binomial_inverse(k, term)?, what)
}

/// Multiplicity of `S_n^λ` in `R_n^{⊗k}`, by binomial inversion over [`dim_z`].
pub fn dim_qz(n: usize, k: usize, lambda: &Partition) -> Result<Nat> {
    check_size(n, lambda.size())?;
    inverse_of(k, "dim_qz", |l| dim_z(n, l, lambda))
}

pub fn dim_qz_half(n: usize, k: usize, mu: &Partition) -> Result<Nat> {
    check_size(n.saturating_sub(1), mu.size())?;
    inverse_of(k, "dim_qz_half", |l| dim_z_half(n, l, mu))
}

pub fn dim_qz_alt(n: usize, k: usize, label: &AltLabel) -> Result<Nat> {
    check_size(n, label.size())?;
    inverse_of(k, "dim_qz_alt", |l| dim_z_alt(n, l, label))
}

pub fn dim_qz_alt_half(n: usize, k: usize, label: &AltLabel) -> Result<Nat> {
    check_size(n.saturating_sub(1), label.size())?;
    inverse_of(k, "dim_qz_alt_half", |l| dim_z_alt_half(n, l, label))
}

/// Generic quasi-partition algebra irreducible `QP_k^ν`.
pub fn dim_qp_irr(k: usize, nu: &Partition) -> Result<Nat> {
    let r = nu.size();
    if r > k {
        return Err(Error::NuTooLarge { size: r, k });
    }
    let inner = inverse_of(k, "dim_qp_irr", |l| {
        Ok((r..=l).map(|t| binomial(t, r) * stirling2(l, t)).sum())
    })?;
    Ok(num_syt(nu) * inner)
}

/// Dimension of the `(r, p)` block of the partition-algebra Gelfand model:
/// `C(r,p) (r-p-1)!! Σ_{t=r}^{k} C(t,r) {k t}`.
pub fn dim_model_block(k: usize, r: usize, p: usize) -> Result<Nat> {
    if p > r || r > k {
        return Err(Error::Domain(format!(
            "need p <= r <= k, got k={k} r={r} p={p}"
        )));
    }
    if (r - p) % 2 == 1 {
        return Err(Error::Parity(r - p));
    }
    let involutions = binomial(r, p) * odd_double_factorial(r as i64 - p as i64 - 1)?;
    let sum: Nat = (r..=k).map(|t| binomial(t, r) * stirling2(k, t)).sum();
    Ok(involutions * sum)
}

/// `Σ_{ℓ=0}^{2k} (-1)^{2k-ℓ} C(2k,ℓ) B(ℓ)`, the stable reflection-module algebra dimension.
pub fn quasi_algebra_dim_bell_form(k: usize) -> Result<Nat> {
    inverse_of(2 * k, "bell form", |l| Ok(crate::arith::bell(l)))
}

/// `1 + Σ_{ℓ=1}^{2k} (-1)^{ℓ-1} B(2k-ℓ)`.
pub fn quasi_algebra_dim_telescoping(k: usize) -> Result<Nat> {
    let mut acc = num_bigint::BigInt::from(1);
    for l in 1..=2 * k {
        let b = num_bigint::BigInt::from(crate::arith::bell(2 * k - l));
        if l % 2 == 1 {
            acc += b;
        } else {
            acc -= b;
        }
    }
    to_nat(acc, "telescoping form")
}

/// Multiplicity of the trivial module in `M^{⊗j}` for the acting group of `ctx`
/// (`j` is the exponent, the group is taken from `ctx.group` and the level parity).
fn trivial_multiplicity_perm(group: Group, n: usize, half: bool, j: usize) -> Nat {
    // M^{⊗j} restricted to S_{n-1} is Σ_s C(j,s) M_{n-1}^{⊗s}, whose trivial
    // multiplicity is B(j+1, n); over S_n it is B(j, n).
    let (size, sym) = if half {
        (j + 1, bell_restricted(j + 1, n))
    } else {
        (j, bell_restricted(j, n))
    };
    let degree = if half { n - 1 } else { n };
    match group {
        Group::Alt if splits(degree) => sym + stirling2(size, n - 1) + stirling2(size, n),
        _ => sym,
    }
}

/// Dimension of the centralizer algebra named by `ctx`.
pub fn dim_z_algebra(ctx: &GroupModuleContext) -> Result<Nat> {
    ctx.validate()?;
    let k = ctx.tensor_power();
    let half = !ctx.level.is_integer();
    match ctx.module {
        Module::Perm => Ok(trivial_multiplicity_perm(ctx.group, ctx.n, half, 2 * k)),
        Module::Refl => inverse_of(2 * k, "reflection algebra dimension", |l| {
            Ok(trivial_multiplicity_perm(ctx.group, ctx.n, half, l))
        }),
    }
}

/// Dimension of the irreducible centralizer module labelled `label` in `ctx`
/// (zero when the label does not occur).
pub fn dim_irreducible(ctx: &GroupModuleContext, label: &IrrepLabel) -> Result<Nat> {
    ctx.validate()?;
    let (n, k) = (ctx.n, ctx.tensor_power());
    let integer = ctx.level.is_integer();
    match (ctx.group, label) {
        (Group::Sym, IrrepLabel::Sym(p)) => match (ctx.module, integer) {
            (Module::Perm, true) => dim_z(n, k, p),
            (Module::Perm, false) => dim_z_half(n, k, p),
            (Module::Refl, true) => dim_qz(n, k, p),
            (Module::Refl, false) => dim_qz_half(n, k, p),
        },
        (Group::Alt, IrrepLabel::Alt(a)) => match (ctx.module, integer) {
            (Module::Perm, true) => dim_z_alt(n, k, a),
            (Module::Perm, false) => dim_z_alt_half(n, k, a),
            (Module::Refl, true) => dim_qz_alt(n, k, a),
            (Module::Refl, false) => dim_qz_alt_half(n, k, a),
        },
        (g, l) => Err(Error::InvalidContext(format!(
            "label {l} does not belong to group {g}"
        ))),
    }
}

/// All labels of the group acting in `ctx`, in row order.
pub fn labels_for(ctx: &GroupModuleContext) -> Vec<IrrepLabel> {
    let m = ctx.acting_degree();
    match ctx.group {
        Group::Sym => partitions_of(m).into_iter().map(IrrepLabel::Sym).collect(),
        Group::Alt => alt_labels_of(m).into_iter().map(IrrepLabel::Alt).collect(),
    }
}

/// Decomposition of the tensor power into irreducibles, multiplicity ≥ 1 only.
pub fn decompose(ctx: &GroupModuleContext) -> Result<Vec<(IrrepLabel, Nat)>> {
    ctx.validate()?;
    let mut out = Vec::new();
    for label in labels_for(ctx) {
        let d = dim_irreducible(ctx, &label)?;
        if !d.is_zero() {
            out.push((label, d));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{bell, singleton_free_bell};
    use crate::branch::restrict_sym;
    use crate::young::involutions_with_fixed_points;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn a(s: &str) -> AltLabel {
        s.parse().unwrap()
    }

    fn n(v: u64) -> Nat {
        Nat::from(v)
    }

    fn ctx(group: Group, nn: usize, module: Module, level: &str) -> GroupModuleContext {
        GroupModuleContext::new(group, nn, module, level.parse().unwrap()).unwrap()
    }

    #[test]
    fn levels_parse_and_print() {
        assert_eq!("7/2".parse::<HalfLevel>().unwrap(), HalfLevel::half(3));
        assert_eq!("3.5".parse::<HalfLevel>().unwrap(), HalfLevel::half(3));
        assert_eq!("3".parse::<HalfLevel>().unwrap(), HalfLevel::integer(3));
        assert_eq!("3.0".parse::<HalfLevel>().unwrap(), HalfLevel::integer(3));
        assert_eq!("6/2".parse::<HalfLevel>().unwrap(), HalfLevel::integer(3));
        assert_eq!(HalfLevel::half(3).to_string(), "7/2");
        assert_eq!(HalfLevel::half(0).to_string(), "1/2");
        assert_eq!(HalfLevel::integer(4).to_string(), "4");
        for bad in ["x", "7/3", "3.25", "-1", ""] {
            assert!(bad.parse::<HalfLevel>().is_err(), "{bad}");
        }
    }

    #[test]
    fn dim_z_examples() {
        assert_eq!(dim_z(4, 3, &p(&[2, 2])).unwrap(), n(5));
        assert_eq!(dim_z(6, 4, &p(&[3, 2, 1])).unwrap(), n(20));
        assert_eq!(dim_z(4, 3, &p(&[1, 1, 1, 1])).unwrap(), n(1));
        for nn in 1..=6 {
            for lam in partitions_of(nn) {
                let expect = if lam == Partition::row(nn) { 1 } else { 0 };
                assert_eq!(dim_z(nn, 0, &lam).unwrap(), n(expect));
            }
        }
        assert!(matches!(
            dim_z(5, 3, &p(&[2, 2])),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn dim_z_half_examples() {
        assert_eq!(dim_z_half(4, 3, &p(&[2, 1])).unwrap(), n(21));
        assert_eq!(dim_z_half(6, 3, &p(&[4, 1])).unwrap(), n(22));
        for nn in 1..=6 {
            assert_eq!(dim_z_half(nn, 0, &Partition::row(nn - 1)).unwrap(), n(1));
        }
        assert!(matches!(
            dim_z_half(4, 3, &p(&[2, 2])),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn three_forms_agree() {
        for nn in 1..=6 {
            for k in 0..=6 {
                for lam in partitions_of(nn) {
                    let a = dim_z(nn, k, &lam).unwrap();
                    assert_eq!(dim_z_skew_form(nn, k, &lam).unwrap(), a, "{lam} k={k}");
                    assert_eq!(dim_z_split_form(nn, k, &lam).unwrap(), a, "{lam} k={k}");
                }
                for mu in partitions_of(nn - 1) {
                    let a = dim_z_half(nn, k, &mu).unwrap();
                    assert_eq!(dim_z_half_skew_form(nn, k, &mu).unwrap(), a);
                    assert_eq!(
                        dim_z_half_split_form(nn, k, &mu).unwrap(),
                        a,
                        "{mu} n={nn} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn pascal_rule() {
        for nn in 1..=6 {
            for k in 0..=5 {
                for mu in partitions_of(nn - 1) {
                    let s: Nat = partitions_of(nn)
                        .iter()
                        .filter(|lam| restrict_sym(lam).unwrap().contains(&mu))
                        .map(|lam| dim_z(nn, k, lam).unwrap())
                        .sum();
                    assert_eq!(dim_z_half(nn, k, &mu).unwrap(), s);
                }
                for lam in partitions_of(nn) {
                    let s: Nat = restrict_sym(&lam)
                        .unwrap()
                        .iter()
                        .map(|mu| dim_z_half(nn, k, mu).unwrap())
                        .sum();
                    assert_eq!(dim_z(nn, k + 1, &lam).unwrap(), s);
                }
            }
        }
    }

    #[test]
    fn trivial_and_half_trivial() {
        for nn in 1..=7 {
            for k in 0..=7 {
                assert_eq!(
                    dim_z(nn, k, &Partition::row(nn)).unwrap(),
                    bell_restricted(k, nn)
                );
                assert_eq!(
                    dim_z_half(nn, k, &Partition::row(nn - 1)).unwrap(),
                    bell_restricted(k + 1, nn)
                );
            }
        }
    }

    #[test]
    fn small_second_part() {
        for nn in 1..=7 {
            for k in 0..=6 {
                for lam in partitions_of(nn) {
                    if let Some(v) = dim_z_small_second_part(nn, k, &lam).unwrap() {
                        assert_eq!(v, dim_z(nn, k, &lam).unwrap(), "{lam} k={k}");
                    }
                }
                let col = Partition::column(nn);
                if nn >= 2 {
                    assert_eq!(
                        dim_z(nn, k, &col).unwrap(),
                        stirling2(k, nn - 1) + stirling2(k, nn)
                    );
                }
            }
        }
        // every λ ≠ [n] with n ≤ 5 is covered
        for nn in 2..=5 {
            for lam in partitions_of(nn).into_iter().skip(1) {
                assert!(
                    dim_z_small_second_part(nn, 3, &lam).unwrap().is_some(),
                    "{lam}"
                );
            }
        }
    }

    #[test]
    fn stable_range() {
        for k in 0..=4 {
            for r in 0..=k {
                for nu in partitions_of(r) {
                    let generic = dim_partition_algebra_irr(HalfLevel::integer(k), &nu).unwrap();
                    let generic_half = dim_partition_algebra_irr(HalfLevel::half(k), &nu).unwrap();
                    if r == k {
                        assert_eq!(generic, num_syt(&nu));
                        assert_eq!(generic_half, num_syt(&nu));
                    }
                    for nn in (2 * k).max(1)..=2 * k + 3 {
                        if nn - r < nu.part(0) {
                            continue;
                        }
                        let mut parts = vec![nn - r];
                        parts.extend_from_slice(nu.parts());
                        let lam = Partition::new(parts).unwrap();
                        assert_eq!(dim_z(nn, k, &lam).unwrap(), generic, "{lam} k={k}");
                        if nn > 2 * k && nn - 1 - r >= nu.part(0) {
                            let mut parts = vec![nn - 1 - r];
                            parts.extend_from_slice(nu.parts());
                            let mu = Partition::new(parts).unwrap();
                            assert_eq!(dim_z_half(nn, k, &mu).unwrap(), generic_half, "{mu}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn partition_algebra_examples() {
        for k in 0..=6 {
            assert_eq!(
                dim_partition_algebra_irr(HalfLevel::integer(k), &Partition::row(k)).unwrap(),
                n(1)
            );
            assert_eq!(
                dim_partition_algebra_irr(HalfLevel::integer(k), &Partition::empty()).unwrap(),
                bell(k)
            );
        }
        assert!(matches!(
            dim_partition_algebra_irr(HalfLevel::integer(2), &p(&[2, 1])),
            Err(Error::NuTooLarge { .. })
        ));
        // generic modules with ν = [n] for k ≥ n
        for k in 0..=6 {
            for r in 0..=k {
                let s: Nat = (r..=k).map(|t| binomial(t, r) * stirling2(k, t)).sum();
                assert_eq!(
                    dim_partition_algebra_irr(HalfLevel::integer(k), &Partition::row(r)).unwrap(),
                    s
                );
            }
        }
    }

    #[test]
    fn alt_examples() {
        assert_eq!(dim_z_alt(4, 3, &a("4")).unwrap(), n(6));
        assert_eq!(dim_z_alt(4, 3, &a("3,1")).unwrap(), n(16));
        assert_eq!(dim_z_alt(4, 3, &a("2,2+")).unwrap(), n(5));
        assert_eq!(dim_z_alt_half(4, 3, &a("3")).unwrap(), n(22));
        assert_eq!(dim_z_alt_half(4, 2, &a("2,1+")).unwrap(), n(5));
        assert_eq!(dim_z_alt_half(6, 3, &a("3,1,1+")).unwrap(), n(9));
        assert!(matches!(
            dim_z_alt(5, 3, &a("2,2+")),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn quasi_examples() {
        assert_eq!(dim_qz(6, 1, &p(&[6])).unwrap(), n(0));
        assert_eq!(dim_qz(6, 3, &p(&[3, 2, 1])).unwrap(), n(2));
        assert_eq!(dim_qz(6, 4, &p(&[4, 2])).unwrap(), n(13));
        assert_eq!(dim_qz_half(6, 3, &p(&[4, 1])).unwrap(), n(10));
        assert_eq!(dim_qz_half(6, 0, &p(&[5])).unwrap(), n(1));
        assert_eq!(dim_qz_half(6, 3, &p(&[2, 2, 1])).unwrap(), n(2));
        assert_eq!(dim_qz_alt(6, 4, &a("4,1,1")).unwrap(), n(19));
        assert_eq!(dim_qz_alt(6, 4, &a("3,2,1+")).unwrap(), n(12));
        assert_eq!(dim_qz_alt_half(6, 3, &a("3,1,1-")).unwrap(), n(6));
        assert_eq!(
            dim_qz_alt(6, 4, &a("3,2,1+")).unwrap(),
            dim_qz(6, 4, &p(&[3, 2, 1])).unwrap()
        );
    }

    #[test]
    fn binomial_inversion_roundtrip() {
        for nn in 1..=6 {
            for k in 0..=5 {
                for lam in partitions_of(nn) {
                    let s: Nat = (0..=k)
                        .map(|l| binomial(k, l) * dim_qz(nn, l, &lam).unwrap())
                        .sum();
                    assert_eq!(s, dim_z(nn, k, &lam).unwrap());
                }
            }
        }
    }

    #[test]
    fn qp_irr() {
        assert_eq!(dim_qp_irr(3, &p(&[2, 1])).unwrap(), n(2));
        assert_eq!(dim_qp_irr(2, &p(&[1])).unwrap(), n(1));
        for k in 0..=5 {
            for nu in partitions_of(k) {
                assert_eq!(dim_qp_irr(k, &nu).unwrap(), num_syt(&nu));
            }
        }
        // stable range of the reflection module
        for nn in 6..=8 {
            assert_eq!(
                dim_qz(nn, 2, &p(&[nn - 1, 1])).unwrap(),
                dim_qp_irr(2, &p(&[1])).unwrap()
            );
        }
        assert!(matches!(
            dim_qp_irr(1, &p(&[2])),
            Err(Error::NuTooLarge { .. })
        ));
    }

    #[test]
    fn model_blocks() {
        for k in 0..=6 {
            assert_eq!(dim_model_block(k, 0, 0).unwrap(), bell(k));
        }
        assert_eq!(dim_model_block(3, 3, 3).unwrap(), n(1));
        let brute: Nat = dim_partition_algebra_irr(HalfLevel::integer(4), &p(&[1, 1])).unwrap();
        assert_eq!(dim_model_block(4, 2, 0).unwrap(), brute);
        assert_eq!(dim_model_block(4, 3, 0), Err(Error::Parity(3)));
        for k in 0..=6 {
            for r in 0..=k.min(6) {
                for q in (0..=r).filter(|q| (r - q) % 2 == 0) {
                    let s: Nat = partitions_of(r)
                        .iter()
                        .filter(|nu| nu.odd_parts() == q)
                        .map(|nu| dim_partition_algebra_irr(HalfLevel::integer(k), nu).unwrap())
                        .sum();
                    assert_eq!(dim_model_block(k, r, q).unwrap(), s);
                    assert!(involutions_with_fixed_points(r, q) > Nat::zero());
                }
            }
        }
    }

    #[test]
    fn algebra_dimensions() {
        assert_eq!(
            dim_z_algebra(&ctx(Group::Sym, 4, Module::Perm, "3")).unwrap(),
            n(187)
        );
        assert_eq!(
            dim_z_algebra(&ctx(Group::Alt, 4, Module::Perm, "7/2")).unwrap(),
            n(1366)
        );
        assert_eq!(
            dim_z_algebra(&ctx(Group::Sym, 6, Module::Refl, "4")).unwrap(),
            n(694)
        );
        assert_eq!(
            dim_z_algebra(&ctx(Group::Alt, 6, Module::Refl, "4")).unwrap(),
            n(1114)
        );
        for k in 1..=4 {
            let c = ctx(Group::Alt, 2 * k + 1, Module::Perm, &k.to_string());
            assert_eq!(dim_z_algebra(&c).unwrap(), bell(2 * k) + 1u32);
        }
        assert!(
            GroupModuleContext::new(Group::Sym, 0, Module::Perm, HalfLevel::integer(1)).is_err()
        );
    }

    #[test]
    fn sum_of_squares() {
        for group in [Group::Sym, Group::Alt] {
            for module in [Module::Perm, Module::Refl] {
                for nn in 1..=6 {
                    for twice in 0..=8 {
                        let c = GroupModuleContext::new(
                            group,
                            nn,
                            module,
                            HalfLevel::from_twice(twice),
                        )
                        .unwrap();
                        let s: Nat = decompose(&c)
                            .unwrap()
                            .into_iter()
                            .map(|(_, d)| &d * &d)
                            .sum();
                        assert_eq!(s, dim_z_algebra(&c).unwrap(), "{c:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn quasi_algebra_stable() {
        for k in 0..=4 {
            let u = singleton_free_bell(2 * k);
            assert_eq!(quasi_algebra_dim_bell_form(k).unwrap(), u);
            assert_eq!(quasi_algebra_dim_telescoping(k).unwrap(), u);
            for nn in (2 * k).max(1)..=2 * k + 3 {
                let c = ctx(Group::Sym, nn, Module::Refl, &k.to_string());
                assert_eq!(dim_z_algebra(&c).unwrap(), u, "n={nn} k={k}");
            }
        }
        assert_eq!(singleton_free_bell(6), n(41));
        assert_eq!(singleton_free_bell(8), n(715));
    }

    #[test]
    fn decompositions() {
        let got: Vec<(String, Nat)> = decompose(&ctx(Group::Sym, 4, Module::Perm, "3"))
            .unwrap()
            .into_iter()
            .map(|(l, d)| (l.to_string(), d))
            .collect();
        let want = [
            ("4", 5),
            ("3,1", 10),
            ("2,2", 5),
            ("2,1,1", 6),
            ("1,1,1,1", 1),
        ];
        assert_eq!(
            got,
            want.iter()
                .map(|(l, d)| (l.to_string(), n(*d)))
                .collect::<Vec<_>>()
        );

        let got: Vec<(String, Nat)> = decompose(&ctx(Group::Alt, 4, Module::Perm, "3"))
            .unwrap()
            .into_iter()
            .map(|(l, d)| (l.to_string(), d))
            .collect();
        let want = [("4", 6), ("3,1", 16), ("2,2+", 5), ("2,2-", 5)];
        assert_eq!(
            got,
            want.iter()
                .map(|(l, d)| (l.to_string(), n(*d)))
                .collect::<Vec<_>>()
        );

        for group in [Group::Sym, Group::Alt] {
            for module in [Module::Perm, Module::Refl] {
                let d = decompose(&ctx(group, 5, module, "0")).unwrap();
                assert_eq!(d.len(), 1);
                assert_eq!(d[0].0.to_string(), "5");
                assert_eq!(d[0].1, n(1));
            }
        }
    }

    #[test]
    fn mismatched_label_is_rejected() {
        let c = ctx(Group::Sym, 4, Module::Perm, "3");
        assert!(matches!(
            dim_irreducible(&c, &IrrepLabel::Alt(a("3,1"))),
            Err(Error::InvalidContext(_))
        ));
        assert!(matches!(
            dim_irreducible(&c, &IrrepLabel::Sym(p(&[2, 1]))),
            Err(Error::SizeMismatch { .. })
        ));
    }
}
