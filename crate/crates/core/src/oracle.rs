//! Brute-force cross-checks that share no code with the dimension formulas:
//! Murnaghan–Nakayama characters, class-sum inner products for tensor-power
//! multiplicities, and direct enumeration of `(set partition, tableau)` pairs.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{factorial, Nat, RestrictedGrowthStrings};
use crate::branch::AltSign;
use crate::dims::{Group, GroupModuleContext, IrrepLabel, Module};
use crate::error::{Error, Result};
use crate::young::{partitions_of, Partition};

/// A cycle type, i.e. a partition of `n` read as cycle lengths.
pub type CycleType = Partition;

/// `n! / z_ct`, the number of permutations with cycle type `ct`.
pub fn class_size(ct: &CycleType) -> Nat {
    let mut z = Nat::one();
    let mut run = 0usize;
    let parts = ct.parts();
    for (i, &p) in parts.iter().enumerate() {
        run += 1;
        z *= p;
        if i + 1 == parts.len() || parts[i + 1] != p {
            z *= factorial(run);
            run = 0;
        }
    }
    factorial(ct.size()) / z
}

fn is_even(ct: &CycleType) -> bool {
    (ct.size() - ct.len()).is_multiple_of(2)
}

fn classes(n: usize, even_only: bool) -> Vec<(CycleType, Nat)> {
    partitions_of(n)
        .into_iter()
        .filter(|ct| !even_only || is_even(ct))
        .map(|ct| {
            let s = class_size(&ct);
            (ct, s)
        })
        .collect()
}

/// Cycle types of `S_n` with their class sizes; `even_only` keeps the classes
/// lying in `A_n` (sizes are still the `S_n` class sizes).
pub fn conjugacy_classes(n: usize, even_only: bool) -> Result<Vec<(CycleType, Nat)>> {
    if !(1..=10).contains(&n) {
        return Err(Error::NOutOfRange(n));
    }
    Ok(classes(n, even_only))
}

/// `χ_λ(ct)` by the Murnaghan–Nakayama rule.
pub fn character_mn(lambda: &Partition, ct: &CycleType) -> Result<BigInt> {
    if lambda.size() != ct.size() {
        return Err(Error::SizeMismatch {
            expected: lambda.size(),
            found: ct.size(),
        });
    }
    let len = lambda.len();
    let beta: Vec<usize> = (0..len).map(|i| lambda.part(i) + len - 1 - i).collect();
    let mut memo = HashMap::new();
    Ok(mn(beta, ct.parts(), &mut memo))
}

// Beta-set recursion: removing a border strip of length r moves one bead
// from b to b - r; the sign counts the beads jumped over.
fn mn(
    beta: Vec<usize>,
    cycles: &[usize],
    memo: &mut HashMap<(Vec<usize>, usize), BigInt>,
) -> BigInt {
    let Some((&r, rest)) = cycles.split_first() else {
        return BigInt::one();
    };
    let key = (beta, cycles.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let beta = &key.0;
    let mut total = BigInt::zero();
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let jumped = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let mut next = beta.clone();
        next[i] = b - r;
        next.sort_unstable_by(|x, y| y.cmp(x));
        let v = mn(next, rest, memo);
        if jumped % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// Multiplicity of the irreducible `label` in the tensor power named by `ctx`,
/// from the class-sum inner product. For a signed alternating label the inner
/// product with the restricted `S_m` character gives the sum over both signs,
/// which is halved.
pub fn multiplicity_oracle(ctx: &GroupModuleContext, label: &IrrepLabel) -> Result<Nat> {
    ctx.validate()?;
    let m = ctx.acting_degree();
    let k = ctx.tensor_power();
    let half = !ctx.level.is_integer();
    if label.size() != m {
        return Err(Error::InvalidContext(format!(
            "label {label} has size {} but the acting group has degree {m}",
            label.size()
        )));
    }
    let (base, signed) = match (ctx.group, label) {
        (Group::Sym, IrrepLabel::Sym(p)) => (p.clone(), false),
        (Group::Alt, IrrepLabel::Alt(a)) => (a.base().clone(), a.sign() != AltSign::None),
        (g, l) => {
            return Err(Error::InvalidContext(format!(
                "label {l} does not belong to group {g}"
            )))
        }
    };
    // A_0 and A_1 are trivial groups equal to S_0, S_1.
    let alternating = ctx.group == Group::Alt && m >= 2;
    let order = if alternating {
        factorial(m) / 2u32
    } else {
        factorial(m)
    };

    let mut sum = BigInt::zero();
    for (ct, size) in classes(m, alternating) {
        let fixed = ct.parts().iter().filter(|&&p| p == 1).count() + usize::from(half);
        let trace = match ctx.module {
            Module::Perm => BigInt::from(fixed),
            Module::Refl => BigInt::from(fixed) - 1,
        };
        let chi = character_mn(&base, &ct)?;
        sum += BigInt::from(size) * trace.pow(k as u32) * chi;
    }
    let order = BigInt::from(order);
    if !(&sum % &order).is_zero() || sum.is_negative() {
        return Err(Error::NonIntegerMultiplicity(format!(
            "{label} in {ctx:?}: class sum {sum} over group order {order}"
        )));
    }
    let mut mult = sum / order;
    if signed {
        if !(&mult % BigInt::from(2)).is_zero() {
            return Err(Error::NonIntegerMultiplicity(format!(
                "{label} in {ctx:?}: paired multiplicity {mult} is odd"
            )));
        }
        mult /= 2;
    }
    Ok(mult.magnitude().clone())
}

/// Counts pairs `(P, T)`: `P` a set partition of `{1..k}` with `t` blocks, `T` a
/// semistandard filling of `λ` by `n - t` zeros and the block maxima of `P`.
pub fn pair_count_oracle(n: usize, k: usize, lambda: &Partition) -> Result<Nat> {
    if k > 8 || n > 6 {
        return Err(Error::ScaleExceeded(format!(
            "pair enumeration is bounded by n <= 6, k <= 8 (got n = {n}, k = {k})"
        )));
    }
    if lambda.size() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: lambda.size(),
        });
    }
    let mut total = 0u64;
    for rgs in RestrictedGrowthStrings::new(k) {
        let t = rgs.iter().max().map_or(0, |&b| b + 1);
        if t > n {
            continue;
        }
        let mut maxima = vec![0usize; t];
        for (i, &b) in rgs.iter().enumerate() {
            maxima[b] = i + 1;
        }
        maxima.sort_unstable();
        // values[0] = 0 with multiplicity n - t, then each maximum once
        let mut values = vec![0u32];
        values.extend(maxima.iter().map(|&v| v as u32));
        let mut remaining = vec![1usize; values.len()];
        remaining[0] = n - t;
        let mut grid: Vec<Vec<u32>> = lambda
            .parts()
            .iter()
            .map(|&l| Vec::with_capacity(l))
            .collect();
        total += fill(lambda, &values, &mut remaining, &mut grid, 0, 0);
    }
    Ok(Nat::from(total))
}

fn fill(
    shape: &Partition,
    values: &[u32],
    remaining: &mut [usize],
    grid: &mut Vec<Vec<u32>>,
    r: usize,
    c: usize,
) -> u64 {
    if r == shape.len() {
        return 1;
    }
    let (nr, nc) = if c + 1 == shape.part(r) {
        (r + 1, 0)
    } else {
        (r, c + 1)
    };
    let mut count = 0;
    for i in 0..values.len() {
        if remaining[i] == 0 {
            continue;
        }
        let v = values[i];
        if c > 0 && grid[r][c - 1] > v {
            continue;
        }
        if r > 0 && grid[r - 1][c] >= v {
            continue;
        }
        remaining[i] -= 1;
        grid[r].push(v);
        count += fill(shape, values, remaining, grid, nr, nc);
        grid[r].pop();
        remaining[i] += 1;
    }
    count
}
