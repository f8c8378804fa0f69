//! Verification suites behind the `verify` command: reference diagram rows,
//! oracle-versus-formula agreement, combinatorial identities, and the
//! path/pair bijection.

use std::fmt;
use std::str::FromStr;

use crate::arith::{bell, binomial, singleton_free_bell, stirling2, Nat};
use crate::bijection::{pair_to_path, path_to_pair, SetPartition, VacillatingTableau};
use crate::branch::{BranchingLabel, SymLabel};
use crate::bratteli::{build, build_diagram, AnyDiagram, BratteliDiagram, Pair};
use crate::dims::{
    decompose, dim_irreducible, dim_model_block, dim_partition_algebra_irr, dim_qz, dim_z,
    dim_z_algebra, dim_z_half, dim_z_half_skew_form, dim_z_half_split_form, dim_z_skew_form,
    dim_z_small_second_part, dim_z_split_form, labels_for, quasi_algebra_dim_bell_form,
    quasi_algebra_dim_telescoping, Group, GroupModuleContext, HalfLevel, Module,
};
use crate::error::{Error, Result};
use crate::oracle::{multiplicity_oracle, pair_count_oracle};
use crate::young::{kostka_hook_type, num_syt, partitions_of, Partition, SemistandardTableau};

/// A reference diagram: one `label:count` string per row (levels 0, 1/2, 1, ...)
/// and the row totals `Σ count²`.
#[derive(Debug, Clone, Copy)]
pub struct GoldenDiagram {
    pub name: &'static str,
    pub pair: Pair,
    pub module: Module,
    pub rows: &'static [&'static str],
    pub totals: &'static [u64],
}

pub const GOLDEN_S4: GoldenDiagram = GoldenDiagram {
    name: "S4 perm",
    pair: Pair::Sym(4),
    module: Module::Perm,
    rows: &[
        "4:1",
        "3:1",
        "4:1 3,1:1",
        "3:2 2,1:1",
        "4:2 3,1:3 2,2:1 2,1,1:1",
        "3:5 2,1:5 1,1,1:1",
        "4:5 3,1:10 2,2:5 2,1,1:6 1,1,1,1:1",
        "3:15 2,1:21 1,1,1:7",
        "4:15 3,1:36 2,2:21 2,1,1:28 1,1,1,1:7",
    ],
    totals: &[1, 1, 2, 5, 15, 51, 187, 715, 2795],
};

pub const GOLDEN_A4: GoldenDiagram = GoldenDiagram {
    name: "A4 perm",
    pair: Pair::Alt(4),
    module: Module::Perm,
    rows: &[
        "4:1",
        "3:1",
        "4:1 3,1:1",
        "3:2 2,1+:1 2,1-:1",
        "4:2 3,1:4 2,2+:1 2,2-:1",
        "3:6 2,1+:5 2,1-:5",
        "4:6 3,1:16 2,2+:5 2,2-:5",
        "3:22 2,1+:21 2,1-:21",
    ],
    totals: &[1, 1, 2, 6, 22, 86, 342, 1366],
};

pub const GOLDEN_S6: GoldenDiagram = GoldenDiagram {
    name: "S6 perm",
    pair: Pair::Sym(6),
    module: Module::Perm,
    rows: &[
        "6:1",
        "5:1",
        "6:1 5,1:1",
        "5:2 4,1:1",
        "6:2 5,1:3 4,2:1 4,1,1:1",
        "5:5 4,1:5 3,2:1 3,1,1:1",
        "6:5 5,1:10 4,2:6 4,1,1:6 3,3:1 3,2,1:2 3,1,1,1:1",
        "5:15 4,1:22 3,2:9 3,1,1:9 2,2,1:2 2,1,1,1:1",
        "6:15 5,1:37 4,2:31 4,1,1:31 3,3:9 3,2,1:20 3,1,1,1:10 2,2,2:2 2,2,1,1:3 2,1,1,1,1:1",
    ],
    totals: &[1, 1, 2, 5, 15, 52, 203, 876, 4111],
};

pub const GOLDEN_S6_REFL: GoldenDiagram = GoldenDiagram {
    name: "S6 refl",
    pair: Pair::Sym(6),
    module: Module::Refl,
    rows: &[
        "6:1",
        "5:1",
        "6:0 5,1:1",
        "5:1 4,1:1",
        "6:1 5,1:1 4,2:1 4,1,1:1",
        "5:2 4,1:3 3,2:1 3,1,1:1",
        "6:1 5,1:4 4,2:3 4,1,1:3 3,3:1 3,2,1:2 3,1,1,1:1",
        "5:5 4,1:10 3,2:6 3,1,1:6 2,2,1:2 2,1,1,1:1",
        "6:4 5,1:11 4,2:13 4,1,1:13 3,3:5 3,2,1:12 3,1,1,1:6 2,2,2:2 2,2,1,1:3 2,1,1,1,1:1",
    ],
    totals: &[1, 1, 1, 2, 4, 15, 41, 202, 694],
};

pub const GOLDEN_A6: GoldenDiagram = GoldenDiagram {
    name: "A6 perm",
    pair: Pair::Alt(6),
    module: Module::Perm,
    rows: &[
        "6:1",
        "5:1",
        "6:1 5,1:1",
        "5:2 4,1:1",
        "6:2 5,1:3 4,2:1 4,1,1:1",
        "5:5 4,1:5 3,2:1 3,1,1+:1 3,1,1-:1",
        "6:5 5,1:10 4,2:6 4,1,1:7 3,3:1 3,2,1+:2 3,2,1-:2",
        "5:15 4,1:23 3,2:11 3,1,1+:9 3,1,1-:9",
        "6:15 5,1:38 4,2:34 4,1,1:41 3,3:11 3,2,1+:20 3,2,1-:20",
    ],
    totals: &[1, 1, 2, 5, 15, 53, 219, 1037, 5427],
};

pub const GOLDEN_A6_REFL: GoldenDiagram = GoldenDiagram {
    name: "A6 refl",
    pair: Pair::Alt(6),
    module: Module::Refl,
    rows: &[
        "6:1",
        "5:1",
        "6:0 5,1:1",
        "5:1 4,1:1",
        "6:1 5,1:1 4,2:1 4,1,1:1",
        "5:2 4,1:3 3,2:1 3,1,1+:1 3,1,1-:1",
        "6:1 5,1:4 4,2:3 4,1,1:4 3,3:1 3,2,1+:2 3,2,1-:2",
        "5:5 4,1:11 3,2:8 3,1,1+:6 3,1,1-:6",
        "6:4 5,1:12 4,2:16 4,1,1:19 3,3:7 3,2,1+:12 3,2,1-:12",
    ],
    totals: &[1, 1, 1, 2, 4, 16, 51, 282, 1114],
};

pub const GOLDEN_DIAGRAMS: [GoldenDiagram; 6] = [
    GOLDEN_S4,
    GOLDEN_A4,
    GOLDEN_S6,
    GOLDEN_S6_REFL,
    GOLDEN_A6,
    GOLDEN_A6_REFL,
];

/// A path (shapes at levels 0, 1/2, ...), its set partition and tableau rows.
pub type ReferencePath = (
    &'static [&'static str],
    &'static str,
    &'static [&'static [u32]],
);

/// The five paths to `[2,2]` at level 3 for `n = 4`, with their pairs.
pub const GOLDEN_PATHS: [ReferencePath; 5] = [
    (
        &["4", "3", "4", "3", "3,1", "2,1", "2,2"],
        "1,2|3",
        &[&[0, 0], &[2, 3]],
    ),
    (
        &["4", "3", "3,1", "3", "3,1", "2,1", "2,2"],
        "1,3|2",
        &[&[0, 0], &[2, 3]],
    ),
    (
        &["4", "3", "3,1", "2,1", "3,1", "2,1", "2,2"],
        "1|2,3",
        &[&[0, 0], &[1, 3]],
    ),
    (
        &["4", "3", "3,1", "2,1", "2,2", "2,1", "2,2"],
        "1|2|3",
        &[&[0, 2], &[1, 3]],
    ),
    (
        &["4", "3", "3,1", "2,1", "2,1,1", "2,1", "2,2"],
        "1|2|3",
        &[&[0, 1], &[2, 3]],
    ),
];

/// Builds the diagram of `fig` and lists every mismatch (empty when it matches).
pub fn check_golden(fig: &GoldenDiagram) -> Result<Vec<String>> {
    let max = HalfLevel::from_twice(fig.rows.len() - 1);
    let d = build_diagram(fig.pair, fig.module, max)?;
    let mut bad = Vec::new();
    for (twice, want) in fig.rows.iter().enumerate() {
        let level = HalfLevel::from_twice(twice);
        let got = render_row(&d, level)?;
        if got != *want {
            bad.push(format!(
                "{} l={level}: got {got:?}, expected {want:?}",
                fig.name
            ));
        }
    }
    for (twice, &want) in fig.totals.iter().enumerate() {
        let level = HalfLevel::from_twice(twice);
        let got = d.level_square_sum(level)?;
        if got != Nat::from(want) {
            bad.push(format!(
                "{} l={level}: total {got}, expected {want}",
                fig.name
            ));
        }
    }
    Ok(bad)
}

/// A row as `label:count` cells separated by single spaces.
pub fn render_row(d: &AnyDiagram, level: HalfLevel) -> Result<String> {
    Ok(d.row_counts(level)?
        .into_iter()
        .map(|(l, c)| format!("{l}:{c}"))
        .collect::<Vec<_>>()
        .join(" "))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    All,
    Golden,
    Oracle,
    Properties,
    Bijection,
}

impl FromStr for Scope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Scope::All),
            "golden" => Ok(Scope::Golden),
            "oracle" => Ok(Scope::Oracle),
            "properties" => Ok(Scope::Properties),
            "bijection" => Ok(Scope::Bijection),
            _ => Err(Error::Parse(format!(
                "unknown scope {s:?} (expected all, golden, oracle, properties or bijection)"
            ))),
        }
    }
}

/// Pass/fail tally for one suite; failures carry a description.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub passed: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            ..Self::default()
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failures.push(what());
        }
    }

    fn check_eq<T: PartialEq + fmt::Debug>(
        &mut self,
        got: Result<T>,
        want: Result<T>,
        what: impl Fn() -> String,
    ) {
        match (got, want) {
            (Ok(g), Ok(w)) if g == w => self.passed += 1,
            (Ok(g), Ok(w)) => self.failures.push(format!("{}: {g:?} != {w:?}", what())),
            (Err(e), _) | (_, Err(e)) => self.failures.push(format!("{}: error {e}", what())),
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub suites: Vec<SuiteReport>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.suites.iter().all(SuiteReport::ok)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.suites {
            writeln!(
                f,
                "{:<11} {:>6} passed {:>4} failed  {}",
                s.name,
                s.passed,
                s.failures.len(),
                if s.ok() { "ok" } else { "FAIL" }
            )?;
            for msg in &s.failures {
                writeln!(f, "  {msg}")?;
            }
        }
        write!(
            f,
            "{}",
            if self.ok() {
                "all checks passed"
            } else {
                "verification failed"
            }
        )
    }
}

/// Runs the suites selected by `scope` for `n ≤ n_max` and levels `≤ k_max`.
pub fn run(scope: Scope, n_max: usize, k_max: usize) -> Report {
    let mut suites = Vec::new();
    if matches!(scope, Scope::All | Scope::Golden) {
        suites.push(golden());
    }
    if matches!(scope, Scope::All | Scope::Oracle) {
        suites.push(oracle(n_max, k_max));
    }
    if matches!(scope, Scope::All | Scope::Properties) {
        suites.push(properties(n_max, k_max));
    }
    if matches!(scope, Scope::All | Scope::Bijection) {
        suites.push(bijection(n_max, k_max));
    }
    Report { suites }
}

/// Every reference row and total, plus the one-dimension loss at `S_6`, level 7/2.
pub fn golden() -> SuiteReport {
    let mut s = SuiteReport::new("golden");
    for fig in &GOLDEN_DIAGRAMS {
        match check_golden(fig) {
            Ok(bad) if bad.is_empty() => s.passed += 1,
            Ok(bad) => s.failures.extend(bad),
            Err(e) => s.failures.push(format!("{}: {e}", fig.name)),
        }
    }
    let level = HalfLevel::half(3);
    let got =
        build_diagram(Pair::Sym(6), Module::Perm, level).and_then(|d| d.level_square_sum(level));
    s.check_eq(got, Ok(bell(7) - 1u32), || {
        "S6 l=7/2 total vs B(7)-1".into()
    });
    s
}

/// `multiplicity_oracle` against the dimension formulas for every label, both
/// groups and modules, `2 ≤ n ≤ n_max`, levels up to `k_max`; then the pair
/// enumeration against `dim_z` for `n ≤ min(n_max, 6)`, `k ≤ min(k_max, 8)`.
pub fn oracle(n_max: usize, k_max: usize) -> SuiteReport {
    let mut s = SuiteReport::new("oracle");
    for n in 2..=n_max {
        for group in [Group::Sym, Group::Alt] {
            for module in [Module::Perm, Module::Refl] {
                for twice in 0..=2 * k_max {
                    let ctx = match GroupModuleContext::new(
                        group,
                        n,
                        module,
                        HalfLevel::from_twice(twice),
                    ) {
                        Ok(c) => c,
                        Err(e) => {
                            s.failures
                                .push(format!("context {group} {n} {module}: {e}"));
                            continue;
                        }
                    };
                    for label in labels_for(&ctx) {
                        s.check_eq(
                            multiplicity_oracle(&ctx, &label),
                            dim_irreducible(&ctx, &label),
                            || format!("{group}{n} {module} l={} {label}", ctx.level),
                        );
                    }
                }
            }
        }
    }
    for n in 1..=n_max.min(6) {
        for k in 0..=k_max.min(8) {
            for lambda in partitions_of(n) {
                s.check_eq(
                    pair_count_oracle(n, k, &lambda),
                    dim_z(n, k, &lambda),
                    || format!("pairs n={n} k={k} {lambda}"),
                );
            }
        }
    }
    s
}

/// Identities among the formulas, exact.
pub fn properties(n_max: usize, k_max: usize) -> SuiteReport {
    let mut s = SuiteReport::new("properties");

    for k in 0..=12 {
        for t in 0..=k {
            let rhs: Nat = (t..=k).map(|r| binomial(k, r) * stirling2(r, t)).sum();
            s.check(stirling2(k + 1, t + 1) == rhs, || {
                format!("Stirling sum k={k} t={t}")
            });
            if t >= 1 {
                s.check(
                    stirling2(k + 1, t) == stirling2(k, t) * t + stirling2(k, t - 1),
                    || format!("Stirling recurrence k={k} t={t}"),
                );
            }
        }
    }

    for n in 1..=n_max {
        for k in 0..=2 * k_max {
            for lam in partitions_of(n) {
                let a = dim_z(n, k, &lam);
                s.check_eq(dim_z_skew_form(n, k, &lam), a.clone(), || {
                    format!("skew form n={n} k={k} {lam}")
                });
                s.check_eq(dim_z_split_form(n, k, &lam), a.clone(), || {
                    format!("split form n={n} k={k} {lam}")
                });
                if let Ok(Some(v)) = dim_z_small_second_part(n, k, &lam) {
                    s.check_eq(Ok(v), a, || format!("small second part n={n} k={k} {lam}"));
                }
            }
            for mu in partitions_of(n - 1) {
                let a = dim_z_half(n, k, &mu);
                s.check_eq(dim_z_half_skew_form(n, k, &mu), a.clone(), || {
                    format!("half skew n={n} k={k} {mu}")
                });
                s.check_eq(dim_z_half_split_form(n, k, &mu), a, || {
                    format!("half split n={n} k={k} {mu}")
                });
            }
        }
    }

    for n in 2..=n_max {
        let Ok(d) = build::<SymLabel>(n, Module::Perm, HalfLevel::integer(k_max)) else {
            s.failures.push(format!("diagram S:{n}"));
            continue;
        };
        pascal_on_diagram(&mut s, &d);
    }

    for group in [Group::Sym, Group::Alt] {
        for module in [Module::Perm, Module::Refl] {
            for n in 1..=n_max {
                for twice in 0..=2 * k_max {
                    let Ok(ctx) =
                        GroupModuleContext::new(group, n, module, HalfLevel::from_twice(twice))
                    else {
                        continue;
                    };
                    let sq =
                        decompose(&ctx).map(|v| v.into_iter().map(|(_, d)| &d * &d).sum::<Nat>());
                    s.check_eq(sq, dim_z_algebra(&ctx), || {
                        format!("sum of squares {ctx:?}")
                    });
                }
            }
        }
    }

    for n in 1..=n_max {
        for k in 0..=k_max {
            for lam in partitions_of(n) {
                let total: Result<Nat> = (0..=k)
                    .map(|l| dim_qz(n, l, &lam).map(|q| binomial(k, l) * q))
                    .sum();
                s.check_eq(total, dim_z(n, k, &lam), || {
                    format!("binomial inversion n={n} k={k} {lam}")
                });
            }
        }
    }

    for k in 0..=k_max {
        for r in 0..=k {
            for nu in partitions_of(r) {
                let generic = dim_partition_algebra_irr(HalfLevel::integer(k), &nu);
                if r == k {
                    s.check_eq(generic.clone(), Ok(num_syt(&nu)), || {
                        format!("top stable module k={k} {nu}")
                    });
                }
                for n in (2 * k).max(1)..=2 * k + 2 {
                    if n - r < nu.part(0) {
                        continue;
                    }
                    let mut parts = vec![n - r];
                    parts.extend_from_slice(nu.parts());
                    let lam = Partition::new(parts).expect("valid by construction");
                    s.check_eq(dim_z(n, k, &lam), generic.clone(), || {
                        format!("stable range n={n} k={k} {lam}")
                    });
                }
            }
        }
    }

    for k in 0..=6 {
        for r in 0..=k {
            for q in (0..=r).filter(|q| (r - q) % 2 == 0) {
                let direct: Result<Nat> = partitions_of(r)
                    .iter()
                    .filter(|nu| nu.odd_parts() == q)
                    .map(|nu| dim_partition_algebra_irr(HalfLevel::integer(k), nu))
                    .sum();
                s.check_eq(dim_model_block(k, r, q), direct, || {
                    format!("model block k={k} r={r} q={q}")
                });
            }
        }
    }

    for k in 0..=k_max {
        let u = singleton_free_bell(2 * k);
        s.check_eq(quasi_algebra_dim_bell_form(k), Ok(u.clone()), || {
            format!("Bell form k={k}")
        });
        s.check_eq(quasi_algebra_dim_telescoping(k), Ok(u), || {
            format!("telescoping form k={k}")
        });
    }
    s.check(singleton_free_bell(6) == Nat::from(41u32), || {
        "singleton-free B(6)".into()
    });
    s.check(singleton_free_bell(8) == Nat::from(715u32), || {
        "singleton-free B(8)".into()
    });
    s
}

fn pascal_on_diagram(s: &mut SuiteReport, d: &BratteliDiagram<SymLabel>) {
    for t in 1..d.rows().len() {
        let (prev, row) = (&d.rows()[t - 1], &d.rows()[t]);
        for v in &row.vertices {
            let parents: Nat = prev
                .vertices
                .iter()
                .filter(|u| {
                    let (big, small) = if t % 2 == 1 {
                        (&u.label, &v.label)
                    } else {
                        (&v.label, &u.label)
                    };
                    big.restrict().map(|r| r.contains(small)).unwrap_or(false)
                })
                .map(|u| u.count.clone())
                .sum();
            s.check(parents == v.count, || {
                format!("Pascal rule S:{} {} at {}", d.n(), v.label, row.level)
            });
        }
    }
}

/// The five reference paths, then the exhaustive roundtrip and the refinement
/// of pair counts by number of blocks.
pub fn bijection(n_max: usize, k_max: usize) -> SuiteReport {
    let mut s = SuiteReport::new("bijection");
    for (shapes, sp, rows) in GOLDEN_PATHS {
        let vt = VacillatingTableau(shapes.iter().map(|x| x.parse().expect("literal")).collect());
        let want_p: SetPartition = sp.parse().expect("literal");
        let want_t =
            SemistandardTableau::new(rows.iter().map(|r| r.to_vec()).collect()).expect("literal");
        match path_to_pair(&vt, 4) {
            Ok((p, t)) => {
                s.check(p == want_p && t == want_t, || {
                    format!("reference path {shapes:?} gave ({p}, {t})")
                });
                s.check_eq(pair_to_path(&p, &t, 4), Ok(vt.clone()), || {
                    format!("reference pair {sp}")
                });
            }
            Err(e) => s.failures.push(format!("reference path {shapes:?}: {e}")),
        }
    }

    for n in 2..=n_max {
        let d = match build::<SymLabel>(n, Module::Perm, HalfLevel::integer(k_max)) {
            Ok(d) => d,
            Err(e) => {
                s.failures.push(format!("diagram S:{n}: {e}"));
                continue;
            }
        };
        for k in 0..=k_max {
            let row = &d.rows()[2 * k];
            for v in &row.vertices {
                let lambda = &v.label.0;
                let paths = match d.enumerate_paths(row.level, &v.label) {
                    Ok(p) => p,
                    Err(e) => {
                        s.failures.push(format!("paths to {lambda}: {e}"));
                        continue;
                    }
                };
                let mut by_blocks = vec![0u64; k + 1];
                for path in paths {
                    let vt = VacillatingTableau(path.into_iter().map(|l| l.0).collect());
                    match path_to_pair(&vt, n) {
                        Ok((p, t)) => {
                            by_blocks[p.block_count()] += 1;
                            let valid = SemistandardTableau::new(t.rows().to_vec()).is_ok()
                                && &t.shape() == lambda;
                            s.check(valid, || format!("pair tableau {t} for {lambda}"));
                            s.check_eq(pair_to_path(&p, &t, n), Ok(vt), || {
                                format!("roundtrip n={n} {p} {t}")
                            });
                        }
                        Err(e) => s.failures.push(format!("path_to_pair n={n} {lambda}: {e}")),
                    }
                }
                if n <= 5 {
                    for (t, &c) in by_blocks.iter().enumerate() {
                        // more blocks than boxes leaves no room for the maxima
                        let want = if t > n {
                            Ok(Nat::from(0u32))
                        } else {
                            kostka_hook_type(lambda, n, t).map(|kh| stirling2(k, t) * kh)
                        };
                        s.check_eq(Ok(Nat::from(c)), want, || {
                            format!("pairs with {t} blocks, n={n} k={k} {lambda}")
                        });
                    }
                }
            }
        }
    }
    s
}
