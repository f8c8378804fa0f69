//! Restriction–induction Bratteli diagrams for `(S_n, S_{n-1})` and
//! `(A_n, A_{n-1})`.
//!
//! Rows alternate between labels of the big group (integer levels) and of the
//! subgroup (half levels). Vertices and edges always come from the
//! permutation-module diagram; a reflection-module diagram reuses that vertex
//! set and only changes the counts, so zero-count vertices survive.

use std::collections::HashMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::json;

use crate::arith::Nat;
use crate::branch::{AltLabel, BranchingLabel, SymLabel};
use crate::dims::{Group, HalfLevel, Module};
use crate::error::{Error, Result};

/// Which group/subgroup pair a diagram is built for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pair {
    Sym(usize),
    Alt(usize),
}

impl Pair {
    pub fn n(self) -> usize {
        match self {
            Pair::Sym(n) | Pair::Alt(n) => n,
        }
    }

    pub fn group(self) -> Group {
        match self {
            Pair::Sym(_) => Group::Sym,
            Pair::Alt(_) => Group::Alt,
        }
    }

    pub fn validate(self) -> Result<()> {
        match self {
            Pair::Sym(n) if n < 2 => Err(Error::InvalidPair(format!("S:{n} needs n >= 2"))),
            Pair::Alt(n) if n < 4 => Err(Error::InvalidPair(format!("A:{n} needs n >= 4"))),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.group(), self.n())
    }
}

impl FromStr for Pair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (g, n) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("pair must look like S:4 or A:6, got {s:?}")))?;
        let n: usize = n
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad degree in pair {s:?}")))?;
        match g.trim() {
            "S" | "s" => Ok(Pair::Sym(n)),
            "A" | "a" => Ok(Pair::Alt(n)),
            other => Err(Error::Parse(format!(
                "unknown group {other:?} in pair {s:?}"
            ))),
        }
    }
}

/// Export formats understood by [`BratteliDiagram::export`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
    Text,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            "text" => Ok(ExportFormat::Text),
            _ => Err(Error::UnknownFormat(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex<L> {
    pub label: L,
    pub count: Nat,
}

/// One row of the diagram. `edges` index into the previous row and this row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row<L> {
    pub level: HalfLevel,
    pub vertices: Vec<Vertex<L>>,
    pub edges: Vec<(usize, usize)>,
}

impl<L: BranchingLabel> Row<L> {
    pub fn position(&self, label: &L) -> Option<usize> {
        self.vertices.iter().position(|v| &v.label == label)
    }

    pub fn square_sum(&self) -> Nat {
        self.vertices.iter().map(|v| &v.count * &v.count).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BratteliDiagram<L> {
    n: usize,
    module: Module,
    rows: Vec<Row<L>>,
}

/// Builds the diagram for labels of type `L` (degree `n`) up to `max_level`.
pub fn build<L: BranchingLabel>(
    n: usize,
    module: Module,
    max_level: HalfLevel,
) -> Result<BratteliDiagram<L>> {
    let root = Row {
        level: HalfLevel::from_twice(0),
        vertices: vec![Vertex {
            label: L::trivial(n),
            count: Nat::from(1u32),
        }],
        edges: Vec::new(),
    };
    let mut rows = vec![root];
    for twice in 1..=max_level.twice() {
        let prev = rows.last().expect("root row present");
        let degree = if twice % 2 == 0 { n } else { n - 1 };
        let mut edges = Vec::new();
        let mut labels = Vec::new();
        for candidate in L::labels_of(degree) {
            let (above, below) = if twice % 2 == 0 {
                (candidate.restrict()?, None)
            } else {
                (Vec::new(), Some(&candidate))
            };
            let mut parents = Vec::new();
            for (i, v) in prev.vertices.iter().enumerate() {
                let hits = match below {
                    // half level: candidate is in the restriction of v
                    Some(c) => v.label.restrict()?.iter().filter(|r| *r == c).count(),
                    // integer level: v is in the restriction of candidate
                    None => above.iter().filter(|r| **r == v.label).count(),
                };
                if hits > 1 {
                    return Err(Error::InvalidPair(format!(
                        "edge {} -> {} has multiplicity {hits}",
                        v.label, candidate
                    )));
                }
                if hits == 1 {
                    parents.push(i);
                }
            }
            if !parents.is_empty() {
                let j = labels.len();
                edges.extend(parents.iter().map(|&i| (i, j)));
                labels.push((candidate, parents));
            }
        }

        let counts: Vec<Nat> = match module {
            Module::Perm => labels
                .iter()
                .map(|(_, ps)| ps.iter().map(|&i| &prev.vertices[i].count).sum())
                .collect(),
            Module::Refl => {
                let mut out = Vec::with_capacity(labels.len());
                for (label, ps) in &labels {
                    let mut c = BigInt::zero();
                    for &i in ps {
                        c += BigInt::from(prev.vertices[i].count.clone());
                    }
                    if twice % 2 == 0 {
                        let back = &rows[twice - 2];
                        if let Some(pos) = back.position(label) {
                            c -= BigInt::from(back.vertices[pos].count.clone());
                        }
                    }
                    if c.is_negative() {
                        return Err(Error::NegativeCount(format!(
                            "{label} at level {} evaluated to {c}",
                            HalfLevel::from_twice(twice)
                        )));
                    }
                    out.push(c.magnitude().clone());
                }
                out
            }
        };
        let vertices = labels
            .into_iter()
            .zip(counts)
            .map(|((label, _), count)| Vertex { label, count })
            .collect();
        rows.push(Row {
            level: HalfLevel::from_twice(twice),
            vertices,
            edges,
        });
    }
    Ok(BratteliDiagram { n, module, rows })
}

impl<L: BranchingLabel> BratteliDiagram<L> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn module(&self) -> Module {
        self.module
    }

    pub fn max_level(&self) -> HalfLevel {
        self.rows.last().expect("root row present").level
    }

    pub fn rows(&self) -> &[Row<L>] {
        &self.rows
    }

    pub fn row(&self, level: HalfLevel) -> Result<&Row<L>> {
        self.rows
            .get(level.twice())
            .ok_or_else(|| Error::LevelOutOfRange {
                level: level.to_string(),
                max: self.max_level().to_string(),
            })
    }

    /// `Σ count²` over the row at `level`.
    pub fn level_square_sum(&self, level: HalfLevel) -> Result<Nat> {
        Ok(self.row(level)?.square_sum())
    }

    pub fn count(&self, level: HalfLevel, label: &L) -> Result<Nat> {
        let row = self.row(level)?;
        row.position(label)
            .map(|i| row.vertices[i].count.clone())
            .ok_or_else(|| Error::VertexNotFound(format!("{label} at level {level}")))
    }

    /// Every root-to-target path, as the sequence of labels at levels
    /// `0, 1/2, ..., level`. Paths come out in lexicographic row order.
    pub fn enumerate_paths(&self, level: HalfLevel, target: &L) -> Result<Vec<Vec<L>>> {
        let row = self.row(level)?;
        let end = row
            .position(target)
            .ok_or_else(|| Error::VertexNotFound(format!("{target} at level {level}")))?;
        let mut parents: Vec<HashMap<usize, Vec<usize>>> = Vec::with_capacity(self.rows.len());
        for r in &self.rows {
            let mut map: HashMap<usize, Vec<usize>> = HashMap::new();
            for &(i, j) in &r.edges {
                map.entry(j).or_default().push(i);
            }
            parents.push(map);
        }
        let mut out = Vec::new();
        let mut stack = vec![end];
        self.walk_back(level.twice(), &parents, &mut stack, &mut out);
        out.sort();
        Ok(out)
    }

    fn walk_back(
        &self,
        twice: usize,
        parents: &[HashMap<usize, Vec<usize>>],
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<L>>,
    ) {
        if twice == 0 {
            let path = stack
                .iter()
                .rev()
                .enumerate()
                .map(|(t, &i)| self.rows[t].vertices[i].label.clone())
                .collect();
            out.push(path);
            return;
        }
        let here = *stack.last().expect("stack holds the current vertex");
        for &p in parents[twice].get(&here).map(Vec::as_slice).unwrap_or(&[]) {
            stack.push(p);
            self.walk_back(twice - 1, parents, stack, out);
            stack.pop();
        }
    }

    pub fn export(&self, pair: Pair, format: ExportFormat) -> String {
        match format {
            ExportFormat::Text => self.to_text(),
            ExportFormat::Json => self.to_json(pair),
            ExportFormat::Dot => self.to_dot(pair),
        }
    }

    fn to_text(&self) -> String {
        let width = self
            .rows
            .iter()
            .map(|r| format!("l={}", r.level).len())
            .max()
            .unwrap_or(0)
            + 2;
        let mut out = String::new();
        for row in &self.rows {
            let head = format!("l={}", row.level);
            let cells: Vec<String> = row
                .vertices
                .iter()
                .map(|v| format!("{}:{}", bracketed(&v.label), v.count))
                .collect();
            let _ = writeln!(
                out,
                "{head:<width$}{} | {}",
                cells.join(" "),
                row.square_sum()
            );
        }
        out
    }

    fn to_json(&self, pair: Pair) -> String {
        let levels: Vec<_> = self
            .rows
            .iter()
            .enumerate()
            .map(|(t, row)| {
                let vertices: Vec<_> = row
                    .vertices
                    .iter()
                    .map(|v| json!({"label": v.label.to_string(), "count": v.count.to_string()}))
                    .collect();
                let edges: Vec<_> = row
                    .edges
                    .iter()
                    .map(|&(i, j)| {
                        json!({
                            "from": self.rows[t - 1].vertices[i].label.to_string(),
                            "to": row.vertices[j].label.to_string(),
                        })
                    })
                    .collect();
                json!({
                    "level": row.level.to_string(),
                    "vertices": vertices,
                    "edges": edges,
                    "squareSum": row.square_sum().to_string(),
                })
            })
            .collect();
        let doc = json!({
            "pair": pair.to_string(),
            "module": self.module.to_string(),
            "levels": levels,
        });
        serde_json::to_string_pretty(&doc).expect("json values always serialize")
    }

    fn to_dot(&self, pair: Pair) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{pair} {}\" {{", self.module);
        let _ = writeln!(out, "  rankdir=TB;");
        for (t, row) in self.rows.iter().enumerate() {
            let _ = writeln!(out, "  subgraph cluster_{t} {{");
            let _ = writeln!(out, "    label=\"l={}\";", row.level);
            for (i, v) in row.vertices.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "    v{t}_{i} [label=\"{}\\n{}\"];",
                    bracketed(&v.label),
                    v.count
                );
            }
            let _ = writeln!(out, "  }}");
        }
        for (t, row) in self.rows.iter().enumerate().skip(1) {
            for &(i, j) in &row.edges {
                let _ = writeln!(out, "  v{}_{i} -> v{t}_{j};", t - 1);
            }
        }
        out.push_str("}\n");
        out
    }
}

/// `[3,1]`, `[2,1]+`, `[2,1]-`.
fn bracketed<L: fmt::Display>(label: &L) -> String {
    let s = label.to_string();
    match s
        .strip_suffix('+')
        .map(|h| (h, '+'))
        .or_else(|| s.strip_suffix('-').map(|h| (h, '-')))
    {
        Some((head, sign)) => format!("[{head}]{sign}"),
        None => format!("[{s}]"),
    }
}

/// A diagram for either pair, for callers that pick the pair at run time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyDiagram {
    Sym(BratteliDiagram<SymLabel>),
    Alt(BratteliDiagram<AltLabel>),
}

pub fn build_diagram(pair: Pair, module: Module, max_level: HalfLevel) -> Result<AnyDiagram> {
    pair.validate()?;
    Ok(match pair {
        Pair::Sym(n) => AnyDiagram::Sym(build(n, module, max_level)?),
        Pair::Alt(n) => AnyDiagram::Alt(build(n, module, max_level)?),
    })
}

impl AnyDiagram {
    pub fn pair(&self) -> Pair {
        match self {
            AnyDiagram::Sym(d) => Pair::Sym(d.n()),
            AnyDiagram::Alt(d) => Pair::Alt(d.n()),
        }
    }

    pub fn level_square_sum(&self, level: HalfLevel) -> Result<Nat> {
        match self {
            AnyDiagram::Sym(d) => d.level_square_sum(level),
            AnyDiagram::Alt(d) => d.level_square_sum(level),
        }
    }

    /// `(label, count)` pairs of a row, labels rendered as text.
    pub fn row_counts(&self, level: HalfLevel) -> Result<Vec<(String, Nat)>> {
        fn collect<L: BranchingLabel>(
            d: &BratteliDiagram<L>,
            level: HalfLevel,
        ) -> Result<Vec<(String, Nat)>> {
            Ok(d.row(level)?
                .vertices
                .iter()
                .map(|v| (v.label.to_string(), v.count.clone()))
                .collect())
        }
        match self {
            AnyDiagram::Sym(d) => collect(d, level),
            AnyDiagram::Alt(d) => collect(d, level),
        }
    }

    pub fn max_level(&self) -> HalfLevel {
        match self {
            AnyDiagram::Sym(d) => d.max_level(),
            AnyDiagram::Alt(d) => d.max_level(),
        }
    }

    pub fn export(&self, format: ExportFormat) -> String {
        match self {
            AnyDiagram::Sym(d) => d.export(self.pair(), format),
            AnyDiagram::Alt(d) => d.export(self.pair(), format),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dims::{dim_irreducible, dim_z_algebra, GroupModuleContext, IrrepLabel};
    use crate::young::Partition;

    fn lvl(s: &str) -> HalfLevel {
        s.parse().unwrap()
    }

    fn counts(d: &AnyDiagram, level: &str) -> Vec<u64> {
        d.row_counts(lvl(level))
            .unwrap()
            .into_iter()
            .map(|(_, c)| u64::try_from(c).unwrap())
            .collect()
    }

    fn sym(s: &str) -> SymLabel {
        SymLabel(s.parse().unwrap())
    }

    #[test]
    fn spec_rows() {
        let d = build_diagram(Pair::Sym(4), Module::Perm, lvl("3")).unwrap();
        assert_eq!(counts(&d, "3"), vec![5, 10, 5, 6, 1]);
        assert_eq!(d.level_square_sum(lvl("3")).unwrap(), Nat::from(187u32));
        let d = build_diagram(Pair::Alt(4), Module::Perm, lvl("2")).unwrap();
        assert_eq!(counts(&d, "2"), vec![2, 4, 1, 1]);
        let d = build_diagram(Pair::Sym(6), Module::Refl, lvl("4")).unwrap();
        assert_eq!(counts(&d, "4"), vec![4, 11, 13, 13, 5, 12, 6, 2, 3, 1]);
        assert_eq!(counts(&d, "1"), vec![0, 1]);
        let d = build_diagram(Pair::Alt(6), Module::Perm, lvl("4")).unwrap();
        assert_eq!(d.level_square_sum(lvl("4")).unwrap(), Nat::from(5427u32));
    }

    #[test]
    fn root_rows() {
        for pair in [Pair::Sym(2), Pair::Sym(5), Pair::Alt(4), Pair::Alt(7)] {
            let d = build_diagram(pair, Module::Perm, lvl("1/2")).unwrap();
            let n = pair.n();
            let r0 = d.row_counts(lvl("0")).unwrap();
            let r1 = d.row_counts(lvl("1/2")).unwrap();
            assert_eq!(r0, vec![(Partition::row(n).to_string(), Nat::from(1u32))]);
            assert_eq!(
                r1,
                vec![(Partition::row(n - 1).to_string(), Nat::from(1u32))]
            );
            assert_eq!(d.level_square_sum(lvl("0")).unwrap(), Nat::from(1u32));
        }
    }

    #[test]
    fn bad_pairs_and_levels() {
        assert!(matches!(
            build_diagram(Pair::Sym(1), Module::Perm, lvl("2")),
            Err(Error::InvalidPair(_))
        ));
        assert!(matches!(
            build_diagram(Pair::Alt(3), Module::Perm, lvl("2")),
            Err(Error::InvalidPair(_))
        ));
        let d = build_diagram(Pair::Sym(4), Module::Perm, lvl("1")).unwrap();
        assert!(matches!(
            d.level_square_sum(lvl("3/2")),
            Err(Error::LevelOutOfRange { .. })
        ));
        assert!("X:4".parse::<Pair>().is_err());
        assert_eq!("A:6".parse::<Pair>().unwrap(), Pair::Alt(6));
        assert!(matches!(
            "svg".parse::<ExportFormat>(),
            Err(Error::UnknownFormat(_))
        ));
    }

    #[test]
    fn counts_match_dimension_formulas() {
        for n in 4..=6 {
            for pair in [Pair::Sym(n), Pair::Alt(n)] {
                for module in [Module::Perm, Module::Refl] {
                    let d = build_diagram(pair, module, lvl("4")).unwrap();
                    for twice in 0..=8 {
                        let level = HalfLevel::from_twice(twice);
                        let ctx = GroupModuleContext::new(pair.group(), n, module, level).unwrap();
                        for (label, count) in d.row_counts(level).unwrap() {
                            let l = IrrepLabel::parse(pair.group(), &label).unwrap();
                            assert_eq!(
                                dim_irreducible(&ctx, &l).unwrap(),
                                count,
                                "{pair} {module} l={level} {label}"
                            );
                        }
                        assert_eq!(
                            d.level_square_sum(level).unwrap(),
                            dim_z_algebra(&ctx).unwrap(),
                            "{pair} {module} l={level}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn perm_half_levels_are_pascal_sums() {
        let AnyDiagram::Sym(d) = build_diagram(Pair::Sym(5), Module::Perm, lvl("4")).unwrap()
        else {
            unreachable!()
        };
        for t in (1..d.rows().len()).step_by(2) {
            let (prev, row) = (&d.rows()[t - 1], &d.rows()[t]);
            for v in &row.vertices {
                let s: Nat = prev
                    .vertices
                    .iter()
                    .filter(|u| u.label.restrict().unwrap().contains(&v.label))
                    .map(|u| u.count.clone())
                    .sum();
                assert_eq!(s, v.count);
            }
        }
    }

    #[test]
    fn path_counts() {
        let AnyDiagram::Sym(d) = build_diagram(Pair::Sym(4), Module::Perm, lvl("3")).unwrap()
        else {
            unreachable!()
        };
        assert_eq!(d.enumerate_paths(lvl("3"), &sym("2,2")).unwrap().len(), 5);
        assert_eq!(
            d.enumerate_paths(lvl("3"), &sym("1,1,1,1")).unwrap().len(),
            1
        );
        assert_eq!(
            d.enumerate_paths(lvl("0"), &sym("4")).unwrap(),
            vec![vec![sym("4")]]
        );
        assert!(matches!(
            d.enumerate_paths(lvl("1"), &sym("2,2")),
            Err(Error::VertexNotFound(_))
        ));
        for n in 2..=5 {
            for pair in [Pair::Sym(n), Pair::Alt(n)] {
                let Ok(any) = build_diagram(pair, Module::Perm, lvl("3")) else {
                    continue;
                };
                match any {
                    AnyDiagram::Sym(d) => check_path_counts(&d),
                    AnyDiagram::Alt(d) => check_path_counts(&d),
                }
            }
        }
    }

    fn check_path_counts<L: BranchingLabel>(d: &BratteliDiagram<L>) {
        for row in d.rows() {
            for v in &row.vertices {
                let paths = d.enumerate_paths(row.level, &v.label).unwrap();
                assert_eq!(
                    Nat::from(paths.len()),
                    v.count,
                    "{} at {}",
                    v.label,
                    row.level
                );
            }
        }
    }

    #[test]
    fn text_export() {
        let d = build_diagram(Pair::Sym(4), Module::Perm, lvl("2")).unwrap();
        let text = d.export(ExportFormat::Text);
        let last = text.lines().last().unwrap();
        assert!(last.starts_with("l=2"));
        assert!(
            last.ends_with("[4]:2 [3,1]:3 [2,2]:1 [2,1,1]:1 | 15"),
            "{last}"
        );
        let d = build_diagram(Pair::Alt(4), Module::Perm, lvl("3/2")).unwrap();
        let text = d.export(ExportFormat::Text);
        assert!(
            text.lines()
                .last()
                .unwrap()
                .ends_with("[3]:2 [2,1]+:1 [2,1]-:1 | 6"),
            "{text}"
        );
    }

    #[test]
    fn json_export() {
        let d = build_diagram(Pair::Sym(4), Module::Perm, lvl("0")).unwrap();
        let v: serde_json::Value = serde_json::from_str(&d.export(ExportFormat::Json)).unwrap();
        assert_eq!(v["pair"], "S:4");
        assert_eq!(v["module"], "perm");
        assert_eq!(v["levels"].as_array().unwrap().len(), 1);
        assert_eq!(v["levels"][0]["vertices"][0]["label"], "4");
        assert_eq!(v["levels"][0]["vertices"][0]["count"], "1");

        let d = build_diagram(Pair::Sym(4), Module::Perm, lvl("3/2")).unwrap();
        let v: serde_json::Value = serde_json::from_str(&d.export(ExportFormat::Json)).unwrap();
        let row = &v["levels"][3];
        assert_eq!(row["level"], "3/2");
        assert_eq!(row["squareSum"], "5");
        assert!(row["edges"]
            .as_array()
            .unwrap()
            .contains(&serde_json::json!({"from": "3,1", "to": "2,1"})));
    }

    #[test]
    fn dot_export_structure() {
        let AnyDiagram::Sym(d) = build_diagram(Pair::Sym(5), Module::Perm, lvl("3")).unwrap()
        else {
            unreachable!()
        };
        let dot = d.export(Pair::Sym(5), ExportFormat::Dot);
        let nodes = dot.lines().filter(|l| l.contains("[label=")).count();
        let edges = dot.lines().filter(|l| l.contains("->")).count();
        let clusters = dot
            .lines()
            .filter(|l| l.contains("subgraph cluster_"))
            .count();
        assert_eq!(
            nodes,
            d.rows().iter().map(|r| r.vertices.len()).sum::<usize>()
        );
        assert_eq!(edges, d.rows().iter().map(|r| r.edges.len()).sum::<usize>());
        assert_eq!(clusters, d.rows().len());
        assert_eq!(dot, d.export(Pair::Sym(5), ExportFormat::Dot));
    }
}
