//! Ground truth by exhaustive enumeration of labeled trees.
//!
//! Every labeled tree on `n` vertices is decoded from one of the `n^(n-2)`
//! Prüfer sequences. Diameter and leaf count are isomorphism invariants, so
//! extrema over labeled trees equal extrema over unlabeled ones.
//!
//! The enumeration computes diameters by repeatedly stripping leaves
//! (a tree with `r` stripping rounds has diameter `2r` or `2r + 1`), which
//! shares no code with the BFS-based routines in [`crate::tree`].

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::formulas::{
    feasible_leaf_diameter, feasible_order_leaves, max_diameter, max_leaves, min_diameter,
    min_leaves,
};
use crate::tree::Tree;
use crate::Vertex;

/// Largest order enumerated unless the caller raises the cap.
pub const DEFAULT_CAP: usize = 9;
/// Largest cap accepted at all (`11^9` sequences).
pub const HARD_CAP: usize = 11;

const MAX_N: usize = HARD_CAP + 1;

// Linear-time Prüfer decoding into `edges`; `seq` entries must be < n.
fn decode_into(n: usize, seq: &[usize], edges: &mut Vec<(Vertex, Vertex)>) {
    edges.clear();
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut ptr = degree.iter().position(|&d| d == 1).unwrap_or(0);
    let mut leaf = ptr;
    for &v in seq {
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
}

/// The labeled tree with Prüfer sequence `seq` (length `n - 2`).
pub fn prufer_decode(n: usize, seq: &[usize]) -> Result<Tree> {
    if n < 2 {
        return Err(Error::DegenerateOrder);
    }
    if seq.len() != n - 2 {
        return Err(Error::Infeasible(format!(
            "a Prüfer sequence for order {n} has length {}, got {}",
            n - 2,
            seq.len()
        )));
    }
    if let Some(&entry) = seq.iter().find(|&&x| x >= n) {
        return Err(Error::EntryOutOfRange { entry, n });
    }
    let mut edges = Vec::with_capacity(n - 1);
    decode_into(n, seq, &mut edges);
    Tree::new(n, &edges)
}

/// Uniformly random labeled tree of order `n`.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Tree {
    match n {
        0 | 1 => Tree::trivial(),
        _ => {
            let seq: Vec<_> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            prufer_decode(n, &seq).expect("random sequence is in range")
        }
    }
}

/// Base-`n` digits of `index`, most significant first.
fn sequence_at(n: usize, mut index: u64) -> Vec<usize> {
    let mut seq = vec![0; n.saturating_sub(2)];
    for slot in seq.iter_mut().rev() {
        *slot = (index % n as u64) as usize;
        index /= n as u64;
    }
    seq
}

/// Diameter and leaf count by leaf stripping on a decoded edge list.
fn stripped_stats(n: usize, edges: &[(Vertex, Vertex)]) -> (usize, usize) {
    let mut adj = [[0u8; MAX_N]; MAX_N];
    let mut deg = [0usize; MAX_N];
    for &(u, v) in edges {
        adj[u][deg[u]] = v as u8;
        deg[u] += 1;
        adj[v][deg[v]] = u as u8;
        deg[v] += 1;
    }
    let full = deg;
    let leaves = deg[..n].iter().filter(|&&d| d == 1).count();
    let mut removed = [false; MAX_N];
    let mut remaining = n;
    let mut rounds = 0;
    let mut layer = [0usize; MAX_N];
    while remaining > 2 {
        let mut count = 0;
        for v in 0..n {
            if !removed[v] && deg[v] == 1 {
                layer[count] = v;
                count += 1;
            }
        }
        for &v in &layer[..count] {
            removed[v] = true;
            for &u in &adj[v][..full[v]] {
                let u = u as usize;
                if !removed[u] {
                    deg[u] -= 1;
                }
            }
        }
        remaining -= count;
        rounds += 1;
    }
    (2 * rounds + remaining - 1, leaves)
}

/// Smallest and largest value seen for one key, each with the Prüfer
/// sequence of a tree attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extremes {
    pub min: usize,
    pub max: usize,
    pub min_witness: Vec<usize>,
    pub max_witness: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Agg {
    min: usize,
    min_at: u64,
    max: usize,
    max_at: u64,
}

impl Agg {
    fn point(value: usize, at: u64) -> Self {
        Agg {
            min: value,
            min_at: at,
            max: value,
            max_at: at,
        }
    }

    // Ties keep the smaller sequence index, so merging is order-free.
    fn merge(self, o: Agg) -> Agg {
        let (min, min_at) = (self.min, self.min_at).min((o.min, o.min_at));
        let (max, max_at) = match self.max.cmp(&o.max) {
            std::cmp::Ordering::Greater => (self.max, self.max_at),
            std::cmp::Ordering::Less => (o.max, o.max_at),
            std::cmp::Ordering::Equal => (self.max, self.max_at.min(o.max_at)),
        };
        Agg {
            min,
            min_at,
            max,
            max_at,
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Partial {
    by_diameter: [Option<Agg>; MAX_N],
    by_leaves: [Option<Agg>; MAX_N],
}

fn fold_slot(slot: &mut Option<Agg>, value: Agg) {
    *slot = Some(match *slot {
        Some(cur) => cur.merge(value),
        None => value,
    });
}

impl Partial {
    fn empty() -> Self {
        Partial {
            by_diameter: [None; MAX_N],
            by_leaves: [None; MAX_N],
        }
    }

    fn merge(mut self, other: Partial) -> Partial {
        for (slot, o) in self.by_diameter.iter_mut().zip(other.by_diameter) {
            if let Some(o) = o {
                fold_slot(slot, o);
            }
        }
        for (slot, o) in self.by_leaves.iter_mut().zip(other.by_leaves) {
            if let Some(o) = o {
                fold_slot(slot, o);
            }
        }
        self
    }
}

/// Exact extrema over all labeled trees of one order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalTable {
    pub n: usize,
    /// Diameter `d` to the range of leaf counts.
    pub by_diameter: BTreeMap<usize, Extremes>,
    /// Leaf count `f` to the range of diameters. Only `f <= n - 1` is
    /// recorded, which leaves `K_2` out.
    pub by_leaves: BTreeMap<usize, Extremes>,
    /// Number of trees enumerated.
    pub trees: u64,
}

impl ExtremalTable {
    /// The tree behind a witness sequence.
    pub fn witness_tree(&self, seq: &[usize]) -> Tree {
        prufer_decode(self.n, seq).expect("witness sequences come from the enumeration")
    }
}

/// [`build_table_capped`] with [`DEFAULT_CAP`].
pub fn build_table(n: usize) -> Result<ExtremalTable> {
    build_table_capped(n, DEFAULT_CAP)
}

/// Enumerates all `n^(n-2)` labeled trees of order `n` on the current rayon
/// pool, folding per-block partial tables.
pub fn build_table_capped(n: usize, cap: usize) -> Result<ExtremalTable> {
    if cap > HARD_CAP {
        return Err(Error::CapExceeded { n, cap: HARD_CAP });
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    if n < 2 {
        return Err(Error::DegenerateOrder);
    }
    let len = n - 2;
    let total = (n as u64).pow(len as u32);
    // Blocks fix the leading digits; each is walked odometer-style.
    let prefix = len.min(2);
    let block = (n as u64).pow((len - prefix) as u32);
    let blocks = total / block;

    let partial = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let mut part = Partial::empty();
            let start = b * block;
            let mut seq = sequence_at(n, start);
            let mut edges = Vec::with_capacity(n - 1);
            for index in start..start + block {
                decode_into(n, &seq, &mut edges);
                let (diameter, leaves) = stripped_stats(n, &edges);
                fold_slot(&mut part.by_diameter[diameter], Agg::point(leaves, index));
                if leaves < n {
                    fold_slot(&mut part.by_leaves[leaves], Agg::point(diameter, index));
                }
                for digit in seq.iter_mut().rev() {
                    *digit += 1;
                    if *digit < n {
                        break;
                    }
                    *digit = 0;
                }
            }
            part
        })
        .reduce(Partial::empty, Partial::merge);

    let collect = |slots: &[Option<Agg>]| {
        slots
            .iter()
            .enumerate()
            .filter_map(|(key, a)| {
                a.map(|a| {
                    (
                        key,
                        Extremes {
                            min: a.min,
                            max: a.max,
                            min_witness: sequence_at(n, a.min_at),
                            max_witness: sequence_at(n, a.max_at),
                        },
                    )
                })
            })
            .collect()
    };
    Ok(ExtremalTable {
        n,
        by_diameter: collect(&partial.by_diameter),
        by_leaves: collect(&partial.by_leaves),
        trees: total,
    })
}

pub type FormulaFn = fn(usize, usize) -> Result<usize>;

/// The closed forms a sweep is checked against. Tests swap in faulty
/// versions to exercise the harness.
#[derive(Debug, Clone, Copy)]
pub struct Formulas {
    pub min_leaves: FormulaFn,
    pub max_leaves: FormulaFn,
    pub min_diameter: FormulaFn,
    pub max_diameter: FormulaFn,
}

impl Default for Formulas {
    fn default() -> Self {
        Formulas {
            min_leaves: min_leaves::<usize>,
            max_leaves: max_leaves::<usize>,
            min_diameter: min_diameter::<usize>,
            max_diameter: max_diameter::<usize>,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    MinLeaves,
    MaxLeaves,
    MinDiameter,
    MaxDiameter,
    /// A key the formulas call feasible is missing, or vice versa. The
    /// discrepancy then holds 1 for "realizable" and 0 otherwise.
    Realizable,
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quantity::MinLeaves => "min_leaves",
            Quantity::MaxLeaves => "max_leaves",
            Quantity::MinDiameter => "min_diameter",
            Quantity::MaxDiameter => "max_diameter",
            Quantity::Realizable => "realizable",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub n: usize,
    /// The diameter (leaf quantities) or leaf count (diameter quantities).
    pub key: usize,
    pub quantity: Quantity,
    /// Closed-form value, `None` when the formula rejected the input.
    pub formula: Option<usize>,
    /// Enumerated value, `None` when no tree realizes the key.
    pub enumerated: Option<usize>,
    /// An enumerated tree attaining `enumerated`.
    pub witness: Option<Tree>,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: Option<usize>| v.map_or_else(|| "none".to_string(), |v| v.to_string());
        write!(
            f,
            "n={} key={} {}: formula={} enumerated={}",
            self.n,
            self.key,
            self.quantity,
            show(self.formula),
            show(self.enumerated)
        )?;
        if let Some(t) = &self.witness {
            write!(f, "\n  witness: {}", t.to_dot().trim_end())?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerifyReport {
    pub max_n: usize,
    /// Number of `(n, key)` cases compared.
    pub cases: usize,
    pub trees: u64,
    pub discrepancies: Vec<Discrepancy>,
}

impl VerifyReport {
    pub fn is_clean(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "checked {} cases over {} labeled trees (n = 2..={})",
            self.cases, self.trees, self.max_n
        )?;
        for d in &self.discrepancies {
            writeln!(f, "MISMATCH {d}")?;
        }
        if self.is_clean() {
            writeln!(f, "all formulas match")
        } else {
            writeln!(f, "{} discrepancies", self.discrepancies.len())
        }
    }
}

/// Compares the real closed forms against enumeration for every order up
/// to `max_n`.
pub fn verify_sweep(max_n: usize) -> Result<VerifyReport> {
    verify_sweep_with(max_n, DEFAULT_CAP, &Formulas::default())
}

pub fn verify_sweep_with(max_n: usize, cap: usize, formulas: &Formulas) -> Result<VerifyReport> {
    if max_n < 2 {
        return Err(Error::DegenerateOrder);
    }
    let mut report = VerifyReport {
        max_n,
        ..Default::default()
    };
    for n in 2..=max_n {
        let table = build_table_capped(n, cap)?;
        report.trees += table.trees;
        compare(
            &mut report,
            &table,
            &table.by_diameter,
            (1..n, |d| feasible_leaf_diameter(n, d)),
            [
                (Quantity::MinLeaves, formulas.min_leaves),
                (Quantity::MaxLeaves, formulas.max_leaves),
            ],
        );
        compare(
            &mut report,
            &table,
            &table.by_leaves,
            (2..n, |f| feasible_order_leaves(n, f)),
            [
                (Quantity::MinDiameter, formulas.min_diameter),
                (Quantity::MaxDiameter, formulas.max_diameter),
            ],
        );
    }
    Ok(report)
}

fn compare(
    report: &mut VerifyReport,
    table: &ExtremalTable,
    entries: &BTreeMap<usize, Extremes>,
    (keys, feasible): (std::ops::Range<usize>, impl Fn(usize) -> bool),
    [low, high]: [(Quantity, FormulaFn); 2],
) {
    let n = table.n;
    let realizable = |key: usize, feasible: bool, entry: Option<&Extremes>| Discrepancy {
        n,
        key,
        quantity: Quantity::Realizable,
        formula: Some(usize::from(feasible)),
        enumerated: Some(usize::from(entry.is_some())),
        witness: entry.map(|e| table.witness_tree(&e.min_witness)),
    };
    for key in keys.clone() {
        report.cases += 1;
        let feasible = feasible(key);
        match (feasible, entries.get(&key)) {
            (true, Some(e)) => {
                for ((quantity, formula), value, seq) in
                    [(low, e.min, &e.min_witness), (high, e.max, &e.max_witness)]
                {
                    let got = formula(n, key).ok();
                    if got != Some(value) {
                        report.discrepancies.push(Discrepancy {
                            n,
                            key,
                            quantity,
                            formula: got,
                            enumerated: Some(value),
                            witness: Some(table.witness_tree(seq)),
                        });
                    }
                }
            }
            (false, None) => {}
            (_, entry) => report.discrepancies.push(realizable(key, feasible, entry)),
        }
    }
    for (&key, e) in entries.range(..keys.start).chain(entries.range(keys.end..)) {
        report.discrepancies.push(realizable(key, false, Some(e)));
    }
}
