//! Betti tables and projective dimension.
//!
//! The primary route reads the tables off the F-admissible symbols. Three
//! cross-checks recompute them without the symbol list of the whole forest:
//! the recursion on leaf deletions, the scan over induced subforests, and
//! the block census of maximal symbols for the projective dimension.

use std::collections::{BTreeMap, HashMap};
use std::fmt::{self, Write as _};

use serde_json::{json, Value};
use thiserror::Error;

use crate::forest::{generator_sequence, rank_vertices, Forest, GeneratorSequence};
use crate::monomial::VertexSet;
use crate::symbols::{
    block_decomposition, enumerate_f_admissible_procedure, is_f_admissible, Symbol, SymbolError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BettiError {
    #[error("two symbols of length {length} share the multidegree {multidegree:?}")]
    DuplicateMultidegree {
        length: usize,
        multidegree: VertexSet,
    },
    #[error("symbol {0:?} is not a maximal F-admissible symbol")]
    NotMaximal(Symbol),
    #[error("{vertices} vertices exceed the subset-scan cap of {cap}")]
    CapExceeded { vertices: usize, cap: usize },
    #[error(transparent)]
    Symbol(#[from] SymbolError),
}

/// `beta_{r,a}` keyed by (homological degree, multidegree).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MultigradedBettiTable {
    pub entries: BTreeMap<(usize, VertexSet), u64>,
}

impl MultigradedBettiTable {
    pub fn get(&self, r: usize, a: &VertexSet) -> u64 {
        self.entries.get(&(r, a.clone())).copied().unwrap_or(0)
    }

    pub fn add(&mut self, r: usize, a: VertexSet, value: u64) {
        if value > 0 {
            *self.entries.entry((r, a)).or_default() += value;
        }
    }

    pub fn graded(&self) -> GradedBettiTable {
        let mut g = GradedBettiTable::default();
        for ((r, a), &v) in &self.entries {
            g.add(*r, a.len(), v);
        }
        g
    }

    /// Rewrites every multidegree through `map` (vertex index translation).
    pub fn relabel(&self, map: &[usize]) -> Self {
        let mut out = Self::default();
        for ((r, a), &v) in &self.entries {
            out.add(*r, a.iter().map(|x| map[x]).collect(), v);
        }
        out
    }

    /// Table of a disjoint union: multidegrees are unions, degrees add.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for ((r1, a1), &v1) in &self.entries {
            for ((r2, a2), &v2) in &other.entries {
                debug_assert!(a1.is_disjoint(a2));
                out.add(r1 + r2, a1.union(a2), v1 * v2);
            }
        }
        out
    }

    pub fn max_value(&self) -> u64 {
        self.entries.values().copied().max().unwrap_or(0)
    }

    pub fn to_json(&self, forest: &Forest) -> Value {
        Value::Array(
            self.entries
                .iter()
                .map(|((r, a), v)| {
                    let labels: Vec<&str> = a.iter().map(|x| forest.label(x)).collect();
                    json!({"r": r, "multidegree": labels, "value": v})
                })
                .collect(),
        )
    }
}

/// `beta_{r,d}` keyed by (homological degree, total degree).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GradedBettiTable {
    pub entries: BTreeMap<(usize, usize), u64>,
}

impl GradedBettiTable {
    pub fn from_entries<I: IntoIterator<Item = ((usize, usize), u64)>>(entries: I) -> Self {
        let mut g = Self::default();
        for ((r, d), v) in entries {
            g.add(r, d, v);
        }
        g
    }

    pub fn get(&self, r: usize, d: usize) -> u64 {
        self.entries.get(&(r, d)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, r: usize, d: usize, value: u64) {
        if value > 0 {
            *self.entries.entry((r, d)).or_default() += value;
        }
    }

    /// Largest homological degree with a nonzero entry.
    pub fn pd(&self) -> usize {
        self.entries.keys().map(|&(r, _)| r).max().unwrap_or(0)
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (&(r1, d1), &v1) in &self.entries {
            for (&(r2, d2), &v2) in &other.entries {
                out.add(r1 + r2, d1 + d2, v1 * v2);
            }
        }
        out
    }

    /// Total rank of each free module.
    pub fn totals(&self) -> Vec<u64> {
        let mut t = vec![0; self.pd() + 1];
        for (&(r, _), &v) in &self.entries {
            t[r] += v;
        }
        t
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.entries
                .iter()
                .map(|((r, d), v)| json!({"r": r, "d": d, "value": v}))
                .collect(),
        )
    }

    /// Macaulay-style grid: columns are homological degrees, rows `d - r`.
    pub fn grid(&self) -> String {
        let cols = self.pd() + 1;
        let rows = self
            .entries
            .keys()
            .map(|&(r, d)| d - r)
            .max()
            .map_or(1, |j| j + 1);
        let mut cells: Vec<Vec<String>> = Vec::new();
        let mut header = vec![String::new()];
        header.extend((0..cols).map(|r| r.to_string()));
        cells.push(header);
        let mut total = vec!["total:".to_string()];
        total.extend(self.totals().iter().map(u64::to_string));
        cells.push(total);
        for j in 0..rows {
            let mut row = vec![format!("{j}:")];
            row.extend((0..cols).map(|r| match self.get(r, r + j) {
                0 => ".".to_string(),
                v => v.to_string(),
            }));
            cells.push(row);
        }
        let width = cells
            .iter()
            .flat_map(|row| row.iter().skip(1))
            .map(String::len)
            .max()
            .unwrap_or(1);
        let label_width = cells.iter().map(|row| row[0].len()).max().unwrap_or(0);
        let mut out = String::new();
        for row in &cells {
            let _ = write!(out, "{:>label_width$}", row[0]);
            for c in &row[1..] {
                let _ = write!(out, " {c:>width$}");
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for GradedBettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.grid())
    }
}

/// `{"graded": [...], "multigraded": [...], "pd": n}`.
pub fn betti_json(
    forest: &Forest,
    multigraded: Option<&MultigradedBettiTable>,
    graded: &GradedBettiTable,
) -> Value {
    json!({
        "graded": graded.to_json(),
        "multigraded": multigraded.map_or(Value::Null, |m| m.to_json(forest)),
        "pd": graded.pd(),
    })
}

/// One generator per symbol, in degree `|u|` and multidegree `gr(u)`.
pub fn betti_from_symbols(
    symbols: &[Symbol],
) -> Result<(MultigradedBettiTable, GradedBettiTable), BettiError> {
    let mut m = MultigradedBettiTable::default();
    for u in symbols {
        let key = (u.len(), u.support().clone());
        if m.entries.insert(key, 1).is_some() {
            return Err(BettiError::DuplicateMultidegree {
                length: u.len(),
                multidegree: u.support().clone(),
            });
        }
    }
    let g = m.graded();
    Ok((m, g))
}

/// Right-hand side of the block census for a maximal symbol `u`: leaves of
/// the forest lying in blocks of `u`, plus unselected blocks that share a
/// vertex of the dual graph with selected ones.
///
/// `all` must be the complete F-admissible list, used to check maximality.
pub fn pd_bouquet_formula(
    seq: &GeneratorSequence,
    u: &Symbol,
    all: &[Symbol],
) -> Result<usize, BettiError> {
    if !is_f_admissible(seq, u)
        || all
            .iter()
            .any(|w| w.len() > u.len() && u.is_subsymbol_of(w))
    {
        return Err(BettiError::NotMaximal(u.clone()));
    }
    let forest = seq.forest();
    let blocks = block_decomposition(seq, u)?;
    let indices = blocks.indices();
    let leaves: usize = blocks
        .blocks
        .iter()
        .map(|b| {
            b.members
                .iter()
                .filter(|&&p| forest.degree(seq.get(p).other(b.index)) == 1)
                .count()
        })
        .sum();
    let outside = (0..forest.num_vertices())
        .filter(|v| !indices.contains(v) && forest.degree(*v) >= 2)
        .filter(|&v| forest.neighbors(v).iter().any(|w| indices.contains(w)))
        .count();
    Ok(leaves + outside)
}

/// Symbols of the induced subforest `T_W` carry a generator in degree
/// `(|u|, |u| + #blocks)` whenever their support is all of `W`.
pub fn betti_by_induced_subgraphs(
    forest: &Forest,
    cap: usize,
) -> Result<GradedBettiTable, BettiError> {
    let n = forest.num_vertices();
    if n > cap || n >= 63 {
        return Err(BettiError::CapExceeded { vertices: n, cap });
    }
    let mut table = GradedBettiTable::default();
    table.add(0, 0, 1);
    for mask in 1u64..1 << n {
        let w: VertexSet = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        // a vertex with no neighbor inside W cannot be covered
        if w.iter()
            .any(|v| forest.neighbors(v).iter().all(|x| !w.contains(*x)))
        {
            continue;
        }
        let sub = forest.induced(&w);
        let ranking = rank_vertices(&sub, None).expect("induced subforest ranks");
        let seq = generator_sequence(&ranking);
        for u in enumerate_f_admissible_procedure(&seq) {
            if u.support().len() == w.len() {
                let blocks = block_decomposition(&seq, &u)?.blocks.len();
                table.add(u.len(), u.len() + blocks, 1);
            }
        }
    }
    Ok(table)
}

/// Component trees of a forest, each as its own forest; isolated vertices
/// are dropped since they do not change the tables.
fn component_trees(forest: &Forest) -> Vec<Forest> {
    forest
        .components()
        .into_iter()
        .filter(|c| c.len() > 1)
        .map(|c| forest.induced(&c.into_iter().collect()))
        .collect()
}

fn tree_key(tree: &Forest) -> String {
    let mut edges: Vec<(&str, &str)> = tree
        .edges()
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (tree.label(a), tree.label(b));
            if x < y {
                (x, y)
            } else {
                (y, x)
            }
        })
        .collect();
    edges.sort_unstable();
    edges
        .iter()
        .map(|(x, y)| format!("{x} {y}"))
        .collect::<Vec<_>>()
        .join(";")
}

/// The recursion step on a tree with at least one edge: `(T', T'', n)`.
fn jacques_split(tree: &Forest) -> (Forest, Forest, usize) {
    let ranking = rank_vertices(tree, None).expect("tree ranks");
    let leaf = |x: usize| tree.degree(x) == 1;
    let v = ranking
        .variable_order()
        .iter()
        .copied()
        .find(|&v| {
            let ns = tree.neighbors(v);
            ns.iter().any(|&x| leaf(x)) && ns.iter().filter(|&&x| !leaf(x)).count() <= 1
        })
        .expect("every tree with an edge has such a vertex");
    let v1 = tree
        .neighbors(v)
        .iter()
        .copied()
        .filter(|&x| leaf(x))
        .min_by_key(|&x| ranking.position(x))
        .expect("leaf neighbor");
    let mut closed = tree.neighbors(v).to_vec();
    closed.push(v);
    (tree.without(&[v1]), tree.without(&closed), tree.degree(v))
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

#[derive(Default)]
struct Jacques {
    betti: HashMap<String, GradedBettiTable>,
    pd: HashMap<String, usize>,
}

impl Jacques {
    fn forest_betti(&mut self, forest: &Forest) -> GradedBettiTable {
        let mut table = GradedBettiTable::from_entries([((0, 0), 1)]);
        for tree in component_trees(forest) {
            table = table.tensor(&self.tree_betti(&tree));
        }
        table
    }

    fn tree_betti(&mut self, tree: &Forest) -> GradedBettiTable {
        let key = tree_key(tree);
        if let Some(t) = self.betti.get(&key) {
            return t.clone();
        }
        let (t1, t2, n) = jacques_split(tree);
        let mut table = self.forest_betti(&t1);
        let lower = self.forest_betti(&t2);
        for j in 0..n {
            let c = binomial(n - 1, j);
            for (&(r, d), &v) in &lower.entries {
                table.add(r + j + 1, d + j + 2, c * v);
            }
        }
        self.betti.insert(key, table.clone());
        table
    }

    fn forest_pd(&mut self, forest: &Forest) -> usize {
        component_trees(forest)
            .iter()
            .map(|t| self.tree_pd(t))
            .sum()
    }

    fn tree_pd(&mut self, tree: &Forest) -> usize {
        let key = tree_key(tree);
        if let Some(&p) = self.pd.get(&key) {
            return p;
        }
        let (t1, t2, n) = jacques_split(tree);
        let p = self.forest_pd(&t1).max(self.forest_pd(&t2) + n);
        self.pd.insert(key, p);
        p
    }
}

/// Graded Betti table by the leaf-deletion recursion, per component.
pub fn jacques_betti(forest: &Forest) -> GradedBettiTable {
    Jacques::default().forest_betti(forest)
}

/// Projective dimension by the leaf-deletion recursion; components add.
pub fn jacques_pd(forest: &Forest) -> usize {
    Jacques::default().forest_pd(forest)
}

/// Multigraded table of each component (in the forest's vertex indices),
/// tensored together.
pub fn componentwise_multigraded(forest: &Forest) -> Result<MultigradedBettiTable, BettiError> {
    let mut table = MultigradedBettiTable::default();
    table.add(0, VertexSet::new(), 1);
    for comp in forest.components() {
        if comp.len() < 2 {
            continue;
        }
        let sub = forest.induced(&comp.iter().copied().collect());
        let seq = generator_sequence(&rank_vertices(&sub, None).expect("component ranks"));
        let (m, _) = betti_from_symbols(&enumerate_f_admissible_procedure(&seq))?;
        table = table.tensor(&m.relabel(&comp));
    }
    Ok(table)
}
