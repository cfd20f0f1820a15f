//! Betti numbers as Tor ranks over a prime field.
//!
//! Any multigraded free resolution tensored with the residue field splits
//! into strands, one per multidegree; the homology of a strand counts the
//! generators of the minimal resolution in that multidegree. The Taylor
//! and Lyubeznik resolutions are both known to be resolutions, so either
//! basis gives an answer independent of the matching.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use serde_json::{json, Value};

use crate::betti::MultigradedBettiTable;
use crate::forest::{Forest, GeneratorSequence};
use crate::monomial::{Poly, VertexSet};
use crate::morse::{taylor_coefficient, ChainComplex};
use crate::symbols::{all_symbols, is_l_admissible, Symbol, SymbolError};

pub const DEFAULT_PRIME: u64 = 32003;
pub const SECOND_PRIME: u64 = 101;

/// An element of GF(p), kept in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u64,
    p: u64,
}

impl FieldElement {
    pub fn new(value: i64, p: u64) -> Self {
        debug_assert!(p > 2 && p < 1 << 31);
        Self {
            value: value.rem_euclid(p as i64) as u64,
            p,
        }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// Multiplicative inverse by Fermat; `None` for zero.
    pub fn inv(self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (mut base, mut exp, mut acc) = (self.value, self.p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        Some(Self {
            value: acc,
            p: self.p,
        })
    }
}

impl Add for FieldElement {
    type Output = Self;

    fn add(self, o: Self) -> Self {
        Self {
            value: (self.value + o.value) % self.p,
            p: self.p,
        }
    }
}

impl Sub for FieldElement {
    type Output = Self;

    fn sub(self, o: Self) -> Self {
        Self {
            value: (self.value + self.p - o.value) % self.p,
            p: self.p,
        }
    }
}

impl Mul for FieldElement {
    type Output = Self;

    fn mul(self, o: Self) -> Self {
        Self {
            value: self.value * o.value % self.p,
            p: self.p,
        }
    }
}

/// Rank of a dense matrix over GF(p) by Gaussian elimination.
pub fn rank_mod_p(mut rows: Vec<Vec<FieldElement>>) -> usize {
    let Some(width) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inv().expect("nonzero pivot");
        for x in &mut rows[rank][col..] {
            *x = *x * inv;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = row[col];
                for (x, &p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x = *x - p * factor;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// The strand of a complex in one multidegree: per homological degree the
/// cells of exactly that multidegree, and the degree-preserving part of the
/// boundary (`boundaries[i]` maps degree `i` to `i - 1`).
#[derive(Debug, Clone)]
pub struct StrandComplex {
    pub multidegree: VertexSet,
    pub cells: BTreeMap<usize, Vec<Symbol>>,
    pub boundaries: BTreeMap<usize, Vec<Vec<FieldElement>>>,
}

impl StrandComplex {
    pub fn homology_ranks(&self) -> BTreeMap<usize, usize> {
        let rank = |i: usize| self.boundaries.get(&i).map_or(0, |m| rank_mod_p(m.clone()));
        self.cells
            .iter()
            .map(|(&i, cells)| (i, cells.len() - rank(i) - rank(i + 1)))
            .filter(|&(_, h)| h > 0)
            .collect()
    }

    /// Composite of consecutive boundaries is zero.
    pub fn is_complex(&self) -> bool {
        self.boundaries.iter().all(|(&i, upper)| {
            let Some(lower) = self.boundaries.get(&(i - 1)) else {
                return true;
            };
            lower.iter().all(|row| {
                (0..upper.first().map_or(0, Vec::len)).all(|col| {
                    row.iter()
                        .zip(upper)
                        .fold(FieldElement::new(0, row[0].p), |acc, (a, r)| {
                            acc + *a * r[col]
                        })
                        .is_zero()
                })
            })
        })
    }
}

/// Strands of the Taylor boundary restricted to `basis`, which must be
/// closed under taking faces within a multidegree.
pub fn strands(basis: &[Symbol], p: u64) -> Vec<StrandComplex> {
    let mut by_degree: BTreeMap<VertexSet, BTreeMap<usize, Vec<Symbol>>> = BTreeMap::new();
    for u in basis {
        by_degree
            .entry(u.support().clone())
            .or_default()
            .entry(u.len())
            .or_default()
            .push(u.clone());
    }
    by_degree
        .into_iter()
        .map(|(a, mut cells)| {
            for c in cells.values_mut() {
                c.sort();
            }
            let mut boundaries = BTreeMap::new();
            for (&i, cols) in &cells {
                let Some(rows) = i.checked_sub(1).and_then(|k| cells.get(&k)) else {
                    continue;
                };
                let m: Vec<Vec<FieldElement>> = rows
                    .iter()
                    .map(|t| {
                        cols.iter()
                            .map(|u| match taylor_coefficient(u, t) {
                                Ok(c) => FieldElement::new(c.sign, p),
                                Err(_) => FieldElement::new(0, p),
                            })
                            .collect()
                    })
                    .collect();
                boundaries.insert(i, m);
            }
            StrandComplex {
                multidegree: a,
                cells,
                boundaries,
            }
        })
        .collect()
}

/// All L-admissible symbols.
pub fn lyubeznik_basis(seq: &GeneratorSequence, cap: usize) -> Result<Vec<Symbol>, SymbolError> {
    Ok(all_symbols(seq, cap)?
        .into_iter()
        .filter(|u| is_l_admissible(seq, u))
        .collect())
}

/// Tor ranks from the strands of the Taylor boundary on `basis`.
pub fn betti_via_homology(basis: &[Symbol], p: u64) -> MultigradedBettiTable {
    let mut table = MultigradedBettiTable::default();
    for strand in strands(basis, p) {
        for (i, h) in strand.homology_ranks() {
            table.add(i, strand.multidegree.clone(), h as u64);
        }
    }
    table
}

/// Tor ranks of an arbitrary multigraded complex of symbols: in each
/// multidegree only the constant parts of the entries survive.
pub fn betti_via_complex(complex: &ChainComplex, p: u64) -> MultigradedBettiTable {
    let mut table = MultigradedBettiTable::default();
    let mut groups: BTreeMap<VertexSet, BTreeMap<usize, Vec<usize>>> = BTreeMap::new();
    for (r, basis) in complex.bases.iter().enumerate() {
        for (i, u) in basis.iter().enumerate() {
            groups
                .entry(u.support().clone())
                .or_default()
                .entry(r)
                .or_default()
                .push(i);
        }
    }
    for (a, cells) in groups {
        let rank = |r: usize| -> usize {
            let (Some(cols), Some(rows)) =
                (cells.get(&r), r.checked_sub(1).and_then(|k| cells.get(&k)))
            else {
                return 0;
            };
            let m = &complex.matrices[r - 1];
            let dense = rows
                .iter()
                .map(|&i| {
                    cols.iter()
                        .map(|&j| {
                            let c = m.entries.get(&(i, j)).map_or(0, |e| e.constant_term());
                            FieldElement::new(c, p)
                        })
                        .collect()
                })
                .collect();
            rank_mod_p(dense)
        };
        for (&r, c) in &cells {
            let h = c.len() - rank(r) - rank(r + 1);
            table.add(r, a.clone(), h as u64);
        }
    }
    table
}

/// The Taylor complex itself, with full monomial coefficients.
pub fn taylor_complex(seq: &GeneratorSequence, cap: usize) -> Result<ChainComplex, SymbolError> {
    let basis = all_symbols(seq, cap)?;
    Ok(ChainComplex::from_columns(&basis, |u| {
        u.faces(seq)
            .into_iter()
            .map(|(_, _, f)| {
                let c = taylor_coefficient(u, &f).expect("face");
                (f, Poly::monomial(c.sign, c.exponent))
            })
            .collect()
    }))
}

/// One differing cell of two tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableDiff {
    pub r: usize,
    pub multidegree: VertexSet,
    pub left: u64,
    pub right: u64,
}

impl TableDiff {
    pub fn to_json(&self, forest: &Forest) -> Value {
        let labels: Vec<&str> = self.multidegree.iter().map(|x| forest.label(x)).collect();
        json!({"r": self.r, "multidegree": labels, "left": self.left, "right": self.right})
    }
}

/// Cells where the tables differ; empty iff equal.
pub fn compare_tables(t1: &MultigradedBettiTable, t2: &MultigradedBettiTable) -> Vec<TableDiff> {
    let mut keys: Vec<&(usize, VertexSet)> = t1.entries.keys().chain(t2.entries.keys()).collect();
    keys.sort();
    keys.dedup();
    keys.into_iter()
        .filter_map(|(r, a)| {
            let (left, right) = (t1.get(*r, a), t2.get(*r, a));
            (left != right).then(|| TableDiff {
                r: *r,
                multidegree: a.clone(),
                left,
                right,
            })
        })
        .collect()
}
