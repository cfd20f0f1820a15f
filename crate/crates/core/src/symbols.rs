//! Symbols (subsequences of the generator sequence) and their combinatorics:
//! reducedness, Lyubeznik admissibility, gaps, bridges, the type 1 / type 2
//! classification with its bridge-insertion matching, and the two
//! enumerations of the F-admissible symbols.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::forest::{k_subgraphs, GeneratorSequence};
use crate::monomial::VertexSet;

/// Default bound on `|S|` for the exhaustive `2^|S|` scans.
pub const DEFAULT_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolError {
    #[error("generator sequence has {size} entries, exceeding the enumeration cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("symbol is {found}, expected {expected}")]
    WrongClass {
        expected: SymbolClass,
        found: SymbolClass,
    },
    #[error("unknown edge {0:?}")]
    UnknownEdge(String),
    #[error("edge {0:?} listed twice")]
    RepeatedEdge(String),
    #[error("no block assignment satisfies the selection rules")]
    NoBlockAssignment,
}

/// A subsequence of the generator sequence, stored as increasing positions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Symbol {
    members: Vec<usize>,
    support: VertexSet,
}

impl Symbol {
    pub fn empty() -> Self {
        Self {
            members: Vec::new(),
            support: VertexSet::new(),
        }
    }

    /// Builds a symbol from positions in any order; duplicates collapse.
    pub fn new<I: IntoIterator<Item = usize>>(seq: &GeneratorSequence, positions: I) -> Self {
        let mut members: Vec<usize> = positions.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        let mut support = VertexSet::new();
        for &p in &members {
            let e = seq.get(p);
            support.insert(e.hi);
            support.insert(e.lo);
        }
        Self { members, support }
    }

    /// Symbol given by a bitmask over positions.
    pub fn from_mask(seq: &GeneratorSequence, mask: u64) -> Self {
        Self::new(seq, (0..seq.len()).filter(|p| mask >> p & 1 == 1))
    }

    /// Parses `a*b, c*d` (commas or whitespace; brackets and quotes ignored).
    pub fn parse(seq: &GeneratorSequence, text: &str) -> Result<Self, SymbolError> {
        let cleaned: String = text
            .chars()
            .map(|c| if "()[]\"".contains(c) { ' ' } else { c })
            .collect();
        let mut positions = Vec::new();
        for token in cleaned.split(|c: char| c == ',' || c.is_whitespace()) {
            if token.is_empty() {
                continue;
            }
            let p = seq
                .parse_edge(token)
                .ok_or_else(|| SymbolError::UnknownEdge(token.to_string()))?;
            if positions.contains(&p) {
                return Err(SymbolError::RepeatedEdge(token.to_string()));
            }
            positions.push(p);
        }
        Ok(Self::new(seq, positions))
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Squarefree support of `lcm(u)`; also the multidegree `gr(u)`.
    pub fn support(&self) -> &VertexSet {
        &self.support
    }

    pub fn contains(&self, position: usize) -> bool {
        self.members.binary_search(&position).is_ok()
    }

    pub fn with(&self, seq: &GeneratorSequence, position: usize) -> Self {
        Self::new(seq, self.members.iter().copied().chain([position]))
    }

    pub fn without(&self, seq: &GeneratorSequence, position: usize) -> Self {
        Self::new(seq, self.members.iter().copied().filter(|&p| p != position))
    }

    /// Codimension-one faces as `(j, member, face)` with `j` the 1-based
    /// place of the omitted member.
    pub fn faces(&self, seq: &GeneratorSequence) -> Vec<(usize, usize, Symbol)> {
        self.members
            .iter()
            .enumerate()
            .map(|(i, &p)| (i + 1, p, self.without(seq, p)))
            .collect()
    }

    pub fn is_subsymbol_of(&self, other: &Symbol) -> bool {
        self.members.iter().all(|&p| other.contains(p))
    }

    /// Subsymbols given by bitmasks over this symbol's members.
    pub fn subsymbols(&self, seq: &GeneratorSequence) -> impl Iterator<Item = Symbol> + '_ {
        let n = self.members.len();
        assert!(n < 64, "symbol too long to enumerate subsymbols");
        let seq = seq.clone();
        (0u64..1 << n).map(move |mask| {
            Symbol::new(
                &seq,
                (0..n)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| self.members[i]),
            )
        })
    }

    pub fn names(&self, seq: &GeneratorSequence) -> Vec<String> {
        self.members.iter().map(|&p| seq.edge_name(p)).collect()
    }

    pub fn display<'a>(&'a self, seq: &'a GeneratorSequence) -> SymbolDisplay<'a> {
        SymbolDisplay { symbol: self, seq }
    }
}

impl Ord for Symbol {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.members.len(), &self.members).cmp(&(other.members.len(), &other.members))
    }
}

impl PartialOrd for Symbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Symbol{:?}", self.members)
    }
}

pub struct SymbolDisplay<'a> {
    symbol: &'a Symbol,
    seq: &'a GeneratorSequence,
}

impl fmt::Display for SymbolDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.symbol.names(self.seq).join(", "))
    }
}

/// Two members `xy > zw` of a symbol together with the bridge `xz`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gap {
    pub upper: usize,
    pub lower: usize,
    pub bridge: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SymbolClass {
    #[serde(rename = "F_ADMISSIBLE")]
    FAdmissible,
    #[serde(rename = "TYPE1")]
    Type1,
    #[serde(rename = "TYPE2")]
    Type2,
}

impl fmt::Display for SymbolClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymbolClass::FAdmissible => "F_ADMISSIBLE",
            SymbolClass::Type1 => "TYPE1",
            SymbolClass::Type2 => "TYPE2",
        })
    }
}

fn vertex_counts(seq: &GeneratorSequence, u: &Symbol) -> Vec<u32> {
    let mut counts = vec![0; seq.forest().num_vertices()];
    for &p in u.members() {
        let e = seq.get(p);
        counts[e.hi] += 1;
        counts[e.lo] += 1;
    }
    counts
}

/// No member divides the product of two other members.
pub fn is_reduced(seq: &GeneratorSequence, u: &Symbol) -> bool {
    let m = u.members();
    for (q, &mq) in m.iter().enumerate() {
        let target = seq.get(mq).support();
        for (h, &mh) in m.iter().enumerate() {
            for (k, &mk) in m.iter().enumerate().skip(h + 1) {
                if h == q || k == q {
                    continue;
                }
                let product = seq.get(mh).support().union(&seq.get(mk).support());
                if target.is_subset(&product) {
                    return false;
                }
            }
        }
    }
    true
}

/// Lyubeznik admissibility with respect to the order of `S`: no generator
/// placed before the first element of a tail `(mu_{i_h}, ..., mu_{i_r})`
/// (of length at least two) divides the lcm of that tail.
pub fn is_l_admissible(seq: &GeneratorSequence, u: &Symbol) -> bool {
    let m = u.members();
    let mut tail = VertexSet::new();
    for h in (0..m.len()).rev() {
        tail = tail.union(&seq.get(m[h]).support());
        if m.len() - h < 2 {
            continue;
        }
        if (0..m[h]).any(|q| seq.get(q).support().is_subset(&tail)) {
            return false;
        }
    }
    true
}

/// All gaps of `u`, ordered by decreasing bridge (then by the gap's members).
pub fn find_gaps(seq: &GeneratorSequence, u: &Symbol) -> Vec<Gap> {
    let counts = vertex_counts(seq, u);
    let forest = seq.forest();
    let m = u.members();
    let mut gaps = Vec::new();
    for (i, &upper) in m.iter().enumerate() {
        let xy = seq.get(upper);
        for &lower in &m[i + 1..] {
            let zw = seq.get(lower);
            if xy.shares_vertex(&zw) {
                continue;
            }
            // In a forest at most one edge joins the two monomials.
            let joined = [xy.hi, xy.lo]
                .into_iter()
                .flat_map(|x| [zw.hi, zw.lo].into_iter().map(move |z| (x, z)))
                .find(|&(x, z)| forest.has_edge(x, z));
            let Some((x, z)) = joined else { continue };
            let (y, w) = (xy.other(x), zw.other(z));
            let bridge = seq.position_of(x, z).expect("bridge is an edge");
            if u.contains(bridge) || counts[w] != 1 {
                continue;
            }
            let y_below = m
                .iter()
                .filter(|&&p| p > lower)
                .any(|&p| seq.get(p).contains(y));
            if !y_below {
                gaps.push(Gap {
                    upper,
                    lower,
                    bridge,
                });
            }
        }
    }
    gaps.sort_by_key(|g| (g.bridge, g.upper, g.lower));
    gaps
}

/// Members `xz` of `u` such that `xy` and `zw` are also members; sorted
/// decreasingly. Non-empty exactly when `u` is not reduced.
pub fn find_bridges(seq: &GeneratorSequence, u: &Symbol) -> Vec<usize> {
    let counts = vertex_counts(seq, u);
    u.members()
        .iter()
        .copied()
        .filter(|&p| {
            let e = seq.get(p);
            counts[e.hi] >= 2 && counts[e.lo] >= 2
        })
        .collect()
}

/// Reduced and without gaps.
pub fn is_f_admissible(seq: &GeneratorSequence, u: &Symbol) -> bool {
    find_bridges(seq, u).is_empty() && find_gaps(seq, u).is_empty()
}

pub fn classify(seq: &GeneratorSequence, u: &Symbol) -> SymbolClass {
    let bridges = find_bridges(seq, u);
    let gaps = find_gaps(seq, u);
    if bridges.is_empty() && gaps.is_empty() {
        return SymbolClass::FAdmissible;
    }
    // A bridge follows a gap when it is smaller than the gap's bridge, i.e.
    // sits at a later position.
    let unfollowed = gaps.iter().any(|g| bridges.iter().all(|&b| b < g.bridge));
    if unfollowed {
        SymbolClass::Type1
    } else {
        SymbolClass::Type2
    }
}

fn expect_class(
    seq: &GeneratorSequence,
    u: &Symbol,
    expected: SymbolClass,
) -> Result<(), SymbolError> {
    let found = classify(seq, u);
    if found == expected {
        Ok(())
    } else {
        Err(SymbolError::WrongClass { expected, found })
    }
}

/// Inserts the smallest bridge among the gaps of a type 1 symbol.
pub fn matching_insert(seq: &GeneratorSequence, u: &Symbol) -> Result<Symbol, SymbolError> {
    expect_class(seq, u, SymbolClass::Type1)?;
    let smallest = find_gaps(seq, u)
        .iter()
        .map(|g| g.bridge)
        .max()
        .expect("type 1 symbols have gaps");
    Ok(u.with(seq, smallest))
}

/// Removes the smallest bridge of a type 2 symbol.
pub fn matching_delete(seq: &GeneratorSequence, u: &Symbol) -> Result<Symbol, SymbolError> {
    expect_class(seq, u, SymbolClass::Type2)?;
    let smallest = *find_bridges(seq, u)
        .last()
        .expect("type 2 symbols contain a bridge");
    Ok(u.without(seq, smallest))
}

/// Every subsequence of `S`, i.e. the Taylor basis, ordered by length then
/// positions.
pub fn all_symbols(seq: &GeneratorSequence, cap: usize) -> Result<Vec<Symbol>, SymbolError> {
    if seq.len() > cap || seq.len() >= 64 {
        return Err(SymbolError::CapExceeded {
            size: seq.len(),
            cap,
        });
    }
    let mut out: Vec<Symbol> = (0u64..1 << seq.len())
        .map(|mask| Symbol::from_mask(seq, mask))
        .collect();
    out.sort();
    Ok(out)
}

/// F-admissible symbols by testing every subsequence of `S`.
pub fn enumerate_f_admissible_filter(
    seq: &GeneratorSequence,
    cap: usize,
) -> Result<Vec<Symbol>, SymbolError> {
    Ok(all_symbols(seq, cap)?
        .into_iter()
        .filter(|u| is_f_admissible(seq, u))
        .collect())
}

/// Descending sequences of pairwise non-adjacent K-subgraph indices.
pub fn index_sequences(seq: &GeneratorSequence) -> Vec<Vec<usize>> {
    let ranking = seq.ranking();
    let forest = ranking.forest();
    let candidates: Vec<usize> = k_subgraphs(seq).iter().map(|k| k.center).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn walk(
        i: usize,
        candidates: &[usize],
        forest: &crate::forest::Forest,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == candidates.len() {
            out.push(chosen.clone());
            return;
        }
        walk(i + 1, candidates, forest, chosen, out);
        let v = candidates[i];
        if chosen.iter().all(|&c| !forest.has_edge(c, v)) {
            chosen.push(v);
            walk(i + 1, candidates, forest, chosen, out);
            chosen.pop();
        }
    }
    walk(0, &candidates, forest, &mut chosen, &mut out);
    out
}

/// Steps (II) and (III) for one index sequence: collect the K-subgraph
/// members of every index and cancel each monomial that meets a K-subgraph
/// of a later index.
pub fn top_symbol(seq: &GeneratorSequence, indices: &[usize]) -> Symbol {
    let forest = seq.forest();
    let mut kept = Vec::new();
    for (h, &a) in indices.iter().enumerate() {
        for &b in forest.neighbors(a) {
            let meets_later = indices[h + 1..]
                .iter()
                .any(|&c| c == b || forest.has_edge(b, c));
            if !meets_later {
                kept.push(seq.position_of(a, b).expect("K-subgraph edge"));
            }
        }
    }
    Symbol::new(seq, kept)
}

/// Almost F-admissible symbols: every subsymbol of every top symbol.
pub fn almost_f_admissible(seq: &GeneratorSequence) -> Vec<Symbol> {
    let tops: HashSet<Symbol> = index_sequences(seq)
        .iter()
        .map(|idx| top_symbol(seq, idx))
        .collect();
    let mut all: HashSet<Symbol> = HashSet::new();
    for top in &tops {
        all.extend(top.subsymbols(seq));
    }
    let mut out: Vec<Symbol> = all.into_iter().collect();
    out.sort();
    out
}

/// F-admissible symbols by the selection procedure: almost F-admissible
/// symbols with the gap-containing ones discarded.
pub fn enumerate_f_admissible_procedure(seq: &GeneratorSequence) -> Vec<Symbol> {
    almost_f_admissible(seq)
        .into_iter()
        .filter(|u| find_gaps(seq, u).is_empty())
        .collect()
}

/// One block: an index vertex and the members divisible by it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub index: usize,
    pub members: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Blocks by decreasing index in the variable order.
    pub blocks: Vec<Block>,
}

impl BlockDecomposition {
    pub fn indices(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.index).collect()
    }
}

/// Canonical blocks of an F-admissible symbol.
///
/// A vertex dividing two members is forced to be an index. Each remaining
/// member is assigned to one of its endpoints, trying the larger endpoint
/// first, and the first assignment whose indices are pairwise non-adjacent
/// and survive the cancellation rule against later indices is returned.
pub fn block_decomposition(
    seq: &GeneratorSequence,
    u: &Symbol,
) -> Result<BlockDecomposition, SymbolError> {
    expect_class(seq, u, SymbolClass::FAdmissible)?;
    let ranking = seq.ranking();
    let counts = vertex_counts(seq, u);
    let mut assigned: Vec<(usize, usize)> = Vec::new(); // (member, index)
    let mut lone: Vec<usize> = Vec::new();
    for &p in u.members() {
        let e = seq.get(p);
        match (counts[e.hi] >= 2, counts[e.lo] >= 2) {
            (true, false) => assigned.push((p, e.hi)),
            (false, true) => assigned.push((p, e.lo)),
            (false, false) => lone.push(p),
            (true, true) => unreachable!("reduced symbols have no bridges"),
        }
    }

    fn valid(seq: &GeneratorSequence, assignment: &[(usize, usize)]) -> bool {
        let forest = seq.forest();
        let ranking = seq.ranking();
        let mut indices: Vec<usize> = assignment.iter().map(|&(_, a)| a).collect();
        indices.sort_unstable();
        indices.dedup();
        for (i, &a) in indices.iter().enumerate() {
            if indices[i + 1..].iter().any(|&c| forest.has_edge(a, c)) {
                return false;
            }
        }
        assignment.iter().all(|&(p, a)| {
            let b = seq.get(p).other(a);
            indices
                .iter()
                .filter(|&&c| ranking.greater(a, c))
                .all(|&c| c != b && !forest.has_edge(b, c))
        })
    }

    fn search(
        seq: &GeneratorSequence,
        lone: &[usize],
        assignment: &mut Vec<(usize, usize)>,
    ) -> bool {
        let Some((&p, rest)) = lone.split_first() else {
            return valid(seq, assignment);
        };
        let e = seq.get(p);
        for index in [e.hi, e.lo] {
            assignment.push((p, index));
            if search(seq, rest, assignment) {
                return true;
            }
            assignment.pop();
        }
        false
    }

    if !search(seq, &lone, &mut assigned) {
        return Err(SymbolError::NoBlockAssignment);
    }
    let mut indices: Vec<usize> = assigned.iter().map(|&(_, a)| a).collect();
    indices.sort_by_key(|&v| ranking.position(v));
    indices.dedup();
    let blocks = indices
        .into_iter()
        .map(|index| {
            let mut members: Vec<usize> = assigned
                .iter()
                .filter(|&&(_, a)| a == index)
                .map(|&(p, _)| p)
                .collect();
            members.sort_unstable();
            Block { index, members }
        })
        .collect();
    Ok(BlockDecomposition { blocks })
}

#[derive(Debug, Clone, Serialize)]
pub struct GapReport {
    pub upper: String,
    pub lower: String,
    pub bridge: String,
}

/// `{"class": ..., "gaps": [...], "bridges": [...]}` for one symbol.
#[derive(Debug, Clone, Serialize)]
pub struct ClassReport {
    pub symbol: Vec<String>,
    pub class: SymbolClass,
    pub gaps: Vec<GapReport>,
    pub bridges: Vec<String>,
}

pub fn class_report(seq: &GeneratorSequence, u: &Symbol) -> ClassReport {
    ClassReport {
        symbol: u.names(seq),
        class: classify(seq, u),
        gaps: find_gaps(seq, u)
            .into_iter()
            .map(|g| GapReport {
                upper: seq.edge_name(g.upper),
                lower: seq.edge_name(g.lower),
                bridge: seq.edge_name(g.bridge),
            })
            .collect(),
        bridges: find_bridges(seq, u)
            .into_iter()
            .map(|p| seq.edge_name(p))
            .collect(),
    }
}
