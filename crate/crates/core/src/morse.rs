//! The acyclic matching on the Taylor complex and the Morse differential.
//!
//! Cells are symbols. The matching pairs each type 1 symbol with the type 2
//! symbol obtained by inserting its smallest gap bridge. Reversing the
//! matched edges of the face graph gives the Morse graph; summing signed
//! weights of gradient paths between critical (F-admissible) cells gives the
//! differential of the minimal resolution.

use std::collections::{BTreeMap, HashMap, VecDeque};

use thiserror::Error;

use crate::forest::GeneratorSequence;
use crate::monomial::{Poly, SignedMonomial, VertexSet};
use crate::symbols::{
    classify, enumerate_f_admissible_procedure, matching_delete, matching_insert, Symbol,
    SymbolClass,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorseError {
    #[error("{face:?} is not a codimension-one face of {cell:?}")]
    NotAFace { cell: Symbol, face: Symbol },
    #[error("region is not closed: {missing:?} (needed by {by:?}) is missing")]
    RegionNotClosed { missing: Symbol, by: Symbol },
    #[error("cell {0:?} is not in the graph")]
    UnknownCell(Symbol),
    #[error("the Morse graph contains a directed cycle")]
    Cycle,
    #[error("region spans {0} edges, too many to materialize")]
    RegionTooLarge(usize),
}

/// `[u : u']`, the coefficient of `u'` in the Taylor differential of `u`:
/// `(-1)^(j+1) * lcm(u) / lcm(u')` where `j` is the 1-based place of the
/// omitted member.
pub fn taylor_coefficient(u: &Symbol, face: &Symbol) -> Result<SignedMonomial, MorseError> {
    let not_face = || MorseError::NotAFace {
        cell: u.clone(),
        face: face.clone(),
    };
    if face.len() + 1 != u.len() || !face.is_subsymbol_of(u) {
        return Err(not_face());
    }
    let j = u
        .members()
        .iter()
        .position(|p| !face.contains(*p))
        .ok_or_else(not_face)?
        + 1;
    let sign = if j % 2 == 1 { 1 } else { -1 };
    Ok(SignedMonomial::new(
        sign,
        u.support().difference(face.support()),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    /// `u -> u'` deleting a member, not in the matching.
    Deletion,
    /// `u' -> u`, a reversed matched edge from a type 1 cell to its partner.
    Insertion,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorseEdge {
    pub from: usize,
    pub to: usize,
    pub weight: SignedMonomial,
    pub kind: EdgeKind,
}

#[derive(Debug, Clone)]
pub struct MorseGraph {
    cells: Vec<Symbol>,
    classes: Vec<SymbolClass>,
    index: HashMap<Symbol, usize>,
    edges: Vec<MorseEdge>,
    outgoing: Vec<Vec<usize>>,
}

impl MorseGraph {
    pub fn cells(&self) -> &[Symbol] {
        &self.cells
    }

    pub fn class(&self, cell: usize) -> SymbolClass {
        self.classes[cell]
    }

    pub fn id(&self, cell: &Symbol) -> Option<usize> {
        self.index.get(cell).copied()
    }

    pub fn edges(&self) -> &[MorseEdge] {
        &self.edges
    }

    pub fn outgoing(&self, cell: usize) -> impl Iterator<Item = &MorseEdge> {
        self.outgoing[cell].iter().map(|&e| &self.edges[e])
    }

    /// Builds a graph from explicit edges; no closure or matching checks.
    /// Used to exercise the acyclicity checker on hand-made graphs.
    pub fn from_parts(
        cells: Vec<Symbol>,
        classes: Vec<SymbolClass>,
        edges: Vec<MorseEdge>,
    ) -> Self {
        let index = cells
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, c)| (c, i))
            .collect();
        let mut outgoing = vec![Vec::new(); cells.len()];
        for (i, e) in edges.iter().enumerate() {
            outgoing[e.from].push(i);
        }
        Self {
            cells,
            classes,
            index,
            edges,
            outgoing,
        }
    }
}

/// All symbols whose edges lie inside `support(u)`.
///
/// Multidegrees never grow along the Morse graph, so every gradient path
/// starting at a face of `u` stays here. The region is closed under faces
/// and under matching partners (a gap bridge joins vertices of the symbol).
pub fn morse_region(seq: &GeneratorSequence, u: &Symbol) -> Result<Vec<Symbol>, MorseError> {
    let inside: Vec<usize> = (0..seq.len())
        .filter(|&p| seq.get(p).support().is_subset(u.support()))
        .collect();
    if inside.len() > 24 {
        return Err(MorseError::RegionTooLarge(inside.len()));
    }
    let mut cells: Vec<Symbol> = (0u64..1 << inside.len())
        .map(|mask| {
            Symbol::new(
                seq,
                (0..inside.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| inside[i]),
            )
        })
        .collect();
    cells.sort();
    Ok(cells)
}

pub fn build_morse_graph(
    seq: &GeneratorSequence,
    region: &[Symbol],
) -> Result<MorseGraph, MorseError> {
    let cells: Vec<Symbol> = region.to_vec();
    let index: HashMap<Symbol, usize> = cells
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, c)| (c, i))
        .collect();
    let classes: Vec<SymbolClass> = cells.iter().map(|c| classify(seq, c)).collect();
    let mut edges = Vec::new();
    for (id, cell) in cells.iter().enumerate() {
        let partner_below = match classes[id] {
            SymbolClass::Type2 => Some(matching_delete(seq, cell).expect("type 2")),
            SymbolClass::Type1 => {
                let up = matching_insert(seq, cell).expect("type 1");
                if !index.contains_key(&up) {
                    return Err(MorseError::RegionNotClosed {
                        missing: up,
                        by: cell.clone(),
                    });
                }
                None
            }
            SymbolClass::FAdmissible => None,
        };
        for (_, _, face) in cell.faces(seq) {
            let Some(&face_id) = index.get(&face) else {
                return Err(MorseError::RegionNotClosed {
                    missing: face,
                    by: cell.clone(),
                });
            };
            let coefficient = taylor_coefficient(cell, &face)?;
            if partner_below.as_ref() == Some(&face) {
                edges.push(MorseEdge {
                    from: face_id,
                    to: id,
                    weight: coefficient.negated(),
                    kind: EdgeKind::Insertion,
                });
            } else {
                edges.push(MorseEdge {
                    from: id,
                    to: face_id,
                    weight: coefficient,
                    kind: EdgeKind::Deletion,
                });
            }
        }
    }
    Ok(MorseGraph::from_parts(cells, classes, edges))
}

/// Topological sort succeeds.
pub fn verify_acyclic(graph: &MorseGraph) -> bool {
    let n = graph.cells().len();
    let mut indegree = vec![0usize; n];
    for e in graph.edges() {
        indegree[e.to] += 1;
    }
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = queue.pop_front() {
        seen += 1;
        for e in graph.outgoing(v) {
            indegree[e.to] -= 1;
            if indegree[e.to] == 0 {
                queue.push_back(e.to);
            }
        }
    }
    seen == n
}

/// Sum of `m(P)` over all gradient paths from `start` to each target.
///
/// Edge weights carry their monomials, so the value for a target `t` is a
/// multiple of `x^(gr(start) - gr(t))`.
pub fn gradient_sum(
    graph: &MorseGraph,
    start: &Symbol,
    targets: &[Symbol],
) -> Result<BTreeMap<Symbol, Poly>, MorseError> {
    let start_id = graph
        .id(start)
        .ok_or_else(|| MorseError::UnknownCell(start.clone()))?;
    let mut target_ids = Vec::with_capacity(targets.len());
    for t in targets {
        target_ids.push(
            graph
                .id(t)
                .ok_or_else(|| MorseError::UnknownCell(t.clone()))?,
        );
    }

    #[derive(Clone)]
    enum State {
        Fresh,
        Active,
        Done(BTreeMap<usize, Poly>),
    }

    fn visit(
        graph: &MorseGraph,
        v: usize,
        targets: &[usize],
        memo: &mut Vec<State>,
    ) -> Result<BTreeMap<usize, Poly>, MorseError> {
        match &memo[v] {
            State::Done(m) => return Ok(m.clone()),
            State::Active => return Err(MorseError::Cycle),
            State::Fresh => {}
        }
        memo[v] = State::Active;
        let mut acc: BTreeMap<usize, Poly> = BTreeMap::new();
        if targets.contains(&v) {
            acc.insert(v, Poly::monomial(1, VertexSet::new()));
        }
        for e in graph.outgoing(v) {
            let below = visit(graph, e.to, targets, memo)?;
            for (t, p) in below {
                *acc.entry(t).or_default() += &p.scale(&e.weight);
            }
        }
        acc.retain(|_, p| !p.is_zero());
        memo[v] = State::Done(acc.clone());
        Ok(acc)
    }

    let mut memo = vec![State::Fresh; graph.cells().len()];
    let sums = visit(graph, start_id, &target_ids, &mut memo)?;
    Ok(sums
        .into_iter()
        .map(|(t, p)| (graph.cells()[t].clone(), p))
        .collect())
}

/// Enumerates the gradient paths from `start` to `target` (cell ids).
pub fn gradient_paths(graph: &MorseGraph, start: usize, target: usize) -> Vec<Vec<usize>> {
    fn walk(
        graph: &MorseGraph,
        v: usize,
        target: usize,
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if v == target {
            out.push(path.clone());
            return;
        }
        for e in graph.outgoing(v) {
            // nothing below the target's length climbs back to it
            if graph.cells()[e.to].len() < graph.cells()[target].len() {
                continue;
            }
            path.push(e.to);
            walk(graph, e.to, target, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    walk(graph, start, target, &mut vec![start], &mut out);
    out
}

/// Gradient flow from a cell of length `r - 1` onto the critical cells of
/// the same length, computed lazily without materializing a region.
struct Flow<'a> {
    seq: &'a GeneratorSequence,
    memo: HashMap<Symbol, BTreeMap<Symbol, Poly>>,
}

impl<'a> Flow<'a> {
    fn new(seq: &'a GeneratorSequence) -> Self {
        Self {
            seq,
            memo: HashMap::new(),
        }
    }

    fn flow(&mut self, cell: &Symbol) -> BTreeMap<Symbol, Poly> {
        if let Some(m) = self.memo.get(cell) {
            return m.clone();
        }
        let seq = self.seq;
        let out = match classify(seq, cell) {
            SymbolClass::FAdmissible => {
                BTreeMap::from([(cell.clone(), Poly::monomial(1, VertexSet::new()))])
            }
            // Only deletions leave a type 2 cell of this length, and nothing
            // below climbs back to a critical cell of this length.
            SymbolClass::Type2 => BTreeMap::new(),
            SymbolClass::Type1 => {
                let up = matching_insert(seq, cell).expect("type 1");
                let up_weight = taylor_coefficient(&up, cell).expect("face").negated();
                let mut acc: BTreeMap<Symbol, Poly> = BTreeMap::new();
                for (_, _, face) in up.faces(seq) {
                    if &face == cell {
                        continue;
                    }
                    let w = taylor_coefficient(&up, &face)
                        .expect("face")
                        .mul(&up_weight);
                    for (t, p) in self.flow(&face) {
                        *acc.entry(t).or_default() += &p.scale(&w);
                    }
                }
                acc.retain(|_, p| !p.is_zero());
                acc
            }
        };
        self.memo.insert(cell.clone(), out.clone());
        out
    }
}

/// The Morse differential of an F-admissible symbol as a formal sum over
/// F-admissible symbols of length `|u| - 1`.
pub fn differential(seq: &GeneratorSequence, u: &Symbol) -> BTreeMap<Symbol, Poly> {
    differential_with(&mut Flow::new(seq), u)
}

fn differential_with(flow: &mut Flow<'_>, u: &Symbol) -> BTreeMap<Symbol, Poly> {
    let seq = flow.seq;
    let mut acc: BTreeMap<Symbol, Poly> = BTreeMap::new();
    for (_, _, face) in u.faces(seq) {
        let c = taylor_coefficient(u, &face).expect("face");
        for (t, p) in flow.flow(&face) {
            *acc.entry(t).or_default() += &p.scale(&c);
        }
    }
    acc.retain(|_, p| !p.is_zero());
    acc
}

/// Same differential, through an explicit Morse graph on `morse_region(u)`.
pub fn differential_via_graph(
    seq: &GeneratorSequence,
    u: &Symbol,
) -> Result<BTreeMap<Symbol, Poly>, MorseError> {
    let region = morse_region(seq, u)?;
    let graph = build_morse_graph(seq, &region)?;
    let targets: Vec<Symbol> = region
        .iter()
        .enumerate()
        .filter(|(id, c)| c.len() + 1 == u.len() && graph.class(*id) == SymbolClass::FAdmissible)
        .map(|(_, c)| c.clone())
        .collect();
    let mut acc: BTreeMap<Symbol, Poly> = BTreeMap::new();
    for (_, _, face) in u.faces(seq) {
        let c = taylor_coefficient(u, &face)?;
        for (t, p) in gradient_sum(&graph, &face, &targets)? {
            *acc.entry(t).or_default() += &p.scale(&c);
        }
    }
    acc.retain(|_, p| !p.is_zero());
    Ok(acc)
}

/// Sparse matrix of `d_r : F_r -> F_(r-1)`; `entries[(row, col)]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferentialMatrix {
    pub degree: usize,
    pub rows: Vec<Symbol>,
    pub cols: Vec<Symbol>,
    pub entries: BTreeMap<(usize, usize), Poly>,
}

/// `bases[r]` generates `F_r`; `matrices[r - 1]` is `d_r`, with `d_1` the
/// augmentation onto `F_0 = R` (the empty symbol).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex {
    pub bases: Vec<Vec<Symbol>>,
    pub matrices: Vec<DifferentialMatrix>,
}

impl ChainComplex {
    /// Assembles a complex on `basis` with column images given by `image`.
    pub fn from_columns<F>(basis: &[Symbol], mut image: F) -> Self
    where
        F: FnMut(&Symbol) -> BTreeMap<Symbol, Poly>,
    {
        let top = basis.iter().map(Symbol::len).max().unwrap_or(0);
        let mut bases: Vec<Vec<Symbol>> = vec![Vec::new(); top + 1];
        for u in basis {
            bases[u.len()].push(u.clone());
        }
        for b in &mut bases {
            b.sort();
        }
        let mut matrices = Vec::with_capacity(top);
        for r in 1..=top {
            let rows = bases[r - 1].clone();
            let cols = bases[r].clone();
            let row_index: HashMap<&Symbol, usize> =
                rows.iter().enumerate().map(|(i, s)| (s, i)).collect();
            let mut entries = BTreeMap::new();
            for (j, u) in cols.iter().enumerate() {
                for (t, p) in image(u) {
                    let i = *row_index
                        .get(&t)
                        .unwrap_or_else(|| panic!("image {t:?} outside the basis"));
                    entries.insert((i, j), p);
                }
            }
            matrices.push(DifferentialMatrix {
                degree: r,
                rows,
                cols,
                entries,
            });
        }
        Self { bases, matrices }
    }

    /// Largest homological degree with a generator.
    pub fn length(&self) -> usize {
        self.bases.len().saturating_sub(1)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    /// Entries that are not `±` a single monomial.
    pub fn multiplicity_findings(&self) -> Vec<(usize, Symbol, Symbol, Poly)> {
        let mut out = Vec::new();
        for m in &self.matrices {
            for (&(i, j), p) in &m.entries {
                if p.num_terms() > 1 || p.max_multiplicity() > 1 {
                    out.push((m.degree, m.cols[j].clone(), m.rows[i].clone(), p.clone()));
                }
            }
        }
        out
    }
}

/// The minimal resolution: F-admissible generators with the Morse differential.
pub fn assemble_complex(seq: &GeneratorSequence) -> ChainComplex {
    let basis = enumerate_f_admissible_procedure(seq);
    let mut flow = Flow::new(seq);
    ChainComplex::from_columns(&basis, |u| differential_with(&mut flow, u))
}

/// Every composite `d_(r-1) d_r` vanishes identically.
pub fn verify_d2_zero(complex: &ChainComplex) -> bool {
    for pair in complex.matrices.windows(2) {
        let (lower, upper) = (&pair[0], &pair[1]);
        let mut lower_cols: Vec<Vec<(usize, &Poly)>> = vec![Vec::new(); lower.cols.len()];
        for (&(i, j), p) in &lower.entries {
            lower_cols[j].push((i, p));
        }
        let mut product: BTreeMap<(usize, usize), Poly> = BTreeMap::new();
        for (&(mid, col), p) in &upper.entries {
            for &(row, q) in &lower_cols[mid] {
                *product.entry((row, col)).or_default() += &(q * p);
            }
        }
        if product.values().any(|p| !p.is_zero()) {
            return false;
        }
    }
    true
}

/// No entry has a nonzero constant term.
pub fn verify_minimal(complex: &ChainComplex) -> bool {
    complex
        .matrices
        .iter()
        .all(|m| m.entries.values().all(|p| p.constant_term() == 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::{generator_sequence, parse_forest, rank_vertices};

    const SEVEN_VERTEX_TREE: &str = "0 1\n0 1'\n1 2\n1 2'\n1' 2''\n2 3\n";
    const PATH_TREE: &str = "0 1\n1 2\n2 3\n3 4\n3 4'\n4 5\n5 6\n";

    fn seq(text: &str) -> GeneratorSequence {
        generator_sequence(&rank_vertices(&parse_forest(text).unwrap(), None).unwrap())
    }

    fn sym(s: &GeneratorSequence, text: &str) -> Symbol {
        Symbol::parse(s, text).unwrap()
    }

    fn vs(s: &GeneratorSequence, labels: &[&str]) -> VertexSet {
        labels
            .iter()
            .map(|l| s.forest().vertex(l).unwrap())
            .collect()
    }

    #[test]
    fn taylor_coefficients() {
        let s = seq("0 1\n1 2");
        let u = sym(&s, "0*1, 1*2");
        let c = taylor_coefficient(&u, &sym(&s, "1*2")).unwrap();
        assert_eq!(c, SignedMonomial::new(1, vs(&s, &["0"])));
        let c = taylor_coefficient(&u, &sym(&s, "0*1")).unwrap();
        assert_eq!(c, SignedMonomial::new(-1, vs(&s, &["2"])));

        let t = seq(SEVEN_VERTEX_TREE);
        let c = taylor_coefficient(&sym(&t, "0*1, 0*1', 1*2"), &sym(&t, "0*1', 1*2")).unwrap();
        assert_eq!(c, SignedMonomial::one());

        assert!(taylor_coefficient(&u, &Symbol::empty()).is_err());
    }

    #[test]
    fn graph_of_matched_faces() {
        let t = seq(SEVEN_VERTEX_TREE);
        let u = sym(&t, "0*1, 0*1', 1*2");
        let region: Vec<Symbol> = u.subsymbols(&t).collect();
        let g = build_morse_graph(&t, &region).unwrap();
        let up: Vec<&MorseEdge> = g
            .edges()
            .iter()
            .filter(|e| e.kind == EdgeKind::Insertion)
            .collect();
        assert_eq!(up.len(), 1);
        assert_eq!(g.cells()[up[0].from], sym(&t, "0*1', 1*2"));
        assert_eq!(g.cells()[up[0].to], u);
        assert_eq!(up[0].weight, SignedMonomial::new(-1, VertexSet::new()));
        // 8 cells, 12 face pairs
        assert_eq!(g.edges().len(), 12);
        assert!(verify_acyclic(&g));

        let f = sym(&t, "0*1, 1*2, 1*2'");
        let region: Vec<Symbol> = f.subsymbols(&t).collect();
        let g = build_morse_graph(&t, &region).unwrap();
        assert!(g.edges().iter().all(|e| e.kind == EdgeKind::Deletion));
    }

    #[test]
    fn region_must_be_closed() {
        let t = seq(SEVEN_VERTEX_TREE);
        let region = vec![
            sym(&t, "0*1', 1*2"),
            sym(&t, "0*1'"),
            sym(&t, "1*2"),
            Symbol::empty(),
        ];
        assert!(matches!(
            build_morse_graph(&t, &region),
            Err(MorseError::RegionNotClosed { .. })
        ));
    }

    #[test]
    fn acyclicity_checker() {
        assert!(verify_acyclic(&MorseGraph::from_parts(
            vec![],
            vec![],
            vec![]
        )));

        let t = seq(SEVEN_VERTEX_TREE);
        let u = sym(&t, "0*1, 0*1', 1*2");
        let region: Vec<Symbol> = u.subsymbols(&t).collect();
        let g = build_morse_graph(&t, &region).unwrap();
        let mut edges = g.edges().to_vec();
        let e = edges
            .iter()
            .find(|e| e.kind == EdgeKind::Deletion)
            .unwrap()
            .clone();
        edges.push(MorseEdge {
            from: e.to,
            to: e.from,
            ..e
        });
        let classes = (0..g.cells().len()).map(|i| g.class(i)).collect();
        let bad = MorseGraph::from_parts(g.cells().to_vec(), classes, edges);
        assert!(!verify_acyclic(&bad));
    }

    #[test]
    fn long_tree_gradient_paths() {
        let t = seq(PATH_TREE);
        let u = sym(&t, "0*1, 2*3, 3*4', 4*5, 5*6");
        let region = morse_region(&t, &u).unwrap();
        let g = build_morse_graph(&t, &region).unwrap();
        assert!(verify_acyclic(&g));
        let u1 = sym(&t, "0*1, 2*3, 3*4, 3*4'");
        let u2 = sym(&t, "0*1, 1*2, 3*4, 4*5");
        let targets = vec![u1.clone(), u2.clone()];

        let from1 = sym(&t, "0*1, 2*3, 3*4', 4*5");
        let sums = gradient_sum(&g, &from1, &targets).unwrap();
        assert!(sums.contains_key(&u1));

        let from2 = sym(&t, "0*1, 2*3, 4*5, 5*6");
        let sums = gradient_sum(&g, &from2, &targets).unwrap();
        assert!(sums.contains_key(&u2));

        let d = differential(&t, &u);
        assert!(d.contains_key(&u1) && d.contains_key(&u2));
        assert!(!u1.is_subsymbol_of(&u) && !u2.is_subsymbol_of(&u));
        assert_eq!(d, differential_via_graph(&t, &u).unwrap());
    }

    #[test]
    fn gradient_sum_trivial_path() {
        let t = seq(SEVEN_VERTEX_TREE);
        let u = sym(&t, "0*1, 1*2, 1*2'");
        let region: Vec<Symbol> = u.subsymbols(&t).collect();
        let g = build_morse_graph(&t, &region).unwrap();
        let face = sym(&t, "1*2, 1*2'");
        let targets: Vec<Symbol> = region.iter().filter(|c| c.len() == 2).cloned().collect();
        let sums = gradient_sum(&g, &face, &targets).unwrap();
        assert_eq!(sums.len(), 1);
        assert_eq!(sums[&face], Poly::monomial(1, VertexSet::new()));
        assert!(matches!(
            gradient_sum(&g, &sym(&t, "2*3"), &targets),
            Err(MorseError::UnknownCell(_))
        ));
    }

    #[test]
    fn differential_examples() {
        let e = seq("a b");
        let d = differential(&e, &sym(&e, "a*b"));
        assert_eq!(d[&Symbol::empty()], Poly::monomial(1, vs(&e, &["a", "b"])));

        let t = seq(SEVEN_VERTEX_TREE);
        let d = differential(&t, &sym(&t, "0*1, 1*2, 1*2'"));
        assert_eq!(d[&sym(&t, "1*2, 1*2'")], Poly::monomial(1, vs(&t, &["0"])));
    }

    #[test]
    fn complexes() {
        let e = seq("a b");
        let c = assemble_complex(&e);
        assert_eq!(c.ranks(), [1, 1]);
        assert_eq!(c.matrices.len(), 1);
        assert!(verify_d2_zero(&c) && verify_minimal(&c));

        let p = seq("0 1\n1 2");
        let c = assemble_complex(&p);
        assert_eq!(c.ranks(), [1, 2, 1]);

        for text in [SEVEN_VERTEX_TREE, PATH_TREE] {
            let c = assemble_complex(&seq(text));
            assert!(verify_d2_zero(&c), "d^2 != 0 for {text:?}");
            assert!(verify_minimal(&c));
        }
        assert_eq!(assemble_complex(&seq(SEVEN_VERTEX_TREE)).ranks(), [1, 6, 10, 7, 2]);
    }
}
