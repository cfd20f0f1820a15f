//! Forest input, rooted ranking, the generator sequence and K-subgraphs.
//!
//! A [`Forest`] is parsed from a plain edge list. Ranking picks a root per
//! connected component and orders the vertices (= polynomial variables) by
//! increasing distance from the root. Every downstream object is ordered by
//! the resulting [`GeneratorSequence`], the edge monomials in strictly
//! decreasing lexicographic order.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::monomial::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed line: {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: self-loop at {vertex}")]
    SelfLoop { line: usize, vertex: String },
    #[error("line {line}: duplicate edge {a} {b}")]
    DuplicateEdge { line: usize, a: String, b: String },
    #[error("line {line}: edge {a} {b} closes a cycle")]
    Cycle { line: usize, a: String, b: String },
    #[error("line {line}: second order directive")]
    DuplicateOrder { line: usize },
    #[error("line {line}: order directive must list every vertex exactly once")]
    IncompleteOrder { line: usize },
    #[error("line {line}: {source}")]
    Order { line: usize, source: RankError },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RankError {
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("root {root} does not belong to component {component} (or that component already has a root)")]
    RootNotInComponent { root: String, component: usize },
    #[error("expected at most {expected} roots, got {got}")]
    TooManyRoots { expected: usize, got: usize },
    #[error("order directive places {first} before {second} but rank({first}) > rank({second})")]
    OrderViolatesRank { first: String, second: String },
}

/// Acyclic simple graph with labelled vertices.
///
/// Vertex indices follow first appearance in the input document, or the
/// `order:` directive when one is present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Forest {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    explicit_order: bool,
}

impl Forest {
    /// Builds a forest from labels and edges given as index pairs.
    pub fn from_edges<S: Into<String>>(
        labels: Vec<S>,
        edges: &[(usize, usize)],
    ) -> Result<Self, ParseError> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut builder = Builder::new();
        for l in &labels {
            builder.vertex(l);
        }
        for (i, &(a, b)) in edges.iter().enumerate() {
            builder.edge(&labels[a], &labels[b], i + 1)?;
        }
        Ok(builder.finish(false))
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Edges in input order, as index pairs in input orientation.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].contains(&b)
    }

    pub fn has_explicit_order(&self) -> bool {
        self.explicit_order
    }

    /// Connected components, each listing its vertices in vertex order;
    /// components are ordered by their first vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Component index of every vertex, consistent with [`Forest::components`].
    pub fn component_ids(&self) -> Vec<usize> {
        let mut ids = vec![0; self.num_vertices()];
        for (c, comp) in self.components().iter().enumerate() {
            for &v in comp {
                ids[v] = c;
            }
        }
        ids
    }

    /// Subforest induced on `keep`, labels and relative vertex order preserved.
    /// The result carries no order directive, so it may be re-rooted freely.
    pub fn induced(&self, keep: &VertexSet) -> Forest {
        let old: Vec<usize> = (0..self.num_vertices())
            .filter(|v| keep.contains(*v))
            .collect();
        let mut new_index = vec![usize::MAX; self.num_vertices()];
        for (i, &v) in old.iter().enumerate() {
            new_index[v] = i;
        }
        let labels: Vec<String> = old.iter().map(|&v| self.labels[v].clone()).collect();
        let mut adjacency = vec![Vec::new(); old.len()];
        let mut edges = Vec::new();
        for &(a, b) in &self.edges {
            if keep.contains(a) && keep.contains(b) {
                let (na, nb) = (new_index[a], new_index[b]);
                edges.push((na, nb));
                adjacency[na].push(nb);
                adjacency[nb].push(na);
            }
        }
        Forest {
            labels,
            edges,
            adjacency,
            explicit_order: false,
        }
    }

    /// Forest with the given vertices deleted.
    pub fn without(&self, drop: &[usize]) -> Forest {
        let keep: VertexSet = (0..self.num_vertices())
            .filter(|v| !drop.contains(v))
            .collect();
        self.induced(&keep)
    }

    /// Edge-list document that parses back to a forest with the same edges
    /// and the same default variable order. An `order:` directive is added
    /// when the edges alone would not reproduce that order (isolated
    /// vertices, or labels not in first-appearance order).
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let mut appearance: Vec<usize> = Vec::new();
        for &(a, b) in &self.edges {
            for v in [a, b] {
                if !appearance.contains(&v) {
                    appearance.push(v);
                }
            }
        }
        let in_order = appearance.len() == self.labels.len()
            && appearance.iter().enumerate().all(|(i, &v)| i == v);
        if self.explicit_order || !in_order {
            let ranking = rank_vertices(self, None).expect("default roots always rank");
            let order: Vec<&str> = ranking
                .variable_order()
                .iter()
                .map(|&v| self.labels[v].as_str())
                .collect();
            out.push_str(&format!("order: {}\n", order.join(" > ")));
        }
        for &(a, b) in &self.edges {
            out.push_str(&format!("{} {}\n", self.labels[a], self.labels[b]));
        }
        out
    }
}

struct Builder {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<(usize, usize)>,
    edge_set: BTreeSet<(usize, usize)>,
    // union-find for cycle detection
    parent: Vec<usize>,
}

impl Builder {
    fn new() -> Self {
        Self {
            labels: Vec::new(),
            index: HashMap::new(),
            edges: Vec::new(),
            edge_set: BTreeSet::new(),
            parent: Vec::new(),
        }
    }

    fn vertex(&mut self, label: &str) -> usize {
        if let Some(&v) = self.index.get(label) {
            return v;
        }
        let v = self.labels.len();
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), v);
        self.parent.push(v);
        v
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn edge(&mut self, a: &str, b: &str, line: usize) -> Result<(), ParseError> {
        if a == b {
            return Err(ParseError::SelfLoop {
                line,
                vertex: a.to_string(),
            });
        }
        let (va, vb) = (self.vertex(a), self.vertex(b));
        let key = (va.min(vb), va.max(vb));
        if self.edge_set.contains(&key) {
            return Err(ParseError::DuplicateEdge {
                line,
                a: a.to_string(),
                b: b.to_string(),
            });
        }
        let (ra, rb) = (self.find(va), self.find(vb));
        if ra == rb {
            return Err(ParseError::Cycle {
                line,
                a: a.to_string(),
                b: b.to_string(),
            });
        }
        self.parent[ra] = rb;
        self.edge_set.insert(key);
        self.edges.push((va, vb));
        Ok(())
    }

    fn finish(self, explicit_order: bool) -> Forest {
        let mut adjacency = vec![Vec::new(); self.labels.len()];
        for &(a, b) in &self.edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Forest {
            labels: self.labels,
            edges: self.edges,
            adjacency,
            explicit_order,
        }
    }
}

/// Parses the edge-list format: one `TOKEN TOKEN` edge per line, `#`
/// comments, and an optional `order: t1 > t2 > ... > tk` directive.
pub fn parse_forest(text: &str) -> Result<Forest, ParseError> {
    let mut edges: Vec<(String, String, usize)> = Vec::new();
    let mut order: Option<(Vec<String>, usize)> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("order:") {
            if order.is_some() {
                return Err(ParseError::DuplicateOrder { line: line_no });
            }
            let tokens: Vec<String> = rest.split('>').map(|t| t.trim().to_string()).collect();
            if tokens
                .iter()
                .any(|t| t.is_empty() || t.contains(char::is_whitespace))
            {
                return Err(ParseError::Malformed {
                    line: line_no,
                    text: raw.to_string(),
                });
            }
            order = Some((tokens, line_no));
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(ParseError::Malformed {
                line: line_no,
                text: raw.to_string(),
            });
        }
        edges.push((tokens[0].to_string(), tokens[1].to_string(), line_no));
    }

    let mut builder = Builder::new();
    if let Some((tokens, line)) = &order {
        let mut distinct = BTreeSet::new();
        for t in tokens {
            if !distinct.insert(t.as_str()) {
                return Err(ParseError::IncompleteOrder { line: *line });
            }
            builder.vertex(t);
        }
    }
    for (a, b, line) in &edges {
        builder.edge(a, b, *line)?;
    }
    if let Some((tokens, line)) = &order {
        if builder.labels.len() != tokens.len() {
            return Err(ParseError::IncompleteOrder { line: *line });
        }
    }
    let forest = builder.finish(order.is_some());
    if let Some((_, line)) = order {
        rank_vertices(&forest, None).map_err(|source| ParseError::Order { line, source })?;
    }
    Ok(forest)
}

/// Roots, ranks, predecessors and the total variable order of a forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedRanking {
    forest: Forest,
    roots: Vec<usize>,
    rank: Vec<usize>,
    predecessor: Vec<Option<usize>>,
    component: Vec<usize>,
    max_rank: Vec<usize>,
    /// Vertices from largest to smallest variable.
    order: Vec<usize>,
    /// Inverse of `order`: smaller position means larger variable.
    position: Vec<usize>,
}

impl RootedRanking {
    pub fn forest(&self) -> &Forest {
        &self.forest
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    pub fn predecessor(&self, v: usize) -> Option<usize> {
        self.predecessor[v]
    }

    pub fn component_of(&self, v: usize) -> usize {
        self.component[v]
    }

    /// Largest rank in each component.
    pub fn max_ranks(&self) -> &[usize] {
        &self.max_rank
    }

    /// Vertices listed from the largest variable to the smallest.
    pub fn variable_order(&self) -> &[usize] {
        &self.order
    }

    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    /// `a > b` in the variable order.
    pub fn greater(&self, a: usize, b: usize) -> bool {
        self.position[a] < self.position[b]
    }

    pub fn label(&self, v: usize) -> &str {
        self.forest.label(v)
    }
}

/// Ranks every component by BFS distance from its root.
///
/// `roots` gives at most one vertex label per component (in any order);
/// components without a chosen root use their first vertex.
pub fn rank_vertices(forest: &Forest, roots: Option<&[&str]>) -> Result<RootedRanking, RankError> {
    let components = forest.components();
    let component = forest.component_ids();
    let mut chosen: Vec<Option<usize>> = vec![None; components.len()];
    if let Some(list) = roots {
        if list.len() > components.len() {
            return Err(RankError::TooManyRoots {
                expected: components.len(),
                got: list.len(),
            });
        }
        for label in list {
            let v = forest
                .vertex(label)
                .ok_or_else(|| RankError::UnknownVertex(label.to_string()))?;
            let c = component[v];
            if chosen[c].is_some() {
                return Err(RankError::RootNotInComponent {
                    root: label.to_string(),
                    component: c,
                });
            }
            chosen[c] = Some(v);
        }
    }

    let n = forest.num_vertices();
    let mut rank = vec![0; n];
    let mut predecessor = vec![None; n];
    let mut roots_out = Vec::with_capacity(components.len());
    let mut max_rank = Vec::with_capacity(components.len());
    let mut order = Vec::with_capacity(n);
    for (c, comp) in components.iter().enumerate() {
        let root = chosen[c].unwrap_or(comp[0]);
        roots_out.push(root);
        let mut seen = vec![false; n];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in forest.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    rank[w] = rank[v] + 1;
                    predecessor[w] = Some(v);
                    queue.push_back(w);
                }
            }
        }
        let mut members = comp.clone();
        if forest.has_explicit_order() {
            for pair in members.windows(2) {
                if rank[pair[0]] > rank[pair[1]] {
                    return Err(RankError::OrderViolatesRank {
                        first: forest.label(pair[0]).to_string(),
                        second: forest.label(pair[1]).to_string(),
                    });
                }
            }
        }
        members.sort_by_key(|&v| (rank[v], v));
        max_rank.push(members.iter().map(|&v| rank[v]).max().unwrap_or(0));
        order.extend(members);
    }
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    Ok(RootedRanking {
        forest: forest.clone(),
        roots: roots_out,
        rank,
        predecessor,
        component,
        max_rank,
        order,
        position,
    })
}

/// An edge monomial `hi * lo` with `hi > lo` in the variable order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeMonomial {
    pub hi: usize,
    pub lo: usize,
}

impl EdgeMonomial {
    pub fn contains(&self, v: usize) -> bool {
        self.hi == v || self.lo == v
    }

    pub fn other(&self, v: usize) -> usize {
        debug_assert!(self.contains(v));
        if self.hi == v {
            self.lo
        } else {
            self.hi
        }
    }

    pub fn shares_vertex(&self, other: &EdgeMonomial) -> bool {
        self.contains(other.hi) || self.contains(other.lo)
    }

    pub fn support(&self) -> VertexSet {
        VertexSet::from_vertices([self.hi, self.lo])
    }
}

/// The edge monomials of a forest in strictly decreasing lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSequence {
    ranking: RootedRanking,
    entries: Vec<EdgeMonomial>,
    index: HashMap<(usize, usize), usize>,
}

impl GeneratorSequence {
    pub fn ranking(&self) -> &RootedRanking {
        &self.ranking
    }

    pub fn forest(&self) -> &Forest {
        self.ranking.forest()
    }

    pub fn entries(&self) -> &[EdgeMonomial] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, position: usize) -> EdgeMonomial {
        self.entries[position]
    }

    /// Position of the edge `{a, b}` in the sequence, if it is an edge.
    pub fn position_of(&self, a: usize, b: usize) -> Option<usize> {
        self.index.get(&(a.min(b), a.max(b))).copied()
    }

    /// `hi*lo` rendering used in every serialization, e.g. `0*1'`.
    pub fn edge_name(&self, position: usize) -> String {
        let e = self.entries[position];
        format!("{}*{}", self.ranking.label(e.hi), self.ranking.label(e.lo))
    }

    /// Resolves `a*b` (either orientation) to a position.
    pub fn parse_edge(&self, text: &str) -> Option<usize> {
        let (a, b) = text.trim().split_once('*')?;
        let forest = self.forest();
        self.position_of(forest.vertex(a.trim())?, forest.vertex(b.trim())?)
    }
}

impl fmt::Display for GeneratorSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.len()).map(|p| self.edge_name(p)).collect();
        write!(f, "({})", names.join(", "))
    }
}

pub fn generator_sequence(ranking: &RootedRanking) -> GeneratorSequence {
    let forest = ranking.forest();
    let mut entries: Vec<EdgeMonomial> = forest
        .edges()
        .iter()
        .map(|&(a, b)| {
            if ranking.greater(a, b) {
                EdgeMonomial { hi: a, lo: b }
            } else {
                EdgeMonomial { hi: b, lo: a }
            }
        })
        .collect();
    // Decreasing lex: larger `hi` first, then larger `lo`.
    entries.sort_by_key(|e| (ranking.position(e.hi), ranking.position(e.lo)));
    let index = entries
        .iter()
        .enumerate()
        .map(|(i, e)| ((e.hi.min(e.lo), e.hi.max(e.lo)), i))
        .collect();
    GeneratorSequence {
        ranking: ranking.clone(),
        entries,
        index,
    }
}

/// The edges incident to one vertex, as positions in the generator sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KSubgraphIndex {
    pub center: usize,
    pub members: Vec<usize>,
}

/// One K-subgraph per non-isolated vertex, ordered by the variable order of
/// the centers; members are sorted by position.
pub fn k_subgraphs(seq: &GeneratorSequence) -> Vec<KSubgraphIndex> {
    let ranking = seq.ranking();
    ranking
        .variable_order()
        .iter()
        .filter(|&&v| ranking.forest().degree(v) > 0)
        .map(|&center| {
            let mut members: Vec<usize> = ranking
                .forest()
                .neighbors(center)
                .iter()
                .map(|&w| seq.position_of(center, w).expect("neighbor edge"))
                .collect();
            members.sort_unstable();
            KSubgraphIndex { center, members }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const SEVEN_VERTEX_TREE: &str = "0 1\n0 1'\n1 2\n1 2'\n1' 2''\n2 3\n";

    fn labels(r: &RootedRanking, vs: &[usize]) -> Vec<String> {
        vs.iter().map(|&v| r.label(v).to_string()).collect()
    }

    #[test]
    fn parses_path() {
        let f = parse_forest("0 1\n1 2").unwrap();
        assert_eq!(f.num_vertices(), 3);
        assert_eq!(f.num_edges(), 2);
        assert_eq!(f.components().len(), 1);
    }

    #[test]
    fn parses_seven_vertex_tree() {
        let f = parse_forest(SEVEN_VERTEX_TREE).unwrap();
        assert_eq!(f.num_vertices(), 7);
        assert_eq!(f.num_edges(), 6);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            parse_forest("0 1\n1 0"),
            Err(ParseError::DuplicateEdge { line: 2, .. })
        ));
        assert!(matches!(
            parse_forest("a a"),
            Err(ParseError::SelfLoop { line: 1, .. })
        ));
        assert!(matches!(
            parse_forest("a b\nb c\n\nc a"),
            Err(ParseError::Cycle { line: 4, .. })
        ));
        assert!(matches!(
            parse_forest("a b c"),
            Err(ParseError::Malformed { line: 1, .. })
        ));
    }

    #[test]
    fn comments_and_blank_lines() {
        let f = parse_forest("# header\n\n a b # trailing\nb c\n").unwrap();
        assert_eq!(f.labels(), &["a", "b", "c"]);
    }

    #[test]
    fn order_directive() {
        let f = parse_forest("order: 0 > 2 > 1\n0 1\n0 2\n").unwrap();
        assert_eq!(f.labels(), &["0", "2", "1"]);
        let r = rank_vertices(&f, None).unwrap();
        assert_eq!(labels(&r, r.variable_order()), ["0", "2", "1"]);

        // 1 has rank 2 but is listed before 2 (rank 1)
        assert!(matches!(
            parse_forest("order: 0 > 2 > 1\n0 1\n1 2\n"),
            Err(ParseError::Order { line: 1, .. })
        ));
        assert!(matches!(
            parse_forest("order: 0 > 1\n0 1\n1 2\n"),
            Err(ParseError::IncompleteOrder { line: 1 })
        ));
        // isolated vertex through the directive
        let f = parse_forest("order: a > b > z\na b\n").unwrap();
        assert_eq!(f.num_vertices(), 3);
        assert_eq!(f.degree(2), 0);
        assert_eq!(parse_forest(&f.to_edge_list()).unwrap(), f);
    }

    #[test]
    fn ranks_path() {
        let f = parse_forest("0 1\n1 2").unwrap();
        let r = rank_vertices(&f, None).unwrap();
        assert_eq!([r.rank(0), r.rank(1), r.rank(2)], [0, 1, 2]);
        assert_eq!(r.predecessor(2), Some(1));
        assert_eq!(r.predecessor(0), None);

        let r = rank_vertices(&f, Some(&["1"])).unwrap();
        assert_eq!([r.rank(0), r.rank(1), r.rank(2)], [1, 0, 1]);
        assert_eq!(labels(&r, r.variable_order()), ["1", "0", "2"]);
    }

    #[test]
    fn ranks_seven_vertex_tree() {
        let f = parse_forest(SEVEN_VERTEX_TREE).unwrap();
        let r = rank_vertices(&f, None).unwrap();
        assert_eq!(
            labels(&r, r.variable_order()),
            ["0", "1", "1'", "2", "2'", "2''", "3"]
        );
        let ranks: Vec<usize> = r.variable_order().iter().map(|&v| r.rank(v)).collect();
        assert_eq!(ranks, [0, 1, 1, 2, 2, 2, 3]);
        assert_eq!(r.max_ranks(), &[3]);
    }

    #[test]
    fn root_errors() {
        let f = parse_forest("a b\nc d\n").unwrap();
        assert!(matches!(
            rank_vertices(&f, Some(&["q"])),
            Err(RankError::UnknownVertex(_))
        ));
        assert!(matches!(
            rank_vertices(&f, Some(&["a", "b"])),
            Err(RankError::RootNotInComponent { .. })
        ));
        let r = rank_vertices(&f, Some(&["d", "b"])).unwrap();
        assert_eq!(labels(&r, r.roots()), ["b", "d"]);
        assert_eq!(labels(&r, r.variable_order()), ["b", "a", "d", "c"]);
    }

    fn seq_names(text: &str) -> Vec<String> {
        let r = rank_vertices(&parse_forest(text).unwrap(), None).unwrap();
        let s = generator_sequence(&r);
        (0..s.len()).map(|p| s.edge_name(p)).collect()
    }

    #[test]
    fn generator_sequences() {
        assert_eq!(
            seq_names(SEVEN_VERTEX_TREE),
            ["0*1", "0*1'", "1*2", "1*2'", "1'*2''", "2*3"]
        );
        assert_eq!(seq_names("a b"), ["a*b"]);
        assert_eq!(
            seq_names("0 1\n1 2\n2 3\n3 4\n3 4'\n4 5\n5 6\n"),
            ["0*1", "1*2", "2*3", "3*4", "3*4'", "4*5", "5*6"]
        );
    }

    #[test]
    fn k_subgraphs_of_seven_vertex_tree() {
        let r = rank_vertices(&parse_forest(SEVEN_VERTEX_TREE).unwrap(), None).unwrap();
        let s = generator_sequence(&r);
        let ks: Vec<(String, Vec<String>)> = k_subgraphs(&s)
            .into_iter()
            .filter(|k| k.members.len() > 1)
            .map(|k| {
                (
                    r.label(k.center).to_string(),
                    k.members.iter().map(|&p| s.edge_name(p)).collect(),
                )
            })
            .collect();
        let expect = [
            ("0", vec!["0*1", "0*1'"]),
            ("1", vec!["0*1", "1*2", "1*2'"]),
            ("1'", vec!["0*1'", "1'*2''"]),
            ("2", vec!["1*2", "2*3"]),
        ];
        assert_eq!(ks.len(), expect.len());
        for ((c, m), (ec, em)) in ks.iter().zip(expect.iter()) {
            assert_eq!(c, ec);
            assert_eq!(m, em);
        }
        // leaves 2', 2'', 3 carry singleton K-subgraphs
        assert_eq!(k_subgraphs(&s).len(), 7);
    }

    #[test]
    fn k_subgraphs_small() {
        let r = rank_vertices(&parse_forest("a b").unwrap(), None).unwrap();
        let ks = k_subgraphs(&generator_sequence(&r));
        assert_eq!(ks.len(), 2);
        assert!(ks.iter().all(|k| k.members.len() == 1));

        let r = rank_vertices(&parse_forest("c x\nc y\nc z").unwrap(), None).unwrap();
        let ks = k_subgraphs(&generator_sequence(&r));
        let mut sizes: Vec<usize> = ks.iter().map(|k| k.members.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, [1, 1, 1, 3]);
        assert_eq!(ks[0].center, 0);
    }
}
