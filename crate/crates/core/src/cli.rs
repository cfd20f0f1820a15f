//! Batch driver behind the `forest-res` binary.
//!
//! Every command reads one forest (or generates a seeded corpus), runs a
//! pipeline stage and renders the result as text, JSON or CSV. Commands
//! return an [`Outcome`] instead of printing so they can be tested directly.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use serde_json::{json, Value};
use thiserror::Error;

use crate::betti::{
    betti_by_induced_subgraphs, betti_from_symbols, betti_json, jacques_betti, jacques_pd,
    pd_bouquet_formula, BettiError, GradedBettiTable, MultigradedBettiTable,
};
use crate::forest::{
    generator_sequence, k_subgraphs, parse_forest, rank_vertices, Forest, GeneratorSequence,
};
use crate::monomial::{Poly, VertexSet};
use crate::morse::{
    assemble_complex, build_morse_graph, differential, gradient_paths, morse_region,
    verify_acyclic, verify_d2_zero, verify_minimal, ChainComplex, EdgeKind, MorseError,
};
use crate::oracle::{
    betti_via_complex, betti_via_homology, compare_tables, lyubeznik_basis, DEFAULT_PRIME,
    SECOND_PRIME,
};
use crate::random::random_corpus;
use crate::symbols::{
    all_symbols, class_report, enumerate_f_admissible_filter, enumerate_f_admissible_procedure,
    Symbol, SymbolClass, SymbolError, DEFAULT_CAP,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    Procedure,
    Filter,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomSpec {
    pub count: usize,
    pub max_edges: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DotGraph {
    Dual,
    Region,
    #[default]
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Symbols {
        method: Method,
        /// Classify every symbol, not just the F-admissible ones.
        classify_all: bool,
    },
    Betti,
    Pd,
    Resolution,
    Verify {
        random: Option<RandomSpec>,
        /// Replace one differential entry by a constant before checking.
        corrupt: bool,
    },
    Dot {
        graph: DotGraph,
        column: Option<String>,
        target: Option<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    /// Forest document; `None` means it was read by the caller.
    pub input: Option<PathBuf>,
    pub command: Command,
    pub roots: Option<Vec<String>>,
    pub format: Format,
    pub primes: Vec<u64>,
    pub cap: usize,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            input: None,
            command,
            roots: None,
            format: Format::Text,
            primes: vec![DEFAULT_PRIME, SECOND_PRIME],
            cap: DEFAULT_CAP,
            out: None,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error("cap exceeded: {0}")]
    Cap(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Cap(_) => 4,
        }
    }
}

impl From<SymbolError> for CliError {
    fn from(e: SymbolError) -> Self {
        match e {
            SymbolError::CapExceeded { .. } => CliError::Cap(e.to_string()),
            other => CliError::Parse(other.to_string()),
        }
    }
}

impl From<BettiError> for CliError {
    fn from(e: BettiError) -> Self {
        match e {
            BettiError::CapExceeded { .. } => CliError::Cap(e.to_string()),
            BettiError::Symbol(s) => s.into(),
            other => CliError::Parse(other.to_string()),
        }
    }
}

impl From<MorseError> for CliError {
    fn from(e: MorseError) -> Self {
        match e {
            MorseError::RegionTooLarge(_) => CliError::Cap(e.to_string()),
            other => CliError::Parse(other.to_string()),
        }
    }
}

pub const EXIT_DISAGREEMENT: i32 = 3;

/// Rendered output and the exit status it implies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Self { output, code: 0 }
    }
}

/// Runs `cfg.command` on the forest document `text` (ignored by
/// `verify --random`).
pub fn run(cfg: &RunConfig, text: &str) -> Result<Outcome, CliError> {
    if cfg.cap == 0 {
        return Err(CliError::Usage("--cap must be positive".into()));
    }
    if cfg.primes.is_empty() || cfg.primes.iter().any(|&p| !is_odd_prime(p)) {
        return Err(CliError::Usage(
            "--prime takes odd primes below 2^31".into(),
        ));
    }
    if let Command::Verify {
        random: Some(spec),
        corrupt,
    } = &cfg.command
    {
        return cmd_verify_random(cfg, *spec, *corrupt);
    }
    let forest = parse_forest(text).map_err(|e| CliError::Parse(e.to_string()))?;
    let seq = sequence(&forest, cfg.roots.as_deref())?;
    match &cfg.command {
        Command::Symbols {
            method,
            classify_all,
        } => cmd_symbols(cfg, &seq, *method, *classify_all),
        Command::Betti => cmd_betti(cfg, &seq),
        Command::Pd => cmd_pd(cfg, &seq),
        Command::Resolution => cmd_resolution(cfg, &seq),
        Command::Verify { corrupt, .. } => {
            let report = verify_forest(&seq, cfg, *corrupt)?;
            let code = if report.agree { 0 } else { EXIT_DISAGREEMENT };
            let output = match cfg.format {
                Format::Json => pretty(&report.json),
                Format::Text => report.summary_line() + "\n",
                Format::Csv => format!("forest,agree\n{:?},{}\n", report.forest_text, report.agree),
            };
            Ok(Outcome { output, code })
        }
        Command::Dot {
            graph,
            column,
            target,
        } => cmd_dot(&seq, *graph, column.as_deref(), target.as_deref()),
    }
}

fn is_odd_prime(p: u64) -> bool {
    p > 2
        && p < 1 << 31
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

fn sequence(forest: &Forest, roots: Option<&[String]>) -> Result<GeneratorSequence, CliError> {
    let roots: Option<Vec<&str>> = roots.map(|r| r.iter().map(String::as_str).collect());
    let ranking =
        rank_vertices(forest, roots.as_deref()).map_err(|e| CliError::Parse(e.to_string()))?;
    Ok(generator_sequence(&ranking))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize") + "\n"
}

fn labels(forest: &Forest, a: &VertexSet) -> Vec<String> {
    a.iter().map(|v| forest.label(v).to_string()).collect()
}

fn order_labels(seq: &GeneratorSequence) -> Vec<String> {
    let r = seq.ranking();
    r.variable_order()
        .iter()
        .map(|&v| r.label(v).to_string())
        .collect()
}

fn symbols_by(
    seq: &GeneratorSequence,
    method: Method,
    cap: usize,
) -> Result<Vec<Symbol>, CliError> {
    Ok(match method {
        Method::Procedure | Method::Both => enumerate_f_admissible_procedure(seq),
        Method::Filter => enumerate_f_admissible_filter(seq, cap)?,
    })
}

pub fn cmd_symbols(
    cfg: &RunConfig,
    seq: &GeneratorSequence,
    method: Method,
    classify_all: bool,
) -> Result<Outcome, CliError> {
    let symbols = symbols_by(seq, method, cfg.cap)?;
    let mut agree = true;
    if method == Method::Both {
        agree = symbols == enumerate_f_admissible_filter(seq, cfg.cap)?;
    }
    let top = symbols.iter().map(Symbol::len).max().unwrap_or(0);
    let mut counts = vec![0usize; top + 1];
    for u in &symbols {
        counts[u.len()] += 1;
    }
    let reports = if classify_all {
        Some(
            all_symbols(seq, cfg.cap)?
                .iter()
                .map(|u| class_report(seq, u))
                .collect::<Vec<_>>(),
        )
    } else {
        None
    };
    let output = match cfg.format {
        Format::Json => {
            let mut v = json!({
                "order": order_labels(seq),
                "sequence": (0..seq.len()).map(|p| seq.edge_name(p)).collect::<Vec<_>>(),
                "symbols": symbols.iter().map(|u| u.names(seq)).collect::<Vec<_>>(),
                "counts": counts,
            });
            if method == Method::Both {
                v["methods_agree"] = json!(agree);
            }
            if let Some(r) = &reports {
                v["classification"] = serde_json::to_value(r).expect("reports serialize");
            }
            pretty(&v)
        }
        Format::Csv => {
            let mut out = String::from("length,symbol\n");
            for u in &symbols {
                let _ = writeln!(out, "{},{}", u.len(), u.names(seq).join(" "));
            }
            if let Some(r) = &reports {
                out.push_str("\nsymbol,class,gaps,bridges\n");
                for rep in r {
                    let gaps: Vec<String> = rep
                        .gaps
                        .iter()
                        .map(|g| format!("{}>{}/{}", g.upper, g.lower, g.bridge))
                        .collect();
                    let _ = writeln!(
                        out,
                        "{},{},{},{}",
                        rep.symbol.join(" "),
                        rep.class,
                        gaps.join(" "),
                        rep.bridges.join(" ")
                    );
                }
            }
            out
        }
        Format::Text => {
            let mut out = format!("order: {}\n", order_labels(seq).join(" > "));
            let _ = writeln!(out, "S = {seq}");
            for (r, count) in counts.iter().enumerate() {
                let _ = writeln!(out, "r = {r}: {count} symbols");
                for u in symbols.iter().filter(|u| u.len() == r) {
                    let _ = writeln!(out, "  {}", u.display(seq));
                }
            }
            if method == Method::Both {
                let _ = writeln!(out, "methods agree: {agree}");
            }
            if let Some(r) = &reports {
                out.push_str("classification:\n");
                for rep in r {
                    let _ = write!(out, "  ({}) {}", rep.symbol.join(", "), rep.class);
                    for g in &rep.gaps {
                        let _ = write!(out, " gap[{} > {} via {}]", g.upper, g.lower, g.bridge);
                    }
                    if !rep.bridges.is_empty() {
                        let _ = write!(out, " bridges[{}]", rep.bridges.join(", "));
                    }
                    out.push('\n');
                }
            }
            out
        }
    };
    Ok(Outcome {
        output,
        code: if agree { 0 } else { EXIT_DISAGREEMENT },
    })
}

fn tables(seq: &GeneratorSequence) -> Result<(MultigradedBettiTable, GradedBettiTable), CliError> {
    Ok(betti_from_symbols(&enumerate_f_admissible_procedure(seq))?)
}

pub fn cmd_betti(cfg: &RunConfig, seq: &GeneratorSequence) -> Result<Outcome, CliError> {
    let (m, g) = tables(seq)?;
    let output = match cfg.format {
        Format::Json => pretty(&betti_json(seq.forest(), Some(&m), &g)),
        Format::Csv => {
            let mut out = String::from("r,d,value\n");
            for (&(r, d), v) in &g.entries {
                let _ = writeln!(out, "{r},{d},{v}");
            }
            out
        }
        Format::Text => format!("{}pd: {}\n", g.grid(), g.pd()),
    };
    Ok(Outcome::ok(output))
}

pub fn cmd_pd(cfg: &RunConfig, seq: &GeneratorSequence) -> Result<Outcome, CliError> {
    let (_, g) = tables(seq)?;
    let output = match cfg.format {
        Format::Json => pretty(&json!({"pd": g.pd()})),
        Format::Csv => format!("pd\n{}\n", g.pd()),
        Format::Text => format!("{}\n", g.pd()),
    };
    Ok(Outcome::ok(output))
}

fn monomial_text(forest: &Forest, m: &VertexSet) -> String {
    if m.is_empty() {
        "1".into()
    } else {
        m.iter()
            .map(|v| forest.label(v))
            .collect::<Vec<_>>()
            .join("*")
    }
}

fn poly_text(forest: &Forest, p: &Poly) -> String {
    let mut out = String::new();
    for (m, c) in p.terms() {
        let sign = if c < 0 { '-' } else { '+' };
        match c.abs() {
            1 => {
                let _ = write!(out, "{sign}{}", monomial_text(forest, m));
            }
            k => {
                let _ = write!(out, "{sign}{k}*{}", monomial_text(forest, m));
            }
        }
    }
    out
}

fn poly_json(forest: &Forest, p: &Poly) -> Value {
    Value::Array(
        p.terms()
            .map(|(m, c)| json!({"coeff": c, "monomial": labels(forest, m)}))
            .collect(),
    )
}

pub fn resolution_json(seq: &GeneratorSequence, c: &ChainComplex) -> Value {
    let forest = seq.forest();
    let generators: Vec<Value> = c
        .bases
        .iter()
        .enumerate()
        .map(|(r, b)| {
            json!({
                "degree": r,
                "symbols": b.iter().map(|u| json!({
                    "symbol": u.names(seq),
                    "multidegree": labels(forest, u.support()),
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    let matrices: Vec<Value> = c
        .matrices
        .iter()
        .map(|m| {
            json!({
                "degree": m.degree,
                "rows": m.rows.len(),
                "cols": m.cols.len(),
                "entries": m.entries.iter().map(|(&(i, j), p)| json!({
                    "row": i, "col": j, "terms": poly_json(forest, p),
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    let findings: Vec<Value> = c
        .multiplicity_findings()
        .into_iter()
        .map(|(r, col, row, p)| {
            json!({"degree": r, "col": col.names(seq), "row": row.names(seq), "entry": poly_json(forest, &p)})
        })
        .collect();
    json!({
        "generators": generators,
        "matrices": matrices,
        "d2_zero": verify_d2_zero(c),
        "minimal": verify_minimal(c),
        "multiplicity_findings": findings,
    })
}

pub fn cmd_resolution(cfg: &RunConfig, seq: &GeneratorSequence) -> Result<Outcome, CliError> {
    let c = assemble_complex(seq);
    let forest = seq.forest();
    let output = match cfg.format {
        Format::Json => pretty(&resolution_json(seq, &c)),
        Format::Csv => {
            let mut out = String::from("degree,row,col,coeff,monomial\n");
            for m in &c.matrices {
                for (&(i, j), p) in &m.entries {
                    for (mono, coeff) in p.terms() {
                        let _ = writeln!(
                            out,
                            "{},{i},{j},{coeff},{}",
                            m.degree,
                            monomial_text(forest, mono)
                        );
                    }
                }
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            let ranks: Vec<String> = c.ranks().iter().map(usize::to_string).collect();
            let _ = writeln!(out, "ranks: {}", ranks.join(" "));
            for m in &c.matrices {
                let _ = writeln!(out, "d_{} ({} x {}):", m.degree, m.rows.len(), m.cols.len());
                for (j, u) in m.cols.iter().enumerate() {
                    let terms: Vec<String> = m
                        .entries
                        .range((0, j)..)
                        .filter(|(&(_, col), _)| col == j)
                        .map(|(&(i, _), p)| {
                            format!("({}) {}", poly_text(forest, p), m.rows[i].display(seq))
                        })
                        .collect();
                    let _ = writeln!(out, "  {} -> {}", u.display(seq), terms.join(" "));
                }
            }
            let _ = writeln!(out, "d^2 = 0: {}", verify_d2_zero(&c));
            let _ = writeln!(out, "minimal: {}", verify_minimal(&c));
            out
        }
    };
    Ok(Outcome::ok(output))
}

/// Result of running every route on one forest.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub forest_text: String,
    pub agree: bool,
    pub failures: Vec<String>,
    pub json: Value,
}

impl VerifyReport {
    pub fn summary_line(&self) -> String {
        if self.agree {
            format!("agree: {}", self.forest_text.trim().replace('\n', "; "))
        } else {
            format!(
                "DISAGREE: {} [{}]",
                self.forest_text.trim().replace('\n', "; "),
                self.failures.join(", ")
            )
        }
    }
}

/// Puts a constant into one entry of the top differential.
pub fn corrupt_complex(c: &mut ChainComplex) -> bool {
    let Some(m) = c.matrices.iter_mut().rev().find(|m| !m.entries.is_empty()) else {
        return false;
    };
    let entry = m.entries.values_mut().next().expect("nonempty");
    let sign = entry.terms().next().map_or(1, |(_, c)| c.signum());
    *entry = Poly::monomial(sign, VertexSet::new());
    true
}

/// Symbols, Taylor and Lyubeznik homology, the recursion, the induced
/// subforest scan and the block census, plus the checks on the complex.
pub fn verify_forest(
    seq: &GeneratorSequence,
    cfg: &RunConfig,
    corrupt: bool,
) -> Result<VerifyReport, CliError> {
    let forest = seq.forest();
    let symbols = enumerate_f_admissible_procedure(seq);
    let mut failures = Vec::new();
    let mut diffs = Vec::new();

    let (multi, graded) = match betti_from_symbols(&symbols) {
        Ok(t) => t,
        Err(e @ BettiError::DuplicateMultidegree { .. }) => {
            failures.push(e.to_string());
            let mut m = MultigradedBettiTable::default();
            for u in &symbols {
                m.add(u.len(), u.support().clone(), 1);
            }
            let g = m.graded();
            (m, g)
        }
        Err(e) => return Err(e.into()),
    };
    if symbols != enumerate_f_admissible_filter(seq, cfg.cap)? {
        failures.push("procedure and filter differ".into());
    }

    let taylor_basis = all_symbols(seq, cfg.cap)?;
    let lyubeznik = lyubeznik_basis(seq, cfg.cap)?;
    let mut routes = serde_json::Map::new();
    routes.insert("symbols".into(), betti_json(forest, Some(&multi), &graded));
    let mut compare = |name: String,
                       table: &MultigradedBettiTable,
                       routes: &mut serde_json::Map<String, Value>| {
        let d = compare_tables(&multi, table);
        if !d.is_empty() {
            failures.push(format!("{name} table differs"));
            for x in &d {
                let mut v = x.to_json(forest);
                v["route"] = json!(name);
                diffs.push(v);
            }
        }
        routes.insert(name, betti_json(forest, Some(table), &table.graded()));
    };
    for (i, &p) in cfg.primes.iter().enumerate() {
        let suffix = if i == 0 {
            String::new()
        } else {
            format!("@{p}")
        };
        compare(
            format!("taylor{suffix}"),
            &betti_via_homology(&taylor_basis, p),
            &mut routes,
        );
        compare(
            format!("lyubeznik{suffix}"),
            &betti_via_homology(&lyubeznik, p),
            &mut routes,
        );
    }

    let mut complex = assemble_complex(seq);
    if corrupt {
        corrupt_complex(&mut complex);
    }
    let (d2, minimal) = (verify_d2_zero(&complex), verify_minimal(&complex));
    let via_complex = betti_via_complex(&complex, cfg.primes[0]);
    compare("complex".into(), &via_complex, &mut routes);
    if !d2 {
        failures.push("d^2 != 0".into());
    }
    if !minimal {
        failures.push("complex is not minimal".into());
    }

    let jacques = jacques_betti(forest);
    let induced = betti_by_induced_subgraphs(forest, cfg.cap)?;
    for (name, table) in [("jacques", &jacques), ("induced", &induced)] {
        if table != &graded {
            failures.push(format!("{name} graded table differs"));
        }
        routes.insert(name.into(), betti_json(forest, None, table));
    }

    let pd = graded.pd();
    let j_pd = jacques_pd(forest);
    let mut bouquet = Vec::new();
    for u in &symbols {
        match pd_bouquet_formula(seq, u, &symbols) {
            Ok(v) => {
                if v != u.len() {
                    failures.push(format!("block census {} != {}", v, u.len()));
                }
                bouquet.push(json!({"symbol": u.names(seq), "value": v}));
            }
            Err(BettiError::NotMaximal(_)) => {}
            Err(e) => return Err(e.into()),
        }
    }
    let bouquet_max = bouquet
        .iter()
        .filter_map(|b| b["value"].as_u64())
        .max()
        .unwrap_or(0) as usize;
    if j_pd != pd || bouquet_max != pd {
        failures.push(format!("pd mismatch: {pd} / {j_pd} / {bouquet_max}"));
    }

    let agree = failures.is_empty();
    let forest_text = forest.to_edge_list();
    let json = json!({
        "forest": forest_text,
        "routes": Value::Object(routes),
        "pd": {"symbols": pd, "jacques": j_pd, "bouquet": bouquet},
        "complex": {"d2_zero": d2, "minimal": minimal, "corrupted": corrupt},
        "agree": agree,
        "failures": failures,
        "diffs": diffs,
    });
    Ok(VerifyReport {
        forest_text,
        agree,
        failures,
        json,
    })
}

fn cmd_verify_random(
    cfg: &RunConfig,
    spec: RandomSpec,
    corrupt: bool,
) -> Result<Outcome, CliError> {
    let corpus = random_corpus(spec.count, spec.max_edges, spec.seed);
    let mut reports = Vec::with_capacity(corpus.len());
    for forest in &corpus {
        let seq = sequence(forest, None)?;
        reports.push(verify_forest(&seq, cfg, corrupt)?);
    }
    let agree = reports.iter().all(|r| r.agree);
    let failed = reports.iter().filter(|r| !r.agree).count();
    let output = match cfg.format {
        Format::Json => pretty(&json!({
            "seed": spec.seed,
            "count": spec.count,
            "max_edges": spec.max_edges,
            "agree": agree,
            "instances": reports.iter().map(|r| r.json.clone()).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut out = String::from("index,edges,agree\n");
            for (i, (f, r)) in corpus.iter().zip(&reports).enumerate() {
                let _ = writeln!(out, "{i},{},{}", f.num_edges(), r.agree);
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for r in &reports {
                let _ = writeln!(out, "{}", r.summary_line());
            }
            let _ = writeln!(
                out,
                "{} of {} forests agree",
                reports.len() - failed,
                reports.len()
            );
            out
        }
    };
    Ok(Outcome {
        output,
        code: if agree { 0 } else { EXIT_DISAGREEMENT },
    })
}

fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn cell_name(seq: &GeneratorSequence, u: &Symbol) -> String {
    u.display(seq).to_string()
}

/// Dual graph: one node per edge of the forest, adjacent when the edges
/// meet; each maximal clique (K-subgraph) is a labeled subgraph.
pub fn dual_graph_dot(seq: &GeneratorSequence) -> String {
    let forest = seq.forest();
    let mut out = String::from("graph dual {\n  node [shape=box];\n");
    for p in 0..seq.len() {
        let _ = writeln!(out, "  {};", dot_id(&seq.edge_name(p)));
    }
    for k in k_subgraphs(seq) {
        let single_edge = k.members.len() == 1 && {
            let e = seq.get(k.members[0]);
            forest.degree(e.other(k.center)) == 1 && e.hi == k.center
        };
        if k.members.len() < 2 && !single_edge {
            continue;
        }
        let name = forest.label(k.center);
        let _ = writeln!(out, "  subgraph {} {{", dot_id(&format!("K[{name}]")));
        let _ = writeln!(out, "    label={};", dot_id(&format!("[{name}]")));
        for &p in &k.members {
            let _ = writeln!(out, "    {};", dot_id(&seq.edge_name(p)));
        }
        for (i, &a) in k.members.iter().enumerate() {
            for &b in &k.members[i + 1..] {
                let _ = writeln!(
                    out,
                    "    {} -- {} [label={}];",
                    dot_id(&seq.edge_name(a)),
                    dot_id(&seq.edge_name(b)),
                    dot_id(&format!("[{name}]"))
                );
            }
        }
        out.push_str("  }\n");
    }
    out.push_str("}\n");
    out
}

/// Morse graph on the region of `column`, with matched (reversed) edges
/// highlighted and every gradient path from `column` to each target listed
/// in comments and marked on its edges.
pub fn morse_region_dot(
    seq: &GeneratorSequence,
    column: &Symbol,
    targets: &[Symbol],
) -> Result<String, CliError> {
    let region = morse_region(seq, column)?;
    let graph = build_morse_graph(seq, &region)?;
    let mut path_list: Vec<Vec<usize>> = Vec::new();
    let col_id = graph.id(column).expect("column in its region");
    for t in targets {
        let Some(t_id) = graph.id(t) else {
            return Err(CliError::Parse(format!(
                "unknown cell {}",
                cell_name(seq, t)
            )));
        };
        for (_, _, face) in column.faces(seq) {
            let f_id = graph.id(&face).expect("faces stay in the region");
            for mut p in gradient_paths(&graph, f_id, t_id) {
                p.insert(0, col_id);
                path_list.push(p);
            }
        }
    }
    let mut on_path: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (k, p) in path_list.iter().enumerate() {
        for w in p.windows(2) {
            on_path.entry((w[0], w[1])).or_default().push(k + 1);
        }
    }

    let mut out = format!(
        "digraph region {{\n  label={};\n  node [shape=box];\n",
        dot_id(&format!("Morse region of {}", cell_name(seq, column)))
    );
    if !verify_acyclic(&graph) {
        out.push_str("  // warning: directed cycle\n");
    }
    for (k, p) in path_list.iter().enumerate() {
        let cells: Vec<String> = p
            .iter()
            .map(|&c| cell_name(seq, &graph.cells()[c]))
            .collect();
        let _ = writeln!(out, "  // path {}: {}", k + 1, cells.join(" -> "));
    }
    for (id, cell) in graph.cells().iter().enumerate() {
        let class = graph.class(id);
        let style = match class {
            SymbolClass::FAdmissible => ", peripheries=2",
            _ => "",
        };
        let _ = writeln!(
            out,
            "  {} [label={}{style}];",
            dot_id(&cell_name(seq, cell)),
            dot_id(&format!("{}\\n{class}", cell_name(seq, cell)))
        );
    }
    for e in graph.edges() {
        let mut attrs = Vec::new();
        if e.kind == EdgeKind::Insertion {
            attrs.push("color=red, penwidth=2, style=bold".to_string());
        }
        if let Some(ks) = on_path.get(&(e.from, e.to)) {
            let names: Vec<String> = ks.iter().map(|k| format!("P{k}")).collect();
            attrs.push(format!(
                "fontcolor=blue, xlabel={}",
                dot_id(&names.join(","))
            ));
        }
        let _ = writeln!(
            out,
            "  {} -> {}{};",
            dot_id(&cell_name(seq, &graph.cells()[e.from])),
            dot_id(&cell_name(seq, &graph.cells()[e.to])),
            if attrs.is_empty() {
                String::new()
            } else {
                format!(" [{}]", attrs.join(", "))
            }
        );
    }
    // faces of the column that start the listed paths
    for (&(a, b), ks) in &on_path {
        if a == col_id && !graph.edges().iter().any(|e| e.from == a && e.to == b) {
            let names: Vec<String> = ks.iter().map(|k| format!("P{k}")).collect();
            let _ = writeln!(
                out,
                "  {} -> {} [color=blue, xlabel={}];",
                dot_id(&cell_name(seq, &graph.cells()[a])),
                dot_id(&cell_name(seq, &graph.cells()[b])),
                dot_id(&names.join(","))
            );
        }
    }
    out.push_str("}\n");
    Ok(out)
}

pub fn cmd_dot(
    seq: &GeneratorSequence,
    which: DotGraph,
    column: Option<&str>,
    target: Option<&str>,
) -> Result<Outcome, CliError> {
    let parse = |s: &str| Symbol::parse(seq, s).map_err(CliError::from);
    let mut out = String::new();
    if which != DotGraph::Region {
        out.push_str(&dual_graph_dot(seq));
    }
    if which != DotGraph::Dual {
        let column = match column {
            Some(text) => parse(text)?,
            None => enumerate_f_admissible_procedure(seq)
                .pop()
                .expect("the empty symbol is always present"),
        };
        let targets: Vec<Symbol> = match target {
            Some(text) => vec![parse(text)?],
            None if column.is_empty() => Vec::new(),
            None => differential(seq, &column)
                .into_keys()
                .filter(|t| !t.is_subsymbol_of(&column))
                .collect(),
        };
        out.push_str(&morse_region_dot(seq, &column, &targets)?);
    }
    Ok(Outcome::ok(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SEVEN_VERTEX_TREE: &str = "0 1\n0 1'\n1 2\n1 2'\n1' 2''\n2 3\n";

    #[test]
    fn exit_codes() {
        let cfg = RunConfig::new(Command::Betti);
        assert_eq!(run(&cfg, "0 1\n1 0").unwrap_err().exit_code(), 2);
        let mut capped = RunConfig::new(Command::Symbols {
            method: Method::Filter,
            classify_all: false,
        });
        capped.cap = 3;
        assert_eq!(run(&capped, SEVEN_VERTEX_TREE).unwrap_err().exit_code(), 4);
        capped.cap = 0;
        assert_eq!(run(&capped, SEVEN_VERTEX_TREE).unwrap_err().exit_code(), 1);
    }

    #[test]
    fn verify_detects_corruption() {
        let good = RunConfig::new(Command::Verify {
            random: None,
            corrupt: false,
        });
        assert_eq!(run(&good, SEVEN_VERTEX_TREE).unwrap().code, 0);
        let bad = RunConfig::new(Command::Verify {
            random: None,
            corrupt: true,
        });
        assert_eq!(run(&bad, SEVEN_VERTEX_TREE).unwrap().code, EXIT_DISAGREEMENT);
    }

    #[test]
    fn dual_graph_cliques() {
        let forest = parse_forest(SEVEN_VERTEX_TREE).unwrap();
        let seq = sequence(&forest, None).unwrap();
        let dot = dual_graph_dot(&seq);
        for k in ["K[0]", "K[1]", "K[1']", "K[2]"] {
            assert!(dot.contains(&format!("subgraph \"{k}\"")), "{k}");
        }
        assert_eq!(dot.matches("subgraph").count(), 4);
    }
}
