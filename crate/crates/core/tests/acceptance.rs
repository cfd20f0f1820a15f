//! Acceptance suite: one PASS/FAIL line per criterion; exits nonzero if
//! any criterion fails.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use forest_resolution::betti::{
    betti_by_induced_subgraphs, betti_from_symbols, componentwise_multigraded, jacques_betti,
    jacques_pd, pd_bouquet_formula, GradedBettiTable,
};
use forest_resolution::cli::morse_region_dot;
use forest_resolution::morse::{
    assemble_complex, build_morse_graph, differential, morse_region, verify_acyclic,
    verify_d2_zero, verify_minimal,
};
use forest_resolution::oracle::{betti_via_homology, compare_tables, lyubeznik_basis};
use forest_resolution::random::random_corpus;
use forest_resolution::symbols::{
    all_symbols, classify, enumerate_f_admissible_filter, enumerate_f_admissible_procedure,
    matching_delete, matching_insert, SymbolClass, DEFAULT_CAP,
};
use forest_resolution::{
    generator_sequence, parse_forest, rank_vertices, Forest, GeneratorSequence, Symbol,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEVEN_VERTEX_TREE: &str = "0 1\n0 1'\n1 2\n1 2'\n1' 2''\n2 3\n";
const PATH_TREE: &str = "0 1\n1 2\n2 3\n3 4\n3 4'\n4 5\n5 6\n";

const CORPUS_SIZE: usize = 200;
const SMALL_EDGES: usize = 8;
const LARGE_EDGES: usize = 10;
const SEED_LARGE: u64 = 2024;
const SEED_SMALL: u64 = 1729;
const ROOT_CHOICES: usize = 3;
const PRIMES: [u64; 2] = [32003, 101];

const LIMIT_EXAMPLES: Duration = Duration::from_secs(1);
const LIMIT_EQUIVALENCE: Duration = Duration::from_secs(60);
const LIMIT_ORACLE: Duration = Duration::from_secs(300);

struct Verdict {
    pass: bool,
    detail: String,
}

fn check(pass: bool, detail: String) -> Verdict {
    Verdict { pass, detail }
}

fn seq_of(forest: &Forest, roots: Option<&[String]>) -> GeneratorSequence {
    let roots: Option<Vec<&str>> = roots.map(|r| r.iter().map(String::as_str).collect());
    generator_sequence(&rank_vertices(forest, roots.as_deref()).expect("valid roots"))
}

fn table(seq: &GeneratorSequence) -> GradedBettiTable {
    betti_from_symbols(&enumerate_f_admissible_procedure(seq))
        .unwrap()
        .1
}

/// Every combination of one root per component.
fn all_root_choices(forest: &Forest) -> Vec<Vec<String>> {
    let mut out: Vec<Vec<String>> = vec![Vec::new()];
    for comp in forest.components() {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                comp.iter().map(move |&v| {
                    let mut p = prefix.clone();
                    p.push(forest.label(v).to_string());
                    p
                })
            })
            .collect();
    }
    out
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let forest = parse_forest(SEVEN_VERTEX_TREE).unwrap();
    let g = table(&seq_of(&forest, None));
    let expected = GradedBettiTable::from_entries([
        ((0, 0), 1),
        ((1, 2), 6),
        ((2, 3), 6),
        ((2, 4), 4),
        ((3, 4), 1),
        ((3, 5), 6),
        ((4, 6), 2),
    ]);
    let elapsed = start.elapsed();
    check(
        g == expected && g.pd() == 4 && elapsed < LIMIT_EXAMPLES,
        format!(
            "seven-vertex table exact, pd {} ({elapsed:.2?}, limit {LIMIT_EXAMPLES:?})",
            g.pd()
        ),
    )
}

fn criterion_2() -> Verdict {
    let start = Instant::now();
    let forest = parse_forest(PATH_TREE).unwrap();
    let seq = seq_of(&forest, None);
    let sym = |t: &str| Symbol::parse(&seq, t).unwrap();
    let u = sym("0*1, 2*3, 3*4', 4*5, 5*6");
    let u1 = sym("0*1, 2*3, 3*4, 3*4'");
    let u2 = sym("0*1, 1*2, 3*4, 4*5");
    let d = differential(&seq, &u);
    let nonzero = |t: &Symbol| d.get(t).is_some_and(|p| !p.is_zero());
    let dot = morse_region_dot(&seq, &u, &[u1.clone(), u2.clone()]).unwrap();
    let chain = |cells: &[&str]| {
        cells
            .iter()
            .map(|c| sym(c).display(&seq).to_string())
            .collect::<Vec<_>>()
            .join(" -> ")
    };
    let path1 = chain(&[
        "0*1, 2*3, 3*4', 4*5, 5*6",
        "0*1, 2*3, 3*4', 4*5",
        "0*1, 2*3, 3*4, 3*4', 4*5",
        "0*1, 2*3, 3*4, 3*4'",
    ]);
    let path2 = chain(&[
        "0*1, 2*3, 3*4', 4*5, 5*6",
        "0*1, 2*3, 4*5, 5*6",
        "0*1, 1*2, 2*3, 4*5, 5*6",
        "0*1, 1*2, 2*3, 4*5",
        "0*1, 1*2, 2*3, 3*4, 4*5",
        "0*1, 1*2, 3*4, 4*5",
    ]);
    let annotated = |p: &str| {
        dot.lines()
            .any(|l| l.starts_with("  // path ") && l.ends_with(p))
    };
    let elapsed = start.elapsed();
    check(
        nonzero(&u1) && nonzero(&u2) && annotated(&path1) && annotated(&path2) && elapsed < LIMIT_EXAMPLES,
        format!(
            "d_5 hits u''_1: {}, u''_2: {}; DOT paths: {}, {} ({elapsed:.2?}, limit {LIMIT_EXAMPLES:?})",
            nonzero(&u1),
            nonzero(&u2),
            annotated(&path1),
            annotated(&path2)
        ),
    )
}

fn criterion_3() -> Verdict {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED_LARGE ^ 0x5eed);
    let mut mismatches = 0;
    let mut runs = 0;
    for forest in random_corpus(CORPUS_SIZE, LARGE_EDGES, SEED_LARGE) {
        let mut choices: Vec<Option<Vec<String>>> = vec![None];
        let comps = forest.components();
        let mut seen = HashSet::new();
        for _ in 0..16 {
            if choices.len() == ROOT_CHOICES {
                break;
            }
            let pick: Vec<String> = comps
                .iter()
                .map(|c| forest.label(c[rng.gen_range(0..c.len())]).to_string())
                .collect();
            if seen.insert(pick.clone()) {
                choices.push(Some(pick));
            }
        }
        while choices.len() < ROOT_CHOICES {
            choices.push(None);
        }
        for roots in &choices {
            let seq = seq_of(&forest, roots.as_deref());
            let a: HashSet<Symbol> = enumerate_f_admissible_procedure(&seq).into_iter().collect();
            let b: HashSet<Symbol> = enumerate_f_admissible_filter(&seq, DEFAULT_CAP)
                .unwrap()
                .into_iter()
                .collect();
            runs += 1;
            if a != b {
                mismatches += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    check(
        mismatches == 0 && elapsed < LIMIT_EQUIVALENCE,
        format!(
            "{mismatches} mismatches over {runs} rooted forests (<= {LARGE_EDGES} edges) ({elapsed:.2?}, limit {LIMIT_EQUIVALENCE:?})"
        ),
    )
}

fn small_corpus() -> Vec<Forest> {
    random_corpus(CORPUS_SIZE, SMALL_EDGES, SEED_SMALL)
}

fn criterion_4(corpus: &[Forest]) -> Verdict {
    let start = Instant::now();
    let mut diffs = 0;
    for forest in corpus {
        let seq = seq_of(forest, None);
        let (multi, graded) = betti_from_symbols(&enumerate_f_admissible_procedure(&seq)).unwrap();
        let taylor = all_symbols(&seq, DEFAULT_CAP).unwrap();
        let lyubeznik = lyubeznik_basis(&seq, DEFAULT_CAP).unwrap();
        for p in PRIMES {
            diffs += compare_tables(&multi, &betti_via_homology(&taylor, p)).len();
            diffs += compare_tables(&multi, &betti_via_homology(&lyubeznik, p)).len();
        }
        diffs += usize::from(jacques_betti(forest) != graded);
        diffs += usize::from(betti_by_induced_subgraphs(forest, DEFAULT_CAP).unwrap() != graded);
    }
    let elapsed = start.elapsed();
    check(
        diffs == 0 && elapsed < LIMIT_ORACLE,
        format!(
            "{diffs} diffs over {} forests, primes {PRIMES:?} ({elapsed:.2?}, limit {LIMIT_ORACLE:?})",
            corpus.len()
        ),
    )
}

fn criterion_5(corpus: &[Forest]) -> Verdict {
    let mut failures = 0;
    let mut regions = 0;
    for forest in corpus {
        let seq = seq_of(forest, None);
        let complex = assemble_complex(&seq);
        failures += usize::from(!verify_d2_zero(&complex));
        failures += usize::from(!verify_minimal(&complex));
        for u in enumerate_f_admissible_procedure(&seq)
            .iter()
            .filter(|u| !u.is_empty())
        {
            let region = morse_region(&seq, u).unwrap();
            let graph = build_morse_graph(&seq, &region).unwrap();
            regions += 1;
            failures += usize::from(!verify_acyclic(&graph));
            for c in &region {
                let ok = match classify(&seq, c) {
                    SymbolClass::Type1 => {
                        let up = matching_insert(&seq, c).unwrap();
                        matching_delete(&seq, &up).as_ref() == Ok(c) && up.support() == c.support()
                    }
                    SymbolClass::Type2 => {
                        let down = matching_delete(&seq, c).unwrap();
                        matching_insert(&seq, &down).as_ref() == Ok(c)
                            && down.support() == c.support()
                    }
                    SymbolClass::FAdmissible => true,
                };
                failures += usize::from(!ok);
            }
        }
    }
    check(
        failures == 0,
        format!(
            "{failures} failures ({} complexes, {regions} Morse regions)",
            corpus.len()
        ),
    )
}

fn criterion_6(corpus: &[Forest]) -> Verdict {
    let mut failures = 0;
    for forest in corpus {
        let seq = seq_of(forest, None);
        let symbols = enumerate_f_admissible_procedure(&seq);
        let distinct: HashSet<_> = symbols.iter().map(|u| u.support().clone()).collect();
        failures += usize::from(distinct.len() != symbols.len());
        match betti_from_symbols(&symbols) {
            Ok((m, _)) => failures += usize::from(m.max_value() > 1),
            Err(_) => failures += 1,
        }
    }
    check(
        failures == 0,
        format!("{failures} forests with repeated multidegrees or values > 1"),
    )
}

fn criterion_7(corpus: &[Forest]) -> Verdict {
    let mut mismatches = 0;
    let mut maximal = 0;
    let mut instances: Vec<Forest> = corpus.to_vec();
    instances.push(parse_forest(SEVEN_VERTEX_TREE).unwrap());
    instances.push(parse_forest(PATH_TREE).unwrap());
    for forest in &instances {
        let seq = seq_of(forest, None);
        let symbols = enumerate_f_admissible_procedure(&seq);
        let pd = symbols.iter().map(Symbol::len).max().unwrap_or(0);
        mismatches += usize::from(jacques_pd(forest) != pd);
        let mut best = 0;
        for u in &symbols {
            if let Ok(v) = pd_bouquet_formula(&seq, u, &symbols) {
                maximal += 1;
                mismatches += usize::from(v != u.len());
                best = best.max(v);
            }
        }
        mismatches += usize::from(best != pd);
    }
    check(
        mismatches == 0,
        format!(
            "{mismatches} mismatches ({} forests, {maximal} maximal symbols)",
            instances.len()
        ),
    )
}

fn criterion_8(corpus: &[Forest]) -> Verdict {
    let mut mismatches = 0;
    let mut rootings = 0;
    for forest in corpus {
        let reference = table(&seq_of(forest, None));
        for roots in all_root_choices(forest) {
            rootings += 1;
            mismatches += usize::from(table(&seq_of(forest, Some(&roots))) != reference);
        }
        let (multi, _) =
            betti_from_symbols(&enumerate_f_admissible_procedure(&seq_of(forest, None))).unwrap();
        mismatches += usize::from(componentwise_multigraded(forest).unwrap() != multi);
    }
    check(
        mismatches == 0,
        format!("{mismatches} mismatches over {rootings} rootings"),
    )
}

fn main() {
    let corpus = small_corpus();
    let verdicts = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(&corpus),
        criterion_5(&corpus),
        criterion_6(&corpus),
        criterion_7(&corpus),
        criterion_8(&corpus),
    ];
    let mut failed = 0;
    for (i, v) in verdicts.iter().enumerate() {
        println!(
            "{} criterion {}: {}",
            if v.pass { "PASS" } else { "FAIL" },
            i + 1,
            v.detail
        );
        failed += usize::from(!v.pass);
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
