//! Tor ranks over two prime fields from the Taylor and Lyubeznik bases,
//! compared with the table read off the F-admissible symbols.
//!
//! Run with `cargo run --example oracle_crosscheck`.

use forest_resolution::betti::betti_from_symbols;
use forest_resolution::oracle::{betti_via_homology, compare_tables, lyubeznik_basis};
use forest_resolution::symbols::{all_symbols, enumerate_f_admissible_procedure, DEFAULT_CAP};
use forest_resolution::{generator_sequence, parse_forest, rank_vertices};

fn main() {
    let forest = parse_forest("a b\nb c\nc d\nc e\nf g").unwrap();
    let seq = generator_sequence(&rank_vertices(&forest, None).unwrap());
    let (symbols, graded) = betti_from_symbols(&enumerate_f_admissible_procedure(&seq)).unwrap();
    let taylor = all_symbols(&seq, DEFAULT_CAP).unwrap();
    let lyubeznik = lyubeznik_basis(&seq, DEFAULT_CAP).unwrap();
    println!(
        "basis sizes: taylor {}, lyubeznik {}",
        taylor.len(),
        lyubeznik.len()
    );
    for p in [32003, 101] {
        let t = compare_tables(&symbols, &betti_via_homology(&taylor, p));
        let l = compare_tables(&symbols, &betti_via_homology(&lyubeznik, p));
        println!(
            "p = {p}: taylor diffs {}, lyubeznik diffs {}",
            t.len(),
            l.len()
        );
    }
    print!("{graded}");
}
