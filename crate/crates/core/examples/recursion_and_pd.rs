//! The leaf-deletion recursion, the induced-subforest scan and the block
//! census of maximal symbols, against the symbol count.
//!
//! Run with `cargo run --example recursion_and_pd`.

use forest_resolution::betti::{
    betti_by_induced_subgraphs, betti_from_symbols, jacques_betti, jacques_pd, pd_bouquet_formula,
};
use forest_resolution::symbols::{enumerate_f_admissible_procedure, DEFAULT_CAP};
use forest_resolution::{generator_sequence, parse_forest, rank_vertices};

fn main() {
    let forest = parse_forest("0 1\n1 2\n2 3\n3 4\n2 5\n5 6\n5 7").unwrap();
    let seq = generator_sequence(&rank_vertices(&forest, None).unwrap());
    let symbols = enumerate_f_admissible_procedure(&seq);
    let (_, graded) = betti_from_symbols(&symbols).unwrap();

    println!("recursion agrees: {}", jacques_betti(&forest) == graded);
    println!(
        "induced scan agrees: {}",
        betti_by_induced_subgraphs(&forest, DEFAULT_CAP).unwrap() == graded
    );
    println!(
        "pd: symbols {}, recursion {}",
        graded.pd(),
        jacques_pd(&forest)
    );
    for u in &symbols {
        if let Ok(v) = pd_bouquet_formula(&seq, u, &symbols) {
            println!(
                "  maximal {} length {} census {v}",
                u.display(&seq),
                u.len()
            );
        }
    }
}
