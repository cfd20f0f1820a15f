//! F-admissible symbols and the graded Betti table of a small tree.
//!
//! Run with `cargo run --example seven_vertex_betti`.

use forest_resolution::betti::betti_from_symbols;
use forest_resolution::symbols::enumerate_f_admissible_procedure;
use forest_resolution::{generator_sequence, parse_forest, rank_vertices};

const TREE: &str = "\
0 1
0 1'
1 2
1 2'
1' 2''
2 3
";

fn main() {
    let forest = parse_forest(TREE).expect("valid forest");
    let ranking = rank_vertices(&forest, None).expect("default roots");
    let seq = generator_sequence(&ranking);
    println!("S = {seq}");

    let symbols = enumerate_f_admissible_procedure(&seq);
    for u in &symbols {
        println!("  r={} {}", u.len(), u.display(&seq));
    }

    let (_, graded) = betti_from_symbols(&symbols).expect("distinct multidegrees");
    print!("{graded}");
    println!("pd = {}", graded.pd());
}
