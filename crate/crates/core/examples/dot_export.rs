//! Writes the dual graph and an annotated Morse region as DOT.
//!
//! Run with `cargo run --example dot_export > region.dot`.

use forest_resolution::cli::{dual_graph_dot, morse_region_dot};
use forest_resolution::{generator_sequence, parse_forest, rank_vertices, Symbol};

fn main() {
    let forest = parse_forest("0 1\n1 2\n2 3\n3 4\n3 4'\n4 5\n5 6").unwrap();
    let seq = generator_sequence(&rank_vertices(&forest, None).unwrap());
    let column = Symbol::parse(&seq, "0*1, 2*3, 3*4', 4*5, 5*6").unwrap();
    let targets = [
        Symbol::parse(&seq, "0*1, 2*3, 3*4, 3*4'").unwrap(),
        Symbol::parse(&seq, "0*1, 1*2, 3*4, 4*5").unwrap(),
    ];
    print!("{}", dual_graph_dot(&seq));
    print!("{}", morse_region_dot(&seq, &column, &targets).unwrap());
}
