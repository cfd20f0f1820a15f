//! The Morse differential of one generator, with the gradient paths that
//! produce its entries at non-faces.
//!
//! Run with `cargo run --example morse_differential`.

use forest_resolution::morse::{build_morse_graph, differential, gradient_paths, morse_region};
use forest_resolution::{generator_sequence, parse_forest, rank_vertices, Symbol};

fn main() {
    let forest = parse_forest("0 1\n1 2\n2 3\n3 4\n3 4'\n4 5\n5 6").unwrap();
    let seq = generator_sequence(&rank_vertices(&forest, None).unwrap());
    let u = Symbol::parse(&seq, "0*1, 2*3, 3*4', 4*5, 5*6").unwrap();

    println!("d {} =", u.display(&seq));
    let d = differential(&seq, &u);
    for (target, coeff) in &d {
        let terms: Vec<String> = coeff
            .terms()
            .map(|(m, c)| {
                let mono: Vec<&str> = m.iter().map(|v| forest.label(v)).collect();
                format!("{c:+}*[{}]", mono.join(" "))
            })
            .collect();
        println!("  {} {}", terms.join(" "), target.display(&seq));
    }

    let region = morse_region(&seq, &u).unwrap();
    let graph = build_morse_graph(&seq, &region).unwrap();
    for target in d.keys().filter(|t| !t.is_subsymbol_of(&u)) {
        println!("paths to {}:", target.display(&seq));
        for (_, _, face) in u.faces(&seq) {
            for path in gradient_paths(&graph, graph.id(&face).unwrap(), graph.id(target).unwrap())
            {
                let cells: Vec<String> = path
                    .iter()
                    .map(|&c| graph.cells()[c].display(&seq).to_string())
                    .collect();
                println!("  {}", cells.join(" -> "));
            }
        }
    }
}
