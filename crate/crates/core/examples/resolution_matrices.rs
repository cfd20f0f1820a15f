//! Assembles the whole minimal resolution and checks it.
//!
//! Run with `cargo run --example resolution_matrices`.

use forest_resolution::morse::{assemble_complex, verify_d2_zero, verify_minimal};
use forest_resolution::{generator_sequence, parse_forest, rank_vertices};

fn main() {
    let forest = parse_forest("c x\nc y\nc z\nz w").unwrap();
    let seq = generator_sequence(&rank_vertices(&forest, None).unwrap());
    let complex = assemble_complex(&seq);
    println!("ranks {:?}", complex.ranks());
    for m in &complex.matrices {
        println!(
            "d_{}: {} x {}, {} nonzero entries",
            m.degree,
            m.rows.len(),
            m.cols.len(),
            m.entries.len()
        );
        for (&(i, j), p) in &m.entries {
            let terms: Vec<String> = p
                .terms()
                .map(|(mono, c)| {
                    let vars: Vec<&str> = mono.iter().map(|v| forest.label(v)).collect();
                    format!("{c:+}*[{}]", vars.join(" "))
                })
                .collect();
            println!(
                "  [{} <- {}] {}",
                m.rows[i].display(&seq),
                m.cols[j].display(&seq),
                terms.join(" ")
            );
        }
    }
    println!(
        "d^2 = 0: {}, minimal: {}",
        verify_d2_zero(&complex),
        verify_minimal(&complex)
    );
}
