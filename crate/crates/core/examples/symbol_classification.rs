//! Classifies every symbol of a path-like tree and shows the matching.
//!
//! Run with `cargo run --example symbol_classification`.

use forest_resolution::symbols::{
    all_symbols, classify, find_gaps, matching_delete, matching_insert, SymbolClass, DEFAULT_CAP,
};
use forest_resolution::{generator_sequence, parse_forest, rank_vertices};

fn main() {
    let forest = parse_forest("0 1\n1 2\n2 3\n3 4").unwrap();
    let seq = generator_sequence(&rank_vertices(&forest, None).unwrap());
    for u in all_symbols(&seq, DEFAULT_CAP).unwrap() {
        let class = classify(&seq, &u);
        let partner = match class {
            SymbolClass::Type1 => {
                format!("-> {}", matching_insert(&seq, &u).unwrap().display(&seq))
            }
            SymbolClass::Type2 => {
                format!("<- {}", matching_delete(&seq, &u).unwrap().display(&seq))
            }
            SymbolClass::FAdmissible => "critical".to_string(),
        };
        let gaps: Vec<String> = find_gaps(&seq, &u)
            .iter()
            .map(|g| {
                format!(
                    "{}/{} via {}",
                    seq.edge_name(g.upper),
                    seq.edge_name(g.lower),
                    seq.edge_name(g.bridge)
                )
            })
            .collect();
        println!(
            "{:<28} {:<13} {:<30} {}",
            u.display(&seq).to_string(),
            class,
            partner,
            gaps.join("; ")
        );
    }
}
