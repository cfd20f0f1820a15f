//! Runs every route on a seeded corpus of random forests.
//!
//! Run with `cargo run --release --example random_verify -- [count] [max_edges] [seed]`.

use forest_resolution::cli::{verify_forest, Command, RunConfig};
use forest_resolution::random::random_corpus;
use forest_resolution::{generator_sequence, rank_vertices};

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u64>().expect("integer argument"));
    let count = args.next().unwrap_or(50) as usize;
    let max_edges = args.next().unwrap_or(8) as usize;
    let seed = args.next().unwrap_or(0);

    let cfg = RunConfig::new(Command::Verify {
        random: None,
        corrupt: false,
    });
    let mut failed = 0;
    for forest in random_corpus(count, max_edges, seed) {
        let seq = generator_sequence(&rank_vertices(&forest, None).unwrap());
        let report = verify_forest(&seq, &cfg, false).unwrap();
        if !report.agree {
            failed += 1;
            println!("{}", report.summary_line());
        }
    }
    println!("{} of {count} forests agree", count - failed);
}
