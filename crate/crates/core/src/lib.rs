//! Minimal cellular free resolutions of edge ideals of forests.

pub mod betti;
pub mod cli;
pub mod forest;
pub mod monomial;
pub mod morse;
pub mod oracle;
pub mod random;
pub mod symbols;

pub use forest::{
    generator_sequence, k_subgraphs, parse_forest, rank_vertices, EdgeMonomial, Forest,
    GeneratorSequence, KSubgraphIndex, ParseError, RankError, RootedRanking,
};
pub use monomial::{Poly, SignedMonomial, VertexSet};
pub use symbols::{Symbol, SymbolClass, SymbolError};
