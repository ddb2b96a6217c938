//! Exact workbench for Turán-type questions about 3-uniform hypergraphs
//! under a bounded matching number.
//!
//! The crate provides:
//!
//! - a small data model ([`hypergraph::Hypergraph3`], [`hypergraph::Graph2`])
//!   with links, co-degrees, matchings and degree partitions;
//! - chromatic invariants of patterns, including the red–blue parameters
//!   `p` and `q` ([`coloring`]);
//! - an exact subhypergraph containment engine ([`containment`]);
//! - deterministic generators for a catalog of named constructions, each
//!   carrying its closed-form edge count ([`constructions`]);
//! - edge-colored multigraphs with star-colored clique detection and exact
//!   exhaustive maximization of layer sums at small `n` ([`colored`]);
//! - an exact branch-and-bound solver for tiny extremal instances
//!   ([`search`]);
//! - text formats, closed-form evaluators and a machine-checked claim suite
//!   emitting JSON certificate reports ([`io`], [`formulas`], [`report`]).
//!
//! ```
//! use turan3::constructions::h_ns;
//! use turan3::constructions::f_3_2;
//! use turan3::containment::contains;
//!
//! let built = h_ns(12, 2).unwrap();
//! assert_eq!(built.hypergraph.edge_count(), 90);
//! assert_eq!(built.claimed_edges, 90);
//! assert!(contains(&f_3_2(), &built.hypergraph).is_none());
//! assert!(!built.hypergraph.has_matching_of_size(3));
//! ```

pub mod bitset;
pub mod coloring;
pub mod colored;
pub mod constructions;
pub mod containment;
pub mod error;
pub mod formulas;
pub mod hypergraph;
pub mod io;
pub mod oracle;
pub mod report;
pub mod sample;
pub mod search;

pub use error::{Error, Result};

// The guide chapters under book/ double as doc-tests, so every snippet in
// the book compiles and runs against the current API.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/hypergraphs.md")]
    pub struct Hypergraphs;

    #[doc = include_str!("../../../book/src/colorings.md")]
    pub struct Colorings;

    #[doc = include_str!("../../../book/src/containment.md")]
    pub struct Containment;

    #[doc = include_str!("../../../book/src/constructions.md")]
    pub struct Constructions;

    #[doc = include_str!("../../../book/src/colored-turan.md")]
    pub struct ColoredTuran;

    #[doc = include_str!("../../../book/src/extremal-search.md")]
    pub struct ExtremalSearch;

    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
}
