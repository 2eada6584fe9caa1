//! Alternation-free ordered hypergraphs.
//!
//! An ordered hypergraph is `(AB)^l`-free when no two hyperedges alternate
//! `2l` times along the vertex order. This crate detects such alternations,
//! properly 3-colors every ABAB-free hypergraph, builds ABABA-free
//! hypergraphs that need many colors, and moves between hypergraphs and
//! their geometric realizations (curves above points, stabbed polygons,
//! disks through a common point) using exact rational arithmetic.

pub mod cli;
pub mod coloring;
pub mod constructions;
pub mod error;
pub mod geometry;
pub mod hypergraph;
pub mod pattern;
pub mod svg;

pub use coloring::{three_color, three_color_verified};
pub use error::{Error, Result};
pub use hypergraph::{colorability_oracle, is_proper_coloring, parse_hypergraph, Coloring, OrderedHypergraph};
pub use pattern::{find_abl_free_order, is_abl_free_ordered, HalfIntegerL, PatternViolation, Verdict};
