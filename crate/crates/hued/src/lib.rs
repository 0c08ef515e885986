//! r-hued graph coloring.
//!
//! An r-hued coloring is a proper vertex coloring in which every vertex
//! sees at least `min(r, deg(v))` distinct colors on its neighborhood;
//! the least number of colors admitting one is the r-hued chromatic
//! number χ_r. This crate provides:
//!
//! - [`graph`]: immutable simple graphs with degree, girth, bipartition
//!   and square-graph queries;
//! - [`formats`]: graph6, DIMACS and edge-list I/O;
//! - [`coloring`]: partial colorings, the proper / r-hued / partial
//!   r-hued verifiers, and the weak–strong neighbor split;
//! - [`greedy`]: a constructive coloring within
//!   `(r - 1)(Δ + 1) + 2` colors;
//! - [`exact`]: exhaustive computation of χ_r on small graphs, the
//!   ground truth for everything else;
//! - [`field`], [`designs`], [`levi`]: finite fields, Steiner systems
//!   S(2, r, n) with their verifier, and incidence graphs — a family of
//!   bipartite graphs with χ_r ≥ n;
//! - [`recolor`]: the reduction that brings any r-hued coloring of such
//!   an incidence graph down to exactly n = (r - 1)Δ + 1 colors.

pub mod coloring;
pub mod designs;
pub mod error;
pub mod exact;
pub mod field;
pub mod formats;
pub mod graph;
pub mod greedy;
pub mod levi;
pub mod random;
pub mod recolor;

pub use coloring::{
    is_partial_r_hued, is_proper, is_r_hued, neighbor_color_count, rainbow_invariant_holds,
    weak_strong_split, ColoringDoc, PartialColoring,
};
pub use designs::{
    affine_plane, bose_triple_system, brute_force_steiner, pairs_system, projective_plane,
    skolem_triple_system, verify_steiner, BruteForceBudget, BruteForceOutcome, DesignDoc,
    SteinerReport, SteinerSystem, SteinerViolation,
};
pub use error::{Error, Result};
pub use exact::{exact_chi_r, lower_bound, ExactOptions, ExactResult};
pub use field::FiniteField;
pub use formats::{parse_graph, write_graph, GraphFormat};
pub use graph::Graph;
pub use greedy::{
    greedy_palette_bound, greedy_r_hued, GreedyOptions, GreedyRun, OrderPolicy, StepCase,
    StepRecord,
};
pub use levi::{levi_from_graph, levi_graph, LeviGraph};
pub use random::{gnp, gnp_seeded};
pub use recolor::{reduce_levi_coloring, RecolorReport, RecolorStep};
