//! Bikernels by monochromatic paths in bicolored digraphs.
//!
//! A bikernel of a bicolored digraph is a non-empty vertex set that is
//! independent by monochromatic paths, absorbs every outside vertex along a
//! color-1 path and dominates every outside vertex along a color-2 path.
//! This crate provides:
//!
//! - the graph model and the bikernel predicate ([`is_bikernel`]),
//! - monochromatic reachability and per-color condensations,
//! - three solvers: exhaustive search, the cyclic-classes matching
//!   algorithm, and a fast path for digraphs without monochromatic cycles,
//! - closed-form characterizations for paths, cycles, chorded cycles,
//!   (2,2)-regular digraphs and cartesian products,
//! - BK-colorings of uncolored digraphs (acyclic digraphs via star
//!   decompositions, tournaments via strong connectivity),
//! - seeded generators for reproducible test corpora.

pub mod bkcolor;
pub mod closure;
pub mod condensation;
pub mod families;
pub mod gen;
pub mod graph;
mod matching;
pub mod product;
pub mod solve;
pub mod verify;

pub use bkcolor::{
    bk_color, color_from_stars, color_tournament, find_star_decomposition, BkColorError,
    ColoringResult, NotColorable, StarDecomposition, StarDecompositionOutcome,
};
pub use closure::{mono_closure, mono_cycle_vertex, MonoClosure};
pub use condensation::{condensation, Condensation};
pub use families::{
    chorded_cycle_bikernel, cycle_bikernel, detect_shape, path_bikernel, regular22_necessary,
    FamilyError, FamilyShape, RegularCheck, RunProfile,
};
pub use graph::{
    Arc, BicoloredDigraph, Color, Criticality, Digraph, Direction, GraphError, Vertex, VertexSet,
};
pub use product::{
    cartesian_product, compose_bikernels, cycle_product_bikernel, path_product_bikernel,
    ProductError,
};
pub use solve::{
    all_bikernels, solve_acyclic, solve_brute, solve_brute_capped, solve_classes,
    trace_to_extremum, BikernelVerdict, NoBikernelReason, SolveError, DEFAULT_BRUTE_CAP,
};
pub use verify::{is_bikernel, BikernelCheck, Violation};
