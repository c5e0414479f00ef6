//! The bikernel predicate: independence by monochromatic paths, color-1
//! absorbency and color-2 dominance.

use crate::closure::{mono_closure, MonoClosure};
use crate::graph::{BicoloredDigraph, Color, VertexSet};

/// Outcome of a bikernel check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BikernelCheck {
    Yes,
    No(Violation),
}

impl BikernelCheck {
    pub fn is_yes(&self) -> bool {
        matches!(self, BikernelCheck::Yes)
    }
}

/// The first failing clause, checked in the fixed order independence,
/// absorbency, dominance, with the lexicographically smallest witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A bikernel must be non-empty.
    EmptySet,
    /// A monochromatic path joins two distinct members.
    Independence {
        from: String,
        to: String,
        color: Color,
    },
    /// `vertex` is outside the set and has no color-1 path into it.
    Absorbency { vertex: String },
    /// `vertex` is outside the set and no color-2 path from the set reaches it.
    Dominance { vertex: String },
}

/// Checks whether `b` is a bikernel of `g`. The set must have been built for
/// `g` (see [`BicoloredDigraph::vertex_set`]).
pub fn is_bikernel(g: &BicoloredDigraph, b: &VertexSet) -> BikernelCheck {
    is_bikernel_with(g, b, &mono_closure(g))
}

/// Same check against a precomputed closure.
pub fn is_bikernel_with(
    g: &BicoloredDigraph,
    b: &VertexSet,
    closure: &MonoClosure,
) -> BikernelCheck {
    assert_eq!(
        b.universe_size(),
        g.vertex_count(),
        "vertex set was built for a different graph"
    );
    if b.is_empty() {
        return BikernelCheck::No(Violation::EmptySet);
    }

    for u in b.iter() {
        for v in b.iter() {
            if u == v {
                continue;
            }
            for color in Color::BOTH {
                if closure.reaches(color, u, v) {
                    return BikernelCheck::No(Violation::Independence {
                        from: g.name(u).to_string(),
                        to: g.name(v).to_string(),
                        color,
                    });
                }
            }
        }
    }

    for v in g.vertices() {
        if !b.contains(v) && !b.iter().any(|x| closure.reaches(Color::One, v, x)) {
            return BikernelCheck::No(Violation::Absorbency {
                vertex: g.name(v).to_string(),
            });
        }
    }

    for v in g.vertices() {
        if !b.contains(v) && !b.iter().any(|x| closure.reaches(Color::Two, x, v)) {
            return BikernelCheck::No(Violation::Dominance {
                vertex: g.name(v).to_string(),
            });
        }
    }

    BikernelCheck::Yes
}
