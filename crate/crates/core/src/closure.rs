//! Monochromatic reachability: for each color, the transitive closure of the
//! one-color subgraph over walks of at least one arc.

use crate::graph::{BicoloredDigraph, Color, Vertex};

/// Per-color reachability relation. `reaches(c, u, v)` is true iff the
/// color-`c` subgraph contains a directed walk of one or more arcs from `u`
/// to `v`. In particular `reaches(c, v, v)` holds exactly when `v` lies on a
/// directed cycle of color `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoClosure {
    n: usize,
    words: usize,
    rows: [Vec<u64>; 2],
}

impl MonoClosure {
    pub fn reaches(&self, color: Color, from: Vertex, to: Vertex) -> bool {
        let row = from.index() * self.words;
        self.rows[color.index()][row + to.index() / 64] >> (to.index() % 64) & 1 == 1
    }
}

/// Computes the closure by breadth-first search from every vertex in each
/// color subgraph.
pub fn mono_closure(g: &BicoloredDigraph) -> MonoClosure {
    let n = g.vertex_count();
    let words = n.div_ceil(64).max(1);
    let mut rows = [vec![0u64; n * words], vec![0u64; n * words]];

    for color in Color::BOTH {
        let row = &mut rows[color.index()];
        let mut queue = Vec::new();
        for start in g.vertices() {
            let base = start.index() * words;
            queue.clear();
            queue.extend_from_slice(g.out_neighbors(start, color));
            for &v in g.out_neighbors(start, color) {
                row[base + v.index() / 64] |= 1 << (v.index() % 64);
            }
            while let Some(v) = queue.pop() {
                for &w in g.out_neighbors(v, color) {
                    let bit = base + w.index() / 64;
                    let mask = 1 << (w.index() % 64);
                    if row[bit] & mask == 0 {
                        row[bit] |= mask;
                        queue.push(w);
                    }
                }
            }
        }
    }

    MonoClosure { n, words, rows }
}

/// The lexicographically smallest vertex lying on a directed cycle of color
/// `c`, if any.
pub fn mono_cycle_vertex(g: &BicoloredDigraph, color: Color) -> Option<Vertex> {
    let closure = mono_closure(g);
    g.vertices().find(|&v| closure.reaches(color, v, v))
}
