//! Bikernel solvers: exhaustive subset search, the cyclic-classes matching
//! algorithm, and the fast path for digraphs without monochromatic cycles.
//!
//! Every solver re-verifies a set before returning it as found.

use thiserror::Error;

use crate::closure::{mono_closure, mono_cycle_vertex, MonoClosure};
use crate::condensation::condensation;
use crate::graph::{BicoloredDigraph, Color, Criticality, Direction, Vertex};
use crate::matching::{hall_violator, hopcroft_karp};
use crate::verify::{is_bikernel_with, BikernelCheck};

/// Default vertex cap for the exhaustive solver.
pub const DEFAULT_BRUTE_CAP: usize = 20;

/// Hard bound of the subset bitmask representation.
const BITSET_CAP: usize = 64;

/// Result of a solver run: a verified bikernel (member names in
/// lexicographic order) or a machine-checkable reason why none exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BikernelVerdict {
    Found(Vec<String>),
    None(NoBikernelReason),
}

impl BikernelVerdict {
    pub fn found(&self) -> Option<&[String]> {
        match self {
            BikernelVerdict::Found(b) => Some(b),
            BikernelVerdict::None(_) => None,
        }
    }

    pub fn exists(&self) -> bool {
        matches!(self, BikernelVerdict::Found(_))
    }
}

/// Why no bikernel exists (or, for `Exhausted`, that the search space was
/// swept without a hit).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NoBikernelReason {
    EmptyGraph,
    /// The maximal color-1 classes and minimal color-2 classes differ in
    /// number, so no bijection between them can exist.
    ClassCountMismatch {
        maximal_one: usize,
        minimal_two: usize,
    },
    /// The class intersection graph has no perfect matching; the witness is
    /// a family of maximal color-1 classes with fewer neighbors than
    /// members.
    NoPerfectMatching {
        hall_witness: Vec<Vec<String>>,
    },
    /// Two vertices that every bikernel must contain, joined by a
    /// monochromatic path of the given color.
    AdjacentCriticalPair {
        from: String,
        to: String,
        color: Color,
    },
    Exhausted,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph has {vertices} vertices, above the exhaustive-search cap of {cap}")]
    CapExceeded { cap: usize, vertices: usize },
    #[error("color-{color} subgraph has a directed cycle through {vertex:?}")]
    MonochromaticCycle { color: Color, vertex: String },
    #[error("vertex {vertex:?} is already a color-{color} extremum")]
    NotTraceable { vertex: String, color: Color },
    #[error("internal: {context} produced a set that failed verification")]
    SelfCheckFailed { context: &'static str },
}

/// Per-vertex reachability bitmasks for graphs of at most 64 vertices.
struct ReachMasks {
    /// fwd[c][v] = vertices reachable from v in color c.
    fwd: [Vec<u64>; 2],
    /// bwd2[v] = vertices that reach v in color 2.
    bwd2: Vec<u64>,
}

impl ReachMasks {
    fn build(g: &BicoloredDigraph, closure: &MonoClosure) -> ReachMasks {
        let n = g.vertex_count();
        let mut fwd = [vec![0u64; n], vec![0u64; n]];
        let mut bwd2 = vec![0u64; n];
        for u in g.vertices() {
            for v in g.vertices() {
                for c in Color::BOTH {
                    if closure.reaches(c, u, v) {
                        fwd[c.index()][u.index()] |= 1 << v.index();
                        if c == Color::Two {
                            bwd2[v.index()] |= 1 << u.index();
                        }
                    }
                }
            }
        }
        ReachMasks { fwd, bwd2 }
    }

    fn is_bikernel_mask(&self, n: usize, subset: u64) -> bool {
        let mut rest = subset;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let others = subset & !(1u64 << v);
            if (self.fwd[0][v] | self.fwd[1][v]) & others != 0 {
                return false;
            }
        }
        for v in 0..n {
            if subset >> v & 1 == 0 {
                if self.fwd[0][v] & subset == 0 {
                    return false;
                }
                if self.bwd2[v] & subset == 0 {
                    return false;
                }
            }
        }
        true
    }
}

fn check_cap(g: &BicoloredDigraph, cap: usize) -> Result<usize, SolveError> {
    let cap = cap.min(BITSET_CAP);
    let n = g.vertex_count();
    if n > cap {
        return Err(SolveError::CapExceeded { cap, vertices: n });
    }
    Ok(n)
}

/// Visits all size-`k` subsets of `0..n` in lexicographic order of their
/// sorted member lists; stops early when the callback returns `true`.
fn for_each_combination(n: usize, k: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return;
    }
    loop {
        if visit(&idx) {
            return;
        }
        // Advance to the next combination.
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn names_of(g: &BicoloredDigraph, indices: &[usize]) -> Vec<String> {
    indices
        .iter()
        .map(|&i| g.name(Vertex(i as u32)).to_string())
        .collect()
}

fn verified_found(
    g: &BicoloredDigraph,
    closure: &MonoClosure,
    members: Vec<String>,
    context: &'static str,
) -> Result<BikernelVerdict, SolveError> {
    let refs = g
        .vertex_set(members.iter().map(String::as_str))
        .map_err(|_| SolveError::SelfCheckFailed { context })?;
    match is_bikernel_with(g, &refs, closure) {
        BikernelCheck::Yes => Ok(BikernelVerdict::Found(members)),
        BikernelCheck::No(_) => Err(SolveError::SelfCheckFailed { context }),
    }
}

/// Exhaustive search with the default cap. Subsets are enumerated by size,
/// then lexicographically, so the first hit is the smallest bikernel.
pub fn solve_brute(g: &BicoloredDigraph) -> Result<BikernelVerdict, SolveError> {
    solve_brute_capped(g, DEFAULT_BRUTE_CAP)
}

/// Exhaustive search with an explicit vertex cap (effective maximum 64).
pub fn solve_brute_capped(g: &BicoloredDigraph, cap: usize) -> Result<BikernelVerdict, SolveError> {
    let n = check_cap(g, cap)?;
    let closure = mono_closure(g);
    let masks = ReachMasks::build(g, &closure);

    for size in 1..=n {
        let mut hit: Option<Vec<usize>> = None;
        for_each_combination(n, size, |indices| {
            let mask = indices.iter().fold(0u64, |m, &i| m | 1 << i);
            if masks.is_bikernel_mask(n, mask) {
                hit = Some(indices.to_vec());
                true
            } else {
                false
            }
        });
        if let Some(indices) = hit {
            return verified_found(g, &closure, names_of(g, &indices), "solve_brute");
        }
    }
    Ok(BikernelVerdict::None(NoBikernelReason::Exhausted))
}

/// All bikernels of `g` in (size, lexicographic) order. Same cap rules as
/// [`solve_brute_capped`].
pub fn all_bikernels(g: &BicoloredDigraph, cap: usize) -> Result<Vec<Vec<String>>, SolveError> {
    let n = check_cap(g, cap)?;
    let closure = mono_closure(g);
    let masks = ReachMasks::build(g, &closure);

    let mut result = Vec::new();
    for size in 1..=n {
        for_each_combination(n, size, |indices| {
            let mask = indices.iter().fold(0u64, |m, &i| m | 1 << i);
            if masks.is_bikernel_mask(n, mask) {
                result.push(names_of(g, indices));
            }
            false
        });
    }
    Ok(result)
}

/// The cyclic-classes algorithm: a bikernel exists iff the maximal color-1
/// classes and minimal color-2 classes admit a perfect matching in their
/// intersection graph; one vertex per matched intersection assembles the
/// bikernel.
pub fn solve_classes(g: &BicoloredDigraph) -> Result<BikernelVerdict, SolveError> {
    if g.vertex_count() == 0 {
        return Ok(BikernelVerdict::None(NoBikernelReason::EmptyGraph));
    }
    let cond1 = condensation(g, Color::One);
    let cond2 = condensation(g, Color::Two);
    let maximal_one: Vec<&Vec<Vertex>> =
        cond1.maximal.iter().map(|&id| &cond1.classes[id]).collect();
    let minimal_two: Vec<&Vec<Vertex>> =
        cond2.minimal.iter().map(|&id| &cond2.classes[id]).collect();

    if maximal_one.len() != minimal_two.len() {
        return Ok(BikernelVerdict::None(
            NoBikernelReason::ClassCountMismatch {
                maximal_one: maximal_one.len(),
                minimal_two: minimal_two.len(),
            },
        ));
    }

    // Intersection graph: sorted member lists, two-pointer intersection.
    let smallest_common = |a: &[Vertex], b: &[Vertex]| -> Option<Vertex> {
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return Some(a[i]),
            }
        }
        None
    };

    let adj: Vec<Vec<usize>> = maximal_one
        .iter()
        .map(|m1| {
            minimal_two
                .iter()
                .enumerate()
                .filter(|(_, m2)| smallest_common(m1, m2).is_some())
                .map(|(j, _)| j)
                .collect()
        })
        .collect();

    let matching = hopcroft_karp(&adj, minimal_two.len());
    if matching.iter().any(|m| m.is_none()) {
        let witness = hall_violator(&adj, &matching)
            .into_iter()
            .map(|l| {
                maximal_one[l]
                    .iter()
                    .map(|&v| g.name(v).to_string())
                    .collect()
            })
            .collect();
        return Ok(BikernelVerdict::None(NoBikernelReason::NoPerfectMatching {
            hall_witness: witness,
        }));
    }

    let mut members: Vec<String> = matching
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let j = m.expect("matching is perfect");
            let v =
                smallest_common(maximal_one[i], minimal_two[j]).expect("matched classes intersect");
            g.name(v).to_string()
        })
        .collect();
    members.sort();

    verified_found(g, &mono_closure(g), members, "solve_classes")
}

/// Fast path for digraphs without monochromatic cycles: a unique bikernel
/// exists iff every critical vertex is supercritical, and then it is exactly
/// the set of critical vertices.
pub fn solve_acyclic(g: &BicoloredDigraph) -> Result<BikernelVerdict, SolveError> {
    for color in Color::BOTH {
        if let Some(v) = mono_cycle_vertex(g, color) {
            return Err(SolveError::MonochromaticCycle {
                color,
                vertex: g.name(v).to_string(),
            });
        }
    }
    if g.vertex_count() == 0 {
        return Ok(BikernelVerdict::None(NoBikernelReason::EmptyGraph));
    }

    for v in g.vertices() {
        match g.criticality(v) {
            Criticality::OneSink => {
                // v is forced into any bikernel, and so is the 2-source that
                // reaches it by a color-2 path.
                let path = trace_to_extremum(g, v, Color::Two)?;
                return Ok(BikernelVerdict::None(
                    NoBikernelReason::AdjacentCriticalPair {
                        from: g.name(path[0]).to_string(),
                        to: g.name(v).to_string(),
                        color: Color::Two,
                    },
                ));
            }
            Criticality::TwoSource => {
                let path = trace_to_extremum(g, v, Color::One)?;
                return Ok(BikernelVerdict::None(
                    NoBikernelReason::AdjacentCriticalPair {
                        from: g.name(v).to_string(),
                        to: g.name(path[path.len() - 1]).to_string(),
                        color: Color::One,
                    },
                ));
            }
            Criticality::Supercritical | Criticality::NotCritical => {}
        }
    }

    let members: Vec<String> = g
        .vertices()
        .filter(|&v| g.criticality(v) == Criticality::Supercritical)
        .map(|v| g.name(v).to_string())
        .collect();
    verified_found(g, &mono_closure(g), members, "solve_acyclic")
}

/// Builds a nonexistence certificate for callers that already know (by a
/// characterization theorem) that no bikernel exists: preferably a pair of
/// critical vertices joined by a monochromatic path (both are forced into
/// any bikernel), otherwise the cyclic-classes reason.
pub(crate) fn no_bikernel_certificate(g: &BicoloredDigraph) -> NoBikernelReason {
    let closure = mono_closure(g);
    for u in g.vertices() {
        if !g.criticality(u).is_critical() {
            continue;
        }
        for v in g.vertices() {
            if v == u || !g.criticality(v).is_critical() {
                continue;
            }
            for color in Color::BOTH {
                if closure.reaches(color, u, v) {
                    return NoBikernelReason::AdjacentCriticalPair {
                        from: g.name(u).to_string(),
                        to: g.name(v).to_string(),
                        color,
                    };
                }
            }
        }
    }
    match solve_classes(g) {
        Ok(BikernelVerdict::None(reason)) => reason,
        _ => NoBikernelReason::Exhausted,
    }
}

/// For color 1, a color-1 path from `v` to a 1-sink; for color 2, a color-2
/// path from a 2-source to `v`. The color subgraph must be acyclic and `v`
/// must not already be the corresponding extremum. Ties are broken toward
/// the lexicographically smallest neighbor.
pub fn trace_to_extremum(
    g: &BicoloredDigraph,
    v: Vertex,
    color: Color,
) -> Result<Vec<Vertex>, SolveError> {
    if let Some(w) = mono_cycle_vertex(g, color) {
        return Err(SolveError::MonochromaticCycle {
            color,
            vertex: g.name(w).to_string(),
        });
    }
    let stuck = match color {
        Color::One => g.degree(v, Direction::Out, Some(Color::One)) == 0,
        Color::Two => g.degree(v, Direction::In, Some(Color::Two)) == 0,
    };
    if stuck {
        return Err(SolveError::NotTraceable {
            vertex: g.name(v).to_string(),
            color,
        });
    }

    let mut path = vec![v];
    match color {
        Color::One => {
            let mut current = v;
            while let Some(&next) = g.out_neighbors(current, Color::One).first() {
                path.push(next);
                current = next;
            }
        }
        Color::Two => {
            let mut current = v;
            while let Some(&prev) = g.in_neighbors(current, Color::Two).first() {
                path.push(prev);
                current = prev;
            }
            path.reverse();
        }
    }
    Ok(path)
}
