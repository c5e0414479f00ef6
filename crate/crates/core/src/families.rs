//! Closed-form bikernel characterizations for directed paths, directed
//! cycles and directed cycles with one chord, plus the (2,2)-regular
//! necessary condition.
//!
//! All length conditions are phrased over arc runs (maximal same-color
//! segments); every constructed set is re-verified before it is returned.

use thiserror::Error;

use crate::graph::{Arc, BicoloredDigraph, Color, Direction, Vertex};
use crate::solve::{no_bikernel_certificate, BikernelVerdict};
use crate::verify::{is_bikernel, BikernelCheck};

/// Structural classification of a bicolored digraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyShape {
    DirectedPath { order: Vec<Vertex> },
    DirectedCycle { order: Vec<Vertex> },
    ChordedCycle { order: Vec<Vertex>, chord: Arc },
    Other,
}

/// Maximal same-color arc segments along a path or cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunProfile {
    /// (color, length in arcs) with adjacent runs of different colors.
    pub runs: Vec<(Color, usize)>,
}

impl RunProfile {
    pub fn of_path(colors: &[Color]) -> RunProfile {
        let mut runs: Vec<(Color, usize)> = Vec::new();
        for &c in colors {
            match runs.last_mut() {
                Some((rc, len)) if *rc == c => *len += 1,
                _ => runs.push((c, 1)),
            }
        }
        RunProfile { runs }
    }

    /// Runs around a cycle; the segment crossing the seam is merged. A
    /// monochromatic cycle is a single run.
    pub fn of_cycle(colors: &[Color]) -> RunProfile {
        let m = colors.len();
        match colors.iter().position(|&c| c != colors[0]) {
            None => RunProfile {
                runs: if m == 0 {
                    Vec::new()
                } else {
                    vec![(colors[0], m)]
                },
            },
            Some(_) => {
                // Rotate so index 0 starts a fresh run.
                let start = (0..m)
                    .find(|&i| colors[(i + m - 1) % m] != colors[i])
                    .unwrap();
                let rotated: Vec<Color> = (0..m).map(|i| colors[(start + i) % m]).collect();
                RunProfile::of_path(&rotated)
            }
        }
    }

    pub fn max_run(&self) -> usize {
        self.runs.iter().map(|&(_, len)| len).max().unwrap_or(0)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("graph is not a directed path")]
    NotAPath,
    #[error("graph is not a directed cycle")]
    NotACycle,
    #[error("graph is not a directed cycle with one chord")]
    NotAChordedCycle,
    #[error("vertex {vertex:?} violates (2,2)-regularity")]
    NotRegular22 { vertex: String },
    #[error("internal: {context} produced a set that failed verification")]
    SelfCheckFailed { context: &'static str },
}

/// Outcome of the (2,2)-regular necessary condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RegularCheck {
    /// Both color classes decompose into the same number of cycles; the
    /// condition is necessary only, so nothing is concluded.
    InconclusivePass { cycles: usize },
    /// Different cycle counts certify that no bikernel exists.
    Fails {
        color1_cycles: usize,
        color2_cycles: usize,
    },
}

fn total_out(g: &BicoloredDigraph, v: Vertex) -> usize {
    g.degree(v, Direction::Out, None)
}

fn total_in(g: &BicoloredDigraph, v: Vertex) -> usize {
    g.degree(v, Direction::In, None)
}

fn sole_out_neighbor(g: &BicoloredDigraph, v: Vertex) -> Option<Vertex> {
    g.out_neighbors(v, Color::One)
        .first()
        .or_else(|| g.out_neighbors(v, Color::Two).first())
        .copied()
}

fn path_order(g: &BicoloredDigraph) -> Option<Vec<Vertex>> {
    let n = g.vertex_count();
    if n == 0 || g.arc_count() != n - 1 {
        return None;
    }
    if g.vertices()
        .any(|v| total_out(g, v) > 1 || total_in(g, v) > 1)
    {
        return None;
    }
    let start = g.vertices().find(|&v| total_in(g, v) == 0)?;
    let mut order = vec![start];
    let mut current = start;
    while let Some(next) = sole_out_neighbor(g, current) {
        order.push(next);
        current = next;
    }
    if order.len() == n {
        Some(order)
    } else {
        None
    }
}

/// If `pairs` forms a single directed cycle through all `n >= 3` vertices,
/// returns it starting at the lexicographically smallest vertex.
fn cycle_order_of_pairs(n: usize, pairs: &[(Vertex, Vertex)]) -> Option<Vec<Vertex>> {
    if n < 3 || pairs.len() != n {
        return None;
    }
    let mut succ: Vec<Option<Vertex>> = vec![None; n];
    let mut indeg = vec![0usize; n];
    for &(t, h) in pairs {
        if succ[t.index()].is_some() || indeg[h.index()] > 0 {
            return None;
        }
        succ[t.index()] = Some(h);
        indeg[h.index()] += 1;
    }
    let start = Vertex(0);
    let mut order = Vec::with_capacity(n);
    let mut current = start;
    loop {
        order.push(current);
        current = succ[current.index()]?;
        if current == start {
            break;
        }
        if order.len() == n {
            return None;
        }
    }
    if order.len() == n {
        Some(order)
    } else {
        None
    }
}

fn cycle_order(g: &BicoloredDigraph) -> Option<Vec<Vertex>> {
    if g.arc_count() != g.vertex_count() {
        return None;
    }
    let pairs: Vec<(Vertex, Vertex)> = g.arcs().iter().map(|a| (a.tail, a.head)).collect();
    cycle_order_of_pairs(g.vertex_count(), &pairs)
}

/// Base-cycle/chord decompositions of a chorded cycle. Usually unique; when
/// the extra arc parallels a cycle arc with the opposite color, both splits
/// are returned, in arc order.
fn chorded_decompositions(g: &BicoloredDigraph) -> Vec<(Vec<Vertex>, Arc)> {
    let n = g.vertex_count();
    if g.arc_count() != n + 1 {
        return Vec::new();
    }
    let mut result = Vec::new();
    for (skip, &chord) in g.arcs().iter().enumerate() {
        let pairs: Vec<(Vertex, Vertex)> = g
            .arcs()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, a)| (a.tail, a.head))
            .collect();
        if let Some(order) = cycle_order_of_pairs(n, &pairs) {
            result.push((order, chord));
        }
    }
    result
}

/// Classifies the graph; traversals start at the lexicographically smallest
/// source (paths) or vertex (cycles).
pub fn detect_shape(g: &BicoloredDigraph) -> FamilyShape {
    if let Some(order) = path_order(g) {
        return FamilyShape::DirectedPath { order };
    }
    if let Some(order) = cycle_order(g) {
        return FamilyShape::DirectedCycle { order };
    }
    if let Some((order, chord)) = chorded_decompositions(g).into_iter().next() {
        return FamilyShape::ChordedCycle { order, chord };
    }
    FamilyShape::Other
}

/// Colors of the consecutive arcs along `order`. For a chorded cycle the
/// chord must be excluded: when both colors sit on a cycle pair, the base
/// arc is the one the chord does not occupy.
fn colors_along(
    g: &BicoloredDigraph,
    order: &[Vertex],
    cyclic: bool,
    chord: Option<Arc>,
) -> Vec<Color> {
    let take = if cyclic { order.len() } else { order.len() - 1 };
    (0..take)
        .map(|i| {
            let (t, h) = (order[i], order[(i + 1) % order.len()]);
            let one = g.has_arc(t, h, Color::One);
            let two = g.has_arc(t, h, Color::Two);
            match (one, two) {
                (true, false) => Color::One,
                (false, true) => Color::Two,
                (true, true) => {
                    let chord = chord.expect("parallel pair implies a chord");
                    debug_assert!(chord.tail == t && chord.head == h);
                    chord.color.other()
                }
                (false, false) => unreachable!("order is not a cycle/path of g"),
            }
        })
        .collect()
}

fn verified(
    g: &BicoloredDigraph,
    members: Vec<Vertex>,
    context: &'static str,
) -> Result<BikernelVerdict, FamilyError> {
    let mut names: Vec<String> = members.iter().map(|&v| g.name(v).to_string()).collect();
    names.sort();
    let set = g
        .vertex_set(names.iter().map(String::as_str))
        .map_err(|_| FamilyError::SelfCheckFailed { context })?;
    match is_bikernel(g, &set) {
        BikernelCheck::Yes => Ok(BikernelVerdict::Found(names)),
        BikernelCheck::No(_) => Err(FamilyError::SelfCheckFailed { context }),
    }
}

/// A directed path has a bikernel iff its coloring alternates arc by arc,
/// its order is odd and the arc entering the sink has color 1; the bikernel
/// is every second vertex counted from the sink.
pub fn path_bikernel(g: &BicoloredDigraph) -> Result<BikernelVerdict, FamilyError> {
    let order = path_order(g).ok_or(FamilyError::NotAPath)?;
    let n = order.len();
    let colors = colors_along(g, &order, false, None);
    let alternating = RunProfile::of_path(&colors).max_run() <= 1;
    let sink_arc_ok = colors.last().is_none_or(|&c| c == Color::One);
    if !alternating || n % 2 == 0 || !sink_arc_ok {
        return Ok(BikernelVerdict::None(no_bikernel_certificate(g)));
    }
    let members = (0..n).rev().step_by(2).map(|i| order[i]).collect();
    verified(g, members, "path_bikernel")
}

/// A directed cycle has a (unique) bikernel iff no two consecutive arcs
/// share a color; the bikernel is the set of heads of the color-1 arcs.
pub fn cycle_bikernel(g: &BicoloredDigraph) -> Result<BikernelVerdict, FamilyError> {
    let order = cycle_order(g).ok_or(FamilyError::NotACycle)?;
    let n = order.len();
    let colors = colors_along(g, &order, true, None);
    if RunProfile::of_cycle(&colors).max_run() > 1 {
        return Ok(BikernelVerdict::None(no_bikernel_certificate(g)));
    }
    let members = (0..n)
        .filter(|&i| colors[i] == Color::One)
        .map(|i| order[(i + 1) % n])
        .collect();
    verified(g, members, "cycle_bikernel")
}

/// Evaluates the chorded-cycle conditions for one base-cycle/chord split and
/// returns the candidate bikernel when they hold.
fn chorded_candidate(order: &[Vertex], colors: &[Color], chord: Arc) -> Option<Vec<Vertex>> {
    let m = order.len();
    let doubled: Vec<usize> = (0..m)
        .filter(|&i| colors[i] == colors[(i + 1) % m])
        .collect();

    match doubled.len() {
        0 => {
            // Alternating base cycle (m is even). The base bikernel is the
            // set of heads of color-1 arcs; the chord may not join two of
            // them, needs color 2 when it leaves one and color 1 when it
            // enters one. A chord that reverses a base arc is exempt from
            // the color constraints: the monochromatic walk it creates
            // closes on a single vertex, which breaks no independence.
            let mut in_b = vec![false; m];
            for i in 0..m {
                if colors[i] == Color::One {
                    in_b[order[(i + 1) % m].index()] = true;
                }
            }
            let tail_in = in_b[chord.tail.index()];
            let head_in = in_b[chord.head.index()];
            if tail_in && head_in {
                return None;
            }
            let tail_pos = order.iter().position(|&v| v == chord.tail).unwrap();
            let reverses_base_arc = order[(tail_pos + m - 1) % m] == chord.head;
            if !reverses_base_arc {
                if tail_in && chord.color != Color::Two {
                    return None;
                }
                if head_in && chord.color != Color::One {
                    return None;
                }
            }
            Some(
                (0..m)
                    .filter(|&v| in_b[v])
                    .map(|v| Vertex(v as u32))
                    .collect(),
            )
        }
        1 => {
            // Exactly one two-arc run (m is odd); y is its middle vertex.
            let p = doubled[0];
            let y = order[(p + 1) % m];
            match colors[p] {
                Color::One => {
                    if chord.head != y || chord.color != Color::Two {
                        return None;
                    }
                    Some((1..=(m - 1) / 2).map(|j| order[(p + 2 * j) % m]).collect())
                }
                Color::Two => {
                    if chord.tail != y || chord.color != Color::One {
                        return None;
                    }
                    let mut members = vec![order[p]];
                    members.extend((0..(m - 3) / 2).map(|j| order[(p + 3 + 2 * j) % m]));
                    Some(members)
                }
            }
        }
        _ => None,
    }
}

/// The chorded-cycle characterization: either the base cycle alternates and
/// the chord respects the parity/color constraints, or the base cycle has
/// exactly one two-arc run and the chord covers its middle vertex with the
/// opposite color.
pub fn chorded_cycle_bikernel(g: &BicoloredDigraph) -> Result<BikernelVerdict, FamilyError> {
    let decompositions = chorded_decompositions(g);
    if decompositions.is_empty() {
        return Err(FamilyError::NotAChordedCycle);
    }
    let mut unverified_pass = false;
    for (order, chord) in &decompositions {
        let colors = colors_along(g, order, true, Some(*chord));
        if let Some(members) = chorded_candidate(order, &colors, *chord) {
            match verified(g, members, "chorded_cycle_bikernel") {
                Ok(verdict) => return Ok(verdict),
                Err(_) => unverified_pass = true,
            }
        }
    }
    if unverified_pass {
        return Err(FamilyError::SelfCheckFailed {
            context: "chorded_cycle_bikernel",
        });
    }
    Ok(BikernelVerdict::None(no_bikernel_certificate(g)))
}

/// For digraphs where every vertex has exactly one inward and one outward
/// arc of each color: counts the disjoint cycles of each color class.
/// Unequal counts certify that no bikernel exists.
pub fn regular22_necessary(g: &BicoloredDigraph) -> Result<RegularCheck, FamilyError> {
    for v in g.vertices() {
        for color in Color::BOTH {
            if g.degree(v, Direction::Out, Some(color)) != 1
                || g.degree(v, Direction::In, Some(color)) != 1
            {
                return Err(FamilyError::NotRegular22 {
                    vertex: g.name(v).to_string(),
                });
            }
        }
    }

    let count_cycles = |color: Color| {
        let n = g.vertex_count();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut v = Vertex(start as u32);
            while !seen[v.index()] {
                seen[v.index()] = true;
                v = g.out_neighbors(v, color)[0];
            }
        }
        cycles
    };

    let k1 = count_cycles(Color::One);
    let k2 = count_cycles(Color::Two);
    if k1 == k2 {
        Ok(RegularCheck::InconclusivePass { cycles: k1 })
    } else {
        Ok(RegularCheck::Fails {
            color1_cycles: k1,
            color2_cycles: k2,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::gen::SplitMix64;
    use crate::solve::{solve_brute, NoBikernelReason};
    use Color::{One, Two};

    fn graph(arcs: &[(&str, &str, Color)]) -> BicoloredDigraph {
        BicoloredDigraph::from_arcs(&[], arcs).unwrap()
    }

    fn names(g: &BicoloredDigraph, vs: &[Vertex]) -> Vec<String> {
        vs.iter().map(|&v| g.name(v).to_string()).collect()
    }

    #[test]
    fn detect_basic_shapes() {
        let g = graph(&[("a", "b", One), ("b", "c", Two)]);
        match detect_shape(&g) {
            FamilyShape::DirectedPath { order } => assert_eq!(names(&g, &order), ["a", "b", "c"]),
            other => panic!("expected path, got {other:?}"),
        }

        let g = graph(&[
            ("x1", "x2", One),
            ("x2", "x3", Two),
            ("x3", "x4", One),
            ("x4", "x1", Two),
        ]);
        assert!(matches!(
            detect_shape(&g),
            FamilyShape::DirectedCycle { .. }
        ));

        let g = graph(&[
            ("x1", "x2", One),
            ("x2", "x3", Two),
            ("x3", "x4", One),
            ("x4", "x1", Two),
            ("x1", "x3", One),
        ]);
        match detect_shape(&g) {
            FamilyShape::ChordedCycle { order, chord } => {
                assert_eq!(names(&g, &order), ["x1", "x2", "x3", "x4"]);
                assert_eq!(g.name(chord.tail), "x1");
                assert_eq!(g.name(chord.head), "x3");
            }
            other => panic!("expected chorded cycle, got {other:?}"),
        }

        // Two disjoint arcs classify as nothing in particular.
        let g = graph(&[("a", "b", One), ("c", "d", One)]);
        assert_eq!(detect_shape(&g), FamilyShape::Other);

        let g = BicoloredDigraph::from_arcs(&["v"], &[]).unwrap();
        assert!(matches!(detect_shape(&g), FamilyShape::DirectedPath { .. }));
    }

    #[test]
    fn run_profile_invariants() {
        let profile = RunProfile::of_path(&[One, One, Two, One]);
        assert_eq!(profile.runs, vec![(One, 2), (Two, 1), (One, 1)]);
        assert_eq!(profile.max_run(), 2);

        // Cyclic merge across the seam.
        let profile = RunProfile::of_cycle(&[One, Two, Two, One]);
        assert_eq!(profile.runs.iter().map(|r| r.1).sum::<usize>(), 4);
        assert!(profile.runs.windows(2).all(|w| w[0].0 != w[1].0));
        assert_eq!(profile.max_run(), 2);

        let profile = RunProfile::of_cycle(&[Two, Two, Two]);
        assert_eq!(profile.runs, vec![(Two, 3)]);
    }

    #[test]
    fn path_characterization_examples() {
        // P5 alternating with the sink arc colored 1.
        let g = graph(&[
            ("a", "b", Two),
            ("b", "c", One),
            ("c", "d", Two),
            ("d", "e", One),
        ]);
        assert_eq!(
            path_bikernel(&g).unwrap(),
            BikernelVerdict::Found(vec!["a".into(), "c".into(), "e".into()])
        );

        // P4 alternating: even order.
        let g = graph(&[("a", "b", One), ("b", "c", Two), ("c", "d", One)]);
        assert!(!path_bikernel(&g).unwrap().exists());

        // P3 with a two-arc color-2 run.
        let g = graph(&[("a", "b", Two), ("b", "c", Two)]);
        assert_eq!(
            path_bikernel(&g).unwrap(),
            BikernelVerdict::None(NoBikernelReason::AdjacentCriticalPair {
                from: "a".into(),
                to: "b".into(),
                color: Two,
            })
        );

        // Single vertex: trivially a path with a bikernel.
        let g = BicoloredDigraph::from_arcs(&["v"], &[]).unwrap();
        assert_eq!(
            path_bikernel(&g).unwrap(),
            BikernelVerdict::Found(vec!["v".into()])
        );

        assert_eq!(
            path_bikernel(&graph(&[("a", "b", One), ("b", "a", One), ("b", "c", One)])),
            Err(FamilyError::NotAPath)
        );
    }

    #[test]
    fn cycle_characterization_examples() {
        // Alternating C6: the three heads of color-1 arcs.
        let g = graph(&[
            ("x1", "x2", One),
            ("x2", "x3", Two),
            ("x3", "x4", One),
            ("x4", "x5", Two),
            ("x5", "x6", One),
            ("x6", "x1", Two),
        ]);
        assert_eq!(
            cycle_bikernel(&g).unwrap(),
            BikernelVerdict::Found(vec!["x2".into(), "x4".into(), "x6".into()])
        );

        // C4 colored 1,1,2,2.
        let g = graph(&[
            ("x1", "x2", One),
            ("x2", "x3", One),
            ("x3", "x4", Two),
            ("x4", "x1", Two),
        ]);
        assert!(!cycle_bikernel(&g).unwrap().exists());

        // Monochromatic C3.
        let g = graph(&[("x1", "x2", One), ("x2", "x3", One), ("x3", "x1", One)]);
        assert!(!cycle_bikernel(&g).unwrap().exists());
    }

    #[test]
    fn chorded_cycle_with_one_double_run() {
        // C5 base with one color-1 run (x1,x2,x3), chord (x4,x2) color 2.
        let g = graph(&[
            ("x1", "x2", One),
            ("x2", "x3", One),
            ("x3", "x4", Two),
            ("x4", "x5", One),
            ("x5", "x1", Two),
            ("x4", "x2", Two),
        ]);
        assert_eq!(
            chorded_cycle_bikernel(&g).unwrap(),
            BikernelVerdict::Found(vec!["x3".into(), "x5".into()])
        );
    }

    #[test]
    fn chorded_cycle_rejections() {
        // Alternating C6 base with a chord joining two bikernel members.
        let g = graph(&[
            ("x1", "x2", One),
            ("x2", "x3", Two),
            ("x3", "x4", One),
            ("x4", "x5", Two),
            ("x5", "x6", One),
            ("x6", "x1", Two),
            ("x2", "x4", One),
        ]);
        let verdict = chorded_cycle_bikernel(&g).unwrap();
        assert!(!verdict.exists());
        assert!(!solve_brute(&g).unwrap().exists());

        // A base run of three arcs can never be repaired by a chord.
        let g = graph(&[
            ("x1", "x2", One),
            ("x2", "x3", One),
            ("x3", "x4", One),
            ("x4", "x5", Two),
            ("x5", "x1", Two),
            ("x3", "x1", Two),
        ]);
        assert!(!chorded_cycle_bikernel(&g).unwrap().exists());
        assert!(!solve_brute(&g).unwrap().exists());

        assert_eq!(
            chorded_cycle_bikernel(&graph(&[("a", "b", One)])),
            Err(FamilyError::NotAChordedCycle)
        );
    }

    #[test]
    fn regular22_examples() {
        // Color 1: one 4-cycle; color 2: two 2-cycles.
        let g = graph(&[
            ("a", "b", One),
            ("b", "c", One),
            ("c", "d", One),
            ("d", "a", One),
            ("a", "b", Two),
            ("b", "a", Two),
            ("c", "d", Two),
            ("d", "c", Two),
        ]);
        assert_eq!(
            regular22_necessary(&g).unwrap(),
            RegularCheck::Fails {
                color1_cycles: 1,
                color2_cycles: 2
            }
        );
        assert!(!solve_brute(&g).unwrap().exists());

        // Color 1: one 4-cycle; color 2: the reversed 4-cycle.
        let g = graph(&[
            ("a", "b", One),
            ("b", "c", One),
            ("c", "d", One),
            ("d", "a", One),
            ("b", "a", Two),
            ("c", "b", Two),
            ("d", "c", Two),
            ("a", "d", Two),
        ]);
        assert_eq!(
            regular22_necessary(&g).unwrap(),
            RegularCheck::InconclusivePass { cycles: 1 }
        );

        // Two vertices joined both ways in both colors.
        let g = graph(&[
            ("u", "v", One),
            ("v", "u", One),
            ("u", "v", Two),
            ("v", "u", Two),
        ]);
        assert_eq!(
            regular22_necessary(&g).unwrap(),
            RegularCheck::InconclusivePass { cycles: 1 }
        );

        assert_eq!(
            regular22_necessary(&graph(&[("a", "b", One)])),
            Err(FamilyError::NotRegular22 { vertex: "a".into() })
        );
    }

    /// Spot check of the exhaustive agreement the acceptance suite runs at
    /// full scale, plus the parallel-chord ambiguity.
    #[test]
    fn chorded_agrees_with_brute_on_seeded_instances() {
        let mut rng = SplitMix64::new(0xabcd);
        for _ in 0..400 {
            let n = 4 + rng.below(4) as usize;
            let g = gen::random_chorded_cycle(&mut rng, n);
            let fast = chorded_cycle_bikernel(&g).unwrap();
            let brute = solve_brute(&g).unwrap();
            assert_eq!(fast.exists(), brute.exists(), "graph {g:?}");
        }

        // Chord parallel to a base arc with the opposite color: both splits
        // are valid and must agree.
        let colors = [One, One, Two, One, Two];
        let g = gen::chorded_cycle_with(&colors, 0, 1, Two);
        let fast = chorded_cycle_bikernel(&g).unwrap();
        let brute = solve_brute(&g).unwrap();
        assert_eq!(fast.exists(), brute.exists());
    }
}
