//! BK-colorability: finding an arc 2-coloring under which a bikernel
//! exists, for acyclic digraphs (through star decompositions) and for
//! tournaments (through the strong-connectivity construction).

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::condensation::tarjan_scc;
use crate::graph::{BicoloredDigraph, Color, Digraph, Vertex};
use crate::solve::solve_brute_capped;
use crate::verify::{is_bikernel, BikernelCheck};

/// A partition of all arcs into stars: every arc is assigned to exactly one
/// of its endpoints (its star's center), and every center has at least one
/// assigned inward and one assigned outward arc.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarDecomposition {
    pub centers: BTreeSet<String>,
    /// (tail, head) -> center name.
    pub assignment: BTreeMap<(String, String), String>,
}

/// Why no BK-coloring exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotColorable {
    /// An arc whose endpoints can neither of them serve as a star center
    /// (the tail has no inward arc, the head no outward arc), so the arc
    /// fits in no star.
    DeadArc { tail: String, head: String },
    /// Every assignment of arcs to centers leaves some center without an
    /// inward or outward arc (search exhausted).
    NoStarAssignment,
    /// A proper nonempty vertex set without outgoing arcs.
    NotStronglyConnected { trapped: Vec<String> },
    /// Exhaustive search over all colorings found none (small instances).
    NoColoringFound,
}

/// Result of a coloring search: the colored digraph with its bikernel, or a
/// reason.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColoringResult {
    Colored {
        graph: BicoloredDigraph,
        bikernel: Vec<String>,
    },
    NotColorable(NotColorable),
}

/// Result of the star-decomposition search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StarDecompositionOutcome {
    Found(StarDecomposition),
    Infeasible(NotColorable),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BkColorError {
    #[error("digraph has a directed cycle through {vertex:?}")]
    DirectedCycle { vertex: String },
    #[error("digraph is not a tournament")]
    NotATournament,
    #[error("invalid star decomposition: {detail}")]
    InvalidDecomposition { detail: String },
    #[error("internal: no removable vertex keeps the tournament strongly connected")]
    NoRemovableVertex,
    #[error("internal: {context} produced a coloring that failed verification")]
    SelfCheckFailed { context: &'static str },
    #[error("digraph is neither acyclic nor a tournament; no characterization applies")]
    Unsupported,
}

/// Vertex role during the star search: centers receive arcs, the rest
/// (exactly the future bikernel) receive none.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Label {
    Unknown,
    Center,
    Free,
}

/// Tries to complete a center/free labeling. Invariants: no arc joins two
/// free vertices (it would belong to no star), so labeling a vertex free
/// forces all its neighbors to be centers; a vertex without inward or
/// outward arcs can never be a center. A full labeling is feasible when
/// every center can claim a private inward arc and a private outward arc
/// among the arcs assignable to it (a bipartite matching).
fn search_labels(d: &Digraph, labels: &mut Vec<Label>, from: usize) -> Option<Vec<Label>> {
    // Propagate forced labels.
    let mut queue: VecDeque<usize> = (0..labels.len()).collect();
    let mut touched = Vec::new();
    let set = |labels: &mut Vec<Label>,
               touched: &mut Vec<usize>,
               queue: &mut VecDeque<usize>,
               v: usize,
               label: Label| {
        match labels[v] {
            Label::Unknown => {
                labels[v] = label;
                touched.push(v);
                queue.push_back(v);
                true
            }
            current => current == label,
        }
    };
    let mut consistent = true;
    while let Some(v) = queue.pop_front() {
        let vx = Vertex(v as u32);
        let internal = !d.out_neighbors(vx).is_empty() && !d.in_neighbors(vx).is_empty();
        if !internal && !set(labels, &mut touched, &mut queue, v, Label::Free) {
            consistent = false;
            break;
        }
        if labels[v] == Label::Free {
            let neighbors: Vec<usize> = d
                .out_neighbors(vx)
                .iter()
                .chain(d.in_neighbors(vx))
                .map(|w| w.index())
                .collect();
            if neighbors
                .into_iter()
                .any(|w| !set(labels, &mut touched, &mut queue, w, Label::Center))
            {
                consistent = false;
                break;
            }
        }
    }

    let result = if !consistent {
        None
    } else if let Some(next) = (from..labels.len()).find(|&v| labels[v] == Label::Unknown) {
        // Free first: it yields the larger bikernel and the smaller center
        // set, deterministically.
        [Label::Free, Label::Center].into_iter().find_map(|guess| {
            labels[next] = guess;
            let found = search_labels(d, labels, next + 1);
            labels[next] = Label::Unknown;
            found
        })
    } else if centers_are_servable(d, labels) {
        Some(labels.clone())
    } else {
        None
    };

    for v in touched {
        labels[v] = Label::Unknown;
    }
    result
}

/// Every center needs a private inward and a private outward arc; arcs with
/// a free endpoint serve only their center endpoint, arcs between two
/// centers may serve either. Checked as a bipartite matching between center
/// roles and arcs.
fn centers_are_servable(d: &Digraph, labels: &[Label]) -> bool {
    matching_for_centers(d, labels).is_some()
}

/// Role indices: 2*v for "inward arc of v", 2*v+1 for "outward arc of v".
fn matching_for_centers(d: &Digraph, labels: &[Label]) -> Option<Vec<Option<usize>>> {
    let roles: Vec<usize> = labels
        .iter()
        .enumerate()
        .filter(|&(_, &l)| l == Label::Center)
        .flat_map(|(v, _)| [2 * v, 2 * v + 1])
        .collect();
    let role_slot: BTreeMap<usize, usize> =
        roles.iter().enumerate().map(|(i, &r)| (r, i)).collect();

    let adj: Vec<Vec<usize>> = roles
        .iter()
        .map(|&role| {
            let v = Vertex((role / 2) as u32);
            let arcs = d.arcs();
            let mine: Vec<usize> = (0..arcs.len())
                .filter(|&i| {
                    let (t, h) = arcs[i];
                    if role % 2 == 0 {
                        h == v
                    } else {
                        t == v
                    }
                })
                .collect();
            mine
        })
        .collect();

    let matching = crate::matching::hopcroft_karp(&adj, d.arc_count());
    if matching.iter().all(|m| m.is_some()) {
        let mut by_slot = vec![None; 2 * labels.len()];
        for (&role, &slot) in &role_slot {
            by_slot[role] = matching[slot];
        }
        Some(by_slot)
    } else {
        None
    }
}

/// Searches for a star decomposition of an acyclic digraph: an assignment
/// of every arc to one of its endpoints such that every vertex that
/// receives arcs receives both an inward and an outward one.
pub fn find_star_decomposition(d: &Digraph) -> Result<StarDecompositionOutcome, BkColorError> {
    if let Some(v) = d.cycle_vertex() {
        return Err(BkColorError::DirectedCycle {
            vertex: d.name(v).to_string(),
        });
    }

    // An arc between a vertex with no inward arc and one with no outward
    // arc fits in no star; report it rather than searching.
    for &(t, h) in d.arcs() {
        if d.in_neighbors(t).is_empty() && d.out_neighbors(h).is_empty() {
            return Ok(StarDecompositionOutcome::Infeasible(
                NotColorable::DeadArc {
                    tail: d.name(t).to_string(),
                    head: d.name(h).to_string(),
                },
            ));
        }
    }

    let mut labels = vec![Label::Unknown; d.vertex_count()];
    let labels = match search_labels(d, &mut labels, 0) {
        Some(labels) => labels,
        None => {
            return Ok(StarDecompositionOutcome::Infeasible(
                NotColorable::NoStarAssignment,
            ))
        }
    };

    let witness = matching_for_centers(d, &labels).expect("search only returns servable labelings");
    let mut assignment: BTreeMap<(String, String), String> = BTreeMap::new();
    let mut claimed: BTreeMap<usize, usize> = BTreeMap::new();
    for (role, arc) in witness.iter().enumerate() {
        if let Some(arc) = *arc {
            claimed.insert(arc, role / 2);
        }
    }
    for (i, &(t, h)) in d.arcs().iter().enumerate() {
        let center = match claimed.get(&i) {
            Some(&v) => Vertex(v as u32),
            // Unclaimed arcs go to their center endpoint, tail preferred.
            None if labels[t.index()] == Label::Center => t,
            None => h,
        };
        assignment.insert(
            (d.name(t).to_string(), d.name(h).to_string()),
            d.name(center).to_string(),
        );
    }
    let centers = labels
        .iter()
        .enumerate()
        .filter(|&(_, &l)| l == Label::Center)
        .map(|(v, _)| d.name(Vertex(v as u32)).to_string())
        .collect();

    Ok(StarDecompositionOutcome::Found(StarDecomposition {
        centers,
        assignment,
    }))
}

fn validate_decomposition(d: &Digraph, s: &StarDecomposition) -> Result<(), BkColorError> {
    let invalid = |detail: String| Err(BkColorError::InvalidDecomposition { detail });

    for center in &s.centers {
        if d.vertex(center).is_none() {
            return invalid(format!("center {center:?} is not a vertex"));
        }
    }
    if s.assignment.len() != d.arc_count() {
        return invalid(format!(
            "{} arcs assigned, digraph has {}",
            s.assignment.len(),
            d.arc_count()
        ));
    }
    for ((tail, head), center) in &s.assignment {
        let (t, h) = match (d.vertex(tail), d.vertex(head)) {
            (Some(t), Some(h)) => (t, h),
            _ => {
                return invalid(format!(
                    "assigned arc {tail} -> {head} is not in the digraph"
                ))
            }
        };
        if !d.out_neighbors(t).contains(&h) {
            return invalid(format!(
                "assigned arc {tail} -> {head} is not in the digraph"
            ));
        }
        if center != tail && center != head {
            return invalid(format!(
                "arc {tail} -> {head} assigned to non-endpoint {center}"
            ));
        }
        if !s.centers.contains(center) {
            return invalid(format!(
                "arc {tail} -> {head} assigned to non-center {center}"
            ));
        }
    }
    // Every center needs an assigned inward and an assigned outward arc.
    for center in &s.centers {
        let has_in = s
            .assignment
            .iter()
            .any(|((_, head), c)| c == center && head == center);
        let has_out = s
            .assignment
            .iter()
            .any(|((tail, _), c)| c == center && tail == center);
        if !has_in || !has_out {
            return invalid(format!("center {center} lacks an inward or outward arc"));
        }
    }
    Ok(())
}

/// Colors a star decomposition: outward arcs of each star's center get
/// color 1, inward arcs color 2; the bikernel is the set of non-centers.
pub fn color_from_stars(
    d: &Digraph,
    s: &StarDecomposition,
) -> Result<ColoringResult, BkColorError> {
    validate_decomposition(d, s)?;
    let colors: Vec<Color> = d
        .arcs()
        .iter()
        .map(|&(t, h)| {
            let key = (d.name(t).to_string(), d.name(h).to_string());
            if s.assignment[&key] == d.name(t) {
                Color::One
            } else {
                Color::Two
            }
        })
        .collect();
    let graph = d.colored_with(&colors);
    let bikernel: Vec<String> = d
        .names()
        .iter()
        .filter(|name| !s.centers.contains(*name))
        .cloned()
        .collect();
    let set = graph
        .vertex_set(bikernel.iter().map(String::as_str))
        .expect("non-centers are vertices");
    match is_bikernel(&graph, &set) {
        BikernelCheck::Yes => Ok(ColoringResult::Colored { graph, bikernel }),
        BikernelCheck::No(_) => Err(BkColorError::SelfCheckFailed {
            context: "color_from_stars",
        }),
    }
}

fn digraph_components(d: &Digraph) -> Vec<Vec<usize>> {
    let adj: Vec<Vec<usize>> = (0..d.vertex_count())
        .map(|v| {
            d.out_neighbors(Vertex(v as u32))
                .iter()
                .map(|w| w.index())
                .collect()
        })
        .collect();
    tarjan_scc(&adj)
}

/// A proper nonempty vertex set with no outgoing arcs (a terminal strongly
/// connected component), if the digraph is not strongly connected.
fn trapped_set(d: &Digraph) -> Option<Vec<String>> {
    let comps = digraph_components(d);
    if comps.len() <= 1 {
        return None;
    }
    // Tarjan emits components in reverse topological order, so the first
    // one has no outgoing arcs.
    let mut names: Vec<String> = comps[0]
        .iter()
        .map(|&v| d.name(Vertex(v as u32)).to_string())
        .collect();
    names.sort();
    Some(names)
}

/// First coloring (by mask order over the sorted arc list) under which a
/// bikernel exists; exhaustive over all `2^arcs` colorings.
fn exhaustive_coloring_search(d: &Digraph) -> Option<(BicoloredDigraph, Vec<String>)> {
    let arc_count = d.arc_count();
    assert!(arc_count <= 20, "exhaustive coloring search is exponential");
    for mask in 0u32..1 << arc_count {
        let colors: Vec<Color> = (0..arc_count)
            .map(|i| {
                if mask >> i & 1 == 1 {
                    Color::Two
                } else {
                    Color::One
                }
            })
            .collect();
        let graph = d.colored_with(&colors);
        if let Ok(verdict) = solve_brute_capped(&graph, 20) {
            if let Some(b) = verdict.found() {
                return Some((graph, b.to_vec()));
            }
        }
    }
    None
}

/// Recursive coloring of a strongly connected tournament on >= 4 vertices:
/// remove a vertex that keeps the rest strong, color the rest, then color
/// its inward arcs 2 and outward arcs 1.
fn color_strong_tournament(t: &Digraph) -> Result<(BicoloredDigraph, String), BkColorError> {
    if t.vertex_count() == 4 {
        return exhaustive_coloring_search(t)
            .map(|(graph, b)| {
                let kernel = b[0].clone();
                (graph, kernel)
            })
            .ok_or(BkColorError::SelfCheckFailed {
                context: "color_strong_tournament base case",
            });
    }

    let v = t
        .vertices()
        .find(|&v| t.remove_vertex(v).is_strongly_connected())
        .ok_or(BkColorError::NoRemovableVertex)?;
    let (sub, kernel) = color_strong_tournament(&t.remove_vertex(v))?;

    let vertices: Vec<&str> = t.names().iter().map(String::as_str).collect();
    let mut arcs: Vec<(&str, &str, Color)> = sub
        .arcs()
        .iter()
        .map(|a| (sub.name(a.tail), sub.name(a.head), a.color))
        .collect();
    for &(tail, head) in t.arcs() {
        if tail == v {
            arcs.push((t.name(tail), t.name(head), Color::One));
        } else if head == v {
            arcs.push((t.name(tail), t.name(head), Color::Two));
        }
    }
    let graph = BicoloredDigraph::from_arcs(&vertices, &arcs)
        .expect("extending a coloring preserves validity");
    Ok((graph, kernel))
}

/// BK-colors a tournament: possible iff it is strongly connected (on at
/// least 4 vertices); tournaments on up to 3 vertices are settled by
/// exhaustive search.
pub fn color_tournament(t: &Digraph) -> Result<ColoringResult, BkColorError> {
    if !t.is_tournament() {
        return Err(BkColorError::NotATournament);
    }
    let n = t.vertex_count();
    if n <= 3 {
        return Ok(match exhaustive_coloring_search(t) {
            Some((graph, bikernel)) => ColoringResult::Colored { graph, bikernel },
            None => ColoringResult::NotColorable(NotColorable::NoColoringFound),
        });
    }
    if let Some(trapped) = trapped_set(t) {
        return Ok(ColoringResult::NotColorable(
            NotColorable::NotStronglyConnected { trapped },
        ));
    }

    let (graph, kernel) = color_strong_tournament(t)?;
    let set = graph
        .vertex_set([kernel.as_str()])
        .expect("kernel is a vertex");
    match is_bikernel(&graph, &set) {
        BikernelCheck::Yes => Ok(ColoringResult::Colored {
            graph,
            bikernel: vec![kernel],
        }),
        BikernelCheck::No(_) => Err(BkColorError::SelfCheckFailed {
            context: "color_tournament",
        }),
    }
}

/// Routes an uncolored digraph to the matching characterization: star
/// decompositions for acyclic inputs, the strong-connectivity construction
/// for tournaments.
pub fn bk_color(d: &Digraph) -> Result<ColoringResult, BkColorError> {
    if d.vertex_count() == 0 {
        return Ok(ColoringResult::NotColorable(NotColorable::NoColoringFound));
    }
    if d.cycle_vertex().is_none() {
        return match find_star_decomposition(d)? {
            StarDecompositionOutcome::Found(s) => color_from_stars(d, &s),
            StarDecompositionOutcome::Infeasible(reason) => {
                Ok(ColoringResult::NotColorable(reason))
            }
        };
    }
    if d.is_tournament() {
        return color_tournament(d);
    }
    Err(BkColorError::Unsupported)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::gen::SplitMix64;

    fn digraph(arcs: &[(&str, &str)]) -> Digraph {
        Digraph::from_arcs(&[], arcs).unwrap()
    }

    #[test]
    fn two_arc_chain_centers_on_the_middle() {
        let d = digraph(&[("a", "c"), ("c", "b")]);
        match find_star_decomposition(&d).unwrap() {
            StarDecompositionOutcome::Found(s) => {
                assert_eq!(s.centers.iter().collect::<Vec<_>>(), ["c"]);
                assert_eq!(s.assignment.len(), 2);
                assert!(s.assignment.values().all(|c| c == "c"));
                match color_from_stars(&d, &s).unwrap() {
                    ColoringResult::Colored { graph, bikernel } => {
                        assert_eq!(bikernel, ["a", "b"]);
                        let c = graph.vertex("c").unwrap();
                        let a = graph.vertex("a").unwrap();
                        let b = graph.vertex("b").unwrap();
                        assert!(graph.has_arc(c, b, Color::One));
                        assert!(graph.has_arc(a, c, Color::Two));
                    }
                    other => panic!("expected coloring, got {other:?}"),
                }
            }
            other => panic!("expected decomposition, got {other:?}"),
        }
    }

    #[test]
    fn single_arc_fits_in_no_star() {
        let d = digraph(&[("u", "v")]);
        assert_eq!(
            find_star_decomposition(&d).unwrap(),
            StarDecompositionOutcome::Infeasible(NotColorable::DeadArc {
                tail: "u".into(),
                head: "v".into(),
            })
        );
        // Exhaustive confirmation: neither of the two colorings works.
        assert!(exhaustive_coloring_search(&d).is_none());
    }

    /// Adjacent centers are legitimate: here {a, c} must both be centers
    /// even though the arc c -> a joins them, and the coloring works out.
    #[test]
    fn triangle_with_tail_needs_adjacent_centers() {
        let d = digraph(&[("a", "d"), ("b", "a"), ("b", "c"), ("c", "a")]);
        match find_star_decomposition(&d).unwrap() {
            StarDecompositionOutcome::Found(s) => {
                assert_eq!(s.centers.iter().collect::<Vec<_>>(), ["a", "c"]);
                match color_from_stars(&d, &s).unwrap() {
                    ColoringResult::Colored { bikernel, .. } => {
                        assert_eq!(bikernel, ["b", "d"]);
                    }
                    other => panic!("expected coloring, got {other:?}"),
                }
            }
            other => panic!("expected decomposition, got {other:?}"),
        }
    }

    #[test]
    fn three_arc_star() {
        let d = digraph(&[("a", "c"), ("c", "b"), ("d", "c")]);
        match find_star_decomposition(&d).unwrap() {
            StarDecompositionOutcome::Found(s) => {
                assert_eq!(s.centers.iter().collect::<Vec<_>>(), ["c"]);
                assert_eq!(s.assignment.len(), 3);
            }
            other => panic!("expected decomposition, got {other:?}"),
        }
    }

    #[test]
    fn hand_built_decompositions_are_validated() {
        let d = digraph(&[("a", "b"), ("b", "c"), ("c", "d")]);
        let s = StarDecomposition {
            centers: BTreeSet::from(["b".to_string()]),
            assignment: BTreeMap::from([
                (("a".to_string(), "b".to_string()), "b".to_string()),
                (("b".to_string(), "c".to_string()), "b".to_string()),
            ]),
        };
        assert!(matches!(
            color_from_stars(&d, &s),
            Err(BkColorError::InvalidDecomposition { .. })
        ));
    }

    #[test]
    fn disjoint_stars_color_componentwise() {
        let d = digraph(&[("a", "c"), ("c", "b"), ("x", "z"), ("z", "y")]);
        match bk_color(&d).unwrap() {
            ColoringResult::Colored { bikernel, .. } => {
                assert_eq!(bikernel, ["a", "b", "x", "y"]);
            }
            other => panic!("expected coloring, got {other:?}"),
        }
    }

    #[test]
    fn transitive_triangle_is_rejected() {
        // The source-to-sink arc fits in no star.
        let d = digraph(&[("a", "b"), ("a", "c"), ("b", "c")]);
        assert_eq!(
            find_star_decomposition(&d).unwrap(),
            StarDecompositionOutcome::Infeasible(NotColorable::DeadArc {
                tail: "a".into(),
                head: "c".into(),
            })
        );
        assert!(exhaustive_coloring_search(&d).is_none());
    }

    #[test]
    fn directed_cycles_are_refused() {
        let d = digraph(&[("a", "b"), ("b", "a")]);
        assert!(matches!(
            find_star_decomposition(&d),
            Err(BkColorError::DirectedCycle { .. })
        ));
    }

    #[test]
    fn known_coloring_of_the_strong_4_tournament_verifies() {
        // 1->2, 2->3, 3->4 colored 2; 3->1, 4->1, 2->4 colored 1; then {1}
        // is a bikernel.
        let g = BicoloredDigraph::from_arcs(
            &[],
            &[
                ("1", "2", Color::Two),
                ("2", "3", Color::Two),
                ("3", "4", Color::Two),
                ("3", "1", Color::One),
                ("4", "1", Color::One),
                ("2", "4", Color::One),
            ],
        )
        .unwrap();
        let set = g.vertex_set(["1"]).unwrap();
        assert!(is_bikernel(&g, &set).is_yes());
    }

    #[test]
    fn strong_4_tournament_gets_colored() {
        let t = digraph(&[
            ("1", "2"),
            ("2", "3"),
            ("3", "4"),
            ("3", "1"),
            ("4", "1"),
            ("2", "4"),
        ]);
        match color_tournament(&t).unwrap() {
            ColoringResult::Colored { graph, bikernel } => {
                assert_eq!(bikernel.len(), 1);
                let set = graph
                    .vertex_set(bikernel.iter().map(String::as_str))
                    .unwrap();
                assert!(is_bikernel(&graph, &set).is_yes());
            }
            other => panic!("expected coloring, got {other:?}"),
        }
    }

    #[test]
    fn transitive_tournament_is_not_colorable() {
        let t = digraph(&[
            ("a", "b"),
            ("a", "c"),
            ("a", "d"),
            ("b", "c"),
            ("b", "d"),
            ("c", "d"),
        ]);
        match color_tournament(&t).unwrap() {
            ColoringResult::NotColorable(NotColorable::NotStronglyConnected { trapped }) => {
                assert_eq!(trapped, ["d"]);
            }
            other => panic!("expected not-strong witness, got {other:?}"),
        }
    }

    #[test]
    fn directed_triangle_has_no_coloring() {
        let t = digraph(&[("a", "b"), ("b", "c"), ("c", "a")]);
        assert_eq!(
            color_tournament(&t).unwrap(),
            ColoringResult::NotColorable(NotColorable::NoColoringFound)
        );
    }

    #[test]
    fn random_strong_tournaments_color_up_to_six() {
        let mut rng = SplitMix64::new(0x70ff);
        let mut colored = 0;
        while colored < 30 {
            let n = 5 + rng.below(2) as usize;
            let t = gen::random_tournament(&mut rng, n);
            if !t.is_strongly_connected() {
                continue;
            }
            match color_tournament(&t).unwrap() {
                ColoringResult::Colored { graph, bikernel } => {
                    assert_eq!(bikernel.len(), 1);
                    let set = graph
                        .vertex_set(bikernel.iter().map(String::as_str))
                        .unwrap();
                    assert!(is_bikernel(&graph, &set).is_yes());
                }
                other => panic!("strong tournament not colored: {other:?}"),
            }
            colored += 1;
        }
    }

    #[test]
    fn router_rejects_cyclic_non_tournaments() {
        let d = digraph(&[("a", "b"), ("b", "a"), ("c", "a")]);
        assert_eq!(bk_color(&d), Err(BkColorError::Unsupported));
    }
}
