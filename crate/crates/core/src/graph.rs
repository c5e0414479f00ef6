//! Graph data model: bicolored digraphs, uncolored digraphs and vertex sets.
//!
//! Vertices are identified by user-supplied names. Internally every graph
//! stores its names sorted lexicographically and addresses vertices by dense
//! [`Vertex`] indices, so index order and name order coincide. All graphs are
//! immutable after construction.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// One of the two arc colors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    One,
    Two,
}

impl Color {
    pub const BOTH: [Color; 2] = [Color::One, Color::Two];

    /// The other color.
    pub fn other(self) -> Color {
        match self {
            Color::One => Color::Two,
            Color::Two => Color::One,
        }
    }

    /// 0 for color 1, 1 for color 2; used to index per-color tables.
    pub fn index(self) -> usize {
        match self {
            Color::One => 0,
            Color::Two => 1,
        }
    }

    pub fn from_u8(value: u8) -> Option<Color> {
        match value {
            1 => Some(Color::One),
            2 => Some(Color::Two),
            _ => None,
        }
    }

    pub fn as_u8(self) -> u8 {
        match self {
            Color::One => 1,
            Color::Two => 2,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_u8())
    }
}

/// Dense index of a vertex within one graph. Indices follow the
/// lexicographic order of the vertex names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(pub(crate) u32);

impl Vertex {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A colored arc, addressed by vertex indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub tail: Vertex,
    pub head: Vertex,
    pub color: Color,
}

/// Arc direction relative to a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    In,
    Out,
}

/// Criticality of a vertex, decided by its color-1 out-degree and color-2
/// in-degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Criticality {
    NotCritical,
    /// No outgoing color-1 arcs (but some incoming color-2 arc).
    OneSink,
    /// No incoming color-2 arcs (but some outgoing color-1 arc).
    TwoSource,
    /// Both degrees are zero.
    Supercritical,
}

impl Criticality {
    /// A critical vertex is a 1-sink or a 2-source (or both).
    pub fn is_critical(self) -> bool {
        !matches!(self, Criticality::NotCritical)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex name may not be empty")]
    EmptyName,
    #[error("illegal vertex name {name:?}: whitespace and '#' are not allowed")]
    IllegalName { name: String },
    #[error("self-loop at vertex {name:?}")]
    SelfLoop { name: String },
    #[error("duplicate arc {tail} -> {head} with color {color}")]
    DuplicateArc {
        tail: String,
        head: String,
        color: Color,
    },
    #[error("duplicate arc {tail} -> {head}")]
    DuplicateArcUncolored { tail: String, head: String },
    #[error("unknown vertex {name:?}")]
    UnknownVertex { name: String },
}

fn check_name(name: &str) -> Result<(), GraphError> {
    if name.is_empty() {
        return Err(GraphError::EmptyName);
    }
    if name.chars().any(|c| c.is_whitespace() || c == '#') {
        return Err(GraphError::IllegalName {
            name: name.to_string(),
        });
    }
    Ok(())
}

fn intern_names<'a, I>(declared: I, endpoints: &[&str]) -> Result<Vec<String>, GraphError>
where
    I: IntoIterator<Item = &'a str>,
{
    let mut set = BTreeSet::new();
    for name in declared {
        check_name(name)?;
        set.insert(name.to_string());
    }
    for name in endpoints {
        check_name(name)?;
        set.insert(name.to_string());
    }
    Ok(set.into_iter().collect())
}

fn lookup(names: &[String], name: &str) -> Result<Vertex, GraphError> {
    names
        .binary_search_by(|n| n.as_str().cmp(name))
        .map(|i| Vertex(i as u32))
        .map_err(|_| GraphError::UnknownVertex {
            name: name.to_string(),
        })
}

/// A finite loop-free digraph whose arcs carry color 1 or color 2. Both
/// colors may be present on the same ordered vertex pair, but exact
/// duplicate arcs are rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicoloredDigraph {
    names: Vec<String>,
    arcs: Vec<Arc>,
    // out[color][v] / inn[color][v]: sorted neighbor lists.
    out: [Vec<Vec<Vertex>>; 2],
    inn: [Vec<Vec<Vertex>>; 2],
}

impl BicoloredDigraph {
    /// Builds a graph from isolated-vertex declarations plus arcs. Arc
    /// endpoints are declared implicitly.
    pub fn from_arcs(
        vertices: &[&str],
        arcs: &[(&str, &str, Color)],
    ) -> Result<BicoloredDigraph, GraphError> {
        let endpoints: Vec<&str> = arcs.iter().flat_map(|(t, h, _)| [*t, *h]).collect();
        let names = intern_names(vertices.iter().copied(), &endpoints)?;
        let n = names.len();

        let mut resolved = Vec::with_capacity(arcs.len());
        let mut seen = BTreeSet::new();
        for &(tail, head, color) in arcs {
            if tail == head {
                return Err(GraphError::SelfLoop {
                    name: tail.to_string(),
                });
            }
            let arc = Arc {
                tail: lookup(&names, tail)?,
                head: lookup(&names, head)?,
                color,
            };
            if !seen.insert((arc.tail, arc.head, arc.color)) {
                return Err(GraphError::DuplicateArc {
                    tail: tail.to_string(),
                    head: head.to_string(),
                    color,
                });
            }
            resolved.push(arc);
        }
        resolved.sort();

        let mut out = [vec![Vec::new(); n], vec![Vec::new(); n]];
        let mut inn = [vec![Vec::new(); n], vec![Vec::new(); n]];
        for arc in &resolved {
            out[arc.color.index()][arc.tail.index()].push(arc.head);
            inn[arc.color.index()][arc.head.index()].push(arc.tail);
        }
        for lists in out.iter_mut().chain(inn.iter_mut()) {
            for list in lists.iter_mut() {
                list.sort();
            }
        }

        Ok(BicoloredDigraph {
            names,
            arcs: resolved,
            out,
            inn,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.names.len() as u32).map(Vertex)
    }

    /// Arcs sorted by (tail, head, color).
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Looks a vertex up by name.
    pub fn vertex(&self, name: &str) -> Option<Vertex> {
        lookup(&self.names, name).ok()
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn has_arc(&self, tail: Vertex, head: Vertex, color: Color) -> bool {
        self.out[color.index()][tail.index()]
            .binary_search(&head)
            .is_ok()
    }

    /// Sorted color-`c` out-neighbors of `v`.
    pub fn out_neighbors(&self, v: Vertex, color: Color) -> &[Vertex] {
        &self.out[color.index()][v.index()]
    }

    /// Sorted color-`c` in-neighbors of `v`.
    pub fn in_neighbors(&self, v: Vertex, color: Color) -> &[Vertex] {
        &self.inn[color.index()][v.index()]
    }

    /// Vertex degree, optionally restricted to one color.
    pub fn degree(&self, v: Vertex, direction: Direction, color: Option<Color>) -> usize {
        let table = match direction {
            Direction::Out => &self.out,
            Direction::In => &self.inn,
        };
        match color {
            Some(c) => table[c.index()][v.index()].len(),
            None => table[0][v.index()].len() + table[1][v.index()].len(),
        }
    }

    /// Classifies `v` by its color-1 out-degree and color-2 in-degree.
    pub fn criticality(&self, v: Vertex) -> Criticality {
        let one_sink = self.degree(v, Direction::Out, Some(Color::One)) == 0;
        let two_source = self.degree(v, Direction::In, Some(Color::Two)) == 0;
        match (one_sink, two_source) {
            (true, true) => Criticality::Supercritical,
            (true, false) => Criticality::OneSink,
            (false, true) => Criticality::TwoSource,
            (false, false) => Criticality::NotCritical,
        }
    }

    /// Resolves a list of names into a set, rejecting unknown vertices.
    pub fn vertex_set<'a, I>(&self, members: I) -> Result<VertexSet, GraphError>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut set = VertexSet::new(self.vertex_count());
        for name in members {
            set.insert(lookup(&self.names, name)?);
        }
        Ok(set)
    }

    /// The names of the members of `set`, in lexicographic order.
    pub fn set_names(&self, set: &VertexSet) -> Vec<String> {
        set.iter().map(|v| self.name(v).to_string()).collect()
    }
}

/// A loop-free digraph without arc colors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    names: Vec<String>,
    arcs: Vec<(Vertex, Vertex)>,
    out: Vec<Vec<Vertex>>,
    inn: Vec<Vec<Vertex>>,
}

impl Digraph {
    pub fn from_arcs(vertices: &[&str], arcs: &[(&str, &str)]) -> Result<Digraph, GraphError> {
        let endpoints: Vec<&str> = arcs.iter().flat_map(|(t, h)| [*t, *h]).collect();
        let names = intern_names(vertices.iter().copied(), &endpoints)?;
        let n = names.len();

        let mut resolved = Vec::with_capacity(arcs.len());
        let mut seen = BTreeSet::new();
        for &(tail, head) in arcs {
            if tail == head {
                return Err(GraphError::SelfLoop {
                    name: tail.to_string(),
                });
            }
            let pair = (lookup(&names, tail)?, lookup(&names, head)?);
            if !seen.insert(pair) {
                return Err(GraphError::DuplicateArcUncolored {
                    tail: tail.to_string(),
                    head: head.to_string(),
                });
            }
            resolved.push(pair);
        }
        resolved.sort();

        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for &(tail, head) in &resolved {
            out[tail.index()].push(head);
            inn[head.index()].push(tail);
        }
        for list in out.iter_mut().chain(inn.iter_mut()) {
            list.sort();
        }

        Ok(Digraph {
            names,
            arcs: resolved,
            out,
            inn,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.names.len() as u32).map(Vertex)
    }

    /// Arcs sorted by (tail, head).
    pub fn arcs(&self) -> &[(Vertex, Vertex)] {
        &self.arcs
    }

    pub fn vertex(&self, name: &str) -> Option<Vertex> {
        lookup(&self.names, name).ok()
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn out_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.out[v.index()]
    }

    pub fn in_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.inn[v.index()]
    }

    /// Some vertex lying on a directed cycle, or `None` if the digraph is
    /// acyclic. Deterministic: the lexicographically smallest such vertex.
    pub fn cycle_vertex(&self) -> Option<Vertex> {
        // Kahn peeling; what survives is exactly the union of all cycles.
        let n = self.vertex_count();
        let mut indeg: Vec<usize> = (0..n).map(|v| self.inn[v].len()).collect();
        let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut removed = vec![false; n];
        while let Some(v) = queue.pop() {
            removed[v] = true;
            for &w in &self.out[v] {
                indeg[w.index()] -= 1;
                if indeg[w.index()] == 0 {
                    queue.push(w.index());
                }
            }
        }
        (0..n).find(|&v| !removed[v]).map(|v| Vertex(v as u32))
    }

    /// True iff every vertex reaches every other vertex. Vacuously true for
    /// at most one vertex.
    pub fn is_strongly_connected(&self) -> bool {
        let n = self.vertex_count();
        if n <= 1 {
            return true;
        }
        let full_sweep = |lists: &Vec<Vec<Vertex>>| {
            let mut seen = vec![false; n];
            seen[0] = true;
            let mut stack = vec![0usize];
            while let Some(v) = stack.pop() {
                for &w in &lists[v] {
                    if !seen[w.index()] {
                        seen[w.index()] = true;
                        stack.push(w.index());
                    }
                }
            }
            seen.iter().all(|&s| s)
        };
        full_sweep(&self.out) && full_sweep(&self.inn)
    }

    /// True iff there is exactly one arc between every unordered vertex pair.
    pub fn is_tournament(&self) -> bool {
        let n = self.vertex_count();
        if self.arcs.len() != n * (n - 1) / 2 {
            return false;
        }
        for &(t, h) in &self.arcs {
            if self.out[h.index()].binary_search(&t).is_ok() {
                return false;
            }
        }
        true
    }

    /// The same digraph without vertex `v`.
    pub fn remove_vertex(&self, v: Vertex) -> Digraph {
        let keep: Vec<&str> = self
            .vertices()
            .filter(|&u| u != v)
            .map(|u| self.name(u))
            .collect();
        let arcs: Vec<(&str, &str)> = self
            .arcs
            .iter()
            .filter(|&&(t, h)| t != v && h != v)
            .map(|&(t, h)| (self.name(t), self.name(h)))
            .collect();
        Digraph::from_arcs(&keep, &arcs).expect("subgraph of a valid digraph is valid")
    }

    /// Applies a coloring given parallel to `self.arcs()` order.
    pub fn colored_with(&self, colors: &[Color]) -> BicoloredDigraph {
        assert_eq!(colors.len(), self.arcs.len());
        let vertices: Vec<&str> = self.names.iter().map(String::as_str).collect();
        let arcs: Vec<(&str, &str, Color)> = self
            .arcs
            .iter()
            .zip(colors)
            .map(|(&(t, h), &c)| (self.name(t), self.name(h), c))
            .collect();
        BicoloredDigraph::from_arcs(&vertices, &arcs)
            .expect("coloring a valid digraph yields a valid bicolored digraph")
    }
}

/// A subset of the vertices of one graph, stored as a bitset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSet {
    n: usize,
    bits: Vec<u64>,
}

impl VertexSet {
    pub fn new(n: usize) -> VertexSet {
        VertexSet {
            n,
            bits: vec![0; n.div_ceil(64)],
        }
    }

    pub fn from_members<I>(n: usize, members: I) -> VertexSet
    where
        I: IntoIterator<Item = Vertex>,
    {
        let mut set = VertexSet::new(n);
        for v in members {
            set.insert(v);
        }
        set
    }

    pub fn universe_size(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: Vertex) {
        assert!(v.index() < self.n);
        self.bits[v.index() / 64] |= 1 << (v.index() % 64);
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v.index() < self.n && self.bits[v.index() / 64] >> (v.index() % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Members in ascending (lexicographic) order.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.n as u32)
            .map(Vertex)
            .filter(move |&v| self.contains(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Color::{One, Two};

    #[test]
    fn vertices_are_sorted_lexicographically() {
        let g = BicoloredDigraph::from_arcs(&["z", "m"], &[("b", "a", One)]).unwrap();
        assert_eq!(g.names(), &["a", "b", "m", "z"]);
        assert_eq!(g.name(g.vertex("b").unwrap()), "b");
        assert!(g.vertex("q").is_none());
    }

    #[test]
    fn degrees_count_arcs_per_direction_and_color() {
        // a -> b (1), c -> b (2)
        let g = BicoloredDigraph::from_arcs(&[], &[("a", "b", One), ("c", "b", Two)]).unwrap();
        let b = g.vertex("b").unwrap();
        assert_eq!(g.degree(b, Direction::In, None), 2);
        assert_eq!(g.degree(b, Direction::In, Some(Two)), 1);
        assert_eq!(g.degree(b, Direction::Out, None), 0);

        let g = BicoloredDigraph::from_arcs(&["v"], &[]).unwrap();
        let v = g.vertex("v").unwrap();
        assert_eq!(g.degree(v, Direction::Out, Some(One)), 0);
    }

    #[test]
    fn criticality_from_degree_counts() {
        let g = BicoloredDigraph::from_arcs(&["v"], &[]).unwrap();
        assert_eq!(
            g.criticality(g.vertex("v").unwrap()),
            Criticality::Supercritical
        );

        // v -> w (2) and u -> v (2): no color-1 out-arc, one color-2 in-arc.
        let g = BicoloredDigraph::from_arcs(&[], &[("v", "w", Two), ("u", "v", Two)]).unwrap();
        assert_eq!(g.criticality(g.vertex("v").unwrap()), Criticality::OneSink);

        // b has color-1 in and color-2 out: no color-1 out-arc and no
        // color-2 in-arc, hence supercritical.
        let g = BicoloredDigraph::from_arcs(&[], &[("a", "b", One), ("b", "c", Two)]).unwrap();
        assert_eq!(
            g.criticality(g.vertex("a").unwrap()),
            Criticality::TwoSource
        );
        assert_eq!(
            g.criticality(g.vertex("b").unwrap()),
            Criticality::Supercritical
        );

        let g = BicoloredDigraph::from_arcs(&[], &[("a", "b", Two), ("b", "c", One)]).unwrap();
        assert_eq!(
            g.criticality(g.vertex("b").unwrap()),
            Criticality::NotCritical
        );
    }

    #[test]
    fn alternating_path_sink_is_supercritical() {
        // P5 with the arc entering the sink colored 1: e <- d <- c <- b <- a
        // reading arcs toward the sink e, colors alternate 2,1,2,1.
        let g = BicoloredDigraph::from_arcs(
            &[],
            &[
                ("a", "b", Two),
                ("b", "c", One),
                ("c", "d", Two),
                ("d", "e", One),
            ],
        )
        .unwrap();
        assert_eq!(
            g.criticality(g.vertex("e").unwrap()),
            Criticality::Supercritical
        );
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            BicoloredDigraph::from_arcs(&[], &[("a", "a", One)]),
            Err(GraphError::SelfLoop { name: "a".into() })
        );
        assert!(matches!(
            BicoloredDigraph::from_arcs(&[], &[("a", "b", One), ("a", "b", One)]),
            Err(GraphError::DuplicateArc { .. })
        ));
        // Parallel arcs of distinct colors are allowed.
        assert!(BicoloredDigraph::from_arcs(&[], &[("a", "b", One), ("a", "b", Two)]).is_ok());
        assert_eq!(
            BicoloredDigraph::from_arcs(&["a b"], &[]),
            Err(GraphError::IllegalName { name: "a b".into() })
        );
        assert_eq!(
            BicoloredDigraph::from_arcs(&[""], &[]),
            Err(GraphError::EmptyName)
        );
        // Commas are legal in the in-memory model (product vertices use them).
        assert!(BicoloredDigraph::from_arcs(&["a,b"], &[]).is_ok());
    }

    #[test]
    fn digraph_cycle_detection_and_tournament_check() {
        let d = Digraph::from_arcs(&[], &[("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(d.cycle_vertex(), None);
        assert!(!d.is_tournament());

        let d = Digraph::from_arcs(&[], &[("a", "b"), ("b", "c"), ("c", "a")]).unwrap();
        assert_eq!(d.cycle_vertex(), Some(d.vertex("a").unwrap()));
        assert!(d.is_tournament());

        let d = Digraph::from_arcs(&[], &[("a", "b"), ("b", "a")]).unwrap();
        assert!(!d.is_tournament());
    }

    #[test]
    fn remove_vertex_keeps_names() {
        let d = Digraph::from_arcs(&[], &[("a", "b"), ("b", "c"), ("c", "a")]).unwrap();
        let d2 = d.remove_vertex(d.vertex("b").unwrap());
        assert_eq!(d2.names(), &["a", "c"]);
        assert_eq!(d2.arc_count(), 1);
    }

    #[test]
    fn vertex_set_roundtrip() {
        let g = BicoloredDigraph::from_arcs(&["a", "b", "c"], &[]).unwrap();
        let s = g.vertex_set(["c", "a"]).unwrap();
        assert_eq!(g.set_names(&s), vec!["a", "c"]);
        assert_eq!(s.len(), 2);
        assert!(g.vertex_set(["nope"]).is_err());
    }
}
