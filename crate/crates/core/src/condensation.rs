//! Strongly connected components of the one-color subgraphs and their
//! condensation DAGs.

use std::collections::BTreeSet;

use crate::graph::{BicoloredDigraph, Color, Vertex};

/// The cyclic classes of one color: the SCC partition of the color subgraph,
/// the acyclic class digraph, and its extreme classes.
///
/// Classes are numbered in lexicographic order of their smallest member, and
/// each class lists its members in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condensation {
    pub color: Color,
    pub classes: Vec<Vec<Vertex>>,
    class_of: Vec<usize>,
    /// Arcs between distinct classes induced by the color subgraph.
    pub dag_arcs: BTreeSet<(usize, usize)>,
    /// Class ids without outgoing dag arcs (maximal under the color order).
    pub maximal: Vec<usize>,
    /// Class ids without incoming dag arcs (minimal under the color order).
    pub minimal: Vec<usize>,
}

impl Condensation {
    pub fn class_of(&self, v: Vertex) -> usize {
        self.class_of[v.index()]
    }
}

/// Tarjan's algorithm over an adjacency list; components are returned in
/// discovery-completion order.
pub(crate) fn tarjan_scc(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    struct State<'a> {
        adj: &'a [Vec<usize>],
        index: usize,
        stack: Vec<usize>,
        on_stack: Vec<bool>,
        idx: Vec<Option<usize>>,
        low: Vec<usize>,
        comps: Vec<Vec<usize>>,
    }

    fn strongconnect(v: usize, st: &mut State) {
        st.idx[v] = Some(st.index);
        st.low[v] = st.index;
        st.index += 1;
        st.stack.push(v);
        st.on_stack[v] = true;

        for &w in &st.adj[v] {
            if st.idx[w].is_none() {
                strongconnect(w, st);
                st.low[v] = st.low[v].min(st.low[w]);
            } else if st.on_stack[w] {
                st.low[v] = st.low[v].min(st.idx[w].unwrap());
            }
        }

        // Root of an SCC: pop the stack down to v.
        if st.low[v] == st.idx[v].unwrap() {
            let mut comp = Vec::new();
            loop {
                let w = st.stack.pop().expect("stack underflow");
                st.on_stack[w] = false;
                comp.push(w);
                if w == v {
                    break;
                }
            }
            st.comps.push(comp);
        }
    }

    let n = adj.len();
    let mut st = State {
        adj,
        index: 0,
        stack: Vec::new(),
        on_stack: vec![false; n],
        idx: vec![None; n],
        low: vec![0; n],
        comps: Vec::new(),
    };
    for v in 0..n {
        if st.idx[v].is_none() {
            strongconnect(v, &mut st);
        }
    }
    st.comps
}

/// The condensation of the color-`c` subgraph of `g`.
pub fn condensation(g: &BicoloredDigraph, color: Color) -> Condensation {
    let n = g.vertex_count();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            g.out_neighbors(Vertex(v as u32), color)
                .iter()
                .map(|w| w.index())
                .collect()
        })
        .collect();

    let mut comps = tarjan_scc(&adj);
    for comp in &mut comps {
        comp.sort_unstable();
    }
    comps.sort_unstable_by_key(|comp| comp[0]);

    let mut class_of = vec![usize::MAX; n];
    for (id, comp) in comps.iter().enumerate() {
        for &v in comp {
            class_of[v] = id;
        }
    }

    let mut dag_arcs = BTreeSet::new();
    for (v, outs) in adj.iter().enumerate() {
        for &w in outs {
            if class_of[v] != class_of[w] {
                dag_arcs.insert((class_of[v], class_of[w]));
            }
        }
    }

    let maximal = (0..comps.len())
        .filter(|&id| !dag_arcs.iter().any(|&(from, _)| from == id))
        .collect();
    let minimal = (0..comps.len())
        .filter(|&id| !dag_arcs.iter().any(|&(_, to)| to == id))
        .collect();

    let classes = comps
        .into_iter()
        .map(|comp| comp.into_iter().map(|v| Vertex(v as u32)).collect())
        .collect();

    Condensation {
        color,
        classes,
        class_of,
        dag_arcs,
        maximal,
        minimal,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::SplitMix64;
    use Color::{One, Two};

    fn class_names(g: &BicoloredDigraph, cond: &Condensation, id: usize) -> Vec<String> {
        cond.classes[id]
            .iter()
            .map(|&v| g.name(v).to_string())
            .collect()
    }

    #[test]
    fn two_cycle_feeding_a_sink() {
        let g =
            BicoloredDigraph::from_arcs(&[], &[("a", "b", One), ("b", "a", One), ("b", "c", One)])
                .unwrap();
        let cond = condensation(&g, One);
        assert_eq!(cond.classes.len(), 2);
        assert_eq!(class_names(&g, &cond, 0), vec!["a", "b"]);
        assert_eq!(class_names(&g, &cond, 1), vec!["c"]);
        assert_eq!(cond.maximal, vec![1]);
        assert_eq!(cond.minimal, vec![0]);
    }

    #[test]
    fn no_arcs_of_the_color_gives_singletons() {
        let g = BicoloredDigraph::from_arcs(&["a", "b"], &[("a", "b", One)]).unwrap();
        let cond = condensation(&g, Two);
        assert_eq!(cond.classes.len(), 2);
        assert!(cond.dag_arcs.is_empty());
        assert_eq!(cond.maximal, vec![0, 1]);
        assert_eq!(cond.minimal, vec![0, 1]);
    }

    #[test]
    fn alternating_c4_color_one_maximal_classes_are_arc_heads() {
        // Hand enumeration: the color-1 arcs are x1->x2 and x3->x4, so the
        // only color-1 paths are those two single arcs. All classes are
        // singletons; [x2] and [x4] have no outgoing color-1 arcs.
        let g = BicoloredDigraph::from_arcs(
            &[],
            &[
                ("x1", "x2", One),
                ("x2", "x3", Two),
                ("x3", "x4", One),
                ("x4", "x1", Two),
            ],
        )
        .unwrap();
        let cond = condensation(&g, One);
        assert_eq!(cond.classes.len(), 4);
        let maximal_names: Vec<_> = cond
            .maximal
            .iter()
            .flat_map(|&id| class_names(&g, &cond, id))
            .collect();
        assert_eq!(maximal_names, vec!["x2", "x4"]);
    }

    /// Classes of size >= 2 induce a strongly connected color subgraph.
    #[test]
    fn nontrivial_classes_are_strongly_connected() {
        let mut rng = SplitMix64::new(0xc0de);
        for _ in 0..300 {
            let n = 2 + rng.below(7) as usize;
            let arcs = rng.below((2 * n * (n - 1)) as u64 + 1) as usize;
            let g = crate::gen::random_bicolored(&mut rng, n, arcs);
            let closure = crate::closure::mono_closure(&g);
            for color in Color::BOTH {
                let cond = condensation(&g, color);
                // Membership agrees with mutual reachability.
                for u in g.vertices() {
                    for v in g.vertices() {
                        let same = cond.class_of(u) == cond.class_of(v);
                        let mutual = u == v
                            || (closure.reaches(color, u, v) && closure.reaches(color, v, u));
                        assert_eq!(same, mutual);
                    }
                }
                for class in &cond.classes {
                    if class.len() >= 2 {
                        for &u in class {
                            for &v in class {
                                if u != v {
                                    assert!(closure.reaches(color, u, v));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}
