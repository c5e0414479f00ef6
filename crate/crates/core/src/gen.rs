//! Seeded graph generators for test corpora.
//!
//! All randomness flows through [`SplitMix64`], a fixed 64-bit generator, so
//! every corpus is bit-reproducible from its seed independently of platform
//! or library versions.

use crate::graph::{BicoloredDigraph, Color, Digraph};

/// SplitMix64: state advances by the golden-gamma constant and the output is
/// a finalizing hash of the state.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform-ish value in `0..n` (plain modulo; the tiny bias is
    /// irrelevant for corpus generation and keeps the stream simple).
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        self.next_u64() % n
    }

    pub fn coin(&mut self) -> bool {
        self.next_u64() & 1 == 1
    }

    pub fn color(&mut self) -> Color {
        if self.coin() {
            Color::One
        } else {
            Color::Two
        }
    }

    /// Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}

/// Zero-padded vertex names `v01`, `v02`, ... so that index order equals
/// lexicographic order for any count.
pub fn vertex_names(n: usize) -> Vec<String> {
    let width = n.max(1).to_string().len();
    (1..=n).map(|i| format!("v{i:0width$}")).collect()
}

fn as_refs(names: &[String]) -> Vec<&str> {
    names.iter().map(String::as_str).collect()
}

/// A bicolored digraph on `n` vertices with `arcs` colored arcs drawn
/// without replacement from all `2 * n * (n - 1)` possibilities.
pub fn random_bicolored(rng: &mut SplitMix64, n: usize, arcs: usize) -> BicoloredDigraph {
    let names = vertex_names(n);
    let mut pool = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                for c in Color::BOTH {
                    pool.push((i, j, c));
                }
            }
        }
    }
    let take = arcs.min(pool.len());
    for i in 0..take {
        let j = i + rng.below((pool.len() - i) as u64) as usize;
        pool.swap(i, j);
    }
    let chosen: Vec<(&str, &str, Color)> = pool[..take]
        .iter()
        .map(|&(i, j, c)| (names[i].as_str(), names[j].as_str(), c))
        .collect();
    BicoloredDigraph::from_arcs(&as_refs(&names), &chosen).unwrap()
}

/// A directed path on `n` vertices with independently random arc colors.
pub fn random_path(rng: &mut SplitMix64, n: usize) -> BicoloredDigraph {
    assert!(n >= 1);
    let colors: Vec<Color> = (1..n).map(|_| rng.color()).collect();
    path_with_colors(&colors)
}

/// The directed path v01 -> v02 -> ... with the given arc colors.
pub fn path_with_colors(colors: &[Color]) -> BicoloredDigraph {
    let n = colors.len() + 1;
    let names = vertex_names(n);
    let arcs: Vec<(&str, &str, Color)> = colors
        .iter()
        .enumerate()
        .map(|(i, &c)| (names[i].as_str(), names[i + 1].as_str(), c))
        .collect();
    BicoloredDigraph::from_arcs(&as_refs(&names), &arcs).unwrap()
}

/// A directed cycle on `n >= 3` vertices with random arc colors.
pub fn random_cycle(rng: &mut SplitMix64, n: usize) -> BicoloredDigraph {
    assert!(n >= 3);
    let colors: Vec<Color> = (0..n).map(|_| rng.color()).collect();
    cycle_with_colors(&colors)
}

/// The directed cycle v01 -> v02 -> ... -> v01; `colors[i]` colors the arc
/// leaving the i-th vertex.
pub fn cycle_with_colors(colors: &[Color]) -> BicoloredDigraph {
    let n = colors.len();
    assert!(n >= 3);
    let names = vertex_names(n);
    let arcs: Vec<(&str, &str, Color)> = colors
        .iter()
        .enumerate()
        .map(|(i, &c)| (names[i].as_str(), names[(i + 1) % n].as_str(), c))
        .collect();
    BicoloredDigraph::from_arcs(&as_refs(&names), &arcs).unwrap()
}

/// A randomly colored cycle plus one random chord (any ordered pair and
/// color that does not duplicate a cycle arc).
pub fn random_chorded_cycle(rng: &mut SplitMix64, n: usize) -> BicoloredDigraph {
    assert!(n >= 3);
    let colors: Vec<Color> = (0..n).map(|_| rng.color()).collect();
    loop {
        let tail = rng.below(n as u64) as usize;
        let head = rng.below(n as u64) as usize;
        let color = rng.color();
        if tail == head {
            continue;
        }
        if (tail + 1) % n == head && colors[tail] == color {
            continue; // duplicates a cycle arc
        }
        return chorded_cycle_with(&colors, tail, head, color);
    }
}

/// Cycle with given colors plus the chord (tail index, head index, color).
pub fn chorded_cycle_with(
    colors: &[Color],
    tail: usize,
    head: usize,
    color: Color,
) -> BicoloredDigraph {
    let n = colors.len();
    let names = vertex_names(n);
    let mut arcs: Vec<(&str, &str, Color)> = colors
        .iter()
        .enumerate()
        .map(|(i, &c)| (names[i].as_str(), names[(i + 1) % n].as_str(), c))
        .collect();
    arcs.push((names[tail].as_str(), names[head].as_str(), color));
    BicoloredDigraph::from_arcs(&as_refs(&names), &arcs).unwrap()
}

/// A random tournament: each unordered pair oriented by a coin flip.
pub fn random_tournament(rng: &mut SplitMix64, n: usize) -> Digraph {
    let names = vertex_names(n);
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.coin() {
                arcs.push((names[i].as_str(), names[j].as_str()));
            } else {
                arcs.push((names[j].as_str(), names[i].as_str()));
            }
        }
    }
    Digraph::from_arcs(&as_refs(&names), &arcs).unwrap()
}

/// A random DAG: `arcs` pairs sampled without replacement, all oriented
/// along a hidden random vertex order.
pub fn random_dag(rng: &mut SplitMix64, n: usize, arcs: usize) -> Digraph {
    let names = vertex_names(n);
    let mut order: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut order);
    let mut pool = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pool.push((order[i], order[j]));
        }
    }
    let take = arcs.min(pool.len());
    for i in 0..take {
        let j = i + rng.below((pool.len() - i) as u64) as usize;
        pool.swap(i, j);
    }
    let chosen: Vec<(&str, &str)> = pool[..take]
        .iter()
        .map(|&(i, j)| (names[i].as_str(), names[j].as_str()))
        .collect();
    Digraph::from_arcs(&as_refs(&names), &chosen).unwrap()
}

/// A bicolored digraph where both color subgraphs are acyclic: each color's
/// arcs are sampled along an independent random vertex order.
pub fn random_mono_acyclic(
    rng: &mut SplitMix64,
    n: usize,
    arcs_per_color: usize,
) -> BicoloredDigraph {
    let names = vertex_names(n);
    let mut arcs: Vec<(usize, usize, Color)> = Vec::new();
    for color in Color::BOTH {
        let mut order: Vec<usize> = (0..n).collect();
        rng.shuffle(&mut order);
        let mut pool = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                pool.push((order[i], order[j]));
            }
        }
        let take = arcs_per_color.min(pool.len());
        for i in 0..take {
            let j = i + rng.below((pool.len() - i) as u64) as usize;
            pool.swap(i, j);
        }
        arcs.extend(pool[..take].iter().map(|&(i, j)| (i, j, color)));
    }
    let chosen: Vec<(&str, &str, Color)> = arcs
        .iter()
        .map(|&(i, j, c)| (names[i].as_str(), names[j].as_str(), c))
        .collect();
    BicoloredDigraph::from_arcs(&as_refs(&names), &chosen).unwrap()
}

/// A (2,2)-regular digraph whose color-i arcs decompose into `k[i]` disjoint
/// cycles. Requires `n >= 2 * k[i]` so every cycle has length at least 2.
pub fn random_regular22(rng: &mut SplitMix64, n: usize, k1: usize, k2: usize) -> BicoloredDigraph {
    assert!(k1 >= 1 && k2 >= 1 && n >= 2 * k1 && n >= 2 * k2);
    let names = vertex_names(n);
    let mut arcs: Vec<(usize, usize, Color)> = Vec::new();
    for (color, k) in [(Color::One, k1), (Color::Two, k2)] {
        let mut order: Vec<usize> = (0..n).collect();
        rng.shuffle(&mut order);
        // Random block sizes: start every block at 2, spread the rest.
        let mut sizes = vec![2usize; k];
        for _ in 0..n - 2 * k {
            let b = rng.below(k as u64) as usize;
            sizes[b] += 1;
        }
        let mut start = 0;
        for &size in &sizes {
            for offset in 0..size {
                let from = order[start + offset];
                let to = order[start + (offset + 1) % size];
                arcs.push((from, to, color));
            }
            start += size;
        }
    }
    let chosen: Vec<(&str, &str, Color)> = arcs
        .iter()
        .map(|&(i, j, c)| (names[i].as_str(), names[j].as_str(), c))
        .collect();
    BicoloredDigraph::from_arcs(&as_refs(&names), &chosen).unwrap()
}
