//! Maximum bipartite matching (Hopcroft-Karp) with a Hall-violation witness
//! when no perfect matching exists.

use std::collections::VecDeque;

/// Maximum matching of the bipartite graph `adj` (left vertex -> sorted
/// right neighbors). Returns the partner of each left vertex. Deterministic:
/// adjacency order drives all tie-breaks.
pub(crate) fn hopcroft_karp(adj: &[Vec<usize>], right_count: usize) -> Vec<Option<usize>> {
    let left_count = adj.len();
    let mut match_left: Vec<Option<usize>> = vec![None; left_count];
    let mut match_right: Vec<Option<usize>> = vec![None; right_count];

    loop {
        // BFS layers from free left vertices.
        let mut dist = vec![usize::MAX; left_count];
        let mut queue: VecDeque<usize> = VecDeque::new();
        for l in 0..left_count {
            if match_left[l].is_none() {
                dist[l] = 0;
                queue.push_back(l);
            }
        }
        let mut found_free_right = false;
        while let Some(l) = queue.pop_front() {
            for &r in &adj[l] {
                match match_right[r] {
                    None => found_free_right = true,
                    Some(l2) => {
                        if dist[l2] == usize::MAX {
                            dist[l2] = dist[l] + 1;
                            queue.push_back(l2);
                        }
                    }
                }
            }
        }
        if !found_free_right {
            break;
        }

        fn augment(
            l: usize,
            adj: &[Vec<usize>],
            dist: &mut [usize],
            match_left: &mut [Option<usize>],
            match_right: &mut [Option<usize>],
        ) -> bool {
            let d = std::mem::replace(&mut dist[l], usize::MAX);
            for &r in &adj[l] {
                let ok = match match_right[r] {
                    None => true,
                    Some(l2) => {
                        dist[l2] == d + 1 && augment(l2, adj, dist, match_left, match_right)
                    }
                };
                if ok {
                    match_left[l] = Some(r);
                    match_right[r] = Some(l);
                    return true;
                }
            }
            false
        }

        let mut progressed = false;
        for l in 0..left_count {
            if match_left[l].is_none()
                && dist[l] == 0
                && augment(l, adj, &mut dist, &mut match_left, &mut match_right)
            {
                progressed = true;
            }
        }
        if !progressed {
            break;
        }
    }

    match_left
}

/// Given a non-perfect matching, returns a left set `W` with `|N(W)| < |W|`:
/// the left vertices reachable from the unmatched ones along alternating
/// paths.
pub(crate) fn hall_violator(adj: &[Vec<usize>], match_left: &[Option<usize>]) -> Vec<usize> {
    let left_count = adj.len();
    let right_count = adj.iter().flatten().copied().max().map_or(0, |m| m + 1);
    let mut match_right: Vec<Option<usize>> = vec![None; right_count];
    for (l, m) in match_left.iter().enumerate() {
        if let Some(r) = *m {
            match_right[r] = Some(l);
        }
    }

    let mut in_w = vec![false; left_count];
    let mut seen_right = vec![false; right_count];
    let mut queue: VecDeque<usize> = (0..left_count)
        .filter(|&l| match_left[l].is_none())
        .collect();
    for &l in &queue {
        in_w[l] = true;
    }
    while let Some(l) = queue.pop_front() {
        for &r in &adj[l] {
            if !seen_right[r] {
                seen_right[r] = true;
                if let Some(l2) = match_right[r] {
                    if !in_w[l2] {
                        in_w[l2] = true;
                        queue.push_back(l2);
                    }
                }
            }
        }
    }

    (0..left_count).filter(|&l| in_w[l]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::SplitMix64;

    fn matching_size(m: &[Option<usize>]) -> usize {
        m.iter().filter(|x| x.is_some()).count()
    }

    /// Exhaustive maximum matching by trying all left-to-right injections.
    fn brute_max_matching(adj: &[Vec<usize>], right_count: usize) -> usize {
        fn go(l: usize, adj: &[Vec<usize>], used: &mut [bool]) -> usize {
            if l == adj.len() {
                return 0;
            }
            let mut best = go(l + 1, adj, used);
            for &r in &adj[l] {
                if !used[r] {
                    used[r] = true;
                    best = best.max(1 + go(l + 1, adj, used));
                    used[r] = false;
                }
            }
            best
        }
        go(0, adj, &mut vec![false; right_count])
    }

    #[test]
    fn matches_brute_force_on_random_instances() {
        let mut rng = SplitMix64::new(99);
        for _ in 0..500 {
            let left = 1 + rng.below(6) as usize;
            let right = 1 + rng.below(6) as usize;
            let adj: Vec<Vec<usize>> = (0..left)
                .map(|_| (0..right).filter(|_| rng.coin()).collect())
                .collect();
            let hk = hopcroft_karp(&adj, right);
            assert_eq!(matching_size(&hk), brute_max_matching(&adj, right));

            if matching_size(&hk) < left {
                let w = hall_violator(&adj, &hk);
                let mut neighbors: Vec<usize> =
                    w.iter().flat_map(|&l| adj[l].iter().copied()).collect();
                neighbors.sort_unstable();
                neighbors.dedup();
                assert!(neighbors.len() < w.len(), "not a Hall violator");
            }
        }
    }

    #[test]
    fn perfect_matching_on_identity() {
        let adj = vec![vec![0], vec![1], vec![2]];
        let m = hopcroft_karp(&adj, 3);
        assert_eq!(m, vec![Some(0), Some(1), Some(2)]);
    }
}
