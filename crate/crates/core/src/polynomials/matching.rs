use std::collections::VecDeque;

const UNMATCHED: usize = usize::MAX;

/// Maximum bipartite matching by Hopcroft–Karp.
///
/// `adj[u]` lists the right-hand vertices adjacent to left vertex `u`; right
/// vertices are `0..n_right`. Returns the partner of each left vertex.
pub fn hopcroft_karp(adj: &[Vec<usize>], n_right: usize) -> Vec<Option<usize>> {
    let n_left = adj.len();
    let mut match_left = vec![UNMATCHED; n_left];
    let mut match_right = vec![UNMATCHED; n_right];
    let mut dist = vec![usize::MAX; n_left];

    loop {
        // layer the free left vertices
        let mut queue = VecDeque::new();
        for u in 0..n_left {
            if match_left[u] == UNMATCHED {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                let w = match_right[v];
                if w == UNMATCHED {
                    found = true;
                } else if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if !found {
            break;
        }

        // vertex-disjoint shortest augmenting paths, iterative DFS
        let mut next_edge = vec![0usize; n_left];
        for root in 0..n_left {
            if match_left[root] != UNMATCHED {
                continue;
            }
            let mut stack = vec![root];
            while let Some(&u) = stack.last() {
                if next_edge[u] == adj[u].len() {
                    dist[u] = usize::MAX;
                    stack.pop();
                    continue;
                }
                let v = adj[u][next_edge[u]];
                next_edge[u] += 1;
                let w = match_right[v];
                if w == UNMATCHED {
                    // flip the path root → … → u → v
                    let mut v = v;
                    while let Some(u) = stack.pop() {
                        let prev = match_left[u];
                        match_left[u] = v;
                        match_right[v] = u;
                        v = prev;
                    }
                    break;
                } else if dist[w] == dist[u] + 1 {
                    stack.push(w);
                }
            }
        }
    }

    match_left.into_iter().map(|v| (v != UNMATCHED).then_some(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Size of a maximum matching by trying every injection of left into right.
    fn brute_force_size(adj: &[Vec<usize>], n_right: usize) -> usize {
        fn go(u: usize, adj: &[Vec<usize>], used: &mut Vec<bool>) -> usize {
            if u == adj.len() {
                return 0;
            }
            let mut best = go(u + 1, adj, used);
            for &v in &adj[u] {
                if !used[v] {
                    used[v] = true;
                    best = best.max(1 + go(u + 1, adj, used));
                    used[v] = false;
                }
            }
            best
        }
        go(0, adj, &mut vec![false; n_right])
    }

    fn check(adj: &[Vec<usize>], n_right: usize) {
        let m = hopcroft_karp(adj, n_right);
        let mut seen = vec![false; n_right];
        for (u, v) in m.iter().enumerate() {
            if let Some(v) = *v {
                assert!(adj[u].contains(&v));
                assert!(!seen[v]);
                seen[v] = true;
            }
        }
        assert_eq!(m.iter().flatten().count(), brute_force_size(adj, n_right));
    }

    #[test]
    fn small_graphs() {
        check(&[vec![0, 1], vec![0], vec![1, 2]], 3);
        check(&[vec![0], vec![0], vec![0]], 1);
        check(&[vec![], vec![1]], 2);
        check(&[], 0);
    }

    #[test]
    fn pseudo_random_graphs_against_brute_force() {
        let mut state = 0x2545_f491_4f6c_dd1du64;
        let mut rnd = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..200 {
            let nl = (rnd() % 7) as usize;
            let nr = (rnd() % 7) as usize + 1;
            let adj: Vec<Vec<usize>> = (0..nl).map(|_| (0..nr).filter(|_| rnd() % 3 == 0).collect()).collect();
            check(&adj, nr);
        }
    }
}
