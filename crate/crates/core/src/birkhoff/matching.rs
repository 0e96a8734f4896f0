//! Hopcroft–Karp maximum bipartite matching.
//!
//! Rows and columns are `0..n`; `adj[r]` lists the columns row `r` may take.
//! Searches visit rows and adjacency entries in ascending order, so the
//! returned matching is a deterministic function of the (sorted) graph.

use std::collections::VecDeque;

const FREE: usize = usize::MAX;

pub struct HopcroftKarp<'a> {
    adj: &'a [Vec<usize>],
    cols: usize,
    row_match: Vec<usize>,
    col_match: Vec<usize>,
    layer: Vec<usize>,
}

impl<'a> HopcroftKarp<'a> {
    pub fn new(adj: &'a [Vec<usize>], cols: usize) -> Self {
        Self {
            adj,
            cols,
            row_match: vec![FREE; adj.len()],
            col_match: vec![FREE; cols],
            layer: vec![0; adj.len()],
        }
    }

    fn bfs(&mut self) -> bool {
        let mut queue = VecDeque::new();
        for r in 0..self.adj.len() {
            if self.row_match[r] == FREE {
                self.layer[r] = 0;
                queue.push_back(r);
            } else {
                self.layer[r] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(r) = queue.pop_front() {
            for &c in &self.adj[r] {
                let next = self.col_match[c];
                if next == FREE {
                    found = true;
                } else if self.layer[next] == usize::MAX {
                    self.layer[next] = self.layer[r] + 1;
                    queue.push_back(next);
                }
            }
        }
        found
    }

    fn dfs(&mut self, r: usize) -> bool {
        for i in 0..self.adj[r].len() {
            let c = self.adj[r][i];
            let next = self.col_match[c];
            if next == FREE || (self.layer[next] == self.layer[r] + 1 && self.dfs(next)) {
                self.row_match[r] = c;
                self.col_match[c] = r;
                return true;
            }
        }
        self.layer[r] = usize::MAX;
        false
    }

    /// Runs to completion and returns `row -> column` for matched rows.
    pub fn run(mut self) -> Vec<Option<usize>> {
        debug_assert!(self.adj.iter().flatten().all(|&c| c < self.cols));
        while self.bfs() {
            for r in 0..self.adj.len() {
                if self.row_match[r] == FREE {
                    self.dfs(r);
                }
            }
        }
        self.row_match
            .into_iter()
            .map(|c| (c != FREE).then_some(c))
            .collect()
    }
}

/// Perfect matching of an `n x n` bipartite graph, if one exists.
pub fn perfect_matching(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = adj.len();
    HopcroftKarp::new(adj, n).run().into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_max(adj: &[Vec<usize>], cols: usize) -> usize {
        fn go(r: usize, adj: &[Vec<usize>], used: &mut Vec<bool>) -> usize {
            if r == adj.len() {
                return 0;
            }
            let mut best = go(r + 1, adj, used);
            for &c in &adj[r] {
                if !used[c] {
                    used[c] = true;
                    best = best.max(1 + go(r + 1, adj, used));
                    used[c] = false;
                }
            }
            best
        }
        go(0, adj, &mut vec![false; cols])
    }

    #[test]
    fn finds_perfect_matching() {
        let adj = vec![vec![0, 1], vec![0], vec![1, 2]];
        let m = perfect_matching(&adj).unwrap();
        assert_eq!(m, vec![1, 0, 2]);
    }

    #[test]
    fn reports_missing_matching() {
        let adj = vec![vec![0], vec![0], vec![1, 2]];
        assert!(perfect_matching(&adj).is_none());
    }

    #[test]
    fn matches_brute_force_size() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let n = rng.random_range(1..7);
            let adj: Vec<Vec<usize>> = (0..n)
                .map(|_| (0..n).filter(|_| rng.random_bool(0.35)).collect())
                .collect();
            let size = HopcroftKarp::new(&adj, n).run().iter().flatten().count();
            assert_eq!(size, brute_force_max(&adj, n));
        }
    }
}
