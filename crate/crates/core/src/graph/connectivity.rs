//! Vertex connectivity by unit-capacity max-flow (Menger).

use std::collections::VecDeque;

use super::Graph;

/// Flow network in which every vertex `x` is split into `in(x) = 2x` and
/// `out(x) = 2x + 1` joined by a unit arc, so that arc-disjoint paths are
/// internally vertex-disjoint.
struct SplitNetwork {
    head: Vec<usize>,
    cap: Vec<i32>,
    adj: Vec<Vec<usize>>,
}

impl SplitNetwork {
    fn new(g: &Graph, s: usize, t: usize) -> Self {
        let mut net = SplitNetwork {
            head: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); 2 * g.n()],
        };
        let big = g.n() as i32;
        for x in 0..g.n() {
            let c = if x == s || x == t { big } else { 1 };
            net.arc(2 * x, 2 * x + 1, c);
        }
        for (u, v) in g.edges() {
            net.arc(2 * u + 1, 2 * v, big);
            net.arc(2 * v + 1, 2 * u, big);
        }
        net
    }

    fn arc(&mut self, from: usize, to: usize, cap: i32) {
        self.adj[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.adj[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    /// Pushes up to `limit` units from `source` to `sink` (BFS augmenting paths).
    fn max_flow(&mut self, source: usize, sink: usize, limit: usize) -> usize {
        let mut flow = 0;
        let mut via = vec![usize::MAX; self.adj.len()];
        while flow < limit {
            via.fill(usize::MAX);
            let mut queue = VecDeque::from([source]);
            let mut reached = false;
            while let Some(x) = queue.pop_front() {
                for &a in &self.adj[x] {
                    let y = self.head[a];
                    if self.cap[a] > 0 && via[y] == usize::MAX && y != source {
                        via[y] = a;
                        if y == sink {
                            reached = true;
                            break;
                        }
                        queue.push_back(y);
                    }
                }
                if reached {
                    break;
                }
            }
            if !reached {
                break;
            }
            let mut y = sink;
            while y != source {
                let a = via[y];
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                y = self.head[a ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

impl Graph {
    /// Maximum number of internally disjoint `s`-`t` paths, capped at `limit`.
    /// `s` and `t` must be distinct and non-adjacent.
    pub fn local_connectivity(&self, s: usize, t: usize, limit: usize) -> usize {
        debug_assert!(s != t && !self.has_edge(s, t));
        let mut net = SplitNetwork::new(self, s, t);
        net.max_flow(2 * s + 1, 2 * t, limit)
    }

    /// True iff the graph has at least `k + 1` vertices and no separating
    /// set of fewer than `k` vertices.
    pub fn is_k_connected(&self, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        if self.n() < k + 1 {
            return false;
        }
        // Only non-adjacent pairs can be separated; a complete graph on
        // k + 1 or more vertices has none.
        for s in 0..self.n() {
            for t in s + 1..self.n() {
                if !self.has_edge(s, t) && self.local_connectivity(s, t, k) < k {
                    return false;
                }
            }
        }
        true
    }

    /// Largest `k` with `is_k_connected(k)`.
    pub fn vertex_connectivity(&self) -> usize {
        let mut k = 0;
        while self.is_k_connected(k + 1) {
            k += 1;
        }
        k
    }
}
