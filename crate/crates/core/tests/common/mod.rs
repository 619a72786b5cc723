//! Independent oracles used only by the integration tests.
#![allow(dead_code)]

use std::collections::HashSet;

use rigikit::Graph;

/// Rank of the 1-dimensional rigidity matroid (the graphic matroid):
/// `n` minus the number of components, by union-find.
pub fn component_rank(g: &Graph) -> usize {
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut merged = 0;
    for (u, v) in g.edges() {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            merged += 1;
        }
    }
    merged
}

/// The (2,3)-pebble game: the size of a largest (2,3)-sparse edge set,
/// which is the rank of the 2-dimensional rigidity matroid.
pub struct PebbleGame {
    pebbles: Vec<usize>,
    /// Directed accepted edges, `out[x]` lists heads of edges leaving `x`.
    out: Vec<Vec<usize>>,
}

impl PebbleGame {
    pub fn new(n: usize) -> Self {
        PebbleGame { pebbles: vec![2; n], out: vec![Vec::new(); n] }
    }

    /// Moves one pebble to `root` along a reversed path avoiding `blocked`.
    fn fetch(&mut self, root: usize, blocked: [usize; 2]) -> bool {
        let n = self.pebbles.len();
        let mut prev = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        seen[root] = true;
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            for &y in &self.out[x] {
                if seen[y] {
                    continue;
                }
                seen[y] = true;
                prev[y] = x;
                if self.pebbles[y] > 0 && !blocked.contains(&y) {
                    self.pebbles[y] -= 1;
                    let mut cur = y;
                    while cur != root {
                        let p = prev[cur];
                        let i = self.out[p].iter().position(|&z| z == cur).expect("edge on path");
                        self.out[p].swap_remove(i);
                        self.out[cur].push(p);
                        cur = p;
                    }
                    self.pebbles[root] += 1;
                    return true;
                }
                stack.push(y);
            }
        }
        false
    }

    /// Accepts `uv` if it keeps the accepted set (2,3)-sparse.
    pub fn insert(&mut self, u: usize, v: usize) -> bool {
        while self.pebbles[u] < 2 {
            if !self.fetch(u, [u, v]) {
                return false;
            }
        }
        while self.pebbles[v] < 2 {
            if !self.fetch(v, [u, v]) {
                return false;
            }
        }
        // Four pebbles on {u, v}: the edge is independent.
        self.pebbles[u] -= 1;
        self.out[u].push(v);
        true
    }
}

pub fn pebble_rank(g: &Graph) -> usize {
    let mut game = PebbleGame::new(g.n());
    g.edges().into_iter().filter(|&(u, v)| game.insert(u, v)).count()
}

/// All graphs on `n` labeled vertices, as edge bit patterns over pairs in
/// graph6 order.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |bits| {
        Graph::from_edges(n, pairs.iter().enumerate().filter(|&(i, _)| bits >> i & 1 == 1).map(|(_, &e)| e))
            .expect("pairs are in range")
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Smallest adjacency bit string over all relabelings.
pub fn brute_canonical_code(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let n = g.n();
    perms
        .iter()
        .map(|p| {
            let mut code = 0u64;
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if g.has_edge(p[u], p[v]) {
                        code |= 1 << k;
                    }
                    k += 1;
                }
            }
            code
        })
        .min()
        .unwrap_or(0)
}

/// Number of isomorphism classes on `n` vertices by labeled enumeration and
/// brute-force canonical deduplication.
pub fn brute_force_class_count(n: usize) -> usize {
    let perms = permutations(n);
    labeled_graphs(n).map(|g| brute_canonical_code(&g, &perms)).collect::<HashSet<_>>().len()
}

/// Brute-force isomorphism test for small graphs.
pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let perms = permutations(a.n());
    brute_canonical_code(a, &perms) == brute_canonical_code(b, &perms)
}

/// Whether every pair of vertices is joined by a path, by breadth-first search.
pub fn bfs_connected(g: &Graph) -> bool {
    if g.n() == 0 {
        return true;
    }
    let mut seen = vec![false; g.n()];
    let mut queue = vec![0];
    seen[0] = true;
    while let Some(x) = queue.pop() {
        for y in g.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                queue.push(y);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// k-connectivity by deleting every vertex set of size below `k`: at
/// least `k + 1` vertices and every such deletion leaves a connected graph.
pub fn brute_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if k == 0 {
        return true;
    }
    if n < k + 1 {
        return false;
    }
    (0u64..1 << n).filter(|m| (m.count_ones() as usize) < k).all(|m| {
        let keep: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 0).collect();
        bfs_connected(&g.induced(&keep).expect("vertices in range"))
    })
}
