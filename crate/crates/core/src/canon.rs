//! Canonical labeling by individualization and refinement.
//!
//! The search tree branches on the vertices of the first non-singleton cell
//! of an equitable ordered partition. Every leaf is a labeling; the canonical
//! one is the leaf whose relabeled adjacency rows are lexicographically
//! greatest. Subtrees are skipped only when a known automorphism maps them
//! onto an explored subtree, so the maximum is taken over every leaf code.

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// Largest vertex count handled here.
pub const CANON_MAX_N: usize = 64;

fn masks(g: &Graph) -> Result<Vec<u64>> {
    if g.n() > CANON_MAX_N {
        return Err(Error::TooLarge { what: "vertex count for canonical labeling", value: g.n(), bound: CANON_MAX_N });
    }
    Ok((0..g.n()).map(|v| g.mask(v)).collect())
}

/// Splits cells by neighbor counts into earlier cells until the ordered
/// partition is equitable. Depends only on the graph and the cell order.
fn refine(adj: &[u64], cells: &mut Vec<u64>) {
    'restart: loop {
        for w in 0..cells.len() {
            let splitter = cells[w];
            let mut out = Vec::with_capacity(cells.len() + 4);
            let mut split = false;
            for &cell in cells.iter() {
                if cell.count_ones() == 1 {
                    out.push(cell);
                    continue;
                }
                let mut groups: Vec<(u32, u64)> = Vec::new();
                for x in bits(cell) {
                    let k = (adj[x] & splitter).count_ones();
                    match groups.iter_mut().find(|(c, _)| *c == k) {
                        Some((_, m)) => *m |= 1 << x,
                        None => groups.push((k, 1 << x)),
                    }
                }
                if groups.len() > 1 {
                    split = true;
                    groups.sort_unstable_by_key(|&(k, _)| k);
                    out.extend(groups.into_iter().map(|(_, m)| m));
                } else {
                    out.push(cell);
                }
            }
            if split {
                *cells = out;
                continue 'restart;
            }
        }
        return;
    }
}

struct Leaf {
    /// `lab[i]` is the vertex at position `i`.
    lab: Vec<usize>,
    code: Vec<u64>,
}

struct Search<'a> {
    adj: &'a [u64],
    first_path: Vec<usize>,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn leaf(&self, cells: &[u64]) -> Leaf {
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut pos = vec![0; lab.len()];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        let code = lab
            .iter()
            .map(|&v| bits(self.adj[v]).fold(0u64, |m, w| m | 1 << pos[w]))
            .collect();
        Leaf { lab, code }
    }

    /// Automorphism `x -> to.lab[pos_from(x)]` between two leaves with equal codes.
    fn automorphism(from: &Leaf, to: &Leaf) -> Vec<usize> {
        let mut gamma = vec![0; from.lab.len()];
        for (i, &v) in from.lab.iter().enumerate() {
            gamma[v] = to.lab[i];
        }
        gamma
    }

    /// Whether `v` shares an orbit with an explored sibling under the known
    /// automorphisms that fix `prefix` pointwise.
    fn pruned(&self, prefix: &[usize], explored: &[usize], v: usize) -> bool {
        if explored.is_empty() {
            return false;
        }
        let n = self.adj.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for g in &self.generators {
            if prefix.iter().any(|&x| g[x] != x) {
                continue;
            }
            for x in 0..n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, g[x]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let root = find(&mut parent, v);
        explored.iter().any(|&e| find(&mut parent, e) == root)
    }

    /// Returns `Some(depth)` when a leaf equivalent to the first leaf was
    /// found: every node deeper than `depth` on the way back is abandoned.
    fn visit(&mut self, cells: Vec<u64>, prefix: &mut Vec<usize>) -> Option<usize> {
        let Some(i) = cells.iter().position(|c| c.count_ones() > 1) else {
            return self.at_leaf(&cells, prefix);
        };
        let target = cells[i];
        let mut explored = Vec::new();
        for v in bits(target) {
            if self.pruned(prefix, &explored, v) {
                continue;
            }
            explored.push(v);
            let mut child = cells.clone();
            child[i] = 1 << v;
            child.insert(i + 1, target & !(1 << v));
            refine(self.adj, &mut child);
            prefix.push(v);
            let jump = self.visit(child, prefix);
            prefix.pop();
            if let Some(depth) = jump {
                if depth < prefix.len() {
                    return Some(depth);
                }
            }
        }
        None
    }

    fn at_leaf(&mut self, cells: &[u64], prefix: &[usize]) -> Option<usize> {
        let leaf = self.leaf(cells);
        let Some(first) = &self.first else {
            self.first_path = prefix.to_vec();
            self.best = Some(Leaf { lab: leaf.lab.clone(), code: leaf.code.clone() });
            self.first = Some(leaf);
            return None;
        };
        if leaf.code == first.code {
            self.generators.push(Self::automorphism(&leaf, first));
            let common = prefix.iter().zip(&self.first_path).take_while(|(a, b)| a == b).count();
            return Some(common);
        }
        let best = self.best.as_ref().expect("set with the first leaf");
        match leaf.code.cmp(&best.code) {
            std::cmp::Ordering::Greater => self.best = Some(leaf),
            std::cmp::Ordering::Equal => {
                let g = Self::automorphism(&leaf, best);
                self.generators.push(g);
            }
            std::cmp::Ordering::Less => {}
        }
        None
    }
}

/// Canonical labeling: `labeling[v]` is the new index of vertex `v`.
/// Isomorphic graphs get identical relabeled results.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    Ok(labeling_of_masks(&masks(g)?))
}

/// [`canonical_labeling`] on adjacency masks of a graph with at most 64 vertices.
pub(crate) fn labeling_of_masks(adj: &[u64]) -> Vec<usize> {
    let n = adj.len();
    if n == 0 {
        return Vec::new();
    }
    let mut cells = vec![if n == 64 { u64::MAX } else { (1u64 << n) - 1 }];
    refine(adj, &mut cells);
    let mut search = Search { adj, first_path: Vec::new(), first: None, best: None, generators: Vec::new() };
    search.visit(cells, &mut Vec::new());
    let best = search.best.expect("the search reaches at least one leaf");
    let mut labeling = vec![0; n];
    for (i, &v) in best.lab.iter().enumerate() {
        labeling[v] = i;
    }
    labeling
}

/// The canonical representative of the isomorphism class of `g`.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    g.relabel(&canonical_labeling(g)?)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}
