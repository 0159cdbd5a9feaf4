//! Directed graphs on `[n]`, shortest-path distance counts, rigidity
//! predicates, permutations and the graph families used throughout the
//! crate.

mod distance;
pub mod generators;
mod permutation;
mod rigidity;

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};

pub use distance::{distance_count_matrix, distance_counts, DistanceCountMatrix};
pub use permutation::{all_permutations, Permutation};
pub use rigidity::{is_geometrically_rigid, is_rigid, DEFAULT_CAP};

/// A directed graph with node set `[n]`.
///
/// Arcs are stored as sorted, duplicate-free adjacency lists in both
/// directions. Self-loops are dropped on construction: a node is always at
/// distance 0 from itself, so they never influence distances.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            out: vec![Vec::new(); n],
            inn: vec![Vec::new(); n],
        }
    }

    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n);
        for (u, v) in arcs {
            for node in [u, v] {
                if node >= n {
                    return Err(Error::Bounds { node, n });
                }
            }
            if u != v {
                g.out[u].push(v);
                g.inn[v].push(u);
            }
        }
        for list in g.out.iter_mut().chain(g.inn.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        Ok(g)
    }

    /// Every edge `{u, v}` becomes the two arcs `u → v` and `v → u`.
    pub fn undirected(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::from_arcs(n, edges.into_iter().flat_map(|(u, v)| [(u, v), (v, u)]))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn successors(&self, u: usize) -> &[usize] {
        &self.out[u]
    }

    pub fn predecessors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && self.out[u].binary_search(&v).is_ok()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, succ)| succ.iter().map(move |&v| (u, v)))
    }

    pub fn with_arc(&self, u: usize, v: usize) -> Result<Self> {
        Self::from_arcs(self.n, self.arcs().chain(std::iter::once((u, v))))
    }

    pub fn transpose(&self) -> Self {
        Self {
            n: self.n,
            out: self.inn.clone(),
            inn: self.out.clone(),
        }
    }

    /// Row-major 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        let mut m = vec![vec![0u8; self.n]; self.n];
        for (u, v) in self.arcs() {
            m[u][v] = 1;
        }
        m
    }

    /// Nodes reachable from `start` following arcs forward.
    pub fn reachable_from(&self, start: usize) -> Vec<bool> {
        bfs_mark(&self.out, start)
    }

    pub fn is_strongly_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        bfs_mark(&self.out, 0).into_iter().all(|b| b) && bfs_mark(&self.inn, 0).into_iter().all(|b| b)
    }

    /// Connectivity of the underlying undirected graph.
    pub fn is_weakly_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let both: Vec<Vec<usize>> = (0..self.n)
            .map(|u| self.out[u].iter().chain(&self.inn[u]).copied().collect())
            .collect();
        bfs_mark(&both, 0).into_iter().all(|b| b)
    }

    /// Edge-list text with an `n` header line.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("n {}\n", self.n);
        for (u, v) in self.arcs() {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }
}

fn bfs_mark(adj: &[Vec<usize>], start: usize) -> Vec<bool> {
    let mut seen = vec![false; adj.len()];
    let mut queue = VecDeque::from([start]);
    seen[start] = true;
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    seen
}

/// Disjoint union: the nodes of `h` are shifted by `g.n()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let shift = g.n();
    Graph::from_arcs(
        g.n() + h.n(),
        g.arcs().chain(h.arcs().map(|(u, v)| (u + shift, v + shift))),
    )
    .expect("shifted arcs stay in range")
}

/// Parse the edge-list format: an optional `n <count>` header, then one
/// `u v` arc per line. Blank lines and lines starting with `#` are ignored.
/// With `undirected`, every arc is also added reversed.
pub fn parse_edge_list(text: &str, undirected: bool) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut arcs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parse_error = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        if fields[0] == "n" {
            if declared.is_some() || !arcs.is_empty() {
                return Err(parse_error("`n` header must come before any arc".into()));
            }
            if fields.len() != 2 {
                return Err(parse_error("expected `n <count>`".into()));
            }
            let count = fields[1]
                .parse()
                .map_err(|_| parse_error(format!("bad node count `{}`", fields[1])))?;
            declared = Some(count);
            continue;
        }
        if fields.len() != 2 {
            return Err(parse_error(format!("expected `u v`, got `{line}`")));
        }
        let mut ends = [0usize; 2];
        for (slot, field) in ends.iter_mut().zip(&fields) {
            *slot = field
                .parse()
                .map_err(|_| parse_error(format!("bad node id `{field}`")))?;
        }
        arcs.push((ends[0], ends[1]));
    }
    let n = match declared {
        Some(n) => n,
        None => arcs.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0),
    };
    if undirected {
        Graph::undirected(n, arcs)
    } else {
        Graph::from_arcs(n, arcs)
    }
}
