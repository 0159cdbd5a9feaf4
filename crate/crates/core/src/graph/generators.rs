//! Graph families with fixed, documented node numbering.

use super::Graph;
use crate::error::{Error, Result};

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Parameter(msg()))
    }
}

/// Directed path `0 → 1 → … → n−1`, every `j ≥ 1` pointing back to 0, plus
/// `0 → n−1`. Strongly connected.
pub fn hub_cycle(n: usize) -> Result<Graph> {
    require(n >= 4, || format!("hub-cycle needs n >= 4, got {n}"))?;
    let path = (0..n - 1).map(|i| (i, i + 1));
    let back = (1..n).map(|j| (j, 0));
    Graph::from_arcs(n, path.chain(back).chain([(0, n - 1)]))
}

/// Directed path `0 → 1 → … → n−1` with every `j ≥ 2` pointing back to 1.
/// Its distance-count matrix is lower triangular with a nonzero diagonal.
pub fn triangular(n: usize) -> Result<Graph> {
    require(n >= 3, || format!("triangular needs n >= 3, got {n}"))?;
    let path = (0..n - 1).map(|i| (i, i + 1));
    let back = (2..n).map(|j| (j, 1));
    Graph::from_arcs(n, path.chain(back))
}

/// Path `0 → … → n−4`, then `n−4 → n−1`, `n−1 ⇄ n−2`, `n−4 → n−3`, and
/// every `j ≥ 1` pointing back to 0. Strongly connected.
pub fn gprime(n: usize) -> Result<Graph> {
    require(n >= 5, || format!("gprime needs n >= 5, got {n}"))?;
    let path = (0..n - 4).map(|i| (i, i + 1));
    let tail = [(n - 4, n - 1), (n - 1, n - 2), (n - 2, n - 1), (n - 4, n - 3)];
    let back = (1..n).map(|j| (j, 0));
    Graph::from_arcs(n, path.chain(tail).chain(back))
}

/// Undirected `k`-clique on `0..k` and directed `p`-cycle on `k..k+p`
/// (`k+i → k+i+1`, wrapping). With `bridged`, `x = 0` and `y = k` are
/// joined in both directions. Returns `(graph, x, y)`.
pub fn clique_cycle(k: usize, p: usize, bridged: bool) -> Result<(Graph, usize, usize)> {
    require(k >= 3 && p >= 3, || {
        format!("clique-cycle needs k >= 3 and p >= 3, got k={k}, p={p}")
    })?;
    let mut arcs = Vec::new();
    for u in 0..k {
        for v in 0..k {
            if u != v {
                arcs.push((u, v));
            }
        }
    }
    for i in 0..p {
        arcs.push((k + i, k + (i + 1) % p));
    }
    let (x, y) = (0, k);
    if bridged {
        arcs.extend([(x, y), (y, x)]);
    }
    Ok((Graph::from_arcs(k + p, arcs)?, x, y))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistinguisherKind {
    Connected,
    Disjoint,
}

/// Leaf counts hung on the four attachment points of a distinguisher.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Leaves {
    pub s: usize,
    pub p: usize,
    pub q: usize,
    pub t: usize,
}

struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn node(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    /// A path of `len` edges; returns its `len + 1` nodes in order.
    fn path(&mut self, len: usize) -> Vec<usize> {
        let nodes: Vec<usize> = (0..=len).map(|_| self.node()).collect();
        self.edges.extend(nodes.windows(2).map(|w| (w[0], w[1])));
        nodes
    }

    fn leaves(&mut self, at: usize, count: usize) {
        for _ in 0..count {
            let leaf = self.node();
            self.edges.push((at, leaf));
        }
    }
}

/// The undirected graphs used to separate non-proportional coefficient
/// vectors. Returns `(graph, x, y)`.
///
/// * `Connected`: backbone `x -(h−1)- u - f -(k−h−2)- g - v -(h−1)- y`
///   numbered `0..=k+h−2` from `x`, then `s` leaves on `u`, `p` on `f`,
///   `q` on `g`, `t` on `v`. `u = x` when `h = 1` and `f = g` when
///   `k = h + 2`. Requires `h ≥ 1`, `k ≥ h + 2`.
/// * `Disjoint`: component `x -(h−1)- u -(k−h)- f` with `s` leaves on `u`
///   and `p` on `f`, followed by the mirror component `y, v, g` with `t`
///   leaves on `v` and `q` on `g`. Requires `k > h ≥ 1`.
pub fn distinguisher(
    kind: DistinguisherKind,
    h: usize,
    k: usize,
    leaves: Leaves,
) -> Result<(Graph, usize, usize)> {
    let mut b = Builder {
        n: 0,
        edges: Vec::new(),
    };
    let (x, y) = match kind {
        DistinguisherKind::Connected => {
            require(h >= 1 && k >= h + 2, || {
                format!("connected distinguisher needs h >= 1 and k >= h + 2, got h={h}, k={k}")
            })?;
            let spine = b.path(k + h - 2);
            let (u, f, g, v) = (spine[h - 1], spine[h], spine[k - 2], spine[k - 1]);
            b.leaves(u, leaves.s);
            b.leaves(f, leaves.p);
            b.leaves(g, leaves.q);
            b.leaves(v, leaves.t);
            (spine[0], spine[k + h - 2])
        }
        DistinguisherKind::Disjoint => {
            require(h >= 1 && k > h, || {
                format!("disjoint distinguisher needs k > h >= 1, got h={h}, k={k}")
            })?;
            let left = b.path(k - 1);
            b.leaves(left[h - 1], leaves.s);
            b.leaves(left[k - 1], leaves.p);
            let right = b.path(k - 1);
            b.leaves(right[h - 1], leaves.t);
            b.leaves(right[k - 1], leaves.q);
            (left[0], right[0])
        }
    };
    Ok((Graph::undirected(b.n, b.edges)?, x, y))
}

/// Undirected path with `len` edges on nodes `0..=len`.
pub fn path(len: usize) -> Graph {
    Graph::undirected(len + 1, (0..len).map(|i| (i, i + 1))).expect("in range")
}

/// A named fixture with labelled nodes.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub graph: Graph,
    pub labels: Vec<(&'static str, usize)>,
}

impl Fixture {
    pub fn node(&self, label: &str) -> Option<usize> {
        self.labels.iter().find(|(l, _)| *l == label).map(|&(_, v)| v)
    }
}

pub const FIXTURE_NAMES: [&str; 2] = ["lin-counterexample", "rigid3"];

/// `lin-counterexample`: undirected disjoint union of a 4-node path with
/// end `u = 0`, a 3-node path with end `v = 4`, a spider with centre
/// `x = 7` and three legs of length 3, and a spider with centre `y = 17`
/// and three legs of length 2 (24 nodes).
///
/// `rigid3`: arcs `0→1, 1→0, 1→2, 2→0`; rigid, yet nodes 1 and 2 share a
/// distance-count row.
pub fn fixture(name: &str) -> Result<Fixture> {
    match name {
        "lin-counterexample" => {
            let mut b = Builder {
                n: 0,
                edges: Vec::new(),
            };
            let u = b.path(3)[0];
            let v = b.path(2)[0];
            let mut spider = |legs: usize, len: usize| {
                let centre = b.node();
                for _ in 0..legs {
                    let leg = b.path(len - 1);
                    b.edges.push((centre, leg[0]));
                }
                centre
            };
            let x = spider(3, 3);
            let y = spider(3, 2);
            Ok(Fixture {
                graph: Graph::undirected(b.n, b.edges)?,
                labels: vec![("u", u), ("v", v), ("x", x), ("y", y)],
            })
        }
        "rigid3" => Ok(Fixture {
            graph: Graph::from_arcs(3, [(0, 1), (1, 0), (1, 2), (2, 0)])?,
            labels: vec![],
        }),
        other => Err(Error::UnknownFixture(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::distance_count_matrix;

    fn rows(g: &Graph) -> Vec<Vec<usize>> {
        distance_count_matrix(g).rows().to_vec()
    }

    #[test]
    fn hub_cycle_rows() {
        let c = rows(&hub_cycle(5).unwrap());
        assert_eq!(c[0], vec![1, 4, 0, 0, 0]);
        assert_eq!(c[4], vec![1, 2, 2, 0, 0]);
        assert_eq!(c[2], vec![1, 1, 1, 2, 0]);
        assert_eq!(c[3], vec![1, 1, 1, 1, 1]);
        assert_eq!(
            rows(&hub_cycle(4).unwrap()),
            vec![vec![1, 3, 0, 0], vec![1, 1, 2, 0], vec![1, 1, 1, 1], vec![1, 2, 1, 0]]
        );
        assert!(hub_cycle(3).is_err());
    }

    #[test]
    fn triangular_rows() {
        assert_eq!(
            rows(&triangular(4).unwrap()),
            vec![vec![1, 0, 0, 0], vec![1, 3, 0, 0], vec![1, 1, 2, 0], vec![1, 1, 1, 1]]
        );
        assert_eq!(rows(&triangular(3).unwrap())[0], vec![1, 0, 0]);
        assert!(triangular(2).is_err());
    }

    #[test]
    fn gprime_rows() {
        let c = rows(&gprime(6).unwrap());
        assert_eq!(c[5], vec![1, 2, 1, 1, 1, 0]);
        assert_eq!(c[4], vec![1, 1, 1, 1, 1, 1]);
        assert_eq!(c[0], vec![1, 5, 0, 0, 0, 0]);
        assert!(gprime(4).is_err());
    }

    #[test]
    fn clique_cycle_shape() {
        let (g, x, y) = clique_cycle(4, 5, false).unwrap();
        assert_eq!((g.n(), x, y), (9, 0, 4));
        assert_eq!(g.arc_count(), 12 + 5);
        let (gb, _, _) = clique_cycle(4, 5, true).unwrap();
        assert!(gb.has_arc(0, 4) && gb.has_arc(4, 0));
        assert!(gb.is_strongly_connected());
        assert!(clique_cycle(2, 3, true).is_err());
    }

    #[test]
    fn degenerate_connected_distinguisher_is_a_path() {
        let (g, x, y) =
            distinguisher(DistinguisherKind::Connected, 1, 3, Leaves::default()).unwrap();
        assert_eq!(g, path(2));
        assert_eq!((x, y), (0, 2));
    }

    #[test]
    fn distinguisher_preconditions() {
        let l = Leaves::default();
        assert!(distinguisher(DistinguisherKind::Connected, 1, 2, l).is_err());
        assert!(distinguisher(DistinguisherKind::Connected, 0, 3, l).is_err());
        assert!(distinguisher(DistinguisherKind::Disjoint, 2, 2, l).is_err());
        assert!(distinguisher(DistinguisherKind::Disjoint, 1, 2, l).is_ok());
    }

    #[test]
    fn fixtures() {
        let lin = fixture("lin-counterexample").unwrap();
        assert_eq!(lin.graph.n(), 24);
        assert_eq!(lin.node("x"), Some(7));
        assert_eq!(lin.node("y"), Some(17));
        let r = fixture("rigid3").unwrap();
        assert_eq!(
            r.graph.adjacency_matrix(),
            vec![vec![0, 1, 0], vec![1, 0, 1], vec![1, 0, 0]]
        );
        assert!(matches!(fixture("nope"), Err(Error::UnknownFixture(_))));
    }
}
