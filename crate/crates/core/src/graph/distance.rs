use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;

use super::Graph;
use crate::error::{Error, Result};
use crate::exact::{Rational, RationalMatrix};

/// Row `i`, column `k`: the number of nodes `j` with `d(j, i) = k`.
/// Nodes that cannot reach `i` are not counted anywhere.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DistanceCountMatrix {
    n: usize,
    rows: Vec<Vec<usize>>,
}

impl DistanceCountMatrix {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        for row in &rows {
            if row.len() != n {
                return Err(Error::Dimension {
                    expected: n,
                    got: row.len(),
                });
            }
        }
        Ok(Self { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[usize] {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn to_rational(&self) -> RationalMatrix {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&c| Rational::from_integer(BigInt::from(c)))
                    .collect()
            })
            .collect();
        RationalMatrix::from_rows(rows, self.n).expect("square by construction")
    }

    pub fn has_duplicate_rows(&self) -> bool {
        let mut sorted: Vec<&Vec<usize>> = self.rows.iter().collect();
        sorted.sort();
        sorted.windows(2).any(|w| w[0] == w[1])
    }
}

impl fmt::Display for DistanceCountMatrix {
    /// TSV, one row per node.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{}", line.join("\t"))?;
        }
        Ok(())
    }
}

/// Distance counts towards node `i`: a BFS from `i` along reversed arcs.
pub fn distance_counts(g: &Graph, i: usize) -> Result<Vec<usize>> {
    let n = g.n();
    if i >= n {
        return Err(Error::Bounds { node: i, n });
    }
    let mut counts = vec![0usize; n];
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::from([i]);
    dist[i] = 0;
    while let Some(v) = queue.pop_front() {
        counts[dist[v]] += 1;
        for &u in g.predecessors(v) {
            if dist[u] == usize::MAX {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    Ok(counts)
}

pub fn distance_count_matrix(g: &Graph) -> DistanceCountMatrix {
    let rows = (0..g.n())
        .map(|i| distance_counts(g, i).expect("node in range"))
        .collect();
    DistanceCountMatrix { n: g.n(), rows }
}
