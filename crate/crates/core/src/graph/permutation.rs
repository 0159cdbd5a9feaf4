use crate::error::{Error, Result};

/// A permutation of `[n]` in ranking form: `pi[r]` is the node at rank
/// position `r` (position 0 is the top), and `rho = pi⁻¹` gives the rank of
/// each node.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    pi: Vec<usize>,
    rho: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            pi: (0..n).collect(),
            rho: (0..n).collect(),
        }
    }

    /// From a rank-ordered node list.
    pub fn from_ranking(pi: Vec<usize>) -> Result<Self> {
        let rho = invert(&pi)?;
        Ok(Self { pi, rho })
    }

    /// From the rank of each node.
    pub fn from_ranks(rho: Vec<usize>) -> Result<Self> {
        let pi = invert(&rho)?;
        Ok(Self { pi, rho })
    }

    pub fn len(&self) -> usize {
        self.pi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pi.is_empty()
    }

    pub fn node_at(&self, rank: usize) -> usize {
        self.pi[rank]
    }

    pub fn rank_of(&self, node: usize) -> usize {
        self.rho[node]
    }

    pub fn ranking(&self) -> &[usize] {
        &self.pi
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rho
    }
}

fn invert(p: &[usize]) -> Result<Vec<usize>> {
    let n = p.len();
    let mut inv = vec![usize::MAX; n];
    for (i, &v) in p.iter().enumerate() {
        if v >= n {
            return Err(Error::Bounds { node: v, n });
        }
        if inv[v] != usize::MAX {
            return Err(Error::Parameter(format!(
                "value {v} repeated; not a permutation"
            )));
        }
        inv[v] = i;
    }
    Ok(inv)
}

/// All permutations of `[n]` in lexicographic order of their ranking list.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut current: Option<Vec<usize>> = Some((0..n).collect());
    std::iter::from_fn(move || {
        let out = current.take()?;
        let mut next = out.clone();
        if next_permutation(&mut next) {
            current = Some(next);
        }
        Some(Permutation::from_ranking(out).expect("valid by construction"))
    })
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let Some(i) = (0..p.len() - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).expect("exists");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}
