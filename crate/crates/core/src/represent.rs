//! Which node rankings a graph can realise under some linear centrality.
//!
//! A permutation `π` (rank → node) is representable when some `a` makes
//! `C·a` strictly decreasing along `π`. That is strict feasibility of
//! `A·a < 0` where row `i` of `A` is `row_{π(i+1)}(C) − row_{π(i)}(C)`;
//! when it fails, a Farkas certificate proves it.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::centrality::{induced_permutation, linear_centrality};
use crate::error::{Error, Result};
use crate::exact::{solve_linear, strict_feasibility, FeasibilityResult, Rational, RationalMatrix};
use crate::graph::{all_permutations, distance_count_matrix, DistanceCountMatrix, Graph, Permutation};

/// The `(n−1) × n` system of consecutive row differences along `π`.
/// Column 0 is identically zero and kept only so that witnesses index
/// like coefficient vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FarkasSystem {
    pub matrix: RationalMatrix,
    pub permutation: Permutation,
}

fn row_difference(c: &DistanceCountMatrix, minuend: usize, subtrahend: usize) -> Vec<Rational> {
    c.row(minuend)
        .iter()
        .zip(c.row(subtrahend))
        .map(|(&p, &q)| Rational::from_integer(BigInt::from(p as i64 - q as i64)))
        .collect()
}

pub fn build_farkas(c: &DistanceCountMatrix, pi: &Permutation) -> Result<FarkasSystem> {
    let n = c.n();
    if pi.len() != n {
        return Err(Error::Dimension {
            expected: n,
            got: pi.len(),
        });
    }
    let rows = pi
        .ranking()
        .windows(2)
        .map(|w| row_difference(c, w[1], w[0]))
        .collect();
    Ok(FarkasSystem {
        matrix: RationalMatrix::from_rows(rows, n)?,
        permutation: pi.clone(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepresentabilityAnswer {
    /// Coefficients inducing the permutation with no ties.
    Representable { witness: Vec<Rational> },
    /// `y ≥ 0`, `y ≠ 0` with `Aᵀy = 0`.
    NotRepresentable { certificate: Vec<Rational> },
}

impl RepresentabilityAnswer {
    pub fn is_representable(&self) -> bool {
        matches!(self, RepresentabilityAnswer::Representable { .. })
    }

    pub fn vector(&self) -> &[Rational] {
        match self {
            RepresentabilityAnswer::Representable { witness: v }
            | RepresentabilityAnswer::NotRepresentable { certificate: v } => v,
        }
    }
}

/// Decide representability from a precomputed distance-count matrix.
pub fn is_representable_with(c: &DistanceCountMatrix, pi: &Permutation) -> Result<RepresentabilityAnswer> {
    let system = build_farkas(c, pi)?;
    Ok(match strict_feasibility(&system.matrix) {
        FeasibilityResult::Witness(mut witness) => {
            if witness.is_empty() {
                witness = vec![Rational::zero(); c.n()];
            }
            let scores = linear_centrality(c, &witness)?;
            assert_eq!(
                induced_permutation(&scores).as_ref(),
                Some(pi),
                "witness does not induce the permutation"
            );
            RepresentabilityAnswer::Representable { witness }
        }
        FeasibilityResult::Certificate(certificate) => {
            RepresentabilityAnswer::NotRepresentable { certificate }
        }
    })
}

pub fn is_representable(g: &Graph, pi: &Permutation) -> Result<RepresentabilityAnswer> {
    is_representable_with(&distance_count_matrix(g), pi)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representativeness {
    pub count: u64,
    pub total: u64,
    pub ratio: Rational,
}

impl fmt::Display for Representativeness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\t{}\t{}", self.count, self.total, self.ratio)
    }
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::Capacity {
            what: "representativeness",
            n,
            cap,
        })
    } else {
        Ok(())
    }
}

/// Representability of every permutation of the nodes, in lexicographic
/// order. Checks run in parallel; the output order does not depend on
/// scheduling.
pub fn representability_table(g: &Graph, cap: usize) -> Result<Vec<(Permutation, bool)>> {
    check_cap(g.n(), cap)?;
    let c = distance_count_matrix(g);
    let perms: Vec<Permutation> = all_permutations(g.n()).collect();
    perms
        .into_par_iter()
        .map(|pi| {
            let ok = is_representable_with(&c, &pi)?.is_representable();
            Ok((pi, ok))
        })
        .collect()
}

fn summarize(count: u64, total: u64) -> Representativeness {
    Representativeness {
        count,
        total,
        ratio: Rational::new(BigInt::from(count), BigInt::from(total)),
    }
}

/// Fraction of the `n!` permutations that `g` represents.
pub fn representativeness(g: &Graph, cap: usize) -> Result<Representativeness> {
    let table = representability_table(g, cap)?;
    let count = table.iter().filter(|(_, ok)| *ok).count() as u64;
    Ok(summarize(count, table.len() as u64))
}

/// Representativeness plus agreement with a closed-form predicate on every
/// permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub representativeness: Representativeness,
    pub predicate_count: u64,
    pub agreements: u64,
    /// First permutation (ranking) where the two disagree.
    pub first_disagreement: Option<Vec<usize>>,
}

impl CrossCheck {
    pub fn all_agree(&self) -> bool {
        self.agreements == self.representativeness.total
    }
}

pub fn cross_check(
    g: &Graph,
    cap: usize,
    predicate: impl Fn(&Permutation) -> Result<bool>,
) -> Result<CrossCheck> {
    let table = representability_table(g, cap)?;
    let mut predicate_count = 0;
    let mut agreements = 0;
    let mut first_disagreement = None;
    for (pi, ok) in &table {
        let p = predicate(pi)?;
        predicate_count += u64::from(p);
        if p == *ok {
            agreements += 1;
        } else if first_disagreement.is_none() {
            first_disagreement = Some(pi.ranking().to_vec());
        }
    }
    let count = table.iter().filter(|(_, ok)| *ok).count() as u64;
    Ok(CrossCheck {
        representativeness: summarize(count, table.len() as u64),
        predicate_count,
        agreements,
        first_disagreement,
    })
}

fn require_four(pi: &Permutation) -> Result<usize> {
    let n = pi.len();
    if n < 4 {
        Err(Error::Precondition(format!("needs n >= 4, got {n}")))
    } else {
        Ok(n)
    }
}

/// `ρ(0) < ρ(n−1) < ρ(1)` or `ρ(1) < ρ(n−1) < ρ(0)`: node `n−1` ranks
/// strictly between nodes 0 and 1.
pub fn theorem5_condition(pi: &Permutation) -> Result<bool> {
    let n = require_four(pi)?;
    let (r0, r1, rl) = (pi.rank_of(0), pi.rank_of(1), pi.rank_of(n - 1));
    Ok((r0 < rl && rl < r1) || (r1 < rl && rl < r0))
}

/// `2 ≤ ρ(n−1) ≤ n−3`, or `ρ(n−1) = 1` with `ρ(n−2) ≠ 0`, or
/// `ρ(n−1) = n−2` with `ρ(n−2) ≠ n−1`.
pub fn pn_membership(pi: &Permutation) -> Result<bool> {
    let n = require_four(pi)?;
    let last = pi.rank_of(n - 1);
    let second = pi.rank_of(n - 2);
    Ok((2 <= last && last <= n - 3)
        || (last == 1 && second != 0)
        || (last == n - 2 && second != n - 1))
}

/// Coefficients `a` with `C·a = v`, if any. Free coefficients are set to 0.
pub fn value_interpolation(g: &Graph, v: &[Rational]) -> Result<Option<Vec<Rational>>> {
    let c = distance_count_matrix(g).to_rational();
    if v.len() != c.rows() {
        return Err(Error::Dimension {
            expected: c.rows(),
            got: v.len(),
        });
    }
    solve_linear(&c, v)
}

/// Is there a linear centrality under which every `u` strictly outranks
/// its `w`? One row `row_w(C) − row_u(C)` per `(u, w)` pair.
pub fn robust_outranking(g: &Graph, constraints: &[(usize, usize)]) -> Result<FeasibilityResult> {
    let n = g.n();
    let c = distance_count_matrix(g);
    let mut rows = Vec::with_capacity(constraints.len());
    for &(u, w) in constraints {
        for node in [u, w] {
            if node >= n {
                return Err(Error::Bounds { node, n });
            }
        }
        if u == w {
            return Err(Error::DegenerateConstraint(u));
        }
        rows.push(row_difference(&c, w, u));
    }
    Ok(strict_feasibility(&RationalMatrix::from_rows(rows, n)?))
}
