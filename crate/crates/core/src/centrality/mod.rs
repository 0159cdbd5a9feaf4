//! Exact centrality evaluation, rankings and agreement.

mod spec;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::matrix::dot;
use crate::exact::Rational;
use crate::graph::{all_permutations, distance_count_matrix, DistanceCountMatrix, Graph, Permutation};

pub use spec::{parse_coefficient_list, CoefficientSpec};

/// One exact score per node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralityVector(pub Vec<Rational>);

impl CentralityVector {
    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, node: usize) -> &Rational {
        &self.0[node]
    }

    pub fn has_ties(&self) -> bool {
        ranking(self).iter().any(|tier| tier.len() > 1)
    }
}

/// `C · a`. The coefficient vector must have exactly `n` entries.
pub fn linear_centrality(c: &DistanceCountMatrix, a: &[Rational]) -> Result<CentralityVector> {
    if a.len() != c.n() {
        return Err(Error::Dimension {
            expected: c.n(),
            got: a.len(),
        });
    }
    Ok(CentralityVector(
        c.rows()
            .iter()
            .map(|row| {
                row.iter()
                    .zip(a)
                    .filter(|(&count, _)| count != 0)
                    .fold(Rational::zero(), |acc, (&count, coef)| {
                        acc + coef * Rational::from_integer(BigInt::from(count))
                    })
            })
            .collect(),
    ))
}

/// Materialise `spec` for the graph size and evaluate it.
pub fn evaluate(g: &Graph, spec: &CoefficientSpec) -> Result<CentralityVector> {
    let c = distance_count_matrix(g);
    linear_centrality(&c, &spec.materialize(g.n())?)
}

fn reach_and_distance_sum(row: &[usize]) -> (u64, u64) {
    row.iter().enumerate().fold((0, 0), |(reach, sum), (k, &cnt)| {
        (reach + cnt as u64, sum + (k * cnt) as u64)
    })
}

/// `1 / Σ d(y, x)` over the nodes `y` that reach `x`; 0 when only `x`
/// itself reaches `x`.
pub fn closeness(g: &Graph) -> CentralityVector {
    let c = distance_count_matrix(g);
    CentralityVector(
        c.rows()
            .iter()
            .map(|row| match reach_and_distance_sum(row) {
                (_, 0) => Rational::zero(),
                (_, s) => Rational::new(BigInt::one(), BigInt::from(s)),
            })
            .collect(),
    )
}

/// `|{y : d(y, x) < ∞}|² / Σ d(y, x)`; 1 when only `x` itself reaches `x`.
pub fn lin(g: &Graph) -> CentralityVector {
    let c = distance_count_matrix(g);
    CentralityVector(
        c.rows()
            .iter()
            .map(|row| match reach_and_distance_sum(row) {
                (_, 0) => Rational::one(),
                (r, s) => Rational::new(BigInt::from(r * r), BigInt::from(s)),
            })
            .collect(),
    )
}

/// The first `count` primes.
pub fn first_primes(count: usize) -> Vec<u64> {
    let mut primes: Vec<u64> = Vec::with_capacity(count);
    let mut candidate = 2u64;
    while primes.len() < count {
        if primes
            .iter()
            .take_while(|&&p| p * p <= candidate)
            .all(|&p| !candidate.is_multiple_of(p))
        {
            primes.push(candidate);
        }
        candidate += 1;
    }
    primes
}

/// `Π_j p_j^{c_ij}` with `p_j` the `j`-th prime: order-equivalent to the
/// linear centrality with `a_j = log p_j`, kept exact. Two nodes tie iff
/// their rows are equal.
pub fn prime_product_centrality(c: &DistanceCountMatrix) -> CentralityVector {
    let primes = first_primes(c.n());
    CentralityVector(
        c.rows()
            .iter()
            .map(|row| {
                let product = row
                    .iter()
                    .zip(&primes)
                    .fold(BigInt::one(), |acc, (&e, &p)| acc * num_traits::pow(BigInt::from(p), e));
                Rational::from_integer(product)
            })
            .collect(),
    )
}

/// Number of rows lexicographically smaller than the node's row.
pub fn lex_rank_centrality(c: &DistanceCountMatrix) -> CentralityVector {
    let rows = c.rows();
    CentralityVector(
        rows.iter()
            .map(|row| {
                let smaller = rows.iter().filter(|other| *other < row).count();
                Rational::from_integer(BigInt::from(smaller))
            })
            .collect(),
    )
}

/// Canonical labelling by brute force: among all orderings `σ` (position →
/// node) take the first whose relabelled adjacency matrix
/// `M[i][j] = A[σ(i)][σ(j)]`, read row by row, is lexicographically
/// smallest; node `σ(i)` scores `i`. Injective on rigid graphs.
pub fn lex_canonical_centrality(g: &Graph, cap: usize) -> Result<CentralityVector> {
    let n = g.n();
    if n > cap {
        return Err(Error::Capacity {
            what: "lexicographic canonisation",
            n,
            cap,
        });
    }
    let adj = g.adjacency_matrix();
    let cmp = |s: &[usize], t: &[usize]| -> Ordering {
        for i in 0..n {
            for j in 0..n {
                let o = adj[s[i]][s[j]].cmp(&adj[t[i]][t[j]]);
                if o != Ordering::Equal {
                    return o;
                }
            }
        }
        Ordering::Equal
    };
    let mut best: Option<Permutation> = None;
    for sigma in all_permutations(n) {
        let better = match &best {
            None => true,
            Some(b) => cmp(sigma.ranking(), b.ranking()) == Ordering::Less,
        };
        if better {
            best = Some(sigma);
        }
    }
    let best = best.expect("S_n is never empty");
    Ok(CentralityVector(
        (0..n)
            .map(|node| Rational::from_integer(BigInt::from(best.rank_of(node))))
            .collect(),
    ))
}

/// Nodes grouped into tiers of equal score, tiers by strictly decreasing
/// score, nodes ascending within a tier.
pub fn ranking(v: &CentralityVector) -> Vec<Vec<usize>> {
    let mut order: Vec<usize> = (0..v.len()).collect();
    order.sort_by(|&a, &b| v.get(b).cmp(v.get(a)).then(a.cmp(&b)));
    let mut tiers: Vec<Vec<usize>> = Vec::new();
    for node in order {
        match tiers.last_mut() {
            Some(tier) if v.get(tier[0]) == v.get(node) => tier.push(node),
            _ => tiers.push(vec![node]),
        }
    }
    tiers
}

/// The permutation induced by a tie-free score vector.
pub fn induced_permutation(v: &CentralityVector) -> Option<Permutation> {
    let tiers = ranking(v);
    if tiers.iter().any(|t| t.len() != 1) {
        return None;
    }
    Permutation::from_ranking(tiers.into_iter().map(|t| t[0]).collect()).ok()
}

/// Whether `pi` lists the nodes in non-increasing score order.
pub fn respects(v: &CentralityVector, pi: &Permutation) -> Result<bool> {
    if v.len() != pi.len() {
        return Err(Error::Dimension {
            expected: v.len(),
            got: pi.len(),
        });
    }
    Ok(pi
        .ranking()
        .windows(2)
        .all(|w| v.get(w[0]) >= v.get(w[1])))
}

/// Two score vectors agree iff they respect the same permutations, i.e.
/// they induce the same weak order.
pub fn agree(v1: &CentralityVector, v2: &CentralityVector) -> Result<bool> {
    if v1.len() != v2.len() {
        return Err(Error::Dimension {
            expected: v1.len(),
            got: v2.len(),
        });
    }
    Ok(ranking(v1) == ranking(v2))
}

/// Score of a single node from its distance-count row.
pub fn row_score(row: &[usize], a: &[Rational]) -> Rational {
    let as_rational: Vec<Rational> = row
        .iter()
        .map(|&c| Rational::from_integer(BigInt::from(c)))
        .collect();
    let len = as_rational.len().min(a.len());
    dot(&as_rational[..len], &a[..len])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, ratio};
    use crate::graph::generators::{fixture, hub_cycle};
    use crate::graph::DEFAULT_CAP;

    fn vals(v: &[i64]) -> CentralityVector {
        CentralityVector(v.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn in_degree_on_hub_cycle() {
        let g = hub_cycle(5).unwrap();
        let v = evaluate(&g, &CoefficientSpec::in_degree()).unwrap();
        assert_eq!(v.get(0), &int(4));
    }

    #[test]
    fn neg_peripherality_on_edge() {
        let g = Graph::undirected(2, [(0, 1)]).unwrap();
        let v = evaluate(&g, &CoefficientSpec::NegPeripherality).unwrap();
        assert_eq!(v, vals(&[-1, -1]));
    }

    #[test]
    fn harmonic_on_spider_centre() {
        let f = fixture("lin-counterexample").unwrap();
        let v = evaluate(&f.graph, &CoefficientSpec::Harmonic).unwrap();
        assert_eq!(v.get(f.node("x").unwrap()), &ratio(11, 2));
    }

    #[test]
    fn dimension_mismatch() {
        let c = distance_count_matrix(&Graph::empty(3));
        assert!(linear_centrality(&c, &[int(1)]).is_err());
    }

    #[test]
    fn lin_fixture_values() {
        let f = fixture("lin-counterexample").unwrap();
        let v = lin(&f.graph);
        let at = |l: &str| v.get(f.node(l).unwrap()).clone();
        assert_eq!(at("u"), ratio(8, 3));
        assert_eq!(at("v"), int(3));
        assert_eq!(at("x"), ratio(50, 9));
        assert_eq!(at("y"), ratio(49, 9));
    }

    #[test]
    fn closeness_values() {
        let edge = Graph::undirected(2, [(0, 1)]).unwrap();
        assert_eq!(closeness(&edge), vals(&[1, 1]));
        assert_eq!(closeness(&hub_cycle(4).unwrap()).get(0), &ratio(1, 3));
        // isolated-in-reach node: conventions 0 and 1
        let lone = Graph::empty(1);
        assert_eq!(closeness(&lone), vals(&[0]));
        assert_eq!(lin(&lone), vals(&[1]));
    }

    #[test]
    fn prime_product() {
        let r = fixture("rigid3").unwrap();
        let v = prime_product_centrality(&distance_count_matrix(&r.graph));
        // rows (1,2,0) and (1,1,1): 2·3² = 18 and 2·3·5 = 30
        assert_eq!(v, vals(&[18, 30, 30]));
        let single = DistanceCountMatrix::from_rows(vec![vec![1, 0, 0]; 3]).unwrap();
        assert_eq!(prime_product_centrality(&single).get(0), &int(2));
        let hub = prime_product_centrality(&distance_count_matrix(&hub_cycle(4).unwrap()));
        assert!(!hub.has_ties());
        assert_eq!(first_primes(6), vec![2, 3, 5, 7, 11, 13]);
    }

    #[test]
    fn lex_rank() {
        let r = fixture("rigid3").unwrap();
        let v = lex_rank_centrality(&distance_count_matrix(&r.graph));
        // (1,1,1) < (1,2,0)
        assert_eq!(v, vals(&[2, 0, 0]));
        let cycle = Graph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(lex_rank_centrality(&distance_count_matrix(&cycle)), vals(&[0, 0, 0]));
    }

    #[test]
    fn lex_canonical() {
        let r = fixture("rigid3").unwrap();
        let v = lex_canonical_centrality(&r.graph, DEFAULT_CAP).unwrap();
        assert!(!v.has_ties());
        assert_eq!(lex_canonical_centrality(&Graph::empty(2), DEFAULT_CAP).unwrap(), vals(&[0, 1]));
        let edge = Graph::undirected(2, [(0, 1)]).unwrap();
        let first = lex_canonical_centrality(&edge, DEFAULT_CAP).unwrap();
        assert_eq!(first, lex_canonical_centrality(&edge, DEFAULT_CAP).unwrap());
        assert!(lex_canonical_centrality(&Graph::empty(9), 8).is_err());
    }

    #[test]
    fn ranking_tiers() {
        assert_eq!(ranking(&vals(&[3, 1, 2])), vec![vec![0], vec![2], vec![1]]);
        assert_eq!(ranking(&vals(&[1, 1])), vec![vec![0, 1]]);
        let g = hub_cycle(4).unwrap();
        let h = evaluate(&g, &CoefficientSpec::Harmonic).unwrap();
        assert_eq!(ranking(&h)[0], vec![0]);
    }

    #[test]
    fn respects_and_agree() {
        let v = vals(&[1, 1, 0]);
        let p = |r: Vec<usize>| Permutation::from_ranking(r).unwrap();
        assert!(respects(&v, &p(vec![0, 1, 2])).unwrap());
        assert!(respects(&v, &p(vec![1, 0, 2])).unwrap());
        assert!(!respects(&v, &p(vec![2, 0, 1])).unwrap());
        assert!(respects(&v, &p(vec![0, 1])).is_err());
        assert!(agree(&v, &v).unwrap());
        assert!(agree(&v, &vals(&[5, 5, -1])).unwrap());
        assert!(!agree(&v, &vals(&[2, 1, 0])).unwrap());
        assert_eq!(induced_permutation(&vals(&[2, 3, 1])).unwrap().ranking(), &[1, 0, 2]);
        assert!(induced_permutation(&v).is_none());
    }
}
