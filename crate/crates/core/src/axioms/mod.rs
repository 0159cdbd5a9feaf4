//! Axiom decisions for coefficient vectors, with empirical checks on the
//! graphs that define each axiom.

mod empirical;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::centrality::CoefficientSpec;
use crate::exact::Rational;
use crate::graph::Graph;

pub use empirical::{
    arc_addition_trials, empirical_arc_addition, empirical_size_density, random_graph,
    size_density_consistency, two_copies_check, ArcAdditionRecord, ConsistencyReport, ScoreGraph,
    SizeDensityRow, TrialSummary,
};

/// A yes/no answer with the reason that decided it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub justification: String,
}

impl Verdict {
    fn yes(why: impl Into<String>) -> Self {
        Self {
            holds: true,
            justification: why.into(),
        }
    }

    fn no(why: impl Into<String>) -> Self {
        Self {
            holds: false,
            justification: why.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub density: Verdict,
    pub size: Verdict,
    pub score_monotone: Verdict,
    /// Sufficient condition only: `false` does not mean "not rank monotone".
    pub rank_monotone_sufficient: Verdict,
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let line = |name: &str, v: &Verdict| {
            format!("{name}\t{}\t{}", if v.holds { "yes" } else { "no" }, v.justification)
        };
        writeln!(f, "{}", line("density", &self.density))?;
        writeln!(f, "{}", line("size", &self.size))?;
        writeln!(f, "{}", line("score-monotone", &self.score_monotone))?;
        writeln!(
            f,
            "{}",
            line("rank-monotone (sufficient condition)", &self.rank_monotone_sufficient)
        )
    }
}

pub fn report(spec: &CoefficientSpec, horizon: usize) -> AxiomReport {
    let density = check_density(spec, horizon);
    let size = check_size(spec);
    let score_monotone = check_score_monotone(spec);
    let rank_monotone_sufficient = check_rank_monotone_sufficient(spec);
    debug_assert!(!rank_monotone_sufficient.holds || score_monotone.holds);
    AxiomReport {
        density,
        size,
        score_monotone,
        rank_monotone_sufficient,
    }
}

/// `(Δa)_0 = 0`, `(Δa)_i = a_{i+1} − a_i` for `i > 0`, with the implied
/// zero tail. The output has the same length as the input.
pub fn delta(a: &[Rational]) -> Vec<Rational> {
    let at = |i: usize| a.get(i).cloned().unwrap_or_else(Rational::zero);
    (0..a.len())
        .map(|i| if i == 0 { Rational::zero() } else { at(i + 1) - at(i) })
        .collect()
}

pub fn delta2(a: &[Rational]) -> Vec<Rational> {
    delta(&delta(a))
}

/// Why score monotonicity fails, in the order the failures are tested.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScoreFailure {
    /// `a_1 ≤ 0`.
    NonPositiveFirst,
    /// `a_1 > 0` and `a_index < 0`, `index > 1` smallest.
    Negative { index: usize },
    /// All non-negative and `a_index < a_{index+1}`, `index ≥ 1` smallest.
    Increase { index: usize },
    /// Non-negative, non-increasing, but `a_1 = a_2`.
    FlatStart,
}

/// Coefficients `a_1..=a_{last}` with `last` two past the support, so
/// the zero tail takes part in first and second differences.
fn explicit_window(a: &[Rational]) -> Vec<Rational> {
    let mut w = a.to_vec();
    w.resize(a.len().max(3) + 2, Rational::zero());
    w
}

/// Exact score-monotonicity decision for an explicit vector. `a_0` is a
/// constant shift of every score and plays no part.
pub fn score_monotone_failure(a: &[Rational]) -> Option<ScoreFailure> {
    let w = explicit_window(a);
    let last = w.len() - 1;
    if !w[1].is_positive() {
        return Some(ScoreFailure::NonPositiveFirst);
    }
    if let Some(index) = (2..=last).find(|&i| w[i].is_negative()) {
        return Some(ScoreFailure::Negative { index });
    }
    if let Some(index) = (1..last).find(|&i| w[i] < w[i + 1]) {
        return Some(ScoreFailure::Increase { index });
    }
    if w[1] == w[2] {
        return Some(ScoreFailure::FlatStart);
    }
    None
}

fn describe_failure(f: &ScoreFailure) -> String {
    match f {
        ScoreFailure::NonPositiveFirst => "a_1 <= 0".into(),
        ScoreFailure::Negative { index } => format!("a_{index} < 0"),
        ScoreFailure::Increase { index } => format!("a_{index} < a_{}", index + 1),
        ScoreFailure::FlatStart => "a_1 = a_2, (Δa)_1 is not < 0".into(),
    }
}

pub fn check_score_monotone(spec: &CoefficientSpec) -> Verdict {
    match spec {
        CoefficientSpec::Explicit(a) => match score_monotone_failure(a) {
            None => Verdict::yes("a >= 0, Δa <= 0 and (Δa)_1 < 0"),
            Some(f) => Verdict::no(describe_failure(&f)),
        },
        CoefficientSpec::NegPeripherality => Verdict::no("a_1 = -1 <= 0"),
        CoefficientSpec::Harmonic | CoefficientSpec::PowerLaw(_) | CoefficientSpec::ExpDecay(_) => {
            Verdict::yes("positive, strictly decreasing family")
        }
    }
}

pub fn check_rank_monotone_sufficient(spec: &CoefficientSpec) -> Verdict {
    let score = check_score_monotone(spec);
    if !score.holds {
        return Verdict::no(format!("not score monotone ({})", score.justification));
    }
    match spec {
        CoefficientSpec::Explicit(a) => {
            let w = explicit_window(a);
            let d2 = delta2(&w);
            if let Some(i) = (1..d2.len()).find(|&i| d2[i].is_negative()) {
                return Verdict::no(format!("(Δ²a)_{i} = {} < 0", d2[i]));
            }
            if !d2[1].is_positive() {
                return Verdict::no(format!("(Δ²a)_1 = {} is not > 0", d2[1]));
            }
            Verdict::yes("score monotone, Δ²a >= 0 and (Δ²a)_1 > 0")
        }
        CoefficientSpec::Harmonic => {
            Verdict::yes("score monotone, (Δ²a)_i = 2/(i(i+1)(i+2)) > 0")
        }
        CoefficientSpec::PowerLaw(_) => {
            Verdict::yes("score monotone, i^-γ is strictly convex so Δ²a > 0")
        }
        CoefficientSpec::ExpDecay(_) => {
            Verdict::yes("score monotone, (Δ²a)_i = δ^i (1-δ)² > 0")
        }
        CoefficientSpec::NegPeripherality => unreachable!("not score monotone"),
    }
}

/// `a_k > k(a_2 − a_1) + (2a_1 − a_2)` at a single `k`.
pub fn density_inequality(a: &[Rational], k: usize) -> bool {
    let at = |i: usize| a.get(i).cloned().unwrap_or_else(Rational::zero);
    let (a1, a2) = (at(1), at(2));
    let rhs = Rational::from_integer(BigInt::from(k)) * (&a2 - &a1) + (&a1 + &a1 - &a2);
    at(k) > rhs
}

/// Exact density decision. For explicit vectors the inequality is checked
/// directly up to the end of the support; beyond it `a_k = 0` and the
/// right-hand side is affine in `k`, so its sign analysis settles every
/// remaining `k`. `horizon` only limits how many indices are listed in the
/// justification.
pub fn check_density(spec: &CoefficientSpec, horizon: usize) -> Verdict {
    match spec {
        CoefficientSpec::Harmonic => Verdict::yes("power law with γ = 1 (always dense)"),
        CoefficientSpec::PowerLaw(_) => Verdict::yes("power-law decay always satisfies density"),
        CoefficientSpec::ExpDecay(_) => {
            Verdict::yes("exponential decay always satisfies density")
        }
        CoefficientSpec::NegPeripherality => {
            Verdict::no("a_k = -k equals the right-hand side -k at every k >= 3")
        }
        CoefficientSpec::Explicit(a) => {
            let tail_start = a.len().max(3);
            if let Some(k) = (3..tail_start).find(|&k| !density_inequality(a, k)) {
                return Verdict::no(format!("inequality fails at k = {k}"));
            }
            let at = |i: usize| a.get(i).cloned().unwrap_or_else(Rational::zero);
            let (a1, a2) = (at(1), at(2));
            // beyond the support: need k(a_1 − a_2) > 2a_1 − a_2
            let slope = &a1 - &a2;
            let constant = &a1 + &a1 - &a2;
            let first_failure = if slope.is_positive() {
                let at_start = Rational::from_integer(BigInt::from(tail_start)) * &slope;
                (at_start <= constant).then_some(tail_start)
            } else if slope.is_zero() {
                (!constant.is_negative()).then_some(tail_start)
            } else {
                // slope < 0: fails once k >= constant / slope
                let bound = (&constant / &slope).ceil().to_integer();
                let k = bound.max(BigInt::from(tail_start));
                Some(k.try_into().unwrap_or(usize::MAX))
            };
            match first_failure {
                Some(k) => Verdict::no(format!("inequality fails at k = {k}")),
                None => {
                    let shown = horizon.max(3).min(tail_start.max(3));
                    Verdict::yes(format!(
                        "holds for 3 <= k < {tail_start} directly (listed up to {shown}); a_1 > a_2 keeps the tail positive"
                    ))
                }
            }
        }
    }
}

/// Size axiom: `a_1 > 0` and `Σ a_i` diverges. Decidable for the named
/// families; a finite vector always has a convergent sum.
pub fn check_size(spec: &CoefficientSpec) -> Verdict {
    match spec {
        CoefficientSpec::Harmonic => Verdict::yes("a_1 > 0 and the harmonic series diverges"),
        CoefficientSpec::PowerLaw(g) => {
            if *g <= Rational::one() {
                Verdict::yes("a_1 > 0 and Σ i^-γ diverges for γ <= 1")
            } else {
                Verdict::no("Σ i^-γ converges for γ > 1")
            }
        }
        CoefficientSpec::ExpDecay(_) => Verdict::no("Σ δ^i converges"),
        CoefficientSpec::NegPeripherality => Verdict::no("a_1 = -1 <= 0"),
        CoefficientSpec::Explicit(a) => {
            let a1 = a.get(1).cloned().unwrap_or_else(Rational::zero);
            if !a1.is_positive() {
                Verdict::no("a_1 <= 0")
            } else {
                Verdict::no("finite support, the sum converges")
            }
        }
    }
}

/// A graph on which adding `x → y` fails to increase the score of `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub failure: ScoreFailure,
    pub graph: Graph,
    pub x: usize,
    pub y: usize,
}

fn ceil_positive(r: &Rational) -> usize {
    let c: BigInt = r.ceil().to_integer();
    let c: usize = c.try_into().expect("leaf count fits in memory");
    c.max(1)
}

/// Construct the witness graph for a score-monotonicity failure; `None`
/// when the spec is score monotone. Parametric specs use their first
/// coefficients as an explicit vector.
pub fn score_counterexample(spec: &CoefficientSpec) -> Option<Counterexample> {
    let a = match spec {
        CoefficientSpec::Explicit(a) => a.clone(),
        CoefficientSpec::NegPeripherality => spec.materialize(4).expect("exact"),
        _ => return None,
    };
    let failure = score_monotone_failure(&a)?;
    let w = explicit_window(&a);
    let (graph, x, y) = match &failure {
        ScoreFailure::NonPositiveFirst => (Graph::empty(2), 1, 0),
        ScoreFailure::Negative { index } => {
            // y = 0, chain x = 1 ← 2 ← … ← i−1, then k leaves pointing at i−1
            let i = *index;
            let prefix = (1..i).fold(Rational::zero(), |acc, j| acc + &w[j]);
            let k = ceil_positive(&((prefix + Rational::one()) / w[i].abs()));
            let mut arcs: Vec<(usize, usize)> = (2..i).map(|j| (j, j - 1)).collect();
            let hub = i - 1;
            arcs.extend((0..k).map(|l| (i + l, hub)));
            (Graph::from_arcs(i + k, arcs).expect("in range"), 1, 0)
        }
        ScoreFailure::Increase { index } => {
            // chain[d] sits at distance d from y: y = 0, z = 1, x = 2, w_d = d
            let i = *index;
            let chain_len = i.max(2) + 1;
            let gap = &w[i + 1] - &w[i];
            let k = ceil_positive(&((&w[1] + Rational::one()) / gap));
            let mut arcs: Vec<(usize, usize)> = (1..chain_len).map(|d| (d, d - 1)).collect();
            arcs.extend((0..k).map(|l| (chain_len + l, i)));
            (Graph::from_arcs(chain_len + k, arcs).expect("in range"), 2, 0)
        }
        ScoreFailure::FlatStart => (
            Graph::from_arcs(3, [(1, 0), (2, 1)]).expect("in range"),
            2,
            0,
        ),
    };
    Some(Counterexample {
        failure,
        graph,
        x,
        y,
    })
}

/// Smallest `k ≥ 3` with `(k − 1)·a_1 > bound`, for `a_1 > 0`.
pub(crate) fn first_k_beating(a1: &Rational, bound: &Rational) -> usize {
    let q: BigInt = (bound / a1).floor().to_integer();
    let k = q + BigInt::from(2);
    let k: usize = k.max(BigInt::from(3)).try_into().unwrap_or(usize::MAX);
    k
}

/// An exact upper bound on every partial sum `Σ_{i=1}^{m} a_i`, when one
/// exists (convergent families and finite vectors).
pub fn partial_sum_bound(spec: &CoefficientSpec) -> Option<Rational> {
    match spec {
        CoefficientSpec::ExpDecay(d) => Some(d / (Rational::one() - d)),
        CoefficientSpec::PowerLaw(g) if *g > Rational::one() => {
            Some(Rational::one() + (g - Rational::one()).recip())
        }
        CoefficientSpec::Explicit(a) => {
            let mut best = Rational::zero();
            let mut running = Rational::zero();
            for v in a.iter().skip(1) {
                running += v;
                if running > best {
                    best = running.clone();
                }
            }
            Some(best)
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, ratio};

    fn ex(v: &[i64]) -> CoefficientSpec {
        CoefficientSpec::Explicit(v.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn delta_examples() {
        let a = vec![int(0), int(1), ratio(1, 2), ratio(1, 3)];
        assert_eq!(delta(&a), vec![int(0), ratio(-1, 2), ratio(-1, 6), ratio(-1, 3)]);
        assert_eq!(delta(&[int(0), int(0), int(0)]), vec![int(0); 3]);
        assert_eq!(delta2(&[int(0), int(1), int(0)])[1], int(1));
    }

    #[test]
    fn score_monotone_examples() {
        assert!(check_score_monotone(&CoefficientSpec::Harmonic).holds);
        assert!(check_score_monotone(&ex(&[0, 1])).holds);
        assert!(!check_score_monotone(&ex(&[0, 1, 2])).holds);
        assert!(!check_score_monotone(&ex(&[0, 1, 1])).holds);
        assert!(!check_score_monotone(&CoefficientSpec::NegPeripherality).holds);
        // a_0 plays no part
        assert!(check_score_monotone(&ex(&[-7, 2, 1])).holds);
    }

    #[test]
    fn failure_order() {
        let f = |v: &[i64]| score_monotone_failure(&v.iter().map(|&x| int(x)).collect::<Vec<_>>());
        assert_eq!(f(&[0, -1]), Some(ScoreFailure::NonPositiveFirst));
        assert_eq!(f(&[0, 1, -1]), Some(ScoreFailure::Negative { index: 2 }));
        assert_eq!(f(&[0, 1, 0, 2]), Some(ScoreFailure::Increase { index: 2 }));
        assert_eq!(f(&[0, 2, 2, 1]), Some(ScoreFailure::FlatStart));
        assert_eq!(f(&[0, 3, 2, 1]), None);
    }

    #[test]
    fn rank_monotone_examples() {
        assert!(check_rank_monotone_sufficient(&CoefficientSpec::ExpDecay(ratio(1, 2))).holds);
        assert!(check_rank_monotone_sufficient(&CoefficientSpec::Harmonic).holds);
        assert!(!check_rank_monotone_sufficient(&ex(&[0, 2, 1])).holds);
        // in-degree: Δ² = (0, 1, 0, …) so the sufficient condition holds
        assert!(check_rank_monotone_sufficient(&ex(&[0, 1])).holds);
        assert!(check_rank_monotone_sufficient(&ex(&[0, 3, 1])).holds);
    }

    #[test]
    fn density_examples() {
        assert!(check_density(&CoefficientSpec::PowerLaw(int(2)), 50).holds);
        assert!(check_density(&CoefficientSpec::ExpDecay(ratio(1, 2)), 50).holds);
        assert!(!check_density(&ex(&[0, 1, 1]), 50).holds);
        assert!(!check_density(&CoefficientSpec::NegPeripherality, 50).holds);
        assert!(check_density(&ex(&[0, 1]), 50).holds);
        // slope < 0 (a_1 < a_2): fails in the tail
        let v = check_density(&ex(&[0, 1, 2]), 50);
        assert!(!v.holds);
    }

    #[test]
    fn density_tail_boundary() {
        // a_1 = 3, a_2 = 1: tail needs 2k > 5, true from k = 3
        assert!(check_density(&ex(&[0, 3, 1]), 10).holds);
        // a_1 = 3, a_2 = 2, a_3 large: tail needs k > 4, fails at k = 4
        let v = check_density(&ex(&[0, 3, 2, 100]), 10);
        assert_eq!(v, Verdict::no("inequality fails at k = 4"));
    }

    #[test]
    fn size_examples() {
        assert!(check_size(&CoefficientSpec::PowerLaw(ratio(1, 2))).holds);
        assert!(check_size(&CoefficientSpec::PowerLaw(int(1))).holds);
        assert!(!check_size(&CoefficientSpec::PowerLaw(int(2))).holds);
        for d in [ratio(1, 4), ratio(1, 2), ratio(3, 4)] {
            assert!(!check_size(&CoefficientSpec::ExpDecay(d)).holds);
        }
        assert!(!check_size(&ex(&[0, 5, 1])).holds);
        assert!(check_size(&CoefficientSpec::Harmonic).holds);
    }

    #[test]
    fn counterexample_shapes() {
        let a = score_counterexample(&ex(&[0, -1])).unwrap();
        assert_eq!(a.failure, ScoreFailure::NonPositiveFirst);
        assert_eq!(a.graph.n(), 2);

        // case b at i = 2: k = ceil((1 + 1)/1) = 2 leaves on x
        let b = score_counterexample(&ex(&[0, 1, -1])).unwrap();
        assert_eq!(b.failure, ScoreFailure::Negative { index: 2 });
        assert_eq!(b.graph.n(), 4);
        assert_eq!(b.graph.predecessors(1), &[2, 3]);

        assert!(score_counterexample(&CoefficientSpec::Harmonic).is_none());
        assert!(score_counterexample(&ex(&[0, 3, 2, 1])).is_none());
    }
}
