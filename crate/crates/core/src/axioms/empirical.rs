use std::fmt;

use num_traits::{Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{check_density, check_size, density_inequality, first_k_beating, partial_sum_bound};
use crate::centrality::{evaluate, CoefficientSpec};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::graph::generators::clique_cycle;
use crate::graph::{disjoint_union, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScoreGraph {
    /// Clique and cycle, no bridge.
    S,
    /// Clique and cycle joined by the `x - y` bridge.
    Sxy,
}

impl fmt::Display for ScoreGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScoreGraph::S => "S",
            ScoreGraph::Sxy => "S_xy",
        })
    }
}

/// One `(k, p)` comparison, with the scores evaluated on the graph and by
/// closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SizeDensityRow {
    pub graph: ScoreGraph,
    pub k: usize,
    pub p: usize,
    pub score_x: Rational,
    pub score_y: Rational,
    pub closed_x: Rational,
    pub closed_y: Rational,
}

impl SizeDensityRow {
    pub fn x_wins(&self) -> bool {
        self.score_x > self.score_y
    }

    pub fn closed_form_matches(&self) -> bool {
        self.score_x == self.closed_x && self.score_y == self.closed_y
    }

    pub const TSV_HEADER: &'static str = "graph\tk\tp\tscore_x\tscore_y\tcompare\tclosed_form";
}

impl fmt::Display for SizeDensityRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cmp = match self.score_x.cmp(&self.score_y) {
            std::cmp::Ordering::Greater => "x>y",
            std::cmp::Ordering::Equal => "x=y",
            std::cmp::Ordering::Less => "x<y",
        };
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.graph,
            self.k,
            self.p,
            self.score_x,
            self.score_y,
            cmp,
            if self.closed_form_matches() { "ok" } else { "MISMATCH" }
        )
    }
}

fn sum(a: &[Rational], range: std::ops::RangeInclusive<usize>) -> Rational {
    range.fold(Rational::zero(), |acc, i| acc + &a[i])
}

/// Closed-form scores of `(x, y)`. `a` must cover indices `0..=p`.
fn closed_form(a: &[Rational], graph: ScoreGraph, k: usize, p: usize) -> (Rational, Rational) {
    let kk = |m: usize| Rational::from_integer(m.into());
    match graph {
        ScoreGraph::S => (&a[0] + kk(k - 1) * &a[1], sum(a, 0..=p - 1)),
        ScoreGraph::Sxy => (
            &a[0] + kk(k) * &a[1] + sum(a, 2..=p),
            &a[0] + kk(2) * &a[1] + kk(k - 1) * &a[2] + sum(a, 2..=p - 1),
        ),
    }
}

/// Evaluate the spec on `S` and `S_xy` for every `3 ≤ k ≤ k_max`,
/// `3 ≤ p ≤ p_max`, alongside the closed-form scores.
pub fn empirical_size_density(
    spec: &CoefficientSpec,
    k_max: usize,
    p_max: usize,
) -> Result<Vec<SizeDensityRow>> {
    let a = spec.materialize(k_max.max(3) + p_max.max(3) + 1)?;
    let mut rows = Vec::new();
    for graph in [ScoreGraph::S, ScoreGraph::Sxy] {
        for k in 3..=k_max {
            for p in 3..=p_max {
                let (g, x, y) = clique_cycle(k, p, graph == ScoreGraph::Sxy)?;
                let scores = evaluate(&g, spec)?;
                let (closed_x, closed_y) = closed_form(&a, graph, k, p);
                rows.push(SizeDensityRow {
                    graph,
                    k,
                    p,
                    score_x: scores.get(x).clone(),
                    score_y: scores.get(y).clone(),
                    closed_x,
                    closed_y,
                });
            }
        }
    }
    Ok(rows)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub checked: usize,
    pub mismatches: Vec<String>,
}

impl ConsistencyReport {
    pub fn is_consistent(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.mismatches.push(what());
        }
    }
}

/// Compare a table from [`empirical_size_density`] with the analytic
/// verdicts for the same spec.
///
/// * Every row must match its closed form.
/// * Density: on `S_xy` with `k = p`, `x` wins exactly when the density
///   inequality holds at `k`, and always when the axiom holds.
/// * Size, when it holds: for every `p` the advantage of `x` on `S` never
///   shrinks as `k` grows, and for every `k` the score of `y` strictly
///   grows with `p`.
/// * Size, when it fails with `a_1 > 0`: from the first `k` with
///   `(k − 1)·a_1` above a bound on every partial sum, `x` wins on `S` for
///   all `p`, so the second half of the axiom cannot hold.
/// * Size, when it fails with `a_1 ≤ 0`: the advantage of `x` never grows
///   with `k`.
pub fn size_density_consistency(
    spec: &CoefficientSpec,
    rows: &[SizeDensityRow],
) -> Result<ConsistencyReport> {
    let mut report = ConsistencyReport::default();
    let horizon = rows.iter().map(|r| r.k.max(r.p)).max().unwrap_or(3);
    let a = spec.materialize(horizon + 2)?;
    let density = check_density(spec, horizon);
    let size = check_size(spec);

    for r in rows {
        report.expect(r.closed_form_matches(), || {
            format!("{} k={} p={}: closed form differs", r.graph, r.k, r.p)
        });
        if r.graph == ScoreGraph::Sxy && r.k == r.p {
            report.expect(r.x_wins() == density_inequality(&a, r.k), || {
                format!("S_xy k=p={}: comparison disagrees with the inequality", r.k)
            });
            if density.holds {
                report.expect(r.x_wins(), || format!("S_xy k=p={}: density holds but x <= y", r.k));
            }
        }
    }

    let on_s = |k: usize, p: usize| {
        rows.iter()
            .find(|r| r.graph == ScoreGraph::S && r.k == k && r.p == p)
    };
    let advantage = |r: &SizeDensityRow| &r.score_x - &r.score_y;
    let ks: Vec<usize> = {
        let mut v: Vec<usize> = rows.iter().map(|r| r.k).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let ps: Vec<usize> = {
        let mut v: Vec<usize> = rows.iter().map(|r| r.p).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let a1 = a[1].clone();

    if size.holds {
        for &p in &ps {
            for w in ks.windows(2) {
                if let (Some(lo), Some(hi)) = (on_s(w[0], p), on_s(w[1], p)) {
                    report.expect(advantage(hi) >= advantage(lo), || {
                        format!("S p={p}: advantage of x shrinks from k={} to k={}", w[0], w[1])
                    });
                }
            }
        }
        for &k in &ks {
            for w in ps.windows(2) {
                if let (Some(lo), Some(hi)) = (on_s(k, w[0]), on_s(k, w[1])) {
                    report.expect(hi.score_y > lo.score_y, || {
                        format!("S k={k}: score of y does not grow from p={} to p={}", w[0], w[1])
                    });
                }
            }
        }
    } else if a1.is_positive() {
        if let Some(bound) = partial_sum_bound(spec) {
            let k_star = first_k_beating(&a1, &bound);
            for &k in ks.iter().filter(|&&k| k >= k_star) {
                for &p in &ps {
                    if let Some(r) = on_s(k, p) {
                        report.expect(r.x_wins(), || {
                            format!("S k={k} p={p}: x should win beyond k={k_star}")
                        });
                    }
                }
            }
        }
    } else {
        for &p in &ps {
            for w in ks.windows(2) {
                if let (Some(lo), Some(hi)) = (on_s(w[0], p), on_s(w[1], p)) {
                    report.expect(advantage(hi) <= advantage(lo), || {
                        format!("S p={p}: advantage of x grows from k={} to k={}", w[0], w[1])
                    });
                }
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcAdditionRecord {
    pub score_before: Rational,
    pub score_after: Rational,
    /// Every `w ≠ y` that did not beat `y` before is strictly beaten after.
    pub rank_ok: bool,
}

impl ArcAdditionRecord {
    pub fn score_increased(&self) -> bool {
        self.score_after > self.score_before
    }
}

/// Evaluate the spec before and after adding `x → y`.
pub fn empirical_arc_addition(
    spec: &CoefficientSpec,
    g: &Graph,
    x: usize,
    y: usize,
) -> Result<ArcAdditionRecord> {
    let n = g.n();
    for node in [x, y] {
        if node >= n {
            return Err(Error::Bounds { node, n });
        }
    }
    if x == y {
        return Err(Error::Precondition("cannot add a self-loop".into()));
    }
    if g.has_arc(x, y) {
        return Err(Error::Precondition(format!("arc {x} -> {y} is already present")));
    }
    let before = evaluate(g, spec)?;
    let after = evaluate(&g.with_arc(x, y)?, spec)?;
    let rank_ok = (0..n)
        .filter(|&w| w != y && before.get(w) <= before.get(y))
        .all(|w| after.get(w) < after.get(y));
    Ok(ArcAdditionRecord {
        score_before: before.get(y).clone(),
        score_after: after.get(y).clone(),
        rank_ok,
    })
}

/// Add `x → y` to the first of two disjoint copies of `g`. If the score of
/// `y` does not increase, its twin in the second copy ties or beats it
/// afterwards, so the record shows a rank violation.
pub fn two_copies_check(
    spec: &CoefficientSpec,
    g: &Graph,
    x: usize,
    y: usize,
) -> Result<ArcAdditionRecord> {
    empirical_arc_addition(spec, &disjoint_union(g, g), x, y)
}

/// Each ordered pair of distinct nodes is an arc with probability `density`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> Graph {
    let arcs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v)
        .filter(|_| rng.gen_bool(density))
        .collect();
    Graph::from_arcs(n, arcs).expect("in range")
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TrialSummary {
    pub trials: usize,
    pub score_increased: usize,
    pub rank_ok: usize,
}

impl TrialSummary {
    pub fn all_increased(&self) -> bool {
        self.score_increased == self.trials
    }

    pub fn all_rank_ok(&self) -> bool {
        self.rank_ok == self.trials
    }
}

/// Add one random absent arc to each of `trials` random graphs with
/// `2 ≤ n ≤ max_n` nodes. Deterministic in `seed`.
pub fn arc_addition_trials(
    spec: &CoefficientSpec,
    trials: usize,
    max_n: usize,
    seed: u64,
) -> Result<TrialSummary> {
    if max_n < 2 {
        return Err(Error::Parameter(format!("need max_n >= 2, got {max_n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut summary = TrialSummary::default();
    while summary.trials < trials {
        let n = rng.gen_range(2..=max_n);
        let density = rng.gen_range(0.02..0.5);
        let g = random_graph(&mut rng, n, density);
        let absent: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| u != v && !g.has_arc(u, v))
            .collect();
        if absent.is_empty() {
            continue;
        }
        let (x, y) = absent[rng.gen_range(0..absent.len())];
        let record = empirical_arc_addition(spec, &g, x, y)?;
        summary.trials += 1;
        summary.score_increased += usize::from(record.score_increased());
        summary.rank_ok += usize::from(record.rank_ok);
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::score_counterexample;
    use crate::exact::rational::{int, ratio};

    #[test]
    fn harmonic_density_on_bridged_graphs() {
        let rows = empirical_size_density(&CoefficientSpec::Harmonic, 20, 20).unwrap();
        assert!(rows.iter().all(SizeDensityRow::closed_form_matches));
        assert!(rows
            .iter()
            .filter(|r| r.graph == ScoreGraph::Sxy && r.k == r.p)
            .all(SizeDensityRow::x_wins));
    }

    #[test]
    fn exp_decay_x_wins_for_growing_p() {
        let spec = CoefficientSpec::ExpDecay(ratio(1, 2));
        let rows = empirical_size_density(&spec, 5, 20).unwrap();
        // x = 4·(1/2) = 2 while y stays below 1 for every p
        assert!(rows
            .iter()
            .filter(|r| r.graph == ScoreGraph::S && r.k == 5)
            .all(SizeDensityRow::x_wins));
    }

    #[test]
    fn closed_form_small_case() {
        let rows = empirical_size_density(&CoefficientSpec::Harmonic, 3, 3).unwrap();
        let sxy = rows.iter().find(|r| r.graph == ScoreGraph::Sxy).unwrap();
        // x: 3·1 + 1/2 + 1/3; y: 2·1 + 2·(1/2) + 1/2
        assert_eq!(sxy.score_x, int(3) + ratio(1, 2) + ratio(1, 3));
        assert_eq!(sxy.score_y, ratio(7, 2));
    }

    #[test]
    fn case_a_counterexample_does_not_increase() {
        let spec = CoefficientSpec::Explicit(vec![int(0), int(-1)]);
        let ce = score_counterexample(&spec).unwrap();
        let r = empirical_arc_addition(&spec, &ce.graph, ce.x, ce.y).unwrap();
        assert_eq!((r.score_before, r.score_after), (int(0), int(-1)));
    }

    #[test]
    fn case_b_after_score() {
        let spec = CoefficientSpec::Explicit(vec![int(0), int(1), int(-1)]);
        let ce = score_counterexample(&spec).unwrap();
        let r = empirical_arc_addition(&spec, &ce.graph, ce.x, ce.y).unwrap();
        assert_eq!(r.score_after, int(-1));
        assert!(!r.score_increased());
    }

    #[test]
    fn present_arc_is_rejected() {
        let g = Graph::from_arcs(2, [(0, 1)]).unwrap();
        let e = empirical_arc_addition(&CoefficientSpec::Harmonic, &g, 0, 1);
        assert!(matches!(e, Err(Error::Precondition(_))));
        assert!(empirical_arc_addition(&CoefficientSpec::Harmonic, &g, 1, 1).is_err());
    }

    #[test]
    fn two_copies_expose_flat_start() {
        let spec = CoefficientSpec::Explicit(vec![int(0), int(1), int(1)]);
        let ce = score_counterexample(&spec).unwrap();
        let r = two_copies_check(&spec, &ce.graph, ce.x, ce.y).unwrap();
        assert!(!r.score_increased());
        assert!(!r.rank_ok);
    }

    #[test]
    fn trials_are_seeded() {
        let s = CoefficientSpec::Harmonic;
        let a = arc_addition_trials(&s, 20, 8, 7).unwrap();
        assert_eq!(a, arc_addition_trials(&s, 20, 8, 7).unwrap());
        assert!(a.all_increased());
    }
}
