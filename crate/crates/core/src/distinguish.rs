//! Proportionality of coefficient vectors, and graphs on which two
//! non-proportional vectors rank a pair of nodes differently.
//!
//! Index 0 is ignored everywhere: it adds the same constant to every score.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::centrality::{evaluate, CoefficientSpec};
use crate::error::{Error, Result};
use crate::exact::rational::common_denominator;
use crate::exact::Rational;
use crate::graph::generators::{distinguisher, path, DistinguisherKind, Leaves};
use crate::graph::Graph;

fn at(a: &[Rational], i: usize) -> Rational {
    a.get(i).cloned().unwrap_or_else(Rational::zero)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairClassification {
    /// `b_i = λ·a_i` for every `i > 0`, `λ > 0`.
    Proportional { lambda: Rational },
    /// Smallest `k` where exactly one of `a_k`, `b_k` is zero.
    CaseA { k: usize },
    /// Zeros aligned, first common nonzero `h` has `b_h = λ·a_h`, `λ < 0`.
    CaseB { h: usize, lambda: Rational },
    /// Zeros aligned, `b_i = λ·a_i` for `0 < i < k`, `b_k ≠ λ·a_k`, `λ > 0`.
    CaseC {
        h: usize,
        k: usize,
        lambda: Rational,
        inequality_holds: bool,
    },
}

impl fmt::Display for PairClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairClassification::Proportional { lambda } => write!(f, "proportional lambda={lambda}"),
            PairClassification::CaseA { k } => write!(f, "case-a k={k}"),
            PairClassification::CaseB { h, lambda } => write!(f, "case-b h={h} lambda={lambda}"),
            PairClassification::CaseC {
                h,
                k,
                lambda,
                inequality_holds,
            } => write!(
                f,
                "case-c h={h} k={k} lambda={lambda} inequality={}",
                if *inequality_holds { "holds" } else { "fails" }
            ),
        }
    }
}

pub fn classify(a: &[Rational], b: &[Rational]) -> PairClassification {
    let len = a.len().max(b.len());
    if let Some(k) = (1..len).find(|&i| {
        let (x, y) = (at(a, i), at(b, i));
        (x.is_zero() || y.is_zero()) && x != y
    }) {
        return PairClassification::CaseA { k };
    }
    let Some(h) = (1..len).find(|&i| !at(a, i).is_zero()) else {
        return PairClassification::Proportional {
            lambda: Rational::from_integer(1.into()),
        };
    };
    let lambda = at(b, h) / at(a, h);
    if lambda.is_negative() {
        return PairClassification::CaseB { h, lambda };
    }
    match (h + 1..len).find(|&i| at(b, i) != &lambda * at(a, i)) {
        None => PairClassification::Proportional { lambda },
        Some(k) => PairClassification::CaseC {
            h,
            k,
            inequality_holds: h + 1 < k && at(a, h + 1) != at(a, k - 1),
            lambda,
        },
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseCCheck {
    /// `a_h, a_k, b_h, b_k` all nonzero.
    pub nonzero_ok: bool,
    /// `b_h·a_k ≠ b_k·a_h`.
    pub cross_ok: bool,
    /// `a_{h+1} ≠ a_{k−1}` and `h + 1 < k`.
    pub inequality_holds: bool,
    /// `(a_h − a_k)(b_{h+1} − b_{k−1}) ≠ (a_{h+1} − a_{k−1})(b_h − b_k)`,
    /// evaluated directly.
    pub inequality_direct: bool,
}

/// Side conditions of a case-c pair. Errors unless `(a, b)` classifies as
/// case c with exactly these `h` and `k`.
pub fn case_c_check(a: &[Rational], b: &[Rational], h: usize, k: usize) -> Result<CaseCCheck> {
    match classify(a, b) {
        PairClassification::CaseC { h: ch, k: ck, .. } if ch == h && ck == k => {}
        other => {
            return Err(Error::Precondition(format!(
                "pair is {other}, not case-c with h={h}, k={k}"
            )))
        }
    }
    let (ah, ak, bh, bk) = (at(a, h), at(a, k), at(b, h), at(b, k));
    let nonzero_ok = [&ah, &ak, &bh, &bk].iter().all(|v| !v.is_zero());
    let cross_ok = &bh * &ak != &bk * &ah;
    let inequality_holds = h + 1 < k && at(a, h + 1) != at(a, k - 1);
    let lhs = (&ah - &ak) * (at(b, h + 1) - at(b, k - 1));
    let rhs = (at(a, h + 1) - at(a, k - 1)) * (&bh - &bk);
    Ok(CaseCCheck {
        nonzero_ok,
        cross_ok,
        inequality_holds,
        inequality_direct: lhs != rhs,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlanKind {
    Connected,
    Disjoint,
    TwoPaths,
    SinglePath,
}

impl fmt::Display for PlanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PlanKind::Connected => "connected",
            PlanKind::Disjoint => "disjoint",
            PlanKind::TwoPaths => "two-paths",
            PlanKind::SinglePath => "single-path",
        })
    }
}

/// How a distinguisher was built. Unused parameters are 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinguisherPlan {
    pub kind: PlanKind,
    pub h: usize,
    pub k: usize,
    pub leaves: Leaves,
    pub x: usize,
    pub y: usize,
    /// The pattern holds with `a` and `b` exchanged: `b(x) ≥ b(y)`,
    /// `a(x) < a(y)`.
    pub swap: bool,
}

impl fmt::Display for DistinguisherPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = &self.leaves;
        write!(
            f,
            "kind={} h={} k={} s={} p={} q={} t={} x={} y={} swap={}",
            self.kind, self.h, self.k, l.s, l.p, l.q, l.t, self.x, self.y, self.swap
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distinguisher {
    pub classification: PairClassification,
    pub graph: Graph,
    pub plan: DistinguisherPlan,
    /// `(score(x), score(y))` under `a`, then under `b`.
    pub scores_a: (Rational, Rational),
    pub scores_b: (Rational, Rational),
}

impl Distinguisher {
    /// Disagreement shows as a tie under one vector and a strict order
    /// under the other.
    pub fn via_tie(&self) -> bool {
        self.scores_a.0 == self.scores_a.1 || self.scores_b.0 == self.scores_b.1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    Proportional { lambda: Rational },
    Distinguisher(Box<Distinguisher>),
}

fn scores(g: &Graph, a: &[Rational], x: usize, y: usize) -> (Rational, Rational) {
    let v = evaluate(g, &CoefficientSpec::Explicit(a.to_vec())).expect("explicit specs evaluate");
    (v.get(x).clone(), v.get(y).clone())
}

/// `a(x) ≥ a(y)` and `b(x) < b(y)`, exactly.
pub fn verify_disagreement(g: &Graph, x: usize, y: usize, a: &[Rational], b: &[Rational]) -> bool {
    let (ax, ay) = scores(g, a, x, y);
    let (bx, by) = scores(g, b, x, y);
    ax >= ay && bx < by
}

/// Primitive integer `(X, Y)` with `m·(X, Y) = (0, −L)` for some `L > 0`.
fn solve_system(m: [[Rational; 2]; 2]) -> (BigInt, BigInt) {
    let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
    assert!(!det.is_zero(), "distinguisher system is singular");
    let x = &m[0][1] / &det;
    let y = -(&m[0][0] / &det);
    let l = Rational::from_integer(common_denominator([&x, &y]));
    let (xi, yi) = ((x * &l).to_integer(), (y * &l).to_integer());
    // any positive multiple solves the system too; keep the smallest
    let g = xi.gcd(&yi);
    (xi / &g, yi / &g)
}

fn split(v: &BigInt) -> (usize, usize) {
    let mag: usize = v.abs().try_into().expect("leaf count fits in memory");
    if v.is_negative() {
        (0, mag)
    } else {
        (mag, 0)
    }
}

/// A graph and nodes `x`, `y` with `a(x) ≥ a(y)` and `b(x) < b(y)` (roles
/// exchanged when `plan.swap`), or `λ` when `b = λ·a` on every index `> 0`.
pub fn construct(a: &[Rational], b: &[Rational]) -> Construction {
    let classification = classify(a, b);
    let (graph, plan) = match &classification {
        PairClassification::Proportional { lambda } => {
            return Construction::Proportional {
                lambda: lambda.clone(),
            }
        }
        PairClassification::CaseA { k } => {
            // paths of length k−1 and k; their far ends differ only at distance k
            let k = *k;
            let swap = at(b, k).is_zero();
            let nonzero = if swap { at(a, k) } else { at(b, k) };
            let short = path(k - 1);
            let long = path(k);
            let g = crate::graph::disjoint_union(&short, &long);
            let (short_end, long_end) = (0, k);
            let (x, y) = if nonzero.is_positive() {
                (short_end, long_end)
            } else {
                (long_end, short_end)
            };
            (
                g,
                DistinguisherPlan {
                    kind: PlanKind::TwoPaths,
                    h: 0,
                    k,
                    leaves: Leaves::default(),
                    x,
                    y,
                    swap,
                },
            )
        }
        PairClassification::CaseB { h, .. } => {
            // end node sees a_h once; its neighbour sees only zero coefficients.
            // For h = 1 the neighbour is the other end, so an isolated node
            // plays that role.
            let h = *h;
            let (g, end, other) = if h == 1 {
                (Graph::undirected(3, [(0, 1)]).expect("in range"), 0, 2)
            } else {
                (path(h), 0, 1)
            };
            let (x, y) = if at(a, h).is_positive() {
                (end, other)
            } else {
                (other, end)
            };
            (
                g,
                DistinguisherPlan {
                    kind: PlanKind::SinglePath,
                    h,
                    k: 0,
                    leaves: Leaves::default(),
                    x,
                    y,
                    swap: false,
                },
            )
        }
        PairClassification::CaseC {
            h,
            k,
            inequality_holds,
            ..
        } => {
            let (h, k) = (*h, *k);
            let (kind, m) = if *inequality_holds {
                (
                    DistinguisherKind::Connected,
                    [
                        [at(a, h) - at(a, k), at(a, h + 1) - at(a, k - 1)],
                        [at(b, h) - at(b, k), at(b, h + 1) - at(b, k - 1)],
                    ],
                )
            } else {
                (
                    DistinguisherKind::Disjoint,
                    [[at(a, h), at(a, k)], [at(b, h), at(b, k)]],
                )
            };
            let (xs, ys) = solve_system(m);
            let (s, t) = split(&xs);
            let (p, q) = split(&ys);
            let leaves = Leaves { s, p, q, t };
            let (g, x, y) = distinguisher(kind, h, k, leaves).expect("case-c indices are valid");
            (
                g,
                DistinguisherPlan {
                    kind: match kind {
                        DistinguisherKind::Connected => PlanKind::Connected,
                        DistinguisherKind::Disjoint => PlanKind::Disjoint,
                    },
                    h,
                    k,
                    leaves,
                    x,
                    y,
                    swap: false,
                },
            )
        }
    };
    let (x, y) = (plan.x, plan.y);
    let verified = if plan.swap {
        verify_disagreement(&graph, x, y, b, a)
    } else {
        verify_disagreement(&graph, x, y, a, b)
    };
    assert!(verified, "distinguisher failed verification: {classification}, {plan}");
    let scores_a = scores(&graph, a, x, y);
    let scores_b = scores(&graph, b, x, y);
    Construction::Distinguisher(Box::new(Distinguisher {
        classification,
        graph,
        plan,
        scores_a,
        scores_b,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, ratio};

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn harmonic4() -> Vec<Rational> {
        vec![int(0), int(1), ratio(1, 2), ratio(1, 3)]
    }

    fn exp4() -> Vec<Rational> {
        vec![int(0), ratio(1, 2), ratio(1, 4), ratio(1, 8)]
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify(&v(&[0, 1, 2]), &v(&[0, 1, 0])), PairClassification::CaseA { k: 2 });
        assert_eq!(
            classify(&v(&[0, 0, 2, 3]), &v(&[0, 0, -4, -6])),
            PairClassification::CaseB {
                h: 2,
                lambda: int(-2)
            }
        );
        assert_eq!(
            classify(&v(&[0, 1, 2, 3]), &v(&[0, 2, 4, 9])),
            PairClassification::CaseC {
                h: 1,
                k: 3,
                lambda: int(2),
                inequality_holds: false
            }
        );
        assert_eq!(
            classify(&v(&[0, 1]), &v(&[0, 2])),
            PairClassification::Proportional { lambda: int(2) }
        );
        assert_eq!(
            classify(&v(&[0]), &v(&[])),
            PairClassification::Proportional { lambda: int(1) }
        );
        // index 0 is ignored
        assert_eq!(
            classify(&v(&[5, 1]), &v(&[-3, 3])),
            PairClassification::Proportional { lambda: int(3) }
        );
    }

    #[test]
    fn harmonic_vs_exp_uses_disjoint_family() {
        let c = classify(&harmonic4(), &exp4());
        assert_eq!(
            c,
            PairClassification::CaseC {
                h: 1,
                k: 3,
                lambda: ratio(1, 2),
                inequality_holds: false
            }
        );
        let Construction::Distinguisher(d) = construct(&harmonic4(), &exp4()) else {
            panic!("not proportional");
        };
        assert_eq!(d.plan.kind, PlanKind::Disjoint);
        // half of the (0, 6, 0, 2) instance, which also works
        assert_eq!(d.plan.leaves, Leaves { s: 0, p: 3, q: 0, t: 1 });
        assert_eq!(d.scores_a, (ratio(5, 2), ratio(5, 2)));
        assert_eq!(d.scores_b, (ratio(9, 8), ratio(5, 4)));
    }

    #[test]
    fn case_c_examples() {
        let r = case_c_check(&v(&[0, 1, 2, 3]), &v(&[0, 2, 4, 9]), 1, 3).unwrap();
        assert!(r.nonzero_ok && r.cross_ok);
        assert!(!r.inequality_holds && !r.inequality_direct);
        let r = case_c_check(&v(&[0, 1, 2, 5, 7]), &v(&[0, 2, 4, 10, 13]), 1, 4).unwrap();
        assert!(r.inequality_holds && r.inequality_direct);
        assert!(case_c_check(&v(&[0, 1]), &v(&[0, 2]), 1, 2).is_err());
    }

    #[test]
    fn worked_instance() {
        let leaves = Leaves { s: 0, p: 6, q: 0, t: 2 };
        let (g, x, y) = distinguisher(DistinguisherKind::Disjoint, 1, 3, leaves).unwrap();
        assert_eq!(scores(&g, &harmonic4(), x, y), (ratio(7, 2), ratio(7, 2)));
        assert_eq!(scores(&g, &exp4(), x, y), (ratio(3, 2), ratio(7, 4)));
        assert!(verify_disagreement(&g, x, y, &harmonic4(), &exp4()));
        assert!(!verify_disagreement(&g, x, y, &harmonic4(), &harmonic4()));
    }

    #[test]
    fn case_b_path() {
        let (a, b) = (v(&[0, 0, 2, 3]), v(&[0, 0, -4, -6]));
        let Construction::Distinguisher(d) = construct(&a, &b) else {
            panic!()
        };
        assert_eq!(d.plan.kind, PlanKind::SinglePath);
        assert!(verify_disagreement(&d.graph, d.plan.x, d.plan.y, &a, &b));
        // h = 1 needs the extra isolated node
        let Construction::Distinguisher(d) = construct(&v(&[0, -1]), &v(&[0, 3])) else {
            panic!()
        };
        assert_eq!(d.scores_a, (int(0), int(-1)));
    }

    #[test]
    fn case_a_both_orientations() {
        for (a, b) in [
            (v(&[0, 1, 2]), v(&[0, 1, 0])),
            (v(&[0, 1, 0]), v(&[0, 1, 2])),
            (v(&[0, 1, 0]), v(&[0, 1, -2])),
            (v(&[0, 1, -2]), v(&[0, 1, 0])),
        ] {
            let Construction::Distinguisher(d) = construct(&a, &b) else {
                panic!()
            };
            assert!(d.via_tie());
            assert_eq!(d.plan.swap, at(&b, 2).is_zero());
        }
    }

    #[test]
    fn connected_family_when_inequality_holds() {
        let (a, b) = (v(&[0, 1, 2, 5, 7]), v(&[0, 2, 4, 10, 13]));
        let Construction::Distinguisher(d) = construct(&a, &b) else {
            panic!()
        };
        assert_eq!(d.plan.kind, PlanKind::Connected);
        assert!(d.graph.is_weakly_connected());
    }
}
