//! Strict homogeneous feasibility `A·x < 0` with Farkas certificates.
//!
//! The decision is made by an exact simplex run on
//!
//! ```text
//!   maximize ε  subject to  A·x⁺ − A·x⁻ + ε·1 ≤ 0,  ε ≤ 1,  x⁺, x⁻, ε ≥ 0
//! ```
//!
//! using Bland's rule. Every right-hand side is non-negative, so the slack
//! basis is feasible from the start and no phase one is needed. The LP is
//! bounded by `ε ≤ 1`. If the optimum is positive, `x = x⁺ − x⁻` satisfies
//! `A·x ≤ −ε·1 < 0`. Otherwise the optimal dual multipliers `y` of the
//! first `m` rows satisfy `Aᵀy = 0`, `y ≥ 0` and `1ᵀy ≥ 1`.

use num_traits::{One, Signed, Zero};

use super::matrix::RationalMatrix;
use super::rational::{normalize_first_nonzero, primitive_integer_direction, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FeasibilityResult {
    /// `x` with `A·x < 0` in every row.
    Witness(Vec<Rational>),
    /// `y ≥ 0`, `y ≠ 0`, `Aᵀ·y = 0`.
    Certificate(Vec<Rational>),
}

impl FeasibilityResult {
    pub fn is_witness(&self) -> bool {
        matches!(self, FeasibilityResult::Witness(_))
    }

    pub fn vector(&self) -> &[Rational] {
        match self {
            FeasibilityResult::Witness(v) | FeasibilityResult::Certificate(v) => v,
        }
    }
}

/// Decide whether `A·x < 0` has a solution. The returned object has been
/// checked with [`verify_result`]; a failed check is a solver bug and
/// panics.
pub fn strict_feasibility(a: &RationalMatrix) -> FeasibilityResult {
    let result = Simplex::new(a).solve();
    assert!(
        verify_result(a, &result),
        "strict_feasibility produced an unverifiable answer for\n{a}"
    );
    result
}

/// Check a witness or certificate against its defining conditions exactly.
pub fn verify_result(a: &RationalMatrix, r: &FeasibilityResult) -> bool {
    match r {
        FeasibilityResult::Witness(x) => {
            x.len() == a.cols()
                && a.mul_vec(x)
                    .map(|ax| ax.iter().all(Signed::is_negative))
                    .unwrap_or(false)
        }
        FeasibilityResult::Certificate(y) => {
            y.len() == a.rows()
                && y.iter().all(|v| !v.is_negative())
                && y.iter().any(|v| !v.is_zero())
                && a.transpose()
                    .mul_vec(y)
                    .map(|aty| aty.iter().all(Zero::is_zero))
                    .unwrap_or(false)
        }
    }
}

struct Simplex {
    m: usize,
    n: usize,
    /// Constraint rows; the last entry of each row is the right-hand side.
    tableau: Vec<Vec<Rational>>,
    /// Reduced costs; the last entry is the current objective value.
    objective: Vec<Rational>,
    basis: Vec<usize>,
}

impl Simplex {
    // Column layout: x⁺ (n) | x⁻ (n) | ε | slacks (m + 1) | rhs
    fn new(a: &RationalMatrix) -> Self {
        let (m, n) = (a.rows(), a.cols());
        let eps = 2 * n;
        let width = 2 * n + 1 + m + 1 + 1;
        let mut tableau = Vec::with_capacity(m + 1);
        for r in 0..m {
            let mut row = vec![Rational::zero(); width];
            for c in 0..n {
                let v = a.get(r, c);
                row[c] = v.clone();
                row[n + c] = -v.clone();
            }
            row[eps] = Rational::one();
            row[eps + 1 + r] = Rational::one();
            tableau.push(row);
        }
        let mut cap = vec![Rational::zero(); width];
        cap[eps] = Rational::one();
        cap[eps + 1 + m] = Rational::one();
        cap[width - 1] = Rational::one();
        tableau.push(cap);

        let mut objective = vec![Rational::zero(); width];
        objective[eps] = -Rational::one();
        let basis = (0..=m).map(|r| eps + 1 + r).collect();
        Self {
            m,
            n,
            tableau,
            objective,
            basis,
        }
    }

    fn width(&self) -> usize {
        self.objective.len()
    }

    fn solve(mut self) -> FeasibilityResult {
        while let Some(enter) = self.entering() {
            let leave = self
                .leaving(enter)
                .expect("objective is bounded by the ε ≤ 1 row");
            self.pivot(leave, enter);
        }
        self.extract()
    }

    /// Bland: lowest-index column with a negative reduced cost.
    fn entering(&self) -> Option<usize> {
        (0..self.width() - 1).find(|&c| self.objective[c].is_negative())
    }

    /// Minimum ratio test, ties broken by lowest basic variable index.
    fn leaving(&self, enter: usize) -> Option<usize> {
        let rhs = self.width() - 1;
        let mut best: Option<(Rational, usize, usize)> = None;
        for (r, row) in self.tableau.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &row[rhs] / &row[enter];
            let better = match &best {
                None => true,
                Some((b, _, var)) => ratio < *b || (ratio == *b && self.basis[r] < *var),
            };
            if better {
                best = Some((ratio, r, self.basis[r]));
            }
        }
        best.map(|(_, r, _)| r)
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.tableau[row][col].recip();
        for v in self.tableau[row].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = self.tableau[row].clone();
        for (r, other) in self.tableau.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let factor = other[col].clone();
            for (v, p) in other.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
        }
        if !self.objective[col].is_zero() {
            let factor = self.objective[col].clone();
            for (v, p) in self.objective.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
        }
        self.basis[row] = col;
    }

    fn extract(self) -> FeasibilityResult {
        let rhs = self.width() - 1;
        let optimum = &self.objective[rhs];
        if optimum.is_positive() {
            let mut values = vec![Rational::zero(); 2 * self.n];
            for (r, &var) in self.basis.iter().enumerate() {
                if var < 2 * self.n {
                    values[var] = self.tableau[r][rhs].clone();
                }
            }
            let x: Vec<Rational> = (0..self.n)
                .map(|c| &values[c] - &values[self.n + c])
                .collect();
            FeasibilityResult::Witness(primitive_integer_direction(&x))
        } else {
            let slack0 = 2 * self.n + 1;
            let y: Vec<Rational> = (0..self.m)
                .map(|r| self.objective[slack0 + r].clone())
                .collect();
            FeasibilityResult::Certificate(normalize_first_nonzero(&y))
        }
    }
}
