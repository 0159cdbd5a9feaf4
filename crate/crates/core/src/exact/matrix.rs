//! Dense rational matrices, exact rank and exact linear solves.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::{common_denominator, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Build from row vectors. All rows must share one length; `cols` is
    /// needed to give a shape to a matrix with no rows.
    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(Error::Dimension {
                    expected: cols,
                    got: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Self {
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn from_integer_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let converted = rows
            .iter()
            .map(|r| {
                r.as_ref()
                    .iter()
                    .map(|&v| Rational::from_integer(BigInt::from(v)))
                    .collect()
            })
            .collect();
        Self::from_rows(converted, cols).expect("ragged integer rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::Dimension {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok(self
            .row_iter()
            .map(|row| dot(row, v))
            .collect())
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let lhs = self.get(r, k);
                if lhs.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let cur = out.get(r, c) + lhs * other.get(k, c);
                    out.set(r, c, cur);
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.row_iter() {
            let line: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{}", line.join("\t"))?;
        }
        Ok(())
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, _)| !x.is_zero())
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Exact rank by fraction-free (Bareiss) elimination. Each row is first
/// scaled to integers, which does not change the rank.
#[allow(clippy::needless_range_loop)]
pub fn rank(m: &RationalMatrix) -> usize {
    let mut work: Vec<Vec<BigInt>> = m
        .row_iter()
        .map(|row| {
            let den = common_denominator(row.iter());
            row.iter().map(|v| (v * &den).to_integer()).collect()
        })
        .collect();
    let (rows, cols) = (m.rows(), m.cols());
    let mut prev = BigInt::one();
    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        let Some(p) = (pivot_row..rows).find(|&r| !work[r][col].is_zero()) else {
            continue;
        };
        work.swap(pivot_row, p);
        let pivot = work[pivot_row][col].clone();
        for r in pivot_row + 1..rows {
            let factor = work[r][col].clone();
            for c in col + 1..cols {
                let v = (&pivot * &work[r][c] - &factor * &work[pivot_row][c]) / &prev;
                work[r][c] = v;
            }
            work[r][col] = BigInt::zero();
        }
        prev = pivot;
        pivot_row += 1;
    }
    pivot_row
}

/// Solve `m · x = v` exactly. Returns `None` when the system is
/// inconsistent; free variables of an underdetermined system are set to 0.
#[allow(clippy::needless_range_loop)] // two rows of the same matrix are read per step
pub fn solve_linear(m: &RationalMatrix, v: &[Rational]) -> Result<Option<Vec<Rational>>> {
    if v.len() != m.rows() {
        return Err(Error::Dimension {
            expected: m.rows(),
            got: v.len(),
        });
    }
    let (rows, cols) = (m.rows(), m.cols());
    let mut aug: Vec<Vec<Rational>> = m
        .row_iter()
        .zip(v)
        .map(|(row, rhs)| {
            let mut r = row.to_vec();
            r.push(rhs.clone());
            r
        })
        .collect();

    let mut pivots = Vec::new();
    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        let Some(p) = (pivot_row..rows).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(pivot_row, p);
        let inv = aug[pivot_row][col].recip();
        for c in col..=cols {
            aug[pivot_row][c] = &aug[pivot_row][c] * &inv;
        }
        for r in 0..rows {
            if r == pivot_row || aug[r][col].is_zero() {
                continue;
            }
            let factor = aug[r][col].clone();
            for c in col..=cols {
                let sub = &factor * &aug[pivot_row][c];
                aug[r][c] -= sub;
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }

    if aug[pivot_row..].iter().any(|r| !r[cols].is_zero()) {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][cols].clone();
    }
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, ratio};

    #[test]
    fn rank_basics() {
        assert_eq!(rank(&RationalMatrix::zeros(3, 3)), 0);
        assert_eq!(rank(&RationalMatrix::identity(4)), 4);
        let rigid3 = RationalMatrix::from_integer_rows(&[[1, 2, 0], [1, 1, 1], [1, 1, 1]]);
        assert_eq!(rank(&rigid3), 2);
        let wide = RationalMatrix::from_integer_rows(&[[0, 1, 2, 3], [0, 2, 4, 6]]);
        assert_eq!(rank(&wide), 1);
        assert_eq!(rank(&RationalMatrix::zeros(0, 3)), 0);
    }

    #[test]
    fn rank_with_fractions() {
        let m = RationalMatrix::from_rows(
            vec![vec![ratio(1, 2), ratio(1, 3)], vec![ratio(3, 2), int(1)]],
            2,
        )
        .unwrap();
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn solve_identity() {
        let v = vec![int(3), ratio(-1, 2), int(7)];
        let x = solve_linear(&RationalMatrix::identity(3), &v).unwrap().unwrap();
        assert_eq!(x, v);
    }

    #[test]
    fn solve_inconsistent() {
        let rigid3 = RationalMatrix::from_integer_rows(&[[1, 2, 0], [1, 1, 1], [1, 1, 1]]);
        let v = vec![int(0), int(1), int(2)];
        assert_eq!(solve_linear(&rigid3, &v).unwrap(), None);
    }

    #[test]
    fn solve_lower_triangular() {
        let c = RationalMatrix::from_integer_rows(&[
            [1, 0, 0, 0],
            [1, 3, 0, 0],
            [1, 1, 2, 0],
            [1, 1, 1, 1],
        ]);
        let v = vec![int(1), int(2), int(3), int(4)];
        let a = solve_linear(&c, &v).unwrap().unwrap();
        // forward substitution by hand: a0 = 1, a1 = 1/3, a2 = 5/6, a3 = 11/6
        assert_eq!(a, vec![int(1), ratio(1, 3), ratio(5, 6), ratio(11, 6)]);
        assert_eq!(c.mul_vec(&a).unwrap(), v);
    }

    #[test]
    fn dimension_errors() {
        let m = RationalMatrix::identity(2);
        assert!(m.mul_vec(&[int(1)]).is_err());
        assert!(solve_linear(&m, &[int(1)]).is_err());
        assert!(RationalMatrix::from_rows(vec![vec![int(1)], vec![]], 1).is_err());
    }
}
