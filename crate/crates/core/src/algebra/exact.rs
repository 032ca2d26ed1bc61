use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{domain, Result};

/// Dense matrix over the rationals; entries are kept reduced by `BigRational`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return domain(format!("matrix dimensions must be positive, got {rows}x{cols}"));
        }
        Ok(ExactMatrix {
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Result<Self> {
        let mut m = ExactMatrix::zeros(rows, cols)?;
        for r in 0..rows {
            for c in 0..cols {
                m.entries[r * cols + c] = f(r, c);
            }
        }
        Ok(m)
    }

    pub fn from_integers(rows: usize, cols: usize, values: &[i64]) -> Result<Self> {
        if values.len() != rows * cols {
            return domain(format!("expected {} values, got {}", rows * cols, values.len()));
        }
        ExactMatrix::from_fn(rows, cols, |r, c| BigRational::from_integer(values[r * cols + c].into()))
    }

    pub fn identity(n: usize) -> Result<Self> {
        ExactMatrix::from_fn(n, n, |r, c| {
            if r == c {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigRational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut t = ExactMatrix::zeros(self.cols, self.rows).expect("positive dims");
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.entries[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    /// Rows scaled by the lcm of their denominators; rank is unchanged.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| {
                let row = &self.entries[r * self.cols..(r + 1) * self.cols];
                let lcm = row
                    .iter()
                    .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
                row.iter()
                    .map(|q| q.numer() * (&lcm / q.denom()))
                    .collect()
            })
            .collect()
    }
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
pub fn rank_exact(m: &ExactMatrix) -> usize {
    let mut a = m.integer_rows();
    let (rows, cols) = (m.rows, m.cols);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pivot = &pivot_row[c];
        for row in tail.iter_mut() {
            let factor = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let mut x = pivot * &row[j];
                if !factor.is_zero() && !pivot_row[j].is_zero() {
                    x -= &factor * &pivot_row[j];
                }
                if !prev.is_one() {
                    debug_assert!((&x % &prev).is_zero());
                    x /= &prev;
                }
                row[j] = x;
            }
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(rows: usize, cols: usize, v: &[i64]) -> ExactMatrix {
        ExactMatrix::from_integers(rows, cols, v).unwrap()
    }

    #[test]
    fn identity_and_ones() {
        assert_eq!(rank_exact(&ExactMatrix::identity(5).unwrap()), 5);
        assert_eq!(rank_exact(&int(4, 6, &[1; 24])), 1);
    }

    #[test]
    fn rank_deficient_with_skipped_columns() {
        // second column is zero, third is a multiple of the first
        let m = int(3, 4, &[1, 0, 2, 1, 2, 0, 4, 3, 3, 0, 6, 4]);
        assert_eq!(rank_exact(&m), 2);
        let m = int(3, 3, &[0, 0, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(rank_exact(&m), 0);
    }

    #[test]
    fn rational_entries() {
        let half = BigRational::new(1.into(), 2.into());
        let third = BigRational::new(1.into(), 3.into());
        let m = ExactMatrix::from_fn(2, 2, |r, c| match (r, c) {
            (0, 0) => half.clone(),
            (0, 1) => third.clone(),
            (1, 0) => BigRational::from_integer(3.into()),
            _ => BigRational::from_integer(2.into()),
        })
        .unwrap();
        assert_eq!(rank_exact(&m), 1);
    }

    #[test]
    fn zero_dimensions_rejected() {
        assert!(ExactMatrix::zeros(0, 3).is_err());
    }
}
