use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Rational;

/// Dense rational matrix in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ArityMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(RationalMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from rows of equal length; `cols` is needed when
    /// `rows` is empty.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for r in rows {
            if r.len() != cols {
                return Err(Error::ArityMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            entries.extend(r);
        }
        Self::new(nrows, cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::ArityMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    pub fn rank(&self) -> usize {
        Echelon::reduce(self.integer_rows(None), self.cols).pivots.len()
    }

    /// A basis of `{v : Mv = 0}`, one vector per free column, each scaled to
    /// a primitive integer vector. Empty iff the columns are independent.
    pub fn nullspace_basis(&self) -> Vec<Vec<Rational>> {
        let ech = Echelon::reduce(self.integer_rows(None), self.cols);
        let pivot_cols: Vec<usize> = ech.pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivot_cols.contains(c)) {
            // Row r reads  piv_r * v[c_r] + row_r[free] * v[free] = 0.
            let scale = ech
                .pivots
                .iter()
                .fold(BigInt::one(), |acc, &(r, c)| acc.lcm(&ech.rows[r][c]));
            let mut v = vec![BigInt::zero(); self.cols];
            v[free] = scale.clone();
            for &(r, c) in &ech.pivots {
                let coef = &ech.rows[r][free];
                if !coef.is_zero() {
                    v[c] = -(coef * &scale) / &ech.rows[r][c];
                }
            }
            basis.push(primitive(v).into_iter().map(Rational::from_integer).collect());
        }
        basis
    }

    /// Some solution of `Mv = b`, or `None` when the system is inconsistent.
    /// Free variables are set to zero.
    pub fn solve_exact(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if b.len() != self.rows {
            return Err(Error::ArityMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        let ech = Echelon::reduce(self.integer_rows(Some(b)), self.cols);
        for row in &ech.rows {
            if row[..self.cols].iter().all(|e| e.is_zero()) && !row[self.cols].is_zero() {
                return Ok(None);
            }
        }
        let mut v = vec![Rational::zero(); self.cols];
        for &(r, c) in &ech.pivots {
            v[c] = Rational::new(ech.rows[r][self.cols].clone(), ech.rows[r][c].clone());
        }
        Ok(Some(v))
    }

    /// Each row (optionally augmented by `rhs`) scaled by the lcm of its
    /// denominators.
    fn integer_rows(&self, rhs: Option<&[Rational]>) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| {
                let mut row: Vec<Rational> = self.row(r).to_vec();
                if let Some(b) = rhs {
                    row.push(b[r].clone());
                }
                let l = row
                    .iter()
                    .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
                row.into_iter()
                    .map(|e| (e * Rational::from_integer(l.clone())).to_integer())
                    .collect()
            })
            .collect()
    }
}

/// Divides an integer vector by the gcd of its entries.
fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, e| acc.gcd(e));
    if !g.is_zero() && !g.is_one() {
        for e in &mut v {
            *e = &*e / &g;
        }
    }
    v
}

/// Fraction-free Gauss–Jordan form over the integers. Pivot columns are
/// zero outside their pivot row; every row is kept primitive.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    /// `(row, column)` of each pivot, in column order.
    pivots: Vec<(usize, usize)>,
}

impl Echelon {
    /// Pivots are searched in the first `pivot_cols` columns only, first
    /// admissible row wins.
    fn reduce(mut rows: Vec<Vec<BigInt>>, pivot_cols: usize) -> Self {
        let mut pivots = Vec::new();
        let mut next = 0;
        for c in 0..pivot_cols {
            let Some(p) = (next..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
                continue;
            };
            rows.swap(next, p);
            if rows[next][c].is_negative() {
                for e in &mut rows[next] {
                    *e = -&*e;
                }
            }
            let pivot_row = rows[next].clone();
            let pv = pivot_row[c].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == next || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (e, pe) in row.iter_mut().zip(&pivot_row) {
                    *e = &*e * &pv - &f * pe;
                }
                *row = primitive(std::mem::take(row));
            }
            pivots.push((next, c));
            next += 1;
            if next == rows.len() {
                break;
            }
        }
        Echelon { rows, pivots }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{frac, int};

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        RationalMatrix::from_rows(
            cols,
            rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect(),
        )
        .unwrap()
    }

    fn is_zero_vec(v: &[Rational]) -> bool {
        v.iter().all(|e| e.is_zero())
    }

    #[test]
    fn nullspace_examples() {
        assert!(RationalMatrix::identity(2).nullspace_basis().is_empty());
        let b = m(&[&[1, 1]]).nullspace_basis();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0][0], -b[0][1].clone());
        assert_eq!(RationalMatrix::zeros(2, 3).nullspace_basis().len(), 3);
    }

    #[test]
    fn nullspace_vectors_vanish_and_are_independent() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, -1, 2]]);
        let basis = a.nullspace_basis();
        assert_eq!(basis.len(), 4 - a.rank());
        for v in &basis {
            assert!(is_zero_vec(&a.mul_vec(v).unwrap()));
        }
        let stacked = RationalMatrix::from_rows(4, basis.clone()).unwrap();
        assert_eq!(stacked.rank(), basis.len());
    }

    #[test]
    fn solve_examples() {
        let id = RationalMatrix::identity(1);
        assert_eq!(id.solve_exact(&[frac(2, 3)]).unwrap(), Some(vec![frac(2, 3)]));
        let row = m(&[&[1, 1]]);
        let v = row.solve_exact(&[int(1)]).unwrap().unwrap();
        assert_eq!(&v[0] + &v[1], int(1));
        let col = m(&[&[1], &[1]]);
        assert_eq!(col.solve_exact(&[int(0), int(1)]).unwrap(), None);
        assert!(col.solve_exact(&[int(0)]).is_err());
    }

    #[test]
    fn solve_with_fractions_resubstitutes() {
        let a = RationalMatrix::from_rows(
            3,
            vec![
                vec![frac(1, 2), frac(1, 3), int(0)],
                vec![int(0), frac(-2, 5), int(7)],
            ],
        )
        .unwrap();
        let b = vec![frac(5, 6), int(3)];
        let v = a.solve_exact(&b).unwrap().unwrap();
        assert_eq!(a.mul_vec(&v).unwrap(), b);
    }

    #[test]
    fn bad_shape_rejected() {
        assert!(RationalMatrix::new(2, 2, vec![int(1)]).is_err());
    }
}
