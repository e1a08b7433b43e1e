use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{Monomial, Rational};
use crate::cube::{self, Assignment, Point};
use crate::error::{Error, Result};
use crate::limits::MAX_ARITY;

/// A multilinear polynomial `Σ_S c_S Π_{i∈S} X_i` with exact rational
/// coefficients. Zero coefficients are never stored, so structural equality
/// is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultilinearPoly {
    arity: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultilinearPoly {
    pub fn zero(arity: usize) -> Self {
        MultilinearPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: Rational) -> Self {
        let mut p = Self::zero(arity);
        p.add_term(0, c);
        p
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Rational::one())
    }

    /// The polynomial `X_{i+1}`.
    pub fn var(arity: usize, i: usize) -> Result<Self> {
        if i >= arity {
            return Err(Error::IndexOutOfRange { index: i, arity });
        }
        let mut p = Self::zero(arity);
        p.add_term(1 << i, Rational::one());
        Ok(p)
    }

    /// Builds a polynomial from `(mask, coefficient)` pairs; repeated masks add.
    pub fn from_terms<I>(arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, Rational)>,
    {
        if arity > MAX_ARITY {
            return Err(Error::InvalidArgument(format!("arity {arity} too large")));
        }
        let mut p = Self::zero(arity);
        for (mask, c) in terms {
            if arity < 32 && mask >> arity != 0 {
                return Err(Error::IndexOutOfRange {
                    index: 31 - mask.leading_zeros() as usize,
                    arity,
                });
            }
            p.add_term(mask, c);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, mask: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = Monomial(mask);
        let slot = self.terms.entry(key).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the monomial with the given mask.
    pub fn coefficient(&self, mask: u32) -> Rational {
        self.terms
            .get(&Monomial(mask))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms in graded order (by size, then mask value).
    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> + '_ {
        self.terms.iter().map(|(m, c)| (m.0, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Largest monomial size with a nonzero coefficient; `0` for constants,
    /// including the zero polynomial.
    pub fn degree(&self) -> usize {
        self.terms
            .keys()
            .next_back()
            .map(|m| m.size())
            .unwrap_or(0)
    }

    /// The maxonomials `{S : |S| = deg(p), c_S ≠ 0}` as masks, in graded order.
    pub fn maxonomials(&self) -> Result<Vec<u32>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let d = self.degree();
        Ok(self
            .terms
            .keys()
            .rev()
            .take_while(|m| m.size() == d)
            .map(|m| m.0)
            .collect::<Vec<_>>()
            .into_iter()
            .rev()
            .collect())
    }

    /// Unique multilinear interpolant of `values`, indexed by cube point.
    pub fn interpolate(arity: usize, values: &[Rational]) -> Result<Self> {
        if arity > MAX_ARITY {
            return Err(Error::InvalidArgument(format!("arity {arity} too large")));
        }
        if values.len() != cube::size(arity) {
            return Err(Error::ArityMismatch {
                expected: cube::size(arity),
                found: values.len(),
            });
        }
        // Möbius inversion over the subset lattice.
        let mut c = values.to_vec();
        for i in 0..arity {
            let b = 1usize << i;
            for mask in 0..c.len() {
                if mask & b != 0 {
                    let lower = c[mask ^ b].clone();
                    c[mask] -= lower;
                }
            }
        }
        Self::from_terms(arity, c.into_iter().enumerate().map(|(m, v)| (m as u32, v)))
    }

    /// Evaluates at a point given as a bit vector.
    pub fn evaluate(&self, x: &[bool]) -> Result<Rational> {
        if x.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: x.len(),
            });
        }
        Ok(self.eval(cube::from_bits(x)))
    }

    /// Evaluates at a point mask: the sum of `c_S` over `S ⊆ support(x)`.
    pub fn eval(&self, x: Point) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            if m.0 & !x == 0 {
                acc += c;
            }
        }
        acc
    }

    /// Values at every cube point, in index order.
    pub fn values(&self) -> Vec<Rational> {
        // Zeta transform: the inverse of the interpolation step.
        let mut v = vec![Rational::zero(); cube::size(self.arity)];
        for (m, c) in &self.terms {
            v[m.0 as usize] = c.clone();
        }
        for i in 0..self.arity {
            let b = 1usize << i;
            for mask in 0..v.len() {
                if mask & b != 0 {
                    let lower = v[mask ^ b].clone();
                    v[mask] += lower;
                }
            }
        }
        v
    }

    /// Substitutes the assigned variables and renumbers the rest in order.
    pub fn restrict(&self, a: &Assignment) -> Result<Self> {
        if self.arity < 32 && a.assigned >> self.arity != 0 {
            return Err(Error::IndexOutOfRange {
                index: 31 - a.assigned.leading_zeros() as usize,
                arity: self.arity,
            });
        }
        let zeros = a.assigned & !a.values;
        let mut out = Self::zero(self.arity - a.len());
        for (m, c) in &self.terms {
            if m.0 & zeros != 0 {
                continue;
            }
            out.add_term(cube::compress(m.0, a.assigned, self.arity), c.clone());
        }
        Ok(out)
    }

    /// The multilinear polynomial agreeing with `self · other` on the cube.
    pub fn multilinearize_product(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = Self::zero(self.arity);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.0 | b.0, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.0, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let mut out = Self::zero(self.arity);
        for (m, c) in &self.terms {
            out.add_term(m.0, c * k);
        }
        out
    }

    /// Re-embeds the polynomial in a larger arity (new variables unused).
    pub fn with_arity(&self, arity: usize) -> Result<Self> {
        if arity < self.arity {
            let used = self.terms.keys().fold(0, |acc, m| acc | m.0);
            if arity < 32 && used >> arity != 0 {
                return Err(Error::ArityMismatch {
                    expected: self.arity,
                    found: arity,
                });
            }
        }
        Ok(MultilinearPoly {
            arity,
            terms: self.terms.clone(),
        })
    }

    /// Largest absolute coefficient value; used for size bookkeeping only.
    pub fn max_abs_coefficient(&self) -> Rational {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: other.arity,
            });
        }
        Ok(())
    }
}

impl fmt::Display for MultilinearPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().map(|(m, c)| {
            let vars: Vec<String> = (0..32)
                .filter(|i| m.0 >> i & 1 == 1)
                .map(|i| format!("x{}", i + 1))
                .collect();
            (c.clone(), vars)
        });
        super::text::write_terms(f, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn table(values: &[i64]) -> Vec<Rational> {
        values.iter().map(|&v| r(v)).collect()
    }

    #[test]
    fn interpolate_and_parity() {
        let and2 = MultilinearPoly::interpolate(2, &table(&[0, 0, 0, 1])).unwrap();
        assert_eq!(and2.to_string(), "x1 x2");
        let par2 = MultilinearPoly::interpolate(2, &table(&[0, 1, 1, 0])).unwrap();
        assert_eq!(par2.to_string(), "x1 + x2 - 2 x1 x2");
        let one = MultilinearPoly::interpolate(2, &table(&[1, 1, 1, 1])).unwrap();
        assert_eq!(one, MultilinearPoly::one(2));
    }

    #[test]
    fn interpolate_wrong_length() {
        assert_eq!(
            MultilinearPoly::interpolate(2, &table(&[0, 1, 1])),
            Err(Error::ArityMismatch {
                expected: 4,
                found: 3
            })
        );
    }

    #[test]
    fn evaluate_examples() {
        let p: MultilinearPoly = "x1 x2".parse().unwrap();
        assert_eq!(p.evaluate(&[true, true]).unwrap(), r(1));
        let par: MultilinearPoly = "x1 + x2 - 2 x1 x2".parse().unwrap();
        assert_eq!(par.evaluate(&[true, true]).unwrap(), r(0));
        let q: MultilinearPoly = "2 - x1 - x2".parse().unwrap();
        assert_eq!(q.evaluate(&[false, true]).unwrap(), r(1));
        assert!(q.evaluate(&[true]).is_err());
    }

    #[test]
    fn restrict_examples() {
        let p: MultilinearPoly = "x1 x2".parse().unwrap();
        let a1 = Assignment::new(2, &[(0, true)]).unwrap();
        assert_eq!(p.restrict(&a1).unwrap().to_string(), "x1");
        let a0 = Assignment::new(2, &[(0, false)]).unwrap();
        assert!(p.restrict(&a0).unwrap().is_zero());
        let q: MultilinearPoly = "2 - x1 - x2".parse().unwrap();
        let a = Assignment::new(2, &[(1, true)]).unwrap();
        assert_eq!(q.restrict(&a).unwrap().to_string(), "1 - x1");
        let bad = Assignment {
            assigned: 0b100,
            values: 0,
        };
        assert!(q.restrict(&bad).is_err());
    }

    #[test]
    fn degree_and_maxonomials() {
        let p: MultilinearPoly = "x1 x2".parse().unwrap();
        assert_eq!(p.degree(), 2);
        assert_eq!(p.maxonomials().unwrap(), vec![0b11]);
        assert_eq!(MultilinearPoly::zero(3).degree(), 0);
        assert_eq!(MultilinearPoly::zero(3).maxonomials(), Err(Error::ZeroPolynomial));
        let q: MultilinearPoly = "x1 + x2".parse().unwrap();
        assert_eq!(q.maxonomials().unwrap(), vec![0b01, 0b10]);
        let s: MultilinearPoly = "1 + x1 + x1 x2 + x1 x3".parse().unwrap();
        assert_eq!(s.maxonomials().unwrap(), vec![0b011, 0b101]);
        let t: MultilinearPoly = "2 - x1 - x2".parse().unwrap();
        assert_eq!(t.degree(), 1);
    }

    #[test]
    fn multilinearize_examples() {
        let x1 = MultilinearPoly::var(1, 0).unwrap();
        assert_eq!(x1.multilinearize_product(&x1).unwrap(), x1);
        let not_x1: MultilinearPoly = "1 - x1".parse().unwrap();
        assert!(x1.multilinearize_product(&not_x1).unwrap().is_zero());
        let s: MultilinearPoly = "x1 + x2".parse().unwrap();
        // (x1 + x2)^2 takes values 0, 1, 1, 4 on the cube.
        let oracle = MultilinearPoly::interpolate(2, &table(&[0, 1, 1, 4])).unwrap();
        let prod = s.multilinearize_product(&s).unwrap();
        assert_eq!(prod, oracle);
        assert_eq!(prod.to_string(), "x1 + x2 + 2 x1 x2");
    }

    #[test]
    fn values_matches_pointwise_eval() {
        let p: MultilinearPoly = "3/2 - x1 + 2 x2 x3 - 5 x1 x2 x3".parse().unwrap();
        let v = p.values();
        for x in cube::points(3) {
            assert_eq!(v[x as usize], p.eval(x));
        }
    }
}
