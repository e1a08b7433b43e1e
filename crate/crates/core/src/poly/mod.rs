//! Exact-rational multilinear and univariate polynomials.

mod multilinear;
pub mod text;
mod univariate;

pub use multilinear::MultilinearPoly;
pub use univariate::UnivariatePoly;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `2^-k` as an exact rational.
pub fn pow2_neg(k: usize) -> Rational {
    Rational::new(BigInt::from(1), BigInt::from(1) << k)
}

/// A variable subset `S ⊆ [n]` ordered by size, then by mask value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial(pub u32);

impl Monomial {
    pub fn size(self) -> usize {
        self.0.count_ones() as usize
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.0.count_ones(), self.0).cmp(&(other.0.count_ones(), other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials over `n` variables of size at most `d`, in graded order.
pub fn monomials_up_to(n: usize, d: usize) -> Vec<u32> {
    let mut v: Vec<u32> = (0..(1u32 << n))
        .filter(|m| m.count_ones() as usize <= d)
        .collect();
    v.sort_by_key(|&m| Monomial(m));
    v
}
