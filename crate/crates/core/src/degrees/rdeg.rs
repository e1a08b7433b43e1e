use num_traits::Zero;
use serde::Serialize;

use super::ndeg::{ndeg, NdegWitness};
use crate::boolfn::BooleanFunction;
use crate::error::Result;
use crate::poly::{MultilinearPoly, Rational};

/// `f = p / q` on the cube with `q` nowhere zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RationalRepresentation {
    #[serde(serialize_with = "super::serialize_poly")]
    pub numerator: MultilinearPoly,
    #[serde(serialize_with = "super::serialize_poly")]
    pub denominator: MultilinearPoly,
}

impl RationalRepresentation {
    pub fn degree(&self) -> usize {
        self.numerator.degree().max(self.denominator.degree())
    }

    pub fn is_valid_for(&self, f: &BooleanFunction) -> bool {
        if self.numerator.arity() != f.arity() || self.denominator.arity() != f.arity() {
            return false;
        }
        let p = self.numerator.values();
        let q = self.denominator.values();
        p.iter().zip(&q).zip(f.table()).all(|((p, q), &b)| {
            !q.is_zero() && (p / q) == Rational::from_integer((b as i64).into())
        })
    }

    /// `q - p`, a nondeterministic representation of `¬f` whenever this
    /// represents `f`.
    pub fn complement_numerator(&self) -> Result<MultilinearPoly> {
        self.denominator.sub(&self.numerator)
    }
}

/// The unique multilinear representation and its degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeResult {
    pub degree: usize,
    #[serde(serialize_with = "super::serialize_poly")]
    pub polynomial: MultilinearPoly,
}

pub fn deg(f: &BooleanFunction) -> DegreeResult {
    let polynomial = f.multilinear();
    DegreeResult {
        degree: polynomial.degree(),
        polynomial,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RdegResult {
    pub degree: usize,
    pub representation: RationalRepresentation,
    pub ndeg: NdegWitness,
    pub ndeg_neg: NdegWitness,
}

/// `rdeg(f) = max(ndeg(f), ndeg(¬f))` with representation `p / (p + q)`,
/// where `p`, `q` are minimum-degree nondeterministic representations of
/// `f` and `¬f`. Constants get `f / 1`.
pub fn rdeg(f: &BooleanFunction) -> RdegResult {
    rdeg_from_witnesses(f, ndeg(f), ndeg(&f.negate()))
}

/// As [`rdeg`], with the two witnesses supplied (e.g. from a cache).
pub fn rdeg_from_witnesses(f: &BooleanFunction, p: NdegWitness, q: NdegWitness) -> RdegResult {
    let n = f.arity();
    let representation = match f.constant_value() {
        Some(b) => RationalRepresentation {
            numerator: if b {
                MultilinearPoly::one(n)
            } else {
                MultilinearPoly::zero(n)
            },
            denominator: MultilinearPoly::one(n),
        },
        None => RationalRepresentation {
            numerator: p.polynomial.clone(),
            denominator: p.polynomial.add(&q.polynomial).expect("same arity"),
        },
    };
    RdegResult {
        degree: p.degree.max(q.degree),
        representation,
        ndeg: p,
        ndeg_neg: q,
    }
}
