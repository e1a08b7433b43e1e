use num_traits::{One, Zero};
use serde::Serialize;

use crate::cube;
use crate::error::{Error, Result};
use crate::poly::{MultilinearPoly, Rational};

/// Cofactors with `h1 g1 + h2 g2 = 1` on the cube, plus the degrees of the
/// multilinearized products.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NullstellensatzCertificate {
    #[serde(serialize_with = "super::serialize_poly")]
    pub h1: MultilinearPoly,
    #[serde(serialize_with = "super::serialize_poly")]
    pub h2: MultilinearPoly,
    pub deg_h1g1: usize,
    pub deg_h2g2: usize,
    pub deg_g1: usize,
    pub deg_g2: usize,
    /// `2 deg(g1)^2 deg(g2)^2`.
    pub degree_bound: usize,
    pub within_bound: bool,
    pub verified: bool,
}

/// Builds cofactors for `g1`, `g2` that have no common zero on the cube and
/// whose product vanishes on it.
///
/// `h1` interpolates `1/g1(x)` where `g1(x) ≠ 0` and `0` elsewhere; `h2`
/// likewise. Then `h1 g1` is the indicator of `{g1 ≠ 0}` and `h2 g2` that
/// of its complement.
pub fn hypercube_nullstellensatz(
    g1: &MultilinearPoly,
    g2: &MultilinearPoly,
) -> Result<NullstellensatzCertificate> {
    let n = g1.arity();
    if g2.arity() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            found: g2.arity(),
        });
    }
    let v1 = g1.values();
    let v2 = g2.values();
    for x in cube::points(n) {
        let (a, b) = (&v1[x as usize], &v2[x as usize]);
        let reason = if a.is_zero() && b.is_zero() {
            "g1 and g2 share a zero"
        } else if !a.is_zero() && !b.is_zero() {
            "g1 g2 is nonzero"
        } else {
            continue;
        };
        return Err(Error::HypothesisViolation {
            point: cube::format(x, n),
            reason: reason.into(),
        });
    }
    let inverse_or_zero = |v: &[Rational]| -> Vec<Rational> {
        v.iter()
            .map(|a| {
                if a.is_zero() {
                    Rational::zero()
                } else {
                    a.recip()
                }
            })
            .collect()
    };
    let h1 = MultilinearPoly::interpolate(n, &inverse_or_zero(&v1))?;
    let h2 = MultilinearPoly::interpolate(n, &inverse_or_zero(&v2))?;
    let p1 = h1.multilinearize_product(g1)?;
    let p2 = h2.multilinearize_product(g2)?;
    let sum = p1.add(&p2)?;
    let verified = sum == MultilinearPoly::one(n)
        && cube::points(n).all(|x| h1.eval(x) * g1.eval(x) + h2.eval(x) * g2.eval(x) == Rational::one());
    let (d1, d2) = (g1.degree(), g2.degree());
    let degree_bound = 2 * d1 * d1 * d2 * d2;
    let (deg_h1g1, deg_h2g2) = (p1.degree(), p2.degree());
    Ok(NullstellensatzCertificate {
        h1,
        h2,
        deg_h1g1,
        deg_h2g2,
        deg_g1: d1,
        deg_g2: d2,
        degree_bound,
        within_bound: deg_h1g1.max(deg_h2g2) <= degree_bound,
        verified,
    })
}
