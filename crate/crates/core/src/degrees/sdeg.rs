use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::algebra::{LinearProgram, Relation};
use crate::boolfn::BooleanFunction;
use crate::cube;
use crate::poly::{monomials_up_to, MultilinearPoly, Rational};

/// A polynomial that never vanishes on the cube and is negative exactly on
/// `f⁻¹(1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignWitness {
    pub degree: usize,
    #[serde(serialize_with = "super::serialize_poly")]
    pub polynomial: MultilinearPoly,
}

impl SignWitness {
    pub fn is_valid_for(&self, f: &BooleanFunction) -> bool {
        is_sign_rep(&self.polynomial, f) && self.polynomial.degree() == self.degree
    }
}

pub fn is_sign_rep(p: &MultilinearPoly, f: &BooleanFunction) -> bool {
    p.arity() == f.arity()
        && p
            .values()
            .iter()
            .zip(f.table())
            .all(|(v, &b)| !v.is_zero() && v.is_negative() == b)
}

/// The margin system for degree `d`: unknowns are the coefficients of the
/// monomials of size ≤ `d`; `p(x) ≥ 1` on `f⁻¹(0)` and `p(x) ≤ -1` on
/// `f⁻¹(1)`. Sign representations are closed under positive scaling, so
/// this is feasible iff one of degree ≤ `d` exists.
pub fn sign_lp(f: &BooleanFunction, d: usize) -> (LinearProgram, Vec<u32>) {
    let monomials = monomials_up_to(f.arity(), d);
    let mut lp = LinearProgram::new(monomials.len());
    for x in cube::points(f.arity()) {
        let row = monomials
            .iter()
            .map(|&m| if m & !x == 0 { Rational::one() } else { Rational::zero() })
            .collect();
        let (rel, rhs) = if f.value(x) {
            (Relation::Le, -Rational::one())
        } else {
            (Relation::Ge, Rational::one())
        };
        lp.add(row, rel, rhs).expect("row width matches");
    }
    (lp, monomials)
}

/// Sign representation of degree exactly `d`, if one exists.
pub fn sign_rep_at(f: &BooleanFunction, d: usize) -> Option<MultilinearPoly> {
    let (lp, monomials) = sign_lp(f, d);
    lp.feasible().witness().map(|w| {
        MultilinearPoly::from_terms(f.arity(), monomials.iter().copied().zip(w.iter().cloned()))
            .expect("monomials fit the arity")
    })
}

/// Minimum-degree sign representation, found by trying `d = 0, 1, …`.
/// Constants get degree 0 with witness `1` (constant 0) or `-1` (constant 1).
pub fn sdeg(f: &BooleanFunction) -> SignWitness {
    if let Some(b) = f.constant_value() {
        let c = if b { -Rational::one() } else { Rational::one() };
        return SignWitness {
            degree: 0,
            polynomial: MultilinearPoly::constant(f.arity(), c),
        };
    }
    for d in 0..=f.arity() {
        if let Some(polynomial) = sign_rep_at(f, d) {
            debug_assert!(is_sign_rep(&polynomial, f));
            return SignWitness {
                degree: polynomial.degree(),
                polynomial,
            };
        }
    }
    unreachable!("1 - 2f is a sign representation of degree ≤ n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfn::{Family, FamilyParams};

    fn fam(f: Family, n: usize) -> BooleanFunction {
        f.build(FamilyParams::n(n)).unwrap().into_total().unwrap()
    }

    #[test]
    fn majority_is_linear() {
        for n in [1, 3, 5] {
            let f = fam(Family::Majority, n);
            let w = sdeg(&f);
            assert_eq!(w.degree, 1, "n={n}");
            assert!(w.is_valid_for(&f));
        }
    }

    #[test]
    fn maj3_degree_one_system() {
        let f = fam(Family::Majority, 3);
        let p = sign_rep_at(&f, 1).unwrap();
        assert!(is_sign_rep(&p, &f));
        let reference: MultilinearPoly = "3/2 - x1 - x2 - x3".parse().unwrap();
        assert!(is_sign_rep(&reference, &f));
    }

    #[test]
    fn parity_is_full_degree() {
        for n in 1..=4 {
            let f = fam(Family::Parity, n);
            assert_eq!(sdeg(&f).degree, n);
        }
    }

    #[test]
    fn equator4_is_two() {
        let f = fam(Family::Equator, 4);
        assert!(sign_rep_at(&f, 1).is_none());
        let w = sdeg(&f);
        assert_eq!(w.degree, 2);
        assert!(w.is_valid_for(&f));
    }

    #[test]
    fn constants() {
        let w = sdeg(&fam(Family::One, 2));
        assert_eq!(w.degree, 0);
        assert!(w.is_valid_for(&fam(Family::One, 2)));
        assert!(sdeg(&fam(Family::Zero, 2)).is_valid_for(&fam(Family::Zero, 2)));
    }
}
