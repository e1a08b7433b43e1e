use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::evaluation_matrix;
use crate::boolfn::BooleanFunction;
use crate::cube::{self, Point};
use crate::error::{Error, Result};
use crate::poly::{monomials_up_to, MultilinearPoly, Rational};

/// A polynomial that is nonzero exactly on `f⁻¹(1)`, of minimum degree when
/// produced by [`ndeg`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NdegWitness {
    pub degree: usize,
    #[serde(serialize_with = "super::serialize_poly")]
    pub polynomial: MultilinearPoly,
}

impl NdegWitness {
    /// Exhaustively checks that the polynomial is nonzero exactly on `f⁻¹(1)`.
    pub fn is_valid_for(&self, f: &BooleanFunction) -> bool {
        is_nondeterministic_rep(&self.polynomial, f) && self.polynomial.degree() == self.degree
    }
}

/// True iff `p(x) ≠ 0 ⇔ f(x) = 1` on the whole cube.
pub fn is_nondeterministic_rep(p: &MultilinearPoly, f: &BooleanFunction) -> bool {
    p.arity() == f.arity()
        && p
            .values()
            .iter()
            .zip(f.table())
            .all(|(v, &b)| v.is_zero() != b)
}

/// Basis of the multilinear polynomials of degree ≤ `d` vanishing on
/// `f⁻¹(0)`, if some basis element is nonzero at each point of `f⁻¹(1)`.
/// That is exactly when a nondeterministic representation of degree ≤ `d`
/// exists.
pub fn ndeg_basis_at(f: &BooleanFunction, d: usize) -> Option<Vec<MultilinearPoly>> {
    let n = f.arity();
    let monomials = monomials_up_to(n, d);
    let zeros = f.level(false);
    let basis: Vec<MultilinearPoly> = evaluation_matrix(&zeros, &monomials)
        .nullspace_basis()
        .into_iter()
        .map(|v| {
            MultilinearPoly::from_terms(n, monomials.iter().copied().zip(v))
                .expect("monomials fit the arity")
        })
        .collect();
    let values: Vec<Vec<Rational>> = basis.iter().map(|p| p.values()).collect();
    let covered = f
        .level(true)
        .into_iter()
        .all(|x| values.iter().any(|v| !v[x as usize].is_zero()));
    covered.then_some(basis)
}

/// Minimum-degree nondeterministic representation of `f`.
///
/// Tries `d = 0, 1, …` until [`ndeg_basis_at`] succeeds, then merges the
/// basis into one polynomial with [`avoidance_combine`] over `f⁻¹(1)`.
/// Constant 0 gives the zero polynomial, constant 1 the polynomial `1`.
pub fn ndeg(f: &BooleanFunction) -> NdegWitness {
    let n = f.arity();
    match f.constant_value() {
        Some(false) => {
            return NdegWitness {
                degree: 0,
                polynomial: MultilinearPoly::zero(n),
            }
        }
        Some(true) => {
            return NdegWitness {
                degree: 0,
                polynomial: MultilinearPoly::one(n),
            }
        }
        None => {}
    }
    let ones = f.level(true);
    for d in 0..=n {
        if let Some(basis) = ndeg_basis_at(f, d) {
            let polynomial =
                avoidance_combine(&basis, &ones).expect("basis covers every point of f⁻¹(1)");
            debug_assert!(is_nondeterministic_rep(&polynomial, f));
            return NdegWitness {
                degree: polynomial.degree(),
                polynomial,
            };
        }
    }
    unreachable!("the indicator of f⁻¹(1) has degree ≤ n")
}

/// Positive weights `c_1 = 1`, `c_i = (1 + Σ_{j<i} c_j B_j) / b_i`, where over
/// the domain `b_i` is the least nonzero `|a_i|` and `B_i` is `max |a_i| + 1`
/// (`b_i = 1, B_i = 2` when `a_i` vanishes on the whole domain).
pub fn avoidance_coefficients(polys: &[MultilinearPoly], domain: &[Point]) -> Vec<Rational> {
    let mut coefficients: Vec<Rational> = Vec::with_capacity(polys.len());
    let mut acc = Rational::zero();
    for (i, p) in polys.iter().enumerate() {
        let abs: Vec<Rational> = domain.iter().map(|&x| p.eval(x).abs()).collect();
        let small = abs.iter().filter(|v| !v.is_zero()).min().cloned();
        let (b, big) = match small {
            Some(b) => (b, abs.iter().max().cloned().unwrap() + Rational::one()),
            None => (Rational::one(), Rational::from_integer(2.into())),
        };
        let c = if i == 0 {
            Rational::one()
        } else {
            (Rational::one() + &acc) / b
        };
        acc += &c * big;
        coefficients.push(c);
    }
    coefficients
}

/// Combines polynomials that never vanish simultaneously on `domain` into a
/// single polynomial `Σ c_i a_i` that is nonzero at every domain point.
///
/// If `a_k` is the last polynomial nonzero at `x`, then
/// `|c_k a_k(x)| ≥ c_k b_k > Σ_{j<k} c_j B_j > |Σ_{j<k} c_j a_j(x)|`.
pub fn avoidance_combine(polys: &[MultilinearPoly], domain: &[Point]) -> Result<MultilinearPoly> {
    let first = polys
        .first()
        .ok_or_else(|| Error::InvalidArgument("no polynomials to combine".into()))?;
    let n = first.arity();
    if let Some(p) = polys.iter().find(|p| p.arity() != n) {
        return Err(Error::ArityMismatch {
            expected: n,
            found: p.arity(),
        });
    }
    if let Some(&x) = domain.iter().find(|&&x| n < 32 && x >> n != 0) {
        return Err(Error::InvalidArgument(format!("point {x:#b} outside the cube")));
    }
    if let Some(&x) = domain
        .iter()
        .find(|&&x| polys.iter().all(|p| p.eval(x).is_zero()))
    {
        return Err(Error::AvoidancePrecondition(cube::format(x, n)));
    }
    let coefficients = avoidance_coefficients(polys, domain);
    let mut out = MultilinearPoly::zero(n);
    for (c, p) in coefficients.iter().zip(polys) {
        out = out.add(&p.scale(c))?;
    }
    assert!(
        domain.iter().all(|&x| !out.eval(x).is_zero()),
        "avoidance combination vanished on the domain"
    );
    Ok(out)
}
